use std::io::{self, Write};

use flate2::write::ZlibEncoder;
use flate2::Compression;

use crate::render::Raster;

const SIGNATURE: [u8; 8] = [0x89, b'P', b'N', b'G', 0x0d, 0x0a, 0x1a, 0x0a];
/// Fixed so identical rasters always encode to identical bytes.
const LEVEL: u32 = 6;

fn chunk(out: &mut Vec<u8>, kind: &[u8; 4], data: &[u8]) {
    out.extend_from_slice(&(data.len() as u32).to_be_bytes());
    out.extend_from_slice(kind);
    out.extend_from_slice(data);
    let mut h = crc32fast::Hasher::new();
    h.update(kind);
    h.update(data);
    out.extend_from_slice(&h.finalize().to_be_bytes());
}

/// Encodes an 8-bit RGBA, non-interlaced PNG. Every scanline uses the
/// Sub filter.
pub fn encode_png(r: &Raster) -> Vec<u8> {
    let stride = r.width as usize * 4;
    let mut filtered = Vec::with_capacity((stride + 1) * r.height as usize);
    for row in r.pixels.chunks_exact(stride.max(1)).take(r.height as usize) {
        filtered.push(1);
        for i in 0..stride {
            let left = if i >= 4 { row[i - 4] } else { 0 };
            filtered.push(row[i].wrapping_sub(left));
        }
    }
    let mut z = ZlibEncoder::new(Vec::new(), Compression::new(LEVEL));
    z.write_all(&filtered).expect("in-memory write");
    let idat = z.finish().expect("in-memory write");

    let mut ihdr = Vec::with_capacity(13);
    ihdr.extend_from_slice(&r.width.to_be_bytes());
    ihdr.extend_from_slice(&r.height.to_be_bytes());
    ihdr.extend_from_slice(&[8, 6, 0, 0, 0]);

    let mut out = SIGNATURE.to_vec();
    chunk(&mut out, b"IHDR", &ihdr);
    chunk(&mut out, b"IDAT", &idat);
    chunk(&mut out, b"IEND", &[]);
    out
}

pub fn export_png(r: &Raster, dest: &mut impl Write) -> io::Result<()> {
    dest.write_all(&encode_png(r))?;
    dest.flush()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn starts_with_signature_and_ihdr() {
        let r = Raster {
            width: 3,
            height: 2,
            pixels: vec![7; 24],
        };
        let b = encode_png(&r);
        assert_eq!(&b[..8], &SIGNATURE);
        assert_eq!(&b[12..16], b"IHDR");
        assert_eq!(&b[16..20], &3u32.to_be_bytes());
        assert_eq!(&b[b.len() - 8..b.len() - 4], b"IEND");
    }
}
