"""Regenerates crates/core/src/render/font_data.rs from DejaVu Sans Mono.

Glyphs are rasterized once at a handful of pixel sizes with hinted,
non-antialiased rendering, so text output never depends on a runtime font
stack and thin strokes survive at small sizes.
"""
import sys
from PIL import Image, ImageDraw, ImageFont

FONT = "/usr/share/fonts/truetype/dejavu/DejaVuSansMono.ttf"
SIZES = [10, 12, 14]
EXTRA = "°′″±−µ"
CHARS = [chr(c) for c in range(32, 127)] + list(EXTRA)


def cell(size):
    return round(0.6 * size), round(1.2 * size)


def glyph(font, ch, w, h):
    img = Image.new("L", (w * 3, h * 2), 0)
    d = ImageDraw.Draw(img)
    d.fontmode = "1"
    d.text((w, 0), ch, font=font, fill=255)
    rows = []
    for y in range(h):
        bits = 0
        for x in range(w):
            if img.getpixel((w + x, y)) >= 128:
                bits |= 1 << x
        rows.append(bits)
    return rows


def main(out):
    lines = [
        "// Generated by tools/gen_font.py from DejaVu Sans Mono; do not edit.",
        "",
    ]
    lines.append("pub(crate) const CHARS: &[char] = &[")
    for ch in CHARS:
        lines.append("    '\\u{%04x}'," % ord(ch))
    lines.append("];")
    lines.append("")
    lines.append("pub(crate) struct Face {")
    lines.append("    pub size: u32,")
    lines.append("    pub width: u32,")
    lines.append("    pub height: u32,")
    lines.append("    pub rows: &'static [u16],")
    lines.append("}")
    lines.append("")
    lines.append("pub(crate) const FACES: &[Face] = &[")
    for size in SIZES:
        font = ImageFont.truetype(FONT, size)
        w, h = cell(size)
        data = []
        for ch in CHARS:
            data.extend(glyph(font, ch, w, h))
        lines.append("    Face {")
        lines.append(f"        size: {size},")
        lines.append(f"        width: {w},")
        lines.append(f"        height: {h},")
        lines.append("        rows: &[")
        for i in range(0, len(data), h):
            lines.append("            " + ", ".join(f"0x{v:03x}" for v in data[i:i + h]) + ",")
        lines.append("        ],")
        lines.append("    },")
    lines.append("];")
    with open(out, "w") as f:
        f.write("\n".join(lines) + "\n")


if __name__ == "__main__":
    main(sys.argv[1])
