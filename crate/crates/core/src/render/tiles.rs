use std::collections::HashMap;
use std::sync::Arc;

use parking_lot::Mutex;
use rayon::prelude::*;

use super::drawlist::{item_bounds, ComponentDraw, DrawList, Item};
use super::raster::{Canvas, Painter, Raster};
use crate::layout::Rect;
use crate::scene::ComponentId;

/// Rasterized output of one component, covering only the pixels it can
/// touch.
#[derive(Debug, Clone, PartialEq)]
pub struct Tile {
    pub id: ComponentId,
    pub content_hash: u64,
    pub canvas: Option<Canvas>,
}

impl Tile {
    pub fn rect(&self) -> Option<Rect> {
        self.canvas.as_ref().map(|c| c.rect)
    }
}

/// Device rectangle that bounds everything `items` can paint on a canvas
/// `full`, honoring the clip stack.
pub fn paint_bounds(items: &[Item], full: Rect) -> Option<Rect> {
    let mut clips = vec![full];
    let mut acc: Option<Rect> = None;
    for it in items {
        match it {
            Item::PushClip(r) => {
                let top = *clips.last().expect("base clip");
                clips.push(top.intersect(r));
            }
            Item::PopClip => {
                if clips.len() > 1 {
                    clips.pop();
                }
            }
            _ => {
                let Some((x0, y0, x1, y1)) = item_bounds(it) else { continue };
                if ![x0, y0, x1, y1].iter().all(|v| v.is_finite()) {
                    continue;
                }
                let clip = *clips.last().expect("base clip");
                let lim = |v: f64| v.clamp(i32::MIN as f64 / 2.0, i32::MAX as f64 / 2.0) as i32;
                let r = Rect::new(lim(x0.floor()), lim(y0.floor()), lim(x1.ceil()), lim(y1.ceil())).intersect(&clip);
                if r.is_empty() {
                    continue;
                }
                acc = Some(match acc {
                    None => r,
                    Some(a) => Rect::new(a.x0.min(r.x0), a.y0.min(r.y0), a.x1.max(r.x1), a.y1.max(r.y1)),
                });
            }
        }
    }
    acc
}

/// Rasterizes one component onto a transparent tile.
pub fn rasterize_component(c: &ComponentDraw, width: u32, height: u32) -> Tile {
    let full = Rect::new(0, 0, width as i32, height as i32);
    let canvas = paint_bounds(&c.items, full).map(|r| {
        let mut canvas = Canvas::transparent(r);
        Painter::new(&mut canvas).draw_all(&c.items);
        canvas
    });
    Tile {
        id: c.id.clone(),
        content_hash: c.content_hash(width, height),
        canvas,
    }
}

/// Source-over composition of tiles, in order, onto the list background.
pub fn composite<'a>(width: u32, height: u32, dl_background: crate::scene::Color, tiles: impl IntoIterator<Item = &'a Tile>) -> Raster {
    let mut base = Canvas::opaque(Rect::new(0, 0, width as i32, height as i32), dl_background);
    for t in tiles {
        if let Some(c) = &t.canvas {
            c.composite_onto(&mut base);
        }
    }
    base.to_raster()
}

/// Paints the whole draw list directly onto one canvas. This is the
/// monolithic reference the tiled path must reproduce.
pub fn rasterize_drawlist(dl: &DrawList) -> Raster {
    let mut base = Canvas::opaque(Rect::new(0, 0, dl.width as i32, dl.height as i32), dl.background);
    Painter::new(&mut base).draw_all(dl.items());
    base.to_raster()
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CacheStats {
    pub hits: usize,
    pub misses: usize,
    /// Components rasterized this frame, in paint order.
    pub missed: Vec<ComponentId>,
}

type Key = (ComponentId, u64);

struct Slot {
    tile: Arc<Tile>,
    used: u64,
}

struct Inner {
    map: HashMap<Key, Slot>,
    clock: u64,
}

/// Thread-safe LRU cache of component tiles keyed by component id and
/// content hash.
pub struct TileCache {
    capacity: usize,
    inner: Mutex<Inner>,
}

impl TileCache {
    pub const DEFAULT_CAPACITY: usize = 512;

    pub fn new(capacity: usize) -> Self {
        TileCache {
            capacity: capacity.max(1),
            inner: Mutex::new(Inner {
                map: HashMap::new(),
                clock: 0,
            }),
        }
    }

    pub fn len(&self) -> usize {
        self.inner.lock().map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn clear(&self) {
        self.inner.lock().map.clear();
    }

    pub fn get(&self, id: &ComponentId, hash: u64) -> Option<Arc<Tile>> {
        let mut g = self.inner.lock();
        g.clock += 1;
        let now = g.clock;
        let slot = g.map.get_mut(&(id.clone(), hash))?;
        slot.used = now;
        Some(slot.tile.clone())
    }

    pub fn insert(&self, tile: Arc<Tile>) {
        let mut g = self.inner.lock();
        g.clock += 1;
        let used = g.clock;
        g.map.insert((tile.id.clone(), tile.content_hash), Slot { tile, used });
        while g.map.len() > self.capacity {
            let oldest = g
                .map
                .iter()
                .min_by_key(|(_, s)| s.used)
                .map(|(k, _)| k.clone())
                .expect("nonempty");
            g.map.remove(&oldest);
        }
    }
}

impl Default for TileCache {
    fn default() -> Self {
        TileCache::new(Self::DEFAULT_CAPACITY)
    }
}

/// Resolves every component of `dl` to a tile, reusing cached tiles and
/// rasterizing the rest in parallel.
pub fn tiles_for(dl: &DrawList, cache: Option<&TileCache>) -> (Vec<Arc<Tile>>, CacheStats) {
    let hashes: Vec<u64> = dl.components.iter().map(|c| c.content_hash(dl.width, dl.height)).collect();
    let found: Vec<Option<Arc<Tile>>> = dl
        .components
        .iter()
        .zip(&hashes)
        .map(|(c, h)| cache.and_then(|cache| cache.get(&c.id, *h)))
        .collect();
    let fresh: Vec<(usize, Arc<Tile>)> = found
        .iter()
        .enumerate()
        .filter(|(_, f)| f.is_none())
        .map(|(i, _)| i)
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|i| (i, Arc::new(rasterize_component(&dl.components[i], dl.width, dl.height))))
        .collect();
    let mut stats = CacheStats::default();
    let mut tiles = found;
    for (i, t) in fresh {
        if let Some(cache) = cache {
            cache.insert(t.clone());
        }
        stats.missed.push(t.id.clone());
        tiles[i] = Some(t);
    }
    stats.misses = stats.missed.len();
    stats.hits = tiles.len() - stats.misses;
    (tiles.into_iter().map(|t| t.expect("every tile resolved")).collect(), stats)
}
