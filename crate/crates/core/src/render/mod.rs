//! Scene to pixels.
//!
//! A frame is built in three steps: layout, one [`ComponentDraw`] of vector
//! primitives per scene component, then rasterization. Each component is
//! rasterized into its own [`Tile`] so unchanged components can be reused
//! across frames, either through a content-keyed [`TileCache`] or by
//! carrying tiles forward under a [`ChangeRecord`].

mod build;
mod drawlist;
mod font;
mod font_data;
mod raster;
mod tiles;

use std::collections::HashMap;
use std::sync::Arc;

pub use build::{ramp_color, AXIS_COLOR, CIRCLE_SEGMENTS, GRID_COLOR};
pub use drawlist::{item_bounds, Align, ComponentDraw, DrawList, Item};
pub use font::{text_pixels, ADVANCE, SUPERSCRIPT_RAISE};
pub use raster::{source_alpha, Canvas, Painter, Raster};
pub use tiles::{composite, paint_bounds, rasterize_component, rasterize_drawlist, CacheStats, Tile, TileCache};

use crate::layout::{layout, GeometryMap, LayoutError};
use crate::scene::{ChangeRecord, Color, ComponentId, Scene};

pub const BACKGROUND: Color = Color::WHITE;

/// Statistics of one `render_scene` call.
pub type RenderStats = CacheStats;

/// Tiles of the last frame, by component.
pub type TileMap = HashMap<ComponentId, Arc<Tile>>;

/// Vector primitives for a laid-out scene.
pub fn drawlist_for(scene: &Scene, geo: &GeometryMap) -> DrawList {
    let mut components = Vec::new();
    scene.walk(|node| {
        let g = geo.node(&node.id).expect("layout covers every node");
        components.extend(build::node_draws(node, g));
    });
    DrawList {
        width: geo.width,
        height: geo.height,
        background: BACKGROUND,
        components,
    }
}

/// Vector primitives for `scene` on a `width` x `height` canvas.
pub fn emit_drawlist(scene: &Scene, width: u32, height: u32) -> Result<DrawList, LayoutError> {
    let geo = layout(scene, width, height)?;
    Ok(drawlist_for(scene, &geo))
}

/// Renders a frame, consulting and filling `cache` when given.
pub fn render_scene(
    scene: &Scene,
    width: u32,
    height: u32,
    cache: Option<&TileCache>,
) -> Result<(Raster, RenderStats), LayoutError> {
    let dl = emit_drawlist(scene, width, height)?;
    let (tiles, stats) = tiles::tiles_for(&dl, cache);
    Ok((composite(width, height, dl.background, tiles.iter().map(|t| t.as_ref())), stats))
}

/// Renders a frame and returns its tiles for later reuse.
pub fn render_tiles(scene: &Scene, width: u32, height: u32) -> Result<(Raster, TileMap), LayoutError> {
    let dl = emit_drawlist(scene, width, height)?;
    let (tiles, _) = tiles::tiles_for(&dl, None);
    let raster = composite(width, height, dl.background, tiles.iter().map(|t| t.as_ref()));
    Ok((raster, tiles.into_iter().map(|t| (t.id.clone(), t)).collect()))
}

/// Renders `scene` reusing every tile of `previous` that `record` does not
/// invalidate, without looking at the new primitives of reused components.
/// Sound invalidation makes the result equal to a from-scratch render.
pub fn render_incremental(
    scene: &Scene,
    width: u32,
    height: u32,
    previous: &TileMap,
    record: &ChangeRecord,
) -> Result<(Raster, TileMap, Vec<ComponentId>), LayoutError> {
    let dl = emit_drawlist(scene, width, height)?;
    let mut redrawn = Vec::new();
    let mut tiles = Vec::with_capacity(dl.components.len());
    for c in &dl.components {
        let reuse = previous.get(&c.id).filter(|_| !record.invalidates(&c.id, scene));
        match reuse {
            Some(t) => tiles.push(t.clone()),
            None => {
                redrawn.push(c.id.clone());
                tiles.push(Arc::new(rasterize_component(c, width, height)));
            }
        }
    }
    let raster = composite(width, height, dl.background, tiles.iter().map(|t| t.as_ref()));
    Ok((raster, tiles.into_iter().map(|t| (t.id.clone(), t)).collect(), redrawn))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scene::{
        apply_change, AxisDef, AxisTransformDef, Graph, GridGraph, Layer, PlotNode, PropertyPath, Range, Series,
        Side, XyGraph,
    };
    use serde_json::json;

    fn scene() -> Scene {
        let mut n = PlotNode::new("p");
        n.transforms.push(AxisTransformDef::linear("x", 0.0, 10.0));
        n.transforms.push(AxisTransformDef::linear("y", 0.0, 10.0));
        for s in [Side::Bottom, Side::Left, Side::Top, Side::Right] {
            let t = if s.is_horizontal() { "x" } else { "y" };
            n.axes.push(AxisDef::new(s, t));
        }
        let mut l = Layer::new("l", "x", "y");
        l.graphs.push(Graph::Xy(XyGraph {
            x: Series::from(vec![0.0, 2.0, 4.0, 6.0, 8.0, 10.0]),
            y: Series::from(vec![1.0, 3.0, f64::NAN, 7.0, 4.0, 9.0]),
            style: Default::default(),
        }));
        n.layers.push(l);
        Scene::new(n)
    }

    #[test]
    fn second_render_hits_everything() {
        let s = scene();
        let cache = TileCache::default();
        let (a, st1) = render_scene(&s, 200, 160, Some(&cache)).unwrap();
        assert_eq!(st1.hits, 0);
        let (b, st2) = render_scene(&s, 200, 160, Some(&cache)).unwrap();
        assert_eq!((st2.hits, st2.misses), (st1.misses, 0));
        assert_eq!(a, b);
    }

    #[test]
    fn color_change_misses_one_layer() {
        let s = scene();
        let cache = TileCache::default();
        render_scene(&s, 200, 160, Some(&cache)).unwrap();
        let path = PropertyPath::parse("plots[0].layers[0].graphs[0].style.color").unwrap();
        let (s2, rec) = apply_change(&s, &path, json!("#ff0000")).unwrap();
        let (r, st) = render_scene(&s2, 200, 160, Some(&cache)).unwrap();
        let layer = ComponentId::Layer {
            node: "p".into(),
            layer: "l".into(),
        };
        assert_eq!(st.missed, vec![layer.clone()]);
        assert!(rec.invalidates(&layer, &s2));
        assert_eq!(r, render_scene(&s2, 200, 160, None).unwrap().0);
    }

    #[test]
    fn tiled_equals_monolithic() {
        let s = scene();
        let (r, _) = render_scene(&s, 200, 160, None).unwrap();
        let dl = emit_drawlist(&s, 200, 160).unwrap();
        assert_eq!(r, rasterize_drawlist(&dl));
    }

    #[test]
    fn nan_splits_polyline() {
        let dl = emit_drawlist(&scene(), 200, 160).unwrap();
        let layer = &dl.components[0];
        let paths = layer.items.iter().filter(|i| matches!(i, Item::Path { .. })).count();
        assert_eq!(paths, 2);
    }

    #[test]
    fn empty_plot_draws_a_frame() {
        let dl = emit_drawlist(&Scene::new(PlotNode::new("e")), 100, 80).unwrap();
        let prims: Vec<&Item> = dl.items().collect();
        assert_eq!(prims.len(), 4);
        let r = rasterize_drawlist(&dl);
        assert_eq!(r.pixel(50, 0), [0, 0, 0, 255]);
        assert_eq!(r.pixel(99, 40), [0, 0, 0, 255]);
        assert_eq!(r.pixel(50, 40), [255, 255, 255, 255]);
    }

    #[test]
    fn gray_grid_endpoints() {
        let mut n = PlotNode::new("g");
        n.transforms.push(AxisTransformDef::linear("x", 0.0, 2.0));
        n.transforms.push(AxisTransformDef::linear("y", 0.0, 2.0));
        let mut l = Layer::new("l", "x", "y");
        l.graphs.push(Graph::Grid(GridGraph {
            values: vec![Series::from(vec![0.0, 1.0]), Series::from(vec![1.0, 0.0])],
            x_extent: Range::new(0.0, 2.0),
            y_extent: Range::new(0.0, 2.0),
            ramp: Default::default(),
            norm: Default::default(),
        }));
        n.layers.push(l);
        let (r, _) = render_scene(&Scene::new(n), 100, 100, None).unwrap();
        // row 0 of the grid is at the bottom
        assert_eq!(r.pixel(25, 75), [0, 0, 0, 255]);
        assert_eq!(r.pixel(75, 75), [255, 255, 255, 255]);
        assert_eq!(r.pixel(25, 25), [255, 255, 255, 255]);
        assert_eq!(r.pixel(75, 25), [0, 0, 0, 255]);
    }

    #[test]
    fn incremental_reuse_matches_scratch() {
        let s = scene();
        let (_, tiles) = render_tiles(&s, 200, 160).unwrap();
        let path = PropertyPath::parse("plots[0].axes[0].axis_label").unwrap();
        let (s2, rec) = apply_change(&s, &path, json!("time")).unwrap();
        let (inc, _, redrawn) = render_incremental(&s2, 200, 160, &tiles, &rec).unwrap();
        assert_eq!(inc, render_scene(&s2, 200, 160, None).unwrap().0);
        assert!(!redrawn.is_empty());
    }
}
