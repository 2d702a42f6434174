//! The interactive engine.
//!
//! One dispatcher thread owns the authoritative scene and applies commands
//! in arrival order. Every published snapshot gets a fresh generation
//! number and a render task on a worker pool. Completed renders go to a
//! [`Presenter`], which only ever moves forward in generation.
//!
//! Any number of [`Engine`] handles may submit concurrently; each submit
//! blocks until the dispatcher has applied the command and replied.

mod interact;
mod present;

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::sync::Arc;
use std::thread;

use crossbeam_channel::{bounded, unbounded, Receiver, Sender};
use parking_lot::{Condvar, Mutex};
use serde_json::Value;

pub use interact::{
    click_to_data, range_writes, wheel_changes, zoom_rect_changes, ClickCoord, DeviceRect, RangeChange, ZoomStack,
};
pub use present::{Frame, FrameEvent, Presenter};

/// Channel end returned by [`Engine::subscribe`].
pub use crossbeam_channel::Receiver as EventReceiver;

use crate::axes::AxisError;
use crate::layout::{layout, GeometryMap, LayoutError, MIN_CANVAS};
use crate::render::{render_scene, TileCache};
use crate::scene::{property_tree, PropertyPath, Scene, SceneError, SceneSession, Snapshot};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{code}: {message}")]
pub struct EngineError {
    pub code: String,
    pub message: String,
}

impl EngineError {
    pub fn new(code: &str, message: impl Into<String>) -> Self {
        EngineError {
            code: code.to_string(),
            message: message.into(),
        }
    }

    pub fn from_axis(e: AxisError) -> Self {
        EngineError::new(e.code(), e.to_string())
    }

    fn closed() -> Self {
        EngineError::new("SESSION_CLOSED", "the engine session has shut down")
    }
}

impl From<SceneError> for EngineError {
    fn from(e: SceneError) -> Self {
        EngineError::new(e.code.as_str(), format!("{}: {}", e.path, e.message))
    }
}

impl From<LayoutError> for EngineError {
    fn from(e: LayoutError) -> Self {
        EngineError::new(e.code(), e.to_string())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Command {
    SetProperty { path: String, value: Value },
    /// Whole-array replacement of a numeric series.
    SetData { path: String, values: Vec<f64> },
    ZoomRect(DeviceRect),
    Wheel { x: f64, y: f64, notches: i32 },
    Click { x: f64, y: f64 },
    BeginBatch,
    EndBatch,
    ResetZoom,
    Resize { width: u32, height: u32 },
    GetTree,
    GetSnapshot,
    /// Replies once every earlier command has been applied.
    Sync,
}

impl Command {
    fn mutates(&self) -> bool {
        !matches!(self, Command::Click { .. } | Command::GetTree | Command::GetSnapshot | Command::Sync)
    }
}

#[derive(Debug, Clone)]
pub enum Reply {
    Ack,
    Coords(Vec<ClickCoord>),
    Tree(Value),
    Snapshot(Snapshot),
}

/// Counters for tests and diagnostics.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct EngineStats {
    /// Generations handed to the render pool.
    pub scheduled: u64,
    /// Renders skipped because a newer generation was already scheduled.
    pub superseded: u64,
    pub presented: u64,
    /// Completions dropped by the presenter as stale.
    pub discarded: u64,
    pub failed: u64,
}

#[derive(Debug, Clone)]
pub struct EngineOptions {
    pub workers: usize,
    pub cache_capacity: usize,
    /// Skip a render when a newer generation exists before it starts.
    pub skip_superseded: bool,
}

impl Default for EngineOptions {
    fn default() -> Self {
        EngineOptions {
            workers: thread::available_parallelism().map_or(2, |n| n.get()),
            cache_capacity: TileCache::DEFAULT_CAPACITY,
            skip_superseded: true,
        }
    }
}

struct Shared {
    presenter: Presenter,
    cache: TileCache,
    latest: AtomicU64,
    scheduled: AtomicU64,
    superseded: AtomicU64,
    failed: AtomicU64,
    in_flight: Mutex<u64>,
    idle: Condvar,
    closed: AtomicBool,
    order: Mutex<Vec<Command>>,
}

type Envelope = (Command, Sender<Result<Reply, EngineError>>);

/// Handle to a running engine session. Clones share the session.
#[derive(Clone)]
pub struct Engine {
    tx: Sender<Envelope>,
    shared: Arc<Shared>,
}

struct Dispatcher {
    session: SceneSession,
    width: u32,
    height: u32,
    zoom: ZoomStack,
    geometry: Option<(Snapshot, u32, u32, GeometryMap)>,
    shared: Arc<Shared>,
    pool: Arc<rayon::ThreadPool>,
    skip_superseded: bool,
}

impl Engine {
    /// Starts a session and schedules generation 1 for the initial scene.
    pub fn start(scene: Scene, width: u32, height: u32) -> Engine {
        Self::with_options(scene, width, height, EngineOptions::default())
    }

    pub fn with_options(scene: Scene, width: u32, height: u32, opts: EngineOptions) -> Engine {
        let shared = Arc::new(Shared {
            presenter: Presenter::new(),
            cache: TileCache::new(opts.cache_capacity),
            latest: AtomicU64::new(0),
            scheduled: AtomicU64::new(0),
            superseded: AtomicU64::new(0),
            failed: AtomicU64::new(0),
            in_flight: Mutex::new(0),
            idle: Condvar::new(),
            closed: AtomicBool::new(false),
            order: Mutex::new(Vec::new()),
        });
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(opts.workers.max(1))
            .thread_name(|i| format!("plotforge-render-{i}"))
            .build()
            .expect("render pool starts");
        let (tx, rx) = unbounded::<Envelope>();
        let mut d = Dispatcher {
            session: SceneSession::new(scene),
            width,
            height,
            zoom: ZoomStack::default(),
            geometry: None,
            shared: shared.clone(),
            pool: Arc::new(pool),
            skip_superseded: opts.skip_superseded,
        };
        d.schedule(d.session.published().clone());
        thread::Builder::new()
            .name("plotforge-dispatch".into())
            .spawn(move || d.run(rx))
            .expect("dispatcher starts");
        Engine { tx, shared }
    }

    /// Applies a command and waits for its reply.
    pub fn submit(&self, cmd: Command) -> Result<Reply, EngineError> {
        if self.shared.closed.load(Ordering::Acquire) {
            return Err(EngineError::closed());
        }
        let (rtx, rrx) = bounded(1);
        self.tx.send((cmd, rtx)).map_err(|_| EngineError::closed())?;
        rrx.recv().map_err(|_| EngineError::closed())?
    }

    pub fn set_property(&self, path: &str, value: Value) -> Result<(), EngineError> {
        self.submit(Command::SetProperty {
            path: path.to_string(),
            value,
        })
        .map(|_| ())
    }

    pub fn click(&self, x: f64, y: f64) -> Result<Vec<ClickCoord>, EngineError> {
        match self.submit(Command::Click { x, y })? {
            Reply::Coords(c) => Ok(c),
            other => unreachable!("click replies with coords, got {other:?}"),
        }
    }

    pub fn snapshot(&self) -> Result<Snapshot, EngineError> {
        match self.submit(Command::GetSnapshot)? {
            Reply::Snapshot(s) => Ok(s),
            other => unreachable!("snapshot query replies with a snapshot, got {other:?}"),
        }
    }

    pub fn tree(&self) -> Result<Value, EngineError> {
        match self.submit(Command::GetTree)? {
            Reply::Tree(t) => Ok(t),
            other => unreachable!("tree query replies with a tree, got {other:?}"),
        }
    }

    /// Waits until every command submitted so far is applied and every
    /// render it scheduled has completed.
    pub fn quiesce(&self) -> Result<(), EngineError> {
        self.submit(Command::Sync)?;
        let mut n = self.shared.in_flight.lock();
        while *n > 0 {
            self.shared.idle.wait(&mut n);
        }
        Ok(())
    }

    pub fn displayed(&self) -> Option<Frame> {
        self.shared.presenter.current()
    }

    /// Displayed generations in presentation order.
    pub fn presentation_history(&self) -> Vec<u64> {
        self.shared.presenter.history()
    }

    /// Receives every presentation from now on.
    pub fn subscribe(&self) -> Receiver<FrameEvent> {
        let (tx, rx) = unbounded();
        self.shared.presenter.subscribe(tx);
        rx
    }

    pub fn stats(&self) -> EngineStats {
        let p = &self.shared.presenter;
        EngineStats {
            scheduled: self.shared.scheduled.load(Ordering::Acquire),
            superseded: self.shared.superseded.load(Ordering::Acquire),
            presented: p.history().len() as u64,
            discarded: p.discarded(),
            failed: self.shared.failed.load(Ordering::Acquire),
        }
    }

    /// Successfully applied mutating commands, in dispatcher order.
    pub fn applied_order(&self) -> Vec<Command> {
        self.shared.order.lock().clone()
    }

    /// Stops the dispatcher; later submits fail with `SESSION_CLOSED`.
    pub fn shutdown(&self) {
        self.shared.closed.store(true, Ordering::Release);
    }
}

impl Dispatcher {
    fn run(&mut self, rx: Receiver<Envelope>) {
        while let Ok((cmd, reply)) = rx.recv() {
            if self.shared.closed.load(Ordering::Acquire) {
                let _ = reply.send(Err(EngineError::closed()));
                continue;
            }
            let record = cmd.mutates().then(|| cmd.clone());
            let res = self.apply(cmd);
            if let (Some(c), Ok(_)) = (record, &res) {
                self.shared.order.lock().push(c);
            }
            let _ = reply.send(res);
        }
    }

    fn geometry(&mut self) -> Result<&GeometryMap, EngineError> {
        let snap = self.session.working().clone();
        let fresh = matches!(&self.geometry, Some((s, w, h, _)) if Arc::ptr_eq(s, &snap) && *w == self.width && *h == self.height);
        if !fresh {
            let g = layout(&snap, self.width, self.height)?;
            self.geometry = Some((snap, self.width, self.height, g));
        }
        Ok(&self.geometry.as_ref().expect("just computed").3)
    }

    fn write(&mut self, changes: Vec<(PropertyPath, Value)>) -> Result<(), EngineError> {
        if let Some(p) = self.session.apply_many(changes)? {
            self.schedule(p.snapshot);
        }
        Ok(())
    }

    fn apply(&mut self, cmd: Command) -> Result<Reply, EngineError> {
        match cmd {
            Command::SetProperty { path, value } => {
                self.write(vec![(PropertyPath::parse(&path)?, value)])?;
            }
            Command::SetData { path, values } => {
                let arr = values
                    .into_iter()
                    .map(|v| if v.is_finite() { Value::from(v) } else { Value::Null })
                    .collect();
                self.write(vec![(PropertyPath::parse(&path)?, Value::Array(arr))])?;
            }
            Command::ZoomRect(r) => {
                let scene = self.session.working().clone();
                let changes = zoom_rect_changes(&scene, self.geometry()?, r)?;
                self.write(range_writes(&changes))?;
                self.zoom.push(changes);
            }
            Command::Wheel { x, y, notches } => {
                let scene = self.session.working().clone();
                let changes = wheel_changes(&scene, self.geometry()?, x, y, notches)?;
                if notches != 0 {
                    self.write(range_writes(&changes))?;
                    self.zoom.push(changes);
                }
            }
            Command::ResetZoom => {
                if self.zoom.depth() > 0 {
                    let writes = self.zoom.reset();
                    self.write(writes)?;
                }
            }
            Command::BeginBatch => self.session.begin_batch(),
            Command::EndBatch => {
                if let Some(p) = self.session.end_batch()? {
                    self.schedule(p.snapshot);
                }
            }
            Command::Resize { width, height } => {
                if width < MIN_CANVAS || height < MIN_CANVAS {
                    return Err(EngineError::new(
                        "CANVAS_TOO_SMALL",
                        format!("canvas {width}x{height} is below {MIN_CANVAS}x{MIN_CANVAS}"),
                    ));
                }
                self.width = width;
                self.height = height;
                if self.session.batch_depth() == 0 {
                    self.schedule(self.session.published().clone());
                }
            }
            Command::Click { x, y } => {
                let scene = self.session.working().clone();
                return Ok(Reply::Coords(click_to_data(&scene, self.geometry()?, x, y)));
            }
            Command::GetTree => return Ok(Reply::Tree(property_tree(self.session.working()))),
            Command::GetSnapshot => return Ok(Reply::Snapshot(self.session.working().clone())),
            Command::Sync => {}
        }
        Ok(Reply::Ack)
    }

    fn schedule(&mut self, snapshot: Snapshot) {
        let sh = self.shared.clone();
        let generation = sh.latest.fetch_add(1, Ordering::AcqRel) + 1;
        sh.scheduled.fetch_add(1, Ordering::AcqRel);
        *sh.in_flight.lock() += 1;
        let (w, h) = (self.width, self.height);
        let skip = self.skip_superseded;
        self.pool.spawn(move || {
            if skip && sh.latest.load(Ordering::Acquire) > generation {
                sh.superseded.fetch_add(1, Ordering::AcqRel);
            } else {
                match render_scene(&snapshot, w, h, Some(&sh.cache)) {
                    Ok((raster, _)) => {
                        sh.presenter.present(Frame {
                            generation,
                            raster: Arc::new(raster),
                        });
                    }
                    Err(e) => {
                        sh.failed.fetch_add(1, Ordering::AcqRel);
                        sh.presenter.fail(generation, e.code(), e.to_string());
                    }
                }
            }
            let mut n = sh.in_flight.lock();
            *n -= 1;
            if *n == 0 {
                sh.idle.notify_all();
            }
        });
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scene::{AxisDef, AxisTransformDef, Graph, Layer, PlotNode, Series, Side, XyGraph};
    use serde_json::json;

    fn scene() -> Scene {
        let mut n = PlotNode::new("p");
        n.transforms.push(AxisTransformDef::linear("x", 0.0, 100.0));
        n.transforms.push(AxisTransformDef::linear("y", 0.0, 10.0));
        n.axes.push(AxisDef::new(Side::Bottom, "x"));
        n.axes.push(AxisDef::new(Side::Left, "y"));
        let mut l = Layer::new("l", "x", "y");
        l.graphs.push(Graph::Xy(XyGraph {
            x: Series::from(vec![0.0, 50.0, 100.0]),
            y: Series::from(vec![1.0, 9.0, 4.0]),
            style: Default::default(),
        }));
        n.layers.push(l);
        Scene::new(n)
    }

    #[test]
    fn one_change_one_generation() {
        let e = Engine::start(scene(), 200, 150);
        e.set_property("plots[0].layers[0].graphs[0].style.color", json!("#ff0000"))
            .unwrap();
        e.quiesce().unwrap();
        assert_eq!(e.stats().scheduled, 2);
        assert_eq!(e.displayed().unwrap().generation, 2);
    }

    #[test]
    fn batch_schedules_once() {
        let e = Engine::start(scene(), 200, 150);
        e.submit(Command::BeginBatch).unwrap();
        for i in 0..10 {
            e.submit(Command::SetData {
                path: "plots[0].layers[0].graphs[0].y".into(),
                values: vec![i as f64, 2.0, 3.0],
            })
            .unwrap();
        }
        assert_eq!(e.stats().scheduled, 1);
        e.submit(Command::EndBatch).unwrap();
        e.quiesce().unwrap();
        assert_eq!(e.stats().scheduled, 2);
    }

    #[test]
    fn end_without_begin() {
        let e = Engine::start(scene(), 200, 150);
        assert_eq!(e.submit(Command::EndBatch).unwrap_err().code, "END_WITHOUT_BEGIN");
    }

    #[test]
    fn zoom_and_reset() {
        let e = Engine::start(scene(), 200, 150);
        let before = e.snapshot().unwrap();
        let g = layout(&before, 200, 150).unwrap();
        let c = g.nodes[0].content;
        let w = c.width() as f64;
        let rect = DeviceRect {
            x0: c.x0 as f64 + 0.2 * w,
            x1: c.x0 as f64 + 0.6 * w,
            y0: c.y0 as f64,
            y1: c.y1 as f64,
        };
        e.submit(Command::ZoomRect(rect)).unwrap();
        let zoomed = e.snapshot().unwrap();
        let r = zoomed.root().transforms[0].range;
        assert!((r.lo - 20.0).abs() < 1e-9 && (r.hi - 60.0).abs() < 1e-9, "{r:?}");
        e.submit(Command::ResetZoom).unwrap();
        assert_eq!(*e.snapshot().unwrap(), *before);
    }

    #[test]
    fn outside_rect_is_rejected() {
        let e = Engine::start(scene(), 200, 150);
        let err = e
            .submit(Command::ZoomRect(DeviceRect {
                x0: 0.0,
                y0: 148.0,
                x1: 2.0,
                y1: 150.0,
            }))
            .unwrap_err();
        assert_eq!(err.code, "RECT_OUTSIDE_PLOT");
    }

    #[test]
    fn closed_session() {
        let e = Engine::start(scene(), 200, 150);
        e.shutdown();
        assert_eq!(e.submit(Command::Sync).unwrap_err().code, "SESSION_CLOSED");
    }
}
