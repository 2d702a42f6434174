use std::sync::Arc;

use crossbeam_channel::Sender;
use parking_lot::Mutex;

use crate::render::Raster;

/// A rendered frame tagged with the generation that produced it.
#[derive(Debug, Clone, PartialEq)]
pub struct Frame {
    pub generation: u64,
    pub raster: Arc<Raster>,
}

/// What observers see, in presentation order.
#[derive(Debug, Clone, PartialEq)]
pub enum FrameEvent {
    Presented(Frame),
    Failed { generation: u64, code: String, message: String },
}

#[derive(Default)]
struct State {
    current: Option<Frame>,
    history: Vec<u64>,
    discarded: u64,
    listeners: Vec<Sender<FrameEvent>>,
}

/// Keeps the newest completed frame. A completion older than the
/// displayed one is dropped.
#[derive(Default)]
pub struct Presenter {
    state: Mutex<State>,
}

impl Presenter {
    pub fn new() -> Self {
        Self::default()
    }

    /// Shows `frame` unless a newer generation is already displayed.
    pub fn present(&self, frame: Frame) -> bool {
        let mut s = self.state.lock();
        if s.current.as_ref().is_some_and(|c| c.generation >= frame.generation) {
            s.discarded += 1;
            return false;
        }
        s.history.push(frame.generation);
        let ev = FrameEvent::Presented(frame.clone());
        s.listeners.retain(|l| l.send(ev.clone()).is_ok());
        s.current = Some(frame);
        true
    }

    pub fn fail(&self, generation: u64, code: &str, message: String) {
        let mut s = self.state.lock();
        let ev = FrameEvent::Failed {
            generation,
            code: code.to_string(),
            message,
        };
        s.listeners.retain(|l| l.send(ev.clone()).is_ok());
    }

    pub fn current(&self) -> Option<Frame> {
        self.state.lock().current.clone()
    }

    pub fn displayed_generation(&self) -> u64 {
        self.state.lock().current.as_ref().map_or(0, |f| f.generation)
    }

    /// Every generation displayed so far, in order.
    pub fn history(&self) -> Vec<u64> {
        self.state.lock().history.clone()
    }

    pub fn discarded(&self) -> u64 {
        self.state.lock().discarded
    }

    pub fn subscribe(&self, tx: Sender<FrameEvent>) {
        self.state.lock().listeners.push(tx);
    }
}
