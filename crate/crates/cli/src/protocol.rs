//! Wire messages of the viewer protocol.
//!
//! Control messages are JSON in WebSocket text messages. Frames travel as
//! binary messages: an 8-byte big-endian generation followed by a PNG.
//! docs/protocol.md has the full layout.

use plotforge::engine::{ClickCoord, Command, DeviceRect};
use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Viewport {
    pub width: u32,
    pub height: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Phase {
    Begin,
    End,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum ClientMsg {
    Hello { viewport: Viewport },
    Resize { width: u32, height: u32 },
    ZoomRect { x0: f64, y0: f64, x1: f64, y1: f64 },
    Wheel { x: f64, y: f64, notches: i32 },
    Click { x: f64, y: f64 },
    SetProperty { path: String, value: Value },
    Batch { phase: Phase },
    ResetZoom,
    GetTree,
}

/// A client message with the id its reply echoes.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Request {
    pub id: u64,
    #[serde(flatten)]
    pub msg: ClientMsg,
}

impl ClientMsg {
    /// The engine command this message maps to; `None` for `hello`.
    pub fn command(&self) -> Option<Command> {
        Some(match self.clone() {
            ClientMsg::Hello { .. } => return None,
            ClientMsg::Resize { width, height } => Command::Resize { width, height },
            ClientMsg::ZoomRect { x0, y0, x1, y1 } => Command::ZoomRect(DeviceRect { x0, y0, x1, y1 }),
            ClientMsg::Wheel { x, y, notches } => Command::Wheel { x, y, notches },
            ClientMsg::Click { x, y } => Command::Click { x, y },
            ClientMsg::SetProperty { path, value } => Command::SetProperty { path, value },
            ClientMsg::Batch { phase: Phase::Begin } => Command::BeginBatch,
            ClientMsg::Batch { phase: Phase::End } => Command::EndBatch,
            ClientMsg::ResetZoom => Command::ResetZoom,
            ClientMsg::GetTree => Command::GetTree,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum ServerMsg {
    Ack {
        id: u64,
    },
    Coords {
        id: u64,
        coords: Vec<CoordEntry>,
    },
    Tree {
        id: u64,
        tree: Value,
    },
    /// `id` is null for errors not tied to a request, such as a failed
    /// render or an unparseable message.
    Error {
        id: Option<u64>,
        code: String,
        message: String,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CoordEntry {
    pub node: String,
    pub x_transform: String,
    pub y_transform: String,
    pub x: f64,
    pub y: f64,
}

impl From<&ClickCoord> for CoordEntry {
    fn from(c: &ClickCoord) -> Self {
        CoordEntry {
            node: c.node.clone(),
            x_transform: c.x_transform.clone(),
            y_transform: c.y_transform.clone(),
            x: c.x,
            y: c.y,
        }
    }
}

pub const FRAME_HEADER_LEN: usize = 8;

pub fn encode_frame(generation: u64, png: &[u8]) -> Vec<u8> {
    let mut out = Vec::with_capacity(FRAME_HEADER_LEN + png.len());
    out.extend_from_slice(&generation.to_be_bytes());
    out.extend_from_slice(png);
    out
}

/// Splits a binary frame message into generation and PNG bytes.
pub fn decode_frame(bytes: &[u8]) -> Option<(u64, &[u8])> {
    if bytes.len() < FRAME_HEADER_LEN {
        return None;
    }
    let (head, png) = bytes.split_at(FRAME_HEADER_LEN);
    Some((u64::from_be_bytes(head.try_into().ok()?), png))
}

/// Client-side frame filter: frames may arrive out of order, and only a
/// generation newer than the last one shown is displayed.
#[derive(Debug, Default, Clone)]
pub struct FrameGate {
    shown: u64,
}

impl FrameGate {
    /// Returns the generation and PNG to display, or `None` to drop the
    /// message.
    pub fn accept<'a>(&mut self, bytes: &'a [u8]) -> Option<(u64, &'a [u8])> {
        let (generation, png) = decode_frame(bytes)?;
        if generation <= self.shown {
            return None;
        }
        self.shown = generation;
        Some((generation, png))
    }

    pub fn shown(&self) -> u64 {
        self.shown
    }
}
