use std::sync::Arc;

use serde_json::Value;

use super::change::{apply_changes, ChangeRecord};
use super::error::{ErrorCode, SceneError};
use super::model::Scene;
use super::path::PropertyPath;

pub type Snapshot = Arc<Scene>;

/// A snapshot made visible to renderers, with the union of changes since
/// the previous publication.
#[derive(Debug, Clone)]
pub struct Publication {
    pub version: u64,
    pub snapshot: Snapshot,
    pub record: ChangeRecord,
}

/// Mutable handle over a sequence of immutable snapshots, with batch
/// accumulation. Inside a batch, writes update the working scene but
/// nothing is published until the outermost `end_batch`.
#[derive(Debug, Clone)]
pub struct SceneSession {
    working: Snapshot,
    published: Snapshot,
    version: u64,
    depth: u32,
    pending: Option<ChangeRecord>,
}

impl SceneSession {
    pub fn new(scene: impl Into<Snapshot>) -> Self {
        let s = scene.into();
        SceneSession {
            working: s.clone(),
            published: s,
            version: 0,
            depth: 0,
            pending: None,
        }
    }

    /// Latest scene including unpublished batch writes.
    pub fn working(&self) -> &Snapshot {
        &self.working
    }

    pub fn published(&self) -> &Snapshot {
        &self.published
    }

    pub fn version(&self) -> u64 {
        self.version
    }

    pub fn batch_depth(&self) -> u32 {
        self.depth
    }

    pub fn apply(&mut self, path: &PropertyPath, value: Value) -> Result<Option<Publication>, SceneError> {
        self.apply_many(vec![(path.clone(), value)])
    }

    pub fn apply_many(&mut self, changes: Vec<(PropertyPath, Value)>) -> Result<Option<Publication>, SceneError> {
        let (next, record) = apply_changes(&self.working, changes)?;
        self.working = Arc::new(next);
        match &mut self.pending {
            Some(p) => p.merge(record),
            None => self.pending = Some(record),
        }
        Ok(if self.depth == 0 { self.publish() } else { None })
    }

    pub fn begin_batch(&mut self) {
        self.depth += 1;
    }

    pub fn end_batch(&mut self) -> Result<Option<Publication>, SceneError> {
        if self.depth == 0 {
            return Err(SceneError::new(
                ErrorCode::EndWithoutBegin,
                "",
                "end_batch called with no open batch",
            ));
        }
        self.depth -= 1;
        Ok(if self.depth == 0 { self.publish() } else { None })
    }

    fn publish(&mut self) -> Option<Publication> {
        let record = self.pending.take()?;
        self.version += 1;
        self.published = self.working.clone();
        Some(Publication {
            version: self.version,
            snapshot: self.published.clone(),
            record,
        })
    }
}
