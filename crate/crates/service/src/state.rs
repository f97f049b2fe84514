use std::collections::BTreeMap;
use std::fs::{File, OpenOptions};
use std::io::{BufRead, Write};
use std::path::Path;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

use parking_lot::{Mutex, RwLock};
use pvk_kernel::{Presumptions, Prover, Session, StepRequest};
use pvk_theory::Registry;
use serde::{Deserialize, Serialize};

use crate::error::ApiError;

/// Which theory items a session may invoke. `only: None` presumes
/// everything; `only: []` presumes nothing, so only assumptions work.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresumptionSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub only: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub excluding: Vec<String>,
}

impl PresumptionSpec {
    pub fn to_presumptions(&self) -> Presumptions {
        let base = match &self.only {
            None => Presumptions::all(),
            Some(names) => Presumptions::only(names.iter().cloned()),
        };
        base.excluding(self.excluding.iter().cloned())
    }
}

/// One line of the event log. Only successful steps are logged, so
/// replaying the lines in order rebuilds every session exactly.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "event", rename_all = "snake_case")]
pub enum Event {
    Created { session: String, snapshot: String, presumptions: PresumptionSpec },
    Step { session: String, index: usize, request: StepRequest },
}

pub struct LiveSession {
    pub id: String,
    pub snapshot: String,
    pub session: Session,
}

#[derive(Default)]
struct EventLog {
    lines: Vec<String>,
    file: Option<File>,
}

/// Theory snapshots, live sessions and the event log.
///
/// Each session sits behind its own FIFO lock, so its requests run in
/// arrival order while distinct sessions proceed concurrently.
pub struct Service {
    snapshots: RwLock<BTreeMap<String, Arc<Registry>>>,
    sessions: RwLock<BTreeMap<String, Arc<tokio::sync::Mutex<LiveSession>>>>,
    next_id: AtomicU64,
    log: Mutex<EventLog>,
}

pub const DEFAULT_SNAPSHOT: &str = "stdlib";

impl Service {
    pub fn new() -> Self {
        Service {
            snapshots: RwLock::new(BTreeMap::new()),
            sessions: RwLock::new(BTreeMap::new()),
            next_id: AtomicU64::new(1),
            log: Mutex::new(EventLog::default()),
        }
    }

    /// A service with the bundled standard library as snapshot `stdlib`.
    pub fn with_stdlib() -> Result<Self, pvk_theory::TheoryError> {
        let s = Service::new();
        s.publish(DEFAULT_SNAPSHOT, pvk_theory::load_stdlib()?);
        Ok(s)
    }

    /// Registers an immutable snapshot under `name`, replacing any earlier
    /// one for new sessions. Existing sessions keep what they started with.
    pub fn publish(&self, name: &str, registry: Registry) {
        self.snapshots.write().insert(name.to_string(), Arc::new(registry));
    }

    pub fn snapshot(&self, name: &str) -> Result<Arc<Registry>, ApiError> {
        self.snapshots.read().get(name).cloned().ok_or_else(|| ApiError::unknown_snapshot(name))
    }

    /// Appends events to `path` from now on.
    pub fn log_to(&self, path: &Path) -> std::io::Result<()> {
        let file = OpenOptions::new().create(true).append(true).open(path)?;
        self.log.lock().file = Some(file);
        Ok(())
    }

    /// Every event logged by this process, as JSON lines.
    pub fn event_lines(&self) -> Vec<String> {
        self.log.lock().lines.clone()
    }

    fn record(&self, e: &Event) -> Result<(), ApiError> {
        let line = serde_json::to_string(e).expect("event serializes");
        let mut log = self.log.lock();
        if let Some(f) = &mut log.file {
            writeln!(f, "{line}").and_then(|_| f.flush()).map_err(|e| ApiError::internal(format!("event log: {e}")))?;
        }
        log.lines.push(line);
        Ok(())
    }

    pub fn create_session(&self, snapshot: &str, presumptions: PresumptionSpec) -> Result<String, ApiError> {
        let id = format!("s{}", self.next_id.fetch_add(1, Ordering::SeqCst));
        self.open(&id, snapshot, &presumptions)?;
        self.record(&Event::Created { session: id.clone(), snapshot: snapshot.to_string(), presumptions })?;
        Ok(id)
    }

    fn open(&self, id: &str, snapshot: &str, presumptions: &PresumptionSpec) -> Result<(), ApiError> {
        let registry = self.snapshot(snapshot)?;
        let prover = Prover::new(registry).with_presumptions(presumptions.to_presumptions());
        let live = LiveSession { id: id.to_string(), snapshot: snapshot.to_string(), session: Session::new(prover) };
        self.sessions.write().insert(id.to_string(), Arc::new(tokio::sync::Mutex::new(live)));
        Ok(())
    }

    pub fn session(&self, id: &str) -> Result<Arc<tokio::sync::Mutex<LiveSession>>, ApiError> {
        self.sessions.read().get(id).cloned().ok_or_else(|| ApiError::unknown_session(id))
    }

    /// Applies one request to a locked session. A failed request changes
    /// nothing and is not logged.
    pub fn apply(&self, live: &mut LiveSession, request: &StepRequest) -> Result<usize, ApiError> {
        let index = live.session.apply(request).map_err(|e| {
            ApiError::from(e).with_details(serde_json::json!({ "session": live.id, "rule": request.rule_name() }))
        })?;
        self.record(&Event::Step { session: live.id.clone(), index, request: request.clone() })?;
        Ok(index)
    }

    /// Rebuilds sessions from event-log lines. Replayed events are kept in
    /// memory but not written again.
    pub fn replay<R: BufRead>(&self, reader: R) -> Result<usize, ApiError> {
        let mut count = 0;
        for (n, line) in reader.lines().enumerate() {
            let line = line.map_err(|e| ApiError::internal(format!("event log: {e}")))?;
            if line.trim().is_empty() {
                continue;
            }
            let event: Event = serde_json::from_str(&line)
                .map_err(|e| ApiError::bad_request(format!("event log line {}: {e}", n + 1)))?;
            match &event {
                Event::Created { session, snapshot, presumptions } => {
                    self.open(session, snapshot, presumptions)?;
                    if let Some(k) = session.strip_prefix('s').and_then(|k| k.parse::<u64>().ok()) {
                        self.next_id.fetch_max(k + 1, Ordering::SeqCst);
                    }
                }
                Event::Step { session, index, request } => {
                    let s = self.session(session)?;
                    let mut live = s.try_lock().map_err(|_| ApiError::internal("session busy during replay"))?;
                    let got = live.session.apply(request)?;
                    if got != *index {
                        return Err(ApiError::internal(format!(
                            "replay of {session} diverged: step logged at {index} landed at {got}"
                        )));
                    }
                }
            }
            self.log.lock().lines.push(line);
            count += 1;
        }
        Ok(count)
    }
}

impl Default for Service {
    fn default() -> Self {
        Service::new()
    }
}
