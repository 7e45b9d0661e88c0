//! Domain and system runtime monitors.
//!
//! Both are single-owner state machines writing to an append-only
//! [`EventLog`]. Neither ever sees live-stream labels: inputs are domain
//! verdicts, manager confidences and the frozen holdout.

use std::collections::VecDeque;
use std::fmt;

use crate::datagen::LabeledDataset;
use crate::error::{arg, Error, Result};
use crate::experts::{ensemble_predict, EvalReport, ExpertState, Standards};
use crate::manager::{manager_decide, Answer, ManagerModel};
use crate::worldmodel::DomainVerdict;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpecSet {
    pub min_window_confidence: f64,
    pub window_len: usize,
    pub min_holdout_accuracy: f64,
    /// `None` disables shutdown.
    pub shutdown_after_consecutive_violations: Option<usize>,
}

impl Default for SpecSet {
    fn default() -> Self {
        Self {
            min_window_confidence: 0.5,
            window_len: 10,
            min_holdout_accuracy: 0.6,
            shutdown_after_consecutive_violations: None,
        }
    }
}

impl SpecSet {
    pub fn validate(&self) -> Result<()> {
        let unit = |v: f64| v > 0.0 && v <= 1.0;
        if !unit(self.min_window_confidence) || !unit(self.min_holdout_accuracy) {
            return arg("monitor thresholds must lie in (0, 1]");
        }
        if self.window_len == 0 {
            return arg("window_len must be >= 1");
        }
        if self.shutdown_after_consecutive_violations == Some(0) {
            return arg("shutdown_after must be >= 1 when set");
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Source {
    DomainMonitor,
    SystemMonitor,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EventKind {
    Verdict,
    Violation,
    Notify,
    RetrainSignal,
    Shutdown,
}

impl Source {
    fn name(self) -> &'static str {
        match self {
            Source::DomainMonitor => "domain",
            Source::SystemMonitor => "system",
        }
    }
}

impl EventKind {
    fn name(self) -> &'static str {
        match self {
            EventKind::Verdict => "verdict",
            EventKind::Violation => "violation",
            EventKind::Notify => "notify",
            EventKind::RetrainSignal => "retrain_signal",
            EventKind::Shutdown => "shutdown",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct MonitorEvent {
    pub timestep: usize,
    pub source: Source,
    pub kind: EventKind,
    pub payload: Vec<(String, String)>,
}

impl MonitorEvent {
    fn new(timestep: usize, source: Source, kind: EventKind, payload: Vec<(&str, String)>) -> Self {
        Self {
            timestep,
            source,
            kind,
            payload: payload.into_iter().map(|(k, v)| (k.to_string(), v)).collect(),
        }
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.payload.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }
}

impl fmt::Display for MonitorEvent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "t={} source={} kind={}",
            self.timestep,
            self.source.name(),
            self.kind.name()
        )?;
        for (k, v) in &self.payload {
            write!(f, " {k}={v}")?;
        }
        Ok(())
    }
}

/// Append-only, timestep-ordered event record.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct EventLog {
    events: Vec<MonitorEvent>,
}

impl EventLog {
    pub fn push(&mut self, event: MonitorEvent) -> Result<()> {
        if let Some(last) = self.events.last() {
            if event.timestep < last.timestep {
                return Err(Error::State(format!(
                    "event at t={} after t={}",
                    event.timestep, last.timestep
                )));
            }
        }
        self.events.push(event);
        Ok(())
    }

    pub fn events(&self) -> &[MonitorEvent] {
        &self.events
    }

    pub fn count(&self, source: Source, kind: EventKind) -> usize {
        self.events
            .iter()
            .filter(|e| e.source == source && e.kind == kind)
            .count()
    }

    /// One `key=value` record per line.
    pub fn render(&self) -> String {
        let mut s = String::new();
        for e in &self.events {
            s.push_str(&e.to_string());
            s.push('\n');
        }
        s
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum MonitorAction {
    None,
    Notify,
    TriggerRetrain,
    Shutdown,
}

impl MonitorAction {
    pub fn name(self) -> &'static str {
        match self {
            MonitorAction::None => "none",
            MonitorAction::Notify => "notify",
            MonitorAction::TriggerRetrain => "trigger_retrain",
            MonitorAction::Shutdown => "shutdown",
        }
    }

    fn parse(s: &str) -> Option<Self> {
        Some(match s {
            "none" => MonitorAction::None,
            "notify" => MonitorAction::Notify,
            "trigger_retrain" => MonitorAction::TriggerRetrain,
            "shutdown" => MonitorAction::Shutdown,
            _ => return None,
        })
    }
}

/// Tracks the out-of-domain fraction over the last `window` verdicts and
/// flags the moment it rises above `max_ood_fraction`.
#[derive(Debug, Clone)]
pub struct DomainMonitor {
    window: usize,
    max_ood_fraction: f64,
    recent: VecDeque<bool>,
    in_violation: bool,
    pub log: EventLog,
}

impl DomainMonitor {
    pub fn new(window: usize, max_ood_fraction: f64) -> Result<Self> {
        if window == 0 {
            return arg("domain monitor window must be >= 1");
        }
        Ok(Self {
            window,
            max_ood_fraction,
            recent: VecDeque::with_capacity(window),
            in_violation: false,
            log: EventLog::default(),
        })
    }

    pub fn ood_fraction(&self) -> f64 {
        if self.recent.is_empty() {
            return 0.0;
        }
        self.recent.iter().filter(|v| !**v).count() as f64 / self.recent.len() as f64
    }

    /// Logs the verdict and, when the window fraction crosses the limit, a
    /// violation. Returns the events appended by this call.
    pub fn step(&mut self, verdict: &DomainVerdict, t: usize) -> Result<Vec<MonitorEvent>> {
        if self.recent.len() == self.window {
            self.recent.pop_front();
        }
        self.recent.push_back(verdict.in_domain);
        let fraction = self.ood_fraction();
        let mut emitted = vec![MonitorEvent::new(
            t,
            Source::DomainMonitor,
            EventKind::Verdict,
            vec![
                ("loss", format!("{:.6}", verdict.loss)),
                ("in_domain", verdict.in_domain.to_string()),
                ("threshold", format!("{:.6}", verdict.threshold_used)),
            ],
        )];
        let violating = fraction > self.max_ood_fraction;
        if violating && !self.in_violation {
            emitted.push(MonitorEvent::new(
                t,
                Source::DomainMonitor,
                EventKind::Violation,
                vec![("ood_fraction", format!("{fraction:.4}"))],
            ));
        }
        self.in_violation = violating;
        for e in &emitted {
            self.log.push(e.clone())?;
        }
        Ok(emitted)
    }
}

/// Checks windowed confidence and holdout accuracy against a [`SpecSet`].
#[derive(Debug, Clone)]
pub struct SystemMonitor {
    pub specs: SpecSet,
    consecutive_violations: usize,
    pub log: EventLog,
}

impl SystemMonitor {
    pub fn new(specs: SpecSet) -> Result<Self> {
        specs.validate()?;
        Ok(Self {
            specs,
            consecutive_violations: 0,
            log: EventLog::default(),
        })
    }

    /// Low window confidence notifies and requests retraining; holdout
    /// accuracy under the floor (chronic forgetting) requests retraining;
    /// enough consecutive violating windows shut the system down.
    pub fn step(&mut self, window_confidence: f64, holdout: Option<&EvalReport>, t: usize) -> Result<MonitorAction> {
        if !(0.0..=1.0).contains(&window_confidence) {
            return arg(format!("window confidence {window_confidence} outside [0, 1]"));
        }
        let low_confidence = window_confidence < self.specs.min_window_confidence;
        let forgetting = holdout.is_some_and(|h| h.accuracy < self.specs.min_holdout_accuracy);
        if low_confidence || forgetting {
            self.consecutive_violations += 1;
        } else {
            self.consecutive_violations = 0;
        }
        let shutdown = self
            .specs
            .shutdown_after_consecutive_violations
            .is_some_and(|n| self.consecutive_violations >= n);
        let action = if shutdown {
            MonitorAction::Shutdown
        } else if low_confidence || forgetting {
            MonitorAction::TriggerRetrain
        } else {
            MonitorAction::None
        };

        let holdout_text = holdout.map(|h| format!("{:.6}", h.accuracy)).unwrap_or_else(|| "none".into());
        let sys = |kind, payload| MonitorEvent::new(t, Source::SystemMonitor, kind, payload);
        self.log.push(sys(
            EventKind::Verdict,
            vec![
                ("window_confidence", format!("{window_confidence:.6}")),
                ("holdout_accuracy", holdout_text.clone()),
                ("action", action.name().to_string()),
            ],
        ))?;
        if low_confidence {
            self.log.push(sys(
                EventKind::Violation,
                vec![
                    ("spec", "min_window_confidence".into()),
                    ("value", format!("{window_confidence:.6}")),
                    ("floor", format!("{:.6}", self.specs.min_window_confidence)),
                ],
            ))?;
            self.log.push(sys(EventKind::Notify, vec![("reason", "low_confidence".into())]))?;
        }
        if forgetting {
            self.log.push(sys(
                EventKind::Violation,
                vec![
                    ("spec", "min_holdout_accuracy".into()),
                    ("value", holdout_text),
                    ("floor", format!("{:.6}", self.specs.min_holdout_accuracy)),
                ],
            ))?;
        }
        if action >= MonitorAction::TriggerRetrain && !shutdown {
            self.log.push(sys(EventKind::RetrainSignal, vec![]))?;
        }
        if shutdown {
            self.log.push(sys(
                EventKind::Shutdown,
                vec![("consecutive_violations", self.consecutive_violations.to_string())],
            ))?;
        }
        Ok(action)
    }

    /// Re-runs the system checks recorded in `log` on a fresh monitor and
    /// returns the recomputed actions alongside the logged ones.
    pub fn replay(specs: SpecSet, log: &EventLog) -> Result<Vec<(MonitorAction, MonitorAction)>> {
        let mut fresh = SystemMonitor::new(specs)?;
        let bad = |m: &str| Error::Format(format!("system log: {m}"));
        let mut out = Vec::new();
        for e in log.events() {
            if e.source != Source::SystemMonitor || e.kind != EventKind::Verdict {
                continue;
            }
            let conf: f64 = e
                .get("window_confidence")
                .and_then(|v| v.parse().ok())
                .ok_or_else(|| bad("window_confidence"))?;
            let holdout = match e.get("holdout_accuracy") {
                Some("none") => None,
                Some(v) => Some(EvalReport::new(
                    v.parse().map_err(|_| bad("holdout_accuracy"))?,
                    0.0,
                    &Standards::default(),
                    "replay",
                )),
                None => return Err(bad("holdout_accuracy")),
            };
            let logged = e
                .get("action")
                .and_then(MonitorAction::parse)
                .ok_or_else(|| bad("action"))?;
            out.push((fresh.step(conf, holdout.as_ref(), e.timestep)?, logged));
        }
        Ok(out)
    }
}

/// Ensemble-plus-manager accuracy on the frozen holdout; abstentions count
/// as errors. Confidence is the mean manager confidence.
pub fn forgetting_check(
    ensemble: &[ExpertState],
    manager: &ManagerModel,
    frozen_holdout: &LabeledDataset,
    standards: &Standards,
) -> Result<EvalReport> {
    if frozen_holdout.is_empty() {
        return arg("holdout is empty");
    }
    let mut correct = 0;
    let mut conf = 0.0;
    for item in &frozen_holdout.items {
        let d = manager_decide(manager, &ensemble_predict(ensemble, &item.image)?)?;
        conf += d.confidence;
        if d.answer == Answer::Class(item.label) {
            correct += 1;
        }
    }
    let n = frozen_holdout.len() as f64;
    Ok(EvalReport::new(correct as f64 / n, conf / n, standards, "holdout"))
}
