//! Drift trials: an ensemble trained on 0-20° serves a rotating live stream
//! while the adaptation loop and monitors run alongside it.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::adapt::{adaptation_cycle, AdaptConfig, Approver, CycleSummary, System, FAST_REPLACER, SLOW_REPLACER};
use crate::datagen::{sample_dataset, standard_splits, DomainSpec, DriftSchedule, LabeledDataset};
use crate::error::{arg, Result};
use crate::experts::{autoencoder_config, ensemble_predict, train_expert, ExpertConfig, Standards};
use crate::manager::{
    build_manager_training_set, interval_confidence, manager_decide, manager_train_config, train_manager, Answer,
    Decision, DEFAULT_TRUST_TOLERANCE,
};
use crate::monitors::{forgetting_check, DomainMonitor, EventKind, EventLog, MonitorAction, SpecSet, SystemMonitor};
use crate::worldmodel::{calibrate_threshold, domain_verdict, train_autoencoder, AutoencoderModel, WorldModel};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DriftKind {
    /// Disjoint 10° windows advancing 10° per timestep.
    Fast,
    /// 20° windows advancing 1° per timestep.
    Slow,
}

impl DriftKind {
    pub fn name(self) -> &'static str {
        match self {
            DriftKind::Fast => "fast",
            DriftKind::Slow => "slow",
        }
    }

    pub fn shift_and_width(self) -> (f64, f64) {
        match self {
            DriftKind::Fast => (10.0, 10.0),
            DriftKind::Slow => (1.0, 20.0),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReplacerSpeed {
    Off,
    Slow,
    Fast,
}

impl ReplacerSpeed {
    pub fn rate(self) -> f64 {
        match self {
            ReplacerSpeed::Off => 0.0,
            ReplacerSpeed::Slow => SLOW_REPLACER,
            ReplacerSpeed::Fast => FAST_REPLACER,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ReplacerSpeed::Off => "off",
            ReplacerSpeed::Slow => "slow",
            ReplacerSpeed::Fast => "fast",
        }
    }
}

/// One of the retrainer × replacer combinations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Components {
    pub retrainer: bool,
    pub replacer: ReplacerSpeed,
}

impl Components {
    pub const NONE: Components = Components {
        retrainer: false,
        replacer: ReplacerSpeed::Off,
    };

    pub fn label(self) -> String {
        match (self.retrainer, self.replacer) {
            (false, ReplacerSpeed::Off) => "none".into(),
            (true, ReplacerSpeed::Off) => "retrainer".into(),
            (false, r) => format!("{}_replacer", r.name()),
            (true, r) => format!("retrainer+{}_replacer", r.name()),
        }
    }

    /// The five configurations of the fast-drift trials.
    pub fn fast_set() -> Vec<Components> {
        use ReplacerSpeed::*;
        vec![
            Components { retrainer: true, replacer: Fast },
            Components { retrainer: true, replacer: Slow },
            Components { retrainer: false, replacer: Slow },
            Components { retrainer: false, replacer: Fast },
            Components::NONE,
        ]
    }

    /// The three configurations of the slow-drift trials.
    pub fn slow_set() -> Vec<Components> {
        use ReplacerSpeed::*;
        vec![
            Components { retrainer: true, replacer: Fast },
            Components { retrainer: true, replacer: Slow },
            Components::NONE,
        ]
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DriftSettings {
    pub kind: DriftKind,
    /// Window advance per timestep and window width, in degrees.
    pub shift_per_step: f64,
    pub window_width: f64,
    pub timesteps: usize,
    pub images_per_step: usize,
    pub block_len: usize,
    pub experts: usize,
    pub initial_range: (f64, f64),
    pub specs: SpecSet,
    pub adapt: AdaptConfig,
    pub holdout_size: usize,
    pub manager_initial_size: usize,
    pub manager_untrusted_size: usize,
    /// Angles used for the manager's "trust nobody" rows.
    pub untrusted_range: (f64, f64),
    pub expert_epochs: usize,
    pub domain_window: usize,
    pub world_model_bypass: bool,
}

impl DriftSettings {
    pub fn new(kind: DriftKind) -> Self {
        let (shift_per_step, window_width) = kind.shift_and_width();
        Self {
            kind,
            shift_per_step,
            window_width,
            timesteps: 60,
            images_per_step: 20,
            block_len: 10,
            experts: 3,
            initial_range: (0.0, 20.0),
            specs: SpecSet::default(),
            adapt: AdaptConfig::default(),
            holdout_size: 100,
            manager_initial_size: 200,
            manager_untrusted_size: 100,
            untrusted_range: (60.0, 180.0),
            expert_epochs: 30,
            domain_window: 20,
            world_model_bypass: false,
        }
    }

    pub fn schedule(&self) -> Result<DriftSchedule> {
        DriftSchedule::sliding(
            &DomainSpec::digits(self.initial_range.0, self.initial_range.1),
            self.initial_range.0,
            self.shift_per_step,
            self.window_width,
            self.timesteps,
            self.images_per_step,
        )
    }
}

/// Everything a trial starts from; shared by every configuration of the
/// trial so they face the same ensemble and the same stream.
#[derive(Debug, Clone)]
pub struct TrialSetup {
    pub system: System,
    pub detector: AutoencoderModel,
    pub holdout: LabeledDataset,
    /// Live batches with their ground truth, which stays in the harness.
    pub stream: Vec<LabeledDataset>,
}

pub fn build_trial(settings: &DriftSettings, seed: u64) -> Result<TrialSetup> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let initial = DomainSpec::digits(settings.initial_range.0, settings.initial_range.1);
    let mut ensemble = Vec::with_capacity(settings.experts);
    for id in 0..settings.experts {
        let splits = standard_splits(&initial, &mut rng)?;
        let mut cfg = ExpertConfig::new(rng.random());
        cfg.cnn.epochs = settings.expert_epochs;
        ensemble.push(train_expert(id, &splits, &cfg)?);
    }
    let manager_initial = sample_dataset(&initial, settings.manager_initial_size, &mut rng)?;
    let untrusted = sample_dataset(
        &DomainSpec::digits(settings.untrusted_range.0, settings.untrusted_range.1),
        settings.manager_untrusted_size,
        &mut rng,
    )?;
    let set = build_manager_training_set(&ensemble, &manager_initial, &untrusted)?;
    let manager = train_manager(&set, &manager_train_config(rng.random()), DEFAULT_TRUST_TOLERANCE)?;

    let detector_data = sample_dataset(&initial, 400, &mut rng)?;
    let mut detector = train_autoencoder(&detector_data, &autoencoder_config(rng.random()))?;
    calibrate_threshold(&mut detector, &detector_data, crate::worldmodel::DEFAULT_PERCENTILE)?;
    let world = if settings.world_model_bypass {
        WorldModel::RealWorld
    } else {
        WorldModel::Learned(detector.clone())
    };
    let holdout = world.synthesize(&initial, settings.holdout_size, &mut rng)?;

    let schedule = settings.schedule()?;
    let stream = schedule
        .steps
        .iter()
        .map(|spec| sample_dataset(spec, schedule.images_per_step, &mut rng))
        .collect::<Result<Vec<_>>>()?;
    Ok(TrialSetup {
        system: System { ensemble, manager },
        detector,
        holdout,
        stream,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct BlockRow {
    pub block_start: usize,
    pub block_end: usize,
    pub accuracy: f64,
    pub confidence: f64,
    /// Low-confidence violation raised at the end of this block.
    pub alert: bool,
    /// First angle of the block's first window.
    pub start_angle: f64,
}

#[derive(Debug, Clone)]
pub struct DriftTrace {
    pub components: Components,
    /// Serving accuracy of every timestep.
    pub step_accuracy: Vec<f64>,
    pub blocks: Vec<BlockRow>,
    pub events: EventLog,
    pub domain_events: EventLog,
    pub decision_log: Vec<String>,
    pub cycles: Vec<CycleSummary>,
    pub shutdown: bool,
    pub final_system: System,
}

pub const DECISION_LOG_HEADER: &str = "t,image,label,chosen,confidence,scores";

/// Serves the stream with the given components enabled. `adapt` off skips
/// the adaptation loop entirely rather than running an inert cycle.
pub fn run_drift(
    setup: &TrialSetup,
    settings: &DriftSettings,
    components: Components,
    approver: &mut dyn Approver,
    adapt: bool,
) -> Result<DriftTrace> {
    if settings.block_len == 0 {
        return arg("block length must be >= 1");
    }
    let cfg = AdaptConfig {
        retrainer: components.retrainer,
        overwrite_rate: components.replacer.rate(),
        ..settings.adapt.clone()
    };
    let schedule = settings.schedule()?;
    let mut system = setup.system.clone();
    let mut domain = DomainMonitor::new(settings.domain_window, 0.5)?;
    let mut monitor = SystemMonitor::new(settings.specs)?;
    let mut trace = DriftTrace {
        components,
        step_accuracy: Vec::new(),
        blocks: Vec::new(),
        events: EventLog::default(),
        domain_events: EventLog::default(),
        decision_log: Vec::new(),
        cycles: Vec::new(),
        shutdown: false,
        final_system: setup.system.clone(),
    };
    let mut block_decisions: Vec<Decision> = Vec::new();
    let mut block_correct = 0usize;

    for (t, live) in setup.stream.iter().enumerate() {
        let (batch, truth) = live.clone().into_live();
        let mut decisions = Vec::with_capacity(batch.images.len());
        let mut correct = 0;
        for (i, image) in batch.images.iter().enumerate() {
            let d = manager_decide(&system.manager, &ensemble_predict(&system.ensemble, image)?)?;
            domain.step(&domain_verdict(&setup.detector, image)?, t)?;
            if d.answer == Answer::Class(truth[i]) {
                correct += 1;
            }
            trace.decision_log.push(d.log_line(t, i));
            decisions.push(d);
        }
        trace.step_accuracy.push(correct as f64 / batch.images.len() as f64);
        block_correct += correct;
        block_decisions.extend(decisions.iter().cloned());

        if adapt {
            trace
                .cycles
                .extend(adaptation_cycle(&mut system, &batch, &decisions, &cfg, approver, t)?);
        }

        let block_done = (t + 1) % settings.block_len == 0 || t + 1 == setup.stream.len();
        if block_done {
            let start = t + 1 - ((t % settings.block_len) + 1);
            let holdout = forgetting_check(&system.ensemble, &system.manager, &setup.holdout, &Standards::default())?;
            let confidence = interval_confidence(&block_decisions)?;
            let before = monitor.log.count(crate::monitors::Source::SystemMonitor, EventKind::Notify);
            let action = monitor.step(confidence, Some(&holdout), t)?;
            let alert = monitor.log.count(crate::monitors::Source::SystemMonitor, EventKind::Notify) > before;
            trace.blocks.push(BlockRow {
                block_start: start,
                block_end: t + 1,
                accuracy: block_correct as f64 / block_decisions.len() as f64,
                confidence,
                alert,
                start_angle: schedule.steps[start].angle_min,
            });
            block_decisions.clear();
            block_correct = 0;
            if action == MonitorAction::Shutdown {
                trace.shutdown = true;
                break;
            }
        }
    }
    trace.events = monitor.log;
    trace.domain_events = domain.log;
    trace.final_system = system;
    Ok(trace)
}

pub const DRIFT_CSV_HEADER: &str = "block_start,block_end,config,accuracy,confidence,alert";

/// Trial-averaged block row; `alerts` counts the trials whose monitor raised
/// a low-confidence notification at the end of the block.
#[derive(Debug, Clone, PartialEq)]
pub struct SummaryRow {
    pub block_start: usize,
    pub block_end: usize,
    pub config: String,
    pub accuracy: f64,
    pub confidence: f64,
    pub alerts: usize,
    pub start_angle: f64,
}

impl SummaryRow {
    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{:.6},{:.6},{}",
            self.block_start, self.block_end, self.config, self.accuracy, self.confidence, self.alerts
        )
    }
}

pub struct DriftExperiment {
    pub kind: DriftKind,
    pub configs: Vec<Components>,
    pub rows: Vec<SummaryRow>,
    /// `traces[trial][config]`.
    pub traces: Vec<Vec<DriftTrace>>,
}

impl DriftExperiment {
    pub fn rows_for<'a>(&'a self, c: Components) -> impl Iterator<Item = &'a SummaryRow> + 'a {
        let label = c.label();
        self.rows.iter().filter(move |r| r.config == label)
    }

    pub fn shutdown(&self) -> bool {
        self.traces.iter().flatten().any(|t| t.shutdown)
    }

    pub fn to_csv(&self) -> String {
        let mut s = format!("{DRIFT_CSV_HEADER}\n");
        for r in &self.rows {
            s.push_str(&r.csv_row());
            s.push('\n');
        }
        s
    }
}

/// Runs every configuration on `trials` independently seeded setups and
/// averages block rows by trial index order.
pub fn run_drift_experiment(
    settings: &DriftSettings,
    configs: &[Components],
    trials: usize,
    seed: u64,
    approver: &mut dyn Approver,
) -> Result<DriftExperiment> {
    if trials == 0 {
        return arg("trials must be >= 1");
    }
    let tag = format!("drift_{}", settings.kind.name());
    let mut traces = Vec::with_capacity(trials);
    for k in 0..trials {
        let trial = super::trial_seed(seed, &tag, k);
        let mut trial_settings = settings.clone();
        trial_settings.adapt.seed = trial ^ 0xada9;
        let setup = build_trial(&trial_settings, trial)?;
        traces.push(
            configs
                .iter()
                .map(|c| run_drift(&setup, &trial_settings, *c, approver, true))
                .collect::<Result<Vec<_>>>()?,
        );
    }
    let mut rows = Vec::new();
    for (ci, c) in configs.iter().enumerate() {
        let blocks = traces.iter().map(|t| t[ci].blocks.len()).max().unwrap_or(0);
        for b in 0..blocks {
            let present: Vec<&BlockRow> = traces.iter().filter_map(|t| t[ci].blocks.get(b)).collect();
            let n = present.len() as f64;
            rows.push(SummaryRow {
                block_start: present[0].block_start,
                block_end: present[0].block_end,
                config: c.label(),
                accuracy: present.iter().map(|r| r.accuracy).sum::<f64>() / n,
                confidence: present.iter().map(|r| r.confidence).sum::<f64>() / n,
                alerts: present.iter().filter(|r| r.alert).count(),
                start_angle: present[0].start_angle,
            });
        }
    }
    Ok(DriftExperiment {
        kind: settings.kind,
        configs: configs.to_vec(),
        rows,
        traces,
    })
}

/// Domain and system events of a trace interleaved by timestep; at equal
/// timesteps the serving-time domain events come first.
pub fn merged_event_log(trace: &DriftTrace) -> String {
    let (d, s) = (trace.domain_events.events(), trace.events.events());
    let (mut i, mut j) = (0, 0);
    let mut out = String::new();
    while i < d.len() || j < s.len() {
        let take_domain = j >= s.len() || (i < d.len() && d[i].timestep <= s[j].timestep);
        let e = if take_domain {
            i += 1;
            &d[i - 1]
        } else {
            j += 1;
            &s[j - 1]
        };
        out.push_str(&e.to_string());
        out.push('\n');
    }
    out
}
