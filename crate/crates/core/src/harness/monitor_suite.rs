//! Scripted scenarios that exercise each System Run Time Monitor reaction.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::adapt::{replace_data, retrain_dynamic, System};
use crate::datagen::{sample_dataset, DomainSpec};
use crate::error::Result;
use crate::experts::{ensemble_predict, evaluate_network, evaluate_promotion, PromotionDecision, PromotionFlags, Standards};
use crate::manager::{interval_confidence, manager_decide};
use crate::monitors::{forgetting_check, EventKind, EventLog, MonitorAction, Source, SpecSet, SystemMonitor};

use super::drift::{build_trial, DriftKind, DriftSettings};

pub const SUITE_CSV_HEADER: &str = "scenario,windows,violations,notifies,retrain_signals,shutdowns,holdout_accuracy,final_action";

#[derive(Debug, Clone)]
pub struct ScenarioResult {
    pub name: &'static str,
    pub windows: usize,
    pub holdout_accuracy: f64,
    pub final_action: MonitorAction,
    pub log: EventLog,
}

impl ScenarioResult {
    pub fn csv_row(&self) -> String {
        let c = |k| self.log.count(Source::SystemMonitor, k);
        format!(
            "{},{},{},{},{},{},{:.6},{}",
            self.name,
            self.windows,
            c(EventKind::Violation),
            c(EventKind::Notify),
            c(EventKind::RetrainSignal),
            c(EventKind::Shutdown),
            self.holdout_accuracy,
            self.final_action.name()
        )
    }
}

pub struct SuiteSettings {
    pub window_len: usize,
    pub images_per_step: usize,
    pub specs: SpecSet,
}

impl Default for SuiteSettings {
    fn default() -> Self {
        Self {
            window_len: 10,
            images_per_step: 20,
            specs: SpecSet {
                shutdown_after_consecutive_violations: Some(3),
                ..SpecSet::default()
            },
        }
    }
}

/// Serves `windows` windows of a stream drawn from `range` and feeds each
/// window to a fresh system monitor.
fn serve_range(
    system: &System,
    holdout: &crate::datagen::LabeledDataset,
    range: (f64, f64),
    windows: usize,
    settings: &SuiteSettings,
    rng: &mut ChaCha8Rng,
    name: &'static str,
) -> Result<ScenarioResult> {
    let mut monitor = SystemMonitor::new(settings.specs)?;
    let spec = DomainSpec::digits(range.0, range.1);
    let mut action = MonitorAction::None;
    let mut holdout_accuracy = 0.0;
    let mut served = 0;
    for w in 0..windows {
        let mut decisions = Vec::new();
        for _ in 0..settings.window_len {
            let batch = sample_dataset(&spec, settings.images_per_step, rng)?.into_live().0;
            for img in &batch.images {
                decisions.push(manager_decide(&system.manager, &ensemble_predict(&system.ensemble, img)?)?);
            }
        }
        let report = forgetting_check(&system.ensemble, &system.manager, holdout, &Standards::default())?;
        holdout_accuracy = report.accuracy;
        let t = (w + 1) * settings.window_len - 1;
        action = monitor.step(interval_confidence(&decisions)?, Some(&report), t)?;
        served += 1;
        if action == MonitorAction::Shutdown {
            break;
        }
    }
    Ok(ScenarioResult {
        name,
        windows: served,
        holdout_accuracy,
        final_action: action,
        log: monitor.log,
    })
}

/// Nominal in-domain serving, a far out-of-domain stream that escalates to
/// shutdown, and a deliberate forgetting scenario in which every expert's
/// data is overwritten with far-domain images and promoted.
pub fn run_monitor_suite(seed: u64, bypass_world_model: bool) -> Result<Vec<ScenarioResult>> {
    let mut drift = DriftSettings::new(DriftKind::Slow);
    drift.timesteps = 1;
    drift.world_model_bypass = bypass_world_model;
    let setup = build_trial(&drift, seed)?;
    let settings = SuiteSettings::default();
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5417e);

    let nominal = serve_range(&setup.system, &setup.holdout, (0.0, 20.0), 2, &settings, &mut rng, "nominal")?;
    let far = serve_range(&setup.system, &setup.holdout, (90.0, 180.0), 5, &settings, &mut rng, "out_of_domain")?;

    let mut forgotten = setup.system.clone();
    let off_domain = DomainSpec::digits(150.0, 180.0);
    for (i, e) in forgotten.ensemble.iter_mut().enumerate() {
        let fresh = sample_dataset(&off_domain, e.train_data.len() + e.val_data.len(), &mut rng)?;
        let (train, val) = fresh.items.split_at(e.train_data.len());
        replace_data(&mut e.train_data, train, 1.0);
        replace_data(&mut e.val_data, val, 1.0);
        retrain_dynamic(e, 15, 10, seed.wrapping_add(i as u64))?;
        let standards = Standards::default();
        let current = evaluate_network(e.reserved(), &e.val_data, None, &standards, "val")?;
        let candidate = evaluate_network(e.active(), &e.val_data, None, &standards, "val")?;
        let flags = PromotionFlags {
            performance_maximizing: true,
            ..PromotionFlags::default()
        };
        let decision = evaluate_promotion(&candidate, &current, &flags)?;
        if decision == PromotionDecision::Promote {
            e.promote(&decision)?;
        }
    }
    let forgetting = serve_range(&forgotten, &setup.holdout, (150.0, 180.0), 1, &settings, &mut rng, "forgetting")?;
    Ok(vec![nominal, far, forgetting])
}

pub fn suite_csv(results: &[ScenarioResult]) -> String {
    let mut s = format!("{SUITE_CSV_HEADER}\n");
    for r in results {
        s.push_str(&r.csv_row());
        s.push('\n');
    }
    s
}
