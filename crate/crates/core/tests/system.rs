//! Whole-system behaviour on a short slow-drift stream.

use std::sync::OnceLock;

use acl::adapt::{AutoApprove, DenyAll};
use acl::datagen::{sample_dataset, DomainSpec};
use acl::experts::{evaluate_network, PromotionDecision, Standards};
use acl::harness::drift::{build_trial, run_drift, Components, DriftKind, DriftSettings, ReplacerSpeed, TrialSetup};
use acl::harness::monitor_suite::run_monitor_suite;
use acl::monitors::{forgetting_check, MonitorAction, SystemMonitor};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const ADAPTIVE: Components = Components {
    retrainer: true,
    replacer: ReplacerSpeed::Fast,
};

fn settings(bypass: bool) -> DriftSettings {
    let mut s = DriftSettings::new(DriftKind::Slow);
    s.timesteps = 20;
    s.world_model_bypass = bypass;
    s
}

fn setup() -> &'static TrialSetup {
    static SETUP: OnceLock<TrialSetup> = OnceLock::new();
    SETUP.get_or_init(|| build_trial(&settings(true), 17).unwrap())
}

#[test]
fn fresh_system_is_accurate_on_its_holdout() {
    let s = setup();
    let report = forgetting_check(&s.system.ensemble, &s.system.manager, &s.holdout, &Standards::default()).unwrap();
    assert!(report.accuracy >= 0.9, "{report:?}");
    assert!(report.meets_standards);
    assert_eq!(s.stream.len(), 20);
}

#[test]
fn no_components_leaves_the_system_untouched() {
    let s = setup();
    let trace = run_drift(s, &settings(true), Components::NONE, &mut AutoApprove, true).unwrap();
    for (before, after) in s.system.ensemble.iter().zip(&trace.final_system.ensemble) {
        assert_eq!(before.train_data, after.train_data);
        assert_eq!(before.val_data, after.val_data);
        assert_eq!(before.reserved().flat_params(), after.reserved().flat_params());
        assert_eq!(before.active().flat_params(), after.active().flat_params());
    }
    assert!(trace.cycles.iter().all(|c| c.decision.is_none() && c.replaced_count == 0));
}

#[test]
fn inert_cycles_match_skipping_adaptation() {
    let s = setup();
    let with = run_drift(s, &settings(true), Components::NONE, &mut AutoApprove, true).unwrap();
    let without = run_drift(s, &settings(true), Components::NONE, &mut AutoApprove, false).unwrap();
    assert_eq!(with.step_accuracy, without.step_accuracy);
    assert_eq!(with.blocks, without.blocks);
    assert_eq!(with.decision_log, without.decision_log);
    assert_eq!(with.events.render(), without.events.render());
    assert!(without.cycles.is_empty());
}

#[test]
fn denial_blocks_every_promotion_but_active_weights_follow_drift() {
    let s = setup();
    let trace = run_drift(s, &settings(true), ADAPTIVE, &mut DenyAll, true).unwrap();
    assert!(trace.cycles.iter().all(|c| c.decision != Some(PromotionDecision::Promote)));
    assert!(trace.cycles.iter().any(|c| c.decision == Some(PromotionDecision::Reject(1))));

    let mut rng = ChaCha8Rng::seed_from_u64(40);
    let late = sample_dataset(&DomainSpec::digits(25.0, 45.0), 300, &mut rng).unwrap();
    let (mut active, mut reserved) = (0.0, 0.0);
    for (before, after) in s.system.ensemble.iter().zip(&trace.final_system.ensemble) {
        assert_eq!(before.reserved().flat_params(), after.reserved().flat_params());
        let eval = |n| evaluate_network(n, &late, None, &Standards::default(), "late").unwrap().accuracy;
        active += eval(after.active());
        reserved += eval(after.reserved());
    }
    assert!(active > reserved, "active {active} reserved {reserved}");
}

#[test]
fn logged_monitor_actions_replay() {
    let s = setup();
    let st = settings(true);
    let trace = run_drift(s, &st, ADAPTIVE, &mut AutoApprove, true).unwrap();
    let pairs = SystemMonitor::replay(st.specs, &trace.events).unwrap();
    assert_eq!(pairs.len(), trace.blocks.len());
    for (recomputed, logged) in pairs {
        assert_eq!(recomputed, logged);
    }
}

#[test]
fn runs_are_reproducible() {
    let s = setup();
    let a = run_drift(s, &settings(true), ADAPTIVE, &mut AutoApprove, true).unwrap();
    let b = run_drift(s, &settings(true), ADAPTIVE, &mut AutoApprove, true).unwrap();
    assert_eq!(a.decision_log, b.decision_log);
    let rows = |t: &acl::harness::drift::DriftTrace| t.cycles.iter().map(|c| c.csv_row()).collect::<Vec<_>>();
    assert_eq!(rows(&a), rows(&b));
}

#[test]
fn monitor_scenarios_reach_their_reactions() {
    let results = run_monitor_suite(3, false).unwrap();
    let by_name = |n| results.iter().find(|r| r.name == n).unwrap();
    assert_eq!(by_name("nominal").final_action, MonitorAction::None);
    assert_eq!(by_name("out_of_domain").final_action, MonitorAction::Shutdown);
    let forgetting = by_name("forgetting");
    assert!(forgetting.holdout_accuracy < 0.6, "{}", forgetting.holdout_accuracy);
    assert!(forgetting.final_action >= MonitorAction::TriggerRetrain);
}
