//! End-to-end acceptance checks. Each test writes one `PASS`/`FAIL` line to
//! stderr (uncaptured) before asserting.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::Path;
use std::process::Command;
use std::sync::{Mutex, MutexGuard, OnceLock};
use std::time::{Duration, Instant};

use acl::adapt::AutoApprove;
use acl::datagen::{Image, IMAGE_PIXELS};
use acl::experts::{evaluate_promotion, EvalReport, PromotionDecision, PromotionFlags, Standards};
use acl::harness::drift::{run_drift_experiment, Components, DriftExperiment, DriftKind, DriftSettings};
use acl::harness::ood::run_ood_trial;
use acl::harness::trial_seed;
use acl::harness::worldmodel_trials::{averaged_curve, WorldModelSettings};
use acl::numcore::{gradient_check, random_batch, Conv2d, Dense, Layer, Network, TargetSpec};
use acl::trust::{emd_distance, softmax_stats};
use acl::worldmodel::{coefficient_of_variation, pearson, spearman};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SEED: u64 = 7;

/// One check at a time, so each measured runtime is its own.
fn serial() -> MutexGuard<'static, ()> {
    static LOCK: Mutex<()> = Mutex::new(());
    LOCK.lock().unwrap_or_else(|p| p.into_inner())
}

fn report(name: &str, pass: bool, detail: &str) {
    let line = format!("ACCEPTANCE {} {name}: {detail}\n", if pass { "PASS" } else { "FAIL" });
    let _ = std::io::stderr().write_all(line.as_bytes());
    assert!(pass, "{name}: {detail}");
}

fn within(elapsed: Duration, minutes: u64) -> bool {
    elapsed < Duration::from_secs(60 * minutes)
}

#[test]
fn gradient_check_on_random_networks() {
    let _g = serial();
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut worst: f64 = 0.0;
    let mut checked = 0;
    for i in 0..20 {
        let (net, batch) = if i % 2 == 0 {
            let c1 = rng.random_range(1..=3);
            let c2 = rng.random_range(1..=3);
            let side: usize = rng.random_range(7..=9);
            let net = Network::new(vec![
                Layer::Conv2d(Conv2d::new(1, c1, 3, 1, &mut rng)),
                Layer::Relu,
                Layer::Conv2d(Conv2d::new(c1, c2, 3, 2, &mut rng)),
                Layer::Relu,
                Layer::Flatten,
                Layer::Dense(Dense::new(c2 * ((side - 2 - 3) / 2 + 1).pow(2), 4, &mut rng)),
            ]);
            let batch = random_batch(&[1, side, side], TargetSpec::Classes(4), 4, &mut rng);
            (net, batch)
        } else {
            let width = rng.random_range(6..=12);
            let code = rng.random_range(2..=4);
            let net = Network::new(vec![
                Layer::Flatten,
                Layer::Dense(Dense::new(width, code, &mut rng)),
                Layer::Relu,
                Layer::Dense(Dense::new(code, width, &mut rng)),
                Layer::Sigmoid,
            ]);
            let batch = random_batch(&[width], TargetSpec::Values(width), 4, &mut rng);
            (net, batch)
        };
        let r = gradient_check(&net, &batch, 1e-5).expect("gradient check");
        worst = worst.max(r.max_relative_error);
        checked += r.checked;
    }
    let elapsed = start.elapsed();
    let pass = worst < 1e-4 && checked > 0 && within(elapsed, 1);
    report(
        "gradient correctness",
        pass,
        &format!("max relative error {worst:.3e} over {checked} parameters (< 1e-4), {elapsed:.1?}"),
    );
}

#[test]
fn world_model_separation() {
    let _g = serial();
    let start = Instant::now();
    let settings = WorldModelSettings::default();
    let curve = |r| averaged_curve(r, 10, &settings, SEED).expect("curve");
    let narrow = curve((0.0, 10.0));
    let wide = curve((0.0, 100.0));
    let band = curve((40.0, 50.0));
    let elapsed = start.elapsed();

    let distance: Vec<f64> = (0..narrow.len()).map(|i| i as f64).collect();
    let means: Vec<f64> = narrow.iter().map(|b| b.mean_loss).collect();
    let rho = spearman(&distance, &means);
    let argmin = band
        .iter()
        .enumerate()
        .min_by(|a, b| a.1.mean_loss.total_cmp(&b.1.mean_loss))
        .map(|(i, _)| i)
        .expect("bins");
    let (cv_wide, cv_narrow) = (coefficient_of_variation(&wide), coefficient_of_variation(&narrow));
    let pass = rho >= 0.9 && band[argmin].bin_start == 40.0 && cv_wide < 0.5 * cv_narrow && within(elapsed, 10);
    report(
        "world-model separation",
        pass,
        &format!(
            "spearman {rho:.3} (>= 0.9); 40-50 model minimum at bin {}-{}; cv 0-100 {cv_wide:.3} vs 0-10 {cv_narrow:.3} (< half); {elapsed:.1?}",
            band[argmin].bin_start, band[argmin].bin_end
        ),
    );
}

#[test]
fn expert_out_of_distribution_accuracy() {
    let _g = serial();
    let start = Instant::now();
    let (mut near, mut far) = (0.0, 0.0);
    for k in 0..5 {
        let r = run_ood_trial(trial_seed(SEED, "expert_ood", k)).expect("ood trial");
        assert_eq!(r.near.total(), 1000);
        assert_eq!(r.far.total(), 1000);
        near += r.near.accuracy() / 5.0;
        far += r.far.accuracy() / 5.0;
    }
    let elapsed = start.elapsed();
    let pass = near >= 0.90 && far <= 0.40 && within(elapsed, 5);
    report(
        "expert OOD",
        pass,
        &format!("10-20° accuracy {near:.3} (>= 0.90), 90-120° accuracy {far:.3} (<= 0.40), {elapsed:.1?}"),
    );
}

fn slow_drift() -> &'static (DriftExperiment, Duration) {
    static RUN: OnceLock<(DriftExperiment, Duration)> = OnceLock::new();
    RUN.get_or_init(|| {
        let start = Instant::now();
        let exp = run_drift_experiment(
            &DriftSettings::new(DriftKind::Slow),
            &Components::slow_set(),
            3,
            SEED,
            &mut AutoApprove,
        )
        .expect("slow drift");
        (exp, start.elapsed())
    })
}

fn mean_accuracy(exp: &DriftExperiment, c: Components, keep: impl Fn(&acl::harness::drift::SummaryRow) -> bool) -> f64 {
    let rows: Vec<f64> = exp.rows_for(c).filter(|r| keep(r)).map(|r| r.accuracy).collect();
    rows.iter().sum::<f64>() / rows.len() as f64
}

#[test]
fn slow_drift_envelope_extension() {
    let _g = serial();
    let (exp, elapsed) = slow_drift();
    let [adaptive, slow, none] = <[Components; 3]>::try_from(Components::slow_set()).expect("three configs");
    let past_30 = |r: &acl::harness::drift::SummaryRow| r.start_angle >= 30.0;
    let gain = mean_accuracy(exp, adaptive, past_30) - mean_accuracy(exp, none, past_30);
    let late_alert = |c: Components| exp.rows_for(c).any(|r| r.block_start >= 50 && r.alerts > 0);
    let pass = gain >= 0.15 && late_alert(none) && late_alert(slow) && within(*elapsed, 15);
    report(
        "slow-drift envelope extension",
        pass,
        &format!(
            "retrainer+fast minus none past 30°: {:+.1} points (>= 15); late alert none={} retrainer+slow={}; {elapsed:.1?}",
            gain * 100.0,
            late_alert(none),
            late_alert(slow)
        ),
    );
}

#[test]
fn fast_drift_null_result() {
    let _g = serial();
    let start = Instant::now();
    let configs = Components::fast_set();
    let exp = run_drift_experiment(&DriftSettings::new(DriftKind::Fast), &configs, 3, SEED, &mut AutoApprove)
        .expect("fast drift");
    let elapsed = start.elapsed();
    let later = |r: &acl::harness::drift::SummaryRow| r.block_start >= 30;
    let baseline = mean_accuracy(&exp, Components::NONE, later);
    let worst = configs
        .iter()
        .filter(|c| **c != Components::NONE)
        .map(|c| (c.label(), mean_accuracy(&exp, *c, later) - baseline))
        .max_by(|a, b| a.1.total_cmp(&b.1))
        .expect("adaptive configs");
    let pass = worst.1 <= 0.10 && within(elapsed, 15);
    report(
        "fast-drift null result",
        pass,
        &format!(
            "largest gain over baseline in later blocks: {} {:+.1} points (<= 10); {elapsed:.1?}",
            worst.0,
            worst.1 * 100.0
        ),
    );
}

#[test]
fn confidence_tracks_accuracy() {
    let _g = serial();
    let (exp, _) = slow_drift();
    let conf: Vec<f64> = exp.rows.iter().map(|r| r.confidence).collect();
    let acc: Vec<f64> = exp.rows.iter().map(|r| r.accuracy).collect();
    let r = pearson(&conf, &acc);
    report(
        "confidence-accuracy correlation",
        r >= 0.5,
        &format!("pearson {r:.3} over {} slow-drift blocks (>= 0.5)", conf.len()),
    );
}

/// Written independently of the library: a condition list, first failure wins.
fn promotion_oracle(req: bool, approved: bool, maximizing: bool, cand_ok: bool, cur_ok: bool, better: bool) -> PromotionDecision {
    let conditions = [!req || approved, cand_ok, !cur_ok || (maximizing && better)];
    match conditions.iter().position(|c| !c) {
        Some(i) => PromotionDecision::Reject(i as u8 + 1),
        None => PromotionDecision::Promote,
    }
}

#[test]
fn promotion_truth_table() {
    let _g = serial();
    let standards = Standards::default();
    let mut mismatches = Vec::new();
    let mut cases = 0;
    for bits in 0u8..64 {
        let b = |i: u8| bits & (1 << i) != 0;
        let (req, approved, maximizing, cand_ok, cur_ok, better) = (b(0), b(1), b(2), b(3), b(4), b(5));
        let conf = |ok: bool| if ok { 0.6 } else { 0.1 };
        let candidate = EvalReport::new(if better { 0.9 } else { 0.8 }, conf(cand_ok), &standards, "holdout");
        let current = EvalReport::new(0.85, conf(cur_ok), &standards, "holdout");
        assert_eq!(candidate.meets_standards, cand_ok);
        assert_eq!(current.meets_standards, cur_ok);
        let flags = PromotionFlags {
            human_approval_required: req,
            human_approved: approved,
            performance_maximizing: maximizing,
        };
        let got = evaluate_promotion(&candidate, &current, &flags).expect("same dataset");
        let want = promotion_oracle(req, approved, maximizing, cand_ok, cur_ok, better);
        cases += 1;
        if got != want {
            mismatches.push(format!("{bits:06b}: got {got:?}, want {want:?}"));
        }
    }
    report(
        "promotion truth table",
        mismatches.is_empty() && cases == 64,
        &format!("{} of {cases} combinations match {:?}", cases - mismatches.len(), mismatches),
    );
}

fn random_image(rng: &mut ChaCha8Rng) -> Image {
    let px = (0..IMAGE_PIXELS)
        .map(|_| if rng.random::<f64>() < 0.3 { rng.random() } else { 0.0 })
        .collect();
    Image::from_pixels(px).expect("valid pixels")
}

#[test]
fn trust_metric_identities() {
    let _g = serial();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut failures = Vec::new();

    let (_, _, h) = softmax_stats(&[0.1; 10]).expect("uniform");
    if (h - 10f64.ln()).abs() > 1e-9 {
        failures.push(format!("uniform entropy {h}"));
    }
    for _ in 0..200 {
        let raw: Vec<f64> = (0..10).map(|_| rng.random::<f64>() + 1e-3).collect();
        let sum: f64 = raw.iter().sum();
        let p: Vec<f64> = raw.iter().map(|v| v / sum).collect();
        let (margin, vr, _) = softmax_stats(&p).expect("stats");
        let top = p.iter().copied().fold(0.0, f64::max);
        if vr != 1.0 - top {
            failures.push(format!("variation ratio {vr} != 1 - {top}"));
        }
        if !(0.0..=top).contains(&margin) {
            failures.push(format!("margin {margin} outside [0, {top}]"));
        }
    }
    for _ in 0..200 {
        let (a, b, c) = (random_image(&mut rng), random_image(&mut rng), random_image(&mut rng));
        let d = |x: &Image, y: &Image| emd_distance(x, y).expect("emd");
        if d(&a, &a) != 0.0 {
            failures.push("emd(a, a) != 0".into());
        }
        if d(&a, &b) != d(&b, &a) {
            failures.push("emd asymmetric".into());
        }
        if d(&a, &c) > d(&a, &b) + d(&b, &c) + 1e-12 {
            failures.push("triangle inequality".into());
        }
    }
    report(
        "trust-metric identities",
        failures.is_empty(),
        &format!("entropy, variation ratio, margin, emd identity/symmetry/triangle: {} failures {:?}", failures.len(), failures.iter().take(3).collect::<Vec<_>>()),
    );
}

fn tree(root: &Path) -> BTreeMap<String, Vec<u8>> {
    let mut files = BTreeMap::new();
    let mut stack = vec![root.to_path_buf()];
    while let Some(dir) = stack.pop() {
        for entry in std::fs::read_dir(&dir).expect("read dir") {
            let path = entry.expect("entry").path();
            if path.is_dir() {
                stack.push(path);
            } else {
                let rel = path.strip_prefix(root).expect("under root").to_string_lossy().into_owned();
                files.insert(rel, std::fs::read(&path).expect("read file"));
            }
        }
    }
    files
}

#[test]
fn cli_all_is_deterministic() {
    let _g = serial();
    let dirs = [tempfile::tempdir().expect("tempdir"), tempfile::tempdir().expect("tempdir")];
    let mut codes = Vec::new();
    for d in &dirs {
        let status = Command::new(env!("CARGO_BIN_EXE_acl"))
            .args(["all", "--seed", "7", "--out"])
            .arg(d.path())
            .env_remove("ACL_SEED")
            .status()
            .expect("run acl");
        codes.push(status.code());
    }
    let (a, b) = (tree(dirs[0].path()), tree(dirs[1].path()));
    let differing: Vec<&String> = a.keys().filter(|k| b.get(*k) != a.get(*k)).collect();
    let pass = !a.is_empty() && a.len() == b.len() && differing.is_empty() && codes[0] == codes[1];
    report(
        "determinism",
        pass,
        &format!("{} files each, {} differ, exit codes {:?}", a.len(), differing.len(), codes),
    );
}
