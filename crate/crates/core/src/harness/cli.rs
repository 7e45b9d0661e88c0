//! Command-line front end. Exit codes: 0 nominal, 1 error, 2 when a
//! monitor ordered a shutdown, 64 for usage errors.

use std::ffi::OsString;
use std::fs;
use std::io::{BufRead, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::adapt::{Approver, AutoApprove, DenyAll};
use crate::error::{Error, Result};
use crate::experts::EvalReport;

use super::drift::{merged_event_log, run_drift_experiment, Components, DriftExperiment, DriftKind, DriftSettings, ReplacerSpeed, DECISION_LOG_HEADER};
use super::monitor_suite::{run_monitor_suite, suite_csv};
use super::ood::{run_ood_trial, FAR_RANGE, NEAR_RANGE};
use super::plot::{line_chart, Series};
use super::worldmodel_trials::{averaged_curve, curve_csv, range_tag, WorldModelSettings, TRAINING_RANGES};
use crate::adapt::CycleSummary;

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_SHUTDOWN: i32 = 2;
pub const EXIT_USAGE: i32 = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Toggle {
    On,
    Off,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Replacer {
    Off,
    Slow,
    Fast,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Schedule {
    Fast,
    Slow,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ApproveMode {
    Auto,
    Prompt,
    Deny,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Autoencoder loss curves for the four training ranges
    Worldmodel,
    /// Confusion matrices of a 0-10° expert on near and far rotations
    ExpertOod,
    /// Ensemble serving a rotating stream with the adaptation loop
    Drift,
    /// Scripted monitor scenarios: nominal, out-of-domain, forgetting
    MonitorSuite,
    /// Every experiment with its default settings
    All,
}

#[derive(Debug, Parser)]
#[command(name = "acl", about = "Continual-learning assurance experiments on rotated digits")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    #[arg(long, global = true)]
    pub trials: Option<usize>,
    #[arg(long, global = true, value_enum)]
    pub retrainer: Option<Toggle>,
    #[arg(long, global = true, value_enum)]
    pub replacer: Option<Replacer>,
    /// Drift schedule; both schedules run when omitted
    #[arg(long, global = true, value_enum)]
    pub schedule: Option<Schedule>,
    #[arg(long, global = true, value_enum)]
    pub approve: Option<ApproveMode>,
    #[arg(long = "bypass-world-model", global = true)]
    pub bypass_world_model: bool,
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Write SVG line plots next to the CSVs
    #[arg(long, global = true)]
    pub plot: bool,
    /// Flat key = value file supplying defaults for the flags above
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
}

/// Fully resolved run settings.
#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentConfig {
    pub command: Command,
    pub seed: u64,
    pub trials: Option<usize>,
    pub retrainer: Option<bool>,
    pub replacer: Option<ReplacerSpeed>,
    pub schedule: Option<DriftKind>,
    pub approve: ApproveMode,
    pub world_model_bypass: bool,
    pub output_dir: PathBuf,
    pub plot: bool,
}

fn parse_value<T: ValueEnum>(key: &str, v: &str) -> Result<T> {
    T::from_str(v, true).map_err(|_| Error::Argument(format!("config: bad value {v:?} for {key}")))
}

fn parse_bool(key: &str, v: &str) -> Result<bool> {
    match v {
        "true" | "on" | "yes" | "1" => Ok(true),
        "false" | "off" | "no" | "0" => Ok(false),
        _ => Err(Error::Argument(format!("config: bad boolean {v:?} for {key}"))),
    }
}

/// Applies `key = value` lines from `text` to any flag not given on the
/// command line. Blank lines and `#` comments are skipped.
pub fn apply_config_file(cli: &mut Cli, text: &str) -> Result<()> {
    for (n, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (k, v) = line
            .split_once('=')
            .ok_or_else(|| Error::Argument(format!("config line {}: expected key = value", n + 1)))?;
        let (k, v) = (k.trim().replace('-', "_"), v.trim());
        match k.as_str() {
            "seed" => {
                if cli.seed.is_none() {
                    cli.seed = Some(v.parse().map_err(|_| Error::Argument(format!("config: bad seed {v:?}")))?);
                }
            }
            "trials" => {
                if cli.trials.is_none() {
                    cli.trials = Some(v.parse().map_err(|_| Error::Argument(format!("config: bad trials {v:?}")))?);
                }
            }
            "retrainer" => cli.retrainer = cli.retrainer.or(Some(parse_value(&k, v)?)),
            "replacer" => cli.replacer = cli.replacer.or(Some(parse_value(&k, v)?)),
            "schedule" => cli.schedule = cli.schedule.or(Some(parse_value(&k, v)?)),
            "approve" => cli.approve = cli.approve.or(Some(parse_value(&k, v)?)),
            "bypass_world_model" => cli.bypass_world_model |= parse_bool(&k, v)?,
            "plot" => cli.plot |= parse_bool(&k, v)?,
            "out" => {
                if cli.out.is_none() {
                    cli.out = Some(PathBuf::from(v));
                }
            }
            _ => return Err(Error::Argument(format!("config: unknown key {k:?}"))),
        }
    }
    Ok(())
}

impl ExperimentConfig {
    /// Resolves flags, the optional config file and `ACL_SEED` (which wins
    /// over `--seed`).
    pub fn resolve(mut cli: Cli, env_seed: Option<String>) -> Result<Self> {
        if let Some(path) = cli.config.clone() {
            let text = fs::read_to_string(&path)?;
            apply_config_file(&mut cli, &text)?;
        }
        let seed = match env_seed {
            Some(s) => s
                .trim()
                .parse()
                .map_err(|_| Error::Argument(format!("ACL_SEED is not an integer: {s:?}")))?,
            None => cli.seed.unwrap_or(7),
        };
        if cli.trials == Some(0) {
            return Err(Error::Argument("--trials must be >= 1".into()));
        }
        Ok(Self {
            command: cli.command,
            seed,
            trials: cli.trials,
            retrainer: cli.retrainer.map(|t| t == Toggle::On),
            replacer: cli.replacer.map(|r| match r {
                Replacer::Off => ReplacerSpeed::Off,
                Replacer::Slow => ReplacerSpeed::Slow,
                Replacer::Fast => ReplacerSpeed::Fast,
            }),
            schedule: cli.schedule.map(|s| match s {
                Schedule::Fast => DriftKind::Fast,
                Schedule::Slow => DriftKind::Slow,
            }),
            approve: cli.approve.unwrap_or(ApproveMode::Auto),
            world_model_bypass: cli.bypass_world_model,
            output_dir: cli.out.unwrap_or_else(|| PathBuf::from("acl-out")),
            plot: cli.plot,
        })
    }

    fn trials_or(&self, default: usize) -> usize {
        self.trials.unwrap_or(default)
    }
}

/// Asks on the prompt stream and reads `y`/`n` from the input at every
/// promotion decision; anything but a `y` answer (or end of input) denies.
pub struct PromptApprover<'a> {
    pub input: &'a mut dyn BufRead,
    pub prompt: &'a mut dyn Write,
}

impl Approver for PromptApprover<'_> {
    fn approval_required(&self) -> bool {
        true
    }

    fn approve(&mut self, expert_id: usize, candidate: &EvalReport, current: &EvalReport) -> bool {
        let _ = write!(
            self.prompt,
            "promote expert {expert_id}? candidate acc {:.3} conf {:.3} vs serving acc {:.3} conf {:.3} [y/n] ",
            candidate.accuracy, candidate.mean_confidence, current.accuracy, current.mean_confidence
        );
        let _ = self.prompt.flush();
        let mut line = String::new();
        match self.input.read_line(&mut line) {
            Ok(n) if n > 0 => matches!(line.trim(), "y" | "Y" | "yes"),
            _ => false,
        }
    }
}

fn write_file(path: &Path, contents: &str) -> Result<()> {
    if let Some(dir) = path.parent() {
        fs::create_dir_all(dir)?;
    }
    fs::write(path, contents)?;
    Ok(())
}

pub struct RunOutcome {
    pub shutdown: bool,
    pub written: Vec<PathBuf>,
}

struct Writer {
    root: PathBuf,
    written: Vec<PathBuf>,
}

impl Writer {
    fn put(&mut self, rel: &str, contents: &str) -> Result<()> {
        let p = self.root.join(rel);
        write_file(&p, contents)?;
        self.written.push(p);
        Ok(())
    }
}

fn run_worldmodel(cfg: &ExperimentConfig, w: &mut Writer) -> Result<()> {
    let settings = WorldModelSettings::default();
    let mut series = Vec::new();
    for range in TRAINING_RANGES {
        let curve = averaged_curve(range, cfg.trials_or(10), &settings, cfg.seed)?;
        w.put(&format!("worldmodel_{}.csv", range_tag(range)), &curve_csv(&curve))?;
        series.push(Series {
            name: format!("trained {}°", range_tag(range)),
            points: curve.iter().map(|b| ((b.bin_start + b.bin_end) / 2.0, b.mean_loss)).collect(),
            dashed: false,
        });
    }
    if cfg.plot {
        w.put(
            "worldmodel.svg",
            &line_chart("Reconstruction loss by rotation", "rotation (degrees)", "mean loss", &series),
        )?;
    }
    Ok(())
}

fn run_expert_ood(cfg: &ExperimentConfig, w: &mut Writer) -> Result<()> {
    let trials = cfg.trials_or(5);
    let mut summary = String::from("trial,range,accuracy\n");
    for k in 0..trials {
        let r = run_ood_trial(super::trial_seed(cfg.seed, "expert_ood", k))?;
        let suffix = if trials == 1 { String::new() } else { format!("_trial{k}") };
        for (range, m) in [(NEAR_RANGE, &r.near), (FAR_RANGE, &r.far)] {
            w.put(&format!("ood_{}{suffix}.csv", range_tag(range)), &m.to_csv())?;
            summary.push_str(&format!("{k},{},{:.6}\n", range_tag(range), m.accuracy()));
        }
    }
    w.put("ood_summary.csv", &summary)
}

fn approver_for<'a>(mode: ApproveMode, input: &'a mut dyn BufRead, prompt: &'a mut dyn Write) -> Box<dyn Approver + 'a> {
    match mode {
        ApproveMode::Auto => Box::new(AutoApprove),
        ApproveMode::Deny => Box::new(DenyAll),
        ApproveMode::Prompt => Box::new(PromptApprover { input, prompt }),
    }
}

fn write_drift(exp: &DriftExperiment, plot: bool, w: &mut Writer) -> Result<()> {
    let kind = exp.kind.name();
    w.put(&format!("drift_{kind}.csv"), &exp.to_csv())?;
    for (k, trial) in exp.traces.iter().enumerate() {
        for trace in trial {
            let dir = format!("drift_{kind}/{}/trial{k}", trace.components.label());
            w.put(&format!("{dir}/events.log"), &merged_event_log(trace))?;
            let mut decisions = format!("{DECISION_LOG_HEADER}\n");
            for line in &trace.decision_log {
                decisions.push_str(line);
                decisions.push('\n');
            }
            w.put(&format!("{dir}/decisions.csv"), &decisions)?;
            let mut cycles = format!("{}\n", CycleSummary::CSV_HEADER);
            for c in &trace.cycles {
                cycles.push_str(&c.csv_row());
                cycles.push('\n');
            }
            w.put(&format!("{dir}/cycles.csv"), &cycles)?;
        }
    }
    if plot {
        let mut series = Vec::new();
        for c in &exp.configs {
            let rows: Vec<_> = exp.rows_for(*c).collect();
            series.push(Series {
                name: format!("{} acc", c.label()),
                points: rows.iter().map(|r| (r.block_end as f64, r.accuracy)).collect(),
                dashed: false,
            });
            series.push(Series {
                name: format!("{} conf", c.label()),
                points: rows.iter().map(|r| (r.block_end as f64, r.confidence)).collect(),
                dashed: true,
            });
        }
        w.put(
            &format!("drift_{kind}.svg"),
            &line_chart(&format!("{kind} drift"), "timestep", "accuracy / confidence", &series),
        )?;
    }
    Ok(())
}

fn run_drift_cmd(cfg: &ExperimentConfig, approver: &mut dyn Approver, w: &mut Writer) -> Result<bool> {
    let kinds = match cfg.schedule {
        Some(k) => vec![k],
        None => vec![DriftKind::Slow, DriftKind::Fast],
    };
    let chosen = (cfg.retrainer.is_some() || cfg.replacer.is_some()).then(|| Components {
        retrainer: cfg.retrainer.unwrap_or(false),
        replacer: cfg.replacer.unwrap_or(ReplacerSpeed::Off),
    });
    let mut shutdown = false;
    for kind in kinds {
        let configs = match chosen {
            Some(c) => vec![c],
            None if kind == DriftKind::Fast => Components::fast_set(),
            None => Components::slow_set(),
        };
        let mut settings = DriftSettings::new(kind);
        settings.world_model_bypass = cfg.world_model_bypass;
        let exp = run_drift_experiment(&settings, &configs, cfg.trials_or(3), cfg.seed, approver)?;
        shutdown |= exp.shutdown();
        write_drift(&exp, cfg.plot, w)?;
    }
    Ok(shutdown)
}

fn run_suite(cfg: &ExperimentConfig, w: &mut Writer) -> Result<bool> {
    let results = run_monitor_suite(super::trial_seed(cfg.seed, "monitor_suite", 0), cfg.world_model_bypass)?;
    w.put("monitor_suite.csv", &suite_csv(&results))?;
    for r in &results {
        w.put(&format!("monitor_suite/{}.log", r.name), &r.log.render())?;
    }
    Ok(results.iter().any(|r| r.final_action == crate::monitors::MonitorAction::Shutdown))
}

/// Runs the configured experiment, writing outputs under `output_dir`.
pub fn run(cfg: &ExperimentConfig, input: &mut dyn BufRead, prompt: &mut dyn Write) -> Result<RunOutcome> {
    let mut w = Writer {
        root: cfg.output_dir.clone(),
        written: Vec::new(),
    };
    fs::create_dir_all(&w.root)?;
    let mut approver = approver_for(cfg.approve, input, prompt);
    let mut shutdown = false;
    match cfg.command {
        Command::Worldmodel => run_worldmodel(cfg, &mut w)?,
        Command::ExpertOod => run_expert_ood(cfg, &mut w)?,
        Command::Drift => shutdown |= run_drift_cmd(cfg, approver.as_mut(), &mut w)?,
        Command::MonitorSuite => shutdown |= run_suite(cfg, &mut w)?,
        Command::All => {
            run_worldmodel(cfg, &mut w)?;
            run_expert_ood(cfg, &mut w)?;
            shutdown |= run_drift_cmd(cfg, approver.as_mut(), &mut w)?;
            shutdown |= run_suite(cfg, &mut w)?;
        }
    }
    Ok(RunOutcome {
        shutdown,
        written: w.written,
    })
}

/// Parses `args` (program name first) and runs; returns the exit code.
pub fn main_with<I, T>(args: I, env_seed: Option<String>, input: &mut dyn BufRead, prompt: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    let outcome = ExperimentConfig::resolve(cli, env_seed).and_then(|cfg| run(&cfg, input, prompt));
    match outcome {
        Ok(o) if o.shutdown => EXIT_SHUTDOWN,
        Ok(_) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(prompt, "error: {e}");
            EXIT_ERROR
        }
    }
}
