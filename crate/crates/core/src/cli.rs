//! Command-line front end.
//!
//! Exit status: 0 on success, 1 when a checked claim fails, 2 on usage,
//! I/O or cap errors. Players and machines are 1-based on the command line.

use std::fmt::Write as _;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::dynamics::{check_convergence_theorems, random_starts, run_br};
use crate::error::GameError;
use crate::game::{CostWeights, Evaluator, GameKind, Instance, State};
use crate::instances::{parse_instance, write_instance, InstanceSpec, RandomSpec};
use crate::oracle::{quality_ratio, Oracle, OracleConfig};
use crate::rational::{format_rational, parse_rational, Rational};
use crate::report::{
    self, large_n_experiment, reproduce_named_examples, reproduce_table1, strong_nash_search,
    BoundSense, TableConfig, VerdictReport, NAMED_MAX_STATES,
};
use crate::smoothness::{
    check_nice, check_opt_lower_bounds, check_semi_smooth, deviation_profile,
    max_rho_over_pure_sigmas, table1_for, SmoothnessParams,
};

#[derive(Parser, Debug)]
#[command(
    name = "conflict-games",
    version,
    about = "Exact equilibrium analysis for assignment games with conflicts and friendships",
    arg_required_else_help = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[command(flatten)]
    common: Common,
}

#[derive(Args, Debug)]
struct Common {
    /// Instance document to load.
    #[arg(long, global = true, conflicts_with = "generator")]
    instance: Option<String>,

    #[command(flatten)]
    gen: GenArgs,

    #[arg(long, global = true, default_value_t = 7)]
    seed: u64,

    /// Write output here instead of standard output.
    #[arg(long, global = true)]
    out: Option<String>,

    /// Cap on m^n for every enumeration.
    #[arg(long, global = true)]
    max_states: Option<u64>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Worker threads (default: machine parallelism).
    #[arg(long, global = true)]
    threads: Option<usize>,
}

#[derive(Args, Debug)]
struct GenArgs {
    /// Named generator.
    #[arg(long = "gen", global = true, value_enum)]
    generator: Option<Generator>,
    #[arg(long, global = true)]
    m: Option<usize>,
    #[arg(long, global = true)]
    n: Option<usize>,
    /// Rational, e.g. 1/10.
    #[arg(long, global = true)]
    eps: Option<String>,
    #[arg(long, global = true)]
    alpha: Option<String>,
    #[arg(long, global = true)]
    beta: Option<String>,
    #[arg(long, global = true)]
    gamma: Option<String>,
    /// Game kind for random instances.
    #[arg(long, global = true)]
    kind: Option<String>,
    /// Edge probability for random instances.
    #[arg(long, global = true)]
    edge_prob: Option<String>,
    /// Random sharing instances get edge weights.
    #[arg(long, global = true)]
    weighted_edges: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Generator {
    BwcMultipartite,
    BwfCliques,
    BwcfLower,
    Path4,
    SwcPos,
    SwfNostrong,
    MaxcutEdge,
    Random,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Write a generated instance document.
    Gen,
    /// Values, social value and potential of one state.
    Eval {
        /// Comma-separated machines, e.g. 1,2,2,1.
        #[arg(long)]
        state: String,
    },
    /// Optimum, pure and strong NE, PoA, PoS and strong PoA.
    Enumerate,
    /// Best-response dynamics trace, or the convergence checks with --check.
    Dynamics {
        /// Start state; defaults to a seeded random state.
        #[arg(long, conflicts_with = "worst_start")]
        start: Option<String>,
        /// Start from the socially worst state.
        #[arg(long)]
        worst_start: bool,
        #[arg(long)]
        max_steps: Option<usize>,
        #[arg(long)]
        check: bool,
        #[arg(long, default_value = "1/10")]
        quality_eps: String,
        #[arg(long, default_value_t = 10)]
        trials: usize,
    },
    /// Semi-smoothness, niceness and lower-bound checks.
    Smoothness {
        /// Defaults to the table value for the instance.
        #[arg(long, requires = "mu")]
        lambda: Option<String>,
        #[arg(long, requires = "lambda")]
        mu: Option<String>,
        /// Also bracket the best ratio over pure deviation profiles.
        #[arg(long)]
        pure_sigma: bool,
    },
    /// Worst coarse correlated equilibrium by linear programming.
    Cce,
    /// Reproduction battery.
    Reproduce {
        #[arg(long)]
        named: bool,
        #[arg(long)]
        table: bool,
        /// Reported-only measurements for open questions.
        #[arg(long)]
        experiments: bool,
        #[arg(long, default_value_t = 20)]
        trials: usize,
        #[arg(long, default_value_t = 5)]
        max_n: usize,
        #[arg(long, default_value_t = 3)]
        max_m: usize,
    },
}

enum Failure {
    Usage(String),
    Game(GameError),
}

impl From<GameError> for Failure {
    fn from(e: GameError) -> Self {
        Failure::Game(e)
    }
}

type CliResult<T> = std::result::Result<T, Failure>;

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn rational_arg(name: &str, text: &Option<String>) -> CliResult<Option<Rational>> {
    text.as_deref()
        .map(|t| parse_rational(t).ok_or_else(|| usage(format!("--{name}: not a rational: {t:?}"))))
        .transpose()
}

fn need<T: Clone>(name: &str, v: &Option<T>) -> CliResult<T> {
    v.clone()
        .ok_or_else(|| usage(format!("--{name} is required by this generator")))
}

fn generator_spec(args: &GenArgs, seed: u64) -> CliResult<Option<InstanceSpec>> {
    let Some(g) = args.generator else {
        return Ok(None);
    };
    let eps = rational_arg("eps", &args.eps)?;
    let weights = || -> CliResult<CostWeights> {
        Ok(CostWeights::new(
            need("alpha", &rational_arg("alpha", &args.alpha)?)?,
            need("beta", &rational_arg("beta", &args.beta)?)?,
            need("gamma", &rational_arg("gamma", &args.gamma)?)?,
        ))
    };
    Ok(Some(match g {
        Generator::BwcMultipartite => InstanceSpec::BwcMultipartite { m: need("m", &args.m)? },
        Generator::BwfCliques => InstanceSpec::BwfCliques { m: need("m", &args.m)? },
        Generator::BwcfLower => InstanceSpec::BwcfLower {
            m: need("m", &args.m)?,
            weights: weights()?,
        },
        Generator::Path4 => InstanceSpec::Path4,
        Generator::SwcPos => InstanceSpec::SwcPos {
            m: need("m", &args.m)?,
            eps: need("eps", &eps)?,
        },
        Generator::SwfNostrong => InstanceSpec::SwfNoStrong { eps: need("eps", &eps)? },
        Generator::MaxcutEdge => InstanceSpec::MaxCutEdge,
        Generator::Random => {
            let kind: GameKind = need("kind", &args.kind)?.parse()?;
            let p = need("edge-prob", &rational_arg("edge-prob", &args.edge_prob)?)?;
            let mut spec = RandomSpec::new(need("n", &args.n)?, need("m", &args.m)?, kind, p, seed)
                .with_weighted_edges(args.weighted_edges);
            if args.alpha.is_some() || args.beta.is_some() || args.gamma.is_some() {
                spec = spec.with_weights(weights()?);
            }
            InstanceSpec::Random(spec)
        }
    }))
}

struct Loaded {
    inst: Instance,
    label: String,
}

fn load(common: &Common) -> CliResult<Loaded> {
    if let Some(path) = &common.instance {
        let text = std::fs::read_to_string(path)
            .map_err(|e| GameError::Io(format!("cannot read {path}: {e}")))?;
        let inst = parse_instance(&text)?;
        return Ok(Loaded {
            inst,
            label: path.clone(),
        });
    }
    match generator_spec(&common.gen, common.seed)? {
        Some(spec) => Ok(Loaded {
            inst: spec.build()?,
            label: spec.to_string(),
        }),
        None => Err(usage("give --instance <path> or a generator via --gen")),
    }
}

fn oracle_config(common: &Common) -> OracleConfig {
    let mut cfg = OracleConfig::default();
    if let Some(cap) = common.max_states {
        cfg.max_states = cap;
        cfg.max_lp_states = cfg.max_lp_states.min(cap);
    }
    cfg
}

fn verdict_output(rows: &[VerdictReport], format: Format) -> CliResult<String> {
    Ok(match format {
        Format::Csv => {
            let mut buf = Vec::new();
            report::write_csv(rows, &mut buf)?;
            String::from_utf8(buf).expect("csv is utf-8")
        }
        Format::Text => report::render_text(rows),
    })
}

fn list_rows(out: &mut String, tag: &str, list: &[(State, Rational)]) {
    for (s, v) in list {
        let _ = writeln!(out, "{tag},\"{s}\",{}", format_rational(v));
    }
}

fn cmd_enumerate(l: &Loaded, cfg: OracleConfig, format: Format) -> CliResult<String> {
    let rep = Oracle::new(&l.inst).with_config(cfg).report()?;
    let mut out = String::new();
    match format {
        Format::Csv => {
            out.push_str("row,state,value\n");
            list_rows(&mut out, "optimum", std::slice::from_ref(&rep.optimum));
            list_rows(&mut out, "worst_pure_ne", std::slice::from_ref(&rep.worst_ne));
            list_rows(&mut out, "pure_ne", &rep.pure_ne);
            if let Some(strong) = &rep.strong_ne {
                list_rows(&mut out, "strong_ne", strong);
            }
            let _ = writeln!(out, "poa,,{}", format_rational(&rep.poa));
            let _ = writeln!(out, "pos,,{}", format_rational(&rep.pos));
            let _ = writeln!(out, "strong_poa,,{}", rep.strong_poa);
        }
        Format::Text => {
            let _ = writeln!(out, "instance: {}", l.label);
            let (s, v) = &rep.optimum;
            let _ = writeln!(out, "optimum: {s} value {}", format_rational(v));
            let (s, v) = &rep.worst_ne;
            let _ = writeln!(out, "worst pure NE: {s} value {}", format_rational(v));
            let _ = writeln!(out, "pure NE: {}", rep.pure_ne.len());
            for (s, v) in &rep.pure_ne {
                let _ = writeln!(out, "  {s} {}", format_rational(v));
            }
            match &rep.strong_ne {
                Some(strong) => {
                    let _ = writeln!(out, "strong NE: {}", strong.len());
                    for (s, v) in strong {
                        let _ = writeln!(out, "  {s} {}", format_rational(v));
                    }
                }
                None => {
                    let _ = writeln!(out, "strong NE: not computed (player cap)");
                }
            }
            let _ = writeln!(out, "PoA: {}", format_rational(&rep.poa));
            let _ = writeln!(out, "PoS: {}", format_rational(&rep.pos));
            let _ = writeln!(out, "strong PoA: {}", rep.strong_poa);
        }
    }
    Ok(out)
}

fn cmd_eval(l: &Loaded, state: &str) -> CliResult<String> {
    let s = State::parse_one_based(state)?;
    s.validate(&l.inst)?;
    let ev = Evaluator::new(&l.inst, &s);
    let mut out = String::new();
    let _ = writeln!(out, "state: {s}");
    for i in 0..l.inst.n() {
        let (k, g) = ev.best_response(i);
        let _ = writeln!(
            out,
            "player {}: value {} best response {} gain {}",
            i + 1,
            format_rational(&ev.value(i)),
            k + 1,
            format_rational(&g)
        );
    }
    let _ = writeln!(out, "social: {}", format_rational(&ev.social()));
    let _ = writeln!(out, "potential: {}", format_rational(&ev.potential()));
    let _ = writeln!(out, "pure NE: {}", ev.is_pure_nash());
    Ok(out)
}

fn cmd_cce(l: &Loaded, cfg: OracleConfig, format: Format) -> CliResult<String> {
    let oracle = Oracle::new(&l.inst).with_config(cfg);
    let sol = oracle.worst_cce()?;
    let opt = oracle.optimum()?.1;
    let ratio = quality_ratio(l.inst.kind().orientation(), &opt, &sol.value)?;
    let mut out = String::new();
    match format {
        Format::Csv => {
            out.push_str("state,probability\n");
            for (s, q) in &sol.distribution {
                let _ = writeln!(out, "\"{s}\",{}", crate::rational::format_ratio_form(q));
            }
        }
        Format::Text => {
            let _ = writeln!(out, "instance: {}", l.label);
            let _ = writeln!(out, "worst CCE value: {}", format_rational(&sol.value));
            let _ = writeln!(out, "optimum: {}", format_rational(&opt));
            let _ = writeln!(out, "ratio: {}", format_rational(&ratio));
            if let Ok(t) = table1_for(&l.inst) {
                let _ = writeln!(out, "table bound: {}", format_rational(&t.pota));
            }
            for (s, q) in &sol.distribution {
                let _ = writeln!(out, "  {s} {}", format_rational(q));
            }
        }
    }
    Ok(out)
}

fn cmd_smoothness(
    l: &Loaded,
    cfg: OracleConfig,
    lambda: &Option<String>,
    mu: &Option<String>,
    pure_sigma: bool,
) -> CliResult<Vec<VerdictReport>> {
    let inst = &l.inst;
    let orient = inst.kind().orientation();
    let params = match (rational_arg("lambda", lambda)?, rational_arg("mu", mu)?) {
        (Some(a), Some(b)) => SmoothnessParams::new(orient, a, b)?,
        _ => table1_for(inst)?.params,
    };
    let oracle = Oracle::new(inst).with_config(cfg);
    let mut rows = Vec::new();
    let semi = check_semi_smooth(&oracle, &params, &deviation_profile(inst))?;
    rows.push(VerdictReport::new(
        "SemiSmooth",
        format!("{} (worst {})", l.label, semi.worst_state),
        Rational::from_integer(0.into()),
        semi.slack,
        BoundSense::AtLeast,
    ));
    let nice = check_nice(&oracle, &params)?;
    rows.push(VerdictReport::new(
        "Nice",
        format!("{} (worst {})", l.label, nice.worst_state),
        Rational::from_integer(0.into()),
        nice.slack,
        BoundSense::AtLeast,
    ));
    for c in check_opt_lower_bounds(&oracle)? {
        let row = VerdictReport::new(
            format!("OptLowerBound:{}", c.name),
            l.label.clone(),
            c.bound.clone(),
            c.measured.clone(),
            BoundSense::AtLeast,
        );
        rows.push(if c.asserted { row } else { row.soft() });
    }
    if pure_sigma {
        let (sigma, r) = max_rho_over_pure_sigmas(&oracle)?;
        rows.push(
            VerdictReport::new(
                "PureSigmaRho",
                format!("{} (sigma {sigma}, upper {})", l.label, format_rational(&r.hi)),
                params.rho.clone(),
                r.lo,
                BoundSense::AtLeast,
            )
            .soft(),
        );
    }
    Ok(rows)
}

fn cmd_dynamics(
    l: &Loaded,
    cfg: OracleConfig,
    common: &Common,
    start: &Option<String>,
    worst_start: bool,
    max_steps: Option<usize>,
) -> CliResult<String> {
    let inst = &l.inst;
    let oracle = Oracle::new(inst).with_config(cfg);
    let s0 = match start {
        Some(text) => State::parse_one_based(text)?,
        None if worst_start => oracle.pessimum()?.0,
        None => random_starts(&oracle, 1, common.seed)?.swap_remove(0),
    };
    let budget = match max_steps {
        Some(b) => b,
        None => oracle.state_count()?,
    };
    let trace = run_br(inst, &s0, budget)?;
    Ok(match common.format {
        Format::Csv => {
            let mut buf = Vec::new();
            trace.write_csv(&mut buf)?;
            String::from_utf8(buf).expect("csv is utf-8")
        }
        Format::Text => {
            let mut out = String::new();
            let _ = writeln!(out, "instance: {}", l.label);
            let _ = writeln!(out, "start: {} social {}", trace.start, format_rational(&trace.start_social));
            for st in &trace.steps {
                let _ = writeln!(
                    out,
                    "{}: player {} {} -> {} gain {} potential {} social {}",
                    st.step,
                    st.mover + 1,
                    st.from + 1,
                    st.to + 1,
                    format_rational(&st.gain),
                    format_rational(&st.potential),
                    format_rational(&st.social)
                );
            }
            let _ = writeln!(
                out,
                "end: {} after {} steps{}",
                trace.end,
                trace.len(),
                if trace.truncated { " (step budget exhausted)" } else { "" }
            );
            out
        }
    })
}

fn run(cli: &Cli) -> CliResult<(String, bool)> {
    let common = &cli.common;
    let cfg = oracle_config(common);
    let as_rows = |rows: Vec<VerdictReport>| -> CliResult<(String, bool)> {
        let failed = rows.iter().any(VerdictReport::failed);
        Ok((verdict_output(&rows, common.format)?, failed))
    };
    match &cli.command {
        Command::Gen => {
            let l = load(common)?;
            Ok((write_instance(&l.inst), false))
        }
        Command::Eval { state } => Ok((cmd_eval(&load(common)?, state)?, false)),
        Command::Enumerate => Ok((cmd_enumerate(&load(common)?, cfg, common.format)?, false)),
        Command::Cce => Ok((cmd_cce(&load(common)?, cfg, common.format)?, false)),
        Command::Smoothness {
            lambda,
            mu,
            pure_sigma,
        } => as_rows(cmd_smoothness(&load(common)?, cfg, lambda, mu, *pure_sigma)?),
        Command::Dynamics {
            start,
            worst_start,
            max_steps,
            check,
            quality_eps,
            trials,
        } => {
            let l = load(common)?;
            if *check {
                let eps = parse_rational(quality_eps)
                    .ok_or_else(|| usage(format!("--quality-eps: not a rational: {quality_eps:?}")))?;
                let oracle = Oracle::new(&l.inst).with_config(cfg);
                let mut rows = check_convergence_theorems(&oracle, &eps, *trials, common.seed)?;
                for r in &mut rows {
                    r.instance = l.label.clone();
                }
                as_rows(rows)
            } else {
                Ok((cmd_dynamics(&l, cfg, common, start, *worst_start, *max_steps)?, false))
            }
        }
        Command::Reproduce {
            named,
            table,
            experiments,
            trials,
            max_n,
            max_m,
        } => {
            let both = !named && !table && !experiments;
            let within = |what: &'static str, n: usize, m: usize| -> CliResult<()> {
                match crate::oracle::state_count(n, m) {
                    Some(c) if c <= cfg.max_states => Ok(()),
                    _ => Err(Failure::Game(GameError::CapExceeded {
                        what,
                        needed: format!("{m}^{n} states"),
                        limit: cfg.max_states,
                    })),
                }
            };
            let mut rows = Vec::new();
            if *named || both {
                if NAMED_MAX_STATES > cfg.max_states {
                    return Err(Failure::Game(GameError::CapExceeded {
                        what: "named battery",
                        needed: format!("{NAMED_MAX_STATES} states"),
                        limit: cfg.max_states,
                    }));
                }
                rows.extend(reproduce_named_examples(common.seed)?);
            }
            if *table || both {
                within("table reproduction", *max_n, *max_m)?;
                let tc = TableConfig {
                    max_n: *max_n,
                    max_m: *max_m,
                    trials: *trials,
                    seed: common.seed,
                    max_lp_states: TableConfig::default().max_lp_states.min(cfg.max_lp_states),
                };
                rows.extend(reproduce_table1(&tc)?);
            }
            if *experiments {
                within("large-n experiment", 8, 2)?;
                within("strong NE search", 5, 3)?;
                rows.extend(large_n_experiment(2, 8, 4, common.seed)?);
                rows.extend(strong_nash_search(3, 5, 10, common.seed)?);
            }
            as_rows(rows)
        }
    }
}

/// Runs one invocation, writing to the given streams; returns the exit code.
pub fn dispatch_to<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = stdout.write_all(text.as_bytes());
                    0
                }
                _ => {
                    let _ = stderr.write_all(text.as_bytes());
                    2
                }
            };
        }
    };
    let outcome = match cli.common.threads {
        Some(t) => match rayon::ThreadPoolBuilder::new().num_threads(t).build() {
            Ok(pool) => pool.install(|| run(&cli)),
            Err(e) => Err(usage(format!("--threads: {e}"))),
        },
        None => run(&cli),
    };
    match outcome {
        Ok((text, failed)) => {
            let written = match &cli.common.out {
                Some(path) => std::fs::write(path, text.as_bytes())
                    .map_err(|e| format!("cannot write {path}: {e}")),
                None => stdout.write_all(text.as_bytes()).map_err(|e| e.to_string()),
            };
            match written {
                Ok(()) => i32::from(failed),
                Err(msg) => {
                    let _ = writeln!(stderr, "error: {msg}");
                    2
                }
            }
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            2
        }
        Err(Failure::Game(e)) => {
            let _ = writeln!(stderr, "error: {e}");
            2
        }
    }
}

/// [`dispatch_to`] on the process streams.
pub fn dispatch<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    dispatch_to(argv, &mut stdout.lock(), &mut stderr.lock())
}
