mod cache;
mod commands;
mod report;

use std::io::Read as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use branch_forge::catalog::{builtin, parse_group_def};
use branch_forge::completions::KernelOptions;
use branch_forge::{Error, GroupDef, Limits, Policy};
use clap::{Args, Parser, Subcommand};
use serde_json::json;

use cache::Cache;
use commands::Ctx;
use report::{Diagnostics, ErrorRecord, Report};

const EXIT_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_CAP: u8 = 3;

/// Groups acting on rooted trees: level quotients, word problems and
/// finite truncations of completions.
#[derive(Parser)]
#[command(name = "branch-forge", version)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Largest permutation degree built from a tree level.
    #[arg(long, global = true, default_value_t = 243)]
    max_degree: usize,
    /// Largest group enumerated element by element.
    #[arg(long, global = true, default_value_t = 2_000_000)]
    max_enum: usize,
    /// Largest transversal built for a projection kernel.
    #[arg(long, global = true, default_value_t = 1_000_000)]
    max_transversal: usize,
    /// Section depth for the word problem.
    #[arg(long, global = true, default_value_t = 20)]
    word_depth: usize,
    /// Write the structured report to this file (`-` for stdout).
    #[arg(long, global = true)]
    report: Option<PathBuf>,
    /// Add wall time and cache statistics to the report.
    #[arg(long, global = true)]
    diagnostics: bool,
}

#[derive(Args)]
struct LevelArg {
    #[arg(long)]
    level: usize,
}

#[derive(Args)]
struct LevelsArg {
    #[arg(long)]
    levels: usize,
}

#[derive(Args)]
struct NucleusArgs {
    /// Give up beyond this many states.
    #[arg(long, default_value_t = 256)]
    max_size: usize,
}

#[derive(Args)]
struct WitnessArgs {
    #[arg(long)]
    element: String,
    #[arg(long)]
    levels: usize,
}

#[derive(Args)]
struct KernelArgs {
    #[arg(long)]
    level: usize,
    /// Use the transversal computation up to this level, bounds above it.
    #[arg(long, default_value_t = 2)]
    exact_up_to: usize,
    /// Skip the chain check of the lower-bound elements.
    #[arg(long)]
    no_certify: bool,
}

#[derive(Args)]
struct PolicyArg {
    /// Decide words by depth-capped search instead of the nucleus.
    #[arg(long)]
    depth_capped: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Show a group definition.
    Info { group: String },
    /// Order of the level-n quotient.
    Order {
        group: String,
        #[command(flatten)]
        args: LevelArg,
    },
    /// Orders, stabilizer quotients and abelianizations of G_0..G_N.
    StabSeries {
        group: String,
        #[command(flatten)]
        args: LevelsArg,
    },
    /// Abelian invariants of G_1..G_N.
    AbInvariants {
        group: String,
        #[command(flatten)]
        args: LevelsArg,
    },
    /// Nucleus of a contracting group.
    Nucleus {
        group: String,
        #[command(flatten)]
        args: NucleusArgs,
    },
    /// Run a named check suite.
    Verify {
        suite: String,
        /// Check against this definition instead of the suite's group.
        #[arg(long)]
        group_file: Option<PathBuf>,
        #[command(flatten)]
        policy: PolicyArg,
    },
    /// Whether an element lies in G_n' for n = 1..N.
    Witness {
        group: String,
        #[command(flatten)]
        args: WitnessArgs,
    },
    /// Kernel of the affine truncation W_m -> G_m (ternary groups).
    Kernels {
        group: String,
        #[command(flatten)]
        args: KernelArgs,
    },
    /// Smith normal form of an integer matrix file (`-` for stdin).
    Snf {
        #[arg(long)]
        file: PathBuf,
    },
    /// Matrix of x -> (x,1,1) on the derived quotient of the Hanoi group.
    ConnectingMatrix {
        #[command(flatten)]
        policy: PolicyArg,
    },
    /// Run a group command on a definition file.
    Define {
        #[arg(long)]
        file: PathBuf,
        #[command(subcommand)]
        command: DefineCommand,
    },
}

#[derive(Subcommand)]
enum DefineCommand {
    Info,
    Order(LevelArg),
    StabSeries(LevelsArg),
    AbInvariants(LevelsArg),
    Nucleus(NucleusArgs),
    Witness(WitnessArgs),
    Kernels(KernelArgs),
}

enum GroupTask {
    Info,
    Order(usize),
    StabSeries(usize),
    AbInvariants(usize),
    Nucleus(usize),
    Witness(String, usize),
    Kernels(KernelArgs),
}

impl GroupTask {
    fn name(&self) -> &'static str {
        match self {
            GroupTask::Info => "info",
            GroupTask::Order(_) => "order",
            GroupTask::StabSeries(_) => "stab-series",
            GroupTask::AbInvariants(_) => "ab-invariants",
            GroupTask::Nucleus(_) => "nucleus",
            GroupTask::Witness(..) => "witness",
            GroupTask::Kernels(_) => "kernels",
        }
    }

    fn parameters(&self) -> serde_json::Value {
        match self {
            GroupTask::Info => json!({}),
            GroupTask::Order(n) => json!({ "level": n }),
            GroupTask::StabSeries(n) | GroupTask::AbInvariants(n) => json!({ "levels": n }),
            GroupTask::Nucleus(n) => json!({ "max_size": n }),
            GroupTask::Witness(e, n) => json!({ "element": e, "levels": n }),
            GroupTask::Kernels(k) => json!({
                "level": k.level,
                "exact_up_to": k.exact_up_to,
                "certify": !k.no_certify,
            }),
        }
    }

    fn run(self, def: &GroupDef, ctx: &mut Ctx, r: &mut Report) -> branch_forge::Result<String> {
        match self {
            GroupTask::Info => commands::info(def, r),
            GroupTask::Order(n) => commands::order(def, n, ctx, r),
            GroupTask::StabSeries(n) => commands::stab_series(def, n, ctx, r),
            GroupTask::AbInvariants(n) => commands::ab_invariants(def, n, ctx, r),
            GroupTask::Nucleus(n) => commands::nucleus_cmd(def, n, ctx, r),
            GroupTask::Witness(e, n) => commands::witness(def, &e, n, ctx, r),
            GroupTask::Kernels(k) => {
                let opts = KernelOptions {
                    exact_up_to: k.exact_up_to,
                    certify: !k.no_certify,
                };
                commands::kernels(def, k.level, opts, ctx, r)
            }
        }
    }
}

impl From<DefineCommand> for GroupTask {
    fn from(c: DefineCommand) -> Self {
        match c {
            DefineCommand::Info => GroupTask::Info,
            DefineCommand::Order(a) => GroupTask::Order(a.level),
            DefineCommand::StabSeries(a) => GroupTask::StabSeries(a.levels),
            DefineCommand::AbInvariants(a) => GroupTask::AbInvariants(a.levels),
            DefineCommand::Nucleus(a) => GroupTask::Nucleus(a.max_size),
            DefineCommand::Witness(a) => GroupTask::Witness(a.element, a.levels),
            DefineCommand::Kernels(a) => GroupTask::Kernels(a),
        }
    }
}

fn policy(p: &PolicyArg, limits: &Limits) -> Policy {
    if p.depth_capped {
        Policy::DepthCapped(limits.word_depth)
    } else {
        Policy::NucleusCertified
    }
}

fn read_input(path: &PathBuf) -> Result<String, Error> {
    let io = |e: std::io::Error| Error::Definition(format!("cannot read {}: {e}", path.display()));
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(io)?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(io)
    }
}

fn error_kind(e: &Error) -> (&'static str, u8) {
    match e {
        Error::CapExceeded { .. } => ("cap_exceeded", EXIT_CAP),
        Error::Inconclusive(_) => ("inconclusive", EXIT_CAP),
        Error::CheckFailed(_) => ("check_failed", EXIT_FAILED),
        Error::Parse { .. } => ("parse", EXIT_USAGE),
        Error::Unknown { .. } => ("unknown", EXIT_USAGE),
        Error::Dimension(_) => ("dimension", EXIT_USAGE),
        Error::Definition(_) => ("definition", EXIT_USAGE),
    }
}

fn execute(command: Command, ctx: &mut Ctx) -> (Report, Result<String, Error>) {
    let task = |group: String, task: GroupTask| (Some(group), None, task);
    let (group, file, task) = match command {
        Command::Info { group } => task(group, GroupTask::Info),
        Command::Order { group, args } => task(group, GroupTask::Order(args.level)),
        Command::StabSeries { group, args } => task(group, GroupTask::StabSeries(args.levels)),
        Command::AbInvariants { group, args } => task(group, GroupTask::AbInvariants(args.levels)),
        Command::Nucleus { group, args } => task(group, GroupTask::Nucleus(args.max_size)),
        Command::Witness { group, args } => {
            task(group, GroupTask::Witness(args.element, args.levels))
        }
        Command::Kernels { group, args } => task(group, GroupTask::Kernels(args)),
        Command::Define { file, command } => (None, Some(file), command.into()),
        Command::Verify {
            suite,
            group_file,
            policy: p,
        } => {
            let pol = policy(&p, &ctx.limits);
            let mut params = json!({ "suite": suite, "depth_capped": p.depth_capped });
            if let Some(f) = &group_file {
                params["group_file"] = json!(f.display().to_string());
            }
            let mut r = Report::new("verify", params);
            let def = group_file
                .map(|f| read_input(&f).and_then(|t| parse_group_def(&t)))
                .transpose();
            let out = def.and_then(|d| commands::verify(&suite, d, pol, ctx, &mut r));
            return (r, out);
        }
        Command::Snf { file } => {
            let mut r = Report::new("snf", json!({ "file": file.display().to_string() }));
            let out = read_input(&file).and_then(|text| commands::snf(&text, &mut r));
            return (r, out);
        }
        Command::ConnectingMatrix { policy: p } => {
            let mut r = Report::new(
                "connecting-matrix",
                json!({ "depth_capped": p.depth_capped }),
            );
            r.group = Some("hanoi3".into());
            let out = builtin("hanoi3")
                .and_then(|d| d.certify(ctx.limits.word_depth, 64))
                .and_then(|d| commands::connecting(&d, policy(&p, &ctx.limits), &mut r));
            return (r, out);
        }
    };
    let mut params = task.parameters();
    if let Some(f) = &file {
        params["file"] = json!(f.display().to_string());
    }
    let name = if file.is_some() {
        format!("define {}", task.name())
    } else {
        task.name().to_string()
    };
    let mut r = Report::new(&name, params);
    let def = match (group, file) {
        (Some(g), _) => builtin(&g),
        (None, Some(f)) => read_input(&f).and_then(|t| parse_group_def(&t)),
        (None, None) => unreachable!("group commands name a group or a file"),
    };
    let out = def.and_then(|d| {
        r.group = Some(d.name().to_string());
        task.run(&d, ctx, &mut r)
    });
    (r, out)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    let g = cli.global;
    let limits = Limits {
        max_degree: g.max_degree,
        max_enum: g.max_enum,
        max_transversal: g.max_transversal,
        word_depth: g.word_depth,
        ..Limits::default()
    };
    let mut ctx = Ctx {
        limits,
        cache: Cache::from_env(),
    };
    let start = Instant::now();
    let (mut report, out) = execute(cli.command, &mut ctx);
    let code = match out {
        Ok(text) => {
            if g.report.as_deref() != Some(std::path::Path::new("-")) {
                print!("{text}");
            }
            if report.failures() > 0 {
                report.passed = false;
                EXIT_FAILED
            } else {
                0
            }
        }
        Err(e) => {
            let (kind, code) = error_kind(&e);
            eprintln!("error: {e}");
            report.passed = false;
            report.error = Some(ErrorRecord {
                kind,
                message: e.to_string(),
            });
            code
        }
    };
    if g.diagnostics {
        let d = Diagnostics {
            wall_ms: start.elapsed().as_millis(),
            cache: ctx.cache.stats.clone(),
        };
        eprintln!(
            "wall time {} ms, cache {} hits, {} misses",
            d.wall_ms, d.cache.hits, d.cache.misses
        );
        report.diagnostics = Some(d);
    }
    if let Some(path) = &g.report {
        let json = report.to_json();
        if path.as_os_str() == "-" {
            print!("{json}");
        } else if let Err(e) = std::fs::write(path, json) {
            eprintln!("error: cannot write report {}: {e}", path.display());
            return ExitCode::from(EXIT_USAGE);
        }
    }
    ExitCode::from(code)
}
