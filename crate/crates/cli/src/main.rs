use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use mixprod::gmpi::{build, builtin_family, validate_family, FamilyKind};
use mixprod_cli::commands::{command_names, Outcome, Report};
use mixprod_cli::eval::Env;
use mixprod_cli::family::{parse_base_file, parse_family_file};
use mixprod_cli::syntax::{Command, Expr, ExprKind, Flag, FlagValue, Pos};
use mixprod_cli::{run_command, run_source, Bounds, CliError};

#[derive(Parser)]
#[command(name = "mixprod", version, about = "Exact computations with monomial ideals")]
struct Cli {
    #[command(subcommand)]
    action: Action,
    #[command(flatten)]
    global: Global,
}

#[derive(Args)]
struct Global {
    /// Print a JSON report instead of text
    #[arg(long, global = true)]
    json: bool,
    /// Exit with status 1 when a yes/no command answers no
    #[arg(long, global = true)]
    strict: bool,
    /// Largest generator count for the exhaustive linear-quotient search
    #[arg(long, global = true, env = "MIXPROD_EXHAUSTIVE_THRESHOLD", default_value_t = Bounds::default().exhaustive_threshold)]
    threshold: usize,
    /// Largest lcm lattice the Betti oracle will scan
    #[arg(long, global = true, env = "MIXPROD_LATTICE_BOUND", default_value_t = Bounds::default().lattice_bound)]
    lattice_bound: usize,
    /// Highest power checked by `is-normal`
    #[arg(long, global = true, env = "MIXPROD_NORMAL_POWER", default_value_t = Bounds::default().normal_power)]
    power: u32,
    /// Largest exponent box enumerated by the closure commands
    #[arg(long, global = true, env = "MIXPROD_BOX_BOUND", default_value_t = Bounds::default().box_bound)]
    box_bound: usize,
}

#[derive(Subcommand)]
enum Action {
    /// Run a program file (`-` reads standard input)
    Run { file: PathBuf },
    /// Run a program given on the command line
    Eval { program: String },
    /// Build a generalized mixed product ideal and run a command on it
    Gmpi(GmpiArgs),
}

#[derive(Args)]
struct GmpiArgs {
    /// Base-ideal file
    #[arg(long)]
    base: PathBuf,
    /// Substitution-family file
    #[arg(long, conflicts_with = "builtin", required_unless_present = "builtin")]
    family: Option<PathBuf>,
    /// Builtin substitution family
    #[arg(long, value_enum)]
    builtin: Option<Builtin>,
    /// Block sizes of the target ring, comma separated
    #[arg(long, value_delimiter = ',', required = true)]
    sizes: Vec<usize>,
    /// Command applied to the built ideal
    #[arg(long, default_value = "mingens")]
    then: String,
    /// Linear-quotient ordering strategy for `linquot` and `rvalue`
    #[arg(long)]
    strategy: Option<String>,
    /// `ideal` or `quotient` for `betti`, `pd` and `reg`
    #[arg(long)]
    of: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Builtin {
    #[value(name = "sqV")]
    SqV,
    #[value(name = "V")]
    V,
    #[value(name = "principal")]
    Principal,
}

fn read(path: &PathBuf) -> Result<String, CliError> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| CliError::Input(format!("standard input: {e}")))?;
        return Ok(s);
    }
    std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn gmpi(args: &GmpiArgs, bounds: Bounds) -> Result<(Outcome, Vec<String>), CliError> {
    let base = parse_base_file(&read(&args.base)?)?;
    let fam = match (&args.family, args.builtin) {
        (Some(path), _) => parse_family_file(&read(path)?, &base, &args.sizes)?,
        (None, Some(b)) => {
            let kind = match b {
                Builtin::SqV => FamilyKind::SquarefreeVeronese,
                Builtin::V => FamilyKind::Veronese,
                Builtin::Principal => FamilyKind::PrincipalPower,
            };
            builtin_family(kind, &base, &args.sizes)?
        }
        (None, None) => unreachable!("clap requires one of them"),
    };
    let validation = validate_family(&base, &fam, true)?;
    let warnings = validation.warnings();
    let l = build(&base, &fam)?;
    let mut env = Env::new(std::sync::Arc::clone(fam.target()));
    env.bind("L", l);
    let flag = |name: &str, v: &Option<String>| {
        v.as_ref().map(|v| Flag {
            name: name.to_string(),
            value: Some(FlagValue::Name(v.clone())),
            pos: Pos::default(),
        })
    };
    let cmd = Command {
        name: args.then.clone(),
        args: vec![Expr::new(ExprKind::Ref("L".into()))],
        flags: [flag("strategy", &args.strategy), flag("of", &args.of)]
            .into_iter()
            .flatten()
            .collect(),
        pos: Pos::default(),
    };
    let mut out = run_command(&env, &cmd, bounds)?;
    out.report.validation = Some(serde_json::to_value(&validation).expect("validation serializes"));
    Ok((out, warnings))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let g = &cli.global;
    let bounds = Bounds {
        exhaustive_threshold: g.threshold,
        lattice_bound: g.lattice_bound,
        normal_power: g.power,
        box_bound: g.box_bound,
    };
    let result: Result<(Outcome, Vec<String>), (String, CliError)> = match &cli.action {
        Action::Run { file } => match read(file) {
            Ok(src) => run_source(&src, bounds).map(|o| (o, Vec::new())),
            Err(e) => Err((String::new(), e)),
        },
        Action::Eval { program } => run_source(program, bounds).map(|o| (o, Vec::new())),
        Action::Gmpi(args) => {
            if !command_names().any(|c| c == args.then) {
                Err((args.then.clone(), CliError::Input(format!("unknown command `{}`", args.then))))
            } else {
                gmpi(args, bounds).map_err(|e| (args.then.clone(), e))
            }
        }
    };
    match result {
        Ok((out, warnings)) => {
            for w in warnings {
                eprintln!("warning: {w}");
            }
            if g.json {
                print!("{}", out.report.to_json());
            } else {
                print!("{}", out.text);
            }
            if g.strict && out.verdict == Some(false) {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err((command, e)) => {
            if g.json {
                print!("{}", Report::error(&command, &e).to_json());
            }
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
