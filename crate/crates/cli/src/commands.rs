//! Command dispatch and report assembly.

use mixprod::betti::{self, BettiOf, DEFAULT_LATTICE_BOUND};
use mixprod::closure::{self, ClosureWitness, DEFAULT_BOX_BOUND, DEFAULT_NORMALITY_POWER};
use mixprod::linquot::{self, Strategy, DEFAULT_EXHAUSTIVE_THRESHOLD};
use mixprod::polymatroid;
use mixprod::MonomialIdeal;
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::CliError;
use crate::eval::Env;
use crate::syntax::{parse_program, Command, FlagValue};

/// Engine limits. Each can be set per command with a flag of the same name.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bounds {
    pub exhaustive_threshold: usize,
    pub lattice_bound: usize,
    pub normal_power: u32,
    pub box_bound: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            exhaustive_threshold: DEFAULT_EXHAUSTIVE_THRESHOLD,
            lattice_bound: DEFAULT_LATTICE_BOUND,
            normal_power: DEFAULT_NORMALITY_POWER,
            box_bound: DEFAULT_BOX_BOUND,
        }
    }
}

/// Machine-readable report; see `schema/report.schema.json`.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub command: String,
    pub status: &'static str,
    pub result: Value,
    pub witness: Value,
    pub certificate: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub message: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub validation: Option<Value>,
}

#[derive(Debug, Clone)]
pub struct Outcome {
    pub report: Report,
    /// Human-readable rendering, newline-terminated.
    pub text: String,
    /// Set for commands that answer yes or no.
    pub verdict: Option<bool>,
}

impl Report {
    pub fn error(command: &str, e: &CliError) -> Self {
        Report {
            command: command.to_string(),
            status: e.status(),
            result: Value::Null,
            witness: Value::Null,
            certificate: Value::Null,
            message: Some(e.to_string()),
            validation: None,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize") + "\n"
    }
}

const COMMANDS: &[(&str, usize, &[&str])] = &[
    ("mingens", 1, &[]),
    ("is-polymatroidal", 1, &[]),
    ("is-matroidal", 1, &[]),
    ("linquot", 1, &["strategy", "threshold"]),
    ("rvalue", 1, &["strategy", "threshold"]),
    ("betti", 1, &["of", "lattice-bound"]),
    ("pd", 1, &["of", "lattice-bound"]),
    ("reg", 1, &["of", "lattice-bound"]),
    ("closure", 1, &["box-bound"]),
    ("is-closed", 1, &["box-bound"]),
    ("is-normal", 1, &["power", "box-bound"]),
    ("equal", 2, &[]),
];

pub fn command_names() -> impl Iterator<Item = &'static str> {
    COMMANDS.iter().map(|c| c.0)
}

struct Settings {
    bounds: Bounds,
    strategy: Strategy,
    of: BettiOf,
}

fn settings(cmd: &Command, allowed: &[&str], mut bounds: Bounds) -> Result<Settings, CliError> {
    let mut s = Settings {
        bounds,
        strategy: Strategy::Auto,
        of: BettiOf::Quotient,
    };
    for f in &cmd.flags {
        if !allowed.contains(&f.name.as_str()) {
            return Err(CliError::semantic(
                f.pos,
                format!("`{}` does not take `--{}`", cmd.name, f.name),
            ));
        }
        let int = || match f.value {
            Some(FlagValue::Int(v)) if v > 0 => Ok(v),
            _ => Err(CliError::semantic(f.pos, format!("`--{}` needs a positive integer", f.name))),
        };
        let word = || match &f.value {
            Some(FlagValue::Name(v)) => Ok(v.clone()),
            _ => Err(CliError::semantic(f.pos, format!("`--{}` needs a word", f.name))),
        };
        match f.name.as_str() {
            "strategy" => {
                s.strategy = word()?.parse().map_err(|m: String| CliError::semantic(f.pos, m))?;
            }
            "of" => {
                s.of = match word()?.as_str() {
                    "ideal" => BettiOf::Ideal,
                    "quotient" => BettiOf::Quotient,
                    other => {
                        return Err(CliError::semantic(
                            f.pos,
                            format!("`--of` expects `ideal` or `quotient`, got `{other}`"),
                        ))
                    }
                }
            }
            "threshold" => bounds.exhaustive_threshold = int()? as usize,
            "lattice-bound" => bounds.lattice_bound = int()? as usize,
            "box-bound" => bounds.box_bound = int()? as usize,
            "power" => bounds.normal_power = int()?,
            _ => unreachable!("flag list checked above"),
        }
    }
    s.bounds = bounds;
    Ok(s)
}

fn ideal_result(i: &MonomialIdeal) -> Value {
    json!({
        "ideal": i.to_string(),
        "generators": i.gens().iter().map(|g| g.to_string()).collect::<Vec<_>>(),
    })
}

fn of_name(of: BettiOf) -> &'static str {
    match of {
        BettiOf::Ideal => "ideal",
        BettiOf::Quotient => "quotient",
    }
}

fn closure_witness(w: &ClosureWitness, power: Option<u32>) -> (Value, Value, String) {
    let view = w.certificate.view();
    let mut witness = json!({ "monomial": w.monomial.to_string() });
    if let Some(p) = power {
        witness["power"] = json!(p);
    }
    let lambda: Vec<String> = view.lambda.iter().map(|(g, q)| format!("{g} = {q}")).collect();
    let text = format!(
        "witness: {}\nlambda: {}\npoint: ({})\n",
        w.monomial,
        lambda.join(", "),
        view.point.join(", ")
    );
    (witness, serde_json::to_value(view).expect("certificate serializes"), text)
}

/// Runs one command against evaluated arguments.
pub fn run_command(env: &Env, cmd: &Command, bounds: Bounds) -> Result<Outcome, CliError> {
    let Some(&(_, arity, allowed)) = COMMANDS.iter().find(|c| c.0 == cmd.name) else {
        return Err(CliError::semantic(
            cmd.pos,
            format!(
                "unknown command `{}`; expected one of: {}",
                cmd.name,
                command_names().collect::<Vec<_>>().join(", ")
            ),
        ));
    };
    if cmd.args.len() != arity {
        return Err(CliError::semantic(
            cmd.pos,
            format!("`{}` takes {arity} ideal argument(s), got {}", cmd.name, cmd.args.len()),
        ));
    }
    let s = settings(cmd, allowed, bounds)?;
    let args = cmd
        .args
        .iter()
        .map(|a| env.eval(a))
        .collect::<Result<Vec<_>, _>>()?;
    execute(&cmd.name, &args, &s)
}

fn execute(name: &str, args: &[MonomialIdeal], s: &Settings) -> Result<Outcome, CliError> {
    let i = &args[0];
    let mut out = Outcome {
        report: Report {
            command: name.to_string(),
            status: "ok",
            result: Value::Null,
            witness: Value::Null,
            certificate: Value::Null,
            message: None,
            validation: None,
        },
        text: String::new(),
        verdict: None,
    };
    let b = s.bounds;
    match name {
        "mingens" => {
            out.report.result = ideal_result(i);
            out.text = format!("{i}\n");
        }
        "closure" => {
            let c = closure::integral_closure(i, b.box_bound)?;
            out.report.result = ideal_result(&c);
            out.text = format!("{c}\n");
        }
        "is-polymatroidal" | "is-matroidal" => {
            let rep = if name == "is-matroidal" {
                polymatroid::is_matroidal(i)?
            } else {
                polymatroid::is_polymatroidal(i)?
            };
            out.verdict = Some(rep.verdict);
            out.report.result = json!({ "verdict": rep.verdict });
            out.text = format!("{}\n", rep.verdict);
            if let Some(w) = rep.witness {
                let v = w.view();
                out.text += &format!("witness: {} u={}", v.kind, v.u);
                if let Some(x) = &v.v {
                    out.text += &format!(" v={x}");
                }
                if let Some(x) = &v.variable {
                    out.text += &format!(" variable={x}");
                }
                out.text.push('\n');
                out.report.witness = serde_json::to_value(v).expect("witness serializes");
            }
        }
        "linquot" | "rvalue" => {
            let found = linquot::find_linear_quotients(i, s.strategy, b.exhaustive_threshold)?;
            out.verdict = Some(found.certificate.is_some());
            let strategy = |st: Strategy| serde_json::to_value(st).expect("strategy serializes");
            match &found.certificate {
                Some(cert) => {
                    let view = cert.view();
                    if name == "rvalue" {
                        out.report.result = json!({ "r": view.r });
                        out.text = format!("{}\n", view.r);
                    } else {
                        out.report.result = json!({
                            "found": true,
                            "found_by": strategy(found.found_by.expect("set with certificate")),
                            "complete": found.complete,
                        });
                        out.text = format!(
                            "linear quotients: found ({})\n",
                            strategy(found.found_by.expect("set with certificate")).as_str().unwrap_or("")
                        );
                        for (k, g) in view.order.iter().enumerate() {
                            if k == 0 {
                                out.text += &format!("{:>3}  {g}\n", k + 1);
                            } else {
                                out.text += &format!("{:>3}  {g} : {}\n", k + 1, view.colon_vars[k - 1].join(", "));
                            }
                        }
                        out.text += &format!("r = {}\npd = {}\n", view.r, view.pd);
                    }
                    out.report.certificate = serde_json::to_value(view).expect("certificate serializes");
                }
                None => {
                    let note = if found.complete {
                        "search complete"
                    } else {
                        "search incomplete: exhaustive search skipped above threshold"
                    };
                    if name == "rvalue" {
                        out.report.result = json!({ "r": null, "complete": found.complete });
                        out.text = format!("none ({note})\n");
                    } else {
                        out.report.result = json!({ "found": false, "found_by": null, "complete": found.complete });
                        out.text = format!("linear quotients: none found ({note})\n");
                    }
                }
            }
        }
        "betti" | "pd" | "reg" => {
            let t = betti::betti_table(i, b.lattice_bound)?;
            let (pd, reg) = match s.of {
                BettiOf::Ideal => (t.pd_of_ideal(), t.reg_of_ideal()),
                BettiOf::Quotient => (t.pd_of_quotient(), t.reg_of_quotient()),
            };
            match name {
                "betti" => {
                    out.report.result = json!({
                        "of": of_name(s.of),
                        "entries": t.entries_of(s.of),
                        "pd": pd,
                        "reg": reg,
                    });
                    out.text = t.render(s.of);
                }
                "pd" => {
                    out.report.result = json!({ "of": of_name(s.of), "value": pd });
                    out.text = format!("{}\n", pd.expect("nonzero ideal has a resolution"));
                }
                _ => {
                    out.report.result = json!({ "of": of_name(s.of), "value": reg });
                    out.text = format!("{}\n", reg.expect("nonzero ideal has a resolution"));
                }
            }
        }
        "is-closed" => {
            let w = closure::closure_witness(i, b.box_bound)?;
            out.verdict = Some(w.is_none());
            out.report.result = json!({ "verdict": w.is_none() });
            out.text = format!("{}\n", w.is_none());
            if let Some(w) = w {
                let (wj, cj, text) = closure_witness(&w, None);
                out.report.witness = wj;
                out.report.certificate = cj;
                out.text += &text;
            }
        }
        "is-normal" => {
            let rep = closure::is_normal_up_to(i, b.normal_power, b.box_bound)?;
            let ok = rep.normal_up_to_bound();
            out.verdict = Some(ok);
            let failing = rep.failure.as_ref().map(|f| f.0);
            out.report.result = json!({ "verdict": ok, "bound": rep.bound, "failing_power": failing });
            match &rep.failure {
                None => out.text = format!("normal up to power {}\n", rep.bound),
                Some((p, w)) => {
                    let (wj, cj, text) = closure_witness(w, Some(*p));
                    out.report.witness = wj;
                    out.report.certificate = cj;
                    out.text = format!("not normal: power {p} is not integrally closed\n{text}");
                }
            }
        }
        "equal" => {
            let eq = args[0] == args[1];
            out.verdict = Some(eq);
            out.report.result = json!({ "verdict": eq });
            out.text = format!("{eq}\n");
        }
        _ => unreachable!("command table checked by caller"),
    }
    Ok(out)
}

/// Parses, evaluates and runs a whole program.
pub fn run_source(src: &str, bounds: Bounds) -> Result<Outcome, (String, CliError)> {
    let program = parse_program(src).map_err(|e| (String::new(), CliError::from(e)))?;
    let name = program.command.name.clone();
    let env = Env::from_program(&program).map_err(|e| (name.clone(), e))?;
    run_command(&env, &program.command, bounds).map_err(|e| (name, e))
}
