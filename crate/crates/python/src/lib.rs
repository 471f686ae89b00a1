//! Python module `mixprod_py`. Ideals live in a `Ring`; every command of the
//! program language is available through `Ideal.report`, which returns the
//! same structure as the JSON output of the command-line tool.

use std::sync::Arc;

use mixprod::gmpi::{build, builtin_family};
use mixprod::{MonomialIdeal, VariableContext};
use mixprod_cli::eval::Env;
use mixprod_cli::family::{parse_base_file, parse_family_file, shorthand};
use mixprod_cli::syntax::{parse_expr, parse_program};
use mixprod_cli::{run_command, run_source, Bounds, CliError};
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

fn cli_err(e: CliError) -> PyErr {
    match e {
        CliError::Engine(mixprod::Error::ResourceBound { .. }) => PyRuntimeError::new_err(e.to_string()),
        other => PyValueError::new_err(other.to_string()),
    }
}

fn engine_err(e: mixprod::Error) -> PyErr {
    cli_err(CliError::Engine(e))
}

fn json_to_py<'py>(py: Python<'py>, text: &str) -> PyResult<Bound<'py, PyAny>> {
    py.import("json")?.call_method1("loads", (text,))
}

/// Polynomial ring given by named variable blocks, e.g. `Ring([("x", 3), ("y", 3)])`.
#[pyclass(frozen, module = "mixprod_py")]
struct Ring {
    ctx: Arc<VariableContext>,
}

#[pymethods]
impl Ring {
    #[new]
    fn new(blocks: Vec<(String, usize)>) -> PyResult<Self> {
        Ok(Ring {
            ctx: VariableContext::new(blocks).map_err(engine_err)?,
        })
    }

    /// Evaluates an ideal expression such as `sqV(x,2)*sqV(y,1) + staircase(4)`.
    fn ideal(&self, expr: &str) -> PyResult<Ideal> {
        let e = parse_expr(expr).map_err(|e| cli_err(e.into()))?;
        let ideal = Env::new(Arc::clone(&self.ctx)).eval(&e).map_err(cli_err)?;
        Ok(Ideal { ideal })
    }

    /// Reads the text form `(x1^2*x2, y1)`.
    fn parse(&self, text: &str) -> PyResult<Ideal> {
        let ideal = Env::new(Arc::clone(&self.ctx)).parse_text(text).map_err(cli_err)?;
        Ok(Ideal { ideal })
    }

    fn from_exponents(&self, exponents: Vec<Vec<u32>>) -> PyResult<Ideal> {
        let ideal = MonomialIdeal::from_exponents(&self.ctx, exponents).map_err(engine_err)?;
        Ok(Ideal { ideal })
    }

    fn __repr__(&self) -> String {
        self.ctx.declaration()
    }
}

/// A monomial ideal, stored by its minimal generators.
#[pyclass(frozen, eq, module = "mixprod_py")]
#[derive(PartialEq)]
struct Ideal {
    ideal: MonomialIdeal,
}

impl Ideal {
    fn run<'py>(&self, py: Python<'py>, command: &str, flags: &str) -> PyResult<mixprod_cli::Outcome> {
        let src = format!("{} {command} I {flags};", self.ideal.context().declaration());
        let program = parse_program(&src).map_err(|e| cli_err(e.into()))?;
        let mut env = Env::new(Arc::clone(self.ideal.context()));
        env.bind("I", self.ideal.clone());
        py.detach(|| run_command(&env, &program.command, Bounds::default())).map_err(cli_err)
    }

    fn verdict(&self, py: Python<'_>, command: &str, flags: &str) -> PyResult<bool> {
        Ok(self.run(py, command, flags)?.verdict.unwrap_or(false))
    }

    fn wrap(r: mixprod::Result<MonomialIdeal>) -> PyResult<Ideal> {
        r.map(|ideal| Ideal { ideal }).map_err(engine_err)
    }
}

#[pymethods]
impl Ideal {
    /// Minimal generators in the canonical order, as strings.
    fn gens(&self) -> Vec<String> {
        self.ideal.gens().iter().map(|m| m.to_string()).collect()
    }

    fn exponents(&self) -> Vec<Vec<u32>> {
        self.ideal.gens().iter().map(|m| m.exponents().to_vec()).collect()
    }

    fn __len__(&self) -> usize {
        self.ideal.len()
    }

    fn __str__(&self) -> String {
        self.ideal.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Ideal{}", self.ideal)
    }

    fn __add__(&self, other: &Ideal) -> PyResult<Ideal> {
        Self::wrap(self.ideal.sum(&other.ideal))
    }

    fn __mul__(&self, other: &Ideal) -> PyResult<Ideal> {
        Self::wrap(self.ideal.product(&other.ideal))
    }

    fn __pow__(&self, k: u32, _modulo: Option<u32>) -> PyResult<Ideal> {
        Self::wrap(self.ideal.power(k))
    }

    fn __and__(&self, other: &Ideal) -> PyResult<Ideal> {
        Self::wrap(self.ideal.intersect(&other.ideal))
    }

    fn bracket_power(&self, k: u32) -> PyResult<Ideal> {
        Self::wrap(self.ideal.bracket_power(k))
    }

    fn contains(&self, exponents: Vec<u32>) -> PyResult<bool> {
        let m = self.ideal.context().monomial(exponents).map_err(engine_err)?;
        self.ideal.contains_monomial(&m).map_err(engine_err)
    }

    /// Runs any program command on this ideal and returns its report as a
    /// dict; `flags` uses the program syntax, e.g. `"--of ideal"`.
    #[pyo3(signature = (command, flags = ""))]
    fn report<'py>(&self, py: Python<'py>, command: &str, flags: &str) -> PyResult<Bound<'py, PyAny>> {
        let out = self.run(py, command, flags)?;
        json_to_py(py, &out.report.to_json())
    }

    fn is_polymatroidal(&self, py: Python<'_>) -> PyResult<bool> {
        self.verdict(py, "is-polymatroidal", "")
    }

    fn is_matroidal(&self, py: Python<'_>) -> PyResult<bool> {
        self.verdict(py, "is-matroidal", "")
    }

    /// The linear-quotient certificate as a dict, or `None` when the search fails.
    #[pyo3(signature = (strategy = "auto"))]
    fn linear_quotients<'py>(&self, py: Python<'py>, strategy: &str) -> PyResult<Option<Bound<'py, PyAny>>> {
        let out = self.run(py, "linquot", &format!("--strategy {strategy}"))?;
        if out.verdict == Some(true) {
            Ok(Some(json_to_py(py, &out.report.to_json())?.get_item("certificate")?))
        } else {
            Ok(None)
        }
    }

    #[pyo3(signature = (of = "quotient"))]
    fn betti<'py>(&self, py: Python<'py>, of: &str) -> PyResult<Bound<'py, PyAny>> {
        let out = self.run(py, "betti", &format!("--of {of}"))?;
        json_to_py(py, &out.report.to_json())?.get_item("result")
    }

    #[pyo3(signature = (of = "quotient"))]
    fn pd(&self, py: Python<'_>, of: &str) -> PyResult<i64> {
        let text = self.run(py, "pd", &format!("--of {of}"))?.text;
        text.trim().parse().map_err(|_| PyRuntimeError::new_err(text))
    }

    #[pyo3(signature = (of = "quotient"))]
    fn reg(&self, py: Python<'_>, of: &str) -> PyResult<i64> {
        let text = self.run(py, "reg", &format!("--of {of}"))?.text;
        text.trim().parse().map_err(|_| PyRuntimeError::new_err(text))
    }

    fn integral_closure(&self, py: Python<'_>) -> PyResult<Ideal> {
        let ideal = &self.ideal;
        let r = py.detach(|| mixprod::closure::integral_closure(ideal, mixprod::closure::DEFAULT_BOX_BOUND));
        Self::wrap(r)
    }

    fn is_integrally_closed(&self, py: Python<'_>) -> PyResult<bool> {
        self.verdict(py, "is-closed", "")
    }

    fn is_normal_up_to(&self, py: Python<'_>, k: u32) -> PyResult<bool> {
        self.verdict(py, "is-normal", &format!("--power {k}"))
    }
}

/// Runs a whole program and returns its text output, or the JSON report when
/// `json` is true.
#[pyfunction]
#[pyo3(signature = (source, json = false))]
fn run(py: Python<'_>, source: &str, json: bool) -> PyResult<String> {
    let out = py.detach(|| run_source(source, Bounds::default())).map_err(|(_, e)| cli_err(e))?;
    Ok(if json { out.report.to_json() } else { out.text })
}

/// Builds a generalized mixed product ideal from base-file text. `family` is a
/// shorthand (`sqV`, `V`, `principal`) or the text of a family file.
#[pyfunction]
fn gmpi(base: &str, sizes: Vec<usize>, family: &str) -> PyResult<Ideal> {
    let base = parse_base_file(base).map_err(cli_err)?;
    let fam = match shorthand(&format!("@{family}")) {
        Some(kind) => builtin_family(kind, &base, &sizes).map_err(engine_err)?,
        None => parse_family_file(family, &base, &sizes).map_err(cli_err)?,
    };
    Ideal::wrap(build(&base, &fam))
}

#[pymodule]
fn mixprod_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Ring>()?;
    m.add_class::<Ideal>()?;
    m.add_function(wrap_pyfunction!(run, m)?)?;
    m.add_function(wrap_pyfunction!(gmpi, m)?)?;
    Ok(())
}
