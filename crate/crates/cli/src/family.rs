//! Base-ideal and substitution-family files for the `gmpi` command.
//!
//! A base file holds a ring of single-variable blocks and one ideal:
//!
//! ```text
//! ring x[1], y[1];
//! (x1*y1^3, x1^2*y1^2, x1^3*y1)
//! ```
//!
//! A family file has one entry per line, `block exponent ideal`, where the
//! ideal is an expression over the target ring or one of the shorthands
//! `@sqV`, `@V`, `@principal`. A line holding only a shorthand fills every
//! entry the base needs; explicit lines take precedence over it.

use std::sync::Arc;

use mixprod::gmpi::{builtin_family, BaseIdeal, FamilyKind, SubstitutionFamily};
use mixprod::VariableContext;

use crate::error::CliError;
use crate::eval::{context_of, Env};
use crate::syntax::{parse_base, parse_expr, BaseSource, ParseError, Pos};

pub fn parse_base_file(src: &str) -> Result<BaseIdeal, CliError> {
    let (ring, body) = parse_base(src)?;
    let env = Env::new(context_of(&ring)?);
    let ideal = match body {
        BaseSource::Expr(e) => env.eval(&e)?,
        BaseSource::Text(gens) => env.literal_ideal(&gens)?,
    };
    Ok(BaseIdeal::new(ideal)?)
}

pub fn shorthand(word: &str) -> Option<FamilyKind> {
    match word {
        "@sqV" => Some(FamilyKind::SquarefreeVeronese),
        "@V" => Some(FamilyKind::Veronese),
        "@principal" => Some(FamilyKind::PrincipalPower),
        _ => None,
    }
}

fn builtin_entry(
    kind: FamilyKind,
    target: &Arc<VariableContext>,
    block: usize,
    d: u32,
) -> mixprod::Result<mixprod::MonomialIdeal> {
    use mixprod::constructors::{squarefree_veronese, veronese};
    let name = &target.blocks()[block].name;
    match kind {
        FamilyKind::SquarefreeVeronese => squarefree_veronese(target, name, d),
        FamilyKind::Veronese => veronese(target, name, d),
        FamilyKind::PrincipalPower => {
            let v = target.var_index(name, 1)?;
            Ok(mixprod::MonomialIdeal::principal(target.variable(v).pow(d)?))
        }
    }
}

pub fn parse_family_file(src: &str, base: &BaseIdeal, sizes: &[usize]) -> Result<SubstitutionFamily, CliError> {
    let mut fam: Option<SubstitutionFamily> = None;
    let mut explicit = Vec::new();
    for (k, raw) in src.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        let lead = line.len() - line.trim_start().len();
        let pos = Pos {
            line: k + 1,
            column: lead + 1,
        };
        if let Some(kind) = shorthand(trimmed) {
            if fam.is_some() {
                return Err(CliError::semantic(pos, "more than one whole-family shorthand"));
            }
            fam = Some(builtin_family(kind, base, sizes).map_err(|e| CliError::semantic(pos, e.to_string()))?);
            continue;
        }
        let mut parts = trimmed.splitn(3, char::is_whitespace);
        let (Some(block), Some(exp), Some(rest)) = (parts.next(), parts.next(), parts.next()) else {
            return Err(CliError::semantic(pos, "expected `block exponent ideal` or a shorthand"));
        };
        let exponent: u32 = exp
            .parse()
            .map_err(|_| CliError::semantic(pos, format!("`{exp}` is not an exponent")))?;
        let rest_col = lead + trimmed.find(rest.trim_start()).unwrap_or(0) + 1;
        explicit.push((pos, block.to_string(), exponent, rest.trim().to_string(), rest_col));
    }
    let mut fam = match fam {
        Some(f) => f,
        None => SubstitutionFamily::new(mixprod::gmpi::target_context(base, sizes)?),
    };
    let target = Arc::clone(fam.target());
    let env = Env::new(Arc::clone(&target));
    for (pos, block, exponent, rhs, col) in explicit {
        let b = target
            .block_index(&block)
            .map_err(|e| CliError::semantic(pos, e.to_string()))?;
        let ideal = match shorthand(&rhs) {
            Some(kind) => builtin_entry(kind, &target, b, exponent).map_err(|e| CliError::semantic(pos, e.to_string()))?,
            None => {
                let expr = parse_expr(&rhs).map_err(|e| {
                    CliError::Parse(ParseError {
                        pos: Pos {
                            line: pos.line,
                            column: col + e.pos.column - 1,
                        },
                        ..e
                    })
                })?;
                env.eval(&expr)?
            }
        };
        fam.insert(b, exponent, ideal)
            .map_err(|e| CliError::semantic(pos, e.to_string()))?;
    }
    Ok(fam)
}

#[cfg(test)]
mod tests {
    use super::*;

    const L4_BASE: &str = "ring x[1], y[1];\n(x1*y1^3, x1^2*y1^2, x1^3*y1)\n";

    #[test]
    fn base_file_forms_agree() {
        let a = parse_base_file(L4_BASE).unwrap();
        let b = parse_base_file("ring x[1], y[1]; gens{x1*y1^3, x1^2*y1^2, x1^3*y1};").unwrap();
        assert_eq!(a, b);
        assert!(parse_base_file("ring x[2]; gens{x1};").is_err());
    }

    #[test]
    fn whole_and_explicit_entries() {
        let base = parse_base_file(L4_BASE).unwrap();
        let whole = parse_family_file("@sqV\n", &base, &[3, 3]).unwrap();
        let lines = "x 1 sqV(x,1)\nx 2 sqV(x, 2)\nx 3 @sqV\ny 1 @sqV\ny 2 sqV(y,2)\ny 3 gens{y1*y2*y3}  # full block\n";
        let explicit = parse_family_file(lines, &base, &[3, 3]).unwrap();
        let a: Vec<_> = whole.entries().map(|(k, v)| (*k, v.clone())).collect();
        let b: Vec<_> = explicit.entries().map(|(k, v)| (*k, v.clone())).collect();
        assert_eq!(a, b);
    }

    #[test]
    fn errors_point_at_lines() {
        let base = parse_base_file(L4_BASE).unwrap();
        let e = parse_family_file("@sqV\nz 1 @V\n", &base, &[3, 3]).unwrap_err();
        assert!(e.to_string().starts_with("2:1:"), "{e}");
        let e = parse_family_file("x 1 sqV(x 1)\n", &base, &[3, 3]).unwrap_err();
        assert!(e.to_string().contains("1:11"), "{e}");
    }
}
