//! Random syntax trees for print/parse round trips.

use mixprod_cli::syntax::{
    Binding, BlockDecl, Command, Expr, ExprKind, Flag, FlagValue, MonomialLit, Pos, Program, VarPower,
};
use proptest::prelude::*;

const BLOCKS: &[&str] = &["x", "y", "z", "w"];
const NAMES: &[&str] = &["I", "J", "K", "L", "base", "my_ideal"];
const COMMANDS: &[&str] = &["mingens", "pd", "is-normal", "equal", "betti", "linquot"];
const WORDS: &[&str] = &["lex", "quotient", "ideal", "auto"];

fn var() -> impl Strategy<Value = VarPower> {
    (prop::sample::select(BLOCKS), 1u32..20, 0u32..5).prop_map(|(b, index, exponent)| VarPower {
        block: b.to_string(),
        index,
        exponent,
        pos: Pos::default(),
    })
}

fn monomial() -> impl Strategy<Value = MonomialLit> {
    prop::collection::vec(var(), 0..4).prop_map(|factors| MonomialLit {
        factors,
        pos: Pos::default(),
    })
}

fn leaf() -> impl Strategy<Value = Expr> {
    prop_oneof![
        (prop::sample::select(BLOCKS), 0u32..6).prop_map(|(b, r)| ExprKind::SqV(b.into(), r)),
        (prop::sample::select(BLOCKS), 0u32..6).prop_map(|(b, r)| ExprKind::V(b.into(), r)),
        (0u32..9).prop_map(ExprKind::Staircase),
        (0u32..9).prop_map(ExprKind::PathIdeal),
        prop::collection::vec(monomial(), 1..4).prop_map(ExprKind::Gens),
        prop::sample::select(NAMES).prop_map(|n| ExprKind::Ref(n.into())),
    ]
    .prop_map(Expr::new)
}

pub fn expr() -> impl Strategy<Value = Expr> {
    leaf().prop_recursive(4, 24, 4, |inner| {
        prop_oneof![
            prop::collection::vec(inner.clone(), 2..4).prop_map(ExprKind::Sum),
            prop::collection::vec(inner.clone(), 2..4).prop_map(ExprKind::Product),
            (inner.clone(), 0u32..5).prop_map(|(e, k)| ExprKind::Power(Box::new(e), k)),
            (inner, 0u32..5).prop_map(|(e, k)| ExprKind::BracketPower(Box::new(e), k)),
        ]
        .prop_map(Expr::new)
    })
}

fn flag() -> impl Strategy<Value = Flag> {
    (
        prop::sample::select(&["of", "strategy", "power", "json", "box-bound"][..]),
        prop_oneof![
            Just(None),
            prop::sample::select(WORDS).prop_map(|w| Some(FlagValue::Name(w.into()))),
            (0u32..100).prop_map(|v| Some(FlagValue::Int(v))),
        ],
    )
        .prop_map(|(name, value)| Flag {
            name: name.into(),
            value,
            pos: Pos::default(),
        })
}

pub fn program() -> impl Strategy<Value = Program> {
    let ring = prop::sample::subsequence(BLOCKS, 1..=BLOCKS.len()).prop_flat_map(|names| {
        let n = names.len();
        (Just(names), prop::collection::vec(1u32..6, n))
    });
    let bindings = prop::sample::subsequence(NAMES, 0..4)
        .prop_flat_map(|names| {
            let n = names.len();
            (Just(names), prop::collection::vec(expr(), n))
        });
    let command = (
        prop::sample::select(COMMANDS),
        prop::collection::vec(expr(), 0..3),
        prop::collection::vec(flag(), 0..3),
    );
    (ring, bindings, command).prop_map(|((bn, sizes), (names, exprs), (cmd, args, flags))| Program {
        ring: bn
            .iter()
            .zip(sizes)
            .map(|(n, size)| BlockDecl {
                name: n.to_string(),
                size,
                pos: Pos::default(),
            })
            .collect(),
        bindings: names
            .iter()
            .zip(exprs)
            .map(|(n, expr)| Binding {
                name: n.to_string(),
                expr,
                pos: Pos::default(),
            })
            .collect(),
        command: Command {
            name: cmd.into(),
            args,
            flags,
            pos: Pos::default(),
        },
    })
}
