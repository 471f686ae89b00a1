mod common;

use mixprod::constructors::{mixed_sum, staircase};
use mixprod::{MonomialIdeal, VariableContext};
use mixprod_cli::eval::Env;
use mixprod_cli::syntax::{parse_expr, parse_program};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn printed_programs_reparse(p in common::program()) {
        let text = p.to_string();
        let back = parse_program(&text).map_err(|e| TestCaseError::fail(format!("{e}\n{text}")))?;
        prop_assert_eq!(back, p);
    }

    #[test]
    fn printed_ideals_reparse(raw in prop::collection::vec(prop::collection::vec(0u32..4, 5), 0..6)) {
        let c = VariableContext::new([("x", 2), ("y", 3)]).unwrap();
        let i = MonomialIdeal::from_exponents(&c, raw).unwrap();
        let env = Env::new(c.clone());
        prop_assert_eq!(&env.eval(&parse_expr(&i.to_dsl()).unwrap()).unwrap(), &i);
        prop_assert_eq!(&env.parse_text(&i.to_string()).unwrap(), &i);
    }
}

#[test]
fn engine_ideals_reparse() {
    let c = VariableContext::new([("x", 3), ("y", 3)]).unwrap();
    let env = Env::new(c.clone());
    for i in [
        staircase(&c, 4, true).unwrap(),
        mixed_sum(&c, &[(2, 1), (0, 3)], false).unwrap(),
        MonomialIdeal::unit(&c),
        MonomialIdeal::zero(&c),
    ] {
        assert_eq!(env.eval(&parse_expr(&i.to_dsl()).unwrap()).unwrap(), i);
        assert_eq!(env.parse_text(&i.to_string()).unwrap(), i);
    }
}
