use std::collections::BTreeMap;
use std::sync::Arc;

use mixprod::betti::{self, BettiOf, DEFAULT_LATTICE_BOUND};
use mixprod::closure::{self, in_newton_polyhedron};
use mixprod::constructors::{mixed_sum, squarefree_veronese, staircase, veronese};
use mixprod::gmpi::{build, builtin_family, BaseIdeal, FamilyKind};
use mixprod::linquot::{find_linear_quotients, Strategy as Search, DEFAULT_EXHAUSTIVE_THRESHOLD};
use mixprod::polymatroid::{is_polymatroidal, witness_is_valid};
use mixprod::{Monomial, MonomialIdeal, VariableContext};
use proptest::prelude::*;

fn ctx22() -> Arc<VariableContext> {
    VariableContext::new([("x", 2), ("y", 2)]).unwrap()
}

fn exps(n: usize, max: u32) -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(0..=max, n)
}

fn ideal_gens(n: usize, max: u32, count: usize) -> impl Strategy<Value = Vec<Vec<u32>>> {
    prop::collection::vec(exps(n, max), 1..=count)
}

fn ideal(c: &Arc<VariableContext>, raw: Vec<Vec<u32>>) -> MonomialIdeal {
    MonomialIdeal::from_exponents(c, raw).unwrap()
}

fn mono(c: &Arc<VariableContext>, e: Vec<u32>) -> Monomial {
    c.monomial(e).unwrap()
}

/// Every exponent vector in `[0, max]^n`.
fn box_points(n: usize, max: u32) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|p| {
                (0..=max).map(move |e| {
                    let mut q = p.clone();
                    q.push(e);
                    q
                })
            })
            .collect();
    }
    out
}

fn member(raw: &[Vec<u32>], a: &[u32]) -> bool {
    raw.iter().any(|g| g.iter().zip(a).all(|(x, y)| x <= y))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn division_undoes_multiplication(a in exps(4, 5), b in exps(4, 5)) {
        let c = ctx22();
        let (u, v) = (mono(&c, a), mono(&c, b));
        let uv = u.mul(&v).unwrap();
        prop_assert_eq!(uv.try_div(&v).unwrap(), Some(u.clone()));
        prop_assert!(u.divides(&uv).unwrap());
    }

    #[test]
    fn lcm_gcd_duality(a in exps(4, 5), b in exps(4, 5)) {
        let c = ctx22();
        let (u, v) = (mono(&c, a), mono(&c, b));
        let lhs = u.lcm(&v).unwrap().mul(&u.gcd(&v).unwrap()).unwrap();
        prop_assert_eq!(lhs, u.mul(&v).unwrap());
    }

    #[test]
    fn lex_is_a_total_order(a in exps(4, 3), b in exps(4, 3)) {
        let c = ctx22();
        let (u, v) = (mono(&c, a.clone()), mono(&c, b.clone()));
        let ord = u.lex_compare(&v).unwrap();
        prop_assert_eq!(ord, a.cmp(&b));
        prop_assert_eq!(ord.reverse(), v.lex_compare(&u).unwrap());
    }

    #[test]
    fn canonical_form_is_idempotent(raw in ideal_gens(4, 3, 6)) {
        let c = ctx22();
        let i = ideal(&c, raw);
        let again = MonomialIdeal::from_generators(&c, i.gens().to_vec()).unwrap();
        prop_assert_eq!(&again, &i);
        for (k, g) in i.gens().iter().enumerate() {
            for (l, h) in i.gens().iter().enumerate() {
                prop_assert!(k == l || !g.divides(h).unwrap());
            }
        }
    }

    #[test]
    fn membership_matches_brute_force(a in ideal_gens(3, 2, 4), b in ideal_gens(3, 2, 4)) {
        let c = VariableContext::new([("x", 3)]).unwrap();
        let (i, j) = (ideal(&c, a.clone()), ideal(&c, b.clone()));
        let sum = i.sum(&j).unwrap();
        let meet = i.intersect(&j).unwrap();
        let prod = i.product(&j).unwrap();
        for p in box_points(3, 4) {
            let m = mono(&c, p.clone());
            let (in_a, in_b) = (member(&a, &p), member(&b, &p));
            prop_assert_eq!(sum.contains_monomial(&m).unwrap(), in_a || in_b);
            prop_assert_eq!(meet.contains_monomial(&m).unwrap(), in_a && in_b);
            let in_prod = a.iter().any(|g| b.iter().any(|h| {
                g.iter().zip(h).zip(&p).all(|((x, y), z)| x + y <= *z)
            }));
            prop_assert_eq!(prod.contains_monomial(&m).unwrap(), in_prod);
        }
    }

    #[test]
    fn powers_add(raw in ideal_gens(4, 2, 3), j in 1u32..3, k in 1u32..3) {
        let c = ctx22();
        let i = ideal(&c, raw);
        let lhs = i.power(j).unwrap().product(&i.power(k).unwrap()).unwrap();
        prop_assert_eq!(lhs, i.power(j + k).unwrap());
    }

    #[test]
    fn bracket_power_generators(raw in ideal_gens(4, 3, 5), k in 1u32..4) {
        let c = ctx22();
        let i = ideal(&c, raw);
        let b = i.bracket_power(k).unwrap();
        let expected: Vec<Monomial> = i.gens().iter().map(|g| g.pow(k).unwrap()).collect();
        prop_assert_eq!(b.len(), i.len());
        prop_assert_eq!(b, MonomialIdeal::from_generators(&c, expected).unwrap());
    }

    #[test]
    fn polymatroid_witnesses_replay(raw in ideal_gens(4, 2, 5)) {
        let c = ctx22();
        let i = ideal(&c, raw);
        let rep = is_polymatroidal(&i).unwrap();
        match rep.witness {
            Some(w) => prop_assert!(!rep.verdict && witness_is_valid(&i, &w).unwrap()),
            None => prop_assert!(rep.verdict),
        }
    }

    #[test]
    fn closure_is_extensive_idempotent(raw in ideal_gens(3, 3, 3)) {
        let c = VariableContext::new([("x", 3)]).unwrap();
        let i = ideal(&c, raw);
        let cl = closure::integral_closure(&i, 100_000).unwrap();
        prop_assert!(i.is_subset_of(&cl).unwrap());
        prop_assert_eq!(closure::integral_closure(&cl, 100_000).unwrap(), cl.clone());
        for g in cl.gens() {
            let cert = in_newton_polyhedron(g.exponents(), &i).unwrap().unwrap();
            prop_assert!(cert.verify(g.exponents()));
        }
    }

    #[test]
    fn closure_is_monotone(raw in ideal_gens(3, 3, 3), extra in exps(3, 3)) {
        let c = VariableContext::new([("x", 3)]).unwrap();
        let i = ideal(&c, raw.clone());
        let mut more = raw;
        more.push(extra);
        let j = ideal(&c, more);
        let (ci, cj) = (
            closure::integral_closure(&i, 100_000).unwrap(),
            closure::integral_closure(&j, 100_000).unwrap(),
        );
        prop_assert!(ci.is_subset_of(&cj).unwrap());
    }

    #[test]
    fn degree_zero_betti_is_generator_count(raw in ideal_gens(4, 2, 5)) {
        let c = ctx22();
        let i = ideal(&c, raw);
        let t = betti::betti_table(&i, DEFAULT_LATTICE_BOUND).unwrap();
        let hist: BTreeMap<u64, usize> = i.degree_histogram();
        for (d, n) in hist {
            prop_assert_eq!(t.get(0, d), n as u64);
        }
        // alternating sum of ranks of I's resolution is 1 (rank of I)
        let chi: i64 = (0..=4).map(|k| {
            let b = t.betti(k) as i64;
            if k % 2 == 0 { b } else { -b }
        }).sum();
        prop_assert_eq!(chi, 1);
    }

    #[test]
    fn certificate_betti_agrees_with_oracle(raw in ideal_gens(4, 1, 6)) {
        let c = ctx22();
        let i = ideal(&c, raw);
        if i.is_equigenerated().is_some() {
            let out = find_linear_quotients(&i, Search::Auto, DEFAULT_EXHAUSTIVE_THRESHOLD).unwrap();
            if let Some(cert) = out.certificate {
                let oracle = betti::betti_table(&i, DEFAULT_LATTICE_BOUND).unwrap();
                prop_assert_eq!(cert.betti_table().unwrap(), oracle);
            }
        }
    }
}

#[test]
fn veronese_is_power_of_linear_forms() {
    let c = ctx22();
    let m = veronese(&c, "x", 1).unwrap();
    for r in 1..=4 {
        assert_eq!(veronese(&c, "x", r).unwrap(), m.power(r).unwrap());
    }
}

#[test]
fn constructors_are_canonical() {
    let c = VariableContext::new([("x", 3), ("y", 3)]).unwrap();
    let samples = [
        squarefree_veronese(&c, "y", 2).unwrap(),
        mixed_sum(&c, &[(1, 2), (2, 1)], true).unwrap(),
        staircase(&c, 4, true).unwrap(),
        staircase(&c, 3, false).unwrap(),
    ];
    for s in samples {
        assert_eq!(MonomialIdeal::from_generators(&c, s.gens().to_vec()).unwrap(), s);
    }
}

fn two_var_bases() -> Vec<BaseIdeal> {
    let c = VariableContext::new([("x", 1), ("y", 1)]).unwrap();
    let raws: Vec<Vec<Vec<u32>>> = vec![
        vec![vec![1, 1]],
        vec![vec![1, 2], vec![2, 1]],
        vec![vec![1, 0], vec![0, 1]],
        vec![vec![2, 0], vec![1, 1], vec![0, 2]],
        vec![vec![1, 3], vec![2, 2], vec![3, 1]],
    ];
    raws.into_iter()
        .map(|r| BaseIdeal::new(ideal(&c, r)).unwrap())
        .collect()
}

#[test]
fn gmpi_commutes_with_powers() {
    for base in two_var_bases() {
        let sizes = [3usize, 3];
        let fam = builtin_family(FamilyKind::Veronese, &base, &sizes).unwrap();
        let l = build(&base, &fam).unwrap();
        for k in 1..=3u32 {
            let pb = base.power(k).unwrap();
            let fam_k = builtin_family(FamilyKind::Veronese, &pb, &sizes).unwrap();
            assert_eq!(build(&pb, &fam_k).unwrap(), l.power(k).unwrap(), "base {} k={k}", base.ideal());
        }
    }
}

#[test]
fn squarefree_family_of_power_sits_inside_power() {
    // I_a I_b contains I_{a+b} but is larger once a, b ≥ 1
    for base in two_var_bases() {
        let sizes = [3usize, 3];
        let fam = builtin_family(FamilyKind::SquarefreeVeronese, &base, &sizes).unwrap();
        let l = build(&base, &fam).unwrap();
        for k in 1..=3u32 {
            let pb = base.power(k).unwrap();
            let Ok(fam_k) = builtin_family(FamilyKind::SquarefreeVeronese, &pb, &sizes) else {
                continue;
            };
            let lk = build(&pb, &fam_k).unwrap();
            assert!(lk.is_subset_of(&l.power(k).unwrap()).unwrap());
            if k == 1 {
                assert_eq!(lk, l);
            }
        }
    }
    let c = VariableContext::new([("x", 1), ("y", 1)]).unwrap();
    let base = BaseIdeal::new(ideal(&c, vec![vec![1, 1]])).unwrap();
    let sq = base.power(2).unwrap();
    let fam = builtin_family(FamilyKind::SquarefreeVeronese, &sq, &[3, 3]).unwrap();
    let fam1 = builtin_family(FamilyKind::SquarefreeVeronese, &base, &[3, 3]).unwrap();
    assert_ne!(build(&sq, &fam).unwrap(), build(&base, &fam1).unwrap().power(2).unwrap());
}

#[test]
fn gmpi_is_monotone_in_base() {
    let c = VariableContext::new([("x", 1), ("y", 1)]).unwrap();
    let small = BaseIdeal::new(ideal(&c, vec![vec![2, 2]])).unwrap();
    let large = BaseIdeal::new(ideal(&c, vec![vec![2, 1], vec![1, 2]])).unwrap();
    assert!(small.ideal().is_subset_of(large.ideal()).unwrap());
    let sizes = [3usize, 3];
    let fam_s = builtin_family(FamilyKind::Veronese, &small, &sizes).unwrap();
    let fam_l = builtin_family(FamilyKind::Veronese, &large, &sizes).unwrap();
    let (ls, ll) = (build(&small, &fam_s).unwrap(), build(&large, &fam_l).unwrap());
    assert!(ls.is_subset_of(&ll).unwrap());
}

#[test]
fn principal_family_renames_exponents() {
    for base in two_var_bases() {
        let fam = builtin_family(FamilyKind::PrincipalPower, &base, &[2, 3]).unwrap();
        let l = build(&base, &fam).unwrap();
        let mut from_base: Vec<(u32, u32)> =
            base.ideal().gens().iter().map(|g| (g.exponent(0), g.exponent(1))).collect();
        let mut from_l: Vec<(u32, u32)> = l.gens().iter().map(|g| (g.exponent(0), g.exponent(2))).collect();
        from_base.sort();
        from_l.sort();
        assert_eq!(from_base, from_l);
    }
}

#[test]
fn quotient_rendering_of_l4() {
    let c = VariableContext::new([("x", 1), ("y", 1)]).unwrap();
    let base = BaseIdeal::new(ideal(&c, vec![vec![1, 3], vec![2, 2], vec![3, 1]])).unwrap();
    let fam = builtin_family(FamilyKind::SquarefreeVeronese, &base, &[3, 3]).unwrap();
    let l = build(&base, &fam).unwrap();
    let t = betti::betti_table(&l, DEFAULT_LATTICE_BOUND).unwrap();
    assert_eq!(t.betti(0), 15);
    assert_eq!(t.entries_of(BettiOf::Quotient)[0].rank, 1);
}

#[test]
fn unbalanced_two_term_sums_fail_the_exchange() {
    // I_q J_r + I_s J_t with s > q+1, q,t >= 1, q+r = s+t
    for (n, m) in [(3, 3), (4, 4), (4, 3)] {
        let c = VariableContext::new([("x", n), ("y", m)]).unwrap();
        for q in 1..=n as u32 {
            for s in q + 2..=n as u32 {
                for t in 1..=m as u32 {
                    let r = s + t - q;
                    if r > m as u32 {
                        continue;
                    }
                    let l = mixed_sum(&c, &[(q, r), (s, t)], true).unwrap();
                    let rep = is_polymatroidal(&l).unwrap();
                    assert!(!rep.verdict, "q={q} r={r} s={s} t={t} sizes ({n},{m})");
                    assert!(witness_is_valid(&l, rep.witness.as_ref().unwrap()).unwrap());
                }
            }
        }
    }
}
