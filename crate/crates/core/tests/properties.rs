use std::cell::Cell;
use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;

use exactcomb::analysis::{
    asym_error, falling, falling_to_power, generalized_terms_exact, power_to_falling, reciprocal_series, FactorialKind,
};
use exactcomb::cli::{parse, print};
use exactcomb::exact::{pow_i64, rat, rat_int};
use exactcomb::iverson::{assign, bracket, guarded_term, verify_identity, CmpOp, IdentityParams, Predicate, Term};
use exactcomb::numbers::{binomial, factorial, stirling_cycle, stirling_subset};
use exactcomb::oracles::{random_poset, Poset};
use exactcomb::stirling_poly::{cycle_poly, cycle_poly_values_at, subset_poly};
use exactcomb::{ExactRational, UniPoly};

fn positive_rational() -> impl Strategy<Value = ExactRational> {
    (1i64..=2000, 1i64..=200).prop_map(|(a, b)| rat(a, b))
}

fn any_rational() -> impl Strategy<Value = ExactRational> {
    (-500i64..=500, 1i64..=60).prop_map(|(a, b)| rat(a, b))
}

proptest! {
    #[test]
    fn cycle_recurrence_on_plane(n in -12i64..=12, k in -12i64..=12) {
        prop_assert_eq!(stirling_cycle(n + 1, k), BigInt::from(n) * stirling_cycle(n, k) + stirling_cycle(n, k - 1));
    }

    #[test]
    fn subset_recurrence_on_plane(n in -12i64..=12, k in -12i64..=12) {
        prop_assert_eq!(stirling_subset(n + 1, k), BigInt::from(k) * stirling_subset(n, k) + stirling_subset(n, k - 1));
    }

    #[test]
    fn duality_on_plane(n in -40i64..=40, k in -40i64..=40) {
        prop_assert_eq!(stirling_subset(n, k), stirling_cycle(-k, -n));
    }

    #[test]
    fn pascal_on_plane(n in -30i64..=30, k in -30i64..=30) {
        prop_assert_eq!(binomial(n + 1, k + 1), binomial(n, k) + binomial(n, k + 1));
    }

    #[test]
    fn cycle_column_one(n in -10i64..=20) {
        let want = if n >= 1 { factorial(n - 1).unwrap() } else { BigInt::zero() };
        prop_assert_eq!(stirling_cycle(n, 1), want);
    }

    #[test]
    fn cycle_poly_matches_table(k in 0usize..=6, n in -8i64..=20) {
        let g = cycle_poly(k);
        prop_assert_eq!(g.degree(), if k == 0 { Some(0) } else { Some(2 * k) });
        prop_assert_eq!(g.eval_int(n), ExactRational::from(stirling_cycle(n, n - k as i64)));
    }

    #[test]
    fn subset_poly_is_reflected_cycle_poly(k in 0usize..=8) {
        let reflected = cycle_poly(k).compose_affine(&rat_int(-1), &rat_int(0));
        prop_assert_eq!(subset_poly(k), reflected);
    }

    #[test]
    fn strong_zero_never_evaluates_term(a in -20i64..=20, b in -20i64..=20) {
        let guard: Predicate = Predicate::cmp(Term::var("a"), CmpOp::Lt, Term::var("b"));
        let calls = Cell::new(0);
        let env = assign(&[("a", a), ("b", b)]);
        let v = guarded_term(&guard, |_| { calls.set(calls.get() + 1); Ok(rat_int(1) / rat_int(a - a + 1)) }, &env).unwrap();
        if a < b {
            prop_assert_eq!((v, calls.get()), (rat_int(1), 1));
        } else {
            prop_assert_eq!((v, calls.get()), (rat_int(0), 0));
        }
    }

    #[test]
    fn bracket_algebra(a in -15i64..=15, b in -15i64..=15, m in 1i64..=12) {
        let env = assign(&[("a", a), ("b", b), ("m", m)]);
        let p: Predicate = Predicate::cmp(Term::var("a"), CmpOp::Le, Term::var("b"));
        let q: Predicate = Predicate::Divides(Term::var("m"), Term::var("a"));
        let sum = bracket(&p, &env).unwrap() + bracket(&p.clone().complement(), &env).unwrap();
        prop_assert_eq!(sum, rat_int(1));
        let both = bracket(&Predicate::And(vec![p.clone(), q.clone()]), &env).unwrap();
        prop_assert_eq!(both, bracket(&p, &env).unwrap() * bracket(&q, &env).unwrap());
    }

    #[test]
    fn set_bracket_inclusion_exclusion(
        a in proptest::collection::btree_set(-10i64..=10, 0..8),
        b in proptest::collection::btree_set(-10i64..=10, 0..8),
        k in -12i64..=12,
    ) {
        let set = |s: &BTreeSet<i64>| s.iter().map(|&x| BigInt::from(x)).collect::<BTreeSet<_>>();
        let env = assign(&[("k", k)]);
        let br = |s: &BTreeSet<i64>| bracket(&Predicate::In(Term::var("k"), set(s)), &env).unwrap();
        let union: BTreeSet<i64> = a.union(&b).copied().collect();
        let inter: BTreeSet<i64> = a.intersection(&b).copied().collect();
        prop_assert_eq!(br(&a) + br(&b), br(&union) + br(&inter));
    }

    #[test]
    fn catalog_identities_hold(
        id in prop::sample::select(vec!["1.2", "1.3", "1.5", "1.8", "1.11", "1.12", "1.13", "1.14", "1.15", "1.18", "1.19"]),
        n in 1i64..=12,
        k in -20i64..=20,
        z in -9i64..=9,
    ) {
        let params = IdentityParams::new().set("n", n).set("k", k).set("z", z).set("x", n * 3).set("y", z);
        let r = verify_identity(id, &params).unwrap();
        prop_assert!(r.holds, "{} with n={} k={} z={}: {} vs {}", id, n, k, z, r.lhs, r.rhs);
    }

    #[test]
    fn falling_basis_round_trip(coeffs in proptest::collection::vec(any_rational(), 0..=11)) {
        let p = UniPoly::from_coeffs(coeffs);
        prop_assert_eq!(falling_to_power(&power_to_falling(&p)), p);
    }

    #[test]
    fn falling_addition_law(z in any_rational(), m in -5i64..=5, n in -5i64..=5) {
        let (Ok(lhs), Ok(a), Ok(b)) = (falling(&z, m + n), falling(&z, m), falling(&(&z - rat_int(m)), n)) else {
            return Ok(());
        };
        prop_assert_eq!(lhs, a * b);
    }

    #[test]
    fn reciprocal_series_is_exact(z in positive_rational(), n in 1usize..=20) {
        let (partial, rem) = reciprocal_series(&z, n).unwrap();
        prop_assert_eq!(partial + rem, z.recip());
    }

    #[test]
    fn integer_exponent_series_is_finite_and_exact(z in any_rational(), n in 0u32..=9) {
        let terms = generalized_terms_exact(&z, n).unwrap();
        for (k, t) in terms.iter().enumerate() {
            let want = ExactRational::from(stirling_subset(n as i64, n as i64 - k as i64)) * falling(&z, n as i64 - k as i64).unwrap();
            prop_assert_eq!(t, &want);
        }
        prop_assert_eq!(terms.into_iter().sum::<ExactRational>(), pow_i64(&z, n as i64).unwrap());
    }

    #[test]
    fn parse_print_round_trip(src in expr_source()) {
        let e = parse(&src).unwrap_or_else(|err| panic!("{src}: {err}"));
        let printed = print(&e);
        let again = parse(&printed).unwrap_or_else(|err| panic!("{printed}: {err}"));
        prop_assert_eq!(&again, &e);
        prop_assert_eq!(print(&again), printed);
    }

    #[test]
    fn random_poset_reciprocity(p in 1usize..=6, density in 0.0f64..=1.0, seed in any::<u64>()) {
        let poset = random_poset(p, density, seed).unwrap();
        prop_assert!(poset.reciprocity_holds().unwrap());
        prop_assert_eq!(Poset::parse(&poset.to_string()).unwrap(), poset);
    }
}

fn expr_source() -> impl Strategy<Value = String> {
    let atom = prop_oneof![
        (0u32..100).prop_map(|n| n.to_string()),
        (0u32..100, 1u32..100).prop_map(|(a, b)| format!("{a}.{b:02}")),
        prop::sample::select(vec!["n", "k", "x"]).prop_map(String::from),
    ];
    atom.prop_recursive(3, 24, 3, |inner| {
        let pred_atom = prop_oneof![
            (inner.clone(), prop::sample::select(vec!["<", "<=", "=", "!=", ">", ">="]), inner.clone())
                .prop_map(|(a, op, b)| format!("{a} {op} {b}")),
            (inner.clone(), prop::sample::select(vec!["prime", "even", "odd"])).prop_map(|(a, p)| format!("{a} {p}")),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| format!("{a} divides {b}")),
            inner.clone().prop_map(|a| format!("{a} in {{1, 3, -2}}")),
        ];
        let pred = prop_oneof![
            pred_atom.clone(),
            (pred_atom.clone(), pred_atom.clone()).prop_map(|(p, q)| format!("{p} and not ({q})")),
            (pred_atom.clone(), pred_atom).prop_map(|(p, q)| format!("({p} or {q}) and true")),
        ];
        prop_oneof![
            (inner.clone(), prop::sample::select(vec!["+", "-", "*", "/", "^"]), inner.clone())
                .prop_map(|(a, op, b)| format!("({a}) {op} ({b})")),
            inner.clone().prop_map(|a| format!("-({a})")),
            (
                prop::sample::select(vec!["binomial", "cycle", "subset", "falling", "rising", "mod"]),
                inner.clone(),
                inner.clone()
            )
                .prop_map(|(f, a, b)| format!("{f}({a}, {b})")),
            (prop::sample::select(vec!["factorial", "floor", "ceil", "ilg"]), inner.clone())
                .prop_map(|(f, a)| format!("{f}({a})")),
            pred.clone().prop_map(|p| format!("[{p}]")),
            (prop::sample::select(vec!["sum", "prod"]), inner.clone(), inner.clone(), pred, inner)
                .prop_map(|(op, lo, hi, g, body)| format!("{op}(j = {lo}..{hi}, [{g}], {body})")),
        ]
    })
}

#[test]
fn row_sums_match_factorials_and_bell_numbers() {
    for n in 0..=9 {
        let cycles: BigInt = (0..=n).map(|k| stirling_cycle(n, k)).sum();
        let subsets: BigInt = (0..=n).map(|k| stirling_subset(n, k)).sum();
        assert_eq!(cycles, factorial(n).unwrap());
        assert_eq!(subsets, exactcomb::oracles::bell(n).unwrap());
    }
}

#[test]
fn asymptotic_error_order() {
    // alpha = 1/3 has g_2 = 0, so its order comes from the first nonzero
    // omitted coefficient.
    for alpha in [rat(1, 2), rat(-1, 2), rat(1, 3)] {
        let g = cycle_poly_values_at(&alpha, 14);
        for kind in [FactorialKind::Rising, FactorialKind::Falling] {
            for m in 1..=5usize {
                let order = (m + 1..).find(|&j| !g[j].is_zero()).unwrap();
                let e10 = asym_error(&alpha, &rat_int(10), m, kind).unwrap();
                let e100 = asym_error(&alpha, &rat_int(100), m, kind).unwrap();
                let ratio = (e10 / e100).abs();
                let target = 10f64.powi(order as i32);
                assert!(ratio >= target / 3.0 && ratio <= 3.0 * target, "alpha={alpha} m={m} {kind:?}: {ratio:e}");
            }
        }
    }
}

#[test]
fn second_cycle_coefficient_vanishes_at_one_third() {
    assert!(cycle_poly_values_at(&rat(1, 3), 2)[2].is_zero());
    assert!(!cycle_poly_values_at(&rat(1, 3), 3)[3].is_zero());
    assert!(cycle_poly(0).eval(&rat(1, 3)).is_one());
}
