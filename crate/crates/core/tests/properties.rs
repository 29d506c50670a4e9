mod common;

use std::collections::BTreeSet;

use num_traits::{One, Zero};
use proptest::prelude::*;

use common::*;
use shimura::hodgealg::{weil_exponent, HodgeStructure};
use shimura::modcurve::{weil_pairing, IntMatrix2, TorsionPoint};
use shimura::rootsys::{weights_of_irrep, Family, RootSystem, RootSystemType, WeightVector};
use shimura::symclass::SpecialPair;
use shimura::Rational;

fn any_type() -> impl Strategy<Value = RootSystemType> {
    let all = RootSystemType::test_range();
    (0..all.len()).prop_map(move |k| all[k])
}

fn small_type() -> impl Strategy<Value = RootSystemType> {
    let small: Vec<RootSystemType> = RootSystemType::test_range().into_iter().filter(|t| t.rank() <= 3).collect();
    (0..small.len()).prop_map(move |k| small[k])
}

fn hodge_structure() -> impl Strategy<Value = HodgeStructure> {
    prop::collection::vec(((-4i32..=4, -4i32..=4), 1u64..4), 0..6).prop_map(|parts| {
        let sym = parts.iter().flat_map(|&((p, q), h)| {
            if p == q {
                vec![((p, q), h)]
            } else {
                vec![((p, q), h), ((q, p), h)]
            }
        });
        HodgeStructure::new(sym).unwrap()
    })
}

proptest! {
    #[test]
    fn highest_root_dominates(ty in any_type()) {
        let rs = RootSystem::build(ty);
        let top = rs.highest_root();
        for i in 1..=rs.rank() {
            prop_assert!(rs.coroot_pairing(top, i) >= Rational::zero());
        }
        for r in rs.positive_roots() {
            prop_assert!((1..=rs.rank()).all(|i| r.coeff(i) <= top.coeff(i)));
        }
    }

    #[test]
    fn fundamental_weights_are_dual_to_coroots(ty in any_type()) {
        let rs = RootSystem::build(ty);
        for i in 1..=rs.rank() {
            let w = rs.fundamental_weight(i);
            for j in 1..=rs.rank() {
                let expected = if i == j { Rational::one() } else { Rational::zero() };
                prop_assert_eq!(rs.coroot_pairing(&w, j), expected);
            }
        }
    }

    #[test]
    fn opposition_is_a_diagram_involution(ty in any_type()) {
        let rs = RootSystem::build(ty);
        let tau = rs.opposition_involution();
        prop_assert!(tau.is_involution());
        let a = rs.cartan();
        let n = rs.rank();
        prop_assert!((1..=n).all(|i| (1..=n).all(|j| a[tau.image(i) - 1][tau.image(j) - 1] == a[i - 1][j - 1])));
        // τ preserves the set of special nodes
        let special = rs.special_nodes();
        prop_assert_eq!(special.iter().map(|&s| tau.image(s)).collect::<BTreeSet<_>>(), special);
    }

    #[test]
    fn symplectic_nodes_are_tau_stable(ty in any_type()) {
        let rs = RootSystem::build(ty);
        let tau = rs.opposition_involution();
        for s in rs.special_nodes() {
            let v = SpecialPair::new(rs.clone(), s).unwrap().symplectic_nodes();
            prop_assert_eq!(v.nodes.iter().map(|&i| tau.image(i)).collect::<BTreeSet<_>>(), v.nodes.clone());
        }
    }

    #[test]
    fn freudenthal_matches_weyl_dimension(ty in small_type(), labels in prop::collection::vec(0i64..=2, 3)) {
        let rs = RootSystem::build(ty);
        let n = rs.rank();
        let ls: Vec<Rational> = labels[..n].iter().map(|&x| q(x)).collect();
        let top = rs.from_dynkin_labels(&ls).unwrap();
        let ws = weights_of_irrep(&rs, &top).unwrap();
        let dim: u64 = ws.iter().map(|w| w.multiplicity).sum();
        let rho = rs.rho();
        let shifted = top.checked_add(&rho).unwrap();
        let weyl: Rational = rs
            .positive_roots()
            .iter()
            .map(|a| rs.inner_product(&shifted, a) / rs.inner_product(&rho, a))
            .product();
        prop_assert_eq!(q(dim as i64), weyl);
    }

    #[test]
    fn weight_vector_strings_roundtrip(nums in prop::collection::vec((-50i64..50, 1i64..12), 1..9)) {
        let w = WeightVector::new(nums.iter().map(|&(p, d)| Rational::new(p.into(), d.into())).collect());
        prop_assert_eq!(WeightVector::from_strings(&w.to_strings()).unwrap(), w);
    }

    #[test]
    fn filtration_roundtrip(h in hodge_structure()) {
        prop_assert_eq!(HodgeStructure::from_filtration(&h.to_filtration()).unwrap(), h);
    }

    #[test]
    fn hodge_operations(a in hodge_structure(), b in hodge_structure()) {
        prop_assert_eq!(a.dual().dual(), a.clone());
        prop_assert_eq!(a.tensor(&b).dim(), a.dim() * b.dim());
        prop_assert_eq!(a.tensor(&b), b.tensor(&a));
        prop_assert_eq!(a.direct_sum(&b).dim(), a.dim() + b.dim());
        prop_assert_eq!(a.tensor(&HodgeStructure::tate(0)), a.clone());
        if !a.is_zero() {
            prop_assert_eq!(a.dual().level().unwrap(), a.level().unwrap());
            prop_assert_eq!(a.tensor(&HodgeStructure::tate(2)).level().unwrap(), a.level().unwrap());
        }
        let end = a.end_structure();
        prop_assert_eq!(end.dual(), end.clone());
        let json = serde_json::to_string(&a).unwrap();
        prop_assert_eq!(serde_json::from_str::<HodgeStructure>(&json).unwrap(), a);
    }

    #[test]
    fn tate_twists_add(m in -6i32..6, k in -6i32..6) {
        prop_assert_eq!(HodgeStructure::tate(m).tensor(&HodgeStructure::tate(k)), HodgeStructure::tate(m + k));
        prop_assert_eq!(HodgeStructure::tate(m).dual(), HodgeStructure::tate(-m));
    }

    #[test]
    fn weil_exponents(p in -10i32..10, q in -10i32..10) {
        prop_assert_eq!((weil_exponent(p, q) + weil_exponent(q, p)) % 4, 0);
        prop_assert_eq!(weil_exponent(p, q), weil_exponent(p - 3, q - 3));
    }

    #[test]
    fn weil_pairing_is_sl2_invariant(
        n in 2u64..30,
        word in prop::collection::vec(0usize..3, 0..8),
        coords in (0i64..30, 0i64..30, 0i64..30, 0i64..30),
    ) {
        let gens = [IntMatrix2::new(0, -1, 1, 0), IntMatrix2::new(1, 1, 0, 1), IntMatrix2::new(1, 0, -1, 1)];
        let g = word.iter().fold(IntMatrix2::IDENTITY, |acc, &k| acc.mul(&gens[k]));
        prop_assert_eq!(g.det(), 1);
        let p = TorsionPoint::new(coords.0, coords.1, n);
        let r = TorsionPoint::new(coords.2, coords.3, n);
        prop_assert_eq!(weil_pairing(&g.act(&p), &g.act(&r)).unwrap(), weil_pairing(&p, &r).unwrap());
        prop_assert_eq!((weil_pairing(&p, &r).unwrap() + weil_pairing(&r, &p).unwrap()) % n, 0);
    }
}

#[test]
fn opposition_by_descent_across_the_range() {
    for ty in RootSystemType::test_range() {
        let rs = RootSystem::build(ty);
        assert_eq!(rs.opposition_involution().images().to_vec(), opposition_by_descent(rs.cartan()), "{ty}");
    }
}

#[test]
fn weyl_group_orders() {
    for (t, order) in [("A3", 24), ("B3", 48), ("C4", 384), ("D4", 192), ("F4", 1152), ("G2", 12)] {
        let rs = RootSystem::build(t.parse().unwrap());
        assert_eq!(weyl_group(rs.cartan()).len(), order, "{t}");
    }
}

#[test]
fn type_d_diagram_automorphisms() {
    for n in 4..=8 {
        let rs = RootSystem::of(Family::D, n).unwrap();
        let autos = diagram_automorphisms(rs.cartan());
        assert_eq!(autos.len(), if n == 4 { 6 } else { 2 }, "D{n}");
        let orbit_of_1: BTreeSet<usize> = autos.iter().map(|p| p[0]).collect();
        let expected: BTreeSet<usize> = if n == 4 { [1, 3, 4].into() } else { [1].into() };
        assert_eq!(orbit_of_1, expected, "D{n}");
    }
}

#[test]
fn oracle_tables_cover_the_range() {
    for ty in RootSystemType::test_range() {
        let rs = RootSystem::build(ty);
        if ty.family() != Family::D || ty.rank() >= 4 {
            assert_eq!(rs.highest_root(), &WeightVector::from_integers(&table_highest_root(ty)), "{ty}");
        }
        assert_eq!(rs.connection_index(), table_connection_index(ty), "{ty}");
    }
}

#[test]
fn type_a_end_node_coefficients() {
    for n in 1..=8usize {
        let rs = RootSystem::of(Family::A, n).unwrap();
        let tau = rs.opposition_involution();
        for i in 1..=n {
            let w = rs.fundamental_weight(i);
            let sum = w.checked_add(&tau.apply(&w).unwrap()).unwrap();
            // (1, 2, …, m, m, …, m, …, 2, 1) with m = min(i, n + 1 − i)
            let m = i.min(n + 1 - i);
            let expected: Vec<i64> = (1..=n).map(|j| j.min(n + 1 - j).min(m) as i64).collect();
            assert_eq!(sum, WeightVector::from_integers(&expected), "A{n} i={i}");
            for s in [1, n] {
                assert!(SpecialPair::new(rs.clone(), s).unwrap().is_symplectic_weight(i).unwrap());
            }
        }
    }
}

#[test]
fn empty_symplectic_sets_are_exactly_type_e() {
    for ty in RootSystemType::test_range() {
        let rs = RootSystem::build(ty);
        for s in rs.special_nodes() {
            let empty = SpecialPair::new(rs.clone(), s).unwrap().symplectic_nodes().nodes.is_empty();
            assert_eq!(empty, ty.family() == Family::E, "{ty} s={s}");
        }
    }
}

#[test]
fn products_decide_factorwise() {
    use shimura::symclass::{hodge_type_decision, FactorInput, Flavor, HodgeTypeVerdict, Isogeny};
    let pool = [
        ("A3", vec![Flavor::Noncompact(2)], Isogeny::SimplyConnected),
        ("C2", vec![Flavor::Noncompact(2), Flavor::Compact], Isogeny::SimplyConnected),
        ("D5", vec![Flavor::Noncompact(5)], Isogeny::Varpi1Quotient),
        ("D5", vec![Flavor::Noncompact(1), Flavor::Noncompact(4)], Isogeny::Varpi1Quotient),
        ("E6", vec![Flavor::Noncompact(1)], Isogeny::SimplyConnected),
        ("B3", vec![Flavor::Noncompact(1)], Isogeny::Adjoint),
    ];
    let factors: Vec<FactorInput> =
        pool.iter().map(|(t, f, i)| FactorInput::new(t.parse().unwrap(), f.clone(), *i).unwrap()).collect();
    for a in 0..factors.len() {
        for b in 0..factors.len() {
            let both = hodge_type_decision(&[factors[a].clone(), factors[b].clone()]);
            let each_ok = [a, b].iter().all(|&k| hodge_type_decision(&[factors[k].clone()]) == HodgeTypeVerdict::HodgeType);
            assert_eq!(both == HodgeTypeVerdict::HodgeType, each_ok, "{a} {b}");
        }
    }
}
