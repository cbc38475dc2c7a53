use proptest::prelude::*;
use trace_divisors::affine::{AffineExpr, ExtSymbol};
use trace_divisors::basis::{Basis, Generator};
use trace_divisors::boundary::phi_pullback_map;
use trace_divisors::pushforward::{p_push, p_q_map, ExternalCoeffs, Normalization};
use trace_divisors::trace::q_pullback;
use trace_divisors::{ClassMap, DivisorClass, Rational};

fn small_rational() -> impl Strategy<Value = Rational> {
    (-50i64..=50, 1i64..=12).prop_map(|(n, d)| Rational::new(n, d))
}

fn class_over(basis: Basis) -> impl Strategy<Value = DivisorClass> {
    let gens = basis.generators();
    proptest::collection::vec(small_rational(), gens.len()).prop_map(move |cs| {
        DivisorClass::from_terms(basis, gens.clone().into_iter().zip(cs)).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn q_pullback_is_linear(
        (k, x, y, a) in (1u32..=5).prop_flat_map(|k| {
            let basis = Basis::M0bSym(k);
            (Just(k), class_over(basis), class_over(basis), small_rational())
        })
    ) {
        let m = q_pullback(k);
        let lhs = m.apply(&(&x.scale(&a) + &y)).unwrap();
        let rhs = &m.apply(&x).unwrap().scale(&a) + &m.apply(&y).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn composition_agrees_with_sequential_application(k in 1u32..=4, cs in proptest::collection::vec(small_rational(), 8)) {
        let basis = Basis::M0bSym(k);
        let d = DivisorClass::from_terms(basis, basis.generators().into_iter().zip(cs.into_iter().cycle())).unwrap();
        let composed = p_q_map(k, Normalization::PerFactorialB).apply(&d).unwrap();
        let stepwise = p_push(k, Normalization::PerFactorialB).apply(&q_pullback(k).apply(&d).unwrap()).unwrap();
        prop_assert_eq!(composed, stepwise);
    }

    #[test]
    fn normalization_roundtrip(k in 1u32..=6, cs in proptest::collection::vec(small_rational(), 3)) {
        let d = DivisorClass::from_terms(
            Basis::Mg(k),
            [Generator::Lambda, Generator::Delta(0), Generator::Delta(1)].into_iter().zip(cs),
        )
        .unwrap();
        let raw = Normalization::convert(&d, k, Normalization::PerFactorialB, Normalization::Raw);
        prop_assert_eq!(Normalization::convert(&raw, k, Normalization::Raw, Normalization::PerFactorialB), d);
    }

    #[test]
    fn substitution_removes_every_symbol(k in 1u32..=5, vals in proptest::collection::vec(small_rational(), 10)) {
        let c = (1..=k).map(|j| (j, vals[(2 * j as usize) % 10].clone())).collect();
        let b = (1..=k).map(|j| (j, vals[(2 * j as usize + 1) % 10].clone())).collect();
        let ext = ExternalCoeffs::new(k, c, b).unwrap();
        let pushed = ClassMap::compose(&p_push(k, Normalization::Raw), &phi_pullback_map(k)).unwrap();
        for g in [Generator::LambdaP, Generator::DeltaP(0)] {
            prop_assert!(ext.apply(&pushed.row(g).unwrap()).unwrap().is_constant());
        }
        let e2 = p_push(k, Normalization::PerFactorialB).row(Generator::E2);
        if let Ok(row) = e2 {
            let sub = ext.apply(&row).unwrap();
            for j in 1..=k {
                let want = row.coefficient(Generator::Delta(j)).unwrap().substitute(&ext.values());
                prop_assert_eq!(sub.coefficient(Generator::Delta(j)).unwrap(), want);
            }
        }
    }
}

#[test]
fn symbolic_rows_stay_affine() {
    let row = p_push(3, Normalization::PerFactorialB)
        .row(Generator::E3)
        .unwrap();
    let d1 = row.coefficient(Generator::Delta(1)).unwrap();
    assert!(d1.coefficient_of(ExtSymbol::b(1)) < Rational::from(0));
    assert_eq!(d1.constant_part(), &Rational::from(0));
    let sym = DivisorClass::from_terms(
        Basis::Hurwitz(3),
        [(Generator::E2, AffineExpr::symbol(ExtSymbol::c(1)))],
    )
    .unwrap();
    assert!(p_push(3, Normalization::PerFactorialB).apply(&sym).is_err());
}
