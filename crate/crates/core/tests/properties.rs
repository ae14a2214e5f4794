use cmreg::theorems::{check_regfpd, Verdict};
use cmreg::tor::{koszul_homology, tor_multi};
use cmreg::{
    a_invariants, regularity, CoefficientField, ExtInt, GradedModule, Ideal, PolyRing, Polynomial,
    QuotientRing, RegRoute,
};
use proptest::prelude::*;

fn mono(e: &[u32]) -> String {
    let parts: Vec<String> = e
        .iter()
        .enumerate()
        .filter(|(_, &k)| k > 0)
        .map(|(i, &k)| format!("x{i}^{k}"))
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

/// A monomial, or `m - m'` with `m'` a variable permutation of `m`.
fn generator(n: usize) -> impl Strategy<Value = String> {
    (prop::collection::vec(0u32..=2, n), any::<bool>()).prop_filter_map("constant", move |(e, binomial)| {
        if e.iter().all(|&k| k == 0) {
            return None;
        }
        let mut r = e.clone();
        r.rotate_left(1);
        Some(if binomial && r != e {
            format!("{} - {}", mono(&e), mono(&r))
        } else {
            mono(&e)
        })
    })
}

fn gens(n: usize) -> impl Strategy<Value = Vec<String>> {
    prop::collection::vec(generator(n), 1..=3)
}

fn setup(n: usize, g: &[String]) -> (QuotientRing, Ideal) {
    let ring = QuotientRing::polynomial(PolyRing::new(CoefficientField::Rationals, n));
    let polys: Vec<Polynomial> = g.iter().map(|s| ring.parse(s).unwrap()).collect();
    let i = Ideal::new(&ring, polys).unwrap();
    (ring, i)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn products_and_colons_stay_inside(a in gens(3), b in gens(3)) {
        let (_, i) = setup(3, &a);
        let (_, j) = setup(3, &b);
        let prod = i.product(&j).unwrap();
        let meet = i.intersection(&j).unwrap();
        prop_assert!(i.contains_ideal(&prod) && j.contains_ideal(&prod));
        prop_assert!(meet.contains_ideal(&prod));
        prop_assert!(i.contains_ideal(&meet) && j.contains_ideal(&meet));
        let colon = i.quotient(&j).unwrap();
        prop_assert!(i.contains_ideal(&colon.product(&j).unwrap()));
        prop_assert!(colon.contains_ideal(&i));
    }

    #[test]
    fn saturation_is_idempotent(a in gens(3)) {
        let (_, i) = setup(3, &a);
        let sat = i.saturation();
        prop_assert!(sat.contains_ideal(&i));
        prop_assert_eq!(sat.saturation(), sat.clone());
        if i.dim() > ExtInt::Fin(0) {
            prop_assert_eq!(sat.dim(), i.dim());
        } else {
            prop_assert!(sat.is_unit());
        }
    }

    #[test]
    fn hilbert_functions_add_up(a in gens(3)) {
        let (ring, i) = setup(3, &a);
        let whole = GradedModule::ring_module(&ring).hilbert_data(0, 10).values;
        let q = i.quotient_module().hilbert_data(0, 10).values;
        let sub = i.as_module().hilbert_data(0, 10).values;
        for d in 0..=10 {
            prop_assert_eq!(whole[d], q[d] + sub[d]);
        }
    }

    #[test]
    fn regularity_routes_agree(a in gens(4)) {
        let (_, i) = setup(4, &a);
        let m = i.quotient_module();
        let dual = regularity(&m, RegRoute::Duality).unwrap();
        let betti = regularity(&m, RegRoute::Betti).unwrap();
        prop_assert_eq!(dual, betti);
        prop_assert_eq!(a_invariants(&m).cd, m.dim());
        prop_assert_eq!(check_regfpd(&m).verdict, Verdict::Holds);
    }

    #[test]
    fn tor_is_symmetric(a in gens(3), b in gens(3)) {
        let (_, i) = setup(3, &a);
        let (_, j) = setup(3, &b);
        let (m, n) = (i.quotient_module(), j.quotient_module());
        for k in 0..=3 {
            let mn = tor_multi(&[m.clone(), n.clone()], k).unwrap().hilbert_data(0, 9).values;
            let nm = tor_multi(&[n.clone(), m.clone()], k).unwrap().hilbert_data(0, 9).values;
            prop_assert_eq!(mn, nm);
        }
    }

    #[test]
    fn printed_polynomials_parse_back(a in gens(4)) {
        let (ring, i) = setup(4, &a);
        for g in i.gb() {
            prop_assert_eq!(&ring.parse(&g.to_string()).unwrap(), g);
        }
    }
}

#[test]
fn koszul_homology_of_a_regular_sequence_vanishes() {
    let ring = QuotientRing::polynomial(PolyRing::new(CoefficientField::Prime(5), 3));
    let forms: Vec<Polynomial> = ["x0^2", "x1^3 - x0*x1^2", "x2"].iter().map(|s| ring.parse(s).unwrap()).collect();
    let r = GradedModule::ring_module(&ring);
    for i in 1..=3 {
        assert!(koszul_homology(&forms, &r, i).unwrap().is_zero(), "H_{i} nonzero");
    }
    let h0 = koszul_homology(&forms, &r, 0).unwrap();
    assert_eq!(h0.hilbert_data(0, 5).values, vec![1, 2, 2, 1, 0, 0]);
}

#[test]
fn hypersurface_resolution_is_periodic() {
    let amb = PolyRing::new(CoefficientField::Rationals, 2);
    let s = QuotientRing::new(amb, vec![amb.parse("x0*x1").unwrap()]).unwrap();
    let k = GradedModule::residue_field(&s);
    let b = k.resolution(5).betti();
    for i in 0..=5 {
        assert_eq!(b.rank(i), if i == 0 { 1 } else { 2 }, "rank of F_{i}");
        assert_eq!(b.b(i), ExtInt::Fin(i as i64));
    }
    assert_eq!(a_invariants(&GradedModule::ring_module(&s)).reg, ExtInt::Fin(1));
}
