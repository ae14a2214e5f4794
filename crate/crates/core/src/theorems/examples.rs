use crate::complex::ChainComplex;
use crate::extint::ExtInt::Fin;
use crate::field::CoefficientField;
use crate::ideal::Ideal;
use crate::module::GradedModule;
use crate::poly::{PolyRing, Polynomial};
use crate::ring::QuotientRing;

use super::*;

fn poly(field: CoefficientField, n: usize) -> QuotientRing {
    QuotientRing::polynomial(PolyRing::new(field, n))
}

fn qq(n: usize) -> QuotientRing {
    poly(CoefficientField::Rationals, n)
}

fn quotient(field: CoefficientField, n: usize, rels: &[&str]) -> QuotientRing {
    let r = PolyRing::new(field, n);
    let gens = rels.iter().map(|s| r.parse(s).unwrap()).collect();
    QuotientRing::new(r, gens).unwrap()
}

fn polys(ring: &QuotientRing, gens: &[&str]) -> Vec<Polynomial> {
    gens.iter().map(|s| ring.parse(s).unwrap()).collect()
}

fn cyc(ring: &QuotientRing, gens: &[&str]) -> GradedModule {
    GradedModule::cyclic(ring, &polys(ring, gens)).unwrap()
}

fn ideal(ring: &QuotientRing, gens: &[&str]) -> Ideal {
    Ideal::new(ring, polys(ring, gens)).unwrap()
}

fn assert_holds(r: &TheoremReport) {
    assert_eq!(r.verdict, Verdict::Holds, "{}: {:?}", r.input, r.failed_checks());
}

fn conditions(r: &TheoremReport) -> [bool; 3] {
    let f = |k: &str| r.details[k].as_bool().unwrap();
    [f("tor1_zero_and_cm"), f("codim_equals_sum_pd"), f("proper_and_cm")]
}

#[test]
fn regtor_regular_sequence() {
    let ring = qq(2);
    let r = check_regtor(&[cyc(&ring, &["x0^2"]), cyc(&ring, &["x1^2"])]).unwrap();
    assert_holds(&r);
    assert_eq!(r.lhs, Some(Fin(2)));
    assert_eq!(r.rhs, Some(Fin(2)));
}

#[test]
fn regtor_self_pair_and_gate() {
    let ring = qq(2);
    let m = cyc(&ring, &["x0^2", "x0*x1"]);
    let r = check_regtor(&[m.clone(), m]).unwrap();
    assert_holds(&r);
    assert!(r.details.get("attained_at").is_some());

    let s = quotient(CoefficientField::Rationals, 2, &["x0^2"]);
    let k = GradedModule::residue_field(&s);
    let r = check_regtor(&[k.clone(), k]).unwrap();
    assert_eq!(r.verdict, Verdict::Vacuous);
    assert_eq!(r.hypothesis(hyp::FINITE_PD), Some(HypothesisStatus::Failed));
}

#[test]
fn regfpd_examples() {
    let s = quotient(CoefficientField::Rationals, 2, &["x0*x1"]);
    let r = check_regfpd(&cyc(&s, &["x0"]));
    assert_eq!(r.verdict, Verdict::Vacuous);

    let q = quotient(CoefficientField::Rationals, 3, &["x0^2 + x1^2 + x2^2"]);
    let r = check_regfpd(&cyc(&q, &["x0 + 2*x1 + 3*x2"]));
    assert_holds(&r);
    assert_eq!(r.details["reg_s"], serde_json::json!(1));

    let r = check_regfpd(&cyc(&qq(3), &["x0^2", "x1*x2"]));
    assert_holds(&r);
}

#[test]
fn rigidity_and_proper_intersections() {
    let ring = qq(2);
    let r = check_rigidity_and_proper(&[cyc(&ring, &["x0"]), cyc(&ring, &["x1"])]).unwrap();
    assert_holds(&r);
    assert_eq!(conditions(&r), [true, true, true]);

    let r = check_rigidity_and_proper(&[cyc(&ring, &["x0"]), cyc(&ring, &["x0"])]).unwrap();
    assert_holds(&r);
    assert_eq!(conditions(&r), [false, false, false]);

    let r = check_rigidity_and_proper(&[cyc(&ring, &["x0^2", "x0*x1"]), cyc(&ring, &["x1"])]).unwrap();
    assert_holds(&r);
    assert_eq!(conditions(&r), [false, false, false]);
}

#[test]
fn nonacyclic_koszul_complexes() {
    let ring = qq(2);
    let m = GradedModule::ring_module(&ring);
    let f = ChainComplex::koszul(&ring, &polys(&ring, &["x0", "x1"])).unwrap();
    assert_holds(&check_nonacyclic(&f, &m).unwrap());
    let f = ChainComplex::koszul(&ring, &polys(&ring, &["x0^2", "x0^2"])).unwrap();
    let r = check_nonacyclic(&f, &m).unwrap();
    assert_ne!(r.verdict, Verdict::Violated);
    assert_ne!(r.verdict, Verdict::CounterexampleCandidate);
}

#[test]
fn koszul_bound_table() {
    let ring = qq(2);
    let m = GradedModule::ring_module(&ring);
    assert_holds(&check_koszul_bounds(&m, &polys(&ring, &["x0^2"])).unwrap());
    assert_holds(&check_koszul_bounds(&m, &polys(&ring, &["x0^2", "x1^3"])).unwrap());
    let r = check_koszul_bounds(&m, &[]).unwrap();
    assert_holds(&r);
}

#[test]
fn frobenius_examples() {
    let f2 = poly(CoefficientField::Prime(2), 2);
    let rs = check_frobenius_bound(&cyc(&f2, &["x0", "x1"]), 1, &Assertions::none()).unwrap();
    assert_eq!(rs.len(), 2);
    for r in &rs {
        assert_holds(r);
    }
    assert_eq!(rs[1].details["reg"], serde_json::json!(2));

    let q = quotient(CoefficientField::Prime(5), 3, &["x0^2 + x1^2 + x2^2"]);
    for r in check_frobenius_bound(&cyc(&q, &["x2"]), 1, &Assertions::none()).unwrap() {
        assert_holds(&r);
    }
    assert!(check_frobenius_bound(&cyc(&qq(2), &["x0"]), 1, &Assertions::none()).is_err());
}

#[test]
fn power_bounds_cd1() {
    let ring = qq(2);
    let rs = check_power_bound_cd1(&ideal(&ring, &["x0^2", "x0*x1"]), 3);
    for (m, r) in rs.iter().enumerate() {
        assert_holds(r);
        assert_eq!(r.lhs, Some(Fin(2 * m as i64 + 1)));
    }
    for r in check_power_bound_cd1(&ideal(&ring, &["x0", "x1"]), 3) {
        assert_holds(&r);
    }
    for r in check_power_bound_cd1(&ideal(&ring, &["x0"]), 3) {
        assert_holds(&r);
    }
}

#[test]
fn power_bounds_dim2() {
    let ring = qq(3);
    let rs = check_power_bound_dim2(&ideal(&ring, &["x0^2", "x0*x1"]), 3, &Assertions::none());
    assert_eq!(rs.len(), 2);
    for r in &rs {
        assert_holds(r);
    }
    for (j, r) in (2..).zip(check_power_bound_dim2(&ideal(&ring, &["x0"]), 4, &Assertions::none())) {
        assert_holds(&r);
        assert_eq!(r.lhs, Some(Fin(j)));
    }
    for r in check_power_bound_dim2(&ideal(&qq(4), &["x0^2", "x0*x1"]), 3, &Assertions::none()) {
        assert_eq!(r.verdict, Verdict::Vacuous);
    }
}

#[test]
fn power_kernel_reports() {
    let ring = qq(3);
    for gens in [&["x0^2", "x0*x1"][..], &["x0"], &["x0*x1"], &["x0^2", "x0*x1", "x0*x2^2"]] {
        for r in check_power_kernel(&ideal(&ring, gens), 3, &Assertions::none()).unwrap() {
            assert_holds(&r);
        }
    }
}

#[test]
fn kahler_examples() {
    let b = quotient(CoefficientField::Rationals, 4, &["x0*x3 - x1*x2"]);
    let r = check_kahler_bounds(&b, &Assertions::none());
    assert_holds(&r);
    assert_eq!(r.checks.len(), 4);
    let b = quotient(CoefficientField::Rationals, 3, &["x0*x2 - x1^2"]);
    assert_eq!(check_kahler_bounds(&b, &Assertions::none()).verdict, Verdict::Vacuous);
    let r = check_kahler_bounds(&qq(3), &Assertions::none());
    assert_holds(&r);
    assert_eq!(r.checks[0].lhs, r.checks[0].rhs);
}

#[test]
fn betti_transfer_over_quadric() {
    let q = quotient(CoefficientField::Rationals, 3, &["x0^2 + x1^2 + x2^2"]);
    let r = check_betti_transfer(&cyc(&q, &["x0"]), 4);
    assert_holds(&r);
    assert_eq!(r.hypothesis(hyp::REG_S_ONE), Some(HypothesisStatus::Verified));
    let s = GradedModule::ring_module(&q);
    assert_holds(&check_betti_transfer(&s, 3));
    let d = betti_transfer_data(&s, 3);
    assert_eq!(&d.e[..2], &[Fin(0), Fin(0)]);
    assert!(d.reg_s_m.iter().all(|v| *v == Fin(0)));
    assert_holds(&check_estbetti(&cyc(&q, &["x0", "x1"]), 3));
}

#[test]
fn intersection_bounds() {
    let ring = qq(4);
    let r = check_intersection_bound(&[ideal(&ring, &["x0"]), ideal(&ring, &["x1"])], &Assertions::none()).unwrap();
    assert_holds(&r);
    let ring = qq(3);
    let r = check_intersection_bound(
        &[ideal(&ring, &["x0^2 - x1*x2"]), ideal(&ring, &["x1^2 - x0*x2"])],
        &Assertions::none(),
    )
    .unwrap();
    assert_ne!(r.verdict, Verdict::Violated);
    assert!(check_intersection_bound(&[], &Assertions::none()).is_err());
}

#[test]
fn regtorgen_and_koszul_pair() {
    let ring = qq(3);
    let m = cyc(&ring, &["x0^2", "x1"]);
    let n = cyc(&ring, &["x2^3"]);
    assert_holds(&check_regtorgen(&m, &[n]).unwrap());
    let i = ideal(&ring, &["x0^2", "x1^2"]);
    let j = ideal(&ring, &["x2"]);
    assert_ne!(check_koszul_pair(&i, &j, &Assertions::none()).unwrap().verdict, Verdict::Violated);
}
