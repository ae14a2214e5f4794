//! Regularity of powers of ideals of dimension at most two.

use std::collections::BTreeSet;

use crate::error::{AlgebraError, Result};
use crate::extint::ExtInt;
use crate::functors::power_kernel;
use crate::ideal::Ideal;
use crate::invariants::{a_invariants, a_invariants_of, AInvariants};
use crate::monomial::Monomial;
use crate::resolution::BettiTable;
use crate::ring::QuotientRing;
use crate::tor::tor_multi;

use super::{
    describe_ideal, hyp, monomial_gens, Assertions, HypothesisStatus, Relation, ReportBuilder,
    TheoremReport,
};

use ExtInt::{Fin, NegInf};

/// Minimal primes of a monomial ideal as sets of variables: the minimal
/// vertex covers of the generator supports.
pub(crate) fn monomial_minimal_primes(gens: &[Monomial], n: usize) -> Vec<BTreeSet<usize>> {
    let supports: Vec<u64> = gens
        .iter()
        .map(|g| g.support().iter().fold(0u64, |a, v| a | 1 << v))
        .collect();
    if supports.iter().any(|s| *s == 0) {
        return Vec::new();
    }
    let covers: Vec<u64> = (0u64..1 << n)
        .filter(|c| supports.iter().all(|s| s & c != 0))
        .collect();
    covers
        .iter()
        .filter(|c| !covers.iter().any(|d| *d != **c && *d & **c == *d))
        .map(|c| (0..n).filter(|v| c >> v & 1 == 1).collect())
        .collect()
}

/// Number of minimal generators of `I_P` for a monomial ideal and the prime
/// generated by the variables in `p`: set the others to 1 and minimalize.
fn localized_generator_count(gens: &[Monomial], p: &BTreeSet<usize>, n: usize) -> usize {
    let mut loc: Vec<Monomial> = gens
        .iter()
        .map(|g| {
            let e: Vec<u32> = (0..n).map(|v| if p.contains(&v) { g.exponent(v) } else { 0 }).collect();
            Monomial::from_exponents(&e)
        })
        .collect();
    loc.sort();
    loc.dedup();
    loc.iter()
        .filter(|m| !loc.iter().any(|o| o != *m && o.divides(m)))
        .count()
}

/// Whether `I_P` is a complete intersection for every minimal prime `P` of
/// `I` with `dim R/P = target_dim`. Decided for complete intersections and
/// for monomial ideals; `None` otherwise.
pub fn generic_ci(i: &Ideal, target_dim: usize) -> Option<bool> {
    let gens = i.minimal_generators();
    if let Fin(c) = i.codim() {
        if gens.len() as i64 == c {
            return Some(true);
        }
    }
    let mons = monomial_gens(&i.minimalized())?;
    let n = i.ring().nvars();
    let primes = monomial_minimal_primes(&mons, n);
    Some(
        primes
            .iter()
            .filter(|p| n - p.len() == target_dim)
            .all(|p| localized_generator_count(&mons, p, n) == p.len()),
    )
}

fn status(ok: bool) -> HypothesisStatus {
    if ok {
        HypothesisStatus::Verified
    } else {
        HypothesisStatus::Failed
    }
}

/// Degrees of a minimal generating set, largest first.
fn sorted_degrees(i: &Ideal) -> Vec<i64> {
    let mut d = i.minimalized().generator_degrees();
    d.sort_by(|a, b| b.cmp(a));
    d
}

fn d_at(d: &[i64], k: usize) -> ExtInt {
    d.get(k - 1).map_or(NegInf, |v| Fin(*v))
}

/// Betti table of `S/I` over `S`, through homological degree `cap`.
fn quotient_betti(i: &Ideal, cap: usize) -> BettiTable {
    let q = i.quotient_module();
    q.resolution(cap).betti()
}

fn quotient_ainv(i: &Ideal) -> AInvariants {
    a_invariants(&i.quotient_module())
}

/// Regularity of the ideal as a module.
fn ideal_reg(i: &Ideal) -> ExtInt {
    a_invariants(&i.as_module()).reg
}

/// Powers of an ideal with `cd(S/I) ≤ 1`, one report per exponent `m + 1`.
pub fn check_power_bound_cd1(i: &Ideal, m_max: u32) -> Vec<TheoremReport> {
    let ring = i.ring();
    let base = quotient_ainv(i);
    let betti = quotient_betti(i, 2);
    let b0 = betti.b(1);
    let b1 = betti.b(2);
    let reg1 = ExtInt::max_of([b0, b1 - 1]);
    let (a0, a1) = (base.get(0), base.get(1));
    let sat_reg = quotient_ainv(&i.saturation()).reg;
    let j_b0 = ExtInt::max_of(ring.defining_ideal().iter().map(|g| g.degree()));
    let reg_q = base.reg;
    (0..=m_max)
        .map(|m| {
            let input = format!("{} power {}", describe_ideal(i), m + 1);
            let mut b = ReportBuilder::new("power-cd1", input);
            b.hyp(hyp::CD_LE_1, status(base.cd <= Fin(1)));
            let p = quotient_ainv(&i.power(m + 1));
            let mm = m as i64;
            let step = b0.scale(mm - 1);
            b.detail("m", m);
            b.detail("a", &p.a);
            b.detail("b0", b0);
            b.detail("b1", b1);
            b.le(
                "reg(S/I^(m+1)) <= max(a0 + b0, a1 + 1 + reg_1(I)) + (m-1) b0",
                p.reg,
                ExtInt::max_of([a0 + b0, a1 + 1 + reg1]) + step,
            );
            b.le(
                "reg(S/I^(m+1)) <= max(reg S/I, b0(J) - 2) + max(reg S/I^sat + 1, b0) + (m-1) b0",
                p.reg,
                ExtInt::max_of([reg_q, j_b0 - 2]) + ExtInt::max_of([sat_reg + 1, b0]) + step,
            );
            b.le("a_1(S/I^(m+1)) <= a_1(S/I) + m b0", p.get(1), a1 + b0.scale(mm));
            b.le(
                "a_0(S/I^(m+1)) <= max(a0 + b0, a1 + b1) + (m-1) b0",
                p.get(0),
                ExtInt::max_of([a0 + b0, a1 + b1]) + step,
            );
            b.finish()
        })
        .collect()
}

/// `T_ℓ` bounds for an ideal with `dim S/I = 2`, for `ℓ = 2 … ell_max`.
pub fn check_power_kernel(i: &Ideal, ell_max: u32, assertions: &Assertions) -> Result<Vec<TheoremReport>> {
    if ell_max < 2 {
        return Err(AlgebraError::InvalidArgument(format!(
            "power kernels start at 2, got {ell_max}"
        )));
    }
    let ring = i.ring();
    let base = quotient_ainv(i);
    let dim2 = base.cd == Fin(2) && i.dim() == Fin(2);
    let gci = generic_ci(i, 2);
    let d = sorted_degrees(i);
    let betti = quotient_betti(i, 4);
    let bj = |j: usize| betti.b(j + 1);
    let b0 = bj(0);
    let a2 = base.get(2);
    let poly = ring.is_polynomial();
    let j_b0 = ExtInt::max_of(ring.defining_ideal().iter().map(|g| g.degree()));
    let reg_i = ideal_reg(i);
    let mut out = Vec::new();
    let mut prev_t: Option<ExtInt> = None;
    let e2 = {
        let prev = base.clone();
        ExtInt::max_of((0..=2usize).flat_map(|ii| (0..=ii).map(move |j| (ii, j))).map(|(ii, j)| prev.get(ii as i64) + bj(j)))
    };
    for ell in 2..=ell_max {
        let input = format!("{} power {}", describe_ideal(i), ell);
        let mut b = ReportBuilder::new("power-kernel", input);
        b.hyp(hyp::DIM_2, status(dim2));
        b.optional_hyp(
            hyp::GENERIC_CI,
            HypothesisStatus::decide(gci, hyp::GENERIC_CI, assertions),
        );
        let prev = quotient_ainv(&i.power(ell - 1));
        let e = ExtInt::max_of(
            (0..=2usize)
                .flat_map(|ii| (0..=ii).map(move |j| (ii, j)))
                .map(|(ii, j)| prev.get(ii as i64) + bj(j)),
        );
        let cur = quotient_ainv(&i.power(ell));
        let t = a_invariants_of(&power_kernel(i, ell)?.t);
        let a2t = t.get(2);
        b.detail("ell", ell);
        b.detail("e", e);
        b.detail("a2_t", a2t);
        b.detail("reg", cur.reg);
        let a0 = cur.get(0);
        b.detail("a0", a0);
        b.le("a_0(S/I^l) <= max(E_l, a_2(T_l))", a0, ExtInt::max_of([e, a2t]));
        if poly {
            b.eq(
                "a_0(S/I^l) > E_l iff a_2(T_l) > E_l",
                Fin((a0 > e) as i64),
                Fin((a2t > e) as i64),
            );
            if a2t > e {
                b.eq("a_0(S/I^l) = a_2(T_l)", a0, a2t);
            }
            b.le("E_l <= reg(S/I^(l-1)) + reg(I)", e, prev.reg + reg_i);
        } else {
            b.le(
                "E_l <= max(reg(S/I^(l-1)) + reg(I), a_2(S/I^(l-1)) + b0(J) + b0(I))",
                e,
                ExtInt::max_of([prev.reg + reg_i, prev.get(2) + j_b0 + b0]),
            );
        }
        let req = [hyp::GENERIC_CI];
        if ell == 2 {
            b.check_requiring(
                "a_2(T_2) <= a_2(S/I) + d1 + d2",
                a2t,
                Relation::Le,
                a2 + d_at(&d, 1) + d_at(&d, 2),
                &req,
            );
            b.check_requiring(
                "a_0(S/I^2) <= max(E_2, a_2(S/I) + d1 + d2)",
                a0,
                Relation::Le,
                ExtInt::max_of([e2, a2 + d_at(&d, 1) + d_at(&d, 2)]),
                &req,
            );
        } else {
            if let Some(p) = prev_t {
                b.check_requiring(
                    "a_2(T_l) <= a_2(T_(l-1)) + b0(I)",
                    a2t,
                    Relation::Le,
                    p + b0,
                    &req,
                );
            }
            let e3 = ExtInt::max_of([e2 + b0, a2 + bj(1).scale(2)]);
            b.check_requiring(
                "a_0(S/I^l) <= max(E'_3, a_2 + 2 d1 + d2) + (l-3) d1",
                a0,
                Relation::Le,
                ExtInt::max_of([e3, a2 + d_at(&d, 1).scale(2) + d_at(&d, 2)])
                    + d_at(&d, 1).scale(ell as i64 - 3),
                &req,
            );
            if ell == 3 {
                let base_reg = base.reg;
                let rhs = if poly {
                    base_reg + reg_i.scale(2)
                } else {
                    ExtInt::max_of([base_reg + reg_i.scale(2), a2 + j_b0 + b0.scale(2)])
                };
                b.le("E'_3 bound", e3, rhs);
            }
        }
        if ell == 2 {
            // a_2(Tor_m(S/I, S/I)) ≤ a_2(S/I) + d1 + … + dm
            let q = i.quotient_module();
            for m in 1..=2usize {
                let t = a_invariants_of(&tor_multi(&[q.clone(), q.clone()], m as i64)?);
                let rhs = (1..=m).fold(a2, |acc, k| acc + d_at(&d, k));
                b.check_requiring(
                    format!("a_2(Tor_{m}(S/I, S/I)) <= a_2(S/I) + d1 + .. + d{m}"),
                    t.get(2),
                    Relation::Le,
                    rhs,
                    &req,
                );
            }
        }
        prev_t = Some(a2t);
        out.push(b.finish());
    }
    Ok(out)
}

/// Bounds on `reg(I^j)` for `dim R/I = 2` over a polynomial ring.
pub fn check_power_bound_dim2(i: &Ideal, j_max: u32, assertions: &Assertions) -> Vec<TheoremReport> {
    let ring: &QuotientRing = i.ring();
    let base = quotient_ainv(i);
    let poly = ring.is_polynomial();
    let dim2 = i.dim() == Fin(2);
    let gci = if dim2 { generic_ci(i, 2) } else { Some(false) };
    let a = |k: i64| base.get(k);
    let betti = quotient_betti(i, ring.nvars() + 1);
    let b = |k: usize| betti.b(k + 1);
    let bp = |k: usize| ExtInt::max_of((1..=k).map(b));
    let d = sorted_degrees(i);
    let (d1, d2) = (d_at(&d, 1), d_at(&d, 2));
    let b0 = b(0);
    let reg_i = ideal_reg(i);
    let reg_sat = ideal_reg(&i.saturation());
    let mut out = Vec::new();
    for j in 2..=j_max.max(2) {
        let input = format!("{} power {}", describe_ideal(i), j);
        let mut r = ReportBuilder::new("power-dim2", input);
        r.hyp(hyp::POLYNOMIAL_RING, status(poly));
        r.hyp(hyp::DIM_2, status(dim2));
        r.hyp(
            hyp::GENERIC_CI,
            HypothesisStatus::decide(gci.filter(|_| dim2), hyp::GENERIC_CI, assertions),
        );
        r.detail("j", j);
        if !r.gates_open() {
            out.push(r.finish());
            continue;
        }
        let pj = i.power(j);
        let l0 = ideal_reg(&pj);
        // The first line only bounds the H^0 end.
        let h0 = quotient_ainv(&pj).get(0) + 1;
        r.detail("reg", l0);
        r.detail("a0_plus_1", h0);
        if j == 2 {
            let l1 = ExtInt::max_of([a(0) + b0, a(1) + bp(1), a(2) + bp(2), a(2) + d1 + d2]) + 1;
            let l2 = ExtInt::max_of([
                reg_i + ExtInt::max_of([b0, b(1) - 1, b(2) - 2]),
                a(2) + b0.scale(2) + 1,
            ]);
            let l3 = ExtInt::max_of([reg_i.scale(2), reg_sat + b0.scale(2) - 2]);
            r.le("reg(I^2) <= L2", l0, l2);
            r.le("a_0(R/I^2) + 1 <= L1", h0, l1);
            r.le("L1 <= L2", l1, l2);
            r.le("L2 <= L3", l2, l3);
        } else {
            let jj = j as i64;
            let big = ExtInt::max_of([bp(2) + b0, bp(1).scale(2), d1.scale(2) + d2]);
            let l1 = ExtInt::max_of([a(0) + b0.scale(2), a(1) + bp(1) + b0, a(2) + big])
                + b0.scale(jj - 3)
                + 1;
            let l2 = ExtInt::max_of([reg_i.scale(3) + b0.scale(jj - 3), a(2) + b0.scale(jj) + 1]);
            let l3 = ExtInt::max_of([reg_i.scale(3) + b0.scale(jj - 3), reg_sat + b0.scale(jj) - 2]);
            r.le("reg(I^j) <= L2", l0, l2);
            r.le("a_0(R/I^j) + 1 <= L1", h0, l1);
            r.le("L1 <= L2", l1, l2);
            r.le("L2 <= L3", l2, l3);
        }
        out.push(r.finish());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::CoefficientField;
    use crate::poly::PolyRing;

    #[test]
    fn vertex_covers() {
        let m = |e: &[u32]| Monomial::from_exponents(e);
        let gens = vec![m(&[2, 0, 0]), m(&[1, 1, 0])];
        let p = monomial_minimal_primes(&gens, 3);
        assert_eq!(p, vec![BTreeSet::from([0])]);
        let gens = vec![m(&[1, 1, 0]), m(&[0, 1, 1])];
        let mut p = monomial_minimal_primes(&gens, 3);
        p.sort();
        assert_eq!(p, vec![BTreeSet::from([0, 2]), BTreeSet::from([1])]);
    }

    #[test]
    fn generic_complete_intersections() {
        let r = PolyRing::new(CoefficientField::Rationals, 3);
        let ring = QuotientRing::polynomial(r);
        let id = |g: &[&str]| Ideal::new(&ring, g.iter().map(|s| r.parse(s).unwrap()).collect()).unwrap();
        assert_eq!(generic_ci(&id(&["x0^2", "x0*x1"]), 2), Some(true));
        let r4 = PolyRing::new(CoefficientField::Rationals, 4);
        let ring4 = QuotientRing::polynomial(r4);
        let m2 = Ideal::new(&ring4, vec![r4.parse("x0^2").unwrap(), r4.parse("x0*x1").unwrap(), r4.parse("x1^2").unwrap()]).unwrap();
        assert_eq!(generic_ci(&m2, 2), Some(false));
        let f = id(&["x0*x1 + x2^2", "x0^3 + x1^2*x2"]);
        assert_eq!(generic_ci(&f, 1), Some(true));
    }
}
