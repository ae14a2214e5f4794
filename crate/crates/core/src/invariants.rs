//! a-invariants by graded local duality, regularity along two routes, and the
//! degree bounds `δ_p`, `ε_q` attached to a complex.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::complex::ChainComplex;
use crate::error::{AlgebraError, Result};
use crate::extint::ExtInt;
use crate::module::{GradedModule, Subquotient};
use crate::ring::QuotientRing;
use crate::tor::ext_from_resolution;

/// `a_i(M)` for `0 ≤ i ≤ dim M`, with `reg` and `cd` read off.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AInvariants {
    pub a: BTreeMap<usize, ExtInt>,
    pub reg: ExtInt,
    pub cd: ExtInt,
}

impl AInvariants {
    pub fn from_map(a: BTreeMap<usize, ExtInt>) -> Self {
        let reg = ExtInt::max_of(a.iter().map(|(i, v)| *v + *i as i64));
        let cd = a
            .iter()
            .filter(|(_, v)| **v != ExtInt::NegInf)
            .map(|(i, _)| ExtInt::Fin(*i as i64))
            .max()
            .unwrap_or(ExtInt::NegInf);
        AInvariants { a, reg, cd }
    }

    /// The zero module.
    pub fn zero() -> Self {
        AInvariants::from_map(BTreeMap::new())
    }

    /// `a_i`, −∞ outside the stored range.
    pub fn get(&self, i: i64) -> ExtInt {
        if i < 0 {
            return ExtInt::NegInf;
        }
        *self.a.get(&(i as usize)).unwrap_or(&ExtInt::NegInf)
    }

    pub fn is_zero(&self) -> bool {
        self.cd == ExtInt::NegInf
    }

    /// `min{i : a_i ≠ −∞}`, +∞ for the zero module.
    pub fn depth(&self) -> ExtInt {
        ExtInt::min_of(
            self.a
                .iter()
                .filter(|(_, v)| **v != ExtInt::NegInf)
                .map(|(i, _)| ExtInt::Fin(*i as i64)),
        )
    }

    /// `max_{i ≥ p}(a_i + i)`.
    pub fn reg_from(&self, p: usize) -> ExtInt {
        ExtInt::max_of(self.a.range(p..).map(|(i, v)| *v + *i as i64))
    }

    /// Regularity of the associated projective scheme, `max_{i ≥ 1}(a_i + i)`.
    pub fn scheme_reg(&self) -> ExtInt {
        self.reg_from(1)
    }

    pub fn is_cohen_macaulay(&self) -> bool {
        self.is_zero() || self.depth() == self.cd
    }

    /// `a_i + k` for every `i`; adding −∞ gives the zero module.
    pub fn shifted(&self, k: ExtInt) -> AInvariants {
        if k == ExtInt::NegInf {
            return AInvariants::zero();
        }
        AInvariants::from_map(self.a.iter().map(|(i, v)| (*i, *v + k)).collect())
    }
}

fn compute(m: &GradedModule) -> AInvariants {
    if m.is_zero() {
        return AInvariants::zero();
    }
    let n = m.ring().nvars();
    let d = m.dim().finite().unwrap() as usize;
    let ma = m.restrict_to_ambient();
    let res = ma.resolution(ma.default_cap());
    let a = (0..=d)
        .map(|i| {
            let k = n - i;
            let v = if k > res.length() {
                ExtInt::NegInf
            } else {
                -ext_from_resolution(&res, -(n as i64), k).indeg()
            };
            (i, v)
        })
        .collect();
    AInvariants::from_map(a)
}

/// `a_i(M) = −indeg Ext^{N−i}_R(M, R(−N))` over the ambient polynomial ring
/// `R` in `N` variables. Cached on the module.
pub fn a_invariants(m: &GradedModule) -> AInvariants {
    m.ainv_cache().get_or_init(|| compute(m)).clone()
}

pub fn a_invariants_of(sq: &Subquotient) -> AInvariants {
    if sq.is_zero() {
        return AInvariants::zero();
    }
    a_invariants(&sq.to_module())
}

/// Depth of the ring itself.
pub fn ring_depth(ring: &QuotientRing) -> usize {
    let d = a_invariants(&GradedModule::ring_module(ring)).depth();
    d.finite().unwrap_or(0) as usize
}

/// `reg(S)`, from the minimal resolution of `R/J` over the ambient ring.
pub fn ring_regularity(ring: &QuotientRing) -> ExtInt {
    let amb = ring.ambient_ring();
    let m = GradedModule::cyclic(&amb, ring.defining_ideal()).unwrap();
    m.resolution(m.default_cap()).betti().reg()
}

/// `pd_S M` when finite. Finite projective dimension is at most `depth S`, so
/// a resolution still running at `depth S + 1` is infinite.
pub fn projective_dimension(m: &GradedModule) -> Option<usize> {
    if m.ring().is_polynomial() {
        return Some(m.resolution(m.default_cap()).length());
    }
    let cap = ring_depth(m.ring()) + 1;
    let res = m.resolution(cap);
    if res.truncated && res.length() >= cap {
        None
    } else {
        Some(res.length())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RegRoute {
    Duality,
    Betti,
}

/// Regularity from Betti numbers: `max(b_i − i)` over a polynomial ring, and
/// `reg^S(M) + reg(S)` over a quotient ring when `pd_S M` is finite.
pub fn betti_regularity(m: &GradedModule) -> Result<ExtInt> {
    if m.is_zero() {
        return Ok(ExtInt::NegInf);
    }
    if m.ring().is_polynomial() {
        return Ok(m.resolution(m.default_cap()).betti().reg());
    }
    match projective_dimension(m) {
        Some(_) => {
            let cap = ring_depth(m.ring()) + 1;
            Ok(m.resolution(cap).betti().reg() + ring_regularity(m.ring()))
        }
        None => Err(AlgebraError::RouteUnavailable(
            "the module has infinite projective dimension".into(),
        )),
    }
}

/// `reg(M)` by the chosen route, checked against the other route whenever
/// both are available.
pub fn regularity(m: &GradedModule, route: RegRoute) -> Result<ExtInt> {
    let dual = a_invariants(m).reg;
    match betti_regularity(m) {
        Ok(b) if b != dual => Err(AlgebraError::Inconsistent(format!(
            "duality gives {dual}, Betti numbers give {b}"
        ))),
        Ok(b) => Ok(b),
        Err(AlgebraError::RouteUnavailable(why)) => match route {
            RegRoute::Duality => Ok(dual),
            RegRoute::Betti => Err(AlgebraError::RouteUnavailable(why)),
        },
        Err(e) => Err(e),
    }
}

/// `δ_p = max_i a_{p+i}(D_i)` and `ε_q = max_i a_i(D_{q+i})`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexBoundData {
    pub delta: BTreeMap<usize, ExtInt>,
    pub epsilon: BTreeMap<usize, ExtInt>,
}

impl ComplexBoundData {
    pub fn delta(&self, p: usize) -> ExtInt {
        *self.delta.get(&p).unwrap_or(&ExtInt::NegInf)
    }

    pub fn epsilon(&self, q: usize) -> ExtInt {
        *self.epsilon.get(&q).unwrap_or(&ExtInt::NegInf)
    }
}

/// Bounds from the a-invariants of the terms `D_0, D_1, …`.
pub fn complex_bounds(terms: &[AInvariants]) -> ComplexBoundData {
    let top = terms
        .iter()
        .filter_map(|t| t.cd.finite())
        .max();
    let last = terms.iter().rposition(|t| !t.is_zero());
    let (Some(top), Some(last)) = (top, last) else {
        return ComplexBoundData::default();
    };
    let delta = (0..=top as usize)
        .map(|p| {
            let v = ExtInt::max_of(
                terms
                    .iter()
                    .enumerate()
                    .map(|(i, t)| t.get((p + i) as i64)),
            );
            (p, v)
        })
        .collect();
    let epsilon = (0..=last)
        .map(|q| {
            let v = ExtInt::max_of(
                terms[q..]
                    .iter()
                    .enumerate()
                    .map(|(i, t)| t.get(i as i64)),
            );
            (q, v)
        })
        .collect();
    ComplexBoundData { delta, epsilon }
}

/// Bounds for `D = F ⊗ M` with `F` free, using `a_p(F_i ⊗ M) = a_p(M) + b_i(F)`.
pub fn complex_bounds_for(f: &ChainComplex, m: &AInvariants) -> ComplexBoundData {
    let terms: Vec<AInvariants> = (0..=f.length()).map(|i| m.shifted(f.b(i))).collect();
    complex_bounds(&terms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extint::ExtInt::{Fin, NegInf};
    use crate::field::CoefficientField;
    use crate::poly::{PolyRing, Polynomial};

    fn setup(n: usize) -> (PolyRing, QuotientRing) {
        let r = PolyRing::new(CoefficientField::Rationals, n);
        (r, QuotientRing::polynomial(r))
    }

    fn cyc(ring: &QuotientRing, gens: &[&str]) -> GradedModule {
        let g: Vec<Polynomial> = gens.iter().map(|s| ring.parse(s).unwrap()).collect();
        GradedModule::cyclic(ring, &g).unwrap()
    }

    #[test]
    fn pinned_duality_orientation() {
        let (_, ring) = setup(2);
        let r = a_invariants(&GradedModule::ring_module(&ring));
        assert_eq!(r.get(2), Fin(-2));
        assert_eq!(r.get(0), NegInf);
        assert_eq!(r.get(1), NegInf);
        assert_eq!(r.reg, Fin(0));
        let ky = a_invariants(&cyc(&ring, &["x0"]));
        assert_eq!(ky.get(1), Fin(-1));
        assert_eq!(ky.reg, Fin(0));
    }

    #[test]
    fn x2_xy() {
        let (_, ring) = setup(2);
        let m = cyc(&ring, &["x0^2", "x0*x1"]);
        let a = a_invariants(&m);
        assert_eq!(a.get(0), Fin(1));
        assert_eq!(a.get(1), Fin(-1));
        assert_eq!(a.reg, Fin(1));
        assert_eq!(a.cd, Fin(1));
        assert_eq!(a.depth(), Fin(0));
        assert_eq!(
            serde_json::to_string(&a).unwrap(),
            r#"{"a":{"0":1,"1":-1},"reg":1,"cd":1}"#
        );
        assert_eq!(regularity(&m, RegRoute::Betti).unwrap(), Fin(1));
    }

    #[test]
    fn hypersurface_quotient_routes() {
        let (r, _) = setup(3);
        let s = QuotientRing::new(r, vec![r.parse("x0^2 + x1^2 + x2^2").unwrap()]).unwrap();
        assert_eq!(ring_regularity(&s), Fin(1));
        let m = GradedModule::cyclic(&s, &[r.var(0)]).unwrap();
        assert_eq!(projective_dimension(&m), Some(1));
        let d = regularity(&m, RegRoute::Duality).unwrap();
        assert_eq!(regularity(&m, RegRoute::Betti).unwrap(), d);
        let k = GradedModule::residue_field(&s);
        assert_eq!(projective_dimension(&k), None);
        assert!(matches!(
            regularity(&k, RegRoute::Betti),
            Err(AlgebraError::RouteUnavailable(_))
        ));
        assert_eq!(regularity(&k, RegRoute::Duality).unwrap(), Fin(0));
    }

    #[test]
    fn koszul_bounds() {
        let (r, ring) = setup(2);
        let k = ChainComplex::koszul(&ring, &[r.parse("x0^2").unwrap(), r.parse("x1^3").unwrap()])
            .unwrap();
        let a = a_invariants(&GradedModule::ring_module(&ring));
        let b = complex_bounds_for(&k, &a);
        assert_eq!(b.delta(0), Fin(3));
        assert_eq!(b.delta(1), Fin(1));
        assert_eq!(b.delta(2), Fin(-2));
        assert_eq!(b.epsilon(0), Fin(3));
        assert_eq!(b.epsilon(1), NegInf);
        assert_eq!(complex_bounds(&[]), ComplexBoundData::default());
    }
}
