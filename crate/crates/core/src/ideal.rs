//! Homogeneous ideals of `S = R/J` and the constructions built on them.

use std::sync::OnceLock;

use crate::error::{AlgebraError, Result};
use crate::extint::ExtInt;
use crate::groebner::{kernel_modulo, minimal_generators, GbBuilder};
use crate::hilbert::{HilbertData, HilbertSeries};
use crate::matrix::GradedMatrix;
use crate::module::{quotient_series, GradedModule};
use crate::poly::Polynomial;
use crate::ring::{check_homogeneous, QuotientRing};
use crate::vector::Vector;

#[derive(Debug)]
pub struct Ideal {
    ring: QuotientRing,
    gens: Vec<Polynomial>,
    gb: OnceLock<Vec<Polynomial>>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        Ideal {
            ring: self.ring.clone(),
            gens: self.gens.clone(),
            gb: self.gb.clone(),
        }
    }
}

impl PartialEq for Ideal {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.gb() == other.gb()
    }
}

impl Eq for Ideal {}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IdealOp {
    Sum,
    Product,
    Quotient,
    Intersection,
}

impl Ideal {
    pub fn new(ring: &QuotientRing, gens: Vec<Polynomial>) -> Result<Self> {
        for g in &gens {
            if g.ring() != ring.ambient() {
                return Err(AlgebraError::RingMismatch(format!(
                    "generator over {} for an ideal of {}",
                    g.ring(),
                    ring
                )));
            }
        }
        check_homogeneous(&gens)?;
        Ok(Ideal::from_checked(ring, gens))
    }

    fn from_checked(ring: &QuotientRing, gens: Vec<Polynomial>) -> Self {
        let gens = gens
            .into_iter()
            .map(|g| ring.reduce(&g))
            .filter(|g| !g.is_zero())
            .collect();
        Ideal {
            ring: ring.clone(),
            gens,
            gb: OnceLock::new(),
        }
    }

    pub fn unit(ring: &QuotientRing) -> Self {
        Ideal::from_checked(ring, vec![ring.ambient().one()])
    }

    pub fn zero(ring: &QuotientRing) -> Self {
        Ideal::from_checked(ring, Vec::new())
    }

    /// `(x0, …, x{n−1})`.
    pub fn irrelevant(ring: &QuotientRing) -> Self {
        let amb = ring.ambient();
        Ideal::from_checked(ring, (0..amb.nvars).map(|i| amb.var(i)).collect())
    }

    pub fn ring(&self) -> &QuotientRing {
        &self.ring
    }

    /// Generators as given (reduced modulo `J`, zeros dropped).
    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    fn gen_vectors(&self) -> Vec<Vector> {
        self.gens.iter().map(|g| Vector::from_poly_at(0, g)).collect()
    }

    /// Reduced Gröbner basis of `I + J` in the ambient ring.
    pub fn gb(&self) -> &[Polynomial] {
        self.gb.get_or_init(|| {
            let mut b = GbBuilder::over(&self.ring, vec![0]);
            for v in self.gen_vectors() {
                b.insert(v);
            }
            let amb = self.ring.ambient();
            b.reduced_basis()
                .into_iter()
                .map(|v| v.component(amb, 0))
                .collect()
        })
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        crate::groebner::poly_normal_form(self.ring.ambient(), self.gb(), f).is_zero()
    }

    pub fn contains_ideal(&self, other: &Ideal) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }

    pub fn is_unit(&self) -> bool {
        self.gb().iter().any(|g| g.is_unit())
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    /// A minimal homogeneous generating set.
    pub fn minimal_generators(&self) -> Vec<Polynomial> {
        let vs = self.gen_vectors();
        minimal_generators(&self.ring, &[0], &vs, &[])
            .into_iter()
            .map(|i| self.gens[i].clone())
            .collect()
    }

    pub fn minimalized(&self) -> Ideal {
        Ideal::from_checked(&self.ring, self.minimal_generators())
    }

    /// Degrees of a minimal generating set, sorted descending.
    pub fn generator_degrees(&self) -> Vec<i64> {
        let mut ds: Vec<i64> = self
            .minimal_generators()
            .iter()
            .filter_map(|g| g.degree().finite())
            .collect();
        ds.sort_unstable_by(|a, b| b.cmp(a));
        ds
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        self.ring.same_ring(&other.ring)?;
        let mut g = self.gens.clone();
        g.extend(other.gens.iter().cloned());
        Ok(Ideal::from_checked(&self.ring, g))
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        self.ring.same_ring(&other.ring)?;
        let mut g = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                g.push(a.mul(b));
            }
        }
        Ok(Ideal::from_checked(&self.ring, g).minimalized())
    }

    /// `I^m`, with `I^0` the unit ideal.
    pub fn power(&self, m: u32) -> Ideal {
        let mut acc = Ideal::unit(&self.ring);
        for _ in 0..m {
            acc = acc.product(self).unwrap();
        }
        acc
    }

    /// `I^{[q]}`: `q`-th powers of the given generators.
    pub fn bracket_power(&self, q: u64) -> Result<Ideal> {
        let g = self
            .gens
            .iter()
            .map(|f| f.frobenius(q))
            .collect::<Result<Vec<_>>>()?;
        Ok(Ideal::from_checked(&self.ring, g))
    }

    /// `I : (f) = {g : g·f ∈ I}`.
    pub fn quotient_poly(&self, f: &Polynomial) -> Ideal {
        let amb = self.ring.ambient();
        let Some(d) = f.degree().finite() else {
            return Ideal::unit(&self.ring);
        };
        let ker = kernel_modulo(
            &self.ring,
            &[0],
            &[d],
            &[Vector::from_poly_at(0, f)],
            &self.gen_vectors(),
        );
        let g: Vec<Polynomial> = ker.iter().map(|v| v.component(amb, 0)).collect();
        Ideal::from_checked(&self.ring, g).minimalized()
    }

    pub fn quotient(&self, other: &Ideal) -> Result<Ideal> {
        self.ring.same_ring(&other.ring)?;
        let mut acc = Ideal::unit(&self.ring);
        for f in &other.gens {
            acc = acc.intersection(&self.quotient_poly(f))?;
        }
        Ok(acc)
    }

    pub fn intersection(&self, other: &Ideal) -> Result<Ideal> {
        self.ring.same_ring(&other.ring)?;
        if self.is_unit() {
            return Ok(other.clone());
        }
        if other.is_unit() {
            return Ok(self.clone());
        }
        let amb = self.ring.ambient();
        let col = Vector::from_polys(&[amb.one(), amb.one()]);
        let mut rel: Vec<Vector> = self.gen_vectors();
        rel.extend(other.gens.iter().map(|g| Vector::from_poly_at(1, g)));
        let ker = kernel_modulo(&self.ring, &[0, 0], &[0], &[col], &rel);
        let g: Vec<Polynomial> = ker.iter().map(|v| v.component(amb, 0)).collect();
        Ok(Ideal::from_checked(&self.ring, g).minimalized())
    }

    pub fn op(&self, other: &Ideal, op: IdealOp) -> Result<Ideal> {
        match op {
            IdealOp::Sum => self.sum(other),
            IdealOp::Product => self.product(other),
            IdealOp::Quotient => self.quotient(other),
            IdealOp::Intersection => self.intersection(other),
        }
    }

    /// `I : (S_+)^∞`, by iterating `I ↦ I : S_+` until the Gröbner basis stabilizes.
    pub fn saturation(&self) -> Ideal {
        let m = Ideal::irrelevant(&self.ring);
        let mut cur = self.clone();
        loop {
            let next = cur.quotient(&m).unwrap();
            if next.gb() == cur.gb() {
                return cur.minimalized();
            }
            cur = next;
        }
    }

    /// `S/I` as a cyclic module.
    pub fn quotient_module(&self) -> GradedModule {
        GradedModule::cyclic(&self.ring, &self.gens).unwrap()
    }

    /// `I` itself as a module, presented by the syzygies of its minimal generators.
    pub fn as_module(&self) -> GradedModule {
        let gens = self.minimal_generators();
        let degs: Vec<i64> = gens.iter().map(|g| g.degree().finite().unwrap()).collect();
        let cols: Vec<Vector> = gens.iter().map(|g| Vector::from_poly_at(0, g)).collect();
        let ker = kernel_modulo(&self.ring, &[0], &degs, &cols, &[]);
        let keep = minimal_generators(&self.ring, &degs, &ker, &[]);
        let rels: Vec<Vector> = keep.into_iter().map(|i| ker[i].clone()).collect();
        let src = rels.iter().map(|r| r.degree(&degs).unwrap()).collect();
        GradedModule::new(GradedMatrix::new_unchecked(self.ring.clone(), src, degs, rels)).unwrap()
    }

    /// Hilbert series of `S/I`.
    pub fn quotient_series(&self) -> HilbertSeries {
        quotient_series(&self.ring, &[0], &self.gen_vectors())
    }

    pub fn hilbert_data(&self, lo: i64, hi: i64) -> HilbertData {
        HilbertData::from_series(&self.quotient_series(), lo, hi)
    }

    /// Krull dimension of `S/I`.
    pub fn dim(&self) -> ExtInt {
        self.quotient_series().dim()
    }

    /// `dim S − dim S/I`.
    pub fn codim(&self) -> ExtInt {
        let ds = quotient_series(&self.ring, &[0], &[]).dim();
        match self.dim() {
            ExtInt::Fin(d) => ds + (-d),
            _ => ExtInt::PosInf,
        }
    }

    /// Whether every generator is a monomial.
    pub fn is_monomial(&self) -> bool {
        self.ring.is_polynomial() && self.gens.iter().all(|g| g.is_monomial())
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.gens.iter().map(|g| g.to_string()).collect()
    }
}

/// Saturation with respect to the irrelevant ideal.
pub fn saturate(i: &Ideal) -> Ideal {
    i.saturation()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::CoefficientField;
    use crate::poly::PolyRing;

    fn setup(field: CoefficientField, n: usize) -> (PolyRing, QuotientRing) {
        let r = PolyRing::new(field, n);
        (r, QuotientRing::polynomial(r))
    }

    fn ideal(ring: &QuotientRing, gens: &[&str]) -> Ideal {
        Ideal::new(ring, gens.iter().map(|g| ring.parse(g).unwrap()).collect()).unwrap()
    }

    #[test]
    fn power_and_unit() {
        let (_, ring) = setup(CoefficientField::Rationals, 2);
        let m = ideal(&ring, &["x0", "x1"]);
        assert_eq!(m.power(2), ideal(&ring, &["x0^2", "x0*x1", "x1^2"]));
        assert!(m.power(0).is_unit());
    }

    #[test]
    fn saturation_examples() {
        let (_, ring) = setup(CoefficientField::Rationals, 2);
        let i = ideal(&ring, &["x0^2", "x0*x1"]);
        let s = i.saturation();
        assert_eq!(s, ideal(&ring, &["x0"]));
        assert_eq!(s.saturation(), s);
        assert!(s.contains_ideal(&i));
        let m2 = ideal(&ring, &["x0^2", "x1^3"]);
        assert!(m2.saturation().is_unit());
    }

    #[test]
    fn bracket_powers() {
        let (_, ring) = setup(CoefficientField::Prime(2), 2);
        let m = ideal(&ring, &["x0", "x1"]);
        assert_eq!(m.bracket_power(2).unwrap(), ideal(&ring, &["x0^2", "x1^2"]));
        let (_, qq) = setup(CoefficientField::Rationals, 2);
        assert!(ideal(&qq, &["x0"]).bracket_power(2).is_err());
    }

    #[test]
    fn quotient_and_intersection() {
        let (_, ring) = setup(CoefficientField::Rationals, 2);
        let a = ideal(&ring, &["x0"]);
        let b = ideal(&ring, &["x1"]);
        assert_eq!(a.intersection(&b).unwrap(), ideal(&ring, &["x0*x1"]));
        let i = ideal(&ring, &["x0^2", "x0*x1"]);
        assert_eq!(i.quotient(&a).unwrap(), ideal(&ring, &["x0", "x1"]));
        assert_eq!(i.quotient(&b).unwrap(), ideal(&ring, &["x0"]));
    }

    #[test]
    fn dimensions() {
        let (_, ring) = setup(CoefficientField::Rationals, 3);
        assert_eq!(ideal(&ring, &["x0^2", "x0*x1"]).dim(), ExtInt::Fin(2));
        assert_eq!(ideal(&ring, &["x0", "x1"]).codim(), ExtInt::Fin(2));
        assert_eq!(ideal(&ring, &["1"]).dim(), ExtInt::NegInf);
    }
}
