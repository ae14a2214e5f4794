//! Graded quotients `S = R/J` of a polynomial ring.

use std::fmt;
use std::sync::Arc;

use crate::error::{AlgebraError, Result};
use crate::field::CoefficientField;
use crate::groebner::{ideal_gb, minimal_generators, poly_normal_form};
use crate::poly::{PolyRing, Polynomial};
use crate::vector::Vector;

#[derive(Debug)]
struct Inner {
    ambient: PolyRing,
    gens: Vec<Polynomial>,
    gb: Vec<Polynomial>,
}

/// `R/J` with a cached reduced Gröbner basis of `J`. An empty `J` is the
/// polynomial ring itself.
#[derive(Clone, Debug)]
pub struct QuotientRing {
    inner: Arc<Inner>,
}

impl PartialEq for QuotientRing {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.ambient == other.inner.ambient && self.inner.gb == other.inner.gb)
    }
}

impl Eq for QuotientRing {}

pub(crate) fn check_homogeneous(gens: &[Polynomial]) -> Result<()> {
    for (i, g) in gens.iter().enumerate() {
        if !g.is_homogeneous() {
            return Err(AlgebraError::Inhomogeneous {
                index: i,
                degrees: g.term_degrees(),
                text: g.to_string(),
            });
        }
    }
    Ok(())
}

impl QuotientRing {
    pub fn polynomial(ambient: PolyRing) -> Self {
        QuotientRing {
            inner: Arc::new(Inner {
                ambient,
                gens: Vec::new(),
                gb: Vec::new(),
            }),
        }
    }

    /// `ambient / (gens)`; the generators must be homogeneous and generate a proper ideal.
    pub fn new(ambient: PolyRing, gens: Vec<Polynomial>) -> Result<Self> {
        for g in &gens {
            if g.ring() != ambient {
                return Err(AlgebraError::RingMismatch(format!(
                    "generator over {} in quotient of {}",
                    g.ring(),
                    ambient
                )));
            }
        }
        check_homogeneous(&gens)?;
        let gens: Vec<Polynomial> = gens.into_iter().filter(|g| !g.is_zero()).collect();
        if gens.iter().any(|g| g.is_unit()) {
            return Err(AlgebraError::InvalidArgument(
                "defining ideal is the unit ideal".into(),
            ));
        }
        let gb = ideal_gb(ambient, &gens);
        // keep a minimal generating set for presentations
        let plain = QuotientRing::polynomial(ambient);
        let vs: Vec<Vector> = gens.iter().map(|g| Vector::from_poly_at(0, g)).collect();
        let keep = minimal_generators(&plain, &[0], &vs, &[]);
        let gens = keep.into_iter().map(|i| gens[i].clone()).collect();
        Ok(QuotientRing {
            inner: Arc::new(Inner { ambient, gens, gb }),
        })
    }

    pub fn ambient(&self) -> PolyRing {
        self.inner.ambient
    }

    pub fn field(&self) -> CoefficientField {
        self.inner.ambient.field
    }

    pub fn nvars(&self) -> usize {
        self.inner.ambient.nvars
    }

    pub fn characteristic(&self) -> u64 {
        self.field().characteristic()
    }

    /// Minimal generators of `J`.
    pub fn defining_ideal(&self) -> &[Polynomial] {
        &self.inner.gens
    }

    /// Reduced Gröbner basis of `J`.
    pub fn gb(&self) -> &[Polynomial] {
        &self.inner.gb
    }

    pub fn is_polynomial(&self) -> bool {
        self.inner.gb.is_empty()
    }

    /// Canonical representative modulo `J`.
    pub fn reduce(&self, f: &Polynomial) -> Polynomial {
        poly_normal_form(self.ambient(), self.gb(), f)
    }

    /// Reduces every component of a vector modulo `J`.
    pub fn reduce_vector(&self, v: &Vector, rank: usize) -> Vector {
        if self.is_polynomial() {
            return v.clone();
        }
        let ps: Vec<Polynomial> = v
            .to_polys(self.ambient(), rank)
            .iter()
            .map(|p| self.reduce(p))
            .collect();
        Vector::from_polys(&ps)
    }

    /// The polynomial ring this quotient is built on, as a ring with `J = 0`.
    pub fn ambient_ring(&self) -> QuotientRing {
        QuotientRing::polynomial(self.ambient())
    }

    pub fn parse(&self, text: &str) -> Result<Polynomial> {
        self.ambient().parse(text)
    }

    pub fn same_ring(&self, other: &QuotientRing) -> Result<()> {
        if self != other {
            return Err(AlgebraError::RingMismatch(format!("{self} vs {other}")));
        }
        Ok(())
    }
}

impl fmt::Display for QuotientRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.ambient())?;
        if !self.inner.gens.is_empty() {
            let parts: Vec<String> = self.inner.gens.iter().map(|g| g.to_string()).collect();
            write!(f, "/({})", parts.join(", "))?;
        }
        Ok(())
    }
}
