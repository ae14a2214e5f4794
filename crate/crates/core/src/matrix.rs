//! Twisted free modules and homogeneous matrices between them.

use std::fmt;

use crate::error::{AlgebraError, Result};
use crate::field::Coeff;
use crate::poly::Polynomial;
use crate::ring::QuotientRing;
use crate::vector::{Term, Vector};

/// `⊕_k ring(−twists[k])`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeModule {
    pub ring: QuotientRing,
    pub twists: Vec<i64>,
}

impl FreeModule {
    pub fn new(ring: QuotientRing, twists: Vec<i64>) -> Self {
        FreeModule { ring, twists }
    }

    pub fn rank(&self) -> usize {
        self.twists.len()
    }

    /// Twists of `self ⊗ other`, basis `(i, j)` at index `i·rank(other) + j`.
    pub fn tensor_twists(a: &[i64], b: &[i64]) -> Vec<i64> {
        let mut out = Vec::with_capacity(a.len() * b.len());
        for x in a {
            for y in b {
                out.push(x + y);
            }
        }
        out
    }
}

/// A homogeneous map `⊕R(−source[j]) → ⊕R(−target[i])` stored by columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedMatrix {
    pub ring: QuotientRing,
    pub source: Vec<i64>,
    pub target: Vec<i64>,
    pub cols: Vec<Vector>,
}

impl GradedMatrix {
    pub fn new(
        ring: QuotientRing,
        source: Vec<i64>,
        target: Vec<i64>,
        cols: Vec<Vector>,
    ) -> Result<Self> {
        let m = GradedMatrix {
            ring,
            source,
            target,
            cols,
        };
        m.check()?;
        Ok(m)
    }

    pub(crate) fn new_unchecked(
        ring: QuotientRing,
        source: Vec<i64>,
        target: Vec<i64>,
        cols: Vec<Vector>,
    ) -> Self {
        debug_assert_eq!(source.len(), cols.len());
        GradedMatrix {
            ring,
            source,
            target,
            cols,
        }
    }

    pub fn zero(ring: QuotientRing, source: Vec<i64>, target: Vec<i64>) -> Self {
        let cols = vec![Vector::zero(); source.len()];
        GradedMatrix {
            ring,
            source,
            target,
            cols,
        }
    }

    pub fn identity(ring: QuotientRing, twists: Vec<i64>) -> Self {
        let amb = ring.ambient();
        let cols = (0..twists.len()).map(|i| Vector::unit(amb, i)).collect();
        GradedMatrix {
            ring,
            source: twists.clone(),
            target: twists,
            cols,
        }
    }

    /// Builds a matrix from rows of entries, inferring source twists from the
    /// first nonzero entry of each column. Zero columns get twist `default_twist`.
    pub fn from_rows(
        ring: QuotientRing,
        target: Vec<i64>,
        rows: &[Vec<Polynomial>],
    ) -> Result<Self> {
        if rows.len() != target.len() {
            return Err(AlgebraError::InvalidArgument(format!(
                "{} rows for {} target twists",
                rows.len(),
                target.len()
            )));
        }
        let ncols = rows.first().map(|r| r.len()).unwrap_or(0);
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(AlgebraError::InvalidArgument("ragged matrix".into()));
        }
        let mut source = Vec::with_capacity(ncols);
        let mut cols = Vec::with_capacity(ncols);
        for c in 0..ncols {
            let col: Vec<Polynomial> = rows.iter().map(|r| r[c].clone()).collect();
            let mut tw = None;
            for (r, p) in col.iter().enumerate() {
                if !p.is_homogeneous() {
                    return Err(AlgebraError::Inhomogeneous {
                        index: r,
                        degrees: p.term_degrees(),
                        text: p.to_string(),
                    });
                }
                if let Some(d) = p.degree().finite() {
                    tw.get_or_insert(d + target[r]);
                }
            }
            source.push(tw.unwrap_or(0));
            cols.push(Vector::from_polys(&col));
        }
        GradedMatrix::new(ring, source, target, cols)
    }

    pub fn check(&self) -> Result<()> {
        if self.cols.len() != self.source.len() {
            return Err(AlgebraError::InvalidArgument(
                "column count differs from source rank".into(),
            ));
        }
        for (j, c) in self.cols.iter().enumerate() {
            if let Some(p) = c.max_pos() {
                if p as usize >= self.target.len() {
                    return Err(AlgebraError::InvalidArgument(format!(
                        "column {j} exceeds target rank"
                    )));
                }
            }
            for t in c.terms() {
                let d = t.mono.degree() as i64 + self.target[t.pos as usize];
                if d != self.source[j] {
                    return Err(AlgebraError::Inhomogeneous {
                        index: j,
                        degrees: vec![d, self.source[j]],
                        text: c.display(self.ring.ambient(), self.target.len()),
                    });
                }
            }
        }
        Ok(())
    }

    pub fn nrows(&self) -> usize {
        self.target.len()
    }

    pub fn ncols(&self) -> usize {
        self.source.len()
    }

    pub fn entry(&self, r: usize, c: usize) -> Polynomial {
        self.cols[c].component(self.ring.ambient(), r)
    }

    pub fn rows(&self) -> Vec<Vec<Polynomial>> {
        let amb = self.ring.ambient();
        let cols: Vec<Vec<Polynomial>> =
            self.cols.iter().map(|c| c.to_polys(amb, self.nrows())).collect();
        (0..self.nrows())
            .map(|r| cols.iter().map(|c| c[r].clone()).collect())
            .collect()
    }

    /// Image of a source vector.
    pub fn apply(&self, v: &Vector) -> Vector {
        let field = self.ring.field();
        let mut acc = Vector::zero();
        for t in v.terms() {
            acc = acc.axpy(&t.coeff, &t.mono, &self.cols[t.pos as usize], field);
        }
        acc
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &GradedMatrix) -> GradedMatrix {
        let cols = other.cols.iter().map(|c| self.apply(c)).collect();
        GradedMatrix {
            ring: self.ring.clone(),
            source: other.source.clone(),
            target: self.target.clone(),
            cols,
        }
    }

    /// Whether every column vanishes modulo `J`.
    pub fn is_zero_mod_ring(&self) -> bool {
        self.cols
            .iter()
            .all(|c| self.ring.reduce_vector(c, self.nrows()).is_zero())
    }

    /// Entries reduced modulo `J`.
    pub fn reduced(&self) -> GradedMatrix {
        let cols = self
            .cols
            .iter()
            .map(|c| self.ring.reduce_vector(c, self.nrows()))
            .collect();
        GradedMatrix {
            cols,
            ..self.clone()
        }
    }

    /// `Hom(self, R(−shift))`: twists become `shift − t`.
    pub fn dual(&self, shift: i64) -> GradedMatrix {
        let field = self.ring.field();
        let mut buckets: Vec<Vec<Term>> = vec![Vec::new(); self.nrows()];
        for (c, col) in self.cols.iter().enumerate() {
            for t in col.terms() {
                buckets[t.pos as usize].push(Term {
                    pos: c as u32,
                    mono: t.mono.clone(),
                    coeff: t.coeff.clone(),
                });
            }
        }
        GradedMatrix {
            ring: self.ring.clone(),
            source: self.target.iter().map(|t| shift - t).collect(),
            target: self.source.iter().map(|t| shift - t).collect(),
            cols: buckets
                .into_iter()
                .map(|ts| Vector::from_terms(field, ts))
                .collect(),
        }
    }

    /// `self ⊗ id_b` on `(F ⊗ B) → (G ⊗ B)` with B of the given twists.
    pub fn tensor_right(&self, b: &[i64]) -> GradedMatrix {
        let nb = b.len() as u32;
        let mut cols = Vec::with_capacity(self.ncols() * b.len());
        for col in &self.cols {
            for j in 0..nb {
                cols.push(col.map_positions_monotone(|p| p * nb + j));
            }
        }
        GradedMatrix {
            ring: self.ring.clone(),
            source: FreeModule::tensor_twists(&self.source, b),
            target: FreeModule::tensor_twists(&self.target, b),
            cols,
        }
    }

    /// `sign · (id_a ⊗ self)` on `(A ⊗ F) → (A ⊗ G)`.
    pub fn tensor_left(&self, a: &[i64], negate: bool) -> GradedMatrix {
        let field = self.ring.field();
        let m = self.nrows() as u32;
        let mut cols = Vec::with_capacity(a.len() * self.ncols());
        let sign: Coeff = if negate {
            field.neg(&field.one())
        } else {
            field.one()
        };
        for i in 0..a.len() as u32 {
            for col in &self.cols {
                cols.push(col.map_positions_monotone(|p| i * m + p).scale(&sign, field));
            }
        }
        GradedMatrix {
            ring: self.ring.clone(),
            source: FreeModule::tensor_twists(a, &self.source),
            target: FreeModule::tensor_twists(a, &self.target),
            cols,
        }
    }

    /// Entrywise `q`-th powers with twists scaled by `q`.
    pub fn frobenius(&self, q: u64) -> GradedMatrix {
        let field = self.ring.field();
        GradedMatrix {
            ring: self.ring.clone(),
            source: self.source.iter().map(|t| t * q as i64).collect(),
            target: self.target.iter().map(|t| t * q as i64).collect(),
            cols: self.cols.iter().map(|c| c.frobenius(q, field)).collect(),
        }
    }

    /// Columns of both matrices side by side; targets must agree.
    pub fn hstack(&self, other: &GradedMatrix) -> GradedMatrix {
        assert_eq!(self.target, other.target);
        let mut m = self.clone();
        m.source.extend_from_slice(&other.source);
        m.cols.extend(other.cols.iter().cloned());
        m
    }

    /// Block diagonal sum.
    pub fn direct_sum(&self, other: &GradedMatrix) -> GradedMatrix {
        let off = self.nrows() as u32;
        let mut m = self.clone();
        m.target.extend_from_slice(&other.target);
        m.source.extend_from_slice(&other.source);
        m.cols.extend(other.cols.iter().map(|c| c.shift(off)));
        m
    }

    /// Keeps the listed columns.
    pub fn select_cols(&self, keep: &[usize]) -> GradedMatrix {
        GradedMatrix {
            ring: self.ring.clone(),
            source: keep.iter().map(|&j| self.source[j]).collect(),
            target: self.target.clone(),
            cols: keep.iter().map(|&j| self.cols[j].clone()).collect(),
        }
    }

    /// Drops zero columns.
    pub fn drop_zero_cols(&self) -> GradedMatrix {
        let keep: Vec<usize> = (0..self.ncols())
            .filter(|&j| !self.cols[j].is_zero())
            .collect();
        self.select_cols(&keep)
    }

    /// Position of a nonzero constant entry, if any.
    pub fn find_unit(&self) -> Option<(usize, usize)> {
        for (c, col) in self.cols.iter().enumerate() {
            for t in col.terms() {
                if t.mono.is_one() {
                    return Some((t.pos as usize, c));
                }
            }
        }
        None
    }

    pub fn is_minimal(&self) -> bool {
        self.find_unit().is_none()
    }
}

impl fmt::Display for GradedMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows = self.rows();
        let parts: Vec<String> = rows
            .iter()
            .map(|r| {
                let es: Vec<String> = r.iter().map(|p| p.to_string()).collect();
                format!("[{}]", es.join(", "))
            })
            .collect();
        write!(f, "[{}]", parts.join(", "))
    }
}
