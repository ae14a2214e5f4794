//! Sparse elements of free modules `⊕ R·e_k`, ordered position-over-term.

use std::cmp::Ordering;

use crate::field::{Coeff, CoefficientField};
use crate::monomial::Monomial;
use crate::poly::{PolyRing, Polynomial};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Term {
    pub pos: u32,
    pub mono: Monomial,
    pub coeff: Coeff,
}

/// Position-over-term: a smaller position index is the larger term; ties are
/// broken by grevlex on the monomial.
pub fn term_cmp(apos: u32, amono: &Monomial, bpos: u32, bmono: &Monomial) -> Ordering {
    bpos.cmp(&apos).then_with(|| amono.cmp(bmono))
}

/// Terms are sorted from the largest to the smallest and carry nonzero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Vector {
    terms: Vec<Term>,
}

pub(crate) fn merge_axpy(
    field: CoefficientField,
    a: &[Term],
    c: &Coeff,
    m: &Monomial,
    b: &[Term],
) -> Vec<Term> {
    // a + c·m·b
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    let mut bj: Option<(Monomial, Coeff)> = None;
    while i < a.len() || j < b.len() {
        if j < b.len() && bj.is_none() {
            bj = Some((b[j].mono.mul(m), field.mul(c, &b[j].coeff)));
        }
        if j >= b.len() {
            out.extend_from_slice(&a[i..]);
            break;
        }
        let (bm, bc) = bj.as_ref().unwrap();
        if i >= a.len() {
            out.push(Term {
                pos: b[j].pos,
                mono: bm.clone(),
                coeff: bc.clone(),
            });
            bj = None;
            j += 1;
            continue;
        }
        match term_cmp(a[i].pos, &a[i].mono, b[j].pos, bm) {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push(Term {
                    pos: b[j].pos,
                    mono: bm.clone(),
                    coeff: bc.clone(),
                });
                bj = None;
                j += 1;
            }
            Ordering::Equal => {
                let s = field.add(&a[i].coeff, bc);
                if !field.is_zero(&s) {
                    out.push(Term {
                        pos: a[i].pos,
                        mono: a[i].mono.clone(),
                        coeff: s,
                    });
                }
                i += 1;
                bj = None;
                j += 1;
            }
        }
    }
    out
}

impl Vector {
    pub fn zero() -> Self {
        Vector { terms: Vec::new() }
    }

    pub fn from_sorted_terms(terms: Vec<Term>) -> Self {
        Vector { terms }
    }

    pub fn from_terms(field: CoefficientField, mut terms: Vec<Term>) -> Self {
        terms.sort_by(|a, b| term_cmp(b.pos, &b.mono, a.pos, &a.mono));
        let mut out: Vec<Term> = Vec::with_capacity(terms.len());
        for t in terms {
            if let Some(last) = out.last_mut() {
                if last.pos == t.pos && last.mono == t.mono {
                    last.coeff = field.add(&last.coeff, &t.coeff);
                    continue;
                }
            }
            out.push(t);
        }
        out.retain(|t| !field.is_zero(&t.coeff));
        Vector { terms: out }
    }

    pub fn from_poly_at(pos: usize, p: &Polynomial) -> Self {
        Vector {
            terms: p
                .terms()
                .iter()
                .map(|(m, c)| Term {
                    pos: pos as u32,
                    mono: m.clone(),
                    coeff: c.clone(),
                })
                .collect(),
        }
    }

    pub fn from_polys(polys: &[Polynomial]) -> Self {
        let mut terms = Vec::new();
        for (k, p) in polys.iter().enumerate() {
            for (m, c) in p.terms() {
                terms.push(Term {
                    pos: k as u32,
                    mono: m.clone(),
                    coeff: c.clone(),
                });
            }
        }
        Vector { terms }
    }

    pub fn unit(ring: PolyRing, pos: usize) -> Self {
        Vector::from_poly_at(pos, &ring.one())
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<Term> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn component(&self, ring: PolyRing, pos: usize) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .filter(|t| t.pos as usize == pos)
            .map(|t| (t.mono.clone(), t.coeff.clone()))
            .collect();
        Polynomial::from_sorted_terms(ring, terms)
    }

    pub fn to_polys(&self, ring: PolyRing, rank: usize) -> Vec<Polynomial> {
        let mut buckets: Vec<Vec<(Monomial, Coeff)>> = vec![Vec::new(); rank];
        for t in &self.terms {
            buckets[t.pos as usize].push((t.mono.clone(), t.coeff.clone()));
        }
        buckets
            .into_iter()
            .map(|ts| Polynomial::from_sorted_terms(ring, ts))
            .collect()
    }

    pub fn add(&self, other: &Vector, field: CoefficientField) -> Vector {
        let one = field.one();
        let m = match other.terms.first() {
            Some(t) => Monomial::one(t.mono.nvars()),
            None => return self.clone(),
        };
        Vector {
            terms: merge_axpy(field, &self.terms, &one, &m, &other.terms),
        }
    }

    pub fn sub(&self, other: &Vector, field: CoefficientField) -> Vector {
        let m1 = field.neg(&field.one());
        let m = match other.terms.first() {
            Some(t) => Monomial::one(t.mono.nvars()),
            None => return self.clone(),
        };
        Vector {
            terms: merge_axpy(field, &self.terms, &m1, &m, &other.terms),
        }
    }

    /// `self + c·m·other`.
    pub fn axpy(&self, c: &Coeff, m: &Monomial, other: &Vector, field: CoefficientField) -> Vector {
        if field.is_zero(c) {
            return self.clone();
        }
        Vector {
            terms: merge_axpy(field, &self.terms, c, m, &other.terms),
        }
    }

    pub fn scale(&self, c: &Coeff, field: CoefficientField) -> Vector {
        if field.is_zero(c) {
            return Vector::zero();
        }
        Vector {
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    pos: t.pos,
                    mono: t.mono.clone(),
                    coeff: field.mul(c, &t.coeff),
                })
                .collect(),
        }
    }

    pub fn mul_term(&self, m: &Monomial, c: &Coeff, field: CoefficientField) -> Vector {
        if field.is_zero(c) {
            return Vector::zero();
        }
        Vector {
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    pos: t.pos,
                    mono: t.mono.mul(m),
                    coeff: field.mul(c, &t.coeff),
                })
                .collect(),
        }
    }

    pub fn mul_poly(&self, p: &Polynomial) -> Vector {
        let field = p.field();
        let mut acc = Vector::zero();
        for (m, c) in p.terms() {
            acc = acc.axpy(c, m, self, field);
        }
        acc
    }

    pub fn make_monic(&self, field: CoefficientField) -> Vector {
        match self.terms.first() {
            None => Vector::zero(),
            Some(t) => self.scale(&field.inv(&t.coeff), field),
        }
    }

    /// Renumbers positions with `f`; `f` must be strictly increasing on the used positions.
    pub fn map_positions_monotone(&self, f: impl Fn(u32) -> u32) -> Vector {
        Vector {
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    pos: f(t.pos),
                    mono: t.mono.clone(),
                    coeff: t.coeff.clone(),
                })
                .collect(),
        }
    }

    /// Renumbers positions arbitrarily and re-sorts.
    pub fn map_positions(&self, field: CoefficientField, f: impl Fn(u32) -> u32) -> Vector {
        Vector::from_terms(
            field,
            self.terms
                .iter()
                .map(|t| Term {
                    pos: f(t.pos),
                    mono: t.mono.clone(),
                    coeff: t.coeff.clone(),
                })
                .collect(),
        )
    }

    pub fn shift(&self, offset: u32) -> Vector {
        self.map_positions_monotone(|p| p + offset)
    }

    /// Keeps positions in `lo..hi`, renumbered from zero.
    pub fn restrict(&self, lo: u32, hi: u32) -> Vector {
        Vector {
            terms: self
                .terms
                .iter()
                .filter(|t| t.pos >= lo && t.pos < hi)
                .map(|t| Term {
                    pos: t.pos - lo,
                    mono: t.mono.clone(),
                    coeff: t.coeff.clone(),
                })
                .collect(),
        }
    }

    /// Twisted degree of the leading term.
    pub fn degree(&self, twists: &[i64]) -> Option<i64> {
        self.terms
            .first()
            .map(|t| t.mono.degree() as i64 + twists[t.pos as usize])
    }

    pub fn is_homogeneous(&self, twists: &[i64]) -> bool {
        match self.degree(twists) {
            None => true,
            Some(d) => self
                .terms
                .iter()
                .all(|t| t.mono.degree() as i64 + twists[t.pos as usize] == d),
        }
    }

    pub fn max_pos(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.pos).max()
    }

    /// Coefficient-wise Frobenius: every monomial and coefficient raised to `q`.
    pub fn frobenius(&self, q: u64, field: CoefficientField) -> Vector {
        Vector {
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    pos: t.pos,
                    mono: t.mono.pow(q as u32),
                    coeff: field.pow(&t.coeff, q),
                })
                .collect(),
        }
    }

    pub fn display(&self, ring: PolyRing, rank: usize) -> String {
        let polys = self.to_polys(ring, rank);
        let parts: Vec<String> = polys.iter().map(|p| p.to_string()).collect();
        format!("[{}]", parts.join(", "))
    }
}
