//! Minimal graded free resolutions and Betti tables.

use std::collections::BTreeMap;
use std::fmt;

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::complex::ChainComplex;
use crate::extint::ExtInt;
use crate::groebner::{kernel_modulo, minimal_generators};
use crate::matrix::GradedMatrix;
use crate::module::{minimize_presentation, GradedModule};
use crate::ring::QuotientRing;

/// `β_{ij}`: the number of generators of degree `j` in homological degree `i`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BettiTable {
    pub entries: BTreeMap<(usize, i64), usize>,
}

impl BettiTable {
    pub fn from_twists(modules: &[Vec<i64>]) -> Self {
        let mut entries = BTreeMap::new();
        for (i, tw) in modules.iter().enumerate() {
            for &t in tw {
                *entries.entry((i, t)).or_insert(0) += 1;
            }
        }
        BettiTable { entries }
    }

    pub fn get(&self, i: usize, j: i64) -> usize {
        *self.entries.get(&(i, j)).unwrap_or(&0)
    }

    /// Total Betti number in homological degree `i`.
    pub fn rank(&self, i: usize) -> usize {
        self.entries
            .iter()
            .filter(|((k, _), _)| *k == i)
            .map(|(_, v)| v)
            .sum()
    }

    /// `b_i = max{j : β_{ij} ≠ 0}`, −∞ if none.
    pub fn b(&self, i: usize) -> ExtInt {
        ExtInt::max_of(
            self.entries
                .keys()
                .filter(|(k, _)| *k == i)
                .map(|(_, j)| ExtInt::Fin(*j)),
        )
    }

    /// Largest homological index with a nonzero entry.
    pub fn length(&self) -> Option<usize> {
        self.entries.keys().map(|(i, _)| *i).max()
    }

    /// `reg_i = max_{k ≤ i}(b_k − k)`.
    pub fn reg_upto(&self, i: usize) -> ExtInt {
        ExtInt::max_of((0..=i).map(|k| self.b(k) - k as i64))
    }

    /// `max_i(b_i − i)` over the computed range.
    pub fn reg(&self) -> ExtInt {
        match self.length() {
            None => ExtInt::NegInf,
            Some(l) => self.reg_upto(l),
        }
    }

    /// Staircase layout: rows `j − i`, columns `i`.
    pub fn staircase(&self) -> String {
        let Some(len) = self.length() else {
            return "0\n".to_string();
        };
        let rows: Vec<i64> = self.entries.keys().map(|(i, j)| j - *i as i64).collect();
        let (lo, hi) = (*rows.iter().min().unwrap(), *rows.iter().max().unwrap());
        let width = self
            .entries
            .values()
            .map(|v| v.to_string().len())
            .max()
            .unwrap_or(1)
            .max(len.to_string().len());
        let mut out = String::new();
        let label = rows
            .iter()
            .map(|r| r.to_string().len() + 1)
            .max()
            .unwrap_or(2)
            .max(6);
        out.push_str(&format!("{:>label$}", ""));
        for i in 0..=len {
            out.push_str(&format!(" {i:>width$}"));
        }
        out.push('\n');
        out.push_str(&format!("{:>label$}", "total:"));
        for i in 0..=len {
            out.push_str(&format!(" {:>width$}", self.rank(i)));
        }
        out.push('\n');
        for r in lo..=hi {
            out.push_str(&format!("{:>label$}", format!("{r}:")));
            for i in 0..=len {
                let v = self.get(i, r + i as i64);
                if v == 0 {
                    out.push_str(&format!(" {:>width$}", "."));
                } else {
                    out.push_str(&format!(" {v:>width$}"));
                }
            }
            out.push('\n');
        }
        out
    }
}

impl Serialize for BettiTable {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let list: Vec<(usize, i64, usize)> =
            self.entries.iter().map(|((i, j), v)| (*i, *j, *v)).collect();
        let mut m = s.serialize_map(Some(2))?;
        m.serialize_entry("betti", &list)?;
        m.serialize_entry("reg", &self.reg())?;
        m.end()
    }
}

impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.staircase())
    }
}

/// A minimal free resolution, possibly cut off at a length cap.
#[derive(Clone, Debug)]
pub struct Resolution {
    pub complex: ChainComplex,
    /// The cap was reached with `F_cap ≠ 0`, so later terms are unknown.
    pub truncated: bool,
}

impl Resolution {
    pub fn length(&self) -> usize {
        self.complex.length()
    }

    pub fn ring(&self) -> &QuotientRing {
        &self.complex.ring
    }

    pub fn betti(&self) -> BettiTable {
        self.complex.betti()
    }

    /// Whether the resolution is known to be finite.
    pub fn is_finite(&self) -> bool {
        !self.truncated
    }
}

/// Minimal graded free resolution of `m` up to homological degree `cap`.
pub fn free_resolution(m: &GradedModule, cap: usize) -> Resolution {
    let ring = m.ring().clone();
    let p = m.presentation();
    let (target, source, cols) =
        minimize_presentation(&ring, p.target.clone(), p.source.clone(), p.cols.clone());
    let mut modules = vec![target.clone()];
    let mut maps: Vec<GradedMatrix> = Vec::new();
    if target.is_empty() {
        return Resolution {
            complex: ChainComplex::single(ring, Vec::new()),
            truncated: false,
        };
    }
    if cap == 0 {
        let truncated = !cols.is_empty();
        return Resolution {
            complex: ChainComplex::single(ring, target),
            truncated,
        };
    }
    if cols.is_empty() {
        return Resolution {
            complex: ChainComplex::single(ring, target),
            truncated: false,
        };
    }
    modules.push(source.clone());
    maps.push(GradedMatrix::new_unchecked(ring.clone(), source, target, cols));
    let mut truncated = true;
    while maps.len() < cap {
        let d = maps.last().unwrap();
        let ker = kernel_modulo(&ring, &d.target, &d.source, &d.cols, &[]);
        let rank = d.source.len();
        let ker: Vec<_> = ker
            .iter()
            .map(|v| ring.reduce_vector(v, rank))
            .filter(|v| !v.is_zero())
            .collect();
        let keep = minimal_generators(&ring, &d.source, &ker, &[]);
        if keep.is_empty() {
            truncated = false;
            break;
        }
        let cols: Vec<_> = keep.into_iter().map(|i| ker[i].clone()).collect();
        let src: Vec<i64> = cols.iter().map(|c| c.degree(&d.source).unwrap()).collect();
        let tgt = d.source.clone();
        modules.push(src.clone());
        maps.push(GradedMatrix::new_unchecked(ring.clone(), src, tgt, cols));
    }
    Resolution {
        complex: ChainComplex {
            ring,
            modules,
            maps,
        },
        truncated,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::CoefficientField;
    use crate::poly::PolyRing;

    fn table(pairs: &[((usize, i64), usize)]) -> BettiTable {
        BettiTable {
            entries: pairs.iter().cloned().collect(),
        }
    }

    #[test]
    fn complete_intersection_and_x2_xy() {
        let r = PolyRing::new(CoefficientField::Rationals, 2);
        let ring = QuotientRing::polynomial(r);
        let m = GradedModule::cyclic(&ring, &[r.parse("x0^2").unwrap(), r.parse("x1^3").unwrap()])
            .unwrap();
        let res = free_resolution(&m, 3);
        assert!(!res.truncated);
        assert_eq!(
            res.betti(),
            table(&[((0, 0), 1), ((1, 2), 1), ((1, 3), 1), ((2, 5), 1)])
        );
        assert_eq!(res.betti().reg(), ExtInt::Fin(3));

        let m = GradedModule::cyclic(&ring, &[r.parse("x0^2").unwrap(), r.parse("x0*x1").unwrap()])
            .unwrap();
        let res = free_resolution(&m, 3);
        assert_eq!(res.betti(), table(&[((0, 0), 1), ((1, 2), 2), ((2, 3), 1)]));
        assert!(res.complex.is_complex());
    }

    #[test]
    fn free_module_resolution() {
        let r = PolyRing::new(CoefficientField::Rationals, 3);
        let ring = QuotientRing::polynomial(r);
        let m = GradedModule::free(&ring, vec![0, 2, 2]);
        let res = free_resolution(&m, 4);
        assert_eq!(res.length(), 0);
        assert_eq!(res.betti(), table(&[((0, 0), 1), ((0, 2), 2)]));
    }

    #[test]
    fn periodic_resolution_over_hypersurface() {
        let r = PolyRing::new(CoefficientField::Rationals, 2);
        let s = QuotientRing::new(r, vec![r.parse("x0^2").unwrap()]).unwrap();
        let m = GradedModule::cyclic(&s, &[r.var(0)]).unwrap();
        let res = free_resolution(&m, 4);
        assert!(res.truncated);
        assert_eq!(res.length(), 4);
        for i in 0..=4 {
            assert_eq!(res.betti().get(i, i as i64), 1);
        }
    }

    #[test]
    fn staircase_layout() {
        let t = table(&[((0, 0), 1), ((1, 2), 2), ((2, 3), 1)]);
        let s = t.staircase();
        assert!(s.contains("0: 1 . ."));
        assert!(s.contains("1: . 2 1"));
        let j = serde_json::to_string(&t).unwrap();
        assert_eq!(j, r#"{"betti":[[0,0,1],[1,2,2],[2,3,1]],"reg":1}"#);
    }
}
