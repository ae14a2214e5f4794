//! Chain complexes of graded free modules.

use crate::error::{AlgebraError, Result};
use crate::extint::ExtInt;
use crate::groebner::kernel_modulo;
use crate::matrix::{FreeModule, GradedMatrix};
use crate::module::{GradedModule, Subquotient};
use crate::poly::Polynomial;
use crate::resolution::BettiTable;
use crate::ring::QuotientRing;
use crate::vector::Vector;

/// `F_0 ← F_1 ← ⋯ ← F_L`, with `maps[i − 1] = d_i : F_i → F_{i−1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainComplex {
    pub ring: QuotientRing,
    pub modules: Vec<Vec<i64>>,
    pub maps: Vec<GradedMatrix>,
}

impl ChainComplex {
    pub fn new(ring: QuotientRing, modules: Vec<Vec<i64>>, maps: Vec<GradedMatrix>) -> Result<Self> {
        if modules.is_empty() || maps.len() + 1 != modules.len() {
            return Err(AlgebraError::InvalidArgument(
                "a complex needs one map fewer than modules".into(),
            ));
        }
        for (i, d) in maps.iter().enumerate() {
            d.ring.same_ring(&ring)?;
            if d.source != modules[i + 1] || d.target != modules[i] {
                return Err(AlgebraError::InvalidArgument(format!(
                    "d_{} does not match the module twists",
                    i + 1
                )));
            }
            d.check()?;
        }
        let c = ChainComplex {
            ring,
            modules,
            maps,
        };
        if !c.is_complex() {
            return Err(AlgebraError::InvalidArgument("d∘d ≠ 0".into()));
        }
        Ok(c)
    }

    /// The complex `0 ← F_0` with no maps.
    pub fn single(ring: QuotientRing, twists: Vec<i64>) -> Self {
        ChainComplex {
            ring,
            modules: vec![twists],
            maps: Vec::new(),
        }
    }

    pub fn length(&self) -> usize {
        self.modules.len() - 1
    }

    /// Twists of `F_i`, empty outside the support.
    pub fn module(&self, i: usize) -> &[i64] {
        self.modules.get(i).map(|v| v.as_slice()).unwrap_or(&[])
    }

    /// `d_i : F_i → F_{i−1}` for `1 ≤ i ≤ L`.
    pub fn d(&self, i: usize) -> Option<&GradedMatrix> {
        if i == 0 {
            None
        } else {
            self.maps.get(i - 1)
        }
    }

    /// `d_i` as a matrix, zero outside the support.
    pub fn d_or_zero(&self, i: usize) -> GradedMatrix {
        match self.d(i) {
            Some(d) => d.clone(),
            None => GradedMatrix::zero(
                self.ring.clone(),
                self.module(i).to_vec(),
                if i == 0 {
                    Vec::new()
                } else {
                    self.module(i - 1).to_vec()
                },
            ),
        }
    }

    pub fn is_complex(&self) -> bool {
        (1..self.maps.len()).all(|i| self.maps[i - 1].compose(&self.maps[i]).is_zero_mod_ring())
    }

    /// `b_i = max twist of F_i`, −∞ when `F_i = 0`.
    pub fn b(&self, i: usize) -> ExtInt {
        ExtInt::max_of(self.module(i).iter().map(|&t| ExtInt::Fin(t)))
    }

    pub fn betti(&self) -> BettiTable {
        BettiTable::from_twists(&self.modules)
    }

    /// Drops trailing zero modules.
    pub fn trimmed(mut self) -> Self {
        while self.modules.len() > 1 && self.modules.last().unwrap().is_empty() {
            self.modules.pop();
            self.maps.pop();
        }
        self
    }

    /// Keeps `F_0 … F_len`.
    pub fn truncate(&self, len: usize) -> ChainComplex {
        let l = len.min(self.length());
        ChainComplex {
            ring: self.ring.clone(),
            modules: self.modules[..=l].to_vec(),
            maps: self.maps[..l].to_vec(),
        }
    }

    /// Total complex of `self ⊗ other`, with `d(x⊗y) = dx⊗y + (−1)^p x⊗dy`.
    pub fn tensor(&self, other: &ChainComplex) -> Result<ChainComplex> {
        self.ring.same_ring(&other.ring)?;
        let (lc, ld) = (self.length(), other.length());
        let total = lc + ld;
        // block offsets inside each total degree
        let blocks = |n: usize| -> Vec<(usize, usize, usize)> {
            let mut out = Vec::new();
            let mut off = 0;
            for p in n.saturating_sub(ld)..=n.min(lc) {
                let q = n - p;
                out.push((p, q, off));
                off += self.modules[p].len() * other.modules[q].len();
            }
            out
        };
        let mut modules = Vec::with_capacity(total + 1);
        for n in 0..=total {
            let mut tw = Vec::new();
            for (p, q, _) in blocks(n) {
                tw.extend(FreeModule::tensor_twists(&self.modules[p], &other.modules[q]));
            }
            modules.push(tw);
        }
        let mut maps = Vec::with_capacity(total);
        for n in 1..=total {
            let target_blocks = blocks(n - 1);
            let off_of = |p: usize| {
                target_blocks
                    .iter()
                    .find(|(pp, _, _)| *pp == p)
                    .map(|(_, _, o)| *o as u32)
            };
            let mut cols = Vec::new();
            let field = self.ring.field();
            for (p, q, _) in blocks(n) {
                let left = if p >= 1 {
                    Some((
                        self.maps[p - 1].tensor_right(&other.modules[q]),
                        off_of(p - 1).unwrap(),
                    ))
                } else {
                    None
                };
                let right = if q >= 1 {
                    Some((
                        other.maps[q - 1].tensor_left(&self.modules[p], p % 2 == 1),
                        off_of(p).unwrap(),
                    ))
                } else {
                    None
                };
                let ncols = self.modules[p].len() * other.modules[q].len();
                for k in 0..ncols {
                    let mut v = Vector::zero();
                    if let Some((m, off)) = &left {
                        v = v.add(&m.cols[k].shift(*off), field);
                    }
                    if let Some((m, off)) = &right {
                        v = v.add(&m.cols[k].shift(*off), field);
                    }
                    cols.push(v);
                }
            }
            maps.push(GradedMatrix::new_unchecked(
                self.ring.clone(),
                modules[n].clone(),
                modules[n - 1].clone(),
                cols,
            ));
        }
        Ok(ChainComplex {
            ring: self.ring.clone(),
            modules,
            maps,
        })
    }

    /// Tensor product of a nonempty list of complexes, left to right.
    pub fn tensor_all(cs: &[ChainComplex]) -> Result<ChainComplex> {
        let (first, rest) = cs
            .split_first()
            .ok_or_else(|| AlgebraError::InvalidArgument("empty list of complexes".into()))?;
        let mut acc = first.clone();
        for c in rest {
            acc = acc.tensor(c)?;
        }
        Ok(acc)
    }

    /// Koszul complex on homogeneous forms (zero forms are kept as zero maps).
    pub fn koszul(ring: &QuotientRing, forms: &[Polynomial]) -> Result<ChainComplex> {
        crate::ring::check_homogeneous(forms)?;
        let mut acc = ChainComplex::single(ring.clone(), vec![0]);
        for f in forms {
            let d = f.degree().finite().unwrap_or(0);
            let col = Vector::from_poly_at(0, f);
            let k = ChainComplex {
                ring: ring.clone(),
                modules: vec![vec![0], vec![d]],
                maps: vec![GradedMatrix::new_unchecked(
                    ring.clone(),
                    vec![d],
                    vec![0],
                    vec![col],
                )],
            };
            acc = acc.tensor(&k)?;
        }
        Ok(acc)
    }

    /// `H_i(C ⊗ M)` as a subquotient of `C_i ⊗ G_0`, where `M = coker(G_1 → G_0)`.
    pub fn homology_with(&self, m: &GradedModule, i: usize) -> Subquotient {
        let a = m.presentation();
        let g0 = &a.target;
        let ci = self.module(i);
        let ambient = FreeModule::tensor_twists(ci, g0);
        if ambient.is_empty() {
            return Subquotient::zero(self.ring.clone(), ambient);
        }
        let amb = self.ring.ambient();
        let numerator = match self.d(i) {
            None => (0..ambient.len()).map(|k| Vector::unit(amb, k)).collect(),
            Some(d) => {
                let dm = d.tensor_right(g0);
                let rel = a.tensor_left(self.module(i - 1), false);
                kernel_modulo(&self.ring, &dm.target, &dm.source, &dm.cols, &rel.cols)
            }
        };
        let mut denominator = a.tensor_left(ci, false).cols;
        if let Some(d) = self.d(i + 1) {
            denominator.extend(d.tensor_right(g0).cols);
        }
        Subquotient::new(self.ring.clone(), ambient, numerator, denominator)
    }

    /// `H_i(C)`.
    pub fn homology(&self, i: usize) -> Subquotient {
        self.homology_with(&GradedModule::ring_module(&self.ring), i)
    }

    /// Entrywise Frobenius of every differential.
    pub fn frobenius(&self, q: u64) -> ChainComplex {
        ChainComplex {
            ring: self.ring.clone(),
            modules: self
                .modules
                .iter()
                .map(|m| m.iter().map(|t| t * q as i64).collect())
                .collect(),
            maps: self.maps.iter().map(|d| d.frobenius(q)).collect(),
        }
    }

    /// Cancels unit entries by Gaussian elimination, giving a homotopy
    /// equivalent complex with no nonzero constants in any differential.
    pub fn minimalize(&self) -> ChainComplex {
        let mut c = self.clone();
        let field = c.ring.field();
        let amb = c.ring.ambient();
        for d in c.maps.iter_mut() {
            *d = d.reduced();
        }
        loop {
            let mut found = None;
            for (k, d) in c.maps.iter().enumerate() {
                if let Some((r, col)) = d.find_unit() {
                    found = Some((k + 1, r, col));
                    break;
                }
            }
            let Some((i, r, col)) = found else { break };
            let d = &c.maps[i - 1];
            let pivot_col = d.cols[col].clone();
            let u = pivot_col.component(amb, r).constant_value().unwrap();
            let pivot = pivot_col.scale(&field.inv(&u), field);
            let mut cols = Vec::with_capacity(d.ncols() - 1);
            let mut src = Vec::with_capacity(d.ncols() - 1);
            for (k, v) in d.cols.iter().enumerate() {
                if k == col {
                    continue;
                }
                let e = v.component(amb, r);
                let w = if e.is_zero() {
                    v.clone()
                } else {
                    v.sub(&pivot.mul_poly(&e), field)
                };
                let r32 = r as u32;
                cols.push(c.ring.reduce_vector(
                    &w.map_positions_monotone(|p| if p > r32 { p - 1 } else { p }),
                    d.nrows(),
                ));
                src.push(d.source[k]);
            }
            let mut tgt = d.target.clone();
            tgt.remove(r);
            c.maps[i - 1] = GradedMatrix::new_unchecked(c.ring.clone(), src.clone(), tgt.clone(), cols);
            c.modules[i] = src;
            c.modules[i - 1] = tgt;
            // d_{i+1}: drop row `col`
            if i < c.maps.len() {
                let n = &mut c.maps[i];
                let c32 = col as u32;
                n.cols = n
                    .cols
                    .iter()
                    .map(|v| {
                        let kept = crate::vector::Vector::from_sorted_terms(
                            v.terms().iter().filter(|t| t.pos != c32).cloned().collect(),
                        );
                        kept.map_positions_monotone(|p| if p > c32 { p - 1 } else { p })
                    })
                    .collect();
                n.target = c.modules[i].clone();
            }
            // d_{i−1}: drop column `r`
            if i >= 2 {
                let p = &mut c.maps[i - 2];
                p.cols.remove(r);
                p.source = c.modules[i - 1].clone();
            }
        }
        c
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::CoefficientField;
    use crate::poly::PolyRing;

    fn setup(n: usize) -> (PolyRing, QuotientRing) {
        let r = PolyRing::new(CoefficientField::Rationals, n);
        (r, QuotientRing::polynomial(r))
    }

    #[test]
    fn koszul_on_two_variables() {
        let (r, ring) = setup(2);
        let k = ChainComplex::koszul(&ring, &[r.var(0), r.var(1)]).unwrap();
        assert_eq!(k.modules, vec![vec![0], vec![1, 1], vec![2]]);
        assert!(k.is_complex());
        assert!(k.homology(1).is_zero());
        assert!(k.homology(2).is_zero());
        assert_eq!(k.homology(0).hilbert_data(0, 3).values, vec![1, 0, 0, 0]);
    }

    #[test]
    fn twist_arithmetic_of_triple_tensor() {
        let (r, ring) = setup(2);
        let fs = ["x0^2", "x0*x1", "x1^2"];
        let cs: Vec<ChainComplex> = fs
            .iter()
            .map(|f| ChainComplex::koszul(&ring, &[r.parse(f).unwrap()]).unwrap())
            .collect();
        let t = ChainComplex::tensor_all(&cs).unwrap();
        assert!(t.is_complex());
        let bs: Vec<ExtInt> = (0..=3).map(|l| t.b(l)).collect();
        assert_eq!(bs, vec![ExtInt::Fin(0), ExtInt::Fin(2), ExtInt::Fin(4), ExtInt::Fin(6)]);
    }

    #[test]
    fn dependent_forms_have_homology() {
        let (r, ring) = setup(1);
        let k = ChainComplex::koszul(&ring, &[r.var(0), r.var(0)]).unwrap();
        let h1 = k.homology(1);
        assert!(!h1.is_zero());
        assert_eq!(h1.hilbert_data(0, 3).values, vec![0, 1, 0, 0]);
    }

    #[test]
    fn identity_summand_cancels() {
        let (_, ring) = setup(2);
        let c = ChainComplex::new(
            ring.clone(),
            vec![vec![0], vec![0]],
            vec![GradedMatrix::identity(ring.clone(), vec![0])],
        )
        .unwrap();
        let m = c.minimalize();
        assert!(m.modules.iter().all(|v| v.is_empty()));
    }
}
