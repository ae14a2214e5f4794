//! Finitely presented graded modules and subquotients of free modules.

use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{AlgebraError, Result};
use crate::extint::ExtInt;
use crate::groebner::{kernel_modulo, minimal_generators, GbBuilder};
use crate::hilbert::{HilbertData, HilbertSeries};
use crate::invariants::AInvariants;
use crate::matrix::{FreeModule, GradedMatrix};
use crate::poly::Polynomial;
use crate::resolution::{free_resolution, Resolution};
use crate::ring::QuotientRing;
use crate::vector::Vector;

/// Hilbert series of `F / (gens + J·F)`.
pub fn quotient_series(ring: &QuotientRing, twists: &[i64], gens: &[Vector]) -> HilbertSeries {
    let mut b = GbBuilder::over(ring, twists.to_vec());
    for g in gens {
        b.insert(g.clone());
    }
    let leads = b.leading_terms();
    HilbertSeries::from_leading_terms(ring.nvars(), twists, &leads)
}

/// Minimal presentation: unit entries cancelled and relations pruned modulo `J`.
pub fn minimize_presentation(
    ring: &QuotientRing,
    mut target: Vec<i64>,
    mut source: Vec<i64>,
    mut cols: Vec<Vector>,
) -> (Vec<i64>, Vec<i64>, Vec<Vector>) {
    let field = ring.field();
    loop {
        let rank = target.len();
        let mut keep_src = Vec::new();
        let mut keep_cols = Vec::new();
        for (s, c) in source.iter().zip(&cols) {
            let c = ring.reduce_vector(c, rank);
            if !c.is_zero() {
                keep_src.push(*s);
                keep_cols.push(c);
            }
        }
        source = keep_src;
        cols = keep_cols;
        let unit = cols.iter().enumerate().find_map(|(c, col)| {
            col.terms()
                .iter()
                .find(|t| t.mono.is_one())
                .map(|t| (t.pos, c, t.coeff.clone()))
        });
        let Some((r, c, u)) = unit else { break };
        let pivot = cols[c].scale(&field.inv(&u), field);
        let amb = ring.ambient();
        let mut new_cols = Vec::with_capacity(cols.len() - 1);
        let mut new_src = Vec::with_capacity(cols.len() - 1);
        for (k, col) in cols.iter().enumerate() {
            if k == c {
                continue;
            }
            let e = col.component(amb, r as usize);
            let reduced = if e.is_zero() {
                col.clone()
            } else {
                col.sub(&pivot.mul_poly(&e), field)
            };
            new_cols.push(reduced.map_positions_monotone(|p| if p > r { p - 1 } else { p }));
            new_src.push(source[k]);
        }
        target.remove(r as usize);
        cols = new_cols;
        source = new_src;
    }
    let keep = minimal_generators(ring, &target, &cols, &[]);
    let source = keep.iter().map(|&i| source[i]).collect();
    let cols = keep.into_iter().map(|i| cols[i].clone()).collect();
    (target, source, cols)
}

/// `coker(presentation)` over the presentation's ring.
#[derive(Debug)]
pub struct GradedModule {
    presentation: GradedMatrix,
    series: OnceLock<HilbertSeries>,
    resolution: Mutex<Option<Arc<Resolution>>>,
    ainv: OnceLock<AInvariants>,
}

impl Clone for GradedModule {
    fn clone(&self) -> Self {
        GradedModule {
            presentation: self.presentation.clone(),
            series: self.series.clone(),
            resolution: Mutex::new(self.resolution.lock().unwrap().clone()),
            ainv: self.ainv.clone(),
        }
    }
}

impl GradedModule {
    pub fn new(presentation: GradedMatrix) -> Result<Self> {
        presentation.check()?;
        Ok(GradedModule::from_checked(presentation))
    }

    pub(crate) fn from_checked(presentation: GradedMatrix) -> Self {
        GradedModule {
            presentation,
            series: OnceLock::new(),
            resolution: Mutex::new(None),
            ainv: OnceLock::new(),
        }
    }

    /// `ring / (gens)` as a cyclic module.
    pub fn cyclic(ring: &QuotientRing, gens: &[Polynomial]) -> Result<Self> {
        crate::ring::check_homogeneous(gens)?;
        let mut source = Vec::new();
        let mut cols = Vec::new();
        for g in gens {
            if g.ring() != ring.ambient() {
                return Err(AlgebraError::RingMismatch(format!(
                    "generator in {} for module over {}",
                    g.ring(),
                    ring
                )));
            }
            if let Some(d) = g.degree().finite() {
                source.push(d);
                cols.push(Vector::from_poly_at(0, g));
            }
        }
        Ok(GradedModule::from_checked(GradedMatrix::new_unchecked(
            ring.clone(),
            source,
            vec![0],
            cols,
        )))
    }

    /// The ring itself.
    pub fn ring_module(ring: &QuotientRing) -> Self {
        GradedModule::free(ring, vec![0])
    }

    pub fn free(ring: &QuotientRing, twists: Vec<i64>) -> Self {
        GradedModule::from_checked(GradedMatrix::zero(ring.clone(), Vec::new(), twists))
    }

    /// The residue field `ring / (x0, …, x{n−1})`.
    pub fn residue_field(ring: &QuotientRing) -> Self {
        let amb = ring.ambient();
        let gens: Vec<Polynomial> = (0..amb.nvars).map(|i| amb.var(i)).collect();
        GradedModule::cyclic(ring, &gens).unwrap()
    }

    pub fn ring(&self) -> &QuotientRing {
        &self.presentation.ring
    }

    pub fn presentation(&self) -> &GradedMatrix {
        &self.presentation
    }

    /// Degrees of the generators.
    pub fn generator_twists(&self) -> &[i64] {
        &self.presentation.target
    }

    pub fn hilbert_series(&self) -> &HilbertSeries {
        self.series.get_or_init(|| {
            quotient_series(
                self.ring(),
                &self.presentation.target,
                &self.presentation.cols,
            )
        })
    }

    pub fn hilbert_data(&self, lo: i64, hi: i64) -> HilbertData {
        HilbertData::from_series(self.hilbert_series(), lo, hi)
    }

    pub fn dim(&self) -> ExtInt {
        self.hilbert_series().dim()
    }

    pub fn indeg(&self) -> ExtInt {
        self.hilbert_series().indeg()
    }

    pub fn is_zero(&self) -> bool {
        self.hilbert_series().is_zero()
    }

    /// The same module viewed over the ambient polynomial ring.
    pub fn restrict_to_ambient(&self) -> GradedModule {
        let ring = self.ring();
        let amb = ring.ambient_ring();
        if ring.is_polynomial() {
            return self.clone();
        }
        let p = &self.presentation;
        let mut source = p.source.clone();
        let mut cols = p.cols.clone();
        for (k, t) in p.target.iter().enumerate() {
            for g in ring.defining_ideal() {
                source.push(g.degree().finite().unwrap() + t);
                cols.push(Vector::from_poly_at(k, g));
            }
        }
        GradedModule::from_checked(GradedMatrix::new_unchecked(
            amb,
            source,
            p.target.clone(),
            cols,
        ))
    }

    /// Minimal presentation of the same module.
    pub fn minimal(&self) -> GradedModule {
        let p = &self.presentation;
        let (t, s, c) =
            minimize_presentation(self.ring(), p.target.clone(), p.source.clone(), p.cols.clone());
        GradedModule::from_checked(GradedMatrix::new_unchecked(self.ring().clone(), s, t, c))
    }

    pub(crate) fn ainv_cache(&self) -> &OnceLock<AInvariants> {
        &self.ainv
    }

    /// Minimal graded free resolution, computed up to homological degree `cap`.
    pub fn resolution(&self, cap: usize) -> Arc<Resolution> {
        let mut slot = self.resolution.lock().unwrap();
        if let Some(r) = slot.as_ref() {
            if !r.truncated || r.length() >= cap {
                return r.clone();
            }
        }
        let r = Arc::new(free_resolution(self, cap));
        *slot = Some(r.clone());
        r
    }

    /// Default cap: enough for any polynomial-ring resolution, and a few steps
    /// past the number of variables over quotient rings.
    pub fn default_cap(&self) -> usize {
        let n = self.ring().nvars();
        if self.ring().is_polynomial() {
            n + 1
        } else {
            2 * n + 4
        }
    }

    /// `M(k)`: degrees shifted down by `k`.
    pub fn twist(&self, k: i64) -> GradedModule {
        let p = &self.presentation;
        GradedModule::from_checked(GradedMatrix::new_unchecked(
            self.ring().clone(),
            p.source.iter().map(|t| t - k).collect(),
            p.target.iter().map(|t| t - k).collect(),
            p.cols.clone(),
        ))
    }

    pub fn direct_sum(&self, other: &GradedModule) -> Result<GradedModule> {
        self.ring().same_ring(other.ring())?;
        Ok(GradedModule::from_checked(
            self.presentation.direct_sum(&other.presentation),
        ))
    }

    /// `M ⊗ N`, presented by `[A ⊗ 1 | 1 ⊗ B]`.
    pub fn tensor(&self, other: &GradedModule) -> Result<GradedModule> {
        self.ring().same_ring(other.ring())?;
        let a = &self.presentation;
        let b = &other.presentation;
        let left = a.tensor_right(&b.target);
        let right = b.tensor_left(&a.target, false);
        Ok(GradedModule::from_checked(left.hstack(&right)))
    }

    /// Entrywise Frobenius of the presentation.
    pub fn frobenius_presentation(&self, q: u64) -> GradedModule {
        GradedModule::from_checked(self.presentation.frobenius(q))
    }

    /// `M / (forms)·M`.
    pub fn quotient_by(&self, forms: &[Polynomial]) -> GradedModule {
        let p = &self.presentation;
        let mut m = p.clone();
        for f in forms {
            if let Some(d) = f.degree().finite() {
                for (k, t) in p.target.iter().enumerate() {
                    m.source.push(t + d);
                    m.cols.push(Vector::from_poly_at(k, f));
                }
            }
        }
        GradedModule::from_checked(m)
    }

    /// The whole module as a subquotient `F / im(A)`.
    pub fn as_subquotient(&self) -> Subquotient {
        let p = &self.presentation;
        let amb = self.ring().ambient();
        Subquotient {
            ring: self.ring().clone(),
            ambient: p.target.clone(),
            numerator: (0..p.target.len()).map(|k| Vector::unit(amb, k)).collect(),
            denominator: p.cols.clone(),
        }
    }
}

/// `num / den` inside a free module, with `den ⊆ num`.
#[derive(Clone, Debug)]
pub struct Subquotient {
    pub ring: QuotientRing,
    pub ambient: Vec<i64>,
    pub numerator: Vec<Vector>,
    pub denominator: Vec<Vector>,
}

impl Subquotient {
    pub fn new(
        ring: QuotientRing,
        ambient: Vec<i64>,
        numerator: Vec<Vector>,
        denominator: Vec<Vector>,
    ) -> Self {
        Subquotient {
            ring,
            ambient,
            numerator,
            denominator,
        }
    }

    pub fn zero(ring: QuotientRing, ambient: Vec<i64>) -> Self {
        Subquotient::new(ring, ambient, Vec::new(), Vec::new())
    }

    pub fn free_module(&self) -> FreeModule {
        FreeModule::new(self.ring.clone(), self.ambient.clone())
    }

    pub fn hilbert_series(&self) -> HilbertSeries {
        let mut all = self.numerator.clone();
        all.extend(self.denominator.iter().cloned());
        let den = quotient_series(&self.ring, &self.ambient, &self.denominator);
        let num = quotient_series(&self.ring, &self.ambient, &all);
        den.sub(&num)
    }

    pub fn hilbert_data(&self, lo: i64, hi: i64) -> HilbertData {
        HilbertData::from_series(&self.hilbert_series(), lo, hi)
    }

    pub fn is_zero(&self) -> bool {
        let mut b = GbBuilder::over(&self.ring, self.ambient.clone());
        for d in &self.denominator {
            b.insert(d.clone());
        }
        self.numerator.iter().all(|n| b.contains(n))
    }

    /// Checks that every denominator generator lies in the numerator.
    pub fn is_well_formed(&self) -> bool {
        let mut b = GbBuilder::over(&self.ring, self.ambient.clone());
        for n in &self.numerator {
            b.insert(n.clone());
        }
        self.denominator.iter().all(|d| b.contains(d))
    }

    pub fn dim(&self) -> ExtInt {
        self.hilbert_series().dim()
    }

    pub fn indeg(&self) -> ExtInt {
        self.hilbert_series().indeg()
    }

    /// A finite presentation `coker(R^r → R^g)` of the subquotient, where the
    /// generators are a minimal subset of the numerator generators.
    pub fn to_module(&self) -> GradedModule {
        let nums: Vec<Vector> = self
            .numerator
            .iter()
            .filter(|v| !v.is_zero())
            .cloned()
            .collect();
        let keep = minimal_generators(&self.ring, &self.ambient, &nums, &self.denominator);
        let gens: Vec<Vector> = keep.iter().map(|&i| nums[i].clone()).collect();
        let gdeg: Vec<i64> = gens
            .iter()
            .map(|g| g.degree(&self.ambient).unwrap())
            .collect();
        let rels = kernel_modulo(&self.ring, &self.ambient, &gdeg, &gens, &self.denominator);
        let keep = minimal_generators(&self.ring, &gdeg, &rels, &[]);
        let rels: Vec<Vector> = keep.into_iter().map(|i| rels[i].clone()).collect();
        let src = rels.iter().map(|r| r.degree(&gdeg).unwrap()).collect();
        GradedModule::from_checked(GradedMatrix::new_unchecked(
            self.ring.clone(),
            src,
            gdeg,
            rels,
        ))
    }
}
