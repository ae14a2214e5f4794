//! Hilbert series of graded modules, read off leading-term modules.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::extint::ExtInt;
use crate::monomial::Monomial;

/// `HS(t) = numerator(t) / (1 − t)^nvars`, numerator a Laurent polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertSeries {
    pub nvars: usize,
    pub numerator: BTreeMap<i64, i64>,
}

fn add_into(acc: &mut BTreeMap<i64, i64>, other: &BTreeMap<i64, i64>, shift: i64, sign: i64) {
    for (&k, &v) in other {
        let e = acc.entry(k + shift).or_insert(0);
        *e += sign * v;
    }
    acc.retain(|_, v| *v != 0);
}

fn minimalize(gens: &mut Vec<Monomial>) {
    gens.sort_by_key(|m| m.degree());
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens.drain(..) {
        if !out.iter().any(|h| h.divides(&g)) {
            out.push(g);
        }
    }
    *gens = out;
}

/// Numerator `N` of `HS(R/I) = N/(1−t)^n` for a monomial ideal `I`.
pub fn monomial_numerator(gens: &[Monomial], nvars: usize) -> BTreeMap<i64, i64> {
    let mut g = gens.to_vec();
    minimalize(&mut g);
    numerator_rec(g, nvars)
}

fn numerator_rec(gens: Vec<Monomial>, nvars: usize) -> BTreeMap<i64, i64> {
    let mut one = BTreeMap::new();
    one.insert(0, 1);
    if gens.is_empty() {
        return one;
    }
    if gens.iter().any(|m| m.is_one()) {
        return BTreeMap::new();
    }
    // pairwise coprime generators: product of (1 − t^d)
    let mut counts = vec![0usize; nvars];
    for m in &gens {
        for i in m.support() {
            counts[i] += 1;
        }
    }
    let pivot = (0..nvars).filter(|&i| counts[i] > 1).max_by_key(|&i| counts[i]);
    let Some(x) = pivot else {
        let mut acc = one;
        for m in &gens {
            let mut next = acc.clone();
            add_into(&mut next, &acc, m.degree() as i64, -1);
            acc = next;
        }
        return acc;
    };
    // N(I) = N(I + (x)) + t·N(I : x)
    let xm = Monomial::variable(nvars, x);
    let mut plus: Vec<Monomial> = gens
        .iter()
        .filter(|m| m.exponent(x) == 0)
        .cloned()
        .collect();
    plus.push(xm);
    minimalize(&mut plus);
    let mut colon: Vec<Monomial> = gens.iter().map(|m| m.lower(x)).collect();
    minimalize(&mut colon);
    let mut acc = numerator_rec(plus, nvars);
    let c = numerator_rec(colon, nvars);
    add_into(&mut acc, &c, 1, 1);
    acc
}

fn binom(n: i64, k: i64) -> i64 {
    if k < 0 || n < k {
        return 0;
    }
    let mut r: i128 = 1;
    for i in 0..k {
        r = r * (n - i) as i128 / (i + 1) as i128;
    }
    r as i64
}

impl HilbertSeries {
    pub fn zero(nvars: usize) -> Self {
        HilbertSeries {
            nvars,
            numerator: BTreeMap::new(),
        }
    }

    /// Series of `⊕ R(−twists[k]) / L` where `L` has the given leading terms.
    pub fn from_leading_terms(nvars: usize, twists: &[i64], leads: &[(u32, Monomial)]) -> Self {
        let mut per_pos: Vec<Vec<Monomial>> = vec![Vec::new(); twists.len()];
        for (p, m) in leads {
            per_pos[*p as usize].push(m.clone());
        }
        let mut num = BTreeMap::new();
        for (k, gens) in per_pos.into_iter().enumerate() {
            let n = monomial_numerator(&gens, nvars);
            add_into(&mut num, &n, twists[k], 1);
        }
        HilbertSeries {
            nvars,
            numerator: num,
        }
    }

    pub fn add(&self, other: &HilbertSeries) -> HilbertSeries {
        let mut num = self.numerator.clone();
        add_into(&mut num, &other.numerator, 0, 1);
        HilbertSeries {
            nvars: self.nvars,
            numerator: num,
        }
    }

    pub fn sub(&self, other: &HilbertSeries) -> HilbertSeries {
        let mut num = self.numerator.clone();
        add_into(&mut num, &other.numerator, 0, -1);
        HilbertSeries {
            nvars: self.nvars,
            numerator: num,
        }
    }

    pub fn shift(&self, by: i64) -> HilbertSeries {
        HilbertSeries {
            nvars: self.nvars,
            numerator: self.numerator.iter().map(|(k, v)| (k + by, *v)).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_empty()
    }

    /// Dimension of the degree-`d` component.
    pub fn value(&self, d: i64) -> i64 {
        let n = self.nvars as i64;
        self.numerator
            .iter()
            .map(|(&k, &c)| {
                if n == 0 {
                    if k == d {
                        c
                    } else {
                        0
                    }
                } else {
                    c * binom(d - k + n - 1, n - 1)
                }
            })
            .sum()
    }

    pub fn values(&self, lo: i64, hi: i64) -> Vec<i64> {
        (lo..=hi).map(|d| self.value(d)).collect()
    }

    /// Krull dimension: the pole order at `t = 1`; −∞ for the zero module.
    pub fn dim(&self) -> ExtInt {
        if self.is_zero() {
            return ExtInt::NegInf;
        }
        let lo = *self.numerator.keys().next().unwrap();
        let hi = *self.numerator.keys().next_back().unwrap();
        let mut coeffs: Vec<i128> = (lo..=hi)
            .map(|k| *self.numerator.get(&k).unwrap_or(&0) as i128)
            .collect();
        let mut mult = 0i64;
        loop {
            let s: i128 = coeffs.iter().sum();
            if s != 0 || coeffs.is_empty() {
                break;
            }
            // divide by (1 − t): q_k = Σ_{i≤k} c_i
            let mut q = Vec::with_capacity(coeffs.len() - 1);
            let mut run = 0i128;
            for c in &coeffs[..coeffs.len() - 1] {
                run += c;
                q.push(run);
            }
            coeffs = q;
            mult += 1;
        }
        ExtInt::Fin(self.nvars as i64 - mult)
    }

    /// Least degree with a nonzero component; +∞ for the zero module.
    pub fn indeg(&self) -> ExtInt {
        match self.numerator.keys().next() {
            Some(&k) => ExtInt::Fin(k),
            None => ExtInt::PosInf,
        }
    }

    /// Largest degree with a nonzero component when the module has finite
    /// length; +∞ otherwise, −∞ for zero.
    pub fn top_degree(&self) -> ExtInt {
        match self.dim() {
            ExtInt::NegInf => ExtInt::NegInf,
            ExtInt::Fin(0) => {
                let hi = *self.numerator.keys().next_back().unwrap();
                let lo = *self.numerator.keys().next().unwrap();
                let mut d = hi;
                while d >= lo && self.value(d) == 0 {
                    d -= 1;
                }
                ExtInt::Fin(d)
            }
            _ => ExtInt::PosInf,
        }
    }
}

/// Summary data for a graded module.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HilbertData {
    pub window: (i64, i64),
    pub values: Vec<i64>,
    pub dim: ExtInt,
    pub indeg: ExtInt,
}

impl HilbertData {
    pub fn from_series(hs: &HilbertSeries, lo: i64, hi: i64) -> Self {
        HilbertData {
            window: (lo, hi),
            values: hs.values(lo, hi),
            dim: hs.dim(),
            indeg: hs.indeg(),
        }
    }
}
