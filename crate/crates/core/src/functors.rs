//! Frobenius powers, the kernels `T_ℓ` of `I ⊗ I^{ℓ−1} → I^ℓ`, Kähler
//! differentials and the dimension of the singular locus.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{AlgebraError, Result};
use crate::extint::ExtInt;
use crate::groebner::kernel_modulo;
use crate::ideal::Ideal;
use crate::matrix::{FreeModule, GradedMatrix};
use crate::module::{GradedModule, Subquotient};
use crate::poly::Polynomial;
use crate::ring::QuotientRing;
use crate::vector::Vector;

/// `q = p^e` for the ring's characteristic `p`.
pub fn frobenius_q(ring: &QuotientRing, e: u32) -> Result<u64> {
    let p = ring.characteristic();
    if p == 0 {
        return Err(AlgebraError::Unsupported(
            "Frobenius needs a prime characteristic".into(),
        ));
    }
    p.checked_pow(e)
        .ok_or_else(|| AlgebraError::InvalidArgument(format!("{p}^{e} overflows")))
}

/// `F^e(M)`: every presentation entry raised to the `p^e`-th power.
pub fn frobenius_power(m: &GradedModule, e: u32) -> Result<GradedModule> {
    let q = frobenius_q(m.ring(), e)?;
    if e == 0 {
        return Ok(m.clone());
    }
    Ok(m.frobenius_presentation(q))
}

/// `H_i(F^e F_•)` for the minimal resolution `F_•` of `M`, which is
/// `Tor_i(M, S^{[e]})`.
pub fn frobenius_tor(m: &GradedModule, e: u32, i: usize) -> Result<Subquotient> {
    let q = frobenius_q(m.ring(), e)?;
    let res = m.resolution(i + 1);
    let c = res.complex.truncate(i + 1).frobenius(q);
    Ok(c.homology(i))
}

/// `T_ℓ = ker(I ⊗ I^{ℓ−1} → I^ℓ)`.
#[derive(Clone, Debug)]
pub struct PowerKernel {
    pub ell: u32,
    pub t: Subquotient,
}

pub fn power_kernel(i: &Ideal, ell: u32) -> Result<PowerKernel> {
    if ell < 2 {
        return Err(AlgebraError::InvalidArgument(format!(
            "power kernels start at ℓ = 2, got {ell}"
        )));
    }
    let ring = i.ring().clone();
    let a = i.as_module();
    let b = i.power(ell - 1).as_module();
    let g = i.minimal_generators();
    let h = i.power(ell - 1).minimal_generators();
    let ambient = FreeModule::tensor_twists(a.generator_twists(), b.generator_twists());
    if ambient.is_empty() {
        return Ok(PowerKernel {
            ell,
            t: Subquotient::zero(ring, ambient),
        });
    }
    let cols: Vec<Vector> = g
        .iter()
        .flat_map(|x| h.iter().map(move |y| Vector::from_poly_at(0, &x.mul(y))))
        .collect();
    let numerator = kernel_modulo(&ring, &[0], &ambient, &cols, &[]);
    let left = a.presentation().tensor_right(b.generator_twists());
    let right = b.presentation().tensor_left(a.generator_twists(), false);
    let denominator = left.hstack(&right).cols;
    Ok(PowerKernel {
        ell,
        t: Subquotient::new(ring, ambient, numerator, denominator),
    })
}

/// `Ω_B` for `B = R/J`, with the conormal module `J/J²` and the kernel `K`
/// of `J/J² → B(−1)^n`.
#[derive(Clone, Debug)]
pub struct KahlerModule {
    pub omega: GradedModule,
    pub conormal: GradedModule,
    pub k: Subquotient,
}

fn jacobian(ring: &QuotientRing, gens: &[Polynomial]) -> GradedMatrix {
    let n = ring.nvars();
    let source: Vec<i64> = gens.iter().map(|f| f.degree().finite().unwrap()).collect();
    let cols = gens
        .iter()
        .map(|f| {
            let parts: Vec<Polynomial> = (0..n).map(|v| ring.reduce(&f.derivative(v))).collect();
            Vector::from_polys(&parts)
        })
        .collect();
    GradedMatrix::new_unchecked(ring.clone(), source, vec![1; n], cols)
}

pub fn kahler_module(b: &QuotientRing) -> KahlerModule {
    let gens = b.defining_ideal().to_vec();
    let jac = jacobian(b, &gens);
    let omega = GradedModule::from_checked(jac.clone());
    let amb = b.ambient_ring();
    let vs: Vec<Vector> = gens.iter().map(|f| Vector::from_poly_at(0, f)).collect();
    let syz: Vec<Vector> = kernel_modulo(&amb, &[0], &jac.source, &vs, &[])
        .iter()
        .map(|v| b.reduce_vector(v, gens.len()))
        .filter(|v| !v.is_zero())
        .collect();
    let src = syz.iter().map(|v| v.degree(&jac.source).unwrap()).collect();
    let conormal = GradedModule::from_checked(GradedMatrix::new_unchecked(
        b.clone(),
        src,
        jac.source.clone(),
        syz.clone(),
    ));
    let numerator = if gens.is_empty() {
        Vec::new()
    } else {
        kernel_modulo(b, &jac.target, &jac.source, &jac.cols, &[])
    };
    let k = Subquotient::new(b.clone(), jac.source.clone(), numerator, syz);
    KahlerModule { omega, conormal, k }
}

/// How the equidimensionality of `J` was settled.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Equidimensionality {
    Verified,
    Asserted,
}

#[derive(Clone, Debug, Serialize)]
pub struct SingLocus {
    pub dim: ExtInt,
    pub codim: usize,
    pub equidimensional: Equidimensionality,
    /// Positive characteristic at most the largest generator degree, where the
    /// Jacobian criterion can fail.
    pub inseparability_caveat: bool,
    #[serde(skip)]
    pub ideal: Vec<Polynomial>,
}

/// `c × c` minors of an `m × n` matrix by Laplace expansion along the first
/// row, memoized on row and column bitmasks.
pub fn minors(rows: &[Vec<Polynomial>], c: usize) -> Vec<Polynomial> {
    let m = rows.len();
    let n = rows.first().map_or(0, |r| r.len());
    if c == 0 || c > m || c > n {
        return Vec::new();
    }
    let mut memo: HashMap<(u64, u64), Polynomial> = HashMap::new();
    let mut out = Vec::new();
    for rmask in subsets(m, c) {
        for cmask in subsets(n, c) {
            let d = det(rows, rmask, cmask, &mut memo);
            if !d.is_zero() {
                out.push(d);
            }
        }
    }
    out
}

fn subsets(n: usize, k: usize) -> Vec<u64> {
    (0u64..1 << n).filter(|s| s.count_ones() as usize == k).collect()
}

fn det(rows: &[Vec<Polynomial>], rmask: u64, cmask: u64, memo: &mut HashMap<(u64, u64), Polynomial>) -> Polynomial {
    if let Some(d) = memo.get(&(rmask, cmask)) {
        return d.clone();
    }
    let r0 = rmask.trailing_zeros() as usize;
    let ring = rows[0][0].ring();
    let d = if rmask.count_ones() == 1 {
        rows[r0][cmask.trailing_zeros() as usize].clone()
    } else {
        let rest = rmask & !(1 << r0);
        let mut acc = ring.zero();
        let mut sign = false;
        for j in 0..64 {
            if cmask >> j & 1 == 0 {
                continue;
            }
            let a = &rows[r0][j];
            if !a.is_zero() {
                let sub = det(rows, rest, cmask & !(1 << j), memo);
                let t = a.mul(&sub);
                acc = if sign { acc.sub(&t) } else { acc.add(&t) };
            }
            sign = !sign;
        }
        acc
    };
    memo.insert((rmask, cmask), d.clone());
    d
}

/// `dim R/(J + I_c(Jac J))` with `c = codim J`. Equidimensionality of `J` is
/// verified when `J` is zero or a complete intersection; otherwise it must be
/// asserted.
pub fn sing_locus_dim(s: &QuotientRing, assert_equidimensional: bool) -> Result<SingLocus> {
    let amb = s.ambient_ring();
    let gens = s.defining_ideal().to_vec();
    let n = s.nvars();
    let p = s.characteristic();
    let maxdeg = gens.iter().filter_map(|g| g.degree().finite()).max().unwrap_or(0);
    let inseparability_caveat = p != 0 && (p as i64) <= maxdeg;
    if gens.is_empty() {
        return Ok(SingLocus {
            dim: ExtInt::NegInf,
            codim: 0,
            equidimensional: Equidimensionality::Verified,
            inseparability_caveat,
            ideal: vec![amb.ambient().one()],
        });
    }
    let j = Ideal::new(&amb, gens.clone())?;
    let dim = j.dim().finite().unwrap() as usize;
    let c = n - dim;
    let equidimensional = if gens.len() == c {
        Equidimensionality::Verified
    } else if assert_equidimensional {
        Equidimensionality::Asserted
    } else {
        return Err(AlgebraError::Refused(
            "the defining ideal is not a complete intersection; assert equidimensionality to proceed"
                .into(),
        ));
    };
    let rows: Vec<Vec<Polynomial>> = gens
        .iter()
        .map(|f| (0..n).map(|v| f.derivative(v)).collect())
        .collect();
    let mut all = gens;
    all.extend(minors(&rows, c));
    let sing = Ideal::new(&amb, all.clone())?;
    Ok(SingLocus {
        dim: sing.dim(),
        codim: c,
        equidimensional,
        inseparability_caveat,
        ideal: all,
    })
}

/// `dim(Sing(S) ∩ Supp(M))`.
pub fn sing_support_dim(m: &GradedModule, sing: &SingLocus) -> ExtInt {
    m.quotient_by(&sing.ideal).dim()
}
