//! Multiple Tor, Koszul homology and Ext over the ambient polynomial ring.

use crate::complex::ChainComplex;
use crate::error::{AlgebraError, Result};
use crate::groebner::kernel_modulo;
use crate::ideal::Ideal;
use crate::module::{GradedModule, Subquotient};
use crate::poly::Polynomial;
use crate::resolution::Resolution;
use crate::vector::Vector;

/// `Tor_i(M_1, …, M_s)`: resolve all modules but the last, tensor the
/// resolutions, tensor with the last module and take `H_i`.
pub fn tor_multi(modules: &[GradedModule], i: i64) -> Result<Subquotient> {
    let (last, rest) = modules
        .split_last()
        .ok_or_else(|| AlgebraError::InvalidArgument("tor of an empty list".into()))?;
    if i < 0 {
        return Err(AlgebraError::InvalidArgument(format!(
            "homological degree {i} is negative"
        )));
    }
    let i = i as usize;
    for m in rest {
        m.ring().same_ring(last.ring())?;
    }
    let ring = last.ring().clone();
    let mut cs = vec![ChainComplex::single(ring, vec![0])];
    for m in rest {
        cs.push(m.resolution(i + 1).complex.truncate(i + 1));
    }
    let f = ChainComplex::tensor_all(&cs)?;
    Ok(f.homology_with(last, i))
}

/// Whether the Tor computation above used a truncated resolution that might
/// have hidden terms in degree `i + 1`.
pub fn tor_multi_truncated(modules: &[GradedModule], i: usize) -> bool {
    let Some((_, rest)) = modules.split_last() else {
        return false;
    };
    rest.iter().any(|m| {
        let r = m.resolution(i + 1);
        r.truncated && r.length() < i + 1
    })
}

/// `Tor_1(S/I_1, …, S/I_s)` as `M/P`, where `M` is the set of tuples in
/// `I_1 ⊕ ⋯ ⊕ I_s` summing to zero and `P` is spanned by `g·e_i − g·e_j`
/// with `g ∈ I_iI_j`.
pub fn tor1_cycles(ideals: &[Ideal]) -> Result<Subquotient> {
    if ideals.len() < 2 {
        return Err(AlgebraError::InvalidArgument(
            "at least two ideals are needed".into(),
        ));
    }
    let ring = ideals[0].ring().clone();
    for i in ideals {
        i.ring().same_ring(&ring)?;
    }
    let amb = ring.ambient();
    let field = ring.field();
    let s = ideals.len();
    let mut owner = Vec::new();
    let mut gens: Vec<Polynomial> = Vec::new();
    for (k, i) in ideals.iter().enumerate() {
        for g in i.gens() {
            owner.push(k);
            gens.push(g.clone());
        }
    }
    let degs: Vec<i64> = gens.iter().map(|g| g.degree().finite().unwrap()).collect();
    let cols: Vec<Vector> = gens.iter().map(|g| Vector::from_poly_at(0, g)).collect();
    let syz = kernel_modulo(&ring, &[0], &degs, &cols, &[]);
    let numerator: Vec<Vector> = syz
        .iter()
        .map(|v| {
            let mut parts = vec![amb.zero(); s];
            for (j, c) in v.to_polys(amb, gens.len()).into_iter().enumerate() {
                parts[owner[j]] = parts[owner[j]].add(&c.mul(&gens[j]));
            }
            let parts: Vec<Polynomial> = parts.iter().map(|p| ring.reduce(p)).collect();
            Vector::from_polys(&parts)
        })
        .filter(|v| !v.is_zero())
        .collect();
    let mut denominator = Vec::new();
    for a in 0..s {
        for b in a + 1..s {
            for g in ideals[a].gens() {
                for h in ideals[b].gens() {
                    let p = ring.reduce(&g.mul(h));
                    if p.is_zero() {
                        continue;
                    }
                    let ea = Vector::from_poly_at(a, &p);
                    let eb = Vector::from_poly_at(b, &p);
                    denominator.push(ea.sub(&eb, field));
                }
            }
        }
    }
    Ok(Subquotient::new(ring, vec![0; s], numerator, denominator))
}

/// `H_i(K(forms) ⊗ M)`.
pub fn koszul_homology(forms: &[Polynomial], m: &GradedModule, i: usize) -> Result<Subquotient> {
    let k = ChainComplex::koszul(m.ring(), forms)?;
    Ok(k.homology_with(m, i))
}

/// `Ext^k(M, R(twist))` from a resolution over a polynomial ring.
pub(crate) fn ext_from_resolution(res: &Resolution, twist: i64, k: usize) -> Subquotient {
    let c = &res.complex;
    let ring = c.ring.clone();
    let shift = -twist;
    let ambient: Vec<i64> = c.module(k).iter().map(|t| shift - t).collect();
    if ambient.is_empty() {
        return Subquotient::zero(ring, ambient);
    }
    let amb = ring.ambient();
    let numerator = match c.d(k + 1) {
        None => (0..ambient.len()).map(|j| Vector::unit(amb, j)).collect(),
        Some(d) => {
            let dd = d.dual(shift);
            kernel_modulo(&ring, &dd.target, &dd.source, &dd.cols, &[])
        }
    };
    let denominator = match c.d(k) {
        None => Vec::new(),
        Some(d) => d.dual(shift).cols,
    };
    Subquotient::new(ring, ambient, numerator, denominator)
}

/// `Ext^k(M, R(twist))` over the ambient polynomial ring `R`, for
/// `k = 0 … pd M`. Modules over a quotient ring are first viewed over `R`.
pub fn ext_modules(m: &GradedModule, twist: i64) -> Vec<Subquotient> {
    let ma = m.restrict_to_ambient();
    let res = ma.resolution(ma.default_cap());
    (0..=res.length())
        .map(|k| ext_from_resolution(&res, twist, k))
        .collect()
}

/// A single `Ext^k(M, R(twist))`, zero past the projective dimension.
pub fn ext_module(m: &GradedModule, twist: i64, k: usize) -> Subquotient {
    let ma = m.restrict_to_ambient();
    let res = ma.resolution(ma.default_cap());
    ext_from_resolution(&res, twist, k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extint::ExtInt;
    use crate::field::CoefficientField;
    use crate::poly::PolyRing;
    use crate::ring::QuotientRing;

    fn setup(n: usize) -> (PolyRing, QuotientRing) {
        let r = PolyRing::new(CoefficientField::Rationals, n);
        (r, QuotientRing::polynomial(r))
    }

    fn cyc(ring: &QuotientRing, gens: &[&str]) -> GradedModule {
        let g: Vec<Polynomial> = gens.iter().map(|s| ring.parse(s).unwrap()).collect();
        GradedModule::cyclic(ring, &g).unwrap()
    }

    #[test]
    fn two_module_tor() {
        let (_, ring) = setup(2);
        let a = cyc(&ring, &["x0"]);
        let b = cyc(&ring, &["x1"]);
        assert!(tor_multi(&[a.clone(), b], 1).unwrap().is_zero());
        let t = tor_multi(&[a.clone(), a.clone()], 1).unwrap();
        let expect = cyc(&ring, &["x0"]).twist(-1);
        assert_eq!(t.hilbert_data(0, 6).values, expect.hilbert_data(0, 6).values);
        assert!(tor_multi(&[a], -1).is_err());
    }

    #[test]
    fn cycles_match_classical_tor() {
        let (_, ring) = setup(2);
        let i = Ideal::new(&ring, vec![ring.parse("x0").unwrap()]).unwrap();
        let j = Ideal::new(&ring, vec![ring.parse("x1").unwrap()]).unwrap();
        assert!(tor1_cycles(&[i.clone(), j]).unwrap().is_zero());
        let t = tor1_cycles(&[i.clone(), i]).unwrap();
        assert_eq!(t.hilbert_data(0, 5).values, vec![0, 1, 1, 1, 1, 1]);
    }

    #[test]
    fn ext_of_residue_field_and_hypersurface() {
        let (_, ring) = setup(2);
        let k = GradedModule::residue_field(&ring);
        let e = ext_modules(&k, 0);
        assert_eq!(e.len(), 3);
        assert!(e[0].is_zero() && e[1].is_zero());
        assert_eq!(e[2].hilbert_data(-3, 0).values, vec![0, 1, 0, 0]);
        let m = cyc(&ring, &["x0^2 + x1^2"]);
        let e1 = &ext_modules(&m, 0)[1];
        let expect = m.twist(2);
        assert_eq!(e1.hilbert_data(-3, 4).values, expect.hilbert_data(-3, 4).values);
        let r = GradedModule::ring_module(&ring);
        let e0 = ext_module(&r, 0, 0);
        assert_eq!(e0.indeg(), ExtInt::Fin(0));
        assert_eq!(e0.dim(), ExtInt::Fin(2));
    }

    #[test]
    fn koszul_homology_examples() {
        let (r, ring) = setup(2);
        let m = GradedModule::ring_module(&ring);
        assert!(koszul_homology(&[r.var(0), r.var(1)], &m, 1).unwrap().is_zero());
        let m = cyc(&ring, &["x0*x1"]);
        let h0 = koszul_homology(&[r.parse("x0^2").unwrap()], &m, 0).unwrap();
        let direct = cyc(&ring, &["x0*x1", "x0^2"]);
        assert_eq!(h0.hilbert_data(0, 6).values, direct.hilbert_data(0, 6).values);
    }
}
