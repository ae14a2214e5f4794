//! Regularity of Tor, rigidity, bounds for complexes and intersections.

use std::collections::BTreeMap;

use crate::complex::ChainComplex;
use crate::error::{AlgebraError, Result};
use crate::extint::ExtInt;
use crate::functors::sing_locus_dim;
use crate::ideal::Ideal;
use crate::invariants::{
    a_invariants, a_invariants_of, complex_bounds_for, projective_dimension, ring_regularity,
    AInvariants,
};
use crate::module::GradedModule;
use crate::poly::Polynomial;
use crate::resolution::BettiTable;
use crate::tor::tor_multi;

use super::{
    describe_ideal, describe_module, hyp, Assertions, HypothesisStatus, ReportBuilder,
    TheoremReport,
};

use ExtInt::{Fin, NegInf};

fn fin(k: usize) -> ExtInt {
    Fin(k as i64)
}

fn flag(b: bool) -> ExtInt {
    Fin(b as i64)
}

fn describe_all(ms: &[GradedModule]) -> String {
    ms.iter().map(describe_module).collect::<Vec<_>>().join(" ; ")
}

/// `reg` computed by local duality.
fn reg(m: &GradedModule) -> ExtInt {
    a_invariants(m).reg
}

pub fn check_regfpd(m: &GradedModule) -> TheoremReport {
    let mut b = ReportBuilder::new("regfpd", describe_module(m));
    let pd = projective_dimension(m);
    b.hyp(
        hyp::FINITE_PD,
        if pd.is_some() {
            HypothesisStatus::Verified
        } else {
            HypothesisStatus::Failed
        },
    );
    let lhs = reg(m);
    b.detail("reg", lhs);
    b.detail("reg_s", ring_regularity(m.ring()));
    if let Some(pd) = pd {
        let betti = m.resolution(pd + 1).betti();
        let rhs = betti.reg() + ring_regularity(m.ring());
        b.detail("pd", pd);
        b.detail("reg_over_s", betti.reg());
        b.eq("reg(M) = reg^S(M) + reg(S)", lhs, rhs);
    }
    b.finish()
}

/// Tor regularity: `max_i(reg Tor_i − i) = Σ reg M_j − (s−1) reg S`.
pub fn check_regtor(modules: &[GradedModule]) -> Result<TheoremReport> {
    if modules.is_empty() {
        return Err(AlgebraError::InvalidArgument("no modules given".into()));
    }
    let ring = modules[0].ring().clone();
    for m in modules {
        m.ring().same_ring(&ring)?;
    }
    let mut b = ReportBuilder::new("regtor", describe_all(modules));
    let s = modules.len();
    let pds: Vec<Option<usize>> = modules.iter().map(projective_dimension).collect();
    let finite = pds.iter().filter(|p| p.is_some()).count();
    let h2 = b.hyp(
        hyp::FINITE_PD,
        if finite + 1 >= s {
            HypothesisStatus::Verified
        } else {
            HypothesisStatus::Failed
        },
    );
    b.detail("finite_pd_count", finite);
    let reg_s = ring_regularity(&ring);
    let rhs = modules.iter().map(reg).fold(Fin(0), |a, r| a + r)
        - reg_s.scale(s as i64 - 1);
    if !h2.usable() {
        b.hyp(hyp::TOR_DIM_LE_1, HypothesisStatus::Unverified);
        return Ok(b.finish());
    }
    // The module of infinite projective dimension, if any, goes last.
    let mut order: Vec<usize> = (0..s).collect();
    order.sort_by_key(|&k| pds[k].is_none());
    let ordered: Vec<GradedModule> = order.iter().map(|&k| modules[k].clone()).collect();
    let top: usize = order[..s - 1].iter().map(|&k| pds[k].unwrap()).sum();
    let mut values = BTreeMap::new();
    let mut bad = None;
    for i in 0..=top {
        let t = tor_multi(&ordered, i as i64)?;
        if i > 0 && t.dim() > Fin(1) && bad.is_none() {
            bad = Some(i);
        }
        values.insert(i, a_invariants_of(&t).reg - i as i64);
    }
    b.hyp(
        hyp::TOR_DIM_LE_1,
        if bad.is_none() {
            HypothesisStatus::Verified
        } else {
            HypothesisStatus::Failed
        },
    );
    if let Some(i) = bad {
        b.detail("failing_tor_index", i);
    }
    let lhs = ExtInt::max_of(values.values().copied());
    let attained: Vec<usize> = values
        .iter()
        .filter(|(_, v)| **v == rhs)
        .map(|(i, _)| *i)
        .collect();
    b.detail("reg_tor_minus_i", &values);
    b.detail("attained_at", &attained);
    b.detail("reg_s", reg_s);
    b.eq("max_i(reg Tor_i - i) = sum reg M_j - (s-1) reg S", lhs, rhs);
    Ok(b.finish())
}

/// Rigidity of multiple Tor over a polynomial ring and the three equivalent
/// conditions for a proper intersection of Cohen–Macaulay modules.
pub fn check_rigidity_and_proper(modules: &[GradedModule]) -> Result<TheoremReport> {
    if modules.is_empty() {
        return Err(AlgebraError::InvalidArgument("no modules given".into()));
    }
    let ring = modules[0].ring().clone();
    for m in modules {
        m.ring().same_ring(&ring)?;
    }
    let mut b = ReportBuilder::new("rigidity", describe_all(modules));
    let poly = b.hyp(
        hyp::POLYNOMIAL_RING,
        if ring.is_polynomial() {
            HypothesisStatus::Verified
        } else {
            HypothesisStatus::Failed
        },
    );
    if !poly.usable() || modules.iter().any(|m| m.is_zero()) {
        return Ok(b.finish());
    }
    let n = ring.nvars();
    let s = modules.len();
    let top = n * (s - 1);
    let tors: Vec<_> = (0..=top)
        .map(|i| tor_multi(modules, i as i64))
        .collect::<Result<_>>()?;
    let nonzero: Vec<bool> = tors.iter().map(|t| !t.is_zero()).collect();
    b.detail("tor_nonzero", &nonzero);
    if let Some(i0) = (1..=top).find(|&i| !nonzero[i]) {
        let later = (i0..=top).filter(|&j| nonzero[j]).count();
        b.detail("first_vanishing", i0);
        b.eq("nonzero Tor_j after first vanishing", fin(later), Fin(0));
    } else {
        b.eq("nonzero Tor_j after first vanishing", Fin(0), Fin(0));
    }

    // Σ pd = n + j − ε with 0 ≤ ε ≤ dim Tor_j and ε ≥ ε0.
    let j = (0..=top).rev().find(|&i| nonzero[i]).unwrap();
    let pds: Vec<usize> = modules
        .iter()
        .map(|m| projective_dimension(m).unwrap())
        .collect();
    let sum_pd: usize = pds.iter().sum();
    let eps = Fin((n + j) as i64 - sum_pd as i64);
    let tor_ainv: Vec<AInvariants> = tors.iter().map(a_invariants_of).collect();
    let eps0 = ExtInt::min_of((0..=j).map(|i| tor_ainv[j - i].depth() + i as i64));
    b.detail("top_tor", j);
    b.detail("epsilon", eps);
    b.detail("epsilon0", eps0);
    b.le("0 <= epsilon", Fin(0), eps);
    b.le("epsilon <= dim Tor_j", eps, tors[j].dim());
    b.le("epsilon0 <= epsilon", eps0, eps);
    if eps0 == tor_ainv[j].depth() {
        b.eq("epsilon = epsilon0", eps, eps0);
    }

    let tensor = tors[0].to_module();
    let codim = |d: ExtInt| Fin(n as i64) - d;
    let tensor_codim = codim(tensor.dim());
    let c1 = nonzero.get(1) != Some(&true) && a_invariants(&tensor).is_cohen_macaulay();
    let c2 = tensor_codim == fin(sum_pd);
    let codims: ExtInt = modules.iter().map(|m| codim(m.dim())).fold(Fin(0), |a, c| a + c);
    let proper = tensor_codim == codims;
    let all_cm = modules.iter().all(|m| a_invariants(m).is_cohen_macaulay());
    let c3 = proper && all_cm;
    b.detail("tor1_zero_and_cm", c1);
    b.detail("codim_equals_sum_pd", c2);
    b.detail("proper_and_cm", c3);
    b.detail("proper", proper);
    b.eq("(i) <=> (ii)", flag(c1), flag(c2));
    b.eq("(ii) <=> (iii)", flag(c2), flag(c3));
    Ok(b.finish())
}

/// `τ` minimal for the condition `cd H_i ≤ τ − 1 + i` for `i > 0`.
pub fn tau_for(cds: &[(usize, ExtInt)]) -> i64 {
    cds.iter()
        .filter(|(i, _)| *i > 0)
        .filter_map(|(i, c)| c.finite().map(|c| c - *i as i64 + 1))
        .max()
        .unwrap_or(0)
        .max(0)
}

/// Bounds for the homology of `F ⊗ M` with `F` a complex of free modules.
pub fn check_nonacyclic(f: &ChainComplex, m: &GradedModule) -> Result<TheoremReport> {
    f.ring.same_ring(m.ring())?;
    let input = format!("F of length {} tensor {}", f.length(), describe_module(m));
    let mut b = ReportBuilder::new("nonacyclic", input);
    let ma = a_invariants(m);
    let data = complex_bounds_for(f, &ma);
    let len = f.length();
    let hs: Vec<AInvariants> = (0..=len)
        .map(|i| a_invariants_of(&f.homology_with(m, i)))
        .collect();
    let cds: Vec<(usize, ExtInt)> = hs.iter().enumerate().map(|(i, h)| (i, h.cd)).collect();
    let tau = tau_for(&cds);
    b.hyp(hyp::D1, HypothesisStatus::Verified);
    b.detail("tau", tau);
    b.detail("cd_h", cds.iter().map(|(_, c)| *c).collect::<Vec<_>>());
    b.detail("bounds", &data);
    let h0 = &hs[0];
    let top = h0.cd.finite().unwrap_or(-1);
    for p in (tau - 1).max(0)..=top {
        b.le(
            format!("a_{p}(H_0) <= delta_{p}"),
            h0.get(p),
            data.delta(p as usize),
        );
    }
    let low = cds.iter().skip(1).all(|(_, c)| *c <= Fin(1));
    let mid = cds.iter().skip(2).all(|(_, c)| *c <= Fin(2));
    b.optional_hyp(
        hyp::CD_H_LE_1,
        if low {
            HypothesisStatus::Verified
        } else {
            HypothesisStatus::Failed
        },
    );
    if low {
        for p in 0..(tau - 1).max(0) {
            b.check_requiring(
                format!("a_{p}(H_0) <= delta_{p}"),
                h0.get(p),
                super::Relation::Le,
                data.delta(p as usize),
                &[hyp::CD_H_LE_1],
            );
        }
        for q in 1..=len {
            b.check_requiring(
                format!("a_0(H_{q}) <= epsilon_{q}"),
                hs[q].get(0),
                super::Relation::Le,
                data.epsilon(q),
                &[hyp::CD_H_LE_1],
            );
        }
    }
    if mid {
        for q in 1..=len {
            b.le(
                format!("a_1(H_{q}) <= epsilon_{}", q - 1),
                hs[q].get(1),
                data.epsilon(q - 1),
            );
        }
    }
    Ok(b.finish())
}

/// `b_ℓ = max_{i_1+…+i_s ≤ ℓ} Σ b_{i_j}(M_j)`.
fn combined_betti(tables: &[BettiTable], ell: usize) -> ExtInt {
    let mut best = vec![Fin(0); ell + 1];
    for t in tables {
        let mut next = vec![NegInf; ell + 1];
        for (used, v) in best.iter().enumerate() {
            if *v == NegInf {
                continue;
            }
            for k in 0..=ell - used {
                let cand = *v + t.b(k);
                if cand > next[used + k] {
                    next[used + k] = cand;
                }
            }
        }
        best = next;
    }
    ExtInt::max_of(best)
}

/// `C_ℓ = max_{i_1+…+i_s = ℓ} Σ reg_{i_j}(M_j)`.
fn c_ell(tables: &[BettiTable], ell: usize) -> ExtInt {
    let mut best = vec![NegInf; ell + 1];
    best[0] = Fin(0);
    for t in tables {
        let mut next = vec![NegInf; ell + 1];
        for (used, v) in best.iter().enumerate() {
            if *v == NegInf {
                continue;
            }
            for k in 0..=ell - used {
                let cand = *v + t.reg_upto(k);
                if cand > next[used + k] {
                    next[used + k] = cand;
                }
            }
        }
        best = next;
    }
    best[ell]
}

/// Tor of `M` against modules of finite projective dimension: bounds on
/// `a_p(T_0)` from the Betti numbers, and their form in terms of regularity
/// when `reg S > 0`.
pub fn check_regtorgen(m: &GradedModule, others: &[GradedModule]) -> Result<TheoremReport> {
    for o in others {
        o.ring().same_ring(m.ring())?;
    }
    let mut all = vec![m.clone()];
    all.extend(others.iter().cloned());
    let mut b = ReportBuilder::new("regtorgen", describe_all(&all));
    let ring = m.ring().clone();
    let reg_s = ring_regularity(&ring);
    let pds: Vec<Option<usize>> = others.iter().map(projective_dimension).collect();
    let fpd = b.hyp(
        hyp::FINITE_PD,
        if pds.iter().all(|p| p.is_some()) {
            HypothesisStatus::Verified
        } else {
            HypothesisStatus::Failed
        },
    );
    if !fpd.usable() {
        b.truncated(true);
        return Ok(b.finish());
    }
    // Sort so that reg − indeg is non-increasing.
    let mut sorted: Vec<(GradedModule, usize)> = others
        .iter()
        .cloned()
        .zip(pds.iter().map(|p| p.unwrap()))
        .collect();
    sorted.sort_by_key(|(o, _)| std::cmp::Reverse(reg(o) - o.indeg()));
    let tables: Vec<BettiTable> = sorted
        .iter()
        .map(|(o, pd)| o.resolution(pd + 1).betti())
        .collect();
    let top: usize = sorted.iter().map(|(_, pd)| pd).sum();
    // T_i = Tor_i(M_1, …, M_s, M), resolving the M_j.
    let mut mods: Vec<GradedModule> = sorted.iter().map(|(o, _)| o.clone()).collect();
    mods.push(m.clone());
    let ts: Vec<AInvariants> = (0..=top)
        .map(|i| tor_multi(&mods, i as i64).map(|t| a_invariants_of(&t)))
        .collect::<Result<_>>()?;
    let tau = ExtInt::max_of(ts.iter().skip(1).map(|t| t.cd));
    let ma = a_invariants(m);
    let d = ma.cd.finite().unwrap_or(-1);
    let t0 = &ts[0];
    b.detail("tau", tau);
    b.detail("reg_s", reg_s);
    let start = match tau {
        Fin(t) => (t - 1).max(0),
        _ => 0,
    };
    for p in start..=d {
        let rhs = ExtInt::max_of(
            (0..=(d - p) as usize).map(|i| ma.get(p + i as i64) + combined_betti(&tables, i)),
        );
        b.le(format!("a_{p}(T_0) <= max(a_(p+i)(M) + b_i)"), t0.get(p), rhs);
    }
    if tau <= Fin(1) {
        for q in 0..=top {
            let r0 = ExtInt::max_of(
                (0..=d.max(0) as usize).map(|i| ma.get(i as i64) + combined_betti(&tables, q + i)),
            );
            b.le(format!("a_0(T_{q}) bound"), ts[q].get(0), r0);
            if q >= 1 {
                let r1 = ExtInt::max_of(
                    (0..=d.max(0) as usize)
                        .map(|i| ma.get(i as i64) + combined_betti(&tables, q + i - 1)),
                );
                b.le(format!("a_1(T_{q}) bound"), ts[q].get(1), r1);
            }
        }
    }
    let pos = b.optional_hyp(
        hyp::REG_S_POSITIVE,
        if reg_s > Fin(0) {
            HypothesisStatus::Verified
        } else {
            HypothesisStatus::Failed
        },
    );
    if pos.usable() {
        let regs: ExtInt = sorted.iter().map(|(o, _)| reg(o)).fold(Fin(0), |a, r| a + r);
        for p in start..=d {
            let c = |l: usize| c_ell(&tables, l);
            let rhs = ExtInt::max_of(
                (0..=(d - p) as usize).map(|l| ma.get(p + l as i64) + c(l) + l as i64),
            );
            b.check_requiring(
                format!("a_{p}(T_0) <= max(a_(p+l)(M) + C_l + l)"),
                t0.get(p),
                super::Relation::Le,
                rhs,
                &[hyp::REG_S_POSITIVE],
            );
            for l in 0..=(d - p) as usize {
                b.check_requiring(
                    format!("C_{l} bound"),
                    c(l),
                    super::Relation::Le,
                    regs + (reg_s - 1).scale(l as i64 / 2),
                    &[hyp::REG_S_POSITIVE],
                );
            }
            let k = match tau {
                Fin(t) => (d - t + 1).max(0) / 2,
                _ => (d + 1).max(0) / 2,
            };
            b.check_requiring(
                format!("reg^{p}(T_0) bound"),
                t0.reg_from(p as usize),
                super::Relation::Le,
                ma.reg_from(p as usize) + regs + (reg_s - 1).scale(k),
                &[hyp::REG_S_POSITIVE],
            );
        }
    }
    Ok(b.finish())
}

/// `a_i(M/(f)M)` against the a-invariants of `M`, forms sorted by
/// descending degree, over a polynomial ring.
pub fn check_koszul_bounds(m: &GradedModule, forms: &[Polynomial]) -> Result<TheoremReport> {
    let mut fs: Vec<Polynomial> = forms.to_vec();
    for f in &fs {
        if f.ring() != m.ring().ambient() || !f.is_homogeneous() || f.degree() < Fin(1) {
            return Err(AlgebraError::InvalidArgument(format!(
                "{f} is not a form of positive degree"
            )));
        }
    }
    fs.sort_by_key(|f| std::cmp::Reverse(f.degree()));
    let input = format!(
        "{} mod ({})",
        describe_module(m),
        fs.iter().map(|f| f.to_string()).collect::<Vec<_>>().join(", ")
    );
    let mut b = ReportBuilder::new("koszul", input);
    b.hyp(
        hyp::POLYNOMIAL_RING,
        if m.ring().is_polynomial() {
            HypothesisStatus::Verified
        } else {
            HypothesisStatus::Failed
        },
    );
    let s = fs.len();
    let degs: Vec<i64> = fs.iter().map(|f| f.degree().finite().unwrap()).collect();
    // d_k for k > s is taken as 1 in the regularity forms.
    let d = |k: usize| if k <= s { degs[k - 1] } else { 1 };
    let dsum = |k: usize| (1..=k).map(d).sum::<i64>();
    let mp = m.quotient_by(&fs);
    let a = a_invariants(m);
    let ap = a_invariants(&mp);
    let delta = a.cd.finite().unwrap_or(-1);
    let delta_p = ap.cd.finite().unwrap_or(-1);
    b.detail("dim", a.cd);
    b.detail("dim_quotient", ap.cd);
    b.detail("a", &a.a);
    b.detail("a_quotient", &ap.a);
    for i in (delta_p - 1).max(0)..=delta.max(delta_p) {
        let kmax = (delta - i).min(s as i64);
        let rhs = ExtInt::max_of(
            (0..=kmax.max(-1)).map(|k| a.get(i + k) + dsum(k as usize)),
        );
        b.le(format!("a_{i}(M') bound"), ap.get(i), rhs);
    }
    let chain = |from: i64| {
        ExtInt::max_of((from..=delta).map(|j| a.get(j) + dsum((j - from) as usize)))
    };
    if delta_p == 1 {
        let mid = chain(0);
        b.le("reg(M') <= max(a_k(M) + d_1+..+d_k)", ap.reg, mid);
        let tail: i64 = (1..=delta.max(0) as usize).map(|k| d(k) - 1).sum();
        b.le("max(...) <= reg(M) + sum(d_i - 1)", mid, a.reg + tail);
    }
    if delta_p == 2 {
        let mid = chain(1) + 1;
        b.le("reg(M'/H0) <= max(a_(k+1)(M) + d_1+..+d_k) + 1", ap.reg_from(1), mid);
        let tail: i64 = (1..=(delta - 1).max(0) as usize).map(|k| d(k) - 1).sum();
        b.le("max(...) + 1 <= reg(M/H0) + sum(d_i - 1)", mid, a.reg_from(1) + tail);
    }
    if s == 0 {
        b.eq("M' = M", ap.reg, a.reg);
    }
    Ok(b.finish())
}

/// The two estimates for `a_p(R/(I+J))` in terms of the resolutions of
/// `R/I` and `R/J`.
pub fn check_koszul_pair(i: &Ideal, j: &Ideal, assertions: &Assertions) -> Result<TheoremReport> {
    i.ring().same_ring(j.ring())?;
    let ring = i.ring();
    let input = format!("{} + {}", describe_ideal(i), describe_ideal(j));
    let mut b = ReportBuilder::new("koszul", input);
    b.hyp(
        hyp::POLYNOMIAL_RING,
        if ring.is_polynomial() {
            HypothesisStatus::Verified
        } else {
            HypothesisStatus::Failed
        },
    );
    let n = ring.nvars() as i64;
    let sum = i.sum(j)?;
    let c_sum = sum.codim();
    let need = ExtInt::min_of([Fin(n - 1), i.codim() + j.codim()]);
    b.hyp(
        hyp::CODIM,
        if c_sum >= need {
            HypothesisStatus::Verified
        } else {
            HypothesisStatus::Failed
        },
    );
    let qi = i.quotient_module();
    let qj = j.quotient_module();
    let (ai, aj) = (a_invariants(&qi), a_invariants(&qj));
    let cm = if sum.dim() <= Fin(1) || (ai.is_cohen_macaulay() && aj.is_cohen_macaulay()) {
        Some(true)
    } else {
        None
    };
    b.hyp(
        hyp::LOCALLY_CM,
        HypothesisStatus::decide(cm, hyp::LOCALLY_CM, assertions),
    );
    let bi = qi.resolution(qi.default_cap()).betti();
    let bj = qj.resolution(qj.default_cap()).betti();
    let a = a_invariants(&sum.quotient_module());
    let tors: Vec<(usize, ExtInt)> = (1..=n as usize)
        .map(|k| tor_multi(&[qi.clone(), qj.clone()], k as i64).map(|t| (k, t.dim())))
        .collect::<Result<_>>()?;
    b.detail("tau", tau_for(&tors));
    b.detail("a", &a.a);
    let top = a.cd.finite().unwrap_or(-1);
    for p in 0..=top {
        let r1 = ExtInt::max_of((0..=n - p).map(|k| bi.b(k as usize) + bj.b((n - p - k) as usize))) - n;
        let r2 = ExtInt::max_of((0..=n - p).map(|k| bi.b(k as usize) + aj.get(p + k)));
        b.le(format!("a_{p}(R/(I+J)) <= symmetric estimate"), a.get(p), r1);
        b.le(format!("a_{p}(R/(I+J)) <= mixed estimate"), a.get(p), r2);
    }
    Ok(b.finish())
}

/// Regularity of an intersection of subschemes of `Proj S`.
pub fn check_intersection_bound(ideals: &[Ideal], assertions: &Assertions) -> Result<TheoremReport> {
    if ideals.is_empty() {
        return Err(AlgebraError::InvalidArgument("no ideals given".into()));
    }
    let ring = ideals[0].ring().clone();
    for i in ideals {
        i.ring().same_ring(&ring)?;
    }
    let input = ideals.iter().map(describe_ideal).collect::<Vec<_>>().join(" ; ");
    let mut b = ReportBuilder::new("intersection", input);
    let mut sum = ideals[0].clone();
    for i in &ideals[1..] {
        sum = sum.sum(i)?;
    }
    let codims: ExtInt = ideals.iter().map(|i| i.codim()).fold(Fin(0), |a, c| a + c);
    let proper = sum.codim() == codims || sum.is_unit();
    b.hyp(
        hyp::PROPER,
        HypothesisStatus::decide(Some(proper), hyp::PROPER, assertions),
    );
    let irreducible = if ring.is_polynomial() { Some(true) } else { None };
    b.hyp(
        hyp::IRREDUCIBLE,
        HypothesisStatus::decide(irreducible, hyp::IRREDUCIBLE, assertions),
    );
    let sing = match sing_locus_dim(&ring, assertions.contains(hyp::EQUIDIMENSIONAL)) {
        Ok(s) => Some(s.dim <= Fin(2)),
        Err(_) => None,
    };
    b.hyp(hyp::SING_LE_1, HypothesisStatus::decide(sing, hyp::SING_LE_1, assertions));
    let ainvs: Vec<AInvariants> = ideals.iter().map(|i| a_invariants(&i.quotient_module())).collect();
    let cm = if ainvs.iter().all(|a| a.is_cohen_macaulay()) {
        Some(true)
    } else {
        None
    };
    b.hyp(hyp::LOCALLY_CM, HypothesisStatus::decide(cm, hyp::LOCALLY_CM, assertions));

    let s_ainv = a_invariants(&GradedModule::ring_module(&ring));
    let reg_scheme_s = s_ainv.scheme_reg();
    let r_prime = ExtInt::max_of([reg_scheme_s - 1, Fin(0)]);
    let dim_proj = s_ainv.cd - 1;
    let regs: Vec<ExtInt> = ainvs.iter().map(|a| a.scheme_reg()).collect();
    let lhs = a_invariants(&sum.quotient_module()).scheme_reg();
    let rhs = regs
        .iter()
        .map(|r| ExtInt::max_of([*r, r_prime]))
        .fold(Fin(0), |a, r| a + r)
        + r_prime.scale(match dim_proj {
            Fin(d) => (d - 1).div_euclid(2),
            _ => 0,
        });
    b.detail("reg_z", lhs);
    b.detail("reg_zi", &regs);
    b.detail("reg_s_scheme", reg_scheme_s);
    b.le("reg Z <= sum max(reg Z_i, r') + floor((dim S - 1)/2) r'", lhs, rhs);

    if reg_scheme_s > Fin(0) && ideals.len() >= 2 {
        b.optional_hyp(hyp::REG_S_POSITIVE, HypothesisStatus::Verified);
        let z0 = &ainvs[0];
        let dim_z0 = z0.cd - 1;
        let mut rest: Vec<ExtInt> = regs[1..].to_vec();
        rest.sort_by(|a, b| b.cmp(a));
        let e = match dim_z0 {
            Fin(d) => (d.max(0) as usize).min(rest.len()),
            _ => 0,
        };
        let lower = rest[..e].iter().all(|r| *r >= reg_scheme_s - 1);
        b.optional_hyp(
            hyp::REG_Z_LOWER,
            if lower {
                HypothesisStatus::Verified
            } else {
                HypothesisStatus::Failed
            },
        );
        let k = match dim_z0 {
            Fin(d) => (d - 1).div_euclid(2),
            _ => 0,
        };
        let rhs2 = regs[0] + rest[..e].iter().fold(Fin(0), |a, r| a + *r) + (reg_scheme_s - 1).scale(k);
        b.check_requiring(
            "reg Z <= reg Z_0 + sum reg Z_i + floor((dim Z_0 - 1)/2)(reg S - 1)",
            lhs,
            super::Relation::Le,
            rhs2,
            &[hyp::REG_S_POSITIVE, hyp::REG_Z_LOWER],
        );
    }
    Ok(b.finish())
}
