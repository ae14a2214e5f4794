//! Betti numbers over `S = R/J` against Betti numbers over `R`.

use serde::{Deserialize, Serialize};

use crate::extint::ExtInt;
use crate::invariants::{a_invariants, ring_regularity};
use crate::module::GradedModule;
use crate::resolution::BettiTable;

use super::{describe_module, hyp, HypothesisStatus, ReportBuilder, TheoremReport};

use ExtInt::{Fin, NegInf};

/// `E_p^R(S)` and the partial regularities used by the transfer bounds, for
/// `p, i ≤ i_max` (one more entry for `reg_i^R(S)`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiTransferData {
    pub e: Vec<ExtInt>,
    pub reg_r_s: Vec<ExtInt>,
    pub reg_s_m: Vec<ExtInt>,
    pub reg_r_m: Vec<ExtInt>,
    pub b_s_m: Vec<ExtInt>,
    pub b_r_m: Vec<ExtInt>,
    /// The resolution over `S` stopped at `i_max` with more terms to come.
    pub truncated: bool,
}

fn upto(t: &BettiTable, i: usize) -> ExtInt {
    t.reg_upto(i)
}

pub fn betti_transfer_data(m: &GradedModule, i_max: usize) -> BettiTransferData {
    let ring = m.ring();
    let amb = ring.ambient_ring();
    let s_over_r = GradedModule::cyclic(&amb, ring.defining_ideal()).unwrap();
    let rs = s_over_r.resolution(s_over_r.default_cap()).betti();
    let mr = m.restrict_to_ambient();
    let rm = mr.resolution(mr.default_cap()).betti();
    let res = m.resolution(i_max);
    let sm = res.betti();
    // E_p over compositions of p into parts j ≥ 2, each adding b_{j−1}^R(S).
    let mut e = vec![NegInf; i_max + 1];
    for p in 0..=i_max {
        if p < 2 {
            e[p] = Fin(0);
            continue;
        }
        let mut best = NegInf;
        for j in 2..=p {
            let rest = p - j;
            if rest == 1 {
                continue;
            }
            let tail = if rest == 0 { Fin(0) } else { e[rest] };
            best = best.max(rs.b(j - 1) + tail);
        }
        e[p] = best;
    }
    BettiTransferData {
        e,
        reg_r_s: (0..=i_max + 1).map(|i| upto(&rs, i)).collect(),
        reg_s_m: (0..=i_max).map(|i| upto(&sm, i)).collect(),
        reg_r_m: (0..=i_max).map(|i| upto(&rm, i)).collect(),
        b_s_m: (0..=i_max).map(|i| sm.b(i)).collect(),
        b_r_m: (0..=i_max).map(|i| rm.b(i)).collect(),
        truncated: res.truncated,
    }
}

fn get(v: &[ExtInt], i: i64) -> ExtInt {
    if i < 0 {
        NegInf
    } else {
        v[i as usize]
    }
}

/// The transfer bounds for `i ≤ i_max`.
pub fn check_betti_transfer(m: &GradedModule, i_max: usize) -> TheoremReport {
    let mut r = ReportBuilder::new("betti-transfer", describe_module(m));
    let data = betti_transfer_data(m, i_max);
    let reg_s = ring_regularity(m.ring());
    let cyclic = m.presentation().target == [0] && !m.ring().is_polynomial();
    for i in 0..=i_max {
        let ii = i as i64;
        let lower = -get(&data.reg_r_s, ii);
        let diff_l = get(&data.reg_s_m, ii) - get(&data.reg_r_m, ii);
        let upper = ExtInt::max_of([Fin(0), (get(&data.reg_r_s, ii - 1) - 1).scale(ii / 2)]);
        r.le(format!("-reg_{i}^R(S) <= reg_{i}^S(M) - reg_{i}^R(M)"), lower, diff_l);
        r.le(format!("reg_{i}^S(M) - reg_{i}^R(M) <= upper_{i}"), diff_l, upper);

        let bs = data.b_s_m[i] - ii;
        let l1 = ExtInt::max_of((0..=i).map(|p| data.b_r_m[i - p] + data.e[p])) - ii;
        let l2 = ExtInt::max_of((0..=i).map(|p| {
            let inner = ExtInt::max_of(
                (0..=p / 2).map(|l| (get(&data.reg_r_s, (p - 2 * l + 1) as i64) - 1).scale(l as i64)),
            );
            data.b_r_m[i - p] + p as i64 + inner
        })) - ii;
        let l3 = ExtInt::max_of((0..=i).map(|p| {
            let c = ExtInt::max_of([Fin(0), get(&data.reg_r_s, p as i64 - 1) - 1]);
            data.reg_r_m[i - p] + c.scale(p as i64 / 2)
        }));
        r.le(format!("b_{i}^S(M) - {i} <= E-bound"), bs, l1);
        r.le(format!("E-bound_{i} <= reg-bound"), l1, l2);
        r.le(format!("reg-bound_{i} <= partial-reg bound"), l2, l3);

        if cyclic && i > 0 {
            let rhs = ExtInt::max_of([get(&data.reg_r_m, ii), get(&data.reg_r_s, ii - 1) - 1])
                + (get(&data.reg_r_s, ii - 2) - 1).scale((ii - 1) / 2);
            r.le(format!("reg_{i}^S(S/I) cyclic bound"), get(&data.reg_s_m, ii), rhs);
        }
    }
    let one = r.optional_hyp(
        hyp::REG_S_ONE,
        if reg_s == Fin(1) {
            HypothesisStatus::Verified
        } else {
            HypothesisStatus::Failed
        },
    );
    if one.usable() {
        for j in 0..=i_max {
            let (s, rr) = (data.reg_s_m[j], data.reg_r_m[j]);
            r.check_requiring(
                format!("reg_{j}^R(M) - 1 <= reg_{j}^S(M)"),
                rr - 1,
                super::Relation::Le,
                s,
                &[hyp::REG_S_ONE],
            );
            r.check_requiring(
                format!("reg_{j}^S(M) <= reg_{j}^R(M)"),
                s,
                super::Relation::Le,
                rr,
                &[hyp::REG_S_ONE],
            );
            r.check_requiring(
                format!("b_{j}^S(M) <= reg(M) + {j}"),
                data.b_s_m[j],
                super::Relation::Le,
                a_invariants(m).reg + j as i64,
                &[hyp::REG_S_ONE],
            );
        }
    }
    r.detail("reg_s", reg_s);
    r.detail("data", &data);
    r.finish()
}

/// `reg_i^S(M) ≤ max_{p ≤ d}(a_p + p + reg_{i+p}^S(k)) ≤ reg M + reg_{d+i}^S(k)`.
pub fn check_estbetti(m: &GradedModule, i_max: usize) -> TheoremReport {
    let mut r = ReportBuilder::new("estbetti", describe_module(m));
    let a = a_invariants(m);
    let d = a.cd.finite().unwrap_or(0).max(0) as usize;
    let k = GradedModule::residue_field(m.ring());
    let kb = k.resolution(d + i_max).betti();
    let mb = m.resolution(i_max).betti();
    for i in 0..=i_max {
        let lhs = mb.reg_upto(i);
        let mid = ExtInt::max_of((0..=d).map(|p| a.get(p as i64) + p as i64 + kb.reg_upto(i + p)));
        let top = a.reg + kb.reg_upto(d + i);
        r.le(format!("reg_{i}^S(M) <= max(a_p + p + reg_(i+p)^S(k))"), lhs, mid);
        r.le(format!("max(...) <= reg(M) + reg_(d+{i})^S(k)"), mid, top);
    }
    r.finish()
}
