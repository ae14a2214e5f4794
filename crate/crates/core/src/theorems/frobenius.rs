//! Regularity of Frobenius powers.

use crate::error::Result;
use crate::extint::ExtInt;
use crate::functors::{frobenius_power, frobenius_q, frobenius_tor, sing_locus_dim, sing_support_dim};
use crate::ideal::Ideal;
use crate::invariants::{a_invariants, a_invariants_of, ring_regularity};
use crate::module::GradedModule;
use crate::poly::Polynomial;

use super::{describe_module, hyp, Assertions, HypothesisStatus, ReportBuilder, TheoremReport};

use ExtInt::Fin;

/// One report per `e = 0 … e_max`.
pub fn check_frobenius_bound(
    m: &GradedModule,
    e_max: u32,
    assertions: &Assertions,
) -> Result<Vec<TheoremReport>> {
    let ring = m.ring().clone();
    frobenius_q(&ring, 0)?;
    let s_ainv = a_invariants(&GradedModule::ring_module(&ring));
    let dim_s = s_ainv.cd.finite().unwrap_or(0).max(0) as usize;
    let reg_s = ring_regularity(&ring);
    let regular = reg_s == Fin(0);
    let sing = sing_locus_dim(&ring, assertions.contains(hyp::EQUIDIMENSIONAL)).ok();
    let meets = sing
        .as_ref()
        .filter(|s| !s.inseparability_caveat)
        .map(|s| sing_support_dim(m, s) <= Fin(1));
    let res = m.resolution(dim_s);
    let betti = res.betti();
    let reg_m = a_invariants(m).reg;
    let cyclic_gens: Option<Vec<Polynomial>> = if m.presentation().target == [0] {
        let amb = ring.ambient();
        Some(m.presentation().cols.iter().map(|c| c.component(amb, 0)).collect())
    } else {
        None
    };
    let mut out = Vec::new();
    for e in 0..=e_max {
        let q = frobenius_q(&ring, e)? as i64;
        let mut b = ReportBuilder::new("frobenius", format!("{} e={e}", describe_module(m)));
        b.hyp(hyp::CHAR_P, HypothesisStatus::Verified);
        b.hyp(
            hyp::SING_SUPP_LE_1,
            HypothesisStatus::decide(meets, hyp::SING_SUPP_LE_1, assertions),
        );
        let fm = frobenius_power(m, e)?;
        let fa = a_invariants(&fm);
        let lhs = fa.reg;
        let bq = |i: usize| betti.b(i).scale(q);
        let b1 = ExtInt::max_of((0..=dim_s).flat_map(|i| {
            (i..=dim_s).map(move |j| (i, j))
        }).map(|(i, j)| bq(i) + s_ainv.get(j as i64) + (j as i64 - i as i64)));
        let b2 = reg_s + ExtInt::max_of((0..=dim_s).map(|i| bq(i) - i as i64));
        let b3 = if regular {
            (reg_m + dim_s as i64).scale(q)
        } else {
            reg_s + (reg_m + (reg_s - 1).scale(dim_s as i64 / 2) + dim_s as i64).scale(q)
        };
        let bk = reg_s + ExtInt::max_of((0..=dim_s).map(bq));
        b.detail("q", q);
        b.detail("reg", lhs);
        b.detail("reg_s", reg_s);
        b.le("reg(F^e M) <= max(q b_i + a_j(S) + j - i)", lhs, b1);
        b.le("max(q b_i + a_j(S) + j - i) <= reg S + max(q b_i - i)", b1, b2);
        b.le("reg(F^e M) <= corollary bound", lhs, b3);
        b.le("reg(F^e M) <= reg S + q max b_i", lhs, bk);
        for l in 0..=dim_s {
            let rhs = ExtInt::max_of(
                (0..=dim_s - l).map(|i| s_ainv.get((i + l) as i64) + bq(i)),
            );
            b.le(format!("a_{l}(F^e M) bound"), fa.get(l as i64), rhs);
        }
        if let Some(gens) = &cyclic_gens {
            let i = Ideal::new(&ring, gens.clone())?;
            let br = a_invariants(&i.bracket_power(q as u64)?.quotient_module()).reg;
            b.eq("reg(S/I^[q]) = reg(F^e(S/I))", br, lhs);
        }
        // Regularity of Tor_i(M, S^[e]) is tabulated only.
        let tors: Vec<ExtInt> = (1..=dim_s)
            .map(|i| frobenius_tor(m, e, i).map(|t| a_invariants_of(&t).reg))
            .collect::<Result<_>>()?;
        b.detail("reg_frobenius_tor", tors);
        out.push(b.finish());
    }
    Ok(out)
}
