//! Local cohomology of the module of Kähler differentials of a surface.

use crate::extint::ExtInt;
use crate::functors::{kahler_module, sing_locus_dim};
use crate::ideal::Ideal;
use crate::invariants::a_invariants;
use crate::module::GradedModule;
use crate::ring::QuotientRing;

use super::{hyp, powers::generic_ci, Assertions, HypothesisStatus, Relation, ReportBuilder, TheoremReport};

use ExtInt::{Fin, NegInf};

/// `B = R/I` with `dim B = 3`.
pub fn check_kahler_bounds(bring: &QuotientRing, assertions: &Assertions) -> TheoremReport {
    let mut r = ReportBuilder::new("kahler", bring.to_string());
    let bm = GradedModule::ring_module(bring);
    let a = a_invariants(&bm);
    let dim3 = a.cd == Fin(3);
    r.hyp(
        hyp::DIM_3,
        if dim3 {
            HypothesisStatus::Verified
        } else {
            HypothesisStatus::Failed
        },
    );
    let amb = bring.ambient_ring();
    let i = Ideal::new(&amb, bring.defining_ideal().to_vec()).unwrap();
    let gci = if dim3 { generic_ci(&i, 3) } else { None };
    r.hyp(hyp::GENERIC_CI, HypothesisStatus::decide(gci, hyp::GENERIC_CI, assertions));
    if !r.gates_open() {
        return r.finish();
    }
    let sing = sing_locus_dim(bring, assertions.contains(hyp::EQUIDIMENSIONAL))
        .ok()
        .filter(|s| !s.inseparability_caveat);
    let sdim = sing.as_ref().map(|s| s.dim);
    let is_ci = i.minimal_generators().len() as i64 == i.codim().finite().unwrap_or(-1);
    r.optional_hyp(
        hyp::GENERICALLY_REDUCED,
        HypothesisStatus::decide(
            sdim.map(|d| d <= Fin(2)).filter(|v| *v),
            hyp::GENERICALLY_REDUCED,
            assertions,
        ),
    );
    r.optional_hyp(
        hyp::REDUCED_CI_OFF_POINTS,
        HypothesisStatus::decide(
            sdim.map(|d| is_ci && d <= Fin(1)).filter(|v| *v),
            hyp::REDUCED_CI_OFF_POINTS,
            assertions,
        ),
    );
    let om = a_invariants(&kahler_module(bring).omega);
    let res = GradedModule::cyclic(&amb, &i.minimal_generators()).unwrap();
    let betti = res.resolution(res.default_cap()).betti();
    let b = |k: usize| betti.b(k + 1);
    let mut d = i.minimalized().generator_degrees();
    d.sort_by(|x, y| y.cmp(x));
    let dk = |k: usize| d.get(k - 1).map_or(NegInf, |v| Fin(*v));
    let ai = |k: i64| a.get(k);
    r.detail("a", &a.a);
    r.detail("a_omega", &om.a);
    r.le("a_3(Omega) <= a_3 + 1", om.get(3), ai(3) + 1);
    r.le("a_2(Omega) <= max(a_2 + 1, a_3 + b_0)", om.get(2), ExtInt::max_of([ai(2) + 1, ai(3) + b(0)]));
    r.check_requiring(
        "a_1(Omega) <= max(a_1 + 1, a_2 + b_0, a_3 + b_1)",
        om.get(1),
        Relation::Le,
        ExtInt::max_of([ai(1) + 1, ai(2) + b(0), ai(3) + b(1)]),
        &[hyp::GENERICALLY_REDUCED],
    );
    r.check_requiring(
        "a_0(Omega) <= max(a_0 + 1, a_1 + b_0, a_2 + b_1, a_3 + b_2, a_3 + d_1 + d_2)",
        om.get(0),
        Relation::Le,
        ExtInt::max_of([ai(0) + 1, ai(1) + b(0), ai(2) + b(1), ai(3) + b(2), ai(3) + dk(1) + dk(2)]),
        &[hyp::REDUCED_CI_OFF_POINTS],
    );
    r.finish()
}
