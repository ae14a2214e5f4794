//! Checkers for regularity bounds. Each computes both sides of every
//! inequality it covers, records how each hypothesis was settled and emits a
//! [`TheoremReport`].

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use crate::extint::ExtInt;
use crate::ideal::Ideal;
use crate::module::GradedModule;
use crate::monomial::Monomial;

mod frobenius;
mod homological;
mod kahler;
mod powers;
mod transfer;

#[cfg(test)]
mod examples;

pub use frobenius::check_frobenius_bound;
pub use homological::{
    check_intersection_bound, check_koszul_bounds, check_koszul_pair, check_nonacyclic,
    check_regfpd, check_regtor, check_regtorgen, check_rigidity_and_proper, tau_for,
};
pub use kahler::check_kahler_bounds;
pub use powers::{check_power_bound_cd1, check_power_bound_dim2, check_power_kernel, generic_ci};
pub use transfer::{betti_transfer_data, check_betti_transfer, check_estbetti, BettiTransferData};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum HypothesisStatus {
    Verified,
    Asserted,
    Failed,
    /// Not decidable here and not asserted by the caller.
    Unverified,
}

impl HypothesisStatus {
    /// Computed truth value, falling back to the caller's assertions.
    pub fn decide(computed: Option<bool>, name: &str, assertions: &Assertions) -> Self {
        match computed {
            Some(true) => HypothesisStatus::Verified,
            Some(false) => HypothesisStatus::Failed,
            None if assertions.contains(name) => HypothesisStatus::Asserted,
            None => HypothesisStatus::Unverified,
        }
    }

    pub fn usable(self) -> bool {
        matches!(self, HypothesisStatus::Verified | HypothesisStatus::Asserted)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Hypothesis {
    pub name: String,
    pub status: HypothesisStatus,
    /// Optional hypotheses only gate the checks that name them.
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub optional: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Relation {
    #[serde(rename = "<=")]
    Le,
    #[serde(rename = "=")]
    Eq,
}

impl Relation {
    pub fn holds(self, lhs: ExtInt, rhs: ExtInt) -> bool {
        match self {
            Relation::Le => lhs <= rhs,
            Relation::Eq => lhs == rhs,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Holds,
    Violated,
    Vacuous,
    Truncated,
    CounterexampleCandidate,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub label: String,
    pub lhs: ExtInt,
    pub rhs: ExtInt,
    pub relation: Relation,
    pub holds: bool,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub requires: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TheoremReport {
    pub theorem: String,
    pub input: String,
    pub hypotheses: Vec<Hypothesis>,
    pub lhs: Option<ExtInt>,
    pub rhs: Option<ExtInt>,
    pub relation: Option<Relation>,
    pub verdict: Verdict,
    pub checks: Vec<Check>,
    pub details: Value,
}

impl TheoremReport {
    pub fn failed_checks(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.holds).collect()
    }

    pub fn hypothesis(&self, name: &str) -> Option<HypothesisStatus> {
        self.hypotheses.iter().find(|h| h.name == name).map(|h| h.status)
    }
}

/// Names of hypotheses the caller asserts to hold.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Assertions(pub BTreeSet<String>);

impl Assertions {
    pub fn none() -> Self {
        Assertions::default()
    }

    pub fn of<I: IntoIterator<Item = S>, S: Into<String>>(names: I) -> Self {
        Assertions(names.into_iter().map(Into::into).collect())
    }

    pub fn contains(&self, name: &str) -> bool {
        self.0.contains(name)
    }
}

pub(crate) struct ReportBuilder {
    theorem: String,
    input: String,
    hypotheses: Vec<Hypothesis>,
    checks: Vec<Check>,
    details: Map<String, Value>,
    truncated: bool,
}

impl ReportBuilder {
    pub fn new(theorem: &str, input: impl Into<String>) -> Self {
        ReportBuilder {
            theorem: theorem.to_string(),
            input: input.into(),
            hypotheses: Vec::new(),
            checks: Vec::new(),
            details: Map::new(),
            truncated: false,
        }
    }

    pub fn hyp(&mut self, name: &str, status: HypothesisStatus) -> HypothesisStatus {
        self.hypotheses.push(Hypothesis {
            name: name.to_string(),
            status,
            optional: false,
        });
        status
    }

    pub fn optional_hyp(&mut self, name: &str, status: HypothesisStatus) -> HypothesisStatus {
        self.hypotheses.push(Hypothesis {
            name: name.to_string(),
            status,
            optional: true,
        });
        status
    }

    /// Whether every required hypothesis so far is verified or asserted.
    pub fn gates_open(&self) -> bool {
        self.hypotheses
            .iter()
            .filter(|h| !h.optional)
            .all(|h| h.status.usable())
    }

    pub fn check(&mut self, label: impl Into<String>, lhs: ExtInt, rel: Relation, rhs: ExtInt) {
        self.check_requiring(label, lhs, rel, rhs, &[]);
    }

    pub fn le(&mut self, label: impl Into<String>, lhs: ExtInt, rhs: ExtInt) {
        self.check(label, lhs, Relation::Le, rhs);
    }

    pub fn eq(&mut self, label: impl Into<String>, lhs: ExtInt, rhs: ExtInt) {
        self.check(label, lhs, Relation::Eq, rhs);
    }

    pub fn check_requiring(
        &mut self,
        label: impl Into<String>,
        lhs: ExtInt,
        rel: Relation,
        rhs: ExtInt,
        requires: &[&str],
    ) {
        self.checks.push(Check {
            label: label.into(),
            lhs,
            rhs,
            relation: rel,
            holds: rel.holds(lhs, rhs),
            requires: requires.iter().map(|s| s.to_string()).collect(),
        });
    }

    pub fn detail(&mut self, key: &str, value: impl Serialize) {
        self.details
            .insert(key.to_string(), serde_json::to_value(value).unwrap_or(Value::Null));
    }

    pub fn truncated(&mut self, t: bool) {
        self.truncated |= t;
    }

    fn status_of(&self, name: &str) -> HypothesisStatus {
        self.hypotheses
            .iter()
            .find(|h| h.name == name)
            .map(|h| h.status)
            .unwrap_or(HypothesisStatus::Unverified)
    }

    fn active(&self, c: &Check) -> bool {
        c.requires.iter().all(|r| self.status_of(r).usable())
    }

    pub fn finish(self) -> TheoremReport {
        let active: Vec<&Check> = self.checks.iter().filter(|c| self.active(c)).collect();
        let verdict = if !self.gates_open() || active.is_empty() {
            Verdict::Vacuous
        } else if self.truncated {
            Verdict::Truncated
        } else if active.iter().all(|c| c.holds) {
            Verdict::Holds
        } else {
            let core_verified = self
                .hypotheses
                .iter()
                .filter(|h| !h.optional)
                .all(|h| h.status == HypothesisStatus::Verified);
            let hard = active.iter().any(|c| {
                !c.holds
                    && core_verified
                    && c.requires
                        .iter()
                        .all(|r| self.status_of(r) == HypothesisStatus::Verified)
            });
            if hard {
                Verdict::Violated
            } else {
                Verdict::CounterexampleCandidate
            }
        };
        let head = active.first().copied();
        TheoremReport {
            theorem: self.theorem.clone(),
            input: self.input.clone(),
            hypotheses: self.hypotheses.clone(),
            lhs: head.map(|c| c.lhs),
            rhs: head.map(|c| c.rhs),
            relation: head.map(|c| c.relation),
            verdict,
            checks: self.checks.clone(),
            details: Value::Object(self.details.clone()),
        }
    }
}

/// Short description of a module for report headers.
pub fn describe_module(m: &GradedModule) -> String {
    let p = m.presentation();
    if p.target == [0] {
        let gens: Vec<String> = p.cols.iter().map(|c| c.component(m.ring().ambient(), 0).to_string()).collect();
        format!("{}/({})", ring_name(m), gens.join(", "))
    } else {
        format!("coker {} over {}", p, m.ring())
    }
}

fn ring_name(m: &GradedModule) -> String {
    m.ring().to_string()
}

pub fn describe_ideal(i: &Ideal) -> String {
    format!("({}) in {}", i.to_strings().join(", "), i.ring())
}

/// Monomial generators as exponent vectors, if every generator is a monomial.
pub(crate) fn monomial_gens(i: &Ideal) -> Option<Vec<Monomial>> {
    if !i.is_monomial() {
        return None;
    }
    Some(
        i.gens()
            .iter()
            .map(|g| g.leading_monomial().unwrap().clone())
            .collect(),
    )
}

/// Standard names for hypotheses that callers may assert.
pub mod hyp {
    pub const FINITE_PD: &str = "finite-projective-dimension";
    pub const TOR_DIM_LE_1: &str = "tor-dimension-at-most-one";
    pub const SING_SUPP_LE_1: &str = "sing-supp-dimension-at-most-one";
    pub const EQUIDIMENSIONAL: &str = "equidimensional";
    pub const CD_LE_1: &str = "cd-at-most-one";
    pub const DIM_2: &str = "dimension-two";
    pub const DIM_3: &str = "dimension-three";
    pub const GENERIC_CI: &str = "generic-complete-intersection";
    pub const GENERICALLY_REDUCED: &str = "generically-reduced";
    pub const REDUCED_CI_OFF_POINTS: &str = "reduced-ci-outside-finitely-many-points";
    pub const POLYNOMIAL_RING: &str = "polynomial-ring";
    pub const CHAR_P: &str = "prime-characteristic";
    pub const PROPER: &str = "proper-intersection";
    pub const LOCALLY_CM: &str = "locally-cohen-macaulay";
    pub const IRREDUCIBLE: &str = "irreducible";
    pub const SING_LE_1: &str = "sing-dimension-at-most-one";
    pub const REG_S_POSITIVE: &str = "reg-s-positive";
    pub const REG_Z_LOWER: &str = "reg-zi-at-least-reg-s-minus-one";
    pub const D1: &str = "d1-condition";
    pub const CD_H_LE_1: &str = "higher-homology-cd-at-most-one";
    pub const CODIM: &str = "codimension-condition";
    pub const REG_S_ONE: &str = "reg-s-equals-one";

    pub const ALL: &[&str] = &[
        FINITE_PD,
        TOR_DIM_LE_1,
        SING_SUPP_LE_1,
        EQUIDIMENSIONAL,
        CD_LE_1,
        DIM_2,
        DIM_3,
        GENERIC_CI,
        GENERICALLY_REDUCED,
        REDUCED_CI_OFF_POINTS,
        POLYNOMIAL_RING,
        CHAR_P,
        PROPER,
        LOCALLY_CM,
        IRREDUCIBLE,
        SING_LE_1,
        REG_S_POSITIVE,
        REG_Z_LOWER,
        D1,
        CD_H_LE_1,
        CODIM,
        REG_S_ONE,
    ];
}
