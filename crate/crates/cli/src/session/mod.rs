//! Session files: declarations of rings, ideals and modules followed by
//! commands, one `;`-terminated statement at a time.
//!
//! ```text
//! ring R = poly(GF(5), 3);
//! ring S = R/(x0^2 + x1^2 + x2^2);
//! ideal I = (x0, x1);
//! module M = S/I;
//! cmd betti M --cap 4;
//! cmd verify frobenius S M --emax 2;
//! ```

use std::fmt;

use cmreg::{GradedModule, Ideal, QuotientRing};

mod parse;
mod run;

pub use parse::parse_session;
pub use run::{run_session, RunOptions, SessionOutcome};

/// A position in the session text, 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Location {
    pub line: usize,
    pub col: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub at: Location,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, col {}: {}", self.at.line, self.at.col, self.message)
    }
}

impl std::error::Error for ParseError {}

/// All errors found in one pass over a session.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseErrors(pub Vec<ParseError>);

impl fmt::Display for ParseErrors {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, e) in self.0.iter().enumerate() {
            if k > 0 {
                writeln!(f)?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

impl std::error::Error for ParseErrors {}

#[derive(Clone, Debug)]
pub enum Object {
    Ring(QuotientRing),
    Ideal(Ideal),
    Module(GradedModule),
}

impl Object {
    pub fn kind(&self) -> &'static str {
        match self {
            Object::Ring(_) => "ring",
            Object::Ideal(_) => "ideal",
            Object::Module(_) => "module",
        }
    }
}

/// A resolved command argument together with the text it came from.
#[derive(Clone, Debug)]
pub struct Arg {
    pub text: String,
    pub object: Object,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Flags {
    pub window: Option<(i64, i64)>,
    pub cap: Option<usize>,
    pub assertions: Vec<String>,
    pub emax: Option<u32>,
    pub max: Option<u32>,
    pub index: Option<usize>,
    pub count: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CommandKind {
    Betti,
    Reg,
    Ainv,
    Tor,
    Frobenius,
    Power,
    Saturate,
    Kahler,
    Verify(Theorem),
    Fuzz(Theorem),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Theorem {
    Regfpd,
    Regtor,
    Rigidity,
    Regtorgen,
    Nonacyclic,
    Koszul,
    KoszulPair,
    Intersection,
    Frobenius,
    PowerCd1,
    PowerDim2,
    PowerKernel,
    Kahler,
    BettiTransfer,
    Estbetti,
}

impl Theorem {
    pub const ALL: [Theorem; 15] = [
        Theorem::Regfpd,
        Theorem::Regtor,
        Theorem::Rigidity,
        Theorem::Regtorgen,
        Theorem::Nonacyclic,
        Theorem::Koszul,
        Theorem::KoszulPair,
        Theorem::Intersection,
        Theorem::Frobenius,
        Theorem::PowerCd1,
        Theorem::PowerDim2,
        Theorem::PowerKernel,
        Theorem::Kahler,
        Theorem::BettiTransfer,
        Theorem::Estbetti,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Theorem::Regfpd => "regfpd",
            Theorem::Regtor => "regtor",
            Theorem::Rigidity => "rigidity",
            Theorem::Regtorgen => "regtorgen",
            Theorem::Nonacyclic => "nonacyclic",
            Theorem::Koszul => "koszul",
            Theorem::KoszulPair => "koszul-pair",
            Theorem::Intersection => "intersection",
            Theorem::Frobenius => "frobenius",
            Theorem::PowerCd1 => "power-cd1",
            Theorem::PowerDim2 => "power-dim2",
            Theorem::PowerKernel => "power-kernel",
            Theorem::Kahler => "kahler",
            Theorem::BettiTransfer => "betti-transfer",
            Theorem::Estbetti => "estbetti",
        }
    }

    pub fn from_id(s: &str) -> Option<Theorem> {
        Theorem::ALL.into_iter().find(|t| t.id() == s)
    }
}

#[derive(Clone, Debug)]
pub struct Command {
    pub at: Location,
    /// The statement as written, without the leading `cmd`.
    pub text: String,
    pub kind: CommandKind,
    pub args: Vec<Arg>,
    pub flags: Flags,
}

/// A validated session.
#[derive(Clone, Debug, Default)]
pub struct SessionSpec {
    pub seed: u64,
    /// Declared objects in declaration order.
    pub objects: Vec<(String, Object)>,
    pub commands: Vec<Command>,
}

impl SessionSpec {
    pub fn get(&self, name: &str) -> Option<&Object> {
        self.objects.iter().find(|(n, _)| n == name).map(|(_, o)| o)
    }
}
