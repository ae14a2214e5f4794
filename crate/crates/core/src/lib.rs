//! Graded commutative algebra over prime fields and the rationals: Gröbner
//! bases, minimal free resolutions, multiple Tor, a-invariants and
//! Castelnuovo–Mumford regularity, with checkers for regularity bounds.

pub mod complex;
pub mod error;
pub mod extint;
pub mod field;
pub mod functors;
pub mod groebner;
pub mod hilbert;
pub mod ideal;
pub mod invariants;
pub mod matrix;
pub mod module;
pub mod monomial;
pub mod poly;
pub mod resolution;
pub mod ring;
pub mod theorems;
pub mod tor;
pub mod vector;

pub use complex::ChainComplex;
pub use error::{AlgebraError, Result};
pub use extint::ExtInt;
pub use field::{Coeff, CoefficientField};
pub use groebner::GbBuilder;
pub use hilbert::{HilbertData, HilbertSeries};
pub use ideal::Ideal;
pub use invariants::{a_invariants, regularity, AInvariants, ComplexBoundData, RegRoute};
pub use matrix::{FreeModule, GradedMatrix};
pub use module::{GradedModule, Subquotient};
pub use monomial::Monomial;
pub use poly::{PolyRing, Polynomial};
pub use resolution::{BettiTable, Resolution};
pub use ring::QuotientRing;
pub use theorems::{Assertions, TheoremReport, Verdict};
pub use vector::Vector;
