// SPDX-License-Identifier: Apache-2.0

//! Criteria for a cubic congruence `x^3 + a1 x^2 + a2 x + a3 = 0 (mod p)` to
//! have three solutions, expressed through binary quadratic forms of
//! discriminant `4D`, cubic Jacobi symbols over the Eisenstein integers and
//! third-order recurrences.
//!
//! The layers build on each other:
//!
//! - [`eisenstein`]: exact arithmetic in `Z[w]`, `w^2 + w + 1 = 0`.
//! - [`symbol`]: the cubic Jacobi symbol via Eisenstein reciprocity, and an
//!   exponentiation oracle.
//! - [`quadform`]: forms `(a, 2b, c)`, reduction, class groups, composition.
//! - [`character`]: the cubic character on `H(4D)` and its kernel.
//! - [`sequences`]: `u_n`, `s_n`, Lucas `U_n`, `V_n` modulo a prime.
//! - [`criteria`]: root counting and the equivalent three-root statements.

pub mod arith;
pub mod character;
pub mod criteria;
pub mod eisenstein;
pub mod quadform;
pub mod sequences;
pub mod symbol;

pub use character::{CubicCharacter, CubicData, Subgroup};
pub use criteria::{CriterionReport, CubicCriteria, Statement};
pub use eisenstein::{EisensteinInt, PrimaryDecomposition};
pub use quadform::{ClassGroup, FormClass, QuadForm};
pub use symbol::{cubic_jacobi, residue_character_oracle, SymbolValue};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("zero is not allowed here")]
    ZeroInput,
    #[error("symbol undefined: denominator divisible by 1-w")]
    SymbolUndefined,
    #[error("denominator {0} is not congruent to +-2 mod 3")]
    NonPrimaryDenominator(String),
    #[error("inadmissible modulus for the residue character: {0}")]
    InadmissibleModulus(String),
    #[error("{0} is not an odd prime")]
    NotPrime(u64),
    #[error("{n} is a quadratic nonresidue mod {p}")]
    NonResidue { n: u64, p: u64 },
    #[error("form {0} is not primitive")]
    ImprimitiveForm(String),
    #[error("form {0} is not positive definite")]
    IndefiniteForm(String),
    #[error("discriminant mismatch: {0} vs {1}")]
    DiscriminantMismatch(i64, i64),
    #[error("no coprime representative within radius {0}")]
    RadiusExceeded(u64),
    #[error("p = {p} not represented by discriminant {disc}")]
    NotRepresented { p: u64, disc: i64 },
    #[error("degenerate cubic")]
    DegenerateCubic,
    #[error("indefinite discriminant out of scope")]
    IndefiniteDiscriminant,
    #[error("discriminant too large to enumerate: {0}")]
    DiscriminantTooLarge(String),
    #[error("invalid character parameters: {0}")]
    InvalidCharacter(String),
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
}

pub type Result<T> = std::result::Result<T, Error>;
