//! Polynomials whose integer (or rational) values meet the perfect powers
//! in exactly a prescribed finite set, together with exact, bounded
//! verification: sandwich certificates, exhaustive scans and box searches.
//!
//! * [`arith`]: integer roots and perfect-power detection.
//! * [`poly`]: dense polynomials over `BigInt` and over rationals.
//! * [`construct`]: the Runge-style, Fermat-style and Catalan-style families.
//! * [`verify`]: scans, certificates and counterexample generators.
//! * [`cli`]: the `revdioph` command-line front end.

pub mod arith;
pub mod cli;
pub mod construct;
pub mod json;
pub mod poly;
pub mod verify;

pub use arith::{floor_nth_root, is_nth_power, perfect_power_decompose, PowerWitness};
pub use construct::{
    build_fermat, build_fermat_rational, build_mihailescu, build_runge, validate_target,
    ConstructError, FixedExponentTarget, GeneralTarget, Target, TargetSpec,
};
pub use poly::{evaluate_rat, IntPolynomial, Polynomial, RatPolynomial, Rational};
