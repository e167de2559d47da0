//! Exact, bounded checks of the constructions: scans for perfect-power
//! values, sandwich certificates, box searches and the counterexample
//! families that explain why the Fermat-style construction needs `m >= 3`.

mod catalan;
mod fermat_box;
mod pell;
mod sandwich;
mod scan;

use num_bigint::BigInt;
use thiserror::Error;

pub use catalan::{catalan_desk_check, coprimality_check, CatalanWitness};
pub use fermat_box::{check_fermat_box, FermatTriple};
pub use pell::{pell_fundamental, pythagorean_family, PellSolution, PythagoreanTriple};
pub use sandwich::{
    certify_helper_inequalities, certify_sandwich, HelperInequalities, SandwichCertificate,
};
pub use scan::{
    scan_integers, scan_integers_parallel, scan_rationals_by_height,
    scan_rationals_by_height_parallel, IntegerHit, RationalHit, RationalWitness, ScanBound,
    ScanMode, ScanReport,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("empty range: lo = {lo} exceeds hi = {hi}")]
    EmptyRange { lo: BigInt, hi: BigInt },
    #[error("height bound must be at least 1")]
    InvalidHeight,
    #[error("exponent must be at least 2, got {0}")]
    InvalidExponent(u32),
    #[error("x = {0} is excluded (zero or a base); the sandwich bound does not apply there")]
    ExcludedPoint(BigInt),
    #[error("q = {0} is a perfect square; use the pythagorean family instead")]
    SquareDiscriminant(BigInt),
    #[error("q = {0} must be at least 2")]
    DiscriminantTooSmall(BigInt),
}
