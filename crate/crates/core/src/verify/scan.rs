use std::thread;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::VerifyError;
use crate::arith::{is_nth_power, perfect_power_decompose, PowerWitness};
use crate::json::{self, format_rational, parse_integer, parse_rational};
use crate::poly::{IntPolynomial, RatPolynomial, Rational};

/// Which powers a scan looks for.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScanMode {
    /// Only `m`-th powers; witnesses carry exponent `m`.
    Fixed(u32),
    /// Any perfect power; witnesses are canonical decompositions.
    Any,
}

impl ScanMode {
    fn validate(self) -> Result<Self, VerifyError> {
        match self {
            ScanMode::Fixed(m) if m < 2 => Err(VerifyError::InvalidExponent(m)),
            _ => Ok(self),
        }
    }

    fn witness(self, value: &BigInt) -> Option<PowerWitness> {
        match self {
            ScanMode::Fixed(m) => is_nth_power(value, m),
            ScanMode::Any => perfect_power_decompose(value),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ScanBound {
    /// Every integer in `[lo, hi]`.
    Range { lo: BigInt, hi: BigInt },
    /// Every reduced `p/q` with `|p| <= h` and `1 <= q <= h`.
    Height(u64),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegerHit {
    pub x: BigInt,
    pub value: BigInt,
    pub witness: PowerWitness,
}

/// Witnesses for the reduced numerator (carrying the sign) and denominator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalWitness {
    pub numerator: PowerWitness,
    pub denominator: PowerWitness,
}

impl RationalWitness {
    /// The rational base `numerator.base / denominator.base`.
    pub fn base(&self) -> Rational {
        Rational::new(self.numerator.base.clone(), self.denominator.base.clone())
    }

    pub fn verifies(&self, value: &Rational) -> bool {
        self.numerator.verifies(value.numer()) && self.denominator.verifies(value.denom())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalHit {
    pub x: Rational,
    pub value: Rational,
    pub witness: RationalWitness,
}

/// Hits of a scan, in enumeration order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanReport<H> {
    pub mode: ScanMode,
    pub bound: ScanBound,
    pub hits: Vec<H>,
}

impl<H> ScanReport<H> {
    pub fn hit_count(&self) -> usize {
        self.hits.len()
    }
}

impl ScanReport<IntegerHit> {
    pub fn hit_points(&self) -> Vec<BigInt> {
        self.hits.iter().map(|h| h.x.clone()).collect()
    }
}

impl ScanReport<RationalHit> {
    pub fn hit_points(&self) -> Vec<Rational> {
        self.hits.iter().map(|h| h.x.clone()).collect()
    }
}

/// Runs `work` over `parts` on one scoped thread each and concatenates the
/// results in part order.
fn run_partitioned<P, T, F>(parts: Vec<P>, work: F) -> Vec<T>
where
    P: Send,
    T: Send,
    F: Fn(P) -> Vec<T> + Sync,
{
    if parts.len() <= 1 {
        return parts.into_iter().flat_map(&work).collect();
    }
    thread::scope(|s| {
        let work = &work;
        let handles: Vec<_> = parts
            .into_iter()
            .map(|part| s.spawn(move || work(part)))
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("scan worker panicked"))
            .collect()
    })
}

/// Splits `[lo, hi]` into at most `jobs` contiguous, non-empty pieces.
fn partition_range(lo: &BigInt, hi: &BigInt, jobs: usize) -> Vec<(BigInt, BigInt)> {
    let len: BigInt = hi - lo + 1u32;
    let jobs = BigInt::from(jobs.max(1));
    let chunk = Integer::div_ceil(&len, &jobs);
    let mut parts = Vec::new();
    let mut start = lo.clone();
    while &start <= hi {
        let end = (&start + &chunk - 1u32).min(hi.clone());
        parts.push((start, end.clone()));
        start = end + 1u32;
    }
    parts
}

/// Every `x` in `[lo, hi]` where `f(x)` is a power of the requested kind.
pub fn scan_integers(
    f: &IntPolynomial,
    mode: ScanMode,
    lo: &BigInt,
    hi: &BigInt,
) -> Result<ScanReport<IntegerHit>, VerifyError> {
    scan_integers_parallel(f, mode, lo, hi, 1)
}

/// [`scan_integers`] over `jobs` disjoint sub-ranges; the report does not
/// depend on `jobs`.
pub fn scan_integers_parallel(
    f: &IntPolynomial,
    mode: ScanMode,
    lo: &BigInt,
    hi: &BigInt,
    jobs: usize,
) -> Result<ScanReport<IntegerHit>, VerifyError> {
    let mode = mode.validate()?;
    if lo > hi {
        return Err(VerifyError::EmptyRange {
            lo: lo.clone(),
            hi: hi.clone(),
        });
    }
    let hits = run_partitioned(partition_range(lo, hi, jobs), |(start, end)| {
        let mut hits = Vec::new();
        let mut x = start;
        while x <= end {
            let value = f.evaluate(&x);
            if let Some(witness) = mode.witness(&value) {
                hits.push(IntegerHit {
                    x: x.clone(),
                    value,
                    witness,
                });
            }
            x += 1u32;
        }
        hits
    });
    Ok(ScanReport {
        mode,
        bound: ScanBound::Range {
            lo: lo.clone(),
            hi: hi.clone(),
        },
        hits,
    })
}

/// Witness that a rational is an `m`-th power in the rationals.
pub(crate) fn rational_nth_power(value: &Rational, m: u32) -> Option<RationalWitness> {
    Some(RationalWitness {
        numerator: is_nth_power(value.numer(), m)?,
        denominator: is_nth_power(value.denom(), m)?,
    })
}

fn scan_denominators(
    f: &RatPolynomial,
    m: u32,
    height: u64,
    q_lo: u64,
    q_hi: u64,
) -> Vec<RationalHit> {
    let h = BigInt::from(height);
    let mut hits = Vec::new();
    for q in q_lo..=q_hi {
        let q = BigInt::from(q);
        let mut p = -h.clone();
        while p <= h {
            if p.gcd(&q).is_one() {
                let x = Rational::new(p.clone(), q.clone());
                let value = f.evaluate(&x);
                if let Some(witness) = rational_nth_power(&value, m) {
                    hits.push(RationalHit { x, value, witness });
                }
            }
            p += 1u32;
        }
    }
    hits
}

/// Every reduced `p/q` of height at most `height` where `f(p/q)` is an
/// `m`-th power of a rational. Enumeration runs by ascending `q`, then
/// ascending `p`.
pub fn scan_rationals_by_height(
    f: &RatPolynomial,
    m: u32,
    height: u64,
) -> Result<ScanReport<RationalHit>, VerifyError> {
    scan_rationals_by_height_parallel(f, m, height, 1)
}

pub fn scan_rationals_by_height_parallel(
    f: &RatPolynomial,
    m: u32,
    height: u64,
    jobs: usize,
) -> Result<ScanReport<RationalHit>, VerifyError> {
    if m < 2 {
        return Err(VerifyError::InvalidExponent(m));
    }
    if height == 0 {
        return Err(VerifyError::InvalidHeight);
    }
    let parts: Vec<(u64, u64)> = partition_range(&BigInt::one(), &BigInt::from(height), jobs)
        .into_iter()
        .map(|(a, b)| (a.to_u64().unwrap(), b.to_u64().unwrap()))
        .collect();
    let hits = run_partitioned(parts, |(q_lo, q_hi)| {
        scan_denominators(f, m, height, q_lo, q_hi)
    });
    Ok(ScanReport {
        mode: ScanMode::Fixed(m),
        bound: ScanBound::Height(height),
        hits,
    })
}

#[derive(Serialize, Deserialize)]
struct HitWire {
    x: String,
    value: String,
    base: String,
    exponent: u32,
}

#[derive(Serialize, Deserialize)]
struct ReportWire {
    mode: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    exponent: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    lo: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    hi: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    height: Option<String>,
    hits: Vec<HitWire>,
}

/// JSON form of a single hit.
trait WireHit: Sized {
    fn to_wire(&self) -> HitWire;
    fn from_wire(wire: HitWire) -> Result<Self, String>;
}

impl WireHit for IntegerHit {
    fn to_wire(&self) -> HitWire {
        HitWire {
            x: self.x.to_string(),
            value: self.value.to_string(),
            base: self.witness.base.to_string(),
            exponent: self.witness.exponent,
        }
    }

    fn from_wire(wire: HitWire) -> Result<Self, String> {
        let hit = IntegerHit {
            x: parse_integer(&wire.x).map_err(|e| e.to_string())?,
            value: parse_integer(&wire.value).map_err(|e| e.to_string())?,
            witness: PowerWitness::new(
                parse_integer(&wire.base).map_err(|e| e.to_string())?,
                wire.exponent,
            ),
        };
        if !hit.witness.verifies(&hit.value) {
            return Err(format!("witness does not reproduce value at x = {}", hit.x));
        }
        Ok(hit)
    }
}

impl WireHit for RationalHit {
    fn to_wire(&self) -> HitWire {
        HitWire {
            x: format_rational(&self.x),
            value: format_rational(&self.value),
            base: format_rational(&self.witness.base()),
            exponent: self.witness.numerator.exponent,
        }
    }

    fn from_wire(wire: HitWire) -> Result<Self, String> {
        let base = parse_rational(&wire.base).map_err(|e| e.to_string())?;
        let hit = RationalHit {
            x: parse_rational(&wire.x).map_err(|e| e.to_string())?,
            value: parse_rational(&wire.value).map_err(|e| e.to_string())?,
            witness: RationalWitness {
                numerator: PowerWitness::new(base.numer().clone(), wire.exponent),
                denominator: PowerWitness::new(base.denom().clone(), wire.exponent),
            },
        };
        if !hit.witness.verifies(&hit.value) {
            return Err(format!(
                "witness does not reproduce value at x = {}",
                json::display_rational(&hit.x)
            ));
        }
        Ok(hit)
    }
}

fn report_to_wire<H: WireHit>(report: &ScanReport<H>) -> ReportWire {
    let (mode, exponent) = match report.mode {
        ScanMode::Fixed(m) => ("fixed", Some(m)),
        ScanMode::Any => ("any", None),
    };
    let (lo, hi, height) = match &report.bound {
        ScanBound::Range { lo, hi } => (Some(lo.to_string()), Some(hi.to_string()), None),
        ScanBound::Height(h) => (None, None, Some(h.to_string())),
    };
    ReportWire {
        mode: mode.to_string(),
        exponent,
        lo,
        hi,
        height,
        hits: report.hits.iter().map(WireHit::to_wire).collect(),
    }
}

fn report_from_wire<H: WireHit>(wire: ReportWire) -> Result<ScanReport<H>, String> {
    let mode = match (wire.mode.as_str(), wire.exponent) {
        ("any", None) => ScanMode::Any,
        ("fixed", Some(m)) => ScanMode::Fixed(m),
        (other, _) => return Err(format!("unknown scan mode {other:?} or missing exponent")),
    };
    let bound = match (wire.lo, wire.hi, wire.height) {
        (Some(lo), Some(hi), None) => ScanBound::Range {
            lo: parse_integer(&lo).map_err(|e| e.to_string())?,
            hi: parse_integer(&hi).map_err(|e| e.to_string())?,
        },
        (None, None, Some(h)) => {
            ScanBound::Height(h.parse().map_err(|_| format!("invalid height {h:?}"))?)
        }
        _ => return Err("report needs either lo/hi or height".to_string()),
    };
    let hits = wire
        .hits
        .into_iter()
        .map(H::from_wire)
        .collect::<Result<Vec<_>, _>>()?;
    Ok(ScanReport { mode, bound, hits })
}

macro_rules! report_serde {
    ($hit:ty) => {
        impl Serialize for ScanReport<$hit> {
            fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
                report_to_wire(self).serialize(s)
            }
        }

        impl<'de> Deserialize<'de> for ScanReport<$hit> {
            fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
                let wire = ReportWire::deserialize(d)?;
                report_from_wire(wire).map_err(serde::de::Error::custom)
            }
        }
    };
}

report_serde!(IntegerHit);
report_serde!(RationalHit);
