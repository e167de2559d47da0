//! Acceptance suite: exact, bounded checks of every construction.
//!
//! Runs as a plain binary (`harness = false`) and prints one PASS/FAIL line
//! per criterion; the process fails if any criterion fails.

use std::collections::{BTreeSet, HashMap};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::{Pow, Zero};

use revdioph::arith::perfect_power_decompose;
use revdioph::construct::{
    build_fermat, build_fermat_rational, build_mihailescu, build_runge, FixedExponentTarget,
    GeneralTarget,
};
use revdioph::poly::Rational;
use revdioph::verify::{
    catalan_desk_check, certify_helper_inequalities, certify_sandwich, check_fermat_box,
    coprimality_check, pell_fundamental, pythagorean_family, scan_integers_parallel,
    scan_rationals_by_height_parallel, IntegerHit, RationalHit, ScanMode, ScanReport,
};

type Check = Result<String, String>;

const RUNGE_EXPONENTS: [u32; 4] = [2, 3, 4, 5];
const RUNGE_BASES: [&[i64]; 4] = [&[], &[2], &[1, 2], &[-3, 0, 5]];
const RUNGE_RANGE: (i64, i64) = (-300, 300);
const FERMAT_EXPONENTS: [u32; 3] = [3, 4, 5];
const FERMAT_BASES: [&[i64]; 3] = [&[1, 2], &[-2, 3], &[0, 1, 4]];
const FERMAT_RANGE: (i64, i64) = (-300, 300);
const MIHAILESCU_SETS: [&[i64]; 4] = [&[8, 9], &[4, 27, 125], &[-8, 1], &[]];
const MIHAILESCU_RANGE: (i64, i64) = (-500, 500);
const FERMAT_BOX_BOUND: u64 = 30;
const PELL_Q: [i64; 7] = [2, 3, 5, 6, 7, 8, 10];
const ORACLE_LIMIT: i64 = 1_000_000;
const RATIONAL_HEIGHT: u64 = 30;
const JOB_COUNTS: [usize; 3] = [1, 4, 16];

const RUNGE_BUDGET: Duration = Duration::from_secs(120);
const FERMAT_BOX_BUDGET: Duration = Duration::from_secs(60);
const ORACLE_BUDGET: Duration = Duration::from_secs(60);

fn big(v: i64) -> BigInt {
    BigInt::from(v)
}

fn bigs(v: &[i64]) -> Vec<BigInt> {
    v.iter().copied().map(big).collect()
}

fn rat(p: i64, q: i64) -> Rational {
    Rational::new(p.into(), q.into())
}

fn fixed(m: u32, bases: &[i64]) -> FixedExponentTarget {
    FixedExponentTarget::new(m, bigs(bases)).expect("matrix target is valid")
}

fn general(powers: &[i64]) -> GeneralTarget {
    GeneralTarget::new(bigs(powers)).expect("matrix target is valid")
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Hits must sit exactly on `expected` and every witness must re-verify.
fn check_integer_hits(
    report: &ScanReport<IntegerHit>,
    expected: &[i64],
    label: &str,
) -> Result<(), String> {
    let got: BTreeSet<BigInt> = report.hit_points().into_iter().collect();
    let want: BTreeSet<BigInt> = bigs(expected).into_iter().collect();
    ensure(got == want, || {
        format!("{label}: hits {got:?}, expected {want:?}")
    })?;
    for h in &report.hits {
        ensure(h.witness.verifies(&h.value), || {
            format!("{label}: witness {} fails at x = {}", h.witness, h.x)
        })?;
    }
    let xs = report.hit_points();
    ensure(xs.windows(2).all(|w| w[0] < w[1]), || {
        format!("{label}: hits not sorted by x")
    })
}

type Rerun<H> = Box<dyn Fn(usize) -> ScanReport<H>>;

/// Scan reports kept for the determinism criterion, with a closure to rerun each.
#[derive(Default)]
struct Reports {
    integer: Vec<(String, Rerun<IntegerHit>, ScanReport<IntegerHit>)>,
    rational: Vec<(String, Rerun<RationalHit>, ScanReport<RationalHit>)>,
}

fn runge_scan(reports: &mut Reports) -> Check {
    let start = Instant::now();
    let mut specs = 0;
    for m in RUNGE_EXPONENTS {
        for bases in RUNGE_BASES {
            let f = build_runge(&fixed(m, bases));
            let run = move |jobs| {
                scan_integers_parallel(
                    &f,
                    ScanMode::Fixed(m),
                    &big(RUNGE_RANGE.0),
                    &big(RUNGE_RANGE.1),
                    jobs,
                )
                .expect("valid scan")
            };
            let report = run(1);
            let label = format!("runge m={m} bases={bases:?}");
            check_integer_hits(&report, bases, &label)?;
            for h in &report.hits {
                ensure(h.value == Pow::pow(&h.x, m), || {
                    format!("{label}: f({}) != x^m", h.x)
                })?;
            }
            reports.integer.push((label, Box::new(run), report));
            specs += 1;
        }
    }
    let elapsed = start.elapsed();
    ensure(elapsed < RUNGE_BUDGET, || {
        format!("took {elapsed:?}, budget {RUNGE_BUDGET:?}")
    })?;
    Ok(format!("{specs} specs over [-300, 300] in {elapsed:.2?}"))
}

fn sandwich_certificates() -> Check {
    let mut certified = 0usize;
    for m in RUNGE_EXPONENTS {
        for bases in RUNGE_BASES {
            let target = fixed(m, bases);
            let f = build_runge(&target);
            for x in RUNGE_RANGE.0..=RUNGE_RANGE.1 {
                let x = big(x);
                if target.is_excluded(&x) {
                    ensure(certify_sandwich(&target, &x).is_err(), || {
                        format!("m={m} bases={bases:?}: excluded x = {x} was certified")
                    })?;
                    continue;
                }
                let cert = certify_sandwich(&target, &x).map_err(|e| e.to_string())?;
                let helpers =
                    certify_helper_inequalities(&target, &x).map_err(|e| e.to_string())?;
                ensure(cert.is_valid(), || {
                    format!("m={m} bases={bases:?}: sandwich fails at x = {x}")
                })?;
                ensure(helpers.all(), || {
                    format!(
                        "m={m} bases={bases:?}: helper inequalities {:?} at x = {x}",
                        helpers
                    )
                })?;
                // the certificate's direct evaluation and the expanded polynomial agree
                ensure(cert.value == f.evaluate(&x), || {
                    format!("m={m} bases={bases:?}: closed form != expansion at x = {x}")
                })?;
                certified += 1;
            }
        }
    }
    Ok(format!("{certified} certificates, zero failures"))
}

fn evaluation_identities() -> Check {
    for m in RUNGE_EXPONENTS {
        for bases in RUNGE_BASES {
            let target = fixed(m, bases);
            let f = build_runge(&target);
            for a in target.bases() {
                ensure(f.evaluate(a) == Pow::pow(a, m), || {
                    format!("m={m} bases={bases:?}: f({a}) != {a}^{m}")
                })?;
            }
            let product: BigInt = target.bases().iter().product();
            let expected = Pow::pow(&product, 2 * m) * 2u32;
            ensure(f.evaluate(&BigInt::zero()) == expected, || {
                format!("m={m} bases={bases:?}: f(0) != 2 (prod a_i)^(2m)")
            })?;
        }
    }
    Ok("f(a_i) = a_i^m and f(0) = 2(prod a_i)^(2m) on all 16 specs".into())
}

fn fermat_scan(reports: &mut Reports) -> Check {
    for m in FERMAT_EXPONENTS {
        for bases in FERMAT_BASES {
            let f = build_fermat(&fixed(m, bases)).map_err(|e| e.to_string())?;
            let run = move |jobs| {
                scan_integers_parallel(
                    &f,
                    ScanMode::Fixed(m),
                    &big(FERMAT_RANGE.0),
                    &big(FERMAT_RANGE.1),
                    jobs,
                )
                .expect("valid scan")
            };
            let report = run(1);
            let label = format!("fermat m={m} bases={bases:?}");
            check_integer_hits(&report, bases, &label)?;
            reports.integer.push((label, Box::new(run), report));
        }
    }
    Ok("9 specs over [-300, 300] hit exactly their bases".into())
}

fn fermat_box() -> Check {
    let start = Instant::now();
    let mut counts = Vec::new();
    for m in FERMAT_EXPONENTS {
        let triples = check_fermat_box(m, FERMAT_BOX_BOUND).map_err(|e| e.to_string())?;
        for t in &triples {
            ensure(t.holds(), || {
                format!("m={m}: reported triple does not satisfy the equation")
            })?;
            ensure(t.is_trivial(), || {
                format!("m={m}: nontrivial solution ({}, {}, {})", t.x1, t.x2, t.x3)
            })?;
        }
        counts.push(triples.len());
    }
    let elapsed = start.elapsed();
    ensure(elapsed < FERMAT_BOX_BUDGET, || {
        format!("took {elapsed:?}, budget {FERMAT_BOX_BUDGET:?}")
    })?;
    Ok(format!(
        "solutions per m {counts:?}, all x1 = 0, {elapsed:.2?}"
    ))
}

/// Smallest `x1 >= 1` with `q x1^2 + 1` a square, searching `1..limit`.
fn pell_brute_force(q: i64, limit: i64) -> Option<i64> {
    (1..limit).find(|&x1| {
        let t = q * x1 * x1 + 1;
        let r = num_integer::Roots::sqrt(&t);
        r * r == t
    })
}

fn m2_witnesses() -> Check {
    for q in PELL_Q {
        let s = pell_fundamental(&big(q)).map_err(|e| e.to_string())?;
        ensure(s.holds(), || format!("q={q}: x3^2 - q x1^2 != 1"))?;
        let x1: i64 =
            s.x1.clone()
                .try_into()
                .map_err(|_| format!("q={q}: x1 too large"))?;
        ensure(pell_brute_force(q, x1).is_none(), || {
            format!("q={q}: smaller solution than x1 = {x1}")
        })?;
        ensure(pell_brute_force(q, x1 + 1) == Some(x1), || {
            format!("q={q}: brute force disagrees")
        })?;
    }
    let mut triples = 0;
    for r in 1..=3i64 {
        for s in r + 1..=r + 5 {
            let t = pythagorean_family(&big(r), &big(s));
            ensure(t.holds(), || format!("r={r}, s={s}: identity fails"))?;
            ensure(
                t.as_tuple() == (big(2 * s), big(s * s - r * r), big(s * s + r * r)),
                || format!("r={r}, s={s}: wrong family member"),
            )?;
            triples += 1;
        }
    }
    Ok(format!(
        "{} Pell equations minimal, {triples} Pythagorean triples",
        PELL_Q.len()
    ))
}

fn mihailescu_scan(reports: &mut Reports) -> Check {
    let (lo, hi) = (big(MIHAILESCU_RANGE.0), big(MIHAILESCU_RANGE.1));
    for powers in MIHAILESCU_SETS {
        let target = general(powers);
        let f = build_mihailescu(&target);
        let run = {
            let (lo, hi) = (lo.clone(), hi.clone());
            move |jobs| {
                scan_integers_parallel(&f, ScanMode::Any, &lo, &hi, jobs).expect("valid scan")
            }
        };
        let report = run(1);
        let label = format!("mihailescu S={powers:?}");
        check_integer_hits(&report, powers, &label)?;
        for h in &report.hits {
            ensure(h.value == h.x, || format!("{label}: f({}) != {}", h.x, h.x))?;
        }
        ensure(coprimality_check(&target, &lo, &hi) == Ok(true), || {
            format!("{label}: factors not coprime somewhere in range")
        })?;
        reports.integer.push((label, Box::new(run), report));
    }
    Ok("4 sets over [-500, 500] hit exactly S; factors coprime".into())
}

fn catalan() -> Check {
    let found = catalan_desk_check(100, 20);
    ensure(found.is_empty(), || {
        format!("unexpected witnesses {found:?}")
    })?;
    Ok("no z^n - 1 = c^4 with 2 <= z <= 100, 2 <= n <= 20".into())
}

/// Independent oracle: every a^m, 2 <= m <= 20, in the box, keeping the
/// largest exponent and the larger base on ties.
fn naive_powers(limit: i64) -> HashMap<i64, (i64, u32)> {
    let mut table = HashMap::new();
    for m in 2..=20u32 {
        let mut a = 0i64;
        while let Some(v) = a.checked_pow(m).filter(|v| *v <= limit) {
            for (base, value) in [(a, v), (-a, (-a).pow(m))] {
                let entry = table.entry(value).or_insert((base, m));
                if m > entry.1 || (m == entry.1 && base > entry.0) {
                    *entry = (base, m);
                }
            }
            a += 1;
        }
    }
    table
}

fn oracle_equivalence() -> Check {
    let start = Instant::now();
    let table = naive_powers(ORACLE_LIMIT);
    let mut members = 0usize;
    for n in -ORACLE_LIMIT..=ORACLE_LIMIT {
        let value = big(n);
        let got = perfect_power_decompose(&value);
        match (table.get(&n), got) {
            (None, None) => {}
            (None, Some(w)) => return Err(format!("{n} reported as {w} but is not a power")),
            (Some(_), None) => return Err(format!("{n} is a power but was missed")),
            (Some(&(a, m)), Some(w)) => {
                ensure(w.verifies(&value), || format!("{n}: witness {w} is wrong"))?;
                if n.abs() >= 2 {
                    ensure(w.base == big(a) && w.exponent == m, || {
                        format!("{n}: witness {w}, oracle ({a})^{m}")
                    })?;
                }
                members += 1;
            }
        }
    }
    let elapsed = start.elapsed();
    ensure(elapsed < ORACLE_BUDGET, || {
        format!("took {elapsed:?}, budget {ORACLE_BUDGET:?}")
    })?;
    Ok(format!(
        "{members} perfect powers in |n| <= 10^6 agree, {elapsed:.2?}"
    ))
}

fn rational_scan(reports: &mut Reports) -> Check {
    let f = build_fermat_rational(3, &[rat(1, 2), rat(3, 1)]).map_err(|e| e.to_string())?;
    let run = move |jobs| {
        scan_rationals_by_height_parallel(&f, 3, RATIONAL_HEIGHT, jobs).expect("valid scan")
    };
    let report = run(1);
    let got: BTreeSet<Rational> = report.hit_points().into_iter().collect();
    let want: BTreeSet<Rational> = [rat(1, 2), rat(3, 1)].into_iter().collect();
    ensure(got == want, || format!("hits {got:?}, expected {{1/2, 3}}"))?;
    for h in &report.hits {
        ensure(h.witness.verifies(&h.value), || {
            format!("bad witness at {}", h.x)
        })?;
    }
    reports
        .rational
        .push(("rational m=3 S={1/2, 3}".into(), Box::new(run), report));
    Ok("height <= 30 hits exactly {1/2, 3}".into())
}

fn determinism(reports: &Reports) -> Check {
    let mut compared = 0;
    for (label, run, baseline) in &reports.integer {
        let baseline_json = serde_json::to_string(baseline).unwrap();
        for jobs in JOB_COUNTS {
            let report = run(jobs);
            ensure(&report == baseline, || {
                format!("{label}: jobs={jobs} differs")
            })?;
            ensure(
                serde_json::to_string(&report).unwrap() == baseline_json,
                || format!("{label}: jobs={jobs} JSON differs"),
            )?;
            compared += 1;
        }
    }
    for (label, run, baseline) in &reports.rational {
        let baseline_json = serde_json::to_string(baseline).unwrap();
        for jobs in JOB_COUNTS {
            let report = run(jobs);
            ensure(&report == baseline, || {
                format!("{label}: jobs={jobs} differs")
            })?;
            ensure(
                serde_json::to_string(&report).unwrap() == baseline_json,
                || format!("{label}: jobs={jobs} JSON differs"),
            )?;
            compared += 1;
        }
    }
    ensure(compared > 0, || "no scan reports recorded".into())?;
    Ok(format!(
        "{compared} scan runs identical across jobs {JOB_COUNTS:?}"
    ))
}

fn main() -> ExitCode {
    let mut reports = Reports::default();
    let results: Vec<(&str, Check)> = vec![
        (
            "AC-01 runge scan hits exactly the bases",
            runge_scan(&mut reports),
        ),
        (
            "AC-02 sandwich and helper inequalities",
            sandwich_certificates(),
        ),
        ("AC-03 runge evaluation identities", evaluation_identities()),
        (
            "AC-04 fermat scan hits exactly the bases",
            fermat_scan(&mut reports),
        ),
        ("AC-05 3x1^m + x2^m = x3^m box search", fermat_box()),
        ("AC-06 m = 2 Pell and Pythagorean witnesses", m2_witnesses()),
        (
            "AC-07 catalan-style scan and coprimality",
            mihailescu_scan(&mut reports),
        ),
        ("AC-08 z^n - c^4 = 1 desk check", catalan()),
        (
            "AC-09 perfect-power oracle equivalence",
            oracle_equivalence(),
        ),
        ("AC-10 rational height scan", rational_scan(&mut reports)),
        ("AC-11 scan determinism across jobs", determinism(&reports)),
    ];

    let mut failed = 0;
    for (name, result) in &results {
        match result {
            Ok(detail) => println!("PASS {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL {name}: {detail}");
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        results.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
