//! One-shot verification sweep: re-checks every preservation law and branch
//! theorem the library rests on, over a caller-chosen parameter range, and
//! reports per-property case counts plus the first counterexample found.
//!
//! All sampling is seeded, so two runs with the same bounds produce
//! byte-identical reports.

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use serde::Serialize;
use serde_json::{json, Value};

use crs_core::{
    apply_branches, brute_force_search, congruent, gcd, rational_power_power_first,
    rational_power_root_first, solve_branch_vector, BranchOutcome, CrsCandidate, Error, Modulus,
    Result, RootSet,
};

/// Outcome of one property: how many cases ran, how many failed, and the
/// first counterexample when there was one.
#[derive(Debug, Serialize)]
pub struct PropertyReport {
    name: &'static str,
    cases: u64,
    failures: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    counterexample: Option<Value>,
}

/// The full sweep report emitted by `crs verify`.
#[derive(Debug, Serialize)]
pub struct VerifyReport {
    hmax: i64,
    pmax: i64,
    cap: u64,
    properties: Vec<PropertyReport>,
    total_cases: u64,
    total_failures: u64,
    passed: bool,
}

impl VerifyReport {
    /// True when no property produced a counterexample.
    pub fn passed(&self) -> bool {
        self.passed
    }
}

struct Check {
    name: &'static str,
    cases: u64,
    failures: u64,
    counterexample: Option<Value>,
}

impl Check {
    fn new(name: &'static str) -> Self {
        Check {
            name,
            cases: 0,
            failures: 0,
            counterexample: None,
        }
    }

    fn record(&mut self, ok: bool, witness: impl FnOnce() -> Value) {
        self.cases += 1;
        if !ok {
            self.failures += 1;
            if self.counterexample.is_none() {
                self.counterexample = Some(witness());
            }
        }
    }

    fn finish(self) -> PropertyReport {
        PropertyReport {
            name: self.name,
            cases: self.cases,
            failures: self.failures,
            counterexample: self.counterexample,
        }
    }
}

fn modulus(h: i64) -> Modulus {
    Modulus::new(h).expect("sweep moduli are >= 2 by construction")
}

/// A random CRS mod h: canonical system plus per-element multiples of h,
/// shuffled.
fn random_crs(h: i64, rng: &mut StdRng) -> CrsCandidate {
    let mut elements: Vec<i64> = (0..h).map(|k| k + h * rng.random_range(-3..=3)).collect();
    elements.shuffle(rng);
    CrsCandidate::new(modulus(h), elements).expect("length h by construction")
}

const LEMMA_SAMPLES: u64 = 20_000;

fn cancellation() -> PropertyReport {
    let mut check = Check::new("cancellation");
    let mut rng = StdRng::seed_from_u64(0x01);
    for _ in 0..LEMMA_SAMPLES {
        let m = rng.random_range(2..=10_000i64);
        let mut k = 0;
        while k == 0 {
            k = rng.random_range(-10_000..=10_000i64);
        }
        let a = rng.random_range(-1_000_000..=1_000_000i64);
        let b = rng.random_range(-1_000_000..=1_000_000i64);
        let d = gcd(k, m).expect("k is nonzero");
        let lhs = congruent(k * a, k * b, modulus(m));
        let ok = if m / d == 1 {
            lhs
        } else {
            lhs == congruent(a, b, modulus(m / d))
        };
        check.record(ok, || json!({"k": k, "a": a, "b": b, "m": m}));
    }
    check.finish()
}

fn coprime_cancellation() -> PropertyReport {
    let mut check = Check::new("coprime-cancellation");
    let mut rng = StdRng::seed_from_u64(0x02);
    for _ in 0..LEMMA_SAMPLES {
        let m = rng.random_range(2..=10_000i64);
        let mut k = rng.random_range(-10_000..=10_000i64);
        while k == 0 || gcd(k, m).expect("k nonzero") != 1 {
            k = rng.random_range(-10_000..=10_000i64);
        }
        let a = rng.random_range(-1_000_000..=1_000_000i64);
        let b = rng.random_range(-1_000_000..=1_000_000i64);
        let ok = congruent(k * a, k * b, modulus(m)) == congruent(a, b, modulus(m));
        check.record(ok, || json!({"k": k, "a": a, "b": b, "m": m}));
    }
    check.finish()
}

fn translation_invariance() -> PropertyReport {
    let mut check = Check::new("translation-invariance");
    let mut rng = StdRng::seed_from_u64(0x03);
    for _ in 0..LEMMA_SAMPLES {
        let m = rng.random_range(2..=10_000i64);
        let a = rng.random_range(-1_000_000..=1_000_000i64);
        let b = rng.random_range(-1_000_000..=1_000_000i64);
        let c = rng.random_range(-1_000_000..=1_000_000i64);
        let ok = congruent(a, b, modulus(m)) == congruent(a + c, b + c, modulus(m));
        check.record(ok, || json!({"a": a, "b": b, "c": c, "m": m}));
    }
    check.finish()
}

fn multiple_shift_invariance() -> PropertyReport {
    let mut check = Check::new("multiple-shift-invariance");
    let mut rng = StdRng::seed_from_u64(0x04);
    for _ in 0..LEMMA_SAMPLES {
        let m = rng.random_range(2..=10_000i64);
        let a = rng.random_range(-1_000_000..=1_000_000i64);
        let b = rng.random_range(-1_000_000..=1_000_000i64);
        let c = rng.random_range(-1_000..=1_000i64);
        let d = rng.random_range(-1_000..=1_000i64);
        let ok = congruent(a + m * c, b + m * d, modulus(m)) == congruent(a, b, modulus(m));
        check.record(ok, || json!({"a": a, "b": b, "c": c, "d": d, "m": m}));
    }
    check.finish()
}

fn scaling_iff_coprime(hmax: i64) -> PropertyReport {
    let mut check = Check::new("scaling-iff-coprime");
    let mut rng = StdRng::seed_from_u64(0x05);
    for h in 2..=hmax {
        for _ in 0..20 {
            let crs = random_crs(h, &mut rng);
            for p in 1..=3 * h {
                let scaled = crs.scale(p).expect("desk-scale elements cannot overflow");
                let ok = scaled.is_crs() == (gcd(p, h).expect("p >= 1") == 1);
                check.record(ok, || json!({"h": h, "p": p, "elements": crs.elements()}));
            }
        }
    }
    check.finish()
}

fn affine_iff_coprime(hmax: i64) -> PropertyReport {
    let mut check = Check::new("affine-iff-coprime");
    let mut rng = StdRng::seed_from_u64(0x06);
    for h in 2..=hmax {
        for _ in 0..10 {
            let crs = random_crs(h, &mut rng);
            for p in 1..=2 * h {
                let shift = rng.random_range(-1_000..=1_000i64);
                let mapped = crs.affine(p, shift).expect("desk-scale elements");
                let ok = mapped.is_crs() == (gcd(p, h).expect("p >= 1") == 1);
                check.record(ok, || {
                    json!({"h": h, "p": p, "l": shift, "elements": crs.elements()})
                });
            }
        }
    }
    check.finish()
}

fn shift_multiples_preserve(hmax: i64) -> PropertyReport {
    let mut check = Check::new("shift-multiples-preserve");
    let mut rng = StdRng::seed_from_u64(0x07);
    for h in 2..=hmax {
        for _ in 0..40 {
            let elements: Vec<i64> = (0..h).map(|_| rng.random_range(-3 * h..=3 * h)).collect();
            let multipliers: Vec<i64> = (0..h).map(|_| rng.random_range(-5..=5)).collect();
            let candidate = CrsCandidate::new(modulus(h), elements).expect("length h");
            let shifted = candidate
                .shift_multiples(&multipliers)
                .expect("length h, desk scale");
            let ok = shifted.is_crs() == candidate.is_crs();
            check.record(ok, || {
                json!({"h": h, "elements": candidate.elements(), "multipliers": multipliers})
            });
        }
    }
    check.finish()
}

fn exponent_set_iff_crs(hmax: i64) -> PropertyReport {
    let mut check = Check::new("exponent-set-iff-crs");
    let mut rng = StdRng::seed_from_u64(0x08);
    for h in 2..=hmax {
        for round in 0..50 {
            // Mix guaranteed members in with the random lists so both
            // directions of the equivalence get traffic at every h.
            let elements: Vec<i64> = if round % 10 == 0 {
                random_crs(h, &mut rng).elements().to_vec()
            } else {
                (0..h).map(|_| rng.random_range(-3 * h..=3 * h)).collect()
            };
            let set = RootSet::from_exponents(&elements, modulus(h)).expect("length h");
            let candidate = CrsCandidate::new(modulus(h), elements).expect("length h");
            let ok = set.equals_omega(modulus(h)) == candidate.is_crs();
            check.record(ok, || json!({"h": h, "elements": candidate.elements()}));
        }
    }
    check.finish()
}

fn power_set_iff_coprime(hmax: i64) -> PropertyReport {
    let mut check = Check::new("power-set-iff-coprime");
    for h in 2..=hmax {
        let omega = RootSet::omega(modulus(h));
        for p in 1..=3 * h {
            let ok = omega.pow(p).equals_omega(modulus(h)) == (gcd(p, h).expect("p >= 1") == 1);
            check.record(ok, || json!({"h": h, "p": p}));
        }
    }
    check.finish()
}

fn branch_solver_iff_coprime(hmax: i64, pmax: i64) -> PropertyReport {
    let mut check = Check::new("branch-solver-iff-coprime");
    for h in 2..=hmax {
        for p in 1..=pmax {
            let coprime = gcd(h, p).expect("p >= 1") == 1;
            let ok = match solve_branch_vector(modulus(h), p) {
                Ok(BranchOutcome::Solved(bv)) => {
                    coprime
                        && apply_branches(&bv)
                            .map(|s| s.equals_omega(modulus(h)))
                            .unwrap_or(false)
                        && bv.indices().iter().enumerate().all(|(k, &lk)| {
                            let t = k as i64 + h * lk;
                            t % p == 0
                        })
                        && CrsCandidate::new(
                            modulus(h),
                            bv.indices()
                                .iter()
                                .enumerate()
                                .map(|(k, &lk)| (k as i64 + h * lk) / p)
                                .collect(),
                        )
                        .map(|c| c.is_crs())
                        .unwrap_or(false)
                }
                Ok(BranchOutcome::NoSolution { gcd: d, witness_k }) => {
                    !coprime
                        && d == gcd(h, p).expect("p >= 1")
                        && (0..p).all(|l| (witness_k + h * l) % p != 0)
                }
                Err(_) => false,
            };
            check.record(ok, || json!({"h": h, "p": p}));
        }
    }
    check.finish()
}

fn brute_force_agreement(hmax: i64, pmax: i64, cap: u64) -> PropertyReport {
    let mut check = Check::new("brute-force-agreement");
    for h in 2..=hmax {
        for p in 1..=pmax {
            let exponent = u32::try_from(h).unwrap_or(u32::MAX);
            if (p as u128).saturating_pow(exponent) > cap as u128 {
                continue;
            }
            let report = match brute_force_search(modulus(h), p, cap) {
                Ok(report) => report,
                Err(_) => {
                    check.record(false, || json!({"h": h, "p": p}));
                    continue;
                }
            };
            let ok = if gcd(h, p).expect("p >= 1") == 1 {
                report.exhaustive
                    && report.solutions.len() == 1
                    && matches!(
                        solve_branch_vector(modulus(h), p),
                        Ok(BranchOutcome::Solved(bv)) if bv == report.solutions[0]
                    )
            } else {
                report.exhaustive && report.solutions.is_empty()
            };
            check.record(ok, || json!({"h": h, "p": p}));
        }
    }
    check.finish()
}

fn rational_power_consistency(hmax: i64, pmax: i64) -> PropertyReport {
    let mut check = Check::new("rational-power-consistency");
    for h in 2..=hmax {
        for p in 1..=pmax {
            if gcd(h, p).expect("p >= 1") != 1 {
                continue;
            }
            let bv = match solve_branch_vector(modulus(h), p) {
                Ok(BranchOutcome::Solved(bv)) => bv,
                _ => {
                    check.record(false, || json!({"h": h, "p": p}));
                    continue;
                }
            };
            for q in 1..=pmax {
                if gcd(h, q).expect("q >= 1") != 1 {
                    continue;
                }
                let ok = match (
                    rational_power_root_first(&bv, q),
                    rational_power_power_first(&bv, q),
                ) {
                    (Ok(root_first), Ok(power_first)) => {
                        root_first.equals_omega(modulus(h)) && root_first == power_first
                    }
                    _ => false,
                };
                check.record(ok, || json!({"h": h, "p": p, "q": q}));
            }
        }
    }
    check.finish()
}

/// Runs the whole sweep. `hmax` bounds the moduli, `pmax` the root degrees
/// and powers, `cap` the exhaustive-search budget.
pub fn run(hmax: i64, pmax: i64, cap: u64) -> Result<VerifyReport> {
    if hmax < 2 {
        return Err(Error::InvalidModulus(hmax));
    }
    if pmax < 1 {
        return Err(Error::InvalidRootDegree(pmax));
    }
    let properties = vec![
        cancellation(),
        coprime_cancellation(),
        translation_invariance(),
        multiple_shift_invariance(),
        scaling_iff_coprime(hmax),
        affine_iff_coprime(hmax),
        shift_multiples_preserve(hmax),
        exponent_set_iff_crs(hmax),
        power_set_iff_coprime(hmax),
        branch_solver_iff_coprime(hmax, pmax),
        brute_force_agreement(hmax, pmax, cap),
        rational_power_consistency(hmax, pmax),
    ];
    let total_cases = properties.iter().map(|p| p.cases).sum();
    let total_failures = properties.iter().map(|p| p.failures).sum();
    Ok(VerifyReport {
        hmax,
        pmax,
        cap,
        properties,
        total_cases,
        total_failures,
        passed: total_failures == 0,
    })
}
