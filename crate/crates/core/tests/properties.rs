//! Property suite: every algebraic law the library is built on, exercised
//! in both directions with randomized and exhaustive sweeps.

use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

use crs_core::{
    apply_branches, brute_force_search, canonical_residue, congruent, egcd, gcd, mod_inverse,
    rational_power_power_first, rational_power_root_first, solve_branch_vector, BranchOutcome,
    BranchVector, CrsCandidate, CyclotomicPoint, Modulus, RootSet,
};

fn m(v: i64) -> Modulus {
    Modulus::new(v).unwrap()
}

/// Independent membership oracle: sort the canonical residues and compare
/// with (0, 1, ..., h-1).
fn is_crs_naive(elements: &[i64], h: i64) -> bool {
    let mut residues: Vec<i64> = elements.iter().map(|&a| a.rem_euclid(h)).collect();
    residues.sort_unstable();
    residues == (0..h).collect::<Vec<_>>()
}

/// A random CRS mod h: the canonical system with per-element multiples of h
/// added, in shuffled order.
fn random_crs(h: i64, rng: &mut StdRng) -> CrsCandidate {
    let mut elements: Vec<i64> = (0..h).map(|k| k + h * rng.random_range(-3..=3)).collect();
    elements.shuffle(rng);
    CrsCandidate::new(m(h), elements).unwrap()
}

proptest! {
    // Multiplying a congruence by k divides the modulus by gcd(k, m).
    #[test]
    fn cancellation_scales_the_modulus(
        k in -10_000i64..=10_000,
        a in -1_000_000i64..=1_000_000,
        b in -1_000_000i64..=1_000_000,
        modulus in 2i64..=10_000,
    ) {
        prop_assume!(k != 0);
        let d = gcd(k, modulus).unwrap();
        let lhs = congruent(k * a, k * b, m(modulus));
        if modulus / d == 1 {
            // Congruence mod 1 is vacuous, so the scaled congruence must
            // always hold.
            prop_assert!(lhs);
        } else {
            prop_assert_eq!(lhs, congruent(a, b, m(modulus / d)));
        }
    }

    // With gcd(k, m) = 1 the factor cancels without changing the modulus.
    #[test]
    fn coprime_factors_cancel_exactly(
        k in -10_000i64..=10_000,
        a in -1_000_000i64..=1_000_000,
        b in -1_000_000i64..=1_000_000,
        modulus in 2i64..=10_000,
    ) {
        prop_assume!(k != 0 && gcd(k, modulus).unwrap() == 1);
        prop_assert_eq!(
            congruent(k * a, k * b, m(modulus)),
            congruent(a, b, m(modulus))
        );
    }

    // Congruence is invariant under translation by any constant.
    #[test]
    fn translation_preserves_congruence(
        a in -1_000_000i64..=1_000_000,
        b in -1_000_000i64..=1_000_000,
        c in -1_000_000i64..=1_000_000,
        modulus in 2i64..=10_000,
    ) {
        prop_assert_eq!(
            congruent(a, b, m(modulus)),
            congruent(a + c, b + c, m(modulus))
        );
    }

    // Adding arbitrary multiples of the modulus to each side changes nothing.
    #[test]
    fn multiples_of_the_modulus_vanish(
        a in -1_000_000i64..=1_000_000,
        b in -1_000_000i64..=1_000_000,
        c in -1_000i64..=1_000,
        d in -1_000i64..=1_000,
        modulus in 2i64..=10_000,
    ) {
        prop_assert_eq!(
            congruent(a + modulus * c, b + modulus * d, m(modulus)),
            congruent(a, b, m(modulus))
        );
    }

    // congruent agrees with direct divisibility of the difference.
    #[test]
    fn congruence_matches_divisibility(
        a in -1_000_000_000i64..=1_000_000_000,
        b in -1_000_000_000i64..=1_000_000_000,
        modulus in 2i64..=10_000,
    ) {
        prop_assert_eq!(congruent(a, b, m(modulus)), (a - b) % modulus == 0);
    }

    #[test]
    fn egcd_certifies_its_answer(a in any::<i32>(), b in any::<i32>()) {
        let (a, b) = (a as i64, b as i64);
        prop_assume!(a != 0 || b != 0);
        let (g, x, y) = egcd(a, b).unwrap();
        prop_assert_eq!(g, gcd(a, b).unwrap());
        prop_assert_eq!(a as i128 * x as i128 + b as i128 * y as i128, g as i128);
    }

    #[test]
    fn mod_inverse_round_trips(
        a in -1_000_000_000i64..=1_000_000_000,
        modulus in 2i64..=10_000,
    ) {
        prop_assume!(gcd(a, modulus) == Ok(1));
        let u = mod_inverse(a, m(modulus)).unwrap();
        prop_assert!((0..modulus).contains(&u));
        prop_assert_eq!(canonical_residue(a * u, m(modulus)), 1);
    }

    // The three equivalent readings of membership: distinct profile entries,
    // no congruent pair, and (for members) unique representatives.
    #[test]
    fn membership_definitions_agree(
        h in 2i64..=10,
        seed in any::<u64>(),
        probe in -1_000i64..=1_000,
    ) {
        let mut rng = StdRng::seed_from_u64(seed);
        let elements: Vec<i64> =
            (0..h).map(|_| rng.random_range(-3 * h..=3 * h)).collect();
        let candidate = CrsCandidate::new(m(h), elements.clone()).unwrap();

        let profile = candidate.residue_profile();
        let distinct_profile = {
            let mut sorted = profile.residues().to_vec();
            sorted.sort_unstable();
            sorted.windows(2).all(|w| w[0] != w[1])
        };
        let no_congruent_pair = (0..elements.len()).all(|i| {
            (0..elements.len())
                .all(|j| i == j || !congruent(elements[i], elements[j], m(h)))
        });

        prop_assert_eq!(candidate.is_crs(), distinct_profile);
        prop_assert_eq!(candidate.is_crs(), no_congruent_pair);

        if candidate.is_crs() {
            let matches = elements
                .iter()
                .filter(|&&a| congruent(probe, a, m(h)))
                .count();
            prop_assert_eq!(matches, 1);
        }
    }

    #[test]
    fn membership_is_permutation_invariant(
        h in 2i64..=10,
        seed in any::<u64>(),
    ) {
        let mut rng = StdRng::seed_from_u64(seed);
        let elements: Vec<i64> =
            (0..h).map(|_| rng.random_range(-3 * h..=3 * h)).collect();
        let mut shuffled = elements.clone();
        shuffled.shuffle(&mut rng);
        let original = CrsCandidate::new(m(h), elements).unwrap();
        let permuted = CrsCandidate::new(m(h), shuffled).unwrap();
        prop_assert_eq!(original.is_crs(), permuted.is_crs());
    }

    #[test]
    fn membership_matches_naive_oracle(
        h in 2i64..=6,
        seed in any::<u64>(),
    ) {
        let mut rng = StdRng::seed_from_u64(seed);
        let elements: Vec<i64> =
            (0..h).map(|_| rng.random_range(-2 * h..=2 * h)).collect();
        let candidate = CrsCandidate::new(m(h), elements.clone()).unwrap();
        prop_assert_eq!(candidate.is_crs(), is_crs_naive(&elements, h));
    }

    // Shifting by per-element multiples of h never changes membership, in
    // either direction, whether or not the input was a CRS.
    #[test]
    fn multiple_shifts_preserve_membership_exactly(
        h in 2i64..=10,
        seed in any::<u64>(),
    ) {
        let mut rng = StdRng::seed_from_u64(seed);
        let elements: Vec<i64> =
            (0..h).map(|_| rng.random_range(-3 * h..=3 * h)).collect();
        let multipliers: Vec<i64> =
            (0..h).map(|_| rng.random_range(-5..=5)).collect();
        let candidate = CrsCandidate::new(m(h), elements).unwrap();
        let shifted = candidate.shift_multiples(&multipliers).unwrap();
        prop_assert_eq!(shifted.is_crs(), candidate.is_crs());
    }

    // Exponent sets reproduce the full root set exactly for CRS exponents.
    #[test]
    fn exponent_sets_detect_membership(
        h in 2i64..=12,
        seed in any::<u64>(),
    ) {
        let mut rng = StdRng::seed_from_u64(seed);
        let elements: Vec<i64> =
            (0..h).map(|_| rng.random_range(-3 * h..=3 * h)).collect();
        let set = RootSet::from_exponents(&elements, m(h)).unwrap();
        let candidate = CrsCandidate::new(m(h), elements.clone()).unwrap();
        prop_assert_eq!(set.equals_omega(m(h)), candidate.is_crs());

        // Cardinality equals the number of distinct residues.
        let mut residues: Vec<i64> = elements.iter().map(|&a| a.rem_euclid(h)).collect();
        residues.sort_unstable();
        residues.dedup();
        prop_assert_eq!(set.len(), residues.len());
        prop_assert_eq!(set.len() == h as usize, candidate.is_crs());
    }

    #[test]
    fn constructed_members_always_map_onto_omega(
        h in 2i64..=12,
        seed in any::<u64>(),
    ) {
        let mut rng = StdRng::seed_from_u64(seed);
        let crs = random_crs(h, &mut rng);
        let set = RootSet::from_exponents(crs.elements(), m(h)).unwrap();
        prop_assert!(set.equals_omega(m(h)));
    }

    #[test]
    fn point_canonicalization_is_sound(
        k in -1_000_000_000i64..=1_000_000_000,
        order in 1i64..=1_000_000,
        t in 1i64..=1_000,
    ) {
        let base = CyclotomicPoint::from_exponent(k, order);
        prop_assert_eq!(base, CyclotomicPoint::from_exponent(k.rem_euclid(order), order));
        prop_assert_eq!(base, CyclotomicPoint::from_exponent(k * t, order * t));
    }

    // Numeric cross-check of the exact representation: evaluate each point
    // by repeated multiplication of the primitive root and compare.
    #[test]
    fn float_evaluation_is_consistent(den in 1i64..=1_000, num_seed in 0i64..=1_000_000) {
        let num = num_seed % den;
        let pt = CyclotomicPoint::from_exponent(num, den);
        let (re, im) = pt.complex_value();

        let step = std::f64::consts::TAU / den as f64;
        let (step_re, step_im) = (step.cos(), step.sin());
        let (mut acc_re, mut acc_im) = (1.0f64, 0.0f64);
        for _ in 0..num {
            let next_re = acc_re * step_re - acc_im * step_im;
            let next_im = acc_re * step_im + acc_im * step_re;
            acc_re = next_re;
            acc_im = next_im;
        }

        prop_assert!((re - acc_re).abs() < 1e-9 && (im - acc_im).abs() < 1e-9);
        let norm = re * re + im * im;
        prop_assert!((norm - 1.0).abs() < 1e-9);
    }

    // The branched root of the k-th member of the root set is the point with
    // turn fraction (k + h*l_k) / (h*p): applying a branch vector equals
    // building that exponent set directly.
    #[test]
    fn branched_sets_match_their_exponent_form(
        h in 2i64..=12,
        p in 1i64..=12,
        seed in any::<u64>(),
    ) {
        let mut rng = StdRng::seed_from_u64(seed);
        let l: Vec<i64> = (0..h).map(|_| rng.random_range(0..p)).collect();
        let bv = BranchVector::new(m(h), p, l.clone()).unwrap();
        let branched = apply_branches(&bv).unwrap();
        let direct: RootSet = (0..h)
            .map(|k| CyclotomicPoint::from_exponent(k + h * l[k as usize], h * p))
            .collect();
        prop_assert_eq!(branched, direct);
    }
}

// Scaling a CRS preserves membership exactly when the factor is coprime to
// the modulus; the failing direction is exercised by every non-coprime p in
// the sweep.
#[test]
fn scaling_iff_coprime() {
    let mut rng = StdRng::seed_from_u64(0x5ca1e);
    for h in 2..=16i64 {
        for _ in 0..20 {
            let crs = random_crs(h, &mut rng);
            assert!(crs.is_crs());
            for p in -2 * h..=3 * h {
                let expected = p != 0 && gcd(p, h).unwrap() == 1;
                assert_eq!(
                    crs.scale(p).unwrap().is_crs(),
                    expected,
                    "h={h} p={p} elements={:?}",
                    crs.elements()
                );
            }
        }
    }
}

#[test]
fn affine_iff_coprime() {
    let mut rng = StdRng::seed_from_u64(0xaff1e);
    for h in 2..=12i64 {
        for _ in 0..10 {
            let crs = random_crs(h, &mut rng);
            for p in -h..=2 * h {
                let shift = rng.random_range(-100..=100);
                let expected = p != 0 && gcd(p, h).unwrap() == 1;
                assert_eq!(
                    crs.affine(p, shift).unwrap().is_crs(),
                    expected,
                    "h={h} p={p} shift={shift}"
                );
            }
        }
    }
}

// Raising the full root set to the p-th power reproduces it exactly when
// gcd(p, h) = 1, and collapses it otherwise.
#[test]
fn power_map_iff_coprime() {
    for h in 2..=32i64 {
        let omega = RootSet::omega(m(h));
        for p in 1..=3 * h {
            let expected = gcd(p, h).unwrap() == 1;
            assert_eq!(
                omega.pow(p).equals_omega(m(h)),
                expected,
                "h={h} p={p}"
            );
        }
    }
}

// The branch solver succeeds exactly on coprime (h, p); its solutions map
// the root set onto itself and their integer quotients form a CRS.
#[test]
fn branch_solver_iff_coprime() {
    for h in 2..=32i64 {
        for p in 1..=32i64 {
            let coprime = gcd(h, p).unwrap() == 1;
            match solve_branch_vector(m(h), p).unwrap() {
                BranchOutcome::Solved(bv) => {
                    assert!(coprime, "h={h} p={p} solved despite shared factor");
                    assert!(apply_branches(&bv).unwrap().equals_omega(m(h)));
                    // p divides k + h*l_k, and the quotients are a CRS mod h.
                    let quotients: Vec<i64> = bv
                        .indices()
                        .iter()
                        .enumerate()
                        .map(|(k, &lk)| {
                            let t = k as i64 + h * lk;
                            assert_eq!(t % p, 0, "h={h} p={p} k={k}");
                            t / p
                        })
                        .collect();
                    assert!(CrsCandidate::new(m(h), quotients).unwrap().is_crs());
                }
                BranchOutcome::NoSolution { gcd: d, witness_k } => {
                    assert!(!coprime, "h={h} p={p} refused despite coprimality");
                    assert_eq!(d, gcd(h, p).unwrap());
                    // The witness index really admits no branch.
                    for l in 0..p {
                        assert_ne!((witness_k + h * l) % p, 0, "h={h} p={p} l={l}");
                    }
                }
            }
        }
    }
}

// Exhaustive enumeration agrees with the constructive solver: exactly one
// solution when gcd(h, p) = 1, none otherwise.
#[test]
fn brute_force_agrees_with_solver() {
    let cap = 1u64 << 14;
    for h in 2..=14i64 {
        for p in 1..=14i64 {
            let exponent = u32::try_from(h).unwrap();
            if (p as u128).saturating_pow(exponent) > cap as u128 {
                continue;
            }
            let report = brute_force_search(m(h), p, cap).unwrap();
            assert!(report.exhaustive);
            if gcd(h, p).unwrap() == 1 {
                assert_eq!(report.solutions.len(), 1, "h={h} p={p}");
                match solve_branch_vector(m(h), p).unwrap() {
                    BranchOutcome::Solved(bv) => assert_eq!(report.solutions[0], bv),
                    other => panic!("expected a solution for h={h} p={p}, got {other:?}"),
                }
            } else {
                assert!(report.solutions.is_empty(), "h={h} p={p}");
            }
        }
    }
}

// Both compositions of the rational power agree and reproduce the root set
// whenever both exponents are coprime to h.
#[test]
fn rational_power_routes_agree() {
    for h in 2..=16i64 {
        for p in 1..=16i64 {
            if gcd(h, p).unwrap() != 1 {
                continue;
            }
            let bv = match solve_branch_vector(m(h), p).unwrap() {
                BranchOutcome::Solved(bv) => bv,
                other => panic!("expected a solution for h={h} p={p}, got {other:?}"),
            };
            for q in 1..=16i64 {
                if gcd(h, q).unwrap() != 1 {
                    continue;
                }
                let root_first = rational_power_root_first(&bv, q).unwrap();
                let power_first = rational_power_power_first(&bv, q).unwrap();
                assert!(root_first.equals_omega(m(h)), "h={h} p={p} q={q}");
                assert_eq!(root_first, power_first, "h={h} p={p} q={q}");
            }
        }
    }
}

// Every exact fixed-point claim re-verified in floating point: branched
// points computed through the analytic branch formula match the exact
// points to well under 1e-9.
#[test]
fn branched_points_match_float_evaluation() {
    for h in 2..=32i64 {
        for p in 1..=32i64 {
            let bv = match solve_branch_vector(m(h), p).unwrap() {
                BranchOutcome::Solved(bv) => bv,
                BranchOutcome::NoSolution { .. } => continue,
            };
            let branched = apply_branches(&bv).unwrap();
            let omega = RootSet::omega(m(h));
            for (k, &lk) in bv.indices().iter().enumerate() {
                let theta = std::f64::consts::TAU * k as f64 / h as f64;
                let angle = (theta + std::f64::consts::TAU * lk as f64) / p as f64;
                let (fre, fim) = (angle.cos(), angle.sin());

                let exact = crs_core::branch_root(
                    CyclotomicPoint::from_exponent(k as i64, h),
                    lk,
                    p,
                )
                .unwrap();
                let (ere, eim) = exact.complex_value();
                assert!(
                    (fre - ere).abs() < 1e-9 && (fim - eim).abs() < 1e-9,
                    "h={h} p={p} k={k}"
                );
                assert!(branched.contains(&exact));
                let near_some_root = omega.iter().any(|w| {
                    let (wre, wim) = w.complex_value();
                    (wre - fre).abs() < 1e-9 && (wim - fim).abs() < 1e-9
                });
                assert!(near_some_root, "h={h} p={p} k={k}");
            }
        }
    }
}

// Serialized values survive the round trip whenever they are valid at all.
proptest! {
    #[test]
    fn candidate_serialization_round_trips(
        h in 2i64..=10,
        seed in any::<u64>(),
    ) {
        let mut rng = StdRng::seed_from_u64(seed);
        let elements: Vec<i64> =
            (0..h).map(|_| rng.random_range(-100..=100)).collect();
        let candidate = CrsCandidate::new(m(h), elements).unwrap();
        let json = serde_json::to_string(&candidate).unwrap();
        prop_assert_eq!(serde_json::from_str::<CrsCandidate>(&json).unwrap(), candidate);
    }

    #[test]
    fn root_set_serialization_round_trips(
        h in 2i64..=24,
        p in 1i64..=24,
    ) {
        let set = RootSet::omega(m(h)).pow(p);
        let json = serde_json::to_string(&set).unwrap();
        prop_assert_eq!(serde_json::from_str::<RootSet>(&json).unwrap(), set);
    }
}
