//! Branches of the complex p-th root on unit-circle points, and the search
//! for branch assignments that map the h-th roots of unity onto themselves.
//!
//! The p-th root of a unit-circle point has p branches, indexed by
//! `l in {0, ..., p-1}`: branch `l` sends `e^{i*theta}` to
//! `e^{i*(theta + 2*pi*l)/p}`, with the argument `theta` taken canonically
//! in `[0, 2*pi)`. A branch vector assigns one branch index to each h-th
//! root of unity, in ascending-angle order. [`solve_branch_vector`] builds
//! the one assignment that maps the h-th roots back onto themselves whenever
//! `gcd(h, p) = 1`, and produces a concrete witness of impossibility
//! otherwise; [`brute_force_search`] independently confirms both answers by
//! exhausting all `p^h` assignments.

use serde::{Deserialize, Serialize};

use crate::cyclo::{CyclotomicPoint, RootSet};
use crate::error::{Error, Result};
use crate::modular::{gcd, mod_inverse, Modulus};

/// One branch index per h-th root of unity: `l[k]` selects the branch
/// applied to the root at position `k` in ascending-angle order, with every
/// index in `{0, ..., p-1}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawBranchVector", into = "RawBranchVector")]
pub struct BranchVector {
    h: Modulus,
    p: i64,
    l: Vec<i64>,
}

/// Wire form of [`BranchVector`]: `{"h": <int>, "p": <int>, "l": [<int>, ...]}`.
#[derive(Serialize, Deserialize)]
struct RawBranchVector {
    h: i64,
    p: i64,
    l: Vec<i64>,
}

impl TryFrom<RawBranchVector> for BranchVector {
    type Error = Error;

    fn try_from(raw: RawBranchVector) -> Result<Self> {
        BranchVector::new(Modulus::new(raw.h)?, raw.p, raw.l)
    }
}

impl From<BranchVector> for RawBranchVector {
    fn from(bv: BranchVector) -> Self {
        RawBranchVector {
            h: bv.h.get(),
            p: bv.p,
            l: bv.l,
        }
    }
}

impl BranchVector {
    /// Validates `l` as a branch vector for parameters `(h, p)`: length
    /// exactly `h`, every index in `[0, p)`.
    pub fn new(h: Modulus, p: i64, l: Vec<i64>) -> Result<Self> {
        if p < 1 {
            return Err(Error::InvalidRootDegree(p));
        }
        let expected = h.get() as usize;
        if l.len() != expected {
            return Err(Error::LengthMismatch {
                expected,
                actual: l.len(),
            });
        }
        if let Some(&bad) = l.iter().find(|&&lk| lk < 0 || lk >= p) {
            return Err(Error::BranchIndexOutOfRange {
                index: bad,
                degree: p,
            });
        }
        Ok(BranchVector { h, p, l })
    }

    /// The all-zero (principal-branch) vector for `(h, p)`.
    pub fn zero(h: Modulus, p: i64) -> Result<Self> {
        BranchVector::new(h, p, vec![0; h.get() as usize])
    }

    /// The modulus `h`.
    pub fn modulus(&self) -> Modulus {
        self.h
    }

    /// The root degree `p`.
    pub fn degree(&self) -> i64 {
        self.p
    }

    /// The branch indices in position order.
    pub fn indices(&self) -> &[i64] {
        &self.l
    }
}

/// Result of [`solve_branch_vector`]: either the branch vector that maps the
/// h-th roots onto themselves, or a proof there is none.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BranchOutcome {
    /// The (unique) solving branch vector.
    Solved(BranchVector),
    /// No branch vector works; carries `gcd(h, p) > 1` and an index `k`
    /// whose root cannot be sent into the h-th roots by any branch.
    NoSolution {
        /// The shared factor that makes the problem unsolvable.
        gcd: i64,
        /// An index `k` with `k + h*l != 0 (mod p)` for every `l`.
        witness_k: i64,
    },
}

/// Everything an exhaustive branch-vector search found.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BranchSearchReport {
    /// The modulus `h`.
    pub h: Modulus,
    /// The root degree `p`.
    pub p: i64,
    /// Every solving branch vector, in lexicographic order.
    pub solutions: Vec<BranchVector>,
    /// True when the whole space `{0,...,p-1}^h` was enumerated.
    pub exhaustive: bool,
}

/// Branch `l` of the p-th root applied to a unit-circle point: with the
/// canonical argument `2*pi*num/den`, the result is the canonical form of
/// `e^{2*pi*i*(num + den*l)/(den*p)}`.
pub fn branch_root(pt: CyclotomicPoint, l: i64, p: i64) -> Result<CyclotomicPoint> {
    if p < 1 || l < 0 || l >= p {
        return Err(Error::BranchIndexOutOfRange {
            index: l,
            degree: p,
        });
    }
    let overflow = Error::Overflow { op: "branch root" };
    let num = pt
        .den()
        .checked_mul(l)
        .and_then(|dl| dl.checked_add(pt.num()))
        .ok_or(overflow.clone())?;
    let den = pt.den().checked_mul(p).ok_or(overflow)?;
    Ok(CyclotomicPoint::from_exponent(num, den))
}

/// Applies a branch vector to the full set of h-th roots of unity:
/// position `k` of the ascending-angle enumeration gets branch `l[k]` of
/// the p-th root. Duplicates collapse.
pub fn apply_branches(bv: &BranchVector) -> Result<RootSet> {
    let h = bv.modulus().get();
    let mut points = Vec::with_capacity(h as usize);
    for (k, &lk) in (0..h).zip(bv.indices()) {
        points.push(branch_root(
            CyclotomicPoint::from_exponent(k, h),
            lk,
            bv.degree(),
        )?);
    }
    Ok(points.into_iter().collect())
}

/// Constructs the branch vector under which the branched p-th roots of the
/// h-th roots of unity reproduce exactly the h-th roots of unity.
///
/// A branch works for position `k` precisely when `p` divides `k + h*l_k`,
/// so for `gcd(h, p) = 1` the solution is forced:
/// `l_k = -k * h^{-1} (mod p)`. For `gcd(h, p) = d > 1` the congruence
/// `k + h*l = 0 (mod p)` is solvable only when `d` divides `k`, so `k = 1`
/// already has no admissible branch and is returned as the witness.
pub fn solve_branch_vector(h: Modulus, p: i64) -> Result<BranchOutcome> {
    if p < 1 {
        return Err(Error::InvalidRootDegree(p));
    }
    if p == 1 {
        // The only branch of the 1st root is the identity.
        return Ok(BranchOutcome::Solved(BranchVector::zero(h, 1)?));
    }
    let d = gcd(h.get(), p)?;
    if d > 1 {
        return Ok(BranchOutcome::NoSolution {
            gcd: d,
            witness_k: 1,
        });
    }
    let p_mod = Modulus::new(p)?;
    let h_inv = mod_inverse(h.get(), p_mod)? as i128;
    let l = (0..h.get())
        .map(|k| (-(k as i128) * h_inv).rem_euclid(p as i128) as i64)
        .collect();
    Ok(BranchOutcome::Solved(BranchVector::new(h, p, l)?))
}

/// Tests whether a branch assignment maps the h-th roots onto themselves,
/// in pure integer arithmetic: position `k` lands in the h-th roots exactly
/// when `p | (k + h*l_k)`, at the root indexed by `(k + h*l_k)/p mod h`.
/// The image is the full root set when all `h` positions land and no index
/// repeats.
fn maps_onto_omega(h: i64, p: i64, l: &[i64], seen: &mut [bool]) -> bool {
    seen.iter_mut().for_each(|s| *s = false);
    for (k, &lk) in l.iter().enumerate() {
        let t = k as i128 + h as i128 * lk as i128;
        if t % p as i128 != 0 {
            return false;
        }
        let landing = ((t / p as i128).rem_euclid(h as i128)) as usize;
        if seen[landing] {
            return false;
        }
        seen[landing] = true;
    }
    true
}

/// Enumerates every branch vector in `{0,...,p-1}^h` and reports all that
/// map the h-th roots of unity onto themselves. Refuses to run when the
/// `p^h` candidates exceed `cap`.
pub fn brute_force_search(h: Modulus, p: i64, cap: u64) -> Result<BranchSearchReport> {
    if p < 1 {
        return Err(Error::InvalidRootDegree(p));
    }
    let exponent = u32::try_from(h.get()).unwrap_or(u32::MAX);
    let candidates = (p as u128).saturating_pow(exponent);
    if candidates > cap as u128 {
        return Err(Error::BudgetExceeded {
            degree: p,
            modulus: h.get(),
            candidates,
            cap,
        });
    }

    let len = h.get() as usize;
    let mut current = vec![0i64; len];
    let mut seen = vec![false; len];
    let mut solutions = Vec::new();
    loop {
        if maps_onto_omega(h.get(), p, &current, &mut seen) {
            solutions.push(BranchVector::new(h, p, current.clone())?);
        }
        // Odometer step in lexicographic order; done once the leftmost
        // position carries out.
        let mut pos = len;
        loop {
            if pos == 0 {
                return Ok(BranchSearchReport {
                    h,
                    p,
                    solutions,
                    exhaustive: true,
                });
            }
            pos -= 1;
            current[pos] += 1;
            if current[pos] < p {
                break;
            }
            current[pos] = 0;
        }
    }
}

/// The rational power `q/p` of the h-th roots of unity, taking the branched
/// p-th root first and the q-th power second.
pub fn rational_power_root_first(bv: &BranchVector, q: i64) -> Result<RootSet> {
    Ok(apply_branches(bv)?.pow(q))
}

/// The rational power `q/p` of the h-th roots of unity, taking the q-th
/// power first and the branched p-th root second.
///
/// The branch vector indexes the powered set in ascending-angle order, so
/// the powered set must still have `h` distinct points; if the power
/// collapsed it (`gcd(q, h) > 1`), positional indexing is undefined and a
/// [`Error::CollapsedSet`] is returned.
pub fn rational_power_power_first(bv: &BranchVector, q: i64) -> Result<RootSet> {
    let h = bv.modulus();
    let powered = RootSet::omega(h).pow(q);
    if powered.len() < h.get() as usize {
        return Err(Error::CollapsedSet {
            gcd: gcd(q, h.get())?,
        });
    }
    let mut points = Vec::with_capacity(powered.len());
    for (pt, &lk) in powered.iter().zip(bv.indices()) {
        points.push(branch_root(*pt, lk, bv.degree())?);
    }
    Ok(points.into_iter().collect())
}
