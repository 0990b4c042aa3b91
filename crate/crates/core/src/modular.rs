//! Integer and modular-arithmetic kernel: gcd machinery, canonical residues,
//! and congruence predicates.
//!
//! All arithmetic is on `i64` and is checked: anything that would leave the
//! representable range surfaces as [`Error::Overflow`] instead of wrapping.
//! Residues follow the nonnegative (Euclidean) convention, so the canonical
//! residue of any integer mod `m` lies in `[0, m)`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A validated modulus, always an integer `>= 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "i64", into = "i64")]
pub struct Modulus(i64);

impl Modulus {
    /// Validates and wraps a modulus. Anything below 2 is rejected.
    pub fn new(m: i64) -> Result<Self> {
        if m < 2 {
            return Err(Error::InvalidModulus(m));
        }
        Ok(Modulus(m))
    }

    /// The underlying integer value.
    pub fn get(self) -> i64 {
        self.0
    }
}

impl TryFrom<i64> for Modulus {
    type Error = Error;

    fn try_from(m: i64) -> Result<Self> {
        Modulus::new(m)
    }
}

impl From<Modulus> for i64 {
    fn from(m: Modulus) -> i64 {
        m.0
    }
}

impl std::fmt::Display for Modulus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

/// Nonnegative greatest common divisor of `a` and `b`.
///
/// `gcd(0, n) = |n|`; the one undefined case `gcd(0, 0)` is a domain error.
pub fn gcd(a: i64, b: i64) -> Result<i64> {
    if a == 0 && b == 0 {
        return Err(Error::GcdUndefined);
    }
    let mut x = a.unsigned_abs();
    let mut y = b.unsigned_abs();
    while y != 0 {
        let r = x % y;
        x = y;
        y = r;
    }
    // gcd(i64::MIN, 0) = 2^63 does not fit in i64.
    i64::try_from(x).map_err(|_| Error::Overflow { op: "gcd" })
}

/// Extended Euclidean algorithm: returns `(g, x, y)` with
/// `a*x + b*y = g = gcd(a, b)`.
///
/// Only the Bezout identity is guaranteed; the coefficient pair is not
/// normalized to a canonical representative.
pub fn egcd(a: i64, b: i64) -> Result<(i64, i64, i64)> {
    if a == 0 && b == 0 {
        return Err(Error::GcdUndefined);
    }
    // Iterate on i128 so intermediate quotient products cannot wrap, then
    // narrow at the end; the final coefficients are bounded by |a| and |b|.
    let (mut r0, mut r1) = (a as i128, b as i128);
    let (mut x0, mut x1) = (1i128, 0i128);
    let (mut y0, mut y1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (x0, x1) = (x1, x0 - q * x1);
        (y0, y1) = (y1, y0 - q * y1);
    }
    if r0 < 0 {
        (r0, x0, y0) = (-r0, -x0, -y0);
    }
    let narrow = |v: i128, op| i64::try_from(v).map_err(|_| Error::Overflow { op });
    Ok((
        narrow(r0, "egcd gcd")?,
        narrow(x0, "egcd coefficient")?,
        narrow(y0, "egcd coefficient")?,
    ))
}

/// Multiplicative inverse of `a` modulo `m`, in `[0, m)`.
///
/// Fails with [`Error::NotInvertible`] (carrying the shared factor) unless
/// `gcd(a, m) = 1`.
pub fn mod_inverse(a: i64, m: Modulus) -> Result<i64> {
    let r = canonical_residue(a, m);
    let (g, x, _) = egcd(r, m.get())?;
    if g != 1 {
        return Err(Error::NotInvertible {
            value: a,
            modulus: m.get(),
            gcd: g,
        });
    }
    Ok(x.rem_euclid(m.get()))
}

/// The canonical residue of `a` mod `m`: the unique representative of `a`'s
/// congruence class in `[0, m)`. Nonnegative even for negative `a`.
pub fn canonical_residue(a: i64, m: Modulus) -> i64 {
    a.rem_euclid(m.get())
}

/// Whether `m` divides `a - b`, i.e. `a` and `b` fall in the same residue
/// class mod `m`. Computed via canonical residues so it is total even when
/// `a - b` itself would overflow.
pub fn congruent(a: i64, b: i64, m: Modulus) -> bool {
    canonical_residue(a, m) == canonical_residue(b, m)
}
