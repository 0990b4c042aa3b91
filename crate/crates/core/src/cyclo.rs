//! Exact roots of unity and finite root sets.
//!
//! A point on the unit circle is stored as the reduced fraction `num/den` of
//! a full turn, i.e. the number `e^{2*pi*i*num/den}` with `0 <= num < den`
//! and `gcd(num, den) = 1`. Reduced form makes equality across orders
//! structural: the square of a fourth root of unity and the nontrivial
//! square root of unity are the same stored value `1/2`. No sums of roots
//! are ever formed; the algebra here is set algebra on unit-circle points.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::modular::Modulus;

/// The unit-circle point `e^{2*pi*i*num/den}`, stored in lowest terms with
/// the turn fraction in `[0, 1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawPoint", into = "RawPoint")]
pub struct CyclotomicPoint {
    num: i64,
    den: i64,
}

/// Wire form of [`CyclotomicPoint`]: `{"num": <int>, "den": <int>}`.
#[derive(Serialize, Deserialize)]
struct RawPoint {
    num: i64,
    den: i64,
}

impl TryFrom<RawPoint> for CyclotomicPoint {
    type Error = Error;

    fn try_from(raw: RawPoint) -> Result<Self> {
        if raw.den < 1 {
            return Err(Error::NotCanonical {
                num: raw.num,
                den: raw.den,
            });
        }
        let canonical = CyclotomicPoint::from_exponent(raw.num, raw.den);
        if (canonical.num, canonical.den) != (raw.num, raw.den) {
            return Err(Error::NotCanonical {
                num: raw.num,
                den: raw.den,
            });
        }
        Ok(canonical)
    }
}

impl From<CyclotomicPoint> for RawPoint {
    fn from(p: CyclotomicPoint) -> Self {
        RawPoint {
            num: p.num,
            den: p.den,
        }
    }
}

impl CyclotomicPoint {
    /// The canonical form of `e^{2*pi*i*k/order}`: `k` is reduced mod
    /// `order`, then the fraction is put in lowest terms.
    ///
    /// `order` must be at least 1.
    pub fn from_exponent(k: i64, order: i64) -> Self {
        assert!(order >= 1, "root order must be positive, got {order}");
        let num = k.rem_euclid(order);
        if num == 0 {
            return CyclotomicPoint { num: 0, den: 1 };
        }
        let g = {
            let (mut x, mut y) = (num, order);
            while y != 0 {
                (x, y) = (y, x % y);
            }
            x
        };
        CyclotomicPoint {
            num: num / g,
            den: order / g,
        }
    }

    /// The point 1 (turn fraction `0/1`).
    pub fn one() -> Self {
        CyclotomicPoint { num: 0, den: 1 }
    }

    /// Numerator of the turn fraction.
    pub fn num(self) -> i64 {
        self.num
    }

    /// Denominator of the turn fraction; also the multiplicative order of
    /// the point.
    pub fn den(self) -> i64 {
        self.den
    }

    /// The `p`-th power of the point, exactly. Negative powers conjugate.
    pub fn pow(self, p: i64) -> Self {
        let num = (self.num as i128 * p as i128).rem_euclid(self.den as i128) as i64;
        CyclotomicPoint::from_exponent(num, self.den)
    }

    /// Double-precision `(re, im)` value of the point.
    pub fn complex_value(self) -> (f64, f64) {
        let theta = std::f64::consts::TAU * (self.num as f64) / (self.den as f64);
        (theta.cos(), theta.sin())
    }
}

impl Ord for CyclotomicPoint {
    fn cmp(&self, other: &Self) -> Ordering {
        // Ascending angle: compare num/den as exact fractions.
        let lhs = self.num as i128 * other.den as i128;
        let rhs = other.num as i128 * self.den as i128;
        lhs.cmp(&rhs)
    }
}

impl PartialOrd for CyclotomicPoint {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl std::fmt::Display for CyclotomicPoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "e^(2*pi*i*{}/{})", self.num, self.den)
    }
}

/// A finite, deduplicated set of unit-circle points, held in ascending-angle
/// order.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RootSet {
    points: BTreeSet<CyclotomicPoint>,
}

impl RootSet {
    /// The full set of `h`-th roots of unity, cardinality exactly `h`.
    pub fn omega(h: Modulus) -> Self {
        (0..h.get())
            .map(|k| CyclotomicPoint::from_exponent(k, h.get()))
            .collect()
    }

    /// The set `{e^{2*pi*i*a/h} : a in ints}`. Requires exactly `h` entries;
    /// duplicates collapse, so the result can be smaller than `h`.
    pub fn from_exponents(ints: &[i64], h: Modulus) -> Result<Self> {
        let expected = h.get() as usize;
        if ints.len() != expected {
            return Err(Error::LengthMismatch {
                expected,
                actual: ints.len(),
            });
        }
        Ok(ints
            .iter()
            .map(|&a| CyclotomicPoint::from_exponent(a, h.get()))
            .collect())
    }

    /// Elementwise `p`-th power, then set deduplication.
    pub fn pow(&self, p: i64) -> Self {
        self.points.iter().map(|pt| pt.pow(p)).collect()
    }

    /// Structural equality against the full set of `h`-th roots of unity.
    pub fn equals_omega(&self, h: Modulus) -> bool {
        *self == RootSet::omega(h)
    }

    /// Number of distinct points.
    pub fn len(&self) -> usize {
        self.points.len()
    }

    /// Whether the set is empty.
    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Membership test.
    pub fn contains(&self, pt: &CyclotomicPoint) -> bool {
        self.points.contains(pt)
    }

    /// Inserts a point, returning whether it was new.
    pub fn insert(&mut self, pt: CyclotomicPoint) -> bool {
        self.points.insert(pt)
    }

    /// Points in ascending-angle order.
    pub fn iter(&self) -> impl Iterator<Item = &CyclotomicPoint> {
        self.points.iter()
    }
}

impl FromIterator<CyclotomicPoint> for RootSet {
    fn from_iter<I: IntoIterator<Item = CyclotomicPoint>>(iter: I) -> Self {
        RootSet {
            points: iter.into_iter().collect(),
        }
    }
}

impl<'a> IntoIterator for &'a RootSet {
    type Item = &'a CyclotomicPoint;
    type IntoIter = std::collections::btree_set::Iter<'a, CyclotomicPoint>;

    fn into_iter(self) -> Self::IntoIter {
        self.points.iter()
    }
}
