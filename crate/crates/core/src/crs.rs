//! Complete residue systems: the candidate type, the membership test, and
//! the transformations that preserve or break membership.
//!
//! A candidate is an ordered list of exactly `h` integers together with the
//! modulus `h`. It is a complete residue system (CRS) when its canonical
//! residues hit every class in `{0, ..., h-1}` exactly once. Candidates are
//! ordered lists rather than sets so that duplicate entries stay
//! representable (such a candidate is simply not a CRS) and so that
//! positional indexing is well defined for the branch machinery.
//!
//! The transformations are total constructors: `scale`, `affine` and
//! `shift_multiples` build their result for any parameters and never check
//! coprimality themselves. Whether the result is still a CRS is the caller's
//! question to ask, which is exactly what makes the failing direction of the
//! preservation laws constructible.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::modular::{canonical_residue, Modulus};

/// An ordered list of `h` integers tested for being a complete residue
/// system mod `h`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawCandidate", into = "RawCandidate")]
pub struct CrsCandidate {
    modulus: Modulus,
    elements: Vec<i64>,
}

/// Wire form of [`CrsCandidate`]: `{"h": <int>, "elements": [<int>, ...]}`.
#[derive(Serialize, Deserialize)]
struct RawCandidate {
    h: i64,
    elements: Vec<i64>,
}

impl TryFrom<RawCandidate> for CrsCandidate {
    type Error = Error;

    fn try_from(raw: RawCandidate) -> Result<Self> {
        CrsCandidate::new(Modulus::new(raw.h)?, raw.elements)
    }
}

impl From<CrsCandidate> for RawCandidate {
    fn from(c: CrsCandidate) -> Self {
        RawCandidate {
            h: c.modulus.get(),
            elements: c.elements,
        }
    }
}

impl CrsCandidate {
    /// Wraps `elements` as a candidate mod `modulus`. The list must have
    /// exactly `modulus` entries.
    pub fn new(modulus: Modulus, elements: Vec<i64>) -> Result<Self> {
        let expected = modulus.get() as usize;
        if elements.len() != expected {
            return Err(Error::LengthMismatch {
                expected,
                actual: elements.len(),
            });
        }
        Ok(CrsCandidate { modulus, elements })
    }

    /// The canonical system `(0, 1, ..., h-1)` mod `h`.
    pub fn canonical(h: Modulus) -> Self {
        CrsCandidate {
            modulus: h,
            elements: (0..h.get()).collect(),
        }
    }

    /// The modulus `h`.
    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    /// The elements in their stored order.
    pub fn elements(&self) -> &[i64] {
        &self.elements
    }

    /// The canonical residue of each element, in element order.
    pub fn residue_profile(&self) -> ResidueProfile {
        ResidueProfile {
            modulus: self.modulus,
            residues: self
                .elements
                .iter()
                .map(|&a| canonical_residue(a, self.modulus))
                .collect(),
        }
    }

    /// Whether this candidate is a complete residue system: the residue
    /// profile has no repeated entry, equivalently (the list has length `h`)
    /// it covers `{0, ..., h-1}` entirely.
    pub fn is_crs(&self) -> bool {
        let h = self.modulus.get() as usize;
        let mut seen = vec![false; h];
        for &a in &self.elements {
            let r = canonical_residue(a, self.modulus) as usize;
            if seen[r] {
                return false;
            }
            seen[r] = true;
        }
        true
    }

    /// The candidate `{p*a_0, ..., p*a_{h-1}}` mod `h`. Purely constructive:
    /// no coprimality requirement on `p`.
    pub fn scale(&self, p: i64) -> Result<Self> {
        let elements = self
            .elements
            .iter()
            .map(|&a| p.checked_mul(a).ok_or(Error::Overflow { op: "scale" }))
            .collect::<Result<Vec<_>>>()?;
        Ok(CrsCandidate {
            modulus: self.modulus,
            elements,
        })
    }

    /// The candidate `{p*a_0 + shift, ..., p*a_{h-1} + shift}` mod `h`.
    pub fn affine(&self, p: i64, shift: i64) -> Result<Self> {
        let elements = self
            .elements
            .iter()
            .map(|&a| {
                p.checked_mul(a)
                    .and_then(|pa| pa.checked_add(shift))
                    .ok_or(Error::Overflow { op: "affine map" })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(CrsCandidate {
            modulus: self.modulus,
            elements,
        })
    }

    /// The candidate `{a_0 + h*l_0, ..., a_{h-1} + h*l_{h-1}}` mod `h`,
    /// one multiplier per element.
    pub fn shift_multiples(&self, multipliers: &[i64]) -> Result<Self> {
        if multipliers.len() != self.elements.len() {
            return Err(Error::LengthMismatch {
                expected: self.elements.len(),
                actual: multipliers.len(),
            });
        }
        let h = self.modulus.get();
        let elements = self
            .elements
            .iter()
            .zip(multipliers)
            .map(|(&a, &l)| {
                h.checked_mul(l)
                    .and_then(|hl| a.checked_add(hl))
                    .ok_or(Error::Overflow { op: "multiple shift" })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(CrsCandidate {
            modulus: self.modulus,
            elements,
        })
    }
}

/// The ordered list of canonical residues of a candidate, each in `[0, h)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidueProfile {
    modulus: Modulus,
    residues: Vec<i64>,
}

impl ResidueProfile {
    /// The modulus the residues were taken against.
    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    /// The residues in element order.
    pub fn residues(&self) -> &[i64] {
        &self.residues
    }
}
