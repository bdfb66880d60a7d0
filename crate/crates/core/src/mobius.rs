//! Möbius transformations of `P^1(Q)` with exact rational coefficients.

use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::surface::{format_rational, BasePoint};

/// `z -> (a z + b) / (c z + d)`, stored with the first non-zero coefficient
/// scaled to 1 so that equal maps have equal coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Mobius {
    a: BigRational,
    b: BigRational,
    c: BigRational,
    d: BigRational,
}

impl Mobius {
    /// Returns `None` for a singular matrix.
    pub fn new(a: BigRational, b: BigRational, c: BigRational, d: BigRational) -> Option<Self> {
        if (&a * &d - &b * &c).is_zero() {
            return None;
        }
        let lead = [&a, &b, &c, &d]
            .into_iter()
            .find(|x| !x.is_zero())
            .cloned()
            .expect("non-singular matrix has a non-zero entry");
        Some(Mobius {
            a: a / &lead,
            b: b / &lead,
            c: c / &lead,
            d: d / lead,
        })
    }

    pub fn identity() -> Self {
        Mobius {
            a: BigRational::one(),
            b: BigRational::zero(),
            c: BigRational::zero(),
            d: BigRational::one(),
        }
    }

    pub fn is_identity(&self) -> bool {
        *self == Mobius::identity()
    }

    pub fn coefficients(&self) -> [&BigRational; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    /// The map sending `z1, z2, z3` to `0, 1, inf`. The points must be
    /// pairwise distinct.
    pub fn to_standard(z1: &BasePoint, z2: &BasePoint, z3: &BasePoint) -> Option<Self> {
        use BasePoint::{Finite, Infinity};
        let one = BigRational::one;
        let zero = BigRational::zero;
        match (z1, z2, z3) {
            (Infinity, Finite(z2), Finite(z3)) => Mobius::new(zero(), z2 - z3, one(), -z3.clone()),
            (Finite(z1), Infinity, Finite(z3)) => {
                Mobius::new(one(), -z1.clone(), one(), -z3.clone())
            }
            (Finite(z1), Finite(z2), Infinity) => Mobius::new(one(), -z1.clone(), zero(), z2 - z1),
            (Finite(z1), Finite(z2), Finite(z3)) => {
                let u = z2 - z3;
                let v = z2 - z1;
                Mobius::new(u.clone(), -(z1 * &u), v.clone(), -(z3 * &v))
            }
            _ => None,
        }
    }

    /// The unique map sending `from[k]` to `to[k]` for `k = 0, 1, 2`.
    pub fn from_triples(from: [&BasePoint; 3], to: [&BasePoint; 3]) -> Option<Self> {
        let src = Mobius::to_standard(from[0], from[1], from[2])?;
        let dst = Mobius::to_standard(to[0], to[1], to[2])?;
        Some(dst.inverse().compose(&src))
    }

    pub fn inverse(&self) -> Self {
        Mobius::new(
            self.d.clone(),
            -self.b.clone(),
            -self.c.clone(),
            self.a.clone(),
        )
        .expect("inverse of a non-singular map is non-singular")
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Mobius) -> Self {
        Mobius::new(
            &self.a * &other.a + &self.b * &other.c,
            &self.a * &other.b + &self.b * &other.d,
            &self.c * &other.a + &self.d * &other.c,
            &self.c * &other.b + &self.d * &other.d,
        )
        .expect("product of non-singular maps is non-singular")
    }

    pub fn apply(&self, z: &BasePoint) -> BasePoint {
        match z {
            BasePoint::Infinity => {
                if self.c.is_zero() {
                    BasePoint::Infinity
                } else {
                    BasePoint::Finite(&self.a / &self.c)
                }
            }
            BasePoint::Finite(z) => {
                let den = &self.c * z + &self.d;
                if den.is_zero() {
                    BasePoint::Infinity
                } else {
                    BasePoint::Finite((&self.a * z + &self.b) / den)
                }
            }
        }
    }
}

impl fmt::Display for Mobius {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // [[a, b], [c, d]] acting by z -> (a z + b) / (c z + d)
        write!(
            f,
            "[[{}, {}], [{}, {}]]",
            format_rational(&self.a),
            format_rational(&self.b),
            format_rational(&self.c),
            format_rational(&self.d)
        )
    }
}
