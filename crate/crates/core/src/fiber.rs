//! Exact arithmetic on `Q/Z` and `(Q/Z)^2`, and the Kodaira fiber table.
//!
//! Everything here is a small immutable value type. Fractions are always
//! kept reduced with `0 <= numerator < denominator`, so structural equality
//! is group equality.

use std::fmt;
use std::ops::{Add, Neg};
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// An element of `Q/Z`, stored as a reduced fraction in `[0, 1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QZ {
    numerator: u64,
    denominator: u64,
}

impl QZ {
    pub const ZERO: QZ = QZ {
        numerator: 0,
        denominator: 1,
    };

    /// Builds `numerator / denominator mod 1`.
    ///
    /// # Panics
    ///
    /// Panics if `denominator == 0`.
    pub fn new(numerator: i64, denominator: u64) -> Self {
        assert!(denominator > 0, "Q/Z denominator must be positive");
        let den = denominator as i128;
        let num = (numerator as i128).rem_euclid(den);
        let g = num.gcd(&den);
        QZ {
            numerator: (num / g) as u64,
            denominator: (den / g) as u64,
        }
    }

    pub fn numerator(&self) -> u64 {
        self.numerator
    }

    pub fn denominator(&self) -> u64 {
        self.denominator
    }

    pub fn is_zero(&self) -> bool {
        self.numerator == 0
    }

    /// Least `n >= 1` with `n * self = 0`. For a reduced `a/m` this is `m`.
    pub fn order(&self) -> u64 {
        self.denominator
    }

    /// `i * self` in `Q/Z`.
    pub fn scalar(&self, i: i64) -> Self {
        let den = self.denominator as i128;
        let num = (i as i128 * self.numerator as i128).rem_euclid(den);
        QZ::new(num as i64, self.denominator)
    }
}

impl Default for QZ {
    fn default() -> Self {
        QZ::ZERO
    }
}

impl Add for QZ {
    type Output = QZ;

    fn add(self, rhs: QZ) -> QZ {
        let den = self.denominator.lcm(&rhs.denominator) as i128;
        let a = self.numerator as i128 * (den / self.denominator as i128);
        let b = rhs.numerator as i128 * (den / rhs.denominator as i128);
        let num = (a + b).rem_euclid(den);
        QZ::new(num as i64, den as u64)
    }
}

impl Neg for QZ {
    type Output = QZ;

    fn neg(self) -> QZ {
        QZ::new(-(self.numerator as i64), self.denominator)
    }
}

impl fmt::Display for QZ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numerator, self.denominator)
    }
}

impl FromStr for QZ {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse {
            what: "Q/Z element",
            input: s.to_string(),
        };
        let (num, den) = match s.trim().split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s.trim(), "1"),
        };
        let num: i64 = num.parse().map_err(|_| bad())?;
        let den: u64 = den.parse().map_err(|_| bad())?;
        if den == 0 {
            return Err(bad());
        }
        Ok(QZ::new(num, den))
    }
}

impl Serialize for QZ {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for QZ {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// An element of `(Q/Z)^2`, the first homology of a smooth fiber with `Q/Z`
/// coefficients.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct QZPair {
    pub first: QZ,
    pub second: QZ,
}

impl QZPair {
    pub const ZERO: QZPair = QZPair {
        first: QZ::ZERO,
        second: QZ::ZERO,
    };

    pub fn new(first: QZ, second: QZ) -> Self {
        QZPair { first, second }
    }

    pub fn is_zero(&self) -> bool {
        self.first.is_zero() && self.second.is_zero()
    }

    pub fn order(&self) -> u64 {
        self.first.order().lcm(&self.second.order())
    }

    pub fn scalar(&self, i: i64) -> Self {
        QZPair::new(self.first.scalar(i), self.second.scalar(i))
    }
}

impl Add for QZPair {
    type Output = QZPair;

    fn add(self, rhs: QZPair) -> QZPair {
        QZPair::new(self.first + rhs.first, self.second + rhs.second)
    }
}

impl Neg for QZPair {
    type Output = QZPair;

    fn neg(self) -> QZPair {
        QZPair::new(-self.first, -self.second)
    }
}

impl fmt::Display for QZPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.first, self.second)
    }
}

/// Kodaira's symbolic fiber types. `Smooth` is `I_0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FiberKind {
    Smooth,
    /// `I_n`, `n >= 1`.
    I(u32),
    /// `I*_n`, `n >= 0`.
    IStar(u32),
    II,
    III,
    IV,
    IIStar,
    IIIStar,
    IVStar,
}

impl FiberKind {
    /// Multiplicative kinds (`I_n`, including `I_0`) are the only ones that
    /// can occur as multiple fibers.
    pub fn is_multiplicative(&self) -> bool {
        matches!(self, FiberKind::Smooth | FiberKind::I(_))
    }

    pub fn is_additive(&self) -> bool {
        !self.is_multiplicative()
    }

    /// Topological Euler number of the fiber.
    pub fn euler_contribution(&self) -> u64 {
        match *self {
            FiberKind::Smooth => 0,
            FiberKind::I(n) => n as u64,
            FiberKind::IStar(n) => n as u64 + 6,
            FiberKind::II => 2,
            FiberKind::III => 3,
            FiberKind::IV => 4,
            FiberKind::IIStar => 10,
            FiberKind::IIIStar => 9,
            FiberKind::IVStar => 8,
        }
    }
}

impl fmt::Display for FiberKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FiberKind::Smooth => f.write_str("I(0)"),
            FiberKind::I(n) => write!(f, "I({n})"),
            FiberKind::IStar(n) => write!(f, "I*({n})"),
            FiberKind::II => f.write_str("II"),
            FiberKind::III => f.write_str("III"),
            FiberKind::IV => f.write_str("IV"),
            FiberKind::IIStar => f.write_str("II*"),
            FiberKind::IIIStar => f.write_str("III*"),
            FiberKind::IVStar => f.write_str("IV*"),
        }
    }
}

impl FromStr for FiberKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse {
            what: "fiber kind",
            input: s.to_string(),
        };
        let t = s.trim();
        let index = |prefix: &str| -> Option<u32> {
            let rest = t.strip_prefix(prefix)?;
            let inner = rest
                .strip_prefix('(')
                .and_then(|r| r.strip_suffix(')'))
                .unwrap_or(rest);
            inner.trim().parse().ok()
        };
        let kind = match t {
            "smooth" | "Smooth" | "I0" => FiberKind::Smooth,
            "II" => FiberKind::II,
            "III" => FiberKind::III,
            "IV" => FiberKind::IV,
            "II*" => FiberKind::IIStar,
            "III*" => FiberKind::IIIStar,
            "IV*" => FiberKind::IVStar,
            _ => {
                if let Some(n) = index("I*") {
                    FiberKind::IStar(n)
                } else if let Some(n) = index("I") {
                    if n == 0 {
                        FiberKind::Smooth
                    } else {
                        FiberKind::I(n)
                    }
                } else {
                    return Err(bad());
                }
            }
        };
        Ok(kind)
    }
}

impl Serialize for FiberKind {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for FiberKind {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A fiber type together with its multiplicity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KodairaFiber {
    kind: FiberKind,
    multiplicity: u64,
}

impl KodairaFiber {
    /// Rejects multiplicity 0 and multiple fibers of additive type.
    pub fn new(kind: FiberKind, multiplicity: u64) -> Result<Self> {
        if multiplicity == 0 {
            return Err(Error::ZeroMultiplicity);
        }
        if multiplicity > 1 && kind.is_additive() {
            return Err(Error::Multiplicity {
                fiber: kind.to_string(),
                multiplicity,
            });
        }
        Ok(KodairaFiber { kind, multiplicity })
    }

    /// A non-multiple fiber of the given kind.
    pub fn simple(kind: FiberKind) -> Self {
        KodairaFiber {
            kind,
            multiplicity: 1,
        }
    }

    /// The multiple fiber `m I_0` produced by an order-`m` twist.
    pub fn multiple_smooth(m: u64) -> Result<Self> {
        KodairaFiber::new(FiberKind::Smooth, m)
    }

    pub fn kind(&self) -> FiberKind {
        self.kind
    }

    pub fn multiplicity(&self) -> u64 {
        self.multiplicity
    }

    pub fn is_multiple(&self) -> bool {
        self.multiplicity > 1
    }

    pub fn euler_contribution(&self) -> u64 {
        self.kind.euler_contribution()
    }

    pub fn local_twist_group(&self) -> Result<LocalTwistGroup> {
        local_twist_group(self)
    }
}

impl fmt::Display for KodairaFiber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.multiplicity > 1 {
            write!(f, "{}{}", self.multiplicity, self.kind)
        } else {
            write!(f, "{}", self.kind)
        }
    }
}

/// Shape of `H_1(B_t, Q/Z)` at a fiber of a surface with a section.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LocalTwistGroup {
    /// `(Q/Z)^2`, smooth fibers.
    Two,
    /// `Q/Z`, fibers of type `I_n`.
    One,
    /// Trivial, additive fibers.
    Zero,
}

pub fn qz_add(a: QZ, b: QZ) -> QZ {
    a + b
}

pub fn qz_order(a: QZ) -> u64 {
    a.order()
}

pub fn qz_scalar(i: i64, a: QZ) -> QZ {
    a.scalar(i)
}

pub fn euler_contribution(f: &KodairaFiber) -> u64 {
    f.euler_contribution()
}

/// Local group at a fiber of the section-bearing base; multiple fibers have
/// no place there.
pub fn local_twist_group(f: &KodairaFiber) -> Result<LocalTwistGroup> {
    if f.is_multiple() {
        return Err(Error::Multiplicity {
            fiber: f.kind.to_string(),
            multiplicity: f.multiplicity,
        });
    }
    Ok(match f.kind {
        FiberKind::Smooth => LocalTwistGroup::Two,
        FiberKind::I(_) => LocalTwistGroup::One,
        _ => LocalTwistGroup::Zero,
    })
}
