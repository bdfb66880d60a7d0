//! Relatively minimal elliptic surfaces over `P^1`, described by their
//! marked singular and multiple fibers.
//!
//! A surface is nothing but a typed finite subset of `P^1(Q)` plus a flag
//! recording whether a section exists. Every invariant is computed from
//! that data: the Euler number from the Kodaira table, `chi(O)` as `e/12`,
//! and the degree of the canonical bundle from the multiple fibers.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::fiber::{FiberKind, KodairaFiber};

/// A point of `P^1(Q)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum BasePoint {
    Finite(BigRational),
    Infinity,
}

impl BasePoint {
    pub fn integer(n: i64) -> Self {
        BasePoint::Finite(BigRational::from_integer(n.into()))
    }

    pub fn ratio(num: i64, den: i64) -> Self {
        BasePoint::Finite(BigRational::new(num.into(), den.into()))
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, BasePoint::Infinity)
    }
}

impl Ord for BasePoint {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (BasePoint::Finite(a), BasePoint::Finite(b)) => a.cmp(b),
            (BasePoint::Finite(_), BasePoint::Infinity) => Ordering::Less,
            (BasePoint::Infinity, BasePoint::Finite(_)) => Ordering::Greater,
            (BasePoint::Infinity, BasePoint::Infinity) => Ordering::Equal,
        }
    }
}

impl PartialOrd for BasePoint {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for BasePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasePoint::Finite(q) => write!(f, "{}/{}", q.numer(), q.denom()),
            BasePoint::Infinity => f.write_str("inf"),
        }
    }
}

impl FromStr for BasePoint {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if matches!(t, "inf" | "infinity" | "∞") {
            return Ok(BasePoint::Infinity);
        }
        let bad = || Error::Parse {
            what: "base point",
            input: s.to_string(),
        };
        let (num, den) = t.split_once('/').unwrap_or((t, "1"));
        let num: BigInt = num.trim().parse().map_err(|_| bad())?;
        let den: BigInt = den.trim().parse().map_err(|_| bad())?;
        if den.is_zero() {
            return Err(bad());
        }
        Ok(BasePoint::Finite(BigRational::new(num, den)))
    }
}

impl Serialize for BasePoint {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for BasePoint {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Distinct base points, each carrying a non-trivial fiber. Entries are kept
/// sorted by point so that equal configurations compare equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct MarkedConfig {
    entries: Vec<(BasePoint, KodairaFiber)>,
}

impl MarkedConfig {
    pub fn new(entries: impl IntoIterator<Item = (BasePoint, KodairaFiber)>) -> Result<Self> {
        let mut entries: Vec<_> = entries.into_iter().collect();
        entries.sort_by(|a, b| a.0.cmp(&b.0));
        for pair in entries.windows(2) {
            if pair[0].0 == pair[1].0 {
                return Err(Error::DuplicatePoint {
                    point: pair[0].0.to_string(),
                });
            }
        }
        if let Some((p, _)) = entries
            .iter()
            .find(|(_, f)| f.kind() == FiberKind::Smooth && !f.is_multiple())
        {
            return Err(Error::UnmarkedSmooth {
                point: p.to_string(),
            });
        }
        Ok(MarkedConfig { entries })
    }

    pub fn empty() -> Self {
        MarkedConfig::default()
    }

    pub fn entries(&self) -> &[(BasePoint, KodairaFiber)] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn points(&self) -> impl Iterator<Item = &BasePoint> {
        self.entries.iter().map(|(p, _)| p)
    }

    /// Fiber over `point`; unmarked points carry a smooth simple fiber.
    pub fn fiber_at(&self, point: &BasePoint) -> KodairaFiber {
        self.entries
            .binary_search_by(|(p, _)| p.cmp(point))
            .map(|i| self.entries[i].1)
            .unwrap_or_else(|_| KodairaFiber::simple(FiberKind::Smooth))
    }

    pub fn is_marked(&self, point: &BasePoint) -> bool {
        self.entries.binary_search_by(|(p, _)| p.cmp(point)).is_ok()
    }

    /// Multiplicities of the multiple fibers, in point order.
    pub fn multiplicities(&self) -> Vec<u64> {
        self.entries
            .iter()
            .map(|(_, f)| f.multiplicity())
            .filter(|&m| m > 1)
            .collect()
    }

    pub fn euler_number(&self) -> u64 {
        self.entries
            .iter()
            .map(|(_, f)| f.euler_contribution())
            .sum()
    }

    pub fn chi(&self) -> Result<u64> {
        let e = self.euler_number();
        if !e.is_multiple_of(12) {
            return Err(Error::NotElliptic { euler: e });
        }
        Ok(e / 12)
    }

    /// `-2 + chi + sum (1 - 1/m)` over the multiple fibers.
    pub fn canonical_degree(&self) -> Result<BigRational> {
        let chi = self.chi()?;
        let one = BigRational::one();
        let mut d = BigRational::from_integer(BigInt::from(chi) - 2);
        for m in self.multiplicities() {
            d += &one - BigRational::new(BigInt::one(), BigInt::from(m));
        }
        Ok(d)
    }

    /// Same configuration with every multiplicity reset to 1; multiple smooth
    /// fibers disappear.
    pub fn strip_multiplicities(&self) -> MarkedConfig {
        MarkedConfig {
            entries: self
                .entries
                .iter()
                .filter(|(_, f)| f.kind() != FiberKind::Smooth)
                .map(|(p, f)| (p.clone(), KodairaFiber::simple(f.kind())))
                .collect(),
        }
    }

    pub(crate) fn with_entries(
        &self,
        extra: impl IntoIterator<Item = (BasePoint, KodairaFiber)>,
    ) -> Result<MarkedConfig> {
        MarkedConfig::new(self.entries.iter().cloned().chain(extra))
    }
}

impl fmt::Display for MarkedConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, (p, fiber)) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{fiber} @ {p}")?;
        }
        f.write_str("}")
    }
}

/// Kodaira dimension of an elliptic surface over `P^1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum KodairaDimension {
    NegInfinity,
    Zero,
    One,
}

impl fmt::Display for KodairaDimension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            KodairaDimension::NegInfinity => "-inf",
            KodairaDimension::Zero => "0",
            KodairaDimension::One => "1",
        })
    }
}

/// `lambda_{S/C}`: the least degree of a multisection.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Lambda(u64);

impl Lambda {
    pub fn value(&self) -> u64 {
        self.0
    }
}

impl fmt::Display for Lambda {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A relatively minimal elliptic surface over `P^1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EllipticSurface {
    name: String,
    has_section: bool,
    config: MarkedConfig,
    // Order of the Weil-Chatelet class this surface was built from, if any.
    twist_order: Option<u64>,
}

impl EllipticSurface {
    pub fn new(name: impl Into<String>, config: MarkedConfig, has_section: bool) -> Result<Self> {
        let name = name.into();
        if has_section && !config.multiplicities().is_empty() {
            return Err(Error::SectionWithMultipleFiber { name });
        }
        let e = config.euler_number();
        if !e.is_multiple_of(12) {
            return Err(Error::NotElliptic { euler: e });
        }
        if e == 0 {
            return Err(Error::Degenerate);
        }
        Ok(EllipticSurface {
            name,
            has_section,
            config,
            twist_order: None,
        })
    }

    pub(crate) fn twisted(
        name: String,
        config: MarkedConfig,
        order: u64,
    ) -> Result<EllipticSurface> {
        let mut s = EllipticSurface::new(name, config, false)?;
        s.twist_order = Some(order);
        Ok(s)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn has_section(&self) -> bool {
        self.has_section
    }

    pub fn config(&self) -> &MarkedConfig {
        &self.config
    }

    pub fn euler_number(&self) -> u64 {
        self.config.euler_number()
    }

    pub fn chi(&self) -> Result<u64> {
        self.config.chi()
    }

    pub fn canonical_degree(&self) -> Result<BigRational> {
        self.config.canonical_degree()
    }

    pub fn kodaira_dimension(&self) -> Result<KodairaDimension> {
        let d = self.canonical_degree()?;
        Ok(if d.is_negative() {
            KodairaDimension::NegInfinity
        } else if d.is_zero() {
            KodairaDimension::Zero
        } else {
            KodairaDimension::One
        })
    }

    pub fn is_rational(&self) -> Result<bool> {
        Ok(self.kodaira_dimension()? == KodairaDimension::NegInfinity && self.chi()? == 1)
    }

    pub fn lambda(&self) -> Result<Lambda> {
        if self.has_section {
            return Ok(Lambda(1));
        }
        match self.twist_order {
            Some(order) => {
                debug_assert!(self
                    .config
                    .multiplicities()
                    .iter()
                    .all(|m| order.is_multiple_of(*m)));
                Ok(Lambda(order))
            }
            None => Err(Error::UnknownLambda {
                name: self.name.clone(),
            }),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("surface documents always serialize")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }
}

pub fn euler_number(s: &EllipticSurface) -> u64 {
    s.euler_number()
}

pub fn chi(s: &EllipticSurface) -> Result<u64> {
    s.chi()
}

pub fn canonical_degree(s: &EllipticSurface) -> Result<BigRational> {
    s.canonical_degree()
}

pub fn kodaira_dimension(s: &EllipticSurface) -> Result<KodairaDimension> {
    s.kodaira_dimension()
}

pub fn is_rational(s: &EllipticSurface) -> Result<bool> {
    s.is_rational()
}

pub fn lambda(s: &EllipticSurface) -> Result<Lambda> {
    s.lambda()
}

/// Exact `a/b` rendering used for every rational in output documents.
pub fn format_rational(q: &BigRational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// The JSON document for one marked fiber.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FiberDoc {
    pub point: BasePoint,
    pub kind: FiberKind,
    #[serde(default = "one")]
    pub multiplicity: u64,
}

fn one() -> u64 {
    1
}

/// The canonical surface JSON document.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SurfaceDoc {
    pub name: String,
    pub has_section: bool,
    pub fibers: Vec<FiberDoc>,
}

impl From<&EllipticSurface> for SurfaceDoc {
    fn from(s: &EllipticSurface) -> Self {
        SurfaceDoc {
            name: s.name.clone(),
            has_section: s.has_section,
            fibers: s
                .config
                .entries()
                .iter()
                .map(|(p, f)| FiberDoc {
                    point: p.clone(),
                    kind: f.kind(),
                    multiplicity: f.multiplicity(),
                })
                .collect(),
        }
    }
}

impl TryFrom<SurfaceDoc> for EllipticSurface {
    type Error = Error;

    fn try_from(doc: SurfaceDoc) -> Result<Self> {
        let entries = doc
            .fibers
            .into_iter()
            .map(|f| Ok((f.point, KodairaFiber::new(f.kind, f.multiplicity)?)))
            .collect::<Result<Vec<_>>>()?;
        EllipticSurface::new(doc.name, MarkedConfig::new(entries)?, doc.has_section)
    }
}

impl Serialize for EllipticSurface {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        SurfaceDoc::from(self).serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for EllipticSurface {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let doc = SurfaceDoc::deserialize(deserializer)?;
        EllipticSurface::try_from(doc).map_err(serde::de::Error::custom)
    }
}

/// Least common multiple of the fiber multiplicities.
pub fn multiplicity_lcm(config: &MarkedConfig) -> u64 {
    config.multiplicities().iter().fold(1, |acc, m| acc.lcm(m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn f(kind: FiberKind) -> KodairaFiber {
        KodairaFiber::simple(kind)
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn base_config() -> MarkedConfig {
        MarkedConfig::new([
            (BasePoint::integer(0), f(FiberKind::IIIStar)),
            (BasePoint::integer(1), f(FiberKind::I(2))),
            (BasePoint::Infinity, f(FiberKind::I(1))),
        ])
        .unwrap()
    }

    fn with_multiples(ms: &[u64]) -> MarkedConfig {
        base_config()
            .with_entries(ms.iter().enumerate().map(|(i, &m)| {
                (
                    BasePoint::integer(2 + i as i64),
                    KodairaFiber::multiple_smooth(m).unwrap(),
                )
            }))
            .unwrap()
    }

    fn raw(ms: &[u64]) -> EllipticSurface {
        EllipticSurface::new("raw", with_multiples(ms), false).unwrap()
    }

    #[test]
    fn euler_examples() {
        let b = EllipticSurface::new("B", base_config(), true).unwrap();
        assert_eq!(euler_number(&b), 9 + 2 + 1);
        assert_eq!(euler_number(&raw(&[11])), 12);
        assert_eq!(MarkedConfig::empty().euler_number(), 0);
        assert_eq!(
            EllipticSurface::new("empty", MarkedConfig::empty(), true),
            Err(Error::Degenerate)
        );
    }

    #[test]
    fn chi_examples() {
        assert_eq!(chi(&raw(&[])), Ok(1));
        let big = MarkedConfig::new([
            (BasePoint::integer(0), f(FiberKind::IIStar)),
            (BasePoint::integer(1), f(FiberKind::IIStar)),
            (BasePoint::integer(2), f(FiberKind::II)),
            (BasePoint::Infinity, f(FiberKind::II)),
        ])
        .unwrap();
        assert_eq!(big.euler_number(), 10 + 10 + 2 + 2);
        assert_eq!(big.chi(), Ok(2));
        let thirteen = MarkedConfig::new([
            (BasePoint::integer(0), f(FiberKind::IIIStar)),
            (BasePoint::integer(1), f(FiberKind::IV)),
        ])
        .unwrap();
        assert_eq!(thirteen.chi(), Err(Error::NotElliptic { euler: 13 }));
        assert_eq!(
            EllipticSurface::new("x", thirteen, true),
            Err(Error::NotElliptic { euler: 13 })
        );
    }

    #[test]
    fn canonical_degree_examples() {
        for p in [2, 3, 5, 11, 101] {
            assert_eq!(canonical_degree(&raw(&[p])).unwrap(), rat(-1, p as i64));
        }
        assert_eq!(canonical_degree(&raw(&[])).unwrap(), rat(-1, 1));
        // -2 + 1 + 1/2 + 2/3
        assert_eq!(canonical_degree(&raw(&[2, 3])).unwrap(), rat(1, 6));
    }

    #[test]
    fn kodaira_dimension_examples() {
        assert_eq!(
            kodaira_dimension(&raw(&[11])),
            Ok(KodairaDimension::NegInfinity)
        );
        assert_eq!(kodaira_dimension(&raw(&[2, 3])), Ok(KodairaDimension::One));
        assert_eq!(kodaira_dimension(&raw(&[2, 2])), Ok(KodairaDimension::Zero));
    }

    #[test]
    fn rationality_examples() {
        assert_eq!(is_rational(&raw(&[11])), Ok(true));
        let b = EllipticSurface::new("B", base_config(), true).unwrap();
        assert_eq!(is_rational(&b), Ok(true));
        assert_eq!(is_rational(&raw(&[2, 3])), Ok(false));
        assert_eq!(is_rational(&raw(&[2, 2])), Ok(false));
    }

    #[test]
    fn lambda_cases() {
        let b = EllipticSurface::new("B", base_config(), true).unwrap();
        assert_eq!(lambda(&b).unwrap().value(), 1);
        assert!(matches!(
            lambda(&raw(&[11])),
            Err(Error::UnknownLambda { .. })
        ));
        let t = EllipticSurface::twisted("t".into(), with_multiples(&[11]), 11).unwrap();
        assert_eq!(lambda(&t).unwrap().value(), 11);
    }

    #[test]
    fn section_forbids_multiple_fibers() {
        assert!(matches!(
            EllipticSurface::new("bad", with_multiples(&[3]), true),
            Err(Error::SectionWithMultipleFiber { .. })
        ));
    }

    #[test]
    fn config_validation() {
        assert!(matches!(
            MarkedConfig::new([
                (BasePoint::integer(0), f(FiberKind::I(1))),
                (BasePoint::ratio(0, 5), f(FiberKind::I(2))),
            ]),
            Err(Error::DuplicatePoint { .. })
        ));
        assert!(matches!(
            MarkedConfig::new([(BasePoint::integer(0), f(FiberKind::Smooth))]),
            Err(Error::UnmarkedSmooth { .. })
        ));
    }

    #[test]
    fn points_parse_and_print() {
        assert_eq!("inf".parse::<BasePoint>().unwrap(), BasePoint::Infinity);
        assert_eq!(
            "-2/4".parse::<BasePoint>().unwrap(),
            BasePoint::ratio(-1, 2)
        );
        assert_eq!(BasePoint::ratio(-1, 2).to_string(), "-1/2");
        assert_eq!(BasePoint::integer(0).to_string(), "0/1");
        assert!("1/0".parse::<BasePoint>().is_err());
        assert!(BasePoint::integer(7) < BasePoint::Infinity);
    }

    #[test]
    fn json_document_shape() {
        let b = EllipticSurface::new("B", base_config(), true).unwrap();
        let json = b.to_json();
        assert_eq!(
            json,
            r#"{"name":"B","has_section":true,"fibers":[{"point":"0/1","kind":"III*","multiplicity":1},{"point":"1/1","kind":"I(2)","multiplicity":1},{"point":"inf","kind":"I(1)","multiplicity":1}]}"#
        );
        assert_eq!(EllipticSurface::from_json(&json).unwrap(), b);
    }

    #[test]
    fn json_revalidates() {
        let bad = r#"{"name":"x","has_section":true,"fibers":[{"point":"0","kind":"III*","multiplicity":2}]}"#;
        assert!(EllipticSurface::from_json(bad).is_err());
        let dup = r#"{"name":"x","has_section":false,"fibers":[{"point":"0","kind":"III*"},{"point":"0/3","kind":"III"}]}"#;
        assert!(EllipticSurface::from_json(dup).is_err());
        assert!(EllipticSurface::from_json("{").is_err());
    }

    proptest! {
        // Grid over multiplicity vectors with chi in {1, 2}.
        #[test]
        fn trichotomy(ms in proptest::collection::vec(2u64..12, 0..5), two in any::<bool>()) {
            let mut entries: Vec<_> = if two {
                vec![
                    (BasePoint::integer(-1), f(FiberKind::IIStar)),
                    (BasePoint::integer(-2), f(FiberKind::IIStar)),
                    (BasePoint::integer(-3), f(FiberKind::II)),
                    (BasePoint::integer(-4), f(FiberKind::II)),
                ]
            } else {
                base_config().entries().to_vec()
            };
            entries.extend(ms.iter().enumerate().map(|(i, &m)| {
                (BasePoint::integer(10 + i as i64), KodairaFiber::multiple_smooth(m).unwrap())
            }));
            let s = EllipticSurface::new("grid", MarkedConfig::new(entries).unwrap(), false).unwrap();
            let d = canonical_degree(&s).unwrap();
            let expected = if d.is_negative() {
                KodairaDimension::NegInfinity
            } else if d.is_zero() {
                KodairaDimension::Zero
            } else {
                KodairaDimension::One
            };
            prop_assert_eq!(kodaira_dimension(&s).unwrap(), expected);
            let chi = if two { 2 } else { 1 };
            let mut manual = rat(chi - 2, 1);
            for &m in &ms {
                manual += rat(m as i64 - 1, m as i64);
            }
            prop_assert_eq!(d, manual);
        }
    }
}
