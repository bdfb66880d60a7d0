//! The Weil-Chatelet group of a rational elliptic surface `B` with a section,
//! modeled as the finitely supported direct sum of the local groups
//! `H_1(B_t, Q/Z)`. For rational `B` the Tate-Shafarevich part vanishes, so
//! this sum is the whole group.
//!
//! A class `xi` is turned into a surface by [`twist`]: every supported smooth
//! point `t` receives a multiple fiber `m I_0` with `m` the order of `xi_t`.

use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fiber::{local_twist_group, KodairaFiber, LocalTwistGroup, QZPair, QZ};
use crate::surface::{BasePoint, EllipticSurface};

/// Local component of a class at one base point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(untagged)]
pub enum TwistDatum {
    /// Over a smooth fiber: `(Q/Z)^2`.
    Smooth(QZ, QZ),
    /// Over an `I_n` fiber: `Q/Z`.
    Nodal(QZ),
}

impl TwistDatum {
    pub fn pair(first: QZ, second: QZ) -> Self {
        TwistDatum::Smooth(first, second)
    }

    pub fn shape(&self) -> LocalTwistGroup {
        match self {
            TwistDatum::Smooth(..) => LocalTwistGroup::Two,
            TwistDatum::Nodal(_) => LocalTwistGroup::One,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            TwistDatum::Smooth(a, b) => a.is_zero() && b.is_zero(),
            TwistDatum::Nodal(a) => a.is_zero(),
        }
    }

    pub fn order(&self) -> u64 {
        match self {
            TwistDatum::Smooth(a, b) => QZPair::new(*a, *b).order(),
            TwistDatum::Nodal(a) => a.order(),
        }
    }

    pub fn scalar(&self, i: i64) -> Self {
        match self {
            TwistDatum::Smooth(a, b) => TwistDatum::Smooth(a.scalar(i), b.scalar(i)),
            TwistDatum::Nodal(a) => TwistDatum::Nodal(a.scalar(i)),
        }
    }

    fn checked_add(&self, other: &Self) -> Option<Self> {
        match (self, other) {
            (TwistDatum::Smooth(a, b), TwistDatum::Smooth(c, d)) => {
                Some(TwistDatum::Smooth(*a + *c, *b + *d))
            }
            (TwistDatum::Nodal(a), TwistDatum::Nodal(c)) => Some(TwistDatum::Nodal(*a + *c)),
            _ => None,
        }
    }
}

impl fmt::Display for TwistDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TwistDatum::Smooth(a, b) => write!(f, "({a}, {b})"),
            TwistDatum::Nodal(a) => write!(f, "{a}"),
        }
    }
}

/// An element of `WC(B)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WCElement {
    base: EllipticSurface,
    support: BTreeMap<BasePoint, TwistDatum>,
}

fn check_base(base: &EllipticSurface) -> Result<()> {
    if base.has_section() && base.is_rational()? {
        Ok(())
    } else {
        Err(Error::NonRationalBase {
            name: base.name().to_string(),
        })
    }
}

impl WCElement {
    pub fn base(&self) -> &EllipticSurface {
        &self.base
    }

    pub fn support(&self) -> &BTreeMap<BasePoint, TwistDatum> {
        &self.support
    }

    pub fn is_zero(&self) -> bool {
        self.support.is_empty()
    }

    pub fn order(&self) -> u64 {
        wc_order(self)
    }

    pub fn scalar(&self, i: i64) -> WCElement {
        wc_scalar(i, self)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&WCDoc::from(self)).expect("class documents always serialize")
    }

    /// Reads a class document over `base`; the document's base name must
    /// match and all data are revalidated.
    pub fn from_json(base: &EllipticSurface, text: &str) -> Result<Self> {
        let doc: WCDoc = serde_json::from_str(text)?;
        if doc.base != base.name() {
            return Err(Error::BaseMismatch {
                left: doc.base,
                right: base.name().to_string(),
            });
        }
        wc_make(base, doc.support.into_iter().map(|e| (e.point, e.datum)))
    }
}

impl fmt::Display for WCElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.support.is_empty() {
            return f.write_str("0");
        }
        for (i, (p, d)) in self.support.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{d}@{p}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SupportDoc {
    pub point: BasePoint,
    pub datum: TwistDatum,
}

/// JSON document for a class.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct WCDoc {
    pub base: String,
    pub support: Vec<SupportDoc>,
}

impl From<&WCElement> for WCDoc {
    fn from(xi: &WCElement) -> Self {
        WCDoc {
            base: xi.base.name().to_string(),
            support: xi
                .support
                .iter()
                .map(|(p, d)| SupportDoc {
                    point: p.clone(),
                    datum: *d,
                })
                .collect(),
        }
    }
}

pub fn wc_zero(base: &EllipticSurface) -> Result<WCElement> {
    check_base(base)?;
    Ok(WCElement {
        base: base.clone(),
        support: BTreeMap::new(),
    })
}

/// Builds `xi = (xi_t)` from explicit local data. Zero data are dropped.
pub fn wc_make(
    base: &EllipticSurface,
    assignments: impl IntoIterator<Item = (BasePoint, TwistDatum)>,
) -> Result<WCElement> {
    check_base(base)?;
    let mut seen = std::collections::BTreeSet::new();
    let mut support = BTreeMap::new();
    for (point, datum) in assignments {
        if !seen.insert(point.clone()) {
            return Err(Error::DuplicatePoint {
                point: point.to_string(),
            });
        }
        let fiber = base.config().fiber_at(&point);
        match local_twist_group(&fiber)? {
            LocalTwistGroup::Zero => {
                return Err(Error::AdditiveFiber {
                    point: point.to_string(),
                    fiber: fiber.to_string(),
                })
            }
            shape if shape != datum.shape() => {
                return Err(Error::Shape {
                    point: point.to_string(),
                })
            }
            _ => {}
        }
        if !datum.is_zero() {
            support.insert(point, datum);
        }
    }
    Ok(WCElement {
        base: base.clone(),
        support,
    })
}

pub fn wc_add(a: &WCElement, b: &WCElement) -> Result<WCElement> {
    if a.base != b.base {
        return Err(Error::BaseMismatch {
            left: a.base.name().to_string(),
            right: b.base.name().to_string(),
        });
    }
    let mut support = a.support.clone();
    for (p, d) in &b.support {
        let sum = match support.get(p) {
            // Both data were validated against the same fiber, so shapes agree.
            Some(existing) => existing
                .checked_add(d)
                .expect("local data over one base share a shape"),
            None => *d,
        };
        if sum.is_zero() {
            support.remove(p);
        } else {
            support.insert(p.clone(), sum);
        }
    }
    Ok(WCElement {
        base: a.base.clone(),
        support,
    })
}

pub fn wc_scalar(i: i64, a: &WCElement) -> WCElement {
    let support = a
        .support
        .iter()
        .map(|(p, d)| (p.clone(), d.scalar(i)))
        .filter(|(_, d)| !d.is_zero())
        .collect();
    WCElement {
        base: a.base.clone(),
        support,
    }
}

pub fn wc_neg(a: &WCElement) -> WCElement {
    wc_scalar(-1, a)
}

/// Least common multiple of the local orders.
pub fn wc_order(a: &WCElement) -> u64 {
    a.support.values().fold(1, |acc, d| acc.lcm(&d.order()))
}

/// A surface together with the pair `(B, xi)` that produced it.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TwistedSurface {
    surface: EllipticSurface,
    class: WCElement,
}

impl TwistedSurface {
    pub fn surface(&self) -> &EllipticSurface {
        &self.surface
    }

    pub fn base(&self) -> &EllipticSurface {
        &self.class.base
    }

    pub fn class(&self) -> &WCElement {
        &self.class
    }

    pub fn origin(&self) -> (&EllipticSurface, &WCElement) {
        (&self.class.base, &self.class)
    }

    pub fn into_surface(self) -> EllipticSurface {
        self.surface
    }
}

/// Applies the logarithmic transformations prescribed by `xi` to `base`.
pub fn twist(base: &EllipticSurface, xi: &WCElement) -> Result<TwistedSurface> {
    if &xi.base != base {
        return Err(Error::BaseMismatch {
            left: base.name().to_string(),
            right: xi.base.name().to_string(),
        });
    }
    if xi.is_zero() {
        return Ok(TwistedSurface {
            surface: base.clone(),
            class: xi.clone(),
        });
    }
    let mut extra = Vec::with_capacity(xi.support.len());
    for (p, d) in &xi.support {
        match d {
            TwistDatum::Smooth(..) => {
                extra.push((p.clone(), KodairaFiber::multiple_smooth(d.order())?));
            }
            TwistDatum::Nodal(_) => {
                return Err(Error::UnsupportedTwist {
                    point: p.to_string(),
                })
            }
        }
    }
    let config = base.config().with_entries(extra)?;
    let name = format!("{}[{}]", base.name(), xi);
    let surface = EllipticSurface::twisted(name, config, wc_order(xi))?;
    Ok(TwistedSurface {
        surface,
        class: xi.clone(),
    })
}

/// `J(T)`: the base `B` with every multiple fiber removed.
pub fn jacobian(t: &TwistedSurface) -> EllipticSurface {
    t.class.base.clone()
}

/// `J^i(T)`, the twist of `B` by `i xi`. Requires `i = 0` or `i` coprime to
/// the order of `xi`.
pub fn relative_jacobian_power(t: &TwistedSurface, i: i64) -> Result<TwistedSurface> {
    let lambda = wc_order(&t.class);
    if i != 0 && i.unsigned_abs().gcd(&lambda) != 1 {
        return Err(Error::NotCoprime { index: i, lambda });
    }
    twist(&t.class.base, &wc_scalar(i, &t.class))
}

/// The twist of `base` by a class of order `p` supported at the single
/// smooth point `t0`, with local datum `(1/p, 0)`.
pub fn order_p_twist(base: &EllipticSurface, t0: BasePoint, p: u64) -> Result<TwistedSurface> {
    let datum = TwistDatum::pair(QZ::new(1, p), QZ::ZERO);
    let xi = wc_make(base, [(t0, datum)])?;
    twist(base, &xi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fiber::FiberKind;
    use crate::surface::{KodairaDimension, MarkedConfig};

    fn b() -> EllipticSurface {
        let f = KodairaFiber::simple;
        EllipticSurface::new(
            "B",
            MarkedConfig::new([
                (BasePoint::integer(0), f(FiberKind::IIIStar)),
                (BasePoint::integer(1), f(FiberKind::I(2))),
                (BasePoint::Infinity, f(FiberKind::I(1))),
            ])
            .unwrap(),
            true,
        )
        .unwrap()
    }

    fn qz(s: &str) -> QZ {
        s.parse().unwrap()
    }

    fn xi_p(p: u64) -> WCElement {
        wc_make(
            &b(),
            [(
                BasePoint::integer(2),
                TwistDatum::pair(QZ::new(1, p), QZ::ZERO),
            )],
        )
        .unwrap()
    }

    #[test]
    fn zero_element() {
        let z = wc_zero(&b()).unwrap();
        assert!(z.support().is_empty());
        assert_eq!(wc_order(&z), 1);
        assert_eq!(twist(&b(), &z).unwrap().surface(), &b());
    }

    #[test]
    fn make_examples() {
        let xi = xi_p(11);
        assert_eq!(wc_order(&xi), 11);
        assert_eq!(xi.support().len(), 1);

        let err = wc_make(
            &b(),
            [(BasePoint::integer(0), TwistDatum::pair(qz("1/2"), QZ::ZERO))],
        );
        assert!(matches!(err, Err(Error::AdditiveFiber { .. })));

        let zero = wc_make(
            &b(),
            [(BasePoint::integer(2), TwistDatum::pair(QZ::ZERO, QZ::ZERO))],
        );
        assert_eq!(zero.unwrap(), wc_zero(&b()).unwrap());
    }

    #[test]
    fn make_errors() {
        let shape = wc_make(
            &b(),
            [(BasePoint::integer(2), TwistDatum::Nodal(qz("1/3")))],
        );
        assert!(matches!(shape, Err(Error::Shape { .. })));
        let shape = wc_make(
            &b(),
            [(BasePoint::integer(1), TwistDatum::pair(qz("1/3"), QZ::ZERO))],
        );
        assert!(matches!(shape, Err(Error::Shape { .. })));
        let dup = wc_make(
            &b(),
            [
                (BasePoint::integer(2), TwistDatum::pair(qz("1/3"), QZ::ZERO)),
                (
                    BasePoint::ratio(4, 2),
                    TwistDatum::pair(qz("1/5"), QZ::ZERO),
                ),
            ],
        );
        assert!(matches!(dup, Err(Error::DuplicatePoint { .. })));
        let nodal = wc_make(
            &b(),
            [(BasePoint::integer(1), TwistDatum::Nodal(qz("1/3")))],
        );
        assert!(nodal.is_ok());
    }

    #[test]
    fn non_rational_base_refused() {
        let raw = EllipticSurface::new("raw", b().config().clone(), false).unwrap();
        assert!(matches!(wc_zero(&raw), Err(Error::NonRationalBase { .. })));
    }

    #[test]
    fn group_examples() {
        let xi = xi_p(11);
        assert_eq!(wc_scalar(11, &xi), wc_zero(&b()).unwrap());
        for i in 1..=10 {
            assert_eq!(wc_order(&wc_scalar(i, &xi)), 11);
        }
        assert_eq!(
            wc_add(&xi, &wc_scalar(-1, &xi)).unwrap(),
            wc_zero(&b()).unwrap()
        );
    }

    #[test]
    fn base_mismatch() {
        let other = EllipticSurface::new("B'", b().config().clone(), true).unwrap();
        let a = xi_p(3);
        let c = wc_zero(&other).unwrap();
        assert!(matches!(wc_add(&a, &c), Err(Error::BaseMismatch { .. })));
        assert!(matches!(twist(&other, &a), Err(Error::BaseMismatch { .. })));
    }

    #[test]
    fn twist_of_order_eleven() {
        let t = twist(&b(), &xi_p(11)).unwrap();
        let s = t.surface();
        let kinds: Vec<_> = s
            .config()
            .entries()
            .iter()
            .map(|(_, f)| f.to_string())
            .collect();
        assert_eq!(kinds, ["III*", "I(2)", "11I(0)", "I(1)"]);
        assert_eq!(s.euler_number(), 12);
        assert_eq!(s.is_rational(), Ok(true));
        assert_eq!(s.kodaira_dimension(), Ok(KodairaDimension::NegInfinity));
        assert_eq!(s.lambda().unwrap().value(), 11);
    }

    #[test]
    fn twist_two_three() {
        let xi = wc_make(
            &b(),
            [
                (BasePoint::integer(2), TwistDatum::pair(qz("1/2"), QZ::ZERO)),
                (BasePoint::integer(3), TwistDatum::pair(QZ::ZERO, qz("1/3"))),
            ],
        )
        .unwrap();
        let t = twist(&b(), &xi).unwrap();
        assert_eq!(t.surface().config().multiplicities(), vec![2, 3]);
        assert_eq!(t.surface().lambda().unwrap().value(), 6);
        assert_eq!(t.surface().euler_number(), 12);
        assert_eq!(jacobian(&t), b());
    }

    #[test]
    fn twist_at_nodal_point_unsupported() {
        let xi = wc_make(
            &b(),
            [(BasePoint::integer(1), TwistDatum::Nodal(qz("1/3")))],
        )
        .unwrap();
        assert!(matches!(
            twist(&b(), &xi),
            Err(Error::UnsupportedTwist { .. })
        ));
    }

    #[test]
    fn jacobian_round_trips() {
        let t = twist(&b(), &xi_p(11)).unwrap();
        assert_eq!(jacobian(&t), b());
        let z = twist(&b(), &wc_zero(&b()).unwrap()).unwrap();
        assert_eq!(jacobian(&z), b());
        assert_eq!(t.surface().config().strip_multiplicities(), *b().config());
    }

    #[test]
    fn jacobian_powers() {
        let s = twist(&b(), &xi_p(11)).unwrap();
        assert_eq!(relative_jacobian_power(&s, 1).unwrap(), s);
        let j0 = relative_jacobian_power(&s, 0).unwrap();
        assert_eq!(j0.surface(), &b());
        assert_eq!(
            relative_jacobian_power(&s, 22),
            Err(Error::NotCoprime {
                index: 22,
                lambda: 11
            })
        );
        let j3 = relative_jacobian_power(&s, 3).unwrap();
        assert_eq!(j3.class(), &wc_scalar(3, s.class()));
        assert_ne!(j3, s);
    }

    #[test]
    fn json_round_trip() {
        let xi = wc_make(
            &b(),
            [
                (
                    BasePoint::integer(2),
                    TwistDatum::pair(qz("1/11"), QZ::ZERO),
                ),
                (BasePoint::Infinity, TwistDatum::Nodal(qz("2/5"))),
            ],
        )
        .unwrap();
        let json = xi.to_json();
        assert_eq!(
            json,
            r#"{"base":"B","support":[{"point":"2/1","datum":["1/11","0/1"]},{"point":"inf","datum":"2/5"}]}"#
        );
        assert_eq!(WCElement::from_json(&b(), &json).unwrap(), xi);
        let other = EllipticSurface::new("B'", b().config().clone(), true).unwrap();
        assert!(WCElement::from_json(&other, &json).is_err());
    }
}
