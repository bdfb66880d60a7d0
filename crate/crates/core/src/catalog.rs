//! Built-in singular-fiber configurations of rational elliptic surfaces with
//! a section.
//!
//! Coordinates are fixed rational choices; only the fiber types carry
//! meaning. Validation checks necessary conditions (Euler sum 12, distinct
//! points, no multiple fibers) and never certifies that a configuration is
//! realized by an actual surface. That is what [`Provenance`] records.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fiber::{FiberKind, KodairaFiber};
use crate::surface::{BasePoint, EllipticSurface, MarkedConfig, SurfaceDoc};
use crate::wc::{order_p_twist, TwistedSurface};

/// Name of the base used for `S(p)` unless another one is requested.
pub const DEFAULT_BASE: &str = "persson-III*-I2-I1";

/// The smooth point of the default base that carries the order-`p` twist.
pub fn default_twist_point() -> BasePoint {
    BasePoint::integer(2)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    /// Realizability follows from a published classification.
    PaperCited,
    /// Only the Euler condition has been checked.
    EulerCheckedOnly,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Provenance::PaperCited => "paper_cited",
            Provenance::EulerCheckedOnly => "euler_checked_only",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: String,
    pub config: MarkedConfig,
    pub provenance: Provenance,
}

impl CatalogEntry {
    /// The section-bearing surface described by this entry.
    pub fn surface(&self) -> Result<EllipticSurface> {
        EllipticSurface::new(self.name.clone(), self.config.clone(), true)
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(self.surface()?.to_json())
    }

    /// Reads a user configuration in the surface JSON schema, gated by
    /// [`validate_entry`].
    pub fn from_json(text: &str) -> Result<CatalogEntry> {
        let doc: SurfaceDoc = serde_json::from_str(text)?;
        let entries = doc
            .fibers
            .into_iter()
            .map(|f| Ok((f.point, KodairaFiber::new(f.kind, f.multiplicity)?)))
            .collect::<Result<Vec<_>>>()?;
        let entry = CatalogEntry {
            name: doc.name,
            config: MarkedConfig::new(entries)?,
            provenance: Provenance::EulerCheckedOnly,
        };
        if !doc.has_section || !validate_entry(&entry) {
            return Err(Error::InvalidEntry { name: entry.name });
        }
        Ok(entry)
    }
}

/// Necessary conditions only: Euler sum 12, distinct points, no multiple
/// fibers.
pub fn validate_entry(e: &CatalogEntry) -> bool {
    let entries = e.config.entries();
    let distinct = entries.windows(2).all(|w| w[0].0 != w[1].0);
    let simple = entries.iter().all(|(_, f)| !f.is_multiple());
    distinct && simple && e.config.euler_number() == 12
}

fn entry(name: &str, fibers: Vec<(BasePoint, FiberKind)>, provenance: Provenance) -> CatalogEntry {
    let config = MarkedConfig::new(
        fibers
            .into_iter()
            .map(|(p, k)| (p, KodairaFiber::simple(k))),
    )
    .expect("built-in configurations are well formed");
    CatalogEntry {
        name: name.to_string(),
        config,
        provenance,
    }
}

pub fn catalog_list() -> Vec<CatalogEntry> {
    use BasePoint::Infinity;
    use FiberKind::*;
    use Provenance::*;
    let p = BasePoint::integer;
    vec![
        entry(
            DEFAULT_BASE,
            vec![(p(0), IIIStar), (p(1), I(2)), (Infinity, I(1))],
            PaperCited,
        ),
        entry(
            "twelve-I1",
            (0..11)
                .map(|k| (p(k), I(1)))
                .chain([(Infinity, I(1))])
                .collect(),
            EulerCheckedOnly,
        ),
        entry(
            "II*-I1-I1",
            vec![(p(0), IIStar), (p(1), I(1)), (Infinity, I(1))],
            EulerCheckedOnly,
        ),
        entry(
            "II*-II",
            vec![(p(0), IIStar), (Infinity, II)],
            EulerCheckedOnly,
        ),
        entry(
            "III*-III",
            vec![(p(0), IIIStar), (Infinity, III)],
            EulerCheckedOnly,
        ),
        entry(
            "IV*-IV",
            vec![(p(0), IVStar), (Infinity, IV)],
            EulerCheckedOnly,
        ),
        entry(
            "I9-I2-I1",
            vec![(p(0), I(9)), (p(1), I(2)), (Infinity, I(1))],
            EulerCheckedOnly,
        ),
        entry(
            "I*4-I1-I1",
            vec![(p(0), IStar(4)), (p(1), I(1)), (Infinity, I(1))],
            EulerCheckedOnly,
        ),
        entry(
            "IV*-III-I1",
            vec![(p(0), IVStar), (p(1), III), (Infinity, I(1))],
            EulerCheckedOnly,
        ),
    ]
}

pub fn catalog_get(name: &str) -> Result<CatalogEntry> {
    catalog_list()
        .into_iter()
        .find(|e| e.name == name)
        .ok_or_else(|| Error::UnknownEntry {
            name: name.to_string(),
        })
}

/// The surface with a section named `DEFAULT_BASE`.
pub fn default_base() -> EllipticSurface {
    catalog_get(DEFAULT_BASE)
        .and_then(|e| e.surface())
        .expect("default base is valid")
}

/// First integer point `>= 2` carrying a smooth fiber.
pub fn free_twist_point(config: &MarkedConfig) -> BasePoint {
    (2..)
        .map(BasePoint::integer)
        .find(|p| !config.is_marked(p))
        .expect("a finite configuration leaves integer points free")
}

/// `S(p)`: the default base twisted by a class of order `p` at the default
/// smooth point.
pub fn s_of_p(p: u64) -> Result<TwistedSurface> {
    order_p_twist(&default_base(), default_twist_point(), p)
}

/// The analogue of `S(p)` over any base with a section, twisted at
/// [`free_twist_point`].
pub fn s_of_p_over(base: &EllipticSurface, p: u64) -> Result<TwistedSurface> {
    order_p_twist(base, free_twist_point(base.config()), p)
}
