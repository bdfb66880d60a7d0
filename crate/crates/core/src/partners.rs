//! Fourier-Mukai partners of a twisted surface and the lower bound on the
//! number of their isomorphism classes.
//!
//! For an elliptic surface `S` of non-zero Kodaira dimension the partners
//! are exactly the `J^b(S)` with `b` coprime to `lambda`. Inside one twist
//! family two members `J^i`, `J^j` can only be isomorphic through an
//! automorphism of the base curve composed with an automorphism of the
//! Jacobian fixing the zero section. When the marked configuration of the
//! Jacobian is Möbius-rigid the base part is trivial, and the fiberwise part
//! has order at most 6, so every isomorphism class inside the family has at
//! most 6 members. That yields `M >= ceil(|I| / 6)`.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::catalog::s_of_p;
use crate::error::{Error, Result};
use crate::mobius::Mobius;
use crate::surface::{KodairaDimension, MarkedConfig};
use crate::wc::{relative_jacobian_power, TwistedSurface};

/// `I = { b : 1 <= b < lambda, gcd(b, lambda) = 1 }`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartnerIndexSet {
    lambda: u64,
    indices: Vec<u64>,
}

impl PartnerIndexSet {
    pub fn new(lambda: u64) -> Self {
        let indices = (1..lambda).filter(|b| b.gcd(&lambda) == 1).collect();
        PartnerIndexSet { lambda, indices }
    }

    pub fn lambda(&self) -> u64 {
        self.lambda
    }

    pub fn indices(&self) -> &[u64] {
        &self.indices
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }
}

/// Upper bound on `|Aut(B/C)|` for automorphisms fixing the zero section.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct AutBound(u64);

impl AutBound {
    pub const WORST_CASE: AutBound = AutBound(6);

    pub fn new(value: u64) -> Result<Self> {
        if matches!(value, 1 | 2 | 3 | 4 | 6) {
            Ok(AutBound(value))
        } else {
            Err(Error::AutBound { value })
        }
    }

    pub fn value(&self) -> u64 {
        self.0
    }
}

impl Default for AutBound {
    fn default() -> Self {
        AutBound::WORST_CASE
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ClassificationMode {
    /// Orbits of `i -> lambda - i`, induced by the inversion of `B`.
    /// These are candidate classes, not certified ones.
    InversionOrbits,
    /// Blocks of at most `aut` indices, realizing the certified bound.
    PaperBound,
}

impl fmt::Display for ClassificationMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ClassificationMode::InversionOrbits => "inversion_orbits",
            ClassificationMode::PaperBound => "paper_bound",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartnerClassification {
    pub lambda: u64,
    pub index_count: usize,
    pub mode: ClassificationMode,
    pub aut_bound: AutBound,
    pub classes: Vec<Vec<u64>>,
    /// `M_min = ceil(|I| / aut)`, or 1 when `lambda = 1`.
    pub certified_lower_bound: u64,
}

/// Result of the Möbius rigidity test on a typed marked configuration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RigidityReport {
    pub rigid: bool,
    pub symmetries: Symmetries,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Symmetries {
    /// Fewer than three marked points: the stabilizer has positive
    /// dimension.
    Continuous,
    /// All type-preserving Möbius maps of the marked set, identity first.
    Finite(Vec<Mobius>),
}

impl Symmetries {
    /// `None` for a continuous group.
    pub fn order(&self) -> Option<usize> {
        match self {
            Symmetries::Continuous => None,
            Symmetries::Finite(maps) => Some(maps.len()),
        }
    }
}

/// Computes every Möbius transformation mapping the typed marked set onto
/// itself.
///
/// With at least three points a symmetry is determined by where it sends
/// the first three marked points, so it suffices to try every ordered
/// triple of distinct targets with matching fibers.
pub fn rigidity_check(config: &MarkedConfig) -> RigidityReport {
    let entries = config.entries();
    if entries.len() < 3 {
        return RigidityReport {
            rigid: false,
            symmetries: Symmetries::Continuous,
        };
    }
    let src = [&entries[0], &entries[1], &entries[2]];
    let candidates = |k: usize| {
        entries
            .iter()
            .enumerate()
            .filter(move |(_, (_, f))| *f == src[k].1)
            .map(|(i, _)| i)
    };
    let mut maps = Vec::new();
    for i in candidates(0) {
        for j in candidates(1).filter(|&j| j != i) {
            for k in candidates(2).filter(|&k| k != i && k != j) {
                let Some(m) = Mobius::from_triples(
                    [&src[0].0, &src[1].0, &src[2].0],
                    [&entries[i].0, &entries[j].0, &entries[k].0],
                ) else {
                    continue;
                };
                let preserves = entries.iter().all(|(p, f)| {
                    let image = m.apply(p);
                    config.is_marked(&image) && config.fiber_at(&image) == *f
                });
                if preserves {
                    maps.push(m);
                }
            }
        }
    }
    // The identity assignment always survives; put it first.
    if let Some(pos) = maps.iter().position(Mobius::is_identity) {
        maps.swap(0, pos);
    }
    RigidityReport {
        rigid: maps.len() == 1,
        symmetries: Symmetries::Finite(maps),
    }
}

fn require_nonzero_kodaira(t: &TwistedSurface) -> Result<()> {
    if t.surface().kodaira_dimension()? == KodairaDimension::Zero {
        return Err(Error::KodairaZero);
    }
    Ok(())
}

/// All Fourier-Mukai partners of `t` up to isomorphism, as `J^b(t)` for
/// `b` in the partner index set, in increasing `b`.
pub fn enumerate_partners(t: &TwistedSurface) -> Result<Vec<TwistedSurface>> {
    require_nonzero_kodaira(t)?;
    let lambda = t.surface().lambda()?.value();
    if lambda == 1 {
        return Ok(vec![relative_jacobian_power(t, 0)?]);
    }
    PartnerIndexSet::new(lambda)
        .indices()
        .iter()
        .map(|&b| relative_jacobian_power(t, b as i64))
        .collect()
}

pub fn inversion_orbits(set: &PartnerIndexSet) -> Vec<Vec<u64>> {
    let lambda = set.lambda();
    set.indices()
        .iter()
        .filter(|&&i| i <= lambda - i)
        .map(|&i| {
            if i == lambda - i {
                vec![i]
            } else {
                vec![i, lambda - i]
            }
        })
        .collect()
}

/// Chunks `1, lambda-1, 2, lambda-2, ...` into blocks of `aut` indices. For
/// even `aut` every block is a union of inversion orbits.
pub fn bound_blocks(set: &PartnerIndexSet, aut: AutBound) -> Vec<Vec<u64>> {
    let order: Vec<u64> = inversion_orbits(set).into_iter().flatten().collect();
    order
        .chunks(aut.value() as usize)
        .map(|c| {
            let mut block = c.to_vec();
            block.sort_unstable();
            block
        })
        .collect()
}

pub fn classify_partners(
    t: &TwistedSurface,
    mode: ClassificationMode,
    aut: AutBound,
) -> Result<PartnerClassification> {
    if !rigidity_check(t.base().config()).rigid {
        return Err(Error::NotRigid {
            name: t.base().name().to_string(),
        });
    }
    require_nonzero_kodaira(t)?;
    let lambda = t.surface().lambda()?.value();
    if lambda == 1 {
        return Ok(PartnerClassification {
            lambda,
            index_count: 0,
            mode,
            aut_bound: aut,
            classes: vec![vec![0]],
            certified_lower_bound: 1,
        });
    }
    let set = PartnerIndexSet::new(lambda);
    let classes = match mode {
        ClassificationMode::InversionOrbits => inversion_orbits(&set),
        ClassificationMode::PaperBound => bound_blocks(&set, aut),
    };
    Ok(PartnerClassification {
        lambda,
        index_count: set.len(),
        mode,
        aut_bound: aut,
        classes,
        certified_lower_bound: (set.len() as u64).div_ceil(aut.value()),
    })
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    (2..)
        .take_while(|d| d * d <= n)
        .all(|d| !n.is_multiple_of(d))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum VerdictKind {
    Certified,
    Inconclusive,
}

/// Outcome of the full `S(p)` pipeline for a target class count `N`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub p: u64,
    #[serde(rename = "N")]
    pub n: u64,
    pub lambda: u64,
    pub index_count: usize,
    pub mode: ClassificationMode,
    pub classes: Vec<Vec<u64>>,
    #[serde(rename = "M_min")]
    pub m_min: u64,
    pub verdict: VerdictKind,
}

impl Verdict {
    pub fn is_certified(&self) -> bool {
        self.verdict == VerdictKind::Certified
    }
}

/// Builds `S(p)`, checks rationality and rigidity, and bounds the number of
/// pairwise non-isomorphic partners. Certified iff `p > 6(N - 1) + 1`.
pub fn verify_main_theorem(p: u64, n: u64) -> Result<Verdict> {
    if !is_prime(p) {
        return Err(Error::NotPrime { value: p });
    }
    if n == 0 {
        return Err(Error::Parse {
            what: "positive class count",
            input: n.to_string(),
        });
    }
    let s = s_of_p(p)?;
    if !s.surface().is_rational()? {
        return Err(Error::NonRationalBase {
            name: s.surface().name().to_string(),
        });
    }
    let c = classify_partners(&s, ClassificationMode::PaperBound, AutBound::WORST_CASE)?;
    let certified = p > 6 * (n - 1) + 1;
    debug_assert!(!certified || c.certified_lower_bound >= n);
    Ok(Verdict {
        p,
        n,
        lambda: c.lambda,
        index_count: c.index_count,
        mode: c.mode,
        classes: c.classes,
        m_min: c.certified_lower_bound,
        verdict: if certified {
            VerdictKind::Certified
        } else {
            VerdictKind::Inconclusive
        },
    })
}
