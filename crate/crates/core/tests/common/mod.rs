//! Test-only oracles, written without touching the library's Möbius code.
#![allow(dead_code)]

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::Rng;
use twistfm::{BasePoint, FiberKind, KodairaFiber, MarkedConfig};

/// A point of `P^1` in homogeneous integer coordinates `(x : y)`; infinity is
/// `(1 : 0)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Hom {
    pub x: i128,
    pub y: i128,
}

impl Hom {
    pub fn finite(num: i64, den: i64) -> Self {
        assert!(den > 0);
        Hom {
            x: num as i128,
            y: den as i128,
        }
    }

    pub const INF: Hom = Hom { x: 1, y: 0 };

    pub fn to_base_point(self) -> BasePoint {
        if self.y == 0 {
            BasePoint::Infinity
        } else {
            format!("{}/{}", self.x, self.y).parse().unwrap()
        }
    }

    fn same_point(self, o: Hom) -> bool {
        det(self, o) == 0
    }
}

fn det(a: Hom, b: Hom) -> i128 {
    a.x * b.y - a.y * b.x
}

/// Does `(a, b, c, d)` have the same cross-ratio as `(a2, b2, c2, d2)`?
/// All four points of each quadruple are distinct.
fn same_cross_ratio(q: [Hom; 4], r: [Hom; 4]) -> bool {
    let [a, b, c, d] = q;
    let [a2, b2, c2, d2] = r;
    det(a, c) * det(b, d) * det(a2, d2) * det(b2, c2)
        == det(a2, c2) * det(b2, d2) * det(a, d) * det(b, c)
}

/// A marked point with an opaque type label.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Typed {
    pub point: Hom,
    pub label: u8,
}

/// Every type-preserving Möbius symmetry of the marked set, as a
/// permutation of indices. `None` when fewer than three points are marked.
///
/// Tries every ordered source triple against every ordered target triple;
/// the image of any further point `z` is the unique `w` with
/// `cr(x1, x2, x3, z) = cr(y1, y2, y3, w)`.
pub fn brute_force_symmetries(points: &[Typed]) -> Option<BTreeSet<Vec<usize>>> {
    let n = points.len();
    if n < 3 {
        return None;
    }
    let triples: Vec<[usize; 3]> = (0..n)
        .flat_map(|i| (0..n).flat_map(move |j| (0..n).map(move |k| [i, j, k])))
        .filter(|[i, j, k]| i != j && j != k && i != k)
        .collect();
    let mut found = BTreeSet::new();
    for src in &triples {
        for dst in &triples {
            if (0..3).any(|t| points[src[t]].label != points[dst[t]].label) {
                continue;
            }
            let mut perm = vec![usize::MAX; n];
            for t in 0..3 {
                perm[src[t]] = dst[t];
            }
            let mut ok = true;
            for z in 0..n {
                if src.contains(&z) {
                    continue;
                }
                let q = [
                    points[src[0]].point,
                    points[src[1]].point,
                    points[src[2]].point,
                    points[z].point,
                ];
                let image = (0..n).filter(|w| !dst.contains(w)).find(|&w| {
                    let r = [
                        points[dst[0]].point,
                        points[dst[1]].point,
                        points[dst[2]].point,
                        points[w].point,
                    ];
                    same_cross_ratio(q, r)
                });
                match image {
                    Some(w) if points[w].label == points[z].label => perm[z] = w,
                    _ => {
                        ok = false;
                        break;
                    }
                }
            }
            if ok {
                found.insert(perm);
            }
        }
    }
    Some(found)
}

pub fn label_fiber(label: u8) -> KodairaFiber {
    let kind = match label {
        0 => FiberKind::I(1),
        1 => FiberKind::I(2),
        2 => FiberKind::II,
        _ => FiberKind::IIIStar,
    };
    KodairaFiber::simple(kind)
}

pub fn to_config(points: &[Typed]) -> MarkedConfig {
    MarkedConfig::new(
        points
            .iter()
            .map(|t| (t.point.to_base_point(), label_fiber(t.label))),
    )
    .unwrap()
}

/// Permutation of `points` induced by a map on base points.
pub fn induced_permutation(points: &[Typed], map: impl Fn(&BasePoint) -> BasePoint) -> Vec<usize> {
    let bases: Vec<BasePoint> = points.iter().map(|t| t.point.to_base_point()).collect();
    bases
        .iter()
        .map(|p| {
            let image = map(p);
            bases
                .iter()
                .position(|q| *q == image)
                .expect("symmetry maps marked points to marked points")
        })
        .collect()
}

/// Points with many coincidental symmetries, mixed with random ones.
pub fn random_config<R: Rng>(rng: &mut R) -> Vec<Typed> {
    let symmetric = [
        Hom::finite(0, 1),
        Hom::INF,
        Hom::finite(1, 1),
        Hom::finite(-1, 1),
        Hom::finite(2, 1),
        Hom::finite(1, 2),
        Hom::finite(-2, 1),
        Hom::finite(-1, 2),
        Hom::finite(3, 1),
        Hom::finite(1, 3),
        Hom::finite(-3, 1),
        Hom::finite(-1, 3),
    ];
    let n = rng.gen_range(3..=8);
    let types = rng.gen_range(1..=4u8);
    let mut pool: Vec<Hom> = symmetric.to_vec();
    if rng.gen_bool(0.4) {
        for _ in 0..4 {
            let h = Hom::finite(rng.gen_range(-20..=20), rng.gen_range(1..=9));
            if !pool.iter().any(|p| p.same_point(h)) {
                pool.push(h);
            }
        }
    }
    pool.shuffle(rng);
    pool.truncate(n);
    pool.into_iter()
        .map(|point| Typed {
            point,
            label: rng.gen_range(0..types),
        })
        .collect()
}

/// Fewest blocks of size at most `cap` covering `n` items, by dynamic
/// programming over block sizes.
pub fn min_blocks(n: usize, cap: usize) -> usize {
    let mut best = vec![usize::MAX; n + 1];
    best[0] = 0;
    for k in 1..=n {
        for s in 1..=cap.min(k) {
            if best[k - s] != usize::MAX {
                best[k] = best[k].min(best[k - s] + 1);
            }
        }
    }
    best[n]
}

pub fn primes_below(n: u64) -> Vec<u64> {
    let mut sieve = vec![true; n as usize];
    let mut out = Vec::new();
    for i in 2..n as usize {
        if sieve[i] {
            out.push(i as u64);
            let mut j = i * i;
            while j < n as usize {
                sieve[j] = false;
                j += i;
            }
        }
    }
    out
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}
