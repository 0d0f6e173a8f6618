//! Marked surfaces and their arcs.
//!
//! Homotopy classes of arcs are encoded combinatorially. A b-arc is stored by
//! its polygon side, the clockwise boundary interval `p, p+1, ..., q` it cuts
//! off; its wrap length `W = ((q - p - 1) mod n) + 1` counts the boundary edges
//! on that side, and `W = n` (so `p = q`) is the loop `M_p`. On the Möbius
//! crown every pair of boundary vertices `i <= j` is joined by exactly one
//! c-arc, `i = j` being the one-sided loop `L_i`.
//!
//! Disjointness is decided from these encodings:
//!
//! * two b-arcs are disjoint iff their polygon sides are nested or meet in at
//!   most endpoints on the boundary circle;
//! * a c-arc misses a b-arc iff none of its endpoints lies strictly inside the
//!   b-arc's polygon side;
//! * Möbius c-arcs `{i, j}`, `{k, l}` are disjoint iff some labelling
//!   `(a, b)`, `(c, d)` of their endpoints (in either role) has `b <= d <= a <= c`;
//! * strip chords `(i, j)`, `(k, l)` are disjoint iff `(i - k)` and `(j - l)`
//!   never have strictly opposite signs.

mod botany;
mod complex;

pub use botany::{degree, enumerate_saplings, fan, is_sapling, sapling_degree, tile_tree, Tile, TileTree};
pub use complex::{arc_complex, arc_complex_filtered, boundary_arc_complex, disjointness_graph, inner_arc_complex, ArcComplex};

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A marked surface.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Surface {
    /// Disk with `n` boundary vertices labelled `1..=n` clockwise.
    Polygon { n: u32 },
    /// Disk with `n` boundary vertices and one interior marked point `0`.
    Crown { n: u32 },
    /// Möbius strip with `n` boundary vertices.
    #[serde(rename = "mobius")]
    MobiusCrown { n: u32 },
    /// Quadrilateral with blue vertices `1..=m` on the bottom and red vertices
    /// `1..=n` on the top, both left to right.
    #[serde(rename = "strip")]
    IntegralStrip { m: u32, n: u32 },
}

impl Surface {
    pub fn validate(&self) -> Result<()> {
        let ok = match *self {
            Surface::Polygon { n } | Surface::Crown { n } | Surface::MobiusCrown { n } => n >= 1,
            Surface::IntegralStrip { m, n } => m >= 1 && n >= 1,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidSurface(format!("{self}: vertex counts must be positive")))
        }
    }

    /// Number of vertices on the marked boundary circle (`m + n` for a strip).
    pub fn boundary_vertices(&self) -> u32 {
        match *self {
            Surface::Polygon { n } | Surface::Crown { n } | Surface::MobiusCrown { n } => n,
            Surface::IntegralStrip { m, n } => m + n,
        }
    }

    /// Short name used in file names and DOT graph ids.
    pub fn slug(&self) -> String {
        match *self {
            Surface::Polygon { n } => format!("polygon_{n}"),
            Surface::Crown { n } => format!("crown_{n}"),
            Surface::MobiusCrown { n } => format!("mobius_{n}"),
            Surface::IntegralStrip { m, n } => format!("strip_{m}_{n}"),
        }
    }

    pub fn is_crown_like(&self) -> bool {
        matches!(self, Surface::Crown { .. } | Surface::MobiusCrown { .. })
    }

    pub fn is_valid_arc(&self, arc: &Arc) -> bool {
        let in_range = |v: u32, n: u32| (1..=n).contains(&v);
        match (*self, *arc) {
            (Surface::Polygon { n }, Arc::PolyDiag(i, j)) => {
                n >= 4 && in_range(i, n) && in_range(j, n) && i < j && j - i >= 2 && j - i <= n - 2
            }
            (Surface::Crown { n }, Arc::CrownC(i)) => in_range(i, n),
            (Surface::Crown { n } | Surface::MobiusCrown { n }, Arc::BArc { p, q }) => {
                in_range(p, n) && in_range(q, n) && wrap_length(p, q, n) >= 2
            }
            (Surface::MobiusCrown { n }, Arc::MobC(i, j)) => in_range(i, n) && in_range(j, n) && i <= j,
            (Surface::IntegralStrip { m, n }, Arc::StripChord(i, j)) => {
                in_range(i, m) && in_range(j, n) && (i, j) != (1, 1) && (i, j) != (m, n)
            }
            _ => false,
        }
    }

    fn check_arc(&self, arc: &Arc) -> Result<()> {
        if self.is_valid_arc(arc) {
            Ok(())
        } else {
            Err(Error::InvalidArc {
                arc: arc.to_string(),
                surface: self.to_string(),
            })
        }
    }
}

impl fmt::Display for Surface {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Surface::Polygon { n } => write!(f, "Polygon({n})"),
            Surface::Crown { n } => write!(f, "Crown({n})"),
            Surface::MobiusCrown { n } => write!(f, "MobiusCrown({n})"),
            Surface::IntegralStrip { m, n } => write!(f, "IntegralStrip({m}, {n})"),
        }
    }
}

/// One homotopy class of nontrivial arcs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Arc {
    /// Polygon diagonal `i < j`.
    PolyDiag(u32, u32),
    /// Crown c-arc from the interior point to boundary vertex `i`.
    CrownC(u32),
    /// Crown or Möbius b-arc with polygon side running clockwise from `p` to `q`.
    BArc { p: u32, q: u32 },
    /// Möbius c-arc joining `i <= j`; `i == j` is the loop `L_i`.
    MobC(u32, u32),
    /// Strip chord from blue vertex `i` to red vertex `j`.
    StripChord(u32, u32),
}

/// Boundary edges on the polygon side of the b-arc `p -> q` on an `n`-gon boundary.
pub fn wrap_length(p: u32, q: u32, n: u32) -> u32 {
    let (p, q, n) = (p as i64, q as i64, n as i64);
    ((q - p - 1).rem_euclid(n) + 1) as u32
}

/// Whether boundary vertex `v` lies strictly inside the polygon side starting
/// at `p` with wrap length `w`.
fn strictly_inside(v: u32, p: u32, w: u32, n: u32) -> bool {
    let d = (v as i64 - p as i64).rem_euclid(n as i64) as u32;
    d > 0 && d < w
}

impl Arc {
    /// Möbius c-arc with endpoints in either order.
    pub fn mob(i: u32, j: u32) -> Arc {
        Arc::MobC(i.min(j), i.max(j))
    }

    pub fn is_c_arc(&self) -> bool {
        matches!(self, Arc::CrownC(_) | Arc::MobC(..))
    }

    pub fn is_b_arc(&self) -> bool {
        matches!(self, Arc::BArc { .. })
    }

    /// Maximal arcs: both endpoints on the same vertex.
    pub fn is_loop(&self) -> bool {
        match *self {
            Arc::BArc { p, q } => p == q,
            Arc::MobC(i, j) => i == j,
            _ => false,
        }
    }

    /// Polygon side `(start, wrap length)` of a b-arc on a boundary with `n` vertices.
    pub fn polygon_side(&self, n: u32) -> Option<(u32, u32)> {
        match *self {
            Arc::BArc { p, q } => Some((p, wrap_length(p, q, n))),
            _ => None,
        }
    }

    /// Endpoints on the marked boundary, ignoring the crown's interior point.
    pub fn endpoints(&self) -> (u32, u32) {
        match *self {
            Arc::PolyDiag(i, j) | Arc::MobC(i, j) | Arc::StripChord(i, j) => (i, j),
            Arc::CrownC(i) => (i, i),
            Arc::BArc { p, q } => (p, q),
        }
    }

    /// Shift every boundary label by `k` (mod `n`). Not defined on strips.
    pub fn rotate(&self, surface: &Surface, k: u32) -> Result<Arc> {
        let n = match *surface {
            Surface::IntegralStrip { .. } => {
                return Err(Error::InvalidSurface("rotation is not defined on integral strips".into()))
            }
            _ => surface.boundary_vertices(),
        };
        surface.check_arc(self)?;
        let r = |v: u32| (v - 1 + k) % n + 1;
        Ok(match *self {
            Arc::PolyDiag(i, j) => Arc::PolyDiag(r(i).min(r(j)), r(i).max(r(j))),
            Arc::CrownC(i) => Arc::CrownC(r(i)),
            Arc::BArc { p, q } => Arc::BArc { p: r(p), q: r(q) },
            Arc::MobC(i, j) => Arc::mob(r(i), r(j)),
            Arc::StripChord(..) => unreachable!("validated above"),
        })
    }

    /// Mirror the boundary labels, `v -> n + 1 - v` (both colours on a strip).
    pub fn reflect(&self, surface: &Surface) -> Result<Arc> {
        surface.check_arc(self)?;
        Ok(match (*surface, *self) {
            (Surface::IntegralStrip { m, n }, Arc::StripChord(i, j)) => Arc::StripChord(m + 1 - i, n + 1 - j),
            (s, arc) => {
                let n = s.boundary_vertices();
                let r = |v: u32| n + 1 - v;
                match arc {
                    Arc::PolyDiag(i, j) => Arc::PolyDiag(r(j), r(i)),
                    Arc::CrownC(i) => Arc::CrownC(r(i)),
                    // Reflection reverses orientation, so the clockwise side p -> q
                    // becomes r(q) -> r(p).
                    Arc::BArc { p, q } => Arc::BArc { p: r(q), q: r(p) },
                    Arc::MobC(i, j) => Arc::mob(r(i), r(j)),
                    Arc::StripChord(..) => unreachable!("validated above"),
                }
            }
        })
    }

    pub fn label(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for Arc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Arc::PolyDiag(i, j) => write!(f, "d:{i}-{j}"),
            Arc::CrownC(i) => write!(f, "c:{i}"),
            Arc::BArc { p, q } if p == q => write!(f, "M:{p}"),
            Arc::BArc { p, q } => write!(f, "b:{p}-{q}"),
            Arc::MobC(i, j) if i == j => write!(f, "L:{i}"),
            Arc::MobC(i, j) => write!(f, "cc:{i}-{j}"),
            Arc::StripChord(i, j) => write!(f, "strip:{i}-{j}"),
        }
    }
}

impl Serialize for Arc {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl FromStr for Arc {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Schema {
            path: "label".into(),
            message: format!("unrecognised arc label {s:?}"),
        };
        let (tag, rest) = s.split_once(':').ok_or_else(bad)?;
        let one = |r: &str| r.parse::<u32>().map_err(|_| bad());
        let two = |r: &str| -> Result<(u32, u32)> {
            let (a, b) = r.split_once('-').ok_or_else(bad)?;
            Ok((one(a)?, one(b)?))
        };
        Ok(match tag {
            "d" => {
                let (i, j) = two(rest)?;
                Arc::PolyDiag(i, j)
            }
            "c" => Arc::CrownC(one(rest)?),
            "M" => {
                let p = one(rest)?;
                Arc::BArc { p, q: p }
            }
            "b" => {
                let (p, q) = two(rest)?;
                Arc::BArc { p, q }
            }
            "L" => {
                let i = one(rest)?;
                Arc::MobC(i, i)
            }
            "cc" => {
                let (i, j) = two(rest)?;
                Arc::MobC(i, j)
            }
            "strip" => {
                let (i, j) = two(rest)?;
                Arc::StripChord(i, j)
            }
            _ => return Err(bad()),
        })
    }
}

/// Every nontrivial arc class of `surface`, once each, in canonical order:
///
/// * polygon: diagonals `(i, j)` lexicographically;
/// * crown: `c_1..c_n`, then b-arcs by `(p, W)` for `W = 2..=n`;
/// * Möbius crown: c-arcs `(i, j)`, `i <= j`, lexicographically, then b-arcs by `(p, W)`;
/// * strip: chords `(i, j)` lexicographically, corners `(1, 1)` and `(m, n)` excluded.
pub fn enumerate_arcs(surface: &Surface) -> Vec<Arc> {
    let mut arcs = Vec::new();
    let b_arcs = |n: u32, arcs: &mut Vec<Arc>| {
        for p in 1..=n {
            for w in 2..=n {
                arcs.push(Arc::BArc { p, q: (p - 1 + w) % n + 1 });
            }
        }
    };
    match *surface {
        Surface::Polygon { n } => {
            for i in 1..=n {
                for j in i + 2..=n {
                    if !(i == 1 && j == n) {
                        arcs.push(Arc::PolyDiag(i, j));
                    }
                }
            }
        }
        Surface::Crown { n } => {
            arcs.extend((1..=n).map(Arc::CrownC));
            b_arcs(n, &mut arcs);
        }
        Surface::MobiusCrown { n } => {
            for i in 1..=n {
                arcs.extend((i..=n).map(|j| Arc::MobC(i, j)));
            }
            b_arcs(n, &mut arcs);
        }
        Surface::IntegralStrip { m, n } => {
            for i in 1..=m {
                for j in 1..=n {
                    let arc = Arc::StripChord(i, j);
                    if surface.is_valid_arc(&arc) {
                        arcs.push(arc);
                    }
                }
            }
        }
    }
    arcs
}

/// Whether two distinct arc classes of `surface` have disjoint representatives.
pub fn disjoint(surface: &Surface, a: &Arc, b: &Arc) -> Result<bool> {
    surface.check_arc(a)?;
    surface.check_arc(b)?;
    if a == b {
        return Err(Error::IdenticalArcs(a.to_string()));
    }
    let n = surface.boundary_vertices();
    Ok(match (*a, *b) {
        (Arc::PolyDiag(i, j), Arc::PolyDiag(k, l)) => !((i < k && k < j && j < l) || (k < i && i < l && l < j)),
        (Arc::StripChord(i, j), Arc::StripChord(k, l)) => (i <= k && j <= l) || (i >= k && j >= l),
        (Arc::BArc { .. }, Arc::BArc { .. }) => {
            let (p1, w1) = a.polygon_side(n).unwrap();
            let (p2, w2) = b.polygon_side(n).unwrap();
            sides_compatible(p1, w1, p2, w2, n)
        }
        (Arc::BArc { p, q }, c) | (c, Arc::BArc { p, q }) => {
            let w = wrap_length(p, q, n);
            let (i, j) = c.endpoints();
            !strictly_inside(i, p, w, n) && !strictly_inside(j, p, w, n)
        }
        (Arc::CrownC(_), Arc::CrownC(_)) => true,
        (Arc::MobC(i, j), Arc::MobC(k, l)) => mobius_c_disjoint((i, j), (k, l)),
        _ => unreachable!("both arcs validated on the same surface"),
    })
}

/// Two b-arc polygon sides on the boundary circle are nested or meet in at
/// most endpoints. Equivalent to the universal-cover interval test: lifts
/// `[p, p + W]` are contained in a translate of one another or no translates
/// overlap in their interiors.
pub(crate) fn sides_compatible(p1: u32, w1: u32, p2: u32, w2: u32, n: u32) -> bool {
    let d = (p2 as i64 - p1 as i64).rem_euclid(n as i64) as u32;
    let e = (p1 as i64 - p2 as i64).rem_euclid(n as i64) as u32;
    let apart = w1 <= d && d + w2 <= n;
    let second_inside = d + w2 <= w1;
    let first_inside = e + w1 <= w2;
    apart || second_inside || first_inside
}

/// Side `(p2, w2)` lies inside side `(p1, w1)`.
pub(crate) fn side_within(p2: u32, w2: u32, p1: u32, w1: u32, n: u32) -> bool {
    let d = (p2 as i64 - p1 as i64).rem_euclid(n as i64) as u32;
    d + w2 <= w1
}

fn mobius_c_disjoint(x: (u32, u32), y: (u32, u32)) -> bool {
    let orders = |(i, j): (u32, u32)| [(i, j), (j, i)];
    [(x, y), (y, x)].into_iter().any(|(first, second)| {
        orders(first)
            .into_iter()
            .any(|(a, b)| orders(second).into_iter().any(|(c, d)| b <= d && d <= a && a <= c))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mob(n: u32) -> Surface {
        Surface::MobiusCrown { n }
    }

    #[test]
    fn counts() {
        assert_eq!(enumerate_arcs(&mob(1)), vec![Arc::MobC(1, 1)]);
        assert!(enumerate_arcs(&Surface::Polygon { n: 3 }).is_empty());
        let crown3 = enumerate_arcs(&Surface::Crown { n: 3 });
        assert_eq!(crown3.len(), 9);
        assert_eq!(crown3.iter().filter(|a| a.is_c_arc()).count(), 3);
        assert_eq!(enumerate_arcs(&mob(2)).len(), 5);
        assert_eq!(enumerate_arcs(&Surface::Crown { n: 1 }), vec![Arc::CrownC(1)]);
        assert_eq!(enumerate_arcs(&Surface::IntegralStrip { m: 3, n: 2 }).len(), 4);
        for n in 1..=8 {
            assert_eq!(enumerate_arcs(&mob(n)).len() as u32, n * (3 * n - 1) / 2);
        }
    }

    #[test]
    fn documented_witness_pairs() {
        for n in 2..=6 {
            let s = mob(n);
            assert!(!disjoint(&s, &Arc::MobC(1, 1), &Arc::MobC(2, 2)).unwrap());
        }
        let s = mob(4);
        // a_3^1: polygon side 3 -> 4 -> 1
        assert!(!disjoint(&s, &Arc::BArc { p: 3, q: 1 }, &Arc::MobC(1, 4)).unwrap());
        assert!(disjoint(&s, &Arc::MobC(1, 3), &Arc::MobC(2, 4)).unwrap());
        for n in 2..=6 {
            let s = Surface::Crown { n };
            for i in 1..=n {
                assert!(disjoint(&s, &Arc::BArc { p: i, q: i }, &Arc::CrownC(i)).unwrap());
            }
        }
    }

    #[test]
    fn identical_and_foreign_arcs_rejected() {
        let s = mob(3);
        assert_eq!(
            disjoint(&s, &Arc::MobC(1, 2), &Arc::MobC(1, 2)),
            Err(Error::IdenticalArcs("cc:1-2".into()))
        );
        assert!(disjoint(&s, &Arc::CrownC(1), &Arc::MobC(1, 2)).is_err());
        assert!(disjoint(&mob(1), &Arc::BArc { p: 1, q: 1 }, &Arc::MobC(1, 1)).is_err());
        let strip = Surface::IntegralStrip { m: 3, n: 2 };
        assert!(!strip.is_valid_arc(&Arc::StripChord(1, 1)));
        assert!(!strip.is_valid_arc(&Arc::StripChord(3, 2)));
        assert!(!Surface::Polygon { n: 5 }.is_valid_arc(&Arc::PolyDiag(1, 2)));
    }

    #[test]
    fn labels_round_trip() {
        for s in [mob(4), Surface::Crown { n: 4 }, Surface::Polygon { n: 6 }, Surface::IntegralStrip { m: 3, n: 4 }] {
            for arc in enumerate_arcs(&s) {
                assert_eq!(arc.label().parse::<Arc>().unwrap(), arc);
            }
        }
        assert_eq!(Arc::BArc { p: 2, q: 2 }.label(), "M:2");
        assert_eq!(Arc::MobC(3, 3).label(), "L:3");
        assert!("x:1".parse::<Arc>().is_err());
    }

    #[test]
    fn surface_json_shape() {
        let json = serde_json::to_string(&Surface::IntegralStrip { m: 2, n: 3 }).unwrap();
        assert_eq!(json, r#"{"kind":"strip","m":2,"n":3}"#);
        let s: Surface = serde_json::from_str(r#"{"kind":"mobius","n":4}"#).unwrap();
        assert_eq!(s, mob(4));
        assert!(Surface::Crown { n: 0 }.validate().is_err());
    }
}
