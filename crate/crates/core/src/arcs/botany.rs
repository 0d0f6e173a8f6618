//! Tiles cut out by the b-arcs of a face, and the trunk/branch/root vocabulary
//! built on them.

use serde::Serialize;

use crate::error::{Error, Result};

use super::{disjoint, side_within, Arc, Surface};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Tile {
    Polygon(u32),
    Crown(u32),
    MobiusCrown(u32),
}

/// Nesting structure of the b-arcs of a face.
///
/// `tiles[0]` is the trunk, `tiles[k + 1]` the polygon tile directly under
/// `arcs[k]`. Dual-tree nodes are the tiles followed by the roots.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TileTree {
    pub surface: Surface,
    pub arcs: Vec<Arc>,
    pub parent: Vec<Option<usize>>,
    pub tiles: Vec<Tile>,
    pub branches: Vec<Arc>,
    /// Boundary edges `v -> v + 1` on the trunk, by starting vertex.
    pub roots: Vec<u32>,
    pub degree: usize,
    pub edges: Vec<(usize, usize)>,
}

impl TileTree {
    pub fn trunk(&self) -> Tile {
        self.tiles[0]
    }

    pub fn node_count(&self) -> usize {
        self.tiles.len() + self.roots.len()
    }

    /// Connected and acyclic.
    pub fn is_tree(&self) -> bool {
        let n = self.node_count();
        if self.edges.len() + 1 != n {
            return false;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(u) = stack.pop() {
            for &(a, b) in &self.edges {
                let other = if a == u { b } else if b == u { a } else { continue };
                if !seen[other] {
                    seen[other] = true;
                    stack.push(other);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Arcs whose tile has no other arc below it.
    pub fn leaves(&self) -> Vec<Arc> {
        (0..self.arcs.len())
            .filter(|&k| !self.parent.contains(&Some(k)))
            .map(|k| self.arcs[k])
            .collect()
    }

    /// Boundary vertices of the trunk, ascending.
    pub fn trunk_vertices(&self) -> Vec<u32> {
        let n = self.surface.boundary_vertices();
        (1..=n)
            .filter(|&v| {
                self.branches.iter().all(|b| {
                    let (p, w) = b.polygon_side(n).unwrap();
                    let d = (v as i64 - p as i64).rem_euclid(n as i64) as u32;
                    !(d > 0 && d < w)
                })
            })
            .collect()
    }
}

fn check_face(surface: &Surface, face: &[Arc]) -> Result<()> {
    if !surface.is_crown_like() {
        return Err(Error::InvalidSurface(format!("{surface} has no b-arcs")));
    }
    for (i, a) in face.iter().enumerate() {
        for b in &face[i + 1..] {
            if !disjoint(surface, a, b)? {
                return Err(Error::NotPairwiseDisjoint(a.to_string(), b.to_string()));
            }
        }
    }
    if let [a] = face {
        surface.check_arc(a)?;
    }
    Ok(())
}

/// Tile tree of the b-arcs of `face`; c-arcs in the face are ignored.
pub fn tile_tree(surface: &Surface, face: &[Arc]) -> Result<TileTree> {
    check_face(surface, face)?;
    let n = surface.boundary_vertices();
    let mut arcs: Vec<Arc> = face.iter().copied().filter(Arc::is_b_arc).collect();
    arcs.sort_by_key(|a| a.polygon_side(n));
    let sides: Vec<(u32, u32)> = arcs.iter().map(|a| a.polygon_side(n).unwrap()).collect();

    let parent: Vec<Option<usize>> = (0..arcs.len())
        .map(|k| {
            let (p, w) = sides[k];
            (0..arcs.len())
                .filter(|&j| j != k && side_within(p, w, sides[j].0, sides[j].1, n))
                .min_by_key(|&j| sides[j].1)
        })
        .collect();

    let mut tiles = Vec::with_capacity(arcs.len() + 1);
    let branches: Vec<Arc> = (0..arcs.len()).filter(|&k| parent[k].is_none()).map(|k| arcs[k]).collect();
    let roots: Vec<u32> = (1..=n)
        .filter(|&v| {
            branches.iter().all(|b| {
                let (p, w) = b.polygon_side(n).unwrap();
                (v as i64 - p as i64).rem_euclid(n as i64) as u32 >= w
            })
        })
        .collect();
    let degree = branches.len() + roots.len();
    tiles.push(match surface {
        Surface::Crown { .. } => Tile::Crown(degree as u32),
        _ => Tile::MobiusCrown(degree as u32),
    });
    let mut edges = Vec::new();
    for k in 0..arcs.len() {
        let children: Vec<usize> = (0..arcs.len()).filter(|&j| parent[j] == Some(k)).collect();
        let covered: u32 = children.iter().map(|&j| sides[j].1).sum();
        tiles.push(Tile::Polygon(1 + sides[k].1 - covered + children.len() as u32));
        edges.push((parent[k].map_or(0, |j| j + 1), k + 1));
    }
    let first_root = tiles.len();
    edges.extend((0..roots.len()).map(|r| (0, first_root + r)));
    Ok(TileTree {
        surface: *surface,
        arcs,
        parent,
        tiles,
        branches,
        roots,
        degree,
        edges,
    })
}

/// A nonempty boundary face whose branches are all leaves (no nesting).
pub fn is_sapling(surface: &Surface, face: &[Arc]) -> Result<bool> {
    let tree = tile_tree(surface, face)?;
    Ok(!face.is_empty() && face.iter().all(Arc::is_b_arc) && tree.parent.iter().all(Option::is_none))
}

/// Degree of the trunk of the b-part of `face`.
pub fn degree(surface: &Surface, face: &[Arc]) -> Result<usize> {
    Ok(tile_tree(surface, face)?.degree)
}

/// Alias kept for readability at call sites dealing with saplings.
pub fn sapling_degree(surface: &Surface, face: &[Arc]) -> Result<usize> {
    degree(surface, face)
}

/// Every sapling of a crown-like surface, as b-arc lists in canonical order.
pub fn enumerate_saplings(surface: &Surface) -> Result<Vec<Vec<Arc>>> {
    if !surface.is_crown_like() {
        return Err(Error::InvalidSurface(format!("{surface} has no b-arcs")));
    }
    let n = surface.boundary_vertices();
    let b_arcs: Vec<Arc> = super::enumerate_arcs(surface).into_iter().filter(Arc::is_b_arc).collect();
    let apart = |a: &Arc, b: &Arc| {
        let (p1, w1) = a.polygon_side(n).unwrap();
        let (p2, w2) = b.polygon_side(n).unwrap();
        let d = (p2 as i64 - p1 as i64).rem_euclid(n as i64) as u32;
        w1 <= d && d + w2 <= n
    };
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn grow(
        start: usize,
        b_arcs: &[Arc],
        current: &mut Vec<Arc>,
        out: &mut Vec<Vec<Arc>>,
        apart: &dyn Fn(&Arc, &Arc) -> bool,
    ) {
        for k in start..b_arcs.len() {
            if current.iter().all(|c| apart(c, &b_arcs[k])) {
                current.push(b_arcs[k]);
                out.push(current.clone());
                grow(k + 1, b_arcs, current, out, apart);
                current.pop();
            }
        }
    }
    grow(0, &b_arcs, &mut current, &mut out, &apart);
    Ok(out)
}

/// Fan of Möbius c-arcs at vertex `i`: `(i, j), ..., (i, k)`, or the full
/// fan triangulation at `i` when `i == j == k`.
pub fn fan(surface: &Surface, i: u32, j: u32, k: u32) -> Result<Vec<Arc>> {
    let Surface::MobiusCrown { n } = *surface else {
        return Err(Error::InvalidSurface(format!("fans live on Möbius crowns, not {surface}")));
    };
    let ok = |v: u32| (1..=n).contains(&v);
    if !(ok(i) && ok(j) && ok(k) && j <= k) {
        return Err(Error::FanOutOfRange(format!("({i}, {j}, {k}) on {surface}")));
    }
    let range = if i == j && j == k { 1..=n } else { j..=k };
    Ok(range.map(|t| Arc::mob(i, t)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(p: u32, q: u32) -> Arc {
        Arc::BArc { p, q }
    }

    #[test]
    fn loop_is_degree_one_sapling() {
        let s = Surface::MobiusCrown { n: 3 };
        let t = tile_tree(&s, &[b(1, 1)]).unwrap();
        assert_eq!(t.degree, 1);
        assert_eq!(t.branches, vec![b(1, 1)]);
        assert!(t.roots.is_empty());
        assert_eq!(t.trunk(), Tile::MobiusCrown(1));
        assert_eq!(t.tiles[1], Tile::Polygon(4));
        assert!(is_sapling(&s, &[b(1, 1)]).unwrap());
        assert!(t.is_tree());
    }

    #[test]
    fn minimal_arc_has_degree_n_minus_one() {
        let s = Surface::MobiusCrown { n: 4 };
        assert_eq!(degree(&s, &[b(4, 2)]).unwrap(), 3);
        assert_eq!(tile_tree(&s, &[b(4, 2)]).unwrap().trunk_vertices(), vec![2, 3, 4]);
    }

    #[test]
    fn empty_face_is_all_roots() {
        let s = Surface::Crown { n: 5 };
        let t = tile_tree(&s, &[]).unwrap();
        assert_eq!(t.degree, 5);
        assert_eq!(t.roots, vec![1, 2, 3, 4, 5]);
        assert!(t.branches.is_empty());
        assert_eq!(t.trunk(), Tile::Crown(5));
        assert!(!is_sapling(&s, &[]).unwrap());
        assert!(t.is_tree());
    }

    #[test]
    fn nested_arcs_are_not_a_sapling() {
        let s = Surface::MobiusCrown { n: 5 };
        let face = [b(1, 4), b(1, 3)];
        assert!(!is_sapling(&s, &face).unwrap());
        let t = tile_tree(&s, &face).unwrap();
        assert_eq!(t.branches, vec![b(1, 4)]);
        assert_eq!(t.leaves(), vec![b(1, 3)]);
        assert_eq!(t.degree, 1 + 2);
        assert!(t.is_tree());
        // Outer tile: the arc 1->4, inner arc 1->3, edge 3->4.
        assert_eq!(t.tiles.iter().filter(|x| **x == Tile::Polygon(3)).count(), 2);
    }

    #[test]
    fn two_degree_six_saplings_join_to_degree_four() {
        let s = Surface::MobiusCrown { n: 8 };
        let (x, y) = (b(1, 4), b(5, 8));
        assert_eq!(degree(&s, &[x]).unwrap(), 6);
        assert_eq!(degree(&s, &[y]).unwrap(), 6);
        assert!(is_sapling(&s, &[x, y]).unwrap());
        assert_eq!(degree(&s, &[x, y]).unwrap(), 4);
    }

    #[test]
    fn intersecting_face_rejected() {
        let s = Surface::MobiusCrown { n: 4 };
        assert!(matches!(
            tile_tree(&s, &[b(1, 3), b(2, 4)]),
            Err(Error::NotPairwiseDisjoint(..))
        ));
    }

    #[test]
    fn fans() {
        let s = Surface::MobiusCrown { n: 3 };
        assert_eq!(
            fan(&s, 2, 2, 2).unwrap(),
            vec![Arc::MobC(1, 2), Arc::MobC(2, 2), Arc::MobC(2, 3)]
        );
        assert_eq!(fan(&s, 1, 3, 3).unwrap(), vec![Arc::MobC(1, 3)]);
        assert!(fan(&s, 1, 3, 2).is_err());
        assert!(fan(&s, 4, 1, 1).is_err());
        assert!(fan(&Surface::Crown { n: 3 }, 1, 1, 1).is_err());
    }

    #[test]
    fn sapling_enumeration_small() {
        // Möbius(2): saplings are {M1}, {M2}.
        let s = Surface::MobiusCrown { n: 2 };
        assert_eq!(enumerate_saplings(&s).unwrap(), vec![vec![b(1, 1)], vec![b(2, 2)]]);
        for sap in enumerate_saplings(&Surface::MobiusCrown { n: 5 }).unwrap() {
            assert!(is_sapling(&Surface::MobiusCrown { n: 5 }, &sap).unwrap());
        }
    }
}
