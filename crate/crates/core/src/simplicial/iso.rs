use crate::error::{Error, Result};
use crate::face::Face;

use super::Complex;

const LIMIT: usize = 25;

/// Whether some bijection of used vertices maps the facets of `a` onto those of `b`.
///
/// Vertices are matched by a refined invariant (facet-size profile plus the
/// multiset of neighbour profiles), then candidate maps are explored by
/// backtracking with 1-skeleton consistency checks. Exponential in the worst
/// case, so inputs are limited to 25 vertices.
pub fn isomorphic(a: &Complex, b: &Complex) -> Result<bool> {
    let (va, vb) = (a.vertices().to_vec(), b.vertices().to_vec());
    for n in [va.len(), vb.len()] {
        if n > LIMIT {
            return Err(Error::TooLargeForIsomorphism(n));
        }
    }
    if va.len() != vb.len() || a.facets().len() != b.facets().len() || a.f_vector() != b.f_vector() {
        return Ok(false);
    }
    let (ia, ib) = (invariants(a, &va), invariants(b, &vb));
    let mut sa = ia.clone();
    let mut sb = ib.clone();
    sa.sort();
    sb.sort();
    if sa != sb {
        return Ok(false);
    }
    // Most constrained vertices first.
    let mut order: Vec<usize> = (0..va.len()).collect();
    order.sort_by_key(|&i| (ia.iter().filter(|x| **x == ia[i]).count(), i));
    let target: std::collections::HashSet<Face> = b.facets().iter().copied().collect();
    let mut search = Search {
        a,
        b,
        va: &va,
        vb: &vb,
        ia: &ia,
        ib: &ib,
        order: &order,
        map: vec![usize::MAX; va.len()],
        used: vec![false; vb.len()],
        target: &target,
    };
    Ok(search.extend(0))
}

fn invariants(c: &Complex, verts: &[usize]) -> Vec<(Vec<usize>, Vec<Vec<usize>>)> {
    let profile = |v: usize| {
        let mut p: Vec<usize> = c.facets_containing(Face::singleton(v)).map(|f| f.len()).collect();
        p.sort();
        p
    };
    verts
        .iter()
        .map(|&v| {
            let nbrs = c
                .facets_containing(Face::singleton(v))
                .fold(Face::EMPTY, |acc, f| acc | f)
                .without(v);
            let mut np: Vec<Vec<usize>> = nbrs.iter().map(profile).collect();
            np.sort();
            (profile(v), np)
        })
        .collect()
}

struct Search<'a> {
    a: &'a Complex,
    b: &'a Complex,
    va: &'a [usize],
    vb: &'a [usize],
    ia: &'a [(Vec<usize>, Vec<Vec<usize>>)],
    ib: &'a [(Vec<usize>, Vec<Vec<usize>>)],
    order: &'a [usize],
    map: Vec<usize>,
    used: Vec<bool>,
    target: &'a std::collections::HashSet<Face>,
}

impl Search<'_> {
    fn adjacent(c: &Complex, u: usize, v: usize) -> bool {
        c.contains_face(Face::singleton(u).with(v))
    }

    fn extend(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return self.a.facets().iter().all(|f| {
                let image: Face = f
                    .iter()
                    .map(|v| self.vb[self.map[self.va.iter().position(|&x| x == v).unwrap()]])
                    .collect();
                self.target.contains(&image)
            });
        }
        let i = self.order[depth];
        for j in 0..self.vb.len() {
            if self.used[j] || self.ia[i] != self.ib[j] {
                continue;
            }
            let consistent = self.order[..depth].iter().all(|&k| {
                Self::adjacent(self.a, self.va[i], self.va[k]) == Self::adjacent(self.b, self.vb[j], self.vb[self.map[k]])
            });
            if !consistent {
                continue;
            }
            self.map[i] = j;
            self.used[j] = true;
            if self.extend(depth + 1) {
                return true;
            }
            self.used[j] = false;
            self.map[i] = usize::MAX;
        }
        false
    }
}
