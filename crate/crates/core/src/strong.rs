//! Strong collapses: removal of dominated vertices, cores, and the conversion
//! of strong collapses into elementary ones.
//!
//! A vertex `v` is dominated by `w != v` when every facet containing `v` also
//! contains `w`. Removing such a vertex is a strong collapse.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::collapse::CollapseTrace;
use crate::error::{Error, Result};
use crate::face::Face;
use crate::simplicial::Complex;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StrongStep {
    pub removed: usize,
    pub witness: usize,
}

/// Ordered dominated-vertex removals. Serializes as a bare JSON list.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct StrongTrace {
    pub steps: Vec<StrongStep>,
}

impl StrongTrace {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn push(&mut self, removed: usize, witness: usize) {
        self.steps.push(StrongStep { removed, witness });
    }

    pub fn append(&mut self, other: StrongTrace) {
        self.steps.extend(other.steps);
    }

    pub fn iter(&self) -> std::slice::Iter<'_, StrongStep> {
        self.steps.iter()
    }

    pub fn removed(&self) -> Face {
        self.steps.iter().map(|s| s.removed).collect()
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("trace serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::InvalidTrace(e.to_string()))
    }
}

impl<'a> IntoIterator for &'a StrongTrace {
    type Item = &'a StrongStep;
    type IntoIter = std::slice::Iter<'a, StrongStep>;

    fn into_iter(self) -> Self::IntoIter {
        self.steps.iter()
    }
}

/// Every vertex other than `v` lying in all facets through `v`.
pub fn dominators(c: &Complex, v: usize) -> Face {
    let mut it = c.facets_containing(Face::singleton(v));
    match it.next() {
        None => Face::EMPTY,
        Some(first) => it.fold(first, |acc, f| acc & f).without(v),
    }
}

pub fn is_dominated_by(c: &Complex, v: usize, w: usize) -> bool {
    v != w && dominators(c, v).contains(w)
}

/// Dominated vertices in id order, each with its lowest witness.
pub fn dominated_vertices(c: &Complex) -> Vec<(usize, usize)> {
    c.vertices()
        .iter()
        .filter_map(|v| dominators(c, v).min_vertex().map(|w| (v, w)))
        .collect()
}

/// Deletes `v`, which must be dominated.
pub fn remove_dominated(c: &Complex, v: usize) -> Result<Complex> {
    if dominators(c, v).is_empty() {
        return Err(Error::Undominated(v));
    }
    Ok(c.delete_unchecked(Face::singleton(v)))
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum CoreOrder {
    /// Always remove the lowest dominated vertex.
    #[default]
    Canonical,
    /// Pick uniformly among dominated vertices with a seeded generator.
    Random(u64),
}

/// Removes dominated vertices until none is left.
pub fn core(c: &Complex, order: CoreOrder) -> (Complex, StrongTrace) {
    let mut rng = match order {
        CoreOrder::Canonical => None,
        CoreOrder::Random(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
    };
    let mut cur = c.clone();
    let mut trace = StrongTrace::new();
    loop {
        let candidates = dominated_vertices(&cur);
        let pick = match rng.as_mut() {
            None => candidates.first().copied(),
            Some(rng) => candidates.choose(rng).copied(),
        };
        let Some((v, w)) = pick else { break };
        cur = cur.delete_unchecked(Face::singleton(v));
        trace.push(v, w);
    }
    (cur, trace)
}

/// Replays a strong trace, checking each domination, and returns the terminal complex.
pub fn verify_strong_trace(c: &Complex, t: &StrongTrace) -> Result<Complex> {
    let mut cur = c.clone();
    for (step, s) in t.iter().enumerate() {
        if !is_dominated_by(&cur, s.removed, s.witness) {
            return Err(Error::NotDominated {
                step,
                vertex: s.removed,
                witness: s.witness,
            });
        }
        cur = cur.delete_unchecked(Face::singleton(s.removed));
    }
    Ok(cur)
}

/// True iff the core is a single vertex. Cores are unique up to isomorphism,
/// so the canonical greedy order decides the question.
pub fn is_strongly_collapsible(c: &Complex) -> (bool, StrongTrace) {
    let (k, t) = core(c, CoreOrder::Canonical);
    (k.vertex_count() == 1, t)
}

/// Rewrites each removal of `v` with witness `w` as the collapses
/// `(v ∪ λ, v ∪ w ∪ λ)` over the faces `λ` of the link of `v` avoiding `w`,
/// largest first.
pub fn strong_to_elementary(c: &Complex, t: &StrongTrace) -> Result<CollapseTrace> {
    let mut cur = c.clone();
    let mut out = CollapseTrace::new();
    for (step, s) in t.iter().enumerate() {
        let (v, w) = (s.removed, s.witness);
        if !is_dominated_by(&cur, v, w) {
            return Err(Error::NotDominated { step, vertex: v, witness: w });
        }
        let link = cur.link(Face::singleton(v))?;
        let mut lambdas: Vec<Face> = link.faces().into_iter().filter(|f| !f.contains(w)).collect();
        lambdas.push(Face::EMPTY);
        for lambda in lambdas {
            let free = lambda.with(v);
            out.push(free, free.with(w));
        }
        cur = cur.delete_unchecked(Face::singleton(v));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::collapse::verify_trace;

    fn f(v: &[usize]) -> Face {
        v.iter().collect()
    }

    #[test]
    fn simplex_vertices_are_all_dominated() {
        let c = Complex::simplex(4);
        assert_eq!(dominated_vertices(&c), vec![(0, 1), (1, 0), (2, 0), (3, 0)]);
        let (k, t) = core(&c, CoreOrder::Canonical);
        assert_eq!(k.vertex_count(), 1);
        assert_eq!(t.len(), 3);
    }

    #[test]
    fn edge_to_elementary() {
        let c = Complex::simplex(2);
        let mut t = StrongTrace::new();
        t.push(0, 1);
        let e = strong_to_elementary(&c, &t).unwrap();
        assert_eq!(e.steps.len(), 1);
        assert_eq!((e.steps[0].free, e.steps[0].coface), (f(&[0]), f(&[0, 1])));
    }

    #[test]
    fn cycle_is_its_own_core() {
        let c = Complex::from_facets((0..4).map(|i| vec![i, (i + 1) % 4])).unwrap();
        assert!(dominated_vertices(&c).is_empty());
        assert!(matches!(remove_dominated(&c, 0), Err(Error::Undominated(0))));
        assert!(!is_strongly_collapsible(&c).0);
    }

    #[test]
    fn random_core_replays() {
        let c = Complex::from_facets([vec![0usize, 1, 2], vec![1, 2, 3], vec![3, 4], vec![4, 5, 6]]).unwrap();
        for seed in 0..5 {
            let (k, t) = core(&c, CoreOrder::Random(seed));
            assert_eq!(verify_strong_trace(&c, &t).unwrap(), k);
            assert_eq!(k.vertex_count(), 1);
            let e = strong_to_elementary(&c, &t).unwrap();
            assert_eq!(verify_trace(&c, &e).unwrap(), k);
        }
    }

    #[test]
    fn bad_witness_is_rejected() {
        let c = Complex::from_facets([[0usize, 1], [1, 2]]).unwrap();
        let mut t = StrongTrace::new();
        t.push(1, 0);
        assert!(matches!(verify_strong_trace(&c, &t), Err(Error::NotDominated { step: 0, .. })));
    }

    #[test]
    fn trace_json_shape() {
        let mut t = StrongTrace::new();
        t.push(3, 1);
        let v: serde_json::Value = serde_json::from_str(&t.to_json()).unwrap();
        assert_eq!(v, serde_json::json!([{"removed": 3, "witness": 1}]));
    }
}
