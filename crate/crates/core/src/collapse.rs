//! Elementary collapses and the trace transformers built on them.
//!
//! A collapse step is a pair `(free, coface)` where `coface` is the only
//! maximal face of the current complex containing `free`. Applying it deletes
//! every face containing `free`.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::face::Face;
use crate::simplicial::Complex;

/// Default node ceiling for [`is_collapsible`].
pub const DEFAULT_BUDGET: u64 = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CollapsePair {
    pub free: Face,
    pub coface: Face,
}

impl CollapsePair {
    pub fn new(free: Face, coface: Face) -> Self {
        CollapsePair { free, coface }
    }
}

/// An ordered list of collapse steps. Serializes as a bare JSON list.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CollapseTrace {
    pub steps: Vec<CollapsePair>,
}

impl CollapseTrace {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn push(&mut self, free: Face, coface: Face) {
        self.steps.push(CollapsePair { free, coface });
    }

    pub fn append(&mut self, other: CollapseTrace) {
        self.steps.extend(other.steps);
    }

    pub fn iter(&self) -> std::slice::Iter<'_, CollapsePair> {
        self.steps.iter()
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

impl FromIterator<CollapsePair> for CollapseTrace {
    fn from_iter<I: IntoIterator<Item = CollapsePair>>(iter: I) -> Self {
        CollapseTrace {
            steps: iter.into_iter().collect(),
        }
    }
}

impl<'a> IntoIterator for &'a CollapseTrace {
    type Item = &'a CollapsePair;
    type IntoIter = std::slice::Iter<'a, CollapsePair>;

    fn into_iter(self) -> Self::IntoIter {
        self.steps.iter()
    }
}

/// The unique facet properly containing `face`, if there is exactly one.
pub fn unique_coface(c: &Complex, face: Face) -> Option<Face> {
    if face.is_empty() {
        return None;
    }
    let mut it = c.facets_containing(face);
    let first = it.next()?;
    if it.next().is_some() || first == face {
        return None;
    }
    Some(first)
}

/// All collapsible pairs, by decreasing dimension of the free face then canonical order.
pub fn free_pairs(c: &Complex) -> Vec<CollapsePair> {
    let mut seen = HashSet::new();
    let mut pairs = Vec::new();
    for &tau in c.facets() {
        for sigma in tau.subsets() {
            if sigma.is_empty() || sigma == tau || !seen.insert(sigma) {
                continue;
            }
            if unique_coface(c, sigma) == Some(tau) {
                pairs.push(CollapsePair::new(sigma, tau));
            }
        }
    }
    pairs.sort_by(|a, b| b.free.len().cmp(&a.free.len()).then(a.free.cmp(&b.free)));
    pairs
}

fn check_step(c: &Complex, step: usize, pair: &CollapsePair) -> Result<()> {
    if unique_coface(c, pair.free) == Some(pair.coface) {
        Ok(())
    } else {
        Err(Error::NotFree {
            step,
            free: pair.free,
            coface: pair.coface,
        })
    }
}

/// Removes every face containing `free`, provided `(free, coface)` is a collapsible pair.
pub fn apply_collapse(c: &Complex, free: Face, coface: Face) -> Result<Complex> {
    let pair = CollapsePair::new(free, coface);
    check_step(c, 0, &pair)?;
    Ok(c.delete_unchecked(free))
}

/// Replays a trace, checking freeness at each step, and returns the terminal complex.
pub fn verify_trace(c: &Complex, t: &CollapseTrace) -> Result<Complex> {
    let mut cur = c.clone();
    for (step, pair) in t.iter().enumerate() {
        check_step(&cur, step, pair)?;
        cur = cur.delete_unchecked(pair.free);
    }
    Ok(cur)
}

/// Nonempty faces of `c` avoiding `apex`, largest first.
fn faces_avoiding(c: &Complex, apex: usize) -> Vec<Face> {
    c.faces().into_iter().filter(|f| !f.contains(apex)).collect()
}

pub(crate) fn cone_collapse_to(c: &Complex, apex: usize) -> Result<CollapseTrace> {
    if !c.facets().iter().all(|f| f.contains(apex)) || c.is_void() {
        return Err(Error::NotACone);
    }
    Ok(faces_avoiding(c, apex)
        .into_iter()
        .map(|f| CollapsePair::new(f, f.with(apex)))
        .collect())
}

/// Collapses a cone onto its apex (the lowest apex when there are several).
pub fn cone_collapse_trace(c: &Complex) -> Result<CollapseTrace> {
    let apex = c.is_cone().ok_or(Error::NotACone)?;
    cone_collapse_to(c, apex)
}

/// Lifts a trace of `y` to the join `x ⋈ y`.
///
/// The result collapses `x ⋈ y` onto `x ⋈ terminal(t)`. Its vertex ids are
/// those of `x.join(y)`: unchanged when both sides share a vertex table,
/// otherwise the ids of `y` are shifted past the table of `x`.
pub fn join_lift_trace(x: &Complex, y: &Complex, t: &CollapseTrace) -> Result<CollapseTrace> {
    verify_trace(y, t)?;
    x.join(y)?;
    let offset = if x.shares_table(y) { 0 } else { x.labels().len() };
    let shift = |f: Face| -> Face { f.iter().map(|v| v + offset).collect() };
    let mut etas = x.faces();
    etas.push(Face::EMPTY);
    let mut out = CollapseTrace::new();
    for pair in t {
        let (sigma, tau) = (shift(pair.free), shift(pair.coface));
        for &eta in &etas {
            out.push(eta | sigma, eta | tau);
        }
    }
    Ok(out)
}

/// Expands a collapse of `link(c, sigma)` onto a point into a collapse of `c`
/// onto the face deletion of `sigma`.
pub fn welker_expand(c: &Complex, sigma: Face, link_trace: &CollapseTrace) -> Result<CollapseTrace> {
    if sigma.is_empty() {
        return Err(Error::EmptyFace);
    }
    let link = c.link(sigma)?;
    let terminal = verify_trace(&link, link_trace)?;
    let w = match terminal.facets() {
        [f] if f.len() == 1 => f.min_vertex().expect("nonempty"),
        _ => {
            return Err(Error::InvalidTrace(format!(
                "link trace ends at {:?}, not at a single vertex",
                terminal.facets()
            )))
        }
    };
    let mut out: CollapseTrace = link_trace
        .iter()
        .map(|p| CollapsePair::new(sigma | p.free, sigma | p.coface))
        .collect();
    out.push(sigma, sigma.with(w));
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "result", content = "trace", rename_all = "lowercase")]
pub enum Collapsibility {
    Proven(CollapseTrace),
    Disproven,
    Inconclusive,
}

impl Collapsibility {
    pub fn is_proven(&self) -> bool {
        matches!(self, Collapsibility::Proven(_))
    }
}

fn is_point(c: &Complex) -> bool {
    matches!(c.facets(), [f] if f.len() == 1)
}

/// Depth-first search for a collapse onto a single vertex.
///
/// States are memoized by their facet sets; `budget` caps the number of
/// expanded states. Complexes with Euler characteristic other than 1 are
/// rejected without search.
pub fn is_collapsible(c: &Complex, budget: u64) -> Collapsibility {
    if c.is_void() || c.euler_characteristic() != 1 {
        return Collapsibility::Disproven;
    }
    if let Some(apex) = c.is_cone() {
        return Collapsibility::Proven(cone_collapse_to(c, apex).expect("apex lies in every facet"));
    }
    struct Frame {
        complex: Complex,
        pairs: Vec<CollapsePair>,
        next: usize,
    }
    let mut seen: HashSet<Vec<Face>> = HashSet::new();
    seen.insert(c.facets().to_vec());
    let mut stack = vec![Frame {
        complex: c.clone(),
        pairs: free_pairs(c),
        next: 0,
    }];
    let mut expanded = 1u64;
    while let Some(top) = stack.last_mut() {
        if is_point(&top.complex) {
            let depth = stack.len() - 1;
            return Collapsibility::Proven(stack[..depth].iter().map(|f| f.pairs[f.next - 1]).collect());
        }
        if top.next == top.pairs.len() {
            stack.pop();
            continue;
        }
        let pair = top.pairs[top.next];
        top.next += 1;
        let child = top.complex.delete_unchecked(pair.free);
        if !seen.insert(child.facets().to_vec()) {
            continue;
        }
        if expanded >= budget {
            return Collapsibility::Inconclusive;
        }
        expanded += 1;
        let pairs = free_pairs(&child);
        stack.push(Frame {
            complex: child,
            pairs,
            next: 0,
        });
    }
    Collapsibility::Disproven
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(v: &[usize]) -> Face {
        v.iter().collect()
    }

    #[test]
    fn edge_has_two_vertex_pairs() {
        let c = Complex::simplex(2);
        let pairs = free_pairs(&c);
        assert_eq!(pairs, vec![CollapsePair::new(f(&[0]), f(&[0, 1])), CollapsePair::new(f(&[1]), f(&[0, 1]))]);
    }

    #[test]
    fn triangle_collapses_in_three_steps() {
        let c = Complex::simplex(3);
        let t = cone_collapse_trace(&c).unwrap();
        assert_eq!(t.len(), 3);
        let end = verify_trace(&c, &t).unwrap();
        assert_eq!(end.facets(), &[f(&[0])]);
    }

    #[test]
    fn corrupted_step_is_reported() {
        let c = Complex::simplex(3);
        let mut t = cone_collapse_trace(&c).unwrap();
        t.steps.swap(0, 2);
        assert!(matches!(verify_trace(&c, &t), Err(Error::NotFree { step: 0, .. })));
    }

    #[test]
    fn cone_over_pentagon() {
        let cycle = Complex::from_facets((0..5).map(|i| vec![i, (i + 1) % 5])).unwrap();
        let apex = Complex::new(vec!["apex".into()], vec![f(&[0])]).unwrap();
        let cone = cycle.join(&apex).unwrap();
        let t = cone_collapse_trace(&cone).unwrap();
        assert_eq!(t.len(), 10);
        assert_eq!(verify_trace(&cone, &t).unwrap().vertex_count(), 1);
        assert!(cone_collapse_trace(&cycle).is_err());
    }

    #[test]
    fn point_needs_no_steps() {
        let c = Complex::simplex(1);
        assert!(cone_collapse_trace(&c).unwrap().is_empty());
        assert_eq!(is_collapsible(&c, 10), Collapsibility::Proven(CollapseTrace::new()));
    }

    #[test]
    fn welker_with_point_link() {
        let c = Complex::simplex(2);
        let t = welker_expand(&c, f(&[0]), &CollapseTrace::new()).unwrap();
        assert_eq!(t.steps, vec![CollapsePair::new(f(&[0]), f(&[0, 1]))]);
    }

    #[test]
    fn zero_sphere_is_not_collapsible() {
        let c = Complex::from_facets([[0usize], [1]]).unwrap();
        assert_eq!(is_collapsible(&c, 100), Collapsibility::Disproven);
        assert!(free_pairs(&c).is_empty());
    }

    #[test]
    fn path_search_finds_trace() {
        let c = Complex::from_facets([vec![0usize, 1], vec![1, 2], vec![2, 3], vec![1, 4, 5]]).unwrap();
        match is_collapsible(&c, 1000) {
            Collapsibility::Proven(t) => assert_eq!(verify_trace(&c, &t).unwrap().vertex_count(), 1),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn trace_json_shape() {
        let mut t = CollapseTrace::new();
        t.push(f(&[0]), f(&[0, 1]));
        let v: serde_json::Value = serde_json::from_str(&t.to_json()).unwrap();
        assert_eq!(v, serde_json::json!([{"free": [0], "coface": [0, 1]}]));
        assert_eq!(CollapseTrace::from_json(&t.to_json()).unwrap(), t);
    }
}
