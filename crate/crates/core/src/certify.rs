//! Pseudomanifold checks, shellings and ball/sphere certificates.
//!
//! Verdicts are only issued from certificates: a shellable pseudomanifold is
//! a sphere or a ball (Danaraj–Klee), and a collapsible complex whose vertex
//! links certify as balls or spheres is a ball (Whitehead).

use std::collections::{HashMap, HashSet};

use serde::Serialize;

use crate::collapse::{is_collapsible, Collapsibility, DEFAULT_BUDGET};
use crate::error::{Error, Result};
use crate::face::Face;
use crate::simplicial::{Complex, Graph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PseudomanifoldStatus {
    Closed,
    WithBoundary,
    No,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PseudomanifoldReport {
    pub status: PseudomanifoldStatus,
    pub strongly_connected: bool,
    /// Codimension-one faces lying in exactly one facet.
    pub boundary: Vec<Face>,
}

/// Classifies a pure complex. Strong connectivity is part of being a
/// pseudomanifold, so a disconnected dual graph gives status `No`.
pub fn pseudomanifold_check(c: &Complex) -> Result<PseudomanifoldReport> {
    if !c.is_pure() {
        return Err(Error::NotPure);
    }
    let mut ridges: HashMap<Face, usize> = HashMap::new();
    for f in c.facets() {
        for v in f.iter() {
            *ridges.entry(f.without(v)).or_default() += 1;
        }
    }
    let strongly_connected = c.dual_graph()?.is_connected();
    let mut boundary: Vec<Face> = ridges.iter().filter(|(_, &k)| k == 1).map(|(f, _)| *f).collect();
    boundary.sort();
    let status = if !strongly_connected || c.is_void() || ridges.values().any(|&k| k > 2) {
        PseudomanifoldStatus::No
    } else if boundary.is_empty() {
        PseudomanifoldStatus::Closed
    } else {
        PseudomanifoldStatus::WithBoundary
    };
    Ok(PseudomanifoldReport {
        status,
        strongly_connected,
        boundary,
    })
}

/// A facet order in which each facet meets the union of its predecessors in
/// a pure complex of codimension one.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct ShellingOrder(pub Vec<Face>);

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "result", content = "order", rename_all = "lowercase")]
pub enum Shelling {
    Proven(ShellingOrder),
    Disproven,
    Inconclusive,
}

impl Shelling {
    pub fn order(&self) -> Option<&ShellingOrder> {
        match self {
            Shelling::Proven(o) => Some(o),
            _ => None,
        }
    }
}

/// Checks a facet order step by step from the definition.
pub fn is_shelling(c: &Complex, order: &[Face]) -> bool {
    let mut sorted = order.to_vec();
    sorted.sort();
    if sorted != c.facets() {
        return false;
    }
    for (k, &f) in order.iter().enumerate().skip(1) {
        let meets: Vec<Face> = order[..k].iter().map(|&g| g & f).collect();
        let gens: Vec<Face> = meets
            .iter()
            .copied()
            .filter(|m| !meets.iter().any(|o| m.is_proper_subset(*o)))
            .collect();
        if gens.iter().any(|m| m.len() + 1 != f.len()) {
            return false;
        }
    }
    true
}

struct ShellSearch<'a> {
    facets: &'a [Face],
    neighbors: Vec<Vec<usize>>,
    budget: u64,
    expanded: u64,
    failed: HashSet<Vec<u64>>,
}

fn mark(bits: &mut [u64], i: usize) {
    bits[i / 64] |= 1 << (i % 64);
}

fn marked(bits: &[u64], i: usize) -> bool {
    bits[i / 64] >> (i % 64) & 1 == 1
}

impl ShellSearch<'_> {
    /// Whether facet `i` may follow the placed facets.
    fn fits(&self, i: usize, placed: &[u64], order: &[usize]) -> bool {
        let f = self.facets[i];
        // Vertices v of f whose opposite ridge f \ v is already covered.
        let shared: Face = self.neighbors[i]
            .iter()
            .filter(|&&j| marked(placed, j))
            .map(|&j| (f - self.facets[j]).min_vertex().expect("ridge neighbours differ"))
            .collect();
        !shared.is_empty() && order.iter().all(|&j| !((f - self.facets[j]) & shared).is_empty())
    }

    fn candidates(&self, placed: &[u64], order: &[usize]) -> Vec<usize> {
        let mut score: HashMap<usize, usize> = HashMap::new();
        for &j in order {
            for &i in &self.neighbors[j] {
                if !marked(placed, i) {
                    *score.entry(i).or_default() += 1;
                }
            }
        }
        let mut out: Vec<(usize, usize)> = score
            .into_iter()
            .filter(|&(i, _)| self.fits(i, placed, order))
            .collect();
        out.sort_by(|a, b| b.1.cmp(&a.1).then(a.0.cmp(&b.0)));
        out.into_iter().map(|(i, _)| i).collect()
    }

    /// Extends `order` to a full shelling; `None` on failure, `Err` when out of budget.
    fn extend(&mut self, placed: &mut Vec<u64>, order: &mut Vec<usize>) -> Result<bool, ()> {
        if order.len() == self.facets.len() {
            return Ok(true);
        }
        if self.failed.contains(placed) {
            return Ok(false);
        }
        self.expanded += 1;
        if self.expanded > self.budget {
            return Err(());
        }
        for i in self.candidates(placed, order) {
            mark(placed, i);
            order.push(i);
            if self.extend(placed, order)? {
                return Ok(true);
            }
            order.pop();
            placed[i / 64] &= !(1 << (i % 64));
        }
        self.failed.insert(placed.clone());
        Ok(false)
    }
}

/// Backtracking search for a shelling, memoized on the set of placed facets.
///
/// Every starting facet is tried in canonical order; at each step facets
/// sharing the most ridges with the placed ones are tried first.
pub fn shelling_search(c: &Complex, budget: u64) -> Result<Shelling> {
    if !c.is_pure() {
        return Err(Error::NotPure);
    }
    let facets = c.facets();
    if facets.len() <= 1 {
        return Ok(Shelling::Proven(ShellingOrder(facets.to_vec())));
    }
    let dual = c.dual_graph()?;
    if !dual.is_connected() {
        // Any order of points is a shelling; otherwise shellable implies strongly connected.
        if facets[0].len() == 1 {
            return Ok(Shelling::Proven(ShellingOrder(facets.to_vec())));
        }
        return Ok(Shelling::Disproven);
    }
    let mut search = ShellSearch {
        facets,
        neighbors: (0..facets.len()).map(|i| dual.neighbors(i).collect()).collect(),
        budget,
        expanded: 0,
        failed: HashSet::new(),
    };
    let words = facets.len().div_ceil(64);
    for start in 0..facets.len() {
        let mut placed = vec![0u64; words];
        mark(&mut placed, start);
        let mut order = vec![start];
        match search.extend(&mut placed, &mut order) {
            Ok(true) => {
                let shelling: Vec<Face> = order.iter().map(|&i| facets[i]).collect();
                debug_assert!(is_shelling(c, &shelling));
                return Ok(Shelling::Proven(ShellingOrder(shelling)));
            }
            Ok(false) => {}
            Err(()) => return Ok(Shelling::Inconclusive),
        }
    }
    Ok(Shelling::Disproven)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Verdict {
    Sphere { dim: isize },
    Ball { dim: isize },
    Undetermined,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Verdict::Sphere { dim } => write!(f, "sphere({dim})"),
            Verdict::Ball { dim } => write!(f, "ball({dim})"),
            Verdict::Undetermined => f.write_str("undetermined"),
        }
    }
}

impl Verdict {
    /// The Euler characteristic forced by the verdict.
    pub fn expected_euler(&self) -> Option<i64> {
        match *self {
            Verdict::Sphere { dim } => Some(if dim % 2 == 0 { 2 } else { 0 }),
            Verdict::Ball { .. } => Some(1),
            Verdict::Undetermined => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Rule {
    /// The empty complex is the sphere of dimension -1.
    Void,
    DanarajKlee,
    Whitehead,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Effort {
    pub shelling_budget: u64,
    pub collapse_budget: u64,
}

impl Default for Effort {
    fn default() -> Self {
        Effort {
            shelling_budget: DEFAULT_BUDGET,
            collapse_budget: DEFAULT_BUDGET,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub dimension: isize,
    pub pseudomanifold: PseudomanifoldStatus,
    pub strongly_connected: bool,
    pub boundary_faces: usize,
    pub shelling: Option<ShellingOrder>,
    pub collapsible: Option<bool>,
    pub verdict: Verdict,
    pub rule: Option<Rule>,
}

impl Certificate {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("certificate serializes");
        s.push('\n');
        s
    }
}

/// Certifies `c` as a ball or sphere when a shelling or a collapse with
/// certified vertex links can be found within `effort`.
pub fn certify(c: &Complex, effort: Effort) -> Certificate {
    let dimension = c.dimension();
    let mut cert = Certificate {
        dimension,
        pseudomanifold: PseudomanifoldStatus::No,
        strongly_connected: false,
        boundary_faces: 0,
        shelling: None,
        collapsible: None,
        verdict: Verdict::Undetermined,
        rule: None,
    };
    if c.is_void() {
        cert.pseudomanifold = PseudomanifoldStatus::Closed;
        cert.strongly_connected = true;
        cert.verdict = Verdict::Sphere { dim: -1 };
        cert.rule = Some(Rule::Void);
        return cert;
    }
    let Ok(pm) = pseudomanifold_check(c) else {
        return cert;
    };
    cert.pseudomanifold = pm.status;
    cert.strongly_connected = pm.strongly_connected;
    cert.boundary_faces = pm.boundary.len();
    if pm.status == PseudomanifoldStatus::No {
        return cert;
    }
    if let Ok(Shelling::Proven(order)) = shelling_search(c, effort.shelling_budget) {
        cert.shelling = Some(order);
        cert.verdict = match pm.status {
            PseudomanifoldStatus::Closed => Verdict::Sphere { dim: dimension },
            _ => Verdict::Ball { dim: dimension },
        };
        cert.rule = Some(Rule::DanarajKlee);
        return cert;
    }
    if pm.status == PseudomanifoldStatus::WithBoundary {
        let collapsible = is_collapsible(c, effort.collapse_budget);
        cert.collapsible = match collapsible {
            Collapsibility::Proven(_) => Some(true),
            Collapsibility::Disproven => Some(false),
            Collapsibility::Inconclusive => None,
        };
        let links_ok = || {
            certify_vertex_links(c, effort)
                .iter()
                .all(|(_, l)| l.verdict != Verdict::Undetermined)
        };
        if cert.collapsible == Some(true) && links_ok() {
            cert.verdict = Verdict::Ball { dim: dimension };
            cert.rule = Some(Rule::Whitehead);
        }
    }
    cert
}

/// Certificates for the link of every vertex, in id order.
pub fn certify_vertex_links(c: &Complex, effort: Effort) -> Vec<(usize, Certificate)> {
    c.vertices()
        .iter()
        .map(|v| {
            let link = c.link(Face::singleton(v)).expect("vertex is a face");
            (v, certify(&link, effort))
        })
        .collect()
}

/// The dual graph: facets adjacent when they share a codimension-one face.
pub fn flip_graph(c: &Complex) -> Result<Graph> {
    c.dual_graph()
}

/// Largest breadth-first distance; `None` for empty or disconnected graphs.
pub fn graph_diameter(g: &Graph) -> Option<usize> {
    g.diameter()
}

pub fn is_connected(g: &Graph) -> bool {
    g.is_connected()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangles_meeting_at_a_vertex() {
        let c = Complex::from_facets([[0usize, 1, 2], [2, 3, 4]]).unwrap();
        let pm = pseudomanifold_check(&c).unwrap();
        assert!(!pm.strongly_connected);
        assert_eq!(pm.status, PseudomanifoldStatus::No);
        assert_eq!(certify(&c, Effort::default()).verdict, Verdict::Undetermined);
    }

    #[test]
    fn two_edges_are_not_shellable() {
        let c = Complex::from_facets([[0usize, 1], [2, 3]]).unwrap();
        assert_eq!(shelling_search(&c, 100).unwrap(), Shelling::Disproven);
    }

    #[test]
    fn boundary_of_tetrahedron_is_a_sphere() {
        let c = Complex::from_facets([[0usize, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]]).unwrap();
        let cert = certify(&c, Effort::default());
        assert_eq!(cert.verdict, Verdict::Sphere { dim: 2 });
        assert_eq!(cert.rule, Some(Rule::DanarajKlee));
        assert!(is_shelling(&c, &cert.shelling.unwrap().0));
    }

    #[test]
    fn points() {
        let one = Complex::simplex(1);
        assert_eq!(certify(&one, Effort::default()).verdict, Verdict::Ball { dim: 0 });
        let two = Complex::from_facets([[0usize], [1]]).unwrap();
        assert_eq!(certify(&two, Effort::default()).verdict, Verdict::Sphere { dim: 0 });
        let three = Complex::from_facets([[0usize], [1], [2]]).unwrap();
        assert_eq!(certify(&three, Effort::default()).verdict, Verdict::Undetermined);
    }

    #[test]
    fn void_is_the_minus_one_sphere() {
        let c = Complex::simplex(2).link(Complex::simplex(2).facets()[0]).unwrap();
        assert_eq!(certify(&c, Effort::default()).verdict, Verdict::Sphere { dim: -1 });
    }

    #[test]
    fn bowtie_order_is_not_a_shelling() {
        let c = Complex::from_facets([[0usize, 1], [1, 2], [2, 3]]).unwrap();
        let f = c.facets().to_vec();
        assert!(is_shelling(&c, &[f[0], f[1], f[2]]));
        assert!(!is_shelling(&c, &[f[0], f[2], f[1]]));
    }

    #[test]
    fn single_facet_flip_graph() {
        let g = flip_graph(&Complex::simplex(3)).unwrap();
        assert_eq!(graph_diameter(&g), Some(0));
        assert!(is_connected(&g));
    }

    #[test]
    fn certificate_json_names_rule() {
        let cert = certify(&Complex::simplex(3), Effort::default());
        let v: serde_json::Value = serde_json::from_str(&cert.to_json()).unwrap();
        assert_eq!(v["rule"], "danaraj-klee");
        assert_eq!(v["verdict"], serde_json::json!({"kind": "ball", "dim": 2}));
        assert_eq!(v["pseudomanifold"], "with-boundary");
    }
}
