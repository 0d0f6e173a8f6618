use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::face::{Face, MAX_VERTICES};
use crate::simplicial::{flag_complex_labeled, Complex, Graph};

use super::{disjoint, enumerate_arcs, Arc, Surface};

/// An arc complex together with the arc behind each vertex id.
#[derive(Clone, Debug)]
pub struct ArcComplex {
    pub surface: Surface,
    pub arcs: Vec<Arc>,
    index: HashMap<Arc, usize>,
    pub complex: Complex,
}

impl ArcComplex {
    pub fn id(&self, arc: &Arc) -> Option<usize> {
        self.index.get(arc).copied()
    }

    /// Vertex id of an arc that must be present.
    pub fn expect_id(&self, arc: &Arc) -> usize {
        self.id(arc).unwrap_or_else(|| panic!("{arc} is not a vertex of A({})", self.surface))
    }

    pub fn arc(&self, id: usize) -> Arc {
        self.arcs[id]
    }

    pub fn face(&self, arcs: &[Arc]) -> Result<Face> {
        arcs.iter()
            .map(|a| {
                self.id(a).ok_or_else(|| Error::InvalidArc {
                    arc: a.to_string(),
                    surface: self.surface.to_string(),
                })
            })
            .collect()
    }

    pub fn arcs_of(&self, face: Face) -> Vec<Arc> {
        face.iter().map(|v| self.arcs[v]).collect()
    }

    /// Vertex ids of the arcs satisfying `pred`.
    pub fn select(&self, pred: impl Fn(&Arc) -> bool) -> Face {
        self.arcs.iter().enumerate().filter(|(_, a)| pred(a)).map(|(i, _)| i).collect()
    }
}

/// Disjointness graph on the given arcs, vertex `k` being `arcs[k]`.
pub fn disjointness_graph(surface: &Surface, arcs: &[Arc]) -> Result<Graph> {
    let mut g = Graph::new(arcs.len());
    for i in 0..arcs.len() {
        for j in i + 1..arcs.len() {
            if disjoint(surface, &arcs[i], &arcs[j])? {
                g.add_edge(i, j);
            }
        }
    }
    Ok(g)
}

/// The full arc complex, vertex ids following [`enumerate_arcs`].
pub fn arc_complex(surface: &Surface) -> Result<ArcComplex> {
    arc_complex_filtered(surface, |_| true)
}

/// Arc complex generated by the arcs satisfying `keep`.
pub fn arc_complex_filtered(surface: &Surface, keep: impl Fn(&Arc) -> bool) -> Result<ArcComplex> {
    surface.validate()?;
    let arcs: Vec<Arc> = enumerate_arcs(surface).into_iter().filter(|a| keep(a)).collect();
    if arcs.len() > MAX_VERTICES {
        return Err(Error::TooManyVertices(arcs.len()));
    }
    let graph = disjointness_graph(surface, &arcs)?;
    let complex = flag_complex_labeled(&graph, arcs.iter().map(Arc::label).collect())?.with_surface(Some(*surface));
    let index = arcs.iter().enumerate().map(|(i, a)| (*a, i)).collect();
    Ok(ArcComplex {
        surface: *surface,
        arcs,
        index,
        complex,
    })
}

/// Complex generated by c-arcs only.
pub fn inner_arc_complex(surface: &Surface) -> Result<ArcComplex> {
    if !surface.is_crown_like() {
        return Err(Error::InvalidSurface(format!("{surface} has no c-arcs")));
    }
    arc_complex_filtered(surface, Arc::is_c_arc)
}

/// Complex generated by b-arcs only.
pub fn boundary_arc_complex(surface: &Surface) -> Result<ArcComplex> {
    if !surface.is_crown_like() {
        return Err(Error::InvalidSurface(format!("{surface} has no b-arcs")));
    }
    arc_complex_filtered(surface, Arc::is_b_arc)
}
