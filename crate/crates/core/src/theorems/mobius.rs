use std::collections::BTreeMap;

use serde_json::json;

use crate::arcs::{
    arc_complex, enumerate_saplings, inner_arc_complex, side_within, tile_tree, Arc, ArcComplex, Surface,
};
use crate::collapse::{cone_collapse_to, join_lift_trace, verify_trace, welker_expand, CollapseTrace};
use crate::face::Face;
use crate::simplicial::{isomorphic, Complex};
use crate::strong::{core, strong_to_elementary, CoreOrder};

use super::inner::inner_schedule_in;
use super::{check, expect_set, ClaimResult, Size, TheoremError};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MobiusRound {
    pub degree: usize,
    pub saplings: Vec<Vec<Arc>>,
    /// Elementary collapses spent on this round.
    pub steps: usize,
}

#[derive(Clone, Debug)]
pub struct MobiusSchedule {
    pub arcs: ArcComplex,
    pub rounds: Vec<MobiusRound>,
    /// Collapse of the full complex onto the inner complex.
    pub boundary_trace: CollapseTrace,
    /// Collapse of the inner complex onto a point.
    pub inner_trace: CollapseTrace,
    pub inner: Complex,
    pub terminal: Complex,
}

impl MobiusSchedule {
    pub fn full_trace(&self) -> CollapseTrace {
        let mut t = self.boundary_trace.clone();
        t.append(self.inner_trace.clone());
        t
    }
}

/// Collapse of the link of a sapling onto a point.
///
/// The link must split as the join of the arc complexes of the polygons cut
/// off by the sapling's arcs and the inner complex of the trunk. The trunk
/// factor is strongly collapsed, converted to elementary collapses and lifted
/// through the join; the remaining cone over the polygons is then collapsed
/// onto its apex.
fn sapling_link_trace(
    a: &ArcComplex,
    link: &Complex,
    sapling: &[Arc],
    degree: usize,
) -> Result<CollapseTrace, TheoremError> {
    let surface = a.surface;
    let n = surface.boundary_vertices();
    let name = sapling.iter().map(Arc::label).collect::<Vec<_>>().join(" ");
    let tree = tile_tree(&surface, sapling)?;
    let trunk = tree.trunk_vertices();
    check(trunk.len() == degree, || {
        format!("sapling {name}: trunk has {} vertices, expected {degree}", trunk.len())
    })?;
    let mut polygons = Vec::new();
    for arc in sapling {
        let (p, w) = arc.polygon_side(n).expect("saplings hold b-arcs");
        let nested = a.select(|x| {
            x != arc && x.polygon_side(n).is_some_and(|(q, v)| side_within(q, v, p, w, n))
        });
        let factor = link.induced(nested);
        let model = arc_complex(&Surface::Polygon { n: w + 1 })?;
        check(isomorphic(&factor, &model.complex)?, || {
            format!("sapling {name}: factor under {arc} is not the arc complex of a {}-gon", w + 1)
        })?;
        polygons.push((nested, factor));
    }
    let trunk_set = a.select(|x| match *x {
        Arc::MobC(i, j) => trunk.contains(&i) && trunk.contains(&j),
        _ => false,
    });
    let trunk_factor = link.induced(trunk_set);
    let model = inner_arc_complex(&Surface::MobiusCrown { n: degree as u32 })?;
    check(isomorphic(&trunk_factor, &model.complex)?, || {
        format!("sapling {name}: trunk factor is not the inner complex of a {degree}-vertex Möbius crown")
    })?;
    let predicted = polygons.iter().fold(trunk_set, |acc, (s, _)| acc | *s);
    expect_set(link, link.vertices(), predicted, &format!("link of sapling {name}"))?;
    let polygon_join = polygons
        .iter()
        .try_fold(link.derive(Vec::new()), |acc, (_, f)| acc.join(f))?;
    check(polygon_join.join(&trunk_factor)? == *link, || {
        format!("sapling {name}: link is not the join of its factors")
    })?;

    let (point, strong) = core(&trunk_factor, CoreOrder::Canonical);
    check(point.vertex_count() == 1, || format!("sapling {name}: trunk factor is not strongly collapsible"))?;
    let apex = point.vertices().min_vertex().expect("one vertex");
    let trunk_trace = strong_to_elementary(&trunk_factor, &strong)?;
    let mut trace = join_lift_trace(&polygon_join, &trunk_factor, &trunk_trace)?;
    let cone = polygon_join.join(&point)?;
    trace.append(cone_collapse_to(&cone, apex)?);
    Ok(trace)
}

/// Collapses the Möbius crown arc complex by deleting saplings in rounds of
/// increasing degree, then collapses the remaining inner complex.
///
/// Round `d` face-deletes every sapling of degree `d`; each deletion is a
/// Welker expansion of a collapse of the sapling's link. After the round no
/// face may contain two saplings of degree `d + 1`. After the last round the
/// complex must equal the inner complex, which is then strongly collapsed by
/// the inner schedule and converted to elementary collapses.
pub fn mobius_collapse_schedule(n: u32) -> Result<MobiusSchedule, TheoremError> {
    let surface = Surface::MobiusCrown { n };
    let a = arc_complex(&surface)?;
    let mut by_degree: BTreeMap<usize, Vec<Vec<Arc>>> = BTreeMap::new();
    for s in enumerate_saplings(&surface)? {
        let d = tile_tree(&surface, &s)?.degree;
        by_degree.entry(d).or_default().push(s);
    }
    let mut cur = a.complex.clone();
    let mut boundary_trace = CollapseTrace::new();
    let mut rounds = Vec::new();
    for d in 1..n as usize {
        let saplings = by_degree.remove(&d).unwrap_or_default();
        let before = boundary_trace.len();
        for sap in &saplings {
            let sigma = a.face(sap)?;
            let name = || sap.iter().map(Arc::label).collect::<Vec<_>>().join(" ");
            check(cur.contains_face(sigma), || format!("round {d}: sapling {} is missing", name()))?;
            let link = cur.link(sigma)?;
            let link_trace = sapling_link_trace(&a, &link, sap, d)?;
            let step = welker_expand(&cur, sigma, &link_trace)?;
            let next = verify_trace(&cur, &step)?;
            check(next == cur.face_deletion(sigma)?, || {
                format!("round {d}: expansion for {} is not the face deletion", name())
            })?;
            boundary_trace.append(step);
            cur = next;
        }
        if let Some(next) = by_degree.get(&(d + 1)) {
            let faces: Vec<Face> = next.iter().map(|s| a.face(s)).collect::<Result<_, _>>()?;
            for (i, x) in faces.iter().enumerate() {
                for y in &faces[i + 1..] {
                    check(!cur.contains_face(*x | *y), || {
                        format!("after round {d}: a face holds two saplings of degree {}", d + 1)
                    })?;
                }
            }
        }
        rounds.push(MobiusRound {
            degree: d,
            saplings,
            steps: boundary_trace.len() - before,
        });
    }
    let c_arcs = a.select(Arc::is_c_arc);
    let inner = a.complex.induced(c_arcs);
    expect_set(&cur, cur.vertices(), c_arcs, "after the last round")?;
    check(cur == inner, || "after the last round the complex is not the inner complex".into())?;
    let (strong, _) = inner_schedule_in(&inner, n, &|arc| a.expect_id(arc))?;
    let inner_trace = strong_to_elementary(&inner, &strong)?;
    let terminal = verify_trace(&inner, &inner_trace)?;
    check(terminal.vertex_count() == 1, || "inner trace does not end at a point".into())?;
    Ok(MobiusSchedule {
        arcs: a,
        rounds,
        boundary_trace,
        inner_trace,
        inner,
        terminal,
    })
}

/// The Möbius crown arc complex collapses onto its inner complex and then to
/// a point; the full trace is replayed from scratch.
pub fn thm_mobius_collapse(n: u32) -> ClaimResult {
    let claim = ClaimResult::new(
        "mobius-collapse",
        "non-orientable crown arc complexes collapse onto the inner complex by deleting saplings in order of degree",
        Some(Size::One(n)),
    );
    let schedule = match mobius_collapse_schedule(n) {
        Ok(s) => s,
        Err(e) => return claim.verdict(false, e.to_string()),
    };
    let full = schedule.full_trace();
    let replay = verify_trace(&schedule.arcs.complex, &full);
    let ok = matches!(&replay, Ok(t) if t.vertex_count() == 1);
    let rounds: Vec<_> = schedule
        .rounds
        .iter()
        .map(|r| json!({"degree": r.degree, "saplings": r.saplings.len(), "steps": r.steps}))
        .collect();
    claim
        .verdict(
            ok,
            format!(
                "{} vertices, {} boundary steps onto the inner complex, {} more to a point, replay {}",
                schedule.arcs.arcs.len(),
                schedule.boundary_trace.len(),
                schedule.inner_trace.len(),
                if ok { "verified" } else { "failed" }
            ),
        )
        .with_evidence(json!({ "rounds": rounds, "trace": full }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn three_vertices_end_to_end() {
        let s = mobius_collapse_schedule(3).unwrap();
        assert_eq!(s.arcs.arcs.len(), 12);
        assert_eq!(s.rounds.len(), 2);
        assert_eq!(s.rounds[0].saplings.len(), 3);
        let end = verify_trace(&s.arcs.complex, &s.full_trace()).unwrap();
        assert_eq!(end.vertex_count(), 1);
        assert_eq!(s.inner.vertex_count(), 6);
    }

    #[test]
    fn one_vertex_needs_nothing() {
        let s = mobius_collapse_schedule(1).unwrap();
        assert!(s.full_trace().is_empty());
    }
}
