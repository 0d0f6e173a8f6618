use serde_json::json;

use crate::arcs::{fan, inner_arc_complex, Arc, ArcComplex, Surface};
use crate::face::Face;
use crate::simplicial::Complex;
use crate::strong::{is_strongly_collapsible, verify_strong_trace, StrongTrace};

use super::{check, expect_dominated, expect_set, ClaimResult, Size, TheoremError};

#[derive(Clone, Debug)]
pub struct InnerSchedule {
    pub arcs: ArcComplex,
    pub trace: StrongTrace,
    pub terminal: Complex,
}

/// Runs the vertex-removal schedule on a complex whose vertices are the
/// c-arcs of the Möbius crown with `n` vertices, addressed through `id`.
///
/// For `top = n, ..., 2`: the loop `L_top` lies in a single facet, the fan at
/// `top`, and is removed with witness `(1, top)`; then `(i, top)` is removed
/// for `i = top - 1, ..., 1` with witness `(1, i)`. Before each `top` the
/// remaining vertices must be exactly the c-arcs between `1..=top`.
pub fn inner_schedule_in(
    c: &Complex,
    n: u32,
    id: &dyn Fn(&Arc) -> usize,
) -> Result<(StrongTrace, Complex), TheoremError> {
    let mut cur = c.clone();
    let mut trace = StrongTrace::new();
    let c_arcs_upto = |k: u32| -> Face { (1..=k).flat_map(|i| (i..=k).map(move |j| id(&Arc::MobC(i, j)))).collect() };
    for top in (2..=n).rev() {
        let stage = format!("vertex {top}");
        expect_set(&cur, cur.vertices(), c_arcs_upto(top), &format!("{stage}, before removal"))?;
        let l_top = id(&Arc::MobC(top, top));
        let full_fan: Face = fan(&Surface::MobiusCrown { n: top }, top, top, top)?.iter().map(id).collect();
        let star: Vec<Face> = cur.facets_containing(Face::singleton(l_top)).collect();
        check(star == [full_fan], || {
            format!("{stage}: L{top} lies in {} facets, expected only the fan at {top}", star.len())
        })?;
        for w in (full_fan.without(l_top)).iter() {
            expect_dominated(&cur, l_top, w, &stage)?;
        }
        let w = id(&Arc::mob(1, top));
        trace.push(l_top, w);
        cur = cur.vertex_deletion(l_top)?;
        for i in (1..top).rev() {
            let v = id(&Arc::mob(i, top));
            let w = id(&Arc::mob(1, i));
            expect_dominated(&cur, v, w, &stage)?;
            trace.push(v, w);
            cur = cur.vertex_deletion(v)?;
        }
    }
    if n >= 1 {
        expect_set(&cur, cur.vertices(), c_arcs_upto(1), "terminal")?;
    }
    Ok((trace, cur))
}

pub fn inner_schedule(n: u32) -> Result<InnerSchedule, TheoremError> {
    let a = inner_arc_complex(&Surface::MobiusCrown { n })?;
    let (trace, terminal) = inner_schedule_in(&a.complex, n, &|arc| a.expect_id(arc))?;
    let replayed = verify_strong_trace(&a.complex, &trace)?;
    check(replayed == terminal, || "strong trace does not replay to the terminal".into())?;
    Ok(InnerSchedule { arcs: a, trace, terminal })
}

/// The inner Möbius complex is strongly collapsible by the vertex-removal
/// schedule, cross-checked against the canonical core.
pub fn thm_inner_mobius(n: u32) -> ClaimResult {
    let claim = ClaimResult::new(
        "inner-mobius-strong",
        "inner arc complexes of non-orientable crowns strongly collapse, removing the arcs at the newest vertex with witnesses (1,i)",
        Some(Size::One(n)),
    );
    let schedule = match inner_schedule(n) {
        Ok(s) => s,
        Err(e) => return claim.verdict(false, e.to_string()),
    };
    let (order_free, _) = is_strongly_collapsible(&schedule.arcs.complex);
    let labelled: Vec<[String; 2]> = schedule
        .trace
        .iter()
        .map(|s| [schedule.arcs.arc(s.removed).label(), schedule.arcs.arc(s.witness).label()])
        .collect();
    claim
        .verdict(
            order_free && schedule.terminal.vertex_count() == 1,
            format!(
                "{} removals to a point, core is a point: {order_free}",
                schedule.trace.len()
            ),
        )
        .with_evidence(json!({ "trace": schedule.trace, "labelled": labelled }))
}
