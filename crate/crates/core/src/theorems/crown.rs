use serde_json::json;

use crate::arcs::{arc_complex, Arc, ArcComplex, Surface};
use crate::face::Face;
use crate::simplicial::Complex;
use crate::strong::{is_strongly_collapsible, verify_strong_trace, StrongTrace};

use super::{check, expect_dominated, expect_set, ClaimResult, Size, TheoremError};

#[derive(Clone, Debug)]
pub struct CrownSchedule {
    pub arcs: ArcComplex,
    /// Arcs removed in each round, loops first.
    pub rounds: Vec<Vec<Arc>>,
    pub trace: StrongTrace,
    pub terminal: Complex,
}

/// Strips the b-arcs of a crown round by round, widest polygon side first.
///
/// Round `k` removes the b-arcs of wrap length `n - k + 1`. Each arc with
/// endpoints `p, q` must be dominated by both `c_p` and `c_q`, both in the
/// complex at the start of the round and at the moment it is removed. The
/// trace records `c_q` as witness. What is left is the simplex on the c-arcs.
pub fn crown_schedule(n: u32) -> Result<CrownSchedule, TheoremError> {
    let surface = Surface::Crown { n };
    let a = arc_complex(&surface)?;
    let mut cur = a.complex.clone();
    let mut trace = StrongTrace::new();
    let mut rounds = Vec::new();
    for k in 1..n {
        let w = n - k + 1;
        let round: Vec<Arc> = a
            .arcs
            .iter()
            .copied()
            .filter(|x| x.polygon_side(n).map(|s| s.1) == Some(w))
            .collect();
        let witnesses = |arc: &Arc| {
            let (p, q) = arc.endpoints();
            (a.expect_id(&Arc::CrownC(p)), a.expect_id(&Arc::CrownC(q)))
        };
        for arc in &round {
            let (cp, cq) = witnesses(arc);
            let v = a.expect_id(arc);
            let stage = format!("round {k} start");
            expect_dominated(&cur, v, cp, &stage)?;
            expect_dominated(&cur, v, cq, &stage)?;
        }
        for arc in &round {
            let (cp, cq) = witnesses(arc);
            let v = a.expect_id(arc);
            let stage = format!("round {k} removal");
            expect_dominated(&cur, v, cp, &stage)?;
            expect_dominated(&cur, v, cq, &stage)?;
            trace.push(v, cq);
            cur = cur.vertex_deletion(v)?;
        }
        rounds.push(round);
    }
    let c_arcs = a.select(Arc::is_c_arc);
    expect_set(&cur, cur.vertices(), c_arcs, "terminal vertex set")?;
    check(cur.facets() == [c_arcs], || "terminal is not the simplex on the c-arcs".into())?;
    let replayed = verify_strong_trace(&a.complex, &trace)?;
    check(replayed == cur, || "strong trace does not replay to the terminal".into())?;
    Ok(CrownSchedule {
        arcs: a,
        rounds,
        trace,
        terminal: cur,
    })
}

/// The crown arc complex is strongly collapsible, by the round schedule and by
/// an order-free core computation.
pub fn thm_crown_strong(n: u32) -> ClaimResult {
    let claim = ClaimResult::new(
        "crown-strong",
        "crown arc complexes strongly collapse onto the c-arc simplex, every b-arc dominated by c-arcs at both endpoints",
        Some(Size::One(n)),
    );
    let schedule = match crown_schedule(n) {
        Ok(s) => s,
        Err(e) => return claim.verdict(false, e.to_string()),
    };
    let (order_free, _) = is_strongly_collapsible(&schedule.arcs.complex);
    let sizes: Vec<usize> = schedule.rounds.iter().map(Vec::len).collect();
    let terminal: Face = schedule.terminal.vertices();
    let evidence = json!({
        "rounds": schedule.rounds.iter().map(|r| r.iter().map(Arc::label).collect::<Vec<_>>()).collect::<Vec<_>>(),
        "trace": schedule.trace,
        "terminal": schedule.terminal.face_labels(terminal),
    });
    claim
        .verdict(
            order_free,
            format!(
                "rounds {sizes:?}, terminal {}-simplex on the c-arcs, core is a point: {order_free}",
                terminal.len() as isize - 1
            ),
        )
        .with_note("the c-arc simplex is reached after round n-1")
        .with_evidence(evidence)
}
