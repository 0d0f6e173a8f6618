use serde_json::json;

use crate::arcs::{arc_complex, Arc, ArcComplex, Surface};
use crate::face::Face;
use crate::simplicial::Complex;
use crate::strong::{dominators, is_strongly_collapsible, verify_strong_trace, StrongTrace};

use super::{check, expect_dominated, expect_set, ClaimResult, Size, TheoremError};

#[derive(Clone, Debug)]
pub struct StripSchedule {
    pub arcs: ArcComplex,
    pub trace: StrongTrace,
    pub terminal: Complex,
}

/// Collapses a simplex onto its lowest vertex.
fn collapse_simplex(c: &Complex, trace: &mut StrongTrace, stage: &str) -> Result<Complex, TheoremError> {
    check(c.facets().len() == 1, || format!("{stage}: expected a simplex, found {} facets", c.facets().len()))?;
    let keep = c.vertices().min_vertex().expect("nonempty simplex");
    let mut cur = c.clone();
    for v in c.vertices().without(keep).iter() {
        expect_dominated(&cur, v, keep, stage)?;
        trace.push(v, keep);
        cur = cur.vertex_deletion(v)?;
    }
    Ok(cur)
}

/// Strong collapse of the strip complex row by row from the top.
///
/// For each top vertex `r = n, ..., 2`: the chord `(1, r)` has a cone as link
/// and goes first, then `(i, r)` for `i = 2, ..., m - 1` with witness
/// `(i, r - 1)`. The chords `(i, 1)` and `(m, r)` that remain span a simplex,
/// which is collapsed onto its lowest vertex. Strips with `m = 1` or `n = 1`
/// are simplices from the start.
pub fn strip_schedule(m: u32, n: u32) -> Result<StripSchedule, TheoremError> {
    let surface = Surface::IntegralStrip { m, n };
    let a = arc_complex(&surface)?;
    check(!a.complex.is_void(), || format!("{surface} has no arcs"))?;
    let mut trace = StrongTrace::new();
    let mut cur = a.complex.clone();
    if m > 1 && n > 1 {
        for r in (2..=n).rev() {
            let stage = format!("top vertex {r}");
            let first = a.expect_id(&Arc::StripChord(1, r));
            let dom = dominators(&cur, first);
            let Some(w) = dom.min_vertex() else {
                return Err(TheoremError::Check(format!("{stage}: the link of strip:1-{r} is not a cone")));
            };
            trace.push(first, w);
            cur = cur.vertex_deletion(first)?;
            for i in 2..m {
                let v = a.expect_id(&Arc::StripChord(i, r));
                let w = a.expect_id(&Arc::StripChord(i, r - 1));
                expect_dominated(&cur, v, w, &stage)?;
                trace.push(v, w);
                cur = cur.vertex_deletion(v)?;
            }
        }
        let rest: Face = (2..=m)
            .map(|i| Arc::StripChord(i, 1))
            .chain((2..n).map(|r| Arc::StripChord(m, r)))
            .map(|x| a.expect_id(&x))
            .collect();
        expect_set(&cur, cur.vertices(), rest, "after the rows")?;
    }
    let terminal = collapse_simplex(&cur, &mut trace, "remaining simplex")?;
    let replayed = verify_strong_trace(&a.complex, &trace)?;
    check(replayed == terminal, || "strong trace does not replay to the terminal".into())?;
    Ok(StripSchedule { arcs: a, trace, terminal })
}

/// Integral strips with `m + n >= 5` are strongly collapsible.
pub fn thm_strip_strong(m: u32, n: u32) -> ClaimResult {
    let claim = ClaimResult::new(
        "strip-strong",
        "arc complexes of integral strips with m + n >= 5 strongly collapse row by row, (i, r) dominated by (i, r - 1)",
        Some(Size::Two([m, n])),
    );
    let schedule = match strip_schedule(m, n) {
        Ok(s) => s,
        Err(e) => return claim.verdict(false, e.to_string()),
    };
    let (order_free, _) = is_strongly_collapsible(&schedule.arcs.complex);
    let dim = schedule.arcs.complex.dimension();
    let claim = claim
        .verdict(
            order_free && schedule.terminal.vertex_count() == 1,
            format!(
                "{} arcs, dimension {dim}, {} removals to a point, core is a point: {order_free}",
                schedule.arcs.arcs.len(),
                schedule.trace.len()
            ),
        )
        .with_evidence(json!({ "trace": schedule.trace }));
    if m == 1 || n == 1 {
        claim.with_note(format!(
            "a simplex of dimension {dim} = {}-3 once the corner chords (1,1) and ({m},{n}) are excluded",
            m.max(n)
        ))
    } else {
        claim
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn three_by_two_base_case() {
        let s = strip_schedule(3, 2).unwrap();
        assert_eq!(s.arcs.arcs.len(), 4);
        let removed: Vec<String> = s.trace.iter().map(|t| s.arcs.arc(t.removed).label()).collect();
        assert_eq!(removed, ["strip:1-2", "strip:2-2", "strip:3-1"]);
        assert_eq!(s.terminal.vertex_count(), 1);
    }

    #[test]
    fn thin_strip_is_a_simplex() {
        let s = strip_schedule(1, 5).unwrap();
        assert_eq!(s.arcs.complex.facets().len(), 1);
        assert_eq!(s.arcs.complex.dimension(), 2);
    }

    #[test]
    fn two_by_two_is_a_zero_sphere() {
        assert!(strip_schedule(2, 2).is_err());
    }
}
