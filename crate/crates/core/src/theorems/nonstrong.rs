use serde::Serialize;
use serde_json::json;

use crate::arcs::{arc_complex, Arc, ArcComplex, Surface};
use crate::face::Face;
use crate::simplicial::Complex;
use crate::strong::{core, dominated_vertices, is_strongly_collapsible, CoreOrder};

use super::{check, expect_dominated, expect_set, ClaimResult, Size, TheoremError};

/// Cyclically consecutive vertex pairs `(1,2), ..., (n-1,n), (n,1)`.
pub fn consecutive_pairs(n: u32) -> Vec<(u32, u32)> {
    (1..n).map(|i| (i, i + 1)).chain(std::iter::once((n, 1))).collect()
}

/// The b-arc over the boundary edge `(i, j)`: its polygon side runs from `j`
/// round to `i`, leaving a two-vertex Möbius tile on `i, j`.
fn long_arc(i: u32, j: u32) -> Arc {
    Arc::BArc { p: j, q: i }
}

/// Predicted dominated vertices of the complex with the loops over `removed_loops`
/// and the long arcs over `removed_pairs` deleted.
pub fn dominated_set_prediction(n: u32, removed_loops: &[u32], removed_pairs: &[(u32, u32)]) -> Vec<Arc> {
    let mut out: Vec<Arc> = (1..=n)
        .filter(|j| !removed_loops.contains(j))
        .map(|j| Arc::BArc { p: j, q: j })
        .collect();
    if removed_loops.len() >= 2 {
        out.extend(
            consecutive_pairs(n)
                .into_iter()
                .filter(|(i, j)| removed_loops.contains(i) && removed_loops.contains(j))
                .filter(|pair| !removed_pairs.contains(pair))
                .map(|(i, j)| long_arc(i, j)),
        );
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NonStrongEvidence {
    /// Number of stages whose dominated set was compared with its prediction.
    pub stages_checked: usize,
    pub removed: Vec<String>,
    pub core_vertices: usize,
    pub seeds_agreeing: usize,
}

fn subsets(n: u32) -> impl Iterator<Item = Vec<u32>> {
    (0u32..1 << n).map(move |mask| (1..=n).filter(|i| mask >> (i - 1) & 1 == 1).collect())
}

/// Checks the dominated set at every stage of the removal of the loops and
/// long arcs, then the core.
///
/// Stages: the full complex; one loop removed (each choice); any set `I` of at
/// least two loops removed; and additionally any set `J` of long arcs over
/// consecutive pairs inside `I`. Each stage must dominate exactly the
/// remaining loops and the remaining long arcs over consecutive pairs of `I`,
/// with each loop `M_j` dominated by `L_j` and each long arc over `(i, j)`
/// dominated by the c-arc `(i, j)`. The core must then be everything but
/// these `2n` arcs, for the canonical order and every seed.
pub fn mobius_nonstrong_check(n: u32, seeds: &[u64]) -> Result<NonStrongEvidence, TheoremError> {
    check(n >= 4, || format!("the statement needs n >= 4, got {n}"))?;
    let a = arc_complex(&Surface::MobiusCrown { n })?;
    let id = |arc: Arc| a.expect_id(&arc);
    let loops: Vec<u32> = (1..=n).collect();
    let mut stages = 0;

    let mut check_stage = |c: &Complex, removed_loops: &[u32], removed_pairs: &[(u32, u32)]| {
        let stage = format!("loops {removed_loops:?} and long arcs {removed_pairs:?} removed");
        let predicted = dominated_set_prediction(n, removed_loops, removed_pairs);
        let found: Face = dominated_vertices(c).into_iter().map(|(v, _)| v).collect();
        expect_set(c, found, predicted.iter().map(|x| id(*x)).collect(), &stage)?;
        for arc in predicted {
            let (i, j) = arc.endpoints();
            let witness = if arc.is_loop() { Arc::MobC(i, i) } else { Arc::mob(i, j) };
            expect_dominated(c, id(arc), id(witness), &stage)?;
        }
        stages += 1;
        Ok::<(), TheoremError>(())
    };

    check_stage(&a.complex, &[], &[])?;
    for j0 in &loops {
        let c = a.complex.vertex_deletion(id(Arc::BArc { p: *j0, q: *j0 }))?;
        check_stage(&c, &[*j0], &[])?;
    }
    for set in subsets(n).filter(|s| s.len() >= 2) {
        let without_loops = remove(&a, &a.complex, set.iter().map(|&j| Arc::BArc { p: j, q: j }))?;
        let available: Vec<(u32, u32)> = consecutive_pairs(n)
            .into_iter()
            .filter(|(i, j)| set.contains(i) && set.contains(j))
            .collect();
        for mask in 0u32..1 << available.len() {
            let pairs: Vec<(u32, u32)> = (0..available.len())
                .filter(|k| mask >> k & 1 == 1)
                .map(|k| available[k])
                .collect();
            let c = remove(&a, &without_loops, pairs.iter().map(|&(i, j)| long_arc(i, j)))?;
            check_stage(&c, &set, &pairs)?;
        }
    }

    let d: Vec<Arc> = loops
        .iter()
        .map(|&j| Arc::BArc { p: j, q: j })
        .chain(consecutive_pairs(n).into_iter().map(|(i, j)| long_arc(i, j)))
        .collect();
    let d_face: Face = d.iter().map(|x| id(*x)).collect();
    check(d_face.len() == 2 * n as usize, || format!("|D| = {}, expected {}", d_face.len(), 2 * n))?;
    check(
        d.iter().all(|x| x.is_loop() || x.polygon_side(n).map(|s| s.1) == Some(n - 1)),
        || "D holds arcs other than loops and wrap length n-1 arcs".into(),
    )?;
    let expected = a.complex.vertices() - d_face;
    let (canonical, _) = core(&a.complex, CoreOrder::Canonical);
    expect_set(&canonical, canonical.vertices(), expected, "canonical core")?;
    check(dominated_vertices(&canonical).is_empty(), || "core still has a dominated vertex".into())?;
    check(canonical.vertex_count() > 1, || "core is a point".into())?;
    for &seed in seeds {
        let (k, _) = core(&a.complex, CoreOrder::Random(seed));
        expect_set(&k, k.vertices(), expected, &format!("core for seed {seed}"))?;
    }
    Ok(NonStrongEvidence {
        stages_checked: stages,
        removed: d.iter().map(Arc::label).collect(),
        core_vertices: canonical.vertex_count(),
        seeds_agreeing: seeds.len(),
    })
}

fn remove(a: &ArcComplex, c: &Complex, arcs: impl Iterator<Item = Arc>) -> Result<Complex, TheoremError> {
    let mut cur = c.clone();
    for arc in arcs {
        cur = cur.vertex_deletion(a.expect_id(&arc))?;
    }
    Ok(cur)
}

/// The Möbius crown arc complex is not strongly collapsible for `n >= 4`.
pub fn thm_mobius_not_strong(n: u32, seeds: &[u64]) -> ClaimResult {
    let claim = ClaimResult::new(
        "mobius-not-strong",
        "for n >= 4 the non-orientable crown arc complex has core A minus the loops and the long arcs over consecutive pairs",
        Some(Size::One(n)),
    );
    match mobius_nonstrong_check(n, seeds) {
        Ok(ev) => {
            let (strong, _) = is_strongly_collapsible(&arc_complex(&Surface::MobiusCrown { n }).expect("valid").complex);
            claim
                .verdict(
                    !strong,
                    format!(
                        "{} stages match, |D| = {}, core has {} vertices, {} seeds agree",
                        ev.stages_checked,
                        ev.removed.len(),
                        ev.core_vertices,
                        ev.seeds_agreeing
                    ),
                )
                .with_evidence(json!(ev))
        }
        Err(e) => claim.verdict(false, e.to_string()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pairs_wrap_around() {
        assert_eq!(consecutive_pairs(4), vec![(1, 2), (2, 3), (3, 4), (4, 1)]);
        assert_eq!(long_arc(1, 2), Arc::BArc { p: 2, q: 1 });
    }

    #[test]
    fn four_vertices() {
        let ev = mobius_nonstrong_check(4, &[1, 2, 3]).unwrap();
        assert_eq!(ev.core_vertices, 14);
        assert_eq!(ev.removed.len(), 8);
    }

    #[test]
    fn long_arc_dominated_by_c_arc() {
        let a = arc_complex(&Surface::MobiusCrown { n: 4 }).unwrap();
        let c = remove(&a, &a.complex, [Arc::BArc { p: 1, q: 1 }, Arc::BArc { p: 2, q: 2 }].into_iter()).unwrap();
        expect_dominated(&c, a.expect_id(&Arc::BArc { p: 2, q: 1 }), a.expect_id(&Arc::MobC(1, 2)), "I = {1,2}")
            .unwrap();
    }
}
