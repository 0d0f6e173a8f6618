use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::arcs::{arc_complex, enumerate_arcs, inner_arc_complex, Arc, ArcComplex, Surface};
use crate::certify::{certify, flip_graph, shelling_search, Effort, Shelling, Verdict};
use crate::collapse::DEFAULT_BUDGET;
use crate::face::Face;
use crate::strong::is_strongly_collapsible;

use super::{
    thm_crown_strong, thm_inner_mobius, thm_mobius_collapse, thm_mobius_not_strong, thm_strip_strong, ClaimResult,
    Report, Size,
};

/// Largest instance of each family the suite runs. Zero disables a family.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub polygon: u32,
    pub crown: u32,
    pub mobius: u32,
    pub inner: u32,
    /// Largest `m + n` for integral strips.
    pub strip: u32,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            polygon: 9,
            crown: 6,
            mobius: 5,
            inner: 7,
            strip: 10,
        }
    }
}

impl Limits {
    pub fn zero() -> Self {
        Limits {
            polygon: 0,
            crown: 0,
            mobius: 0,
            inner: 0,
            strip: 0,
        }
    }
}

/// Number of random removal orders compared in the core checks.
pub const CORE_SEEDS: usize = 20;

type Job = Box<dyn Fn() -> ClaimResult + Send + Sync>;

fn catalan(k: u64) -> u64 {
    (0..k).fold(1, |c, i| c * 2 * (2 * i + 1) / (i + 2))
}

fn certificate_claim(claim: ClaimResult, a: &ArcComplex, expected: Verdict) -> ClaimResult {
    let cert = certify(&a.complex, Effort::default());
    let chi = a.complex.euler_characteristic();
    let ok = cert.verdict == expected && expected.expected_euler() == Some(chi);
    let rule = serde_json::to_value(cert.rule).expect("rule serializes");
    claim
        .verdict(
            ok,
            format!(
                "{} facets, verdict {} by {}, euler characteristic {chi}",
                a.complex.facets().len(),
                cert.verdict,
                rule.as_str().unwrap_or("no rule")
            ),
        )
        .with_evidence(json!(cert))
}

fn polygon_sphere(n: u32) -> ClaimResult {
    let claim = ClaimResult::new(
        "polygon-sphere",
        "polygon arc complexes are shellable spheres of dimension n-4 with Catalan many facets",
        Some(Size::One(n)),
    );
    let a = arc_complex(&Surface::Polygon { n }).expect("valid polygon");
    let facets = a.complex.facets().len() as u64;
    let want = catalan(n as u64 - 2);
    if facets != want {
        return claim.verdict(false, format!("{facets} facets, expected {want}"));
    }
    certificate_claim(claim, &a, Verdict::Sphere { dim: n as isize - 4 })
}

/// Ball certificate, plus the link pattern: c-arc links are spheres and
/// non-loop b-arc links are balls, one dimension down.
fn crown_ball(surface: Surface) -> ClaimResult {
    let n = surface.boundary_vertices();
    let name = if matches!(surface, Surface::Crown { .. }) { "crown-ball" } else { "mobius-ball" };
    let claim = ClaimResult::new(
        name,
        "crown arc complexes of both orientations are combinatorial balls of dimension n-1",
        Some(Size::One(n)),
    );
    let a = arc_complex(&surface).expect("valid crown");
    let claim = certificate_claim(claim, &a, Verdict::Ball { dim: n as isize - 1 });
    if !claim.passed() || !matches!(surface, Surface::Crown { .. }) {
        return claim;
    }
    for (id, arc) in a.arcs.iter().enumerate() {
        let link = a.complex.link(Face::singleton(id)).expect("vertex");
        let expected = if arc.is_c_arc() {
            Verdict::Sphere { dim: n as isize - 2 }
        } else if !arc.is_loop() {
            Verdict::Ball { dim: n as isize - 2 }
        } else {
            continue;
        };
        let got = certify(&link, Effort::default()).verdict;
        if got != expected {
            let detail = format!("link of {arc} certifies as {got}, expected {expected}");
            return claim.verdict(false, detail);
        }
    }
    let detail = format!("{}; vertex links certified", claim.detail);
    claim.verdict(true, detail)
}

fn crown_flip(n: u32) -> ClaimResult {
    let claim = ClaimResult::new(
        "crown-flip-diameter",
        "the flip graph of a crown is connected with diameter 2n-2",
        Some(Size::One(n)),
    );
    let a = arc_complex(&Surface::Crown { n }).expect("valid crown");
    let g = flip_graph(&a.complex).expect("crown complexes are pure");
    let diameter = g.diameter();
    claim.verdict(
        diameter == Some(2 * n as usize - 2),
        format!(
            "{} triangulations, {} flips, diameter {}",
            g.vertex_count(),
            g.edge_count(),
            diameter.map_or("undefined".to_string(), |d| d.to_string())
        ),
    )
}

fn inner_not_cone(n: u32) -> ClaimResult {
    let claim = ClaimResult::new(
        "inner-mobius-not-a-cone",
        "for n >= 4 the inner complex of a non-orientable crown is not a cone",
        Some(Size::One(n)),
    );
    let a = inner_arc_complex(&Surface::MobiusCrown { n }).expect("valid");
    let apex = a.complex.is_cone();
    claim.verdict(
        apex.is_none(),
        match apex {
            Some(v) => format!("apex {}", a.complex.label(v)),
            None => "no vertex lies in every facet".to_string(),
        },
    )
}

fn b_arcs_meet_c_arcs(n: u32) -> ClaimResult {
    let surface = Surface::MobiusCrown { n };
    let claim = ClaimResult::new(
        "mobius-b-arc-meets-c-arc",
        "for n >= 2 every b-arc of a non-orientable crown meets some c-arc",
        Some(Size::One(n)),
    );
    let arcs = enumerate_arcs(&surface);
    let lonely: Vec<String> = arcs
        .iter()
        .filter(|b| b.is_b_arc())
        .filter(|b| {
            arcs.iter()
                .filter(|c| c.is_c_arc())
                .all(|c| crate::arcs::disjoint(&surface, b, c).expect("valid arcs"))
        })
        .map(Arc::label)
        .collect();
    claim.verdict(lonely.is_empty(), format!("b-arcs disjoint from every c-arc: {lonely:?}"))
}

fn mobius_three_strong() -> ClaimResult {
    let a = arc_complex(&Surface::MobiusCrown { n: 3 }).expect("valid");
    let (strong, trace) = is_strongly_collapsible(&a.complex);
    ClaimResult::new(
        "mobius-strong-collapsibility",
        "strong collapsibility of the three-vertex non-orientable crown arc complex is left open",
        Some(Size::One(3)),
    )
    .info(format!("strongly collapsible: {strong}"))
    .with_note("not-a-paper-claim")
    .with_evidence(json!({ "strongly_collapsible": strong, "trace": trace }))
}

fn shellable(surface: Surface, inner: bool) -> ClaimResult {
    let n = surface.boundary_vertices();
    let (name, paper_ref) = if inner {
        (
            "inner-mobius-shellable",
            "the inner complex of a non-orientable crown, reported alongside the full complex",
        )
    } else {
        ("mobius-shellable", "arc complexes of non-orientable crowns are shellable")
    };
    let claim = ClaimResult::new(name, paper_ref, Some(Size::One(n)));
    let a = if inner { inner_arc_complex(&surface) } else { arc_complex(&surface) }.expect("valid");
    let result = shelling_search(&a.complex, DEFAULT_BUDGET);
    let found = matches!(result, Ok(Shelling::Proven(_)));
    let detail = format!(
        "{} facets, pure: {}, shelling: {}",
        a.complex.facets().len(),
        a.complex.is_pure(),
        match &result {
            Ok(Shelling::Proven(_)) => "found",
            Ok(Shelling::Disproven) => "none exists",
            Ok(Shelling::Inconclusive) => "budget exhausted",
            Err(_) => "not pure",
        }
    );
    if inner {
        claim.info(detail)
    } else {
        claim.verdict(found, detail)
    }
}

fn jobs_for(limits: Limits, seed: u64) -> Vec<Job> {
    let mut jobs: Vec<Job> = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let seeds: Vec<u64> = (0..CORE_SEEDS).map(|_| rng.gen()).collect();
    for n in 1..=limits.crown {
        jobs.push(Box::new(move || thm_crown_strong(n)));
    }
    for n in 1..=limits.crown {
        jobs.push(Box::new(move || crown_ball(Surface::Crown { n })));
    }
    for n in 1..=limits.crown {
        jobs.push(Box::new(move || crown_flip(n)));
    }
    for n in 4..=limits.polygon {
        jobs.push(Box::new(move || polygon_sphere(n)));
    }
    for n in 1..=limits.inner {
        jobs.push(Box::new(move || thm_inner_mobius(n)));
    }
    for n in 4..=limits.inner {
        jobs.push(Box::new(move || inner_not_cone(n)));
    }
    for n in 2..=limits.inner {
        jobs.push(Box::new(move || b_arcs_meet_c_arcs(n)));
    }
    for n in 1..=limits.mobius {
        jobs.push(Box::new(move || thm_mobius_collapse(n)));
    }
    for n in 1..=limits.mobius {
        jobs.push(Box::new(move || crown_ball(Surface::MobiusCrown { n })));
    }
    for n in 1..=limits.mobius {
        jobs.push(Box::new(move || shellable(Surface::MobiusCrown { n }, false)));
        jobs.push(Box::new(move || shellable(Surface::MobiusCrown { n }, true)));
    }
    for n in 4..=limits.mobius {
        let seeds = seeds.clone();
        jobs.push(Box::new(move || thm_mobius_not_strong(n, &seeds)));
    }
    if limits.mobius >= 3 {
        jobs.push(Box::new(mobius_three_strong));
    }
    for total in 5..=limits.strip {
        for m in 1..total {
            jobs.push(Box::new(move || thm_strip_strong(m, total - m)));
        }
    }
    jobs
}

/// Runs every suite within `limits` on one thread with seed 0.
pub fn run_all(limits: Limits) -> Report {
    run_all_with(limits, 0, 1)
}

/// Runs every suite within `limits` on up to `jobs` threads. The order of
/// claims in the report does not depend on `jobs`.
pub fn run_all_with(limits: Limits, seed: u64, jobs: usize) -> Report {
    let work = jobs_for(limits, seed);
    let slots: Vec<Mutex<Option<ClaimResult>>> = work.iter().map(|_| Mutex::new(None)).collect();
    let next = AtomicUsize::new(0);
    std::thread::scope(|scope| {
        for _ in 0..jobs.max(1).min(work.len().max(1)) {
            scope.spawn(|| loop {
                let k = next.fetch_add(1, Ordering::Relaxed);
                let Some(job) = work.get(k) else { break };
                *slots[k].lock().expect("slot lock") = Some(job());
            });
        }
    });
    let mut report = Report::new(seed);
    report.claims = slots
        .into_iter()
        .map(|s| s.into_inner().expect("slot lock").expect("every job ran"))
        .collect();
    report
}
