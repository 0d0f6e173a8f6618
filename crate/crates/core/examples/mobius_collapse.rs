//! Collapse of non-orientable crown arc complexes through sapling rounds,
//! replayed against the complex.

use std::time::Instant;

use arclab::collapse::verify_trace;
use arclab::theorems::mobius_collapse_schedule;

fn main() {
    for n in 1..=5 {
        let start = Instant::now();
        let s = match mobius_collapse_schedule(n) {
            Ok(s) => s,
            Err(e) => {
                println!("M{n}: {e}");
                continue;
            }
        };
        println!("M{n}: {} arcs, {} facets", s.arcs.arcs.len(), s.arcs.complex.facets().len());
        for r in &s.rounds {
            println!("  degree {}: {} saplings, {} collapses", r.degree, r.saplings.len(), r.steps);
        }
        let full = s.full_trace();
        let end = verify_trace(&s.arcs.complex, &full).expect("trace replays");
        println!(
            "  {} + {} collapses onto {} ({:.2?})",
            s.boundary_trace.len(),
            s.inner_trace.len(),
            end.face_labels(end.vertices()).join(" "),
            start.elapsed()
        );
    }
}
