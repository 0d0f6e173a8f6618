//! Strong collapse of crown arc complexes, round by round.

use arclab::arcs::Arc;
use arclab::theorems::crown_schedule;

fn main() {
    for n in 2..=6 {
        let s = match crown_schedule(n) {
            Ok(s) => s,
            Err(e) => {
                println!("Crown({n}): {e}");
                continue;
            }
        };
        println!("Crown({n}): {} arcs, {} facets", s.arcs.arcs.len(), s.arcs.complex.facets().len());
        for (k, round) in s.rounds.iter().enumerate() {
            let labels: Vec<String> = round.iter().map(Arc::label).collect();
            println!("  round {}: {}", k + 1, labels.join(" "));
        }
        let left: Vec<String> = s.terminal.face_labels(s.terminal.vertices());
        println!("  left: simplex on {}", left.join(" "));
    }
}
