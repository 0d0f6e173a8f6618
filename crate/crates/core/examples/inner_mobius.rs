//! Strong collapse of inner arc complexes of non-orientable crowns.

use arclab::theorems::inner_schedule;

fn main() {
    for n in 1..=6 {
        match inner_schedule(n) {
            Ok(s) => {
                let steps: Vec<String> = s
                    .trace
                    .iter()
                    .map(|t| format!("{}>{}", s.arcs.arc(t.removed), s.arcs.arc(t.witness)))
                    .collect();
                println!("n = {n}: {} arcs, {} facets", s.arcs.arcs.len(), s.arcs.complex.facets().len());
                if (2..=4).contains(&n) {
                    println!("  {}", steps.join(", "));
                }
                println!("  ends at {}", s.terminal.face_labels(s.terminal.vertices()).join(" "));
            }
            Err(e) => println!("n = {n}: {e}"),
        }
    }
}
