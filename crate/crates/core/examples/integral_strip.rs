//! Strong collapse of integral strip arc complexes.

use arclab::theorems::strip_schedule;

fn main() {
    for total in 4..=8u32 {
        for m in 1..total {
            let n = total - m;
            match strip_schedule(m, n) {
                Ok(s) => println!(
                    "{m}x{n}: {} arcs, dimension {}, {} removals",
                    s.arcs.arcs.len(),
                    s.arcs.complex.dimension(),
                    s.trace.len()
                ),
                Err(e) => println!("{m}x{n}: {e}"),
            }
        }
    }
}
