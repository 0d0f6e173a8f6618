//! Cores of non-orientable crown arc complexes under several removal orders.

use arclab::arcs::{arc_complex, Surface};
use arclab::simplicial::isomorphic;
use arclab::strong::{core, CoreOrder};

fn main() -> arclab::Result<()> {
    for n in 2..=5 {
        let a = arc_complex(&Surface::MobiusCrown { n })?;
        let (k, trace) = core(&a.complex, CoreOrder::Canonical);
        let removed: Vec<String> = trace.iter().map(|s| a.arc(s.removed).label()).collect();
        println!("M{n}: {} arcs, core {} vertices", a.arcs.len(), k.vertex_count());
        println!("  removed {}", removed.join(" "));
        let agree = (1..=5u64)
            .filter(|&seed| {
                let (other, _) = core(&a.complex, CoreOrder::Random(seed));
                other.vertices() == k.vertices() || isomorphic(&other, &k).unwrap_or(false)
            })
            .count();
        println!("  {agree}/5 random orders give the same core");
    }
    Ok(())
}
