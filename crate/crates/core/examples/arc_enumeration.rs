//! Lists the arcs of small surfaces and the shape of their arc complexes.

use arclab::arcs::{arc_complex, disjoint, Arc, Surface};

fn main() -> arclab::Result<()> {
    let surfaces = [
        Surface::Polygon { n: 6 },
        Surface::Crown { n: 3 },
        Surface::MobiusCrown { n: 2 },
        Surface::IntegralStrip { m: 3, n: 2 },
    ];
    for s in surfaces {
        let a = arc_complex(&s)?;
        let labels: Vec<String> = a.arcs.iter().map(Arc::label).collect();
        println!("{s}: {} arcs", a.arcs.len());
        println!("  {}", labels.join(" "));
        println!(
            "  dimension {}, f-vector {:?}, chi {}",
            a.complex.dimension(),
            a.complex.f_vector(),
            a.complex.euler_characteristic()
        );
        let first = a.arcs[0];
        let partners: Vec<String> = a
            .arcs
            .iter()
            .filter(|b| **b != first && disjoint(&s, &first, b).unwrap_or(false))
            .map(Arc::label)
            .collect();
        println!("  disjoint from {first}: {}", partners.join(" "));
    }
    Ok(())
}
