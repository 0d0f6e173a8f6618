//! Shelling-based ball and sphere certificates for polygons, crowns and
//! non-orientable crowns.

use std::time::Instant;

use arclab::arcs::{arc_complex, Surface};
use arclab::certify::{certify, Effort};

fn main() -> arclab::Result<()> {
    let surfaces = (4..=8)
        .map(|n| Surface::Polygon { n })
        .chain((2..=5).map(|n| Surface::Crown { n }))
        .chain((2..=5).map(|n| Surface::MobiusCrown { n }));
    for s in surfaces {
        let a = arc_complex(&s)?;
        let start = Instant::now();
        let cert = certify(&a.complex, Effort::default());
        println!(
            "{s:<16} facets {:>5}  chi {:>2}  {:<13} via {:<14} ({:.2?})",
            a.complex.facets().len(),
            a.complex.euler_characteristic(),
            cert.verdict.to_string(),
            cert.rule.map_or("-".to_string(), |r| serde_json::to_value(r).unwrap().as_str().unwrap().to_string()),
            start.elapsed()
        );
    }
    Ok(())
}
