//! Flip graphs of polygons and crowns: size and diameter.

use arclab::arcs::{arc_complex, Surface};
use arclab::certify::flip_graph;

fn main() -> arclab::Result<()> {
    let surfaces = (4..=9)
        .map(|n| Surface::Polygon { n })
        .chain((1..=6).map(|n| Surface::Crown { n }));
    for s in surfaces {
        let a = arc_complex(&s)?;
        let g = flip_graph(&a.complex)?;
        let d = g.diameter().map_or("disconnected".to_string(), |d| d.to_string());
        println!("{s:<12} triangulations {:>5}  flips {:>6}  diameter {d}", g.vertex_count(), g.edge_count());
    }
    Ok(())
}
