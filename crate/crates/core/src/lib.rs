//! Arc complexes of marked surfaces and machine-checked collapse certificates.
//!
//! The crate builds the arc complexes of convex polygons, crowns (a disk with
//! one interior marked point), non-orientable crowns (a Möbius strip with
//! boundary marked points) and integral strips from explicit combinatorial arc
//! encodings. On top of a small simplicial engine it provides elementary
//! collapses, strong collapses and cores, shellings and ball/sphere
//! certificates, and replays the collapsibility schedules of these complexes
//! step by step.
//!
//! ```
//! use arclab::arcs::{arc_complex, Surface};
//! use arclab::strong::is_strongly_collapsible;
//!
//! let crown = arc_complex(&Surface::Crown { n: 4 }).unwrap();
//! let (collapsible, trace) = is_strongly_collapsible(&crown.complex);
//! assert!(collapsible);
//! assert_eq!(trace.len(), crown.arcs.len() - 1);
//! ```

pub mod arcs;
pub mod certify;
pub mod cli;
pub mod collapse;
pub mod error;
pub mod face;
pub mod simplicial;
pub mod strong;
pub mod theorems;

pub use error::{Error, Result};
pub use face::Face;
pub use simplicial::Complex;
