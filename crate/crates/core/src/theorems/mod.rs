//! Executable collapse schedules for the arc complexes of crowns,
//! non-orientable crowns and integral strips.
//!
//! Each schedule replays a proof step by step: the named witness of every
//! domination is asserted, every elementary trace is replayed, and terminal
//! complexes are compared with their predicted vertex sets. A failure reports
//! both what was predicted and what was found.

mod crown;
mod inner;
mod mobius;
mod nonstrong;
mod report;
mod strip;
mod suite;

pub use crown::{crown_schedule, thm_crown_strong, CrownSchedule};
pub use inner::{inner_schedule, inner_schedule_in, thm_inner_mobius, InnerSchedule};
pub use mobius::{mobius_collapse_schedule, thm_mobius_collapse, MobiusRound, MobiusSchedule};
pub use nonstrong::{
    consecutive_pairs, dominated_set_prediction, mobius_nonstrong_check, thm_mobius_not_strong, NonStrongEvidence,
};
pub use report::{ClaimResult, Report, Size, Status};
pub use strip::{strip_schedule, thm_strip_strong, StripSchedule};
pub use suite::{run_all, run_all_with, Limits};

use thiserror::Error;

use crate::error::Error;
use crate::face::Face;
use crate::simplicial::Complex;
use crate::strong::dominators;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TheoremError {
    #[error("{stage}: {vertex} is not dominated by {witness}; its dominators are {dominators:?}")]
    Witness {
        stage: String,
        vertex: String,
        witness: String,
        dominators: Vec<String>,
    },
    #[error("{stage}: predicted set differs, missing {missing:?}, unexpected {unexpected:?}")]
    SetMismatch {
        stage: String,
        missing: Vec<String>,
        unexpected: Vec<String>,
    },
    #[error("{0}")]
    Check(String),
    #[error(transparent)]
    Engine(#[from] Error),
}

/// Asserts that `v` is dominated by `w` in `c`.
pub(crate) fn expect_dominated(c: &Complex, v: usize, w: usize, stage: &str) -> Result<(), TheoremError> {
    let dom = dominators(c, v);
    if v != w && dom.contains(w) {
        return Ok(());
    }
    Err(TheoremError::Witness {
        stage: stage.to_string(),
        vertex: c.label(v).to_string(),
        witness: c.label(w).to_string(),
        dominators: c.face_labels(dom),
    })
}

/// Asserts `actual == expected` as vertex sets of `c`'s table.
pub(crate) fn expect_set(c: &Complex, actual: Face, expected: Face, stage: &str) -> Result<(), TheoremError> {
    if actual == expected {
        return Ok(());
    }
    Err(TheoremError::SetMismatch {
        stage: stage.to_string(),
        missing: c.face_labels(expected - actual),
        unexpected: c.face_labels(actual - expected),
    })
}

pub(crate) fn check(ok: bool, message: impl FnOnce() -> String) -> Result<(), TheoremError> {
    if ok {
        Ok(())
    } else {
        Err(TheoremError::Check(message()))
    }
}
