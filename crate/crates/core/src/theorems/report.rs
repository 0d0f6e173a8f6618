use serde::Serialize;

/// Size parameter of a claim: `n`, or `[m, n]` for strips.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Size {
    One(u32),
    Two([u32; 2]),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// Computed and reported, but not a claim to be gated on.
    Info,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ClaimResult {
    pub claim: String,
    pub paper_ref: String,
    pub n: Option<Size>,
    pub status: Status,
    pub evidence_path: Option<String>,
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    /// Traces and certificates backing the claim; written next to the report
    /// at `evidence_path` by the command-line tool.
    #[serde(skip)]
    pub evidence: Option<serde_json::Value>,
}

impl ClaimResult {
    pub fn new(claim: &str, paper_ref: &str, n: Option<Size>) -> Self {
        ClaimResult {
            claim: claim.to_string(),
            paper_ref: paper_ref.to_string(),
            n,
            status: Status::Info,
            evidence_path: None,
            detail: String::new(),
            note: None,
            evidence: None,
        }
    }

    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }

    pub(crate) fn verdict(mut self, ok: bool, detail: impl Into<String>) -> Self {
        self.status = if ok { Status::Pass } else { Status::Fail };
        self.detail = detail.into();
        self
    }

    pub(crate) fn info(mut self, detail: impl Into<String>) -> Self {
        self.status = Status::Info;
        self.detail = detail.into();
        self
    }

    pub(crate) fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub(crate) fn with_evidence(mut self, value: serde_json::Value) -> Self {
        let size = match self.n {
            Some(Size::One(n)) => format!("-{n}"),
            Some(Size::Two([m, n])) => format!("-{m}x{n}"),
            None => String::new(),
        };
        self.evidence_path = Some(format!("evidence/{}{}.json", self.claim, size));
        self.evidence = Some(value);
        self
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub tool: String,
    pub version: String,
    pub seed: u64,
    pub claims: Vec<ClaimResult>,
}

impl Report {
    pub fn new(seed: u64) -> Self {
        Report {
            tool: env!("CARGO_PKG_NAME").to_string(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            seed,
            claims: Vec::new(),
        }
    }

    pub fn all_passed(&self) -> bool {
        self.claims.iter().all(ClaimResult::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &ClaimResult> {
        self.claims.iter().filter(|c| !c.passed())
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}
