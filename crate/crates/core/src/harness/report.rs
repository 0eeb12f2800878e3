use serde::{Serialize, Serializer};

/// Outcome of the exact solver for one graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PcOutcome {
    Exact(usize),
    /// Search cap reached.
    Undecided,
}

impl Serialize for PcOutcome {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            PcOutcome::Exact(pc) => s.serialize_u64(*pc as u64),
            PcOutcome::Undecided => s.serialize_str("undecided"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyRecord {
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub delta: usize,
    pub bridges: usize,
    pub pc: Option<PcOutcome>,
    pub threshold: Option<u64>,
    /// `None` when the hypothesis fails, `Some(false)` for a listed exception.
    pub predicted: Option<bool>,
    pub observed: Option<bool>,
    pub violation: bool,
    pub exception: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub task: String,
    pub n: Option<usize>,
    pub source: String,
    pub scanned: usize,
    pub filtered_out: usize,
    pub hypothesis_held: usize,
    /// Graphs in the hypothesis whose conclusion fails, exceptions included.
    pub violators: Vec<String>,
    pub violations: usize,
    pub undecided: usize,
    pub exhaustive: bool,
    pub expected_exceptions: Vec<String>,
    pub exceptions_matched: usize,
    pub exception_set_equal: bool,
    pub wall_time_ms: u128,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub records: Vec<VerifyRecord>,
    pub summary: Summary,
}

fn cell<T: ToString>(v: Option<T>) -> String {
    v.map(|v| v.to_string()).unwrap_or_default()
}

impl VerifyReport {
    /// One JSON object per record, then the summary object.
    pub fn to_jsonl(&self) -> String {
        let mut out = String::new();
        for r in &self.records {
            out.push_str(&serde_json::to_string(r).expect("records serialize"));
            out.push('\n');
        }
        out.push_str(&serde_json::to_string(&self.summary).expect("summary serializes"));
        out.push('\n');
        out
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("graph6,n,m,delta,bridges,pc,predicted,observed,violation\n");
        for r in &self.records {
            let pc = match r.pc {
                Some(PcOutcome::Exact(pc)) => pc.to_string(),
                Some(PcOutcome::Undecided) => "undecided".into(),
                None => String::new(),
            };
            out.push_str(&format!(
                "{},{},{},{},{},{pc},{},{},{}\n",
                r.graph6,
                r.n,
                r.m,
                r.delta,
                r.bridges,
                cell(r.predicted),
                cell(r.observed),
                r.violation
            ));
        }
        out
    }

    /// Short human-readable rendering of the summary.
    pub fn render_summary(&self) -> String {
        let s = &self.summary;
        let mut out = format!(
            "task: {}\nsource: {}\nscanned: {}\nfiltered out: {}\nhypothesis held: {}\nviolations: {}\nundecided: {}\nexhaustive: {}\n",
            s.task, s.source, s.scanned, s.filtered_out, s.hypothesis_held, s.violations, s.undecided, s.exhaustive
        );
        let verdict = if s.exception_set_equal {
            "matches expected exception set"
        } else {
            "differs from expected exception set"
        };
        out.push_str(&format!("violators: {} ({verdict})\n", s.violators.len()));
        for v in &s.violators {
            let tag = if s.expected_exceptions.contains(v) { "expected" } else { "unexpected" };
            out.push_str(&format!("  {v} {tag}\n"));
        }
        out.push_str(&format!("wall time: {} ms\n", s.wall_time_ms));
        out
    }
}
