//! Corpus enumeration and theorem replay over whole classes of graphs.

mod enumerate;
mod report;
mod verify;

pub use enumerate::{enumerate_connected, stream_graph6, Graph6Stream, ENUMERATE_MAX_N};
pub use report::{PcOutcome, Summary, VerifyRecord, VerifyReport};
pub use verify::{check_monotonicity, run_verification, search_counterexamples};

use crate::Error;
use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Theorem {
    /// Complete ⇔ pc 1, stars, trees and traceable graphs.
    Prop11,
    /// Bridgeless ⇒ `pc <= 3`.
    Thm2Bridgeless,
    /// `pc <= max(3, Δ(G*))`.
    Thm3Gstar,
    /// `|E| >= g(n,k)` ⇒ `pc <= k`, exceptions `G*1`, `G*2` when `k = 2`.
    ThmGnk,
    /// Edge count at most the bridge/minimum-degree bound.
    LemmaBridgeBound,
    /// Minimum-degree size threshold ⇒ `pc <= k` for `k >= 3`.
    ThmMainK3,
    /// `5 <= n <= 8`, noncomplete, `δ >= 2` ⇒ `pc = 2`, exceptions `G1`, `G8`.
    ThmSmallOrder,
    /// `δ = 2`, `|E| >= C(n-5,2) + 7` ⇒ `pc <= 2`, exceptions `G1`, `Gn`.
    ThmK2D2,
    /// `n >= 9`, noncomplete, `δ >= n/4` ⇒ `pc = 2`.
    RemarkQuarterDegree,
    /// Circumference and detour thresholds.
    WoodallEgSoundness,
    /// Conjectured `k = 2` threshold for `δ >= 3`.
    ConjectureK2,
}

impl Theorem {
    pub const ALL: [Theorem; 11] = [
        Theorem::Prop11,
        Theorem::Thm2Bridgeless,
        Theorem::Thm3Gstar,
        Theorem::ThmGnk,
        Theorem::LemmaBridgeBound,
        Theorem::ThmMainK3,
        Theorem::ThmSmallOrder,
        Theorem::ThmK2D2,
        Theorem::RemarkQuarterDegree,
        Theorem::WoodallEgSoundness,
        Theorem::ConjectureK2,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Theorem::Prop11 => "prop11",
            Theorem::Thm2Bridgeless => "thm2-bridgeless",
            Theorem::Thm3Gstar => "thm3-gstar",
            Theorem::ThmGnk => "thm-gnk",
            Theorem::LemmaBridgeBound => "lemma-bridge-bound",
            Theorem::ThmMainK3 => "thm-main-k3",
            Theorem::ThmSmallOrder => "thm-small-order",
            Theorem::ThmK2D2 => "thm-k2-d2",
            Theorem::RemarkQuarterDegree => "remark-quarter-degree",
            Theorem::WoodallEgSoundness => "woodall-eg-soundness",
            Theorem::ConjectureK2 => "conjecture-k2",
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Theorem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Theorem::ALL
            .into_iter()
            .find(|t| t.tag() == s)
            .ok_or_else(|| Error::Contract(format!("unknown theorem tag `{s}`")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Source {
    Builtin,
    Graph6(PathBuf),
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Source::Builtin => f.write_str("builtin"),
            Source::Graph6(p) => write!(f, "graph6:{}", p.display()),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Filters {
    pub min_degree: Option<usize>,
    pub min_size: Option<usize>,
    pub exact_bridges: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyTask {
    pub theorem: Theorem,
    pub n: usize,
    /// Target bound for `thm-gnk` (default 2) and `thm-main-k3` (default 3).
    pub k: Option<usize>,
    /// `thm-main-k3`: read `m = t` instead of `m = k + 1` when `δ = 1`.
    pub abstract_reading: bool,
    /// `thm-k2-d2`: accept `δ >= 2`; `remark-quarter-degree`: drop `n >= 9`.
    pub widen: bool,
    pub filters: Filters,
    pub source: Source,
    /// Worker threads; `None` uses every core.
    pub jobs: Option<usize>,
}

impl VerifyTask {
    pub fn new(theorem: Theorem, n: usize) -> Self {
        VerifyTask {
            theorem,
            n,
            k: None,
            abstract_reading: false,
            widen: false,
            filters: Filters::default(),
            source: Source::Builtin,
            jobs: None,
        }
    }
}
