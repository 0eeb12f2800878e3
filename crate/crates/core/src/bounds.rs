//! Closed-form edge-count thresholds and extremal size bounds.
//!
//! Everything here is exact integer arithmetic. `C(a, 2)` is taken as 0 for
//! `a < 2`, including negative arguments, which several thresholds reach at
//! small orders.

use crate::{Error, Result};
use serde::Serialize;

/// `C(a, 2)`, zero for `a < 2`.
pub fn binomial2(a: i64) -> u64 {
    if a < 2 {
        0
    } else {
        (a as u64) * (a as u64 - 1) / 2
    }
}

/// How the main theorem's `m` is read when `δ = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum MainReading {
    /// `m = k + 1`.
    Body,
    /// `m = t`, the bridge count of the graph under test.
    Abstract { t: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "variant", rename_all = "kebab-case")]
pub enum BoundQuery {
    /// Least size forcing `pc <= k`: `C(n-k-1, 2) + k + 2`.
    Gnk { n: usize, k: usize },
    /// Size bound for `t` bridges: `C(n-t, 2) + t`.
    BridgeBoundSimple { n: usize, t: usize },
    /// Size bound for `t` bridges and minimum degree `δ`.
    BridgeBoundLemma { n: usize, t: usize, delta: usize },
    /// Minimum-degree threshold forcing `pc <= k` for `k >= 3`.
    MainThm {
        n: usize,
        k: usize,
        delta: usize,
        reading: MainReading,
    },
    /// `k = 2`, `δ = 2`: `C(n-5, 2) + 7`.
    Thm34 { n: usize },
    /// Conjectured `k = 2` threshold for `δ >= 3`.
    Conjecture { n: usize, delta: usize },
    /// Least size forcing circumference above `c`.
    ErdosGallai { n: usize, c: usize },
    /// Woodall's threshold for `n = t·m + r`.
    Woodall { n: usize, m: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundResult {
    pub value: u64,
    /// Output of the variant's `m` rule, when it has one.
    pub m_used: Option<i64>,
    pub formula: String,
}

fn contract(msg: impl Into<String>) -> Error {
    Error::Contract(msg.into())
}

/// `C(n - m - (s)(δ+1), 2) + s·C(δ+1, 2) + tail` where `s` is the number of
/// `(δ+1)`-cliques hanging off the rest of the graph.
fn clique_chain(n: i64, m: i64, s: i64, delta: i64, tail: i64) -> (i64, u64, String) {
    let first = n - m - s * (delta + 1);
    let value = binomial2(first) as i64 + s * binomial2(delta + 1) as i64 + tail;
    let formula = format!(
        "C({n}-{m}-{s}*{d1}, 2) + {s}*C({d1}, 2) + {tail} = C({first}, 2) + {s}*{c} + {tail} = {value}",
        d1 = delta + 1,
        c = binomial2(delta + 1)
    );
    (first, value.max(0) as u64, formula)
}

/// Largest size of a connected graph of order `n` with `t` bridges and
/// minimum degree `δ`.
///
/// `m` is 0 without bridges, `t` when `δ = 1`, and `⌊(t-1)/(δ-1)⌋` otherwise.
/// With bridges the remainder component must keep at least one vertex,
/// otherwise the parameters describe no graph and an infeasibility error is
/// returned.
pub fn bridge_edge_bound(n: usize, t: usize, delta: usize) -> Result<BoundResult> {
    if n == 0 {
        return Err(Error::Infeasible("n must be at least 1".into()));
    }
    if delta == 0 {
        return Err(Error::Infeasible("minimum degree must be at least 1".into()));
    }
    if t == 0 {
        let value = binomial2(n as i64);
        return Ok(BoundResult {
            value,
            m_used: Some(0),
            formula: format!("C({n}, 2) = {value}"),
        });
    }
    let m = if delta == 1 {
        t
    } else {
        (t - 1) / (delta - 1)
    } as i64;
    let (first, value, formula) =
        clique_chain(n as i64, m, t as i64 - m, delta as i64, t as i64);
    if first < 1 {
        return Err(Error::Infeasible(format!(
            "n - m - (t-m)(delta+1) = {first} < 1 for n={n}, t={t}, delta={delta}"
        )));
    }
    Ok(BoundResult {
        value,
        m_used: Some(m),
        formula,
    })
}

/// Minimal edge count of a size-threshold theorem.
pub fn pc_size_threshold(q: &BoundQuery) -> Result<BoundResult> {
    match *q {
        BoundQuery::Gnk { n, k } => {
            if k < 2 {
                return Err(contract("g(n,k) needs k >= 2"));
            }
            let a = n as i64 - k as i64 - 1;
            let value = binomial2(a) + k as u64 + 2;
            Ok(BoundResult {
                value,
                m_used: None,
                formula: format!("C({a}, 2) + {k} + 2 = {value}"),
            })
        }
        BoundQuery::MainThm {
            n,
            k,
            delta,
            reading,
        } => {
            if k < 3 || delta < 1 {
                return Err(contract("main theorem needs k >= 3 and delta >= 1"));
            }
            let m = match (delta, reading) {
                (1, MainReading::Body) => k as i64 + 1,
                (1, MainReading::Abstract { t }) => t as i64,
                _ => (k / (delta - 1)) as i64,
            };
            let s = k as i64 + 1 - m;
            let (_, value, formula) = clique_chain(n as i64, m, s, delta as i64, k as i64 + 2);
            Ok(BoundResult {
                value,
                m_used: Some(m),
                formula,
            })
        }
        BoundQuery::Thm34 { n } => {
            if n < 6 {
                return Err(contract("k=2, delta=2 threshold needs n >= 6"));
            }
            let value = binomial2(n as i64 - 5) + 7;
            Ok(BoundResult {
                value,
                m_used: Some(2),
                formula: format!("C({}, 2) + 7 = {value}", n as i64 - 5),
            })
        }
        BoundQuery::Conjecture { n, delta } => {
            if delta < 3 {
                return Err(contract("conjecture needs delta >= 3"));
            }
            let m = if delta == 3 { 1 } else { 0 };
            let (_, value, formula) = clique_chain(n as i64, m, 3 - m, delta as i64, 4);
            Ok(BoundResult {
                value,
                m_used: Some(m),
                formula,
            })
        }
        _ => Err(contract("not a pc size-threshold variant")),
    }
}

/// Smallest size strictly above `c(n-1)/2`.
pub fn erdos_gallai_min_edges(c: usize, n: usize) -> u64 {
    (c * n.saturating_sub(1) / 2) as u64 + 1
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct WoodallThreshold {
    pub t: usize,
    pub r: usize,
    /// Sizes strictly above this force `c >= m+2` and `p >= m+3`.
    pub threshold: u64,
}

pub fn woodall_min_edges(n: usize, m: usize) -> Result<WoodallThreshold> {
    if m == 0 || m > n {
        return Err(contract(format!("woodall needs 1 <= m <= n, got m={m}, n={n}")));
    }
    let t = (n - 1) / m;
    let r = n - t * m;
    Ok(WoodallThreshold {
        t,
        r,
        threshold: t as u64 * binomial2(m as i64 + 1) + binomial2(r as i64),
    })
}

/// Evaluates any variant.
pub fn evaluate(q: &BoundQuery) -> Result<BoundResult> {
    match *q {
        BoundQuery::BridgeBoundSimple { n, t } => {
            if n == 0 || t >= n {
                return Err(Error::Infeasible(format!("need t < n, got n={n}, t={t}")));
            }
            let value = binomial2((n - t) as i64) + t as u64;
            Ok(BoundResult {
                value,
                m_used: None,
                formula: format!("C({}, 2) + {t} = {value}", n - t),
            })
        }
        BoundQuery::BridgeBoundLemma { n, t, delta } => bridge_edge_bound(n, t, delta),
        BoundQuery::ErdosGallai { n, c } => {
            if c < 2 || n < 3 {
                return Err(contract("erdos-gallai needs c >= 2 and n >= 3"));
            }
            let value = erdos_gallai_min_edges(c, n);
            Ok(BoundResult {
                value,
                m_used: None,
                formula: format!("floor({c}*{}/2) + 1 = {value}", n - 1),
            })
        }
        BoundQuery::Woodall { n, m } => {
            let w = woodall_min_edges(n, m)?;
            Ok(BoundResult {
                value: w.threshold,
                m_used: Some(m as i64),
                formula: format!(
                    "{n} = {}*{m} + {}; {}*C({}, 2) + C({}, 2) = {}",
                    w.t,
                    w.r,
                    w.t,
                    m + 1,
                    w.r,
                    w.threshold
                ),
            })
        }
        _ => pc_size_threshold(q),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn binomial_values() {
        assert_eq!(binomial2(5), 10);
        assert_eq!(binomial2(1), 0);
        assert_eq!(binomial2(0), 0);
        assert_eq!(binomial2(-3), 0);
    }

    #[test]
    fn binomial_identities() {
        for a in 1..=100i64 {
            assert_eq!(binomial2(a + 1), binomial2(a) + a as u64);
            for b in 1..=100i64 {
                assert_eq!(binomial2(a) + binomial2(b) + (a * b) as u64, binomial2(a + b));
            }
        }
    }

    #[test]
    fn bridge_bound_examples() {
        let r = bridge_edge_bound(10, 3, 1).unwrap();
        assert_eq!((r.m_used, r.value), (Some(3), 24));
        let r = bridge_edge_bound(10, 2, 2).unwrap();
        assert_eq!((r.m_used, r.value), (Some(1), 20));
        let r = bridge_edge_bound(10, 0, 2).unwrap();
        assert_eq!((r.m_used, r.value), (Some(0), 45));
        assert!(matches!(bridge_edge_bound(5, 2, 3), Err(Error::Infeasible(_))));
        assert!(matches!(bridge_edge_bound(4, 4, 1), Err(Error::Infeasible(_))));
        // with δ = 1 the lemma collapses to the simple bridge bound
        for n in 2..30 {
            for t in 0..n {
                assert_eq!(
                    bridge_edge_bound(n, t, 1).unwrap().value,
                    evaluate(&BoundQuery::BridgeBoundSimple { n, t }).unwrap().value
                );
            }
        }
    }

    #[test]
    fn threshold_examples() {
        let v = |q| pc_size_threshold(&q).unwrap();
        assert_eq!(v(BoundQuery::Gnk { n: 14, k: 2 }).value, 59);
        let main = v(BoundQuery::MainThm {
            n: 20,
            k: 3,
            delta: 2,
            reading: MainReading::Body,
        });
        assert_eq!((main.m_used, main.value), (Some(3), 99));
        assert_eq!(v(BoundQuery::Thm34 { n: 9 }).value, 13);
        let conj = v(BoundQuery::Conjecture { n: 20, delta: 4 });
        assert_eq!((conj.m_used, conj.value), (Some(0), 44));
        assert!(pc_size_threshold(&BoundQuery::Gnk { n: 10, k: 1 }).is_err());
        assert!(pc_size_threshold(&BoundQuery::Thm34 { n: 5 }).is_err());
        assert!(pc_size_threshold(&BoundQuery::Conjecture { n: 9, delta: 2 }).is_err());
        assert!(pc_size_threshold(&BoundQuery::MainThm {
            n: 20,
            k: 2,
            delta: 2,
            reading: MainReading::Body
        })
        .is_err());
    }

    #[test]
    fn main_theorem_body_reading_reduces_to_gnk_at_degree_one() {
        for n in 5..40 {
            for k in 3..8 {
                let main = pc_size_threshold(&BoundQuery::MainThm {
                    n,
                    k,
                    delta: 1,
                    reading: MainReading::Body,
                })
                .unwrap();
                let gnk = pc_size_threshold(&BoundQuery::Gnk { n, k }).unwrap();
                assert_eq!(main.value, gnk.value);
            }
        }
    }

    #[test]
    fn erdos_gallai_examples() {
        assert_eq!(erdos_gallai_min_edges(4, 9), 17);
        assert_eq!(erdos_gallai_min_edges(2, 5), 5);
        assert_eq!(erdos_gallai_min_edges(3, 9), 13);
    }

    #[test]
    fn woodall_examples() {
        assert_eq!(
            woodall_min_edges(10, 2).unwrap(),
            WoodallThreshold { t: 4, r: 2, threshold: 13 }
        );
        assert_eq!(
            woodall_min_edges(11, 3).unwrap(),
            WoodallThreshold { t: 3, r: 2, threshold: 19 }
        );
        assert_eq!(
            woodall_min_edges(4, 4).unwrap(),
            WoodallThreshold { t: 0, r: 4, threshold: 6 }
        );
        assert!(woodall_min_edges(4, 0).is_err());
    }

    #[test]
    fn bridge_bound_non_increasing_in_t() {
        for n in 1..=80 {
            for delta in 2..=15 {
                let values: Vec<u64> = (0..n)
                    .filter_map(|t| bridge_edge_bound(n, t, delta).ok())
                    .map(|r| r.value)
                    .collect();
                assert!(values.windows(2).all(|w| w[0] >= w[1]), "n={n} delta={delta}");
            }
        }
    }

    proptest! {
        #[test]
        fn woodall_decomposition_valid(n in 1usize..200, m in 1usize..200) {
            prop_assume!(m <= n);
            let w = woodall_min_edges(n, m).unwrap();
            prop_assert_eq!(w.t * m + w.r, n);
            prop_assert!(w.r >= 1 && w.r <= m);
        }

        #[test]
        fn results_are_nonnegative_and_consistent(n in 1usize..120, t in 0usize..40, delta in 1usize..12) {
            if let Ok(r) = bridge_edge_bound(n, t, delta) {
                let expected_m = if t == 0 { 0 } else if delta == 1 { t } else { (t - 1) / (delta - 1) };
                prop_assert_eq!(r.m_used, Some(expected_m as i64));
            }
        }
    }
}
