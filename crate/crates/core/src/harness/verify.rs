use super::report::{PcOutcome, Summary, VerifyRecord, VerifyReport};
use super::{enumerate_connected, stream_graph6, Source, Theorem, VerifyTask, ENUMERATE_MAX_N};
use crate::bounds::{
    bridge_edge_bound, erdos_gallai_min_edges, pc_size_threshold, woodall_min_edges, BoundQuery,
    MainReading,
};
use crate::coloring::pc_exact;
use crate::graph::{build_family, canonical_form, emit_graph6, Graph, GraphFamily, CANON_MAX_N};
use crate::structure::{build_bridge_tree, find_bridges, hamiltonian_path, path_cycle_profile};
use crate::{Error, Result};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use std::collections::BTreeSet;
use std::time::Instant;

/// Canonical graph6 up to the canonical-form cap, the plain encoding above it.
fn class_key(g: &Graph) -> Result<String> {
    if g.n() <= CANON_MAX_N {
        Ok(canonical_form(g)?.to_string())
    } else {
        emit_graph6(g)
    }
}

fn degree_profile(g: &Graph) -> Vec<usize> {
    let mut d: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
    d.sort_unstable();
    d
}

/// Backtracking isomorphism test, used beyond the canonical-form cap.
fn isomorphic(a: &Graph, b: &Graph) -> bool {
    fn extend(a: &Graph, b: &Graph, map: &mut Vec<usize>, used: u64) -> bool {
        let v = map.len();
        if v == a.n() {
            return true;
        }
        for w in 0..b.n() {
            if used >> w & 1 == 1 || a.degree(v) != b.degree(w) {
                continue;
            }
            if (0..v).all(|u| a.adjacent(u, v) == b.adjacent(map[u], w)) {
                map.push(w);
                if extend(a, b, map, used | 1 << w) {
                    return true;
                }
                map.pop();
            }
        }
        false
    }
    a.n() == b.n() && a.m() == b.m() && degree_profile(a) == degree_profile(b) && {
        extend(a, b, &mut Vec::with_capacity(a.n()), 0)
    }
}

struct Exceptions {
    graphs: Vec<Graph>,
    keys: Vec<String>,
}

impl Exceptions {
    fn contains(&self, g: &Graph, key: &str) -> bool {
        if g.n() <= CANON_MAX_N {
            self.keys.iter().any(|k| k == key)
        } else {
            self.graphs.iter().any(|e| isomorphic(e, g))
        }
    }
}

struct Ctx {
    theorem: Theorem,
    k: usize,
    abstract_reading: bool,
    widen: bool,
}

fn threshold(q: BoundQuery) -> Result<u64> {
    Ok(pc_size_threshold(&q)?.value)
}

/// Whether the hypothesis holds, with the size threshold when there is one.
fn hypothesis(ctx: &Ctx, g: &Graph, t: usize) -> Result<(bool, Option<u64>)> {
    let (n, m, delta) = (g.n(), g.m() as u64, g.min_degree());
    Ok(match ctx.theorem {
        Theorem::Prop11 | Theorem::Thm3Gstar => (true, None),
        Theorem::Thm2Bridgeless => (t == 0, None),
        Theorem::ThmGnk => {
            let thr = threshold(BoundQuery::Gnk { n, k: ctx.k })?;
            (m >= thr, Some(thr))
        }
        Theorem::ThmMainK3 => {
            let reading = if ctx.abstract_reading {
                MainReading::Abstract { t }
            } else {
                MainReading::Body
            };
            let thr = threshold(BoundQuery::MainThm {
                n,
                k: ctx.k,
                delta,
                reading,
            })?;
            (m >= thr, Some(thr))
        }
        Theorem::ThmSmallOrder => ((5..=8).contains(&n) && !g.is_complete() && delta >= 2, None),
        Theorem::ThmK2D2 => {
            let degree_ok = if ctx.widen { delta >= 2 } else { delta == 2 };
            if n < 6 {
                (false, None)
            } else {
                let thr = threshold(BoundQuery::Thm34 { n })?;
                (degree_ok && m >= thr, Some(thr))
            }
        }
        Theorem::RemarkQuarterDegree => (
            (n >= 9 || ctx.widen) && !g.is_complete() && 4 * delta >= n,
            None,
        ),
        Theorem::ConjectureK2 => {
            if delta < 3 {
                (false, None)
            } else {
                let thr = threshold(BoundQuery::Conjecture { n, delta })?;
                (m >= thr, Some(thr))
            }
        }
        Theorem::LemmaBridgeBound | Theorem::WoodallEgSoundness => (true, None),
    })
}

fn prop11_failures(g: &Graph, pc: usize) -> Result<Vec<String>> {
    let mut bad = Vec::new();
    let m = g.m();
    if (pc == 1) != g.is_complete() {
        bad.push("pc = 1 iff complete".to_string());
    }
    if m >= 1 {
        if pc > m {
            bad.push("pc <= m".into());
        }
        let star = g.is_tree() && g.max_degree() == m;
        if (pc == m) != star {
            bad.push("pc = m iff star".into());
        }
    }
    if g.is_tree() && pc != g.max_degree().max(1) {
        bad.push("tree: pc = max degree".into());
    }
    if g.n() <= crate::structure::HAMILTONIAN_MAX_N && hamiltonian_path(g)?.is_some() && pc > 2 {
        bad.push("traceable: pc <= 2".into());
    }
    Ok(bad)
}

fn woodall_eg_failures(g: &Graph) -> Result<Vec<String>> {
    let (n, m) = (g.n(), g.m() as u64);
    let profile = path_cycle_profile(g)?;
    let mut bad = Vec::new();
    if n >= 3 {
        for c in 2..n {
            if m >= erdos_gallai_min_edges(c, n) && profile.circumference <= c {
                bad.push(format!("erdos-gallai c={c}"));
            }
        }
    }
    for mp in 1..=n {
        let w = woodall_min_edges(n, mp)?;
        if m > w.threshold {
            if profile.circumference < mp + 2 {
                bad.push(format!("woodall-cycle m={mp}"));
            }
            if profile.detour < mp + 3 {
                bad.push(format!("woodall-path m={mp}"));
            }
        }
    }
    Ok(bad)
}

fn pc_of(g: &Graph) -> Result<PcOutcome> {
    match pc_exact(g) {
        Ok(r) => Ok(PcOutcome::Exact(r.pc)),
        Err(Error::Unsupported { .. }) => Ok(PcOutcome::Undecided),
        Err(e) => Err(e),
    }
}

fn assess(ctx: &Ctx, exceptions: &Exceptions, g: &Graph) -> Result<(VerifyRecord, String)> {
    let (n, m, delta) = (g.n(), g.m(), g.min_degree());
    let t = find_bridges(g)?.len();
    let key = class_key(g)?;
    let mut rec = VerifyRecord {
        graph6: emit_graph6(g)?,
        n,
        m,
        delta,
        bridges: t,
        pc: None,
        threshold: None,
        predicted: None,
        observed: None,
        violation: false,
        exception: exceptions.contains(g, &key),
        note: None,
    };
    let failures = match ctx.theorem {
        Theorem::LemmaBridgeBound => {
            rec.predicted = Some(true);
            match bridge_edge_bound(n, t, delta) {
                Ok(b) => {
                    rec.threshold = Some(b.value);
                    Some(if m as u64 <= b.value { vec![] } else { vec![b.formula] })
                }
                Err(e) => Some(vec![e.to_string()]),
            }
        }
        Theorem::WoodallEgSoundness => {
            rec.predicted = Some(true);
            match woodall_eg_failures(g) {
                Ok(f) => Some(f),
                Err(Error::Unsupported { .. }) => None,
                Err(e) => return Err(e),
            }
        }
        _ => {
            let (held, thr) = hypothesis(ctx, g, t)?;
            rec.threshold = thr;
            if !held {
                None
            } else {
                rec.predicted = Some(!rec.exception);
                let pc = pc_of(g)?;
                rec.pc = Some(pc);
                match pc {
                    PcOutcome::Undecided => None,
                    PcOutcome::Exact(pc) => Some(conclusion(ctx, g, pc)?),
                }
            }
        }
    };
    if let Some(f) = failures {
        rec.observed = Some(f.is_empty());
        if !f.is_empty() {
            rec.note = Some(f.join("; "));
        }
    }
    rec.violation = matches!((rec.predicted, rec.observed), (Some(p), Some(o)) if p != o);
    Ok((rec, key))
}

fn conclusion(ctx: &Ctx, g: &Graph, pc: usize) -> Result<Vec<String>> {
    let bound = |ok: bool, what: String| if ok { vec![] } else { vec![what] };
    Ok(match ctx.theorem {
        Theorem::Prop11 => prop11_failures(g, pc)?,
        Theorem::Thm2Bridgeless => bound(pc <= 3, format!("pc = {pc} > 3")),
        Theorem::Thm3Gstar => {
            let cap = build_bridge_tree(g)?.max_degree.max(3);
            bound(pc <= cap, format!("pc = {pc} > {cap}"))
        }
        Theorem::ThmGnk | Theorem::ThmMainK3 => {
            bound(pc <= ctx.k, format!("pc = {pc} > {}", ctx.k))
        }
        Theorem::ThmSmallOrder | Theorem::RemarkQuarterDegree => {
            bound(pc == 2, format!("pc = {pc} != 2"))
        }
        Theorem::ThmK2D2 | Theorem::ConjectureK2 => bound(pc <= 2, format!("pc = {pc} > 2")),
        Theorem::LemmaBridgeBound | Theorem::WoodallEgSoundness => vec![],
    })
}

fn exception_families(ctx: &Ctx, n: usize) -> Vec<GraphFamily> {
    match ctx.theorem {
        Theorem::ThmGnk if ctx.k == 2 => vec![GraphFamily::GStar1, GraphFamily::GStar2],
        Theorem::ThmSmallOrder => vec![GraphFamily::G1, GraphFamily::GN { n: 8 }],
        Theorem::ThmK2D2 if n >= 8 => vec![GraphFamily::G1, GraphFamily::GN { n }],
        Theorem::ThmK2D2 => vec![GraphFamily::G1],
        _ => vec![],
    }
}

/// Listed exceptions of order `n` that satisfy the hypothesis.
fn exceptions_for(ctx: &Ctx, n: usize) -> Result<Exceptions> {
    let mut graphs = Vec::new();
    for f in exception_families(ctx, n) {
        let g = build_family(&f)?;
        if g.n() == n {
            let t = find_bridges(&g)?.len();
            if hypothesis(ctx, &g, t)?.0 {
                graphs.push(g);
            }
        }
    }
    let keys = graphs.iter().map(class_key).collect::<Result<_>>()?;
    Ok(Exceptions { graphs, keys })
}

fn load(task: &VerifyTask) -> Result<(Vec<Graph>, String)> {
    match &task.source {
        Source::Builtin => {
            if task.n > ENUMERATE_MAX_N {
                return Err(Error::Contract(format!(
                    "order {} exceeds the built-in enumerator (max {ENUMERATE_MAX_N}); a graph6 source is required",
                    task.n
                )));
            }
            let graphs = enumerate_connected(task.n)?.to_vec();
            Ok((graphs, "builtin: every connected class up to isomorphism".into()))
        }
        Source::Graph6(path) => {
            let mut graphs = Vec::new();
            for item in stream_graph6(path)? {
                let (line, g) = item?;
                let err = |reason: String| Error::Stream {
                    line,
                    source: Box::new(Error::Contract(reason)),
                };
                if g.n() != task.n {
                    return Err(err(format!("order {} but the task declares {}", g.n(), task.n)));
                }
                if !g.is_connected() {
                    return Err(err("graph is disconnected".into()));
                }
                graphs.push(g);
            }
            Ok((
                graphs,
                format!("graph6:{} (completeness asserted by the user)", path.display()),
            ))
        }
    }
}

fn passes_filters(task: &VerifyTask, g: &Graph) -> Result<bool> {
    let f = &task.filters;
    if f.min_degree.is_some_and(|d| g.min_degree() < d) || f.min_size.is_some_and(|s| g.m() < s) {
        return Ok(false);
    }
    if let Some(t) = f.exact_bridges {
        return Ok(find_bridges(g)?.len() == t);
    }
    Ok(true)
}

fn pool(jobs: Option<usize>) -> Result<rayon::ThreadPool> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.unwrap_or(0))
        .build()
        .map_err(|e| Error::Contract(format!("thread pool: {e}")))
}

fn summarize(
    task: String,
    n: Option<usize>,
    source: String,
    scanned: usize,
    rows: Vec<(VerifyRecord, String)>,
    exceptions: &Exceptions,
    started: Instant,
) -> VerifyReport {
    let hypothesis_held = rows.iter().filter(|(r, _)| r.predicted.is_some()).count();
    let undecided = rows
        .iter()
        .filter(|(r, _)| r.predicted.is_some() && r.observed.is_none())
        .count();
    let violators: BTreeSet<String> = rows
        .iter()
        .filter(|(r, _)| r.predicted.is_some() && r.observed == Some(false))
        .map(|(_, k)| k.clone())
        .collect();
    let expected: BTreeSet<String> = exceptions.keys.iter().cloned().collect();
    let summary = Summary {
        task,
        n,
        source,
        scanned,
        filtered_out: scanned - rows.len(),
        hypothesis_held,
        exceptions_matched: violators.intersection(&expected).count(),
        exception_set_equal: violators == expected,
        violators: violators.into_iter().collect(),
        violations: rows.iter().filter(|(r, _)| r.violation).count(),
        undecided,
        exhaustive: undecided == 0,
        expected_exceptions: expected.into_iter().collect(),
        wall_time_ms: started.elapsed().as_millis(),
    };
    VerifyReport {
        records: rows.into_iter().map(|(r, _)| r).collect(),
        summary,
    }
}

pub fn run_verification(task: &VerifyTask) -> Result<VerifyReport> {
    let started = Instant::now();
    let k = match task.theorem {
        Theorem::ThmGnk => task.k.unwrap_or(2),
        Theorem::ThmMainK3 => task.k.unwrap_or(3),
        _ => task.k.unwrap_or(2),
    };
    if task.theorem == Theorem::ThmGnk && k < 2 || task.theorem == Theorem::ThmMainK3 && k < 3 {
        return Err(Error::Contract(format!("k = {k} is below the theorem's range")));
    }
    let ctx = Ctx {
        theorem: task.theorem,
        k,
        abstract_reading: task.abstract_reading,
        widen: task.widen,
    };
    let exceptions = exceptions_for(&ctx, task.n)?;
    let (graphs, source) = load(task)?;
    let rows: Vec<Option<(VerifyRecord, String)>> = pool(task.jobs)?.install(|| {
        graphs
            .par_iter()
            .map(|g| {
                if passes_filters(task, g)? {
                    assess(&ctx, &exceptions, g).map(Some)
                } else {
                    Ok(None)
                }
            })
            .collect::<Result<_>>()
    })?;
    Ok(summarize(
        task.theorem.to_string(),
        Some(task.n),
        source,
        graphs.len(),
        rows.into_iter().flatten().collect(),
        &exceptions,
        started,
    ))
}

/// Every graph of order `n` with minimum degree at least `delta` that meets
/// the conjectured `k = 2` threshold but has `pc > 2` is a violator.
pub fn search_counterexamples(
    n: usize,
    delta: usize,
    source: Source,
    jobs: Option<usize>,
) -> Result<VerifyReport> {
    if delta < 3 {
        return Err(Error::Contract(format!("counterexample search needs delta >= 3, got {delta}")));
    }
    let mut task = VerifyTask::new(Theorem::ConjectureK2, n);
    task.filters.min_degree = Some(delta);
    task.source = source;
    task.jobs = jobs;
    run_verification(&task)
}

fn random_connected(rng: &mut ChaCha8Rng) -> Graph {
    loop {
        let n = rng.gen_range(3..=7);
        let p = rng.gen_range(0.25..0.9);
        let edges: Vec<(usize, usize)> = (0..n)
            .flat_map(|v| (0..v).map(move |u| (u, v)))
            .filter(|_| rng.gen_bool(p))
            .collect();
        let g = Graph::from_edges(n, edges).expect("generated pairs are simple");
        if g.is_connected() && g.m() > g.n() - 1 {
            return g;
        }
    }
}

/// Deletes a random non-bridge edge from random connected graphs and checks
/// that the proper connection number never drops.
pub fn check_monotonicity(samples: usize, seed: u64) -> Result<VerifyReport> {
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pairs = Vec::with_capacity(samples);
    for _ in 0..samples {
        let g = random_connected(&mut rng);
        let bridges = find_bridges(&g)?;
        let candidates: Vec<usize> = (0..g.m()).filter(|e| !bridges.contains(e)).collect();
        let e = *candidates.choose(&mut rng).expect("cyclic graphs have a non-bridge edge");
        pairs.push((g, e));
    }
    let rows: Vec<(VerifyRecord, String)> = pairs
        .par_iter()
        .map(|(g, e)| {
            let h = g.remove_edge(*e);
            let (pg, ph) = (pc_exact(g)?.pc, pc_exact(&h)?.pc);
            let (u, v) = g.edge(*e);
            let rec = VerifyRecord {
                graph6: emit_graph6(g)?,
                n: g.n(),
                m: g.m(),
                delta: g.min_degree(),
                bridges: find_bridges(g)?.len(),
                pc: Some(PcOutcome::Exact(pg)),
                threshold: None,
                predicted: Some(true),
                observed: Some(pg <= ph),
                violation: pg > ph,
                exception: false,
                note: Some(format!("deleted {u} {v}; pc after deletion {ph}")),
            };
            Ok((rec, class_key(g)?))
        })
        .collect::<Result<_>>()?;
    let none = Exceptions {
        graphs: vec![],
        keys: vec![],
    };
    let mut report = summarize(
        "lemma-monotonicity".into(),
        None,
        format!("random connected graphs, seed {seed}"),
        samples,
        rows,
        &none,
        started,
    );
    report.summary.exception_set_equal = report.summary.violations == 0;
    Ok(report)
}
