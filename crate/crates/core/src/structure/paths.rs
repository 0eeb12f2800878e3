//! Exact Hamiltonicity, detour number and circumference via subset DP.

use crate::bounds::binomial2;
use crate::graph::{bits, Graph};
use crate::{Error, Result};
use serde::Serialize;

pub const HAMILTONIAN_MAX_N: usize = 20;
pub const PROFILE_MAX_N: usize = 14;

fn cap(g: &Graph, what: &'static str, limit: usize) -> Result<()> {
    if g.n() > limit {
        return Err(Error::Unsupported {
            what,
            actual: g.n(),
            limit,
        });
    }
    Ok(())
}

/// `ends[mask]` = set of vertices `v` such that some path visits exactly
/// `mask` and ends at `v`.
fn path_ends(g: &Graph) -> Vec<u32> {
    let n = g.n();
    let mut ends = vec![0u32; 1 << n];
    for v in 0..n {
        ends[1 << v] = 1 << v;
    }
    for mask in 1usize..(1 << n) {
        let e = ends[mask];
        if e == 0 {
            continue;
        }
        for v in bits(e as u64) {
            for w in bits(g.neighbor_mask(v) & !(mask as u64)) {
                ends[mask | 1 << w] |= 1 << w;
            }
        }
    }
    ends
}

/// A Hamiltonian path as a vertex sequence, if one exists.
pub fn hamiltonian_path(g: &Graph) -> Result<Option<Vec<usize>>> {
    cap(g, "hamiltonian path vertex count", HAMILTONIAN_MAX_N)?;
    let n = g.n();
    if n == 0 {
        return Ok(None);
    }
    let ends = path_ends(g);
    let full = (1usize << n) - 1;
    if ends[full] == 0 {
        return Ok(None);
    }
    let mut mask = full;
    let mut v = ends[full].trailing_zeros() as usize;
    let mut seq = vec![v];
    while mask.count_ones() > 1 {
        mask &= !(1 << v);
        let prev = ends[mask] as u64 & g.neighbor_mask(v);
        v = prev.trailing_zeros() as usize;
        seq.push(v);
    }
    seq.reverse();
    debug_assert!(is_hamiltonian_path(g, &seq));
    Ok(Some(seq))
}

pub fn is_hamiltonian_path(g: &Graph, seq: &[usize]) -> bool {
    if seq.len() != g.n() {
        return false;
    }
    let mut seen = 0u64;
    for &v in seq {
        if v >= g.n() || seen >> v & 1 == 1 {
            return false;
        }
        seen |= 1 << v;
    }
    seq.windows(2).all(|w| g.adjacent(w[0], w[1]))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PathCycleProfile {
    /// Order of a longest path.
    pub detour: usize,
    /// Order of a longest cycle; 0 for forests.
    pub circumference: usize,
    pub hamiltonian_path: bool,
    pub hamiltonian_cycle: bool,
}

pub fn path_cycle_profile(g: &Graph) -> Result<PathCycleProfile> {
    cap(g, "path/cycle profile vertex count", PROFILE_MAX_N)?;
    let n = g.n();
    if n == 0 {
        return Ok(PathCycleProfile {
            detour: 0,
            circumference: 0,
            hamiltonian_path: false,
            hamiltonian_cycle: false,
        });
    }
    let ends = path_ends(g);
    let detour = (1usize..1 << n)
        .filter(|&m| ends[m] != 0)
        .map(|m| m.count_ones() as usize)
        .max()
        .unwrap_or(0);

    // paths that start at the smallest vertex of their mask
    let mut rooted = vec![0u32; 1 << n];
    for v in 0..n {
        rooted[1 << v] = 1 << v;
    }
    let mut circumference = 0;
    for mask in 1usize..(1 << n) {
        let e = rooted[mask];
        if e == 0 {
            continue;
        }
        let root = mask.trailing_zeros() as usize;
        let size = mask.count_ones() as usize;
        if size >= 3 && size > circumference && (e as u64) & g.neighbor_mask(root) != 0 {
            circumference = size;
        }
        let above = !((1u64 << (root + 1)) - 1);
        for v in bits(e as u64) {
            for w in bits(g.neighbor_mask(v) & !(mask as u64) & above) {
                rooted[mask | 1 << w] |= 1 << w;
            }
        }
    }
    Ok(PathCycleProfile {
        detour,
        circumference,
        hamiltonian_path: detour == n,
        hamiltonian_cycle: circumference == n,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DiracOreFlags {
    /// `δ >= (n-1)/2`
    pub dirac_path: bool,
    /// `δ >= n/2`, `n >= 3`
    pub dirac_cycle: bool,
    /// `δ >= (n+1)/2`, `n >= 3`
    pub dirac_hamiltonian_connected: bool,
    /// `d(u) + d(v) >= n` for all nonadjacent pairs, `n >= 3`
    pub ore_cycle: bool,
    /// `|E| >= C(n-1, 2) + 2`, `n >= 3`
    pub size_hamiltonian: bool,
}

pub fn dirac_ore_flags(g: &Graph) -> DiracOreFlags {
    let n = g.n();
    let delta = g.min_degree();
    let big = n >= 3;
    let ore = (0..n).all(|u| {
        (u + 1..n).all(|v| g.adjacent(u, v) || g.degree(u) + g.degree(v) >= n)
    });
    DiracOreFlags {
        dirac_path: n > 0 && 2 * delta + 1 >= n,
        dirac_cycle: big && 2 * delta >= n,
        dirac_hamiltonian_connected: big && 2 * delta > n,
        ore_cycle: big && ore,
        size_hamiltonian: big && g.m() as u64 >= binomial2(n as i64 - 1) + 2,
    }
}
