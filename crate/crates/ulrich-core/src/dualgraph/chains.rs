//! Chains `Z_k = Z_{k-1} + Y_k` describing Ulrich ideals on a rational
//! surface singularity.

use std::collections::BTreeSet;

use super::{Cycle, DualGraph};
use crate::error::{Error, Result};

pub const DEFAULT_MAX_STEPS: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UlrichChain {
    /// `(Z_k, Y_k)` for `k = 1..s`; empty for the maximal ideal.
    pub steps: Vec<(Cycle, Cycle)>,
}

impl UlrichChain {
    pub fn last_cycle<'a>(&'a self, z0: &'a Cycle) -> &'a Cycle {
        self.steps.last().map(|(z, _)| z).unwrap_or(z0)
    }
}

#[derive(Clone, Debug)]
pub struct ChainReport {
    pub z0: Cycle,
    /// One chain per distinct final cycle, the empty chain first.
    pub chains: Vec<UlrichChain>,
    pub truncated: bool,
    /// Extensions satisfying the three vanishings but rejected because the
    /// new cycle was not anti-nef.
    pub antinef_pruned: usize,
}

impl ChainReport {
    pub fn cycles(&self) -> Vec<Cycle> {
        self.chains.iter().map(|c| c.last_cycle(&self.z0).clone()).collect()
    }

    pub fn count(&self) -> usize {
        self.chains.len()
    }
}

fn require_rational(g: &DualGraph) -> Result<()> {
    if g.rationality_check() {
        Ok(())
    } else {
        Err(Error::Precondition("graph is not rational".into()))
    }
}

/// Connected vertex sets `T` with `{b >= 3} ⊆ T ⊆ {E_i : E_i·Z0 = 0}`.
pub fn ulrich_support_candidates(g: &DualGraph) -> Result<Vec<Vec<usize>>> {
    require_rational(g)?;
    let d = g.dot_vertices(&g.fundamental_cycle());
    let lower: Vec<usize> = (0..g.n()).filter(|&i| g.vertices()[i].b >= 3).collect();
    let upper: Vec<usize> = (0..g.n()).filter(|&i| d[i] == 0).collect();
    if lower.iter().any(|i| !upper.contains(i)) {
        return Ok(Vec::new());
    }
    let free: Vec<usize> = upper.iter().copied().filter(|i| !lower.contains(i)).collect();
    if free.len() > 20 {
        return Err(Error::OutOfRange(format!("{} free vertices", free.len())));
    }
    let mut out = Vec::new();
    for mask in 0u32..(1 << free.len()) {
        let mut set = lower.clone();
        set.extend((0..free.len()).filter(|k| mask & (1 << k) != 0).map(|k| free[k]));
        set.sort_unstable();
        if !set.is_empty() && g.is_connected_subset(&set) {
            out.push(set);
        }
    }
    out.sort();
    Ok(out)
}

struct Search<'a> {
    g: &'a DualGraph,
    z0: Cycle,
    k: Vec<i64>,
    max_steps: usize,
    seen: BTreeSet<Cycle>,
    chains: Vec<UlrichChain>,
    truncated: bool,
    pruned: usize,
}

impl Search<'_> {
    /// Positive `Y <= bound` with `Y·Z = p_a(Y) = K·(Z0 - Y) = 0`.
    fn steps_from(&self, z: &Cycle, bound: &Cycle) -> Vec<Cycle> {
        let g = self.g;
        let n = g.n();
        let d = g.dot_vertices(z);
        // Y·Z = 0 with Z anti-nef forces supp Y ⊆ {E_i·Z = 0}; K·(Z0 - Y) = 0
        // forces Y = Z0 on every vertex with b >= 3.
        let mut ranges: Vec<(u32, u32)> = Vec::with_capacity(n);
        for i in 0..n {
            if g.vertices()[i].b >= 3 {
                let want = self.z0.0[i];
                if want > bound.0[i] || (want > 0 && d[i] != 0) {
                    return Vec::new();
                }
                ranges.push((want, want));
            } else if d[i] == 0 {
                ranges.push((0, bound.0[i]));
            } else {
                ranges.push((0, 0));
            }
        }
        let mut out = Vec::new();
        let mut y = Cycle(ranges.iter().map(|r| r.0).collect());
        loop {
            if y.is_positive()
                && g.intersection_pairing(&y, z).unwrap() == 0
                && g.arithmetic_genus(&y).unwrap() == 0
                && self.k.iter().zip(self.z0.0.iter().zip(&y.0)).map(|(k, (a, b))| k * (*a as i64 - *b as i64)).sum::<i64>() == 0
            {
                out.push(y.clone());
            }
            // odometer
            let mut i = 0;
            loop {
                if i == n {
                    return out;
                }
                if y.0[i] < ranges[i].1 {
                    y.0[i] += 1;
                    break;
                }
                y.0[i] = ranges[i].0;
                i += 1;
            }
        }
    }

    fn dfs(&mut self, z: Cycle, bound: Cycle, steps: Vec<(Cycle, Cycle)>) {
        for y in self.steps_from(&z, &bound) {
            let next = z.add(&y);
            if !self.g.is_antinef(&next) {
                self.pruned += 1;
                continue;
            }
            let mut s = steps.clone();
            s.push((next.clone(), y.clone()));
            if self.seen.insert(next.clone()) {
                self.chains.push(UlrichChain { steps: s.clone() });
            }
            if s.len() >= self.max_steps {
                if !self.steps_from(&next, &y).is_empty() {
                    self.truncated = true;
                }
                continue;
            }
            self.dfs(next, y, s);
        }
    }
}

/// Depth-first search over chains from `Z0`, deduplicated by final cycle.
pub fn enumerate_ulrich_chains(g: &DualGraph, max_steps: usize) -> Result<ChainReport> {
    require_rational(g)?;
    let z0 = g.fundamental_cycle();
    let mut s = Search {
        g,
        z0: z0.clone(),
        k: g.canonical_numbers(),
        max_steps,
        seen: BTreeSet::from([z0.clone()]),
        chains: vec![UlrichChain { steps: Vec::new() }],
        truncated: false,
        pruned: 0,
    };
    if max_steps > 0 {
        s.dfs(z0.clone(), z0.clone(), Vec::new());
    } else if !s.steps_from(&z0, &z0).is_empty() {
        s.truncated = true;
    }
    let (chains, truncated, antinef_pruned) = (s.chains, s.truncated, s.pruned);
    Ok(ChainReport { z0, chains, truncated, antinef_pruned })
}
