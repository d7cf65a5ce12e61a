//! Weighted dual graphs of minimal resolutions and the integer cycle
//! calculus on them.

mod catalog;
mod chains;
mod io;

pub use catalog::{graph_catalog, rdp_graph, rtp_graph, GraphTag};
pub use chains::{enumerate_ulrich_chains, ulrich_support_candidates, ChainReport, UlrichChain, DEFAULT_MAX_STEPS};
pub use io::{cycle_from_json, cycle_to_json, GraphFile};

use std::collections::VecDeque;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vertex {
    pub id: String,
    /// Self-intersection is `-b`.
    pub b: u32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualGraph {
    vertices: Vec<Vertex>,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

/// Non-negative integer combination of the exceptional curves.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cycle(pub Vec<u32>);

impl Cycle {
    pub fn zero(n: usize) -> Self {
        Cycle(vec![0; n])
    }

    pub fn reduced(n: usize) -> Self {
        Cycle(vec![1; n])
    }

    pub fn basis(n: usize, i: usize) -> Self {
        let mut c = Cycle::zero(n);
        c.0[i] = 1;
        c
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().any(|&a| a > 0)
    }

    pub fn le(&self, other: &Cycle) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn add(&self, other: &Cycle) -> Cycle {
        Cycle(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.0.len()).filter(|&i| self.0[i] > 0).collect()
    }
}

impl DualGraph {
    /// Checks connectivity, simple edges, `b >= 2`, distinct ids and
    /// negative definiteness.
    pub fn new(vertices: Vec<Vertex>, edges: Vec<(usize, usize)>) -> Result<Self> {
        let n = vertices.len();
        if n == 0 {
            return Err(Error::Graph("graph has no vertices".into()));
        }
        for (i, v) in vertices.iter().enumerate() {
            if v.b < 2 {
                return Err(Error::Graph(format!("vertex {} has weight -{}; need b >= 2", v.id, v.b)));
            }
            if vertices[..i].iter().any(|w| w.id == v.id) {
                return Err(Error::Graph(format!("duplicate vertex id {}", v.id)));
            }
        }
        let mut adj = vec![Vec::new(); n];
        let mut norm = Vec::with_capacity(edges.len());
        for &(a, b) in &edges {
            if a >= n || b >= n {
                return Err(Error::Graph(format!("edge ({a}, {b}) out of range")));
            }
            if a == b {
                return Err(Error::Graph(format!("loop at {}", vertices[a].id)));
            }
            if adj[a].contains(&b) {
                return Err(Error::Graph(format!("multiple edge {} - {}", vertices[a].id, vertices[b].id)));
            }
            adj[a].push(b);
            adj[b].push(a);
            norm.push((a.min(b), a.max(b)));
        }
        let g = DualGraph { vertices, edges: norm, adj };
        if !g.is_connected_subset(&(0..n).collect::<Vec<_>>()) {
            return Err(Error::Graph("graph is not connected".into()));
        }
        if !g.is_negative_definite() {
            return Err(Error::Graph("intersection matrix is not negative definite".into()));
        }
        Ok(g)
    }

    /// Builds from `(id, b)` pairs and edges given by id.
    pub fn from_ids(vertices: &[(&str, u32)], edges: &[(&str, &str)]) -> Result<Self> {
        let vs: Vec<Vertex> = vertices.iter().map(|(id, b)| Vertex { id: id.to_string(), b: *b }).collect();
        let idx = |s: &str| {
            vs.iter().position(|v| v.id == s).ok_or_else(|| Error::Graph(format!("unknown vertex {s}")))
        };
        let es = edges.iter().map(|(a, b)| Ok((idx(a)?, idx(b)?))).collect::<Result<Vec<_>>>()?;
        DualGraph::new(vs, es)
    }

    pub fn n(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, i: usize) -> &[usize] {
        &self.adj[i]
    }

    pub fn index_of(&self, id: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v.id == id)
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        if i == j {
            -(self.vertices[i].b as i64)
        } else if self.adj[i].contains(&j) {
            1
        } else {
            0
        }
    }

    fn is_negative_definite(&self) -> bool {
        // Leading principal minors of -M are positive (Bareiss elimination).
        let n = self.n();
        let mut a: Vec<Vec<BigInt>> =
            (0..n).map(|i| (0..n).map(|j| BigInt::from(-self.entry(i, j))).collect()).collect();
        let mut prev = BigInt::from(1);
        for k in 0..n {
            if !a[k][k].is_positive() {
                return false;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                    a[i][j] = v;
                }
            }
            prev = a[k][k].clone();
        }
        !prev.is_zero()
    }

    pub(crate) fn is_connected_subset(&self, set: &[usize]) -> bool {
        let Some(&start) = set.first() else {
            return false;
        };
        let mut seen = vec![false; self.n()];
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        let mut count = 1;
        while let Some(v) = queue.pop_front() {
            for &w in &self.adj[v] {
                if !seen[w] && set.contains(&w) {
                    seen[w] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        count == set.len()
    }

    fn check(&self, z: &Cycle) -> Result<()> {
        if z.len() == self.n() {
            Ok(())
        } else {
            Err(Error::Graph(format!("cycle has {} entries, graph has {} vertices", z.len(), self.n())))
        }
    }

    /// `Z·E_i` for every vertex.
    pub fn dot_vertices(&self, z: &Cycle) -> Vec<i64> {
        (0..self.n())
            .map(|i| {
                let mut s = -(self.vertices[i].b as i64) * z.0[i] as i64;
                for &j in &self.adj[i] {
                    s += z.0[j] as i64;
                }
                s
            })
            .collect()
    }

    pub fn intersection_pairing(&self, y: &Cycle, z: &Cycle) -> Result<i64> {
        self.check(y)?;
        self.check(z)?;
        Ok(self.dot_vertices(z).iter().zip(&y.0).map(|(a, &b)| a * b as i64).sum())
    }

    /// Laufer's sequence from the reduced cycle, adding the smallest-index
    /// vertex with positive intersection.
    pub fn fundamental_cycle(&self) -> Cycle {
        let order: Vec<usize> = (0..self.n()).collect();
        self.fundamental_cycle_with_order(&order)
    }

    /// Laufer's sequence with vertex priority given by `order`.
    pub fn fundamental_cycle_with_order(&self, order: &[usize]) -> Cycle {
        let mut z = Cycle::reduced(self.n());
        loop {
            let d = self.dot_vertices(&z);
            match order.iter().find(|&&i| d[i] > 0) {
                Some(&i) => z.0[i] += 1,
                None => return z,
            }
        }
    }

    pub fn is_antinef(&self, z: &Cycle) -> bool {
        z.len() == self.n() && self.dot_vertices(z).iter().all(|&d| d <= 0)
    }

    /// `K·E_i = b_i - 2`.
    pub fn canonical_numbers(&self) -> Vec<i64> {
        self.vertices.iter().map(|v| v.b as i64 - 2).collect()
    }

    pub fn canonical_dot(&self, z: &Cycle) -> i64 {
        self.canonical_numbers().iter().zip(&z.0).map(|(k, &a)| k * a as i64).sum()
    }

    pub fn arithmetic_genus(&self, y: &Cycle) -> Result<i64> {
        let s = self.intersection_pairing(y, y)? + self.canonical_dot(y);
        if s % 2 != 0 {
            return Err(Error::Invariant(format!("Y^2 + K.Y = {s} is odd")));
        }
        Ok(s / 2 + 1)
    }

    pub fn rationality_check(&self) -> bool {
        self.arithmetic_genus(&self.fundamental_cycle()).map(|p| p == 0).unwrap_or(false)
    }

    fn require_rational_antinef(&self, z: &Cycle) -> Result<()> {
        self.check(z)?;
        if !z.is_positive() || !self.is_antinef(z) {
            return Err(Error::Precondition("cycle must be positive and anti-nef".into()));
        }
        if !self.rationality_check() {
            return Err(Error::Precondition("graph is not rational".into()));
        }
        Ok(())
    }

    /// `e0 = -Z0^2`.
    pub fn graph_multiplicity(&self) -> Result<u64> {
        let z0 = self.fundamental_cycle();
        self.require_rational_antinef(&z0)?;
        Ok((-self.intersection_pairing(&z0, &z0)?) as u64)
    }

    /// `ℓ(A/I_Z) = -(Z^2 + K·Z)/2`.
    pub fn cycle_length(&self, z: &Cycle) -> Result<u64> {
        self.require_rational_antinef(z)?;
        Ok((-(self.intersection_pairing(z, z)? + self.canonical_dot(z)) / 2) as u64)
    }

    /// `μ(I_Z) = -Z·Z0 + 1`.
    pub fn cycle_mu(&self, z: &Cycle) -> Result<u64> {
        self.require_rational_antinef(z)?;
        let z0 = self.fundamental_cycle();
        Ok((-self.intersection_pairing(z, &z0)? + 1) as u64)
    }

    /// `e0(I_Z) = -Z^2`.
    pub fn cycle_e0(&self, z: &Cycle) -> Result<u64> {
        self.require_rational_antinef(z)?;
        Ok((-self.intersection_pairing(z, z)?) as u64)
    }

    /// Some vertex with `b >= 3` and `Z0·E_j < 0`; then only the maximal
    /// ideal is Ulrich.
    pub fn unique_ulrich_filter(&self) -> bool {
        let d = self.dot_vertices(&self.fundamental_cycle());
        (0..self.n()).any(|j| self.vertices[j].b >= 3 && d[j] < 0)
    }

    pub fn cycle_from_vec(&self, v: Vec<u32>) -> Result<Cycle> {
        let c = Cycle(v);
        self.check(&c)?;
        Ok(c)
    }

    /// Canonical string of a weighted tree, equal for isomorphic trees.
    /// `None` when the graph has a cycle.
    pub fn tree_canonical_form(&self) -> Option<String> {
        let n = self.n();
        if self.edges.len() + 1 != n {
            return None;
        }
        // Centers by leaf peeling.
        let mut deg: Vec<usize> = self.adj.iter().map(|a| a.len()).collect();
        let mut layer: Vec<usize> = (0..n).filter(|&i| deg[i] <= 1).collect();
        let mut removed = vec![false; n];
        let mut left = n;
        while left > 2 {
            left -= layer.len();
            let mut next = Vec::new();
            for &v in &layer {
                removed[v] = true;
            }
            for &v in &layer {
                for &w in &self.adj[v] {
                    if removed[w] {
                        continue;
                    }
                    deg[w] -= 1;
                    if deg[w] == 1 {
                        next.push(w);
                    }
                }
            }
            layer = next;
        }
        layer.iter().map(|&c| self.encode(c, usize::MAX)).min()
    }

    fn encode(&self, v: usize, parent: usize) -> String {
        let mut kids: Vec<String> = self.adj[v].iter().filter(|&&w| w != parent).map(|&w| self.encode(w, v)).collect();
        kids.sort();
        format!("({}{})", self.vertices[v].b, kids.concat())
    }
}
