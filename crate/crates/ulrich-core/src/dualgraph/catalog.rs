//! Graph catalog. Vertices are indexed left to right along the main chain,
//! with branch vertices placed right after the vertex they hang from.
//! Vertices are named `E1, E2, ...` in index order, except that the
//! quotient graphs `G<i>:b` call the central curve `E0` and the marked
//! curve `F`.

use std::fmt;
use std::str::FromStr;

use super::{DualGraph, Vertex};
use crate::error::{Error, Result};
use crate::presentations::FamilyTag;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GraphTag {
    /// Rational triple point or rational double point family.
    Family(FamilyTag),
    /// Path with the given `b` values, left to right.
    Cyclic(Vec<u32>),
    /// Central `-b` with two `-2` leaves and the chain `b_1, .., b_n`,
    /// `b_1` next to the centre.
    T22 { b: u32, chain: Vec<u32> },
    /// `Γ_i(b)`, `1 <= i <= 15`.
    Gamma { i: u32, b: u32 },
}

impl fmt::Display for GraphTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[u32]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        match self {
            GraphTag::Family(t) => write!(f, "{t}"),
            GraphTag::Cyclic(w) => write!(f, "CYC:{}", join(w)),
            GraphTag::T22 { b, chain } => write!(f, "T22:{b}:{}", join(chain)),
            GraphTag::Gamma { i, b } => write!(f, "G{i}:{b}"),
        }
    }
}

fn ints(s: &str) -> Result<Vec<u32>> {
    s.split(',')
        .map(|p| p.trim().parse::<u32>().map_err(|_| Error::Parse { pos: 0, msg: format!("bad integer '{p}'") }))
        .collect()
}

impl FromStr for GraphTag {
    type Err = Error;

    /// Family tags as for presentations (`EX-5.3` means `G10:2`), plus
    /// `CYC:b1,..,bn`, `T22:b:b1,..,bn` and `G<i>:b`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let up = s.to_ascii_uppercase();
        let tag = if let Some(rest) = up.strip_prefix("CYC:") {
            GraphTag::Cyclic(ints(rest)?)
        } else if let Some(rest) = up.strip_prefix("T22:") {
            let (b, chain) = rest
                .split_once(':')
                .ok_or_else(|| Error::Parse { pos: 0, msg: "T22 expects b:b1,..,bn".into() })?;
            GraphTag::T22 { b: ints(b)?[0], chain: ints(chain)? }
        } else if up == "EX-5.3" {
            GraphTag::Gamma { i: 10, b: 2 }
        } else if let Some(rest) = up.strip_prefix('G').filter(|r| r.as_bytes().first().is_some_and(u8::is_ascii_digit)) {
            let (i, b) = rest
                .split_once(':')
                .ok_or_else(|| Error::Parse { pos: 0, msg: "Gamma graph tag expects G<i>:b".into() })?;
            let i = ints(i)?[0];
            let b = ints(b)?[0];
            GraphTag::Gamma { i, b }
        } else {
            let fam: FamilyTag = s.parse()?;
            if fam == FamilyTag::Ex52 {
                return Err(Error::Unsupported("EX-5.2 is not rational; no graph in the catalog".into()));
            }
            GraphTag::Family(fam)
        };
        tag.validate()?;
        Ok(tag)
    }
}

impl GraphTag {
    pub fn validate(&self) -> Result<()> {
        let ok = match self {
            GraphTag::Family(t) => return t.validate(),
            GraphTag::Cyclic(w) => !w.is_empty() && w.iter().all(|&b| b >= 2),
            GraphTag::T22 { b, chain } => *b >= 2 && !chain.is_empty() && chain.iter().all(|&c| c >= 2),
            GraphTag::Gamma { i, b } => (1..=15).contains(i) && *b >= 2,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::OutOfRange(self.to_string()))
        }
    }
}

/// Incremental builder; names are assigned at the end.
struct Builder {
    b: Vec<u32>,
    special: Vec<Option<&'static str>>,
    edges: Vec<(usize, usize)>,
}

impl Builder {
    fn new() -> Self {
        Builder { b: Vec::new(), special: Vec::new(), edges: Vec::new() }
    }

    fn add(&mut self, b: u32, attach: Option<usize>) -> usize {
        self.b.push(b);
        self.special.push(None);
        let v = self.b.len() - 1;
        if let Some(a) = attach {
            self.edges.push((a, v));
        }
        v
    }

    /// Appends a path of `weights`, the first vertex joined to `attach`.
    fn path(&mut self, weights: &[u32], attach: Option<usize>) -> Option<usize> {
        let mut last = attach;
        for &w in weights {
            last = Some(self.add(w, last));
        }
        last
    }

    fn name(&mut self, v: usize, name: &'static str) {
        self.special[v] = Some(name);
    }

    fn finish(self) -> Result<DualGraph> {
        let mut k = 0;
        let vertices = self
            .b
            .iter()
            .zip(&self.special)
            .map(|(&b, s)| {
                let id = match s {
                    Some(s) => s.to_string(),
                    None => {
                        k += 1;
                        format!("E{k}")
                    }
                };
                Vertex { id, b }
            })
            .collect();
        DualGraph::new(vertices, self.edges)
    }
}

fn twos(n: u32) -> Vec<u32> {
    vec![2; n as usize]
}

/// Rational triple point graphs. `●` is the `-3` curve, everything else `-2`.
pub fn rtp_graph(tag: FamilyTag) -> Result<DualGraph> {
    use FamilyTag::*;
    tag.validate()?;
    let mut g = Builder::new();
    match tag {
        A(l, m, n) => {
            let left = g.path(&twos(m), None);
            let c = g.add(3, left);
            g.path(&twos(l), Some(c));
            g.path(&twos(n), Some(c));
        }
        B(m, n) => {
            // `n - 2` curves with coefficient 2 in Z0, the first one branched.
            let left = g.path(&twos(m), None);
            let c = g.add(3, left);
            let first = g.add(2, Some(c));
            g.add(2, Some(first));
            let last = g.path(&twos(n - 3), Some(first));
            g.add(2, last.or(Some(first)));
        }
        C(m, n) => {
            // `n - 2` curves with coefficient 2 in Z0, the last one branched.
            let left = g.path(&twos(m), None);
            let c = g.add(3, left);
            let last = g.path(&twos(n - 2), Some(c)).unwrap();
            g.add(2, Some(last));
            g.add(2, Some(last));
        }
        D(n) => {
            let left = g.path(&twos(n), None);
            let c = g.add(3, left);
            let a = g.add(2, Some(c));
            let br = g.add(2, Some(a));
            g.add(2, Some(br));
            g.path(&[2, 2], Some(br));
        }
        F(n) => {
            let left = g.path(&twos(n), None);
            let c = g.add(3, left);
            let a = g.path(&[2, 2], Some(c));
            let br = g.add(2, a);
            g.add(2, Some(br));
            g.path(&[2, 2], Some(br));
        }
        H(n) => {
            // A `-2` chain of `n` curves, the `-3` curve hanging from the
            // third curve from the right end.
            let left = g.path(&twos(n - 2), None).unwrap();
            g.add(3, Some(left));
            g.path(&[2, 2], Some(left));
        }
        Gamma1 => {
            let c = g.add(3, None);
            let a = g.add(2, Some(c));
            let br = g.add(2, Some(a));
            g.add(2, Some(br));
            g.path(&[2, 2, 2], Some(br));
        }
        Gamma2 => {
            let c = g.add(3, None);
            let a = g.add(2, Some(c));
            let br = g.add(2, Some(a));
            g.add(2, Some(br));
            g.path(&[2, 2, 2, 2], Some(br));
        }
        Gamma3 => {
            let c = g.add(3, None);
            let a = g.path(&[2, 2, 2], Some(c));
            let br = g.add(2, a);
            g.add(2, Some(br));
            g.path(&[2, 2], Some(br));
        }
        _ => return Err(Error::Unsupported(format!("{tag} has no triple point graph"))),
    }
    g.finish()
}

/// Dynkin diagrams of the rational double points.
pub fn rdp_graph(tag: FamilyTag) -> Result<DualGraph> {
    tag.validate()?;
    let mut g = Builder::new();
    // Main chain length and the position (1-based) carrying the extra leaf.
    let (chain, branch) = match tag {
        FamilyTag::RdpA(n) => (n, None),
        FamilyTag::RdpD(n) => (n - 1, Some(n - 2)),
        FamilyTag::RdpE6 => (5, Some(3)),
        FamilyTag::RdpE7 => (6, Some(3)),
        FamilyTag::RdpE8 => (7, Some(3)),
        _ => return Err(Error::Unsupported(format!("{tag} is not a rational double point"))),
    };
    let mut last = None;
    for k in 1..=chain {
        let v = g.add(2, last);
        if branch == Some(k) {
            g.add(2, Some(v));
        }
        last = Some(v);
    }
    g.finish()
}

fn gamma_graph(i: u32, b: u32) -> Result<DualGraph> {
    // Main chain left of the centre, read left to right.
    let mut g = Builder::new();
    let left: Vec<u32> = match i {
        1 | 4 | 8 => vec![3],
        2 | 3 | 6 | 9 | 11 | 13 => vec![2, 2],
        5 | 7 => vec![2, 2, 2],
        10 => vec![2, 3],
        12 => vec![3, 2],
        14 | 15 => vec![2, 2, 2, 2],
        _ => return Err(Error::OutOfRange(format!("G{i}:{b}"))),
    };
    let end = g.path(&left, None);
    let c = g.add(b, end);
    g.name(c, "E0");
    g.add(2, Some(c));
    let f_weight = match i {
        1 | 2 | 5 | 10 | 11 | 12 | 13 | 14 => Some(3),
        4 | 6 => Some(4),
        8 | 9 => Some(5),
        _ => None,
    };
    match i {
        3 | 7 | 15 => {
            g.path(&[2, 2], Some(c));
        }
        11 => {
            let f = g.add(3, Some(c));
            g.name(f, "F");
            g.add(2, Some(f));
        }
        13 => {
            let a = g.add(2, Some(c));
            let f = g.add(3, Some(a));
            g.name(f, "F");
        }
        _ => {
            let f = g.add(f_weight.unwrap(), Some(c));
            g.name(f, "F");
        }
    }
    g.finish()
}

pub fn graph_catalog(tag: &GraphTag) -> Result<DualGraph> {
    tag.validate()?;
    match tag {
        GraphTag::Family(t) if t.is_rdp() => rdp_graph(*t),
        GraphTag::Family(FamilyTag::Ex53) => gamma_graph(10, 2),
        GraphTag::Family(t) => rtp_graph(*t),
        GraphTag::Cyclic(w) => {
            let mut g = Builder::new();
            g.path(w, None);
            g.finish()
        }
        GraphTag::T22 { b, chain } => {
            let mut g = Builder::new();
            let rev: Vec<u32> = chain.iter().rev().copied().collect();
            let end = g.path(&rev, None);
            let c = g.add(*b, end);
            g.name(c, "E0");
            g.add(2, Some(c));
            g.add(2, Some(c));
            g.finish()
        }
        GraphTag::Gamma { i, b } => gamma_graph(*i, *b),
    }
}
