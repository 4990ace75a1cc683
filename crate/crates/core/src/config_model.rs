//! Configuration-model multigraphs.
//!
//! Half-edges are numbered vertex-major: vertex 0 owns `0..D_0`, vertex 1
//! owns `D_0..D_0+D_1`, and so on, so a vertex's incidence list is a
//! contiguous range. An edge is a pair of mated half-edges. Loops and
//! multi-edges are kept as they are.

use std::fmt::Write as _;
use std::io::{BufRead, Write};
use std::ops::Range;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::degree_model::DegreeSequence;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiGraph {
    offsets: Vec<usize>,
    owner: Vec<u32>,
    mate: Vec<u32>,
}

impl MultiGraph {
    fn with_degrees(degrees: &[u64]) -> Result<Self> {
        let total: u64 = degrees.iter().sum();
        if total % 2 == 1 {
            return Err(Error::OddTotal(total));
        }
        if total > u32::MAX as u64 || degrees.len() > u32::MAX as usize {
            return Err(Error::GraphTooLarge(total));
        }
        let mut offsets = Vec::with_capacity(degrees.len() + 1);
        let mut owner = Vec::with_capacity(total as usize);
        offsets.push(0);
        for (v, &d) in degrees.iter().enumerate() {
            owner.extend(std::iter::repeat_n(v as u32, d as usize));
            offsets.push(owner.len());
        }
        Ok(Self {
            offsets,
            owner,
            mate: vec![u32::MAX; total as usize],
        })
    }

    /// Pairs consecutive entries of a uniformly shuffled half-edge array.
    pub fn build_uniform_matching<R: Rng + ?Sized>(seq: &DegreeSequence, rng: &mut R) -> Result<Self> {
        let mut g = Self::with_degrees(seq.degrees())?;
        let mut order: Vec<u32> = (0..g.owner.len() as u32).collect();
        order.shuffle(rng);
        for pair in order.chunks_exact(2) {
            g.mate[pair[0] as usize] = pair[1];
            g.mate[pair[1] as usize] = pair[0];
        }
        debug_assert!(g.check_invariants());
        Ok(g)
    }

    /// Repeatedly takes the lowest-indexed unmatched half-edge and mates it
    /// with a uniform choice among the other unmatched ones.
    pub fn build_sequential_matching<R: Rng + ?Sized>(
        seq: &DegreeSequence,
        rng: &mut R,
    ) -> Result<Self> {
        let mut g = Self::with_degrees(seq.degrees())?;
        let total = g.owner.len();
        let mut pool: Vec<u32> = (0..total as u32).collect();
        let mut pos: Vec<u32> = (0..total as u32).collect();
        let remove = |pool: &mut Vec<u32>, pos: &mut Vec<u32>, h: u32| {
            let i = pos[h as usize] as usize;
            let last = *pool.last().expect("pool nonempty");
            pool.swap_remove(i);
            if last != h {
                pos[last as usize] = i as u32;
            }
        };
        let mut next = 0usize;
        while !pool.is_empty() {
            while g.mate[next] != u32::MAX {
                next += 1;
            }
            let h1 = next as u32;
            remove(&mut pool, &mut pos, h1);
            let h2 = pool[rng.random_range(0..pool.len())];
            remove(&mut pool, &mut pos, h2);
            g.mate[h1 as usize] = h2;
            g.mate[h2 as usize] = h1;
        }
        debug_assert!(g.check_invariants());
        Ok(g)
    }

    /// Graph with the given edges; half-edges are handed out in edge order.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut degrees = vec![0u64; n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
                degrees[w] += 1;
            }
        }
        let mut g = Self::with_degrees(&degrees)?;
        let mut cursor: Vec<usize> = g.offsets[..n].to_vec();
        for &(u, v) in edges {
            let hu = cursor[u];
            cursor[u] += 1;
            let hv = cursor[v];
            cursor[v] += 1;
            g.mate[hu] = hv as u32;
            g.mate[hv] = hu as u32;
        }
        Ok(g)
    }

    /// Star with one center (vertex 0) and `leaves` degree-1 vertices.
    pub fn star(leaves: usize) -> Self {
        let edges: Vec<_> = (1..=leaves).map(|l| (0, l)).collect();
        Self::from_edges(leaves + 1, &edges).expect("valid star")
    }

    /// Two-step star `S(k; d_1..d_k)`: hub 0, centers `1..=k`, then the leaves
    /// of center 1, of center 2, and so on.
    pub fn two_step_star(leaf_counts: &[usize]) -> Self {
        let k = leaf_counts.len();
        let mut edges: Vec<(usize, usize)> = (1..=k).map(|c| (0, c)).collect();
        let mut next = k + 1;
        for (i, &d) in leaf_counts.iter().enumerate() {
            for _ in 0..d {
                edges.push((i + 1, next));
                next += 1;
            }
        }
        Self::from_edges(next, &edges).expect("valid two-step star")
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Self::from_edges(n, &edges).expect("valid path")
    }

    pub fn cycle(n: usize) -> Self {
        let edges: Vec<_> = (0..n).map(|v| (v, (v + 1) % n)).collect();
        Self::from_edges(n, &edges).expect("valid cycle")
    }

    /// `n` vertices, no edges.
    pub fn empty(n: usize) -> Self {
        Self::from_edges(n, &[]).expect("valid empty graph")
    }

    pub fn n(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn num_half_edges(&self) -> usize {
        self.owner.len()
    }

    pub fn num_edges(&self) -> usize {
        self.owner.len() / 2
    }

    pub fn degree(&self, v: usize) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    pub fn degrees(&self) -> Vec<u64> {
        (0..self.n()).map(|v| self.degree(v) as u64).collect()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Half-edges owned by `v`.
    pub fn half_edges(&self, v: usize) -> Range<usize> {
        self.offsets[v]..self.offsets[v + 1]
    }

    pub fn owner(&self, h: usize) -> usize {
        self.owner[h] as usize
    }

    pub fn mate(&self, h: usize) -> usize {
        self.mate[h] as usize
    }

    /// Vertex at the far end of half-edge `h`.
    pub fn target(&self, h: usize) -> usize {
        self.owner[self.mate[h] as usize] as usize
    }

    /// Neighbors with multiplicity; a loop at `v` yields `v` twice.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.half_edges(v).map(move |h| self.target(h))
    }

    /// Edges as vertex pairs, ordered by their lower half-edge id.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.owner.len())
            .filter(move |&h| h < self.mate[h] as usize)
            .map(move |h| (self.owner(h), self.target(h)))
    }

    /// Number of half-edges at `v` whose mate is also at `v`.
    pub fn loop_count(&self, v: usize) -> usize {
        self.half_edges(v).filter(|&h| self.target(h) == v).count()
    }

    /// Number of edges between `u` and `v` (loops at `u` when `u == v`).
    pub fn multiplicity(&self, u: usize, v: usize) -> usize {
        let hits = self.neighbors(u).filter(|&w| w == v).count();
        if u == v {
            hits / 2
        } else {
            hits
        }
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        let (a, b) = if self.degree(u) <= self.degree(v) { (u, v) } else { (v, u) };
        self.neighbors(a).any(|w| w == b)
    }

    /// Sorted edge multiset with each pair stored as `(min, max)`.
    pub fn edge_multiset(&self) -> Vec<(usize, usize)> {
        let mut e: Vec<_> = self.edges().map(|(u, v)| (u.min(v), u.max(v))).collect();
        e.sort_unstable();
        e
    }

    /// Same vertex set with the edges for which `keep(u, v)` is false removed.
    pub fn filter_edges<F: FnMut(usize, usize) -> bool>(&self, mut keep: F) -> Self {
        let kept: Vec<_> = self.edges().filter(|&(u, v)| keep(u, v)).collect();
        Self::from_edges(self.n(), &kept).expect("subgraph of a valid graph")
    }

    /// Writes the line format: a header `n L`, then one `u v` line per edge.
    pub fn write_text<W: Write>(&self, mut out: W) -> Result<()> {
        let mut buf = String::with_capacity(16 * self.num_edges() + 32);
        writeln!(buf, "{} {}", self.n(), self.num_half_edges()).expect("string write");
        for (u, v) in self.edges() {
            writeln!(buf, "{u} {v}").expect("string write");
        }
        out.write_all(buf.as_bytes())?;
        Ok(())
    }

    pub fn read_text<R: BufRead>(input: R) -> Result<Self> {
        let mut lines = input.lines().enumerate().filter_map(|(i, l)| match l {
            Ok(s) if s.trim().is_empty() => None,
            other => Some((i + 1, other)),
        });
        let bad = |line: usize, msg: &str| Error::GraphFormat {
            line,
            msg: msg.to_string(),
        };
        let parse_pair = |line: usize, s: &str| -> Result<(usize, usize)> {
            let mut it = s.split_whitespace();
            let a = it.next().and_then(|x| x.parse().ok());
            let b = it.next().and_then(|x| x.parse().ok());
            match (a, b, it.next()) {
                (Some(a), Some(b), None) => Ok((a, b)),
                _ => Err(bad(line, "expected two non-negative integers")),
            }
        };
        let (hline, header) = lines.next().ok_or_else(|| bad(1, "missing header"))?;
        let (n, total) = parse_pair(hline, &header?)?;
        if total % 2 == 1 {
            return Err(bad(hline, "odd half-edge count"));
        }
        let mut edges = Vec::with_capacity(total / 2);
        for (line, text) in lines {
            let (u, v) = parse_pair(line, &text?)?;
            if u >= n || v >= n {
                return Err(bad(line, "vertex out of range"));
            }
            edges.push((u, v));
        }
        if edges.len() * 2 != total {
            return Err(bad(
                hline,
                &format!("header declares {} half-edges, found {}", total, edges.len() * 2),
            ));
        }
        Self::from_edges(n, &edges)
    }

    pub(crate) fn check_invariants(&self) -> bool {
        let every_mated = self
            .mate
            .iter()
            .enumerate()
            .all(|(h, &m)| (m as usize) < self.mate.len() && m as usize != h && self.mate[m as usize] as usize == h);
        let owners_consistent = (0..self.n()).all(|v| self.half_edges(v).all(|h| self.owner(h) == v));
        every_mated && owners_consistent
    }
}

/// Degree sequence of a graph read from a file; isolated vertices allowed.
pub fn degree_sequence_of(graph: &MultiGraph) -> Result<DegreeSequence> {
    DegreeSequence::from_raw(graph.degrees())
}
