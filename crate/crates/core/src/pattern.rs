//! Small pattern graphs and the combinatorics around them: partitions,
//! quotients, supergraphs, Möbius functions, canonical forms.

use std::fmt;

use rustc_hash::FxHashMap;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::Limits;

/// Hard ceiling imposed by the bitmask representation.
pub const HARD_MAX_VERTICES: usize = 64;

/// Simple graph on at most 64 vertices stored as adjacency bitmasks.
///
/// Equality is labelled equality; use [`Pattern::canonical`] or
/// [`isomorphic`] to compare up to isomorphism.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Pattern {
    rows: Vec<u64>,
}

impl Pattern {
    pub fn empty(n: usize) -> Pattern {
        assert!(n <= HARD_MAX_VERTICES, "pattern exceeds 64 vertices");
        Pattern { rows: vec![0; n] }
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Pattern>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n > HARD_MAX_VERTICES {
            return Err(Error::InvalidPattern(format!(
                "{n} vertices exceeds the hard limit of {HARD_MAX_VERTICES}"
            )));
        }
        let mut p = Pattern::empty(n);
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidPattern(format!(
                    "edge {u}-{v} out of range for {n} vertices"
                )));
            }
            if u == v {
                return Err(Error::InvalidPattern(format!("self-loop on vertex {u}")));
            }
            p.add_edge(u, v);
        }
        Ok(p)
    }

    pub fn from_graph(g: &Graph) -> Result<Pattern> {
        Pattern::from_edges(g.n(), g.edges())
    }

    pub fn to_graph(&self) -> Graph {
        Graph::from_edges(self.n(), self.edges()).expect("pattern is simple")
    }

    pub fn complete(n: usize) -> Pattern {
        let mut p = Pattern::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                p.add_edge(u, v);
            }
        }
        p
    }

    pub fn cycle(k: usize) -> Pattern {
        assert!(k >= 3, "cycles need at least 3 vertices");
        Pattern::from_edges(k, (0..k).map(|i| (i, (i + 1) % k))).unwrap()
    }

    /// Path on `k` vertices.
    pub fn path(k: usize) -> Pattern {
        Pattern::from_edges(k, (1..k).map(|i| (i - 1, i))).unwrap()
    }

    /// Star with `k` leaves (`K_{1,k}`).
    pub fn star(k: usize) -> Pattern {
        Pattern::from_edges(k + 1, (1..=k).map(|i| (0, i))).unwrap()
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Pattern {
        Pattern::from_edges(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v)))).unwrap()
    }

    /// `C_k` with one pendant vertex attached to a cycle vertex.
    pub fn cycle_with_pendant(k: usize) -> Pattern {
        let mut p = Pattern::empty(k + 1);
        for i in 0..k {
            p.add_edge(i, (i + 1) % k);
        }
        p.add_edge(0, k);
        p
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn m(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u] >> v & 1 == 1
    }

    #[inline]
    pub fn neighbor_mask(&self, v: usize) -> u64 {
        self.rows[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> {
        bits(self.rows[v])
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v);
        self.rows[u] |= 1 << v;
        self.rows[v] |= 1 << u;
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n())
            .flat_map(|u| bits(self.rows[u] >> u >> 1).map(move |d| (u, u + 1 + d)))
            .collect()
    }

    /// Vertex pairs that are not edges, lexicographic.
    pub fn non_edges(&self) -> Vec<(usize, usize)> {
        let n = self.n();
        (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|&(u, v)| !self.has_edge(u, v))
            .collect()
    }

    /// Mask with the low `n` bits set.
    #[inline]
    pub fn vertex_mask(&self) -> u64 {
        full_mask(self.n())
    }

    /// Connected components as vertex masks, ordered by smallest vertex.
    pub fn components(&self) -> Vec<u64> {
        let mut left = self.vertex_mask();
        let mut out = Vec::new();
        while left != 0 {
            let mut comp = left & left.wrapping_neg();
            let mut frontier = comp;
            while frontier != 0 {
                let mut next = 0;
                for v in bits(frontier) {
                    next |= self.rows[v];
                }
                frontier = next & !comp;
                comp |= next;
            }
            out.push(comp);
            left &= !comp;
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    pub fn is_forest(&self) -> bool {
        self.m() + self.components().len() == self.n()
    }

    /// Induced subgraph on the vertices of `mask`, relabelled in
    /// increasing order.
    pub fn induced(&self, mask: u64) -> Pattern {
        let verts: Vec<usize> = bits(mask).collect();
        let mut p = Pattern::empty(verts.len());
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    p.add_edge(i, j);
                }
            }
        }
        p
    }

    /// Applies `perm`, sending vertex `v` to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Pattern {
        let mut p = Pattern::empty(self.n());
        for (u, v) in self.edges() {
            p.add_edge(perm[u], perm[v]);
        }
        p
    }

    /// Canonical representative of the isomorphism class.
    pub fn canonical(&self) -> Pattern {
        let perm = canonical_labeling(self);
        self.relabel(&perm)
    }

    /// Parses a pattern name or edge-list literal, enforcing `max_vertices`.
    ///
    /// Accepted forms: `C<k>`, `P<k>` (path on k vertices), `K<k>`,
    /// `K<a>,<b>`, `star<k>`, `C'<k>` (cycle plus pendant), and literals
    /// such as `0-1,1-2,2-0` or `5:0-1,2-3` where the prefix fixes the
    /// vertex count.
    pub fn parse(spec: &str, max_vertices: usize) -> Result<Pattern> {
        let p = parse_spec(spec.trim())?;
        if p.n() > max_vertices {
            return Err(Error::guard("pattern vertex count", p.n(), max_vertices));
        }
        Ok(p)
    }
}

impl fmt::Debug for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Pattern({self})")
    }
}

impl fmt::Display for Pattern {
    /// Edge-list literal accepted by [`Pattern::parse`].
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.n())?;
        let edges: Vec<String> = self.edges().iter().map(|(u, v)| format!("{u}-{v}")).collect();
        write!(f, "{}", edges.join(","))
    }
}

fn parse_spec(spec: &str) -> Result<Pattern> {
    let bad = || Error::InvalidPattern(format!("cannot parse pattern {spec:?}"));
    let num = |s: &str| s.parse::<usize>().map_err(|_| bad());
    let within = |n: usize| {
        if n > HARD_MAX_VERTICES {
            Err(Error::InvalidPattern(format!(
                "{n} vertices exceeds the hard limit of {HARD_MAX_VERTICES}"
            )))
        } else {
            Ok(n)
        }
    };
    if let Some(rest) = spec.strip_prefix("star") {
        let k = within(num(rest)? + 1)? - 1;
        return Ok(Pattern::star(k));
    }
    if let Some(rest) = spec.strip_prefix("C'") {
        let k = within(num(rest)? + 1)? - 1;
        if k < 3 {
            return Err(bad());
        }
        return Ok(Pattern::cycle_with_pendant(k));
    }
    if let Some(rest) = spec.strip_prefix('C') {
        if let Ok(k) = num(rest) {
            if k < 3 {
                return Err(Error::InvalidPattern("cycles need at least 3 vertices".into()));
            }
            return Ok(Pattern::cycle(within(k)?));
        }
    }
    if let Some(rest) = spec.strip_prefix('P') {
        if let Ok(k) = num(rest) {
            return Ok(Pattern::path(within(k)?));
        }
    }
    if let Some(rest) = spec.strip_prefix('K') {
        if let Some((a, b)) = rest.split_once(',') {
            let (a, b) = (num(a)?, num(b)?);
            within(a + b)?;
            return Ok(Pattern::complete_bipartite(a, b));
        }
        if let Ok(k) = num(rest) {
            return Ok(Pattern::complete(within(k)?));
        }
    }
    parse_literal(spec).map_err(|e| match e {
        Error::InvalidPattern(_) => e,
        _ => bad(),
    })
}

fn parse_literal(spec: &str) -> Result<Pattern> {
    let bad = || Error::InvalidPattern(format!("cannot parse pattern {spec:?}"));
    let (declared, body) = match spec.split_once(':') {
        Some((n, body)) => (Some(n.trim().parse::<usize>().map_err(|_| bad())?), body),
        None => (None, spec),
    };
    let mut edges = Vec::new();
    for item in body.split([',', ';']).map(str::trim).filter(|s| !s.is_empty()) {
        let (a, b) = item.split_once('-').ok_or_else(bad)?;
        let a = a.trim().parse::<usize>().map_err(|_| bad())?;
        let b = b.trim().parse::<usize>().map_err(|_| bad())?;
        edges.push((a, b));
    }
    if declared.is_none() && edges.is_empty() {
        return Err(bad());
    }
    let implied = edges.iter().map(|&(a, b)| a.max(b) + 1).max().unwrap_or(0);
    let n = declared.unwrap_or(implied);
    Pattern::from_edges(n, edges)
}

/// Iterates over the set bits of `mask`, lowest first.
#[inline]
pub fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let b = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(b)
        }
    })
}

#[inline]
pub fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

// ---------------------------------------------------------------------------
// Canonical labelling

/// Equitable colour refinement. Colours are ranks of
/// `(old colour, sorted neighbour colours)`, so the result is invariant
/// under relabelling.
fn refine(p: &Pattern, colors: &mut [u32]) {
    let n = p.n();
    let mut classes = count_distinct(colors);
    loop {
        let mut sigs: Vec<(u32, Vec<u32>, usize)> = (0..n)
            .map(|v| {
                let mut nc: Vec<u32> = p.neighbors(v).map(|w| colors[w]).collect();
                nc.sort_unstable();
                (colors[v], nc, v)
            })
            .collect();
        sigs.sort();
        let mut rank = 0u32;
        for i in 0..n {
            if i > 0 && (sigs[i].0 != sigs[i - 1].0 || sigs[i].1 != sigs[i - 1].1) {
                rank += 1;
            }
            colors[sigs[i].2] = rank;
        }
        let now = if n == 0 { 0 } else { rank as usize + 1 };
        if now == classes {
            return;
        }
        classes = now;
    }
}

fn count_distinct(colors: &[u32]) -> usize {
    let mut c = colors.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

/// Two vertices are interchangeable by an automorphism when their
/// neighbourhoods agree outside the pair.
#[inline]
fn twins(p: &Pattern, u: usize, w: usize) -> bool {
    let mask = !((1u64 << u) | (1u64 << w));
    p.rows[u] & mask == p.rows[w] & mask
}

fn encode(p: &Pattern, colors: &[u32]) -> Vec<u64> {
    let n = p.n();
    let mut at = vec![0usize; n];
    for v in 0..n {
        at[colors[v] as usize] = v;
    }
    at.iter()
        .map(|&v| {
            bits(p.rows[v]).fold(0u64, |acc, w| acc | 1 << (n - 1 - colors[w] as usize))
        })
        .collect()
}

/// Individualisation-refinement search for the labelling whose adjacency
/// encoding is lexicographically smallest. Returns `perm` with
/// `perm[v]` = canonical position of `v`.
fn canonical_labeling(p: &Pattern) -> Vec<usize> {
    let n = p.n();
    if n == 0 {
        return Vec::new();
    }
    let mut colors: Vec<u32> = (0..n).map(|v| p.degree(v) as u32).collect();
    refine(p, &mut colors);
    let mut best: Option<(Vec<u64>, Vec<u32>)> = None;
    search(p, colors, &mut best);
    best.expect("at least one leaf")
        .1
        .into_iter()
        .map(|c| c as usize)
        .collect()
}

fn search(p: &Pattern, colors: Vec<u32>, best: &mut Option<(Vec<u64>, Vec<u32>)>) {
    let n = p.n();
    let mut sizes = vec![0usize; n];
    for &c in &colors {
        sizes[c as usize] += 1;
    }
    let Some(target) = (0..n).find(|&c| sizes[c] > 1) else {
        let code = encode(p, &colors);
        if best.as_ref().map_or(true, |(b, _)| code < *b) {
            *best = Some((code, colors));
        }
        return;
    };
    let cell: Vec<usize> = (0..n).filter(|&v| colors[v] as usize == target).collect();
    let mut reps: Vec<usize> = Vec::new();
    for &v in &cell {
        if reps.iter().all(|&r| !twins(p, r, v)) {
            reps.push(v);
        }
    }
    for v in reps {
        let mut next: Vec<u32> = colors.iter().map(|&c| 2 * c + 1).collect();
        next[v] = 2 * colors[v];
        refine(p, &mut next);
        search(p, next, best);
    }
}

pub fn isomorphic(a: &Pattern, b: &Pattern) -> bool {
    a.n() == b.n() && a.m() == b.m() && a.canonical() == b.canonical()
}

/// Number of automorphisms, by backtracking over maps that respect the
/// refined colouring.
pub fn count_automorphisms(h: &Pattern) -> crate::BigCount {
    let n = h.n();
    let mut colors: Vec<u32> = (0..n).map(|v| h.degree(v) as u32).collect();
    refine(h, &mut colors);
    let mut image = vec![usize::MAX; n];
    let mut used = 0u64;
    fn go(h: &Pattern, colors: &[u32], i: usize, image: &mut [usize], used: &mut u64) -> u128 {
        let n = h.n();
        if i == n {
            return 1;
        }
        let mut total = 0;
        for w in 0..n {
            if *used >> w & 1 == 1 || colors[w] != colors[i] {
                continue;
            }
            let ok = (0..i).all(|j| h.has_edge(i, j) == h.has_edge(w, image[j]));
            if ok {
                image[i] = w;
                *used |= 1 << w;
                total += go(h, colors, i + 1, image, used);
                *used &= !(1 << w);
            }
        }
        total
    }
    go(h, &colors, 0, &mut image, &mut used).into()
}

/// Every isomorphism class of graphs on exactly `n` vertices, as
/// canonical patterns in sorted order. Exhaustive over edge subsets.
pub fn isomorphism_classes(n: usize) -> Result<Vec<Pattern>> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    if pairs.len() > 21 {
        return Err(Error::guard("exhaustive graph generation pairs", pairs.len(), 21));
    }
    let mut seen = std::collections::BTreeSet::new();
    for subset in 0u64..1 << pairs.len() {
        let p = Pattern::from_edges(n, bits(subset).map(|i| pairs[i])).unwrap();
        seen.insert(p.canonical());
    }
    Ok(seen.into_iter().collect())
}

// ---------------------------------------------------------------------------
// Partitions

/// Set partition of `{0..n}` stored as a restricted growth string: `rgs[v]`
/// is the index of the block containing `v`, blocks numbered by their
/// smallest element.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    rgs: Vec<u8>,
    blocks: u8,
}

impl Partition {
    /// All-singletons partition.
    pub fn discrete(n: usize) -> Partition {
        Partition {
            rgs: (0..n as u8).collect(),
            blocks: n as u8,
        }
    }

    /// One-block partition.
    pub fn single_block(n: usize) -> Partition {
        Partition {
            rgs: vec![0; n],
            blocks: (n > 0) as u8,
        }
    }

    /// Builds a partition from explicit blocks, which must be disjoint,
    /// nonempty and cover `0..n`.
    pub fn from_blocks(n: usize, blocks: &[Vec<usize>]) -> Result<Partition> {
        if n > HARD_MAX_VERTICES {
            return Err(Error::InvalidPartition("ground set too large".into()));
        }
        let mut owner = vec![usize::MAX; n];
        for (i, b) in blocks.iter().enumerate() {
            if b.is_empty() {
                return Err(Error::InvalidPartition("empty block".into()));
            }
            for &v in b {
                if v >= n {
                    return Err(Error::InvalidPartition(format!("vertex {v} out of range")));
                }
                if owner[v] != usize::MAX {
                    return Err(Error::InvalidPartition(format!("vertex {v} in two blocks")));
                }
                owner[v] = i;
            }
        }
        if owner.contains(&usize::MAX) {
            return Err(Error::InvalidPartition("blocks do not cover the ground set".into()));
        }
        Ok(Partition::from_labels(&owner))
    }

    /// Normalises arbitrary block labels to restricted growth form.
    pub fn from_labels(labels: &[usize]) -> Partition {
        let mut map: FxHashMap<usize, u8> = FxHashMap::default();
        let rgs = labels
            .iter()
            .map(|l| {
                let next = map.len() as u8;
                *map.entry(*l).or_insert(next)
            })
            .collect();
        Partition {
            rgs,
            blocks: map.len() as u8,
        }
    }

    #[inline]
    pub fn ground_size(&self) -> usize {
        self.rgs.len()
    }

    #[inline]
    pub fn num_blocks(&self) -> usize {
        self.blocks as usize
    }

    #[inline]
    pub fn block_of(&self, v: usize) -> usize {
        self.rgs[v] as usize
    }

    pub fn block_masks(&self) -> Vec<u64> {
        let mut masks = vec![0u64; self.num_blocks()];
        for (v, &b) in self.rgs.iter().enumerate() {
            masks[b as usize] |= 1 << v;
        }
        masks
    }

    /// Blocks sorted by minimum element, each sorted ascending.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        self.block_masks().into_iter().map(|m| bits(m).collect()).collect()
    }

    /// Whether every block of `self` lies inside a block of `coarser`.
    pub fn refines(&self, coarser: &Partition) -> Result<bool> {
        if self.ground_size() != coarser.ground_size() {
            return Err(Error::InvalidPartition(format!(
                "ground sets differ ({} vs {})",
                self.ground_size(),
                coarser.ground_size()
            )));
        }
        let mut target = vec![u8::MAX; self.num_blocks()];
        for v in 0..self.ground_size() {
            let b = self.rgs[v] as usize;
            if target[b] == u8::MAX {
                target[b] = coarser.rgs[v];
            } else if target[b] != coarser.rgs[v] {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `coarser / self`: the partition of the blocks of `self` induced by
    /// `coarser`. Requires `self` to refine `coarser`.
    pub fn relative(&self, coarser: &Partition) -> Result<Partition> {
        if !self.refines(coarser)? {
            return Err(Error::InvalidPartition("not a refinement".into()));
        }
        let mut labels = vec![0usize; self.num_blocks()];
        for v in 0..self.ground_size() {
            labels[self.rgs[v] as usize] = coarser.rgs[v] as usize;
        }
        Ok(Partition::from_labels(&labels))
    }

    /// Pulls a partition of the blocks of `self` back to the ground set.
    pub fn compose(&self, of_blocks: &Partition) -> Result<Partition> {
        if of_blocks.ground_size() != self.num_blocks() {
            return Err(Error::InvalidPartition("block count mismatch".into()));
        }
        let labels: Vec<usize> = self.rgs.iter().map(|&b| of_blocks.rgs[b as usize] as usize).collect();
        Ok(Partition::from_labels(&labels))
    }
}

/// All partitions of `0..n` in restricted-growth-string lexicographic
/// order. There are Bell(n) of them.
pub fn enumerate_partitions_of(n: usize, limits: &Limits) -> Result<Vec<Partition>> {
    if n > limits.max_pattern {
        return Err(Error::guard("partition ground set", n, limits.max_pattern));
    }
    let mut out = Vec::new();
    if n == 0 {
        out.push(Partition { rgs: Vec::new(), blocks: 0 });
        return Ok(out);
    }
    let mut rgs = vec![0u8; n];
    let mut maxes = vec![0u8; n];
    loop {
        out.push(Partition {
            rgs: rgs.clone(),
            blocks: maxes[n - 1] + 1,
        });
        // increment the last position that can grow
        let mut i = n - 1;
        loop {
            if i == 0 {
                return Ok(out);
            }
            if rgs[i] <= maxes[i - 1] {
                rgs[i] += 1;
                maxes[i] = maxes[i - 1].max(rgs[i]);
                for j in i + 1..n {
                    rgs[j] = 0;
                    maxes[j] = maxes[i];
                }
                break;
            }
            i -= 1;
        }
    }
}

pub fn enumerate_partitions(h: &Pattern, limits: &Limits) -> Result<Vec<Partition>> {
    enumerate_partitions_of(h.n(), limits)
}

/// Quotient `H/P`. When a block spans an edge the quotient carries a loop,
/// which is recorded in `has_loop`; `graph` is then the loop-free skeleton.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientResult {
    pub graph: Pattern,
    pub has_loop: bool,
}

pub fn quotient(h: &Pattern, p: &Partition) -> Result<QuotientResult> {
    if p.ground_size() != h.n() {
        return Err(Error::InvalidPartition(format!(
            "partition of {} elements for a pattern on {} vertices",
            p.ground_size(),
            h.n()
        )));
    }
    let mut graph = Pattern::empty(p.num_blocks());
    let mut has_loop = false;
    for (u, v) in h.edges() {
        let (a, b) = (p.block_of(u), p.block_of(v));
        if a == b {
            has_loop = true;
        } else {
            graph.add_edge(a, b);
        }
    }
    Ok(QuotientResult { graph, has_loop })
}

/// Möbius function of the partition lattice from the bottom:
/// `(-1)^(n - |P|) * prod (|U| - 1)!`.
pub fn mobius_partition(p: &Partition) -> i64 {
    let mut sizes = vec![0i64; p.num_blocks()];
    for v in 0..p.ground_size() {
        sizes[p.block_of(v)] += 1;
    }
    let magnitude: i64 = sizes.iter().map(|&s| (1..s).product::<i64>()).product();
    if (p.ground_size() - p.num_blocks()) % 2 == 0 {
        magnitude
    } else {
        -magnitude
    }
}

/// Möbius function of a finite poset, stored for comparable pairs.
#[derive(Clone, Debug)]
pub struct MobiusTable {
    len: usize,
    rows: Vec<FxHashMap<usize, i128>>,
}

impl MobiusTable {
    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// `mu(x, y)` for `x <= y`; `None` when `x` is not below `y`.
    pub fn mu(&self, x: usize, y: usize) -> Option<i128> {
        self.rows[x].get(&y).copied()
    }

    /// Entries `(y, mu(x, y))` over the up-set of `x`.
    pub fn row(&self, x: usize) -> impl Iterator<Item = (usize, i128)> + '_ {
        self.rows[x].iter().map(|(&y, &m)| (y, m))
    }
}

/// Computes the Möbius function from the defining recursion
/// `mu(x, x) = 1`, `sum_{x <= z <= y} mu(x, z) = 0` for `x < y`.
pub fn poset_mobius<T>(elements: &[T], leq: impl Fn(&T, &T) -> bool) -> Result<MobiusTable> {
    let n = elements.len();
    let mut up: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut below = vec![0usize; n];
    for i in 0..n {
        if !leq(&elements[i], &elements[i]) {
            return Err(Error::NotAPartialOrder(format!("element {i} is not reflexive")));
        }
        for j in 0..n {
            if i != j && leq(&elements[i], &elements[j]) {
                if j < i && leq(&elements[j], &elements[i]) {
                    return Err(Error::NotAPartialOrder(format!(
                        "elements {j} and {i} are mutually below each other"
                    )));
                }
                up[i].push(j);
                below[j] += 1;
            }
        }
    }
    // sizes of down-sets strictly increase along the order
    let mut ext: Vec<usize> = (0..n).collect();
    ext.sort_by_key(|&i| (below[i], i));
    let mut pos = vec![0usize; n];
    for (k, &i) in ext.iter().enumerate() {
        pos[i] = k;
    }
    let mut rows = Vec::with_capacity(n);
    for x in 0..n {
        let mut ups = up[x].clone();
        ups.sort_by_key(|&y| pos[y]);
        let mut row: FxHashMap<usize, i128> = FxHashMap::default();
        row.insert(x, 1);
        for &y in &ups {
            let mut s: i128 = 0;
            for (&z, &m) in row.iter() {
                if z != y && leq(&elements[z], &elements[y]) {
                    s += m;
                }
            }
            row.insert(y, -s);
        }
        rows.push(row);
    }
    Ok(MobiusTable { len: n, rows })
}

/// All supergraphs `H ∪ E` on the vertex set of `h`, paired with `|E|`,
/// in subset order over the lexicographically sorted non-edges.
pub fn enumerate_supergraphs(h: &Pattern, limits: &Limits) -> Result<Vec<(Pattern, usize)>> {
    if h.n() > limits.max_pattern {
        return Err(Error::guard("pattern vertex count", h.n(), limits.max_pattern));
    }
    let missing = h.non_edges();
    if missing.len() > limits.max_non_edges {
        return Err(Error::guard("pattern non-edge count", missing.len(), limits.max_non_edges));
    }
    Ok((0u64..1 << missing.len())
        .map(|subset| {
            let mut g = h.clone();
            for i in bits(subset) {
                g.add_edge(missing[i].0, missing[i].1);
            }
            (g, subset.count_ones() as usize)
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lim() -> Limits {
        Limits::default()
    }

    #[test]
    fn bell_numbers() {
        let bell = [1, 1, 2, 5, 15, 52, 203, 877];
        for (n, &b) in bell.iter().enumerate() {
            assert_eq!(enumerate_partitions_of(n, &lim()).unwrap().len(), b);
        }
    }

    #[test]
    fn partitions_are_distinct_and_ordered() {
        let ps = enumerate_partitions_of(5, &lim()).unwrap();
        for w in ps.windows(2) {
            assert!(w[0].rgs < w[1].rgs);
        }
        assert_eq!(ps[0], Partition::single_block(5));
        assert_eq!(*ps.last().unwrap(), Partition::discrete(5));
    }

    #[test]
    fn partition_cap() {
        assert!(enumerate_partitions_of(11, &lim()).is_err());
    }

    #[test]
    fn quotient_examples() {
        let c5 = Pattern::cycle(5);
        let p = Partition::from_blocks(5, &[vec![0, 2], vec![1], vec![3], vec![4]]).unwrap();
        let q = quotient(&c5, &p).unwrap();
        assert!(!q.has_loop);
        assert!(isomorphic(&q.graph, &Pattern::cycle_with_pendant(3)));

        let q = quotient(&c5, &Partition::discrete(5)).unwrap();
        assert_eq!(q.graph, c5);
        assert!(!q.has_loop);

        let q = quotient(&Pattern::complete(2), &Partition::single_block(2)).unwrap();
        assert_eq!(q.graph.n(), 1);
        assert!(q.has_loop);
    }

    #[test]
    fn invalid_partitions() {
        assert!(Partition::from_blocks(3, &[vec![0, 1], vec![1, 2]]).is_err());
        assert!(Partition::from_blocks(3, &[vec![0, 1]]).is_err());
        assert!(quotient(&Pattern::cycle(4), &Partition::discrete(3)).is_err());
    }

    #[test]
    fn refinement_examples() {
        let bottom = Partition::discrete(3);
        let top = Partition::single_block(3);
        let a = Partition::from_blocks(3, &[vec![0, 1], vec![2]]).unwrap();
        let b = Partition::from_blocks(3, &[vec![0, 2], vec![1]]).unwrap();
        assert!(bottom.refines(&a).unwrap());
        assert!(a.refines(&top).unwrap());
        assert!(a.refines(&a).unwrap());
        assert!(!a.refines(&b).unwrap());
        assert!(a.refines(&Partition::discrete(4)).is_err());
    }

    #[test]
    fn mobius_examples() {
        assert_eq!(mobius_partition(&Partition::discrete(4)), 1);
        let pair = Partition::from_blocks(4, &[vec![0, 1], vec![2], vec![3]]).unwrap();
        assert_eq!(mobius_partition(&pair), -1);
        assert_eq!(mobius_partition(&Partition::single_block(3)), 2);
        assert_eq!(mobius_partition(&Partition::single_block(5)), 24);
    }

    #[test]
    fn poset_mobius_chain_and_boolean() {
        let chain = [0, 1];
        let t = poset_mobius(&chain, |a, b| a <= b).unwrap();
        assert_eq!(t.mu(0, 1), Some(-1));
        assert_eq!(t.mu(1, 0), None);

        let subsets: Vec<u32> = (0..8).collect();
        let t = poset_mobius(&subsets, |a, b| a & b == *a).unwrap();
        for s in 0..8u32 {
            let expected = if s.count_ones() % 2 == 0 { 1 } else { -1 };
            assert_eq!(t.mu(0, s as usize), Some(expected));
        }
    }

    #[test]
    fn poset_mobius_rejects_non_order() {
        let xs = [0, 1];
        assert!(matches!(
            poset_mobius(&xs, |_, _| true),
            Err(Error::NotAPartialOrder(_))
        ));
    }

    #[test]
    fn poset_mobius_matches_closed_form() {
        for n in 1..=5 {
            let ps = enumerate_partitions_of(n, &lim()).unwrap();
            let t = poset_mobius(&ps, |a, b| a.refines(b).unwrap()).unwrap();
            let bottom = ps.iter().position(|p| *p == Partition::discrete(n)).unwrap();
            for (i, p) in ps.iter().enumerate() {
                assert_eq!(t.mu(bottom, i), Some(mobius_partition(p) as i128));
            }
        }
    }

    #[test]
    fn supergraph_counts() {
        assert_eq!(enumerate_supergraphs(&Pattern::complete(3), &lim()).unwrap().len(), 1);
        let k2_plus = Pattern::from_edges(3, [(0, 1)]).unwrap();
        assert_eq!(enumerate_supergraphs(&k2_plus, &lim()).unwrap().len(), 4);
        let sup = enumerate_supergraphs(&Pattern::empty(3), &lim()).unwrap();
        assert_eq!(sup.len(), 8);
        assert_eq!(sup.iter().filter(|(_, k)| *k == 2).count(), 3);
        assert!(enumerate_supergraphs(&Pattern::empty(8), &lim()).is_err());
    }

    #[test]
    fn isomorphism_examples() {
        let c4 = Pattern::cycle(4);
        let relabelled = c4.relabel(&[2, 0, 3, 1]);
        assert!(isomorphic(&c4, &relabelled));
        assert!(!isomorphic(&c4, &Pattern::path(4)));
        let two_triangles = Pattern::from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert!(!isomorphic(&Pattern::cycle(6), &two_triangles));
    }

    #[test]
    fn automorphism_examples() {
        assert_eq!(count_automorphisms(&Pattern::cycle(6)), 12u32.into());
        assert_eq!(count_automorphisms(&Pattern::cycle_with_pendant(6)), 2u32.into());
        assert_eq!(count_automorphisms(&Pattern::complete(4)), 24u32.into());
        assert_eq!(count_automorphisms(&Pattern::empty(0)), 1u32.into());
    }

    #[test]
    fn class_counts() {
        let counts: Vec<usize> = (0..=6).map(|n| isomorphism_classes(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 11, 34, 156]);
    }

    #[test]
    fn canonical_handles_symmetric_graphs() {
        let k10 = Pattern::complete(10);
        assert_eq!(k10.canonical(), k10);
        let petersen = Pattern::from_edges(
            10,
            [
                (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
                (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
                (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
            ],
        )
        .unwrap();
        assert!(isomorphic(&petersen, &petersen.relabel(&[9, 3, 1, 0, 8, 2, 5, 7, 4, 6])));
        assert_eq!(count_automorphisms(&petersen), 120u32.into());
    }

    #[test]
    fn parse_names() {
        let p = |s| Pattern::parse(s, 10).unwrap();
        assert!(isomorphic(&p("C5"), &Pattern::cycle(5)));
        assert_eq!(p("P4").m(), 3);
        assert_eq!(p("K4").m(), 6);
        assert_eq!(p("K2,3").m(), 6);
        assert_eq!(p("star3").n(), 4);
        assert_eq!(p("C'3").n(), 4);
        assert_eq!(p("0-1,1-2"), Pattern::path(3));
        assert_eq!(p("4:0-1"), Pattern::from_edges(4, [(0, 1)]).unwrap());
        assert_eq!(p("3:"), Pattern::empty(3));
        assert!(Pattern::parse("C11", 10).is_err());
        assert!(Pattern::parse("Q3", 10).is_err());
        assert!(Pattern::parse("0-0", 10).is_err());
        assert!(Pattern::parse("C2", 10).is_err());
    }

    #[test]
    fn display_round_trips() {
        let p = Pattern::cycle_with_pendant(4);
        assert_eq!(Pattern::parse(&p.to_string(), 10).unwrap(), p);
    }

    #[test]
    fn relative_partition() {
        let p = Partition::from_blocks(4, &[vec![0, 1], vec![2], vec![3]]).unwrap();
        let q = Partition::from_blocks(4, &[vec![0, 1, 3], vec![2]]).unwrap();
        let r = p.relative(&q).unwrap();
        assert_eq!(r.blocks(), vec![vec![0, 2], vec![1]]);
        assert_eq!(p.compose(&r).unwrap(), q);
    }
}
