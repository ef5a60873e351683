//! α-acyclicity of hypergraphs and graphs, join trees, and the
//! hom/inj/ind easiness classifiers.

use std::collections::BTreeSet;
use std::sync::OnceLock;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::OrientedGraph;
use crate::pattern::{bits, enumerate_partitions, quotient, Pattern};
use crate::Limits;

/// Hypergraph on vertices `0..n` with hyperedges stored as bitmasks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hypergraph {
    n: usize,
    edges: Vec<u64>,
}

impl Hypergraph {
    pub fn new(n: usize, edges: &[Vec<usize>]) -> Result<Hypergraph> {
        if n > 64 {
            return Err(Error::InvalidInput("hypergraphs are limited to 64 vertices".into()));
        }
        let mut masks = Vec::with_capacity(edges.len());
        for e in edges {
            if e.is_empty() {
                return Err(Error::InvalidInput("empty hyperedge".into()));
            }
            let mut m = 0u64;
            for &v in e {
                if v >= n {
                    return Err(Error::InvalidInput(format!("vertex {v} out of range")));
                }
                m |= 1 << v;
            }
            masks.push(m);
        }
        Ok(Hypergraph { n, edges: masks })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edge_mask(&self, i: usize) -> u64 {
        self.edges[i]
    }

    pub fn edge_masks(&self) -> &[u64] {
        &self.edges
    }

    /// Hyperedges as sorted vertex lists.
    pub fn edges(&self) -> Vec<Vec<usize>> {
        self.edges.iter().map(|&m| bits(m).collect()).collect()
    }
}

/// Tree on the hyperedges of a hypergraph (nodes are hyperedge indices).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JoinTree {
    nodes: usize,
    edges: Vec<(usize, usize)>,
}

impl JoinTree {
    pub fn node_count(&self) -> usize {
        self.nodes
    }

    pub fn tree_edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Parent pointers (root has `None`) and a preorder listing, rooted at
    /// `root`.
    pub fn rooted(&self, root: usize) -> (Vec<Option<usize>>, Vec<usize>) {
        let mut adj = vec![Vec::new(); self.nodes];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        let mut parent = vec![None; self.nodes];
        let mut seen = vec![false; self.nodes];
        let mut order = Vec::with_capacity(self.nodes);
        let mut stack = vec![root];
        seen[root] = true;
        while let Some(u) = stack.pop() {
            order.push(u);
            for &w in adj[u].iter().rev() {
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = Some(u);
                    stack.push(w);
                }
            }
        }
        (parent, order)
    }

    /// Checks that this is a spanning tree on the hyperedges of `f` with
    /// the running-intersection property: for each vertex, the hyperedges
    /// containing it form a connected subtree.
    pub fn verify(&self, f: &Hypergraph) -> bool {
        let k = f.edge_count();
        if self.nodes != k || self.edges.len() + 1 != k.max(1) {
            return false;
        }
        if k == 0 {
            return self.edges.is_empty();
        }
        let (_, order) = self.rooted(0);
        if order.len() != k {
            return false;
        }
        for v in 0..f.n() {
            let holders: Vec<bool> = f.edges.iter().map(|&e| e >> v & 1 == 1).collect();
            let count = holders.iter().filter(|&&h| h).count();
            if count <= 1 {
                continue;
            }
            // a forest restricted to the holders is connected iff it has
            // count - 1 internal edges
            let inner = self
                .edges
                .iter()
                .filter(|&&(a, b)| holders[a] && holders[b])
                .count();
            if inner != count - 1 {
                return false;
            }
        }
        true
    }
}

/// Every acyclic orientation of `h`, labelled (no isomorphism reduction).
///
/// Orientations are built edge by edge in lexicographic edge order, trying
/// `u -> v` (u < v) before `v -> u`, and pruned as soon as a directed cycle
/// closes; this yields exactly the acyclic members of all `2^e(h)`
/// orientations.
pub fn acyclic_orientations(h: &Pattern, limits: &Limits) -> Result<Vec<OrientedGraph>> {
    Ok(acyclic_orientation_masks(h, limits)?
        .into_iter()
        .map(|out| mask_orientation(&out))
        .collect())
}

/// Same enumeration as [`acyclic_orientations`], as out-neighbour masks.
pub(crate) fn acyclic_orientation_masks(h: &Pattern, limits: &Limits) -> Result<Vec<Vec<u64>>> {
    let edges = h.edges();
    if edges.len() > limits.max_orientation_edges {
        return Err(Error::guard(
            "pattern edge count for orientation enumeration",
            edges.len(),
            limits.max_orientation_edges,
        ));
    }
    let n = h.n();
    let mut out = Vec::new();
    let mut arcs = vec![0u64; n];
    // reach[x]: vertices reachable from x by a nonempty directed path
    let reach = vec![0u64; n];
    fn go(
        i: usize,
        edges: &[(usize, usize)],
        arcs: &mut Vec<u64>,
        reach: Vec<u64>,
        out: &mut Vec<Vec<u64>>,
    ) {
        if i == edges.len() {
            out.push(arcs.clone());
            return;
        }
        let (a, b) = edges[i];
        for (u, v) in [(a, b), (b, a)] {
            if reach[v] >> u & 1 == 1 {
                continue;
            }
            let gain = reach[v] | 1 << v;
            let mut next = reach.clone();
            for x in 0..next.len() {
                if x == u || next[x] >> u & 1 == 1 {
                    next[x] |= gain;
                }
            }
            arcs[u] |= 1 << v;
            go(i + 1, edges, arcs, next, out);
            arcs[u] &= !(1 << v);
        }
    }
    go(0, &edges, &mut arcs, reach, &mut out);
    Ok(out)
}

fn mask_orientation(out: &[u64]) -> OrientedGraph {
    let arcs = out
        .iter()
        .enumerate()
        .flat_map(|(u, &m)| bits(m).map(move |v| (u, v)));
    OrientedGraph::from_arcs(out.len(), arcs).expect("pattern arcs are valid")
}

fn orientation_masks(d: &OrientedGraph) -> Result<Vec<u64>> {
    if d.n() > 64 {
        return Err(Error::InvalidInput("oriented pattern exceeds 64 vertices".into()));
    }
    Ok((0..d.n())
        .map(|u| d.out_neighbors(u).iter().fold(0u64, |m, &v| m | 1 << v))
        .collect())
}

/// One hyperedge `R(u)` per source `u`, in increasing source order: all
/// vertices reachable from `u`, including `u`.
pub fn reachability_hypergraph(d: &OrientedGraph) -> Result<Hypergraph> {
    if !d.is_acyclic() {
        return Err(Error::DirectedCycle);
    }
    let out = orientation_masks(d)?;
    Ok(reachability_from_masks(&out))
}

pub(crate) fn reachability_from_masks(out: &[u64]) -> Hypergraph {
    let n = out.len();
    let mut indeg = 0u64;
    for &m in out {
        indeg |= m;
    }
    let edges = (0..n)
        .filter(|&u| indeg >> u & 1 == 0)
        .map(|u| reach_closure(out, u))
        .collect();
    Hypergraph { n, edges }
}

pub(crate) fn reach_closure(out: &[u64], u: usize) -> u64 {
    let mut seen = 1u64 << u;
    let mut frontier = seen;
    while frontier != 0 {
        let mut next = 0;
        for x in bits(frontier) {
            next |= out[x];
        }
        frontier = next & !seen;
        seen |= next;
    }
    seen
}

/// GYO reduction followed by a maximum-weight spanning tree on pairwise
/// intersection sizes. The tree is verified before it is returned.
pub fn is_alpha_acyclic_hypergraph(f: &Hypergraph) -> Result<(bool, Option<JoinTree>)> {
    if !gyo_reduces(&f.edges) {
        return Ok((false, None));
    }
    let tree = max_weight_spanning_tree(&f.edges);
    if !tree.verify(f) {
        return Err(Error::ContractViolation(format!(
            "GYO accepted {:?} but the spanning tree {:?} is not a join tree",
            f.edges(),
            tree.edges
        )));
    }
    Ok((true, Some(tree)))
}

fn gyo_reduces(edges: &[u64]) -> bool {
    let mut live: Vec<u64> = edges.to_vec();
    loop {
        let mut changed = false;
        // drop vertices that occur in at most one hyperedge
        let mut once = 0u64;
        let mut twice = 0u64;
        for &e in &live {
            twice |= once & e;
            once |= e;
        }
        let lonely = once & !twice;
        if lonely != 0 {
            for e in live.iter_mut() {
                *e &= !lonely;
            }
            changed = true;
        }
        // drop empty hyperedges and those contained in another
        let mut i = 0;
        while i < live.len() {
            let e = live[i];
            let absorbed = e == 0
                || live
                    .iter()
                    .enumerate()
                    .any(|(j, &o)| j != i && e & !o == 0 && (e != o || j < i));
            if absorbed {
                live.swap_remove(i);
                changed = true;
            } else {
                i += 1;
            }
        }
        if live.is_empty() {
            return true;
        }
        if !changed {
            return false;
        }
    }
}

fn max_weight_spanning_tree(edges: &[u64]) -> JoinTree {
    let k = edges.len();
    let mut candidates: Vec<(u32, usize, usize)> = Vec::new();
    for a in 0..k {
        for b in a + 1..k {
            candidates.push(((edges[a] & edges[b]).count_ones(), a, b));
        }
    }
    // heaviest first; ties by index for determinism
    candidates.sort_by(|x, y| y.0.cmp(&x.0).then((x.1, x.2).cmp(&(y.1, y.2))));
    let mut parent: Vec<usize> = (0..k).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut tree = Vec::with_capacity(k.saturating_sub(1));
    for (_, a, b) in candidates {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra != rb {
            parent[ra] = rb;
            tree.push((a, b));
        }
    }
    JoinTree { nodes: k, edges: tree }
}

/// Which condition of the cyclic obstruction characterization fired.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Obstruction {
    /// The vertex set `S`, sorted.
    pub subset: Vec<usize>,
    /// 1: the hyperedge traces on `S` of size at least two are exactly the
    /// consecutive pairs of a cyclic order of `S`. 2: every `S \ {x}` is a
    /// trace but no hyperedge contains `S`.
    pub condition: u8,
}

/// Exhaustive search over vertex subsets `S` with `|S| >= 3` for a cyclic
/// obstruction. A hypergraph is α-acyclic iff none exists. Subsets are
/// scanned by size, then by mask.
pub fn obstruction_oracle(f: &Hypergraph, limits: &Limits) -> Result<Option<Obstruction>> {
    if f.n() > limits.max_obstruction_vertices {
        return Err(Error::guard(
            "hypergraph vertex count for the obstruction scan",
            f.n(),
            limits.max_obstruction_vertices,
        ));
    }
    let n = f.n();
    for size in 3..=n {
        for s in 0u64..1 << n {
            if s.count_ones() as usize != size {
                continue;
            }
            if cyclic_pairs(f, s) {
                return Ok(Some(Obstruction { subset: bits(s).collect(), condition: 1 }));
            }
            if all_but_one(f, s) {
                return Ok(Some(Obstruction { subset: bits(s).collect(), condition: 2 }));
            }
        }
    }
    Ok(None)
}

fn cyclic_pairs(f: &Hypergraph, s: u64) -> bool {
    let mut pairs: Vec<u64> = Vec::new();
    for &e in &f.edges {
        let t = e & s;
        match t.count_ones() {
            0 | 1 => {}
            2 => pairs.push(t),
            _ => return false,
        }
    }
    pairs.sort_unstable();
    pairs.dedup();
    let k = s.count_ones() as usize;
    if pairs.len() != k {
        return false;
    }
    // k distinct pairs on k vertices, all of degree 2, connected: a
    // Hamiltonian cycle of S
    for v in bits(s) {
        if pairs.iter().filter(|&&p| p >> v & 1 == 1).count() != 2 {
            return false;
        }
    }
    let mut comp = s & s.wrapping_neg();
    loop {
        let grown = pairs
            .iter()
            .filter(|&&p| p & comp != 0)
            .fold(comp, |acc, &p| acc | p);
        if grown == comp {
            break;
        }
        comp = grown;
    }
    comp == s
}

fn all_but_one(f: &Hypergraph, s: u64) -> bool {
    if f.edges.iter().any(|&e| e & s == s) {
        return false;
    }
    bits(s).all(|x| {
        let want = s & !(1 << x);
        f.edges.iter().any(|&e| e & s == want)
    })
}

/// Decision procedure for graph α-acyclicity.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AcyclicityMethod {
    /// Check every acyclic orientation's reachability hypergraph.
    Orientations,
    /// Search for an induced cycle of length at least six.
    InducedCycles,
    /// Run both and fail on disagreement.
    Both,
}

pub fn is_alpha_acyclic_graph(h: &Pattern, method: AcyclicityMethod, limits: &Limits) -> Result<bool> {
    match method {
        AcyclicityMethod::InducedCycles => Ok(find_induced_cycle(h, 6).is_none()),
        AcyclicityMethod::Orientations => by_orientations(h, limits),
        AcyclicityMethod::Both => {
            let a = by_orientations(h, limits)?;
            let b = find_induced_cycle(h, 6).is_none();
            if a != b {
                return Err(Error::ContractViolation(format!(
                    "orientation decider says {a}, induced-cycle decider says {b} for {h}"
                )));
            }
            Ok(a)
        }
    }
}

fn by_orientations(h: &Pattern, limits: &Limits) -> Result<bool> {
    let orientations = acyclic_orientation_masks(h, limits)?;
    orientations
        .par_iter()
        .map(|out| Ok(gyo_reduces(&reachability_from_masks(out).edges)))
        .try_reduce(|| true, |a, b| Ok(a && b))
}

/// Finds an induced cycle with at least `min_len` vertices, returned in
/// cyclic order starting from its smallest vertex.
pub fn find_induced_cycle(h: &Pattern, min_len: usize) -> Option<Vec<usize>> {
    let n = h.n();
    let mut path = Vec::with_capacity(n);
    for s in 0..n {
        path.clear();
        path.push(s);
        let allowed = !((1u64 << s) | ((1u64 << s) - 1));
        if let Some(c) = extend_induced(h, &mut path, 1 << s, allowed, min_len) {
            return Some(c);
        }
    }
    None
}

fn extend_induced(
    h: &Pattern,
    path: &mut Vec<usize>,
    on_path: u64,
    allowed: u64,
    min_len: usize,
) -> Option<Vec<usize>> {
    let last = *path.last().unwrap();
    let first = path[0];
    // vertices adjacent to some path vertex other than the endpoint
    let mut interior_nbrs = 0u64;
    for &p in &path[..path.len() - 1] {
        interior_nbrs |= h.neighbor_mask(p);
    }
    for w in bits(h.neighbor_mask(last) & allowed & !on_path) {
        let touches_first = path.len() > 1 && h.has_edge(w, first);
        let touches_middle = path.len() > 2
            && path[1..path.len() - 1].iter().any(|&p| h.has_edge(w, p));
        if touches_middle {
            continue;
        }
        if touches_first {
            if path.len() + 1 >= min_len {
                let mut cycle = path.clone();
                cycle.push(w);
                return Some(cycle);
            }
            continue;
        }
        if interior_nbrs >> w & 1 == 1 {
            continue;
        }
        path.push(w);
        let found = extend_induced(h, path, on_path | 1 << w, allowed, min_len);
        path.pop();
        if found.is_some() {
            return found;
        }
    }
    None
}

/// Evidence that a pattern is not easy for one of the three problems.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// An induced cycle of length at least six, in cyclic order.
    InducedCycle { cycle: Vec<usize> },
    /// A partition whose simple quotient has an induced long cycle; the
    /// cycle is listed as a sequence of blocks.
    QuotientCycle {
        blocks: Vec<Vec<usize>>,
        cycle: Vec<Vec<usize>>,
    },
    /// A 6-vertex set inducing a spanning subgraph of `C_6`.
    InducedC6Subgraph { vertices: Vec<usize> },
}

impl Witness {
    fn relabel(self, labels: &[u64]) -> WitnessLabelled {
        let map = |v: Vec<usize>| v.into_iter().map(|x| labels[x]).collect::<Vec<u64>>();
        match self {
            Witness::InducedCycle { cycle } => WitnessLabelled::InducedCycle { cycle: map(cycle) },
            Witness::QuotientCycle { blocks, cycle } => WitnessLabelled::QuotientCycle {
                blocks: blocks.into_iter().map(map).collect(),
                cycle: cycle.into_iter().map(map).collect(),
            },
            Witness::InducedC6Subgraph { vertices } => {
                WitnessLabelled::InducedC6Subgraph { vertices: map(vertices) }
            }
        }
    }
}

/// [`Witness`] with vertices translated to caller-supplied labels.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum WitnessLabelled {
    InducedCycle { cycle: Vec<u64> },
    QuotientCycle { blocks: Vec<Vec<u64>>, cycle: Vec<Vec<u64>> },
    InducedC6Subgraph { vertices: Vec<u64> },
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Witnesses {
    pub hom: Option<Witness>,
    pub inj: Option<Witness>,
    pub ind: Option<Witness>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub hom_easy: bool,
    pub inj_easy: bool,
    pub ind_easy: bool,
    pub witnesses: Witnesses,
}

impl Classification {
    /// JSON object with witness vertices mapped through `labels`.
    pub fn to_json(&self, labels: &[u64]) -> serde_json::Value {
        let w = |x: &Option<Witness>| {
            x.clone()
                .map(|w| serde_json::to_value(w.relabel(labels)).expect("serializable"))
                .unwrap_or(serde_json::Value::Null)
        };
        serde_json::json!({
            "hom_easy": self.hom_easy,
            "inj_easy": self.inj_easy,
            "ind_easy": self.ind_easy,
            "witnesses": {
                "hom": w(&self.witnesses.hom),
                "inj": w(&self.witnesses.inj),
                "ind": w(&self.witnesses.ind),
            },
        })
    }
}

/// Canonical forms of every graph on six vertices whose edges form a
/// subset of a 6-cycle.
pub fn c6_spanning_subgraphs() -> &'static BTreeSet<Pattern> {
    static SET: OnceLock<BTreeSet<Pattern>> = OnceLock::new();
    SET.get_or_init(|| {
        let ring: Vec<(usize, usize)> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
        (0u64..64)
            .map(|s| Pattern::from_edges(6, bits(s).map(|i| ring[i])).unwrap().canonical())
            .collect()
    })
}

/// Classifies `h` for the hom, inj and ind counting problems.
pub fn classify(h: &Pattern, limits: &Limits) -> Result<Classification> {
    if h.n() > limits.max_pattern {
        return Err(Error::guard("pattern vertex count", h.n(), limits.max_pattern));
    }
    let hom = find_induced_cycle(h, 6).map(|cycle| Witness::InducedCycle { cycle });
    let inj = quotient_witness(h, limits)?;
    let ind = induced_c6_witness(h);
    Ok(Classification {
        hom_easy: hom.is_none(),
        inj_easy: inj.is_none(),
        ind_easy: ind.is_none(),
        witnesses: Witnesses { hom, inj, ind },
    })
}

fn quotient_witness(h: &Pattern, limits: &Limits) -> Result<Option<Witness>> {
    if h.n() < 6 {
        return Ok(None);
    }
    for p in enumerate_partitions(h, limits)? {
        if p.num_blocks() < 6 {
            continue;
        }
        let q = quotient(h, &p)?;
        if q.has_loop {
            continue;
        }
        if let Some(cycle) = find_induced_cycle(&q.graph, 6) {
            let blocks = p.blocks();
            let cycle = cycle.iter().map(|&b| blocks[b].clone()).collect();
            return Ok(Some(Witness::QuotientCycle { blocks, cycle }));
        }
    }
    Ok(None)
}

fn induced_c6_witness(h: &Pattern) -> Option<Witness> {
    let n = h.n();
    if n < 6 {
        return None;
    }
    let forbidden = c6_spanning_subgraphs();
    let full = h.vertex_mask();
    let mut s: u64 = (1 << 6) - 1;
    while s <= full {
        let sub = h.induced(s);
        // spanning subgraphs of C6 have at most 6 edges and max degree 2
        if sub.m() <= 6
            && (0..6).all(|v| sub.degree(v) <= 2)
            && forbidden.contains(&sub.canonical())
        {
            return Some(Witness::InducedC6Subgraph { vertices: bits(s).collect() });
        }
        // next mask with the same popcount
        let c = s & s.wrapping_neg();
        let r = s + c;
        s = (((r ^ s) >> 2) / c) | r;
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lim() -> Limits {
        Limits::default()
    }

    fn hg(n: usize, edges: &[&[usize]]) -> Hypergraph {
        Hypergraph::new(n, &edges.iter().map(|e| e.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    fn alternating_c6() -> OrientedGraph {
        // even vertices are sources
        let arcs = (0..6).step_by(2).flat_map(|i| [(i, (i + 1) % 6), (i, (i + 5) % 6)]);
        OrientedGraph::from_arcs(6, arcs).unwrap()
    }

    #[test]
    fn orientation_counts() {
        let count = |p: &Pattern| acyclic_orientations(p, &lim()).unwrap().len();
        assert_eq!(count(&Pattern::complete(3)), 6);
        assert_eq!(count(&Pattern::complete(2)), 2);
        assert_eq!(count(&Pattern::cycle(4)), 14);
        assert_eq!(count(&Pattern::complete(4)), 24);
        assert!(acyclic_orientations(&Pattern::complete(8), &lim()).is_err());
    }

    #[test]
    fn orientations_are_acyclic_and_distinct() {
        let os = acyclic_orientations(&Pattern::cycle_with_pendant(4), &lim()).unwrap();
        assert!(os.iter().all(OrientedGraph::is_acyclic));
        let mut arcs: Vec<Vec<(usize, usize)>> = os.iter().map(|o| o.arcs().collect()).collect();
        arcs.sort();
        arcs.dedup();
        assert_eq!(arcs.len(), os.len());
    }

    #[test]
    fn reachability_examples() {
        let arc = OrientedGraph::from_arcs(2, [(0, 1)]).unwrap();
        assert_eq!(reachability_hypergraph(&arc).unwrap().edges(), vec![vec![0, 1]]);

        let f = reachability_hypergraph(&alternating_c6()).unwrap();
        assert_eq!(f.edges(), vec![vec![0, 1, 5], vec![1, 2, 3], vec![3, 4, 5]]);

        let tt = OrientedGraph::from_arcs(3, [(0, 1), (0, 2), (1, 2)]).unwrap();
        assert_eq!(reachability_hypergraph(&tt).unwrap().edges(), vec![vec![0, 1, 2]]);

        let cyc = OrientedGraph::from_arcs(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        assert!(matches!(reachability_hypergraph(&cyc), Err(Error::DirectedCycle)));
    }

    #[test]
    fn gyo_examples() {
        let (ok, tree) = is_alpha_acyclic_hypergraph(&hg(3, &[&[0, 1], &[1, 2], &[0, 1, 2]])).unwrap();
        assert!(ok);
        assert_eq!(tree.unwrap().tree_edges().len(), 2);

        let f = reachability_hypergraph(&alternating_c6()).unwrap();
        assert_eq!(is_alpha_acyclic_hypergraph(&f).unwrap(), (false, None));

        let tri = hg(3, &[&[0, 1], &[1, 2], &[2, 0]]);
        assert!(!is_alpha_acyclic_hypergraph(&tri).unwrap().0);
    }

    #[test]
    fn gyo_accepts_duplicates_and_disconnected() {
        let f = hg(5, &[&[0, 1], &[0, 1], &[3, 4], &[1, 2]]);
        let (ok, tree) = is_alpha_acyclic_hypergraph(&f).unwrap();
        assert!(ok);
        assert!(tree.unwrap().verify(&f));
        assert_eq!(obstruction_oracle(&f, &lim()).unwrap(), None);
    }

    #[test]
    fn join_tree_verification_rejects_bad_trees() {
        let f = hg(4, &[&[0, 1], &[1, 2], &[2, 3]]);
        let good = JoinTree { nodes: 3, edges: vec![(0, 1), (1, 2)] };
        let bad = JoinTree { nodes: 3, edges: vec![(0, 2), (2, 1)] };
        assert!(good.verify(&f));
        assert!(!bad.verify(&f));
    }

    #[test]
    fn obstruction_examples() {
        let f = reachability_hypergraph(&alternating_c6()).unwrap();
        assert_eq!(
            obstruction_oracle(&f, &lim()).unwrap(),
            Some(Obstruction { subset: vec![1, 3, 5], condition: 1 })
        );
        assert_eq!(obstruction_oracle(&hg(3, &[&[0, 1, 2]]), &lim()).unwrap(), None);
        assert_eq!(
            obstruction_oracle(&hg(3, &[&[0, 1], &[1, 2], &[2, 0]]), &lim()).unwrap(),
            Some(Obstruction { subset: vec![0, 1, 2], condition: 1 })
        );
        let tetra_faces = hg(4, &[&[1, 2, 3], &[0, 2, 3], &[0, 1, 3], &[0, 1, 2]]);
        assert_eq!(
            obstruction_oracle(&tetra_faces, &lim()).unwrap().map(|o| o.condition),
            Some(2)
        );
        assert!(obstruction_oracle(&Hypergraph::new(13, &[]).unwrap(), &lim()).is_err());
    }

    #[test]
    fn graph_acyclicity_examples() {
        for method in [AcyclicityMethod::Orientations, AcyclicityMethod::InducedCycles, AcyclicityMethod::Both] {
            assert!(is_alpha_acyclic_graph(&Pattern::cycle(5), method, &lim()).unwrap());
            assert!(!is_alpha_acyclic_graph(&Pattern::cycle(6), method, &lim()).unwrap());
            assert!(is_alpha_acyclic_graph(&Pattern::complete(5), method, &lim()).unwrap());
        }
    }

    #[test]
    fn induced_cycle_search() {
        assert_eq!(find_induced_cycle(&Pattern::cycle(7), 6).map(|c| c.len()), Some(7));
        let mut chorded = Pattern::cycle(8);
        chorded.add_edge(0, 4);
        assert_eq!(find_induced_cycle(&chorded, 6), None);
        assert!(find_induced_cycle(&chorded, 5).is_some());
        let c = find_induced_cycle(&Pattern::cycle(6), 6).unwrap();
        for i in 0..6 {
            assert!(Pattern::cycle(6).has_edge(c[i], c[(i + 1) % 6]));
        }
    }

    #[test]
    fn classify_examples() {
        let c = |p: &Pattern| {
            let k = classify(p, &lim()).unwrap();
            (k.hom_easy, k.inj_easy, k.ind_easy)
        };
        assert_eq!(c(&Pattern::cycle(5)), (true, true, true));
        assert_eq!(c(&Pattern::cycle(6)), (false, false, false));
        assert_eq!(c(&Pattern::path(5)), (true, true, true));
        assert_eq!(c(&Pattern::complete(4)), (true, true, true));
        // P6 is a spanning subgraph of C6 and C6 is a quotient of P7
        assert_eq!(c(&Pattern::path(6)), (true, true, false));
        assert_eq!(c(&Pattern::path(7)).1, false);
    }

    #[test]
    fn classify_witnesses_are_genuine() {
        let k = classify(&Pattern::cycle(6), &lim()).unwrap();
        assert!(matches!(k.witnesses.hom, Some(Witness::InducedCycle { ref cycle }) if cycle.len() == 6));
        assert!(matches!(k.witnesses.ind, Some(Witness::InducedC6Subgraph { ref vertices }) if vertices.len() == 6));
        let json = k.to_json(&[10, 11, 12, 13, 14, 15]);
        assert_eq!(json["hom_easy"], false);
        assert_eq!(json["witnesses"]["hom"]["kind"], "induced_cycle");
        assert_eq!(json["witnesses"]["hom"]["cycle"][0], 10);
    }

    #[test]
    fn c6_spanning_classes() {
        // edge subsets of C6 up to isomorphism
        assert_eq!(c6_spanning_subgraphs().len(), 12);
    }
}
