//! Fast homomorphism counting.
//!
//! For α-acyclic patterns the host is oriented along a degeneracy order
//! and, for every acyclic orientation of the pattern, the directed count is
//! obtained by a join-tree dynamic program over the reachability
//! hypergraph: each hyperedge `R(u)` becomes a relation of partial maps
//! anchored at the image of `u`, and relations are aggregated bottom-up on
//! their shared variables. Forest patterns use a direct tree DP that is
//! valid on any host.

use std::sync::OnceLock;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use rustc_hash::FxHashMap;
use serde::Serialize;
use smallvec::SmallVec;

use crate::acyclicity::{acyclic_orientation_masks, find_induced_cycle, is_alpha_acyclic_hypergraph, reach_closure, reachability_from_masks};
use crate::bigcount::{with_promotion, BigCount, Tallied, Tally};
use crate::error::{Error, Result};
use crate::graph::{degeneracy_order_linear, orient_by_degeneracy, DegeneracyOrder, Graph, OrientedGraph};
use crate::oracle;
use crate::pattern::{bits, Pattern};
use crate::Limits;

/// A host graph together with its (lazily computed) degeneracy
/// orientation, shared by every pattern evaluated on it.
///
/// The fast paths work on a breadth-first relabelled copy of the host for
/// memory locality; counts do not depend on vertex names.
pub struct Host<'g> {
    graph: &'g Graph,
    prepared: OnceLock<Prepared>,
}

struct Prepared {
    /// Relabelled copy, or `None` to use the original graph.
    local: Option<Graph>,
    kappa: usize,
    gdir: OrientedGraph,
}

impl<'g> Host<'g> {
    pub fn new(graph: &'g Graph) -> Host<'g> {
        Host {
            graph,
            prepared: OnceLock::new(),
        }
    }

    /// Uses the given vertex order of the original graph instead of the
    /// greedy peel. Any permutation gives correct counts; only the running
    /// time depends on the resulting out-degrees.
    pub fn with_order(graph: &'g Graph, order: DegeneracyOrder) -> Result<Host<'g>> {
        let gdir = orient_by_degeneracy(graph, &order)?;
        let cell = OnceLock::new();
        let _ = cell.set(Prepared {
            local: None,
            kappa: order.kappa,
            gdir,
        });
        Ok(Host {
            graph,
            prepared: cell,
        })
    }

    pub fn graph(&self) -> &'g Graph {
        self.graph
    }

    fn prepared(&self) -> &Prepared {
        self.prepared.get_or_init(|| {
            let local = self.graph.relabel(&self.graph.bfs_relabelling());
            let d = degeneracy_order_linear(&local);
            let gdir = orient_by_degeneracy(&local, &d).expect("order built from this graph");
            Prepared {
                local: Some(local),
                kappa: d.kappa,
                gdir,
            }
        })
    }

    /// The graph the fast paths run on (isomorphic to [`Self::graph`]).
    fn working_graph(&self) -> &Graph {
        self.prepared().local.as_ref().unwrap_or(self.graph)
    }

    /// Degeneracy of the ordering in use.
    pub fn kappa(&self) -> usize {
        self.prepared().kappa
    }

    /// Orientation of [`Self::working_graph`] along the ordering in use.
    pub fn orientation(&self) -> &OrientedGraph {
        &self.prepared().gdir
    }
}

/// Partial homomorphisms of the sub-DAG induced on one reachability set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialHomRelation {
    scope: Vec<usize>,
    rows: Vec<u32>,
}

impl PartialHomRelation {
    /// Pattern vertices of the relation, in topological order.
    pub fn scope(&self) -> &[usize] {
        &self.scope
    }

    pub fn len(&self) -> usize {
        if self.scope.is_empty() {
            0
        } else {
            self.rows.len() / self.scope.len()
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Host-vertex tuples aligned with [`Self::scope`]; every row has
    /// multiplicity one.
    pub fn rows(&self) -> impl Iterator<Item = &[u32]> {
        self.rows.chunks_exact(self.scope.len().max(1))
    }
}

/// Oriented pattern as out-neighbour masks plus a fixed topological order.
struct Dag {
    out: Vec<u64>,
    in_: Vec<u64>,
    topo_pos: Vec<usize>,
}

impl Dag {
    fn new(out: Vec<u64>) -> Result<Dag> {
        let n = out.len();
        let mut in_ = vec![0u64; n];
        for (u, &m) in out.iter().enumerate() {
            for v in bits(m) {
                in_[v] |= 1 << u;
            }
        }
        // Kahn with smallest-id tie-breaking
        let mut remaining = crate::pattern::full_mask(n);
        let mut topo_pos = vec![0; n];
        for k in 0..n {
            let ready = bits(remaining).find(|&v| in_[v] & remaining == 0);
            let Some(v) = ready else {
                return Err(Error::DirectedCycle);
            };
            topo_pos[v] = k;
            remaining &= !(1 << v);
        }
        Ok(Dag { out, in_, topo_pos })
    }

    fn from_oriented(d: &OrientedGraph) -> Result<Dag> {
        if d.n() > 64 {
            return Err(Error::InvalidInput("oriented pattern exceeds 64 vertices".into()));
        }
        let out = (0..d.n())
            .map(|u| d.out_neighbors(u).iter().fold(0u64, |m, &v| m | 1 << v))
            .collect();
        Dag::new(out)
    }

    fn ordered(&self, mask: u64) -> Vec<usize> {
        let mut v: Vec<usize> = bits(mask).collect();
        v.sort_by_key(|&x| self.topo_pos[x]);
        v
    }
}

/// Enumerates all arc-preserving maps of the sub-DAG on `R(source)` into
/// `gdir`, anchoring `source` at each host vertex and extending along
/// out-arcs.
pub fn materialize_source_relation(
    hdir: &OrientedGraph,
    source: usize,
    gdir: &OrientedGraph,
) -> Result<PartialHomRelation> {
    let dag = Dag::from_oriented(hdir)?;
    if source >= dag.out.len() || dag.in_[source] != 0 {
        return Err(Error::InvalidInput(format!("vertex {source} is not a source")));
    }
    Ok(materialize(&dag, source, gdir))
}

type Key = SmallVec<[u32; 4]>;

/// Enumeration recipe for the rows of one relation: scope in topological
/// order, the earlier position whose out-arcs supply candidates, and the
/// other earlier positions with an arc into each position.
struct Enumerator {
    scope: Vec<usize>,
    pred: Vec<usize>,
    checks: Vec<Vec<usize>>,
}

impl Enumerator {
    fn new(dag: &Dag, source: usize) -> Enumerator {
        let scope = dag.ordered(reach_closure(&dag.out, source));
        let k = scope.len();
        let mut pred = vec![0usize; k];
        let mut checks: Vec<Vec<usize>> = vec![Vec::new(); k];
        for i in 1..k {
            let v = scope[i];
            let ins: Vec<usize> = (0..i).filter(|&j| dag.out[scope[j]] >> v & 1 == 1).collect();
            pred[i] = ins[0];
            checks[i] = ins[1..].to_vec();
        }
        Enumerator { scope, pred, checks }
    }

    /// Calls `visit` on every row; stops early when `visit` returns `false`.
    fn for_each_row(&self, gdir: &OrientedGraph, mut visit: impl FnMut(&[u32]) -> bool) -> bool {
        let mut image = vec![0u32; self.scope.len()];
        for x in 0..gdir.n() as u32 {
            image[0] = x;
            if !self.extend(gdir, 1, &mut image, &mut visit) {
                return false;
            }
        }
        true
    }

    fn extend(
        &self,
        gdir: &OrientedGraph,
        i: usize,
        image: &mut [u32],
        visit: &mut impl FnMut(&[u32]) -> bool,
    ) -> bool {
        if i == image.len() {
            return visit(image);
        }
        let from = image[self.pred[i]] as usize;
        for &y in gdir.out_neighbors(from) {
            if self.checks[i]
                .iter()
                .all(|&j| gdir.has_arc(image[j] as usize, y as usize))
            {
                image[i] = y;
                if !self.extend(gdir, i + 1, image, visit) {
                    return false;
                }
            }
        }
        true
    }
}

fn materialize(dag: &Dag, source: usize, gdir: &OrientedGraph) -> PartialHomRelation {
    let e = Enumerator::new(dag, source);
    let mut rows = Vec::new();
    e.for_each_row(gdir, |row| {
        rows.extend_from_slice(row);
        true
    });
    PartialHomRelation { scope: e.scope, rows }
}

/// Child-to-parent message: multiplicities summed per separator value.
/// Separators of one vertex are indexed densely by host vertex; pairs are
/// collected unsorted and then bucketed by their first vertex, which keeps
/// lookups near each other under the breadth-first labelling.
enum Message<T> {
    Scalar(T),
    Dense(Vec<T>),
    PairRows(Vec<(u32, u32, T)>),
    Pair(PairTable<T>),
    Wide(FxHashMap<Key, T>),
}

struct PairTable<T> {
    offsets: Vec<u32>,
    entries: Vec<(u32, T)>,
}

impl<T: Tally> PairTable<T> {
    fn build(n: usize, rows: Vec<(u32, u32, T)>) -> Option<PairTable<T>> {
        let mut offsets = vec![0u32; n + 1];
        for &(a, _, _) in &rows {
            offsets[a as usize + 1] += 1;
        }
        for i in 0..n {
            offsets[i + 1] += offsets[i];
        }
        let mut fill = offsets.clone();
        let mut bucketed: Vec<Option<(u32, T)>> = (0..rows.len()).map(|_| None).collect();
        for (a, b, t) in rows {
            let slot = &mut fill[a as usize];
            bucketed[*slot as usize] = Some((b, t));
            *slot += 1;
        }
        // sort each bucket by second vertex and merge duplicates
        let mut entries: Vec<(u32, T)> = Vec::with_capacity(bucketed.len());
        let mut merged = vec![0u32; n + 1];
        for a in 0..n {
            let bucket = &mut bucketed[offsets[a] as usize..offsets[a + 1] as usize];
            bucket.sort_unstable_by_key(|e| e.as_ref().map(|e| e.0));
            let start = entries.len();
            for (b, t) in bucket.iter_mut().map(|e| e.take().expect("filled once")) {
                match entries[start..].last_mut() {
                    Some(last) if last.0 == b => last.1 = last.1.add(&t)?,
                    _ => entries.push((b, t)),
                }
            }
            merged[a + 1] = entries.len() as u32;
        }
        Some(PairTable { offsets: merged, entries })
    }

    fn get(&self, a: u32, b: u32) -> Option<&T> {
        let bucket = &self.entries[self.offsets[a as usize] as usize..self.offsets[a as usize + 1] as usize];
        if bucket.len() <= 8 {
            bucket.iter().find(|e| e.0 == b).map(|e| &e.1)
        } else {
            bucket.binary_search_by_key(&b, |e| e.0).ok().map(|i| &bucket[i].1)
        }
    }
}

impl<T: Tally> Message<T> {
    fn new(width: usize, n: usize) -> Message<T> {
        match width {
            0 => Message::Scalar(T::zero()),
            1 => Message::Dense(vec![T::zero(); n]),
            2 => Message::PairRows(Vec::new()),
            _ => Message::Wide(FxHashMap::default()),
        }
    }

    fn add(&mut self, row: &[u32], positions: &[usize], m: &T) -> Option<()> {
        let slot = match self {
            Message::Scalar(t) => t,
            Message::Dense(v) => &mut v[row[positions[0]] as usize],
            Message::PairRows(rows) => {
                rows.push((row[positions[0]], row[positions[1]], m.clone()));
                return Some(());
            }
            Message::Pair(_) => unreachable!("pair tables are sealed"),
            Message::Wide(map) => map
                .entry(positions.iter().map(|&p| row[p]).collect())
                .or_insert_with(T::zero),
        };
        *slot = slot.add(m)?;
        Some(())
    }

    fn get(&self, row: &[u32], positions: &[usize]) -> Option<&T> {
        match self {
            Message::Scalar(t) => Some(t),
            Message::Dense(v) => Some(&v[row[positions[0]] as usize]),
            Message::Pair(table) => table.get(row[positions[0]], row[positions[1]]),
            Message::PairRows(_) => unreachable!("sealed before use"),
            Message::Wide(map) => {
                let key: Key = positions.iter().map(|&p| row[p]).collect();
                map.get(&key)
            }
        }
    }

    fn seal(self, n: usize) -> Option<Message<T>> {
        match self {
            Message::PairRows(rows) => PairTable::build(n, rows).map(Message::Pair),
            other => Some(other),
        }
    }
}

/// Join tree over the reachability sets, ready for the counting pass.
struct Plan {
    enumerators: Vec<Enumerator>,
    /// Nodes in reverse preorder (children before parents).
    bottom_up: Vec<usize>,
    parent: Vec<Option<usize>>,
    children: Vec<Vec<usize>>,
    /// For each non-root node: positions of the separator in its own scope
    /// and in its parent's scope.
    sep_child: Vec<Vec<usize>>,
    sep_parent: Vec<Vec<usize>>,
}

fn build_plan(dag: &Dag) -> Result<Option<Plan>> {
    let f = reachability_from_masks(&dag.out);
    if f.edge_count() == 0 {
        return Ok(None);
    }
    let (ok, tree) = is_alpha_acyclic_hypergraph(&f)?;
    if !ok {
        return Err(Error::NotAlphaAcyclic);
    }
    let tree = tree.expect("accepted hypergraphs come with a join tree");
    let masks = f.edge_masks();
    let root = (0..masks.len())
        .max_by_key(|&i| (masks[i].count_ones(), std::cmp::Reverse(i)))
        .unwrap();
    let (parent, preorder) = tree.rooted(root);
    let mut indeg = 0u64;
    for &m in &dag.out {
        indeg |= m;
    }
    let sources: Vec<usize> = (0..dag.out.len()).filter(|&u| indeg >> u & 1 == 0).collect();
    let enumerators: Vec<Enumerator> = sources.iter().map(|&s| Enumerator::new(dag, s)).collect();
    let k = masks.len();
    let mut children = vec![Vec::new(); k];
    let mut sep_child = vec![Vec::new(); k];
    let mut sep_parent = vec![Vec::new(); k];
    for c in 0..k {
        if let Some(p) = parent[c] {
            children[p].push(c);
            for v in dag.ordered(masks[c] & masks[p]) {
                sep_child[c].push(enumerators[c].scope.iter().position(|&x| x == v).unwrap());
                sep_parent[c].push(enumerators[p].scope.iter().position(|&x| x == v).unwrap());
            }
        }
    }
    Ok(Some(Plan {
        enumerators,
        bottom_up: preorder.into_iter().rev().collect(),
        parent,
        children,
        sep_child,
        sep_parent,
    }))
}

/// Bottom-up aggregation. Rows are streamed: each row's multiplicity is
/// the product of the matching child messages, and is either folded into
/// the node's own message or, at the root, into the total.
fn run_plan<T: Tally>(plan: &Plan, gdir: &OrientedGraph) -> Option<T> {
    let k = plan.enumerators.len();
    let mut messages: Vec<Option<Message<T>>> = (0..k).map(|_| None).collect();
    for &node in &plan.bottom_up {
        let inbox: Vec<(Message<T>, &[usize])> = plan.children[node]
            .iter()
            .map(|&c| (messages[c].take().expect("children first"), &plan.sep_parent[c][..])
            )
            .collect();
        let weight = |row: &[u32]| -> Option<Option<T>> {
            let mut m = T::one();
            for (msg, positions) in &inbox {
                match msg.get(row, positions) {
                    Some(v) if !v.is_zero() => m = m.mul(v)?,
                    _ => return Some(None),
                }
            }
            Some(Some(m))
        };
        let mut overflow = false;
        match plan.parent[node] {
            None => {
                let mut total = T::zero();
                plan.enumerators[node].for_each_row(gdir, |row| {
                    let step = weight(row).and_then(|w| match w {
                        Some(w) => total.add(&w),
                        None => Some(total.clone()),
                    });
                    match step {
                        Some(t) => {
                            total = t;
                            true
                        }
                        None => {
                            overflow = true;
                            false
                        }
                    }
                });
                return (!overflow).then_some(total);
            }
            Some(_) => {
                let positions = &plan.sep_child[node];
                let mut msg = Message::new(positions.len(), gdir.n());
                plan.enumerators[node].for_each_row(gdir, |row| {
                    let ok = weight(row).and_then(|w| match w {
                        Some(w) => msg.add(row, positions, &w),
                        None => Some(()),
                    });
                    if ok.is_none() {
                        overflow = true;
                    }
                    ok.is_some()
                });
                if overflow {
                    return None;
                }
                messages[node] = Some(msg.seal(gdir.n())?);
            }
        }
    }
    unreachable!("the root is processed last")
}

fn count_dag(dag: &Dag, gdir: &OrientedGraph) -> Result<BigCount> {
    let Some(plan) = build_plan(dag)? else {
        return Ok(1u32.into());
    };
    struct Job<'a>(&'a Plan, &'a OrientedGraph);
    impl Tallied for Job<'_> {
        fn run<T: Tally>(&self) -> Option<T> {
            run_plan(self.0, self.1)
        }
    }
    Ok(with_promotion(&Job(&plan, gdir)))
}

/// Number of arc-preserving maps from `hdir` to `gdir`. The reachability
/// hypergraph of `hdir` must be α-acyclic.
pub fn directed_hom_count(hdir: &OrientedGraph, gdir: &OrientedGraph) -> Result<BigCount> {
    let dag = Dag::from_oriented(hdir)?;
    count_dag(&dag, gdir)
}

/// `hom(h, g)` for α-acyclic `h`: the sum of directed counts over every
/// acyclic orientation of `h` against the host orientation.
pub fn hom_count_alpha_acyclic(h: &Pattern, g: &Graph, limits: &Limits) -> Result<BigCount> {
    Ok(hom_alpha_acyclic_on(h, &Host::new(g), limits)?.0)
}

/// Returns the count and the number of orientations processed.
pub fn hom_alpha_acyclic_on(h: &Pattern, host: &Host<'_>, limits: &Limits) -> Result<(BigCount, usize)> {
    if find_induced_cycle(h, 6).is_some() {
        return Err(Error::NotAlphaAcyclic);
    }
    let orientations = acyclic_orientation_masks(h, limits)?;
    let gdir = host.orientation();
    let total = orientations
        .par_iter()
        .map(|out| count_dag(&Dag::new(out.clone())?, gdir))
        .try_reduce(BigCount::default, |a, b| Ok(a + b))?;
    Ok((total, orientations.len()))
}

/// Tree dynamic program for forest patterns; valid on every host.
pub fn forest_hom_count(h: &Pattern, g: &Graph) -> Result<BigCount> {
    if !h.is_forest() {
        return Err(Error::NotAForest);
    }
    struct Job<'a>(&'a Pattern, &'a Graph);
    impl Tallied for Job<'_> {
        fn run<T: Tally>(&self) -> Option<T> {
            forest_dp(self.0, self.1)
        }
    }
    Ok(with_promotion(&Job(h, g)))
}

fn forest_dp<T: Tally>(h: &Pattern, g: &Graph) -> Option<T> {
    let n = g.n();
    let mut total = T::one();
    for comp in h.components() {
        let root = comp.trailing_zeros() as usize;
        // preorder with parents
        let mut order = vec![root];
        let mut parent = vec![usize::MAX; h.n()];
        let mut i = 0;
        while i < order.len() {
            let v = order[i];
            for w in h.neighbors(v) {
                if w != parent[v] && w != root && parent[w] == usize::MAX {
                    parent[w] = v;
                    order.push(w);
                }
            }
            i += 1;
        }
        // table[v][x]: homomorphisms of the subtree below v with v -> x
        let mut table: Vec<Option<Vec<T>>> = (0..h.n()).map(|_| None).collect();
        for &v in order.iter().rev() {
            let mut here: Option<Vec<T>> = None;
            for c in h.neighbors(v).filter(|&c| parent[c] == v) {
                let below = table[c].take().expect("children first");
                let mut acc = here.unwrap_or_else(|| vec![T::one(); n]);
                for (x, slot) in acc.iter_mut().enumerate() {
                    if slot.is_zero() {
                        continue;
                    }
                    let mut s = T::zero();
                    for &y in g.neighbors(x) {
                        s = s.add(&below[y as usize])?;
                    }
                    *slot = slot.mul(&s)?;
                }
                here = Some(acc);
            }
            table[v] = Some(here.unwrap_or_else(|| vec![T::one(); n]));
        }
        let mut comp_total = T::zero();
        for v in table[root].take().expect("root computed") {
            comp_total = comp_total.add(&v)?;
        }
        total = total.mul(&comp_total)?;
    }
    Some(total)
}

/// Dispatch policy for [`hom_count`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Policy {
    Auto,
    ForceOracle,
}

/// Which algorithm produced a count.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum DispatchPath {
    Forest,
    AlphaAcyclic,
    Oracle,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct HomMeta {
    pub path: DispatchPath,
    /// Degeneracy of the host ordering, when the host was oriented.
    pub kappa: Option<usize>,
    pub orientations: usize,
    #[serde(skip)]
    pub elapsed: Duration,
    pub warnings: Vec<String>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct HomResult {
    pub count: BigCount,
    pub meta: HomMeta,
}

pub const FALLBACK_WARNING: &str = "exponential fallback";

/// `hom(h, g)` with automatic dispatch: forest DP, join-tree engine, or
/// the brute-force oracle (flagged with a warning).
pub fn hom_count(h: &Pattern, g: &Graph, policy: Policy, limits: &Limits) -> Result<HomResult> {
    hom_count_on(h, &Host::new(g), policy, limits)
}

pub fn hom_count_on(h: &Pattern, host: &Host<'_>, policy: Policy, limits: &Limits) -> Result<HomResult> {
    let start = Instant::now();
    let meta = |path, kappa, orientations, warnings| HomMeta {
        path,
        kappa,
        orientations,
        elapsed: start.elapsed(),
        warnings,
    };
    let oracle_run = |warnings: Vec<String>| -> Result<HomResult> {
        let count = oracle::brute_hom(h, host.graph(), limits)?;
        Ok(HomResult {
            count,
            meta: meta(DispatchPath::Oracle, None, 0, warnings),
        })
    };
    if policy == Policy::ForceOracle {
        return oracle_run(Vec::new());
    }
    if h.is_forest() {
        let count = forest_hom_count(h, host.working_graph())?;
        return Ok(HomResult {
            count,
            meta: meta(DispatchPath::Forest, None, 0, Vec::new()),
        });
    }
    if let Some(cycle) = find_induced_cycle(h, 6) {
        log::warn!("pattern {h} has an induced {}-cycle; using brute force", cycle.len());
        return oracle_run(vec![format!(
            "{FALLBACK_WARNING}: pattern has an induced {}-cycle and is not alpha-acyclic",
            cycle.len()
        )]);
    }
    if h.m() > limits.max_orientation_edges {
        return oracle_run(vec![format!(
            "{FALLBACK_WARNING}: {} pattern edges exceed the orientation limit of {}",
            h.m(),
            limits.max_orientation_edges
        )]);
    }
    let (count, orientations) = hom_alpha_acyclic_on(h, host, limits)?;
    Ok(HomResult {
        count,
        meta: meta(DispatchPath::AlphaAcyclic, Some(host.kappa()), orientations, Vec::new()),
    })
}
