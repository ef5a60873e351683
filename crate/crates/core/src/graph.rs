//! Host graphs, degeneracy orderings and orientations.

use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::collections::HashMap;
use std::io::{BufRead, Write};

use crate::error::{Error, Result};

/// Simple undirected graph on dense vertex ids `0..n`.
///
/// Adjacency is stored in compressed sparse rows: sorted, symmetric, every
/// undirected edge stored twice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    offsets: Vec<usize>,
    targets: Vec<u32>,
    labels: Option<Vec<u64>>,
}

impl Graph {
    /// Graph with `n` isolated vertices.
    pub fn empty(n: usize) -> Graph {
        Graph {
            offsets: vec![0; n + 1],
            targets: Vec::new(),
            labels: None,
        }
    }

    /// Builds a graph from an edge iterator. Duplicate edges are collapsed,
    /// self-loops and out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        assert!(n <= u32::MAX as usize, "vertex count exceeds u32 ids");
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidInput(format!(
                    "edge ({u}, {v}) out of range for {n} vertices"
                )));
            }
            if u == v {
                return Err(Error::SelfLoop {
                    line: 0,
                    vertex: u as u64,
                });
            }
            adj[u].push(v as u32);
            adj[v].push(u as u32);
        }
        Ok(Graph::from_raw_adjacency(adj))
    }

    /// Sorts and dedups raw (symmetric, loop-free) adjacency lists.
    pub(crate) fn from_raw_adjacency(adj: Vec<Vec<u32>>) -> Graph {
        let (offsets, targets) = compress(adj);
        Graph {
            offsets,
            targets,
            labels: None,
        }
    }

    pub fn complete(n: usize) -> Graph {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Graph::from_edges(n, edges).expect("valid complete graph")
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycles need at least 3 vertices");
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("valid cycle")
    }

    pub fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("valid path")
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.offsets.len() - 1
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.targets.len() / 2
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[u32] {
        &self.targets[self.offsets[v]..self.offsets[v + 1]]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        let (a, b) = if self.degree(u) <= self.degree(v) {
            (u, v)
        } else {
            (v, u)
        };
        self.neighbors(a).binary_search(&(b as u32)).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n()).flat_map(move |u| {
            self.neighbors(u)
                .iter()
                .map(|&v| v as usize)
                .filter(move |&v| u < v)
                .map(move |v| (u, v))
        })
    }

    /// Copy of the graph with vertex `v` renamed `perm[v]`.
    pub fn relabel(&self, perm: &[u32]) -> Graph {
        let n = self.n();
        let mut offsets = vec![0usize; n + 1];
        for v in 0..n {
            offsets[perm[v] as usize + 1] = self.degree(v);
        }
        for i in 0..n {
            offsets[i + 1] += offsets[i];
        }
        let mut targets = vec![0u32; self.targets.len()];
        for v in 0..n {
            let p = perm[v] as usize;
            let row = &mut targets[offsets[p]..offsets[p + 1]];
            for (slot, &w) in row.iter_mut().zip(self.neighbors(v)) {
                *slot = perm[w as usize];
            }
            row.sort_unstable();
        }
        Graph {
            offsets,
            targets,
            labels: None,
        }
    }

    /// Breadth-first visiting order as a relabelling (`perm[v]` = position
    /// of `v`). Neighbours end up close together, which keeps traversals
    /// cache-friendly on large hosts.
    pub fn bfs_relabelling(&self) -> Vec<u32> {
        let n = self.n();
        let mut pos = vec![u32::MAX; n];
        let mut order: Vec<u32> = Vec::with_capacity(n);
        for s in 0..n {
            if pos[s] != u32::MAX {
                continue;
            }
            pos[s] = order.len() as u32;
            order.push(s as u32);
            let mut i = order.len() - 1;
            while i < order.len() {
                let v = order[i] as usize;
                for &w in self.neighbors(v) {
                    if pos[w as usize] == u32::MAX {
                        pos[w as usize] = order.len() as u32;
                        order.push(w);
                    }
                }
                i += 1;
            }
        }
        pos
    }

    /// Original label of `v` if the graph was read from a file.
    pub fn label(&self, v: usize) -> u64 {
        match &self.labels {
            Some(l) => l[v],
            None => v as u64,
        }
    }

    pub fn labels(&self) -> Option<&[u64]> {
        self.labels.as_deref()
    }

    pub fn is_forest(&self) -> bool {
        let mut seen = vec![false; self.n()];
        let mut components = 0;
        for s in 0..self.n() {
            if seen[s] {
                continue;
            }
            components += 1;
            seen[s] = true;
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for &w in self.neighbors(u) {
                    if !seen[w as usize] {
                        seen[w as usize] = true;
                        stack.push(w as usize);
                    }
                }
            }
        }
        self.m() + components == self.n()
    }

    /// Length of a shortest cycle, `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        let n = self.n();
        let mut best: Option<usize> = None;
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        for s in 0..n {
            let mut touched = vec![s];
            dist[s] = 0;
            let mut queue = std::collections::VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                if let Some(b) = best {
                    if 2 * dist[u] + 1 >= b {
                        break;
                    }
                }
                for &w in self.neighbors(u) {
                    let w = w as usize;
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        touched.push(w);
                        queue.push_back(w);
                    } else if parent[u] != w {
                        let len = dist[u] + dist[w] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
            for t in touched {
                dist[t] = usize::MAX;
                parent[t] = usize::MAX;
            }
        }
        best
    }
}

/// Sorts, dedups and flattens adjacency lists into compressed rows.
fn compress(mut lists: Vec<Vec<u32>>) -> (Vec<usize>, Vec<u32>) {
    let mut offsets = Vec::with_capacity(lists.len() + 1);
    offsets.push(0);
    let total: usize = lists.iter().map(Vec::len).sum();
    let mut targets = Vec::with_capacity(total);
    for list in lists.iter_mut() {
        list.sort_unstable();
        list.dedup();
        targets.extend_from_slice(list);
        offsets.push(targets.len());
    }
    (offsets, targets)
}

/// Input formats understood by [`load_graph`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFormat {
    /// One edge per line as two nonnegative integers; `v <id>` declares an
    /// isolated vertex; blank lines and `#` comments are ignored.
    EdgeList,
}

/// Reads a graph, relabelling vertices to `0..n` in order of first
/// appearance. Original ids are kept as labels.
pub fn load_graph<R: BufRead>(source: R, format: GraphFormat) -> Result<Graph> {
    match format {
        GraphFormat::EdgeList => load_edge_list(source),
    }
}

fn load_edge_list<R: BufRead>(source: R) -> Result<Graph> {
    let mut ids: HashMap<u64, u32> = HashMap::new();
    let mut labels: Vec<u64> = Vec::new();
    let mut adj: Vec<Vec<u32>> = Vec::new();
    let mut intern = |label: u64, adj: &mut Vec<Vec<u32>>| -> u32 {
        *ids.entry(label).or_insert_with(|| {
            labels.push(label);
            adj.push(Vec::new());
            (labels.len() - 1) as u32
        })
    };
    for (idx, line) in source.lines().enumerate() {
        let line_no = idx + 1;
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = trimmed.split_whitespace().collect();
        let parse = |s: &str| -> Result<u64> {
            s.parse::<u64>().map_err(|_| Error::Parse {
                line: line_no,
                message: format!("expected a nonnegative integer, found {s:?}"),
            })
        };
        match fields.as_slice() {
            ["v", id] => {
                let id = parse(id)?;
                intern(id, &mut adj);
            }
            [a, b] => {
                let (a, b) = (parse(a)?, parse(b)?);
                if a == b {
                    return Err(Error::SelfLoop {
                        line: line_no,
                        vertex: a,
                    });
                }
                let u = intern(a, &mut adj);
                let v = intern(b, &mut adj);
                adj[u as usize].push(v);
                adj[v as usize].push(u);
            }
            _ => {
                return Err(Error::Parse {
                    line: line_no,
                    message: format!("expected `u v` or `v id`, found {trimmed:?}"),
                })
            }
        }
    }
    let mut g = Graph::from_raw_adjacency(adj);
    g.labels = Some(labels);
    Ok(g)
}

/// Writes `g` as an edge list over dense ids. Every vertex is declared
/// first so that reading the file back reproduces the same numbering.
pub fn write_edge_list<W: Write>(g: &Graph, mut out: W) -> Result<()> {
    writeln!(out, "# n={} m={}", g.n(), g.m())?;
    for v in 0..g.n() {
        writeln!(out, "v {v}")?;
    }
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}")?;
    }
    Ok(())
}

/// Vertex ordering in which every vertex has at most `kappa` neighbours
/// later in the order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegeneracyOrder {
    pub order: Vec<u32>,
    pub kappa: usize,
}

impl DegeneracyOrder {
    /// Wraps an arbitrary permutation, computing its later-neighbour bound.
    pub fn from_order(g: &Graph, order: Vec<u32>) -> Result<DegeneracyOrder> {
        let pos = positions(g.n(), &order)?;
        let kappa = (0..g.n())
            .map(|v| {
                g.neighbors(v)
                    .iter()
                    .filter(|&&w| pos[w as usize] > pos[v])
                    .count()
            })
            .max()
            .unwrap_or(0);
        Ok(DegeneracyOrder { order, kappa })
    }
}

fn positions(n: usize, order: &[u32]) -> Result<Vec<u32>> {
    if order.len() != n {
        return Err(Error::InvalidInput(format!(
            "ordering has {} entries for {} vertices",
            order.len(),
            n
        )));
    }
    let mut pos = vec![u32::MAX; n];
    for (i, &v) in order.iter().enumerate() {
        let v = v as usize;
        if v >= n || pos[v] != u32::MAX {
            return Err(Error::InvalidInput("ordering is not a permutation".into()));
        }
        pos[v] = i as u32;
    }
    Ok(pos)
}

/// Greedy minimum-degree peel. Ties go to the smallest vertex id.
pub fn degeneracy_order(g: &Graph) -> DegeneracyOrder {
    let n = g.n();
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let max_deg = deg.iter().copied().max().unwrap_or(0);
    // one min-heap per residual degree; stale entries are skipped on pop
    let mut buckets: Vec<BinaryHeap<Reverse<u32>>> = vec![BinaryHeap::new(); max_deg + 1];
    for v in 0..n {
        buckets[deg[v]].push(Reverse(v as u32));
    }
    let mut removed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut kappa = 0;
    let mut cur = 0;
    while order.len() < n {
        let v = loop {
            while buckets[cur].is_empty() {
                cur += 1;
            }
            let Reverse(v) = buckets[cur].pop().expect("nonempty bucket");
            if !removed[v as usize] && deg[v as usize] == cur {
                break v as usize;
            }
        };
        removed[v] = true;
        kappa = kappa.max(deg[v]);
        order.push(v as u32);
        for &w in g.neighbors(v) {
            let w = w as usize;
            if !removed[w] {
                deg[w] -= 1;
                buckets[deg[w]].push(Reverse(w as u32));
                if deg[w] < cur {
                    cur = deg[w];
                }
            }
        }
    }
    DegeneracyOrder { order, kappa }
}

/// Linear-time bucket peel (Batagelj–Zaversnik). Produces an ordering
/// with the same `kappa` as [`degeneracy_order`], but ties are resolved by
/// bucket position rather than by vertex id.
pub fn degeneracy_order_linear(g: &Graph) -> DegeneracyOrder {
    let n = g.n();
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let max_deg = deg.iter().copied().max().unwrap_or(0);
    let mut bin = vec![0usize; max_deg + 2];
    for &d in &deg {
        bin[d + 1] += 1;
    }
    for d in 0..=max_deg {
        bin[d + 1] += bin[d];
    }
    let mut vert = vec![0u32; n];
    let mut pos = vec![0usize; n];
    {
        let mut next = bin.clone();
        for v in 0..n {
            pos[v] = next[deg[v]];
            vert[pos[v]] = v as u32;
            next[deg[v]] += 1;
        }
    }
    let mut kappa = 0;
    for i in 0..n {
        let v = vert[i] as usize;
        kappa = kappa.max(deg[v]);
        for &w in g.neighbors(v) {
            let w = w as usize;
            if deg[w] > deg[v] {
                let dw = deg[w];
                let pw = pos[w];
                let first = bin[dw];
                let u = vert[first] as usize;
                if u != w {
                    vert.swap(first, pw);
                    pos[u] = pw;
                    pos[w] = first;
                }
                bin[dw] += 1;
                deg[w] -= 1;
            }
        }
    }
    DegeneracyOrder { order: vert, kappa }
}

/// Directed graph given by sorted out-neighbour lists (compressed rows).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrientedGraph {
    offsets: Vec<usize>,
    targets: Vec<u32>,
    max_out_degree: usize,
}

impl OrientedGraph {
    pub fn from_arcs<I>(n: usize, arcs: I) -> Result<OrientedGraph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut out = vec![Vec::new(); n];
        for (u, v) in arcs {
            if u >= n || v >= n || u == v {
                return Err(Error::InvalidInput(format!("bad arc ({u}, {v})")));
            }
            out[u].push(v as u32);
        }
        Ok(OrientedGraph::from_out_lists(out))
    }

    fn from_out_lists(out: Vec<Vec<u32>>) -> OrientedGraph {
        let (offsets, targets) = compress(out);
        let max_out_degree = offsets.windows(2).map(|w| w[1] - w[0]).max().unwrap_or(0);
        OrientedGraph {
            offsets,
            targets,
            max_out_degree,
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn arc_count(&self) -> usize {
        self.targets.len()
    }

    #[inline]
    pub fn out_neighbors(&self, v: usize) -> &[u32] {
        &self.targets[self.offsets[v]..self.offsets[v + 1]]
    }

    #[inline]
    pub fn max_out_degree(&self) -> usize {
        self.max_out_degree
    }

    #[inline]
    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.out_neighbors(u).binary_search(&(v as u32)).is_ok()
    }

    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n()).flat_map(move |u| self.out_neighbors(u).iter().map(move |&v| (u, v as usize)))
    }

    pub fn in_degrees(&self) -> Vec<usize> {
        let mut indeg = vec![0; self.n()];
        for (_, v) in self.arcs() {
            indeg[v] += 1;
        }
        indeg
    }

    /// Vertices of in-degree zero, ascending.
    pub fn sources(&self) -> Vec<usize> {
        self.in_degrees()
            .iter()
            .enumerate()
            .filter(|(_, &d)| d == 0)
            .map(|(v, _)| v)
            .collect()
    }

    /// Kahn's algorithm with smallest-id-first tie-breaking; `None` if
    /// there is a directed cycle.
    pub fn topological_order(&self) -> Option<Vec<usize>> {
        let mut indeg = self.in_degrees();
        let mut ready: BinaryHeap<Reverse<usize>> = indeg
            .iter()
            .enumerate()
            .filter(|(_, &d)| d == 0)
            .map(|(v, _)| Reverse(v))
            .collect();
        let mut order = Vec::with_capacity(self.n());
        while let Some(Reverse(u)) = ready.pop() {
            order.push(u);
            for &w in self.out_neighbors(u) {
                let w = w as usize;
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    ready.push(Reverse(w));
                }
            }
        }
        (order.len() == self.n()).then_some(order)
    }

    pub fn is_acyclic(&self) -> bool {
        self.topological_order().is_some()
    }

    /// Underlying undirected graph.
    pub fn underlying(&self) -> Graph {
        Graph::from_edges(self.n(), self.arcs()).expect("arcs are valid edges")
    }
}

/// Orients every edge from the earlier to the later vertex of `d`.
pub fn orient_by_degeneracy(g: &Graph, d: &DegeneracyOrder) -> Result<OrientedGraph> {
    let pos = positions(g.n(), &d.order)?;
    let mut offsets = Vec::with_capacity(g.n() + 1);
    offsets.push(0);
    let mut targets = Vec::with_capacity(g.m());
    let mut max_out_degree = 0;
    for v in 0..g.n() {
        // neighbour rows are sorted, so the filtered rows stay sorted
        targets.extend(g.neighbors(v).iter().copied().filter(|&w| pos[w as usize] > pos[v]));
        max_out_degree = max_out_degree.max(targets.len() - offsets[v]);
        offsets.push(targets.len());
    }
    Ok(OrientedGraph {
        offsets,
        targets,
        max_out_degree,
    })
}

/// Tensor (categorical) product: `(a, b) ~ (c, d)` iff `a ~ c` and `b ~ d`.
/// Vertex `(a, b)` gets id `a * n2 + b`.
pub fn tensor_product(g1: &Graph, g2: &Graph, max_vertices: usize) -> Result<Graph> {
    let n2 = g2.n();
    let n = g1
        .n()
        .checked_mul(n2)
        .filter(|&n| n <= max_vertices && n <= u32::MAX as usize)
        .ok_or_else(|| Error::guard("tensor product size", g1.n() as u128 * n2 as u128, max_vertices))?;
    let mut adj = Vec::with_capacity(n);
    for a in 0..g1.n() {
        for b in 0..n2 {
            let mut list = Vec::with_capacity(g1.degree(a) * g2.degree(b));
            for &c in g1.neighbors(a) {
                for &d in g2.neighbors(b) {
                    list.push(c * n2 as u32 + d);
                }
            }
            adj.push(list);
        }
    }
    Ok(Graph::from_raw_adjacency(adj))
}

/// `g + K_h`: adds a clique on `h` new vertices joined completely to `g`.
pub fn join_with_clique(g: &Graph, h: usize) -> Result<Graph> {
    if h == 0 {
        return Err(Error::InvalidInput("clique size must be positive".into()));
    }
    let n = g.n();
    let mut adj: Vec<Vec<u32>> = (0..n)
        .map(|v| {
            let mut l = g.neighbors(v).to_vec();
            l.extend((n..n + h).map(|c| c as u32));
            l
        })
        .collect();
    for c in n..n + h {
        adj.push((0..n + h).filter(|&w| w != c).map(|w| w as u32).collect());
    }
    Ok(Graph::from_raw_adjacency(adj))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: &str) -> Result<Graph> {
        load_graph(s.as_bytes(), GraphFormat::EdgeList)
    }

    #[test]
    fn loads_triangle() {
        let g = parse("0 1\n1 2\n2 0\n").unwrap();
        assert_eq!((g.n(), g.m()), (3, 3));
    }

    #[test]
    fn loads_empty() {
        let g = parse("").unwrap();
        assert_eq!((g.n(), g.m()), (0, 0));
    }

    #[test]
    fn rejects_self_loop() {
        assert!(matches!(
            parse("5 5\n"),
            Err(Error::SelfLoop { line: 1, vertex: 5 })
        ));
    }

    #[test]
    fn parse_error_reports_line() {
        match parse("# header\n0 1\n1 x\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn relabels_and_collapses_duplicates() {
        let g = parse("10 20\n20 10\n\nv 7\n20 30\n").unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(g.m(), 2);
        assert_eq!(g.labels().unwrap(), &[10, 20, 7, 30]);
        assert_eq!(g.degree(2), 0);
    }

    #[test]
    fn write_then_load_is_identity() {
        let g = Graph::from_edges(6, [(0, 3), (3, 4), (1, 2)]).unwrap();
        let mut buf = Vec::new();
        write_edge_list(&g, &mut buf).unwrap();
        let h = load_graph(buf.as_slice(), GraphFormat::EdgeList).unwrap();
        assert_eq!(h.n(), g.n());
        assert_eq!(h.edges().collect::<Vec<_>>(), g.edges().collect::<Vec<_>>());
    }

    #[test]
    fn degeneracy_examples() {
        assert_eq!(degeneracy_order(&Graph::cycle(6)).kappa, 2);
        assert_eq!(degeneracy_order(&Graph::complete(5)).kappa, 4);
        let tree = Graph::from_edges(5, [(0, 1), (0, 2), (2, 3), (2, 4)]).unwrap();
        assert_eq!(degeneracy_order(&tree).kappa, 1);
        assert_eq!(degeneracy_order(&Graph::empty(3)).kappa, 0);
    }

    #[test]
    fn degeneracy_ties_smallest_id() {
        let d = degeneracy_order(&Graph::cycle(4));
        assert_eq!(d.order, vec![0, 1, 2, 3]);
    }

    #[test]
    fn linear_peel_matches_kappa() {
        let mut r = crate::generators::rng(11);
        for i in 0..60 {
            let g = crate::generators::gnp(30, [0.1, 0.3, 0.5][i % 3], &mut r);
            let fast = degeneracy_order_linear(&g);
            assert_eq!(fast.kappa, degeneracy_order(&g).kappa);
            assert_eq!(DegeneracyOrder::from_order(&g, fast.order).unwrap().kappa, fast.kappa);
        }
    }

    #[test]
    fn orientation_examples() {
        let p = Graph::path(3);
        let d = DegeneracyOrder::from_order(&p, vec![0, 1, 2]).unwrap();
        let o = orient_by_degeneracy(&p, &d).unwrap();
        assert_eq!(o.arcs().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);

        let k3 = Graph::complete(3);
        let o = orient_by_degeneracy(&k3, &degeneracy_order(&k3)).unwrap();
        let mut outs: Vec<_> = (0..3).map(|v| o.out_neighbors(v).len()).collect();
        outs.sort();
        assert_eq!(outs, vec![0, 1, 2]);

        let c6 = Graph::cycle(6);
        let o = orient_by_degeneracy(&c6, &degeneracy_order(&c6)).unwrap();
        assert!(o.max_out_degree() <= 2);
        assert!(o.is_acyclic());
    }

    #[test]
    fn orientation_rejects_mismatch() {
        let g = Graph::path(3);
        let d = DegeneracyOrder {
            order: vec![0, 1],
            kappa: 1,
        };
        assert!(orient_by_degeneracy(&g, &d).is_err());
    }

    #[test]
    fn tensor_examples() {
        let k2 = Graph::complete(2);
        let t = tensor_product(&k2, &k2, 100).unwrap();
        assert_eq!((t.n(), t.m()), (4, 2));
        assert!(t.neighbors(0) == [3] && t.neighbors(1) == [2]);

        let t = tensor_product(&Graph::cycle(5), &Graph::empty(1), 100).unwrap();
        assert_eq!((t.n(), t.m()), (5, 0));

        assert!(tensor_product(&Graph::complete(10), &Graph::complete(10), 99).is_err());
    }

    #[test]
    fn clique_join_examples() {
        let k3 = join_with_clique(&Graph::empty(0), 3).unwrap();
        assert_eq!(k3, Graph::complete(3));
        let k3 = join_with_clique(&Graph::complete(2), 1).unwrap();
        assert_eq!(k3, Graph::complete(3));
        let f = Graph::cycle(5);
        let j = join_with_clique(&f, 2).unwrap();
        assert_eq!(j.n(), 7);
        assert_eq!(j.m(), 5 + 5 * 2 + 1);
        // hom(K2, F + K2) = 2 m' = 2m + 4n + 2
        assert_eq!(2 * j.m(), 2 * f.m() + 4 * f.n() + 2);
    }

    #[test]
    fn girth_and_forest() {
        assert_eq!(Graph::cycle(7).girth(), Some(7));
        assert_eq!(Graph::complete(4).girth(), Some(3));
        assert_eq!(Graph::path(5).girth(), None);
        assert!(Graph::path(5).is_forest());
        assert!(!Graph::cycle(3).is_forest());
    }
}
