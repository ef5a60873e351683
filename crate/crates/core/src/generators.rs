//! Seeded random host generators.

use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Deterministic RNG used by every generator and randomized search.
pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Erdős–Rényi graph G(n, p).
pub fn gnp<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).expect("valid random graph")
}

/// Uniform-attachment random tree: vertex `i` joins a uniformly random
/// earlier vertex.
pub fn random_tree<R: Rng>(n: usize, rng: &mut R) -> Graph {
    Graph::from_edges(n, (1..n).map(|i| (rng.gen_range(0..i), i))).expect("valid tree")
}

/// Random graph in which every vertex attaches to up to `k` distinct
/// earlier vertices, so the reversed insertion order witnesses
/// degeneracy at most `k`.
pub fn attach<R: Rng>(n: usize, k: usize, rng: &mut R) -> Graph {
    let mut edges = Vec::new();
    for i in 1..n {
        let picks = k.min(i);
        for u in rand::seq::index::sample(rng, i, picks) {
            edges.push((u, i));
        }
    }
    Graph::from_edges(n, edges).expect("valid attachment graph")
}

/// Random simple 3-regular graph on `n` vertices (`n` even, `n >= 4`) by
/// the configuration model with restarts.
pub fn random_cubic<R: Rng>(n: usize, rng: &mut R) -> Result<Graph> {
    if n < 4 || n % 2 == 1 {
        return Err(Error::InvalidInput(format!(
            "a cubic graph needs an even vertex count >= 4, got {n}"
        )));
    }
    'attempt: for _ in 0..1000 {
        let mut stubs: Vec<u32> = (0..n as u32).flat_map(|v| [v, v, v]).collect();
        stubs.shuffle(rng);
        let mut adj: Vec<Vec<u32>> = vec![Vec::with_capacity(3); n];
        for pair in stubs.chunks_exact(2) {
            let (u, v) = (pair[0], pair[1]);
            if u == v || adj[u as usize].contains(&v) {
                continue 'attempt;
            }
            adj[u as usize].push(v);
            adj[v as usize].push(u);
        }
        return Ok(Graph::from_raw_adjacency(adj));
    }
    Err(Error::InvalidInput(
        "configuration model failed to produce a simple graph".into(),
    ))
}

/// Random cubic graph with a switching repair step instead of restarts;
/// practical for large `n`, where restarts almost never succeed.
fn random_cubic_switched<R: Rng>(n: usize, rng: &mut R) -> Graph {
    let mut stubs: Vec<u32> = (0..n as u32).flat_map(|v| [v, v, v]).collect();
    stubs.shuffle(rng);
    let mut pairs: Vec<(u32, u32)> = stubs.chunks_exact(2).map(|c| (c[0], c[1])).collect();
    let key = |a: u32, b: u32| if a < b { (a, b) } else { (b, a) };
    let mut seen: rustc_hash::FxHashMap<(u32, u32), u32> = rustc_hash::FxHashMap::default();
    for &(a, b) in &pairs {
        *seen.entry(key(a, b)).or_default() += 1;
    }
    let bad = |p: (u32, u32), seen: &rustc_hash::FxHashMap<(u32, u32), u32>| {
        p.0 == p.1 || seen[&key(p.0, p.1)] > 1
    };
    let mut changed = true;
    while changed {
        changed = false;
        for i in 0..pairs.len() {
            while bad(pairs[i], &seen) {
                let j = rng.gen_range(0..pairs.len());
                if j == i {
                    continue;
                }
                let (a, b) = pairs[i];
                let (c, d) = pairs[j];
                let (n1, n2) = ((a, d), (c, b));
                if n1.0 == n1.1 || n2.0 == n2.1 {
                    continue;
                }
                if seen.get(&key(n1.0, n1.1)).copied().unwrap_or(0) > 0
                    || seen.get(&key(n2.0, n2.1)).copied().unwrap_or(0) > 0
                    || key(n1.0, n1.1) == key(n2.0, n2.1)
                {
                    continue;
                }
                for p in [(a, b), (c, d)] {
                    let e = seen.get_mut(&key(p.0, p.1)).unwrap();
                    *e -= 1;
                }
                *seen.entry(key(n1.0, n1.1)).or_default() += 1;
                *seen.entry(key(n2.0, n2.1)).or_default() += 1;
                pairs[i] = n1;
                pairs[j] = n2;
                changed = true;
            }
        }
    }
    let mut adj: Vec<Vec<u32>> = vec![Vec::with_capacity(3); n];
    for (u, v) in pairs {
        adj[u as usize].push(v);
        adj[v as usize].push(u);
    }
    Graph::from_raw_adjacency(adj)
}

/// The `degen2` bench host: a random cubic graph with every edge
/// subdivided once. A cubic graph on `b` vertices yields `2.5 b` vertices,
/// so `b` is the even number nearest `n / 2.5` (at least 4).
pub fn degen2<R: Rng>(n: usize, rng: &mut R) -> Graph {
    let mut base = ((n as f64 / 2.5).round() as usize).max(4);
    if base % 2 == 1 {
        base += 1;
    }
    let cubic = if base <= 64 {
        random_cubic(base, rng).unwrap_or_else(|_| random_cubic_switched(base, rng))
    } else {
        random_cubic_switched(base, rng)
    };
    crate::gadgets::subdivide_edges(&cubic, 2).expect("ell = 2 is valid")
}

/// Host generator names accepted on the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HostGenerator {
    /// Subdivided random cubic graph (degeneracy 2).
    Degen2,
    /// Random tree plus attachments (degeneracy at most `k`).
    Attach(usize),
    /// Uniform random tree.
    Tree,
}

impl std::str::FromStr for HostGenerator {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "degen2" => Ok(HostGenerator::Degen2),
            "tree" => Ok(HostGenerator::Tree),
            _ => s
                .strip_prefix("attach")
                .and_then(|k| k.parse().ok())
                .map(HostGenerator::Attach)
                .ok_or_else(|| {
                    Error::InvalidInput(format!(
                        "unknown generator {s:?} (expected degen2, tree or attach<k>)"
                    ))
                }),
        }
    }
}

impl HostGenerator {
    pub fn generate<R: Rng>(self, n: usize, rng: &mut R) -> Graph {
        match self {
            HostGenerator::Degen2 => degen2(n, rng),
            HostGenerator::Attach(k) => attach(n, k, rng),
            HostGenerator::Tree => random_tree(n, rng),
        }
    }
}
