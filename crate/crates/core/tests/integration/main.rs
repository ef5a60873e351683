mod cli;
mod gadgets;
mod invariants;

use degencount::Graph;
use num_bigint::BigUint;

/// `hom(C_k, g)` as the trace of the k-th adjacency power; independent of
/// every counting path in the crate.
pub fn closed_walks(g: &Graph, k: usize) -> BigUint {
    let n = g.n();
    let mut total = BigUint::from(0u32);
    for s in 0..n {
        let mut walk = vec![BigUint::from(0u32); n];
        walk[s] = BigUint::from(1u32);
        for _ in 0..k {
            let mut next = vec![BigUint::from(0u32); n];
            for (v, w) in walk.iter().enumerate() {
                if *w != BigUint::from(0u32) {
                    for &u in g.neighbors(v) {
                        next[u as usize] += w;
                    }
                }
            }
            walk = next;
        }
        total += &walk[s];
    }
    total
}
