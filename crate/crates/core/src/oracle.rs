//! Brute-force counters used as ground truth.
//!
//! Pattern vertices are placed in order of decreasing degree, preferring
//! vertices adjacent to already placed ones so that candidates can be drawn
//! from a neighbour list instead of the whole host.

use rayon::prelude::*;

use crate::bigcount::BigCount;
use crate::error::{Error, Result};
use crate::graph::{Graph, OrientedGraph};
use crate::pattern::Pattern;
use crate::Limits;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Mode {
    Hom,
    Inj,
    Ind,
}

struct Plan {
    order: Vec<usize>,
    /// Earlier position whose image supplies candidates, if any.
    anchor: Vec<Option<usize>>,
    /// Earlier positions that must be adjacent.
    adjacent: Vec<Vec<usize>>,
    /// Earlier positions that must be non-adjacent (induced mode only).
    separate: Vec<Vec<usize>>,
}

fn plan(n: usize, degree: impl Fn(usize) -> usize, adj: impl Fn(usize, usize) -> bool) -> Plan {
    let mut placed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let next = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| {
                let linked = order.iter().any(|&u| adj(u, v));
                (linked, degree(v), std::cmp::Reverse(v))
            })
            .unwrap();
        placed[next] = true;
        order.push(next);
    }
    let mut anchor = Vec::with_capacity(n);
    let mut adjacent = Vec::with_capacity(n);
    let mut separate = Vec::with_capacity(n);
    for i in 0..n {
        let v = order[i];
        let adj_pos: Vec<usize> = (0..i).filter(|&j| adj(order[j], v)).collect();
        let sep_pos: Vec<usize> = (0..i).filter(|&j| !adj(order[j], v)).collect();
        anchor.push(adj_pos.first().copied());
        adjacent.push(adj_pos);
        separate.push(sep_pos);
    }
    Plan {
        order,
        anchor,
        adjacent,
        separate,
    }
}

fn check_budget(plan: &Plan, n: usize, max_deg: usize, limits: &Limits) -> Result<()> {
    let bound: f64 = plan
        .anchor
        .iter()
        .map(|a| if a.is_some() { max_deg as f64 } else { n as f64 })
        .product();
    if bound > limits.oracle_budget {
        return Err(Error::guard(
            "brute-force search tree bound",
            format!("{bound:.3e}"),
            format!("{:.3e}", limits.oracle_budget),
        ));
    }
    Ok(())
}

fn count_undirected(h: &Pattern, g: &Graph, mode: Mode, limits: &Limits) -> Result<BigCount> {
    let k = h.n();
    if k == 0 {
        return Ok(1u32.into());
    }
    if mode != Mode::Hom && k > g.n() {
        return Ok(0u32.into());
    }
    let p = plan(k, |v| h.degree(v), |u, v| h.has_edge(u, v));
    check_budget(&p, g.n(), g.max_degree(), limits)?;
    let first: Vec<u32> = (0..g.n() as u32).collect();
    let total: u128 = first
        .par_iter()
        .map(|&x| {
            let mut image = vec![0u32; k];
            image[0] = x;
            extend(&p, g, mode, 1, &mut image)
        })
        .sum();
    Ok(total.into())
}

fn extend(p: &Plan, g: &Graph, mode: Mode, i: usize, image: &mut [u32]) -> u128 {
    if i == p.order.len() {
        return 1;
    }
    let ok = |x: u32, image: &[u32]| {
        if mode != Mode::Hom && image[..i].contains(&x) {
            return false;
        }
        if !p.adjacent[i]
            .iter()
            .all(|&j| g.has_edge(image[j] as usize, x as usize))
        {
            return false;
        }
        mode != Mode::Ind
            || p.separate[i]
                .iter()
                .all(|&j| !g.has_edge(image[j] as usize, x as usize))
    };
    let mut total = 0u128;
    let mut visit = |x: u32, image: &mut [u32]| {
        if ok(x, image) {
            image[i] = x;
            total += extend(p, g, mode, i + 1, image);
        }
    };
    match p.anchor[i] {
        Some(a) => {
            let src = image[a] as usize;
            for idx in 0..g.degree(src) {
                let x = g.neighbors(src)[idx];
                visit(x, image);
            }
        }
        None => {
            for x in 0..g.n() as u32 {
                visit(x, image);
            }
        }
    }
    total
}

/// Number of homomorphisms from `h` to `g`.
pub fn brute_hom(h: &Pattern, g: &Graph, limits: &Limits) -> Result<BigCount> {
    count_undirected(h, g, Mode::Hom, limits)
}

/// Number of injective homomorphisms from `h` to `g`.
pub fn brute_inj(h: &Pattern, g: &Graph, limits: &Limits) -> Result<BigCount> {
    count_undirected(h, g, Mode::Inj, limits)
}

/// Number of injective maps preserving both edges and non-edges.
pub fn brute_ind(h: &Pattern, g: &Graph, limits: &Limits) -> Result<BigCount> {
    count_undirected(h, g, Mode::Ind, limits)
}

/// Number of arc-preserving maps from `hdir` to `gdir`.
pub fn brute_directed_hom(hdir: &OrientedGraph, gdir: &OrientedGraph, limits: &Limits) -> Result<BigCount> {
    let k = hdir.n();
    if k == 0 {
        return Ok(1u32.into());
    }
    let mut in_lists: Vec<Vec<u32>> = vec![Vec::new(); gdir.n()];
    for (u, v) in gdir.arcs() {
        in_lists[v].push(u as u32);
    }
    let linked = |u: usize, v: usize| hdir.has_arc(u, v) || hdir.has_arc(v, u);
    let hdeg: Vec<usize> = {
        let mut d = vec![0; k];
        for (u, v) in hdir.arcs() {
            d[u] += 1;
            d[v] += 1;
        }
        d
    };
    let p = plan(k, |v| hdeg[v], linked);
    let max_deg = (0..gdir.n())
        .map(|v| gdir.out_neighbors(v).len().max(in_lists[v].len()))
        .max()
        .unwrap_or(0);
    check_budget(&p, gdir.n(), max_deg, limits)?;
    let ctx = Directed {
        p: &p,
        hdir,
        gdir,
        in_lists: &in_lists,
    };
    let total: u128 = (0..gdir.n() as u32)
        .into_par_iter()
        .map(|x| {
            let mut image = vec![0u32; k];
            image[0] = x;
            ctx.extend(1, &mut image)
        })
        .sum();
    Ok(total.into())
}

struct Directed<'a> {
    p: &'a Plan,
    hdir: &'a OrientedGraph,
    gdir: &'a OrientedGraph,
    in_lists: &'a [Vec<u32>],
}

impl Directed<'_> {
    fn extend(&self, i: usize, image: &mut [u32]) -> u128 {
        let p = self.p;
        if i == p.order.len() {
            return 1;
        }
        let v = p.order[i];
        let ok = |x: u32, image: &[u32]| {
            p.adjacent[i].iter().all(|&j| {
                let u = p.order[j];
                let y = image[j] as usize;
                (!self.hdir.has_arc(u, v) || self.gdir.has_arc(y, x as usize))
                    && (!self.hdir.has_arc(v, u) || self.gdir.has_arc(x as usize, y))
            })
        };
        let candidates: Vec<u32> = match p.anchor[i] {
            Some(a) => {
                let y = image[a] as usize;
                if self.hdir.has_arc(p.order[a], v) {
                    self.gdir.out_neighbors(y).to_vec()
                } else {
                    self.in_lists[y].clone()
                }
            }
            None => (0..self.gdir.n() as u32).collect(),
        };
        let mut total = 0;
        for x in candidates {
            if ok(x, image) {
                image[i] = x;
                total += self.extend(i + 1, image);
            }
        }
        total
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lim() -> Limits {
        Limits::default()
    }

    #[test]
    fn hom_examples() {
        assert_eq!(brute_hom(&Pattern::complete(3), &Graph::complete(3), &lim()).unwrap(), 6u32.into());
        assert_eq!(brute_hom(&Pattern::complete(2), &Graph::cycle(4), &lim()).unwrap(), 8u32.into());
        assert_eq!(brute_hom(&Pattern::cycle(4), &Graph::complete(2), &lim()).unwrap(), 2u32.into());
        assert_eq!(brute_hom(&Pattern::empty(0), &Graph::empty(0), &lim()).unwrap(), 1u32.into());
        assert_eq!(brute_hom(&Pattern::empty(2), &Graph::empty(3), &lim()).unwrap(), 9u32.into());
    }

    #[test]
    fn inj_examples() {
        assert_eq!(brute_inj(&Pattern::cycle(4), &Graph::cycle(4), &lim()).unwrap(), 8u32.into());
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (3, 4)]).unwrap();
        assert_eq!(brute_inj(&Pattern::complete(2), &g, &lim()).unwrap(), 6u32.into());
        let c6 = crate::gadgets::subdivide_edges(&Graph::complete(3), 2).unwrap();
        assert_eq!(brute_inj(&Pattern::cycle(6), &c6, &lim()).unwrap(), 12u32.into());
        assert_eq!(brute_inj(&Pattern::empty(3), &Graph::empty(2), &lim()).unwrap(), 0u32.into());
    }

    #[test]
    fn ind_examples() {
        assert_eq!(brute_ind(&Pattern::path(3), &Graph::complete(3), &lim()).unwrap(), 0u32.into());
        assert_eq!(brute_ind(&Pattern::complete(2), &Graph::cycle(5), &lim()).unwrap(), 10u32.into());
        assert_eq!(brute_ind(&Pattern::empty(2), &Graph::cycle(4), &lim()).unwrap(), 4u32.into());
    }

    #[test]
    fn directed_examples() {
        let arc = OrientedGraph::from_arcs(2, [(0, 1)]).unwrap();
        assert_eq!(brute_directed_hom(&arc, &arc, &lim()).unwrap(), 1u32.into());
        let bare = OrientedGraph::from_arcs(4, []).unwrap();
        assert_eq!(brute_directed_hom(&arc, &bare, &lim()).unwrap(), 0u32.into());
        let tt3 = OrientedGraph::from_arcs(3, [(0, 1), (0, 2), (1, 2)]).unwrap();
        let tt4 = OrientedGraph::from_arcs(4, (0..4).flat_map(|a| (a + 1..4).map(move |b| (a, b)))).unwrap();
        assert_eq!(brute_directed_hom(&tt3, &tt4, &lim()).unwrap(), 4u32.into());
        // in-star pattern uses in-neighbour candidates
        let in_star = OrientedGraph::from_arcs(3, [(1, 0), (2, 0)]).unwrap();
        assert_eq!(brute_directed_hom(&in_star, &tt4, &lim()).unwrap(), (1 + 4 + 9u32).into());
    }

    #[test]
    fn guard_trips() {
        let g = Graph::empty(1000);
        let tight = Limits {
            oracle_budget: 1e6,
            ..Limits::default()
        };
        assert!(matches!(
            brute_hom(&Pattern::empty(3), &g, &tight),
            Err(Error::GuardExceeded { .. })
        ));
        assert!(brute_hom(&Pattern::path(3), &Graph::path(1000), &tight).is_ok());
    }
}
