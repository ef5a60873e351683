//! Graph transformations that move counts between problems, and exact
//! checks of the counting identities they satisfy.
//!
//! Identity suites count both sides with the brute-force oracle. Forest
//! quotient terms, whose counts grow too fast to enumerate one by one, go
//! through the tree DP and are cross-checked against the oracle whenever the
//! oracle's search bound allows it.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use serde::Serialize;

use crate::bigcount::{BigCount, SignedCount};
use crate::counting::LinearCombination;
use crate::error::{Error, Result};
use crate::generators::{gnp, rng};
use crate::graph::{join_with_clique, tensor_product, Graph};
use crate::hom::{forest_hom_count, hom_count, DispatchPath, Policy};
use crate::oracle::{brute_hom, brute_inj};
use crate::pattern::{enumerate_partitions_of, full_mask, poset_mobius, quotient, Partition, Pattern};
use crate::Limits;

/// Replaces every edge by a path of length `ell`.
pub fn subdivide_edges(f: &Graph, ell: usize) -> Result<Graph> {
    if ell < 2 {
        return Err(Error::InvalidInput(format!("subdivision length must be >= 2, got {ell}")));
    }
    let mut edges = Vec::with_capacity(ell * f.m());
    let mut next = f.n();
    for (x, y) in f.edges() {
        push_path(&mut edges, &mut next, x, y, ell);
    }
    Graph::from_edges(next, edges)
}

/// Replaces every edge `xy` by two internally disjoint `x`-`y` paths of
/// lengths `p` and `q`. A length of 1 keeps the original edge.
pub fn parallel_paths(f: &Graph, p: usize, q: usize) -> Result<Graph> {
    if p == 0 || q == 0 || (p == 1 && q == 1) {
        return Err(Error::InvalidInput(format!(
            "parallel path lengths must be positive and not both 1, got ({p}, {q})"
        )));
    }
    let mut edges = Vec::with_capacity((p + q) * f.m());
    let mut next = f.n();
    for (x, y) in f.edges() {
        push_path(&mut edges, &mut next, x, y, p);
        push_path(&mut edges, &mut next, x, y, q);
    }
    Graph::from_edges(next, edges)
}

fn push_path(edges: &mut Vec<(usize, usize)>, next: &mut usize, x: usize, y: usize, len: usize) {
    let mut prev = x;
    for _ in 1..len {
        edges.push((prev, *next));
        prev = *next;
        *next += 1;
    }
    edges.push((prev, y));
}

/// One checked identity; `pass` iff both sides are equal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub name: String,
    #[serde(serialize_with = "decimal")]
    pub left: SignedCount,
    #[serde(serialize_with = "decimal")]
    pub right: SignedCount,
    pub pass: bool,
}

impl IdentityCheck {
    pub fn new(name: impl Into<String>, left: impl Into<SignedCount>, right: impl Into<SignedCount>) -> IdentityCheck {
        let (left, right) = (left.into(), right.into());
        IdentityCheck {
            name: name.into(),
            pass: left == right,
            left,
            right,
        }
    }
}

fn decimal<S: serde::Serializer>(v: &SignedCount, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GraphSize {
    pub name: String,
    pub n: usize,
    pub m: usize,
}

impl GraphSize {
    fn of(name: &str, g: &Graph) -> GraphSize {
        GraphSize {
            name: name.to_string(),
            n: g.n(),
            m: g.m(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GadgetReport {
    pub construction: String,
    pub input: GraphSize,
    pub outputs: Vec<GraphSize>,
    pub identities: Vec<IdentityCheck>,
}

impl GadgetReport {
    pub fn passed(&self) -> bool {
        self.identities.iter().all(|i| i.pass)
    }

    pub fn identity(&self, name: &str) -> Option<&IdentityCheck> {
        self.identities.iter().find(|i| i.name == name)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    K0Mod3,
    K7,
    K5,
    K4,
    K4Mod6,
    K2Mod6,
    C8System,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::K0Mod3,
        Suite::K7,
        Suite::K5,
        Suite::K4,
        Suite::K4Mod6,
        Suite::K2Mod6,
        Suite::C8System,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::K0Mod3 => "k0mod3",
            Suite::K7 => "k7",
            Suite::K5 => "k5",
            Suite::K4 => "k4",
            Suite::K4Mod6 => "k4mod6",
            Suite::K2Mod6 => "k2mod6",
            Suite::C8System => "c8-system",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Suite> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::InvalidInput(format!("unknown suite {s:?}")))
    }
}

/// Largest input accepted by the identity suites.
pub const MAX_SUITE_INPUT: usize = 10;

fn inj(h: &Pattern, g: &Graph) -> Result<BigInt> {
    Ok(brute_inj(h, g, &Limits::unbounded_oracle())?.into())
}

fn hom(h: &Pattern, g: &Graph) -> Result<BigInt> {
    Ok(brute_hom(h, g, &Limits::unbounded_oracle())?.into())
}

fn c(k: usize) -> Pattern {
    Pattern::cycle(k)
}

fn c_pend(k: usize) -> Pattern {
    Pattern::cycle_with_pendant(k)
}

fn indicator(b: bool) -> BigInt {
    BigInt::from(b as u8)
}

/// Builds the suite's gadgets from `f` and checks every identity exactly.
pub fn verify_gadget_identities(f: &Graph, suite: Suite) -> Result<GadgetReport> {
    if f.n() > MAX_SUITE_INPUT {
        return Err(Error::guard("identity suite input vertices", f.n(), MAX_SUITE_INPUT));
    }
    let mut report = GadgetReport {
        construction: suite.name().to_string(),
        input: GraphSize::of("F", f),
        outputs: Vec::new(),
        identities: Vec::new(),
    };
    let ids = &mut report.identities;
    let tri = inj(&c(3), f)?;
    match suite {
        Suite::K0Mod3 => {
            for ell in [2usize, 3] {
                let k = 3 * ell;
                let g = subdivide_edges(f, ell)?;
                report.outputs.push(GraphSize::of(&format!("G{ell}"), &g));
                let lhs = inj(&c(k), &g)?;
                ids.push(IdentityCheck::new(
                    format!("inj(C{k},G{ell}) = {ell}*inj(C3,F)"),
                    lhs.clone(),
                    ell * tri.clone(),
                ));
                ids.push(IdentityCheck::new(
                    format!("[girth(G{ell}) = {k}] = [F has a triangle]"),
                    indicator(g.girth() == Some(k)),
                    indicator(tri.is_positive()),
                ));
                let family = RestrictedFamily::new(k, &[])?;
                let (forest, core) = family.evaluate(&g, ids)?;
                ids.push(IdentityCheck::new(
                    format!("inj(C{k},G{ell}) = sum over identity-or-forest Q of mu(P0,Q)*hom(C{k}/Q,G{ell})"),
                    lhs,
                    forest + core,
                ));
            }
        }
        Suite::K7 => {
            let g = parallel_paths(f, 2, 3)?;
            report.outputs.push(GraphSize::of("G", &g));
            let i7 = inj(&c(7), &g)?;
            let i5 = inj(&c(5), &g)?;
            let i5p = inj(&c_pend(5), &g)?;
            let degree_sum: u64 = (0..f.n())
                .map(|x| {
                    let d = f.degree(x) as u64;
                    4 * d * d.saturating_sub(1)
                })
                .sum();
            ids.push(IdentityCheck::new("inj(C7,G) = 7*inj(C3,F)", i7.clone(), 7 * tri.clone()));
            ids.push(IdentityCheck::new("inj(C5,G) = 10*e(F)", i5.clone(), 10 * f.m()));
            ids.push(IdentityCheck::new("inj(C'5,G) = sum_x 4*d(x)*(d(x)-1)", i5p.clone(), degree_sum));
            ids.push(IdentityCheck::new(
                "hom(C7,G) = inj(C7,G) + 7*inj(C'5,G) + 7*inj(C5,G)",
                hom(&c(7), &g)?,
                i7 + 7 * i5p + 7 * i5,
            ));
            if f.m() > 0 {
                ids.push(IdentityCheck::new("girth(G) = 5", g.girth().unwrap_or(0), 5));
            }
        }
        Suite::K5 => {
            let stated = parallel_paths(f, 1, 2)?;
            let corrected = parallel_paths(f, 1, 3)?;
            report.outputs.push(GraphSize::of("G' (2-paths)", &stated));
            report.outputs.push(GraphSize::of("G'' (3-paths)", &corrected));
            let h5 = hom(&c(5), f)?;
            let pend = inj(&c_pend(3), f)?;
            ids.push(IdentityCheck::new(
                "hom(C5,F) = inj(C5,F) + 5*inj(C'3,F) + 5*inj(C3,F)",
                h5.clone(),
                inj(&c(5), f)? + 5 * pend.clone() + 5 * tri.clone(),
            ));
            ids.push(IdentityCheck::new(
                "hom(C5,G') - hom(C5,F) = 5*inj(C'3,F) + 13*inj(C3,F)",
                hom(&c(5), &stated)? - h5.clone(),
                5 * pend.clone() + 13 * tri.clone(),
            ));
            let h5c = hom(&c(5), &corrected)?;
            ids.push(IdentityCheck::new(
                "hom(C5,G'') - hom(C5,F) = 5*inj(C'3,F) + 15*inj(C3,F)",
                h5c.clone() - h5.clone(),
                5 * pend + 15 * tri.clone(),
            ));
            engine_pass(ids, "C5", "F", &c(5), f, &h5)?;
            engine_pass(ids, "C5", "G''", &c(5), &corrected, &h5c)?;
        }
        Suite::K4 => {
            let g = parallel_paths(f, 1, 2)?;
            report.outputs.push(GraphSize::of("G'", &g));
            let i4 = inj(&c(4), f)?;
            ids.push(IdentityCheck::new(
                "inj(C4,G') = inj(C4,F) + 4*inj(C3,F)",
                inj(&c(4), &g)?,
                i4.clone() + 4 * tri.clone(),
            ));
            let h4 = hom(&c(4), f)?;
            ids.push(IdentityCheck::new(
                "hom(C4,F) = inj(C4,F) + 2*inj(P3,F) + inj(K2,F)",
                h4.clone(),
                i4 + 2 * inj(&Pattern::path(3), f)? + inj(&Pattern::complete(2), f)?,
            ));
            engine_pass(ids, "C4", "F", &c(4), f, &h4)?;
            let h4g = hom(&c(4), &g)?;
            engine_pass(ids, "C4", "G'", &c(4), &g, &h4g)?;
        }
        Suite::K4Mod6 => {
            let (k, ell) = (10, 3);
            let g = parallel_paths(f, ell, ell + 1)?;
            report.outputs.push(GraphSize::of("G", &g));
            let lhs = inj(&c(k), &g)?;
            ids.push(IdentityCheck::new(
                format!("inj(C{k},G) = {k}*inj(C3,F)"),
                lhs.clone(),
                k * tri.clone(),
            ));
            let family = RestrictedFamily::new(k, &[])?;
            let (forest, core) = family.evaluate(&g, ids)?;
            ids.push(IdentityCheck::new(
                format!("inj(C{k},G) = sum over identity-or-forest Q of mu(P0,Q)*hom(C{k}/Q,G)"),
                lhs,
                forest + core,
            ));
        }
        Suite::K2Mod6 => {
            let g = subdivide_edges(f, 2)?;
            report.outputs.push(GraphSize::of("G", &g));
            let family = RestrictedFamily::new(8, &[c_pend(6), c(6)])?;
            let (i8, i6p, i6) = (inj(&c(8), &g)?, inj(&c_pend(6), &g)?, inj(&c(6), &g)?);
            let (forest, core) = family.evaluate(&g, ids)?;
            ids.push(IdentityCheck::new(
                "inj(C8,G) + 8*inj(C'6,G) + 8*inj(C6,G) = sum_Q c_Q*hom(C8/Q,G) + hom(C8,G)",
                i8.clone() + 8 * i6p.clone() + 8 * i6.clone(),
                forest + core.clone(),
            ));
            ids.push(IdentityCheck::new(
                "non-forest part of the restricted inversion = hom(C8,G)",
                core,
                hom(&c(8), &g)?,
            ));
            ids.push(IdentityCheck::new("inj(C8,G) = 2*inj(C4,F)", i8, 2 * inj(&c(4), f)?));
            ids.push(IdentityCheck::new(
                "[inj(C'6,G) + inj(C6,G) > 0] = [F has a triangle]",
                indicator((i6p + i6).is_positive()),
                indicator(tri.is_positive()),
            ));
        }
        Suite::C8System => {
            let g = subdivide_edges(f, 2)?;
            let gp = parallel_paths(f, 2, 3)?;
            report.outputs.push(GraphSize::of("G", &g));
            report.outputs.push(GraphSize::of("G'", &gp));
            let i4f = inj(&c(4), f)?;
            let i6p_g = inj(&c_pend(6), &g)?;
            let i6p_gp = inj(&c_pend(6), &gp)?;
            let i8_g = inj(&c(8), &g)?;
            let i8_gp = inj(&c(8), &gp)?;
            let i6_g = inj(&c(6), &g)?;
            let i6_gp = inj(&c(6), &gp)?;
            ids.push(IdentityCheck::new("inj(C6,G) = 2*inj(C3,F)", i6_g.clone(), 2 * tri.clone()));
            ids.push(IdentityCheck::new("inj(C6,G') = 2*inj(C3,F)", i6_gp.clone(), 2 * tri.clone()));
            ids.push(IdentityCheck::new("inj(C8,G) = 2*inj(C4,F)", i8_g.clone(), 2 * i4f.clone()));
            ids.push(IdentityCheck::new(
                "inj(C8,G') = 2*inj(C4,F) + 8*inj(C3,F)",
                i8_gp.clone(),
                2 * i4f + 8 * tri.clone(),
            ));
            ids.push(IdentityCheck::new(
                "inj(C'6,G') = 2*inj(C'6,G) + 2*inj(C3,F)",
                i6p_gp.clone(),
                2 * i6p_g.clone() + 2 * tri.clone(),
            ));
            let family = RestrictedFamily::new(8, &[c_pend(6), c(6)])?;
            let (forest_g, core_g) = family.evaluate(&g, ids)?;
            let (forest_gp, core_gp) = family.evaluate(&gp, ids)?;
            ids.push(IdentityCheck::new(
                "inj(C8,G) + 8*inj(C'6,G) + 8*inj(C6,G) = sum_Q c_Q*hom(C8/Q,G) + hom(C8,G)",
                i8_g + 8 * i6p_g.clone() + 8 * i6_g,
                forest_g.clone() + core_g,
            ));
            ids.push(IdentityCheck::new(
                "inj(C8,G') + 8*inj(C'6,G') + 8*inj(C6,G') = sum_Q c_Q*hom(C8/Q,G') + hom(C8,G')",
                i8_gp + 8 * i6p_gp + 8 * i6_gp,
                forest_gp.clone() + core_gp,
            ));
            ids.push(IdentityCheck::new(
                "8*inj(C'6,G) + 24*inj(C3,F) = S' + hom(C8,G') - hom(C8,G)",
                8 * i6p_g + 24 * tri,
                forest_gp - forest_g + hom(&c(8), &gp)? - hom(&c(8), &g)?,
            ));
        }
    }
    Ok(report)
}

/// Re-counts `hom(h, g)` with the engine when `h` is on the fast path.
fn engine_pass(ids: &mut Vec<IdentityCheck>, hname: &str, gname: &str, h: &Pattern, g: &Graph, oracle: &BigInt) -> Result<()> {
    let r = hom_count(h, g, Policy::Auto, &Limits::default())?;
    if r.meta.path != DispatchPath::Oracle {
        ids.push(IdentityCheck::new(
            format!("engine hom({hname},{gname}) = oracle hom({hname},{gname})"),
            BigInt::from(r.count),
            oracle.clone(),
        ));
    }
    Ok(())
}

/// Partitions `P` of `V(C_k)` whose quotient is a forest, `C_k` itself, or
/// one of a few extra graphs, with the Möbius function of this family
/// summed over its non-forest members.
struct RestrictedFamily {
    k: usize,
    /// Canonical quotient, summed coefficient, forest flag.
    terms: Vec<(Pattern, BigInt, bool)>,
    /// `sum |c_Q|` over non-forest `Q` other than the identity partition.
    off_identity: BigInt,
}

impl RestrictedFamily {
    fn new(k: usize, extra: &[Pattern]) -> Result<RestrictedFamily> {
        let cycle = c(k);
        let keep: Vec<Pattern> = std::iter::once(&cycle).chain(extra).map(Pattern::canonical).collect();
        let limits = Limits {
            max_pattern: k.max(crate::MAX_PATTERN_SIZE),
            ..Limits::default()
        };
        let mut members: Vec<(Partition, Pattern, bool)> = Vec::new();
        for p in enumerate_partitions_of(k, &limits)? {
            let q = quotient(&cycle, &p)?;
            if q.has_loop {
                continue;
            }
            let g = q.graph;
            if g.is_forest() {
                members.push((p, g, true));
            } else if keep.iter().any(|c| c.n() == g.n() && c.m() == g.m() && *c == g.canonical()) {
                members.push((p, g, false));
            }
        }
        let table = poset_mobius(&members, |a, b| a.0.refines(&b.0).unwrap_or(false))?;
        let base: Vec<usize> = (0..members.len()).filter(|&i| !members[i].2).collect();
        let mut grouped: BTreeMap<Pattern, (BigInt, bool)> = BTreeMap::new();
        let mut off_identity = BigInt::zero();
        for (qi, (p, g, forest)) in members.iter().enumerate() {
            let coeff: i128 = base.iter().filter_map(|&b| table.mu(b, qi)).sum();
            if !forest && p.num_blocks() != k {
                off_identity += BigInt::from(coeff).abs();
            }
            let slot = grouped.entry(g.canonical()).or_insert((BigInt::zero(), *forest));
            slot.0 += coeff;
        }
        let terms = grouped
            .into_iter()
            .filter(|(_, (c, _))| !c.is_zero())
            .map(|(p, (c, f))| (p, c, f))
            .collect();
        Ok(RestrictedFamily { k, terms, off_identity })
    }

    /// `(forest part, non-forest part)` of `sum_Q c_Q hom(C_k/Q, g)`. Pushes
    /// the forest-term cross-check and the off-identity coefficient check.
    fn evaluate(&self, g: &Graph, ids: &mut Vec<IdentityCheck>) -> Result<(BigInt, BigInt)> {
        let mut forest = BigInt::zero();
        let mut core = BigInt::zero();
        let (mut engine_sum, mut oracle_sum) = (BigInt::zero(), BigInt::zero());
        for (p, coeff, is_forest) in &self.terms {
            if *is_forest {
                let v = BigInt::from(forest_hom_count(p, g)?);
                match brute_hom(p, g, &Limits::default()) {
                    Ok(o) => {
                        engine_sum += &v;
                        oracle_sum += BigInt::from(o);
                    }
                    Err(Error::GuardExceeded { .. }) => {}
                    Err(e) => return Err(e),
                }
                forest += coeff * v;
            } else {
                core += coeff * hom(p, g)?;
            }
        }
        let k = self.k;
        ids.push(IdentityCheck::new(
            format!("forest terms of C{k} on {} vertices: tree DP = oracle where enumerable", g.n()),
            engine_sum,
            oracle_sum,
        ));
        ids.push(IdentityCheck::new(
            format!("C{k}: coefficients of non-forest quotients other than C{k} vanish"),
            self.off_identity.clone(),
            0,
        ));
        Ok((forest, core))
    }
}

/// One isomorphism class of quotients in a census.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuotientClass {
    pub pattern: String,
    pub partitions: usize,
    pub forest: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuotientCensus {
    pub k: usize,
    pub partitions: usize,
    pub with_loops: usize,
    pub classes: Vec<QuotientClass>,
    pub checks: Vec<IdentityCheck>,
}

impl QuotientCensus {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn count_of(&self, h: &Pattern) -> usize {
        let key = h.canonical().to_string();
        self.classes
            .iter()
            .find(|c| c.pattern == key)
            .map_or(0, |c| c.partitions)
    }
}

/// Classifies all quotients of `C_k` and checks the structural facts about
/// them used by the cycle reductions.
pub fn quotient_census(k: usize) -> Result<QuotientCensus> {
    if !(4..=9).contains(&k) {
        return Err(Error::InvalidInput(format!("census cycle length must be in 4..=9, got {k}")));
    }
    let cycle = c(k);
    let all = enumerate_partitions_of(k, &Limits::default())?;
    let mut with_loops = 0;
    let mut classes: BTreeMap<Pattern, (usize, bool)> = BTreeMap::new();
    let mut simple: Vec<(Partition, Pattern)> = Vec::new();
    for p in &all {
        let q = quotient(&cycle, p)?;
        if q.has_loop {
            with_loops += 1;
            continue;
        }
        let canon = q.graph.canonical();
        classes.entry(canon.clone()).or_insert((0, q.graph.is_forest())).0 += 1;
        simple.push((p.clone(), canon));
    }
    let count = |h: &Pattern| classes.get(&h.canonical()).map_or(0, |e| e.0);
    let mut checks = vec![IdentityCheck::new(
        format!("#{{P : C{k}/P = C{}}} = 0", k - 1),
        count(&c(k - 1)),
        0,
    )];
    if k >= 5 {
        let pend = c_pend(k - 2).canonical();
        let short = c(k - 2).canonical();
        checks.push(IdentityCheck::new(format!("#{{P : C{k}/P = C'{}}} = {k}", k - 2), count(&pend), k));
        checks.push(IdentityCheck::new(format!("#{{P : C{k}/P = C{}}} = {k}", k - 2), count(&short), k));
        let ones: Vec<&Partition> = simple.iter().filter(|(_, q)| *q == pend).map(|(p, _)| p).collect();
        let twos: Vec<&Partition> = simple.iter().filter(|(_, q)| *q == short).map(|(p, _)| p).collect();
        let refining = |a: &Partition, b: &Partition| a.refines(b).unwrap_or(false);
        let up = ones
            .iter()
            .filter(|p| twos.iter().filter(|q| refining(p, q)).count() == 2)
            .count();
        let down = twos
            .iter()
            .filter(|q| ones.iter().filter(|p| refining(p, q)).count() == 2)
            .count();
        checks.push(IdentityCheck::new(
            format!("#{{C'{} partitions below exactly 2 C{} partitions}} = {k}", k - 2, k - 2),
            up,
            ones.len(),
        ));
        checks.push(IdentityCheck::new(
            format!("#{{C{} partitions above exactly 2 C'{} partitions}} = {k}", k - 2, k - 2),
            down,
            twos.len(),
        ));
    }
    if k % 2 == 0 {
        for ell in (k / 2 + 1..k).filter(|l| l % 2 == 1) {
            let hits = simple
                .iter()
                .filter(|(_, q)| {
                    let odd: Vec<usize> = cycle_lengths(q).into_iter().filter(|l| l % 2 == 1).collect();
                    odd == [ell]
                })
                .count();
            checks.push(IdentityCheck::new(
                format!("#{{P : C{k}/P has a unique odd cycle, of length {ell}}} = 0"),
                hits,
                0,
            ));
        }
    }
    Ok(QuotientCensus {
        k,
        partitions: all.len(),
        with_loops,
        classes: classes
            .into_iter()
            .map(|(p, (n, forest))| QuotientClass {
                pattern: p.to_string(),
                partitions: n,
                forest,
            })
            .collect(),
        checks,
    })
}

/// Lengths of all simple cycles of a small graph, one entry per cycle.
pub fn cycle_lengths(h: &Pattern) -> Vec<usize> {
    fn walk(h: &Pattern, start: usize, v: usize, visited: u64, len: usize, out: &mut Vec<usize>) {
        for w in h.neighbors(v) {
            if w == start && len >= 3 {
                out.push(len);
            } else if w > start && visited & (1 << w) == 0 {
                walk(h, start, w, visited | 1 << w, len + 1, out);
            }
        }
    }
    let mut out = Vec::new();
    for s in 0..h.n() {
        walk(h, s, s, 1 << s, 1, &mut out);
    }
    // each cycle was traversed in both directions
    out.sort_unstable();
    out.into_iter().step_by(2).collect()
}

/// Budget of random helper candidates per matrix row.
pub const HELPER_BUDGET: usize = 10_000;
const HELPER_SEED: u64 = 0x5eed_f00d;

fn hom_small(h: &Pattern, f: &Graph) -> Result<BigInt> {
    // multiplicative over components keeps the brute-force search anchored
    let mut total = BigInt::one();
    for comp in h.components() {
        total *= BigInt::from(brute_hom(&h.induced(comp), f, &Limits::default())?);
        if total.is_zero() {
            break;
        }
    }
    Ok(total)
}

/// Picks helper graphs `F_1..F_k` (connected, at most `max v(H_j) + 2`
/// vertices) whose matrix `M[i][j] = c_j * hom(H_j, F_i)` is invertible.
pub fn find_helper_graphs(lc: &LinearCombination) -> Result<(Vec<Graph>, Vec<Vec<BigInt>>)> {
    let terms: Vec<(&Pattern, &SignedCount)> = lc.terms().collect();
    let k = terms.len();
    let max_v = terms.iter().map(|(p, _)| p.n()).max().unwrap_or(0) + 2;
    let mut r = rng(HELPER_SEED);
    let mut helpers = Vec::with_capacity(k);
    let mut rows = Vec::with_capacity(k);
    // reduced copies of the accepted rows, each with its pivot column
    let mut echelon: Vec<(usize, Vec<BigRational>)> = Vec::new();
    while helpers.len() < k {
        let mut accepted = false;
        for _ in 0..HELPER_BUDGET {
            let s = r.gen_range(1..=max_v);
            let p = r.gen_range(0.2..0.95);
            let f = gnp(s, p, &mut r);
            if !is_connected(&f) {
                continue;
            }
            let row: Vec<BigInt> = terms
                .iter()
                .map(|(h, c)| Ok(*c * hom_small(h, &f)?))
                .collect::<Result<_>>()?;
            let mut reduced: Vec<BigRational> = row.iter().cloned().map(BigRational::from_integer).collect();
            for (pivot, e) in &echelon {
                if !reduced[*pivot].is_zero() {
                    let factor = &reduced[*pivot] / &e[*pivot];
                    for (x, y) in reduced.iter_mut().zip(e) {
                        *x -= &factor * y;
                    }
                }
            }
            if let Some(pivot) = reduced.iter().position(|x| !x.is_zero()) {
                echelon.push((pivot, reduced));
                helpers.push(f);
                rows.push(row);
                accepted = true;
                break;
            }
        }
        if !accepted {
            return Err(Error::SearchExhausted {
                tried: HELPER_BUDGET,
                found: helpers.len(),
                needed: k,
            });
        }
    }
    Ok((helpers, rows))
}

fn is_connected(g: &Graph) -> bool {
    if g.n() == 0 {
        return false;
    }
    let mut seen = vec![false; g.n()];
    let mut stack = vec![0usize];
    seen[0] = true;
    let mut count = 1;
    while let Some(v) = stack.pop() {
        for &w in g.neighbors(v) {
            if !seen[w as usize] {
                seen[w as usize] = true;
                count += 1;
                stack.push(w as usize);
            }
        }
    }
    count == g.n()
}

/// Exact solution of `m x = b` for square invertible `m`.
fn solve(m: &[Vec<BigInt>], b: &[BigInt]) -> Result<Vec<BigRational>> {
    let k = m.len();
    let mut a: Vec<Vec<BigRational>> = m
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            row.iter()
                .chain(std::iter::once(rhs))
                .cloned()
                .map(BigRational::from_integer)
                .collect()
        })
        .collect();
    for col in 0..k {
        let pivot = (col..k)
            .find(|&r| !a[r][col].is_zero())
            .ok_or_else(|| Error::ContractViolation("helper matrix is singular".into()))?;
        a.swap(col, pivot);
        let p = a[col][col].clone();
        for x in a[col].iter_mut() {
            *x /= &p;
        }
        for r in 0..k {
            if r != col && !a[r][col].is_zero() {
                let factor = a[r][col].clone();
                let (src, dst) = if r < col {
                    let (lo, hi) = a.split_at_mut(col);
                    (&hi[0], &mut lo[r])
                } else {
                    let (lo, hi) = a.split_at_mut(r);
                    (&lo[col], &mut hi[0])
                };
                for (x, y) in dst.iter_mut().zip(src) {
                    *x -= &factor * y;
                }
            }
        }
    }
    Ok(a.into_iter().map(|row| row[k].clone()).collect())
}

/// Recovers `hom(H_j, g)` for every term of `lc` from values of the whole
/// combination on the tensor products `F_i x g`. `evaluator(lc, G)` must
/// return `sum_j c_j hom(H_j, G)`. Results follow `lc.terms()` order.
pub fn disentangle_linear_combination<E>(lc: &LinearCombination, g: &Graph, evaluator: E, limits: &Limits) -> Result<Vec<BigCount>>
where
    E: Fn(&LinearCombination, &Graph) -> Result<SignedCount>,
{
    let (helpers, m) = find_helper_graphs(lc)?;
    let mut b = Vec::with_capacity(helpers.len());
    for f in &helpers {
        let gi = tensor_product(f, g, limits.max_tensor_vertices)?;
        b.push(evaluator(lc, &gi)?);
    }
    solve(&m, &b)?
        .into_iter()
        .map(|x| {
            if !x.is_integer() || x.is_negative() {
                return Err(Error::ContractViolation(format!("recovered hom count {x} is not a natural number")));
            }
            Ok(x.to_integer().to_biguint().expect("nonnegative"))
        })
        .collect()
}

/// `hom(H_i, g)` for every induced subgraph class `H_i` of `h` (including
/// the empty graph), recovered from `hom(h, .)` alone on the hosts
/// `(F_i x g) + K_{v(h)}`.
pub fn recover_induced_subgraph_homs<E>(h: &Pattern, g: &Graph, hom_evaluator: E, limits: &Limits) -> Result<BTreeMap<Pattern, BigCount>>
where
    E: Fn(&Pattern, &Graph) -> Result<BigCount>,
{
    if h.n() > limits.max_pattern {
        return Err(Error::guard("pattern vertices", h.n(), limits.max_pattern));
    }
    let v = h.n();
    let clique = Graph::complete(v);
    let all = full_mask(v);
    let mut lc = LinearCombination::new();
    let mut mask: u64 = 0;
    loop {
        let outside = h.induced(all & !mask);
        let weight = hom_small(&outside, &clique)?;
        lc.add_term(&h.induced(mask), weight);
        if mask == all {
            break;
        }
        mask = (mask | !all).wrapping_add(1) & all;
    }
    let patterns: Vec<Pattern> = lc.terms().map(|(p, _)| p.clone()).collect();
    if v == 0 {
        return Ok(patterns.into_iter().map(|p| (p, BigCount::one())).collect());
    }
    let values = disentangle_linear_combination(
        &lc,
        g,
        |_, host| Ok(hom_evaluator(h, &join_with_clique(host, v)?)?.into()),
        limits,
    )?;
    Ok(patterns.into_iter().zip(values).collect())
}
