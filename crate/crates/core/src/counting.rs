//! Embedding and induced counts from homomorphism counts.
//!
//! `inj(H, G) = sum_P mu(P) hom(H/P, G)` over partitions `P` of `V(H)`
//! whose quotient has no loop, and `ind(H, G) = sum_E (-1)^|E| inj(H ∪ E, G)`
//! over sets `E` of non-edges. Both are collected into a
//! [`LinearCombination`] of pairwise non-isomorphic patterns before any
//! host is touched.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::bigcount::{BigCount, SignedCount};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::hom::{hom_count_on, DispatchPath, Host, Policy};
use crate::pattern::{count_automorphisms, enumerate_partitions, enumerate_supergraphs, mobius_partition, quotient, Pattern};
use crate::Limits;

/// `sum c_i hom(H_i, .)` with canonical, pairwise non-isomorphic `H_i` and
/// nonzero `c_i`, kept sorted by pattern.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LinearCombination {
    terms: BTreeMap<Pattern, SignedCount>,
}

impl LinearCombination {
    pub fn new() -> LinearCombination {
        LinearCombination::default()
    }

    /// Adds `coeff * hom(pattern, .)`, merging with an isomorphic term.
    pub fn add_term(&mut self, pattern: &Pattern, coeff: impl Into<SignedCount>) {
        self.add_canonical(pattern.canonical(), coeff.into());
    }

    fn add_canonical(&mut self, canonical: Pattern, coeff: SignedCount) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(canonical) {
            Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += coeff;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    /// Adds `factor * other`.
    pub fn add_scaled(&mut self, other: &LinearCombination, factor: &SignedCount) {
        for (p, c) in &other.terms {
            self.add_canonical(p.clone(), c * factor);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Pattern, &SignedCount)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, pattern: &Pattern) -> Option<&SignedCount> {
        self.terms.get(&pattern.canonical())
    }
}

/// The combination expressing `inj(h, .)` through homomorphism counts of
/// the loop-free quotients of `h`.
pub fn inj_combination(h: &Pattern, limits: &Limits) -> Result<LinearCombination> {
    let mut lc = LinearCombination::new();
    for p in enumerate_partitions(h, limits)? {
        let q = quotient(h, &p)?;
        if q.has_loop {
            continue;
        }
        lc.add_term(&q.graph, mobius_partition(&p));
    }
    Ok(lc)
}

/// The combination expressing `ind(h, .)` through homomorphism counts.
pub fn ind_combination(h: &Pattern, limits: &Limits) -> Result<LinearCombination> {
    // group supergraphs by isomorphism class, then expand each class once
    let mut classes: BTreeMap<Pattern, SignedCount> = BTreeMap::new();
    for (sup, added) in enumerate_supergraphs(h, limits)? {
        let sign = if added % 2 == 0 { 1 } else { -1 };
        *classes.entry(sup.canonical()).or_default() += sign;
    }
    let mut lc = LinearCombination::new();
    for (class, weight) in classes {
        if weight.is_zero() {
            continue;
        }
        lc.add_scaled(&inj_combination(&class, limits)?, &weight);
    }
    Ok(lc)
}

/// Per-term evaluation record.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TermReport {
    pub pattern: String,
    pub coefficient: String,
    pub hom: String,
    pub path: DispatchPath,
    pub warnings: Vec<String>,
}

/// Exact value of a linear combination together with how each term was
/// obtained.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Evaluation {
    #[serde(serialize_with = "as_decimal")]
    pub value: SignedCount,
    pub terms: Vec<TermReport>,
}

impl Evaluation {
    /// Patterns whose term fell back to brute force.
    pub fn fallbacks(&self) -> Vec<&str> {
        self.terms
            .iter()
            .filter(|t| t.path == DispatchPath::Oracle)
            .map(|t| t.pattern.as_str())
            .collect()
    }
}

fn as_decimal<S: serde::Serializer>(v: &SignedCount, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

/// `sum c_i hom(H_i, host)`, each term dispatched on its own.
pub fn evaluate_on(lc: &LinearCombination, host: &Host<'_>, policy: Policy, limits: &Limits) -> Result<Evaluation> {
    let terms: Vec<(&Pattern, &SignedCount)> = lc.terms().collect();
    let results = terms
        .par_iter()
        .map(|(p, _)| hom_count_on(p, host, policy, limits))
        .collect::<Result<Vec<_>>>()?;
    let mut value = SignedCount::zero();
    let mut reports = Vec::with_capacity(terms.len());
    for ((p, c), r) in terms.into_iter().zip(results) {
        value += c * BigInt::from(r.count.clone());
        reports.push(TermReport {
            pattern: p.to_string(),
            coefficient: c.to_string(),
            hom: r.count.to_string(),
            path: r.meta.path,
            warnings: r.meta.warnings,
        });
    }
    Ok(Evaluation { value, terms: reports })
}

pub fn evaluate_linear_combination(lc: &LinearCombination, g: &Graph, limits: &Limits) -> Result<SignedCount> {
    Ok(evaluate_on(lc, &Host::new(g), Policy::Auto, limits)?.value)
}

fn nonnegative(value: SignedCount, what: &str, h: &Pattern) -> Result<BigCount> {
    if value.is_negative() {
        return Err(Error::ContractViolation(format!(
            "{what} count for {h} came out negative ({value})"
        )));
    }
    Ok(value.to_biguint().expect("nonnegative"))
}

/// Which count to produce.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CountKind {
    Hom,
    Inj,
    Ind,
    /// Unlabelled copies: `inj / aut`, or `ind / aut` when induced.
    Copies { induced: bool },
}

/// A count with the evaluation trail behind it.
#[derive(Clone, Debug, PartialEq)]
pub struct CountReport {
    pub count: BigCount,
    pub evaluation: Evaluation,
}

pub fn count_on(kind: CountKind, h: &Pattern, host: &Host<'_>, policy: Policy, limits: &Limits) -> Result<CountReport> {
    let lc = match kind {
        CountKind::Hom => {
            let mut lc = LinearCombination::new();
            lc.add_term(h, 1);
            lc
        }
        CountKind::Inj | CountKind::Copies { induced: false } => inj_combination(h, limits)?,
        CountKind::Ind | CountKind::Copies { induced: true } => ind_combination(h, limits)?,
    };
    let evaluation = evaluate_on(&lc, host, policy, limits)?;
    let labelled = nonnegative(evaluation.value.clone(), "labelled", h)?;
    let count = match kind {
        CountKind::Copies { .. } => divide_by_automorphisms(labelled, h)?,
        _ => labelled,
    };
    Ok(CountReport { count, evaluation })
}

fn divide_by_automorphisms(labelled: BigCount, h: &Pattern) -> Result<BigCount> {
    let aut = count_automorphisms(h);
    if !(&labelled % &aut).is_zero() {
        return Err(Error::ContractViolation(format!(
            "{labelled} embeddings of {h} is not divisible by its {aut} automorphisms"
        )));
    }
    Ok(labelled / aut)
}

pub fn inj_count(h: &Pattern, g: &Graph, limits: &Limits) -> Result<BigCount> {
    Ok(count_on(CountKind::Inj, h, &Host::new(g), Policy::Auto, limits)?.count)
}

pub fn ind_count(h: &Pattern, g: &Graph, limits: &Limits) -> Result<BigCount> {
    Ok(count_on(CountKind::Ind, h, &Host::new(g), Policy::Auto, limits)?.count)
}

pub fn copy_count(h: &Pattern, g: &Graph, induced: bool, limits: &Limits) -> Result<BigCount> {
    Ok(count_on(CountKind::Copies { induced }, h, &Host::new(g), Policy::Auto, limits)?.count)
}
