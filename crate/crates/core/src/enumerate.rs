//! Exhaustive enumeration along the semigroup tree and the implication sweep.
//!
//! The children of `S` are the semigroups `S \ {g}` for minimal generators
//! `g > f(S)`. Every numerical semigroup of genus `h` appears exactly once at
//! depth `h`.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::classify::{conditions, evaluate, free_witness, Class, ClassReport, Implication, IMPLICATIONS};
use crate::semigroup::NumericalSemigroup;

/// A tree node: minimal generators and gaps, both ascending.
#[derive(Clone, Debug)]
struct Node {
    generators: Vec<u64>,
    gaps: Vec<u64>,
}

impl Node {
    fn root() -> Self {
        Node { generators: vec![1], gaps: Vec::new() }
    }

    fn genus(&self) -> usize {
        self.gaps.len()
    }

    fn frobenius(&self) -> i64 {
        self.gaps.last().map_or(-1, |&g| g as i64)
    }

    fn contains(&self, x: u64) -> bool {
        self.gaps.binary_search(&x).is_err()
    }

    /// Children in ascending order of the removed generator.
    fn children(&self) -> Vec<Node> {
        let f = self.frobenius();
        self.generators
            .iter()
            .filter(|&&g| g as i64 > f)
            .map(|&g| self.remove(g))
            .collect()
    }

    /// `S \ {g}` for a minimal generator `g > f(S)`.
    fn remove(&self, g: u64) -> Node {
        let mut gaps = self.gaps.clone();
        gaps.push(g);
        let child = Node { generators: Vec::new(), gaps };
        // The minimal generators of S \ {g} lie among the old ones, g + old, 2g and 3g.
        let mut candidates: Vec<u64> = self.generators.iter().filter(|&&x| x != g).copied().collect();
        candidates.extend(self.generators.iter().map(|&x| x + g));
        candidates.extend([2 * g, 3 * g]);
        candidates.sort_unstable();
        candidates.dedup();
        let generators = candidates
            .into_iter()
            .filter(|&c| child.contains(c) && (1..=c / 2).all(|a| !(child.contains(a) && child.contains(c - a))))
            .collect();
        Node { generators, ..child }
    }

    fn semigroup(&self) -> NumericalSemigroup {
        let s = NumericalSemigroup::from_generators(&self.generators).expect("tree node is a numerical semigroup");
        debug_assert_eq!(s.generators(), &self.generators[..]);
        debug_assert_eq!(s.genus(), self.genus() as u64);
        s
    }
}

/// Depth-first iterator over all semigroups of genus at most `g_max`.
#[derive(Clone, Debug)]
pub struct SemigroupTree {
    g_max: usize,
    stack: Vec<Node>,
}

impl SemigroupTree {
    fn from_roots(mut roots: Vec<Node>, g_max: usize) -> Self {
        roots.reverse();
        SemigroupTree { g_max, stack: roots }
    }
}

impl Iterator for SemigroupTree {
    type Item = NumericalSemigroup;

    fn next(&mut self) -> Option<NumericalSemigroup> {
        let node = self.stack.pop()?;
        if node.genus() < self.g_max {
            self.stack.extend(node.children().into_iter().rev());
        }
        Some(node.semigroup())
    }
}

/// Every numerical semigroup of genus `≤ g_max`, each exactly once, in
/// depth-first pre-order starting from `ℕ`.
pub fn enumerate_by_genus(g_max: usize) -> SemigroupTree {
    SemigroupTree::from_roots(vec![Node::root()], g_max)
}

/// Number of semigroups of each genus `0..=g_max`.
pub fn count_by_genus(g_max: usize) -> Vec<u64> {
    let mut counts = vec![0u64; g_max + 1];
    let mut stack = vec![Node::root()];
    while let Some(node) = stack.pop() {
        counts[node.genus()] += 1;
        if node.genus() < g_max {
            stack.extend(node.children());
        }
    }
    counts
}

/// A semigroup named by its generators and genus; ordered by genus first.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Sample {
    pub genus: u64,
    pub generators: Vec<u64>,
}

impl Sample {
    pub fn of(s: &NumericalSemigroup) -> Self {
        Sample { genus: s.genus(), generators: s.generators().to_vec() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Violation {
    pub semigroup: Sample,
    pub implication: Implication,
}

/// Equivalent conditions that disagreed on one semigroup.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Disagreement {
    pub semigroup: Sample,
    pub class: String,
    pub conditions: Vec<(String, bool)>,
}

/// The minimal semigroup other than `ℕ` in the target but not the source
/// class of an arrow.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StrictnessWitness {
    pub implication: Implication,
    pub witness: Option<Sample>,
}

/// Aggregate of a sweep. Merging is associative and commutative.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub bound: usize,
    pub total: u64,
    pub per_genus: Vec<u64>,
    pub class_counts: BTreeMap<Class, u64>,
    pub violations: Vec<Violation>,
    pub disagreements: Vec<Disagreement>,
    pub strictness: Vec<StrictnessWitness>,
}

impl SweepReport {
    pub fn new(bound: usize) -> Self {
        SweepReport {
            bound,
            total: 0,
            per_genus: vec![0; bound + 1],
            class_counts: Class::ALL.iter().map(|&c| (c, 0)).collect(),
            violations: Vec::new(),
            disagreements: Vec::new(),
            strictness: IMPLICATIONS.iter().map(|&implication| StrictnessWitness { implication, witness: None }).collect(),
        }
    }

    /// Adds one semigroup with its class report.
    pub fn record(&mut self, s: &NumericalSemigroup, report: &ClassReport) {
        let sample = Sample::of(s);
        self.total += 1;
        self.per_genus[sample.genus as usize] += 1;
        for class in Class::ALL {
            if report.flags.get(class) {
                *self.class_counts.get_mut(&class).expect("all classes present") += 1;
            }
        }
        for implication in report.flags.violations() {
            self.violations.push(Violation { semigroup: sample.clone(), implication });
        }
        for entry in &mut self.strictness {
            let imp = entry.implication;
            if !s.is_naturals() && report.flags.get(imp.to) && !report.flags.get(imp.from) {
                offer(&mut entry.witness, &sample);
            }
        }
        for c in check_conditions(s) {
            self.disagreements.push(Disagreement {
                semigroup: sample.clone(),
                class: c.class.to_string(),
                conditions: c.conditions.iter().map(|&(l, v)| (l.to_string(), v)).collect(),
            });
        }
        self.violations.sort();
        self.disagreements.sort();
    }

    pub fn merge(mut self, other: SweepReport) -> SweepReport {
        assert_eq!(self.bound, other.bound, "merging sweeps with different bounds");
        self.total += other.total;
        for (a, b) in self.per_genus.iter_mut().zip(&other.per_genus) {
            *a += b;
        }
        for (class, n) in other.class_counts {
            *self.class_counts.entry(class).or_default() += n;
        }
        self.violations.extend(other.violations);
        self.violations.sort();
        self.disagreements.extend(other.disagreements);
        self.disagreements.sort();
        for (mine, theirs) in self.strictness.iter_mut().zip(other.strictness) {
            if let Some(w) = theirs.witness {
                offer(&mut mine.witness, &w);
            }
        }
        self
    }

    pub fn count(&self, class: Class) -> u64 {
        self.class_counts.get(&class).copied().unwrap_or(0)
    }

    pub fn witness(&self, from: Class, to: Class) -> Option<&Sample> {
        self.strictness
            .iter()
            .find(|w| w.implication.from == from && w.implication.to == to)
            .and_then(|w| w.witness.as_ref())
    }
}

fn offer(slot: &mut Option<Sample>, candidate: &Sample) {
    if slot.as_ref().is_none_or(|cur| candidate < cur) {
        *slot = Some(candidate.clone());
    }
}

/// Characterizations of `S` whose conditions disagree.
///
/// Freeness is checked on every arrangement when `ν ≤ 5`, otherwise on the
/// ascending and descending ones and on the free witness.
pub fn check_conditions(s: &NumericalSemigroup) -> Vec<conditions::Characterization> {
    let mut bad: Vec<_> = conditions::all(s).into_iter().filter(|c| !c.consistent()).collect();
    let gens = s.generators();
    let mut orders = Vec::new();
    if gens.len() <= 5 {
        permutations(gens, &mut orders);
    } else {
        orders.push(gens.to_vec());
        orders.push(gens.iter().rev().copied().collect());
    }
    let witness = free_witness(s);
    if let Some(w) = &witness {
        let c = conditions::free_for(s, &w.order);
        if c.value() != Some(true) {
            bad.push(c);
        }
        orders.push(w.order.clone());
    }
    for order in &orders {
        let c = conditions::free_for(s, order);
        if !c.consistent() || (c.conditions[0].1 && witness.is_none()) {
            bad.push(c);
        }
    }
    bad
}

/// All orderings of `items`, in lexicographic order of positions.
pub fn permutations(items: &[u64], out: &mut Vec<Vec<u64>>) {
    fn go(rest: &mut Vec<u64>, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if rest.is_empty() {
            out.push(cur.clone());
            return;
        }
        for i in 0..rest.len() {
            let x = rest.remove(i);
            cur.push(x);
            go(rest, cur, out);
            cur.pop();
            rest.insert(i, x);
        }
    }
    go(&mut items.to_vec(), &mut Vec::new(), out);
}

fn sweep_tree(tree: SemigroupTree, bound: usize) -> SweepReport {
    tree.fold(SweepReport::new(bound), |mut acc, s| {
        let report = evaluate(&s);
        acc.record(&s, &report);
        acc
    })
}

/// Classifies every semigroup of genus `≤ g_max` on one thread.
pub fn sweep(g_max: usize) -> SweepReport {
    sweep_tree(enumerate_by_genus(g_max), g_max)
}

/// As [`sweep`], with the depth-2 subtrees spread over the rayon pool. The
/// result equals the serial one.
pub fn sweep_parallel(g_max: usize) -> SweepReport {
    let split = g_max.min(2);
    let mut top = SweepReport::new(g_max);
    let mut frontier = vec![Node::root()];
    for _ in 0..split {
        for n in &frontier {
            let s = n.semigroup();
            top.record(&s, &evaluate(&s));
        }
        frontier = frontier.iter().flat_map(Node::children).collect();
    }
    frontier
        .into_par_iter()
        .map(|n| sweep_tree(SemigroupTree::from_roots(vec![n], g_max), g_max))
        .reduce(|| SweepReport::new(g_max), SweepReport::merge)
        .merge(top)
}
