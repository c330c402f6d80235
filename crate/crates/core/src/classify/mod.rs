//! The class predicates, their witnesses and the classification report.
//!
//! Conventions for `ℕ`: every class holds except "unique Betti element";
//! plane branch is reported as true (its growth condition is vacuous).

pub mod conditions;
mod sigma;

use std::collections::HashMap;

use num_bigint::BigUint;
use num_integer::Integer;
use serde::{Serialize, Serializer};

use crate::factorization::is_m_pure;
use crate::gluing::GluingNode;
use crate::invariants::{alpha_profile, beta_profile, gamma_profile, phi_profile, tau_profile, Arrangement};
use crate::semigroup::NumericalSemigroup;

pub use sigma::{sigma_arrangement, sigma_relations};

/// The ten classes tracked by a [`ClassReport`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Class {
    PlaneBranch,
    UniqueBetti,
    Telescopic,
    AlphaRect,
    BetaRect,
    GammaRect,
    Free,
    CompleteIntersection,
    Symmetric,
    MPure,
}

impl Class {
    pub const ALL: [Class; 10] = [
        Class::PlaneBranch,
        Class::UniqueBetti,
        Class::Telescopic,
        Class::AlphaRect,
        Class::BetaRect,
        Class::GammaRect,
        Class::Free,
        Class::CompleteIntersection,
        Class::Symmetric,
        Class::MPure,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Class::PlaneBranch => "plane_branch",
            Class::UniqueBetti => "unique_betti",
            Class::Telescopic => "telescopic",
            Class::AlphaRect => "alpha_rect",
            Class::BetaRect => "beta_rect",
            Class::GammaRect => "gamma_rect",
            Class::Free => "free",
            Class::CompleteIntersection => "complete_intersection",
            Class::Symmetric => "symmetric",
            Class::MPure => "m_pure",
        }
    }
}

/// An implication `from ⇒ to` between classes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Implication {
    pub from: Class,
    pub to: Class,
}

impl std::fmt::Display for Implication {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} => {}", self.from.name(), self.to.name())
    }
}

impl Serialize for Implication {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

const fn arrow(from: Class, to: Class) -> Implication {
    Implication { from, to }
}

/// The implication diagram, plus complete intersection ⇒ symmetric.
pub const IMPLICATIONS: [Implication; 10] = [
    arrow(Class::PlaneBranch, Class::Telescopic),
    arrow(Class::PlaneBranch, Class::AlphaRect),
    arrow(Class::UniqueBetti, Class::Telescopic),
    arrow(Class::UniqueBetti, Class::AlphaRect),
    arrow(Class::Telescopic, Class::BetaRect),
    arrow(Class::AlphaRect, Class::BetaRect),
    arrow(Class::BetaRect, Class::GammaRect),
    arrow(Class::GammaRect, Class::Free),
    arrow(Class::Free, Class::CompleteIntersection),
    arrow(Class::CompleteIntersection, Class::Symmetric),
];

fn volume_is(values: &[u64], target: u64) -> bool {
    crate::invariants::box_volume(values) == Some(target as u128)
}

/// Telescopic: `m = Π (τ_i + 1)`.
pub fn is_telescopic(s: &NumericalSemigroup) -> bool {
    if s.is_naturals() {
        return true;
    }
    let tau = tau_profile(s).expect("τ profile");
    let result = volume_is(&tau.values, s.multiplicity());
    debug_assert!(conditions::telescopic(s).consistent(), "{s}: {:?}", conditions::telescopic(s));
    result
}

/// Telescopic with `(τ_i + 1) g_i < g_{i+1}` for `i = 2..ν−1`.
pub fn is_plane_branch(s: &NumericalSemigroup) -> bool {
    if s.is_naturals() {
        return true;
    }
    if !is_telescopic(s) {
        return false;
    }
    let tau = tau_profile(s).expect("τ profile");
    let g = s.generators();
    (1..g.len() - 1).all(|i| (tau.values[i - 1] as u128 + 1) * (g[i] as u128) < g[i + 1] as u128)
}

/// `m = Π (α_i + 1)`.
pub fn is_alpha_rectangular(s: &NumericalSemigroup) -> bool {
    if s.is_naturals() {
        return true;
    }
    let alpha = alpha_profile(s).expect("α profile");
    let result = volume_is(&alpha.values, s.multiplicity());
    debug_assert!(conditions::alpha(s).consistent(), "{s}: {:?}", conditions::alpha(s));
    result
}

/// `m = Π (β_i + 1)`.
pub fn is_beta_rectangular(s: &NumericalSemigroup) -> bool {
    if s.is_naturals() {
        return true;
    }
    let beta = beta_profile(s).expect("β profile");
    let result = volume_is(&beta.values, s.multiplicity());
    debug_assert!(conditions::beta(s).consistent(), "{s}: {:?}", conditions::beta(s));
    result
}

/// `m = Π (γ_i + 1)`.
pub fn is_gamma_rectangular(s: &NumericalSemigroup) -> bool {
    if s.is_naturals() {
        return true;
    }
    let gamma = gamma_profile(s).expect("γ profile");
    let result = volume_is(&gamma.values, s.multiplicity());
    debug_assert!(conditions::gamma(s).consistent(), "{s}: {:?}", conditions::gamma(s));
    result
}

/// An arrangement with `n_1 = Π (φ_i + 1)`, if `S` is free.
///
/// Uses the gluing characterization: `S` of embedding dimension `ν` is free
/// iff it glues `ℕ` (scaled by the chosen last generator) to a free semigroup
/// of embedding dimension `ν − 1`.
pub fn free_witness(s: &NumericalSemigroup) -> Option<Arrangement> {
    if s.is_naturals() {
        return Some(Arrangement { order: vec![1], phi: vec![], cbar: vec![] });
    }
    if !s.is_symmetric() {
        return None;
    }
    let mut memo = HashMap::new();
    let order = free_order(s.generators(), &mut memo)?;
    let arrangement = phi_profile(s, &order).expect("free order is a permutation");
    debug_assert!(arrangement.is_free(), "{s}: {arrangement:?}");
    Some(arrangement)
}

fn free_order(gens: &[u64], memo: &mut HashMap<Vec<u64>, Option<Vec<u64>>>) -> Option<Vec<u64>> {
    if gens.len() == 1 {
        return Some(gens.to_vec());
    }
    if let Some(hit) = memo.get(gens) {
        return hit.clone();
    }
    let mut found = None;
    for k in (0..gens.len()).rev() {
        let others: Vec<u64> = gens.iter().enumerate().filter(|&(j, _)| j != k).map(|(_, &g)| g).collect();
        let d = others.iter().fold(0u64, |a, &g| a.gcd(&g));
        if d < 2 {
            continue;
        }
        let scaled: Vec<u64> = others.iter().map(|g| g / d).collect();
        let t = NumericalSemigroup::from_generators(&scaled).expect("coprime after scaling");
        if t.generators().len() != scaled.len() || !t.contains(gens[k] as i64) {
            continue;
        }
        if let Some(inner) = free_order(t.generators(), memo) {
            let mut order: Vec<u64> = inner.iter().map(|x| x * d).collect();
            order.push(gens[k]);
            found = Some(order);
            break;
        }
    }
    memo.insert(gens.to_vec(), found.clone());
    found
}

/// Pairwise coprime `a_1, …, a_ν > 1` with `g_i = Π_{j≠i} a_j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BettiWitness {
    pub a: Vec<u64>,
}

/// The arithmetic witness of a unique Betti element, if one exists.
///
/// With `P = Π g_i`, necessarily `P = A^{ν−1}` where `A = Π a_j`, and then
/// `a_i = A / g_i`. The product is taken in arbitrary precision.
pub fn unique_betti_witness(s: &NumericalSemigroup) -> Option<BettiWitness> {
    let gens = s.generators();
    let nu = gens.len();
    if nu < 2 {
        return None;
    }
    let product: BigUint = gens.iter().map(|&g| BigUint::from(g)).product();
    let root = product.nth_root((nu - 1) as u32);
    if root.pow((nu - 1) as u32) != product {
        return None;
    }
    let mut a = Vec::with_capacity(nu);
    for &g in gens {
        let (q, r) = root.div_rem(&BigUint::from(g));
        if r != BigUint::ZERO {
            return None;
        }
        let q: u64 = q.try_into().ok()?;
        if q < 2 {
            return None;
        }
        a.push(q);
    }
    for i in 0..nu {
        for j in i + 1..nu {
            if a[i].gcd(&a[j]) != 1 {
                return None;
            }
        }
    }
    let reproduces = (0..nu).all(|i| {
        let p: BigUint = (0..nu).filter(|&j| j != i).map(|j| BigUint::from(a[j])).product();
        p == BigUint::from(gens[i])
    });
    reproduces.then_some(BettiWitness { a })
}

/// A gluing decomposition tree, if `S` is a complete intersection.
///
/// Embedding dimension at most two is a leaf. Otherwise bipartitions
/// `{A, B}` of the generators are tried by increasing `|A|`, then
/// lexicographically, accepting `S = d_A·S_A + d_B·S_B` when `d_B` is a
/// non-generator element of `S_A = ⟨A/d_A⟩`, `d_A` one of `S_B`, and both
/// parts decompose recursively.
pub fn is_complete_intersection(s: &NumericalSemigroup) -> Option<GluingNode> {
    let mut memo = HashMap::new();
    ci_tree(s, &mut memo)
}

fn ci_tree(s: &NumericalSemigroup, memo: &mut HashMap<Vec<u64>, Option<GluingNode>>) -> Option<GluingNode> {
    let gens = s.generators();
    if gens.len() <= 2 {
        return Some(GluingNode::Leaf(s.clone()));
    }
    if let Some(hit) = memo.get(gens) {
        return hit.clone();
    }
    // Complete intersections are symmetric.
    if !s.is_symmetric() {
        memo.insert(gens.to_vec(), None);
        return None;
    }
    let nu = gens.len();
    let mut found = None;
    'search: for size in 1..=nu / 2 {
        for part in combinations(nu, size) {
            if 2 * size == nu && part[0] != 0 {
                continue;
            }
            let a: Vec<u64> = part.iter().map(|&j| gens[j]).collect();
            let b: Vec<u64> = (0..nu).filter(|j| !part.contains(j)).map(|j| gens[j]).collect();
            let da = a.iter().fold(0u64, |x, &g| x.gcd(&g));
            let db = b.iter().fold(0u64, |x, &g| x.gcd(&g));
            if da < 2 || db < 2 || da.gcd(&db) != 1 {
                continue;
            }
            let sa = scaled(&a, da);
            let sb = scaled(&b, db);
            if !is_interior(&sa, db) || !is_interior(&sb, da) {
                continue;
            }
            let Some(left) = ci_tree(&sa, memo) else { continue };
            let Some(right) = ci_tree(&sb, memo) else { continue };
            found = Some(GluingNode::Node {
                d2: da,
                left: Box::new(left),
                d1: db,
                right: Box::new(right),
            });
            break 'search;
        }
    }
    memo.insert(gens.to_vec(), found.clone());
    found
}

fn scaled(gens: &[u64], d: u64) -> NumericalSemigroup {
    let v: Vec<u64> = gens.iter().map(|g| g / d).collect();
    NumericalSemigroup::from_generators(&v).expect("coprime after scaling")
}

/// `d ∈ S` and `d` is not a minimal generator.
pub(crate) fn is_interior(s: &NumericalSemigroup, d: u64) -> bool {
    d > 0 && s.contains(d as i64) && !s.generators().contains(&d)
}

/// Index subsets of `0..n` of the given size, in lexicographic order.
fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// The ten class flags, in report order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Flags {
    pub plane_branch: bool,
    pub unique_betti: bool,
    pub telescopic: bool,
    pub alpha_rect: bool,
    pub beta_rect: bool,
    pub gamma_rect: bool,
    pub free: bool,
    pub complete_intersection: bool,
    pub symmetric: bool,
    pub m_pure: bool,
}

impl Flags {
    pub fn get(&self, class: Class) -> bool {
        match class {
            Class::PlaneBranch => self.plane_branch,
            Class::UniqueBetti => self.unique_betti,
            Class::Telescopic => self.telescopic,
            Class::AlphaRect => self.alpha_rect,
            Class::BetaRect => self.beta_rect,
            Class::GammaRect => self.gamma_rect,
            Class::Free => self.free,
            Class::CompleteIntersection => self.complete_intersection,
            Class::Symmetric => self.symmetric,
            Class::MPure => self.m_pure,
        }
    }

    /// Implications of the diagram that these flags violate.
    pub fn violations(&self) -> Vec<Implication> {
        IMPLICATIONS
            .iter()
            .copied()
            .filter(|imp| self.get(imp.from) && !self.get(imp.to))
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witnesses {
    #[serde(rename = "free_order", serialize_with = "free_order_json")]
    pub free: Option<Arrangement>,
    #[serde(rename = "betti_a", serialize_with = "betti_json")]
    pub betti: Option<BettiWitness>,
    pub ci_tree: Option<GluingNode>,
}

fn free_order_json<S: Serializer>(v: &Option<Arrangement>, s: S) -> Result<S::Ok, S::Error> {
    v.as_ref().map(|a| &a.order).serialize(s)
}

fn betti_json<S: Serializer>(v: &Option<BettiWitness>, s: S) -> Result<S::Ok, S::Error> {
    v.as_ref().map(|b| &b.a).serialize(s)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassReport {
    pub generators: Vec<u64>,
    pub flags: Flags,
    pub witnesses: Witnesses,
}

/// Evaluates every flag and witness without checking the implications.
pub fn evaluate(s: &NumericalSemigroup) -> ClassReport {
    let free = free_witness(s);
    let betti = unique_betti_witness(s);
    let ci_tree = is_complete_intersection(s);
    let flags = Flags {
        plane_branch: is_plane_branch(s),
        unique_betti: betti.is_some(),
        telescopic: is_telescopic(s),
        alpha_rect: is_alpha_rectangular(s),
        beta_rect: is_beta_rectangular(s),
        gamma_rect: is_gamma_rectangular(s),
        free: free.is_some(),
        complete_intersection: ci_tree.is_some(),
        symmetric: s.is_symmetric(),
        m_pure: is_m_pure(s),
    };
    ClassReport {
        generators: s.generators().to_vec(),
        flags,
        witnesses: Witnesses { free, betti, ci_tree },
    }
}

/// Classifies `S`.
///
/// # Panics
///
/// If the flags violate the implication diagram; that would mean a bug in
/// one of the predicates.
pub fn classify(s: &NumericalSemigroup) -> ClassReport {
    let report = evaluate(s);
    let violations = report.flags.violations();
    assert!(
        violations.is_empty(),
        "implication violated for ⟨{s}⟩: {}",
        violations.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
    );
    report
}
