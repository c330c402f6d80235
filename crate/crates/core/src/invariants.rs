//! The per-generator invariants `τ`, `α`, `β`, `γ`, the arrangement-dependent
//! `φ` and `c̄`, and the rectangular box sets they span.
//!
//! Profiles are indexed by the ascending minimal generators `g_2 < … < g_ν`;
//! `values[0]` belongs to `g_2`. The multiplicity `g_1` has no entry.

use std::collections::BTreeSet;

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum InvariantKind {
    Tau,
    Alpha,
    Beta,
    Gamma,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantProfile {
    pub kind: InvariantKind,
    /// `values[i - 2]` is the invariant of `g_i`.
    pub values: Vec<u64>,
}

impl InvariantProfile {
    /// `Π (values_i + 1)`, or `None` on overflow.
    pub fn box_volume(&self) -> Option<u128> {
        box_volume(&self.values)
    }

    /// `Σ values_i · g_i`.
    pub fn weighted_sum(&self, s_group: &NumericalSemigroup) -> u128 {
        weighted_sum(&self.values, &s_group.generators()[1..])
    }
}

pub(crate) fn box_volume(values: &[u64]) -> Option<u128> {
    values
        .iter()
        .try_fold(1u128, |acc, &v| acc.checked_mul(v as u128 + 1))
}

pub(crate) fn weighted_sum(values: &[u64], gens: &[u64]) -> u128 {
    values
        .iter()
        .zip(gens)
        .map(|(&v, &g)| v as u128 * g as u128)
        .sum()
}

/// A rearrangement `n_1, …, n_ν` of the minimal generators with its `φ_i`
/// and `c̄_i` (`i = 2..ν`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Arrangement {
    pub order: Vec<u64>,
    pub phi: Vec<u64>,
    pub cbar: Vec<u64>,
}

impl Arrangement {
    /// `n_1 = Π (φ_i + 1)`.
    pub fn is_free(&self) -> bool {
        box_volume(&self.phi) == Some(self.order[0] as u128)
    }

    /// Positions `σ(i)` (0-based) of each `n_i` among the ascending generators.
    pub fn permutation(&self, s_group: &NumericalSemigroup) -> Vec<usize> {
        let gens = s_group.generators();
        self.order
            .iter()
            .map(|n| gens.binary_search(n).expect("arrangement of the generators"))
            .collect()
    }
}

/// The submonoid `⟨n_1, …, n_k⟩ ⊆ ℕ`, possibly with `gcd > 1`, stored as
/// `d · ⟨n_1/d, …, n_k/d⟩`.
#[derive(Clone, Debug)]
pub(crate) struct Submonoid {
    scale: u64,
    inner: NumericalSemigroup,
}

impl Submonoid {
    pub(crate) fn new(gens: &[u64]) -> Result<Self> {
        let scale = gens.iter().fold(0u64, |a, &g| a.gcd(&g));
        let scaled: Vec<u64> = gens.iter().map(|g| g / scale).collect();
        Ok(Submonoid { scale, inner: NumericalSemigroup::from_generators(&scaled)? })
    }

    pub(crate) fn contains(&self, x: u64) -> bool {
        x.is_multiple_of(self.scale) && self.inner.contains((x / self.scale) as i64)
    }
}

/// `min{h ≥ 1 | h·n ∈ prefix}`. Terminates by `h = prefix[0]` at the latest.
fn first_multiple_in(prefix: &[u64], n: u64) -> Result<u64> {
    let monoid = Submonoid::new(prefix)?;
    let bound = prefix[0];
    for h in 1..=bound {
        let x = h.checked_mul(n).ok_or(Error::Overflow("prefix multiple"))?;
        if monoid.contains(x) {
            return Ok(h);
        }
    }
    Err(Error::InternalContradiction(format!(
        "no multiple of {n} up to {bound}·{n} lies in ⟨{prefix:?}⟩"
    )))
}

fn require_dimension(s_group: &NumericalSemigroup) -> Result<()> {
    if s_group.embedding_dimension() < 2 {
        Err(Error::EmbeddingDimensionOne)
    } else {
        Ok(())
    }
}

/// `φ_i` and `c̄_i` of the given arrangement of the minimal generators.
pub fn phi_profile(s_group: &NumericalSemigroup, order: &[u64]) -> Result<Arrangement> {
    require_dimension(s_group)?;
    let mut sorted = order.to_vec();
    sorted.sort_unstable();
    if sorted != s_group.generators() {
        return Err(Error::NotAPermutation);
    }
    let mut phi = Vec::with_capacity(order.len() - 1);
    let mut cbar = Vec::with_capacity(order.len() - 1);
    let mut d = order[0];
    for i in 1..order.len() {
        phi.push(first_multiple_in(&order[..i], order[i])? - 1);
        cbar.push(d / d.gcd(&order[i]));
        d = d.gcd(&order[i]);
    }
    Ok(Arrangement { order: order.to_vec(), phi, cbar })
}

/// `τ_i = min{h | h·g_i ∈ ⟨g_1, …, g_{i−1}⟩} − 1`.
pub fn tau_profile(s_group: &NumericalSemigroup) -> Result<InvariantProfile> {
    let arrangement = phi_profile(s_group, s_group.generators())?;
    Ok(InvariantProfile { kind: InvariantKind::Tau, values: arrangement.phi })
}

/// `max{h | cond(h)}` over `h` with `h·g ∈ Ap(S)`.
fn max_multiple<F>(s_group: &NumericalSemigroup, g: u64, cond: F) -> u64
where
    F: Fn(u64, u64) -> bool,
{
    // f + m bounds every Apéry element.
    let top = (s_group.frobenius() + s_group.multiplicity() as i64) as u64;
    (1..=top / g)
        .filter(|&h| s_group.in_apery(h * g) && cond(h, h * g))
        .max()
        .unwrap_or(0)
}

/// `α_i = max{h | h·g_i ∈ Ap(S)}`.
pub fn alpha_profile(s_group: &NumericalSemigroup) -> Result<InvariantProfile> {
    require_dimension(s_group)?;
    let values = s_group.generators()[1..]
        .iter()
        .map(|&g| max_multiple(s_group, g, |_, _| true))
        .collect();
    Ok(InvariantProfile { kind: InvariantKind::Alpha, values })
}

/// `β_i = max{h | h·g_i ∈ Ap(S), ord(h·g_i) = h}`.
pub fn beta_profile(s_group: &NumericalSemigroup) -> Result<InvariantProfile> {
    require_dimension(s_group)?;
    let fac = s_group.apery_factorizations();
    let values = s_group.generators()[1..]
        .iter()
        .map(|&g| max_multiple(s_group, g, |h, x| fac.get(x).expect("Apéry element").ord == h))
        .collect();
    Ok(InvariantProfile { kind: InvariantKind::Beta, values })
}

/// `γ_i`: as `β_i`, additionally requiring `h·g_i` to have a unique maximal
/// representation.
pub fn gamma_profile(s_group: &NumericalSemigroup) -> Result<InvariantProfile> {
    require_dimension(s_group)?;
    let fac = s_group.apery_factorizations();
    let values = s_group.generators()[1..]
        .iter()
        .map(|&g| {
            max_multiple(s_group, g, |h, x| {
                let e = fac.get(x).expect("Apéry element");
                e.ord == h && e.has_unique_maximal_representation()
            })
        })
        .collect();
    Ok(InvariantProfile { kind: InvariantKind::Gamma, values })
}

pub fn profile(s_group: &NumericalSemigroup, kind: InvariantKind) -> Result<InvariantProfile> {
    match kind {
        InvariantKind::Tau => tau_profile(s_group),
        InvariantKind::Alpha => alpha_profile(s_group),
        InvariantKind::Beta => beta_profile(s_group),
        InvariantKind::Gamma => gamma_profile(s_group),
    }
}

/// `{Σ λ_i g_i | 0 ≤ λ_i ≤ values_i}` over `g_2, …, g_ν`.
pub fn box_set(profile: &InvariantProfile, s_group: &NumericalSemigroup) -> BTreeSet<u64> {
    bounded_box(&s_group.generators()[1..], &profile.values, usize::MAX)
        .expect("unbounded box")
}

/// The box spanned by `gens` with bounds `values`, or `None` as soon as it
/// would hold more than `limit` elements.
pub(crate) fn bounded_box(gens: &[u64], values: &[u64], limit: usize) -> Option<BTreeSet<u64>> {
    let mut set = BTreeSet::from([0u64]);
    for (&g, &v) in gens.iter().zip(values) {
        let mut next = BTreeSet::new();
        for &x in &set {
            for l in 0..=v {
                next.insert(x + l * g);
                if next.len() > limit {
                    return None;
                }
            }
        }
        set = next;
    }
    Some(set)
}

/// Whether `Ap(S, n_1)` equals the box spanned by `n_2, …, n_ν` and `values`.
pub(crate) fn box_equals_apery(s_group: &NumericalSemigroup, order: &[u64], values: &[u64]) -> bool {
    let n1 = order[0];
    let Some(b) = bounded_box(&order[1..], values, n1 as usize) else {
        return false;
    };
    let apery = s_group.apery(n1 as i64).expect("generator is an element");
    apery.sorted().into_iter().eq(b)
}
