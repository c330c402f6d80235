use crate::error::{Error, Result};
use crate::factorization::{find_representation, first_representation, Representation};
use crate::invariants::{gamma_profile, phi_profile, Arrangement};
use crate::semigroup::NumericalSemigroup;

use super::is_gamma_rectangular;

/// For each `i = 2..ν`, a relation `(γ_i + 1) g_i = Σ_j λ_{i,j} g_j`.
///
/// If `(γ_i + 1) g_i ∈ Ap(S)` the relation is the lexicographically smallest
/// other representation of length at least `γ_i + 1`; otherwise it is the
/// lexicographically smallest one with `λ_{i,1} > 0`.
pub fn sigma_relations(s: &NumericalSemigroup) -> Result<Vec<Representation>> {
    if s.embedding_dimension() < 2 {
        return Err(Error::EmbeddingDimensionOne);
    }
    if !is_gamma_rectangular(s) {
        return Err(Error::NotGammaRectangular);
    }
    let gamma = gamma_profile(s)?;
    let gens = s.generators();
    let m = s.multiplicity();
    gens[1..]
        .iter()
        .zip(&gamma.values)
        .enumerate()
        .map(|(k, (&g, &v))| {
            let i = k + 1;
            let h = v + 1;
            let x = h.checked_mul(g).ok_or(Error::Overflow("relation"))?;
            let rel = if s.in_apery(x) {
                find_representation(s, x as i64, |c| {
                    let len: u64 = c.iter().sum();
                    len >= h && !(c[i] == h && len == h)
                })
            } else {
                first_representation(s, (x - m) as i64).map(|r| {
                    let mut c = r.coefficients;
                    c[0] += 1;
                    Representation::new(c)
                })
            };
            rel.ok_or_else(|| Error::InternalContradiction(format!("no relation for ({h})·{g} in ⟨{s}⟩")))
        })
        .collect()
}

/// A free arrangement `n_i = g_{σ(i)}` with `σ(1) = 1`, built from
/// [`sigma_relations`] so that the coefficient matrix becomes lower
/// triangular with zero diagonal.
///
/// The last position takes an all-zero column of the remaining submatrix, and
/// so on downwards; among several zero columns the smallest index is chosen.
pub fn sigma_arrangement(s: &NumericalSemigroup) -> Result<Arrangement> {
    let relations = sigma_relations(s)?;
    let gens = s.generators();
    let nu = gens.len();
    // rows and columns indexed by generator position 1..ν
    let lambda = |row: usize, col: usize| relations[row - 1].coefficients[col];

    let mut remaining: Vec<usize> = (1..nu).collect();
    let mut tail = Vec::with_capacity(nu - 1);
    while !remaining.is_empty() {
        let pos = remaining
            .iter()
            .position(|&col| remaining.iter().all(|&row| lambda(row, col) == 0))
            .ok_or_else(|| {
                Error::InternalContradiction(format!("no zero column among {remaining:?} for ⟨{s}⟩"))
            })?;
        tail.push(remaining.remove(pos));
    }
    let mut order = vec![gens[0]];
    order.extend(tail.iter().rev().map(|&j| gens[j]));
    phi_profile(s, &order)
}
