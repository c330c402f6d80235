//! Representations (factorizations) of semigroup elements, the M-adic order
//! and the two partial orders `⪯` and `⪯_M`.

use std::ops::ControlFlow;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;

/// A coefficient vector `λ` with `Σ λ_i g_i` equal to the represented element.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Representation {
    pub coefficients: Vec<u64>,
    pub length: u64,
}

impl Representation {
    pub fn new(coefficients: Vec<u64>) -> Self {
        let length = coefficients.iter().sum();
        Representation { coefficients, length }
    }

    /// The represented element, `Σ λ_i g_i`.
    pub fn value(&self, generators: &[u64]) -> u64 {
        self.coefficients
            .iter()
            .zip(generators)
            .map(|(l, g)| l * g)
            .sum()
    }
}

/// Calls `visit` on every coefficient vector over `gens` summing to `s`, in
/// lexicographic order. Stops early on `ControlFlow::Break`.
fn visit_representations<F>(gens: &[u64], s: u64, visit: &mut F) -> ControlFlow<()>
where
    F: FnMut(&[u64]) -> ControlFlow<()>,
{
    fn go<F>(gens: &[u64], i: usize, rem: u64, buf: &mut Vec<u64>, visit: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&[u64]) -> ControlFlow<()>,
    {
        let g = gens[i];
        if i + 1 == gens.len() {
            if rem.is_multiple_of(g) {
                buf.push(rem / g);
                let flow = visit(buf);
                buf.pop();
                return flow;
            }
            return ControlFlow::Continue(());
        }
        for lambda in 0..=rem / g {
            buf.push(lambda);
            let flow = go(gens, i + 1, rem - lambda * g, buf, visit);
            buf.pop();
            flow?;
        }
        ControlFlow::Continue(())
    }
    let mut buf = Vec::with_capacity(gens.len());
    go(gens, 0, s, &mut buf, visit)
}

fn collect_representations(gens: &[u64], s: u64) -> Vec<Representation> {
    let mut out = Vec::new();
    let _ = visit_representations(gens, s, &mut |c| {
        out.push(Representation::new(c.to_vec()));
        ControlFlow::Continue(())
    });
    out
}

/// Every representation of `s` over the minimal generators, lexicographic.
/// Empty iff `s ∉ S`.
pub fn representations(s_group: &NumericalSemigroup, s: i64) -> Result<Vec<Representation>> {
    if s < 0 {
        return Err(Error::NegativeElement(s));
    }
    Ok(collect_representations(s_group.generators(), s as u64))
}

/// The lexicographically smallest representation of `s` accepted by `pred`.
pub fn find_representation<P>(s_group: &NumericalSemigroup, s: i64, mut pred: P) -> Option<Representation>
where
    P: FnMut(&[u64]) -> bool,
{
    if !s_group.contains(s) {
        return None;
    }
    let mut found = None;
    let _ = visit_representations(s_group.generators(), s as u64, &mut |c| {
        if pred(c) {
            found = Some(Representation::new(c.to_vec()));
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    found
}

/// The lexicographically smallest representation of `s`, if any.
pub fn first_representation(s_group: &NumericalSemigroup, s: i64) -> Option<Representation> {
    find_representation(s_group, s, |_| true)
}

/// The M-adic order: the largest length of a representation of `s`.
///
/// Computed by dynamic programming over `0..=s`, independently of
/// [`representations`].
pub fn ord(s_group: &NumericalSemigroup, s: i64) -> Result<u64> {
    if !s_group.contains(s) {
        return Err(Error::NotAnElement(s));
    }
    let s = s as usize;
    let gens = s_group.generators();
    let mut best: Vec<Option<u64>> = vec![None; s + 1];
    best[0] = Some(0);
    for x in 1..=s {
        best[x] = gens
            .iter()
            .filter(|&&g| g as usize <= x)
            .filter_map(|&g| best[x - g as usize])
            .max()
            .map(|o| o + 1);
    }
    Ok(best[s].expect("member has a representation"))
}

fn require_member(s_group: &NumericalSemigroup, x: i64) -> Result<()> {
    if s_group.contains(x) {
        Ok(())
    } else {
        Err(Error::NotAnElement(x))
    }
}

/// `s ⪯ t`: `t − s ∈ S`.
pub fn leq(s_group: &NumericalSemigroup, s: i64, t: i64) -> Result<bool> {
    require_member(s_group, s)?;
    require_member(s_group, t)?;
    Ok(s_group.contains(t - s))
}

/// `s ⪯_M t`: `t − s ∈ S` and `ord(s) + ord(t − s) = ord(t)`.
pub fn leq_m(s_group: &NumericalSemigroup, s: i64, t: i64) -> Result<bool> {
    require_member(s_group, s)?;
    require_member(s_group, t)?;
    if !s_group.contains(t - s) {
        return Ok(false);
    }
    Ok(ord(s_group, s)? + ord(s_group, t - s)? == ord(s_group, t)?)
}

/// All representations of one element, its order and its maximal ones.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FactorizationSummary {
    pub element: i64,
    pub reps: Vec<Representation>,
    /// `None` when the element is not in the semigroup.
    pub order: Option<u64>,
    pub maximal_reps: Vec<Representation>,
}

pub fn factorize(s_group: &NumericalSemigroup, s: i64) -> Result<FactorizationSummary> {
    let reps = representations(s_group, s)?;
    let order = reps.iter().map(|r| r.length).max();
    let maximal_reps = reps
        .iter()
        .filter(|r| Some(r.length) == order)
        .cloned()
        .collect();
    Ok(FactorizationSummary { element: s, reps, order, maximal_reps })
}

/// Factorization data of one Apéry element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AperyEntry {
    pub element: u64,
    pub reps: Vec<Representation>,
    pub ord: u64,
}

impl AperyEntry {
    pub fn maximal_reps(&self) -> impl Iterator<Item = &Representation> {
        self.reps.iter().filter(move |r| r.length == self.ord)
    }

    pub fn has_unique_representation(&self) -> bool {
        self.reps.len() == 1
    }

    pub fn has_unique_maximal_representation(&self) -> bool {
        self.maximal_reps().count() == 1
    }
}

/// Factorizations of every element of `Ap(S, m)`, indexed by residue mod `m`.
///
/// Built once per semigroup and shared; see
/// [`NumericalSemigroup::apery_factorizations`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AperyFactorizations {
    multiplicity: u64,
    entries: Vec<AperyEntry>,
}

impl AperyFactorizations {
    fn compute(s_group: &NumericalSemigroup) -> Self {
        let gens = s_group.generators();
        let entries = s_group
            .apery_table()
            .iter()
            .map(|&w| {
                // Apéry elements never use g_1.
                let reps: Vec<Representation> = if gens.len() == 1 {
                    vec![Representation::new(vec![0])]
                } else {
                    collect_representations(&gens[1..], w)
                        .into_iter()
                        .map(|r| {
                            let mut c = Vec::with_capacity(gens.len());
                            c.push(0);
                            c.extend(r.coefficients);
                            Representation::new(c)
                        })
                        .collect()
                };
                let ord = reps.iter().map(|r| r.length).max().expect("Apéry element is in S");
                AperyEntry { element: w, reps, ord }
            })
            .collect();
        AperyFactorizations { multiplicity: s_group.multiplicity(), entries }
    }

    /// The entry of `w`, if `w ∈ Ap(S)`.
    pub fn get(&self, w: u64) -> Option<&AperyEntry> {
        let e = &self.entries[(w % self.multiplicity) as usize];
        (e.element == w).then_some(e)
    }

    pub fn entries(&self) -> &[AperyEntry] {
        &self.entries
    }
}

impl NumericalSemigroup {
    /// Factorization data for `Ap(S)`, computed on first use and cached.
    pub fn apery_factorizations(&self) -> &AperyFactorizations {
        self.factorizations
            .get_or_init(|| Arc::new(AperyFactorizations::compute(self)))
    }
}

/// Every element of `Ap(S)` has exactly one representation.
pub fn apery_unique_expression(s_group: &NumericalSemigroup) -> bool {
    s_group
        .apery_factorizations()
        .entries()
        .iter()
        .all(AperyEntry::has_unique_representation)
}

/// Every element of `Ap(S)` has exactly one maximal representation.
pub fn apery_unique_maximal_expression(s_group: &NumericalSemigroup) -> bool {
    s_group
        .apery_factorizations()
        .entries()
        .iter()
        .all(AperyEntry::has_unique_maximal_representation)
}

/// The maximal elements of `(Ap(S), ⪯_M)`, ascending.
///
/// If `ω ⪯ ω'` with `ω' ∈ Ap(S)` then `ω' − ω ∈ Ap(S)` as well, so every order
/// needed here is available from the cached Apéry factorizations.
pub fn apery_m_maximal_elements(s_group: &NumericalSemigroup) -> Vec<u64> {
    let fac = s_group.apery_factorizations();
    let entries = fac.entries();
    let mut out: Vec<u64> = entries
        .iter()
        .filter(|a| {
            !entries.iter().any(|b| {
                b.element > a.element
                    && fac
                        .get(b.element - a.element)
                        .is_some_and(|u| a.ord + u.ord == b.ord)
            })
        })
        .map(|a| a.element)
        .collect();
    out.sort_unstable();
    out
}

/// All `⪯_M`-maximal elements of `Ap(S)` have the same order.
pub fn is_m_pure(s_group: &NumericalSemigroup) -> bool {
    let fac = s_group.apery_factorizations();
    let mut orders = apery_m_maximal_elements(s_group)
        .into_iter()
        .map(|w| fac.get(w).expect("Apéry element").ord);
    match orders.next() {
        None => true,
        Some(first) => orders.all(|o| o == first),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sg(g: &[u64]) -> NumericalSemigroup {
        NumericalSemigroup::from_generators(g).unwrap()
    }

    fn coeffs(reps: &[Representation]) -> Vec<Vec<u64>> {
        reps.iter().map(|r| r.coefficients.clone()).collect()
    }

    #[test]
    fn representations_of_33() {
        let s = sg(&[8, 10, 11, 12]);
        let reps = representations(&s, 33).unwrap();
        assert_eq!(coeffs(&reps), vec![vec![0, 0, 3, 0], vec![0, 1, 1, 1]]);
        assert!(reps.iter().all(|r| r.length == 3 && r.value(s.generators()) == 33));
    }

    #[test]
    fn representations_edge_cases() {
        let s = sg(&[4, 6, 13]);
        assert_eq!(coeffs(&representations(&s, 0).unwrap()), vec![vec![0, 0, 0]]);
        assert!(representations(&s, 5).unwrap().is_empty());
        assert_eq!(representations(&s, -3), Err(Error::NegativeElement(-3)));
    }

    #[test]
    fn orders() {
        let s = sg(&[8, 10, 11, 12]);
        assert_eq!(ord(&s, 33), Ok(3));
        assert_eq!(ord(&s, 0), Ok(0));
        assert_eq!(ord(&s, 12), Ok(1));
        assert_eq!(ord(&s, 9), Err(Error::NotAnElement(9)));
    }

    #[test]
    fn divisibility_orders() {
        let s = sg(&[8, 10, 15]);
        assert_eq!(leq(&s, 10, 45), Ok(true));
        let t = sg(&[8, 10, 11, 12]);
        assert_eq!(leq(&t, 10, 11), Ok(false));
        assert_eq!(leq(&t, 0, 33), Ok(true));
        assert_eq!(leq_m(&t, 11, 33), Ok(true));
        assert_eq!(leq_m(&t, 8, 33), Ok(false));
        assert_eq!(leq_m(&t, 21, 21), Ok(true));
        assert_eq!(leq(&t, 9, 33), Err(Error::NotAnElement(9)));
    }

    #[test]
    fn summary() {
        let s = sg(&[8, 10, 11, 12]);
        let f = factorize(&s, 33).unwrap();
        assert_eq!(f.order, Some(3));
        assert_eq!(f.maximal_reps.len(), 2);
        let g = factorize(&s, 9).unwrap();
        assert!(g.reps.is_empty() && g.order.is_none() && g.maximal_reps.is_empty());
    }

    #[test]
    fn unique_expression() {
        assert!(apery_unique_expression(&sg(&[12, 15, 16, 18])));
        assert!(!apery_unique_expression(&sg(&[8, 10, 15])));
        assert!(apery_unique_expression(&NumericalSemigroup::naturals()));
    }

    #[test]
    fn unique_maximal_expression() {
        assert!(apery_unique_maximal_expression(&sg(&[8, 10, 15])));
        assert!(!apery_unique_maximal_expression(&sg(&[8, 10, 11, 12])));
        assert!(apery_unique_maximal_expression(&NumericalSemigroup::naturals()));
    }

    #[test]
    fn m_purity() {
        assert!(is_m_pure(&sg(&[8, 10, 15])));
        assert!(is_m_pure(&sg(&[8, 10, 11, 12])));
        assert_eq!(apery_m_maximal_elements(&sg(&[4, 5, 11])), vec![10, 11]);
        assert!(!is_m_pure(&sg(&[4, 5, 11])));
        assert!(is_m_pure(&NumericalSemigroup::naturals()));
    }

    #[test]
    fn apery_cache_matches_direct_enumeration() {
        let s = sg(&[8, 10, 11, 12]);
        for e in s.apery_factorizations().entries() {
            assert_eq!(e.reps, representations(&s, e.element as i64).unwrap());
            assert_eq!(e.ord, ord(&s, e.element as i64).unwrap());
        }
        assert!(s.apery_factorizations().get(20).is_none());
    }

    #[test]
    fn first_representation_is_lexicographic_minimum() {
        let s = sg(&[8, 10, 11, 12]);
        assert_eq!(first_representation(&s, 33).unwrap().coefficients, vec![0, 0, 3, 0]);
        assert_eq!(first_representation(&s, 16).unwrap().coefficients, vec![2, 0, 0, 0]);
        assert!(first_representation(&s, 9).is_none());
    }
}
