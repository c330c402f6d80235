//! Gluings `S = d2·S1 + d1·S2`, the α-rectangular gluing step and its
//! converse, and constructive families built from them.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use num_integer::Integer;
use serde::Serialize;

use crate::classify::{is_alpha_rectangular, is_interior};
use crate::error::{Error, GluingFault, Result};
use crate::invariants::{alpha_profile, tau_profile};
use crate::semigroup::NumericalSemigroup;

/// A recursive gluing decomposition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GluingNode {
    /// A semigroup of embedding dimension at most two.
    Leaf(NumericalSemigroup),
    /// `d2·left + d1·right`, with `d1 ∈ left` and `d2 ∈ right`.
    Node {
        d2: u64,
        left: Box<GluingNode>,
        d1: u64,
        right: Box<GluingNode>,
    },
}

impl GluingNode {
    /// The semigroup this tree describes.
    pub fn semigroup(&self) -> NumericalSemigroup {
        self.try_semigroup().expect("valid gluing tree")
    }

    /// Rebuilds the semigroup, validating every gluing on the way.
    pub fn try_semigroup(&self) -> Result<NumericalSemigroup> {
        match self {
            GluingNode::Leaf(s) => Ok(s.clone()),
            GluingNode::Node { d2, left, d1, right } => {
                glue(&left.try_semigroup()?, *d1, &right.try_semigroup()?, *d2)
            }
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            GluingNode::Leaf(_) => 0,
            GluingNode::Node { left, right, .. } => 1 + left.depth().max(right.depth()),
        }
    }
}

/// `d2·S1 + d1·S2 = ⟨d2·n_1, …, d2·n_r, d1·m_1, …, d1·m_s⟩`.
///
/// Requires `d1` to be a non-generator element of `S1`, `d2` one of `S2`, and
/// `gcd(d1, d2) = 1`. The result is checked to be minimally generated by the
/// `r + s` listed elements.
pub fn glue(s1: &NumericalSemigroup, d1: u64, s2: &NumericalSemigroup, d2: u64) -> Result<NumericalSemigroup> {
    if !is_interior(s1, d1) {
        return Err(Error::InvalidGluing(GluingFault::D1NotInterior));
    }
    if !is_interior(s2, d2) {
        return Err(Error::InvalidGluing(GluingFault::D2NotInterior));
    }
    if d1.gcd(&d2) != 1 {
        return Err(Error::InvalidGluing(GluingFault::NotCoprime));
    }
    let scale = |gens: &[u64], d: u64| -> Result<Vec<u64>> {
        gens.iter()
            .map(|&g| g.checked_mul(d).ok_or(Error::Overflow("gluing")))
            .collect()
    };
    let mut gens = scale(s1.generators(), d2)?;
    gens.extend(scale(s2.generators(), d1)?);
    let s = NumericalSemigroup::from_generators(&gens)?;
    if s.embedding_dimension() != s1.embedding_dimension() + s2.embedding_dimension() {
        return Err(Error::InternalContradiction(format!(
            "gluing of ⟨{s1}⟩ and ⟨{s2}⟩ lost generators: ⟨{s}⟩"
        )));
    }
    Ok(s)
}

/// `d2·T + d1·ℕ` for α-rectangular `T`, `d1 ∉ Ap(T)` and `d1 > d2·m(T)`; the
/// result is again α-rectangular.
pub fn alpha_glue_step(t: &NumericalSemigroup, d1: u64, d2: u64) -> Result<NumericalSemigroup> {
    if !is_alpha_rectangular(t) {
        return Err(Error::NotAlphaRectangular);
    }
    let s = glue(t, d1, &NumericalSemigroup::naturals(), d2)?;
    if t.in_apery(d1) {
        return Err(Error::ApertureViolation("d1 lies in Ap(T)"));
    }
    if (d1 as u128) <= d2 as u128 * t.multiplicity() as u128 {
        return Err(Error::ApertureViolation("d1 must exceed d2·m(T)"));
    }
    if !is_alpha_rectangular(&s) {
        return Err(Error::InternalContradiction(format!("⟨{s}⟩ should be alpha-rectangular")));
    }
    Ok(s)
}

/// `S = d2·base + d1·ℕ` as produced by [`alpha_decompose`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AlphaDecomposition {
    pub base: NumericalSemigroup,
    pub d1: u64,
    pub d2: u64,
}

/// Writes an α-rectangular `S ≠ ℕ` as `d2·T + d1·ℕ` with `T` α-rectangular.
///
/// `d1` is a generator `g_l` (`l ≥ 2`) such that the gcd `d` of the others
/// equals `α_l + 1 > 1`; generators are tried from the largest down.
pub fn alpha_decompose(s: &NumericalSemigroup) -> Result<AlphaDecomposition> {
    if s.is_naturals() {
        return Err(Error::IsNaturals);
    }
    if !is_alpha_rectangular(s) {
        return Err(Error::NotAlphaRectangular);
    }
    let gens = s.generators();
    let alpha = alpha_profile(s)?;
    for l in (1..gens.len()).rev() {
        let others: Vec<u64> = gens.iter().enumerate().filter(|&(j, _)| j != l).map(|(_, &g)| g).collect();
        let d = others.iter().fold(0u64, |a, &g| a.gcd(&g));
        if d < 2 || d != alpha.values[l - 1] + 1 {
            continue;
        }
        let scaled: Vec<u64> = others.iter().map(|g| g / d).collect();
        let base = NumericalSemigroup::from_generators(&scaled)?;
        if matches!(alpha_glue_step(&base, gens[l], d), Ok(ref r) if r == s) {
            return Ok(AlphaDecomposition { base, d1: gens[l], d2: d });
        }
    }
    Err(Error::InternalContradiction(format!("⟨{s}⟩ admits no alpha gluing decomposition")))
}

/// Prime factors of `n` with multiplicity, ascending.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        while n.is_multiple_of(p) {
            out.push(p);
            n /= p;
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && prime_factors(n).len() == 1
}

/// Splits `m` into `parts` factors `≥ 2` by merging the two smallest prime
/// factors until `parts` remain; descending.
fn split_factors(m: u64, parts: usize) -> Vec<u64> {
    let mut heap: BinaryHeap<Reverse<u64>> = prime_factors(m).into_iter().map(Reverse).collect();
    while heap.len() > parts {
        let Reverse(a) = heap.pop().expect("non-empty");
        let Reverse(b) = heap.pop().expect("non-empty");
        heap.push(Reverse(a * b));
    }
    let mut v: Vec<u64> = heap.into_iter().map(|Reverse(x)| x).collect();
    v.sort_unstable_by(|a, b| b.cmp(a));
    v
}

/// An α-rectangular semigroup of multiplicity `m` and embedding dimension
/// `nu`, built by iterated [`alpha_glue_step`]s from `⟨a_1, a_1 + 1⟩`.
///
/// Each step takes the smallest admissible `d1`.
pub fn build_alpha_rectangular(m: u64, nu: usize) -> Result<NumericalSemigroup> {
    if nu < 2 {
        return Err(Error::BadParameters(format!("embedding dimension {nu} < 2")));
    }
    let omega = prime_factors(m).len() as u32;
    let needed = nu as u32 - 1;
    if omega < needed {
        return Err(Error::LengthTooSmall { m, omega, needed });
    }
    let a = split_factors(m, nu - 1);
    let mut s = NumericalSemigroup::from_generators(&[a[0], a[0] + 1])?;
    for &d2 in &a[1..] {
        let start = d2
            .checked_mul(s.multiplicity())
            .and_then(|x| x.checked_add(1))
            .ok_or(Error::Overflow("gluing parameter"))?;
        let d1 = (start..)
            .find(|&d| is_interior(&s, d) && !s.in_apery(d) && d.gcd(&d2) == 1)
            .expect("all large integers qualify");
        s = alpha_glue_step(&s, d1, d2)?;
    }
    Ok(s)
}

/// `⟨a^p, a^p + b, a^p + ab, …, a^p + a^{p−1}b⟩`: α-rectangular, never
/// telescopic.
pub fn rb_family(a: u64, b: u64, p: u32) -> Result<NumericalSemigroup> {
    if a < 2 || b < 2 || p < 2 || a.gcd(&b) != 1 {
        return Err(Error::BadParameters(format!("need a, b, p > 1 and gcd(a, b) = 1, got ({a}, {b}, {p})")));
    }
    let overflow = || Error::Overflow("family generator");
    let ap = a.checked_pow(p).ok_or_else(overflow)?;
    let mut gens = vec![ap];
    for k in 0..p {
        let x = a
            .checked_pow(k)
            .and_then(|t| t.checked_mul(b))
            .and_then(|t| t.checked_add(ap))
            .ok_or_else(overflow)?;
        gens.push(x);
    }
    let s = NumericalSemigroup::from_generators(&gens)?;
    if s.embedding_dimension() != p as usize + 1 {
        return Err(Error::InternalContradiction(format!("⟨{s}⟩ should have {} generators", p + 1)));
    }
    Ok(s)
}

/// `⟨p1·p3, p2·p3, p1·p4, p2·p4⟩ = p3·⟨p1, p2⟩ + p4·⟨p1, p2⟩`: a complete
/// intersection that is not free.
pub fn ci_not_free_family(p1: u64, p2: u64, p3: u64, p4: u64) -> Result<NumericalSemigroup> {
    let ps = [p1, p2, p3, p4];
    if let Some(&q) = ps.iter().find(|&&q| !is_prime(q)) {
        return Err(Error::BadParameters(format!("{q} is not prime")));
    }
    let mut sorted = ps;
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::BadParameters("primes must be distinct".into()));
    }
    let bound = p1 * p2;
    if p3 <= bound || p4 <= bound {
        return Err(Error::BadParameters(format!("p3 and p4 must exceed p1·p2 = {bound}")));
    }
    let t = NumericalSemigroup::from_generators(&[p1, p2])?;
    glue(&t, p4, &t, p3)
}

/// Telescopic via gluing: `S = d·T + g_ν·ℕ` with `d = gcd(g_1, …, g_{ν−1})`,
/// `T` telescopic and `g_ν > d·max(T)`. Returns true for `ℕ`.
pub fn telescopic_glue_check(s: &NumericalSemigroup) -> bool {
    match peel_last(s) {
        Peeled::Naturals => true,
        Peeled::Fails => false,
        Peeled::Glued { base, d } => {
            let top = *base.generators().last().expect("non-empty");
            s.generators()[s.embedding_dimension() - 1] as u128 > d as u128 * top as u128
                && telescopic_glue_check(&base)
        }
    }
}

/// Plane branch via gluing: as telescopic, with `g_ν > d·(τ_{ν−1}(T) + 1)·max(T)`
/// whenever `T ≠ ℕ`. Returns true for `ℕ`.
pub fn plane_branch_glue_check(s: &NumericalSemigroup) -> bool {
    match peel_last(s) {
        Peeled::Naturals => true,
        Peeled::Fails => false,
        Peeled::Glued { base, d } => {
            let last = s.generators()[s.embedding_dimension() - 1] as u128;
            let top = *base.generators().last().expect("non-empty") as u128;
            let growth = if base.is_naturals() {
                last > d as u128 * top
            } else {
                let tau = *tau_profile(&base).expect("τ profile").values.last().expect("ν ≥ 2");
                last > d as u128 * (tau as u128 + 1) * top
            };
            growth && plane_branch_glue_check(&base)
        }
    }
}

/// Unique Betti element via gluing: `S = d·T + g_k·ℕ` for some generator
/// `g_k`, with `T` having a unique Betti element, `g_k = lcm(T)` and
/// `gcd(t, d) = 1` for every generator `t` of `T`.
///
/// Two-generated semigroups are the base case (always true); `ℕ` is false.
pub fn unique_betti_glue_check(s: &NumericalSemigroup) -> bool {
    let gens = s.generators();
    match gens.len() {
        1 => return false,
        2 => return true,
        _ => {}
    }
    (0..gens.len()).any(|k| {
        let others: Vec<u64> = gens.iter().enumerate().filter(|&(j, _)| j != k).map(|(_, &g)| g).collect();
        let d = others.iter().fold(0u64, |a, &g| a.gcd(&g));
        if d < 2 {
            return false;
        }
        let scaled: Vec<u64> = others.iter().map(|g| g / d).collect();
        let Ok(base) = NumericalSemigroup::from_generators(&scaled) else {
            return false;
        };
        let lcm = base.generators().iter().try_fold(1u64, |acc, &t| {
            let l = acc.lcm(&t);
            (l / t == acc / acc.gcd(&t)).then_some(l)
        });
        lcm == Some(gens[k])
            && base.generators().iter().all(|t| t.gcd(&d) == 1)
            && matches!(glue(&base, gens[k], &NumericalSemigroup::naturals(), d), Ok(ref r) if r == s)
            && unique_betti_glue_check(&base)
    })
}

enum Peeled {
    Naturals,
    Fails,
    Glued { base: NumericalSemigroup, d: u64 },
}

/// Splits off the largest generator: `S = d·T + g_ν·ℕ`.
fn peel_last(s: &NumericalSemigroup) -> Peeled {
    if s.is_naturals() {
        return Peeled::Naturals;
    }
    let gens = s.generators();
    let (&last, prefix) = gens.split_last().expect("non-empty");
    let d = prefix.iter().fold(0u64, |a, &g| a.gcd(&g));
    let scaled: Vec<u64> = prefix.iter().map(|g| g / d).collect();
    let Ok(base) = NumericalSemigroup::from_generators(&scaled) else {
        return Peeled::Fails;
    };
    match glue(&base, last, &NumericalSemigroup::naturals(), d) {
        Ok(ref r) if r == s => Peeled::Glued { base, d },
        _ => Peeled::Fails,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::{is_plane_branch, is_telescopic, unique_betti_witness};

    fn sg(g: &[u64]) -> NumericalSemigroup {
        NumericalSemigroup::from_generators(g).unwrap()
    }

    #[test]
    fn glue_examples() {
        let t = sg(&[18, 21, 27, 35]);
        let n = NumericalSemigroup::naturals();
        assert_eq!(glue(&t, 69, &n, 2).unwrap(), sg(&[36, 42, 54, 69, 70]));
        let u = sg(&[2, 3]);
        assert_eq!(glue(&u, 11, &u, 7).unwrap(), sg(&[14, 21, 22, 33]));
        assert_eq!(glue(&u, 2, &n, 3), Err(Error::InvalidGluing(GluingFault::D1NotInterior)));
        assert_eq!(glue(&u, 4, &n, 1), Err(Error::InvalidGluing(GluingFault::D2NotInterior)));
        assert_eq!(glue(&u, 4, &n, 2), Err(Error::InvalidGluing(GluingFault::NotCoprime)));
        assert_eq!(glue(&u, 1, &n, 2), Err(Error::InvalidGluing(GluingFault::D1NotInterior)));
    }

    #[test]
    fn alpha_step() {
        let s = alpha_glue_step(&sg(&[4, 5]), 13, 3).unwrap();
        assert_eq!(s, sg(&[12, 13, 15]));
        assert!(is_alpha_rectangular(&s));
        assert!(matches!(
            alpha_glue_step(&sg(&[18, 21, 27, 35]), 69, 2),
            Err(Error::ApertureViolation(_))
        ));
        assert!(matches!(
            alpha_glue_step(&NumericalSemigroup::naturals(), 2, 3),
            Err(Error::ApertureViolation(_))
        ));
        assert_eq!(alpha_glue_step(&sg(&[8, 10, 15]), 41, 3), Err(Error::NotAlphaRectangular));
    }

    #[test]
    fn alpha_decomposition() {
        let d = alpha_decompose(&sg(&[12, 13, 15])).unwrap();
        assert_eq!((d.base.generators(), d.d1, d.d2), (&[4u64, 5][..], 13, 3));
        let d = alpha_decompose(&sg(&[2, 3])).unwrap();
        assert_eq!((d.base, d.d1, d.d2), (NumericalSemigroup::naturals(), 3, 2));
        assert_eq!(alpha_decompose(&sg(&[5, 6, 9])), Err(Error::NotAlphaRectangular));
        assert_eq!(alpha_decompose(&NumericalSemigroup::naturals()), Err(Error::IsNaturals));
    }

    #[test]
    fn factor_split() {
        assert_eq!(split_factors(12, 2), vec![4, 3]);
        assert_eq!(split_factors(12, 3), vec![3, 2, 2]);
        assert_eq!(split_factors(64, 3), vec![4, 4, 4]);
        assert_eq!(prime_factors(360), vec![2, 2, 2, 3, 3, 5]);
        assert!(is_prime(13) && !is_prime(1) && !is_prime(15));
    }

    #[test]
    fn build_examples() {
        assert_eq!(build_alpha_rectangular(12, 3).unwrap(), sg(&[12, 13, 15]));
        assert_eq!(build_alpha_rectangular(2, 2).unwrap(), sg(&[2, 3]));
        let s = build_alpha_rectangular(8, 4).unwrap();
        assert_eq!((s.multiplicity(), s.embedding_dimension()), (8, 4));
        assert!(is_alpha_rectangular(&s));
        assert_eq!(
            build_alpha_rectangular(8, 5),
            Err(Error::LengthTooSmall { m: 8, omega: 3, needed: 4 })
        );
    }

    #[test]
    fn families() {
        assert_eq!(rb_family(2, 3, 2).unwrap(), sg(&[4, 7, 10]));
        assert_eq!(rb_family(2, 5, 3).unwrap(), sg(&[8, 13, 18, 28]));
        assert!(matches!(rb_family(2, 2, 2), Err(Error::BadParameters(_))));
        assert_eq!(ci_not_free_family(2, 3, 7, 11).unwrap(), sg(&[14, 21, 22, 33]));
        assert_eq!(ci_not_free_family(2, 3, 7, 13).unwrap(), sg(&[14, 21, 26, 39]));
        assert!(matches!(ci_not_free_family(2, 3, 5, 7), Err(Error::BadParameters(_))));
        assert!(matches!(ci_not_free_family(2, 3, 7, 7), Err(Error::BadParameters(_))));
        assert!(matches!(ci_not_free_family(2, 3, 7, 9), Err(Error::BadParameters(_))));
    }

    #[test]
    fn glue_checks() {
        assert!(telescopic_glue_check(&sg(&[8, 10, 15])));
        assert!(!telescopic_glue_check(&sg(&[4, 5, 6])));
        assert!(unique_betti_glue_check(&sg(&[6, 10, 15])));
        assert!(!unique_betti_glue_check(&sg(&[4, 6, 13])));
        assert!(!plane_branch_glue_check(&sg(&[6, 10, 15])));
        assert!(plane_branch_glue_check(&sg(&[4, 6, 13])));
        for g in [&[6u64, 10, 15][..], &[4, 6, 13], &[8, 10, 15], &[12, 15, 20], &[30, 42, 70, 105]] {
            let s = sg(g);
            assert_eq!(telescopic_glue_check(&s), is_telescopic(&s), "{s}");
            assert_eq!(plane_branch_glue_check(&s), is_plane_branch(&s), "{s}");
            assert_eq!(unique_betti_glue_check(&s), unique_betti_witness(&s).is_some(), "{s}");
        }
    }

    #[test]
    fn tree_round_trip() {
        let u = sg(&[2, 3]);
        let tree = GluingNode::Node {
            d2: 7,
            left: Box::new(GluingNode::Leaf(u.clone())),
            d1: 11,
            right: Box::new(GluingNode::Leaf(u)),
        };
        assert_eq!(tree.semigroup(), sg(&[14, 21, 22, 33]));
        assert_eq!(tree.depth(), 1);
    }
}
