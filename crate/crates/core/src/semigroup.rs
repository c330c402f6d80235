//! Numerical semigroups and their first-order invariants.
//!
//! A [`NumericalSemigroup`] is stored through its minimal system of
//! generators together with the Apéry set with respect to the multiplicity.
//! Everything else (membership, Frobenius number, genus, symmetry) is read off
//! that table.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;
use std::sync::{Arc, OnceLock};

use num_integer::Integer;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::factorization::AperyFactorizations;

/// Largest modulus for which an Apéry table is materialized.
pub const MAX_MODULUS: u64 = 1 << 26;

const UNREACHED: u64 = u64::MAX;

/// Adds generator `a` to a residue table modulo `n` (round-robin relaxation).
///
/// `table[r]` holds the least element congruent to `r` reached so far, or
/// `UNREACHED`. Walking each cycle of `r -> r + a (mod n)` once, starting at
/// its minimum, leaves the table exact for the enlarged generating set.
fn relax(table: &mut [u64], a: u64) -> Result<()> {
    let n = table.len() as u64;
    let step = (a % n) as usize;
    if step == 0 {
        return Ok(());
    }
    let d = (step as u64).gcd(&n) as usize;
    let cycle_len = table.len() / d;
    for start in 0..d {
        let mut best = start;
        let mut r = start;
        for _ in 1..cycle_len {
            r = (r + step) % table.len();
            if table[r] < table[best] {
                best = r;
            }
        }
        if table[best] == UNREACHED {
            continue;
        }
        let mut r = best;
        for _ in 1..cycle_len {
            let next = (r + step) % table.len();
            let cand = table[r].checked_add(a).ok_or(Error::Overflow("Apéry set"))?;
            if cand < table[next] {
                table[next] = cand;
            }
            r = next;
        }
    }
    Ok(())
}

fn residue_table(generators: &[u64], modulus: u64) -> Result<Vec<u64>> {
    if modulus > MAX_MODULUS {
        return Err(Error::TooLarge(modulus));
    }
    let mut table = vec![UNREACHED; modulus as usize];
    table[0] = 0;
    for &g in generators {
        relax(&mut table, g)?;
    }
    Ok(table)
}

/// A numerical semigroup, given by its minimal system of generators.
///
/// Construction computes the multiplicity, Frobenius number, genus and the
/// Apéry set with respect to the multiplicity eagerly; the value is immutable
/// afterwards. `ℕ` itself is the semigroup generated by `1`, with Frobenius
/// number `-1`.
#[derive(Clone)]
pub struct NumericalSemigroup {
    generators: Vec<u64>,
    frobenius: i64,
    genus: u64,
    apery: Vec<u64>,
    pub(crate) factorizations: OnceLock<Arc<AperyFactorizations>>,
}

impl NumericalSemigroup {
    /// The semigroup `ℕ = ⟨1⟩`.
    pub fn naturals() -> Self {
        NumericalSemigroup {
            generators: vec![1],
            frobenius: -1,
            genus: 0,
            apery: vec![0],
            factorizations: OnceLock::new(),
        }
    }

    /// Builds `⟨raw⟩`, reducing `raw` to its minimal system of generators.
    pub fn from_generators(raw: &[u64]) -> Result<Self> {
        if raw.is_empty() {
            return Err(Error::EmptyInput);
        }
        if raw.contains(&0) {
            return Err(Error::InvalidGenerator(0));
        }
        let g = raw.iter().fold(0u64, |acc, &x| acc.gcd(&x));
        if g != 1 {
            return Err(Error::GcdNotOne(g));
        }
        let mut sorted = raw.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let m = sorted[0];
        if m == 1 {
            return Ok(Self::naturals());
        }
        if m > MAX_MODULUS {
            return Err(Error::TooLarge(m));
        }

        // Elements are only ever represented by smaller ones, so scanning in
        // ascending order against the partial table decides minimality.
        let mut table = vec![UNREACHED; m as usize];
        table[0] = 0;
        let mut generators = vec![m];
        for &x in &sorted[1..] {
            if table[(x % m) as usize] <= x {
                continue;
            }
            relax(&mut table, x)?;
            generators.push(x);
        }

        let max = *table.iter().max().expect("non-empty table");
        let max = i64::try_from(max).map_err(|_| Error::Overflow("Frobenius number"))?;
        let frobenius = max - m as i64;
        let genus = table
            .iter()
            .enumerate()
            .map(|(r, &w)| (w - r as u64) / m)
            .sum();
        Ok(NumericalSemigroup {
            generators,
            frobenius,
            genus,
            apery: table,
            factorizations: OnceLock::new(),
        })
    }

    pub fn generators(&self) -> &[u64] {
        &self.generators
    }

    /// The multiplicity `m`, i.e. the smallest generator.
    pub fn multiplicity(&self) -> u64 {
        self.generators[0]
    }

    /// The embedding dimension `ν`.
    pub fn embedding_dimension(&self) -> usize {
        self.generators.len()
    }

    /// Largest integer not in the semigroup; `-1` for `ℕ`.
    pub fn frobenius(&self) -> i64 {
        self.frobenius
    }

    /// Number of gaps.
    pub fn genus(&self) -> u64 {
        self.genus
    }

    pub fn is_naturals(&self) -> bool {
        self.generators[0] == 1
    }

    /// Membership test: `x ∈ S` iff `x ≥ ω_{x mod m}`.
    pub fn contains(&self, x: i64) -> bool {
        if x < 0 {
            return false;
        }
        let x = x as u64;
        x >= self.apery[(x % self.multiplicity()) as usize]
    }

    /// `x ∈ Ap(S, m)`.
    pub fn in_apery(&self, x: u64) -> bool {
        self.apery[(x % self.multiplicity()) as usize] == x
    }

    /// The Apéry set with respect to the multiplicity, indexed by residue.
    pub fn apery_table(&self) -> &[u64] {
        &self.apery
    }

    /// The Apéry set `Ap(S, n)` of a positive element `n`.
    pub fn apery(&self, n: i64) -> Result<AperySet> {
        if n < 1 || !self.contains(n) {
            return Err(Error::NotAnElement(n));
        }
        let n = n as u64;
        let elements = if n == self.multiplicity() {
            self.apery.clone()
        } else {
            residue_table(&self.generators, n)?
        };
        Ok(AperySet { modulus: n, elements })
    }

    /// Whether `x ∈ S ⟺ f − x ∉ S` for every integer `x`.
    pub fn is_symmetric(&self) -> bool {
        let f = self.frobenius;
        (0..=f).all(|x| self.contains(x) != self.contains(f - x))
    }

    /// The maximal elements of `(Ap(S), ⪯)`, ascending.
    ///
    /// `ω` is maximal exactly when no `ω + g_i` (`i ≥ 2`) stays in the Apéry
    /// set: anything above `ω` in the poset lies above some `ω + g_i`.
    pub fn apery_maximal_elements(&self) -> Vec<u64> {
        let mut out: Vec<u64> = self
            .apery
            .iter()
            .copied()
            .filter(|&w| {
                self.generators[1..]
                    .iter()
                    .all(|&g| !self.in_apery(w + g))
            })
            .collect();
        out.sort_unstable();
        out
    }
}

impl fmt::Debug for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "⟨{self}⟩")
    }
}

/// Canonical textual form: ascending minimal generators joined by commas.
impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

impl FromStr for NumericalSemigroup {
    type Err = ParseSemigroupError;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let raw = parse_generators(s)?;
        Ok(NumericalSemigroup::from_generators(&raw)?)
    }
}

/// Parses a comma-separated generator list such as `"8,10,11,12"`.
pub fn parse_generators(s: &str) -> std::result::Result<Vec<u64>, ParseSemigroupError> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<u64>()
                .map_err(|_| ParseSemigroupError::BadInteger(t.to_string()))
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ParseSemigroupError {
    #[error("not a non-negative integer: {0:?}")]
    BadInteger(String),
    #[error(transparent)]
    Invalid(#[from] Error),
}

impl PartialEq for NumericalSemigroup {
    fn eq(&self, other: &Self) -> bool {
        self.generators == other.generators
    }
}

impl Eq for NumericalSemigroup {}

impl Hash for NumericalSemigroup {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.generators.hash(state);
    }
}

impl PartialOrd for NumericalSemigroup {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for NumericalSemigroup {
    fn cmp(&self, other: &Self) -> Ordering {
        self.generators.cmp(&other.generators)
    }
}

impl Serialize for NumericalSemigroup {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.generators.serialize(serializer)
    }
}

/// `Ap(S, n)`: for each residue `i mod n`, the least element of `S` in that
/// class.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AperySet {
    pub modulus: u64,
    /// `elements[i] = ω_i ≡ i (mod modulus)`.
    pub elements: Vec<u64>,
}

impl AperySet {
    pub fn sorted(&self) -> Vec<u64> {
        let mut v = self.elements.clone();
        v.sort_unstable();
        v
    }

    pub fn max(&self) -> u64 {
        *self.elements.iter().max().expect("Apéry set is never empty")
    }

    pub fn contains(&self, x: u64) -> bool {
        self.elements[(x % self.modulus) as usize] == x
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}
