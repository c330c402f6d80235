//! Slow, direct oracles that share no code with the library.

#![allow(dead_code)]

use std::collections::BTreeSet;

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// `member[x]` for `0 ≤ x ≤ limit`, by the coin-change recurrence.
pub fn coin_table(gens: &[u64], limit: u64) -> Vec<bool> {
    let mut member = vec![false; limit as usize + 1];
    member[0] = true;
    for x in 1..=limit as usize {
        member[x] = gens.iter().any(|&g| g as usize <= x && member[x - g as usize]);
    }
    member
}

/// A bound past which every integer lies in `⟨gens⟩` (gcd 1 assumed).
pub fn conductor_bound(gens: &[u64]) -> u64 {
    let m = gens.iter().min().copied().unwrap();
    let big = gens.iter().max().copied().unwrap();
    m * big + 1
}

/// Minimal generators of `⟨raw⟩`, from the coin table.
pub fn minimal_generators(raw: &[u64]) -> Vec<u64> {
    let limit = raw.iter().max().copied().unwrap();
    let member = coin_table(raw, limit);
    (1..=limit)
        .filter(|&c| member[c as usize] && !(1..c).any(|a| member[a as usize] && member[(c - a) as usize]))
        .collect()
}

pub struct Oracle {
    pub gens: Vec<u64>,
    pub member: Vec<bool>,
    pub limit: u64,
}

impl Oracle {
    pub fn new(gens: &[u64]) -> Self {
        let limit = 2 * conductor_bound(gens) + 2 * gens.iter().max().unwrap();
        Oracle { gens: gens.to_vec(), member: coin_table(gens, limit), limit }
    }

    pub fn contains(&self, x: i64) -> bool {
        x >= 0 && (x as u64 > self.limit || self.member[x as usize])
    }

    pub fn m(&self) -> u64 {
        self.gens[0]
    }

    pub fn frobenius(&self) -> i64 {
        (0..=self.limit as i64).rev().find(|&x| !self.contains(x)).unwrap_or(-1)
    }

    pub fn genus(&self) -> u64 {
        (0..=self.limit as i64).filter(|&x| !self.contains(x)).count() as u64
    }

    pub fn apery(&self) -> BTreeSet<u64> {
        let m = self.m() as i64;
        (0..=self.frobenius() + m)
            .filter(|&x| self.contains(x) && !self.contains(x - m))
            .map(|x| x as u64)
            .collect()
    }

    /// Every representation of `x`, as coefficient vectors.
    pub fn reps(&self, x: u64) -> Vec<Vec<u64>> {
        fn go(gens: &[u64], i: usize, rest: u64, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
            if i == gens.len() {
                if rest == 0 {
                    out.push(cur.clone());
                }
                return;
            }
            for c in 0..=rest / gens[i] {
                cur.push(c);
                go(gens, i + 1, rest - c * gens[i], cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(&self.gens, 0, x, &mut Vec::new(), &mut out);
        out
    }

    pub fn ord(&self, x: u64) -> Option<u64> {
        self.reps(x).iter().map(|r| r.iter().sum()).max()
    }

    fn max_h(&self, g: u64, pred: impl Fn(u64, u64) -> bool) -> u64 {
        let ap = self.apery();
        let mut h = 0;
        while ap.contains(&((h + 1) * g)) && pred(h + 1, (h + 1) * g) {
            h += 1;
        }
        h
    }

    pub fn alpha(&self) -> Vec<u64> {
        self.gens[1..].iter().map(|&g| self.max_h(g, |_, _| true)).collect()
    }

    pub fn beta(&self) -> Vec<u64> {
        self.gens[1..].iter().map(|&g| self.max_h(g, |h, x| self.ord(x) == Some(h))).collect()
    }

    pub fn gamma(&self) -> Vec<u64> {
        self.gens[1..]
            .iter()
            .map(|&g| {
                self.max_h(g, |h, x| {
                    let reps = self.reps(x);
                    reps.iter().filter(|r| r.iter().sum::<u64>() == h).count() == 1
                        && reps.iter().all(|r| r.iter().sum::<u64>() <= h)
                })
            })
            .collect()
    }

    pub fn tau(&self) -> Vec<u64> {
        phi(&self.gens)
    }

    pub fn is_symmetric(&self) -> bool {
        let f = self.frobenius();
        (0..=f).all(|x| self.contains(x) != self.contains(f - x))
    }
}

pub fn product_plus_one(values: &[u64]) -> u64 {
    values.iter().map(|v| v + 1).product()
}

/// `φ_i = min{h ≥ 1 | h·n_i ∈ ⟨n_1, …, n_{i−1}⟩} − 1` for an arrangement.
pub fn phi(order: &[u64]) -> Vec<u64> {
    (1..order.len())
        .map(|i| {
            let prefix = &order[..i];
            let member = coin_table(prefix, order[0] * order[i]);
            (1..=order[0]).find(|&h| member[(h * order[i]) as usize]).unwrap() - 1
        })
        .collect()
}

pub fn permutations(items: &[u64]) -> Vec<Vec<u64>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let x = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, x);
            out.push(p);
        }
    }
    out
}

/// Free iff some arrangement has `n_1 = Π (φ_i + 1)`.
pub fn free_by_permutations(gens: &[u64]) -> bool {
    gens.len() == 1 || permutations(gens).iter().any(|p| p[0] == product_plus_one(&phi(p)))
}

pub fn alpha_rectangular(gens: &[u64]) -> bool {
    gens.len() == 1 || {
        let o = Oracle::new(gens);
        product_plus_one(&o.alpha()) == o.m()
    }
}

pub fn telescopic(gens: &[u64]) -> bool {
    gens.len() == 1 || gens[0] == product_plus_one(&phi(gens))
}

/// Every gap set of size `g`, found by checking all `g`-subsets of
/// `{1, …, 2g − 1}` for closure of the complement.
pub fn gap_sets(g: usize) -> Vec<Vec<u64>> {
    if g == 0 {
        return vec![Vec::new()];
    }
    let top = 2 * g as u64 - 1;
    let universe: Vec<u64> = (1..=top).collect();
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..g).collect();
    loop {
        let gaps: Vec<u64> = idx.iter().map(|&i| universe[i]).collect();
        let in_s = |x: u64| !gaps.contains(&x);
        let closed = (1..=top).all(|a| !in_s(a) || (1..=top - a).all(|b| !in_s(b) || in_s(a + b)));
        if closed {
            out.push(gaps);
        }
        // next combination
        let mut i = g;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] < universe.len() - g + i {
                idx[i] += 1;
                for j in i + 1..g {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Minimal generators of the semigroup with the given gaps.
pub fn generators_from_gaps(gaps: &[u64]) -> Vec<u64> {
    let top = gaps.last().copied().unwrap_or(0) * 2 + 2;
    let in_s = |x: u64| !gaps.contains(&x);
    (1..=top)
        .filter(|&c| in_s(c) && !(1..c).any(|a| in_s(a) && in_s(c - a)))
        .collect()
}
