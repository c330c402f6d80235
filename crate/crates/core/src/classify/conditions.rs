//! Each class has several equivalent characterizations. They are evaluated
//! here one by one, independently, so that their agreement can be checked.

use serde::Serialize;

use crate::factorization::{
    apery_m_maximal_elements, apery_unique_expression, apery_unique_maximal_expression, is_m_pure,
};
use crate::invariants::{
    alpha_profile, beta_profile, box_equals_apery, box_volume, gamma_profile, phi_profile, tau_profile,
    weighted_sum, InvariantProfile,
};
use crate::semigroup::NumericalSemigroup;

/// Named boolean conditions that should all agree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Characterization {
    pub class: &'static str,
    pub conditions: Vec<(&'static str, bool)>,
}

impl Characterization {
    pub fn consistent(&self) -> bool {
        self.conditions.windows(2).all(|w| w[0].1 == w[1].1)
    }

    /// The common value, if consistent.
    pub fn value(&self) -> Option<bool> {
        self.consistent().then(|| self.conditions[0].1)
    }
}

fn all_true(class: &'static str, labels: &[&'static str]) -> Characterization {
    Characterization { class, conditions: labels.iter().map(|&l| (l, true)).collect() }
}

fn frobenius_plus_m(s: &NumericalSemigroup) -> u128 {
    (s.frobenius() + s.multiplicity() as i64) as u128
}

/// box = Ap(S), `f + m = Σ v_i g_i`, `m = Π (v_i + 1)`.
fn box_conditions(s: &NumericalSemigroup, profile: &InvariantProfile) -> [(&'static str, bool); 3] {
    let m = s.multiplicity();
    [
        ("apery_is_box", box_equals_apery(s, s.generators(), &profile.values)),
        ("frobenius_sum", frobenius_plus_m(s) == profile.weighted_sum(s)),
        ("volume", profile.box_volume() == Some(m as u128)),
    ]
}

pub fn telescopic(s: &NumericalSemigroup) -> Characterization {
    const LABELS: [&str; 3] = ["apery_is_box", "frobenius_sum", "volume"];
    if s.is_naturals() {
        return all_true("telescopic", &LABELS);
    }
    let tau = tau_profile(s).expect("τ profile");
    Characterization { class: "telescopic", conditions: box_conditions(s, &tau).to_vec() }
}

pub fn alpha(s: &NumericalSemigroup) -> Characterization {
    const LABELS: [&str; 5] =
        ["apery_is_box", "unique_maximal_with_unique_rep", "symmetric_unique_expression", "frobenius_sum", "volume"];
    if s.is_naturals() {
        return all_true("alpha_rect", &LABELS);
    }
    let profile = alpha_profile(s).expect("α profile");
    let [boxed, sum, volume] = box_conditions(s, &profile);
    let maxima = s.apery_maximal_elements();
    let fac = s.apery_factorizations();
    let unique_max = maxima.len() == 1 && fac.get(maxima[0]).expect("Apéry element").has_unique_representation();
    Characterization {
        class: "alpha_rect",
        conditions: vec![
            boxed,
            (LABELS[1], unique_max),
            (LABELS[2], s.is_symmetric() && apery_unique_expression(s)),
            sum,
            volume,
        ],
    }
}

pub fn beta(s: &NumericalSemigroup) -> Characterization {
    const LABELS: [&str; 5] = [
        "apery_is_box",
        "m_pure_symmetric_unique_maximal_expression",
        "unique_m_maximal_with_unique_maximal_rep",
        "frobenius_sum",
        "volume",
    ];
    if s.is_naturals() {
        return all_true("beta_rect", &LABELS);
    }
    let profile = beta_profile(s).expect("β profile");
    let [boxed, sum, volume] = box_conditions(s, &profile);
    let maxima = apery_m_maximal_elements(s);
    let fac = s.apery_factorizations();
    let unique_m_max =
        maxima.len() == 1 && fac.get(maxima[0]).expect("Apéry element").has_unique_maximal_representation();
    Characterization {
        class: "beta_rect",
        conditions: vec![
            boxed,
            (LABELS[1], is_m_pure(s) && s.is_symmetric() && apery_unique_maximal_expression(s)),
            (LABELS[2], unique_m_max),
            sum,
            volume,
        ],
    }
}

pub fn gamma(s: &NumericalSemigroup) -> Characterization {
    const LABELS: [&str; 3] = ["apery_is_box", "frobenius_sum", "volume"];
    if s.is_naturals() {
        return all_true("gamma_rect", &LABELS);
    }
    let profile = gamma_profile(s).expect("γ profile");
    Characterization { class: "gamma_rect", conditions: box_conditions(s, &profile).to_vec() }
}

/// The three freeness conditions for one fixed arrangement `order`.
pub fn free_for(s: &NumericalSemigroup, order: &[u64]) -> Characterization {
    const LABELS: [&str; 3] = ["apery_is_box", "frobenius_sum", "volume"];
    if s.is_naturals() {
        return all_true("free", &LABELS);
    }
    let a = phi_profile(s, order).expect("arrangement of the generators");
    let n1 = order[0];
    Characterization {
        class: "free",
        conditions: vec![
            (LABELS[0], box_equals_apery(s, order, &a.phi)),
            (LABELS[1], (s.frobenius() + n1 as i64) as u128 == weighted_sum(&a.phi, &order[1..])),
            (LABELS[2], box_volume(&a.phi) == Some(n1 as u128)),
        ],
    }
}

/// Direct symmetry versus a unique maximal element of `(Ap(S), ⪯)`.
pub fn symmetric(s: &NumericalSemigroup) -> Characterization {
    Characterization {
        class: "symmetric",
        conditions: vec![
            ("definition", s.is_symmetric()),
            ("unique_apery_maximum", s.apery_maximal_elements().len() == 1),
        ],
    }
}

/// Every characterization that does not depend on a chosen arrangement.
pub fn all(s: &NumericalSemigroup) -> Vec<Characterization> {
    vec![symmetric(s), telescopic(s), alpha(s), beta(s), gamma(s)]
}
