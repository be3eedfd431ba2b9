//! The m-fold tensor product rule.
//!
//! For `b = b_1 ⊗ ... ⊗ b_m` set
//! `eps^k = eps(b_k) - <alpha_i^vee, wt(b_1) + ... + wt(b_{k-1})>` and
//! `phi^k = phi(b_k) + <alpha_i^vee, wt(b_{k+1}) + ... + wt(b_m)>`.
//! `e_i` acts on the first factor attaining a positive maximal `eps^k`, and
//! `f_i` on the last factor attaining a positive maximal `phi^k`.

use crate::base::Weight;
use crate::crystal::Crystal;

/// Tensor products of any number of factors from one factor crystal; an
/// element is the sequence of its factors, left to right.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TensorCrystal<C> {
    factor: C,
}

impl<C: Crystal> TensorCrystal<C> {
    pub fn new(factor: C) -> Self {
        TensorCrystal { factor }
    }

    pub fn factor(&self) -> &C {
        &self.factor
    }
}

/// The profiles `(eps^1, ..., eps^m)` and `(phi^1, ..., phi^m)` at node `i`.
pub fn tensor_profiles<C: Crystal>(c: &C, t: &[C::Elem], i: usize) -> (Vec<i64>, Vec<i64>) {
    let coroots: Vec<i64> = t.iter().map(|b| c.weight(b).coroot(i)).collect();
    let mut eps = Vec::with_capacity(t.len());
    let mut before = 0;
    for (b, d) in t.iter().zip(&coroots) {
        eps.push(c.epsilon(i, b) as i64 - before);
        before += d;
    }
    let mut phi = vec![0; t.len()];
    let mut after = 0;
    for (k, b) in t.iter().enumerate().rev() {
        phi[k] = c.phi(i, b) as i64 + after;
        after += coroots[k];
    }
    (eps, phi)
}

fn positive_max(profile: &[i64]) -> i64 {
    profile.iter().copied().max().unwrap_or(0).max(0)
}

impl<C: Crystal> Crystal for TensorCrystal<C> {
    type Elem = Vec<C::Elem>;

    fn rank(&self) -> usize {
        self.factor.rank()
    }

    fn weight(&self, t: &Self::Elem) -> Weight {
        t.iter().fold(Weight::zero(self.rank()), |w, b| w.add(&self.factor.weight(b)))
    }

    fn raise(&self, i: usize, t: &Self::Elem) -> Option<Self::Elem> {
        let (eps, _) = tensor_profiles(&self.factor, t, i);
        let top = positive_max(&eps);
        if top == 0 {
            return None;
        }
        let s = eps.iter().position(|&x| x == top)?;
        let mut out = t.clone();
        out[s] = self.factor.raise(i, &t[s])?;
        Some(out)
    }

    fn lower(&self, i: usize, t: &Self::Elem) -> Option<Self::Elem> {
        let (_, phi) = tensor_profiles(&self.factor, t, i);
        let top = positive_max(&phi);
        if top == 0 {
            return None;
        }
        let s = phi.iter().rposition(|&x| x == top)?;
        let mut out = t.clone();
        out[s] = self.factor.lower(i, &t[s])?;
        Some(out)
    }

    fn epsilon(&self, i: usize, t: &Self::Elem) -> usize {
        positive_max(&tensor_profiles(&self.factor, t, i).0) as usize
    }

    fn phi(&self, i: usize, t: &Self::Elem) -> usize {
        positive_max(&tensor_profiles(&self.factor, t, i).1) as usize
    }

    fn label(&self, t: &Self::Elem) -> String {
        let parts: Vec<String> = t.iter().map(|b| self.factor.label(b)).collect();
        format!("({})", parts.join(" ⊗ "))
    }
}

/// The two-factor rule: `e_i` acts on `a` when `phi_i(a) >= eps_i(b)`, and
/// `f_i` acts on `a` when `phi_i(a) > eps_i(b)`; otherwise on `b`. Kept as an
/// independent oracle for the m-fold rule.
pub fn binary_raise<C: Crystal>(c: &C, i: usize, a: &C::Elem, b: &C::Elem) -> Option<(C::Elem, C::Elem)> {
    if c.phi(i, a) >= c.epsilon(i, b) {
        Some((c.raise(i, a)?, b.clone()))
    } else {
        Some((a.clone(), c.raise(i, b)?))
    }
}

pub fn binary_lower<C: Crystal>(c: &C, i: usize, a: &C::Elem, b: &C::Elem) -> Option<(C::Elem, C::Elem)> {
    if c.phi(i, a) > c.epsilon(i, b) {
        Some((c.lower(i, a)?, b.clone()))
    } else {
        Some((a.clone(), c.lower(i, b)?))
    }
}
