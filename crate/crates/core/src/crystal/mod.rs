//! The abstract crystal contract and the algorithms that only use it.

mod checks;
mod graph;
mod xi;

use std::fmt;
use std::hash::Hash;

use crate::base::Weight;

pub use checks::{character, check_crystal_axioms, is_morphism, verify_xi_properties};
pub use graph::{export_graph, CrystalGraph};
pub use xi::{
    component_of, components, kashiwara_reflection, schuetzenberger, to_highest_path,
    to_highest_path_by, to_lowest_path_by, Component, Schutzenberger, SearchOrder,
};

/// A finite gl_k crystal. Kashiwara operators are indexed by nodes
/// `1..rank`; callers keep indices in range. A `None` result is the null
/// element.
pub trait Crystal {
    type Elem: Clone + Eq + Hash + Ord + fmt::Debug;

    fn rank(&self) -> usize;

    fn weight(&self, b: &Self::Elem) -> Weight;

    /// `e_i`
    fn raise(&self, i: usize, b: &Self::Elem) -> Option<Self::Elem>;

    /// `f_i`
    fn lower(&self, i: usize, b: &Self::Elem) -> Option<Self::Elem>;

    /// Length of the `e_i`-string above `b`.
    fn epsilon(&self, i: usize, b: &Self::Elem) -> usize {
        string_length(b, |x| self.raise(i, x))
    }

    /// Length of the `f_i`-string below `b`.
    fn phi(&self, i: usize, b: &Self::Elem) -> usize {
        string_length(b, |x| self.lower(i, x))
    }

    /// Canonical text encoding, used for graph ids and reports.
    fn label(&self, b: &Self::Elem) -> String;
}

pub(crate) fn string_length<E, F: Fn(&E) -> Option<E>>(b: &E, step: F) -> usize {
    let mut n = 0;
    let mut cur = step(b);
    while let Some(next) = cur {
        n += 1;
        cur = step(&next);
    }
    n
}

impl<C: Crystal + ?Sized> Crystal for &C {
    type Elem = C::Elem;

    fn rank(&self) -> usize {
        (**self).rank()
    }
    fn weight(&self, b: &Self::Elem) -> Weight {
        (**self).weight(b)
    }
    fn raise(&self, i: usize, b: &Self::Elem) -> Option<Self::Elem> {
        (**self).raise(i, b)
    }
    fn lower(&self, i: usize, b: &Self::Elem) -> Option<Self::Elem> {
        (**self).lower(i, b)
    }
    fn epsilon(&self, i: usize, b: &Self::Elem) -> usize {
        (**self).epsilon(i, b)
    }
    fn phi(&self, i: usize, b: &Self::Elem) -> usize {
        (**self).phi(i, b)
    }
    fn label(&self, b: &Self::Elem) -> String {
        (**self).label(b)
    }
}

/// Closure of `seeds` under every `e_i` and `f_i`, sorted.
pub fn closure<C: Crystal>(c: &C, seeds: &[C::Elem]) -> Vec<C::Elem> {
    let mut seen: std::collections::BTreeSet<C::Elem> = seeds.iter().cloned().collect();
    let mut stack: Vec<C::Elem> = seeds.to_vec();
    while let Some(b) = stack.pop() {
        for i in 1..c.rank() {
            for next in [c.raise(i, &b), c.lower(i, &b)].into_iter().flatten() {
                if seen.insert(next.clone()) {
                    stack.push(next);
                }
            }
        }
    }
    seen.into_iter().collect()
}
