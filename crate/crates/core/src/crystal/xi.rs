//! Components, extremal elements and Schützenberger involutions by path
//! transport.

use std::cell::RefCell;
use std::collections::{BTreeSet, HashMap, HashSet};

use super::Crystal;
use crate::base::Interval;
use crate::error::{CrystalError, Result};

/// Which raising operator to try first when several apply.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum SearchOrder {
    #[default]
    SmallestFirst,
    LargestFirst,
}

/// A connected component of the crystal graph restricted to an interval.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component<E> {
    /// Sorted.
    pub elements: Vec<E>,
    pub highest: E,
    pub lowest: E,
}

fn first_step<C: Crystal>(
    b: &C::Elem,
    j: Interval,
    order: SearchOrder,
    step: impl Fn(usize, &C::Elem) -> Option<C::Elem>,
) -> Option<(usize, C::Elem)> {
    match order {
        SearchOrder::SmallestFirst => j.nodes().find_map(|i| step(i, b).map(|x| (i, x))),
        SearchOrder::LargestFirst => j.nodes().rev().find_map(|i| step(i, b).map(|x| (i, x))),
    }
}

/// Raises `b` to the highest weight element of its `j`-component, always
/// applying the smallest available index. Returns the highest element and the
/// indices in the order they were applied; lowering the highest element along
/// the reversed sequence gives back `b`.
pub fn to_highest_path<C: Crystal>(c: &C, b: &C::Elem, j: Interval) -> (C::Elem, Vec<usize>) {
    to_highest_path_by(c, b, j, SearchOrder::SmallestFirst)
}

pub fn to_highest_path_by<C: Crystal>(
    c: &C,
    b: &C::Elem,
    j: Interval,
    order: SearchOrder,
) -> (C::Elem, Vec<usize>) {
    let mut cur = b.clone();
    let mut path = Vec::new();
    while let Some((i, next)) = first_step::<C>(&cur, j, order, |i, x| c.raise(i, x)) {
        path.push(i);
        cur = next;
    }
    (cur, path)
}

/// Lowering counterpart of [`to_highest_path_by`].
pub fn to_lowest_path_by<C: Crystal>(
    c: &C,
    b: &C::Elem,
    j: Interval,
    order: SearchOrder,
) -> (C::Elem, Vec<usize>) {
    let mut cur = b.clone();
    let mut path = Vec::new();
    while let Some((i, next)) = first_step::<C>(&cur, j, order, |i, x| c.lower(i, x)) {
        path.push(i);
        cur = next;
    }
    (cur, path)
}

/// Materializes the `j`-component containing `seed` and locates its unique
/// highest and lowest weight elements.
pub fn component_of<C: Crystal>(c: &C, seed: &C::Elem, j: Interval) -> Result<Component<C::Elem>> {
    let mut seen: BTreeSet<C::Elem> = BTreeSet::new();
    seen.insert(seed.clone());
    let mut stack = vec![seed.clone()];
    while let Some(b) = stack.pop() {
        for i in j.nodes() {
            for next in [c.raise(i, &b), c.lower(i, &b)].into_iter().flatten() {
                if seen.insert(next.clone()) {
                    stack.push(next);
                }
            }
        }
    }
    let highest: Vec<&C::Elem> =
        seen.iter().filter(|b| j.nodes().all(|i| c.raise(i, b).is_none())).collect();
    let lowest: Vec<&C::Elem> =
        seen.iter().filter(|b| j.nodes().all(|i| c.lower(i, b).is_none())).collect();
    if highest.len() != 1 || lowest.len() != 1 {
        return Err(CrystalError::ComponentAnomaly(format!(
            "component of {} under {j} has {} highest and {} lowest weight elements",
            c.label(seed),
            highest.len(),
            lowest.len()
        )));
    }
    let (highest, lowest) = (highest[0].clone(), lowest[0].clone());
    Ok(Component { elements: seen.into_iter().collect(), highest, lowest })
}

/// Splits `set` into `j`-components. `set` must be closed under the
/// operators indexed by `j`.
pub fn components<C: Crystal>(
    c: &C,
    set: &[C::Elem],
    j: Interval,
) -> Result<Vec<Component<C::Elem>>> {
    let members: HashSet<&C::Elem> = set.iter().collect();
    let mut done: HashSet<C::Elem> = HashSet::new();
    let mut sorted: Vec<&C::Elem> = set.iter().collect();
    sorted.sort();
    let mut out = Vec::new();
    for b in sorted {
        if done.contains(b) {
            continue;
        }
        let comp = component_of(c, b, j)?;
        for x in &comp.elements {
            if !members.contains(x) {
                return Err(CrystalError::Precondition(format!(
                    "set is not closed: {} is reachable from {}",
                    c.label(x),
                    c.label(b)
                )));
            }
            done.insert(x.clone());
        }
        out.push(comp);
    }
    Ok(out)
}

/// Lowest element of the component of `(J, highest)`.
type LowestMemo<E> = HashMap<(Interval, E), E>;

/// Schützenberger involutions `xi_J` with a per-instance memo of the lowest
/// element of each component, keyed by its highest element. Owns its crystal;
/// pass `&crystal` to borrow instead.
///
/// Not `Sync`; parallel callers keep one per worker.
pub struct Schutzenberger<C: Crystal> {
    crystal: C,
    order: SearchOrder,
    lowest: RefCell<LowestMemo<C::Elem>>,
}

impl<C: Crystal> Schutzenberger<C> {
    pub fn new(crystal: C) -> Self {
        Self::with_order(crystal, SearchOrder::SmallestFirst)
    }

    pub fn with_order(crystal: C, order: SearchOrder) -> Self {
        Schutzenberger { crystal, order, lowest: RefCell::new(HashMap::new()) }
    }

    pub fn crystal(&self) -> &C {
        &self.crystal
    }

    fn lowest_below(&self, highest: &C::Elem, j: Interval) -> Result<C::Elem> {
        let key = (j, highest.clone());
        if let Some(lo) = self.lowest.borrow().get(&key) {
            return Ok(lo.clone());
        }
        let comp = component_of(&self.crystal, highest, j)?;
        if &comp.highest != highest {
            return Err(CrystalError::ComponentAnomaly(format!(
                "raising {} did not end at the component's highest element",
                self.crystal.label(highest)
            )));
        }
        self.lowest.borrow_mut().insert(key, comp.lowest.clone());
        Ok(comp.lowest)
    }

    /// `xi_J(b)`: raise `b` to the highest element recording the path
    /// `i_1, ..., i_t`, then return `e_{theta(i_1)} ... e_{theta(i_t)}` applied
    /// to the lowest element.
    pub fn apply(&self, b: &C::Elem, j: Interval) -> Result<C::Elem> {
        let (hi, path) = to_highest_path_by(&self.crystal, b, j, self.order);
        let mut cur = self.lowest_below(&hi, j)?;
        for &i in path.iter().rev() {
            let t = j.theta(i)?;
            cur = self.crystal.raise(t, &cur).ok_or_else(|| {
                CrystalError::ComponentAnomaly(format!(
                    "e_{t} vanished while transporting {} under {j}",
                    self.crystal.label(b)
                ))
            })?;
        }
        Ok(cur)
    }

    /// `xi` for the whole diagram; the identity in rank 1.
    pub fn apply_full(&self, b: &C::Elem) -> Result<C::Elem> {
        match Interval::full(self.crystal.rank()) {
            Some(j) => self.apply(b, j),
            None => Ok(b.clone()),
        }
    }
}

/// One-shot `xi_J(b)`.
pub fn schuetzenberger<C: Crystal>(c: &C, b: &C::Elem, j: Interval) -> Result<C::Elem> {
    Schutzenberger::new(c).apply(b, j)
}

/// Kashiwara's reflection `s_i`: `f_i^d(b)` when `d = <wt(b), alpha_i^vee> >= 0`,
/// otherwise `e_i^{-d}(b)`.
pub fn kashiwara_reflection<C: Crystal>(c: &C, b: &C::Elem, i: usize) -> Result<C::Elem> {
    let d = c.weight(b).coroot(i);
    let mut cur = b.clone();
    for _ in 0..d.unsigned_abs() {
        let next = if d >= 0 { c.lower(i, &cur) } else { c.raise(i, &cur) };
        cur = next.ok_or_else(|| {
            CrystalError::ComponentAnomaly(format!(
                "{}-string through {} is shorter than its weight allows",
                i,
                c.label(b)
            ))
        })?;
    }
    Ok(cur)
}
