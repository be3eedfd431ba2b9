//! Partitions, integer weights, type A Dynkin intervals and permutations.
//!
//! Nodes of the gl_k Dynkin diagram are numbered `1..k`, so node `i` joins
//! weight coordinates `i` and `i + 1`. The interval `[p, q]` stands for the
//! connected subdiagram `{p, ..., q - 1}`, matching the `s_{p,q}` cactus
//! generator notation.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{CrystalError, Result};

/// A partition, stored without trailing zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(CrystalError::InvalidPartition(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Nonzero parts.
    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of boxes.
    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn transpose(&self) -> Partition {
        let cols = self.part(0);
        let parts = (0..cols)
            .map(|c| self.0.iter().take_while(|&&r| r > c).count())
            .collect();
        Partition(parts)
    }

    pub fn fits_in(&self, rows: usize, cols: usize) -> bool {
        self.len() <= rows && self.part(0) <= cols
    }

    /// The parts padded with zeros to `len` entries.
    pub fn padded(&self, len: usize) -> Vec<usize> {
        (0..len).map(|i| self.part(i)).collect()
    }

    /// All partitions of `size` with at most `rows` parts, each at most `cols`.
    pub fn in_box(size: usize, rows: usize, cols: usize) -> Vec<Partition> {
        fn go(rest: usize, max: usize, rows: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            if rows == 0 {
                return;
            }
            for p in (1..=max.min(rest)).rev() {
                cur.push(p);
                go(rest - p, p, rows - 1, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(size, cols, rows, &mut Vec::new(), &mut out);
        out
    }

    /// All partitions of `size`.
    pub fn of_size(size: usize) -> Vec<Partition> {
        Partition::in_box(size, size, size)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for Partition {
    type Err = CrystalError;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|e| CrystalError::InvalidPartition(format!("{s:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// An integer gl_k weight.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(Vec<i64>);

impl Weight {
    pub fn new(entries: Vec<i64>) -> Self {
        Weight(entries)
    }

    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    /// `<wt, alpha_i^vee>` for node `i`.
    pub fn coroot(&self, i: usize) -> i64 {
        self.0[i - 1] - self.0[i]
    }

    /// `wt + alpha_i`.
    pub fn plus_root(&self, i: usize) -> Weight {
        let mut w = self.0.clone();
        w[i - 1] += 1;
        w[i] -= 1;
        Weight(w)
    }

    pub fn add(&self, other: &Weight) -> Weight {
        debug_assert_eq!(self.rank(), other.rank());
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Sum of the entries.
    pub fn total(&self) -> i64 {
        self.0.iter().sum()
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl FromStr for Weight {
    type Err = CrystalError;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|s| s.strip_suffix(']'))
            .ok_or_else(|| CrystalError::InvalidWeight(format!("{s:?} is not bracketed")))?;
        if inner.trim().is_empty() {
            return Ok(Weight(Vec::new()));
        }
        inner
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<i64>()
                    .map_err(|e| CrystalError::InvalidWeight(format!("{s:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()
            .map(Weight)
    }
}

/// A connected subdiagram `{p, ..., q - 1}` of the gl_k Dynkin diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Interval {
    p: usize,
    q: usize,
    rank: usize,
}

impl Interval {
    pub fn new(p: usize, q: usize, rank: usize) -> Result<Self> {
        if p < 1 || p >= q || q > rank {
            return Err(CrystalError::InvalidInterval { p, q, rank });
        }
        Ok(Interval { p, q, rank })
    }

    /// The whole diagram, or `None` for gl_1 which has no nodes.
    pub fn full(rank: usize) -> Option<Self> {
        Interval::new(1, rank, rank).ok()
    }

    /// The single node `{i}`.
    pub fn node(i: usize, rank: usize) -> Result<Self> {
        Interval::new(i, i + 1, rank)
    }

    /// Every connected subdiagram, ordered by `(p, q)`.
    pub fn all(rank: usize) -> Vec<Interval> {
        let mut out = Vec::new();
        for p in 1..rank {
            for q in p + 1..=rank {
                out.push(Interval { p, q, rank });
            }
        }
        out
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn nodes(&self) -> std::ops::Range<usize> {
        self.p..self.q
    }

    pub fn contains(&self, i: usize) -> bool {
        self.p <= i && i < self.q
    }

    pub fn contains_interval(&self, other: &Interval) -> bool {
        self.p <= other.p && other.q <= self.q
    }

    /// True when the union of the two node sets is connected.
    pub fn connected_with(&self, other: &Interval) -> bool {
        other.p <= self.q && self.p <= other.q
    }

    /// The diagram involution of this subdiagram: `i -> p + q - 1 - i`.
    pub fn theta(&self, i: usize) -> Result<usize> {
        if !self.contains(i) {
            return Err(CrystalError::NodeNotInInterval { node: i, p: self.p, q: self.q });
        }
        Ok(self.p + self.q - 1 - i)
    }

    /// Image of a nested subdiagram under [`Interval::theta`].
    pub fn theta_interval(&self, inner: &Interval) -> Result<Interval> {
        if !self.contains_interval(inner) {
            return Err(CrystalError::Precondition(format!("{inner} is not inside {self}")));
        }
        Interval::new(self.p + self.q - inner.q, self.p + self.q - inner.p, self.rank)
    }

    /// Longest element of the parabolic subgroup: reversal of positions `p..=q`.
    pub fn weyl_longest(&self) -> Permutation {
        let mut images: Vec<usize> = (0..self.rank).collect();
        for pos in self.p..=self.q {
            images[pos - 1] = self.p + self.q - pos - 1;
        }
        Permutation(images)
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "s[{},{}]", self.p, self.q)
    }
}

/// A permutation of `{1, ..., k}`, stored 0-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn identity(k: usize) -> Self {
        Permutation((0..k).collect())
    }

    /// From 1-based one-line notation.
    pub fn from_one_line(images: &[usize]) -> Result<Self> {
        let k = images.len();
        let mut seen = vec![false; k];
        for &x in images {
            if x < 1 || x > k || seen[x - 1] {
                return Err(CrystalError::Precondition(format!(
                    "{images:?} is not a permutation"
                )));
            }
            seen[x - 1] = true;
        }
        Ok(Permutation(images.iter().map(|x| x - 1).collect()))
    }

    /// The transposition of positions `i` and `i + 1`.
    pub fn simple(i: usize, k: usize) -> Self {
        let mut images: Vec<usize> = (0..k).collect();
        images.swap(i - 1, i);
        Permutation(images)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    /// Image of the 1-based point `i`.
    pub fn image(&self, i: usize) -> usize {
        self.0[i - 1] + 1
    }

    /// 1-based one-line notation.
    pub fn one_line(&self) -> Vec<usize> {
        self.0.iter().map(|x| x + 1).collect()
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &Permutation) -> Permutation {
        Permutation(self.0.iter().map(|&i| next.0[i]).collect())
    }

    /// Permutes coordinates: entry `i` of `w` moves to position `self(i)`.
    pub fn act(&self, w: &Weight) -> Weight {
        let mut out = vec![0; w.rank()];
        for (i, &x) in w.entries().iter().enumerate() {
            out[self.0[i]] = x;
        }
        Weight::new(out)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i == x)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.one_line().iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Formal sum of weights with multiplicities.
pub type Character = BTreeMap<Weight, usize>;

/// Content weights of all semistandard fillings of `shape` with entries in
/// `1..=rank`, by direct backtracking. Shares no code with the crystal models.
pub fn schur_bruteforce(shape: &Partition, rank: usize) -> Result<Character> {
    if shape.len() > rank {
        return Err(CrystalError::Precondition(format!(
            "shape {shape} has more than {rank} rows"
        )));
    }
    let cells: Vec<(usize, usize)> = shape
        .parts()
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
        .collect();
    let mut grid: Vec<Vec<usize>> = shape.parts().iter().map(|&len| vec![0; len]).collect();
    let mut content = vec![0i64; rank];
    let mut out = Character::new();

    fn fill(
        idx: usize,
        cells: &[(usize, usize)],
        grid: &mut Vec<Vec<usize>>,
        content: &mut Vec<i64>,
        rank: usize,
        out: &mut Character,
    ) {
        if idx == cells.len() {
            *out.entry(Weight::new(content.clone())).or_insert(0) += 1;
            return;
        }
        let (r, c) = cells[idx];
        let left = if c > 0 { grid[r][c - 1] } else { 1 };
        let above = if r > 0 { grid[r - 1][c] + 1 } else { 1 };
        for v in left.max(above)..=rank {
            grid[r][c] = v;
            content[v - 1] += 1;
            fill(idx + 1, cells, grid, content, rank, out);
            content[v - 1] -= 1;
        }
    }

    fill(0, &cells, &mut grid, &mut content, rank, &mut out);
    Ok(out)
}

/// Binomial coefficient, exact.
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn transpose_examples() {
        assert_eq!(part("5,3,1").transpose(), part("3,2,2,1,1"));
        assert_eq!(Partition::empty().transpose(), Partition::empty());
        assert_eq!(part("2,2").transpose(), part("2,2"));
    }

    #[test]
    fn transpose_is_involutive_up_to_eight_boxes() {
        for n in 0..=8 {
            for p in Partition::of_size(n) {
                assert_eq!(p.transpose().transpose(), p);
                assert_eq!(p.transpose().size(), n);
            }
        }
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=8).map(|n| Partition::of_size(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22]);
    }

    #[test]
    fn trailing_zeros_are_ignored() {
        assert_eq!(part("5,3,1,0"), part("5,3,1"));
        assert_eq!(part("2,1,0").to_string(), "2,1");
        assert!("1,2".parse::<Partition>().is_err());
    }

    #[test]
    fn weight_text_form() {
        let w: Weight = "[2,1,0]".parse().unwrap();
        assert_eq!(w.entries(), &[2, 1, 0]);
        assert_eq!(w.to_string(), "[2,1,0]");
        assert_eq!(w.coroot(1), 1);
        assert!("2,1".parse::<Weight>().is_err());
    }

    #[test]
    fn theta_examples() {
        let full = Interval::full(5).unwrap();
        for i in 1..5 {
            assert_eq!(full.theta(i).unwrap(), 5 - i);
        }
        let j = Interval::new(2, 4, 4).unwrap();
        assert_eq!(j.theta(2).unwrap(), 3);
        let j = Interval::new(3, 7, 8).unwrap();
        assert_eq!(j.theta(3).unwrap(), 6);
        assert!(j.theta(7).is_err());
        assert!(j.theta(2).is_err());
    }

    #[test]
    fn theta_is_involutive() {
        for k in 2..=8 {
            for j in Interval::all(k) {
                for i in j.nodes() {
                    assert_eq!(j.theta(j.theta(i).unwrap()).unwrap(), i);
                }
            }
        }
    }

    #[test]
    fn invalid_intervals() {
        assert!(Interval::new(0, 2, 3).is_err());
        assert!(Interval::new(2, 2, 3).is_err());
        assert!(Interval::new(2, 4, 3).is_err());
        assert!(Interval::full(1).is_none());
    }

    #[test]
    fn weyl_longest_examples() {
        let w = Interval::full(3).unwrap().weyl_longest();
        assert_eq!(w.one_line(), vec![3, 2, 1]);
        let w = Interval::node(1, 3).unwrap().weyl_longest();
        assert_eq!(w.one_line(), vec![2, 1, 3]);
        let w = Interval::new(2, 4, 4).unwrap().weyl_longest();
        assert_eq!(w.one_line(), vec![1, 4, 3, 2]);
    }

    #[test]
    fn weyl_longest_has_order_two() {
        for k in 2..=8 {
            for j in Interval::all(k) {
                let w = j.weyl_longest();
                assert!(w.then(&w).is_identity());
                for i in 0..=(j.q() - j.p()) {
                    assert_eq!(w.image(j.p() + i), j.q() - i);
                }
            }
        }
    }

    #[test]
    fn permutation_action_composes() {
        let a = Permutation::from_one_line(&[2, 3, 1]).unwrap();
        let b = Permutation::simple(1, 3);
        let w = Weight::new(vec![5, 7, 11]);
        assert_eq!(a.then(&b).act(&w), b.act(&a.act(&w)));
        assert_eq!(b.act(&w).entries(), &[7, 5, 11]);
    }

    #[test]
    fn schur_examples() {
        let one = schur_bruteforce(&part("1"), 2).unwrap();
        assert_eq!(one.len(), 2);
        assert_eq!(one[&Weight::new(vec![1, 0])], 1);
        assert_eq!(one[&Weight::new(vec![0, 1])], 1);

        let two = schur_bruteforce(&part("2,0"), 2).unwrap();
        let expected: Character = [(vec![2, 0], 1), (vec![1, 1], 1), (vec![0, 2], 1)]
            .into_iter()
            .map(|(w, c)| (Weight::new(w), c))
            .collect();
        assert_eq!(two, expected);

        let adj = schur_bruteforce(&part("2,1,0"), 3).unwrap();
        assert_eq!(adj.values().sum::<usize>(), 8);
        assert_eq!(adj[&Weight::new(vec![1, 1, 1])], 2);

        assert!(schur_bruteforce(&part("1,1,1"), 2).is_err());
    }

    #[test]
    fn schur_is_symmetric() {
        for size in 0..=6 {
            for shape in Partition::of_size(size) {
                for k in shape.len().max(1)..=4 {
                    let ch = schur_bruteforce(&shape, k).unwrap();
                    for i in 1..k {
                        let r = Permutation::simple(i, k);
                        for (w, &c) in &ch {
                            assert_eq!(ch.get(&r.act(w)).copied().unwrap_or(0), c);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(9, 3), 84);
        assert_eq!(binomial(12, 6), 924);
        assert_eq!(binomial(3, 5), 0);
        assert_eq!(binomial(0, 0), 1);
    }
}
