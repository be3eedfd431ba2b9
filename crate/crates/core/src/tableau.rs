//! Semistandard Young tableaux as the crystal `B_lambda` of gl_n, with
//! Kashiwara operators given by the signature rule on columns.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::base::{Partition, Weight};
use crate::crystal::{closure, Crystal};
use crate::error::{CrystalError, Result};

/// A semistandard tableau with entries in `1..=rank`, stored row by row in
/// English notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawSsyt")]
pub struct Ssyt {
    rank: usize,
    rows: Vec<Vec<usize>>,
}

#[derive(Deserialize)]
struct RawSsyt {
    rank: usize,
    rows: Vec<Vec<usize>>,
}

impl TryFrom<RawSsyt> for Ssyt {
    type Error = CrystalError;

    fn try_from(raw: RawSsyt) -> Result<Self> {
        Ssyt::new(raw.rank, raw.rows)
    }
}

/// Result of the signature rule for one node. Positions are 1-based
/// `(row, column)` cells.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Signature {
    pub epsilon: usize,
    pub phi: usize,
    /// The `i+1` changed by `e_i`.
    pub e_position: Option<(usize, usize)>,
    /// The `i` changed by `f_i`.
    pub f_position: Option<(usize, usize)>,
}

impl Ssyt {
    /// Validates semistandardness; trailing empty rows are dropped.
    pub fn new(rank: usize, mut rows: Vec<Vec<usize>>) -> Result<Self> {
        while rows.last().is_some_and(|r| r.is_empty()) {
            rows.pop();
        }
        let bad = |msg: String| Err(CrystalError::InvalidTableau(msg));
        if rows.len() > rank {
            return bad(format!("{} rows exceed rank {rank}", rows.len()));
        }
        for (r, row) in rows.iter().enumerate() {
            if row.is_empty() {
                return bad(format!("row {} is empty", r + 1));
            }
            if r > 0 && row.len() > rows[r - 1].len() {
                return bad(format!("row {} is longer than the row above", r + 1));
            }
            for (c, &x) in row.iter().enumerate() {
                if x == 0 || x > rank {
                    return bad(format!("entry {x} at ({},{}) is outside 1..={rank}", r + 1, c + 1));
                }
                if c > 0 && row[c - 1] > x {
                    return bad(format!("row {} decreases at column {}", r + 1, c + 1));
                }
                if r > 0 && rows[r - 1][c] >= x {
                    return bad(format!("column {} does not increase at row {}", c + 1, r + 1));
                }
            }
        }
        Ok(Ssyt { rank, rows })
    }

    /// The highest weight tableau of a shape: row `r` filled with `r`.
    pub fn highest(shape: &Partition, rank: usize) -> Result<Self> {
        let rows = shape.parts().iter().enumerate().map(|(r, &len)| vec![r + 1; len]).collect();
        Ssyt::new(rank, rows)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(Vec::len).collect()).expect("rows weakly decrease")
    }

    /// Column `c` (0-based), top to bottom.
    pub fn column(&self, c: usize) -> Vec<usize> {
        self.rows.iter().take_while(|r| r.len() > c).map(|r| r[c]).collect()
    }

    pub fn columns(&self) -> Vec<Vec<usize>> {
        let width = self.rows.first().map_or(0, Vec::len);
        (0..width).map(|c| self.column(c)).collect()
    }

    /// Content vector `(#1, ..., #n)`.
    pub fn weight(&self) -> Weight {
        let mut w = vec![0i64; self.rank];
        for &x in self.rows.iter().flatten() {
            w[x - 1] += 1;
        }
        Weight::new(w)
    }

    /// Entries `<= k` only: the subtableau `T_{<=k}`, regarded in rank `k`.
    pub fn restrict(&self, k: usize) -> Ssyt {
        let rows = self
            .rows
            .iter()
            .map(|r| r.iter().copied().filter(|&x| x <= k).collect())
            .collect();
        Ssyt::new(k, rows).expect("restriction of a tableau is a tableau")
    }

    /// The signature rule: read the columns left to right, writing `+` for
    /// a column containing `i+1` and then `-` for one containing `i`; cancel
    /// `+-` pairs. Unpaired `+` count `eps_i`, unpaired `-` count `phi_i`.
    pub fn signature(&self, i: usize) -> Result<Signature> {
        if i == 0 || i >= self.rank {
            return Err(CrystalError::IndexOutOfRange { index: i, rank: self.rank });
        }
        let mut open_plus: Vec<(usize, usize)> = Vec::new();
        let mut minus: Vec<(usize, usize)> = Vec::new();
        for c in 0..self.rows.first().map_or(0, Vec::len) {
            let col = self.column(c);
            if let Some(r) = col.iter().position(|&x| x == i + 1) {
                open_plus.push((r + 1, c + 1));
            }
            if let Some(r) = col.iter().position(|&x| x == i) {
                if open_plus.pop().is_none() {
                    minus.push((r + 1, c + 1));
                }
            }
        }
        Ok(Signature {
            epsilon: open_plus.len(),
            phi: minus.len(),
            e_position: open_plus.first().copied(),
            f_position: minus.last().copied(),
        })
    }

    fn replace(&self, (r, c): (usize, usize), value: usize) -> Ssyt {
        let mut rows = self.rows.clone();
        rows[r - 1][c - 1] = value;
        debug_assert!(Ssyt::new(self.rank, rows.clone()).is_ok());
        Ssyt { rank: self.rank, rows }
    }

    /// `e_i`: the `i+1` of the leftmost unpaired `+` becomes `i`.
    pub fn apply_e(&self, i: usize) -> Result<Option<Ssyt>> {
        Ok(self.signature(i)?.e_position.map(|pos| self.replace(pos, i)))
    }

    /// `f_i`: the `i` of the rightmost unpaired `-` becomes `i+1`.
    pub fn apply_f(&self, i: usize) -> Result<Option<Ssyt>> {
        Ok(self.signature(i)?.f_position.map(|pos| self.replace(pos, i + 1)))
    }

    /// Canonical encoding, e.g. `[[1,1],[2]]`.
    pub fn label(&self) -> String {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| format!("[{}]", r.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")))
            .collect();
        format!("[{}]", rows.join(","))
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("tableau serializes")
    }
}

/// Rows on separate lines, entries right-aligned in equal-width boxes.
impl fmt::Display for Ssyt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.rank.to_string().len();
        for (r, row) in self.rows.iter().enumerate() {
            if r > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row.iter().map(|x| format!("{x:>width$}")).collect();
            write!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// Content vector of a tableau.
pub fn weight_of(t: &Ssyt) -> Weight {
    t.weight()
}

/// All tableaux of rank `n`, of any shape; operators act through the
/// signature rule.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TableauCrystal {
    rank: usize,
}

impl TableauCrystal {
    pub fn new(rank: usize) -> Self {
        TableauCrystal { rank }
    }
}

impl Crystal for TableauCrystal {
    type Elem = Ssyt;

    fn rank(&self) -> usize {
        self.rank
    }

    fn weight(&self, b: &Ssyt) -> Weight {
        b.weight()
    }

    fn raise(&self, i: usize, b: &Ssyt) -> Option<Ssyt> {
        b.apply_e(i).expect("node in range")
    }

    fn lower(&self, i: usize, b: &Ssyt) -> Option<Ssyt> {
        b.apply_f(i).expect("node in range")
    }

    fn epsilon(&self, i: usize, b: &Ssyt) -> usize {
        b.signature(i).expect("node in range").epsilon
    }

    fn phi(&self, i: usize, b: &Ssyt) -> usize {
        b.signature(i).expect("node in range").phi
    }

    fn label(&self, b: &Ssyt) -> String {
        b.label()
    }
}

/// `B_lambda` of gl_n as the closure of the highest weight tableau under the
/// lowering operators, sorted. In debug builds the result is compared with
/// [`ssyt_by_backtracking`].
pub fn enumerate_b_lambda(shape: &Partition, rank: usize) -> Result<Vec<Ssyt>> {
    if shape.len() > rank {
        return Err(CrystalError::Precondition(format!(
            "shape {shape} has more than {rank} rows"
        )));
    }
    let top = Ssyt::highest(shape, rank)?;
    let all = closure(&TableauCrystal::new(rank), &[top]);
    debug_assert_eq!(all, ssyt_by_backtracking(shape, rank)?);
    Ok(all)
}

/// Every semistandard filling of `shape` with entries `<= rank`, by direct
/// backtracking over cells in reading order; sorted.
pub fn ssyt_by_backtracking(shape: &Partition, rank: usize) -> Result<Vec<Ssyt>> {
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
    let mut rows: Vec<Vec<usize>> = shape.parts().iter().map(|&len| vec![0; len]).collect();
    let mut out = Vec::new();
    fill(&cells, 0, rank, &mut rows, &mut out);
    out.sort();
    Ok(out)
}

fn fill(
    cells: &[(usize, usize)],
    k: usize,
    rank: usize,
    rows: &mut Vec<Vec<usize>>,
    out: &mut Vec<Ssyt>,
) {
    let Some(&(r, c)) = cells.get(k) else {
        out.push(Ssyt { rank, rows: rows.clone() });
        return;
    };
    let left = if c > 0 { rows[r][c - 1] } else { 1 };
    let above = if r > 0 { rows[r - 1][c] + 1 } else { 1 };
    for x in left.max(above)..=rank {
        rows[r][c] = x;
        fill(cells, k + 1, rank, rows, out);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::base::{schur_bruteforce, Interval};
    use crate::crystal::{character, check_crystal_axioms, schuetzenberger, to_highest_path};

    fn t(rank: usize, rows: &[&[usize]]) -> Ssyt {
        Ssyt::new(rank, rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn shape(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn rejects_non_semistandard_fillings() {
        assert!(Ssyt::new(3, vec![vec![2, 1]]).is_err());
        assert!(Ssyt::new(3, vec![vec![1, 1], vec![1]]).is_err());
        assert!(Ssyt::new(2, vec![vec![1, 3]]).is_err());
        assert!(Ssyt::new(3, vec![vec![1], vec![2, 2]]).is_err());
        assert!(Ssyt::new(1, vec![vec![1], vec![2]]).is_err());
        assert_eq!(Ssyt::new(2, vec![vec![1], vec![]]).unwrap(), t(2, &[&[1]]));
    }

    #[test]
    fn raising_the_golden_tableau_changes_the_second_column() {
        let tp = t(3, &[&[1, 1, 1, 2, 3], &[2, 3, 3], &[3]]);
        let sig = tp.signature(2).unwrap();
        assert!(sig.epsilon >= 1);
        assert_eq!(sig.e_position, Some((2, 2)));
        assert_eq!(tp.apply_e(2).unwrap(), Some(t(3, &[&[1, 1, 1, 2, 3], &[2, 2, 3], &[3]])));
    }

    #[test]
    fn highest_weight_tableaux_have_no_raising_operators() {
        for parts in [[3, 2, 1], [4, 0, 0], [2, 2, 0]] {
            let top = Ssyt::highest(&shape(&parts), 4).unwrap();
            for i in 1..4 {
                assert_eq!(top.signature(i).unwrap().epsilon, 0);
            }
        }
        assert_eq!(t(2, &[&[1, 1], &[2]]).apply_e(1).unwrap(), None);
    }

    #[test]
    fn signature_rejects_out_of_range_nodes() {
        let x = t(3, &[&[1, 2]]);
        assert!(x.signature(0).is_err());
        assert!(x.signature(3).is_err());
    }

    #[test]
    fn signature_counts_match_string_lengths() {
        let c = TableauCrystal::new(3);
        for b in enumerate_b_lambda(&shape(&[2, 1]), 3).unwrap() {
            for i in 1..3 {
                let sig = b.signature(i).unwrap();
                assert_eq!(sig.epsilon, crate::crystal::string_length(&b, |x| c.raise(i, x)));
                assert_eq!(sig.phi, crate::crystal::string_length(&b, |x| c.lower(i, x)));
                if let Some(down) = b.apply_f(i).unwrap() {
                    assert_eq!(down.apply_e(i).unwrap(), Some(b.clone()));
                }
            }
        }
    }

    #[test]
    fn enumeration_sizes() {
        assert_eq!(enumerate_b_lambda(&shape(&[1]), 2).unwrap().len(), 2);
        assert_eq!(enumerate_b_lambda(&shape(&[2, 1, 0]), 3).unwrap().len(), 8);
        assert_eq!(
            enumerate_b_lambda(&shape(&[5, 3, 1]), 3).unwrap(),
            ssyt_by_backtracking(&shape(&[5, 3, 1]), 3).unwrap()
        );
        assert!(enumerate_b_lambda(&shape(&[1, 1, 1]), 2).is_err());
    }

    #[test]
    fn weights() {
        assert_eq!(weight_of(&t(2, &[&[1, 1], &[2]])), Weight::new(vec![2, 1]));
        let tx = t(4, &[&[1, 1, 1, 2, 4], &[2, 2, 3], &[3, 4, 4], &[4]]);
        assert_eq!(weight_of(&tx), Weight::new(vec![3, 3, 2, 4]));
    }

    #[test]
    fn xi_reverses_weights() {
        let c = TableauCrystal::new(3);
        let full = Interval::full(3).unwrap();
        for b in enumerate_b_lambda(&shape(&[2, 1]), 3).unwrap() {
            let image = schuetzenberger(&c, &b, full).unwrap();
            assert_eq!(image.weight(), full.weyl_longest().act(&b.weight()));
        }
    }

    #[test]
    fn axioms_and_characters_for_small_shapes() {
        for n in 1..=4 {
            let c = TableauCrystal::new(n);
            for size in 0..=6 {
                for lambda in Partition::of_size(size).into_iter().filter(|l| l.len() <= n) {
                    let set = enumerate_b_lambda(&lambda, n).unwrap();
                    assert!(check_crystal_axioms(&c, &set).passed(), "{lambda} in rank {n}");
                    assert_eq!(character(&c, &set), schur_bruteforce(&lambda, n).unwrap());
                }
            }
        }
    }

    #[test]
    fn highest_path_reconstructs() {
        let c = TableauCrystal::new(2);
        let (top, path) = to_highest_path(&c, &t(2, &[&[1, 2]]), Interval::full(2).unwrap());
        assert_eq!((top, path), (t(2, &[&[1, 1]]), vec![1]));
        let c = TableauCrystal::new(3);
        let full = Interval::full(3).unwrap();
        for b in enumerate_b_lambda(&shape(&[2, 1]), 3).unwrap() {
            let (top, path) = to_highest_path(&c, &b, full);
            let back = path.iter().rev().fold(top, |x, &i| c.lower(i, &x).unwrap());
            assert_eq!(back, b);
        }
    }

    #[test]
    fn json_round_trip() {
        let x = t(3, &[&[1, 1, 2], &[2, 3]]);
        let v = x.to_json();
        assert_eq!(v, serde_json::json!({ "rank": 3, "rows": [[1, 1, 2], [2, 3]] }));
        assert_eq!(serde_json::from_value::<Ssyt>(v).unwrap(), x);
        assert!(serde_json::from_value::<Ssyt>(serde_json::json!({ "rank": 2, "rows": [[2, 1]] }))
            .is_err());
        assert_eq!(x.to_string(), "1 1 2\n2 3");
        assert_eq!(x.label(), "[[1,1,2],[2,3]]");
    }
}
