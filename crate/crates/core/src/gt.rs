//! Gelfand-Tsetlin patterns, their bijection with tableaux, and the
//! Berenstein-Kirillov moves.
//!
//! A pattern of rank n is a triangle of rows `x^(n), ..., x^(1)` with
//! `x^(k) = (x_{1k}, ..., x_{kk})`, stored top row first, subject to the
//! interlacing `x_{ij} >= x_{i,j-1} >= x_{i+1,j}`.

use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::base::{Interval, Partition, Permutation, Weight};
use crate::crystal::{Crystal, Schutzenberger};
use crate::error::{CrystalError, Result};
use crate::report::{ensure, sweep, Report};
use crate::tableau::{Ssyt, TableauCrystal};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawPattern")]
pub struct GtPattern {
    rank: usize,
    rows: Vec<Vec<usize>>,
}

#[derive(Deserialize)]
struct RawPattern {
    rank: usize,
    rows: Vec<Vec<usize>>,
}

impl TryFrom<RawPattern> for GtPattern {
    type Error = CrystalError;

    fn try_from(raw: RawPattern) -> Result<Self> {
        GtPattern::new(raw.rank, raw.rows)
    }
}

impl GtPattern {
    pub fn new(rank: usize, rows: Vec<Vec<usize>>) -> Result<Self> {
        let bad = |msg: String| Err(CrystalError::InvalidPattern(msg));
        if rows.len() != rank {
            return bad(format!("expected {rank} rows, found {}", rows.len()));
        }
        for (t, row) in rows.iter().enumerate() {
            if row.len() != rank - t {
                return bad(format!("row {} has length {}, expected {}", t + 1, row.len(), rank - t));
            }
        }
        let x = GtPattern { rank, rows };
        for j in 2..=rank {
            for i in 1..j {
                if !(x.get(i, j) >= x.get(i, j - 1) && x.get(i, j - 1) >= x.get(i + 1, j)) {
                    return bad(format!("rows x^({j}) and x^({}) do not interlace at {i}", j - 1));
                }
            }
        }
        Ok(x)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Rows `x^(n), ..., x^(1)`.
    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// `x^(k)`.
    pub fn row(&self, k: usize) -> &[usize] {
        &self.rows[self.rank - k]
    }

    /// `x_{ij}`, for `1 <= i <= j <= n`.
    pub fn get(&self, i: usize, j: usize) -> usize {
        self.rows[self.rank - j][i - 1]
    }

    fn row_sum(&self, k: usize) -> usize {
        if k == 0 {
            0
        } else {
            self.row(k).iter().sum()
        }
    }

    /// The shape `x^(n)`.
    pub fn shape(&self) -> Partition {
        Partition::new(self.row(self.rank).to_vec()).expect("top row is a partition")
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("pattern serializes")
    }
}

impl fmt::Display for GtPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| format!("({})", r.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")))
            .collect();
        write!(f, "{}", rows.join(" "))
    }
}

/// `beta_j = |x^(j)| - |x^(j-1)|`.
pub fn beta(x: &GtPattern) -> Weight {
    Weight::new((1..=x.rank).map(|j| x.row_sum(j) as i64 - x.row_sum(j - 1) as i64).collect())
}

/// The tableau whose boxes in `x^(j) / x^(j-1)` are labelled `j`.
pub fn gt_to_tableau(x: &GtPattern) -> Ssyt {
    let n = x.rank;
    let rows = (1..=n)
        .map(|i| {
            let mut row = Vec::new();
            let mut prev = 0;
            for j in i..=n {
                let cur = x.get(i, j);
                row.extend(std::iter::repeat_n(j, cur - prev));
                prev = cur;
            }
            row
        })
        .collect();
    Ssyt::new(n, rows).expect("interlacing patterns give semistandard tableaux")
}

/// Inverse of [`gt_to_tableau`]: `x_{ij}` counts the entries `<= j` in row `i`.
pub fn tableau_to_gt(t: &Ssyt) -> GtPattern {
    let n = t.rank();
    let count = |i: usize, j: usize| t.rows().get(i - 1).map_or(0, |r| r.iter().filter(|&&x| x <= j).count());
    let rows = (1..=n).rev().map(|j| (1..=j).map(|i| count(i, j)).collect()).collect();
    GtPattern::new(n, rows).expect("tableaux give interlacing patterns")
}

/// Every pattern with top row `lambda` (padded to `rank`), sorted.
pub fn enumerate_k_lambda(lambda: &Partition, rank: usize) -> Result<Vec<GtPattern>> {
    if lambda.len() > rank {
        return Err(CrystalError::Precondition(format!("shape {lambda} has more than {rank} rows")));
    }
    let mut out = Vec::new();
    let mut rows = vec![lambda.padded(rank)];
    extend_rows(&mut rows, rank, &mut out);
    out.sort();
    Ok(out)
}

fn extend_rows(rows: &mut Vec<Vec<usize>>, rank: usize, out: &mut Vec<GtPattern>) {
    let above = rows.last().expect("at least the top row").clone();
    if above.len() == 1 {
        out.push(GtPattern { rank, rows: rows.clone() });
        return;
    }
    let mut below = vec![0; above.len() - 1];
    fill_row(&above, 0, &mut below, rows, rank, out);
}

fn fill_row(
    above: &[usize],
    i: usize,
    below: &mut Vec<usize>,
    rows: &mut Vec<Vec<usize>>,
    rank: usize,
    out: &mut Vec<GtPattern>,
) {
    if i == below.len() {
        rows.push(below.clone());
        extend_rows(rows, rank, out);
        rows.pop();
        return;
    }
    for v in above[i + 1]..=above[i] {
        below[i] = v;
        fill_row(above, i + 1, below, rows, rank, out);
    }
}

/// The Berenstein-Kirillov move `t_j`: each `x_{ij}` in row `j` becomes
/// `min(x_{i,j+1}, x_{i-1,j-1}) + max(x_{i+1,j+1}, x_{i,j-1}) - x_{ij}`,
/// leaving out neighbours that do not exist.
pub fn bk_move(x: &GtPattern, j: usize) -> Result<GtPattern> {
    let n = x.rank;
    if j == 0 || j >= n {
        return Err(CrystalError::IndexOutOfRange { index: j, rank: n });
    }
    let new_row: Vec<usize> = (1..=j)
        .map(|i| {
            let mut lo = x.get(i, j + 1);
            if i > 1 {
                lo = lo.min(x.get(i - 1, j - 1));
            }
            let mut hi = x.get(i + 1, j + 1);
            if i < j {
                hi = hi.max(x.get(i, j - 1));
            }
            lo + hi - x.get(i, j)
        })
        .collect();
    let mut rows = x.rows.clone();
    rows[n - j] = new_row;
    Ok(GtPattern { rank: n, rows })
}

/// The word `t_1 (t_2 t_1) ... (t_i t_{i-1} ... t_1)`, left to right.
pub fn bk_q_word(i: usize) -> Vec<usize> {
    (1..=i).flat_map(|k| (1..=k).rev()).collect()
}

/// `q_i`, applying the moves of [`bk_q_word`] in the order written.
pub fn bk_q(x: &GtPattern, i: usize) -> Result<GtPattern> {
    if i == 0 || i >= x.rank {
        return Err(CrystalError::IndexOutOfRange { index: i, rank: x.rank });
    }
    bk_q_word(i).into_iter().try_fold(x.clone(), |y, j| bk_move(&y, j))
}

/// `K_lambda` as a crystal, transported from tableaux along
/// [`gt_to_tableau`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GtCrystal {
    tableaux: TableauCrystal,
}

impl GtCrystal {
    pub fn new(rank: usize) -> Self {
        GtCrystal { tableaux: TableauCrystal::new(rank) }
    }
}

impl Crystal for GtCrystal {
    type Elem = GtPattern;

    fn rank(&self) -> usize {
        self.tableaux.rank()
    }

    fn weight(&self, x: &GtPattern) -> Weight {
        beta(x)
    }

    fn raise(&self, i: usize, x: &GtPattern) -> Option<GtPattern> {
        self.tableaux.raise(i, &gt_to_tableau(x)).map(|t| tableau_to_gt(&t))
    }

    fn lower(&self, i: usize, x: &GtPattern) -> Option<GtPattern> {
        self.tableaux.lower(i, &gt_to_tableau(x)).map(|t| tableau_to_gt(&t))
    }

    fn epsilon(&self, i: usize, x: &GtPattern) -> usize {
        self.tableaux.epsilon(i, &gt_to_tableau(x))
    }

    fn phi(&self, i: usize, x: &GtPattern) -> usize {
        self.tableaux.phi(i, &gt_to_tableau(x))
    }

    fn label(&self, x: &GtPattern) -> String {
        x.to_string()
    }
}

/// `t_j` and `q_i` are involutions; `beta(t_j x) = (j j+1) beta(x)`; `q_{i-1}`
/// changes only entries `<= i` of the tableau. Checked on all of `K_lambda`.
pub fn verify_bk_moves(lambda: &Partition, rank: usize) -> Result<Report> {
    let set = enumerate_k_lambda(lambda, rank)?;
    let mut report = Report::new(
        "Berenstein-Kirillov moves",
        json!({ "shape": lambda.to_string(), "rank": rank }),
    );
    sweep(&mut report, &set, || (), |_, x, tally| {
        for j in 1..rank {
            let w = |what: &str| json!({ "pattern": x.to_string(), "j": j, "property": what });
            let y = bk_move(x, j).map_err(|e| w(&e.to_string()))?;
            ensure(GtPattern::new(rank, y.rows.clone()).is_ok(), || w("t_j gives a pattern"))?;
            ensure(y.row(rank) == x.row(rank), || w("t_j fixes the top row"))?;
            ensure(bk_move(&y, j).ok().as_ref() == Some(x), || w("t_j is an involution"))?;
            ensure(beta(&y) == Permutation::simple(j, rank).act(&beta(x)), || {
                w("beta(t_j x) = (j j+1) beta(x)")
            })?;
            tally.hit("moves t_j");
            let q = bk_q(x, j).map_err(|e| w(&e.to_string()))?;
            ensure(bk_q(&q, j).ok().as_ref() == Some(x), || w("q_i is an involution"))?;
            let (before, after) = (gt_to_tableau(x), gt_to_tableau(&q));
            let outside = |t: &Ssyt| -> Vec<Vec<usize>> {
                t.rows().iter().map(|r| r.iter().copied().filter(|&v| v > j + 1).collect()).collect()
            };
            ensure(outside(&before) == outside(&after), || w("q_i acts inside T_{<=i+1}"))?;
            tally.hit("moves q_i");
        }
        Ok(())
    });
    Ok(report)
}

/// For all `1 <= i < j <= n`, checks on `K_lambda` that `q_{j-1} q_{j-i} q_{j-1}`
/// equals the inner cactus generator `s_{i,j}` carried over from tableaux.
pub fn check_cgp_homomorphism(lambda: &Partition, rank: usize) -> Result<Report> {
    let set = enumerate_k_lambda(lambda, rank)?;
    let crystal = TableauCrystal::new(rank);
    let mut report = Report::new(
        "s_{i,j} -> q_{j-1} q_{j-i} q_{j-1}",
        json!({ "shape": lambda.to_string(), "rank": rank }),
    );
    let intervals = Interval::all(rank);
    sweep(&mut report, &set, || Schutzenberger::new(&crystal), |xi, x, tally| {
        let t = gt_to_tableau(x);
        ensure(tableau_to_gt(&t) == *x, || json!({ "pattern": x.to_string(), "property": "round trip" }))?;
        for &s in &intervals {
            let (i, j) = (s.p(), s.q());
            let w = |what: String| json!({ "pattern": x.to_string(), "generator": s.to_string(), "detail": what });
            let by_moves = [j - 1, j - i, j - 1]
                .iter()
                .rev()
                .try_fold(x.clone(), |y, &k| bk_q(&y, k))
                .map_err(|e| w(e.to_string()))?;
            let by_cactus = xi.apply(&t, s).map_err(|e| w(e.to_string()))?;
            ensure(gt_to_tableau(&by_moves) == by_cactus, || {
                w(format!("moves give {}, cactus gives {}", gt_to_tableau(&by_moves).label(), by_cactus.label()))
            })?;
            tally.hit("generator actions");
        }
        Ok(())
    });
    Ok(report)
}
