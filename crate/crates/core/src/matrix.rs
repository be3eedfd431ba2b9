//! The crystal `Λ^N B_{n,m}` of n×m 0/1 matrices with N ones.
//!
//! The gl_m (row) structure reads the rows as fundamental gl_m elements
//! `r_1 ⊗ ... ⊗ r_n`; the gl_n (column) structure reads the columns as
//! fundamental gl_n elements in reversed order `c_m ⊗ ... ⊗ c_1`. Operators
//! of the first are written `Re_i`, `Rf_i` (`1 <= i < m`), of the second
//! `Ce_j`, `Cf_j` (`1 <= j < n`).

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::base::{binomial, Weight};
use crate::crystal::Crystal;
use crate::error::{CrystalError, Result};
use crate::report::{ensure, sweep, Report};
use crate::tensor::TensorCrystal;

/// Verifiers refuse instances with more elements than this unless forced.
pub const DEFAULT_BUDGET: u128 = 1_000_000;

/// A 0/1 vector of length at most 64: an element of the fundamental crystal
/// `B_{varpi_w}` of gl_len, where `w` is the number of ones.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawFundamental", into = "RawFundamental")]
pub struct Fundamental {
    len: u8,
    bits: u64,
}

#[derive(Serialize, Deserialize)]
struct RawFundamental {
    entries: Vec<u8>,
}

impl TryFrom<RawFundamental> for Fundamental {
    type Error = CrystalError;

    fn try_from(raw: RawFundamental) -> Result<Self> {
        Fundamental::new(&raw.entries)
    }
}

impl From<Fundamental> for RawFundamental {
    fn from(v: Fundamental) -> Self {
        RawFundamental { entries: v.entries() }
    }
}

impl Fundamental {
    pub fn new(entries: &[u8]) -> Result<Self> {
        if entries.len() > 64 {
            return Err(CrystalError::InvalidMatrix(format!(
                "vector of length {} is longer than 64",
                entries.len()
            )));
        }
        let mut bits = 0u64;
        for (k, &x) in entries.iter().enumerate() {
            match x {
                0 => {}
                1 => bits |= 1 << k,
                _ => return Err(CrystalError::InvalidMatrix(format!("entry {x} is not 0 or 1"))),
            }
        }
        Ok(Fundamental { len: entries.len() as u8, bits })
    }

    fn from_bits(len: usize, bits: u64) -> Self {
        Fundamental { len: len as u8, bits }
    }

    /// Every 0/1 vector of length `len`, sorted.
    pub fn all(len: usize) -> Vec<Fundamental> {
        let mut out: Vec<Fundamental> =
            (0..1u64 << len).map(|bits| Fundamental::from_bits(len, bits)).collect();
        out.sort();
        out
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn ones(&self) -> usize {
        self.bits.count_ones() as usize
    }

    /// Entry `i`, 1-based.
    pub fn get(&self, i: usize) -> u8 {
        ((self.bits >> (i - 1)) & 1) as u8
    }

    pub fn entries(&self) -> Vec<u8> {
        (1..=self.len()).map(|i| self.get(i)).collect()
    }

    /// `(v_len, ..., v_1)`.
    pub fn reversed(&self) -> Fundamental {
        let mut bits = 0;
        for i in 1..=self.len() {
            bits |= (self.get(i) as u64) << (self.len() - i);
        }
        Fundamental::from_bits(self.len(), bits)
    }

    fn swap(&self, i: usize) -> Fundamental {
        Fundamental { len: self.len, bits: self.bits ^ (0b11 << (i - 1)) }
    }

    /// `e_i`: `(0,1) -> (1,0)` in positions `i, i+1`.
    pub fn raise(&self, i: usize) -> Option<Fundamental> {
        (self.get(i) == 0 && self.get(i + 1) == 1).then(|| self.swap(i))
    }

    /// `f_i`: `(1,0) -> (0,1)` in positions `i, i+1`.
    pub fn lower(&self, i: usize) -> Option<Fundamental> {
        (self.get(i) == 1 && self.get(i + 1) == 0).then(|| self.swap(i))
    }

    pub fn label(&self) -> String {
        self.entries().iter().map(|x| char::from(b'0' + x)).collect()
    }
}

/// All 0/1 vectors of one length, as a gl_rank crystal.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FundamentalCrystal {
    rank: usize,
}

impl FundamentalCrystal {
    pub fn new(rank: usize) -> Self {
        FundamentalCrystal { rank }
    }
}

impl Crystal for FundamentalCrystal {
    type Elem = Fundamental;

    fn rank(&self) -> usize {
        self.rank
    }

    fn weight(&self, b: &Fundamental) -> Weight {
        Weight::new(b.entries().into_iter().map(i64::from).collect())
    }

    fn raise(&self, i: usize, b: &Fundamental) -> Option<Fundamental> {
        b.raise(i)
    }

    fn lower(&self, i: usize, b: &Fundamental) -> Option<Fundamental> {
        b.lower(i)
    }

    fn epsilon(&self, i: usize, b: &Fundamental) -> usize {
        usize::from(b.get(i) == 0 && b.get(i + 1) == 1)
    }

    fn phi(&self, i: usize, b: &Fundamental) -> usize {
        usize::from(b.get(i) == 1 && b.get(i + 1) == 0)
    }

    fn label(&self, b: &Fundamental) -> String {
        b.label()
    }
}

/// An n×m 0/1 matrix with `n * m <= 64`, stored row-major in a bit mask.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawMatrix", into = "RawMatrix")]
pub struct BitMatrix {
    n: u8,
    m: u8,
    bits: u64,
}

#[derive(Serialize, Deserialize)]
struct RawMatrix {
    n: usize,
    m: usize,
    rows: Vec<Vec<u8>>,
}

impl TryFrom<RawMatrix> for BitMatrix {
    type Error = CrystalError;

    fn try_from(raw: RawMatrix) -> Result<Self> {
        if raw.rows.len() != raw.n || raw.rows.iter().any(|r| r.len() != raw.m) {
            return Err(CrystalError::InvalidMatrix(format!(
                "rows do not form a {}×{} matrix",
                raw.n, raw.m
            )));
        }
        BitMatrix::new(raw.n, raw.m, &raw.rows)
    }
}

impl From<BitMatrix> for RawMatrix {
    fn from(x: BitMatrix) -> Self {
        RawMatrix { n: x.n(), m: x.m(), rows: x.rows() }
    }
}

impl BitMatrix {
    pub fn new(n: usize, m: usize, rows: &[Vec<u8>]) -> Result<Self> {
        let mut out = BitMatrix::zeros(n, m)?;
        if rows.len() != n {
            return Err(CrystalError::InvalidMatrix(format!("expected {n} rows, found {}", rows.len())));
        }
        for (r, row) in rows.iter().enumerate() {
            if row.len() != m {
                return Err(CrystalError::InvalidMatrix(format!(
                    "row {} has length {}, expected {m}",
                    r + 1,
                    row.len()
                )));
            }
            for (c, &x) in row.iter().enumerate() {
                match x {
                    0 => {}
                    1 => out.bits |= 1 << (r * m + c),
                    _ => {
                        return Err(CrystalError::InvalidMatrix(format!("entry {x} is not 0 or 1")))
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn from_rows(rows: &[&[u8]]) -> Result<Self> {
        let m = rows.first().map_or(0, |r| r.len());
        let owned: Vec<Vec<u8>> = rows.iter().map(|r| r.to_vec()).collect();
        BitMatrix::new(rows.len(), m, &owned)
    }

    pub fn zeros(n: usize, m: usize) -> Result<Self> {
        if n * m > 64 {
            return Err(CrystalError::InvalidMatrix(format!("{n}×{m} has more than 64 entries")));
        }
        Ok(BitMatrix { n: n as u8, m: m as u8, bits: 0 })
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn m(&self) -> usize {
        self.m as usize
    }

    pub fn ones(&self) -> usize {
        self.bits.count_ones() as usize
    }

    /// Entry `M_{r,c}`, 1-based.
    pub fn get(&self, r: usize, c: usize) -> u8 {
        ((self.bits >> ((r - 1) * self.m() + c - 1)) & 1) as u8
    }

    fn at(&self, r: usize, c: usize) -> i64 {
        self.get(r, c) as i64
    }

    pub fn with(&self, r: usize, c: usize, value: u8) -> BitMatrix {
        let bit = 1u64 << ((r - 1) * self.m() + c - 1);
        let bits = if value == 1 { self.bits | bit } else { self.bits & !bit };
        BitMatrix { bits, ..*self }
    }

    /// Exchanges `M_{r1,c1}` and `M_{r2,c2}`.
    fn exchange(&self, (r1, c1): (usize, usize), (r2, c2): (usize, usize)) -> BitMatrix {
        let (a, b) = (self.get(r1, c1), self.get(r2, c2));
        self.with(r1, c1, b).with(r2, c2, a)
    }

    pub fn rows(&self) -> Vec<Vec<u8>> {
        (1..=self.n()).map(|r| (1..=self.m()).map(|c| self.get(r, c)).collect()).collect()
    }

    /// Row `k` as a gl_m fundamental element.
    pub fn row(&self, k: usize) -> Fundamental {
        Fundamental::from_bits(self.m(), (self.bits >> ((k - 1) * self.m())) & mask(self.m()))
    }

    /// Column `k` as a gl_n fundamental element.
    pub fn col(&self, k: usize) -> Fundamental {
        let mut bits = 0;
        for r in 1..=self.n() {
            bits |= (self.get(r, k) as u64) << (r - 1);
        }
        Fundamental::from_bits(self.n(), bits)
    }

    pub fn from_row_vectors(rows: &[Fundamental]) -> Result<Self> {
        let m = rows.first().map_or(0, Fundamental::len);
        let mut out = BitMatrix::zeros(rows.len(), m)?;
        for (r, v) in rows.iter().enumerate() {
            if v.len() != m {
                return Err(CrystalError::InvalidMatrix("rows of unequal length".into()));
            }
            out.bits |= v.bits << (r * m);
        }
        Ok(out)
    }

    pub fn from_col_vectors(cols: &[Fundamental]) -> Result<Self> {
        let n = cols.first().map_or(0, Fundamental::len);
        let mut out = BitMatrix::zeros(n, cols.len())?;
        for (c, v) in cols.iter().enumerate() {
            if v.len() != n {
                return Err(CrystalError::InvalidMatrix("columns of unequal length".into()));
            }
            for r in 1..=n {
                out = out.with(r, c + 1, v.get(r));
            }
        }
        Ok(out)
    }

    /// `Cwt(M)`: the row sums, the weight of the gl_n structure.
    pub fn row_sums(&self) -> Weight {
        Weight::new((1..=self.n()).map(|r| self.row(r).ones() as i64).collect())
    }

    /// `Rwt(M)`: the column sums, the weight of the gl_m structure.
    pub fn col_sums(&self) -> Weight {
        Weight::new((1..=self.m()).map(|c| self.col(c).ones() as i64).collect())
    }

    /// Canonical encoding: rows of 0/1 characters separated by `/`.
    pub fn label(&self) -> String {
        (1..=self.n()).map(|r| self.row(r).label()).collect::<Vec<_>>().join("/")
    }

    /// One row per line of 0/1 characters.
    pub fn to_text(&self) -> String {
        (1..=self.n()).map(|r| self.row(r).label() + "\n").collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("matrix serializes")
    }

    /// Every n×m matrix with exactly `ones` ones, in increasing order of the
    /// row-major bit mask.
    pub fn enumerate(n: usize, m: usize, ones: usize) -> Result<Vec<BitMatrix>> {
        BitMatrix::zeros(n, m)?;
        let cells = n * m;
        if ones > cells {
            return Ok(Vec::new());
        }
        let make = |bits: u64| BitMatrix { n: n as u8, m: m as u8, bits };
        if ones == 0 {
            return Ok(vec![make(0)]);
        }
        let limit: u128 = 1 << cells;
        let mut x: u128 = (1 << ones) - 1;
        let mut out = Vec::with_capacity(binomial(cells as u64, ones as u64) as usize);
        while x < limit {
            out.push(make(x as u64));
            let low = x & x.wrapping_neg();
            let ripple = x + low;
            x = (((ripple ^ x) >> 2) / low) | ripple;
        }
        Ok(out)
    }

    /// Like [`BitMatrix::enumerate`], refusing instances larger than `budget`.
    pub fn enumerate_within(n: usize, m: usize, ones: usize, budget: u128) -> Result<Vec<BitMatrix>> {
        let size = binomial((n * m) as u64, ones as u64);
        if size > budget {
            return Err(CrystalError::BudgetExceeded { size, budget });
        }
        BitMatrix::enumerate(n, m, ones)
    }

    /// The 0/1 matrix read from one line per row.
    pub fn parse_text(s: &str) -> Result<Self> {
        let rows: Vec<Vec<u8>> = s
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .map(|l| {
                l.chars()
                    .filter(|c| !c.is_whitespace())
                    .map(|c| match c {
                        '0' => Ok(0),
                        '1' => Ok(1),
                        _ => Err(CrystalError::InvalidMatrix(format!("unexpected character {c:?}"))),
                    })
                    .collect()
            })
            .collect::<Result<_>>()?;
        let m = rows.first().map_or(0, Vec::len);
        BitMatrix::new(rows.len(), m, &rows)
    }
}

fn mask(len: usize) -> u64 {
    if len == 64 {
        u64::MAX
    } else {
        (1u64 << len) - 1
    }
}

impl fmt::Display for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows()
            .iter()
            .map(|r| format!("[{}]", r.iter().map(u8::to_string).collect::<Vec<_>>().join(",")))
            .collect();
        write!(f, "[{}]", rows.join(","))
    }
}

impl FromStr for BitMatrix {
    type Err = CrystalError;

    fn from_str(s: &str) -> Result<Self> {
        BitMatrix::parse_text(s)
    }
}

/// `r_1 ⊗ ... ⊗ r_n`, gl_m factors.
pub fn row_structure(x: &BitMatrix) -> Vec<Fundamental> {
    (1..=x.n()).map(|r| x.row(r)).collect()
}

/// `c_m ⊗ ... ⊗ c_1`, gl_n factors.
pub fn col_structure(x: &BitMatrix) -> Vec<Fundamental> {
    (1..=x.m()).rev().map(|c| x.col(c)).collect()
}

pub fn from_row_structure(t: &[Fundamental]) -> Result<BitMatrix> {
    BitMatrix::from_row_vectors(t)
}

pub fn from_col_structure(t: &[Fundamental]) -> Result<BitMatrix> {
    let cols: Vec<Fundamental> = t.iter().rev().copied().collect();
    BitMatrix::from_col_vectors(&cols)
}

/// The operators written out entry by entry, as in
/// `Reps^k_i(M) = [M_{k,i} = 0, M_{k,i+1} = 1] + sum_{s<k} (M_{s,i+1} - M_{s,i})`.
pub mod formula {
    use super::BitMatrix;

    fn delta(b: bool) -> i64 {
        i64::from(b)
    }

    /// `(max(Reps^k_i, 0), row acted on by Re_i)`: the first row attaining it.
    pub fn row_raise_site(x: &BitMatrix, i: usize) -> (i64, Option<usize>) {
        let (mut best, mut at, mut prefix) = (0, None, 0);
        for k in 1..=x.n() {
            let v = delta(x.get(k, i) == 0 && x.get(k, i + 1) == 1) + prefix;
            if v > best {
                (best, at) = (v, Some(k));
            }
            prefix += x.at(k, i + 1) - x.at(k, i);
        }
        (best, at)
    }

    /// `Rphi^k_i = [M_{k,i} = 1, M_{k,i+1} = 0] + sum_{s>k} (M_{s,i} - M_{s,i+1})`;
    /// `Rf_i` acts in the last row attaining the maximum.
    pub fn row_lower_site(x: &BitMatrix, i: usize) -> (i64, Option<usize>) {
        let (mut best, mut at, mut suffix) = (0, None, 0);
        for k in (1..=x.n()).rev() {
            let v = delta(x.get(k, i) == 1 && x.get(k, i + 1) == 0) + suffix;
            if v > best {
                (best, at) = (v, Some(k));
            }
            suffix += x.at(k, i) - x.at(k, i + 1);
        }
        (best, at)
    }

    /// `Ceps_j` for column `k` is
    /// `[M_{j,k} = 0, M_{j+1,k} = 1] + sum_{s>k} (M_{j+1,s} - M_{j,s})`;
    /// `Ce_j` acts in the column closest to `m` attaining the maximum.
    pub fn col_raise_site(x: &BitMatrix, j: usize) -> (i64, Option<usize>) {
        let (mut best, mut at, mut suffix) = (0, None, 0);
        for k in (1..=x.m()).rev() {
            let v = delta(x.get(j, k) == 0 && x.get(j + 1, k) == 1) + suffix;
            if v > best {
                (best, at) = (v, Some(k));
            }
            suffix += x.at(j + 1, k) - x.at(j, k);
        }
        (best, at)
    }

    /// `Cphi_j` for column `k` is
    /// `[M_{j,k} = 1, M_{j+1,k} = 0] + sum_{s<k} (M_{j,s} - M_{j+1,s})`;
    /// `Cf_j` acts in the column closest to `1` attaining the maximum.
    pub fn col_lower_site(x: &BitMatrix, j: usize) -> (i64, Option<usize>) {
        let (mut best, mut at, mut prefix) = (0, None, 0);
        for k in 1..=x.m() {
            let v = delta(x.get(j, k) == 1 && x.get(j + 1, k) == 0) + prefix;
            if v > best {
                (best, at) = (v, Some(k));
            }
            prefix += x.at(j, k) - x.at(j + 1, k);
        }
        (best, at)
    }

    pub fn re(x: &BitMatrix, i: usize) -> Option<BitMatrix> {
        row_raise_site(x, i).1.map(|k| x.exchange((k, i), (k, i + 1)))
    }

    pub fn rf(x: &BitMatrix, i: usize) -> Option<BitMatrix> {
        row_lower_site(x, i).1.map(|k| x.exchange((k, i), (k, i + 1)))
    }

    pub fn ce(x: &BitMatrix, j: usize) -> Option<BitMatrix> {
        col_raise_site(x, j).1.map(|k| x.exchange((j, k), (j + 1, k)))
    }

    pub fn cf(x: &BitMatrix, j: usize) -> Option<BitMatrix> {
        col_lower_site(x, j).1.map(|k| x.exchange((j, k), (j + 1, k)))
    }
}

/// How a matrix structure evaluates its operators.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Rule {
    /// Closed formulas on the entries.
    #[default]
    Formula,
    /// The tensor rule on `r_1 ⊗ ... ⊗ r_n`, resp. `c_m ⊗ ... ⊗ c_1`.
    Tensor,
    /// The tensor rule on `c_1 ⊗ ... ⊗ c_m`. Not a valid structure; it exists
    /// to show that the column order matters.
    UnreversedColumns,
}

/// The gl_m structure on n×m matrices.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RowCrystal {
    n: usize,
    m: usize,
    rule: Rule,
}

impl RowCrystal {
    pub fn new(n: usize, m: usize) -> Self {
        RowCrystal { n, m, rule: Rule::Formula }
    }

    pub fn with_rule(n: usize, m: usize, rule: Rule) -> Self {
        RowCrystal { n, m, rule }
    }

    fn tensor(&self) -> TensorCrystal<FundamentalCrystal> {
        TensorCrystal::new(FundamentalCrystal::new(self.m))
    }

    fn via_tensor(
        &self,
        x: &BitMatrix,
        op: impl Fn(&TensorCrystal<FundamentalCrystal>, &Vec<Fundamental>) -> Option<Vec<Fundamental>>,
    ) -> Option<BitMatrix> {
        op(&self.tensor(), &row_structure(x)).map(|t| from_row_structure(&t).expect("same shape"))
    }
}

impl Crystal for RowCrystal {
    type Elem = BitMatrix;

    fn rank(&self) -> usize {
        self.m
    }

    fn weight(&self, x: &BitMatrix) -> Weight {
        x.col_sums()
    }

    fn raise(&self, i: usize, x: &BitMatrix) -> Option<BitMatrix> {
        match self.rule {
            Rule::Formula => formula::re(x, i),
            _ => self.via_tensor(x, |t, v| t.raise(i, v)),
        }
    }

    fn lower(&self, i: usize, x: &BitMatrix) -> Option<BitMatrix> {
        match self.rule {
            Rule::Formula => formula::rf(x, i),
            _ => self.via_tensor(x, |t, v| t.lower(i, v)),
        }
    }

    fn epsilon(&self, i: usize, x: &BitMatrix) -> usize {
        match self.rule {
            Rule::Formula => formula::row_raise_site(x, i).0 as usize,
            _ => self.tensor().epsilon(i, &row_structure(x)),
        }
    }

    fn phi(&self, i: usize, x: &BitMatrix) -> usize {
        match self.rule {
            Rule::Formula => formula::row_lower_site(x, i).0 as usize,
            _ => self.tensor().phi(i, &row_structure(x)),
        }
    }

    fn label(&self, x: &BitMatrix) -> String {
        x.label()
    }
}

/// The gl_n structure on n×m matrices.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ColumnCrystal {
    n: usize,
    m: usize,
    rule: Rule,
}

impl ColumnCrystal {
    pub fn new(n: usize, m: usize) -> Self {
        ColumnCrystal { n, m, rule: Rule::Formula }
    }

    pub fn with_rule(n: usize, m: usize, rule: Rule) -> Self {
        ColumnCrystal { n, m, rule }
    }

    fn tensor(&self) -> TensorCrystal<FundamentalCrystal> {
        TensorCrystal::new(FundamentalCrystal::new(self.n))
    }

    fn read(&self, x: &BitMatrix) -> Vec<Fundamental> {
        match self.rule {
            Rule::UnreversedColumns => (1..=x.m()).map(|c| x.col(c)).collect(),
            _ => col_structure(x),
        }
    }

    fn write(&self, t: &[Fundamental]) -> BitMatrix {
        match self.rule {
            Rule::UnreversedColumns => BitMatrix::from_col_vectors(t),
            _ => from_col_structure(t),
        }
        .expect("same shape")
    }

    fn via_tensor(
        &self,
        x: &BitMatrix,
        op: impl Fn(&TensorCrystal<FundamentalCrystal>, &Vec<Fundamental>) -> Option<Vec<Fundamental>>,
    ) -> Option<BitMatrix> {
        op(&self.tensor(), &self.read(x)).map(|t| self.write(&t))
    }
}

impl Crystal for ColumnCrystal {
    type Elem = BitMatrix;

    fn rank(&self) -> usize {
        self.n
    }

    fn weight(&self, x: &BitMatrix) -> Weight {
        x.row_sums()
    }

    fn raise(&self, j: usize, x: &BitMatrix) -> Option<BitMatrix> {
        match self.rule {
            Rule::Formula => formula::ce(x, j),
            _ => self.via_tensor(x, |t, v| t.raise(j, v)),
        }
    }

    fn lower(&self, j: usize, x: &BitMatrix) -> Option<BitMatrix> {
        match self.rule {
            Rule::Formula => formula::cf(x, j),
            _ => self.via_tensor(x, |t, v| t.lower(j, v)),
        }
    }

    fn epsilon(&self, j: usize, x: &BitMatrix) -> usize {
        match self.rule {
            Rule::Formula => formula::col_raise_site(x, j).0 as usize,
            _ => self.tensor().epsilon(j, &self.read(x)),
        }
    }

    fn phi(&self, j: usize, x: &BitMatrix) -> usize {
        match self.rule {
            Rule::Formula => formula::col_lower_site(x, j).0 as usize,
            _ => self.tensor().phi(j, &self.read(x)),
        }
    }

    fn label(&self, x: &BitMatrix) -> String {
        x.label()
    }
}

/// A raising or lowering operator of one structure.
type Op<C> = fn(&C, usize, &BitMatrix) -> Option<BitMatrix>;

/// Checks on every matrix of `Λ^N B_{n,m}` that each `Re_i`, `Rf_i`
/// preserves `Cwt`, `Ceps_j`, `Cphi_j`, that each `Ce_j`, `Cf_j` preserves
/// `Rwt`, `Reps_i`, `Rphi_i`, and that row and column operators commute.
pub fn verify_commutation(n: usize, m: usize, ones: usize, budget: u128) -> Result<Report> {
    verify_commutation_of(&RowCrystal::new(n, m), &ColumnCrystal::new(n, m), ones, budget)
}

/// [`verify_commutation`] for explicitly chosen structures.
pub fn verify_commutation_of(
    rows: &RowCrystal,
    cols: &ColumnCrystal,
    ones: usize,
    budget: u128,
) -> Result<Report> {
    let (n, m) = (rows.n, rows.m);
    let set = BitMatrix::enumerate_within(n, m, ones, budget)?;
    let mut report =
        Report::new("commuting row and column structures", json!({ "n": n, "m": m, "N": ones }));
    sweep(&mut report, &set, || (), |_, x, tally| {
        let witness = |what: &str, i: usize, j: usize| {
            json!({ "matrix": x.label(), "i": i, "j": j, "identity": what })
        };
        for i in 1..m {
            for j in 1..n {
                for (name, r) in [("Re", rows.raise(i, x)), ("Rf", rows.lower(i, x))] {
                    if let Some(y) = r {
                        ensure(cols.weight(&y) == cols.weight(x), || witness(&format!("Cwt {name}"), i, j))?;
                        ensure(cols.epsilon(j, &y) == cols.epsilon(j, x), || {
                            witness(&format!("Ceps {name}"), i, j)
                        })?;
                        ensure(cols.phi(j, &y) == cols.phi(j, x), || witness(&format!("Cphi {name}"), i, j))?;
                        tally.hit("row operator preserves column data");
                    }
                }
                for (name, c) in [("Ce", cols.raise(j, x)), ("Cf", cols.lower(j, x))] {
                    if let Some(y) = c {
                        ensure(rows.weight(&y) == rows.weight(x), || witness(&format!("Rwt {name}"), i, j))?;
                        ensure(rows.epsilon(i, &y) == rows.epsilon(i, x), || {
                            witness(&format!("Reps {name}"), i, j)
                        })?;
                        ensure(rows.phi(i, &y) == rows.phi(i, x), || witness(&format!("Rphi {name}"), i, j))?;
                        tally.hit("column operator preserves row data");
                    }
                }
                let row_ops: [(&str, Op<RowCrystal>); 2] =
                    [("Re", |c, i, x| c.raise(i, x)), ("Rf", |c, i, x| c.lower(i, x))];
                let col_ops: [(&str, Op<ColumnCrystal>); 2] =
                    [("Ce", |c, j, x| c.raise(j, x)), ("Cf", |c, j, x| c.lower(j, x))];
                for (rn, r) in row_ops {
                    for (cn, c) in col_ops {
                        let (Some(rx), Some(cx)) = (r(rows, i, x), c(cols, j, x)) else {
                            continue;
                        };
                        ensure(c(cols, j, &rx) == r(rows, i, &cx), || {
                            witness(&format!("{rn}_i {cn}_j = {cn}_j {rn}_i"), i, j)
                        })?;
                        tally.hit("commutations");
                    }
                }
            }
        }
        Ok(())
    });
    Ok(report)
}

/// Checks that the closed formulas and the tensor rule give identical
/// operators and string lengths on every matrix of `Λ^N B_{n,m}`.
pub fn verify_dual_implementations(n: usize, m: usize, ones: usize, budget: u128) -> Result<Report> {
    let set = BitMatrix::enumerate_within(n, m, ones, budget)?;
    let mut report =
        Report::new("tensor rule equals closed formulas", json!({ "n": n, "m": m, "N": ones }));
    let (rf, rt) = (RowCrystal::new(n, m), RowCrystal::with_rule(n, m, Rule::Tensor));
    let (cf, ct) = (ColumnCrystal::new(n, m), ColumnCrystal::with_rule(n, m, Rule::Tensor));
    sweep(&mut report, &set, || (), |_, x, tally| {
        for i in 1..m {
            let w = || json!({ "matrix": x.label(), "structure": "row", "i": i });
            ensure(rf.raise(i, x) == rt.raise(i, x), w)?;
            ensure(rf.lower(i, x) == rt.lower(i, x), w)?;
            ensure(rf.epsilon(i, x) == rt.epsilon(i, x), w)?;
            ensure(rf.phi(i, x) == rt.phi(i, x), w)?;
            tally.hit("row operators");
        }
        for j in 1..n {
            let w = || json!({ "matrix": x.label(), "structure": "column", "j": j });
            ensure(cf.raise(j, x) == ct.raise(j, x), w)?;
            ensure(cf.lower(j, x) == ct.lower(j, x), w)?;
            ensure(cf.epsilon(j, x) == ct.epsilon(j, x), w)?;
            ensure(cf.phi(j, x) == ct.phi(j, x), w)?;
            tally.hit("column operators");
        }
        Ok(())
    });
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::base::Interval;
    use crate::crystal::{check_crystal_axioms, components, is_morphism, schuetzenberger};

    fn mat(rows: &[&[u8]]) -> BitMatrix {
        BitMatrix::from_rows(rows).unwrap()
    }

    fn example() -> BitMatrix {
        mat(&[&[1, 1, 1, 0, 0], &[0, 0, 1, 1, 0], &[1, 1, 1, 0, 1]])
    }

    #[test]
    fn fundamental_operators() {
        let v = Fundamental::new(&[0, 1]).unwrap();
        assert_eq!(v.raise(1), Some(Fundamental::new(&[1, 0]).unwrap()));
        assert_eq!(v.lower(1), None);
        assert_eq!(Fundamental::new(&[1, 1, 0]).unwrap().raise(1), None);
        assert!(Fundamental::new(&[2]).is_err());
    }

    #[test]
    fn fundamental_axioms_and_xi_is_reversal() {
        for k in 1..=5 {
            let c = FundamentalCrystal::new(k);
            let all = Fundamental::all(k);
            assert!(check_crystal_axioms(&c, &all).passed());
            for v in &all {
                let xi = match Interval::full(k) {
                    Some(j) => schuetzenberger(&c, v, j).unwrap(),
                    None => *v,
                };
                assert_eq!(xi, v.reversed());
            }
        }
        let c = FundamentalCrystal::new(5);
        let v = Fundamental::new(&[1, 1, 0, 0, 0]).unwrap();
        assert_eq!(
            schuetzenberger(&c, &v, Interval::full(5).unwrap()).unwrap().entries(),
            vec![0, 0, 0, 1, 1]
        );
    }

    #[test]
    fn row_and_column_readings() {
        let x = mat(&[&[1, 0], &[0, 1]]);
        let f = |e: &[u8]| Fundamental::new(e).unwrap();
        assert_eq!(row_structure(&x), vec![f(&[1, 0]), f(&[0, 1])]);
        assert_eq!(col_structure(&x), vec![f(&[0, 1]), f(&[1, 0])]);
        let rows = row_structure(&example());
        assert_eq!(rows[0].entries(), vec![1, 1, 1, 0, 0]);
        assert_eq!(rows[1].entries(), vec![0, 0, 1, 1, 0]);
        assert_eq!(rows[2].entries(), vec![1, 1, 1, 0, 1]);
        let all = BitMatrix::enumerate(2, 3, 2).unwrap();
        assert_eq!(all.len(), 15);
        for x in all {
            assert_eq!(from_row_structure(&row_structure(&x)).unwrap(), x);
            assert_eq!(from_col_structure(&col_structure(&x)).unwrap(), x);
        }
    }

    #[test]
    fn enumeration_counts() {
        for (n, m) in [(1, 1), (2, 2), (3, 3), (2, 5), (4, 3)] {
            for k in 0..=n * m {
                let all = BitMatrix::enumerate(n, m, k).unwrap();
                assert_eq!(all.len() as u128, binomial((n * m) as u64, k as u64));
                assert!(all.iter().all(|x| x.ones() == k));
                assert!(all.windows(2).all(|w| w[0] < w[1]));
            }
        }
        assert!(BitMatrix::enumerate(9, 8, 1).is_err());
        assert!(matches!(
            BitMatrix::enumerate_within(5, 5, 12, 1000),
            Err(CrystalError::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn golden_column_raising() {
        let p = mat(&[&[1, 1, 1, 0, 0], &[1, 0, 0, 1, 0], &[1, 1, 1, 0, 1]]);
        let expect = mat(&[&[1, 1, 1, 0, 0], &[1, 1, 0, 1, 0], &[1, 0, 1, 0, 1]]);
        assert_eq!(ColumnCrystal::new(3, 5).raise(2, &p), Some(expect));
        assert_eq!(ColumnCrystal::with_rule(3, 5, Rule::Tensor).raise(2, &p), Some(expect));
    }

    #[test]
    fn raising_without_a_zero_one_pattern_is_null() {
        let x = mat(&[&[1, 0, 1], &[1, 0, 0]]);
        assert_eq!(RowCrystal::new(2, 3).raise(1, &x), None);
        assert_eq!(RowCrystal::new(2, 3).epsilon(1, &x), 0);
    }

    #[test]
    fn weights_are_row_and_column_sums() {
        let x = example();
        assert_eq!(ColumnCrystal::new(3, 5).weight(&x), Weight::new(vec![3, 2, 4]));
        assert_eq!(RowCrystal::new(3, 5).weight(&x), Weight::new(vec![2, 2, 3, 1, 1]));
    }

    #[test]
    fn both_structures_satisfy_the_axioms() {
        for n in 1..=4 {
            for m in 1..=4 {
                if n * m > 12 {
                    continue;
                }
                for k in 0..=n * m {
                    let set = BitMatrix::enumerate(n, m, k).unwrap();
                    assert!(check_crystal_axioms(&RowCrystal::new(n, m), &set).passed());
                    assert!(check_crystal_axioms(&ColumnCrystal::new(n, m), &set).passed());
                }
            }
        }
    }

    #[test]
    fn row_components_of_two_by_two_with_two_ones() {
        let set = BitMatrix::enumerate(2, 2, 2).unwrap();
        let comps = components(&RowCrystal::new(2, 2), &set, Interval::full(2).unwrap()).unwrap();
        let mut tops: Vec<Weight> = comps.iter().map(|c| c.highest.col_sums()).collect();
        tops.sort();
        assert_eq!(comps.iter().map(|c| c.elements.len()).sum::<usize>(), 6);
        assert_eq!(
            tops,
            vec![
                Weight::new(vec![1, 1]),
                Weight::new(vec![1, 1]),
                Weight::new(vec![1, 1]),
                Weight::new(vec![2, 0])
            ]
        );
    }

    #[test]
    fn commutation_and_dual_implementations() {
        for (n, m, k) in [(2, 2, 2), (3, 3, 4), (2, 3, 3), (3, 2, 2)] {
            assert!(verify_commutation(n, m, k, DEFAULT_BUDGET).unwrap().passed());
            assert!(verify_dual_implementations(n, m, k, DEFAULT_BUDGET).unwrap().passed());
        }
        assert_eq!(
            verify_commutation(3, 3, 4, DEFAULT_BUDGET).unwrap().checked["elements"],
            126
        );
    }

    #[test]
    fn unreversed_column_reading_breaks_commutation() {
        let bad = ColumnCrystal::with_rule(3, 3, Rule::UnreversedColumns);
        let report = verify_commutation_of(&RowCrystal::new(3, 3), &bad, 4, DEFAULT_BUDGET).unwrap();
        assert!(!report.passed());
        assert!(report.witness.is_some());
    }

    #[test]
    fn row_operators_are_column_morphisms() {
        let set = BitMatrix::enumerate(2, 2, 2).unwrap();
        let (rows, cols) = (RowCrystal::new(2, 2), ColumnCrystal::new(2, 2));
        assert!(is_morphism(|x| rows.raise(1, x), &cols, &set, &cols).passed());
        for (n, m) in [(3, 3), (2, 4)] {
            let (rows, cols) = (RowCrystal::new(n, m), ColumnCrystal::new(n, m));
            for k in 0..=n * m {
                let set = BitMatrix::enumerate(n, m, k).unwrap();
                for i in 1..m {
                    assert!(is_morphism(|x| rows.raise(i, x), &cols, &set, &cols).passed());
                    assert!(is_morphism(|x| rows.lower(i, x), &cols, &set, &cols).passed());
                }
                for j in 1..n {
                    assert!(is_morphism(|x| cols.raise(j, x), &rows, &set, &rows).passed());
                    assert!(is_morphism(|x| cols.lower(j, x), &rows, &set, &rows).passed());
                }
            }
        }
    }

    #[test]
    fn weight_breaking_map_is_not_a_morphism() {
        let set = BitMatrix::enumerate(2, 2, 2).unwrap();
        let cols = ColumnCrystal::new(2, 2);
        let swap_rows = |x: &BitMatrix| Some(BitMatrix::from_row_vectors(&[x.row(2), x.row(1)]).unwrap());
        assert!(!is_morphism(swap_rows, &cols, &set, &cols).passed());
        assert!(is_morphism(|x: &BitMatrix| Some(*x), &cols, &set, &cols).passed());
    }

    #[test]
    fn text_and_json_forms() {
        let x = example();
        assert_eq!(x.to_text(), "11100\n00110\n11101\n");
        assert_eq!(BitMatrix::parse_text(&x.to_text()).unwrap(), x);
        let v = x.to_json();
        assert_eq!(v, json!({ "n": 3, "m": 5, "rows": [[1,1,1,0,0],[0,0,1,1,0],[1,1,1,0,1]] }));
        assert_eq!(serde_json::from_value::<BitMatrix>(v).unwrap(), x);
        assert!(serde_json::from_value::<BitMatrix>(json!({ "n": 2, "m": 2, "rows": [[1,0]] })).is_err());
        assert_eq!(x.to_string(), "[[1,1,1,0,0],[0,0,1,1,0],[1,1,1,0,1]]");
        assert_eq!(x.label(), "11100/00110/11101");
    }
}
