//! Skew Howe duality for crystals:
//! `Λ^N B_{n,m} ≅ ⊔_λ B_λ^{gl_n} ⊗ B_{λ^tr}^{gl_m}`, realized by
//! `M -> (P, Q) = (Re^max M, Cf^max M) -> (T_P, T_Q)`, and the comparison
//! of the outer and inner cactus actions it makes possible.

use std::collections::{BTreeMap, HashSet};

use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::base::{binomial, Interval, Partition};
use crate::cactus::OuterAction;
use crate::crystal::{
    is_morphism, to_highest_path_by, to_lowest_path_by, Crystal, Schutzenberger, SearchOrder,
};
use crate::error::{CrystalError, Result};
use crate::matrix::{
    col_structure, from_col_structure, from_row_structure, row_structure, BitMatrix,
    ColumnCrystal, FundamentalCrystal, RowCrystal,
};
use crate::report::{ensure, sweep, Report};
use crate::tableau::{ssyt_by_backtracking, Ssyt, TableauCrystal};

/// `Re^max`: raises with the smallest available `Re_i` until none applies.
/// Returns the gl_m-highest matrix and the indices used, in order.
pub fn re_max_path(x: &BitMatrix) -> (BitMatrix, Vec<usize>) {
    re_max_path_by(x, SearchOrder::SmallestFirst)
}

pub fn re_max_path_by(x: &BitMatrix, order: SearchOrder) -> (BitMatrix, Vec<usize>) {
    match Interval::full(x.m()) {
        Some(j) => to_highest_path_by(&RowCrystal::new(x.n(), x.m()), x, j, order),
        None => (*x, Vec::new()),
    }
}

/// `Cf^max`: lowers with the smallest available `Cf_j` until none applies.
pub fn cf_max_path(x: &BitMatrix) -> (BitMatrix, Vec<usize>) {
    cf_max_path_by(x, SearchOrder::SmallestFirst)
}

pub fn cf_max_path_by(x: &BitMatrix, order: SearchOrder) -> (BitMatrix, Vec<usize>) {
    match Interval::full(x.n()) {
        Some(j) => to_lowest_path_by(&ColumnCrystal::new(x.n(), x.m()), x, j, order),
        None => (*x, Vec::new()),
    }
}

pub fn re_max(x: &BitMatrix) -> BitMatrix {
    re_max_path(x).0
}

pub fn cf_max(x: &BitMatrix) -> BitMatrix {
    cf_max_path(x).0
}

fn left_justified_shape(row_sums: &[usize], rows: impl Iterator<Item = usize>, x: &BitMatrix) -> bool {
    rows.zip(row_sums).all(|(r, &len)| (1..=x.m()).all(|c| x.get(r, c) == u8::from(c <= len)))
}

/// The partition filled by the ones of a matrix that is gl_m-highest and
/// either gl_n-highest (ones in the upper left corner, rows read top down)
/// or gl_n-lowest (ones in the lower left corner, rows read bottom up).
pub fn doubly_extreme_shape(x: &BitMatrix) -> Result<Partition> {
    let sums: Vec<usize> = (1..=x.n()).map(|r| x.row(r).ones()).collect();
    let top_down = sums.windows(2).all(|w| w[0] >= w[1]);
    if top_down && left_justified_shape(&sums, 1..=x.n(), x) {
        return Partition::new(sums);
    }
    let rev: Vec<usize> = sums.iter().rev().copied().collect();
    if rev.windows(2).all(|w| w[0] >= w[1]) && left_justified_shape(&rev, (1..=x.n()).rev(), x) {
        return Partition::new(rev);
    }
    Err(CrystalError::Precondition(format!(
        "the ones of {} do not fill a corner-justified partition",
        x.label()
    )))
}

/// Builds a tableau from its columns (each listed top to bottom).
fn from_columns(rank: usize, columns: &[Vec<usize>]) -> Result<Ssyt> {
    let height = columns.iter().map(Vec::len).max().unwrap_or(0);
    let rows = (0..height)
        .map(|r| columns.iter().take_while(|c| c.len() > r).map(|c| c[r]).collect())
        .collect();
    Ssyt::new(rank, rows)
}

/// Checks that every partial sum of the vectors is weakly decreasing, i.e.
/// that they describe a chain of partitions (transposed).
fn check_chain(vectors: impl Iterator<Item = Vec<usize>>, what: &str) -> Result<()> {
    let mut acc: Vec<usize> = Vec::new();
    for (i, v) in vectors.enumerate() {
        if acc.is_empty() {
            acc = vec![0; v.len()];
        }
        for (a, x) in acc.iter_mut().zip(&v) {
            *a += x;
        }
        if acc.windows(2).any(|w| w[0] < w[1]) {
            return Err(CrystalError::Precondition(format!(
                "{what}: partial sum {} is not a partition",
                i + 1
            )));
        }
    }
    Ok(())
}

/// `phi`: for gl_m-highest `P`, the tableau of rank n with `lambda^(i)`
/// given by `(lambda^(i))^tr = rP_1 + ... + rP_i`; column `j` holds the `k`
/// with `P_{k,j} = 1`.
pub fn phi_map(p: &BitMatrix) -> Result<Ssyt> {
    check_chain(
        (1..=p.n()).map(|k| (1..=p.m()).map(|j| p.get(k, j) as usize).collect()),
        "phi needs a gl_m-highest matrix",
    )?;
    let columns: Vec<Vec<usize>> =
        (1..=p.m()).map(|j| (1..=p.n()).filter(|&k| p.get(k, j) == 1).collect()).collect();
    from_columns(p.n(), &columns)
}

/// `psi`: for gl_n-lowest `Q`, the tableau of rank m with
/// `(lambda^(i))^tr_k = Q_{n+1-k,1} + ... + Q_{n+1-k,i}`; column `k` holds
/// the `i` with `Q_{n+1-k,i} = 1`.
pub fn psi_map(q: &BitMatrix) -> Result<Ssyt> {
    let n = q.n();
    check_chain(
        (1..=q.m()).map(|i| (1..=n).map(|k| q.get(n + 1 - k, i) as usize).collect()),
        "psi needs a gl_n-lowest matrix",
    )?;
    let columns: Vec<Vec<usize>> =
        (1..=n).map(|k| (1..=q.m()).filter(|&i| q.get(n + 1 - k, i) == 1).collect()).collect();
    from_columns(q.m(), &columns)
}

/// Inverse of [`phi_map`]: an entry `k` in column `j` sets `P_{k,j} = 1`.
pub fn phi_inv(t: &Ssyt, m: usize) -> Result<BitMatrix> {
    let mut p = BitMatrix::zeros(t.rank(), m)?;
    for (j, col) in t.columns().iter().enumerate() {
        if j >= m {
            return Err(CrystalError::Precondition(format!("tableau is wider than {m}")));
        }
        for &k in col {
            p = p.with(k, j + 1, 1);
        }
    }
    Ok(p)
}

/// Inverse of [`psi_map`]: an entry `i` in column `k` sets `Q_{n+1-k,i} = 1`.
pub fn psi_inv(t: &Ssyt, n: usize) -> Result<BitMatrix> {
    let mut q = BitMatrix::zeros(n, t.rank())?;
    for (k, col) in t.columns().iter().enumerate() {
        if k >= n {
            return Err(CrystalError::Precondition(format!("tableau is wider than {n}")));
        }
        for &i in col {
            q = q.with(n - k, i, 1);
        }
    }
    Ok(q)
}

/// The image of a matrix under skew Howe duality.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualityPair {
    #[serde(rename = "P")]
    pub p: BitMatrix,
    #[serde(rename = "Q")]
    pub q: BitMatrix,
    #[serde(rename = "T_P")]
    pub t_p: Ssyt,
    #[serde(rename = "T_Q")]
    pub t_q: Ssyt,
    pub shape: Partition,
}

pub fn duality_iso(x: &BitMatrix) -> Result<DualityPair> {
    let (p, q) = (re_max(x), cf_max(x));
    let (t_p, t_q) = (phi_map(&p)?, psi_map(&q)?);
    let shape = t_p.shape();
    if t_q.shape() != shape.transpose() {
        return Err(CrystalError::ComponentAnomaly(format!(
            "T_P has shape {shape} but T_Q has shape {}",
            t_q.shape()
        )));
    }
    Ok(DualityPair { p, q, t_p, t_q, shape })
}

/// Recovers `M` from `(T_P, T_Q)`: with `P`, `Q` read back from the
/// tableaux, `L = Cf^max P = Re^max Q`, and `M` is obtained from `P` by the
/// lowering operators `Rf` along the reversed `Q -> L` path, and equally from
/// `Q` by the raising operators `Ce` along the reversed `P -> L` path.
pub fn duality_inv(t_p: &Ssyt, t_q: &Ssyt) -> Result<BitMatrix> {
    if t_q.shape() != t_p.shape().transpose() {
        return Err(CrystalError::Precondition(format!(
            "shapes {} and {} are not transposes",
            t_p.shape(),
            t_q.shape()
        )));
    }
    let (n, m) = (t_p.rank(), t_q.rank());
    let p = phi_inv(t_p, m)?;
    let q = psi_inv(t_q, n)?;
    let (l1, down) = cf_max_path(&p);
    let (l2, up) = re_max_path(&q);
    if l1 != l2 {
        return Err(CrystalError::ComponentAnomaly(format!(
            "Cf^max P = {} but Re^max Q = {}",
            l1.label(),
            l2.label()
        )));
    }
    let (rows, cols) = (RowCrystal::new(n, m), ColumnCrystal::new(n, m));
    let stuck = || CrystalError::ComponentAnomaly("operator path does not replay".into());
    let from_p = up.iter().rev().try_fold(p, |x, &i| rows.lower(i, &x).ok_or_else(stuck))?;
    let from_q = down.iter().rev().try_fold(q, |x, &j| cols.raise(j, &x).ok_or_else(stuck))?;
    if from_p != from_q {
        return Err(CrystalError::ComponentAnomaly(format!(
            "reconstructions disagree: {} and {}",
            from_p.label(),
            from_q.label()
        )));
    }
    Ok(from_p)
}

/// Checks on all of `Λ^N B_{n,m}` that the duality map is well defined
/// (path independent, transposed shapes, `Re^max` and `Cf^max` commute),
/// injective, inverted by [`duality_inv`], and hits each `lambda` exactly
/// `|B_lambda^{gl_n}| * |B_{lambda^tr}^{gl_m}|` times.
pub fn verify_duality(n: usize, m: usize, ones: usize, budget: u128) -> Result<Report> {
    let set = BitMatrix::enumerate_within(n, m, ones, budget)?;
    let mut report =
        Report::new("skew Howe duality", json!({ "n": n, "m": m, "N": ones }));
    let images: Vec<Option<DualityPair>> = set.iter().map(|x| duality_iso(x).ok()).collect();
    sweep(&mut report, &set, || (), |_, x, tally| {
        let w = |what: String| json!({ "matrix": x.label(), "property": what });
        let pair = duality_iso(x).map_err(|e| w(e.to_string()))?;
        ensure(re_max_path_by(x, SearchOrder::LargestFirst).0 == pair.p, || w("Re^max is path independent".into()))?;
        ensure(cf_max_path_by(x, SearchOrder::LargestFirst).0 == pair.q, || w("Cf^max is path independent".into()))?;
        ensure(cf_max(&pair.p) == re_max(&pair.q), || w("Re^max Cf^max = Cf^max Re^max".into()))?;
        let corner = doubly_extreme_shape(&cf_max(&pair.p)).map_err(|e| w(e.to_string()))?;
        ensure(corner == pair.shape, || w("L fills the shape of T_P".into()))?;
        ensure(phi_inv(&pair.t_p, m).ok() == Some(pair.p), || w("phi_inv phi = id".into()))?;
        ensure(psi_inv(&pair.t_q, n).ok() == Some(pair.q), || w("psi_inv psi = id".into()))?;
        let back = duality_inv(&pair.t_p, &pair.t_q).map_err(|e| w(e.to_string()))?;
        ensure(back == *x, || w(format!("round trip gives {}", back.label())))?;
        tally.hit("round trips");
        Ok(())
    });
    if report.passed() {
        let pairs: Vec<&DualityPair> = images.iter().flatten().collect();
        let distinct: HashSet<(&Ssyt, &Ssyt)> = pairs.iter().map(|p| (&p.t_p, &p.t_q)).collect();
        if distinct.len() != set.len() {
            report.fail(json!({ "property": "injective", "distinct images": distinct.len() }));
        }
        let mut by_shape: BTreeMap<String, (Partition, u128)> = BTreeMap::new();
        for p in &pairs {
            by_shape.entry(p.shape.to_string()).or_insert((p.shape.clone(), 0)).1 += 1;
        }
        for l in Partition::in_box(ones, n, m) {
            let expect = shape_count(&l, n, m)?;
            let got = by_shape.get(&l.to_string()).map_or(0, |e| e.1);
            if got != expect {
                report.fail(json!({ "property": "image count", "shape": l.to_string(), "expected": expect, "found": got }));
            }
        }
        report.tally("shapes", by_shape.len() as u64);
    }
    Ok(report)
}

/// `|B_lambda^{gl_n}| * |B_{lambda^tr}^{gl_m}|`.
fn shape_count(l: &Partition, n: usize, m: usize) -> Result<u128> {
    let a = ssyt_by_backtracking(l, n)?.len() as u128;
    let b = ssyt_by_backtracking(&l.transpose(), m)?.len() as u128;
    Ok(a * b)
}

/// `sum_{lambda in n×m box, |lambda| = N} |B_lambda^{gl_n}| |B_{lambda^tr}^{gl_m}| = C(nm, N)`
/// for every `N`.
pub fn verify_counting_identity(n: usize, m: usize) -> Result<Report> {
    let mut report = Report::new("counting identity", json!({ "n": n, "m": m }));
    for ones in 0..=n * m {
        let total: u128 = Partition::in_box(ones, n, m)
            .iter()
            .map(|l| shape_count(l, n, m))
            .sum::<Result<u128>>()?;
        let expect = binomial((n * m) as u64, ones as u64);
        if total != expect {
            report.fail(json!({ "N": ones, "sum": total, "binomial": expect }));
        }
        report.tally("values of N", 1);
    }
    Ok(report)
}

/// `phi` is a gl_n-crystal morphism on gl_m-highest matrices and `psi` a
/// gl_m-crystal morphism on gl_n-lowest matrices.
pub fn verify_tableau_maps(n: usize, m: usize, ones: usize, budget: u128) -> Result<Report> {
    let set = BitMatrix::enumerate_within(n, m, ones, budget)?;
    let (rows, cols) = (RowCrystal::new(n, m), ColumnCrystal::new(n, m));
    let highest: Vec<BitMatrix> =
        set.iter().copied().filter(|x| (1..m).all(|i| rows.raise(i, x).is_none())).collect();
    let lowest: Vec<BitMatrix> =
        set.iter().copied().filter(|x| (1..n).all(|j| cols.lower(j, x).is_none())).collect();
    let mut report = Report::new("phi and psi are morphisms", json!({ "n": n, "m": m, "N": ones }));
    report.absorb(is_morphism(|p| phi_map(p).ok(), &cols, &highest, &TableauCrystal::new(n)));
    report.absorb(is_morphism(|q| psi_map(q).ok(), &rows, &lowest, &TableauCrystal::new(m)));
    Ok(report)
}

/// For every matrix of `Λ^N B_{n,m}` and every `s_{p,q}` in `C_n`: the outer
/// action on the rows as gl_m crystals equals the inner action on the gl_n
/// structure.
pub fn verify_agreement(n: usize, m: usize, ones: usize, budget: u128) -> Result<Report> {
    let set = BitMatrix::enumerate_within(n, m, ones, budget)?;
    let cols = ColumnCrystal::new(n, m);
    let factor = FundamentalCrystal::new(m);
    let generators = Interval::all(n);
    let mut report =
        Report::new("outer action equals inner action", json!({ "n": n, "m": m, "N": ones }));
    let init = || (Schutzenberger::new(cols), OuterAction::new(&factor));
    sweep(&mut report, &set, init, |(xi, outer), x, tally| {
        for &g in &generators {
            let w = |what: String| json!({ "matrix": x.label(), "generator": g.to_string(), "detail": what });
            let err = |e: CrystalError| w(e.to_string());
            let o = from_row_structure(&outer.generator(g, &row_structure(x)).map_err(err)?).map_err(err)?;
            let i = xi.apply(x, g).map_err(err)?;
            ensure(o == i, || w(format!("outer gives {}, inner gives {}", o.label(), i.label())))?;
            tally.hit("generator actions");
        }
        Ok(())
    });
    Ok(report)
}

/// Counterclockwise rotation `F`: an a×b matrix `M` goes to the b×a matrix
/// with `F(M)_{k,j} = M_{j,b+1-k}`.
pub fn rotate90(x: &BitMatrix) -> BitMatrix {
    let (a, b) = (x.n(), x.m());
    let mut out = BitMatrix::zeros(b, a).expect("same number of entries");
    for k in 1..=b {
        for j in 1..=a {
            out = out.with(k, j, x.get(j, b + 1 - k));
        }
    }
    out
}

/// For `N` in `Λ^K B_{n,m}`, written `N = F(M)` with `M` in `Λ^K B_{m,n}`:
/// `F Ce_i = Re_i F`, `F Cf_i = Rf_i F`, `F s^i_{p,q} = s^i_{p,q} F`,
/// `F s^o_{p,q} = s^o_{m+1-q,m+1-p} F`, and
/// `s^o_{m+1-q,m+1-p}(N) = s^i_{p,q}(N)` for every `s_{p,q}` in `C_m`. The
/// outer action on `N` is on its columns `c_m ⊗ ... ⊗ c_1` as gl_n crystals,
/// the inner action is that of the gl_m structure.
pub fn verify_corollary(n: usize, m: usize, ones: usize, budget: u128) -> Result<Report> {
    let set = BitMatrix::enumerate_within(m, n, ones, budget)?;
    let (src_cols, dst_rows) = (ColumnCrystal::new(m, n), RowCrystal::new(n, m));
    let factor = FundamentalCrystal::new(n);
    let generators = Interval::all(m);
    let mut report = Report::new("rotated outer action equals inner action", json!({ "n": n, "m": m, "N": ones }));
    let init = || {
        (Schutzenberger::new(src_cols), Schutzenberger::new(dst_rows), OuterAction::new(&factor))
    };
    sweep(&mut report, &set, init, |(xi_src, xi_dst, outer), x, tally| {
        let f = rotate90(x);
        let w = |what: String| json!({ "matrix": x.label(), "rotated": f.label(), "detail": what });
        let err = |e: CrystalError| w(e.to_string());
        for i in 1..m {
            ensure(src_cols.raise(i, x).map(|y| rotate90(&y)) == dst_rows.raise(i, &f), || {
                w(format!("F Ce_{i} = Re_{i} F"))
            })?;
            ensure(src_cols.lower(i, x).map(|y| rotate90(&y)) == dst_rows.lower(i, &f), || {
                w(format!("F Cf_{i} = Rf_{i} F"))
            })?;
            tally.hit("operators");
        }
        for &g in &generators {
            let (p, q) = (g.p(), g.q());
            let mirrored = Interval::new(m + 1 - q, m + 1 - p, m).map_err(err)?;
            let inner_src = xi_src.apply(x, g).map_err(err)?;
            let inner_dst = xi_dst.apply(&f, g).map_err(err)?;
            ensure(rotate90(&inner_src) == inner_dst, || w(format!("F s^i{g} = s^i{g} F")))?;
            let outer_src =
                from_row_structure(&outer.generator(g, &row_structure(x)).map_err(err)?).map_err(err)?;
            let outer_dst =
                from_col_structure(&outer.generator(mirrored, &col_structure(&f)).map_err(err)?).map_err(err)?;
            ensure(rotate90(&outer_src) == outer_dst, || w(format!("F s^o{g} = s^o{mirrored} F")))?;
            ensure(outer_dst == inner_dst, || {
                w(format!("s^o{mirrored} gives {}, s^i{g} gives {}", outer_dst.label(), inner_dst.label()))
            })?;
            tally.hit("generators");
        }
        Ok(())
    });
    Ok(report)
}
