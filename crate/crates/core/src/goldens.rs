//! Every worked example as a named, exactly checked golden.

use std::fmt::Display;

use serde_json::json;

use crate::base::{Interval, Partition, Weight};
use crate::cactus::{inner_act, outer_act, CactusWord};
use crate::crystal::{
    components, export_graph, kashiwara_reflection, schuetzenberger, Crystal, Schutzenberger,
};
use crate::error::Result;
use crate::gt::{beta, bk_move, bk_q, gt_to_tableau, tableau_to_gt, GtPattern};
use crate::matrix::{
    col_structure, from_col_structure, from_row_structure, row_structure, BitMatrix,
    ColumnCrystal, Fundamental, FundamentalCrystal, RowCrystal,
};
use crate::report::Report;
use crate::skew_howe::{
    cf_max, doubly_extreme_shape, duality_inv, phi_map, psi_map, re_max, rotate90,
};
use crate::tableau::{enumerate_b_lambda, weight_of, Ssyt, TableauCrystal};
use crate::tensor::{tensor_profiles, TensorCrystal};

/// Accumulates exact comparisons into a report.
struct Golden(Report);

impl Golden {
    fn new(name: &str) -> Self {
        Golden(Report::new(name, json!("golden")))
    }

    fn eq<T: PartialEq + Display>(&mut self, what: &str, found: T, expected: T) {
        self.0.tally("comparisons", 1);
        if found != expected {
            self.0.fail(json!({
                "check": what,
                "expected": expected.to_string(),
                "found": found.to_string(),
            }));
        }
    }

    fn holds(&mut self, what: &str, cond: bool) {
        self.0.tally("comparisons", 1);
        if !cond {
            self.0.fail(json!({ "check": what }));
        }
    }
}

fn mat(rows: &[&[u8]]) -> Result<BitMatrix> {
    BitMatrix::from_rows(rows)
}

fn tab(rank: usize, rows: &[&[usize]]) -> Result<Ssyt> {
    Ssyt::new(rank, rows.iter().map(|r| r.to_vec()).collect())
}

fn opt<T: Display>(x: Option<T>) -> String {
    x.map_or_else(|| "null".to_string(), |x| x.to_string())
}

/// The 3×5 matrix of the worked skew Howe and cactus examples.
pub fn example_matrix() -> BitMatrix {
    BitMatrix::from_rows(&[&[1, 1, 1, 0, 0], &[0, 0, 1, 1, 0], &[1, 1, 1, 0, 1]])
        .expect("valid example")
}

/// The Gelfand-Tsetlin pattern of the Berenstein-Kirillov example.
pub fn example_pattern() -> GtPattern {
    GtPattern::new(4, vec![vec![5, 3, 3, 1], vec![4, 3, 1], vec![4, 2], vec![3]])
        .expect("valid example")
}

/// The pattern maps to its tableau; `q_2 = t_1 t_2 t_1` gives the displayed
/// chain and final pattern, whose tableau is the partial Schützenberger
/// involution of `T_x`.
pub fn gt_example() -> Result<Report> {
    let mut g = Golden::new("Gelfand-Tsetlin example");
    let x = example_pattern();
    let tx = gt_to_tableau(&x);
    g.eq("T_x", tx.label(), tab(4, &[&[1, 1, 1, 2, 4], &[2, 2, 3], &[3, 4, 4], &[4]])?.label());
    g.eq("tableau_to_gt(T_x)", tableau_to_gt(&tx), x.clone());
    g.eq("beta(x)", beta(&x), Weight::new(vec![3, 3, 2, 4]));
    g.eq("weight(T_x)", weight_of(&tx), Weight::new(vec![3, 3, 2, 4]));
    let a = bk_move(&x, 1)?;
    let b = bk_move(&a, 2)?;
    let c = bk_move(&b, 1)?;
    g.eq("t_1 x", a.clone(), x.clone());
    g.eq(
        "t_2 t_1 x",
        b,
        GtPattern::new(4, vec![vec![5, 3, 3, 1], vec![4, 3, 1], vec![3, 2], vec![3]])?,
    );
    let expect = GtPattern::new(4, vec![vec![5, 3, 3, 1], vec![4, 3, 1], vec![3, 2], vec![2]])?;
    g.eq("t_1 t_2 t_1 x", c, expect.clone());
    g.eq("q_2 x", bk_q(&x, 2)?, expect.clone());
    let image = tab(4, &[&[1, 1, 2, 3, 4], &[2, 2, 3], &[3, 4, 4], &[4]])?;
    g.eq("T of q_2 x", gt_to_tableau(&expect).label(), image.label());
    let j = Interval::new(1, 3, 4)?;
    g.eq("xi_{1,2} T_x", schuetzenberger(&TableauCrystal::new(4), &tx, j)?.label(), image.label());
    let sub = tab(3, &[&[1, 1, 1, 2], &[2, 2, 3], &[3]])?;
    g.eq("(T_x)_{<=3}", tx.restrict(3).label(), sub.label());
    g.eq(
        "s_{1,2} (T_x)_{<=3}",
        schuetzenberger(&TableauCrystal::new(3), &sub, Interval::new(1, 3, 3)?)?.label(),
        tab(3, &[&[1, 1, 2, 3], &[2, 2, 3], &[3]])?.label(),
    );
    Ok(g.0)
}

/// `(Re^max, Cf^max)` and `(phi, psi)` on the example matrix, and the way
/// back.
pub fn skew_howe_example() -> Result<Report> {
    let mut g = Golden::new("skew Howe duality example");
    let x = example_matrix();
    let p = re_max(&x);
    let q = cf_max(&x);
    g.eq("P", p, mat(&[&[1, 1, 1, 0, 0], &[1, 0, 0, 1, 0], &[1, 1, 1, 0, 1]])?);
    g.eq("Q", q, mat(&[&[0, 0, 1, 0, 0], &[1, 1, 1, 0, 0], &[1, 1, 1, 1, 1]])?);
    let (tp, tq) = (phi_map(&p)?, psi_map(&q)?);
    g.eq("T_P", tp.label(), tab(3, &[&[1, 1, 1, 2, 3], &[2, 3, 3], &[3]])?.label());
    g.eq("T_Q", tq.label(), tab(5, &[&[1, 1, 3], &[2, 2], &[3, 3], &[4], &[5]])?.label());
    g.eq("shape T_P", tp.shape(), Partition::new(vec![5, 3, 1])?);
    g.eq("shape T_Q", tq.shape(), Partition::new(vec![3, 2, 2, 1, 1])?);
    g.eq("(5,3,1)^tr", Partition::new(vec![5, 3, 1])?.transpose(), Partition::new(vec![3, 2, 2, 1, 1])?);
    let l = cf_max(&p);
    g.eq("Cf^max P = Re^max Q", l, re_max(&q));
    g.eq("L fills (5,3,1)", doubly_extreme_shape(&l)?, Partition::new(vec![5, 3, 1])?);
    g.eq("round trip", duality_inv(&tp, &tq)?, x);
    g.eq(
        "rows of M",
        row_structure(&x).iter().map(Fundamental::label).collect::<Vec<_>>().join(" ⊗ "),
        "11100 ⊗ 00110 ⊗ 11101".to_string(),
    );
    Ok(g.0)
}

/// The commuting square `phi(Ce_2 P) = e_2 phi(P)`.
pub fn morphism_square() -> Result<Report> {
    let mut g = Golden::new("crystal morphism square");
    let p = mat(&[&[1, 1, 1, 0, 0], &[1, 0, 0, 1, 0], &[1, 1, 1, 0, 1]])?;
    let moved = mat(&[&[1, 1, 1, 0, 0], &[1, 1, 0, 1, 0], &[1, 0, 1, 0, 1]])?;
    let cols = ColumnCrystal::new(3, 5);
    g.eq("Ce_2 P", opt(cols.raise(2, &p)), moved.to_string());
    let tp = tab(3, &[&[1, 1, 1, 2, 3], &[2, 3, 3], &[3]])?;
    let raised = tab(3, &[&[1, 1, 1, 2, 3], &[2, 2, 3], &[3]])?;
    g.eq("phi(P)", phi_map(&p)?.label(), tp.label());
    g.eq("e_2 phi(P)", opt(tp.apply_e(2)?.map(|t| t.label())), raised.label());
    g.eq("phi(Ce_2 P)", phi_map(&moved)?.label(), raised.label());
    g.eq("e-position of the 3 changed", format!("{:?}", tp.signature(2)?.e_position), "Some((2, 2))".into());
    Ok(g.0)
}

/// `s°_{1,2}(M) = sⁱ_{1,2}(M)` for `C_3`, and `s°_{1,2}` on the columns
/// equals `sⁱ_{4,5}(M) = M` for `C_5`.
pub fn cactus_examples() -> Result<Report> {
    let mut g = Golden::new("outer and inner cactus examples");
    let x = example_matrix();
    let expect = mat(&[&[1, 0, 1, 0, 0], &[0, 1, 1, 1, 0], &[1, 1, 1, 0, 1]])?;
    let w3 = CactusWord::parse("s[1,2]", 3)?;
    let outer = from_row_structure(&outer_act(&w3, &FundamentalCrystal::new(5), &row_structure(&x))?)?;
    let inner = inner_act(&w3, &Schutzenberger::new(ColumnCrystal::new(3, 5)), &x)?;
    g.eq("s°_{1,2}(M) on rows", outer, expect);
    g.eq("sⁱ_{1,2}(M)", inner, expect);
    let reversed = [x.row(2).reversed(), x.row(1).reversed(), x.row(3)];
    g.eq(
        "flip then reverse each row",
        from_row_structure(&reversed)?,
        mat(&[&[0, 1, 1, 0, 0], &[0, 0, 1, 1, 1], &[1, 1, 1, 0, 1]])?,
    );
    let w5 = CactusWord::parse("s[1,2]", 5)?;
    let outer = from_col_structure(&outer_act(&w5, &FundamentalCrystal::new(3), &col_structure(&x))?)?;
    let w45 = CactusWord::parse("s[4,5]", 5)?;
    let inner = inner_act(&w45, &Schutzenberger::new(RowCrystal::new(3, 5)), &x)?;
    g.eq("s°_{1,2}(M) on columns", outer, x);
    g.eq("sⁱ_{4,5}(M)", inner, x);
    Ok(g.0)
}

/// Small examples of the crystal machinery.
pub fn crystal_examples() -> Result<Report> {
    let mut g = Golden::new("crystal examples");
    let full = |k| Interval::full(k).expect("rank at least 2");
    let v = Fundamental::new(&[1, 1, 0, 0, 0])?;
    g.eq(
        "xi on (1,1,0,0,0)",
        schuetzenberger(&FundamentalCrystal::new(5), &v, full(5))?.label(),
        "00011".to_string(),
    );
    for n in 2..=5 {
        for i in 1..n {
            g.eq("theta of the full diagram", full(n).theta(i)?, n - i);
        }
    }
    let adjoint = enumerate_b_lambda(&Partition::new(vec![2, 1])?, 3)?;
    let graph = export_graph(&TableauCrystal::new(3), &adjoint, None)?;
    g.eq("adjoint vertices", graph.vertices.len(), 8);
    for color in 1..=2 {
        g.eq("adjoint edges per color", graph.edges.iter().filter(|e| e.color == color).count(), 4);
    }
    let c2 = TableauCrystal::new(2);
    let (one, two) = (tab(2, &[&[1]])?, tab(2, &[&[2]])?);
    let t = vec![one.clone(), one.clone()];
    let (eps, phi) = tensor_profiles(&c2, &t, 1);
    g.eq("eps profile of (1)⊗(1)", format!("{eps:?}"), "[0, -1]".into());
    g.eq("phi profile of (1)⊗(1)", format!("{phi:?}"), "[2, 1]".into());
    let tc = TensorCrystal::new(c2);
    g.holds("f_1((1)⊗(1)) = (2)⊗(1)", tc.lower(1, &t) == Some(vec![two, one]));
    g.eq(
        "kashiwara reflection of [[1,1]]",
        kashiwara_reflection(&c2, &tab(2, &[&[1, 1]])?, 1)?.label(),
        "[[2,2]]".into(),
    );
    g.eq("weight of [[1,1],[2]]", weight_of(&tab(2, &[&[1, 1], &[2]])?), Weight::new(vec![2, 1]));
    g.holds("e_1 [[1,1],[2]] is null", tab(2, &[&[1, 1], &[2]])?.apply_e(1)?.is_none());
    let two_by_two = BitMatrix::enumerate(2, 2, 2)?;
    let rows = RowCrystal::new(2, 2);
    let comps = components(&rows, &two_by_two, full(2))?;
    let mut highest: Vec<String> = comps.iter().map(|c| rows.weight(&c.highest).to_string()).collect();
    highest.sort();
    g.eq("row components of Λ^2 B_{2,2}", highest.join(" "), "[1,1] [1,1] [1,1] [2,0]".into());
    let id = mat(&[&[1, 0], &[0, 1]])?;
    let labels = |t: Vec<Fundamental>| t.iter().map(Fundamental::label).collect::<Vec<_>>().join(" ⊗ ");
    g.eq("rows of the identity", labels(row_structure(&id)), "10 ⊗ 01".into());
    g.eq("columns of the identity", labels(col_structure(&id)), "01 ⊗ 10".into());
    g.eq("rotation", rotate90(&mat(&[&[1, 0], &[0, 0]])?), mat(&[&[0, 0], &[1, 0]])?);
    Ok(g.0)
}

/// All goldens, in a fixed order.
pub fn all() -> Result<Vec<Report>> {
    Ok(vec![
        gt_example()?,
        skew_howe_example()?,
        morphism_square()?,
        cactus_examples()?,
        crystal_examples()?,
    ])
}
