//! Cactus group words and their two actions: the inner action on a crystal
//! by partial Schützenberger involutions, and the outer action on tensor
//! products by reversing blocks of factors.

use std::fmt;

use serde_json::json;

use crate::base::{Interval, Permutation};
use crate::crystal::{kashiwara_reflection, Crystal, Schutzenberger};
use crate::error::{CrystalError, Result};
use crate::report::{ensure, sweep, Report};
use crate::tensor::TensorCrystal;

/// A word in the generators `s_{p,q}` of the cactus group of gl_rank, acting
/// left to right: the first generator is applied first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CactusWord {
    rank: usize,
    generators: Vec<Interval>,
}

impl CactusWord {
    pub fn new(rank: usize, generators: Vec<Interval>) -> Result<Self> {
        if let Some(g) = generators.iter().find(|g| g.rank() != rank) {
            return Err(CrystalError::RankMismatch { expected: rank, found: g.rank() });
        }
        Ok(CactusWord { rank, generators })
    }

    /// Parses whitespace-separated generators such as `s[1,3] s[2,4]`.
    pub fn parse(text: &str, rank: usize) -> Result<Self> {
        let generators = text
            .split_whitespace()
            .map(|tok| {
                let bad = || CrystalError::InvalidWord(format!("cannot read generator {tok:?}"));
                let inner = tok.strip_prefix("s[").and_then(|t| t.strip_suffix(']')).ok_or_else(bad)?;
                let (p, q) = inner.split_once(',').ok_or_else(bad)?;
                let p: usize = p.trim().parse().map_err(|_| bad())?;
                let q: usize = q.trim().parse().map_err(|_| bad())?;
                Interval::new(p, q, rank)
            })
            .collect::<Result<_>>()?;
        Ok(CactusWord { rank, generators })
    }

    pub fn generator(g: Interval) -> Self {
        CactusWord { rank: g.rank(), generators: vec![g] }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn generators(&self) -> &[Interval] {
        &self.generators
    }

    fn check_rank(&self, found: usize) -> Result<()> {
        if found != self.rank {
            return Err(CrystalError::RankMismatch { expected: self.rank, found });
        }
        Ok(())
    }
}

impl fmt::Display for CactusWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.generators.iter().map(ToString::to_string).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// The inner action: each generator `s_J` acts as `xi_J`.
pub fn inner_act<C: Crystal>(w: &CactusWord, xi: &Schutzenberger<C>, b: &C::Elem) -> Result<C::Elem> {
    w.check_rank(xi.crystal().rank())?;
    w.generators.iter().try_fold(b.clone(), |x, &j| xi.apply(&x, j))
}

/// The image in the symmetric group: `s_J` maps to the reversal of
/// positions `p..=q`, composed in word order.
pub fn weyl_image(w: &CactusWord) -> Permutation {
    w.generators
        .iter()
        .fold(Permutation::identity(w.rank), |acc, g| acc.then(&g.weyl_longest()))
}

/// The outer action on tensor products of elements of one factor crystal.
/// `s_{p,q}` replaces `b_p ⊗ ... ⊗ b_q` by `xi(xi(b_q) ⊗ ... ⊗ xi(b_p))`, where
/// the inner `xi` are those of the factors and the outer one is that of the
/// tensor product of the block, all over the full diagram of the factors.
pub struct OuterAction<'a, C: Crystal> {
    factor: Schutzenberger<&'a C>,
    block: Schutzenberger<TensorCrystal<&'a C>>,
}

impl<'a, C: Crystal> OuterAction<'a, C> {
    pub fn new(factor: &'a C) -> Self {
        OuterAction {
            factor: Schutzenberger::new(factor),
            block: Schutzenberger::new(TensorCrystal::new(factor)),
        }
    }

    /// `s_{p,q}` on a tensor of `q - p + 1 <= len` factors.
    pub fn generator(&self, g: Interval, t: &[C::Elem]) -> Result<Vec<C::Elem>> {
        let (p, q) = (g.p(), g.q());
        if q > t.len() {
            return Err(CrystalError::RankMismatch { expected: g.rank(), found: t.len() });
        }
        let flipped: Vec<C::Elem> =
            t[p - 1..q].iter().rev().map(|b| self.factor.apply_full(b)).collect::<Result<_>>()?;
        let block = self.block.apply_full(&flipped)?;
        let mut out = t.to_vec();
        out.splice(p - 1..q, block);
        Ok(out)
    }

    /// Applies a word whose rank is the number of tensor factors.
    pub fn act(&self, w: &CactusWord, t: &[C::Elem]) -> Result<Vec<C::Elem>> {
        w.check_rank(t.len())?;
        w.generators.iter().try_fold(t.to_vec(), |x, &g| self.generator(g, &x))
    }
}

/// One-shot outer action.
pub fn outer_act<C: Crystal>(w: &CactusWord, factor: &C, t: &[C::Elem]) -> Result<Vec<C::Elem>> {
    OuterAction::new(factor).act(w, t)
}

/// Checks pointwise on `set`: `s_J^2 = 1` for every interval, `s_J s_K =
/// s_{theta_J(K)} s_J` for `K` strictly inside `J`, and `s_J s_K = s_K s_J`
/// when the union of `J` and `K` is disconnected.
pub fn verify_cactus_relations<C>(c: &C, set: &[C::Elem]) -> Report
where
    C: Crystal + Sync,
    C::Elem: Send + Sync,
{
    let rank = c.rank();
    let mut report = Report::new("cactus relations", json!({ "rank": rank, "elements": set.len() }));
    let intervals = Interval::all(rank);
    sweep(&mut report, set, || Schutzenberger::new(c), |xi, b, tally| {
        let s = |j: Interval, x: &C::Elem| xi.apply(x, j);
        for &j in &intervals {
            let w = |what: String| json!({ "element": c.label(b), "relation": what });
            let err = |e: CrystalError| w(e.to_string());
            ensure(s(j, &s(j, b).map_err(err)?).map_err(err)? == *b, || w(format!("{j}^2 = 1")))?;
            tally.hit("involution");
            for &k in &intervals {
                if k != j && j.contains_interval(&k) {
                    let tk = j.theta_interval(&k).map_err(err)?;
                    let lhs = s(j, &s(k, b).map_err(err)?).map_err(err)?;
                    let rhs = s(tk, &s(j, b).map_err(err)?).map_err(err)?;
                    ensure(lhs == rhs, || w(format!("{j} {k} = {tk} {j}")))?;
                    tally.hit("nested");
                } else if !j.connected_with(&k) {
                    let lhs = s(j, &s(k, b).map_err(err)?).map_err(err)?;
                    let rhs = s(k, &s(j, b).map_err(err)?).map_err(err)?;
                    ensure(lhs == rhs, || w(format!("{j} {k} = {k} {j}")))?;
                    tally.hit("disjoint");
                }
            }
        }
        Ok(())
    });
    report
}

/// Checks that Kashiwara's reflections `s_i` agree with `xi_{{i}}`, satisfy
/// `s_i^2 = 1`, `(s_i s_{i+1})^3 = 1` and `(s_i s_j)^2 = 1` for `|i - j| >= 2`,
/// and permute weights by the transposition `(i i+1)`.
pub fn verify_reduced_braid<C>(c: &C, set: &[C::Elem]) -> Report
where
    C: Crystal + Sync,
    C::Elem: Send + Sync,
{
    let rank = c.rank();
    let mut report =
        Report::new("Weyl group action", json!({ "rank": rank, "elements": set.len() }));
    sweep(&mut report, set, || Schutzenberger::new(c), |xi, b, tally| {
        let w = |what: String| json!({ "element": c.label(b), "relation": what });
        let s = |i: usize, x: &C::Elem| kashiwara_reflection(c, x, i).map_err(|e| w(e.to_string()));
        let word = |letters: &[usize]| letters.iter().try_fold(b.clone(), |x, &i| s(i, &x));
        for i in 1..rank {
            let image = s(i, b)?;
            let node = Interval::node(i, rank).expect("node in range");
            ensure(xi.apply(b, node).ok().as_ref() == Some(&image), || w(format!("s_{i} = xi_{{{i}}}")))?;
            ensure(c.weight(&image) == Permutation::simple(i, rank).act(&c.weight(b)), || {
                w(format!("wt(s_{i} b) = r_{i} wt(b)"))
            })?;
            ensure(word(&[i, i])? == *b, || w(format!("s_{i}^2 = 1")))?;
            tally.hit("reflections");
            for j in i + 1..rank {
                if j == i + 1 {
                    ensure(word(&[i, j, i, j, i, j])? == *b, || w(format!("(s_{i} s_{j})^3 = 1")))?;
                } else {
                    ensure(word(&[i, j, i, j])? == *b, || w(format!("(s_{i} s_{j})^2 = 1")))?;
                }
                tally.hit("braid relations");
            }
        }
        Ok(())
    });
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::base::Partition;
    use crate::crystal::{closure, verify_xi_properties};
    use crate::matrix::{
        col_structure, from_col_structure, from_row_structure, row_structure, BitMatrix,
        ColumnCrystal, Fundamental, FundamentalCrystal, RowCrystal,
    };
    use crate::tableau::{enumerate_b_lambda, Ssyt, TableauCrystal};

    fn mat(rows: &[&[u8]]) -> BitMatrix {
        BitMatrix::from_rows(rows).unwrap()
    }

    fn example() -> BitMatrix {
        mat(&[&[1, 1, 1, 0, 0], &[0, 0, 1, 1, 0], &[1, 1, 1, 0, 1]])
    }

    #[test]
    fn parsing_words() {
        let w = CactusWord::parse("s[1,3]  s[2,4]", 4).unwrap();
        assert_eq!(w.generators().len(), 2);
        assert_eq!(w.to_string(), "s[1,3] s[2,4]");
        assert!(CactusWord::parse("s[1,5]", 4).is_err());
        assert!(CactusWord::parse("s[2,2]", 4).is_err());
        assert!(CactusWord::parse("t[1,2]", 4).is_err());
        assert!(CactusWord::parse("s[1;2]", 4).is_err());
        assert!(CactusWord::parse("", 3).unwrap().generators().is_empty());
    }

    #[test]
    fn inner_generator_on_a_two_chain() {
        let c = FundamentalCrystal::new(2);
        let w = CactusWord::parse("s[1,2]", 2).unwrap();
        let v = Fundamental::new(&[1, 0]).unwrap();
        assert_eq!(inner_act(&w, &Schutzenberger::new(&c), &v).unwrap(), Fundamental::new(&[0, 1]).unwrap());
        let w3 = CactusWord::parse("s[1,2]", 3).unwrap();
        assert!(matches!(
            inner_act(&w3, &Schutzenberger::new(&c), &v),
            Err(CrystalError::RankMismatch { .. })
        ));
    }

    #[test]
    fn inner_goldens_on_the_example_matrix() {
        let x = example();
        let cols = ColumnCrystal::new(3, 5);
        let w = CactusWord::parse("s[1,2]", 3).unwrap();
        let expect = mat(&[&[1, 0, 1, 0, 0], &[0, 1, 1, 1, 0], &[1, 1, 1, 0, 1]]);
        assert_eq!(inner_act(&w, &Schutzenberger::new(&cols), &x).unwrap(), expect);
        let rows = RowCrystal::new(3, 5);
        let w = CactusWord::parse("s[4,5]", 5).unwrap();
        assert_eq!(inner_act(&w, &Schutzenberger::new(&rows), &x).unwrap(), x);
    }

    #[test]
    fn outer_goldens_on_the_example_matrix() {
        let x = example();
        let w = CactusWord::parse("s[1,2]", 3).unwrap();
        let rows = outer_act(&w, &FundamentalCrystal::new(5), &row_structure(&x)).unwrap();
        let expect = mat(&[&[1, 0, 1, 0, 0], &[0, 1, 1, 1, 0], &[1, 1, 1, 0, 1]]);
        assert_eq!(from_row_structure(&rows).unwrap(), expect);
        let w = CactusWord::parse("s[1,2]", 5).unwrap();
        let cols = outer_act(&w, &FundamentalCrystal::new(3), &col_structure(&x)).unwrap();
        assert_eq!(from_col_structure(&cols).unwrap(), x);
    }

    #[test]
    fn outer_generator_on_two_boxes() {
        let c = TableauCrystal::new(2);
        let one = Ssyt::new(2, vec![vec![1]]).unwrap();
        let w = CactusWord::parse("s[1,2]", 2).unwrap();
        let image = outer_act(&w, &c, &[one.clone(), one.clone()]).unwrap();
        let tensor = TensorCrystal::new(c);
        assert_eq!(tensor.weight(&image), tensor.weight(&vec![one.clone(), one.clone()]));
        assert_eq!(image, vec![one.clone(), one]);
        assert!(outer_act(&CactusWord::parse("s[1,2]", 3).unwrap(), &c, &image).is_err());
    }

    #[test]
    fn outer_generators_are_involutions() {
        let c = FundamentalCrystal::new(3);
        let letters = Fundamental::all(3);
        let outer = OuterAction::new(&c);
        for a in &letters {
            for b in &letters {
                for d in &letters {
                    let t = vec![*a, *b, *d];
                    for g in Interval::all(3) {
                        let once = outer.generator(g, &t).unwrap();
                        assert_eq!(outer.generator(g, &once).unwrap(), t);
                    }
                }
            }
        }
    }

    #[test]
    fn weyl_images() {
        let w = CactusWord::parse("s[1,4]", 4).unwrap();
        assert_eq!(weyl_image(&w).one_line(), vec![4, 3, 2, 1]);
        for k in 2..=5 {
            for p in 1..k {
                for q in p + 1..=k {
                    let lhs = CactusWord::parse(&format!("s[{p},{q}]"), k).unwrap();
                    let rhs =
                        CactusWord::parse(&format!("s[1,{q}] s[1,{}] s[1,{q}]", q + 1 - p), k).unwrap();
                    assert_eq!(weyl_image(&lhs), weyl_image(&rhs));
                }
            }
        }
        let c = TableauCrystal::new(3);
        let xi = Schutzenberger::new(&c);
        let w = CactusWord::parse("s[1,2] s[1,3] s[2,3]", 3).unwrap();
        for b in enumerate_b_lambda(&Partition::new(vec![2, 1]).unwrap(), 3).unwrap() {
            let image = inner_act(&w, &xi, &b).unwrap();
            assert_eq!(image.weight(), weyl_image(&w).act(&b.weight()));
        }
    }

    #[test]
    fn relations_on_tableaux() {
        for (parts, n) in [(vec![2, 1], 3), (vec![2, 1, 1], 4), (vec![3], 2), (vec![3, 2], 4)] {
            let c = TableauCrystal::new(n);
            let set = enumerate_b_lambda(&Partition::new(parts).unwrap(), n).unwrap();
            assert!(verify_cactus_relations(&c, &set).passed());
            assert!(verify_reduced_braid(&c, &set).passed());
            assert!(verify_xi_properties(&c, &set, &Interval::all(n)).passed());
        }
    }

    #[test]
    fn relations_on_matrices() {
        for k in 0..=9 {
            let set = BitMatrix::enumerate(3, 3, k).unwrap();
            assert!(verify_cactus_relations(&RowCrystal::new(3, 3), &set).passed());
            assert!(verify_cactus_relations(&ColumnCrystal::new(3, 3), &set).passed());
            assert!(verify_reduced_braid(&RowCrystal::new(3, 3), &set).passed());
        }
    }

    #[test]
    fn xi_on_rows_is_a_column_morphism() {
        for (n, m) in [(3, 3), (2, 4), (4, 2)] {
            let (rows, cols) = (RowCrystal::new(n, m), ColumnCrystal::new(n, m));
            for k in 0..=n * m {
                let set = BitMatrix::enumerate(n, m, k).unwrap();
                for q in 2..=m {
                    let j = Interval::new(1, q, m).unwrap();
                    let report = crate::crystal::is_morphism(
                        |x| Some(crate::crystal::schuetzenberger(&rows, x, j).unwrap()),
                        &cols,
                        &set,
                        &cols,
                    );
                    assert!(report.passed(), "{report}");
                }
            }
        }
    }

    #[test]
    fn outer_first_generators_turn_raising_into_lowering() {
        for (n, m) in [(3, 3), (2, 4), (4, 2)] {
            let cols = ColumnCrystal::new(n, m);
            let factor = FundamentalCrystal::new(m);
            let outer = OuterAction::new(&factor);
            for k in 0..=n * m {
                for x in BitMatrix::enumerate(n, m, k).unwrap() {
                    for top in 2..=n {
                        let g = Interval::new(1, top, n).unwrap();
                        let act = |y: &BitMatrix| {
                            from_row_structure(&outer.generator(g, &row_structure(y)).unwrap()).unwrap()
                        };
                        for i in 1..top {
                            if let Some(up) = cols.raise(i, &x) {
                                assert_eq!(Some(act(&up)), cols.lower(top - i, &act(&x)));
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn tensor_crystal_relations() {
        let c = TensorCrystal::new(FundamentalCrystal::new(3));
        let seed = vec![Fundamental::new(&[1, 0, 0]).unwrap(); 3];
        let set = closure(&c, &[seed]);
        assert!(verify_cactus_relations(&c, &set).passed());
        assert!(verify_xi_properties(&c, &set, &Interval::all(3)).passed());
    }
}
