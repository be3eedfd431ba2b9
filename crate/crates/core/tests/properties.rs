use proptest::prelude::*;

use glk_crystals::cactus::OuterAction;
use glk_crystals::crystal::{schuetzenberger, Crystal};
use glk_crystals::gt::{bk_move, enumerate_k_lambda, gt_to_tableau, tableau_to_gt};
use glk_crystals::matrix::{
    from_row_structure, row_structure, BitMatrix, ColumnCrystal, FundamentalCrystal, RowCrystal,
};
use glk_crystals::skew_howe::{duality_inv, duality_iso, rotate90};
use glk_crystals::tableau::{enumerate_b_lambda, TableauCrystal};
use glk_crystals::{Interval, Partition};

/// A random matrix with `1 <= n, m <= 4`.
fn matrix() -> impl Strategy<Value = BitMatrix> {
    (1usize..=4, 1usize..=4).prop_flat_map(|(n, m)| {
        prop::collection::vec(prop::collection::vec(0u8..=1, m), n)
            .prop_map(move |rows| BitMatrix::new(n, m, &rows).unwrap())
    })
}

fn interval(rank: usize) -> impl Strategy<Value = Interval> {
    (1..rank).prop_flat_map(move |p| (Just(p), p + 1..=rank)).prop_map(move |(p, q)| Interval::new(p, q, rank).unwrap())
}

/// A random shape with at most 5 boxes and rank 2 to 4, and an index into
/// its crystal.
fn shape_and_rank() -> impl Strategy<Value = (Partition, usize, usize)> {
    (2usize..=4, 1usize..=5, any::<prop::sample::Index>(), any::<prop::sample::Index>()).prop_map(
        |(k, size, pick, elem)| {
            let shapes: Vec<Partition> = Partition::of_size(size).into_iter().filter(|l| l.len() <= k).collect();
            (pick.get(&shapes).clone(), k, elem.index(usize::MAX))
        },
    )
}

proptest! {
    #[test]
    fn duality_round_trips(x in matrix()) {
        let pair = duality_iso(&x).unwrap();
        prop_assert_eq!(pair.t_q.shape(), pair.shape.transpose());
        prop_assert_eq!(pair.shape.size(), x.ones());
        prop_assert_eq!(duality_inv(&pair.t_p, &pair.t_q).unwrap(), x);
    }

    #[test]
    fn rotation_has_order_four(x in matrix()) {
        let y = (0..4).fold(x, |y, _| rotate90(&y));
        prop_assert_eq!(y, x);
    }

    #[test]
    fn row_and_column_operators_commute(x in matrix(), i in 1usize..4, j in 1usize..4) {
        let (rows, cols) = (RowCrystal::new(x.n(), x.m()), ColumnCrystal::new(x.n(), x.m()));
        prop_assume!(i < x.m() && j < x.n());
        if let (Some(a), Some(b)) = (rows.raise(i, &x), cols.lower(j, &x)) {
            prop_assert_eq!(cols.lower(j, &a), rows.raise(i, &b));
        }
        if let Some(a) = rows.raise(i, &x) {
            prop_assert_eq!(cols.weight(&a), cols.weight(&x));
        }
    }

    #[test]
    fn outer_and_inner_actions_agree(x in matrix(), pick in any::<prop::sample::Index>()) {
        prop_assume!(x.n() >= 2);
        let gens = Interval::all(x.n());
        let g = *pick.get(&gens);
        let factor = FundamentalCrystal::new(x.m());
        let outer = from_row_structure(&OuterAction::new(&factor).generator(g, &row_structure(&x)).unwrap()).unwrap();
        let inner = schuetzenberger(&ColumnCrystal::new(x.n(), x.m()), &x, g).unwrap();
        prop_assert_eq!(outer, inner);
    }

    #[test]
    fn xi_is_an_involution_on_tableaux((shape, k, idx) in shape_and_rank(), seed in any::<prop::sample::Index>()) {
        let set = enumerate_b_lambda(&shape, k).unwrap();
        let t = &set[idx % set.len()];
        let c = TableauCrystal::new(k);
        let gens = Interval::all(k);
        let j = *seed.get(&gens);
        let once = schuetzenberger(&c, t, j).unwrap();
        prop_assert_eq!(&schuetzenberger(&c, &once, j).unwrap(), t);
        prop_assert_eq!(c.weight(&once), j.weyl_longest().act(&c.weight(t)));
    }

    #[test]
    fn operators_are_partial_inverses((shape, k, idx) in shape_and_rank(), i in 1usize..4) {
        prop_assume!(i < k);
        let set = enumerate_b_lambda(&shape, k).unwrap();
        let t = &set[idx % set.len()];
        let c = TableauCrystal::new(k);
        if let Some(u) = c.lower(i, t) {
            prop_assert_eq!(c.raise(i, &u), Some(t.clone()));
        }
        let d = c.phi(i, t) as i64 - c.epsilon(i, t) as i64;
        prop_assert_eq!(d, c.weight(t).coroot(i));
    }

    #[test]
    fn moves_are_involutions((shape, k, idx) in shape_and_rank(), j in 1usize..4) {
        prop_assume!(j < k);
        let set = enumerate_k_lambda(&shape, k).unwrap();
        let x = &set[idx % set.len()];
        prop_assert_eq!(&bk_move(&bk_move(x, j).unwrap(), j).unwrap(), x);
        prop_assert_eq!(&tableau_to_gt(&gt_to_tableau(x)), x);
    }

    #[test]
    fn theta_is_an_involution_of_the_interval(j in (2usize..8).prop_flat_map(interval)) {
        for i in j.nodes() {
            let t = j.theta(i).unwrap();
            prop_assert!(j.contains(t));
            prop_assert_eq!(j.theta(t).unwrap(), i);
            prop_assert_eq!(i + t, j.p() + j.q() - 1);
        }
    }
}
