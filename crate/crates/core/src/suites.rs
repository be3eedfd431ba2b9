//! Exhaustive verification suites over fixed ranges of instances, each
//! folded into one report. The command line `verify` subcommands and the
//! acceptance harness both run these.

use std::fmt;
use std::str::FromStr;

use serde_json::json;

use crate::base::{schur_bruteforce, Interval, Partition};
use crate::cactus::{verify_cactus_relations, verify_reduced_braid};
use crate::crystal::{character, check_crystal_axioms, is_morphism, verify_xi_properties, Crystal};
use crate::error::{CrystalError, Result};
use crate::goldens;
use crate::gt::{check_cgp_homomorphism, verify_bk_moves};
use crate::matrix::{
    verify_commutation_of, verify_dual_implementations, BitMatrix, ColumnCrystal, Fundamental,
    FundamentalCrystal, RowCrystal, Rule, DEFAULT_BUDGET,
};
use crate::report::Report;
use crate::skew_howe::{
    verify_agreement, verify_corollary, verify_counting_identity, verify_duality,
    verify_tableau_maps,
};
use crate::tableau::{enumerate_b_lambda, ssyt_by_backtracking, Ssyt, TableauCrystal};
use crate::tensor::TensorCrystal;

/// Largest `nm` for the matrix sweeps of the theorem, corollary and
/// commuting structures.
pub const MATRIX_RANGE: usize = 12;
/// Largest `nm` for the cactus and braid sweeps on matrix crystals.
pub const SMALL_MATRIX_RANGE: usize = 9;
/// Tableau sweeps cover every shape with at most this many boxes...
pub const MAX_BOXES: usize = 6;
/// ...and every rank up to this one.
pub const MAX_RANK: usize = 4;
/// Largest crystal on which the Schützenberger involution is swept.
pub const XI_LIMIT: usize = 500;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    Goldens,
    Axioms,
    Xi,
    Cactus,
    Braid,
    Cgp,
    Oracles,
    Commutation,
    Duality,
    Agree,
    Corollary,
}

impl Suite {
    pub const ALL: [Suite; 11] = [
        Suite::Goldens,
        Suite::Axioms,
        Suite::Xi,
        Suite::Cactus,
        Suite::Braid,
        Suite::Cgp,
        Suite::Oracles,
        Suite::Commutation,
        Suite::Duality,
        Suite::Agree,
        Suite::Corollary,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Goldens => "goldens",
            Suite::Axioms => "axioms",
            Suite::Xi => "xi",
            Suite::Cactus => "cactus",
            Suite::Braid => "braid",
            Suite::Cgp => "cgp",
            Suite::Oracles => "oracles",
            Suite::Commutation => "commutation",
            Suite::Duality => "duality",
            Suite::Agree => "agree",
            Suite::Corollary => "corollary",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = CrystalError;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| CrystalError::InvalidInput(format!("unknown suite {s:?}")))
    }
}

/// Settings shared by all suites. Instances with more elements than
/// `budget` are skipped and counted; a budget of 0 leaves only the goldens.
#[derive(Clone, Copy, Debug)]
pub struct Config {
    pub budget: u128,
    /// Replaces the column structure by one that reads columns in the wrong
    /// order, as a negative control for the commutation suite.
    pub inject_fault: bool,
}

impl Default for Config {
    fn default() -> Self {
        Config { budget: DEFAULT_BUDGET, inject_fault: false }
    }
}

struct Sweep<'a> {
    report: Report,
    config: &'a Config,
}

impl<'a> Sweep<'a> {
    fn new(property: &str, range: serde_json::Value, config: &'a Config) -> Self {
        Sweep { report: Report::new(property, range), config }
    }

    /// Whether an instance of this size is within budget; counts skips.
    fn admit(&mut self, size: usize) -> bool {
        let ok = size as u128 <= self.config.budget;
        if !ok {
            self.report.tally("skipped instances", 1);
        }
        ok
    }

    fn add(&mut self, r: Report) {
        self.report.tally("instances", 1);
        self.report.absorb(r);
    }

    fn finish(self) -> Report {
        self.report
    }
}

/// All `(n, m)` with `n, m >= 1` and `nm <= max`.
pub fn matrix_dimensions(max: usize) -> Vec<(usize, usize)> {
    (1..=max).flat_map(|n| (1..=max / n).map(move |m| (n, m))).collect()
}

/// All `(lambda, k)` with `2 <= k <= max_rank`, `1 <= |lambda| <= max_boxes`
/// and at most `k` rows.
pub fn tableau_instances(max_boxes: usize, max_rank: usize) -> Vec<(Partition, usize)> {
    (2..=max_rank)
        .flat_map(|k| {
            (1..=max_boxes)
                .flat_map(Partition::of_size)
                .filter(move |l| l.len() <= k)
                .map(move |l| (l, k))
        })
        .collect()
}

fn matrix_instances(max: usize) -> Vec<(usize, usize, usize)> {
    matrix_dimensions(max)
        .into_iter()
        .flat_map(|(n, m)| (0..=n * m).map(move |k| (n, m, k)))
        .collect()
}

fn matrix_size(n: usize, m: usize, k: usize) -> usize {
    crate::base::binomial((n * m) as u64, k as u64) as usize
}

fn b_lambda(l: &Partition, k: usize) -> Result<Vec<Ssyt>> {
    enumerate_b_lambda(l, k)
}

pub fn run(suite: Suite, config: &Config) -> Result<Report> {
    match suite {
        Suite::Goldens => goldens_suite(),
        Suite::Axioms => axioms(config),
        Suite::Xi => xi(config),
        Suite::Cactus => cactus(config),
        Suite::Braid => braid(config),
        Suite::Cgp => cgp(config),
        Suite::Oracles => oracles(config),
        Suite::Commutation => commutation(MATRIX_RANGE, config),
        Suite::Duality => duality(MATRIX_RANGE, config),
        Suite::Agree => agree(MATRIX_RANGE, config),
        Suite::Corollary => corollary(MATRIX_RANGE, config),
    }
}

pub fn goldens_suite() -> Result<Report> {
    let mut report = Report::new("goldens", json!("all worked examples"));
    for r in goldens::all()? {
        report.tally("goldens", 1);
        report.absorb(r);
    }
    Ok(report)
}

/// Crystal axioms on tableaux, fundamentals, small tensor powers and both
/// matrix structures.
pub fn axioms(config: &Config) -> Result<Report> {
    let range = json!({ "boxes": MAX_BOXES, "rank": MAX_RANK, "nm": MATRIX_RANGE });
    let mut s = Sweep::new("crystal axioms", range, config);
    for (l, k) in tableau_instances(MAX_BOXES, MAX_RANK) {
        let set = b_lambda(&l, k)?;
        if s.admit(set.len()) {
            s.add(check_crystal_axioms(&TableauCrystal::new(k), &set));
        }
    }
    for (n, m, k) in matrix_instances(MATRIX_RANGE) {
        if s.admit(matrix_size(n, m, k)) {
            let set = BitMatrix::enumerate(n, m, k)?;
            s.add(check_crystal_axioms(&RowCrystal::new(n, m), &set));
            s.add(check_crystal_axioms(&ColumnCrystal::new(n, m), &set));
        }
    }
    for k in 2..=6 {
        if s.admit(1 << k) {
            s.add(check_crystal_axioms(&FundamentalCrystal::new(k), &Fundamental::all(k)));
        }
    }
    for (set, c) in tensor_instances()? {
        if s.admit(set.len()) {
            s.add(check_crystal_axioms(&c, &set));
        }
    }
    Ok(s.finish())
}

type TensorInstance = (Vec<Vec<Ssyt>>, TensorCrystal<TableauCrystal>);

/// Full tensor powers `B_(1)^{⊗f}` of gl_k for `k <= 3`, `f <= 4`, and
/// `B_(1) ⊗ B_(2)` of gl_3.
fn tensor_instances() -> Result<Vec<TensorInstance>> {
    let mut out = Vec::new();
    for k in 2..=3 {
        let c = TableauCrystal::new(k);
        let boxes = b_lambda(&Partition::new(vec![1])?, k)?;
        let mut power: Vec<Vec<Ssyt>> = vec![Vec::new()];
        for _ in 1..=4 {
            power = power
                .iter()
                .flat_map(|t| boxes.iter().map(move |b| [t.clone(), vec![b.clone()]].concat()))
                .collect();
            out.push((power.clone(), TensorCrystal::new(c)));
        }
    }
    let c = TableauCrystal::new(3);
    let left = b_lambda(&Partition::new(vec![1])?, 3)?;
    let right = b_lambda(&Partition::new(vec![2])?, 3)?;
    let set = left
        .iter()
        .flat_map(|a| right.iter().map(move |b| vec![a.clone(), b.clone()]))
        .collect();
    out.push((set, TensorCrystal::new(c)));
    Ok(out)
}

/// Defining relations, involutivity and path independence of every partial
/// Schützenberger involution, on every model instance with at most
/// [`XI_LIMIT`] elements.
pub fn xi(config: &Config) -> Result<Report> {
    let range = json!({ "boxes": MAX_BOXES, "rank": MAX_RANK, "nm": MATRIX_RANGE, "size": XI_LIMIT });
    let mut s = Sweep::new("Schützenberger involutions", range, config);
    let admit = |s: &mut Sweep, size: usize| size <= XI_LIMIT && s.admit(size);
    for (l, k) in tableau_instances(MAX_BOXES, MAX_RANK) {
        let set = b_lambda(&l, k)?;
        if admit(&mut s, set.len()) {
            s.add(verify_xi_properties(&TableauCrystal::new(k), &set, &Interval::all(k)));
        }
    }
    for (n, m, k) in matrix_instances(MATRIX_RANGE) {
        if admit(&mut s, matrix_size(n, m, k)) {
            let set = BitMatrix::enumerate(n, m, k)?;
            s.add(verify_xi_properties(&RowCrystal::new(n, m), &set, &Interval::all(m)));
            s.add(verify_xi_properties(&ColumnCrystal::new(n, m), &set, &Interval::all(n)));
        }
    }
    for k in 2..=6 {
        if admit(&mut s, 1 << k) {
            let c = FundamentalCrystal::new(k);
            s.add(verify_xi_properties(&c, &Fundamental::all(k), &Interval::all(k)));
        }
    }
    for (set, c) in tensor_instances()? {
        if admit(&mut s, set.len()) {
            s.add(verify_xi_properties(&c, &set, &Interval::all(c.rank())));
        }
    }
    Ok(s.finish())
}

fn relation_suite<F, G>(title: &str, config: &Config, on_tableaux: F, on_matrices: G) -> Result<Report>
where
    F: Fn(&TableauCrystal, &[Ssyt]) -> Report,
    G: Fn(&dyn Fn() -> (RowCrystal, ColumnCrystal), &[BitMatrix]) -> Vec<Report>,
{
    let range = json!({ "boxes": MAX_BOXES, "rank": MAX_RANK, "nm": SMALL_MATRIX_RANGE });
    let mut s = Sweep::new(title, range, config);
    for (l, k) in tableau_instances(MAX_BOXES, MAX_RANK) {
        let set = b_lambda(&l, k)?;
        if s.admit(set.len()) {
            s.add(on_tableaux(&TableauCrystal::new(k), &set));
        }
    }
    for (n, m, k) in matrix_instances(SMALL_MATRIX_RANGE) {
        if s.admit(matrix_size(n, m, k)) {
            let set = BitMatrix::enumerate(n, m, k)?;
            for r in on_matrices(&|| (RowCrystal::new(n, m), ColumnCrystal::new(n, m)), &set) {
                s.add(r);
            }
        }
    }
    Ok(s.finish())
}

/// Cactus relations of the inner action on tableaux and on both matrix
/// structures.
pub fn cactus(config: &Config) -> Result<Report> {
    relation_suite("cactus relations", config, verify_cactus_relations, |both, set| {
        let (rows, cols) = both();
        vec![verify_cactus_relations(&rows, set), verify_cactus_relations(&cols, set)]
    })
}

/// Braid relations and weight reflection of Kashiwara's reflections.
pub fn braid(config: &Config) -> Result<Report> {
    relation_suite("Weyl group action", config, verify_reduced_braid, |both, set| {
        let (rows, cols) = both();
        vec![verify_reduced_braid(&rows, set), verify_reduced_braid(&cols, set)]
    })
}

/// Berenstein-Kirillov moves and the map from the cactus group.
pub fn cgp(config: &Config) -> Result<Report> {
    let range = json!({ "boxes": MAX_BOXES, "rank": MAX_RANK });
    let mut s = Sweep::new("Berenstein-Kirillov moves and cactus generators", range, config);
    for (l, k) in tableau_instances(MAX_BOXES, MAX_RANK) {
        let size = ssyt_by_backtracking(&l, k)?.len();
        if s.admit(size) {
            s.add(verify_bk_moves(&l, k)?);
            s.add(check_cgp_homomorphism(&l, k)?);
        }
    }
    Ok(s.finish())
}

/// Characters of `B_lambda` against brute-force Schur polynomials, closure
/// against backtracking, and the counting identity of skew Howe duality.
pub fn oracles(config: &Config) -> Result<Report> {
    let range = json!({ "boxes": MAX_BOXES, "rank": MAX_RANK, "counting": [4, 4] });
    let mut s = Sweep::new("oracle equivalence", range, config);
    for k in 1..=MAX_RANK {
        for l in (0..=MAX_BOXES).flat_map(Partition::of_size).filter(|l| l.len() <= k) {
            let set = b_lambda(&l, k)?;
            if !s.admit(set.len()) {
                continue;
            }
            let mut r = Report::new("character equals Schur", json!({ "shape": l.to_string(), "rank": k }));
            r.tally("characters", 1);
            let found = character(&TableauCrystal::new(k), &set);
            let expected = schur_bruteforce(&l, k)?;
            if found != expected {
                r.fail(json!({ "found": format!("{found:?}"), "expected": format!("{expected:?}") }));
            }
            let mut direct = ssyt_by_backtracking(&l, k)?;
            let mut closed = set;
            direct.sort();
            closed.sort();
            if direct != closed {
                r.fail(json!({ "property": "closure of b_lambda equals all tableaux" }));
            }
            s.add(r);
        }
    }
    for n in 1..=4 {
        for m in 1..=4 {
            s.add(verify_counting_identity(n, m)?);
        }
    }
    Ok(s.finish())
}

/// Commuting row and column structures, closed formulas against the tensor
/// rule, row operators as column morphisms, and the negative control that
/// reading columns unreversed breaks commutation.
pub fn commutation(max: usize, config: &Config) -> Result<Report> {
    let mut s = Sweep::new("commuting structures", json!({ "nm": max }), config);
    let rule = if config.inject_fault { Rule::UnreversedColumns } else { Rule::Formula };
    for (n, m, k) in matrix_instances(max) {
        if !s.admit(matrix_size(n, m, k)) {
            continue;
        }
        let (rows, cols) = (RowCrystal::new(n, m), ColumnCrystal::with_rule(n, m, rule));
        s.add(verify_commutation_of(&rows, &cols, k, config.budget)?);
        s.add(verify_dual_implementations(n, m, k, config.budget)?);
        if n * m <= SMALL_MATRIX_RANGE {
            let set = BitMatrix::enumerate(n, m, k)?;
            for i in 1..m {
                s.add(is_morphism(|x| rows.raise(i, x), &cols, &set, &cols));
                s.add(is_morphism(|x| rows.lower(i, x), &cols, &set, &cols));
            }
            for j in 1..n {
                s.add(is_morphism(|x| cols.raise(j, x), &rows, &set, &rows));
                s.add(is_morphism(|x| cols.lower(j, x), &rows, &set, &rows));
            }
        }
    }
    if !config.inject_fault && s.admit(matrix_size(3, 3, 4)) {
        let bad = ColumnCrystal::with_rule(3, 3, Rule::UnreversedColumns);
        let control = verify_commutation_of(&RowCrystal::new(3, 3), &bad, 4, config.budget)?;
        let mut r = Report::new("unreversed column reading is detected", json!({ "n": 3, "m": 3, "N": 4 }));
        r.tally("negative controls", 1);
        if control.passed() {
            r.fail(json!({ "property": "negative control unexpectedly passed" }));
        }
        s.add(r);
    }
    Ok(s.finish())
}

/// The skew Howe duality map: well defined, bijective, with the right
/// multiplicities; `phi` and `psi` are morphisms.
pub fn duality(max: usize, config: &Config) -> Result<Report> {
    let mut s = Sweep::new("skew Howe duality", json!({ "nm": max }), config);
    for (n, m, k) in matrix_instances(max) {
        if s.admit(matrix_size(n, m, k)) {
            s.add(verify_duality(n, m, k, config.budget)?);
            if n * m <= SMALL_MATRIX_RANGE {
                s.add(verify_tableau_maps(n, m, k, config.budget)?);
            }
        }
    }
    Ok(s.finish())
}

/// Outer action of `C_n` on rows equals the inner action, for all `nm <= max`.
pub fn agree(max: usize, config: &Config) -> Result<Report> {
    let mut s = Sweep::new("outer action equals inner action", json!({ "nm": max }), config);
    for (n, m, k) in matrix_instances(max) {
        if n >= 2 && s.admit(matrix_size(n, m, k)) {
            s.add(verify_agreement(n, m, k, config.budget)?);
        }
    }
    Ok(s.finish())
}

/// The rotation identities and `s°_{m+1-q,m+1-p} = sⁱ_{p,q}` for all `nm <= max`.
pub fn corollary(max: usize, config: &Config) -> Result<Report> {
    let mut s = Sweep::new("rotated outer action equals inner action", json!({ "nm": max }), config);
    for (n, m, k) in matrix_instances(max) {
        if m >= 2 && s.admit(matrix_size(n, m, k)) {
            s.add(verify_corollary(n, m, k, config.budget)?);
        }
    }
    Ok(s.finish())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(matrix_dimensions(4), vec![(1, 1), (1, 2), (1, 3), (1, 4), (2, 1), (2, 2), (3, 1), (4, 1)]);
        let t = tableau_instances(2, 2);
        assert_eq!(t.len(), 3);
        assert!(Suite::ALL.iter().all(|s| s.name().parse::<Suite>().ok() == Some(*s)));
    }

    #[test]
    fn small_suites_pass() {
        let config = Config::default();
        for r in [goldens_suite().unwrap(), agree(6, &config).unwrap(), corollary(6, &config).unwrap(), duality(6, &config).unwrap()] {
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn injected_fault_is_caught() {
        let config = Config { budget: DEFAULT_BUDGET, inject_fault: true };
        let r = commutation(4, &config).unwrap();
        assert!(!r.passed());
        assert!(r.witness.is_some());
        assert!(commutation(4, &Config::default()).unwrap().passed());
    }

    #[test]
    fn zero_budget_skips_instances() {
        let config = Config { budget: 0, inject_fault: false };
        let r = agree(4, &config).unwrap();
        assert!(r.passed());
        assert!(!r.checked.contains_key("instances"));
        assert!(r.checked["skipped instances"] > 0);
    }
}
