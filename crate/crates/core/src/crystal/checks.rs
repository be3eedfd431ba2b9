//! Model-independent verifiers: crystal axioms, characters and morphisms.

use std::collections::HashSet;

use serde_json::json;

use super::{Crystal, Schutzenberger, SearchOrder};
use crate::base::{Character, Interval};
use crate::report::{ensure, sweep, Report};

/// Checks, for every element of `set` and every node `i`: `f_i(b) = c` iff
/// `e_i(c) = b`, the weight shift by `alpha_i`, closure of `set`, and
/// `phi_i(b) - eps_i(b) = <wt(b), alpha_i^vee>`.
pub fn check_crystal_axioms<C>(c: &C, set: &[C::Elem]) -> Report
where
    C: Crystal + Sync,
    C::Elem: Send + Sync,
{
    let mut report =
        Report::new("crystal axioms", json!({ "rank": c.rank(), "elements": set.len() }));
    let members: HashSet<&C::Elem> = set.iter().collect();
    sweep(&mut report, set, || (), |_, b, tally| {
        let wt = c.weight(b);
        for i in 1..c.rank() {
            let witness = |what: &str| json!({ "element": c.label(b), "i": i, "axiom": what });
            if let Some(up) = c.raise(i, b) {
                ensure(c.lower(i, &up).as_ref() == Some(b), || witness("f_i e_i = id"))?;
                ensure(c.weight(&up) == wt.plus_root(i), || witness("wt(e_i b) = wt(b) + alpha_i"))?;
                ensure(members.contains(&up), || witness("set closed under e_i"))?;
            }
            if let Some(down) = c.lower(i, b) {
                ensure(c.raise(i, &down).as_ref() == Some(b), || witness("e_i f_i = id"))?;
                ensure(c.weight(b) == c.weight(&down).plus_root(i), || {
                    witness("wt(f_i b) = wt(b) - alpha_i")
                })?;
                ensure(members.contains(&down), || witness("set closed under f_i"))?;
            }
            let (eps, phi) = (c.epsilon(i, b) as i64, c.phi(i, b) as i64);
            ensure(phi - eps == wt.coroot(i), || witness("phi_i - eps_i = <wt, alpha_i^vee>"))?;
            tally.hit("element-node pairs");
        }
        Ok(())
    });
    report
}

/// Multiset of weights over `set`.
pub fn character<C: Crystal>(c: &C, set: &[C::Elem]) -> Character {
    let mut out = Character::new();
    for b in set {
        *out.entry(c.weight(b)).or_insert(0) += 1;
    }
    out
}

/// Checks that `f` (with `None` standing for the null element) is a crystal
/// morphism from `c1` restricted to `set` into `c2`: wherever `f(b)` is
/// non-null it preserves `wt`, `eps_i` and `phi_i`, and it intertwines every
/// non-null `e_i(b)` and `f_i(b)`.
pub fn is_morphism<C1, C2, F>(f: F, c1: &C1, set: &[C1::Elem], c2: &C2) -> Report
where
    C1: Crystal + Sync,
    C2: Crystal + Sync,
    C1::Elem: Send + Sync,
    F: Fn(&C1::Elem) -> Option<C2::Elem> + Sync + Send,
{
    let mut report = Report::new(
        "crystal morphism",
        json!({ "rank": c1.rank(), "target rank": c2.rank(), "elements": set.len() }),
    );
    if c1.rank() != c2.rank() {
        report.fail(json!({ "reason": "rank mismatch" }));
        return report;
    }
    sweep(&mut report, set, || (), |_, b, tally| {
        let Some(image) = f(b) else {
            tally.hit("null images");
            return Ok(());
        };
        let witness = |what: &str, i: usize| {
            json!({ "element": c1.label(b), "image": c2.label(&image), "i": i, "property": what })
        };
        ensure(c2.weight(&image) == c1.weight(b), || witness("weight", 0))?;
        for i in 1..c1.rank() {
            ensure(c2.epsilon(i, &image) == c1.epsilon(i, b), || witness("epsilon", i))?;
            ensure(c2.phi(i, &image) == c1.phi(i, b), || witness("phi", i))?;
            if let Some(down) = c1.lower(i, b) {
                ensure(f(&down) == c2.lower(i, &image), || witness("F f_i = f_i F", i))?;
            }
            if let Some(up) = c1.raise(i, b) {
                ensure(f(&up) == c2.raise(i, &image), || witness("F e_i = e_i F", i))?;
            }
            tally.hit("element-node pairs");
        }
        Ok(())
    });
    report
}

/// For every element and every interval `J`: `xi_J` is an involution, does
/// not depend on the order in which raising operators are searched, maps
/// `wt` to `w_0^J wt`, and satisfies `e_i xi(b) = xi(f_{theta(i)} b)` and
/// `f_i xi(b) = xi(e_{theta(i)} b)` for `i` in `J` (null mapping to null).
pub fn verify_xi_properties<C>(c: &C, set: &[C::Elem], intervals: &[Interval]) -> Report
where
    C: Crystal + Sync,
    C::Elem: Send + Sync,
{
    let mut report = Report::new(
        "Schützenberger involution",
        json!({ "rank": c.rank(), "elements": set.len(), "intervals": intervals.len() }),
    );
    let init = || {
        (
            Schutzenberger::with_order(c, SearchOrder::SmallestFirst),
            Schutzenberger::with_order(c, SearchOrder::LargestFirst),
        )
    };
    sweep(&mut report, set, init, |(xi, other), b, tally| {
        for &j in intervals {
            let w = |what: String| json!({ "element": c.label(b), "interval": j.to_string(), "property": what });
            let image = xi.apply(b, j).map_err(|e| w(e.to_string()))?;
            let back = xi.apply(&image, j).map_err(|e| w(e.to_string()))?;
            ensure(&back == b, || w("xi^2 = id".into()))?;
            let alt = other.apply(b, j).map_err(|e| w(e.to_string()))?;
            ensure(alt == image, || w(format!("path independence: {} vs {}", c.label(&image), c.label(&alt))))?;
            ensure(c.weight(&image) == j.weyl_longest().act(&c.weight(b)), || w("wt(xi b) = w_0 wt(b)".into()))?;
            for i in j.nodes() {
                let t = j.theta(i).expect("node of the interval");
                let twisted = |x: Option<C::Elem>| -> Result<Option<C::Elem>, serde_json::Value> {
                    x.map(|x| xi.apply(&x, j)).transpose().map_err(|e| w(e.to_string()))
                };
                ensure(c.raise(i, &image) == twisted(c.lower(t, b))?, || {
                    w(format!("e_{i} xi = xi f_{t}"))
                })?;
                ensure(c.lower(i, &image) == twisted(c.raise(t, b))?, || {
                    w(format!("f_{i} xi = xi e_{t}"))
                })?;
            }
            tally.hit("element-interval pairs");
        }
        Ok(())
    });
    report
}
