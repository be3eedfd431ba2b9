//! Pass/fail reports produced by the verifiers.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// Outcome of one verifier on one instance. Only the first witness is kept.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub property: String,
    pub instance: Value,
    pub checked: BTreeMap<String, u64>,
    pub status: Status,
    pub witness: Option<Value>,
}

impl Report {
    pub fn new(property: impl Into<String>, instance: Value) -> Self {
        Report {
            property: property.into(),
            instance,
            checked: BTreeMap::new(),
            status: Status::Pass,
            witness: None,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn tally(&mut self, key: &str, n: u64) {
        *self.checked.entry(key.to_string()).or_insert(0) += n;
    }

    pub fn fail(&mut self, witness: Value) {
        if self.status == Status::Pass {
            self.status = Status::Fail;
            self.witness = Some(witness);
        }
    }

    /// Folds another report's counts and first failure into this one.
    pub fn absorb(&mut self, other: Report) {
        for (k, v) in other.checked {
            *self.checked.entry(k).or_insert(0) += v;
        }
        if let Some(w) = other.witness {
            self.fail(serde_json::json!({ "property": other.property, "instance": other.instance, "witness": w }));
        }
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("report serializes")
    }

    pub fn total_checks(&self) -> u64 {
        self.checked.values().sum()
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = match self.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
        };
        write!(f, "{status} {} {}", self.property, self.instance)?;
        let counts: Vec<String> = self.checked.iter().map(|(k, v)| format!("{k}={v}")).collect();
        write!(f, " [{}]", counts.join(" "))?;
        if let Some(w) = &self.witness {
            write!(f, " witness={w}")?;
        }
        Ok(())
    }
}

/// Per-item assertion counter.
#[derive(Default)]
pub struct Tally(BTreeMap<&'static str, u64>);

impl Tally {
    pub fn hit(&mut self, key: &'static str) {
        *self.0.entry(key).or_insert(0) += 1;
    }
}

/// Runs `check` over `items` in parallel, with one `init()` state per worker,
/// and folds the results into `report` in item order so the first witness is
/// deterministic.
pub fn sweep<T, S, I, F>(report: &mut Report, items: &[T], init: I, check: F)
where
    T: Sync,
    I: Fn() -> S + Sync + Send,
    F: Fn(&mut S, &T, &mut Tally) -> Result<(), Value> + Sync + Send,
{
    let outcomes: Vec<(Tally, Option<Value>)> = items
        .par_iter()
        .map_init(&init, |state, item| {
            let mut tally = Tally::default();
            let witness = check(state, item, &mut tally).err();
            (tally, witness)
        })
        .collect();
    report.tally("elements", items.len() as u64);
    for (tally, witness) in outcomes {
        for (k, v) in tally.0 {
            report.tally(k, v);
        }
        if let Some(w) = witness {
            report.fail(w);
        }
    }
}

/// Returns `Err(witness)` unless `cond` holds.
pub fn ensure(cond: bool, witness: impl FnOnce() -> Value) -> Result<(), Value> {
    if cond {
        Ok(())
    } else {
        Err(witness())
    }
}
