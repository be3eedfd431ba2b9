//! Acceptance suite: one line per criterion, exit status 1 if any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use glk_crystals::goldens;
use glk_crystals::suites::{self, Config};
use glk_crystals::{Report, Result};

struct Criterion {
    id: u8,
    title: &'static str,
    limit: Option<Duration>,
    run: fn(&Config) -> Result<Report>,
}

const CRITERIA: [Criterion; 12] = [
    Criterion {
        id: 1,
        title: "Gelfand-Tsetlin example: pattern, q_2 chain, partial Schützenberger",
        limit: None,
        run: |_| goldens::gt_example(),
    },
    Criterion {
        id: 2,
        title: "skew Howe example: P, Q, T_P, T_Q",
        limit: None,
        run: |_| goldens::skew_howe_example(),
    },
    Criterion {
        id: 3,
        title: "morphism example: Ce_2 and e_2 commuting square",
        limit: None,
        run: |_| goldens::morphism_square(),
    },
    Criterion {
        id: 4,
        title: "outer and inner cactus examples",
        limit: None,
        run: |_| goldens::cactus_examples(),
    },
    Criterion {
        id: 5,
        title: "outer = inner for every s_{p,q} in C_n, nm <= 12, all N",
        limit: Some(Duration::from_secs(60)),
        run: |c| suites::agree(suites::MATRIX_RANGE, c),
    },
    Criterion {
        id: 6,
        title: "rotation identities and s°_{m+1-q,m+1-p} = sⁱ_{p,q}, nm <= 12",
        limit: None,
        run: |c| suites::corollary(suites::MATRIX_RANGE, c),
    },
    Criterion {
        id: 7,
        title: "commuting structures and tensor rule = closed formulas, nm <= 12",
        limit: None,
        run: |c| suites::commutation(suites::MATRIX_RANGE, c),
    },
    Criterion {
        id: 8,
        title: "cactus relations on B_lambda (k <= 4, |lambda| <= 6) and matrices (nm <= 9)",
        limit: None,
        run: suites::cactus,
    },
    Criterion {
        id: 9,
        title: "braid relations and weight reflection of Kashiwara reflections",
        limit: None,
        run: suites::braid,
    },
    Criterion {
        id: 10,
        title: "Berenstein-Kirillov moves and s_{i,j} -> q_{j-1} q_{j-i} q_{j-1}",
        limit: None,
        run: suites::cgp,
    },
    Criterion {
        id: 11,
        title: "characters = Schur oracle; counting identity for n, m <= 4",
        limit: None,
        run: suites::oracles,
    },
    Criterion {
        id: 12,
        title: "Schützenberger involutions: relations, xi^2 = id, path independence",
        limit: None,
        run: suites::xi,
    },
];

fn main() -> ExitCode {
    let config = Config::default();
    let mut failures = 0;
    for c in &CRITERIA {
        let start = Instant::now();
        let outcome = (c.run)(&config);
        let elapsed = start.elapsed();
        let (ok, detail) = match &outcome {
            Ok(r) => {
                let slow = c.limit.is_some_and(|l| elapsed > l);
                let skipped = r.checked.contains_key("skipped instances");
                let mut detail = format!("{} checks", r.total_checks());
                if let Some(w) = &r.witness {
                    detail.push_str(&format!(", witness {w}"));
                }
                if slow {
                    detail.push_str(", over the time limit");
                }
                if skipped {
                    detail.push_str(", instances skipped");
                }
                (r.passed() && !slow && !skipped, detail)
            }
            Err(e) => (false, format!("error: {e}")),
        };
        if !ok {
            failures += 1;
        }
        println!(
            "criterion {:>2} {} {} ({detail}, {:.2?})",
            c.id,
            if ok { "PASS" } else { "FAIL" },
            c.title,
            elapsed
        );
    }
    println!("{} of {} criteria passed", CRITERIA.len() - failures, CRITERIA.len());
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
