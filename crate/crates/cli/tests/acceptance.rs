//! Acceptance criteria, one PASS/FAIL line each. All tolerances are zero:
//! every comparison below is an exact integer (or ∞) equality or inequality.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::Instant;

use qtbounds::constabounds::{
    consecutive_sets, ht_sets, roos_sets, shift_independent, IndexTables, Witness, ZeroSet,
};
use qtbounds::context::BoundConfig;
use qtbounds::linalg::{ExtNat, Strategy, DEFAULT_BUDGET};
use qtbounds::par::{self, Execution};
use qtbounds_cli::audit::{audit, PROPERTIES};
use qtbounds_cli::golden::{corpus, run_golden, Quantity};
use qtbounds_cli::random::{code_seed, random_qt, Tuple};
use qtbounds_cli::sweep::{ratios, run_sweep, summarize, SweepConfig};
use qtbounds_cli::Evaluator;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SEED: u64 = 20_240_611;
const PROPERTY_CODES: usize = 5000;
const DISTANCE_CODES: usize = 1000;

struct Outcome {
    pass: bool,
    detail: String,
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn is_subset_check(q: &Quantity) -> bool {
    matches!(
        q,
        Quantity::SubsetDp(_) | Quantity::SubsetEigencode(_) | Quantity::SubsetValue(_)
    )
}

/// Criterion 1 takes every golden quantity except the fixed-subset values of
/// the first code, which make up criterion 2.
fn golden(subsets: bool) -> Outcome {
    let config = BoundConfig::default();
    let codes = corpus();
    let mut total = 0;
    let mut failures = Vec::new();
    for (i, code) in codes.iter().enumerate() {
        let report = run_golden(code, &config);
        for c in &report.checks {
            if (i == 0 && is_subset_check(&c.quantity)) != subsets {
                continue;
            }
            total += 1;
            if !c.passed() {
                failures.push(format!(
                    "{}: {} expected {} got {:?}",
                    report.name, c.quantity, c.expected, c.actual
                ));
            }
        }
    }
    Outcome {
        pass: failures.is_empty() && total > 0,
        detail: if failures.is_empty() {
            format!("{total} values exact")
        } else {
            failures.join("; ")
        },
    }
}

/// `(q, lambda, valid m <= 11)`.
fn property_grid() -> Vec<(u32, u32, Vec<u32>)> {
    vec![
        (2, 1, vec![3, 5, 7, 9, 11]),
        (3, 1, vec![2, 4, 5, 7, 8, 10, 11]),
        (3, 2, vec![2, 4, 5, 7, 8, 10, 11]),
    ]
}

fn properties() -> Outcome {
    let ev = Evaluator::new(
        BoundConfig {
            exec: Execution::Sequential,
            ..BoundConfig::default()
        },
        vec![],
    );
    let grid = property_grid();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let jobs: Vec<(Tuple, u64)> = (0..PROPERTY_CODES as u64)
        .map(|i| {
            let (q, lambda, ms) = &grid[rng.gen_range(0..grid.len())];
            let m = ms[rng.gen_range(0..ms.len())];
            let ell = rng.gen_range(1..=6);
            let rows = rng.gen_range(1..=ell);
            (
                Tuple {
                    q: *q,
                    m,
                    lambda: *lambda,
                    ell,
                    rows,
                },
                i,
            )
        })
        .collect();
    let results = par::map(Execution::Parallel, &jobs, |&(t, i)| {
        let seed = code_seed(SEED, t, i);
        let ctx = ev.context(t.q, t.m, t.lambda)?;
        let code = random_qt(ctx.tower(), t.ell, t.rows, seed);
        audit(&code, &ctx, seed)
    });
    let mut checked: BTreeMap<char, usize> = PROPERTIES.chars().map(|c| (c, 0)).collect();
    let mut violations = Vec::new();
    let mut errors = Vec::new();
    let mut unknown_d = 0;
    for (r, (t, i)) in results.into_iter().zip(&jobs) {
        match r {
            Ok(rep) => {
                for c in &rep.checked {
                    *checked.entry(*c).or_default() += 1;
                }
                if rep.distance.is_none() {
                    unknown_d += 1;
                }
                violations.extend(
                    rep.violations
                        .into_iter()
                        .map(|v| format!("{t:?}#{i} ({}): {}", v.property, v.detail)),
                );
            }
            Err(e) => errors.push(format!("{t:?}#{i}: {e}")),
        }
    }
    let counts: Vec<String> = checked.iter().map(|(c, n)| format!("{c}:{n}")).collect();
    let all_checked = checked.values().all(|&n| n > 0);
    let mut detail = format!(
        "{PROPERTY_CODES} codes, {} violations, {} errors, d over budget {unknown_d}; checks {}",
        violations.len(),
        errors.len(),
        counts.join(" ")
    );
    for v in violations.iter().chain(&errors).take(5) {
        detail.push_str(&format!("; {v}"));
    }
    Outcome {
        pass: violations.is_empty()
            && errors.is_empty()
            && all_checked
            && checked[&'a'] >= PROPERTY_CODES * 95 / 100,
        detail,
    }
}

fn oracles() -> Outcome {
    let mut problems = Vec::new();

    // Exact distance: full enumeration against support-rank and information sets.
    let ev = Evaluator::new(
        BoundConfig {
            exec: Execution::Sequential,
            ..BoundConfig::default()
        },
        vec![],
    );
    let shapes: Vec<(u32, u32)> = vec![
        (2, 3),
        (2, 5),
        (2, 7),
        (3, 4),
        (3, 5),
        (4, 3),
        (4, 5),
        (5, 4),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 0xd157);
    let jobs: Vec<(Tuple, u64)> = (0..DISTANCE_CODES as u64)
        .map(|i| {
            let (q, m) = shapes[rng.gen_range(0..shapes.len())];
            let ell = rng.gen_range(1..=if q <= 3 { 3 } else { 2 });
            let rows = rng.gen_range(1..=ell);
            (
                Tuple {
                    q,
                    m,
                    lambda: 1,
                    ell,
                    rows,
                },
                i,
            )
        })
        .collect();
    let agree = par::map(
        Execution::Parallel,
        &jobs,
        |&(t, i)| -> qtbounds::Result<bool> {
            let ctx = ev.context(t.q, t.m, t.lambda)?;
            let code = random_qt(ctx.tower(), t.ell, t.rows, code_seed(SEED, t, i)).scalar_code();
            let e = code.min_distance(Strategy::Enumerate, DEFAULT_BUDGET)?;
            let s = code.min_distance(Strategy::SupportRank, DEFAULT_BUDGET)?;
            let is = code.min_distance(Strategy::InformationSet, DEFAULT_BUDGET)?;
            Ok(e == s && e == is)
        },
    );
    let disagreements = agree.iter().filter(|r| matches!(r, Ok(false))).count();
    let errors = agree.iter().filter(|r| r.is_err()).count();
    if disagreements + errors > 0 {
        problems.push(format!(
            "{disagreements} distance disagreements, {errors} errors"
        ));
    }

    // Consecutive and HT families as Roos specialisations; shift chains.
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 0x2005);
    let (mut specialised, mut chains) = (0, 0);
    for m in 2..=12usize {
        let tables = IndexTables::new(m);
        let mut targets = vec![ZeroSet::full(m)];
        targets.extend((0..40).map(|_| ZeroSet(rng.gen_range(1..1u64 << m))));
        for target in targets {
            let b4 = roos_sets(&tables, target);
            let roos_value = |p: ZeroSet| {
                b4.iter()
                    .find(|b| b.subset == p)
                    .map_or(ExtNat::Finite(0), |b| b.value)
            };
            for b in consecutive_sets(&tables, target) {
                specialised += 1;
                if roos_value(b.subset) < b.value {
                    problems.push(format!(
                        "m={m}: consecutive {:?} not reproduced by Roos",
                        b.subset.indices()
                    ));
                }
            }
            for b in ht_sets(&tables, target) {
                if let Witness::HartmannTzeng { n2, .. } = b.witness {
                    if gcd(n2, m) != 1 {
                        continue;
                    }
                }
                specialised += 1;
                if roos_value(b.subset) < b.value {
                    problems.push(format!(
                        "m={m}: HT {:?} not reproduced by Roos",
                        b.subset.indices()
                    ));
                }
            }
        }
        for &(e, w) in tables.consecutive() {
            if e == ZeroSet::full(m) || m > 11 {
                continue;
            }
            chains += 1;
            let best = shift_independent(&tables, e).iter().map(|b| b.value).max();
            if best < Some(ExtNat::from(e.len() + 1)) {
                problems.push(format!(
                    "m={m}: shift misses |E|+1 on {:?} ({w:?})",
                    e.indices()
                ));
            }
        }
        if m <= 10 {
            for b in ht_sets(&tables, ZeroSet::full(m)) {
                let Witness::HartmannTzeng { delta, s, .. } = b.witness else {
                    continue;
                };
                chains += 1;
                let best = shift_independent(&tables, b.subset)
                    .iter()
                    .map(|x| x.value)
                    .max();
                if best < Some(ExtNat::from(delta + s)) {
                    problems.push(format!(
                        "m={m}: shift misses delta+s on {:?}",
                        b.subset.indices()
                    ));
                }
            }
        }
    }
    Outcome {
        pass: problems.is_empty(),
        detail: format!(
            "{DISTANCE_CODES} codes by 3 strategies, {specialised} family sets via Roos, {chains} shift chains; {} problems{}",
            problems.len(),
            problems.iter().take(3).map(|p| format!("; {p}")).collect::<String>()
        ),
    }
}

fn sweep_ordering() -> Outcome {
    let cfg = SweepConfig {
        q: 2,
        lambda: 1,
        ms: vec![3, 5, 7],
        ell_min: 2,
        ell_max: 6,
        count: 50,
        seed: SEED,
        exec: Execution::Parallel,
    };
    let ev = Evaluator::new(
        BoundConfig {
            exec: Execution::Sequential,
            ..BoundConfig::default()
        },
        BoundConfig::default().union,
    );
    let res = match run_sweep(&cfg, &ev) {
        Ok(r) => r,
        Err(e) => {
            return Outcome {
                pass: false,
                detail: e.to_string(),
            }
        }
    };
    let s = summarize(&res);
    let [l, sp, j] = s.best;
    let buckets = ratios(&res.rows, 10);
    let ordered = buckets.iter().filter(|b| b.ordered()).count();
    Outcome {
        pass: j > sp && sp > l && 2 * ordered > buckets.len(),
        detail: format!(
            "{} nontrivial codes ({} trivial); best J={j} S={sp} L={l}; ratio order J>=S>=L in {ordered}/{} rate buckets",
            s.nontrivial,
            s.trivial,
            buckets.len()
        ),
    }
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 5] = [
        ("1 golden examples", || golden(false)),
        ("2 fixed-subset spectral values", || golden(true)),
        ("3 property suites", properties),
        ("4 oracle cross-checks", oracles),
        ("5 reduced sweep ordering", sweep_ordering),
    ];
    let mut all = true;
    for (name, run) in criteria {
        let start = Instant::now();
        let o = run();
        all &= o.pass;
        println!(
            "{} criterion {name}: {} [{:.1}s]",
            if o.pass { "PASS" } else { "FAIL" },
            o.detail,
            start.elapsed().as_secs_f64()
        );
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
