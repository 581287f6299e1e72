//! Randomized comparison of the three bounds over batches of random codes.

use std::collections::BTreeMap;
use std::io::Write;

use qtbounds::par::{self, Execution};
use serde::Serialize;

use crate::evaluate::{ComparisonRow, Evaluator, Outcome, Pattern};
use crate::random::{code_seed, random_qt, Tuple};

#[derive(Clone, Debug)]
pub struct SweepConfig {
    pub q: u32,
    pub lambda: u32,
    pub ms: Vec<u32>,
    pub ell_min: usize,
    pub ell_max: usize,
    /// Codes per tuple `(m, ℓ, r)`.
    pub count: u64,
    pub seed: u64,
    pub exec: Execution,
}

impl SweepConfig {
    /// Every `(m, ℓ, r)` with `1 <= r <= ℓ`, in order.
    pub fn tuples(&self) -> Vec<Tuple> {
        let mut out = Vec::new();
        for &m in &self.ms {
            for ell in self.ell_min..=self.ell_max {
                for rows in 1..=ell {
                    out.push(Tuple {
                        q: self.q,
                        m,
                        lambda: self.lambda,
                        ell,
                        rows,
                    });
                }
            }
        }
        out
    }
}

#[derive(Clone, Debug)]
pub struct SweepResult {
    pub rows: Vec<ComparisonRow>,
    pub trivial: u64,
    pub budget: u64,
}

pub fn run_sweep(cfg: &SweepConfig, ev: &Evaluator) -> anyhow::Result<SweepResult> {
    let tuples = cfg.tuples();
    for t in &tuples {
        ev.context(t.q, t.m, t.lambda)?;
    }
    let jobs: Vec<(Tuple, u64)> = tuples
        .iter()
        .flat_map(|&t| (0..cfg.count).map(move |i| (t, i)))
        .collect();
    let outcomes = par::map(cfg.exec, &jobs, |&(t, i)| {
        let seed = code_seed(cfg.seed, t, i);
        let ctx = ev.context(t.q, t.m, t.lambda)?;
        let code = random_qt(ctx.tower(), t.ell, t.rows, seed);
        ev.evaluate(&code, seed)
    });
    let mut res = SweepResult {
        rows: Vec::new(),
        trivial: 0,
        budget: 0,
    };
    for o in outcomes {
        match o? {
            Outcome::Row(r) => res.rows.push(r),
            Outcome::Trivial => res.trivial += 1,
            Outcome::Budget => res.budget += 1,
        }
    }
    Ok(res)
}

pub fn write_csv<W: Write>(rows: &[ComparisonRow], out: W) -> csv::Result<()> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(out);
    w.write_record(ComparisonRow::HEADER)?;
    for r in rows {
        w.write_record(r.record())?;
    }
    w.flush()?;
    Ok(())
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub nontrivial: u64,
    pub trivial: u64,
    /// Codes skipped because a bound exceeded the budget.
    pub budget_skipped: u64,
    /// Rows whose exact distance exceeded the budget.
    pub distance_unknown: u64,
    /// Counts in the order L, Spec, J.
    pub sharp: [u64; 3],
    pub best: [u64; 3],
    pub patterns: BTreeMap<String, u64>,
}

pub fn summarize(res: &SweepResult) -> Summary {
    let mut s = Summary {
        nontrivial: res.rows.len() as u64,
        trivial: res.trivial,
        budget_skipped: res.budget,
        patterns: Pattern::ALL
            .iter()
            .map(|p| (p.name().to_string(), 0))
            .collect(),
        ..Summary::default()
    };
    for r in &res.rows {
        if r.d.is_none() {
            s.distance_unknown += 1;
        }
        for i in 0..3 {
            s.sharp[i] += r.sharp[i] as u64;
            s.best[i] += r.best[i] as u64;
        }
        *s.patterns.entry(r.pattern.name().to_string()).or_default() += 1;
    }
    s
}

/// Mean `d_X / d` over the rows whose rate falls in one bucket.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RateBucket {
    pub lo: f64,
    pub hi: f64,
    pub count: u64,
    pub mean_l: f64,
    pub mean_s: f64,
    pub mean_j: f64,
}

impl RateBucket {
    /// `mean d_J/d >= mean d_Spec/d >= mean d_L/d`.
    pub fn ordered(&self) -> bool {
        self.mean_j >= self.mean_s && self.mean_s >= self.mean_l
    }
}

/// Buckets of width `1/buckets` over the rate, empty buckets dropped.
pub fn ratios(rows: &[ComparisonRow], buckets: usize) -> Vec<RateBucket> {
    let mut acc = vec![(0u64, [0f64; 3]); buckets];
    for r in rows {
        let Some(d) = r.d.and_then(|d| d.finite()) else {
            continue;
        };
        let b = ((r.rate() * buckets as f64) as usize).min(buckets - 1);
        acc[b].0 += 1;
        for (sum, bound) in acc[b].1.iter_mut().zip(r.bounds()) {
            *sum += bound.finite().expect("bounds of a nonzero code are finite") as f64 / d as f64;
        }
    }
    acc.iter()
        .enumerate()
        .filter(|(_, (n, _))| *n > 0)
        .map(|(i, (n, sums))| RateBucket {
            lo: i as f64 / buckets as f64,
            hi: (i + 1) as f64 / buckets as f64,
            count: *n,
            mean_l: sums[0] / *n as f64,
            mean_s: sums[1] / *n as f64,
            mean_j: sums[2] / *n as f64,
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> SweepConfig {
        SweepConfig {
            q: 2,
            lambda: 1,
            ms: vec![3, 5],
            ell_min: 2,
            ell_max: 3,
            count: 4,
            seed: 11,
            exec: Execution::Parallel,
        }
    }

    #[test]
    fn tuple_grid() {
        let t = small().tuples();
        assert_eq!(t.len(), 2 * (2 + 3));
        assert_eq!((t[0].m, t[0].ell, t[0].rows), (3, 2, 1));
        assert_eq!((t[9].m, t[9].ell, t[9].rows), (5, 3, 3));
    }

    #[test]
    fn summary_invariants() {
        let ev = Evaluator::default();
        let res = run_sweep(&small(), &ev).unwrap();
        let s = summarize(&res);
        assert_eq!(s.nontrivial + s.trivial + s.budget_skipped, 40);
        for i in 0..3 {
            assert!(s.best[i] >= s.sharp[i]);
        }
        assert_eq!(s.patterns.values().sum::<u64>(), s.nontrivial);
        assert!(s.patterns.contains_key("SLJ") && s.patterns.contains_key("LSJ"));
    }

    #[test]
    fn sequential_and_parallel_agree() {
        let ev = Evaluator::default();
        let a = run_sweep(&small(), &ev).unwrap();
        let b = run_sweep(
            &SweepConfig {
                exec: Execution::Sequential,
                ..small()
            },
            &Evaluator::default(),
        )
        .unwrap();
        let (mut x, mut y) = (Vec::new(), Vec::new());
        write_csv(&a.rows, &mut x).unwrap();
        write_csv(&b.rows, &mut y).unwrap();
        assert_eq!(x, y);
        assert!(String::from_utf8(x)
            .unwrap()
            .starts_with("seed,q,m,ell,r,lambda,dim,d,d_L,d_Spec,d_J,"));
    }

    #[test]
    fn ratio_buckets() {
        let res = run_sweep(&small(), &Evaluator::default()).unwrap();
        let b = ratios(&res.rows, 10);
        assert_eq!(
            b.iter().map(|x| x.count).sum::<u64>(),
            res.rows.iter().filter(|r| r.d.is_some()).count() as u64
        );
        for x in &b {
            for v in [x.mean_l, x.mean_s, x.mean_j] {
                assert!(v > 0.0 && v <= 1.0);
            }
        }
    }
}
