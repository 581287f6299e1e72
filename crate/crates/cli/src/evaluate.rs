//! One code through the three bounds and the exact distance.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use qtbounds::concat::jensen_bound;
use qtbounds::constabounds::Family;
use qtbounds::context::{BoundConfig, BoundContext};
use qtbounds::galois::build_tower;
use qtbounds::lally::{lally_bound_in, LallyBasis};
use qtbounds::linalg::ExtNat;
use qtbounds::qtcode::QtCode;
use qtbounds::spectral::spectral_bound;
use qtbounds::Error;

/// Strict ranking of the three bounds, named by decreasing value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Pattern {
    Jsl,
    Jls,
    Sjl,
    Slj,
    Ljs,
    Lsj,
    None,
}

impl Pattern {
    pub const ALL: [Pattern; 7] = [
        Pattern::Jsl,
        Pattern::Jls,
        Pattern::Sjl,
        Pattern::Slj,
        Pattern::Ljs,
        Pattern::Lsj,
        Pattern::None,
    ];

    pub fn of(d_l: ExtNat, d_s: ExtNat, d_j: ExtNat) -> Pattern {
        let gt = |a: ExtNat, b: ExtNat, c: ExtNat| a > b && b > c;
        if gt(d_j, d_s, d_l) {
            Pattern::Jsl
        } else if gt(d_j, d_l, d_s) {
            Pattern::Jls
        } else if gt(d_s, d_j, d_l) {
            Pattern::Sjl
        } else if gt(d_s, d_l, d_j) {
            Pattern::Slj
        } else if gt(d_l, d_j, d_s) {
            Pattern::Ljs
        } else if gt(d_l, d_s, d_j) {
            Pattern::Lsj
        } else {
            Pattern::None
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Pattern::Jsl => "JSL",
            Pattern::Jls => "JLS",
            Pattern::Sjl => "SJL",
            Pattern::Slj => "SLJ",
            Pattern::Ljs => "LJS",
            Pattern::Lsj => "LSJ",
            Pattern::None => "none",
        }
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Flags per bound, in the order L, S, J.
pub type Flags = [bool; 3];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComparisonRow {
    pub seed: u64,
    pub q: u32,
    pub m: usize,
    pub ell: usize,
    pub r: usize,
    pub lambda: u32,
    pub dim: usize,
    /// `None` when the exact distance ran out of budget.
    pub d: Option<ExtNat>,
    pub d_l: ExtNat,
    pub d_spec: ExtNat,
    pub d_j: ExtNat,
    pub sharp: Flags,
    pub best: Flags,
    pub pattern: Pattern,
}

impl ComparisonRow {
    pub const HEADER: [&'static str; 18] = [
        "seed", "q", "m", "ell", "r", "lambda", "dim", "d", "d_L", "d_Spec", "d_J", "sharp_L",
        "sharp_S", "sharp_J", "best_L", "best_S", "best_J", "pattern",
    ];

    pub fn bounds(&self) -> [ExtNat; 3] {
        [self.d_l, self.d_spec, self.d_j]
    }

    pub fn rate(&self) -> f64 {
        self.dim as f64 / (self.m * self.ell) as f64
    }

    pub fn record(&self) -> Vec<String> {
        let flag = |b: bool| if b { "1" } else { "0" }.to_string();
        let mut out = vec![
            self.seed.to_string(),
            self.q.to_string(),
            self.m.to_string(),
            self.ell.to_string(),
            self.r.to_string(),
            self.lambda.to_string(),
            self.dim.to_string(),
            self.d.map_or("NA".to_string(), |d| d.to_string()),
            self.d_l.to_string(),
            self.d_spec.to_string(),
            self.d_j.to_string(),
        ];
        out.extend(self.sharp.iter().map(|&b| flag(b)));
        out.extend(self.best.iter().map(|&b| flag(b)));
        out.push(self.pattern.to_string());
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Row(ComparisonRow),
    /// Zero code or the full space.
    Trivial,
    /// A bound computation ran out of budget.
    Budget,
}

/// Evaluation settings plus one shared [`BoundContext`] per `(q, m, lambda)`.
pub struct Evaluator {
    config: BoundConfig,
    families: Vec<Family>,
    lally_basis: LallyBasis,
    contexts: Mutex<HashMap<(u32, usize, u32), Arc<BoundContext>>>,
}

impl Evaluator {
    pub fn new(config: BoundConfig, families: Vec<Family>) -> Evaluator {
        Evaluator {
            config,
            families,
            lally_basis: LallyBasis::default(),
            contexts: Mutex::new(HashMap::new()),
        }
    }

    pub fn with_lally_basis(mut self, basis: LallyBasis) -> Evaluator {
        self.lally_basis = basis;
        self
    }

    pub fn config(&self) -> &BoundConfig {
        &self.config
    }

    pub fn families(&self) -> &[Family] {
        &self.families
    }

    /// Context over the default tower for `(q, m, lambda)`; codes evaluated
    /// with it must be built over `context.tower()`.
    pub fn context(&self, q: u32, m: u32, lambda: u32) -> qtbounds::Result<Arc<BoundContext>> {
        let key = (q, m as usize, lambda);
        if let Some(ctx) = self.contexts.lock().expect("context lock").get(&key) {
            return Ok(ctx.clone());
        }
        let ctx = Arc::new(BoundContext::new(
            Arc::new(build_tower(q, m, lambda)?),
            self.config.clone(),
        ));
        Ok(self
            .contexts
            .lock()
            .expect("context lock")
            .entry(key)
            .or_insert(ctx)
            .clone())
    }

    /// Context for a code over an arbitrary tower, shared only when it is
    /// the same tower as the pooled one.
    pub fn context_for(&self, code: &QtCode) -> qtbounds::Result<Arc<BoundContext>> {
        let t = code.tower();
        let pooled = self.context(t.q(), t.m() as u32, t.lambda().0)?;
        if Arc::ptr_eq(pooled.tower(), t) {
            Ok(pooled)
        } else {
            Ok(Arc::new(BoundContext::new(t.clone(), self.config.clone())))
        }
    }

    pub fn evaluate(&self, code: &QtCode, seed: u64) -> qtbounds::Result<Outcome> {
        if code.is_trivial() {
            return Ok(Outcome::Trivial);
        }
        let ctx = self.context_for(code)?;
        let budget = self.config.budget;
        let strategy = self.config.strategy;
        let bounds = (|| -> qtbounds::Result<[ExtNat; 3]> {
            let d_l = lally_bound_in(code, self.lally_basis, strategy, budget)?.value;
            let d_s = spectral_bound(code, &ctx, &self.families)?.value;
            let d_j = jensen_bound(code, &ctx)?.value;
            Ok([d_l, d_s, d_j])
        })();
        let bounds = match bounds {
            Ok(b) => b,
            Err(Error::BudgetExceeded(_)) => return Ok(Outcome::Budget),
            Err(e) => return Err(e),
        };
        let d = match code.exact_min_distance(strategy, budget) {
            Ok(d) => Some(d),
            Err(Error::BudgetExceeded(_)) => None,
            Err(e) => return Err(e),
        };
        let top = *bounds.iter().max().expect("three bounds");
        let t = code.tower();
        Ok(Outcome::Row(ComparisonRow {
            seed,
            q: t.q(),
            m: t.m(),
            ell: code.ell(),
            r: code.generators().len(),
            lambda: t.lambda().0,
            dim: code.dimension(),
            d,
            d_l: bounds[0],
            d_spec: bounds[1],
            d_j: bounds[2],
            sharp: bounds.map(|b| Some(b) == d),
            best: bounds.map(|b| b == top),
            pattern: Pattern::of(bounds[0], bounds[1], bounds[2]),
        }))
    }
}

impl Default for Evaluator {
    fn default() -> Self {
        let config = BoundConfig::default();
        let families = config.union.clone();
        Evaluator::new(config, families)
    }
}
