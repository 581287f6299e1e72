//! Per-tower configuration and memo tables shared by every code over the
//! same `(q, m, lambda)`.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::constabounds::{
    consecutive_sets, dist_true, ht_sets, roos_sets, roos_sets_general, shift_independent,
    DefSetBound, Family, IndexTables, Witness, ZeroSet, MAX_SHIFT_M, MAX_TABLE_M,
};
use crate::error::Result;
use crate::galois::FieldTower;
use crate::linalg::{ExtNat, Strategy, DEFAULT_BUDGET};
use crate::par::{self, Execution};

#[derive(Clone, Debug)]
pub struct BoundConfig {
    /// Families whose union forms `B_u`.
    pub union: Vec<Family>,
    /// Most subsets of the eigenvalue set scanned for B1.
    pub subset_cap: u64,
    /// Step budget for every exact distance computation.
    pub budget: u64,
    pub strategy: Strategy,
    /// Use the Roos family with arbitrary `N` valued by its exact distance.
    pub roos_general: bool,
    pub exec: Execution,
}

impl Default for BoundConfig {
    fn default() -> Self {
        BoundConfig {
            union: vec![Family::B1, Family::B2, Family::B3, Family::B4],
            subset_cap: 1 << 16,
            budget: DEFAULT_BUDGET,
            strategy: Strategy::Auto,
            roos_general: false,
            exec: Execution::Parallel,
        }
    }
}

/// Candidates of one family for one target set.
#[derive(Clone, Debug)]
pub struct FamilyTable {
    pub bounds: Vec<DefSetBound>,
    /// False when the B1 scan hit the subset cap.
    pub exhaustive: bool,
}

type FamilyKey = (ZeroSet, Family);

pub struct BoundContext {
    tower: Arc<FieldTower>,
    config: BoundConfig,
    tables: IndexTables,
    dist: Vec<OnceLock<Result<ExtNat>>>,
    families: Mutex<HashMap<FamilyKey, Arc<FamilyTable>>>,
    inner: Mutex<HashMap<u64, ExtNat>>,
}

impl BoundContext {
    pub fn new(tower: Arc<FieldTower>, config: BoundConfig) -> BoundContext {
        let m = tower.m();
        let dist = if m <= MAX_TABLE_M {
            (0..1usize << m).map(|_| OnceLock::new()).collect()
        } else {
            Vec::new()
        };
        BoundContext {
            tables: IndexTables::new(m),
            tower,
            config,
            dist,
            families: Mutex::new(HashMap::new()),
            inner: Mutex::new(HashMap::new()),
        }
    }

    pub fn with_defaults(tower: Arc<FieldTower>) -> BoundContext {
        BoundContext::new(tower, BoundConfig::default())
    }

    pub fn tower(&self) -> &Arc<FieldTower> {
        &self.tower
    }

    pub fn config(&self) -> &BoundConfig {
        &self.config
    }

    pub fn tables(&self) -> &IndexTables {
        &self.tables
    }

    /// Memoised exact distance of the constacyclic code with zeros P.
    pub fn dist_true(&self, p: ZeroSet) -> Result<ExtNat> {
        match self.dist.get(p.0 as usize) {
            Some(cell) => cell
                .get_or_init(|| dist_true(&self.tower, p, self.config.budget))
                .clone(),
            None => dist_true(&self.tower, p, self.config.budget),
        }
    }

    /// Memoised value keyed by a set of cyclotomic classes.
    pub(crate) fn memo_inner(
        &self,
        classes: u64,
        compute: impl FnOnce() -> Result<ExtNat>,
    ) -> Result<ExtNat> {
        if let Some(&v) = self.inner.lock().expect("memo lock").get(&classes) {
            return Ok(v);
        }
        let v = compute()?;
        self.inner.lock().expect("memo lock").insert(classes, v);
        Ok(v)
    }

    /// Candidates of `family` inside `target`, sorted by size then colex order.
    pub fn family(&self, target: ZeroSet, family: Family) -> Result<Arc<FamilyTable>> {
        let key = (target, family);
        if let Some(t) = self.families.lock().expect("memo lock").get(&key) {
            return Ok(t.clone());
        }
        let table = Arc::new(match family {
            Family::B1 => self.exact_table(target)?,
            Family::B2 => FamilyTable {
                bounds: consecutive_sets(&self.tables, target),
                exhaustive: true,
            },
            Family::B3 => FamilyTable {
                bounds: ht_sets(&self.tables, target),
                exhaustive: true,
            },
            Family::B4 if self.config.roos_general => {
                let bounds = roos_sets_general(&self.tables, target, |n| {
                    self.dist_true(n).unwrap_or(ExtNat::Finite(0))
                });
                FamilyTable {
                    bounds,
                    exhaustive: true,
                }
            }
            Family::B4 => FamilyTable {
                bounds: roos_sets(&self.tables, target),
                exhaustive: true,
            },
            Family::B5 => FamilyTable {
                bounds: shift_independent(&self.tables, target),
                exhaustive: self.tables.m() <= MAX_SHIFT_M,
            },
        });
        self.families
            .lock()
            .expect("memo lock")
            .insert(key, table.clone());
        Ok(table)
    }

    fn exact_table(&self, target: ZeroSet) -> Result<FamilyTable> {
        let idx = target.indices();
        let t = idx.len();
        let total = if t >= 64 { u64::MAX } else { (1u64 << t) - 1 };
        let cap = self.config.subset_cap;
        let mut subsets = Vec::new();
        'outer: for k in 1..=t {
            let mut x: u64 = (1u64 << k) - 1;
            while t == 64 || x < (1u64 << t) {
                if subsets.len() as u64 >= cap {
                    break 'outer;
                }
                subsets.push(ZeroSet::from_indices(
                    (0..t).filter(|&b| x >> b & 1 == 1).map(|b| idx[b]),
                ));
                let c = x & x.wrapping_neg();
                let r = x + c;
                x = (((r ^ x) >> 2) / c) | r;
            }
        }
        let m = self.tower.m();
        let values = par::map(self.config.exec, &subsets, |&p| self.dist_true(p));
        let mut bounds = Vec::with_capacity(subsets.len());
        for (p, v) in subsets.into_iter().zip(values) {
            let witness = if p == ZeroSet::full(m) {
                Witness::WholeSet
            } else {
                Witness::Exact
            };
            bounds.push(DefSetBound {
                subset: p,
                value: v?,
                family: Family::B1,
                witness,
            });
        }
        Ok(FamilyTable {
            bounds,
            exhaustive: total <= cap,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::galois::build_tower;

    #[test]
    fn exact_table_order_and_cap() {
        let t = Arc::new(build_tower(2, 7, 1).unwrap());
        let ctx = BoundContext::with_defaults(t.clone());
        let target = ZeroSet::from_indices([1, 2, 4, 6]);
        let table = ctx.family(target, Family::B1).unwrap();
        assert!(table.exhaustive);
        assert_eq!(table.bounds.len(), 15);
        let keys: Vec<(usize, ZeroSet)> = table
            .bounds
            .iter()
            .map(|b| (b.subset.len(), b.subset))
            .collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);

        let capped = BoundContext::new(
            t,
            BoundConfig {
                subset_cap: 5,
                ..BoundConfig::default()
            },
        );
        let table = capped.family(target, Family::B1).unwrap();
        assert!(!table.exhaustive);
        assert_eq!(table.bounds.len(), 5);
        assert!(table.bounds.iter().all(|b| b.subset.len() <= 2));
    }
}
