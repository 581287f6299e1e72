//! Defining-set bounds for constacyclic codes over F, indexed by subsets of
//! `Omega = {omega_0, ..., omega_{m-1}}`.
//!
//! Subsets are bitmasks of root indices. Multiplying by `xi` shifts indices by
//! one, so scaled copies of a set are rotations and the Roos product `MN`
//! becomes the sumset `M + N` mod m.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::galois::{gcd, Elem, FieldTower};
use crate::linalg::{support_rank_distance, ExtNat, Mat};

/// Largest co-index for which full subset tables are built.
pub const MAX_TABLE_M: usize = 16;

/// A subset of root indices.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ZeroSet(pub u64);

impl fmt::Debug for ZeroSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.indices()).finish()
    }
}

impl ZeroSet {
    pub const EMPTY: ZeroSet = ZeroSet(0);

    pub fn full(m: usize) -> ZeroSet {
        ZeroSet(if m >= 64 { u64::MAX } else { (1u64 << m) - 1 })
    }

    pub fn from_indices(indices: impl IntoIterator<Item = usize>) -> ZeroSet {
        ZeroSet(indices.into_iter().fold(0, |acc, k| acc | (1 << k)))
    }

    pub fn indices(self) -> Vec<usize> {
        (0..64).filter(|&k| self.0 >> k & 1 == 1).collect()
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, k: usize) -> bool {
        self.0 >> k & 1 == 1
    }

    pub fn is_subset(self, other: ZeroSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: ZeroSet) -> ZeroSet {
        ZeroSet(self.0 | other.0)
    }

    pub fn intersect(self, other: ZeroSet) -> ZeroSet {
        ZeroSet(self.0 & other.0)
    }

    /// `{k + shift mod m}`, the index set of `xi^shift` times the subset.
    pub fn rotate(self, shift: usize, m: usize) -> ZeroSet {
        let s = shift % m;
        if s == 0 {
            return self;
        }
        let full = ZeroSet::full(m).0;
        ZeroSet(((self.0 << s) | (self.0 >> (m - s))) & full)
    }

    /// `{a + b mod m : a in self, b in other}`.
    pub fn sumset(self, other: ZeroSet, m: usize) -> ZeroSet {
        self.indices()
            .into_iter()
            .fold(ZeroSet::EMPTY, |acc, a| acc.union(other.rotate(a, m)))
    }

    /// Nonempty submasks in increasing numeric order.
    pub fn submasks(self) -> impl Iterator<Item = ZeroSet> {
        let full = self.0;
        let mut sub = 0u64;
        std::iter::from_fn(move || {
            sub = sub.wrapping_sub(full) & full;
            (sub != 0).then_some(ZeroSet(sub))
        })
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Family {
    /// Exact distance of the constacyclic code with zeros P.
    B1,
    /// Consecutive zeros (BCH-like).
    B2,
    /// Hartmann–Tzeng.
    B3,
    /// Roos.
    B4,
    /// Shift bound.
    B5,
}

impl Family {
    pub const ALL: [Family; 5] = [Family::B1, Family::B2, Family::B3, Family::B4, Family::B5];

    pub fn parse(s: &str) -> Option<Family> {
        match s.trim().to_ascii_lowercase().as_str() {
            "b1" => Some(Family::B1),
            "b2" => Some(Family::B2),
            "b3" => Some(Family::B3),
            "b4" => Some(Family::B4),
            "b5" => Some(Family::B5),
            _ => None,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// Parameters certifying a family bound.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Witness {
    Exact,
    /// `P = Omega`, whose constacyclic code is zero.
    WholeSet,
    /// `{alpha xi^(e + z n) : 0 <= z <= delta - 2}`.
    Consecutive {
        e: usize,
        n: usize,
        delta: usize,
    },
    /// `{alpha xi^(e + z n1 + y n2) : 0 <= z <= delta - 2, 0 <= y <= s}`.
    HartmannTzeng {
        e: usize,
        n1: usize,
        n2: usize,
        delta: usize,
        s: usize,
    },
    /// `P = M + N` with `M` inside the consecutive set `hull`.
    Roos {
        m_set: ZeroSet,
        n_set: ZeroSet,
        hull: ZeroSet,
    },
    /// `set` is independent with respect to `zeros`, the zero set containing
    /// the subset that minimises this size.
    Shift {
        set: ZeroSet,
        zeros: ZeroSet,
    },
}

/// A subset `P` of the target with a lower bound on the distance of the
/// constacyclic code whose zeros contain `P`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct DefSetBound {
    pub subset: ZeroSet,
    pub value: ExtNat,
    pub family: Family,
    pub witness: Witness,
}

/// Index bookkeeping shared by the structural families for one co-index m.
#[derive(Clone, Debug)]
pub struct IndexTables {
    m: usize,
    units: Vec<usize>,
    consecutive: Vec<(ZeroSet, Witness)>,
    shift: OnceLock<ShiftTable>,
}

impl IndexTables {
    pub fn new(m: usize) -> IndexTables {
        assert!((1..64).contains(&m), "co-index out of range");
        let units: Vec<usize> = (1..m.max(2))
            .filter(|&n| gcd(n as u64, m as u64) == 1)
            .collect();
        let mut seen = HashSet::new();
        let mut consecutive = Vec::new();
        for len in 1..=m {
            for e in 0..m {
                for &n in &units {
                    let set = ZeroSet::from_indices((0..len).map(|z| (e + z * n) % m));
                    if seen.insert(set) {
                        consecutive.push((
                            set,
                            Witness::Consecutive {
                                e,
                                n,
                                delta: len + 1,
                            },
                        ));
                    }
                    if len == 1 {
                        break;
                    }
                }
            }
        }
        IndexTables {
            m,
            units,
            consecutive,
            shift: OnceLock::new(),
        }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Steps `n` in `[1, m)` coprime to m.
    pub fn units(&self) -> &[usize] {
        &self.units
    }

    /// Every distinct consecutive index set with its first witness.
    pub fn consecutive(&self) -> &[(ZeroSet, Witness)] {
        &self.consecutive
    }

    /// Smallest consecutive superset of `set`, as `(size, superset)`.
    pub fn hull(&self, set: ZeroSet) -> (usize, ZeroSet) {
        let m = self.m;
        let mut best = (m, ZeroSet::full(m));
        for &n in &self.units {
            let inv = (1..m.max(2)).find(|&i| i * n % m == 1 % m).unwrap_or(1);
            let mut pos: Vec<usize> = set.indices().iter().map(|&x| x * inv % m).collect();
            pos.sort_unstable();
            if pos.is_empty() {
                continue;
            }
            for (i, &start) in pos.iter().enumerate() {
                let prev = pos[(i + pos.len() - 1) % pos.len()];
                let span = (prev + m - start) % m + 1;
                if span < best.0 {
                    let arc = ZeroSet::from_indices((0..span).map(|z| (start + z) * n % m));
                    best = (span, arc);
                }
            }
        }
        best
    }
}

fn whole_or(set: ZeroSet, m: usize, v: usize) -> ExtNat {
    if set == ZeroSet::full(m) {
        ExtNat::Infinite
    } else {
        ExtNat::Finite(v as u64)
    }
}

/// Keeps the largest value per subset, first witness on ties.
fn insert_best(best: &mut HashMap<ZeroSet, DefSetBound>, b: DefSetBound) {
    match best.get(&b.subset) {
        Some(old) if old.value >= b.value => {}
        _ => {
            best.insert(b.subset, b);
        }
    }
}

fn sorted(best: HashMap<ZeroSet, DefSetBound>) -> Vec<DefSetBound> {
    let mut out: Vec<DefSetBound> = best.into_values().collect();
    out.sort_by_key(|b| (b.subset.len(), b.subset));
    out
}

/// `|P| x m` matrix with rows `(1, omega_k, ..., omega_k^(m-1))`, a parity
/// check of the constacyclic code over F with zeros P.
pub fn vandermonde_parity(t: &FieldTower, p: ZeroSet) -> Mat {
    let f = t.field();
    let m = t.m();
    let mut h = Mat::zeros(0, m);
    for k in p.indices() {
        let w = t.omega(k);
        let row: Vec<Elem> = (0..m).map(|i| f.pow(w, i as u64)).collect();
        h.push_row(&row).expect("row of length m");
    }
    h
}

/// Exact minimum distance of the constacyclic code over F with zeros P.
pub fn dist_true(t: &FieldTower, p: ZeroSet, budget: u64) -> Result<ExtNat> {
    let m = t.m();
    if !p.is_subset(ZeroSet::full(m)) {
        return Err(Error::IndexOutOfRange {
            index: 63 - p.0.leading_zeros() as usize,
            m,
        });
    }
    if p == ZeroSet::full(m) {
        return Ok(ExtNat::Infinite);
    }
    support_rank_distance(&vandermonde_parity(t, p), t.field(), budget)
}

/// B2: consecutive subsets of the target, valued `|E| + 1`.
pub fn consecutive_sets(tables: &IndexTables, target: ZeroSet) -> Vec<DefSetBound> {
    let m = tables.m;
    let mut best = HashMap::new();
    for &(set, w) in &tables.consecutive {
        if set.is_subset(target) {
            let value = whole_or(set, m, set.len() + 1);
            let witness = if value.is_finite() {
                w
            } else {
                Witness::WholeSet
            };
            insert_best(
                &mut best,
                DefSetBound {
                    subset: set,
                    value,
                    family: Family::B2,
                    witness,
                },
            );
        }
    }
    sorted(best)
}

/// B3: Hartmann–Tzeng sets inside the target, valued `delta + s`.
pub fn ht_sets(tables: &IndexTables, target: ZeroSet) -> Vec<DefSetBound> {
    let m = tables.m;
    let mut best = HashMap::new();
    for e in 0..m {
        for &n1 in &tables.units {
            for delta in 2..=m {
                let base = ZeroSet::from_indices((0..delta - 1).map(|z| (e + z * n1) % m));
                if !base.is_subset(target) {
                    break;
                }
                for n2 in 1..m {
                    if gcd(m as u64, n2 as u64) >= delta as u64 {
                        continue;
                    }
                    let mut d = base;
                    for s in 1..=m {
                        d = d.union(base.rotate(s * n2, m));
                        if !d.is_subset(target) {
                            break;
                        }
                        let value = whole_or(d, m, delta + s);
                        let witness = if value.is_finite() {
                            Witness::HartmannTzeng {
                                e,
                                n1,
                                n2,
                                delta,
                                s,
                            }
                        } else {
                            Witness::WholeSet
                        };
                        insert_best(
                            &mut best,
                            DefSetBound {
                                subset: d,
                                value,
                                family: Family::B3,
                                witness,
                            },
                        );
                    }
                }
            }
        }
    }
    sorted(best)
}

/// B4 in the form where N is consecutive: for `M` inside a consecutive set
/// `M'` with `|M'| <= |M| + |N| - 1`, the set `M + N` is valued `|M| + |N|`.
pub fn roos_sets(tables: &IndexTables, target: ZeroSet) -> Vec<DefSetBound> {
    let m = tables.m;
    let ns: Vec<(ZeroSet, usize)> = tables
        .consecutive
        .iter()
        .filter(|(n, _)| *n != ZeroSet::full(m))
        .map(|&(n, _)| (n, n.len() + 1))
        .collect();
    roos_core(tables, target, &ns)
}

/// B4 with arbitrary nonempty `N` and its exact distance `d_N`:
/// `M + N` valued `|M| + d_N - 1` when `|M'| <= |M| + d_N - 2`.
pub fn roos_sets_general(
    tables: &IndexTables,
    target: ZeroSet,
    dist: impl Fn(ZeroSet) -> ExtNat,
) -> Vec<DefSetBound> {
    let m = tables.m;
    let ns: Vec<(ZeroSet, usize)> = ZeroSet::full(m)
        .submasks()
        .filter(|&n| n != ZeroSet::full(m))
        .filter_map(|n| dist(n).finite().map(|d| (n, d as usize)))
        .collect();
    roos_core(tables, target, &ns)
}

fn roos_core(tables: &IndexTables, target: ZeroSet, ns: &[(ZeroSet, usize)]) -> Vec<DefSetBound> {
    let m = tables.m;
    let mut hull_cache: HashMap<ZeroSet, usize> = HashMap::new();
    let mut best: HashMap<ZeroSet, DefSetBound> = HashMap::new();
    for &(n, dn) in ns {
        let a_n = ZeroSet::from_indices((0..m).filter(|&a| n.rotate(a, m).is_subset(target)));
        for mset in a_n.submasks() {
            let h = *hull_cache
                .entry(mset)
                .or_insert_with(|| tables.hull(mset).0);
            if h + 2 > mset.len() + dn {
                continue;
            }
            let p = mset.sumset(n, m);
            let value = whole_or(p, m, mset.len() + dn - 1);
            if best.get(&p).is_some_and(|b| b.value >= value) {
                continue;
            }
            let witness = if value.is_finite() {
                Witness::Roos {
                    m_set: mset,
                    n_set: n,
                    hull: tables.hull(mset).1,
                }
            } else {
                Witness::WholeSet
            };
            best.insert(
                p,
                DefSetBound {
                    subset: p,
                    value,
                    family: Family::B4,
                    witness,
                },
            );
        }
    }
    sorted(best)
}

/// Largest co-index for which the shift family is computed.
pub const MAX_SHIFT_M: usize = 12;

/// Per subset `P`: the least, over zero sets `Z ⊇ P` other than Omega, of the
/// largest set independent with respect to `Z`, with that set and `Z`.
#[derive(Clone, Debug)]
struct ShiftTable {
    value: Vec<u8>,
    set: Vec<u64>,
    zeros: Vec<u64>,
}

impl ShiftTable {
    fn new(m: usize) -> ShiftTable {
        let full = (1u64 << m) - 1;
        let size = 1usize << m;
        let rot = |x: u64, k: usize| {
            if k == 0 {
                x
            } else {
                ((x << k) | (x >> (m - k))) & full
            }
        };
        let mut value = vec![u8::MAX; size];
        let mut set = vec![0u64; size];
        let mut zeros = vec![full; size];
        let mut stamp = vec![0u32; size];
        let mut queue = Vec::new();
        for z in 0..full {
            let outside: Vec<u64> = (0..m)
                .filter(|&b| z >> b & 1 == 0)
                .map(|b| 1u64 << b)
                .collect();
            let cap = z.count_ones();
            let tag = z as u32 + 1;
            queue.clear();
            queue.push(0u64);
            stamp[0] = tag;
            let mut inner = 0u64;
            let mut head = 0;
            while head < queue.len() && inner.count_ones() < cap {
                let a = queue[head];
                head += 1;
                if a.count_ones() > inner.count_ones() {
                    inner = a;
                }
                for &b in &outside {
                    let grown = a | b;
                    for k in 0..m {
                        let r = rot(grown, k);
                        if r & !z == 0 && stamp[r as usize] != tag {
                            stamp[r as usize] = tag;
                            queue.push(r);
                        }
                    }
                }
            }
            if let Some(&r) = queue[head..].iter().max_by_key(|r| r.count_ones()) {
                if r.count_ones() > inner.count_ones() {
                    inner = r;
                }
            }
            value[z as usize] = inner.count_ones() as u8 + 1;
            set[z as usize] = inner | outside[0];
            zeros[z as usize] = z;
        }
        for i in 0..m {
            for p in 0..size {
                let up = p | 1 << i;
                if up != p && value[up] < value[p] {
                    value[p] = value[up];
                    set[p] = set[up];
                    zeros[p] = zeros[up];
                }
            }
        }
        ShiftTable { value, set, zeros }
    }
}

/// B5: for each `P` inside `target`, every nonzero word whose zeros contain `P`
/// has some zero set `Z ⊇ P` short of Omega, and its weight is at least the
/// size of any set independent with respect to `Z`. Independent sets grow from
/// the empty set by adjoining a non-member of `Z` to a subset of `Z` and by
/// rotating into `Z`. Empty beyond `MAX_SHIFT_M`.
pub fn shift_independent(tables: &IndexTables, target: ZeroSet) -> Vec<DefSetBound> {
    let m = tables.m;
    if m > MAX_SHIFT_M {
        return Vec::new();
    }
    let t = tables.shift.get_or_init(|| ShiftTable::new(m));
    let full = ZeroSet::full(m);
    let value = |p: ZeroSet| {
        if p == full {
            ExtNat::Infinite
        } else {
            ExtNat::Finite(t.value[p.0 as usize] as u64)
        }
    };
    let mut out = Vec::new();
    for p in std::iter::once(ZeroSet::EMPTY).chain(target.submasks()) {
        let v = value(p);
        if p.indices()
            .iter()
            .any(|&i| value(ZeroSet(p.0 & !(1 << i))) >= v)
        {
            continue;
        }
        let witness = if p == full {
            Witness::WholeSet
        } else {
            let i = p.0 as usize;
            Witness::Shift {
                set: ZeroSet(t.set[i]),
                zeros: ZeroSet(t.zeros[i]),
            }
        };
        out.push(DefSetBound {
            subset: p,
            value: v,
            family: Family::B5,
            witness,
        });
    }
    out.sort_by_key(|b| (b.subset.len(), b.subset));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::galois::build_tower;

    #[test]
    fn zero_set_ops() {
        let s = ZeroSet::from_indices([0, 3, 6]);
        assert_eq!(s.rotate(2, 7), ZeroSet::from_indices([2, 5, 1]));
        assert_eq!(
            ZeroSet::from_indices([0, 1])
                .sumset(ZeroSet::from_indices([0, 3]), 5)
                .len(),
            4
        );
        assert_eq!(ZeroSet::from_indices([1, 2]).submasks().count(), 3);
        assert_eq!(ZeroSet::full(5).len(), 5);
    }

    #[test]
    fn consecutive_enumeration() {
        let t = IndexTables::new(7);
        assert_eq!(t.units(), &[1, 2, 3, 4, 5, 6]);
        let b2 = consecutive_sets(&t, ZeroSet::from_indices([0, 2, 4]));
        let best = b2.iter().map(|b| b.value).max().unwrap();
        assert_eq!(best, ExtNat::Finite(4));
        assert!(b2
            .iter()
            .all(|b| b.subset.is_subset(ZeroSet::from_indices([0, 2, 4]))));
        let whole = consecutive_sets(&t, ZeroSet::full(7));
        assert!(whole
            .iter()
            .any(|b| b.value == ExtNat::Infinite && b.witness == Witness::WholeSet));
    }

    #[test]
    fn hull_sizes() {
        let t = IndexTables::new(10);
        assert_eq!(t.hull(ZeroSet::from_indices([2, 5, 8])).0, 3);
        assert_eq!(t.hull(ZeroSet::from_indices([0, 1, 5])).0, 6);
        assert_eq!(t.hull(ZeroSet::from_indices([4])).0, 1);
    }

    #[test]
    fn vandermonde_rank_and_bch() {
        let t = build_tower(2, 15, 1).unwrap();
        let p = ZeroSet::from_indices([0, 1, 2, 3]);
        assert_eq!(vandermonde_parity(&t, p).rank(t.field()), 4);
        assert_eq!(dist_true(&t, p, 1 << 20).unwrap(), ExtNat::Finite(5));
        assert_eq!(
            dist_true(&t, ZeroSet::full(15), 1 << 20).unwrap(),
            ExtNat::Infinite
        );
    }

    #[test]
    fn shift_bound_on_consecutive_target() {
        let t = IndexTables::new(9);
        let s = ZeroSet::from_indices([1, 2, 3]);
        let b5 = shift_independent(&t, s);
        assert_eq!(b5.iter().map(|b| b.value).max(), Some(ExtNat::Finite(4)));
        let empty = shift_independent(&t, ZeroSet::EMPTY);
        assert_eq!(empty.iter().map(|b| b.value).max(), Some(ExtNat::Finite(1)));
    }

    #[test]
    fn shift_bound_counts_every_zero_of_a_word() {
        // x^3 - 1 has weight 2 and zeros {0, 3, 6}, while {0, 3, 6} is
        // independent with respect to {3, 6} alone.
        let t = IndexTables::new(9);
        let b5 = shift_independent(&t, ZeroSet::from_indices([3, 6]));
        assert_eq!(b5.iter().map(|b| b.value).max(), Some(ExtNat::Finite(2)));
        let tower = build_tower(2, 9, 1).unwrap();
        for p in ZeroSet::full(9).submasks().step_by(7) {
            let d = dist_true(&tower, p, 1 << 20).unwrap();
            for b in shift_independent(&t, p) {
                assert!(b.value <= d, "{p:?}: {:?} > {d:?}", b.value);
            }
        }
    }
}
