use super::{ExtNat, LinearCode, Mat};
use crate::error::{Error, Result};
use crate::galois::{Elem, Gf};

/// Default cap on enumerated codewords or search nodes.
pub const DEFAULT_BUDGET: u64 = 1 << 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Strategy {
    /// Every codeword up to scalars.
    Enumerate,
    /// Smallest linearly dependent set of parity-check columns.
    SupportRank,
    /// Brouwer-Zimmermann enumeration over disjoint information sets.
    InformationSet,
    /// Information set first, support rank if that runs out of budget.
    #[default]
    Auto,
}

pub fn min_distance(code: &LinearCode, strategy: Strategy, budget: u64) -> Result<ExtNat> {
    if code.is_zero() {
        return Ok(ExtNat::Infinite);
    }
    match strategy {
        Strategy::Enumerate => enumerate(code, budget),
        Strategy::SupportRank => support_rank_distance(&code.parity_check(), code.field(), budget),
        Strategy::InformationSet => information_set(code, budget),
        Strategy::Auto => match information_set(code, budget) {
            Err(Error::BudgetExceeded(_)) => {
                support_rank_distance(&code.parity_check(), code.field(), budget)
            }
            other => other,
        },
    }
}

fn pack(v: &[Elem]) -> u128 {
    v.iter()
        .enumerate()
        .fold(0, |acc, (i, x)| acc | ((x.0 as u128 & 1) << i))
}

fn weight(v: &[Elem]) -> u64 {
    v.iter().filter(|x| !x.is_zero()).count() as u64
}

fn enumerate(code: &LinearCode, budget: u64) -> Result<ExtNat> {
    let f = code.field();
    let (k, n) = (code.dim(), code.len());
    let q = f.order() as u128;
    let total = q
        .checked_pow(k as u32)
        .map(|t| (t - 1) / (q - 1))
        .filter(|&t| t <= budget as u128)
        .ok_or(Error::BudgetExceeded(budget))?;
    debug_assert!(total >= 1);
    let gen = code.generator();
    let mut best = n as u64;
    if f.order() == 2 && n <= 128 {
        let rows: Vec<u128> = (0..k).map(|i| pack(gen.row(i))).collect();
        for lead in 0..k {
            let mut cur = rows[lead];
            best = best.min(cur.count_ones() as u64);
            let rest = &rows[lead + 1..];
            for step in 1u64..(1u64 << rest.len()) {
                cur ^= rest[step.trailing_zeros() as usize];
                best = best.min(cur.count_ones() as u64);
            }
        }
        return Ok(ExtNat::Finite(best));
    }
    let p = f.characteristic() as u64;
    let basis: Vec<Elem> = (0..f.degree())
        .map(|t| Elem(f.characteristic().pow(t)))
        .collect();
    for lead in 0..k {
        let gens: Vec<Vec<Elem>> = (lead + 1..k)
            .flat_map(|i| basis.iter().map(move |&b| (i, b)))
            .map(|(i, b)| gen.row(i).iter().map(|&x| f.mul(b, x)).collect())
            .collect();
        let mut cur = gen.row(lead).to_vec();
        let mut w = weight(&cur);
        best = best.min(w);
        let steps = p.pow(gens.len() as u32);
        for step in 1..steps {
            let mut s = step;
            let mut digit = 0;
            while s % p == 0 {
                s /= p;
                digit += 1;
            }
            for (c, &g) in cur.iter_mut().zip(&gens[digit]) {
                let was = !c.is_zero();
                *c = f.add(*c, g);
                let now = !c.is_zero();
                w = w + now as u64 - was as u64;
            }
            best = best.min(w);
        }
    }
    Ok(ExtNat::Finite(best))
}

/// Generator matrices systematic on pairwise disjoint column sets, each with
/// the number of its pivot columns.
fn disjoint_systems(code: &LinearCode) -> Vec<(Mat, usize)> {
    let f = code.field();
    let (k, n) = (code.dim(), code.len());
    let gen = code.generator();
    let mut free: Vec<usize> = (0..n).collect();
    let mut out = Vec::new();
    while !free.is_empty() {
        let order: Vec<usize> = free
            .iter()
            .copied()
            .chain((0..n).filter(|c| !free.contains(c)))
            .collect();
        let e = gen.select_cols(&order).echelon(f);
        let rank = e.pivots.iter().filter(|&&p| p < free.len()).count();
        if rank == 0 {
            break;
        }
        let mut back = vec![0; n];
        for (i, &c) in order.iter().enumerate() {
            back[c] = i;
        }
        let used: Vec<usize> = e.pivots[..rank].iter().map(|&p| order[p]).collect();
        free.retain(|c| !used.contains(c));
        out.push((e.mat.select_cols(&back), rank));
        if rank < k && out.len() > 1 {
            break;
        }
    }
    out
}

struct Walk<'a> {
    f: &'a Gf,
    rows: Vec<Vec<Elem>>,
    nonzero: Vec<Elem>,
    best: u64,
    steps: u64,
    budget: u64,
}

impl Walk<'_> {
    fn descend(
        &mut self,
        bufs: &mut [Vec<Elem>],
        start: usize,
        left: usize,
        first: bool,
    ) -> Result<()> {
        let (acc, rest) = bufs.split_first_mut().expect("one buffer per level");
        if left == 0 {
            self.steps += 1;
            if self.steps > self.budget {
                return Err(Error::BudgetExceeded(self.budget));
            }
            self.best = self.best.min(weight(acc));
            return Ok(());
        }
        let coefs: Vec<Elem> = if first {
            vec![Elem::ONE]
        } else {
            self.nonzero.clone()
        };
        for i in start..=self.rows.len() - left {
            for &c in &coefs {
                let next = &mut rest[0];
                for ((o, &a), &r) in next.iter_mut().zip(acc.iter()).zip(&self.rows[i]) {
                    *o = self.f.add(a, self.f.mul(c, r));
                }
                self.descend(rest, i + 1, left - 1, false)?;
            }
        }
        Ok(())
    }
}

/// Vectors over F_2 or F_3 packed into bit planes: plane 0 marks the
/// coordinates equal to 1, plane 1 those equal to 2 (empty over F_2).
#[derive(Clone)]
struct Packed {
    ternary: bool,
    one: Vec<u64>,
    two: Vec<u64>,
}

impl Packed {
    fn new(v: &[Elem], ternary: bool) -> Packed {
        let plane = |label: u32| -> Vec<u64> {
            v.chunks(64)
                .map(|c| {
                    c.iter()
                        .enumerate()
                        .fold(0, |acc, (i, x)| acc | (((x.0 == label) as u64) << i))
                })
                .collect()
        };
        Packed {
            ternary,
            one: plane(1),
            two: if ternary {
                plane(2)
            } else {
                vec![0; v.len().div_ceil(64)]
            },
        }
    }

    fn neg(&self) -> Packed {
        if !self.ternary {
            return self.clone();
        }
        Packed {
            ternary: true,
            one: self.two.clone(),
            two: self.one.clone(),
        }
    }

    fn get(&self, i: usize) -> u32 {
        let bit = |w: &[u64]| ((w[i / 64] >> (i % 64)) & 1) as u32;
        bit(&self.one) + 2 * bit(&self.two)
    }

    fn first_nonzero(&self) -> Option<usize> {
        self.one
            .iter()
            .zip(&self.two)
            .enumerate()
            .find_map(|(i, (&x, &y))| {
                let w = x | y;
                (w != 0).then(|| i * 64 + w.trailing_zeros() as usize)
            })
    }

    /// `self - c b` for the coefficient `c` of `self` at `b`'s unit pivot.
    fn eliminate(&mut self, b: &Packed, piv: usize) {
        let c = self.get(piv);
        if c == 0 {
            return;
        }
        if !self.ternary {
            for (x, &y) in self.one.iter_mut().zip(&b.one) {
                *x ^= y;
            }
            return;
        }
        let (b1, b2) = if c == 1 {
            (&b.two, &b.one)
        } else {
            (&b.one, &b.two)
        };
        for i in 0..self.one.len() {
            let (a1, a2) = (self.one[i], self.two[i]);
            let t = (a1 | b2[i]) ^ (a2 | b1[i]);
            self.one[i] = (a2 | b2[i]) ^ t;
            self.two[i] = (a1 | b1[i]) ^ t;
        }
    }

    fn set_sum(&mut self, a: &Packed, b: &Packed) {
        if !self.ternary {
            for ((o, &x), &y) in self.one.iter_mut().zip(&a.one).zip(&b.one) {
                *o = x ^ y;
            }
            return;
        }
        for i in 0..self.one.len() {
            let (a1, a2, b1, b2) = (a.one[i], a.two[i], b.one[i], b.two[i]);
            let t = (a1 | b2) ^ (a2 | b1);
            self.one[i] = (a2 | b2) ^ t;
            self.two[i] = (a1 | b1) ^ t;
        }
    }

    fn weight(&self) -> u64 {
        self.one
            .iter()
            .zip(&self.two)
            .map(|(&x, &y)| (x | y).count_ones() as u64)
            .sum()
    }
}

struct PackedWalk {
    /// Each row followed by its nonzero multiples other than itself.
    rows: Vec<Vec<Packed>>,
    best: u64,
    steps: u64,
    budget: u64,
}

impl PackedWalk {
    fn descend(
        &mut self,
        bufs: &mut [Packed],
        start: usize,
        left: usize,
        first: bool,
    ) -> Result<()> {
        let (acc, rest) = bufs.split_first_mut().expect("one buffer per level");
        if left == 0 {
            self.steps += 1;
            if self.steps > self.budget {
                return Err(Error::BudgetExceeded(self.budget));
            }
            self.best = self.best.min(acc.weight());
            return Ok(());
        }
        for i in start..=self.rows.len() - left {
            let mults = if first { 1 } else { self.rows[i].len() };
            for c in 0..mults {
                rest[0].set_sum(acc, &self.rows[i][c]);
                self.descend(rest, i + 1, left - 1, false)?;
            }
        }
        Ok(())
    }
}

/// Brouwer-Zimmermann: messages of weight w are walked in every system; an
/// unseen codeword then has more than `w - (k - rank)` nonzeros on each
/// system's pivot columns.
fn information_set(code: &LinearCode, budget: u64) -> Result<ExtNat> {
    let f = code.field();
    let (k, n) = (code.dim(), code.len());
    let systems = disjoint_systems(code);
    let mut best = systems
        .iter()
        .flat_map(|(g, _)| g.row_vecs())
        .map(|r| weight(&r))
        .min()
        .unwrap_or(n as u64);
    let lower = |w: usize| -> u64 {
        systems
            .iter()
            .map(|&(_, r)| (w + 1).saturating_sub(k - r) as u64)
            .sum()
    };
    let mut steps = 0;
    let packed: Option<Vec<Vec<Vec<Packed>>>> = (f.order() <= 3).then(|| {
        let ternary = f.order() == 3;
        let mults = |r: &[Elem]| {
            let p = Packed::new(r, ternary);
            if ternary {
                vec![p.clone(), p.neg()]
            } else {
                vec![p]
            }
        };
        systems
            .iter()
            .map(|(g, _)| g.row_vecs().iter().map(|r| mults(r)).collect())
            .collect()
    });
    for w in 1..=k {
        for (j, (g, _)) in systems.iter().enumerate() {
            if let Some(packed) = &packed {
                let zero = Packed::new(&vec![Elem::ZERO; n], f.order() == 3);
                let mut s = PackedWalk {
                    rows: packed[j].clone(),
                    best,
                    steps,
                    budget,
                };
                s.descend(&mut vec![zero; w + 1], 0, w, true)?;
                (best, steps) = (s.best, s.steps);
            } else {
                let mut s = Walk {
                    f,
                    rows: g.row_vecs(),
                    nonzero: f.elements().skip(1).collect(),
                    best,
                    steps,
                    budget,
                };
                s.descend(&mut vec![vec![Elem::ZERO; n]; w + 1], 0, w, true)?;
                (best, steps) = (s.best, s.steps);
            }
        }
        if lower(w) >= best {
            break;
        }
    }
    Ok(ExtNat::Finite(best))
}

/// Minimum distance of `{c : H c^T = 0}` as the size of the smallest
/// linearly dependent set of columns of `H`.
pub fn support_rank_distance(h: &Mat, f: &Gf, budget: u64) -> Result<ExtNat> {
    let e = h.echelon(f);
    let (r, n) = (e.pivots.len(), h.cols());
    if r == n {
        return Ok(ExtNat::Infinite);
    }
    if r == 0 {
        return Ok(ExtNat::Finite(1));
    }
    let cols: Vec<Vec<Elem>> = (0..n)
        .map(|j| (0..r).map(|i| e.mat.get(i, j)).collect())
        .collect();
    if f.order() <= 3 {
        let ternary = f.order() == 3;
        let cols = cols.iter().map(|c| Packed::new(c, ternary)).collect();
        let mut s = PackedSupport {
            cols,
            basis: Vec::new(),
            steps: 0,
            budget,
        };
        for w in 1..=r {
            if s.dfs(0, w)? {
                return Ok(ExtNat::Finite(w as u64));
            }
        }
    } else {
        let mut s = Support {
            f,
            cols,
            basis: Vec::new(),
            steps: 0,
            budget,
        };
        for w in 1..=r {
            if s.dfs(0, w)? {
                return Ok(ExtNat::Finite(w as u64));
            }
        }
    }
    Ok(ExtNat::Finite(r as u64 + 1))
}

struct Support<'a> {
    f: &'a Gf,
    cols: Vec<Vec<Elem>>,
    basis: Vec<(Vec<Elem>, usize)>,
    steps: u64,
    budget: u64,
}

impl Support<'_> {
    fn reduce(&self, mut v: Vec<Elem>) -> Vec<Elem> {
        for (b, piv) in &self.basis {
            let c = v[*piv];
            if c.is_zero() {
                continue;
            }
            for (x, &y) in v.iter_mut().zip(b) {
                *x = self.f.sub(*x, self.f.mul(c, y));
            }
        }
        v
    }

    fn dfs(&mut self, start: usize, left: usize) -> Result<bool> {
        let n = self.cols.len();
        for c in start..=n - left {
            self.steps += 1;
            if self.steps > self.budget {
                return Err(Error::BudgetExceeded(self.budget));
            }
            let v = self.reduce(self.cols[c].clone());
            let Some(piv) = v.iter().position(|x| !x.is_zero()) else {
                if left == 1 {
                    return Ok(true);
                }
                continue;
            };
            if left == 1 {
                continue;
            }
            let inv = self.f.inv(v[piv]);
            let v: Vec<Elem> = v.iter().map(|&x| self.f.mul(inv, x)).collect();
            self.basis.push((v, piv));
            let found = self.dfs(c + 1, left - 1)?;
            self.basis.pop();
            if found {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

struct PackedSupport {
    cols: Vec<Packed>,
    /// Reduced columns with a unit entry at their pivot.
    basis: Vec<(Packed, usize)>,
    steps: u64,
    budget: u64,
}

impl PackedSupport {
    fn dfs(&mut self, start: usize, left: usize) -> Result<bool> {
        let n = self.cols.len();
        for c in start..=n - left {
            self.steps += 1;
            if self.steps > self.budget {
                return Err(Error::BudgetExceeded(self.budget));
            }
            let mut v = self.cols[c].clone();
            for (b, piv) in &self.basis {
                v.eliminate(b, *piv);
            }
            let Some(piv) = v.first_nonzero() else {
                if left == 1 {
                    return Ok(true);
                }
                continue;
            };
            if left == 1 {
                continue;
            }
            if v.get(piv) == 2 {
                v = v.neg();
            }
            self.basis.push((v, piv));
            let found = self.dfs(c + 1, left - 1)?;
            self.basis.pop();
            if found {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::sync::Arc;

    fn brute(code: &LinearCode) -> ExtNat {
        let f = code.field();
        let k = code.dim();
        let q = f.order() as u64;
        (1..q.pow(k as u32))
            .map(|t| {
                let msg: Vec<Elem> = (0..k)
                    .map(|i| Elem(((t / q.pow(i as u32)) % q) as u32))
                    .collect();
                weight(&code.encode(&msg).unwrap())
            })
            .min()
            .map_or(ExtNat::Infinite, ExtNat::Finite)
    }

    fn all(code: &LinearCode) -> Vec<ExtNat> {
        [
            Strategy::Enumerate,
            Strategy::SupportRank,
            Strategy::InformationSet,
            Strategy::Auto,
        ]
        .iter()
        .map(|&s| code.min_distance(s, DEFAULT_BUDGET).unwrap())
        .collect()
    }

    #[test]
    fn hamming_and_golay_like() {
        let f = Arc::new(Gf::new(2, 1).unwrap());
        let h = Mat::from_labels(
            7,
            &[
                &[1, 0, 1, 0, 1, 0, 1],
                &[0, 1, 1, 0, 0, 1, 1],
                &[0, 0, 0, 1, 1, 1, 1],
            ],
        )
        .unwrap();
        let c = LinearCode::from_parity(f.clone(), &h);
        assert_eq!(all(&c), vec![ExtNat::Finite(3); 4]);
        assert_eq!(all(&c.dual()), vec![ExtNat::Finite(4); 4]);
    }

    #[test]
    fn ternary_and_extension_fields_match_brute_force() {
        let f3 = Arc::new(Gf::new(3, 1).unwrap());
        let g = Mat::from_labels(
            6,
            &[
                &[1, 0, 1, 2, 0, 1],
                &[0, 1, 1, 1, 2, 0],
                &[1, 1, 0, 0, 1, 1],
            ],
        )
        .unwrap();
        let c = LinearCode::new(f3, &g);
        let expect = brute(&c);
        assert_eq!(all(&c), vec![expect; 4]);

        let f4 = Arc::new(Gf::new(2, 2).unwrap());
        let g = Mat::from_labels(5, &[&[1, 2, 3, 0, 1], &[0, 1, 2, 3, 3]]).unwrap();
        let c = LinearCode::new(f4, &g);
        let expect = brute(&c);
        assert_eq!(all(&c), vec![expect; 4]);
    }

    #[test]
    fn degenerate_codes() {
        let f = Arc::new(Gf::new(3, 1).unwrap());
        assert_eq!(all(&LinearCode::zero(f.clone(), 4))[0], ExtNat::Infinite);
        assert_eq!(
            all(&LinearCode::full(f.clone(), 4)),
            vec![ExtNat::Finite(1); 4]
        );
        let rep = LinearCode::new(f, &Mat::from_labels(5, &[&[1, 1, 1, 1, 1]]).unwrap());
        assert_eq!(all(&rep), vec![ExtNat::Finite(5); 4]);
    }

    #[test]
    fn budget_is_enforced() {
        let f = Arc::new(Gf::new(2, 1).unwrap());
        let c = LinearCode::full(f, 40);
        assert_eq!(
            c.min_distance(Strategy::Enumerate, 1000),
            Err(Error::BudgetExceeded(1000))
        );
    }
}
