//! Quasi-twisted codes as submodules of `(F_q[x]/<x^m - lambda>)^ℓ`.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::galois::{Elem, FieldTower};
use crate::linalg::{base_solutions, ExtNat, LinearCode, Mat, Strategy};
use crate::polyring::{Poly, PolyRing};

/// Upper-triangular polynomial generator matrix in Hermite normal form:
/// monic diagonal entries dividing `x^m - lambda`, entries above a diagonal
/// entry of lower degree than it, and rows whose diagonal is `x^m - lambda`
/// zero off the diagonal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedBasis {
    g: Vec<Vec<Poly>>,
}

impl ReducedBasis {
    pub fn ell(&self) -> usize {
        self.g.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> &Poly {
        &self.g[i][j]
    }

    pub fn diag(&self, j: usize) -> &Poly {
        &self.g[j][j]
    }

    pub fn rows(&self) -> &[Vec<Poly>] {
        &self.g
    }
}

#[derive(Clone, Debug)]
pub struct QtCode {
    tower: Arc<FieldTower>,
    ell: usize,
    gens: Vec<Vec<Poly>>,
    basis: ReducedBasis,
}

impl QtCode {
    /// Code generated by the rows of `gens` (each of length `ell`, coefficients
    /// in F_q), reduced modulo `x^m - lambda`.
    pub fn new(tower: Arc<FieldTower>, ell: usize, gens: Vec<Vec<Poly>>) -> Result<QtCode> {
        if ell == 0 {
            return Err(Error::InvalidParameter("index ell must be positive".into()));
        }
        let ring = PolyRing::new(tower.base());
        let modulus = ring.twist_modulus(tower.m(), tower.lambda());
        let mut reduced = Vec::with_capacity(gens.len());
        for row in &gens {
            if row.len() != ell {
                return Err(Error::Shape(format!(
                    "generator row of length {} for index {ell}",
                    row.len()
                )));
            }
            let mut out = Vec::with_capacity(ell);
            for p in row {
                ring.check(p)?;
                out.push(ring.rem(p, &modulus)?);
            }
            reduced.push(out);
        }
        let basis = hermite(&ring, &modulus, ell, &reduced);
        Ok(QtCode {
            tower,
            ell,
            gens: reduced,
            basis,
        })
    }

    /// Generators given as coefficient labels, low degree first.
    pub fn from_labels(
        tower: Arc<FieldTower>,
        ell: usize,
        gens: &[Vec<Vec<u32>>],
    ) -> Result<QtCode> {
        let gens = gens
            .iter()
            .map(|row| row.iter().map(|c| Poly::from_labels(c)).collect())
            .collect();
        QtCode::new(tower, ell, gens)
    }

    pub fn tower(&self) -> &Arc<FieldTower> {
        &self.tower
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    pub fn m(&self) -> usize {
        self.tower.m()
    }

    pub fn len(&self) -> usize {
        self.ell * self.m()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn generators(&self) -> &[Vec<Poly>] {
        &self.gens
    }

    pub fn reduced(&self) -> &ReducedBasis {
        &self.basis
    }

    /// `m ℓ - sum deg g_jj`.
    pub fn dimension(&self) -> usize {
        let deg: usize = (0..self.ell)
            .map(|j| self.basis.diag(j).degree().unwrap_or(0))
            .sum();
        self.len() - deg
    }

    pub fn is_zero(&self) -> bool {
        self.dimension() == 0
    }

    /// Zero code or the full space.
    pub fn is_trivial(&self) -> bool {
        let k = self.dimension();
        k == 0 || k == self.len()
    }

    /// Scalar generator matrix with coordinate `k ℓ + j` holding the coefficient
    /// of `x^k` in component `j`.
    pub fn scalar_code(&self) -> LinearCode {
        let base = self.tower.base();
        let ring = PolyRing::new(base);
        let (m, ell) = (self.m(), self.ell);
        let modulus = ring.twist_modulus(m, self.tower.lambda());
        let mut g = Mat::zeros(0, m * ell);
        for row in self.basis.rows() {
            let j0 = row
                .iter()
                .position(|p| !p.is_zero())
                .expect("basis rows are nonzero");
            let deg = row[j0].degree().unwrap();
            for s in 0..m - deg.min(m) {
                let shift = Poly::monomial(Elem::ONE, s);
                let mut v = vec![Elem::ZERO; m * ell];
                for (j, p) in row.iter().enumerate() {
                    let sp = ring
                        .rem(&ring.mul(&shift, p), &modulus)
                        .expect("nonzero modulus");
                    for (k, &c) in sp.coeffs().iter().enumerate() {
                        v[k * ell + j] = c;
                    }
                }
                g.push_row(&v).expect("row length m ℓ");
            }
        }
        LinearCode::new(base.clone(), &g)
    }

    /// Multiplication by `x` on a flattened vector.
    pub fn twist_shift(&self, v: &[Elem]) -> Vec<Elem> {
        let (m, ell) = (self.m(), self.ell);
        let f = self.tower.base();
        let mut out = vec![Elem::ZERO; m * ell];
        for j in 0..ell {
            out[j] = f.mul(self.tower.lambda(), v[(m - 1) * ell + j]);
            for k in 1..m {
                out[k * ell + j] = v[(k - 1) * ell + j];
            }
        }
        out
    }

    /// Whether the scalar code is closed under the twisted shift.
    pub fn shift_invariant(&self) -> bool {
        let c = self.scalar_code();
        (0..c.dim()).all(|i| c.contains(&self.twist_shift(c.generator().row(i))))
    }

    pub fn exact_min_distance(&self, strategy: Strategy, budget: u64) -> Result<ExtNat> {
        self.scalar_code().min_distance(strategy, budget)
    }

    /// `G~(beta)`: the reduced basis evaluated at `beta` in F.
    pub fn eval_basis(&self, beta: Elem) -> Mat {
        let f = self.tower.field();
        let ell = self.ell;
        let mut out = Mat::zeros(ell, ell);
        for i in 0..ell {
            for j in i..ell {
                let p = self.basis.entry(i, j);
                let v = p.coeffs().iter().rev().fold(Elem::ZERO, |acc, &c| {
                    f.add(f.mul(acc, beta), self.tower.embed(c))
                });
                out.set(i, j, v);
            }
        }
        out
    }

    /// F_q-rational solutions of `V u^T = 0` for `V` over F.
    pub fn base_solutions(&self, v: &Mat) -> LinearCode {
        base_solutions(
            v,
            self.tower.field(),
            self.tower.base(),
            self.tower.embedding(),
        )
    }
}

/// Hermite normal form of `[gens; (x^m - lambda) I]` by Euclidean row
/// elimination, entries kept reduced modulo `x^m - lambda`.
fn hermite(ring: &PolyRing, modulus: &Poly, ell: usize, gens: &[Vec<Poly>]) -> ReducedBasis {
    let mut rows: Vec<Vec<Poly>> = gens.to_vec();
    for j in 0..ell {
        let mut r = vec![Poly::zero(); ell];
        r[j] = modulus.clone();
        rows.push(r);
    }
    let sub_mul = |a: &mut Vec<Poly>, q: &Poly, b: &Vec<Poly>| {
        for (x, y) in a.iter_mut().zip(b) {
            *x = ring.sub(x, &ring.mul(q, y));
        }
    };
    for j in 0..ell {
        loop {
            let pivot = (j..rows.len())
                .filter(|&i| !rows[i][j].is_zero())
                .min_by_key(|&i| rows[i][j].degree())
                .expect("the module contains (x^m - lambda) e_j");
            rows.swap(j, pivot);
            let mut done = true;
            for i in j + 1..rows.len() {
                if rows[i][j].is_zero() {
                    continue;
                }
                let (q, _) = ring
                    .divmod(&rows[i][j], &rows[j][j])
                    .expect("nonzero pivot");
                let pr = rows[j].clone();
                sub_mul(&mut rows[i], &q, &pr);
                for x in rows[i].iter_mut() {
                    *x = ring.rem(x, modulus).expect("nonzero modulus");
                }
                done &= rows[i][j].is_zero();
            }
            if done {
                break;
            }
        }
        let inv = Poly::constant(ring.field().inv(rows[j][j].lead()));
        rows[j] = rows[j].iter().map(|x| ring.mul(&inv, x)).collect();
    }
    rows.truncate(ell);
    for j in 0..ell {
        for i in 0..j {
            if rows[i][j].is_zero() {
                continue;
            }
            let (q, _) = ring
                .divmod(&rows[i][j], &rows[j][j])
                .expect("nonzero pivot");
            let pr = rows[j].clone();
            sub_mul(&mut rows[i], &q, &pr);
        }
    }
    ReducedBasis { g: rows }
}
