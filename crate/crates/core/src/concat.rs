//! Concatenated structure of a quasi-twisted code: constituent codes over the
//! fields `E_i = F_q(omega_{u_i})` and the Jensen bound.

use crate::context::BoundContext;
use crate::error::{Error, Result};
use crate::galois::{Elem, FieldTower};
use crate::linalg::{support_rank_distance, ExtNat, LinearCode, Mat};
use crate::polyring::{Poly, PolyRing};
use crate::qtcode::QtCode;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConstituentKind {
    Zero,
    Full,
    Nontrivial,
}

/// Constituent `C_i`, the row space of `G~(omega_{u_i})`, stored as an
/// echelon basis over F with entries in `E_i`.
#[derive(Clone, Debug)]
pub struct Constituent {
    pub class: usize,
    pub rep: usize,
    /// `[E_i : F_q]`.
    pub degree: usize,
    pub basis: Mat,
    pub kind: ConstituentKind,
    pub distance: ExtNat,
}

impl Constituent {
    pub fn rank(&self) -> usize {
        self.basis.rows()
    }
}

pub fn constituents(code: &QtCode, budget: u64) -> Result<Vec<Constituent>> {
    let t = code.tower();
    let f = t.field();
    let ell = code.ell();
    let roots = t.roots();
    roots
        .classes()
        .iter()
        .enumerate()
        .map(|(i, class)| {
            let rep = class[0];
            let basis = code.eval_basis(t.omega(rep)).echelon(f).mat;
            let (kind, distance) = match basis.rows() {
                0 => (ConstituentKind::Zero, ExtNat::Infinite),
                r if r == ell => (ConstituentKind::Full, ExtNat::Finite(1)),
                _ => (
                    ConstituentKind::Nontrivial,
                    support_rank_distance(&basis.right_kernel(f), f, budget)?,
                ),
            };
            Ok(Constituent {
                class: i,
                rep,
                degree: class.len(),
                basis,
                kind,
                distance,
            })
        })
        .collect()
}

/// Generator of the q-ary constacyclic code of length m whose nonzeros are
/// the given classes: `(x^m - lambda) / prod f_i`.
pub fn inner_generator(t: &FieldTower, classes: &[usize]) -> Poly {
    let ring = PolyRing::new(t.base());
    let factors = t.factors();
    let prod = classes.iter().fold(Poly::constant(Elem::ONE), |acc, &i| {
        ring.mul(&acc, &factors[i])
    });
    ring.exact_div(&ring.twist_modulus(t.m(), t.lambda()), &prod)
        .expect("factors divide x^m - lambda")
}

/// Distance of the sum of the minimal codes of the given classes.
pub fn inner_sum_distance(ctx: &BoundContext, classes: &[usize]) -> Result<ExtNat> {
    let t = ctx.tower();
    let key = classes.iter().fold(0u64, |acc, &i| acc | (1 << i));
    ctx.memo_inner(key, || {
        let g = inner_generator(t, classes);
        let m = t.m();
        let deg = g.degree().expect("nonzero generator");
        let mut gen = Mat::zeros(0, m);
        for s in 0..m - deg {
            let mut row = vec![Elem::ZERO; m];
            for (k, &c) in g.coeffs().iter().enumerate() {
                row[k + s] = c;
            }
            gen.push_row(&row).expect("row of length m");
        }
        LinearCode::new(t.base().clone(), &gen)
            .min_distance(ctx.config().strategy, ctx.config().budget)
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JensenReport {
    pub value: ExtNat,
    /// Nonzero constituent classes by increasing distance, ties by representative.
    pub order: Vec<usize>,
    /// `d(C_{i_r}) * d(sum of the first r inner codes)` for each prefix.
    pub terms: Vec<ExtNat>,
}

pub fn jensen_bound(code: &QtCode, ctx: &BoundContext) -> Result<JensenReport> {
    let cons = constituents(code, ctx.config().budget)?;
    jensen_from(&cons, ctx)
}

pub fn jensen_from(cons: &[Constituent], ctx: &BoundContext) -> Result<JensenReport> {
    let mut nonzero: Vec<&Constituent> = cons
        .iter()
        .filter(|c| c.kind != ConstituentKind::Zero)
        .collect();
    nonzero.sort_by_key(|c| (c.distance, c.rep));
    let order: Vec<usize> = nonzero.iter().map(|c| c.class).collect();
    let mut terms = Vec::with_capacity(order.len());
    for r in 0..order.len() {
        let inner = inner_sum_distance(ctx, &order[..=r])?;
        terms.push(nonzero[r].distance * inner);
    }
    let value = terms.iter().copied().min().unwrap_or(ExtNat::Infinite);
    Ok(JensenReport {
        value,
        order,
        terms,
    })
}

/// Builds `c_{k,t} = Tr_{F/F_q}(sum_i b_i kappa_{i,t} omega_{u_i}^(-k))` from one
/// vector `kappa_i` of `E_i^ℓ` per class (`None` for zero), where
/// `Tr_{F/E_i}(b_i) = 1`. Evaluating component t at `omega_{u_i}` gives back
/// `m kappa_{i,t}`.
pub fn trace_reconstruct(
    t: &FieldTower,
    ell: usize,
    kappas: &[Option<Vec<Elem>>],
) -> Result<Vec<Elem>> {
    let f = t.field();
    let m = t.m();
    let classes = t.roots().classes();
    if kappas.len() != classes.len() {
        return Err(Error::Shape(format!(
            "{} constituent vectors for {} classes",
            kappas.len(),
            classes.len()
        )));
    }
    let mut out = vec![Elem::ZERO; m * ell];
    for (i, kappa) in kappas.iter().enumerate() {
        let Some(kappa) = kappa else { continue };
        if kappa.len() != ell {
            return Err(Error::Shape(format!(
                "constituent vector of length {} for index {ell}",
                kappa.len()
            )));
        }
        let d = classes[i].len() as u32;
        let b = f
            .elements()
            .find(|&x| t.trace_to_subfield(x, d).is_ok_and(|v| v == Elem::ONE))
            .expect("the relative trace is onto");
        let inv = f.inv(t.omega(classes[i][0]));
        for k in 0..m {
            let w = f.pow(inv, k as u64);
            for (j, &kj) in kappa.iter().enumerate() {
                let x = f.mul(b, f.mul(kj, w));
                let tr = t.trace_to_subfield(x, 1)?;
                let v = t.restrict(tr).expect("trace lands in F_q");
                out[k * ell + j] = t.base().add(out[k * ell + j], v);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::galois::build_tower;
    use std::sync::Arc;

    #[test]
    fn constituent_dimensions_add_up() {
        let t = Arc::new(build_tower(3, 4, 2).unwrap());
        let c = QtCode::from_labels(t.clone(), 2, &[vec![vec![1, 1], vec![2, 0, 1]]]).unwrap();
        let cons = constituents(&c, 1 << 20).unwrap();
        let total: usize = cons.iter().map(|k| k.degree * k.rank()).sum();
        assert_eq!(total, c.dimension());
    }

    #[test]
    fn inner_codes() {
        let t = Arc::new(build_tower(2, 7, 1).unwrap());
        let ctx = BoundContext::with_defaults(t.clone());
        let one = t.roots().class_of(6);
        assert_eq!(inner_sum_distance(&ctx, &[one]).unwrap(), ExtNat::Finite(7));
        let all: Vec<usize> = (0..t.roots().classes().len()).collect();
        assert_eq!(inner_sum_distance(&ctx, &all).unwrap(), ExtNat::Finite(1));
        let other = (one + 1) % 3;
        assert_eq!(
            inner_sum_distance(&ctx, &[other]).unwrap(),
            ExtNat::Finite(4)
        );
    }

    #[test]
    fn trace_round_trip() {
        let t = build_tower(3, 4, 2).unwrap();
        let f = t.field();
        let ring = PolyRing::new(f);
        let classes = t.roots().classes().to_vec();
        let kappas: Vec<Option<Vec<Elem>>> = classes
            .iter()
            .map(|cl| {
                let e = f
                    .elements()
                    .find(|&x| x.0 > 1 && t.in_subfield(x, cl.len() as u32).unwrap())
                    .unwrap_or(Elem::ONE);
                Some(vec![e, Elem::ONE])
            })
            .collect();
        let c = trace_reconstruct(&t, 2, &kappas).unwrap();
        let m = t.m();
        for (i, cl) in classes.iter().enumerate() {
            for j in 0..2 {
                let col = Poly::new((0..m).map(|k| t.embed(c[k * 2 + j])).collect());
                let v = ring.eval(&col, t.omega(cl[0]));
                let expect = f.mul(f.scalar(m as u64), kappas[i].as_ref().unwrap()[j]);
                assert_eq!(v, expect);
            }
        }
    }
}
