//! Lally bound: view the code over `F_{q^ℓ}` through a basis `1, gamma, ..., gamma^(ℓ-1)`.

use std::sync::Arc;

use crate::error::Result;
use crate::galois::{conway, Elem, Embedding, Gf};
use crate::linalg::{support_rank_distance, ExtNat, LinearCode, Mat, Strategy};
use crate::polyring::{Poly, PolyRing};
use crate::qtcode::QtCode;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LallyReport {
    pub value: ExtNat,
    /// Distance of the F_q-span of all coefficient vectors of the generators.
    pub d_b: ExtNat,
    /// Distance of the constacyclic code over `F_{q^ℓ}` generated by `hat_gen`.
    pub d_hat: ExtNat,
    /// `gcd(tau(f_1), ..., tau(f_r), x^m - lambda)` over `F_{q^ℓ}`, as labels.
    pub hat_gen: Poly,
}

/// How the basis `1, gamma, ..., gamma^(ℓ-1)` of `F_{q^ℓ}` over F_q is chosen.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum LallyBasis {
    /// `gamma` is a root of the Conway polynomial of `F_{q^ℓ}`, falling back
    /// to `LexSmallest` outside the built-in table.
    #[default]
    Conway,
    /// `gamma` is a root of the lexicographically smallest monic irreducible
    /// of degree ℓ over F_q.
    LexSmallest,
}

/// `F_{q^ℓ}`, the embedding of F_q and the basis element `gamma`.
pub fn lally_field(base: &Gf, ell: usize, basis: LallyBasis) -> Result<(Arc<Gf>, Embedding, Elem)> {
    let p = base.characteristic();
    let n = base.degree() * ell as u32;
    if basis == LallyBasis::Conway && ell > 1 {
        if let Some(c) = conway(p, n) {
            let big = Gf::with_modulus(p, c)?;
            let emb = Embedding::new(base, &big)?;
            return Ok((Arc::new(big), emb, Elem(p)));
        }
    }
    let big = Gf::new(p, n)?;
    let emb = Embedding::new(base, &big)?;
    if ell == 1 {
        return Ok((Arc::new(big), emb, Elem::ONE));
    }
    let ring = PolyRing::new(base);
    let irr = ring.smallest_irreducible(ell);
    let lifted = Poly::new(irr.coeffs().iter().map(|&c| emb.embed(c)).collect());
    let big_ring = PolyRing::new(&big);
    let gamma = big
        .elements()
        .find(|&z| big_ring.eval(&lifted, z).is_zero())
        .expect("irreducible of degree ℓ splits in F_{q^ℓ}");
    Ok((Arc::new(big), emb, gamma))
}

pub fn lally_bound(code: &QtCode, strategy: Strategy, budget: u64) -> Result<LallyReport> {
    lally_bound_in(code, LallyBasis::default(), strategy, budget)
}

pub fn lally_bound_in(
    code: &QtCode,
    basis: LallyBasis,
    strategy: Strategy,
    budget: u64,
) -> Result<LallyReport> {
    let (big, emb, gamma) = lally_field(code.tower().base(), code.ell(), basis)?;
    lally_bound_with(code, &big, &emb, gamma, strategy, budget)
}

/// The code B of length ℓ spanned by the coefficient vectors `(f_{k,i,0}, ..., f_{k,i,ℓ-1})`
/// of the generators, which also spans all rows of all codeword arrays.
pub fn row_code(code: &QtCode) -> LinearCode {
    let mut rows = Mat::zeros(0, code.ell());
    for row in code.generators() {
        for s in 0..code.m() {
            let v: Vec<Elem> = row.iter().map(|p| p.coeff(s)).collect();
            rows.push_row(&v).expect("row of length ℓ");
        }
    }
    LinearCode::new(code.tower().base().clone(), &rows)
}

/// Lally bound for an explicit basis element `gamma` of `big = F_{q^ℓ}`.
pub fn lally_bound_with(
    code: &QtCode,
    big: &Gf,
    emb: &Embedding,
    gamma: Elem,
    strategy: Strategy,
    budget: u64,
) -> Result<LallyReport> {
    let t = code.tower();
    let (m, ell) = (code.m(), code.ell());
    let d_b = row_code(code).min_distance(strategy, budget)?;

    let ring = PolyRing::new(big);
    let powers: Vec<Elem> = (0..ell).map(|j| big.pow(gamma, j as u64)).collect();
    let modulus = ring.twist_modulus(m, emb.embed(t.lambda()));
    let hat_gen = code.generators().iter().fold(modulus.clone(), |g, row| {
        let tau = row.iter().zip(&powers).fold(Poly::zero(), |acc, (p, &gj)| {
            let lifted = Poly::new(
                p.coeffs()
                    .iter()
                    .map(|&c| big.mul(emb.embed(c), gj))
                    .collect(),
            );
            ring.add(&acc, &lifted)
        });
        ring.gcd(&g, &tau)
    });
    let deg = hat_gen.degree().expect("gcd with a nonzero modulus");
    let d_hat = if deg == m {
        ExtNat::Infinite
    } else {
        let mut gen = Mat::zeros(0, m);
        for s in 0..m - deg {
            let mut r = vec![Elem::ZERO; m];
            for (k, &c) in hat_gen.coeffs().iter().enumerate() {
                r[k + s] = c;
            }
            gen.push_row(&r)?;
        }
        support_rank_distance(&gen.right_kernel(big), big, budget)?
    };
    Ok(LallyReport {
        value: d_b * d_hat,
        d_b,
        d_hat,
        hat_gen,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::galois::build_tower;

    #[test]
    fn lally_field_basis() {
        let base = Gf::new(3, 1).unwrap();
        let (big, _, gamma) = lally_field(&base, 2, LallyBasis::LexSmallest).unwrap();
        assert_eq!(big.order(), 9);
        assert_eq!(big.pow(gamma, 2), big.neg(Elem::ONE));
        let (big, _, gamma) = lally_field(&base, 2, LallyBasis::Conway).unwrap();
        assert_eq!(big.mult_order(gamma), 8);
        assert_eq!(
            big.add(
                big.mul(gamma, gamma),
                big.add(big.mul(Elem(2), gamma), Elem(2))
            ),
            Elem::ZERO
        );
        let base4 = Gf::new(2, 2).unwrap();
        let (big16, emb, g) = lally_field(&base4, 2, LallyBasis::LexSmallest).unwrap();
        assert_eq!(big16.order(), 16);
        let ring = PolyRing::new(&base4);
        let irr = ring.smallest_irreducible(2);
        let val = irr.coeffs().iter().rev().fold(Elem::ZERO, |acc, &c| {
            big16.add(big16.mul(acc, g), emb.embed(c))
        });
        assert!(val.is_zero());
        let (big16, _, g) = lally_field(&base4, 2, LallyBasis::Conway).unwrap();
        assert_eq!(big16.mult_order(g), 15);
    }

    #[test]
    fn single_index_is_cyclic_distance() {
        let t = Arc::new(build_tower(2, 7, 1).unwrap());
        let c = QtCode::from_labels(t, 1, &[vec![vec![1, 1, 0, 1]]]).unwrap();
        let r = lally_bound(&c, Strategy::Auto, 1 << 20).unwrap();
        assert_eq!(r.d_b, ExtNat::Finite(1));
        assert_eq!(r.d_hat, ExtNat::Finite(3));
        assert_eq!(r.value, ExtNat::Finite(3));
    }

    #[test]
    fn zero_code_is_infinite() {
        let t = Arc::new(build_tower(2, 5, 1).unwrap());
        let c = QtCode::from_labels(t, 2, &[]).unwrap();
        assert_eq!(
            lally_bound(&c, Strategy::Auto, 1 << 20).unwrap().value,
            ExtNat::Infinite
        );
    }
}
