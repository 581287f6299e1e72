//! Univariate polynomials over a table field.

use std::fmt;

use crate::error::{Error, Result};
use crate::galois::{prime_factors, Elem, Gf};

/// Polynomial with coefficients low degree first and no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<Elem>,
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels: Vec<u32> = self.coeffs.iter().map(|c| c.0).collect();
        write!(f, "Poly{labels:?}")
    }
}

impl Poly {
    pub fn new(mut coeffs: Vec<Elem>) -> Poly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_labels(labels: &[u32]) -> Poly {
        Poly::new(labels.iter().map(|&c| Elem(c)).collect())
    }

    pub fn zero() -> Poly {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: Elem) -> Poly {
        Poly::new(vec![c])
    }

    pub fn monomial(c: Elem, k: usize) -> Poly {
        let mut v = vec![Elem::ZERO; k + 1];
        v[k] = c;
        Poly::new(v)
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    pub fn labels(&self) -> Vec<u32> {
        self.coeffs.iter().map(|c| c.0).collect()
    }

    pub fn coeff(&self, i: usize) -> Elem {
        self.coeffs.get(i).copied().unwrap_or(Elem::ZERO)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> Elem {
        self.coeffs.last().copied().unwrap_or(Elem::ZERO)
    }

    pub fn is_monic(&self) -> bool {
        self.lead() == Elem::ONE
    }
}

/// Arithmetic in F[x] for a borrowed field F.
#[derive(Clone, Copy)]
pub struct PolyRing<'a> {
    f: &'a Gf,
}

impl<'a> PolyRing<'a> {
    pub fn new(f: &'a Gf) -> Self {
        PolyRing { f }
    }

    pub fn field(&self) -> &'a Gf {
        self.f
    }

    /// Rejects coefficients that are not labels of this field.
    pub fn check(&self, a: &Poly) -> Result<()> {
        match a.coeffs.iter().find(|c| !self.f.contains(**c)) {
            Some(c) => Err(Error::NotInField {
                label: c.0,
                order: self.f.order(),
            }),
            None => Ok(()),
        }
    }

    pub fn add(&self, a: &Poly, b: &Poly) -> Poly {
        let n = a.coeffs.len().max(b.coeffs.len());
        Poly::new((0..n).map(|i| self.f.add(a.coeff(i), b.coeff(i))).collect())
    }

    pub fn sub(&self, a: &Poly, b: &Poly) -> Poly {
        let n = a.coeffs.len().max(b.coeffs.len());
        Poly::new((0..n).map(|i| self.f.sub(a.coeff(i), b.coeff(i))).collect())
    }

    pub fn neg(&self, a: &Poly) -> Poly {
        Poly::new(a.coeffs.iter().map(|&c| self.f.neg(c)).collect())
    }

    pub fn scale(&self, c: Elem, a: &Poly) -> Poly {
        Poly::new(a.coeffs.iter().map(|&x| self.f.mul(c, x)).collect())
    }

    pub fn mul(&self, a: &Poly, b: &Poly) -> Poly {
        if a.is_zero() || b.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Elem::ZERO; a.coeffs.len() + b.coeffs.len() - 1];
        for (i, &x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, &y) in b.coeffs.iter().enumerate() {
                out[i + j] = self.f.add(out[i + j], self.f.mul(x, y));
            }
        }
        Poly::new(out)
    }

    /// Quotient and remainder; errors on a zero divisor.
    pub fn divmod(&self, a: &Poly, b: &Poly) -> Result<(Poly, Poly)> {
        let db = b.degree().ok_or(Error::DivisionByZero)?;
        let mut r = a.coeffs.clone();
        if r.len() <= db {
            return Ok((Poly::zero(), a.clone()));
        }
        let inv = self.f.inv(b.lead());
        let mut q = vec![Elem::ZERO; r.len() - db];
        for k in (db..r.len()).rev() {
            let c = self.f.mul(r[k], inv);
            if c.is_zero() {
                continue;
            }
            q[k - db] = c;
            for (t, &bt) in b.coeffs.iter().enumerate() {
                let idx = k - db + t;
                r[idx] = self.f.sub(r[idx], self.f.mul(c, bt));
            }
        }
        r.truncate(db);
        Ok((Poly::new(q), Poly::new(r)))
    }

    pub fn rem(&self, a: &Poly, b: &Poly) -> Result<Poly> {
        self.divmod(a, b).map(|(_, r)| r)
    }

    /// Exact quotient `a / b`; errors when `b` is zero or does not divide `a`.
    pub fn exact_div(&self, a: &Poly, b: &Poly) -> Result<Poly> {
        let (q, r) = self.divmod(a, b)?;
        if !r.is_zero() {
            return Err(Error::InvalidParameter(format!(
                "{b:?} does not divide {a:?}"
            )));
        }
        Ok(q)
    }

    pub fn monic(&self, a: &Poly) -> Poly {
        if a.is_zero() {
            return Poly::zero();
        }
        self.scale(self.f.inv(a.lead()), a)
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, a: &Poly, b: &Poly) -> Poly {
        let (mut x, mut y) = (a.clone(), b.clone());
        while !y.is_zero() {
            let r = self.rem(&x, &y).expect("nonzero divisor");
            x = y;
            y = r;
        }
        self.monic(&x)
    }

    /// Extended gcd: `(g, s, t)` with `s a + t b = g`, `g` monic.
    pub fn xgcd(&self, a: &Poly, b: &Poly) -> (Poly, Poly, Poly) {
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (Poly::constant(Elem::ONE), Poly::zero());
        let (mut t0, mut t1) = (Poly::zero(), Poly::constant(Elem::ONE));
        while !r1.is_zero() {
            let (q, r) = self.divmod(&r0, &r1).expect("nonzero divisor");
            let s = self.sub(&s0, &self.mul(&q, &s1));
            let t = self.sub(&t0, &self.mul(&q, &t1));
            (r0, r1) = (r1, r);
            (s0, s1) = (s1, s);
            (t0, t1) = (t1, t);
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let inv = Poly::constant(self.f.inv(r0.lead()));
        (
            self.mul(&inv, &r0),
            self.mul(&inv, &s0),
            self.mul(&inv, &t0),
        )
    }

    pub fn eval(&self, a: &Poly, x: Elem) -> Elem {
        a.coeffs
            .iter()
            .rev()
            .fold(Elem::ZERO, |acc, &c| self.f.add(self.f.mul(acc, x), c))
    }

    /// `x^m - lambda`.
    pub fn twist_modulus(&self, m: usize, lambda: Elem) -> Poly {
        let mut v = vec![Elem::ZERO; m + 1];
        v[0] = self.f.neg(lambda);
        v[m] = Elem::ONE;
        Poly::new(v)
    }

    /// `prod (x - r)` over the given roots.
    pub fn from_roots(&self, roots: &[Elem]) -> Poly {
        roots.iter().fold(Poly::constant(Elem::ONE), |acc, &r| {
            self.mul(&acc, &Poly::new(vec![self.f.neg(r), Elem::ONE]))
        })
    }

    pub fn mulmod(&self, a: &Poly, b: &Poly, m: &Poly) -> Poly {
        self.rem(&self.mul(a, b), m).expect("nonzero modulus")
    }

    pub fn powmod(&self, a: &Poly, mut e: u64, m: &Poly) -> Poly {
        let mut base = self.rem(a, m).expect("nonzero modulus");
        let mut acc = self
            .rem(&Poly::constant(Elem::ONE), m)
            .expect("nonzero modulus");
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mulmod(&acc, &base, m);
            }
            base = self.mulmod(&base, &base, m);
            e >>= 1;
        }
        acc
    }

    /// Rabin's test over this field.
    pub fn is_irreducible(&self, a: &Poly) -> bool {
        let n = match a.degree() {
            None | Some(0) => return false,
            Some(1) => return true,
            Some(n) => n,
        };
        let q = self.f.order() as u64;
        let x = Poly::monomial(Elem::ONE, 1);
        let frob = |h: &Poly, k: usize| (0..k).fold(h.clone(), |acc, _| self.powmod(&acc, q, a));
        if frob(&x, n) != self.rem(&x, a).unwrap() {
            return false;
        }
        prime_factors(n as u64).into_iter().all(|r| {
            let h = self.sub(&frob(&x, n / r as usize), &x);
            self.gcd(&h, a).degree() == Some(0)
        })
    }

    /// Lexicographically smallest monic irreducible of degree `n`, comparing
    /// coefficient vectors from the constant term upwards.
    pub fn smallest_irreducible(&self, n: usize) -> Poly {
        let q = self.f.order() as u64;
        let total = q.pow(n as u32);
        (0..total)
            .map(|t| {
                let mut c = vec![Elem::ZERO; n + 1];
                let mut rest = t;
                for k in (0..n).rev() {
                    c[k] = Elem((rest % q) as u32);
                    rest /= q;
                }
                c[n] = Elem::ONE;
                Poly::new(c)
            })
            .find(|p| self.is_irreducible(p))
            .expect("irreducibles exist in every degree")
    }
}
