use std::fmt;

use crate::error::{Error, Result};
use crate::polyring::{Poly, PolyRing};

/// Largest field order for which log/antilog tables are built.
pub const MAX_FIELD_ORDER: u64 = 1 << 22;

const NONE: u32 = u32::MAX;

/// Field element, identified by its label `sum c_i p^i` where `c_i` are the
/// coefficients of the residue polynomial modulo the field modulus.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Elem(pub u32);

impl Elem {
    pub const ZERO: Elem = Elem(0);
    pub const ONE: Elem = Elem(1);

    pub fn label(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Debug for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// GF(p^n) with table arithmetic.
///
/// Addition is modular for prime fields, XOR in characteristic two and Zech
/// logarithms otherwise; multiplication always goes through log tables.
#[derive(Clone)]
pub struct Gf {
    p: u32,
    degree: u32,
    order: u32,
    modulus: Vec<u32>,
    exp: Vec<u32>,
    log: Vec<u32>,
    zech: Vec<u32>,
}

impl fmt::Debug for Gf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{}) mod {:?}", self.p, self.degree, self.modulus)
    }
}

impl PartialEq for Gf {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.modulus == other.modulus
    }
}

impl Eq for Gf {}

impl Gf {
    /// GF(p^n) built on the lexicographically smallest monic irreducible of
    /// degree `n` (coefficients compared from the constant term up).
    pub fn new(p: u32, n: u32) -> Result<Gf> {
        if n == 0 {
            return Err(Error::InvalidParameter(
                "extension degree must be positive".into(),
            ));
        }
        let prime = Gf::prime(p)?;
        if n == 1 {
            return Ok(prime);
        }
        check_order(p, n)?;
        let ring = PolyRing::new(&prime);
        let modulus = ring.smallest_irreducible(n as usize);
        let labels: Vec<u32> = modulus.coeffs().iter().map(|c| c.0).collect();
        Gf::with_modulus(p, &labels)
    }

    /// The prime field F_p.
    pub fn prime(p: u32) -> Result<Gf> {
        if !super::is_prime(p as u64) {
            return Err(Error::NotPrime(p));
        }
        check_order(p, 1)?;
        Ok(Gf::build(p, vec![0, 1]))
    }

    /// GF(p^n) with an explicit monic modulus given low degree first.
    pub fn with_modulus(p: u32, modulus: &[u32]) -> Result<Gf> {
        let prime = Gf::prime(p)?;
        let n = modulus.len().saturating_sub(1) as u32;
        if n == 0 || *modulus.last().unwrap() != 1 || modulus.iter().any(|&c| c >= p) {
            return Err(Error::BadModulus(n));
        }
        check_order(p, n)?;
        let ring = PolyRing::new(&prime);
        let poly = Poly::from_labels(modulus);
        if !ring.is_irreducible(&poly) {
            return Err(Error::BadModulus(n));
        }
        Ok(Gf::build(p, modulus.to_vec()))
    }

    fn build(p: u32, modulus: Vec<u32>) -> Gf {
        let degree = modulus.len() as u32 - 1;
        let order = p.pow(degree);
        let mut gf = Gf {
            p,
            degree,
            order,
            modulus,
            exp: Vec::new(),
            log: Vec::new(),
            zech: Vec::new(),
        };
        let n1 = (order - 1) as usize;
        let mut exp = vec![0u32; 2 * n1.max(1)];
        for cand in 1..order {
            let mut x = 1u32;
            let mut full = true;
            for (i, slot) in exp.iter_mut().take(n1).enumerate() {
                *slot = x;
                x = gf.slow_mul(x, cand);
                if x == 1 && i + 1 < n1 {
                    full = false;
                    break;
                }
            }
            if full && x == 1 {
                break;
            }
        }
        for i in 0..n1 {
            exp[n1 + i] = exp[i];
        }
        let mut log = vec![NONE; order as usize];
        for (i, &x) in exp.iter().take(n1).enumerate() {
            log[x as usize] = i as u32;
        }
        gf.exp = exp;
        gf.log = log;
        if p != 2 && degree > 1 {
            let zech = (0..n1)
                .map(|d| {
                    let s = gf.slow_add(1, gf.exp[d]);
                    if s == 0 {
                        NONE
                    } else {
                        gf.log[s as usize]
                    }
                })
                .collect();
            gf.zech = zech;
        }
        gf
    }

    fn digits(&self, mut label: u32) -> Vec<u32> {
        let mut d = vec![0; self.degree as usize];
        for slot in d.iter_mut() {
            *slot = label % self.p;
            label /= self.p;
        }
        d
    }

    fn undigits(&self, d: &[u32]) -> u32 {
        d.iter().rev().fold(0, |acc, &c| acc * self.p + c)
    }

    fn slow_add(&self, a: u32, b: u32) -> u32 {
        let (da, db) = (self.digits(a), self.digits(b));
        let s: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % self.p).collect();
        self.undigits(&s)
    }

    fn slow_mul(&self, a: u32, b: u32) -> u32 {
        let n = self.degree as usize;
        let p = self.p as u64;
        let (da, db) = (self.digits(a), self.digits(b));
        let mut prod = vec![0u64; 2 * n];
        for i in 0..n {
            for j in 0..n {
                prod[i + j] = (prod[i + j] + da[i] as u64 * db[j] as u64) % p;
            }
        }
        for k in (n..2 * n).rev() {
            let c = prod[k];
            if c == 0 {
                continue;
            }
            for (t, &mt) in self.modulus.iter().enumerate().take(n) {
                let idx = k - n + t;
                prod[idx] = (prod[idx] + (p - c) * mt as u64) % p;
            }
            prod[k] = 0;
        }
        let low: Vec<u32> = prod[..n].iter().map(|&c| c as u32).collect();
        self.undigits(&low)
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    /// Degree over the prime field.
    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// Monic modulus over F_p, low degree first.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn is_prime_field(&self) -> bool {
        self.degree == 1
    }

    /// Primitive element used for the log tables (smallest primitive label).
    pub fn primitive(&self) -> Elem {
        Elem(self.exp[1])
    }

    pub fn elem(&self, label: u32) -> Result<Elem> {
        if label < self.order {
            Ok(Elem(label))
        } else {
            Err(Error::NotInField {
                label,
                order: self.order,
            })
        }
    }

    pub fn contains(&self, x: Elem) -> bool {
        x.0 < self.order
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        (0..self.order).map(Elem)
    }

    /// The integer `k` reduced into the prime subfield.
    pub fn scalar(&self, k: u64) -> Elem {
        Elem((k % self.p as u64) as u32)
    }

    /// Coordinate `t` of `x` in the polynomial basis over F_p.
    pub fn coord(&self, x: Elem, t: u32) -> u32 {
        (x.0 / self.p.pow(t)) % self.p
    }

    pub fn from_coords(&self, coords: &[u32]) -> Elem {
        Elem(self.undigits(coords))
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        if self.degree == 1 {
            let s = a.0 + b.0;
            return Elem(if s >= self.p { s - self.p } else { s });
        }
        if self.p == 2 {
            return Elem(a.0 ^ b.0);
        }
        if a.0 == 0 {
            return b;
        }
        if b.0 == 0 {
            return a;
        }
        let (la, lb) = (self.log[a.0 as usize], self.log[b.0 as usize]);
        let (lo, hi) = if la <= lb { (la, lb) } else { (lb, la) };
        let z = self.zech[(hi - lo) as usize];
        if z == NONE {
            Elem(0)
        } else {
            Elem(self.exp[(lo + z) as usize])
        }
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        if a.0 == 0 || self.p == 2 {
            return a;
        }
        if self.degree == 1 {
            return Elem(self.p - a.0);
        }
        let half = (self.order - 1) / 2;
        let l = self.log[a.0 as usize] + half;
        Elem(self.exp[l as usize])
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if a.0 == 0 || b.0 == 0 {
            return Elem(0);
        }
        let l = self.log[a.0 as usize] + self.log[b.0 as usize];
        Elem(self.exp[l as usize])
    }

    /// Multiplicative inverse; panics on zero.
    #[inline]
    pub fn inv(&self, a: Elem) -> Elem {
        assert!(a.0 != 0, "inverse of zero");
        let n1 = self.order - 1;
        Elem(self.exp[((n1 - self.log[a.0 as usize]) % n1) as usize])
    }

    #[inline]
    pub fn div(&self, a: Elem, b: Elem) -> Elem {
        self.mul(a, self.inv(b))
    }

    pub fn pow(&self, a: Elem, e: u64) -> Elem {
        if e == 0 {
            return Elem(1);
        }
        if a.0 == 0 {
            return Elem(0);
        }
        let n1 = (self.order - 1) as u64;
        let l = (self.log[a.0 as usize] as u64 * (e % n1)) % n1;
        Elem(self.exp[l as usize])
    }

    /// `g^i` for the table primitive element `g`.
    pub fn exp(&self, i: u64) -> Elem {
        Elem(self.exp[(i % (self.order as u64 - 1)) as usize])
    }

    pub fn log(&self, a: Elem) -> Option<u32> {
        (a.0 != 0).then(|| self.log[a.0 as usize])
    }

    /// Multiplicative order of a nonzero element.
    pub fn mult_order(&self, a: Elem) -> u32 {
        let n1 = self.order - 1;
        let l = self.log[a.0 as usize];
        n1 / super::gcd(n1 as u64, l as u64) as u32
    }
}

fn check_order(p: u32, n: u32) -> Result<()> {
    let order = (p as u64).checked_pow(n).unwrap_or(u64::MAX);
    if order > MAX_FIELD_ORDER {
        Err(Error::FieldTooLarge(order))
    } else {
        Ok(())
    }
}
