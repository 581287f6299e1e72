use std::sync::Arc;

use super::{gcd, prime_power, Elem, Gf};
use crate::error::{Error, Result};
use crate::polyring::{Poly, PolyRing};

/// Inclusion of a subfield `small` into `big` by a root of the subfield's modulus.
#[derive(Clone, Debug)]
pub struct Embedding {
    images: Vec<Elem>,
    preimages: Vec<u32>,
}

impl Embedding {
    pub fn new(small: &Gf, big: &Gf) -> Result<Embedding> {
        if small.characteristic() != big.characteristic()
            || !big.degree().is_multiple_of(small.degree())
        {
            return Err(Error::NotSubfield {
                d: small.degree(),
                e: big.degree(),
            });
        }
        let images: Vec<Elem> = if small.is_prime_field() {
            small.elements().collect()
        } else {
            let ring = PolyRing::new(big);
            let modulus = Poly::from_labels(small.modulus());
            let root = big
                .elements()
                .find(|&z| ring.eval(&modulus, z).is_zero())
                .expect("subfield modulus splits in the extension");
            let powers: Vec<Elem> = (0..small.degree())
                .map(|i| big.pow(root, i as u64))
                .collect();
            small
                .elements()
                .map(|x| {
                    powers.iter().enumerate().fold(Elem::ZERO, |acc, (t, &z)| {
                        let c = big.scalar(small.coord(x, t as u32) as u64);
                        big.add(acc, big.mul(c, z))
                    })
                })
                .collect()
        };
        let mut preimages = vec![u32::MAX; big.order() as usize];
        for (label, img) in images.iter().enumerate() {
            preimages[img.0 as usize] = label as u32;
        }
        Ok(Embedding { images, preimages })
    }

    pub fn embed(&self, x: Elem) -> Elem {
        self.images[x.0 as usize]
    }

    /// The subfield element mapping to `x`, if any.
    pub fn restrict(&self, x: Elem) -> Option<Elem> {
        let l = self.preimages[x.0 as usize];
        (l != u32::MAX).then_some(Elem(l))
    }
}

/// The roots `omega_k = alpha xi^k` of `x^m - lambda` and their q-cyclotomic classes.
#[derive(Clone, Debug)]
pub struct RootSystem {
    omega: Vec<Elem>,
    classes: Vec<Vec<usize>>,
    class_of: Vec<usize>,
}

impl RootSystem {
    pub fn omega(&self) -> &[Elem] {
        &self.omega
    }

    /// Classes in order of their smallest index; each class lists the orbit of
    /// its representative under `k -> (q-1)/r + q k mod m`.
    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class_of(&self, k: usize) -> usize {
        self.class_of[k]
    }

    pub fn reps(&self) -> Vec<usize> {
        self.classes.iter().map(|c| c[0]).collect()
    }

    /// Class sizes, i.e. the degrees of the irreducible factors over F_q.
    pub fn degrees(&self) -> Vec<usize> {
        self.classes.iter().map(Vec::len).collect()
    }
}

/// F_q inside F = F_{q^e}, where `e` is minimal with `r m | q^e - 1`, together
/// with a fixed primitive `rm`-th root of unity `alpha` satisfying `alpha^m = lambda`.
#[derive(Clone, Debug)]
pub struct FieldTower {
    q: u32,
    m: u32,
    lambda: Elem,
    lambda_order: u32,
    ext_degree: u32,
    base: Arc<Gf>,
    field: Arc<Gf>,
    embedding: Embedding,
    alpha: Elem,
    xi: Elem,
    roots: RootSystem,
}

pub fn build_tower(q: u32, m: u32, lambda: u32) -> Result<FieldTower> {
    build_tower_with_modulus(q, m, lambda, None)
}

/// As [`build_tower`], optionally fixing the modulus of F over F_p.
pub fn build_tower_with_modulus(
    q: u32,
    m: u32,
    lambda: u32,
    modulus: Option<&[u32]>,
) -> Result<FieldTower> {
    let (p, a) = prime_power(q as u64).ok_or(Error::NotPrimePower(q as u64))?;
    if m == 0 {
        return Err(Error::InvalidParameter("m must be positive".into()));
    }
    if gcd(m as u64, q as u64) != 1 {
        return Err(Error::NotCoprime { m, q });
    }
    if lambda == 0 || lambda >= q {
        return Err(Error::InvalidLambda(lambda));
    }
    let base = Gf::new(p, a)?;
    let lam = Elem(lambda);
    let r = base.mult_order(lam);
    let rm = r as u64 * m as u64;
    let mut e = 1u32;
    let mut pw = q as u64 % rm;
    while pw != 1 % rm {
        pw = pw * q as u64 % rm;
        e += 1;
    }
    let field = match modulus {
        Some(md) => {
            if md.len() as u32 != a * e + 1 {
                return Err(Error::BadModulus(a * e));
            }
            Gf::with_modulus(p, md)?
        }
        None => Gf::new(p, a * e)?,
    };
    let embedding = Embedding::new(&base, &field)?;
    let lam_f = embedding.embed(lam);
    let n1 = field.order() as u64 - 1;
    let step = n1 / rm;
    let g = field.primitive();
    let alpha = (1..=rm)
        .filter(|&j| gcd(j, rm) == 1)
        .map(|j| field.pow(g, step * j))
        .find(|&c| field.pow(c, m as u64) == lam_f)
        .expect("a primitive rm-th root with alpha^m = lambda exists");
    let xi = field.pow(alpha, r as u64);
    let omega: Vec<Elem> = (0..m as u64)
        .map(|k| field.mul(alpha, field.pow(xi, k)))
        .collect();

    let shift = ((q - 1) / r) as u64;
    let mut class_of = vec![usize::MAX; m as usize];
    let mut classes = Vec::new();
    for start in 0..m as usize {
        if class_of[start] != usize::MAX {
            continue;
        }
        let mut orbit = vec![start];
        class_of[start] = classes.len();
        let mut k = start as u64;
        loop {
            k = (shift + q as u64 * k) % m as u64;
            if k as usize == start {
                break;
            }
            class_of[k as usize] = classes.len();
            orbit.push(k as usize);
        }
        classes.push(orbit);
    }

    Ok(FieldTower {
        q,
        m,
        lambda: lam,
        lambda_order: r,
        ext_degree: e,
        base: Arc::new(base),
        field: Arc::new(field),
        embedding,
        alpha,
        xi,
        roots: RootSystem {
            omega,
            classes,
            class_of,
        },
    })
}

impl FieldTower {
    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn m(&self) -> usize {
        self.m as usize
    }

    /// Twist constant as a label of F_q.
    pub fn lambda(&self) -> Elem {
        self.lambda
    }

    pub fn lambda_order(&self) -> u32 {
        self.lambda_order
    }

    /// Degree of F over F_q.
    pub fn ext_degree(&self) -> u32 {
        self.ext_degree
    }

    /// F_q.
    pub fn base(&self) -> &Arc<Gf> {
        &self.base
    }

    /// F = F_{q^e}.
    pub fn field(&self) -> &Arc<Gf> {
        &self.field
    }

    pub fn embed(&self, x: Elem) -> Elem {
        self.embedding.embed(x)
    }

    pub fn restrict(&self, x: Elem) -> Option<Elem> {
        self.embedding.restrict(x)
    }

    pub fn embedding(&self) -> &Embedding {
        &self.embedding
    }

    pub fn alpha(&self) -> Elem {
        self.alpha
    }

    pub fn xi(&self) -> Elem {
        self.xi
    }

    pub fn omega(&self, k: usize) -> Elem {
        self.roots.omega[k]
    }

    pub fn roots(&self) -> &RootSystem {
        &self.roots
    }

    /// `x^(q^j)`.
    pub fn frobenius(&self, x: Elem, j: u32) -> Elem {
        if x.is_zero() {
            return x;
        }
        let n1 = self.field.order() as u64 - 1;
        let mut e = 1u64 % n1.max(1);
        for _ in 0..j {
            e = e * self.q as u64 % n1.max(1);
        }
        self.field.pow(x, if e == 0 { n1 } else { e })
    }

    /// Trace from F down to F_{q^d}.
    pub fn trace_to_subfield(&self, x: Elem, d: u32) -> Result<Elem> {
        self.check_subfield(d)?;
        Ok((0..self.ext_degree / d).fold(Elem::ZERO, |acc, j| {
            self.field.add(acc, self.frobenius(x, d * j))
        }))
    }

    /// Whether `x` lies in F_{q^d}.
    pub fn in_subfield(&self, x: Elem, d: u32) -> Result<bool> {
        self.check_subfield(d)?;
        Ok(self.frobenius(x, d) == x)
    }

    fn check_subfield(&self, d: u32) -> Result<()> {
        if d == 0 || !self.ext_degree.is_multiple_of(d) {
            Err(Error::NotSubfield {
                d,
                e: self.ext_degree,
            })
        } else {
            Ok(())
        }
    }

    /// Monic irreducible factors of `x^m - lambda` over F_q, one per class, in class order.
    pub fn factors(&self) -> Vec<Poly> {
        let ring = PolyRing::new(&self.field);
        self.roots
            .classes
            .iter()
            .map(|class| {
                let roots: Vec<Elem> = class.iter().map(|&k| self.roots.omega[k]).collect();
                let f = ring.from_roots(&roots);
                Poly::new(
                    f.coeffs()
                        .iter()
                        .map(|&c| self.restrict(c).expect("factor has coefficients in F_q"))
                        .collect(),
                )
            })
            .collect()
    }
}
