//! Finite fields, extension towers and the m-th roots of a twist constant.

mod field;
mod tower;

pub use field::{Elem, Gf, MAX_FIELD_ORDER};
pub use tower::{build_tower, build_tower_with_modulus, Embedding, FieldTower, RootSystem};

/// Splits `q` into `(p, a)` with `q = p^a`, or `None` when `q` is not a prime power.
pub fn prime_power(q: u64) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2u64;
    while p * p <= q {
        if q.is_multiple_of(p) {
            break;
        }
        p += 1;
    }
    if !q.is_multiple_of(p) {
        p = q;
    }
    let (mut rest, mut a) = (q, 0u32);
    while rest % p == 0 {
        rest /= p;
        a += 1;
    }
    (rest == 1).then_some((p as u32, a))
}

/// Conway polynomials for small fields, coefficients from the constant term up.
const CONWAY: &[(u32, &[u32])] = &[
    (2, &[1, 1]),
    (2, &[1, 1, 1]),
    (2, &[1, 1, 0, 1]),
    (2, &[1, 1, 0, 0, 1]),
    (2, &[1, 0, 1, 0, 0, 1]),
    (2, &[1, 1, 0, 1, 1, 0, 1]),
    (2, &[1, 1, 0, 0, 0, 0, 0, 1]),
    (2, &[1, 0, 1, 1, 1, 0, 0, 0, 1]),
    (3, &[1, 1]),
    (3, &[2, 2, 1]),
    (3, &[1, 2, 0, 1]),
    (3, &[2, 0, 0, 2, 1]),
    (3, &[1, 2, 0, 0, 0, 1]),
    (3, &[2, 2, 1, 0, 2, 0, 1]),
    (5, &[3, 1]),
    (5, &[2, 4, 1]),
    (5, &[3, 3, 0, 1]),
    (5, &[2, 4, 4, 0, 1]),
    (7, &[4, 1]),
    (7, &[3, 6, 1]),
    (7, &[4, 0, 6, 1]),
];

/// Conway polynomial of `GF(p^n)` when it is in the built-in table.
pub fn conway(p: u32, n: u32) -> Option<&'static [u32]> {
    CONWAY
        .iter()
        .find(|(q, c)| *q == p && c.len() as u32 == n + 1)
        .map(|(_, c)| *c)
}

pub fn is_prime(n: u64) -> bool {
    matches!(prime_power(n), Some((_, 1)))
}

pub(crate) fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_powers() {
        assert_eq!(prime_power(2), Some((2, 1)));
        assert_eq!(prime_power(9), Some((3, 2)));
        assert_eq!(prime_power(64), Some((2, 6)));
        assert_eq!(prime_power(6), None);
        assert_eq!(prime_power(1), None);
        assert!(is_prime(13) && !is_prime(27));
        assert_eq!(prime_factors(728), vec![2, 7, 13]);
    }

    #[test]
    fn conway_table_is_primitive() {
        for &(p, c) in CONWAY {
            let f = Gf::with_modulus(p, c).unwrap();
            let x = if c.len() == 2 {
                f.neg(Elem(c[0]))
            } else {
                Elem(p)
            };
            assert_eq!(f.mult_order(x), f.order() - 1, "p={p} {c:?}");
        }
        assert_eq!(conway(3, 4), Some(&[2, 0, 0, 2, 1][..]));
        assert_eq!(conway(2, 20), None);
    }
}
