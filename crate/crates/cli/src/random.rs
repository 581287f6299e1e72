//! Seeded random quasi-twisted codes.

use std::sync::Arc;

use qtbounds::galois::{Elem, FieldTower};
use qtbounds::qtcode::QtCode;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Shape of one batch of random codes: `rows` generators of index `ell`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tuple {
    pub q: u32,
    pub m: u32,
    pub lambda: u32,
    pub ell: usize,
    pub rows: usize,
}

fn splitmix(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9e37_79b9_7f4a_7c15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Seed of code `index` of `tuple` in a run with master seed `seed`.
pub fn code_seed(seed: u64, tuple: Tuple, index: u64) -> u64 {
    let mut state = seed;
    let mut out = splitmix(&mut state);
    for word in [
        tuple.q as u64,
        tuple.m as u64,
        tuple.lambda as u64,
        tuple.ell as u64,
        tuple.rows as u64,
        index,
    ] {
        state ^= word.wrapping_add(out);
        out = splitmix(&mut state);
    }
    out
}

/// `rows · ell` polynomials of degree below m with uniform coefficients.
pub fn random_polys(q: u32, m: usize, ell: usize, rows: usize, seed: u64) -> Vec<Vec<Vec<u32>>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..rows)
        .map(|_| {
            (0..ell)
                .map(|_| (0..m).map(|_| rng.gen_range(0..q)).collect())
                .collect()
        })
        .collect()
}

pub fn random_qt(tower: &Arc<FieldTower>, ell: usize, rows: usize, seed: u64) -> QtCode {
    let polys = random_polys(tower.q(), tower.m(), ell, rows, seed);
    QtCode::from_labels(tower.clone(), ell, &polys).expect("coefficients are labels of F_q")
}

/// Uniform element of the subfield of F of degree `d` over F_q.
pub fn random_in_subfield(tower: &FieldTower, d: u32, rng: &mut impl Rng) -> Elem {
    let f = tower.field();
    let x = Elem(rng.gen_range(0..f.order()));
    tower
        .trace_to_subfield(x, d)
        .expect("d divides the extension degree")
}

/// Codeword of the code spanned by the rows of `code.scalar_code()`, uniform.
pub fn random_codeword(code: &QtCode, rng: &mut impl Rng) -> Vec<Elem> {
    let lin = code.scalar_code();
    let q = code.tower().q();
    let msg: Vec<Elem> = (0..lin.dim()).map(|_| Elem(rng.gen_range(0..q))).collect();
    lin.encode(&msg).expect("message of length k")
}

#[cfg(test)]
mod tests {
    use super::*;
    use qtbounds::galois::build_tower;

    #[test]
    fn deterministic() {
        let t = Arc::new(build_tower(3, 5, 2).unwrap());
        let a = random_qt(&t, 3, 2, 99);
        let b = random_qt(&t, 3, 2, 99);
        assert_eq!(a.generators(), b.generators());
        let c = random_qt(&t, 3, 2, 100);
        assert_ne!(a.generators(), c.generators());
        assert!(random_qt(&t, 3, 0, 1).is_zero());
    }

    #[test]
    fn seeds_separate_tuples() {
        let a = Tuple {
            q: 2,
            m: 7,
            lambda: 1,
            ell: 2,
            rows: 1,
        };
        let b = Tuple { ell: 3, ..a };
        assert_ne!(code_seed(1, a, 0), code_seed(1, b, 0));
        assert_ne!(code_seed(1, a, 0), code_seed(1, a, 1));
        assert_ne!(code_seed(1, a, 0), code_seed(2, a, 0));
        assert_eq!(code_seed(1, a, 5), code_seed(1, a, 5));
    }

    #[test]
    fn coefficient_bits_are_uniform() {
        // 1000 draws of 6 bits each; chi-square with one degree of freedom per bit.
        let mut ones = [0u32; 6];
        for i in 0..1000 {
            let p = random_polys(
                2,
                3,
                2,
                1,
                code_seed(
                    7,
                    Tuple {
                        q: 2,
                        m: 3,
                        lambda: 1,
                        ell: 2,
                        rows: 1,
                    },
                    i,
                ),
            );
            for (k, &c) in p[0].iter().flatten().enumerate() {
                ones[k] += c;
            }
        }
        for &o in &ones {
            let chi = (o as f64 - 500.0).powi(2) / 250.0;
            assert!(chi < 10.83, "bit count {o}");
        }
    }
}
