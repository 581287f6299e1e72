use std::sync::Arc;

use super::{min_distance, ExtNat, Mat, Strategy};
use crate::error::{Error, Result};
use crate::galois::{Elem, Embedding, Gf};

/// Linear code given by a generator matrix in reduced row echelon form.
#[derive(Clone, Debug)]
pub struct LinearCode {
    field: Arc<Gf>,
    gen: Mat,
    pivots: Vec<usize>,
}

impl LinearCode {
    /// Row space of `gen` (any spanning set).
    pub fn new(field: Arc<Gf>, gen: &Mat) -> LinearCode {
        let e = gen.echelon(&field);
        LinearCode {
            field,
            gen: e.mat,
            pivots: e.pivots,
        }
    }

    pub fn zero(field: Arc<Gf>, len: usize) -> LinearCode {
        LinearCode {
            field,
            gen: Mat::zeros(0, len),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: Arc<Gf>, len: usize) -> LinearCode {
        LinearCode {
            field,
            gen: Mat::identity(len),
            pivots: (0..len).collect(),
        }
    }

    /// Kernel of a parity-check matrix.
    pub fn from_parity(field: Arc<Gf>, h: &Mat) -> LinearCode {
        let k = h.right_kernel(&field);
        LinearCode::new(field, &k)
    }

    pub fn field(&self) -> &Arc<Gf> {
        &self.field
    }

    pub fn len(&self) -> usize {
        self.gen.cols()
    }

    pub fn is_empty(&self) -> bool {
        self.gen.cols() == 0
    }

    pub fn dim(&self) -> usize {
        self.gen.rows()
    }

    pub fn generator(&self) -> &Mat {
        &self.gen
    }

    /// Pivot columns of the echelon generator, an information set.
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.len()
    }

    pub fn dual(&self) -> LinearCode {
        LinearCode::new(self.field.clone(), &self.gen.right_kernel(&self.field))
    }

    pub fn parity_check(&self) -> Mat {
        self.gen.right_kernel(&self.field)
    }

    pub fn contains(&self, v: &[Elem]) -> bool {
        v.len() == self.len() && self.gen.spans(v, &self.field)
    }

    pub fn same_code(&self, other: &LinearCode) -> bool {
        self.field == other.field && self.gen == other.gen
    }

    pub fn min_distance(&self, strategy: Strategy, budget: u64) -> Result<ExtNat> {
        min_distance(self, strategy, budget)
    }

    /// Codeword `a G` for a message of length `dim`.
    pub fn encode(&self, msg: &[Elem]) -> Result<Vec<Elem>> {
        if msg.len() != self.dim() {
            return Err(Error::Shape(format!(
                "message of length {} for dimension {}",
                msg.len(),
                self.dim()
            )));
        }
        let f = &self.field;
        let mut out = vec![Elem::ZERO; self.len()];
        for (i, &a) in msg.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (o, &g) in out.iter_mut().zip(self.gen.row(i)) {
                *o = f.add(*o, f.mul(a, g));
            }
        }
        Ok(out)
    }
}

/// The F_q-rational solutions `u` of `V u^T = 0`, for `V` over an extension `big`
/// of `base` with the given embedding.
///
/// Each equation over `big` is expanded into its coordinates over F_p, with
/// every unknown of F_q written in the polynomial basis of F_q over F_p.
pub fn base_solutions(v: &Mat, big: &Gf, base: &Arc<Gf>, embedding: &Embedding) -> LinearCode {
    let len = v.cols();
    if v.rows() == 0 {
        return LinearCode::full(base.clone(), len);
    }
    let p = big.characteristic();
    let a = base.degree() as usize;
    let eps: Vec<Elem> = (0..a)
        .map(|s| embedding.embed(Elem(p.pow(s as u32))))
        .collect();
    let fp = Gf::prime(p).expect("characteristic is prime");
    let mut eq = Mat::zeros(v.rows() * big.degree() as usize, len * a);
    for r in 0..v.rows() {
        for j in 0..len {
            for (s, &e) in eps.iter().enumerate() {
                let x = big.mul(v.get(r, j), e);
                for t in 0..big.degree() {
                    eq.set(
                        r * big.degree() as usize + t as usize,
                        j * a + s,
                        Elem(big.coord(x, t)),
                    );
                }
            }
        }
    }
    let ker = eq.right_kernel(&fp);
    let rows: Vec<Vec<Elem>> = (0..ker.rows())
        .map(|i| {
            (0..len)
                .map(|j| {
                    let digits: Vec<u32> = (0..a).map(|s| ker.get(i, j * a + s).0).collect();
                    base.from_coords(&digits)
                })
                .collect()
        })
        .collect();
    LinearCode::new(
        base.clone(),
        &Mat::from_rows(len, &rows).expect("uniform rows"),
    )
}
