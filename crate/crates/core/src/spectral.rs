//! Eigenvalues, eigenspaces and the spectral bound of a quasi-twisted code.

use std::collections::HashMap;

use crate::constabounds::{DefSetBound, Family, Witness, ZeroSet};
use crate::context::BoundContext;
use crate::error::Result;
use crate::galois::Elem;
use crate::linalg::{ExtNat, LinearCode, Mat};
use crate::qtcode::QtCode;

/// Eigenvalue data: `omega_k` is an eigenvalue when some diagonal entry of the
/// reduced basis vanishes there; its eigenspace is the right kernel of `G~(omega_k)`.
#[derive(Clone, Debug)]
pub struct Spectrum {
    /// Indices k of the eigenvalues, the set Omega-bar.
    pub eigen: ZeroSet,
    /// Algebraic multiplicity at every k (number of vanishing diagonal entries).
    pub multiplicity: Vec<usize>,
    /// `G~(omega_k)` for every k.
    pub evals: Vec<Mat>,
    /// Basis rows of the eigenspace at every k (empty away from eigenvalues).
    pub eigenbases: Vec<Mat>,
}

impl Spectrum {
    pub fn of(code: &QtCode) -> Spectrum {
        let t = code.tower();
        let f = t.field();
        let ell = code.ell();
        let mut eigen = ZeroSet::EMPTY;
        let mut multiplicity = Vec::with_capacity(t.m());
        let mut evals = Vec::with_capacity(t.m());
        let mut eigenbases = Vec::with_capacity(t.m());
        for k in 0..t.m() {
            let g = code.eval_basis(t.omega(k));
            let mult = (0..ell).filter(|&j| g.get(j, j).is_zero()).count();
            if mult > 0 {
                eigen = eigen.union(ZeroSet::from_indices([k]));
            }
            multiplicity.push(mult);
            eigenbases.push(g.right_kernel(f));
            evals.push(g);
        }
        Spectrum {
            eigen,
            multiplicity,
            evals,
            eigenbases,
        }
    }

    /// Geometric multiplicity equals algebraic multiplicity at every root.
    pub fn multiplicities_agree(&self) -> bool {
        self.eigenbases
            .iter()
            .zip(&self.multiplicity)
            .all(|(v, &mu)| v.rows() == mu)
    }

    /// Basis of the common eigenspace of `P`: the kernel of the stacked `G~(beta)`.
    pub fn common_eigenspace(&self, p: ZeroSet, ell: usize, code: &QtCode) -> Mat {
        let f = code.tower().field();
        let mut stack = Mat::zeros(0, ell);
        for k in p.indices() {
            stack = stack.stack(&self.evals[k]).expect("ℓ columns");
        }
        stack.right_kernel(f)
    }
}

/// Parity-check matrix over F with a block `(1, beta, ..., beta^(m-1)) ⊗ V_beta`
/// per eigenvalue, columns in the flat order `k ℓ + j`.
pub fn parity_check(code: &QtCode, sp: &Spectrum) -> Mat {
    let t = code.tower();
    let f = t.field();
    let (m, ell) = (code.m(), code.ell());
    let mut h = Mat::zeros(0, m * ell);
    for k in sp.eigen.indices() {
        let beta = t.omega(k);
        let v = &sp.eigenbases[k];
        for r in 0..v.rows() {
            let mut row = vec![Elem::ZERO; m * ell];
            for i in 0..m {
                let bi = f.pow(beta, i as u64);
                for j in 0..ell {
                    row[i * ell + j] = f.mul(bi, v.get(r, j));
                }
            }
            h.push_row(&row).expect("row of length m ℓ");
        }
    }
    h
}

/// The eigencode of `P`: vectors of F_q^ℓ orthogonal to the common eigenspace of `P`.
pub fn eigencode(code: &QtCode, sp: &Spectrum, p: ZeroSet) -> LinearCode {
    let v = sp.common_eigenspace(p, code.ell(), code);
    code.base_solutions(&v)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundReport {
    pub value: ExtNat,
    /// Winning subset P of the eigenvalues.
    pub witness: Option<ZeroSet>,
    pub family: Option<Family>,
    /// Family bound on the constacyclic code with zeros P.
    pub d_p: ExtNat,
    pub eigencode_distance: ExtNat,
    pub family_witness: Option<Witness>,
    /// False when a subset cap cut the search short.
    pub exhaustive: bool,
}

impl BoundReport {
    fn trivial(value: ExtNat) -> BoundReport {
        BoundReport {
            value,
            witness: None,
            family: None,
            d_p: value,
            eigencode_distance: value,
            family_witness: None,
            exhaustive: true,
        }
    }
}

/// Spectral bound over the union of `families`:
/// `max over P of min(d_P, d(eigencode(P)))`.
///
/// Subsets are scanned by size then colex order, so the reported witness is
/// the first subset reaching the maximum.
pub fn spectral_bound(
    code: &QtCode,
    ctx: &BoundContext,
    families: &[Family],
) -> Result<BoundReport> {
    let sp = Spectrum::of(code);
    spectral_bound_with(code, &sp, ctx, families)
}

pub fn spectral_bound_with(
    code: &QtCode,
    sp: &Spectrum,
    ctx: &BoundContext,
    families: &[Family],
) -> Result<BoundReport> {
    if sp.eigen.is_empty() {
        return Ok(BoundReport::trivial(ExtNat::Finite(1)));
    }
    let mut exhaustive = true;
    let mut best_per_set: HashMap<ZeroSet, DefSetBound> = HashMap::new();
    let use_exact_only = families.contains(&Family::B1) && {
        let t = ctx.family(sp.eigen, Family::B1)?;
        t.exhaustive
    };
    for &fam in families {
        // With an exhaustive B1 scan every subset already carries its exact
        // value, which no other family can exceed.
        if use_exact_only && fam != Family::B1 {
            continue;
        }
        let table = ctx.family(sp.eigen, fam)?;
        exhaustive &= table.exhaustive;
        for b in &table.bounds {
            match best_per_set.get(&b.subset) {
                Some(old) if old.value >= b.value => {}
                _ => {
                    best_per_set.insert(b.subset, *b);
                }
            }
        }
    }
    let mut candidates: Vec<DefSetBound> = best_per_set.into_values().collect();
    candidates.sort_by_key(|b| (b.subset.len(), b.subset));

    let budget = ctx.config().budget;
    let strategy = ctx.config().strategy;
    let mut eig_cache: HashMap<ZeroSet, ExtNat> = HashMap::new();
    let mut best: Option<BoundReport> = None;
    for b in candidates {
        if best.as_ref().is_some_and(|r| r.value >= b.value) {
            continue;
        }
        let eig = match eig_cache.get(&b.subset) {
            Some(&d) => d,
            None => {
                let d = eigencode(code, sp, b.subset).min_distance(strategy, budget)?;
                eig_cache.insert(b.subset, d);
                d
            }
        };
        let value = b.value.min(eig);
        if best.as_ref().is_none_or(|r| value > r.value) {
            best = Some(BoundReport {
                value,
                witness: Some(b.subset),
                family: Some(b.family),
                d_p: b.value,
                eigencode_distance: eig,
                family_witness: Some(b.witness),
                exhaustive,
            });
        }
    }
    Ok(best.unwrap_or_else(|| BoundReport::trivial(ExtNat::Finite(1))))
}

/// Spectral bound through shift-independent sets of the eigenvalues.
pub fn shift_spectral_bound(code: &QtCode, ctx: &BoundContext) -> Result<BoundReport> {
    spectral_bound(code, ctx, &[Family::B5])
}

/// Spectral bound over the configured union `B_u`.
pub fn union_spectral_bound(code: &QtCode, ctx: &BoundContext) -> Result<BoundReport> {
    let fams = ctx.config().union.clone();
    spectral_bound(code, ctx, &fams)
}
