//! Structural checks of one code against the theory behind the bounds.
//!
//! Each check is named by a letter:
//! a  d is at least every bound
//! b  the eigenvalue parity-check matrix has rank mℓ - k and kills the code
//! c  algebraic and geometric multiplicities agree
//! d  the eigenvalue set is a union of conjugacy classes
//! e  non-full constituents are no better than the eigencode of all eigenvalues
//! f  Jensen beats min(d(D_Ω̄), d(ℂ_Ω̄))
//! g  with every root an eigenvalue, Lally beats d(ℂ_Ω) and B ⊆ ℂ_Ω
//! h  with every root an eigenvalue, C = 0 iff ℂ_Ω = 0
//! i  dimension from the scalar matrix, the diagonal degrees and the constituents agree
//! j  the eigencode as base solutions equals the trace code of the eigenvalue row spaces
//! k  trace reconstruction of constituent words is a codeword evaluating back

use qtbounds::concat::{constituents, jensen_from, trace_reconstruct, ConstituentKind};
use qtbounds::constabounds::{Family, ZeroSet};
use qtbounds::context::BoundContext;
use qtbounds::galois::Elem;
use qtbounds::lally::{lally_bound, row_code};
use qtbounds::linalg::{ExtNat, LinearCode, Mat};
use qtbounds::qtcode::QtCode;
use qtbounds::spectral::{eigencode, parity_check, spectral_bound_with, Spectrum};
use qtbounds::Error;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::random::random_in_subfield;

pub const PROPERTIES: &str = "abcdefghijk";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub property: char,
    pub detail: String,
}

#[derive(Clone, Debug, Default)]
pub struct AuditReport {
    pub violations: Vec<Violation>,
    /// Properties actually checked on this code.
    pub checked: Vec<char>,
    pub distance: Option<ExtNat>,
}

impl AuditReport {
    fn check(&mut self, property: char, ok: bool, detail: impl FnOnce() -> String) {
        if !self.checked.contains(&property) {
            self.checked.push(property);
        }
        if !ok {
            self.violations.push(Violation {
                property,
                detail: detail(),
            });
        }
    }
}

/// The F_q-span of `Tr(b w)` over the rows w of `rows` and an F_p-basis b of F.
pub fn trace_code(ctx: &BoundContext, rows: &Mat) -> LinearCode {
    let t = ctx.tower();
    let f = t.field();
    let p = f.characteristic();
    let mut out = Mat::zeros(0, rows.cols());
    for w in rows.row_vecs() {
        for i in 0..f.degree() {
            let b = Elem(p.pow(i));
            let v: Vec<Elem> = w
                .iter()
                .map(|&x| {
                    let tr = t.trace_to_subfield(f.mul(b, x), 1).expect("trace to F_q");
                    t.restrict(tr).expect("trace lands in F_q")
                })
                .collect();
            out.push_row(&v).expect("row length");
        }
    }
    LinearCode::new(t.base().clone(), &out)
}

pub fn audit(code: &QtCode, ctx: &BoundContext, seed: u64) -> qtbounds::Result<AuditReport> {
    let cfg = ctx.config();
    let (budget, strategy) = (cfg.budget, cfg.strategy);
    let t = code.tower();
    let f = t.field();
    let (m, ell) = (code.m(), code.ell());
    let n = m * ell;
    let mut rep = AuditReport::default();

    let sp = Spectrum::of(code);
    let scalar = code.scalar_code();
    let k = code.dimension();
    let cons = constituents(code, budget)?;

    let diag_deg: usize = (0..ell)
        .map(|j| code.reduced().diag(j).degree().expect("nonzero diagonal"))
        .sum();
    let crt: usize = cons.iter().map(|c| c.degree * c.rank()).sum();
    rep.check(
        'i',
        scalar.dim() == k && k == n - diag_deg && crt == k,
        || {
            format!(
                "scalar {} reduced {k} diagonal {} constituents {crt}",
                scalar.dim(),
                n - diag_deg
            )
        },
    );

    if sp.eigen.is_empty() {
        rep.check('b', k == n, || {
            format!("no eigenvalues but dimension {k} < {n}")
        });
    } else {
        let h = parity_check(code, &sp);
        let rank = h.rank(f);
        let kills = scalar.generator().row_vecs().iter().all(|row| {
            let lifted: Vec<Elem> = row.iter().map(|&x| t.embed(x)).collect();
            h.mul_vec(&lifted, f).iter().all(|x| x.is_zero())
        });
        rep.check('b', rank == n - k && kills, || {
            format!("rank {rank} vs {}; annihilates: {kills}", n - k)
        });
    }

    let total_mult: usize = sp.multiplicity.iter().sum();
    rep.check(
        'c',
        sp.multiplicities_agree() && total_mult == diag_deg,
        || {
            format!(
                "multiplicities {:?}, diagonal degree {diag_deg}",
                sp.multiplicity
            )
        },
    );

    let classes = t.roots().classes();
    let closed = classes.iter().all(|cl| {
        let inside = cl.iter().filter(|&&k| sp.eigen.contains(k)).count();
        inside == 0 || inside == cl.len()
    });
    rep.check('d', closed, || {
        format!("eigenvalues {:?} split a class", sp.eigen.indices())
    });

    let full = ZeroSet::full(m);
    let bar_code = (!sp.eigen.is_empty()).then(|| eigencode(code, &sp, sp.eigen));
    let d_bar = match &bar_code {
        Some(c) => Some(c.min_distance(strategy, budget)?),
        None => None,
    };

    if let Some(d_bar) = d_bar {
        for c in cons.iter().filter(|c| c.kind != ConstituentKind::Full) {
            rep.check('e', c.distance >= d_bar, || {
                format!("class {} distance {} < {d_bar}", c.class, c.distance)
            });
        }
    }

    let jensen = jensen_from(&cons, ctx)?;
    if let Some(d_bar) = d_bar {
        let d_d = ctx.dist_true(sp.eigen)?;
        rep.check('f', jensen.value >= d_d.min(d_bar), || {
            format!("d_J {} < min({d_d}, {d_bar})", jensen.value)
        });
    }

    let lally = lally_bound(code, strategy, budget)?;
    if sp.eigen == full {
        let omega_code = bar_code.as_ref().expect("nonempty eigenvalues");
        let d_omega = d_bar.expect("nonempty eigenvalues");
        let b = row_code(code);
        let inside = b
            .generator()
            .row_vecs()
            .iter()
            .all(|r| omega_code.contains(r));
        rep.check('g', lally.value >= d_omega && inside, || {
            format!("d_L {} vs {d_omega}; B inside: {inside}", lally.value)
        });
        rep.check('h', code.is_zero() == omega_code.is_zero(), || {
            format!(
                "zero code {} but eigencode zero {}",
                code.is_zero(),
                omega_code.is_zero()
            )
        });
    }

    if let Some(route1) = &bar_code {
        let mut rows = Mat::zeros(0, ell);
        for k in sp.eigen.indices() {
            rows = rows.stack(&sp.evals[k])?;
        }
        let route2 = trace_code(ctx, &rows.echelon(f).mat);
        rep.check('j', route1.same_code(&route2), || {
            format!("dims {} vs {}", route1.dim(), route2.dim())
        });
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let kappas: Vec<Option<Vec<Elem>>> = cons
        .iter()
        .map(|c| {
            (c.rank() > 0).then(|| {
                let mut v = vec![Elem::ZERO; ell];
                for row in c.basis.row_vecs() {
                    let a = random_in_subfield(t, c.degree as u32, &mut rng);
                    for (x, y) in v.iter_mut().zip(row) {
                        *x = f.add(*x, f.mul(a, y));
                    }
                }
                v
            })
        })
        .collect();
    let word = trace_reconstruct(t, ell, &kappas)?;
    let mut back = scalar.contains(&word);
    let mfac = f.scalar(m as u64);
    for (c, kappa) in cons.iter().zip(&kappas) {
        let w = t.omega(c.rep);
        for j in 0..ell {
            let val = (0..m).rev().fold(Elem::ZERO, |acc, i| {
                f.add(f.mul(acc, w), t.embed(word[i * ell + j]))
            });
            let want = kappa.as_ref().map_or(Elem::ZERO, |kv| f.mul(mfac, kv[j]));
            back &= val == want;
        }
    }
    rep.check('k', back, || {
        "reconstructed word is not a codeword or does not evaluate back".into()
    });

    let d = match code.exact_min_distance(strategy, budget) {
        Ok(d) => Some(d),
        Err(Error::BudgetExceeded(_)) => None,
        Err(e) => return Err(e),
    };
    rep.distance = d;
    if let Some(d) = d {
        let mut bounds = vec![
            ("L".to_string(), lally.value),
            ("J".to_string(), jensen.value),
        ];
        for fam in Family::ALL {
            bounds.push((
                fam.to_string(),
                spectral_bound_with(code, &sp, ctx, &[fam])?.value,
            ));
        }
        bounds.push((
            "Bu".to_string(),
            spectral_bound_with(code, &sp, ctx, &cfg.union)?.value,
        ));
        for (name, b) in bounds {
            rep.check('a', d >= b, || format!("d = {d} < {name} = {b}"));
        }
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use qtbounds::galois::build_tower;
    use std::sync::Arc;

    #[test]
    fn clean_on_small_codes() {
        for (q, m, lambda) in [(2, 7, 1), (3, 4, 2), (3, 5, 1)] {
            let ctx = BoundContext::with_defaults(Arc::new(build_tower(q, m, lambda).unwrap()));
            for seed in 0..20 {
                let code = crate::random::random_qt(ctx.tower(), 2, 1 + seed as usize % 2, seed);
                let rep = audit(&code, &ctx, seed).unwrap();
                assert!(
                    rep.violations.is_empty(),
                    "{q} {m} {lambda} {seed}: {:?}",
                    rep.violations
                );
                assert!(rep.checked.contains(&'a') && rep.checked.contains(&'k'));
            }
        }
    }

    #[test]
    fn trace_code_of_one_row() {
        let ctx = BoundContext::with_defaults(Arc::new(build_tower(2, 7, 1).unwrap()));
        let f = ctx.tower().field();
        let rows = Mat::from_rows(2, &[vec![Elem::ONE, ctx.tower().omega(0)]]).unwrap();
        let tc = trace_code(&ctx, &rows.echelon(f).mat);
        // omega_0 has degree 3 over F_2, so the traces of b and b omega_0 are independent.
        assert_eq!((tc.len(), tc.dim()), (2, 2));
    }
}
