//! Full single-code report for the `bounds` subcommand.

use std::fmt;

use qtbounds::concat::{constituents, jensen_from};
use qtbounds::constabounds::Family;
use qtbounds::context::BoundContext;
use qtbounds::lally::{lally_bound_in, LallyBasis};
use qtbounds::linalg::ExtNat;
use qtbounds::qtcode::QtCode;
use qtbounds::spectral::{spectral_bound_with, Spectrum};
use serde::Serialize;

use crate::evaluate::Pattern;

fn show(v: ExtNat) -> String {
    v.to_string()
}

#[derive(Clone, Debug, Serialize)]
pub struct SpectralLine {
    pub families: String,
    pub value: String,
    pub witness: Option<Vec<usize>>,
    pub d_p: String,
    pub eigencode_distance: String,
    pub exhaustive: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConstituentLine {
    pub class: Vec<usize>,
    pub degree: usize,
    pub rank: usize,
    pub distance: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct CodeReport {
    pub q: u32,
    pub m: usize,
    pub ell: usize,
    pub lambda: u32,
    pub length: usize,
    pub dimension: usize,
    pub eigenvalues: Vec<usize>,
    pub d: Option<String>,
    pub d_l: String,
    pub d_b: String,
    pub d_hat: String,
    pub d_j: String,
    pub jensen_terms: Vec<String>,
    pub constituents: Vec<ConstituentLine>,
    pub spectral: Vec<SpectralLine>,
    pub d_spec: String,
    pub pattern: String,
}

fn family_label(fams: &[Family]) -> String {
    fams.iter()
        .map(|f| f.to_string())
        .collect::<Vec<_>>()
        .join("+")
}

/// Bounds over each requested family separately, then over their union
/// (which is `d_Spec` in the report).
pub fn code_report(
    code: &QtCode,
    ctx: &BoundContext,
    families: &[Family],
    basis: LallyBasis,
) -> qtbounds::Result<CodeReport> {
    let cfg = ctx.config();
    let t = code.tower();
    let sp = Spectrum::of(code);
    let lally = lally_bound_in(code, basis, cfg.strategy, cfg.budget)?;
    let cons = constituents(code, cfg.budget)?;
    let jensen = jensen_from(&cons, ctx)?;
    let mut groups: Vec<Vec<Family>> = families.iter().map(|&f| vec![f]).collect();
    if families.len() > 1 {
        groups.push(families.to_vec());
    }
    let mut spectral = Vec::new();
    let mut d_spec = ExtNat::Infinite;
    for g in &groups {
        let r = spectral_bound_with(code, &sp, ctx, g)?;
        d_spec = r.value;
        spectral.push(SpectralLine {
            families: family_label(g),
            value: show(r.value),
            witness: r.witness.map(|w| w.indices()),
            d_p: show(r.d_p),
            eigencode_distance: show(r.eigencode_distance),
            exhaustive: r.exhaustive,
        });
    }
    let d = match code.exact_min_distance(cfg.strategy, cfg.budget) {
        Ok(d) => Some(show(d)),
        Err(qtbounds::Error::BudgetExceeded(_)) => None,
        Err(e) => return Err(e),
    };
    let classes = t.roots().classes();
    Ok(CodeReport {
        q: t.q(),
        m: t.m(),
        ell: code.ell(),
        lambda: t.lambda().0,
        length: code.len(),
        dimension: code.dimension(),
        eigenvalues: sp.eigen.indices(),
        d,
        d_l: show(lally.value),
        d_b: show(lally.d_b),
        d_hat: show(lally.d_hat),
        d_j: show(jensen.value),
        jensen_terms: jensen.terms.iter().map(|&v| show(v)).collect(),
        constituents: cons
            .iter()
            .map(|c| ConstituentLine {
                class: classes[c.class].clone(),
                degree: c.degree,
                rank: c.rank(),
                distance: show(c.distance),
            })
            .collect(),
        spectral,
        d_spec: show(d_spec),
        pattern: Pattern::of(lally.value, d_spec, jensen.value).to_string(),
    })
}

impl fmt::Display for CodeReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "[{}, {}] code over F_{}, m = {}, ell = {}, lambda = {}",
            self.length, self.dimension, self.q, self.m, self.ell, self.lambda
        )?;
        writeln!(f, "eigenvalue indices: {:?}", self.eigenvalues)?;
        writeln!(
            f,
            "d      = {}",
            self.d.as_deref().unwrap_or("NA (budget exceeded)")
        )?;
        writeln!(
            f,
            "d_L    = {} (d(B) = {}, d(C^) = {})",
            self.d_l, self.d_b, self.d_hat
        )?;
        writeln!(
            f,
            "d_J    = {} (prefix terms {})",
            self.d_j,
            self.jensen_terms.join(", ")
        )?;
        for s in &self.spectral {
            let w = s
                .witness
                .as_ref()
                .map_or("-".to_string(), |w| format!("{w:?}"));
            writeln!(
                f,
                "d_Spec({}) = {} (P = {w}, d_P = {}, d(C_P) = {}{})",
                s.families,
                s.value,
                s.d_p,
                s.eigencode_distance,
                if s.exhaustive { "" } else { ", capped" }
            )?;
        }
        writeln!(f, "constituents:")?;
        for c in &self.constituents {
            writeln!(
                f,
                "  class {:?} degree {} rank {} distance {}",
                c.class, c.degree, c.rank, c.distance
            )?;
        }
        write!(f, "pattern: {}", self.pattern)
    }
}
