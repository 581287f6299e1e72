//! Built-in corpus of codes with known distances and bound values.

use std::fmt;
use std::sync::Arc;

use qtbounds::concat::jensen_bound;
use qtbounds::constabounds::{Family, ZeroSet};
use qtbounds::context::{BoundConfig, BoundContext};
use qtbounds::galois::{build_tower_with_modulus, conway};
use qtbounds::lally::lally_bound;
use qtbounds::linalg::ExtNat;
use qtbounds::qtcode::QtCode;
use qtbounds::spectral::{eigencode, spectral_bound, Spectrum};

/// A quantity computed for a golden code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Quantity {
    Dimension,
    Distance,
    Lally,
    Jensen,
    Spectral(Vec<Family>),
    /// Size of the first subset reaching the B1 spectral bound.
    WitnessSize,
    /// Eigencode distance at that subset.
    WitnessEigencode,
    /// `d_P` of the exact family at a fixed subset.
    SubsetDp(ZeroSet),
    SubsetEigencode(ZeroSet),
    /// `min(d_P, d(eigencode(P)))` at a fixed subset.
    SubsetValue(ZeroSet),
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Quantity::Dimension => write!(f, "k"),
            Quantity::Distance => write!(f, "d"),
            Quantity::Lally => write!(f, "d_L"),
            Quantity::Jensen => write!(f, "d_J"),
            Quantity::Spectral(fams) if fams.len() == 4 => write!(f, "d_Spec(Bu)"),
            Quantity::Spectral(fams) => {
                let names: Vec<String> = fams.iter().map(|x| format!("{x:?}")).collect();
                write!(f, "d_Spec({})", names.join("+"))
            }
            Quantity::WitnessSize => write!(f, "|P| of B1 witness"),
            Quantity::WitnessEigencode => write!(f, "d(C_P) of B1 witness"),
            Quantity::SubsetDp(p) => write!(f, "d_P at {:?}", p.indices()),
            Quantity::SubsetEigencode(p) => write!(f, "d(C_P) at {:?}", p.indices()),
            Quantity::SubsetValue(p) => write!(f, "min(d_P, d(C_P)) at {:?}", p.indices()),
        }
    }
}

pub struct GoldenCode {
    pub name: &'static str,
    pub q: u32,
    pub m: u32,
    pub lambda: u32,
    pub ell: usize,
    /// Degree of the Conway modulus used for the splitting field, if any.
    pub conway_degree: Option<u32>,
    pub generators: Vec<Vec<u32>>,
    pub expected: Vec<(Quantity, ExtNat)>,
}

impl GoldenCode {
    pub fn build(&self) -> qtbounds::Result<QtCode> {
        let modulus = self.conway_degree.and_then(|n| conway(self.q, n));
        let t = Arc::new(build_tower_with_modulus(
            self.q,
            self.m,
            self.lambda,
            modulus,
        )?);
        let rows: Vec<Vec<Vec<u32>>> = self
            .generators
            .chunks(self.ell)
            .map(|c| c.to_vec())
            .collect();
        QtCode::from_labels(t, self.ell, &rows)
    }
}

fn fin(v: u64) -> ExtNat {
    ExtNat::Finite(v)
}

fn union() -> Vec<Family> {
    vec![Family::B1, Family::B2, Family::B3, Family::B4]
}

fn per_family(values: [u64; 4]) -> Vec<(Quantity, ExtNat)> {
    [Family::B1, Family::B2, Family::B3, Family::B4]
        .into_iter()
        .zip(values)
        .map(|(f, v)| (Quantity::Spectral(vec![f]), fin(v)))
        .collect()
}

pub fn corpus() -> Vec<GoldenCode> {
    use Quantity::*;
    let set = |v: &[usize]| ZeroSet::from_indices(v.iter().copied());
    vec![
        GoldenCode {
            name: "[14,7,4]_3 2-QT (m=7, ell=2)",
            q: 3,
            m: 7,
            lambda: 2,
            ell: 2,
            conway_degree: Some(6),
            generators: vec![vec![2, 0, 1, 1, 0, 2], vec![0, 0, 1, 1, 0, 1]],
            expected: [
                vec![
                    (Dimension, fin(7)),
                    (Distance, fin(4)),
                    (Jensen, fin(2)),
                    (Spectral(union()), fin(4)),
                ],
                per_family([4, 3, 3, 3]),
                vec![(WitnessSize, fin(3)), (WitnessEigencode, ExtNat::Infinite)],
                vec![
                    (SubsetDp(set(&[0])), fin(2)),
                    (SubsetEigencode(set(&[0])), ExtNat::Infinite),
                    (SubsetValue(set(&[0])), fin(2)),
                    (SubsetDp(set(&[0, 3])), fin(3)),
                    (SubsetEigencode(set(&[0, 3])), fin(1)),
                    (SubsetValue(set(&[0, 3])), fin(1)),
                    (SubsetValue(set(&[0, 4])), fin(3)),
                ],
            ]
            .concat(),
        },
        GoldenCode {
            name: "[20,10,4]_3 2-QT (m=10, ell=2)",
            q: 3,
            m: 10,
            lambda: 2,
            ell: 2,
            conway_degree: Some(4),
            generators: vec![vec![1, 1, 1, 0, 0, 0, 0, 2, 2], vec![2, 1, 0, 0, 1, 2, 2]],
            expected: [
                vec![
                    (Dimension, fin(10)),
                    (Distance, fin(4)),
                    (Lally, fin(1)),
                    (Jensen, fin(2)),
                    (Spectral(union()), fin(4)),
                    (WitnessSize, fin(3)),
                    (WitnessEigencode, ExtNat::Infinite),
                    (SubsetValue(set(&[6, 7, 8])), fin(4)),
                    (SubsetValue(set(&[2, 5, 9])), fin(4)),
                ],
                per_family([4, 4, 4, 4]),
            ]
            .concat(),
        },
        GoldenCode {
            name: "[16,7,5]_3 QC (m=8, ell=2)",
            q: 3,
            m: 8,
            lambda: 1,
            ell: 2,
            conway_degree: Some(2),
            generators: vec![vec![2, 0, 0, 2, 1, 1, 1, 1], vec![0, 1, 0, 2, 2, 1, 0, 1]],
            expected: [
                vec![
                    (Dimension, fin(7)),
                    (Distance, fin(5)),
                    (Lally, fin(2)),
                    (Jensen, fin(4)),
                    (Spectral(union()), fin(5)),
                    (SubsetValue(set(&[1, 2, 3, 4])), fin(5)),
                    (SubsetValue(set(&[0, 3, 5, 6])), fin(5)),
                ],
                per_family([5, 5, 5, 5]),
            ]
            .concat(),
        },
        GoldenCode {
            name: "[8,2,6]_3 2-QT (m=4, ell=2)",
            q: 3,
            m: 4,
            lambda: 2,
            ell: 2,
            conway_degree: None,
            generators: vec![vec![1, 2, 0, 2], vec![1, 1, 2]],
            expected: vec![
                (Dimension, fin(2)),
                (Distance, fin(6)),
                (Lally, fin(3)),
                (Jensen, fin(6)),
                (Spectral(union()), fin(4)),
            ],
        },
        GoldenCode {
            name: "[21,6,8]_2 QC (m=7, ell=3)",
            q: 2,
            m: 7,
            lambda: 1,
            ell: 3,
            conway_degree: None,
            generators: vec![vec![1, 1, 0, 1, 1], vec![1, 0, 0, 0, 1], vec![0, 1, 0, 1]],
            expected: vec![
                (Dimension, fin(6)),
                (Distance, fin(8)),
                (Lally, fin(8)),
                (Jensen, fin(6)),
                (Spectral(union()), fin(4)),
            ],
        },
        GoldenCode {
            name: "[21,7,6]_2 QC (m=7, ell=3)",
            q: 2,
            m: 7,
            lambda: 1,
            ell: 3,
            conway_degree: None,
            generators: vec![
                vec![1, 0, 1, 0, 1, 1, 1],
                vec![0, 0, 1, 0, 0, 1, 1],
                vec![1, 0, 0, 0, 1, 1, 1],
            ],
            expected: vec![
                (Dimension, fin(7)),
                (Distance, fin(6)),
                (Lally, fin(1)),
                (Jensen, fin(3)),
                (Spectral(union()), fin(5)),
            ],
        },
    ]
}

#[derive(Clone, Debug)]
pub struct Check {
    pub quantity: Quantity,
    pub expected: ExtNat,
    pub actual: Result<ExtNat, String>,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.actual.as_ref() == Ok(&self.expected)
    }
}

#[derive(Clone, Debug)]
pub struct GoldenReport {
    pub name: &'static str,
    pub checks: Vec<Check>,
}

impl GoldenReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }
}

fn compute(code: &QtCode, ctx: &BoundContext, q: &Quantity) -> qtbounds::Result<ExtNat> {
    let cfg = ctx.config();
    let sp = || Spectrum::of(code);
    let eig = |p: ZeroSet| eigencode(code, &sp(), p).min_distance(cfg.strategy, cfg.budget);
    Ok(match q {
        Quantity::Dimension => ExtNat::from(code.dimension()),
        Quantity::Distance => code.exact_min_distance(cfg.strategy, cfg.budget)?,
        Quantity::Lally => lally_bound(code, cfg.strategy, cfg.budget)?.value,
        Quantity::Jensen => jensen_bound(code, ctx)?.value,
        Quantity::Spectral(fams) => spectral_bound(code, ctx, fams)?.value,
        Quantity::WitnessSize => {
            let r = spectral_bound(code, ctx, &[Family::B1])?;
            r.witness
                .map_or(ExtNat::Infinite, |w| ExtNat::from(w.len()))
        }
        Quantity::WitnessEigencode => spectral_bound(code, ctx, &[Family::B1])?.eigencode_distance,
        Quantity::SubsetDp(p) => ctx.dist_true(*p)?,
        Quantity::SubsetEigencode(p) => eig(*p)?,
        Quantity::SubsetValue(p) => ctx.dist_true(*p)?.min(eig(*p)?),
    })
}

pub fn run_golden(code: &GoldenCode, config: &BoundConfig) -> GoldenReport {
    let built = code.build().map(|c| {
        let ctx = BoundContext::new(c.tower().clone(), config.clone());
        (c, ctx)
    });
    let checks = code
        .expected
        .iter()
        .map(|(quantity, expected)| {
            let actual = match &built {
                Ok((c, ctx)) => compute(c, ctx, quantity).map_err(|e| e.to_string()),
                Err(e) => Err(e.to_string()),
            };
            Check {
                quantity: quantity.clone(),
                expected: *expected,
                actual,
            }
        })
        .collect();
    GoldenReport {
        name: code.name,
        checks,
    }
}

pub fn run_paper_examples(config: &BoundConfig) -> Vec<GoldenReport> {
    corpus().iter().map(|c| run_golden(c, config)).collect()
}
