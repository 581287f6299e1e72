//! TOML code descriptions.
//!
//! ```toml
//! q = 3
//! m = 7
//! ell = 2
//! lambda = 2
//! generators = [[2, 0, 1, 1, 0, 2], [0, 0, 1, 1, 0, 1]]
//! ```
//!
//! `generators` holds r·ℓ coefficient vectors, low degree first; generator i
//! is entries `i ℓ .. (i+1) ℓ`. Over a prime-power field a coefficient is
//! either its integer label or its vector of F_p coordinates.

use std::path::Path;
use std::sync::Arc;

use qtbounds::galois::{build_tower_with_modulus, Elem};
use qtbounds::qtcode::QtCode;
use serde::{Deserialize, Serialize};

#[derive(Debug, thiserror::Error)]
pub enum SpecError {
    #[error("cannot read {path}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("malformed spec: {0}")]
    Parse(#[from] toml::de::Error),
    #[error("{0}")]
    Invalid(String),
    #[error(transparent)]
    Code(#[from] qtbounds::Error),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Coef {
    Label(u32),
    Coords(Vec<u32>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CodeSpec {
    pub q: u32,
    pub m: u32,
    pub ell: usize,
    #[serde(default = "one")]
    pub lambda: u32,
    #[serde(default)]
    pub generators: Vec<Vec<Coef>>,
    /// Optional modulus of the splitting field over F_p, constant term first.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modulus: Option<Vec<u32>>,
}

fn one() -> u32 {
    1
}

impl CodeSpec {
    pub fn parse(text: &str) -> Result<CodeSpec, SpecError> {
        Ok(toml::from_str(text)?)
    }

    pub fn load(path: &Path) -> Result<CodeSpec, SpecError> {
        let text = std::fs::read_to_string(path).map_err(|source| SpecError::Io {
            path: path.display().to_string(),
            source,
        })?;
        CodeSpec::parse(&text)
    }

    pub fn build(&self) -> Result<QtCode, SpecError> {
        if self.ell == 0 {
            return Err(SpecError::Invalid("ell must be positive".into()));
        }
        if !self.generators.len().is_multiple_of(self.ell) {
            return Err(SpecError::Invalid(format!(
                "{} generator polynomials is not a multiple of ell = {}",
                self.generators.len(),
                self.ell
            )));
        }
        let tower = Arc::new(build_tower_with_modulus(
            self.q,
            self.m,
            self.lambda,
            self.modulus.as_deref(),
        )?);
        let base = tower.base();
        let p = base.characteristic();
        let mut polys = Vec::with_capacity(self.generators.len());
        for (i, poly) in self.generators.iter().enumerate() {
            if poly.len() > self.m as usize {
                return Err(SpecError::Invalid(format!(
                    "polynomial {i} has {} coefficients, m = {}",
                    poly.len(),
                    self.m
                )));
            }
            let mut labels = Vec::with_capacity(poly.len());
            for c in poly {
                let label = match c {
                    Coef::Label(v) => *v,
                    Coef::Coords(v) => {
                        if v.len() > base.degree() as usize || v.iter().any(|&x| x >= p) {
                            return Err(SpecError::Invalid(format!(
                                "coefficient {v:?} of polynomial {i} is not in F_{}",
                                self.q
                            )));
                        }
                        v.iter().rev().fold(0, |acc, &x| acc * p + x)
                    }
                };
                if !base.contains(Elem(label)) {
                    return Err(SpecError::Invalid(format!(
                        "coefficient {label} of polynomial {i} is not in F_{}",
                        self.q
                    )));
                }
                labels.push(label);
            }
            polys.push(labels);
        }
        let rows: Vec<Vec<Vec<u32>>> = polys.chunks(self.ell).map(|c| c.to_vec()).collect();
        Ok(QtCode::from_labels(tower, self.ell, &rows)?)
    }

    /// Spec of an existing code: its generators as labels.
    pub fn of(code: &QtCode) -> CodeSpec {
        let t = code.tower();
        CodeSpec {
            q: t.q(),
            m: t.m() as u32,
            ell: code.ell(),
            lambda: t.lambda().0,
            generators: code
                .generators()
                .iter()
                .flatten()
                .map(|p| p.labels().into_iter().map(Coef::Label).collect())
                .collect(),
            modulus: None,
        }
    }
}

pub fn load_spec(path: &Path) -> Result<QtCode, SpecError> {
    CodeSpec::load(path)?.build()
}

#[cfg(test)]
mod tests {
    use super::*;

    const EXAMPLE: &str = "q = 3\nm = 7\nell = 2\nlambda = 2\ngenerators = [[2, 0, 1, 1, 0, 2], [0, 0, 1, 1, 0, 1]]\n";

    #[test]
    fn parses_and_builds() {
        let c = CodeSpec::parse(EXAMPLE).unwrap().build().unwrap();
        assert_eq!((c.len(), c.dimension()), (14, 7));
        let again = CodeSpec::of(&c).build().unwrap();
        assert_eq!(again.reduced(), c.reduced());
    }

    #[test]
    fn empty_generators_give_zero_code() {
        let c = CodeSpec::parse("q = 2\nm = 5\nell = 3\n")
            .unwrap()
            .build()
            .unwrap();
        assert!(c.is_zero());
    }

    #[test]
    fn rejects_bad_input() {
        let bad_coef = EXAMPLE.replace("[2, 0, 1, 1, 0, 2]", "[3, 0, 1]");
        assert!(matches!(
            CodeSpec::parse(&bad_coef).unwrap().build(),
            Err(SpecError::Invalid(_))
        ));
        let bad_m = EXAMPLE.replace("m = 7", "m = 6");
        assert!(matches!(
            CodeSpec::parse(&bad_m).unwrap().build(),
            Err(SpecError::Code(_))
        ));
        let odd = EXAMPLE.replace(", [0, 0, 1, 1, 0, 1]", "");
        assert!(CodeSpec::parse(&odd).unwrap().build().is_err());
        assert!(CodeSpec::parse("q = 2\nm = 3\nell = 1\nbogus = 1\n").is_err());
        let long = EXAMPLE.replace("[0, 0, 1, 1, 0, 1]", "[0, 0, 1, 1, 0, 1, 0, 1]");
        assert!(CodeSpec::parse(&long).unwrap().build().is_err());
    }

    #[test]
    fn coordinate_coefficients() {
        let by_coords = "q = 4\nm = 3\nell = 1\ngenerators = [[[1, 1], [0, 1], 1]]\n";
        let by_labels = "q = 4\nm = 3\nell = 1\ngenerators = [[3, 2, 1]]\n";
        let a = CodeSpec::parse(by_coords).unwrap().build().unwrap();
        let b = CodeSpec::parse(by_labels).unwrap().build().unwrap();
        assert_eq!(a.reduced(), b.reduced());
    }
}
