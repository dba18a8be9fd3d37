//! Build spec files and the Incidence JSON file format.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;

use serde::{Deserialize, Serialize};

use segrelab_core::complement::{affinize, ComplementError};
use segrelab_core::instances::bilinear_hyperplane;
use segrelab_core::pls::{IncidenceStructure, ParallelStructure, PlsError, PointLabel};
use segrelab_core::segre::{ProductParallelism, SegreError, SegreProduct};
use segrelab_core::spaces::{Space, SpaceError, SpaceSpec};
use segrelab_core::PointSet;

/// What `build` constructs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum BuildSpec {
    Composite(Composite),
    Space(SpaceSpec),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum Composite {
    /// Segre product. A parallelism is attached when every factor carries one.
    Product {
        factors: Vec<SpaceSpec>,
        #[serde(default)]
        parallelism: Option<ProductParallelism>,
    },
    /// The complement of a hyperplane, with the parallelism by common direction.
    Complement { of: Box<BuildSpec>, hyperplane: HyperplaneSpec },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum HyperplaneSpec {
    /// Explicit point indices.
    Points(Vec<usize>),
    /// Zero locus of `xᵀ M y` on a product of two projective spaces.
    Bilinear(Vec<Vec<u32>>),
}

#[derive(Debug)]
pub enum BuildError {
    Space(SpaceError),
    Segre(SegreError),
    Pls(PlsError),
    Complement(ComplementError),
    Invalid(String),
}

impl fmt::Display for BuildError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BuildError::Space(SpaceError::InvalidDimension { n, k }) => write!(f, "InvalidDimension: n = {n}, k = {k}"),
            BuildError::Space(e) => write!(f, "{e}"),
            BuildError::Segre(e) => write!(f, "{e}"),
            BuildError::Pls(e) => write!(f, "{e}"),
            BuildError::Complement(e) => write!(f, "{e}"),
            BuildError::Invalid(m) => f.write_str(m),
        }
    }
}

impl std::error::Error for BuildError {}

impl From<SpaceError> for BuildError {
    fn from(e: SpaceError) -> Self {
        BuildError::Space(e)
    }
}

impl From<SegreError> for BuildError {
    fn from(e: SegreError) -> Self {
        BuildError::Segre(e)
    }
}

impl From<PlsError> for BuildError {
    fn from(e: PlsError) -> Self {
        BuildError::Pls(e)
    }
}

impl From<ComplementError> for BuildError {
    fn from(e: ComplementError) -> Self {
        BuildError::Complement(e)
    }
}

/// A built structure, with the product it came from when there is one.
pub struct Built {
    pub space: Space,
    pub product: Option<SegreProduct>,
}

impl BuildSpec {
    pub fn build(&self) -> Result<Built, BuildError> {
        match self {
            BuildSpec::Space(s) => Ok(Built { space: s.build()?, product: None }),
            BuildSpec::Composite(Composite::Product { factors, parallelism }) => {
                let spaces = factors.iter().map(SpaceSpec::build).collect::<Result<Vec<_>, _>>()?;
                let product = SegreProduct::new(spaces.iter().map(|s| s.structure().clone()).collect())?;
                let pars: Option<Vec<ParallelStructure>> = spaces.iter().map(|s| s.parallelism().cloned()).collect();
                let space = match (pars, parallelism) {
                    (Some(pars), kind) => Space::WithParallelism(product.parallelism(&pars, kind.unwrap_or(ProductParallelism::SomeComponent))?),
                    (None, None) => Space::Plain(product.carrier().clone()),
                    (None, Some(_)) => return Err(BuildError::Invalid("a product parallelism needs every factor to carry a parallelism".into())),
                };
                Ok(Built { space, product: Some(product) })
            }
            BuildSpec::Composite(Composite::Complement { of, hyperplane }) => {
                let inner = of.build()?;
                let ambient = inner.space.structure();
                let h = match hyperplane {
                    HyperplaneSpec::Points(pts) => {
                        if let Some(&x) = pts.iter().find(|&&x| x >= ambient.num_points()) {
                            return Err(BuildError::Invalid(format!("hyperplane point {x} out of range")));
                        }
                        PointSet::from_indices(ambient.num_points(), pts.iter().copied())
                    }
                    HyperplaneSpec::Bilinear(m) => {
                        let prod = inner.product.as_ref().ok_or_else(|| BuildError::Invalid("a bilinear hyperplane needs a product".into()))?;
                        bilinear_hyperplane(prod, m)?
                    }
                };
                let a = affinize(ambient, &h)?;
                Ok(Built { space: Space::WithParallelism(a.into_carrier()), product: None })
            }
        }
    }
}

/// The Incidence JSON file format. Lines are strictly increasing and sorted lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IncidenceJson {
    pub points: usize,
    pub lines: Vec<Vec<usize>>,
    pub parallel_classes: Option<Vec<Vec<usize>>>,
    pub labels: Option<BTreeMap<usize, PointLabel>>,
}

impl IncidenceJson {
    pub fn from_space(space: &Space) -> Self {
        let s = space.structure();
        Self {
            points: s.num_points(),
            lines: s.lines().to_vec(),
            parallel_classes: space.parallelism().map(|a| a.classes().to_vec()),
            labels: s.labels().map(|ls| ls.iter().cloned().enumerate().collect()),
        }
    }

    /// Validates the data and rebuilds the structure.
    pub fn to_space(&self) -> Result<Space, BuildError> {
        let mut s = IncidenceStructure::new(self.points, self.lines.clone())?;
        if let Some(labels) = &self.labels {
            if labels.len() != self.points || labels.keys().enumerate().any(|(i, &k)| i != k) {
                return Err(BuildError::Invalid("labels must cover every point exactly once".into()));
            }
            s = s.with_labels(labels.values().cloned().collect())?;
        }
        if s.lines() != self.lines.as_slice() {
            return Err(BuildError::Invalid("lines must be strictly increasing and sorted lexicographically".into()));
        }
        Ok(match &self.parallel_classes {
            Some(classes) => Space::WithParallelism(ParallelStructure::new(s, classes.clone())?),
            None => Space::Plain(s),
        })
    }

    pub fn to_pretty_string(&self) -> String {
        serde_json::to_string_pretty(self).expect("serialisable") + "\n"
    }
}

/// Reads and parses a JSON file. The error message carries line and column on parse failures.
pub fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    serde_json::from_str(&text).map_err(|e| format!("{}: {e}", path.display()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: &str) -> BuildSpec {
        serde_json::from_str(s).unwrap()
    }

    #[test]
    fn fano_and_grid_counts() {
        let fano = parse(r#"{"kind":"projective","n":3,"p":2}"#).build().unwrap();
        assert_eq!((fano.space.structure().num_points(), fano.space.structure().num_lines()), (7, 7));
        let grid = parse(r#"{"kind":"product","factors":[{"kind":"projective","n":2,"p":2},{"kind":"projective","n":2,"p":2}]}"#).build().unwrap();
        assert_eq!((grid.space.structure().num_points(), grid.space.structure().num_lines()), (9, 6));
    }

    #[test]
    fn invalid_dimension_is_reported_by_name() {
        let e = parse(r#"{"kind":"grassmann","n":4,"k":5,"p":2}"#).build().err().unwrap();
        assert!(e.to_string().starts_with("InvalidDimension"));
    }

    #[test]
    fn incidence_json_round_trip() {
        let spec = parse(r#"{"kind":"complement","of":{"kind":"product","factors":[{"kind":"projective","n":2,"p":3},{"kind":"projective","n":2,"p":3}]},"hyperplane":{"bilinear":[[1,0],[0,1]]}}"#);
        let built = spec.build().unwrap();
        let json = IncidenceJson::from_space(&built.space);
        assert_eq!(json.points, 12);
        assert!(json.parallel_classes.is_some());
        let text = json.to_pretty_string();
        let back: IncidenceJson = serde_json::from_str(&text).unwrap();
        assert_eq!(back, json);
        assert_eq!(back.to_space().unwrap().structure(), built.space.structure());
    }

    #[test]
    fn unsorted_lines_are_rejected() {
        let j = IncidenceJson { points: 3, lines: vec![vec![1, 2], vec![0, 1]], parallel_classes: None, labels: None };
        assert!(j.to_space().is_err());
    }
}
