//! TOML run specifications.

use crate::CliError;
use cogroupoid::families::{AstMatrix, FiniteGroup, GroupCocycle};
use cogroupoid::scalar::{parse_scalar, BigRational};
use cogroupoid::{ExactMatrix, Scalar};
use serde::Deserialize;
use std::collections::BTreeMap;
use std::path::PathBuf;

pub const SUITES: &[(&str, &str)] = &[
    ("cogroupoid", "structure maps and cogroupoid axioms"),
    ("galois", "canonical maps and their inverses on C(x,y) ⊗ C(x,y)"),
    ("classify", "congruence/similarity partitions and explicit isomorphisms"),
    ("transport", "comodule and comodule-algebra transport along C(x,y)"),
    ("homology", "Koszul complex: d∘d, exactness, equivariance, transport"),
    ("weakhopf", "weak Hopf algebra assembled from a finite cogroupoid"),
    ("fusion", "fusion rules on words in a, b"),
    ("invariants", "coinvariants of twisted polynomial algebras"),
];

pub type Matrix = Vec<Vec<String>>;

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunSpec {
    pub suite: String,
    pub degree: Option<u32>,
    pub seed: Option<u64>,
    pub out: Option<PathBuf>,
    pub family: Option<FamilySpec>,
    pub galois: Option<GaloisSpec>,
    pub classify: Option<ClassifySpec>,
    pub transport: Option<TransportSpec>,
    pub homology: Option<HomologySpec>,
    pub fusion: Option<FusionSpec>,
    pub invariants: Option<InvariantsSpec>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Deserialize)]
pub enum FamilyKind {
    B,
    H,
    GL,
    S2n,
    #[serde(rename = "cocycle")]
    Cocycle,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FamilySpec {
    pub kind: FamilyKind,
    /// Rational values substituted into every matrix entry.
    #[serde(default)]
    pub params: BTreeMap<String, String>,
    /// Orders of the cyclic factors (cocycle family).
    #[serde(default)]
    pub group: Vec<usize>,
    pub objects: Vec<ObjectSpec>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ObjectSpec {
    pub name: String,
    pub matrix: Option<Matrix>,
    /// `trivial`, `klein-bilinear`, or a full table of values.
    pub cocycle: Option<CocycleSpec>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum CocycleSpec {
    Named(String),
    Table(Vec<String>),
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GaloisSpec {
    #[serde(default = "default_pair")]
    pub pair: [usize; 2],
    #[serde(default = "default_sides")]
    pub sides: Vec<String>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClassifySpec {
    pub kind: FamilyKind,
    pub base: Matrix,
    pub corpus: Vec<Matrix>,
    #[serde(default)]
    pub witnesses: Vec<WitnessSpec>,
    /// Random integer witnesses per corpus matrix sharing the base invariant.
    #[serde(default)]
    pub random_witnesses: usize,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WitnessSpec {
    pub index: usize,
    pub p: Matrix,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TransportSpec {
    #[serde(default = "default_pair")]
    pub pair: [usize; 2],
    #[serde(default)]
    pub t: Vec<String>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HomologySpec {
    #[serde(default)]
    pub complexes: Vec<ComplexSpec>,
    pub transport: Option<ResolutionSpec>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexSpec {
    pub name: String,
    pub alpha: Matrix,
    pub t: String,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ResolutionSpec {
    pub e: Matrix,
    pub f: Matrix,
    pub t: Vec<String>,
    pub degree: Option<u32>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FusionSpec {
    #[serde(default = "default_fusion_n")]
    pub n: i64,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InvariantsSpec {
    pub p: Matrix,
}

fn default_pair() -> [usize; 2] {
    [0, 1]
}

fn default_sides() -> Vec<String> {
    vec!["left".into()]
}

fn default_fusion_n() -> i64 {
    2
}

/// Built-in spec for each suite.
pub fn builtin(suite: &str) -> Option<&'static str> {
    Some(match suite {
        "cogroupoid" => include_str!("../specs/cogroupoid.toml"),
        "galois" => include_str!("../specs/galois.toml"),
        "classify" => include_str!("../specs/classify.toml"),
        "transport" => include_str!("../specs/transport.toml"),
        "homology" => include_str!("../specs/homology.toml"),
        "weakhopf" => include_str!("../specs/weakhopf.toml"),
        "fusion" => include_str!("../specs/fusion.toml"),
        "invariants" => include_str!("../specs/invariants.toml"),
        _ => return None,
    })
}

impl RunSpec {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let spec: RunSpec = toml::from_str(text).map_err(|e| CliError::Parse(e.to_string()))?;
        if !SUITES.iter().any(|(s, _)| *s == spec.suite) {
            return Err(CliError::Parse(format!("unknown suite `{}`", spec.suite)));
        }
        if spec.degree == Some(0) {
            return Err(CliError::Parse("degree must be at least 1".into()));
        }
        Ok(spec)
    }

    pub fn family(&self) -> Result<&FamilySpec, CliError> {
        self.family.as_ref().ok_or_else(|| CliError::Parse(format!("suite `{}` needs a [family] table", self.suite)))
    }
}

pub fn scalar(s: &str) -> Result<Scalar, CliError> {
    parse_scalar(s).map_err(|e| CliError::Parse(e.to_string()))
}

pub fn matrix(m: &Matrix) -> Result<ExactMatrix, CliError> {
    if m.is_empty() {
        return Err(CliError::Parse("empty matrix".into()));
    }
    ExactMatrix::parse(m).map_err(|e| CliError::Parse(e.to_string()))
}

pub fn invertible(m: &Matrix, what: &str) -> Result<ExactMatrix, CliError> {
    let x = matrix(m)?;
    if !x.is_square() || !x.is_invertible() {
        return Err(CliError::Singular(what.to_string()));
    }
    Ok(x)
}

impl FamilySpec {
    fn assignment(&self) -> Result<BTreeMap<String, BigRational>, CliError> {
        self.params
            .iter()
            .map(|(k, v)| {
                let x = scalar(v)?;
                let r = x.as_rational().ok_or_else(|| CliError::Parse(format!("parameter {} must be rational", k)))?;
                Ok((k.clone(), r.clone()))
            })
            .collect()
    }

    fn object_matrix(&self, o: &ObjectSpec) -> Result<ExactMatrix, CliError> {
        let m = o.matrix.as_ref().ok_or_else(|| CliError::Parse(format!("object {} has no matrix", o.name)))?;
        let a = self.assignment()?;
        let rows = matrix(m)?
            .to_rows()
            .into_iter()
            .map(|r| r.iter().map(|s| s.substitute(&a)).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| CliError::Parse(format!("object {}: {}", o.name, e)))?;
        Ok(ExactMatrix::from_rows(rows))
    }

    /// Objects as invertible matrices (B, H families).
    pub fn matrices(&self) -> Result<Vec<(String, ExactMatrix)>, CliError> {
        self.objects
            .iter()
            .map(|o| {
                let m = self.object_matrix(o)?;
                if !m.is_square() || !m.is_invertible() {
                    return Err(CliError::Singular(format!("object {}", o.name)));
                }
                Ok((o.name.clone(), m))
            })
            .collect()
    }

    pub fn ast_matrices(&self) -> Result<Vec<(String, AstMatrix)>, CliError> {
        self.objects
            .iter()
            .map(|o| {
                let m = self.object_matrix(o)?;
                Ok((o.name.clone(), AstMatrix::new(m.to_rows())?))
            })
            .collect()
    }

    pub fn cocycles(&self) -> Result<Vec<(String, GroupCocycle)>, CliError> {
        let orders = if self.group.is_empty() { vec![2, 2] } else { self.group.clone() };
        let group = if orders == [2, 2] { FiniteGroup::klein() } else { FiniteGroup::abelian(&orders) };
        self.objects
            .iter()
            .map(|o| {
                let c = match &o.cocycle {
                    None => return Err(CliError::Parse(format!("object {} has no cocycle", o.name))),
                    Some(CocycleSpec::Named(s)) if s == "trivial" => GroupCocycle::trivial(group.clone()),
                    Some(CocycleSpec::Named(s)) if s == "klein-bilinear" => {
                        if orders != [2, 2] {
                            return Err(CliError::Parse("klein-bilinear needs group = [2, 2]".into()));
                        }
                        GroupCocycle::klein_bilinear()
                    }
                    Some(CocycleSpec::Named(s)) => return Err(CliError::Parse(format!("unknown cocycle `{}`", s))),
                    Some(CocycleSpec::Table(v)) => {
                        let vals = v.iter().map(|s| scalar(s)).collect::<Result<Vec<_>, _>>()?;
                        GroupCocycle::new(group.clone(), vals)?
                    }
                };
                Ok((o.name.clone(), c))
            })
            .collect()
    }
}
