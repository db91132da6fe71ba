//! Run configuration: a TOML file with one section per suite, rationals as
//! "num/den" strings, points as coordinate triples.

use std::path::Path;

use serde::Deserialize;
use thiserror::Error;

use faithful_core::ecurve::{HesseCurve, ProjPoint};
use faithful_core::lie_env::LieAlgebra;
use faithful_core::linalg::{Backend, Scalar};

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("cannot parse config: {0}")]
    Toml(#[from] toml::de::Error),
    #[error("field {field}: {message}")]
    Field { field: String, message: String },
}

fn field_err(field: &str, message: impl ToString) -> ConfigError {
    ConfigError::Field { field: field.to_string(), message: message.to_string() }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Env,
    Rees,
    Sklyanin,
    All,
}

impl std::str::FromStr for Suite {
    type Err = String;
    fn from_str(s: &str) -> Result<Suite, String> {
        match s {
            "env" => Ok(Suite::Env),
            "rees" => Ok(Suite::Rees),
            "sklyanin" => Ok(Suite::Sklyanin),
            "all" => Ok(Suite::All),
            other => Err(format!("unknown suite {other:?} (env|rees|sklyanin|all)")),
        }
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawConfig {
    pub suite: Option<Suite>,
    pub backend: Option<String>,
    pub out: Option<String>,
    pub env: Option<EnvSection>,
    pub curve: Option<CurveSection>,
    pub sklyanin: Option<SklyaninSection>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EnvSection {
    pub builtin: Option<String>,
    pub algebra: Option<AlgebraSection>,
    /// Coefficients of the degree-1 part of x in the chosen basis.
    pub x: Option<Vec<String>>,
    /// Constant term of x.
    pub mu: Option<String>,
    /// Optional eigenpair override for ad(x').
    pub lambda: Option<String>,
    pub y: Option<Vec<String>>,
    pub d: Option<usize>,
    /// Witness cap for the annihilator intersections (default dim U_d).
    pub shifts: Option<usize>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraSection {
    pub dim: usize,
    pub labels: Option<Vec<String>>,
    /// Entries [i, j, k, value]: the coefficient of basis k in [x_i, x_j].
    pub constants: Vec<(usize, usize, usize, String)>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CurveSection {
    pub psi: String,
    pub p: [String; 3],
}

#[derive(Debug, Deserialize, Default)]
#[serde(deny_unknown_fields)]
pub struct SklyaninSection {
    /// Chord and secondary points, as coordinate triples or as multiples of p.
    pub p_point: Option<[String; 3]>,
    pub q_point: Option<[String; 3]>,
    pub s_point: Option<[String; 3]>,
    pub p_multiple: Option<i64>,
    pub q_multiple: Option<i64>,
    pub s_multiple: Option<i64>,
    pub d: Option<usize>,
    pub n_max: Option<usize>,
    pub degree_cap: Option<usize>,
    pub torsion_bound: Option<u32>,
}

/// Fully resolved run configuration.
pub struct RunConfig {
    pub suite: Suite,
    pub backend: Backend,
    pub out: Option<String>,
    pub env: Option<EnvConfig>,
    pub curve: Option<CurveConfig>,
    pub sklyanin: SklyaninConfig,
}

pub struct EnvConfig {
    pub algebra: LieAlgebra,
    pub name: String,
    pub x_linear: Vec<Scalar>,
    pub mu: Scalar,
    pub eigen_override: Option<(Scalar, Vec<Scalar>)>,
    pub d: usize,
    pub shifts: Option<usize>,
}

pub struct CurveConfig {
    pub curve: HesseCurve,
    pub p: ProjPoint,
}

pub struct SklyaninConfig {
    pub p_point: PointSpec,
    pub q_point: PointSpec,
    pub s_point: PointSpec,
    pub d: usize,
    pub n_max: usize,
    pub degree_cap: usize,
    pub torsion_bound: u32,
}

pub enum PointSpec {
    Multiple(i64),
    Coords([Scalar; 3]),
}

pub fn parse_backend(text: &str) -> Result<Backend, ConfigError> {
    if text == "rational" {
        return Ok(Backend::Rational);
    }
    if let Some(p) = text.strip_prefix("prime:") {
        let p: u64 = p
            .parse()
            .map_err(|_| field_err("backend", format!("bad prime in {text:?}")))?;
        return Backend::prime(p).map_err(|e| field_err("backend", e));
    }
    Err(field_err("backend", format!("expected \"rational\" or \"prime:<p>\", got {text:?}")))
}

fn parse_scalar(field: &str, text: &str, backend: Backend) -> Result<Scalar, ConfigError> {
    Scalar::parse(text, backend).map_err(|e| field_err(field, e))
}

fn parse_vector(field: &str, texts: &[String], backend: Backend) -> Result<Vec<Scalar>, ConfigError> {
    texts
        .iter()
        .enumerate()
        .map(|(i, t)| parse_scalar(&format!("{field}[{i}]"), t, backend))
        .collect()
}

fn parse_point(field: &str, coords: &[String; 3], backend: Backend) -> Result<ProjPoint, ConfigError> {
    let v = parse_vector(field, coords, backend)?;
    ProjPoint::new(v[0].clone(), v[1].clone(), v[2].clone()).map_err(|e| field_err(field, e))
}

pub fn load(path: &Path, suite_flag: Option<Suite>, backend_flag: Option<&str>, out_flag: Option<&str>) -> Result<RunConfig, ConfigError> {
    let text = std::fs::read_to_string(path)
        .map_err(|source| ConfigError::Io { path: path.display().to_string(), source })?;
    let raw: RawConfig = toml::from_str(&text)?;
    resolve(raw, suite_flag, backend_flag, out_flag)
}

pub fn resolve(
    raw: RawConfig,
    suite_flag: Option<Suite>,
    backend_flag: Option<&str>,
    out_flag: Option<&str>,
) -> Result<RunConfig, ConfigError> {
    let suite = suite_flag.or(raw.suite).unwrap_or(Suite::All);
    let backend = match backend_flag {
        Some(text) => parse_backend(text)?,
        None => match &raw.backend {
            Some(text) => parse_backend(text)?,
            None => Backend::Rational,
        },
    };
    let out = out_flag.map(str::to_string).or(raw.out);

    let needs_env = matches!(suite, Suite::Env | Suite::Rees | Suite::All);
    let env = match (&raw.env, needs_env) {
        (Some(section), _) => Some(resolve_env(section, backend)?),
        (None, true) => {
            return Err(field_err("env", "section required for the env/rees suites"));
        }
        (None, false) => None,
    };

    let needs_curve = matches!(suite, Suite::Sklyanin | Suite::All);
    let curve = match (&raw.curve, needs_curve) {
        (Some(section), _) => {
            let psi = parse_scalar("curve.psi", &section.psi, backend)?;
            let curve = HesseCurve::new(psi).map_err(|e| field_err("curve.psi", e))?;
            let p = parse_point("curve.p", &section.p, backend)?;
            Some(CurveConfig { curve, p })
        }
        (None, true) => {
            return Err(field_err("curve", "section required for the sklyanin suite"));
        }
        (None, false) => None,
    };

    let sk = raw.sklyanin.unwrap_or_default();
    let point_spec = |field: &str, coords: &Option<[String; 3]>, mult: Option<i64>, default: i64| -> Result<PointSpec, ConfigError> {
        match (coords, mult) {
            (Some(c), None) => {
                let v = parse_vector(field, c, backend)?;
                Ok(PointSpec::Coords([v[0].clone(), v[1].clone(), v[2].clone()]))
            }
            (None, Some(m)) => Ok(PointSpec::Multiple(m)),
            (None, None) => Ok(PointSpec::Multiple(default)),
            (Some(_), Some(_)) => Err(field_err(field, "give coordinates or a multiple, not both")),
        }
    };
    let sklyanin = SklyaninConfig {
        p_point: point_spec("sklyanin.p_point", &sk.p_point, sk.p_multiple, 1)?,
        q_point: point_spec("sklyanin.q_point", &sk.q_point, sk.q_multiple, 2)?,
        s_point: point_spec("sklyanin.s_point", &sk.s_point, sk.s_multiple, 4)?,
        d: sk.d.unwrap_or(3),
        n_max: sk.n_max.unwrap_or(6),
        degree_cap: sk.degree_cap.unwrap_or(8),
        torsion_bound: sk.torsion_bound.unwrap_or(12),
    };
    if sklyanin.d == 0 || sklyanin.n_max == 0 || sklyanin.degree_cap == 0 {
        return Err(field_err("sklyanin", "caps must be positive"));
    }

    Ok(RunConfig { suite, backend, out, env, curve, sklyanin })
}

fn resolve_env(section: &EnvSection, backend: Backend) -> Result<EnvConfig, ConfigError> {
    let (algebra, name) = match (&section.builtin, &section.algebra) {
        (Some(name), None) => {
            let algebra = LieAlgebra::builtin(name, backend)
                .ok_or_else(|| field_err("env.builtin", format!("unknown builtin {name:?}")))?;
            (algebra, name.clone())
        }
        (None, Some(spec)) => {
            let labels = spec
                .labels
                .clone()
                .unwrap_or_else(|| (0..spec.dim).map(|i| format!("x{i}")).collect());
            let mut entries = Vec::new();
            for (pos, (i, j, k, v)) in spec.constants.iter().enumerate() {
                let value = parse_scalar(&format!("env.algebra.constants[{pos}]"), v, backend)?;
                entries.push((*i, *j, *k, value));
            }
            let algebra = LieAlgebra::from_structure_constants(backend, spec.dim, labels, &entries)
                .map_err(|e| field_err("env.algebra", e))?;
            (algebra, "custom".to_string())
        }
        (Some(_), Some(_)) => {
            return Err(field_err("env", "give builtin or algebra, not both"));
        }
        (None, None) => {
            return Err(field_err("env", "builtin or algebra required"));
        }
    };

    let dim = algebra.dim();
    let x_linear = match &section.x {
        Some(coords) => {
            if coords.len() != dim {
                return Err(field_err("env.x", format!("expected {dim} coefficients")));
            }
            parse_vector("env.x", coords, backend)?
        }
        None => default_x(&name, dim, backend),
    };
    let mu = match &section.mu {
        Some(text) => parse_scalar("env.mu", text, backend)?,
        None => Scalar::zero(backend),
    };
    let eigen_override = match (&section.lambda, &section.y) {
        (Some(l), Some(y)) => {
            if y.len() != dim {
                return Err(field_err("env.y", format!("expected {dim} coefficients")));
            }
            Some((parse_scalar("env.lambda", l, backend)?, parse_vector("env.y", y, backend)?))
        }
        (None, None) => None,
        _ => return Err(field_err("env", "lambda and y must be given together")),
    };
    let d = section.d.unwrap_or(4);
    if d == 0 {
        return Err(field_err("env.d", "cap must be positive"));
    }
    Ok(EnvConfig { algebra, name, x_linear, mu, eigen_override, d, shifts: section.shifts })
}

/// Canonical certificate element per builtin: the adjoint-diagonalizable
/// generator where one exists, the first noncentral generator otherwise.
fn default_x(name: &str, dim: usize, backend: Backend) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(backend); dim];
    let idx = match name {
        "sl2" => 2, // h
        _ => 0,
    };
    v[idx] = Scalar::one(backend);
    v
}
