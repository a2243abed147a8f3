//! The mapping abstraction `T: C -> H` and a registry of closed-form
//! mappings used by tests, experiments, and CLI configs.
//!
//! Registry names are stable strings: `paper_example`, `negation_d(d)`,
//! `rotation_2d(theta)`, `contraction(c, p1, .., pd)`,
//! `ball_projection(r, d)`. Parameters are plain decimal numbers; names
//! without a parameter list use the documented defaults.

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::space::{DomainSpec, Vector};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum MappingError {
    #[error("point {point} is outside the mapping's domain")]
    DomainViolation { point: Vector },
    #[error("unknown mapping '{name}'")]
    UnknownMapping { name: String },
    #[error("invalid arguments for mapping '{name}': {reason}")]
    InvalidArguments { name: String, reason: String },
}

/// Unverified class metadata carried on a mapping. The `classes` module is
/// the source of truth; these tags only record what a mapping is believed
/// to satisfy.
#[derive(Clone, Debug, PartialEq)]
pub enum ClassTag {
    Quasinonexpansive,
    GeneralizedHybrid { alpha: f64, beta: f64 },
    WidelyMoreGeneralizedHybrid { coefficients: [f64; 7] },
}

type EvalFn = Arc<dyn Fn(&Vector) -> Vector + Send + Sync>;

/// A pointwise-evaluable mapping `T: C -> H` with metadata.
///
/// `evaluate` must be pure and deterministic, and must preserve dimension.
#[derive(Clone)]
pub struct MappingSpec {
    name: String,
    domain: DomainSpec,
    evaluate: EvalFn,
    declared_classes: Vec<ClassTag>,
}

impl MappingSpec {
    pub fn new(
        name: impl Into<String>,
        domain: DomainSpec,
        evaluate: impl Fn(&Vector) -> Vector + Send + Sync + 'static,
    ) -> Self {
        MappingSpec {
            name: name.into(),
            domain,
            evaluate: Arc::new(evaluate),
            declared_classes: Vec::new(),
        }
    }

    pub fn with_declared_classes(mut self, tags: Vec<ClassTag>) -> Self {
        self.declared_classes = tags;
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn domain(&self) -> &DomainSpec {
        &self.domain
    }

    pub fn declared_classes(&self) -> &[ClassTag] {
        &self.declared_classes
    }

    /// Apply `T` to a point of `C`.
    pub fn eval(&self, x: &Vector) -> Result<Vector, MappingError> {
        if !self.domain.contains(x) {
            return Err(MappingError::DomainViolation { point: x.clone() });
        }
        let image = (self.evaluate)(x);
        debug_assert_eq!(image.dim(), x.dim(), "mapping must preserve dimension");
        Ok(image)
    }
}

impl fmt::Debug for MappingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("MappingSpec")
            .field("name", &self.name)
            .field("domain", &self.domain)
            .finish_non_exhaustive()
    }
}

/// The one-dimensional mapping on C = R \ {0} with Tx = 1 at x = 1 and
/// Tx = -x elsewhere. Its fixed-point set {1} and attractive-point set {0}
/// differ, which makes it the standard regression case for the extension
/// machinery. The branch test uses exact floating-point equality.
pub fn paper_example() -> MappingSpec {
    let domain = DomainSpec::new(
        1,
        |x: &Vector| x.coords()[0] != 0.0,
        (-2.0, 2.0),
        false,
        true,
    );
    MappingSpec::new("paper_example", domain, |x: &Vector| {
        let c = x.coords()[0];
        if c == 1.0 {
            Vector::scalar(1.0)
        } else {
            Vector::scalar(-c)
        }
    })
}

/// T = -I on R^d.
pub fn negation(dim: usize) -> MappingSpec {
    MappingSpec::new(
        format!("negation_d({dim})"),
        DomainSpec::all_of(dim),
        |x: &Vector| x.scale(-1.0),
    )
    .with_declared_classes(vec![ClassTag::GeneralizedHybrid { alpha: 1.0, beta: 0.0 }])
}

/// Rotation about the origin of R^2 by `theta` radians; nonexpansive.
pub fn rotation_2d(theta: f64) -> MappingSpec {
    let (sin, cos) = theta.sin_cos();
    MappingSpec::new(
        format!("rotation_2d({theta})"),
        DomainSpec::all_of(2),
        move |x: &Vector| {
            let c = x.coords();
            Vector::new(vec![cos * c[0] - sin * c[1], sin * c[0] + cos * c[1]])
                .expect("rotation of a finite point is finite")
        },
    )
    .with_declared_classes(vec![ClassTag::GeneralizedHybrid { alpha: 1.0, beta: 0.0 }])
}

/// Tx = p + c(x - p) with 0 <= c < 1; the unique fixed point is `p`.
pub fn contraction(factor: f64, center: Vector) -> Result<MappingSpec, MappingError> {
    if !(0.0..1.0).contains(&factor) {
        return Err(MappingError::InvalidArguments {
            name: "contraction".into(),
            reason: format!("factor must satisfy 0 <= c < 1, got {factor}"),
        });
    }
    let p = center.clone();
    Ok(MappingSpec::new(
        format!("contraction({factor}, {center})"),
        DomainSpec::all_of(center.dim()),
        move |x: &Vector| p.add(&x.sub(&p).scale(factor)),
    )
    .with_declared_classes(vec![ClassTag::GeneralizedHybrid { alpha: 1.0, beta: 0.0 }]))
}

/// Metric projection of R^d onto the closed ball of radius `r` about the
/// origin. Points already inside the ball are returned unchanged.
pub fn ball_projection(radius: f64, dim: usize) -> Result<MappingSpec, MappingError> {
    if radius <= 0.0 {
        return Err(MappingError::InvalidArguments {
            name: "ball_projection".into(),
            reason: format!("radius must be positive, got {radius}"),
        });
    }
    Ok(MappingSpec::new(
        format!("ball_projection({radius}, {dim})"),
        DomainSpec::all_of(dim),
        move |x: &Vector| {
            let n = x.norm();
            if n <= radius {
                x.clone()
            } else {
                x.scale(radius / n)
            }
        },
    )
    .with_declared_classes(vec![ClassTag::GeneralizedHybrid { alpha: 1.0, beta: 0.0 }]))
}

/// Resolve a registry name, e.g. `"paper_example"`, `"negation_d(3)"`,
/// `"rotation_2d(1.5707963267948966)"`, `"contraction(0.5, 0)"`, or
/// `"ball_projection(1, 3)"`.
pub fn registry_get(name: &str) -> Result<MappingSpec, MappingError> {
    let (ident, args) = parse_name(name)?;
    let arity_err = |reason: &str| MappingError::InvalidArguments {
        name: ident.clone(),
        reason: reason.into(),
    };
    match ident.as_str() {
        "paper_example" => {
            if !args.is_empty() {
                return Err(arity_err("takes no parameters"));
            }
            Ok(paper_example())
        }
        "negation_d" => {
            let dim = match args.len() {
                0 => 2,
                1 => as_dimension(&ident, args[0])?,
                _ => return Err(arity_err("takes at most one parameter (the dimension)")),
            };
            Ok(negation(dim))
        }
        "rotation_2d" => {
            if args.len() != 1 {
                return Err(arity_err("takes exactly one parameter (the angle)"));
            }
            Ok(rotation_2d(args[0]))
        }
        "contraction" => {
            if args.len() < 2 {
                return Err(arity_err(
                    "takes the factor followed by the center coordinates",
                ));
            }
            let center = Vector::new(args[1..].to_vec()).map_err(|e| {
                MappingError::InvalidArguments {
                    name: ident.clone(),
                    reason: e.to_string(),
                }
            })?;
            contraction(args[0], center)
        }
        "ball_projection" => {
            let (radius, dim) = match args.len() {
                1 => (args[0], 2),
                2 => (args[0], as_dimension(&ident, args[1])?),
                _ => return Err(arity_err("takes the radius and optionally the dimension")),
            };
            ball_projection(radius, dim)
        }
        _ => Err(MappingError::UnknownMapping { name: name.into() }),
    }
}

fn parse_name(name: &str) -> Result<(String, Vec<f64>), MappingError> {
    let name = name.trim();
    let Some(open) = name.find('(') else {
        return Ok((name.to_string(), Vec::new()));
    };
    if !name.ends_with(')') {
        return Err(MappingError::InvalidArguments {
            name: name.to_string(),
            reason: "unbalanced parentheses".into(),
        });
    }
    let ident = name[..open].trim().to_string();
    let inner = &name[open + 1..name.len() - 1];
    let mut args = Vec::new();
    for part in inner.split(',') {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        let value: f64 = part.parse().map_err(|_| MappingError::InvalidArguments {
            name: ident.clone(),
            reason: format!("'{part}' is not a number"),
        })?;
        if !value.is_finite() {
            return Err(MappingError::InvalidArguments {
                name: ident.clone(),
                reason: format!("parameter '{part}' is not finite"),
            });
        }
        args.push(value);
    }
    Ok((ident, args))
}

fn as_dimension(name: &str, value: f64) -> Result<usize, MappingError> {
    if value.fract() == 0.0 && value >= 1.0 && value <= 64.0 {
        Ok(value as usize)
    } else {
        Err(MappingError::InvalidArguments {
            name: name.into(),
            reason: format!("dimension must be a small positive integer, got {value}"),
        })
    }
}
