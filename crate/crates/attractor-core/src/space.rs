//! Ambient-space arithmetic and domain descriptions for R^d with the dot
//! product. Everything here is an immutable value; all operations are pure.

use std::fmt;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SpaceError {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionError { expected: usize, got: usize },
    #[error("vector must have at least one coordinate")]
    EmptyVector,
    #[error("coordinate {index} is not finite ({value})")]
    NonFiniteCoordinate { index: usize, value: f64 },
}

/// A point of the ambient space R^d, d >= 1.
///
/// Constructed values always have finite coordinates; intermediate results
/// of arithmetic may overflow, which callers detect with [`Vector::is_finite`].
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Vector {
    coords: Vec<f64>,
}

impl Vector {
    pub fn new(coords: Vec<f64>) -> Result<Self, SpaceError> {
        if coords.is_empty() {
            return Err(SpaceError::EmptyVector);
        }
        for (index, &value) in coords.iter().enumerate() {
            if !value.is_finite() {
                return Err(SpaceError::NonFiniteCoordinate { index, value });
            }
        }
        Ok(Vector { coords })
    }

    /// One-dimensional point. Panics on a non-finite coordinate.
    pub fn scalar(x: f64) -> Self {
        Vector::new(vec![x]).expect("scalar coordinate must be finite")
    }

    pub fn zeros(dim: usize) -> Self {
        assert!(dim >= 1, "dimension must be at least 1");
        Vector { coords: vec![0.0; dim] }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[f64] {
        &self.coords
    }

    /// The inner product of the space. Errors on a dimension mismatch.
    pub fn inner(&self, other: &Vector) -> Result<f64, SpaceError> {
        if self.dim() != other.dim() {
            return Err(SpaceError::DimensionError {
                expected: self.dim(),
                got: other.dim(),
            });
        }
        Ok(self.dot(other))
    }

    /// Dot product for operands known to share a dimension.
    pub fn dot(&self, other: &Vector) -> f64 {
        assert_eq!(self.dim(), other.dim(), "dot: dimension mismatch");
        self.coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a * b)
            .sum()
    }

    pub fn norm(&self) -> f64 {
        self.dot(self).sqrt()
    }

    pub fn distance(&self, other: &Vector) -> f64 {
        self.sub(other).norm()
    }

    pub fn add(&self, other: &Vector) -> Vector {
        assert_eq!(self.dim(), other.dim(), "add: dimension mismatch");
        Vector {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Vector) -> Vector {
        assert_eq!(self.dim(), other.dim(), "sub: dimension mismatch");
        Vector {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scale(&self, factor: f64) -> Vector {
        Vector {
            coords: self.coords.iter().map(|a| a * factor).collect(),
        }
    }

    pub fn is_finite(&self) -> bool {
        self.coords.iter().all(|c| c.is_finite())
    }

    /// Copy with one coordinate shifted by `delta`.
    pub fn with_nudged(&self, index: usize, delta: f64) -> Vector {
        let mut coords = self.coords.clone();
        coords[index] += delta;
        Vector { coords }
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Uniformly spaced points `lo + i*step` for each axis, as a cartesian grid.
///
/// With dyadic `lo` and `step` every grid coordinate is exactly
/// representable, so exact comparisons against grid values behave
/// deterministically.
pub fn grid(lo: f64, hi: f64, step: f64, dim: usize) -> Vec<Vector> {
    assert!(step > 0.0 && hi > lo && dim >= 1);
    let per_axis = ((hi - lo) / step).round() as usize + 1;
    let axis: Vec<f64> = (0..per_axis).map(|i| lo + i as f64 * step).collect();
    let mut points = Vec::with_capacity(axis.len().pow(dim as u32));
    let mut idx = vec![0usize; dim];
    loop {
        points.push(Vector {
            coords: idx.iter().map(|&i| axis[i]).collect(),
        });
        let mut k = 0;
        loop {
            idx[k] += 1;
            if idx[k] < axis.len() {
                break;
            }
            idx[k] = 0;
            k += 1;
            if k == dim {
                return points;
            }
        }
    }
}

type MembershipFn = Arc<dyn Fn(&Vector) -> bool + Send + Sync>;

/// Description of the subset C of H a mapping is defined on.
///
/// Convexity and `T(C) ⊆ C` are declared flags, never inferred; the
/// [`DomainSpec::spot_check_convexity`] diagnostic samples midpoints but a
/// passing spot check is evidence, not proof.
#[derive(Clone)]
pub struct DomainSpec {
    dimension: usize,
    membership: MembershipFn,
    sample_box: (f64, f64),
    is_convex: bool,
    maps_into_self: bool,
}

impl DomainSpec {
    pub fn new(
        dimension: usize,
        membership: impl Fn(&Vector) -> bool + Send + Sync + 'static,
        sample_box: (f64, f64),
        is_convex: bool,
        maps_into_self: bool,
    ) -> Self {
        assert!(dimension >= 1, "dimension must be at least 1");
        assert!(sample_box.0 < sample_box.1, "sample box must be nonempty");
        DomainSpec {
            dimension,
            membership: Arc::new(membership),
            sample_box,
            is_convex,
            maps_into_self,
        }
    }

    /// The whole space R^d over the default desk-scale box [-2, 2].
    pub fn all_of(dimension: usize) -> Self {
        DomainSpec::new(dimension, |_| true, (-2.0, 2.0), true, true)
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn is_convex(&self) -> bool {
        self.is_convex
    }

    pub fn maps_into_self(&self) -> bool {
        self.maps_into_self
    }

    pub fn sample_box(&self) -> (f64, f64) {
        self.sample_box
    }

    pub fn contains(&self, x: &Vector) -> bool {
        x.dim() == self.dimension && (self.membership)(x)
    }

    /// Deterministic sampler: equal `(seed, count)` reproduce bitwise-equal
    /// coordinate lists. Points are drawn uniformly from the sample box and
    /// rejected until they satisfy the membership predicate.
    pub fn sample(&self, seed: u64, count: usize) -> Vec<Vector> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (lo, hi) = self.sample_box;
        let mut points = Vec::with_capacity(count);
        while points.len() < count {
            let mut attempts = 0;
            loop {
                let candidate = Vector {
                    coords: (0..self.dimension)
                        .map(|_| rng.random_range(lo..hi))
                        .collect(),
                };
                if self.contains(&candidate) {
                    points.push(candidate);
                    break;
                }
                attempts += 1;
                assert!(
                    attempts < 10_000,
                    "sampler rejected 10000 consecutive draws; the membership \
                     predicate excludes nearly all of the sample box"
                );
            }
        }
        points
    }

    /// Diagnostic only: sample `pairs` pairs and test that midpoints stay in
    /// the domain. Returns false at the first violating midpoint.
    pub fn spot_check_convexity(&self, pairs: usize, seed: u64) -> bool {
        let points = self.sample(seed, 2 * pairs);
        points.chunks_exact(2).all(|pair| {
            let mid = pair[0].add(&pair[1]).scale(0.5);
            self.contains(&mid)
        })
    }
}

impl fmt::Debug for DomainSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("DomainSpec")
            .field("dimension", &self.dimension)
            .field("sample_box", &self.sample_box)
            .field("is_convex", &self.is_convex)
            .field("maps_into_self", &self.maps_into_self)
            .finish_non_exhaustive()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(coords: &[f64]) -> Vector {
        Vector::new(coords.to_vec()).unwrap()
    }

    #[test]
    fn inner_orthogonal_basis_vectors() {
        assert_eq!(v(&[1.0, 0.0]).inner(&v(&[0.0, 1.0])).unwrap(), 0.0);
    }

    #[test]
    fn inner_squared_norm_identity() {
        assert_eq!(v(&[2.0, 3.0]).inner(&v(&[2.0, 3.0])).unwrap(), 13.0);
    }

    #[test]
    fn inner_hand_sum() {
        // 4 + 10 + 18
        assert_eq!(
            v(&[1.0, 2.0, 3.0]).inner(&v(&[4.0, 5.0, 6.0])).unwrap(),
            32.0
        );
    }

    #[test]
    fn inner_dimension_mismatch() {
        let err = v(&[1.0]).inner(&v(&[1.0, 2.0])).unwrap_err();
        assert_eq!(err, SpaceError::DimensionError { expected: 1, got: 2 });
    }

    #[test]
    fn norm_zero_vector() {
        assert_eq!(v(&[0.0, 0.0, 0.0]).norm(), 0.0);
    }

    #[test]
    fn norm_pythagorean_pair() {
        assert_eq!(v(&[3.0, 4.0]).norm(), 5.0);
    }

    #[test]
    fn norm_sqrt_two() {
        assert!((v(&[1.0, 1.0]).norm() - std::f64::consts::SQRT_2).abs() < 1e-12);
    }

    #[test]
    fn vector_rejects_non_finite() {
        assert!(matches!(
            Vector::new(vec![1.0, f64::NAN]),
            Err(SpaceError::NonFiniteCoordinate { index: 1, .. })
        ));
        assert_eq!(Vector::new(vec![]), Err(SpaceError::EmptyVector));
    }

    #[test]
    fn sampler_points_satisfy_membership() {
        let punctured = DomainSpec::new(
            1,
            |x: &Vector| x.coords()[0] != 0.0,
            (-2.0, 2.0),
            false,
            true,
        );
        for p in punctured.sample(7, 200) {
            assert!(punctured.contains(&p));
        }
    }

    #[test]
    fn sampler_is_bitwise_deterministic() {
        let domain = DomainSpec::all_of(3);
        let a = domain.sample(42, 64);
        let b = domain.sample(42, 64);
        for (x, y) in a.iter().zip(&b) {
            for (cx, cy) in x.coords().iter().zip(y.coords()) {
                assert_eq!(cx.to_bits(), cy.to_bits());
            }
        }
    }

    #[test]
    fn convexity_spot_check() {
        assert!(DomainSpec::all_of(2).spot_check_convexity(50, 1));
        // Complement of the open unit ball is not convex: midpoints of
        // antipodal samples land inside.
        let shell = DomainSpec::new(
            2,
            |x: &Vector| x.norm() >= 1.0,
            (-2.0, 2.0),
            false,
            true,
        );
        assert!(!shell.spot_check_convexity(200, 3));
    }

    #[test]
    fn grid_covers_box_with_exact_endpoints() {
        let g = grid(-2.0, 2.0, 0.25, 1);
        assert_eq!(g.len(), 17);
        assert_eq!(g[0].coords()[0], -2.0);
        assert_eq!(g[16].coords()[0], 2.0);
        assert!(g.iter().any(|p| p.coords()[0] == 1.0));

        let g2 = grid(0.0, 1.0, 0.5, 2);
        assert_eq!(g2.len(), 9);
    }

    #[test]
    fn degenerate_dimension_one_supported() {
        let d = DomainSpec::all_of(1);
        assert_eq!(d.dimension(), 1);
        assert_eq!(d.sample(5, 3).len(), 3);
    }
}
