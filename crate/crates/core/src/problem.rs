//! Objective functions over box-bounded real domains.

use std::fmt;
use std::sync::Arc;

use serde::Serialize;
use serde::ser::SerializeStruct;

use crate::rng::RandomStream;

/// Per-dimension box bounds `lower[d] <= x[d] <= upper[d]`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Bounds {
    lower: Vec<f64>,
    upper: Vec<f64>,
}

impl Bounds {
    /// Panics if the vectors differ in length, contain non-finite entries,
    /// or any interval is empty.
    pub fn new(lower: Vec<f64>, upper: Vec<f64>) -> Self {
        assert_eq!(lower.len(), upper.len(), "bounds must have equal length");
        assert!(!lower.is_empty(), "bounds must have at least one dimension");
        for (d, (lo, hi)) in lower.iter().zip(&upper).enumerate() {
            assert!(
                lo.is_finite() && hi.is_finite() && lo < hi,
                "invalid bounds in dimension {d}: [{lo}, {hi}]"
            );
        }
        Self { lower, upper }
    }

    /// `[-half_width, half_width]` in every dimension.
    pub fn symmetric(dimension: usize, half_width: f64) -> Self {
        Self::cube(dimension, -half_width, half_width)
    }

    /// `[lo, hi]` in every dimension.
    pub fn cube(dimension: usize, lo: f64, hi: f64) -> Self {
        Self::new(vec![lo; dimension], vec![hi; dimension])
    }

    pub fn dimension(&self) -> usize {
        self.lower.len()
    }

    pub fn lower(&self) -> &[f64] {
        &self.lower
    }

    pub fn upper(&self) -> &[f64] {
        &self.upper
    }

    /// Width of the interval in dimension `d`.
    pub fn width(&self, d: usize) -> f64 {
        self.upper[d] - self.lower[d]
    }

    pub fn contains(&self, x: &[f64]) -> bool {
        x.len() == self.dimension()
            && x.iter()
                .zip(&self.lower)
                .zip(&self.upper)
                .all(|((v, lo), hi)| *v >= *lo && *v <= *hi)
    }

    /// Coordinate-wise projection onto the box. In-bounds input is returned
    /// unchanged.
    pub fn clamp(&self, x: &[f64]) -> Vec<f64> {
        let mut out = x.to_vec();
        self.clamp_in_place(&mut out);
        out
    }

    pub fn clamp_in_place(&self, x: &mut [f64]) {
        assert_eq!(x.len(), self.dimension(), "clamp: dimension mismatch");
        for ((v, lo), hi) in x.iter_mut().zip(&self.lower).zip(&self.upper) {
            *v = v.clamp(*lo, *hi);
        }
    }

    /// Point sampled uniformly from the box.
    pub fn sample(&self, rng: &mut RandomStream) -> Vec<f64> {
        self.lower
            .iter()
            .zip(&self.upper)
            .map(|(lo, hi)| rng.uniform_in(*lo, *hi))
            .collect()
    }
}

/// A named cost function with its domain and, when known, its global optimum.
///
/// Minimization only; callers negate for maximization.
#[derive(Clone)]
pub struct ObjectiveFunction {
    name: String,
    bounds: Bounds,
    known_optimum: Option<Vec<f64>>,
    known_minimum_cost: Option<f64>,
    eval: Arc<dyn Fn(&[f64]) -> f64 + Send + Sync>,
}

impl ObjectiveFunction {
    pub fn new(
        name: impl Into<String>,
        bounds: Bounds,
        eval: impl Fn(&[f64]) -> f64 + Send + Sync + 'static,
    ) -> Self {
        Self {
            name: name.into(),
            bounds,
            known_optimum: None,
            known_minimum_cost: None,
            eval: Arc::new(eval),
        }
    }

    /// Attaches the known global optimum. Panics if it lies outside bounds.
    pub fn with_known_optimum(mut self, optimum: Vec<f64>, minimum_cost: f64) -> Self {
        assert!(
            self.bounds.contains(&optimum),
            "known optimum of `{}` must lie within bounds",
            self.name
        );
        self.known_optimum = Some(optimum);
        self.known_minimum_cost = Some(minimum_cost);
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dimension(&self) -> usize {
        self.bounds.dimension()
    }

    pub fn bounds(&self) -> &Bounds {
        &self.bounds
    }

    pub fn known_optimum(&self) -> Option<&[f64]> {
        self.known_optimum.as_deref()
    }

    pub fn known_minimum_cost(&self) -> Option<f64> {
        self.known_minimum_cost
    }

    /// Evaluates the cost at `x`.
    ///
    /// Dimension mismatches and out-of-bounds input are contract violations
    /// and panic: algorithms own clamping, and a silent clamp here would mask
    /// their bugs. No counter is incremented; evaluation accounting lives in
    /// the algorithm loops.
    pub fn evaluate(&self, x: &[f64]) -> f64 {
        assert_eq!(
            x.len(),
            self.dimension(),
            "`{}` expects dimension {}, got {}",
            self.name,
            self.dimension(),
            x.len()
        );
        assert!(
            self.bounds.contains(x),
            "`{}` evaluated out of bounds at {x:?}",
            self.name
        );
        (self.eval)(x)
    }
}

impl fmt::Debug for ObjectiveFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ObjectiveFunction")
            .field("name", &self.name)
            .field("dimension", &self.dimension())
            .field("known_minimum_cost", &self.known_minimum_cost)
            .finish_non_exhaustive()
    }
}

// Serialized form carries the metadata only; the evaluation closure is code,
// not data.
impl Serialize for ObjectiveFunction {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("ObjectiveFunction", 5)?;
        s.serialize_field("name", &self.name)?;
        s.serialize_field("dimension", &self.dimension())?;
        s.serialize_field("bounds", &self.bounds)?;
        s.serialize_field("known_optimum", &self.known_optimum)?;
        s.serialize_field("known_minimum_cost", &self.known_minimum_cost)?;
        s.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sphere(dim: usize) -> ObjectiveFunction {
        ObjectiveFunction::new("sphere", Bounds::symmetric(dim, 10.0), |x| {
            x.iter().map(|v| v * v).sum()
        })
    }

    #[test]
    fn clamp_projects_out_of_bounds_coordinates() {
        let b = Bounds::symmetric(2, 512.0);
        assert_eq!(b.clamp(&[600.0, 0.0]), vec![512.0, 0.0]);
        let b = Bounds::cube(2, 0.0, 1.0);
        assert_eq!(b.clamp(&[0.5, 0.5]), vec![0.5, 0.5]);
        let b = Bounds::symmetric(2, 4.5);
        assert_eq!(b.clamp(&[-6.0, 6.0]), vec![-4.5, 4.5]);
    }

    #[test]
    fn contains_is_inclusive_at_the_boundary() {
        let b = Bounds::symmetric(2, 512.0);
        assert!(b.contains(&[512.0, -512.0]));
        assert!(!b.contains(&[512.0001, 0.0]));
        assert!(!b.contains(&[0.0]));
    }

    #[test]
    #[should_panic(expected = "dimension")]
    fn evaluate_rejects_dimension_mismatch() {
        sphere(3).evaluate(&[1.0, 2.0]);
    }

    #[test]
    #[should_panic(expected = "out of bounds")]
    fn evaluate_rejects_out_of_bounds_input() {
        sphere(2).evaluate(&[11.0, 0.0]);
    }

    #[test]
    #[should_panic(expected = "within bounds")]
    fn known_optimum_must_be_in_bounds() {
        let _ = sphere(2).with_known_optimum(vec![20.0, 0.0], 400.0);
    }

    #[test]
    fn sample_stays_in_bounds() {
        let b = Bounds::cube(3, -1.5, 2.5);
        let mut rng = RandomStream::new(5);
        for _ in 0..100 {
            assert!(b.contains(&b.sample(&mut rng)));
        }
    }
}
