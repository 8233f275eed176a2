//! Discretized torus phase space.
//!
//! Position lives on `T^d = [0, 2pi)^d` with `n_x = 2K+1` Fourier modes per
//! axis, `k in {-K, ..., K}`. Velocity lives on `[-v_max, v_max)^d`, treated
//! as periodic, with `n_v` nodes per axis; the dual lattice has spacing
//! `d_eta = pi / v_max` and nodes `m * d_eta` for `m in {-n_v/2, ..., n_v/2 - 1}`.
//!
//! Canonical index order, inherited by every other module: a flat row-major
//! array over `[x-axes..., v-axes...]`, each axis in FFT-standard frequency
//! order (`0, 1, ..., -1`). Physical grids use natural order: `x_j = 2pi j / n_x`
//! and `v_j = -v_max + j * dv`.
//!
//! Velocity integrals over `R^d` are approximated by the lattice Riemann sum
//! with weight `dv^d` (and `d_eta^d` on the dual side). This quadrature choice
//! is ours: for Gaussian-type admissible data the periodization and truncation
//! errors are below 1e-14 once `v_max` is large enough, which scenario
//! validation checks.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const MAX_DIM: usize = 3;

fn default_dealias() -> f64 {
    2.0 / 3.0
}

/// Truncated (k, eta) lattice and its physical-space twin.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GridSpec {
    /// Spatial/velocity dimension, 1 to 3.
    pub dim: usize,
    /// Fourier modes per spatial axis; odd, `n_x = 2K + 1`.
    pub n_x: usize,
    /// Velocity nodes per axis; even, at least 8.
    pub n_v: usize,
    /// Velocity box half-width.
    pub v_max: f64,
    /// Fraction of the spatial band kept by the dealiased convolution.
    #[serde(default = "default_dealias")]
    pub dealias_fraction: f64,
}

impl GridSpec {
    pub fn new(dim: usize, n_x: usize, n_v: usize, v_max: f64) -> Self {
        Self {
            dim,
            n_x,
            n_v,
            v_max,
            dealias_fraction: default_dealias(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.dim == 0 || self.dim > MAX_DIM {
            return Err(Error::Validation(format!(
                "dim must be 1..={MAX_DIM}, got {}",
                self.dim
            )));
        }
        if self.n_x % 2 == 0 || self.n_x < 1 {
            return Err(Error::Validation(format!(
                "n_x must be odd (n_x = 2K+1), got {}",
                self.n_x
            )));
        }
        if self.n_v % 2 != 0 || self.n_v < 8 {
            return Err(Error::Validation(format!(
                "n_v must he even and >= 8, got {}",
                self.n_v
            )));
        }
        if !(self.v_max > 0.0) {
            return Err(Error::Validation(format!(
                "v_max must be positive, got {}",
                self.v_max
            )));
        }
        if !(self.dealias_fraction > 0.0 && self.dealias_fraction <= 1.0) {
            return Err(Error::Validation(format!(
                "dealias_fraction must lie in (0, 1], got {}",
                self.dealias_fraction
            )));
        }
        Ok(())
    }

    /// Largest spatial mode per axis, `K = (n_x - 1) / 2`.
    pub fn k_max(&self) -> i64 {
        (self.n_x as i64 - 1) / 2
    }

    /// Largest mode kept by the dealiased convolution.
    pub fn k_cut(&self) -> i64 {
        ((self.dealias_fraction * self.k_max() as f64).floor() as i64).min(self.k_max())
    }

    pub fn delta_eta(&self) -> f64 {
        std::f64::consts::PI / self.v_max
    }

    pub fn delta_v(&self) -> f64 {
        2.0 * self.v_max / self.n_v as f64
    }

    pub fn delta_x(&self) -> f64 {
        2.0 * std::f64::consts::PI / self.n_x as f64
    }

    /// Number of spatial lattice sites (= number of k modes).
    pub fn spatial_len(&self) -> usize {
        self.n_x.pow(self.dim as u32)
    }

    /// Number of velocity lattice sites (= number of eta nodes).
    pub fn velocity_len(&self) -> usize {
        self.n_v.pow(self.dim as u32)
    }

    pub fn len(&self) -> usize {
        self.spatial_len() * self.velocity_len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Shape of the flat array: `[n_x; d]` then `[n_v; d]`.
    pub fn shape(&self) -> Vec<usize> {
        let mut s = vec![self.n_x; self.dim];
        s.extend(std::iter::repeat(self.n_v).take(self.dim));
        s
    }

    /// Spatial mode value for an axis index in FFT-standard order.
    #[inline]
    pub fn k_of(&self, idx: usize) -> i64 {
        let n = self.n_x as i64;
        let i = idx as i64;
        if i <= (n - 1) / 2 {
            i
        } else {
            i - n
        }
    }

    /// Integer eta multiple for an axis index in FFT-standard order.
    #[inline]
    pub fn eta_index_of(&self, idx: usize) -> i64 {
        let n = self.n_v as i64;
        let i = idx as i64;
        if i < n / 2 {
            i
        } else {
            i - n
        }
    }

    /// Eta node value for an axis index.
    #[inline]
    pub fn eta_of(&self, idx: usize) -> f64 {
        self.eta_index_of(idx) as f64 * self.delta_eta()
    }

    /// Velocity node in natural order, `v_j = -v_max + j dv`.
    #[inline]
    pub fn v_of(&self, idx: usize) -> f64 {
        -self.v_max + idx as f64 * self.delta_v()
    }

    /// Position node, `x_j = 2pi j / n_x`.
    #[inline]
    pub fn x_of(&self, idx: usize) -> f64 {
        idx as f64 * self.delta_x()
    }

    /// Decode a flat spatial index into per-axis indices (row-major).
    #[inline]
    pub fn decode_spatial(&self, mut flat: usize, out: &mut [usize; MAX_DIM]) {
        for a in (0..self.dim).rev() {
            out[a] = flat % self.n_x;
            flat /= self.n_x;
        }
    }

    /// Decode a flat velocity index into per-axis indices (row-major).
    #[inline]
    pub fn decode_velocity(&self, mut flat: usize, out: &mut [usize; MAX_DIM]) {
        for a in (0..self.dim).rev() {
            out[a] = flat % self.n_v;
            flat /= self.n_v;
        }
    }

    /// Mode vector `k` for a flat spatial index.
    pub fn k_vector(&self, flat: usize, out: &mut [i64; MAX_DIM]) {
        let mut idx = [0usize; MAX_DIM];
        self.decode_spatial(flat, &mut idx);
        for a in 0..self.dim {
            out[a] = self.k_of(idx[a]);
        }
    }

    /// Eta vector for a flat velocity index.
    pub fn eta_vector(&self, flat: usize, out: &mut [f64; MAX_DIM]) {
        let mut idx = [0usize; MAX_DIM];
        self.decode_velocity(flat, &mut idx);
        for a in 0..self.dim {
            out[a] = self.eta_of(idx[a]);
        }
    }

    /// Flat spatial index of the negated mode `-k`.
    #[inline]
    pub fn negate_spatial(&self, flat: usize) -> usize {
        let mut idx = [0usize; MAX_DIM];
        self.decode_spatial(flat, &mut idx);
        let mut out = 0;
        for a in 0..self.dim {
            let neg = (self.n_x - idx[a]) % self.n_x;
            out = out * self.n_x + neg;
        }
        out
    }

    /// Flat velocity index of the negated node `-eta` (Nyquist maps to itself).
    #[inline]
    pub fn negate_velocity(&self, flat: usize) -> usize {
        let mut idx = [0usize; MAX_DIM];
        self.decode_velocity(flat, &mut idx);
        let mut out = 0;
        for a in 0..self.dim {
            let neg = (self.n_v - idx[a]) % self.n_v;
            out = out * self.n_v + neg;
        }
        out
    }

    /// |k|^2 for a flat spatial index.
    pub fn k_norm_sq(&self, flat: usize) -> f64 {
        let mut k = [0i64; MAX_DIM];
        self.k_vector(flat, &mut k);
        k[..self.dim].iter().map(|&c| (c * c) as f64).sum()
    }

    /// |eta|^2 for a flat velocity index.
    pub fn eta_norm_sq(&self, flat: usize) -> f64 {
        let mut eta = [0.0f64; MAX_DIM];
        self.eta_vector(flat, &mut eta);
        eta[..self.dim].iter().map(|&e| e * e).sum()
    }

    /// Largest Japanese bracket on the lattice, at the (K, Nyquist) corner.
    pub fn bracket_max(&self) -> f64 {
        let k2 = self.dim as f64 * (self.k_max() as f64).powi(2);
        let eta_corner = (self.n_v as f64 / 2.0) * self.delta_eta();
        let eta2 = self.dim as f64 * eta_corner * eta_corner;
        (1.0 + k2 + eta2).sqrt()
    }
}

/// Multi-index of a velocity weight `v^alpha`.
pub type MultiIndex = [usize; MAX_DIM];

pub fn multi_index_order(alpha: &MultiIndex, dim: usize) -> usize {
    alpha[..dim].iter().sum()
}

/// Enumeration of all weights `|alpha| <= M`, graded-lexicographic and
/// deterministic, as required by the weighted norms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VelocityWeightPlan {
    pub weight_order: usize,
    pub alphas: Vec<MultiIndex>,
    dim: usize,
}

impl VelocityWeightPlan {
    pub fn new(dim: usize, weight_order: usize) -> Self {
        let mut alphas = Vec::new();
        for grade in 0..=weight_order {
            let mut alpha = [0usize; MAX_DIM];
            enumerate_grade(dim, grade, 0, grade, &mut alpha, &mut alphas);
        }
        Self {
            weight_order,
            alphas,
            dim,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn check(&self, alpha: &MultiIndex) -> Result<()> {
        if multi_index_order(alpha, self.dim) > self.weight_order {
            return Err(Error::AlphaOrder {
                alpha: alpha[..self.dim].to_vec(),
                order: self.weight_order,
            });
        }
        Ok(())
    }
}

fn enumerate_grade(
    dim: usize,
    grade: usize,
    axis: usize,
    remaining: usize,
    alpha: &mut MultiIndex,
    out: &mut Vec<MultiIndex>,
) {
    if axis == dim - 1 {
        alpha[axis] = remaining;
        out.push(*alpha);
        alpha[axis] = 0;
        return;
    }
    for a in 0..=remaining {
        alpha[axis] = a;
        enumerate_grade(dim, grade, axis + 1, remaining - a, alpha, out);
    }
    alpha[axis] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lattice_layout_matches_contract() {
        let g = GridSpec::new(1, 9, 16, 4.0);
        g.validate().unwrap();
        assert_eq!(g.k_max(), 4);
        assert_eq!(g.k_of(0), 0);
        assert_eq!(g.k_of(4), 4);
        assert_eq!(g.k_of(5), -4);
        assert_eq!(g.k_of(8), -1);
        // eta runs over {-(n_v/2) d_eta, ..., (n_v/2 - 1) d_eta}
        assert_eq!(g.eta_index_of(0), 0);
        assert_eq!(g.eta_index_of(7), 7);
        assert_eq!(g.eta_index_of(8), -8);
        assert_eq!(g.eta_index_of(15), -1);
        assert!((g.delta_eta() - std::f64::consts::PI / 4.0).abs() < 1e-15);
        assert!((g.v_of(0) + 4.0).abs() < 1e-15);
        assert!((g.v_of(8)).abs() < 1e-15);
    }

    #[test]
    fn validation_rejects_bad_grids() {
        assert!(GridSpec::new(1, 8, 16, 4.0).validate().is_err()); // even n_x
        assert!(GridSpec::new(1, 9, 15, 4.0).validate().is_err()); // odd n_v
        assert!(GridSpec::new(1, 9, 4, 4.0).validate().is_err()); // n_v too small
        assert!(GridSpec::new(1, 9, 16, -1.0).validate().is_err());
        assert!(GridSpec::new(4, 9, 16, 4.0).validate().is_err());
    }

    #[test]
    fn dealias_cut_is_alias_free() {
        // Images of kept-band products must not land in the kept band:
        // requires 3 * k_cut <= 2 * K.
        for n_x in [5usize, 9, 17, 33, 65] {
            let g = GridSpec::new(1, n_x, 16, 4.0);
            assert!(3 * g.k_cut() <= 2 * g.k_max(), "n_x={n_x}");
        }
    }

    #[test]
    fn negation_maps_are_involutions() {
        let g = GridSpec::new(2, 5, 8, 3.0);
        for flat in 0..g.spatial_len() {
            assert_eq!(g.negate_spatial(g.negate_spatial(flat)), flat);
        }
        for flat in 0..g.velocity_len() {
            // Nyquist rows are self-paired, everything else is a 2-cycle.
            assert_eq!(g.negate_velocity(g.negate_velocity(flat)), flat);
        }
    }

    #[test]
    fn weight_plan_graded_lex() {
        let plan = VelocityWeightPlan::new(2, 2);
        let expect: Vec<[usize; 3]> = vec![
            [0, 0, 0],
            [0, 1, 0],
            [1, 0, 0],
            [0, 2, 0],
            [1, 1, 0],
            [2, 0, 0],
        ];
        assert_eq!(plan.alphas, expect);
        assert!(plan.check(&[2, 1, 0]).is_err());
        assert!(plan.check(&[1, 1, 0]).is_ok());
    }
}
