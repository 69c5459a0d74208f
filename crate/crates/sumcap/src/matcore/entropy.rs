//! Entropies, all in bits (base-2 logarithms), with 0·log 0 := 0.

use super::matrix::{hermitian_eigenvalues, CMatrix};
use super::state::{DensityMatrix, ProbDist};
use crate::error::{Error, Result};

/// Rényi order. Infinity is a distinguished variant, never a float overflow.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum RenyiOrder {
    Alpha(f64),
    Infinity,
}

impl RenyiOrder {
    /// Orders below 1 are rejected; the toolkit only needs α ≥ 1.
    pub fn new(alpha: f64) -> Result<Self> {
        if !(alpha >= 1.0) {
            return Err(Error::InvalidParameter(format!(
                "Rényi order must satisfy α ≥ 1, got {alpha}"
            )));
        }
        if alpha.is_infinite() {
            return Ok(Self::Infinity);
        }
        Ok(Self::Alpha(alpha))
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s.trim() {
            "inf" | "Inf" | "INF" | "infinity" | "∞" => Ok(Self::Infinity),
            other => {
                let a: f64 = other.parse().map_err(|_| {
                    Error::InvalidParameter(format!("cannot parse Rényi order {other:?}"))
                })?;
                Self::new(a)
            }
        }
    }
}

impl std::fmt::Display for RenyiOrder {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Self::Alpha(a) => write!(f, "{a}"),
            Self::Infinity => write!(f, "inf"),
        }
    }
}

fn clip(eigs: &[f64]) -> impl Iterator<Item = f64> + '_ {
    eigs.iter().map(|&l| l.max(0.0)).filter(|&l| l > 0.0)
}

/// −Σ λ log₂ λ over a clipped spectrum.
pub fn entropy_from_eigenvalues(eigs: &[f64]) -> f64 {
    -clip(eigs).map(|l| l * l.log2()).sum::<f64>()
}

/// Rényi entropy from a spectrum: (1/(1−α)) log₂ Σ λᵅ, with the α = 1 and
/// α = ∞ limits dispatched to their closed forms.
pub fn renyi_from_eigenvalues(eigs: &[f64], order: RenyiOrder) -> f64 {
    match order {
        RenyiOrder::Infinity => {
            let lmax = eigs.iter().fold(0.0f64, |m, &l| m.max(l));
            -lmax.log2()
        }
        RenyiOrder::Alpha(a) if (a - 1.0).abs() < 1e-12 => entropy_from_eigenvalues(eigs),
        RenyiOrder::Alpha(a) => {
            let s: f64 = clip(eigs).map(|l| l.powf(a)).sum();
            s.log2() / (1.0 - a)
        }
    }
}

/// Von Neumann entropy S(ρ) in bits.
pub fn von_neumann_entropy(rho: &DensityMatrix) -> f64 {
    entropy_from_eigenvalues(&rho.eigenvalues())
}

/// α-Rényi entropy S_α(ρ) in bits, α ≥ 1.
pub fn renyi_entropy(rho: &DensityMatrix, order: RenyiOrder) -> f64 {
    renyi_from_eigenvalues(&rho.eigenvalues(), order)
}

/// Shannon entropy of a probability distribution, in bits.
pub fn shannon_entropy(p: &ProbDist) -> f64 {
    entropy_from_eigenvalues(p.weights())
}

/// Binary entropy h(x) in bits.
pub fn binary_entropy(x: f64) -> f64 {
    if x <= 0.0 || x >= 1.0 {
        return 0.0;
    }
    -x * x.log2() - (1.0 - x) * (1.0 - x).log2()
}

/// Entropy of a Hermitian-by-construction matrix (hot path: symmetrizes,
/// never validates).
pub(crate) fn entropy_of_hermitian(m: &CMatrix) -> f64 {
    entropy_from_eigenvalues(&hermitian_eigenvalues(m))
}

pub(crate) fn renyi_of_hermitian(m: &CMatrix, order: RenyiOrder) -> f64 {
    renyi_from_eigenvalues(&hermitian_eigenvalues(m), order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matcore::matrix::diagonal;
    use crate::matcore::random::{random_density, random_pure};

    const H_3_4: f64 = 0.811_278_124_459_132_8; // h(3/4)

    #[test]
    fn von_neumann_known_values() {
        let pure = random_pure(3, 1).to_density();
        assert!(von_neumann_entropy(&pure).abs() < 1e-10);

        let mixed = DensityMatrix::maximally_mixed(2);
        assert!((von_neumann_entropy(&mixed) - 1.0).abs() < 1e-12);

        let rho = DensityMatrix::new(diagonal(&[0.75, 0.25]), vec![2]).unwrap();
        assert!((von_neumann_entropy(&rho) - H_3_4).abs() < 1e-12);
    }

    #[test]
    fn renyi_known_values() {
        let rho = DensityMatrix::new(diagonal(&[0.75, 0.25]), vec![2]).unwrap();
        let s2 = renyi_entropy(&rho, RenyiOrder::new(2.0).unwrap());
        assert!((s2 - 0.678_071_905_112_637_7).abs() < 1e-12);
        let sinf = renyi_entropy(&rho, RenyiOrder::Infinity);
        assert!((sinf - 0.415_037_499_278_843_8).abs() < 1e-12);
    }

    #[test]
    fn renyi_of_maximally_mixed_is_log_d() {
        for d in [2usize, 3, 5] {
            let rho = DensityMatrix::maximally_mixed(d);
            for order in [
                RenyiOrder::new(1.0).unwrap(),
                RenyiOrder::new(2.0).unwrap(),
                RenyiOrder::new(5.5).unwrap(),
                RenyiOrder::Infinity,
            ] {
                assert!((renyi_entropy(&rho, order) - (d as f64).log2()).abs() < 1e-10);
            }
        }
    }

    #[test]
    fn renyi_monotone_in_alpha_and_continuous_at_one() {
        for seed in 0..5u64 {
            let rho = random_density(3, 3, seed);
            let grid = [1.0, 1.2, 1.5, 2.0, 3.0, 7.0];
            let values: Vec<f64> = grid
                .iter()
                .map(|&a| renyi_entropy(&rho, RenyiOrder::new(a).unwrap()))
                .collect();
            for w in values.windows(2) {
                assert!(w[1] <= w[0] + 1e-10, "Rényi entropy must be non-increasing in α");
            }
            let sinf = renyi_entropy(&rho, RenyiOrder::Infinity);
            assert!(sinf <= values[values.len() - 1] + 1e-10);

            // Only α ≥ 1 is representable; check the right limit against the
            // α = 1 dispatch.
            let s1 = values[0];
            let near = renyi_entropy(&rho, RenyiOrder::new(1.0 + 1e-4).unwrap());
            assert!((near - s1).abs() < 1e-3);
        }
    }

    #[test]
    fn entropy_bounds_hold_on_random_states() {
        for seed in 0..10u64 {
            let rho = random_density(4, 1 + (seed as usize % 4), seed);
            let s = von_neumann_entropy(&rho);
            assert!(s >= -1e-12 && s <= 2.0 + 1e-12);
        }
    }

    #[test]
    fn shannon_known_values() {
        assert!(shannon_entropy(&ProbDist::new(vec![1.0, 0.0]).unwrap()).abs() < 1e-15);
        assert!((shannon_entropy(&ProbDist::new(vec![0.5, 0.5]).unwrap()) - 1.0).abs() < 1e-15);
        let p = ProbDist::new(vec![2.0 / 3.0, 1.0 / 3.0]).unwrap();
        assert!((shannon_entropy(&p) - 0.918_295_834_054_489_6).abs() < 1e-12);
    }

    #[test]
    fn order_below_one_rejected() {
        assert!(RenyiOrder::new(0.5).is_err());
        assert!(RenyiOrder::parse("0.99").is_err());
        assert!(matches!(RenyiOrder::parse("inf").unwrap(), RenyiOrder::Infinity));
        assert!(matches!(RenyiOrder::parse("2").unwrap(), RenyiOrder::Alpha(_)));
    }
}
