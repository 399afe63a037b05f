use serde::{Deserialize, Serialize};

#[cfg(not(feature = "std"))]
#[allow(unused_imports)]
use num_traits::Float;

/// Activation function of a single neuron.
///
/// Each kind supplies the function value and its first derivative, both as
/// functions of the pre-activation input.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ActivationKind {
    Identity,
    /// Hyperbolic tangent, the saturating nonlinearity used in hidden layers.
    Tanh,
    /// Logistic sigmoid 1 / (1 + e^-x).
    Logistic,
    /// One-dimensional Gaussian bump e^(-x^2).
    GaussianRbf,
}

impl ActivationKind {
    pub fn value(self, x: f64) -> f64 {
        match self {
            ActivationKind::Identity => x,
            ActivationKind::Tanh => x.tanh(),
            ActivationKind::Logistic => 1.0 / (1.0 + (-x).exp()),
            ActivationKind::GaussianRbf => (-(x * x)).exp(),
        }
    }

    pub fn derivative(self, x: f64) -> f64 {
        match self {
            ActivationKind::Identity => 1.0,
            ActivationKind::Tanh => {
                let t = x.tanh();
                1.0 - t * t
            }
            ActivationKind::Logistic => {
                let s = 1.0 / (1.0 + (-x).exp());
                s * (1.0 - s)
            }
            ActivationKind::GaussianRbf => -2.0 * x * (-(x * x)).exp(),
        }
    }

    /// All supported kinds, handy for exhaustive property checks.
    pub const ALL: [ActivationKind; 4] = [
        ActivationKind::Identity,
        ActivationKind::Tanh,
        ActivationKind::Logistic,
        ActivationKind::GaussianRbf,
    ];
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;
    use rand::SeedableRng;

    /// Derivatives must agree with central finite differences at 100 random
    /// points per kind.
    #[test]
    fn derivative_matches_finite_differences() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for kind in ActivationKind::ALL {
            for _ in 0..100 {
                let x: f64 = rng.gen_range(-3.0..3.0);
                let h = 1e-6 * (1.0 + x.abs());
                let fd = (kind.value(x + h) - kind.value(x - h)) / (2.0 * h);
                let an = kind.derivative(x);
                let denom = an.abs().max(fd.abs()).max(1.0);
                assert!(
                    ((fd - an) / denom).abs() <= 1e-6,
                    "{kind:?} at {x}: fd={fd}, analytic={an}"
                );
            }
        }
    }

    #[test]
    fn known_values() {
        assert_eq!(ActivationKind::Identity.value(3.5), 3.5);
        assert!((ActivationKind::Tanh.value(1.0) - 0.7615941559557649).abs() < 1e-15);
        assert!((ActivationKind::Logistic.value(0.0) - 0.5).abs() < 1e-15);
        assert_eq!(ActivationKind::GaussianRbf.value(0.0), 1.0);
    }
}
