use super::{ActivationKind, NumericError};

#[cfg(not(feature = "std"))]
#[allow(unused_imports)]
use num_traits::Float;

/// Output of a single neuron: `f(sum_i w_i * x_i - bias)`.
///
/// The bias enters with a negative sign, i.e. it acts as a threshold.
pub fn neuron_output(
    inputs: &[f64],
    weights: &[f64],
    bias: f64,
    activation: ActivationKind,
) -> Result<f64, NumericError> {
    if inputs.len() != weights.len() {
        return Err(NumericError::DimensionMismatch {
            expected: weights.len(),
            got: inputs.len(),
        });
    }
    let net: f64 = inputs.iter().zip(weights).map(|(x, w)| x * w).sum();
    Ok(activation.value(net - bias))
}

/// Gaussian radial basis kernel `exp(-||x - c||^2 / (2 sigma^2))` with the
/// Euclidean distance. The value lies in `(0, 1]` and equals 1 exactly when
/// `x == center`.
pub fn rbf_kernel(x: &[f64], center: &[f64], spread: f64) -> Result<f64, NumericError> {
    if x.len() != center.len() {
        return Err(NumericError::DimensionMismatch {
            expected: center.len(),
            got: x.len(),
        });
    }
    if !(spread > 0.0) {
        return Err(NumericError::NonPositiveSpread(spread));
    }
    let dist_sq: f64 = x
        .iter()
        .zip(center)
        .map(|(a, b)| (a - b) * (a - b))
        .sum();
    Ok((-dist_sq / (2.0 * spread * spread)).exp())
}
