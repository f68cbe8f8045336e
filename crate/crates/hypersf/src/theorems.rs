//! Closed forms for the two trigonometric integrals and the radial integral
//! the surface-area derivation rests on:
//!
//! ```text
//! T1, T2:  int_{-pi}^{pi} (cos^2 t / sigma^2 + sin^2 t / lambda^2)^s dt
//! T3:      int_1^lambda r^{2s+1} (1 - r^2)^{-s} dr
//! ```
//!
//! T1 and T2 are the same integral with the roles of sigma and lambda
//! swapped (theta -> pi/2 - theta), stated separately so the 2F1 argument
//! stays in [0, 1). T3 carries a (1 - r^2)^{-s} branch choice for r > 1:
//! the principal branch, giving a complex value for non-integer s that the
//! complex-quadrature oracle in the tests reproduces.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::gamma::{gamma_ratio, GammaRatioSpec};
use crate::hypergeometric::hyp2f1_real;

/// (2 pi lambda / sigma^{1+2s}) 2F1(1/2, 1+s; 1; 1 - lambda^2/sigma^2),
/// for sigma >= lambda > 0.
pub fn theorem1_closed(sigma: f64, lambda: f64, s: f64) -> Result<f64> {
    if !(lambda > 0.0) || !(sigma >= lambda) {
        return Err(Error::Domain(format!(
            "theorem 1 needs sigma >= lambda > 0, got sigma = {sigma}, lambda = {lambda} \
             (use theorem2_closed for lambda >= sigma)"
        )));
    }
    let w = 1.0 - (lambda / sigma).powi(2);
    let f = hyp2f1_real(0.5, 1.0 + s, 1.0, w)?;
    Ok(2.0 * std::f64::consts::PI * lambda * sigma.powf(-1.0 - 2.0 * s) * f)
}

/// (2 pi sigma / lambda^{1+2s}) 2F1(1/2, 1+s; 1; 1 - sigma^2/lambda^2),
/// for lambda >= sigma > 0.
pub fn theorem2_closed(sigma: f64, lambda: f64, s: f64) -> Result<f64> {
    if !(sigma > 0.0) || !(lambda >= sigma) {
        return Err(Error::Domain(format!(
            "theorem 2 needs lambda >= sigma > 0, got sigma = {sigma}, lambda = {lambda} \
             (use theorem1_closed for sigma >= lambda)"
        )));
    }
    let w = 1.0 - (sigma / lambda).powi(2);
    let f = hyp2f1_real(0.5, 1.0 + s, 1.0, w)?;
    Ok(2.0 * std::f64::consts::PI * sigma * lambda.powf(-1.0 - 2.0 * s) * f)
}

/// lambda^{2s} (1-lambda^2)^{1-s} Gamma(s-1)/(2 lambda^2 Gamma(s))
/// * 2F1(2, 1-s; 2-s; 1 - 1/lambda^2), for lambda >= 1 and s < 1.
///
/// Gamma(s-1)/Gamma(s) is evaluated through the pole-cancelling quotient
/// (equal to 1/(s-1), finite at s = 0, -1, -2, ...), never as a ratio of two
/// overflowing magnitudes. For integer s the power (1-lambda^2)^{1-s} is
/// resolved by parity into an exactly real value; otherwise the principal
/// branch makes the result complex.
pub fn theorem3_closed(lambda: f64, s: f64) -> Result<Complex64> {
    if !(lambda >= 1.0) {
        return Err(Error::Domain(format!(
            "theorem 3 needs lambda >= 1, got {lambda}"
        )));
    }
    if !(s < 1.0) {
        return Err(Error::Domain(format!("theorem 3 needs s < 1, got {s}")));
    }
    let w = 1.0 - 1.0 / (lambda * lambda);
    let f = hyp2f1_real(2.0, 1.0 - s, 2.0 - s, w)?;
    let ratio = gamma_ratio(&GammaRatioSpec::real(&[s - 1.0], &[s]))?;
    debug_assert!((ratio.re - 1.0 / (s - 1.0)).abs() <= 1e-10 * ratio.norm());

    let scale = lambda.powf(2.0 * s) / (2.0 * lambda * lambda);
    let one_minus_l2 = 1.0 - lambda * lambda;
    let power = if s.fract() == 0.0 {
        // (1-lambda^2)^{1-s} with integer exponent: exact parity arithmetic
        let e = 1.0 - s;
        let mag = (lambda * lambda - 1.0).powf(e);
        let sign = if (e as i64).rem_euclid(2) == 0 {
            1.0
        } else {
            -1.0
        };
        Complex64::new(sign * mag, 0.0)
    } else {
        Complex64::new(one_minus_l2, 0.0).powc(Complex64::new(1.0 - s, 0.0))
    };
    Ok(power * ratio * scale * f)
}
