//! Closed-form Meijer-G pathways: the G^{2,2}_{2,2} to 2F1 conversion, the
//! general decomposition into hypergeometric series (one term per
//! distinguished upper parameter), and the specific G^{2,2}_{3,3} kernel of
//! the surface-area derivation.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::gamma::{gamma_ratio, GammaRatioSpec};
use crate::hypergeometric::{hyp2f1, pfq_series, PFQParams, SeriesValue};

/// A Meijer G specification: first `n` of `a` and first `m` of `b` are the
/// distinguished parameters.
#[derive(Debug, Clone)]
pub struct GSpec {
    pub a: Vec<Complex64>,
    pub b: Vec<Complex64>,
    pub m: usize,
    pub n: usize,
    pub argument: Complex64,
}

impl GSpec {
    pub fn new(
        a: Vec<Complex64>,
        b: Vec<Complex64>,
        m: usize,
        n: usize,
        argument: Complex64,
    ) -> Result<Self> {
        let (p, q) = (a.len(), b.len());
        if p > q || m == 0 || m > q || n > p {
            return Err(Error::Parameter(format!(
                "need p <= q, 1 <= m <= q, 0 <= n <= p; got p={p}, q={q}, m={m}, n={n}"
            )));
        }
        Ok(Self {
            a,
            b,
            m,
            n,
            argument,
        })
    }
}

/// Conversion relation
///
/// G^{2,2}_{2,2}(z | a1,a2; b1,b2) =
///   [G(1-a1+b1) G(1-a1+b2) G(1-a2+b1) G(1-a2+b2) / G(2-a1-a2+b1+b2)]
///   * z^{b1} 2F1(1-a1+b1, 1-a2+b1; 2-a1-a2+b1+b2; 1-z),
///
/// for |1-z| < 1 and 2-a1-a2+b1+b2 not a nonpositive integer.
pub fn g2222_to_2f1(
    a1: Complex64,
    a2: Complex64,
    b1: Complex64,
    b2: Complex64,
    z: Complex64,
) -> Result<Complex64> {
    if (1.0 - z).norm() >= 1.0 {
        return Err(Error::Domain(format!(
            "conversion needs |1-z| < 1, got {}",
            (1.0 - z).norm()
        )));
    }
    let c = 2.0 - a1 - a2 + b1 + b2;
    let pref = gamma_ratio(&GammaRatioSpec::new(
        vec![1.0 - a1 + b1, 1.0 - a1 + b2, 1.0 - a2 + b1, 1.0 - a2 + b2],
        vec![c],
    ))?;
    let f = hyp2f1(1.0 - a1 + b1, 1.0 - a2 + b1, c, 1.0 - z)?;
    Ok(pref * z.powc(b1) * f)
}

/// One term of the decomposition: `prefactor * qF_{p-1}(series)`.
#[derive(Debug, Clone)]
pub struct DecompositionTerm {
    pub prefactor: Complex64,
    pub series: PFQParams,
}

impl DecompositionTerm {
    /// Evaluate the term's series and multiply by the prefactor. A zero
    /// prefactor short-circuits (its series may sit outside its own
    /// convergence region without harm).
    pub fn eval(&self, tol: f64) -> Result<SeriesValue> {
        if self.prefactor.norm() == 0.0 {
            return Ok(SeriesValue {
                value: Complex64::new(0.0, 0.0),
                terms_used: 0,
                est_error: 0.0,
                converged: true,
            });
        }
        let sv = pfq_series(&self.series, tol, crate::hypergeometric::DEFAULT_MAX_TERMS)?;
        Ok(SeriesValue {
            value: self.prefactor * sv.value,
            terms_used: sv.terms_used,
            est_error: sv.est_error * self.prefactor.norm(),
            converged: sv.converged,
        })
    }
}

/// Decomposition of a Meijer G-function into `n` hypergeometric terms, one
/// per distinguished upper parameter a_h:
///
/// ```text
/// G = sum_h  prod_{j!=h,j<=n} G(a_h-a_j) prod_{j<=m} G(1+b_j-a_h)
///            ----------------------------------------------------- z^{a_h-1}
///            prod_{j>n} G(1+a_j-a_h)     prod_{j>m} G(a_h-b_j)
///        * qF_{p-1}(1+b-a_h ; 1+a-a_h (j != h) ; (-1)^{q-m-n} / z)
/// ```
///
/// Preconditions: no two distinguished upper parameters differ by an
/// integer, and one of the published convergence conditions holds:
/// (i) p > q, (ii) p = q, m+n = p+1, z not in (-1,0),
/// (iii) p = q, m+n > p+1, (iv) p = q, m+n = p, |z| > 1.
pub fn g_decompose(spec: &GSpec) -> Result<Vec<DecompositionTerm>> {
    let (p, q) = (spec.a.len(), spec.b.len());
    let (m, n) = (spec.m, spec.n);
    let z = spec.argument;
    if n == 0 {
        return Err(Error::Parameter("decomposition needs n >= 1".into()));
    }
    if z.norm() == 0.0 {
        return Err(Error::Domain("decomposition needs z != 0".into()));
    }
    for h in 0..n {
        for j in 0..n {
            if j != h {
                let d = spec.a[h] - spec.a[j];
                if d.im == 0.0 && d.re.fract() == 0.0 {
                    return Err(Error::Parameter(format!(
                        "a[{h}] - a[{j}] = {} is an integer: decomposition degenerates",
                        d.re
                    )));
                }
            }
        }
    }
    let condition_ok = p > q
        || (m + n == p + 1 && !(z.im == 0.0 && z.re > -1.0 && z.re < 0.0))
        || (m + n > p + 1)
        || (m + n == p && z.norm() > 1.0);
    if !condition_ok {
        return Err(Error::NoConvergence(
            "no published convergence condition holds for this shape and argument".into(),
        ));
    }
    // The inner series is qF_{p-1}: for p = q it needs |1/z| < 1.
    if p == q && z.norm() <= 1.0 {
        return Err(Error::NoConvergence(format!(
            "inner series argument 1/|z| = {} >= 1",
            1.0 / z.norm()
        )));
    }
    if p == q && 1.0 / z.norm() > 0.9 {
        log::warn!(
            "meijer decomposition: inner series argument {:.4} close to 1; \
             precision degrades",
            1.0 / z.norm()
        );
    }

    let inner_sign = if (q as i64 - m as i64 - n as i64).rem_euclid(2) == 0 {
        1.0
    } else {
        -1.0
    };
    let inner_arg = inner_sign / z;

    let mut terms = Vec::with_capacity(n);
    for h in 0..n {
        let ah = spec.a[h];
        let mut num = Vec::new();
        let mut den = Vec::new();
        for (j, &aj) in spec.a.iter().enumerate().take(n) {
            if j != h {
                num.push(ah - aj);
            }
        }
        for &bj in spec.b.iter().take(m) {
            num.push(1.0 + bj - ah);
        }
        for &aj in spec.a.iter().skip(n) {
            den.push(1.0 + aj - ah);
        }
        for &bj in spec.b.iter().skip(m) {
            den.push(ah - bj);
        }
        let prefactor = gamma_ratio(&GammaRatioSpec::new(num, den))? * z.powc(ah - 1.0);

        let upper: Vec<Complex64> = spec.b.iter().map(|&bj| 1.0 + bj - ah).collect();
        let lower: Vec<Complex64> = spec
            .a
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != h)
            .map(|(_, &aj)| 1.0 + aj - ah)
            .collect();
        terms.push(DecompositionTerm {
            prefactor,
            series: PFQParams::new(upper, lower, inner_arg),
        });
    }
    Ok(terms)
}

/// Sum of the decomposition terms.
pub fn g_decompose_eval(spec: &GSpec, tol: f64) -> Result<SeriesValue> {
    let terms = g_decompose(spec)?;
    let mut value = Complex64::new(0.0, 0.0);
    let mut terms_used = 0;
    let mut est_error = 0.0;
    let mut converged = true;
    for t in &terms {
        let sv = t.eval(tol)?;
        value += sv.value;
        terms_used += sv.terms_used;
        est_error += sv.est_error;
        converged &= sv.converged;
    }
    Ok(SeriesValue {
        value,
        terms_used,
        est_error,
        converged,
    })
}

/// The surface-area kernel
///
/// G^{2,2}_{3,3}(z | 3/2, -m; 2+n / 0, 1+n; 0),  z > 1,
///
/// by decomposition: the h = 2 term dies on a Gamma(-m) in its denominator,
/// leaving the single 3F2 term
///
/// ```text
/// G(3/2+m) G(-1/2) G(n+1/2) / (G(n+3/2) G(3/2)) * sqrt(z)
///   * 3F2(-1/2, -1/2, n+1/2 ; -1/2-m, n+3/2 ; -1/z)
/// ```
///
/// (a_1 - a_2 = 3/2 + m is never an integer, so the decomposition
/// precondition always holds).
pub fn g2233_area_kernel(m: u32, n: u32, z: f64) -> Result<f64> {
    if !(z > 1.0) {
        return Err(Error::Domain(format!("kernel needs z > 1, got {z}")));
    }
    let spec = GSpec::new(
        vec![
            Complex64::new(1.5, 0.0),
            Complex64::new(-(m as f64), 0.0),
            Complex64::new(2.0 + n as f64, 0.0),
        ],
        vec![
            Complex64::new(0.0, 0.0),
            Complex64::new(1.0 + n as f64, 0.0),
            Complex64::new(0.0, 0.0),
        ],
        2,
        2,
        Complex64::new(z, 0.0),
    )?;
    let sv = g_decompose_eval(&spec, 1e-14)?;
    if sv.value.im.abs() > 1e-10 * sv.value.re.abs().max(1.0) {
        return Err(Error::Domain(format!(
            "kernel produced a non-real value {} for real z; branch handling is broken",
            sv.value
        )));
    }
    Ok(sv.value.re)
}
