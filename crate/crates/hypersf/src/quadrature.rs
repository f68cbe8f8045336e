//! Deterministic adaptive quadrature, used as the independent oracle for
//! every closed form in the crate.
//!
//! One engine: Gauss(7)/Kronrod(15) panels refined worst-error-first with a
//! deterministic tie-break, so repeated runs produce bit-identical results.
//! The 2D surface integral is realized as iterated 1D with the inner
//! r-singularity removed analytically by the substitution t^2 = r^2 - 1.

use std::cell::Cell;
use std::collections::BinaryHeap;

use crate::error::{Error, Result};
use crate::geometry::GeometryParams;

/// Kronrod-15 abscissae on [0, 1] side of the symmetric rule.
const XGK: [f64; 8] = [
    0.991_455_371_120_813,
    0.949_107_912_342_759,
    0.864_864_423_359_769,
    0.741_531_185_599_394,
    0.586_087_235_467_691,
    0.405_845_151_377_397,
    0.207_784_955_007_898,
    0.0,
];

/// Kronrod-15 weights matching `XGK`.
const WGK: [f64; 8] = [
    0.022_935_322_010_529,
    0.063_092_092_629_979,
    0.104_790_010_322_250,
    0.140_653_259_715_525,
    0.169_004_726_639_267,
    0.190_350_578_064_785,
    0.204_432_940_075_298,
    0.209_482_141_084_728,
];

/// Gauss-7 weights for the odd Kronrod abscissae (indices 1, 3, 5, 7).
const WG: [f64; 4] = [
    0.129_484_966_168_870,
    0.279_705_391_489_277,
    0.381_830_050_505_119,
    0.417_959_183_673_469,
];

/// Result of an adaptive integration.
#[derive(Debug, Clone, Copy)]
pub struct QuadResult {
    pub value: f64,
    /// Upper estimate of the remaining error (sum of panel estimates).
    pub est_error: f64,
    /// Number of integrand evaluations.
    pub evaluations: usize,
}

fn panel<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> (f64, f64) {
    let half = 0.5 * (b - a);
    let mid = 0.5 * (a + b);
    let mut kronrod = 0.0;
    let mut gauss = 0.0;
    for (i, (&x, &wk)) in XGK.iter().zip(WGK.iter()).enumerate() {
        if x == 0.0 {
            let v = f(mid);
            kronrod += wk * v;
            gauss += WG[3] * v;
        } else {
            let v1 = f(mid - half * x);
            let v2 = f(mid + half * x);
            kronrod += wk * (v1 + v2);
            if i % 2 == 1 {
                gauss += WG[i / 2] * (v1 + v2);
            }
        }
    }
    kronrod *= half;
    gauss *= half;
    (kronrod, (kronrod - gauss).abs())
}

#[derive(Debug)]
struct Panel {
    err: f64,
    a: f64,
    b: f64,
    value: f64,
}

impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.err == other.err && self.a == other.a && self.b == other.b
    }
}
impl Eq for Panel {}
impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Panel {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        // worst error first; ties broken by interval position so the
        // refinement order is deterministic
        self.err
            .total_cmp(&other.err)
            .then_with(|| other.a.total_cmp(&self.a))
            .then_with(|| other.b.total_cmp(&self.b))
    }
}

const MAX_PANELS: usize = 20_000;

/// Adaptive integral of `f` over [lo, hi] to relative tolerance `tol`.
///
/// The error target is `max(tol * |integral|, tiny)`; endpoint-integrable
/// singularities are handled by refinement (the Kronrod nodes never touch
/// panel endpoints), at the cost of a deeper subdivision near the endpoint.
pub fn integrate_1d<F: Fn(f64) -> f64>(f: F, lo: f64, hi: f64, tol: f64) -> Result<QuadResult> {
    if !(lo.is_finite() && hi.is_finite()) {
        return Err(Error::Domain("integrate_1d needs finite bounds".into()));
    }
    if lo == hi {
        return Ok(QuadResult {
            value: 0.0,
            est_error: 0.0,
            evaluations: 0,
        });
    }
    let (lo, hi, orient) = if lo < hi {
        (lo, hi, 1.0)
    } else {
        (hi, lo, -1.0)
    };

    let mut evals = 0usize;
    let (v0, e0) = panel(&f, lo, hi);
    evals += 15;
    if !v0.is_finite() || !e0.is_finite() {
        return Err(Error::NoConvergence(
            "integrate_1d: integrand produced a non-finite value".into(),
        ));
    }

    let mut heap = BinaryHeap::new();
    heap.push(Panel {
        err: e0,
        a: lo,
        b: hi,
        value: v0,
    });
    let mut total = v0;
    let mut live_err = e0;
    // error locked in by panels at the f64 resolution limit
    let mut frozen_err = 0.0f64;

    while live_err + frozen_err > (tol * total.abs()).max(f64::MIN_POSITIVE * 64.0) {
        let worst = heap.pop().expect("heap never empty");
        if worst.err == 0.0 {
            // only frozen or exact panels remain
            heap.push(worst);
            break;
        }
        if heap.len() + 1 >= MAX_PANELS {
            return Err(Error::NoConvergence(format!(
                "integrate_1d: error {:.3e} after {MAX_PANELS} panels",
                live_err + frozen_err
            )));
        }
        let mid = 0.5 * (worst.a + worst.b);
        if mid <= worst.a || mid >= worst.b {
            // panel narrower than f64 spacing: keep its value, retire its
            // error into the frozen pool
            frozen_err += worst.err;
            live_err -= worst.err;
            heap.push(Panel { err: 0.0, ..worst });
            continue;
        }
        let (vl, el) = panel(&f, worst.a, mid);
        let (vr, er) = panel(&f, mid, worst.b);
        evals += 30;
        if !(vl + vr).is_finite() || !(el + er).is_finite() {
            return Err(Error::NoConvergence(
                "integrate_1d: integrand produced a non-finite value".into(),
            ));
        }
        total += vl + vr - worst.value;
        live_err += el + er - worst.err;
        heap.push(Panel {
            err: el,
            a: worst.a,
            b: mid,
            value: vl,
        });
        heap.push(Panel {
            err: er,
            a: mid,
            b: worst.b,
            value: vr,
        });
    }

    // deterministic final reduction: sum panels ordered by position
    let mut panels: Vec<Panel> = heap.into_vec();
    panels.sort_by(|p, q| p.a.total_cmp(&q.a));
    let value: f64 = panels.iter().map(|p| p.value).sum();
    let est_error: f64 = panels.iter().map(|p| p.err).sum::<f64>() + frozen_err;

    Ok(QuadResult {
        value: orient * value,
        est_error,
        evaluations: evals,
    })
}

/// 2D quadrature of the lateral surface area of the hyperboloid cap:
///
/// S = a b int_{-pi}^{pi} int_1^lambda
///       sqrt(1 + c^2 r^2/(r^2-1) (cos^2/a^2 + sin^2/b^2)) r dr dtheta.
///
/// The (r-1)^(-1/2) endpoint singularity is removed by t^2 = r^2 - 1, which
/// turns the inner integrand into sqrt(t^2 (1 + c^2 k) + c^2 k), smooth at
/// t = 0; the theta range folds to 4 x [0, pi/2] by ellipse symmetry.
pub fn surface_integral_oracle(params: &GeometryParams, tol: f64) -> Result<QuadResult> {
    let (a, b, c) = (params.a, params.b, params.c);
    let lambda = params.lambda();
    let tmax = (lambda * lambda - 1.0).sqrt();
    if tmax == 0.0 {
        return Ok(QuadResult {
            value: 0.0,
            est_error: 0.0,
            evaluations: 0,
        });
    }

    let inner_tol = tol / 10.0;
    let inner_evals = Cell::new(0usize);
    let inner_err = Cell::new(0.0f64);
    let failure: Cell<Option<Error>> = Cell::new(None);

    let outer = integrate_1d(
        |theta| {
            let k = (theta.cos() / a).powi(2) + (theta.sin() / b).powi(2);
            let ck = c * c * k;
            match integrate_1d(|t| (t * t * (1.0 + ck) + ck).sqrt(), 0.0, tmax, inner_tol) {
                Ok(r) => {
                    inner_evals.set(inner_evals.get() + r.evaluations);
                    inner_err.set(inner_err.get().max(r.est_error));
                    r.value
                }
                Err(e) => {
                    failure.set(Some(e));
                    0.0
                }
            }
        },
        0.0,
        std::f64::consts::FRAC_PI_2,
        tol,
    )?;
    if let Some(e) = failure.take() {
        return Err(e);
    }

    Ok(QuadResult {
        value: 4.0 * a * b * outer.value,
        est_error: 4.0 * a * b * (outer.est_error + inner_err.get() * std::f64::consts::FRAC_PI_2),
        evaluations: outer.evaluations + inner_evals.get(),
    })
}

/// Surface-of-revolution oracle for the circular case a = b:
/// S = 2 pi int_0^H x(z) sqrt(1 + x'(z)^2) dz with x(z) = a sqrt(1 + z^2/c^2).
pub fn revolve_oracle(params: &GeometryParams, tol: f64) -> Result<QuadResult> {
    if params.a != params.b {
        return Err(Error::Domain(format!(
            "revolve_oracle needs a = b, got a = {}, b = {}",
            params.a, params.b
        )));
    }
    let (a, c, h) = (params.a, params.c, params.h);
    if h == 0.0 {
        return Ok(QuadResult {
            value: 0.0,
            est_error: 0.0,
            evaluations: 0,
        });
    }
    let r = integrate_1d(
        |z| {
            let x = a * (1.0 + (z / c).powi(2)).sqrt();
            let dx = a * z / (c * c * (1.0 + (z / c).powi(2)).sqrt());
            x * (1.0 + dx * dx).sqrt()
        },
        0.0,
        h,
        tol,
    )?;
    Ok(QuadResult {
        value: 2.0 * std::f64::consts::PI * r.value,
        est_error: 2.0 * std::f64::consts::PI * r.est_error,
        evaluations: r.evaluations,
    })
}

/// Slice oracle for the volume: V = pi a b int_0^H (1 + z^2/c^2) dz.
pub fn volume_slice_oracle(params: &GeometryParams, tol: f64) -> Result<QuadResult> {
    let (a, b, c, h) = (params.a, params.b, params.c, params.h);
    let r = integrate_1d(|z| 1.0 + (z / c).powi(2), 0.0, h, tol)?;
    let s = std::f64::consts::PI * a * b;
    Ok(QuadResult {
        value: s * r.value,
        est_error: s * r.est_error,
        evaluations: r.evaluations,
    })
}
