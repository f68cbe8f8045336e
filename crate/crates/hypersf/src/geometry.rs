//! Surface area and volume of the hyperboloid-of-one-sheet cap
//! z = c sqrt(x^2/a^2 + y^2/b^2 - 1) between z = 0 and z = H.
//!
//! The lateral area has the closed form
//!
//! ```text
//! S = 2 pi b^2 c sqrt(lambda^2-1) / (lambda a) * F(x1, x2, x3)
//! ```
//!
//! where F is a three-variable Srivastava–Daoust series with arguments
//! x1 = b^2/a^2 - 1, x2 = 1 - 1/lambda^2, x3 = a^2(1-lambda^2)/(c^2 lambda^2)
//! and lambda = sqrt(1 + H^2/c^2). Two independent evaluation paths are
//! provided (the tableau evaluator and a raw triple sum with its own
//! Pochhammer bookkeeping) plus the 2D quadrature oracle as a fallback for
//! arguments outside the |x_i| < 1 region.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypergeometric::SeriesValue;
use crate::quadrature;
use crate::srivastava_daoust::{sd_eval, GlobalParam, SDSpec, VariableParam};

/// Hyperboloid semi-axes a >= b > 0, axial scale c > 0 and cap height H >= 0.
///
/// The strict case a > b is the validated default; a = b (circular cross
/// section) is admitted through [`GeometryParams::with_circular`] and is
/// certified against the surface-of-revolution oracle. H = 0 denotes the
/// degenerate cap, for which every area and volume is zero.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GeometryParams {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub h: f64,
}

impl GeometryParams {
    pub fn new(a: f64, b: f64, c: f64, h: f64) -> Result<Self> {
        if !(a > b) {
            return Err(Error::Domain(format!(
                "semi-axes must satisfy a > b, got a = {a}, b = {b} \
                 (use with_circular for a = b)"
            )));
        }
        Self::with_circular(a, b, c, h)
    }

    /// Constructor admitting the circular case a = b.
    pub fn with_circular(a: f64, b: f64, c: f64, h: f64) -> Result<Self> {
        if !(b > 0.0) || !(a >= b) || !(c > 0.0) || !(h >= 0.0) || !h.is_finite() {
            return Err(Error::Domain(format!(
                "invalid geometry: need a >= b > 0, c > 0, H >= 0; got \
                 a = {a}, b = {b}, c = {c}, H = {h}"
            )));
        }
        Ok(Self { a, b, c, h })
    }

    /// lambda = sqrt(1 + H^2/c^2), the ratio of the cap's upper ellipse
    /// semi-axes to the waist ellipse semi-axes.
    pub fn lambda(&self) -> f64 {
        (1.0 + (self.h / self.c).powi(2)).sqrt()
    }

    /// Uniform scaling by k > 0 (areas scale by k^2, volumes by k^3).
    pub fn scaled(&self, k: f64) -> Result<Self> {
        Self::with_circular(self.a * k, self.b * k, self.c * k, self.h * k)
    }
}

/// lambda = sqrt(1 + H^2/c^2).
pub fn lambda_of(params: &GeometryParams) -> f64 {
    params.lambda()
}

/// lambda recovered from measured base ellipses: the ratio of the larger
/// semi-axis to the smaller. Returns 1 for equal bases (a degenerate
/// cylinder, for which no axial scale c exists).
pub fn lambda_from_bases(large_semi_axis: f64, small_semi_axis: f64) -> Result<f64> {
    if !(small_semi_axis > 0.0) || !large_semi_axis.is_finite() {
        return Err(Error::Domain(
            "semi-axes must be positive and finite".into(),
        ));
    }
    let ratio = large_semi_axis / small_semi_axis;
    if ratio < 1.0 {
        return Err(Error::Domain(format!(
            "base ratio {ratio} < 1: not a hyperboloid cap"
        )));
    }
    Ok(ratio)
}

/// Axial scale from a measured lambda and cap height: c = H / sqrt(lambda^2 - 1).
pub fn axial_scale_from_lambda(lambda: f64, h: f64) -> Result<f64> {
    if !(lambda > 1.0) {
        return Err(Error::Domain(format!(
            "lambda = {lambda} <= 1: axial scale undefined (degenerate cylinder)"
        )));
    }
    if !(h > 0.0) {
        return Err(Error::Domain("cap height must be positive".into()));
    }
    Ok(h / (lambda * lambda - 1.0).sqrt())
}

/// The three series arguments and their |x| < 1 region tests.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct RegionCheck {
    /// (b^2/a^2 - 1, 1 - 1/lambda^2, a^2 (1 - lambda^2) / (c^2 lambda^2)).
    pub x: [f64; 3],
    pub inside: [bool; 3],
}

impl RegionCheck {
    pub fn all_inside(&self) -> bool {
        self.inside.iter().all(|&b| b)
    }

    /// Name of the first violated condition, if any.
    pub fn first_failure(&self) -> Option<String> {
        self.inside
            .iter()
            .position(|&ok| !ok)
            .map(|i| format!("|x{}| = {} >= 1", i + 1, self.x[i].abs()))
    }
}

/// Arguments of the closed-form series for the given geometry.
///
/// x1 and x2 always lie in (-1, 1] for valid parameters; x3 leaves the
/// region exactly when a^2 H^2 >= c^4 + c^2 H^2.
pub fn area_region_check(params: &GeometryParams) -> RegionCheck {
    let lambda2 = 1.0 + (params.h / params.c).powi(2);
    let x1 = (params.b / params.a).powi(2) - 1.0;
    let x2 = 1.0 - 1.0 / lambda2;
    let x3 = params.a.powi(2) * (1.0 - lambda2) / (params.c.powi(2) * lambda2);
    RegionCheck {
        x: [x1, x2, x3],
        inside: [x1.abs() < 1.0, x2.abs() < 1.0, x3.abs() < 1.0],
    }
}

/// Which evaluation produced an [`AreaResult`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum AreaMethod {
    ClosedForm,
    TripleSum,
    Oracle,
}

/// Lateral surface area with provenance.
#[derive(Debug, Clone)]
pub struct AreaResult {
    pub area: f64,
    pub method: AreaMethod,
    /// True when the closed-form region test passed (always true for the
    /// series paths; false marks an oracle fallback).
    pub region_ok: bool,
    /// Series metadata for the series-based methods.
    pub series: Option<SeriesValue>,
}

/// The coefficient tableau of the closed-form area series:
///
/// ```text
/// F^{1:1;1;2}_{2:1;0;0} ( [1/2 : 0,1,1] : [1/2 : 1] ; [2 : 1] ; [-1/2 : 1], [-1/2 : 1] ;
///                         [-1/2 : -1,0,1], [3/2 : 0,1,1] : [1 : 1] ; — ; — )
/// ```
pub fn area_sd_spec() -> SDSpec {
    SDSpec {
        variables: 3,
        upper_global: vec![GlobalParam {
            value: 0.5,
            shifts: vec![0, 1, 1],
        }],
        lower_global: vec![
            GlobalParam {
                value: -0.5,
                shifts: vec![-1, 0, 1],
            },
            GlobalParam {
                value: 1.5,
                shifts: vec![0, 1, 1],
            },
        ],
        upper_per_variable: vec![
            vec![VariableParam {
                value: 0.5,
                shift: 1,
            }],
            vec![VariableParam {
                value: 2.0,
                shift: 1,
            }],
            vec![
                VariableParam {
                    value: -0.5,
                    shift: 1,
                },
                VariableParam {
                    value: -0.5,
                    shift: 1,
                },
            ],
        ],
        lower_per_variable: vec![
            vec![VariableParam {
                value: 1.0,
                shift: 1,
            }],
            vec![],
            vec![],
        ],
    }
}

fn area_prefactor(params: &GeometryParams) -> f64 {
    let lambda = params.lambda();
    2.0 * params.b.powi(2) * params.c * (lambda * lambda - 1.0).sqrt() * std::f64::consts::PI
        / (lambda * params.a)
}

fn require_region(params: &GeometryParams) -> Result<RegionCheck> {
    let region = area_region_check(params);
    if let Some(failure) = region.first_failure() {
        return Err(Error::OutOfRegion(format!(
            "closed-form series argument outside (-1, 1): {failure}"
        )));
    }
    Ok(region)
}

/// Lateral surface area through the Srivastava–Daoust closed form.
///
/// Errors with [`Error::OutOfRegion`] when any series argument leaves
/// (-1, 1). The simplex summation order converges on a subregion of that
/// box (the m-p shift coupling behaves like C(p,m) x1^m x3^p, so roughly
/// (1+|x1|)|x3| < 1 is also needed); outside it the evaluator detects the
/// growing contributions and errors with [`Error::NoConvergence`]. Callers
/// wanting automatic quadrature fallback in either case use
/// [`surface_area_auto`].
pub fn surface_area_closed(params: &GeometryParams, tol: f64) -> Result<AreaResult> {
    let region = require_region(params)?;
    if params.h == 0.0 {
        return Ok(AreaResult {
            area: 0.0,
            method: AreaMethod::ClosedForm,
            region_ok: true,
            series: None,
        });
    }
    let series = sd_eval(&area_sd_spec(), &region.x, tol, 1_200)?;
    Ok(AreaResult {
        area: area_prefactor(params) * series.value.re,
        method: AreaMethod::ClosedForm,
        region_ok: true,
        series: Some(series),
    })
}

/// Lateral surface area from the raw triple sum
///
/// ```text
/// S = pref * sum_{m,n,p} (1/2)_{n+p} (1/2)_m (2)_n (-1/2)_p^2
///            / [ (-1/2)_{-m+p} (3/2)_{n+p} (1)_m m! n! p! ]
///            * x1^m x2^n x3^p
/// ```
///
/// coded independently of the tableau evaluator: bounded factor ratios are
/// tracked by direct recurrences (no log-Gamma anywhere), so agreement with
/// [`surface_area_closed`] cross-checks two genuinely different paths.
///
/// The plain-f64 coefficient tables cap the reachable simplex order at 300
/// (beyond that the m-p coupling factors leave the f64 range); extremely
/// tall caps needing more terms get an honest range error — the tableau
/// path, which works in log magnitude, covers them.
pub fn surface_area_triple_sum(params: &GeometryParams, tol: f64) -> Result<AreaResult> {
    let region = require_region(params)?;
    if params.h == 0.0 {
        return Ok(AreaResult {
            area: 0.0,
            method: AreaMethod::TripleSum,
            region_ok: true,
            series: None,
        });
    }
    let [x1, x2, x3] = region.x;
    let max_order = 300usize;

    // c_m = (1/2)_m / ((1)_m m!) decays; g[m][p] = (-1/2)_p^2 / (p! (-1/2)_{p-m})
    // stays in f64 range for every order the stopping rule can reach.
    let mut c_m: Vec<f64> = vec![1.0];
    let mut g: Vec<Vec<f64>> = vec![vec![1.0]];
    let mut x1_pow: Vec<f64> = vec![1.0];
    let mut x2_pow: Vec<f64> = vec![1.0];
    let mut x3_pow: Vec<f64> = vec![1.0];

    let mut total = 0.0f64;
    let mut terms_used = 0usize;
    let mut consecutive_small = 0usize;
    let mut consecutive_growth = 0usize;
    let mut last_simplex = 0.0f64;
    let mut min_simplex = f64::INFINITY;

    for order in 0..=max_order {
        // extend the one-dimensional tables to this simplex order:
        // c_{m+1} = c_m (m + 1/2) / (m+1)^2
        {
            let m = c_m.len();
            c_m.push(c_m[m - 1] * (m as f64 - 0.5) / (m as f64 * m as f64));
        }
        x1_pow.push(x1_pow[x1_pow.len() - 1] * x1);
        x2_pow.push(x2_pow[x2_pow.len() - 1] * x2);
        x3_pow.push(x3_pow[x3_pow.len() - 1] * x3);
        // g rows: g[m][p], new row m = order, new column p = order
        // g[0][p] = (-1/2)_p / p!; g[m][p] = g[m-1][p] * (p - m - 1/2)
        {
            let p_new = g[0].len();
            let prev = g[0][p_new - 1];
            g[0].push(prev * (p_new as f64 - 1.5) / p_new as f64);
            for m in 1..g.len() {
                let from_above = g[m - 1][p_new];
                g[m].push(from_above * (p_new as f64 - m as f64 - 0.5));
            }
            let m_new = g.len();
            let mut row = Vec::with_capacity(p_new + 1);
            for p in 0..=p_new {
                row.push(g[m_new - 1][p] * (p as f64 - m_new as f64 - 0.5));
            }
            g.push(row);
        }

        let mut simplex_sum = 0.0f64;
        for m in 0..=order {
            for n in 0..=(order - m) {
                let p = order - m - n;
                terms_used += 1;
                // a_{n+p} = (1/2)_{n+p} / (3/2)_{n+p} = 1 / (1 + 2(n+p));
                // b_n = (2)_n / n! = n + 1
                let a_np = 1.0 / (1.0 + 2.0 * (n + p) as f64);
                let term =
                    a_np * (n as f64 + 1.0) * c_m[m] * g[m][p] * x1_pow[m] * x2_pow[n] * x3_pow[p];
                simplex_sum += term;
            }
        }

        total += simplex_sum;
        if !total.is_finite() {
            return Err(Error::NoConvergence(format!(
                "triple sum left the f64 range at simplex order {order} before settling; \
                 the tableau path or the quadrature oracle covers this regime"
            )));
        }
        // same divergence detector as the tableau evaluator: sustained
        // growth plus a large rebound over the running minimum
        let magnitude = simplex_sum.abs();
        if magnitude > 0.0 {
            min_simplex = min_simplex.min(magnitude);
        }
        if order > 0 && magnitude > last_simplex && magnitude > tol * total.abs() {
            consecutive_growth += 1;
            if consecutive_growth >= 30 && magnitude > 1e6 * min_simplex {
                return Err(Error::NoConvergence(format!(
                    "triple-sum simplex contributions grew for {consecutive_growth} \
                     consecutive orders; the simplex summation order diverges here"
                )));
            }
        } else {
            consecutive_growth = 0;
        }
        last_simplex = magnitude;
        if magnitude <= tol * total.abs() {
            consecutive_small += 1;
            if consecutive_small >= 2 {
                return Ok(AreaResult {
                    area: area_prefactor(params) * total,
                    method: AreaMethod::TripleSum,
                    region_ok: true,
                    series: Some(SeriesValue {
                        value: Complex64::new(total, 0.0),
                        terms_used,
                        est_error: magnitude,
                        converged: true,
                    }),
                });
            }
        } else {
            consecutive_small = 0;
        }
    }

    Err(Error::NoConvergence(format!(
        "triple sum did not settle within simplex order {max_order} \
         (last simplex contribution {last_simplex:.3e})"
    )))
}

/// Closed form where the series applies, 2D quadrature oracle otherwise
/// (out-of-region arguments or a diverging summation order);
/// `method = Oracle` marks the fallback and `region_ok` records the
/// |x_i| < 1 test.
pub fn surface_area_auto(params: &GeometryParams, tol: f64) -> Result<AreaResult> {
    match surface_area_closed(params, tol) {
        Ok(r) => Ok(r),
        Err(Error::OutOfRegion(_)) | Err(Error::NoConvergence(_)) => {
            let q = quadrature::surface_integral_oracle(params, tol)?;
            Ok(AreaResult {
                area: q.value,
                method: AreaMethod::Oracle,
                region_ok: area_region_check(params).all_inside(),
                series: None,
            })
        }
        Err(e) => Err(e),
    }
}

/// Volume of the cap: V = pi a b H (1 + H^2 / (3 c^2)).
///
/// ```
/// use hypersf::geometry::{volume, GeometryParams};
///
/// let p = GeometryParams::with_circular(1.0, 1.0, 1.0, 1.0).unwrap();
/// assert!((volume(&p) - 4.0 * std::f64::consts::PI / 3.0).abs() < 1e-14);
/// ```
pub fn volume(params: &GeometryParams) -> f64 {
    std::f64::consts::PI
        * params.a
        * params.b
        * params.h
        * (1.0 + params.h.powi(2) / (3.0 * params.c.powi(2)))
}

/// The cylinder-minus-shell decomposition of the volume.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct VolumeDecomposition {
    /// V_c = pi a b lambda^2 H: right elliptic cylinder over the top ellipse.
    pub cylinder: f64,
    /// V_b = 2 pi a b c (lambda^2 - 1)^{3/2} / 3: region between the
    /// hyperboloid and the cylinder wall.
    pub shell: f64,
    /// V = V_c - V_b; identical to [`volume`] by the algebra of lambda.
    pub total: f64,
}

/// V_c, V_b and their difference.
pub fn volume_decomposition(params: &GeometryParams) -> VolumeDecomposition {
    let lambda2 = 1.0 + (params.h / params.c).powi(2);
    let pi_ab = std::f64::consts::PI * params.a * params.b;
    let cylinder = pi_ab * lambda2 * params.h;
    let shell = 2.0 * pi_ab * params.c * (lambda2 - 1.0).powf(1.5) / 3.0;
    VolumeDecomposition {
        cylinder,
        shell,
        total: cylinder - shell,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadrature::{revolve_oracle, surface_integral_oracle, volume_slice_oracle};
    use proptest::prelude::*;

    #[test]
    fn lambda_values() {
        let p = GeometryParams::new(2.0, 1.0, 1.0, 0.0).unwrap();
        assert_eq!(lambda_of(&p), 1.0);
        let p = GeometryParams::new(2.0, 1.0, 1.0, 3f64.sqrt()).unwrap();
        assert!((lambda_of(&p) - 2.0).abs() < 1e-15);
        let p = GeometryParams::new(2.0, 1.0, 2.0, 1.0).unwrap();
        assert!((lambda_of(&p) - 1.25f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn region_check_examples() {
        let p = GeometryParams::new(1.2, 1.0, 2.0, 1.0).unwrap();
        let r = area_region_check(&p);
        assert!((r.x[0] + 0.3055555555555556).abs() < 1e-12);
        assert!((r.x[1] - 0.2).abs() < 1e-12);
        assert!((r.x[2] + 0.072).abs() < 1e-12);
        assert!(r.all_inside());

        let p = GeometryParams::new(10.0, 1.0, 1.0, 1.0).unwrap();
        let r = area_region_check(&p);
        assert!((r.x[2] + 50.0).abs() < 1e-9);
        assert!(!r.inside[2] && r.inside[0] && r.inside[1]);
        assert!(r.first_failure().unwrap().contains("x3"));

        let p = GeometryParams::with_circular(1.0, 1.0, 2.0, 1.0).unwrap();
        assert_eq!(area_region_check(&p).x[0], 0.0);
    }

    #[test]
    fn closed_form_matches_quadrature_reference() {
        // frozen reference: 2D oracle at tol 1e-10, cross-certified by the
        // t^2 = r^2-1 and u = r^2 substitutions (see tests/acceptance.rs)
        let p = GeometryParams::new(1.2, 1.0, 2.0, 1.0).unwrap();
        let want = 7.283822125618708;
        let closed = surface_area_closed(&p, 1e-12).unwrap();
        assert!((closed.area - want).abs() <= 1e-6 * want, "{}", closed.area);
        assert_eq!(closed.method, AreaMethod::ClosedForm);
        assert!(closed.region_ok);

        let p = GeometryParams::new(1.01, 1.0, 1.5, 0.5).unwrap();
        let want = 3.2400979292403315;
        let closed = surface_area_closed(&p, 1e-12).unwrap();
        assert!((closed.area - want).abs() <= 1e-6 * want, "{}", closed.area);
    }

    #[test]
    fn triple_sum_equals_closed_form() {
        let p = GeometryParams::new(1.2, 1.0, 2.0, 1.0).unwrap();
        let closed = surface_area_closed(&p, 1e-13).unwrap().area;
        let triple = surface_area_triple_sum(&p, 1e-13).unwrap().area;
        assert!(
            (closed - triple).abs() <= 1e-10 * closed,
            "{closed} vs {triple}"
        );
    }

    #[test]
    fn circular_case_collapses_m_sum() {
        // a = b forces x1 = 0, so only m = 0 terms contribute; the area must
        // match the surface-of-revolution oracle.
        let p = GeometryParams::with_circular(1.0, 1.0, 2.0, 1.0).unwrap();
        let triple = surface_area_triple_sum(&p, 1e-12).unwrap().area;
        let rev = revolve_oracle(&p, 1e-11).unwrap().value;
        assert!((triple - rev).abs() <= 1e-6 * rev, "{triple} vs {rev}");
    }

    #[test]
    fn degenerate_cap_has_zero_area() {
        let p = GeometryParams::new(1.2, 1.0, 2.0, 0.0).unwrap();
        assert_eq!(surface_area_closed(&p, 1e-10).unwrap().area, 0.0);
        assert_eq!(surface_area_triple_sum(&p, 1e-10).unwrap().area, 0.0);
        assert_eq!(volume(&p), 0.0);
        let d = volume_decomposition(&p);
        assert_eq!(d.cylinder, 0.0);
        assert_eq!(d.shell, 0.0);
    }

    #[test]
    fn out_of_region_error_and_fallback() {
        let p = GeometryParams::new(10.0, 1.0, 1.0, 1.0).unwrap();
        assert!(matches!(
            surface_area_closed(&p, 1e-10),
            Err(Error::OutOfRegion(_))
        ));
        let auto = surface_area_auto(&p, 1e-9).unwrap();
        assert_eq!(auto.method, AreaMethod::Oracle);
        assert!(!auto.region_ok);
        let direct = surface_integral_oracle(&p, 1e-9).unwrap().value;
        assert_eq!(auto.area, direct);
    }

    #[test]
    fn diverging_summation_order_detected_and_fallback() {
        // all |x_i| < 1 here, but (1 + |x1|) |x3| > 1: the simplex order
        // diverges, which both series paths must detect quickly; the auto
        // wrapper then answers through quadrature
        let p = GeometryParams::new(1.4, 1.0, 1.02, 1.02).unwrap();
        assert!(area_region_check(&p).all_inside());
        assert!(matches!(
            surface_area_closed(&p, 1e-10),
            Err(Error::NoConvergence(_))
        ));
        assert!(matches!(
            surface_area_triple_sum(&p, 1e-10),
            Err(Error::NoConvergence(_))
        ));
        let auto = surface_area_auto(&p, 1e-8).unwrap();
        assert_eq!(auto.method, AreaMethod::Oracle);
        assert!(auto.region_ok);
        let direct = surface_integral_oracle(&p, 1e-8).unwrap().value;
        assert_eq!(auto.area, direct);
    }

    #[test]
    fn volume_closed_forms() {
        let p = GeometryParams::with_circular(1.0, 1.0, 1.0, 1.0).unwrap();
        let want = 4.0 * std::f64::consts::PI / 3.0;
        assert!((volume(&p) - want).abs() < 1e-14);
        let q = volume_slice_oracle(&p, 1e-13).unwrap();
        assert!((volume(&p) - q.value).abs() <= 1e-12 * want);

        let p = GeometryParams::new(2.0, 1.0, 1.0, 1.0).unwrap();
        assert!((volume(&p) - 8.0 * std::f64::consts::PI / 3.0).abs() < 1e-13);
    }

    #[test]
    fn volume_decomposition_identity() {
        // V_c - V_b = pi a b H (1 + H^2/(3c^2)) exactly
        let p = GeometryParams::with_circular(1.0, 1.0, 1.0, 1.0).unwrap();
        let d = volume_decomposition(&p);
        assert!((d.shell - 2.0 * std::f64::consts::PI / 3.0).abs() < 1e-13);
        assert!((d.cylinder - 2.0 * std::f64::consts::PI).abs() < 1e-13);
        assert!((d.total - 4.0 * std::f64::consts::PI / 3.0).abs() < 1e-13);

        let p = GeometryParams::new(2.0, 1.0, 2.0, 1.0).unwrap();
        let d = volume_decomposition(&p);
        assert!((d.total - volume(&p)).abs() <= 1e-13 * volume(&p));
    }

    #[test]
    fn base_measurement_route() {
        assert_eq!(lambda_from_bases(2.0, 1.0).unwrap(), 2.0);
        let lam = 1.7;
        assert!((lambda_from_bases(2.0 * lam, 2.0).unwrap() - lam).abs() < 1e-15);
        // equal bases: lambda = 1, axial scale undefined
        assert_eq!(lambda_from_bases(1.0, 1.0).unwrap(), 1.0);
        assert!(axial_scale_from_lambda(1.0, 1.0).is_err());
        assert!(lambda_from_bases(0.9, 1.0).is_err());
        // consistency: c recovered from lambda(H) is c
        let p = GeometryParams::new(1.2, 1.0, 2.0, 1.0).unwrap();
        let c = axial_scale_from_lambda(p.lambda(), p.h).unwrap();
        assert!((c - p.c).abs() < 1e-12);
    }

    proptest! {
        #[test]
        fn scaling_law(k in 0.4f64..3.0, h in 0.1f64..2.0) {
            let p = GeometryParams::new(1.3, 1.0, 2.0, h).unwrap();
            let q = p.scaled(k).unwrap();
            let a1 = surface_area_closed(&p, 1e-12).unwrap().area;
            let a2 = surface_area_closed(&q, 1e-12).unwrap().area;
            prop_assert!((a2 - k * k * a1).abs() <= 1e-10 * a2.abs());
            let v1 = volume(&p);
            let v2 = volume(&q);
            prop_assert!((v2 - k.powi(3) * v1).abs() <= 1e-10 * v2.abs());
        }

        #[test]
        fn volume_identity_random(a in 1.0f64..3.0, r in 0.2f64..1.0, c in 0.5f64..3.0, h in 0.0f64..2.0) {
            let p = GeometryParams::with_circular(a, a * r, c, h).unwrap();
            let d = volume_decomposition(&p);
            prop_assert!((d.total - volume(&p)).abs() <= 1e-13 * volume(&p).abs().max(1e-300));
        }
    }

    #[test]
    fn tall_cap_closed_form() {
        // H/c = 4 pushes x2 to 0.94: a long (benign) growth phase in the
        // n-direction that the divergence detector must not mistake for
        // blowup, and several hundred simplex orders to settle
        let p = GeometryParams::new(1.0, 0.9, 1.2, 4.8).unwrap();
        assert!(area_region_check(&p).all_inside());
        let closed = surface_area_closed(&p, 1e-8).unwrap();
        let oracle = surface_integral_oracle(&p, 1e-9).unwrap().value;
        assert!(
            (closed.area - oracle).abs() <= 1e-6 * oracle,
            "{} vs {oracle}",
            closed.area
        );
    }

    #[test]
    fn monotone_in_height() {
        for (a, b, c) in [(1.2, 1.0, 2.0), (1.4, 1.0, 3.0), (1.01, 1.0, 1.5)] {
            let mut prev_area = 0.0;
            let mut prev_vol = 0.0;
            for i in 1..=4 {
                let h = 0.25 * i as f64;
                let p = GeometryParams::new(a, b, c, h).unwrap();
                let area = surface_area_closed(&p, 1e-11).unwrap().area;
                let vol = volume(&p);
                assert!(area > prev_area && vol > prev_vol, "a={a} c={c} h={h}");
                prev_area = area;
                prev_vol = vol;
            }
        }
    }
}
