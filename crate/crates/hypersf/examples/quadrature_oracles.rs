//! The adaptive quadrature engine and the three oracles built on it: the 2D
//! surface integral (with its singularity-removing substitution), the
//! surface of revolution, and the volume slice integral.
//!
//! Run with: cargo run --example quadrature_oracles

use hypersf::geometry::GeometryParams;
use hypersf::quadrature::{
    integrate_1d, revolve_oracle, surface_integral_oracle, volume_slice_oracle,
};

fn main() {
    // plain 1D: int_0^{pi/2} sin^2 = pi/4
    let r = integrate_1d(|x| x.sin().powi(2), 0.0, std::f64::consts::FRAC_PI_2, 1e-12).unwrap();
    println!(
        "int sin^2 over a quarter period = {:.15}  (pi/4 = {:.15}, {} evals)",
        r.value,
        std::f64::consts::FRAC_PI_4,
        r.evaluations
    );

    // an endpoint singularity: int_0^1 x^(-1/2) dx = 2
    let r = integrate_1d(|x| x.sqrt().recip(), 0.0, 1.0, 1e-10).unwrap();
    println!(
        "int x^(-1/2) on (0,1]           = {:.12}  (exact 2, est err {:.1e})",
        r.value, r.est_error
    );

    // the 2D surface oracle vs the revolution oracle on a circular cap
    let p = GeometryParams::with_circular(1.0, 1.0, 2.0, 1.0).unwrap();
    let s2d = surface_integral_oracle(&p, 1e-10).unwrap();
    let rev = revolve_oracle(&p, 1e-10).unwrap();
    println!("\ncircular cap a = b = 1, c = 2, H = 1:");
    println!(
        "  2D polar oracle    = {:.12}  ({} evals)",
        s2d.value, s2d.evaluations
    );
    println!(
        "  revolution oracle  = {:.12}  ({} evals)",
        rev.value, rev.evaluations
    );
    println!(
        "  rel difference     = {:.2e}",
        ((s2d.value - rev.value) / rev.value).abs()
    );

    // volume slice oracle vs the closed form
    let p = GeometryParams::new(2.0, 1.0, 1.0, 1.0).unwrap();
    let v = volume_slice_oracle(&p, 1e-12).unwrap();
    println!("\nvolume slice oracle (2,1,1,1) = {:.12}", v.value);
    println!(
        "pi a b H (1 + H^2/(3 c^2))    = {:.12}",
        hypersf::geometry::volume(&p)
    );
}
