//! Closed forms for the building-block integrals of the surface-area
//! derivation: the elliptic trigonometric integral (two parameter orders)
//! and the radial integral with its complex branch.
//!
//! Run with: cargo run --example trig_radial_integrals

use hypersf::quadrature::integrate_1d;
use hypersf::theorems::{theorem1_closed, theorem2_closed, theorem3_closed};

fn main() {
    // int_{-pi}^{pi} (cos^2/sigma^2 + sin^2/lambda^2)^s dtheta
    let (sigma, lambda, s) = (2.0, 1.0, 1.0);
    let closed = theorem1_closed(sigma, lambda, s).unwrap();
    let quad = integrate_1d(
        |t| ((t.cos() / sigma).powi(2) + (t.sin() / lambda).powi(2)).powf(s),
        -std::f64::consts::PI,
        std::f64::consts::PI,
        1e-12,
    )
    .unwrap();
    println!("trig integral, sigma={sigma} lambda={lambda} s={s}:");
    println!("  closed form = {closed:.15}");
    println!("  quadrature  = {:.15}", quad.value);
    println!("  5 pi / 4    = {:.15}", 5.0 * std::f64::consts::FRAC_PI_4);

    // swapping the axes swaps the roles of sigma and lambda
    let swapped = theorem2_closed(lambda, sigma, s).unwrap();
    println!("  swapped     = {swapped:.15}");

    // radial integral int_1^lambda r^{2s+1} (1-r^2)^{-s} dr
    println!("\nradial integral:");
    for (lam, s) in [(2.0, 0.0), (2f64.sqrt(), -1.0), (5.0, -2.0)] {
        let v = theorem3_closed(lam, s).unwrap();
        println!("  lambda = {lam:.4}, s = {s:+}: {:+.15}", v.re);
    }

    // non-integer s: the principal branch of (1-r^2)^{-s} for r > 1 makes
    // the value complex (here purely imaginary)
    let v = theorem3_closed(2f64.sqrt(), 0.5).unwrap();
    println!("  lambda = sqrt2, s = +0.5: {:.3e} + {:.15} i", v.re, v.im);
}
