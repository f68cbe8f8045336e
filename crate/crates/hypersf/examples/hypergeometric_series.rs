//! The pFq power series, Gauss summation at unit argument, and the 2F1
//! analytic continuation past the unit disk.
//!
//! Run with: cargo run --example hypergeometric_series

use num_complex::Complex64;

use hypersf::hypergeometric::{
    continued_2f1, gauss_sum_at_unity, hyp2f1_real, pfq_series, PFQParams,
};

fn c(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

fn main() {
    // 2F1(1,1;2;z) = -ln(1-z)/z
    let sv = pfq_series(&PFQParams::real(&[1.0, 1.0], &[2.0], 0.5), 1e-15, 10_000).unwrap();
    println!(
        "2F1(1,1;2;1/2)        = {:.15}  ({} terms, tail {:.1e})",
        sv.value.re, sv.terms_used, sv.est_error
    );
    println!(
        "2 ln 2                = {:.15}",
        2.0 * std::f64::consts::LN_2
    );

    // a truncating upper parameter makes the series a polynomial
    let sv = pfq_series(&PFQParams::real(&[-2.0], &[], 5.0), 1e-15, 100).unwrap();
    println!(
        "\n1F0(-2;;5)            = {}  (polynomial, {} terms)",
        sv.value.re, sv.terms_used
    );

    // Gauss summation: 2F1(a,b;c;1) as a pole-cancelling Gamma quotient
    let g = gauss_sum_at_unity(c(0.5), c(0.5), c(2.0)).unwrap();
    println!("\n2F1(1/2,1/2;2;1)      = {:.15}", g.re);
    println!("4/pi                  = {:.15}", 4.0 / std::f64::consts::PI);

    // analytic continuation: z above the unit interval picks up an
    // imaginary part with the principal branch
    let z = c(4.0 / 3.0);
    let cont = continued_2f1(c(0.5), c(1.0), c(2.0), z).unwrap();
    let elementary = 2.0 * (1.0 - (1.0 - z).sqrt()) / z;
    println!(
        "\n2F1(1/2,1;2;4/3)      = {:.12} + {:.12} i",
        cont.re, cont.im
    );
    println!(
        "2(1-sqrt(1-z))/z      = {:.12} + {:.12} i",
        elementary.re, elementary.im
    );

    // overlap of the direct series and the continuation
    let series = hyp2f1_real(0.5, 1.0 / 3.0, 1.5, 0.8).unwrap();
    let cont = continued_2f1(c(0.5), c(1.0 / 3.0), c(1.5), c(0.8)).unwrap();
    println!(
        "\noverlap at z = 0.8: series {series:.15}, continuation {:.15}",
        cont.re
    );
}
