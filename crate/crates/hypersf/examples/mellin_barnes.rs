//! Mellin–Barnes contour integrals on a vertical line: the binomial 1F0,
//! a 2F1, and the exponential as the Meijer function G^{1,0}_{0,1}.
//!
//! Run with: cargo run --example mellin_barnes

use num_complex::Complex64;

use hypersf::hypergeometric::PFQParams;
use hypersf::mellin::{check_g_convergence, choose_contour, mb_1f0, mb_meijer_g, mb_pfq};

fn c(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

fn main() {
    // (1 - z)^{-a} as (1/2 pi i Gamma(a)) int Gamma(a+s) Gamma(-s) (-z)^s ds;
    // the line must separate the pole families { -a - k } and { k }
    let a = 0.5;
    let ct = choose_contour(&[c(-a)], &[c(0.0)]).unwrap();
    println!(
        "contour for 1F0(1/2; z): Re(s) = {}, |Im s| <= {}, {} nodes",
        ct.abscissa, ct.half_height, ct.nodes
    );
    let v = mb_1f0(c(a), c(-3.0), &ct).unwrap();
    println!(
        "1F0(1/2; -3) via line  = {:.12}  (direct 4^(-1/2) = 0.5)",
        v.re
    );

    // 2F1(1/2,1;2;-1) = 2(sqrt 2 - 1)
    let params = PFQParams::real(&[0.5, 1.0], &[2.0], -1.0);
    let ct = choose_contour(&[c(-0.5), c(-1.0)], &[c(0.0)]).unwrap();
    let sv = mb_pfq(&params, &ct, 1e-12).unwrap();
    println!(
        "\n2F1(1/2,1;2;-1) via line = {:.12}  ({} nodes, est err {:.1e})",
        sv.value.re, sv.terms_used, sv.est_error
    );
    println!(
        "2(sqrt2 - 1)             = {:.12}",
        2.0 * (2f64.sqrt() - 1.0)
    );

    // G^{1,0}_{0,1}(z | -; 0) = exp(-z)
    let ct = choose_contour(&[], &[c(0.0)]).unwrap();
    for z in [0.5, 1.0, 2.0] {
        let report = check_g_convergence(&[], &[c(0.0)], 1, 0, c(z)).unwrap();
        let g = mb_meijer_g(&[], &[c(0.0)], 1, 0, c(z), &ct, 1e-12).unwrap();
        println!(
            "\nG^(1,0)_(0,1)({z}) = {:.12}   exp(-{z}) = {:.12}   (Lambda = {}, condition (i): {})",
            g.value.re,
            (-z).exp(),
            report.capital_lambda,
            report.holds[0]
        );
    }
}
