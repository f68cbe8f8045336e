//! Meijer-G closed-form pathways: the G^{2,2}_{2,2} conversion to 2F1, the
//! decomposition into hypergeometric terms, and the G^{2,2}_{3,3} kernel
//! that carries the surface-area derivation.
//!
//! Run with: cargo run --example meijer_g

use num_complex::Complex64;

use hypersf::meijer::{g2222_to_2f1, g2233_area_kernel, g_decompose, g_decompose_eval, GSpec};
use hypersf::mellin::{mb_meijer_g, ContourSpec};

fn c(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

fn main() {
    // conversion relation at an s-shifted parameter set
    let s = 0.25;
    let z = 0.64;
    let conv = g2222_to_2f1(c(s + 1.0), c(0.5), c(0.0), c(0.5 + s), c(z)).unwrap();
    println!(
        "G^(2,2)_(2,2)({z} | {}, 0.5; 0, {}) = {:.12}",
        s + 1.0,
        0.5 + s,
        conv.re
    );
    let ct = ContourSpec::new(0.0, 25.0, 512);
    let mb = mb_meijer_g(
        &[c(s + 1.0), c(0.5)],
        &[c(0.0), c(0.5 + s)],
        2,
        2,
        c(z),
        &ct,
        1e-11,
    )
    .unwrap();
    println!("same value by contour integral     = {:.12}", mb.value.re);

    // decomposition: one hypergeometric term per distinguished upper
    // parameter, argument (-1)^(q-m-n)/z
    let spec = GSpec::new(vec![c(1.25), c(0.5)], vec![c(0.0), c(0.75)], 2, 2, c(3.0)).unwrap();
    let terms = g_decompose(&spec).unwrap();
    println!("\ndecomposition of G^(2,2)_(2,2)(3 | 1.25, 0.5; 0, 0.75):");
    for (h, t) in terms.iter().enumerate() {
        println!(
            "  term {}: prefactor {:.10}, series argument {:.6}",
            h + 1,
            t.prefactor.re,
            t.series.argument.re
        );
    }
    let total = g_decompose_eval(&spec, 1e-13).unwrap();
    println!("  sum = {:.12}", total.value.re);

    // the surface-area kernel: its h = 2 term vanishes on a Gamma pole, so
    // a single 3F2 survives
    println!("\nG^(2,2)_(3,3)(z | 3/2, -m; 2+n / 0, 1+n; 0):");
    for (m, n, z) in [(0u32, 0u32, 4.0), (1, 0, 4.0), (0, 2, 10.0)] {
        let kernel = g2233_area_kernel(m, n, z).unwrap();
        let mb = mb_meijer_g(
            &[c(1.5), c(-(m as f64)), c(2.0 + n as f64)],
            &[c(0.0), c(1.0 + n as f64), c(0.0)],
            2,
            2,
            c(z),
            &ContourSpec::new(0.75, 22.0, 512),
            1e-9,
        )
        .unwrap();
        println!(
            "  m={m} n={n} z={z:>4}: decomposition {kernel:.10}, contour {:.10}",
            mb.value.re
        );
    }
}
