//! Lateral surface area of a hyperboloid cap, three ways: the closed-form
//! series, the raw triple sum, and 2D adaptive quadrature of the defining
//! integral.
//!
//! Run with: cargo run --example surface_area

use hypersf::geometry::{
    area_region_check, surface_area_auto, surface_area_closed, surface_area_triple_sum,
    GeometryParams,
};
use hypersf::quadrature::surface_integral_oracle;

fn main() {
    // x^2/a^2 + y^2/b^2 - z^2/c^2 = 1, cap between z = 0 and z = H
    let p = GeometryParams::new(1.2, 1.0, 2.0, 1.0).unwrap();
    println!("cap: a = {}, b = {}, c = {}, H = {}", p.a, p.b, p.c, p.h);
    println!("lambda = sqrt(1 + H^2/c^2) = {:.12}", p.lambda());

    let region = area_region_check(&p);
    println!("\nseries arguments (all must lie in (-1, 1)):");
    for (i, (x, ok)) in region.x.iter().zip(region.inside.iter()).enumerate() {
        println!("  x{} = {:+.12}   inside: {}", i + 1, x, ok);
    }

    let closed = surface_area_closed(&p, 1e-12).unwrap();
    let triple = surface_area_triple_sum(&p, 1e-12).unwrap();
    let oracle = surface_integral_oracle(&p, 1e-10).unwrap();

    println!("\nclosed form  S = {:.12}", closed.area);
    println!("triple sum   S = {:.12}", triple.area);
    println!(
        "quadrature   S = {:.12}  (est err {:.1e}, {} evals)",
        oracle.value, oracle.est_error, oracle.evaluations
    );
    println!(
        "closed vs triple: {:.2e}   closed vs quadrature: {:.2e}",
        ((closed.area - triple.area) / closed.area).abs(),
        ((closed.area - oracle.value) / oracle.value).abs()
    );
    if let Some(series) = &closed.series {
        println!(
            "series used {} lattice points, tail estimate {:.2e}",
            series.terms_used, series.est_error
        );
    }

    // Out-of-region parameters fall back to quadrature automatically.
    let wide = GeometryParams::new(10.0, 1.0, 1.0, 1.0).unwrap();
    let check = area_region_check(&wide);
    println!(
        "\nwide cap a=10, c=1: x3 = {:.3} leaves the region ({})",
        check.x[2],
        check.first_failure().unwrap()
    );
    let auto = surface_area_auto(&wide, 1e-9).unwrap();
    println!(
        "surface_area_auto -> method {:?}, region_ok {}, S = {:.10}",
        auto.method, auto.region_ok, auto.area
    );
}
