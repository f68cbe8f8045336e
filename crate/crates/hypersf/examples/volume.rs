//! Volume of the cap: the closed form pi a b H (1 + H^2/(3c^2)), its
//! cylinder-minus-shell decomposition, and the measured-model route that
//! recovers c from the two base ellipses.
//!
//! Run with: cargo run --example volume

use hypersf::geometry::{
    axial_scale_from_lambda, lambda_from_bases, volume, volume_decomposition, GeometryParams,
};
use hypersf::quadrature::volume_slice_oracle;

fn main() {
    let p = GeometryParams::with_circular(1.0, 1.0, 1.0, 1.0).unwrap();
    let v = volume(&p);
    let d = volume_decomposition(&p);
    println!("unit circular cap (a = b = c = H = 1):");
    println!(
        "  V            = {v:.12}   (4 pi / 3 = {:.12})",
        4.0 * std::f64::consts::PI / 3.0
    );
    println!("  V_cylinder   = {:.12}", d.cylinder);
    println!("  V_shell      = {:.12}", d.shell);
    println!("  V_c - V_b    = {:.12}", d.total);

    let slice = volume_slice_oracle(&p, 1e-13).unwrap();
    println!(
        "  slice oracle = {:.12}   (rel err {:.1e})",
        slice.value,
        ((v - slice.value) / v).abs()
    );

    // Field measurement route: the semi-axes of the two base ellipses give
    // lambda, and lambda plus the height gives the axial scale c.
    let p = GeometryParams::new(1.2, 1.0, 2.0, 1.0).unwrap();
    let lambda = p.lambda();
    let top_semi_axis = p.a * lambda;
    println!(
        "\nmeasured model: waist semi-axis {}, top semi-axis {:.6}, height {}",
        p.a, top_semi_axis, p.h
    );
    let measured_lambda = lambda_from_bases(top_semi_axis, p.a).unwrap();
    let measured_c = axial_scale_from_lambda(measured_lambda, p.h).unwrap();
    println!("  recovered lambda = {measured_lambda:.12}");
    println!("  recovered c      = {measured_c:.12}   (true c = {})", p.c);
    println!("  V                = {:.12}", volume(&p));
}
