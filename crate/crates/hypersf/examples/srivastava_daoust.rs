//! The n-variable Srivastava–Daoust series: evaluating the surface-area
//! tableau, classifying its convergence case, and the product reduction
//! that recovers ordinary pFq factors.
//!
//! Run with: cargo run --example srivastava_daoust

use hypersf::geometry::{area_region_check, area_sd_spec, GeometryParams};
use hypersf::hypergeometric::{pfq_series, PFQParams};
use hypersf::srivastava_daoust::{sd_classify, sd_eval, SDSpec, VariableParam};

fn main() {
    // the tableau behind the closed-form surface area
    let spec = area_sd_spec();
    println!("surface-area tableau: {} variables", spec.variables);
    println!("  upper global: {:?}", spec.upper_global);
    println!("  lower global: {:?}", spec.lower_global);

    let p = GeometryParams::new(1.2, 1.0, 2.0, 1.0).unwrap();
    let x = area_region_check(&p).x;
    println!("\narguments for (a,b,c,H) = (1.2, 1, 2, 1): {x:?}");
    let sv = sd_eval(&spec, &x, 1e-13, 500).unwrap();
    println!(
        "series value = {:.14}  ({} lattice points, tail {:.1e})",
        sv.value.re, sv.terms_used, sv.est_error
    );

    let report = sd_classify(&spec, &x);
    println!("\nclassification:");
    println!("  deltas    = {:?}", report.deltas);
    println!("  case      = {:?}", report.case_label);
    println!("  region_ok = {:?}", report.region_ok);
    println!("  {}", report.diagnostics);

    // A = C = 0 reduces to a product of one-variable series
    let product = SDSpec {
        variables: 2,
        upper_global: vec![],
        lower_global: vec![],
        upper_per_variable: vec![
            vec![
                VariableParam {
                    value: 1.0,
                    shift: 1,
                },
                VariableParam {
                    value: 1.0,
                    shift: 1,
                },
            ],
            vec![
                VariableParam {
                    value: 1.0,
                    shift: 1,
                },
                VariableParam {
                    value: 1.0,
                    shift: 1,
                },
            ],
        ],
        lower_per_variable: vec![
            vec![VariableParam {
                value: 2.0,
                shift: 1,
            }],
            vec![VariableParam {
                value: 2.0,
                shift: 1,
            }],
        ],
    };
    let joint = sd_eval(&product, &[0.5, 0.5], 1e-14, 400).unwrap().value.re;
    let single = pfq_series(&PFQParams::real(&[1.0, 1.0], &[2.0], 0.5), 1e-15, 10_000)
        .unwrap()
        .value
        .re;
    println!("\nproduct tableau at (1/2, 1/2) = {joint:.14}");
    println!("(2 ln 2)^2                    = {:.14}", single * single);

    let report = sd_classify(&product, &[0.5, 0.5]);
    println!(
        "product tableau classified {:?} with deltas {:?}",
        report.case_label, report.deltas
    );
}
