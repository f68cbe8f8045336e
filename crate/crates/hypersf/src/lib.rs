//! Special-function machinery and exact closed forms for the lateral
//! surface area and volume of a hyperboloid-of-one-sheet cap.
//!
//! The crate is organised bottom-up:
//!
//! * [`gamma`] — complex log-Gamma, Pochhammer symbols with negative shifts,
//!   pole-cancelling Gamma quotients, the Wallis integral;
//! * [`hypergeometric`] — direct pFq power series, Gauss summation at unit
//!   argument, the 2F1 analytic-continuation formula;
//! * [`quadrature`] — deterministic adaptive Gauss–Kronrod engines used as
//!   independent oracles throughout;
//! * [`mellin`] — Mellin–Barnes contour evaluation of 1F0, pFq and Meijer G
//!   on a vertical line, with pole-separation bookkeeping;
//! * [`meijer`] — closed-form Meijer-G pathways: the G22/22 conversion to
//!   2F1, the decomposition into hypergeometric series, and the specific
//!   G22/33 kernel behind the surface-area formula;
//! * [`srivastava_daoust`] — the n-variable Srivastava–Daoust series with
//!   the convergence classification (cases I/II/III);
//! * [`theorems`] — closed forms of the two trigonometric integrals and the
//!   radial integral the surface-area derivation rests on;
//! * [`geometry`] — the headline results: surface area via the
//!   Srivastava–Daoust closed form and via the raw triple sum, plus volume;
//! * [`cli`] — the `hypersf` command-line interface.
//!
//! Run `cargo run --example surface_area` (and friends) for guided tours of
//! each capability.

pub mod cli;
pub mod error;
pub mod gamma;
pub mod geometry;
pub mod hypergeometric;
pub mod meijer;
pub mod mellin;
pub mod quadrature;
pub mod srivastava_daoust;
pub mod theorems;

pub use error::{Error, Result};
