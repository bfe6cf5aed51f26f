//! Selection of the number of latent factors in approximate factor models.
//!
//! The centerpiece is a double cross-validation (DCV) estimator: rows are
//! held out K-fold to estimate factor loadings, and within each held-out row
//! every variable is predicted from the remaining ones through a closed-form
//! leave-one-variable-out shortcut. The factor count minimizing the resulting
//! prediction error is selected. A panel information criterion (IC1) over
//! the same estimation pipeline serves as the baseline, and the crate ships
//! the simulation generators, a seeded Monte-Carlo harness, and a returns
//! CSV ingestion path used to exercise both selectors.

pub mod criteria;
pub mod dcv;
pub mod error;
pub mod factors;
pub mod harness;
pub mod ingest;
pub mod panel;
pub mod simgen;
pub mod spectra;

pub use error::{DcvError, Result};
pub use panel::PanelMatrix;
