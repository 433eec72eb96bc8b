//! Estimation of time-varying, lagged amplitude coupling between two
//! high-dimensional multivariate time series.
//!
//! The model ties each region's observations to a scalar latent factor per
//! time point; the latent bivariate series carries a sparse banded precision
//! matrix whose cross block localizes lead-lag coupling epochs. The crate
//! provides the banded graphical-LASSO fitter, permutation-bootstrap
//! inference with FDR control and cluster excursion tests, local Granger
//! summaries, and the simulation generators used for validation.

pub mod config;
pub mod error;
pub mod fit;
pub mod glasso;
pub mod granger;
pub mod inference;
pub mod rng;
pub mod signal;
pub mod simulate;
pub mod tensor;

pub use error::{Error, Result};
