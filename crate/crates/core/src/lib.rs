//! Eigenvalue counting statistics for random matrix ensembles at desk scale.
//!
//! The crate is organised around the counting function `N_I(W)` — the number of
//! eigenvalues of a normalised random matrix falling in an interval `I` — and
//! the machinery needed to study its fluctuations:
//!
//! * [`laws`] — semicircle and Marchenko–Pastur densities, CDFs, quantiles and
//!   classical eigenvalue locations.
//! * [`ensembles`] — samplers for GUE/GOE/GSE, general Wigner matrices with
//!   pluggable entry atoms (including four-moment-matched three-point atoms),
//!   LUE/covariance matrices, and the interlacing constructions that express
//!   one ensemble through another.
//! * [`spectral`] — dense Hermitian eigensolving, spectra, intervals, the
//!   counting function and the counting/eigenvalue duality.
//! * [`dpp`] — the exact determinantal route for the GUE: oscillator wave
//!   functions, the rank-`n` kernel, its restriction to an interval via a
//!   quadrature Gram matrix, Bernoulli parameters, the exact Poisson-binomial
//!   counting law, and exact cumulant/tail computations.
//! * [`mdpstats`] — standardized counting and bulk-eigenvalue statistics,
//!   rate curves against the Gaussian target `ξ²/2`, variance scans and
//!   moment-matching reports.
//! * [`stats`] — small statistical validation utilities (Kolmogorov–Smirnov
//!   tests, Wilson intervals, least-squares slopes).
//!
//! Everything is deterministic given a seed: Monte Carlo replicas draw from
//! independent substreams derived from `(seed, replica_index)`, so results do
//! not depend on how work is scheduled across threads.

pub mod dpp;
pub mod ensembles;
pub mod laws;
pub mod mdpstats;
pub mod quad;
pub mod spectral;
pub mod stats;

pub use dpp::{counting_law_gue, restrict_kernel, BinomialProfile, CountingLawExt, KernelRestriction, PoissonBinomial};
pub use ensembles::{make_matched_atom, sample_matrix, AtomDistribution, EnsembleKind, EnsembleSpec};
pub use laws::{classical_location, MarchenkoPasturLaw, SemicircleLaw};
pub use mdpstats::{MdpScaling, RateCurve};
pub use spectral::{counting, eigenvalues, Interval, Scale, Spectrum};
