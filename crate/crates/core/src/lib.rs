//! RIS-assisted receive quadrature space-shift keying (RIS-RQSSK) toolkit.
//!
//! An RIS-RQSSK transmitter steers a reconfigurable intelligent surface so
//! that the real part of the received signal peaks at one antenna and the
//! imaginary part at another; the antenna indices (plus two polarity bits)
//! carry the data. This crate implements the full transmission chain and its
//! performance analysis:
//!
//! * [`channel`] — reproducible Rayleigh channel and noise synthesis,
//! * [`optimizer`] — max-min RIS phase design via a single-variable dual
//!   root-find,
//! * [`modem`] — bit mapping, received-signal synthesis and the CSI-free
//!   greedy detector,
//! * [`montecarlo`] — deterministic parallel BER measurement, including the
//!   RQRM and SSK benchmark reconstructions,
//! * [`abep`] — analytic pairwise error probability and average bit error
//!   probability (Gil-Pelaez inversion, Pearson approximation, Chernoff
//!   asymptote, Craig-formula polarity terms),
//! * [`moments`] — the closed-form moment constants behind the analysis and
//!   their brute-force sampling oracles,
//! * [`numerics`] — quadrature and special-function helpers shared by the
//!   analytic modules.

pub mod abep;
pub mod channel;
pub mod error;
pub mod modem;
pub mod moments;
pub mod montecarlo;
pub mod numerics;
pub mod optimizer;
pub mod rng;

pub use error::Error;
pub use rng::RngStream;

/// Convenience alias used throughout the crate.
pub type Complex = num_complex::Complex64;

/// Crate-wide result type.
pub type Result<T> = std::result::Result<T, Error>;
