//! Rayleigh channel and receiver-noise synthesis.
//!
//! The RIS-to-receiver link is an `Nr x N` matrix of i.i.d. unit-variance
//! circularly-symmetric complex Gaussian gains; receiver noise is complex
//! Gaussian with total variance `N0`. There is no path-loss scalar: the SNR
//! knob is `Es/N0` alone.

use crate::error::Error;
use crate::rng::RngStream;
use crate::{Complex, Result};
use rand::Rng;
use rand_distr::StandardNormal;

const INV_SQRT2: f64 = std::f64::consts::FRAC_1_SQRT_2;

/// Complex receiver-noise sample; real and imaginary parts are independent,
/// each zero-mean with variance `N0/2`.
pub type NoiseSample = Complex;

/// Channel matrix of the RIS-to-receiver link, row `l` holding the gains
/// from every RIS element to receive antenna `l`.
#[derive(Debug, Clone, PartialEq)]
pub struct ChannelMatrix {
    entries: Vec<Complex>,
    n_rx: usize,
    n_ris: usize,
}

impl ChannelMatrix {
    /// Number of receive antennas (rows).
    pub fn n_rx(&self) -> usize {
        self.n_rx
    }

    /// Number of RIS elements (columns).
    pub fn n_ris(&self) -> usize {
        self.n_ris
    }

    /// Row `l`: the length-`N` channel vector seen by receive antenna `l`.
    pub fn row(&self, l: usize) -> &[Complex] {
        &self.entries[l * self.n_ris..(l + 1) * self.n_ris]
    }

    /// All entries in row-major order.
    pub fn entries(&self) -> &[Complex] {
        &self.entries
    }
}

/// Draw an `n_rx x n_ris` channel matrix with CN(0,1) entries.
///
/// `n_rx` must be a power of two (at least 2) so that antenna indices map to
/// whole bits; `n_ris` must be at least 1. Deterministic given `rng`.
pub fn generate_channel(
    n_rx: usize,
    n_ris: usize,
    rng: &mut RngStream,
) -> Result<ChannelMatrix> {
    if n_rx < 2 || !n_rx.is_power_of_two() {
        return Err(Error::config(
            "n_rx",
            format!("{n_rx} is not a power of two >= 2"),
        ));
    }
    if n_ris == 0 {
        return Err(Error::config("n_ris", "must be at least 1"));
    }
    let entries = (0..n_rx * n_ris)
        .map(|_| {
            let re: f64 = rng.sample(StandardNormal);
            let im: f64 = rng.sample(StandardNormal);
            Complex::new(re * INV_SQRT2, im * INV_SQRT2)
        })
        .collect();
    Ok(ChannelMatrix {
        entries,
        n_rx,
        n_ris,
    })
}

/// Draw one complex noise sample with total variance `n0`.
pub fn draw_noise(n0: f64, rng: &mut RngStream) -> Result<NoiseSample> {
    if !(n0 > 0.0) {
        return Err(Error::config("n0", format!("{n0} is not positive")));
    }
    Ok(draw_noise_unchecked(n0, rng))
}

/// As [`draw_noise`] but without the positivity check; `n0 = 0` yields an
/// exact zero, which the simulator uses for noiseless runs.
pub(crate) fn draw_noise_unchecked(n0: f64, rng: &mut RngStream) -> NoiseSample {
    if n0 == 0.0 {
        return Complex::new(0.0, 0.0);
    }
    let s = (n0 / 2.0).sqrt();
    let re: f64 = rng.sample(StandardNormal);
    let im: f64 = rng.sample(StandardNormal);
    Complex::new(re * s, im * s)
}
