//! Numerical library converting between the average bit-error rate of binary
//! modulation schemes and the ergodic capacity of a fading channel, in both
//! directions, without requiring the channel's SNR distribution.
//!
//! The conversion rests on two integral transforms built around the channel
//! "certainty" `Φ = 1 − 2·BER`:
//!
//! * [`transforms::ber_to_capacity`] turns an average-BER curve `E(γ̄)` into
//!   the ergodic capacity via the weight [`kernels::KernelContext::kernel_z`],
//! * [`transforms::capacity_to_ber`] turns the analytically continued ergodic
//!   capacity into the average BER via [`kernels::KernelContext::kernel_zhat`].
//!
//! Rayleigh and Nakagami-m channels ([`channels::FadingChannel`]) provide
//! closed forms used as golden cases; [`empirical`] ingests measured BER
//! curves; [`montecarlo`] cross-checks everything by simulation.

pub mod channels;
pub mod empirical;
mod error;
pub mod kernels;
pub mod modulation;
pub mod montecarlo;
pub mod quad;
pub mod specfun;
pub mod transforms;
pub mod validation;

pub use error::{Error, Result};

/// Converts an SNR given in dB to the linear power ratio.
pub fn db_to_linear(db: f64) -> f64 {
    10f64.powf(db / 10.0)
}

/// Converts a linear SNR to dB.
pub fn linear_to_db(linear: f64) -> f64 {
    10.0 * linear.log10()
}
