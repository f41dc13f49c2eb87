//! Binary modulation schemes in the unified two-parameter form: the
//! instantaneous BER over an AWGN channel at SNR γ is
//!
//! ```text
//! E(γ) = Γ(b, aγ) / (2Γ(b)) = Q(b, aγ) / 2
//! ```
//!
//! where `a` selects the modulation (1/2 orthogonal FSK, 1 antipodal PSK) and
//! `b` the detection (1/2 coherent, 1 non-coherent). The channel certainty
//! `Φ(γ) = 1 − 2E(γ) = P(b, aγ)` measures how far the channel is from the
//! fully dissipated state E = 1/2, and its density over the fading ensemble
//! is the Gamma(shape b, rate a) law implemented by [`BinaryModulation::certainty_pdf`].

use std::fmt;
use std::str::FromStr;

use crate::error::{domain, Error, Result};
use crate::specfun;

/// A binary modulation/detection pair (a, b).
#[derive(Debug, Clone, PartialEq)]
pub struct BinaryModulation {
    a: f64,
    b: f64,
    name: String,
}

impl BinaryModulation {
    /// Coherent BPSK: a = 1, b = 1/2.
    pub fn cbpsk() -> Self {
        BinaryModulation {
            a: 1.0,
            b: 0.5,
            name: "bpsk".into(),
        }
    }

    /// Coherent binary FSK: a = 1/2, b = 1/2.
    pub fn cbfsk() -> Self {
        BinaryModulation {
            a: 0.5,
            b: 0.5,
            name: "bfsk".into(),
        }
    }

    /// Differentially encoded BPSK with non-coherent detection: a = 1, b = 1.
    pub fn dbpsk() -> Self {
        BinaryModulation {
            a: 1.0,
            b: 1.0,
            name: "dbpsk".into(),
        }
    }

    /// Non-coherent binary FSK: a = 1/2, b = 1.
    pub fn ncbfsk() -> Self {
        BinaryModulation {
            a: 0.5,
            b: 1.0,
            name: "ncbfsk".into(),
        }
    }

    /// Arbitrary (a, b) with a > 0, b > 0.
    pub fn custom(a: f64, b: f64) -> Result<Self> {
        if !(a > 0.0 && a.is_finite()) {
            return Err(domain("BinaryModulation::custom", "a", a, "a > 0"));
        }
        if !(b > 0.0 && b.is_finite()) {
            return Err(domain("BinaryModulation::custom", "b", b, "b > 0"));
        }
        Ok(BinaryModulation {
            a,
            b,
            name: format!("a={a},b={b}"),
        })
    }

    /// The four canonical schemes.
    pub fn all_canonical() -> [BinaryModulation; 4] {
        [
            Self::cbpsk(),
            Self::cbfsk(),
            Self::dbpsk(),
            Self::ncbfsk(),
        ]
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Instantaneous BER Q(b, a·γ)/2 at SNR γ ≥ 0; 1/2 at γ = 0, strictly
    /// decreasing in γ.
    pub fn instantaneous_ber(&self, snr: f64) -> Result<f64> {
        if !(snr >= 0.0) {
            return Err(domain("instantaneous_ber", "snr", snr, "snr >= 0"));
        }
        Ok(specfun::reg_gamma_raw(self.b, self.a * snr).1 / 2.0)
    }

    /// Certainty Φ(γ) = 1 − 2E(γ) = P(b, a·γ); 0 at γ = 0, → 1 as γ → ∞.
    pub fn certainty(&self, snr: f64) -> Result<f64> {
        if !(snr >= 0.0) {
            return Err(domain("certainty", "snr", snr, "snr >= 0"));
        }
        Ok(specfun::reg_gamma_raw(self.b, self.a * snr).0)
    }

    /// Density of the certainty over the fading ensemble,
    /// p_φ(φ) = a^b φ^{b−1} e^{−aφ} / Γ(b): Gamma with shape b and RATE a
    /// (mean b/a), i.e. exactly ∂Φ/∂φ of [`Self::certainty`].
    pub fn certainty_pdf(&self, phi: f64) -> Result<f64> {
        if !(phi > 0.0) {
            return Err(domain("certainty_pdf", "phi", phi, "phi > 0"));
        }
        Ok(self.certainty_pdf_raw(phi))
    }

    pub(crate) fn certainty_pdf_raw(&self, phi: f64) -> f64 {
        let (a, b) = (self.a, self.b);
        (b * a.ln() + (b - 1.0) * phi.ln() - a * phi - specfun::ln_gamma_raw(b)).exp()
    }
}

impl fmt::Display for BinaryModulation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

impl FromStr for BinaryModulation {
    type Err = Error;

    /// Accepts "bpsk", "bfsk", "dbpsk", "ncbfsk", or explicit "a=<v>,b=<v>".
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "bpsk" | "cbpsk" => Ok(Self::cbpsk()),
            "bfsk" | "cbfsk" => Ok(Self::cbfsk()),
            "dbpsk" => Ok(Self::dbpsk()),
            "ncbfsk" => Ok(Self::ncbfsk()),
            other => {
                let parse_err = |reason: &str| Error::SpecParse {
                    what: "modulation",
                    spec: s.to_string(),
                    reason: reason.to_string(),
                };
                let mut a = None;
                let mut b = None;
                for part in other.split(',') {
                    let (key, val) = part
                        .split_once('=')
                        .ok_or_else(|| parse_err("expected a=<v>,b=<v>"))?;
                    let val: f64 = val
                        .trim()
                        .parse()
                        .map_err(|_| parse_err("parameter is not a number"))?;
                    match key.trim() {
                        "a" => a = Some(val),
                        "b" => b = Some(val),
                        _ => return Err(parse_err("unknown parameter (want a, b)")),
                    }
                }
                match (a, b) {
                    (Some(a), Some(b)) => Self::custom(a, b),
                    _ => Err(parse_err(
                        "expected one of bpsk, bfsk, dbpsk, ncbfsk or a=<v>,b=<v>",
                    )),
                }
            }
        }
    }
}
