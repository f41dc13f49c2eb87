use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error)]
pub enum Error {
    /// An argument fell outside an operation's domain.
    #[error("{op}: argument {arg} = {value} violates `{requires}`")]
    Domain {
        op: &'static str,
        arg: &'static str,
        value: f64,
        requires: &'static str,
    },

    /// Adaptive quadrature could not reach the requested tolerance.
    #[error("quadrature did not converge: achieved ~{achieved:.3e} absolute, requested {requested:.3e}")]
    QuadratureNonConvergence { achieved: f64, requested: f64 },

    /// The BER→capacity kernel only has real closed reductions for the
    /// coherent (b = 1/2) and non-coherent (b = 1) detection parameters.
    #[error("unsupported detection parameter b = {b}: kernel requires b = 1/2 or b = 1")]
    UnsupportedDetection { b: f64 },

    /// A BER evaluator returned a value outside (0, 1/2].
    #[error("BER function returned {value} at average SNR {snr:.6e}: outside (0, 1/2]")]
    BerOutOfRange { snr: f64, value: f64 },

    /// An imaginary-capacity evaluator returned a value outside [0, πW/ln 2].
    #[error("imaginary-capacity function returned {value} at s = {s:.6e}: outside [0, {max}]")]
    ImCapacityOutOfRange { s: f64, value: f64, max: f64 },

    /// A transform produced a value outside its mathematically possible range,
    /// which signals an inconsistent function-valued input.
    #[error("transform result {value} outside [0, 1/2]: inconsistent input function")]
    ResultOutOfRange { value: f64 },

    /// Invalid transform configuration.
    #[error("invalid transform configuration: {reason}")]
    InvalidConfig { reason: String },

    /// A BER curve file failed to parse.
    #[error("{path}:{line}: {reason}")]
    CurveParse {
        path: String,
        line: usize,
        reason: String,
    },

    /// A BER curve had fewer than two samples.
    #[error("BER curve needs at least 2 samples, got {got}")]
    TooFewCurvePoints { got: usize },

    /// Invalid channel or modulation specification string.
    #[error("cannot parse {what} spec `{spec}`: {reason}")]
    SpecParse {
        what: &'static str,
        spec: String,
        reason: String,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(
    op: &'static str,
    arg: &'static str,
    value: f64,
    requires: &'static str,
) -> Error {
    Error::Domain {
        op,
        arg,
        value,
        requires,
    }
}
