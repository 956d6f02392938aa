use thiserror::Error;

/// Errors raised while building or decoding graphs.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for graph of order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("{family} requires parameter >= {min}, got {got}")]
    BelowMinimum {
        family: &'static str,
        min: usize,
        got: usize,
    },
}

/// Errors from the graph6 and edge-list text formats.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("empty graph6 input")]
    Empty,
    #[error("malformed graph6 header byte {0:#04x}")]
    BadHeader(u8),
    #[error("graph6 long form (n > 62) is not supported")]
    LongForm,
    #[error("graph order {0} exceeds the graph6 short-form limit of 62")]
    TooLarge(usize),
    #[error("truncated graph6 payload: expected {expected} bytes, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("graph6 payload byte {0:#04x} outside the printable range 63..=126")]
    BadPayloadByte(u8),
    #[error("graph6 input has {0} trailing byte(s)")]
    TrailingBytes(usize),
    #[error("graph6 padding bits are not zero")]
    NonZeroPadding,
    #[error("edge list line {line}: {msg}")]
    EdgeList { line: usize, msg: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Errors from the numeric kernels.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpectralError {
    #[error("matrix is not symmetric: |a[{i}][{j}] - a[{j}][{i}]| = {diff:e} exceeds tolerance")]
    NotSymmetric { i: usize, j: usize, diff: f64 },
    #[error("matrix data has {got} entries, expected {n}x{n}")]
    BadShape { n: usize, got: usize },
    #[error("Jacobi iteration did not converge within {sweeps} sweeps (off-diagonal mass {off:e})")]
    NoConvergence { sweeps: usize, off: f64 },
    #[error("permanent is limited to order {max}, got {n}")]
    PermanentTooLarge { n: usize, max: usize },
}

/// Errors from closed-form evaluators and the regularity check.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClosedFormError {
    #[error("{family} closed form requires n >= {min}, got {got}")]
    BelowMinimum {
        family: &'static str,
        min: usize,
        got: usize,
    },
    #[error("graph is not regular (degrees range over {min}..={max})")]
    NotRegular { min: usize, max: usize },
}

/// Errors from regular-graph generation and catalog building.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum CatalogError {
    #[error("no {k}-regular graph of order {n}: n*k must be even")]
    Parity { n: usize, k: usize },
    #[error("degree {k} must be smaller than the order {n}")]
    DegreeTooLarge { n: usize, k: usize },
    #[error("order {n} exceeds the exhaustive generation budget (max {max})")]
    OrderTooLarge { n: usize, max: usize },
    #[error("empty catalog")]
    Empty,
    #[error("corpus cache: {0}")]
    Cache(String),
    #[error(transparent)]
    Spectral(#[from] SpectralError),
}
