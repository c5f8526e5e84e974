//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("surface is not uniformly space-like: |sigma'({x})| = {slope}")]
    NotSpacelike { x: f64, slope: f64 },

    #[error("sigma/sigma' samples inconsistent at x = {x}: |diff| = {dev}")]
    SlopeInconsistent { x: f64, dev: f64 },

    #[error("invalid compact-set spec: {0}")]
    BadCompactSet(String),

    #[error("characteristic coordinate z = x - sigma(x) is not strictly increasing near x = {x}")]
    NonMonotone { x: f64 },

    #[error("ODE step size underflow at y = {y}")]
    StepUnderflow { y: f64 },

    #[error("point (s, y) = ({s}, {y}) outside the constructed map domain")]
    MapDomain { s: f64, y: f64 },

    #[error("point (t, x) = ({t}, {x}) lies above the blowup surface")]
    AboveSurface { t: f64, x: f64 },

    #[error("series leading coefficient not bounded away from zero (min |c0| = {0})")]
    SeriesLeadingZero(f64),

    #[error("conformal factor series must have unit leading coefficient (max deviation {0})")]
    LambdaNotNormalized(f64),

    #[error("4/p = {four_over_p} is an integer and order {requested} demands log powers >= 2; supported only up to order {max_order}")]
    LogOrderUnsupported {
        four_over_p: f64,
        requested: usize,
        max_order: usize,
    },

    #[error("Bessel argument out of range: nu = {nu}, z = {z}")]
    BesselRange { nu: f64, z: f64 },

    #[error("Bessel continued fraction failed to converge (nu = {nu}, z = {z})")]
    BesselNoConverge { nu: f64, z: f64 },

    #[error("light cone of width {cone} does not fit the synthesis domain of half-width {half_width}")]
    ConeExceedsDomain { cone: f64, half_width: f64 },

    #[error("forcing decays like s^{delta} but the kernel order requires delta > {required}")]
    DeltaTooSmall { delta: f64, required: f64 },

    #[error("analytic tail below s_min = {s_min} contributes a fraction {fraction:.3e} > {limit:.1e} of the solution")]
    TailNotConverged {
        s_min: f64,
        fraction: f64,
        limit: f64,
    },

    #[error("Picard iteration failed to contract after {halvings} halvings of s0 (last ratio {last_ratio})")]
    NoContraction { halvings: usize, last_ratio: f64 },

    #[error("parametrix plus correction lost positivity at (s, y) = ({s}, {y}): v = {v}")]
    SignLoss { s: f64, y: f64, v: f64 },

    #[error("grid too coarse for derivative budget m = {m} (need at least {need} s-levels, have {have})")]
    GridTooCoarse { m: usize, need: usize, have: usize },

    #[error("CFL violation: dt/dx = {ratio} exceeds {limit}")]
    CflViolation { ratio: f64, limit: f64 },

    #[error("explicit scheme overflowed at t = {t} (approaching blowup)")]
    SchemeOverflow { t: f64 },

    #[error("blowup fit residuals are not monotone at x = {x}; resolution insufficient")]
    FitNotMonotone { x: f64 },

    #[error("energy {e} below the admissible minimum for the requested s-range (turning point at s = {s_turn})")]
    EnergyOutOfRange { e: f64, s_turn: f64 },

    #[error("no Cauchy window found: the solved slab never clears the surface variation")]
    NoCauchyWindow,

    #[error("config error: {0}")]
    Config(String),

    #[error("{stage} stage failed: {source}")]
    Stage {
        stage: &'static str,
        #[source]
        source: Box<Error>,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn in_stage(self, stage: &'static str) -> Error {
        Error::Stage {
            stage,
            source: Box::new(self),
        }
    }
}
