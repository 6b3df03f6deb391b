//! Scalar float helpers routed through `libm` so the crate stays `no_std`.

pub fn sqrt(x: f64) -> f64 {
    libm::sqrt(x)
}

pub fn hypot(x: f64, y: f64) -> f64 {
    libm::hypot(x, y)
}

pub fn sin_cos(x: f64) -> (f64, f64) {
    libm::sincos(x)
}

pub fn cos(x: f64) -> f64 {
    libm::cos(x)
}

pub fn atan2(y: f64, x: f64) -> f64 {
    libm::atan2(y, x)
}

/// Euclidean remainder: result in `[0, period)` for `period > 0`.
pub fn rem_euclid(x: f64, period: f64) -> f64 {
    let r = x - period * libm::floor(x / period);
    if r >= period {
        0.0
    } else {
        r
    }
}
