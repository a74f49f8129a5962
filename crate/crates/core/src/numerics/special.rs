use crate::{Error, Result};

pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

// shift point for the asymptotic series
const X_ASYM: f64 = 12.0;

/// Digamma function ψ(x) for x > 0.
pub fn digamma(x: f64) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::Domain(format!("digamma needs x > 0, got {x}")));
    }
    let mut x = x;
    let mut acc = 0.0;
    while x < X_ASYM {
        acc -= 1.0 / x;
        x += 1.0;
    }
    Ok(acc + x.ln() + digamma_rest(x))
}

/// Trigamma function ψ'(x) for x > 0.
pub fn trigamma(x: f64) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::Domain(format!("trigamma needs x > 0, got {x}")));
    }
    let mut x = x;
    let mut acc = 0.0;
    while x < X_ASYM {
        acc += 1.0 / (x * x);
        x += 1.0;
    }
    Ok(acc + trigamma_asym(x))
}

// ψ(x) − ln x for x ≥ X_ASYM
fn digamma_rest(x: f64) -> f64 {
    -0.5 / x - digamma_tail(x)
}

// Bernoulli tail: Σ B_2k / (2k x^2k)
fn digamma_tail(x: f64) -> f64 {
    let r = 1.0 / (x * x);
    r * (1.0 / 12.0
        - r * (1.0 / 120.0
            - r * (1.0 / 252.0 - r * (1.0 / 240.0 - r * (1.0 / 132.0 - r * (691.0 / 32760.0 - r / 12.0))))))
}

// ψ'(x) for x ≥ X_ASYM
fn trigamma_asym(x: f64) -> f64 {
    1.0 / x + 0.5 / (x * x) + trigamma_tail(x)
}

fn trigamma_tail(x: f64) -> f64 {
    let r = 1.0 / (x * x);
    let t = 1.0 / 6.0
        - r * (1.0 / 30.0
            - r * (1.0 / 42.0 - r * (1.0 / 30.0 - r * (5.0 / 66.0 - r * (691.0 / 2730.0 - r * 7.0 / 6.0)))));
    r * t / x
}

// a − b when it is a small integer
fn integer_offset(a: f64, b: f64) -> Option<i64> {
    let m = a - b;
    (m == m.round() && m.abs() <= 64.0).then_some(m as i64)
}

/// ψ(a) − ψ(b) for a, b > 0, accurate when a and b are close.
///
/// Both arguments are shifted together, so the difference is exactly zero for
/// a = b and the large parts of ψ cancel before rounding.
pub fn digamma_diff(a: f64, b: f64) -> Result<f64> {
    if !(a > 0.0 && b > 0.0) || !a.is_finite() || !b.is_finite() {
        return Err(Error::Domain(format!("digamma_diff needs positive arguments, got {a}, {b}")));
    }
    if let Some(m) = integer_offset(a, b) {
        // ψ(b+m) − ψ(b) = Σ_{k<m} 1/(b+k)
        let (lo, sign) = if m >= 0 { (b, 1.0) } else { (a, -1.0) };
        return Ok(sign * (0..m.abs()).map(|k| 1.0 / (lo + k as f64)).sum::<f64>());
    }
    // the offset is carried separately so that shifting never rounds it
    let delta = a - b;
    let mut b = b;
    let mut acc = 0.0;
    while b < X_ASYM || b + delta < X_ASYM {
        acc += delta / (b * (b + delta));
        b += 1.0;
    }
    let a = b + delta;
    Ok(acc + (delta / b).ln_1p() + 0.5 * delta / (a * b) - (digamma_tail(a) - digamma_tail(b)))
}

/// ψ'(a) − ψ'(b) for a, b > 0, accurate when a and b are close.
pub fn trigamma_diff(a: f64, b: f64) -> Result<f64> {
    if !(a > 0.0 && b > 0.0) || !a.is_finite() || !b.is_finite() {
        return Err(Error::Domain(format!("trigamma_diff needs positive arguments, got {a}, {b}")));
    }
    if let Some(m) = integer_offset(a, b) {
        // ψ'(b+m) − ψ'(b) = −Σ_{k<m} 1/(b+k)²
        let (lo, sign) = if m >= 0 { (b, -1.0) } else { (a, 1.0) };
        return Ok(sign * (0..m.abs()).map(|k| 1.0 / ((lo + k as f64) * (lo + k as f64))).sum::<f64>());
    }
    let delta = a - b;
    let mut b = b;
    let mut acc = 0.0;
    while b < X_ASYM || b + delta < X_ASYM {
        let a = b + delta;
        acc -= delta * (a + b) / (a * a * b * b);
        b += 1.0;
    }
    let a = b + delta;
    let lead = -delta / (a * b) - 0.5 * delta * (a + b) / (a * a * b * b);
    Ok(acc + lead + (trigamma_tail(a) - trigamma_tail(b)))
}
