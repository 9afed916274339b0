//! Human-readable numbers: 12 significant digits, magnitudes below
//! [`NOISE_FLOOR`] shown as 0. `--json` output bypasses this module.

use qgeo_core::{Complex, ExtendedQuaternion, Quaternion};

pub const NOISE_FLOOR: f64 = 1e-13;

pub fn round12(x: f64) -> f64 {
    if x.abs() < NOISE_FLOOR || !x.is_finite() {
        return if x.is_finite() { 0.0 } else { x };
    }
    let r: f64 = format!("{x:.11e}").parse().unwrap_or(x);
    r + 0.0
}

pub fn real(x: f64) -> String {
    round12(x).to_string()
}

fn terms(parts: &[(f64, &str)]) -> String {
    let mut out = String::new();
    for &(x, unit) in parts {
        let x = round12(x);
        if x == 0.0 {
            continue;
        }
        let mag = x.abs();
        let sign = if x < 0.0 {
            "-"
        } else if out.is_empty() {
            ""
        } else {
            "+"
        };
        let body = if mag == 1.0 && !unit.is_empty() {
            String::new()
        } else {
            mag.to_string()
        };
        out.push_str(&format!("{sign}{body}{unit}"));
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}

pub fn complex(z: Complex) -> String {
    terms(&[(z.re, ""), (z.im, "i")])
}

pub fn quaternion(q: &Quaternion) -> String {
    let [a, b, c, d] = q.to_reals();
    terms(&[(a, ""), (b, "i"), (c, "j"), (d, "k")])
}

pub fn extended(p: &ExtendedQuaternion) -> String {
    match p {
        ExtendedQuaternion::Finite(q) => quaternion(q),
        ExtendedQuaternion::Infinity => "inf".into(),
    }
}

pub fn point(u: &[f64]) -> String {
    let parts: Vec<String> = u.iter().map(|x| real(*x)).collect();
    format!("({})", parts.join(", "))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formatting() {
        assert_eq!(real(-0.5000000000000001), "-0.5");
        assert_eq!(real(-1e-17), "0");
        assert_eq!(real(2.5e-12), "0.0000000000025");
        assert_eq!(complex(Complex::new(0.0, -1.0)), "-i");
        assert_eq!(complex(Complex::new(0.25, 1.5)), "0.25+1.5i");
        assert_eq!(quaternion(&-Quaternion::J), "-j");
        assert_eq!(quaternion(&Quaternion::ZERO), "0");
        assert_eq!(point(&[0.0, -0.0, -1.0]), "(0, 0, -1)");
    }
}
