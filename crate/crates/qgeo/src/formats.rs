//! JSON state and transform files, reports, and orbit CSV.

use std::fs;
use std::path::Path;

use qgeo_core::harness::DiagramReport;
use qgeo_core::{Complex, LocalUnitary, S4Point, Su2, TwoQubitState, Variant};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::error::{CliError, Result};

/// Squared-norm error repaired with a warning; anything larger is rejected.
pub const RENORMALIZE_LIMIT: f64 = 1e-6;

/// Squared-norm error accepted silently.
pub const SILENT_LIMIT: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StateFile {
    /// `|00⟩, |01⟩, |10⟩, |11⟩` as `[re, im]` pairs.
    pub amplitudes: [[f64; 2]; 4],
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TransformFile {
    pub variant: Variant,
    pub theta: f64,
    pub a: [f64; 2],
    pub b: [f64; 2],
}

fn pair(z: [f64; 2]) -> Complex {
    Complex::new(z[0], z[1])
}

/// Norm policy shared by states and transforms. Returns a warning when the
/// input had to be rescaled.
fn check_norm(what: &str, norm_sq: f64) -> Result<Option<String>> {
    if !norm_sq.is_finite() {
        return Err(CliError::Input(format!("{what}: non-finite entries")));
    }
    if norm_sq == 0.0 {
        return Err(CliError::Domain(format!("{what}: zero vector")));
    }
    let err = (norm_sq - 1.0).abs();
    if err <= SILENT_LIMIT {
        Ok(None)
    } else if err <= RENORMALIZE_LIMIT {
        Ok(Some(format!("{what}: squared norm {norm_sq} renormalized")))
    } else {
        Err(CliError::Input(format!(
            "{what}: squared norm {norm_sq} is not within {RENORMALIZE_LIMIT} of 1"
        )))
    }
}

impl StateFile {
    pub fn from_state(psi: &TwoQubitState) -> Self {
        Self {
            amplitudes: psi.amplitudes().map(|z| [z.re, z.im]),
        }
    }

    pub fn to_state(&self) -> Result<(TwoQubitState, Option<String>)> {
        let amps = self.amplitudes.map(pair);
        let norm_sq: f64 = amps.iter().map(|z| z.norm_sqr()).sum();
        let warning = check_norm("state", norm_sq)?;
        let psi = match warning {
            None => TwoQubitState::unnormalized(amps)?,
            Some(_) => TwoQubitState::normalized(amps)?,
        };
        Ok((psi, warning))
    }
}

impl TransformFile {
    pub fn from_transform(g: &LocalUnitary) -> Self {
        let [a, b] = g.su2().params();
        Self {
            variant: g.variant(),
            theta: g.theta(),
            a: [a.re, a.im],
            b: [b.re, b.im],
        }
    }

    pub fn to_transform(&self) -> Result<(LocalUnitary, Option<String>)> {
        if !self.theta.is_finite() {
            return Err(CliError::Input("transform: theta is not finite".into()));
        }
        let (a, b) = (pair(self.a), pair(self.b));
        let warning = check_norm("transform", a.norm_sqr() + b.norm_sqr())?;
        let su2 = match warning {
            None => Su2::new(a, b)?,
            Some(_) => Su2::normalized(a, b)?,
        };
        Ok((
            LocalUnitary::try_new(self.variant, self.theta, su2)?,
            warning,
        ))
    }
}

pub fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Read {
        path: path.to_owned(),
        source,
    })?;
    serde_json::from_str(&text).map_err(|source| CliError::Schema {
        path: path.to_owned(),
        source,
    })
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("plain data serializes");
    s.push('\n');
    s
}

pub fn write_text(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|source| CliError::Write {
        path: path.to_owned(),
        source,
    })
}

pub fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<()> {
    write_text(path, &to_json(value))
}

pub fn read_state(path: &Path) -> Result<(TwoQubitState, Option<String>)> {
    read_json::<StateFile>(path)?.to_state()
}

pub fn read_transform(path: &Path) -> Result<(LocalUnitary, Option<String>)> {
    read_json::<TransformFile>(path)?.to_transform()
}

pub fn report_json(report: &DiagramReport) -> String {
    to_json(report)
}

pub const ORBIT_HEADER: &str = "step,u0,u1,u2,u3,u4";

/// One CSV line per point, numbers in shortest round-trip form.
pub fn orbit_csv(points: &[S4Point]) -> String {
    let mut out = String::from(ORBIT_HEADER);
    out.push('\n');
    for (k, p) in points.iter().enumerate() {
        out.push_str(&k.to_string());
        for x in p.coords() {
            out.push(',');
            // drop negative zero
            out.push_str(&(x + 0.0).to_string());
        }
        out.push('\n');
    }
    out
}
