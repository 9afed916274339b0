//! Subcommand implementations. Each returns the process exit code on
//! success paths; failures surface as [`CliError`].

use std::fs;
use std::path::Path;

use qgeo_core::harness::{run_suite, DiagramReport};
use qgeo_core::local::{apply_cb, apply_cbprime};
use qgeo_core::sampling::{sample_state, trial_rng};
use qgeo_core::state::{
    concurrence_term, is_separable, quaternionify, schmidt_term, wootters_preconcurrence,
};
use qgeo_core::{
    conformal_p, inverse_stereographic, Complex, ExtendedQuaternion, LocalUnitary, MoebiusQ,
    TwoQubitState, Variant, DEFAULT_TOLERANCE,
};
use serde::Serialize;

use crate::display;
use crate::error::{CliError, Result};
use crate::formats::{self, StateFile};

fn warn(w: Option<String>) {
    if let Some(w) = w {
        eprintln!("warning: {w}");
    }
}

/// Quantities reported by `analyze`.
#[derive(Debug, Clone, PartialEq)]
pub struct Analysis {
    pub s: Complex,
    pub c: Complex,
    pub wootters: Complex,
    pub q1_norm_sq: f64,
    pub q2_norm_sq: f64,
    pub p: ExtendedQuaternion,
    pub s4: [f64; 5],
    pub separable: bool,
}

impl Analysis {
    pub fn of(psi: &TwoQubitState) -> Result<Self> {
        let qb = quaternionify(psi);
        let p = conformal_p(&qb)?;
        Ok(Self {
            s: schmidt_term(psi),
            c: concurrence_term(psi),
            wootters: wootters_preconcurrence(psi),
            q1_norm_sq: qb.q1.norm_sq(),
            q2_norm_sq: qb.q2.norm_sq(),
            p,
            s4: inverse_stereographic(&p).coords(),
            separable: is_separable(psi, DEFAULT_TOLERANCE),
        })
    }

    pub fn to_text(&self) -> String {
        format!(
            "S = {}\nC = {}\n|C| = {}\nwootters = {}\n|q1|^2 = {}\n|q2|^2 = {}\nP = {}\nS4 = {}\nseparable = {}\n",
            display::complex(self.s),
            display::complex(self.c),
            display::real(self.c.norm()),
            display::complex(self.wootters),
            display::real(self.q1_norm_sq),
            display::real(self.q2_norm_sq),
            display::extended(&self.p),
            display::point(&self.s4),
            self.separable,
        )
    }

    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        #[serde(untagged)]
        enum Point {
            Finite([f64; 4]),
            Inf(&'static str),
        }
        #[derive(Serialize)]
        struct Out {
            s: [f64; 2],
            c: [f64; 2],
            wootters: [f64; 2],
            q1_norm_sq: f64,
            q2_norm_sq: f64,
            p: Point,
            s4: [f64; 5],
            separable: bool,
        }
        let z = |z: Complex| [z.re, z.im];
        formats::to_json(&Out {
            s: z(self.s),
            c: z(self.c),
            wootters: z(self.wootters),
            q1_norm_sq: self.q1_norm_sq,
            q2_norm_sq: self.q2_norm_sq,
            p: match self.p {
                ExtendedQuaternion::Finite(q) => Point::Finite(q.to_reals()),
                ExtendedQuaternion::Infinity => Point::Inf("inf"),
            },
            s4: self.s4,
            separable: self.separable,
        })
    }
}

pub fn analyze(state: &Path, json: bool) -> Result<u8> {
    let (psi, w) = formats::read_state(state)?;
    warn(w);
    let a = Analysis::of(&psi)?;
    print!("{}", if json { a.to_json() } else { a.to_text() });
    Ok(0)
}

pub fn apply_transform(g: &LocalUnitary, psi: &TwoQubitState) -> Result<TwoQubitState> {
    Ok(match g.variant() {
        Variant::So2xSu2 => apply_cb(g, psi),
        Variant::Su2xSo2 => apply_cbprime(g, psi)?,
    })
}

pub fn transform(state: &Path, transform: &Path, out: &Path) -> Result<u8> {
    let (psi, w) = formats::read_state(state)?;
    warn(w);
    let (g, w) = formats::read_transform(transform)?;
    warn(w);
    let moved = apply_transform(&g, &psi)?;
    for (label, s) in [("before", &psi), ("after", &moved)] {
        let (sv, cv) = (schmidt_term(s), concurrence_term(s));
        println!(
            "{label}: S = {}  C = {}  |C| = {}",
            display::complex(sv),
            display::complex(cv),
            display::real(cv.norm())
        );
    }
    formats::write_json(out, &StateFile::from_state(&moved))?;
    Ok(0)
}

/// Runs the suite, writes the report, and prints a summary.
pub fn verify(trials: u64, seed: u64, tol: f64, report_path: &Path) -> Result<u8> {
    if !(tol.is_finite() && tol > 0.0) {
        return Err(CliError::Input(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    let report = run_suite(trials, seed, tol);
    formats::write_text(report_path, &formats::report_json(&report))?;
    print!("{}", summary(&report));
    Ok(if report.overall_pass { 0 } else { 1 })
}

pub fn summary(report: &DiagramReport) -> String {
    let mut out = format!(
        "seed {} trials {} tol {:e}\n",
        report.seed, report.trials, report.tolerance
    );
    for c in &report.checks {
        out.push_str(&format!(
            "{} {:<28} max {:.3e} tol {:.0e}{}\n",
            if c.passed { "PASS" } else { "FAIL" },
            c.name.name(),
            c.max_deviation,
            c.tolerance,
            if c.errors > 0 {
                format!(" errors {}", c.errors)
            } else {
                String::new()
            },
        ));
    }
    for w in &report.witnesses {
        out.push_str(&format!(
            "{} witness {:?} deviation {}\n",
            if w.found { "PASS" } else { "FAIL" },
            w.candidate,
            w.witness
                .map_or("none".into(), |x| format!("{:.3e}", x.deviation)),
        ));
    }
    for o in &report.exploratory {
        out.push_str(&format!(
            "INFO {:?} max {:.3e}\n",
            o.candidate, o.max_deviation
        ));
    }
    out.push_str(if report.overall_pass {
        "overall: pass\n"
    } else {
        "overall: fail\n"
    });
    out
}

pub fn orbit_points(
    psi: &TwoQubitState,
    g: &LocalUnitary,
    steps: u64,
) -> Result<Vec<qgeo_core::S4Point>> {
    if g.variant() != Variant::So2xSu2 {
        return Err(CliError::Input(
            "orbit: su2xso2 transforms have no Moebius action on P".into(),
        ));
    }
    let f = MoebiusQ::from_b(g)?;
    let mut p = conformal_p(&quaternionify(psi))?;
    let mut points = vec![inverse_stereographic(&p)];
    for _ in 0..steps {
        p = f.apply(&p)?;
        points.push(inverse_stereographic(&p));
    }
    Ok(points)
}

pub fn orbit(state: &Path, transform: &Path, steps: u64, out: &Path) -> Result<u8> {
    let (psi, w) = formats::read_state(state)?;
    warn(w);
    let (g, w) = formats::read_transform(transform)?;
    warn(w);
    let points = orbit_points(&psi, &g, steps)?;
    formats::write_text(out, &formats::orbit_csv(&points))?;
    Ok(0)
}

/// State `index` of a sample run; independent of `count`.
pub fn sampled_state(seed: u64, index: u64) -> TwoQubitState {
    sample_state(&mut trial_rng(seed, index))
}

pub fn sample(count: u64, seed: u64, dir: &Path) -> Result<u8> {
    fs::create_dir_all(dir).map_err(|source| CliError::Write {
        path: dir.to_owned(),
        source,
    })?;
    for i in 0..count {
        let path = dir.join(format!("state_{i:04}.json"));
        formats::write_json(&path, &StateFile::from_state(&sampled_state(seed, i)))?;
    }
    Ok(0)
}
