//! Randomized verification of the commutative diagrams.
//!
//! Each [`Check`] samples its inputs from a ChaCha stream keyed by
//! `(seed, check, trial)`, evaluates one deviation, and keeps the worst
//! case so it can be replayed. Quaterbit-level checks measure the largest
//! component-wise quaternion distance; checks on the extended line use the
//! chordal metric of the 4-sphere chart.

use alloc::vec::Vec;

use rand::Rng;

use crate::conformal::{conformal_one_qubit, conformal_p, sc_form, ExtendedComplex};
use crate::error::{Error, Result};
use crate::local::{
    apply_b_quaterbit, apply_bprime_quaterbit, apply_cb, apply_cbprime, LocalUnitary, Su2, Variant,
};
use crate::moebius::{Action, MoebiusC, MoebiusQ};
use crate::quaternion::{right_quotient, ExtendedQuaternion, Quaternion};
use crate::sampling::{
    sample_local_unitary, sample_one_qubit, sample_state, sample_su2, trial_rng, TrialRng,
};
use crate::state::{
    concurrence_term, quaternionify, schmidt_term, wootters_preconcurrence, OneQubitState,
    TwoQubitState,
};
use crate::{Complex, ZERO_NORM_SQ};

/// Deviation above which an alternative intertwiner counts as failing.
pub const WITNESS_THRESHOLD: f64 = 0.01;

/// Trials spent on each witness search in [`run_suite`].
pub const WITNESS_TRIALS: u64 = 100;

/// Inputs of one trial.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum CaseInputs {
    OneQubit {
        su2: Su2,
        state: OneQubitState,
    },
    Local {
        transform: LocalUnitary,
        state: TwoQubitState,
    },
    State {
        state: TwoQubitState,
    },
}

/// `F_A(P(ψ))` against `P(Aψ)` on the Riemann sphere.
pub fn check_one_qubit_diagram(a: &Su2, psi: &OneQubitState) -> Result<f64> {
    let lhs = MoebiusC::from_su2(a).apply(&conformal_one_qubit(psi)?)?;
    let rhs = conformal_one_qubit(&psi.apply(&a.matrix()))?;
    Ok(lhs.chordal_distance(&rhs))
}

/// `Q(CB ψ)` against `B(Q ψ)`.
pub fn check_quadrangle_q(b: &LocalUnitary, psi: &TwoQubitState) -> Result<f64> {
    let lhs = quaternionify(&apply_cb(b, psi));
    let rhs = apply_b_quaterbit(b, &quaternionify(psi))?;
    Ok(lhs.distance(&rhs))
}

/// `Q(CB′ ψ)` against `B′(Q ψ)`.
pub fn check_quadrangle_q_prime(bp: &LocalUnitary, psi: &TwoQubitState) -> Result<f64> {
    let lhs = quaternionify(&apply_cbprime(bp, psi)?);
    let rhs = apply_bprime_quaterbit(bp, &quaternionify(psi))?;
    Ok(lhs.distance(&rhs))
}

/// `S′ = cos²θ S − sin²θ S̄ + ½ sin 2θ (|q2|² − |q1|²)`.
pub fn evolved_schmidt_term(theta: f64, s: Complex, q1_sq: f64, q2_sq: f64) -> Complex {
    let (sn, cs) = (libm::sin(theta), libm::cos(theta));
    s * (cs * cs) - s.conj() * (sn * sn) + 0.5 * libm::sin(2.0 * theta) * (q2_sq - q1_sq)
}

/// `|q′2|² = |q2|² cos²θ + |q1|² sin²θ − sin 2θ Re S`.
pub fn evolved_q2_norm_sq(theta: f64, s: Complex, q1_sq: f64, q2_sq: f64) -> f64 {
    let (sn, cs) = (libm::sin(theta), libm::cos(theta));
    q2_sq * cs * cs + q1_sq * sn * sn - libm::sin(2.0 * theta) * s.re
}

/// Closed form of `F_B(P(Q ψ))` written with `sin θ cos θ`:
///
/// ```text
/// [cos²θ S − sin²θ S̄ + sin θ cos θ (|q2|² − |q1|²) + C j] / [|q2|² cos²θ + |q1|² sin²θ − sin 2θ Re S]
/// ```
pub fn moebius_image_closed_form(b: &LocalUnitary, psi: &TwoQubitState) -> ExtendedQuaternion {
    let (s, c) = (schmidt_term(psi), concurrence_term(psi));
    let q1_sq = psi.alpha().norm_sqr() + psi.beta().norm_sqr();
    let q2_sq = psi.gamma().norm_sqr() + psi.delta().norm_sqr();
    let (sn, cs) = (libm::sin(b.theta()), libm::cos(b.theta()));
    let num = Quaternion::from_pair(
        s * (cs * cs) - s.conj() * (sn * sn) + sn * cs * (q2_sq - q1_sq),
        c,
    );
    let den = q2_sq * cs * cs + q1_sq * sn * sn - 2.0 * sn * cs * s.re;
    if den * den < ZERO_NORM_SQ {
        ExtendedQuaternion::Infinity
    } else {
        ExtendedQuaternion::Finite(num * (1.0 / den))
    }
}

/// The three routes around the two-qubit diagram, and two closed forms.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThreeWay {
    /// `P Q(CB ψ)`.
    pub via_complex: ExtendedQuaternion,
    /// `P B(Q ψ)`.
    pub via_quaterbit: ExtendedQuaternion,
    /// `F_B P(Q ψ)`.
    pub via_moebius: ExtendedQuaternion,
    /// `(S′ + C′ j)/|q′2|²` from the transformed amplitudes.
    pub schmidt_concurrence: ExtendedQuaternion,
    /// [`moebius_image_closed_form`].
    pub closed_form: ExtendedQuaternion,
}

impl ThreeWay {
    pub fn compute(b: &LocalUnitary, psi: &TwoQubitState) -> Result<Self> {
        let qb = quaternionify(psi);
        Ok(Self {
            via_complex: conformal_p(&quaternionify(&apply_cb(b, psi)))?,
            via_quaterbit: conformal_p(&apply_b_quaterbit(b, &qb)?)?,
            via_moebius: MoebiusQ::from_b(b)?.apply(&conformal_p(&qb)?)?,
            schmidt_concurrence: sc_form(&apply_cb(b, psi)).0,
            closed_form: moebius_image_closed_form(b, psi),
        })
    }

    /// Gap of the first equality.
    pub fn first_gap(&self) -> f64 {
        self.via_complex.chordal_distance(&self.via_quaterbit)
    }

    /// Gap of the second equality.
    pub fn second_gap(&self) -> f64 {
        self.via_quaterbit.chordal_distance(&self.via_moebius)
    }

    /// Largest pairwise gap among the common value and both closed forms.
    pub fn closed_form_gap(&self) -> f64 {
        let a = self.via_complex.chordal_distance(&self.schmidt_concurrence);
        let b = self.via_complex.chordal_distance(&self.closed_form);
        let c = self.schmidt_concurrence.chordal_distance(&self.closed_form);
        a.max(b).max(c)
    }
}

/// `(first gap, second gap)` of the three-way equality.
pub fn check_three_way(b: &LocalUnitary, psi: &TwoQubitState) -> Result<(f64, f64)> {
    let t = ThreeWay::compute(b, psi)?;
    Ok((t.first_gap(), t.second_gap()))
}

/// `P(Q((I⊗A)ψ))` against `P(Q ψ)`.
pub fn check_second_qubit_inertness(a: &Su2, psi: &TwoQubitState) -> Result<f64> {
    let b = LocalUnitary::new(Variant::So2xSu2, 0.0, *a);
    let before = conformal_p(&quaternionify(psi))?;
    let after = conformal_p(&quaternionify(&apply_cb(&b, psi)))?;
    Ok(before.chordal_distance(&after))
}

/// Alternative maps that could have intertwined `P` with a local subgroup.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum Candidate {
    /// Left-denominator action of the `𝓑` matrix `R(θ)_ij (a − bj)`.
    LeftDenominatorOnB,
    /// Canonical action of the `𝓑′` matrix `A_ij (cos θ − sin θ j)`.
    RightCoefficientsOnBprime,
    /// Left-coefficient action of the same `𝓑′` matrix.
    LeftCoefficientsOnBprime,
    /// Left-coefficient action of the bare SU(2) factor `A` of `𝓑′`.
    LeftCoefficientsSu2OnBprime,
}

impl Candidate {
    pub fn variant(&self) -> Variant {
        match self {
            Candidate::LeftDenominatorOnB => Variant::So2xSu2,
            _ => Variant::Su2xSo2,
        }
    }

    /// Chordal gap between the candidate applied to `P(Qψ)` and `P(g Qψ)`.
    pub fn deviation(&self, g: &LocalUnitary, psi: &TwoQubitState) -> Result<f64> {
        let qb = quaternionify(psi);
        let point = conformal_p(&qb)?;
        let (map, action, moved) = match self {
            Candidate::LeftDenominatorOnB => (
                MoebiusQ::from_b(g)?,
                Action::LeftDenominator,
                apply_b_quaterbit(g, &qb)?,
            ),
            Candidate::RightCoefficientsOnBprime => (
                MoebiusQ::from_bprime(g)?,
                Action::RightCoefficients,
                apply_bprime_quaterbit(g, &qb)?,
            ),
            Candidate::LeftCoefficientsOnBprime => (
                MoebiusQ::from_bprime(g)?,
                Action::LeftCoefficients,
                apply_bprime_quaterbit(g, &qb)?,
            ),
            Candidate::LeftCoefficientsSu2OnBprime => {
                let m = g
                    .su2()
                    .matrix()
                    .map(|row| row.map(|z| Quaternion::from_pair(z, Complex::new(0.0, 0.0))));
                (
                    MoebiusQ::new(crate::local::QuatMat2(m))?,
                    Action::LeftCoefficients,
                    apply_bprime_quaterbit(g, &qb)?,
                )
            }
        };
        let lhs = map.apply_with(action, &point)?;
        Ok(lhs.chordal_distance(&conformal_p(&moved)?))
    }
}

/// A recorded failure of a candidate intertwiner.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Witness {
    pub candidate: Candidate,
    pub state: TwoQubitState,
    pub transform: LocalUnitary,
    pub deviation: f64,
}

impl Witness {
    pub fn recompute(&self) -> Result<f64> {
        self.candidate.deviation(&self.transform, &self.state)
    }
}

/// Where a witness search draws its transforms from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchSpace {
    /// Haar SU(2) factor, θ uniform subject to `|sin θ| > 0.1`.
    Generic,
    /// `θ = 0`, `a = 1`, `b = 0`: every coefficient matrix is real.
    RealEntries,
}

fn sample_search_transform(
    variant: Variant,
    space: SearchSpace,
    rng: &mut TrialRng,
) -> LocalUnitary {
    match space {
        SearchSpace::RealEntries => LocalUnitary::identity(variant),
        SearchSpace::Generic => loop {
            let g = sample_local_unitary(variant, rng);
            if libm::sin(g.theta()).abs() > 0.1 {
                return g;
            }
        },
    }
}

fn witness_stream(candidate: Candidate, trial: u64) -> u64 {
    let id = match candidate {
        Candidate::LeftDenominatorOnB => 101,
        Candidate::RightCoefficientsOnBprime => 102,
        Candidate::LeftCoefficientsOnBprime => 103,
        Candidate::LeftCoefficientsSu2OnBprime => 104,
    };
    (id << 32) | trial
}

/// Largest deviation of `candidate` over `max_trials` draws, whether or not
/// it crosses the witness threshold. Errors count as no evidence.
pub fn worst_candidate_case(
    candidate: Candidate,
    max_trials: u64,
    seed: u64,
    space: SearchSpace,
) -> Option<Witness> {
    let mut worst: Option<Witness> = None;
    for trial in 0..max_trials {
        let mut rng = trial_rng(seed, witness_stream(candidate, trial));
        let transform = sample_search_transform(candidate.variant(), space, &mut rng);
        let state = sample_state(&mut rng);
        let Ok(deviation) = candidate.deviation(&transform, &state) else {
            continue;
        };
        if worst.is_none_or(|w| deviation > w.deviation) {
            worst = Some(Witness {
                candidate,
                state,
                transform,
                deviation,
            });
        }
    }
    worst
}

/// The worst case found, if it exceeds [`WITNESS_THRESHOLD`].
pub fn find_variant_failure_witness(
    candidate: Candidate,
    max_trials: u64,
    seed: u64,
    space: SearchSpace,
) -> Option<Witness> {
    worst_candidate_case(candidate, max_trials, seed, space)
        .filter(|w| w.deviation > WITNESS_THRESHOLD)
}

/// Gated checks run by [`run_suite`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum Check {
    OneQubitDiagram,
    QuadrangleQ,
    ThreeWayFirst,
    ThreeWaySecond,
    ClosedForms,
    SchmidtEvolution,
    ConcurrenceInvariance,
    WoottersRelation,
    SecondQubitInertness,
    QuadrangleQPrime,
    ConcurrenceModulusBprime,
}

impl Check {
    pub const ALL: [Check; 11] = [
        Check::OneQubitDiagram,
        Check::QuadrangleQ,
        Check::ThreeWayFirst,
        Check::ThreeWaySecond,
        Check::ClosedForms,
        Check::SchmidtEvolution,
        Check::ConcurrenceInvariance,
        Check::WoottersRelation,
        Check::SecondQubitInertness,
        Check::QuadrangleQPrime,
        Check::ConcurrenceModulusBprime,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Check::OneQubitDiagram => "one_qubit_diagram",
            Check::QuadrangleQ => "quadrangle_q",
            Check::ThreeWayFirst => "three_way_first",
            Check::ThreeWaySecond => "three_way_second",
            Check::ClosedForms => "closed_forms",
            Check::SchmidtEvolution => "schmidt_evolution",
            Check::ConcurrenceInvariance => "concurrence_invariance",
            Check::WoottersRelation => "wootters_relation",
            Check::SecondQubitInertness => "second_qubit_inertness",
            Check::QuadrangleQPrime => "quadrangle_q_prime",
            Check::ConcurrenceModulusBprime => "concurrence_modulus_bprime",
        }
    }

    /// The contract this check must meet.
    pub fn contract(&self) -> f64 {
        match self {
            Check::OneQubitDiagram | Check::SecondQubitInertness => 1e-11,
            Check::ThreeWayFirst | Check::ThreeWaySecond | Check::ClosedForms => 1e-10,
            _ => 1e-12,
        }
    }

    fn index(&self) -> u64 {
        Check::ALL.iter().position(|c| c == self).unwrap_or(0) as u64
    }

    /// Draws the inputs of trial `trial`.
    pub fn sample(&self, seed: u64, trial: u64) -> CaseInputs {
        let mut rng = trial_rng(seed, ((self.index() + 1) << 32) | trial);
        match self {
            Check::OneQubitDiagram => {
                let su2 = sample_su2(&mut rng);
                let state = match trial % 50 {
                    // P(ψ) = ∞
                    0 => {
                        let phase = crate::sampling::gaussian_complex(&mut rng);
                        OneQubitState::normalized(phase, Complex::new(0.0, 0.0))
                            .unwrap_or_else(|_| sample_one_qubit(&mut rng))
                    }
                    // P(Aψ) = ∞: ψ = A†|0⟩
                    25 => {
                        let [a, b] = su2.params();
                        OneQubitState::unnormalized(a.conj(), b.conj())
                            .unwrap_or_else(|_| sample_one_qubit(&mut rng))
                    }
                    _ => sample_one_qubit(&mut rng),
                };
                CaseInputs::OneQubit { su2, state }
            }
            Check::WoottersRelation => CaseInputs::State {
                state: sample_state(&mut rng),
            },
            Check::SecondQubitInertness => {
                let su2 = sample_su2(&mut rng);
                let transform = LocalUnitary::new(Variant::So2xSu2, 0.0, su2);
                CaseInputs::Local {
                    transform,
                    state: sample_state(&mut rng),
                }
            }
            Check::QuadrangleQPrime | Check::ConcurrenceModulusBprime => {
                let transform = sample_local_unitary(Variant::Su2xSo2, &mut rng);
                CaseInputs::Local {
                    transform,
                    state: sample_state(&mut rng),
                }
            }
            _ => {
                let transform = sample_local_unitary(Variant::So2xSu2, &mut rng);
                CaseInputs::Local {
                    transform,
                    state: sample_state(&mut rng),
                }
            }
        }
    }

    /// Deviation of this check on `inputs`.
    pub fn evaluate(&self, inputs: &CaseInputs) -> Result<f64> {
        match (self, inputs) {
            (Check::OneQubitDiagram, CaseInputs::OneQubit { su2, state }) => {
                check_one_qubit_diagram(su2, state)
            }
            (Check::WoottersRelation, CaseInputs::State { state }) => {
                let expected = concurrence_term(state).conj() * 2.0;
                Ok((wootters_preconcurrence(state) - expected).norm())
            }
            (Check::OneQubitDiagram | Check::WoottersRelation, _) => Err(Error::MismatchedInputs),
            (
                _,
                CaseInputs::Local {
                    transform: g,
                    state: psi,
                },
            ) => match self {
                Check::QuadrangleQ => check_quadrangle_q(g, psi),
                Check::ThreeWayFirst => Ok(ThreeWay::compute(g, psi)?.first_gap()),
                Check::ThreeWaySecond => Ok(ThreeWay::compute(g, psi)?.second_gap()),
                Check::ClosedForms => Ok(ThreeWay::compute(g, psi)?.closed_form_gap()),
                Check::SchmidtEvolution => {
                    let moved = apply_cb(g, psi);
                    let q1_sq = psi.alpha().norm_sqr() + psi.beta().norm_sqr();
                    let q2_sq = psi.gamma().norm_sqr() + psi.delta().norm_sqr();
                    let s = schmidt_term(psi);
                    let s_gap = (schmidt_term(&moved)
                        - evolved_schmidt_term(g.theta(), s, q1_sq, q2_sq))
                    .norm();
                    let moved_q2 = moved.gamma().norm_sqr() + moved.delta().norm_sqr();
                    let n_gap = (moved_q2 - evolved_q2_norm_sq(g.theta(), s, q1_sq, q2_sq)).abs();
                    Ok(s_gap.max(n_gap))
                }
                Check::ConcurrenceInvariance => {
                    Ok((concurrence_term(&apply_cb(g, psi)) - concurrence_term(psi)).norm())
                }
                Check::SecondQubitInertness => {
                    if g.theta() != 0.0 {
                        return Err(Error::MismatchedInputs);
                    }
                    check_second_qubit_inertness(&g.su2(), psi)
                }
                Check::QuadrangleQPrime => check_quadrangle_q_prime(g, psi),
                Check::ConcurrenceModulusBprime => {
                    let after = concurrence_term(&apply_cbprime(g, psi)?).norm();
                    Ok((after - concurrence_term(psi).norm()).abs())
                }
                Check::OneQubitDiagram | Check::WoottersRelation => Err(Error::MismatchedInputs),
            },
            _ => Err(Error::MismatchedInputs),
        }
    }
}

/// Outcome of one gated check.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct CheckResult {
    pub name: Check,
    pub trials: u64,
    pub max_deviation: f64,
    pub tolerance: f64,
    /// Trials whose evaluation returned an error.
    pub errors: u64,
    pub passed: bool,
    pub worst_case: Option<CaseInputs>,
}

/// Outcome of a witness search.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct WitnessSearch {
    pub candidate: Candidate,
    pub trials: u64,
    pub threshold: f64,
    pub found: bool,
    pub witness: Option<Witness>,
}

/// Non-gating measurement of a candidate intertwiner.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct Observation {
    pub candidate: Candidate,
    pub trials: u64,
    pub max_deviation: f64,
    pub worst_case: Option<Witness>,
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct DiagramReport {
    pub seed: u64,
    pub trials: u64,
    pub tolerance: f64,
    pub checks: Vec<CheckResult>,
    pub witnesses: Vec<WitnessSearch>,
    pub exploratory: Vec<Observation>,
    pub overall_pass: bool,
}

impl DiagramReport {
    pub fn check(&self, check: Check) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == check)
    }
}

/// Runs `check` over `trials` independent draws.
pub fn run_check(check: Check, trials: u64, seed: u64, tolerance: f64) -> CheckResult {
    let mut max_deviation: f64 = 0.0;
    let mut worst_case = None;
    let mut errors = 0;
    for trial in 0..trials {
        let inputs = check.sample(seed, trial);
        match check.evaluate(&inputs) {
            Ok(d) if d.is_finite() => {
                if worst_case.is_none() || d > max_deviation {
                    max_deviation = d;
                    worst_case = Some(inputs);
                }
            }
            _ => errors += 1,
        }
    }
    CheckResult {
        name: check,
        trials,
        max_deviation,
        tolerance,
        errors,
        passed: errors == 0 && max_deviation <= tolerance,
        worst_case,
    }
}

/// Every gated check at `min(contract, tol)`, both witness searches, and
/// the exploratory left-coefficient measurements on `𝓑′`.
pub fn run_suite(trials: u64, seed: u64, tol: f64) -> DiagramReport {
    let checks: Vec<CheckResult> = Check::ALL
        .iter()
        .map(|c| run_check(*c, trials, seed, c.contract().min(tol)))
        .collect();
    let witnesses: Vec<WitnessSearch> = [
        Candidate::LeftDenominatorOnB,
        Candidate::RightCoefficientsOnBprime,
    ]
    .into_iter()
    .map(|candidate| {
        let witness =
            find_variant_failure_witness(candidate, WITNESS_TRIALS, seed, SearchSpace::Generic);
        WitnessSearch {
            candidate,
            trials: WITNESS_TRIALS,
            threshold: WITNESS_THRESHOLD,
            found: witness.is_some(),
            witness,
        }
    })
    .collect();
    let exploratory = [
        Candidate::LeftCoefficientsOnBprime,
        Candidate::LeftCoefficientsSu2OnBprime,
    ]
    .into_iter()
    .map(|candidate| {
        let worst = worst_candidate_case(candidate, WITNESS_TRIALS, seed, SearchSpace::Generic);
        Observation {
            candidate,
            trials: WITNESS_TRIALS,
            max_deviation: worst.map_or(0.0, |w| w.deviation),
            worst_case: worst,
        }
    })
    .collect();
    let overall_pass = checks.iter().all(|c| c.passed) && witnesses.iter().all(|w| w.found);
    DiagramReport {
        seed,
        trials,
        tolerance: tol,
        checks,
        witnesses,
        exploratory,
        overall_pass,
    }
}

/// Draws a fresh `(B, ψ)` pair for callers that need one outside a suite run.
pub fn sample_case<R: Rng + ?Sized>(
    variant: Variant,
    rng: &mut R,
) -> (LocalUnitary, TwoQubitState) {
    (sample_local_unitary(variant, rng), sample_state(rng))
}

/// `p q⁻¹` with the quotient convention, exposed for closed-form checks.
pub fn quotient(p: Quaternion, q: Quaternion) -> Result<ExtendedQuaternion> {
    right_quotient(p, q)
}

/// `F_A(P ψ)` for an SU(2) element, on the Riemann sphere.
pub fn one_qubit_image(a: &Su2, psi: &OneQubitState) -> Result<ExtendedComplex> {
    MoebiusC::from_su2(a).apply(&conformal_one_qubit(psi)?)
}
