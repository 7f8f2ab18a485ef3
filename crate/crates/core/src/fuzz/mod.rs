//! Seeded property fuzzing over every algebraic law of the crate.
//!
//! A campaign runs each named property for `trials` trials. Each (property,
//! trial) pair draws its inputs from [`TrialRng::for_trial`]`(seed, trial)`,
//! so a counterexample can be reproduced from its trial index alone and the
//! report does not depend on evaluation order.
//!
//! Properties route multiplication, reversion and the 4×4 embedding through
//! an [`Ops`] table so that deliberately broken implementations
//! ([`Mutant`]) can be checked for detection.

mod properties;
mod sampler;

use serde::Serialize;

use crate::algebra::{CVector3, Paravector};
use crate::matrix::{to_matrix4, Matrix4};
use crate::tolerance::Tolerance;

pub use sampler::{corner_corpus, TrialRng, CORNER_PROBABILITY};

/// Operations under test.
#[derive(Clone, Copy)]
pub struct Ops {
    pub mul: fn(&Paravector, &Paravector) -> Paravector,
    pub rev: fn(&Paravector) -> Paravector,
    pub to_matrix4: fn(&Paravector) -> Matrix4,
}

impl Ops {
    pub fn reference() -> Self {
        Ops {
            mul: Paravector::mul,
            rev: Paravector::rev,
            to_matrix4,
        }
    }

    pub fn mutated(mutant: Mutant) -> Self {
        let mut ops = Ops::reference();
        match mutant {
            Mutant::DropCrossTerm => ops.mul = mul_without_cross_term,
            Mutant::RevSignError => ops.rev = rev_negating_real_part,
            Mutant::TransposedMatrix => ops.to_matrix4 = transposed_matrix4,
        }
        ops
    }
}

/// Known-bad variants of the core operations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Mutant {
    /// Multiplication without the `iβ₁×β₂` term.
    DropCrossTerm,
    /// Reversion that negates `b` but leaves `c` of `β = b + ic` alone.
    RevSignError,
    /// The 4×4 embedding transposed.
    TransposedMatrix,
}

impl Mutant {
    pub const ALL: [Mutant; 3] = [Mutant::DropCrossTerm, Mutant::RevSignError, Mutant::TransposedMatrix];
}

fn mul_without_cross_term(a: &Paravector, b: &Paravector) -> Paravector {
    let (a0, av, b0, bv) = (a.scalar(), a.vector(), b.scalar(), b.vector());
    Paravector::raw(a0 * b0 + av.dot(&bv), bv * a0 + av * b0)
}

fn rev_negating_real_part(a: &Paravector) -> Paravector {
    let v = a.vector();
    let b = v.re();
    Paravector::raw(a.scalar(), CVector3::from_parts([-b[0], -b[1], -b[2]], v.im()))
}

fn transposed_matrix4(a: &Paravector) -> Matrix4 {
    to_matrix4(a).transpose()
}

/// Outcome of one property on one trial.
#[derive(Debug, Clone, PartialEq)]
pub enum Check {
    Pass,
    /// Inputs fell outside the property's domain (e.g. singular operand).
    Skip,
    Fail(Vec<Paravector>),
}

pub struct Context {
    pub ops: Ops,
    pub tol: Tolerance,
}

/// A named law checked on random inputs.
pub struct Property {
    pub name: &'static str,
    check: fn(&mut TrialRng, &Context) -> Check,
}

impl Property {
    pub fn check(&self, seed: u64, trial: u64, cx: &Context) -> Check {
        (self.check)(&mut TrialRng::for_trial(seed, trial), cx)
    }
}

pub fn properties() -> &'static [Property] {
    properties::ALL
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Counterexample {
    pub trial: u64,
    pub inputs: Vec<[f64; 8]>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PropertyReport {
    pub name: String,
    pub passed: u64,
    pub failed: u64,
    pub skipped: u64,
    /// First failing trial.
    pub counterexample: Option<Counterexample>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FuzzReport {
    pub seed: u64,
    pub trials: u64,
    pub tol: Tolerance,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mutant: Option<Mutant>,
    pub properties: Vec<PropertyReport>,
}

impl FuzzReport {
    pub fn failures(&self) -> u64 {
        self.properties.iter().map(|p| p.failed).sum()
    }

    pub fn passed(&self) -> bool {
        self.failures() == 0
    }
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum FuzzError {
    #[error("trials must be at least 1")]
    NoTrials,
}

pub fn run(seed: u64, trials: u64, tol: Tolerance) -> Result<FuzzReport, FuzzError> {
    run_with_mutant(seed, trials, tol, None)
}

pub fn run_with_mutant(seed: u64, trials: u64, tol: Tolerance, mutant: Option<Mutant>) -> Result<FuzzReport, FuzzError> {
    if trials == 0 {
        return Err(FuzzError::NoTrials);
    }
    let cx = Context {
        ops: mutant.map_or_else(Ops::reference, Ops::mutated),
        tol,
    };
    let properties = properties()
        .iter()
        .map(|p| run_property(p, seed, trials, &cx))
        .collect();
    Ok(FuzzReport { seed, trials, tol, mutant, properties })
}

fn run_property(p: &Property, seed: u64, trials: u64, cx: &Context) -> PropertyReport {
    let mut report = PropertyReport {
        name: p.name.to_string(),
        passed: 0,
        failed: 0,
        skipped: 0,
        counterexample: None,
    };
    for trial in 0..trials {
        match p.check(seed, trial, cx) {
            Check::Pass => report.passed += 1,
            Check::Skip => report.skipped += 1,
            Check::Fail(inputs) => {
                report.failed += 1;
                report.counterexample.get_or_insert_with(|| Counterexample {
                    trial,
                    inputs: inputs.iter().map(Paravector::to_components).collect(),
                });
            }
        }
    }
    report
}
