//! Identity reports and the shared evaluation engine.
//!
//! Every checker in the kernel is expressed as a list of labeled identities.
//! An identity has a tuple of basis-index slots (each with its own range)
//! and an evaluator producing a defect vector that must vanish. The engine
//! walks all tuples, records the first violating tuple as a witness, and
//! supports standalone re-evaluation so a reported witness can always be
//! reproduced exactly.

use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    /// Basis indices at which the identity was evaluated.
    pub inputs: Vec<usize>,
    /// The nonzero defect vector at that tuple.
    pub defect: Vec<Scalar>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    pub identity_id: String,
    pub holds: bool,
    pub witness: Option<Witness>,
}

impl IdentityReport {
    pub fn pass(id: impl Into<String>) -> Self {
        IdentityReport {
            identity_id: id.into(),
            holds: true,
            witness: None,
        }
    }

    pub fn fail(id: impl Into<String>, inputs: Vec<usize>, defect: Vec<Scalar>) -> Self {
        IdentityReport {
            identity_id: id.into(),
            holds: false,
            witness: Some(Witness { inputs, defect }),
        }
    }
}

pub fn all_hold(reports: &[IdentityReport]) -> bool {
    reports.iter().all(|r| r.holds)
}

/// Evaluator of one identity: basis tuple in, defect vector out.
pub type CheckFn<'a> = Box<dyn Fn(&[usize]) -> Vec<Scalar> + 'a>;

/// One labeled identity with its slot ranges and evaluator.
pub struct Check<'a> {
    pub id: String,
    /// Range of each input slot; the engine iterates the full product.
    pub slot_dims: Vec<usize>,
    pub eval: CheckFn<'a>,
}

impl<'a> Check<'a> {
    pub fn new(
        id: impl Into<String>,
        slot_dims: Vec<usize>,
        eval: impl Fn(&[usize]) -> Vec<Scalar> + 'a,
    ) -> Self {
        Check {
            id: id.into(),
            slot_dims,
            eval: Box::new(eval),
        }
    }

    /// Re-evaluates the identity at a given tuple.
    pub fn eval_at(&self, inputs: &[usize]) -> Vec<Scalar> {
        (self.eval)(inputs)
    }

    /// Scans all tuples; the first nonzero defect becomes the witness.
    pub fn run(&self) -> IdentityReport {
        let total: usize = self.slot_dims.iter().product::<usize>().max(1);
        let mut idx = vec![0usize; self.slot_dims.len()];
        for flat in 0..total {
            let mut rem = flat;
            for k in (0..self.slot_dims.len()).rev() {
                idx[k] = rem % self.slot_dims[k];
                rem /= self.slot_dims[k];
            }
            let defect = (self.eval)(&idx);
            if defect.iter().any(|d| !d.is_zero()) {
                return IdentityReport::fail(self.id.clone(), idx, defect);
            }
        }
        IdentityReport::pass(self.id.clone())
    }
}

/// A named batch of checks sharing input data.
pub struct Suite<'a> {
    pub checks: Vec<Check<'a>>,
}

impl<'a> Suite<'a> {
    pub fn new(checks: Vec<Check<'a>>) -> Self {
        Suite { checks }
    }

    pub fn run(&self) -> Vec<IdentityReport> {
        self.checks.iter().map(|c| c.run()).collect()
    }

    pub fn check(&self, id: &str) -> Option<&Check<'a>> {
        self.checks.iter().find(|c| c.id == id)
    }

    /// Re-evaluates a reported witness; used by witness-integrity tests.
    pub fn reevaluate(&self, report: &IdentityReport) -> Option<Vec<Scalar>> {
        let witness = report.witness.as_ref()?;
        let check = self.check(&report.identity_id)?;
        Some(check.eval_at(&witness.inputs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn engine_reports_first_violation_with_reproducible_witness() {
        let check = Check::new("toy", vec![3, 3], |idx| {
            if idx == [1, 2] {
                vec![Scalar::from_int(7)]
            } else {
                vec![Scalar::zero()]
            }
        });
        let report = check.run();
        assert!(!report.holds);
        let w = report.witness.as_ref().unwrap();
        assert_eq!(w.inputs, vec![1, 2]);
        assert_eq!(w.defect, vec![Scalar::from_int(7)]);
        assert_eq!(check.eval_at(&w.inputs), w.defect);
    }

    #[test]
    fn engine_passes_clean_identity() {
        let check = Check::new("zero", vec![2, 2, 2], |_| vec![Scalar::zero()]);
        let report = check.run();
        assert!(report.holds);
        assert!(report.witness.is_none());
    }
}
