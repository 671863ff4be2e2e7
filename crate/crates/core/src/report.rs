//! Axiom-check reports.

use rayon::prelude::*;

use crate::scalar::Scalar;

/// One violated instance of a law, with both sides evaluated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure<F> {
    pub law: String,
    pub indices: Vec<usize>,
    pub lhs: Vec<F>,
    pub rhs: Vec<F>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report<F> {
    failures: Vec<Failure<F>>,
}

impl<F> Default for Report<F> {
    fn default() -> Self {
        Report { failures: Vec::new() }
    }
}

impl<F: Scalar> Report<F> {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a report with failures in a deterministic order.
    pub fn from_failures(mut failures: Vec<Failure<F>>) -> Self {
        failures.sort_by(|a, b| (&a.law, &a.indices).cmp(&(&b.law, &b.indices)));
        Report { failures }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn failures(&self) -> &[Failure<F>] {
        &self.failures
    }

    pub fn push(&mut self, f: Failure<F>) {
        self.failures.push(f);
    }

    pub fn merge(mut self, other: Report<F>) -> Self {
        self.failures.extend(other.failures);
        Report::from_failures(self.failures)
    }

    /// True when some failure is recorded under `law`.
    pub fn fails(&self, law: &str) -> bool {
        self.failures.iter().any(|f| f.law == law)
    }

    pub fn first(&self, law: &str) -> Option<&Failure<F>> {
        self.failures.iter().find(|f| f.law == law)
    }

    /// Short human summary of the first failure, if any.
    pub fn summary(&self) -> String {
        match self.failures.first() {
            None => "passed".into(),
            Some(f) => format!("{} failure(s); first: {} at {:?}", self.failures.len(), f.law, f.indices),
        }
    }
}

pub(crate) fn record<F: Scalar>(out: &mut Vec<Failure<F>>, law: &str, indices: &[usize], lhs: Vec<F>, rhs: Vec<F>) {
    if lhs != rhs {
        out.push(Failure {
            law: law.to_string(),
            indices: indices.to_vec(),
            lhs,
            rhs,
        });
    }
}

/// Runs `f` for each `i < n` on the rayon pool and gathers the failures.
pub(crate) fn sweep<F, G>(n: usize, f: G) -> Vec<Failure<F>>
where
    F: Scalar,
    G: Fn(usize, &mut Vec<Failure<F>>) + Sync + Send,
{
    (0..n)
        .into_par_iter()
        .flat_map_iter(|i| {
            let mut v = Vec::new();
            f(i, &mut v);
            v
        })
        .collect()
}
