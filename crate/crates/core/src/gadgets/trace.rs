use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::system::{Assignment, Equation, Var};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Rule {
    CancelComplementary,
    SplitDegree4,
    SplitDegree5Plus,
    ExpandArity,
    RemoveSatisfiable,
    TripletGadget,
    RemoveTriplicate,
    DuplicatePair,
    Compact,
}

/// One applied rule. `consumed` holds the equations the rule removed or
/// rewrote, in their form before the rule; `produced` holds what replaced
/// them.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RuleRecord {
    pub rule: Rule,
    pub n_before: usize,
    pub n_after: usize,
    pub consumed: Vec<Equation>,
    pub produced: Vec<Equation>,
    /// The split variable, or the variable that can always be set to satisfy
    /// a removed equation.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub var: Option<Var>,
    /// For `Compact`: old index of each new variable.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub relabel: Option<Vec<Var>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionTrace {
    pub original_n: usize,
    pub reduced_n: usize,
    pub steps: Vec<RuleRecord>,
}

impl ReductionTrace {
    pub fn new(n: usize) -> Self {
        Self {
            original_n: n,
            reduced_n: n,
            steps: Vec::new(),
        }
    }

    pub(crate) fn push(&mut self, record: RuleRecord) {
        debug_assert_eq!(record.n_before, self.reduced_n);
        self.reduced_n = record.n_after;
        self.steps.push(record);
    }

    /// Concatenates a trace that starts where this one ends.
    pub fn append(&mut self, other: ReductionTrace) -> Result<()> {
        if other.original_n != self.reduced_n {
            return Err(Error::Dimension {
                expected: self.reduced_n,
                found: other.original_n,
            });
        }
        self.reduced_n = other.reduced_n;
        self.steps.extend(other.steps);
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Maps an assignment of the reduced system to one of the original
    /// system that falsifies no more weight. An optimal assignment maps to
    /// an optimal one.
    pub fn replay(&self, a: &Assignment) -> Result<Assignment> {
        if a.len() != self.reduced_n {
            return Err(Error::Dimension {
                expected: self.reduced_n,
                found: a.len(),
            });
        }
        let mut values = a.values().to_vec();
        for step in self.steps.iter().rev() {
            if values.len() != step.n_after {
                return Err(Error::Contract(format!(
                    "{:?} step expects {} variables, replay has {}",
                    step.rule,
                    step.n_after,
                    values.len()
                )));
            }
            match step.rule {
                Rule::SplitDegree4 | Rule::SplitDegree5Plus => {
                    let x = step.var.ok_or_else(|| missing(step, "var"))?;
                    let cost = |v: bool| {
                        let mut vals = values.clone();
                        vals[x] = v;
                        step.consumed
                            .iter()
                            .filter(|eq| !eq.is_satisfied_by(&vals))
                            .map(Equation::weight)
                            .sum::<u64>()
                    };
                    let (c0, c1) = (cost(false), cost(true));
                    let value = if c0 == c1 { values[x] } else { c1 < c0 };
                    values.truncate(step.n_before);
                    values[x] = value;
                }
                Rule::RemoveSatisfiable | Rule::RemoveTriplicate => {
                    let w = step.var.ok_or_else(|| missing(step, "var"))?;
                    let eq = step.consumed.first().ok_or_else(|| missing(step, "consumed"))?;
                    if !eq.is_satisfied_by(&values) {
                        values[w] ^= true;
                    }
                }
                Rule::Compact => {
                    let kept = step.relabel.as_ref().ok_or_else(|| missing(step, "relabel"))?;
                    let mut old = vec![false; step.n_before];
                    for (new, &v) in kept.iter().enumerate() {
                        old[v] = values[new];
                    }
                    values = old;
                }
                Rule::CancelComplementary
                | Rule::ExpandArity
                | Rule::TripletGadget
                | Rule::DuplicatePair => values.truncate(step.n_before),
            }
        }
        Ok(Assignment::new(values))
    }
}

fn missing(step: &RuleRecord, field: &str) -> Error {
    Error::Contract(format!("{:?} record without {field}", step.rule))
}
