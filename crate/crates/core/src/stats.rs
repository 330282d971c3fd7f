//! Rule identifiers and fire counters shared by the reduction stages.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

/// Every graph-modifying step of the kernel.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Rule {
    /// Deletion of a vertex contained in every small solution (budget drops by one).
    ForcedVertex,
    ReduceDegree,
    RemovePendant,
    IrrelevantEdge,
    ReplaceComponent,
    ContractBump,
    Fan,
    Ladder,
}

impl Rule {
    pub const ALL: [Rule; 8] = [
        Rule::ForcedVertex,
        Rule::ReduceDegree,
        Rule::RemovePendant,
        Rule::IrrelevantEdge,
        Rule::ReplaceComponent,
        Rule::ContractBump,
        Rule::Fan,
        Rule::Ladder,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Rule::ForcedVertex => "forced-vertex",
            Rule::ReduceDegree => "rule1-reduce-degree",
            Rule::RemovePendant => "rule2-remove-pendant",
            Rule::IrrelevantEdge => "rule3-irrelevant-edge",
            Rule::ReplaceComponent => "rule4-replace-component",
            Rule::ContractBump => "rule5-contract-bump",
            Rule::Fan => "rule6-fan",
            Rule::Ladder => "rule7-ladder",
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Number of applications per rule.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RuleCounts(pub BTreeMap<Rule, usize>);

impl RuleCounts {
    pub fn add(&mut self, rule: Rule, n: usize) {
        if n > 0 {
            *self.0.entry(rule).or_default() += n;
        }
    }

    pub fn get(&self, rule: Rule) -> usize {
        self.0.get(&rule).copied().unwrap_or(0)
    }

    pub fn merge(&mut self, other: &RuleCounts) {
        for (&r, &n) in &other.0 {
            self.add(r, n);
        }
    }

    pub fn total(&self) -> usize {
        self.0.values().sum()
    }
}
