//! Relation reports and the JSON suite report.

use super::relations::RelationId;
use crate::operators::Mutation;
use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// The first failing test vector and both sides evaluated on it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub component: String,
    pub degree: u32,
    pub index: usize,
    pub element: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationReport {
    pub id: RelationId,
    pub status: Status,
    pub witness: Option<Witness>,
}

impl RelationReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

impl Serialize for RelationReport {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(None)?;
        m.serialize_entry("relation", &self.id.relation)?;
        m.serialize_entry("params", &self.id.params)?;
        m.serialize_entry("status", &self.status)?;
        if let Some(w) = &self.witness {
            m.serialize_entry("witness", w)?;
        }
        m.end()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SuiteParams {
    pub n: usize,
    pub d: u32,
    pub rmax: usize,
    pub deg: u32,
    pub mutation: Mutation,
}

impl Serialize for SuiteParams {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(None)?;
        m.serialize_entry("n", &self.n)?;
        m.serialize_entry("d", &self.d)?;
        m.serialize_entry("rmax", &self.rmax)?;
        m.serialize_entry("deg", &self.deg)?;
        if self.mutation != Mutation::None {
            m.serialize_entry("mutation", self.mutation.name())?;
        }
        m.end()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: SuiteParams,
    pub results: Vec<RelationReport>,
    pub summary: Summary,
}

impl SuiteReport {
    /// Sorts results by relation key and tallies them.
    pub fn new(suite: SuiteParams, mut results: Vec<RelationReport>) -> Self {
        results.sort_by(|a, b| a.id.cmp(&b.id));
        let pass = results.iter().filter(|r| r.passed()).count();
        let fail = results.len() - pass;
        SuiteReport { suite, results, summary: Summary { pass, fail } }
    }

    pub fn all_passed(&self) -> bool {
        self.summary.fail == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &RelationReport> {
        self.results.iter().filter(|r| !r.passed())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}
