//! JSON documents emitted by the CLI. Every document carries
//! `"schema": "twinreduce/1"`.

use serde::{Deserialize, Serialize};
use twinreduce_core::{Cotree, MergeStep, NormalSeriesReport, Partition, Reduction, ReductionTrace, Theorem3Check};

use crate::groups::{GraphKind, GraphSummary};
use crate::{write_graph6, FormatError};

pub const SCHEMA: &str = "twinreduce/1";

fn schema() -> String {
    SCHEMA.to_string()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepRecord {
    pub step: usize,
    /// Minima of the two merged parts, ascending.
    pub merge: [usize; 2],
    /// `"open"` or `"closed"`.
    pub kind: String,
}

/// Output of `reduce`; also accepted by `check-trace`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReduceDocument {
    pub schema: String,
    pub n: usize,
    pub policy: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub seed: Option<u64>,
    pub reduced_graph6: String,
    pub reduced_order: usize,
    pub steps: Vec<StepRecord>,
    pub partition: Vec<Vec<usize>>,
}

impl ReduceDocument {
    pub fn new(reduction: &Reduction, policy: &str, seed: Option<u64>) -> Self {
        ReduceDocument {
            schema: schema(),
            n: reduction.trace.n,
            policy: policy.to_string(),
            seed,
            reduced_graph6: write_graph6(&reduction.graph),
            reduced_order: reduction.graph.n(),
            steps: reduction
                .trace
                .steps
                .iter()
                .map(|s| StepRecord {
                    step: s.index,
                    merge: [s.part_a, s.part_b],
                    kind: s.kind.to_string(),
                })
                .collect(),
            partition: reduction.partition.parts().to_vec(),
        }
    }

    pub fn trace(&self) -> Result<ReductionTrace, FormatError> {
        if self.schema != SCHEMA {
            return Err(FormatError::Invalid(format!("unsupported schema {:?}", self.schema)));
        }
        let steps = self
            .steps
            .iter()
            .map(|r| {
                let kind = crate::text::parse_kind(&r.kind)
                    .ok_or_else(|| FormatError::Invalid(format!("step {}: bad kind {:?}", r.step, r.kind)))?;
                Ok(MergeStep {
                    index: r.step,
                    part_a: r.merge[0],
                    part_b: r.merge[1],
                    kind,
                })
            })
            .collect::<Result<Vec<_>, FormatError>>()?;
        let partition = if self.n == 0 {
            Partition::from_labels::<usize>(&[])
        } else {
            Partition::from_parts(self.n, self.partition.clone())?
        };
        Ok(ReductionTrace {
            n: self.n,
            steps,
            partition,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CographDocument {
    pub schema: String,
    pub cograph: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub cotree: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub p4: Option<[usize; 4]>,
}

impl CographDocument {
    pub fn new(result: &Result<Cotree, [usize; 4]>) -> Self {
        CographDocument {
            schema: schema(),
            cograph: result.is_ok(),
            cotree: result.as_ref().ok().map(ToString::to_string),
            p4: result.as_ref().err().copied(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StageRecord {
    pub kind: String,
    pub class_sizes: Vec<usize>,
    pub merges: usize,
    /// Decimal; factorial products overflow fixed-width integers.
    pub factor_order: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyRecord {
    pub aut_order: u64,
    pub kernel_order: u64,
    pub reduced_aut_order: u64,
    pub kernel_is_normal: bool,
    pub quotient_divides: bool,
    pub first_stage_expected: u64,
    pub first_stage_actual: u64,
    pub passed: bool,
}

impl From<&Theorem3Check> for VerifyRecord {
    fn from(c: &Theorem3Check) -> Self {
        VerifyRecord {
            aut_order: c.aut_order,
            kernel_order: c.kernel_order,
            reduced_aut_order: c.reduced_aut_order,
            kernel_is_normal: c.kernel_is_normal(),
            quotient_divides: c.quotient_divides,
            first_stage_expected: c.first_stage_expected,
            first_stage_actual: c.first_stage_actual,
            passed: c.passed(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesDocument {
    pub schema: String,
    pub stages: Vec<StageRecord>,
    pub n_order: String,
    pub reduced_graph6: String,
    pub partition: Vec<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub verify: Option<VerifyRecord>,
}

impl SeriesDocument {
    pub fn new(report: &NormalSeriesReport, verify: Option<&Theorem3Check>) -> Self {
        SeriesDocument {
            schema: schema(),
            stages: report
                .stages
                .iter()
                .map(|s| StageRecord {
                    kind: s.kind.to_string(),
                    class_sizes: s.class_sizes.clone(),
                    merges: s.merges,
                    factor_order: s.factor_order.to_string(),
                })
                .collect(),
            n_order: report.n_order.to_string(),
            reduced_graph6: write_graph6(&report.reduced),
            partition: report.partition.parts().to_vec(),
            verify: verify.map(VerifyRecord::from),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct GroupGraphDocument {
    pub schema: String,
    pub group_order: usize,
    pub kind: GraphKind,
    pub vertices: usize,
    pub edges: usize,
    pub dropped_isolated: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub graph6: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reduced: Option<GraphSummary>,
}

impl GroupGraphDocument {
    pub fn schema() -> String {
        schema()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use twinreduce_core::{complete_twin_reduction, Graph, MergePolicy, TwinKind};

    #[test]
    fn reduce_document_round_trips_the_trace() {
        let star = Graph::from_edges(5, (1..5).map(|v| (0, v))).unwrap();
        let reduction = complete_twin_reduction(&star, MergePolicy::Deterministic);
        let doc = ReduceDocument::new(&reduction, "det", None);
        let json = serde_json::to_string(&doc).unwrap();
        assert!(json.starts_with(r#"{"schema":"twinreduce/1""#));
        let back: ReduceDocument = serde_json::from_str(&json).unwrap();
        assert_eq!(back.trace().unwrap(), reduction.trace);
        assert_eq!(back.steps[3].kind, TwinKind::Closed.to_string());
    }

    #[test]
    fn rejects_unknown_schema() {
        let reduction = complete_twin_reduction(&Graph::path(3), MergePolicy::Deterministic);
        let mut doc = ReduceDocument::new(&reduction, "det", None);
        doc.schema = "twinreduce/0".into();
        assert!(doc.trace().is_err());
    }
}
