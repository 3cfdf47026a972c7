//! Serializable census reports. One JSON object per line with a stable key
//! order, so stored census output diffs cleanly.

use crate::enumerate::ClassGReport;
use crate::graph6::{emit_graph6, parse_graph6, Graph6Error};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusDocument {
    pub order: usize,
    pub candidates_scanned: u64,
    pub members_total: usize,
    pub self_complementary: usize,
    /// graph6 strings of the representatives, in canonical-form order.
    pub representatives: Vec<String>,
    pub wall_time_ms: u64,
}

impl CensusDocument {
    pub fn from_report(report: &ClassGReport) -> CensusDocument {
        CensusDocument {
            order: report.order,
            candidates_scanned: report.candidates_scanned,
            members_total: report.members_total,
            self_complementary: report.self_complementary,
            representatives: report.representatives.iter().map(emit_graph6).collect(),
            wall_time_ms: report.wall_time.as_millis() as u64,
        }
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    pub fn parse_representatives(&self) -> Result<Vec<crate::graph::SmallGraph>, Graph6Error> {
        self.representatives.iter().map(|s| parse_graph6(s)).collect()
    }
}
