//! Line-delimited campaign reports with fixed field names, diff-able and
//! stable across runs (the wall-time line is the only nondeterministic
//! field).

use std::io::{self, Write};

use sek_core::extremal::EqualityCase;

/// Prints a float with 12 significant digits.
pub fn fmt_f64(x: f64) -> String {
    format!("{x:.11e}")
}

/// Integer-valued bounds print exactly; real bounds with 12 significant
/// digits.
pub fn fmt_value(x: f64, exact: bool) -> String {
    if exact {
        format!("{}", x as i64)
    } else {
        fmt_f64(x)
    }
}

pub const CASE_ORDER: [EqualityCase; 6] = [
    EqualityCase::CompleteBipartiteKSide,
    EqualityCase::CompleteBipartiteKm1Side,
    EqualityCase::NearCompleteBipartite,
    EqualityCase::KkNminusK,
    EqualityCase::BalancedBipartite,
    EqualityCase::K22PlusK1,
];

/// One verification campaign, aggregated.
pub struct CampaignReport {
    pub campaign: &'static str,
    pub params: String,
    /// Graphs dropped because a global hypothesis failed (only populated
    /// by campaigns that have one).
    pub premise_filtered: Option<usize>,
    pub checked: usize,
    pub violations: Vec<String>,
    pub equalities: Vec<String>,
    /// Count per recognized equality shape, in [`CASE_ORDER`] order.
    pub case_counts: [usize; 6],
    pub wall_time_ms: u128,
}

impl CampaignReport {
    pub fn new(campaign: &'static str, params: String) -> Self {
        CampaignReport {
            campaign,
            params,
            premise_filtered: None,
            checked: 0,
            violations: Vec::new(),
            equalities: Vec::new(),
            case_counts: [0; 6],
            wall_time_ms: 0,
        }
    }

    pub fn record_case(&mut self, case: EqualityCase) {
        if let Some(slot) = CASE_ORDER.iter().position(|&c| c == case) {
            self.case_counts[slot] += 1;
        }
    }

    /// Sorts the entry lists so the report is independent of scan order.
    pub fn finalize(&mut self) {
        self.violations.sort();
        self.equalities.sort();
    }

    pub fn write(&self, w: &mut dyn Write) -> io::Result<()> {
        writeln!(w, "campaign: {}", self.campaign)?;
        writeln!(w, "params: {}", self.params)?;
        if let Some(filtered) = self.premise_filtered {
            writeln!(w, "premise_filtered: {filtered}")?;
        }
        writeln!(w, "checked: {}", self.checked)?;
        writeln!(w, "violations: {}", self.violations.len())?;
        for (i, entry) in self.violations.iter().enumerate() {
            writeln!(w, "violations[{i}]: {entry}")?;
        }
        writeln!(w, "equality: {}", self.equalities.len())?;
        for (i, entry) in self.equalities.iter().enumerate() {
            writeln!(w, "equality[{i}]: {entry}")?;
        }
        write!(w, "cases:")?;
        for (case, count) in CASE_ORDER.iter().zip(self.case_counts) {
            write!(w, " {}={count}", case.as_str())?;
        }
        writeln!(w)?;
        writeln!(w, "wall_time_ms: {}", self.wall_time_ms)?;
        Ok(())
    }
}
