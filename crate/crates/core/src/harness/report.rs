use serde::Serialize;

use crate::bounds::{CheckReport, Rational};
use crate::cells::{ColorLedger, Factors};
use crate::domination::GammaTable;

pub const REPORT_SCHEMA: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum InstanceStatus {
    Checked,
    /// The solver budget ran out on some domination number; nothing was checked.
    SkippedUnproven,
}

/// Where the product's domination number came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum GammaSource {
    Solver,
    /// A published value taken as given because re-proving was not requested.
    Published,
}

#[derive(Debug, Clone, Serialize)]
pub struct InstanceReport {
    pub index: usize,
    pub label: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub edge_probability: Option<f64>,
    pub factors: Factors,
    pub status: InstanceStatus,
    pub gammas: GammaTable,
    pub product_gamma_source: GammaSource,
    /// Running lower bound on the product domination number when unproven.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub product_lower_bound: Option<usize>,
    pub solver_nodes: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ledger: Option<ColorLedger>,
    pub checks: Vec<CheckReport>,
    /// `gamma(product) / (c_n gamma(P_n) gamma(X) gamma(Y))`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub slack: Option<Rational>,
    pub passed: bool,
}

impl InstanceReport {
    pub fn failed_checks(&self) -> impl Iterator<Item = &CheckReport> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FailureRef {
    pub instance: usize,
    pub check: String,
    pub finding_of_interest: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Summary {
    pub instances: usize,
    pub checked: usize,
    pub skipped_unproven: usize,
    pub checks_run: usize,
    pub checks_not_applicable: usize,
    pub check_failures: usize,
    pub findings_of_interest: usize,
    pub failures: Vec<FailureRef>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub min_slack: Option<Rational>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub min_slack_instance: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mean_slack: Option<f64>,
}

impl Summary {
    pub fn of(instances: &[InstanceReport]) -> Self {
        let mut s = Summary {
            instances: instances.len(),
            checked: 0,
            skipped_unproven: 0,
            checks_run: 0,
            checks_not_applicable: 0,
            check_failures: 0,
            findings_of_interest: 0,
            failures: Vec::new(),
            min_slack: None,
            min_slack_instance: None,
            mean_slack: None,
        };
        let mut slack_sum = 0.0;
        let mut slack_count = 0usize;
        for inst in instances {
            match inst.status {
                InstanceStatus::Checked => s.checked += 1,
                InstanceStatus::SkippedUnproven => s.skipped_unproven += 1,
            }
            for c in &inst.checks {
                if !c.applicable {
                    s.checks_not_applicable += 1;
                    continue;
                }
                s.checks_run += 1;
                if !c.passed {
                    s.check_failures += 1;
                    s.findings_of_interest += c.finding_of_interest as usize;
                    s.failures.push(FailureRef {
                        instance: inst.index,
                        check: c.name.clone(),
                        finding_of_interest: c.finding_of_interest,
                    });
                }
            }
            if let Some(slack) = &inst.slack {
                slack_sum += slack.to_f64();
                slack_count += 1;
                if s.min_slack.as_ref().is_none_or(|m| slack < m) {
                    s.min_slack = Some(slack.clone());
                    s.min_slack_instance = Some(inst.index);
                }
            }
        }
        if slack_count > 0 {
            s.mean_slack = Some(slack_sum / slack_count as f64);
        }
        s
    }

    pub fn passed(&self) -> bool {
        self.check_failures == 0
    }
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RunKind {
    Example,
    Fuzz,
}

/// JSON-serializable outcome of an example reproduction or a fuzz campaign.
#[derive(Debug, Clone, Serialize)]
pub struct RunReport<C: Serialize> {
    pub schema: u32,
    pub kind: RunKind,
    pub config: C,
    pub summary: Summary,
    pub instances: Vec<InstanceReport>,
}

impl<C: Serialize> RunReport<C> {
    pub fn new(kind: RunKind, config: C, mut instances: Vec<InstanceReport>) -> Self {
        instances.sort_by_key(|i| i.index);
        Self {
            schema: REPORT_SCHEMA,
            kind,
            config,
            summary: Summary::of(&instances),
            instances,
        }
    }

    pub fn passed(&self) -> bool {
        self.summary.passed()
    }

    pub fn to_json(&self) -> crate::Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }
}
