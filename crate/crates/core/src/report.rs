//! JSON, CSV and line-oriented text renderings of every report type.
//!
//! JSON is pretty-printed with struct field order, so parsing a report and
//! serializing it again reproduces the same bytes.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::bounds::{BoundReport, CatalogueDoc, InverseVerdict};
use crate::error::{Error, Result};
use crate::intset::IntegerSet;
use crate::search::SearchReport;
use crate::sumset::{SumsetResult, SumsetVariant};
use crate::witness::WitnessReport;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    Json,
    Csv,
    #[default]
    Text,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "text" => Ok(Format::Text),
            _ => Err(Error::Parse(format!("unknown format `{s}` (json | csv | text)"))),
        }
    }
}

pub trait Report: Serialize {
    fn text(&self) -> String;
    fn csv_header(&self) -> Vec<&'static str>;
    fn csv_rows(&self) -> Vec<Vec<String>>;
}

pub fn render<R: Report>(report: &R, format: Format) -> Result<String> {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(report).map_err(|e| Error::Parse(e.to_string()))?;
            s.push('\n');
            Ok(s)
        }
        Format::Text => Ok(report.text()),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            let werr = |e: csv::Error| Error::Parse(e.to_string());
            w.write_record(report.csv_header()).map_err(werr)?;
            for row in report.csv_rows() {
                w.write_record(row).map_err(werr)?;
            }
            let bytes = w.into_inner().map_err(|e| Error::Parse(e.to_string()))?;
            Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
        }
    }
}

fn join(values: &[i64]) -> String {
    values.iter().map(i64::to_string).collect::<Vec<_>>().join(",")
}

/// Output of `compute`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComputeReport {
    #[serde(flatten)]
    pub result: SumsetResult,
    #[serde(skip)]
    pub variant: Option<SumsetVariant>,
    #[serde(skip)]
    pub h: u32,
    #[serde(skip)]
    pub show_values: bool,
}

impl Report for ComputeReport {
    fn text(&self) -> String {
        let mut s = format!("cardinality={}\n", self.result.cardinality);
        if self.show_values {
            let _ = writeln!(s, "values={}", join(&self.result.values));
        }
        s
    }

    fn csv_header(&self) -> Vec<&'static str> {
        vec!["variant", "h", "cardinality"]
    }

    fn csv_rows(&self) -> Vec<Vec<String>> {
        let variant = self.variant.map(|v| v.to_string()).unwrap_or_default();
        vec![vec![variant, self.h.to_string(), self.result.cardinality.to_string()]]
    }
}

/// Output of `verify`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub set: IntegerSet,
    pub h: u32,
    pub variant: SumsetVariant,
    pub cardinality: usize,
    pub bounds: Vec<BoundReport>,
    pub inverse: Option<InverseVerdict>,
    pub falsified: bool,
}

impl Report for VerifyReport {
    fn text(&self) -> String {
        let mut s = format!(
            "set={} h={} variant={} cardinality={}\n",
            join(self.set.elements()),
            self.h,
            self.variant,
            self.cardinality
        );
        for b in &self.bounds {
            let _ = writeln!(
                s,
                "bound {} = {} observed={} slack={} met={}",
                b.id, b.bound, b.observed, b.slack, b.met
            );
        }
        if let Some(v) = &self.inverse {
            let _ = writeln!(
                s,
                "inverse {:?} bound={} ({}) predicted={} classification={}",
                v.verdict, v.bound, v.bound_id, v.predicted, v.classification
            );
        }
        let _ = writeln!(s, "falsified={}", self.falsified);
        s
    }

    fn csv_header(&self) -> Vec<&'static str> {
        vec!["id", "k", "h", "bound", "observed", "slack", "met"]
    }

    fn csv_rows(&self) -> Vec<Vec<String>> {
        self.bounds
            .iter()
            .map(|b| {
                vec![
                    b.id.clone(),
                    b.k.to_string(),
                    b.h.to_string(),
                    b.bound.to_string(),
                    b.observed.to_string(),
                    b.slack.to_string(),
                    b.met.to_string(),
                ]
            })
            .collect()
    }
}

impl Report for SearchReport {
    fn text(&self) -> String {
        let mut s = format!(
            "k={} h={} N={} regime={} status={}\n",
            self.k,
            self.h,
            self.max,
            self.regime,
            self.status.as_str()
        );
        let _ = writeln!(s, "min={} bound={} slack={}", self.min, self.bound, self.slack);
        let _ = writeln!(s, "examined={} minimizer_count={}", self.examined, self.minimizer_count);
        for (class, n) in &self.classes {
            let _ = writeln!(s, "class {class}={n}");
        }
        for m in &self.minimizers {
            let _ = writeln!(s, "minimizer {}", join(m));
        }
        let _ = writeln!(s, "falsified={}", self.falsified);
        s
    }

    fn csv_header(&self) -> Vec<&'static str> {
        SearchReport::CSV_HEADER.to_vec()
    }

    fn csv_rows(&self) -> Vec<Vec<String>> {
        vec![self.csv_record().to_vec()]
    }
}

impl Report for WitnessReport {
    fn text(&self) -> String {
        let mut s = format!("lemma={}\n", self.lemma);
        for p in &self.parts {
            match &p.branch {
                Some(b) => {
                    let _ = writeln!(s, "part {} size={} branch={b}", p.name, p.size);
                }
                None => {
                    let _ = writeln!(s, "part {} size={}", p.name, p.size);
                }
            }
        }
        let c = &self.checks;
        let _ = writeln!(s, "total={} target_cardinality={}", self.total, self.target_cardinality);
        let _ = writeln!(
            s,
            "disjoint={} contained={} total_matches={} guards={}",
            c.disjoint, c.contained, c.total_matches, c.guards
        );
        if let (Some(base), Some(ok)) = (self.base_cardinality, c.base_disjoint) {
            let _ = writeln!(s, "base_cardinality={base} base_disjoint={ok}");
        }
        for g in &self.failed_guards {
            let _ = writeln!(s, "failed guard: {g}");
        }
        let _ = writeln!(s, "exhibited_bound={}", self.exhibited_bound);
        let _ = writeln!(s, "{}", if self.passed() { "pass" } else { "fail" });
        s
    }

    fn csv_header(&self) -> Vec<&'static str> {
        vec!["lemma", "part", "size", "branch"]
    }

    fn csv_rows(&self) -> Vec<Vec<String>> {
        self.parts
            .iter()
            .map(|p| {
                vec![
                    self.lemma.to_string(),
                    p.name.clone(),
                    p.size.to_string(),
                    p.branch.clone().unwrap_or_default(),
                ]
            })
            .collect()
    }
}

/// One catalogue entry, optionally evaluated at a `(k, h)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogueRow {
    #[serde(flatten)]
    pub doc: CatalogueDoc,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub value: Option<i64>,
}

/// Output of `bounds`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CatalogueReport(pub Vec<CatalogueRow>);

impl Report for CatalogueReport {
    fn text(&self) -> String {
        let mut s = String::new();
        for r in &self.0 {
            let d = &r.doc;
            let value = r.value.map(|v| format!(" = {v}")).unwrap_or_default();
            let _ = writeln!(
                s,
                "{} [{}, {}] {}{} when {}",
                d.id,
                d.variant,
                d.status.as_str(),
                d.formula,
                value,
                d.hypotheses
            );
        }
        s
    }

    fn csv_header(&self) -> Vec<&'static str> {
        vec!["id", "variant", "formula", "hypotheses", "status", "value"]
    }

    fn csv_rows(&self) -> Vec<Vec<String>> {
        self.0
            .iter()
            .map(|r| {
                let d = &r.doc;
                vec![
                    d.id.clone(),
                    d.variant.to_string(),
                    d.formula.clone(),
                    d.hypotheses.clone(),
                    d.status.as_str().to_string(),
                    r.value.map(|v| v.to_string()).unwrap_or_default(),
                ]
            })
            .collect()
    }
}
