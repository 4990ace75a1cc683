use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Informational,
}

impl Verdict {
    pub fn from_check(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Informational => "informational",
        }
    }
}

/// One parameter point. `band` states the acceptance rule in words and says
/// whether it is exact or a desk-scale calibration.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResultRow {
    pub point: String,
    pub estimate: f64,
    pub se: f64,
    pub target: Option<f64>,
    pub band: String,
    pub verdict: Verdict,
}

impl ResultRow {
    pub fn info(point: impl Into<String>, estimate: f64, se: f64) -> Self {
        Self {
            point: point.into(),
            estimate,
            se,
            target: None,
            band: String::new(),
            verdict: Verdict::Informational,
        }
    }

    pub fn checked(
        point: impl Into<String>,
        estimate: f64,
        se: f64,
        target: Option<f64>,
        band: impl Into<String>,
        ok: bool,
    ) -> Self {
        Self {
            point: point.into(),
            estimate,
            se,
            target,
            band: band.into(),
            verdict: Verdict::from_check(ok),
        }
    }

    /// Keeps the row but drops its verdict to informational.
    pub fn demoted(mut self) -> Self {
        self.verdict = Verdict::Informational;
        self
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResultTable {
    pub experiment: String,
    pub seed: u64,
    pub config_hash: String,
    pub wall_time_secs: f64,
    pub rows: Vec<ResultRow>,
}

impl ResultTable {
    /// Fail if any row fails, pass if at least one row passes, otherwise
    /// informational.
    pub fn verdict(&self) -> Verdict {
        if self.rows.iter().any(|r| r.verdict == Verdict::Fail) {
            Verdict::Fail
        } else if self.rows.iter().any(|r| r.verdict == Verdict::Pass) {
            Verdict::Pass
        } else {
            Verdict::Informational
        }
    }

    pub fn row(&self, point: &str) -> Option<&ResultRow> {
        self.rows.iter().find(|r| r.point == point)
    }

    /// One line per row; reals are written in shortest round-trip form.
    /// Wall time is left out so reruns are byte-identical.
    pub fn write_csv<W: std::io::Write>(&self, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record([
            "experiment",
            "point",
            "estimate",
            "se",
            "target",
            "band",
            "verdict",
            "seed",
            "config_hash",
        ])?;
        for r in &self.rows {
            w.write_record([
                self.experiment.clone(),
                r.point.clone(),
                format!("{:?}", r.estimate),
                format!("{:?}", r.se),
                r.target.map(|t| format!("{t:?}")).unwrap_or_default(),
                r.band.clone(),
                r.verdict.as_str().to_string(),
                self.seed.to_string(),
                self.config_hash.clone(),
            ])?;
        }
        w.flush()?;
        Ok(())
    }

    pub fn to_csv(&self) -> String {
        let mut buf = Vec::new();
        self.write_csv(&mut buf).expect("writing to memory");
        String::from_utf8(buf).expect("csv is utf-8")
    }

    /// Structured text with one line per row. Wall time is left out, as in
    /// the CSV.
    pub fn report(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "experiment: {}", self.experiment);
        let _ = writeln!(s, "seed: {}", self.seed);
        let _ = writeln!(s, "config hash: {}", self.config_hash);
        let _ = writeln!(s, "verdict: {}", self.verdict().as_str());
        for r in &self.rows {
            let target = r.target.map(|t| format!(" target {t:.6}")).unwrap_or_default();
            let band = if r.band.is_empty() { String::new() } else { format!(" [{}]", r.band) };
            let _ = writeln!(
                s,
                "  {:<14} {}: {:.6} +- {:.6}{target}{band}",
                r.verdict.as_str(),
                r.point,
                r.estimate,
                r.se
            );
        }
        s
    }
}
