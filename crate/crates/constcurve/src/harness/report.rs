//! Residual report aggregation and JSON/CSV emission.
//!
//! Aggregation is a commutative monoid over (max, sum, count), so
//! reports built from disjoint trial ranges merge into the same
//! aggregate as a single run. All numbers are emitted with 17
//! significant digits so round-tripping the text recovers the exact
//! f64 bits.

use crate::{Error, Result};
use std::io::Write;

/// The triangle (and trial) behind a worst-case residual.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Witness {
    pub trial: u64,
    pub sides: [f64; 3],
    pub angles: [f64; 3],
}

/// Running aggregate for one identity.
#[derive(Debug, Clone, PartialEq)]
pub struct IdentityRecord {
    pub name: &'static str,
    pub max_abs_residual: f64,
    pub sum_abs_residual: f64,
    pub samples: u64,
    pub worst_case: Option<Witness>,
}

impl IdentityRecord {
    pub fn new(name: &'static str) -> Self {
        IdentityRecord {
            name,
            max_abs_residual: 0.0,
            sum_abs_residual: 0.0,
            samples: 0,
            worst_case: None,
        }
    }

    /// Fold one observation in. Ties on the residual keep the earlier
    /// trial, so the worst case is independent of evaluation order.
    pub fn record(&mut self, residual: f64, witness: Witness) {
        let better = residual > self.max_abs_residual
            || (residual == self.max_abs_residual
                && self.worst_case.is_none_or(|w| witness.trial < w.trial));
        if better {
            self.max_abs_residual = residual;
            self.worst_case = Some(witness);
        }
        self.sum_abs_residual += residual;
        self.samples += 1;
    }

    pub fn mean_abs_residual(&self) -> f64 {
        if self.samples == 0 {
            0.0
        } else {
            self.sum_abs_residual / self.samples as f64
        }
    }

    /// Combine with an aggregate over a disjoint trial range.
    pub fn merge(&mut self, other: &IdentityRecord) {
        debug_assert_eq!(self.name, other.name);
        let other_wins = other.max_abs_residual > self.max_abs_residual
            || (other.max_abs_residual == self.max_abs_residual
                && match (self.worst_case, other.worst_case) {
                    (Some(a), Some(b)) => b.trial < a.trial,
                    (None, Some(_)) => true,
                    _ => false,
                });
        if other_wins {
            self.max_abs_residual = other.max_abs_residual;
            self.worst_case = other.worst_case;
        }
        self.sum_abs_residual += other.sum_abs_residual;
        self.samples += other.samples;
    }
}

/// Aggregated residuals of one verification run.
#[derive(Debug, Clone, PartialEq)]
pub struct ResidualReport {
    pub geometry: &'static str,
    pub curvature: f64,
    pub trials: u64,
    pub seed: u64,
    pub tolerance: f64,
    pub identities: Vec<IdentityRecord>,
}

/// Report serialization format.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Csv,
}

impl ResidualReport {
    /// True iff every identity's max residual is within tolerance.
    pub fn pass(&self) -> bool {
        self.identities.iter().all(|r| r.max_abs_residual <= self.tolerance)
    }

    /// Merge a report covering a disjoint trial range of the same run.
    pub fn merge(&mut self, other: &ResidualReport) {
        debug_assert_eq!(self.seed, other.seed);
        self.trials += other.trials;
        for rec in &other.identities {
            match self.identities.iter_mut().find(|r| r.name == rec.name) {
                Some(mine) => mine.merge(rec),
                None => self.identities.push(rec.clone()),
            }
        }
    }

    pub fn emit(&self, format: ReportFormat, sink: &mut dyn Write) -> Result<()> {
        let text = match format {
            ReportFormat::Json => self.to_json(),
            ReportFormat::Csv => self.to_csv(),
        };
        sink.write_all(text.as_bytes())
            .map_err(|e| Error::ReportWrite(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        let mut out = String::new();
        out.push_str("{\n");
        out.push_str(&format!("  \"geometry\": \"{}\",\n", self.geometry));
        out.push_str(&format!("  \"curvature\": {},\n", fmt_g17(self.curvature)));
        out.push_str(&format!("  \"trials\": {},\n", self.trials));
        out.push_str(&format!("  \"seed\": {},\n", self.seed));
        out.push_str(&format!("  \"tolerance\": {},\n", fmt_g17(self.tolerance)));
        out.push_str("  \"identities\": [");
        for (i, rec) in self.identities.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            out.push_str("\n    {\n");
            out.push_str(&format!("      \"name\": \"{}\",\n", rec.name));
            out.push_str(&format!(
                "      \"max_abs_residual\": {},\n",
                fmt_g17(rec.max_abs_residual)
            ));
            out.push_str(&format!(
                "      \"mean_abs_residual\": {},\n",
                fmt_g17(rec.mean_abs_residual())
            ));
            out.push_str(&format!("      \"samples\": {},\n", rec.samples));
            match rec.worst_case {
                Some(w) => {
                    out.push_str("      \"worst_case\": {\n");
                    out.push_str(&format!("        \"trial\": {},\n", w.trial));
                    out.push_str(&format!(
                        "        \"sides\": [{}, {}, {}],\n",
                        fmt_g17(w.sides[0]),
                        fmt_g17(w.sides[1]),
                        fmt_g17(w.sides[2])
                    ));
                    out.push_str(&format!(
                        "        \"angles\": [{}, {}, {}]\n",
                        fmt_g17(w.angles[0]),
                        fmt_g17(w.angles[1]),
                        fmt_g17(w.angles[2])
                    ));
                    out.push_str("      }\n");
                }
                None => out.push_str("      \"worst_case\": null\n"),
            }
            out.push_str("    }");
        }
        if self.identities.is_empty() {
            out.push_str("],\n");
        } else {
            out.push_str("\n  ],\n");
        }
        out.push_str(&format!("  \"pass\": {}\n", self.pass()));
        out.push_str("}\n");
        out
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("name,max_abs_residual,mean_abs_residual,trials,seed,pass\n");
        for rec in &self.identities {
            out.push_str(&format!(
                "{},{},{},{},{},{}\n",
                rec.name,
                fmt_g17(rec.max_abs_residual),
                fmt_g17(rec.mean_abs_residual()),
                self.trials,
                self.seed,
                rec.max_abs_residual <= self.tolerance
            ));
        }
        out
    }
}

/// Format with 17 significant digits (exact f64 round trip); the output
/// is a valid JSON number.
pub fn fmt_g17(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    format!("{x:.16e}")
}
