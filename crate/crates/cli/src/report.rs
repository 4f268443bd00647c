//! Report data model and the three writers (JSON, Markdown, CSV).
//!
//! The JSON artifact is the machine contract: versioned schema, flat
//! per-check records, and nothing nondeterministic, so identical
//! (config, seed, version) always produces identical bytes. Wall-clock
//! timings are deliberately excluded; the binary prints elapsed time to
//! stderr instead.

use std::fs;
use std::path::{Path, PathBuf};

use serde::Serialize;

use crate::config::{Format, RunConfig};
use crate::CmdError;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Serialize)]
pub struct ToolStamp {
    pub name: &'static str,
    pub version: &'static str,
}

impl ToolStamp {
    pub fn current() -> Self {
        ToolStamp {
            name: "lerch-verify",
            version: env!("CARGO_PKG_VERSION"),
        }
    }
}

/// The settings that influenced the run, echoed verbatim. The output
/// directory is deliberately not part of the echo: it does not affect
/// any computed result, and leaving it out keeps reports comparable
/// across checkouts.
#[derive(Debug, Serialize)]
pub struct ConfigEcho {
    pub digits: u32,
    pub tolerance: String,
    pub samples_per_identity: u32,
    pub seed: u64,
    pub identity_filter: Vec<String>,
    pub formats: Vec<String>,
}

impl ConfigEcho {
    pub fn from_config(cfg: &RunConfig) -> Self {
        ConfigEcho {
            digits: cfg.digits,
            tolerance: cfg.tolerance.clone(),
            samples_per_identity: cfg.samples_per_identity,
            seed: cfg.seed,
            identity_filter: cfg.identity_filter.clone(),
            formats: cfg.formats.iter().map(|f| f.name().to_string()).collect(),
        }
    }
}

#[derive(Debug, Default, Serialize, PartialEq, Eq)]
pub struct Totals {
    pub identities: usize,
    pub checks: usize,
    pub holds: usize,
    pub fails: usize,
    pub suspected_discrepancies: usize,
    pub eval_errors: usize,
}

#[derive(Debug, Serialize)]
pub struct IdentitySummary {
    pub id: String,
    pub title: String,
    pub tier: String,
    pub anchor: String,
    /// Worst verdict over the identity's checks.
    pub verdict: String,
    pub checks: usize,
    pub holds: usize,
    pub fails: usize,
    pub suspected_discrepancies: usize,
    pub eval_errors: usize,
    pub worst_abs_residual: Option<String>,
    pub worst_rel_residual: Option<String>,
    pub alternate_applied: bool,
    pub alternate_holds: bool,
    pub alternate_reading: Option<String>,
    pub route_notes: String,
}

/// One flat record per (identity, sample) check.
#[derive(Debug, Serialize)]
pub struct CheckRecord {
    pub identity_id: String,
    pub sample_index: usize,
    pub sample: String,
    pub verdict: String,
    pub abs_residual: Option<String>,
    pub rel_residual: Option<String>,
    pub note: String,
}

#[derive(Debug, Serialize)]
pub struct Report {
    pub schema: u32,
    pub tool: ToolStamp,
    pub config: ConfigEcho,
    pub totals: Totals,
    pub identities: Vec<IdentitySummary>,
    pub checks: Vec<CheckRecord>,
}

impl Report {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_markdown(&self) -> String {
        let mut md = String::new();
        let t = &self.totals;
        md.push_str("# lerch-verify report\n\n");
        md.push_str(&format!(
            "Schema {}, produced by {} {}.\n\n",
            self.schema, self.tool.name, self.tool.version
        ));

        md.push_str("## Configuration\n\n");
        md.push_str("| setting | value |\n| --- | --- |\n");
        md.push_str(&format!("| digits | {} |\n", self.config.digits));
        md.push_str(&format!("| tolerance | {} |\n", cell(&self.config.tolerance)));
        md.push_str(&format!(
            "| samples per identity | {} |\n",
            self.config.samples_per_identity
        ));
        md.push_str(&format!("| seed | {} |\n", self.config.seed));
        md.push_str(&format!(
            "| identity filter | {} |\n",
            cell(&self.config.identity_filter.join(", "))
        ));
        md.push_str(&format!("| formats | {} |\n\n", self.config.formats.join(", ")));

        md.push_str("## Totals\n\n");
        md.push_str(&format!(
            "{} identities, {} checks: {} hold, {} fail, {} suspected discrepancies, {} evaluation errors.\n\n",
            t.identities, t.checks, t.holds, t.fails, t.suspected_discrepancies, t.eval_errors
        ));

        let suspects: Vec<&IdentitySummary> = self
            .identities
            .iter()
            .filter(|i| i.suspected_discrepancies > 0)
            .collect();
        if !suspects.is_empty() {
            md.push_str("## Suspected discrepancies\n\n");
            md.push_str(
                "The statements below fail as catalogued on every flagged sample, \
                 confirmed at two precision levels, which points at the statement \
                 rather than the arithmetic. Each entry documents the alternate \
                 reading that was tested in its place.\n\n",
            );
            for s in suspects {
                md.push_str(&format!("### {}: {}\n\n", s.id, s.title));
                md.push_str(&format!("- statement: `{}`\n", s.anchor));
                match &s.alternate_reading {
                    Some(alt) if s.alternate_applied => {
                        md.push_str(&format!("- alternate reading tested: {alt}\n"));
                        md.push_str(&format!(
                            "- alternate outcome: {}\n",
                            if s.alternate_holds {
                                "holds on every flagged sample to full tolerance"
                            } else {
                                "does not hold either"
                            }
                        ));
                    }
                    _ => md.push_str("- no alternate reading is registered\n"),
                }
                md.push_str(&format!("- notes: {}\n\n", s.route_notes));
            }
        }

        md.push_str("## Results\n\n");
        md.push_str(
            "| id | title | tier | checks | holds | fails | suspected | errors | worst residual | verdict | statement |\n",
        );
        md.push_str("| --- | --- | --- | --- | --- | --- | --- | --- | --- | --- | --- |\n");
        for i in &self.identities {
            md.push_str(&format!(
                "| {} | {} | {} | {} | {} | {} | {} | {} | {} | {} | `{}` |\n",
                i.id,
                cell(&i.title),
                i.tier,
                i.checks,
                i.holds,
                i.fails,
                i.suspected_discrepancies,
                i.eval_errors,
                i.worst_rel_residual.as_deref().unwrap_or("-"),
                i.verdict,
                cell(&i.anchor),
            ));
        }
        md
    }

    pub fn to_csv(&self) -> Result<String, CmdError> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record([
            "identity_id",
            "sample_index",
            "sample",
            "verdict",
            "abs_residual",
            "rel_residual",
            "note",
        ])
        .map_err(|e| CmdError::Io(e.to_string()))?;
        for c in &self.checks {
            w.write_record([
                c.identity_id.as_str(),
                &c.sample_index.to_string(),
                c.sample.as_str(),
                c.verdict.as_str(),
                c.abs_residual.as_deref().unwrap_or(""),
                c.rel_residual.as_deref().unwrap_or(""),
                c.note.as_str(),
            ])
            .map_err(|e| CmdError::Io(e.to_string()))?;
        }
        let bytes = w
            .into_inner()
            .map_err(|e| CmdError::Io(e.to_string()))?;
        String::from_utf8(bytes).map_err(|e| CmdError::Io(e.to_string()))
    }

    /// Write every requested format under `dir`, returning the paths.
    pub fn write_files(&self, dir: &Path, formats: &[Format]) -> Result<Vec<PathBuf>, CmdError> {
        fs::create_dir_all(dir)
            .map_err(|e| CmdError::Io(format!("cannot create {}: {e}", dir.display())))?;
        let mut written = Vec::new();
        for fmt in formats {
            let contents = match fmt {
                Format::Json => self.to_json(),
                Format::Markdown => self.to_markdown(),
                Format::Csv => self.to_csv()?,
            };
            let path = dir.join(fmt.file_name());
            fs::write(&path, contents)
                .map_err(|e| CmdError::Io(format!("cannot write {}: {e}", path.display())))?;
            written.push(path);
        }
        Ok(written)
    }
}

/// Markdown table cells cannot hold raw pipes.
fn cell(s: &str) -> String {
    s.replace('|', "\\|")
}
