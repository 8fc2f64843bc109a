//! Claim registry, stage orchestration, and report output.

mod claims;
mod stages;

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::bspace::build_b2;
use crate::complexes::{grid_complex, Complex};
use crate::error::{Error, Result};

pub use claims::{spec, ClaimSpec, REGISTRY};
pub use stages::{Choices, RunManifest, Stages};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClaimRecord {
    pub id: String,
    pub description: String,
    pub expected: String,
    pub observed: String,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
    /// Wall time; kept out of the serialized report so reports are reproducible.
    #[serde(skip)]
    pub elapsed_ms: u128,
}

impl ClaimRecord {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Emit {
    Json,
    Text,
    #[default]
    Both,
}

#[derive(Clone, Debug, Default)]
pub struct VerifyOptions {
    /// Claim ids, short ids like `C07`, or `all`; empty means all.
    pub claims: Vec<String>,
    pub out_dir: Option<PathBuf>,
    pub jobs: Option<usize>,
    pub choices: Choices,
    pub emit: Emit,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub manifest: RunManifest,
    pub claims: Vec<ClaimRecord>,
    pub passed: usize,
    pub failed: usize,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)? + "\n")
    }

    pub fn to_text(&self) -> String {
        let m = &self.manifest;
        let mut s = String::new();
        let _ = writeln!(s, "veritas {}", m.version);
        let _ = writeln!(s, "group hash  {}", m.group_hash);
        let _ = writeln!(
            s,
            "p           {}{}",
            m.p,
            if m.alt_p { "  (alternate)" } else { "" }
        );
        let _ = writeln!(
            s,
            "tau         {}{}",
            m.tau,
            if m.alt_tau { "  (alternate)" } else { "" }
        );
        let _ = writeln!(s);
        for c in &self.claims {
            let status = if c.passed() { "PASS" } else { "FAIL" };
            let _ = writeln!(s, "{:<28}{status}", c.id);
            let _ = writeln!(s, "    expected  {}", c.expected);
            let _ = writeln!(s, "    observed  {}", c.observed);
        }
        let _ = writeln!(s);
        let _ = writeln!(s, "{} passed, {} failed", self.passed, self.failed);
        s
    }
}

/// Expands selectors into registry ids, in registry order.
pub fn resolve_claims(selectors: &[String]) -> Result<Vec<&'static str>> {
    if selectors.is_empty() || selectors.iter().any(|s| s == "all") {
        return Ok(REGISTRY.iter().map(|c| c.id).collect());
    }
    let mut wanted = Vec::new();
    for sel in selectors {
        let hit = REGISTRY
            .iter()
            .find(|c| c.id == sel || c.id.split('_').next() == Some(sel.as_str()))
            .ok_or_else(|| Error::UnknownClaim(sel.clone()))?;
        wanted.push(hit.id);
    }
    Ok(REGISTRY
        .iter()
        .map(|c| c.id)
        .filter(|id| wanted.contains(id))
        .collect())
}

fn record(spec: &ClaimSpec, outcome: Result<claims::Outcome>, started: Instant) -> ClaimRecord {
    let (observed, pass, witness) = match outcome {
        Ok(o) => (o.observed, o.pass, o.witness),
        Err(e) => (format!("error: {e}"), false, None),
    };
    ClaimRecord {
        id: spec.id.to_string(),
        description: spec.description.to_string(),
        expected: spec.expected.to_string(),
        observed,
        status: if pass { Status::Pass } else { Status::Fail },
        witness,
        elapsed_ms: started.elapsed().as_millis(),
    }
}

fn ids_through(last: &str) -> Vec<&'static str> {
    let end = REGISTRY
        .iter()
        .position(|c| c.id == last)
        .expect("registered")
        + 1;
    REGISTRY[..end].iter().map(|c| c.id).collect()
}

fn serialized(records: &[ClaimRecord]) -> Result<String> {
    Ok(serde_json::to_string(records)?)
}

/// Evaluates `ids` against one set of stages, inside a pool of `jobs` threads.
pub fn run_claims(
    ids: &[&'static str],
    choices: Choices,
    jobs: Option<usize>,
    out_dir: Option<&Path>,
) -> Result<(RunManifest, Vec<ClaimRecord>)> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(j) = jobs {
        builder = builder.num_threads(j.max(1));
    }
    let pool = builder.build().map_err(|e| Error::Stage(e.to_string()))?;
    pool.install(|| {
        let st = Stages::new(choices, out_dir)?;
        let mut done: BTreeMap<&'static str, ClaimRecord> = BTreeMap::new();
        let mut out = Vec::new();
        for &id in ids {
            let spec = spec(id).ok_or_else(|| Error::UnknownClaim(id.to_string()))?;
            let started = Instant::now();
            let outcome = match id {
                "C15_determinism" => determinism(&st, &mut done, choices, jobs, out_dir),
                "C16_choice_invariance" => choice_invariance(choices, jobs, out_dir),
                _ => claims::evaluate(id, &st),
            };
            let r = record(spec, outcome, started);
            done.insert(id, r.clone());
            out.push(r);
        }
        Ok((st.manifest.clone(), out))
    })
}

fn determinism(
    st: &Stages,
    done: &mut BTreeMap<&'static str, ClaimRecord>,
    choices: Choices,
    jobs: Option<usize>,
    out_dir: Option<&Path>,
) -> Result<claims::Outcome> {
    let ids = ids_through("C14_oracles");
    let mut first = Vec::new();
    for &id in &ids {
        if !done.contains_key(id) {
            let started = Instant::now();
            let r = record(
                spec(id).expect("registered"),
                claims::evaluate(id, st),
                started,
            );
            done.insert(id, r);
        }
        first.push(done[id].clone());
    }
    let (_, single) = run_claims(&ids, choices, Some(1), None)?;
    let (_, again) = run_claims(&ids, choices, jobs, out_dir)?;
    let a = serialized(&first)?;
    let same_single = a == serialized(&single)?;
    let same_again = a == serialized(&again)?;
    let observed = format!(
        "{} records; rerun identical {}, single-threaded uncached identical {}",
        ids.len(),
        if same_again { "yes" } else { "no" },
        if same_single { "yes" } else { "no" },
    );
    Ok(claims::Outcome {
        observed,
        pass: same_single && same_again,
        witness: None,
    })
}

fn choice_invariance(
    choices: Choices,
    jobs: Option<usize>,
    out_dir: Option<&Path>,
) -> Result<claims::Outcome> {
    let other = choices.flipped();
    let (m, records) = run_claims(&ids_through("C13_link_regularity"), other, jobs, out_dir)?;
    let failing: Vec<&str> = records
        .iter()
        .filter(|r| !r.passed())
        .map(|r| r.id.as_str())
        .collect();
    let passed = records.len() - failing.len();
    let mut observed = format!(
        "{passed}/{} pass with p = {}, tau = {}",
        records.len(),
        m.p,
        m.tau
    );
    if !failing.is_empty() {
        observed.push_str(&format!("; failing: {}", failing.join(", ")));
    }
    Ok(claims::Outcome {
        observed,
        pass: failing.is_empty(),
        witness: Some(serde_json::json!({ "alt_p": other.alt_p, "alt_tau": other.alt_tau })),
    })
}

/// Runs the selected claims and writes `report.json` / `report.txt` and
/// `timings.json` into the output directory when one is given.
pub fn run_verify(opts: &VerifyOptions) -> Result<Report> {
    let ids = resolve_claims(&opts.claims)?;
    if let Some(d) = &opts.out_dir {
        fs::create_dir_all(d)?;
    }
    let (manifest, records) = run_claims(&ids, opts.choices, opts.jobs, opts.out_dir.as_deref())?;
    let passed = records.iter().filter(|r| r.passed()).count();
    let report = Report {
        manifest,
        failed: records.len() - passed,
        passed,
        claims: records,
    };
    if let Some(d) = &opts.out_dir {
        if opts.emit != Emit::Text {
            fs::write(d.join("report.json"), report.to_json()?)?;
        }
        if opts.emit != Emit::Json {
            fs::write(d.join("report.txt"), report.to_text())?;
        }
        let timings: BTreeMap<&str, u128> = report
            .claims
            .iter()
            .map(|c| (c.id.as_str(), c.elapsed_ms))
            .collect();
        fs::write(
            d.join("timings.json"),
            serde_json::to_string_pretty(&timings)? + "\n",
        )?;
    }
    Ok(report)
}

pub const EXPORT_NAMES: [&str; 6] = ["600cell", "sigma3", "B", "B2", "B2_icosa", "grid"];

/// Computes one of the named complexes.
pub fn named_complex(name: &str, choices: Choices) -> Result<Complex> {
    let st = || Stages::new(choices, None);
    match name {
        "600cell" => Ok(st()?.x()?.clone()),
        "sigma3" => Ok(st()?.quotient()?.complex.clone()),
        "B" => Ok(st()?.b()?.complex.clone()),
        "B2" => Ok(st()?.b2()?.complex.clone()),
        "B2_icosa" => Ok(build_b2(&crate::complexes::icosahedron(), 4)?.1.complex),
        "grid" => Ok(grid_complex(5)),
        other => Err(Error::UnknownComplex {
            name: other.to_string(),
            valid: EXPORT_NAMES.join(", "),
        }),
    }
}

/// Writes the named complex as canonical JSON to `path`.
pub fn export_complex(name: &str, path: &Path, choices: Choices) -> Result<Complex> {
    let c = named_complex(name, choices)?;
    fs::write(path, c.to_json() + "\n")?;
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_matches_checked_in_claim_list() {
        let listed: Vec<&str> = include_str!("../../claims.txt")
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .collect();
        let registered: Vec<&str> = REGISTRY.iter().map(|c| c.id).collect();
        assert_eq!(listed, registered);
    }

    #[test]
    fn selectors() {
        assert_eq!(resolve_claims(&[]).unwrap().len(), 16);
        assert_eq!(resolve_claims(&["all".into()]).unwrap().len(), 16);
        assert_eq!(
            resolve_claims(&["C07".into(), "C01_colorings_600cell".into()]).unwrap(),
            vec!["C01_colorings_600cell", "C07_b2_latin_squares"]
        );
        assert!(matches!(
            resolve_claims(&["C99".into()]),
            Err(Error::UnknownClaim(_))
        ));
    }

    #[test]
    fn unknown_export_name_lists_valid_names() {
        let err = named_complex("tesseract", Choices::default()).unwrap_err();
        assert!(err
            .to_string()
            .contains("600cell, sigma3, B, B2, B2_icosa, grid"));
    }
}
