//! Regression corpus: worked examples with their expected spectra.
//!
//! A corpus file is a JSON array of entries. Every expectation is optional;
//! factors are compared up to a rational unit, points as sets.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::parser::{parse, parse_rational, render};
use crate::poly::{Point, Poly};
use crate::report::point_strings;
use crate::spectrum::{spectrum_report, PencilParameter, SpectrumReport};

pub const BUNDLED: &str = include_str!("../corpus/examples.json");

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CorpusEntry {
    pub name: String,
    /// Where the example comes from, for humans.
    #[serde(default)]
    pub source: String,
    pub s: String,
    pub t: String,
    pub params: Vec<String>,
    pub max_deg: u32,
    pub expected: Expected,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Expected {
    #[serde(default)]
    pub maximal_points: Option<Vec<[String; 3]>>,
    #[serde(default)]
    pub residually_null_dimension: Option<i32>,
    /// Polynomials that must lie in the residually null ideal.
    #[serde(default)]
    pub ideal_contains: Vec<String>,
    /// Polynomials that must not.
    #[serde(default)]
    pub ideal_excludes: Vec<String>,
    #[serde(default)]
    pub pencils: Vec<ExpectedPencil>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExpectedPencil {
    pub pencil: String,
    pub factors: Vec<ExpectedFactor>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExpectedFactor {
    pub generator: String,
    pub multiplicity: u32,
    pub primitive: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntryOutcome {
    pub name: String,
    pub passed: bool,
    /// One line per mismatch, or the error that stopped the entry.
    pub diffs: Vec<String>,
}

pub fn load(text: &str) -> Result<Vec<CorpusEntry>> {
    serde_json::from_str(text).map_err(|e| Error::Corpus(e.to_string()))
}

pub fn bundled() -> Vec<CorpusEntry> {
    load(BUNDLED).expect("bundled corpus parses")
}

impl CorpusEntry {
    pub fn inputs(&self) -> Result<(Poly, Poly, Vec<PencilParameter>)> {
        let s = parse(&self.s)?;
        let t = parse(&self.t)?;
        let params = self.params.iter().map(|p| p.parse()).collect::<Result<Vec<_>>>()?;
        Ok((s, t, params))
    }

    pub fn report(&self) -> Result<SpectrumReport> {
        let (s, t, params) = self.inputs()?;
        spectrum_report(&s, &t, &params, self.max_deg)
    }

    pub fn run(&self) -> EntryOutcome {
        let diffs = match self.report().and_then(|r| self.compare(&r)) {
            Ok(d) => d,
            Err(e) => vec![format!("error: {e}")],
        };
        EntryOutcome { name: self.name.clone(), passed: diffs.is_empty(), diffs }
    }

    /// Lists every way `report` departs from the expectations.
    pub fn compare(&self, report: &SpectrumReport) -> Result<Vec<String>> {
        let ex = &self.expected;
        let rn = &report.residually_null;
        let mut diffs = Vec::new();
        if let Some(dim) = ex.residually_null_dimension {
            if dim != rn.dimension {
                diffs.push(format!("residually null dimension: expected {dim}, got {}", rn.dimension));
            }
        }
        if let Some(points) = &ex.maximal_points {
            let want = points.iter().map(parse_point).collect::<Result<BTreeSet<Point>>>()?;
            let got: BTreeSet<Point> = report.maximal_points().into_iter().collect();
            if !rn.points_complete {
                diffs.push("maximal points: enumeration incomplete".to_string());
            }
            for p in want.difference(&got) {
                diffs.push(format!("maximal points: missing {}", show_point(p)));
            }
            for p in got.difference(&want) {
                diffs.push(format!("maximal points: unexpected {}", show_point(p)));
            }
        }
        for text in &ex.ideal_contains {
            if !rn.ideal.ideal_member(&parse(text)?) {
                diffs.push(format!("ideal: expected {text} to be a member"));
            }
        }
        for text in &ex.ideal_excludes {
            if rn.ideal.ideal_member(&parse(text)?) {
                diffs.push(format!("ideal: expected {text} not to be a member"));
            }
        }
        for ep in &ex.pencils {
            let param: PencilParameter = ep.pencil.parse()?;
            let Some(got) = report.pencil(&param) else {
                diffs.push(format!("pencil {param}: not computed"));
                continue;
            };
            if !got.is_complete() {
                diffs.push(format!("pencil {param}: factorization incomplete"));
            }
            let want = ep
                .factors
                .iter()
                .map(|f| Ok((render(&parse(&f.generator)?.monic()), f.multiplicity, f.primitive)))
                .collect::<Result<BTreeSet<_>>>()?;
            let have: BTreeSet<_> =
                got.primes.iter().map(|h| (render(&h.generator.monic()), h.multiplicity, h.primitive)).collect();
            for (g, m, p) in want.difference(&have) {
                diffs.push(format!("pencil {param}: missing factor {g} (multiplicity {m}, primitive {p})"));
            }
            for (g, m, p) in have.difference(&want) {
                diffs.push(format!("pencil {param}: unexpected factor {g} (multiplicity {m}, primitive {p})"));
            }
        }
        Ok(diffs)
    }
}

fn parse_point(p: &[String; 3]) -> Result<Point> {
    Ok([parse_rational(&p[0])?, parse_rational(&p[1])?, parse_rational(&p[2])?])
}

fn show_point(p: &Point) -> String {
    format!("({})", point_strings(p).join(", "))
}

/// Runs entries concurrently; the outcomes are sorted by name.
pub fn run_all(entries: &[CorpusEntry]) -> Vec<EntryOutcome> {
    let mut out: Vec<EntryOutcome> = entries.par_iter().map(CorpusEntry::run).collect();
    out.sort_by(|a, b| a.name.cmp(&b.name));
    out
}
