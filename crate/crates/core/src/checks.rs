//! Reproduction checks run by `edgering verify-paper` and the acceptance
//! test suite.
//!
//! Each check runs against a [`FixtureSet`], either the bundled fixtures or
//! files loaded from a directory, so that tampered inputs can be shown to
//! fail.

use std::fmt;
use std::fs;
use std::path::Path;

use serde::Serialize;

use crate::exceptional::{exceptional_pairs, is_normal, lemma_reports};
use crate::facets::{face_of, regular_vertices, fundamental_sets, is_regular, supporting_hyperplanes};
use crate::fixtures;
use crate::graph::Graph;
use crate::holes::{classify, s2_verdict, HoleError, TypeTag, DEGREE_SLABS};
use crate::io::{parse_graph_any, ParseError};
use crate::semigroup::{holes, member, normalization_routes};

/// Names accepted by `--only`, in criterion order.
pub const SUITES: [&str; 8] =
    ["figure", "normality", "decomposition", "lemmas", "normalization", "doubling", "facets", "taxonomy"];

/// Highest degree the checks enumerate by default.
pub const DEFAULT_MAX_DEGREE: i64 = 12;

#[derive(Clone, Debug)]
pub struct FixtureSet {
    pub bowtie: Graph,
    pub triangle: Graph,
    pub friend3: Graph,
    pub diam3: Graph,
    pub t1min: Graph,
    pub t2min: Graph,
    pub n4a: Graph,
    pub n4b: Graph,
    pub n4c: Graph,
}

impl FixtureSet {
    pub fn bundled() -> Self {
        FixtureSet {
            bowtie: fixtures::bowtie(),
            triangle: fixtures::triangle(),
            friend3: fixtures::friend3(),
            diam3: fixtures::diam3(),
            t1min: fixtures::t1min(),
            t2min: fixtures::t2min(),
            n4a: fixtures::n4a(),
            n4b: fixtures::n4b(),
            n4c: fixtures::n4c(),
        }
    }

    /// Loads `<name>.txt` or `<name>.json` fixtures from `dir`, falling back to the bundled copy for any
    /// file that is absent.
    pub fn from_dir(dir: &Path) -> Result<Self, ParseError> {
        let mut set = Self::bundled();
        let slots: [(&str, &mut Graph); 9] = [
            ("bowtie", &mut set.bowtie),
            ("triangle", &mut set.triangle),
            ("friend3", &mut set.friend3),
            ("diam3", &mut set.diam3),
            ("t1min", &mut set.t1min),
            ("t2min", &mut set.t2min),
            ("n4a", &mut set.n4a),
            ("n4b", &mut set.n4b),
            ("n4c", &mut set.n4c),
        ];
        for (stem, slot) in slots {
            for ext in ["txt", "json"] {
                if let Ok(text) = fs::read_to_string(dir.join(format!("{stem}.{ext}"))) {
                    *slot = parse_graph_any(&text)?;
                    break;
                }
            }
        }
        Ok(set)
    }

    pub fn named(&self) -> [(&'static str, &Graph); 9] {
        [
            ("TRIANGLE", &self.triangle),
            ("BOWTIE", &self.bowtie),
            ("FRIEND3", &self.friend3),
            ("DIAM3", &self.diam3),
            ("T1MIN", &self.t1min),
            ("T2MIN", &self.t2min),
            ("N4A", &self.n4a),
            ("N4B", &self.n4b),
            ("N4C", &self.n4c),
        ]
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub id: usize,
    pub suite: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "[{status}] {} {:<13} {}", self.id, self.suite, self.detail)
    }
}

type Outcome = Result<(bool, String), String>;

fn err<E: fmt::Display>(e: E) -> String {
    e.to_string()
}

/// Runs the named suite, or every suite when `only` is `None`.
pub fn run_checks(set: &FixtureSet, only: Option<&str>, max_degree: i64) -> Result<Vec<CheckResult>, String> {
    if let Some(name) = only {
        if !SUITES.contains(&name) {
            return Err(format!("unknown suite `{name}`; expected one of {}", SUITES.join(", ")));
        }
    }
    let mut out = Vec::new();
    for (i, suite) in SUITES.iter().enumerate() {
        if only.is_some_and(|o| o != *suite) {
            continue;
        }
        out.push(run_one(set, i + 1, suite, max_degree));
    }
    Ok(out)
}

pub fn run_one(set: &FixtureSet, id: usize, suite: &'static str, max_degree: i64) -> CheckResult {
    let outcome = match suite {
        "figure" => figure(set),
        "normality" => normality(set, max_degree),
        "decomposition" => decomposition(set, max_degree),
        "lemmas" => lemmas(set),
        "normalization" => normalization(set, max_degree),
        "doubling" => doubling(set),
        "facets" => facet_rank(set),
        "taxonomy" => taxonomy(set),
        _ => Err(format!("unknown suite `{suite}`")),
    };
    let (passed, detail) = outcome.unwrap_or_else(|e| (false, format!("error: {e}")));
    CheckResult { id, suite, passed, detail }
}

fn figure(set: &FixtureSet) -> Outcome {
    let g = &set.bowtie;
    let regular = regular_vertices(g).map_err(err)?;
    let expected_regular = g.vertex_set(&["v2", "v3", "v4", "v5"]).map_err(err)?;
    let singletons: Vec<_> =
        fundamental_sets(g).map_err(err)?.into_iter().filter(|t| t.vertices.len() == 1).map(|t| t.vertices).collect();
    let expected_single = vec![g.vertex_set(&["v1"]).map_err(err)?];
    let ok = regular == expected_regular && singletons == expected_single;
    Ok((
        ok,
        format!(
            "BOWTIE regular={:?} singleton fundamental sets={:?}",
            g.set_labels(regular),
            singletons.iter().map(|&s| g.set_labels(s)).collect::<Vec<_>>()
        ),
    ))
}

fn normality(set: &FixtureSet, max_degree: i64) -> Outcome {
    let mut ok = true;
    let mut parts = Vec::new();
    for (name, g, expected) in [
        ("TRIANGLE", &set.triangle, true),
        ("FRIEND3", &set.friend3, true),
        ("DIAM3", &set.diam3, true),
        ("T1MIN", &set.t1min, false),
        ("T2MIN", &set.t2min, false),
    ] {
        let normal = is_normal(g).map_err(err)?;
        ok &= normal == expected;
        if expected {
            let h = holes(g, max_degree).map_err(err)?.len();
            ok &= h == 0;
            parts.push(format!("{name} normal={normal} holes<={max_degree}:{h}"));
        } else {
            parts.push(format!("{name} normal={normal}"));
        }
    }
    Ok((ok, parts.join("; ")))
}

fn decomposition(set: &FixtureSet, max_degree: i64) -> Outcome {
    let mut ok = true;
    let mut parts = Vec::new();
    for (name, g) in [("T1MIN", &set.t1min), ("T2MIN", &set.t2min)] {
        let verdict = match s2_verdict(g, max_degree) {
            Ok(v) => v,
            Err(HoleError::DecompositionMismatch(r)) => {
                ok = false;
                parts.push(format!("{name} mismatch: {} missing, {} extra", r.missing.len(), r.extra.len()));
                continue;
            }
            Err(e) => return Err(e.to_string()),
        };
        let report = verdict.decomposition.as_ref().ok_or("graph is not a diameter-4 cactus")?;
        let slabs_checked: Vec<i32> = report.slabs.iter().filter(|s| s.equal).map(|s| s.max_degree).collect();
        let wanted = DEGREE_SLABS.iter().all(|b| i64::from(*b) > max_degree || slabs_checked.contains(b));
        let this = !verdict.normal && verdict.s2 && report.passed() && report.all_codimension_one() && wanted;
        ok &= this;
        let dims: Vec<usize> = report.families.iter().map(|f| f.dimension).collect();
        parts.push(format!(
            "{name} d={} holes={} families={} dims={dims:?} slabs={slabs_checked:?} s2={}",
            report.vertex_count,
            report.hole_count,
            report.families.len(),
            verdict.s2
        ));
    }
    Ok((ok, parts.join("; ")))
}

fn lemmas(set: &FixtureSet) -> Outcome {
    let mut total = 0;
    let mut bad = 0;
    let mut parts = Vec::new();
    for (name, g) in [("T1MIN", &set.t1min), ("T2MIN", &set.t2min), ("N4A", &set.n4a), ("N4B", &set.n4b)] {
        let reports = lemma_reports(g).map_err(err)?;
        let disagree = reports.iter().filter(|r| !r.agrees()).count();
        total += reports.len();
        bad += disagree;
        parts.push(format!("{name}:{}", reports.len()));
    }
    Ok((bad == 0 && total > 0, format!("{total} cases ({}), {bad} disagreements", parts.join(" "))))
}

fn normalization(set: &FixtureSet, max_degree: i64) -> Outcome {
    let mut ok = true;
    let mut parts = Vec::new();
    for (name, g) in set.named() {
        let routes = normalization_routes(g, max_degree).map_err(err)?;
        ok &= routes.agrees();
        parts.push(format!("{name}:{}", routes.by_closure.len()));
    }
    Ok((ok, format!("method A = method B up to degree {max_degree} ({})", parts.join(" "))))
}

fn doubling(set: &FixtureSet) -> Outcome {
    let mut pairs = 0;
    let mut bad = Vec::new();
    for (name, g) in set.named() {
        for p in exceptional_pairs(g).map_err(err)? {
            pairs += 1;
            let v = p.vector(g.vertex_count());
            let twice = v.checked_scale(2).ok_or("overflow")?;
            let once_in = member(g, &v).map_err(err)?.is_some();
            let twice_in = member(g, &twice).map_err(err)?.is_some();
            if once_in || !twice_in {
                bad.push(format!("{name} {:?}", p.labels(g)));
            }
        }
    }
    Ok((bad.is_empty() && pairs > 0, format!("{pairs} pairs, failures: {bad:?}")))
}

fn facet_rank(set: &FixtureSet) -> Outcome {
    let mut count = 0;
    let mut bad = Vec::new();
    for (name, g) in set.named() {
        if g.is_bipartite() {
            continue;
        }
        for h in supporting_hyperplanes(g).map_err(err)? {
            count += 1;
            let face = face_of(g, &h).map_err(err)?;
            if face.dimension + 1 != g.vertex_count() {
                bad.push(format!("{name} {} dim {}", h.describe(g), face.dimension));
            }
        }
    }
    Ok((bad.is_empty() && count > 0, format!("{count} hyperplanes, failures: {bad:?}")))
}

fn taxonomy(set: &FixtureSet) -> Outcome {
    let t1 = classify(&set.t1min).map_err(err)?;
    let t2 = classify(&set.t2min).map_err(err)?;
    let (_, cutpoints1) = set.t1min.blocks_and_cutpoints();
    let w1 = t1.hub.ok_or("T1MIN has no hub")?;
    let w2 = t2.hub.ok_or("T2MIN has no hub")?;
    let x5 = set.t2min.vertex("x5").ok_or("T2MIN has no x5")?;
    let x6 = set.t2min.vertex("x6").ok_or("T2MIN has no x6")?;
    let zeta_law = |ty: &crate::holes::CactusType| {
        let adjacent_zeta = ty.spokes.iter().any(|s| ty.zeta.contains(s.vertex) && ty.zeta.contains(s.partner));
        (ty.tag == TypeTag::Type2) == adjacent_zeta
    };
    let ok = t1.tag == TypeTag::Type1
        && is_regular(&set.t1min, w1)
        && cutpoints1.contains(w1)
        && t2.tag == TypeTag::Type2
        && !is_regular(&set.t2min, w2)
        && t2.omega_pairs == vec![(x5, x6)]
        && zeta_law(&t1)
        && zeta_law(&t2);
    let omega: Vec<_> =
        t2.omega_pairs.iter().map(|&(a, b)| (set.t2min.label(a).to_string(), set.t2min.label(b).to_string())).collect();
    Ok((ok, format!("T1MIN={:?} T2MIN={:?} omega_pairs={omega:?}", t1.tag, t2.tag)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cheap_suites_pass() {
        let set = FixtureSet::bundled();
        for suite in ["figure", "lemmas", "doubling", "facets", "taxonomy"] {
            let r = run_checks(&set, Some(suite), 8).unwrap();
            assert!(r[0].passed, "{}", r[0]);
        }
    }

    #[test]
    fn unknown_suite() {
        assert!(run_checks(&FixtureSet::bundled(), Some("nope"), 8).is_err());
    }
}
