//! JSON job documents and the reports produced from them.
//!
//! A job looks like
//! `{"n":3,"generators":[[4,1,1],[5,2,0]],"characteristic":0,"tasks":["betti","dual"]}`.

use std::fmt::{self, Write as _};
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::duality::{self, DualGeneratorSet, ExtremalReport};
use crate::equivariant::{self, BettiTable, EquivariantTor, InvariantBetti};
use crate::error::{Error, Result};
use crate::homology::FieldSpec;
use crate::ideal::SymIdeal;
use crate::oracle::OrbitOracle;
use crate::partition::Partition;
use crate::stability::{self, GammaTable};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Task {
    Betti,
    Equivariant,
    Invariant,
    Dual,
    Extremal,
    RegPdim,
    Propagate(usize),
    Verify,
}

impl FromStr for Task {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "betti" => Task::Betti,
            "equivariant" => Task::Equivariant,
            "invariant" => Task::Invariant,
            "dual" => Task::Dual,
            "extremal" => Task::Extremal,
            "reg-pdim" => Task::RegPdim,
            "verify" => Task::Verify,
            _ => {
                let m = s
                    .strip_prefix("propagate:")
                    .and_then(|m| m.parse().ok())
                    .ok_or_else(|| Error::Job(format!("unknown task {s:?}")))?;
                Task::Propagate(m)
            }
        })
    }
}

impl fmt::Display for Task {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Task::Betti => f.write_str("betti"),
            Task::Equivariant => f.write_str("equivariant"),
            Task::Invariant => f.write_str("invariant"),
            Task::Dual => f.write_str("dual"),
            Task::Extremal => f.write_str("extremal"),
            Task::RegPdim => f.write_str("reg-pdim"),
            Task::Propagate(m) => write!(f, "propagate:{m}"),
            Task::Verify => f.write_str("verify"),
        }
    }
}

impl Serialize for Task {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Task {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// The raw job document.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JobSpec {
    pub n: usize,
    pub generators: Vec<Vec<u32>>,
    #[serde(default)]
    pub characteristic: u32,
    #[serde(default)]
    pub tasks: Vec<Task>,
}

/// A validated job.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Job {
    pub spec: JobSpec,
    pub ideal: SymIdeal,
    pub field: FieldSpec,
    pub warnings: Vec<String>,
}

pub fn parse_job(text: &str) -> Result<Job> {
    let spec: JobSpec = serde_json::from_str(text).map_err(|e| Error::Job(e.to_string()))?;
    validate(spec)
}

pub fn validate(spec: JobSpec) -> Result<Job> {
    let field = FieldSpec::new(spec.characteristic)?;
    let mut warnings = Vec::new();
    let mut gens = Vec::with_capacity(spec.generators.len());
    for g in &spec.generators {
        if g.len() != spec.n {
            return Err(Error::LengthMismatch { expected: spec.n, found: g.len() });
        }
        let sorted = Partition::sorted_from(g.clone());
        if sorted.parts() != g.as_slice() {
            warnings.push(format!("generator {g:?} reordered to {sorted}"));
        }
        gens.push(sorted);
    }
    let ideal = SymIdeal::new(spec.n, gens)?;
    Ok(Job { spec, ideal, field, warnings })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyCheck {
    pub i: usize,
    pub mu: Partition,
    pub formula: u64,
    pub oracle: u64,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "task", rename_all = "kebab-case")]
pub enum TaskResult {
    Betti {
        ideal: BettiTable,
        quotient: BettiTable,
    },
    Equivariant {
        tor: EquivariantTor,
    },
    Invariant {
        invariant: InvariantBetti,
    },
    Dual {
        dual: DualGeneratorSet,
    },
    Extremal {
        extremal: ExtremalReport,
    },
    RegPdim {
        reg_quotient: u64,
        pdim_quotient: usize,
        reg_ideal: u64,
        pdim_ideal: usize,
    },
    Propagate {
        m: usize,
        gammas: GammaTable,
        betti: BettiTable,
    },
    Verify {
        /// Number of `(i, μ)` pairs compared, including those zero on both sides.
        compared: usize,
        /// Every pair that is non-zero on some side or disagrees.
        checks: Vec<VerifyCheck>,
        all_pass: bool,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub n: usize,
    pub field: FieldSpec,
    pub generators: Vec<Partition>,
    pub warnings: Vec<String>,
    pub results: Vec<TaskResult>,
}

impl Report {
    /// False when a `verify` task found a mismatch.
    pub fn verified(&self) -> bool {
        self.results.iter().all(|r| match r {
            TaskResult::Verify { all_pass, .. } => *all_pass,
            _ => true,
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let ideal = SymIdeal::new(self.n, self.generators.clone()).expect("report generators are valid");
        let _ = writeln!(out, "ideal {ideal} over {}", self.field);
        for w in &self.warnings {
            let _ = writeln!(out, "warning: {w}");
        }
        for r in &self.results {
            out.push('\n');
            match r {
                TaskResult::Betti { ideal, quotient } => {
                    let _ = writeln!(out, "Betti table of I:\n{}", ideal.render());
                    let _ = write!(out, "Betti table of R/I:\n{}", quotient.render());
                }
                TaskResult::Equivariant { tor } => {
                    if tor.is_associated_graded() {
                        out.push_str("(associated graded only)\n");
                    }
                    out.push_str(&tor.render_text());
                }
                TaskResult::Invariant { invariant } => {
                    if let Some(w) = &invariant.warning {
                        let _ = writeln!(out, "warning: {w}");
                    }
                    for rec in &invariant.records {
                        let _ = writeln!(out, "Tor_{}^S<{}>: {}", rec.i, rec.mu, rec.value);
                    }
                }
                TaskResult::Dual { dual } => {
                    let show = |v: &[crate::partition::ExtendedPartition]| {
                        v.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
                    };
                    let _ = writeln!(out, "dual generators: {}", show(&dual.all));
                    let _ = writeln!(out, "maximal: {}", show(&dual.maximal));
                }
                TaskResult::Extremal { extremal } => {
                    for p in &extremal.pairs {
                        let _ = writeln!(out, "extremal beta_{{{},{}}}(R/I) = {}", p.index, p.partition, p.value);
                    }
                }
                TaskResult::RegPdim { reg_quotient, pdim_quotient, reg_ideal, pdim_ideal } => {
                    let _ = writeln!(out, "reg(R/I) = {reg_quotient}, pdim(R/I) = {pdim_quotient}");
                    let _ = writeln!(out, "reg(I) = {reg_ideal}, pdim(I) = {pdim_ideal}");
                }
                TaskResult::Propagate { m, gammas, betti } => {
                    let _ = writeln!(out, "gamma numbers in {m} variables:");
                    for g in gammas.records() {
                        let c: Vec<String> = g.c.iter().map(ToString::to_string).collect();
                        let _ = writeln!(out, "gamma_{}^{{{},({})}} = {}", g.i, g.mu, c.join(","), g.gamma);
                    }
                    let _ = write!(out, "Betti table of I_{m}:\n{}", betti.render());
                }
                TaskResult::Verify { compared, checks, all_pass } => {
                    for c in checks {
                        let tag = if c.pass { "PASS" } else { "FAIL" };
                        let _ = writeln!(out, "{tag} Tor_{}<{}>: formula {} oracle {}", c.i, c.mu, c.formula, c.oracle);
                    }
                    let verdict = if *all_pass { "PASS" } else { "FAIL" };
                    let _ = writeln!(out, "verify: {verdict} ({compared} orbit degrees compared)");
                }
            }
        }
        out
    }
}

fn verify(ideal: &SymIdeal, field: FieldSpec, tor: &EquivariantTor) -> Result<TaskResult> {
    let oracle = OrbitOracle::new(ideal, field)?;
    let mut degrees = equivariant::candidate_partitions(ideal)?;
    degrees.extend(equivariant::beyond_candidates(ideal)?);
    let n = ideal.n();
    let per_degree = degrees
        .par_iter()
        .map(|mu| {
            let dims = oracle.orbit_dims(mu)?;
            let top = dims.len().max(n);
            Ok((0..top)
                .map(|i| {
                    let formula = tor.orbit_dim(i, mu);
                    let brute = dims.get(i).copied().unwrap_or(0);
                    VerifyCheck { i, mu: mu.clone(), formula, oracle: brute, pass: formula == brute }
                })
                .collect::<Vec<_>>())
        })
        .collect::<Result<Vec<_>>>()?;
    let all: Vec<VerifyCheck> = per_degree.into_iter().flatten().collect();
    let compared = all.len();
    let all_pass = all.iter().all(|c| c.pass);
    let mut checks: Vec<VerifyCheck> = all.into_iter().filter(|c| !c.pass || c.formula > 0).collect();
    checks.sort_by(|a, b| (a.i, &a.mu).cmp(&(b.i, &b.mu)));
    Ok(TaskResult::Verify { compared, checks, all_pass })
}

pub fn run(job: &Job) -> Result<Report> {
    let (ideal, field) = (&job.ideal, job.field);
    let mut tor: Option<EquivariantTor> = None;
    let mut tor_once = || -> Result<EquivariantTor> {
        if tor.is_none() {
            tor = Some(equivariant::equivariant_tor(ideal, field)?);
        }
        Ok(tor.clone().expect("just computed"))
    };
    let mut warnings = job.warnings.clone();
    if field.is_modular_for(ideal.n()) {
        warnings.push(equivariant::MODULAR_WARNING.to_string());
    }
    let mut results = Vec::new();
    for task in &job.spec.tasks {
        let r = match *task {
            Task::Betti => {
                let t = tor_once()?;
                TaskResult::Betti { ideal: t.graded_betti(), quotient: t.quotient().graded_betti() }
            }
            Task::Equivariant => TaskResult::Equivariant { tor: tor_once()? },
            Task::Invariant => TaskResult::Invariant { invariant: equivariant::invariant_part(&tor_once()?) },
            Task::Dual => TaskResult::Dual { dual: duality::dual_generators(ideal)? },
            Task::Extremal => TaskResult::Extremal { extremal: duality::extremal_report(ideal)? },
            Task::RegPdim => {
                let reg = duality::regularity(ideal)?;
                let pd = duality::projective_dimension(ideal)?;
                TaskResult::RegPdim {
                    reg_quotient: reg,
                    pdim_quotient: pd,
                    reg_ideal: reg + 1,
                    pdim_ideal: pd.saturating_sub(1),
                }
            }
            Task::Propagate(m) => {
                let gammas = stability::base_gamma_table(ideal, field)?.propagate(m)?;
                let betti = gammas.to_equivariant_tor()?.graded_betti();
                TaskResult::Propagate { m, gammas, betti }
            }
            Task::Verify => verify(ideal, field, &tor_once()?)?,
        };
        results.push(r);
    }
    Ok(Report {
        n: ideal.n(),
        field,
        generators: ideal.generators().to_vec(),
        warnings,
        results,
    })
}
