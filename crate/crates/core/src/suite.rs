//! Verification driver: runs the full battery of checks over catalog cases
//! and assembles deterministic, schema-versioned JSON reports.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::cache::IrrepCache;
use crate::catalog::{self, Case};
use crate::cochain::Cochain;
use crate::drinfeld::DoubleAlgebra;
use crate::error::{Error, Result};
use crate::extraspecial;
use crate::modp;
use crate::stringy::TwistData;

pub const SCHEMA_VERSION: u32 = 1;

/// Sample sizes used when a case is too large for exhaustive checks.
pub const DEFAULT_ALGEBRA_TRIPLES: u64 = 100_000;
pub const DEFAULT_PAIRS: u64 = 2_000;
pub const DEFAULT_TRIPLES: u64 = 10_000;
pub const MODULE_SAMPLES: u64 = 2_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Value::is_null")]
    pub diagnostics: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

impl CheckResult {
    fn new(name: &str, passed: bool, diagnostics: Value, counterexample: Option<String>) -> Self {
        CheckResult {
            name: name.into(),
            status: if passed { Status::Pass } else { Status::Fail },
            diagnostics,
            counterexample: if passed { None } else { counterexample },
            reason: None,
        }
    }

    fn skipped(name: &str, reason: impl Into<String>) -> Self {
        CheckResult {
            name: name.into(),
            status: Status::Skipped,
            diagnostics: Value::Null,
            counterexample: None,
            reason: Some(reason.into()),
        }
    }

    fn errored(name: &str, e: &Error) -> Self {
        CheckResult {
            name: name.into(),
            status: Status::Fail,
            diagnostics: Value::Null,
            counterexample: None,
            reason: Some(e.to_string()),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub schema_version: u32,
    pub case: String,
    pub description: String,
    pub group_order: usize,
    pub seed: u64,
    pub checks: Vec<CheckResult>,
    /// Wall-clock milliseconds per check; only present when requested, so
    /// that reports stay byte-identical across runs otherwise.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings_ms: Option<BTreeMap<String, u64>>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }
}

#[derive(Debug, Clone)]
pub struct SuiteOptions {
    pub seed: u64,
    pub budget: Option<Duration>,
    pub jobs: Option<usize>,
    /// Ring-isomorphism pairs. `None`: exhaustive for `|G| ≤ 8`, otherwise
    /// [`DEFAULT_PAIRS`]. A limit at or above the total is exhaustive.
    pub pairs: Option<u64>,
    /// Product-associativity triples, same policy with [`DEFAULT_TRIPLES`].
    pub triples: Option<u64>,
    /// Algebra triples, same policy with [`DEFAULT_ALGEBRA_TRIPLES`].
    pub algebra_triples: Option<u64>,
    pub scope: Scope,
    pub timings: bool,
    pub cache: IrrepCache,
}

/// Which group of checks to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scope {
    All,
    /// Cocycle condition, algebra axioms, quasitriangularity and census.
    Double,
    /// Census, witnesses and the stringy product checks.
    Stringy,
}

impl Scope {
    fn double(self) -> bool {
        self != Scope::Stringy
    }

    fn stringy(self) -> bool {
        self != Scope::Double
    }
}

fn limit(requested: Option<u64>, small: bool, default: u64) -> Option<u64> {
    match requested {
        Some(n) => Some(n),
        None if small => None,
        None => Some(default),
    }
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            seed: 0,
            budget: None,
            jobs: None,
            pairs: None,
            triples: None,
            algebra_triples: None,
            scope: Scope::All,
            timings: false,
            cache: IrrepCache::disabled(),
        }
    }
}

/// Resolves `all` or a single case id.
pub fn select(selector: &str) -> Result<Vec<&'static str>> {
    if selector == "all" {
        return Ok(catalog::CASE_IDS.to_vec());
    }
    match catalog::CASE_IDS.iter().find(|&&id| id == selector) {
        Some(&id) => Ok(vec![id]),
        None => Err(Error::InvalidArgument(format!(
            "unknown case `{selector}`; known cases: {}",
            catalog::CASE_IDS.join(", ")
        ))),
    }
}

/// Runs every check on the selected cases. Reports are ordered by case id.
pub fn run_suite(selector: &str, options: &SuiteOptions) -> Result<Vec<VerificationReport>> {
    let ids = select(selector)?;
    let deadline = options.budget.map(|b| Instant::now() + b);
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(j) = options.jobs {
        builder = builder.num_threads(j.max(1));
    }
    let pool = builder.build().map_err(|e| Error::Internal(e.to_string()))?;
    pool.install(|| {
        ids.par_iter()
            .map(|id| {
                let case = Case::by_id(id)?;
                Ok(run_case(&case, options, deadline))
            })
            .collect()
    })
}

struct Runner {
    deadline: Option<Instant>,
    checks: Vec<CheckResult>,
    timings: BTreeMap<String, u64>,
}

impl Runner {
    fn run(&mut self, name: &str, f: impl FnOnce() -> Result<CheckResult>) {
        if self.deadline.is_some_and(|d| Instant::now() >= d) {
            self.checks.push(CheckResult::skipped(name, "budget exceeded"));
            return;
        }
        let start = Instant::now();
        let result = f().unwrap_or_else(|e| CheckResult::errored(name, &e));
        self.timings.insert(name.into(), start.elapsed().as_millis() as u64);
        self.checks.push(result);
    }
}

/// Runs the battery on a single case.
pub fn run_case(case: &Case, options: &SuiteOptions, deadline: Option<Instant>) -> VerificationReport {
    run_cocycle(case.id, case.description, &case.cocycle, options, deadline)
}

/// Runs the battery on an arbitrary 3-cocycle; `id` is only a label.
pub fn run_cocycle(
    id: &str,
    description: &str,
    omega: &Cochain,
    options: &SuiteOptions,
    deadline: Option<Instant>,
) -> VerificationReport {
    let seed = options.seed;
    let small = omega.group().order() <= 8;
    let scope = options.scope;
    let mut r = Runner { deadline, checks: Vec::new(), timings: BTreeMap::new() };
    let finish = |r: Runner| VerificationReport {
        schema_version: SCHEMA_VERSION,
        case: id.to_string(),
        description: description.to_string(),
        group_order: omega.group().order(),
        seed,
        checks: r.checks,
        timings_ms: options.timings.then_some(r.timings),
    };

    if scope.double() {
        r.run("cocycle", || {
            let n = omega.group().order() as u64;
            let res = omega.is_cocycle();
            Ok(CheckResult::new("cocycle", res.is_ok(), json!({ "tuples": n.pow(4) }), res.err().map(|t| format!("{t:?}"))))
        });
    }

    let algebra = match DoubleAlgebra::new(omega) {
        Ok(a) => a,
        Err(e) => {
            r.checks.push(CheckResult::errored("double", &e));
            return finish(r);
        }
    };

    if scope.double() {
        r.run("double_associativity", || {
            let res = match limit(options.algebra_triples, small, DEFAULT_ALGEBRA_TRIPLES) {
                None => algebra.check_associativity(),
                Some(count) => algebra.check_associativity_sampled(count, seed),
            };
            let exhaustive = res.as_ref().is_ok_and(|&c| c >= (omega.group().order() as u64).pow(6));
            Ok(match res {
                Ok(count) => CheckResult::new(
                    "double_associativity",
                    true,
                    json!({ "triples": count, "exhaustive": exhaustive }),
                    None,
                ),
                Err(t) => CheckResult::new("double_associativity", false, Value::Null, Some(format!("{t:?}"))),
            })
        });

        r.run("double_unit", || {
            let res = algebra.check_unit();
            Ok(CheckResult::new("double_unit", res.is_ok(), Value::Null, res.err().map(|b| format!("{b:?}"))))
        });

        if small {
            r.run("quasitriangular", || {
                let inverse = algebra.check_r_inverse();
                let res = algebra.check_quasitriangular();
                Ok(CheckResult::new(
                    "quasitriangular",
                    inverse && res.is_ok(),
                    json!({ "r_inverse": inverse, "basis_elements": res.as_ref().ok() }),
                    res.err().map(|b| format!("{b:?}")),
                ))
            });
        } else {
            r.checks.push(CheckResult::skipped("quasitriangular", "exhaustive check limited to |G| <= 8"));
        }
    }

    let data = match algebra.simples(seed).map(|s| TwistData::from_parts(algebra.clone(), s)) {
        Ok(d) => d,
        Err(e) => {
            r.checks.push(CheckResult::errored("simples", &e));
            return finish(r);
        }
    };

    r.run("census", || census(&data, options));

    if scope.double() {
        r.run("simple_modules", || {
            let sample = (!small).then_some((MODULE_SAMPLES, seed));
            let mut worst = 0.0f64;
            for (i, m) in data.simples().modules.iter().enumerate() {
                match data.algebra().check_module(m, sample) {
                    Ok(d) => worst = worst.max(d),
                    Err(e) => {
                        let at = format!("{}: {e}", data.label_string(i));
                        return Ok(CheckResult::new("simple_modules", false, Value::Null, Some(at)));
                    }
                }
            }
            Ok(CheckResult::new(
                "simple_modules",
                true,
                json!({ "modules": data.simples().len(), "max_deviation": worst, "exhaustive": small }),
                None,
            ))
        });
    }

    if scope.stringy() {
        r.run("witnesses", || {
            let grp = data.group().clone();
            let pairs: Vec<(usize, usize)> =
                grp.elements().flat_map(|g| grp.elements().map(move |h| (g, h))).collect();
            let bad = pairs.par_iter().find_map_first(|&(g, h)| {
                let ok = data.witness(g, h).is_ok() && data.solver_witness(g, h).is_ok();
                (!ok).then_some((g, h))
            });
            Ok(CheckResult::new(
                "witnesses",
                bad.is_none(),
                json!({ "pairs": pairs.len() }),
                bad.map(|(g, h)| format!("({}, {})", grp.label(g), grp.label(h))),
            ))
        });

        r.run("ring_iso", || {
            let rep = data.verify_ring_iso(limit(options.pairs, small, DEFAULT_PAIRS), seed)?;
            Ok(CheckResult::new(
                "ring_iso",
                rep.passed,
                json!({
                    "pairs": rep.pairs_checked,
                    "exhaustive": rep.exhaustive,
                    "max_deviation": rep.max_deviation,
                }),
                rep.first_failure.map(|f| f.join(" * ")),
            ))
        });

        r.run("star_associativity", || {
            let rep = data.verify_associativity(limit(options.triples, small, DEFAULT_TRIPLES), seed)?;
            Ok(CheckResult::new(
                "star_associativity",
                rep.passed,
                json!({ "triples": rep.triples_checked, "exhaustive": rep.exhaustive }),
                rep.first_failure.map(|f| f.join(" * ")),
            ))
        });
    }

    if scope == Scope::All && id == "z3cube-typeIII" {
        r.run("sector_ranks", || sector_ranks(&data));
        r.run("modp_identities", || {
            let (ok3, d3, c3) = modp_identities(3)?;
            let (ok5, d5, c5) = modp_identities(5)?;
            Ok(CheckResult::new("modp_identities", ok3 && ok5, json!({ "p3": d3, "p5": d5 }), c3.or(c5)))
        });
        r.run("polynomial_consistency", || {
            let rep = modp::cocycle_consistency_check(3, None)?;
            Ok(CheckResult::new(
                "polynomial_consistency",
                rep.passed,
                json!({ "checks": rep.checks }),
                rep.first_mismatch.map(|m| format!("g={:?} h={:?} k={:?}", m[0], m[1], m[2])),
            ))
        });
    }
    if scope == Scope::All && id == "z3cube-extraspecial" {
        r.run("extraspecial_comparison", || {
            let rep = extraspecial::compare_doubles(3, seed)?;
            let hyp = rep.hypotheses.values().all(|&b| b);
            let passed = rep.counts_match && rep.dims_match && rep.omega_is_cocycle && rep.omega_nontrivial && hyp;
            Ok(CheckResult::new(
                "extraspecial_comparison",
                passed,
                serde_json::to_value(&rep)?,
                Some(format!("count_h={} count_g={}", rep.count_h, rep.count_g)),
            ))
        });
    }
    finish(r)
}

/// Simple count equals the total sector count, Σ dim² = |G|², and the
/// per-sector tables agree with the (possibly cached) character tables.
fn census(data: &TwistData, options: &SuiteOptions) -> Result<CheckResult> {
    let fam = data.family();
    let grp = data.group();
    let mut sector_total = 0usize;
    let mut ranks = BTreeMap::new();
    for &c in &fam.conjugacy().representatives {
        let sub = fam.centralizer(c);
        let table = options.cache.character_table(sub.group().clone(), fam.sector_cocycle(c), options.seed)?;
        if table.dims != data.sector_table(c).dims {
            return Ok(CheckResult::new(
                "census",
                false,
                Value::Null,
                Some(format!("sector {} disagrees with its cached table", grp.label(c))),
            ));
        }
        sector_total += table.len();
        ranks.insert(grp.label(c).to_string(), table.len());
    }
    let dims = data.simples().dims();
    let sum_sq: usize = dims.iter().map(|d| d * d).sum();
    let n = grp.order();
    let mut dim_counts: BTreeMap<usize, usize> = BTreeMap::new();
    for d in &dims {
        *dim_counts.entry(*d).or_default() += 1;
    }
    let passed = dims.len() == sector_total && sum_sq == n * n;
    Ok(CheckResult::new(
        "census",
        passed,
        json!({
            "simples": dims.len(),
            "sector_irreducibles": sector_total,
            "sum_of_squares": sum_sq,
            "dims": dim_counts,
            "sector_ranks": ranks,
        }),
        Some(format!("{} simples, {sector_total} sector irreducibles, Σd² = {sum_sq}", dims.len())),
    ))
}

/// Rank of every twisted sector ring, required to be 3 off the identity and
/// `|G|` at the identity.
fn sector_ranks(data: &TwistData) -> Result<CheckResult> {
    let grp = data.group();
    let e = grp.identity();
    let bad = grp.elements().find(|&g| {
        let rank = data.sector_table(data.family().conjugacy().representative_of(g)).len();
        rank != if g == e { grp.order() } else { 3 }
    });
    Ok(CheckResult::new(
        "sector_ranks",
        bad.is_none(),
        json!({ "identity": data.sector_table(e).len() }),
        bad.map(|g| format!("g = {}", grp.label(g))),
    ))
}

/// Generator-level transgression formulas for every `g`, the kernel
/// membership of the lemma polynomial, the cross-product identity for every
/// `(g, h)`, and the two-variable no-go.
pub fn modp_identities(p: u64) -> Result<(bool, Value, Option<String>)> {
    use modp::{bockstein, cross, double_transgress, lemma_polynomial, poly_transgress, GradedPoly};
    let vectors: Vec<Vec<u64>> =
        (0..p * p * p).map(|v| vec![v % p, (v / p) % p, v / (p * p)]).collect();
    let x = |i: usize| GradedPoly::x(p, 3, i);
    let y = |i: usize| GradedPoly::y(p, 3, i);
    let mut checks = 0u64;
    for g in &vectors {
        for i in 1..=3 {
            for j in 1..=3 {
                checks += 3;
                let xx = x(i)?.mul(&x(j)?);
                if !poly_transgress(&xx, g)?.is_zero() {
                    return Ok((false, Value::Null, Some(format!("tau_{g:?}(x{i} x{j}) != 0"))));
                }
                let xy = x(i)?.mul(&y(j)?);
                if poly_transgress(&xy, g)? != x(i)?.scale(g[j - 1] as i64) {
                    return Ok((false, Value::Null, Some(format!("tau_{g:?}(x{i} y{j})"))));
                }
                let yy = y(i)?.mul(&y(j)?);
                let expected = y(i)?.scale(g[j - 1] as i64).sub(&y(j)?.scale(g[i - 1] as i64));
                if poly_transgress(&yy, g)? != expected {
                    return Ok((false, Value::Null, Some(format!("tau_{g:?}(y{i} y{j})"))));
                }
            }
        }
    }
    let q = lemma_polynomial(p)?;
    let beta_zero = bockstein(&q)?.is_zero();
    for g in &vectors {
        for h in &vectors {
            checks += 1;
            let c = cross(g, h, p);
            let mut expected = GradedPoly::zero(p, 3)?;
            for (i, &ci) in c.iter().enumerate() {
                expected = expected.add(&x(i + 1)?.scale(ci as i64));
            }
            if double_transgress(&q, g, h)? != expected {
                return Ok((false, Value::Null, Some(format!("lemma identity at g={g:?} h={h:?}"))));
            }
        }
    }
    let search = modp::transgression_search(p, 2, 4)?;
    let no_go = !search.is_empty() && search.iter().all(|e| !e.transgression_nontrivial);
    let passed = beta_zero && no_go;
    Ok((
        passed,
        json!({ "checks": checks, "lemma_in_kernel": beta_zero, "rank2_kernel_size": search.len(), "rank2_no_go": no_go }),
        (!passed).then(|| "kernel membership or two-variable no-go failed".to_string()),
    ))
}
