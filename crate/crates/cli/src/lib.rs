//! Report building behind the `trace-toolkit` binary.
//!
//! Every command returns a [`Report`]: an echo of the input, a tree of
//! results and a list of named assertions. Hard assertions decide the exit
//! code; report-only ones (open questions) never do.

use std::fmt::Debug;
use std::path::PathBuf;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Map, Value};
use thiserror::Error;

use trace_toolkit::families::minimal_multiplicity_suite;
use trace_toolkit::hibi::{parse_poset, FinitePoset};
use trace_toolkit::monomial::{segre_trace, veronese_trace_witness, SqVeronese};
use trace_toolkit::sweep::{
    has_minimal_multiplicity_lifts, minimal_multiplicity_lifts, minimal_multiplicity_record,
    subtree_roots, walk_tree, EnumerateSummary, SmallSemigroup,
};
use trace_toolkit::three_gen::{matrix_invariants, shift_threshold, trace_conductor_classifier};
use trace_toolkit::{
    arithmetic_family, canonical_trace, count_poset_ideals, hibi_classify, ng_report,
    poset_structure, shift_analysis, FamilyError, MonomialError, NumericalSemigroup, PosetError,
    RelativeIdeal, SemigroupError, SweepError, ThreeGenError, DEFAULT_MAX_FROBENIUS,
};

pub const SCHEMA: &str = "trace-toolkit/1";
pub const MAX_FROBENIUS_ENV: &str = "TRACE_TOOLKIT_MAX_FROBENIUS";

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 2;
pub const EXIT_ASSERTION: i32 = 3;

/// Trees below this Frobenius number are split into one task per node.
const SPLIT_AT: i64 = 14;
/// Failures kept verbatim in scan reports.
const MAX_EXAMPLES: usize = 10;
/// Order ideals counted before giving up.
const IDEAL_COUNT_CAP: u64 = 10_000_000;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Semigroup(#[from] SemigroupError),
    #[error(transparent)]
    ThreeGen(#[from] ThreeGenError),
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Monomial(#[from] MonomialError),
    #[error(transparent)]
    Poset(#[from] PosetError),
    #[error(transparent)]
    Sweep(#[from] SweepError),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

fn variant_name(e: &impl Debug) -> String {
    let s = format!("{e:?}");
    s.split(|c: char| !c.is_alphanumeric() && c != '_')
        .next()
        .unwrap_or_default()
        .to_string()
}

impl CliError {
    /// Name of the underlying error variant, e.g. `NonCoprime`.
    pub fn kind(&self) -> String {
        match self {
            CliError::Semigroup(e)
            | CliError::ThreeGen(ThreeGenError::Semigroup(e))
            | CliError::Family(FamilyError::Semigroup(e)) => variant_name(e),
            CliError::ThreeGen(e) => variant_name(e),
            CliError::Family(e) => variant_name(e),
            CliError::Monomial(e) => variant_name(e),
            CliError::Poset(e) => variant_name(e),
            CliError::Sweep(e) => variant_name(e),
            CliError::InvalidParams(_) => "InvalidParams".into(),
            CliError::Io { .. } => "Io".into(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    ReportOnly,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::ReportOnly => "report-only",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Assertion {
    pub name: String,
    pub status: Status,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub command: String,
    pub input: Value,
    pub results: Value,
    pub assertions: Vec<Assertion>,
}

impl Report {
    fn new(command: &str, input: Value) -> Self {
        Report {
            command: command.into(),
            input,
            results: Value::Object(Map::new()),
            assertions: Vec::new(),
        }
    }

    fn set(&mut self, key: &str, value: Value) {
        self.results
            .as_object_mut()
            .expect("results is an object")
            .insert(key.into(), value);
    }

    fn check(&mut self, name: &str, ok: bool, detail: impl Into<String>) {
        self.assertions.push(Assertion {
            name: name.into(),
            status: if ok { Status::Pass } else { Status::Fail },
            detail: detail.into(),
        });
    }

    fn report_only(&mut self, name: &str, detail: impl Into<String>) {
        self.assertions.push(Assertion {
            name: name.into(),
            status: Status::ReportOnly,
            detail: detail.into(),
        });
    }

    pub fn assertion(&self, name: &str) -> Option<&Assertion> {
        self.assertions.iter().find(|a| a.name == name)
    }

    /// All hard assertions pass.
    pub fn passed(&self) -> bool {
        self.assertions.iter().all(|a| a.status != Status::Fail)
    }

    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            EXIT_OK
        } else {
            EXIT_ASSERTION
        }
    }

    pub fn to_json(&self) -> Value {
        let assertions: Vec<Value> = self
            .assertions
            .iter()
            .map(|a| json!({"name": a.name, "status": a.status.as_str(), "detail": a.detail}))
            .collect();
        json!({
            "schema": SCHEMA,
            "command": self.command,
            "input": self.input,
            "results": self.results,
            "assertions": assertions,
        })
    }

    /// Pretty JSON with keys sorted, newline-terminated.
    pub fn render_json(&self) -> String {
        render_value(&self.to_json())
    }

    pub fn render_text(&self) -> String {
        let mut out = format!("{}\n", self.command);
        let mut lines = Vec::new();
        flatten("", &self.input, &mut lines);
        out += "input:\n";
        for l in lines.drain(..) {
            out += &format!("  {l}\n");
        }
        flatten("", &self.results, &mut lines);
        out += "results:\n";
        for l in lines {
            out += &format!("  {l}\n");
        }
        out += "assertions:\n";
        for a in &self.assertions {
            let tag = match a.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::ReportOnly => "REPORT",
            };
            out += &format!("  {tag} {}: {}\n", a.name, a.detail);
        }
        let count = |s| self.assertions.iter().filter(|a| a.status == s).count();
        out += &format!(
            "summary: {} pass, {} fail, {} report-only\n",
            count(Status::Pass),
            count(Status::Fail),
            count(Status::ReportOnly)
        );
        out
    }
}

/// `serde_json` keeps object keys sorted, so rendering is canonical.
pub fn render_value(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values always serialize");
    s.push('\n');
    s
}

/// Parses a rendered report and renders it again.
pub fn rerender(text: &str) -> Result<String, serde_json::Error> {
    Ok(render_value(&serde_json::from_str(text)?))
}

fn is_scalar(v: &Value) -> bool {
    !matches!(v, Value::Array(_) | Value::Object(_))
}

fn inline(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn flatten(prefix: &str, v: &Value, out: &mut Vec<String>) {
    let join = |k: &str| {
        if prefix.is_empty() {
            k.to_string()
        } else {
            format!("{prefix}.{k}")
        }
    };
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                flatten(&join(k), x, out);
            }
        }
        Value::Array(xs) if xs.iter().any(|x| x.is_object()) => {
            for (i, x) in xs.iter().enumerate() {
                let fields: Vec<String> = match x {
                    Value::Object(m) => m.iter().map(|(k, y)| format!("{k}={}", inline(y))).collect(),
                    other => vec![inline(other)],
                };
                out.push(format!("{prefix}[{i}]: {}", fields.join(" ")));
            }
        }
        _ if is_scalar(v) || v.is_array() => out.push(format!("{prefix}: {}", inline(v))),
        _ => unreachable!(),
    }
}

fn to_json(v: &impl Serialize) -> Value {
    serde_json::to_value(v).expect("report types serialize")
}

fn unavailable(reason: impl ToString) -> Value {
    json!({"available": false, "reason": reason.to_string()})
}

/// Splits arguments on commas and whitespace: `5,6,7`, `"5 6 7"` and
/// `5 6 7` all give `[5, 6, 7]`.
pub fn parse_generators(args: &[String]) -> Result<Vec<i64>, CliError> {
    let gens = args
        .iter()
        .flat_map(|a| a.split(|c: char| c == ',' || c.is_whitespace()))
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<i64>()
                .map_err(|_| CliError::InvalidParams(format!("not an integer: {t:?}")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    if gens.is_empty() {
        return Err(SemigroupError::EmptyInput.into());
    }
    Ok(gens)
}

/// The Frobenius safety bound, from the environment or the default.
pub fn max_frobenius_from_env() -> Result<i64, CliError> {
    match std::env::var(MAX_FROBENIUS_ENV) {
        Ok(v) => v.trim().parse::<i64>().ok().filter(|&b| b >= 0).ok_or_else(|| {
            CliError::InvalidParams(format!("{MAX_FROBENIUS_ENV} must be a nonnegative integer, got {v:?}"))
        }),
        Err(_) => Ok(DEFAULT_MAX_FROBENIUS),
    }
}

pub fn cmd_semigroup(raw: &[i64], matrix: bool, max_frobenius: i64) -> Result<Report, CliError> {
    let h = NumericalSemigroup::with_max_frobenius(raw, max_frobenius)?;
    let mut r = Report::new(
        "semigroup",
        json!({"generators": raw, "matrix": matrix, "max_frobenius": max_frobenius}),
    );
    let inv = h.invariants();
    let sym = h.classify();
    let ct = canonical_trace(&h);
    let ng = ng_report(&h);
    let pf = h.pseudo_frobenius();

    r.set("generators", json!(h.generators()));
    r.set("multiplicity", json!(inv.multiplicity));
    r.set("embedding_dimension", json!(inv.embedding_dimension));
    r.set("frobenius", json!(inv.frobenius));
    r.set("conductor", json!(inv.conductor_number));
    r.set("genus", json!(inv.genus));
    r.set("n_of_h", json!(inv.n_of_h));
    r.set("pseudo_frobenius", json!(pf));
    r.set("type", json!(h.type_number()));
    r.set("apery", json!(h.apery_of_multiplicity()));
    r.set("classification", to_json(&sym));
    r.set(
        "trace",
        json!({
            "canonical_generators": ct.canonical.minimal_generators(),
            "anticanonical_generators": ct.anticanonical.minimal_generators(),
            "trace_generators": ct.trace.minimal_generators(),
            "residue": ng.residue,
            "nearly_gorenstein": ng.nearly_gorenstein,
            "trace_is_conductor": ng.trace_is_conductor,
            "trace_is_maximal": ct.trace == RelativeIdeal::maximal(&h),
        }),
    );

    r.check(
        "trace_containments",
        ng.containment_ok,
        "conductor ideal ⊆ trace ⊆ H, and trace ⊆ M unless symmetric",
    );
    r.check(
        "residue_at_most_n",
        ng.bound_n_ok,
        format!("res = {} ≤ n(H) = {}", ng.residue, ng.n_of_h),
    );
    r.check(
        "residue_zero_iff_symmetric",
        (ng.residue == 0) == sym.symmetric,
        format!("res = {}, symmetric = {}", ng.residue, sym.symmetric),
    );
    r.check(
        "nearly_gorenstein_iff_residue_at_most_one",
        ng.nearly_gorenstein == (ng.residue <= 1),
        format!("res = {}, maximal ideal in trace = {}", ng.residue, ng.nearly_gorenstein),
    );
    let counts = 2 * inv.genus == inv.frobenius + pf.len() as i64;
    r.check(
        "almost_symmetric_iff_genus_count",
        sym.almost_symmetric == counts,
        format!("2g = {}, Fr + type = {}", 2 * inv.genus, inv.frobenius + pf.len() as i64),
    );
    r.report_only(
        "question_residue_at_most_g_minus_n",
        format!(
            "res = {} vs g − n = {}: {}",
            ng.residue,
            inv.genus - inv.n_of_h,
            if ng.question_gn_ok { "holds" } else { "violated" }
        ),
    );

    if inv.has_minimal_multiplicity && inv.multiplicity >= 2 {
        let s = minimal_multiplicity_suite(&h)?;
        r.set("minimal_multiplicity", to_json(&s));
        r.check(
            "minimal_multiplicity_pf_formula",
            s.pf_formula_ok,
            "PF = {nᵢ − n₁ : i ≥ 2}",
        );
        r.check(
            "minimal_multiplicity_ng_iff_almost_symmetric",
            s.equivalence_ok && s.pairing_matches_classify,
            format!("nearly Gorenstein = {}, almost symmetric = {}", s.nearly_gorenstein, s.almost_symmetric),
        );
    }

    if inv.embedding_dimension == 3 && !sym.symmetric {
        let c = trace_conductor_classifier(&h)?;
        r.check(
            "trace_is_conductor_iff_3_3a1_3a2",
            c.by_formula == c.by_trace,
            format!("generators of that shape = {}, trace = conductor = {}", c.by_formula, c.by_trace),
        );
    }

    if matrix {
        if inv.embedding_dimension != 3 {
            r.set("matrix", unavailable("the structure matrix needs exactly three generators"));
        } else if sym.symmetric {
            r.set("matrix", unavailable(ThreeGenError::SymmetricInput));
        } else {
            let mi = matrix_invariants(&h)?;
            let m = mi.matrix;
            r.set(
                "matrix",
                json!({
                    "a": m.a,
                    "b": m.b,
                    "c": m.c,
                    "d": m.d(),
                    "residue": mi.residue_formula,
                    "frobenius": mi.frobenius_from_matrix,
                    "row_products": m.row_products(),
                    "quoted_genus_candidates": m.genus_candidates(),
                }),
            );
            r.check(
                "matrix_residue",
                mi.residue_formula == mi.residue_brute,
                format!("d₁d₂d₃ = {}, brute = {}", mi.residue_formula, mi.residue_brute),
            );
            r.check(
                "matrix_frobenius",
                mi.frobenius_from_matrix == mi.frobenius_brute,
                format!("matrix = {}, brute = {}", mi.frobenius_from_matrix, mi.frobenius_brute),
            );
            r.check(
                "genus_identity_row_products",
                mi.genus_identity_ok,
                "2g − (Fr + 1) = min{a₁a₂a₃, b₁b₂b₃}",
            );
            r.check("matrix_residue_at_most_g_minus_n", mi.residue_bound_ok, "res ≤ g − n");
            r.report_only(
                "genus_identity_quoted_candidates",
                format!(
                    "2g − (Fr + 1) ∈ {{a₁b₁c₁, a₂b₂c₂}} = {:?}: {}",
                    m.genus_candidates(),
                    mi.genus_candidates_ok
                ),
            );
        }
    }
    Ok(r)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ScanKind {
    /// `H_j = ⟨j, j+a, j+b⟩` for `j` in `(2k, 2k + periods·b]`.
    Shift { a: i64, b: i64, periods: i64 },
    MinMult { frobenius_max: i64 },
    /// `⟨a, a+d, …, a+(e−1)d⟩` for `3 ≤ e ≤ a ≤ a_max`, `1 ≤ d ≤ d_max`.
    Arithmetic { a_max: i64, d_max: i64 },
    Enumerate { frobenius_max: i64 },
}

fn pool(threads: Option<usize>) -> Result<rayon::ThreadPool, CliError> {
    if threads == Some(0) {
        return Err(CliError::InvalidParams("--threads must be at least 1".into()));
    }
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads.unwrap_or(0))
        .build()
        .map_err(|e| CliError::InvalidParams(format!("cannot start {threads:?} threads: {e}")))
}

pub fn cmd_scan(kind: &ScanKind, threads: Option<usize>) -> Result<Report, CliError> {
    let pool = pool(threads)?;
    pool.install(|| match *kind {
        ScanKind::Shift { a, b, periods } => scan_shift(a, b, periods),
        ScanKind::MinMult { frobenius_max } => scan_minmult(frobenius_max),
        ScanKind::Arithmetic { a_max, d_max } => scan_arithmetic(a_max, d_max),
        ScanKind::Enumerate { frobenius_max } => scan_enumerate(frobenius_max),
    })
}

fn scan_shift(a: i64, b: i64, periods: i64) -> Result<Report, CliError> {
    if !(0 < a && a < b) || periods < 1 {
        return Err(CliError::InvalidParams(format!(
            "need 0 < a < b and periods >= 1, got a={a}, b={b}, periods={periods}"
        )));
    }
    let k = shift_threshold(a, b);
    let s = shift_analysis(a, b, Some((2 * k + 1, 2 * k + periods * b)))?;
    let mut r = Report::new("scan shift", json!({"a": a, "b": b, "periods": periods}));
    r.set("gcd", json!(s.gcd));
    r.set("threshold", json!(s.threshold));
    r.set("period", json!(s.period));
    r.set("records", to_json(&s.records));
    r.set("failures", json!(s.failures));
    let n = s.records.len();
    let window = format!("{n} shifts j in ({}, {}]", 2 * k, 2 * k + periods * b);
    r.check("residue_periodic_in_b", s.periodicity_ok, format!("res(H_j) = res(H_(j+b)) on {window}"));
    r.check("symmetric_iff_period_divides_j", s.symmetry_period_ok, format!("T = {} on {window}", s.period));
    r.check("residue_divisibility", s.divisibility_ok, format!("(b − a)a/D² divides res on {window}"));
    r.check("residue_cubic_bound", s.bound_ok, format!("27D³ res < 8b³ on {window}"));
    Ok(r)
}

#[derive(Default)]
struct MinMultTally {
    instances: u64,
    nearly_gorenstein: u64,
    almost_symmetric: u64,
    equivalence_pass: u64,
    pairing_pass: u64,
    pf_formula_pass: u64,
    failures: Vec<Vec<i64>>,
}

impl MinMultTally {
    fn record(&mut self, h: &SmallSemigroup) {
        let rec = minimal_multiplicity_record(h);
        self.instances += 1;
        self.nearly_gorenstein += rec.nearly_gorenstein as u64;
        self.almost_symmetric += rec.almost_symmetric as u64;
        self.equivalence_pass += (rec.nearly_gorenstein == rec.almost_symmetric) as u64;
        self.pairing_pass += (rec.generator_pairing == rec.almost_symmetric) as u64;
        self.pf_formula_pass += rec.pf_formula_ok as u64;
        if !rec.all_ok() && self.failures.len() < MAX_EXAMPLES {
            self.failures.push(h.generators());
        }
    }

    fn merge(mut self, other: MinMultTally) -> Self {
        self.instances += other.instances;
        self.nearly_gorenstein += other.nearly_gorenstein;
        self.almost_symmetric += other.almost_symmetric;
        self.equivalence_pass += other.equivalence_pass;
        self.pairing_pass += other.pairing_pass;
        self.pf_formula_pass += other.pf_formula_pass;
        let room = MAX_EXAMPLES.saturating_sub(self.failures.len());
        self.failures.extend(other.failures.into_iter().take(room));
        self
    }
}

fn scan_minmult(frobenius_max: i64) -> Result<Report, CliError> {
    // parts are merged in root order, so the output does not depend on scheduling
    let roots = subtree_roots(frobenius_max, SPLIT_AT)?;
    let parts: Vec<MinMultTally> = roots
        .par_iter()
        .map(|&(root, below)| {
            let mut t = MinMultTally::default();
            let keep = |s: &SmallSemigroup| has_minimal_multiplicity_lifts(s, frobenius_max);
            let mut lift = |s: &SmallSemigroup| {
                minimal_multiplicity_lifts(s, frobenius_max, |h| t.record(h))
            };
            if below {
                walk_tree(root, frobenius_max, keep, &mut lift);
            } else if keep(&root) {
                lift(&root);
            }
            t
        })
        .collect();
    let t = parts.into_iter().fold(MinMultTally::default(), MinMultTally::merge);

    let mut r = Report::new("scan minmult", json!({"frobenius_max": frobenius_max}));
    r.set("instances", json!(t.instances));
    r.set("nearly_gorenstein", json!(t.nearly_gorenstein));
    r.set("almost_symmetric", json!(t.almost_symmetric));
    r.set("equivalence_pass", json!(t.equivalence_pass));
    r.set("generator_pairing_pass", json!(t.pairing_pass));
    r.set("pf_formula_pass", json!(t.pf_formula_pass));
    r.set("failures", json!(t.failures));
    let of = |k: u64| format!("{k} of {} minimal-multiplicity semigroups with Fr ≤ {frobenius_max}", t.instances);
    r.check("ng_iff_almost_symmetric", t.equivalence_pass == t.instances, of(t.equivalence_pass));
    r.check("generator_pairing_matches_nari", t.pairing_pass == t.instances, of(t.pairing_pass));
    r.check("pf_formula", t.pf_formula_pass == t.instances, of(t.pf_formula_pass));
    Ok(r)
}

fn scan_arithmetic(a_max: i64, d_max: i64) -> Result<Report, CliError> {
    if a_max < 3 || d_max < 1 {
        return Err(CliError::InvalidParams(format!(
            "need a_max >= 3 and d_max >= 1, got a_max={a_max}, d_max={d_max}"
        )));
    }
    let params: Vec<(i64, i64, i64)> = (3..=a_max)
        .flat_map(|a| {
            (1..=d_max)
                .filter(move |&d| trace_toolkit::semigroup::gcd(a, d) == 1)
                .flat_map(move |d| (3..=a).map(move |e| (a, d, e)))
        })
        .collect();
    let families = params
        .par_iter()
        .map(|&(a, d, e)| arithmetic_family(a, d, e))
        .collect::<Result<Vec<_>, _>>()?;

    let mut r = Report::new("scan arithmetic", json!({"a_max": a_max, "d_max": d_max}));
    let records: Vec<Value> = params
        .iter()
        .zip(&families)
        .map(|(&(a, d, e), f)| {
            json!({
                "a": a, "d": d, "e": e,
                "tau": f.tau,
                "frobenius": f.frobenius,
                "symmetric": f.symmetric,
                "almost_symmetric": f.almost_symmetric,
                "nearly_gorenstein": f.nearly_gorenstein,
                "ok": f.all_ok(),
            })
        })
        .collect();
    let n = families.len();
    let count = |p: fn(&trace_toolkit::families::ArithmeticFamily) -> bool| families.iter().filter(|f| p(f)).count();
    r.set("instances", json!(n));
    r.set("records", Value::Array(records));
    let of = |k: usize| format!("{k} of {n} instances");
    let ng = count(|f| f.nearly_gorenstein);
    r.check("nearly_gorenstein", ng == n, of(ng));
    let pf = count(|f| f.pf_ok && f.frobenius_ok);
    r.check("pf_formula", pf == n, of(pf));
    let s = count(|f| f.symmetric_ok);
    r.check("symmetric_iff_a_2_mod_e_minus_1", s == n, of(s));
    let a = count(|f| f.almost_symmetric_ok);
    r.check("almost_symmetric_iff_a_eq_e_or_symmetric", a == n, of(a));
    Ok(r)
}

fn scan_enumerate(frobenius_max: i64) -> Result<Report, CliError> {
    let roots = subtree_roots(frobenius_max, SPLIT_AT)?;
    let parts: Vec<EnumerateSummary> = roots
        .par_iter()
        .map(|&(root, below)| {
            let mut s = EnumerateSummary::new(frobenius_max);
            if below {
                walk_tree(root, frobenius_max, |_| true, |h| s.record(h));
            } else {
                s.record(&root);
            }
            s
        })
        .collect();
    let mut s = EnumerateSummary::new(frobenius_max);
    for p in parts {
        s.merge(p);
    }
    enumerate_report(&s)
}

fn enumerate_report(s: &EnumerateSummary) -> Result<Report, CliError> {
    let mut r = Report::new("scan enumerate", json!({"frobenius_max": s.max_frobenius}));
    r.set("summary", to_json(s));
    let all = format!("{} semigroups with Fr ≤ {}", s.semigroups, s.max_frobenius);
    r.check(
        "trace_containments",
        s.containment_failures == 0,
        format!("{} failures among {all}", s.containment_failures),
    );
    r.check(
        "residue_at_most_n",
        s.bound_n_failures == 0,
        format!("{} failures among {all}", s.bound_n_failures),
    );
    r.report_only(
        "question_residue_at_most_g_minus_n",
        format!("{} violations among {all}", s.question_gn_violations),
    );
    Ok(r)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlgebraKind {
    Hibi { path: PathBuf },
    SqVero { n: usize, d: usize },
    Segre { r: usize, s: usize },
    Veronese { n: usize, d: usize, j: usize },
}

pub fn cmd_algebra(kind: &AlgebraKind) -> Result<Report, CliError> {
    match kind {
        AlgebraKind::Hibi { path } => {
            let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
                path: path.display().to_string(),
                source,
            })?;
            let parsed = parse_poset(&text)?;
            let mut r = hibi_report(&parsed.poset)?;
            r.input = json!({"file": path.display().to_string()});
            r.set("warnings", json!(parsed.warnings));
            Ok(r)
        }
        &AlgebraKind::SqVero { n, d } => sqvero_report(n, d),
        &AlgebraKind::Segre { r, s } => segre_report(r, s),
        &AlgebraKind::Veronese { n, d, j } => {
            let holds = veronese_trace_witness(n, d, j)?;
            let mut r = Report::new("algebra veronese", json!({"n": n, "d": d, "j": j}));
            r.set("witness", json!(holds));
            r.check(
                "maximal_ideal_in_trace_of_module",
                holds,
                format!("every degree-{d} monomial in {n} variables splits through M_{j}"),
            );
            Ok(r)
        }
    }
}

/// Classification record of the Hibi ring of `p`.
pub fn hibi_report(p: &FinitePoset) -> Result<Report, CliError> {
    let c = hibi_classify(p)?;
    let s = poset_structure(p);
    let mut r = Report::new("algebra hibi", json!({}));
    r.set("elements", json!(p.len()));
    r.set("covers", json!(p.covers().len()));
    r.set(
        "structure",
        json!({
            "components": s.components,
            "rank": s.rank,
            "component_ranks": s.component_ranks,
            "components_pure": s.components_pure,
            "is_pure": s.is_pure,
            "interval_purity_ok": s.interval_purity_ok,
        }),
    );
    r.set("classification", to_json(&c));
    r.set(
        "order_ideals",
        match count_poset_ideals(p, IDEAL_COUNT_CAP) {
            Ok(k) => json!({"count": k, "exact": true}),
            Err(PosetError::CapExceeded(cap)) => json!({"count": cap, "exact": false}),
            Err(e) => return Err(e.into()),
        },
    );
    r.check("gorenstein_iff_pure", c.gorenstein == s.is_pure, format!("pure = {}", s.is_pure));
    r.check(
        "nearly_gorenstein_implies_interval_purity",
        !c.nearly_gorenstein || s.interval_purity_ok,
        format!("interval purity = {}", s.interval_purity_ok),
    );
    r.check(
        "a_invariant",
        c.a_invariant == -(s.rank as i64) - 2,
        format!("a = {} with rank {}", c.a_invariant, s.rank),
    );
    Ok(r)
}

fn sqvero_report(n: usize, d: usize) -> Result<Report, CliError> {
    let v = SqVeronese::new(n, d)?;
    let c = v.classify();
    let mut r = Report::new("algebra sqvero", json!({"n": n, "d": d}));
    let binomial = (0..d).fold(1u64, |acc, i| acc * (n - i) as u64 / (i + 1) as u64);
    r.set("algebra_generators", json!(binomial));
    r.set(
        "classification",
        json!({"gorenstein": c.gorenstein, "nearly_gorenstein": c.nearly_gorenstein}),
    );
    r.set(
        "omega",
        match v.omega_generators() {
            Ok(o) => json!({
                "candidates": o.pre_prune,
                "minimal_generators": o.generators.len(),
                "generators": o.generators,
            }),
            Err(e) => unavailable(e),
        },
    );
    r.set(
        "anticanonical",
        match v.anticanonical_generators() {
            Ok(a) => {
                let patterns: Vec<Vec<u32>> = a.p_set.iter().map(|p| p.support_pattern()).collect();
                json!({
                    "squarefree_part": a.squarefree_part.len(),
                    "p_set": patterns,
                    "numerators": a.numerators().count(),
                })
            }
            Err(e) => unavailable(e),
        },
    );
    r.check(
        "nearly_gorenstein_iff_gorenstein",
        c.nearly_gorenstein == c.gorenstein,
        format!("gorenstein = {}", c.gorenstein),
    );
    match c.trace_gap_witness {
        Some(w) => {
            r.set(
                "trace_gap_witness",
                json!({
                    "computed_on": [w.computed_on.0, w.computed_on.1],
                    "min_product_degree": w.min_product_degree,
                    "required": w.required,
                    "holds": w.holds,
                }),
            );
            r.check(
                "trace_starts_above_generator_degree",
                w.holds,
                format!(
                    "least ω·ω⁻¹ degree {} ≥ {} > {} on R_({},{})",
                    w.min_product_degree, w.required, w.computed_on.1, w.computed_on.0, w.computed_on.1
                ),
            );
        }
        None if !c.gorenstein => {
            r.set("trace_gap_witness", unavailable("outside n ≥ 2d ≥ 4"));
        }
        None => {}
    }
    Ok(r)
}

fn segre_report(r_vars: usize, s_vars: usize) -> Result<Report, CliError> {
    let t = segre_trace(r_vars, s_vars)?;
    let mut r = Report::new("algebra segre", json!({"r": r_vars, "s": s_vars}));
    let gap = (t.r - t.s) as u32;
    r.set("omega_generators", json!(t.omega_generators.len()));
    r.set("anticanonical_generators", json!(t.anticanonical_generators.len()));
    r.set("trace_generators", json!(t.trace_generators.len()));
    r.set(
        "trace_power",
        match t.trace_equals_power {
            Some(p) => json!(p),
            None => unavailable("the trace is not a power of the maximal ideal"),
        },
    );
    r.set("colength", json!(t.colength));
    r.set("nearly_gorenstein", json!(t.trace_equals_power.is_some_and(|p| p <= 1)));
    r.set("gorenstein", json!(t.trace_equals_power == Some(0)));
    r.check(
        "trace_is_power_r_minus_s",
        t.trace_equals_power == Some(gap),
        match t.trace_equals_power {
            Some(p) => format!("trace = m^{p}, expected m^{gap}"),
            None => format!("trace is not a power of m, expected m^{gap}"),
        },
    );
    Ok(r)
}


#[cfg(doctest)]
#[doc = include_str!("../../../book/src/cli.md")]
mod book {}
