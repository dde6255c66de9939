//! Closed-form location-domination numbers for functigraph families and a
//! harness that checks each formula against the exact solver.

use std::fmt;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::functigraph::{Functigraph, FunctionClass, FunctionKind, FunctionMap, Signature};
use crate::generators::{
    all_maps, connected_graph_classes, make_family, make_map, signatures, FamilySpec, HVertexKind,
    MapSpec,
};
use crate::graph::Graph;
use crate::solver::{lambda_exact, SolveOptions, SolveResult};

/// `λ(F)` for the complete graph `K_n` under any map with signature `sig`.
pub fn predicted_lambda_complete(n: usize, sig: &Signature) -> Result<usize> {
    if n < 2 {
        return Err(Error::Hypothesis(format!(
            "complete-graph formulas need n >= 2, got {n}"
        )));
    }
    if sig.order() != n {
        return Err(Error::InvalidSignature(format!(
            "{sig} does not sum to {n}"
        )));
    }
    let class = FunctionClass::of(sig);
    let k = class.k;
    Ok(match class.kind {
        FunctionKind::Constant if n == 2 => 2,
        FunctionKind::Constant => 2 * n - 3,
        FunctionKind::Bijective if n <= 3 => n,
        FunctionKind::Bijective => n - 1,
        // Without singleton preimages every part is >= 2 and there are at
        // least two parts below n, which forces n >= 4.
        FunctionKind::MidNoMatching => 2 * n - k - 2,
        // n = 3 with 1 < k < 3 is only (2,1), which has a matching.
        FunctionKind::MidWithMatching if n == 3 => 3,
        FunctionKind::MidWithMatching => 2 * n - k - 2,
    })
}

/// `λ(F)` for `H_i` under a constant map whose target has the given kind.
pub fn predicted_lambda_hi(n: usize, i: usize, kind: HVertexKind) -> Result<usize> {
    if n < 4 {
        return Err(Error::Hypothesis(format!(
            "H_i formulas need n >= 4, got {n}"
        )));
    }
    let half = n / 2;
    if i < 1 || i > half {
        return Err(Error::Hypothesis(format!("need 1 <= i <= {half}, got {i}")));
    }
    if kind == HVertexKind::Saturated && n <= 2 * i {
        return Err(Error::Hypothesis(format!(
            "H_i with n={n}, i={i} has no saturated vertex"
        )));
    }
    Ok(if n == 4 {
        4
    } else if i < half {
        match kind {
            HVertexKind::Saturated => 2 * n - 2 * i - 3,
            HVertexKind::TwinPair => 2 * n - 2 * i - 2,
        }
    } else if n % 2 == 0 {
        n - 1
    } else {
        2 * half
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Interval {
    pub lo: usize,
    pub hi: usize,
}

impl Interval {
    pub fn contains(&self, v: usize) -> bool {
        self.lo <= v && v <= self.hi
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.lo, self.hi)
    }
}

/// A base graph and map that attain one end of the bounds interval.
#[derive(Clone, Debug)]
pub struct Sharpness {
    pub base: Graph,
    pub map: FunctionMap,
    pub value: usize,
}

#[derive(Clone, Debug)]
pub struct BoundsPrediction {
    pub interval: Interval,
    /// `P_3` with the identity map.
    pub lower: Sharpness,
    /// `K_{1,n-1}` with the constant map onto the center.
    pub upper: Sharpness,
}

/// `3 <= λ(F) <= 2n - 2` for every connected base graph of order `n >= 3`.
pub fn predicted_bounds_functigraph(n: usize) -> Result<BoundsPrediction> {
    if n < 3 {
        return Err(Error::Hypothesis(format!("bounds need n >= 3, got {n}")));
    }
    let interval = Interval {
        lo: 3,
        hi: 2 * n - 2,
    };
    Ok(BoundsPrediction {
        interval,
        lower: Sharpness {
            base: make_family(FamilySpec::Path { n: 3 })?,
            map: FunctionMap::identity(3)?,
            value: 3,
        },
        upper: Sharpness {
            base: make_family(FamilySpec::Star { n })?,
            map: FunctionMap::constant(n, 0)?,
            value: 2 * n - 2,
        },
    })
}

/// What a report row expects of the computed value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "type", content = "value", rename_all = "snake_case")]
pub enum Predicted {
    Exact(usize),
    Within(Interval),
    AtLeast(usize),
    NotEqual(usize),
}

impl Predicted {
    pub fn admits(&self, v: usize) -> bool {
        match *self {
            Predicted::Exact(x) => v == x,
            Predicted::Within(iv) => iv.contains(v),
            Predicted::AtLeast(x) => v >= x,
            Predicted::NotEqual(x) => v != x,
        }
    }
}

impl fmt::Display for Predicted {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Predicted::Exact(x) => write!(f, "{x}"),
            Predicted::Within(iv) => write!(f, "{iv}"),
            Predicted::AtLeast(x) => write!(f, ">={x}"),
            Predicted::NotEqual(x) => write!(f, "!={x}"),
        }
    }
}

/// Observed value: a single λ or the range over a sweep.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "type", content = "value", rename_all = "snake_case")]
pub enum Computed {
    Value(usize),
    Range(Interval),
}

impl Computed {
    fn satisfies(&self, p: &Predicted) -> bool {
        match (self, p) {
            (Computed::Value(v), _) => p.admits(*v),
            (Computed::Range(r), Predicted::Within(iv)) => iv.contains(r.lo) && iv.contains(r.hi),
            (Computed::Range(r), _) => r.lo == r.hi && p.admits(r.lo),
        }
    }
}

impl fmt::Display for Computed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Computed::Value(v) => write!(f, "{v}"),
            Computed::Range(r) => write!(f, "{r}"),
        }
    }
}

/// One solvable instance with its predicted value.
#[derive(Clone, Debug)]
pub struct TheoremCase {
    pub id: &'static str,
    pub base: FamilySpec,
    pub map: MapSpec,
    /// Solve the base graph itself instead of its functigraph.
    pub base_only: bool,
    pub params: String,
    pub predicted: Predicted,
    /// The formula the prediction comes from.
    pub anchor: &'static str,
}

impl TheoremCase {
    pub fn order(&self) -> usize {
        match self.base {
            FamilySpec::Complete { n }
            | FamilySpec::Star { n }
            | FamilySpec::Path { n }
            | FamilySpec::Cycle { n }
            | FamilySpec::HGraph { n, .. } => n,
            FamilySpec::PendantGap { t } => t + 2,
        }
    }

    pub fn solve(&self) -> Result<SolveResult> {
        let base = make_family(self.base)?;
        let graph = if self.base_only {
            base
        } else {
            let map = make_map(base.order(), &self.map)?;
            Functigraph::build(&base, &map)?.into_graph()
        };
        lambda_exact(&graph, SolveOptions::default())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ReportRow {
    pub case_id: String,
    pub n: usize,
    pub params: String,
    pub predicted: Predicted,
    pub computed: Computed,
    #[serde(rename = "match")]
    pub matched: bool,
    pub millis: f64,
    pub witness: Option<Vec<usize>>,
    pub anchor: String,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub matched: usize,
    pub mismatched: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub rows: Vec<ReportRow>,
    pub summary: Summary,
}

#[derive(Serialize)]
struct CsvRow<'a> {
    case_id: &'a str,
    n: usize,
    params: &'a str,
    predicted: String,
    computed: String,
    #[serde(rename = "match")]
    matched: bool,
    millis: String,
}

impl Report {
    fn new(rows: Vec<ReportRow>) -> Self {
        let matched = rows.iter().filter(|r| r.matched).count();
        let summary = Summary {
            total: rows.len(),
            matched,
            mismatched: rows.len() - matched,
        };
        Self { rows, summary }
    }

    pub fn all_match(&self) -> bool {
        self.summary.mismatched == 0
    }

    pub fn rows_for(&self, id: &str) -> impl Iterator<Item = &ReportRow> {
        let id = id.to_string();
        self.rows.iter().filter(move |r| r.case_id == id)
    }

    /// Columns `case_id,n,params,predicted,computed,match,millis`.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        for r in &self.rows {
            w.serialize(CsvRow {
                case_id: &r.case_id,
                n: r.n,
                params: &r.params,
                predicted: r.predicted.to_string(),
                computed: r.computed.to_string(),
                matched: r.matched,
                millis: format!("{:.3}", r.millis),
            })
            .expect("in-memory csv write");
        }
        String::from_utf8(w.into_inner().expect("flush to vec")).expect("utf-8 csv")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{:<30} {:>3}  {:<28} {:>9} {:>9}  {:<5} {:>9}",
            "case", "n", "params", "predicted", "computed", "match", "ms"
        )?;
        for r in &self.rows {
            writeln!(
                f,
                "{:<30} {:>3}  {:<28} {:>9} {:>9}  {:<5} {:>9.2}",
                r.case_id,
                r.n,
                r.params,
                r.predicted.to_string(),
                r.computed.to_string(),
                if r.matched { "ok" } else { "FAIL" },
                r.millis
            )?;
        }
        write!(
            f,
            "{} rows, {} match, {} mismatch",
            self.summary.total, self.summary.matched, self.summary.mismatched
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyConfig {
    pub n_max_complete: usize,
    pub n_max_hi: usize,
    pub n_max_bounds: usize,
    pub include_gap_lemma: bool,
    pub t_max: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            n_max_complete: 7,
            n_max_hi: 9,
            n_max_bounds: 5,
            include_gap_lemma: true,
            t_max: 4,
        }
    }
}

/// Canonical-map cases for every signature of every `n` in `2..=n_max`.
pub fn complete_cases(n_max: usize) -> Vec<TheoremCase> {
    let mut cases = Vec::new();
    for n in 2..=n_max {
        for sig in signatures(n) {
            let class = FunctionClass::of(&sig);
            let (id, anchor) = match class.kind {
                FunctionKind::Constant => ("complete-constant", "2n-3 (n>=3); 2 (n=2)"),
                FunctionKind::Bijective => ("complete-bijective", "n-1 (n>=4); n (n<=3)"),
                FunctionKind::MidNoMatching => ("complete-mid-no-matching", "2n-k-2"),
                FunctionKind::MidWithMatching => {
                    ("complete-mid-matching", "2n-k-2 (n>=4); 3 (n=3)")
                }
            };
            let predicted = predicted_lambda_complete(n, &sig).expect("valid signature");
            cases.push(TheoremCase {
                id,
                base: FamilySpec::Complete { n },
                params: format!("sig={sig} k={} p={}", class.k, class.p),
                map: MapSpec::Signature(sig.parts().to_vec()),
                base_only: false,
                predicted: Predicted::Exact(predicted),
                anchor,
            });
        }
    }
    cases
}

/// Constant-map cases on `H_i` for `4 <= n <= n_max`, all `i`, all targets.
pub fn hi_cases(n_max: usize) -> Vec<TheoremCase> {
    let mut cases = Vec::new();
    for n in 4..=n_max {
        for i in 1..=n / 2 {
            for target in 0..n {
                let kind = HVertexKind::of(i, target);
                let (id, anchor) = if n == 4 {
                    ("hi-order-four", "4")
                } else if i < n / 2 {
                    match kind {
                        HVertexKind::Saturated => ("hi-saturated", "2n-2i-3"),
                        HVertexKind::TwinPair => ("hi-twin-pair", "2n-2i-2"),
                    }
                } else if n % 2 == 0 {
                    ("hi-even-perfect", "n-1")
                } else {
                    ("hi-odd-max", "2*floor(n/2)")
                };
                let predicted = predicted_lambda_hi(n, i, kind).expect("hypotheses hold");
                cases.push(TheoremCase {
                    id,
                    base: FamilySpec::HGraph { n, i },
                    map: MapSpec::Constant(target),
                    base_only: false,
                    params: format!("i={i} target={target} {kind}"),
                    predicted: Predicted::Exact(predicted),
                    anchor,
                });
            }
        }
    }
    cases
}

/// Base graph and constant-to-vertex-0 functigraph of the pendant gap family.
pub fn gap_cases(t_max: usize) -> Vec<TheoremCase> {
    let mut cases = Vec::new();
    for t in 2..=t_max {
        for (id, base_only, predicted, anchor) in [
            ("gap-base", true, t, "t"),
            ("gap-functigraph", false, 2 * t, "2t"),
        ] {
            cases.push(TheoremCase {
                id,
                base: FamilySpec::PendantGap { t },
                map: MapSpec::Constant(0),
                base_only,
                params: format!("t={t}"),
                predicted: Predicted::Exact(predicted),
                anchor,
            });
        }
    }
    cases
}

/// The two ends of the bounds interval for `3 <= n <= n_max`.
pub fn sharpness_cases(n_max: usize) -> Vec<TheoremCase> {
    let mut cases = vec![TheoremCase {
        id: "bounds-lower-sharp",
        base: FamilySpec::Path { n: 3 },
        map: MapSpec::Identity,
        base_only: false,
        params: "P3 identity".into(),
        predicted: Predicted::Exact(3),
        anchor: "3",
    }];
    for n in 3..=n_max {
        cases.push(TheoremCase {
            id: "bounds-upper-sharp",
            base: FamilySpec::Star { n },
            map: MapSpec::Constant(0),
            base_only: false,
            params: "star constant-to-center".into(),
            predicted: Predicted::Exact(2 * n - 2),
            anchor: "2n-2",
        });
    }
    cases
}

fn run_case(case: &TheoremCase) -> ReportRow {
    let start = Instant::now();
    let (computed, witness) = match case.solve() {
        Ok(r) => (Some(r.lambda), Some(r.witness.to_vec())),
        Err(_) => (None, None),
    };
    let matched = computed.is_some_and(|v| case.predicted.admits(v));
    ReportRow {
        case_id: case.id.to_string(),
        n: case.order(),
        params: case.params.clone(),
        predicted: case.predicted,
        // an unsolvable case is reported as 0 and can never match
        computed: Computed::Value(computed.unwrap_or(0)),
        matched,
        millis: start.elapsed().as_secs_f64() * 1e3,
        witness,
        anchor: case.anchor.to_string(),
    }
}

/// Range of `λ(F)` over every connected base graph of order `n` (one per
/// isomorphism class) and every one of the `n^n` maps.
pub fn functigraph_lambda_range(bases: &[Graph]) -> Interval {
    let per_base: Vec<Interval> = bases
        .par_iter()
        .map(|base| {
            let n = base.order();
            let opts = SolveOptions {
                use_twin_pruning: true,
                deterministic_witness: false,
            };
            let mut lo = usize::MAX;
            let mut hi = 0;
            for map in all_maps(n) {
                let f = Functigraph::build(base, &map).expect("connected base");
                let l = lambda_exact(f.graph(), opts)
                    .expect("nonempty graph")
                    .lambda;
                lo = lo.min(l);
                hi = hi.max(l);
            }
            Interval { lo, hi }
        })
        .collect();
    Interval {
        lo: per_base.iter().map(|iv| iv.lo).min().unwrap_or(0),
        hi: per_base.iter().map(|iv| iv.hi).max().unwrap_or(0),
    }
}

fn bounds_rows(n_max: usize) -> Vec<ReportRow> {
    (3..=n_max)
        .map(|n| {
            let start = Instant::now();
            let bases = connected_graph_classes(n);
            let range = functigraph_lambda_range(&bases);
            let predicted =
                Predicted::Within(predicted_bounds_functigraph(n).expect("n >= 3").interval);
            let computed = Computed::Range(range);
            ReportRow {
                case_id: "bounds-sweep".into(),
                n,
                params: format!("graphs={} maps={}", bases.len(), n.pow(n as u32)),
                predicted,
                matched: computed.satisfies(&predicted),
                computed,
                millis: start.elapsed().as_secs_f64() * 1e3,
                witness: None,
                anchor: "3 <= lambda <= 2n-2".into(),
            }
        })
        .collect()
}

/// Rows for the two consequences of the complete-graph formulas, derived from
/// already solved complete-graph rows with `n >= 4`.
///
/// Both are checked for non-bijective maps (`k < n`). A bijective map has
/// `p = n` functi matchings while `λ(F) = n - 1 = λ(K_n)`, so neither
/// statement extends to `k = n`.
fn complete_consequence_rows(complete: &[(TheoremCase, ReportRow)]) -> Vec<ReportRow> {
    let mut rows = Vec::new();
    for (case, row) in complete {
        let n = case.order();
        let MapSpec::Signature(parts) = &case.map else {
            continue;
        };
        let sig = Signature::new(parts.clone()).expect("harness signature");
        let class = FunctionClass::of(&sig);
        if n < 4 || class.k == n {
            continue;
        }
        let Computed::Value(lambda) = row.computed else {
            continue;
        };
        let derived = |id: &str, predicted: Predicted, anchor: &str| ReportRow {
            case_id: id.into(),
            n,
            params: row.params.clone(),
            predicted,
            computed: Computed::Value(lambda),
            matched: predicted.admits(lambda),
            millis: 0.0,
            witness: row.witness.clone(),
            anchor: anchor.into(),
        };
        rows.push(derived(
            "matching-lower-bound",
            Predicted::AtLeast(class.p),
            "lambda >= p",
        ));
        // λ(K_n) = n - 1
        let equality = if class.k == n - 1 {
            Predicted::Exact(n - 1)
        } else {
            Predicted::NotEqual(n - 1)
        };
        rows.push(derived(
            "equality-iff-k-n-minus-1",
            equality,
            "lambda(F) = lambda(K_n) iff k = n-1",
        ));
    }
    rows
}

/// Runs every family sweep and returns rows in canonical order.
pub fn verify_suite(config: &VerifyConfig) -> Report {
    let complete = complete_cases(config.n_max_complete);
    let complete_rows: Vec<ReportRow> = complete.par_iter().map(run_case).collect();
    let paired: Vec<_> = complete
        .into_iter()
        .zip(complete_rows.iter().cloned())
        .collect();

    let mut rows = complete_rows;
    rows.extend(complete_consequence_rows(&paired));
    rows.extend(
        hi_cases(config.n_max_hi)
            .par_iter()
            .map(run_case)
            .collect::<Vec<_>>(),
    );
    if config.n_max_bounds >= 3 {
        rows.extend(bounds_rows(config.n_max_bounds));
        let sharp_max = config.n_max_bounds.max(config.n_max_complete);
        rows.extend(
            sharpness_cases(sharp_max)
                .par_iter()
                .map(run_case)
                .collect::<Vec<_>>(),
        );
    }
    if config.include_gap_lemma {
        rows.extend(
            gap_cases(config.t_max)
                .par_iter()
                .map(run_case)
                .collect::<Vec<_>>(),
        );
    }
    Report::new(rows)
}
