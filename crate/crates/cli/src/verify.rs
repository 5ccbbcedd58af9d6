//! Closed form against explicit construction over a grid of cases.

use std::fmt::Write;

use serde::Serialize;
use sierpinski_core::closed::{randic_closed, randic_oracle, relative_error, Variant, ABS_FLOOR};
use sierpinski_core::{Graph, IndexParams, IndexValue};

/// Evaluates the closed form of one cell. [`verify`] uses [`randic_closed`];
/// tests substitute perturbed formulae to check that failures surface.
pub type Evaluator = dyn Fn(Variant, &Graph, u32, &IndexParams) -> sierpinski_core::Result<IndexValue>;

pub struct VerifyPlan {
    pub graphs: Vec<(String, Graph)>,
    pub variants: Vec<Variant>,
    pub levels: Vec<u32>,
    pub alphas: Vec<f64>,
    pub rel_tol: f64,
    pub budget: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyCell {
    pub graph: String,
    pub variant: &'static str,
    pub t: u32,
    pub alpha: f64,
    pub closed: Option<f64>,
    pub oracle: Option<f64>,
    pub abs_error: Option<f64>,
    pub rel_error: Option<f64>,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub rel_tol: f64,
    pub abs_floor: f64,
    pub passed: usize,
    pub failed: usize,
    pub cells: Vec<VerifyCell>,
}

pub fn verify(plan: &VerifyPlan) -> VerifyReport {
    verify_with(plan, &|variant, g, t, params| randic_closed(variant, g, t, params).map(|r| r.value))
}

pub fn verify_with(plan: &VerifyPlan, closed: &Evaluator) -> VerifyReport {
    let mut cells = Vec::new();
    for (name, g) in &plan.graphs {
        for &variant in &plan.variants {
            for &t in &plan.levels {
                for &alpha in &plan.alphas {
                    cells.push(cell(plan, closed, name, g, variant, t, alpha));
                }
            }
        }
    }
    cells.sort_by(|a, b| {
        (&a.graph, a.variant, a.t)
            .cmp(&(&b.graph, b.variant, b.t))
            .then(a.alpha.total_cmp(&b.alpha))
    });
    let passed = cells.iter().filter(|c| c.pass).count();
    VerifyReport {
        rel_tol: plan.rel_tol,
        abs_floor: ABS_FLOOR,
        passed,
        failed: cells.len() - passed,
        cells,
    }
}

fn cell(
    plan: &VerifyPlan,
    closed: &Evaluator,
    name: &str,
    g: &Graph,
    variant: Variant,
    t: u32,
    alpha: f64,
) -> VerifyCell {
    let mut c = VerifyCell {
        graph: name.to_string(),
        variant: variant.symbol(),
        t,
        alpha,
        closed: None,
        oracle: None,
        abs_error: None,
        rel_error: None,
        pass: false,
        error: None,
    };
    let outcome = IndexParams::new(alpha).and_then(|params| {
        let a = closed(variant, g, t, &params)?.to_f64();
        let b = randic_oracle(variant, g, t, &params, plan.budget)?.value.to_f64();
        Ok((a, b))
    });
    match outcome {
        Ok((a, b)) => {
            let abs = (a - b).abs();
            c.closed = Some(a);
            c.oracle = Some(b);
            c.abs_error = Some(abs);
            c.rel_error = Some(relative_error(a, b));
            c.pass = abs <= (plan.rel_tol * b.abs()).max(ABS_FLOOR);
        }
        Err(e) => c.error = Some(e.to_string()),
    }
    c
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn table(&self) -> String {
        let opt = |x: Option<f64>, prec: bool| match x {
            Some(v) if prec => format!("{v:.12e}"),
            Some(v) => format!("{v:.2e}"),
            None => "-".to_string(),
        };
        let mut out = String::new();
        writeln!(
            out,
            "{:<12} {:>3} {:>4} {:>6} {:>20} {:>20} {:>9} {:>9}  result",
            "graph", "var", "t", "alpha", "closed", "oracle", "abs_err", "rel_err"
        )
        .unwrap();
        for c in &self.cells {
            let result = match (&c.error, c.pass) {
                (Some(e), _) => format!("FAIL ({e})"),
                (None, true) => "ok".to_string(),
                (None, false) => "FAIL".to_string(),
            };
            writeln!(
                out,
                "{:<12} {:>3} {:>4} {:>6} {:>20} {:>20} {:>9} {:>9}  {result}",
                c.graph,
                c.variant,
                c.t,
                c.alpha,
                opt(c.closed, true),
                opt(c.oracle, true),
                opt(c.abs_error, false),
                opt(c.rel_error, false),
            )
            .unwrap();
        }
        writeln!(
            out,
            "{} cells, {} passed, {} failed (rel_tol {:e}, abs floor {:e})",
            self.cells.len(),
            self.passed,
            self.failed,
            self.rel_tol,
            self.abs_floor
        )
        .unwrap();
        out
    }
}
