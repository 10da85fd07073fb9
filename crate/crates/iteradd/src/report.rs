//! Machine-readable and tabular reports. All numbers are exact: integers
//! that may exceed 64 bits and all rationals are strings (`"a/b"`).

use std::collections::BTreeMap;
use std::fmt::Write as _;

use iteradd_core::dynamics::{RhoScan, ScanTag};
use iteradd_core::splitting::Route;
use iteradd_core::{
    AffinePoly, CStatus, CompanionCertificate, FactorStatsReport, FieldCtx, LinearizedFormula, PeriodicReport,
    SplittingReport,
};
use serde::Serialize;

use crate::format;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    Table,
    Json,
    Csv,
}

pub trait Report: Serialize {
    fn table(&self) -> String;
    fn csv_header(&self) -> Vec<&'static str>;
    fn csv_rows(&self) -> Vec<Vec<String>>;

    fn render(&self, fmt: OutputFormat) -> String {
        match fmt {
            OutputFormat::Table => self.table(),
            OutputFormat::Json => {
                let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
                s.push('\n');
                s
            }
            OutputFormat::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(self.csv_header()).expect("in-memory csv");
                for row in self.csv_rows() {
                    w.write_record(&row).expect("in-memory csv");
                }
                String::from_utf8(w.into_inner().expect("in-memory csv")).expect("utf-8")
            }
        }
    }
}

pub fn field_text(f: &FieldCtx) -> String {
    let m: Vec<String> = f.modulus().iter().map(|c| c.to_string()).collect();
    format!("p={} r={} mod={}", f.p(), f.degree(), m.join(","))
}

fn route_name(r: Route) -> &'static str {
    match r {
        Route::Dense => "dense",
        Route::Linearized => "linearized",
        Route::Matrix => "matrix",
        Route::Exceptional => "exceptional",
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SplitRow {
    pub n: u64,
    pub s: u64,
    pub ratio: String,
    pub ladder: Option<u32>,
    pub route: &'static str,
    #[serde(skip)]
    approx: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct SplitOutput {
    pub field: String,
    pub poly: String,
    pub exceptional: bool,
    pub rows: Vec<SplitRow>,
    pub min_ratio: String,
    pub max_ratio: String,
    pub violations: Vec<String>,
}

impl SplitOutput {
    pub fn new(f: &FieldCtx, rep: &SplittingReport) -> SplitOutput {
        let rows = rep
            .entries
            .iter()
            .map(|e| SplitRow {
                n: e.n,
                s: e.s,
                ratio: format::ratio_u64(&e.ratio),
                ladder: e.ladder,
                route: route_name(e.route),
                approx: format::approx_u64(&e.ratio),
            })
            .collect();
        SplitOutput {
            field: field_text(f),
            poly: format::affine(&rep.poly),
            exceptional: rep.poly.is_exceptional(),
            rows,
            min_ratio: format::ratio_u64(&rep.min_ratio),
            max_ratio: format::ratio_u64(&rep.max_ratio),
            violations: rep.violations.clone(),
        }
    }
}

impl Report for SplitOutput {
    fn table(&self) -> String {
        let mut out = format!("field {}\npoly  {}\n", self.field, self.poly);
        if self.exceptional {
            out.push_str("exceptional form a*x^(p^h) (+ b): every iterate splits over F_q, s = 1\n");
        }
        let _ = writeln!(out, "{:>6} {:>10} {:>14} {:>10} {:>7}  route", "n", "s", "s/n", "", "ladder");
        for r in &self.rows {
            let ladder = r.ladder.map_or("-".to_string(), |i| i.to_string());
            let _ = writeln!(out, "{:>6} {:>10} {:>14} {:>10} {:>7}  {}", r.n, r.s, r.ratio, r.approx, ladder, r.route);
        }
        let _ = writeln!(out, "s/n range [{}, {}]", self.min_ratio, self.max_ratio);
        for v in &self.violations {
            let _ = writeln!(out, "VIOLATION {v}");
        }
        out
    }

    fn csv_header(&self) -> Vec<&'static str> {
        vec!["n", "s", "ratio", "ladder", "route"]
    }

    fn csv_rows(&self) -> Vec<Vec<String>> {
        self.rows
            .iter()
            .map(|r| {
                vec![
                    r.n.to_string(),
                    r.s.to_string(),
                    r.ratio.clone(),
                    r.ladder.map_or(String::new(), |i| i.to_string()),
                    r.route.to_string(),
                ]
            })
            .collect()
    }
}

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CValue {
    Exact { value: String },
    Bracket { lower: String, upper: String, n_max: u64 },
}

#[derive(Clone, Debug, Serialize)]
pub struct LinearizedOutput {
    pub f: String,
    pub stripped: usize,
    pub f0: String,
    #[serde(rename = "E")]
    pub order: u64,
    pub e: u64,
    pub c_a: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct CertificateOutput {
    pub field: String,
    pub poly: String,
    #[serde(rename = "M")]
    pub m_split: u64,
    pub s0: u64,
    pub r: u64,
    pub a_star: String,
    pub witness: String,
    pub nilpotent: bool,
    pub formula_valid: bool,
    pub c_a: CValue,
    pub formula: Option<String>,
    pub linearized: Option<LinearizedOutput>,
}

impl CertificateOutput {
    pub fn new(b: &AffinePoly, cert: &CompanionCertificate, lin: Option<&LinearizedFormula>) -> CertificateOutput {
        let f = b.field();
        let c_a = match &cert.c_a {
            CStatus::Exact(v) => CValue::Exact { value: format::ratio_u64(v) },
            CStatus::Bracket { lower, upper, n_max } => CValue::Bracket {
                lower: format::ratio_u64(lower),
                upper: format::ratio_u64(upper),
                n_max: *n_max,
            },
        };
        let formula = cert.formula_valid.then(|| {
            let (m, p, s0) = (cert.m_split, cert.p, cert.s0);
            if s0 == 1 {
                format!("s_A(n) = {m}·{p}^⌈log_{p} n⌉ for n ≥ 2")
            } else {
                format!("s_A(n) = {m}·{p}^⌈log_{p}(n/{s0})⌉ for n > {s0}")
            }
        });
        let linearized = lin.map(|l| LinearizedOutput {
            f: format::dense(&l.f),
            stripped: l.stripped,
            f0: format::dense(&l.f0),
            order: l.order,
            e: l.e,
            c_a: l.c_a,
        });
        CertificateOutput {
            field: field_text(f),
            poly: format::affine(b),
            m_split: cert.m_split,
            s0: cert.s0,
            r: cert.r,
            a_star: format::additive(&cert.a_star),
            witness: format::additive(&cert.witness),
            nilpotent: cert.nilpotent,
            formula_valid: cert.formula_valid,
            c_a,
            formula,
            linearized,
        }
    }

    fn c_text(&self) -> String {
        match &self.c_a {
            CValue::Exact { value } => value.clone(),
            CValue::Bracket { lower, upper, n_max } => {
                format!("in [{lower}, {upper}] (upper bound at n ≤ {n_max}, convergence unproven)")
            }
        }
    }
}

impl Report for CertificateOutput {
    fn table(&self) -> String {
        let mut out = format!("field     {}\npoly      {}\n", self.field, self.poly);
        let _ = writeln!(out, "M         {}", self.m_split);
        let _ = writeln!(out, "s0        {}", self.s0);
        let _ = writeln!(out, "r         {}", self.r);
        let _ = writeln!(out, "A_*       {}", self.a_star);
        let _ = writeln!(out, "A_* = R^q with R = {}", self.witness);
        let _ = writeln!(out, "nilpotent {}", self.nilpotent);
        let _ = writeln!(out, "c_A = {}", self.c_text());
        match &self.formula {
            Some(f) => {
                let _ = writeln!(out, "{f}");
            }
            None => out.push_str("closed formula not valid (nilpotent companion)\n"),
        }
        if let Some(l) = &self.linearized {
            let _ = writeln!(out, "q-linearized: f = {}, f = x^{}·F", l.f, l.stripped);
            let _ = writeln!(out, "  f0 = {}, E = {}, e = {}, c_A = E·e = {}", l.f0, l.order, l.e, l.c_a);
        }
        out
    }

    fn csv_header(&self) -> Vec<&'static str> {
        vec!["M", "s0", "r", "a_star", "nilpotent", "formula_valid", "c_a", "E", "e"]
    }

    fn csv_rows(&self) -> Vec<Vec<String>> {
        let (big_e, e) = self
            .linearized
            .as_ref()
            .map_or((String::new(), String::new()), |l| (l.order.to_string(), l.e.to_string()));
        vec![vec![
            self.m_split.to_string(),
            self.s0.to_string(),
            self.r.to_string(),
            self.a_star.clone(),
            self.nilpotent.to_string(),
            self.formula_valid.to_string(),
            self.c_text(),
            big_e,
            e,
        ]]
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PeriodicRow {
    pub n: u64,
    pub delta: u64,
    pub pi: String,
    pub proportion: String,
    pub orbit_checked: bool,
    pub subsequence: Option<String>,
    #[serde(skip)]
    approx: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct PeriodicOutput {
    pub field: String,
    pub poly: String,
    #[serde(rename = "M")]
    pub m_split: Option<u64>,
    #[serde(rename = "N")]
    pub big_n: Option<u64>,
    pub lower_bound: Option<String>,
    pub rows: Vec<PeriodicRow>,
}

impl PeriodicOutput {
    pub fn new(b: &AffinePoly, rep: &PeriodicReport) -> PeriodicOutput {
        let rows = rep
            .entries
            .iter()
            .zip(&rep.tags)
            .map(|(e, tag)| PeriodicRow {
                n: e.n,
                delta: e.delta,
                pi: e.pi.to_string(),
                proportion: format::ratio_big(&e.proportion),
                orbit_checked: e.orbit_checked,
                approx: format::approx_big(&e.proportion),
                subsequence: subsequence_text(tag),
            })
            .collect();
        PeriodicOutput {
            field: field_text(b.field()),
            poly: format::affine(b),
            m_split: rep.m_split,
            big_n: rep.big_n,
            lower_bound: rep.lower_bound.as_ref().map(format::ratio_big),
            rows,
        }
    }
}

fn subsequence_text(tag: &ScanTag) -> Option<String> {
    let mut parts = Vec::new();
    if let Some(t) = tag.coprime {
        parts.push(format!("M·t, t = {t}"));
    }
    if let Some(i) = tag.p_power {
        parts.push(format!("M·p^i, i = {i}"));
    }
    (!parts.is_empty()).then(|| parts.join("; "))
}

impl Report for PeriodicOutput {
    fn table(&self) -> String {
        let mut out = format!("field {}\npoly  {}\n", self.field, self.poly);
        if let (Some(m), Some(n), Some(lb)) = (self.m_split, self.big_n, &self.lower_bound) {
            let _ = writeln!(out, "M = {m}, N = {n}, lower bound p^(-dN) = {lb}");
        }
        let _ = writeln!(out, "{:>5} {:>6} {:>14} {:>18} {:>11}  {:<6} subsequence", "n", "delta", "pi", "pi/q^n", "", "orbits");
        for r in &self.rows {
            let _ = writeln!(
                out,
                "{:>5} {:>6} {:>14} {:>18} {:>11}  {:<6} {}",
                r.n,
                r.delta,
                r.pi,
                r.proportion,
                r.approx,
                if r.orbit_checked { "yes" } else { "-" },
                r.subsequence.as_deref().unwrap_or("")
            );
        }
        out
    }

    fn csv_header(&self) -> Vec<&'static str> {
        vec!["n", "delta", "pi", "proportion", "orbit_checked", "subsequence"]
    }

    fn csv_rows(&self) -> Vec<Vec<String>> {
        self.rows
            .iter()
            .map(|r| {
                vec![
                    r.n.to_string(),
                    r.delta.to_string(),
                    r.pi.clone(),
                    r.proportion.clone(),
                    r.orbit_checked.to_string(),
                    r.subsequence.clone().unwrap_or_default(),
                ]
            })
            .collect()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct FactorRow {
    pub n: u64,
    pub s: u64,
    pub roots: String,
    #[serde(rename = "N")]
    pub big_n: String,
    pub rho: String,
    pub rho_over_n: String,
    pub exact_counts: BTreeMap<u64, String>,
    pub factor_counts: BTreeMap<u64, String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct FactorOutput {
    pub field: String,
    pub poly: String,
    pub method: String,
    pub rows: Vec<FactorRow>,
    pub min_rho_over_n: String,
    pub max_rho_over_n: String,
}

impl FactorOutput {
    pub fn new(b: &AffinePoly, method: &str, scan: &RhoScan) -> FactorOutput {
        let rows = scan.reports.iter().map(factor_row).collect();
        FactorOutput {
            field: field_text(b.field()),
            poly: format::affine(b),
            method: method.to_string(),
            rows,
            min_rho_over_n: format::ratio_big(&scan.min_rho_over_n),
            max_rho_over_n: format::ratio_big(&scan.max_rho_over_n),
        }
    }
}

fn factor_row(r: &FactorStatsReport) -> FactorRow {
    FactorRow {
        n: r.n,
        s: r.s,
        roots: r.roots.to_string(),
        big_n: r.big_n.to_string(),
        rho: format::ratio_big(&r.rho),
        rho_over_n: format::ratio_big(&r.rho_over_n()),
        exact_counts: r.exact_counts.iter().map(|(&d, c)| (d, c.to_string())).collect(),
        factor_counts: r.factor_counts.iter().map(|(&d, c)| (d, c.to_string())).collect(),
    }
}

fn degree_list(m: &BTreeMap<u64, String>) -> String {
    m.iter().map(|(d, c)| format!("{d}:{c}")).collect::<Vec<_>>().join(" ")
}

impl Report for FactorOutput {
    fn table(&self) -> String {
        let mut out = format!("field  {}\npoly   {}\nmethod {}\n", self.field, self.poly, self.method);
        let _ = writeln!(out, "{:>4} {:>6} {:>12} {:>10} {:>14} {:>14}  factors by degree", "n", "s", "roots", "N", "rho", "rho/n");
        for r in &self.rows {
            let _ = writeln!(
                out,
                "{:>4} {:>6} {:>12} {:>10} {:>14} {:>14}  {}",
                r.n,
                r.s,
                r.roots,
                r.big_n,
                r.rho,
                r.rho_over_n,
                degree_list(&r.factor_counts)
            );
        }
        let _ = writeln!(out, "rho/n range [{}, {}]", self.min_rho_over_n, self.max_rho_over_n);
        out
    }

    fn csv_header(&self) -> Vec<&'static str> {
        vec!["n", "s", "roots", "N", "rho", "rho_over_n", "factor_counts"]
    }

    fn csv_rows(&self) -> Vec<Vec<String>> {
        self.rows
            .iter()
            .map(|r| {
                vec![
                    r.n.to_string(),
                    r.s.to_string(),
                    r.roots.clone(),
                    r.big_n.clone(),
                    r.rho.clone(),
                    r.rho_over_n.clone(),
                    degree_list(&r.factor_counts),
                ]
            })
            .collect()
    }
}
