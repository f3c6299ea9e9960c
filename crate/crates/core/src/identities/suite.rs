use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::io::{self, Write};

use rayon::prelude::*;

use super::catalog::{IdentityTag, Inputs, Variant};
use super::{check_identity, IdentityParams, IdentityReport, Verdict};
use crate::arith::{rat, ratio};
use crate::Rational;

/// Finite parameter grid. `a_set` also supplies `a1`, `a2` and `r`; `x_set`
/// supplies `x1` and `x2`. Every ordered pair is generated, including equal
/// ones, which the pair identities then skip.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Grid {
    pub m_set: Vec<Rational>,
    pub a_set: Vec<Rational>,
    pub x_set: Vec<Rational>,
    pub n_max: u32,
}

impl Grid {
    pub fn new(
        m_set: Vec<Rational>,
        a_set: Vec<Rational>,
        x_set: Vec<Rational>,
        n_max: u32,
    ) -> Self {
        let clean = |mut v: Vec<Rational>| {
            v.sort();
            v.dedup();
            v
        };
        Grid {
            m_set: clean(m_set),
            a_set: clean(a_set),
            x_set: clean(x_set),
            n_max,
        }
    }

    /// m in {1,2,3}, a in {-2,...,2}, n <= 10, x in {-1/2, 1/2, 1, 2, 5/3}.
    pub fn default_grid() -> Self {
        Grid::new(
            (1..=3).map(rat).collect(),
            (-2..=2).map(rat).collect(),
            vec![ratio(-1, 2), ratio(1, 2), rat(1), rat(2), ratio(5, 3)],
            10,
        )
    }

    pub fn is_empty(&self) -> bool {
        self.m_set.is_empty() || self.a_set.is_empty() || self.x_set.is_empty()
    }

    /// Every parameter point an identity with the given inputs is checked at.
    pub fn points(&self, inputs: Inputs) -> Vec<IdentityParams> {
        let mut points: Vec<IdentityParams> =
            (0..=self.n_max).map(IdentityParams::with_n).collect();
        let expand =
            |points: Vec<IdentityParams>,
             values: &[Rational],
             set: &dyn Fn(IdentityParams, &Rational) -> IdentityParams| {
                points
                    .into_iter()
                    .flat_map(|p| values.iter().map(move |v| (p.clone(), v)))
                    .map(|(p, v)| set(p, v))
                    .collect::<Vec<_>>()
            };
        if inputs.has(Inputs::M) {
            points = expand(points, &self.m_set, &|p, v| p.m(v.clone()));
        }
        if inputs.has(Inputs::A) {
            points = expand(points, &self.a_set, &|p, v| p.a(v.clone()));
        }
        if inputs.has(Inputs::A_PAIR) {
            points = expand(points, &self.a_set, &|mut p, v| {
                p.a1 = Some(v.clone());
                p
            });
            points = expand(points, &self.a_set, &|mut p, v| {
                p.a2 = Some(v.clone());
                p
            });
        }
        if inputs.has(Inputs::R) {
            points = expand(points, &self.a_set, &|p, v| p.r(v.clone()));
        }
        if inputs.has(Inputs::X) {
            points = expand(points, &self.x_set, &|p, v| p.x(v.clone()));
        }
        if inputs.has(Inputs::X_PAIR) {
            points = expand(points, &self.x_set, &|mut p, v| {
                p.x1 = Some(v.clone());
                p
            });
            points = expand(points, &self.x_set, &|mut p, v| {
                p.x2 = Some(v.clone());
                p
            });
        }
        points
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VariantSelection {
    AsPrinted,
    Corrected,
    Both,
}

impl VariantSelection {
    /// Single-form tags are always checked in their one form.
    pub fn variants_for(self, tag: IdentityTag) -> Vec<Variant> {
        let available = tag.variants();
        if available.len() == 1 {
            return available.to_vec();
        }
        match self {
            VariantSelection::AsPrinted => vec![Variant::AsPrinted],
            VariantSelection::Corrected => vec![Variant::Corrected],
            VariantSelection::Both => available.to_vec(),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SummaryRow {
    pub holds: usize,
    pub fails: usize,
    pub skipped: usize,
    pub unexpected: usize,
}

#[derive(Clone, Debug)]
pub struct SuiteResult {
    /// Sorted by id, then variant, then parameters.
    pub reports: Vec<IdentityReport>,
    pub summary: BTreeMap<(IdentityTag, Variant), SummaryRow>,
}

impl SuiteResult {
    pub fn all_expected(&self) -> bool {
        self.summary.values().all(|row| row.unexpected == 0)
    }

    pub fn unexpected(&self) -> impl Iterator<Item = &IdentityReport> {
        self.reports.iter().filter(|r| !r.is_expected())
    }

    pub fn write_jsonl<W: Write>(&self, mut out: W) -> io::Result<()> {
        for r in &self.reports {
            writeln!(out, "{}", r.to_json_line())?;
        }
        Ok(())
    }

    pub fn render_summary(&self) -> String {
        let mut text = String::new();
        let _ = writeln!(
            text,
            "{:<14} {:<11} {:>6} {:>6} {:>7} {:>10}",
            "id", "variant", "holds", "fails", "skipped", "unexpected"
        );
        for ((id, variant), row) in &self.summary {
            let _ = writeln!(
                text,
                "{:<14} {:<11} {:>6} {:>6} {:>7} {:>10}",
                id.name(),
                variant.name(),
                row.holds,
                row.fails,
                row.skipped,
                row.unexpected
            );
        }
        let total: usize = self.summary.values().map(|r| r.unexpected).sum();
        let _ = writeln!(text, "{} reports, {} unexpected", self.reports.len(), total);
        text
    }
}

/// Checks every requested identity at every grid point it consumes.
pub fn run_suite(grid: &Grid, ids: &[IdentityTag], variants: VariantSelection) -> SuiteResult {
    let jobs: Vec<(IdentityTag, Variant, IdentityParams)> = ids
        .iter()
        .flat_map(|&tag| {
            let points = grid.points(tag.entry().inputs);
            variants
                .variants_for(tag)
                .into_iter()
                .flat_map(move |v| points.clone().into_iter().map(move |p| (tag, v, p)))
        })
        .collect();

    let mut reports: Vec<IdentityReport> = jobs
        .into_par_iter()
        .map(|(tag, v, p)| check_identity(tag, v, &p).expect("variant taken from the catalog"))
        .collect();
    reports.sort_by(|l, r| (l.id, l.variant, &l.params).cmp(&(r.id, r.variant, &r.params)));

    let mut summary: BTreeMap<(IdentityTag, Variant), SummaryRow> = BTreeMap::new();
    for r in &reports {
        let row = summary.entry((r.id, r.variant)).or_default();
        match r.verdict {
            Verdict::Holds => row.holds += 1,
            Verdict::Fails => row.fails += 1,
            Verdict::Skipped => row.skipped += 1,
        }
        if !r.is_expected() {
            row.unexpected += 1;
        }
    }
    SuiteResult { reports, summary }
}
