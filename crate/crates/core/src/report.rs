//! Serializable reports and staircase renderings used by the CLI.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideals::{verify_decomposition, DecompositionCheck, IrreducibleComponent, PlaneIdeal};
use crate::overrings::{bijection_check, fibers, BijectionCheck};
use crate::semigroup::NumericalSemigroup;
use crate::sigma::{PlanePoint, SigmaMonoid};
use crate::weyl::{d_algebra_generators, render_symbol};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub schema: u32,
    pub input: Vec<i64>,
    pub semigroup: SemigroupSection,
    pub sigma: SigmaSection,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub blowup_chain: Option<Vec<BlowupStep>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub operators: Option<Vec<OperatorRow>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub decomposition: Option<DecompositionSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub overrings: Option<OverringSection>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemigroupSection {
    pub generators: Vec<i64>,
    pub multiplicity: i64,
    pub frobenius: i64,
    pub conductor: i64,
    pub n: usize,
    pub genus: usize,
    pub gaps: Vec<i64>,
    pub small_elements: Vec<i64>,
    pub pseudo_frobenius: Vec<i64>,
    #[serde(rename = "type")]
    pub semigroup_type: usize,
    pub max_embedding_dimension: bool,
    pub arf: bool,
    pub symmetric: bool,
    pub multiplicity_sequence: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SigmaSection {
    pub mu: usize,
    pub nu: usize,
    pub delta: usize,
    pub box_bound: u32,
    pub minimal_generators: Vec<PlanePoint>,
    pub gaps: Vec<PlanePoint>,
    pub t_sigma: Vec<PlanePoint>,
}

/// One semigroup of the blowup chain. `next_adds_t` records whether the Σ of
/// the next semigroup is exactly `Σ ∪ T(Σ)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlowupStep {
    pub generators: Vec<i64>,
    pub multiplicity: i64,
    pub max_embedding_dimension: bool,
    pub mu: usize,
    pub t_sigma: Vec<PlanePoint>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub next_adds_t: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OperatorRow {
    pub generator: PlanePoint,
    pub symbol: String,
    pub operator: String,
    pub unicode: String,
    pub preserves_ring: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionSection {
    pub ideal_generators: Vec<PlanePoint>,
    pub components: Vec<IrreducibleComponent>,
    pub window: u32,
    pub check: DecompositionCheck,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiberRow {
    pub overring: Vec<i64>,
    pub classes: Vec<Vec<i64>>,
    pub stable: Vec<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OverringSection {
    pub fibers: Vec<FiberRow>,
    pub class_count: usize,
    pub bijection: BijectionCheck,
    pub verdict: String,
}

impl Report {
    /// Semigroup invariants and Σ; the optional sections start empty.
    pub fn new(s: &NumericalSemigroup, input: &[i64]) -> Self {
        let sigma = SigmaMonoid::new(s);
        Self {
            schema: SCHEMA_VERSION,
            input: input.to_vec(),
            semigroup: semigroup_section(s),
            sigma: sigma_section(&sigma),
            blowup_chain: None,
            operators: None,
            decomposition: None,
            overrings: None,
        }
    }

    pub fn with_blowup_chain(mut self, s: &NumericalSemigroup) -> Self {
        self.blowup_chain = Some(blowup_steps(s));
        self
    }

    pub fn with_operators(mut self, s: &NumericalSemigroup) -> Result<Self> {
        self.operators = Some(operator_rows(s)?);
        Ok(self)
    }

    pub fn with_overrings(mut self, s: &NumericalSemigroup) -> Self {
        self.overrings = Some(overring_section(s));
        self
    }

    /// Decomposes the ideal generated by `points` and checks the result on
    /// `[0, window)²` (the ideal's own verification side by default).
    pub fn with_decomposition(
        mut self,
        s: &NumericalSemigroup,
        points: &[PlanePoint],
        window: Option<u32>,
    ) -> Result<Self> {
        self.decomposition = Some(decomposition_section(s, points, window)?);
        Ok(self)
    }

    /// Internal consistency: the generator count, the blowup identities on
    /// MED steps and a passing decomposition check.
    pub fn check_consistency(&self) -> Result<()> {
        let sg = &self.semigroup;
        let sig = &self.sigma;
        let expected = if sg.generators == [1] {
            2
        } else {
            2 * sig.nu + 1 + 2 * sig.delta
        };
        if sig.mu != expected || sig.minimal_generators.len() != sig.mu {
            return Err(Error::Invariant(format!(
                "mu = {} but expected {expected}",
                sig.mu
            )));
        }
        for step in self.blowup_chain.iter().flatten() {
            if step.max_embedding_dimension && step.next_adds_t == Some(false) {
                return Err(Error::Invariant(format!(
                    "blowup of <{}> does not add exactly T(Σ)",
                    join(&step.generators, ",")
                )));
            }
        }
        if let Some(d) = &self.decomposition {
            if !d.check.passed() {
                return Err(Error::Invariant("decomposition check failed".into()));
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    /// Plain-text rendering.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let sg = &self.semigroup;
        let full = sg.generators == [1];
        let _ = writeln!(out, "S = <{}>", join(&sg.generators, ", "));
        if full {
            let _ = writeln!(out, "S is N: no gaps, Σ = N^2 generated by (1,0) and (0,1)");
        } else {
            let _ = writeln!(out, "  multiplicity e = {}", sg.multiplicity);
            let _ = writeln!(
                out,
                "  Frobenius g = {}, conductor = {}",
                sg.frobenius, sg.conductor
            );
            let _ = writeln!(out, "  gaps ({}) = {{{}}}", sg.genus, join(&sg.gaps, ", "));
            let _ = writeln!(
                out,
                "  n = {}, small elements = {{{}}}",
                sg.n,
                join(&sg.small_elements, ", ")
            );
            let _ = writeln!(
                out,
                "  pseudo-Frobenius = {{{}}}, type {}",
                join(&sg.pseudo_frobenius, ", "),
                sg.semigroup_type
            );
            let _ = writeln!(
                out,
                "  MED: {}, Arf: {}, symmetric: {}",
                yes_no(sg.max_embedding_dimension),
                yes_no(sg.arf),
                yes_no(sg.symmetric)
            );
            let _ = writeln!(
                out,
                "  multiplicity sequence: {}",
                join(&sg.multiplicity_sequence, ", ")
            );
        }
        let sig = &self.sigma;
        let _ = writeln!(out, "Σ:");
        let _ = writeln!(
            out,
            "  mu = {} minimal generators (nu = {}, delta = {})",
            sig.mu, sig.nu, sig.delta
        );
        let _ = writeln!(out, "  generators: {}", join(&sig.minimal_generators, " "));
        if !full {
            let _ = writeln!(out, "  gaps ({}): {}", sig.gaps.len(), join(&sig.gaps, " "));
            let _ = writeln!(
                out,
                "  T(Σ) ({}): {}",
                sig.t_sigma.len(),
                join(&sig.t_sigma, " ")
            );
        }
        if let Some(chain) = &self.blowup_chain {
            let _ = writeln!(out, "Blowup chain:");
            for (i, step) in chain.iter().enumerate() {
                let check = match step.next_adds_t {
                    Some(true) => "  next Σ = Σ ∪ T(Σ): yes",
                    Some(false) => "  next Σ = Σ ∪ T(Σ): no",
                    None => "",
                };
                let _ = writeln!(
                    out,
                    "  S_{i} = <{}>  e = {}  mu = {}{check}",
                    join(&step.generators, ","),
                    step.multiplicity,
                    step.mu
                );
                if !step.t_sigma.is_empty() {
                    let _ = writeln!(out, "      T = {}", join(&step.t_sigma, " "));
                }
            }
        }
        if let Some(rows) = &self.operators {
            let _ = writeln!(out, "Operators:");
            out.push_str(&operator_table(rows, false));
        }
        if let Some(d) = &self.decomposition {
            out.push_str(&decomposition_text(d));
        }
        if let Some(o) = &self.overrings {
            out.push_str(&overring_text(o));
        }
        out
    }
}

fn semigroup_section(s: &NumericalSemigroup) -> SemigroupSection {
    SemigroupSection {
        generators: s.generators().to_vec(),
        multiplicity: s.multiplicity(),
        frobenius: s.frobenius(),
        conductor: s.conductor(),
        n: s.n(),
        genus: s.genus(),
        gaps: s.gaps().to_vec(),
        small_elements: s.small_elements().to_vec(),
        pseudo_frobenius: s.pseudo_frobenius().unwrap_or_default(),
        semigroup_type: s.semigroup_type().unwrap_or(0),
        max_embedding_dimension: s.is_max_embedding_dimension(),
        arf: s.is_arf(),
        symmetric: s.is_symmetric(),
        multiplicity_sequence: s.multiplicity_sequence(),
    }
}

fn sigma_section(sigma: &SigmaMonoid) -> SigmaSection {
    let stats = sigma.statistics();
    SigmaSection {
        mu: stats.mu,
        nu: stats.nu,
        delta: stats.delta,
        box_bound: sigma.box_bound(),
        minimal_generators: sigma.minimal_generators().to_vec(),
        gaps: sigma.gaps(),
        t_sigma: sigma.t_sigma().map(<[_]>::to_vec).unwrap_or_default(),
    }
}

/// Whether `next` is exactly `sigma ∪ T(sigma)`.
pub fn adds_exactly_t(sigma: &SigmaMonoid, next: &SigmaMonoid) -> bool {
    let Ok(t) = sigma.t_sigma() else {
        return false;
    };
    let next_gaps = next.gaps();
    let contains_old = next_gaps.iter().all(|&p| !sigma.contains(p));
    let added: Vec<PlanePoint> = sigma
        .gaps()
        .into_iter()
        .filter(|&p| next.contains(p))
        .collect();
    contains_old && added == t
}

fn blowup_steps(s: &NumericalSemigroup) -> Vec<BlowupStep> {
    let chain: Vec<SigmaMonoid> = s
        .blowup_chain()
        .iter()
        .map(|(si, _)| SigmaMonoid::new(si))
        .collect();
    chain
        .iter()
        .enumerate()
        .map(|(i, sigma)| {
            let base = sigma.base();
            BlowupStep {
                generators: base.generators().to_vec(),
                multiplicity: base.multiplicity(),
                max_embedding_dimension: base.is_max_embedding_dimension(),
                mu: sigma.statistics().mu,
                t_sigma: sigma.t_sigma().map(<[_]>::to_vec).unwrap_or_default(),
                next_adds_t: chain.get(i + 1).map(|next| adds_exactly_t(sigma, next)),
            }
        })
        .collect()
}

fn operator_rows(s: &NumericalSemigroup) -> Result<Vec<OperatorRow>> {
    d_algebra_generators(s)
        .into_iter()
        .map(|(p, op)| {
            Ok(OperatorRow {
                generator: p,
                symbol: render_symbol(&op.principal_symbol()?),
                operator: op.to_string(),
                unicode: op.to_unicode(),
                preserves_ring: op.preserves_semigroup_ring(s),
            })
        })
        .collect()
}

fn decomposition_section(
    s: &NumericalSemigroup,
    points: &[PlanePoint],
    window: Option<u32>,
) -> Result<DecompositionSection> {
    if s.is_full() {
        return Err(Error::FullSemigroup);
    }
    let sigma = SigmaMonoid::new(s);
    let ideal = PlaneIdeal::new(&sigma, points)?;
    let components = ideal.decompose()?;
    let window = window.unwrap_or_else(|| ideal.verification_side());
    let check = verify_decomposition(&ideal, &components, window);
    Ok(DecompositionSection {
        ideal_generators: ideal.generators().to_vec(),
        components,
        window,
        check,
    })
}

fn overring_section(s: &NumericalSemigroup) -> OverringSection {
    let rows: Vec<FiberRow> = fibers(s)
        .iter()
        .map(|f| FiberRow {
            overring: f.overring.semigroup().generators().to_vec(),
            classes: f.classes.iter().map(|c| c.gap_pattern()).collect(),
            stable: f.classes.iter().map(|c| c.is_stable()).collect(),
        })
        .collect();
    let bijection = bijection_check(s);
    OverringSection {
        class_count: rows.iter().map(|r| r.classes.len()).sum(),
        fibers: rows,
        bijection,
        verdict: if bijection.bijective {
            "bijective"
        } else {
            "not bijective"
        }
        .into(),
    }
}

/// One line per operator: generator, symbol, operator, and whether it maps
/// `ℂ[S]` into itself.
pub fn operator_table(rows: &[OperatorRow], unicode: bool) -> String {
    let mut out = String::new();
    for row in rows {
        let op = if unicode { &row.unicode } else { &row.operator };
        let flag = if row.preserves_ring {
            ""
        } else {
            "  [does not preserve C[S]]"
        };
        let _ = writeln!(
            out,
            "  {:<8} {:<10} {op}{flag}",
            row.generator.to_string(),
            row.symbol
        );
    }
    out
}

pub fn decomposition_text(d: &DecompositionSection) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "Ideal generated by {}", join(&d.ideal_generators, " "));
    let _ = writeln!(out, "  {} irreducible components:", d.components.len());
    for c in &d.components {
        let _ = writeln!(out, "    {c}");
    }
    let _ = writeln!(
        out,
        "  check on [0,{w})x[0,{w}): intersection {}, irredundant {}",
        yes_no(d.check.sound),
        yes_no(d.check.irredundant),
        w = d.window
    );
    out
}

pub fn overring_text(o: &OverringSection) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "Overrings ({}), ideal classes ({}):",
        o.fibers.len(),
        o.class_count
    );
    for row in &o.fibers {
        let classes: Vec<String> = row
            .classes
            .iter()
            .zip(&row.stable)
            .map(|(c, &st)| format!("{{{}}}{}", join(c, ","), if st { " stable" } else { "" }))
            .collect();
        let _ = writeln!(
            out,
            "  <{}>: {}",
            join(&row.overring, ","),
            classes.join("; ")
        );
    }
    let _ = writeln!(out, "  verdict: {}", o.verdict);
    out
}

/// Cell kinds of the staircase picture.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Cell {
    Member,
    Gap,
    /// a gap in T(Σ)
    TGap,
}

impl Cell {
    fn glyph(self) -> char {
        match self {
            Cell::Member => '#',
            Cell::Gap => '.',
            Cell::TGap => 'o',
        }
    }

    fn fill(self) -> &'static str {
        match self {
            Cell::Member => "#4a6fa5",
            Cell::Gap => "#ffffff",
            Cell::TGap => "#f2b134",
        }
    }
}

/// Rows `b = 0..height`, columns `a = 0..width`.
pub fn staircase_cells(sigma: &SigmaMonoid, width: u32, height: u32) -> Vec<Vec<Cell>> {
    let t = sigma.t_sigma().unwrap_or_default();
    sigma
        .grid(width, height)
        .into_iter()
        .enumerate()
        .map(|(b, row)| {
            row.into_iter()
                .enumerate()
                .map(|(a, member)| {
                    if member {
                        Cell::Member
                    } else if t.contains(&PlanePoint::new(a as u32, b as u32)) {
                        Cell::TGap
                    } else {
                        Cell::Gap
                    }
                })
                .collect()
        })
        .collect()
}

/// Text picture with `b` increasing upwards: `#` member, `o` point of
/// T(Σ), `.` other gap.
pub fn staircase_text(sigma: &SigmaMonoid, width: u32, height: u32) -> String {
    let cells = staircase_cells(sigma, width, height);
    let label = height.saturating_sub(1).to_string().len();
    let mut out = String::new();
    for (b, row) in cells.iter().enumerate().rev() {
        let line: String = row.iter().map(|c| c.glyph()).collect();
        let _ = writeln!(out, "{b:>label$} {line}");
    }
    let _ = writeln!(out, "{:>label$} # member, o T(Σ), . gap", "");
    out
}

/// SVG picture, one `rect` per lattice point.
pub fn staircase_svg(sigma: &SigmaMonoid, width: u32, height: u32) -> String {
    const CELL: u32 = 20;
    let cells = staircase_cells(sigma, width, height);
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{}" height="{}" viewBox="0 0 {0} {1}">"#,
        width * CELL,
        height * CELL
    );
    for (b, row) in cells.iter().enumerate() {
        for (a, cell) in row.iter().enumerate() {
            let y = (height - 1 - b as u32) * CELL;
            let _ = writeln!(
                out,
                r##"  <rect x="{}" y="{y}" width="{CELL}" height="{CELL}" fill="{}" stroke="#999999" data-a="{a}" data-b="{b}"/>"##,
                a as u32 * CELL,
                cell.fill()
            );
        }
    }
    out.push_str("</svg>\n");
    out
}

fn join<T: ToString>(items: &[T], sep: &str) -> String {
    items
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(sep)
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}
