//! Serializable result types shared by the CLI and the C ABI, their text
//! renderers, and the builders that assemble them from the library's
//! operations. Elements are serialized as sorted lists of basis labels
//! (`1 + b(2)` becomes `[0, 2]`), monomials as sorted lists of variable
//! indices.

use crate::algebra::AlgebraContext;
use crate::error::Result;
use crate::idempotents::{idempotent_family, truncated_idempotent};
use crate::padic::b_parity;
use crate::presentation::Presentation;
use crate::young::endo_basis;
use serde::{Deserialize, Serialize};

pub const FORMAT_VERSION: u32 = 1;

/// Envelope for all structured output.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Document<T> {
    pub format_version: u32,
    pub command: String,
    pub result: T,
}

pub fn document<T>(command: &str, result: T) -> Document<T> {
    Document {
        format_version: FORMAT_VERSION,
        command: command.to_string(),
        result,
    }
}

pub fn to_json<T: Serialize>(doc: &Document<T>) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("reports serialize");
    s.push('\n');
    s
}

/// `1+b(2)` from the label list `[0, 2]`; `0` from the empty list.
pub fn element_text(labels: &[usize]) -> String {
    if labels.is_empty() {
        return "0".to_string();
    }
    labels
        .iter()
        .map(|&i| {
            if i == 0 {
                "1".to_string()
            } else {
                format!("b({i})")
            }
        })
        .collect::<Vec<_>>()
        .join("+")
}

/// `{1,3}` from `[1, 3]`.
fn set_text(set: &[u32]) -> String {
    format!(
        "{{{}}}",
        set.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
    )
}

/// `x1x3` from `[1, 3]`; `1` from the empty list.
pub fn monomial_text(support: &[u32]) -> String {
    if support.is_empty() {
        return "1".to_string();
    }
    support.iter().map(|i| format!("x{i}")).collect()
}

fn flag(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

fn check_line(name: &str, ok: bool) -> String {
    format!("  {name:<24} {}\n", flag(ok))
}

/// Left-aligned column layout with two-space gutters.
fn render_rows(header: &[&str], rows: &[Vec<String>]) -> String {
    let ncols = header.len();
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in rows {
        for (c, cell) in row.iter().enumerate() {
            widths[c] = widths[c].max(cell.len());
        }
    }
    let mut out = String::new();
    let emit = |cells: Vec<String>, out: &mut String| {
        let mut line = String::new();
        for (c, cell) in cells.iter().enumerate() {
            if c > 0 {
                line.push_str("  ");
            }
            line.push_str(cell);
            if c + 1 < ncols {
                line.push_str(&" ".repeat(widths[c] - cell.len()));
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    };
    emit(header.iter().map(|s| s.to_string()).collect(), &mut out);
    for row in rows {
        emit(row.clone(), &mut out);
    }
    out
}

// ---------------------------------------------------------------------------
// Ring-axiom battery.

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraReport {
    pub identity_ok: bool,
    pub commutativity_ok: bool,
    pub associativity_ok: bool,
    pub factorization_ok: bool,
    pub failures: Vec<String>,
}

impl AlgebraReport {
    pub fn pass(&self) -> bool {
        self.identity_ok && self.commutativity_ok && self.associativity_ok && self.factorization_ok
    }
}

// ---------------------------------------------------------------------------
// Idempotent family.

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyRow {
    pub g: u64,
    pub mu: (u64, u64),
    pub i_set: Vec<u32>,
    pub j_set: Vec<u32>,
    pub element: Vec<usize>,
    pub vanished: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimitivityCheck {
    pub g: u64,
    pub corner_dimension: usize,
    /// `None` when the corner was too large to enumerate exhaustively.
    pub idempotent_count: Option<u64>,
    pub skipped: bool,
    pub ok: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyReport {
    pub m: u64,
    pub lambda2: usize,
    pub rows: Vec<FamilyRow>,
    pub idempotency_ok: bool,
    pub orthogonality_ok: bool,
    pub completeness_ok: bool,
    pub vanishing_ok: bool,
    pub truncation_ok: bool,
    pub primitivity: Vec<PrimitivityCheck>,
    pub failures: Vec<String>,
}

impl FamilyReport {
    pub fn primitivity_ok(&self) -> bool {
        self.primitivity.iter().all(|p| p.ok)
    }

    pub fn pass(&self) -> bool {
        self.idempotency_ok
            && self.orthogonality_ok
            && self.completeness_ok
            && self.vanishing_ok
            && self.truncation_ok
            && self.primitivity_ok()
    }
}

// ---------------------------------------------------------------------------
// Corner-algebra checks.

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum InvolvementOutcome {
    /// `e b(2^u) = 0`.
    Zero,
    /// `e b(2^u) = e`.
    Identity,
    /// Anything else would falsify the dichotomy.
    Neither,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvolvementRow {
    pub u: u32,
    pub set: char,
    pub outcome: InvolvementOutcome,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvolvementReport {
    pub m: u64,
    pub g: u64,
    pub rows: Vec<InvolvementRow>,
    pub ok: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SquareZeroRow {
    pub s: u32,
    pub square_is_zero: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SquareZeroReport {
    pub m: u64,
    pub g: u64,
    pub rows: Vec<SquareZeroRow>,
    pub ok: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosureRow {
    pub label: usize,
    pub packed: u64,
    pub nonzero: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosureReport {
    pub m: u64,
    pub g: u64,
    pub rows: Vec<ClosureRow>,
    pub ok: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CornerBasisReport {
    pub m: u64,
    pub g: u64,
    pub dimension: usize,
    pub independent: bool,
    pub span_rank: usize,
    pub spans: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentationData {
    pub n: u64,
    pub k: u32,
    /// Monomial relations beyond the squares, as variable-index lists.
    pub killed: Vec<Vec<u32>>,
    /// Quotient basis monomials, as variable-index lists.
    pub basis: Vec<Vec<u32>>,
    pub text: String,
}

impl From<&Presentation> for PresentationData {
    fn from(p: &Presentation) -> Self {
        PresentationData {
            n: p.n(),
            k: p.k(),
            killed: p.killed().iter().map(|m| m.support().to_vec()).collect(),
            basis: p
                .quotient_basis()
                .iter()
                .map(|m| m.support().to_vec())
                .collect(),
            text: p.text(),
        }
    }
}

impl PresentationData {
    pub fn render_text(&self) -> String {
        let mut out = format!("dimension n = {}, generators k = {}\n", self.n, self.k);
        out.push_str(&format!("presentation: {}\n", self.text));
        out.push_str(&format!(
            "quotient basis: {}\n",
            self.basis
                .iter()
                .map(|m| monomial_text(m))
                .collect::<Vec<_>>()
                .join(", ")
        ));
        if self.killed.is_empty() {
            out.push_str("killed beyond squares: none\n");
        } else {
            out.push_str(&format!(
                "killed beyond squares: {}\n",
                self.killed
                    .iter()
                    .map(|m| monomial_text(m))
                    .collect::<Vec<_>>()
                    .join(", ")
            ));
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentationIsoReport {
    pub m: u64,
    pub g: u64,
    /// Corner dimension.
    pub n: u64,
    /// Number of corner generators.
    pub k: u32,
    /// `2^(k-1) < n <= 2^k`.
    pub bracket_ok: bool,
    pub images_independent: bool,
    pub squares_ok: bool,
    pub killed_ok: bool,
    pub products_ok: bool,
    /// Algebra labels `2^s` of the generators, in variable order.
    pub generator_labels: Vec<usize>,
    pub presentation: PresentationData,
}

impl PresentationIsoReport {
    pub fn pass(&self) -> bool {
        self.bracket_ok
            && self.images_independent
            && self.squares_ok
            && self.killed_ok
            && self.products_ok
    }
}

// ---------------------------------------------------------------------------
// Per-partition verification.

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CornerVerifyReport {
    pub g: u64,
    pub mu: (u64, u64),
    pub dimension: usize,
    pub generators: u32,
    pub basis_ok: bool,
    pub involvement_ok: bool,
    pub squares_ok: bool,
    pub closure_ok: bool,
    pub bracket_ok: bool,
    pub presentation_ok: bool,
    pub presentation_text: String,
}

impl CornerVerifyReport {
    pub fn pass(&self) -> bool {
        self.basis_ok
            && self.involvement_ok
            && self.squares_ok
            && self.closure_ok
            && self.bracket_ok
            && self.presentation_ok
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LambdaVerifyReport {
    pub lambda: (u64, u64),
    pub m: u64,
    pub lambda2: usize,
    pub r: u64,
    pub algebra: AlgebraReport,
    pub generation_ok: bool,
    pub reduction_ok: bool,
    pub family: FamilyReport,
    pub corners: Vec<CornerVerifyReport>,
    pub dimension_partition_ok: bool,
    pub pass: bool,
}

impl LambdaVerifyReport {
    pub fn render_text(&self) -> String {
        let (l1, l2) = self.lambda;
        let mut out = format!(
            "verify lambda = ({l1},{l2})  [m = {}, lambda2 = {}, r = {}]\n",
            self.m, self.lambda2, self.r
        );
        out.push_str(&check_line("identity", self.algebra.identity_ok));
        out.push_str(&check_line("commutativity", self.algebra.commutativity_ok));
        out.push_str(&check_line("associativity", self.algebra.associativity_ok));
        out.push_str(&check_line(
            "digit factorization",
            self.algebra.factorization_ok,
        ));
        out.push_str(&check_line("generation", self.generation_ok));
        out.push_str(&check_line("structure constants", self.reduction_ok));
        out.push_str(&check_line("idempotency", self.family.idempotency_ok));
        out.push_str(&check_line("orthogonality", self.family.orthogonality_ok));
        out.push_str(&check_line("completeness", self.family.completeness_ok));
        out.push_str(&check_line("vanishing criterion", self.family.vanishing_ok));
        out.push_str(&check_line("truncation", self.family.truncation_ok));
        out.push_str(&check_line("primitivity", self.family.primitivity_ok()));
        out.push_str(&check_line(
            "dimension partition",
            self.dimension_partition_ok,
        ));
        for c in &self.corners {
            out.push_str(&format!(
                "  corner g={} mu=({},{}): n={} k={}  basis {}  involvement {}  squares {}  closure {}  bracket {}  presentation {}  {}\n",
                c.g,
                c.mu.0,
                c.mu.1,
                c.dimension,
                c.generators,
                flag(c.basis_ok),
                flag(c.involvement_ok),
                flag(c.squares_ok),
                flag(c.closure_ok),
                flag(c.bracket_ok),
                flag(c.presentation_ok),
                c.presentation_text,
            ));
        }
        for f in self
            .algebra
            .failures
            .iter()
            .chain(self.family.failures.iter())
        {
            out.push_str(&format!("  failure: {f}\n"));
        }
        out.push_str(&format!("result: {}\n", flag(self.pass)));
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifySweepReport {
    pub max_r: u64,
    pub count: usize,
    pub failures: Vec<(u64, u64)>,
    pub lambdas: Vec<LambdaVerifyReport>,
    pub pass: bool,
}

impl VerifySweepReport {
    pub fn render_text(&self, verbose: bool) -> String {
        let mut out = format!(
            "verification sweep over two-part partitions with r <= {}\n",
            self.max_r
        );
        for rep in &self.lambdas {
            if verbose {
                out.push_str(&rep.render_text());
                out.push('\n');
            } else {
                out.push_str(&format!(
                    "  lambda = ({},{})  {}\n",
                    rep.lambda.0,
                    rep.lambda.1,
                    flag(rep.pass)
                ));
            }
        }
        if self.pass {
            out.push_str(&format!("checked {} partitions: all PASS\n", self.count));
        } else {
            out.push_str(&format!(
                "checked {} partitions: {} FAILED: {:?}\n",
                self.count,
                self.failures.len(),
                self.failures
            ));
        }
        out
    }
}

// ---------------------------------------------------------------------------
// Model cross-check.

/// Isomorphism invariants of a finite-dimensional commutative GF(2)
/// algebra, as computed by [`crate::oracle::invariant_profile`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Profile {
    pub dimension: usize,
    /// `None` when the algebra was too large to enumerate.
    pub idempotent_count: Option<u64>,
    /// Dimensions of the nilradical chain `N, N^2, ...` down to `0`;
    /// empty when `N = 0`.
    pub nilradical_dims: Vec<usize>,
}

impl Profile {
    fn render_inline(&self) -> String {
        let count = match self.idempotent_count {
            Some(c) => c.to_string(),
            None => "not enumerated".to_string(),
        };
        format!(
            "dim = {}  idempotents = {}  radical chain = {:?}",
            self.dimension, count, self.nilradical_dims
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleCompareReport {
    pub lambda: (u64, u64),
    pub r: u64,
    pub formula: Profile,
    pub model: Profile,
    pub profiles_match: bool,
    /// Number of surviving summands.
    pub surviving: u32,
    pub expected_idempotents: u64,
    pub counts_match: bool,
    pub pass: bool,
}

impl OracleCompareReport {
    pub fn render_text(&self) -> String {
        let mut out = format!(
            "subset-model cross-check for lambda = ({},{})  [r = {}]\n",
            self.lambda.0, self.lambda.1, self.r
        );
        out.push_str(&format!(
            "  formula algebra:  {}\n",
            self.formula.render_inline()
        ));
        out.push_str(&format!(
            "  subset model:     {}\n",
            self.model.render_inline()
        ));
        out.push_str(&check_line("profiles match", self.profiles_match));
        out.push_str(&check_line(
            &format!("idempotent count = 2^{}", self.surviving),
            self.counts_match,
        ));
        out.push_str(&format!("result: {}\n", flag(self.pass)));
        out
    }
}

// ---------------------------------------------------------------------------
// Presentation commands.

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultTableReport {
    pub lambda: (u64, u64),
    pub m: u64,
    pub lambda2: usize,
    /// `table[i][j]` is the label list of `b(i) b(j)`.
    pub table: Vec<Vec<Vec<usize>>>,
}

impl MultTableReport {
    pub fn render_text(&self) -> String {
        let dim = self.lambda2 + 1;
        let mut out = format!(
            "multiplication table for lambda = ({},{})  [m = {}, lambda2 = {}]\n",
            self.lambda.0, self.lambda.1, self.m, self.lambda2
        );
        let cells: Vec<Vec<String>> = (0..dim)
            .map(|i| (0..dim).map(|j| element_text(&self.table[i][j])).collect())
            .collect();
        let widths: Vec<usize> = (0..dim)
            .map(|j| {
                (0..dim)
                    .map(|i| cells[i][j].len())
                    .chain([format!("b({j})").len()])
                    .max()
                    .unwrap()
            })
            .collect();
        let head_w = format!("b({})", dim - 1).len();
        let mut line = format!("{:<head_w$} |", "*");
        for (j, w) in widths.iter().enumerate() {
            let h = format!("b({j})");
            line.push_str(&format!(" {h:<w$}"));
        }
        out.push_str(line.trim_end());
        out.push('\n');
        let total: usize = head_w + 2 + widths.iter().map(|w| w + 1).sum::<usize>();
        out.push_str(&"-".repeat(total));
        out.push('\n');
        for (i, row) in cells.iter().enumerate() {
            let mut line = format!("{:<head_w$} |", format!("b({i})"));
            for (cell, w) in row.iter().zip(&widths) {
                line.push_str(&format!(" {cell:<w$}"));
            }
            out.push_str(line.trim_end());
            out.push('\n');
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecomposeRow {
    pub g: u64,
    pub mu: (u64, u64),
    pub parity: u64,
    pub summand: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecomposeReport {
    pub lambda: (u64, u64),
    pub m: u64,
    pub lambda2: usize,
    pub rows: Vec<DecomposeRow>,
}

impl DecomposeReport {
    pub fn render_text(&self) -> String {
        let mut out = format!(
            "Young-module summands of M^({},{})  [m = {}, lambda2 = {}]\n",
            self.lambda.0, self.lambda.1, self.m, self.lambda2
        );
        let rows: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|r| {
                vec![
                    r.g.to_string(),
                    format!("({},{})", r.mu.0, r.mu.1),
                    r.parity.to_string(),
                    if r.summand { "yes" } else { "no" }.to_string(),
                ]
            })
            .collect();
        out.push_str(&render_rows(
            &["g", "mu", "C(m+2g,g) mod 2", "summand"],
            &rows,
        ));
        let total = self.rows.iter().filter(|r| r.summand).count();
        out.push_str(&format!("summands: {total}\n"));
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdempotentsRow {
    pub g: u64,
    pub mu: (u64, u64),
    pub i_set: Vec<u32>,
    pub j_set: Vec<u32>,
    pub element: Vec<usize>,
    pub vanished: bool,
    pub truncated: Option<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdempotentsReport {
    pub lambda: (u64, u64),
    pub m: u64,
    pub lambda2: usize,
    pub truncate: Option<u32>,
    pub rows: Vec<IdempotentsRow>,
}

impl IdempotentsReport {
    pub fn render_text(&self) -> String {
        let mut out = format!(
            "idempotent family of S_K(({},{}))  [m = {}, lambda2 = {}]\n",
            self.lambda.0, self.lambda.1, self.m, self.lambda2
        );
        let mut header = vec!["g", "mu", "I", "J", "e_{m,g}", "status"];
        let trunc_head;
        if let Some(t) = self.truncate {
            trunc_head = format!("truncated (u <= {t})");
            header.push(&trunc_head);
        }
        let rows: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|r| {
                let mut row = vec![
                    r.g.to_string(),
                    format!("({},{})", r.mu.0, r.mu.1),
                    set_text(&r.i_set),
                    set_text(&r.j_set),
                    element_text(&r.element),
                    if r.vanished { "vanished" } else { "ok" }.to_string(),
                ];
                if let Some(tr) = &r.truncated {
                    row.push(element_text(tr));
                }
                row
            })
            .collect();
        out.push_str(&render_rows(&header, &rows));
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorData {
    /// 1-based variable index: this generator is the image of `x_index`.
    pub index: usize,
    /// `element = e * b(2^s)`.
    pub s: u32,
    pub element: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EndoReport {
    pub lambda: (u64, u64),
    pub m: u64,
    pub g: u64,
    pub mu: (u64, u64),
    pub idempotent: Vec<usize>,
    pub dimension: usize,
    pub basis_labels: Vec<usize>,
    pub basis: Vec<Vec<usize>>,
    pub generators: Vec<GeneratorData>,
    pub presentation: PresentationData,
}

impl EndoReport {
    pub fn render_text(&self) -> String {
        let mut out = format!(
            "End(Y^({},{})) as a corner of S_K(({},{}))  [m = {}, g = {}]\n",
            self.mu.0, self.mu.1, self.lambda.0, self.lambda.1, self.m, self.g
        );
        out.push_str(&format!(
            "idempotent: e = {}\n",
            element_text(&self.idempotent)
        ));
        out.push_str(&format!("dimension: {}\n", self.dimension));
        out.push_str("basis:\n");
        for (label, el) in self.basis_labels.iter().zip(&self.basis) {
            out.push_str(&format!("  e*b({label}) = {}\n", element_text(el)));
        }
        if self.generators.is_empty() {
            out.push_str("generators: none\n");
        } else {
            out.push_str("generators:\n");
            for gen in &self.generators {
                out.push_str(&format!(
                    "  x{} = e*b({}) = {}\n",
                    gen.index,
                    1u64 << gen.s,
                    element_text(&gen.element)
                ));
            }
        }
        out.push_str(&format!("presentation: {}\n", self.presentation.text));
        out
    }
}

// ---------------------------------------------------------------------------
// Builders.

pub fn mult_table_report(ctx: &AlgebraContext) -> MultTableReport {
    let dim = ctx.dim();
    let table = (0..dim)
        .map(|i| {
            (0..dim)
                .map(|j| ctx.basis_product(i, j).expect("labels in range").labels())
                .collect()
        })
        .collect();
    MultTableReport {
        lambda: ctx.lambda().parts(),
        m: ctx.lambda().m(),
        lambda2: ctx.lambda().lambda2(),
        table,
    }
}

pub fn decompose_report(ctx: &AlgebraContext) -> DecomposeReport {
    let m = ctx.lambda().m();
    let rows = (0..=ctx.lambda().lambda2() as u64)
        .map(|g| {
            let parity = b_parity(m, g);
            DecomposeRow {
                g,
                mu: ctx.lambda().mu(g).expect("g in range"),
                parity,
                summand: parity == 1,
            }
        })
        .collect();
    DecomposeReport {
        lambda: ctx.lambda().parts(),
        m,
        lambda2: ctx.lambda().lambda2(),
        rows,
    }
}

pub fn idempotents_report(ctx: &AlgebraContext, truncate: Option<u32>) -> IdempotentsReport {
    let m = ctx.lambda().m();
    let rows = idempotent_family(ctx)
        .into_iter()
        .map(|rec| IdempotentsRow {
            g: rec.g,
            mu: rec.mu,
            i_set: rec.sets.i_set,
            j_set: rec.sets.j_set,
            element: rec.element.labels(),
            vanished: rec.vanished,
            truncated: truncate.map(|t| {
                truncated_idempotent(m, rec.g, t, ctx)
                    .expect("g in range")
                    .labels()
            }),
        })
        .collect();
    IdempotentsReport {
        lambda: ctx.lambda().parts(),
        m,
        lambda2: ctx.lambda().lambda2(),
        truncate,
        rows,
    }
}

pub fn endo_report(ctx: &AlgebraContext, g: u64) -> Result<EndoReport> {
    let m = ctx.lambda().m();
    let endo = endo_basis(m, g, ctx)?;
    let p = crate::presentation::presentation_for_dimension(endo.dimension as u64)?;
    Ok(EndoReport {
        lambda: ctx.lambda().parts(),
        m,
        g,
        mu: endo.record.mu,
        idempotent: endo.record.element.labels(),
        dimension: endo.dimension,
        basis_labels: endo.basis_labels.clone(),
        basis: endo.basis.iter().map(|e| e.labels()).collect(),
        generators: endo
            .generators
            .iter()
            .enumerate()
            .map(|(i, gen)| GeneratorData {
                index: i + 1,
                s: gen.s,
                element: gen.element.labels(),
            })
            .collect(),
        presentation: PresentationData::from(&p),
    })
}

pub fn presentation_report(n: u64) -> Result<PresentationData> {
    Ok(PresentationData::from(
        &crate::presentation::presentation_for_dimension(n)?,
    ))
}
