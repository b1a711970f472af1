use std::fmt::Write;

use gpcoh::scenarios::{ChaseRecord, Source};
use gpcoh::{BwbResult, DimensionTable, RigidityReport};

use crate::document::{BwbPayload, KoszulPayload, LrPayload, Payload, ReportDocument, RootsPayload};

/// Environment variable holding the text output width.
pub const WIDTH_VAR: &str = "GPCOH_WIDTH";
pub const DEFAULT_WIDTH: usize = 80;

pub fn width_from_env() -> usize {
    std::env::var(WIDTH_VAR)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .map(|w| w.max(40))
        .unwrap_or(DEFAULT_WIDTH)
}

struct Out {
    text: String,
    width: usize,
}

impl Out {
    fn heading(&mut self, title: &str) {
        if !self.text.is_empty() {
            self.text.push('\n');
        }
        let _ = writeln!(self.text, "{title}");
        let _ = writeln!(self.text, "{}", "-".repeat(title.chars().count().min(self.width)));
    }

    /// Wraps `line`, indenting continuation lines by `indent + 4`.
    fn line(&mut self, indent: usize, line: &str) {
        let first = " ".repeat(indent);
        let rest = " ".repeat(indent + 4);
        let opts = textwrap::Options::new(self.width)
            .initial_indent(&first)
            .subsequent_indent(&rest)
            .word_splitter(textwrap::WordSplitter::NoHyphenation)
            .break_words(false);
        for l in textwrap::wrap(line, opts) {
            let _ = writeln!(self.text, "{l}");
        }
    }
}

fn table(t: &DimensionTable) -> String {
    if t.is_zero() {
        "acyclic".to_string()
    } else {
        t.to_string()
    }
}

pub fn render_text(doc: &ReportDocument, width: usize) -> String {
    let mut out = Out {
        text: String::new(),
        width,
    };
    match &doc.result {
        Payload::Roots(r) => roots(&mut out, r),
        Payload::Bwb(b) => bwb(&mut out, b),
        Payload::Lr(l) => lr(&mut out, l),
        Payload::Koszul(k) => koszul(&mut out, k),
        Payload::Report(r) => report(&mut out, r),
    }
    if !doc.failures.is_empty() {
        out.heading("Failures");
        for f in &doc.failures {
            out.line(2, &format!("{}: {}", f.key, f.statement));
        }
    }
    out.text
}

fn roots(out: &mut Out, r: &RootsPayload) {
    out.heading(&format!("Root system {}", r.root_system));
    out.line(2, &format!("positive roots: {}", r.positive_root_count));
    out.line(2, &format!("dim g: {}", r.lie_algebra_dimension));
    out.line(2, &format!("|W|: {}", r.weyl_group_order));
    out.line(2, &format!("rho: {}", r.rho.omega_string()));
    out.line(2, &format!("highest root: {:?}", r.highest_root));
    out.line(2, &format!("symmetrizer: {:?}", r.symmetrizer));
    out.heading("Cartan matrix");
    for row in &r.cartan {
        let cells: Vec<String> = row.iter().map(|v| format!("{v:>3}")).collect();
        out.line(2, &cells.join(""));
    }
    out.heading("Positive roots (simple-root coordinates)");
    for root in &r.positive_roots {
        let height: i64 = root.iter().sum();
        out.line(2, &format!("{root:?}  height {height}"));
    }
}

fn bwb(out: &mut Out, b: &BwbPayload) {
    out.heading(&format!("Borel–Weil–Bott on {}", b.space));
    out.line(
        2,
        &format!("bundle: {} (weight {}, rank {})", b.e_label, b.weight, b.bundle_rank),
    );
    match &b.cohomology {
        BwbResult::AllVanish => out.line(2, "ω + ρ is singular: all cohomology vanishes"),
        BwbResult::Cohomology {
            degree,
            weight,
            dimension,
            ..
        } => out.line(
            2,
            &format!(
                "H^{degree} = V({}), dimension {dimension}; all other degrees vanish",
                weight.omega_string()
            ),
        ),
    }
}

fn lr(out: &mut Out, l: &LrPayload) {
    out.heading(&format!("Littlewood–Richardson {} ⊗ {} in GL({})", l.mu, l.nu, l.rows));
    for t in &l.terms {
        out.line(
            2,
            &format!("{}  c = {}  dim = {}", t.partition, t.coefficient, t.dimension),
        );
    }
    out.line(
        2,
        &format!(
            "dimension sum: {} (dim {} · dim {} = {} · {})",
            l.dimension_sum, l.mu, l.nu, l.dimension_mu, l.dimension_nu
        ),
    );
}

fn chase_lines(out: &mut Out, c: &ChaseRecord) {
    out.line(2, &format!("twist {}: F = {}", c.twist, c.bundle));
    for t in &c.terms {
        out.line(
            4,
            &format!(
                "C_{}  {}  =  {}  :  {}",
                t.index,
                t.bundle,
                t.e_labels,
                table(&t.cohomology)
            ),
        );
    }
    for h in &c.hints_used {
        out.line(4, &format!("rank {} at {} ({:?})", h.rank, h.position, h.origin));
    }
    match &c.restriction {
        Some(t) => out.line(4, &format!("F|_S: {t}")),
        None => {
            let blocking: Vec<String> = c.blocking_positions.iter().map(|p| p.to_string()).collect();
            out.line(4, &format!("indeterminate; blocking ranks: {}", blocking.join(", ")));
        }
    }
}

fn koszul(out: &mut Out, k: &KoszulPayload) {
    out.heading(&format!("Koszul chase ({}, E = {})", k.scenario, k.section_bundle));
    chase_lines(out, &k.chase);
}

fn report(out: &mut Out, r: &RigidityReport) {
    out.heading(&format!("Report {}", r.name));
    out.line(0, &r.subject);
    out.heading("Quantities");
    for q in &r.quantities {
        let source = match &q.source {
            Source::Computed { by } => format!("computed by {by}"),
            Source::External { constant, .. } => format!("EXTERNAL constant {constant}"),
            Source::Arithmetic { expression } => format!("= {expression}"),
        };
        out.line(2, &format!("{} = {}  [{}]  ({source})", q.label, q.value, q.key));
    }
    if !r.decompositions.is_empty() {
        out.heading("Decompositions");
        for d in &r.decompositions {
            out.line(
                2,
                &format!(
                    "{} ≅ {} = {}  :  {}",
                    d.bundle,
                    d.canonical,
                    d.e_labels,
                    table(&d.cohomology)
                ),
            );
        }
    }
    if !r.chases.is_empty() {
        out.heading("Koszul chases");
        for c in &r.chases {
            chase_lines(out, c);
        }
    }
    out.heading("Checks");
    for c in &r.checks {
        let mark = if c.passed { "PASS" } else { "FAIL" };
        out.line(2, &format!("{mark}  {}: {}", c.description, c.statement()));
    }
    if !r.external_inputs.is_empty() {
        out.heading("External inputs (not computed here)");
        for c in &r.external_inputs {
            out.line(2, &format!("{} = {}: {}", c.name, c.value, c.provenance));
        }
    }
    if !r.non_claims.is_empty() {
        out.heading("Assumed, not claimed");
        for n in &r.non_claims {
            out.line(2, &format!("- {n}"));
        }
    }
    out.heading("Conclusion");
    out.line(2, &r.conclusion);
}
