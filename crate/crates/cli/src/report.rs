//! Report shapes for the CLI: the per-semigroup analysis report and the
//! enumeration summary.

use std::collections::BTreeMap;

use serde::Serialize;

use nilgraph::verify::SuiteReport;
use nilgraph::{FiniteSemigroup, IsoModulus, SimpleGraph};

#[derive(Serialize)]
pub struct GraphSummary {
    pub edge_count: usize,
    pub component_sizes: Vec<usize>,
    pub complete: bool,
    pub empty: bool,
    pub all_components_complete: bool,
    pub isolated_vertices: usize,
}

impl GraphSummary {
    fn of(g: &SimpleGraph) -> Self {
        GraphSummary {
            edge_count: g.edge_count(),
            component_sizes: g.components().iter().map(Vec::len).collect(),
            complete: g.is_complete(),
            empty: g.is_empty_graph(),
            all_components_complete: g.all_components_complete(),
            isolated_vertices: g.isolated_vertices().len(),
        }
    }
}

#[derive(Serialize)]
pub struct WitnessReport {
    pub pair: [String; 2],
    pub word: Vec<String>,
}

#[derive(Serialize)]
pub struct AnalysisReport {
    pub input: String,
    pub size: usize,
    pub commutative: bool,
    pub band: bool,
    pub simple: bool,
    pub regular: bool,
    pub inverse: bool,
    pub n_semigroup: bool,
    pub has_zero: bool,
    pub idempotent_count: usize,
    pub center_size: usize,
    pub j_class_count: usize,
    pub nilpotent: bool,
    pub nilpotency_class: Option<usize>,
    pub positively_engel: bool,
    pub neumann_taylor: bool,
    pub upper_graph: GraphSummary,
    pub lower_graph: GraphSummary,
    pub noncommuting_graph: GraphSummary,
    /// A pair and multiplier word returning to itself, when not nilpotent.
    pub witness: Option<WitnessReport>,
}

pub fn analyze(input: &str, s: &FiniteSemigroup) -> AnalysisReport {
    let witness = s.non_nilpotent_witness().map(|w| WitnessReport {
        pair: [s.label(w.pair.0), s.label(w.pair.1)],
        word: w.word.iter().map(|m| m.display(s)).collect(),
    });
    AnalysisReport {
        input: input.to_string(),
        size: s.size(),
        commutative: s.is_commutative(),
        band: s.is_band(),
        simple: s.is_simple(),
        regular: s.is_regular(),
        inverse: s.is_inverse_semigroup(),
        n_semigroup: s.is_n_semigroup(),
        has_zero: s.zero().is_some(),
        idempotent_count: s.idempotents().len(),
        center_size: s.center().len(),
        j_class_count: s.j_classes().class_count(),
        nilpotent: s.is_malcev_nilpotent(),
        nilpotency_class: s.nilpotency_class(),
        positively_engel: s.is_positively_engel(),
        neumann_taylor: s.is_neumann_taylor(),
        upper_graph: GraphSummary::of(&s.upper_graph()),
        lower_graph: GraphSummary::of(&s.lower_graph()),
        noncommuting_graph: GraphSummary::of(&s.noncommuting_graph()),
        witness,
    }
}

pub fn render_text(r: &AnalysisReport) -> String {
    let mut out = String::new();
    out.push_str(&format!("input: {}\n", r.input));
    out.push_str(&format!("size: {}\n", r.size));
    out.push_str(&format!(
        "flags: commutative={} band={} simple={} regular={} inverse={} n_semigroup={} has_zero={}\n",
        r.commutative, r.band, r.simple, r.regular, r.inverse, r.n_semigroup, r.has_zero
    ));
    out.push_str(&format!(
        "counts: idempotents={} center={} j_classes={}\n",
        r.idempotent_count, r.center_size, r.j_class_count
    ));
    match r.nilpotency_class {
        Some(c) => out.push_str(&format!("nilpotent: true (class {c})\n")),
        None => out.push_str("nilpotent: false\n"),
    }
    out.push_str(&format!(
        "positively_engel: {}\nneumann_taylor: {}\n",
        r.positively_engel, r.neumann_taylor
    ));
    for (name, g) in [
        ("upper", &r.upper_graph),
        ("lower", &r.lower_graph),
        ("noncommuting", &r.noncommuting_graph),
    ] {
        out.push_str(&format!(
            "{name} graph: edges={} components={:?} complete={} empty={}\n",
            g.edge_count, g.component_sizes, g.complete, g.empty
        ));
    }
    if let Some(w) = &r.witness {
        out.push_str(&format!(
            "witness: pair ({}, {}) returns under [{}]\n",
            w.pair[0],
            w.pair[1],
            w.word.join(", ")
        ));
    }
    out
}

#[derive(Serialize)]
struct EnumerationSummary {
    order: usize,
    modulo: &'static str,
    count: usize,
    /// Upper-graph distribution: canonical edge list -> number of classes.
    per_graph_histogram: BTreeMap<String, usize>,
}

pub fn enumeration_summary(order: usize, modulo: IsoModulus, stream: &[FiniteSemigroup]) -> String {
    let mut histogram = BTreeMap::new();
    for s in stream {
        let key = nilgraph::graphs::canonical_graph(&s.upper_graph()).to_edge_list_json();
        *histogram.entry(key).or_insert(0) += 1;
    }
    let summary = EnumerationSummary {
        order,
        modulo: modulo.as_str(),
        count: stream.len(),
        per_graph_histogram: histogram,
    };
    serde_json::to_string(&summary).expect("summary serializes")
}

#[derive(Serialize)]
struct FailureEntry {
    name: String,
    detail: String,
    table: String,
}

pub fn failures_json(suite: &SuiteReport) -> String {
    let failed: Vec<FailureEntry> = suite
        .checks
        .iter()
        .filter(|c| !c.passed())
        .map(|c| FailureEntry {
            name: c.name.clone(),
            detail: c
                .first_failure
                .as_ref()
                .map(|f| f.detail.clone())
                .unwrap_or_default(),
            table: c
                .first_failure
                .as_ref()
                .map(|f| f.table.clone())
                .unwrap_or_default(),
        })
        .collect();
    serde_json::to_string(&serde_json::json!({ "failed": failed })).expect("serializes")
}
