//! Plain-text renderings of the reports. Coordinates are printed 1-based.

use std::fmt::Write as _;

use gorenstein::census::CensusTable;
use gorenstein::decomp::{GorensteinStatus, SelfAssociation};
use gorenstein::report::{AnalysisReport, DecompositionReport, EnumerationReport, SelfAssociationReport};

fn one_based(cols: &[usize]) -> String {
    let v: Vec<String> = cols.iter().map(|c| (c + 1).to_string()).collect();
    format!("{{{}}}", v.join(", "))
}

fn opt(v: Option<usize>) -> String {
    v.map_or_else(|| "n/a".to_string(), |v| v.to_string())
}

pub fn analysis(r: &AnalysisReport) -> String {
    let mut s = String::new();
    let i = &r.input;
    let _ = writeln!(s, "code            [{}, {}] over GF({})", i.n, i.k, i.q);
    let _ = writeln!(s, "self-dual       {}", if r.self_dual { "yes" } else { "no" });
    let _ = writeln!(s, "distinct points {}", opt(r.distinct_points));
    let _ = writeln!(
        s,
        "dim C^(2)       {} (rank), {} (2k - nb)",
        r.schur2_dim_rank,
        opt(r.schur2_dim_graph)
    );
    let _ = writeln!(s, "blocks          {}", r.nb);
    for b in &r.blocks {
        let _ = writeln!(s, "  dim {:<3} on {}", b.dimension, one_based(&b.columns));
    }
    let _ = writeln!(s, "gd              {}", opt(r.gd));
    let _ = writeln!(s, "failure count   {}", opt(r.failure_count));
    if let Some(cs) = &r.connected_set {
        let pairs: Vec<String> = cs
            .pairs
            .iter()
            .map(|(a, b)| format!("{{{}, {}}}", a + 1, b + 1))
            .collect();
        let _ = writeln!(
            s,
            "connected set   {} ({})",
            pairs.join(" "),
            if cs.valid && cs.spans_hyperplane {
                "checked"
            } else {
                "FAILED CHECK"
            }
        );
    }
    let verdict = match r.verdict {
        GorensteinStatus::Gorenstein => "arithmetically Gorenstein",
        GorensteinStatus::NotGorenstein => "not arithmetically Gorenstein",
        GorensteinStatus::Inapplicable => "inapplicable",
    };
    let _ = writeln!(s, "verdict         {verdict}");
    s
}

pub fn decomposition(r: &DecompositionReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "{} block(s), gd {}", r.nb, opt(r.gd));
    for (idx, b) in r.blocks.iter().enumerate() {
        let _ = writeln!(
            s,
            "block {}: dim {} on columns {}",
            idx + 1,
            b.dimension,
            one_based(&b.columns)
        );
        for row in &b.generator {
            let v: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            let _ = writeln!(s, "  {}", v.join(" "));
        }
    }
    s
}

pub fn census(t: &CensusTable) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "q = {}", t.q);
    let _ = writeln!(s, "{:>4}  {:>24}  {:>24}  {:>10}  checks", "n", "G", "C", "C/G");
    for r in &t.rows {
        let mut checks = Vec::new();
        if let Some(p) = r.partition_agrees {
            checks.push(if p { "partition ok" } else { "partition DISAGREES" }.to_string());
        }
        if let Some(e) = &r.enumeration {
            checks.push(if e.agrees {
                "enumeration ok".to_string()
            } else {
                format!("enumeration DISAGREES ({}, {})", e.total, e.indecomposable)
            });
        }
        if let Some(w) = &r.formula_as_written {
            checks.push(format!("product formula gives {w}"));
        }
        let _ = writeln!(
            s,
            "{:>4}  {:>24}  {:>24}  {:>10}  {}",
            r.n,
            r.g.to_string(),
            r.c.to_string(),
            r.ratio_decimal.as_deref().unwrap_or("-"),
            checks.join(", ")
        );
    }
    s
}

pub fn enumeration(r: &EnumerationReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "self-dual codes of length {} over GF({}): {}", r.n, r.q, r.total);
    if let Some(i) = r.indecomposable {
        let _ = writeln!(s, "indecomposable: {i}");
    }
    if let Some(by) = &r.by_blocks {
        for (nb, count) in by {
            let _ = writeln!(s, "  {nb} block(s): {count}");
        }
    }
    s
}

pub fn self_association(r: &SelfAssociationReport) -> String {
    match &r.result {
        SelfAssociation::Certified(cert) => {
            let d: Vec<String> = cert.diagonal.iter().map(|e| e.value().to_string()).collect();
            format!(
                "self-associated, D = diag({}){}\n",
                d.join(", "),
                if cert.verified { "" } else { " (NOT VERIFIED)" }
            )
        }
        SelfAssociation::NotSelfAssociated { searched } => {
            format!("not self-associated ({searched} candidates searched)\n")
        }
        SelfAssociation::Undecided { space_size } => {
            format!("undecided: {space_size} candidates exceed the search limit\n")
        }
    }
}
