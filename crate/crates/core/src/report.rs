//! Serializable reports for whole-code analyses.
//!
//! Every report carries a `kind` tag so that a single JSON schema can
//! describe all of them. Indices in reports are 0-based original
//! coordinates.

use std::collections::BTreeMap;
use std::time::Instant;

use serde::Serialize;
use thiserror::Error;

use crate::census::{classify, CensusError, CensusTable, EnumerationSummary};
use crate::code::{column_points, is_self_dual, schur_square, CodeError, LinearCode};
use crate::decomp::{
    build_block_graph, check_connected_set, decompose, find_connected_set, kernel_span_check,
    self_association_certificate, DecompError, GorensteinStatus, SelfAssociation,
};
use crate::field::{Elem, Field};

#[derive(Debug, Error)]
pub enum ReportError {
    /// The two ways of computing `dim C^(2)` disagree on a self-dual code.
    #[error("dim C^(2) is {rank} by rank but 2k - nb = {graph} (k = {k}, nb = {nb})")]
    SchurDimensionMismatch {
        rank: usize,
        graph: usize,
        k: usize,
        nb: usize,
    },
    #[error(transparent)]
    Code(#[from] CodeError),
    #[error(transparent)]
    Decomp(#[from] DecompError),
    #[error(transparent)]
    Census(#[from] CensusError),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InputEcho {
    pub n: usize,
    pub k: usize,
    pub q: u32,
}

impl InputEcho {
    pub fn of(c: &LinearCode) -> InputEcho {
        InputEcho {
            n: c.len(),
            k: c.dimension(),
            q: c.field().order(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BlockSummary {
    pub columns: Vec<usize>,
    pub dimension: usize,
    pub indecomposable: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConnectedSetReport {
    /// Pairs of original coordinates from the non-pivot part.
    pub pairs: Vec<(usize, usize)>,
    pub valid: bool,
    pub spans_hyperplane: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Timings {
    pub schur_square_ms: f64,
    pub decomposition_ms: f64,
    pub total_ms: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AnalysisReport {
    pub kind: &'static str,
    pub input: InputEcho,
    pub self_dual: bool,
    /// Number of distinct column points; `None` if a column is zero.
    pub distinct_points: Option<usize>,
    /// Columns grouped by the point they span.
    pub column_classes: Vec<Vec<usize>>,
    pub schur2_dim_rank: usize,
    /// `2k − nb`, only meaningful for self-dual codes.
    pub schur2_dim_graph: Option<usize>,
    pub nb: usize,
    pub gd: Option<usize>,
    pub failure_count: Option<usize>,
    pub blocks: Vec<BlockSummary>,
    pub verdict: GorensteinStatus,
    pub connected_set: Option<ConnectedSetReport>,
    pub warnings: Vec<String>,
    pub timings: Timings,
}

fn ms(since: Instant) -> f64 {
    since.elapsed().as_secs_f64() * 1e3
}

/// Full analysis. A self-dual code whose rank-based `dim C^(2)` differs from
/// `2k − nb` is reported as an error, never as a report.
pub fn analyze(c: &LinearCode) -> Result<AnalysisReport, ReportError> {
    let start = Instant::now();
    let self_dual = is_self_dual(c);
    let mut warnings = Vec::new();
    if !self_dual {
        warnings.push("code is not self-dual; gd and the Gorenstein verdict do not apply".to_string());
    }
    let (distinct_points, column_classes) = match column_points(c) {
        Ok(p) => (Some(p.distinct()), p.classes),
        Err(e) => {
            warnings.push(e.to_string());
            (None, Vec::new())
        }
    };

    let t = Instant::now();
    let schur2_dim_rank = schur_square(c)?.dimension();
    let schur_square_ms = ms(t);

    let t = Instant::now();
    let dec = decompose(c);
    let nb = dec.nb;
    let decomposition_ms = ms(t);

    let k = c.dimension();
    let schur2_dim_graph = self_dual.then(|| 2 * k - nb);
    if let Some(graph) = schur2_dim_graph {
        if graph != schur2_dim_rank {
            return Err(ReportError::SchurDimensionMismatch {
                rank: schur2_dim_rank,
                graph,
                k,
                nb,
            });
        }
    }
    let gd = self_dual.then(|| nb - 1);
    let verdict = if self_dual && distinct_points == Some(2 * k) {
        if nb == 1 {
            GorensteinStatus::Gorenstein
        } else {
            GorensteinStatus::NotGorenstein
        }
    } else {
        if self_dual {
            warnings.push(format!(
                "only {} distinct points for 2k = {}; no geometric verdict",
                distinct_points.map_or("?".to_string(), |d| d.to_string()),
                2 * k
            ));
        }
        GorensteinStatus::Inapplicable
    };

    let connected_set = (nb == 1 && k > 0).then(|| {
        let a = &c.systematic().a_part;
        let graph = build_block_graph(c);
        let sets = find_connected_set(a);
        let set = sets.sets.into_iter().next().unwrap_or_default();
        ConnectedSetReport {
            valid: check_connected_set(a, &set).unwrap_or(false),
            spans_hyperplane: kernel_span_check(c.field(), &set, a.cols()),
            pairs: set
                .pairs
                .iter()
                .map(|&(p, q)| (graph.column_coordinate(p), graph.column_coordinate(q)))
                .collect(),
        }
    });

    Ok(AnalysisReport {
        kind: "analysis",
        input: InputEcho::of(c),
        self_dual,
        distinct_points,
        column_classes,
        schur2_dim_rank,
        schur2_dim_graph,
        nb,
        gd,
        failure_count: gd.map(|g| g + 1),
        blocks: dec
            .blocks
            .iter()
            .map(|b| BlockSummary {
                columns: b.columns.clone(),
                dimension: b.code.dimension(),
                indecomposable: b.indecomposable,
            })
            .collect(),
        verdict,
        connected_set,
        warnings,
        timings: Timings {
            schur_square_ms,
            decomposition_ms,
            total_ms: ms(start),
        },
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DecomposedBlock {
    pub columns: Vec<usize>,
    pub dimension: usize,
    pub indecomposable: bool,
    /// Generator of the block restricted to `columns`.
    pub generator: Vec<Vec<u32>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DecompositionReport {
    pub kind: &'static str,
    pub input: InputEcho,
    pub self_dual: bool,
    pub nb: usize,
    pub gd: Option<usize>,
    pub blocks: Vec<DecomposedBlock>,
}

pub fn decomposition_report(c: &LinearCode) -> DecompositionReport {
    let dec = decompose(c);
    DecompositionReport {
        kind: "decomposition",
        input: InputEcho::of(c),
        self_dual: is_self_dual(c),
        nb: dec.nb,
        gd: dec.gd,
        blocks: dec
            .blocks
            .iter()
            .map(|b| DecomposedBlock {
                columns: b.columns.clone(),
                dimension: b.code.dimension(),
                indecomposable: b.indecomposable,
                generator: b.code.generator().to_values(),
            })
            .collect(),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CensusReport {
    pub kind: &'static str,
    #[serde(flatten)]
    pub table: CensusTable,
}

impl From<CensusTable> for CensusReport {
    fn from(table: CensusTable) -> CensusReport {
        CensusReport { kind: "census", table }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EnumerationReport {
    pub kind: &'static str,
    pub n: usize,
    pub q: u32,
    pub total: u64,
    /// Present when classification was requested.
    pub indecomposable: Option<u64>,
    /// Number of blocks → number of codes, keys as strings.
    pub by_blocks: Option<BTreeMap<String, u64>>,
}

pub fn enumeration_report(n: usize, field: &Field, classify_blocks: bool) -> Result<EnumerationReport, ReportError> {
    let (total, indecomposable, by_blocks) = if classify_blocks {
        let EnumerationSummary {
            total,
            indecomposable,
            by_blocks,
        } = classify(n, field)?;
        let by_blocks = by_blocks.into_iter().map(|(b, c)| (b.to_string(), c)).collect();
        (total, Some(indecomposable), Some(by_blocks))
    } else {
        (crate::census::enumerate_self_dual(n, field)?.count() as u64, None, None)
    };
    Ok(EnumerationReport {
        kind: "enumeration",
        n,
        q: field.order(),
        total,
        indecomposable,
        by_blocks,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SelfAssociationReport {
    pub kind: &'static str,
    pub input: InputEcho,
    #[serde(flatten)]
    pub result: SelfAssociation,
}

pub fn self_association_report(c: &LinearCode) -> Result<SelfAssociationReport, ReportError> {
    Ok(SelfAssociationReport {
        kind: "self_association",
        input: InputEcho::of(c),
        result: self_association_certificate(c.generator())?,
    })
}

impl SelfAssociationReport {
    pub fn diagonal(&self) -> Option<&[Elem]> {
        match &self.result {
            SelfAssociation::Certified(cert) => Some(&cert.diagonal),
            _ => None,
        }
    }
}
