//! JSON and CSV emission for every report type.

use serde::Serialize;

use crate::census::ParticipationTable;
use crate::club::ClubReport;
use crate::error::{Error, Result};
use crate::experiment::{CellSummary, SampleResult};
use crate::pipeline::PipelineTrace;
use crate::rank::RankComparison;

pub fn to_json<T: Serialize>(value: &T) -> Result<String> {
    serde_json::to_string_pretty(value).map_err(|e| Error::Serialization(e.to_string()))
}

fn csv_string<F>(header: &[&str], fill: F) -> Result<String>
where
    F: FnOnce(&mut csv::Writer<Vec<u8>>) -> csv::Result<()>,
{
    let ser = |e: csv::Error| Error::Serialization(e.to_string());
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).map_err(ser)?;
    fill(&mut w).map_err(ser)?;
    let bytes = w
        .into_inner()
        .map_err(|e| Error::Serialization(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Error::Serialization(e.to_string()))
}

/// One `vertex` row per vertex, then one `edge` row per edge.
pub fn participation_csv(table: &ParticipationTable) -> Result<String> {
    csv_string(&["record", "u", "v", "count"], |w| {
        for (v, c) in table.vertex_counts.iter().enumerate() {
            w.write_record(["vertex", &v.to_string(), "", &c.to_string()])?;
        }
        for e in &table.edge_counts {
            w.write_record([
                "edge",
                &e.u.to_string(),
                &e.v.to_string(),
                &e.count.to_string(),
            ])?;
        }
        Ok(())
    })
}

pub fn club_csv(report: &ClubReport) -> Result<String> {
    csv_string(&["record", "u", "v", "label", "weight"], |w| {
        for (i, &v) in report.members.iter().enumerate() {
            let label = report
                .member_labels
                .as_ref()
                .map_or(String::new(), |l| l[i].clone());
            w.write_record(["member", &v.to_string(), "", &label, ""])?;
        }
        for e in &report.member_edges {
            w.write_record([
                "edge",
                &e.u.to_string(),
                &e.v.to_string(),
                "",
                &e.weight.to_string(),
            ])?;
        }
        w.write_record(["coefficient", "", "", "", &report.coefficient.to_string()])?;
        if let Some(c) = report.weighted_coefficient {
            w.write_record(["weighted_coefficient", "", "", "", &c.to_string()])?;
        }
        Ok(())
    })
}

/// Vertex × iteration matrix of participation numbers with a final
/// SUpernode flag column; one row per vertex of the input graph.
pub fn trace_csv(trace: &PipelineTrace) -> Result<String> {
    let mut header: Vec<String> = vec!["vertex".into(), "label".into()];
    header.extend(
        trace
            .iterations
            .iter()
            .map(|r| format!("iter_{}", r.schedule_index)),
    );
    header.push("supernode".into());
    let header: Vec<&str> = header.iter().map(String::as_str).collect();
    let mut is_super = vec![false; trace.n];
    for &v in &trace.supernodes {
        is_super[v] = true;
    }
    csv_string(&header, |w| {
        for v in 0..trace.n {
            let mut row = vec![
                v.to_string(),
                trace
                    .labels
                    .as_ref()
                    .map_or(String::new(), |l| l[v].clone()),
            ];
            row.extend(
                trace
                    .iterations
                    .iter()
                    .map(|r| r.vertex_participation[v].to_string()),
            );
            row.push(u8::from(is_super[v]).to_string());
            w.write_record(&row)?;
        }
        Ok(())
    })
}

/// Per-iteration summary lines of a trace.
pub fn iterations_csv(trace: &PipelineTrace) -> Result<String> {
    csv_string(
        &[
            "schedule_index",
            "input_graph",
            "output_graph",
            "percentile",
            "threshold",
            "total",
            "input_edges",
            "surviving_edges",
        ],
        |w| {
            for r in &trace.iterations {
                w.write_record([
                    r.schedule_index.to_string(),
                    r.input_graph.to_string(),
                    r.output_graph.to_string(),
                    r.percentile.to_string(),
                    r.threshold.to_string(),
                    r.total.to_string(),
                    r.input_edges.to_string(),
                    r.surviving_edges.to_string(),
                ])?;
            }
            Ok(())
        },
    )
}

pub fn comparison_csv(cmp: &RankComparison) -> Result<String> {
    let o = &cmp.overlap;
    csv_string(
        &[
            "swap_distance",
            "j",
            "j_prime",
            "size_r",
            "size_s",
            "common",
            "common_in_r",
            "common_in_s",
            "only_r",
            "only_s",
        ],
        |w| {
            w.write_record([
                cmp.swap_distance.to_string(),
                cmp.j.to_string(),
                cmp.j_prime.to_string(),
                o.size_a.to_string(),
                o.size_b.to_string(),
                o.common.to_string(),
                o.common_in_a.to_string(),
                o.common_in_b.to_string(),
                o.only_a.to_string(),
                o.only_b.to_string(),
            ])
        },
    )
}

pub fn summary_csv(cells: &[CellSummary]) -> Result<String> {
    csv_string(
        &[
            "family",
            "n",
            "density",
            "samples",
            "k",
            "mean_swap",
            "sd_swap",
            "mean_common_in_r",
            "mean_common_in_s",
            "mean_r_size",
            "mean_s_size",
        ],
        |w| {
            for c in cells {
                w.write_record([
                    family_name(c.family).to_string(),
                    c.n.to_string(),
                    c.density.to_string(),
                    c.samples.to_string(),
                    c.k.to_string(),
                    c.mean_swap.to_string(),
                    c.sd_swap.to_string(),
                    c.mean_common_in_rich.to_string(),
                    c.mean_common_in_super.to_string(),
                    c.mean_rich_size.to_string(),
                    c.mean_super_size.to_string(),
                ])?;
            }
            Ok(())
        },
    )
}

pub fn samples_csv(samples: &[SampleResult]) -> Result<String> {
    csv_string(
        &[
            "family",
            "n",
            "density",
            "sample",
            "seed",
            "realized_density",
            "total",
            "swap_distance",
            "j",
            "j_prime",
            "r_size",
            "s_size",
            "common",
            "common_in_r",
            "common_in_s",
        ],
        |w| {
            for s in samples {
                w.write_record([
                    family_name(s.family).to_string(),
                    s.n.to_string(),
                    s.density.to_string(),
                    s.sample.to_string(),
                    s.seed.to_string(),
                    s.realized_density.to_string(),
                    s.total.to_string(),
                    s.swap_distance.to_string(),
                    s.j.to_string(),
                    s.j_prime.to_string(),
                    s.rich_size.to_string(),
                    s.super_size.to_string(),
                    s.common.to_string(),
                    s.common_in_rich.to_string(),
                    s.common_in_super.to_string(),
                ])?;
            }
            Ok(())
        },
    )
}

fn family_name(f: crate::netgen::Family) -> &'static str {
    match f {
        crate::netgen::Family::Er => "er",
        crate::netgen::Family::Ws => "ws",
    }
}
