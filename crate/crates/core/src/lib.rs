//! Vertex and edge participation in complete and pseudo-complete subgraphs,
//! the rich-club family of coefficients built on them, and the iterative
//! thresholding pipeline that extracts SUpernodes from weighted graphs.

mod bitset;

pub mod census;
pub mod club;
pub mod error;
pub mod experiment;
pub mod fixtures;
pub mod graph;
pub mod netgen;
pub mod parallel;
pub mod pipeline;
pub mod rank;
pub mod report;

pub use census::{
    brute_force_census, exact_census, median_pair_weight, pseudo_census, CensusMode, EdgeCount,
    ParticipationTable,
};
pub use club::{
    edge_club, rich_club, select_threshold_for_size, super_rich_club,
    weighted_participation_coefficient, ClubKind, ClubReport, Coefficient,
};
pub use error::{Error, Result};
pub use graph::{Edge, Graph, InducedSubgraph};
pub use netgen::{gen_er, gen_ws, Family, GenSpec};
pub use pipeline::{
    percentile_value, run_iteration, run_pipeline, HaltReason, IterationRecord, PercentileSchedule,
    PipelineOptions, PipelineTrace,
};
pub use rank::{
    compare_clubs, compare_clubs_at, overlap_report, rank_vertices, swap_distance, Overlap,
    RankComparison,
};
