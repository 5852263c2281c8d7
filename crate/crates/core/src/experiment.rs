//! Randomized rich-club versus Super rich-club experiments over a grid of
//! generated graphs.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::census::exact_census;
use crate::club::Coefficient;
use crate::error::{Error, Result};
use crate::netgen::{derive_seeds, Family, GenSpec, DEFAULT_REWIRING_BETA};
use crate::rank::compare_clubs;

pub const DEFAULT_CLUB_FRACTION: f64 = 0.25;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
enum OneOrMany<T> {
    One(T),
    Many(Vec<T>),
}

impl<T> From<OneOrMany<T>> for Vec<T> {
    fn from(v: OneOrMany<T>) -> Self {
        match v {
            OneOrMany::One(x) => vec![x],
            OneOrMany::Many(xs) => xs,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct CellSpec {
    pub n: usize,
    pub density: f64,
}

/// Experiment recipe. Either a `sizes × densities` grid or an explicit
/// list of `cells`, crossed with every family.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Recipe {
    #[serde(alias = "family", deserialize_with = "one_or_many")]
    pub families: Vec<Family>,
    #[serde(default, alias = "n", deserialize_with = "one_or_many")]
    pub sizes: Vec<usize>,
    #[serde(default, alias = "density", deserialize_with = "one_or_many")]
    pub densities: Vec<f64>,
    #[serde(default)]
    pub cells: Vec<CellSpec>,
    #[serde(alias = "N")]
    pub samples: usize,
    #[serde(default = "default_k")]
    pub k: usize,
    pub seed: u64,
    #[serde(default = "default_beta")]
    pub rewiring_beta: f64,
    /// Rich-club target size as a fraction of `n`.
    #[serde(default = "default_fraction")]
    pub club_fraction: f64,
}

fn one_or_many<'de, D, T>(d: D) -> std::result::Result<Vec<T>, D::Error>
where
    D: serde::Deserializer<'de>,
    T: Deserialize<'de>,
{
    OneOrMany::<T>::deserialize(d).map(Into::into)
}

fn default_k() -> usize {
    3
}
fn default_beta() -> f64 {
    DEFAULT_REWIRING_BETA
}
fn default_fraction() -> f64 {
    DEFAULT_CLUB_FRACTION
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Cell {
    pub family: Family,
    pub n: usize,
    pub density: f64,
}

impl Recipe {
    pub fn parse(text: &str) -> Result<Self> {
        let recipe: Recipe =
            serde_json::from_str(text).map_err(|e| Error::InvalidRecipe(e.to_string()))?;
        recipe.validate()?;
        Ok(recipe)
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidRecipe(m));
        if self.samples == 0 {
            return bad("samples (N) must be at least 1".into());
        }
        if self.k < 2 {
            return bad(format!("k = {} must be at least 2", self.k));
        }
        if self.families.is_empty() {
            return bad("no graph family given".into());
        }
        if self.cells.is_empty() && (self.sizes.is_empty() || self.densities.is_empty()) {
            return bad("need `cells` or both `sizes` and `densities`".into());
        }
        if !(self.club_fraction > 0.0 && self.club_fraction <= 1.0) {
            return bad(format!(
                "club_fraction {} outside (0, 1]",
                self.club_fraction
            ));
        }
        if !(0.0..=1.0).contains(&self.rewiring_beta) {
            return bad(format!(
                "rewiring_beta {} outside [0, 1]",
                self.rewiring_beta
            ));
        }
        for c in self.cells() {
            if !(c.density > 0.0 && c.density <= 1.0) {
                return bad(format!("density {} outside (0, 1]", c.density));
            }
            if c.n < self.k {
                return bad(format!("n = {} smaller than k = {}", c.n, self.k));
            }
        }
        Ok(())
    }

    /// Cells in family-major, then size, then density order.
    pub fn cells(&self) -> Vec<Cell> {
        let mut out = Vec::new();
        for &family in &self.families {
            if self.cells.is_empty() {
                for &n in &self.sizes {
                    for &density in &self.densities {
                        out.push(Cell { family, n, density });
                    }
                }
            } else {
                out.extend(self.cells.iter().map(|c| Cell {
                    family,
                    n: c.n,
                    density: c.density,
                }));
            }
        }
        out
    }

    fn specs(&self, cell_index: usize, cell: &Cell) -> Vec<GenSpec> {
        derive_seeds(self.seed, cell_index as u64, self.samples)
            .into_iter()
            .map(|seed| GenSpec {
                family: cell.family,
                n: cell.n,
                target_density: cell.density,
                rewiring_beta: self.rewiring_beta,
                seed,
            })
            .collect()
    }
}

/// Outcome for one generated graph.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SampleResult {
    pub family: Family,
    pub n: usize,
    pub density: f64,
    pub sample: usize,
    pub seed: u64,
    pub realized_density: f64,
    pub total: u64,
    pub swap_distance: u64,
    pub j: i64,
    pub j_prime: i64,
    pub rich_size: usize,
    pub super_size: usize,
    pub common: usize,
    /// `|R∩S| / |R|`
    pub common_in_rich: Coefficient,
    /// `|R∩S| / |S|`
    pub common_in_super: Coefficient,
}

/// Mean and sample standard deviation over one cell.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CellSummary {
    pub family: Family,
    pub n: usize,
    pub density: f64,
    pub samples: usize,
    pub k: usize,
    pub mean_swap: f64,
    pub sd_swap: Coefficient,
    pub mean_common_in_rich: Coefficient,
    pub mean_common_in_super: Coefficient,
    pub mean_rich_size: f64,
    pub mean_super_size: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExperimentOutput {
    pub recipe: Recipe,
    pub cells: Vec<CellSummary>,
    pub samples: Vec<SampleResult>,
}

/// Generates one graph, runs a `k` census, and compares degree and
/// participation rankings and size-matched clubs.
pub fn run_sample(
    spec: &GenSpec,
    k: usize,
    club_fraction: f64,
    sample: usize,
) -> Result<SampleResult> {
    let g = spec.generate()?;
    let table = exact_census(&g, k)?;
    let target = ((club_fraction * g.n() as f64).round() as usize).max(1);
    let cmp = compare_clubs(&g, &table, target)?;
    Ok(SampleResult {
        family: spec.family,
        n: spec.n,
        density: spec.target_density,
        sample,
        seed: spec.seed,
        realized_density: g.density()?,
        total: table.total,
        swap_distance: cmp.swap_distance,
        j: cmp.j,
        j_prime: cmp.j_prime,
        rich_size: cmp.overlap.size_a,
        super_size: cmp.overlap.size_b,
        common: cmp.overlap.common,
        common_in_rich: cmp.overlap.common_in_a,
        common_in_super: cmp.overlap.common_in_b,
    })
}

fn mean_defined(values: impl Iterator<Item = Coefficient>) -> Coefficient {
    let defined: Vec<f64> = values.filter_map(Coefficient::value).collect();
    Coefficient::ratio(defined.iter().sum(), defined.len() as f64)
}

fn summarize(cell: &Cell, k: usize, samples: &[SampleResult]) -> CellSummary {
    let count = samples.len() as f64;
    let swaps: Vec<f64> = samples.iter().map(|s| s.swap_distance as f64).collect();
    let mean = swaps.iter().sum::<f64>() / count;
    let sd = if samples.len() >= 2 {
        let ss: f64 = swaps.iter().map(|x| (x - mean).powi(2)).sum();
        Coefficient::Defined((ss / (count - 1.0)).sqrt())
    } else {
        Coefficient::Undefined
    };
    CellSummary {
        family: cell.family,
        n: cell.n,
        density: cell.density,
        samples: samples.len(),
        k,
        mean_swap: mean,
        sd_swap: sd,
        mean_common_in_rich: mean_defined(samples.iter().map(|s| s.common_in_rich)),
        mean_common_in_super: mean_defined(samples.iter().map(|s| s.common_in_super)),
        mean_rich_size: samples.iter().map(|s| s.rich_size as f64).sum::<f64>() / count,
        mean_super_size: samples.iter().map(|s| s.super_size as f64).sum::<f64>() / count,
    }
}

/// One cell of `specs.len()` samples (all sharing family, order, and
/// density). Needs at least two samples for the standard deviation.
pub fn batch_experiment(specs: &[GenSpec], k: usize, club_fraction: f64) -> Result<CellSummary> {
    if specs.len() < 2 {
        return Err(Error::InsufficientSamples {
            required: 2,
            found: specs.len(),
        });
    }
    let first = specs[0];
    if specs.iter().any(|s| {
        s.family != first.family || s.n != first.n || s.target_density != first.target_density
    }) {
        return Err(Error::InvalidRecipe(
            "batch samples must share family, order, and density".into(),
        ));
    }
    let samples = specs
        .par_iter()
        .enumerate()
        .map(|(i, spec)| run_sample(spec, k, club_fraction, i))
        .collect::<Result<Vec<_>>>()?;
    let cell = Cell {
        family: first.family,
        n: first.n,
        density: first.target_density,
    };
    Ok(summarize(&cell, k, &samples))
}

/// Runs every cell of the recipe; with a single sample per cell the
/// standard deviation is reported as undefined.
pub fn run_recipe(recipe: &Recipe) -> Result<ExperimentOutput> {
    recipe.validate()?;
    let cells = recipe.cells();
    let jobs: Vec<(usize, GenSpec, usize)> = cells
        .iter()
        .enumerate()
        .flat_map(|(ci, cell)| {
            recipe
                .specs(ci, cell)
                .into_iter()
                .enumerate()
                .map(move |(si, spec)| (ci, spec, si))
        })
        .collect();
    let results = jobs
        .par_iter()
        .map(|(_, spec, si)| run_sample(spec, recipe.k, recipe.club_fraction, *si))
        .collect::<Result<Vec<_>>>()?;
    let summaries = cells
        .iter()
        .enumerate()
        .map(|(ci, cell)| {
            let mine: Vec<SampleResult> = jobs
                .iter()
                .zip(&results)
                .filter(|((c, _, _), _)| *c == ci)
                .map(|(_, r)| r.clone())
                .collect();
            summarize(cell, recipe.k, &mine)
        })
        .collect();
    Ok(ExperimentOutput {
        recipe: recipe.clone(),
        cells: summaries,
        samples: results,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recipe_parsing_and_validation() {
        let r = Recipe::parse(
            r#"{"family":"ws","n":[50,100,200],"density":[0.25,0.5,0.75,0.9],"N":10,"k":3,"seed":7}"#,
        )
        .unwrap();
        assert_eq!(r.cells().len(), 12);
        assert_eq!(r.rewiring_beta, DEFAULT_REWIRING_BETA);
        assert!(matches!(
            Recipe::parse(r#"{"family":"er","n":[10],"density":[0.5],"N":0,"seed":1}"#),
            Err(Error::InvalidRecipe(_))
        ));
        assert!(Recipe::parse(r#"{"family":"er","N":2,"seed":1}"#).is_err());
        assert!(Recipe::parse(
            r#"{"family":"er","n":[10],"density":[0.5],"N":2,"seed":1,"bogus":1}"#
        )
        .is_err());
        let explicit = Recipe::parse(
            r#"{"families":["er"],"cells":[{"n":68,"density":0.5},{"n":114,"density":0.4}],"samples":1,"k":5,"seed":3}"#,
        )
        .unwrap();
        assert_eq!(explicit.cells().len(), 2);
    }

    #[test]
    fn complete_graphs_have_zero_distance() {
        let specs: Vec<GenSpec> = (0..4).map(|s| GenSpec::er(12, 1.0, s)).collect();
        let summary = batch_experiment(&specs, 3, 0.25).unwrap();
        assert_eq!(summary.mean_swap, 0.0);
        assert_eq!(summary.sd_swap, Coefficient::Defined(0.0));
    }

    #[test]
    fn single_sample_batch_is_an_error() {
        let specs = [GenSpec::er(12, 0.5, 1)];
        assert!(matches!(
            batch_experiment(&specs, 3, 0.25),
            Err(Error::InsufficientSamples { .. })
        ));
    }

    #[test]
    fn single_sample_recipe_reports_undefined_sd() {
        let r = Recipe::parse(r#"{"family":"er","n":[20],"density":[0.5],"N":1,"k":3,"seed":5}"#)
            .unwrap();
        let out = run_recipe(&r).unwrap();
        assert_eq!(out.samples.len(), 1);
        assert_eq!(out.cells[0].sd_swap, Coefficient::Undefined);
        assert_eq!(run_recipe(&r).unwrap(), out);
    }
}
