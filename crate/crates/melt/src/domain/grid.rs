use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Axes of the experiment grid search. Context sizes pair elementwise with
/// max generation lengths; the resulting pairs cross with every batch size.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GridSpec {
    pub contexts: Vec<u32>,
    pub max_gen_lengths: Vec<u32>,
    pub batch_sizes: Vec<u32>,
}

/// One expanded grid configuration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GridPoint {
    pub context_size: u32,
    pub max_gen_length: u32,
    pub batch_size: u32,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GridError {
    #[error("contexts and max_gen_lengths pair elementwise but have lengths {contexts} and {max_gen_lengths}")]
    LengthMismatch {
        contexts: usize,
        max_gen_lengths: usize,
    },
    #[error("grid entries must be positive token counts")]
    NonPositiveEntry,
}

/// Expands a grid spec into concrete configurations: elementwise
/// (context, max_gen) pairs crossed with batch sizes, pair index major and
/// batch index minor. The output length is `contexts.len() * batch_sizes.len()`.
pub fn expand_grid(grid: &GridSpec) -> Result<Vec<GridPoint>, GridError> {
    if grid.contexts.len() != grid.max_gen_lengths.len() {
        return Err(GridError::LengthMismatch {
            contexts: grid.contexts.len(),
            max_gen_lengths: grid.max_gen_lengths.len(),
        });
    }
    if grid
        .contexts
        .iter()
        .chain(&grid.max_gen_lengths)
        .chain(&grid.batch_sizes)
        .any(|&v| v == 0)
    {
        return Err(GridError::NonPositiveEntry);
    }
    let mut points = Vec::with_capacity(grid.contexts.len() * grid.batch_sizes.len());
    for (&context_size, &max_gen_length) in grid.contexts.iter().zip(&grid.max_gen_lengths) {
        for &batch_size in &grid.batch_sizes {
            points.push(GridPoint {
                context_size,
                max_gen_length,
                batch_size,
            });
        }
    }
    Ok(points)
}
