//! Pebble configurations and move sequences.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Pebble counts per vertex. Serializes as a plain JSON array.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Configuration {
    counts: Vec<u32>,
}

impl Configuration {
    pub fn new(counts: Vec<u32>) -> Configuration {
        Configuration { counts }
    }

    pub fn zeros(order: usize) -> Configuration {
        Configuration {
            counts: vec![0; order],
        }
    }

    /// Builds a configuration of `order` vertices from (vertex, count) pairs.
    pub fn from_pairs(order: usize, pairs: &[(usize, u32)]) -> Result<Configuration> {
        let mut counts = vec![0u32; order];
        for &(v, c) in pairs {
            if v >= order {
                return Err(Error::VertexOutOfRange { vertex: v, order });
            }
            counts[v] += c;
        }
        Ok(Configuration { counts })
    }

    pub fn len(&self) -> usize {
        self.counts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    pub fn get(&self, v: usize) -> u32 {
        self.counts[v]
    }

    pub fn set(&mut self, v: usize, c: u32) {
        self.counts[v] = c;
    }

    pub fn counts(&self) -> &[u32] {
        &self.counts
    }

    /// Total number of pebbles (the configuration's weight).
    pub fn weight(&self) -> u64 {
        self.counts.iter().map(|&c| c as u64).sum()
    }

    /// Vertices with at least one pebble.
    pub fn support(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.counts
            .iter()
            .enumerate()
            .filter(|&(_, &c)| c > 0)
            .map(|(v, &c)| (v, c))
    }

    pub fn pointwise_le(&self, other: &Configuration) -> bool {
        self.len() == other.len()
            && self
                .counts
                .iter()
                .zip(&other.counts)
                .all(|(a, b)| a <= b)
    }

    pub fn check_for(&self, g: &Graph) -> Result<()> {
        if self.len() == g.order() {
            Ok(())
        } else {
            Err(Error::InvalidParameter(format!(
                "configuration covers {} vertices, graph has {}",
                self.len(),
                g.order()
            )))
        }
    }
}

/// Ordered pebbling steps; each moves two pebbles off `from` and places one
/// on the adjacent `to`. Serializes as a JSON list of pairs.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MoveSequence(pub Vec<(usize, usize)>);

impl MoveSequence {
    /// Replays the moves from `start`, validating adjacency and pebble
    /// availability at every step. Returns the final configuration.
    pub fn replay(&self, g: &Graph, start: &Configuration) -> Result<Configuration> {
        start.check_for(g)?;
        let mut f = start.clone();
        for (i, &(from, to)) in self.0.iter().enumerate() {
            g.check_vertex(from)?;
            g.check_vertex(to)?;
            if !g.has_edge(from, to) {
                return Err(Error::InvalidWitness(format!(
                    "step {i}: {from} and {to} are not adjacent"
                )));
            }
            if f.get(from) < 2 {
                return Err(Error::InvalidWitness(format!(
                    "step {i}: vertex {from} has {} pebbles, needs 2",
                    f.get(from)
                )));
            }
            f.set(from, f.get(from) - 2);
            f.set(to, f.get(to) + 1);
        }
        Ok(f)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}
