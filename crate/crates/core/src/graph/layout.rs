use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Shape of a generalized path: `n` blocks of `k`-vertex antiregular graphs,
/// optionally followed by one appended vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BlockLayout {
    k: usize,
    n: usize,
    extra_vertex: bool,
}

impl BlockLayout {
    pub fn new(k: usize, n: usize, extra_vertex: bool) -> Result<Self> {
        if k < 2 {
            return Err(Error::InvalidLayout(format!(
                "block size k = {k} must be at least 2"
            )));
        }
        if n < 1 {
            return Err(Error::InvalidLayout(
                "block count n must be at least 1".into(),
            ));
        }
        Ok(Self { k, n, extra_vertex })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn extra_vertex(&self) -> bool {
        self.extra_vertex
    }

    pub fn with_extra_vertex(self, extra_vertex: bool) -> Self {
        Self {
            extra_vertex,
            ..self
        }
    }

    /// `⌈k/2⌉`: label of the first degree-repeating vertex inside a block.
    pub fn kappa_upper(&self) -> usize {
        self.k.div_ceil(2)
    }

    /// `⌊k/2⌋`: the repeated degree value.
    pub fn kappa_lower(&self) -> usize {
        self.k / 2
    }

    /// 1 when the two degree-repeating vertices are adjacent (k even).
    pub fn beta(&self) -> usize {
        usize::from(self.k % 2 == 0)
    }

    pub fn num_vertices(&self) -> usize {
        self.k * self.n + usize::from(self.extra_vertex)
    }
}
