use serde::Serialize;

use crate::error::Result;
use crate::graph::{laplacian, Graph};
use crate::matrix::SymmetricMatrix;

/// A graph together with the single vertex that receives the control input;
/// the control vector is `b = e_{input_vertex}`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ControlSetup {
    graph: Graph,
    input_vertex: usize,
}

impl ControlSetup {
    pub fn new(graph: Graph, input_vertex: usize) -> Result<Self> {
        graph.check_vertex(input_vertex)?;
        Ok(Self {
            graph,
            input_vertex,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// 1-based.
    pub fn input_vertex(&self) -> usize {
        self.input_vertex
    }

    pub fn num_vertices(&self) -> usize {
        self.graph.num_vertices()
    }

    pub fn b(&self) -> Vec<f64> {
        let mut b = vec![0.0; self.num_vertices()];
        b[self.input_vertex - 1] = 1.0;
        b
    }

    pub fn laplacian(&self) -> SymmetricMatrix {
        laplacian(&self.graph)
    }

    /// Same graph, input moved to `vertex`.
    pub fn with_input(&self, vertex: usize) -> Result<Self> {
        Self::new(self.graph.clone(), vertex)
    }
}
