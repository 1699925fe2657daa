use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::params::{ConstructionParams, Layout, ParamError, MAX_SAMPLE_VERTICES};
use crate::exec::Exec;
use crate::graph::Graph;

/// A graph on `1..=k*m` together with its partition into `k` consecutive
/// layers of `m` labels. No edge lies inside a layer.
#[derive(Clone, Debug, PartialEq)]
pub struct LayeredGraph {
    pub graph: Graph,
    pub layers: usize,
    pub layer_size: usize,
}

impl LayeredGraph {
    pub fn new(graph: Graph, layers: usize, layer_size: usize) -> Result<Self, LayerViolation> {
        if graph.n() != layers * layer_size {
            return Err(LayerViolation::VertexCount {
                n: graph.n(),
                expected: layers * layer_size,
            });
        }
        let lg = LayeredGraph {
            graph,
            layers,
            layer_size,
        };
        if let Some((u, v)) = lg
            .graph
            .edges()
            .find(|&(u, v)| lg.layer_of(u) == lg.layer_of(v))
        {
            return Err(LayerViolation::IntraLayerEdge(u, v));
        }
        Ok(lg)
    }

    pub fn layer_of(&self, v: usize) -> usize {
        (v - 1) / self.layer_size + 1
    }

    pub fn layer(&self, i: usize) -> std::ops::RangeInclusive<usize> {
        (i - 1) * self.layer_size + 1..=i * self.layer_size
    }
}

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum LayerViolation {
    #[error("graph has {n} vertices, layers cover {expected}")]
    VertexCount { n: usize, expected: usize },
    #[error("edge {{{0}, {1}}} lies inside one layer")]
    IntraLayerEdge(usize, usize),
}

/// Draws the layered random graph for `params`.
pub fn sample_layered_graph(params: &ConstructionParams, exec: Exec) -> Result<LayeredGraph, ParamError> {
    let layout = params.layout()?;
    if layout.vertex_count() > MAX_SAMPLE_VERTICES {
        return Err(ParamError::TooLarge(layout.vertex_count() as u128));
    }
    Ok(sample_layout(&layout, params.seed, exec))
}

/// Samples every cross-layer pair independently.
///
/// Layer pair `(i, j)` draws from its own ChaCha8 stream: seeded with `seed`,
/// stream index `i * k + j`. Pairs in `A_i x A_j` are visited in
/// lexicographic order, so the result is independent of scheduling.
pub fn sample_layout(layout: &Layout, seed: u64, exec: Exec) -> LayeredGraph {
    let k = layout.k;
    let m = layout.m;
    let pairs: Vec<(usize, usize)> = (1..k)
        .flat_map(|i| (i + 1..=k).map(move |j| (i, j)))
        .collect();
    let per_pair = exec.map_slice(&pairs, |&(i, j)| {
        let p = layout.probability(i, j);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream((i * k + j) as u64);
        let mut edges = Vec::new();
        for x in layout.layer(i) {
            for y in layout.layer(j) {
                if rng.gen_bool(p) {
                    edges.push((x, y));
                }
            }
        }
        edges
    });
    let mut graph = Graph::new(k * m);
    for (x, y) in per_pair.into_iter().flatten() {
        graph.add_edge(x, y).expect("cross-layer pair");
    }
    LayeredGraph {
        graph,
        layers: k,
        layer_size: m,
    }
}
