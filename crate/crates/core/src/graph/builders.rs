use super::{BlockLayout, Graph};
use crate::control::ControlSetup;
use crate::error::{Error, Result};

/// Path `1 – 2 – … – v`.
pub fn build_path(v: usize) -> Result<Graph> {
    if v < 1 {
        return Err(Error::InvalidParameter(
            "a path needs at least one vertex".into(),
        ));
    }
    Graph::new(v, (1..v).map(|i| (i, i + 1)))
}

/// Antiregular graph on `k ≥ 2` vertices labeled by non-increasing degree.
///
/// `{i, j}` is an edge iff `i + j ≤ k + 1`. Vertex 1 dominates, vertex `k`
/// is terminal, and vertices `⌈k/2⌉`, `⌈k/2⌉ + 1` share degree `⌊k/2⌋`.
pub fn build_antiregular(k: usize) -> Result<Graph> {
    if k < 2 {
        return Err(Error::InvalidParameter(format!(
            "antiregular graphs need k ≥ 2, got {k}"
        )));
    }
    let edges = (1..=k).flat_map(|i| {
        ((i + 1)..=k)
            .filter(move |&j| i + j <= k + 1)
            .map(move |j| (i, j))
    });
    Graph::new(k, edges)
}

/// `n` copies of the `k`-vertex antiregular graph, block `p` occupying labels
/// `(p−1)k+1 ..= pk`, chained by the edges `{ik, ik+⌈k/2⌉}` for `i = 1..n−1`.
pub fn interconnect_antiregular(layout: &BlockLayout) -> Result<Graph> {
    if layout.extra_vertex() {
        return Err(Error::InvalidLayout(
            "interconnection takes a layout without the appended vertex".into(),
        ));
    }
    let (k, n) = (layout.k(), layout.n());
    let block = build_antiregular(k)?;
    let mut g = Graph::empty(k * n)?;
    for p in 0..n {
        for (u, v) in block.edges() {
            g.add_edge(p * k + u, p * k + v)?;
        }
    }
    for i in 1..n {
        g.add_edge(i * k, i * k + layout.kappa_upper())?;
    }
    Ok(g)
}

/// Adds vertex `num_vertices + 1` joined only to `attach_to`.
pub fn append_vertex(g: &Graph, attach_to: usize) -> Result<Graph> {
    g.check_vertex(attach_to)?;
    let new_vertex = g.num_vertices() + 1;
    let mut out = Graph::new(new_vertex, g.edges())?;
    out.add_edge(new_vertex, attach_to)?;
    Ok(out)
}

/// The interconnection together with its designated input vertex: the first
/// block's vertex `⌈k/2⌉`, or the appended vertex (hung on that same vertex)
/// when the layout asks for one.
pub fn build_generalized_path(layout: &BlockLayout) -> Result<ControlSetup> {
    let base = interconnect_antiregular(&layout.with_extra_vertex(false))?;
    let anchor = layout.kappa_upper();
    if layout.extra_vertex() {
        let g = append_vertex(&base, anchor)?;
        let input = g.num_vertices();
        ControlSetup::new(g, input)
    } else {
        ControlSetup::new(base, anchor)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{degree_sequence, DegreeSequence};

    fn degrees(g: &Graph) -> Vec<usize> {
        degree_sequence(g).values().to_vec()
    }

    #[test]
    fn paths() {
        assert!(build_path(0).is_err());
        assert_eq!(build_path(1).unwrap().num_edges(), 0);
        assert_eq!(
            build_path(3).unwrap().edges().collect::<Vec<_>>(),
            vec![(1, 2), (2, 3)]
        );
        let p8 = build_path(8).unwrap();
        assert_eq!(p8.num_edges(), 7);
        assert_eq!(degrees(&p8), vec![2, 2, 2, 2, 2, 2, 1, 1]);
    }

    #[test]
    fn small_antiregular_graphs() {
        assert!(build_antiregular(1).is_err());
        let a2 = build_antiregular(2).unwrap();
        assert_eq!(a2.edges().collect::<Vec<_>>(), vec![(1, 2)]);

        let a4 = build_antiregular(4).unwrap();
        assert_eq!(
            a4.edges().collect::<Vec<_>>(),
            vec![(1, 2), (1, 3), (1, 4), (2, 3)]
        );
        assert_eq!(a4.degrees(), vec![3, 2, 2, 1]);
        assert!(a4.has_edge(2, 3));

        let a5 = build_antiregular(5).unwrap();
        assert_eq!(a5.degrees(), vec![4, 3, 2, 2, 1]);
        assert!(!a5.has_edge(3, 4));
    }

    #[test]
    fn antiregular_has_one_repeated_degree() {
        for k in 2..=30 {
            let g = build_antiregular(k).unwrap();
            let layout = BlockLayout::new(k, 1, false).unwrap();
            let deg = g.degrees();
            // labels already sorted by degree
            assert_eq!(
                DegreeSequence::new(deg.clone()).unwrap().values(),
                deg.as_slice()
            );
            let repeats: Vec<usize> = (1..k).filter(|&i| deg[i - 1] == deg[i]).collect();
            assert_eq!(repeats, vec![layout.kappa_upper()], "k = {k}");
            assert_eq!(deg[layout.kappa_upper() - 1], layout.kappa_lower());
            assert_eq!(
                g.has_edge(layout.kappa_upper(), layout.kappa_upper() + 1),
                layout.beta() == 1
            );
            assert!(g.is_connected());
        }
    }

    #[test]
    fn interconnections() {
        let p8 = interconnect_antiregular(&BlockLayout::new(2, 4, false).unwrap()).unwrap();
        assert_eq!(p8, build_path(8).unwrap());

        let g = interconnect_antiregular(&BlockLayout::new(4, 2, false).unwrap()).unwrap();
        assert_eq!(g.num_vertices(), 8);
        assert!(g.has_edge(4, 6));
        assert_eq!(g.num_edges(), 2 * 4 + 1);
        assert_eq!(degrees(&g), vec![3, 3, 3, 2, 2, 2, 2, 1]);

        let g = interconnect_antiregular(&BlockLayout::new(3, 1, false).unwrap()).unwrap();
        assert_eq!(g, build_antiregular(3).unwrap());

        assert!(interconnect_antiregular(&BlockLayout::new(3, 2, true).unwrap()).is_err());
    }

    #[test]
    fn paths_are_interconnected_two_vertex_blocks() {
        for n in 1..=10 {
            let g = interconnect_antiregular(&BlockLayout::new(2, n, false).unwrap()).unwrap();
            assert_eq!(g, build_path(2 * n).unwrap());
        }
    }

    #[test]
    fn appending() {
        let p3 = append_vertex(&build_path(2).unwrap(), 2).unwrap();
        assert_eq!(p3, build_path(3).unwrap());

        let g = append_vertex(&build_antiregular(4).unwrap(), 2).unwrap();
        assert_eq!(g.num_vertices(), 5);
        assert_eq!(degrees(&g), vec![3, 3, 2, 1, 1]);

        let base = interconnect_antiregular(&BlockLayout::new(4, 2, false).unwrap()).unwrap();
        assert_eq!(append_vertex(&base, 2).unwrap().num_vertices(), 9);
        assert!(append_vertex(&base, 0).is_err());
        assert!(append_vertex(&base, 9).is_err());
    }

    #[test]
    fn generalized_paths() {
        let s = build_generalized_path(&BlockLayout::new(2, 4, false).unwrap()).unwrap();
        assert_eq!(s.graph(), &build_path(8).unwrap());
        assert_eq!(s.input_vertex(), 1);

        let s = build_generalized_path(&BlockLayout::new(4, 2, false).unwrap()).unwrap();
        assert_eq!(s.graph().num_vertices(), 8);
        assert_eq!(s.input_vertex(), 2);

        let s = build_generalized_path(&BlockLayout::new(4, 2, true).unwrap()).unwrap();
        assert_eq!(s.graph().num_vertices(), 9);
        assert_eq!(s.input_vertex(), 9);
        assert_eq!(s.graph().neighbors(9), vec![2]);
    }

    #[test]
    fn builders_return_connected_graphs() {
        for k in 2..=8 {
            for n in 1..=6 {
                for extra in [false, true] {
                    let s =
                        build_generalized_path(&BlockLayout::new(k, n, extra).unwrap()).unwrap();
                    assert!(s.graph().is_connected());
                }
            }
        }
    }
}
