mod common;

use lapctl_core::control::{
    gramian, kalman_rank_oracle, min_energy_control, pbh_controllable, verify_append_vertex,
    ControlSetup, PBH_TOL,
};
use lapctl_core::graph::{build_generalized_path, build_path, BlockLayout};
use lapctl_core::spectral::{
    check_anchoring, check_distinct, check_interlacing, eigh, interconnection_laplacian,
    DISTINCT_REL_TOL, EIGEN_TOL,
};
use lapctl_core::{laplacian, Error, SymmetricMatrix};

fn grid() -> impl Iterator<Item = (usize, usize)> {
    (2..=8).flat_map(|k| (1..=6).map(move |n| (k, n)))
}

#[test]
fn second_repeated_vertex_input_fails_only_at_known_cells() {
    let mut uncontrollable = Vec::new();
    for (k, n) in grid() {
        let s = build_generalized_path(&BlockLayout::new(k, n, false).unwrap()).unwrap();
        let moved = s.with_input(s.input_vertex() + 1).unwrap();
        if !pbh_controllable(&moved, PBH_TOL).unwrap().controllable {
            uncontrollable.push((k, n));
        }
    }
    assert_eq!(uncontrollable, vec![(2, 3), (2, 6), (3, 5)]);
}

#[test]
fn appending_preserves_controllability_on_grid() {
    for (k, n) in grid() {
        let s = build_generalized_path(&BlockLayout::new(k, n, false).unwrap()).unwrap();
        let r = verify_append_vertex(&s, PBH_TOL).unwrap();
        assert!(r.passed, "k={k} n={n}: {:?}", r.worst());
    }
}

#[test]
fn interconnection_spectra_on_grid() {
    for (k, n) in grid() {
        let layout = BlockLayout::new(k, n, false).unwrap();
        let full = interconnection_laplacian(&layout).unwrap();
        let ev = eigh(&full).unwrap().eigenvalues;
        assert!(check_distinct(&ev, DISTINCT_REL_TOL).passed, "k={k} n={n}");
        assert!(
            check_anchoring(&layout, &ev, EIGEN_TOL, 0.0)
                .unwrap()
                .passed
        );

        // adding the cross edges one at a time interlaces each time
        let block = laplacian(&lapctl_core::build_antiregular(k).unwrap());
        let mut m = SymmetricMatrix::block_diagonal_repeat(&block, n);
        for i in 1..n {
            let before = eigh(&m).unwrap().eigenvalues;
            m = m
                .add(&SymmetricMatrix::outer(&lapctl_core::spectral::connector(
                    &layout, i,
                )))
                .unwrap();
            let after = eigh(&m).unwrap().eigenvalues;
            assert!(
                check_interlacing(&before, &after, EIGEN_TOL)
                    .unwrap()
                    .passed
            );
        }
        assert_eq!(m.max_abs_diff(&full), 0.0);
    }
}

#[test]
fn gramian_matches_quadrature_on_small_systems() {
    let mut rng = common::rng(7);
    let mut setups = vec![
        ControlSetup::new(build_path(2).unwrap(), 1).unwrap(),
        build_generalized_path(&BlockLayout::new(3, 2, true).unwrap()).unwrap(),
        build_generalized_path(&BlockLayout::new(5, 2, false).unwrap()).unwrap(),
    ];
    for v in [4, 6, 10] {
        setups
            .push(ControlSetup::new(common::random_connected_graph(&mut rng, v, 0.3), 1).unwrap());
    }
    for s in &setups {
        for t1 in [0.5, 2.0] {
            let closed = gramian(s, t1).unwrap().gramian;
            let quad = common::gramian_by_simpson(s, t1, 2000);
            for (i, row) in quad.iter().enumerate() {
                for (j, w) in row.iter().enumerate() {
                    assert!((closed.get(i, j) - w).abs() < 1e-8);
                }
            }
        }
    }
}

#[test]
fn gramian_definiteness_tracks_controllability() {
    let mut rng = common::rng(11);
    for _ in 0..40 {
        let g = common::random_connected_graph(&mut rng, 6, 0.4);
        for input in 1..=6 {
            let s = ControlSetup::new(g.clone(), input).unwrap();
            let controllable = kalman_rank_oracle(&s).unwrap();
            let w = gramian(&s, 5.0).unwrap();
            if controllable {
                assert!(w.min_eigenvalue > 1e-12, "{}", g.to_json());
            } else {
                assert!(w.min_eigenvalue < 1e-10, "{}", g.to_json());
            }
        }
    }
}

#[test]
fn energy_integral_matches_quadratic_form() {
    for layout in [(2, 3, false), (3, 2, false), (4, 1, true)] {
        let s = build_generalized_path(&BlockLayout::new(layout.0, layout.1, layout.2).unwrap())
            .unwrap();
        let n = s.num_vertices();
        let x0: Vec<f64> = (0..n).map(|i| i as f64 - 2.0).collect();
        let xf = vec![3.0; n];
        let r = min_energy_control(&s, &x0, &xf, 3.0, 1000).unwrap();
        assert!(r.energy >= 0.0);
        let rel = (r.energy - r.energy_quadratic).abs() / r.energy_quadratic;
        assert!(rel < 5e-3, "{layout:?}: {rel}");
        assert!(r.terminal_error < 1e-6 * 3.0);
    }
}

#[test]
fn steering_rejects_uncontrollable_and_disconnected() {
    let s = ControlSetup::new(build_path(5).unwrap(), 3).unwrap();
    let x = vec![0.0; 5];
    assert!(matches!(
        min_energy_control(&s, &x, &x, 1.0, 100),
        Err(Error::Uncontrollable(3))
    ));
    let g = lapctl_core::Graph::new(3, [(1, 2)]).unwrap();
    let s = ControlSetup::new(g, 1).unwrap();
    assert!(matches!(
        min_energy_control(&s, &[0.0; 3], &[0.0; 3], 1.0, 100),
        Err(Error::Disconnected)
    ));
}
