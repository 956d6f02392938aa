use std::sync::OnceLock;

use proptest::prelude::*;

use sombor::catalog::canonical_form;
use sombor::graph::disjoint_union;
use sombor::{
    build_matrix, char_poly, eigenvalues, energy, eso_index, generate_regular, so_index, CharPoly, Graph,
    WeightScheme, WeightedMatrix,
};

const SCHEMES: [WeightScheme; 3] = [WeightScheme::EllipticSombor, WeightScheme::Sombor, WeightScheme::Adjacency];

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let all = (0..n).flat_map(|j| (0..j).map(move |i| (i, j)));
            Graph::new(n, all.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e)).unwrap()
        })
    })
}

fn graph_with_perm(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    graph(max_n).prop_flat_map(|g| {
        let perm = Just((0..g.order()).collect::<Vec<_>>()).prop_shuffle();
        (Just(g), perm)
    })
}

fn symmetric(max_n: usize) -> impl Strategy<Value = WeightedMatrix> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(-10.0f64..10.0, n * n).prop_map(move |raw| {
            let mut data = vec![0.0; n * n];
            for i in 0..n {
                for j in i..n {
                    data[i * n + j] = raw[i * n + j];
                    data[j * n + i] = raw[i * n + j];
                }
            }
            WeightedMatrix::from_row_major(n, data).unwrap()
        })
    })
}

const REGULAR: [(usize, usize); 6] = [(6, 3), (8, 3), (7, 4), (8, 5), (9, 4), (10, 3)];

fn regular_corpus() -> &'static [Vec<Graph>] {
    static CORPUS: OnceLock<Vec<Vec<Graph>>> = OnceLock::new();
    CORPUS.get_or_init(|| {
        REGULAR
            .iter()
            .map(|&(n, k)| generate_regular(n, k, false).unwrap().iter().map(|c| c.graph()).collect())
            .collect()
    })
}

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(1.0)
}

fn poly_dev(p: &CharPoly, m: &WeightedMatrix) -> f64 {
    let s = eigenvalues(m).unwrap();
    p.max_scaled_deviation(&char_poly(m).unwrap(), &s.coefficient_scale())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn handshake(g in graph(12)) {
        prop_assert_eq!(g.degrees().sum(), 2 * g.edges().len());
    }

    #[test]
    fn union_is_associative_and_split_by_components(a in graph(5), b in graph(5), c in graph(5)) {
        let left = disjoint_union([&disjoint_union([&a, &b]), &c]);
        let right = disjoint_union([&a, &disjoint_union([&b, &c])]);
        prop_assert_eq!(&left, &right);

        let mut parts: Vec<String> = [&a, &b, &c]
            .iter()
            .flat_map(|g| g.connected_components())
            .map(|g| canonical_form(&g).g6().to_string())
            .collect();
        let mut split: Vec<String> = left
            .connected_components()
            .iter()
            .map(|g| canonical_form(g).g6().to_string())
            .collect();
        parts.sort();
        split.sort();
        prop_assert_eq!(parts, split);
    }

    #[test]
    fn matrices_follow_relabeling((g, perm) in graph_with_perm(10)) {
        let h = g.relabel(&perm);
        for scheme in SCHEMES {
            let (mg, mh) = (build_matrix::<f64>(&g, scheme), build_matrix::<f64>(&h, scheme));
            for i in 0..g.order() {
                for j in 0..g.order() {
                    prop_assert_eq!(mg.get(i, j), mh.get(perm[i], perm[j]));
                }
            }
        }
        prop_assert!(rel(eso_index::<f64>(&h), eso_index::<f64>(&g)) <= 1e-12);
        prop_assert!(rel(so_index::<f64>(&h), so_index::<f64>(&g)) <= 1e-12);
        prop_assert_eq!(canonical_form(&g), canonical_form(&h));
    }

    #[test]
    fn squared_entries_are_twice_squared_weights(g in graph(10)) {
        let d = g.degrees();
        for scheme in SCHEMES {
            let m = build_matrix::<f64>(&g, scheme);
            let entries: f64 = m.as_slice().iter().map(|x| x * x).sum();
            let weights: f64 = g.edges().iter().map(|&(u, v)| scheme.weight::<f64>(d.get(u), d.get(v)).powi(2)).sum();
            prop_assert!(rel(entries, 2.0 * weights) <= 1e-12);
        }
    }

    #[test]
    fn eigenvalues_match_trace_and_frobenius(m in symmetric(12)) {
        let s = eigenvalues(&m).unwrap();
        let fro2 = m.frobenius_norm().powi(2);
        prop_assert!((s.sum() - m.trace()).abs() <= 1e-8 * fro2.sqrt().max(1.0));
        prop_assert!(rel(s.sum_of_squares(), fro2) <= 1e-8);
    }

    #[test]
    fn char_poly_vanishes_on_spectrum(m in symmetric(10)) {
        let s = eigenvalues(&m).unwrap();
        let p = char_poly(&m).unwrap();
        let bound = 1e-6 * p.l1_norm();
        for &x in s.values() {
            prop_assert!(p.eval(x).abs() <= bound, "p({x}) = {}", p.eval(x));
        }
    }

    #[test]
    fn union_charpoly_is_product(parts in proptest::collection::vec(graph(5), 1..4)) {
        let u = disjoint_union(&parts);
        let m = build_matrix::<f64>(&u, WeightScheme::EllipticSombor);
        let prod = parts.iter().fold(CharPoly::one(), |acc, g| {
            &acc * &char_poly(&build_matrix::<f64>(g, WeightScheme::EllipticSombor)).unwrap()
        });
        prop_assert!(poly_dev(&prod, &m) <= 1e-8);
        let sum: f64 = parts
            .iter()
            .map(|g| energy(&build_matrix::<f64>(g, WeightScheme::EllipticSombor)).unwrap().energy)
            .sum();
        prop_assert!(rel(sum, energy(&m).unwrap().energy) <= 1e-8);
    }

    #[test]
    fn bipartite_spectra_are_symmetric(g in graph(10)) {
        prop_assume!(g.is_bipartite());
        let s = eigenvalues(&build_matrix::<f64>(&g, WeightScheme::EllipticSombor)).unwrap();
        let v = s.values();
        let scale = v.iter().fold(1.0f64, |a, x| a.max(x.abs()));
        for (x, y) in v.iter().zip(v.iter().rev()) {
            prop_assert!((x + y).abs() <= 1e-9 * scale);
        }
    }

    #[test]
    fn regular_scaling_holds_entrywise(pick in (0usize..6, any::<prop::sample::Index>())) {
        let k = REGULAR[pick.0].1;
        let all = &regular_corpus()[pick.0];
        let g = &all[pick.1.index(all.len())];
        let eso = build_matrix::<f64>(g, WeightScheme::EllipticSombor);
        let so = build_matrix::<f64>(g, WeightScheme::Sombor);
        let adj = build_matrix::<f64>(g, WeightScheme::Adjacency);
        let kf = k as f64;
        for ((e, s), a) in eso.as_slice().iter().zip(so.as_slice()).zip(adj.as_slice()) {
            prop_assert!((e - 2.0 * kf * s).abs() <= 4.0 * f64::EPSILON * e.abs());
            prop_assert!((s - kf * std::f64::consts::SQRT_2 * a).abs() <= 4.0 * f64::EPSILON * s.abs());
        }
        let (ee, es) = (energy(&eso).unwrap().energy, energy(&so).unwrap().energy);
        prop_assert!(rel(ee, 2.0 * kf * es) <= 1e-9);
    }
}
