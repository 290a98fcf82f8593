use p3_convexity::caterpillar::{
    decompose, geodetic_number, hull_number, is_basic, percolation_time, realize, recognize_caterpillar,
    ReducedDegreeSequence,
};
use p3_convexity::generate::{random_connected_graph, random_uig, random_uig_2connected, seeded};
use p3_convexity::io::{from_graph6, parse_graph, to_graph6};
use p3_convexity::percolation::percolate;
use p3_convexity::unit_interval::{star_transform, UnitIntervalModel};
use p3_convexity::{Graph, GraphDocument, Oracle};
use proptest::prelude::*;

fn connected_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n, any::<u64>(), 0.05f64..0.8).prop_map(|(n, seed, p)| random_connected_graph(&mut seeded(seed), n, p))
}

fn any_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(move |bits| {
            let mut g = Graph::new(n);
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            for ((u, v), on) in pairs.zip(bits) {
                if on {
                    g.add_edge(u, v).unwrap();
                }
            }
            g
        })
    })
}

fn caterpillar_rds() -> impl Strategy<Value = ReducedDegreeSequence> {
    proptest::collection::vec(2u8..=4, 0..10).prop_map(|mid| {
        let mut t = vec![1];
        t.extend(mid);
        t.push(1);
        ReducedDegreeSequence::new(t).unwrap()
    })
}

fn uig(max_n: usize) -> impl Strategy<Value = UnitIntervalModel> {
    (3..=max_n, any::<u64>()).prop_map(|(n, seed)| random_uig(&mut seeded(seed), n).unwrap())
}

fn uig_2connected(max_n: usize) -> impl Strategy<Value = UnitIntervalModel> {
    (3..=max_n, any::<u64>()).prop_map(|(n, seed)| random_uig_2connected(&mut seeded(seed), n).unwrap())
}

fn is_position_interval(set: &[usize]) -> bool {
    set.windows(2).all(|w| w[1] == w[0] + 1)
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 200, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn document_round_trip(g in any_graph(10)) {
        let doc = GraphDocument::from_graph(&g);
        prop_assert_eq!(parse_graph(&doc.to_string()).unwrap(), doc);
        prop_assert_eq!(from_graph6(&to_graph6(&g)).unwrap(), g);
    }

    #[test]
    fn uig_document_keeps_order(m in uig(10)) {
        let doc = GraphDocument::from_graph(m.graph()).with_order(m.order());
        let back = parse_graph(&doc.to_string()).unwrap();
        prop_assert_eq!(back.order.as_deref(), Some(m.order()));
    }

    #[test]
    fn triangle_inequality(g in connected_graph(8)) {
        let d: Vec<Vec<usize>> =
            (0..g.n()).map(|v| g.bfs_distances(v).into_iter().map(Option::unwrap).collect()).collect();
        for u in 0..g.n() {
            for v in 0..g.n() {
                for w in 0..g.n() {
                    prop_assert!(d[u][w] <= d[u][v] + d[v][w]);
                }
            }
        }
    }

    #[test]
    fn cut_vertices_disconnect(g in any_graph(8)) {
        let blocks = g.blocks();
        let base = g.components().len();
        for v in 0..g.n() {
            let after = g.remove_vertex(v).components().len();
            prop_assert_eq!(blocks.is_cut_vertex(v), after > base, "vertex {}", v);
        }
    }

    #[test]
    fn factorization_round_trip(r in caterpillar_rds()) {
        let dec = decompose(&r).unwrap();
        prop_assert_eq!(dec.concatenated(), r.terms().to_vec());
        prop_assert!(dec.factors.iter().all(|f| is_basic(f)));
    }

    #[test]
    fn caterpillar_scalars_ignore_direction(r in caterpillar_rds(), extra in 2usize..4) {
        let cat = recognize_caterpillar(&realize(&r, extra).unwrap()).unwrap().unwrap();
        let rev = cat.reversed();
        prop_assert_eq!(decompose(&cat.rds).unwrap().p(), decompose(&rev.rds).unwrap().p());
        prop_assert_eq!(geodetic_number(&cat).unwrap(), geodetic_number(&rev).unwrap());
        prop_assert_eq!(hull_number(&cat), hull_number(&rev));
        prop_assert_eq!(percolation_time(&cat).unwrap(), percolation_time(&rev).unwrap());
        prop_assert!(hull_number(&cat) <= geodetic_number(&cat).unwrap());
    }

    #[test]
    fn distances_grow_along_the_order(m in uig(10)) {
        let g = m.ordered_graph();
        for u in 0..m.n() {
            let d: Vec<usize> = g.bfs_distances(u).into_iter().map(Option::unwrap).collect();
            prop_assert!(d[u..].windows(2).all(|w| w[0] <= w[1]));
            prop_assert!(d[..=u].windows(2).all(|w| w[0] >= w[1]));
        }
    }

    #[test]
    fn endpoint_pairs_percolate_in_diameter_time(m in uig_2connected(10)) {
        let star = star_transform(&m).unwrap().model;
        let g = star.ordered_graph();
        let n = star.n();
        let diam = g.diameter().unwrap();
        for seeds in [[0, 1], [n - 2, n - 1]] {
            let trace = percolate(g, &seeds).unwrap();
            prop_assert!(trace.percolated());
            prop_assert_eq!(trace.final_round(), diam);
        }
    }

    #[test]
    fn two_vertex_hull_sets(m in uig_2connected(10)) {
        let g = m.ordered_graph();
        for u in 0..m.n() {
            for v in u + 1..m.n() {
                if !g.neighbors(u).iter().any(|w| g.has_edge(*w, v)) {
                    continue;
                }
                let trace = percolate(g, &[u, v]).unwrap();
                prop_assert!(trace.percolated(), "{{{}, {}}}", u, v);
                for round in trace.rounds().iter().skip(2) {
                    prop_assert!(is_position_interval(round), "round {:?} from {{{}, {}}}", round, u, v);
                }
                let last = m.n() - 1;
                if (u, v) == (0, last) {
                    continue;
                }
                let ends = trace.time_of(0).max(trace.time_of(last)).unwrap();
                prop_assert_eq!(ends, trace.final_round());
            }
        }
    }

    #[test]
    fn star_transform_is_a_fixpoint(m in uig_2connected(10)) {
        let once = star_transform(&m).unwrap();
        let twice = star_transform(&once.model).unwrap();
        prop_assert!(twice.singular.is_empty());
        prop_assert_eq!(twice.model.cliques(), once.model.cliques());
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 40, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn degree_two_pairs_meet_every_minimum_hull_set(g in connected_graph(9)) {
        let oracle = Oracle::default();
        let deg = g.degrees();
        for set in oracle.all_minimum_hull_sets(&g).unwrap() {
            for (u, v) in g.edges() {
                if deg[u] == 2 && deg[v] == 2 {
                    prop_assert!(set.contains(&u) || set.contains(&v), "{:?} misses {}-{}", set, u, v);
                }
            }
        }
    }

    #[test]
    fn tau_is_the_largest_vertex_time(g in connected_graph(8)) {
        let oracle = Oracle::default();
        let per_vertex = oracle.vertex_percolation_times(&g).unwrap();
        prop_assert_eq!(oracle.percolation_time(&g).unwrap(), per_vertex.into_iter().max().unwrap_or(0));
    }
}
