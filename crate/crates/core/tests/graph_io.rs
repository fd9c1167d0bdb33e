use angopt::io::{format_drawing, named_graph, parse_drawing, parse_edge_list, to_edge_list};
use angopt::metrics::compute_metrics_with_default;
use angopt::svg::{render_svg, SvgStyle};
use angopt::{compute_metrics, Drawing, Graph, Point, SimilarityTransform};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::{BTreeSet, VecDeque};
use std::f64::consts::TAU;

const BUILT_INS: [&str; 9] = [
    "petersen", "heawood", "herschel", "cycle:6", "cycle:9", "path:5", "complete:4", "complete:6", "complete:8",
];

fn bfs(g: &Graph, s: usize) -> Vec<usize> {
    let mut dist = vec![usize::MAX; g.vertex_count()];
    dist[s] = 0;
    let mut queue = VecDeque::from([s]);
    while let Some(v) = queue.pop_front() {
        for &u in g.neighbors(v) {
            if dist[u] == usize::MAX {
                dist[u] = dist[v] + 1;
                queue.push_back(u);
            }
        }
    }
    dist
}

fn girth(g: &Graph) -> usize {
    // shortest cycle through each edge: remove it and measure the detour
    let mut best = usize::MAX;
    for e in g.edges() {
        let mut h = Graph::new();
        for id in g.vertex_ids() {
            h.add_vertex(id);
        }
        for f in g.edges() {
            if (f.u, f.v) != (e.u, e.v) {
                h.add_edge(g.vertex_id(f.u), g.vertex_id(f.v), None).unwrap();
            }
        }
        let d = bfs(&h, e.u)[e.v];
        if d != usize::MAX {
            best = best.min(d + 1);
        }
    }
    best
}

fn bipartite(g: &Graph) -> bool {
    let d = bfs(g, 0);
    g.edges().iter().all(|e| d[e.u] % 2 != d[e.v] % 2)
}

#[test]
fn heawood_has_girth_six_and_is_bipartite() {
    let g = named_graph("heawood").unwrap();
    assert_eq!((g.vertex_count(), g.edge_count()), (14, 21));
    assert!((0..14).all(|v| g.degree(v) == 3));
    assert_eq!(girth(&g), 6);
    assert!(bipartite(&g));
}

#[test]
fn petersen_has_girth_five_and_herschel_is_bipartite() {
    assert_eq!(girth(&named_graph("petersen").unwrap()), 5);
    let h = named_graph("herschel").unwrap();
    assert!(bipartite(&h));
    assert_eq!(girth(&h), 4);
}

/// Proper crossing or touching, decided by segment parameters.
fn brute_force_crossings(g: &Graph, pos: &[Point]) -> usize {
    let mut n = 0;
    let edges = g.edges();
    for i in 0..edges.len() {
        for j in i + 1..edges.len() {
            let (e, f) = (edges[i], edges[j]);
            let ends = [e.u, e.v, f.u, f.v];
            if ends[..2].iter().any(|x| ends[2..].contains(x)) {
                continue;
            }
            let (p, r) = (pos[e.u], pos[e.v] - pos[e.u]);
            let (q, s) = (pos[f.u], pos[f.v] - pos[f.u]);
            let denom = r.cross(s);
            if denom == 0.0 {
                continue;
            }
            let t = (q - p).cross(s) / denom;
            let u = (q - p).cross(r) / denom;
            if (0.0..=1.0).contains(&t) && (0.0..=1.0).contains(&u) {
                n += 1;
            }
        }
    }
    n
}

fn random_drawing(g: &Graph, rng: &mut ChaCha8Rng) -> Vec<Point> {
    (0..g.vertex_count())
        .map(|_| Point::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
        .collect()
}

#[test]
fn crossing_count_matches_brute_force_on_built_ins() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for name in BUILT_INS {
        let g = named_graph(name).unwrap();
        for _ in 0..20 {
            let pos = random_drawing(&g, &mut rng);
            let m = compute_metrics(&g, &Drawing::from_points(&g, &pos)).unwrap();
            assert_eq!(m.crossings, brute_force_crossings(&g, &pos), "{name}");
            assert_eq!(m.degenerate_crossings, 0);
        }
    }
}

fn arb_graph() -> impl Strategy<Value = Graph> {
    (2usize..15, prop::collection::vec((0usize..15, 0usize..15), 1..50)).prop_map(|(n, pairs)| {
        let mut g = Graph::new();
        for (a, b) in pairs {
            let (a, b) = (a % n, b % n);
            if a != b {
                g.add_edge(&format!("v{a}"), &format!("v{b}"), None).unwrap();
            }
        }
        g
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn crossings_match_brute_force_on_random_graphs(g in arb_graph(), seed in any::<u64>()) {
        let pos = random_drawing(&g, &mut ChaCha8Rng::seed_from_u64(seed));
        let m = compute_metrics(&g, &Drawing::from_points(&g, &pos)).unwrap();
        prop_assert_eq!(m.crossings, brute_force_crossings(&g, &pos));
    }

    #[test]
    fn edge_list_round_trip(
        edges in prop::collection::vec(("[a-z0-9_.]{1,4}", "[a-z0-9_.]{1,4}", prop::option::of(0.01f64..100.0)), 0..40)
    ) {
        let mut g = Graph::new();
        for (a, b, l) in &edges {
            if a != b {
                g.add_edge(a, b, *l).unwrap();
            }
        }
        let back = parse_edge_list(&to_edge_list(&g)).unwrap();
        let set = |g: &Graph| -> BTreeSet<(String, String, Option<u64>)> {
            g.edges().iter().map(|e| {
                let (a, b) = (g.vertex_id(e.u).to_string(), g.vertex_id(e.v).to_string());
                let (a, b) = if a < b { (a, b) } else { (b, a) };
                (a, b, e.length.map(f64::to_bits))
            }).collect()
        };
        prop_assert_eq!(set(&g), set(&back));
        prop_assert_eq!(g.edge_count(), back.edge_count());
    }

    #[test]
    fn metrics_are_similarity_invariant(
        name in prop::sample::select(BUILT_INS.to_vec()),
        seed in any::<u64>(),
        rot in 0.0..TAU,
        scale in 0.1f64..10.0,
        (tx, ty) in (-100.0..100.0f64, -100.0..100.0f64),
    ) {
        let g = named_graph(name).unwrap();
        let pos = random_drawing(&g, &mut ChaCha8Rng::seed_from_u64(seed));
        let t = SimilarityTransform::new(rot, scale, Point::new(tx, ty));
        let moved: Vec<Point> = pos.iter().map(|&p| t.apply(p)).collect();
        let a = compute_metrics_with_default(&g, &Drawing::from_points(&g, &pos), 0.7).unwrap();
        let b = compute_metrics_with_default(&g, &Drawing::from_points(&g, &moved), 0.7 * scale).unwrap();
        prop_assert!((a.angular_resolution - b.angular_resolution).abs() <= 1e-9);
        prop_assert_eq!(a.crossings, b.crossings);
        prop_assert!((a.edge_length_rmse - b.edge_length_rmse).abs() <= 1e-9 * a.edge_length_rmse.max(1.0));
    }

    #[test]
    fn drawing_files_round_trip(seed in any::<u64>()) {
        let g = named_graph("petersen").unwrap();
        let d = Drawing::from_points(&g, &random_drawing(&g, &mut ChaCha8Rng::seed_from_u64(seed)));
        prop_assert_eq!(parse_drawing(&format_drawing(&d)).unwrap(), d);
    }
}

#[test]
fn svg_output_is_deterministic() {
    let g = named_graph("cycle:6").unwrap();
    let pos = random_drawing(&g, &mut ChaCha8Rng::seed_from_u64(3));
    let d = Drawing::from_points(&g, &pos);
    let style = SvgStyle { labels: true, ..SvgStyle::default() };
    let a = render_svg(&g, &d, &style).unwrap();
    assert_eq!(a, render_svg(&g, &d, &style).unwrap());
    assert_eq!(a.matches("<line ").count(), 6);
    assert_eq!(a.matches("<circle ").count(), 6);
    assert_eq!(a.matches("<text ").count(), 6);
}
