//! Round-trip and output-shape properties of the two text formats.

use proptest::prelude::*;
use rainbow_core::dot::export_dot;
use rainbow_core::ecg::{parse_ecg, serialize_ecg};
use rainbow_core::generators::gen_suite;
use rainbow_core::EdgeColoredGraph;

fn arb_graph() -> impl Strategy<Value = EdgeColoredGraph> {
    (1usize..=9).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
            .collect();
        let slots = pairs.len();
        proptest::collection::vec(proptest::option::of(0u64..1000), slots).prop_map(
            move |colors| {
                let edges: Vec<(usize, usize, u64)> = pairs
                    .iter()
                    .zip(colors)
                    .filter_map(|(&(u, v), c)| c.map(|c| (u, v, c)))
                    .collect();
                EdgeColoredGraph::new(n, &edges).expect("pairs are canonical")
            },
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn ecg_round_trip_is_the_identity(g in arb_graph()) {
        let text = serialize_ecg(&g);
        let back = parse_ecg(&text).expect("serialized graphs must parse");
        prop_assert_eq!(&back, &g);
        // Serialization is canonical: a second trip yields the same bytes.
        prop_assert_eq!(serialize_ecg(&back), text);
    }

    #[test]
    fn dot_export_mentions_every_vertex_and_edge(g in arb_graph()) {
        let dot = export_dot(&g, None).expect("no highlight given");
        prop_assert!(dot.starts_with("graph "));
        let closes = dot.ends_with("}\n");
        prop_assert!(closes);
        for v in 0..g.num_vertices() {
            let node_line = format!("  {v};");
            prop_assert!(dot.contains(&node_line));
        }
        for e in g.edges() {
            let edge_line = format!("{} -- {}", e.u, e.v);
            let label = format!("label=\"{}\"", e.color_value);
            prop_assert!(dot.contains(&edge_line), "missing edge line for {} -- {}", e.u, e.v);
            prop_assert!(dot.contains(&label));
        }
    }
}

#[test]
fn every_suite_instance_round_trips() {
    for profile in ["small-exhaustive", "sweep-default", "proper-family"] {
        for inst in gen_suite(profile, 0).expect("known profile") {
            let text = serialize_ecg(&inst.graph);
            let back = parse_ecg(&text).expect("suite instances must re-parse");
            assert_eq!(back, inst.graph, "round-trip failure in {profile} #{}", inst.index);
        }
    }
}
