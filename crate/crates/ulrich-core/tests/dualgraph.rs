use proptest::prelude::*;
use ulrich_core::dualgraph::{
    cycle_from_json, cycle_to_json, enumerate_ulrich_chains, graph_catalog, ulrich_support_candidates, Cycle,
    DualGraph, GraphFile, GraphTag, Vertex, DEFAULT_MAX_STEPS,
};
use ulrich_core::presentations::FamilyTag;
use ulrich_core::report::{expected_residue, quotient_catalog, rdp_grid, rtp_grid};
use ulrich_core::Error;

fn graph(tag: &str) -> DualGraph {
    graph_catalog(&tag.parse::<GraphTag>().unwrap()).unwrap()
}

fn cyc(v: &[u32]) -> Cycle {
    Cycle(v.to_vec())
}

#[test]
fn pairing_examples() {
    let one = DualGraph::from_ids(&[("E1", 3)], &[]).unwrap();
    assert_eq!(one.intersection_pairing(&cyc(&[1]), &cyc(&[1])).unwrap(), -3);
    let g = graph("G10:2");
    let z = cyc(&[1, 2, 2, 1, 1]);
    assert_eq!(g.intersection_pairing(&z, &z).unwrap(), -7);
    let two = DualGraph::from_ids(&[("E1", 2), ("E2", 2)], &[("E1", "E2")]).unwrap();
    assert_eq!(two.intersection_pairing(&cyc(&[1, 0]), &cyc(&[0, 1])).unwrap(), 1);
    assert!(matches!(two.intersection_pairing(&cyc(&[1]), &cyc(&[1, 0])), Err(Error::Graph(_))));
}

#[test]
fn fundamental_cycle_examples() {
    assert_eq!(graph("G7:3").fundamental_cycle(), cyc(&[1; 7]));
    let g = graph("G10:2");
    assert_eq!(g.fundamental_cycle(), cyc(&[1, 1, 2, 1, 1]));
    assert_eq!(g.vertices()[2].id, "E0");
    assert_eq!(g.vertices()[4].id, "F");
    let one = DualGraph::from_ids(&[("E1", 5)], &[]).unwrap();
    assert_eq!(one.fundamental_cycle(), cyc(&[1]));
}

#[test]
fn antinef_examples() {
    let two = DualGraph::from_ids(&[("E1", 2), ("E2", 2)], &[("E1", "E2")]).unwrap();
    assert!(!two.is_antinef(&cyc(&[1, 0])));
    let g = graph("G7:3");
    assert!(g.is_antinef(&g.fundamental_cycle()));
    assert!(g.is_antinef(&cyc(&[1, 2, 2, 2, 1, 2, 1])));
}

#[test]
fn canonical_numbers_and_genus() {
    let g = graph("G10:2");
    assert_eq!(g.canonical_numbers(), vec![0, 1, 0, 0, 1]);
    assert_eq!(g.canonical_dot(&cyc(&[1, 2, 2, 1, 1])), 3);
    for i in 0..g.n() {
        assert_eq!(g.arithmetic_genus(&Cycle::basis(g.n(), i)).unwrap(), 0);
    }
    let two = DualGraph::from_ids(&[("E1", 2), ("E2", 2)], &[("E1", "E2")]).unwrap();
    assert_eq!(two.arithmetic_genus(&cyc(&[1, 1])).unwrap(), 0);
}

#[test]
fn every_catalog_graph_is_rational() {
    let mut tags: Vec<GraphTag> = quotient_catalog(4);
    tags.extend(rtp_grid(4).into_iter().map(GraphTag::Family));
    tags.extend(rdp_grid().into_iter().map(GraphTag::Family));
    for t in &tags {
        let g = graph_catalog(t).unwrap();
        assert!(g.rationality_check(), "{t}");
        assert_eq!(g.arithmetic_genus(&g.fundamental_cycle()).unwrap(), 0, "{t}");
        assert!(g.is_antinef(&g.fundamental_cycle()), "{t}");
    }
}

#[test]
fn cycle_stats() {
    let g = graph("G10:2");
    let z = cyc(&[1, 2, 2, 1, 1]);
    assert_eq!((g.cycle_length(&z).unwrap(), g.cycle_e0(&z).unwrap(), g.cycle_mu(&z).unwrap()), (2, 7, 5));
    assert_eq!(g.graph_multiplicity().unwrap(), 4);
    assert!(matches!(g.cycle_length(&cyc(&[1, 0, 0, 0, 0])), Err(Error::Precondition(_))));
    for t in rtp_grid(3) {
        let g = graph_catalog(&GraphTag::Family(t)).unwrap();
        let z0 = g.fundamental_cycle();
        assert_eq!(g.graph_multiplicity().unwrap(), 3, "{t}");
        assert_eq!(g.cycle_mu(&z0).unwrap(), 4, "{t}");
        assert_eq!(g.cycle_length(&z0).unwrap(), 1, "{t}");
    }
}

#[test]
fn unique_ulrich_filter_examples() {
    assert!(graph("G10:2").unique_ulrich_filter());
    assert!(graph("CYC:2,3,2").unique_ulrich_filter());
    assert!(graph("CYC:4").unique_ulrich_filter());
    assert!(!graph("G7:3").unique_ulrich_filter());
    assert!(!graph("CYC:2,2,2").unique_ulrich_filter());
}

#[test]
fn support_candidates() {
    assert!(ulrich_support_candidates(&graph("G10:2")).unwrap().is_empty());
    let g = graph("G7:3");
    let y1: Vec<usize> = cyc(&[0, 1, 1, 1, 0, 1, 0]).support();
    assert!(ulrich_support_candidates(&g).unwrap().contains(&y1));
    let a4 = graph("CYC:2,2,2,2");
    let d = a4.dot_vertices(&a4.fundamental_cycle());
    let cands = ulrich_support_candidates(&a4).unwrap();
    assert!(!cands.is_empty());
    for c in &cands {
        assert!(c.iter().all(|&i| d[i] == 0));
    }
}

#[test]
fn chain_examples() {
    let g = graph("G7:3");
    let rep = enumerate_ulrich_chains(&g, DEFAULT_MAX_STEPS).unwrap();
    assert_eq!(rep.cycles(), vec![cyc(&[1; 7]), cyc(&[1, 2, 2, 2, 1, 2, 1])]);
    let a222 = graph_catalog(&GraphTag::Family(FamilyTag::A(2, 2, 2))).unwrap();
    assert_eq!(enumerate_ulrich_chains(&a222, DEFAULT_MAX_STEPS).unwrap().count(), 3);
    let rep = enumerate_ulrich_chains(&graph("G10:2"), DEFAULT_MAX_STEPS).unwrap();
    assert_eq!(rep.cycles(), vec![cyc(&[1, 1, 2, 1, 1])]);
    assert!(!rep.truncated);
}

#[test]
fn truncation_is_flagged() {
    let g = graph_catalog(&GraphTag::Family(FamilyTag::A(3, 3, 3))).unwrap();
    let rep = enumerate_ulrich_chains(&g, 1).unwrap();
    assert!(rep.truncated);
}

#[test]
fn chain_counts_equal_residue_on_grid() {
    for t in rtp_grid(4) {
        let g = graph_catalog(&GraphTag::Family(t)).unwrap();
        let rep = enumerate_ulrich_chains(&g, DEFAULT_MAX_STEPS).unwrap();
        assert_eq!(Some(rep.count()), expected_residue(t), "{t}");
    }
}

/// Each step satisfies the vanishing conditions, `Y` decreases, every
/// `Z_k` is anti-nef, and the emitted cycles are distinct.
#[test]
fn chains_are_well_formed_on_catalog() {
    let mut tags: Vec<GraphTag> = quotient_catalog(3);
    tags.extend(rtp_grid(3).into_iter().map(GraphTag::Family));
    for t in &tags {
        let g = graph_catalog(t).unwrap();
        let rep = enumerate_ulrich_chains(&g, DEFAULT_MAX_STEPS).unwrap();
        let z0 = rep.z0.clone();
        assert_eq!(rep.chains[0].steps.len(), 0, "{t}");
        for ch in &rep.chains {
            let mut prev_z = z0.clone();
            let mut prev_y: Option<Cycle> = None;
            for (z, y) in &ch.steps {
                assert_eq!(&prev_z.add(y), z, "{t}");
                assert!(y.is_positive() && y.le(&z0), "{t}");
                if let Some(py) = &prev_y {
                    assert!(y.le(py), "{t}");
                }
                assert_eq!(g.intersection_pairing(y, &prev_z).unwrap(), 0, "{t}");
                assert_eq!(g.arithmetic_genus(y).unwrap(), 0, "{t}");
                let rest = Cycle(z0.0.iter().zip(&y.0).map(|(a, b)| a - b).collect());
                assert_eq!(g.canonical_dot(&rest), 0, "{t}");
                assert!(g.is_antinef(z), "{t}");
                assert!(prev_z.le(z) && prev_z != *z, "{t}");
                prev_z = z.clone();
                prev_y = Some(y.clone());
            }
        }
        let cycles = rep.cycles();
        for i in 0..cycles.len() {
            for j in i + 1..cycles.len() {
                assert_ne!(cycles[i], cycles[j], "{t}");
            }
        }
        if g.unique_ulrich_filter() {
            assert_eq!(cycles, vec![z0], "{t}");
        }
    }
}

#[test]
fn catalog_isomorphisms() {
    let same = |a: &str, b: &str| assert_eq!(graph(a).tree_canonical_form(), graph(b).tree_canonical_form(), "{a} {b}");
    same("G7:3", "A:1,2,3");
    same("G11:2", "B:1,4");
    same("G15:3", "A:1,2,4");
    same("G3:3", "A:1,2,2");
    same("EX-5.3", "G10:2");
    assert_ne!(graph("G7:3").tree_canonical_form(), graph("A:1,2,2").tree_canonical_form());
}

#[test]
fn dynkin_and_triple_point_shapes() {
    assert_eq!(graph("RDP-E8").n(), 8);
    assert_eq!(graph("RDP-D:5").n(), 5);
    let h6 = graph("H:6");
    assert_eq!(h6.n(), 7);
    assert_eq!(h6.vertices().iter().filter(|v| v.b == 3).count(), 1);
    assert_eq!(graph("G7:3").n(), 7);
    assert_eq!(graph("G7:3").vertices().iter().filter(|v| v.b == 3).count(), 1);
    assert_eq!(graph("CYC:2,5,3").vertices().iter().map(|v| v.b).collect::<Vec<_>>(), vec![2, 5, 3]);
}

#[test]
fn graph_tags() {
    for s in ["CYC:2,3,2", "T22:3:2,4", "G10:2", "A:1,2,3", "RDP-E7"] {
        assert_eq!(s.parse::<GraphTag>().unwrap().to_string(), s);
    }
    assert!(matches!("EX-5.2".parse::<GraphTag>(), Err(Error::Unsupported(_))));
    assert!(matches!("G16:2".parse::<GraphTag>(), Err(Error::OutOfRange(_))));
    assert!("CYC:1,2".parse::<GraphTag>().is_err());
    assert!("CYC:".parse::<GraphTag>().is_err());
}

#[test]
fn invalid_graphs_are_rejected() {
    // Affine D4: semidefinite.
    let d4 = DualGraph::from_ids(
        &[("C", 2), ("A", 2), ("B", 2), ("D", 2), ("E", 2)],
        &[("C", "A"), ("C", "B"), ("C", "D"), ("C", "E")],
    );
    assert!(matches!(d4, Err(Error::Graph(_))));
    assert!(DualGraph::from_ids(&[("A", 2), ("B", 2)], &[]).is_err());
    assert!(DualGraph::from_ids(&[("A", 1)], &[]).is_err());
    assert!(DualGraph::from_ids(&[("A", 2), ("A", 3)], &[("A", "A")]).is_err());
    assert!(DualGraph::from_ids(&[("A", 2), ("B", 2)], &[("A", "B"), ("B", "A")]).is_err());
    assert!(DualGraph::new(vec![Vertex { id: "A".into(), b: 2 }], vec![(0, 0)]).is_err());
}

#[test]
fn json_roundtrip() {
    for t in ["G10:2", "G7:3", "T22:4:2,3", "H:7"] {
        let g = graph(t);
        let f = GraphFile::from_graph(&g);
        let text = f.to_json();
        let back = GraphFile::parse(&text).unwrap();
        assert_eq!(back, f);
        let g2 = back.to_graph().unwrap();
        assert_eq!(g2.vertices(), g.vertices());
        assert_eq!(g2.edges(), g.edges());
        let z = g.fundamental_cycle();
        let js = cycle_to_json(&g, &z).to_string();
        assert_eq!(cycle_from_json(&g, &js).unwrap(), z);
    }
    let g = graph("G10:2");
    assert_eq!(cycle_to_json(&g, &g.fundamental_cycle()).to_string(), r#"{"E1":1,"E2":1,"E0":2,"E3":1,"F":1}"#);
    assert_eq!(cycle_from_json(&g, r#"{"E0":2}"#).unwrap(), cyc(&[0, 0, 2, 0, 0]));
    assert!(cycle_from_json(&g, r#"{"E9":1}"#).is_err());
    assert!(cycle_from_json(&g, r#"{"E0":-1}"#).is_err());
    assert!(cycle_from_json(&g, "[1,2]").is_err());
}

#[test]
fn graph_file_errors() {
    let single = r#"{"vertices":[{"id":"E1","weight":-3}],"edges":[]}"#;
    let g = GraphFile::parse(single).unwrap().to_graph().unwrap();
    assert!(g.unique_ulrich_filter());
    assert!(matches!(GraphFile::parse(r#"{"vertices":[],"edges":[],"x":1}"#), Err(Error::Parse { .. })));
    assert!(matches!(GraphFile::parse("{"), Err(Error::Parse { .. })));
    let pos = r#"{"vertices":[{"id":"E1","weight":2}],"edges":[]}"#;
    assert!(GraphFile::parse(pos).unwrap().to_graph().is_err());
    let dangling = r#"{"vertices":[{"id":"E1","weight":-2}],"edges":[["E1","E2"]]}"#;
    assert!(GraphFile::parse(dangling).unwrap().to_graph().is_err());
}

/// Random trees on up to six vertices with weights 2..=4, kept when
/// negative definite.
fn arb_tree() -> impl Strategy<Value = (Vec<u32>, Vec<(usize, usize)>, Vec<usize>)> {
    (1usize..=6).prop_flat_map(|n| {
        let parents: Vec<BoxedStrategy<usize>> = (1..n).map(|i| (0..i).boxed()).collect();
        let order: Vec<usize> = (0..n).collect();
        (prop::collection::vec(2u32..=4, n), parents, Just(order).prop_shuffle()).prop_map(|(w, p, order)| {
            let edges = p.iter().enumerate().map(|(i, &a)| (a, i + 1)).collect();
            (w, edges, order)
        })
    })
}

fn build_tree(w: &[u32], edges: &[(usize, usize)]) -> Option<DualGraph> {
    let vs = w.iter().enumerate().map(|(i, &b)| Vertex { id: format!("E{}", i + 1), b }).collect();
    DualGraph::new(vs, edges.to_vec()).ok()
}

fn for_each_cycle_below(bound: &[u32], f: &mut impl FnMut(&Cycle)) {
    let mut z = Cycle::zero(bound.len());
    loop {
        f(&z);
        let mut k = 0;
        loop {
            if k == bound.len() {
                return;
            }
            if z.0[k] < bound[k] {
                z.0[k] += 1;
                break;
            }
            z.0[k] = 0;
            k += 1;
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn laufer_is_order_independent((w, edges, order) in arb_tree()) {
        let g = build_tree(&w, &edges);
        prop_assume!(g.is_some());
        let g = g.unwrap();
        prop_assert_eq!(g.fundamental_cycle_with_order(&order), g.fundamental_cycle());
    }

    /// Brute force over all cycles up to `2 Z0`: every positive anti-nef
    /// cycle dominates `Z0`, and removing any curve from `Z0` breaks
    /// anti-nefness.
    #[test]
    fn fundamental_cycle_is_minimal((w, edges, _order) in arb_tree()) {
        let g = build_tree(&w, &edges);
        prop_assume!(g.is_some());
        let g = g.unwrap();
        let z0 = g.fundamental_cycle();
        prop_assert!(z0.is_positive() && g.is_antinef(&z0));
        for i in 0..g.n() {
            if z0.0[i] > 1 {
                let mut z = z0.clone();
                z.0[i] -= 1;
                prop_assert!(!g.is_antinef(&z));
            }
        }
        let bound: Vec<u32> = z0.0.iter().map(|a| 2 * a).collect();
        let mut bad = None;
        for_each_cycle_below(&bound, &mut |z| {
            if z.is_positive() && g.is_antinef(z) && !z0.le(z) {
                bad = Some(z.clone());
            }
        });
        prop_assert!(bad.is_none(), "{:?} is anti-nef but not above {:?}", bad, z0);
    }

    #[test]
    fn canonical_form_ignores_relabeling((w, edges, order) in arb_tree()) {
        let g = build_tree(&w, &edges);
        prop_assume!(g.is_some());
        let g = g.unwrap();
        // Vertex i of g becomes vertex order[i].
        let mut pw = vec![0; w.len()];
        for (i, &b) in w.iter().enumerate() {
            pw[order[i]] = b;
        }
        let pe: Vec<(usize, usize)> = edges.iter().map(|&(a, b)| (order[a], order[b])).collect();
        let h = build_tree(&pw, &pe).unwrap();
        prop_assert_eq!(g.tree_canonical_form(), h.tree_canonical_form());
        prop_assert_eq!(
            g.intersection_pairing(&g.fundamental_cycle(), &g.fundamental_cycle()).unwrap(),
            h.intersection_pairing(&h.fundamental_cycle(), &h.fundamental_cycle()).unwrap()
        );
    }
}
