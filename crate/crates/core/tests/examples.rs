//! Worked examples for each public operation.

mod common;

use arbor::coloring::{chromatic_number, combine_part_colorings, dsatur_bound, is_proper, Coloring};
use arbor::corpus::connected_classes;
use arbor::decomposition::{
    chain_from_minor, decompose, independent_from_antichain, level_coloring, verify_decomposition,
    Decomposition,
};
use arbor::generators::*;
use arbor::minors::{find_clique_minor, hadwiger_number, verify_minor};
use arbor::{Graph, MinorWitness, SpecializingFunction, Tree, VertexSet};

use common::*;

fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::from_edges(n, edges.iter().copied()).unwrap()
}

fn set<const N: usize>(vs: [usize; N]) -> VertexSet {
    VertexSet::from(vs)
}

fn binary_tree() -> Tree {
    Tree::from_parents(vec![None, Some(0), Some(0), Some(1), Some(1), Some(2), Some(2)]).unwrap()
}

fn k33() -> Graph {
    complete_bipartite(3, 3).unwrap()
}

#[test]
fn components_examples() {
    let g = graph(4, &[(0, 1), (1, 2), (0, 2)]);
    assert_eq!(g.components(), [set([0, 1, 2]), set([3])]);
    assert!(Graph::empty(0).components().is_empty());
    assert_eq!(path(3).components(), [set([0, 1, 2])]);
}

#[test]
fn distance_examples() {
    let p = path(3);
    assert_eq!(p.distance(&set([0, 1, 2]), 0, 2).unwrap(), Some(2));
    assert_eq!(p.distance(&set([0, 1, 2]), 1, 1).unwrap(), Some(0));
    assert_eq!(p.distance(&set([0, 2]), 0, 2).unwrap(), None);
    assert!(p.distance(&set([0, 2]), 0, 1).is_err());
}

#[test]
fn connectivity_examples() {
    assert!(complete(4).is_k_connected(4));
    assert!(!path(3).is_k_connected(2));
    assert!(complete_bipartite(2, 2).unwrap().is_k_connected(2));
    let star = complete_bipartite(1, 3).unwrap();
    assert!(star.is_kl_connected(2, 4));
    assert!(!star.is_kl_connected(2, 3));
    assert!(!Graph::empty(1).is_kl_connected(2, 10));
    assert!(complete_bipartite(2, 2).unwrap().is_kl_connected(2, 2));
    for n in 1..=3 {
        let g = complete_bipartite(n, n).unwrap();
        assert!(g.is_k_connected(n));
        assert!(kl_oracle(&g, n, 2));
    }
}

#[test]
fn separator_examples() {
    let s = path(3).min_separator(&set([0]), &set([2])).unwrap().unwrap();
    assert_eq!((s.vertices.clone(), s.size()), (set([1]), 1));
    assert_eq!(complete(4).min_separator(&set([0]), &set([1])).unwrap(), None);
    let c4 = complete_bipartite(2, 2).unwrap();
    let s = c4.min_separator(&set([0]), &set([1])).unwrap().unwrap();
    assert_eq!(s.vertices, set([2, 3]));
    assert_eq!(separator_oracle(&c4, 0b01, 0b10), Some(2));
    assert!(c4.min_separator(&set([0, 1]), &set([1])).is_err());
}

#[test]
fn quotient_examples() {
    let c4 = cycle(4).unwrap();
    assert_eq!(c4.quotient(&[set([0, 1]), set([2]), set([3])]).unwrap(), complete(3));
    let g = cycle(5).unwrap();
    let singletons: Vec<VertexSet> = (0..5).map(VertexSet::singleton).collect();
    assert_eq!(g.quotient(&singletons).unwrap(), g);
    let parts = [set([0, 3]), set([1, 4]), set([2]), set([5])];
    assert_eq!(k33().quotient(&parts).unwrap(), complete(4));
    assert!(c4.quotient(&[set([0, 2])]).is_err());
    assert!(c4.quotient(&[set([0, 1]), set([1, 2])]).is_err());
}

#[test]
fn tree_examples() {
    let chain = Tree::chain(3);
    assert_eq!(chain.comparability_graph(), complete(3));
    assert_eq!(chain.levels(), [vec![0], vec![1], vec![2]]);
    assert!(chain.is_chain(&[0, 1, 2]).unwrap());
    assert_eq!(chain.width_and_height(), (1, 3));

    let star = Tree::from_parents(vec![None, Some(0), Some(0), Some(0)]).unwrap();
    assert_eq!(star.comparability_graph(), complete_bipartite(1, 3).unwrap());
    assert_eq!(star.levels(), [vec![0], vec![1, 2, 3]]);
    assert!(star.is_antichain(&[1, 2, 3]).unwrap());
    assert_eq!(star.width_and_height(), (3, 2));

    let forest = Tree::from_parents(vec![None, None]).unwrap();
    assert_eq!(forest.levels(), [vec![0, 1]]);

    assert!(!chain.is_antichain(&[1, 2]).unwrap());

    let b = binary_tree();
    let g = b.comparability_graph();
    assert_eq!((clique_oracle(&g), independence_oracle(&g)), (3, 4));
    assert_eq!(b.width_and_height(), (4, 3));
}

#[test]
fn specializing_examples() {
    let b = binary_tree();
    assert!(b.is_specializing(&SpecializingFunction::heights(&b)).unwrap());
    let constant = SpecializingFunction::new(vec![0, 0], 1).unwrap();
    assert!(!Tree::chain(2).is_specializing(&constant).unwrap());
    assert!(SpecializingFunction::new(vec![0, 2], 2).is_err());
}

#[test]
fn t_graph_examples() {
    let b = binary_tree();
    assert!(b.is_t_graph(&b.comparability_graph()).unwrap());
    assert!(b.is_t_graph(&b.parent_graph()).unwrap());
    assert!(!Tree::chain(2).is_t_graph(&Graph::empty(2)).unwrap());
    assert!(Tree::chain(2).is_t_graph(&Graph::empty(3)).is_err());
}

#[test]
fn decompose_examples() {
    let d = decompose(&path(3));
    assert_eq!(d.branch_vertices(), [0, 1, 2]);
    assert_eq!(d.tree().height(), 3);
    let d = decompose(&complete_bipartite(1, 3).unwrap());
    assert_eq!(d.tree().children(0), [1, 2, 3]);
    assert_eq!(d.tree().height(), 2);
    let d = decompose(&complete_bipartite(2, 2).unwrap());
    assert_eq!(d.branch_vertices(), [0, 2, 1, 3]);
    assert_eq!(d.tree().height(), 4);
    let d = decompose(&graph(5, &[(0, 1), (2, 3), (3, 4)]));
    assert_eq!(d.tree().roots().collect::<Vec<_>>(), [0, 1]);
}

#[test]
fn verify_decomposition_faults() {
    let p3 = graph(3, &[(0, 2), (0, 1)]);
    let d = decompose(&p3);
    assert!(verify_decomposition(&p3, &d).unwrap().all_passed());
    let cones: Vec<VertexSet> = (0..3).map(|t| d.cone(t).clone()).collect();
    let mut f_edges = d.f_edges().to_vec();
    f_edges.push((1, 2));
    let bad = Decomposition::from_parts(d.tree().clone(), d.branch_vertices().to_vec(), cones, f_edges)
        .unwrap();
    let report = verify_decomposition(&p3, &bad).unwrap();
    assert_eq!(report.passed("comparability-subgraph"), Some(false));

    let p = path(3);
    let d = decompose(&p);
    let cones: Vec<VertexSet> = (0..3).map(|t| d.cone(t).clone()).collect();
    let swapped =
        Decomposition::from_parts(d.tree().clone(), vec![0, 2, 1], cones, d.f_edges().to_vec()).unwrap();
    let report = verify_decomposition(&p, &swapped).unwrap();
    assert!(
        report.passed("child-cones-are-components") == Some(false)
            || report.passed("f-edges-match-graph") == Some(false)
    );
    assert!(verify_decomposition(&path(4), &d).is_err());
}

#[test]
fn level_coloring_examples() {
    let star = complete_bipartite(1, 3).unwrap();
    let c = level_coloring(&decompose(&star));
    assert_eq!(c.colors(), [0, 1, 1, 1]);
    assert_eq!(c.count(), 2);
    assert_eq!(level_coloring(&decompose(&complete(4))).count(), 4);
    let sub = subdivided_complete(4).unwrap();
    let d = decompose(&sub);
    let c = level_coloring(&d);
    assert!(is_proper(&sub, &c).unwrap());
    assert_eq!(c.count(), d.tree().height());
    assert_eq!(chromatic_number(&sub).unwrap().0, 2);
    assert!(d.tree().height() >= 4);
}

#[test]
fn chain_and_antichain_examples() {
    let d = decompose(&complete(4));
    let w = MinorWitness::new((0..4).map(VertexSet::singleton).collect());
    assert_eq!(chain_from_minor(&d, &w).unwrap(), [0, 1, 2, 3]);

    let c5 = cycle(5).unwrap();
    let d = decompose(&c5);
    let w = MinorWitness::new(vec![set([0, 1]), set([2, 3]), set([4])]);
    let chain = chain_from_minor(&d, &w).unwrap();
    assert_eq!(chain.len(), 3);
    assert!(d.tree().is_chain(&chain).unwrap());
    let single = MinorWitness::new(vec![set([3])]);
    assert_eq!(chain_from_minor(&d, &single).unwrap().len(), 1);
    let invalid = MinorWitness::new(vec![set([0]), set([2])]);
    assert!(chain_from_minor(&d, &invalid).is_err());

    let star = complete_bipartite(1, 3).unwrap();
    let d = decompose(&star);
    assert_eq!(independent_from_antichain(&d, &[1, 2, 3]).unwrap(), set([1, 2, 3]));
    assert_eq!(independent_from_antichain(&d, &[0]).unwrap(), set([0]));
    assert!(independent_from_antichain(&d, &[0, 1]).is_err());
}

#[test]
fn minor_examples() {
    let k4_minus = graph(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]);
    assert!(find_clique_minor(&k4_minus, 3).unwrap().is_some());
    assert!(find_clique_minor(&k4_minus, 4).unwrap().is_none());
    let w = find_clique_minor(&k33(), 4).unwrap().unwrap();
    assert!(verify_minor(&k33(), &w).is_valid());
    assert!(find_clique_minor(&k33(), 5).unwrap().is_none());
    let sub = subdivided_complete(4).unwrap();
    assert_eq!(hadwiger_number(&sub).unwrap().0, 4);
    assert_eq!(hadwiger_oracle(&sub), 4);
    assert_eq!(hadwiger_number(&cycle(5).unwrap()).unwrap().0, 3);
}

#[test]
fn coloring_examples() {
    let c5 = cycle(5).unwrap();
    assert_eq!(chromatic_number(&c5).unwrap().0, 3);
    assert_eq!(chromatic_number(&complete(5)).unwrap().0, 5);
    assert_eq!(chromatic_number(&k33()).unwrap().0, 2);
    assert!(is_proper(&c5, &dsatur_bound(&c5)).unwrap());
    assert!(!is_proper(&c5, &Coloring::new(vec![0, 1, 0, 1, 0])).unwrap());
    assert!(is_proper(&c5, &Coloring::new(vec![0, 1])).is_err());

    let g = apex_cliques(&[1, 2]).unwrap();
    let parts = [set([0]), set([1]), set([2, 3])];
    let colorings = [Coloring::new(vec![0]), Coloring::new(vec![0]), Coloring::new(vec![0, 1])];
    let c = combine_part_colorings(&g, &parts, &colorings).unwrap();
    assert_eq!(c.colors(), [0, 2, 4, 5]);
    assert!(is_proper(&g, &c).unwrap());
}

#[test]
fn generator_examples() {
    for s in 1..=5 {
        let g = apex_cliques(&[s]).unwrap();
        assert_eq!(chromatic_number(&g).unwrap().0, s + 1);
        assert!(g.is_clique(&(0..=s).collect()));
    }
    let g = apex_cliques(&[2, 3]).unwrap();
    assert_eq!(chromatic_number(&g).unwrap().0, 4);
    assert_eq!(hadwiger_number(&g).unwrap().0, 4);
    assert_eq!(hadwiger_oracle(&g), 4);
    assert_eq!(independence_oracle(&apex_cliques(&[2, 3, 4]).unwrap()), 3);
    let p3 = subdivided_complete(2).unwrap();
    assert_eq!(p3.edges().collect::<Vec<_>>(), [(0, 2), (1, 2)]);
    assert_eq!(comparability_of(&Tree::chain(6)), complete(6));
    let c5 = cycle(5).unwrap();
    assert_eq!((chromatic_oracle(&c5), hadwiger_oracle(&c5)), (3, 3));
    for k in 2..=4 {
        assert!(is_bipartite(&subdivided_complete(k).unwrap()));
    }
}

#[test]
fn isomorphism_class_counts() {
    assert_eq!(connected_classes(7).len(), 853);
}
