use std::collections::HashSet;

use fracmatch::bipartite::{konig_cover, max_bipartite_matching, BipartiteGraph};
use fracmatch::bounds::{ng_sum, Bound};
use fracmatch::construct::{
    applicable_kinds, construct_complement_fm, construct_complement_fm_nearquarter, ConstructionKind,
};
use fracmatch::families::{classify_equality_family, classify_small_alpha, is_member, small_alpha_ng, FamilyLabel};
use fracmatch::fm::{berge_deficiency_exhaustive, double_cover, is_fractional_perfect, HalfComponent};
use fracmatch::graph::{complete, complete_bipartite, cycle, empty, hgraph, k2pql, star};
use fracmatch::harness::{enumerate, graph_from_mask, pair_count, sample, Probability, SampleSpec};
use fracmatch::io::{emit_graph6, parse_graph6};
use fracmatch::partition::{build_partition, good_partition, repair, verify_partition};
use fracmatch::sweep::{sweep_enumeration, sweep_sample, SweepOptions};
use fracmatch::{alpha_prime, canonicalize_fm, extract_fm, Error, FractionalMatching, Graph, HalfInt, VertexSet};

fn h(s: &str) -> HalfInt {
    s.parse().unwrap()
}

fn g(n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::from_edges(n, edges).unwrap()
}

fn union(a: &Graph, b: &Graph) -> Graph {
    a.disjoint_union(b).unwrap()
}

fn sorted_degrees(g: &Graph) -> Vec<usize> {
    let mut d = g.degrees();
    d.sort_unstable_by(|a, b| b.cmp(a));
    d
}

fn connected(g: &Graph) -> bool {
    let mut seen = VertexSet::singleton(0);
    let mut frontier = vec![0];
    while let Some(v) = frontier.pop() {
        for w in g.neighbours(v).difference(seen).iter() {
            seen.insert(w);
            frontier.push(w);
        }
    }
    seen.len() == g.order()
}

fn two_k2() -> Graph {
    g(4, &[(0, 1), (2, 3)])
}

#[test]
fn complements() {
    assert_eq!(empty(3).complement(), complete(3));
    assert_eq!(complete(2).complement(), empty(2));
    let c5c = cycle(5).complement();
    assert_eq!(c5c.edge_count(), 5);
    assert!(c5c.degrees().iter().all(|&d| d == 2));
    assert!(connected(&c5c));
}

#[test]
fn isolated_vertices() {
    let k13 = star(4).add_isolates(2).unwrap();
    assert_eq!(k13.isolated_vertices().to_vec(), vec![4, 5]);
    assert!(complete(4).isolated_vertices().is_empty());
    let tri = union(&cycle(3), &empty(4));
    assert_eq!(tri.isolated_vertices().len(), 4);
}

#[test]
fn generators() {
    let book = k2pql(0, 0, 4);
    assert_eq!(book.order(), 6);
    assert!(book.has_edge(0, 1));
    for w in 2..6 {
        assert!(book.has_edge(0, w) && book.has_edge(1, w));
    }
    assert_eq!(book.edge_count(), 9);
    assert_eq!(sorted_degrees(&hgraph(9)), vec![8, 3, 3, 3, 1, 1, 1, 1, 1]);
    assert_eq!(sorted_degrees(&star(5)), vec![4, 1, 1, 1, 1]);
    for (p, q, l) in [(0, 0, 1), (3, 1, 2), (14, 13, 1), (2, 5, 0)] {
        let k = k2pql(p, q, l);
        assert_eq!(k.order(), p + q + l + 2);
        assert_eq!(k.edge_count(), p + q + 2 * l + 1);
    }
}

#[test]
fn spanning_subgraphs() {
    let k4 = complete(4);
    assert!(two_k2().is_spanning_subgraph_of(&k4).unwrap());
    let k3 = union(&cycle(3), &empty(1));
    assert!(!k3.is_spanning_subgraph_of(&cycle(4)).unwrap());
    assert!(cycle(5).is_spanning_subgraph_of(&complete(5)).unwrap());
}

#[test]
fn graph6_examples() {
    assert_eq!(parse_graph6("A_").unwrap(), complete(2));
    assert_eq!(parse_graph6("A?").unwrap(), empty(2));
    assert_eq!(emit_graph6(&empty(5)), "D??");
    assert_eq!(parse_graph6(&emit_graph6(&cycle(5))).unwrap(), cycle(5));
}

#[test]
fn berge_deficiency_examples() {
    let k13 = star(4);
    let w = berge_deficiency_exhaustive(&k13).unwrap();
    assert_eq!(w.deficiency, 2);
    assert_eq!(w.alpha(4), h("1"));
    assert_eq!(berge_deficiency_exhaustive(&empty(4)).unwrap().deficiency, 4);
    let c5 = berge_deficiency_exhaustive(&cycle(5)).unwrap();
    assert_eq!(c5.deficiency, 0);
    assert_eq!(c5.alpha(5), h("5/2"));
}

/// Brute-force maximum matching over all subsets of the cover's edges.
fn brute_matching(b: &BipartiteGraph) -> usize {
    let edges: Vec<(usize, usize)> =
        (0..b.left_size()).flat_map(|l| b.neighbours(l).iter().map(move |r| (l, r))).collect();
    let mut best = 0;
    for mask in 0u64..1 << edges.len() {
        let (mut left, mut right, mut ok) = (0u64, 0u64, true);
        for (i, &(l, r)) in edges.iter().enumerate() {
            if mask >> i & 1 == 1 {
                ok &= left >> l & 1 == 0 && right >> r & 1 == 0;
                left |= 1 << l;
                right |= 1 << r;
            }
        }
        if ok {
            best = best.max(mask.count_ones() as usize);
        }
    }
    best
}

#[test]
fn double_cover_examples() {
    let k2 = double_cover(&complete(2));
    assert_eq!((k2.left_size(), k2.right_size(), k2.edge_count()), (2, 2, 2));
    assert!(k2.has_edge(0, 1) && k2.has_edge(1, 0));
    assert_eq!(double_cover(&empty(3)).edge_count(), 0);
    let c3 = double_cover(&cycle(3));
    assert_eq!(c3.edge_count(), 6);
    assert!((0..3).all(|v| c3.neighbours(v).len() == 2));
    // a 2-regular bipartite graph on 6 vertices is one 6-cycle or three
    // 2-cycles, and the latter needs parallel edges
    assert_eq!(max_bipartite_matching(&c3).size(), 3);

    assert_eq!(max_bipartite_matching(&k2).size(), 2);
    let c5 = double_cover(&cycle(5));
    assert_eq!(brute_matching(&c5), 5);
    let m = max_bipartite_matching(&c5);
    assert_eq!(m.size(), 5);
    assert_eq!(konig_cover(&c5, &m).size(), 5);
    assert_eq!(max_bipartite_matching(&double_cover(&star(4))).size(), 2);
}

#[test]
fn alpha_examples() {
    assert_eq!(alpha_prime(&cycle(3)), h("3/2"));
    assert_eq!(alpha_prime(&complete(4)), h("2"));
    assert_eq!(alpha_prime(&hgraph(9)), h("5/2"));
    assert_eq!(alpha_prime(&empty(6)), h("0"));
}

#[test]
fn extraction_examples() {
    let k2 = complete(2);
    assert_eq!(extract_fm(&k2).weight(0, 1), 2);
    let c5 = extract_fm(&cycle(5));
    assert_eq!(c5.value(), h("5/2"));
    let m = extract_fm(&two_k2());
    assert_eq!((m.weight(0, 1), m.weight(2, 3), m.value()), (2, 2, h("2")));
}

fn all_half(host: &Graph) -> FractionalMatching {
    let mut f = FractionalMatching::empty(host);
    for (u, v) in host.edges() {
        f.set_weight(u, v, 1).unwrap();
    }
    f
}

#[test]
fn canonicalization_examples() {
    let c4 = cycle(4);
    let f = canonicalize_fm(&c4, &all_half(&c4)).unwrap();
    assert_eq!((f.value(), f.one_edge_count(), f.half_edge_count()), (h("2"), 2, 0));

    let p3 = g(3, &[(0, 1), (1, 2)]);
    let f = canonicalize_fm(&p3, &all_half(&p3)).unwrap();
    assert_eq!((f.value(), f.one_edge_count(), f.half_edge_count()), (h("1"), 1, 0));

    let c5 = cycle(5);
    let f = canonicalize_fm(&c5, &all_half(&c5)).unwrap();
    assert_eq!(f, all_half(&c5));
    assert!(matches!(&f.half_components()[..], [HalfComponent::Cycle(c)] if c.len() == 5));
}

#[test]
fn fractional_perfect_examples() {
    let k2 = complete(2);
    assert!(is_fractional_perfect(&extract_fm(&k2)));
    assert!(is_fractional_perfect(&all_half(&cycle(5))));
    assert!(!is_fractional_perfect(&extract_fm(&star(4))));
}

#[test]
fn partition_examples() {
    let s8 = star(8);
    let p = good_partition(&s8).unwrap();
    assert_eq!(p.v11, VertexSet::singleton(0));
    assert_eq!((p.v1().len(), p.v2().len(), p.s, p.t), (2, 6, 1, h("1")));
    assert_eq!(p.x.len(), 1);
    assert!(p.x.is_subset(p.v12));
    assert!(verify_partition(&s8, &p).all_hold());

    let c5 = cycle(5);
    let p = good_partition(&c5).unwrap();
    assert!(p.v2().is_empty() && p.v11.is_empty() && p.v21.is_empty());
    assert_eq!((p.s, p.t), (0, h("5/2")));
    assert!(verify_partition(&c5, &p).all_hold());

    let m = union(&two_k2(), &empty(4));
    let p = good_partition(&m).unwrap();
    assert_eq!(p.v1().to_vec(), vec![0, 1, 2, 3]);
    assert_eq!(p.v2().to_vec(), vec![4, 5, 6, 7]);
    assert_eq!(p.s, 0);

    let ds = k2pql(3, 3, 0);
    assert!(verify_partition(&ds, &good_partition(&ds).unwrap()).all_hold());
}

#[test]
fn repair_rejects_suboptimal_input() {
    let p4 = g(4, &[(0, 1), (1, 2), (2, 3)]);
    assert_eq!(extract_fm(&p4).one_edges(), vec![(0, 1), (2, 3)]);
    let mut f = FractionalMatching::empty(&p4);
    f.set_weight(1, 2, 2).unwrap();
    let raw = build_partition(&p4, f).unwrap();
    assert!(matches!(repair(&p4, &raw), Err(Error::NotOptimal { .. })));
}

#[test]
fn repair_c4_with_pendant() {
    // C4 0-1-2-3 with a pendant 4 at corner 0
    let host = g(5, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)]);
    let mut f = FractionalMatching::empty(&host);
    f.set_weight(0, 1, 2).unwrap();
    f.set_weight(2, 3, 2).unwrap();
    let p = build_partition(&host, f).unwrap();
    let fixed = repair(&host, &p).unwrap();
    assert!(verify_partition(&host, &fixed).all_hold());
    assert_eq!(fixed.fm.value(), alpha_prime(&host));
}

#[test]
fn repair_fixpoint_on_small_orders() {
    for n in 1..=6 {
        for host in enumerate(n).unwrap() {
            let p = good_partition(&host).unwrap();
            assert!(verify_partition(&host, &p).all_hold(), "{}", emit_graph6(&host));
        }
    }
}

#[test]
fn small_alpha_labels() {
    let s = star(5).add_isolates(3).unwrap();
    assert_eq!(classify_small_alpha(&s), FamilyLabel::StarUnion { k: 4 });
    let tri = union(&cycle(3), &empty(5));
    assert_eq!(classify_small_alpha(&tri), FamilyLabel::TriangleUnion);
    let k = k2pql(3, 1, 2);
    assert_eq!(alpha_prime(&k), h("2"));
    assert_eq!(berge_deficiency_exhaustive(&k).unwrap().deficiency, k.order() - 4);
    assert_eq!(classify_small_alpha(&k), FamilyLabel::Sandwich2K2K2pq);
    assert_eq!(classify_small_alpha(&hgraph(9)), FamilyLabel::C3K2UnionInH);
    assert_eq!(classify_small_alpha(&complete(4)), FamilyLabel::Sandwich2K2K4);
    assert_eq!(classify_small_alpha(&cycle(6)), FamilyLabel::Unclassified);
}

#[test]
fn small_alpha_sums() {
    let r = small_alpha_ng(&star(12)).unwrap();
    assert_eq!((r.alpha_g, r.alpha_gc, r.sum), (h("1"), h("11/2"), h("13/2")));
    assert!(r.holds && r.equality && r.single_dominating_vertex);

    let r = small_alpha_ng(&union(&cycle(3), &empty(9))).unwrap();
    assert_eq!((r.sum, r.bound), (h("15/2"), h("15/2")));
    assert!(r.holds);

    let r = small_alpha_ng(&k2pql(0, 0, 10)).unwrap();
    assert_eq!((r.alpha_g, r.alpha_gc, r.sum), (h("2"), h("5"), h("7")));
    assert!(r.holds && r.equality);

    assert!(matches!(small_alpha_ng(&cycle(6)), Err(Error::Precondition(_))));
}

#[test]
fn bound_examples() {
    let r = ng_sum(&star(29)).unwrap();
    assert_eq!(r.sum, h("15"));
    let c = r.check(Bound::NonEmpty);
    assert!(c.applies && c.satisfied && c.equality);
    assert_eq!(r.equality_family, FamilyLabel::SpanningStar { leaves: 28 });

    let r = ng_sum(&empty(30)).unwrap();
    assert_eq!(r.sum, h("15"));
    assert!(r.check(Bound::General).equality);
    assert_eq!(r.equality_family, FamilyLabel::EmptyOrComplete);

    let r = ng_sum(&k2pql(14, 13, 1)).unwrap();
    assert_eq!((r.alpha_g, r.alpha_gc, r.sum), (h("2"), h("15"), h("17")));
    let c = r.check(Bound::IsolateFree);
    assert!(c.applies && c.equality);
    assert_eq!(r.equality_family, FamilyLabel::K2pql { p: 14, q: 13, l: 1 });

    assert_eq!(
        classify_equality_family(&union(&star(6), &star(24)), Bound::IsolateFree),
        FamilyLabel::BistarInK2n2 { m: 5 }
    );
    assert_eq!(classify_equality_family(&complete(30), Bound::General), FamilyLabel::EmptyOrComplete);
}

#[test]
fn construction_examples() {
    let s8 = star(8);
    let p = good_partition(&s8).unwrap();
    let c = construct_complement_fm(&s8, &p, ConstructionKind::Basic).unwrap();
    assert_eq!(c.value(), h("7/2"));
    assert_eq!(alpha_prime(&s8.complement()), h("7/2"));
    assert_eq!((c.fm.one_edge_count(), c.fm.half_edge_count()), (1, 5));
    c.fm.validate().unwrap();

    let m = union(&two_k2(), &empty(4));
    let p = good_partition(&m).unwrap();
    let c = construct_complement_fm(&m, &p, ConstructionKind::Basic).unwrap();
    assert_eq!((c.value(), c.fm.one_edge_count()), (h("4"), 4));

    let ds = k2pql(3, 3, 0);
    let p = good_partition(&ds).unwrap();
    assert_eq!((p.t, p.s), (h("2"), 2));
    let exact = alpha_prime(&ds.complement());
    assert!(exact >= h("7/2"));
    let kinds = applicable_kinds(&ds, &p);
    assert_eq!(kinds, vec![ConstructionKind::Basic, ConstructionKind::IsolateFree]);
    for kind in kinds {
        let c = construct_complement_fm(&ds, &p, kind).unwrap();
        assert!(c.meets_claim() && c.value() <= exact, "{kind:?}");
    }
    let c = construct_complement_fm(&ds, &p, ConstructionKind::IsolateFree).unwrap();
    assert!(c.value() >= h("7/2"));
}

#[test]
fn near_quarter_examples() {
    let mut tri = empty(7);
    for _ in 0..7 {
        tri = union(&tri, &cycle(3));
    }
    let p = good_partition(&tri).unwrap();
    assert_eq!(p.t, h("21/2"));
    assert!(matches!(construct_complement_fm_nearquarter(&tri, &p), Err(Error::Precondition(_))));

    let mut cherries = empty(4);
    for _ in 0..8 {
        cherries = union(&cherries, &star(3));
    }
    assert_eq!(cherries.order(), 28);
    let p = good_partition(&cherries).unwrap();
    assert_eq!((p.t, p.s), (h("8"), 8));
    let c = construct_complement_fm_nearquarter(&cherries, &p).unwrap();
    c.fm.validate().unwrap();
    assert!(c.value() >= h("10"));
    assert!(c.value() <= alpha_prime(&cherries.complement()));
}

#[test]
fn order_six_sweep() {
    let out = sweep_enumeration(6, 7, SweepOptions { workers: 1, keep_rows: true }).unwrap();
    assert_eq!(out.rows.len(), 32768);
    let general = out.summary.stats(Bound::General);
    assert_eq!((general.applies, general.violated, general.equality), (32768, 0, 2));
    let tight: Vec<&str> =
        out.rows.iter().filter(|r| r.bound == Bound::General && r.equality).map(|r| r.graph6.as_str()).collect();
    assert_eq!(tight, vec!["E???", "E~~w"]);
}

#[test]
fn dense_samples_at_order_thirty() {
    let spec = SampleSpec::new(30, Probability::new(1, 2).unwrap(), 10_000, 30).unwrap();
    let out = sweep_sample(spec, SweepOptions { workers: 1, keep_rows: false }).unwrap();
    let stats = out.summary.stats(Bound::IsolateFree);
    assert_eq!(stats.violated, 0);
    assert!(stats.applies >= 9_900, "{}", stats.applies);
    assert!(out.summary.is_clean());
}

#[test]
fn sampler_extremes() {
    for (p, want) in [((1, 1), complete(9)), ((0, 1), empty(9))] {
        let spec = SampleSpec::new(9, Probability::new(p.0, p.1).unwrap(), 5, 7).unwrap();
        assert!(sample(spec).all(|x| x == want));
    }
}

#[test]
fn enumeration_counts() {
    assert_eq!(enumerate(3).unwrap().count(), 8);
    assert_eq!(enumerate(4).unwrap().count(), 64);
    let two: Vec<Graph> = enumerate(2).unwrap().collect();
    assert_eq!(two, vec![empty(2), complete(2)]);
}

// Labeled-containment check of each structural family test: a graph is a
// member iff some relabeling puts it between the family's lower and upper
// graphs.

fn pair_index(n: usize) -> Vec<(usize, usize)> {
    let pairs: Vec<(usize, usize)> = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    for (k, &(i, j)) in pairs.iter().enumerate() {
        assert!(graph_from_mask(n, 1 << k).has_edge(i, j));
    }
    pairs
}

fn mask_under(pairs: &[(usize, usize)], g: &Graph, perm: &[usize]) -> u64 {
    let mut mask = 0;
    for (u, v) in g.edges() {
        let (a, b) = (perm[u].min(perm[v]), perm[u].max(perm[v]));
        mask |= 1 << pairs.iter().position(|&p| p == (a, b)).unwrap();
    }
    mask
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    fn go(p: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
        if k == p.len() {
            out.push(p.clone());
            return;
        }
        for i in k..p.len() {
            p.swap(k, i);
            go(p, k + 1, out);
            p.swap(k, i);
        }
    }
    go(&mut p, 0, &mut out);
    out
}

fn sandwich(n: usize, lower: &Graph, upper: &Graph, pairs: &[(usize, usize)], perms: &[Vec<usize>]) -> HashSet<u64> {
    assert!(lower.is_spanning_subgraph_of(upper).unwrap());
    let mut set = HashSet::new();
    for perm in perms {
        let lo = mask_under(pairs, lower, perm);
        let free = mask_under(pairs, upper, perm) & !lo;
        let mut sub = free;
        loop {
            set.insert(lo | sub);
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & free;
        }
    }
    assert!(set.iter().all(|&m| m < 1 << pair_count(n)));
    set
}

fn pad(x: Graph, n: usize) -> Graph {
    let k = n - x.order();
    x.add_isolates(k).unwrap()
}

fn families(n: usize) -> Vec<(FamilyLabel, Graph, Graph)> {
    let mut out = Vec::new();
    for k in 1..n {
        let s = pad(star(k + 1), n);
        out.push((FamilyLabel::StarUnion { k }, s.clone(), s));
    }
    let tri = pad(cycle(3), n);
    out.push((FamilyLabel::TriangleUnion, tri.clone(), tri));
    let lower = pad(two_k2(), n);
    out.push((FamilyLabel::Sandwich2K2K4, lower, pad(complete(4), n)));
    let lower = pad(g(4, &[(0, 2), (1, 3)]), n);
    out.push((FamilyLabel::Sandwich2K2K2pq, lower, k2pql(0, 0, n - 2)));
    if n >= 5 {
        out.push((FamilyLabel::C5UnionInK5, pad(cycle(5), n), pad(complete(5), n)));
        let c3k2 = g(5, &[(0, 1), (1, 2), (0, 2), (3, 4)]);
        out.push((FamilyLabel::C3K2UnionInK5, pad(c3k2, n), pad(complete(5), n)));
        let in_h = g(5, &[(1, 2), (2, 3), (1, 3), (0, 4)]);
        out.push((FamilyLabel::C3K2UnionInH, pad(in_h, n), hgraph(n)));
    }
    for m in 1..=n - 3 {
        let mut lower = Graph::new(n).unwrap();
        for v in 2..n {
            lower.add_edge(if v < 2 + m { 0 } else { 1 }, v);
        }
        out.push((FamilyLabel::BistarInK2n2 { m }, lower, complete_bipartite(2, n - 2)));
    }
    out
}

fn check_containment(n: usize) {
    let pairs = pair_index(n);
    let perms = permutations(n);
    for (label, lower, upper) in families(n) {
        let members = sandwich(n, &lower, &upper, &pairs, &perms);
        for mask in 0..1u64 << pair_count(n) {
            let x = graph_from_mask(n, mask);
            assert_eq!(is_member(&x, label), members.contains(&mask), "{label} on {}", emit_graph6(&x));
        }
    }
}

#[test]
fn family_tests_match_containment_up_to_six() {
    for n in 4..=6 {
        check_containment(n);
    }
}

#[test]
fn family_tests_match_containment_at_seven() {
    check_containment(7);
}

#[test]
fn classifier_label_is_a_membership() {
    for n in 2..=6 {
        for x in enumerate(n).unwrap() {
            let label = classify_small_alpha(&x);
            if !label.is_none() {
                assert!(is_member(&x, label), "{label} on {}", emit_graph6(&x));
            }
        }
    }
}
