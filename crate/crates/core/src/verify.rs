//! Per-graph consistency checks shared by the `selftest` subcommand, the
//! examples and the acceptance run. Each returns `None` when the graph
//! passes, or a short description of the first failure.

use crate::bounds::{ng_sum, Bound};
use crate::construct::{applicable_kinds, construct_complement_fm, CaseDescriptor};
use crate::families::{classify_small_alpha, FamilyLabel};
use crate::fm::{
    alpha_prime, berge_deficiency, berge_deficiency_exhaustive, canonicalize_fm, extract_fm, HalfComponent,
    EXHAUSTIVE_BERGE_LIMIT,
};
use crate::graph::Graph;
use crate::half::HalfInt;
use crate::oracle::{oracle_alpha_exhaustive, ORACLE_EDGE_LIMIT};
use crate::partition::{good_partition, verify_partition};

/// `α′` from augmenting paths, from the Berge deficiency, and from the
/// exhaustive oracle when the graph is small enough, must coincide.
pub fn alpha_agreement(g: &Graph) -> Option<String> {
    let n = g.order();
    let alpha = alpha_prime(g);
    let berge = if n <= EXHAUSTIVE_BERGE_LIMIT { berge_deficiency_exhaustive(g).ok()? } else { berge_deficiency(g) };
    if berge.alpha(n) != alpha {
        return Some(format!("alpha {alpha} but deficiency {} gives {}", berge.deficiency, berge.alpha(n)));
    }
    if g.edge_count() <= ORACLE_EDGE_LIMIT {
        let oracle = oracle_alpha_exhaustive(g).ok()?;
        if oracle != alpha {
            return Some(format!("alpha {alpha} but oracle {oracle}"));
        }
    }
    None
}

/// The canonical optimum: value `α′`, weights in `{0, 1/2, 1}`, 1/2-edges
/// forming disjoint odd cycles, unweighted vertices independent with only
/// full neighbours, and perfect on its support with `α′ = |V1|/2`.
pub fn normal_form_failure(g: &Graph) -> Option<String> {
    let alpha = alpha_prime(g);
    let f = match canonicalize_fm(g, &extract_fm(g)) {
        Ok(f) => f,
        Err(e) => return Some(format!("canonicalize: {e}")),
    };
    if f.value() != alpha {
        return Some(format!("value {} != alpha {alpha}", f.value()));
    }
    if let Err(e) = f.validate() {
        return Some(e.to_string());
    }
    for comp in f.half_components() {
        if let HalfComponent::Path(p) = comp {
            return Some(format!("1/2-path {p:?}"));
        }
        if comp.vertices().len() % 2 == 0 {
            return Some(format!("even 1/2-cycle {:?}", comp.vertices()));
        }
    }
    let unweighted = f.unweighted();
    if !g.is_independent(unweighted) {
        return Some("unweighted set not independent".into());
    }
    let full = f.full_vertices();
    if let Some(v) = unweighted.iter().find(|&v| !g.neighbours(v).is_subset(full)) {
        return Some(format!("unweighted vertex {v} has a non-full neighbour"));
    }
    let support = f.support();
    if support.iter().any(|v| f.load(v) != 2) {
        return Some("not perfect on its support".into());
    }
    if HalfInt::from_units(support.len() as u32) != alpha {
        return Some(format!("|V1| = {} but alpha {alpha}", support.len()));
    }
    None
}

pub fn partition_failure(g: &Graph) -> Option<String> {
    match good_partition(g) {
        Err(e) => Some(format!("good_partition: {e}")),
        Ok(p) => {
            let r = verify_partition(g, &p);
            (!r.all_hold()).then(|| r.failures().join(", "))
        }
    }
}

/// A label is produced exactly for `α′ ∈ {1, 3/2, 2, 5/2}`, and it names a
/// family with that `α′`.
pub fn classifier_failure(g: &Graph) -> Option<String> {
    let alpha = alpha_prime(g);
    let label = classify_small_alpha(g);
    let small = (2..=5).contains(&alpha.units());
    if small == label.is_none() {
        return Some(format!("alpha {alpha} labelled {label}"));
    }
    match label.alpha() {
        Some(a) if a != alpha => Some(format!("label {label} implies alpha {a}, actual {alpha}")),
        _ => None,
    }
}

/// `α′(G) + α′(Ḡ) >= n/2`, tight exactly on empty and complete graphs.
pub fn general_bound_failure(g: &Graph) -> Option<String> {
    let r = match ng_sum(g) {
        Ok(r) => r,
        Err(e) => return Some(e.to_string()),
    };
    let c = r.check(Bound::General);
    if !c.satisfied {
        return Some(format!("sum {} below n/2", r.sum));
    }
    let trivial = g.is_empty_graph() || g.is_complete();
    if c.equality != trivial {
        return Some(format!(
            "equality {} on a graph that is {}empty/complete",
            c.equality,
            if trivial { "" } else { "not " }
        ));
    }
    if trivial && r.equality_family != FamilyLabel::EmptyOrComplete {
        return Some(format!("family {}", r.equality_family));
    }
    None
}

/// Runs every construction whose hypotheses hold. Each output must be a
/// valid fractional matching of `Ḡ`, meet its claim, and stay at or below
/// `α′(Ḡ)`.
pub fn construction_failures(g: &Graph) -> (Vec<CaseDescriptor>, Option<String>) {
    let p = match good_partition(g) {
        Ok(p) => p,
        Err(e) => return (Vec::new(), Some(format!("good_partition: {e}"))),
    };
    let gc = g.complement();
    let exact = alpha_prime(&gc);
    let mut cases = Vec::new();
    for kind in applicable_kinds(g, &p) {
        let c = match construct_complement_fm(g, &p, kind) {
            Ok(c) => c,
            Err(e) => return (cases, Some(format!("{kind:?}: {e}"))),
        };
        if c.fm.host() != &gc {
            return (cases, Some(format!("{kind:?}: host is not the complement")));
        }
        if let Err(e) = c.fm.validate() {
            return (cases, Some(format!("{kind:?}: {e}")));
        }
        if !c.meets_claim() {
            return (
                cases,
                Some(format!("{kind:?}/{:?}: value {} below claim {}", c.case.branch, c.value(), c.case.claimed)),
            );
        }
        if c.value() > exact {
            return (cases, Some(format!("{kind:?}: value {} above alpha(complement) {exact}", c.value())));
        }
        cases.push(c.case);
    }
    (cases, None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, empty, k2pql, star};

    #[test]
    fn small_graphs_pass() {
        for g in [empty(4), complete(5), cycle(5), star(6), k2pql(2, 1, 1)] {
            assert_eq!(alpha_agreement(&g), None);
            assert_eq!(normal_form_failure(&g), None);
            assert_eq!(partition_failure(&g), None);
            assert_eq!(classifier_failure(&g), None);
            assert_eq!(general_bound_failure(&g), None);
            assert_eq!(construction_failures(&g).1, None);
        }
    }

    #[test]
    fn constructions_reported() {
        let (cases, fail) = construction_failures(&star(8));
        assert_eq!(fail, None);
        assert!(!cases.is_empty());
    }
}
