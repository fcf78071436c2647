mod common;

use belief_core::{
    belief, bounds, credal_vertices, fh_conditional, masses_from_belief, oracle_conditional,
    pignistic, World,
};
use common::{random_mass, random_subset, rng};

#[test]
fn closed_form_matches_vertex_oracle() {
    let mut r = rng(20);
    let mut checked = 0;
    while checked < 300 {
        let m = random_mass(&mut r, World::Closed);
        let a = random_subset(&mut r, m.frame());
        let b = random_subset(&mut r, m.frame());
        if belief(&m).pl(a) <= 1e-9 {
            continue;
        }
        let fh = fh_conditional(&m, a, b).unwrap();
        let oracle = oracle_conditional(&m, a, b).unwrap();
        assert!(
            (fh.lower - oracle.lower).abs() < 1e-9 && (fh.upper - oracle.upper).abs() < 1e-9,
            "{m:?} A={a} B={b}: fh {fh:?} oracle {oracle:?}"
        );
        checked += 1;
    }
}

#[test]
fn conditional_lower_bound_is_a_belief_function() {
    let mut r = rng(21);
    let mut checked = 0;
    while checked < 300 {
        let m = random_mass(&mut r, World::Closed);
        let f = m.frame();
        let a = random_subset(&mut r, f);
        if belief(&m).pl(a) <= 1e-9 {
            continue;
        }
        let lower: Vec<f64> = f
            .subsets()
            .map(|b| fh_conditional(&m, a, b).unwrap().lower)
            .collect();
        // masses_from_belief fails on any recovered mass below -1e-9
        masses_from_belief(f, &lower).unwrap();
        checked += 1;
    }
}

#[test]
fn oracle_interval_contains_pignistic_conditional() {
    let mut r = rng(22);
    for _ in 0..300 {
        let m = random_mass(&mut r, World::Closed);
        let a = random_subset(&mut r, m.frame());
        let b = random_subset(&mut r, m.frame());
        let p = pignistic(&m).unwrap();
        if p.prob(a) <= 1e-9 {
            continue;
        }
        let oracle = oracle_conditional(&m, a, b).unwrap();
        assert!(oracle.lower >= 0.0 && oracle.upper <= 1.0);
        let bayes = p.prob(a.intersection(b)) / p.prob(a);
        assert!(oracle.contains(bayes, 1e-9));
    }
}

#[test]
fn vertices_dominate_belief_and_their_mean_does_too() {
    let mut r = rng(23);
    for _ in 0..300 {
        let m = random_mass(&mut r, World::Closed);
        let view = belief(&m);
        let vs = credal_vertices(&m).unwrap();
        assert!(!vs.is_empty());
        let n = m.frame().len();
        let mut mean = vec![0.0; n];
        for v in &vs {
            assert!((v.probabilities().iter().sum::<f64>() - 1.0).abs() < 1e-9);
            for (acc, p) in mean.iter_mut().zip(v.probabilities()) {
                *acc += p / vs.len() as f64;
            }
        }
        for a in m.frame().subsets() {
            let pa: f64 = a.members().map(|i| mean[i]).sum();
            assert!(view.bel(a) <= pa + 1e-12 && pa <= view.pl(a) + 1e-12);
            let b = bounds(&m, a).unwrap();
            assert!(b.lower <= b.upper);
            for v in &vs {
                assert!(b.contains(v.prob(a), 1e-12));
            }
        }
    }
}
