//! Engine, subgroup and lattice results against brute-force oracles.

mod common;

use gtverify::corpus;
use gtverify::normal::NormalLattice;
use gtverify::subgroup::{all_subgroups, frattini_by_maximal_subgroups, subgroups_of_order, sylow_subgroup, Subgroup};
use gtverify::suite::{builtin_corpus, run_property_suite};
use gtverify::table::FiniteGroup;

fn whole(id: &str) -> Subgroup {
    Subgroup::whole(&FiniteGroup::new(corpus::build(id).unwrap()).unwrap())
}

fn brute_subgroups(id: &str) -> Vec<common::PermSet> {
    let pg = corpus::build(id).unwrap();
    let all = common::closure(pg.degree(), pg.generators());
    common::all_subgroups(pg.degree(), &all)
}

fn count_of_order(subs: &[common::PermSet], n: usize) -> usize {
    subs.iter().filter(|s| s.len() == n).count()
}

#[test]
fn small_subgroup_counts() {
    let d8 = brute_subgroups("dihedral8");
    assert_eq!(count_of_order(&d8, 4), 3);
    assert_eq!(count_of_order(&d8, 2), 5);
    let q8 = brute_subgroups("quaternion8");
    assert_eq!(count_of_order(&q8, 2), 1);
    assert_eq!(count_of_order(&q8, 4), 3);
    let c3c3 = brute_subgroups("c3xc3");
    assert_eq!(count_of_order(&c3c3, 3), 4);
}

#[test]
fn all_subgroups_match_brute_force() {
    for id in ["sym3", "sym4", "a4", "dihedral8", "dihedral12", "quaternion8", "semidihedral16", "sl23", "frob20", "c3xa4", "c2cube", "c3cube"] {
        let g = whole(id);
        let mut ours: Vec<usize> = all_subgroups(&g).unwrap().iter().map(|h| h.order()).collect();
        let mut brute: Vec<usize> = brute_subgroups(id).iter().map(|s| s.len()).collect();
        ours.sort();
        brute.sort();
        assert_eq!(ours, brute, "{id}");
    }
}

#[test]
fn p_subgroups_of_order_match_brute_force() {
    for (id, p) in [("sym4", 2), ("semidihedral16", 2), ("c3cube", 3), ("f3sq_c4", 3), ("gl23", 2)] {
        let g = whole(id);
        let pg = sylow_subgroup(&g, p);
        let pset = common::perms_of(&pg);
        let brute = common::all_subgroups(g.group().degree(), &pset);
        let mut d = 1;
        while d <= pg.order() {
            let ours = subgroups_of_order(&pg, d as u64).unwrap();
            assert_eq!(ours.len(), count_of_order(&brute, d), "{id} order {d}");
            d *= p as usize;
        }
    }
}

#[test]
fn frattini_matches_maximal_subgroup_intersection() {
    for id in corpus::DEFAULT_CORPUS {
        let g = whole(id);
        if g.order() > 500 {
            continue;
        }
        let lat = NormalLattice::new(&g).unwrap();
        assert_eq!(lat.frattini().unwrap(), frattini_by_maximal_subgroups(&g).unwrap(), "{id}");
    }
}

#[test]
fn property_suite_is_deterministic() {
    let entries: Vec<_> = builtin_corpus()
        .unwrap()
        .into_iter()
        .filter(|e| ["sym4", "dihedral12", "frob21", "c3xc3_inv"].contains(&e.name.as_str()))
        .collect();
    let run = || {
        run_property_suite(&entries, None, 7, Default::default())
            .unwrap()
            .reports
            .iter()
            .map(|r| r.without_timing())
            .collect::<Vec<_>>()
    };
    let a = run();
    assert!(!a.is_empty());
    assert_eq!(a, run());
}
