//! Partial Π does not imply partial 𝓛-Π when the latter quantifies over every
//! maximal G-invariant K. Pinned witnesses, checked with a brute-force
//! normalizer.

mod common;

use gtverify::embedding::{satisfies_partial_l_pi, satisfies_partial_pi};
use gtverify::perm::Permutation;
use gtverify::subgroup::{subgroups_of_order, Subgroup};
use gtverify::theorems::GroupContext;

#[test]
fn a5_times_c2_diagonal_involution() {
    let ctx = GroupContext::builtin("a5xc2").unwrap();
    let h = Subgroup::from_perms(ctx.group(), &[Permutation::parse(7, "(1,2)(3,4)(6,7)").unwrap()]).unwrap();
    let pi = satisfies_partial_pi(&ctx.lat, &h);
    assert!(pi.holds && pi.revalidate(&ctx.g, &h));
    let lpi = satisfies_partial_l_pi(&ctx.lat, &h);
    assert!(!lpi.holds && lpi.revalidate(&ctx.g, &h));

    let all = common::closure(7, ctx.group().perm_group().generators());
    let bad: Vec<_> = lpi.witnesses.iter().filter(|w| !w.passes).collect();
    assert!(!bad.is_empty());
    for w in bad {
        // K is the central C2 and X = <a> x Z.
        assert_eq!((w.lower.order(), w.x.order()), (2, 4));
        let x = common::perms_of(&w.x);
        let index = all.len() / common::normalizer(&all, &x).len();
        assert_eq!(index, 15);
        assert!(!common::is_pi_number(index as u64, &[2]));
    }
}

#[test]
fn order_1875_group_counts() {
    let ctx = GroupContext::builtin("example_1_7").unwrap();
    let subs = subgroups_of_order(&ctx.sylow(5), 25).unwrap();
    assert_eq!(subs.len(), 806);
    assert!(subs.iter().all(|h| satisfies_partial_pi(&ctx.lat, h).holds));
    let l_pi = subs.iter().filter(|h| satisfies_partial_l_pi(&ctx.lat, h).holds).count();
    assert_eq!(l_pi, 26);
}
