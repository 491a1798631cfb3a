//! Randomised invariants of the permutation algebra, subgroup operations,
//! embedding verdicts, file formats and arithmetic.

mod common;

use std::collections::BTreeSet;

use proptest::prelude::*;

use gtverify::arith;
use gtverify::corpus;
use gtverify::embedding::{satisfies, Property};
use gtverify::groupfile::GroupSpec;
use gtverify::perm::Permutation;
use gtverify::report::{from_json, to_json, Params, VerdictReport};
use gtverify::subgroup::{conjugacy_class_size, normal_closure, normal_core, normalizer, Subgroup};
use gtverify::theorems::GroupContext;

const SMALL: &[&str] = &["sym4", "a4", "dihedral12", "sl23", "frob20", "frob21", "s3xs3", "c3xa4", "c2xsym4", "f3sq_c4"];

fn perm(n: usize) -> impl Strategy<Value = Permutation> {
    Just((0..n).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::from_images(v).unwrap())
}

fn triple() -> impl Strategy<Value = (Permutation, Permutation, Permutation)> {
    (2usize..12).prop_flat_map(|n| (perm(n), perm(n), perm(n)))
}

/// A corpus group, a subgroup generated by two of its elements, and a
/// conjugating element.
fn group_case() -> impl Strategy<Value = (usize, usize, usize, usize)> {
    (0..SMALL.len(), any::<usize>(), any::<usize>(), any::<usize>())
}

fn build(case: (usize, usize, usize, usize)) -> (GroupContext, Subgroup, usize) {
    let (gi, a, b, c) = case;
    let ctx = GroupContext::builtin(SMALL[gi]).unwrap();
    let n = ctx.order() as usize;
    let h = Subgroup::generated(ctx.group(), &[a % n, b % n]);
    (ctx, h, c % n)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn perm_algebra((x, y, z) in triple()) {
        prop_assert_eq!(x.compose(&y).compose(&z), x.compose(&y.compose(&z)));
        prop_assert!(x.compose(&x.inverse()).is_identity());
        prop_assert_eq!(x.conjugate_by(&y), y.inverse().compose(&x).compose(&y));
        prop_assert!(x.pow(x.order()).is_identity());
        let back = Permutation::from_cycles(x.degree(), &x.cycles()).unwrap();
        prop_assert_eq!(&back, &x);
        prop_assert_eq!(Permutation::parse(x.degree(), &x.to_string()).unwrap(), x);
    }

    #[test]
    fn core_below_subgroup_below_closure(case in group_case()) {
        let (ctx, h, _) = build(case);
        let core = normal_core(&ctx.g, &h);
        let cl = normal_closure(&ctx.g, &h);
        prop_assert!(core.is_subgroup_of(&h) && h.is_subgroup_of(&cl));
        prop_assert!(ctx.lat.is_normal(&core) && ctx.lat.is_normal(&cl));
        let ggens = ctx.group().perm_group().generators().to_vec();
        let hs = common::perms_of(&h);
        prop_assert_eq!(common::perms_of(&core), common::core_by_generators(&ggens, &hs));
    }

    #[test]
    fn orbit_stabilizer_on_conjugates(case in group_case()) {
        let (ctx, h, _) = build(case);
        let n = normalizer(&ctx.g, &h);
        prop_assert_eq!(conjugacy_class_size(&ctx.g, &h) * n.order(), ctx.g.order());
    }

    #[test]
    fn verdicts_invariant_under_conjugation(case in group_case()) {
        let (ctx, h, g) = build(case);
        let hg = h.conjugate(g);
        for prop in [Property::PartialPi, Property::PartialLPi] {
            prop_assert_eq!(satisfies(&ctx.lat, &h, prop).holds, satisfies(&ctx.lat, &hg, prop).holds);
        }
    }

    #[test]
    fn groupfile_round_trip(i in 0..corpus::DEFAULT_CORPUS.len()) {
        let id = corpus::DEFAULT_CORPUS[i];
        let pg = corpus::build(id).unwrap();
        let spec = GroupSpec::from_group(id, &pg);
        let back = GroupSpec::parse(&spec.serialize()).unwrap();
        prop_assert_eq!(&back, &spec);
        prop_assert_eq!(back.to_group().unwrap().order(), pg.order());
    }

    #[test]
    fn report_json_round_trip(
        group in "[a-z0-9_]{1,12}",
        p in proptest::option::of(2u64..50),
        hyp in proptest::option::of(any::<bool>()),
        clauses in proptest::collection::vec(("[ -~]{0,20}", any::<bool>()), 0..4),
        t in any::<u64>(),
    ) {
        let mut r = VerdictReport::new(&group, "check", Params { p, ..Params::default() });
        if let Some(h) = hyp {
            r.set_hypothesis(h);
        }
        for (name, holds) in &clauses {
            r.clause(name, *holds, "detail");
        }
        r.conclude();
        r.wall_time_us = t;
        let text = to_json(std::slice::from_ref(&r)).unwrap();
        prop_assert_eq!(from_json(&text).unwrap(), vec![r]);
    }

    #[test]
    fn arithmetic(n in 1u64..100_000, p in prop::sample::select(vec![2u64, 3, 5, 7, 11])) {
        let f = arith::factorize(n);
        prop_assert_eq!(f.iter().map(|&(q, e)| q.pow(e)).product::<u64>(), n);
        prop_assert!(f.iter().all(|&(q, _)| arith::is_prime(q)));
        prop_assert_eq!(arith::is_prime(n), n > 1 && (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0));
        let primes: BTreeSet<u64> = arith::prime_divisors(n);
        prop_assert!(arith::is_pi_number(n, &primes));
        prop_assert_eq!(common::is_pi_number(n, &[p]), arith::log_p(n, p).is_some());
        let pp = arith::p_part(n, p);
        prop_assert!(n % pp == 0 && (n / pp) % p != 0);
    }
}
