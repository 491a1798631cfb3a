//! Property checks run by the suite: the lemmas, plus every structural
//! invariant of the engine, lattice, module, embedding and formation layers.
//! Each check returns one or more tallies for the group in `Env`.

use std::collections::{BTreeSet, HashSet, VecDeque};

use rand::seq::SliceRandom;
use rand::Rng;

use crate::arith;
use crate::bsgs::PermGroup;
use crate::config::budget;
use crate::corpus;
use crate::embedding::{
    hypothesis_order_d, satisfies_partial_l_pi, satisfies_partial_pi,
    satisfies_partial_pi_between_core_and_closure, Property,
};
use crate::formation::{is_central_by_semidirect, Centrality, FormationId};
use crate::gmodule::{modules_isomorphic, GModule};
use crate::normal::{NormalLattice, Section};
use crate::perm::Permutation;
use crate::quotient::coset_action;
use crate::report::Params;
use crate::subgroup::{
    all_subgroups, centralizer, centralizer_of_section, conjugacy_class_size, cyclic_subgroups_of_order,
    frattini_by_maximal_subgroups, frattini_p_group, is_quaternion_free, normal_closure, normal_core,
    normalizer, normalizer_brute, subgroups_of_order, sylow_subgroup, Subgroup,
};
use crate::suite::{Env, Tally};
use crate::table::ElemSet;
use crate::theorems::describe;

pub type CheckFn = fn(&Env) -> Vec<Tally>;

pub const JSON_ROUNDTRIP: &str = "harness-json-roundtrip";

pub const CHECKS: &[(&str, CheckFn)] = &[
    ("lemma-passing", lemma_passing),
    ("lemma-over", lemma_over),
    ("lemma-OV", lemma_ov),
    ("lemma-phi", lemma_phi),
    ("lemma-also", lemma_also),
    ("lemma-Normal", lemma_normal),
    ("lemma-unique", lemma_unique),
    ("lemma-hyper", lemma_hyper),
    ("lemma-Qian", lemma_qian),
    ("lemma-p-group", lemma_p_group),
    ("lemma-less", lemma_less),
    ("lemma-cyclic", lemma_cyclic),
    ("engine-order", engine_order),
    ("engine-membership", engine_membership),
    ("engine-coset-action", engine_coset_action),
    ("engine-bsgs-determinism", engine_bsgs_determinism),
    ("subgroup-closure-core", subgroup_closure_core),
    ("subgroup-orbit-stabilizer", subgroup_orbit_stabilizer),
    ("subgroup-count", subgroup_count),
    ("subgroup-frattini", subgroup_frattini),
    ("subgroup-quaternion-free", subgroup_quaternion_free),
    ("normal-jordan-holder", normal_jordan_holder),
    ("normal-p-soluble-second-series", normal_second_series),
    ("normal-p-rank", normal_p_rank),
    ("module-spin", module_spin),
    ("module-iso-equivalence", module_iso_equivalence),
    ("module-minimal-submodule-count", module_minimal_submodule_count),
    ("embedding-pi-implies-l-pi", embedding_pi_implies_l_pi),
    ("embedding-sylow-conjugate", embedding_sylow_conjugate),
    ("formation-sanity", formation_sanity),
    ("formation-ascent-order", formation_ascent_order),
    ("formation-two-formulations", formation_two_formulations),
    ("formation-semidirect", formation_semidirect),
    ("harness-self-test", harness_self_test),
    (JSON_ROUNDTRIP, |_| Vec::new()),
];

fn p_params(p: u64) -> Params {
    Params {
        p: Some(p),
        ..Params::default()
    }
}

fn tag(s: &str) -> Params {
    Params {
        extra: Some(s.to_string()),
        ..Params::default()
    }
}

fn primes(env: &Env) -> Vec<u64> {
    env.gc.primes()
}

/// Up to `n` pool subgroups chosen at random, in pool order.
fn pool_sample<'e>(env: &'e Env, n: usize, tag: &str) -> Vec<&'e Subgroup> {
    let mut idx: Vec<usize> = (0..env.pool.len()).collect();
    if idx.len() > n {
        idx.shuffle(&mut env.rng(tag));
        idx.truncate(n);
        idx.sort_unstable();
    }
    idx.into_iter().map(|i| &env.pool[i]).collect()
}

fn random_element(env: &Env, rng: &mut impl Rng, within: &Subgroup) -> usize {
    let elems: Vec<usize> = within.elements().collect();
    let _ = env;
    elems[rng.gen_range(0..elems.len())]
}

/// All subgroups for small groups, otherwise random one- and two-generator
/// subgroups of `G` and of each Sylow subgroup.
pub fn subgroup_pool(env: &Env) -> Vec<Subgroup> {
    let gc = env.gc;
    if gc.order() <= 200 {
        if let Ok(all) = all_subgroups(&gc.g) {
            if all.len() <= 400 {
                return all;
            }
        }
    }
    let mut rng = env.rng("pool");
    let grp = gc.group();
    let mut seen = HashSet::new();
    let mut pool = Vec::new();
    let mut push = |h: Subgroup, pool: &mut Vec<Subgroup>| {
        if seen.insert(h.set().clone()) {
            pool.push(h);
        }
    };
    for i in 0..24 {
        let x = random_element(env, &mut rng, &gc.g);
        let mut h = Subgroup::generated(grp, &[x]);
        if i % 2 == 1 {
            h = h.join_element(random_element(env, &mut rng, &gc.g));
        }
        push(h, &mut pool);
    }
    for p in primes(env) {
        let s = gc.sylow(p);
        for i in 0..8 {
            let mut h = Subgroup::generated(grp, &[random_element(env, &mut rng, &s)]);
            if i % 2 == 1 {
                h = h.join_element(random_element(env, &mut rng, &s));
            }
            push(h, &mut pool);
        }
    }
    pool.sort();
    pool
}

// ---------------------------------------------------------------- lemmas

fn lemma_passing(env: &Env) -> Vec<Tally> {
    let lat = &env.gc.lat;
    let mut t = env.tally("lemma-passing", Params::default());
    for h in &env.pool {
        let full = satisfies_partial_pi(lat, h).holds;
        let restricted = satisfies_partial_pi_between_core_and_closure(lat, h);
        t.record(true, full == restricted, || {
            format!("{}: full search {full}, restricted {restricted}", describe(h))
        });
    }
    vec![t]
}

/// Proper nontrivial normal subgroups, by lattice index.
fn proper_normals(env: &Env) -> Vec<usize> {
    let nodes = env.gc.lat.nodes();
    (1..nodes.len().saturating_sub(1)).collect()
}

fn lemma_over(env: &Env) -> Vec<Tally> {
    let lat = &env.gc.lat;
    let mut t = env.tally("lemma-over", Params::default());
    for ni in proper_normals(env) {
        let n = &lat.nodes()[ni];
        let q = match env.quotient(ni) {
            Ok(q) => q,
            Err(e) => {
                t.skip("quotient", &e);
                continue;
            }
        };
        for h in &env.pool {
            let coprime = arith::gcd(h.order() as u64, n.order() as u64) == 1;
            let applicable = (n.is_subgroup_of(h) || coprime) && satisfies_partial_pi(lat, h).holds;
            let holds = !applicable || satisfies_partial_pi(&q.1, &q.0.image(h)).holds;
            t.record(applicable, holds, || format!("H {} N {}", describe(h), describe(n)));
        }
    }
    vec![t]
}

fn lemma_ov(env: &Env) -> Vec<Tally> {
    let lat = &env.gc.lat;
    let mut t1 = env.tally("lemma-OV", tag("HN in G"));
    let mut t2 = env.tally("lemma-OV", tag("HN/N in G/N"));
    for ni in proper_normals(env) {
        let n = &lat.nodes()[ni];
        let q = match env.quotient(ni) {
            Ok(q) => q,
            Err(e) => {
                t2.skip("quotient", &e);
                continue;
            }
        };
        for h in &env.pool {
            let applicable = satisfies_partial_l_pi(lat, h).holds;
            let (a, b) = if applicable {
                (
                    satisfies_partial_l_pi(lat, &h.join(n)).holds,
                    satisfies_partial_l_pi(&q.1, &q.0.image(h)).holds,
                )
            } else {
                (true, true)
            };
            t1.record(applicable, a, || format!("H {} N {}", describe(h), describe(n)));
            t2.record(applicable, b, || format!("H {} N {}", describe(h), describe(n)));
        }
    }
    vec![t1, t2]
}

fn frattini_of(env: &Env, e: &Subgroup, p: u64) -> crate::error::Result<Subgroup> {
    if *e == env.gc.g {
        env.gc.lat.frattini()
    } else if e.is_p_group(p) {
        frattini_p_group(e)
    } else {
        NormalLattice::new(e)?.frattini()
    }
}

fn lemma_phi(env: &Env) -> Vec<Tally> {
    let lat = &env.gc.lat;
    let mut out = Vec::new();
    for p in primes(env) {
        let mut t = env.tally("lemma-phi", p_params(p));
        let c = env.gc.up(p);
        let z = c.hypercentre(lat);
        for e in lat.nodes().iter().filter(|e| e.order() as u64 % p == 0) {
            let phi = match frattini_of(env, e, p) {
                Ok(x) => x,
                Err(err) => {
                    t.skip("Frattini subgroup", &err);
                    continue;
                }
            };
            let left = e.is_subgroup_of(&z);
            let right = e.is_subgroup_of(&c.hypercentre_from(lat, &phi, false));
            t.record(true, left == right, || {
                format!("E {}: E <= Z {left}, E/Phi(E) <= Z(G/Phi(E)) {right}", describe(e))
            });
        }
        out.push(t);
    }
    out
}

fn lemma_also(env: &Env) -> Vec<Tally> {
    let lat = &env.gc.lat;
    let mut out = Vec::new();
    for p in primes(env) {
        let mins: Vec<Subgroup> = lat
            .minimal_normals()
            .into_iter()
            .filter(|m| m.order() as u64 == p)
            .collect();
        if mins.is_empty() {
            continue;
        }
        let mut t = env.tally("lemma-also", p_params(p));
        let ls = cyclic_subgroups_of_order(&env.gc.g, p);
        for n in &mins {
            for l in &ls {
                let applicable = satisfies_partial_l_pi(lat, &l.join(n)).holds;
                let holds = !applicable || satisfies_partial_l_pi(lat, l).holds;
                t.record(applicable, holds, || format!("N {} L {}", describe(n), describe(l)));
            }
        }
        out.push(t);
    }
    out
}

fn section_module(env: &Env, upper: &Subgroup, lower: &Subgroup) -> crate::error::Result<GModule> {
    GModule::from_section(&env.gc.g, &Section::new(upper.clone(), lower.clone()))
}

fn g_isomorphic(env: &Env, a: &Subgroup, b: &Subgroup) -> crate::error::Result<bool> {
    let triv = &env.gc.lat.nodes()[0];
    let sa = Section::new(a.clone(), triv.clone());
    let sb = Section::new(b.clone(), triv.clone());
    if !sa.is_elementary_abelian() || !sb.is_elementary_abelian() || sa.order() != sb.order() {
        return Ok(false);
    }
    modules_isomorphic(&section_module(env, a, triv)?, &section_module(env, b, triv)?)
}

fn lemma_normal(env: &Env) -> Vec<Tally> {
    let gc = env.gc;
    let lat = &gc.lat;
    let mins = lat.minimal_normals();
    let mut out = Vec::new();
    for p in primes(env) {
        let pg = gc.sylow(p);
        let mut t = env.tally("lemma-Normal", p_params(p));
        for d in arith::p_powers_between(p, p, pg.order() as u64) {
            let targets: Vec<&Subgroup> = mins.iter().filter(|n| n.order() as u64 % d == 0).collect();
            if targets.is_empty() {
                continue;
            }
            let hyp = match gc.hypothesis(&pg, d) {
                Ok(h) => h.holds,
                Err(e) => {
                    t.skip("order-d hypothesis", &e);
                    continue;
                }
            };
            if hyp {
                let pi_reading = hypothesis_order_d(lat, &pg, d, Property::PartialPi).map(|h| h.holds);
                t.note(format!("d = {d}: partial-Pi reading of the hypothesis {pi_reading:?}"));
            }
            for n in targets {
                let mut holds = n.order() as u64 == d;
                if hyp && holds && d >= p * p {
                    for m in mins.iter().filter(|m| m.order() as u64 % p == 0) {
                        match g_isomorphic(env, n, m) {
                            Ok(b) => holds &= b,
                            Err(e) => t.skip("G-isomorphism", &e),
                        }
                    }
                }
                t.record(hyp, holds, || format!("d = {d}, N {}", describe(n)));
            }
        }
        out.push(t);
    }
    out
}

fn formations(env: &Env) -> Vec<(String, Centrality)> {
    let mut v = vec![("U".to_string(), Centrality::new(FormationId::U, env.gc.convention))];
    for p in primes(env) {
        v.push((format!("U_{p}"), env.gc.up(p)));
    }
    v
}

fn lemma_unique(env: &Env) -> Vec<Tally> {
    let lat = &env.gc.lat;
    let nodes = lat.nodes();
    let triv = &nodes[0];
    let mut out = Vec::new();
    for (name, c) in formations(env) {
        let mut t = env.tally("lemma-unique", tag(&name));
        for n in nodes {
            let bad: Vec<&Subgroup> = nodes
                .iter()
                .filter(|m| !m.is_subgroup_of(&c.hypercentre_from(lat, &m.meet(n), false)))
                .collect();
            let Some(min) = bad.iter().map(|m| m.order()).min() else {
                t.record(false, true, String::new);
                continue;
            };
            for m in bad.iter().filter(|m| m.order() == min) {
                let mn = m.meet(n);
                let below = lat.maximal_below(m, triv);
                let holds = below.len() == 1 && {
                    let l = &below[0];
                    mn.is_subgroup_of(l)
                        && l.is_subgroup_of(&c.hypercentre_from(lat, &mn, false))
                        && !c.is_central(lat, &Section::new((*m).clone(), l.clone()))
                };
                t.record(true, holds, || {
                    format!("N {} M {}: {} maximal G-invariant subgroups", describe(n), describe(m), below.len())
                });
            }
        }
        out.push(t);
    }
    out
}

fn lemma_hyper(env: &Env) -> Vec<Tally> {
    let lat = &env.gc.lat;
    let mut out = Vec::new();
    for p in primes(env) {
        let mut t = env.tally("lemma-hyper", p_params(p));
        let z = env.gc.up(p).hypercentre(lat);
        for n in lat.nodes().iter().filter(|n| !n.is_trivial()) {
            let pn = sylow_subgroup(n, p);
            let mut cyc = cyclic_subgroups_of_order(&pn, p);
            if p == 2 && pn.order() >= 8 {
                match is_quaternion_free(&pn) {
                    Ok(true) => {}
                    Ok(false) => cyc.extend(cyclic_subgroups_of_order(&pn, 4)),
                    Err(e) => {
                        t.skip("quaternion-free test", &e);
                        continue;
                    }
                }
            }
            let left = n.is_subgroup_of(&z);
            let right = cyc.iter().all(|c| c.is_subgroup_of(&z));
            t.record(true, left == right, || {
                format!("N {}: N <= Z {left}, cyclic subgroups <= Z {right}", describe(n))
            });
        }
        out.push(t);
    }
    out
}

fn lemma_qian(env: &Env) -> Vec<Tally> {
    let lat = &env.gc.lat;
    let mins = lat.minimal_normals();
    let order = env.gc.order();
    let mut out = Vec::new();
    for p in primes(env) {
        let mut t = env.tally("lemma-Qian", p_params(p));
        for n in lat.nodes().iter().filter(|n| !n.is_trivial()) {
            let inside: Vec<&Subgroup> = mins.iter().filter(|m| m.is_subgroup_of(n)).collect();
            let join = inside.iter().fold(lat.nodes()[0].clone(), |a, m| a.join(m));
            let shape = join == *n
                && inside.iter().all(|m| !m.is_abelian() && m.order() as u64 % p == 0);
            if !shape {
                continue;
            }
            let applicable = centralizer(&env.gc.g, n).is_trivial();
            let no = n.order() as u64;
            let (a, b) = (arith::p_part(order / no, p), arith::p_part(no, p));
            t.record(applicable, a < b, || format!("N {}: |G/N|_p = {a}, |N|_p = {b}", describe(n)));
        }
        out.push(t);
    }
    out
}

fn lemma_p_group(env: &Env) -> Vec<Tally> {
    let lat = &env.gc.lat;
    let mut out = Vec::new();
    for p in primes(env) {
        let mut t = env.tally("lemma-p-group", p_params(p));
        for n in lat.minimal_normals().iter().filter(|n| n.order() as u64 % p == 0) {
            let s = sylow_subgroup(n, p);
            for d in arith::p_powers_between(p, p, s.order() as u64) {
                let hs = match subgroups_of_order(&s, d) {
                    Ok(h) => h,
                    Err(e) => {
                        t.skip("subgroups of the Sylow subgroup", &e);
                        continue;
                    }
                };
                for h in hs {
                    let applicable = satisfies_partial_l_pi(lat, &h).holds;
                    t.record(applicable, n.is_p_group(p), || {
                        format!("H {} in N {}", describe(&h), describe(n))
                    });
                }
            }
        }
        out.push(t);
    }
    out
}

fn lemma_less(env: &Env) -> Vec<Tally> {
    let lat = &env.gc.lat;
    let order = env.gc.order();
    primes(env)
        .into_iter()
        .map(|p| {
            let mut t = env.tally("lemma-less", p_params(p));
            let o = lat.o_p_prime_p(p).order() as u64;
            let (a, b) = (arith::p_part(order / o, p), arith::p_part(o, p));
            t.record(lat.classify_solubility(p).is_p_soluble, a < b, || {
                format!("|G/O_p'p|_p = {a}, |O_p'p|_p = {b}")
            });
            t
        })
        .collect()
}

fn is_cyclic_quotient(env: &Env, c: &Subgroup) -> crate::error::Result<bool> {
    let q = coset_action(&env.gc.g, c)?;
    let n = q.group().order() as u64;
    Ok((0..q.group().order()).any(|x| q.group().elem_order(x) == n))
}

fn chief_sections(env: &Env) -> Vec<Section> {
    let lat = &env.gc.lat;
    let mut seen = HashSet::new();
    lat.chief_series()
        .into_iter()
        .chain(lat.chief_series_alternate())
        .filter(|s| seen.insert((s.upper.set().clone(), s.lower.set().clone())))
        .collect()
}

fn lemma_cyclic(env: &Env) -> Vec<Tally> {
    let mut t = env.tally("lemma-cyclic", Params::default());
    for s in chief_sections(env) {
        let (Some(p), Some(r)) = (s.prime(), s.rank()) else { continue };
        if !s.is_elementary_abelian() || !arith::is_prime(r as u64) {
            continue;
        }
        let c = centralizer_of_section(&env.gc.g, &s.upper, &s.lower);
        let h = env.gc.order() / c.order() as u64;
        let applicable = h % p != 0;
        if !applicable {
            t.record(false, true, String::new);
            continue;
        }
        let res = is_cyclic_quotient(env, &c).and_then(|cyc| {
            let m = GModule::from_section(&env.gc.g, &s)?;
            Ok((cyc, m.endomorphism_dim() > 1))
        });
        match res {
            Ok((cyc, not_abs)) => t.record(true, cyc == not_abs, || {
                format!("section of order {}: G/C cyclic {cyc}, not absolutely irreducible {not_abs}", s.order())
            }),
            Err(e) => t.skip("module", &e),
        }
    }
    vec![t]
}

// ---------------------------------------------------------------- engine

fn engine_order(env: &Env) -> Vec<Tally> {
    let mut t = env.tally("engine-order", Params::default());
    let pg = env.gc.group().perm_group();
    if pg.order() <= 5000 {
        match pg.elements(budget().elements) {
            Ok(e) => {
                let n = e.len() as u128;
                t.record(true, n == pg.order() && n == env.gc.order() as u128, || {
                    format!("enumerated {n}, BSGS order {}", pg.order())
                })
            }
            Err(e) => t.skip("element enumeration", &e),
        }
    }
    vec![t]
}

fn engine_membership(env: &Env) -> Vec<Tally> {
    let mut t = env.tally("engine-membership", Params::default());
    let grp = env.gc.group();
    let pg = grp.perm_group();
    let mut rng = env.rng("membership");
    let n = pg.degree();
    for i in 0..100 {
        let x = if i % 2 == 0 {
            pg.random_element(&mut rng)
        } else {
            let mut v: Vec<usize> = (0..n).collect();
            v.shuffle(&mut rng);
            Permutation::from_images(v).expect("a shuffle is a bijection")
        };
        let brute = (0..grp.order()).any(|k| *grp.element(k) == x);
        match pg.contains(&x) {
            Ok(b) => t.record(true, b == brute, || format!("{x}: sifting {b}, scan {brute}")),
            Err(e) => t.skip("membership", &e),
        }
    }
    vec![t]
}

fn engine_coset_action(env: &Env) -> Vec<Tally> {
    let mut t = env.tally("engine-coset-action", Params::default());
    for n in env.gc.lat.nodes() {
        match coset_action(&env.gc.g, n) {
            Ok(q) => t.record(true, q.group().order() * n.order() == env.gc.g.order(), || {
                format!("N {}: image order {}", describe(n), q.group().order())
            }),
            Err(e) => t.skip("coset action", &e),
        }
    }
    vec![t]
}

fn engine_bsgs_determinism(env: &Env) -> Vec<Tally> {
    let mut t = env.tally("engine-bsgs-determinism", Params::default());
    let pg = env.gc.group().perm_group();
    let gens = pg.generators().to_vec();
    match (PermGroup::new(pg.degree(), gens.clone()), PermGroup::new(pg.degree(), gens)) {
        (Ok(a), Ok(b)) => t.record(true, a.base() == b.base() && a.order() == b.order() && a.order() == pg.order(), || {
            format!("bases {:?} / {:?}", a.base(), b.base())
        }),
        (Err(e), _) | (_, Err(e)) => t.skip("BSGS", &e),
    }
    vec![t]
}

// ---------------------------------------------------------------- subgroups

fn brute_conjugates(g: &Subgroup, h: &Subgroup) -> Vec<Subgroup> {
    let mut seen = HashSet::new();
    g.elements()
        .map(|x| h.conjugate(x))
        .filter(|c| seen.insert(c.set().clone()))
        .collect()
}

fn subgroup_closure_core(env: &Env) -> Vec<Tally> {
    let g = &env.gc.g;
    let mut t = env.tally("subgroup-closure-core", Params::default());
    for h in pool_sample(env, 50, "closure-core") {
        let conj = brute_conjugates(g, h);
        let cl = normal_closure(g, h);
        let co = normal_core(g, h);
        let brute_cl = conj.iter().fold(h.clone(), |a, c| a.join(c));
        let brute_co = conj.iter().fold(h.clone(), |a, c| a.meet(c));
        let normal = h.is_normal_in(g);
        let holds = cl == brute_cl
            && co == brute_co
            && co.is_subgroup_of(h)
            && h.is_subgroup_of(&cl)
            && cl.is_normal_in(g)
            && co.is_normal_in(g)
            && (normal == (co == *h && cl == *h));
        t.record(true, holds, || describe(h));
    }
    vec![t]
}

fn subgroup_orbit_stabilizer(env: &Env) -> Vec<Tally> {
    let g = &env.gc.g;
    let mut t = env.tally("subgroup-orbit-stabilizer", Params::default());
    for h in pool_sample(env, 50, "orbit-stabilizer") {
        let n = normalizer(g, h);
        match normalizer_brute(g, h) {
            Ok(nb) => {
                let k = conjugacy_class_size(g, h);
                t.record(true, n == nb && n.order() * k == g.order(), || {
                    format!("{}: |N| = {}, brute |N| = {}, class {k}", describe(h), n.order(), nb.order())
                })
            }
            Err(e) => t.skip("brute normalizer", &e),
        }
    }
    vec![t]
}

/// Every subgroup of `p`, by closing under single-element joins from the
/// trivial subgroup.
pub fn subgroups_by_bfs(pg: &Subgroup) -> Vec<Subgroup> {
    let triv = Subgroup::trivial(pg.group());
    let mut seen: HashSet<ElemSet> = HashSet::from([triv.set().clone()]);
    let mut queue = VecDeque::from([triv]);
    let mut out = Vec::new();
    while let Some(s) = queue.pop_front() {
        for x in pg.elements() {
            if !s.contains(x) {
                let t = s.join_element(x);
                if seen.insert(t.set().clone()) {
                    queue.push_back(t);
                }
            }
        }
        out.push(s);
    }
    out.sort();
    out
}

fn subgroup_count(env: &Env) -> Vec<Tally> {
    let mut out = Vec::new();
    for p in primes(env) {
        let pg = env.gc.sylow(p);
        if pg.order() > 64 {
            continue;
        }
        let mut t = env.tally("subgroup-count", p_params(p));
        let all = subgroups_by_bfs(&pg);
        for d in arith::p_powers_between(p, 1, pg.order() as u64) {
            let brute = all.iter().filter(|s| s.order() as u64 == d).count();
            match subgroups_of_order(&pg, d) {
                Ok(v) => t.record(true, v.len() == brute, || format!("d = {d}: {} vs {brute}", v.len())),
                Err(e) => t.skip("subgroups of order d", &e),
            }
        }
        out.push(t);
    }
    out
}

fn subgroup_frattini(env: &Env) -> Vec<Tally> {
    let mut out = Vec::new();
    for p in primes(env) {
        let pg = env.gc.sylow(p);
        if pg.order() > 128 {
            continue;
        }
        let mut t = env.tally("subgroup-frattini", p_params(p));
        match (frattini_p_group(&pg), frattini_by_maximal_subgroups(&pg)) {
            (Ok(a), Ok(b)) => t.record(true, a == b, || format!("{} vs {}", describe(&a), describe(&b))),
            (Err(e), _) | (_, Err(e)) => t.skip("Frattini subgroup", &e),
        }
        out.push(t);
    }
    out
}

/// Scans every pair `K ⊴ S ≤ P` with `|S : K| = 8` for a quaternion quotient.
pub fn quaternion_free_by_scan(pg: &Subgroup) -> bool {
    let grp = pg.group();
    let all = subgroups_by_bfs(pg);
    for s in &all {
        for k in all.iter().filter(|k| k.order() * 8 == s.order() && k.is_subgroup_of(s)) {
            if !k.is_normal_in(s) {
                continue;
            }
            let nonabelian = s
                .elements()
                .any(|x| s.elements().any(|y| !k.contains(grp.commutator(x, y))));
            let involutions = s
                .elements()
                .filter(|&x| !k.contains(x) && k.contains(grp.mul(x, x)))
                .count()
                / k.order();
            if nonabelian && involutions == 1 {
                return false;
            }
        }
    }
    true
}

fn subgroup_quaternion_free(env: &Env) -> Vec<Tally> {
    if env.gc.order() % 2 != 0 {
        return Vec::new();
    }
    let pg = env.gc.sylow(2);
    if pg.order() > 64 {
        return Vec::new();
    }
    let mut t = env.tally("subgroup-quaternion-free", p_params(2));
    match is_quaternion_free(&pg) {
        Ok(a) => {
            let b = quaternion_free_by_scan(&pg);
            t.record(true, a == b, || format!("library {a}, scan {b}"));
        }
        Err(e) => t.skip("quaternion-free", &e),
    }
    vec![t]
}

// ---------------------------------------------------------------- normal structure

fn normal_jordan_holder(env: &Env) -> Vec<Tally> {
    let lat = &env.gc.lat;
    let mut t = env.tally("normal-jordan-holder", Params::default());
    let mut a: Vec<u64> = lat.chief_series().iter().map(|s| s.order()).collect();
    let mut b: Vec<u64> = lat.chief_series_alternate().iter().map(|s| s.order()).collect();
    a.sort_unstable();
    b.sort_unstable();
    t.record(true, a == b, || format!("{a:?} vs {b:?}"));
    vec![t]
}

fn normal_second_series(env: &Env) -> Vec<Tally> {
    let lat = &env.gc.lat;
    let mut t = env.tally("normal-p-soluble-second-series", Params::default());
    let alt = lat.chief_series_alternate();
    for p in primes(env) {
        let a = lat.classify_solubility(p).is_p_soluble;
        let b = alt.iter().all(|s| s.is_p_group(p) || s.order() % p != 0);
        t.record(true, a == b, || format!("p = {p}: {a} vs {b}"));
    }
    vec![t]
}

fn normal_p_rank(env: &Env) -> Vec<Tally> {
    let lat = &env.gc.lat;
    let mut t = env.tally("normal-p-rank", Params::default());
    let ps: BTreeSet<u64> = primes(env).into_iter().chain([2, 3, 5, 7]).collect();
    for p in ps {
        let prof = lat.classify_solubility(p);
        let divides = env.gc.order() % p == 0;
        t.record(prof.is_p_soluble, (prof.p_rank == 0) == !divides, || {
            format!("p = {p}: rank {}, p divides |G| {divides}", prof.p_rank)
        });
    }
    vec![t]
}

// ---------------------------------------------------------------- modules

fn module_spin(env: &Env) -> Vec<Tally> {
    let lat = &env.gc.lat;
    let nodes = lat.nodes();
    let mut pairs = Vec::new();
    for (i, k) in nodes.iter().enumerate() {
        for l in &nodes[i + 1..] {
            if !k.is_subgroup_of(l) {
                continue;
            }
            let s = Section::new(l.clone(), k.clone());
            if s.order() <= 625 && s.is_elementary_abelian() {
                pairs.push(s);
            }
        }
    }
    pairs.shuffle(&mut env.rng("module-spin"));
    pairs.truncate(30);
    let mut t = env.tally("module-spin", Params::default());
    let mut te = env.tally("module-endomorphism-dim", Params::default());
    for s in pairs {
        let m = match GModule::from_section(&env.gc.g, &s) {
            Ok(m) => m,
            Err(e) => {
                t.skip("module", &e);
                continue;
            }
        };
        let between = nodes
            .iter()
            .any(|x| s.lower.is_subgroup_of(x) && x.is_subgroup_of(&s.upper) && *x != s.lower && *x != s.upper);
        match m.is_irreducible() {
            Ok(irr) => {
                let brute = irreducible_by_closure(&m);
                t.record(true, irr == !between && irr == brute, || {
                    format!(
                        "section of order {}: spin {irr}, lattice {}, subset closure {brute}",
                        s.order(),
                        !between
                    )
                });
                let e = m.endomorphism_dim();
                te.record(irr, e >= 1 && m.dim() % e == 0, || {
                    format!("dimension {}, endomorphism dimension {e}", m.dim())
                });
            }
            Err(e) => t.skip("irreducibility", &e),
        }
    }
    vec![t, te]
}

/// Irreducibility by closing `{0, v}` under vector addition and the action,
/// as sets of vectors, for every nonzero `v`.
pub fn irreducible_by_closure(m: &GModule) -> bool {
    let p = m.p();
    let d = m.dim();
    let total = (p as usize).pow(d as u32);
    let decode = |mut x: usize| -> Vec<u32> {
        (0..d)
            .map(|_| {
                let c = (x % p as usize) as u32;
                x /= p as usize;
                c
            })
            .collect()
    };
    let encode = |v: &[u32]| v.iter().rev().fold(0usize, |a, &c| a * p as usize + c as usize);
    (1..total).all(|v| {
        let mut inside = vec![false; total];
        inside[0] = true;
        inside[v] = true;
        let mut members = vec![0, v];
        let mut queue = vec![v];
        while let Some(x) = queue.pop() {
            let xv = decode(x);
            let mut new: Vec<usize> = m.matrices().iter().map(|a| encode(&a.apply(&xv))).collect();
            for &y in &members {
                let yv = decode(y);
                let sum: Vec<u32> = xv.iter().zip(&yv).map(|(a, b)| (a + b) % p).collect();
                new.push(encode(&sum));
            }
            for z in new {
                if !inside[z] {
                    inside[z] = true;
                    members.push(z);
                    queue.push(z);
                }
            }
        }
        members.len() == total
    })
}

/// For G-isomorphic minimal normal `X`, `Y` with absolutely irreducible
/// action, `XY` contains exactly `p + 1` minimal normal subgroups.
fn module_minimal_submodule_count(env: &Env) -> Vec<Tally> {
    let lat = &env.gc.lat;
    let triv = &lat.nodes()[0];
    let mins: Vec<Subgroup> = lat
        .minimal_normals()
        .into_iter()
        .filter(|m| Section::new(m.clone(), triv.clone()).is_elementary_abelian())
        .collect();
    let mut t = env.tally("module-minimal-submodule-count", Params::default());
    for (i, x) in mins.iter().enumerate() {
        for y in &mins[i + 1..] {
            let res = g_isomorphic(env, x, y).and_then(|iso| {
                if !iso {
                    return Ok(None);
                }
                Ok(Some(section_module(env, x, triv)?.is_absolutely_irreducible()?))
            });
            match res {
                Ok(Some(abs)) => {
                    let xy = x.join(y);
                    let count = mins.iter().filter(|m| m.is_subgroup_of(&xy)).count() as u64;
                    let p = Section::new(x.clone(), triv.clone()).prime().unwrap_or(0);
                    t.record(abs, count == p + 1, || {
                        format!("X {} Y {}: {count} minimal normal subgroups", describe(x), describe(y))
                    });
                }
                Ok(None) => {}
                Err(e) => t.skip("module isomorphism", &e),
            }
        }
    }
    vec![t]
}

fn module_iso_equivalence(env: &Env) -> Vec<Tally> {
    let triv = &env.gc.lat.nodes()[0];
    let mut mins: Vec<Subgroup> = env
        .gc
        .lat
        .minimal_normals()
        .into_iter()
        .filter(|m| Section::new(m.clone(), triv.clone()).is_elementary_abelian())
        .collect();
    mins.shuffle(&mut env.rng("module-iso"));
    mins.truncate(6);
    let mut t = env.tally("module-iso-equivalence", Params::default());
    let mods: Vec<GModule> = match mins.iter().map(|m| section_module(env, m, triv)).collect() {
        Ok(v) => v,
        Err(e) => {
            t.skip("module", &e);
            return vec![t];
        }
    };
    let n = mods.len();
    let mut iso = vec![vec![false; n]; n];
    for i in 0..n {
        for j in 0..n {
            match modules_isomorphic(&mods[i], &mods[j]) {
                Ok(b) => iso[i][j] = b,
                Err(e) => {
                    t.skip("isomorphism", &e);
                    return vec![t];
                }
            }
        }
    }
    for i in 0..n {
        t.record(true, iso[i][i], || format!("module {i} not isomorphic to itself"));
        for j in 0..n {
            t.record(true, iso[i][j] == iso[j][i], || format!("asymmetric at ({i}, {j})"));
            for k in 0..n {
                t.record(iso[i][j] && iso[j][k], iso[i][k], || format!("not transitive at ({i}, {j}, {k})"));
            }
        }
    }
    vec![t]
}

// ---------------------------------------------------------------- embedding

fn embedding_pi_implies_l_pi(env: &Env) -> Vec<Tally> {
    let lat = &env.gc.lat;
    let g = &env.gc.g;
    let mut t = env.tally("embedding-pi-implies-l-pi", Params::default());
    for h in &env.pool {
        let pi = satisfies_partial_pi(lat, h).holds;
        let lv = satisfies_partial_l_pi(lat, h);
        t.record(pi, lv.holds, || {
            let w = lv.witnesses.iter().find(|w| !w.passes);
            match w {
                Some(w) => format!(
                    "{}: chief factor {}/{} gives index {} (revalidated {})",
                    describe(h),
                    w.upper.order(),
                    w.lower.order(),
                    w.index,
                    w.revalidate(g, h)
                ),
                None => describe(h),
            }
        });
    }
    vec![t]
}

fn embedding_sylow_conjugate(env: &Env) -> Vec<Tally> {
    let gc = env.gc;
    let mut rng = env.rng("sylow-conjugate");
    let mut out = Vec::new();
    for p in primes(env) {
        let pg = gc.sylow(p);
        let mut t = env.tally("embedding-sylow-conjugate", p_params(p));
        let conj: Vec<Subgroup> = (0..3)
            .map(|_| pg.conjugate(random_element(env, &mut rng, &gc.g)))
            .collect();
        for d in arith::p_powers_between(p, p, pg.order() as u64) {
            let base = match gc.hypothesis(&pg, d) {
                Ok(h) => h.holds,
                Err(e) => {
                    t.skip("hypothesis", &e);
                    continue;
                }
            };
            for c in &conj {
                match gc.hypothesis(c, d) {
                    Ok(h) => t.record(true, h.holds == base, || format!("d = {d}: {base} vs {}", h.holds)),
                    Err(e) => t.skip("hypothesis", &e),
                }
            }
        }
        out.push(t);
    }
    out
}

// ---------------------------------------------------------------- formations

fn formation_sanity(env: &Env) -> Vec<Tally> {
    let lat = &env.gc.lat;
    let g = &env.gc.g;
    let mut t = env.tally("formation-sanity", Params::default());
    let u = Centrality::new(FormationId::U, env.gc.convention);
    let ss = lat.classify_solubility(2).is_supersoluble;
    t.record(true, ss == (u.hypercentre(lat) == *g), || format!("supersoluble {ss}"));
    for p in primes(env) {
        let pss = lat.classify_solubility(p).is_p_supersoluble;
        t.record(true, pss == (env.gc.up(p).hypercentre(lat) == *g), || {
            format!("p = {p}: p-supersoluble {pss}")
        });
    }
    vec![t]
}

fn formation_ascent_order(env: &Env) -> Vec<Tally> {
    let lat = &env.gc.lat;
    let triv = &lat.nodes()[0];
    let mut t = env.tally("formation-ascent-order", Params::default());
    for (name, c) in formations(env) {
        let a = c.hypercentre_from(lat, triv, false);
        let b = c.hypercentre_from(lat, triv, true);
        t.record(true, a == b, || format!("{name}: {} vs {}", describe(&a), describe(&b)));
    }
    vec![t]
}

fn formation_two_formulations(env: &Env) -> Vec<Tally> {
    let lat = &env.gc.lat;
    let mut t = env.tally("formation-two-formulations", Params::default());
    for (name, c) in formations(env) {
        for e in lat.nodes() {
            let a = c.contained_in_hypercentre(lat, e);
            let b = c.chief_factors_below_central(lat, e);
            t.record(true, a == b, || format!("{name}, E {}: {a} vs {b}", describe(e)));
        }
    }
    vec![t]
}

fn formation_semidirect(env: &Env) -> Vec<Tally> {
    let lat = &env.gc.lat;
    let mut t = env.tally("formation-semidirect", Params::default());
    for s in chief_sections(env) {
        let Some(p) = s.prime() else { continue };
        if !s.is_elementary_abelian() {
            continue;
        }
        for f in [FormationId::U, FormationId::Up(p)] {
            let c = Centrality::new(f, env.gc.convention);
            match is_central_by_semidirect(&env.gc.g, &s, f) {
                Ok(b) => {
                    let a = c.is_central(lat, &s);
                    t.record(true, a == b, || format!("{f:?}, factor of order {}: {a} vs {b}", s.order()));
                }
                Err(e) => t.skip("semidirect product", &e),
            }
        }
    }
    vec![t]
}

// ---------------------------------------------------------------- harness

/// Built-in entries run their self-test; file entries named after a built-in
/// id must also agree with it in order.
fn harness_self_test(env: &Env) -> Vec<Tally> {
    let mut t = env.tally("harness-self-test", Params::default());
    let id = env.gc.name.as_str();
    if env.builtin || corpus::DEFAULT_CORPUS.contains(&id) {
        let r = corpus::self_test(id);
        t.record(true, r.is_ok(), || format!("{r:?}"));
        if !env.builtin {
            let expected = corpus::expected_order(id);
            let order = env.gc.order() as u128;
            t.record(expected.is_some(), expected == Some(order), || {
                format!("file group has order {order}, catalogue entry {expected:?}")
            });
        }
    }
    vec![t]
}
