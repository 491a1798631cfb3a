//! Acceptance criteria, one line each. Exits nonzero when any criterion fails.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use gtverify::corpus;
use gtverify::embedding::{satisfies_partial_l_pi, satisfies_partial_pi};
use gtverify::formation::PPrimeConvention;
use gtverify::gmodule::GModule;
use gtverify::normal::Section;
use gtverify::perm::Permutation;
use gtverify::report::{Params, VerdictReport};
use gtverify::subgroup::{normal_closure, normal_core, normalizer, subgroups_of_order, Subgroup};
use gtverify::suite::{builtin_corpus, check_names, run_property_suite, run_theorem_sweep};
use gtverify::table::FiniteGroup;
use gtverify::theorems::{describe, theorem_b_clauses, theorem_c, GroupContext, TheoremId};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn c1_sym4() -> Outcome {
    let ctx = GroupContext::builtin("sym4").map_err(err)?;
    let subs = ctx.p_subgroups_of_normal(&ctx.g, 2, 4).map_err(err)?;
    let all = common::closure(4, ctx.group().perm_group().generators());
    let brute = common::all_subgroups(4, &all).into_iter().filter(|s| s.len() == 4).count();
    ensure(subs.len() == 7 && brute == 7, || format!("{} order-4 subgroups, brute force {brute}", subs.len()))?;
    for h in &subs {
        let v = satisfies_partial_l_pi(&ctx.lat, h);
        ensure(v.holds && v.revalidate(&ctx.g, h), || format!("{} fails partial L-Pi", describe(h)))?;
    }
    let c4 = Subgroup::from_perms(ctx.group(), &[Permutation::parse(4, "(1,2,3,4)").map_err(err)?]).map_err(err)?;
    let v = satisfies_partial_pi(&ctx.lat, &c4);
    ensure(!v.holds && !v.witnesses.is_empty(), || "<(1,2,3,4)> satisfies partial Pi".into())?;
    ensure(v.revalidate(&ctx.g, &c4), || "witness does not revalidate".into())?;
    // Every stored failing check, recomputed by brute force.
    for w in &v.witnesses {
        let x = common::perms_of(&w.x);
        let index = all.len() / common::normalizer(&all, &x).len();
        let primes: Vec<u64> = w.primes.iter().copied().collect();
        ensure(index as u64 == w.index && !common::is_pi_number(index as u64, &primes), || {
            format!("witness index {} vs brute {index}", w.index)
        })?;
    }
    Ok(format!("7 subgroups of order 4 all partial L-Pi; <(1,2,3,4)> fails partial Pi with {} witnesses", v.witnesses.len()))
}

fn c2_example() -> Outcome {
    let ctx = GroupContext::builtin("example_1_7").map_err(err)?;
    let pg = ctx.sylow(5);
    let subs = subgroups_of_order(&pg, 25).map_err(err)?;
    let non_normal = subs.iter().filter(|h| !ctx.lat.is_normal(h)).count();
    let pi = subs.iter().filter(|h| satisfies_partial_pi(&ctx.lat, h).holds).count();
    let l_pi = subs.iter().filter(|h| satisfies_partial_l_pi(&ctx.lat, h).holds).count();
    let prof = ctx.lat.classify_solubility(5);
    let detail = format!(
        "{} subgroups of order 25 ({non_normal} not normal): {pi} partial Pi, {l_pi} partial L-Pi; \
         5-soluble {}, 5-supersoluble {}, 5-rank {}",
        subs.len(),
        prof.is_p_soluble,
        prof.is_p_supersoluble,
        prof.p_rank
    );
    ensure(subs.len() >= 806, || format!("too few subgroups: {detail}"))?;
    ensure(prof.is_p_soluble && !prof.is_p_supersoluble && prof.p_rank == 2, || detail.clone())?;
    ensure(pi == subs.len(), || format!("not all partial Pi: {detail}"))?;
    ensure(l_pi == subs.len(), || format!("partial Pi does not give partial L-Pi here: {detail}"))?;
    Ok(detail)
}

fn type_of(r: &VerdictReport) -> Option<String> {
    r.params.extra.clone()
}

fn c3_theorem_c() -> Outcome {
    let mut lines = Vec::new();
    for (id, p, want) in [("sym4", 2, 3u8), ("a4", 2, 2), ("c3xc3_inv", 3, 1)] {
        let ctx = GroupContext::builtin(id).map_err(err)?;
        let r = theorem_c(&ctx, p);
        let t = format!("type={want}");
        ensure(r.hypothesis_holds == Some(true) && r.conclusion_holds == Some(true), || r.summary_line())?;
        ensure(type_of(&r).as_deref() == Some(t.as_str()), || format!("{id}: {:?}, want {t}", type_of(&r)))?;
        lines.push(format!("{id} {t}"));
    }
    for id in ["affine_sl23", "affine_gl23"] {
        let ctx = GroupContext::builtin(id).map_err(err)?;
        let r = theorem_c(&ctx, 3);
        match r.hypothesis_holds {
            Some(true) => {
                ensure(type_of(&r).as_deref() == Some("type=4") && !r.is_counterexample(), || r.summary_line())?;
                lines.push(format!("{id} type=4"));
            }
            Some(false) => {
                ensure(r.vacuous, || r.summary_line())?;
                lines.push(format!("{id} vacuous"));
            }
            None => return Err(format!("{id}: hypothesis not evaluated")),
        }
    }
    Ok(lines.join(", "))
}

fn c4_theorem_b() -> Outcome {
    let ctx = GroupContext::builtin("example_1_7").map_err(err)?;
    let hyp = ctx.hypothesis(&ctx.sylow(5), 25).map_err(err)?;
    let mut r = VerdictReport::new(&ctx.name, "theorem-B", Params::default());
    theorem_b_clauses(&ctx, &mut r, 5, 25);
    let phi = ctx.lat.o_p_prime_phi(5).map_err(err)?;
    ensure(phi.is_trivial(), || format!("|O_p'Phi| = {}", phi.order()))?;
    for want in ["d >= p^2 |P cap O_p'Phi|", "homogeneous", "dimension divides log_p"] {
        ensure(r.clauses.iter().any(|c| c.name == want), || format!("clause {want} not evaluated"))?;
    }
    for c in &r.clauses {
        ensure(c.holds == Some(true), || format!("clause {} is {:?}: {}", c.name, c.holds, c.detail))?;
    }
    let names: Vec<String> = r.clauses.iter().map(|c| format!("{} [{}]", c.name, c.detail)).collect();
    Ok(format!(
        "all {} clauses hold: {}; hypothesis (every order-25 subgroup partial L-Pi) is {} ({} of {} fail)",
        r.clauses.len(),
        names.join("; "),
        hyp.holds,
        hyp.failures.len(),
        hyp.checked
    ))
}

fn c5_sweep() -> Outcome {
    let entries = builtin_corpus().map_err(err)?;
    ensure(entries.len() >= 25, || format!("{} corpus groups", entries.len()))?;
    let run = |threads: usize| -> Result<(Duration, gtverify::suite::SuiteOutcome), String> {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build().map_err(err)?;
        let t = Instant::now();
        let out = pool
            .install(|| run_theorem_sweep(&entries, &TheoremId::ALL, PPrimeConvention::default(), None, None))
            .map_err(err)?;
        Ok((t.elapsed(), out))
    };
    let (t1, out) = run(1)?;
    let (t4, out4) = run(4)?;
    print!("{}", out.stats_table());
    for w in &out.warnings {
        println!("    warning: {w}");
    }
    let ce = out.counterexamples();
    for r in &ce {
        println!("    {}", r.summary_line());
    }
    ensure(ce.is_empty(), || format!("{} counterexamples", ce.len()))?;
    let a: Vec<_> = out.reports.iter().map(|r| r.without_timing()).collect();
    let b: Vec<_> = out4.reports.iter().map(|r| r.without_timing()).collect();
    ensure(a == b, || "single-threaded and parallel reports differ".into())?;
    ensure(t1 < Duration::from_secs(600) && t4 < Duration::from_secs(180), || format!("{t1:?} / {t4:?}"))?;
    Ok(format!(
        "{} reports, 0 counterexamples, {} warnings; {:.1}s at 1 thread, {:.1}s at 4",
        out.reports.len(),
        out.warnings.len(),
        t1.as_secs_f64(),
        t4.as_secs_f64()
    ))
}

fn c6_lemmas() -> Outcome {
    let entries = builtin_corpus().map_err(err)?;
    let lemmas: Vec<String> = check_names().into_iter().filter(|n| n.starts_with("lemma-")).map(String::from).collect();
    ensure(lemmas.len() == 12, || format!("{} lemma checks", lemmas.len()))?;
    let a = run_property_suite(&entries, Some(&lemmas), 42, PPrimeConvention::default()).map_err(err)?;
    let b = run_property_suite(&entries, Some(&lemmas), 42, PPrimeConvention::default()).map_err(err)?;
    let ce = a.counterexamples();
    ensure(ce.is_empty(), || format!("counterexample: {}", ce[0].summary_line()))?;
    for l in &lemmas {
        let s = &a.stats[l];
        ensure(s.applicable > 0 && s.skipped_clauses == 0, || format!("{l}: {} applicable, {} skipped", s.applicable, s.skipped_clauses))?;
    }
    ensure(
        a.reports.iter().any(|r| r.group == "sym5" && r.check == "lemma-Qian" && r.hypothesis_holds == Some(true)),
        || "lemma-Qian not applicable on sym5".into(),
    )?;
    let ra: Vec<_> = a.reports.iter().map(|r| r.without_timing()).collect();
    let rb: Vec<_> = b.reports.iter().map(|r| r.without_timing()).collect();
    ensure(ra == rb, || "reports differ between runs".into())?;
    let counts: Vec<String> = lemmas.iter().map(|l| format!("{}={}", &l[6..], a.stats[l].applicable)).collect();
    Ok(format!("applicable instances {}; identical across two runs", counts.join(" ")))
}

fn c7_modules() -> Outcome {
    let mut sections = 0;
    for id in corpus::DEFAULT_CORPUS {
        let ctx = GroupContext::builtin(id).map_err(err)?;
        let nodes = ctx.lat.nodes();
        for l in nodes {
            for k in nodes {
                if k.order() >= l.order() || !k.is_subgroup_of(l) {
                    continue;
                }
                let s = Section::new(l.clone(), k.clone());
                if s.order() > 625 || !s.is_elementary_abelian() {
                    continue;
                }
                let m = GModule::from_section(&ctx.g, &s).map_err(err)?;
                let spin = m.is_irreducible().map_err(err)?;
                let brute = common::irreducible_brute(m.matrices(), m.p(), m.dim());
                ensure(spin == brute, || format!("{id}: section {}/{}: spin {spin}, brute {brute}", l.order(), k.order()))?;
                sections += 1;
            }
        }
    }
    let module_of = |id: &str, order: usize| -> Result<(GModule, usize), String> {
        let ctx = GroupContext::builtin(id).map_err(err)?;
        let mins: Vec<Subgroup> = ctx.lat.minimal_normals().into_iter().filter(|n| n.order() == order).collect();
        let n = mins.first().ok_or_else(|| format!("{id}: no minimal normal of order {order}"))?;
        let m = GModule::from_section(&ctx.g, &Section::new(n.clone(), Subgroup::trivial(ctx.group()))).map_err(err)?;
        Ok((m, mins.len()))
    };
    let (u, _) = module_of("example_1_7", 25)?;
    ensure(u.endomorphism_dim() == 2 && !u.is_absolutely_irreducible().map_err(err)?, || {
        format!("example_1_7 module: endomorphism dimension {}", u.endomorphism_dim())
    })?;
    let (v, _) = module_of("sym4", 4)?;
    ensure(v.endomorphism_dim() == 1 && v.is_absolutely_irreducible().map_err(err)?, || {
        format!("sym4 V4 module: endomorphism dimension {}", v.endomorphism_dim())
    })?;
    let (_, count) = module_of("sym4_doubled", 4)?;
    ensure(count == 3, || format!("sym4_doubled has {count} minimal normals of order 4"))?;
    Ok(format!("{sections} sections agree; endomorphism dimensions 2 and 1; 3 minimal normals in V4 x V4"))
}

fn c8_engine() -> Outcome {
    let mut groups = 0;
    for id in corpus::DEFAULT_CORPUS {
        let pg = corpus::build(id).map_err(err)?;
        if pg.order() > 2000 {
            continue;
        }
        groups += 1;
        let n = pg.degree();
        let ggens = pg.generators().to_vec();
        let all = common::closure(n, &ggens);
        ensure(all.len() as u128 == pg.order(), || format!("{id}: order {} vs brute {}", pg.order(), all.len()))?;
        let mut rng = ChaCha8Rng::seed_from_u64(42 ^ groups);
        let mut points: Vec<usize> = (0..n).collect();
        for i in 0..100 {
            let x = if i % 2 == 0 {
                pg.random_element(&mut rng)
            } else {
                points.shuffle(&mut rng);
                Permutation::from_images(points.clone()).map_err(err)?
            };
            ensure(pg.contains(&x).map_err(err)? == all.contains(&x), || format!("{id}: membership of {x:?}"))?;
        }
        let t = FiniteGroup::new(pg.clone()).map_err(err)?;
        let g = Subgroup::whole(&t);
        for _ in 0..100 {
            let k = rng.gen_range(1..=2);
            let hg: Vec<Permutation> = (0..k).map(|_| pg.random_element(&mut rng)).collect();
            let h = Subgroup::from_perms(&t, &hg).map_err(err)?;
            let hs = common::closure(n, &hg);
            ensure(common::perms_of(&h) == hs, || format!("{id}: closure of {hg:?}"))?;
            let nz = common::normalizer_by_generators(&all, &hs, &hg);
            ensure(common::perms_of(&normalizer(&g, &h)) == nz, || format!("{id}: normalizer of {}", describe(&h)))?;
            let core = common::core_by_generators(&ggens, &hs);
            ensure(common::perms_of(&normal_core(&g, &h)) == core, || format!("{id}: core of {}", describe(&h)))?;
            let nc = common::normal_closure_by_generators(n, &ggens, &hg);
            ensure(common::perms_of(&normal_closure(&g, &h)) == nc, || format!("{id}: normal closure of {}", describe(&h)))?;
        }
    }
    Ok(format!("{groups} groups: order, 100 membership and 100 subgroup queries each"))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome, Option<Duration>); 8] = [
        ("Sym(4) order-4 subgroups", c1_sym4, Some(Duration::from_secs(1))),
        ("order-1875 group, order-25 subgroups", c2_example, Some(Duration::from_secs(120))),
        ("Theorem C classification", c3_theorem_c, Some(Duration::from_secs(60))),
        ("Theorem B clauses on example_1_7, d = 25", c4_theorem_b, None),
        ("zero-counterexample theorem sweep", c5_sweep, None),
        ("lemma property suite", c6_lemmas, None),
        ("module-theory oracles", c7_modules, None),
        ("engine oracles", c8_engine, None),
    ];
    let mut failed = 0;
    for (i, (name, f, limit)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let mut res = f();
        let dt = t.elapsed();
        if let (Ok(_), Some(l)) = (&res, limit) {
            if dt > *l {
                res = Err(format!("took {dt:?}, limit {l:?}"));
            }
        }
        let (status, detail) = match &res {
            Ok(d) => ("PASS", d),
            Err(d) => {
                failed += 1;
                ("FAIL", d)
            }
        };
        println!("criterion {} {status} ({:.2}s) {name}: {detail}", i + 1, dt.as_secs_f64());
    }
    println!("{} of 8 criteria pass", 8 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
