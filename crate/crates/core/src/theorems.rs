//! Theorem checks: hypothesis evaluation, conclusion clauses and the
//! parameter windows swept for each theorem.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::arith;
use crate::bsgs::PermGroup;
use crate::config::budget;
use crate::corpus;
use crate::embedding::{hypothesis_minimal_cyclic, HypothesisCheck, Property};
use crate::embedding::satisfies_partial_l_pi;
use crate::error::{Error, Result};
use crate::formation::{Centrality, FormationId, PPrimeConvention};
use crate::gmodule::{homogeneity, ModuleDecomposition};
use crate::iso::isomorphic;
use crate::normal::NormalLattice;
use crate::quotient::coset_action;
use crate::report::{Params, VerdictReport};
use crate::subgroup::{conjugates, subgroups_of_order, sylow_subgroup, Subgroup};
use crate::table::{ElemSet, FiniteGroup};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TheoremId {
    A,
    B,
    C,
    Small,
    PSoluble,
    Dividing,
    Furthermore,
    Ele,
    Leq,
}

impl TheoremId {
    pub const ALL: [TheoremId; 9] = [
        TheoremId::A,
        TheoremId::Small,
        TheoremId::B,
        TheoremId::C,
        TheoremId::PSoluble,
        TheoremId::Dividing,
        TheoremId::Furthermore,
        TheoremId::Ele,
        TheoremId::Leq,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            TheoremId::A => "A",
            TheoremId::B => "B",
            TheoremId::C => "C",
            TheoremId::Small => "small",
            TheoremId::PSoluble => "p-soluble",
            TheoremId::Dividing => "dividing",
            TheoremId::Furthermore => "furthermore",
            TheoremId::Ele => "ele",
            TheoremId::Leq => "leq",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TheoremId {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        TheoremId::ALL
            .iter()
            .copied()
            .find(|t| t.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown theorem {s:?}"))
    }
}

/// Short text form of a subgroup for reports.
pub fn describe(h: &Subgroup) -> String {
    if h.is_trivial() {
        return "order 1".to_string();
    }
    format!("order {}: <{}>", h.order(), h.describe().join(", "))
}

/// Everything computed once per group and shared by all checks on it.
pub struct GroupContext {
    pub name: String,
    pub g: Subgroup,
    pub lat: NormalLattice,
    pub convention: PPrimeConvention,
    sylows: RefCell<BTreeMap<u64, Subgroup>>,
    hyp: RefCell<HashMap<(ElemSet, u64), Result<HypothesisCheck>>>,
    affine_reference: RefCell<Option<Vec<Subgroup>>>,
}

impl GroupContext {
    pub fn new(name: &str, pg: PermGroup) -> Result<GroupContext> {
        let t = FiniteGroup::new(pg)?;
        let g = Subgroup::whole(&t);
        let lat = NormalLattice::new(&g)?;
        Ok(GroupContext {
            name: name.to_string(),
            g,
            lat,
            convention: PPrimeConvention::default(),
            sylows: RefCell::new(BTreeMap::new()),
            hyp: RefCell::new(HashMap::new()),
            affine_reference: RefCell::new(None),
        })
    }

    pub fn builtin(id: &str) -> Result<GroupContext> {
        GroupContext::new(id, corpus::build(id)?)
    }

    pub fn with_convention(mut self, c: PPrimeConvention) -> GroupContext {
        self.convention = c;
        self
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        self.g.group()
    }

    pub fn order(&self) -> u64 {
        self.g.order() as u64
    }

    pub fn primes(&self) -> Vec<u64> {
        arith::prime_divisors(self.order()).into_iter().collect()
    }

    pub fn sylow(&self, p: u64) -> Subgroup {
        self.sylows
            .borrow_mut()
            .entry(p)
            .or_insert_with(|| sylow_subgroup(&self.g, p))
            .clone()
    }

    pub fn up(&self, p: u64) -> Centrality {
        Centrality::new(FormationId::Up(p), self.convention)
    }

    /// Every subgroup of `ambient` (a `p`-group) of order `d` satisfies
    /// partial 𝓛-Π; for `d = 2` and a non-quaternion-free ambient the cyclic
    /// subgroups of order 4 are included.
    pub fn hypothesis(&self, ambient: &Subgroup, d: u64) -> Result<HypothesisCheck> {
        let key = (ambient.set().clone(), d);
        if let Some(r) = self.hyp.borrow().get(&key) {
            return r.clone();
        }
        let r = crate::embedding::hypothesis_order_d(&self.lat, ambient, d, Property::PartialLPi);
        self.hyp.borrow_mut().insert(key, r.clone());
        r
    }

    /// Every `p`-subgroup of order `d` of the normal subgroup `n`.
    pub fn p_subgroups_of_normal(&self, n: &Subgroup, p: u64, d: u64) -> Result<Vec<Subgroup>> {
        let q = sylow_subgroup(n, p);
        let mut seen: HashSet<ElemSet> = HashSet::new();
        let mut out = Vec::new();
        for conj in conjugates(&self.g, &q) {
            for h in subgroups_of_order(&conj, d)? {
                if seen.insert(h.set().clone()) {
                    out.push(h);
                }
            }
        }
        out.sort();
        Ok(out)
    }

    /// The two affine catalogue groups, built once.
    fn affine_reference(&self) -> Result<Vec<Subgroup>> {
        if let Some(v) = self.affine_reference.borrow().as_ref() {
            return Ok(v.clone());
        }
        let mut v = Vec::new();
        for id in ["affine_sl23", "affine_gl23"] {
            v.push(Subgroup::whole(&FiniteGroup::new(corpus::build(id)?)?));
        }
        *self.affine_reference.borrow_mut() = Some(v.clone());
        Ok(v)
    }
}

fn params(p: u64, d: Option<u64>, e: Option<&Subgroup>) -> Params {
    Params {
        p: Some(p),
        d,
        e: e.map(describe),
        extra: None,
    }
}

fn record_hypothesis(r: &mut VerdictReport, h: Result<HypothesisCheck>) -> bool {
    match h {
        Ok(h) => {
            r.set_hypothesis(h.holds);
            r.clause_detail_hypothesis(&h);
            h.holds
        }
        Err(e) => {
            r.skip("hypothesis", &e);
            false
        }
    }
}

impl VerdictReport {
    fn clause_detail_hypothesis(&mut self, h: &HypothesisCheck) {
        self.notes.push(format!("hypothesis checked on {} subgroups", h.checked));
        for f in h.failures.iter().take(3) {
            self.witnesses.push(format!("fails partial L-Pi: {}", describe(f)));
        }
    }
}

/// `|G|_p` style helpers.
fn p_part(n: usize, p: u64) -> u64 {
    arith::p_part(n as u64, p)
}

fn log_p(n: u64, p: u64) -> u32 {
    arith::log_p(n, p).expect("p-power")
}

/// Common conclusion block shared by the two theorems on `O_{p′,p}`:
/// `d ≥ p²|P ∩ O_{p′,Φ}|` and homogeneity of `O_{p′,p}/O_{p′,Φ}`.
fn radical_clauses(ctx: &GroupContext, r: &mut VerdictReport, p: u64, d: u64, need_k_gt_1: bool) {
    let lat = &ctx.lat;
    let opp = lat.o_p_prime_p(p);
    let phi = match lat.o_p_prime_phi(p) {
        Ok(x) => x,
        Err(e) => {
            r.skip("d >= p^2 |P cap O_p'Phi|", &e);
            r.skip("homogeneous", &e);
            return;
        }
    };
    let f = p_part(phi.order(), p);
    r.clause(
        "d >= p^2 |P cap O_p'Phi|",
        d >= p * p * f,
        format!("|P cap O_p'Phi| = {f}"),
    );
    match homogeneity(lat, &opp, &phi) {
        Ok(m) => module_clauses(r, &m, d / f, p, need_k_gt_1),
        Err(e) => r.skip("homogeneous", &e),
    }
}

fn module_clauses(r: &mut VerdictReport, m: &ModuleDecomposition, target: u64, p: u64, need_k_gt_1: bool) {
    r.clause(
        "homogeneous",
        m.semisimple && m.homogeneous,
        format!(
            "{} constituents, semisimple {}, dimension {}",
            m.constituents.len(),
            m.semisimple,
            m.constituent_dimension
        ),
    );
    r.clause(
        "not absolutely irreducible",
        m.absolutely_irreducible.iter().all(|a| !a),
        String::new(),
    );
    let k = m.constituent_dimension as u32;
    let log = arith::log_p(target, p);
    let divides = match log {
        Some(l) => k > 0 && l % k == 0,
        None => false,
    };
    r.clause(
        "dimension divides log_p",
        divides && (!need_k_gt_1 || k > 1),
        format!("k = {k}, log_p = {}", log.map_or("-".to_string(), |l| l.to_string())),
    );
}

/// Theorem A for one `(p, E)`.
pub fn theorem_a(ctx: &GroupContext, p: u64, e: &Subgroup) -> VerdictReport {
    let start = Instant::now();
    let mut r = VerdictReport::new(&ctx.name, "theorem-A", params(p, None, Some(e)));
    r.notes.push(format!("p'-factor convention: {}", ctx.convention));
    let h = hypothesis_minimal_cyclic(&ctx.lat, e, p, Property::PartialLPi);
    if record_hypothesis(&mut r, h) {
        let c = ctx.up(p);
        r.clause("E <= Z_Up(G)", c.contained_in_hypercentre(&ctx.lat, e), String::new());
    }
    r.conclude();
    r.timed(start)
}

/// Theorem small for one normal `p`-subgroup `P`.
pub fn theorem_small(ctx: &GroupContext, p: u64, pn: &Subgroup) -> VerdictReport {
    let start = Instant::now();
    let mut r = VerdictReport::new(&ctx.name, "theorem-small", params(p, None, Some(pn)));
    let h = hypothesis_minimal_cyclic(&ctx.lat, pn, p, Property::PartialLPi);
    if record_hypothesis(&mut r, h) {
        r.clause("P <= Z_U(G)", Centrality::u().contained_in_hypercentre(&ctx.lat, pn), String::new());
    }
    r.conclude();
    r.timed(start)
}

/// Theorem B for `p ≤ d ≤ √|P|`.
pub fn theorem_b(ctx: &GroupContext, p: u64, d: u64) -> VerdictReport {
    let start = Instant::now();
    let mut r = VerdictReport::new(&ctx.name, "theorem-B", params(p, Some(d), None));
    let pg = ctx.sylow(p);
    if record_hypothesis(&mut r, ctx.hypothesis(&pg, d)) {
        theorem_b_clauses(ctx, &mut r, p, d);
    }
    r.conclude();
    r.timed(start)
}

/// The conclusion clauses of Theorem B, evaluated whether or not the
/// hypothesis holds.
pub fn theorem_b_clauses(ctx: &GroupContext, r: &mut VerdictReport, p: u64, d: u64) {
    let lat = &ctx.lat;
    let prof = lat.classify_solubility(p);
    r.clause("p-soluble", prof.is_p_soluble, String::new());
    let opp = lat.o_p_prime_p(p);
    r.clause(
        "G/O_p'p p-supersoluble",
        lat.is_p_supersoluble_above(&opp, p),
        format!("|O_p'p| = {}", opp.order()),
    );
    r.notes.push(format!("p-rank {}", prof.p_rank));
    if prof.p_rank > 1 {
        radical_clauses(ctx, r, p, d, true);
    }
}

/// Theorem C for `d = p²`.
pub fn theorem_c(ctx: &GroupContext, p: u64) -> VerdictReport {
    let start = Instant::now();
    let d = p * p;
    let mut r = VerdictReport::new(&ctx.name, "theorem-C", params(p, Some(d), None));
    let lat = &ctx.lat;
    let pg = ctx.sylow(p);
    if !lat.o_p_prime(p).is_trivial() || (pg.order() as u64) < d {
        r.set_hypothesis(false);
        r.notes.push("requires O_p'(G) = 1 and |P| >= p^2".into());
        r.conclude();
        return r.timed(start);
    }
    if record_hypothesis(&mut r, ctx.hypothesis(&pg, d)) {
        match classify_theorem_c(ctx, p, &pg) {
            Ok(types) => {
                r.clause(
                    "type",
                    !types.is_empty(),
                    format!("types {types:?}"),
                );
                if let Some(t) = types.first() {
                    r.params.extra = Some(format!("type={t}"));
                }
            }
            Err(e) => r.skip("type", &e),
        }
    }
    r.conclude();
    r.timed(start)
}

/// All of the five structural types that `G` has, in increasing order.
pub fn classify_theorem_c(ctx: &GroupContext, p: u64, pg: &Subgroup) -> Result<Vec<u8>> {
    let lat = &ctx.lat;
    let g = &ctx.g;
    let mut types = Vec::new();
    if lat.classify_solubility(p).is_p_supersoluble {
        types.push(1);
    }
    let pn = lat.is_normal(pg);
    if pn && pg.order() as u64 == p * p && lat.minimal_normals().contains(pg) {
        types.push(2);
    }
    if p == 2 && g.order() == 24 {
        let s4 = Subgroup::whole(&FiniteGroup::new(corpus::build("sym4")?)?);
        if isomorphic(g, &s4)? {
            types.push(3);
        }
    }
    if p == 3 && (g.order() == 216 || g.order() == 432) {
        for a in ctx.affine_reference()? {
            if a.order() == g.order() && isomorphic(g, &a)? {
                types.push(4);
            }
        }
    }
    if pn && pg.order() as u64 >= p.pow(4) {
        let q = coset_action(g, pg)?;
        let qo = q.group().order() as u64;
        let cyclic = (0..q.group().order()).any(|x| q.group().elem_order(x) == qo);
        if cyclic {
            let m = homogeneity(lat, pg, &lat.nodes()[0])?;
            if m.semisimple && m.homogeneous && m.constituent_dimension == 2 {
                types.push(5);
            }
        }
    }
    Ok(types)
}

/// `log_p` of an arbitrary positive integer as a real number, exact on
/// powers of `p`.
fn real_log(n: u64, p: u64) -> f64 {
    match arith::log_p(n, p) {
        Some(k) => k as f64,
        None => (n as f64).ln() / (p as f64).ln(),
    }
}

/// Theorem p-soluble for `p² ≤ d ≤ |P|`.
pub fn theorem_p_soluble(ctx: &GroupContext, p: u64, d: u64) -> VerdictReport {
    let start = Instant::now();
    let mut r = VerdictReport::new(&ctx.name, "theorem-p-soluble", params(p, Some(d), None));
    let pg = ctx.sylow(p);
    if record_hypothesis(&mut r, ctx.hypothesis(&pg, d)) {
        let lat = &ctx.lat;
        if !lat.classify_solubility(p).is_p_soluble {
            let n = lat.largest_normal_p_soluble(p);
            let ld = log_p(d, p) as f64;
            let bound = (3.0 + real_log(n.order() as u64, p)).max(0.5 * (3.0 + real_log(pg.order() as u64, p)));
            r.clause(
                "log_p d >= max(3 + log_p |N|, (3 + log_p |P|)/2)",
                ld + 1e-9 >= bound,
                format!("log_p d = {ld}, bound = {bound:.4}, |N| = {}", n.order()),
            );
        } else {
            r.notes.push("G is p-soluble; conclusion not triggered".into());
        }
    }
    r.conclude();
    r.timed(start)
}

/// A complement to the normal subgroup `n`, searched over lifts of a
/// generating set of `G` modulo `n`.
pub fn find_complement(g: &Subgroup, n: &Subgroup) -> Result<Option<Subgroup>> {
    let grp = g.group();
    let target = g.order() / n.order();
    let mut span = n.clone();
    let mut rel_gens = Vec::new();
    for x in g.elements() {
        if !span.contains(x) {
            rel_gens.push(x);
            span = span.join_element(x);
        }
    }
    let elems: Vec<usize> = n.elements().collect();
    let total = (elems.len() as u128).saturating_pow(rel_gens.len() as u32);
    let cap = budget().lifts as u128;
    if total > cap {
        return Err(Error::budget("complement search", total, cap));
    }
    let mut choice = vec![0usize; rel_gens.len()];
    loop {
        let mut h = Subgroup::trivial(grp);
        let mut ok = true;
        for (&s, &c) in rel_gens.iter().zip(&choice) {
            h = h.join_element(grp.mul(s, elems[c]));
            if h.order() > target {
                ok = false;
                break;
            }
        }
        if ok && h.order() == target {
            return Ok(Some(h));
        }
        let mut i = 0;
        loop {
            if i == choice.len() {
                return Ok(None);
            }
            choice[i] += 1;
            if choice[i] < elems.len() {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}

/// Normal `p`-subgroups that are products of minimal normal subgroups.
pub fn semisimple_normal_p_subgroups(lat: &NormalLattice, p: u64) -> Vec<Subgroup> {
    let mins = lat.minimal_normals();
    lat.nodes()
        .iter()
        .filter(|n| !n.is_trivial() && n.is_p_group(p))
        .filter(|n| {
            let join = mins
                .iter()
                .filter(|m| m.is_subgroup_of(n))
                .fold(lat.nodes()[0].clone(), |acc, m| acc.join(m));
            join == **n
        })
        .cloned()
        .collect()
}

/// Theorem dividing for a complemented product `P` of minimal normal
/// `p`-subgroups and `p² ≤ d < |P|`.
pub fn theorem_dividing(ctx: &GroupContext, p: u64, d: u64, pn: &Subgroup) -> VerdictReport {
    let start = Instant::now();
    let mut r = VerdictReport::new(&ctx.name, "theorem-dividing", params(p, Some(d), Some(pn)));
    r.notes.push("window read as p^2 <= d < |P|".into());
    if record_hypothesis(&mut r, ctx.hypothesis(pn, d)) {
        if Centrality::u().contained_in_hypercentre(&ctx.lat, pn) {
            r.notes.push("P <= Z_U(G); conclusion not triggered".into());
        } else {
            match homogeneity(&ctx.lat, pn, &ctx.lat.nodes()[0]) {
                Ok(m) => module_clauses(&mut r, &m, d, p, false),
                Err(e) => r.skip("homogeneous", &e),
            }
        }
    }
    r.conclude();
    r.timed(start)
}

/// Theorem furthermore for `p² ≤ d < |O_{p′,p}(G)|_p`.
pub fn theorem_furthermore(ctx: &GroupContext, p: u64, d: u64) -> VerdictReport {
    let start = Instant::now();
    let mut r = VerdictReport::new(&ctx.name, "theorem-furthermore", params(p, Some(d), None));
    r.notes.push("window read as p^2 <= d < |O_p'p(G)|_p".into());
    let lat = &ctx.lat;
    let opp = lat.o_p_prime_p(p);
    let hyp = ctx.p_subgroups_of_normal(&opp, p, d).map(|subs| {
        let failures: Vec<Subgroup> = subs
            .iter()
            .filter(|h| !satisfies_partial_l_pi(lat, h).holds)
            .cloned()
            .collect();
        HypothesisCheck {
            holds: failures.is_empty(),
            checked: subs.len(),
            failures,
        }
    });
    if record_hypothesis(&mut r, hyp) {
        let prof = lat.classify_solubility(p);
        r.clause("p-soluble", prof.is_p_soluble, String::new());
        r.clause("G/O_p'p p-supersoluble", lat.is_p_supersoluble_above(&opp, p), String::new());
        r.notes.push(format!("p-rank {}", prof.p_rank));
        if prof.p_rank > 1 {
            radical_clauses(ctx, &mut r, p, d, false);
        }
    }
    r.conclude();
    r.timed(start)
}

/// Shared hypothesis for the two lemmas on minimal normal subgroups of
/// order `d` and `d/p`: `O_{p′}(G) = 1`, `p² ≤ d < |P|`, the order-`d`
/// condition, and a minimal normal subgroup of order `target`.
fn ele_leq_hypothesis(ctx: &GroupContext, r: &mut VerdictReport, p: u64, d: u64, target: u64) -> Option<Vec<Subgroup>> {
    let lat = &ctx.lat;
    let mins: Vec<Subgroup> = lat
        .minimal_normals()
        .into_iter()
        .filter(|m| m.order() as u64 == target)
        .collect();
    if !lat.o_p_prime(p).is_trivial() || mins.is_empty() {
        r.set_hypothesis(false);
        r.notes.push(format!("requires O_p'(G) = 1 and a minimal normal subgroup of order {target}"));
        return None;
    }
    let pg = ctx.sylow(p);
    if record_hypothesis(r, ctx.hypothesis(&pg, d)) {
        Some(mins)
    } else {
        None
    }
}

/// Lemma ele: a minimal normal subgroup of order `d`.
pub fn theorem_ele(ctx: &GroupContext, p: u64, d: u64) -> VerdictReport {
    let start = Instant::now();
    let mut r = VerdictReport::new(&ctx.name, "theorem-ele", params(p, Some(d), None));
    if ele_leq_hypothesis(ctx, &mut r, p, d, d).is_some() {
        let lat = &ctx.lat;
        let soc = lat.socle();
        let op = lat.o_p(p);
        r.clause("G/Soc(G) p-supersoluble", lat.is_p_supersoluble_above(&soc, p), String::new());
        match lat.frattini() {
            Ok(phi) => r.clause("Phi(G) = 1", phi.is_trivial(), describe(&phi)),
            Err(e) => r.skip("Phi(G) = 1", &e),
        }
        r.clause("Soc(G) = O_p(G)", soc == op, format!("|Soc| = {}, |O_p| = {}", soc.order(), op.order()));
        match homogeneity(lat, &op, &lat.nodes()[0]) {
            Ok(m) => {
                r.clause("O_p(G) homogeneous", m.semisimple && m.homogeneous, String::new());
                if op.order() as u64 > d {
                    r.clause(
                        "not absolutely irreducible",
                        m.absolutely_irreducible.iter().all(|a| !a),
                        String::new(),
                    );
                }
            }
            Err(e) => r.skip("O_p(G) homogeneous", &e),
        }
    }
    r.conclude();
    r.timed(start)
}

/// Lemma leq: a minimal normal subgroup `N` of order `d/p`.
pub fn theorem_leq(ctx: &GroupContext, p: u64, d: u64) -> VerdictReport {
    let start = Instant::now();
    let mut r = VerdictReport::new(&ctx.name, "theorem-leq", params(p, Some(d), None));
    if let Some(mins) = ele_leq_hypothesis(ctx, &mut r, p, d, d / p) {
        let lat = &ctx.lat;
        let soc = lat.socle();
        r.clause("Soc(G) <= O_p(G)", soc.is_subgroup_of(&lat.o_p(p)), String::new());
        for n in &mins {
            r.clause("G/N p-supersoluble", lat.is_p_supersoluble_above(n, p), describe(n));
        }
        if !lat.classify_solubility(p).is_p_supersoluble {
            r.clause("|Soc(G)| <= d", soc.order() as u64 <= d, format!("|Soc| = {}", soc.order()));
        }
    }
    r.conclude();
    r.timed(start)
}

/// Every instance of `thm` over its parameter window on this group.
/// `p` and `d` restrict the sweep when given.
pub fn verify_all(ctx: &GroupContext, thm: TheoremId, p: Option<u64>, d: Option<u64>) -> Vec<VerdictReport> {
    let primes: Vec<u64> = match p {
        Some(p) => vec![p],
        None => ctx.primes(),
    };
    let mut out = Vec::new();
    for p in primes {
        if ctx.order() % p != 0 {
            continue;
        }
        let sp = p_part(ctx.g.order(), p);
        let ds = |lo: u64, hi_incl: u64| -> Vec<u64> {
            arith::p_powers_between(p, lo, hi_incl)
                .into_iter()
                .filter(|x| d.is_none_or(|d| d == *x))
                .collect()
        };
        match thm {
            TheoremId::A => {
                for e in ctx.lat.nodes().iter().filter(|n| !n.is_trivial()) {
                    out.push(theorem_a(ctx, p, e));
                }
            }
            TheoremId::Small => {
                for pn in ctx.lat.nodes().iter().filter(|n| !n.is_trivial() && n.is_p_group(p)) {
                    out.push(theorem_small(ctx, p, pn));
                }
            }
            TheoremId::B => {
                let root = (sp as f64).sqrt().floor() as u64;
                for d in ds(p, root) {
                    if d * d <= sp {
                        out.push(theorem_b(ctx, p, d));
                    }
                }
            }
            TheoremId::C => {
                if d.is_none_or(|d| d == p * p) {
                    out.push(theorem_c(ctx, p));
                }
            }
            TheoremId::PSoluble => {
                for d in ds(p * p, sp) {
                    out.push(theorem_p_soluble(ctx, p, d));
                }
            }
            TheoremId::Dividing => {
                for pn in semisimple_normal_p_subgroups(&ctx.lat, p) {
                    if pn.order() as u64 <= p * p {
                        continue;
                    }
                    match find_complement(&ctx.g, &pn) {
                        Ok(Some(_)) => {
                            for d in ds(p * p, pn.order() as u64 / p) {
                                out.push(theorem_dividing(ctx, p, d, &pn));
                            }
                        }
                        Ok(None) => {}
                        Err(e) => {
                            let mut r = VerdictReport::new(&ctx.name, "theorem-dividing", params(p, None, Some(&pn)));
                            r.skip("complement", &e);
                            out.push(r);
                        }
                    }
                }
            }
            TheoremId::Furthermore => {
                let top = p_part(ctx.lat.o_p_prime_p(p).order(), p);
                for d in ds(p * p, top / p) {
                    out.push(theorem_furthermore(ctx, p, d));
                }
            }
            TheoremId::Ele => {
                for d in ds(p * p, sp / p) {
                    out.push(theorem_ele(ctx, p, d));
                }
            }
            TheoremId::Leq => {
                for d in ds(p * p, sp / p) {
                    out.push(theorem_leq(ctx, p, d));
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn theorem_c_on_sym4_and_a4() {
        let ctx = GroupContext::builtin("sym4").unwrap();
        let r = theorem_c(&ctx, 2);
        assert_eq!(r.hypothesis_holds, Some(true));
        assert_eq!(r.params.extra.as_deref(), Some("type=3"));
        let ctx = GroupContext::builtin("a4").unwrap();
        let r = theorem_c(&ctx, 2);
        assert_eq!(r.params.extra.as_deref(), Some("type=2"));
    }

    #[test]
    fn complement_search() {
        let ctx = GroupContext::builtin("sym4").unwrap();
        let v4 = ctx.lat.o_p(2);
        assert_eq!(find_complement(&ctx.g, &v4).unwrap().unwrap().order(), 6);
        let q = GroupContext::builtin("quaternion8").unwrap();
        let z = q.lat.minimal_normals()[0].clone();
        assert!(find_complement(&q.g, &z).unwrap().is_none());
    }

    #[test]
    fn theorem_ids_parse() {
        for t in TheoremId::ALL {
            assert_eq!(t.name().parse::<TheoremId>().unwrap(), t);
        }
    }
}
