//! Subgroups of an enumerated group and the subgroup-level operations:
//! closures, cores, normalisers, centralisers of sections, Sylow subgroups,
//! subgroup enumeration, Frattini subgroups, quaternion-freeness and Ω.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::arith;
use crate::bsgs::PermGroup;
use crate::config::budget;
use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::table::{ElemSet, FiniteGroup};

/// A subgroup of a fixed enumerated parent group.
#[derive(Clone)]
pub struct Subgroup {
    group: Arc<FiniteGroup>,
    set: ElemSet,
    gens: Vec<usize>,
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.set == other.set
    }
}
impl Eq for Subgroup {}
impl Hash for Subgroup {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.set.hash(state)
    }
}
impl PartialOrd for Subgroup {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Subgroup {
    /// By order, then by element fingerprint.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.order(), &self.set).cmp(&(other.order(), &other.set))
    }
}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subgroup(order {}, gens [", self.order())?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", self.group.element(*g))?;
        }
        write!(f, "])")
    }
}

/// Extends the subgroup `(set, elems)` generated by `gens[..len-1]` by the
/// last entry of `gens`.
fn extend_closure(group: &FiniteGroup, set: &mut ElemSet, elems: &mut Vec<usize>, gens: &[usize]) {
    let x = *gens.last().expect("at least one generator");
    let old = elems.len();
    for i in 0..old {
        let y = group.mul(elems[i], x);
        if set.insert(y) {
            elems.push(y);
        }
    }
    let mut k = old;
    while k < elems.len() {
        for &g in gens {
            let y = group.mul(elems[k], g);
            if set.insert(y) {
                elems.push(y);
            }
        }
        k += 1;
    }
}

impl Subgroup {
    pub fn whole(group: &Arc<FiniteGroup>) -> Subgroup {
        Subgroup::generated(group, group.generators())
    }

    pub fn trivial(group: &Arc<FiniteGroup>) -> Subgroup {
        let mut set = group.empty_set();
        set.insert(0);
        Subgroup {
            group: group.clone(),
            set,
            gens: Vec::new(),
        }
    }

    /// Subgroup generated by element indices. Redundant generators are dropped.
    pub fn generated(group: &Arc<FiniteGroup>, gens: &[usize]) -> Subgroup {
        let mut kept: Vec<usize> = Vec::new();
        let mut set = group.empty_set();
        set.insert(0);
        let mut elems = vec![0];
        for &g in gens {
            if set.contains(g) {
                continue;
            }
            kept.push(g);
            extend_closure(group, &mut set, &mut elems, &kept);
        }
        Subgroup {
            group: group.clone(),
            set,
            gens: kept,
        }
    }

    /// Subgroup generated by permutations, each of which must lie in the parent.
    pub fn from_perms(group: &Arc<FiniteGroup>, perms: &[Permutation]) -> Result<Subgroup> {
        let idx = perms
            .iter()
            .map(|p| {
                group
                    .index_of(p)
                    .ok_or_else(|| Error::Input(format!("{p} is not an element of the group")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Subgroup::generated(group, &idx))
    }

    /// Wraps a set already known to be a subgroup, choosing a small
    /// generating set greedily in element order.
    pub fn from_set(group: &Arc<FiniteGroup>, set: ElemSet) -> Subgroup {
        let mut gens = Vec::new();
        let mut cur = group.empty_set();
        cur.insert(0);
        let mut elems = vec![0];
        let target = set.len();
        for x in set.iter() {
            if elems.len() == target {
                break;
            }
            if !cur.contains(x) {
                gens.push(x);
                extend_closure(group, &mut cur, &mut elems, &gens);
            }
        }
        debug_assert!(cur == set, "from_set called on a non-subgroup");
        Subgroup {
            group: group.clone(),
            set,
            gens,
        }
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn set(&self) -> &ElemSet {
        &self.set
    }

    pub fn gens(&self) -> &[usize] {
        &self.gens
    }

    pub fn order(&self) -> usize {
        self.set.len()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.set.contains(x)
    }

    pub fn contains_perm(&self, p: &Permutation) -> bool {
        self.group.index_of(p).is_some_and(|i| self.contains(i))
    }

    pub fn elements(&self) -> impl Iterator<Item = usize> + '_ {
        self.set.iter()
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.set.is_subset(&other.set)
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn perm_generators(&self) -> Vec<Permutation> {
        self.gens.iter().map(|&g| self.group.element(g).clone()).collect()
    }

    /// Generators in cycle notation, e.g. `["(1,2,3,4)"]`.
    pub fn describe(&self) -> Vec<String> {
        self.perm_generators().iter().map(|p| p.to_string()).collect()
    }

    /// Stand-alone permutation group on the parent's points.
    pub fn to_perm_group(&self) -> PermGroup {
        PermGroup::new(self.group.degree(), self.perm_generators()).expect("valid generators")
    }

    /// True iff `self` is normalised by every generator of `g`.
    pub fn is_normal_in(&self, g: &Subgroup) -> bool {
        g.gens.iter().all(|&x| self.gens.iter().all(|&h| self.contains(self.group.conj(h, x))))
    }

    pub fn is_p_group(&self, p: u64) -> bool {
        arith::log_p(self.order() as u64, p).is_some()
    }

    pub fn is_abelian(&self) -> bool {
        self.gens.iter().enumerate().all(|(i, &a)| {
            self.gens[i + 1..]
                .iter()
                .all(|&b| self.group.mul(a, b) == self.group.mul(b, a))
        })
    }

    pub fn conjugate(&self, g: usize) -> Subgroup {
        let gens = self.gens.iter().map(|&h| self.group.conj(h, g)).collect();
        Subgroup {
            group: self.group.clone(),
            set: self.group.conj_set(&self.set, g),
            gens,
        }
    }

    /// `⟨self, other⟩`.
    pub fn join(&self, other: &Subgroup) -> Subgroup {
        if other.is_subgroup_of(self) {
            return self.clone();
        }
        if self.is_subgroup_of(other) {
            return other.clone();
        }
        let mut gens = self.gens.clone();
        gens.extend_from_slice(&other.gens);
        Subgroup::generated(&self.group, &gens)
    }

    /// `⟨self, x⟩`.
    pub fn join_element(&self, x: usize) -> Subgroup {
        if self.contains(x) {
            return self.clone();
        }
        let mut gens = self.gens.clone();
        gens.push(x);
        let mut set = self.set.clone();
        let mut elems: Vec<usize> = self.set.iter().collect();
        extend_closure(&self.group, &mut set, &mut elems, &gens);
        Subgroup {
            group: self.group.clone(),
            set,
            gens,
        }
    }

    /// `self ∩ other`.
    pub fn meet(&self, other: &Subgroup) -> Subgroup {
        if self.is_subgroup_of(other) {
            return self.clone();
        }
        if other.is_subgroup_of(self) {
            return other.clone();
        }
        Subgroup::from_set(&self.group, self.set.intersection(&other.set))
    }

    /// Exponent: lcm of element orders.
    pub fn element_exponent(&self) -> u64 {
        self.elements().fold(1, |acc, x| {
            let o = self.group.elem_order(x);
            acc / arith::gcd(acc, o) * o
        })
    }
}

/// `A ∩ B` inside `g`.
pub fn meet(_g: &Subgroup, a: &Subgroup, b: &Subgroup) -> Subgroup {
    a.meet(b)
}

/// `⟨A, B⟩` inside `g`.
pub fn join(_g: &Subgroup, a: &Subgroup, b: &Subgroup) -> Subgroup {
    a.join(b)
}

/// Smallest normal subgroup of `g` containing `h`: repeatedly adjoin
/// conjugates of generators by generators of `g` until stable.
pub fn normal_closure(g: &Subgroup, h: &Subgroup) -> Subgroup {
    let grp = g.group();
    let mut cur = h.clone();
    loop {
        let mut grew = false;
        let gens = cur.gens.clone();
        for &x in &gens {
            for &s in g.gens() {
                let c = grp.conj(x, s);
                if !cur.contains(c) {
                    cur = cur.join_element(c);
                    grew = true;
                }
            }
        }
        if !grew {
            return cur;
        }
    }
}

/// Largest normal subgroup of `g` inside `h`: iterate `C ← C ∩ C^s` over
/// the generators `s` of `g` to a fixed point.
pub fn normal_core(g: &Subgroup, h: &Subgroup) -> Subgroup {
    let grp = g.group();
    let mut cur = h.set().clone();
    loop {
        let mut changed = false;
        for &s in g.gens() {
            if cur.len() == 1 {
                return Subgroup::trivial(grp);
            }
            let c = grp.conj_set(&cur, s);
            if c != cur {
                cur = cur.intersection(&c);
                changed = true;
            }
        }
        if !changed {
            return Subgroup::from_set(grp, cur);
        }
    }
}

/// Orbit of a subgroup under conjugation by the generators of `g`, with a
/// conjugating element for each orbit member.
fn conjugation_orbit(g: &Subgroup, h: &ElemSet) -> (Vec<ElemSet>, Vec<usize>) {
    let grp = g.group();
    let mut orbit = vec![h.clone()];
    let mut reps = vec![0usize];
    let mut seen: HashMap<ElemSet, usize> = HashMap::new();
    seen.insert(h.clone(), 0);
    let mut i = 0;
    while i < orbit.len() {
        for &s in g.gens() {
            let c = grp.conj_set(&orbit[i], s);
            if !seen.contains_key(&c) {
                seen.insert(c.clone(), orbit.len());
                orbit.push(c);
                reps.push(grp.mul(reps[i], s));
            }
        }
        i += 1;
    }
    (orbit, reps)
}

/// Number of `g`-conjugates of `h`, i.e. `|G : N_G(H)|`.
pub fn conjugacy_class_size(g: &Subgroup, h: &Subgroup) -> usize {
    conjugation_orbit(g, h.set()).0.len()
}

/// All distinct `g`-conjugates of `h`.
pub fn conjugates(g: &Subgroup, h: &Subgroup) -> Vec<Subgroup> {
    let (orbit, reps) = conjugation_orbit(g, h.set());
    orbit
        .into_iter()
        .zip(reps)
        .map(|(_, r)| h.conjugate(r))
        .collect()
}

/// `N_G(H)` by orbit–stabiliser: Schreier generators of the stabiliser of
/// `H` in the conjugation action of `G` on its subgroups.
pub fn normalizer(g: &Subgroup, h: &Subgroup) -> Subgroup {
    let grp = g.group();
    let (orbit, reps) = conjugation_orbit(g, h.set());
    let pos: HashMap<&ElemSet, usize> = orbit.iter().enumerate().map(|(i, s)| (s, i)).collect();
    let mut stab = h.clone();
    for (i, set) in orbit.iter().enumerate() {
        for &s in g.gens() {
            let c = grp.conj_set(set, s);
            let j = pos[&c];
            let schreier = grp.mul(grp.mul(reps[i], s), grp.inv(reps[j]));
            if !stab.contains(schreier) {
                stab = stab.join_element(schreier);
            }
        }
    }
    debug_assert_eq!(stab.order() * orbit.len(), g.order());
    stab
}

/// `N_G(H)` by scanning every element of `g`.
pub fn normalizer_brute(g: &Subgroup, h: &Subgroup) -> Result<Subgroup> {
    let b = budget();
    if g.order() as u64 > b.elements {
        return Err(Error::budget("normaliser scan", g.order() as u128, b.elements as u128));
    }
    let grp = g.group();
    let mut set = grp.empty_set();
    for x in g.elements() {
        if h.gens().iter().all(|&y| h.contains(grp.conj(y, x))) {
            set.insert(x);
        }
    }
    Ok(Subgroup::from_set(grp, set))
}

/// `C_G(L/K) = {g : l⁻¹ l^g ∈ K for every generator l of L}`.
pub fn centralizer_of_section(g: &Subgroup, upper: &Subgroup, lower: &Subgroup) -> Subgroup {
    let grp = g.group();
    let mut set = grp.empty_set();
    for x in g.elements() {
        if upper
            .gens()
            .iter()
            .all(|&l| lower.contains(grp.mul(grp.inv(l), grp.conj(l, x))))
        {
            set.insert(x);
        }
    }
    Subgroup::from_set(grp, set)
}

/// Centraliser of a subgroup (elementwise).
pub fn centralizer(g: &Subgroup, h: &Subgroup) -> Subgroup {
    centralizer_of_section(g, h, &Subgroup::trivial(g.group()))
}

/// A Sylow `p`-subgroup, grown from a `p`-element by adjoining `p`-elements
/// of the normaliser. Elements are scanned in index order, so the choice is
/// deterministic. Returns the trivial subgroup when `p ∤ |G|`.
pub fn sylow_subgroup(g: &Subgroup, p: u64) -> Subgroup {
    let grp = g.group();
    let target = arith::p_part(g.order() as u64, p) as usize;
    if target == 1 {
        return Subgroup::trivial(grp);
    }
    let start = g
        .elements()
        .find(|&x| grp.elem_order(x) % p == 0)
        .expect("Cauchy: an element of order divisible by p exists");
    let o = grp.elem_order(start);
    let pe = grp.pow(start, o / arith::p_part(o, p));
    let mut pgrp = Subgroup::generated(grp, &[pe]);
    while pgrp.order() < target {
        let n = normalizer(g, &pgrp);
        let x = n
            .elements()
            .find(|&x| !pgrp.contains(x) && arith::log_p(grp.elem_order(x), p).is_some())
            .expect("N_G(P)/P has order divisible by p when P is not Sylow");
        pgrp = pgrp.join_element(x);
    }
    pgrp
}

/// All cyclic subgroups `⟨x⟩` of `h` with `o(x) = m`, sorted.
pub fn cyclic_subgroups_of_order(h: &Subgroup, m: u64) -> Vec<Subgroup> {
    let grp = h.group();
    let mut seen: HashSet<ElemSet> = HashSet::new();
    let mut out = Vec::new();
    for x in h.elements() {
        if grp.elem_order(x) == m {
            let c = Subgroup::generated(grp, &[x]);
            if seen.insert(c.set().clone()) {
                out.push(c);
            }
        }
    }
    out.sort();
    out
}

/// Every subgroup of the `p`-group `pg` of order `d`, by cyclic extension:
/// each subgroup of order `p^(k+1)` is `⟨H, x⟩` for some `H` of order `p^k`
/// and `x ∈ N(H) \ H` with `x^p ∈ H`.
pub fn subgroups_of_order(pg: &Subgroup, d: u64) -> Result<Vec<Subgroup>> {
    let n = pg.order() as u64;
    let Some((p, _)) = arith::is_prime_power(n) else {
        return if d == 1 {
            Ok(vec![Subgroup::trivial(pg.group())])
        } else {
            Err(Error::Precondition(format!("order {n} is not a prime power")))
        };
    };
    if n % d != 0 || arith::log_p(d, p).is_none() {
        return Err(Error::Precondition(format!("{d} is not a power of {p} dividing {n}")));
    }
    let grp = pg.group();
    let limit = budget().subgroups;
    let mut level = vec![Subgroup::trivial(grp)];
    let mut size = 1u64;
    while size < d {
        let mut next: Vec<Subgroup> = Vec::new();
        let mut seen: HashSet<ElemSet> = HashSet::new();
        for h in &level {
            let mut covered = h.set().clone();
            for x in pg.elements() {
                if covered.contains(x) {
                    continue;
                }
                if !h.contains(grp.pow(x, p)) {
                    continue;
                }
                if !h.gens().iter().all(|&y| h.contains(grp.conj(y, x))) {
                    continue;
                }
                let k = h.join_element(x);
                covered = covered.union(k.set());
                if seen.insert(k.set().clone()) {
                    next.push(k);
                    if next.len() > limit {
                        return Err(Error::budget(
                            "subgroup enumeration",
                            next.len() as u128,
                            limit as u128,
                        ));
                    }
                }
            }
        }
        level = next;
        size *= p;
    }
    level.sort();
    Ok(level)
}

/// The complete subgroup lattice of `g` by closing prime-power cyclic
/// subgroups under joins.
pub fn all_subgroups(g: &Subgroup) -> Result<Vec<Subgroup>> {
    let grp = g.group();
    let limit = budget().subgroups;
    let mut cyclic_gens: Vec<usize> = Vec::new();
    let mut seen_cyc: HashSet<ElemSet> = HashSet::new();
    for x in g.elements() {
        if x == 0 || arith::is_prime_power(grp.elem_order(x)).is_none() {
            continue;
        }
        let c = Subgroup::generated(grp, &[x]);
        if seen_cyc.insert(c.set().clone()) {
            cyclic_gens.push(x);
        }
    }
    let mut all: Vec<Subgroup> = vec![Subgroup::trivial(grp)];
    let mut seen: HashSet<ElemSet> = HashSet::new();
    seen.insert(all[0].set().clone());
    let mut i = 0;
    while i < all.len() {
        let h = all[i].clone();
        for &x in &cyclic_gens {
            if h.contains(x) {
                continue;
            }
            let k = h.join_element(x);
            if seen.insert(k.set().clone()) {
                all.push(k);
                if all.len() > limit {
                    return Err(Error::budget("subgroup lattice", all.len() as u128, limit as u128));
                }
            }
        }
        i += 1;
    }
    all.sort();
    Ok(all)
}

/// Maximal proper subgroups, read off the full subgroup lattice.
pub fn maximal_subgroups(g: &Subgroup) -> Result<Vec<Subgroup>> {
    let all = all_subgroups(g)?;
    let proper: Vec<&Subgroup> = all.iter().filter(|h| h.order() < g.order()).collect();
    Ok(proper
        .iter()
        .filter(|h| {
            !proper
                .iter()
                .any(|k| k.order() > h.order() && h.is_subgroup_of(k))
        })
        .map(|h| (*h).clone())
        .collect())
}

/// `Φ(G)` as the intersection of all maximal subgroups.
pub fn frattini_by_maximal_subgroups(g: &Subgroup) -> Result<Subgroup> {
    let max = maximal_subgroups(g)?;
    let mut set = g.set().clone();
    for m in &max {
        set = set.intersection(m.set());
    }
    Ok(Subgroup::from_set(g.group(), set))
}

/// `Φ(P) = P′·℧₁(P)` for a `p`-group: the normal closure of the generator
/// commutators together with all `p`-th powers.
pub fn frattini_p_group(pg: &Subgroup) -> Result<Subgroup> {
    let n = pg.order() as u64;
    if n == 1 {
        return Ok(pg.clone());
    }
    let Some((p, _)) = arith::is_prime_power(n) else {
        return Err(Error::Precondition(format!("order {n} is not a prime power")));
    };
    let grp = pg.group();
    let mut gens: Vec<usize> = Vec::new();
    for (i, &a) in pg.gens().iter().enumerate() {
        for &b in &pg.gens()[i + 1..] {
            gens.push(grp.commutator(a, b));
        }
    }
    for x in pg.elements() {
        gens.push(grp.pow(x, p));
    }
    let h = Subgroup::generated(grp, &gens);
    Ok(normal_closure(pg, &h))
}

/// True iff `S/N ≅ Q₈`: order 8, nonabelian, exactly one involution.
fn section_is_q8(s: &Subgroup, n: &Subgroup) -> bool {
    if s.order() != 8 * n.order() {
        return false;
    }
    let grp = s.group();
    let nonabelian = s.gens().iter().enumerate().any(|(i, &a)| {
        s.gens()[i + 1..]
            .iter()
            .any(|&b| !n.contains(grp.commutator(a, b)))
    });
    if !nonabelian {
        return false;
    }
    // Elements x ∉ N with x² ∈ N fill exactly one coset when the quotient has
    // a unique involution.
    let count = s
        .elements()
        .filter(|&x| !n.contains(x) && n.contains(grp.mul(x, x)))
        .count();
    count == n.order()
}

/// True iff the 2-group `pg` has no section isomorphic to `Q₈`.
pub fn is_quaternion_free(pg: &Subgroup) -> Result<bool> {
    let n = pg.order() as u64;
    if arith::log_p(n, 2).is_none() {
        return Err(Error::Precondition(format!("order {n} is not a power of 2")));
    }
    let mut d = 8u64;
    while d <= n {
        for s in subgroups_of_order(pg, d)? {
            if s.is_abelian() {
                continue;
            }
            for k in subgroups_of_order(&s, d / 8)? {
                if k.is_normal_in(&s) && section_is_q8(&s, &k) {
                    return Ok(false);
                }
            }
        }
        d *= 2;
    }
    Ok(true)
}

/// `Ω(P)`: `Ω₁(P)` for odd `p` or quaternion-free 2-groups, else `Ω₂(P)`.
pub fn omega(pg: &Subgroup) -> Result<Subgroup> {
    let n = pg.order() as u64;
    if n == 1 {
        return Ok(pg.clone());
    }
    let Some((p, _)) = arith::is_prime_power(n) else {
        return Err(Error::Precondition(format!("order {n} is not a prime power")));
    };
    let exp = if p == 2 && !is_quaternion_free(pg)? { 4 } else { p };
    let grp = pg.group();
    let gens: Vec<usize> = pg.elements().filter(|&x| exp % grp.elem_order(x) == 0).collect();
    Ok(Subgroup::generated(grp, &gens))
}

/// Conjugacy class representatives of elements (smallest index per class).
pub fn class_representatives(g: &Subgroup) -> Vec<(usize, usize)> {
    let grp = g.group();
    let mut seen = grp.empty_set();
    let mut out = Vec::new();
    for x in g.elements() {
        if seen.contains(x) {
            continue;
        }
        let mut class = vec![x];
        seen.insert(x);
        let mut i = 0;
        while i < class.len() {
            for &s in g.gens() {
                let y = grp.conj(class[i], s);
                if seen.insert(y) {
                    class.push(y);
                }
            }
            i += 1;
        }
        out.push((x, class.len()));
    }
    out
}

/// Primes dividing `|g|`.
pub fn prime_divisors(g: &Subgroup) -> BTreeSet<u64> {
    arith::prime_divisors(g.order() as u64)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn group(n: usize, gens: &[&str]) -> Subgroup {
        let perms = gens.iter().map(|s| Permutation::parse(n, s).unwrap()).collect();
        let t = FiniteGroup::new(PermGroup::new(n, perms).unwrap()).unwrap();
        Subgroup::whole(&t)
    }

    fn sub(g: &Subgroup, gens: &[&str]) -> Subgroup {
        let n = g.group().degree();
        let perms: Vec<_> = gens.iter().map(|s| Permutation::parse(n, s).unwrap()).collect();
        Subgroup::from_perms(g.group(), &perms).unwrap()
    }

    #[test]
    fn closure_and_core_in_sym4() {
        let s4 = group(4, &["(1,2)", "(1,2,3,4)"]);
        let c4 = sub(&s4, &["(1,2,3,4)"]);
        assert_eq!(normal_closure(&s4, &c4).order(), 24);
        assert_eq!(normal_core(&s4, &c4).order(), 1);
        let v4 = sub(&s4, &["(1,2)(3,4)", "(1,3)(2,4)"]);
        assert_eq!(normal_closure(&s4, &v4), v4);
        let d8 = sub(&s4, &["(1,2,3,4)", "(1,3)"]);
        assert_eq!(normal_core(&s4, &d8), v4);
    }

    #[test]
    fn normalizers_agree() {
        let s4 = group(4, &["(1,2)", "(1,2,3,4)"]);
        let c4 = sub(&s4, &["(1,2,3,4)"]);
        let n1 = normalizer(&s4, &c4);
        let n2 = normalizer_brute(&s4, &c4).unwrap();
        assert_eq!(n1, n2);
        assert_eq!(n1.order(), 8);
        assert_eq!(conjugacy_class_size(&s4, &c4), 3);
    }

    #[test]
    fn meet_of_v4_and_c4() {
        let s4 = group(4, &["(1,2)", "(1,2,3,4)"]);
        let v4 = sub(&s4, &["(1,2)(3,4)", "(1,3)(2,4)"]);
        let c4 = sub(&s4, &["(1,2,3,4)"]);
        let m = meet(&s4, &v4, &c4);
        assert_eq!(m.order(), 2);
        assert!(m.contains_perm(&Permutation::parse(4, "(1,3)(2,4)").unwrap()));
        assert_eq!(join(&s4, &v4, &v4), v4);
    }

    #[test]
    fn sylow_and_enumeration() {
        let s4 = group(4, &["(1,2)", "(1,2,3,4)"]);
        let p = sylow_subgroup(&s4, 2);
        assert_eq!(p.order(), 8);
        assert_eq!(subgroups_of_order(&p, 4).unwrap().len(), 3);
        assert_eq!(subgroups_of_order(&p, 8).unwrap(), vec![p.clone()]);
        assert_eq!(sylow_subgroup(&s4, 5).order(), 1);
        assert!(is_quaternion_free(&p).unwrap());
        assert_eq!(all_subgroups(&s4).unwrap().len(), 30);
    }

    #[test]
    fn frattini_routes_agree_on_sym4_and_c4() {
        let s4 = group(4, &["(1,2)", "(1,2,3,4)"]);
        assert_eq!(frattini_by_maximal_subgroups(&s4).unwrap().order(), 1);
        let c4 = group(4, &["(1,2,3,4)"]);
        assert_eq!(frattini_p_group(&c4).unwrap().order(), 2);
        assert_eq!(frattini_by_maximal_subgroups(&c4).unwrap().order(), 2);
    }

    #[test]
    fn centraliser_of_v4() {
        let s4 = group(4, &["(1,2)", "(1,2,3,4)"]);
        let v4 = sub(&s4, &["(1,2)(3,4)", "(1,3)(2,4)"]);
        assert_eq!(centralizer(&s4, &v4), v4);
        let a4 = sub(&s4, &["(1,2,3)", "(2,3,4)"]);
        assert_eq!(centralizer_of_section(&s4, &s4, &a4).order(), 24);
    }
}
