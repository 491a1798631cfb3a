//! Brute-force oracles shared by the integration tests and the acceptance
//! target. Everything here works on explicit sets of permutations and never
//! calls the engine's algorithms.
#![allow(dead_code)]

use std::collections::{HashSet, VecDeque};

use gtverify::fp::Matrix;
use gtverify::perm::Permutation;
use gtverify::subgroup::Subgroup;

pub type PermSet = HashSet<Permutation>;

/// All products of `gens`, by breadth-first search from the identity.
pub fn closure(degree: usize, gens: &[Permutation]) -> PermSet {
    let id = Permutation::identity(degree);
    let mut seen: PermSet = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = x.compose(g);
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    seen
}

pub fn perms_of(h: &Subgroup) -> PermSet {
    h.elements().map(|i| h.group().element(i).clone()).collect()
}

pub fn conjugate_set(s: &PermSet, g: &Permutation) -> PermSet {
    s.iter().map(|x| x.conjugate_by(g)).collect()
}

/// `{g ∈ G : H^g = H}`.
pub fn normalizer(g: &PermSet, h: &PermSet) -> PermSet {
    g.iter().filter(|x| conjugate_set(h, x) == *h).cloned().collect()
}

/// Closure of every conjugate of every generator.
pub fn normal_closure(degree: usize, g: &PermSet, h_gens: &[Permutation]) -> PermSet {
    let conj: Vec<Permutation> = g
        .iter()
        .flat_map(|x| h_gens.iter().map(move |s| s.conjugate_by(x)))
        .collect::<HashSet<_>>()
        .into_iter()
        .collect();
    closure(degree, &conj)
}

/// Intersection of every conjugate of `H`.
pub fn core(g: &PermSet, h: &PermSet) -> PermSet {
    h.iter()
        .filter(|y| g.iter().all(|x| h.contains(&y.conjugate_by(x))))
        .cloned()
        .collect()
}

/// Every subgroup of a small group, as closures of subsets grown one element
/// at a time.
pub fn all_subgroups(degree: usize, g: &PermSet) -> Vec<PermSet> {
    let mut elems: Vec<Permutation> = g.iter().cloned().collect();
    elems.sort();
    let triv = closure(degree, &[]);
    let key = |s: &PermSet| {
        let mut v: Vec<Permutation> = s.iter().cloned().collect();
        v.sort();
        v
    };
    let mut seen: HashSet<Vec<Permutation>> = HashSet::from([key(&triv)]);
    let mut out = vec![triv.clone()];
    let mut queue = VecDeque::from([triv]);
    while let Some(s) = queue.pop_front() {
        for x in &elems {
            if s.contains(x) {
                continue;
            }
            let mut gens: Vec<Permutation> = s.iter().cloned().collect();
            gens.push(x.clone());
            let t = closure(degree, &gens);
            if seen.insert(key(&t)) {
                out.push(t.clone());
                queue.push_back(t);
            }
        }
    }
    out
}

fn decode(mut x: usize, p: u32, d: usize) -> Vec<u32> {
    (0..d)
        .map(|_| {
            let c = (x % p as usize) as u32;
            x /= p as usize;
            c
        })
        .collect()
}

fn encode(v: &[u32], p: u32) -> usize {
    v.iter().rev().fold(0, |a, &c| a * p as usize + c as usize)
}

/// Smallest subset containing `v` that is closed under addition and every
/// matrix. Each new vector `x` extends the set by all `y + kx`, and its images
/// are queued.
pub fn invariant_closure(mats: &[Matrix], p: u32, d: usize, v: usize) -> HashSet<usize> {
    let mut set: HashSet<usize> = HashSet::from([0]);
    let mut queue = vec![v];
    while let Some(x) = queue.pop() {
        if set.contains(&x) {
            continue;
        }
        let xv = decode(x, p, d);
        let old: Vec<usize> = set.iter().copied().collect();
        for y in old {
            let yv = decode(y, p, d);
            for k in 1..p {
                let s: Vec<u32> = xv.iter().zip(&yv).map(|(a, b)| (b + k * a) % p).collect();
                set.insert(encode(&s, p));
            }
        }
        queue.extend(mats.iter().map(|a| encode(&a.apply(&xv), p)));
    }
    set
}

/// Irreducible iff no nonzero vector generates a proper invariant subset.
pub fn irreducible_brute(mats: &[Matrix], p: u32, d: usize) -> bool {
    let total = (p as usize).pow(d as u32);
    (1..total).all(|v| invariant_closure(mats, p, d, v).len() == total)
}

/// Is the integer a product of primes from `primes`?
pub fn is_pi_number(mut n: u64, primes: &[u64]) -> bool {
    for &p in primes {
        while n % p == 0 {
            n /= p;
        }
    }
    n == 1
}

/// `{y ∈ H : y^G ⊆ H}`, by discarding elements whose conjugate under some
/// generator of `G` has left the set, until nothing changes.
pub fn core_by_generators(g_gens: &[Permutation], h: &PermSet) -> PermSet {
    let mut s = h.clone();
    loop {
        let next: PermSet = s
            .iter()
            .filter(|y| g_gens.iter().all(|x| s.contains(&y.conjugate_by(x))))
            .cloned()
            .collect();
        if next.len() == s.len() {
            return s;
        }
        s = next;
    }
}

/// `{g ∈ G : every generator of H conjugates into H}`.
pub fn normalizer_by_generators(g: &PermSet, h: &PermSet, h_gens: &[Permutation]) -> PermSet {
    g.iter()
        .filter(|x| h_gens.iter().all(|s| h.contains(&s.conjugate_by(x))))
        .cloned()
        .collect()
}

/// Normal closure grown from `h_gens`: any conjugate of a generator by a
/// generator of `G` that falls outside the current closure becomes a new
/// generator.
pub fn normal_closure_by_generators(degree: usize, g_gens: &[Permutation], h_gens: &[Permutation]) -> PermSet {
    let mut gens: Vec<Permutation> = h_gens.to_vec();
    let mut n = closure(degree, &gens);
    loop {
        let missing = gens
            .iter()
            .flat_map(|s| g_gens.iter().map(move |x| s.conjugate_by(x)))
            .find(|y| !n.contains(y));
        match missing {
            Some(y) => {
                gens.push(y);
                n = closure(degree, &gens);
            }
            None => return n,
        }
    }
}
