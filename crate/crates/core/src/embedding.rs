//! The partial Π and partial 𝓛-Π embedding properties and the hypothesis
//! bundles built from them.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

pub use crate::arith::is_pi_number;
use crate::arith::prime_divisors;
use crate::error::Result;
use crate::normal::NormalLattice;
use crate::subgroup::{
    conjugacy_class_size, cyclic_subgroups_of_order, is_quaternion_free, normal_closure, normal_core,
    subgroups_of_order, sylow_subgroup, Subgroup,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Property {
    PartialPi,
    PartialLPi,
}

impl std::str::FromStr for Property {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "partial-pi" => Ok(Property::PartialPi),
            "partial-l-pi" => Ok(Property::PartialLPi),
            _ => Err(format!("unknown property {s:?}")),
        }
    }
}

/// One index test: `|G : N_G(X)|` against `π(X/K)`, with `X = (H ∩ L)K`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeCheck {
    pub lower: Subgroup,
    pub upper: Subgroup,
    pub x: Subgroup,
    pub index: u64,
    pub primes: BTreeSet<u64>,
    pub passes: bool,
}

impl EdgeCheck {
    fn compute(g: &Subgroup, h: &Subgroup, lower: &Subgroup, upper: &Subgroup) -> EdgeCheck {
        let x = h.meet(upper).join(lower);
        let primes = prime_divisors((x.order() / lower.order()) as u64);
        let index = if primes.is_empty() {
            1
        } else {
            conjugacy_class_size(g, &x) as u64
        };
        let passes = is_pi_number(index, &primes);
        EdgeCheck {
            lower: lower.clone(),
            upper: upper.clone(),
            x,
            index,
            primes,
            passes,
        }
    }

    /// Recomputes the check from scratch and compares.
    pub fn revalidate(&self, g: &Subgroup, h: &Subgroup) -> bool {
        *self == EdgeCheck::compute(g, h, &self.lower, &self.upper)
    }
}

#[derive(Clone, Debug)]
pub struct PropertyVerdict {
    pub property: Property,
    pub holds: bool,
    /// `H ⊴ G`, decided without index checks.
    pub normal: bool,
    /// Success: the checks along an accepting chief series (partial Π) or for
    /// every maximal `K` (partial 𝓛-Π). Failure: the failing checks.
    pub witnesses: Vec<EdgeCheck>,
}

impl PropertyVerdict {
    /// Re-checks every witness; a failing verdict must carry at least one
    /// failing check and a passing one only passing checks.
    pub fn revalidate(&self, g: &Subgroup, h: &Subgroup) -> bool {
        let consistent = self.witnesses.iter().all(|w| w.revalidate(g, h) && w.passes == self.holds);
        consistent && (self.holds || !self.witnesses.is_empty())
    }
}

/// Partial 𝓛-Π: normal, or `|G : N_G(HK)|` is a `π(HK/K)`-number for every
/// maximal `G`-invariant `K` of `H^G` containing `H_G`.
pub fn satisfies_partial_l_pi(lat: &NormalLattice, h: &Subgroup) -> PropertyVerdict {
    let g = lat.group();
    if lat.is_normal(h) {
        return PropertyVerdict {
            property: Property::PartialLPi,
            holds: true,
            normal: true,
            witnesses: Vec::new(),
        };
    }
    let closure = normal_closure(g, h);
    let core = normal_core(g, h);
    let checks: Vec<EdgeCheck> = lat
        .maximal_below(&closure, &core)
        .iter()
        .map(|k| EdgeCheck::compute(g, h, k, &closure))
        .collect();
    let holds = checks.iter().all(|c| c.passes);
    PropertyVerdict {
        property: Property::PartialLPi,
        holds,
        normal: false,
        witnesses: checks.into_iter().filter(|c| c.passes == holds).collect(),
    }
}

/// Reachability from `from` to `to` through cover edges accepted by `edge`.
/// Returns the path of edges on success and every rejected edge leaving the
/// reachable set on failure.
fn search(
    lat: &NormalLattice,
    from: usize,
    to: usize,
    mut edge: impl FnMut(usize, usize) -> EdgeCheck,
) -> (bool, Vec<EdgeCheck>) {
    let n = lat.len();
    let mut parent: Vec<Option<(usize, EdgeCheck)>> = vec![None; n];
    let mut reached = vec![false; n];
    reached[from] = true;
    let mut cut = Vec::new();
    let top = &lat.nodes()[to];
    // Nodes are sorted by order, so a single forward sweep suffices.
    for k in from..n {
        if !reached[k] {
            continue;
        }
        if k == to {
            break;
        }
        for &l in lat.covers_of(k) {
            if !lat.nodes()[l].is_subgroup_of(top) {
                continue;
            }
            let c = edge(k, l);
            if c.passes {
                if !reached[l] {
                    reached[l] = true;
                    parent[l] = Some((k, c));
                }
            } else {
                cut.push(c);
            }
        }
    }
    if !reached[to] {
        return (false, cut);
    }
    let mut path = Vec::new();
    let mut cur = to;
    while cur != from {
        let (prev, c) = parent[cur].take().expect("reached nodes have parents");
        path.push(c);
        cur = prev;
    }
    path.reverse();
    (true, path)
}

/// Partial Π: some chief series `1 = G_0 < … < G_n = G` has every factor
/// passing the index test for `X = (H ∩ G_i)G_{i-1}`.
pub fn satisfies_partial_pi(lat: &NormalLattice, h: &Subgroup) -> PropertyVerdict {
    let g = lat.group();
    let nodes = lat.nodes();
    let (holds, witnesses) = search(lat, 0, nodes.len() - 1, |k, l| {
        EdgeCheck::compute(g, h, &nodes[k], &nodes[l])
    });
    PropertyVerdict {
        property: Property::PartialPi,
        holds,
        normal: lat.is_normal(h),
        witnesses,
    }
}

/// Partial Π decided on the interval `[H_G, H^G]` only; factors outside it
/// pass automatically.
pub fn satisfies_partial_pi_between_core_and_closure(lat: &NormalLattice, h: &Subgroup) -> bool {
    let g = lat.group();
    let nodes = lat.nodes();
    let lo = lat.position(&normal_core(g, h)).expect("core is normal");
    let hi = lat.position(&normal_closure(g, h)).expect("closure is normal");
    search(lat, lo, hi, |k, l| EdgeCheck::compute(g, h, &nodes[k], &nodes[l])).0
}

pub fn satisfies(lat: &NormalLattice, h: &Subgroup, prop: Property) -> PropertyVerdict {
    match prop {
        Property::PartialPi => satisfies_partial_pi(lat, h),
        Property::PartialLPi => satisfies_partial_l_pi(lat, h),
    }
}

/// Outcome of a hypothesis over a family of subgroups.
#[derive(Clone, Debug)]
pub struct HypothesisCheck {
    pub holds: bool,
    pub checked: usize,
    pub failures: Vec<Subgroup>,
}

fn check_all(lat: &NormalLattice, subs: &[Subgroup], prop: Property) -> HypothesisCheck {
    let failures: Vec<Subgroup> = subs
        .iter()
        .filter(|h| !satisfies(lat, h, prop).holds)
        .cloned()
        .collect();
    HypothesisCheck {
        holds: failures.is_empty(),
        checked: subs.len(),
        failures,
    }
}

/// Every subgroup of `P` of order `d`, plus the cyclic subgroups of order 4
/// when `d = 2` and `P` is not quaternion-free, has the property.
pub fn hypothesis_order_d(lat: &NormalLattice, pg: &Subgroup, d: u64, prop: Property) -> Result<HypothesisCheck> {
    let mut subs = subgroups_of_order(pg, d)?;
    if d == 2 && pg.order() % 2 == 0 && !is_quaternion_free(pg)? {
        subs.extend(cyclic_subgroups_of_order(pg, 4));
    }
    Ok(check_all(lat, &subs, prop))
}

/// Every cyclic subgroup of a Sylow `p`-subgroup of `E` of order `p`, or of
/// order 4 when that Sylow is not quaternion-free, has the property.
pub fn hypothesis_minimal_cyclic(lat: &NormalLattice, e: &Subgroup, p: u64, prop: Property) -> Result<HypothesisCheck> {
    let pg = sylow_subgroup(e, p);
    let mut subs = cyclic_subgroups_of_order(&pg, p);
    if p == 2 && pg.order() > 1 && !is_quaternion_free(&pg)? {
        subs.extend(cyclic_subgroups_of_order(&pg, 4));
    }
    Ok(check_all(lat, &subs, prop))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bsgs::PermGroup;
    use crate::perm::Permutation;
    use crate::table::FiniteGroup;

    fn group(n: usize, gens: &[&str]) -> Subgroup {
        let perms = gens.iter().map(|s| Permutation::parse(n, s).unwrap()).collect();
        Subgroup::whole(&FiniteGroup::new(PermGroup::new(n, perms).unwrap()).unwrap())
    }

    fn sub(g: &Subgroup, gens: &[&str]) -> Subgroup {
        let perms: Vec<_> = gens
            .iter()
            .map(|s| Permutation::parse(g.group().degree(), s).unwrap())
            .collect();
        Subgroup::from_perms(g.group(), &perms).unwrap()
    }

    #[test]
    fn four_cycle_in_sym4() {
        let g = group(4, &["(1,2)", "(1,2,3,4)"]);
        let lat = NormalLattice::new(&g).unwrap();
        let h = sub(&g, &["(1,2,3,4)"]);
        let l = satisfies_partial_l_pi(&lat, &h);
        assert!(l.holds);
        assert_eq!(l.witnesses.len(), 1);
        assert_eq!(l.witnesses[0].index, 1);
        let v = satisfies_partial_pi(&lat, &h);
        assert!(!v.holds);
        assert!(v.revalidate(&g, &h));
        assert!(!satisfies_partial_pi_between_core_and_closure(&lat, &h));
        let p = sylow_subgroup(&g, 2);
        assert!(hypothesis_order_d(&lat, &p, 4, Property::PartialLPi).unwrap().holds);
    }

    #[test]
    fn pi_numbers() {
        let s: BTreeSet<u64> = [2, 3].into();
        assert!(is_pi_number(6, &s));
        assert!(!is_pi_number(6, &[2].into()));
        assert!(is_pi_number(1, &BTreeSet::new()));
    }

    #[test]
    fn normal_subgroups_pass_both() {
        let g = group(4, &["(1,2)", "(1,2,3,4)"]);
        let lat = NormalLattice::new(&g).unwrap();
        for n in lat.nodes() {
            assert!(satisfies_partial_pi(&lat, n).holds);
            assert!(satisfies_partial_l_pi(&lat, n).holds);
        }
    }
}
