//! Normal-subgroup lattice of a group, chief series, radicals, socle,
//! relative Frattini subgroups and solubility classification.

use std::collections::HashMap;

use crate::arith;
use crate::config::budget;
use crate::error::{Error, Result};
use crate::subgroup::{class_representatives, normal_closure, sylow_subgroup, Subgroup};
use crate::table::ElemSet;

/// A pair `K ⊴ L` of subgroups, both invariant in the ambient group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Section {
    pub upper: Subgroup,
    pub lower: Subgroup,
}

impl Section {
    pub fn new(upper: Subgroup, lower: Subgroup) -> Section {
        debug_assert!(lower.is_subgroup_of(&upper));
        Section { upper, lower }
    }

    pub fn order(&self) -> u64 {
        (self.upper.order() / self.lower.order()) as u64
    }

    /// `Some(p)` when the order is a power of the prime `p`.
    pub fn prime(&self) -> Option<u64> {
        arith::is_prime_power(self.order()).map(|(p, _)| p)
    }

    pub fn is_p_group(&self, p: u64) -> bool {
        arith::log_p(self.order(), p).is_some()
    }

    /// Exponent `k` with `|L/K| = p^k`, when the section is a `p`-group.
    pub fn rank(&self) -> Option<u32> {
        arith::is_prime_power(self.order()).map(|(_, k)| k)
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    /// Abelian with every element of order dividing `p`.
    pub fn is_elementary_abelian(&self) -> bool {
        let Some(p) = self.prime() else {
            return false;
        };
        let grp = self.upper.group();
        let gens = self.upper.gens();
        let commute = gens.iter().enumerate().all(|(i, &a)| {
            gens[i + 1..]
                .iter()
                .all(|&b| self.lower.contains(grp.commutator(a, b)))
        });
        commute && gens.iter().all(|&a| self.lower.contains(grp.pow(a, p)))
    }
}

/// Solubility data read off a chief series.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SolubilityProfile {
    pub is_p_soluble: bool,
    pub is_p_supersoluble: bool,
    pub is_supersoluble: bool,
    pub p_rank: u32,
}

/// Every normal subgroup of `g` with its cover relation.
pub struct NormalLattice {
    g: Subgroup,
    nodes: Vec<Subgroup>,
    index: HashMap<ElemSet, usize>,
    covers: Vec<Vec<usize>>,
}

impl NormalLattice {
    /// Joins of normal closures of cyclic subgroups, one per conjugacy class.
    pub fn new(g: &Subgroup) -> Result<NormalLattice> {
        let cap = budget().lattice_nodes;
        let mut closures: Vec<Subgroup> = Vec::new();
        for (x, _) in class_representatives(g) {
            if x == 0 {
                continue;
            }
            let c = normal_closure(g, &Subgroup::generated(g.group(), &[x]));
            if !closures.contains(&c) {
                closures.push(c);
            }
        }
        let mut nodes = vec![Subgroup::trivial(g.group())];
        let mut seen: HashMap<ElemSet, usize> = HashMap::new();
        seen.insert(nodes[0].set().clone(), 0);
        let mut i = 0;
        while i < nodes.len() {
            let n = nodes[i].clone();
            for c in &closures {
                if c.is_subgroup_of(&n) {
                    continue;
                }
                let j = n.join(c);
                if !seen.contains_key(j.set()) {
                    seen.insert(j.set().clone(), nodes.len());
                    nodes.push(j);
                    if nodes.len() > cap {
                        return Err(Error::budget("normal lattice", nodes.len() as u128, cap as u128));
                    }
                }
            }
            i += 1;
        }
        nodes.sort();
        let index: HashMap<ElemSet, usize> =
            nodes.iter().enumerate().map(|(i, n)| (n.set().clone(), i)).collect();
        let mut covers = vec![Vec::new(); nodes.len()];
        for k in 0..nodes.len() {
            let mut found: Vec<usize> = Vec::new();
            for l in k + 1..nodes.len() {
                if nodes[l].order() == nodes[k].order() || !nodes[k].is_subgroup_of(&nodes[l]) {
                    continue;
                }
                if found.iter().any(|&c| nodes[c].is_subgroup_of(&nodes[l])) {
                    continue;
                }
                found.push(l);
            }
            covers[k] = found;
        }
        Ok(NormalLattice {
            g: g.clone(),
            nodes,
            index,
            covers,
        })
    }

    pub fn group(&self) -> &Subgroup {
        &self.g
    }

    /// Normal subgroups sorted by order, then fingerprint.
    pub fn nodes(&self) -> &[Subgroup] {
        &self.nodes
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn position(&self, h: &Subgroup) -> Option<usize> {
        self.index.get(h.set()).copied()
    }

    pub fn is_normal(&self, h: &Subgroup) -> bool {
        self.position(h).is_some()
    }

    fn pos(&self, h: &Subgroup) -> usize {
        self.position(h).expect("subgroup is normal in the lattice's group")
    }

    /// Cover edges `(K, L)` as node indices.
    pub fn cover_edges(&self) -> Vec<(usize, usize)> {
        self.covers
            .iter()
            .enumerate()
            .flat_map(|(k, ls)| ls.iter().map(move |&l| (k, l)))
            .collect()
    }

    /// Indices of the normal subgroups covering node `k`.
    pub fn covers_of(&self, k: usize) -> &[usize] {
        &self.covers[k]
    }

    /// Minimal normal subgroups `M` with `K < M ≤ N`.
    pub fn minimal_over(&self, n: &Subgroup, k: &Subgroup) -> Vec<Subgroup> {
        self.covers[self.pos(k)]
            .iter()
            .map(|&l| &self.nodes[l])
            .filter(|m| m.is_subgroup_of(n))
            .cloned()
            .collect()
    }

    /// Maximal normal subgroups `M` with `K ≤ M < N`.
    pub fn maximal_below(&self, n: &Subgroup, k: &Subgroup) -> Vec<Subgroup> {
        let ni = self.pos(n);
        self.nodes
            .iter()
            .enumerate()
            .filter(|(i, m)| self.covers[*i].contains(&ni) && k.is_subgroup_of(m))
            .map(|(_, m)| m.clone())
            .collect()
    }

    pub fn minimal_normals(&self) -> Vec<Subgroup> {
        self.covers[0].iter().map(|&l| self.nodes[l].clone()).collect()
    }

    /// A maximal chain of covers from `lo` to `hi`. With `smallest_first` the
    /// cover of least order is taken at each step, otherwise the largest cover
    /// still inside `hi`.
    pub fn chain(&self, lo: &Subgroup, hi: &Subgroup, smallest_first: bool) -> Vec<Section> {
        let end = self.pos(hi);
        let mut cur = self.pos(lo);
        let mut out = Vec::new();
        while cur != end {
            let mut cand = self.covers[cur]
                .iter()
                .copied()
                .filter(|&l| self.nodes[l].is_subgroup_of(hi));
            let next = if smallest_first {
                cand.next()
            } else {
                cand.last()
            }
            .expect("lo ≤ hi in the normal lattice");
            out.push(Section::new(self.nodes[next].clone(), self.nodes[cur].clone()));
            cur = next;
        }
        out
    }

    /// Chief series of the whole group, smallest cover first.
    pub fn chief_series(&self) -> Vec<Section> {
        self.chain(&self.nodes[0], &self.g, true)
    }

    /// A second chief series, largest cover first.
    pub fn chief_series_alternate(&self) -> Vec<Section> {
        self.chain(&self.nodes[0], &self.g, false)
    }

    fn largest_where(&self, pred: impl Fn(&Subgroup) -> bool) -> Subgroup {
        let best = self
            .nodes
            .iter()
            .rev()
            .find(|n| pred(n))
            .expect("the trivial subgroup qualifies")
            .clone();
        debug_assert!(self.nodes.iter().filter(|n| pred(n)).all(|n| n.is_subgroup_of(&best)));
        best
    }

    /// `O_{p′}(G)`.
    pub fn o_p_prime(&self, p: u64) -> Subgroup {
        self.largest_where(|n| n.order() as u64 % p != 0)
    }

    /// `O_p(G)`.
    pub fn o_p(&self, p: u64) -> Subgroup {
        self.largest_where(|n| n.is_p_group(p))
    }

    /// `O_{p′,p}(G)`: largest normal `N ⊇ O_{p′}` with `N/O_{p′}` a `p`-group.
    pub fn o_p_prime_p(&self, p: u64) -> Subgroup {
        let base = self.o_p_prime(p);
        self.largest_where(|n| {
            base.is_subgroup_of(n) && arith::log_p((n.order() / base.order()) as u64, p).is_some()
        })
    }

    /// `O_{p′,Φ}(G)`: the preimage of `Φ(G/O_{p′}(G))`.
    pub fn o_p_prime_phi(&self, p: u64) -> Result<Subgroup> {
        self.frattini_relative(&self.o_p_prime(p))
    }

    pub fn socle(&self) -> Subgroup {
        self.minimal_normals()
            .iter()
            .fold(self.nodes[0].clone(), |acc, m| acc.join(m))
    }

    /// True iff every chief factor between `lo` and `hi` is a `p`- or `p′`-group.
    pub fn is_p_soluble_between(&self, lo: &Subgroup, hi: &Subgroup, p: u64) -> bool {
        self.chain(lo, hi, true)
            .iter()
            .all(|s| s.is_p_group(p) || s.order() % p != 0)
    }

    /// True iff `G/N` is `p`-supersoluble.
    pub fn is_p_supersoluble_above(&self, n: &Subgroup, p: u64) -> bool {
        self.chain(n, &self.g, true)
            .iter()
            .all(|s| s.order() == p || s.order() % p != 0)
    }

    /// Largest normal `p`-soluble subgroup.
    pub fn largest_normal_p_soluble(&self, p: u64) -> Subgroup {
        let triv = self.nodes[0].clone();
        self.largest_where(|n| self.is_p_soluble_between(&triv, n, p))
    }

    pub fn classify_solubility(&self, p: u64) -> SolubilityProfile {
        let series = self.chief_series();
        let is_p_soluble = series.iter().all(|s| s.is_p_group(p) || s.order() % p != 0);
        let p_rank = series
            .iter()
            .filter(|s| s.is_p_group(p) && !s.is_trivial())
            .map(|s| s.rank().unwrap_or(0))
            .max()
            .unwrap_or(0);
        let is_supersoluble = series.iter().all(|s| arith::is_prime(s.order()));
        SolubilityProfile {
            is_p_soluble,
            is_p_supersoluble: is_p_soluble && p_rank <= 1,
            is_supersoluble,
            p_rank,
        }
    }

    /// Preimage of `Φ(G/B)` for normal `B`. Ascends through covers `N` of the
    /// current candidate `F`, accepting `N` when no proper subgroup containing
    /// `F` supplements `N` in `G`.
    pub fn frattini_relative(&self, base: &Subgroup) -> Result<Subgroup> {
        let mut cur = self.pos(base);
        'ascend: loop {
            for &l in &self.covers[cur] {
                if !has_proper_supplement(&self.g, &self.nodes[l], &self.nodes[cur])? {
                    cur = l;
                    continue 'ascend;
                }
            }
            return Ok(self.nodes[cur].clone());
        }
    }

    /// `Φ(G)`.
    pub fn frattini(&self) -> Result<Subgroup> {
        self.frattini_relative(&self.nodes[0])
    }
}

/// Is there `H < G` with `F ≤ H` and `HN = G`, for a cover `F < N` of
/// normal subgroups?
///
/// A nonabelian `N/F` always has one, as `Φ(G/F)` is nilpotent. For abelian
/// `N/F` a proper supplement is a complement (its meet with `N` is normal and
/// below the minimal `N/F`), and by Gaschütz a complement exists iff one exists
/// in a Sylow subgroup `SF` of `G` over `F`. That complement is searched as
/// `⟨F, s·t_s⟩` over generators `s` of `SF` and transversal elements `t_s` of
/// `F` in `N`, depth first, pruning any partial closure meeting `N` above `F`.
fn has_proper_supplement(g: &Subgroup, n: &Subgroup, f: &Subgroup) -> Result<bool> {
    let grp = g.group();
    let abelian = n
        .gens()
        .iter()
        .all(|&x| n.gens().iter().all(|&y| f.contains(grp.commutator(x, y))));
    if !abelian {
        return Ok(true);
    }
    let p = arith::prime_divisors((n.order() / f.order()) as u64)
        .into_iter()
        .next()
        .expect("a cover has nontrivial order");
    let t = sylow_subgroup(g, p).join(f);
    let mut trans: Vec<usize> = Vec::new();
    let mut covered = grp.empty_set();
    for x in n.elements() {
        if covered.contains(x) {
            continue;
        }
        trans.push(x);
        for y in f.elements() {
            covered.insert(grp.mul(x, y));
        }
    }
    // Any generating set works; dropping redundant ones shrinks the search.
    let mut span = f.clone();
    let mut gens = Vec::new();
    for &s in t.gens() {
        if !span.contains(s) {
            span = span.join_element(s);
            gens.push(s);
        }
    }
    let mut visited = 0usize;
    complement_dfs(n, f, &trans, &gens, f.clone(), &mut visited)
}

fn complement_dfs(
    n: &Subgroup,
    f: &Subgroup,
    trans: &[usize],
    gens: &[usize],
    h: Subgroup,
    visited: &mut usize,
) -> Result<bool> {
    let Some((&s, rest)) = gens.split_first() else {
        return Ok(true);
    };
    let grp = n.group();
    let cap = budget().lifts as usize;
    for &t in trans {
        *visited += 1;
        if *visited > cap {
            return Err(Error::budget("complement search", *visited as u128, cap as u128));
        }
        let next = h.join_element(grp.mul(s, t));
        if next.meet(n).order() != f.order() {
            continue;
        }
        if complement_dfs(n, f, trans, rest, next, visited)? {
            return Ok(true);
        }
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bsgs::PermGroup;
    use crate::perm::Permutation;
    use crate::subgroup::frattini_by_maximal_subgroups;
    use crate::table::FiniteGroup;

    fn group(n: usize, gens: &[&str]) -> Subgroup {
        let perms = gens.iter().map(|s| Permutation::parse(n, s).unwrap()).collect();
        Subgroup::whole(&FiniteGroup::new(PermGroup::new(n, perms).unwrap()).unwrap())
    }

    fn orders(s: &[Section]) -> Vec<u64> {
        s.iter().map(|x| x.order()).collect()
    }

    #[test]
    fn sym4_lattice() {
        let g = group(4, &["(1,2)", "(1,2,3,4)"]);
        let lat = NormalLattice::new(&g).unwrap();
        let sizes: Vec<usize> = lat.nodes().iter().map(|n| n.order()).collect();
        assert_eq!(sizes, vec![1, 4, 12, 24]);
        assert_eq!(lat.cover_edges().len(), 3);
        assert_eq!(orders(&lat.chief_series()), vec![4, 3, 2]);
        assert_eq!(lat.o_p(2).order(), 4);
        assert_eq!(lat.o_p_prime(2).order(), 1);
        assert_eq!(lat.o_p_prime_p(2).order(), 4);
        assert_eq!(lat.socle().order(), 4);
        assert_eq!(lat.frattini().unwrap().order(), 1);
        let prof = lat.classify_solubility(2);
        assert!(prof.is_p_soluble && !prof.is_p_supersoluble);
        assert_eq!(prof.p_rank, 2);
        assert!(lat.classify_solubility(3).is_p_supersoluble);
        let a4 = &lat.nodes()[2];
        assert_eq!(lat.maximal_below(&g, &lat.nodes()[0]), vec![a4.clone()]);
    }

    #[test]
    fn elementary_abelian_and_simple() {
        let g = group(6, &["(1,2,3)", "(4,5,6)"]);
        assert_eq!(NormalLattice::new(&g).unwrap().len(), 6);
        let a5 = group(5, &["(1,2,3,4,5)", "(1,2,3)"]);
        let lat = NormalLattice::new(&a5).unwrap();
        assert_eq!(lat.len(), 2);
        assert_eq!(lat.largest_normal_p_soluble(5).order(), 1);
        assert_eq!(lat.socle().order(), 60);
    }

    #[test]
    fn frattini_routes_agree() {
        for gens in [
            vec!["(1,2,3,4,5,6,7,8)"],
            vec!["(1,2,3,4)", "(1,3)"],
            vec!["(1,2,3,4)(5,6,7,8)", "(1,5,3,7)(2,8,4,6)"],
            vec!["(1,2,3,4,5,6)", "(1,6)(2,5)(3,4)"],
            vec!["(1,2,3)", "(1,2)(3,4)", "(5,6,7,8)"],
        ] {
            let g = group(8, &gens);
            let lat = NormalLattice::new(&g).unwrap();
            assert_eq!(lat.frattini().unwrap(), frattini_by_maximal_subgroups(&g).unwrap());
        }
    }

    #[test]
    fn jordan_hoelder_on_dihedral() {
        let g = group(6, &["(1,2,3,4,5,6)", "(1,6)(2,5)(3,4)"]);
        let lat = NormalLattice::new(&g).unwrap();
        let mut a = orders(&lat.chief_series());
        let mut b = orders(&lat.chief_series_alternate());
        a.sort();
        b.sort();
        assert_eq!(a, b);
    }
}
