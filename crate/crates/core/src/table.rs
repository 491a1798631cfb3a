//! Enumerated finite groups: every element indexed, with a full
//! multiplication table. Subgroups of such a group are element bitsets.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::bsgs::PermGroup;
use crate::config::budget;
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Bitset over the element indices of a [`FiniteGroup`].
///
/// Two subgroups of the same group are equal iff their sets are equal, so the
/// set doubles as the canonical fingerprint (the sorted element list).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElemSet {
    words: Vec<u64>,
}

impl ElemSet {
    pub fn empty(n: usize) -> ElemSet {
        ElemSet {
            words: vec![0; n.div_ceil(64)],
        }
    }

    pub fn full(n: usize) -> ElemSet {
        let mut s = ElemSet::empty(n);
        for i in 0..n {
            s.insert(i);
        }
        s
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        self.words[i >> 6] >> (i & 63) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, i: usize) -> bool {
        let w = &mut self.words[i >> 6];
        let bit = 1u64 << (i & 63);
        let fresh = *w & bit == 0;
        *w |= bit;
        fresh
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_subset(&self, other: &ElemSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn intersection(&self, other: &ElemSet) -> ElemSet {
        ElemSet {
            words: self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect(),
        }
    }

    pub fn union(&self, other: &ElemSet) -> ElemSet {
        ElemSet {
            words: self.words.iter().zip(&other.words).map(|(a, b)| a | b).collect(),
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * 64 + b)
            })
        })
    }
}

impl fmt::Debug for ElemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// A permutation group with all elements enumerated.
pub struct FiniteGroup {
    perm_group: PermGroup,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, u32>,
    mul: Vec<u16>,
    inv: Vec<u32>,
    orders: Vec<u32>,
    gens: Vec<usize>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("degree", &self.perm_group.degree())
            .field("order", &self.elements.len())
            .finish()
    }
}

impl FiniteGroup {
    /// Enumerates `g` and builds its multiplication table. Fails if the order
    /// exceeds the table budget.
    pub fn new(g: PermGroup) -> Result<Arc<FiniteGroup>> {
        let b = budget();
        let order = g.order();
        let cap = b.table_order.min(u16::MAX as usize + 1);
        if order > cap as u128 {
            return Err(Error::budget("multiplication table", order, cap as u128));
        }
        let elements = g.elements(b.elements)?;
        Ok(Arc::new(FiniteGroup::from_elements(g, elements)))
    }

    fn from_elements(perm_group: PermGroup, elements: Vec<Permutation>) -> FiniteGroup {
        let n = elements.len();
        debug_assert!(elements[0].is_identity());
        let index: HashMap<Permutation, u32> = elements
            .iter()
            .enumerate()
            .map(|(i, e)| (e.clone(), i as u32))
            .collect();
        let gen_perms: Vec<Permutation> = perm_group.generators().to_vec();
        let gens: Vec<usize> = gen_perms.iter().map(|g| index[g] as usize).collect();
        // Right multiplication by each generator.
        let rgen: Vec<Vec<u32>> = gen_perms
            .iter()
            .map(|s| elements.iter().map(|e| index[&e.compose(s)]).collect())
            .collect();
        // Spanning tree of the Cayley graph: e_j = e_parent * gen.
        let mut parent = vec![(u32::MAX, 0usize); n];
        let mut bfs = vec![0usize];
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut k = 0;
        while k < bfs.len() {
            let x = bfs[k];
            for (s, r) in rgen.iter().enumerate() {
                let y = r[x] as usize;
                if !seen[y] {
                    seen[y] = true;
                    parent[y] = (x as u32, s);
                    bfs.push(y);
                }
            }
            k += 1;
        }
        assert_eq!(bfs.len(), n, "generators do not reach every element");
        let mut mul = vec![0u16; n * n];
        for i in 0..n {
            let row = &mut mul[i * n..(i + 1) * n];
            row[0] = i as u16;
            for &j in &bfs[1..] {
                let (pj, s) = parent[j];
                row[j] = rgen[s][row[pj as usize] as usize] as u16;
            }
        }
        let mut inv = vec![0u32; n];
        for i in 0..n {
            let row = &mul[i * n..(i + 1) * n];
            let j = row.iter().position(|&x| x == 0).expect("inverse exists");
            inv[i] = j as u32;
        }
        let mut orders = vec![0u32; n];
        for i in 0..n {
            let mut x = i;
            let mut k = 1;
            while x != 0 {
                x = mul[x * n + i] as usize;
                k += 1;
            }
            orders[i] = k;
        }
        FiniteGroup {
            perm_group,
            elements,
            index,
            mul,
            inv,
            orders,
            gens,
        }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn perm_group(&self) -> &PermGroup {
        &self.perm_group
    }

    pub fn degree(&self) -> usize {
        self.perm_group.degree()
    }

    /// Indices of the group's generators.
    pub fn generators(&self) -> &[usize] {
        &self.gens
    }

    pub fn element(&self, i: usize) -> &Permutation {
        &self.elements[i]
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.index.get(p).map(|&i| i as usize)
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.elements.len() + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    /// `g⁻¹ h g`.
    #[inline]
    pub fn conj(&self, h: usize, g: usize) -> usize {
        self.mul(self.mul(self.inv(g), h), g)
    }

    /// `a⁻¹ b⁻¹ a b`.
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))
    }

    pub fn pow(&self, a: usize, e: u64) -> usize {
        let mut acc = 0;
        for _ in 0..e {
            acc = self.mul(acc, a);
        }
        acc
    }

    pub fn elem_order(&self, a: usize) -> u64 {
        self.orders[a] as u64
    }

    pub fn empty_set(&self) -> ElemSet {
        ElemSet::empty(self.order())
    }

    /// Image of a set under conjugation by `g`.
    pub fn conj_set(&self, set: &ElemSet, g: usize) -> ElemSet {
        let gi = self.inv(g);
        let mut out = self.empty_set();
        for h in set.iter() {
            out.insert(self.mul(self.mul(gi, h), g));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_matches_composition() {
        let g = PermGroup::new(
            4,
            vec![
                Permutation::parse(4, "(1,2)").unwrap(),
                Permutation::parse(4, "(1,2,3,4)").unwrap(),
            ],
        )
        .unwrap();
        let t = FiniteGroup::new(g).unwrap();
        assert_eq!(t.order(), 24);
        for a in 0..24 {
            for b in 0..24 {
                let prod = t.element(a).compose(t.element(b));
                assert_eq!(t.index_of(&prod), Some(t.mul(a, b)));
            }
            assert_eq!(t.elem_order(a), t.element(a).order());
            assert_eq!(t.mul(a, t.inv(a)), 0);
        }
    }

    #[test]
    fn bitset_ops() {
        let mut a = ElemSet::empty(130);
        a.insert(3);
        a.insert(129);
        let mut b = ElemSet::empty(130);
        b.insert(3);
        assert!(b.is_subset(&a));
        assert!(!a.is_subset(&b));
        assert_eq!(a.iter().collect::<Vec<_>>(), vec![3, 129]);
        assert_eq!(a.intersection(&b).len(), 1);
    }
}
