//! Quotients `G/N` realised as the permutation action on right cosets.

use std::sync::Arc;

use crate::bsgs::PermGroup;
use crate::error::{Error, Result};
use crate::perm::{Permutation, MAX_DEGREE};
use crate::subgroup::Subgroup;
use crate::table::{ElemSet, FiniteGroup};

/// `G/N` with the projection from the parent table.
pub struct Quotient {
    group: Arc<FiniteGroup>,
    projection: Vec<u32>,
    kernel: Subgroup,
}

impl Quotient {
    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn perm_group(&self) -> &PermGroup {
        self.group.perm_group()
    }

    pub fn kernel(&self) -> &Subgroup {
        &self.kernel
    }

    /// Image of a parent element.
    pub fn project(&self, x: usize) -> usize {
        self.projection[x] as usize
    }

    /// `HN/N`.
    pub fn image(&self, h: &Subgroup) -> Subgroup {
        let gens: Vec<usize> = h.gens().iter().map(|&x| self.project(x)).collect();
        Subgroup::generated(&self.group, &gens)
    }

    /// Full preimage of a subgroup of the quotient.
    pub fn preimage(&self, q: &Subgroup) -> Subgroup {
        let parent = self.kernel.group();
        let mut set = parent.empty_set();
        for (x, &img) in self.projection.iter().enumerate() {
            if img != u32::MAX && q.contains(img as usize) {
                set.insert(x);
            }
        }
        Subgroup::from_set(parent, set)
    }
}

/// The action of `g` on right cosets of the normal subgroup `n`.
pub fn coset_action(g: &Subgroup, n: &Subgroup) -> Result<Quotient> {
    if !n.is_subgroup_of(g) || !n.is_normal_in(g) {
        return Err(Error::Precondition("kernel is not a normal subgroup".into()));
    }
    let grp = g.group();
    let index = g.order() / n.order();
    if index > MAX_DEGREE {
        return Err(Error::budget("coset action degree", index as u128, MAX_DEGREE as u128));
    }
    let mut coset = vec![u32::MAX; grp.order()];
    let mut reps = Vec::with_capacity(index);
    for x in g.elements() {
        if coset[x] != u32::MAX {
            continue;
        }
        let c = reps.len() as u32;
        reps.push(x);
        for y in n.elements() {
            coset[grp.mul(y, x)] = c;
        }
    }
    let act = |x: usize| -> Permutation {
        let images = reps.iter().map(|&r| coset[grp.mul(r, x)] as usize).collect();
        Permutation::from_images(images).expect("coset action is a bijection")
    };
    let gens = g.gens().iter().map(|&s| act(s)).collect();
    let pg = PermGroup::new(index, gens)?;
    let qt = FiniteGroup::new(pg)?;
    let mut projection = vec![u32::MAX; grp.order()];
    for x in g.elements() {
        let i = qt.index_of(&act(x)).expect("image lies in the quotient");
        projection[x] = i as u32;
    }
    Ok(Quotient {
        group: qt,
        projection,
        kernel: n.clone(),
    })
}

/// Set of parent elements mapping into `q`, without forming a subgroup.
pub fn preimage_set(quot: &Quotient, q: &ElemSet) -> ElemSet {
    let parent = quot.kernel.group();
    let mut set = parent.empty_set();
    for (x, &img) in quot.projection.iter().enumerate() {
        if img != u32::MAX && q.contains(img as usize) {
            set.insert(x);
        }
    }
    set
}
