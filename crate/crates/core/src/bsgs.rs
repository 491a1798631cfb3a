//! Permutation groups backed by a deterministic Schreier–Sims base and
//! strong generating set.

use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::perm::Permutation;

const NONE: u32 = u32::MAX;

/// One level of the stabiliser chain: the orbit of `base` under the strong
/// generators fixing all earlier base points, with a transversal.
#[derive(Debug, Clone)]
struct Level {
    base: usize,
    gens: Vec<Permutation>,
    /// `pos[pt]` indexes into `reps` (or `NONE` if `pt` is not in the orbit).
    pos: Vec<u32>,
    /// Orbit points in discovery order; `reps[i]` maps `base` to `orbit[i]`.
    orbit: Vec<usize>,
    reps: Vec<Permutation>,
}

impl Level {
    fn build(base: usize, gens: Vec<Permutation>, n: usize) -> Level {
        let mut lvl = Level {
            base,
            gens,
            pos: vec![NONE; n],
            orbit: vec![base],
            reps: vec![Permutation::identity(n)],
        };
        lvl.pos[base] = 0;
        let mut i = 0;
        while i < lvl.orbit.len() {
            let pt = lvl.orbit[i];
            for s in &lvl.gens {
                let q = s.image(pt);
                if lvl.pos[q] == NONE {
                    lvl.pos[q] = lvl.orbit.len() as u32;
                    lvl.orbit.push(q);
                    let r = lvl.reps[i].compose(s);
                    lvl.reps.push(r);
                }
            }
            i += 1;
        }
        lvl
    }

    fn rep(&self, pt: usize) -> Option<&Permutation> {
        match self.pos[pt] {
            NONE => None,
            i => Some(&self.reps[i as usize]),
        }
    }
}

#[derive(Debug, Clone)]
struct Chain {
    levels: Vec<Level>,
}

/// A permutation group given by generators. The stabiliser chain is built
/// lazily on first use and never changes afterwards.
#[derive(Debug)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    chain: OnceLock<Chain>,
}

impl Clone for PermGroup {
    fn clone(&self) -> Self {
        let chain = OnceLock::new();
        if let Some(c) = self.chain.get() {
            let _ = chain.set(c.clone());
        }
        PermGroup {
            degree: self.degree,
            generators: self.generators.clone(),
            chain,
        }
    }
}

impl PermGroup {
    /// Generated group. Identity generators are dropped; an empty list gives
    /// the trivial group.
    pub fn new(degree: usize, gens: Vec<Permutation>) -> Result<PermGroup> {
        if degree == 0 {
            return Err(Error::Input("degree must be at least 1".into()));
        }
        for g in &gens {
            if g.degree() != degree {
                return Err(Error::Input(format!(
                    "generator {g} has degree {}, expected {degree}",
                    g.degree()
                )));
            }
        }
        let mut generators: Vec<Permutation> = Vec::new();
        for g in gens {
            if !g.is_identity() && !generators.contains(&g) {
                generators.push(g);
            }
        }
        Ok(PermGroup {
            degree,
            generators,
            chain: OnceLock::new(),
        })
    }

    /// Builds the group and its stabiliser chain eagerly.
    pub fn with_bsgs(degree: usize, gens: Vec<Permutation>) -> Result<PermGroup> {
        let g = PermGroup::new(degree, gens)?;
        g.chain();
        Ok(g)
    }

    pub fn trivial(degree: usize) -> PermGroup {
        PermGroup::new(degree, Vec::new()).expect("degree >= 1")
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Non-identity generators (empty for the trivial group).
    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn identity(&self) -> Permutation {
        Permutation::identity(self.degree)
    }

    fn chain(&self) -> &Chain {
        self.chain.get_or_init(|| schreier_sims(self.degree, &self.generators))
    }

    pub fn base(&self) -> Vec<usize> {
        self.chain().levels.iter().map(|l| l.base).collect()
    }

    /// Orbit lengths along the base.
    pub fn transversal_lengths(&self) -> Vec<usize> {
        self.chain().levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn strong_generators(&self) -> Vec<Permutation> {
        let mut out: Vec<Permutation> = Vec::new();
        for l in &self.chain().levels {
            for g in &l.gens {
                if !out.contains(g) {
                    out.push(g.clone());
                }
            }
        }
        out
    }

    /// Exact order: product of the transversal lengths.
    ///
    /// Panics if the order does not fit in `u128` (degree above 34 with a
    /// full symmetric group); corpus groups are far below that.
    pub fn order(&self) -> u128 {
        self.chain()
            .levels
            .iter()
            .try_fold(1u128, |acc, l| acc.checked_mul(l.orbit.len() as u128))
            .expect("group order overflows u128")
    }

    /// Sifts `x` through the chain; returns the residue and the level where
    /// sifting stopped (`levels.len()` if it passed every level).
    fn strip(&self, x: &Permutation) -> (Permutation, usize) {
        strip(&self.chain().levels, x, 0)
    }

    pub fn contains(&self, x: &Permutation) -> Result<bool> {
        if x.degree() != self.degree {
            return Err(Error::Input(format!(
                "degree mismatch: element has degree {}, group has {}",
                x.degree(),
                self.degree
            )));
        }
        let (r, _) = self.strip(x);
        Ok(r.is_identity())
    }

    /// All elements, in stabiliser-chain enumeration order (identity first).
    pub fn elements(&self, budget: u64) -> Result<Vec<Permutation>> {
        let order = self.order();
        if order > budget as u128 {
            return Err(Error::budget("element enumeration", order, budget as u128));
        }
        let levels = &self.chain().levels;
        // g = u_{k-1} ... u_1 u_0, with u_i from level i.
        let mut acc = vec![self.identity()];
        for l in levels.iter().rev() {
            let mut next = Vec::with_capacity(acc.len() * l.reps.len());
            for a in &acc {
                for r in &l.reps {
                    next.push(a.compose(r));
                }
            }
            acc = next;
        }
        Ok(acc)
    }

    pub fn is_trivial(&self) -> bool {
        self.generators.is_empty()
    }

    /// Orbit of a 0-based point under the generators.
    pub fn orbit(&self, pt: usize) -> Vec<usize> {
        let mut seen = vec![false; self.degree];
        let mut orbit = vec![pt];
        seen[pt] = true;
        let mut i = 0;
        while i < orbit.len() {
            for g in &self.generators {
                let q = g.image(orbit[i]);
                if !seen[q] {
                    seen[q] = true;
                    orbit.push(q);
                }
            }
            i += 1;
        }
        orbit
    }

    /// Uniformly random element, via one random transversal entry per level.
    pub fn random_element<R: rand::Rng>(&self, rng: &mut R) -> Permutation {
        let mut acc = self.identity();
        for l in self.chain().levels.iter().rev() {
            let r = &l.reps[rng.gen_range(0..l.reps.len())];
            acc = acc.compose(r);
        }
        acc
    }
}

fn strip(levels: &[Level], x: &Permutation, start: usize) -> (Permutation, usize) {
    let mut h = x.clone();
    for (i, l) in levels.iter().enumerate().skip(start) {
        let beta = h.image(l.base);
        match l.rep(beta) {
            None => return (h, i),
            Some(u) => h = h.compose(&u.inverse()),
        }
    }
    (h, levels.len())
}

fn fixes_all(g: &Permutation, pts: &[usize]) -> bool {
    pts.iter().all(|&b| g.image(b) == b)
}

/// Smallest point moved by `g` that is not already a base point.
fn new_base_point(g: &Permutation, base: &[usize]) -> usize {
    (0..g.degree())
        .find(|&i| g.image(i) != i && !base.contains(&i))
        .expect("non-identity residue moves a point outside the base")
}

/// Deterministic Schreier–Sims: processes levels from the bottom up,
/// sifting every Schreier generator and restarting at the level where a new
/// strong generator is inserted.
fn schreier_sims(n: usize, gens: &[Permutation]) -> Chain {
    let mut base: Vec<usize> = Vec::new();
    let mut strong: Vec<Permutation> = Vec::new();
    for g in gens {
        if g.is_identity() {
            continue;
        }
        if fixes_all(g, &base) {
            base.push(new_base_point(g, &base));
        }
        strong.push(g.clone());
    }
    let level_gens = |strong: &[Permutation], base: &[usize], i: usize| -> Vec<Permutation> {
        strong
            .iter()
            .filter(|g| fixes_all(g, &base[..i]))
            .cloned()
            .collect()
    };
    let mut levels: Vec<Level> = (0..base.len())
        .map(|i| Level::build(base[i], level_gens(&strong, &base, i), n))
        .collect();

    let mut i = levels.len() as isize - 1;
    while i >= 0 {
        let iu = i as usize;
        let mut inserted: Option<usize> = None;
        'scan: for oi in 0..levels[iu].orbit.len() {
            let beta = levels[iu].orbit[oi];
            for si in 0..levels[iu].gens.len() {
                let lvl = &levels[iu];
                let s = &lvl.gens[si];
                let u_beta = &lvl.reps[oi];
                let u_img = lvl.rep(s.image(beta)).expect("orbit closed");
                let h = u_beta.compose(s).compose(&u_img.inverse());
                if h.is_identity() {
                    continue;
                }
                let (r, j) = strip(&levels, &h, iu + 1);
                if r.is_identity() {
                    continue;
                }
                if j == levels.len() {
                    base.push(new_base_point(&r, &base));
                }
                strong.push(r);
                for l in iu + 1..=j {
                    let lv = Level::build(base[l], level_gens(&strong, &base, l), n);
                    if l < levels.len() {
                        levels[l] = lv;
                    } else {
                        levels.push(lv);
                    }
                }
                inserted = Some(j);
                break 'scan;
            }
        }
        match inserted {
            Some(j) => i = j as isize,
            None => i -= 1,
        }
    }
    Chain { levels }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: usize, s: &str) -> Permutation {
        Permutation::parse(n, s).unwrap()
    }

    #[test]
    fn symmetric_orders() {
        let s4 = PermGroup::new(4, vec![p(4, "(1,2)"), p(4, "(1,2,3,4)")]).unwrap();
        assert_eq!(s4.order(), 24);
        let s8 = PermGroup::new(8, vec![p(8, "(1,2)"), p(8, "(1,2,3,4,5,6,7,8)")]).unwrap();
        assert_eq!(s8.order(), 40320);
        assert_eq!(PermGroup::trivial(4).order(), 1);
    }

    #[test]
    fn base_rule_is_smallest_moved_point() {
        let g = PermGroup::new(6, vec![p(6, "(3,4,5)")]).unwrap();
        assert_eq!(g.base(), vec![2]);
    }

    #[test]
    fn membership() {
        let a4 = PermGroup::new(4, vec![p(4, "(1,2,3)"), p(4, "(2,3,4)")]).unwrap();
        assert_eq!(a4.order(), 12);
        assert!(a4.contains(&p(4, "(1,2,3)")).unwrap());
        assert!(!a4.contains(&p(4, "(1,2)")).unwrap());
        assert!(a4.contains(&p(5, "()")).is_err());
        let c4 = PermGroup::new(4, vec![p(4, "(1,2,3,4)")]).unwrap();
        assert!(c4.contains(&p(4, "(1,3)(2,4)")).unwrap());
    }

    #[test]
    fn elements_are_distinct_and_complete() {
        let s4 = PermGroup::new(4, vec![p(4, "(1,2)"), p(4, "(1,2,3,4)")]).unwrap();
        let els = s4.elements(100).unwrap();
        assert!(els[0].is_identity());
        let set: std::collections::HashSet<_> = els.iter().cloned().collect();
        assert_eq!(set.len(), 24);
        assert!(s4.elements(10).unwrap_err().is_budget());
    }
}
