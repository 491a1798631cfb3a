//! Isomorphism testing for small groups: an invariant screen followed by a
//! backtracking search over images of generators.

use std::collections::BTreeMap;

use crate::config::budget;
use crate::error::{Error, Result};
use crate::subgroup::{centralizer, class_representatives, Subgroup};

/// Element-order histogram paired with centraliser orders.
fn profile(g: &Subgroup) -> BTreeMap<(u64, usize), usize> {
    let grp = g.group();
    let mut m = BTreeMap::new();
    for (x, size) in class_representatives(g) {
        *m.entry((grp.elem_order(x), g.order() / size)).or_insert(0) += size;
    }
    m
}

fn element_key(g: &Subgroup, class_size: &[usize], x: usize) -> (u64, usize) {
    (g.group().elem_order(x), class_size[x])
}

fn class_sizes(g: &Subgroup) -> Vec<usize> {
    let grp = g.group();
    let mut out = vec![0; grp.order()];
    for x in g.elements() {
        if out[x] != 0 {
            continue;
        }
        let mut class = vec![x];
        let mut seen = grp.empty_set();
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
        for &y in &class {
            out[y] = class.len();
        }
    }
    out
}

/// Extends the partial map on `⟨gens[..k]⟩` along the Cayley graph. Returns
/// `None` when the assignment is not a homomorphism.
fn extend_map(a: &Subgroup, b: &Subgroup, gens: &[usize], imgs: &[usize]) -> Option<Vec<usize>> {
    let ga = a.group();
    let gb = b.group();
    let mut map = vec![usize::MAX; ga.order()];
    map[0] = 0;
    let mut queue = vec![0usize];
    let mut i = 0;
    while i < queue.len() {
        let x = queue[i];
        for (&s, &t) in gens.iter().zip(imgs) {
            let y = ga.mul(x, s);
            let fy = gb.mul(map[x], t);
            if map[y] == usize::MAX {
                map[y] = fy;
                queue.push(y);
            } else if map[y] != fy {
                return None;
            }
        }
        i += 1;
    }
    // Injective on the generated subgroup.
    let mut seen = gb.empty_set();
    for &x in &queue {
        if !seen.insert(map[x]) {
            return None;
        }
    }
    Some(map)
}

/// True iff `a ≅ b`. Errors when either order exceeds the isomorphism budget.
pub fn isomorphic(a: &Subgroup, b: &Subgroup) -> Result<bool> {
    if a.order() != b.order() {
        return Ok(false);
    }
    let cap = budget().isomorphism_order;
    if a.order() > cap {
        return Err(Error::budget("isomorphism test", a.order() as u128, cap as u128));
    }
    if a.is_abelian() != b.is_abelian()
        || centralizer(a, a).order() != centralizer(b, b).order()
        || profile(a) != profile(b)
    {
        return Ok(false);
    }
    let gens: Vec<usize> = a.gens().to_vec();
    if gens.is_empty() {
        return Ok(true);
    }
    let ca = class_sizes(a);
    let cb = class_sizes(b);
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&s| {
            let key = element_key(a, &ca, s);
            b.elements().filter(|&t| element_key(b, &cb, t) == key).collect()
        })
        .collect();
    let mut imgs = Vec::with_capacity(gens.len());
    Ok(search(a, b, &gens, &candidates, &mut imgs))
}

fn search(a: &Subgroup, b: &Subgroup, gens: &[usize], cand: &[Vec<usize>], imgs: &mut Vec<usize>) -> bool {
    let k = imgs.len();
    if k == gens.len() {
        return true;
    }
    for &t in &cand[k] {
        imgs.push(t);
        if let Some(map) = extend_map(a, b, &gens[..=k], imgs) {
            let complete = k + 1 == gens.len();
            let covered = map.iter().filter(|&&v| v != usize::MAX).count();
            if (!complete || covered == b.order()) && search(a, b, gens, cand, imgs) {
                return true;
            }
        }
        imgs.pop();
    }
    false
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

    #[test]
    fn dihedral_vs_quaternion() {
        let d8 = group(4, &["(1,2,3,4)", "(1,3)"]);
        let q8 = group(8, &["(1,2,4,7)(3,6,8,5)", "(1,3,4,8)(2,5,7,6)"]);
        let d8b = group(8, &["(1,2,3,4)(5,6,7,8)", "(1,3)(5,7)"]);
        assert_eq!(q8.order(), 8);
        assert!(!isomorphic(&d8, &q8).unwrap());
        assert!(isomorphic(&d8, &d8b).unwrap());
        assert!(isomorphic(&q8, &q8).unwrap());
    }

    #[test]
    fn sym4_two_actions() {
        let s4 = group(4, &["(1,2)", "(1,2,3,4)"]);
        // Sym(4) on the six 2-subsets.
        let s4b = group(6, &["(2,4)(3,5)", "(1,2,6,5)(3,4)"]);
        assert_eq!(s4b.order(), 24);
        assert!(isomorphic(&s4, &s4b).unwrap());
        let c2a4 = group(6, &["(1,2,3)", "(1,2)(3,4)", "(5,6)"]);
        assert!(!isomorphic(&s4, &c2a4).unwrap());
    }
}
