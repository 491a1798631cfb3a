//! Built-in catalogue of small permutation groups.

use crate::bsgs::PermGroup;
use crate::error::{Error, Result};
use crate::fp::Matrix;
use crate::perm::Permutation;
use crate::subgroup::{sylow_subgroup, Subgroup};
use crate::table::FiniteGroup;

/// Catalogue entries swept by the verification suite (all of order ≤ 2000).
pub const DEFAULT_CORPUS: &[&str] = &[
    "sym3",
    "sym4",
    "sym5",
    "a4",
    "alt5",
    "cyclic8",
    "cyclic12",
    "dihedral8",
    "dihedral12",
    "quaternion8",
    "semidihedral16",
    "sl23",
    "gl23",
    "affine_sl23",
    "affine_gl23",
    "example_1_7",
    "c3xc3",
    "c3xc3_inv",
    "f5sq_c3",
    "f3sq_q8",
    "f3sq_c8",
    "f3sq_c4",
    "c3_c8",
    "sym4_doubled",
    "a5xc2",
    "psl27",
    "f2cube_c7",
    "f2cube_c7c3",
    "frob20",
    "frob21",
    "s3xs3",
    "c3xa4",
    "c2xsym4",
    "c2x_affine_sl23",
    "c2cube",
    "c3cube",
];

/// Families accepted besides the fixed names above.
pub const FAMILIES: &[&str] = &[
    "sym<n> (n ≤ 8)",
    "alt<n> (n ≤ 8)",
    "cyclic<n>",
    "dihedral<2n>",
    "sym4_regular",
    "direct(<id>,<id>)",
];

fn perms(n: usize, cycles: &[&str]) -> Result<Vec<Permutation>> {
    cycles.iter().map(|c| Permutation::parse(n, c)).collect()
}

fn from_cycles(n: usize, cycles: &[&str]) -> Result<PermGroup> {
    PermGroup::new(n, perms(n, cycles)?)
}

fn full_cycle(n: usize) -> Result<Permutation> {
    Permutation::from_images((0..n).map(|i| (i + 1) % n).collect())
}

fn symmetric(n: usize) -> Result<PermGroup> {
    if n < 2 {
        return Ok(PermGroup::trivial(n.max(1)));
    }
    PermGroup::new(n, vec![Permutation::from_cycles(n, &[vec![1, 2]])?, full_cycle(n)?])
}

fn alternating(n: usize) -> Result<PermGroup> {
    let gens = (3..=n)
        .map(|i| Permutation::from_cycles(n, &[vec![1, 2, i]]))
        .collect::<Result<Vec<_>>>()?;
    if gens.is_empty() {
        return Ok(PermGroup::trivial(n.max(1)));
    }
    PermGroup::new(n, gens)
}

fn dihedral(order: usize) -> Result<PermGroup> {
    let n = order / 2;
    if order % 2 != 0 || n < 2 {
        return Err(Error::UnknownGroup(format!("dihedral{order}")));
    }
    if n == 2 {
        return from_cycles(4, &["(1,2)(3,4)", "(1,3)(2,4)"]);
    }
    let refl = Permutation::from_images((0..n).map(|i| (n - i) % n).collect())?;
    PermGroup::new(n, vec![full_cycle(n)?, refl])
}

/// Affine maps `x ↦ u·x + 1` style group on `Z_n`: translations and the
/// multiplications by `units`.
fn affine_zn(n: usize, units: &[usize]) -> Result<PermGroup> {
    let mut gens = vec![full_cycle(n)?];
    for &u in units {
        gens.push(Permutation::from_images((0..n).map(|x| x * u % n).collect())?);
    }
    PermGroup::new(n, gens)
}

fn encode(v: &[u32], p: usize) -> usize {
    v.iter().rev().fold(0, |acc, &c| acc * p + c as usize)
}

fn decode(mut x: usize, p: usize, d: usize) -> Vec<u32> {
    (0..d)
        .map(|_| {
            let c = (x % p) as u32;
            x /= p;
            c
        })
        .collect()
}

fn mat(p: u32, rows: &[&[u32]]) -> Matrix {
    Matrix::from_rows(p, &rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>())
}

/// Permutation of the `p^d` vectors (row vectors, `v ↦ v·A`).
fn vector_perm(a: &Matrix) -> Result<Permutation> {
    let p = a.p() as usize;
    let d = a.rows();
    let n = p.pow(d as u32);
    Permutation::from_images((0..n).map(|x| encode(&a.apply(&decode(x, p, d)), p)).collect())
}

fn translation(p: usize, d: usize, i: usize) -> Result<Permutation> {
    let n = p.pow(d as u32);
    Permutation::from_images(
        (0..n)
            .map(|x| {
                let mut v = decode(x, p, d);
                v[i] = (v[i] + 1) % p as u32;
                encode(&v, p)
            })
            .collect(),
    )
}

/// `F_p^d ⋊ ⟨mats⟩` on the `p^d` vectors.
fn affine(p: u32, d: usize, mats: &[Matrix]) -> Result<PermGroup> {
    let mut gens = (0..d)
        .map(|i| translation(p as usize, d, i))
        .collect::<Result<Vec<_>>>()?;
    for a in mats {
        gens.push(vector_perm(a)?);
    }
    PermGroup::new((p as usize).pow(d as u32), gens)
}

/// `⟨mats⟩` on the `p^d − 1` nonzero vectors.
fn linear(p: u32, d: usize, mats: &[Matrix]) -> Result<PermGroup> {
    let n = (p as usize).pow(d as u32);
    let gens = mats
        .iter()
        .map(|a| {
            let full = vector_perm(a)?;
            Permutation::from_images((1..n).map(|x| full.image(x) - 1).collect())
        })
        .collect::<Result<Vec<_>>>()?;
    PermGroup::new(n - 1, gens)
}

fn sl23_gens() -> Vec<Matrix> {
    vec![mat(3, &[&[1, 1], &[0, 1]]), mat(3, &[&[1, 0], &[1, 1]])]
}

fn gl23_gens() -> Vec<Matrix> {
    let mut g = sl23_gens();
    g.push(mat(3, &[&[2, 0], &[0, 1]]));
    g
}

fn q8_in_sl23() -> Vec<Matrix> {
    vec![mat(3, &[&[0, 1], &[2, 0]]), mat(3, &[&[1, 1], &[1, 2]])]
}

fn alpha() -> Matrix {
    mat(5, &[&[0, 1], &[4, 4]])
}

/// Two 25-point blocks carrying `U` and `V`, with `α` acting on both.
fn example_1_7() -> Result<PermGroup> {
    let n = 50;
    let mut gens = Vec::new();
    for i in 0..2 {
        let t = translation(5, 2, i)?;
        gens.push(t.shifted(0, n));
        gens.push(t.shifted(25, n));
    }
    let a = vector_perm(&alpha())?;
    gens.push(&a.shifted(0, n) * &a.shifted(25, n));
    PermGroup::new(n, gens)
}

/// `(V₄ × V₄) ⋊ Sym(3)` with `Sym(3) = GL(2,2)` acting diagonally.
fn sym4_doubled() -> Result<PermGroup> {
    let n = 8;
    let mut gens = Vec::new();
    for i in 0..2 {
        let t = translation(2, 2, i)?;
        gens.push(t.shifted(0, n));
        gens.push(t.shifted(4, n));
    }
    for a in [mat(2, &[&[0, 1], &[1, 0]]), mat(2, &[&[0, 1], &[1, 1]])] {
        let m = vector_perm(&a)?;
        gens.push(&m.shifted(0, n) * &m.shifted(4, n));
    }
    PermGroup::new(n, gens)
}

fn direct(a: &PermGroup, b: &PermGroup) -> Result<PermGroup> {
    let n = a.degree() + b.degree();
    let mut gens: Vec<Permutation> = a.generators().iter().map(|g| g.shifted(0, n)).collect();
    gens.extend(b.generators().iter().map(|g| g.shifted(a.degree(), n)));
    PermGroup::new(n, gens)
}

/// Right regular representation of an enumerable group.
fn regular(g: &PermGroup) -> Result<PermGroup> {
    let t = FiniteGroup::new(g.clone())?;
    let gens = t
        .generators()
        .iter()
        .map(|&s| Permutation::from_images((0..t.order()).map(|x| t.mul(x, s)).collect()))
        .collect::<Result<Vec<_>>>()?;
    PermGroup::new(t.order(), gens)
}

fn numbered(id: &str, prefix: &str) -> Option<usize> {
    id.strip_prefix(prefix)?.parse().ok()
}

/// Splits `direct(a,b)` at the top-level comma.
fn split_direct(id: &str) -> Option<(&str, &str)> {
    let inner = id.strip_prefix("direct(")?.strip_suffix(')')?;
    let mut depth = 0i32;
    for (i, c) in inner.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => return Some((inner[..i].trim(), inner[i + 1..].trim())),
            _ => {}
        }
    }
    None
}

/// Builds a catalogue group by id.
pub fn build(id: &str) -> Result<PermGroup> {
    let unknown = || Error::UnknownGroup(id.to_string());
    if let Some((a, b)) = split_direct(id) {
        return direct(&build(a)?, &build(b)?);
    }
    match id {
        "a4" => return alternating(4),
        "quaternion8" => return from_cycles(8, &["(1,2,4,7)(3,6,8,5)", "(1,3,4,8)(2,5,7,6)"]),
        "semidihedral16" => return affine_zn(8, &[3]),
        "sl23" => return linear(3, 2, &sl23_gens()),
        "gl23" => return linear(3, 2, &gl23_gens()),
        "affine_sl23" => return affine(3, 2, &sl23_gens()),
        "affine_gl23" => return affine(3, 2, &gl23_gens()),
        "example_1_7" => return example_1_7(),
        "c3xc3" => return from_cycles(6, &["(1,2,3)", "(4,5,6)"]),
        "c3xc3_inv" => return affine(3, 2, &[mat(3, &[&[2, 0], &[0, 2]])]),
        "f5sq_c3" => return affine(5, 2, &[alpha()]),
        "f3sq_q8" => return affine(3, 2, &q8_in_sl23()),
        "f3sq_c8" => return affine(3, 2, &[mat(3, &[&[0, 1], &[1, 1]])]),
        "f3sq_c4" => return affine(3, 2, &[mat(3, &[&[0, 1], &[2, 0]])]),
        "c3_c8" => return from_cycles(11, &["(1,2,3)", "(1,2)(4,5,6,7,8,9,10,11)"]),
        "sym4_doubled" => return sym4_doubled(),
        "a5xc2" => return from_cycles(7, &["(1,2,3,4,5)", "(1,2,3)", "(6,7)"]),
        "psl27" => {
            return linear(
                2,
                3,
                &[mat(2, &[&[1, 1, 0], &[0, 1, 0], &[0, 0, 1]]), mat(2, &[&[0, 1, 0], &[0, 0, 1], &[1, 1, 0]])],
            )
        }
        "f2cube_c7" => return affine(2, 3, &[mat(2, &[&[0, 1, 0], &[0, 0, 1], &[1, 1, 0]])]),
        "f2cube_c7c3" => {
            return affine(
                2,
                3,
                &[mat(2, &[&[0, 1, 0], &[0, 0, 1], &[1, 1, 0]]), mat(2, &[&[1, 0, 0], &[0, 0, 1], &[0, 1, 1]])],
            )
        }
        "frob20" => return from_cycles(5, &["(1,2,3,4,5)", "(2,3,5,4)"]),
        "frob21" => return from_cycles(7, &["(1,2,3,4,5,6,7)", "(2,3,5)(4,7,6)"]),
        "s3xs3" => return from_cycles(6, &["(1,2)", "(1,2,3)", "(4,5)", "(4,5,6)"]),
        "c3xa4" => return from_cycles(7, &["(1,2,3)", "(4,5,6)", "(4,5)(6,7)"]),
        "c2xsym4" => return from_cycles(6, &["(1,2)", "(1,2,3,4)", "(5,6)"]),
        "c2x_affine_sl23" => return direct(&from_cycles(2, &["(1,2)"])?, &affine(3, 2, &sl23_gens())?),
        "sym4_regular" => return regular(&symmetric(4)?),
        "c2cube" => return from_cycles(6, &["(1,2)", "(3,4)", "(5,6)"]),
        "c3cube" => return from_cycles(9, &["(1,2,3)", "(4,5,6)", "(7,8,9)"]),
        _ => {}
    }
    if let Some(n) = numbered(id, "sym") {
        return if (1..=8).contains(&n) { symmetric(n) } else { Err(unknown()) };
    }
    if let Some(n) = numbered(id, "alt") {
        return if (1..=8).contains(&n) { alternating(n) } else { Err(unknown()) };
    }
    if let Some(n) = numbered(id, "cyclic") {
        return if (2..=64).contains(&n) { PermGroup::new(n, vec![full_cycle(n)?]) } else { Err(unknown()) };
    }
    if let Some(n) = numbered(id, "dihedral") {
        return if n <= 128 { dihedral(n) } else { Err(unknown()) };
    }
    Err(unknown())
}

/// Expected order of a fixed catalogue entry.
pub fn expected_order(id: &str) -> Option<u128> {
    let fact = |n: u128| (1..=n).product::<u128>();
    if let Some((a, b)) = split_direct(id) {
        return Some(expected_order(a)? * expected_order(b)?);
    }
    Some(match id {
        "a4" => 12,
        "quaternion8" => 8,
        "semidihedral16" => 16,
        "sl23" => 24,
        "gl23" => 48,
        "affine_sl23" => 216,
        "affine_gl23" => 432,
        "example_1_7" => 1875,
        "c3xc3" => 9,
        "c3xc3_inv" => 18,
        "f5sq_c3" => 75,
        "f3sq_q8" | "f3sq_c8" => 72,
        "f3sq_c4" => 36,
        "c3_c8" => 24,
        "sym4_doubled" => 96,
        "a5xc2" => 120,
        "psl27" => 168,
        "f2cube_c7" => 56,
        "f2cube_c7c3" => 168,
        "frob20" => 20,
        "frob21" => 21,
        "s3xs3" | "c3xa4" => 36,
        "c2xsym4" => 48,
        "c2x_affine_sl23" => 432,
        "sym4_regular" => 24,
        "c2cube" => 8,
        "c3cube" => 27,
        _ => {
            if let Some(n) = numbered(id, "sym") {
                fact(n as u128)
            } else if let Some(n) = numbered(id, "alt") {
                (fact(n as u128) / 2).max(1)
            } else if let Some(n) = numbered(id, "cyclic") {
                n as u128
            } else {
                numbered(id, "dihedral")? as u128
            }
        }
    })
}

fn count_elements_of_order(g: &Subgroup, m: u64) -> usize {
    g.elements().filter(|&x| g.group().elem_order(x) == m).count()
}

/// One structural fact per fixed entry, beyond its order.
fn structural_check(id: &str, g: &Subgroup) -> bool {
    match id {
        "quaternion8" | "sl23" => count_elements_of_order(g, 2) == 1,
        "semidihedral16" => count_elements_of_order(g, 2) == 5 && count_elements_of_order(g, 8) == 4,
        "gl23" => count_elements_of_order(g, 8) == 12,
        "example_1_7" => {
            let p = sylow_subgroup(g, 5);
            p.order() == 625 && p.is_abelian() && p.element_exponent() == 5
        }
        "affine_sl23" => count_elements_of_order(g, 2) == 9 && sylow_subgroup(g, 3).order() == 27,
        "affine_gl23" => count_elements_of_order(g, 8) == 108,
        "f3sq_q8" | "f3sq_c8" | "f3sq_c4" | "c3xc3_inv" => {
            let p = sylow_subgroup(g, 3);
            p.order() == 9 && p.element_exponent() == 3
        }
        "c3_c8" => count_elements_of_order(g, 8) == 12 && count_elements_of_order(g, 2) == 1,
        "sym4_doubled" => sylow_subgroup(g, 2).order() == 32,
        "psl27" => count_elements_of_order(g, 7) == 48,
        "frob20" => count_elements_of_order(g, 4) == 10,
        "frob21" => count_elements_of_order(g, 3) == 14,
        "c2cube" => g.is_abelian() && g.element_exponent() == 2,
        "c3cube" => g.is_abelian() && g.element_exponent() == 3,
        _ => !g.gens().is_empty() || g.order() == 1,
    }
}

/// Builds the entry and checks its order and one structural fact.
pub fn self_test(id: &str) -> Result<()> {
    let pg = build(id)?;
    if let Some(expected) = expected_order(id) {
        if pg.order() != expected {
            return Err(Error::OrderMismatch {
                expected,
                computed: pg.order(),
            });
        }
    }
    if pg.order() <= 4096 {
        let t = FiniteGroup::new(pg)?;
        if !structural_check(id, &Subgroup::whole(&t)) {
            return Err(Error::Input(format!("{id}: structural self-test failed")));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalogue_self_tests() {
        for id in DEFAULT_CORPUS {
            self_test(id).unwrap_or_else(|e| panic!("{id}: {e}"));
        }
        assert!(DEFAULT_CORPUS.len() >= 25);
    }

    #[test]
    fn families_and_direct_products() {
        assert_eq!(build("sym8").unwrap().order(), 40320);
        assert_eq!(build("alt6").unwrap().order(), 360);
        assert_eq!(build("direct(cyclic2,direct(cyclic3,sym3))").unwrap().order(), 36);
        assert_eq!(build("dihedral4").unwrap().order(), 4);
        self_test("sym4_regular").unwrap();
        assert!(matches!(build("sym9"), Err(Error::UnknownGroup(_))));
        assert!(matches!(build("nonsense"), Err(Error::UnknownGroup(_))));
    }
}
