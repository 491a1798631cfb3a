//! Elementary abelian sections as `F_p[G]`-modules: action matrices,
//! irreducibility, endomorphism algebras, isomorphism and homogeneity.

use std::collections::{BTreeSet, HashMap};

use crate::config::budget;
use crate::error::{Error, Result};
use crate::fp::{span_basis, Matrix};
use crate::normal::{NormalLattice, Section};
use crate::subgroup::Subgroup;

/// A section `L/K` with one matrix per generator of the acting group.
/// Vectors are rows; `g` acts by `v ↦ v·A_g`.
#[derive(Clone, Debug)]
pub struct GModule {
    p: u32,
    dim: usize,
    basis: Vec<usize>,
    mats: Vec<Matrix>,
    coords: HashMap<usize, Vec<u32>>,
    acting: Subgroup,
}

impl GModule {
    /// Module on a `G`-invariant elementary abelian section.
    pub fn from_section(g: &Subgroup, s: &Section) -> Result<GModule> {
        if !s.is_elementary_abelian() {
            return Err(Error::Precondition(format!(
                "section of order {} is not elementary abelian",
                s.order()
            )));
        }
        let p = s.prime().unwrap_or(2);
        let dim = s.rank().unwrap_or(0) as usize;
        let grp = g.group();
        let mut basis = Vec::with_capacity(dim);
        let mut span = s.lower.clone();
        for x in s.upper.elements() {
            if span.contains(x) {
                continue;
            }
            basis.push(x);
            span = span.join_element(x);
        }
        debug_assert_eq!(basis.len(), dim);
        // Coordinates of every element of L: x = b_1^{e_1} ... b_d^{e_d} k.
        let mut coords: HashMap<usize, Vec<u32>> = HashMap::with_capacity(s.upper.order());
        let mut vec = vec![0u32; dim];
        loop {
            let mut prod = 0usize;
            for (i, &e) in vec.iter().enumerate() {
                prod = grp.mul(prod, grp.pow(basis[i], e as u64));
            }
            for k in s.lower.elements() {
                coords.insert(grp.mul(prod, k), vec.clone());
            }
            let mut i = 0;
            loop {
                if i == dim {
                    break;
                }
                vec[i] += 1;
                if vec[i] < p as u32 {
                    break;
                }
                vec[i] = 0;
                i += 1;
            }
            if i == dim {
                break;
            }
        }
        let mut m = GModule {
            p: p as u32,
            dim,
            basis,
            mats: Vec::new(),
            coords,
            acting: g.clone(),
        };
        m.mats = g.gens().iter().map(|&x| m.matrix_of(x)).collect();
        Ok(m)
    }

    /// Module given directly by matrices.
    pub fn from_matrices(acting: &Subgroup, p: u32, dim: usize, mats: Vec<Matrix>) -> GModule {
        GModule {
            p,
            dim,
            basis: Vec::new(),
            mats,
            coords: HashMap::new(),
            acting: acting.clone(),
        }
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn matrices(&self) -> &[Matrix] {
        &self.mats
    }

    pub fn acting_group(&self) -> &Subgroup {
        &self.acting
    }

    /// Coordinates of an element of the upper subgroup.
    pub fn coordinates(&self, x: usize) -> Option<&[u32]> {
        self.coords.get(&x).map(|v| v.as_slice())
    }

    /// Matrix of an arbitrary element, computed from the conjugation action.
    pub fn matrix_of(&self, x: usize) -> Matrix {
        let grp = self.acting.group();
        let rows: Vec<Vec<u32>> = self
            .basis
            .iter()
            .map(|&b| self.coords[&grp.conj(b, x)].clone())
            .collect();
        if rows.is_empty() {
            return Matrix::zero(self.p, 0, 0);
        }
        Matrix::from_rows(self.p, &rows)
    }

    /// Smallest submodule containing `v`, as an echelon basis.
    pub fn spin(&self, v: &[u32]) -> Vec<Vec<u32>> {
        let mut basis = span_basis(self.p, self.dim, &[v.to_vec()]);
        let mut i = 0;
        let mut frontier = basis.clone();
        while i < frontier.len() {
            let w = frontier[i].clone();
            for a in &self.mats {
                let img = a.apply(&w);
                let mut cand = basis.clone();
                cand.push(img.clone());
                let nb = span_basis(self.p, self.dim, &cand);
                if nb.len() > basis.len() {
                    basis = nb;
                    frontier.push(img);
                }
            }
            i += 1;
        }
        basis
    }

    /// One nonzero representative of each 1-dimensional subspace.
    fn projective_points(&self) -> Result<Vec<Vec<u32>>> {
        let total = (self.p as u128).saturating_pow(self.dim as u32);
        let cap = budget().elements as u128;
        if total > cap {
            return Err(Error::budget("projective scan", total, cap));
        }
        let mut out = Vec::new();
        let mut v = vec![0u32; self.dim];
        loop {
            let mut i = 0;
            loop {
                if i == self.dim {
                    return Ok(out);
                }
                v[i] += 1;
                if v[i] < self.p {
                    break;
                }
                v[i] = 0;
                i += 1;
            }
            // Normalised: last nonzero coordinate equals 1.
            if v.iter().rev().find(|&&x| x != 0) == Some(&1) {
                out.push(v.clone());
            }
        }
    }

    /// True iff no proper nonzero submodule exists.
    pub fn is_irreducible(&self) -> Result<bool> {
        if self.dim == 0 {
            return Ok(false);
        }
        for v in self.projective_points()? {
            if self.spin(&v).len() < self.dim {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Dimension of `End_{F_p G}(M)`.
    pub fn endomorphism_dim(&self) -> usize {
        commutant_basis(self.p, self.dim, &self.mats, &self.mats).len()
    }

    pub fn is_absolutely_irreducible(&self) -> Result<bool> {
        Ok(self.is_irreducible()? && self.endomorphism_dim() == 1)
    }

    /// The minimal submodules, each as an echelon basis.
    pub fn minimal_submodules(&self) -> Result<Vec<Vec<Vec<u32>>>> {
        let mut spins: BTreeSet<Vec<Vec<u32>>> = BTreeSet::new();
        for v in self.projective_points()? {
            spins.insert(self.spin(&v));
        }
        let all: Vec<Vec<Vec<u32>>> = spins.into_iter().collect();
        let contains = |big: &Vec<Vec<u32>>, small: &Vec<Vec<u32>>| {
            let mut cand = big.clone();
            cand.extend(small.iter().cloned());
            span_basis(self.p, self.dim, &cand).len() == big.len()
        };
        Ok(all
            .iter()
            .filter(|s| !all.iter().any(|t| t.len() < s.len() && contains(s, t)))
            .cloned()
            .collect())
    }
}

/// Basis of `{T : A_i·T = T·B_i for all i}`, each `T` flattened row-major.
fn commutant_basis(p: u32, dim: usize, a: &[Matrix], b: &[Matrix]) -> Vec<Vec<u32>> {
    let n = dim * dim;
    if n == 0 {
        return Vec::new();
    }
    let mut rows: Vec<Vec<u32>> = Vec::new();
    for (ai, bi) in a.iter().zip(b) {
        // Entry (r, c) of A·T − T·B in the unknowns t_{kl}.
        for r in 0..dim {
            for c in 0..dim {
                let mut eq = vec![0u32; n];
                for k in 0..dim {
                    let v = ai.get(r, k);
                    eq[k * dim + c] = (eq[k * dim + c] + v) % p;
                    let w = bi.get(k, c);
                    eq[r * dim + k] = (eq[r * dim + k] + p - w) % p;
                }
                rows.push(eq);
            }
        }
    }
    if rows.is_empty() {
        return Matrix::zero(p, 1, n).nullspace();
    }
    Matrix::from_rows(p, &rows).nullspace()
}

/// True iff an invertible intertwiner `M → N` exists.
pub fn modules_isomorphic(m: &GModule, n: &GModule) -> Result<bool> {
    if m.p != n.p || m.dim != n.dim || m.mats.len() != n.mats.len() {
        return Ok(false);
    }
    if m.dim == 0 {
        return Ok(true);
    }
    let basis = commutant_basis(m.p, m.dim, &m.mats, &n.mats);
    let total = (m.p as u128).saturating_pow(basis.len() as u32);
    let cap = budget().intertwiner_scan as u128;
    if total > cap {
        return Err(Error::budget("intertwiner scan", total, cap));
    }
    let d = m.dim;
    let mut coef = vec![0u32; basis.len()];
    loop {
        let mut i = 0;
        loop {
            if i == coef.len() {
                return Ok(false);
            }
            coef[i] += 1;
            if coef[i] < m.p {
                break;
            }
            coef[i] = 0;
            i += 1;
        }
        let mut t = Matrix::zero(m.p, d, d);
        for (c, vec) in coef.iter().zip(&basis) {
            if *c == 0 {
                continue;
            }
            t.add_scaled(&Matrix::from_rows(m.p, &vec.chunks(d).map(|r| r.to_vec()).collect::<Vec<_>>()), *c);
        }
        if t.is_invertible() {
            return Ok(true);
        }
    }
}

/// Constituent structure of a semisimple section `U/B` of `G`.
#[derive(Clone, Debug)]
pub struct ModuleDecomposition {
    /// Minimal normal subgroups of `G/B` inside `U/B`, as upper subgroups.
    pub constituents: Vec<Subgroup>,
    /// Constituents generate `U/B`.
    pub semisimple: bool,
    pub homogeneous: bool,
    /// Dimension of the first constituent.
    pub constituent_dimension: usize,
    pub absolutely_irreducible: Vec<bool>,
}

/// Homogeneity of the section `upper/lower` of the lattice's group.
pub fn homogeneity(lat: &NormalLattice, upper: &Subgroup, lower: &Subgroup) -> Result<ModuleDecomposition> {
    let g = lat.group();
    let constituents = lat.minimal_over(upper, lower);
    let join = constituents.iter().fold(lower.clone(), |acc, c| acc.join(c));
    let semisimple = join == *upper;
    let mut modules = Vec::with_capacity(constituents.len());
    for c in &constituents {
        modules.push(GModule::from_section(g, &Section::new(c.clone(), lower.clone()))?);
    }
    let mut homogeneous = semisimple;
    if let Some(first) = modules.first() {
        for m in &modules[1..] {
            if !homogeneous {
                break;
            }
            homogeneous = modules_isomorphic(first, m)?;
        }
    }
    let absolutely_irreducible = modules
        .iter()
        .map(|m| m.is_absolutely_irreducible())
        .collect::<Result<Vec<_>>>()?;
    Ok(ModuleDecomposition {
        constituent_dimension: modules.first().map_or(0, |m| m.dim()),
        constituents,
        semisimple,
        homogeneous,
        absolutely_irreducible,
    })
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
    fn klein_module_of_sym4() {
        let g = group(4, &["(1,2)", "(1,2,3,4)"]);
        let lat = NormalLattice::new(&g).unwrap();
        let v4 = lat.nodes()[1].clone();
        let m = GModule::from_section(&g, &Section::new(v4.clone(), lat.nodes()[0].clone())).unwrap();
        assert_eq!(m.dim(), 2);
        assert!(m.matrices().iter().all(|a| a.is_invertible() && *a != Matrix::identity(2, 2)));
        assert!(m.is_irreducible().unwrap());
        assert_eq!(m.endomorphism_dim(), 1);
        assert!(modules_isomorphic(&m, &m).unwrap());
        let h = homogeneity(&lat, &v4, &lat.nodes()[0]).unwrap();
        assert!(h.homogeneous && h.constituent_dimension == 2 && h.absolutely_irreducible == vec![true]);
        assert!(GModule::from_section(&g, &Section::new(g.clone(), lat.nodes()[0].clone())).is_err());
    }

    #[test]
    fn order_three_rotation_over_f5() {
        let c3 = group(3, &["(1,2,3)"]);
        let a = Matrix::from_rows(5, &[vec![0, 1], vec![4, 4]]);
        let m = GModule::from_matrices(&c3, 5, 2, vec![a]);
        assert!(m.is_irreducible().unwrap());
        assert_eq!(m.endomorphism_dim(), 2);
        let triv = GModule::from_matrices(&c3, 5, 2, vec![Matrix::identity(5, 2)]);
        assert!(!triv.is_irreducible().unwrap());
        assert_eq!(triv.minimal_submodules().unwrap().len(), 6);
        assert!(!modules_isomorphic(&m, &triv).unwrap());
    }

    #[test]
    fn sym3_natural_vs_trivial_over_f2() {
        let s3 = group(3, &["(1,2)", "(1,2,3)"]);
        let nat = GModule::from_matrices(
            &s3,
            2,
            2,
            vec![
                Matrix::from_rows(2, &[vec![0, 1], vec![1, 0]]),
                Matrix::from_rows(2, &[vec![0, 1], vec![1, 1]]),
            ],
        );
        let triv = GModule::from_matrices(&s3, 2, 2, vec![Matrix::identity(2, 2), Matrix::identity(2, 2)]);
        assert!(!modules_isomorphic(&nat, &triv).unwrap());
        assert!(nat.is_irreducible().unwrap());
    }
}
