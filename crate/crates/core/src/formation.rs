//! Centrality of chief factors for the formations of supersoluble (𝒰) and
//! `p`-supersoluble (𝒰_p) groups, and the corresponding hypercentres.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith;
use crate::bsgs::PermGroup;
use crate::error::{Error, Result};
use crate::gmodule::GModule;
use crate::normal::{NormalLattice, Section};
use crate::perm::{Permutation, MAX_DEGREE};
use crate::subgroup::{centralizer_of_section, Subgroup};
use crate::table::FiniteGroup;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FormationId {
    /// Supersoluble groups.
    U,
    /// `p`-supersoluble groups.
    Up(u64),
}

impl fmt::Display for FormationId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FormationId::U => write!(f, "U"),
            FormationId::Up(p) => write!(f, "U_{p}"),
        }
    }
}

/// How 𝒰_p treats chief factors of order prime to `p`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PPrimeConvention {
    /// Central iff `G/C_G(S)` is `p`-supersoluble (the semidirect-product test).
    QuotientPSupersoluble,
    /// Always central: only `p`-chief factors are constrained.
    #[default]
    AlwaysCentral,
}

impl fmt::Display for PPrimeConvention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PPrimeConvention::QuotientPSupersoluble => write!(f, "quotient-p-supersoluble"),
            PPrimeConvention::AlwaysCentral => write!(f, "always-central"),
        }
    }
}

/// Formation together with the `p′`-factor convention.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Centrality {
    pub formation: FormationId,
    pub convention: PPrimeConvention,
}

impl Centrality {
    pub fn new(formation: FormationId, convention: PPrimeConvention) -> Centrality {
        Centrality {
            formation,
            convention,
        }
    }

    pub fn u() -> Centrality {
        Centrality::new(FormationId::U, PPrimeConvention::default())
    }

    pub fn up(p: u64) -> Centrality {
        Centrality::new(FormationId::Up(p), PPrimeConvention::default())
    }

    /// Is the chief factor `s` of the lattice's group central?
    pub fn is_central(&self, lat: &NormalLattice, s: &Section) -> bool {
        let order = s.order();
        match self.formation {
            FormationId::U => arith::is_prime(order),
            FormationId::Up(p) => {
                if order % p == 0 {
                    order == p
                } else {
                    match self.convention {
                        PPrimeConvention::AlwaysCentral => true,
                        PPrimeConvention::QuotientPSupersoluble => {
                            let c = centralizer_of_section(lat.group(), &s.upper, &s.lower);
                            lat.is_p_supersoluble_above(&c, p)
                        }
                    }
                }
            }
        }
    }

    /// Preimage of the hypercentre of `G/base`, ascending through covers in
    /// lattice order (or reverse lattice order).
    pub fn hypercentre_from(&self, lat: &NormalLattice, base: &Subgroup, reverse: bool) -> Subgroup {
        let g = lat.group();
        let mut z = base.clone();
        'ascend: loop {
            let mut covers = lat.minimal_over(g, &z);
            if reverse {
                covers.reverse();
            }
            for m in covers {
                if self.is_central(lat, &Section::new(m.clone(), z.clone())) {
                    z = m;
                    continue 'ascend;
                }
            }
            return z;
        }
    }

    pub fn hypercentre(&self, lat: &NormalLattice) -> Subgroup {
        self.hypercentre_from(lat, &lat.nodes()[0], false)
    }

    /// `E ≤ Z_𝓕(G)`.
    pub fn contained_in_hypercentre(&self, lat: &NormalLattice, e: &Subgroup) -> bool {
        e.is_subgroup_of(&self.hypercentre(lat))
    }

    /// Every chief factor of one chief series through `E` below `E` is central.
    pub fn chief_factors_below_central(&self, lat: &NormalLattice, e: &Subgroup) -> bool {
        lat.chain(&lat.nodes()[0], e, true)
            .iter()
            .all(|s| self.is_central(lat, s))
    }
}

/// `S ⋊ G/C_G(S)` as affine permutations of the vectors of an elementary
/// abelian chief factor.
pub fn affine_semidirect(g: &Subgroup, s: &Section) -> Result<PermGroup> {
    let m = GModule::from_section(g, s)?;
    let p = m.p() as usize;
    let d = m.dim();
    let n = p.checked_pow(d as u32).filter(|&n| n <= MAX_DEGREE).ok_or_else(|| {
        Error::budget("affine degree", (p as u128).pow(d as u32), MAX_DEGREE as u128)
    })?;
    let decode = |mut x: usize| -> Vec<u32> {
        (0..d)
            .map(|_| {
                let c = (x % p) as u32;
                x /= p;
                c
            })
            .collect()
    };
    let encode = |v: &[u32]| -> usize { v.iter().rev().fold(0, |acc, &c| acc * p + c as usize) };
    let mut gens = Vec::new();
    for i in 0..d {
        let images = (0..n)
            .map(|x| {
                let mut v = decode(x);
                v[i] = (v[i] + 1) % p as u32;
                encode(&v)
            })
            .collect();
        gens.push(Permutation::from_images(images)?);
    }
    for a in m.matrices() {
        let images = (0..n).map(|x| encode(&a.apply(&decode(x)))).collect();
        gens.push(Permutation::from_images(images)?);
    }
    PermGroup::new(n, gens)
}

/// Centrality decided by building `S ⋊ G/C_G(S)` and testing membership.
/// Only the literal (quotient-based) convention is meaningful here.
pub fn is_central_by_semidirect(g: &Subgroup, s: &Section, formation: FormationId) -> Result<bool> {
    let pg = affine_semidirect(g, s)?;
    let t = FiniteGroup::new(pg)?;
    let whole = Subgroup::whole(&t);
    let lat = NormalLattice::new(&whole)?;
    Ok(match formation {
        FormationId::U => lat.classify_solubility(2).is_supersoluble,
        FormationId::Up(p) => lat.classify_solubility(p).is_p_supersoluble,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sym4() -> NormalLattice {
        let perms = vec![
            Permutation::parse(4, "(1,2)").unwrap(),
            Permutation::parse(4, "(1,2,3,4)").unwrap(),
        ];
        let t = FiniteGroup::new(PermGroup::new(4, perms).unwrap()).unwrap();
        NormalLattice::new(&Subgroup::whole(&t)).unwrap()
    }

    #[test]
    fn sym4_centrality() {
        let lat = sym4();
        let n = lat.nodes();
        let v4 = Section::new(n[1].clone(), n[0].clone());
        let a4 = Section::new(n[2].clone(), n[1].clone());
        assert!(!Centrality::u().is_central(&lat, &v4));
        assert!(Centrality::u().is_central(&lat, &a4));
        assert!(!Centrality::up(2).is_central(&lat, &v4));
        let c1 = Centrality::new(FormationId::Up(3), PPrimeConvention::QuotientPSupersoluble);
        assert!(c1.is_central(&lat, &v4));
        assert!(Centrality::up(3).is_central(&lat, &v4));
        assert!(is_central_by_semidirect(lat.group(), &v4, FormationId::Up(3)).unwrap());
        assert!(!is_central_by_semidirect(lat.group(), &v4, FormationId::Up(2)).unwrap());
        assert!(!is_central_by_semidirect(lat.group(), &v4, FormationId::U).unwrap());
        assert_eq!(affine_semidirect(lat.group(), &v4).unwrap().order(), 24);
    }

    #[test]
    fn sym4_hypercentres() {
        let lat = sym4();
        assert_eq!(Centrality::u().hypercentre(&lat).order(), 1);
        assert_eq!(Centrality::up(3).hypercentre(&lat).order(), 24);
        assert_eq!(Centrality::up(2).hypercentre(&lat).order(), 1);
        let v4 = &lat.nodes()[1];
        assert!(!Centrality::up(2).contained_in_hypercentre(&lat, v4));
        assert!(!Centrality::up(2).chief_factors_below_central(&lat, v4));
        assert!(Centrality::up(2).contained_in_hypercentre(&lat, &lat.nodes()[0]));
    }
}
