//! Permutations of `{1..n}`, stored 0-based, composed left to right.
//!
//! `a * b` means "apply `a`, then `b`", so `x^(ab) = (x^a)^b`. Conjugation
//! follows the same right-action convention: `h^g = g⁻¹ h g`.

use std::fmt;
use std::ops::Mul;

use crate::error::{Error, Result};

/// Largest supported degree.
pub const MAX_DEGREE: usize = 4096;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Box<[u16]>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        assert!(n <= MAX_DEGREE);
        Permutation {
            images: (0..n as u16).collect(),
        }
    }

    /// Builds a permutation from 0-based images, checking bijectivity.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        if n == 0 || n > MAX_DEGREE {
            return Err(Error::Input(format!("degree {n} out of range 1..={MAX_DEGREE}")));
        }
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return Err(Error::Input(format!("images {images:?} are not a bijection")));
            }
            seen[x] = true;
        }
        Ok(Permutation {
            images: images.into_iter().map(|x| x as u16).collect(),
        })
    }

    /// Builds a permutation of degree `n` from disjoint 1-based cycles.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        if n == 0 || n > MAX_DEGREE {
            return Err(Error::Input(format!("degree {n} out of range 1..={MAX_DEGREE}")));
        }
        let mut images: Vec<usize> = (0..n).collect();
        let mut used = vec![false; n];
        for cycle in cycles {
            for &pt in cycle {
                if pt == 0 || pt > n {
                    return Err(Error::Input(format!("point {pt} outside 1..={n}")));
                }
                if used[pt - 1] {
                    return Err(Error::Input(format!(
                        "point {pt} repeated; cycles must be disjoint"
                    )));
                }
                used[pt - 1] = true;
            }
            for (i, &pt) in cycle.iter().enumerate() {
                images[pt - 1] = cycle[(i + 1) % cycle.len()] - 1;
            }
        }
        Permutation::from_images(images)
    }

    /// Parses cycle notation such as `(1,2,3)(4,5)`; `()` is the identity.
    pub fn parse(n: usize, s: &str) -> Result<Self> {
        Permutation::from_cycles(n, &parse_cycle_list(s)?)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of a 0-based point.
    #[inline]
    pub fn image(&self, pt: usize) -> usize {
        self.images[pt] as usize
    }

    pub fn images(&self) -> impl Iterator<Item = usize> + '_ {
        self.images.iter().map(|&x| x as usize)
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    /// `self` followed by `other`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: self.images.iter().map(|&x| other.images[x as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u16; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u16;
        }
        Permutation {
            images: inv.into_boxed_slice(),
        }
    }

    pub fn pow(&self, mut e: u64) -> Permutation {
        let mut base = self.clone();
        let mut acc = Permutation::identity(self.degree());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.compose(&base);
            }
            base = base.compose(&base);
            e >>= 1;
        }
        acc
    }

    /// `g⁻¹ self g`.
    pub fn conjugate_by(&self, g: &Permutation) -> Permutation {
        g.inverse().compose(self).compose(g)
    }

    pub fn order(&self) -> u64 {
        let mut seen = vec![false; self.degree()];
        let mut l = 1u64;
        for s in 0..self.degree() {
            if seen[s] {
                continue;
            }
            let mut len = 0u64;
            let mut x = s;
            while !seen[x] {
                seen[x] = true;
                x = self.image(x);
                len += 1;
            }
            l = l / crate::arith::gcd(l, len) * len;
        }
        l
    }

    /// Smallest 0-based point moved, if any.
    pub fn first_moved(&self) -> Option<usize> {
        self.images.iter().enumerate().find(|(i, &x)| *i != x as usize).map(|(i, _)| i)
    }

    pub fn is_even(&self) -> bool {
        let mut seen = vec![false; self.degree()];
        let mut transpositions = 0usize;
        for s in 0..self.degree() {
            let mut x = s;
            let mut len = 0;
            while !seen[x] {
                seen[x] = true;
                x = self.image(x);
                len += 1;
            }
            if len > 0 {
                transpositions += len - 1;
            }
        }
        transpositions % 2 == 0
    }

    /// Nontrivial cycles, 1-based, each starting at its smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for s in 0..self.degree() {
            if seen[s] || self.image(s) == s {
                continue;
            }
            let mut c = Vec::new();
            let mut x = s;
            while !seen[x] {
                seen[x] = true;
                c.push(x + 1);
                x = self.image(x);
            }
            out.push(c);
        }
        out
    }

    /// Extends the permutation to a larger degree by fixing the new points.
    pub fn extend(&self, n: usize) -> Permutation {
        assert!(n >= self.degree() && n <= MAX_DEGREE);
        let mut images: Vec<u16> = self.images.to_vec();
        images.extend(self.degree() as u16..n as u16);
        Permutation {
            images: images.into_boxed_slice(),
        }
    }

    /// Moves the permutation onto points `offset..offset+degree` of a degree-`n` set.
    pub fn shifted(&self, offset: usize, n: usize) -> Permutation {
        assert!(offset + self.degree() <= n && n <= MAX_DEGREE);
        let mut images: Vec<u16> = (0..n as u16).collect();
        for i in 0..self.degree() {
            images[offset + i] = (offset + self.image(i)) as u16;
        }
        Permutation {
            images: images.into_boxed_slice(),
        }
    }
}

impl Mul for &Permutation {
    type Output = Permutation;
    fn mul(self, rhs: &Permutation) -> Permutation {
        self.compose(rhs)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            write!(f, "(")?;
            for (i, x) in c.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Parses `(a,b,...)(c,...)` into 1-based cycles. Whitespace is ignored and
/// spaces may be used instead of commas.
pub fn parse_cycle_list(s: &str) -> Result<Vec<Vec<usize>>> {
    let mut cycles = Vec::new();
    let mut rest = s.trim();
    while !rest.is_empty() {
        let Some(after) = rest.strip_prefix('(') else {
            return Err(Error::Input(format!("expected '(' in cycle string `{s}`")));
        };
        let Some(close) = after.find(')') else {
            return Err(Error::Input(format!("unbalanced parentheses in `{s}`")));
        };
        let body = &after[..close];
        let pts: Vec<usize> = body
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::Input(format!("bad point `{t}` in `{s}`")))
            })
            .collect::<Result<_>>()?;
        let mut sorted = pts.clone();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Input(format!("cycle `({body})` repeats a point")));
        }
        if !pts.is_empty() {
            cycles.push(pts);
        }
        rest = after[close + 1..].trim_start();
    }
    Ok(cycles)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        let p = Permutation::parse(5, "(1,2,3)(4 5)").unwrap();
        assert_eq!(p.to_string(), "(1,2,3)(4,5)");
        assert_eq!(p.order(), 6);
        assert_eq!(Permutation::parse(3, "()").unwrap(), Permutation::identity(3));
    }

    #[test]
    fn composition_is_left_to_right() {
        let a = Permutation::parse(3, "(1,2)").unwrap();
        let b = Permutation::parse(3, "(2,3)").unwrap();
        // 1 -> 2 -> 3
        assert_eq!((&a * &b).image(0), 2);
        assert!((&a * &a.inverse()).is_identity());
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::parse(3, "(1,1,2)").is_err());
        assert!(Permutation::parse(3, "(1,2)(2,3)").is_err());
        assert!(Permutation::parse(3, "(1,4)").is_err());
        assert!(Permutation::from_images(vec![0, 0, 1]).is_err());
    }

    #[test]
    fn square_of_four_cycle() {
        let c = Permutation::parse(4, "(1,2,3,4)").unwrap();
        assert_eq!(c.pow(2).to_string(), "(1,3)(2,4)");
    }
}
