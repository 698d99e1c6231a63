use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

const INVERSES: [&[u8]; 8] = [
    &[],
    &[],
    &[0, 1],
    &[0, 1, 2],
    &[],
    &[0, 1, 3, 2, 4],
    &[],
    &[0, 1, 4, 5, 2, 3, 6],
];

/// A prime field GF(p) with p in {2, 3, 5, 7}.
///
/// Elements are residues `0..p` stored as `u8`. All operations assume their
/// inputs are already reduced.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u32", into = "u32")]
pub struct Field {
    p: u8,
}

impl Field {
    pub const SUPPORTED: [u32; 4] = [2, 3, 5, 7];

    pub fn new(p: u32) -> Result<Field> {
        if Self::SUPPORTED.contains(&p) {
            Ok(Field { p: p as u8 })
        } else {
            Err(Error::UnsupportedField(p))
        }
    }

    pub const fn gf2() -> Field {
        Field { p: 2 }
    }

    pub const fn gf3() -> Field {
        Field { p: 3 }
    }

    #[inline]
    pub fn p(self) -> u8 {
        self.p
    }

    #[inline]
    pub fn order(self) -> usize {
        self.p as usize
    }

    #[inline]
    pub fn reduce(self, a: i64) -> u8 {
        a.rem_euclid(self.p as i64) as u8
    }

    #[inline]
    pub fn add(self, a: u8, b: u8) -> u8 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn neg(self, a: u8) -> u8 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn sub(self, a: u8, b: u8) -> u8 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(self, a: u8, b: u8) -> u8 {
        ((a as u16 * b as u16) % self.p as u16) as u8
    }

    /// Multiplicative inverse, `None` for zero.
    #[inline]
    pub fn inv(self, a: u8) -> Option<u8> {
        if a == 0 {
            None
        } else {
            Some(INVERSES[self.p as usize][a as usize])
        }
    }

    pub fn elements(self) -> impl Iterator<Item = u8> {
        0..self.p
    }

    /// Number of points of a projective space of vector dimension `k`,
    /// i.e. `(p^k - 1) / (p - 1)`.
    pub fn projective_points(self, k: usize) -> usize {
        (self.order().pow(k as u32) - 1) / (self.order() - 1)
    }
}

impl From<Field> for u32 {
    fn from(f: Field) -> u32 {
        f.p as u32
    }
}

impl TryFrom<u32> for Field {
    type Error = Error;
    fn try_from(p: u32) -> Result<Field> {
        Field::new(p)
    }
}

impl std::fmt::Display for Field {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "GF({})", self.p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_fields() -> Vec<Field> {
        Field::SUPPORTED.iter().map(|&p| Field::new(p).unwrap()).collect()
    }

    #[test]
    fn rejects_unsupported() {
        for p in [0, 1, 4, 6, 8, 11] {
            assert_eq!(Field::new(p), Err(Error::UnsupportedField(p)));
        }
    }

    #[test]
    fn field_axioms_exhaustive() {
        for f in all_fields() {
            let p = f.p() as u32;
            for a in f.elements() {
                assert_eq!(f.add(a, 0), a);
                assert_eq!(f.mul(a, 1), a);
                assert_eq!(f.add(a, f.neg(a)), 0);
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
                }
                for b in f.elements() {
                    assert_eq!(f.add(a, b) as u32, (a as u32 + b as u32) % p);
                    assert_eq!(f.mul(a, b) as u32, (a as u32 * b as u32) % p);
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    assert_eq!(f.add(f.sub(a, b), b), a);
                    for c in f.elements() {
                        assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    }
                }
            }
            assert_eq!(f.inv(0), None);
        }
    }

    #[test]
    fn projective_point_counts() {
        assert_eq!(Field::gf2().projective_points(4), 15);
        assert_eq!(Field::gf3().projective_points(4), 40);
        assert_eq!(Field::gf2().projective_points(0), 0);
    }
}
