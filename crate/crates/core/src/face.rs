//! Vertex sets of simplices, stored as a 128-bit mask.

use std::cmp::Ordering;
use std::fmt;

/// Maximum number of vertex ids a [`Face`] can address.
pub const MAX_VERTICES: usize = 128;

/// A finite set of vertex ids below [`MAX_VERTICES`].
///
/// Ordering is lexicographic on the ascending vertex lists, so `{0, 5} < {1}`
/// and a prefix sorts first (`{0} < {0, 1}`).
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct Face(u128);

impl Face {
    pub const EMPTY: Face = Face(0);

    pub fn from_bits(bits: u128) -> Self {
        Face(bits)
    }

    pub fn bits(self) -> u128 {
        self.0
    }

    /// Panics if `v >= MAX_VERTICES`.
    pub fn singleton(v: usize) -> Self {
        assert!(v < MAX_VERTICES, "vertex id {v} exceeds face capacity");
        Face(1u128 << v)
    }

    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 >> v & 1 == 1
    }

    pub fn with(self, v: usize) -> Self {
        self | Face::singleton(v)
    }

    pub fn without(self, v: usize) -> Self {
        if v < MAX_VERTICES {
            Face(self.0 & !(1u128 << v))
        } else {
            self
        }
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Dimension `len - 1`; the empty face has dimension -1.
    pub fn dim(self) -> isize {
        self.len() as isize - 1
    }

    pub fn is_subset(self, other: Face) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_proper_subset(self, other: Face) -> bool {
        self.is_subset(other) && self != other
    }

    pub fn is_disjoint(self, other: Face) -> bool {
        self.0 & other.0 == 0
    }

    pub fn min_vertex(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn max_vertex(self) -> Option<usize> {
        (self.0 != 0).then(|| 127 - self.0.leading_zeros() as usize)
    }

    pub fn iter(self) -> FaceIter {
        FaceIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// All subsets of this face, the empty face and the face itself included.
    pub fn subsets(self) -> Subsets {
        Subsets {
            mask: self.0,
            next: Some(0),
        }
    }
}

impl FromIterator<usize> for Face {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        iter.into_iter().fold(Face::EMPTY, Face::with)
    }
}

impl<'a> FromIterator<&'a usize> for Face {
    fn from_iter<I: IntoIterator<Item = &'a usize>>(iter: I) -> Self {
        iter.into_iter().copied().collect()
    }
}

impl std::ops::BitOr for Face {
    type Output = Face;
    fn bitor(self, rhs: Face) -> Face {
        Face(self.0 | rhs.0)
    }
}

impl std::ops::BitAnd for Face {
    type Output = Face;
    fn bitand(self, rhs: Face) -> Face {
        Face(self.0 & rhs.0)
    }
}

impl std::ops::Sub for Face {
    type Output = Face;
    fn sub(self, rhs: Face) -> Face {
        Face(self.0 & !rhs.0)
    }
}

impl Ord for Face {
    fn cmp(&self, other: &Self) -> Ordering {
        let diff = self.0 ^ other.0;
        if diff == 0 {
            return Ordering::Equal;
        }
        // The lowest differing vertex decides, unless the side lacking it has
        // nothing above it (then that side is a prefix of the other).
        let v = diff.trailing_zeros();
        let above = if v == 127 { 0 } else { !0u128 << (v + 1) };
        if self.0 >> v & 1 == 1 {
            if other.0 & above != 0 {
                Ordering::Less
            } else {
                Ordering::Greater
            }
        } else if self.0 & above != 0 {
            Ordering::Greater
        } else {
            Ordering::Less
        }
    }
}

impl PartialOrd for Face {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl serde::Serialize for Face {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl<'de> serde::Deserialize<'de> for Face {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let ids = Vec::<usize>::deserialize(deserializer)?;
        if let Some(&bad) = ids.iter().find(|&&v| v >= MAX_VERTICES) {
            return Err(serde::de::Error::custom(format!(
                "vertex id {bad} exceeds the supported maximum of {}",
                MAX_VERTICES - 1
            )));
        }
        Ok(ids.into_iter().collect())
    }
}

pub struct FaceIter(u128);

impl Iterator for FaceIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for FaceIter {}

/// Iterates submasks in increasing numeric order.
pub struct Subsets {
    mask: u128,
    next: Option<u128>,
}

impl Iterator for Subsets {
    type Item = Face;

    fn next(&mut self) -> Option<Face> {
        let cur = self.next?;
        self.next = if cur == self.mask {
            None
        } else {
            Some(((cur | !self.mask).wrapping_add(1)) & self.mask)
        };
        Some(Face(cur))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(v: &[usize]) -> Face {
        v.iter().collect()
    }

    #[test]
    fn lexicographic_order_matches_vectors() {
        let faces = [
            f(&[]),
            f(&[0]),
            f(&[0, 1]),
            f(&[0, 5]),
            f(&[1]),
            f(&[1, 2, 3]),
            f(&[2]),
            f(&[127]),
            f(&[0, 127]),
        ];
        for a in faces {
            for b in faces {
                assert_eq!(a.cmp(&b), a.to_vec().cmp(&b.to_vec()), "{a:?} vs {b:?}");
            }
        }
    }

    #[test]
    fn subsets_enumerates_power_set() {
        let face = f(&[1, 4, 9]);
        let subs: Vec<Face> = face.subsets().collect();
        assert_eq!(subs.len(), 8);
        assert!(subs.iter().all(|s| s.is_subset(face)));
        assert_eq!(Face::EMPTY.subsets().count(), 1);
    }

    #[test]
    fn dims() {
        assert_eq!(Face::EMPTY.dim(), -1);
        assert_eq!(f(&[3, 7]).dim(), 1);
        assert_eq!(f(&[3, 7]).max_vertex(), Some(7));
        assert_eq!(f(&[3, 7]).min_vertex(), Some(3));
    }
}
