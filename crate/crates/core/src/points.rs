//! Subsets of the 12-point ground set, stored as bitmasks.
//!
//! Points are labelled 1..=12 everywhere in the public interface; the
//! bitmask layout (bit `i-1` for point `i`) is internal.

use std::fmt;

use crate::error::{Error, Result};

/// Number of points the ground set can hold.
pub const MAX_POINT: u8 = 12;

/// A subset of {1, ..., 12}.
///
/// Ordering is lexicographic on the ascending point sequence, so sorting a
/// list of equal-sized sets reproduces the usual sorted-tuple order.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct PointSet(u16);

impl PointSet {
    pub const EMPTY: PointSet = PointSet(0);

    /// The set {1, ..., n}.
    pub fn first_points(n: u8) -> PointSet {
        debug_assert!(n <= MAX_POINT);
        PointSet((1u16 << n) - 1)
    }

    pub fn singleton(p: u8) -> Result<PointSet> {
        PointSet::from_points([p])
    }

    pub fn from_points<I: IntoIterator<Item = u8>>(points: I) -> Result<PointSet> {
        let mut bits = 0u16;
        for p in points {
            if p == 0 || p > MAX_POINT {
                return Err(Error::InvalidPoint(u32::from(p)));
            }
            bits |= 1 << (p - 1);
        }
        Ok(PointSet(bits))
    }

    /// Parses a comma-separated point list such as `"1,2,12"`. An empty
    /// string denotes the empty set.
    pub fn parse_list(s: &str) -> Result<PointSet> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(PointSet::EMPTY);
        }
        let mut points = Vec::new();
        for part in s.split(',') {
            let p: u32 = part
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("invalid point list entry {part:?}")))?;
            if p == 0 || p > u32::from(MAX_POINT) {
                return Err(Error::InvalidPoint(p));
            }
            points.push(p as u8);
        }
        PointSet::from_points(points)
    }

    pub(crate) fn bits(self) -> u16 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, p: u8) -> bool {
        (1..=MAX_POINT).contains(&p) && self.0 >> (p - 1) & 1 == 1
    }

    pub fn insert(&mut self, p: u8) {
        debug_assert!((1..=MAX_POINT).contains(&p));
        self.0 |= 1 << (p - 1);
    }

    /// Points in ascending order.
    pub fn iter(self) -> impl Iterator<Item = u8> {
        (1..=MAX_POINT).filter(move |&p| self.contains(p))
    }

    pub fn to_vec(self) -> Vec<u8> {
        self.iter().collect()
    }

    pub fn union(self, other: PointSet) -> PointSet {
        PointSet(self.0 | other.0)
    }

    pub fn intersection(self, other: PointSet) -> PointSet {
        PointSet(self.0 & other.0)
    }

    pub fn difference(self, other: PointSet) -> PointSet {
        PointSet(self.0 & !other.0)
    }

    /// Complement within {1, ..., n}.
    pub fn complement_in(self, n: u8) -> PointSet {
        debug_assert!(n <= MAX_POINT);
        PointSet(!self.0 & ((1 << n) - 1))
    }

    pub fn is_disjoint(self, other: PointSet) -> bool {
        self.0 & other.0 == 0
    }

    pub fn is_subset_of(self, other: PointSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn intersection_size(self, other: PointSet) -> usize {
        (self.0 & other.0).count_ones() as usize
    }
}

impl Ord for PointSet {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for PointSet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, p) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
