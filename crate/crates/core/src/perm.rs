//! Permutations of {1,…,12} and finite permutation groups built by
//! breadth-first closure from generators.
//!
//! At this scale (the largest group handled has 95 040 elements) full
//! element enumeration beats any clever machinery: orbit and stabilizer
//! computations are plain scans and are trivially correct.

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::points::{PointSet, MAX_POINT};

const DEGREE: usize = MAX_POINT as usize;

/// A permutation of the points 1..=12, stored as its image sequence
/// (`images[i]` is the image of point `i + 1`).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: [u8; DEGREE],
}

impl Permutation {
    pub fn identity() -> Permutation {
        let mut images = [0u8; DEGREE];
        for (i, img) in images.iter_mut().enumerate() {
            *img = i as u8 + 1;
        }
        Permutation { images }
    }

    /// Builds a permutation from its image sequence, validating that it
    /// is a bijection of {1..12}.
    pub fn from_images(images: [u8; DEGREE]) -> Result<Permutation> {
        let mut seen = [false; DEGREE];
        for &img in &images {
            if img == 0 || img > MAX_POINT {
                return Err(Error::InvalidPoint(u32::from(img)));
            }
            if seen[img as usize - 1] {
                return Err(Error::Parse(format!("image sequence repeats point {img}")));
            }
            seen[img as usize - 1] = true;
        }
        Ok(Permutation { images })
    }

    /// Parses disjoint-cycle notation such as `"(2,3)(4,5)"`. Fixed
    /// points are omitted; the identity is `"()"`.
    pub fn parse_cycles(s: &str) -> Result<Permutation> {
        let s = s.trim();
        let mut perm = Permutation::identity();
        let mut moved = [false; DEGREE];
        if s == "()" {
            return Ok(perm);
        }
        let mut rest = s;
        if rest.is_empty() {
            return Err(Error::Parse("empty cycle notation".into()));
        }
        while !rest.is_empty() {
            let Some(stripped) = rest.strip_prefix('(') else {
                return Err(Error::Parse(format!("expected '(' at {rest:?}")));
            };
            let Some(close) = stripped.find(')') else {
                return Err(Error::Parse(format!("unclosed cycle in {s:?}")));
            };
            let body = &stripped[..close];
            rest = &stripped[close + 1..];
            let mut cycle = Vec::new();
            for tok in body.split(',') {
                let p: u32 = tok
                    .trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad cycle entry {tok:?}")))?;
                if p == 0 || p > u32::from(MAX_POINT) {
                    return Err(Error::InvalidPoint(p));
                }
                cycle.push(p as u8);
            }
            if cycle.len() < 2 {
                return Err(Error::Parse(format!(
                    "cycle ({body}) has fewer than two points"
                )));
            }
            for &p in &cycle {
                if moved[p as usize - 1] {
                    return Err(Error::Parse(format!("point {p} appears in two cycles")));
                }
                moved[p as usize - 1] = true;
            }
            for i in 0..cycle.len() {
                let from = cycle[i];
                let to = cycle[(i + 1) % cycle.len()];
                perm.images[from as usize - 1] = to;
            }
        }
        Ok(perm)
    }

    /// Canonical disjoint-cycle form: cycles ordered by smallest moved
    /// point, each starting at that point; fixed points omitted; the
    /// identity prints as `"()"`.
    pub fn to_cycle_string(&self) -> String {
        let mut visited = [false; DEGREE];
        let mut out = String::new();
        for start in 1..=MAX_POINT {
            if visited[start as usize - 1] {
                continue;
            }
            let mut cycle = vec![start];
            visited[start as usize - 1] = true;
            let mut next = self.apply(start);
            while next != start {
                visited[next as usize - 1] = true;
                cycle.push(next);
                next = self.apply(next);
            }
            if cycle.len() < 2 {
                continue;
            }
            out.push('(');
            out.push_str(
                &cycle
                    .iter()
                    .map(u8::to_string)
                    .collect::<Vec<_>>()
                    .join(","),
            );
            out.push(')');
        }
        if out.is_empty() {
            out.push_str("()");
        }
        out
    }

    pub fn apply(&self, p: u8) -> u8 {
        debug_assert!((1..=MAX_POINT).contains(&p));
        self.images[p as usize - 1]
    }

    pub fn apply_to_set(&self, s: PointSet) -> PointSet {
        PointSet::from_points(s.iter().map(|p| self.apply(p)))
            .expect("permutation images stay in range")
    }

    /// Composition applying the RIGHT factor first: `a.compose(&b)` maps
    /// x ↦ a(b(x)). Cycle products depend on this convention, so it is
    /// fixed here once and tested.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        let mut images = [0u8; DEGREE];
        for (i, img) in images.iter_mut().enumerate() {
            *img = self.apply(other.images[i]);
        }
        Permutation { images }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = [0u8; DEGREE];
        for (i, &img) in self.images.iter().enumerate() {
            images[img as usize - 1] = i as u8 + 1;
        }
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &img)| img == i as u8 + 1)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_cycle_string())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_cycle_string())
    }
}

/// The five generators of the Mathieu group M₁₂ in its natural action on
/// 12 points: four generators of the hexad stabilizer plus one extra
/// involution.
pub fn m12_generators() -> [Permutation; 5] {
    let parse = |s: &str| Permutation::parse_cycles(s).expect("constant cycle string");
    [
        parse("(2,3,5,6,4)(8,9,11,12,10)"),
        parse("(2,3)(4,5)(8,9)(10,11)"),
        parse("(3,5,4,6)(9,11,10,12)"),
        parse("(1,2)(5,6)(7,8)(11,12)"),
        parse("(5,12)(6,11)(7,8)(9,10)"),
    ]
}

/// The first four M₁₂ generators alone; they generate the order-120
/// setwise stabilizer of {1,…,6}.
pub fn hexad_stabilizer_generators() -> [Permutation; 4] {
    let [h1, h2, h3, h4, _] = m12_generators();
    [h1, h2, h3, h4]
}

/// A finite permutation group with its full element list materialized.
#[derive(Clone, Debug)]
pub struct PermGroup {
    generators: Vec<Permutation>,
    /// All elements, sorted by image sequence for deterministic iteration.
    elements: Vec<Permutation>,
}

impl PermGroup {
    /// Generates the closure of `gens` under composition by breadth-first
    /// search from the identity.
    pub fn generate(gens: &[Permutation]) -> PermGroup {
        let mut seen: HashSet<Permutation> = HashSet::new();
        let mut frontier = vec![Permutation::identity()];
        seen.insert(Permutation::identity());
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for e in &frontier {
                for g in gens {
                    let product = e.compose(g);
                    if seen.insert(product) {
                        next.push(product);
                    }
                }
            }
            frontier = next;
        }
        let mut elements: Vec<Permutation> = seen.into_iter().collect();
        elements.sort();
        PermGroup {
            generators: gens.to_vec(),
            elements,
        }
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.elements.binary_search(p).is_ok()
    }

    /// Number of elements mapping `s` onto itself setwise.
    pub fn set_stabilizer_order(&self, s: PointSet) -> usize {
        self.elements
            .iter()
            .filter(|e| e.apply_to_set(s) == s)
            .count()
    }

    /// All distinct images of `s`, in lexicographic order.
    pub fn orbit_of_set(&self, s: PointSet) -> Vec<PointSet> {
        let mut orbit: HashSet<PointSet> = HashSet::new();
        for e in &self.elements {
            orbit.insert(e.apply_to_set(s));
        }
        let mut orbit: Vec<PointSet> = orbit.into_iter().collect();
        orbit.sort();
        orbit
    }

    /// True iff the group is sharply k-transitive: every ordered k-tuple
    /// of distinct points is reached from the reference tuple (1,…,k) by
    /// exactly one element. Checked as: order = 12·11⋯(12−k+1), the
    /// reference tuple has that many distinct images, and only the
    /// identity fixes it pointwise.
    pub fn is_sharply_k_transitive(&self, k: usize) -> bool {
        if k == 0 || k > DEGREE {
            return false;
        }
        let expected: u64 = ((DEGREE - k + 1)..=DEGREE).map(|x| x as u64).product();
        if self.order() as u64 != expected {
            return false;
        }
        let mut images: HashSet<Vec<u8>> = HashSet::new();
        let mut pointwise_fixers = 0usize;
        for e in &self.elements {
            let image: Vec<u8> = (1..=k as u8).map(|p| e.apply(p)).collect();
            if image.iter().enumerate().all(|(i, &v)| v == i as u8 + 1) {
                pointwise_fixers += 1;
            }
            images.insert(image);
        }
        pointwise_fixers == 1 && images.len() as u64 == expected
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generator_cycle_strings_round_trip() {
        let printed = [
            "(2,3,5,6,4)(8,9,11,12,10)",
            "(2,3)(4,5)(8,9)(10,11)",
            "(3,5,4,6)(9,11,10,12)",
            "(1,2)(5,6)(7,8)(11,12)",
            "(5,12)(6,11)(7,8)(9,10)",
        ];
        for (gen, text) in m12_generators().iter().zip(printed) {
            assert_eq!(gen.to_cycle_string(), text);
            assert_eq!(Permutation::parse_cycles(text).unwrap(), *gen);
        }
    }

    #[test]
    fn identity_prints_and_parses() {
        assert_eq!(Permutation::identity().to_cycle_string(), "()");
        assert_eq!(
            Permutation::parse_cycles("()").unwrap(),
            Permutation::identity()
        );
    }

    #[test]
    fn parse_rejects_malformed_cycles() {
        assert!(Permutation::parse_cycles("").is_err());
        assert!(Permutation::parse_cycles("(1,2").is_err());
        assert!(Permutation::parse_cycles("(1)").is_err());
        assert!(Permutation::parse_cycles("(1,2)(2,3)").is_err());
        assert!(Permutation::parse_cycles("(0,1)").is_err());
        assert!(Permutation::parse_cycles("(1,13)").is_err());
        assert!(Permutation::parse_cycles("1,2").is_err());
    }

    #[test]
    fn from_images_validates_bijection() {
        let mut images = [0u8; DEGREE];
        for (i, img) in images.iter_mut().enumerate() {
            *img = i as u8 + 1;
        }
        assert!(Permutation::from_images(images).is_ok());
        images[0] = 2; // now 2 appears twice
        assert!(Permutation::from_images(images).is_err());
    }

    #[test]
    fn composition_applies_right_factor_first() {
        // a = (1,2), b = (2,3): a(b(2)) = a(3) = 3, so 2 ↦ 3 in a∘b.
        let a = Permutation::parse_cycles("(1,2)").unwrap();
        let b = Permutation::parse_cycles("(2,3)").unwrap();
        let ab = a.compose(&b);
        assert_eq!(ab.apply(2), 3);
        assert_eq!(ab.apply(3), 1);
        assert_eq!(ab.apply(1), 2);
        assert_eq!(ab.to_cycle_string(), "(1,2,3)");
    }

    #[test]
    fn involutions_square_to_identity() {
        let [_, h2, _, _, g] = m12_generators();
        assert!(h2.compose(&h2).is_identity());
        assert!(g.compose(&g).is_identity());
        let [h1, ..] = m12_generators();
        assert!(h1.compose(&Permutation::identity()) == h1);
        assert!(h1.compose(&h1.inverse()).is_identity());
    }

    #[test]
    fn hexad_stabilizer_has_order_120_and_fixes_hexad() {
        let h = PermGroup::generate(&hexad_stabilizer_generators());
        assert_eq!(h.order(), 120);
        let hexad = PointSet::from_points(1..=6).unwrap();
        assert_eq!(h.set_stabilizer_order(hexad), 120);
    }

    #[test]
    fn trivial_group() {
        let t = PermGroup::generate(&[Permutation::identity()]);
        assert_eq!(t.order(), 1);
        assert!(!t.is_sharply_k_transitive(1));
    }

    #[test]
    fn m12_has_order_95040_and_is_sharply_5_transitive() {
        let m12 = PermGroup::generate(&m12_generators());
        assert_eq!(m12.order(), 95040);
        assert!(m12.is_sharply_k_transitive(5));
        assert!(!m12.is_sharply_k_transitive(6));
    }

    #[test]
    fn closure_spot_check_under_composition() {
        let h = PermGroup::generate(&hexad_stabilizer_generators());
        for e in h.elements() {
            for g in h.generators() {
                assert!(h.contains(&e.compose(g)));
            }
            assert!(h.contains(&e.inverse()));
        }
    }

    #[test]
    fn orbit_stabilizer_under_hexad_stabilizer() {
        let h = PermGroup::generate(&hexad_stabilizer_generators());
        for s in [
            PointSet::from_points([1]).unwrap(),
            PointSet::from_points([1, 7]).unwrap(),
            PointSet::from_points([1, 2, 3]).unwrap(),
            PointSet::from_points(7..=12).unwrap(),
        ] {
            let orbit = h.orbit_of_set(s);
            assert_eq!(orbit.len() * h.set_stabilizer_order(s), h.order());
        }
    }
}
