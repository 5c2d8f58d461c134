//! The ternary Golay code and the small Witt design derived from it.
//!
//! The 6×12 generator (I|P) is the single hardcoded constant everything
//! else grows from: 6-subsets of its columns are classified by rank into
//! the 132 blocks of the Steiner system S(5,6,12) and the 792
//! information sets. Deriving the design instead of hardcoding 132 sets
//! keeps the construction self-checking.

use std::collections::BTreeMap;

use itertools::Itertools;

use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::gf3::Gf3Matrix;
use crate::points::{PointSet, MAX_POINT};

/// The 6×6 right half of the Golay generator.
const P: [[i64; 6]; 6] = [
    [0, 1, 1, 1, 1, 1],
    [1, 0, 1, 1, 2, 2],
    [1, 1, 0, 2, 1, 2],
    [1, 1, 2, 0, 2, 1],
    [1, 2, 1, 2, 0, 1],
    [1, 2, 2, 1, 1, 0],
];

/// The 6×12 generator matrix (I|P) of the ternary Golay code [12,6,6]₃.
pub fn golay_generator() -> Gf3Matrix {
    let rows: Vec<Vec<i64>> = (0..6)
        .map(|r| {
            let mut row = vec![0i64; 12];
            row[r] = 1;
            row[6..].copy_from_slice(&P[r]);
            row
        })
        .collect();
    Gf3Matrix::from_rows(&rows).expect("constant matrix is well-formed")
}

/// The ternary Golay code as a [`LinearCode`].
pub fn golay_code() -> LinearCode {
    LinearCode::new(golay_generator())
}

/// Splits all C(12,6) = 924 six-subsets of the column set by the rank of
/// their column submatrix: rank 5 → block, rank 6 → information set.
/// Both lists come back in lexicographic order. A subset of rank ≤ 4
/// cannot occur for the genuine generator and is reported as a
/// structural failure.
pub fn classify_six_sets(generator: &Gf3Matrix) -> Result<(Vec<PointSet>, Vec<PointSet>)> {
    let mut blocks = Vec::new();
    let mut info_sets = Vec::new();
    for combo in (1..=MAX_POINT).combinations(6) {
        let set = PointSet::from_points(combo.iter().copied())?;
        let cols: Vec<usize> = combo.iter().map(|&p| p as usize - 1).collect();
        match generator.column_submatrix(&cols).rank() {
            6 => info_sets.push(set),
            5 => blocks.push(set),
            r => {
                return Err(Error::Structure(format!(
                    "6-subset {set} has column rank {r}; expected 5 or 6"
                )))
            }
        }
    }
    Ok((blocks, info_sets))
}

/// The Steiner system S(5,6,12): the 132 blocks of the Golay code, in
/// lexicographic order, with the Steiner and complement-closure
/// properties verified at construction.
#[derive(Clone, Debug)]
pub struct WittDesign {
    blocks: Vec<PointSet>,
}

impl WittDesign {
    /// Derives the design from the Golay generator and verifies it is a
    /// Steiner 5-design closed under complementation.
    pub fn build() -> Result<WittDesign> {
        let (blocks, _) = classify_six_sets(&golay_generator())?;
        let design = WittDesign { blocks };
        design.verify_steiner_property()?;
        design.verify_complement_closure()?;
        Ok(design)
    }

    /// The 132 blocks in lexicographic order.
    pub fn blocks(&self) -> &[PointSet] {
        &self.blocks
    }

    pub fn is_block(&self, s: PointSet) -> bool {
        self.blocks.binary_search(&s).is_ok()
    }

    /// The complementary block. Fails if the input is not a block.
    pub fn complement_of(&self, block: PointSet) -> Result<PointSet> {
        if !self.is_block(block) {
            return Err(Error::NotABlock(block));
        }
        let complement = block.complement_in(MAX_POINT);
        if !self.is_block(complement) {
            return Err(Error::Structure(format!(
                "complement {complement} of block {block} is not a block"
            )));
        }
        Ok(complement)
    }

    /// The blocks avoiding a given point, in lexicographic order.
    pub fn blocks_avoiding(&self, p: u8) -> Vec<PointSet> {
        self.blocks
            .iter()
            .copied()
            .filter(|b| !b.contains(p))
            .collect()
    }

    /// Number of blocks containing all of `a` and none of `b`. The count
    /// is placement-independent only for |A| + |B| ≤ 5, so larger
    /// queries are refused.
    pub fn intersection_count(&self, a: PointSet, b: PointSet) -> Result<usize> {
        if !a.is_disjoint(b) {
            return Err(Error::OverlappingSets(a, b));
        }
        let total = a.len() + b.len();
        if total > 5 {
            return Err(Error::IntersectionQueryTooLarge { total });
        }
        Ok(self
            .blocks
            .iter()
            .filter(|x| a.is_subset_of(**x) && b.is_disjoint(**x))
            .count())
    }

    /// Computes the full table i(a,b) for a + b ≤ 5, checking that every
    /// placement of (A,B) gives the same count.
    pub fn intersection_table(&self) -> Result<IntersectionTable> {
        let mut values = BTreeMap::new();
        for a_size in 0..=5usize {
            for b_size in 0..=(5 - a_size) {
                let mut common: Option<usize> = None;
                for a_combo in (1..=MAX_POINT).combinations(a_size) {
                    let a = PointSet::from_points(a_combo.iter().copied())?;
                    let rest: Vec<u8> = (1..=MAX_POINT).filter(|p| !a.contains(*p)).collect();
                    for b_combo in rest.into_iter().combinations(b_size) {
                        let b = PointSet::from_points(b_combo.iter().copied())?;
                        let count = self.intersection_count(a, b)?;
                        match common {
                            None => common = Some(count),
                            Some(c) if c == count => {}
                            Some(c) => {
                                return Err(Error::Structure(format!(
                                    "i({a_size},{b_size}) depends on placement: \
                                     {c} vs {count} at A={a}, B={b}"
                                )))
                            }
                        }
                    }
                }
                values.insert((a_size, b_size), common.expect("at least one placement"));
            }
        }
        Ok(IntersectionTable { values })
    }

    fn verify_steiner_property(&self) -> Result<()> {
        for combo in (1..=MAX_POINT).combinations(5) {
            let five = PointSet::from_points(combo.iter().copied())?;
            let containing = self
                .blocks
                .iter()
                .filter(|b| five.is_subset_of(**b))
                .count();
            if containing != 1 {
                return Err(Error::Structure(format!(
                    "5-subset {five} lies in {containing} blocks; expected exactly 1"
                )));
            }
        }
        Ok(())
    }

    fn verify_complement_closure(&self) -> Result<()> {
        for &b in &self.blocks {
            let complement = b.complement_in(MAX_POINT);
            if !self.is_block(complement) {
                return Err(Error::Structure(format!(
                    "complement {complement} of block {b} is not a block"
                )));
            }
        }
        Ok(())
    }
}

/// The intersection numbers i(a,b) of the design: the number of blocks
/// containing a fixed a-set and avoiding a fixed disjoint b-set, for
/// a + b ≤ 5. Well-defined because the design is 5-homogeneous.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntersectionTable {
    values: BTreeMap<(usize, usize), usize>,
}

impl IntersectionTable {
    pub fn get(&self, a: usize, b: usize) -> Option<usize> {
        self.values.get(&(a, b)).copied()
    }

    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), usize)> + '_ {
        self.values.iter().map(|(&k, &v)| (k, v))
    }

    /// Checks the inclusion–exclusion recurrence
    /// i(a,b) = i(a,b−1) − i(a+1,b−1), which rebuilds the whole table
    /// from the column b = 0 alone.
    pub fn satisfies_recurrence(&self) -> bool {
        self.values.iter().all(|(&(a, b), &v)| {
            if b == 0 {
                return true;
            }
            match (self.get(a, b - 1), self.get(a + 1, b - 1)) {
                (Some(x), Some(y)) => v == x - y,
                _ => false,
            }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generator_constants() {
        let g = golay_generator();
        assert_eq!((g.rows(), g.cols()), (6, 12));
        // Left half is the identity.
        assert_eq!(
            g.column_submatrix(&[0, 1, 2, 3, 4, 5]),
            Gf3Matrix::identity(6)
        );
        // Spot entries of P (1-based row/col within P): P[1][1] = 0,
        // P[2][5] = 2.
        assert_eq!(g.get(0, 6).value(), 0);
        assert_eq!(g.get(1, 10).value(), 2);
        assert_eq!(g.rank(), 6);
    }

    #[test]
    fn golay_code_parameters() {
        let code = golay_code();
        assert_eq!((code.n(), code.k()), (12, 6));
        let wd = code.weight_distribution().unwrap();
        assert_eq!(wd.count(0), 1);
        assert_eq!(wd.count(6), 264);
        assert_eq!(wd.count(9), 440);
        assert_eq!(wd.count(12), 24);
        assert_eq!(wd.total(), 729);
        assert_eq!(code.min_distance().unwrap(), 6);
        assert!(code.is_self_orthogonal());
    }

    #[test]
    fn classification_counts() {
        let (blocks, info_sets) = classify_six_sets(&golay_generator()).unwrap();
        assert_eq!(blocks.len(), 132);
        assert_eq!(info_sets.len(), 792);
        // {1..6} indexes the identity submatrix, hence an information set.
        let hexad = PointSet::from_points(1..=6).unwrap();
        assert!(info_sets.binary_search(&hexad).is_ok());
    }

    #[test]
    fn design_construction_and_lookup() {
        let design = WittDesign::build().unwrap();
        assert_eq!(design.blocks().len(), 132);
        let first = *design.blocks().first().unwrap();
        assert_eq!(first.to_vec(), vec![1, 2, 3, 4, 5, 12]);
        let last = *design.blocks().last().unwrap();
        assert_eq!(last.to_vec(), vec![6, 7, 8, 9, 10, 11]);
        assert!(design.is_block(first));
        assert_eq!(design.complement_of(first).unwrap(), last);
        let hexad = PointSet::from_points(1..=6).unwrap();
        assert!(!design.is_block(hexad));
        assert!(matches!(
            design.complement_of(hexad),
            Err(Error::NotABlock(_))
        ));
        assert_eq!(design.blocks_avoiding(12).len(), 66);
    }

    #[test]
    fn intersection_count_examples_and_errors() {
        let design = WittDesign::build().unwrap();
        let a2 = PointSet::from_points([1, 2]).unwrap();
        assert_eq!(design.intersection_count(a2, PointSet::EMPTY).unwrap(), 30);
        let a1 = PointSet::from_points([3]).unwrap();
        let b1 = PointSet::from_points([7]).unwrap();
        assert_eq!(design.intersection_count(a1, b1).unwrap(), 36);
        let a3 = PointSet::from_points([1, 2, 3]).unwrap();
        let b2 = PointSet::from_points([4, 5]).unwrap();
        assert_eq!(design.intersection_count(a3, b2).unwrap(), 5);
        // Overlap and size preconditions.
        assert!(matches!(
            design.intersection_count(a2, a2),
            Err(Error::OverlappingSets(..))
        ));
        let big = PointSet::from_points(1..=6).unwrap();
        assert!(matches!(
            design.intersection_count(big, PointSet::EMPTY),
            Err(Error::IntersectionQueryTooLarge { total: 6 })
        ));
    }

    #[test]
    fn intersection_table_matches_printed_values() {
        let design = WittDesign::build().unwrap();
        let table = design.intersection_table().unwrap();
        let expected = [
            ((0, 0), 132),
            ((1, 0), 66),
            ((2, 0), 30),
            ((3, 0), 12),
            ((4, 0), 4),
            ((5, 0), 1),
            ((1, 1), 36),
            ((2, 1), 18),
            ((3, 1), 8),
            ((4, 1), 3),
            ((2, 2), 10),
            ((3, 2), 5),
        ];
        for ((a, b), v) in expected {
            assert_eq!(table.get(a, b), Some(v), "i({a},{b})");
        }
        // Symmetry i(b,a) = i(a,b) wherever both are defined.
        for ((a, b), v) in table.entries() {
            assert_eq!(table.get(b, a), Some(v), "i({b},{a}) vs i({a},{b})");
        }
        assert!(table.satisfies_recurrence());
    }

    #[test]
    fn m12_generators_permute_the_blocks() {
        let design = WittDesign::build().unwrap();
        for gen in crate::perm::m12_generators() {
            for &b in design.blocks() {
                assert!(design.is_block(gen.apply_to_set(b)));
            }
        }
    }
}
