//! The incidence construction of codes from block families: delete a
//! point set A (restricting the columns to blocks disjoint from A),
//! delete a point set B (dropping those rows), and take the row space of
//! what remains over GF(3).
//!
//! Instantiated on S(5,6,12) with singleton A and B this yields the
//! Pace code again; the constructive column map in [`design_form_of`]
//! certifies the monomial equivalence with the module-form generator.

use rayon::prelude::*;

use crate::code::WeightDistribution;
use crate::error::{Error, Result};
use crate::gf3::{Gf3, Gf3Matrix};
use crate::golay::WittDesign;
use crate::pace::PaceGenerator;
use crate::points::{PointSet, MAX_POINT};

/// A family of blocks over the ground set {1,…,v}, kept in
/// lexicographic order.
#[derive(Clone, Debug)]
pub struct BlockFamily {
    ground_size: u8,
    blocks: Vec<PointSet>,
}

impl BlockFamily {
    pub fn new(ground_size: u8, mut blocks: Vec<PointSet>) -> Result<BlockFamily> {
        if ground_size == 0 || ground_size > MAX_POINT {
            return Err(Error::InvalidPoint(u32::from(ground_size)));
        }
        let ground = PointSet::first_points(ground_size);
        for b in &blocks {
            if !b.is_subset_of(ground) {
                return Err(Error::Structure(format!(
                    "block {b} is not contained in the ground set {ground}"
                )));
            }
        }
        blocks.sort();
        blocks.dedup();
        Ok(BlockFamily {
            ground_size,
            blocks,
        })
    }

    pub fn from_design(design: &WittDesign) -> BlockFamily {
        BlockFamily {
            ground_size: MAX_POINT,
            blocks: design.blocks().to_vec(),
        }
    }

    pub fn ground_size(&self) -> u8 {
        self.ground_size
    }

    pub fn blocks(&self) -> &[PointSet] {
        &self.blocks
    }
}

/// A design-code generator matrix with its row and column manifests.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DesignCode {
    matrix: Gf3Matrix,
    /// Points of the ground set outside A ∪ B, ascending: one per row.
    row_points: Vec<u8>,
    /// Blocks disjoint from A, lexicographic: one per column.
    column_blocks: Vec<PointSet>,
}

impl DesignCode {
    pub fn matrix(&self) -> &Gf3Matrix {
        &self.matrix
    }

    pub fn row_points(&self) -> &[u8] {
        &self.row_points
    }

    pub fn column_blocks(&self) -> &[PointSet] {
        &self.column_blocks
    }

    pub fn code(&self) -> crate::code::LinearCode {
        crate::code::LinearCode::new(self.matrix.clone())
    }
}

/// Builds the design code for disjoint point sets A and B: rows indexed
/// by the points outside A ∪ B in increasing order, columns by the
/// blocks disjoint from A in lexicographic order, and the entry in row i
/// and column X equal to 1 exactly when i ∈ X.
pub fn build_design_code(family: &BlockFamily, a: PointSet, b: PointSet) -> Result<DesignCode> {
    if !a.is_disjoint(b) {
        return Err(Error::OverlappingSets(a, b));
    }
    let ground = PointSet::first_points(family.ground_size());
    for p in a.union(b).iter() {
        if !ground.contains(p) {
            return Err(Error::InvalidPoint(u32::from(p)));
        }
    }
    let row_points: Vec<u8> = ground.difference(a.union(b)).iter().collect();
    let column_blocks: Vec<PointSet> = family
        .blocks()
        .iter()
        .copied()
        .filter(|x| x.is_disjoint(a))
        .collect();
    let matrix = Gf3Matrix::from_fn(row_points.len(), column_blocks.len(), |r, c| {
        if column_blocks[c].contains(row_points[r]) {
            Gf3::ONE
        } else {
            Gf3::ZERO
        }
    });
    Ok(DesignCode {
        matrix,
        row_points,
        column_blocks,
    })
}

/// Rewrites the module-form generator into design form by an explicit
/// monomial map: a column whose indexing block contains 11 is negated
/// and relabelled by (i.e. moved to the position of) the complementary
/// block; columns are then re-sorted by their new index. The result
/// equals `build_design_code(S(5,6,12), A = {11}, B = {12})`
/// entry-for-entry, which is the constructive equivalence certificate.
pub fn design_form_of(gen: &PaceGenerator, design: &WittDesign) -> Result<DesignCode> {
    let mut mapped: Vec<(PointSet, Vec<Gf3>)> = Vec::with_capacity(gen.column_blocks().len());
    for (j, &x) in gen.column_blocks().iter().enumerate() {
        if x.contains(MAX_POINT) || !design.is_block(x) {
            return Err(Error::Structure(format!(
                "column manifest entry {x} is not a block avoiding 12"
            )));
        }
        let column: Vec<Gf3> = (0..gen.matrix().rows())
            .map(|r| gen.matrix().get(r, j))
            .collect();
        if x.contains(11) {
            let complement = design.complement_of(x)?;
            mapped.push((complement, column.into_iter().map(|e| -e).collect()));
        } else {
            mapped.push((x, column));
        }
    }
    mapped.sort_by_key(|(block, _)| *block);
    if mapped.windows(2).any(|w| w[0].0 == w[1].0) {
        return Err(Error::Structure(
            "column map produced duplicate block indices".into(),
        ));
    }
    let row_points: Vec<u8> = (1..=10).collect();
    let column_blocks: Vec<PointSet> = mapped.iter().map(|(b, _)| *b).collect();
    let matrix = Gf3Matrix::from_fn(row_points.len(), mapped.len(), |r, c| mapped[c].1[r]);
    Ok(DesignCode {
        matrix,
        row_points,
        column_blocks,
    })
}

/// Checks that the weight distribution of the design code is the same
/// for every ordered pair of distinct singletons (A, B) — all 132 of
/// them — so the choice of deleted points does not matter.
pub fn singleton_pair_invariance(design: &WittDesign) -> Result<bool> {
    let family = BlockFamily::from_design(design);
    let reference = singleton_pair_distribution(&family, 12, 11)?;
    let pairs: Vec<(u8, u8)> = (1..=MAX_POINT)
        .flat_map(|a| {
            (1..=MAX_POINT)
                .filter(move |&b| b != a)
                .map(move |b| (a, b))
        })
        .collect();
    let results: Result<Vec<bool>> = pairs
        .par_iter()
        .map(|&(a, b)| Ok(singleton_pair_distribution(&family, a, b)? == reference))
        .collect();
    Ok(results?.into_iter().all(|same| same))
}

fn singleton_pair_distribution(family: &BlockFamily, a: u8, b: u8) -> Result<WeightDistribution> {
    let code = build_design_code(family, PointSet::singleton(a)?, PointSet::singleton(b)?)?;
    code.code().weight_distribution()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pace::module_form_generator;

    fn toy_family() -> BlockFamily {
        let blocks = vec![
            PointSet::from_points([1, 2]).unwrap(),
            PointSet::from_points([3, 4]).unwrap(),
            PointSet::from_points([1, 3]).unwrap(),
        ];
        BlockFamily::new(4, blocks).unwrap()
    }

    #[test]
    fn toy_matrix_by_hand() {
        let code = build_design_code(
            &toy_family(),
            PointSet::singleton(4).unwrap(),
            PointSet::singleton(1).unwrap(),
        )
        .unwrap();
        // Columns: blocks disjoint from {4} in lex order: {1,2}, {1,3}.
        // Rows: points {2,3}.
        assert_eq!(code.row_points(), &[2, 3]);
        assert_eq!(
            code.column_blocks(),
            &[
                PointSet::from_points([1, 2]).unwrap(),
                PointSet::from_points([1, 3]).unwrap()
            ]
        );
        assert_eq!(
            code.matrix(),
            &Gf3Matrix::from_rows(&[vec![1, 0], vec![0, 1]]).unwrap()
        );
    }

    #[test]
    fn invalid_inputs_are_rejected() {
        let family = toy_family();
        let a = PointSet::singleton(1).unwrap();
        assert!(matches!(
            build_design_code(&family, a, a),
            Err(Error::OverlappingSets(..))
        ));
        // Point 5 is outside the ground set {1..4}.
        assert!(matches!(
            build_design_code(&family, PointSet::singleton(5).unwrap(), PointSet::EMPTY),
            Err(Error::InvalidPoint(5))
        ));
        let bad_block = vec![PointSet::from_points([4, 5]).unwrap()];
        assert!(BlockFamily::new(4, bad_block).is_err());
    }

    #[test]
    fn full_incidence_and_single_deletion_shapes() {
        let design = WittDesign::build().unwrap();
        let family = BlockFamily::from_design(&design);
        let full = build_design_code(&family, PointSet::EMPTY, PointSet::EMPTY).unwrap();
        assert_eq!((full.matrix().rows(), full.matrix().cols()), (12, 132));
        // Every column of the full incidence matrix sums to |X| = 6 ≡ 0.
        for c in 0..132 {
            let sum: u8 = (0..12).map(|r| full.matrix().get(r, c).value()).sum();
            assert_eq!(sum, 6);
        }
        let a12 = PointSet::singleton(12).unwrap();
        let one_deleted = build_design_code(&family, a12, PointSet::EMPTY).unwrap();
        assert_eq!(
            (one_deleted.matrix().rows(), one_deleted.matrix().cols()),
            (11, 66)
        );
        // Dropping B = {11} removes exactly the last row.
        let both = build_design_code(&family, a12, PointSet::singleton(11).unwrap()).unwrap();
        assert_eq!((both.matrix().rows(), both.matrix().cols()), (10, 66));
        assert_eq!(both.column_blocks(), one_deleted.column_blocks());
        for r in 0..10 {
            for c in 0..66 {
                assert_eq!(both.matrix().get(r, c), one_deleted.matrix().get(r, c));
            }
        }
        assert_eq!(both.matrix().rank(), 10);
    }

    #[test]
    fn standard_instance_column_sums_and_point_counts() {
        let design = WittDesign::build().unwrap();
        let family = BlockFamily::from_design(&design);
        let code = build_design_code(
            &family,
            PointSet::singleton(12).unwrap(),
            PointSet::singleton(11).unwrap(),
        )
        .unwrap();
        for c in 0..66 {
            let sum: u8 = (0..10).map(|r| code.matrix().get(r, c).value()).sum();
            let x = code.column_blocks()[c];
            let expected = if x.contains(11) { 5 } else { 6 };
            assert_eq!(sum, expected);
        }
        // Any fixed row point lies in i(1,1) = 36 of the columns.
        for r in 0..10 {
            let ones = (0..66)
                .filter(|&c| !code.matrix().get(r, c).is_zero())
                .count();
            assert_eq!(ones, 36);
        }
    }

    #[test]
    fn module_form_maps_onto_design_form() {
        let design = WittDesign::build().unwrap();
        let gen = module_form_generator(&design);
        let mapped = design_form_of(&gen, &design).unwrap();
        let family = BlockFamily::from_design(&design);
        let direct = build_design_code(
            &family,
            PointSet::singleton(11).unwrap(),
            PointSet::singleton(12).unwrap(),
        )
        .unwrap();
        assert_eq!(mapped, direct);
        // Columns indexed by blocks avoiding both 11 and 12 are carried
        // over untouched.
        for (j, &x) in gen.column_blocks().iter().enumerate() {
            if x.contains(11) {
                continue;
            }
            let t = direct
                .column_blocks()
                .binary_search(&x)
                .expect("block stays its own index");
            for r in 0..10 {
                assert_eq!(gen.matrix().get(r, j), direct.matrix().get(r, t));
            }
        }
    }

    #[test]
    fn mapped_form_preserves_weight_distribution_and_row_space_facts() {
        let design = WittDesign::build().unwrap();
        let gen = module_form_generator(&design);
        let mapped = design_form_of(&gen, &design).unwrap();
        let wd_m = gen.code().weight_distribution().unwrap();
        let wd_d = mapped.code().weight_distribution().unwrap();
        assert_eq!(wd_m, wd_d);
        // With the SAME column indexing (blocks avoiding 12), the module
        // form and the (A,B) = ({12},{11}) design form generate the same
        // row space outright, not merely equivalent codes.
        let family = BlockFamily::from_design(&design);
        let d_12_11 = build_design_code(
            &family,
            PointSet::singleton(12).unwrap(),
            PointSet::singleton(11).unwrap(),
        )
        .unwrap();
        assert!(gen.matrix().row_space_equal(d_12_11.matrix()).unwrap());
    }
}
