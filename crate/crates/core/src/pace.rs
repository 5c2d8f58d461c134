//! The 10-dimensional GF(3) module Z carrying the M₁₂ action, the orbit
//! of block vectors inside it, and the module-form generator matrix of
//! the Pace code.
//!
//! The ambient space is V(12,3) with basis v₁,…,v₁₂ permuted by M₁₂. The
//! augmentation ideal I (coordinate sum zero) is 11-dimensional and
//! contains the diagonal Δ = v₁+…+v₁₂ because 12 ≡ 0 (mod 3); the
//! module Z = I/⟨Δ⟩ is 10-dimensional with basis z₁,…,z₁₀, the images
//! of uᵢ = vᵢ − v₁₂. From Σᵢ≤₁₁ uᵢ = Δ follows z₁₁ = −z₁−…−z₁₀, which
//! is the whole reduction formula.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::gf3::{Gf3, Gf3Matrix, Gf3Vector};
use crate::golay::WittDesign;
use crate::perm::{PermGroup, Permutation};
use crate::points::{PointSet, MAX_POINT};

/// Dimension of the module Z.
pub const Z_DIM: usize = 10;

/// An element of V(12,3) in coordinates a₁,…,a₁₂ over the permuted
/// basis. Only elements of the augmentation ideal (Σaᵢ ≡ 0) can be
/// reduced to Z.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct AugmentedVector {
    coeffs: [Gf3; MAX_POINT as usize],
}

impl AugmentedVector {
    pub fn new(coeffs: [Gf3; MAX_POINT as usize]) -> AugmentedVector {
        AugmentedVector { coeffs }
    }

    pub fn zero() -> AugmentedVector {
        AugmentedVector {
            coeffs: [Gf3::ZERO; MAX_POINT as usize],
        }
    }

    /// The 0/1 indicator vector v_S = Σ_{i∈S} vᵢ.
    pub fn indicator(s: PointSet) -> AugmentedVector {
        let mut v = AugmentedVector::zero();
        for p in s.iter() {
            v.coeffs[p as usize - 1] = Gf3::ONE;
        }
        v
    }

    /// The diagonal Δ = v₁ + … + v₁₂.
    pub fn diagonal() -> AugmentedVector {
        AugmentedVector {
            coeffs: [Gf3::ONE; MAX_POINT as usize],
        }
    }

    /// The ideal basis element u_j = v_j − v₁₂ for 1 ≤ j ≤ 11.
    pub fn basis_u(j: u8) -> AugmentedVector {
        debug_assert!((1..MAX_POINT).contains(&j));
        let mut v = AugmentedVector::zero();
        v.coeffs[j as usize - 1] = Gf3::ONE;
        v.coeffs[MAX_POINT as usize - 1] = -Gf3::ONE;
        v
    }

    pub fn coefficient(&self, i: u8) -> Gf3 {
        debug_assert!((1..=MAX_POINT).contains(&i));
        self.coeffs[i as usize - 1]
    }

    pub fn coefficient_sum(&self) -> Gf3 {
        self.coeffs.iter().fold(Gf3::ZERO, |acc, &c| acc + c)
    }

    /// The image under a basis permutation: Σ aᵢ v_{p(i)}, so the
    /// coefficient of vᵢ moves to position p(i).
    pub fn permuted(&self, p: &Permutation) -> AugmentedVector {
        let mut out = AugmentedVector::zero();
        for i in 1..=MAX_POINT {
            out.coeffs[p.apply(i) as usize - 1] = self.coeffs[i as usize - 1];
        }
        out
    }

    pub fn add(&self, other: &AugmentedVector) -> AugmentedVector {
        let mut out = *self;
        for (a, b) in out.coeffs.iter_mut().zip(&other.coeffs) {
            *a += *b;
        }
        out
    }

    pub fn scale(&self, s: Gf3) -> AugmentedVector {
        let mut out = *self;
        for a in out.coeffs.iter_mut() {
            *a = *a * s;
        }
        out
    }
}

/// Reduces an augmentation-ideal element to its Z coordinates.
///
/// Writing v = Σᵢ≤₁₁ aᵢuᵢ (valid exactly when Σaᵢ = 0) and eliminating
/// z₁₁ = −z₁−…−z₁₀ gives coordinates cᵢ = aᵢ − a₁₁ for i = 1,…,10.
pub fn reduce_to_z(v: &AugmentedVector) -> Result<Gf3Vector> {
    let sum = v.coefficient_sum();
    if !sum.is_zero() {
        return Err(Error::NotInIdeal { sum: sum.value() });
    }
    let a11 = v.coefficient(11);
    Ok(Gf3Vector::from_entries(
        (1..=Z_DIM as u8).map(|i| v.coefficient(i) - a11),
    ))
}

/// The 10×10 matrix of a permutation's action on Z: column j is the
/// reduction of the image of u_j. Matrices compose compatibly with
/// [`Permutation::compose`] (right factor first).
pub fn induced_matrix(p: &Permutation) -> Gf3Matrix {
    let columns: Vec<Gf3Vector> = (1..=Z_DIM as u8)
        .map(|j| {
            reduce_to_z(&AugmentedVector::basis_u(j).permuted(p))
                .expect("permuting preserves the coefficient sum")
        })
        .collect();
    Gf3Matrix::from_fn(Z_DIM, Z_DIM, |r, c| columns[c].get(r))
}

/// A point of PG(9,3): a nonzero Z vector normalized so its first
/// nonzero coordinate is 1.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ProjectivePoint(Gf3Vector);

impl ProjectivePoint {
    pub fn from_vector(v: &Gf3Vector) -> Result<ProjectivePoint> {
        let Some(first) = v.entries().iter().find(|e| !e.is_zero()) else {
            return Err(Error::Structure(
                "the zero vector does not represent a projective point".into(),
            ));
        };
        let scale = first.inverse().expect("entry is nonzero");
        Ok(ProjectivePoint(Gf3Vector::from_entries(
            v.entries().iter().map(|&e| e * scale),
        )))
    }

    /// The canonical representative (first nonzero coordinate = 1).
    pub fn representative(&self) -> &Gf3Vector {
        &self.0
    }
}

/// The vector z_X ∈ Z attached to a block X: the reduction of the 0/1
/// indicator of X (which lies in the ideal since |X| = 6 ≡ 0 mod 3).
/// Fails if `x` is not a block of the design.
pub fn block_z_vector(design: &WittDesign, x: PointSet) -> Result<Gf3Vector> {
    if !design.is_block(x) {
        return Err(Error::NotABlock(x));
    }
    reduce_to_z(&AugmentedVector::indicator(x))
}

/// A Pace-code generator matrix together with the blocks indexing its
/// columns (the column manifest).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PaceGenerator {
    matrix: Gf3Matrix,
    column_blocks: Vec<PointSet>,
}

impl PaceGenerator {
    pub fn new(matrix: Gf3Matrix, column_blocks: Vec<PointSet>) -> Result<PaceGenerator> {
        if matrix.cols() != column_blocks.len() {
            return Err(Error::ColumnMismatch {
                left: matrix.cols(),
                right: column_blocks.len(),
            });
        }
        Ok(PaceGenerator {
            matrix,
            column_blocks,
        })
    }

    pub fn matrix(&self) -> &Gf3Matrix {
        &self.matrix
    }

    /// Blocks indexing the columns, in column order.
    pub fn column_blocks(&self) -> &[PointSet] {
        &self.column_blocks
    }

    /// Position of a block in the column manifest (the manifest is kept
    /// in lexicographic order, so binary search applies).
    pub fn column_index_of(&self, block: PointSet) -> Option<usize> {
        self.column_blocks.binary_search(&block).ok()
    }

    pub fn code(&self) -> crate::code::LinearCode {
        crate::code::LinearCode::new(self.matrix.clone())
    }
}

/// The module-form generator of the Pace code: one column z_X for each
/// of the 66 blocks X avoiding the point 12 (one representative per
/// complementary block pair, since z of the complement is −z_X),
/// columns in lexicographic block order.
pub fn module_form_generator(design: &WittDesign) -> PaceGenerator {
    let column_blocks = design.blocks_avoiding(MAX_POINT);
    let columns: Vec<Gf3Vector> = column_blocks
        .iter()
        .map(|&x| block_z_vector(design, x).expect("manifest entries are blocks"))
        .collect();
    let matrix = Gf3Matrix::from_fn(Z_DIM, columns.len(), |r, c| columns[c].get(r));
    PaceGenerator {
        matrix,
        column_blocks,
    }
}

/// Certifies constructively that a permutation acts monomially on the
/// generator: the induced matrix sends column z_X to ±(column of the
/// image block pair), the sign being + when the image block itself
/// avoids 12 and − when the representative is its complement.
///
/// Returns `Ok(false)` only if the check genuinely fails; a manifest
/// that does not consist of blocks is reported as a structural error.
pub fn monomial_invariance(
    gen: &PaceGenerator,
    design: &WittDesign,
    p: &Permutation,
) -> Result<bool> {
    let transformed = induced_matrix(p).multiply(gen.matrix())?;
    for (j, &x) in gen.column_blocks().iter().enumerate() {
        let image = p.apply_to_set(x);
        let (target_block, negate) = if image.contains(MAX_POINT) {
            (design.complement_of(image)?, true)
        } else {
            (image, false)
        };
        let Some(t) = gen.column_index_of(target_block) else {
            return Err(Error::Structure(format!(
                "image block {target_block} is missing from the column manifest"
            )));
        };
        for r in 0..gen.matrix().rows() {
            let expected = if negate {
                -gen.matrix().get(r, t)
            } else {
                gen.matrix().get(r, t)
            };
            if transformed.get(r, j) != expected {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The linear action of a whole group on Z, with every induced matrix
/// materialized in a compact form suitable for bulk scans.
pub struct InducedAction {
    /// Row-major 10×10 entries (values 0..=2), aligned with the group's
    /// element list.
    mats: Vec<[u8; Z_DIM * Z_DIM]>,
}

impl InducedAction {
    pub fn new(group: &PermGroup) -> InducedAction {
        let mats = group
            .elements()
            .par_iter()
            .map(|p| {
                let m = induced_matrix(p);
                let mut flat = [0u8; Z_DIM * Z_DIM];
                for r in 0..Z_DIM {
                    for c in 0..Z_DIM {
                        flat[r * Z_DIM + c] = m.get(r, c).value();
                    }
                }
                flat
            })
            .collect();
        InducedAction { mats }
    }

    pub fn len(&self) -> usize {
        self.mats.len()
    }

    pub fn is_empty(&self) -> bool {
        self.mats.is_empty()
    }

    pub fn matrix(&self, i: usize) -> Gf3Matrix {
        Gf3Matrix::from_fn(Z_DIM, Z_DIM, |r, c| Gf3::new(self.mats[i][r * Z_DIM + c]))
    }

    /// Number of group elements whose induced matrix fixes the
    /// projective point of `z`, i.e. maps z to ±z (the only scalars in
    /// GF(3)).
    pub fn projective_stabilizer_order(&self, z: &Gf3Vector) -> usize {
        assert_eq!(z.len(), Z_DIM, "Z vectors have length 10");
        let mut zv = [0u8; Z_DIM];
        let mut neg = [0u8; Z_DIM];
        for i in 0..Z_DIM {
            zv[i] = z.get(i).value();
            neg[i] = (3 - zv[i]) % 3;
        }
        self.mats
            .par_iter()
            .filter(|flat| {
                let mut image = [0u8; Z_DIM];
                for (r, out) in image.iter_mut().enumerate() {
                    let row = &flat[r * Z_DIM..(r + 1) * Z_DIM];
                    // Entries are ≤ 2, so the raw dot product is ≤ 40 and
                    // fits comfortably before the final reduction.
                    let dot: u16 = row
                        .iter()
                        .zip(&zv)
                        .map(|(&m, &v)| u16::from(m) * u16::from(v))
                        .sum();
                    *out = (dot % 3) as u8;
                }
                image == zv || image == neg
            })
            .count()
    }
}
