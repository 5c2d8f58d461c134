//! Mechanical verification of every quantitative claim: group orders and
//! stabilizers, the design lemmas, the nullity bound, the exact
//! case-analysis maxima, and the final code-parameter certificate.
//!
//! Each check produces a [`VerificationReport`] carrying the claimed
//! value and the exactly computed one; nothing passes by tolerance.

use std::collections::BTreeMap;
use std::fmt;

use itertools::Itertools;
use rayon::prelude::*;
use serde::Serialize;

use crate::code::WeightDistribution;
use crate::design::{
    build_design_code, design_form_of, singleton_pair_invariance, BlockFamily, DesignCode,
};
use crate::error::{Error, Result};
use crate::gf3::{Gf3, Gf3Vector};
use crate::golay::WittDesign;
use crate::pace::{
    block_z_vector, induced_matrix, module_form_generator, InducedAction, PaceGenerator,
};
use crate::perm::{hexad_stabilizer_generators, m12_generators, PermGroup};
use crate::points::{PointSet, MAX_POINT};

/// Outcome of a single named check.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct VerificationReport {
    pub check: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

impl VerificationReport {
    /// Exact equality of two integers.
    pub fn exact(check: &str, expected: i64, actual: i64) -> VerificationReport {
        VerificationReport {
            check: check.to_string(),
            expected: expected.to_string(),
            actual: actual.to_string(),
            pass: expected == actual,
        }
    }

    /// An upper bound with the achieved extremum recorded.
    pub fn bounded(check: &str, bound: usize, achieved: usize) -> VerificationReport {
        VerificationReport {
            check: check.to_string(),
            expected: format!("<= {bound}"),
            actual: achieved.to_string(),
            pass: achieved <= bound,
        }
    }

    /// A property that must hold, with an informative actual value.
    pub fn holds(check: &str, actual: impl fmt::Display, pass: bool) -> VerificationReport {
        VerificationReport {
            check: check.to_string(),
            expected: "true".to_string(),
            actual: actual.to_string(),
            pass,
        }
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.pass { "PASS" } else { "FAIL" };
        write!(
            f,
            "[{tag}] {}: expected {}, actual {}",
            self.check, self.expected, self.actual
        )
    }
}

/// True iff every report passed.
pub fn all_pass(reports: &[VerificationReport]) -> bool {
    reports.iter().all(|r| r.pass)
}

/// A nullity query: disjoint subsets U, V of {1,…,10}.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NullityQuery {
    u: PointSet,
    v: PointSet,
}

impl NullityQuery {
    pub fn new(u: PointSet, v: PointSet) -> Result<NullityQuery> {
        if !u.is_disjoint(v) {
            return Err(Error::OverlappingSets(u, v));
        }
        let allowed = PointSet::first_points(10);
        for p in u.union(v).iter() {
            if !allowed.contains(p) {
                return Err(Error::PointOutOfRange { point: p, max: 10 });
            }
        }
        Ok(NullityQuery { u, v })
    }

    pub fn u(&self) -> PointSet {
        self.u
    }

    pub fn v(&self) -> PointSet {
        self.v
    }
}

/// A k_c query: sets U, V, W partitioning {1,…,11} and a congruence
/// class c mod 3.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct KcQuery {
    u: PointSet,
    v: PointSet,
    w: PointSet,
    c: Gf3,
}

impl KcQuery {
    pub fn new(u: PointSet, v: PointSet, w: PointSet, c: Gf3) -> Result<KcQuery> {
        if !u.is_disjoint(v) {
            return Err(Error::OverlappingSets(u, v));
        }
        if !u.is_disjoint(w) {
            return Err(Error::OverlappingSets(u, w));
        }
        if !v.is_disjoint(w) {
            return Err(Error::OverlappingSets(v, w));
        }
        if u.union(v).union(w) != PointSet::first_points(11) {
            return Err(Error::NotAPartition { expected: 11 });
        }
        Ok(KcQuery { u, v, w, c })
    }
}

/// A part-size triple with the cited bound for each congruence class
/// (`None` where no bound is cited).
type CaseBound = ((usize, usize, usize), [Option<usize>; 3]);

/// The claimed upper bounds of the case analysis.
const CASE_BOUNDS: [CaseBound; 4] = [
    ((5, 5, 1), [Some(20), Some(10), None]),
    ((5, 4, 2), [Some(8), Some(12), Some(12)]),
    ((5, 3, 3), [Some(5), Some(9), Some(18)]),
    ((4, 4, 3), [Some(6), Some(6), Some(18)]),
];

/// The eleven printed intersection numbers i(a,b).
const PRINTED_INTERSECTION_NUMBERS: [((usize, usize), usize); 11] = [
    ((5, 0), 1),
    ((4, 0), 4),
    ((3, 0), 12),
    ((2, 0), 30),
    ((1, 0), 66),
    ((1, 1), 36),
    ((2, 1), 18),
    ((3, 1), 8),
    ((4, 1), 3),
    ((2, 2), 10),
    ((3, 2), 5),
];

/// Holds every structure the checks need, built once.
pub struct Verifier {
    design: WittDesign,
    m12: PermGroup,
    hexad_group: PermGroup,
    module_gen: PaceGenerator,
    /// Design form with (A, B) = ({12}, {11}): columns share the module
    /// form's indexing by blocks avoiding 12, rows are the points 1..10.
    design_gen: DesignCode,
    /// Bitmasks of the 66 blocks avoiding 12, aligned with the columns.
    masks66: Vec<u16>,
    /// Bitmasks of all 132 blocks.
    masks_all: Vec<u16>,
}

impl Verifier {
    pub fn new() -> Result<Verifier> {
        let design = WittDesign::build()?;
        let m12 = PermGroup::generate(&m12_generators());
        let hexad_group = PermGroup::generate(&hexad_stabilizer_generators());
        let module_gen = module_form_generator(&design);
        let family = BlockFamily::from_design(&design);
        let design_gen =
            build_design_code(&family, PointSet::singleton(12)?, PointSet::singleton(11)?)?;
        let masks66 = module_gen
            .column_blocks()
            .iter()
            .map(|b| b.bits())
            .collect();
        let masks_all = design.blocks().iter().map(|b| b.bits()).collect();
        Ok(Verifier {
            design,
            m12,
            hexad_group,
            module_gen,
            design_gen,
            masks66,
            masks_all,
        })
    }

    pub fn design(&self) -> &WittDesign {
        &self.design
    }

    pub fn m12(&self) -> &PermGroup {
        &self.m12
    }

    pub fn module_generator(&self) -> &PaceGenerator {
        &self.module_gen
    }

    pub fn design_generator(&self) -> &DesignCode {
        &self.design_gen
    }

    /// ν(U,V): the number of blocks avoiding 12 whose intersections with
    /// U and V have congruent sizes mod 3.
    pub fn nullity(&self, q: &NullityQuery) -> usize {
        let (u, v) = (q.u.bits(), q.v.bits());
        self.masks66
            .iter()
            .filter(|&&x| (x & u).count_ones() % 3 == (x & v).count_ones() % 3)
            .count()
    }

    /// k_c(U,V,W): the number of blocks avoiding 12 meeting each of U,
    /// V, W in a size congruent to c mod 3.
    pub fn kc_count(&self, q: &KcQuery) -> usize {
        let (u, v, w) = (q.u.bits(), q.v.bits(), q.w.bits());
        let c = u32::from(q.c.value());
        self.masks66
            .iter()
            .filter(|&&x| {
                (x & u).count_ones() % 3 == c
                    && (x & v).count_ones() % 3 == c
                    && (x & w).count_ones() % 3 == c
            })
            .count()
    }

    /// Group-theoretic checks: orders, transitivity, stabilizers,
    /// orbits, and the monomial action on the generator matrix.
    pub fn group_checks(&self) -> Vec<VerificationReport> {
        let mut reports = Vec::new();
        reports.push(VerificationReport::exact(
            "group-order-m12",
            95040,
            self.m12.order() as i64,
        ));
        let sharply = self.m12.is_sharply_k_transitive(5);
        reports.push(VerificationReport::holds(
            "sharply-5-transitive",
            sharply,
            sharply,
        ));
        reports.push(VerificationReport::exact(
            "group-order-hexad-stabilizer",
            120,
            self.hexad_group.order() as i64,
        ));
        let hexad = PointSet::first_points(6);
        let fixing = self.hexad_group.set_stabilizer_order(hexad);
        reports.push(VerificationReport::holds(
            "hexad-setwise-stabilized",
            format!(
                "{fixing} of {} elements fix {{1..6}} setwise",
                self.hexad_group.order()
            ),
            fixing == self.hexad_group.order(),
        ));

        let block = self.design.blocks()[0];
        let two_set = PointSet::from_points([1, 2]).expect("valid points");
        for (name, set, expected) in [
            ("block", block, 720usize),
            ("information-set", hexad, 120),
            ("2-set", two_set, 1440),
        ] {
            let stab = self.m12.set_stabilizer_order(set);
            let orbit = self.m12.orbit_of_set(set);
            reports.push(VerificationReport::exact(
                &format!("stabilizer-order-{name}"),
                expected as i64,
                stab as i64,
            ));
            reports.push(VerificationReport::exact(
                &format!("orbit-size-{name}"),
                (95040 / expected) as i64,
                orbit.len() as i64,
            ));
            reports.push(VerificationReport::exact(
                &format!("orbit-stabilizer-product-{name}"),
                95040,
                (orbit.len() * stab) as i64,
            ));
            if name == "block" {
                reports.push(VerificationReport::holds(
                    "block-orbit-equals-block-list",
                    orbit == self.design.blocks(),
                    orbit == self.design.blocks(),
                ));
            }
        }

        reports.extend(self.projective_stabilizer_checks());
        reports.extend(self.invariance_checks());
        reports
    }

    /// For each of the 66 projective points of the orbit, the number of
    /// group elements whose induced matrix fixes the point, compared
    /// with the setwise stabilizer of the complementary block pair.
    fn projective_stabilizer_checks(&self) -> Vec<VerificationReport> {
        let action = InducedAction::new(&self.m12);
        let mut linear_orders = Vec::with_capacity(66);
        let mut routes_agree = true;
        for &x in self.module_gen.column_blocks() {
            let z = block_z_vector(&self.design, x).expect("manifest blocks");
            let linear = action.projective_stabilizer_order(&z);
            let complement = x.complement_in(MAX_POINT);
            let pair = self
                .m12
                .elements()
                .par_iter()
                .filter(|p| {
                    let image = p.apply_to_set(x);
                    image == x || image == complement
                })
                .count();
            routes_agree &= linear == pair;
            linear_orders.push(linear);
        }
        let uniform = linear_orders.iter().all(|&o| o == 1440);
        let mut reports = Vec::new();
        reports.push(VerificationReport::holds(
            "projective-point-stabilizers-all-1440",
            if uniform {
                "1440 for all 66 points".to_string()
            } else {
                format!(
                    "orders {:?}",
                    linear_orders.iter().unique().collect::<Vec<_>>()
                )
            },
            uniform,
        ));
        reports.push(VerificationReport::holds(
            "projective-stabilizer-matches-block-pair-stabilizer",
            routes_agree,
            routes_agree,
        ));
        reports.push(VerificationReport::exact(
            "orbit-stabilizer-product-projective-point",
            95040,
            (66 * linear_orders[0]) as i64,
        ));
        reports
    }

    /// Monomial invariance of the generator under all five generators of
    /// M₁₂, and the homomorphism property of the induced matrices.
    fn invariance_checks(&self) -> Vec<VerificationReport> {
        let gens = m12_generators();
        let invariant = gens.iter().try_fold(true, |acc, p| {
            Ok::<bool, Error>(
                acc && crate::pace::monomial_invariance(&self.module_gen, &self.design, p)?,
            )
        });
        let invariant = invariant.unwrap_or(false);
        let homomorphic = gens.iter().all(|a| {
            gens.iter().all(|b| {
                let product = induced_matrix(a)
                    .multiply(&induced_matrix(b))
                    .expect("10×10 matrices");
                induced_matrix(&a.compose(b)) == product
            })
        });
        vec![
            VerificationReport::holds(
                "monomial-invariance-generators",
                format!("{invariant} for all 5 generators"),
                invariant,
            ),
            VerificationReport::holds(
                "induced-matrix-homomorphism",
                format!("{homomorphic} for all 25 generator pairs"),
                homomorphic,
            ),
        ]
    }

    /// Design-side lemmas: the classification counts, the Steiner and
    /// complement properties, the intersection table, and the three
    /// combinatorial lemmas.
    pub fn lemma_checks(&self) -> Vec<VerificationReport> {
        let mut reports = vec![
            VerificationReport::exact(
                "six-subset-classification-blocks",
                132,
                self.design.blocks().len() as i64,
            ),
            VerificationReport::exact(
                "six-subset-classification-information-sets",
                792,
                match crate::golay::classify_six_sets(&crate::golay::golay_generator()) {
                    Ok((_, info)) => info.len() as i64,
                    Err(_) => -1,
                },
            ),
            self.steiner_report(),
            self.complement_report(),
        ];
        reports.extend(self.intersection_table_reports());
        reports.extend(self.five_triples_reports());
        reports.extend(self.twenty_thirty_reports());
        reports.push(self.quad_partition_report());
        reports
    }

    fn steiner_report(&self) -> VerificationReport {
        let mut in_exactly_one = 0usize;
        let mut total = 0usize;
        for combo in (1..=MAX_POINT).combinations(5) {
            let five = PointSet::from_points(combo).expect("valid points");
            total += 1;
            let containing = self
                .design
                .blocks()
                .iter()
                .filter(|b| five.is_subset_of(**b))
                .count();
            if containing == 1 {
                in_exactly_one += 1;
            }
        }
        VerificationReport::holds(
            "steiner-property",
            format!("{in_exactly_one} of {total} five-subsets lie in exactly one block"),
            in_exactly_one == total,
        )
    }

    fn complement_report(&self) -> VerificationReport {
        let closed = self
            .design
            .blocks()
            .iter()
            .all(|b| self.design.is_block(b.complement_in(MAX_POINT)));
        VerificationReport::holds("complement-closure", closed, closed)
    }

    fn intersection_table_reports(&self) -> Vec<VerificationReport> {
        let mut reports = Vec::new();
        match self.design.intersection_table() {
            Ok(table) => {
                reports.push(VerificationReport::holds(
                    "intersection-table-placement-independent",
                    true,
                    true,
                ));
                for ((a, b), expected) in PRINTED_INTERSECTION_NUMBERS {
                    let actual = table.get(a, b).map_or(-1, |v| v as i64);
                    reports.push(VerificationReport::exact(
                        &format!("intersection-i({a},{b})"),
                        expected as i64,
                        actual,
                    ));
                }
                reports.push(VerificationReport::exact(
                    "intersection-i(0,0)",
                    132,
                    table.get(0, 0).map_or(-1, |v| v as i64),
                ));
                let symmetric = table
                    .entries()
                    .all(|((a, b), v)| table.get(b, a) == Some(v));
                reports.push(VerificationReport::holds(
                    "intersection-table-symmetric",
                    symmetric,
                    symmetric,
                ));
                reports.push(VerificationReport::holds(
                    "intersection-table-recurrence",
                    table.satisfies_recurrence(),
                    table.satisfies_recurrence(),
                ));
            }
            Err(e) => {
                reports.push(VerificationReport::holds(
                    "intersection-table-placement-independent",
                    format!("error: {e}"),
                    false,
                ));
            }
        }
        reports
    }

    /// Every family of five distinct 3-subsets of a 6-set contains two
    /// members meeting in exactly 2 points — and "five" is tight: some
    /// four-member family has no such pair.
    fn five_triples_reports(&self) -> Vec<VerificationReport> {
        let triples: Vec<u16> = (1u8..=6)
            .combinations(3)
            .map(|c| PointSet::from_points(c).expect("valid points").bits())
            .collect();
        let has_close_pair = |family: &[&u16]| {
            family
                .iter()
                .tuple_combinations()
                .any(|(&&a, &&b)| (a & b).count_ones() == 2)
        };
        let failing_five = triples
            .iter()
            .combinations(5)
            .filter(|family| !has_close_pair(family))
            .count();
        let witness_four = triples
            .iter()
            .combinations(4)
            .filter(|family| !has_close_pair(family))
            .count();
        vec![
            VerificationReport::exact(
                "five-triples-families-without-close-pair",
                0,
                failing_five as i64,
            ),
            VerificationReport::holds(
                "four-triple-counterexample-exists",
                format!("{witness_four} four-member families avoid 2-point meetings"),
                witness_four > 0,
            ),
        ]
    }

    /// For every 6-subset U of {1..11}, the number of blocks avoiding 12
    /// that meet U in exactly 3 points is 20 when U is itself a block
    /// and 30 otherwise.
    fn twenty_thirty_reports(&self) -> Vec<VerificationReport> {
        let mut matching = 0usize;
        let mut total = 0usize;
        let mut block_cases = 0usize;
        for combo in (1u8..=11).combinations(6) {
            let u = PointSet::from_points(combo).expect("valid points");
            let bits = u.bits();
            total += 1;
            let count = self
                .masks66
                .iter()
                .filter(|&&x| (x & bits).count_ones() == 3)
                .count();
            let expected = if self.design.is_block(u) {
                block_cases += 1;
                20
            } else {
                30
            };
            if count == expected {
                matching += 1;
            }
        }
        vec![
            VerificationReport::holds(
                "six-set-half-meeting-rule",
                format!("{matching} of {total} six-subsets match (20 for blocks, 30 otherwise)"),
                matching == total,
            ),
            VerificationReport::exact("blocks-within-11-points", 66, block_cases as i64),
        ]
    }

    /// Over every ordered partition of {1..12} into three 4-sets A, B, C
    /// and every P ∈ C, at most 18 of the 132 blocks meet each of A, B,
    /// C in exactly 2 points while avoiding P.
    fn quad_partition_report(&self) -> VerificationReport {
        let all: Vec<u8> = (1..=MAX_POINT).collect();
        let a_choices: Vec<PointSet> = all
            .iter()
            .copied()
            .combinations(4)
            .map(|c| PointSet::from_points(c).expect("valid points"))
            .collect();
        let max = a_choices
            .par_iter()
            .map(|&a| {
                let rest: Vec<u8> = all.iter().copied().filter(|p| !a.contains(*p)).collect();
                let mut local = 0usize;
                for b_combo in rest.iter().copied().combinations(4) {
                    let b = PointSet::from_points(b_combo).expect("valid points");
                    let c = a.union(b).complement_in(MAX_POINT);
                    let (ab, bb, cb) = (a.bits(), b.bits(), c.bits());
                    let balanced: Vec<u16> = self
                        .masks_all
                        .iter()
                        .copied()
                        .filter(|&x| {
                            (x & ab).count_ones() == 2
                                && (x & bb).count_ones() == 2
                                && (x & cb).count_ones() == 2
                        })
                        .collect();
                    for p in c.iter() {
                        let avoiding = balanced
                            .iter()
                            .filter(|&&x| x & (1 << (p - 1)) == 0)
                            .count();
                        local = local.max(avoiding);
                    }
                }
                local
            })
            .reduce(|| 0, usize::max);
        VerificationReport::bounded("quad-partition-avoiding-point-bound", 18, max)
    }

    /// The exact maxima of k_c over all partitions of {1..11} with the
    /// cited part sizes, checked against every cited bound.
    pub fn case_checks(&self) -> Vec<VerificationReport> {
        let mut reports = Vec::new();
        for ((su, sv, sw), bounds) in CASE_BOUNDS {
            let maxima = self.max_kc_over_partitions(su, sv, sw);
            for (c, bound) in bounds.iter().enumerate() {
                if let Some(bound) = bound {
                    reports.push(VerificationReport::bounded(
                        &format!("max-k{c}({su},{sv},{sw})"),
                        *bound,
                        maxima[c],
                    ));
                }
            }
        }
        reports
    }

    /// Maximum of k_c over all ordered partitions of {1..11} into parts
    /// of the given sizes, for each class c simultaneously.
    fn max_kc_over_partitions(&self, su: usize, sv: usize, sw: usize) -> [usize; 3] {
        debug_assert_eq!(su + sv + sw, 11);
        let eleven = PointSet::first_points(11);
        let u_choices: Vec<PointSet> = (1u8..=11)
            .combinations(su)
            .map(|c| PointSet::from_points(c).expect("valid points"))
            .collect();
        u_choices
            .par_iter()
            .map(|&u| {
                let rest: Vec<u8> = (1u8..=11).filter(|p| !u.contains(*p)).collect();
                let mut local = [0usize; 3];
                for v_combo in rest.iter().copied().combinations(sv) {
                    let v = PointSet::from_points(v_combo).expect("valid points");
                    let w = eleven.difference(u.union(v));
                    let (ub, vb, wb) = (u.bits(), v.bits(), w.bits());
                    let mut counts = [0usize; 3];
                    for &x in &self.masks66 {
                        let cu = (x & ub).count_ones() % 3;
                        if (x & vb).count_ones() % 3 == cu && (x & wb).count_ones() % 3 == cu {
                            counts[cu as usize] += 1;
                        }
                    }
                    for c in 0..3 {
                        local[c] = local[c].max(counts[c]);
                    }
                }
                local
            })
            .reduce(
                || [0; 3],
                |a, b| [a[0].max(b[0]), a[1].max(b[1]), a[2].max(b[2])],
            )
    }

    /// The final certificate: code parameters by two constructions, the
    /// explicit equivalence, the full nullity sweep, and the invariance
    /// bundle.
    pub fn theorem_checks(&self) -> Vec<VerificationReport> {
        let mut reports = Vec::new();
        let module_code = self.module_gen.code();
        let design_code = self.design_gen.code();
        let module_wd = module_code
            .weight_distribution()
            .expect("dimension 10 is enumerable");
        let design_wd = design_code
            .weight_distribution()
            .expect("dimension 10 is enumerable");
        for (label, code, wd) in [
            ("module-form", &module_code, &module_wd),
            ("design-form", &design_code, &design_wd),
        ] {
            reports.push(VerificationReport::exact(
                &format!("{label}-length"),
                66,
                code.n() as i64,
            ));
            reports.push(VerificationReport::exact(
                &format!("{label}-dimension"),
                10,
                code.k() as i64,
            ));
            reports.push(VerificationReport::exact(
                &format!("{label}-min-distance"),
                36,
                wd.min_nonzero_weight().map_or(-1, |w| w as i64),
            ));
            reports.push(VerificationReport::holds(
                &format!("{label}-self-orthogonal"),
                code.is_self_orthogonal(),
                code.is_self_orthogonal(),
            ));
            reports.push(VerificationReport::holds(
                &format!("{label}-weights-divisible-by-3"),
                wd.all_weights_divisible_by(3),
                wd.all_weights_divisible_by(3),
            ));
        }
        reports.extend(self.equivalence_checks(&module_wd));
        reports.extend(self.nullity_checks(&module_wd));
        reports.extend(self.kc_spot_checks());
        reports.extend(self.invariance_checks());
        dedupe_by_name(reports)
    }

    /// The constructive equivalence of the two constructions.
    fn equivalence_checks(&self, module_wd: &WeightDistribution) -> Vec<VerificationReport> {
        let mut reports = Vec::new();
        let family = BlockFamily::from_design(&self.design);
        let mapped = design_form_of(&self.module_gen, &self.design);
        let direct = build_design_code(
            &family,
            PointSet::singleton(11).expect("valid point"),
            PointSet::singleton(12).expect("valid point"),
        );
        let exact = matches!((&mapped, &direct), (Ok(m), Ok(d)) if m == d);
        reports.push(VerificationReport::holds(
            "column-map-equals-direct-build",
            exact,
            exact,
        ));
        if let Ok(mapped) = &mapped {
            let wd = mapped
                .code()
                .weight_distribution()
                .expect("dimension 10 is enumerable");
            reports.push(VerificationReport::holds(
                "constructions-share-weight-distribution",
                &wd == module_wd,
                &wd == module_wd,
            ));
        }
        let same_row_space = self
            .module_gen
            .matrix()
            .row_space_equal(self.design_gen.matrix())
            .unwrap_or(false);
        reports.push(VerificationReport::holds(
            "module-and-design-form-share-row-space",
            same_row_space,
            same_row_space,
        ));
        let invariant = singleton_pair_invariance(&self.design).unwrap_or(false);
        reports.push(VerificationReport::holds(
            "singleton-pair-invariance",
            format!("{invariant} over all 132 ordered pairs"),
            invariant,
        ));
        reports
    }

    /// Exhaustive sweep of all 3¹⁰ assignments of the points 1..10 to
    /// U, V, or neither.
    fn nullity_checks(&self, module_wd: &WeightDistribution) -> Vec<VerificationReport> {
        let sweep = self.nullity_sweep();
        let mut reports = Vec::new();
        reports.push(VerificationReport::exact(
            "nullity-empty-pair",
            66,
            sweep.empty_value as i64,
        ));
        reports.push(VerificationReport::exact(
            "nullity-max-nonempty",
            30,
            sweep.max_nonempty as i64,
        ));
        reports.push(VerificationReport::holds(
            "nullities-divisible-by-3",
            sweep.all_divisible_by_3,
            sweep.all_divisible_by_3,
        ));
        reports.push(VerificationReport::holds(
            "nullity-plus-weight-is-66",
            format!("{} over all 59049 assignments", sweep.complement_identity),
            sweep.complement_identity,
        ));
        reports.push(VerificationReport::holds(
            "nullity-symmetric-in-u-v",
            sweep.symmetric,
            sweep.symmetric,
        ));
        let counts_match = sweep.weight_counts == module_wd.counts;
        reports.push(VerificationReport::holds(
            "nullity-sweep-reproduces-weight-distribution",
            counts_match,
            counts_match,
        ));
        reports.push(VerificationReport::exact(
            "min-distance-from-nullity-bound",
            36,
            66 - sweep.max_nonempty as i64,
        ));
        reports.push(VerificationReport::exact(
            "min-distance-enumeration-vs-nullity",
            module_wd.min_nonzero_weight().map_or(-1, |w| w as i64),
            66 - sweep.max_nonempty as i64,
        ));
        let full = NullityQuery::new(PointSet::first_points(10), PointSet::EMPTY)
            .expect("disjoint by construction");
        reports.push(VerificationReport::exact(
            "nullity-all-rows",
            30,
            self.nullity(&full) as i64,
        ));
        let single_rows_30 = (1u8..=10).all(|i| {
            let q = NullityQuery::new(
                PointSet::singleton(i).expect("valid point"),
                PointSet::EMPTY,
            )
            .expect("disjoint by construction");
            self.nullity(&q) == 30
        });
        reports.push(VerificationReport::holds(
            "nullity-single-row-is-30",
            single_rows_30,
            single_rows_30,
        ));
        reports
    }

    fn nullity_sweep(&self) -> NullitySweep {
        let rows: Vec<Gf3Vector> = (0..self.design_gen.matrix().rows())
            .map(|r| self.design_gen.matrix().row_vector(r))
            .collect();
        let total: u32 = 3u32.pow(10);
        // For each assignment: the nullity by direct block counting and
        // the weight of the matching codeword by row arithmetic. Digit 1
        // puts a point in U (coefficient +1), digit 2 in V (coefficient
        // 2 ≡ −1); the rows are independent, so the 59049 codewords are
        // exactly the code.
        let per: Vec<(u8, u8)> = (0..total)
            .into_par_iter()
            .map(|index| {
                let mut digits = [0u8; 10];
                let mut rem = index;
                for d in digits.iter_mut() {
                    *d = (rem % 3) as u8;
                    rem /= 3;
                }
                let (mut u, mut v) = (0u16, 0u16);
                for (i, &d) in digits.iter().enumerate() {
                    match d {
                        1 => u |= 1 << i,
                        2 => v |= 1 << i,
                        _ => {}
                    }
                }
                let nullity = self
                    .masks66
                    .iter()
                    .filter(|&&x| (x & u).count_ones() % 3 == (x & v).count_ones() % 3)
                    .count();
                let mut word = Gf3Vector::zeros(rows[0].len());
                for (i, &d) in digits.iter().enumerate() {
                    if d != 0 {
                        word.add_scaled_assign(&rows[i], Gf3::new(d))
                            .expect("row lengths agree");
                    }
                }
                (nullity as u8, word.weight() as u8)
            })
            .collect();

        let empty_value = usize::from(per[0].0);
        let max_nonempty = per[1..]
            .iter()
            .map(|&(n, _)| usize::from(n))
            .max()
            .expect("59048 nonempty assignments");
        let all_divisible_by_3 = per.iter().all(|&(n, _)| n % 3 == 0);
        let complement_identity = per
            .iter()
            .all(|&(n, w)| usize::from(n) + usize::from(w) == 66);
        // Swapping U and V is the digit substitution 1 ↔ 2.
        let symmetric = (0..total as usize).all(|index| {
            let mut rem = index;
            let mut swapped = 0usize;
            let mut power = 1usize;
            for _ in 0..10 {
                let d = rem % 3;
                rem /= 3;
                let s = match d {
                    1 => 2,
                    2 => 1,
                    _ => 0,
                };
                swapped += s * power;
                power *= 3;
            }
            per[index].0 == per[swapped].0
        });
        let mut weight_counts = BTreeMap::new();
        for &(_, w) in &per {
            *weight_counts.entry(usize::from(w)).or_insert(0u64) += 1;
        }
        NullitySweep {
            empty_value,
            max_nonempty,
            all_divisible_by_3,
            complement_identity,
            symmetric,
            weight_counts,
        }
    }

    /// Spot checks tying k_c to the nullity and to its role symmetry.
    fn kc_spot_checks(&self) -> Vec<VerificationReport> {
        let mut reports = Vec::new();
        // k₀(10,0,1): U = {1..10}, V = ∅, W = {11}.
        let u = PointSet::first_points(10);
        let w = PointSet::singleton(11).expect("valid point");
        let q = KcQuery::new(u, PointSet::EMPTY, w, Gf3::ZERO).expect("a partition");
        reports.push(VerificationReport::exact(
            "kc-k0(10,0,1)",
            30,
            self.kc_count(&q) as i64,
        ));
        // For the first partition of each cited size triple: the classes
        // sum to the nullity, and permuting the roles of U, V, W leaves
        // every class count unchanged.
        let mut sums_ok = true;
        let mut symmetric = true;
        for ((su, sv, _), _) in CASE_BOUNDS {
            let u = PointSet::from_points(1..=su as u8).expect("valid points");
            let v = PointSet::from_points(su as u8 + 1..=(su + sv) as u8).expect("valid points");
            let w = PointSet::first_points(11).difference(u.union(v));
            let counts: Vec<usize> = (0..3u8)
                .map(|c| {
                    let q = KcQuery::new(u, v, w, Gf3::new(c)).expect("a partition");
                    self.kc_count(&q)
                })
                .collect();
            let nq = NullityQuery::new(u, v).expect("inside {1..10}");
            sums_ok &= counts.iter().sum::<usize>() == self.nullity(&nq);
            for (a, b, c) in [(v, w, u), (w, u, v), (v, u, w), (u, w, v), (w, v, u)] {
                for (ci, &count) in counts.iter().enumerate() {
                    let q = KcQuery::new(a, b, c, Gf3::new(ci as u8)).expect("a partition");
                    symmetric &= self.kc_count(&q) == count;
                }
            }
        }
        reports.push(VerificationReport::holds(
            "kc-classes-sum-to-nullity",
            sums_ok,
            sums_ok,
        ));
        reports.push(VerificationReport::holds(
            "kc-role-permutation-symmetric",
            symmetric,
            symmetric,
        ));
        reports
    }

    /// Every check in every scope, merged with duplicates (checks that
    /// appear in more than one scope) reported once.
    pub fn all_checks(&self) -> Vec<VerificationReport> {
        let mut reports = Vec::new();
        reports.extend(self.group_checks());
        reports.extend(self.lemma_checks());
        reports.extend(self.case_checks());
        reports.extend(self.theorem_checks());
        dedupe_by_name(reports)
    }
}

struct NullitySweep {
    empty_value: usize,
    max_nonempty: usize,
    all_divisible_by_3: bool,
    complement_identity: bool,
    symmetric: bool,
    weight_counts: BTreeMap<usize, u64>,
}

fn dedupe_by_name(reports: Vec<VerificationReport>) -> Vec<VerificationReport> {
    let mut seen = std::collections::HashSet::new();
    reports
        .into_iter()
        .filter(|r| seen.insert(r.check.clone()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn verifier() -> &'static Verifier {
        use std::sync::OnceLock;
        static VERIFIER: OnceLock<Verifier> = OnceLock::new();
        VERIFIER.get_or_init(|| Verifier::new().expect("construction succeeds"))
    }

    #[test]
    fn query_validation() {
        let u = PointSet::from_points([1, 2]).unwrap();
        let v = PointSet::from_points([2, 3]).unwrap();
        assert!(matches!(
            NullityQuery::new(u, v),
            Err(Error::OverlappingSets(..))
        ));
        let with11 = PointSet::from_points([11]).unwrap();
        assert!(matches!(
            NullityQuery::new(with11, PointSet::EMPTY),
            Err(Error::PointOutOfRange { point: 11, max: 10 })
        ));
        let u = PointSet::from_points(1..=5).unwrap();
        let v = PointSet::from_points(6..=9).unwrap();
        let w = PointSet::from_points([10, 11]).unwrap();
        assert!(KcQuery::new(u, v, w, Gf3::ZERO).is_ok());
        let short = PointSet::from_points([10]).unwrap();
        assert!(matches!(
            KcQuery::new(u, v, short, Gf3::ZERO),
            Err(Error::NotAPartition { expected: 11 })
        ));
        assert!(matches!(
            KcQuery::new(u, v, u, Gf3::ZERO),
            Err(Error::OverlappingSets(..))
        ));
    }

    #[test]
    fn nullity_examples() {
        let v = verifier();
        let empty = NullityQuery::new(PointSet::EMPTY, PointSet::EMPTY).unwrap();
        assert_eq!(v.nullity(&empty), 66);
        let all = NullityQuery::new(PointSet::first_points(10), PointSet::EMPTY).unwrap();
        assert_eq!(v.nullity(&all), 30);
        for i in 1..=10 {
            let single =
                NullityQuery::new(PointSet::singleton(i).unwrap(), PointSet::EMPTY).unwrap();
            assert_eq!(v.nullity(&single), 30, "point {i}");
        }
    }

    #[test]
    fn kc_example_and_consistency() {
        let v = verifier();
        let q = KcQuery::new(
            PointSet::first_points(10),
            PointSet::EMPTY,
            PointSet::singleton(11).unwrap(),
            Gf3::ZERO,
        )
        .unwrap();
        assert_eq!(v.kc_count(&q), 30);
    }

    #[test]
    fn case_maxima_match_frozen_values() {
        let v = verifier();
        assert_eq!(v.max_kc_over_partitions(5, 5, 1), [16, 8, 0]);
        assert_eq!(v.max_kc_over_partitions(4, 4, 3), [6, 6, 18]);
    }

    #[test]
    fn report_formatting() {
        let r = VerificationReport::exact("sample", 3, 4);
        assert!(!r.pass);
        assert_eq!(r.to_string(), "[FAIL] sample: expected 3, actual 4");
        let b = VerificationReport::bounded("bound", 10, 8);
        assert!(b.pass);
        assert_eq!(b.expected, "<= 10");
        let json = serde_json::to_string(&b).unwrap();
        assert_eq!(
            json,
            r#"{"check":"bound","expected":"<= 10","actual":"8","pass":true}"#
        );
    }

    #[test]
    fn dedupe_keeps_first_occurrence() {
        let reports = vec![
            VerificationReport::exact("a", 1, 1),
            VerificationReport::exact("a", 2, 2),
            VerificationReport::exact("b", 3, 3),
        ];
        let deduped = dedupe_by_name(reports);
        assert_eq!(deduped.len(), 2);
        assert_eq!(deduped[0].expected, "1");
    }
}
