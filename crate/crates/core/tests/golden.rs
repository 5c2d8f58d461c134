//! Golden-value tests against fixtures produced by an independent
//! implementation (a from-scratch Python computation of the same
//! objects). Matrix bytes, block lists, and weight distributions must
//! match exactly.

use std::collections::BTreeMap;

use pace_code::{
    build_design_code, golay_code, module_form_generator, BlockFamily, Gf3Matrix, PointSet,
    WittDesign,
};

const BLOCKS_JSON: &str = include_str!("fixtures/blocks.json");
const PACE_M12_TXT: &str = include_str!("fixtures/pace_m12.txt");
const PACE_WD_JSON: &str = include_str!("fixtures/pace_wd.json");

fn fixture_weights() -> BTreeMap<usize, u64> {
    let raw: BTreeMap<String, u64> = serde_json::from_str(PACE_WD_JSON).expect("fixture parses");
    raw.into_iter()
        .map(|(w, c)| (w.parse().expect("numeric weight"), c))
        .collect()
}

#[test]
fn block_list_matches_fixture() {
    let expected: Vec<Vec<u8>> = serde_json::from_str(BLOCKS_JSON).expect("fixture parses");
    let design = WittDesign::build().expect("design builds");
    let actual: Vec<Vec<u8>> = design.blocks().iter().map(|b| b.to_vec()).collect();
    assert_eq!(actual, expected);
}

#[test]
fn module_form_matrix_bytes_match_fixture() {
    let design = WittDesign::build().expect("design builds");
    let generator = module_form_generator(&design);
    assert_eq!(generator.matrix().to_text(), PACE_M12_TXT);
}

#[test]
fn fixture_matrix_round_trips_through_parser() {
    let parsed = Gf3Matrix::parse_text(PACE_M12_TXT).expect("fixture parses");
    assert_eq!(parsed.rows(), 10);
    assert_eq!(parsed.cols(), 66);
    assert_eq!(parsed.to_text(), PACE_M12_TXT);
    assert_eq!(parsed.rank(), 10);
}

#[test]
fn golay_weight_distribution_is_the_classical_one() {
    let wd = golay_code().weight_distribution().expect("enumerable");
    let expected: BTreeMap<usize, u64> =
        [(0, 1), (6, 264), (9, 440), (12, 24)].into_iter().collect();
    assert_eq!(wd.counts, expected);
    assert_eq!(wd.total(), 729);
}

#[test]
fn module_form_weight_distribution_matches_fixture() {
    let design = WittDesign::build().expect("design builds");
    let code = module_form_generator(&design).code();
    let wd = code.weight_distribution().expect("enumerable");
    assert_eq!(wd.counts, fixture_weights());
    assert_eq!(wd.total(), 59049);
}

#[test]
fn design_form_weight_distribution_matches_fixture() {
    let design = WittDesign::build().expect("design builds");
    let family = BlockFamily::from_design(&design);
    let a = PointSet::singleton(12).expect("valid point");
    let b = PointSet::singleton(11).expect("valid point");
    let code = build_design_code(&family, a, b).expect("valid deletion pair");
    let wd = code.code().weight_distribution().expect("enumerable");
    assert_eq!(wd.counts, fixture_weights());
}
