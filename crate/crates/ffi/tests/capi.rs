//! Exercises the C ABI exactly as a foreign caller would: through raw
//! pointers, checking statuses, and freeing every returned object.

use std::ffi::{c_char, CStr, CString};
use std::ptr;

use pace_code_ffi::*;

unsafe fn own_string(raw: *mut c_char) -> String {
    assert!(!raw.is_null());
    let s = unsafe { CStr::from_ptr(raw) }
        .to_str()
        .expect("utf-8")
        .to_string();
    unsafe { pace_string_free(raw) };
    s
}

fn last_error() -> String {
    let raw = pace_last_error();
    assert!(!raw.is_null(), "an error message was recorded");
    unsafe { CStr::from_ptr(raw) }
        .to_str()
        .expect("utf-8")
        .to_string()
}

#[test]
fn golay_generator_has_expected_shape_and_rank() {
    unsafe {
        let mut matrix = ptr::null_mut();
        assert_eq!(pace_golay_generator(&mut matrix), PaceStatus::Ok);
        assert_eq!(pace_matrix_rows(matrix), 6);
        assert_eq!(pace_matrix_cols(matrix), 12);
        let mut rank = 0;
        assert_eq!(pace_matrix_rank(matrix, &mut rank), PaceStatus::Ok);
        assert_eq!(rank, 6);
        let mut entry = 9;
        assert_eq!(pace_matrix_entry(matrix, 0, 0, &mut entry), PaceStatus::Ok);
        assert_eq!(entry, 1);
        assert_eq!(pace_matrix_entry(matrix, 1, 10, &mut entry), PaceStatus::Ok);
        assert_eq!(entry, 2);
        pace_matrix_free(matrix);
    }
}

#[test]
fn module_form_has_min_distance_36() {
    unsafe {
        let mut matrix = ptr::null_mut();
        assert_eq!(pace_module_form_generator(&mut matrix), PaceStatus::Ok);
        assert_eq!(pace_matrix_rows(matrix), 10);
        assert_eq!(pace_matrix_cols(matrix), 66);
        let mut d = 0;
        assert_eq!(pace_matrix_min_distance(matrix, &mut d), PaceStatus::Ok);
        assert_eq!(d, 36);
        pace_matrix_free(matrix);
    }
}

#[test]
fn design_form_weight_distribution_matches_module_form() {
    unsafe {
        let mut module = ptr::null_mut();
        assert_eq!(pace_module_form_generator(&mut module), PaceStatus::Ok);
        let a = [12u8];
        let b = [11u8];
        let mut design = ptr::null_mut();
        assert_eq!(
            pace_design_form_generator(a.as_ptr(), 1, b.as_ptr(), 1, &mut design),
            PaceStatus::Ok
        );
        let mut module_json = ptr::null_mut();
        let mut design_json = ptr::null_mut();
        assert_eq!(
            pace_matrix_weight_distribution_json(module, &mut module_json),
            PaceStatus::Ok
        );
        assert_eq!(
            pace_matrix_weight_distribution_json(design, &mut design_json),
            PaceStatus::Ok
        );
        let module_wd = own_string(module_json);
        let design_wd = own_string(design_json);
        assert_eq!(module_wd, design_wd);
        assert!(module_wd.contains("\"36\":6204"), "{module_wd}");
        pace_matrix_free(module);
        pace_matrix_free(design);
    }
}

#[test]
fn text_round_trip_preserves_the_matrix() {
    unsafe {
        let mut matrix = ptr::null_mut();
        assert_eq!(pace_module_form_generator(&mut matrix), PaceStatus::Ok);
        let mut text = ptr::null_mut();
        assert_eq!(pace_matrix_to_text(matrix, &mut text), PaceStatus::Ok);
        let rendered = own_string(text);
        assert!(rendered.starts_with("10 66\n"));

        let c_text = CString::new(rendered.clone()).expect("no interior NUL");
        let mut parsed = ptr::null_mut();
        assert_eq!(
            pace_matrix_parse_text(c_text.as_ptr(), &mut parsed),
            PaceStatus::Ok
        );
        let mut reparsed = ptr::null_mut();
        assert_eq!(pace_matrix_to_text(parsed, &mut reparsed), PaceStatus::Ok);
        assert_eq!(own_string(reparsed), rendered);
        pace_matrix_free(matrix);
        pace_matrix_free(parsed);
    }
}

#[test]
fn blocks_json_lists_132_blocks() {
    unsafe {
        let mut json = ptr::null_mut();
        assert_eq!(pace_blocks_json(&mut json), PaceStatus::Ok);
        let text = own_string(json);
        let blocks: Vec<Vec<u8>> = serde_json::from_str(&text).expect("valid json");
        assert_eq!(blocks.len(), 132);
        assert_eq!(blocks[0], vec![1, 2, 3, 4, 5, 12]);
    }
}

#[test]
fn verify_cases_scope_passes() {
    unsafe {
        let scope = CString::new("cases").unwrap();
        let mut json = ptr::null_mut();
        let mut all_pass = false;
        assert_eq!(
            pace_verify(scope.as_ptr(), &mut json, &mut all_pass),
            PaceStatus::Ok
        );
        assert!(all_pass);
        let report = own_string(json);
        let value: serde_json::Value = serde_json::from_str(&report).expect("valid json");
        assert_eq!(value["all_pass"], true);
        assert_eq!(value["schema_version"], 1);
        assert_eq!(value["reports"].as_array().expect("array").len(), 11);
    }
}

#[test]
fn null_and_invalid_arguments_are_reported() {
    unsafe {
        assert_eq!(
            pace_golay_generator(ptr::null_mut()),
            PaceStatus::NullPointer
        );
        assert!(!pace_last_error().is_null());

        let mut matrix = ptr::null_mut();
        assert_eq!(pace_golay_generator(&mut matrix), PaceStatus::Ok);
        assert!(pace_last_error().is_null(), "success clears the error");
        let mut entry = 0;
        assert_eq!(
            pace_matrix_entry(matrix, 6, 0, &mut entry),
            PaceStatus::InvalidArgument
        );
        assert!(last_error().contains("6x12"));
        pace_matrix_free(matrix);

        assert_eq!(pace_matrix_rows(ptr::null()), 0);
        let mut rank = 0;
        assert_eq!(
            pace_matrix_rank(ptr::null(), &mut rank),
            PaceStatus::NullPointer
        );

        // Overlapping deletion sets are rejected by the construction.
        let a = [11u8];
        let mut out = ptr::null_mut();
        assert_eq!(
            pace_design_form_generator(a.as_ptr(), 1, a.as_ptr(), 1, &mut out),
            PaceStatus::InvalidArgument
        );

        // Out-of-range point labels are rejected before construction.
        let bad = [13u8];
        assert_eq!(
            pace_design_form_generator(bad.as_ptr(), 1, ptr::null(), 0, &mut out),
            PaceStatus::InvalidArgument
        );
        assert!(last_error().contains("13"));

        let scope = CString::new("bogus").unwrap();
        assert_eq!(
            pace_verify(scope.as_ptr(), ptr::null_mut(), ptr::null_mut()),
            PaceStatus::InvalidArgument
        );
        assert!(last_error().contains("bogus"));
    }
}

#[test]
fn version_is_a_static_string() {
    let version = pace_version();
    assert!(!version.is_null());
    let text = unsafe { CStr::from_ptr(version) }.to_str().expect("utf-8");
    assert_eq!(text, env!("CARGO_PKG_VERSION"));
}
