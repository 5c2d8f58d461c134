//! C ABI over the pace-code library.
//!
//! Conventions: every fallible function returns a [`PaceStatus`]; results
//! are written through `out` pointers. Objects returned through a
//! `*mut PaceMatrix` must be released with [`pace_matrix_free`], and
//! strings with [`pace_string_free`]. On any non-OK status,
//! [`pace_last_error`] returns a message describing the failure; the
//! pointer stays valid until the next FFI call on the same thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};

use pace_code::{
    build_design_code, golay_generator, module_form_generator, BlockFamily, Gf3Matrix, LinearCode,
    PointSet, WittDesign,
};

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

/// Result of an FFI call.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PaceStatus {
    /// The call succeeded.
    Ok = 0,
    /// A required pointer argument was null.
    NullPointer = 1,
    /// An argument was outside its documented domain.
    InvalidArgument = 2,
    /// The computation itself failed; see `pace_last_error`.
    ComputeError = 3,
}

/// A generator matrix over GF(3). Opaque; query it through the
/// `pace_matrix_*` accessors.
pub struct PaceMatrix {
    inner: Gf3Matrix,
}

fn set_error(message: impl Into<Vec<u8>>) {
    let stored = CString::new(message).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(stored));
}

fn clear_error() {
    LAST_ERROR.with(|slot| *slot.borrow_mut() = None);
}

fn fail(status: PaceStatus, message: impl Into<Vec<u8>>) -> PaceStatus {
    set_error(message);
    status
}

/// Writes `value` through `out`, or reports a null `out` pointer.
unsafe fn write_out<T>(out: *mut T, value: T) -> PaceStatus {
    if out.is_null() {
        return fail(PaceStatus::NullPointer, "output pointer is null");
    }
    unsafe { out.write(value) };
    PaceStatus::Ok
}

unsafe fn export_matrix(matrix: Gf3Matrix, out: *mut *mut PaceMatrix) -> PaceStatus {
    let boxed = Box::into_raw(Box::new(PaceMatrix { inner: matrix }));
    let status = unsafe { write_out(out, boxed) };
    if status != PaceStatus::Ok {
        drop(unsafe { Box::from_raw(boxed) });
    }
    status
}

unsafe fn export_string(s: String, out: *mut *mut c_char) -> PaceStatus {
    match CString::new(s) {
        Ok(c) => {
            let raw = c.into_raw();
            let status = unsafe { write_out(out, raw) };
            if status != PaceStatus::Ok {
                drop(unsafe { CString::from_raw(raw) });
            }
            status
        }
        Err(_) => fail(PaceStatus::ComputeError, "output contained a NUL byte"),
    }
}

unsafe fn point_set_from_raw(points: *const u8, len: usize) -> Result<PointSet, PaceStatus> {
    if len == 0 {
        return Ok(PointSet::EMPTY);
    }
    if points.is_null() {
        return Err(fail(PaceStatus::NullPointer, "point list pointer is null"));
    }
    let slice = unsafe { std::slice::from_raw_parts(points, len) };
    PointSet::from_points(slice.iter().copied()).map_err(|e| {
        set_error(e.to_string());
        PaceStatus::InvalidArgument
    })
}

unsafe fn borrow_matrix<'a>(matrix: *const PaceMatrix) -> Result<&'a Gf3Matrix, PaceStatus> {
    if matrix.is_null() {
        return Err(fail(PaceStatus::NullPointer, "matrix pointer is null"));
    }
    Ok(unsafe { &(*matrix).inner })
}

/// Message for the most recent failure on this thread, or null if the
/// last call succeeded. Valid until the next FFI call on this thread.
#[no_mangle]
pub extern "C" fn pace_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| {
        slot.borrow()
            .as_ref()
            .map_or(std::ptr::null(), |c| c.as_ptr())
    })
}

/// Crate version as a static NUL-terminated string; do not free.
#[no_mangle]
pub extern "C" fn pace_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// Writes the 6×12 ternary Golay generator (I|P) to `out`.
/// # Safety
///
/// `out`, if non-null, must be valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn pace_golay_generator(out: *mut *mut PaceMatrix) -> PaceStatus {
    clear_error();
    unsafe { export_matrix(golay_generator(), out) }
}

/// Writes the 10×66 generator built from the block-vector orbit in the
/// 10-dimensional GF(3) module to `out`.
/// # Safety
///
/// `out`, if non-null, must be valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn pace_module_form_generator(out: *mut *mut PaceMatrix) -> PaceStatus {
    clear_error();
    let design = match WittDesign::build() {
        Ok(d) => d,
        Err(e) => return fail(PaceStatus::ComputeError, e.to_string()),
    };
    unsafe { export_matrix(module_form_generator(&design).matrix().clone(), out) }
}

/// Writes the incidence-construction generator to `out`: columns are the
/// blocks disjoint from A, rows the points outside A ∪ B. A and B are
/// disjoint point lists (labels 1..=12); empty lists are allowed and may
/// pass a null pointer with length 0.
/// # Safety
///
/// `a_points`/`b_points` must point to `a_len`/`b_len` readable
/// bytes (or be null when the length is 0), and `out`, if non-null, must
/// be valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn pace_design_form_generator(
    a_points: *const u8,
    a_len: usize,
    b_points: *const u8,
    b_len: usize,
    out: *mut *mut PaceMatrix,
) -> PaceStatus {
    clear_error();
    let a = match unsafe { point_set_from_raw(a_points, a_len) } {
        Ok(s) => s,
        Err(status) => return status,
    };
    let b = match unsafe { point_set_from_raw(b_points, b_len) } {
        Ok(s) => s,
        Err(status) => return status,
    };
    let design = match WittDesign::build() {
        Ok(d) => d,
        Err(e) => return fail(PaceStatus::ComputeError, e.to_string()),
    };
    match build_design_code(&BlockFamily::from_design(&design), a, b) {
        Ok(code) => unsafe { export_matrix(code.matrix().clone(), out) },
        Err(e) => fail(PaceStatus::InvalidArgument, e.to_string()),
    }
}

/// Parses the plain-text matrix format ("rows cols" header, then one
/// space-separated row per line).
/// # Safety
///
/// `text`, if non-null, must point to a NUL-terminated string, and
/// `out`, if non-null, must be valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn pace_matrix_parse_text(
    text: *const c_char,
    out: *mut *mut PaceMatrix,
) -> PaceStatus {
    clear_error();
    if text.is_null() {
        return fail(PaceStatus::NullPointer, "text pointer is null");
    }
    let text = match unsafe { CStr::from_ptr(text) }.to_str() {
        Ok(t) => t,
        Err(_) => return fail(PaceStatus::InvalidArgument, "text is not valid UTF-8"),
    };
    match Gf3Matrix::parse_text(text) {
        Ok(m) => unsafe { export_matrix(m, out) },
        Err(e) => fail(PaceStatus::InvalidArgument, e.to_string()),
    }
}

/// Number of rows, or 0 if `matrix` is null.
/// # Safety
///
/// `matrix` must be null or a live pointer from this library.
#[no_mangle]
pub unsafe extern "C" fn pace_matrix_rows(matrix: *const PaceMatrix) -> usize {
    unsafe { borrow_matrix(matrix) }.map_or(0, Gf3Matrix::rows)
}

/// Number of columns, or 0 if `matrix` is null.
/// # Safety
///
/// `matrix` must be null or a live pointer from this library.
#[no_mangle]
pub unsafe extern "C" fn pace_matrix_cols(matrix: *const PaceMatrix) -> usize {
    unsafe { borrow_matrix(matrix) }.map_or(0, Gf3Matrix::cols)
}

/// Writes the entry at (`row`, `col`) — a value in {0,1,2} — to `out`.
/// # Safety
///
/// `matrix` must be null or a live pointer from this library, and
/// `out`, if non-null, must be valid for a write.
#[no_mangle]
pub unsafe extern "C" fn pace_matrix_entry(
    matrix: *const PaceMatrix,
    row: usize,
    col: usize,
    out: *mut u8,
) -> PaceStatus {
    clear_error();
    let m = match unsafe { borrow_matrix(matrix) } {
        Ok(m) => m,
        Err(status) => return status,
    };
    if row >= m.rows() || col >= m.cols() {
        return fail(
            PaceStatus::InvalidArgument,
            format!(
                "entry ({row}, {col}) outside a {}x{} matrix",
                m.rows(),
                m.cols()
            ),
        );
    }
    unsafe { write_out(out, m.get(row, col).value()) }
}

/// Writes the GF(3) rank of the matrix to `out`.
/// # Safety
///
/// `matrix` must be null or a live pointer from this library, and
/// `out`, if non-null, must be valid for a write.
#[no_mangle]
pub unsafe extern "C" fn pace_matrix_rank(
    matrix: *const PaceMatrix,
    out: *mut usize,
) -> PaceStatus {
    clear_error();
    match unsafe { borrow_matrix(matrix) } {
        Ok(m) => unsafe { write_out(out, m.rank()) },
        Err(status) => status,
    }
}

/// Writes the exact minimum distance of the row-space code to `out`,
/// computed by full enumeration (dimension capped at 20).
/// # Safety
///
/// `matrix` must be null or a live pointer from this library, and
/// `out`, if non-null, must be valid for a write.
#[no_mangle]
pub unsafe extern "C" fn pace_matrix_min_distance(
    matrix: *const PaceMatrix,
    out: *mut usize,
) -> PaceStatus {
    clear_error();
    let m = match unsafe { borrow_matrix(matrix) } {
        Ok(m) => m,
        Err(status) => return status,
    };
    match LinearCode::new(m.clone()).min_distance() {
        Ok(d) => unsafe { write_out(out, d) },
        Err(e) => fail(PaceStatus::ComputeError, e.to_string()),
    }
}

/// Writes the full weight distribution of the row-space code to `out`
/// as a JSON object mapping weight to count.
/// # Safety
///
/// `matrix` must be null or a live pointer from this library, and
/// `out`, if non-null, must be valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn pace_matrix_weight_distribution_json(
    matrix: *const PaceMatrix,
    out: *mut *mut c_char,
) -> PaceStatus {
    clear_error();
    let m = match unsafe { borrow_matrix(matrix) } {
        Ok(m) => m,
        Err(status) => return status,
    };
    let wd = match LinearCode::new(m.clone()).weight_distribution() {
        Ok(wd) => wd,
        Err(e) => return fail(PaceStatus::ComputeError, e.to_string()),
    };
    let json = match serde_json::to_string(&wd) {
        Ok(j) => j,
        Err(e) => return fail(PaceStatus::ComputeError, e.to_string()),
    };
    unsafe { export_string(json, out) }
}

/// Writes the plain-text rendering of the matrix to `out`.
/// # Safety
///
/// `matrix` must be null or a live pointer from this library, and
/// `out`, if non-null, must be valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn pace_matrix_to_text(
    matrix: *const PaceMatrix,
    out: *mut *mut c_char,
) -> PaceStatus {
    clear_error();
    match unsafe { borrow_matrix(matrix) } {
        Ok(m) => unsafe { export_string(m.to_text(), out) },
        Err(status) => status,
    }
}

/// Releases a matrix returned by this library. Null is a no-op.
/// # Safety
///
/// `matrix` must be null or an owned pointer returned by this
/// library that has not already been freed.
#[no_mangle]
pub unsafe extern "C" fn pace_matrix_free(matrix: *mut PaceMatrix) {
    if !matrix.is_null() {
        drop(unsafe { Box::from_raw(matrix) });
    }
}

/// Writes the 132 blocks of S(5,6,12), sorted, as a JSON array of
/// six-element point arrays.
/// # Safety
///
/// `out`, if non-null, must be valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn pace_blocks_json(out: *mut *mut c_char) -> PaceStatus {
    clear_error();
    let design = match WittDesign::build() {
        Ok(d) => d,
        Err(e) => return fail(PaceStatus::ComputeError, e.to_string()),
    };
    let blocks: Vec<Vec<u8>> = design.blocks().iter().map(|b| b.to_vec()).collect();
    let json = match serde_json::to_string(&blocks) {
        Ok(j) => j,
        Err(e) => return fail(PaceStatus::ComputeError, e.to_string()),
    };
    unsafe { export_string(json, out) }
}

/// Runs a verification suite. `scope` is one of "all", "group",
/// "lemmas", "cases", or "theorem". Writes a JSON object with
/// `schema_version`, `reports`, and `all_pass` to `out_json` and the
/// overall outcome to `out_all_pass`; both output pointers may
/// independently be null if that result is not wanted.
/// # Safety
///
/// `scope`, if non-null, must point to a NUL-terminated string;
/// `out_json` and `out_all_pass`, where non-null, must be valid for
/// writes.
#[no_mangle]
pub unsafe extern "C" fn pace_verify(
    scope: *const c_char,
    out_json: *mut *mut c_char,
    out_all_pass: *mut bool,
) -> PaceStatus {
    clear_error();
    if scope.is_null() {
        return fail(PaceStatus::NullPointer, "scope pointer is null");
    }
    let scope = match unsafe { CStr::from_ptr(scope) }.to_str() {
        Ok(s) => s,
        Err(_) => return fail(PaceStatus::InvalidArgument, "scope is not valid UTF-8"),
    };
    let verifier = match pace_code::Verifier::new() {
        Ok(v) => v,
        Err(e) => return fail(PaceStatus::ComputeError, e.to_string()),
    };
    let reports = match scope {
        "all" => verifier.all_checks(),
        "group" => verifier.group_checks(),
        "lemmas" => verifier.lemma_checks(),
        "cases" => verifier.case_checks(),
        "theorem" => verifier.theorem_checks(),
        other => {
            return fail(
                PaceStatus::InvalidArgument,
                format!("unknown scope {other:?}; expected all, group, lemmas, cases, or theorem"),
            )
        }
    };
    let pass = pace_code::all_pass(&reports);
    if !out_all_pass.is_null() {
        unsafe { out_all_pass.write(pass) };
    }
    if !out_json.is_null() {
        let value = serde_json::json!({
            "schema_version": 1u32,
            "reports": reports,
            "all_pass": pass,
        });
        let json = match serde_json::to_string(&value) {
            Ok(j) => j,
            Err(e) => return fail(PaceStatus::ComputeError, e.to_string()),
        };
        return unsafe { export_string(json, out_json) };
    }
    PaceStatus::Ok
}

/// Releases a string returned by this library. Null is a no-op.
/// # Safety
///
/// `s` must be null or an owned string returned by this library
/// that has not already been freed.
#[no_mangle]
pub unsafe extern "C" fn pace_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(unsafe { CString::from_raw(s) });
    }
}
