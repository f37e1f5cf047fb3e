use std::ffi::{CStr, CString, c_char};
use std::ptr;

use skewdet::catalog;
use skewdet_ffi::*;

fn take_string(p: *mut c_char) -> String {
    assert!(!p.is_null());
    let s = unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_string();
    unsafe { skewdet_string_free(p) };
    s
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(skewdet_last_error_message()) }
        .to_str()
        .unwrap()
        .to_string()
}

fn shape(lambda: &[u32], mu: &[u32]) -> *mut SkewdetShape {
    let mut out = ptr::null_mut();
    let st = unsafe { skewdet_shape_new(lambda.as_ptr(), lambda.len(), mu.as_ptr(), mu.len(), &mut out) };
    assert_eq!(st, SkewdetStatus::Ok, "{}", last_error());
    out
}

#[test]
fn counts_tableaux() {
    let s = shape(&[3, 2, 1], &[]);
    let mut size = 0;
    assert_eq!(unsafe { skewdet_shape_size(s, &mut size) }, SkewdetStatus::Ok);
    assert_eq!(size, 6);
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { skewdet_count_syt(s, &mut out) }, SkewdetStatus::Ok);
    assert_eq!(take_string(out), "16");
    unsafe { skewdet_shape_free(s) };
}

#[test]
fn rejects_bad_partitions() {
    let mut out = ptr::null_mut();
    let lambda = [1u32, 2];
    let st = unsafe { skewdet_shape_new(lambda.as_ptr(), 2, ptr::null(), 0, &mut out) };
    assert_eq!(st, SkewdetStatus::Shape);
    assert!(out.is_null());
    assert!(last_error().contains("partition"));
}

#[test]
fn null_pointers_are_reported() {
    let mut size = 0;
    assert_eq!(
        unsafe { skewdet_shape_size(ptr::null(), &mut size) },
        SkewdetStatus::NullPointer
    );
    let s = shape(&[1], &[]);
    assert_eq!(
        unsafe { skewdet_shape_size(s, ptr::null_mut()) },
        SkewdetStatus::NullPointer
    );
    unsafe { skewdet_shape_free(s) };
    unsafe { skewdet_shape_free(ptr::null_mut()) };
    unsafe { skewdet_string_free(ptr::null_mut()) };
}

#[test]
fn schur_polynomial_as_json() {
    let json = CString::new(r#"{"lambda":[2,1],"mu":[]}"#).unwrap();
    let mut s = ptr::null_mut();
    assert_eq!(
        unsafe { skewdet_shape_from_json(json.as_ptr(), &mut s) },
        SkewdetStatus::Ok
    );
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { skewdet_schur_json(s, 2, &mut out) }, SkewdetStatus::Ok);
    let terms: serde_json::Value = serde_json::from_str(&take_string(out)).unwrap();
    assert_eq!(terms.as_array().unwrap().len(), 2);
    assert_eq!(
        unsafe { skewdet_schur_json(s, 0, &mut out) },
        SkewdetStatus::InvalidArgument
    );
    unsafe { skewdet_shape_free(s) };
}

#[test]
fn malformed_json_is_a_parse_error() {
    let json = CString::new("{not json").unwrap();
    let mut s = ptr::null_mut();
    assert_eq!(
        unsafe { skewdet_shape_from_json(json.as_ptr(), &mut s) },
        SkewdetStatus::Parse
    );
    assert!(!last_error().is_empty());
}

#[test]
fn decompose_validate_and_count() {
    let s = shape(&[6, 6, 6, 4], &[3, 1]);
    for strategy in [SkewdetStrategy::Rim, SkewdetStrategy::ThickRim] {
        let mut d = ptr::null_mut();
        assert_eq!(
            unsafe { skewdet_decompose(s, strategy as u32, &mut d) },
            SkewdetStatus::Ok
        );
        let (mut valid, mut nested) = (false, false);
        assert_eq!(
            unsafe { skewdet_decomposition_validate(d, &mut valid, &mut nested) },
            SkewdetStatus::Ok
        );
        assert!(valid && nested);
        let (mut a, mut b) = (ptr::null_mut(), ptr::null_mut());
        assert_eq!(unsafe { skewdet_decomposition_count(d, &mut a) }, SkewdetStatus::Ok);
        assert_eq!(unsafe { skewdet_count_syt(s, &mut b) }, SkewdetStatus::Ok);
        assert_eq!(take_string(a), take_string(b));
        unsafe { skewdet_decomposition_free(d) };
    }
    let mut d = ptr::null_mut();
    assert_eq!(
        unsafe { skewdet_decompose(s, 9, &mut d) },
        SkewdetStatus::InvalidArgument
    );
    unsafe { skewdet_shape_free(s) };
}

#[test]
fn running_decomposition_round_trips_and_verifies() {
    let json = CString::new(serde_json::to_string(&catalog::running_decomposition()).unwrap()).unwrap();
    let mut d = ptr::null_mut();
    assert_eq!(
        unsafe { skewdet_decomposition_from_json(json.as_ptr(), &mut d) },
        SkewdetStatus::Ok
    );
    let (mut g, mut r) = (0, 0);
    assert_eq!(
        unsafe { skewdet_decomposition_counts(d, &mut g, &mut r) },
        SkewdetStatus::Ok
    );
    assert_eq!((g, r), (3, 3));
    let mut equal = false;
    assert_eq!(unsafe { skewdet_verify_identity(d, 4, &mut equal) }, SkewdetStatus::Ok);
    assert!(equal);
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { skewdet_decomposition_to_json(d, &mut out) }, SkewdetStatus::Ok);
    assert_eq!(take_string(out), json.to_str().unwrap());
    unsafe { skewdet_decomposition_free(d) };
}

#[test]
fn invalid_decomposition_names_the_rule() {
    let json = CString::new(serde_json::to_string(&catalog::interior_start_decomposition()).unwrap()).unwrap();
    let mut d = ptr::null_mut();
    assert_eq!(
        unsafe { skewdet_decomposition_from_json(json.as_ptr(), &mut d) },
        SkewdetStatus::Ok
    );
    let (mut valid, mut nested) = (true, true);
    assert_eq!(
        unsafe { skewdet_decomposition_validate(d, &mut valid, &mut nested) },
        SkewdetStatus::Ok
    );
    assert!(!valid && !nested);
    assert!(last_error().contains("StartOffPerimeter"), "{}", last_error());
    unsafe { skewdet_decomposition_free(d) };
}

#[test]
fn mstrip_counts() {
    let mut out = ptr::null_mut();
    assert_eq!(
        unsafe { skewdet_mstrip_count(2, 3, ptr::null(), 0, ptr::null(), 0, &mut out) },
        SkewdetStatus::Ok
    );
    assert_eq!(take_string(out), "61");
    let head = [1u32];
    assert_eq!(
        unsafe { skewdet_mstrip_count(3, 2, head.as_ptr(), 1, head.as_ptr(), 1, &mut out) },
        SkewdetStatus::Ok
    );
    let both: u64 = take_string(out).parse().unwrap();
    assert!(both > 0);
    assert_eq!(
        unsafe { skewdet_mstrip_count(1, 3, ptr::null(), 0, ptr::null(), 0, &mut out) },
        SkewdetStatus::InvalidArgument
    );
}

#[test]
fn version_is_set() {
    let v = unsafe { CStr::from_ptr(skewdet_version()) }.to_str().unwrap();
    assert_eq!(v, env!("CARGO_PKG_VERSION"));
}
