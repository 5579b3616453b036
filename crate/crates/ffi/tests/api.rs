use std::ffi::{CStr, CString};
use std::ptr;

use lcd_ffi::*;

fn parse(text: &str) -> *mut LcdCode {
    let text = CString::new(text).unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(
        unsafe { lcd_code_parse(text.as_ptr(), &mut out) },
        LcdStatus::Ok
    );
    assert!(!out.is_null());
    out
}

fn last_error() -> String {
    let p = lcd_last_error_message();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

const I3: &str = "field 3\ninner euclidean\nsize 3 3\nrow 1 0 0\nrow 0 1 0\nrow 0 0 1\n";

#[test]
fn accessors_and_predicates() {
    let c = parse(I3);
    unsafe {
        let (mut n, mut k, mut q, mut ip) = (0usize, 0usize, 0u32, 9u32);
        assert_eq!(lcd_code_n(c, &mut n), LcdStatus::Ok);
        assert_eq!(lcd_code_k(c, &mut k), LcdStatus::Ok);
        assert_eq!(lcd_code_field(c, &mut q), LcdStatus::Ok);
        assert_eq!(lcd_code_inner(c, &mut ip), LcdStatus::Ok);
        assert_eq!((n, k, q, ip), (3, 3, 3, LCD_INNER_EUCLIDEAN));

        let mut b = false;
        assert_eq!(lcd_code_is_lcd(c, &mut b), LcdStatus::Ok);
        assert!(b);
        assert_eq!(lcd_code_is_self_orthogonal(c, &mut b), LcdStatus::Ok);
        assert!(!b);
        let mut d = 0;
        assert_eq!(lcd_code_min_weight(c, &mut d), LcdStatus::Ok);
        assert_eq!(d, 1);
        lcd_code_free(c);
    }
}

#[test]
fn generator_copy() {
    unsafe {
        let rows = [1u8, 0, 2, 0, 1, 3];
        let mut c = ptr::null_mut();
        assert_eq!(
            lcd_code_from_rows(4, LCD_INNER_HERMITIAN, 2, 3, rows.as_ptr(), &mut c),
            LcdStatus::Ok
        );
        let mut needed = 0;
        let mut small = [0u8; 4];
        assert_eq!(
            lcd_code_generator(c, small.as_mut_ptr(), small.len(), &mut needed),
            LcdStatus::BufferTooSmall
        );
        assert_eq!(needed, 6);
        let mut buf = [0u8; 6];
        assert_eq!(
            lcd_code_generator(c, buf.as_mut_ptr(), buf.len(), ptr::null_mut()),
            LcdStatus::Ok
        );
        assert_eq!(buf, rows);
        lcd_code_free(c);
    }
}

#[test]
fn dual_descend_ascend() {
    unsafe {
        let c = parse(I3);
        let mut child = ptr::null_mut();
        let mut x = [9u8; 3];
        assert_eq!(
            lcd_code_descend(c, &mut child, x.as_mut_ptr(), 3),
            LcdStatus::Ok
        );
        assert_eq!(x, [1, 0, 0]);
        let mut k = 0;
        lcd_code_k(child, &mut k);
        assert_eq!(k, 2);

        let mut up = ptr::null_mut();
        assert_eq!(lcd_code_ascend(child, &mut up), LcdStatus::Ok);
        lcd_code_k(up, &mut k);
        assert_eq!(k, 3);

        let mut dual = ptr::null_mut();
        assert_eq!(lcd_code_dual(child, &mut dual), LcdStatus::Ok);
        let mut s = ptr::null_mut();
        assert_eq!(lcd_code_to_string(dual, &mut s), LcdStatus::Ok);
        assert_eq!(
            CStr::from_ptr(s).to_str().unwrap(),
            "field 3\ninner euclidean\nsize 3 1\nrow 1 0 0\n"
        );
        lcd_string_free(s);

        for h in [c, child, up, dual] {
            lcd_code_free(h);
        }
    }
}

#[test]
fn error_codes() {
    unsafe {
        let mut out = ptr::null_mut();
        let bad = CString::new("field 3\ninner euclidean\nsize 3 1\nrow 1 x 0\n").unwrap();
        assert_eq!(lcd_code_parse(bad.as_ptr(), &mut out), LcdStatus::Parse);
        assert!(last_error().contains("line 4"));
        assert!(out.is_null());

        assert_eq!(
            lcd_code_parse(ptr::null(), &mut out),
            LcdStatus::NullPointer
        );
        let mut k = 0;
        assert_eq!(lcd_code_k(ptr::null(), &mut k), LcdStatus::NullPointer);

        let row = [1u8, 1, 1];
        assert_eq!(
            lcd_code_from_rows(3, 7, 1, 3, row.as_ptr(), &mut out),
            LcdStatus::InvalidArgument
        );
        assert_eq!(
            lcd_code_from_rows(3, LCD_INNER_HERMITIAN, 1, 3, row.as_ptr(), &mut out),
            LcdStatus::InvalidArgument
        );
        assert_eq!(
            lcd_code_from_rows(5, LCD_INNER_EUCLIDEAN, 1, 3, row.as_ptr(), &mut out),
            LcdStatus::InvalidArgument
        );

        // self-orthogonal, so neither LCD nor descendable
        assert_eq!(
            lcd_code_from_rows(3, LCD_INNER_EUCLIDEAN, 1, 3, row.as_ptr(), &mut out),
            LcdStatus::Ok
        );
        let mut b = true;
        assert_eq!(lcd_code_is_lcd(out, &mut b), LcdStatus::Ok);
        assert!(!b);
        let mut up = ptr::null_mut();
        assert_eq!(lcd_code_ascend(out, &mut up), LcdStatus::Domain);
        assert!(last_error().contains("LCD"));
        // a successful call clears the message
        assert_eq!(lcd_code_k(out, &mut k), LcdStatus::Ok);
        assert!(lcd_last_error_message().is_null());
        lcd_code_free(out);
        lcd_code_free(ptr::null_mut());
        lcd_string_free(ptr::null_mut());
    }
}

#[test]
fn largest_min_weight() {
    let (mut d, mut found) = (0usize, false);
    unsafe {
        assert_eq!(
            lcd_largest_min_weight(3, LCD_INNER_EUCLIDEAN, 3, 1, 1, &mut d, &mut found),
            LcdStatus::Ok
        );
        assert!(found);
        assert_eq!(d, 2);
        assert_eq!(
            lcd_largest_min_weight(4, LCD_INNER_HERMITIAN, 2, 1, 0, &mut d, &mut found),
            LcdStatus::Ok
        );
        assert_eq!(d, 1);
        assert_eq!(
            lcd_largest_min_weight(3, LCD_INNER_EUCLIDEAN, 12, 6, 1, &mut d, &mut found),
            LcdStatus::Resource
        );
    }
}
