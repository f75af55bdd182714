// SPDX-License-Identifier: Apache-2.0
#![no_main]

use libfuzzer_sys::fuzz_target;
use qfi_core::field::ElementLiteral;
use qfi_core::{QuadraticField, QuadraticInteger};

// Accepted literals are canonical, so rendering must give the input back.
fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if text.len() > 256 {
        return;
    }
    let Ok(lit) = ElementLiteral::parse(text) else { return };
    let Some(d) = lit.radicand else { return };
    let Ok(field) = QuadraticField::new(d) else { return };
    if let Ok(x) = QuadraticInteger::parse(field, text) {
        assert_eq!(x.to_string(), text);
        assert_eq!(x.conj().conj(), x);
    }
});
