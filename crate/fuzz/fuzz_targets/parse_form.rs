// SPDX-License-Identifier: Apache-2.0
#![no_main]

use libfuzzer_sys::fuzz_target;
use qfi_core::BinaryForm;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(f) = text.parse::<BinaryForm>() else { return };
    let json = serde_json::to_string(&f).unwrap();
    let back: BinaryForm = serde_json::from_str(&json).unwrap();
    assert_eq!(back, f);
    assert_eq!(f.mirrored().mirrored(), f);
});
