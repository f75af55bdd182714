// SPDX-License-Identifier: Apache-2.0
#![no_main]

use libfuzzer_sys::fuzz_target;
use qfi_core::H1Certificate;

// Validation must reject bad input with an error, never panic or hang.
fuzz_target!(|data: &[u8]| {
    if data.len() > 4096 {
        return;
    }
    let Ok(cert) = serde_json::from_slice::<H1Certificate>(data) else { return };
    if cert.radicand.unsigned_abs() > 1_000_000 {
        return;
    }
    if cert.validate().is_ok() {
        let json = serde_json::to_vec(&cert).unwrap();
        assert_eq!(serde_json::from_slice::<H1Certificate>(&json).unwrap(), cert);
    }
});
