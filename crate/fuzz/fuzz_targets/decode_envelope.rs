// SPDX-License-Identifier: Apache-2.0
#![no_main]

use libfuzzer_sys::fuzz_target;
use qfi_core::Envelope;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(env) = Envelope::from_json(text) else { return };
    assert_eq!(Envelope::from_json(&env.to_json()).unwrap(), env);
});
