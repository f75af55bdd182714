// SPDX-License-Identifier: Apache-2.0

use num_bigint::BigInt;
use qfi_core::class_number::{necessary_conditions, Evidence};
use qfi_core::{classify_h1, scan_h1, H1Certificate};

#[test]
fn every_certificate_survives_json_and_validation() {
    for cert in scan_h1(1, 3_000).unwrap() {
        let text = serde_json::to_string(&cert).unwrap();
        let back: H1Certificate = serde_json::from_str(&text).unwrap();
        assert_eq!(back, cert);
        back.validate().unwrap_or_else(|e| panic!("D = {}: {e}", cert.radicand));
    }
}

#[test]
fn flipped_verdicts_are_rejected() {
    for cert in scan_h1(1, 1_000).unwrap() {
        let mut forged = cert.clone();
        forged.verdict = !forged.verdict;
        assert!(forged.validate().is_err(), "D = {}", cert.radicand);
    }
}

#[test]
fn evidence_moved_to_another_field_is_rejected() {
    let cert = classify_h1(-6).unwrap();
    for d in [-5, -10, -13, -14] {
        let moved = H1Certificate { radicand: d, ..cert.clone() };
        assert!(moved.validate().is_err(), "D = {d}");
    }
    let cert = classify_h1(-907).unwrap();
    let moved = H1Certificate { radicand: -2083, corroboration: None, ..cert };
    assert!(moved.validate().is_err());
}

#[test]
fn tampered_values_are_rejected() {
    let bad = [
        r#"{"radicand":-907,"verdict":false,"evidence":{"kind":"rabinowitsch-composite","x":5,"value":"247","factor":"247"}}"#,
        r#"{"radicand":-907,"verdict":false,"evidence":{"kind":"rabinowitsch-composite","x":5,"value":"248","factor":"2"}}"#,
        r#"{"radicand":-907,"verdict":false,"evidence":{"kind":"rabinowitsch-composite","x":0,"value":"227","factor":"227"}}"#,
        r#"{"radicand":-163,"verdict":true,"evidence":{"kind":"rabinowitsch-table","rows":[]}}"#,
        r#"{"radicand":-5,"verdict":false,"evidence":{"kind":"non-principal-ideal","q":"3","n":"1","form":{"a":"2","b":"1","c":"3","det":"-4"}}}"#,
        r#"{"radicand":-5,"verdict":false,"evidence":{"kind":"non-principal-ideal","q":"2","n":"1","form":{"a":"3","b":"1","c":"2","det":"-5"}}}"#,
        r#"{"radicand":-1,"verdict":true,"evidence":{"kind":"special-discriminant","discriminant":-3}}"#,
        r#"{"radicand":-7,"verdict":false,"evidence":{"kind":"not-one-mod4"}}"#,
        r#"{"radicand":-12,"verdict":false,"evidence":{"kind":"not-one-mod4"}}"#,
    ];
    for text in bad {
        let rejected = match serde_json::from_str::<H1Certificate>(text) {
            Ok(cert) => cert.validate().is_err(),
            Err(_) => true,
        };
        assert!(rejected, "{text}");
    }
    let unknown = r#"{"radicand":-7,"verdict":true,"evidence":{"kind":"hunch"}}"#;
    assert!(serde_json::from_str::<H1Certificate>(unknown).is_err());
}

#[test]
fn class_number_one_fields_meet_the_necessary_conditions() {
    for cert in scan_h1(17, 20_000).unwrap().iter().filter(|c| c.verdict) {
        assert!(necessary_conditions(cert.radicand).unwrap().holds, "D = {}", cert.radicand);
    }
}

#[test]
fn ideal_witnesses_cover_the_two_and_three_residue_classes() {
    for d in (3..=2_000i64).map(|a| -a).filter(|d| d.rem_euclid(4) != 1) {
        let Ok(cert) = classify_h1(d) else { continue };
        assert!(!cert.verdict);
        if let Evidence::NonPrincipalIdeal { q, .. } = &cert.evidence {
            assert!(q > &BigInt::from(2));
        }
    }
}
