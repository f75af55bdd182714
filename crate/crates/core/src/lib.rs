// SPDX-License-Identifier: Apache-2.0

//! Quadratic fields, binary quadratic forms, and principality of split prime
//! ideals decided by representations of `±δ²`, plus a certified
//! determination of the imaginary quadratic fields with class number one.

pub mod class_number;
pub mod envelope;
mod error;
pub mod field;
pub mod forms;
pub mod ideal;
pub mod kernel;
pub mod oracle;
pub mod serde_decimal;

pub use class_number::{classify_h1, nonprincipality_certificate, rabinowitsch, scan_h1, Evidence, H1Certificate};
pub use envelope::Envelope;
pub use error::{Error, Result};
pub use field::{QuadraticField, QuadraticInteger};
pub use forms::{BinaryForm, Representation};
pub use ideal::{split_type, PrincipalityResult, SplitPrimeIdeal, SplittingType};
