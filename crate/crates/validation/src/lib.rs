// SPDX-License-Identifier: Apache-2.0

//! Holds the acceptance test target only; see `tests/acceptance.rs`.
