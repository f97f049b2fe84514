//! Holds the `acceptance` test target, which prints one PASS or FAIL line
//! per criterion:
//!
//! ```text
//! cargo test -p pvk-acceptance --test acceptance
//! ```
