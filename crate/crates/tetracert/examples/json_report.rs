//! Build a machine-readable report from a couple of certificates.
//!
//! The `verify` binary does the same for the full battery; this example
//! sticks to the fast ones so it finishes instantly.

use tetracert::certificates::{verify_dimension_audit, verify_hesse_almost_free, Constants};
use tetracert::report::Report;

fn main() {
    let constants = Constants::standard();
    let certs = vec![
        verify_dimension_audit(&constants),
        verify_hesse_almost_free(&constants),
    ];
    let report = Report::new("primes-v1", certs);

    println!("{}", report.render_text());
    println!("{}", report.to_json());
    println!("all passed: {}", report.all_passed());
}
