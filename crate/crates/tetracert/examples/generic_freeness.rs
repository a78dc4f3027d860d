//! Run the two-step generic freeness certificate and inspect its witnesses.

use tetracert::certificates::{verify_generic_freeness_two_step, Constants, Seed};

fn main() {
    let constants = Constants::standard();
    let seed = Seed::parse("primes-v1").expect("known seed");
    let cert = verify_generic_freeness_two_step(&constants, &seed);

    println!("certificate: {}", cert.id);
    println!("claim:       {}", cert.paper_anchor);
    println!("passed:      {}", cert.passed());
    println!();
    for (key, value) in &cert.witnesses {
        println!("  {key}: {value}");
    }
}
