//! Exact arithmetic in the degree-eight cyclotomic field.

use tetracert::field::CycNum;

fn main() {
    let zeta = CycNum::zeta_pow(1);
    println!("zeta^24 = {}", zeta.pow(24));
    println!("zeta^12 = {}", zeta.pow(12));

    let i = CycNum::i();
    println!("i^2     = {}", i.pow(2));

    let s = CycNum::sqrt2();
    println!("sqrt2   = {}", s);
    println!("sqrt2^2 = {}", s.pow(2));

    let w = CycNum::zeta3();
    println!("w^3     = {}", w.pow(3));
    println!("1+w+w^2 = {}", &(&CycNum::one() + &w) + &w.pow(2));

    let theta = CycNum::theta();
    println!("theta^8 = {}", theta.pow(8));

    // Inverses are exact: (3/7 + i) * (3/7 + i)^-1 == 1.
    let x = &CycNum::from_ratio(3, 7) + &CycNum::i();
    let xi = x.inv().expect("nonzero");
    println!("x * x^-1 = {}", &x * &xi);
    println!("x^-1 coefficients: {:?}", xi.fraction_strings());
}
