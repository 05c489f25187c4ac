// Ritt reduction, Δ-polynomials and membership in a characterizable ideal.

use std::error::Error;

use diffdim::chains::{delta_polynomial, full_pseudo_reduce_certified, membership, prolong};
use diffdim::system::{parse_poly, parse_system};

const SYSTEM: &str = "
ring derivations=(t) indeterminates=(u,v)
ranking orderly tiebreak=(u<v)
chain S { u[1]^2 - v[0]; v[1]^2 - v[0]; }
";

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let sys = parse_system(SYSTEM)?;
    let s = sys.chain("S").ok_or("S")?;
    let (ring, ranking) = (s.ring(), s.ranking());

    let report = s.validate()?;
    println!("triangular {}, coherent {}", report.triangular, report.coherent);

    // Leaders on different indeterminates have no Δ-polynomial.
    let e = s.elements();
    println!("Δ(S1, S2) exists: {}", delta_polynomial(&e[0], &e[1], ranking)?.is_some());

    let p = parse_poly("u[2]*v[1] - u[1]*v[2]", ring)?;
    let (trace, certificate) = full_pseudo_reduce_certified(&p, s)?;
    println!("p = {}", p.display(ring, ranking));
    println!("remainder: {}", trace.remainder.display(ring, ranking));
    for m in &trace.multipliers {
        println!("  multiplier ({})^{} from element {}", m.factor.display(ring, ranking), m.exponent, m.element);
    }
    println!("certificate terms: {}", certificate.len());
    assert!(trace.remainder.is_zero());

    let q = parse_poly("u[1]^2 - v[1]^2", ring)?;
    println!("u'^2 − v'^2 ∈ I(S): {}", membership(&q, s)?);
    assert!(membership(&q, s)?);

    for entry in prolong(s, 2)? {
        println!("S≤2: {}", entry.poly.display(ring, ranking));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
