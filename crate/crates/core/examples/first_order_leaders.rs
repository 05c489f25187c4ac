// `{u_x}` against `{u_xx, u_xy}`: the dimension polynomials `ℓ + 1` and
// `ℓ + 2` already separate the ideals.

use std::error::Error;

use diffdim::system::parse_system;
use diffdim::{compare_ideals, omega, Relation};

const SYSTEM: &str = "
ring derivations=(x,y) indeterminates=(u)
ranking orderly tiebreak=(u)
chain S1 { u[1,0]; }
chain S2 { u[2,0]; u[1,1]; }
";

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let sys = parse_system(SYSTEM)?;
    let (s1, s2) = (sys.chain("S1").ok_or("S1")?, sys.chain("S2").ok_or("S2")?);
    let (w1, w2) = (omega(s1)?, omega(s2)?);
    println!("ω(S1) = {}  {:?}", w1.omega, w1.coefficients());
    println!("ω(S2) = {}  {:?}", w2.omega, w2.coefficients());
    assert_eq!(w1.coefficients(), [0, 1, 0]);
    assert_eq!(w2.coefficients(), [1, 1, 0]);

    let verdict = compare_ideals(s2, s1, true)?;
    println!("I(S2) vs I(S1): {} ({:?})", verdict.relation, verdict.containment);
    assert_eq!(verdict.relation, Relation::OmegaDistinctProperlyContained);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
