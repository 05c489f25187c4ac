// Two ideals with the same dimension polynomial that differ only in the
// degrees of their chain elements: `I(u² − u) ⊊ I(u)`.

use std::error::Error;

use diffdim::compare::Containment;
use diffdim::system::parse_system;
use diffdim::{compare_ideals, omega, Relation};

const SYSTEM: &str = "
ring derivations=(t) indeterminates=(u)
ranking orderly tiebreak=(u)
chain Ssq { u[0]^2 - u[0]; }
chain Slin { u[0]; }
";

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let sys = parse_system(SYSTEM)?;
    let (sq, lin) = (sys.chain("Ssq").ok_or("Ssq")?, sys.chain("Slin").ok_or("Slin")?);
    println!("ω(Ssq) = {}, ω(Slin) = {}", omega(sq)?.omega, omega(lin)?.omega);

    let verdict = compare_ideals(sq, lin, false)?;
    println!("relation: {}", verdict.relation);
    for l in &verdict.leader_report {
        println!("leader {}: degree {:?} vs {:?}", l.leader, l.smaller, l.larger);
    }
    assert_eq!(verdict.relation, Relation::ProperlyContained);
    assert_eq!(verdict.containment, Containment::Established);

    // The other direction has no reduction witness.
    let reverse = compare_ideals(lin, sq, false)?;
    println!("reverse: {} (assuming containment: {:?})", reverse.relation, reverse.assumed_relation);
    assert_eq!(reverse.relation, Relation::ContainmentUnknown);
    println!("{}", serde_json::to_string_pretty(&verdict)?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
