// Janet decomposition of the complement count, checked against inclusion–
// exclusion and brute-force enumeration.

use std::error::Error;

use diffdim::dimension::{krull_oracle, omega_incl_excl, omega_janet, DEFAULT_SUBSET_LIMIT};
use diffdim::{LeaderSpec, MultiIndex};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let mi = |e: &[u32]| MultiIndex::new(e.to_vec());
    let spec = LeaderSpec::new(
        3,
        vec![
            vec![mi(&[2, 0, 1]), mi(&[0, 2, 0]), mi(&[1, 1, 1])],
            vec![mi(&[0, 0, 3])],
        ],
    );
    let janet = omega_janet(&spec);
    for cone in &janet.janet_cones {
        println!("u{}{} multiplicative {:?}", cone.indeterminate + 1, cone.generator, cone.multiplicative);
    }
    let ie = omega_incl_excl(&spec, DEFAULT_SUBSET_LIMIT)?;
    println!("Janet:                 {}", janet.omega);
    println!("inclusion–exclusion:   {}", ie.omega);
    assert_eq!(janet.omega, ie.omega);

    for l in janet.stabilization_bound..janet.stabilization_bound + 4 {
        let (w, k) = (janet.omega.eval(l.into()), krull_oracle(&spec, l));
        println!("ℓ = {l}: ω = {w}, enumeration = {k}");
        assert_eq!(w, k);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
