// The dimension polynomial of Burgers' equation `u_xx = u_t + 2·u·u_x`.

use std::error::Error;

use diffdim::cli::oracle_table;
use diffdim::system::parse_system;
use diffdim::omega;

const BURGERS: &str = "
ring derivations=(t,x) indeterminates=(u)
ranking orderly tiebreak=(u)
chain B { u[0,2] - u[1,0] - 2*u[0,1]*u[0,0]; }
";

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let sys = parse_system(BURGERS)?;
    let b = sys.chain("B").ok_or("chain B")?;
    let report = b.validate()?;
    println!("triangular: {}, coherent: {}", report.triangular, report.coherent);

    let w = omega(b)?;
    println!("ω(ℓ) = {} = {}", w.omega, w.omega.binomial_form());
    println!(
        "degree {}, differential dimension {}, stabilizes at ℓ ≥ {}",
        w.degree(),
        w.differential_dimension(),
        w.stabilization_bound
    );
    assert_eq!(w.omega.to_string(), "2ℓ + 1");

    // Ω(ℓ) = C(ℓ+2,2) − |S_{≤ℓ}| read off the prolonged chain.
    let table = oracle_table(b, &w, 8)?;
    for row in &table.rows {
        println!("ℓ = {:>2}  Ω = {:>3}  ω = {:>3}", row.order, row.krull, row.omega);
    }
    assert!(table.rows.iter().all(|r| r.matches));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
