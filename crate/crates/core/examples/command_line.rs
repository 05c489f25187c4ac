// Driving the command-line front end in-process on a bundled system file.

use std::error::Error;

use diffdim::cli::run;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let file = concat!(env!("CARGO_MANIFEST_DIR"), "/data/incoherent.sys");
    for args in [
        vec!["diffdim", "validate", file, "--chain", "C"],
        vec!["diffdim", "validate", file, "--chain", "T"],
        vec!["diffdim", "omega", concat!(env!("CARGO_MANIFEST_DIR"), "/data/first_order.sys"), "--chain", "S2"],
    ] {
        let out = run(args.clone());
        println!("$ {}  (exit {})", args[1..].join(" "), out.code);
        print!("{}{}", out.stdout, out.stderr);
    }
    let out = run(["diffdim", "validate", file, "--chain", "C"]);
    assert_eq!(out.code, 1);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
