//! Every example under `examples/` runs as part of the test suite.

#[allow(dead_code)]
mod numerical_polynomials {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/numerical_polynomials.rs"));
}

#[test]
fn numerical_polynomials_example_runs() {
    numerical_polynomials::run_example().expect("numerical_polynomials example should run");
}

#[allow(dead_code)]
mod burgers_omega {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/burgers_omega.rs"));
}

#[test]
fn burgers_omega_example_runs() {
    burgers_omega::run_example().expect("burgers_omega example should run");
}

#[allow(dead_code)]
mod idempotent_vs_linear {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/idempotent_vs_linear.rs"));
}

#[test]
fn idempotent_vs_linear_example_runs() {
    idempotent_vs_linear::run_example().expect("idempotent_vs_linear example should run");
}

#[allow(dead_code)]
mod first_order_leaders {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/first_order_leaders.rs"));
}

#[test]
fn first_order_leaders_example_runs() {
    first_order_leaders::run_example().expect("first_order_leaders example should run");
}

#[allow(dead_code)]
mod janet_cones {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/janet_cones.rs"));
}

#[test]
fn janet_cones_example_runs() {
    janet_cones::run_example().expect("janet_cones example should run");
}

#[allow(dead_code)]
mod reduction_and_coherence {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/reduction_and_coherence.rs"));
}

#[test]
fn reduction_and_coherence_example_runs() {
    reduction_and_coherence::run_example().expect("reduction_and_coherence example should run");
}

#[allow(dead_code)]
mod command_line {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/command_line.rs"));
}

#[test]
fn command_line_example_runs() {
    command_line::run_example().expect("command_line example should run");
}
