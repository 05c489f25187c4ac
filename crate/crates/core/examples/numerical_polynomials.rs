// Numerical polynomials in the binomial basis `C(ℓ+i, i)` and their
// eventual order.

use std::error::Error;

use diffdim::NumericalPolynomial;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    // 2·C(ℓ+1,1) − 1 = 2ℓ + 1
    let burgers = NumericalPolynomial::new(vec![-1, 2, 0]);
    let plane = NumericalPolynomial::new(vec![0, 0, 1]);
    println!("{burgers}  =  {}", burgers.binomial_form());
    println!("{plane}  =  {}", plane.binomial_form());

    let values: Vec<i128> = (0..6).map(|l| burgers.eval(l)).collect();
    println!("values of 2ℓ+1 on 0..6: {values:?}");
    assert_eq!(values, [1, 3, 5, 7, 9, 11]);

    // The highest differing coefficient decides, whatever happens at small ℓ.
    let big_constant = NumericalPolynomial::new(vec![100, 0, 0]);
    println!("100 < 2ℓ + 1 eventually: {}", big_constant < burgers);
    assert!(big_constant < burgers && burgers < plane);

    let recovered = NumericalPolynomial::interpolate(2, |l| (l + 1) * (l + 2) / 2 + l);
    println!("interpolated C(ℓ+2,2) + ℓ = {recovered} with coefficients {:?}", recovered.coeffs());
    assert_eq!(recovered.coeffs(), [-1, 1, 1]);

    println!("{}", serde_json::to_string(&burgers)?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
