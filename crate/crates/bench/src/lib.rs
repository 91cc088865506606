//! Inputs shared by the benchmarks.

use monodromy_core::fixtures::EXAMPLES;
use monodromy_core::{gamma_infinity, NewtonAtInfinity, Polynomial};

/// Named examples with their Newton polyhedra prebuilt.
pub fn prebuilt_examples() -> Vec<(&'static str, NewtonAtInfinity)> {
    EXAMPLES.iter().map(|e| (e.name, e.newton())).collect()
}

/// `x1^k + ... + xn^k + x1*...*xn`: a convenient family that grows with
/// both the dimension and the degree.
pub fn fermat_plus_monomial(n: usize, k: u32) -> Polynomial {
    let vars: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    let mut text: Vec<String> = vars.iter().map(|v| format!("{v}^{k}")).collect();
    text.push(vars.join("*"));
    Polynomial::parse(&text.join(" + "), n, false).expect("valid polynomial")
}

/// The Newton polyhedron of [`fermat_plus_monomial`].
pub fn fermat_newton(n: usize, k: u32) -> NewtonAtInfinity {
    gamma_infinity(&fermat_plus_monomial(n, k)).expect("full-dimensional")
}
