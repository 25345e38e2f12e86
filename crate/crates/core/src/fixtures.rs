//! The four standard test rings.
//!
//! | name | ring                         | basis            |
//! |------|------------------------------|------------------|
//! | R1   | GF(2)[x]/(x^2)               | 1, x             |
//! | R2   | GF(2)[x,y]/(x^2, x*y, y^2)   | 1, x, y          |
//! | R3   | GF(2)[x,y]/(x^2, y^2)        | 1, x, y, x*y     |
//! | R4   | GF(3)[x]/(x^3)               | 1, x, x^2        |

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::algebra::{build_local_algebra, LocalAlgebra};
use crate::field::PrimeField;
use crate::poly::PolyExpr;

/// Name, characteristic, variables, relations and nil bound of each fixture.
pub const FIXTURES: [(&str, u32, &[&str], &[&str], u32); 4] = [
    ("R1", 2, &["x"], &["x^2"], 2),
    ("R2", 2, &["x", "y"], &["x^2", "x*y", "y^2"], 2),
    ("R3", 2, &["x", "y"], &["x^2", "y^2"], 4),
    ("R4", 3, &["x"], &["x^3"], 3),
];

fn build(p: u32, vars: &[&str], relations: &[&str], nil_bound: u32) -> LocalAlgebra<PrimeField> {
    let field = PrimeField::new(p).expect("fixture characteristic is prime");
    let names: Vec<String> = vars.iter().map(|v| v.to_string()).collect();
    let rels: Vec<PolyExpr<PrimeField>> = relations
        .iter()
        .map(|t| PolyExpr::parse(field, &names, t).expect("fixture relation parses"))
        .collect();
    build_local_algebra(field, vars, &rels, nil_bound).expect("fixture ring builds")
}

pub fn by_name(name: &str) -> Option<LocalAlgebra<PrimeField>> {
    FIXTURES
        .iter()
        .find(|f| f.0 == name)
        .map(|&(_, p, vars, rels, n)| build(p, vars, rels, n))
}

pub fn r1() -> LocalAlgebra<PrimeField> {
    by_name("R1").unwrap()
}

pub fn r2() -> LocalAlgebra<PrimeField> {
    by_name("R2").unwrap()
}

pub fn r3() -> LocalAlgebra<PrimeField> {
    by_name("R3").unwrap()
}

pub fn r4() -> LocalAlgebra<PrimeField> {
    by_name("R4").unwrap()
}
