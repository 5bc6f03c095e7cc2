//! Transitivity, the projection formula and Mackey decomposition for
//! induced projective representations, on every pair of subgroups of S4
//! and D6 and every coclass.

mod common;

use common::{mackey, projection_formula, transitivity};

#[test]
fn transitivity_on_s4() {
    assert!(transitivity("S4") > 100);
}

#[test]
fn transitivity_on_d6() {
    assert!(transitivity("D6") > 100);
}

#[test]
fn projection_formula_on_s4() {
    assert!(projection_formula("S4") > 100);
}

#[test]
fn projection_formula_on_d6() {
    assert!(projection_formula("D6") > 100);
}

#[test]
fn mackey_on_s4() {
    assert!(mackey("S4") > 100);
}

#[test]
fn mackey_on_d6() {
    assert!(mackey("D6") > 100);
}
