#![allow(dead_code)]

use dicritique::algebra::Field;
use dicritique::pencil::{parse_pencil, Pencil};

/// `(field, f, g)`: ten pencils over Q and two over F_5, all with rational
/// base points over their field.
pub const CORPUS: [(&str, &str, &str); 12] = [
    ("Q", "x", "y"),
    ("Q", "x^2", "y^2"),
    ("Q", "y^2", "x^3"),
    ("Q", "y - x^2", "1"),
    ("Q", "x^2 - y^2", "x*y + y^3"),
    ("Q", "y^2 - x^3", "x^2"),
    ("Q", "x*y + 1", "y"),
    ("Q", "y^2 - x^2 - x^3", "x*y"),
    ("Q", "(y - x^2)^2 - x^5", "y"),
    ("Q", "x^3 + y^3 - x*y", "x^3"),
    ("Fp:5", "x^2 + y^2", "x*y + y^3"),
    ("Fp:5", "y^2 - x^3", "x^2 + y^2"),
];

/// Pencils whose reduced `{G = 0}` is smooth at every base point.
pub const SMOOTH_G: [(&str, &str, &str); 7] = [
    ("Q", "x", "y"),
    ("Q", "x^2", "y^2"),
    ("Q", "y^2", "x^3"),
    ("Q", "y - x^2", "1"),
    ("Q", "(y - x^2)^2 - x^5", "y"),
    ("Q", "x^3 + y^3 - x*y", "x^3"),
    ("Fp:5", "x^2 + 2*y", "y^2"),
];

/// `{G = 0} = {YZ = 0}` passes through the base point `(1:0:0)` at its node.
pub const SINGULAR_G: (&str, &str, &str) = ("Q", "x*y + 1", "y");

pub fn field(name: &str) -> Field {
    dicritique::cli::parse_field(name).unwrap()
}

pub fn pencil((k, f, g): (&str, &str, &str)) -> Pencil {
    parse_pencil(f, g, &field(k)).unwrap()
}

pub fn q() -> Field {
    Field::rationals()
}
