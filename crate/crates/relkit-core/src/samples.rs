//! Hand-picked finite structures used by the test suite and the examples:
//! a small non-functional relation and a family of seven-element operation
//! tables with interesting invertibility, neutrality and commutation
//! behaviour.

use crate::binop::BinOp;
use crate::relation::Relation;
use crate::universe::Universe;

fn seven() -> Universe {
    Universe::atomic("S", &["a", "b", "c", "d", "e", "f", "g"]).unwrap()
}

fn table(rows: [[usize; 7]; 7]) -> BinOp {
    let rows: Vec<Vec<usize>> = rows
        .iter()
        .map(|r| r.iter().map(|&v| v - 1).collect())
        .collect();
    BinOp::from_table(&seven(), &rows).unwrap()
}

/// A relation from `{1..5}` to `{a..d}` that is neither univalent nor
/// total-injective; its existential image sends `{1}` to `{b,d}`.
pub fn image_sample() -> Relation {
    let x = Universe::atomic("X", &["1", "2", "3", "4", "5"]).unwrap();
    let y = Universe::atomic("Y", &["a", "b", "c", "d"]).unwrap();
    Relation::from_pairs(
        &x,
        &y,
        &[(0, 1), (0, 3), (1, 0), (2, 2), (3, 3), (4, 0), (4, 2)],
    )
    .unwrap()
}

/// An operation whose left-invertible elements are exactly `{b,f}`.
pub fn op_left_invertible() -> BinOp {
    table([
        [3, 2, 1, 4, 1, 6, 7],
        [1, 2, 5, 4, 3, 6, 7],
        [1, 3, 2, 4, 2, 6, 7],
        [1, 5, 4, 7, 4, 3, 6],
        [1, 2, 5, 4, 5, 6, 7],
        [1, 3, 6, 5, 2, 4, 7],
        [1, 2, 7, 4, 7, 6, 3],
    ])
}

/// A non-commutative operation whose center is `{a,c}`.
pub fn op_with_center() -> BinOp {
    table([
        [3, 2, 1, 4, 5, 6, 7],
        [2, 3, 2, 4, 5, 6, 7],
        [1, 2, 3, 4, 5, 6, 7],
        [4, 5, 4, 7, 2, 3, 6],
        [5, 2, 5, 4, 3, 6, 7],
        [6, 3, 6, 5, 2, 4, 7],
        [7, 2, 7, 4, 5, 6, 3],
    ])
}

/// The cyclic group of the three rotations of a triangle, written as
/// one-line permutations `123`, `231`, `312`.
pub fn op_rotations() -> BinOp {
    let u = Universe::atomic("A3", &["123", "231", "312"]).unwrap();
    BinOp::from_table(&u, &[vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 1]]).unwrap()
}

/// The constant operation `x·y = a` on a four-element carrier; it has no
/// neutral elements at all.
pub fn op_constant_first() -> BinOp {
    let u = Universe::atomic("K", &["a", "b", "c", "d"]).unwrap();
    BinOp::from_table(&u, &vec![vec![0; 4]; 4]).unwrap()
}

/// An operation with right neutrals `{c,e}` and no left neutral.
pub fn op_right_neutral() -> BinOp {
    table([
        [3, 2, 1, 4, 1, 6, 7],
        [1, 3, 2, 4, 2, 6, 7],
        [1, 2, 3, 4, 3, 6, 7],
        [1, 5, 4, 7, 4, 3, 6],
        [1, 2, 5, 4, 5, 6, 7],
        [1, 3, 6, 5, 6, 4, 7],
        [1, 2, 7, 4, 7, 6, 3],
    ])
}
