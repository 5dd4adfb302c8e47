//! The bundled sample structures pinned down element by element: membership
//! machinery over a four-element base, the existential image of the sample
//! relation, and the invertibility/neutrality features of the seven-element
//! operation tables.

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use relkit_core::boolalg::{lifted, subset_of_point};
use relkit_core::images::image_bundle;
use relkit_core::powerset::membership;
use relkit_core::samples::{
    image_sample, op_constant_first, op_left_invertible, op_right_neutral, op_rotations,
    op_with_center,
};
use relkit_core::{BinOp, Relation, Universe};

fn point(u: &Universe, label: &str) -> Relation {
    let i = u.index_of_label(label).expect("label exists");
    Relation::from_pairs(u, &Universe::unit(), &[(i, 0)]).unwrap()
}

fn vector_labels(v: &Relation) -> Vec<String> {
    v.pairs()
        .iter()
        .map(|&(x, _)| v.src().element_label(x).unwrap())
        .collect()
}

#[test]
fn membership_on_four_elements() {
    let base = Universe::atomic("B", &["a", "b", "c", "d"]).unwrap();
    let bundle = membership(&base).unwrap();

    // Singleton columns sit at the power indices 1, 2, 4, 8.
    assert_eq!(
        bundle.sigma.pairs(),
        vec![(0, 1), (1, 2), (2, 4), (3, 8)]
    );
    assert!(bundle.sigma.is_mapping() && bundle.sigma.is_injective());

    assert_eq!(
        bundle.atoms().pairs(),
        vec![(1, 1), (2, 2), (4, 4), (8, 8)]
    );

    // Row a of the membership relation marks the eight subsets containing a.
    let a_row: Vec<usize> = bundle.epsilon.row_ones(0).collect();
    assert_eq!(a_row, vec![1, 3, 5, 7, 9, 11, 13, 15]);

    // The inclusion ordering has top row {} and a single maximal subset.
    assert!(bundle.omega.is_reflexive().unwrap());
    assert!(bundle.omega.is_antisymmetric().unwrap());
    assert_eq!(bundle.omega.row_ones(0).count(), 16);
    assert_eq!(bundle.omega.row_ones(15).count(), 1);
}

#[test]
fn subset_points_use_power_indices() {
    let base = Universe::atomic("B", &["a", "b", "c", "d"]).unwrap();
    let bundle = membership(&base).unwrap();
    let u = point(&base, "a").union(&point(&base, "d")).unwrap();
    let e = subset_of_point(&bundle, &u).unwrap();
    assert!(e.is_point());
    assert_eq!(e.pairs(), vec![(9, 0)]);
    assert_eq!(bundle.power.element_label(9).unwrap(), "{a,d}");
}

#[test]
fn existential_image_of_the_sample() {
    let r = image_sample();
    let bundle = image_bundle(&r).unwrap();
    assert!(bundle.theta.is_mapping());

    // {} ↦ {} and {1} ↦ {b,d}: power indices 0 ↦ 0 and 1 ↦ 2+8.
    assert!(bundle.theta.get(0, 0));
    assert!(bundle.theta.get(1, 10));
    let one = r.src().index_of_label("1").unwrap();
    let b = r.tgt().index_of_label("b").unwrap();
    let d = r.tgt().index_of_label("d").unwrap();
    assert_eq!(1 << one, 1);
    assert_eq!((1 << b) | (1 << d), 10);

    // The inverse image is the existential image of the converse.
    assert_eq!(
        bundle.theta_conv,
        image_bundle(&r.converse()).unwrap().theta
    );
}

#[test]
fn power_relator_differs_from_the_naive_quotient() {
    // ζ_R agrees with syq(ε, R∘ε′) on many small relations but not on all;
    // a seeded search must produce a witness of the difference.
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut found = false;
    'search: for _ in 0..500 {
        let x = Universe::atomic("X", &["x0", "x1", "x2"]).unwrap();
        let y = Universe::atomic("Y", &["y0", "y1", "y2"]).unwrap();
        let mut pairs = Vec::new();
        for i in 0..3 {
            for j in 0..3 {
                if rng.gen_bool(0.4) {
                    pairs.push((i, j));
                }
            }
        }
        let r = Relation::from_pairs(&x, &y, &pairs).unwrap();
        let zeta = image_bundle(&r).unwrap().zeta;
        let eps = membership(&x).unwrap().epsilon.clone();
        let eps_t = membership(&y).unwrap().epsilon.clone();
        let naive = eps.syq(&r.compose(&eps_t).unwrap()).unwrap();
        if zeta != naive {
            found = true;
            break 'search;
        }
    }
    assert!(found, "every sampled relation collapsed the two constructions");
}

#[test]
fn rotations_form_a_group_with_swapping_inverses() {
    let rot = op_rotations();
    assert!(rot.is_associative().unwrap());
    assert!(rot.is_commutative().unwrap());
    assert_eq!(rot.neutrals().unwrap().pairs(), vec![(0, 0)]);

    let neutral = point(rot.carrier(), "123");
    let inverse = rot.right_inverse_map(&neutral).unwrap();
    assert!(inverse.is_mapping() && inverse.is_injective());
    assert_eq!(inverse.pairs(), vec![(0, 0), (1, 2), (2, 1)]);
}

#[test]
fn right_neutral_table_features() {
    let op = op_right_neutral();
    assert_eq!(
        vector_labels(&op.right_neutrals().unwrap()),
        ["c", "e"]
    );
    assert!(op.left_neutrals().unwrap().is_empty_relation());
    assert!(op.neutrals().unwrap().is_empty_relation());

    // Right division by the two right neutrals, one unit point at a time.
    let c = point(op.carrier(), "c");
    let e = point(op.carrier(), "e");
    let division = op
        .right_inverse_map(&c)
        .unwrap()
        .union(&op.right_inverse_map(&e).unwrap())
        .unwrap();
    let images: Vec<(String, Vec<String>)> = (0..7)
        .map(|i| {
            (
                op.carrier().element_label(i).unwrap(),
                division
                    .row_ones(i)
                    .map(|j| op.carrier().element_label(j).unwrap())
                    .collect(),
            )
        })
        .collect();
    let expect = |s: &str, ts: &[&str]| {
        (
            s.to_string(),
            ts.iter().map(|t| t.to_string()).collect::<Vec<_>>(),
        )
    };
    assert_eq!(
        images,
        vec![
            expect("a", &["a"]),
            expect("b", &["b"]),
            expect("c", &["c", "e"]),
            expect("d", &["b", "f"]),
            expect("e", &["c", "e"]),
            expect("f", &["b", "d"]),
            expect("g", &["g"]),
        ]
    );
}

#[test]
fn left_invertible_table_features() {
    let op = op_left_invertible();
    assert_eq!(
        vector_labels(&op.left_invertible_elements().unwrap()),
        ["b", "f"]
    );
    assert!(!op.allows_left_inversion().unwrap());

    // Division by the left-invertible f is a permutation of the carrier.
    let u = op.carrier().clone();
    let f = u.index_of_label("f").unwrap();
    let mut division = vec![None; 7];
    for z in 0..7 {
        let out = op.apply(f, z);
        assert!(division[out].is_none(), "f·z must determine z");
        division[out] = Some(z);
    }
    let label = |i: usize| u.element_label(i).unwrap();
    let got: Vec<(String, String)> = (0..7)
        .map(|i| (label(i), label(division[i].unwrap())))
        .collect();
    let want: Vec<(String, String)> = [
        ("a", "a"),
        ("b", "e"),
        ("c", "b"),
        ("d", "f"),
        ("e", "d"),
        ("f", "c"),
        ("g", "g"),
    ]
    .iter()
    .map(|&(x, y)| (x.to_string(), y.to_string()))
    .collect();
    assert_eq!(got, want);
}

#[test]
fn center_and_degenerate_tables() {
    let op = op_with_center();
    assert!(!op.is_commutative().unwrap());
    assert_eq!(vector_labels(&op.invariant_elements().unwrap()), ["a", "c"]);
    let (b, d) = (1, 3);
    assert_ne!(op.apply(b, d), op.apply(d, b));

    assert!(op_constant_first().neutrals().unwrap().is_empty_relation());
    assert!(op_constant_first()
        .right_neutrals()
        .unwrap()
        .is_empty_relation());
}

#[test]
fn lifted_join_of_singletons() {
    let base = Universe::atomic("B", &["a", "b", "c", "d"]).unwrap();
    let alg = lifted(&base).unwrap();
    let join: BinOp = alg.join_op().unwrap();
    // {a} ∨ {b} = {a,b}: power indices 1 ∨ 2 = 3.
    assert_eq!(join.apply(1, 2), 3);
    let meet = alg.meet_op().unwrap();
    assert_eq!(meet.apply(3, 6), 2);
    assert_eq!(join.apply(0, 5), 5);
}
