//! Grammar-level guarantees of the term language: operator precedence,
//! the non-associative residual level, and the print/parse round-trip,
//! including on randomly generated terms.

use proptest::prelude::*;
use relkit_cli::eval::eval;
use relkit_cli::format::parse_model;
use relkit_cli::term::{parse, Term, TermKind};

#[test]
fn weakest_to_strongest_binding() {
    // | then & then residuals then * then ~ then ^.
    let t = parse("a | b & c \\ d * ~e^").unwrap();
    let TermKind::Union(_, rhs) = &t.kind else {
        panic!("top level must be a union")
    };
    let TermKind::Intersect(_, rhs) = &rhs.kind else {
        panic!("second level must be an intersection")
    };
    let TermKind::ResidualRight(_, rhs) = &rhs.kind else {
        panic!("third level must be a residual")
    };
    let TermKind::Compose(_, rhs) = &rhs.kind else {
        panic!("fourth level must be a composition")
    };
    let TermKind::Complement(inner) = &rhs.kind else {
        panic!("fifth level must be a complement")
    };
    assert!(matches!(inner.kind, TermKind::Converse(_)));
}

#[test]
fn residual_mixtures_require_parens() {
    for bad in ["A \\ C / B", "A / C \\ B", "A \\ B \\ C", "A / B / C"] {
        let err = parse(bad).unwrap_err();
        assert_eq!(
            err.msg, "non-associative residual chain requires parens",
            "{bad}"
        );
    }
    for good in ["(A \\ C) / B", "A \\ (C / B)", "(A / C) \\ B"] {
        parse(good).unwrap();
    }
}

#[test]
fn call_argument_lists() {
    let t = parse("f()").unwrap();
    assert!(matches!(&t.kind, TermKind::Call(n, a) if n == "f" && a.is_empty()));
    let t = parse("syq(R | S, T)").unwrap();
    assert!(matches!(&t.kind, TermKind::Call(_, a) if a.len() == 2));
    assert!(parse("f(a,)").is_err());
    assert!(parse("f(a b)").is_err());
}

#[test]
fn residuals_evaluate_with_the_documented_orientation() {
    let model = parse_model(
        "universe X = {x1, x2}\nuniverse Y = {y1, y2, y3}\nuniverse Z = {z1}\n\nrelation A : X -> Y {\n  x1: {y1}\n  x2: {y2, y3}\n}\n\nrelation C : X -> Z {\n  x1: {z1}\n  x2: {}\n}\n\nrelation B : Y -> Z {\n  y1: {z1}\n  y2: {z1}\n  y3: {}\n}\n",
    )
    .unwrap();
    // A \ C : Y → Z, the largest Q with A*Q ⊑ C.
    let q = eval(&parse("A \\ C").unwrap(), &model).unwrap();
    assert_eq!(q.src().name(), "Y");
    assert_eq!(q.tgt().name(), "Z");
    let a = model.relation("A").unwrap();
    let c = model.relation("C").unwrap();
    assert!(c.includes(&a.compose(&q).unwrap()).unwrap());
    // C / B : X → Y, the largest Q with Q*B ⊑ C.
    let q = eval(&parse("C / B").unwrap(), &model).unwrap();
    assert_eq!(q.src().name(), "X");
    assert_eq!(q.tgt().name(), "Y");
    let b = model.relation("B").unwrap();
    assert!(c.includes(&q.compose(b).unwrap()).unwrap());
}

fn arb_term() -> impl Strategy<Value = Term> {
    let leaf = prop::sample::select(vec!["R", "S", "T", "longname"]).prop_map(|n| {
        Term {
            kind: TermKind::Ident(n.to_string()),
            line: 1,
            col: 1,
        }
    });
    leaf.prop_recursive(5, 64, 3, |inner| {
        let unary = inner.clone().prop_flat_map(|t| {
            prop_oneof![
                Just(Term {
                    kind: TermKind::Complement(Box::new(t.clone())),
                    line: 1,
                    col: 1
                }),
                Just(Term {
                    kind: TermKind::Converse(Box::new(t)),
                    line: 1,
                    col: 1
                }),
            ]
        });
        let binary = (inner.clone(), inner.clone(), 0usize..5).prop_map(|(a, b, k)| {
            let (a, b) = (Box::new(a), Box::new(b));
            let kind = match k {
                0 => TermKind::Union(a, b),
                1 => TermKind::Intersect(a, b),
                2 => TermKind::Compose(a, b),
                3 => TermKind::ResidualRight(a, b),
                _ => TermKind::ResidualLeft(a, b),
            };
            Term { kind, line: 1, col: 1 }
        });
        let call = (prop::sample::select(vec!["syq", "kron", "fork"]), inner)
            .prop_map(|(n, a)| Term {
                kind: TermKind::Call(n.to_string(), vec![a]),
                line: 1,
                col: 1,
            });
        prop_oneof![unary, binary, call]
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn printing_then_parsing_is_identity(t in arb_term()) {
        let printed = t.to_string();
        let back = parse(&printed).unwrap();
        prop_assert_eq!(&back, &t, "printed as `{}`", printed);
        prop_assert_eq!(back.to_string(), printed);
    }
}
