//! The model file format round-trips byte for byte: serializing a parsed
//! canonical file reproduces it, and serializing any model (including
//! randomly generated ones) yields a fixpoint of parse∘serialize.

use proptest::prelude::*;
use relkit_cli::format::{parse_model, serialize, Item, Model};
use relkit_core::{BinOp, Relation, Universe};

#[test]
fn canonical_file_is_a_fixpoint() {
    let path = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden/model.rk");
    let text = std::fs::read_to_string(path).unwrap();
    let model = parse_model(&text).unwrap();
    assert_eq!(serialize(&model), text);
}

#[test]
fn noise_normalizes_to_the_same_bytes() {
    let noisy = "# a model\nuniverse  X={ a , b }\nrelation R : X->X { a:{a} b:{b} }\n# done\n";
    let clean = "universe X = {a, b}\n\nrelation R : X -> X {\n  a: {a}\n  b: {b}\n}\n";
    assert_eq!(serialize(&parse_model(noisy).unwrap()), clean);
    assert_eq!(serialize(&parse_model(clean).unwrap()), clean);
}

#[test]
fn errors_report_line_and_column() {
    let missing = "universe X = {a}\nrelation R : X -> Y {\n  a: {}\n}\n";
    let err = parse_model(missing).unwrap_err();
    assert_eq!(err.line, 2);
    assert!(err.msg.contains("unknown universe `Y`"));

    let dup = "universe X = {a}\nuniverse X = {b}\n";
    let err = parse_model(dup).unwrap_err();
    assert!(err.msg.contains("declared twice"));

    let bad_char = "universe X = {a}\nrelation R : X -> X {\n  a: {a!}\n}\n";
    let err = parse_model(bad_char).unwrap_err();
    assert_eq!((err.line, err.col), (3, 8));
}

fn arb_model() -> impl Strategy<Value = Model> {
    let label = prop::sample::select(vec!["a", "b", "c", "d", "e", "f"]);
    let labels = prop::collection::btree_set(label, 0..5);
    prop::collection::vec(labels, 1..4).prop_flat_map(|universes| {
        let mut items = Vec::new();
        for (k, labels) in universes.iter().enumerate() {
            let name = format!("U{k}");
            let refs: Vec<&str> = labels.iter().copied().collect();
            items.push(Item::Universe(
                name.clone(),
                Universe::atomic(&name, &refs).unwrap(),
            ));
        }
        let sizes: Vec<usize> = universes.iter().map(|l| l.len()).collect();
        let n = sizes.len();
        let rels = prop::collection::vec(
            (0..n, 0..n, prop::collection::vec(any::<bool>(), 36)),
            0..4,
        );
        let ops = prop::collection::vec((0..n, prop::collection::vec(0usize..64, 25)), 0..2);
        (Just(items), Just(sizes), rels, ops).prop_map(|(mut items, sizes, rels, ops)| {
            let universe = |items: &[Item], k: usize| match &items[k] {
                Item::Universe(_, u) => u.clone(),
                _ => unreachable!("universes come first"),
            };
            for (k, (s, t, bits)) in rels.into_iter().enumerate() {
                let src = universe(&items, s);
                let tgt = universe(&items, t);
                let ts = tgt.size().max(1);
                let r = Relation::from_fn(&src, &tgt, move |i, j| bits[i * ts + j]);
                items.push(Item::Relation(format!("R{k}"), r));
            }
            for (k, (c, cells)) in ops.into_iter().enumerate() {
                let carrier = universe(&items, c);
                let n = sizes[c];
                if n == 0 {
                    continue;
                }
                let table: Vec<Vec<usize>> = (0..n)
                    .map(|i| (0..n).map(|j| cells[i * n + j] % n).collect())
                    .collect();
                items.push(Item::BinOp(
                    format!("F{k}"),
                    BinOp::from_table(&carrier, &table).unwrap(),
                ));
            }
            Model { items }
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn serialize_then_parse_is_identity(model in arb_model()) {
        let text = serialize(&model);
        let back = parse_model(&text).unwrap();
        prop_assert_eq!(serialize(&back), text);
        prop_assert_eq!(back.items.len(), model.items.len());
        for (a, b) in model.items.iter().zip(&back.items) {
            match (a, b) {
                (Item::Universe(na, ua), Item::Universe(nb, ub)) => {
                    prop_assert_eq!(na, nb);
                    prop_assert_eq!(ua, ub);
                }
                (Item::Relation(na, ra), Item::Relation(nb, rb)) => {
                    prop_assert_eq!(na, nb);
                    prop_assert_eq!(ra, rb);
                }
                (Item::BinOp(na, fa), Item::BinOp(nb, fb)) => {
                    prop_assert_eq!(na, nb);
                    prop_assert_eq!(fa.table(), fb.table());
                }
                _ => prop_assert!(false, "item kinds changed"),
            }
        }
    }
}
