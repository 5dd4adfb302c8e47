//! Property tests over randomly shaped relations.

use proptest::prelude::*;
use relkit_core::oracle::oracle_syq;
use relkit_core::prodsum::{unvec, vec as vec_rel};
use relkit_core::{Relation, Universe};

fn sized(name: &'static str, n: usize) -> Universe {
    let labels: Vec<String> = (0..n).map(|i| format!("{}{i}", name.to_lowercase())).collect();
    let refs: Vec<&str> = labels.iter().map(|s| s.as_str()).collect();
    Universe::atomic(name, &refs).expect("fresh labels")
}

fn relation(name: &'static str, tgt_name: &'static str) -> impl Strategy<Value = Relation> {
    (0usize..=4, 0usize..=4)
        .prop_flat_map(move |(s, t)| {
            let src = sized(name, s);
            let tgt = sized(tgt_name, t);
            proptest::collection::vec(proptest::bool::ANY, s * t)
                .prop_map(move |bits| {
                    let ts = tgt.size().max(1);
                    Relation::from_fn(&src, &tgt, move |i, j| bits[i * ts + j])
                })
        })
}

/// A pair of relations sharing their source universe.
fn same_source() -> impl Strategy<Value = (Relation, Relation)> {
    (0usize..=4, 0usize..=4, 0usize..=4).prop_flat_map(|(v, w, z)| {
        let vu = sized("V", v);
        let wu = sized("W", w);
        let zu = sized("Z", z);
        let r = proptest::collection::vec(proptest::bool::ANY, v * w).prop_map({
            let (vu, wu) = (vu.clone(), wu.clone());
            move |bits| {
                let ts = wu.size().max(1);
                Relation::from_fn(&vu, &wu, move |i, j| bits[i * ts + j])
            }
        });
        let s = proptest::collection::vec(proptest::bool::ANY, v * z).prop_map(move |bits| {
            let ts = zu.size().max(1);
            Relation::from_fn(&vu, &zu, move |i, j| bits[i * ts + j])
        });
        (r, s)
    })
}

/// Composable chain `Q : X→Y`, `R : Y→Z` with a mask `C : X→Z`.
fn chain() -> impl Strategy<Value = (Relation, Relation, Relation)> {
    (0usize..=4, 0usize..=4, 0usize..=4).prop_flat_map(|(x, y, z)| {
        let xu = sized("X", x);
        let yu = sized("Y", y);
        let zu = sized("Z", z);
        let q = proptest::collection::vec(proptest::bool::ANY, x * y).prop_map({
            let (xu, yu) = (xu.clone(), yu.clone());
            move |bits| {
                let ts = yu.size().max(1);
                Relation::from_fn(&xu, &yu, move |i, j| bits[i * ts + j])
            }
        });
        let r = proptest::collection::vec(proptest::bool::ANY, y * z).prop_map({
            let (yu, zu) = (yu.clone(), zu.clone());
            move |bits| {
                let ts = zu.size().max(1);
                Relation::from_fn(&yu, &zu, move |i, j| bits[i * ts + j])
            }
        });
        let c = proptest::collection::vec(proptest::bool::ANY, x * z).prop_map(move |bits| {
            let ts = zu.size().max(1);
            Relation::from_fn(&xu, &zu, move |i, j| bits[i * ts + j])
        });
        (q, r, c)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn dedekind_bound((q, r, c) in chain()) {
        let lhs = q.compose(&r).unwrap().intersect(&c).unwrap();
        let left = q.intersect(&c.compose(&r.converse()).unwrap()).unwrap();
        let right = r.intersect(&q.converse().compose(&c).unwrap()).unwrap();
        let rhs = left.compose(&right).unwrap();
        prop_assert!(rhs.includes(&lhs).unwrap());
    }

    #[test]
    fn residuals_adjoin_composition((q, r, c) in chain()) {
        let below = c.left_residual(&r).unwrap();
        prop_assert!(c.includes(&below.compose(&r).unwrap()).unwrap());
        let fits = c.includes(&q.compose(&r).unwrap()).unwrap();
        prop_assert_eq!(fits, below.includes(&q).unwrap());

        let under = q.right_residual(&c).unwrap();
        prop_assert!(c.includes(&q.compose(&under).unwrap()).unwrap());
        prop_assert_eq!(
            c.includes(&q.compose(&r).unwrap()).unwrap(),
            under.includes(&r).unwrap()
        );
    }

    #[test]
    fn syq_agrees_with_oracle((r, s) in same_source()) {
        prop_assert_eq!(r.syq(&s).unwrap(), oracle_syq(&r, &s).unwrap());
    }

    #[test]
    fn vec_unvec_roundtrip(r in relation("X", "Y")) {
        let v = vec_rel(&r).unwrap();
        prop_assert!(v.is_vector());
        prop_assert_eq!(unvec(&v).unwrap(), r);
    }

    #[test]
    fn converse_and_complement_commute(r in relation("X", "Y")) {
        prop_assert_eq!(r.converse().negate(), r.negate().converse());
        prop_assert_eq!(r.converse().converse(), r);
    }
}
