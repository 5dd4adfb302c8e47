//! End-to-end acceptance checks, one test per criterion.  Each test prints
//! a single `acceptance N: pass|fail — ...` line (visible with
//! `--nocapture`); a `fail` line panics with the underlying error.

use std::panic::{catch_unwind, resume_unwind, UnwindSafe};
use std::process::{Command, Output};
use std::time::Instant;

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use relkit_cli::format::{parse_model, serialize};
use relkit_cli::term::parse as parse_term;
use relkit_core::images::{existential_image, inverse_image, power_relator};
use relkit_core::laws::law_index;
use relkit_core::oracle::{
    oracle_compose, oracle_exim, oracle_invariant_elements, oracle_left_residual, oracle_lub,
    oracle_membership, oracle_power_relator, oracle_right_residual, oracle_syq,
};
use relkit_core::powerset::membership;
use relkit_core::prodsum::{
    bot_point, fork, identity_point, join, kronecker, point_decode, relation_point,
    sum_power_iso, top_point, unvec, vec as vec_rel,
};
use relkit_core::samples::{
    image_sample, op_left_invertible, op_right_neutral, op_rotations, op_with_center,
};
use relkit_core::{boolalg, BinOp, Relation, Universe};

fn criterion(n: usize, what: &str, body: impl FnOnce() + UnwindSafe) {
    match catch_unwind(body) {
        Ok(()) => println!("acceptance {n}: pass — {what}"),
        Err(e) => {
            println!("acceptance {n}: fail — {what}");
            resume_unwind(e);
        }
    }
}

fn relkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_relkit"))
        .args(args)
        .env_remove("RELKIT_SEED")
        .output()
        .expect("binary runs")
}

fn sized(name: &str, n: usize, rng: &mut ChaCha8Rng) -> Universe {
    let fresh: u32 = rng.gen();
    let labels: Vec<String> = (0..n).map(|i| format!("e{i}")).collect();
    let refs: Vec<&str> = labels.iter().map(|s| s.as_str()).collect();
    Universe::atomic(&format!("{name}{fresh}"), &refs).expect("fresh labels")
}

fn random_relation(rng: &mut ChaCha8Rng, src: &Universe, tgt: &Universe) -> Relation {
    let density = [0.15, 0.35, 0.5, 0.65, 0.85][rng.gen_range(0..5)];
    let mut pairs = Vec::new();
    for i in 0..src.size() {
        for j in 0..tgt.size() {
            if rng.gen_bool(density) {
                pairs.push((i, j));
            }
        }
    }
    Relation::from_pairs(src, tgt, &pairs).expect("indices in range")
}

/// All relations between two tiny universes.
fn all_relations(src: &Universe, tgt: &Universe) -> Vec<Relation> {
    let cells = src.size() * tgt.size();
    let ts = tgt.size().max(1);
    (0..1usize << cells)
        .map(|mask| Relation::from_fn(src, tgt, move |i, j| mask >> (i * ts + j) & 1 == 1))
        .collect()
}

#[test]
fn criterion_1_full_catalog_passes_quickly() {
    criterion(
        1,
        "relkit check all runs every cataloged law with no failures in budget",
        || {
            let started = Instant::now();
            let out = relkit(&["check", "all", "--seed", "42"]);
            let elapsed = started.elapsed();
            assert!(out.status.success(), "check all must exit 0");
            assert!(
                elapsed.as_secs() < 60,
                "check all took {elapsed:?}, budget is one minute"
            );
            let stdout = String::from_utf8(out.stdout).expect("utf-8 report");
            let lines: Vec<&str> = stdout.lines().collect();
            let index = law_index();
            assert_eq!(
                lines.len(),
                index.len() + 1,
                "one line per law plus a summary"
            );
            assert_eq!(
                *lines.last().unwrap(),
                format!("checked {} laws: 0 failed", index.len())
            );
            for (line, (name, _, suite)) in lines.iter().zip(&index) {
                assert!(
                    line.starts_with("PASS "),
                    "law line must start with PASS: {line}"
                );
                assert!(
                    line.contains(&format!("{suite}/{name}")),
                    "line must carry the law id {suite}/{name}: {line}"
                );
                assert!(line.contains("seed=42"), "seed must be reported: {line}");
                let randomized: usize = line
                    .split("randomized=")
                    .nth(1)
                    .and_then(|s| s.split_whitespace().next())
                    .and_then(|s| s.parse().ok())
                    .expect("randomized count in line");
                assert!(randomized >= 500, "at least 500 random instances: {line}");
                let exhaustive: usize = line
                    .split("exhaustive=")
                    .nth(1)
                    .and_then(|s| s.split_whitespace().next())
                    .and_then(|s| s.parse().ok())
                    .expect("exhaustive count in line");
                assert!(exhaustive > 0, "an exhaustive small phase ran: {line}");
            }
        },
    );
}

#[test]
fn criterion_2_oracles_agree_bit_for_bit() {
    criterion(
        2,
        "fast paths equal the pointwise oracles, exhaustively small and randomized",
        || {
            let mut rng = ChaCha8Rng::seed_from_u64(2);
            let tiny: Vec<Universe> = (0..=2).map(|n| sized("T", n, &mut rng)).collect();
            for x in &tiny {
                for y in &tiny {
                    for r in all_relations(x, y) {
                        assert_eq!(existential_image(&r).unwrap(), oracle_exim(&r).unwrap());
                        assert_eq!(
                            inverse_image(&r).unwrap(),
                            oracle_exim(&r.converse()).unwrap()
                        );
                        assert_eq!(
                            power_relator(&r).unwrap(),
                            oracle_power_relator(&r).unwrap()
                        );
                        for s in all_relations(y, x) {
                            assert_eq!(
                                r.compose(&s).unwrap(),
                                oracle_compose(&r, &s).unwrap()
                            );
                        }
                        for s in all_relations(x, y) {
                            assert_eq!(r.syq(&s).unwrap(), oracle_syq(&r, &s).unwrap());
                            assert_eq!(
                                r.left_residual(&s).unwrap(),
                                oracle_left_residual(&r, &s).unwrap()
                            );
                            assert_eq!(
                                r.right_residual(&s).unwrap(),
                                oracle_right_residual(&r, &s).unwrap()
                            );
                        }
                    }
                }
            }
            for n in 0..=5 {
                let base = sized("B", n, &mut rng);
                assert_eq!(
                    membership(&base).unwrap().epsilon,
                    oracle_membership(&base).unwrap()
                );
            }
            for _ in 0..150 {
                let x = sized("X", rng.gen_range(0..=4), &mut rng);
                let y = sized("Y", rng.gen_range(0..=4), &mut rng);
                let z = sized("Z", rng.gen_range(0..=4), &mut rng);
                let r = random_relation(&mut rng, &x, &y);
                let s = random_relation(&mut rng, &y, &z);
                let c = random_relation(&mut rng, &x, &z);
                let t = random_relation(&mut rng, &x, &z);
                assert_eq!(r.compose(&s).unwrap(), oracle_compose(&r, &s).unwrap());
                assert_eq!(
                    c.left_residual(&s).unwrap(),
                    oracle_left_residual(&c, &s).unwrap()
                );
                assert_eq!(
                    r.right_residual(&c).unwrap(),
                    oracle_right_residual(&r, &c).unwrap()
                );
                assert_eq!(c.syq(&t).unwrap(), oracle_syq(&c, &t).unwrap());
                assert_eq!(existential_image(&r).unwrap(), oracle_exim(&r).unwrap());
                assert_eq!(
                    inverse_image(&r).unwrap(),
                    oracle_exim(&r.converse()).unwrap()
                );
                assert_eq!(
                    power_relator(&r).unwrap(),
                    oracle_power_relator(&r).unwrap()
                );
                let bundle = membership(&x).unwrap();
                let w = random_relation(&mut rng, &bundle.power, &y);
                assert_eq!(bundle.lub(&w).unwrap(), oracle_lub(&x, &w).unwrap());
            }
            for _ in 0..150 {
                let n = rng.gen_range(1..=4);
                let carrier = sized("C", n, &mut rng);
                let table: Vec<Vec<usize>> = (0..n)
                    .map(|_| (0..n).map(|_| rng.gen_range(0..n)).collect())
                    .collect();
                let op = BinOp::from_table(&carrier, &table).unwrap();
                assert_eq!(
                    op.invariant_elements().unwrap(),
                    oracle_invariant_elements(op.table()).unwrap()
                );
            }
        },
    );
}

#[test]
fn criterion_3_fixture_structures_check_out() {
    criterion(
        3,
        "the documented sample structures have their advertised features",
        || {
            // Membership machinery over four elements.
            let base = Universe::atomic("B", &["a", "b", "c", "d"]).unwrap();
            let bundle = membership(&base).unwrap();
            assert_eq!(bundle.sigma.pairs(), vec![(0, 1), (1, 2), (2, 4), (3, 8)]);
            assert_eq!(
                bundle.atoms().pairs(),
                vec![(1, 1), (2, 2), (4, 4), (8, 8)]
            );

            // Existential image of the sample relation.
            let r = image_sample();
            let theta = existential_image(&r).unwrap();
            assert!(theta.is_mapping());
            assert!(theta.get(0, 0));
            assert!(theta.get(1, 10));

            // The rotation group: one neutral, inverses swap the rotations.
            let rot = op_rotations();
            assert_eq!(rot.neutrals().unwrap().pairs(), vec![(0, 0)]);
            let neutral =
                Relation::from_pairs(rot.carrier(), &Universe::unit(), &[(0, 0)]).unwrap();
            let inverse = rot.right_inverse_map(&neutral).unwrap();
            assert_eq!(inverse.pairs(), vec![(0, 0), (1, 2), (2, 1)]);

            // Right neutrals only.
            let op = op_right_neutral();
            let rn: Vec<usize> = op.right_neutrals().unwrap().pairs().iter().map(|p| p.0).collect();
            assert_eq!(rn, vec![2, 4]);
            assert!(op.left_neutrals().unwrap().is_empty_relation());

            // Left-invertible elements.
            let op = op_left_invertible();
            let li: Vec<usize> = op
                .left_invertible_elements()
                .unwrap()
                .pairs()
                .iter()
                .map(|p| p.0)
                .collect();
            assert_eq!(li, vec![1, 5]);

            // Invariant elements of the non-commutative table.
            let op = op_with_center();
            assert!(!op.is_commutative().unwrap());
            let center: Vec<usize> =
                op.invariant_elements().unwrap().pairs().iter().map(|p| p.0).collect();
            assert_eq!(center, vec![0, 2]);

            // Lifted join of two singletons is their union.
            let alg = boolalg::lifted(&base).unwrap();
            assert_eq!(alg.join_op().unwrap().apply(1, 2), 3);
        },
    );
}

#[test]
fn criterion_4_pairing_equalities_hold_randomized() {
    criterion(
        4,
        "fork/join composition and Kronecker multiplicativity on 1000 random instances",
        || {
            let mut rng = ChaCha8Rng::seed_from_u64(4);
            for _ in 0..1000 {
                let x = sized("X", rng.gen_range(0..=3), &mut rng);
                let y = sized("Y", rng.gen_range(0..=3), &mut rng);
                let z = sized("Z", rng.gen_range(1..=3), &mut rng);
                let w = sized("W", rng.gen_range(0..=3), &mut rng);
                // fork(R,S) ∘ join(P,Q) = R∘P ∩ S∘Q.
                let r = random_relation(&mut rng, &z, &x);
                let s = random_relation(&mut rng, &z, &y);
                let p = random_relation(&mut rng, &x, &w);
                let q = random_relation(&mut rng, &y, &w);
                let lhs = fork(&r, &s).unwrap().compose(&join(&p, &q).unwrap()).unwrap();
                let rhs = r
                    .compose(&p)
                    .unwrap()
                    .intersect(&s.compose(&q).unwrap())
                    .unwrap();
                assert_eq!(lhs, rhs, "fork/join composition");

                // kron(A,B) ∘ kron(C,D) = kron(A∘C, B∘D).
                let a = random_relation(&mut rng, &x, &y);
                let b = random_relation(&mut rng, &z, &w);
                let cc = random_relation(&mut rng, &y, &z);
                let d = random_relation(&mut rng, &w, &x);
                let lhs = kronecker(&a, &b)
                    .unwrap()
                    .compose(&kronecker(&cc, &d).unwrap())
                    .unwrap();
                let rhs = kronecker(&a.compose(&cc).unwrap(), &b.compose(&d).unwrap()).unwrap();
                assert_eq!(lhs, rhs, "Kronecker multiplicativity");
            }
        },
    );
}

#[test]
fn criterion_5_roundtrips_are_exact() {
    criterion(
        5,
        "vec/unvec, point encode/decode, file and term round-trips",
        || {
            let mut rng = ChaCha8Rng::seed_from_u64(5);
            for _ in 0..200 {
                let x = sized("X", rng.gen_range(0..=4), &mut rng);
                let y = sized("Y", rng.gen_range(0..=4), &mut rng);
                let r = random_relation(&mut rng, &x, &y);
                let v = vec_rel(&r).unwrap();
                assert_eq!(unvec(&v).unwrap(), r, "unvec after vec");
                assert_eq!(vec_rel(&unvec(&v).unwrap()).unwrap(), v, "vec after unvec");
            }

            let x = Universe::atomic("X", &["a", "b", "c"]).unwrap();
            let y = Universe::atomic("Y", &["u", "v"]).unwrap();
            for encoded in [
                identity_point(&x).unwrap(),
                bot_point(&x, &y).unwrap(),
                top_point(&x, &y).unwrap(),
            ] {
                assert!(encoded.is_point());
                assert_eq!(
                    relation_point(&point_decode(&encoded).unwrap()).unwrap(),
                    encoded
                );
            }
            assert_eq!(
                point_decode(&identity_point(&x).unwrap()).unwrap(),
                Relation::identity(&x)
            );
            for _ in 0..50 {
                let x = sized("X", rng.gen_range(0..=3), &mut rng);
                let y = sized("Y", rng.gen_range(0..=3), &mut rng);
                let r = random_relation(&mut rng, &x, &y);
                let p = relation_point(&r).unwrap();
                assert!(p.is_point());
                assert_eq!(point_decode(&p).unwrap(), r, "decode after encode");
            }

            let path =
                std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden/model.rk");
            let text = std::fs::read_to_string(path).unwrap();
            assert_eq!(
                serialize(&parse_model(&text).unwrap()),
                text,
                "canonical model file round-trips byte for byte"
            );

            for expr in [
                "R",
                "~(R | S^) & T",
                "syq(eps(X), R * S) \\ (T / U)",
                "fork(R, S) * join(P, Q)",
                "I(X) * TOP(X, Y)",
            ] {
                let t = parse_term(expr).unwrap();
                let printed = t.to_string();
                assert_eq!(parse_term(&printed).unwrap(), t, "term `{expr}`");
            }
        },
    );
}

#[test]
fn criterion_6_sum_powerset_isomorphism() {
    criterion(
        6,
        "the powerset of a sum is order-isomorphic to the product of powersets",
        || {
            for (nx, ny) in [(1, 1), (2, 1), (2, 2)] {
                let xl: Vec<String> = (0..nx).map(|i| format!("x{i}")).collect();
                let yl: Vec<String> = (0..ny).map(|i| format!("y{i}")).collect();
                let x = Universe::atomic(
                    "X",
                    &xl.iter().map(|s| s.as_str()).collect::<Vec<_>>(),
                )
                .unwrap();
                let y = Universe::atomic(
                    "Y",
                    &yl.iter().map(|s| s.as_str()).collect::<Vec<_>>(),
                )
                .unwrap();
                let iso = sum_power_iso(&x, &y).unwrap();
                let phi = &iso.phi;
                assert!(
                    phi.is_mapping() && phi.is_injective() && phi.is_surjective(),
                    "phi must be a bijective mapping for sizes ({nx},{ny})"
                );
                let omega_sum = membership(&iso.sum.universe).unwrap().omega.clone();
                let omega_x = membership(&x).unwrap().omega.clone();
                let omega_y = membership(&y).unwrap().omega.clone();
                let omega_prod = kronecker(&omega_x, &omega_y).unwrap();
                assert_eq!(
                    omega_sum.compose(phi).unwrap(),
                    phi.compose(&omega_prod).unwrap(),
                    "phi must transport the inclusion order for sizes ({nx},{ny})"
                );
                assert_eq!(
                    omega_sum,
                    phi.compose(&omega_prod).unwrap().compose(&phi.converse()).unwrap(),
                    "conjugating by phi recovers the sum order for sizes ({nx},{ny})"
                );
            }
        },
    );
}

#[test]
fn criterion_7_check_output_is_reproducible() {
    criterion(
        7,
        "two seeded runs of relkit check all yield identical reports",
        || {
            let first = relkit(&["check", "all", "--seed", "42"]);
            let second = relkit(&["check", "all", "--seed", "42"]);
            assert!(first.status.success() && second.status.success());
            assert!(!first.stdout.is_empty());
            assert_eq!(
                first.stdout, second.stdout,
                "report bytes must match between runs"
            );
        },
    );
}
