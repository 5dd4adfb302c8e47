//! Evaluation of terms against a model.
//!
//! Identifiers resolve to the declarations of a [`Model`]: relation names
//! evaluate to their relation, operation names to their table relation
//! `(X×X) → X`, and universe names are only legal as arguments of the
//! universe-taking functions below.
//!
//! Built-in functions:
//!
//! ```text
//! I(X)      identity on X          TOP(X, Y)  universal relation
//! point(X, a)  the element a       BOT(X, Y)  empty relation
//! eps(X)    membership X → P(X)    syq(R, S)  symmetric quotient
//! omega(X)  inclusion on P(X)      exim(R)    existential image
//! sigma(X)  singleton injection    imim(R)    inverse image
//! atoms(X)  atom partial identity  zeta(R)    intersection-image
//! N(X)      lifted complement      kron(R, S) parallel product
//! meet(X)   lifted meet table      fork(R, S) pairing Z → X×Y
//! joinop(X) lifted join table      join(R, S) co-pairing X×Y → Z
//! swap(X, Y)       transposition X×Y → Y×X
//! assoc(X, Y, Z)   rebracketing (X×Y)×Z → X×(Y×Z)
//! vec(R)    column form X×Y → 1    unvec(R)   inverse of vec
//! relation_point(R)  R as a point of P(X×Y)
//! identity_point(X)  bot_point(X, Y)  top_point(X, Y)
//! decode(p)  relation encoded by a point of P(X×Y)
//! ```

use std::fmt;

use relkit_core::images::{existential_image, image_bundle, inverse_image};
use relkit_core::powerset::membership;
use relkit_core::prodsum::{
    assoc, bot_point, fork, identity_point, join, kronecker, point_decode, relation_point, swap,
    top_point, unvec, vec as vec_rel,
};
use relkit_core::{boolalg, Relation, Universe};

use crate::format::{Item, Model};
use crate::term::{Term, TermKind};

/// Evaluation failure with the 1-based position of the offending subterm.
#[derive(Debug, Clone)]
pub struct EvalError {
    pub line: usize,
    pub col: usize,
    pub msg: String,
}

impl fmt::Display for EvalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.col, self.msg)
    }
}

impl std::error::Error for EvalError {}

fn fail(t: &Term, msg: impl Into<String>) -> EvalError {
    EvalError {
        line: t.line,
        col: t.col,
        msg: msg.into(),
    }
}

fn core<T>(t: &Term, r: relkit_core::Result<T>) -> Result<T, EvalError> {
    r.map_err(|e| fail(t, e.to_string()))
}

/// Evaluate `t` against the declarations of `model`.
pub fn eval(t: &Term, model: &Model) -> Result<Relation, EvalError> {
    match &t.kind {
        TermKind::Ident(name) => ident(t, model, name),
        TermKind::Call(name, args) => call(t, model, name, args),
        TermKind::Complement(a) => Ok(eval(a, model)?.negate()),
        TermKind::Converse(a) => Ok(eval(a, model)?.converse()),
        TermKind::Compose(a, b) => {
            let (ra, rb) = (eval(a, model)?, eval(b, model)?);
            core(t, ra.compose(&rb))
        }
        TermKind::Intersect(a, b) => {
            let (ra, rb) = (eval(a, model)?, eval(b, model)?);
            core(t, ra.intersect(&rb))
        }
        TermKind::Union(a, b) => {
            let (ra, rb) = (eval(a, model)?, eval(b, model)?);
            core(t, ra.union(&rb))
        }
        TermKind::ResidualRight(a, c) => {
            let (ra, rc) = (eval(a, model)?, eval(c, model)?);
            core(t, ra.right_residual(&rc))
        }
        TermKind::ResidualLeft(c, b) => {
            let (rc, rb) = (eval(c, model)?, eval(b, model)?);
            core(t, rc.left_residual(&rb))
        }
    }
}

fn ident(t: &Term, model: &Model, name: &str) -> Result<Relation, EvalError> {
    for item in &model.items {
        match item {
            Item::Relation(n, r) if n == name => return Ok(r.clone()),
            Item::BinOp(n, op) if n == name => return Ok(op.table().clone()),
            Item::Universe(n, _) if n == name => {
                return Err(fail(
                    t,
                    format!("`{name}` names a universe; use it inside a function such as I({name})"),
                ))
            }
            _ => {}
        }
    }
    Err(fail(t, format!("unbound identifier `{name}`")))
}

/// Argument that must be a declared universe name.
fn universe_arg(model: &Model, arg: &Term) -> Result<Universe, EvalError> {
    let name = match &arg.kind {
        TermKind::Ident(name) => name,
        _ => return Err(fail(arg, "expected a universe name")),
    };
    match model.universe(name) {
        Some(u) => Ok(u.clone()),
        None if model.relation(name).is_some() || model.binop(name).is_some() => Err(fail(
            arg,
            format!("expected a universe name, `{name}` names a relation"),
        )),
        None => Err(fail(arg, format!("unbound identifier `{name}`"))),
    }
}

fn arity<'a>(
    t: &Term,
    name: &str,
    args: &'a [Term],
    n: usize,
) -> Result<&'a [Term], EvalError> {
    if args.len() == n {
        Ok(args)
    } else {
        let plural = if n == 1 { "argument" } else { "arguments" };
        Err(fail(
            t,
            format!("`{name}` takes {n} {plural}, found {}", args.len()),
        ))
    }
}

fn call(t: &Term, model: &Model, name: &str, args: &[Term]) -> Result<Relation, EvalError> {
    match name {
        "I" => {
            let a = arity(t, name, args, 1)?;
            Ok(Relation::identity(&universe_arg(model, &a[0])?))
        }
        "TOP" | "BOT" => {
            let a = arity(t, name, args, 2)?;
            let x = universe_arg(model, &a[0])?;
            let y = universe_arg(model, &a[1])?;
            Ok(if name == "TOP" {
                Relation::top(&x, &y)
            } else {
                Relation::bottom(&x, &y)
            })
        }
        "point" => {
            let a = arity(t, name, args, 2)?;
            let x = universe_arg(model, &a[0])?;
            let label = match &a[1].kind {
                TermKind::Ident(l) => l,
                _ => return Err(fail(&a[1], "expected an element label")),
            };
            let i = x.index_of_label(label).ok_or_else(|| {
                fail(
                    &a[1],
                    format!("`{label}` is not an element of `{}`", x.name()),
                )
            })?;
            core(t, Relation::from_pairs(&x, &Universe::unit(), &[(i, 0)]))
        }
        "eps" | "omega" | "sigma" | "atoms" => {
            let a = arity(t, name, args, 1)?;
            let u = universe_arg(model, &a[0])?;
            let bundle = core(t, membership(&u))?;
            Ok(match name {
                "eps" => bundle.epsilon.clone(),
                "omega" => bundle.omega.clone(),
                "sigma" => bundle.sigma.clone(),
                _ => bundle.atoms(),
            })
        }
        "N" | "meet" | "joinop" => {
            let a = arity(t, name, args, 1)?;
            let u = universe_arg(model, &a[0])?;
            let alg = core(t, boolalg::lifted(&u))?;
            Ok(match name {
                "N" => alg.n,
                "meet" => alg.meet,
                _ => alg.join,
            })
        }
        "exim" | "imim" | "zeta" | "vec" | "unvec" | "relation_point" | "decode" => {
            let a = arity(t, name, args, 1)?;
            let r = eval(&a[0], model)?;
            core(
                t,
                match name {
                    "exim" => existential_image(&r),
                    "imim" => inverse_image(&r),
                    "zeta" => image_bundle(&r).map(|b| b.zeta),
                    "vec" => vec_rel(&r),
                    "unvec" => unvec(&r),
                    "relation_point" => relation_point(&r),
                    _ => point_decode(&r),
                },
            )
        }
        "syq" | "kron" | "fork" | "join" => {
            let a = arity(t, name, args, 2)?;
            let r = eval(&a[0], model)?;
            let s = eval(&a[1], model)?;
            core(
                t,
                match name {
                    "syq" => r.syq(&s),
                    "kron" => kronecker(&r, &s),
                    "fork" => fork(&r, &s),
                    _ => join(&r, &s),
                },
            )
        }
        "swap" | "top_point" | "bot_point" => {
            let a = arity(t, name, args, 2)?;
            let x = universe_arg(model, &a[0])?;
            let y = universe_arg(model, &a[1])?;
            core(
                t,
                match name {
                    "swap" => swap(&x, &y),
                    "top_point" => top_point(&x, &y),
                    _ => bot_point(&x, &y),
                },
            )
        }
        "identity_point" => {
            let a = arity(t, name, args, 1)?;
            let x = universe_arg(model, &a[0])?;
            core(t, identity_point(&x))
        }
        "assoc" => {
            let a = arity(t, name, args, 3)?;
            let x = universe_arg(model, &a[0])?;
            let y = universe_arg(model, &a[1])?;
            let z = universe_arg(model, &a[2])?;
            core(t, assoc(&x, &y, &z))
        }
        other => Err(fail(t, format!("unknown function `{other}`"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::format::parse_model;
    use crate::term::parse;

    fn model() -> Model {
        parse_model(
            "universe X = {a, b}\nuniverse Y = {u, v, w}\n\nrelation R : X -> Y {\n  a: {u, v}\n  b: {w}\n}\n\nbinop F : X {\n  row a: [a, b]\n  row b: [b, a]\n}\n",
        )
        .unwrap()
    }

    fn run(expr: &str) -> Result<Relation, EvalError> {
        eval(&parse(expr).unwrap(), &model())
    }

    #[test]
    fn identity_is_neutral() {
        let r = run("R").unwrap();
        assert_eq!(run("I(X) * R").unwrap(), r);
        assert_eq!(run("R * I(Y)").unwrap(), r);
    }

    #[test]
    fn residual_operators_match_methods() {
        let r = run("R").unwrap();
        assert_eq!(run("R \\ R").unwrap(), r.right_residual(&r).unwrap());
        assert_eq!(run("R / R").unwrap(), r.left_residual(&r).unwrap());
        assert_eq!(run("syq(R, R)").unwrap(), r.syq(&r).unwrap());
    }

    #[test]
    fn operation_names_evaluate_to_tables() {
        let f = run("F").unwrap();
        assert!(f.is_mapping());
        assert_eq!(f.src().size(), 4);
    }

    #[test]
    fn points_select_rows() {
        let p = run("point(X, b)").unwrap();
        assert!(p.is_point());
        let row = run("point(X, b)^ * R").unwrap();
        assert_eq!(row.pairs(), vec![(0, 2)]);
    }

    #[test]
    fn unbound_and_misused_names_fail() {
        let err = run("Q * R").unwrap_err();
        assert!(err.msg.contains("unbound identifier `Q`"), "{err}");
        let err = run("X").unwrap_err();
        assert!(err.msg.contains("names a universe"), "{err}");
        let err = run("I(R)").unwrap_err();
        assert!(err.msg.contains("expected a universe"), "{err}");
        let err = run("syq(R)").unwrap_err();
        assert!(err.msg.contains("takes 2 arguments"), "{err}");
        let err = run("frobnicate(R)").unwrap_err();
        assert!(err.msg.contains("unknown function"), "{err}");
    }

    #[test]
    fn type_errors_carry_positions() {
        let err = run("R * R").unwrap_err();
        assert_eq!((err.line, err.col), (1, 1));
        assert!(err.msg.contains('Y') && err.msg.contains('X'), "{err}");
    }

    #[test]
    fn point_constructors_decode() {
        let r = run("R").unwrap();
        assert_eq!(run("decode(relation_point(R))").unwrap(), r);
        assert!(run("relation_point(R)").unwrap().is_point());
        let i = run("decode(identity_point(X))").unwrap();
        assert_eq!(i, Relation::identity(run("point(X, a)").unwrap().src()));
    }
}
