//! The runnable law catalog.
//!
//! Every algebraic fact the engine relies on is expressed here as a named,
//! seeded check: a small exhaustive pass over universes of size at most two
//! (at most one for laws with four or more free relations), followed by a
//! randomized pass.  Reports are deterministic for a fixed seed.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::binop::{section_maps, BinOp};
use crate::boolalg::{lifted, point_to_subset, subset_of_point};
use crate::images::{existential_image, image_bundle, inverse_image, power_relator};
use crate::oracle::{
    oracle_compose, oracle_exim, oracle_invariant_elements, oracle_left_residual, oracle_lub,
    oracle_membership, oracle_power_relator, oracle_right_residual, oracle_syq,
};
use crate::powerset::{membership, quotient_membership};
use crate::prodsum::{
    addition_theorem_check, assoc, bot_point, fork, identity_point, join, kronecker, point_decode,
    product, relation_point, sum, sum_power_iso, swap, top_point, transposition_point_map, unvec,
    vec as vec_rel,
};
use crate::relation::Relation;
use crate::universe::Universe;

/// Thematic grouping of the laws, selectable from the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Core,
    Syq,
    Powerset,
    Images,
    Prodsum,
    Binop,
    Boolalg,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::Core,
        Suite::Syq,
        Suite::Powerset,
        Suite::Images,
        Suite::Prodsum,
        Suite::Binop,
        Suite::Boolalg,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Core => "core",
            Suite::Syq => "syq",
            Suite::Powerset => "powerset",
            Suite::Images => "images",
            Suite::Prodsum => "prodsum",
            Suite::Binop => "binop",
            Suite::Boolalg => "boolalg",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Which laws to run: one suite, or everything.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Selection {
    All,
    Suite(Suite),
}

impl Selection {
    pub fn includes(self, suite: Suite) -> bool {
        match self {
            Selection::All => true,
            Selection::Suite(s) => s == suite,
        }
    }
}

impl FromStr for Selection {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "all" => Ok(Selection::All),
            _ => Suite::ALL
                .iter()
                .find(|suite| suite.name() == s)
                .map(|&suite| Selection::Suite(suite))
                .ok_or_else(|| {
                    format!(
                        "unknown suite `{s}` (expected all, core, syq, powerset, images, prodsum, binop or boolalg)"
                    )
                }),
        }
    }
}

/// Knobs for a law run.
#[derive(Clone, Debug)]
pub struct Config {
    pub seed: u64,
    /// Upper bound on generated universe sizes (laws may restrict further).
    pub max_size: usize,
    /// Randomized instances per law.
    pub instances: usize,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            seed: 42,
            max_size: 5,
            instances: 500,
        }
    }
}

/// Outcome of one law under one configuration.
#[derive(Clone, Debug)]
pub struct LawReport {
    pub law: &'static str,
    pub statement: &'static str,
    pub suite: Suite,
    pub seed: u64,
    pub exhaustive: usize,
    pub randomized: usize,
    pub passed: bool,
    pub counterexample: Option<String>,
}

impl LawReport {
    /// One-line summary, stable for a fixed seed.
    pub fn line(&self) -> String {
        format!(
            "{} {}/{}  {}  [exhaustive={} randomized={} seed={}]",
            if self.passed { "PASS" } else { "FAIL" },
            self.suite,
            self.law,
            self.statement,
            self.exhaustive,
            self.randomized,
            self.seed
        )
    }
}

// Size caps by theme: plain relations, powerset bases, lifted-algebra bases.
const GEN: usize = 5;
const POW: usize = 4;
const LIFT: usize = 3;

struct Ctx {
    rng: ChaCha8Rng,
    max_size: usize,
    target: usize,
    exhaustive: usize,
    randomized: usize,
    random_phase: bool,
    failure: Option<String>,
    uid: usize,
}

impl Ctx {
    fn new(cfg: &Config, law: &str) -> Ctx {
        Ctx {
            rng: ChaCha8Rng::seed_from_u64(
                cfg.seed.wrapping_mul(0x9E37_79B9_7F4A_7C15) ^ fnv(law),
            ),
            max_size: cfg.max_size,
            target: cfg.instances,
            exhaustive: 0,
            randomized: 0,
            random_phase: false,
            failure: None,
            uid: 0,
        }
    }

    fn check(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        if self.random_phase {
            self.randomized += 1;
        } else {
            self.exhaustive += 1;
        }
        if !ok && self.failure.is_none() {
            self.failure = Some(detail());
        }
    }

    /// Switches to the randomized phase; true while more instances are due.
    fn more(&mut self) -> bool {
        self.random_phase = true;
        self.randomized < self.target
    }

    fn size(&mut self, cap: usize) -> usize {
        self.rng.gen_range(0..=cap.min(self.max_size))
    }

    fn size_pos(&mut self, cap: usize) -> usize {
        self.rng.gen_range(1..=cap.min(self.max_size).max(1))
    }

    fn fresh(&mut self, n: usize) -> Universe {
        self.uid += 1;
        let labels: Vec<String> = (0..n).map(|i| ((b'a' + i as u8) as char).to_string()).collect();
        let refs: Vec<&str> = labels.iter().map(|s| s.as_str()).collect();
        Universe::atomic(&format!("V{}", self.uid), &refs).expect("fresh labels are distinct")
    }

    fn universe(&mut self, cap: usize) -> Universe {
        let n = self.size(cap);
        self.fresh(n)
    }

    fn universe_pos(&mut self, cap: usize) -> Universe {
        let n = self.size_pos(cap);
        self.fresh(n)
    }

    fn relation(&mut self, s: &Universe, t: &Universe) -> Relation {
        let d = [0.1, 0.25, 0.5, 0.75, 0.9][self.rng.gen_range(0..5)];
        let mut pairs = Vec::new();
        for x in 0..s.size() {
            for y in 0..t.size() {
                if self.rng.gen_bool(d) {
                    pairs.push((x, y));
                }
            }
        }
        Relation::from_pairs(s, t, &pairs).expect("generated indices are in range")
    }

    /// Total function; `t` must be inhabited unless `s` is empty.
    fn mapping(&mut self, s: &Universe, t: &Universe) -> Relation {
        let pairs: Vec<(usize, usize)> = (0..s.size())
            .map(|x| (x, self.rng.gen_range(0..t.size())))
            .collect();
        Relation::from_pairs(s, t, &pairs).expect("generated indices are in range")
    }

    /// Univalent relation: each row empty or a single hit.
    fn partial_map(&mut self, s: &Universe, t: &Universe) -> Relation {
        let mut pairs = Vec::new();
        for x in 0..s.size() {
            if t.size() > 0 && self.rng.gen_bool(0.7) {
                pairs.push((x, self.rng.gen_range(0..t.size())));
            }
        }
        Relation::from_pairs(s, t, &pairs).expect("generated indices are in range")
    }

    /// A surjective mapping onto a fresh target no larger than `s`.
    fn surjection_from(&mut self, s: &Universe) -> (Universe, Relation) {
        let tn = if s.size() == 0 {
            0
        } else {
            self.rng.gen_range(1..=s.size())
        };
        let t = self.fresh(tn);
        let mut sources: Vec<usize> = (0..s.size()).collect();
        sources.shuffle(&mut self.rng);
        let mut pairs = Vec::new();
        for (k, &x) in sources.iter().enumerate() {
            let y = if k < tn { k } else { self.rng.gen_range(0..tn) };
            pairs.push((x, y));
        }
        (t.clone(), Relation::from_pairs(s, &t, &pairs).unwrap())
    }

    fn point(&mut self, u: &Universe) -> Relation {
        let idx = self.rng.gen_range(0..u.size());
        Relation::from_pairs(u, &Universe::unit(), &[(idx, 0)]).unwrap()
    }

    fn equivalence(&mut self, u: &Universe) -> Relation {
        let n = u.size();
        let class: Vec<usize> = (0..n).map(|_| self.rng.gen_range(0..n.max(1))).collect();
        Relation::from_fn(u, u, |i, j| class[i] == class[j])
    }

    /// Operation tables biased toward interesting structure: plain random,
    /// with a forced right neutral, with a forced two-sided neutral, or a
    /// cyclic group.
    fn binop_variant(&mut self, cap: usize) -> BinOp {
        let n = self.size_pos(cap);
        let u = self.fresh(n);
        let mode = self.rng.gen_range(0..4);
        let mut table: Vec<Vec<usize>> = (0..n)
            .map(|x| {
                (0..n)
                    .map(|y| {
                        if mode == 3 {
                            (x + y) % n
                        } else {
                            self.rng.gen_range(0..n)
                        }
                    })
                    .collect()
            })
            .collect();
        if mode == 1 || mode == 2 {
            let e = self.rng.gen_range(0..n);
            for (x, row) in table.iter_mut().enumerate() {
                row[e] = x;
            }
            if mode == 2 {
                for (y, val) in table[e].iter_mut().enumerate() {
                    *val = y;
                }
            }
        }
        BinOp::from_table(&u, &table).unwrap()
    }
}

fn fnv(s: &str) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in s.bytes() {
        h ^= b as u64;
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    h
}

// Short names for the operations used in law bodies.  Type errors inside a
// law are bugs in the law, so these unwrap.
fn c(a: &Relation, b: &Relation) -> Relation {
    a.compose(b).unwrap()
}
fn meet(a: &Relation, b: &Relation) -> Relation {
    a.intersect(b).unwrap()
}
fn ju(a: &Relation, b: &Relation) -> Relation {
    a.union(b).unwrap()
}
/// `a ⊑ b`.
fn leq(a: &Relation, b: &Relation) -> bool {
    b.includes(a).unwrap()
}
fn lres(cr: &Relation, b: &Relation) -> Relation {
    cr.left_residual(b).unwrap()
}
fn rres(a: &Relation, cr: &Relation) -> Relation {
    a.right_residual(cr).unwrap()
}
fn syq(a: &Relation, b: &Relation) -> Relation {
    a.syq(b).unwrap()
}
fn id(u: &Universe) -> Relation {
    Relation::identity(u)
}
fn top(u: &Universe, v: &Universe) -> Relation {
    Relation::top(u, v)
}
fn unit_top(u: &Universe) -> Relation {
    Relation::top(u, &Universe::unit())
}

fn cx(parts: &[(&str, &Relation)]) -> String {
    let mut s = String::new();
    for (name, r) in parts {
        s.push_str(&format!(
            "{} : {} -> {}\n{}",
            name,
            r.src().name(),
            r.tgt().name(),
            r
        ));
    }
    s
}

fn tiny() -> Vec<Universe> {
    (0..=2usize)
        .map(|n| {
            let labels: Vec<String> =
                (0..n).map(|i| ((b'a' + i as u8) as char).to_string()).collect();
            let refs: Vec<&str> = labels.iter().map(|s| s.as_str()).collect();
            Universe::atomic(&format!("T{n}"), &refs).unwrap()
        })
        .collect()
}

fn tiny01() -> Vec<Universe> {
    tiny().into_iter().take(2).collect()
}

fn rels(s: &Universe, t: &Universe) -> Vec<Relation> {
    let cells = s.size() * t.size();
    let ts = t.size().max(1);
    (0..1u32 << cells)
        .map(|mask| {
            let pairs: Vec<(usize, usize)> = (0..cells)
                .filter(|&cell| mask >> cell & 1 == 1)
                .map(|cell| (cell / ts, cell % ts))
                .collect();
            Relation::from_pairs(s, t, &pairs).unwrap()
        })
        .collect()
}

fn tiny_ops() -> Vec<BinOp> {
    let mut out = Vec::new();
    for u in tiny() {
        let n = u.size();
        let total: u32 = (n as u32).checked_pow((n * n) as u32).unwrap_or(1).max(1);
        for code in 0..total {
            let mut rest = code as usize;
            let table: Vec<Vec<usize>> = (0..n)
                .map(|_| {
                    (0..n)
                        .map(|_| {
                            let v = rest % n;
                            rest /= n;
                            v
                        })
                        .collect()
                })
                .collect();
            out.push(BinOp::from_table(&u, &table).unwrap());
        }
    }
    out
}

type Check3 = fn(&mut Ctx, &Relation, &Relation, &Relation);

/// All `R : X→Y`, `S : Y→Z`, `Q : X→Z` over universes of size ≤ 2.
fn ex_chain3(ctx: &mut Ctx, f: Check3) {
    for x in &tiny() {
        for y in &tiny() {
            for z in &tiny() {
                for r in &rels(x, y) {
                    for s in &rels(y, z) {
                        for q in &rels(x, z) {
                            f(ctx, r, s, q);
                        }
                    }
                }
            }
        }
    }
}

pub struct Law {
    pub name: &'static str,
    pub statement: &'static str,
    pub suite: Suite,
    run: Box<dyn Fn(&mut Ctx)>,
}

fn law(
    out: &mut Vec<Law>,
    suite: Suite,
    name: &'static str,
    statement: &'static str,
    run: impl Fn(&mut Ctx) + 'static,
) {
    out.push(Law {
        name,
        statement,
        suite,
        run: Box::new(run),
    });
}

/// Name, statement and suite of every law, in run order.
pub fn law_index() -> Vec<(&'static str, &'static str, Suite)> {
    catalog()
        .iter()
        .map(|l| (l.name, l.statement, l.suite))
        .collect()
}

/// Run the selected suites under `cfg`.
pub fn run_laws(selection: Selection, cfg: &Config) -> Vec<LawReport> {
    catalog()
        .iter()
        .filter(|l| selection.includes(l.suite))
        .map(|l| {
            let mut ctx = Ctx::new(cfg, l.name);
            (l.run)(&mut ctx);
            LawReport {
                law: l.name,
                statement: l.statement,
                suite: l.suite,
                seed: cfg.seed,
                exhaustive: ctx.exhaustive,
                randomized: ctx.randomized,
                passed: ctx.failure.is_none(),
                counterexample: ctx.failure,
            }
        })
        .collect()
}

fn catalog() -> Vec<Law> {
    let mut v = Vec::new();
    core_laws(&mut v);
    syq_laws(&mut v);
    powerset_laws(&mut v);
    images_laws(&mut v);
    prodsum_laws(&mut v);
    binop_laws(&mut v);
    boolalg_laws(&mut v);
    v
}

fn core_laws(v: &mut Vec<Law>) {
    law(v, Suite::Core, "compose-oracle", "R*S == pointwise composition", |ctx| {
        let inst: fn(&mut Ctx, &Relation, &Relation) = |ctx, r, s| {
            ctx.check(c(r, s) == oracle_compose(r, s).unwrap(), || {
                cx(&[("R", r), ("S", s)])
            });
        };
        for x in &tiny() {
            for y in &tiny() {
                for z in &tiny() {
                    for r in &rels(x, y) {
                        for s in &rels(y, z) {
                            inst(ctx, r, s);
                        }
                    }
                }
            }
        }
        while ctx.more() {
            let (x, y, z) = (ctx.universe(GEN), ctx.universe(GEN), ctx.universe(GEN));
            let (r, s) = (ctx.relation(&x, &y), ctx.relation(&y, &z));
            inst(ctx, &r, &s);
        }
    });

    law(
        v,
        Suite::Core,
        "converse-involution",
        "R^^ == R; (R*S)^ == S^*R^; (~R)^ == ~(R^)",
        |ctx| {
            let inst: fn(&mut Ctx, &Relation, &Relation) = |ctx, r, s| {
                let ok = r.converse().converse() == *r
                    && c(r, s).converse() == c(&s.converse(), &r.converse())
                    && r.negate().converse() == r.converse().negate();
                ctx.check(ok, || cx(&[("R", r), ("S", s)]));
            };
            for x in &tiny() {
                for y in &tiny() {
                    for z in &tiny() {
                        for r in &rels(x, y) {
                            for s in &rels(y, z) {
                                inst(ctx, r, s);
                            }
                        }
                    }
                }
            }
            while ctx.more() {
                let (x, y, z) = (ctx.universe(GEN), ctx.universe(GEN), ctx.universe(GEN));
                let (r, s) = (ctx.relation(&x, &y), ctx.relation(&y, &z));
                inst(ctx, &r, &s);
            }
        },
    );

    law(
        v,
        Suite::Core,
        "boolean-lattice",
        "~(R|S) == ~R&~S; ~~R == R; R & (R|S) == R; R | ~R == T",
        |ctx| {
            let inst: fn(&mut Ctx, &Relation, &Relation) = |ctx, r, s| {
                let t = top(r.src(), r.tgt());
                let ok = ju(r, s).negate() == meet(&r.negate(), &s.negate())
                    && meet(r, s).negate() == ju(&r.negate(), &s.negate())
                    && r.negate().negate() == *r
                    && meet(r, &ju(r, s)) == *r
                    && ju(r, &meet(r, s)) == *r
                    && ju(r, &r.negate()) == t
                    && meet(r, &r.negate()).is_empty_relation();
                ctx.check(ok, || cx(&[("R", r), ("S", s)]));
            };
            for x in &tiny() {
                for y in &tiny() {
                    for r in &rels(x, y) {
                        for s in &rels(x, y) {
                            inst(ctx, r, s);
                        }
                    }
                }
            }
            while ctx.more() {
                let (x, y) = (ctx.universe(GEN), ctx.universe(GEN));
                let (r, s) = (ctx.relation(&x, &y), ctx.relation(&x, &y));
                inst(ctx, &r, &s);
            }
        },
    );

    law(
        v,
        Suite::Core,
        "dedekind-rule",
        "R*S & Q <= (R & Q*S^) * (S & R^*Q)",
        |ctx| {
            let inst: Check3 = |ctx, r, s, q| {
                let lhs = meet(&c(r, s), q);
                let rhs = c(&meet(r, &c(q, &s.converse())), &meet(s, &c(&r.converse(), q)));
                ctx.check(leq(&lhs, &rhs), || cx(&[("R", r), ("S", s), ("Q", q)]));
            };
            ex_chain3(ctx, inst);
            while ctx.more() {
                let (x, y, z) = (ctx.universe(GEN), ctx.universe(GEN), ctx.universe(GEN));
                let (r, s, q) = (
                    ctx.relation(&x, &y),
                    ctx.relation(&y, &z),
                    ctx.relation(&x, &z),
                );
                inst(ctx, &r, &s, &q);
            }
        },
    );

    law(
        v,
        Suite::Core,
        "schroeder-equivalences",
        "A*B <= C  <->  A^*~C <= ~B  <->  ~C*B^ <= ~A",
        |ctx| {
            let inst: Check3 = |ctx, a, b, cc| {
                let p1 = leq(&c(a, b), cc);
                let p2 = leq(&c(&a.converse(), &cc.negate()), &b.negate());
                let p3 = leq(&c(&cc.negate(), &b.converse()), &a.negate());
                ctx.check(p1 == p2 && p2 == p3, || cx(&[("A", a), ("B", b), ("C", cc)]));
            };
            ex_chain3(ctx, inst);
            while ctx.more() {
                let (x, y, z) = (ctx.universe(GEN), ctx.universe(GEN), ctx.universe(GEN));
                let (a, b, cc) = (
                    ctx.relation(&x, &y),
                    ctx.relation(&y, &z),
                    ctx.relation(&x, &z),
                );
                inst(ctx, &a, &b, &cc);
            }
        },
    );

    law(
        v,
        Suite::Core,
        "residual-galois",
        "A*B <= C  <->  A <= C/B  <->  B <= A\\C",
        |ctx| {
            let inst: Check3 = |ctx, a, b, cc| {
                let p1 = leq(&c(a, b), cc);
                let p2 = leq(a, &lres(cc, b));
                let p3 = leq(b, &rres(a, cc));
                ctx.check(p1 == p2 && p2 == p3, || cx(&[("A", a), ("B", b), ("C", cc)]));
            };
            ex_chain3(ctx, inst);
            while ctx.more() {
                let (x, y, z) = (ctx.universe(GEN), ctx.universe(GEN), ctx.universe(GEN));
                let (a, b, cc) = (
                    ctx.relation(&x, &y),
                    ctx.relation(&y, &z),
                    ctx.relation(&x, &z),
                );
                inst(ctx, &a, &b, &cc);
            }
        },
    );

    law(
        v,
        Suite::Core,
        "left-residual-oracle",
        "C/B == pointwise left residual",
        |ctx| {
            let inst: fn(&mut Ctx, &Relation, &Relation) = |ctx, cc, b| {
                ctx.check(lres(cc, b) == oracle_left_residual(cc, b).unwrap(), || {
                    cx(&[("C", cc), ("B", b)])
                });
            };
            for x in &tiny() {
                for y in &tiny() {
                    for z in &tiny() {
                        for cc in &rels(x, z) {
                            for b in &rels(y, z) {
                                inst(ctx, cc, b);
                            }
                        }
                    }
                }
            }
            while ctx.more() {
                let (x, y, z) = (ctx.universe(GEN), ctx.universe(GEN), ctx.universe(GEN));
                let (cc, b) = (ctx.relation(&x, &z), ctx.relation(&y, &z));
                inst(ctx, &cc, &b);
            }
        },
    );

    law(
        v,
        Suite::Core,
        "right-residual-oracle",
        "A\\C == pointwise right residual",
        |ctx| {
            let inst: fn(&mut Ctx, &Relation, &Relation) = |ctx, a, cc| {
                ctx.check(rres(a, cc) == oracle_right_residual(a, cc).unwrap(), || {
                    cx(&[("A", a), ("C", cc)])
                });
            };
            for x in &tiny() {
                for y in &tiny() {
                    for z in &tiny() {
                        for a in &rels(x, y) {
                            for cc in &rels(x, z) {
                                inst(ctx, a, cc);
                            }
                        }
                    }
                }
            }
            while ctx.more() {
                let (x, y, z) = (ctx.universe(GEN), ctx.universe(GEN), ctx.universe(GEN));
                let (a, cc) = (ctx.relation(&x, &y), ctx.relation(&x, &z));
                inst(ctx, &a, &cc);
            }
        },
    );

    law(
        v,
        Suite::Core,
        "residual-exchange",
        "(Q\\R)/T == Q\\(R/T)",
        |ctx| {
            let inst: Check3 = |ctx, q, r, t| {
                ctx.check(lres(&rres(q, r), t) == rres(q, &lres(r, t)), || {
                    cx(&[("Q", q), ("R", r), ("T", t)])
                });
            };
            for a in &tiny() {
                for b in &tiny() {
                    for cu in &tiny() {
                        for d in &tiny() {
                            for q in &rels(a, b) {
                                for r in &rels(a, cu) {
                                    for t in &rels(d, cu) {
                                        inst(ctx, q, r, t);
                                    }
                                }
                            }
                        }
                    }
                }
            }
            while ctx.more() {
                let (a, b, cu, d) = (
                    ctx.universe(3),
                    ctx.universe(3),
                    ctx.universe(3),
                    ctx.universe(3),
                );
                let (q, r, t) = (
                    ctx.relation(&a, &b),
                    ctx.relation(&a, &cu),
                    ctx.relation(&d, &cu),
                );
                inst(ctx, &q, &r, &t);
            }
        },
    );

    law(
        v,
        Suite::Core,
        "residual-preorder",
        "E = Q\\Q: E is reflexive and transitive and E == E/E",
        |ctx| {
            let inst: fn(&mut Ctx, &Relation) = |ctx, q| {
                let e = rres(q, q);
                let ok = e.is_reflexive().unwrap()
                    && e.is_transitive().unwrap()
                    && e == lres(&e, &e);
                ctx.check(ok, || cx(&[("Q", q)]));
            };
            for x in &tiny() {
                for y in &tiny() {
                    for q in &rels(x, y) {
                        inst(ctx, q);
                    }
                }
            }
            while ctx.more() {
                let (x, y) = (ctx.universe(GEN), ctx.universe(GEN));
                let q = ctx.relation(&x, &y);
                inst(ctx, &q);
            }
        },
    );

    law(
        v,
        Suite::Core,
        "residual-total-factor",
        "U total: Q/(R*U) <= (Q*U^)/R",
        |ctx| {
            let inst: Check3 = |ctx, q, r, uu| {
                if !uu.is_total() {
                    return;
                }
                let lhs = lres(q, &c(r, uu));
                let rhs = lres(&c(q, &uu.converse()), r);
                ctx.check(leq(&lhs, &rhs), || cx(&[("Q", q), ("R", r), ("U", uu)]));
            };
            for a in &tiny() {
                for b in &tiny() {
                    for e in &tiny() {
                        for cu in &tiny() {
                            for q in &rels(a, cu) {
                                for r in &rels(b, e) {
                                    for uu in &rels(e, cu) {
                                        inst(ctx, q, r, uu);
                                    }
                                }
                            }
                        }
                    }
                }
            }
            while ctx.more() {
                let (a, b, e) = (ctx.universe(3), ctx.universe(3), ctx.universe(3));
                let cu = ctx.universe_pos(3);
                let q = ctx.relation(&a, &cu);
                let r = ctx.relation(&b, &e);
                let uu = ctx.mapping(&e, &cu); // mappings are total
                inst(ctx, &q, &r, &uu);
            }
        },
    );

    law(
        v,
        Suite::Core,
        "shunting-mappings",
        "f mapping: A*f <= B  <->  A <= B*f^",
        |ctx| {
            let inst: Check3 = |ctx, a, f, b| {
                if !f.is_mapping() {
                    return;
                }
                let p1 = leq(&c(a, f), b);
                let p2 = leq(a, &c(b, &f.converse()));
                ctx.check(p1 == p2, || cx(&[("A", a), ("f", f), ("B", b)]));
            };
            ex_chain3(ctx, inst);
            while ctx.more() {
                let (x, y) = (ctx.universe(GEN), ctx.universe(GEN));
                let z = ctx.universe_pos(GEN);
                let (a, f, b) = (
                    ctx.relation(&x, &y),
                    ctx.mapping(&y, &z),
                    ctx.relation(&x, &z),
                );
                inst(ctx, &a, &f, &b);
            }
        },
    );

    law(
        v,
        Suite::Core,
        "destroy-and-append",
        "g univalent: (A & B*g^)*g == A*g & B",
        |ctx| {
            let inst: Check3 = |ctx, a, g, b| {
                if !g.is_univalent() {
                    return;
                }
                let lhs = c(&meet(a, &c(b, &g.converse())), g);
                let rhs = meet(&c(a, g), b);
                ctx.check(lhs == rhs, || cx(&[("A", a), ("g", g), ("B", b)]));
            };
            ex_chain3(ctx, inst);
            while ctx.more() {
                let (x, y, z) = (ctx.universe(GEN), ctx.universe(GEN), ctx.universe(GEN));
                let (a, g, b) = (
                    ctx.relation(&x, &y),
                    ctx.partial_map(&y, &z),
                    ctx.relation(&x, &z),
                );
                inst(ctx, &a, &g, &b);
            }
        },
    );

    law(
        v,
        Suite::Core,
        "complement-diagonal-vector",
        "~((I & D)*T) == (I & ~D)*T",
        |ctx| {
            let inst: fn(&mut Ctx, &Relation, &Universe) = |ctx, d, k| {
                let ix = id(d.src());
                let t = top(d.src(), k);
                let lhs = c(&meet(&ix, d), &t).negate();
                let rhs = c(&meet(&ix, &d.negate()), &t);
                ctx.check(lhs == rhs, || cx(&[("D", d)]));
            };
            for x in &tiny() {
                for k in &tiny() {
                    for d in &rels(x, x) {
                        inst(ctx, d, k);
                    }
                }
            }
            while ctx.more() {
                let x = ctx.universe(GEN);
                let k = ctx.universe(GEN);
                let d = ctx.relation(&x, &x);
                inst(ctx, &d, &k);
            }
        },
    );

    law(
        v,
        Suite::Core,
        "mapping-difference-vector",
        "f,g mappings: (~f & g)*T == (f & ~g)*T",
        |ctx| {
            let inst: fn(&mut Ctx, &Relation, &Relation, &Universe) = |ctx, f, g, k| {
                if !f.is_mapping() || !g.is_mapping() {
                    return;
                }
                let t = top(f.tgt(), k);
                let lhs = c(&meet(&f.negate(), g), &t);
                let rhs = c(&meet(f, &g.negate()), &t);
                ctx.check(lhs == rhs, || cx(&[("f", f), ("g", g)]));
            };
            for x in &tiny() {
                for y in &tiny() {
                    for k in &tiny() {
                        for f in &rels(x, y) {
                            for g in &rels(x, y) {
                                inst(ctx, f, g, k);
                            }
                        }
                    }
                }
            }
            while ctx.more() {
                let x = ctx.universe(GEN);
                let y = ctx.universe_pos(GEN);
                let k = ctx.universe(GEN);
                let (f, g) = (ctx.mapping(&x, &y), ctx.mapping(&x, &y));
                inst(ctx, &f, &g, &k);
            }
        },
    );

    law(
        v,
        Suite::Core,
        "predicate-duality",
        "univalent <-> R^*R <= I; total <-> I <= R*R^; vector <-> R == R*T; point <-> vector & injective & surjective",
        |ctx| {
            let inst: fn(&mut Ctx, &Relation) = |ctx, r| {
                let rt = r.converse();
                let ok = r.is_univalent() == leq(&c(&rt, r), &id(r.tgt()))
                    && r.is_total() == leq(&id(r.src()), &c(r, &rt))
                    && r.is_injective() == leq(&c(r, &rt), &id(r.src()))
                    && r.is_surjective() == leq(&id(r.tgt()), &c(&rt, r))
                    && r.is_vector() == (*r == c(r, &top(r.tgt(), r.tgt())))
                    && r.is_point() == (r.is_vector() && r.is_injective() && r.is_surjective());
                ctx.check(ok, || cx(&[("R", r)]));
            };
            for x in &tiny() {
                for y in &tiny() {
                    for r in &rels(x, y) {
                        inst(ctx, r);
                    }
                }
            }
            let one = Universe::unit();
            for x in &tiny() {
                for r in &rels(x, &one) {
                    inst(ctx, r);
                }
            }
            while ctx.more() {
                let x = ctx.universe(GEN);
                let vec_shape = ctx.rng.gen_bool(0.3);
                let y = if vec_shape { Universe::unit() } else { ctx.universe(GEN) };
                let r = ctx.relation(&x, &y);
                inst(ctx, &r);
            }
        },
    );
}

fn syq_laws(v: &mut Vec<Law>) {
    law(v, Suite::Syq, "syq-oracle", "syq(R,S) == column comparison", |ctx| {
        let inst: fn(&mut Ctx, &Relation, &Relation) = |ctx, r, s| {
            ctx.check(syq(r, s) == oracle_syq(r, s).unwrap(), || {
                cx(&[("R", r), ("S", s)])
            });
        };
        for x in &tiny() {
            for y in &tiny() {
                for z in &tiny() {
                    for r in &rels(x, y) {
                        for s in &rels(x, z) {
                            inst(ctx, r, s);
                        }
                    }
                }
            }
        }
        while ctx.more() {
            let (x, y, z) = (ctx.universe(GEN), ctx.universe(GEN), ctx.universe(GEN));
            let (r, s) = (ctx.relation(&x, &y), ctx.relation(&x, &z));
            inst(ctx, &r, &s);
        }
    });

    law(
        v,
        Suite::Syq,
        "syq-symmetries",
        "syq(R,S)^ == syq(S,R); syq(~R,~S) == syq(R,S); syq(R,R) is an equivalence",
        |ctx| {
            let inst: fn(&mut Ctx, &Relation, &Relation) = |ctx, r, s| {
                let ok = syq(r, s).converse() == syq(s, r)
                    && syq(&r.negate(), &s.negate()) == syq(r, s)
                    && syq(r, r).is_equivalence().unwrap();
                ctx.check(ok, || cx(&[("R", r), ("S", s)]));
            };
            for x in &tiny() {
                for y in &tiny() {
                    for z in &tiny() {
                        for r in &rels(x, y) {
                            for s in &rels(x, z) {
                                inst(ctx, r, s);
                            }
                        }
                    }
                }
            }
            while ctx.more() {
                let (x, y, z) = (ctx.universe(GEN), ctx.universe(GEN), ctx.universe(GEN));
                let (r, s) = (ctx.relation(&x, &y), ctx.relation(&x, &z));
                inst(ctx, &r, &s);
            }
        },
    );

    law(
        v,
        Suite::Syq,
        "syq-meet-join-monotony",
        "syq(A,C) & syq(B,C) <= syq(A&B,C) & syq(A|B,C)",
        |ctx| {
            let inst: Check3 = |ctx, a, b, cc| {
                let lhs = meet(&syq(a, cc), &syq(b, cc));
                let rhs = meet(&syq(&meet(a, b), cc), &syq(&ju(a, b), cc));
                ctx.check(leq(&lhs, &rhs), || cx(&[("A", a), ("B", b), ("C", cc)]));
            };
            for x in &tiny() {
                for y in &tiny() {
                    for z in &tiny() {
                        for a in &rels(x, y) {
                            for b in &rels(x, y) {
                                for cc in &rels(x, z) {
                                    inst(ctx, a, b, cc);
                                }
                            }
                        }
                    }
                }
            }
            while ctx.more() {
                let (x, y, z) = (ctx.universe(GEN), ctx.universe(GEN), ctx.universe(GEN));
                let (a, b, cc) = (
                    ctx.relation(&x, &y),
                    ctx.relation(&x, &y),
                    ctx.relation(&x, &z),
                );
                inst(ctx, &a, &b, &cc);
            }
        },
    );

    law(
        v,
        Suite::Syq,
        "syq-cancel-masked",
        "A*syq(A,B) == B & T*syq(A,B); == B when syq(A,B) is surjective",
        |ctx| {
            let inst: fn(&mut Ctx, &Relation, &Relation) = |ctx, a, b| {
                let q = syq(a, b);
                let lhs = c(a, &q);
                let mask = c(&top(a.src(), a.tgt()), &q);
                let mut ok = lhs == meet(b, &mask);
                if q.is_surjective() {
                    ok = ok && lhs == *b;
                }
                ctx.check(ok, || cx(&[("A", a), ("B", b)]));
            };
            for x in &tiny() {
                for y in &tiny() {
                    for z in &tiny() {
                        for a in &rels(x, y) {
                            for b in &rels(x, z) {
                                inst(ctx, a, b);
                            }
                        }
                    }
                }
            }
            while ctx.more() {
                let (x, y, z) = (ctx.universe(GEN), ctx.universe(GEN), ctx.universe(GEN));
                let (a, b) = (ctx.relation(&x, &y), ctx.relation(&x, &z));
                inst(ctx, &a, &b);
            }
        },
    );

    law(
        v,
        Suite::Syq,
        "syq-compose-chain",
        "syq(A,B)*syq(B,C) == syq(A,C) & syq(A,B)*T == syq(A,C) & T*syq(B,C); == syq(A,C) when syq(A,B) total or syq(B,C) surjective",
        |ctx| {
            let inst: Check3 = |ctx, a, b, cc| {
                let ab = syq(a, b);
                let bc = syq(b, cc);
                let ac = syq(a, cc);
                let lhs = c(&ab, &bc);
                let m1 = meet(&ac, &c(&ab, &top(b.tgt(), cc.tgt())));
                let m2 = meet(&ac, &c(&top(a.tgt(), b.tgt()), &bc));
                let mut ok = lhs == m1 && lhs == m2;
                if ab.is_total() || bc.is_surjective() {
                    ok = ok && lhs == ac;
                }
                ctx.check(ok, || cx(&[("A", a), ("B", b), ("C", cc)]));
            };
            for x in &tiny() {
                for y in &tiny() {
                    for z in &tiny() {
                        for w in &tiny() {
                            if x.size() + y.size() + z.size() + w.size() > 7 {
                                continue;
                            }
                            for a in &rels(x, y) {
                                for b in &rels(x, z) {
                                    for cc in &rels(x, w) {
                                        inst(ctx, a, b, cc);
                                    }
                                }
                            }
                        }
                    }
                }
            }
            while ctx.more() {
                let x = ctx.universe(GEN);
                let (y, z, w) = (ctx.universe(GEN), ctx.universe(GEN), ctx.universe(GEN));
                let (a, b, cc) = (
                    ctx.relation(&x, &y),
                    ctx.relation(&x, &z),
                    ctx.relation(&x, &w),
                );
                inst(ctx, &a, &b, &cc);
            }
        },
    );

    law(
        v,
        Suite::Syq,
        "syq-residual-upper",
        "syq(X,Y)\\syq(X,Z) >= syq(Y,Z)",
        |ctx| {
            let inst: Check3 = |ctx, x, y, z| {
                let lhs = rres(&syq(x, y), &syq(x, z));
                ctx.check(leq(&syq(y, z), &lhs), || cx(&[("X", x), ("Y", y), ("Z", z)]));
            };
            for a in &tiny() {
                for b in &tiny() {
                    for cu in &tiny() {
                        for d in &tiny() {
                            if a.size() + b.size() + cu.size() + d.size() > 7 {
                                continue;
                            }
                            for x in &rels(a, b) {
                                for y in &rels(a, cu) {
                                    for z in &rels(a, d) {
                                        inst(ctx, x, y, z);
                                    }
                                }
                            }
                        }
                    }
                }
            }
            while ctx.more() {
                let a = ctx.universe(GEN);
                let (b, cu, d) = (ctx.universe(GEN), ctx.universe(GEN), ctx.universe(GEN));
                let (x, y, z) = (
                    ctx.relation(&a, &b),
                    ctx.relation(&a, &cu),
                    ctx.relation(&a, &d),
                );
                inst(ctx, &x, &y, &z);
            }
        },
    );

    law(
        v,
        Suite::Syq,
        "syq-of-syq",
        "syq(syq(X,Y),syq(X,Z)) >= syq(Y,Z); == when both arguments are surjective",
        |ctx| {
            let inst: Check3 = |ctx, x, y, z| {
                let xy = syq(x, y);
                let xz = syq(x, z);
                let lhs = syq(&xy, &xz);
                let yz = syq(y, z);
                let mut ok = leq(&yz, &lhs);
                if xy.is_surjective() && xz.is_surjective() {
                    ok = ok && lhs == yz;
                }
                ctx.check(ok, || cx(&[("X", x), ("Y", y), ("Z", z)]));
            };
            for a in &tiny() {
                for b in &tiny() {
                    for cu in &tiny() {
                        for d in &tiny() {
                            if a.size() + b.size() + cu.size() + d.size() > 7 {
                                continue;
                            }
                            for x in &rels(a, b) {
                                for y in &rels(a, cu) {
                                    for z in &rels(a, d) {
                                        inst(ctx, x, y, z);
                                    }
                                }
                            }
                        }
                    }
                }
            }
            while ctx.more() {
                let a = ctx.universe(GEN);
                let (b, cu, d) = (ctx.universe(GEN), ctx.universe(GEN), ctx.universe(GEN));
                let (x, y, z) = (
                    ctx.relation(&a, &b),
                    ctx.relation(&a, &cu),
                    ctx.relation(&a, &d),
                );
                inst(ctx, &x, &y, &z);
            }
        },
    );

    law(
        v,
        Suite::Syq,
        "syq-mapping-precompose",
        "f surjective mapping: syq(X, f*Y) <= syq(f^*X, Y)",
        |ctx| {
            let inst: Check3 = |ctx, f, x, y| {
                if !f.is_mapping() || !f.is_surjective() {
                    return;
                }
                let lhs = syq(x, &c(f, y));
                let rhs = syq(&c(&f.converse(), x), y);
                ctx.check(leq(&lhs, &rhs), || cx(&[("f", f), ("X", x), ("Y", y)]));
            };
            for a in &tiny() {
                for b in &tiny() {
                    for cu in &tiny() {
                        for d in &tiny() {
                            if a.size() + b.size() + cu.size() + d.size() > 7 {
                                continue;
                            }
                            for f in &rels(a, b) {
                                for x in &rels(a, cu) {
                                    for y in &rels(b, d) {
                                        inst(ctx, f, x, y);
                                    }
                                }
                            }
                        }
                    }
                }
            }
            while ctx.more() {
                let a = ctx.universe(GEN);
                let (b, f) = ctx.surjection_from(&a);
                let (cu, d) = (ctx.universe(GEN), ctx.universe(GEN));
                let (x, y) = (ctx.relation(&a, &cu), ctx.relation(&b, &d));
                inst(ctx, &f, &x, &y);
            }
        },
    );
}

fn powerset_laws(v: &mut Vec<Law>) {
    law(
        v,
        Suite::Powerset,
        "membership-characterization",
        "eps == pointwise membership; syq(eps,eps) == I; syq(X,eps) is a mapping",
        |ctx| {
            let inst: fn(&mut Ctx, &Universe, &Relation) = |ctx, base, x| {
                let eps = membership(base).unwrap().epsilon;
                let comprehension = syq(x, &eps);
                let ok = eps == oracle_membership(base).unwrap()
                    && syq(&eps, &eps) == id(eps.tgt())
                    && comprehension.is_mapping()
                    && syq(&eps, x) == comprehension.converse();
                ctx.check(ok, || cx(&[("X", x)]));
            };
            for base in &tiny() {
                for k in &tiny() {
                    for x in &rels(base, k) {
                        inst(ctx, base, x);
                    }
                }
            }
            while ctx.more() {
                let base = ctx.universe(POW);
                let k = ctx.universe(GEN);
                let x = ctx.relation(&base, &k);
                inst(ctx, &base, &x);
            }
        },
    );

    law(
        v,
        Suite::Powerset,
        "powerset-order",
        "Om == ~(eps^*~eps); Om is an order; Om == subset inclusion",
        |ctx| {
            let inst: fn(&mut Ctx, &Universe) = |ctx, base| {
                let b = membership(base).unwrap();
                let direct = Relation::from_fn(&b.power, &b.power, |m, k| m & !k == 0);
                let formula = c(&b.epsilon.converse(), &b.epsilon.negate()).negate();
                let ok = b.omega == formula && b.omega == direct && b.omega.is_order().unwrap();
                ctx.check(ok, || format!("base {}", base.name()));
            };
            for base in &tiny() {
                inst(ctx, base);
            }
            while ctx.more() {
                let base = ctx.universe(POW);
                inst(ctx, &base);
            }
        },
    );

    law(
        v,
        Suite::Powerset,
        "singleton-injection",
        "sg*eps^ == I; ~(~I*eps) == sg | ~(T*eps); sg*Om == eps; sg*Om^ == sg | ~(T*eps); eps == sg | (eps & ~(T*sg))",
        |ctx| {
            let inst: fn(&mut Ctx, &Universe) = |ctx, base| {
                let b = membership(base).unwrap();
                let (eps, sg) = (&b.epsilon, &b.sigma);
                let ix = id(base);
                let t = top(base, base);
                let empty_col = c(&t, eps).negate();
                let ok = c(sg, &eps.converse()) == ix
                    && c(&ix.negate(), eps).negate() == ju(sg, &empty_col)
                    && c(sg, &b.omega) == *eps
                    && c(sg, &b.omega.converse()) == ju(sg, &empty_col)
                    && *eps == ju(sg, &meet(eps, &c(&t, sg).negate()));
                ctx.check(ok, || format!("base {}", base.name()));
            };
            for base in &tiny() {
                inst(ctx, base);
            }
            while ctx.more() {
                let base = ctx.universe(POW);
                inst(ctx, &base);
            }
        },
    );

    law(
        v,
        Suite::Powerset,
        "singleton-interaction",
        "~I*eps & ~(~I*sg) == T*eps & ~(T*sg); Om & eps^*eps == Om & eps^*T; (Om & eps^*eps)*eps^ == eps^*T; (Om & eps^*T)^*(Om & eps^*T) == eps^*eps",
        |ctx| {
            let inst: fn(&mut Ctx, &Universe) = |ctx, base| {
                let b = membership(base).unwrap();
                let (eps, sg, om) = (&b.epsilon, &b.sigma, &b.omega);
                let ni = id(base).negate();
                let t = top(base, base);
                let tp = top(base, &b.power);
                let et = c(&eps.converse(), &tp);
                let ok = meet(&c(&ni, eps), &c(&ni, sg).negate())
                    == meet(&c(&t, eps), &c(&t, sg).negate())
                    && meet(om, &c(&eps.converse(), eps)) == meet(om, &et)
                    && c(&meet(om, &c(&eps.converse(), eps)), &eps.converse())
                        == c(&eps.converse(), &t)
                    && c(&meet(om, &et).converse(), &meet(om, &et)) == c(&eps.converse(), eps);
                ctx.check(ok, || format!("base {}", base.name()));
            };
            for base in &tiny() {
                inst(ctx, base);
            }
            while ctx.more() {
                let base = ctx.universe(POW);
                inst(ctx, &base);
            }
        },
    );

    law(
        v,
        Suite::Powerset,
        "membership-complement-collapse",
        "eps*~(eps^*X) == ~X; ~eps*~(~eps^*X) == ~X",
        |ctx| {
            let inst: fn(&mut Ctx, &Relation) = |ctx, x| {
                let b = membership(x.src()).unwrap();
                let eps = &b.epsilon;
                let p1 = c(eps, &c(&eps.converse(), x).negate()) == x.negate();
                let p2 = c(&eps.negate(), &c(&eps.negate().converse(), x).negate()) == x.negate();
                ctx.check(p1 && p2, || cx(&[("X", x)]));
            };
            for base in &tiny() {
                for k in &tiny() {
                    for x in &rels(base, k) {
                        inst(ctx, x);
                    }
                }
            }
            while ctx.more() {
                let base = ctx.universe(POW);
                let k = ctx.universe(GEN);
                let x = ctx.relation(&base, &k);
                inst(ctx, &x);
            }
        },
    );

    law(
        v,
        Suite::Powerset,
        "lub-glb-characterization",
        "lub(X) == syq(eps, eps*X) == pointwise union; glb(X) == syq(~eps, ~eps*X) == pointwise intersection; both mappings",
        |ctx| {
            let inst: fn(&mut Ctx, &Universe, &Relation) = |ctx, base, x| {
                let b = membership(base).unwrap();
                let lub = b.lub(x).unwrap();
                let glb = b.glb(x).unwrap();
                let full = (1usize << base.size()) - 1;
                let mut pairs_l = Vec::new();
                let mut pairs_g = Vec::new();
                for k in 0..x.tgt().size() {
                    let mut un = 0usize;
                    let mut is = full;
                    for m in 0..b.power.size() {
                        if x.get(m, k) {
                            un |= m;
                            is &= m;
                        }
                    }
                    pairs_l.push((un, k));
                    pairs_g.push((is, k));
                }
                let direct_l = Relation::from_pairs(&b.power, x.tgt(), &pairs_l).unwrap();
                let direct_g = Relation::from_pairs(&b.power, x.tgt(), &pairs_g).unwrap();
                let ok = lub == direct_l
                    && lub == oracle_lub(base, x).unwrap()
                    && glb == direct_g
                    && lub.converse().is_mapping()
                    && glb.converse().is_mapping();
                ctx.check(ok, || cx(&[("X", x)]));
            };
            for base in &tiny() {
                for k in &tiny() {
                    let pow = Universe::power(base).unwrap();
                    if pow.size() * k.size() > 8 {
                        continue;
                    }
                    for x in &rels(&pow, k) {
                        inst(ctx, base, x);
                    }
                }
            }
            while ctx.more() {
                let base = ctx.universe(LIFT);
                let pow = Universe::power(&base).unwrap();
                let k = ctx.universe(3);
                let x = ctx.relation(&pow, &k);
                inst(ctx, &base, &x);
            }
        },
    );

    law(
        v,
        Suite::Powerset,
        "lub-glb-rows",
        "lubR(W) == syq(eps*W^, eps) maps each row to its union; glbR(W) dually to its intersection",
        |ctx| {
            let inst: fn(&mut Ctx, &Universe, &Relation) = |ctx, base, w| {
                let b = membership(base).unwrap();
                let lub = b.lub_rows(w).unwrap();
                let glb = b.glb_rows(w).unwrap();
                let full = (1usize << base.size()) - 1;
                let mut pairs_l = Vec::new();
                let mut pairs_g = Vec::new();
                for k in 0..w.src().size() {
                    let mut un = 0usize;
                    let mut is = full;
                    for m in w.row_ones(k) {
                        un |= m;
                        is &= m;
                    }
                    pairs_l.push((k, un));
                    pairs_g.push((k, is));
                }
                let ok = lub == Relation::from_pairs(w.src(), &b.power, &pairs_l).unwrap()
                    && glb == Relation::from_pairs(w.src(), &b.power, &pairs_g).unwrap();
                ctx.check(ok, || cx(&[("W", w)]));
            };
            for base in &tiny() {
                for k in &tiny() {
                    let pow = Universe::power(base).unwrap();
                    if pow.size() * k.size() > 8 {
                        continue;
                    }
                    for w in &rels(k, &pow) {
                        inst(ctx, base, w);
                    }
                }
            }
            while ctx.more() {
                let base = ctx.universe(LIFT);
                let pow = Universe::power(&base).unwrap();
                let k = ctx.universe(3);
                let w = ctx.relation(&k, &pow);
                inst(ctx, &base, &w);
            }
        },
    );

    law(
        v,
        Suite::Powerset,
        "atoms-are-singletons",
        "atoms == sg^*sg; atom vector marks exactly the one-element subsets",
        |ctx| {
            let inst: fn(&mut Ctx, &Universe) = |ctx, base| {
                let b = membership(base).unwrap();
                let atoms = b.atoms();
                let ok = atoms == c(&b.sigma.converse(), &b.sigma)
                    && b.atoms_vector()
                        == Relation::from_fn(&b.power, &Universe::unit(), |m, _| {
                            m.count_ones() == 1
                        });
                ctx.check(ok, || format!("base {}", base.name()));
            };
            for base in &tiny() {
                inst(ctx, base);
            }
            while ctx.more() {
                let base = ctx.universe(POW);
                inst(ctx, &base);
            }
        },
    );

    law(
        v,
        Suite::Powerset,
        "quotient-preorder",
        "Om' == ~(eps^*~(Xi*eps)) is a preorder",
        |ctx| {
            let inst: fn(&mut Ctx, &Relation) = |ctx, xi| {
                let qb = quotient_membership(xi).unwrap();
                let eps = membership(xi.src()).unwrap().epsilon;
                let formula = c(&eps.converse(), &c(xi, &eps).negate()).negate();
                let ok = qb.omega_prime == formula && qb.omega_prime.is_preorder().unwrap();
                ctx.check(ok, || cx(&[("Xi", xi)]));
            };
            for base in &tiny() {
                for xi in &rels(base, base) {
                    if xi.is_equivalence().unwrap() {
                        inst(ctx, xi);
                    }
                }
            }
            while ctx.more() {
                let base = ctx.universe(POW);
                let xi = ctx.equivalence(&base);
                inst(ctx, &xi);
            }
        },
    );

    law(
        v,
        Suite::Powerset,
        "quotient-equivalence",
        "Q == syq(Xi*eps, Xi*eps) is an equivalence; Q == Om' & Om'^; Q == eta*eta^",
        |ctx| {
            let inst: fn(&mut Ctx, &Relation) = |ctx, xi| {
                let qb = quotient_membership(xi).unwrap();
                let eps = membership(xi.src()).unwrap().epsilon;
                let sat = c(xi, &eps);
                let ok = qb.q == syq(&sat, &sat)
                    && qb.q.is_equivalence().unwrap()
                    && qb.q == meet(&qb.omega_prime, &qb.omega_prime.converse())
                    && qb.q == c(&qb.eta, &qb.eta.converse());
                ctx.check(ok, || cx(&[("Xi", xi)]));
            };
            for base in &tiny() {
                for xi in &rels(base, base) {
                    if xi.is_equivalence().unwrap() {
                        inst(ctx, xi);
                    }
                }
            }
            while ctx.more() {
                let base = ctx.universe(POW);
                let xi = ctx.equivalence(&base);
                inst(ctx, &xi);
            }
        },
    );

    law(
        v,
        Suite::Powerset,
        "quotient-saturation",
        "eps*Q == Xi*eps",
        |ctx| {
            let inst: fn(&mut Ctx, &Relation) = |ctx, xi| {
                let qb = quotient_membership(xi).unwrap();
                let eps = membership(xi.src()).unwrap().epsilon;
                ctx.check(c(&eps, &qb.q) == c(xi, &eps), || cx(&[("Xi", xi)]));
            };
            for base in &tiny() {
                for xi in &rels(base, base) {
                    if xi.is_equivalence().unwrap() {
                        inst(ctx, xi);
                    }
                }
            }
            while ctx.more() {
                let base = ctx.universe(POW);
                let xi = ctx.equivalence(&base);
                inst(ctx, &xi);
            }
        },
    );

    law(
        v,
        Suite::Powerset,
        "quotient-membership",
        "eps_Xi == xi^*eps*eta is the canonical membership of the quotient",
        |ctx| {
            let inst: fn(&mut Ctx, &Relation) = |ctx, xi| {
                let qb = quotient_membership(xi).unwrap();
                let eps = membership(xi.src()).unwrap().epsilon;
                let formula = c(&c(&qb.xi.converse(), &eps), &qb.eta);
                let canonical = membership(&qb.quotient_universe).unwrap().epsilon;
                let ok = qb.epsilon_xi == formula
                    && qb.epsilon_xi == canonical
                    && syq(&qb.epsilon_xi, &qb.epsilon_xi) == id(qb.epsilon_xi.tgt());
                ctx.check(ok, || cx(&[("Xi", xi)]));
            };
            for base in &tiny() {
                for xi in &rels(base, base) {
                    if xi.is_equivalence().unwrap() {
                        inst(ctx, xi);
                    }
                }
            }
            while ctx.more() {
                let base = ctx.universe(POW);
                let xi = ctx.equivalence(&base);
                inst(ctx, &xi);
            }
        },
    );

    law(
        v,
        Suite::Powerset,
        "quotient-projection-commute",
        "xi^*eps == eps_Xi*eta^; Om'*eta == eta*Om_Xi",
        |ctx| {
            let inst: fn(&mut Ctx, &Relation) = |ctx, xi| {
                let qb = quotient_membership(xi).unwrap();
                let eps = membership(xi.src()).unwrap().epsilon;
                let om_xi = membership(&qb.quotient_universe).unwrap().omega;
                let ok = c(&qb.xi.converse(), &eps) == c(&qb.epsilon_xi, &qb.eta.converse())
                    && c(&qb.omega_prime, &qb.eta) == c(&qb.eta, &om_xi);
                ctx.check(ok, || cx(&[("Xi", xi)]));
            };
            for base in &tiny() {
                for xi in &rels(base, base) {
                    if xi.is_equivalence().unwrap() {
                        inst(ctx, xi);
                    }
                }
            }
            while ctx.more() {
                let base = ctx.universe(POW);
                let xi = ctx.equivalence(&base);
                inst(ctx, &xi);
            }
        },
    );
}

fn images_laws(v: &mut Vec<Law>) {
    law(
        v,
        Suite::Images,
        "existential-image-oracle",
        "theta(R) == pointwise existential image",
        |ctx| {
            let inst: fn(&mut Ctx, &Relation) = |ctx, r| {
                ctx.check(
                    existential_image(r).unwrap() == oracle_exim(r).unwrap(),
                    || cx(&[("R", r)]),
                );
            };
            for x in &tiny() {
                for y in &tiny() {
                    for r in &rels(x, y) {
                        inst(ctx, r);
                    }
                }
            }
            while ctx.more() {
                let (x, y) = (ctx.universe(POW), ctx.universe(POW));
                let r = ctx.relation(&x, &y);
                inst(ctx, &r);
            }
        },
    );

    law(
        v,
        Suite::Images,
        "existential-image-simulation",
        "eps^*R == theta(R)*eps'^; R*eps' == eps*theta(R^)^; both liftings are mappings",
        |ctx| {
            let inst: fn(&mut Ctx, &Relation) = |ctx, r| {
                let b = image_bundle(r).unwrap();
                let eps = membership(r.src()).unwrap().epsilon;
                let eps_t = membership(r.tgt()).unwrap().epsilon;
                let ok = c(&eps.converse(), r) == c(&b.theta, &eps_t.converse())
                    && c(r, &eps_t) == c(&eps, &b.theta_conv.converse())
                    && b.theta.is_mapping()
                    && b.theta_conv.is_mapping();
                ctx.check(ok, || cx(&[("R", r)]));
            };
            for x in &tiny() {
                for y in &tiny() {
                    for r in &rels(x, y) {
                        inst(ctx, r);
                    }
                }
            }
            while ctx.more() {
                let (x, y) = (ctx.universe(POW), ctx.universe(POW));
                let r = ctx.relation(&x, &y);
                inst(ctx, &r);
            }
        },
    );

    law(
        v,
        Suite::Images,
        "existential-image-functor",
        "theta(R*S) == theta(R)*theta(S); theta(I) == I",
        |ctx| {
            let inst: fn(&mut Ctx, &Relation, &Relation) = |ctx, r, s| {
                let ok = existential_image(&c(r, s)).unwrap()
                    == c(&existential_image(r).unwrap(), &existential_image(s).unwrap())
                    && existential_image(&id(r.src())).unwrap()
                        == id(&Universe::power(r.src()).unwrap());
                ctx.check(ok, || cx(&[("R", r), ("S", s)]));
            };
            for x in &tiny() {
                for y in &tiny() {
                    for z in &tiny() {
                        for r in &rels(x, y) {
                            for s in &rels(y, z) {
                                inst(ctx, r, s);
                            }
                        }
                    }
                }
            }
            while ctx.more() {
                let (x, y, z) = (ctx.universe(POW), ctx.universe(POW), ctx.universe(POW));
                let (r, s) = (ctx.relation(&x, &y), ctx.relation(&y, &z));
                inst(ctx, &r, &s);
            }
        },
    );

    law(
        v,
        Suite::Images,
        "image-mapping-identities",
        "f mapping: th(f^)^*th(f^)*th(f) == th(f^)^*th(f)^*th(f); th(f^)^*T & th(f) == th(f^)^ & T*th(f)",
        |ctx| {
            let inst: fn(&mut Ctx, &Relation) = |ctx, f| {
                if !f.is_mapping() {
                    return;
                }
                let th = existential_image(f).unwrap();
                let thc = inverse_image(f).unwrap();
                let thct = thc.converse();
                let p1 = c(&c(&thct, &thc), &th) == c(&c(&thct, &th.converse()), &th);
                let t = top(thct.tgt(), thct.tgt());
                let t2 = top(th.src(), th.src());
                let p2 = meet(&c(&thct, &t), &th) == meet(&thct, &c(&t2, &th));
                ctx.check(p1 && p2, || cx(&[("f", f)]));
            };
            for x in &tiny() {
                for y in &tiny() {
                    for f in &rels(x, y) {
                        inst(ctx, f);
                    }
                }
            }
            while ctx.more() {
                let x = ctx.universe(POW);
                let y = ctx.universe_pos(POW);
                let f = ctx.mapping(&x, &y);
                inst(ctx, &f);
            }
        },
    );

    law(
        v,
        Suite::Images,
        "image-surjective-collapse",
        "f surjective mapping: th(f^)^ <= th(f); th(f^)^ univalent; th(f) & th(f^)^*T == th(f^)^",
        |ctx| {
            let inst: fn(&mut Ctx, &Relation) = |ctx, f| {
                if !f.is_mapping() || !f.is_surjective() {
                    return;
                }
                let th = existential_image(f).unwrap();
                let thct = inverse_image(f).unwrap().converse();
                let t = top(thct.tgt(), thct.tgt());
                let ok = leq(&thct, &th)
                    && thct.is_univalent()
                    && meet(&th, &c(&thct, &t)) == thct;
                ctx.check(ok, || cx(&[("f", f)]));
            };
            for x in &tiny() {
                for y in &tiny() {
                    for f in &rels(x, y) {
                        inst(ctx, f);
                    }
                }
            }
            while ctx.more() {
                let x = ctx.universe(POW);
                let (_, f) = ctx.surjection_from(&x);
                inst(ctx, &f);
            }
        },
    );

    law(
        v,
        Suite::Images,
        "image-order-compatibility",
        "f mapping: Om'*th(f^) <= th(f^)*Om; Om*th(f^)^ == th(f)*Om'",
        |ctx| {
            let inst: fn(&mut Ctx, &Relation) = |ctx, f| {
                if !f.is_mapping() {
                    return;
                }
                let th = existential_image(f).unwrap();
                let thc = inverse_image(f).unwrap();
                let om = membership(f.src()).unwrap().omega;
                let om_t = membership(f.tgt()).unwrap().omega;
                let ok = leq(&c(&om_t, &thc), &c(&thc, &om))
                    && c(&om, &thc.converse()) == c(&th, &om_t);
                ctx.check(ok, || cx(&[("f", f)]));
            };
            for x in &tiny() {
                for y in &tiny() {
                    for f in &rels(x, y) {
                        inst(ctx, f);
                    }
                }
            }
            while ctx.more() {
                let x = ctx.universe(POW);
                let y = ctx.universe_pos(POW);
                let f = ctx.mapping(&x, &y);
                inst(ctx, &f);
            }
        },
    );

    law(
        v,
        Suite::Images,
        "singleton-image-recovery",
        "sg*th(R^)^*sg'^ <= R; eps*th(R^)^*sg'^ == R; f mapping: sg*th(f) == f*sg'",
        |ctx| {
            let inst: fn(&mut Ctx, &Relation) = |ctx, r| {
                let thct = inverse_image(r).unwrap().converse();
                let bx = membership(r.src()).unwrap();
                let by = membership(r.tgt()).unwrap();
                let mut ok = leq(&c(&c(&bx.sigma, &thct), &by.sigma.converse()), r)
                    && c(&c(&bx.epsilon, &thct), &by.sigma.converse()) == *r;
                if r.is_mapping() {
                    let th = existential_image(r).unwrap();
                    ok = ok && c(&bx.sigma, &th) == c(r, &by.sigma);
                }
                ctx.check(ok, || cx(&[("R", r)]));
            };
            for x in &tiny() {
                for y in &tiny() {
                    for r in &rels(x, y) {
                        inst(ctx, r);
                    }
                }
            }
            while ctx.more() {
                let (x, y) = (ctx.universe(POW), ctx.universe(POW));
                let r = if ctx.rng.gen_bool(0.4) && !y.is_empty() {
                    ctx.mapping(&x, &y)
                } else {
                    ctx.relation(&x, &y)
                };
                inst(ctx, &r);
            }
        },
    );

    law(
        v,
        Suite::Images,
        "power-relator-oracle",
        "zeta(R) == pointwise mutual coverage",
        |ctx| {
            let inst: fn(&mut Ctx, &Relation) = |ctx, r| {
                ctx.check(
                    power_relator(r).unwrap() == oracle_power_relator(r).unwrap(),
                    || cx(&[("R", r)]),
                );
            };
            for x in &tiny() {
                for y in &tiny() {
                    for r in &rels(x, y) {
                        inst(ctx, r);
                    }
                }
            }
            while ctx.more() {
                let (x, y) = (ctx.universe(POW), ctx.universe(POW));
                let r = ctx.relation(&x, &y);
                inst(ctx, &r);
            }
        },
    );

    law(
        v,
        Suite::Images,
        "power-relator-inheritance",
        "univalent/total/injective/surjective R give zeta(R) the same property; zeta(R)^ == zeta(R^)",
        |ctx| {
            let inst: fn(&mut Ctx, &Relation) = |ctx, r| {
                let z = power_relator(r).unwrap();
                let mut ok = z.converse() == power_relator(&r.converse()).unwrap();
                if r.is_univalent() {
                    ok = ok && z.is_univalent();
                }
                if r.is_total() {
                    ok = ok && z.is_total();
                }
                if r.is_injective() {
                    ok = ok && z.is_injective();
                }
                if r.is_surjective() {
                    ok = ok && z.is_surjective();
                }
                ctx.check(ok, || cx(&[("R", r)]));
            };
            for x in &tiny() {
                for y in &tiny() {
                    for r in &rels(x, y) {
                        inst(ctx, r);
                    }
                }
            }
            while ctx.more() {
                let (x, y) = (ctx.universe(POW), ctx.universe(POW));
                let r = match ctx.rng.gen_range(0..3) {
                    0 => ctx.partial_map(&x, &y),
                    1 => ctx.partial_map(&y, &x).converse(),
                    _ => ctx.relation(&x, &y),
                };
                inst(ctx, &r);
            }
        },
    );

    law(
        v,
        Suite::Images,
        "power-relator-mapping",
        "f mapping: zeta(f) == theta(f)",
        |ctx| {
            let inst: fn(&mut Ctx, &Relation) = |ctx, f| {
                if !f.is_mapping() {
                    return;
                }
                ctx.check(
                    power_relator(f).unwrap() == existential_image(f).unwrap(),
                    || cx(&[("f", f)]),
                );
            };
            for x in &tiny() {
                for y in &tiny() {
                    for f in &rels(x, y) {
                        inst(ctx, f);
                    }
                }
            }
            while ctx.more() {
                let x = ctx.universe(POW);
                let y = ctx.universe_pos(POW);
                let f = ctx.mapping(&x, &y);
                inst(ctx, &f);
            }
        },
    );
}

fn prodsum_laws(v: &mut Vec<Law>) {
    law(
        v,
        Suite::Prodsum,
        "product-axioms",
        "pi^*pi == I; rho^*rho == I; pi*pi^ & rho*rho^ == I; pi^*rho == T (inhabited factors)",
        |ctx| {
            let inst: fn(&mut Ctx, &Universe, &Universe) = |ctx, x, y| {
                let w = product(x, y).unwrap();
                let mut ok = meet(
                    &c(&w.pi, &w.pi.converse()),
                    &c(&w.rho, &w.rho.converse()),
                ) == id(&w.universe);
                if !x.is_empty() && !y.is_empty() {
                    ok = ok
                        && c(&w.pi.converse(), &w.pi) == id(x)
                        && c(&w.rho.converse(), &w.rho) == id(y)
                        && c(&w.pi.converse(), &w.rho) == top(x, y);
                }
                ctx.check(ok, || format!("factors {} and {}", x.name(), y.name()));
            };
            for x in &tiny() {
                for y in &tiny() {
                    inst(ctx, x, y);
                }
            }
            while ctx.more() {
                let (x, y) = (ctx.universe(POW), ctx.universe(POW));
                inst(ctx, &x, &y);
            }
        },
    );

    law(
        v,
        Suite::Prodsum,
        "sum-axioms",
        "in*in^ == I; kp*kp^ == I; in^*in | kp^*kp == I; in*kp^ == 0",
        |ctx| {
            let inst: fn(&mut Ctx, &Universe, &Universe) = |ctx, x, y| {
                let w = sum(x, y).unwrap();
                let ok = c(&w.iota, &w.iota.converse()) == id(x)
                    && c(&w.kappa, &w.kappa.converse()) == id(y)
                    && ju(
                        &c(&w.iota.converse(), &w.iota),
                        &c(&w.kappa.converse(), &w.kappa),
                    ) == id(&w.universe)
                    && c(&w.iota, &w.kappa.converse()).is_empty_relation();
                ctx.check(ok, || format!("summands {} and {}", x.name(), y.name()));
            };
            for x in &tiny() {
                for y in &tiny() {
                    inst(ctx, x, y);
                }
            }
            while ctx.more() {
                let (x, y) = (ctx.universe(GEN), ctx.universe(GEN));
                inst(ctx, &x, &y);
            }
        },
    );

    law(
        v,
        Suite::Prodsum,
        "kronecker-projections",
        "kron(A,B)*pi' == pi*A & rho*B*T; == pi*A if B total; kron(A,I)*pi' == join(A,T) == pi*A; fork(A,I)*pi' == A",
        |ctx| {
            let inst: fn(&mut Ctx, &Relation, &Relation) = |ctx, a, b| {
                let k = kronecker(a, b).unwrap();
                let w = product(a.src(), b.src()).unwrap();
                let w2 = product(a.tgt(), b.tgt()).unwrap();
                let lhs_pi = c(&k, &w2.pi);
                let rhs_pi = meet(
                    &c(&w.pi, a),
                    &c(&c(&w.rho, b), &top(b.tgt(), a.tgt())),
                );
                let lhs_rho = c(&k, &w2.rho);
                let rhs_rho = meet(
                    &c(&c(&w.pi, a), &top(a.tgt(), b.tgt())),
                    &c(&w.rho, b),
                );
                let mut ok = lhs_pi == rhs_pi && lhs_rho == rhs_rho;
                if b.is_total() {
                    ok = ok && lhs_pi == c(&w.pi, a);
                }
                if a.is_total() {
                    ok = ok && lhs_rho == c(&w.rho, b);
                }
                // Identity second factor collapses fully.
                let ib = id(b.src());
                let ki = kronecker(a, &ib).unwrap();
                let wp = product(a.tgt(), b.src()).unwrap();
                ok = ok
                    && c(&ki, &wp.pi) == join(a, &top(b.src(), a.tgt())).unwrap()
                    && c(&ki, &wp.pi) == c(&w.pi, a);
                if a.src() == b.src() {
                    let f = fork(a, &ib).unwrap();
                    let wf = product(a.tgt(), b.src()).unwrap();
                    let dom = meet(&ib, &c(a, &top(a.tgt(), b.src())));
                    ok = ok && c(&f, &wf.pi) == *a && c(&f, &wf.rho) == dom;
                    if a.is_total() {
                        ok = ok && c(&f, &wf.rho) == ib;
                    }
                }
                ctx.check(ok, || cx(&[("A", a), ("B", b)]));
            };
            for x in &tiny() {
                for y in &tiny() {
                    for u in &tiny() {
                        for w in &tiny() {
                            if x.size() + y.size() + u.size() + w.size() > 6 {
                                continue;
                            }
                            for a in &rels(x, u) {
                                for b in &rels(y, w) {
                                    inst(ctx, a, b);
                                }
                            }
                        }
                    }
                }
            }
            while ctx.more() {
                let (x, y, u, w) = (
                    ctx.universe(POW),
                    ctx.universe(POW),
                    ctx.universe(POW),
                    ctx.universe(POW),
                );
                let (a, b) = (ctx.relation(&x, &u), ctx.relation(&y, &w));
                inst(ctx, &a, &b);
                let a2 = ctx.relation(&x, &u);
                let f = fork(&a2, &id(&x)).unwrap();
                let wf = product(&u, &x).unwrap();
                let dom = meet(&id(&x), &c(&a2, &top(&u, &x)));
                let ok = c(&f, &wf.pi) == a2 && c(&f, &wf.rho) == dom;
                ctx.check(ok, || cx(&[("A", &a2)]));
            }
        },
    );

    law(
        v,
        Suite::Prodsum,
        "kronecker-mappings",
        "A,B univalent => kron(A,B) univalent; mappings => mapping",
        |ctx| {
            let inst: fn(&mut Ctx, &Relation, &Relation) = |ctx, a, b| {
                let k = kronecker(a, b).unwrap();
                let mut ok = true;
                if a.is_univalent() && b.is_univalent() {
                    ok = k.is_univalent();
                }
                if a.is_mapping() && b.is_mapping() {
                    ok = ok && k.is_mapping();
                }
                ctx.check(ok, || cx(&[("A", a), ("B", b)]));
            };
            for x in &tiny() {
                for y in &tiny() {
                    for u in &tiny() {
                        for w in &tiny() {
                            if x.size() + y.size() + u.size() + w.size() > 6 {
                                continue;
                            }
                            for a in &rels(x, u) {
                                for b in &rels(y, w) {
                                    inst(ctx, a, b);
                                }
                            }
                        }
                    }
                }
            }
            while ctx.more() {
                let (x, y) = (ctx.universe(POW), ctx.universe(POW));
                let (u, w) = (ctx.universe_pos(POW), ctx.universe_pos(POW));
                let (a, b) = if ctx.rng.gen_bool(0.5) {
                    (ctx.mapping(&x, &u), ctx.mapping(&y, &w))
                } else {
                    (ctx.partial_map(&x, &u), ctx.partial_map(&y, &w))
                };
                inst(ctx, &a, &b);
            }
        },
    );

    law(
        v,
        Suite::Prodsum,
        "kronecker-multiplicativity",
        "kron(R,S)*kron(P,Q) == kron(R*P,S*Q); kron*join == join of composites; fork*kron == fork of composites",
        |ctx| {
            #[allow(clippy::too_many_arguments)]
            fn inst(ctx: &mut Ctx, r: &Relation, s: &Relation, p: &Relation, q: &Relation) {
                let ok = c(&kronecker(r, s).unwrap(), &kronecker(p, q).unwrap())
                    == kronecker(&c(r, p), &c(s, q)).unwrap()
                    && c(&kronecker(r, s).unwrap(), &join(p, q).unwrap())
                        == join(&c(r, p), &c(s, q)).unwrap();
                ctx.check(ok, || cx(&[("R", r), ("S", s), ("P", p), ("Q", q)]));
            }
            for x in &tiny01() {
                for y in &tiny01() {
                    for u in &tiny01() {
                        for w in &tiny01() {
                            for g in &tiny01() {
                                for r in &rels(x, u) {
                                    for s in &rels(y, w) {
                                        for p in &rels(u, g) {
                                            for q in &rels(w, g) {
                                                inst(ctx, r, s, p, q);
                                            }
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
            while ctx.more() {
                let (x, y, u, w, g) = (
                    ctx.universe(3),
                    ctx.universe(3),
                    ctx.universe(3),
                    ctx.universe(3),
                    ctx.universe(3),
                );
                let (r, s) = (ctx.relation(&x, &u), ctx.relation(&y, &w));
                let (p, q) = (ctx.relation(&u, &g), ctx.relation(&w, &g));
                inst(ctx, &r, &s, &p, &q);
                let p2 = ctx.relation(&u, &g);
                let q2 = ctx.relation(&w, &g);
                // fork*kron with fresh source
                let z = ctx.universe(3);
                let cz = ctx.relation(&z, &u);
                let dz = ctx.relation(&z, &w);
                let ok = c(&fork(&cz, &dz).unwrap(), &kronecker(&p2, &q2).unwrap())
                    == fork(&c(&cz, &p2), &c(&dz, &q2)).unwrap();
                ctx.check(ok, || cx(&[("C", &cz), ("D", &dz), ("P", &p2), ("Q", &q2)]));
            }
        },
    );

    law(
        v,
        Suite::Prodsum,
        "fork-masks",
        "fork(A,B) & C*T == fork(A & C*T, B & C*T); fork(A&C,B&D) == fork(A,B) & fork(C,D)",
        |ctx| {
            let inst: fn(&mut Ctx, &Relation, &Relation, &Relation, &Relation) =
                |ctx, a, b, cc, d| {
                    // a : Z→X, b,d : Z→Y, cc : Z→G.
                    let mask_vec = c(cc, &unit_top(cc.tgt()));
                    let mask_x = c(&mask_vec, &Relation::top(&Universe::unit(), a.tgt()));
                    let mask_y = c(&mask_vec, &Relation::top(&Universe::unit(), b.tgt()));
                    let fa = fork(a, b).unwrap();
                    let mask_p = c(&mask_vec, &Relation::top(&Universe::unit(), fa.tgt()));
                    let p1 = meet(&fa, &mask_p)
                        == fork(&meet(a, &mask_x), &meet(b, &mask_y)).unwrap();
                    let (c2, d2) = (&mask_x, d);
                    let p2 = fork(&meet(a, c2), &meet(b, d2)).unwrap()
                        == meet(&fa, &fork(c2, d2).unwrap());
                    ctx.check(p1 && p2, || {
                        cx(&[("A", a), ("B", b), ("C", cc), ("D", d)])
                    });
                };
            for z in &tiny01() {
                for x in &tiny01() {
                    for y in &tiny01() {
                        for g in &tiny01() {
                            for a in &rels(z, x) {
                                for b in &rels(z, y) {
                                    for cc in &rels(z, g) {
                                        for d in &rels(z, y) {
                                            inst(ctx, a, b, cc, d);
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
            while ctx.more() {
                let (z, x, y, g) = (
                    ctx.universe(3),
                    ctx.universe(3),
                    ctx.universe(3),
                    ctx.universe(3),
                );
                let (a, b, cc, d) = (
                    ctx.relation(&z, &x),
                    ctx.relation(&z, &y),
                    ctx.relation(&z, &g),
                    ctx.relation(&z, &y),
                );
                inst(ctx, &a, &b, &cc, &d);
            }
        },
    );

    law(
        v,
        Suite::Prodsum,
        "kronecker-top-masks",
        "kron(A,B)*T == join(A*T,B*T); kron(A,B) & join(C*T,D*T) == kron(A & C*T, B & D*T)",
        |ctx| {
            let inst: fn(&mut Ctx, &Relation, &Relation, &Relation, &Relation) =
                |ctx, a, b, cc, d| {
                    // a : X→U, b : Y→W, cc : X→K, d : Y→K.
                    let k = kronecker(a, b).unwrap();
                    let g = cc.tgt();
                    let p1 = c(&k, &top(k.tgt(), g))
                        == join(&c(a, &top(a.tgt(), g)), &c(b, &top(b.tgt(), g))).unwrap();
                    let prod_uw = k.tgt();
                    let cm = c(cc, &top(g, prod_uw));
                    let dm = c(d, &top(g, prod_uw));
                    let cu = c(cc, &top(g, a.tgt()));
                    let dw = c(d, &top(g, b.tgt()));
                    let p2 = meet(&k, &join(&cm, &dm).unwrap())
                        == kronecker(&meet(a, &cu), &meet(b, &dw)).unwrap();
                    ctx.check(p1 && p2, || {
                        cx(&[("A", a), ("B", b), ("C", cc), ("D", d)])
                    });
                };
            for x in &tiny01() {
                for y in &tiny01() {
                    for u in &tiny01() {
                        for w in &tiny01() {
                            for g in &tiny01() {
                                for a in &rels(x, u) {
                                    for b in &rels(y, w) {
                                        for cc in &rels(x, g) {
                                            for d in &rels(y, g) {
                                                inst(ctx, a, b, cc, d);
                                            }
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
            while ctx.more() {
                let (x, y, u, w, g) = (
                    ctx.universe(3),
                    ctx.universe(3),
                    ctx.universe(3),
                    ctx.universe(3),
                    ctx.universe(3),
                );
                let (a, b) = (ctx.relation(&x, &u), ctx.relation(&y, &w));
                let (cc, d) = (ctx.relation(&x, &g), ctx.relation(&y, &g));
                inst(ctx, &a, &b, &cc, &d);
            }
        },
    );

    law(
        v,
        Suite::Prodsum,
        "kronecker-univalent-factors",
        "f,g univalent: kron(f,g)*kron(A,B) == kron(f*A,g*B); C univalent: C*fork(A,B) == fork(C*A,C*B)",
        |ctx| {
            let inst: fn(&mut Ctx, &Relation, &Relation, &Relation, &Relation) =
                |ctx, f, g, a, b| {
                    if !f.is_univalent() || !g.is_univalent() {
                        return;
                    }
                    let ok = c(&kronecker(f, g).unwrap(), &kronecker(a, b).unwrap())
                        == kronecker(&c(f, a), &c(g, b)).unwrap();
                    ctx.check(ok, || cx(&[("f", f), ("g", g), ("A", a), ("B", b)]));
                };
            for x in &tiny01() {
                for y in &tiny01() {
                    for u in &tiny01() {
                        for w in &tiny01() {
                            for g2 in &tiny01() {
                                for f in &rels(x, u) {
                                    for g in &rels(y, w) {
                                        for a in &rels(u, g2) {
                                            for b in &rels(w, g2) {
                                                inst(ctx, f, g, a, b);
                                            }
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
            while ctx.more() {
                let (x, y, u, w, g2, h) = (
                    ctx.universe(3),
                    ctx.universe(3),
                    ctx.universe(3),
                    ctx.universe(3),
                    ctx.universe(3),
                    ctx.universe(3),
                );
                let (f, g) = (ctx.partial_map(&x, &u), ctx.partial_map(&y, &w));
                let (a, b) = (ctx.relation(&u, &g2), ctx.relation(&w, &h));
                inst(ctx, &f, &g, &a, &b);
                // univalent pre-composition with fork
                let cu = ctx.partial_map(&x, &u);
                let (aa, bb) = (ctx.relation(&u, &g2), ctx.relation(&u, &h));
                let ok = c(&cu, &fork(&aa, &bb).unwrap())
                    == fork(&c(&cu, &aa), &c(&cu, &bb)).unwrap();
                ctx.check(ok, || cx(&[("C", &cu), ("A", &aa), ("B", &bb)]));
            }
        },
    );

    law(
        v,
        Suite::Prodsum,
        "zierer-equality",
        "fork(R,S)*join(P,Q) == R*P & S*Q; fork(R,I)*kron(I,S) == fork(R,S)",
        |ctx| {
            let inst: fn(&mut Ctx, &Relation, &Relation, &Relation, &Relation) =
                |ctx, r, s, p, q| {
                    let lhs = c(&fork(r, s).unwrap(), &join(p, q).unwrap());
                    let rhs = meet(&c(r, p), &c(s, q));
                    ctx.check(lhs == rhs, || cx(&[("R", r), ("S", s), ("P", p), ("Q", q)]));
                };
            for z in &tiny01() {
                for x in &tiny01() {
                    for y in &tiny01() {
                        for w in &tiny01() {
                            for r in &rels(z, x) {
                                for s in &rels(z, y) {
                                    for p in &rels(x, w) {
                                        for q in &rels(y, w) {
                                            inst(ctx, r, s, p, q);
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
            while ctx.more() {
                let (z, x, y, w) = (
                    ctx.universe(POW),
                    ctx.universe(POW),
                    ctx.universe(POW),
                    ctx.universe(POW),
                );
                let (r, s) = (ctx.relation(&z, &x), ctx.relation(&z, &y));
                let (p, q) = (ctx.relation(&x, &w), ctx.relation(&y, &w));
                inst(ctx, &r, &s, &p, &q);
                let ok = c(&fork(&r, &id(&z)).unwrap(), &kronecker(&id(&x), &s).unwrap())
                    == fork(&r, &s).unwrap();
                ctx.check(ok, || cx(&[("R", &r), ("S", &s)]));
            }
        },
    );

    law(
        v,
        Suite::Prodsum,
        "residual-fork-distribution",
        "A\\fork(B,C) == fork(A\\B, A\\C); kron(R\\R, S\\S) <= fork(R,S)\\fork(R,S)",
        |ctx| {
            let inst: Check3 = |ctx, a, b, cc| {
                let lhs = rres(a, &fork(b, cc).unwrap());
                let rhs = fork(&rres(a, b), &rres(a, cc)).unwrap();
                ctx.check(lhs == rhs, || cx(&[("A", a), ("B", b), ("C", cc)]));
            };
            for z in &tiny() {
                for x in &tiny() {
                    for y in &tiny() {
                        for w in &tiny() {
                            if z.size() + x.size() + y.size() + w.size() > 7 {
                                continue;
                            }
                            for a in &rels(z, x) {
                                for b in &rels(z, y) {
                                    for cc in &rels(z, w) {
                                        inst(ctx, a, b, cc);
                                    }
                                }
                            }
                        }
                    }
                }
            }
            while ctx.more() {
                let z = ctx.universe(3);
                let (x, y, w) = (ctx.universe(3), ctx.universe(3), ctx.universe(3));
                let (a, b, cc) = (
                    ctx.relation(&z, &x),
                    ctx.relation(&z, &y),
                    ctx.relation(&z, &w),
                );
                inst(ctx, &a, &b, &cc);
                let (r, s) = (ctx.relation(&z, &x), ctx.relation(&z, &y));
                let fr = fork(&r, &s).unwrap();
                let ok = leq(
                    &kronecker(&rres(&r, &r), &rres(&s, &s)).unwrap(),
                    &rres(&fr, &fr),
                );
                ctx.check(ok, || cx(&[("R", &r), ("S", &s)]));
            }
        },
    );

    law(
        v,
        Suite::Prodsum,
        "swap-rearrange",
        "P and T are bijective mappings; P*kron(R,S) == kron(S,R)*P'; P*join(R,S) == join(S,R); fork(R,S)*P' == fork(S,R); T rebrackets kron and fork",
        |ctx| {
            let inst: fn(&mut Ctx, &Relation, &Relation) = |ctx, r, s| {
                // r : X→U, s : Y→W.
                let p = swap(r.src(), s.src()).unwrap();
                let p2 = swap(r.tgt(), s.tgt()).unwrap();
                let mut ok = p.is_mapping() && p.is_injective() && p.is_surjective();
                ok = ok && p.converse() == swap(s.src(), r.src()).unwrap();
                ok = ok && c(&p, &kronecker(s, r).unwrap()) == c(&kronecker(r, s).unwrap(), &p2);
                // formula route for swap
                let w1 = product(r.src(), s.src()).unwrap();
                let w2 = product(s.src(), r.src()).unwrap();
                ok = ok
                    && p == meet(
                        &c(&w1.pi, &w2.rho.converse()),
                        &c(&w1.rho, &w2.pi.converse()),
                    );
                ctx.check(ok, || cx(&[("R", r), ("S", s)]));
            };
            for x in &tiny01() {
                for y in &tiny01() {
                    for u in &tiny01() {
                        for w in &tiny01() {
                            for r in &rels(x, u) {
                                for s in &rels(y, w) {
                                    inst(ctx, r, s);
                                }
                            }
                        }
                    }
                }
            }
            while ctx.more() {
                let (x, y, u, w) = (
                    ctx.universe(3),
                    ctx.universe(3),
                    ctx.universe(3),
                    ctx.universe(3),
                );
                let (r, s) = (ctx.relation(&x, &u), ctx.relation(&y, &w));
                inst(ctx, &r, &s);
                // join/fork swaps and the rebracketing T
                let z = ctx.universe(3);
                let (e, f) = (ctx.relation(&x, &z), ctx.relation(&y, &z));
                let p = swap(&x, &y).unwrap();
                let ok = c(&p.converse(), &join(&e, &f).unwrap()) == join(&f, &e).unwrap();
                ctx.check(ok, || cx(&[("E", &e), ("F", &f)]));
                let (g, h) = (ctx.relation(&z, &x), ctx.relation(&z, &y));
                let pz = swap(&y, &x).unwrap();
                let ok = c(&fork(&g, &h).unwrap(), &pz.converse())
                    == fork(&h, &g).unwrap();
                ctx.check(ok, || cx(&[("G", &g), ("H", &h)]));
                let zc = ctx.universe(2);
                let (q2, r2, s2) = (
                    ctx.relation(&x, &y),
                    ctx.relation(&z, &u),
                    ctx.relation(&zc, &w),
                );
                let t = assoc(&x, &z, &zc).unwrap();
                let t2 = assoc(&y, &u, &w).unwrap();
                let lhs = c(&t, &kronecker(&q2, &kronecker(&r2, &s2).unwrap()).unwrap());
                let rhs = c(&kronecker(&kronecker(&q2, &r2).unwrap(), &s2).unwrap(), &t2);
                let mut ok = lhs == rhs && t.is_mapping() && t.is_injective() && t.is_surjective();
                let a2 = ctx.universe(2);
                let (qa, ra, sa) = (
                    ctx.relation(&a2, &x),
                    ctx.relation(&a2, &z),
                    ctx.relation(&a2, &zc),
                );
                let tf = assoc(&x, &z, &zc).unwrap();
                ok = ok
                    && fork(&qa, &fork(&ra, &sa).unwrap()).unwrap()
                        == c(&fork(&fork(&qa, &ra).unwrap(), &sa).unwrap(), &tf);
                ctx.check(ok, || cx(&[("Q", &q2), ("R", &r2), ("S", &s2)]));
            }
        },
    );

    law(
        v,
        Suite::Prodsum,
        "vec-unvec-roundtrip",
        "unvec(vec(R)) == R; vec(unvec(v)) == v; vec matches (pi*R & rho)*T",
        |ctx| {
            let inst: fn(&mut Ctx, &Relation) = |ctx, r| {
                let ve = vec_rel(r).unwrap();
                let w = product(r.src(), r.tgt()).unwrap();
                let formula = c(
                    &meet(&c(&w.pi, r), &w.rho),
                    &unit_top(r.tgt()),
                );
                let ok = unvec(&ve).unwrap() == *r && ve == formula && ve.is_vector();
                ctx.check(ok, || cx(&[("R", r)]));
            };
            for x in &tiny() {
                for y in &tiny() {
                    for r in &rels(x, y) {
                        inst(ctx, r);
                    }
                }
            }
            while ctx.more() {
                let (x, y) = (ctx.universe(POW), ctx.universe(POW));
                let r = ctx.relation(&x, &y);
                inst(ctx, &r);
                // vector side of the round trip
                let pair = Universe::pair(&x, &y).unwrap();
                let pairs: Vec<(usize, usize)> = (0..pair.size())
                    .filter(|_| ctx.rng.gen_bool(0.5))
                    .map(|i| (i, 0))
                    .collect();
                let vv = Relation::from_pairs(&pair, &Universe::unit(), &pairs).unwrap();
                let ok = vec_rel(&unvec(&vv).unwrap()).unwrap() == vv;
                ctx.check(ok, || cx(&[("v", &vv)]));
            }
        },
    );

    law(
        v,
        Suite::Prodsum,
        "relation-point-encoding",
        "relation_point == syq(eps, vec R); decodes back; I/0/T points decode to I/0/T",
        |ctx| {
            let inst: fn(&mut Ctx, &Relation) = |ctx, r| {
                let pt = relation_point(r).unwrap();
                let pair = Universe::pair(r.src(), r.tgt()).unwrap();
                let eps = membership(&pair).unwrap().epsilon;
                let ok = pt == syq(&eps, &vec_rel(r).unwrap())
                    && pt.is_point()
                    && point_decode(&pt).unwrap() == *r
                    && point_decode(&identity_point(r.src()).unwrap()).unwrap() == id(r.src())
                    && point_decode(&bot_point(r.src(), r.tgt()).unwrap()).unwrap()
                        == Relation::bottom(r.src(), r.tgt())
                    && point_decode(&top_point(r.src(), r.tgt()).unwrap()).unwrap()
                        == top(r.src(), r.tgt());
                ctx.check(ok, || cx(&[("R", r)]));
            };
            for x in &tiny() {
                for y in &tiny() {
                    for r in &rels(x, y) {
                        inst(ctx, r);
                    }
                }
            }
            while ctx.more() {
                let (x, y) = (ctx.universe(3), ctx.universe(3));
                let r = ctx.relation(&x, &y);
                inst(ctx, &r);
            }
        },
    );

    law(
        v,
        Suite::Prodsum,
        "transposition-point-map",
        "Tm == syq(P^*eps, eps'); Tm bijective; Tm*eps'^ == eps^*P; vec(R^) == P*vec(R); unvec(~v) == ~unvec(v)",
        |ctx| {
            let inst: fn(&mut Ctx, &Relation) = |ctx, r| {
                let x = r.src();
                let y = r.tgt();
                let tm = transposition_point_map(x, y).unwrap();
                let p = swap(x, y).unwrap();
                let pair = Universe::pair(x, y).unwrap();
                let pair_t = Universe::pair(y, x).unwrap();
                let eps = membership(&pair).unwrap().epsilon;
                let eps_t = membership(&pair_t).unwrap().epsilon;
                let formula = syq(&c(&p.converse(), &eps), &eps_t);
                let ve = vec_rel(r).unwrap();
                let w = product(x, y).unwrap();
                let w2 = product(y, x).unwrap();
                let ok = tm == formula
                    && tm.is_mapping()
                    && tm.is_injective()
                    && tm.is_surjective()
                    && c(&tm, &eps_t.converse()) == c(&eps.converse(), &p)
                    && c(&p, &w2.rho) == w.pi
                    && c(&p, &w2.pi) == w.rho
                    && c(&p.converse(), &w.pi) == w2.rho
                    && c(&p.converse(), &w.rho) == w2.pi
                    && vec_rel(&r.converse()).unwrap() == c(&swap(y, x).unwrap(), &ve)
                    && unvec(&ve.negate()).unwrap() == r.negate()
                    && vec_rel(&r.negate()).unwrap() == ve.negate();
                ctx.check(ok, || cx(&[("R", r)]));
            };
            for x in &tiny() {
                for y in &tiny() {
                    for r in &rels(x, y) {
                        inst(ctx, r);
                    }
                }
            }
            while ctx.more() {
                let (x, y) = (ctx.universe(3), ctx.universe(3));
                let r = ctx.relation(&x, &y);
                inst(ctx, &r);
            }
        },
    );

    law(
        v,
        Suite::Prodsum,
        "addition-theorem",
        "syq(S, in^*Q*pi^ | kp^*R*rho^) == fork(syq(in*S,Q), syq(kp*S,R))",
        |ctx| {
            let inst: Check3 = |ctx, s, q, r| {
                ctx.check(addition_theorem_check(s, q, r).unwrap(), || {
                    cx(&[("S", s), ("Q", q), ("R", r)])
                });
            };
            for x in &tiny01() {
                for y in &tiny01() {
                    for w in &tiny01() {
                        for u in &tiny01() {
                            for g in &tiny01() {
                                let sw = sum(x, y).unwrap();
                                for s in &rels(&sw.universe, w) {
                                    for q in &rels(x, u) {
                                        for r in &rels(y, g) {
                                            inst(ctx, s, q, r);
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
            while ctx.more() {
                let (x, y, w, u, g) = (
                    ctx.universe(3),
                    ctx.universe(3),
                    ctx.universe(3),
                    ctx.universe(3),
                    ctx.universe(3),
                );
                let sw = sum(&x, &y).unwrap();
                let s = ctx.relation(&sw.universe, &w);
                let (q, r) = (ctx.relation(&x, &u), ctx.relation(&y, &g));
                inst(ctx, &s, &q, &r);
            }
        },
    );

    law(
        v,
        Suite::Prodsum,
        "sum-powerset-iso",
        "phi == syq(eps', eps+) is a bijection; eps'*phi == eps+; Om+ == kron(Om,Om); Om'*phi == phi*Om+",
        |ctx| {
            let inst: fn(&mut Ctx, &Universe, &Universe) = |ctx, x, y| {
                let iso = sum_power_iso(x, y).unwrap();
                let eps_x = membership(x).unwrap();
                let eps_y = membership(y).unwrap();
                let b_sum = membership(&iso.sum.universe).unwrap();
                let ep = &iso.epsilon_plus;
                let (iota, kappa) = (&iso.sum.iota, &iso.sum.kappa);
                let (pi, rho) = (&iso.product.pi, &iso.product.rho);
                let mut ok = c(iota, ep) == c(&eps_x.epsilon, &pi.converse())
                    && c(&c(iota, ep), pi) == eps_x.epsilon
                    && c(kappa, ep) == c(&eps_y.epsilon, &rho.converse())
                    && c(&c(kappa, ep), rho) == eps_y.epsilon
                    && syq(&c(iota, ep), &eps_x.epsilon) == *pi
                    && syq(&c(kappa, ep), &eps_y.epsilon) == *rho;
                let phi = &iso.phi;
                let eps_s = &b_sum.epsilon;
                ok = ok
                    && *phi
                        == meet(
                            &c(&syq(&c(iota, eps_s), &eps_x.epsilon), &pi.converse()),
                            &c(&syq(&c(kappa, eps_s), &eps_y.epsilon), &rho.converse()),
                        )
                    && c(phi, pi) == syq(&c(iota, eps_s), &eps_x.epsilon)
                    && c(phi, rho) == syq(&c(kappa, eps_s), &eps_y.epsilon)
                    && phi.is_mapping()
                    && phi.is_injective()
                    && phi.is_surjective()
                    && c(eps_s, phi) == *ep
                    && c(ep, &phi.converse()) == *eps_s
                    && syq(&c(pi, &eps_x.epsilon.converse()), &ep.converse()) == *iota
                    && syq(&c(rho, &eps_y.epsilon.converse()), &ep.converse()) == *kappa
                    && syq(ep, ep) == id(ep.tgt());
                let om_plus = c(&ep.converse(), &ep.negate()).negate();
                ok = ok
                    && om_plus.is_order().unwrap()
                    && om_plus == kronecker(&eps_x.omega, &eps_y.omega).unwrap()
                    && c(&b_sum.omega, phi) == c(phi, &om_plus);
                ctx.check(ok, || format!("summands {} and {}", x.name(), y.name()));
            };
            for x in &tiny() {
                for y in &tiny() {
                    inst(ctx, x, y);
                }
            }
            while ctx.more() {
                let (x, y) = (ctx.universe(POW), ctx.universe(POW));
                inst(ctx, &x, &y);
            }
        },
    );

    law(
        v,
        Suite::Prodsum,
        "section-maps",
        "x point: f == (rho & pi*x*T)^ and g == (pi & rho*x*T)^ are mappings; f*rho == I; rho <= f\\I; g*pi == I; pi <= g\\I",
        |ctx| {
            let inst: fn(&mut Ctx, &Relation) = |ctx, x| {
                let (f, g) = section_maps(x).unwrap();
                let u = x.src();
                let w = product(u, u).unwrap();
                let iu = id(u);
                let ok = f.is_mapping()
                    && g.is_mapping()
                    && c(&f, &w.rho) == iu
                    && leq(&w.rho, &rres(&f, &iu))
                    && c(&g, &w.pi) == iu
                    && leq(&w.pi, &rres(&g, &iu));
                ctx.check(ok, || cx(&[("x", x)]));
            };
            for u in &tiny() {
                for idx in 0..u.size() {
                    let x =
                        Relation::from_pairs(u, &Universe::unit(), &[(idx, 0)]).unwrap();
                    inst(ctx, &x);
                }
            }
            while ctx.more() {
                let u = ctx.universe_pos(GEN);
                let x = ctx.point(&u);
                inst(ctx, &x);
            }
        },
    );
}

fn binop_laws(v: &mut Vec<Law>) {
    law(
        v,
        Suite::Binop,
        "commutativity-route",
        "P*Op == Op  <->  x.y == y.x for all x,y",
        |ctx| {
            let inst: fn(&mut Ctx, &BinOp) = |ctx, op| {
                let n = op.carrier().size();
                let mut scan = true;
                for a in 0..n {
                    for b in 0..n {
                        scan &= op.apply(a, b) == op.apply(b, a);
                    }
                }
                ctx.check(op.is_commutative().unwrap() == scan, || {
                    cx(&[("Op", op.table())])
                });
            };
            for op in &tiny_ops() {
                inst(ctx, op);
            }
            while ctx.more() {
                let op = ctx.binop_variant(GEN);
                inst(ctx, &op);
            }
        },
    );

    law(
        v,
        Suite::Binop,
        "associativity-route",
        "(Op x I)*Op == T*(I x Op)*Op  <->  (x.y).z == x.(y.z) for all x,y,z",
        |ctx| {
            let inst: fn(&mut Ctx, &BinOp) = |ctx, op| {
                let n = op.carrier().size();
                let mut scan = true;
                for a in 0..n {
                    for b in 0..n {
                        for cc in 0..n {
                            scan &= op.apply(op.apply(a, b), cc) == op.apply(a, op.apply(b, cc));
                        }
                    }
                }
                ctx.check(op.is_associative().unwrap() == scan, || {
                    cx(&[("Op", op.table())])
                });
            };
            for op in &tiny_ops() {
                inst(ctx, op);
            }
            while ctx.more() {
                let op = ctx.binop_variant(POW);
                inst(ctx, &op);
            }
        },
    );

    law(
        v,
        Suite::Binop,
        "invertibility-route",
        "left/right invertible vectors match the solvability scan; allows-inversion iff the vector is full",
        |ctx| {
            let inst: fn(&mut Ctx, &BinOp) = |ctx, op| {
                let n = op.carrier().size();
                let mut left = Vec::new();
                let mut right = Vec::new();
                for x in 0..n {
                    let l = (0..n).all(|z| (0..n).any(|b| op.apply(x, b) == z));
                    let r = (0..n).all(|z| (0..n).any(|a| op.apply(a, x) == z));
                    if l {
                        left.push((x, 0));
                    }
                    if r {
                        right.push((x, 0));
                    }
                }
                let one = Universe::unit();
                let lv = Relation::from_pairs(op.carrier(), &one, &left).unwrap();
                let rv = Relation::from_pairs(op.carrier(), &one, &right).unwrap();
                let ok = op.left_invertible_elements().unwrap() == lv
                    && op.right_invertible_elements().unwrap() == rv
                    && op.allows_left_inversion().unwrap() == (lv == unit_top(op.carrier()))
                    && op.allows_right_inversion().unwrap() == (rv == unit_top(op.carrier()));
                ctx.check(ok, || cx(&[("Op", op.table())]));
            };
            for op in &tiny_ops() {
                inst(ctx, op);
            }
            while ctx.more() {
                let op = ctx.binop_variant(GEN);
                inst(ctx, &op);
            }
        },
    );

    law(
        v,
        Suite::Binop,
        "center-route",
        "invariant elements == elements commuting with everything",
        |ctx| {
            let inst: fn(&mut Ctx, &BinOp) = |ctx, op| {
                ctx.check(
                    op.invariant_elements().unwrap()
                        == oracle_invariant_elements(op.table()).unwrap(),
                    || cx(&[("Op", op.table())]),
                );
            };
            for op in &tiny_ops() {
                inst(ctx, op);
            }
            while ctx.more() {
                let op = ctx.binop_variant(GEN);
                inst(ctx, &op);
            }
        },
    );

    law(
        v,
        Suite::Binop,
        "neutrality-routes",
        "right/left neutral vectors match the scan; the partial-identity route agrees",
        |ctx| {
            let inst: fn(&mut Ctx, &BinOp) = |ctx, op| {
                let n = op.carrier().size();
                let mut rn = Vec::new();
                let mut ln = Vec::new();
                for e in 0..n {
                    if (0..n).all(|x| op.apply(x, e) == x) {
                        rn.push((e, 0));
                    }
                    if (0..n).all(|y| op.apply(e, y) == y) {
                        ln.push((e, 0));
                    }
                }
                let one = Universe::unit();
                let rv = Relation::from_pairs(op.carrier(), &one, &rn).unwrap();
                let lv = Relation::from_pairs(op.carrier(), &one, &ln).unwrap();
                let ok = op.right_neutrals().unwrap() == rv
                    && op.left_neutrals().unwrap() == lv
                    && op.right_neutrals_alt().unwrap() == rv
                    && op.neutrals().unwrap() == meet(&rv, &lv);
                ctx.check(ok, || cx(&[("Op", op.table())]));
            };
            for op in &tiny_ops() {
                inst(ctx, op);
            }
            while ctx.more() {
                let op = ctx.binop_variant(GEN);
                inst(ctx, &op);
            }
        },
    );

    law(
        v,
        Suite::Binop,
        "neutral-recovery",
        "e right neutral point: Op^*(pi & rho*e*T) == I",
        |ctx| {
            let inst: fn(&mut Ctx, &BinOp) = |ctx, op| {
                let rn = op.right_neutrals().unwrap();
                let mut checked = false;
                for (e, _) in rn.pairs() {
                    let pt = Relation::from_pairs(op.carrier(), &Universe::unit(), &[(e, 0)])
                        .unwrap();
                    let w = op.product();
                    let col = c(&c(&w.rho, &pt), &unit_top(op.carrier()).converse());
                    let ok = c(&op.table().converse(), &meet(&w.pi, &col)) == id(op.carrier());
                    checked = true;
                    ctx.check(ok, || cx(&[("Op", op.table()), ("e", &pt)]));
                }
                if !checked {
                    // no right neutral: the statement is vacuous; still count.
                    ctx.check(true, String::new);
                }
            };
            for op in &tiny_ops() {
                inst(ctx, op);
            }
            while ctx.more() {
                let op = ctx.binop_variant(GEN);
                inst(ctx, &op);
            }
        },
    );

    law(
        v,
        Suite::Binop,
        "neutral-uniqueness",
        "a left neutral and a right neutral force a unique two-sided neutral",
        |ctx| {
            let inst: fn(&mut Ctx, &BinOp) = |ctx, op| {
                let rn = op.right_neutrals().unwrap();
                let ln = op.left_neutrals().unwrap();
                let ok = if !rn.is_empty_relation() && !ln.is_empty_relation() {
                    rn == ln && rn.count() == 1 && op.neutrals().unwrap() == rn
                } else {
                    true
                };
                ctx.check(ok, || cx(&[("Op", op.table())]));
            };
            for op in &tiny_ops() {
                inst(ctx, op);
            }
            while ctx.more() {
                let op = ctx.binop_variant(GEN);
                inst(ctx, &op);
            }
        },
    );

    law(
        v,
        Suite::Binop,
        "right-inverse-map",
        "i(x,z) <-> x.z == e; surjective when the operation allows right inversion",
        |ctx| {
            let inst: fn(&mut Ctx, &BinOp, usize) = |ctx, op, e| {
                let n = op.carrier().size();
                let pt =
                    Relation::from_pairs(op.carrier(), &Universe::unit(), &[(e, 0)]).unwrap();
                let inv = op.right_inverse_map(&pt).unwrap();
                let mut pairs = Vec::new();
                for x in 0..n {
                    for z in 0..n {
                        if op.apply(x, z) == e {
                            pairs.push((x, z));
                        }
                    }
                }
                let scan = Relation::from_pairs(op.carrier(), op.carrier(), &pairs).unwrap();
                let mut ok = inv == scan;
                if op.allows_right_inversion().unwrap() {
                    ok = ok && inv.is_surjective();
                }
                ctx.check(ok, || cx(&[("Op", op.table()), ("e", &pt)]));
            };
            for op in &tiny_ops() {
                for e in 0..op.carrier().size() {
                    inst(ctx, op, e);
                }
            }
            while ctx.more() {
                let op = ctx.binop_variant(GEN);
                let e = ctx.rng.gen_range(0..op.carrier().size());
                inst(ctx, &op, e);
            }
        },
    );

    law(
        v,
        Suite::Binop,
        "distributivity-route",
        "fork((pi x I)*J, (rho x I)*J)*M == (M x I)*J  <->  J(M(a,b),c) == M(J(a,c),J(b,c))",
        |ctx| {
            let inst: fn(&mut Ctx, &BinOp, &BinOp) = |ctx, j, m| {
                let n = j.carrier().size();
                let mut scan = true;
                for a in 0..n {
                    for b in 0..n {
                        for cc in 0..n {
                            scan &= j.apply(m.apply(a, b), cc)
                                == m.apply(j.apply(a, cc), j.apply(b, cc));
                        }
                    }
                }
                ctx.check(j.distributes_over(m).unwrap() == scan, || {
                    cx(&[("J", j.table()), ("M", m.table())])
                });
            };
            let ops = tiny_ops();
            for j in &ops {
                for m in &ops {
                    if j.carrier() == m.carrier() {
                        inst(ctx, j, m);
                    }
                }
            }
            while ctx.more() {
                let j = ctx.binop_variant(3);
                let table: Vec<Vec<usize>> = (0..j.carrier().size())
                    .map(|_| {
                        (0..j.carrier().size())
                            .map(|_| ctx.rng.gen_range(0..j.carrier().size()))
                            .collect()
                    })
                    .collect();
                let m = BinOp::from_table(j.carrier(), &table).unwrap();
                inst(ctx, &j, &m);
            }
        },
    );

    law(
        v,
        Suite::Binop,
        "carrier-swap-identities",
        "on the operation's carrier: P^ == P flipped; P*Op has the swapped table; T is a bijective mapping",
        |ctx| {
            let inst: fn(&mut Ctx, &BinOp) = |ctx, op| {
                let u = op.carrier();
                let p = swap(u, u).unwrap();
                let n = u.size();
                let swapped = Relation::from_fn(&op.product().universe, u, |i, z| {
                    op.apply(i % n.max(1), i / n.max(1)) == z
                });
                let t = assoc(u, u, u).unwrap();
                let ok = p.converse() == p
                    && c(&p, op.table()) == swapped
                    && t.is_mapping()
                    && t.is_injective()
                    && t.is_surjective();
                ctx.check(ok, || cx(&[("Op", op.table())]));
            };
            for op in &tiny_ops() {
                inst(ctx, op);
            }
            while ctx.more() {
                let op = ctx.binop_variant(POW);
                inst(ctx, &op);
            }
        },
    );
}

fn boolalg_laws(v: &mut Vec<Law>) {
    law(
        v,
        Suite::Boolalg,
        "complement-bijection",
        "~eps*N == eps; eps*N == ~eps; N <= ~(eps^*eps); Om*N == ~(eps^*eps); N*N == I",
        |ctx| {
            let inst: fn(&mut Ctx, &Universe) = |ctx, base| {
                let alg = lifted(base).unwrap();
                let eps = &alg.bundle.epsilon;
                let overlap = c(&eps.converse(), eps);
                let ok = c(&eps.negate(), &alg.n) == *eps
                    && c(eps, &alg.n) == eps.negate()
                    && leq(&alg.n, &overlap.negate())
                    && c(&alg.bundle.omega, &alg.n) == overlap.negate()
                    && c(&alg.n, &alg.n) == id(&alg.bundle.power)
                    && alg.n.is_mapping()
                    && alg.n.is_injective()
                    && alg.n.is_surjective();
                ctx.check(ok, || format!("base {}", base.name()));
            };
            for base in &tiny() {
                inst(ctx, base);
            }
            while ctx.more() {
                let base = ctx.universe(LIFT);
                inst(ctx, &base);
            }
        },
    );

    law(
        v,
        Suite::Boolalg,
        "meet-join-routes",
        "J == syq(eps*pi^ | eps*rho^, eps) == lubR(pi|rho) == syq(fork(~eps,~eps), ~eps); M dually",
        |ctx| {
            let inst: fn(&mut Ctx, &Universe) = |ctx, base| {
                let alg = lifted(base).unwrap();
                let b = &alg.bundle;
                let eps = &b.epsilon;
                let w = product(&b.power, &b.power).unwrap();
                let proj = ju(&w.pi, &w.rho);
                let j2 = b.lub_rows(&proj.converse().converse()).unwrap();
                let j3 = syq(
                    &fork(&eps.negate(), &eps.negate()).unwrap(),
                    &eps.negate(),
                );
                let m2 = b.glb_rows(&proj).unwrap();
                let m3 = syq(&fork(eps, eps).unwrap(), eps);
                let ok = alg.join == j2 && alg.join == j3 && alg.meet == m2 && alg.meet == m3;
                ctx.check(ok, || format!("base {}", base.name()));
            };
            for base in &tiny() {
                inst(ctx, base);
            }
            while ctx.more() {
                let base = ctx.universe(LIFT);
                inst(ctx, &base);
            }
        },
    );

    law(
        v,
        Suite::Boolalg,
        "membership-of-meet-join",
        "eps*J^ == eps*pi^ | eps*rho^; eps*M^ == fork(eps,eps)",
        |ctx| {
            let inst: fn(&mut Ctx, &Universe) = |ctx, base| {
                let alg = lifted(base).unwrap();
                let eps = &alg.bundle.epsilon;
                let w = product(&alg.bundle.power, &alg.bundle.power).unwrap();
                let ok = c(eps, &alg.join.converse())
                    == ju(&c(eps, &w.pi.converse()), &c(eps, &w.rho.converse()))
                    && c(eps, &alg.meet.converse()) == fork(eps, eps).unwrap();
                ctx.check(ok, || format!("base {}", base.name()));
            };
            for base in &tiny() {
                inst(ctx, base);
            }
            while ctx.more() {
                let base = ctx.universe(LIFT);
                inst(ctx, &base);
            }
        },
    );

    law(
        v,
        Suite::Boolalg,
        "demorgan-lifted",
        "NN*pi == pi*N; NN*rho == rho*N; NN*M == J*N",
        |ctx| {
            let inst: fn(&mut Ctx, &Universe) = |ctx, base| {
                let alg = lifted(base).unwrap();
                let nn = alg.nn().unwrap();
                let w = product(&alg.bundle.power, &alg.bundle.power).unwrap();
                let ok = c(&nn, &w.pi) == c(&w.pi, &alg.n)
                    && c(&nn, &w.rho) == c(&w.rho, &alg.n)
                    && c(&nn, &alg.meet) == c(&alg.join, &alg.n);
                ctx.check(ok, || format!("base {}", base.name()));
            };
            for base in &tiny() {
                inst(ctx, base);
            }
            while ctx.more() {
                let base = ctx.universe(LIFT);
                inst(ctx, &base);
            }
        },
    );

    law(
        v,
        Suite::Boolalg,
        "order-of-meet-join",
        "M^*pi == Om == M^*rho; J^*pi == Om^ == J^*rho; M*Om^ == join(Om^,Om^); J*Om == join(Om,Om); join(Om,I) <= J; join(I,Om) <= J",
        |ctx| {
            let inst: fn(&mut Ctx, &Universe) = |ctx, base| {
                let alg = lifted(base).unwrap();
                let om = &alg.bundle.omega;
                let w = product(&alg.bundle.power, &alg.bundle.power).unwrap();
                let ip = id(&alg.bundle.power);
                let ok = c(&alg.meet.converse(), &w.pi) == *om
                    && c(&alg.meet.converse(), &w.rho) == *om
                    && c(&alg.join.converse(), &w.pi) == om.converse()
                    && c(&alg.join.converse(), &w.rho) == om.converse()
                    && c(&alg.meet, &om.converse())
                        == join(&om.converse(), &om.converse()).unwrap()
                    && c(&alg.join, om) == join(om, om).unwrap()
                    && leq(&join(om, &ip).unwrap(), &alg.join)
                    && leq(&join(&ip, om).unwrap(), &alg.join);
                ctx.check(ok, || format!("base {}", base.name()));
            };
            for base in &tiny() {
                inst(ctx, base);
            }
            while ctx.more() {
                let base = ctx.universe(LIFT);
                inst(ctx, &base);
            }
        },
    );

    law(
        v,
        Suite::Boolalg,
        "absorption-lifted",
        "fork(eps,eps)*M == eps; (eps*pi^ | eps*rho^)*J == eps; fork(eps,eps)*kron(Om,Om) == fork(eps,eps); (pi^ & rho^*M*rho^)*J == I; (pi^ & rho^*J*rho^)*M == I",
        |ctx| {
            let inst: fn(&mut Ctx, &Universe) = |ctx, base| {
                let alg = lifted(base).unwrap();
                let eps = &alg.bundle.epsilon;
                let om = &alg.bundle.omega;
                let w = product(&alg.bundle.power, &alg.bundle.power).unwrap();
                let fe = fork(eps, eps).unwrap();
                let ue = ju(&c(eps, &w.pi.converse()), &c(eps, &w.rho.converse()));
                let ip = id(&alg.bundle.power);
                let absorb = |outer: &Relation, inner: &Relation| {
                    c(
                        &meet(
                            &w.pi.converse(),
                            &c(&c(&w.rho.converse(), outer), &w.rho.converse()),
                        ),
                        inner,
                    )
                };
                let ok = c(&fe, &alg.meet) == *eps
                    && c(&ue, &alg.join) == *eps
                    && c(&fe, &kronecker(om, om).unwrap()) == fe
                    && absorb(&alg.meet, &alg.join) == ip
                    && absorb(&alg.join, &alg.meet) == ip;
                ctx.check(ok, || format!("base {}", base.name()));
            };
            for base in &tiny() {
                inst(ctx, base);
            }
            while ctx.more() {
                let base = ctx.universe(LIFT);
                inst(ctx, &base);
            }
        },
    );

    law(
        v,
        Suite::Boolalg,
        "meet-syq-exchange",
        "M^*syq(fork(eps,eps), X) == syq(fork(eps,eps)*M, X)",
        |ctx| {
            let inst: fn(&mut Ctx, &Relation) = |ctx, x| {
                let alg = lifted(x.src()).unwrap();
                let fe = fork(&alg.bundle.epsilon, &alg.bundle.epsilon).unwrap();
                let lhs = c(&alg.meet.converse(), &syq(&fe, x));
                let rhs = syq(&c(&fe, &alg.meet), x);
                ctx.check(lhs == rhs, || cx(&[("X", x)]));
            };
            for base in &tiny() {
                for k in &tiny() {
                    for x in &rels(base, k) {
                        inst(ctx, x);
                    }
                }
            }
            while ctx.more() {
                let base = ctx.universe(LIFT);
                let k = ctx.universe(3);
                let x = ctx.relation(&base, &k);
                inst(ctx, &x);
            }
        },
    );

    law(
        v,
        Suite::Boolalg,
        "point-meet-join",
        "points c,d: s == M^*join(c,d) is the point of the intersection; Om*s == Om*c & Om*d; dually for J",
        |ctx| {
            let inst: fn(&mut Ctx, &Universe, usize, usize) = |ctx, base, ci, di| {
                let alg = lifted(base).unwrap();
                let om = &alg.bundle.omega;
                let eps = &alg.bundle.epsilon;
                let one = Universe::unit();
                let cp = Relation::from_pairs(&alg.bundle.power, &one, &[(ci, 0)]).unwrap();
                let dp = Relation::from_pairs(&alg.bundle.power, &one, &[(di, 0)]).unwrap();
                let s = c(&alg.meet.converse(), &join(&cp, &dp).unwrap());
                let t = c(&alg.join.converse(), &join(&cp, &dp).unwrap());
                let ok = s.is_point()
                    && s == syq(eps, &meet(&c(eps, &cp), &c(eps, &dp)))
                    && c(om, &s) == meet(&c(om, &cp), &c(om, &dp))
                    && t.is_point()
                    && t == syq(eps, &ju(&c(eps, &cp), &c(eps, &dp)))
                    && c(&om.converse(), &t)
                        == meet(&c(&om.converse(), &cp), &c(&om.converse(), &dp));
                ctx.check(ok, || format!("base {} c={} d={}", base.name(), ci, di));
            };
            for base in &tiny() {
                let p = 1usize << base.size();
                for ci in 0..p {
                    for di in 0..p {
                        inst(ctx, base, ci, di);
                    }
                }
            }
            while ctx.more() {
                let base = ctx.universe(LIFT);
                let p = 1usize << base.size();
                let (ci, di) = (ctx.rng.gen_range(0..p), ctx.rng.gen_range(0..p));
                inst(ctx, &base, ci, di);
            }
        },
    );

    law(
        v,
        Suite::Boolalg,
        "meet-join-operations",
        "pi & rho is univalent and surjective and below M and J; M,J surjective mappings; M commutative/associative; J distributes over M and M over J; kron(Om,Om)*M == M*Om",
        |ctx| {
            let inst: fn(&mut Ctx, &Universe) = |ctx, base| {
                let alg = lifted(base).unwrap();
                let om = &alg.bundle.omega;
                let w = product(&alg.bundle.power, &alg.bundle.power).unwrap();
                let diag = meet(&w.pi, &w.rho);
                let meet_op = alg.meet_op().unwrap();
                let join_op = alg.join_op().unwrap();
                let ok = diag.is_univalent()
                    && diag.is_surjective()
                    && leq(&diag, &alg.meet)
                    && leq(&diag, &alg.join)
                    && alg.meet.is_mapping()
                    && alg.meet.is_surjective()
                    && alg.join.is_mapping()
                    && alg.join.is_surjective()
                    && meet_op.is_commutative().unwrap()
                    && meet_op.is_associative().unwrap()
                    && join_op.is_commutative().unwrap()
                    && join_op.is_associative().unwrap()
                    && join_op.distributes_over(&meet_op).unwrap()
                    && meet_op.distributes_over(&join_op).unwrap()
                    && c(&kronecker(om, om).unwrap(), &alg.meet) == c(&alg.meet, om);
                ctx.check(ok, || format!("base {}", base.name()));
            };
            for base in &tiny() {
                inst(ctx, base);
            }
            while ctx.more() {
                let base = ctx.universe(LIFT);
                inst(ctx, &base);
            }
        },
    );

    law(
        v,
        Suite::Boolalg,
        "bottom-top-points",
        "bot/top are points; they decode to the empty and the full vector; N exchanges them; subset_of_point/point_to_subset round-trip",
        |ctx| {
            let inst: fn(&mut Ctx, &Universe, &Relation) = |ctx, base, u| {
                let alg = lifted(base).unwrap();
                let b = &alg.bundle;
                let one = Universe::unit();
                let pt = subset_of_point(b, u).unwrap();
                let ok = alg.bot_pt.is_point()
                    && alg.top_pt.is_point()
                    && point_to_subset(b, &alg.bot_pt).unwrap()
                        == Relation::bottom(base, &one)
                    && point_to_subset(b, &alg.top_pt).unwrap() == top(base, &one)
                    && c(&alg.n, &alg.bot_pt) == alg.top_pt
                    && c(&alg.n, &alg.top_pt) == alg.bot_pt
                    && pt.is_point()
                    && point_to_subset(b, &pt).unwrap() == *u;
                ctx.check(ok, || cx(&[("U", u)]));
            };
            for base in &tiny() {
                let one = Universe::unit();
                for u in &rels(base, &one) {
                    inst(ctx, base, u);
                }
            }
            while ctx.more() {
                let base = ctx.universe(LIFT);
                let one = Universe::unit();
                let pairs: Vec<(usize, usize)> = (0..base.size())
                    .filter(|_| ctx.rng.gen_bool(0.5))
                    .map(|i| (i, 0))
                    .collect();
                let u = Relation::from_pairs(&base, &one, &pairs).unwrap();
                inst(ctx, &base, &u);
            }
        },
    );
}
