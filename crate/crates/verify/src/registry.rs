//! The registry of every check, with stable ids, topic anchors and size requirements.

use crate::bounds::Bounds;
use crate::oracle::Koszul;
use crate::VerifyError;
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use simpforge_core::salg::{compose, morphisms_equal, simplex_tensor_morphism, vertex_restriction, ChainKey, ChainTable, Morphism, Presentation};
use simpforge_core::simplex::{
    check_simplex_relations, compose as compose_maps, delta, enumerate_maps, m_alpha, s_alpha, s_alpha_transformation_check, sigma,
    MonotoneMap,
};
use simpforge_core::{Certificate, Counterexample, Error, Family, Polynomial, Result, VarId};
use simpforge_doldkan::{assemble, homology, induced_map_on_homology, pi0, DenseMatrix, Weights};
use simpforge_homotopy::{HomotopyParams, Homotopies, Master};
use simpforge_hopf::{as_checks, check_hopf_axioms, generic_pi_check, pure_char_check, NamedCheck};
use simpforge_models::aux::{f_vs_g, f_vs_g_composite, phi_diagram, skip_diagram, skip_wraps, upsilon_diagram, DiagramCheck};
use simpforge_models::maps::{can_map, model, rho_action, skip_composite, zeta_descent_check, zeta_lift, zeta_quotient};
use simpforge_models::{AuxReading, DVector, Formulas, Layer, ModelId, Skip};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;
use std::sync::{Arc, OnceLock};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Simplex,
    Salg,
    Models,
    Homotopy,
    Homology,
    Hopf,
}

impl Suite {
    pub const ORDER: [Suite; 6] = [Suite::Simplex, Suite::Salg, Suite::Models, Suite::Homotopy, Suite::Homology, Suite::Hopf];

    pub fn as_str(self) -> &'static str {
        match self {
            Suite::Simplex => "simplex",
            Suite::Salg => "salg",
            Suite::Models => "models",
            Suite::Homotopy => "homotopy",
            Suite::Homology => "homology",
            Suite::Hopf => "hopf",
        }
    }

    /// Parse a suite name; `all` expands to every suite.
    pub fn parse_list(s: &str) -> std::result::Result<Vec<Suite>, VerifyError> {
        if s == "all" {
            return Ok(Suite::ORDER.to_vec());
        }
        Ok(vec![s.parse()?])
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Suite {
    type Err = VerifyError;

    fn from_str(s: &str) -> std::result::Result<Self, VerifyError> {
        Suite::ORDER
            .into_iter()
            .find(|x| x.as_str() == s)
            .ok_or_else(|| VerifyError::Config(format!("unknown suite `{s}`")))
    }
}

/// Sizes a check touches; it is skipped when any exceeds the run bounds.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Needs {
    pub p: usize,
    pub n: u32,
    pub mk: u32,
    pub w: u32,
    /// Set when the d-vector policy did not select this instance.
    pub unsampled: bool,
}

impl Needs {
    pub fn within(&self, b: &Bounds) -> bool {
        !self.unsampled && self.p <= b.p_max && self.n <= b.n_max && self.mk <= b.mk_max && self.w <= b.w_max
    }
}

/// Shared state of one run: formula configuration and memoized builders.
pub struct Ctx {
    pub fm: Formulas,
    pub homotopies: Homotopies,
    hopf_axioms: OnceLock<Vec<NamedCheck>>,
    pure_char: OnceLock<Vec<NamedCheck>>,
}

impl Ctx {
    pub fn new(fm: Formulas) -> Self {
        Ctx { fm, homotopies: Homotopies::new(fm), hopf_axioms: OnceLock::new(), pure_char: OnceLock::new() }
    }
}

type Runner = Arc<dyn Fn(&Ctx) -> Certificate + Send + Sync>;

pub struct CheckSpec {
    pub id: String,
    pub suite: Suite,
    pub anchor: &'static str,
    pub params: BTreeMap<String, String>,
    pub needs: Needs,
    run: Runner,
}

impl CheckSpec {
    /// The first two dot-separated components of the id.
    pub fn family(&self) -> String {
        self.id.splitn(3, '.').take(2).collect::<Vec<_>>().join(".")
    }

    pub fn execute(&self, ctx: &Ctx) -> Certificate {
        (self.run)(ctx)
    }
}

impl fmt::Debug for CheckSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CheckSpec").field("id", &self.id).field("params", &self.params).finish()
    }
}

/// Names produced by [`check_hopf_axioms`], in order.
pub const HOPF_AXIOM_NAMES: [&str; 15] = [
    "hopf.certify.sigma",
    "hopf.certify.tau",
    "hopf.certify.nabla",
    "hopf.certify.xi",
    "hopf.certify.alpha",
    "hopf.coassoc",
    "hopf.counit.left",
    "hopf.counit.right",
    "hopf.counit.source",
    "hopf.counit.target",
    "hopf.source",
    "hopf.target",
    "hopf.antipode.involution",
    "hopf.antipode.source",
    "hopf.antipode.target",
];

/// Names produced by [`pure_char_check`], in order.
pub const PURE_CHAR_NAMES: [&str; 10] = [
    "hopf.purechar.certify",
    "hopf.purechar.comult",
    "hopf.purechar.counit",
    "hopf.purechar.antipode",
    "hopf.purechar.cocommutative",
    "hopf.purechar.equivalence",
    "hopf.purechar.certify.pi0-codomain",
    "hopf.purechar.comult.pi0-codomain",
    "hopf.purechar.counit.pi0-codomain",
    "hopf.purechar.antipode.pi0-codomain",
];

fn lift(index: &str, r: Result<Certificate>) -> Certificate {
    r.unwrap_or_else(|e| Err(Counterexample::from_error(0, index, &e)))
}

fn all_of(checks: Result<Vec<DiagramCheck>>, index: &str) -> Certificate {
    for d in checks.map_err(|e| Counterexample::from_error(0, index, &e))? {
        d.result.map_err(|c| Counterexample { index: format!("{} {}", d.name, c.index), ..c })?;
    }
    Ok(())
}

fn pick(list: &[NamedCheck], name: &str) -> Certificate {
    match list.iter().find(|c| c.name == name) {
        Some(c) => c.result.clone(),
        None => Err(Counterexample::new(0, name, "-", "not produced", "a result")),
    }
}

struct Builder<'a> {
    bounds: &'a Bounds,
    universe: Bounds,
    suite: Suite,
    anchor: &'static str,
    out: Vec<CheckSpec>,
}

impl Builder<'_> {
    fn add(
        &mut self,
        id: String,
        params: &[(&str, String)],
        needs: Needs,
        run: impl Fn(&Ctx) -> Certificate + Send + Sync + 'static,
    ) {
        self.out.push(CheckSpec {
            id,
            suite: self.suite,
            anchor: self.anchor,
            params: params.iter().map(|(k, v)| (k.to_string(), v.clone())).collect(),
            needs,
            run: Arc::new(run),
        });
    }

    /// Level used by the heavier diagram checks.
    fn level(&self, cap: usize) -> usize {
        self.bounds.p_max.min(cap)
    }
}

/// Every check of the given suites, registered over the union of `bounds` and the defaults.
pub fn registry(suites: &[Suite], bounds: &Bounds) -> Vec<CheckSpec> {
    let mut b = Builder { bounds, universe: bounds.universe(), suite: Suite::Simplex, anchor: "", out: Vec::new() };
    for s in Suite::ORDER {
        if !suites.contains(&s) {
            continue;
        }
        b.suite = s;
        match s {
            Suite::Simplex => simplex_checks(&mut b),
            Suite::Salg => salg_checks(&mut b),
            Suite::Models => model_checks(&mut b),
            Suite::Homotopy => homotopy_checks(&mut b),
            Suite::Homology => homology_checks(&mut b),
            Suite::Hopf => hopf_checks(&mut b),
        }
    }
    b.out
}

fn pn(p: u32, n: u32) -> [(&'static str, String); 2] {
    [("p", p.to_string()), ("n", n.to_string())]
}

fn simplex_checks(b: &mut Builder) {
    let (pu, nu) = (b.universe.p_max as u32, b.universe.n_max);
    b.anchor = "cofaces and codegeneracies of the simplex category";
    for n in 1..=nu {
        b.add(format!("simplex.cofaces.n={n}"), &[("n", n.to_string())], Needs { n, ..Needs::default() }, move |_| cofaces(n));
    }
    b.anchor = "composition of monotone maps";
    for n in 0..=nu {
        b.add(format!("simplex.compose.n={n}"), &[("n", n.to_string())], Needs { n, ..Needs::default() }, move |_| {
            composition(n)
        });
    }
    b.anchor = "enumeration of the monotone maps [p] -> [n]";
    for p in 0..=pu {
        for n in 0..=nu {
            b.add(format!("simplex.enumerate.p={p}.n={n}"), &pn(p, n), Needs { p: p as usize, n, ..Needs::default() }, move |_| {
                enumeration(p, n)
            });
        }
    }
    b.anchor = "fibre sizes m_alpha and cumulative counts S_alpha";
    for p in 0..=pu {
        for n in 0..=nu {
            b.add(format!("simplex.counting.p={p}.n={n}"), &pn(p, n), Needs { p: p as usize, n, ..Needs::default() }, move |_| {
                counting(p, n)
            });
        }
    }
    b.anchor = "simplicial identities";
    for n in 1..=nu {
        b.add(format!("simplex.relations.n={n}"), &[("n", n.to_string())], Needs { n, ..Needs::default() }, move |_| {
            check_simplex_relations(n)
        });
    }
    b.anchor = "transformation of S_alpha under faces and degeneracies";
    for p in 0..=pu {
        for n in 0..=nu {
            b.add(format!("simplex.s_alpha.p={p}.n={n}"), &pn(p, n), Needs { p: p as usize, n, ..Needs::default() }, move |_| {
                for alpha in enumerate_maps(p, n) {
                    for i in 0..=p {
                        s_alpha_transformation_check(&alpha, i)?;
                    }
                }
                Ok(())
            });
        }
    }
}

fn cofaces(n: u32) -> Certificate {
    for i in 0..=n {
        let d = delta(n, i).map_err(|e| Counterexample::from_error(0, format!("delta({n},{i})"), &e))?;
        let want: Vec<u32> = (0..=n).filter(|&x| x != i).collect();
        if d.values() != want.as_slice() || d.target() != n {
            return Err(Counterexample::new(0, format!("delta({n},{i})"), "-", d, format!("{want:?}")));
        }
        let s = sigma(n, i).map_err(|e| Counterexample::from_error(0, format!("sigma({n},{i})"), &e))?;
        let want: Vec<u32> = (0..=n + 1).map(|x| if x <= i { x } else { x - 1 }).collect();
        if s.values() != want.as_slice() || s.target() != n {
            return Err(Counterexample::new(0, format!("sigma({n},{i})"), "-", s, format!("{want:?}")));
        }
    }
    Ok(())
}

fn composition(n: u32) -> Certificate {
    for p in 0..=n {
        for q in 0..=n {
            for f in enumerate_maps(p, q) {
                for g in enumerate_maps(q, n) {
                    let gf = compose_maps(&g, &f).map_err(|e| Counterexample::from_error(0, "compose", &e))?;
                    let want: Vec<u32> = f.values().iter().map(|&x| g.values()[x as usize]).collect();
                    if gf.values() != want.as_slice() || gf.source() != p || gf.target() != n {
                        return Err(Counterexample::new(0, "g.f", format!("{g} . {f}"), gf, format!("{want:?}")));
                    }
                }
                let id = MonotoneMap::identity(q);
                let fi = compose_maps(&id, &f).map_err(|e| Counterexample::from_error(0, "compose", &e))?;
                if fi != f {
                    return Err(Counterexample::new(0, "id.f", f.to_string(), fi, f.clone()));
                }
            }
        }
    }
    Ok(())
}

fn enumeration(p: u32, n: u32) -> Certificate {
    let got = enumerate_maps(p, n);
    let mut want = Vec::new();
    let total = (n as usize + 1).pow(p + 1);
    for code in 0..total {
        let mut c = code;
        let values: Vec<u32> = (0..=p)
            .map(|_| {
                let v = (c % (n as usize + 1)) as u32;
                c /= n as usize + 1;
                v
            })
            .collect();
        if values.windows(2).all(|w| w[0] <= w[1]) {
            want.push(values);
        }
    }
    want.sort();
    let got_values: Vec<Vec<u32>> = got.iter().map(|a| a.values().to_vec()).collect();
    let mut sorted = got_values.clone();
    sorted.sort();
    sorted.dedup();
    if sorted != want || got_values.len() != want.len() {
        return Err(Counterexample::new(0, format!("p={p} n={n}"), "-", got_values.len(), want.len()));
    }
    Ok(())
}

fn counting(p: u32, n: u32) -> Certificate {
    let err = |e: Error| Counterexample::from_error(0, "counting", &e);
    for alpha in enumerate_maps(p, n) {
        let mut prev = s_alpha(&alpha, -1).map_err(err)?;
        if prev != 0 {
            return Err(Counterexample::new(0, "S(-1)", alpha.to_string(), prev, 0));
        }
        for k in 0..=n {
            let m = m_alpha(&alpha, k as i64).map_err(err)?;
            let direct = alpha.values().iter().filter(|&&v| v == k).count() as u32;
            let s = s_alpha(&alpha, k as i64).map_err(err)?;
            if m != direct || s != prev + m {
                return Err(Counterexample::new(0, format!("k={k}"), alpha.to_string(), format!("m={m} S={s}"), format!("m={direct} S={}", prev + direct)));
            }
            prev = s;
        }
        if prev != p + 1 {
            return Err(Counterexample::new(0, "S(n)", alpha.to_string(), prev, p + 1));
        }
    }
    Ok(())
}

fn salg_checks(b: &mut Builder) {
    let p = b.bounds.p_max;
    b.anchor = "ring-homomorphic evaluation of morphisms";
    b.add("salg.eval.can(3,2)".into(), &[("p", p.min(3).to_string())], Needs::default(), move |ctx| {
        lift("eval", can_map(3, 2, 1, &ctx.fm).map(|f| eval_is_multiplicative(&f, p.min(3))))
    });
    b.add("salg.eval.rho(2,1)".into(), &[("p", p.min(3).to_string())], Needs { n: 2, ..Needs::default() }, move |_| {
        lift("eval", rho_action(2, 1, ModelId::KaTensor { n: 2, m: 1 }).map(|f| eval_is_multiplicative(&f, p.min(3))))
    });
    b.anchor = "presentations: simplicial identities and alias consistency";
    let cases: Vec<(String, fn() -> Result<Presentation>)> = vec![
        ("tensor.kA(1)_kA(2)".into(), || ModelId::KaM(1).build()?.tensor_over_a(&ModelId::KaM(2).build()?)),
        ("simplex_tensor.l=1".into(), || Ok(ModelId::KaM(2).build()?.simplex_tensor(1))),
        ("simplex_tensor.l=2".into(), || Ok(ModelId::KaM(2).build()?.simplex_tensor(2))),
        ("pi_zero.K_A".into(), || Ok(ModelId::KA.build()?.specialize_pi_zero("K_A|0"))),
        ("constant".into(), || Ok(Presentation::constant("A"))),
    ];
    for (name, build) in cases {
        b.add(format!("salg.presentation.{name}"), &[("p", p.to_string())], Needs::default(), move |_| {
            lift("build", build().map(|q| q.check_presentation(p)))
        });
    }
    b.anchor = "morphism certificates: well-definedness and simpliciality";
    for id in [ModelId::KaM(2), ModelId::KA, ModelId::KATensorKa(2)] {
        b.add(format!("salg.morphism.identity.{id}"), &[("p", p.to_string())], Needs::default(), move |_| {
            lift("identity", model(id).map(|m| Morphism::identity(m).certify(p)))
        });
    }
    b.add("salg.morphism.rejects_non_simplicial".into(), &[("p", p.to_string())], Needs::default(), move |_| {
        let k = model(ModelId::KA).map_err(|e| Counterexample::from_error(0, "K_A", &e))?;
        let bad = Morphism::new("level-swap", k.clone(), k, |p, x: &VarId| {
            let mut y = x.clone();
            if p == 1 && x.family == Family::T {
                y.family = Family::U;
            }
            Ok(Polynomial::var(y))
        });
        match bad.certify(p) {
            Err(_) => Ok(()),
            Ok(()) => Err(Counterexample::new(1, "level-swap", "t^(1)", "certified", "a counterexample")),
        }
    });
    b.anchor = "tensor products over A";
    b.add("salg.tensor.kA(1)_K_A".into(), &[("p", p.to_string())], Needs::default(), move |_| {
        let run = || -> Result<Certificate> {
            let (x, y) = (ModelId::KaM(1).build()?, ModelId::KA.build()?);
            let t = x.tensor_over_a(&y)?;
            for l in 0..=p {
                let (a, b, c) = (x.free_generators(l).len(), y.free_generators(l).len(), t.free_generators(l).len());
                if a + b != c {
                    return Ok(Err(Counterexample::new(l, "generator count", t.name(), c, a + b)));
                }
            }
            Ok(t.check_presentation(p))
        };
        lift("tensor", run())
    });
    b.anchor = "simplex tensoring";
    for l in 1..=2u32 {
        b.add(format!("salg.simplex_tensor.l={l}"), &[("l", l.to_string()), ("p", p.to_string())], Needs::default(), move |_| {
            let run = || -> Result<Certificate> {
                let base = ModelId::KaM(2).build()?;
                let st = base.simplex_tensor(l);
                for q in 0..=p {
                    let want = base.free_generators(q).len() * enumerate_maps(q as u32, l).len();
                    if st.free_generators(q).len() != want {
                        return Ok(Err(Counterexample::new(q, "generator count", st.name(), st.free_generators(q).len(), want)));
                    }
                }
                Ok(st.check_presentation(p))
            };
            lift("simplex tensor", run())
        });
    }
    b.anchor = "vertex restriction";
    for l in 1..=2u32 {
        b.add(format!("salg.vertex.l={l}"), &[("l", l.to_string()), ("p", p.to_string())], Needs::default(), move |ctx| {
            let run = || -> Result<Certificate> {
                let can = can_map(2, 1, 1, &ctx.fm)?;
                let st = simplex_tensor_morphism(l, &can);
                let id_cod = Morphism::identity(st.codomain().clone());
                for v in 0..=l {
                    let after = compose(&vertex_restriction(&id_cod, v)?, &can)?;
                    if let Err(c) = morphisms_equal(&vertex_restriction(&st, v)?, &after, p) {
                        return Ok(Err(c));
                    }
                }
                Ok(st.certify(p))
            };
            lift("vertex", run())
        });
    }
    b.anchor = "composition and equality of morphisms";
    for n in 1..=2u32 {
        b.add(format!("salg.compose.can.n={n}"), &[("n", n.to_string()), ("p", p.to_string())], Needs { n, ..Needs::default() }, move |ctx| {
            let run = || -> Result<Certificate> {
                let lhs = compose(&can_map(3, 2, n, &ctx.fm)?, &can_map(4, 3, n, &ctx.fm)?)?;
                Ok(morphisms_equal(&lhs, &can_map(4, 2, n, &ctx.fm)?, p))
            };
            lift("compose", run())
        });
    }
}

/// `f(x·y + x) = f(x)·f(y) + f(x)` on every pair of free generators.
fn eval_is_multiplicative(f: &Morphism, p_max: usize) -> Certificate {
    let err = |p: usize, e: Error| Counterexample::from_error(p, "eval", &e);
    for p in 0..=p_max {
        let gens = f.domain().free_generators(p);
        for x in &gens {
            for y in &gens {
                let (px, py) = (Polynomial::var(x.clone()), Polynomial::var(y.clone()));
                let lhs = f.eval(p, &(px.clone() * py.clone() + px.clone())).map_err(|e| err(p, e))?;
                let fx = f.eval(p, &px).map_err(|e| err(p, e))?;
                let fy = f.eval(p, &py).map_err(|e| err(p, e))?;
                let rhs = f.codomain().normalize(p, &(fx.clone() * fy + fx)).map_err(|e| err(p, e))?;
                if lhs != rhs {
                    return Err(Counterexample::new(p, "x*y + x", format!("{x}, {y}"), lhs, rhs));
                }
            }
        }
    }
    Ok(())
}

fn kind_letter(kind: Skip) -> &'static str {
    match kind {
        Skip::F => "f",
        Skip::G => "g",
    }
}

fn model_checks(b: &mut Builder) {
    let p = b.bounds.p_max;
    let p3 = b.level(3);
    let nu = b.universe.n_max;
    b.anchor = "built-in cofibrant models";
    for id in ModelId::catalogue() {
        b.add(format!("models.build.{id}"), &[("model", id.to_string()), ("p", p.to_string())], Needs::default(), move |_| {
            lift("build", id.build().map(|q| q.check_presentation(p)))
        });
    }
    b.anchor = "comparison maps can(m', m) and their tensor powers";
    for n in 1..=3u32 {
        for lo in 1..=4u32 {
            for hi in lo..=4u32 {
                let params = [("m_hi", hi.to_string()), ("m_lo", lo.to_string()), ("n", n.to_string()), ("p", p.to_string())];
                b.add(format!("models.can.mhi={hi}.mlo={lo}.n={n}"), &params, Needs { n, ..Needs::default() }, move |ctx| {
                    lift("can", can_map(hi, lo, n, &ctx.fm).map(|f| f.certify(p)))
                });
            }
        }
    }
    b.anchor = "cyclic action rho on the factors";
    for n in 1..=nu {
        b.add(format!("models.rho.n={n}"), &[("n", n.to_string()), ("p", p.to_string())], Needs { n, ..Needs::default() }, move |_| {
            let run = || -> Result<Certificate> {
                let target = ModelId::KaTensor { n, m: 1 };
                for bb in 0..n {
                    if let Err(c) = rho_action(n, bb, target)?.certify(p) {
                        return Ok(Err(c));
                    }
                }
                let one = rho_action(n, 1 % n, target)?;
                let mut acc = one.clone();
                for _ in 1..n {
                    acc = compose(&one, &acc)?;
                }
                Ok(morphisms_equal(&acc, &Morphism::identity(model(target)?), p))
            };
            lift("rho", run())
        });
    }
    b.anchor = "the factor permutation zeta and its descent to quotients";
    for n in 1..=nu {
        b.add(format!("models.zeta.n={n}"), &[("n", n.to_string()), ("p", p3.to_string())], Needs { n, ..Needs::default() }, move |ctx| {
            let run = || -> Result<Certificate> {
                let lift_ok = zeta_lift(n, &ctx.fm)?.certify(p3);
                let quotient_ok = zeta_quotient(n, &ctx.fm)?.certify(p3);
                Ok(lift_ok.and(quotient_ok).and_then(|()| zeta_descent_check(n, p3, &ctx.fm)))
            };
            lift("zeta", run())
        });
    }
    b.anchor = "skip maps f and g";
    for kind in [Skip::F, Skip::G] {
        let letter = kind_letter(kind);
        for c in 1..=nu {
            for r in 0..=c {
                let params = [("c", c.to_string()), ("r", r.to_string()), ("p", p3.to_string())];
                b.add(format!("models.skip.{letter}.c={c}.r={r}"), &params, Needs { n: c, ..Needs::default() }, move |ctx| {
                    lift("skip", kind.map(c, r, Layer::Quotient, &ctx.fm).map(|f| f.certify(p3)))
                });
            }
        }
    }
    b.anchor = "skip maps at r = 0 and r = c";
    for kind in [Skip::F, Skip::G] {
        let letter = kind_letter(kind);
        for c in 1..=nu {
            b.add(format!("models.skip_wrap.{letter}.c={c}"), &[("c", c.to_string()), ("p", p3.to_string())], Needs { n: c, ..Needs::default() }, move |ctx| {
                skip_wraps(kind, c, p3, &ctx.fm)
            });
        }
    }
    b.anchor = "zeta intertwines the f and g skip maps";
    for c in 1..=nu {
        for r in 0..=c {
            let params = [("c", c.to_string()), ("r", r.to_string()), ("p", p3.to_string())];
            b.add(format!("models.f_vs_g.c={c}.r={r}"), &params, Needs { n: c, ..Needs::default() }, move |ctx| f_vs_g(c, r, p3, &ctx.fm));
        }
    }
    b.anchor = "skip composites";
    for kind in [Skip::F, Skip::G] {
        let letter = kind_letter(kind);
        for bb in 2..=nu {
            for a in 1..bb {
                for d in DVector::all(a, bb - a) {
                    let params = [("a", a.to_string()), ("b", bb.to_string()), ("d", d.to_string()), ("p", p3.to_string())];
                    b.add(format!("models.composite.{letter}.a={a}.b={bb}.d={d}"), &params, Needs { n: bb, ..Needs::default() }, move |ctx| {
                        lift("composite", skip_composite(kind, a, bb, &d, Layer::Quotient, &ctx.fm).map(|f| f.certify(p3)))
                    });
                }
            }
        }
    }
    b.anchor = "zeta intertwines the f and g skip composites";
    for bb in 2..=nu {
        for a in 1..bb {
            for d in DVector::all(a, bb - a) {
                let params = [("a", a.to_string()), ("b", bb.to_string()), ("d", d.to_string()), ("p", p3.to_string())];
                b.add(format!("models.f_vs_g_composite.a={a}.b={bb}.d={d}"), &params, Needs { n: bb, ..Needs::default() }, move |ctx| {
                    f_vs_g_composite(a, bb, &d, p3, &ctx.fm)
                });
            }
        }
    }
    b.anchor = "auxiliary diagrams of the skip maps";
    for c in 1..=3u32 {
        for reading in [AuxReading::Literal, AuxReading::Relabeled] {
            let rd = match reading {
                AuxReading::Literal => "literal",
                AuxReading::Relabeled => "relabeled",
            };
            let params = [("c", c.to_string()), ("reading", rd.to_string()), ("p", p3.to_string())];
            b.add(format!("models.aux.phi.c={c}.{rd}"), &params, Needs { n: c, ..Needs::default() }, move |ctx| {
                all_of(phi_diagram(c, p3, reading, &ctx.fm), "phi")
            });
            b.add(format!("models.aux.upsilon.c={c}.{rd}"), &params, Needs { n: c, ..Needs::default() }, move |ctx| {
                all_of(upsilon_diagram(c, p3, reading, &ctx.fm), "upsilon")
            });
        }
        for r in 0..c {
            for kind in [Skip::F, Skip::G] {
                let letter = kind_letter(kind);
                let params = [("c", c.to_string()), ("r", r.to_string()), ("p", p3.to_string())];
                b.add(format!("models.aux.{letter}skip.c={c}.r={r}"), &params, Needs { n: c, ..Needs::default() }, move |ctx| {
                    all_of(skip_diagram(kind, c, r, p3, &ctx.fm), "skip")
                });
            }
        }
    }
}

fn master_params(b: &Builder) -> Vec<(HomotopyParams, bool)> {
    let mut out = Vec::new();
    for mk in 0..=b.universe.mk_max {
        for m in 0..=mk {
            let k = mk - m;
            let ds = b.bounds.d_policy.select(m + 1, k);
            for n in mk.max(1)..=b.universe.n_max {
                for (d, keep) in &ds {
                    let q = HomotopyParams::new(n, m, k, d.clone()).expect("n ≥ m + k by construction");
                    out.push((q, *keep));
                }
            }
        }
    }
    out
}

fn homotopy_checks(b: &mut Builder) {
    let p = b.bounds.p_max;
    let p3 = b.level(3);
    let nu = b.universe.n_max;
    b.anchor = "the homotopy h~ between rotated comparison maps";
    for n in 1..=nu {
        b.add(format!("h_tilde.simplicial.n={n}"), &[("n", n.to_string()), ("p", p.to_string())], Needs { n, ..Needs::default() }, move |ctx| {
            lift("h~", ctx.homotopies.h_tilde(n).map(|h| h.certify(p)))
        });
    }
    b.anchor = "boundary telescoping of h~";
    for n in 1..=nu {
        b.add(format!("h_tilde.telescoping.n={n}"), &[("n", n.to_string()), ("p", p.to_string())], Needs { n, ..Needs::default() }, move |ctx| {
            ctx.homotopies.telescoping_check(n, p)
        });
    }
    b.anchor = "vertices of h~";
    for n in 1..=nu {
        for i in 0..n {
            for q in 0..=b.universe.p_max {
                let params = [("n", n.to_string()), ("i", i.to_string()), ("p", q.to_string())];
                b.add(format!("h_tilde.vertex.n={n}.i={i}.p={q}"), &params, Needs { n, p: q, ..Needs::default() }, move |ctx| {
                    ctx.homotopies.h_tilde_vertex_check(n, i, q)
                });
            }
        }
    }
    b.anchor = "the homotopies h and k on a single factor";
    for n in 1..=nu {
        b.add(format!("h_small.simplicial.n={n}"), &[("n", n.to_string()), ("p", p.to_string())], Needs { n, ..Needs::default() }, move |ctx| {
            lift("h", ctx.homotopies.h_small(n).map(|h| h.certify(p)))
        });
        for i in 0..n {
            let params = [("n", n.to_string()), ("i", i.to_string()), ("p", p.to_string())];
            b.add(format!("h_small.vertex.n={n}.i={i}"), &params, Needs { n, ..Needs::default() }, move |ctx| {
                ctx.homotopies.h_small_vertex_check(n, i, p)
            });
        }
        b.add(format!("k_small.simplicial.n={n}"), &[("n", n.to_string()), ("p", p3.to_string())], Needs { n, ..Needs::default() }, move |ctx| {
            lift("k", ctx.homotopies.k_small(n).map(|h| h.certify(p3)))
        });
    }
    b.anchor = "the factor t(n, m, k, r, beta) on constant labels";
    for mk in 0..=b.universe.mk_max {
        for m in 0..=mk {
            let k = mk - m;
            for n in mk.max(1)..=nu {
                let params = [("n", n.to_string()), ("m", m.to_string()), ("k", k.to_string())];
                b.add(format!("t_factor.values.n={n}.m={m}.k={k}"), &params, Needs { n, mk, ..Needs::default() }, move |ctx| {
                    t_factor_values(&ctx.homotopies, n, m, k)
                });
            }
        }
    }
    b.anchor = "master homotopies H and K";
    let params = master_params(b);
    for kind in [Master::H, Master::K] {
        let name = match kind {
            Master::H => "masterH",
            Master::K => "masterK",
        };
        for (q, keep) in &params {
            let needs = Needs { n: q.n, mk: q.m + q.k, unsampled: !keep, ..Needs::default() };
            let base = [("m", q.m.to_string()), ("k", q.k.to_string()), ("n", q.n.to_string()), ("d", q.d.to_string()), ("p", p3.to_string())];
            let qq = q.clone();
            b.add(format!("{name}.simplicial.{q}"), &base, needs, move |ctx| {
                lift("master", ctx.homotopies.master(kind, &qq).map(|h| h.certify(p3)))
            });
            for l in 0..=q.k {
                let mut ps = base.to_vec();
                ps.push(("l", l.to_string()));
                let qq = q.clone();
                b.add(format!("{name}.vertex.{q}.l={l}"), &ps, needs, move |ctx| ctx.homotopies.master_vertex_check(kind, &qq, l, p3));
            }
            if q.k > 0 {
                let qq = q.clone();
                b.add(format!("{name}.diagram.{q}"), &base, needs, move |ctx| ctx.homotopies.master_diagram_check(kind, &qq, p3));
            }
        }
    }
}

/// On `β` constant at `l` (levels 0..2): `𝔱 = π^{n-m-l+1}` for `r = l` and `0` otherwise.
fn t_factor_values(hs: &Homotopies, n: u32, m: u32, k: u32) -> Certificate {
    for p in 0..=2u32 {
        for l in 0..=k {
            let beta = MonotoneMap::constant(p, k, l).map_err(|e| Counterexample::from_error(p as usize, "beta", &e))?;
            for r in 0..=k {
                let got = hs.t_factor(n, m, k, r, &beta).map_err(|e| Counterexample::from_error(p as usize, "t", &e))?;
                let want = if r == l { Polynomial::pi_pow(n - m - l + 1) } else { Polynomial::zero() };
                if got != want {
                    return Err(Counterexample::new(p as usize, format!("r={r}"), format!("beta={beta}"), got, want));
                }
            }
        }
    }
    Ok(())
}

/// Models with a homology oracle: `(id, Koszul oracle)`.
pub fn homology_models() -> Vec<(ModelId, Koszul)> {
    let mut out: Vec<(ModelId, Koszul)> = (1..=3).map(|m| (ModelId::KaM(m), Koszul::new(vec![m], None))).collect();
    out.push((ModelId::KA, Koszul::new(vec![1], Some(1))));
    out.push((ModelId::KaTensor { n: 2, m: 1 }, Koszul::new(vec![1, 1], None)));
    out.push((ModelId::KaPiZero(1), Koszul::new(vec![1], Some(1))));
    out
}

fn homology_checks(b: &mut Builder) {
    let p = b.bounds.p_max;
    let wu = b.universe.w_max;
    b.anchor = "weight-graded unnormalized chain complexes";
    for (id, _) in homology_models() {
        for w in 0..=wu {
            let params = [("model", id.to_string()), ("w", w.to_string()), ("p", p.to_string())];
            b.add(format!("homology.complex.{id}.w={w}"), &params, Needs { w, ..Needs::default() }, move |_| {
                let q = id.build().map_err(|e| Counterexample::from_error(0, "build", &e))?;
                let cx = assemble(&q, &Weights::PerChain, w, p).map_err(|e| Counterexample::new(0, format!("w={w}"), id.to_string(), e.to_string(), "-"))?;
                cx.check_d_squared()
            });
        }
    }
    b.anchor = "graded homology against Koszul complexes";
    for (id, oracle) in homology_models() {
        for w in 0..=wu {
            let params = [("model", id.to_string()), ("w", w.to_string()), ("p", p.to_string())];
            let oracle = oracle.clone();
            b.add(format!("homology.groups.{id}.w={w}"), &params, Needs { w, ..Needs::default() }, move |_| {
                let q = id.build().map_err(|e| Counterexample::from_error(0, "build", &e))?;
                let cx = assemble(&q, &Weights::PerChain, w, p).map_err(|e| Counterexample::new(0, format!("w={w}"), id.to_string(), e.to_string(), "-"))?;
                for degree in 0..p {
                    let got = homology(&cx, degree).map_err(|e| Counterexample::new(degree, format!("w={w}"), id.to_string(), e.to_string(), "-"))?;
                    let want = oracle.homology(w, degree);
                    if got != want {
                        return Err(Counterexample::new(degree, format!("H_{degree} w={w}"), id.to_string(), got, want));
                    }
                }
                Ok(())
            });
        }
    }
    b.anchor = "pi_0 as a quotient of Z[pi]";
    let pi0_cases: Vec<(String, fn() -> Result<Presentation>, Polynomial)> = vec![
        ("kA(1)".into(), || ModelId::KaM(1).build(), Polynomial::pi_pow(1)),
        ("kA(2)".into(), || ModelId::KaM(2).build(), Polynomial::pi_pow(2)),
        ("kA(3)".into(), || ModelId::KaM(3).build(), Polynomial::pi_pow(3)),
        ("kA(4)".into(), || ModelId::KaM(4).build(), Polynomial::pi_pow(4)),
        ("K_A".into(), || ModelId::KA.build(), Polynomial::pi()),
        ("kA_tensor(2,1)".into(), || ModelId::KaTensor { n: 2, m: 1 }.build(), Polynomial::pi()),
        ("constant".into(), || Ok(Presentation::constant("A")), Polynomial::zero()),
    ];
    for (name, build, want) in pi0_cases {
        let params = [("model", name.clone()), ("w", wu.to_string()), ("p", p.to_string())];
        b.add(format!("homology.pi0.{name}"), &params, Needs::default(), move |_| {
            let q = build().map_err(|e| Counterexample::from_error(0, "build", &e))?;
            let got = pi0(&q).map_err(|e| Counterexample::new(0, "pi0", q.name(), e.to_string(), "-"))?;
            let principal = got.principal.clone().unwrap_or_else(|| Polynomial::var(VarId::t(0, 0)));
            if principal != want {
                return Err(Counterexample::new(1, "pi0 generator", q.name(), principal, want.clone()));
            }
            if q.free_generators(1).is_empty() {
                return Ok(());
            }
            for w in 0..=wu.min(6) {
                let cx = assemble(&q, &Weights::PerChain, w, p).map_err(|e| Counterexample::new(0, format!("w={w}"), q.name(), e.to_string(), "-"))?;
                let h0 = homology(&cx, 0).map_err(|e| Counterexample::new(0, format!("w={w}"), q.name(), e.to_string(), "-"))?;
                if got.graded_piece(w).as_ref() != Some(&h0) {
                    return Err(Counterexample::new(0, format!("H_0 w={w}"), q.name(), h0, format!("{:?}", got.graded_piece(w))));
                }
            }
            Ok(())
        });
    }
    b.anchor = "maps induced on homology";
    let w_small = 4u32;
    for id in [ModelId::KaM(2), ModelId::KA] {
        let params = [("model", id.to_string()), ("w", w_small.to_string()), ("p", p.to_string())];
        b.add(format!("homology.induced.identity.{id}"), &params, Needs { w: w_small, ..Needs::default() }, move |_| {
            let f = model(id).map(Morphism::identity).map_err(|e| Counterexample::from_error(0, "identity", &e))?;
            induced_matrices(&f, 0..=w_small, p, |m| *m == DenseMatrix::identity(m.rows()) && m.rows() == m.cols())
        });
    }
    let params = [("model", ModelId::KaPiZero(1).to_string()), ("w", w_small.to_string()), ("p", p.to_string())];
    b.add("homology.induced.zero".into(), &params, Needs { w: w_small, ..Needs::default() }, move |_| {
        let f = zero_endomorphism().map_err(|e| Counterexample::from_error(0, "zero map", &e))?;
        f.certify(p)?;
        induced_matrices(&f, 0..=0, p, |m| *m == DenseMatrix::identity(m.rows()))?;
        induced_matrices(&f, 1..=w_small, p, |m| *m == DenseMatrix::zero(m.rows(), m.cols()))
    });
}

/// `t ↦ 0` on `k_A(1)` at `π = 0`; as a ring map it is the identity on weight 0.
pub fn zero_endomorphism() -> Result<Morphism> {
    let q = model(ModelId::KaPiZero(1))?;
    let table: ChainTable = [(ChainKey::t(1), Vec::<(BigInt, u32, ChainKey)>::new())].into_iter().collect();
    Ok(Morphism::chain_linear("zero", q.clone(), q, table))
}

fn induced_matrices(f: &Morphism, weights: RangeInclusive<u32>, p: usize, ok: impl Fn(&DenseMatrix) -> bool) -> Certificate {
    for w in weights {
        for degree in 0..p {
            let m = induced_map_on_homology(f, &Weights::PerChain, w, degree)
                .map_err(|e| Counterexample::new(degree, format!("w={w}"), f.name(), e.to_string(), "-"))?;
            if !ok(&m.matrix) {
                return Err(Counterexample::new(degree, format!("H_{degree} w={w}"), f.name(), m.matrix.to_string().trim(), "expected matrix"));
            }
        }
    }
    Ok(())
}

fn hopf_checks(b: &mut Builder) {
    let p3 = b.level(3);
    let w = b.bounds.w_max;
    b.anchor = "Hopf algebroid structure maps on K_A";
    for name in HOPF_AXIOM_NAMES {
        b.add(name.to_string(), &[("p", p3.to_string())], Needs::default(), move |ctx| {
            let list = ctx.hopf_axioms.get_or_init(|| as_checks("hopf.build", check_hopf_axioms(p3)));
            pick(list, name)
        });
    }
    b.anchor = "pure characteristic comparison of Hopf algebroids";
    for name in PURE_CHAR_NAMES {
        b.add(name.to_string(), &[("p", p3.to_string()), ("w", w.to_string())], Needs::default(), move |ctx| {
            let list = ctx.pure_char.get_or_init(|| as_checks("hopf.purechar.build", pure_char_check(p3, w)));
            pick(list, name)
        });
    }
    b.anchor = "comultiplication square with pi generic";
    b.add("hopf.genericpi.comult".into(), &[("p", p3.to_string())], Needs::default(), move |_| generic_pi_check(p3));
}
