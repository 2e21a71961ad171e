//! The verification suite behind `loday verify`.
//!
//! Every criterion draws from its own ChaCha stream seeded from the suite
//! seed and the criterion number, so criteria can run in parallel and the
//! report does not depend on scheduling.

use std::sync::Arc;

use loday_core::anticyclic::{
    ac_bracket, ac_bracket_transposed, ac_project, antisymmetry_witness, closed_form_witness, cyclic_triple_witness,
    dual_commutator, dual_commutator_closed_form, invariance_witnesses, lie_bracket, lie_word,
    pairing_universality_check, rotation_identity_check, triangularity_witness,
};
use loday_core::cochains::{
    apply_to_lie_word, coderivation_defect, extend_coderivation_element, in_lie_span, leibniz_identity_check,
};
use loday_core::error::AlgebraError;
use loday_core::scalar::{int, one};
use loday_core::world::{
    b_mu, build_mu, build_theta, classical_invariance_check, double_brackets, flow_transform, gsi_check,
    gsi_graph_check, inverse_metric_function, is_antisymmetric, is_leibniz, metric_function, poisson,
    structure_check, twisted_bracket, Metric, SymplecticPlane, Twist,
};
use loday_core::zinbiel::{shuffle, zinbiel_product, LinearMap, ZinbielTarget};
use loday_core::{AcCochain, BarCochain, Element, GradedBasis, LeibnizTable, MultilinearForm, Parity, SignPolicy, Word};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::report::{Report, Verdict, Witness};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SuiteOptions {
    pub dim_max: usize,
    pub seed: u64,
    pub samples: usize,
    /// Sign convention of the dual commutator under test.
    pub policy: SignPolicy,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            dim_max: 3,
            seed: 0,
            samples: 50,
            policy: SignPolicy::SHIPPED,
        }
    }
}

pub const CRITERIA: [&str; 12] = [
    "free Zinbiel axiom",
    "shuffle splits into half-shuffles",
    "coderivation law",
    "Lie words are preserved by coderivations",
    "anticyclic projection, rotations and bracket routes",
    "dual commutator identities",
    "universal pairing",
    "{mu,mu} = 0 iff Leibniz",
    "{theta,theta} = 0 iff the twisted bracket is Leibniz",
    "{mu,g} = 0 iff g is invariant",
    "Hamiltonian flow of the inverse metric",
    "b_mu squares to zero",
];

type Run = fn(&SuiteOptions, &mut ChaCha8Rng, &mut Verdict) -> Result<(), AlgebraError>;

const RUNS: [Run; 12] = [
    zinbiel_axiom,
    half_shuffles,
    coderivation_law,
    lie_words,
    anticyclic_calculus,
    dual_commutators,
    universal_pairing,
    theorem,
    twisted,
    corollary,
    flow,
    coboundary,
];

pub fn criterion_rng(seed: u64, id: usize) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed.rotate_left(17) ^ (id as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15))
}

/// Runs criterion `id` (1-based).
pub fn run_criterion(id: usize, opts: &SuiteOptions) -> Verdict {
    let mut v = Verdict::new(id.to_string(), CRITERIA[id - 1]);
    let mut rng = criterion_rng(opts.seed, id);
    if let Err(e) = RUNS[id - 1](opts, &mut rng, &mut v) {
        v.fail(Witness::note(format!("error: {e}")));
    }
    v
}

pub fn run_suite(opts: &SuiteOptions) -> Report {
    let verdicts: Vec<Verdict> = (1..=CRITERIA.len()).into_par_iter().map(|id| run_criterion(id, opts)).collect();
    let canonical = format!(
        "dim-max={};samples={};seed={};sign-convention={}",
        opts.dim_max,
        opts.samples,
        opts.seed,
        opts.policy.id()
    );
    let mut report = Report::new("verify", opts.policy.id(), Some(opts.seed), &[canonical.as_bytes()])
        .parameter("dim-max", opts.dim_max)
        .parameter("samples", opts.samples);
    for v in verdicts {
        report.push(v);
    }
    report
}

fn basis(dim: usize, parity: Parity) -> Arc<GradedBasis> {
    GradedBasis::numbered("x", dim, parity)
}

fn coefficient(rng: &mut ChaCha8Rng) -> i64 {
    [-2, -1, 1, 2][rng.random_range(0..4)]
}

fn random_word(rng: &mut ChaCha8Rng, dim: usize, len: usize) -> Word {
    Word::from_indices(&(0..len).map(|_| rng.random_range(0..dim)).collect::<Vec<_>>())
}

/// One to three terms over letters.
fn random_vector(rng: &mut ChaCha8Rng, b: &Arc<GradedBasis>) -> Element {
    let mut v = Element::zero(b);
    for _ in 0..rng.random_range(1..=3) {
        v.add_term(random_word(rng, b.dim(), 1), &int(coefficient(rng)));
    }
    v
}

fn random_cochain(rng: &mut ChaCha8Rng, b: &Arc<GradedBasis>, arity: usize) -> Result<BarCochain, AlgebraError> {
    let mut entries = Vec::new();
    for w in b.words(arity) {
        if rng.random_bool(0.6) {
            entries.push((w, random_vector(rng, b)));
        }
    }
    BarCochain::new(b, arity, entries)
}

fn random_form(rng: &mut ChaCha8Rng, b: &Arc<GradedBasis>, degree: usize, density: f64) -> Result<MultilinearForm, AlgebraError> {
    let mut entries = Vec::new();
    for w in b.words(degree) {
        if rng.random_bool(density) {
            entries.push((w, int(coefficient(rng))));
        }
    }
    MultilinearForm::new(b, degree, entries)
}

fn random_ac(rng: &mut ChaCha8Rng, b: &Arc<GradedBasis>, degree: usize) -> Result<AcCochain, AlgebraError> {
    Ok(ac_project(&random_form(rng, b, degree, 0.3)?))
}

/// Up to `max_entries` structure constants drawn from `{-2..2}`.
fn random_table(rng: &mut ChaCha8Rng, dim: usize, max_entries: usize) -> Result<LeibnizTable, AlgebraError> {
    let entries: Vec<_> = (0..rng.random_range(0..=max_entries))
        .map(|_| {
            let (i, j, k) = (rng.random_range(0..dim), rng.random_range(0..dim), rng.random_range(0..dim));
            (i, j, k, int(rng.random_range(-2..=2)))
        })
        .collect();
    LeibnizTable::new(&basis(dim, Parity::Even), entries)
}

fn random_leibniz(rng: &mut ChaCha8Rng, dim: usize) -> Result<LeibnizTable, AlgebraError> {
    for _ in 0..1000 {
        let t = random_table(rng, dim, 3)?;
        if is_leibniz(&t) {
            return Ok(t);
        }
    }
    Ok(LeibnizTable::abelian(&basis(dim, Parity::Even)))
}

/// A Leibniz table, nonabelian when one turns up within a few draws.
fn nonabelian_leibniz(rng: &mut ChaCha8Rng, dim: usize) -> Result<LeibnizTable, AlgebraError> {
    let mut t = random_leibniz(rng, dim)?;
    for _ in 0..20 {
        if !t.is_abelian() {
            break;
        }
        t = random_leibniz(rng, dim)?;
    }
    Ok(t)
}

fn random_metric(rng: &mut ChaCha8Rng, dim: usize) -> Result<Metric, AlgebraError> {
    let mut g = vec![vec![int(0); dim]; dim];
    for i in 0..dim {
        for j in i..dim {
            let c = int([-1, 0, 0, 1, 2][rng.random_range(0..5)]);
            g[i][j] = c.clone();
            g[j][i] = c;
        }
    }
    Metric::new(g)
}

fn nondegenerate_metric(rng: &mut ChaCha8Rng, dim: usize) -> Result<Metric, AlgebraError> {
    loop {
        let m = random_metric(rng, dim)?;
        if m.inverse().is_ok() {
            return Ok(m);
        }
    }
}

fn table(dim: usize, entries: &[(usize, usize, usize, i64)]) -> LeibnizTable {
    LeibnizTable::new(&basis(dim, Parity::Even), entries.iter().map(|&(i, j, k, c)| (i, j, k, int(c))))
        .expect("fixed tables are well formed")
}

fn metric(rows: &[&[i64]]) -> Metric {
    Metric::new(rows.iter().map(|r| r.iter().map(|&c| int(c)).collect()).collect()).expect("fixed metrics are symmetric")
}

fn describe(t: &LeibnizTable) -> String {
    let entries: Vec<String> = t
        .entries()
        .into_iter()
        .map(|(i, j, k, c)| format!("[e{},e{}] += {}·e{}", i + 1, j + 1, loday_core::scalar::format_scalar(&c), k + 1))
        .collect();
    if entries.is_empty() {
        format!("abelian, dim {}", t.dim())
    } else {
        format!("dim {}: {}", t.dim(), entries.join(", "))
    }
}

fn describe_metric(m: &Metric) -> String {
    let rows: Vec<String> = m
        .matrix()
        .iter()
        .map(|r| r.iter().map(loday_core::scalar::format_scalar).collect::<Vec<_>>().join(" "))
        .collect();
    format!("g = [{}]", rows.join("; "))
}

fn show(b: &GradedBasis, w: &Word) -> String {
    w.display(b).to_string()
}

struct ZinbielSample {
    x: Element,
    y: Element,
    z: Element,
}

/// The word triples shared by the first two criteria; drawn from the stream
/// of criterion 1.
fn zinbiel_sample(opts: &SuiteOptions) -> Vec<ZinbielSample> {
    let mut rng = criterion_rng(opts.seed, 1);
    let count = opts.samples.saturating_mul(4).max(200);
    (0..count)
        .map(|_| {
            let dim = rng.random_range(1..=opts.dim_max.min(3));
            let b = basis(dim, Parity::Even);
            let mut w = || {
                let len = rng.random_range(1..=3);
                Element::word(&b, random_word(&mut rng, dim, len))
            };
            ZinbielSample { x: w(), y: w(), z: w() }
        })
        .collect()
}

fn triple_note(s: &ZinbielSample) -> String {
    format!("x = {}, y = {}, z = {}", s.x, s.y, s.z)
}

fn zinbiel_axiom(opts: &SuiteOptions, _: &mut ChaCha8Rng, v: &mut Verdict) -> Result<(), AlgebraError> {
    for s in zinbiel_sample(opts) {
        let lhs = zinbiel_product(&s.x, &zinbiel_product(&s.y, &s.z)?)?;
        let sum = zinbiel_product(&s.x, &s.y)?.plus(&zinbiel_product(&s.y, &s.x)?);
        let rhs = zinbiel_product(&sum, &s.z)?;
        v.check(lhs == rhs, || Witness::with_element(format!("x*(y*z) - (x*y+y*x)*z at {}", triple_note(&s)), &lhs.sub(&rhs)));
    }
    Ok(())
}

fn half_shuffles(opts: &SuiteOptions, _: &mut ChaCha8Rng, v: &mut Verdict) -> Result<(), AlgebraError> {
    for s in zinbiel_sample(opts) {
        let lhs = shuffle(&s.x, &s.y);
        let rhs = zinbiel_product(&s.x, &s.y)?.plus(&zinbiel_product(&s.y, &s.x)?);
        v.check(lhs == rhs, || Witness::with_element(format!("sh(x,y) - x*y - y*x at {}", triple_note(&s)), &lhs.sub(&rhs)));
    }
    Ok(())
}

fn coderivation_law(opts: &SuiteOptions, rng: &mut ChaCha8Rng, v: &mut Verdict) -> Result<(), AlgebraError> {
    for n in 0..opts.samples.max(12) {
        let parity = if n % 2 == 0 { Parity::Odd } else { Parity::Even };
        let b = basis(2, parity);
        let arity = rng.random_range(1..=3);
        let c = random_cochain(rng, &b, arity)?;
        for len in 1..=4 {
            for w in b.words(len) {
                let defect = coderivation_defect(&c, &w);
                v.check(defect.is_zero(), || {
                    Witness::note(format!(
                        "arity {arity} cochain {c:?} on {}: defect {defect}",
                        show(&b, &w)
                    ))
                });
            }
        }
    }
    Ok(())
}

/// `B[x1,x2,x3,x4] = [B(x1,x2,x3),x4] + [x3,B(x1,x2,x4)] - [x2,B(x1,[x3,x4])]
/// + [x1,B[x2,x3,x4]]` for arity 3 and odd letters.
fn four_letter_display(c: &BarCochain) -> Element {
    let b = c.basis();
    let x = |i: usize| Element::letter(b, i);
    let on = |parts: &[Element]| {
        let arg = parts.iter().skip(1).fold(parts[0].clone(), |acc, p| acc.concat(p));
        c.eval_element(&arg)
    };
    let t1 = lie_bracket(&on(&[x(0), x(1), x(2)]), &x(3));
    let t2 = lie_bracket(&x(2), &on(&[x(0), x(1), x(3)]));
    let t3 = lie_bracket(&x(1), &on(&[x(0), lie_word(b, &[2, 3])]));
    let t4 = lie_bracket(&x(0), &on(&[lie_word(b, &[1, 2, 3])]));
    t1.plus(&t2).sub(&t3).plus(&t4)
}

fn lie_words(opts: &SuiteOptions, rng: &mut ChaCha8Rng, v: &mut Verdict) -> Result<(), AlgebraError> {
    let per_arity = (opts.samples / 5).max(6);
    for arity in 1..=3 {
        for n in 0..per_arity {
            let parity = if n % 2 == 0 { Parity::Odd } else { Parity::Even };
            let b = basis(2, parity);
            let c = random_cochain(rng, &b, arity)?;
            for len in arity..=5 {
                for w in b.words(len) {
                    let direct = extend_coderivation_element(&c, &lie_word(&b, w.letters()));
                    let recursive = apply_to_lie_word(&c, w.letters())?;
                    v.check(recursive == direct, || {
                        Witness::with_element(
                            format!("recursion minus direct evaluation on [{}] for {c:?}", show(&b, &w)),
                            &recursive.sub(&direct),
                        )
                    });
                    v.check(in_lie_span(&direct), || {
                        Witness::with_element(format!("image of [{}] under {c:?} is not a Lie element", show(&b, &w)), &direct)
                    });
                }
            }
        }
    }
    let b = basis(4, Parity::Odd);
    for _ in 0..4 {
        let c = random_cochain(rng, &b, 3)?;
        let expected = four_letter_display(&c);
        let direct = extend_coderivation_element(&c, &lie_word(&b, &[0, 1, 2, 3]));
        v.count("four-letter display");
        v.check(direct == expected, || {
            Witness::with_element(format!("B[x1,x2,x3,x4] minus its four-term display for {c:?}"), &direct.sub(&expected))
        });
    }
    Ok(())
}

fn anticyclic_calculus(opts: &SuiteOptions, rng: &mut ChaCha8Rng, v: &mut Verdict) -> Result<(), AlgebraError> {
    let plane = SymplecticPlane::new(opts.dim_max.min(2))?;
    let b = plane.basis();
    let per_degree = (opts.samples / 5).max(6);
    for degree in 2..=4 {
        for _ in 0..per_degree {
            let f = random_form(rng, b, degree, 0.3)?;
            let p = ac_project(&f);
            let again = ac_project(p.form());
            v.count("projection");
            v.check(again == p, || Witness::note(format!("projection is not idempotent on {f:?}")));
            for k in 2..=degree {
                let bad = rotation_identity_check(&p, k);
                v.count("rotation");
                v.check(bad.is_none(), || {
                    let w = bad.clone().expect("failure has a word");
                    Witness::with_value(format!("rotation identity k = {k} fails for {p:?}"), b, &w, &p.eval(&w))
                });
            }
        }
    }
    for (d1, d2) in [(2, 2), (2, 3), (3, 2), (3, 3), (2, 4), (4, 2), (3, 4)] {
        for _ in 0..4 {
            let (a1, a2) = (random_ac(rng, b, d1)?, random_ac(rng, b, d2)?);
            let r1 = ac_bracket(&plane, &a1, &a2)?;
            let r2 = ac_bracket_transposed(&plane, &a1, &a2)?;
            v.count("bracket routes");
            v.check(r1 == r2, || Witness::note(format!("routes differ for degrees ({d1}, {d2}): {r1:?} vs {r2:?}")));
        }
    }
    Ok(())
}

fn dual_commutators(opts: &SuiteOptions, _: &mut ChaCha8Rng, v: &mut Verdict) -> Result<(), AlgebraError> {
    let policy = opts.policy;
    let b = basis(2, Parity::Even);
    let max_len = 5;
    let dc = |l: &[u16]| dual_commutator(&b, l, policy);

    let tri = triangularity_witness(&b, max_len, policy);
    v.checked += (2..=max_len).map(|n| 1usize << n).sum::<usize>();
    if let Some(w) = tri {
        let sign = if w.len() % 2 == 0 { -one() } else { one() };
        let residual = dc(w.letters()).sub(&dc(w.reversed().letters()).scaled(&sign));
        v.fail(Witness::with_element(
            format!("triangularity [x1..xn]_* = (-1)^(n+1) [xn..x1]_* fails at {} (length {})", show(&b, &w), w.len()),
            &residual,
        ));
    }

    let c = basis(3, Parity::Even);
    v.checked += 27;
    if let Some(w) = cyclic_triple_witness(&c, policy) {
        let l = w.letters();
        let sum = dual_commutator(&c, l, policy)
            .plus(&dual_commutator(&c, &[l[1], l[2], l[0]], policy))
            .plus(&dual_commutator(&c, &[l[2], l[0], l[1]], policy));
        v.fail(Witness::with_element(format!("cyclic sum does not vanish at {}", show(&c, &w)), &sum));
    }

    v.checked += (1..=max_len).map(|n| 1usize << n).sum::<usize>();
    if let Some(w) = closed_form_witness(&b, max_len, policy) {
        let residual = dc(w.letters()).sub(&dual_commutator_closed_form(&b, w.letters()));
        v.fail(Witness::with_element(format!("recursion minus closed shuffle form at {}", show(&b, &w)), &residual));
    }
    Ok(())
}

fn random_map(rng: &mut ChaCha8Rng, source: &Arc<GradedBasis>, target: &Arc<GradedBasis>) -> Result<LinearMap, AlgebraError> {
    let images = (0..source.dim())
        .map(|_| {
            let mut x = Element::zero(target);
            for _ in 0..rng.random_range(1..=2) {
                let len = rng.random_range(1..=2);
                x.add_term(random_word(rng, target.dim(), len), &int(coefficient(rng)));
            }
            x
        })
        .collect();
    LinearMap::new(source, ZinbielTarget::Free(target.clone()), images)
}

fn universal_pairing(opts: &SuiteOptions, rng: &mut ChaCha8Rng, v: &mut Verdict) -> Result<(), AlgebraError> {
    let policy = opts.policy;
    let b = basis(2, Parity::Even);
    let max_total = 5;
    v.checked += 1;
    if let Some((x, y)) = antisymmetry_witness(&b, max_total, policy) {
        v.fail(Witness::note(format!("<x,y> != -<y,x> at x = {}, y = {}", show(&b, &x), show(&b, &y))));
    }
    let (eq8, eq9) = invariance_witnesses(&b, max_total, policy);
    let triple = |t: [Word; 3]| format!("x = {}, y = {}, z = {}", show(&b, &t[0]), show(&b, &t[1]), show(&b, &t[2]));
    v.checked += 2;
    if let Some(t) = eq8 {
        v.fail(Witness::note(format!("<x*y,z> != <z*y,x> at {}", triple(t))));
    }
    if let Some(t) = eq9 {
        v.fail(Witness::note(format!("<x*y,z> + <y*z,x> + <z*x,y> != 0 at {}", triple(t))));
    }
    let target = basis(2, Parity::Even);
    for _ in 0..(opts.samples / 5).max(6) {
        let f = random_map(rng, &b, &target)?;
        let bad = pairing_universality_check(&f, 4)?;
        v.count("universality maps");
        v.check(bad.is_none(), || {
            let u = bad.clone().expect("failure has a word");
            let images: Vec<String> = (0..b.dim()).map(|i| f.image(i).to_string()).collect();
            Witness::with_element(
                format!("universality fails at {} for f = ({}); lhs - rhs", show(&b, &u.word), images.join(", ")),
                &u.lhs.sub(&u.rhs),
            )
        });
    }
    Ok(())
}

/// Checks `{μ,μ} = 0` against the Leibniz identity; returns the shared verdict.
fn theorem_case(t: &LeibnizTable, v: &mut Verdict) -> Result<bool, AlgebraError> {
    let leibniz = leibniz_identity_check(t).is_none();
    let mu = build_mu(t)?;
    let sq = poisson(&mu, &mu)?;
    v.count(if leibniz { "leibniz" } else { "not leibniz" });
    v.check(leibniz == sq.is_zero(), || {
        Witness::with_element(format!("{}: Leibniz {leibniz}, {{mu,mu}} below", describe(t)), &sq.to_tensor())
    });
    Ok(leibniz)
}

fn theorem(opts: &SuiteOptions, rng: &mut ChaCha8Rng, v: &mut Verdict) -> Result<(), AlgebraError> {
    let fixed = [
        (table(2, &[]), true),
        (table(2, &[(0, 0, 1, 1)]), true),
        (table(1, &[(0, 0, 0, 1)]), false),
    ];
    for (t, expected) in &fixed {
        let leibniz = theorem_case(t, v)?;
        v.check(leibniz == *expected, || Witness::note(format!("{} expected Leibniz {expected}", describe(t))));
    }
    for _ in 0..opts.samples.max(50) {
        let dim = rng.random_range(1..=opts.dim_max.min(3));
        theorem_case(&random_table(rng, dim, 4)?, v)?;
    }
    Ok(())
}

fn random_twist(rng: &mut ChaCha8Rng, dim: usize) -> Result<Twist, AlgebraError> {
    let entries: Vec<_> = (0..rng.random_range(1..=3))
        .map(|_| ([0; 3].map(|_| rng.random_range(0..dim)), int(coefficient(rng))))
        .collect();
    Twist::new(dim, entries)
}

fn twisted_case(t: &LeibnizTable, h: &Twist, v: &mut Verdict) -> Result<(), AlgebraError> {
    let leibniz = is_leibniz(&twisted_bracket(t, h)?);
    let verdict = structure_check(&build_theta(t, h)?)?;
    v.count(if leibniz { "twisted leibniz" } else { "twisted not leibniz" });
    v.check(leibniz == verdict.passed(), || {
        let twist: Vec<String> = h.entries().map(|(k, c)| format!("H{:?} = {c}", k.map(|i| i + 1))).collect();
        Witness::note(format!("{}, {}: twisted Leibniz {leibniz}, structure {verdict:?}", describe(t), twist.join(", ")))
    });
    Ok(())
}

fn twisted(opts: &SuiteOptions, rng: &mut ChaCha8Rng, v: &mut Verdict) -> Result<(), AlgebraError> {
    let dim = opts.dim_max.min(2);
    let abelian = LeibnizTable::abelian(&basis(dim, Parity::Even));
    twisted_case(&abelian, &Twist::new(dim, [([0, 0, dim - 1], int(1))])?, v)?;
    twisted_case(&table(dim, &[(0, 0, dim - 1, 1)]), &Twist::new(dim, [])?, v)?;
    twisted_case(&table(dim, &[(0, 0, 0, 1)]), &Twist::new(dim, [])?, v)?;
    for n in 0..opts.samples.max(20) {
        let t = match n % 3 {
            0 => abelian.clone(),
            1 => random_leibniz(rng, dim)?,
            _ => random_table(rng, dim, 3)?,
        };
        twisted_case(&t, &random_twist(rng, dim)?, v)?;
    }
    Ok(())
}

fn corollary_case(t: &LeibnizTable, m: &Metric, v: &mut Verdict) -> Result<(), AlgebraError> {
    let plane = SymplecticPlane::new(t.dim())?;
    let gsi = gsi_check(t, m)?;
    let graph = gsi_graph_check(t, m)?;
    let mu = build_mu(t)?;
    let bracket = poisson(&mu, &metric_function(&plane, m)?)?;
    v.count(if gsi.is_none() { "invariant" } else { "not invariant" });
    v.check(gsi.is_none() == bracket.is_zero(), || {
        Witness::with_element(
            format!("{}, {}: gsi failure {gsi:?}, {{mu,g}} below", describe(t), describe_metric(m)),
            &bracket.to_tensor(),
        )
    });
    v.check(gsi.is_none() == graph.is_none(), || {
        Witness::note(format!("{}, {}: gsi {gsi:?} but graph {graph:?}", describe(t), describe_metric(m)))
    });
    Ok(())
}

fn lie_algebras(dim_max: usize) -> Vec<LeibnizTable> {
    let mut out = vec![table(2, &[(0, 1, 1, 1), (1, 0, 1, -1)])];
    if dim_max >= 3 {
        out.push(table(3, &[(0, 1, 2, 1), (1, 0, 2, -1), (1, 2, 0, 1), (2, 1, 0, -1), (2, 0, 1, 1), (0, 2, 1, -1)]));
        out.push(table(3, &[(0, 1, 2, 1), (1, 0, 2, -1)]));
        out.push(table(3, &[(0, 1, 1, 2), (1, 0, 1, -2), (0, 2, 2, -2), (2, 0, 2, 2), (1, 2, 0, 1), (2, 1, 0, -1)]));
    }
    out
}

fn corollary(opts: &SuiteOptions, rng: &mut ChaCha8Rng, v: &mut Verdict) -> Result<(), AlgebraError> {
    let dmax = opts.dim_max.min(3);
    let nil = table(2, &[(0, 0, 1, 1)]);
    corollary_case(&nil, &Metric::identity(2), v)?;
    corollary_case(&nil, &metric(&[&[0, 1], &[1, 0]]), v)?;
    corollary_case(&table(2, &[]), &Metric::identity(2), v)?;
    for _ in 0..opts.samples.max(50) {
        let dim = rng.random_range(1..=dmax);
        corollary_case(&random_leibniz(rng, dim)?, &random_metric(rng, dim)?, v)?;
    }
    for t in lie_algebras(dmax) {
        let mut metrics = vec![Metric::identity(t.dim())];
        if t.dim() == 3 {
            metrics.push(metric(&[&[8, 0, 0], &[0, 0, 4], &[0, 4, 0]]));
        }
        for _ in 0..(opts.samples / 5).max(8) {
            metrics.push(random_metric(rng, t.dim())?);
        }
        for m in metrics {
            corollary_case(&t, &m, v)?;
            let gsi = gsi_check(&t, &m)?;
            let classical = classical_invariance_check(&t, &m)?;
            v.count("lie reduction");
            v.check(is_antisymmetric(&t) && gsi.is_none() == classical.is_none(), || {
                Witness::note(format!("{}, {}: gsi {gsi:?}, classical {classical:?}", describe(&t), describe_metric(&m)))
            });
        }
    }
    Ok(())
}

fn flow_case(t: &LeibnizTable, m: &Metric, v: &mut Verdict) -> Result<(), AlgebraError> {
    let plane = SymplecticPlane::new(t.dim())?;
    let mu = build_mu(t)?;
    let g_inv = inverse_metric_function(&plane, m)?;
    let f = flow_transform(&mu, &g_inv)?;
    let gsi = gsi_check(t, m)?.is_none();
    let here = || format!("{}, {}", describe(t), describe_metric(m));
    v.count(if gsi { "invariant" } else { "not invariant" });
    v.check(f.third.is_zero(), || Witness::with_element(format!("{}: third bracket term", here()), &f.third.to_tensor()));
    v.check(gsi == f.second.is_zero(), || {
        Witness::with_element(format!("{}: gsi {gsi}, quadratic term below", here()), &f.second.to_tensor())
    });
    if gsi {
        let (nu_nu, sum_sum) = double_brackets(&mu, &f.nu)?;
        v.check(nu_nu.is_zero(), || Witness::with_element(format!("{}: {{nu,nu}}", here()), &nu_nu.to_tensor()));
        v.check(sum_sum.is_zero(), || {
            Witness::with_element(format!("{}: {{mu+nu,mu+nu}}", here()), &sum_sum.to_tensor())
        });
    }
    Ok(())
}

fn flow(opts: &SuiteOptions, rng: &mut ChaCha8Rng, v: &mut Verdict) -> Result<(), AlgebraError> {
    let dmax = opts.dim_max.min(3);
    let nil = table(2, &[(0, 0, 1, 1)]);
    flow_case(&nil, &metric(&[&[0, 1], &[1, 0]]), v)?;
    flow_case(&nil, &Metric::identity(2), v)?;
    for t in lie_algebras(dmax).into_iter().take(2) {
        flow_case(&t, &Metric::identity(t.dim()), v)?;
    }
    for _ in 0..opts.samples.max(20) {
        let dim = rng.random_range(1..=dmax);
        let t = nonabelian_leibniz(rng, dim)?;
        let m = nondegenerate_metric(rng, dim)?;
        flow_case(&t, &m, v)?;
    }
    Ok(())
}

fn coboundary(opts: &SuiteOptions, rng: &mut ChaCha8Rng, v: &mut Verdict) -> Result<(), AlgebraError> {
    let dmax = opts.dim_max.min(2);
    let mut tables = vec![LeibnizTable::abelian(&basis(dmax, Parity::Even))];
    if dmax >= 2 {
        tables.push(table(2, &[(0, 0, 1, 1)]));
    }
    for _ in 0..(opts.samples / 5).max(8) {
        let dim = rng.random_range(1..=dmax);
        tables.push(nonabelian_leibniz(rng, dim)?);
    }
    for t in tables {
        let mu = build_mu(&t)?;
        let plane = mu.plane().clone();
        for degree in [2, 3] {
            let a = loday_core::LodayFunction::from_cochain(&plane, random_ac(rng, plane.basis(), degree)?)?;
            let bb = b_mu(&mu, &b_mu(&mu, &a)?)?;
            v.count(if t.is_abelian() { "abelian" } else { "nonabelian" });
            v.check(bb.is_zero(), || {
                Witness::with_element(format!("{}: b(b(A)) for A = {a}", describe(&t)), &bb.to_tensor())
            });
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> SuiteOptions {
        SuiteOptions {
            dim_max: 2,
            seed: 3,
            samples: 4,
            policy: SignPolicy::SHIPPED,
        }
    }

    #[test]
    fn streams_differ_by_criterion() {
        let a: u64 = criterion_rng(1, 1).random();
        let b: u64 = criterion_rng(1, 2).random();
        assert_ne!(a, b);
        assert_eq!(a, criterion_rng(1, 1).random::<u64>());
    }

    #[test]
    fn zinbiel_sample_is_shared() {
        let opts = small();
        let a: Vec<_> = zinbiel_sample(&opts).into_iter().map(|s| s.x).collect();
        let b: Vec<_> = zinbiel_sample(&opts).into_iter().map(|s| s.x).collect();
        assert_eq!(a, b);
        assert_eq!(a.len(), 200);
    }

    #[test]
    fn plus_policy_breaks_triangularity() {
        let opts = SuiteOptions {
            policy: SignPolicy::Plus,
            ..small()
        };
        let v = run_criterion(6, &opts);
        assert!(!v.passed);
        assert!(v.witness.unwrap().note.contains("length 3"));
    }

    #[test]
    fn display_matches_on_a_fixed_cochain() {
        let b = basis(4, Parity::Odd);
        let mut rng = criterion_rng(9, 4);
        let c = random_cochain(&mut rng, &b, 3).unwrap();
        assert_eq!(four_letter_display(&c), extend_coderivation_element(&c, &lie_word(&b, &[0, 1, 2, 3])));
    }
}
