//! Free Lie words, anticyclic cochains and the dual commutator.
//!
//! An n-linear form `A` is anticyclic when `A(x_1..x_n) = (1/n) A([x_1,...,x_n])`
//! with the right-normalized bracket `[x_1,...,x_n] = [x_1,[x_2,...,x_n]]`.
//! The dual commutator `[x^1,...,x^n]_*` is the tensor dual of that bracket;
//! its recursion carries a sign `s(n)` picked by [`convention_search`].

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::cochains::cochain_commutator;
use crate::error::{AlgebraError, Result};
use crate::graded::{reversal_negative, same_basis, transpose, Element, GradedBasis, Parity, Word};
use crate::scalar::{int, ratio, Scalar};
use crate::world::SymplecticPlane;
use crate::zinbiel::{shuffle, universal_lift, zinbiel_product, LinearMap, ZinbielTarget};

/// Graded commutator `[u, v] = u⊗v - (-1)^{|u||v|} v⊗u`, word by word.
pub fn lie_bracket(u: &Element, v: &Element) -> Element {
    assert!(same_basis(u.basis(), v.basis()), "bracket across bases");
    let basis = u.basis();
    let mut out = Element::zero(basis);
    for (w1, c1) in u.terms() {
        let p1 = basis.word_parity(w1.letters()).is_odd();
        for (w2, c2) in v.terms() {
            let c = c1 * c2;
            out.add_term(w1.concat(w2), &c);
            let swap_negative = p1 && basis.word_parity(w2.letters()).is_odd();
            out.add_signed(w2.concat(w1), &c, !swap_negative);
        }
    }
    out
}

/// Right-normalized bracket of elements.
pub fn lie_word_of(args: &[Element]) -> Element {
    let (last, init) = args.split_last().expect("lie word of at least one element");
    init.iter().rev().fold(last.clone(), |acc, x| lie_bracket(x, &acc))
}

/// Expansion of `[x_1, ..., x_n]` for letters.
pub fn lie_word(basis: &Arc<GradedBasis>, letters: &[u16]) -> Element {
    let args: Vec<Element> = letters.iter().map(|&x| Element::word(basis, Word::letter(x))).collect();
    lie_word_of(&args)
}

/// An n-linear scalar form, stored on basis words.
#[derive(Clone, PartialEq, Eq)]
pub struct MultilinearForm {
    basis: Arc<GradedBasis>,
    degree: usize,
    table: BTreeMap<Word, Scalar>,
}

impl MultilinearForm {
    pub fn zero(basis: &Arc<GradedBasis>, degree: usize) -> Self {
        MultilinearForm {
            basis: basis.clone(),
            degree,
            table: BTreeMap::new(),
        }
    }

    pub fn new<I>(basis: &Arc<GradedBasis>, degree: usize, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Word, Scalar)>,
    {
        let mut out = Self::zero(basis, degree);
        for (w, c) in entries {
            if w.len() != degree {
                return Err(AlgebraError::LengthMismatch {
                    expected: degree,
                    got: w.len(),
                });
            }
            for &l in w.letters() {
                basis.check_letter(l as usize)?;
            }
            out.add(w, &c);
        }
        Ok(out)
    }

    fn add(&mut self, w: Word, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        let e = self.table.entry(w.clone()).or_insert_with(Scalar::zero);
        *e += c;
        if e.is_zero() {
            self.table.remove(&w);
        }
    }

    pub fn basis(&self) -> &Arc<GradedBasis> {
        &self.basis
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.table.is_empty()
    }

    pub fn entries(&self) -> impl Iterator<Item = (&Word, &Scalar)> {
        self.table.iter()
    }

    pub fn len(&self) -> usize {
        self.table.len()
    }

    pub fn is_empty(&self) -> bool {
        self.table.is_empty()
    }

    pub fn eval(&self, w: &Word) -> Scalar {
        self.table.get(w).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Linear extension; words of other lengths contribute nothing.
    pub fn eval_element(&self, x: &Element) -> Scalar {
        x.terms()
            .filter_map(|(w, c)| self.table.get(w).map(|v| v * c))
            .fold(Scalar::zero(), |a, b| a + b)
    }

    pub fn scaled(&self, c: &Scalar) -> Self {
        let mut out = Self::zero(&self.basis, self.degree);
        for (w, v) in &self.table {
            out.add(w.clone(), &(v * c));
        }
        out
    }

    pub fn plus_scaled(&self, other: &MultilinearForm, c: &Scalar) -> Self {
        assert!(same_basis(&self.basis, &other.basis) && self.degree == other.degree);
        let mut out = self.clone();
        for (w, v) in &other.table {
            out.add(w.clone(), &(v * c));
        }
        out
    }
}

impl fmt::Debug for MultilinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Form(deg {}) {{", self.degree)?;
        for (k, (w, c)) in self.table.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, " {} -> {}", w.display(&self.basis), crate::scalar::format_scalar(c))?;
        }
        write!(f, " }}")
    }
}

/// A multilinear form that is a fixed point of [`ac_project`].
#[derive(Clone, PartialEq, Eq)]
pub struct AcCochain(MultilinearForm);

impl AcCochain {
    pub fn new(form: MultilinearForm) -> Result<Self> {
        let projected = ac_project(&form);
        if projected.0 != form {
            let bad = form
                .basis
                .words(form.degree)
                .find(|w| form.eval(w) != projected.eval(w))
                .expect("differing forms differ on some word");
            return Err(AlgebraError::NotAnticyclic(bad.display(&form.basis).to_string()));
        }
        Ok(AcCochain(form))
    }

    pub(crate) fn new_unchecked(form: MultilinearForm) -> Self {
        AcCochain(form)
    }

    pub fn zero(basis: &Arc<GradedBasis>, degree: usize) -> Self {
        AcCochain(MultilinearForm::zero(basis, degree))
    }

    pub fn form(&self) -> &MultilinearForm {
        &self.0
    }

    pub fn into_form(self) -> MultilinearForm {
        self.0
    }

    pub fn basis(&self) -> &Arc<GradedBasis> {
        &self.0.basis
    }

    pub fn degree(&self) -> usize {
        self.0.degree
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn eval(&self, w: &Word) -> Scalar {
        self.0.eval(w)
    }

    pub fn eval_element(&self, x: &Element) -> Scalar {
        self.0.eval_element(x)
    }

    pub fn entries(&self) -> impl Iterator<Item = (&Word, &Scalar)> {
        self.0.entries()
    }

    pub fn scaled(&self, c: &Scalar) -> Self {
        AcCochain(self.0.scaled(c))
    }

    pub fn plus_scaled(&self, other: &AcCochain, c: &Scalar) -> Self {
        AcCochain(self.0.plus_scaled(&other.0, c))
    }
}

impl fmt::Debug for AcCochain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ac{:?}", self.0)
    }
}

/// `P(A)(w) = (1/n) A([w_1, ..., w_n])`.
pub fn ac_project(a: &MultilinearForm) -> AcCochain {
    let n = a.degree;
    let inv_n = ratio(1, n as i64);
    let mut out = MultilinearForm::zero(&a.basis, n);
    if a.is_zero() {
        return AcCochain(out);
    }
    for w in a.basis.words(n) {
        let v = a.eval_element(&lie_word(&a.basis, w.letters()));
        out.add(w, &(v * &inv_n));
    }
    AcCochain(out)
}

/// Checks `A(x_1..x_n) = -(-1)^{n-k+1} A(x_1..x_{k-2}, [x_k..x_n], x_{k-1})`
/// on every basis word; returns the first word where it fails.
pub fn rotation_identity_check(a: &AcCochain, k: usize) -> Option<Word> {
    let n = a.degree();
    assert!((2..=n).contains(&k), "position k must lie in 2..=n");
    let basis = a.basis();
    let negative = (n - k + 1) % 2 == 0;
    a.basis().words(n).find(|w| {
        let l = w.letters();
        let pre = Element::word(basis, w.slice(0..k - 2));
        let tail = lie_word(basis, &l[k - 1..]);
        let arg = pre.concat(&tail).concat(&Element::word(basis, Word::letter(l[k - 2])));
        let mut rhs = a.eval_element(&arg);
        if negative {
            rhs = -rhs;
        }
        a.eval(w) != rhs
    })
}

/// Sign `s(n)` of the second term of the dual commutator recursion for
/// `n >= 3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SignPolicy {
    /// `s(n) = -1`
    Minus,
    /// `s(n) = +1`
    Plus,
    /// `s(n) = -(-1)^{n-1}`
    Literal,
    /// `s(n) = (-1)^{n-1}`
    AntiLiteral,
}

impl SignPolicy {
    pub const SHIPPED: SignPolicy = SignPolicy::Minus;
    pub const ALL: [SignPolicy; 4] = [SignPolicy::Minus, SignPolicy::Plus, SignPolicy::Literal, SignPolicy::AntiLiteral];

    pub fn id(self) -> &'static str {
        match self {
            SignPolicy::Minus => "minus",
            SignPolicy::Plus => "plus",
            SignPolicy::Literal => "literal",
            SignPolicy::AntiLiteral => "anti-literal",
        }
    }

    pub fn from_id(id: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|p| p.id() == id)
    }

    pub fn is_negative(self, n: usize) -> bool {
        match self {
            SignPolicy::Minus => true,
            SignPolicy::Plus => false,
            SignPolicy::Literal => n % 2 == 1,
            SignPolicy::AntiLiteral => n % 2 == 0,
        }
    }
}

impl fmt::Display for SignPolicy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

fn dual_rec(basis: &GradedBasis, letters: &[u16], policy: SignPolicy, coef: &Scalar, prefix: &mut Vec<u16>, out: &mut Element) {
    let n = letters.len();
    if n == 1 {
        prefix.push(letters[0]);
        out.add_term(Word::from_letters(prefix), coef);
        prefix.pop();
        return;
    }
    prefix.push(letters[0]);
    dual_rec(basis, &letters[1..], policy, coef, prefix, out);
    prefix.pop();

    let last = letters[n - 1];
    let mut negative = n == 2 || policy.is_negative(n);
    if basis.is_odd(last) && basis.word_parity(&letters[..n - 1]).is_odd() {
        negative = !negative;
    }
    let c = if negative { -coef.clone() } else { coef.clone() };
    prefix.push(last);
    dual_rec(basis, &letters[..n - 1], policy, &c, prefix, out);
    prefix.pop();
}

/// `[x^1,...,x^n]_* = x^1⊗[x^2..x^n]_* + s(n)(-1)^{|x^n|(|x^1|+...+|x^{n-1}|)} x^n⊗[x^1..x^{n-1}]_*`
/// with `[x^1,x^2]_*` the graded commutator.
pub fn dual_commutator(basis: &Arc<GradedBasis>, letters: &[u16], policy: SignPolicy) -> Element {
    assert!(!letters.is_empty(), "dual commutator of the empty word");
    let mut out = Element::zero(basis);
    dual_rec(basis, letters, policy, &Scalar::one(), &mut Vec::with_capacity(letters.len()), &mut out);
    out
}

/// Linear extension of [`dual_commutator`].
pub fn dual_commutator_element(x: &Element, policy: SignPolicy) -> Element {
    let basis = x.basis();
    let mut out = Element::zero(basis);
    for (w, c) in x.terms() {
        assert!(!w.is_empty(), "dual commutator of the empty word");
        dual_rec(basis, w.letters(), policy, c, &mut Vec::with_capacity(w.len()), &mut out);
    }
    out
}

/// `Σ_i (-1)^{n-i} sh(T(x_{i+1}..x_n), x_1..x_{i-1}) ⊗ x_i`.
pub fn dual_commutator_closed_form(basis: &Arc<GradedBasis>, letters: &[u16]) -> Element {
    let n = letters.len();
    let mut out = Element::zero(basis);
    for i in 1..=n {
        let tail = transpose(&Element::word(basis, Word::from_letters(&letters[i..])));
        let head = Element::word(basis, Word::from_letters(&letters[..i - 1]));
        let term = shuffle(&tail, &head).concat(&Element::word(basis, Word::letter(letters[i - 1])));
        out.add_scaled(&term, &int(if (n - i) % 2 == 0 { 1 } else { -1 }));
    }
    out
}

/// `⟨x, y⟩ = (-1)^{b+1} [x ⊗ T y]_*` for `y` of length `b`, bilinear.
pub fn universal_pairing_with(x: &Element, y: &Element, policy: SignPolicy) -> Result<Element> {
    if !same_basis(x.basis(), y.basis()) {
        return Err(AlgebraError::BasisMismatch);
    }
    if x.contains_empty_word() || y.contains_empty_word() {
        return Err(AlgebraError::EmptyWord);
    }
    let basis = x.basis();
    let mut arg = Element::zero(basis);
    for (w1, c1) in x.terms() {
        for (w2, c2) in y.terms() {
            let mut c = c1 * c2;
            if reversal_negative(basis, w2.letters()) != (w2.len() % 2 == 0) {
                c = -c;
            }
            arg.add_term(w1.concat(&w2.reversed()), &c);
        }
    }
    Ok(dual_commutator_element(&arg, policy))
}

pub fn universal_pairing(x: &Element, y: &Element) -> Result<Element> {
    universal_pairing_with(x, y, SignPolicy::SHIPPED)
}

/// A word on which the universality identity fails, with both sides.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniversalityViolation {
    pub word: Word,
    pub lhs: Element,
    pub rhs: Element,
}

/// Checks `(1/n) Σ c_w ⟨f̂(w_1..w_{n-1}), f(w_n)⟩ = ⟨f̂(x_1..x_{n-1}), f(x_n)⟩`,
/// the sum running over the terms `c_w w` of `[x_1,...,x_n]_*`, for every
/// basis word of length `2..=max_len`.
pub fn pairing_universality_check(f: &LinearMap, max_len: usize) -> Result<Option<UniversalityViolation>> {
    if !matches!(f.target(), ZinbielTarget::Free(_)) {
        return Err(AlgebraError::TargetNotFree);
    }
    let lift = universal_lift(f)?;
    let source = f.source();
    let pair = |w: &Word| -> Result<Element> {
        let (last, head) = w.letters().split_last().expect("length at least two");
        universal_pairing(&lift.eval_word(&Word::from_letters(head))?, f.image(*last as usize))
    };
    for n in 2..=max_len {
        let inv_n = ratio(1, n as i64);
        for w in source.words(n) {
            let mut lhs = Element::zero(f.target().basis());
            for (v, c) in dual_commutator(source, w.letters(), SignPolicy::SHIPPED).terms() {
                lhs.add_scaled(&pair(v)?, &(c * &inv_n));
            }
            let rhs = pair(&w)?;
            if lhs != rhs {
                return Ok(Some(UniversalityViolation { word: w, lhs, rhs }));
            }
        }
    }
    Ok(None)
}

fn check_plane(plane: &SymplecticPlane, a: &AcCochain) -> Result<()> {
    if same_basis(plane.basis(), a.basis()) {
        Ok(())
    } else {
        Err(AlgebraError::PlaneMismatch)
    }
}

/// `{A_1, A_2} = (-1)^{i+j} ω([B_1, B_2](x_1..x_{n-1}), x_n)` where `B_k` is
/// the Hamiltonian field of `A_k`, of arity `i` resp. `j`.
pub fn ac_bracket(plane: &SymplecticPlane, a1: &AcCochain, a2: &AcCochain) -> Result<AcCochain> {
    check_plane(plane, a1)?;
    check_plane(plane, a2)?;
    let b1 = plane.hamiltonian_field(a1);
    let b2 = plane.hamiltonian_field(a2);
    let c = cochain_commutator(&b1, &b2)?;
    // (-1)^{i+j} equals (-1)^{|[B_1,B_2]|}, the sign of the inverse correspondence
    Ok(AcCochain(plane.function_of_field(&c)))
}

/// The same bracket through the transposition formula
/// `(-1)^{i+1} (1/n) ω(B_1, B_2)((1^{⊗i} ⊗ T)[x_1, ..., x_n])`, where
/// `ω(B_1,B_2)(u⊗v) = (-1)^{|B_2||u|} ω(B_1 u, B_2 v)`.
pub fn ac_bracket_transposed(plane: &SymplecticPlane, a1: &AcCochain, a2: &AcCochain) -> Result<AcCochain> {
    check_plane(plane, a1)?;
    check_plane(plane, a2)?;
    let basis = plane.basis();
    let b1 = plane.hamiltonian_field(a1);
    let b2 = plane.hamiltonian_field(a2);
    let (i, j) = (b1.arity(), b2.arity());
    let n = i + j;
    let mut out = MultilinearForm::zero(basis, n);
    if a1.is_zero() || a2.is_zero() {
        return Ok(AcCochain(out));
    }
    let outer_negative = (i + 1) % 2 == 1;
    for w in basis.words(n) {
        let mut total = Scalar::zero();
        for (lw, c) in lie_word(basis, w.letters()).terms() {
            let u = lw.slice(0..i);
            let v = lw.slice(i..n);
            let left = b1.eval(&u);
            if left.is_zero() {
                continue;
            }
            let mut c = c.clone();
            if reversal_negative(basis, v.letters()) {
                c = -c;
            }
            if b2.is_odd() && basis.word_parity(u.letters()).is_odd() {
                c = -c;
            }
            let right = b2.eval(&v.reversed());
            total += plane.omega_elements(&left, &right) * c;
        }
        if outer_negative {
            total = -total;
        }
        out.add(w, &total);
    }
    Ok(AcCochain(out))
}

/// Verdicts of the convention checks for one sign policy; each entry holds
/// the first failing witness, if any.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolicyReport {
    pub policy: SignPolicy,
    pub checks: Vec<(&'static str, Option<String>)>,
}

impl PolicyReport {
    pub fn passes(&self) -> bool {
        self.checks.iter().all(|(_, w)| w.is_none())
    }

    pub fn witness(&self, check: &str) -> Option<&str> {
        self.checks.iter().find(|(name, _)| *name == check).and_then(|(_, w)| w.as_deref())
    }
}

pub const CHECK_TRIANGULARITY: &str = "triangularity";
pub const CHECK_CLOSED_FORM: &str = "closed-shuffle-form";
pub const CHECK_CYCLIC: &str = "cyclic-triple";
pub const CHECK_ANTISYMMETRY: &str = "pairing-antisymmetry";
pub const CHECK_EQ8: &str = "pairing-invariance";
pub const CHECK_EQ9: &str = "pairing-cyclic";

fn show(basis: &GradedBasis, letters: &[u16]) -> String {
    Word::from_letters(letters).display(basis).to_string()
}

/// First word of length `2..=max_len` violating
/// `[x_1..x_n]_* = (-1)^{n+1} [x_n..x_1]_*`.
pub fn triangularity_witness(basis: &Arc<GradedBasis>, max_len: usize, policy: SignPolicy) -> Option<Word> {
    (2..=max_len).flat_map(|n| basis.words(n)).find(|w| {
        let lhs = dual_commutator(basis, w.letters(), policy);
        let mut rhs = dual_commutator(basis, w.reversed().letters(), policy);
        if w.len() % 2 == 0 {
            rhs = rhs.neg();
        }
        if reversal_negative(basis, w.letters()) {
            rhs = rhs.neg();
        }
        lhs != rhs
    })
}

pub fn closed_form_witness(basis: &Arc<GradedBasis>, max_len: usize, policy: SignPolicy) -> Option<Word> {
    (1..=max_len)
        .flat_map(|n| basis.words(n))
        .find(|w| dual_commutator(basis, w.letters(), policy) != dual_commutator_closed_form(basis, w.letters()))
}

/// Cyclic sum `[x1,x2,x3]_* + [x2,x3,x1]_* + [x3,x1,x2]_*` over all letter
/// triples; returns the first triple where it does not vanish.
pub fn cyclic_triple_witness(basis: &Arc<GradedBasis>, policy: SignPolicy) -> Option<Word> {
    basis.words(3).find(|w| {
        let l = w.letters();
        let sum = dual_commutator(basis, l, policy)
            .plus(&dual_commutator(basis, &[l[1], l[2], l[0]], policy))
            .plus(&dual_commutator(basis, &[l[2], l[0], l[1]], policy));
        !sum.is_zero()
    })
}

fn words_up_to(basis: &Arc<GradedBasis>, max_len: usize) -> Vec<Word> {
    (1..=max_len).flat_map(|n| basis.words(n)).collect()
}

pub fn antisymmetry_witness(basis: &Arc<GradedBasis>, max_total: usize, policy: SignPolicy) -> Option<(Word, Word)> {
    let words = words_up_to(basis, max_total.saturating_sub(1));
    for x in &words {
        for y in &words {
            if x.len() + y.len() > max_total {
                continue;
            }
            let (ex, ey) = (Element::word(basis, x.clone()), Element::word(basis, y.clone()));
            let l = universal_pairing_with(&ex, &ey, policy).expect("non-empty words");
            let r = universal_pairing_with(&ey, &ex, policy).expect("non-empty words");
            if l != r.neg() {
                return Some((x.clone(), y.clone()));
            }
        }
    }
    None
}

/// First triple violating `⟨x*y, z⟩ = ⟨z*y, x⟩` and first violating
/// `⟨x*y, z⟩ + ⟨y*z, x⟩ + ⟨z*x, y⟩ = 0`, over words of total length at most
/// `max_total`.
pub fn invariance_witnesses(
    basis: &Arc<GradedBasis>,
    max_total: usize,
    policy: SignPolicy,
) -> (Option<[Word; 3]>, Option<[Word; 3]>) {
    let words = words_up_to(basis, max_total.saturating_sub(2));
    let (mut eq8, mut eq9) = (None, None);
    let pair = |a: &Element, b: &Element| universal_pairing_with(a, b, policy).expect("non-empty words");
    let prod = |a: &Element, b: &Element| zinbiel_product(a, b).expect("non-empty words");
    for x in &words {
        for y in &words {
            for z in &words {
                if x.len() + y.len() + z.len() > max_total {
                    continue;
                }
                let (ex, ey, ez) = (
                    Element::word(basis, x.clone()),
                    Element::word(basis, y.clone()),
                    Element::word(basis, z.clone()),
                );
                let xyz = pair(&prod(&ex, &ey), &ez);
                if eq8.is_none() && xyz != pair(&prod(&ez, &ey), &ex) {
                    eq8 = Some([x.clone(), y.clone(), z.clone()]);
                }
                if eq9.is_none() {
                    let cyc = xyz.plus(&pair(&prod(&ey, &ez), &ex)).plus(&pair(&prod(&ez, &ex), &ey));
                    if !cyc.is_zero() {
                        eq9 = Some([x.clone(), y.clone(), z.clone()]);
                    }
                }
                if eq8.is_some() && eq9.is_some() {
                    return (eq8, eq9);
                }
            }
        }
    }
    (eq8, eq9)
}

/// Runs every convention check for one policy on an even basis of dimension
/// `dim`; the cyclic check uses three distinct letters.
pub fn evaluate_policy(policy: SignPolicy, dim: usize, max_len: usize) -> PolicyReport {
    let basis = GradedBasis::numbered("x", dim, Parity::Even);
    let cyc_basis = GradedBasis::numbered("x", 3, Parity::Even);
    let words = |w: Word| show(&basis, w.letters());
    let triple = |t: [Word; 3]| t.iter().map(|w| format!("({})", show(&basis, w.letters()))).collect::<Vec<_>>().join(" ");
    let (eq8, eq9) = invariance_witnesses(&basis, max_len, policy);
    PolicyReport {
        policy,
        checks: vec![
            (CHECK_TRIANGULARITY, triangularity_witness(&basis, max_len, policy).map(words)),
            (CHECK_CLOSED_FORM, closed_form_witness(&basis, max_len, policy).map(words)),
            (
                CHECK_CYCLIC,
                cyclic_triple_witness(&cyc_basis, policy).map(|w| show(&cyc_basis, w.letters())),
            ),
            (
                CHECK_ANTISYMMETRY,
                antisymmetry_witness(&basis, max_len, policy)
                    .map(|(x, y)| format!("({}) ({})", show(&basis, x.letters()), show(&basis, y.letters()))),
            ),
            (CHECK_EQ8, eq8.map(triple)),
            (CHECK_EQ9, eq9.map(triple)),
        ],
    }
}

/// Outcome of the exhaustive search over sign policies.
#[derive(Clone, Debug)]
pub struct ConventionSearch {
    pub dim: usize,
    pub max_len: usize,
    pub reports: Vec<PolicyReport>,
}

impl ConventionSearch {
    pub fn passing(&self) -> Vec<SignPolicy> {
        self.reports.iter().filter(|r| r.passes()).map(|r| r.policy).collect()
    }

    pub fn transcript(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "dual commutator sign search");
        let _ = writeln!(s, "even letters, dim {} (3 for cyclic triples), word length <= {}", self.dim, self.max_len);
        let _ = writeln!(s, "[x1]_* = x1, [x1,x2]_* = x1x2 - x2x1");
        let _ = writeln!(s, "[x1..xn]_* = x1[x2..xn]_* + s(n) xn[x1..xn-1]_* for n >= 3");
        for r in &self.reports {
            let _ = writeln!(s);
            let _ = writeln!(s, "policy {}", r.policy);
            for (name, w) in &r.checks {
                match w {
                    None => {
                        let _ = writeln!(s, "  {name:<22} pass");
                    }
                    Some(w) => {
                        let _ = writeln!(s, "  {name:<22} FAIL at {w}");
                    }
                }
            }
        }
        let _ = writeln!(s);
        let passing: Vec<&str> = self.passing().into_iter().map(SignPolicy::id).collect();
        let _ = writeln!(s, "passing: {}", if passing.is_empty() { "none".to_string() } else { passing.join(", ") });
        let _ = writeln!(s, "shipped: {}", SignPolicy::SHIPPED);
        s
    }
}

pub fn convention_search(dim: usize, max_len: usize) -> ConventionSearch {
    ConventionSearch {
        dim,
        max_len,
        reports: SignPolicy::ALL.iter().map(|&p| evaluate_policy(p, dim, max_len)).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn odd(dim: usize) -> Arc<GradedBasis> {
        GradedBasis::numbered("x", dim, Parity::Odd)
    }

    fn even(dim: usize) -> Arc<GradedBasis> {
        GradedBasis::numbered("x", dim, Parity::Even)
    }

    fn w(b: &Arc<GradedBasis>, l: &[usize]) -> Element {
        Element::from_letters(b, l)
    }

    #[test]
    fn lie_words_on_odd_letters() {
        let b = odd(3);
        assert_eq!(lie_word(&b, &[0]), w(&b, &[0]));
        assert_eq!(lie_word(&b, &[0, 1]), w(&b, &[0, 1]).plus(&w(&b, &[1, 0])));
        let expected = w(&b, &[0, 1, 2])
            .plus(&w(&b, &[0, 2, 1]))
            .sub(&w(&b, &[1, 2, 0]))
            .sub(&w(&b, &[2, 1, 0]));
        assert_eq!(lie_word(&b, &[0, 1, 2]), expected);
    }

    #[test]
    fn projection_of_a_single_word() {
        let b = odd(3);
        let a = MultilinearForm::new(&b, 3, [(Word::from_indices(&[0, 1, 2]), int(3))]).unwrap();
        let p = ac_project(&a);
        // P(A)(x1,x2,x3) = 1/3 (A(x1x2x3) + A(x1x3x2) - A(x2x3x1) - A(x3x2x1))
        assert_eq!(p.eval(&Word::from_indices(&[0, 1, 2])), int(1));
        assert_eq!(p.eval(&Word::from_indices(&[0, 2, 1])), int(1));
        assert_eq!(p.eval(&Word::from_indices(&[2, 0, 1])), int(-1));
        assert_eq!(ac_project(p.form()), p);
    }

    #[test]
    fn non_anticyclic_rejected() {
        let b = odd(2);
        let a = MultilinearForm::new(&b, 2, [(Word::from_indices(&[0, 1]), int(1))]).unwrap();
        assert!(matches!(AcCochain::new(a), Err(AlgebraError::NotAnticyclic(_))));
    }

    #[test]
    fn rotation_at_three() {
        let b = odd(3);
        let a = MultilinearForm::new(&b, 3, [(Word::from_indices(&[0, 1, 2]), int(1)), (Word::from_indices(&[2, 2, 1]), int(5))]).unwrap();
        let p = ac_project(&a);
        assert_eq!(rotation_identity_check(&p, 2), None);
        assert_eq!(rotation_identity_check(&p, 3), None);
        let x = |l: &[usize]| p.eval(&Word::from_indices(l));
        assert_eq!(x(&[0, 1, 2]), -x(&[1, 2, 0]) - x(&[2, 1, 0]));
        assert_eq!(rotation_identity_check(&AcCochain::zero(&b, 3), 2), None);
    }

    #[test]
    fn dual_commutator_small() {
        let b = even(3);
        assert_eq!(dual_commutator(&b, &[0], SignPolicy::SHIPPED), w(&b, &[0]));
        assert_eq!(dual_commutator(&b, &[0, 1], SignPolicy::SHIPPED), w(&b, &[0, 1]).sub(&w(&b, &[1, 0])));
        assert_eq!(dual_commutator_closed_form(&b, &[0, 1]), w(&b, &[0, 1]).sub(&w(&b, &[1, 0])));
        assert_eq!(dual_commutator_closed_form(&b, &[2]), w(&b, &[2]));
    }

    #[test]
    fn graded_dual_commutator_matches_mu_shape() {
        let b = odd(3);
        let expected = w(&b, &[0, 1, 2]).plus(&w(&b, &[0, 2, 1])).sub(&w(&b, &[2, 0, 1])).sub(&w(&b, &[2, 1, 0]));
        assert_eq!(dual_commutator(&b, &[0, 1, 2], SignPolicy::SHIPPED), expected);
    }

    #[test]
    fn shipped_policy_properties() {
        let b = even(2);
        assert_eq!(triangularity_witness(&b, 5, SignPolicy::SHIPPED), None);
        assert_eq!(closed_form_witness(&b, 5, SignPolicy::SHIPPED), None);
        assert_eq!(cyclic_triple_witness(&even(3), SignPolicy::SHIPPED), None);
    }

    #[test]
    fn flipped_sign_breaks_triangularity_at_length_three() {
        let w = triangularity_witness(&even(2), 5, SignPolicy::Plus).unwrap();
        assert_eq!(w.len(), 3);
    }

    #[test]
    fn pairing_of_letters() {
        let b = even(2);
        let p = universal_pairing(&w(&b, &[0]), &w(&b, &[1])).unwrap();
        assert_eq!(p, w(&b, &[0, 1]).sub(&w(&b, &[1, 0])));
        assert_eq!(universal_pairing(&Element::unit(&b), &w(&b, &[1])), Err(AlgebraError::EmptyWord));
    }

    #[test]
    fn only_minus_survives_search() {
        let s = convention_search(2, 4);
        assert_eq!(s.passing(), vec![SignPolicy::Minus]);
    }

    #[test]
    fn universality_for_inclusion() {
        let b = even(2);
        assert_eq!(pairing_universality_check(&LinearMap::inclusion(&b), 4).unwrap(), None);
    }
}
