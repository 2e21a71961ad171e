//! Bar cochains `Πg^{⊗i} -> Πg` and their extension to coderivations of the
//! cofree Zinbiel coalgebra. The commutator of coderivations makes them a
//! graded Lie algebra; a binary `B` with `[B,B] = 0` is a Leibniz bracket and
//! `[B,-]` is the Loday-Pirashvili differential.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_traits::One;

use crate::anticyclic::{lie_bracket, lie_word, lie_word_of};
use crate::combinatorics::for_each_unshuffle;
use crate::error::{AlgebraError, Result};
use crate::graded::{same_basis, Element, GradedBasis, Parity, Word};
use crate::linalg::SparseSpan;
use crate::scalar::Scalar;
use crate::zinbiel::{cofree_coproduct, TensorSquare};

/// Structure constants `[e_i, e_j] = Σ_k C_ij^k e_k`.
#[derive(Clone, PartialEq, Eq)]
pub struct LeibnizTable {
    basis: Arc<GradedBasis>,
    brackets: BTreeMap<(u16, u16), Element>,
}

impl LeibnizTable {
    pub fn new<I>(basis: &Arc<GradedBasis>, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, usize, Scalar)>,
    {
        let mut brackets: BTreeMap<(u16, u16), Element> = BTreeMap::new();
        for (i, j, k, c) in entries {
            let (i, j, k) = (basis.check_letter(i)?, basis.check_letter(j)?, basis.check_letter(k)?);
            brackets
                .entry((i, j))
                .or_insert_with(|| Element::zero(basis))
                .add_term(Word::letter(k), &c);
        }
        brackets.retain(|_, e| !e.is_zero());
        Ok(LeibnizTable {
            basis: basis.clone(),
            brackets,
        })
    }

    pub fn abelian(basis: &Arc<GradedBasis>) -> Self {
        LeibnizTable {
            basis: basis.clone(),
            brackets: BTreeMap::new(),
        }
    }

    pub fn basis(&self) -> &Arc<GradedBasis> {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.dim()
    }

    pub fn is_abelian(&self) -> bool {
        self.brackets.is_empty()
    }

    pub fn constant(&self, i: usize, j: usize, k: usize) -> Scalar {
        self.brackets
            .get(&(i as u16, j as u16))
            .map(|e| e.coefficient(&Word::letter(k as u16)))
            .unwrap_or_else(crate::scalar::zero)
    }

    /// Nonzero constants as `(i, j, k, C_ij^k)`, 0-based.
    pub fn entries(&self) -> Vec<(usize, usize, usize, Scalar)> {
        let mut out = vec![];
        for (&(i, j), e) in &self.brackets {
            for (w, c) in e.terms() {
                out.push((i as usize, j as usize, w.letters()[0] as usize, c.clone()));
            }
        }
        out
    }

    pub fn bracket_of_generators(&self, i: usize, j: usize) -> Element {
        self.brackets
            .get(&(i as u16, j as u16))
            .cloned()
            .unwrap_or_else(|| Element::zero(&self.basis))
    }

    /// Bilinear bracket of linear elements.
    pub fn bracket(&self, x: &Element, y: &Element) -> Element {
        let mut out = Element::zero(&self.basis);
        for (w1, c1) in x.terms() {
            for (w2, c2) in y.terms() {
                if let Some(b) = self.brackets.get(&(w1.letters()[0], w2.letters()[0])) {
                    out.add_scaled(b, &(c1 * c2));
                }
            }
        }
        out
    }

    /// The binary cochain `B(x, y) = [x, y]` on the odd shift `Πg`.
    pub fn to_cochain(&self) -> BarCochain {
        let odd = self.basis.with_uniform_parity(Parity::Odd);
        let table = self
            .brackets
            .iter()
            .map(|(&(i, j), e)| (Word::from_letters(&[i, j]), e.map_words(&odd, |w| (w.clone(), false))))
            .collect();
        BarCochain {
            basis: odd,
            arity: 2,
            table,
        }
    }
}

impl fmt::Debug for LeibnizTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut m = f.debug_map();
        for (&(i, j), e) in &self.brackets {
            m.entry(&format!("[{},{}]", self.basis.name(i as usize), self.basis.name(j as usize)), &e.to_string());
        }
        m.finish()
    }
}

/// Both sides of a failed Leibniz identity on a basis triple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TripleViolation {
    pub triple: [usize; 3],
    pub lhs: Element,
    pub rhs: Element,
}

impl TripleViolation {
    pub fn residual(&self) -> Element {
        self.lhs.sub(&self.rhs)
    }
}

impl fmt::Display for TripleViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "triple {:?}: lhs = {}, rhs = {}", self.triple, self.lhs, self.rhs)
    }
}

/// `[x1,[x2,x3]] = [[x1,x2],x3] + [x2,[x1,x3]]` on every basis triple.
pub fn leibniz_identity_check(t: &LeibnizTable) -> Option<TripleViolation> {
    let b = t.basis();
    let e = |i: usize| Element::letter(b, i);
    for i in 0..t.dim() {
        for j in 0..t.dim() {
            for k in 0..t.dim() {
                let lhs = t.bracket(&e(i), &t.bracket(&e(j), &e(k)));
                let rhs = t
                    .bracket(&t.bracket(&e(i), &e(j)), &e(k))
                    .plus(&t.bracket(&e(j), &t.bracket(&e(i), &e(k))));
                if lhs != rhs {
                    return Some(TripleViolation {
                        triple: [i, j, k],
                        lhs,
                        rhs,
                    });
                }
            }
        }
    }
    None
}

/// Multilinear `B: V^{⊗i} -> V` of parity `i + 1`, stored on basis words.
#[derive(Clone, PartialEq, Eq)]
pub struct BarCochain {
    basis: Arc<GradedBasis>,
    arity: usize,
    table: BTreeMap<Word, Element>,
}

impl BarCochain {
    pub fn zero(basis: &Arc<GradedBasis>, arity: usize) -> Self {
        assert!(arity >= 1, "bar cochains have arity at least one");
        BarCochain {
            basis: basis.clone(),
            arity,
            table: BTreeMap::new(),
        }
    }

    pub fn new<I>(basis: &Arc<GradedBasis>, arity: usize, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Word, Element)>,
    {
        if arity == 0 {
            return Err(AlgebraError::WrongArity { expected: 1, got: 0 });
        }
        let mut table: BTreeMap<Word, Element> = BTreeMap::new();
        for (w, v) in entries {
            if w.len() != arity {
                return Err(AlgebraError::LengthMismatch {
                    expected: arity,
                    got: w.len(),
                });
            }
            for &l in w.letters() {
                basis.check_letter(l as usize)?;
            }
            if !same_basis(basis, v.basis()) {
                return Err(AlgebraError::BasisMismatch);
            }
            if let Some(&bad) = v.lengths().iter().find(|&&l| l != 1) {
                return Err(AlgebraError::LengthMismatch { expected: 1, got: bad });
            }
            table.entry(w).or_insert_with(|| Element::zero(basis)).add_scaled(&v, &Scalar::one());
        }
        table.retain(|_, e| !e.is_zero());
        Ok(BarCochain {
            basis: basis.clone(),
            arity,
            table,
        })
    }

    pub fn basis(&self) -> &Arc<GradedBasis> {
        &self.basis
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn parity(&self) -> Parity {
        Parity::of_count(self.arity + 1)
    }

    pub fn is_odd(&self) -> bool {
        self.parity().is_odd()
    }

    pub fn is_zero(&self) -> bool {
        self.table.is_empty()
    }

    pub fn entries(&self) -> impl Iterator<Item = (&Word, &Element)> {
        self.table.iter()
    }

    pub fn eval(&self, w: &Word) -> Element {
        debug_assert_eq!(w.len(), self.arity);
        self.table.get(w).cloned().unwrap_or_else(|| Element::zero(&self.basis))
    }

    /// Linear extension to the length-`arity` part of `x`; other lengths are
    /// ignored.
    pub fn eval_element(&self, x: &Element) -> Element {
        let mut out = Element::zero(&self.basis);
        for (w, c) in x.terms() {
            if w.len() == self.arity {
                if let Some(v) = self.table.get(w) {
                    out.add_scaled(v, c);
                }
            }
        }
        out
    }

    /// `B_x(y_2, ..., y_i) = B(x, y_2, ..., y_i)`.
    pub fn partial(&self, x: u16) -> Result<BarCochain> {
        if self.arity < 2 {
            return Err(AlgebraError::WrongArity {
                expected: 2,
                got: self.arity,
            });
        }
        let table = self
            .table
            .iter()
            .filter(|(w, _)| w.letters()[0] == x)
            .map(|(w, v)| (w.slice(1..w.len()), v.clone()))
            .collect();
        Ok(BarCochain {
            basis: self.basis.clone(),
            arity: self.arity - 1,
            table,
        })
    }

    pub fn scaled(&self, c: &Scalar) -> BarCochain {
        let mut table = self.table.clone();
        for v in table.values_mut() {
            *v = v.scaled(c);
        }
        table.retain(|_, e| !e.is_zero());
        BarCochain {
            basis: self.basis.clone(),
            arity: self.arity,
            table,
        }
    }

    /// `self + c * other`; arities must agree.
    pub fn plus_scaled(&self, other: &BarCochain, c: &Scalar) -> Result<BarCochain> {
        if !same_basis(&self.basis, &other.basis) {
            return Err(AlgebraError::BasisMismatch);
        }
        if self.arity != other.arity {
            return Err(AlgebraError::WrongArity {
                expected: self.arity,
                got: other.arity,
            });
        }
        let mut table = self.table.clone();
        for (w, v) in &other.table {
            table.entry(w.clone()).or_insert_with(|| Element::zero(&self.basis)).add_scaled(v, c);
        }
        table.retain(|_, e| !e.is_zero());
        Ok(BarCochain {
            basis: self.basis.clone(),
            arity: self.arity,
            table,
        })
    }
}

impl fmt::Debug for BarCochain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BarCochain(arity {}) {{", self.arity)?;
        for (k, (w, v)) in self.table.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, " {} -> {}", w.display(&self.basis), v)?;
        }
        write!(f, " }}")
    }
}

/// The `j`-th summand of `B̂(w)`: `j` letters pass in front of `B`, whose last
/// input is the letter at position `i + j`.
pub fn extend_coderivation_part(b: &BarCochain, w: &Word, j: usize) -> Element {
    let basis = b.basis();
    let (i, n) = (b.arity(), w.len());
    let mut out = Element::zero(basis);
    if n < i || j > n - i {
        return out;
    }
    let letters = w.letters();
    let m = i + j - 1;
    for_each_unshuffle(basis, &letters[..m], j, |pre, mid, negative| {
        let passed = pre.iter().filter(|&&p| basis.is_odd(letters[p])).count();
        let negative = negative ^ (b.is_odd() && passed % 2 == 1);
        let mut input: Word = Word(mid.iter().map(|&p| letters[p]).collect());
        input.0.push(letters[m]);
        let Some(value) = b.table.get(&input) else {
            return;
        };
        for (v, c) in value.terms() {
            let mut out_word = Word(pre.iter().map(|&p| letters[p]).collect());
            out_word.0.extend_from_slice(v.letters());
            out_word.0.extend_from_slice(&letters[m + 1..]);
            out.add_signed(out_word, c, negative);
        }
    });
    out
}

/// The coderivation `B̂` on a word; zero on words shorter than the arity.
pub fn extend_coderivation(b: &BarCochain, w: &Word) -> Element {
    let mut out = Element::zero(b.basis());
    if w.len() < b.arity() {
        return out;
    }
    for j in 0..=w.len() - b.arity() {
        out.add_scaled(&extend_coderivation_part(b, w, j), &Scalar::one());
    }
    out
}

pub fn extend_coderivation_element(b: &BarCochain, x: &Element) -> Element {
    let mut out = Element::zero(b.basis());
    for (w, c) in x.terms() {
        out.add_scaled(&extend_coderivation(b, w), c);
    }
    out
}

/// `Δ B̂(w) - (B̂ ⊗ id + id ⊗ B̂) Δ(w)`, where `id ⊗ B̂` picks up the Koszul
/// sign of `B` passing the left factor. Zero for every word iff `B̂` is a
/// coderivation.
pub fn coderivation_defect(b: &BarCochain, w: &Word) -> TensorSquare {
    let basis = b.basis();
    let mut out = TensorSquare::zero(basis);
    for (v, c) in extend_coderivation(b, w).terms() {
        out.add_scaled(&cofree_coproduct(basis, v), c);
    }
    let minus = -Scalar::one();
    for ((l, r), c) in cofree_coproduct(basis, w).terms() {
        for (bl, cl) in extend_coderivation(b, l).terms() {
            out.add_term(bl.clone(), r.clone(), &(c * cl * &minus));
        }
        let flip = b.is_odd() && basis.word_parity(l.letters()).is_odd();
        for (br, cr) in extend_coderivation(b, r).terms() {
            let v = c * cr;
            out.add_term(l.clone(), br.clone(), &if flip { v } else { -v });
        }
    }
    out
}

/// `[B1, B2] = B1 ∘ B̂2 - (-1)^{|B1||B2|} B2 ∘ B̂1`, of arity `i + j - 1`.
pub fn cochain_commutator(b1: &BarCochain, b2: &BarCochain) -> Result<BarCochain> {
    if !same_basis(b1.basis(), b2.basis()) {
        return Err(AlgebraError::BasisMismatch);
    }
    let basis = b1.basis();
    let arity = b1.arity() + b2.arity() - 1;
    let swap = if b1.is_odd() && b2.is_odd() {
        Scalar::one()
    } else {
        -Scalar::one()
    };
    let mut table = BTreeMap::new();
    if b1.is_zero() || b2.is_zero() {
        return Ok(BarCochain {
            basis: basis.clone(),
            arity,
            table,
        });
    }
    for w in basis.words(arity) {
        let mut v = b1.eval_element(&extend_coderivation(b2, &w));
        v.add_scaled(&b2.eval_element(&extend_coderivation(b1, &w)), &swap);
        if !v.is_zero() {
            table.insert(w, v);
        }
    }
    Ok(BarCochain {
        basis: basis.clone(),
        arity,
        table,
    })
}

/// `d(A) = [B, A]` for a binary `B` with `[B, B] = 0`.
pub fn lp_differential(b: &BarCochain, a: &BarCochain) -> Result<BarCochain> {
    if b.arity() != 2 {
        return Err(AlgebraError::WrongArity {
            expected: 2,
            got: b.arity(),
        });
    }
    if !cochain_commutator(b, b)?.is_zero() {
        return Err(AlgebraError::NotLeibniz);
    }
    cochain_commutator(b, a)
}

/// `B[x_1, ..., x_n]` through the recursion
/// `B[x_1..x_n] = B_{x_1}[x_2..x_n] + (-1)^{|B||x_1|} [x_1, B[x_2..x_n]]`.
pub fn apply_to_lie_word(b: &BarCochain, letters: &[u16]) -> Result<Element> {
    let (i, n) = (b.arity(), letters.len());
    if n < i {
        return Err(AlgebraError::TooShort { len: n, arity: i });
    }
    let basis = b.basis();
    if n == i {
        return Ok(b.eval_element(&lie_word(basis, letters)));
    }
    let x = letters[0];
    let head = Element::word(basis, Word::letter(x));
    let tail = lie_bracket(&head, &apply_to_lie_word(b, &letters[1..])?);
    let first = if i == 1 {
        let mut args = vec![b.eval(&Word::letter(x))];
        args.extend(letters[1..].iter().map(|&y| Element::word(basis, Word::letter(y))));
        lie_word_of(&args)
    } else {
        apply_to_lie_word(&b.partial(x)?, &letters[1..])?
    };
    let sign = if b.is_odd() && basis.is_odd(x) { -Scalar::one() } else { Scalar::one() };
    let mut out = first;
    out.add_scaled(&tail, &sign);
    Ok(out)
}

/// Linear span of the right-normalized Lie words of each length occurring in
/// `x`; true iff `x` lies in the free Lie algebra.
pub fn in_lie_span(x: &Element) -> bool {
    let basis = x.basis();
    x.lengths().into_iter().all(|n| {
        if n == 0 {
            return false;
        }
        let mut span = SparseSpan::new();
        for w in basis.words(n) {
            span.insert(lie_word(basis, w.letters()).into_terms());
        }
        span.contains(x.homogeneous_part(n).into_terms())
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    fn odd(dim: usize) -> Arc<GradedBasis> {
        GradedBasis::numbered("x", dim, Parity::Odd)
    }

    fn letter(b: &Arc<GradedBasis>, i: usize) -> Element {
        Element::letter(b, i)
    }

    /// A dense cochain whose value on `x_a..x_z` is `Σ_k (1 + a + 2k + ...) x_k`.
    fn sample(b: &Arc<GradedBasis>, arity: usize, seed: i64) -> BarCochain {
        let entries = b.words(arity).enumerate().map(|(idx, w)| {
            let mut v = Element::zero(b);
            for k in 0..b.dim() {
                let c = ((idx as i64 * 7 + k as i64 * 3 + seed) % 5) - 2;
                v.add_term(Word::letter(k as u16), &int(c));
            }
            (w, v)
        });
        BarCochain::new(b, arity, entries).unwrap()
    }

    #[test]
    fn arity_word_is_plain_evaluation() {
        let b = odd(2);
        let c = sample(&b, 2, 1);
        for w in b.words(2) {
            assert_eq!(extend_coderivation(&c, &w), c.eval(&w));
        }
    }

    #[test]
    fn binary_extension_on_three_odd_letters() {
        let b = odd(3);
        let names: Vec<Word> = b.words(2).collect();
        // B(x_a, x_b) = x_a so that every term stays distinguishable
        let c = BarCochain::new(&b, 2, names.iter().map(|w| (w.clone(), letter(&b, w.letters()[0] as usize)))).unwrap();
        let w = Word::from_indices(&[0, 1, 2]);
        let expected = Element::from_letters(&b, &[0, 2])
            .sub(&Element::from_letters(&b, &[0, 1]))
            .plus(&Element::from_letters(&b, &[1, 0]));
        assert_eq!(extend_coderivation(&c, &w), expected);
    }

    #[test]
    fn coderivation_law_small() {
        let b = odd(2);
        for arity in 1..=3 {
            let c = sample(&b, arity, arity as i64);
            for n in 1..=4 {
                for w in b.words(n) {
                    assert!(coderivation_defect(&c, &w).is_zero(), "arity {arity} word {w:?}");
                }
            }
        }
    }

    #[test]
    fn leibniz_examples() {
        let one = GradedBasis::numbered("e", 1, Parity::Even);
        let two = GradedBasis::numbered("e", 2, Parity::Even);
        assert!(leibniz_identity_check(&LeibnizTable::abelian(&two)).is_none());
        let nil = LeibnizTable::new(&two, [(0, 0, 1, int(1))]).unwrap();
        assert!(leibniz_identity_check(&nil).is_none());
        let bad = LeibnizTable::new(&one, [(0, 0, 0, int(1))]).unwrap();
        let v = leibniz_identity_check(&bad).unwrap();
        assert_eq!(v.lhs, letter(&one, 0));
        assert_eq!(v.rhs, letter(&one, 0).scaled(&int(2)));
    }

    #[test]
    fn bracket_squared_detects_leibniz() {
        let one = GradedBasis::numbered("e", 1, Parity::Even);
        let two = GradedBasis::numbered("e", 2, Parity::Even);
        let nil = LeibnizTable::new(&two, [(0, 0, 1, int(1))]).unwrap().to_cochain();
        assert!(cochain_commutator(&nil, &nil).unwrap().is_zero());
        let bad = LeibnizTable::new(&one, [(0, 0, 0, int(1))]).unwrap().to_cochain();
        assert!(!cochain_commutator(&bad, &bad).unwrap().is_zero());
    }

    #[test]
    fn commutator_with_zero() {
        let b = odd(2);
        let c = sample(&b, 2, 0);
        assert!(cochain_commutator(&c, &BarCochain::zero(&b, 3)).unwrap().is_zero());
    }

    #[test]
    fn differential_squares_to_zero() {
        let two = GradedBasis::numbered("e", 2, Parity::Even);
        let d = LeibnizTable::new(&two, [(0, 0, 1, int(1))]).unwrap().to_cochain();
        for arity in 1..=2 {
            let a = sample(d.basis(), arity, 3);
            let da = lp_differential(&d, &a).unwrap();
            assert_eq!(da.arity(), arity + 1);
            assert!(lp_differential(&d, &da).unwrap().is_zero());
        }
        let one = GradedBasis::numbered("e", 1, Parity::Even);
        let bad = LeibnizTable::new(&one, [(0, 0, 0, int(1))]).unwrap().to_cochain();
        let a = sample(bad.basis(), 1, 0);
        assert_eq!(lp_differential(&bad, &a), Err(AlgebraError::NotLeibniz));
    }

    #[test]
    fn recursion_matches_direct_evaluation() {
        let b = odd(2);
        for arity in 1..=3 {
            let c = sample(&b, arity, 2 * arity as i64);
            for n in arity..=5 {
                for w in b.words(n) {
                    let direct = extend_coderivation_element(&c, &lie_word(&b, w.letters()));
                    let rec = apply_to_lie_word(&c, w.letters()).unwrap();
                    assert_eq!(direct, rec, "arity {arity} word {w:?}");
                }
            }
        }
    }

    #[test]
    fn lie_span_membership() {
        let b = odd(2);
        assert!(in_lie_span(&lie_word(&b, &[0, 1, 1])));
        assert!(!in_lie_span(&Element::from_letters(&b, &[0, 1])));
        assert!(in_lie_span(&Element::zero(&b)));
    }

    #[test]
    fn too_short_rejected() {
        let b = odd(2);
        let c = sample(&b, 3, 0);
        assert_eq!(apply_to_lie_word(&c, &[0, 1]), Err(AlgebraError::TooShort { len: 2, arity: 3 }));
    }
}
