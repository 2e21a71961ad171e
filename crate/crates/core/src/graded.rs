//! Sparse exact tensor algebra over a graded basis.
//!
//! A [`Word`] is a monomial `x_1 ⊗ ... ⊗ x_n` of generator indices and an
//! [`Element`] is a finite linear combination of words with rational
//! coefficients. Elements are always normalized: no zero coefficients, words
//! kept in the lexicographic order of [`Word`].

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};
use smallvec::SmallVec;

use crate::error::{AlgebraError, Result};
use crate::scalar::{format_scalar, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn is_odd(self) -> bool {
        matches!(self, Parity::Odd)
    }

    pub fn from_bit(odd: bool) -> Self {
        if odd {
            Parity::Odd
        } else {
            Parity::Even
        }
    }

    pub fn of_count(n: usize) -> Self {
        Self::from_bit(n % 2 == 1)
    }
}

impl std::ops::Add for Parity {
    type Output = Parity;

    fn add(self, rhs: Parity) -> Parity {
        Parity::from_bit(self.is_odd() != rhs.is_odd())
    }
}

/// Ordered generator set with a parity for every generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedBasis {
    names: Vec<String>,
    parity: Vec<Parity>,
}

impl GradedBasis {
    pub fn new(names: Vec<String>, parity: Vec<Parity>) -> Result<Arc<Self>> {
        if names.is_empty() {
            return Err(AlgebraError::EmptyBasis);
        }
        if names.len() != parity.len() {
            return Err(AlgebraError::ParityCount {
                names: names.len(),
                parities: parity.len(),
            });
        }
        for (i, n) in names.iter().enumerate() {
            if names[..i].contains(n) {
                return Err(AlgebraError::DuplicateGenerator(n.clone()));
            }
        }
        if names.len() > u16::MAX as usize {
            return Err(AlgebraError::IndexOutOfRange {
                index: names.len(),
                dim: u16::MAX as usize,
            });
        }
        Ok(Arc::new(GradedBasis { names, parity }))
    }

    /// Generators `prefix1 .. prefix{dim}` all of the same parity.
    pub fn numbered(prefix: &str, dim: usize, parity: Parity) -> Arc<Self> {
        let names = (1..=dim).map(|i| format!("{prefix}{i}")).collect();
        Self::new(names, vec![parity; dim]).expect("numbered basis is valid")
    }

    /// The same generator names with every parity replaced by `parity`.
    pub fn with_uniform_parity(&self, parity: Parity) -> Arc<Self> {
        Arc::new(GradedBasis {
            names: self.names.clone(),
            parity: vec![parity; self.names.len()],
        })
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn parity(&self, i: usize) -> Parity {
        self.parity[i]
    }

    pub fn is_odd(&self, letter: u16) -> bool {
        self.parity[letter as usize].is_odd()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn word_parity(&self, w: &[u16]) -> Parity {
        Parity::of_count(w.iter().filter(|&&x| self.is_odd(x)).count())
    }

    pub fn check_letter(&self, i: usize) -> Result<u16> {
        if i < self.dim() {
            Ok(i as u16)
        } else {
            Err(AlgebraError::IndexOutOfRange {
                index: i,
                dim: self.dim(),
            })
        }
    }

    /// All words of length `n`, in lexicographic order.
    pub fn words(&self, n: usize) -> impl Iterator<Item = Word> {
        let dim = self.dim();
        let total = dim.checked_pow(n as u32).expect("word enumeration overflow");
        (0..total).map(move |mut code| {
            let mut letters: SmallVec<[u16; 8]> = smallvec::smallvec![0; n];
            for slot in letters.iter_mut().rev() {
                *slot = (code % dim) as u16;
                code /= dim;
            }
            Word(letters)
        })
    }
}

pub fn same_basis(a: &Arc<GradedBasis>, b: &Arc<GradedBasis>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

/// A monomial of the tensor algebra; the empty word is the unit.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word(pub SmallVec<[u16; 8]>);

impl Word {
    pub fn empty() -> Self {
        Word(SmallVec::new())
    }

    pub fn letter(i: u16) -> Self {
        Word(smallvec::smallvec![i])
    }

    pub fn from_letters(letters: &[u16]) -> Self {
        Word(SmallVec::from_slice(letters))
    }

    pub fn from_indices(letters: &[usize]) -> Self {
        Word(letters.iter().map(|&x| x as u16).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[u16] {
        &self.0
    }

    pub fn last(&self) -> Option<u16> {
        self.0.last().copied()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn push(&self, letter: u16) -> Word {
        let mut v = self.0.clone();
        v.push(letter);
        Word(v)
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    pub fn slice(&self, range: std::ops::Range<usize>) -> Word {
        Word::from_letters(&self.0[range])
    }

    pub fn display<'a>(&'a self, basis: &'a GradedBasis) -> WordDisplay<'a> {
        WordDisplay { word: self, basis }
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0.as_slice())
    }
}

pub struct WordDisplay<'a> {
    word: &'a Word,
    basis: &'a GradedBasis,
}

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            return write!(f, "∅");
        }
        for (k, &x) in self.word.letters().iter().enumerate() {
            if k > 0 {
                write!(f, "⊗")?;
            }
            write!(f, "{}", self.basis.name(x as usize))?;
        }
        Ok(())
    }
}

/// Koszul sign of a rearrangement: `output[k] = input[perm[k]]`, and every
/// inversion of two odd slots contributes a factor `-1`.
pub fn koszul_sign(perm: &[usize], parities: &[Parity]) -> Result<Scalar> {
    if perm.len() != parities.len() {
        return Err(AlgebraError::LengthMismatch {
            expected: parities.len(),
            got: perm.len(),
        });
    }
    let mut seen = vec![false; perm.len()];
    for &p in perm {
        if p >= perm.len() || seen[p] {
            return Err(AlgebraError::NotAPermutation(perm.len()));
        }
        seen[p] = true;
    }
    let odd: Vec<bool> = parities.iter().map(|p| p.is_odd()).collect();
    Ok(crate::scalar::sign(koszul_negative(perm, &odd)))
}

pub(crate) fn koszul_negative(perm: &[usize], odd: &[bool]) -> bool {
    let mut neg = false;
    for a in 0..perm.len() {
        for b in a + 1..perm.len() {
            if perm[a] > perm[b] && odd[perm[a]] && odd[perm[b]] {
                neg = !neg;
            }
        }
    }
    neg
}

/// Sign of reversing a word: `(-1)^(m(m-1)/2)` for `m` odd letters.
pub(crate) fn reversal_negative(basis: &GradedBasis, w: &[u16]) -> bool {
    let m = w.iter().filter(|&&x| basis.is_odd(x)).count();
    (m * m.saturating_sub(1) / 2) % 2 == 1
}

/// Normalized sparse linear combination of words over one basis.
#[derive(Clone, PartialEq, Eq)]
pub struct Element {
    basis: Arc<GradedBasis>,
    terms: BTreeMap<Word, Scalar>,
}

impl Element {
    pub fn zero(basis: &Arc<GradedBasis>) -> Self {
        Element {
            basis: basis.clone(),
            terms: BTreeMap::new(),
        }
    }

    /// The empty word with coefficient one.
    pub fn unit(basis: &Arc<GradedBasis>) -> Self {
        Self::word(basis, Word::empty())
    }

    pub fn word(basis: &Arc<GradedBasis>, w: Word) -> Self {
        let mut e = Self::zero(basis);
        e.terms.insert(w, Scalar::one());
        e
    }

    pub fn letter(basis: &Arc<GradedBasis>, i: usize) -> Self {
        Self::word(basis, Word::letter(i as u16))
    }

    pub fn from_letters(basis: &Arc<GradedBasis>, letters: &[usize]) -> Self {
        Self::word(basis, Word::from_indices(letters))
    }

    pub fn from_terms<I>(basis: &Arc<GradedBasis>, terms: I) -> Self
    where
        I: IntoIterator<Item = (Word, Scalar)>,
    {
        let mut e = Self::zero(basis);
        for (w, c) in terms {
            e.add_term(w, &c);
        }
        e
    }

    pub fn basis(&self) -> &Arc<GradedBasis> {
        &self.basis
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Scalar)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> BTreeMap<Word, Scalar> {
        self.terms
    }

    pub fn coefficient(&self, w: &Word) -> Scalar {
        self.terms.get(w).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn contains_empty_word(&self) -> bool {
        self.terms.contains_key(&Word::empty())
    }

    pub fn add_term(&mut self, w: Word, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub(crate) fn add_signed(&mut self, w: Word, c: &Scalar, negative: bool) {
        if negative {
            self.add_term(w, &-c);
        } else {
            self.add_term(w, c);
        }
    }

    /// `self += c * other`. Panics if the bases differ.
    pub fn add_scaled(&mut self, other: &Element, c: &Scalar) {
        assert!(
            same_basis(&self.basis, &other.basis),
            "add_scaled across different bases"
        );
        if c.is_zero() {
            return;
        }
        for (w, v) in &other.terms {
            self.add_term(w.clone(), &(v * c));
        }
    }

    pub fn try_add(&self, other: &Element) -> Result<Element> {
        linear_combine(&[(Scalar::one(), self), (Scalar::one(), other)])
    }

    pub fn scaled(&self, c: &Scalar) -> Element {
        let mut out = Self::zero(&self.basis);
        out.add_scaled(self, c);
        out
    }

    pub fn neg(&self) -> Element {
        self.scaled(&-Scalar::one())
    }

    /// `self - other`, panicking on basis mismatch.
    pub fn sub(&self, other: &Element) -> Element {
        let mut out = self.clone();
        out.add_scaled(other, &-Scalar::one());
        out
    }

    pub fn plus(&self, other: &Element) -> Element {
        let mut out = self.clone();
        out.add_scaled(other, &Scalar::one());
        out
    }

    /// Concatenation product of the tensor algebra.
    pub fn concat(&self, other: &Element) -> Element {
        assert!(same_basis(&self.basis, &other.basis));
        let mut out = Self::zero(&self.basis);
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                out.add_term(w1.concat(w2), &(c1 * c2));
            }
        }
        out
    }

    /// Lengths of the words occurring in the element.
    pub fn lengths(&self) -> std::collections::BTreeSet<usize> {
        self.terms.keys().map(Word::len).collect()
    }

    /// Parity of every term, if they all agree.
    pub fn parity(&self) -> Option<Parity> {
        let mut it = self.terms.keys().map(|w| self.basis.word_parity(w.letters()));
        let first = it.next()?;
        it.all(|p| p == first).then_some(first)
    }

    /// Restriction to the words of length `n`.
    pub fn homogeneous_part(&self, n: usize) -> Element {
        Element {
            basis: self.basis.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| w.len() == n)
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        }
    }

    /// Applies a letter relabelling with a per-word sign.
    pub fn map_words<F>(&self, target: &Arc<GradedBasis>, mut f: F) -> Element
    where
        F: FnMut(&Word) -> (Word, bool),
    {
        let mut out = Element::zero(target);
        for (w, c) in &self.terms {
            let (w2, neg) = f(w);
            out.add_signed(w2, c, neg);
        }
        out
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (w, c)) in self.terms.iter().enumerate() {
            let negative = c < &Scalar::zero();
            let mag = if negative { -c.clone() } else { c.clone() };
            match (k, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if !mag.is_one() {
                write!(f, "{}·", format_scalar(&mag))?;
            }
            write!(f, "{}", w.display(&self.basis))?;
        }
        Ok(())
    }
}

/// Normalized sum `Σ c_k · x_k` of elements over a common basis.
pub fn linear_combine(pairs: &[(Scalar, &Element)]) -> Result<Element> {
    let Some((_, first)) = pairs.first() else {
        return Err(AlgebraError::NoOperands);
    };
    let basis = first.basis.clone();
    let mut out = Element::zero(&basis);
    for (c, x) in pairs {
        if !same_basis(&basis, &x.basis) {
            return Err(AlgebraError::BasisMismatch);
        }
        out.add_scaled(x, c);
    }
    Ok(out)
}

/// Transposition `T(x_1⊗...⊗x_n) = ±x_n⊗...⊗x_1` with the Koszul sign of
/// the full reversal.
pub fn transpose(x: &Element) -> Element {
    let basis = x.basis().clone();
    x.map_words(&basis, |w| {
        (w.reversed(), reversal_negative(&basis, w.letters()))
    })
}
