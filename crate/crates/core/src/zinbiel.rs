//! Free Zinbiel algebra on the tensor space, its universal property, and the
//! cofree Zinbiel coalgebra coproduct.
//!
//! On words the product is the half shuffle
//! `x * y = sh(x, y_1..y_{b-1}) ⊗ y_b`, so left-normalized products
//! `(...((x_1 * x_2) * x_3) * ...) * x_n` are plain concatenations. On an odd
//! basis all identities carry Koszul signs, e.g. the axiom reads
//! `x*(y*z) = (x*y)*z + (-1)^{|x||y|} (y*x)*z`.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::combinatorics::for_each_unshuffle;
use crate::error::{AlgebraError, Result};
use crate::graded::{same_basis, Element, GradedBasis, Word};
use crate::scalar::{format_scalar, Scalar};

fn shuffle_rec(
    basis: &GradedBasis,
    x: &[u16],
    y: &[u16],
    x_odd: usize,
    prefix: &mut Vec<u16>,
    negative: bool,
    coef: &Scalar,
    out: &mut Element,
) {
    if x.is_empty() || y.is_empty() {
        let mut w = Word::from_letters(prefix);
        w.0.extend_from_slice(x);
        w.0.extend_from_slice(y);
        out.add_signed(w, coef, negative);
        return;
    }
    prefix.push(x[0]);
    let rest_odd = x_odd - usize::from(basis.is_odd(x[0]));
    shuffle_rec(basis, &x[1..], y, rest_odd, prefix, negative, coef, out);
    prefix.pop();

    prefix.push(y[0]);
    let flip = basis.is_odd(y[0]) && x_odd % 2 == 1;
    shuffle_rec(basis, x, &y[1..], x_odd, prefix, negative ^ flip, coef, out);
    prefix.pop();
}

pub(crate) fn shuffle_words_into(
    basis: &GradedBasis,
    x: &[u16],
    y: &[u16],
    coef: &Scalar,
    out: &mut Element,
) {
    let x_odd = x.iter().filter(|&&l| basis.is_odd(l)).count();
    let mut prefix = Vec::with_capacity(x.len() + y.len());
    shuffle_rec(basis, x, y, x_odd, &mut prefix, false, coef, out);
}

/// Signed shuffle product; the empty word is its unit.
pub fn shuffle(x: &Element, y: &Element) -> Element {
    assert!(same_basis(x.basis(), y.basis()), "shuffle across bases");
    let basis = x.basis().clone();
    let mut out = Element::zero(&basis);
    for (w1, c1) in x.terms() {
        for (w2, c2) in y.terms() {
            shuffle_words_into(&basis, w1.letters(), w2.letters(), &(c1 * c2), &mut out);
        }
    }
    out
}

/// Zinbiel product of the free algebra.
pub fn zinbiel_product(x: &Element, y: &Element) -> Result<Element> {
    if !same_basis(x.basis(), y.basis()) {
        return Err(AlgebraError::BasisMismatch);
    }
    if x.contains_empty_word() || y.contains_empty_word() {
        return Err(AlgebraError::EmptyWord);
    }
    let basis = x.basis().clone();
    let mut out = Element::zero(&basis);
    for (w1, c1) in x.terms() {
        for (w2, c2) in y.terms() {
            let (last, head) = w2.letters().split_last().expect("non-empty");
            let mut sh = Element::zero(&basis);
            shuffle_words_into(&basis, w1.letters(), head, &(c1 * c2), &mut sh);
            for (w, c) in sh.terms() {
                out.add_term(w.push(*last), c);
            }
        }
    }
    Ok(out)
}

/// Finite-dimensional algebra given by `e_i * e_j = Σ_k Z_ij^k e_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZinbielTable {
    basis: Arc<GradedBasis>,
    products: BTreeMap<(u16, u16), Element>,
}

impl ZinbielTable {
    pub fn new<I>(basis: &Arc<GradedBasis>, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, usize, Scalar)>,
    {
        let mut products: BTreeMap<(u16, u16), Element> = BTreeMap::new();
        for (i, j, k, c) in entries {
            let (i, j, k) = (basis.check_letter(i)?, basis.check_letter(j)?, basis.check_letter(k)?);
            products
                .entry((i, j))
                .or_insert_with(|| Element::zero(basis))
                .add_term(Word::letter(k), &c);
        }
        products.retain(|_, e| !e.is_zero());
        Ok(ZinbielTable {
            basis: basis.clone(),
            products,
        })
    }

    pub fn basis(&self) -> &Arc<GradedBasis> {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.dim()
    }

    pub fn product_of_generators(&self, i: usize, j: usize) -> Element {
        self.products
            .get(&(i as u16, j as u16))
            .cloned()
            .unwrap_or_else(|| Element::zero(&self.basis))
    }

    /// Bilinear product of two linear (length-one) elements.
    pub fn product(&self, x: &Element, y: &Element) -> Element {
        let mut out = Element::zero(&self.basis);
        for (w1, c1) in x.terms() {
            for (w2, c2) in y.terms() {
                debug_assert!(w1.len() == 1 && w2.len() == 1);
                if let Some(p) = self.products.get(&(w1.letters()[0], w2.letters()[0])) {
                    out.add_scaled(p, &(c1 * c2));
                }
            }
        }
        out
    }
}

/// Both sides of a failed Zinbiel axiom on a basis triple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomViolation {
    pub triple: [usize; 3],
    pub lhs: Element,
    pub rhs: Element,
}

impl fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "triple {:?}: lhs = {}, rhs = {}", self.triple, self.lhs, self.rhs)
    }
}

/// Checks `x*(y*z) = (x*y)*z + (-1)^{|x||y|}(y*x)*z` on every basis triple.
pub fn zinbiel_axiom_check(t: &ZinbielTable) -> Option<AxiomViolation> {
    let b = t.basis();
    let e = |i: usize| Element::letter(b, i);
    for i in 0..t.dim() {
        for j in 0..t.dim() {
            for k in 0..t.dim() {
                let lhs = t.product(&e(i), &t.product(&e(j), &e(k)));
                let swap = if b.parity(i).is_odd() && b.parity(j).is_odd() {
                    -Scalar::one()
                } else {
                    Scalar::one()
                };
                let mut rhs = t.product(&t.product(&e(i), &e(j)), &e(k));
                rhs.add_scaled(&t.product(&t.product(&e(j), &e(i)), &e(k)), &swap);
                if lhs != rhs {
                    return Some(AxiomViolation {
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

/// Where a linear map lands: the free algebra on some basis, or a table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ZinbielTarget {
    Free(Arc<GradedBasis>),
    Table(ZinbielTable),
}

impl ZinbielTarget {
    pub fn basis(&self) -> &Arc<GradedBasis> {
        match self {
            ZinbielTarget::Free(b) => b,
            ZinbielTarget::Table(t) => t.basis(),
        }
    }

    pub fn product(&self, x: &Element, y: &Element) -> Element {
        match self {
            ZinbielTarget::Free(_) => zinbiel_product(x, y).expect("free product of non-empty words"),
            ZinbielTarget::Table(t) => t.product(x, y),
        }
    }
}

/// A linear map `f: V -> Z`, given by the images of the generators of `V`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearMap {
    source: Arc<GradedBasis>,
    target: ZinbielTarget,
    images: Vec<Element>,
}

impl LinearMap {
    pub fn new(source: &Arc<GradedBasis>, target: ZinbielTarget, images: Vec<Element>) -> Result<Self> {
        if images.len() != source.dim() {
            return Err(AlgebraError::LengthMismatch {
                expected: source.dim(),
                got: images.len(),
            });
        }
        for img in &images {
            if !same_basis(img.basis(), target.basis()) {
                return Err(AlgebraError::BasisMismatch);
            }
            if img.contains_empty_word() {
                return Err(AlgebraError::EmptyWord);
            }
            if matches!(target, ZinbielTarget::Table(_)) && img.lengths().iter().any(|&l| l != 1) {
                return Err(AlgebraError::LengthMismatch {
                    expected: 1,
                    got: img.lengths().into_iter().find(|&l| l != 1).unwrap_or(0),
                });
            }
        }
        Ok(LinearMap {
            source: source.clone(),
            target,
            images,
        })
    }

    /// The inclusion of generators into the free algebra on the same basis.
    pub fn inclusion(basis: &Arc<GradedBasis>) -> Self {
        let images = (0..basis.dim()).map(|i| Element::letter(basis, i)).collect();
        LinearMap {
            source: basis.clone(),
            target: ZinbielTarget::Free(basis.clone()),
            images,
        }
    }

    pub fn source(&self) -> &Arc<GradedBasis> {
        &self.source
    }

    pub fn target(&self) -> &ZinbielTarget {
        &self.target
    }

    pub fn image(&self, i: usize) -> &Element {
        &self.images[i]
    }

    /// Linear extension on length-one elements.
    pub fn apply_linear(&self, x: &Element) -> Element {
        let mut out = Element::zero(self.target.basis());
        for (w, c) in x.terms() {
            assert_eq!(w.len(), 1, "linear map applied to a word of length {}", w.len());
            out.add_scaled(&self.images[w.letters()[0] as usize], c);
        }
        out
    }
}

/// The unique Zinbiel morphism `f̂: T̄V -> Z` extending a linear map.
#[derive(Clone, Debug)]
pub struct UniversalLift {
    map: LinearMap,
}

pub fn universal_lift(f: &LinearMap) -> Result<UniversalLift> {
    if let ZinbielTarget::Table(t) = &f.target {
        if let Some(v) = zinbiel_axiom_check(t) {
            return Err(AlgebraError::ZinbielAxiom(v.triple));
        }
    }
    Ok(UniversalLift { map: f.clone() })
}

impl UniversalLift {
    pub fn map(&self) -> &LinearMap {
        &self.map
    }

    /// `f̂(x_1⊗...⊗x_n) = (...(f(x_1)*f(x_2))*...)*f(x_n)`.
    pub fn eval_word(&self, w: &Word) -> Result<Element> {
        let (first, rest) = w.letters().split_first().ok_or(AlgebraError::EmptyWord)?;
        let mut acc = self.map.images[*first as usize].clone();
        for &x in rest {
            acc = self.map.target.product(&acc, &self.map.images[x as usize]);
        }
        Ok(acc)
    }

    pub fn eval(&self, x: &Element) -> Result<Element> {
        if !same_basis(x.basis(), &self.map.source) {
            return Err(AlgebraError::BasisMismatch);
        }
        let mut out = Element::zero(self.map.target.basis());
        for (w, c) in x.terms() {
            out.add_scaled(&self.eval_word(w)?, c);
        }
        Ok(out)
    }
}

/// Sparse element of `T̄V ⊗ T̄V`.
#[derive(Clone, PartialEq, Eq)]
pub struct TensorSquare {
    basis: Arc<GradedBasis>,
    terms: BTreeMap<(Word, Word), Scalar>,
}

impl TensorSquare {
    pub fn zero(basis: &Arc<GradedBasis>) -> Self {
        TensorSquare {
            basis: basis.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn basis(&self) -> &Arc<GradedBasis> {
        &self.basis
    }

    pub fn add_term(&mut self, left: Word, right: Word, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        let key = (left, right);
        let entry = self.terms.entry(key.clone()).or_insert_with(Scalar::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn add_scaled(&mut self, other: &TensorSquare, c: &Scalar) {
        for ((l, r), v) in &other.terms {
            self.add_term(l.clone(), r.clone(), &(v * c));
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Word, Word), &Scalar)> {
        self.terms.iter()
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

    pub fn coefficient(&self, left: &Word, right: &Word) -> Scalar {
        self.terms
            .get(&(left.clone(), right.clone()))
            .cloned()
            .unwrap_or_else(Scalar::zero)
    }
}

impl fmt::Debug for TensorSquare {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for TensorSquare {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, ((l, r), c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(
                f,
                "{}·({}) | ({})",
                format_scalar(c),
                l.display(&self.basis),
                r.display(&self.basis)
            )?;
        }
        Ok(())
    }
}

/// Cofree Zinbiel coproduct. The last letter always stays at the end of the
/// right factor; the others are distributed by signed unshuffles.
pub fn cofree_coproduct(basis: &Arc<GradedBasis>, w: &Word) -> TensorSquare {
    let mut out = TensorSquare::zero(basis);
    let n = w.len();
    if n < 2 {
        return out;
    }
    let head = &w.letters()[..n - 1];
    let last = w.letters()[n - 1];
    for i in 1..n {
        for_each_unshuffle(basis, head, i, |chosen, rest, negative| {
            let left = Word(chosen.iter().map(|&p| head[p]).collect());
            let mut right = Word(rest.iter().map(|&p| head[p]).collect());
            right.0.push(last);
            out.add_term(left, right, &crate::scalar::sign(negative));
        });
    }
    out
}

/// Linear extension of [`cofree_coproduct`].
pub fn cofree_coproduct_of(x: &Element) -> TensorSquare {
    let mut out = TensorSquare::zero(x.basis());
    for (w, c) in x.terms() {
        out.add_scaled(&cofree_coproduct(x.basis(), w), c);
    }
    out
}
