//! The Loday world over a Leibniz algebra `g` of dimension `n`.
//!
//! The symplectic plane `Πg ⊕ Πg*` has odd coordinates `p_1..p_n, q^1..q^n`
//! with `ω(p_i, q^j) = δ_i^j = -ω(q^j, p_i)`. Functions are anticyclic
//! cochains; their tensor presentation pairs the tensor word `a^1..a^n` with
//! the input word `dual(a^1)..dual(a^n)` up to the reversal sign
//! `(-1)^{n(n-1)/2}`.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::anticyclic::{ac_bracket, dual_commutator, universal_pairing, AcCochain, MultilinearForm, SignPolicy};
use crate::cochains::{leibniz_identity_check, BarCochain, LeibnizTable};
use crate::error::{AlgebraError, Result};
use crate::graded::{same_basis, Element, GradedBasis, Parity, Word};
use crate::linalg::{invert, Matrix};
use crate::scalar::{ratio, Scalar};

/// `Πg ⊕ Πg*` with its symplectic form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymplecticPlane {
    n: usize,
    basis: Arc<GradedBasis>,
    omega: Matrix,
    omega_inv: Matrix,
}

/// A coordinate function `p_i` or `q^i` (0-based index).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Coordinate {
    P(usize),
    Q(usize),
}

impl SymplecticPlane {
    pub fn new(n: usize) -> Result<Arc<Self>> {
        if n == 0 {
            return Err(AlgebraError::EmptyBasis);
        }
        let names = (1..=n).map(|i| format!("p{i}")).chain((1..=n).map(|i| format!("q{i}"))).collect();
        let basis = GradedBasis::new(names, vec![Parity::Odd; 2 * n])?;
        let mut omega = vec![vec![Scalar::zero(); 2 * n]; 2 * n];
        for i in 0..n {
            omega[i][n + i] = Scalar::one();
            omega[n + i][i] = -Scalar::one();
        }
        let omega_inv = invert(&omega)?;
        Ok(Arc::new(SymplecticPlane {
            n,
            basis,
            omega,
            omega_inv,
        }))
    }

    /// Dimension of the base algebra.
    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn basis(&self) -> &Arc<GradedBasis> {
        &self.basis
    }

    pub fn omega_matrix(&self) -> &Matrix {
        &self.omega
    }

    pub fn p(&self, i: usize) -> u16 {
        i as u16
    }

    pub fn q(&self, i: usize) -> u16 {
        (self.n + i) as u16
    }

    pub fn letter(&self, c: Coordinate) -> u16 {
        match c {
            Coordinate::P(i) => self.p(i),
            Coordinate::Q(i) => self.q(i),
        }
    }

    pub fn coordinate(&self, name: &str) -> Option<Coordinate> {
        let i = self.basis.index_of(name)?;
        Some(if i < self.n {
            Coordinate::P(i)
        } else {
            Coordinate::Q(i - self.n)
        })
    }

    /// `p_i <-> q^i`.
    pub fn dual(&self, letter: u16) -> u16 {
        let n = self.n as u16;
        if letter < n {
            letter + n
        } else {
            letter - n
        }
    }

    pub fn omega(&self, x: u16, y: u16) -> Scalar {
        self.omega[x as usize][y as usize].clone()
    }

    /// `ω` extended bilinearly to linear elements.
    pub fn omega_elements(&self, u: &Element, v: &Element) -> Scalar {
        let mut out = Scalar::zero();
        for (a, ca) in u.terms() {
            for (b, cb) in v.terms() {
                let o = &self.omega[a.letters()[0] as usize][b.letters()[0] as usize];
                if !o.is_zero() {
                    out += o * ca * cb;
                }
            }
        }
        out
    }

    /// The bar cochain `B` with `A(x_1..x_n) = (-1)^{|B|} ω(B(x_1..x_{n-1}), x_n)`.
    pub fn hamiltonian_field(&self, a: &AcCochain) -> BarCochain {
        let n = a.degree();
        assert!(n >= 2, "functions have degree at least two");
        let negative = n % 2 == 1;
        let mut table: BTreeMap<Word, Element> = BTreeMap::new();
        for (w, c) in a.entries() {
            let head = w.slice(0..n - 1);
            let y = w.letters()[n - 1] as usize;
            let entry = table.entry(head).or_insert_with(|| Element::zero(&self.basis));
            for x in 0..2 * self.n {
                let m = &self.omega_inv[y][x];
                if !m.is_zero() {
                    entry.add_signed(Word::letter(x as u16), &(c * m), negative);
                }
            }
        }
        BarCochain::new(&self.basis, n - 1, table).expect("field built on the plane basis")
    }

    /// Inverse of [`hamiltonian_field`](Self::hamiltonian_field).
    pub fn function_of_field(&self, b: &BarCochain) -> MultilinearForm {
        let negative = b.is_odd();
        let mut entries = vec![];
        for (w, v) in b.entries() {
            for (x, cx) in v.terms() {
                for y in 0..2 * self.n {
                    let m = &self.omega[x.letters()[0] as usize][y];
                    if !m.is_zero() {
                        let c = cx * m;
                        entries.push((w.push(y as u16), if negative { -c } else { c }));
                    }
                }
            }
        }
        MultilinearForm::new(&self.basis, b.arity() + 1, entries).expect("function built on the plane basis")
    }

    fn tensor_to_form(&self, x: &Element, degree: usize) -> MultilinearForm {
        let negative = (degree * degree.saturating_sub(1) / 2) % 2 == 1;
        let entries = x
            .terms()
            .filter(|(w, _)| w.len() == degree)
            .map(|(w, c)| {
                let dual = Word(w.letters().iter().map(|&l| self.dual(l)).collect());
                (dual, if negative { -c.clone() } else { c.clone() })
            });
        MultilinearForm::new(&self.basis, degree, entries).expect("plane letters")
    }

    fn form_to_tensor(&self, a: &MultilinearForm, out: &mut Element) {
        let n = a.degree();
        let negative = (n * n.saturating_sub(1) / 2) % 2 == 1;
        for (w, c) in a.entries() {
            let dual = Word(w.letters().iter().map(|&l| self.dual(l)).collect());
            out.add_signed(dual, c, negative);
        }
    }
}

/// A finite sum of homogeneous anticyclic cochains on a symplectic plane.
#[derive(Clone)]
pub struct LodayFunction {
    plane: Arc<SymplecticPlane>,
    parts: BTreeMap<usize, AcCochain>,
}

impl PartialEq for LodayFunction {
    fn eq(&self, other: &Self) -> bool {
        *self.plane == *other.plane && self.parts == other.parts
    }
}

impl Eq for LodayFunction {}

impl LodayFunction {
    pub fn zero(plane: &Arc<SymplecticPlane>) -> Self {
        LodayFunction {
            plane: plane.clone(),
            parts: BTreeMap::new(),
        }
    }

    pub fn from_cochain(plane: &Arc<SymplecticPlane>, a: AcCochain) -> Result<Self> {
        if !same_basis(plane.basis(), a.basis()) {
            return Err(AlgebraError::PlaneMismatch);
        }
        if a.degree() < 2 {
            return Err(AlgebraError::TooShort { len: a.degree(), arity: 2 });
        }
        let mut parts = BTreeMap::new();
        if !a.is_zero() {
            parts.insert(a.degree(), a);
        }
        Ok(LodayFunction {
            plane: plane.clone(),
            parts,
        })
    }

    /// Reads a tensor presentation `Σ c [a^1, ..., a^n]_*` (already expanded
    /// into words); every homogeneous part must be anticyclic.
    pub fn from_tensor(plane: &Arc<SymplecticPlane>, x: &Element) -> Result<Self> {
        if !same_basis(plane.basis(), x.basis()) {
            return Err(AlgebraError::PlaneMismatch);
        }
        let mut out = Self::zero(plane);
        for n in x.lengths() {
            if n < 2 {
                return Err(AlgebraError::TooShort { len: n, arity: 2 });
            }
            let a = AcCochain::new(plane.tensor_to_form(x, n))?;
            out.parts.insert(n, a);
        }
        Ok(out)
    }

    fn from_tensor_unchecked(plane: &Arc<SymplecticPlane>, x: &Element) -> Self {
        let mut out = Self::zero(plane);
        for n in x.lengths() {
            let a = AcCochain::new_unchecked(plane.tensor_to_form(x, n));
            if !a.is_zero() {
                out.parts.insert(n, a);
            }
        }
        out
    }

    pub fn plane(&self) -> &Arc<SymplecticPlane> {
        &self.plane
    }

    pub fn to_tensor(&self) -> Element {
        let mut out = Element::zero(self.plane.basis());
        for a in self.parts.values() {
            self.plane.form_to_tensor(a.form(), &mut out);
        }
        out
    }

    pub fn parts(&self) -> impl Iterator<Item = (&usize, &AcCochain)> {
        self.parts.iter()
    }

    pub fn part(&self, degree: usize) -> AcCochain {
        self.parts
            .get(&degree)
            .cloned()
            .unwrap_or_else(|| AcCochain::zero(self.plane.basis(), degree))
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.parts.keys().copied().collect()
    }

    pub fn is_zero(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn eval(&self, w: &Word) -> Scalar {
        self.parts.get(&w.len()).map(|a| a.eval(w)).unwrap_or_else(Scalar::zero)
    }

    fn add_part(&mut self, a: &AcCochain, c: &Scalar) {
        let n = a.degree();
        let sum = match self.parts.get(&n) {
            Some(old) => old.plus_scaled(a, c),
            None => a.scaled(c),
        };
        if sum.is_zero() {
            self.parts.remove(&n);
        } else {
            self.parts.insert(n, sum);
        }
    }

    pub fn plus_scaled(&self, other: &LodayFunction, c: &Scalar) -> Result<Self> {
        if *self.plane != *other.plane {
            return Err(AlgebraError::PlaneMismatch);
        }
        let mut out = self.clone();
        for a in other.parts.values() {
            out.add_part(a, c);
        }
        Ok(out)
    }

    pub fn plus(&self, other: &LodayFunction) -> Result<Self> {
        self.plus_scaled(other, &Scalar::one())
    }

    pub fn scaled(&self, c: &Scalar) -> Self {
        let mut out = Self::zero(&self.plane);
        for a in self.parts.values() {
            out.add_part(a, c);
        }
        out
    }

    /// Table entries of all parts, as `(input word, value)`.
    pub fn entries(&self) -> Vec<(Word, Scalar)> {
        self.parts
            .values()
            .flat_map(|a| a.entries().map(|(w, c)| (w.clone(), c.clone())))
            .collect()
    }

    pub fn is_anticyclic(&self) -> bool {
        self.parts.values().all(|a| AcCochain::new(a.form().clone()).is_ok())
    }
}

impl fmt::Debug for LodayFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_tensor())
    }
}

impl fmt::Display for LodayFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_tensor())
    }
}

fn derive_tensor(x: &Element, c: u16) -> Element {
    let mut out = Element::zero(x.basis());
    for (w, v) in x.terms() {
        if w.len() > 1 && w.last() == Some(c) {
            out.add_term(w.slice(0..w.len() - 1), v);
        }
    }
    out
}

/// `∂A/∂c`: the tensor presentation with its rightmost letter derived.
pub fn coordinate_derivation(a: &LodayFunction, c: Coordinate) -> Element {
    derive_tensor(&a.to_tensor(), a.plane.letter(c))
}

fn poisson_tensor(plane: &SymplecticPlane, t1: &Element, t2: &Element) -> Element {
    let mut out = Element::zero(plane.basis());
    let one = Scalar::one();
    let minus = -Scalar::one();
    for i in 0..plane.dim() {
        for (x, y, c) in [(plane.p(i), plane.q(i), &one), (plane.q(i), plane.p(i), &minus)] {
            let d1 = derive_tensor(t1, x);
            let d2 = derive_tensor(t2, y);
            if d1.is_zero() || d2.is_zero() {
                continue;
            }
            out.add_scaled(&universal_pairing(&d1, &d2).expect("derivatives of degree >= 2 parts"), c);
        }
    }
    out
}

/// `{A_1, A_2} = (-1)^{|A_2|} Σ_i ⟨∂A_1/∂p_i, ∂A_2/∂q^i⟩ - ⟨∂A_1/∂q^i, ∂A_2/∂p_i⟩`,
/// with `|A| = deg A mod 2`.
pub fn poisson(a1: &LodayFunction, a2: &LodayFunction) -> Result<LodayFunction> {
    if *a1.plane != *a2.plane {
        return Err(AlgebraError::PlaneMismatch);
    }
    let plane = &a1.plane;
    let mut out = LodayFunction::zero(plane);
    for p1 in a1.parts.values() {
        let mut t1 = Element::zero(plane.basis());
        plane.form_to_tensor(p1.form(), &mut t1);
        for (&n2, p2) in &a2.parts {
            let mut t2 = Element::zero(plane.basis());
            plane.form_to_tensor(p2.form(), &mut t2);
            let t = poisson_tensor(plane, &t1, &t2);
            let part = LodayFunction::from_tensor_unchecked(plane, &t);
            let sign = if n2 % 2 == 1 { -Scalar::one() } else { Scalar::one() };
            out = out.plus_scaled(&part, &sign)?;
        }
    }
    Ok(out)
}

/// The Hamiltonian field of every homogeneous part.
pub fn hamiltonian_field(a: &LodayFunction) -> Vec<BarCochain> {
    a.parts.values().map(|p| a.plane.hamiltonian_field(p)).collect()
}

/// The function `(-1)^{|B|} ω(B(x_1..x_{n-1}), x_n)` of a field.
pub fn function_of_field(plane: &Arc<SymplecticPlane>, b: &BarCochain) -> Result<LodayFunction> {
    if !same_basis(plane.basis(), b.basis()) {
        return Err(AlgebraError::PlaneMismatch);
    }
    let form = plane.function_of_field(b);
    if form.is_zero() {
        return Ok(LodayFunction::zero(plane));
    }
    LodayFunction::from_cochain(plane, AcCochain::new(form)?)
}

/// Graded Lie bracket of functions through their Hamiltonian fields.
pub fn ac_bracket_functions(a1: &LodayFunction, a2: &LodayFunction) -> Result<LodayFunction> {
    if *a1.plane != *a2.plane {
        return Err(AlgebraError::PlaneMismatch);
    }
    let mut out = LodayFunction::zero(&a1.plane);
    for p1 in a1.parts.values() {
        for p2 in a2.parts.values() {
            let c = ac_bracket(&a1.plane, p1, p2)?;
            if !c.is_zero() {
                out.add_part(&c, &Scalar::one());
            }
        }
    }
    Ok(out)
}

/// The semidirect product `g ⋉ g*` on the plane letters.
#[derive(Clone, Debug)]
pub struct Cotangent {
    pub plane: Arc<SymplecticPlane>,
    pub bracket: LeibnizTable,
}

/// `[p_i, p_j] = C_ij^k p_k`, `[p_i, q^k] = -C_ij^k q^j`,
/// `[q^k, p_i] = (C_ij^k + C_ji^k) q^j`, `[q, q] = 0`.
pub fn build_cotangent(t: &LeibnizTable) -> Result<Cotangent> {
    let plane = SymplecticPlane::new(t.dim())?;
    let mut entries = vec![];
    for (i, j, k, c) in t.entries() {
        let (p, q) = (|a: usize| plane.p(a) as usize, |a: usize| plane.q(a) as usize);
        entries.push((p(i), p(j), p(k), c.clone()));
        entries.push((p(i), q(k), q(j), -c.clone()));
        entries.push((q(k), p(i), q(j), c.clone()));
        entries.push((q(k), p(j), q(i), c));
    }
    let bracket = LeibnizTable::new(plane.basis(), entries)?;
    Ok(Cotangent { plane, bracket })
}

/// A basis triple where `ω` fails to be invariant, with the failing equation:
/// `3` for `ω(x, [y, z]) = -ω([y, x], z)`, `4` for
/// `ω(x, [y, z]) = ω([x, z] + [z, x], y)`.
pub fn omega_invariance_check(cot: &Cotangent) -> Option<([usize; 3], u8)> {
    let plane = &cot.plane;
    let b = plane.basis();
    let e = |i: usize| Element::letter(b, i);
    let br = |x: &Element, y: &Element| cot.bracket.bracket(x, y);
    let size = 2 * plane.dim();
    for x in 0..size {
        for y in 0..size {
            for z in 0..size {
                let lhs = plane.omega_elements(&e(x), &br(&e(y), &e(z)));
                if lhs != -plane.omega_elements(&br(&e(y), &e(x)), &e(z)) {
                    return Some(([x, y, z], 3));
                }
                let circ = br(&e(x), &e(z)).plus(&br(&e(z), &e(x)));
                if lhs != plane.omega_elements(&circ, &e(y)) {
                    return Some(([x, y, z], 4));
                }
            }
        }
    }
    None
}

/// Symmetric bilinear form `g_ij` on the base algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Metric {
    g: Matrix,
}

impl Metric {
    pub fn new(g: Matrix) -> Result<Self> {
        let n = g.len();
        if n == 0 {
            return Err(AlgebraError::EmptyBasis);
        }
        for (i, row) in g.iter().enumerate() {
            if row.len() != n {
                return Err(AlgebraError::DimensionMismatch {
                    expected: n,
                    got: row.len(),
                });
            }
            for j in 0..i {
                if g[i][j] != g[j][i] {
                    return Err(AlgebraError::NotSymmetric(j, i));
                }
            }
        }
        Ok(Metric { g })
    }

    pub fn identity(n: usize) -> Self {
        Metric {
            g: crate::linalg::identity(n),
        }
    }

    pub fn diagonal(d: &[Scalar]) -> Self {
        let n = d.len();
        let g = (0..n)
            .map(|i| (0..n).map(|j| if i == j { d[i].clone() } else { Scalar::zero() }).collect())
            .collect();
        Metric { g }
    }

    pub fn dim(&self) -> usize {
        self.g.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> &Scalar {
        &self.g[i][j]
    }

    pub fn matrix(&self) -> &Matrix {
        &self.g
    }

    pub fn is_zero(&self) -> bool {
        self.g.iter().flatten().all(Zero::is_zero)
    }

    pub fn inverse(&self) -> Result<Metric> {
        Ok(Metric { g: invert(&self.g)? })
    }

    fn apply(&self, x: &[Scalar], y: &[Scalar]) -> Scalar {
        let mut out = Scalar::zero();
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if !yj.is_zero() {
                    out += xi * yj * &self.g[i][j];
                }
            }
        }
        out
    }
}

/// Coefficients `H_ijk` of the twist `(1/3) H_ijk [q^i, q^j, q^k]_*`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Twist {
    dim: usize,
    h: BTreeMap<[usize; 3], Scalar>,
}

impl Twist {
    pub fn new<I>(dim: usize, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = ([usize; 3], Scalar)>,
    {
        let mut h: BTreeMap<[usize; 3], Scalar> = BTreeMap::new();
        for (idx, c) in entries {
            if let Some(&bad) = idx.iter().find(|&&i| i >= dim) {
                return Err(AlgebraError::IndexOutOfRange { index: bad, dim });
            }
            *h.entry(idx).or_insert_with(Scalar::zero) += c;
        }
        h.retain(|_, c| !c.is_zero());
        Ok(Twist { dim, h })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> impl Iterator<Item = (&[usize; 3], &Scalar)> {
        self.h.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.h.is_empty()
    }
}

fn check_dim(expected: usize, got: usize) -> Result<()> {
    if expected == got {
        Ok(())
    } else {
        Err(AlgebraError::DimensionMismatch { expected, got })
    }
}

/// Tensor `Σ C_ij^k [q^i, q^j, p_k]_*`.
pub fn mu_tensor(plane: &SymplecticPlane, t: &LeibnizTable) -> Element {
    let mut out = Element::zero(plane.basis());
    for (i, j, k, c) in t.entries() {
        let letters = [plane.q(i), plane.q(j), plane.p(k)];
        out.add_scaled(&dual_commutator(plane.basis(), &letters, SignPolicy::SHIPPED), &c);
    }
    out
}

pub fn build_mu(t: &LeibnizTable) -> Result<LodayFunction> {
    let plane = SymplecticPlane::new(t.dim())?;
    build_mu_on(&plane, t)
}

pub fn build_mu_on(plane: &Arc<SymplecticPlane>, t: &LeibnizTable) -> Result<LodayFunction> {
    check_dim(plane.dim(), t.dim())?;
    LodayFunction::from_tensor(plane, &mu_tensor(plane, t))
}

fn twist_tensor(plane: &SymplecticPlane, h: &Twist) -> Element {
    let mut out = Element::zero(plane.basis());
    let third = ratio(1, 3);
    for ([i, j, k], c) in h.entries() {
        let letters = [plane.q(*i), plane.q(*j), plane.q(*k)];
        out.add_scaled(&dual_commutator(plane.basis(), &letters, SignPolicy::SHIPPED), &(c * &third));
    }
    out
}

/// `θ = Σ C_ij^k [q^i, q^j, p_k]_* + (1/3) Σ H_ijk [q^i, q^j, q^k]_*`.
pub fn build_theta(t: &LeibnizTable, h: &Twist) -> Result<LodayFunction> {
    let plane = SymplecticPlane::new(t.dim())?;
    check_dim(t.dim(), h.dim())?;
    let x = mu_tensor(&plane, t).plus(&twist_tensor(&plane, h));
    LodayFunction::from_tensor(&plane, &x)
}

/// The bracket of `g ⋉ g*` twisted by `H(x_1, x_2) = Σ_k H̄(x_1, x_2, p_k) q^k`,
/// `H̄` the anticyclic table of the twist.
pub fn twisted_bracket(t: &LeibnizTable, h: &Twist) -> Result<LeibnizTable> {
    check_dim(t.dim(), h.dim())?;
    let cot = build_cotangent(t)?;
    let plane = &cot.plane;
    let twist = LodayFunction::from_tensor(plane, &twist_tensor(plane, h))?.part(3);
    let mut entries = cot.bracket.entries();
    for (w, c) in twist.entries() {
        let l = w.letters();
        if l.iter().all(|&x| (x as usize) < plane.dim()) {
            entries.push((l[0] as usize, l[1] as usize, plane.q(l[2] as usize) as usize, c.clone()));
        }
    }
    LeibnizTable::new(plane.basis(), entries)
}

/// Outcome of [`structure_check`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StructureVerdict {
    /// `θ = 0`: vacuously a structure.
    Degenerate,
    Pass,
    NotCubic(Vec<usize>),
    /// `{θ, θ}` does not vanish; first nonzero input word and its value.
    Fail(Word, Scalar),
}

impl StructureVerdict {
    pub fn passed(&self) -> bool {
        matches!(self, StructureVerdict::Degenerate | StructureVerdict::Pass)
    }
}

pub fn structure_check(theta: &LodayFunction) -> Result<StructureVerdict> {
    if theta.is_zero() {
        return Ok(StructureVerdict::Degenerate);
    }
    if theta.degrees() != [3] {
        return Ok(StructureVerdict::NotCubic(theta.degrees()));
    }
    let sq = poisson(theta, theta)?;
    Ok(match sq.entries().into_iter().next() {
        None => StructureVerdict::Pass,
        Some((w, c)) => StructureVerdict::Fail(w, c),
    })
}

/// `b_μ(A) = {μ, A}`, for a structure `μ`.
pub fn b_mu(mu: &LodayFunction, a: &LodayFunction) -> Result<LodayFunction> {
    if !poisson(mu, mu)?.is_zero() {
        return Err(AlgebraError::NotAStructure);
    }
    poisson(mu, a)
}

fn basis_vector(n: usize, i: usize) -> Vec<Scalar> {
    (0..n).map(|j| if i == j { Scalar::one() } else { Scalar::zero() }).collect()
}

fn bracket_vector(t: &LeibnizTable, i: usize, j: usize) -> Vec<Scalar> {
    (0..t.dim()).map(|k| t.constant(i, j, k)).collect()
}

/// First basis triple violating
/// `g([x1,x2],x3) + g(x2,[x1,x3]) = g(x1, [x2,x3] + [x3,x2])`.
pub fn gsi_check(t: &LeibnizTable, m: &Metric) -> Result<Option<[usize; 3]>> {
    check_dim(t.dim(), m.dim())?;
    let n = t.dim();
    let e = |i| basis_vector(n, i);
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let lhs = m.apply(&bracket_vector(t, a, b), &e(c)) + m.apply(&e(b), &bracket_vector(t, a, c));
                let circ: Vec<Scalar> = bracket_vector(t, b, c)
                    .iter()
                    .zip(bracket_vector(t, c, b))
                    .map(|(x, y)| x + y)
                    .collect();
                if lhs != m.apply(&e(a), &circ) {
                    return Ok(Some([a, b, c]));
                }
            }
        }
    }
    Ok(None)
}

/// First basis pair `(a, b)` with `g̃[x_a, x_b] ≠ [g̃ x_a, x_b] + [x_a, g̃ x_b]`
/// in `g ⋉ g*`, i.e. where the graph of `g̃: g -> g*` fails to be closed.
pub fn gsi_graph_check(t: &LeibnizTable, m: &Metric) -> Result<Option<[usize; 2]>> {
    check_dim(t.dim(), m.dim())?;
    let cot = build_cotangent(t)?;
    let plane = &cot.plane;
    let b = plane.basis();
    let n = t.dim();
    let tilde = |v: &Element| {
        let mut out = Element::zero(b);
        for (w, c) in v.terms() {
            let i = w.letters()[0] as usize;
            for j in 0..n {
                out.add_term(Word::letter(plane.q(j)), &(c * m.entry(i, j)));
            }
        }
        out
    };
    for x in 0..n {
        for y in 0..n {
            let (px, py) = (Element::letter(b, x), Element::letter(b, y));
            let lhs = tilde(&cot.bracket.bracket(&px, &py));
            let rhs = cot.bracket.bracket(&tilde(&px), &py).plus(&cot.bracket.bracket(&px, &tilde(&py)));
            if lhs != rhs {
                return Ok(Some([x, y]));
            }
        }
    }
    Ok(None)
}

/// First basis triple violating `g(x1, [x2,x3]) = g([x1,x2], x3)`.
pub fn classical_invariance_check(t: &LeibnizTable, m: &Metric) -> Result<Option<[usize; 3]>> {
    check_dim(t.dim(), m.dim())?;
    let n = t.dim();
    let e = |i| basis_vector(n, i);
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if m.apply(&e(a), &bracket_vector(t, b, c)) != m.apply(&bracket_vector(t, a, b), &e(c)) {
                    return Ok(Some([a, b, c]));
                }
            }
        }
    }
    Ok(None)
}

/// Whether every bracket is antisymmetric, `[x, y] = -[y, x]`.
pub fn is_antisymmetric(t: &LeibnizTable) -> bool {
    (0..t.dim()).all(|i| (0..t.dim()).all(|j| t.bracket_of_generators(i, j) == t.bracket_of_generators(j, i).neg()))
}

/// `g = (1/2) Σ g_ij [q^i, q^j]_*`.
pub fn metric_function(plane: &Arc<SymplecticPlane>, m: &Metric) -> Result<LodayFunction> {
    check_dim(plane.dim(), m.dim())?;
    quadratic(plane, m, |i| plane.q(i))
}

/// `g^{-1} = (1/2) Σ g^{ij} [p_i, p_j]_*`.
pub fn inverse_metric_function(plane: &Arc<SymplecticPlane>, m: &Metric) -> Result<LodayFunction> {
    check_dim(plane.dim(), m.dim())?;
    quadratic(plane, &m.inverse()?, |i| plane.p(i))
}

fn quadratic(plane: &Arc<SymplecticPlane>, m: &Metric, letter: impl Fn(usize) -> u16) -> Result<LodayFunction> {
    let half = ratio(1, 2);
    let mut x = Element::zero(plane.basis());
    for i in 0..m.dim() {
        for j in 0..m.dim() {
            let c = m.entry(i, j);
            if !c.is_zero() {
                let d = dual_commutator(plane.basis(), &[letter(i), letter(j)], SignPolicy::SHIPPED);
                x.add_scaled(&d, &(c * &half));
            }
        }
    }
    LodayFunction::from_tensor(plane, &x)
}

/// Terms of `exp(X_{g^{-1}})(μ) = μ + ν + (1/2){ν, g^{-1}} + ...`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Flow {
    /// `ν = {μ, g^{-1}}`
    pub nu: LodayFunction,
    /// `{{μ, g^{-1}}, g^{-1}}`
    pub second: LodayFunction,
    /// `{{{μ, g^{-1}}, g^{-1}}, g^{-1}}`
    pub third: LodayFunction,
    /// `μ + ν + (1/2) second`
    pub transformed: LodayFunction,
}

pub fn flow_transform(mu: &LodayFunction, g_inv: &LodayFunction) -> Result<Flow> {
    if !poisson(mu, mu)?.is_zero() {
        return Err(AlgebraError::NotAStructure);
    }
    let nu = poisson(mu, g_inv)?;
    let second = poisson(&nu, g_inv)?;
    let third = poisson(&second, g_inv)?;
    let transformed = mu.plus(&nu)?.plus_scaled(&second, &ratio(1, 2))?;
    Ok(Flow {
        nu,
        second,
        third,
        transformed,
    })
}

/// `({ν, ν}, {μ + ν, μ + ν})`.
pub fn double_brackets(mu: &LodayFunction, nu: &LodayFunction) -> Result<(LodayFunction, LodayFunction)> {
    let s = mu.plus(nu)?;
    Ok((poisson(nu, nu)?, poisson(&s, &s)?))
}

/// Whether the structure constants satisfy the Leibniz identity; shorthand
/// used by the biconditional checks.
pub fn is_leibniz(t: &LeibnizTable) -> bool {
    leibniz_identity_check(t).is_none()
}

/// `Σ c·[x_1, ..., x_n]_*` for coordinate words, as used by function files.
pub fn dual_commutator_sum(plane: &Arc<SymplecticPlane>, terms: &[(Scalar, Vec<Coordinate>)]) -> Element {
    let mut out = Element::zero(plane.basis());
    for (c, coords) in terms {
        let letters: Vec<u16> = coords.iter().map(|&x| plane.letter(x)).collect();
        out.add_scaled(&dual_commutator(plane.basis(), &letters, SignPolicy::SHIPPED), c);
    }
    out
}
