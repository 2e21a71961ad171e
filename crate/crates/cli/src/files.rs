//! JSON input files. Indices are 1-based and coefficients are rational
//! strings such as `"-3/4"`.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use loday_core::graded::{Element, GradedBasis, Parity, Word};
use loday_core::scalar::{format_scalar, parse_scalar, zero};
use loday_core::world::{dual_commutator_sum, Coordinate, LodayFunction, Metric, SymplecticPlane, Twist};
use loday_core::{LeibnizTable, Scalar, ZinbielTable};
use serde::{Deserialize, Serialize};

#[derive(Debug, thiserror::Error)]
pub enum InputError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Parse {
        path: PathBuf,
        source: serde_json::Error,
    },
    #[error("{path}: {field}: {message}")]
    Invalid {
        path: PathBuf,
        field: String,
        message: String,
    },
    #[error("{0}")]
    Usage(String),
}

impl InputError {
    fn invalid(path: &Path, field: impl Into<String>, message: impl Into<String>) -> Self {
        InputError::Invalid {
            path: path.to_path_buf(),
            field: field.into(),
            message: message.into(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ParityName {
    Even,
    Odd,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TripleEntry {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub c: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PairEntry {
    pub i: usize,
    pub j: usize,
    pub c: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    #[serde(default)]
    pub name: String,
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub parity: Option<Vec<ParityName>>,
    #[serde(alias = "product")]
    pub bracket: Vec<TripleEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MetricFile {
    pub dim: usize,
    pub entries: Vec<PairEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TwistFile {
    pub dim: usize,
    pub entries: Vec<TripleEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FunctionTerm {
    pub c: String,
    pub word: Vec<String>,
}

/// `terms` are read as `Σ c·[word]_*`; `tensor` as the literal tensor
/// `Σ c·word`, which must already be anticyclic.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FunctionFile {
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub terms: Vec<FunctionTerm>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub tensor: Vec<FunctionTerm>,
}

/// A loaded algebra file together with its raw bytes.
#[derive(Clone, Debug)]
pub struct Loaded<T> {
    pub path: PathBuf,
    pub bytes: Vec<u8>,
    pub value: T,
}

fn read(path: &Path) -> Result<Vec<u8>, InputError> {
    std::fs::read(path).map_err(|source| InputError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn parse_json<T: for<'de> Deserialize<'de>>(path: &Path, bytes: &[u8]) -> Result<T, InputError> {
    serde_json::from_slice(bytes).map_err(|source| InputError::Parse {
        path: path.to_path_buf(),
        source,
    })
}

fn load<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<Loaded<T>, InputError> {
    let bytes = read(path)?;
    let value = parse_json(path, &bytes)?;
    Ok(Loaded {
        path: path.to_path_buf(),
        bytes,
        value,
    })
}

pub fn load_algebra(path: &Path) -> Result<Loaded<AlgebraFile>, InputError> {
    load(path)
}

pub fn load_metric(path: &Path) -> Result<Loaded<MetricFile>, InputError> {
    load(path)
}

pub fn load_twist(path: &Path) -> Result<Loaded<TwistFile>, InputError> {
    load(path)
}

pub fn load_function(path: &Path) -> Result<Loaded<FunctionFile>, InputError> {
    load(path)
}

fn coefficient(path: &Path, field: &str, text: &str) -> Result<Scalar, InputError> {
    parse_scalar(text).map_err(|_| InputError::invalid(path, field, format!("coefficient {text:?} is not an exact rational")))
}

fn index(path: &Path, field: &str, i: usize, dim: usize) -> Result<usize, InputError> {
    if (1..=dim).contains(&i) {
        Ok(i - 1)
    } else {
        Err(InputError::invalid(path, field, format!("index {i} out of range 1..={dim}")))
    }
}

fn check_dim(path: &Path, dim: usize) -> Result<(), InputError> {
    if dim == 0 {
        Err(InputError::invalid(path, "dim", "dimension must be positive"))
    } else {
        Ok(())
    }
}

fn triples(path: &Path, dim: usize, key: &str, entries: &[TripleEntry]) -> Result<Vec<([usize; 3], Scalar)>, InputError> {
    let mut seen = BTreeMap::new();
    let mut out = Vec::with_capacity(entries.len());
    for (n, e) in entries.iter().enumerate() {
        let field = |f: &str| format!("{key}[{n}].{f}");
        let idx = [
            index(path, &field("i"), e.i, dim)?,
            index(path, &field("j"), e.j, dim)?,
            index(path, &field("k"), e.k, dim)?,
        ];
        let c = coefficient(path, &field("c"), &e.c)?;
        if let Some(first) = seen.insert(idx, n) {
            return Err(InputError::invalid(
                path,
                format!("{key}[{n}]"),
                format!("duplicate entry ({}, {}, {}), first given at {key}[{first}]", e.i, e.j, e.k),
            ));
        }
        out.push((idx, c));
    }
    Ok(out)
}

impl AlgebraFile {
    pub fn basis(&self, path: &Path) -> Result<Arc<GradedBasis>, InputError> {
        check_dim(path, self.dim)?;
        let parity = match &self.parity {
            None => vec![Parity::Even; self.dim],
            Some(p) if p.len() == self.dim => p
                .iter()
                .map(|x| match x {
                    ParityName::Even => Parity::Even,
                    ParityName::Odd => Parity::Odd,
                })
                .collect(),
            Some(p) => {
                return Err(InputError::invalid(path, "parity", format!("{} entries for dim {}", p.len(), self.dim)));
            }
        };
        let names = (1..=self.dim).map(|i| format!("e{i}")).collect();
        GradedBasis::new(names, parity).map_err(|e| InputError::invalid(path, "parity", e.to_string()))
    }

    fn constants(&self, path: &Path) -> Result<(Arc<GradedBasis>, Vec<(usize, usize, usize, Scalar)>), InputError> {
        let basis = self.basis(path)?;
        let entries = triples(path, self.dim, "bracket", &self.bracket)?
            .into_iter()
            .map(|([i, j, k], c)| (i, j, k, c))
            .collect();
        Ok((basis, entries))
    }

    pub fn leibniz(&self, path: &Path) -> Result<LeibnizTable, InputError> {
        let (basis, entries) = self.constants(path)?;
        LeibnizTable::new(&basis, entries).map_err(|e| InputError::invalid(path, "bracket", e.to_string()))
    }

    pub fn zinbiel(&self, path: &Path) -> Result<ZinbielTable, InputError> {
        let (basis, entries) = self.constants(path)?;
        ZinbielTable::new(&basis, entries).map_err(|e| InputError::invalid(path, "bracket", e.to_string()))
    }

    pub fn from_table(name: &str, t: &LeibnizTable) -> Self {
        let basis = t.basis();
        let parity = (0..t.dim()).any(|i| basis.parity(i).is_odd()).then(|| {
            (0..t.dim())
                .map(|i| if basis.parity(i).is_odd() { ParityName::Odd } else { ParityName::Even })
                .collect()
        });
        AlgebraFile {
            name: name.to_string(),
            dim: t.dim(),
            parity,
            bracket: t
                .entries()
                .into_iter()
                .map(|(i, j, k, c)| TripleEntry {
                    i: i + 1,
                    j: j + 1,
                    k: k + 1,
                    c: format_scalar(&c),
                })
                .collect(),
        }
    }
}

impl MetricFile {
    /// Entries are symmetrized: `(i,j)` also sets `(j,i)`; giving both with
    /// different values is an error.
    pub fn metric(&self, path: &Path) -> Result<Metric, InputError> {
        check_dim(path, self.dim)?;
        let mut g = vec![vec![zero(); self.dim]; self.dim];
        let mut given: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        for (n, e) in self.entries.iter().enumerate() {
            let field = |f: &str| format!("entries[{n}].{f}");
            let (i, j) = (index(path, &field("i"), e.i, self.dim)?, index(path, &field("j"), e.j, self.dim)?);
            let c = coefficient(path, &field("c"), &e.c)?;
            if let Some(first) = given.insert((i, j), n) {
                return Err(InputError::invalid(
                    path,
                    format!("entries[{n}]"),
                    format!("duplicate entry ({}, {}), first given at entries[{first}]", e.i, e.j),
                ));
            }
            if given.contains_key(&(j, i)) && i != j && g[j][i] != c {
                return Err(InputError::invalid(
                    path,
                    format!("entries[{n}]"),
                    format!("({}, {}) conflicts with the symmetric entry ({}, {})", e.i, e.j, e.j, e.i),
                ));
            }
            g[i][j] = c.clone();
            g[j][i] = c;
        }
        Metric::new(g).map_err(|e| InputError::invalid(path, "entries", e.to_string()))
    }

    pub fn from_metric(m: &Metric) -> Self {
        let mut entries = Vec::new();
        for i in 0..m.dim() {
            for j in i..m.dim() {
                let c = m.entry(i, j);
                if *c != zero() {
                    entries.push(PairEntry {
                        i: i + 1,
                        j: j + 1,
                        c: format_scalar(c),
                    });
                }
            }
        }
        MetricFile { dim: m.dim(), entries }
    }
}

impl TwistFile {
    pub fn twist(&self, path: &Path) -> Result<Twist, InputError> {
        check_dim(path, self.dim)?;
        let entries = triples(path, self.dim, "entries", &self.entries)?;
        Twist::new(self.dim, entries).map_err(|e| InputError::invalid(path, "entries", e.to_string()))
    }

    pub fn from_twist(h: &Twist) -> Self {
        TwistFile {
            dim: h.dim(),
            entries: h
                .entries()
                .map(|(&[i, j, k], c)| TripleEntry {
                    i: i + 1,
                    j: j + 1,
                    k: k + 1,
                    c: format_scalar(c),
                })
                .collect(),
        }
    }
}

fn coordinates(plane: &SymplecticPlane, path: &Path, field: &str, word: &[String]) -> Result<Vec<Coordinate>, InputError> {
    word.iter()
        .map(|name| {
            plane
                .coordinate(name)
                .ok_or_else(|| InputError::invalid(path, field, format!("unknown coordinate {name:?}")))
        })
        .collect()
}

impl FunctionFile {
    pub fn function(&self, path: &Path) -> Result<LodayFunction, InputError> {
        check_dim(path, self.dim)?;
        let plane = SymplecticPlane::new(self.dim).map_err(|e| InputError::invalid(path, "dim", e.to_string()))?;
        let mut commutators = Vec::new();
        for (n, t) in self.terms.iter().enumerate() {
            let field = format!("terms[{n}]");
            if t.word.len() < 2 {
                return Err(InputError::invalid(path, field, "functions start in degree 2"));
            }
            let c = coefficient(path, &format!("{field}.c"), &t.c)?;
            commutators.push((c, coordinates(&plane, path, &field, &t.word)?));
        }
        let mut x = dual_commutator_sum(&plane, &commutators);
        for (n, t) in self.tensor.iter().enumerate() {
            let field = format!("tensor[{n}]");
            let c = coefficient(path, &format!("{field}.c"), &t.c)?;
            let letters: Vec<u16> =
                coordinates(&plane, path, &field, &t.word)?.into_iter().map(|x| plane.letter(x)).collect();
            x.add_term(Word::from_letters(&letters), &c);
        }
        LodayFunction::from_tensor(&plane, &x).map_err(|e| InputError::invalid(path, "tensor", e.to_string()))
    }

    /// Writes `a` in the literal tensor form.
    pub fn from_function(a: &LodayFunction) -> Self {
        FunctionFile {
            dim: a.plane().dim(),
            terms: Vec::new(),
            tensor: tensor_terms(&a.to_tensor()),
        }
    }
}

fn tensor_terms(x: &Element) -> Vec<FunctionTerm> {
    let basis = x.basis();
    x.terms()
        .map(|(w, c)| FunctionTerm {
            c: format_scalar(c),
            word: w.letters().iter().map(|&l| basis.name(l as usize).to_string()).collect(),
        })
        .collect()
}

/// Pretty JSON with a trailing newline.
pub fn to_pretty<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("file types always serialize");
    s.push('\n');
    s
}
