//! Symmetric functions of a fixed degree with coefficients in `Z[t]`.
//!
//! A [`SymF`] is stored in one of the bases `m`, `e`, `h`, `s`; [`convert`]
//! moves between them through the monomial basis using cached integer
//! transition matrices. [`QSymF`] holds quasisymmetric functions in the
//! monomial quasisymmetric basis `M_α`.

mod kostka_foulkes;
mod transition;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::partition::{Partition, PartitionError};
use crate::poly::Poly;

pub use kostka_foulkes::{
    charge, cocharge, kostka_foulkes_modified, modified_hall_littlewood, reading_word,
    semistandard_tableaux, Tableau,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymFuncError {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("partition ({partition}) has weight {weight}, expected degree {degree}")]
    WrongWeight { partition: Partition, weight: usize, degree: usize },
    #[error("composition {0:?} is not a composition of the degree")]
    BadComposition(Vec<usize>),
    #[error(
        "not symmetric: coefficient of M{first:?} is {first_coeff} but coefficient of M{second:?} is {second_coeff}"
    )]
    NotSymmetric {
        first: Vec<usize>,
        second: Vec<usize>,
        first_coeff: Poly,
        second_coeff: Poly,
    },
    #[error("unknown basis {0:?}")]
    UnknownBasis(String),
    #[error(transparent)]
    Partition(#[from] PartitionError),
    #[error("invalid JSON: {0}")]
    Json(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    M,
    E,
    H,
    S,
}

impl Basis {
    pub fn name(self) -> &'static str {
        match self {
            Basis::M => "m",
            Basis::E => "e",
            Basis::H => "h",
            Basis::S => "s",
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Basis {
    type Err = SymFuncError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "m" => Ok(Basis::M),
            "e" => Ok(Basis::E),
            "h" => Ok(Basis::H),
            "s" => Ok(Basis::S),
            _ => Err(SymFuncError::UnknownBasis(s.to_string())),
        }
    }
}

/// A homogeneous symmetric function of degree `degree`, written in `basis`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymF {
    degree: usize,
    basis: Basis,
    terms: BTreeMap<Partition, Poly>,
}

impl SymF {
    pub fn zero(degree: usize, basis: Basis) -> Self {
        SymF { degree, basis, terms: BTreeMap::new() }
    }

    /// The basis element `b_λ` itself.
    pub fn basis_element(basis: Basis, lambda: Partition) -> Self {
        let mut f = SymF::zero(lambda.weight(), basis);
        f.terms.insert(lambda, Poly::one());
        f
    }

    pub fn from_terms<I>(degree: usize, basis: Basis, terms: I) -> Result<Self, SymFuncError>
    where
        I: IntoIterator<Item = (Partition, Poly)>,
    {
        let mut f = SymF::zero(degree, basis);
        for (lambda, c) in terms {
            f.add_term(lambda, &c)?;
        }
        Ok(f)
    }

    pub fn add_term(&mut self, lambda: Partition, c: &Poly) -> Result<(), SymFuncError> {
        let weight = lambda.weight();
        if weight != self.degree {
            return Err(SymFuncError::WrongWeight { partition: lambda, weight, degree: self.degree });
        }
        let slot = self.terms.entry(lambda).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
        Ok(())
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn coeff(&self, lambda: &Partition) -> Poly {
        self.terms.get(lambda).cloned().unwrap_or_default()
    }

    /// Nonzero terms in increasing partition order.
    pub fn terms(&self) -> &BTreeMap<Partition, Poly> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Sum of all coefficients.
    pub fn coefficient_sum(&self) -> Poly {
        self.terms.values().sum()
    }

    pub fn scale(&self, c: &Poly) -> SymF {
        let terms = self
            .terms
            .iter()
            .map(|(k, v)| (k.clone(), v * c))
            .filter(|(_, v)| !v.is_zero())
            .collect();
        SymF { degree: self.degree, basis: self.basis, terms }
    }

    /// Sum of two functions; `other` is converted to `self`'s basis first.
    pub fn add(&self, other: &SymF) -> Result<SymF, SymFuncError> {
        check_degrees(self, other)?;
        let other = convert(other, self.basis);
        let mut out = self.clone();
        for (k, v) in other.terms {
            out.add_term(k, &v)?;
        }
        Ok(out)
    }

    fn dense(&self, parts: &[Partition]) -> Vec<Poly> {
        parts.iter().map(|p| self.coeff(p)).collect()
    }

    fn from_dense(degree: usize, basis: Basis, parts: &[Partition], coeffs: Vec<Poly>) -> SymF {
        let terms = parts
            .iter()
            .cloned()
            .zip(coeffs)
            .filter(|(_, c)| !c.is_zero())
            .collect();
        SymF { degree, basis, terms }
    }

    pub fn display_with<'a>(&'a self, var: &'a str) -> SymFDisplay<'a> {
        SymFDisplay { f: self, var }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&SymFJson::from(self)).expect("SymF serializes")
    }

    pub fn from_json(s: &str) -> Result<SymF, SymFuncError> {
        let raw: SymFJson = serde_json::from_str(s).map_err(|e| SymFuncError::Json(e.to_string()))?;
        SymF::try_from(raw)
    }
}

fn check_degrees(f: &SymF, g: &SymF) -> Result<(), SymFuncError> {
    if f.degree != g.degree {
        return Err(SymFuncError::DegreeMismatch { left: f.degree, right: g.degree });
    }
    Ok(())
}

/// Re-expands `f` in `target`. Exact; converting back recovers `f`.
pub fn convert(f: &SymF, target: Basis) -> SymF {
    if f.basis == target || f.is_zero() {
        return SymF { basis: target, ..f.clone() };
    }
    let tr = transition::transitions(f.degree);
    let parts = &tr.partitions;
    let mut coeffs = f.dense(parts);
    if let Some(to_m) = tr.to_monomial(f.basis) {
        coeffs = apply(&coeffs, to_m);
    }
    if let Some(from_m) = tr.from_monomial(target) {
        coeffs = apply(&coeffs, from_m);
    }
    SymF::from_dense(f.degree, target, parts, coeffs)
}

/// Row vector times integer matrix: `out_j = Σ_i v_i M_ij`.
fn apply(v: &[Poly], m: &[Vec<num_bigint::BigInt>]) -> Vec<Poly> {
    let n = m.first().map_or(0, Vec::len);
    let mut out = vec![Poly::zero(); n];
    for (vi, row) in v.iter().zip(m) {
        if vi.is_zero() {
            continue;
        }
        for (o, x) in out.iter_mut().zip(row) {
            if !num_traits::Zero::is_zero(x) {
                *o += &vi.scale(x);
            }
        }
    }
    out
}

/// The involution `ω`: swaps `e_λ ↔ h_λ`, sends `s_λ ↦ s_λ'`. The result is
/// expressed in the same basis as the input.
pub fn omega(f: &SymF) -> SymF {
    match f.basis {
        Basis::E => SymF { basis: Basis::H, ..f.clone() },
        Basis::H => SymF { basis: Basis::E, ..f.clone() },
        Basis::S => SymF {
            degree: f.degree,
            basis: Basis::S,
            terms: f.terms.iter().map(|(k, v)| (k.conjugate(), v.clone())).collect(),
        },
        Basis::M => {
            let in_h = convert(f, Basis::H);
            convert(&SymF { basis: Basis::E, ..in_h }, Basis::M)
        }
    }
}

/// Hall scalar product, computed by pairing `h` coefficients of `f` with `m`
/// coefficients of `g` (`⟨h_λ, m_ν⟩ = δ_λν`).
pub fn hall_scalar(f: &SymF, g: &SymF) -> Result<Poly, SymFuncError> {
    check_degrees(f, g)?;
    let fh = convert(f, Basis::H);
    let gm = convert(g, Basis::M);
    Ok(pair(&fh, &gm))
}

/// Hall scalar product through the Schur basis (`⟨s_λ, s_ν⟩ = δ_λν`).
pub fn hall_scalar_schur(f: &SymF, g: &SymF) -> Result<Poly, SymFuncError> {
    check_degrees(f, g)?;
    Ok(pair(&convert(f, Basis::S), &convert(g, Basis::S)))
}

fn pair(f: &SymF, g: &SymF) -> Poly {
    f.terms
        .iter()
        .filter_map(|(k, v)| g.terms.get(k).map(|w| v * w))
        .sum()
}

/// Expansion of `s_λ` in the `h` basis (Jacobi–Trudi).
pub fn schur_in_h(lambda: &Partition) -> SymF {
    let tr = transition::transitions(lambda.weight());
    let row = &tr.s_to_h[tr.index[lambda]];
    let coeffs = row.iter().map(|x| Poly::constant(x.clone())).collect();
    SymF::from_dense(lambda.weight(), Basis::H, &tr.partitions, coeffs)
}

/// A homogeneous quasisymmetric function in the monomial quasisymmetric basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QSymF {
    degree: usize,
    terms: BTreeMap<Vec<usize>, Poly>,
}

/// Outcome of a symmetry test on a [`QSymF`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Symmetry {
    Symmetric,
    /// Two rearrangements of the same partition with different coefficients.
    Asymmetric {
        first: Vec<usize>,
        second: Vec<usize>,
        first_coeff: Poly,
        second_coeff: Poly,
    },
}

impl Symmetry {
    pub fn is_symmetric(&self) -> bool {
        matches!(self, Symmetry::Symmetric)
    }
}

impl QSymF {
    pub fn zero(degree: usize) -> Self {
        QSymF { degree, terms: BTreeMap::new() }
    }

    pub fn add_term(&mut self, alpha: Vec<usize>, c: &Poly) -> Result<(), SymFuncError> {
        if alpha.contains(&0) || alpha.iter().sum::<usize>() != self.degree {
            return Err(SymFuncError::BadComposition(alpha));
        }
        let slot = self.terms.entry(alpha.clone()).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&alpha);
        }
        Ok(())
    }

    /// Adds `other` term by term. Addition of coefficient maps is associative
    /// and commutative, so shard results can be merged in any order.
    pub fn merge(&mut self, other: &QSymF) -> Result<(), SymFuncError> {
        if self.degree != other.degree {
            return Err(SymFuncError::DegreeMismatch { left: self.degree, right: other.degree });
        }
        for (k, v) in &other.terms {
            self.add_term(k.clone(), v)?;
        }
        Ok(())
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeff(&self, alpha: &[usize]) -> Poly {
        self.terms.get(alpha).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> &BTreeMap<Vec<usize>, Poly> {
        &self.terms
    }

    /// Checks that coefficients are constant on rearrangement classes,
    /// counting absent compositions as zero.
    pub fn symmetry(&self) -> Symmetry {
        let classes: std::collections::BTreeSet<Partition> = self
            .terms
            .keys()
            .map(|a| Partition::from_unsorted(a.clone()))
            .collect();
        for lambda in classes {
            let reference = lambda.parts().to_vec();
            let ref_coeff = self.coeff(&reference);
            for alpha in distinct_rearrangements(&reference) {
                let c = self.coeff(&alpha);
                if c != ref_coeff {
                    return Symmetry::Asymmetric {
                        first: reference,
                        second: alpha,
                        first_coeff: ref_coeff,
                        second_coeff: c,
                    };
                }
            }
        }
        Symmetry::Symmetric
    }

    /// Sum over the `M_α` of `coeff(α)(1)`-weighted counts: evaluates the
    /// function at `x_1 = ... = x_k = 1`, all other variables zero, with `t`
    /// set to `t_value`.
    pub fn principal_specialization(&self, k: u64, t_value: u64) -> num_bigint::BigInt {
        self.terms
            .iter()
            .map(|(alpha, c)| c.eval_u64(t_value) * binomial(k, alpha.len() as u64))
            .sum()
    }
}

fn binomial(n: u64, k: u64) -> num_bigint::BigInt {
    if k > n {
        return num_bigint::BigInt::from(0);
    }
    (0..k).fold(num_bigint::BigInt::from(1), |acc, i| acc * (n - i) / (i + 1))
}

/// Distinct permutations of `parts`, lexicographic, starting from sorted order.
fn distinct_rearrangements(parts: &[usize]) -> Vec<Vec<usize>> {
    let mut cur = parts.to_vec();
    cur.sort_unstable();
    let mut out = vec![cur.clone()];
    // next_permutation
    loop {
        let Some(i) = (1..cur.len()).rev().find(|&i| cur[i - 1] < cur[i]) else {
            return out;
        };
        let j = (i..cur.len()).rev().find(|&j| cur[j] > cur[i - 1]).expect("pivot exists");
        cur.swap(i - 1, j);
        cur[i..].reverse();
        out.push(cur.clone());
    }
}

/// Converts a symmetric quasisymmetric function to the `m` basis.
pub fn qsym_to_sym(f: &QSymF) -> Result<SymF, SymFuncError> {
    if let Symmetry::Asymmetric { first, second, first_coeff, second_coeff } = f.symmetry() {
        return Err(SymFuncError::NotSymmetric { first, second, first_coeff, second_coeff });
    }
    let mut out = SymF::zero(f.degree, Basis::M);
    for (alpha, c) in &f.terms {
        if alpha.windows(2).all(|w| w[0] >= w[1]) {
            out.add_term(Partition::new(alpha.clone())?, c)?;
        }
    }
    Ok(out)
}

pub struct SymFDisplay<'a> {
    f: &'a SymF,
    var: &'a str,
}

impl fmt::Display for SymFDisplay<'_> {
    /// Terms in decreasing partition order, e.g. `(1 + t)·h[3] + t·h[2,1]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.f.is_zero() {
            return write!(f, "0");
        }
        let b = self.f.basis.name();
        for (i, (lambda, c)) in self.f.terms.iter().rev().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            let shown = c.display_with(self.var).to_string();
            if *c == Poly::one() {
                write!(f, "{b}[{lambda}]")?;
            } else if c.coeffs().iter().filter(|x| !num_traits::Zero::is_zero(*x)).count() == 1
                && !shown.starts_with('-')
            {
                write!(f, "{shown}·{b}[{lambda}]")?;
            } else {
                write!(f, "({shown})·{b}[{lambda}]")?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for SymF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.display_with("t").fmt(f)
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    partition: Vec<usize>,
    coeffs: Poly,
}

/// Wire form: `{"degree":n,"basis":"e","terms":[{"partition":[2,1],"coeffs":[0,1]}]}`,
/// terms in decreasing partition order.
#[derive(Serialize, Deserialize)]
struct SymFJson {
    degree: usize,
    basis: Basis,
    terms: Vec<TermJson>,
}

impl From<&SymF> for SymFJson {
    fn from(f: &SymF) -> Self {
        SymFJson {
            degree: f.degree,
            basis: f.basis,
            terms: f
                .terms
                .iter()
                .rev()
                .map(|(k, v)| TermJson { partition: k.parts().to_vec(), coeffs: v.clone() })
                .collect(),
        }
    }
}

impl TryFrom<SymFJson> for SymF {
    type Error = SymFuncError;
    fn try_from(raw: SymFJson) -> Result<Self, Self::Error> {
        let terms = raw
            .terms
            .into_iter()
            .map(|t| Ok((Partition::new(t.partition)?, t.coeffs)))
            .collect::<Result<Vec<_>, SymFuncError>>()?;
        SymF::from_terms(raw.degree, raw.basis, terms)
    }
}

impl Serialize for SymF {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        SymFJson::from(self).serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SymF {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = SymFJson::deserialize(deserializer)?;
        SymF::try_from(raw).map_err(serde::de::Error::custom)
    }
}
