//! Finitely generated free OI- and FI-modules over `P^{OI,c}` / `P^{FI,c}`.
//!
//! A free module is a direct sum of summands `F^{d}(-t)`; its width-`n`
//! component has one basis element `e_{π,i}` per summand `i` and morphism
//! `π: [d_i] → [n]` of the presentation's category. Elements are stored as
//! sparse maps from module monomials `x^a e_{π,i}` to coefficients.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};
use crate::maps::{count_fi, count_oi, enumerate_fi, enumerate_oi, FiMap, Injection, OiMap, SymPerm};
use crate::poly::{Monomial, Polynomial, PolynomialDoc};

/// Index category of a free module.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Category {
    Oi,
    Fi,
}

impl fmt::Display for Category {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Category::Oi => "OI",
            Category::Fi => "FI",
        })
    }
}

/// One summand `F^{arity}(-degree)`: the basis element sits in `degree`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Summand {
    pub arity: usize,
    pub degree: i64,
}

impl Summand {
    pub fn new(arity: usize, degree: i64) -> Self {
        Summand { arity, degree }
    }

    /// The twist `t` in `F(t)`, i.e. `-degree`.
    pub fn shift(&self) -> i64 {
        -self.degree
    }
}

/// Label of a basis element `e_{π,i}` of a width component.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BasisLabel {
    pub summand: usize,
    pub pi: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FreePresentation {
    pub category: Category,
    /// Number `c` of variable rows.
    pub rows: usize,
    pub summands: Vec<Summand>,
}

impl FreePresentation {
    pub fn new(category: Category, rows: usize, summands: Vec<Summand>) -> Self {
        FreePresentation {
            category,
            rows,
            summands,
        }
    }

    /// The algebra `P` itself, i.e. `F^{0}`.
    pub fn algebra(category: Category, rows: usize) -> Self {
        FreePresentation::new(category, rows, vec![Summand::new(0, 0)])
    }

    pub fn rank(&self) -> usize {
        self.summands.len()
    }

    pub fn arity(&self, summand: usize) -> usize {
        self.summands[summand].arity
    }

    /// Number of basis elements in width `n`.
    pub fn basis_count(&self, n: usize) -> usize {
        self.summands
            .iter()
            .map(|s| match self.category {
                Category::Oi => count_oi(s.arity, n),
                Category::Fi => count_fi(s.arity, n),
            })
            .sum()
    }

    /// Basis of the width-`n` component: summand-major, morphisms in
    /// lexicographic order.
    pub fn basis(&self, n: usize) -> Vec<BasisLabel> {
        let mut out = Vec::new();
        for (i, s) in self.summands.iter().enumerate() {
            let maps: Vec<Vec<usize>> = match self.category {
                Category::Oi => enumerate_oi(s.arity, n).iter().map(|m| m.images().to_vec()).collect(),
                Category::Fi => enumerate_fi(s.arity, n).iter().map(|m| m.images().to_vec()).collect(),
            };
            out.extend(maps.into_iter().map(|pi| BasisLabel { summand: i, pi }));
        }
        out
    }

    pub fn is_morphism(&self, summand: usize, pi: &[usize], width: usize) -> bool {
        let Some(s) = self.summands.get(summand) else {
            return false;
        };
        if pi.len() != s.arity {
            return false;
        }
        match self.category {
            Category::Oi => OiMap::new(width, pi.to_vec()).is_ok(),
            Category::Fi => FiMap::new(width, pi.to_vec()).is_ok(),
        }
    }

    /// Checks every term of `x` against this presentation.
    pub fn validate(&self, x: &FreeElement) -> Result<()> {
        for (m, _) in x.terms() {
            if m.summand >= self.summands.len() {
                return Err(Error::Width(format!(
                    "summand {} out of range (rank {})",
                    m.summand + 1,
                    self.rank()
                )));
            }
            if !self.is_morphism(m.summand, &m.pi, x.width()) {
                return Err(Error::Category(format!(
                    "{:?} is not an {} morphism [{}] → [{}]",
                    m.pi,
                    self.category,
                    self.arity(m.summand),
                    x.width()
                )));
            }
            if m.mono.width() > x.width() {
                return Err(Error::Width(format!(
                    "variable column {} exceeds width {}",
                    m.mono.width(),
                    x.width()
                )));
            }
            if m.mono.max_row() > self.rows {
                return Err(Error::Width(format!(
                    "variable row {} exceeds the row count {}",
                    m.mono.max_row(),
                    self.rows
                )));
            }
        }
        Ok(())
    }
}

/// A module monomial `x^a e_{π,i}`. The derived order is only the storage
/// order; semantic comparisons go through [`ModuleOrder`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ModuleMonomial {
    pub summand: usize,
    pub pi: Vec<usize>,
    pub mono: Monomial,
}

impl ModuleMonomial {
    pub fn new(summand: usize, pi: Vec<usize>, mono: Monomial) -> Self {
        ModuleMonomial { summand, pi, mono }
    }

    pub fn mul(&self, m: &Monomial) -> ModuleMonomial {
        ModuleMonomial {
            summand: self.summand,
            pi: self.pi.clone(),
            mono: self.mono.mul(m),
        }
    }

    /// Image under the module map induced by `ε`.
    pub fn map(&self, eps: &(impl Injection + ?Sized)) -> Result<ModuleMonomial> {
        let pi = self
            .pi
            .iter()
            .map(|&j| {
                eps.apply(j)
                    .ok_or_else(|| Error::Width(format!("basis index {j} outside the source of the map")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(ModuleMonomial {
            summand: self.summand,
            pi,
            mono: self.mono.map_columns(eps)?,
        })
    }

    pub fn same_basis(&self, other: &ModuleMonomial) -> bool {
        self.summand == other.summand && self.pi == other.pi
    }
}

impl fmt::Display for ModuleMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}*e_{:?},{}", self.mono, self.pi, self.summand + 1)
    }
}

/// An element of the width-`n` component of a free module.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FreeElement {
    field: Field,
    width: usize,
    terms: BTreeMap<ModuleMonomial, FieldElement>,
}

impl FreeElement {
    pub fn zero(field: Field, width: usize) -> Self {
        FreeElement {
            field,
            width,
            terms: BTreeMap::new(),
        }
    }

    /// The basis element `e_{π,summand}` of width `width`.
    pub fn basis(field: Field, width: usize, summand: usize, pi: Vec<usize>) -> Self {
        let mut x = FreeElement::zero(field, width);
        x.add_term(field.one(), ModuleMonomial::new(summand, pi, Monomial::one()));
        x
    }

    /// `Σ p·e_{π,i}` from `(coefficient, summand, π)` triples.
    pub fn from_parts(field: Field, width: usize, parts: impl IntoIterator<Item = (Polynomial, usize, Vec<usize>)>) -> Self {
        let mut x = FreeElement::zero(field, width);
        for (p, summand, pi) in parts {
            for (m, c) in p.terms() {
                x.add_term(c.clone(), ModuleMonomial::new(summand, pi.clone(), m.clone()));
            }
        }
        x
    }

    /// A polynomial regarded as an element of `P = F^{0}`.
    pub fn from_polynomial(p: &Polynomial, width: usize) -> Self {
        FreeElement::from_parts(p.field(), width, [(p.clone(), 0, vec![])])
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn width(&self) -> usize {
        self.width
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

    pub fn terms(&self) -> impl Iterator<Item = (&ModuleMonomial, &FieldElement)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &ModuleMonomial) -> Option<&FieldElement> {
        self.terms.get(m)
    }

    pub fn add_term(&mut self, c: FieldElement, m: ModuleMonomial) {
        if c.is_zero() {
            return;
        }
        assert_eq!(c.field(), self.field, "field mismatch");
        match self.terms.get_mut(&m) {
            Some(slot) => {
                let s = &*slot + &c;
                if s.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *slot = s;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    fn check(&self, other: &FreeElement) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field, other.field));
        }
        if self.width != other.width {
            return Err(Error::Width(format!("widths {} and {} differ", self.width, other.width)));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &FreeElement) -> Result<FreeElement> {
        self.check(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(c.clone(), m.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &FreeElement) -> Result<FreeElement> {
        self.try_add(&other.scale(&-self.field.one()))
    }

    /// `self += c·m·other`.
    pub fn add_scaled(&mut self, c: &FieldElement, m: &Monomial, other: &FreeElement) {
        debug_assert_eq!(self.width, other.width);
        for (k, a) in &other.terms {
            self.add_term(a * c, k.mul(m));
        }
    }

    pub fn scale(&self, c: &FieldElement) -> FreeElement {
        let mut out = FreeElement::zero(self.field, self.width);
        if !c.is_zero() {
            for (m, a) in &self.terms {
                out.terms.insert(m.clone(), a * c);
            }
        }
        out
    }

    /// Multiplication by a polynomial of `P_n`.
    pub fn mul_poly(&self, p: &Polynomial) -> FreeElement {
        let mut out = FreeElement::zero(self.field, self.width);
        for (m, c) in p.terms() {
            out.add_scaled(c, m, self);
        }
        out
    }

    /// `a e_π ↦ A(ε)(a) e_{ε∘π}` for any injection `ε` out of `[width]`.
    /// Category checks belong to the caller; see [`apply_module_map`].
    pub fn map(&self, eps: &(impl Injection + ?Sized)) -> Result<FreeElement> {
        if eps.source() != self.width {
            return Err(Error::Width(format!(
                "element of width {} cannot be pushed along a map out of [{}]",
                self.width,
                eps.source()
            )));
        }
        let mut out = FreeElement::zero(self.field, eps.target());
        for (m, c) in &self.terms {
            out.terms.insert(m.map(eps)?, c.clone());
        }
        Ok(out)
    }

    /// Coefficient polynomials grouped by basis element.
    pub fn grouped(&self) -> BTreeMap<BasisLabel, Polynomial> {
        let mut out: BTreeMap<BasisLabel, Polynomial> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(BasisLabel {
                summand: m.summand,
                pi: m.pi.clone(),
            })
            .or_insert_with(|| Polynomial::zero(self.field))
            .add_term(c.clone(), m.mono.clone());
        }
        out
    }

    /// Degree of `x^a e_{π,i}` is `deg a + degree_i`. Returns the maximal
    /// term degree and whether all terms agree; `None` for zero.
    pub fn degree(&self, pres: &FreePresentation) -> Option<(i64, bool)> {
        let mut degs = self
            .terms
            .keys()
            .map(|m| m.mono.degree() as i64 + pres.summands[m.summand].degree);
        let first = degs.next()?;
        let (max, homog) = degs.fold((first, true), |(mx, h), d| (mx.max(d), h && d == first));
        Some((max, homog))
    }

    /// Lead term under `order`.
    pub fn lead(&self, order: &ModuleOrder) -> Result<(ModuleMonomial, FieldElement)> {
        let mut best: Option<(OrderKey, &ModuleMonomial, &FieldElement)> = None;
        for (m, c) in &self.terms {
            let k = order.key(self.width, m);
            if best.as_ref().is_none_or(|(bk, _, _)| k > *bk) {
                best = Some((k, m, c));
            }
        }
        best.map(|(_, m, c)| (m.clone(), c.clone())).ok_or(Error::ZeroElement)
    }

    /// Normalizes so the coefficient of the storage-first term is one.
    pub fn normalized(&self) -> FreeElement {
        match self.terms.values().next() {
            Some(c) => self.scale(&c.inverse().unwrap()),
            None => self.clone(),
        }
    }

    pub fn to_doc(&self) -> FreeElementDoc {
        FreeElementDoc {
            width: Some(self.width),
            terms: self
                .grouped()
                .into_iter()
                .map(|(b, p)| BasisTermDoc {
                    coeff: p.to_doc(),
                    summand: b.summand + 1,
                    pi: b.pi,
                })
                .collect(),
        }
    }

    /// Parses a document against `pres`; an absent width defaults to
    /// `default_width`.
    pub fn from_doc(field: Field, pres: &FreePresentation, doc: &FreeElementDoc, default_width: Option<usize>) -> Result<FreeElement> {
        let width = doc
            .width
            .or(default_width)
            .ok_or_else(|| Error::schema("width", "missing width"))?;
        let mut parts = Vec::with_capacity(doc.terms.len());
        for (k, t) in doc.terms.iter().enumerate() {
            if t.summand == 0 || t.summand > pres.rank() {
                return Err(Error::schema(
                    format!("terms[{k}].summand"),
                    format!("summand {} out of range 1..={}", t.summand, pres.rank()),
                ));
            }
            parts.push((Polynomial::from_doc(field, &t.coeff)?, t.summand - 1, t.pi.clone()));
        }
        let x = FreeElement::from_parts(field, width, parts);
        pres.validate(&x)?;
        Ok(x)
    }
}

impl fmt::Display for FreeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0 (width {})", self.width);
        }
        for (k, (b, p)) in self.grouped().into_iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({p})*e_{:?},{}", b.pi, b.summand + 1)?;
        }
        write!(f, " (width {})", self.width)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisTermDoc {
    pub coeff: PolynomialDoc,
    /// 1-based summand index.
    pub summand: usize,
    pub pi: Vec<usize>,
}

/// Serialized element `{"width": n, "terms": [{"coeff", "summand", "pi"}]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FreeElementDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub width: Option<usize>,
    pub terms: Vec<BasisTermDoc>,
}

/// Category-checked module map: `ε` must be a morphism of `pres.category`.
pub fn apply_module_map(pres: &FreePresentation, x: &FreeElement, eps: &(impl Injection + ?Sized)) -> Result<FreeElement> {
    if pres.category == Category::Oi && !eps.is_order_preserving() {
        return Err(Error::Category(format!(
            "{:?} is not order-preserving but the module is an OI-module",
            eps.images()
        )));
    }
    x.map(eps)
}

/// Image of `x` under the morphism of free modules sending the basis
/// element `e_{id,i}` of the source to `images[i]` (of width `d_i`):
/// `a·e_{π,i} ↦ a·F(π)(images[i])`.
pub fn apply_morphism(x: &FreeElement, images: &[FreeElement], target_field: Field) -> Result<FreeElement> {
    let mut out = FreeElement::zero(target_field, x.width());
    for (m, c) in x.terms() {
        let b = images
            .get(m.summand)
            .ok_or_else(|| Error::Width(format!("summand {} has no image", m.summand + 1)))?;
        if b.width() != m.pi.len() {
            return Err(Error::Width(format!(
                "image of summand {} has width {} but the basis morphism has arity {}",
                m.summand + 1,
                b.width(),
                m.pi.len()
            )));
        }
        if b.field() != target_field || c.field() != target_field {
            return Err(Error::FieldMismatch(target_field, b.field()));
        }
        let pi = FiMap::new(x.width(), m.pi.clone())?;
        out.add_scaled(c, &m.mono, &b.map(&pi)?);
    }
    Ok(out)
}

/// Lexicographically comparable encoding of a module monomial under an order.
pub type OrderKey = Vec<i64>;

/// Monomial order on a free OI-module.
///
/// `PositionOverTerm` compares the summand index first (smaller index is
/// larger), then `π` lexicographically, then the monomial by graded lex
/// with column-major variable precedence. `Schreyer` compares `x^a ε_{σ,i}`
/// by the lead monomial of `x^a·F(σ)(b_i)` in the base order, then by
/// generator index (smaller is larger), then `σ`.
#[derive(Clone, Debug)]
pub enum ModuleOrder {
    PositionOverTerm { rows: usize },
    Schreyer(Arc<SchreyerOrder>),
}

#[derive(Clone, Debug)]
pub struct SchreyerOrder {
    pub base: ModuleOrder,
    /// Lead monomials of the basis images `b_i`, of width `w(b_i)`.
    pub leads: Vec<ModuleMonomial>,
}

impl ModuleOrder {
    pub fn pot(rows: usize) -> Self {
        ModuleOrder::PositionOverTerm { rows }
    }

    /// Schreyer order induced by `base` and the (nonzero) basis images.
    pub fn schreyer(base: &ModuleOrder, images: &[FreeElement]) -> Result<Self> {
        let leads = images
            .iter()
            .map(|b| b.lead(base).map(|(m, _)| m))
            .collect::<Result<Vec<_>>>()?;
        Ok(ModuleOrder::Schreyer(Arc::new(SchreyerOrder {
            base: base.clone(),
            leads,
        })))
    }

    pub fn rows(&self) -> usize {
        match self {
            ModuleOrder::PositionOverTerm { rows } => *rows,
            ModuleOrder::Schreyer(s) => s.base.rows(),
        }
    }

    pub fn key(&self, width: usize, m: &ModuleMonomial) -> OrderKey {
        match self {
            ModuleOrder::PositionOverTerm { rows } => {
                let rows = (*rows).max(m.mono.max_row());
                let mut key = Vec::with_capacity(2 + m.pi.len() + rows * width);
                key.push(-(m.summand as i64));
                key.extend(m.pi.iter().map(|&v| v as i64));
                key.push(m.mono.degree() as i64);
                let start = key.len();
                key.resize(start + rows * width, 0);
                for &(v, e) in m.mono.factors() {
                    // dense exponent vector from the largest variable down
                    let pos = (width - v.col) * rows + (rows - v.row);
                    key[start + pos] = e as i64;
                }
                key
            }
            ModuleOrder::Schreyer(s) => {
                let lead = &s.leads[m.summand];
                let sigma = OiMap::from_parts_unchecked(width, m.pi.clone());
                let image = lead
                    .map(&sigma)
                    .expect("Schreyer order: basis morphism incompatible with lead width")
                    .mul(&m.mono);
                let mut key = s.base.key(width, &image);
                key.push(-(m.summand as i64));
                key.extend(m.pi.iter().map(|&v| v as i64));
                key
            }
        }
    }

    pub fn compare(&self, width: usize, a: &ModuleMonomial, b: &ModuleMonomial) -> Ordering {
        self.key(width, a).cmp(&self.key(width, b))
    }
}

/// Width-checked comparison of two module monomials.
pub fn compare(order: &ModuleOrder, a: (&ModuleMonomial, usize), b: (&ModuleMonomial, usize)) -> Result<Ordering> {
    if a.1 != b.1 {
        return Err(Error::Width(format!("cannot compare widths {} and {}", a.1, b.1)));
    }
    Ok(order.compare(a.1, a.0, b.0))
}

/// For each FI summand `i`, the fixed enumeration `π_{i,1}, …, π_{i,d_i!}`
/// of `Sym(d_i)` (lexicographic on permutation words).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisDictionary {
    pub perms: Vec<Vec<SymPerm>>,
    offsets: Vec<usize>,
}

impl BasisDictionary {
    /// OI summand index of `e_{id,i,j}` (0-based `i`, `j`).
    pub fn oi_summand(&self, i: usize, j: usize) -> usize {
        self.offsets[i] + j
    }

    /// Inverse of [`Self::oi_summand`].
    pub fn fi_of(&self, s: usize) -> (usize, usize) {
        let i = self.offsets.partition_point(|&o| o <= s) - 1;
        (i, s - self.offsets[i])
    }

    /// `e_{σ,i,j} ↦ e_{σ∘π_{i,j},i}`.
    pub fn to_fi(&self, x: &FreeElement) -> Result<FreeElement> {
        let mut out = FreeElement::zero(x.field(), x.width());
        for (m, c) in x.terms() {
            if m.summand >= *self.offsets.last().unwrap() {
                return Err(Error::Width(format!("OI summand {} out of range", m.summand + 1)));
            }
            let (i, j) = self.fi_of(m.summand);
            let perm = &self.perms[i][j];
            let pi = perm.images().iter().map(|&k| m.pi[k - 1]).collect();
            out.add_term(c.clone(), ModuleMonomial::new(i, pi, m.mono.clone()));
        }
        Ok(out)
    }

    /// `e_{τ,i} ↦ e_{σ,i,j}` where `τ = σ∘π_{i,j}` is the unique factorization.
    pub fn to_oi(&self, x: &FreeElement) -> Result<FreeElement> {
        let mut out = FreeElement::zero(x.field(), x.width());
        for (m, c) in x.terms() {
            let i = m.summand;
            let perms = self
                .perms
                .get(i)
                .ok_or_else(|| Error::Width(format!("FI summand {} out of range", i + 1)))?;
            let tau = FiMap::new(x.width(), m.pi.clone())?;
            let (sigma, perm) = tau.factor();
            let j = perms
                .iter()
                .position(|p| *p == perm)
                .ok_or_else(|| Error::Internal(format!("permutation {:?} missing from dictionary", perm.images())))?;
            out.add_term(
                c.clone(),
                ModuleMonomial::new(self.oi_summand(i, j), sigma.images().to_vec(), m.mono.clone()),
            );
        }
        Ok(out)
    }
}

/// `F|_OI ≅ ⊕_i (F^{OI,d_i})^{d_i!}`: each FI summand becomes `d_i!` OI
/// summands of the same arity and degree.
pub fn restrict_fi_to_oi(f: &FreePresentation) -> Result<(FreePresentation, BasisDictionary)> {
    if f.category != Category::Fi {
        return Err(Error::Category("restriction expects an FI presentation".into()));
    }
    let mut summands = Vec::new();
    let mut perms = Vec::with_capacity(f.rank());
    let mut offsets = Vec::with_capacity(f.rank() + 1);
    for s in &f.summands {
        offsets.push(summands.len());
        let ps = SymPerm::all(s.arity);
        summands.extend(std::iter::repeat_n(*s, ps.len()));
        perms.push(ps);
    }
    offsets.push(summands.len());
    Ok((
        FreePresentation::new(Category::Oi, f.rows, summands),
        BasisDictionary { perms, offsets },
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rational;

    fn mm(summand: usize, pi: &[usize], triples: &[(usize, usize, u32)]) -> ModuleMonomial {
        ModuleMonomial::new(summand, pi.to_vec(), Monomial::from_triples(triples.iter().copied()))
    }

    #[test]
    fn module_map_on_basis_element() {
        let pres = FreePresentation::new(Category::Oi, 1, vec![Summand::new(1, 0)]);
        let mut x = FreeElement::zero(Q, 1);
        x.add_term(Q.one(), mm(0, &[1], &[(1, 1, 1)]));
        let eps = OiMap::new(2, vec![2]).unwrap();
        let y = apply_module_map(&pres, &x, &eps).unwrap();
        let mut expect = FreeElement::zero(Q, 2);
        expect.add_term(Q.one(), mm(0, &[2], &[(1, 2, 1)]));
        assert_eq!(y, expect);
        assert_eq!(apply_module_map(&pres, &x, &OiMap::identity(1)).unwrap(), x);
        let swap = FiMap::new(2, vec![2, 1]).unwrap();
        assert!(matches!(apply_module_map(&pres, &y, &swap), Err(Error::Category(_))));
        assert!(matches!(apply_module_map(&pres, &x, &OiMap::identity(2)), Err(Error::Width(_))));
    }

    #[test]
    fn default_order_examples() {
        let order = ModuleOrder::pot(1);
        let a = mm(0, &[1], &[(1, 1, 1)]);
        let b = mm(0, &[1], &[(1, 2, 1)]);
        assert_eq!(order.compare(2, &a, &b), Ordering::Less);
        assert_eq!(order.compare(2, &a, &a), Ordering::Equal);
        let s1 = mm(0, &[1], &[]);
        let s2 = mm(1, &[1], &[]);
        assert_eq!(order.compare(2, &s1, &s2), Ordering::Greater);
        assert!(compare(&order, (&a, 2), (&b, 3)).is_err());
    }

    #[test]
    fn lead_of_polynomial_element() {
        let p = &(&Polynomial::var(Q, 1, 1) * &Polynomial::var(Q, 1, 1))
            + &(&Polynomial::var(Q, 1, 1) * &Polynomial::var(Q, 1, 2));
        let x = FreeElement::from_polynomial(&p, 2);
        let (m, c) = x.lead(&ModuleOrder::pot(1)).unwrap();
        assert_eq!(m.mono, Monomial::from_triples([(1, 1, 1), (1, 2, 1)]));
        assert!(c.is_one());
        assert!(matches!(FreeElement::zero(Q, 2).lead(&ModuleOrder::pot(1)), Err(Error::ZeroElement)));
    }

    #[test]
    fn restriction_of_arity_two() {
        let f = FreePresentation::new(Category::Fi, 1, vec![Summand::new(2, 0)]);
        let (oi, dict) = restrict_fi_to_oi(&f).unwrap();
        assert_eq!(oi.rank(), 2);
        assert_eq!(dict.perms[0][0].images(), &[1, 2]);
        assert_eq!(dict.perms[0][1].images(), &[2, 1]);
        assert_eq!(f.basis_count(3), 6);
        assert_eq!(oi.basis_count(3), 6);
        let f0 = FreePresentation::algebra(Category::Fi, 1);
        let (oi0, _) = restrict_fi_to_oi(&f0).unwrap();
        assert_eq!(oi0.summands, vec![Summand::new(0, 0)]);
        assert!(restrict_fi_to_oi(&oi).is_err());
    }

    #[test]
    fn dictionary_conversion() {
        let f = FreePresentation::new(Category::Fi, 1, vec![Summand::new(2, 0)]);
        let (_, dict) = restrict_fi_to_oi(&f).unwrap();
        // e_{(1,3),1,2} with π_{1,2} = (2,1) is e_{(3,1),1}
        let x = FreeElement::basis(Q, 3, dict.oi_summand(0, 1), vec![1, 3]);
        let y = dict.to_fi(&x).unwrap();
        assert_eq!(y, FreeElement::basis(Q, 3, 0, vec![3, 1]));
        assert_eq!(dict.to_oi(&y).unwrap(), x);
        let id = FreeElement::basis(Q, 2, 0, vec![1, 2]);
        assert_eq!(dict.to_fi(&id).unwrap(), id);
    }

    #[test]
    fn doc_rejects_bad_summand() {
        let pres = FreePresentation::algebra(Category::Oi, 1);
        let doc = FreeElementDoc {
            width: Some(1),
            terms: vec![BasisTermDoc {
                coeff: Polynomial::var(Q, 1, 1).to_doc(),
                summand: 2,
                pi: vec![],
            }],
        };
        assert!(matches!(FreeElement::from_doc(Q, &pres, &doc, None), Err(Error::Schema { .. })));
    }
}
