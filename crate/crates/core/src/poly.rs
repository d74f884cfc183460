//! Polynomials in the doubly indexed variables `x_{i,j}` (row `i ∈ [c]`,
//! column `j ≥ 1`) with the standard grading.
//!
//! Variables are ordered column-major: `x_{i,j} < x_{i',j'}` iff `j < j'`,
//! or `j = j'` and `i < i'`. That ordering is the derived `Ord` of [`Var`];
//! it drives both the storage order and the graded lexicographic order.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};
use crate::maps::Injection;

/// The variable `x_{row,col}`. Field order matters: column first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Var {
    pub col: usize,
    pub row: usize,
}

impl Var {
    pub fn new(row: usize, col: usize) -> Self {
        Var { col, row }
    }
}

/// A monomial, stored as `(variable, exponent)` pairs sorted by variable with
/// no zero exponents.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    factors: Vec<(Var, u32)>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn var(row: usize, col: usize) -> Self {
        Monomial {
            factors: vec![(Var::new(row, col), 1)],
        }
    }

    /// Builds a monomial from `(row, col, exp)` triples; repeated variables
    /// are merged and zero exponents dropped.
    pub fn from_triples(triples: impl IntoIterator<Item = (usize, usize, u32)>) -> Self {
        let mut map: BTreeMap<Var, u32> = BTreeMap::new();
        for (row, col, e) in triples {
            *map.entry(Var::new(row, col)).or_default() += e;
        }
        Monomial {
            factors: map.into_iter().filter(|&(_, e)| e > 0).collect(),
        }
    }

    pub fn factors(&self) -> &[(Var, u32)] {
        &self.factors
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.factors.iter().map(|&(_, e)| e).sum()
    }

    pub fn exponent(&self, v: Var) -> u32 {
        self.factors
            .binary_search_by(|(w, _)| w.cmp(&v))
            .map(|i| self.factors[i].1)
            .unwrap_or(0)
    }

    /// Largest column index occurring, 0 for the constant monomial.
    pub fn width(&self) -> usize {
        self.factors.last().map(|(v, _)| v.col).unwrap_or(0)
    }

    pub fn max_row(&self) -> usize {
        self.factors.iter().map(|(v, _)| v.row).max().unwrap_or(0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.factors.len() + other.factors.len());
        let (mut i, mut j) = (0, 0);
        while i < self.factors.len() && j < other.factors.len() {
            let (a, b) = (self.factors[i], other.factors[j]);
            match a.0.cmp(&b.0) {
                Ordering::Less => {
                    out.push(a);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a.0, a.1 + b.1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.factors[i..]);
        out.extend_from_slice(&other.factors[j..]);
        Monomial { factors: out }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        let mut j = 0;
        for &(v, e) in &self.factors {
            while j < other.factors.len() && other.factors[j].0 < v {
                j += 1;
            }
            if j == other.factors.len() || other.factors[j].0 != v || other.factors[j].1 < e {
                return false;
            }
        }
        true
    }

    /// `other / self` when `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let factors = other
            .factors
            .iter()
            .filter_map(|&(v, e)| {
                let r = e - self.exponent(v);
                (r > 0).then_some((v, r))
            })
            .collect();
        Some(Monomial { factors })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut map: BTreeMap<Var, u32> = self.factors.iter().copied().collect();
        for &(v, e) in &other.factors {
            let slot = map.entry(v).or_default();
            *slot = (*slot).max(e);
        }
        Monomial {
            factors: map.into_iter().collect(),
        }
    }

    /// Replaces every `x_{i,j}` by `x_{i,ε(j)}`. Columns must lie in the
    /// source of `ε`.
    pub fn map_columns(&self, eps: &(impl Injection + ?Sized)) -> Result<Monomial> {
        let mut factors = Vec::with_capacity(self.factors.len());
        for &(v, e) in &self.factors {
            let col = eps.apply(v.col).ok_or_else(|| {
                Error::Width(format!(
                    "column {} exceeds the source {} of the map",
                    v.col,
                    eps.source()
                ))
            })?;
            factors.push((Var::new(v.row, col), e));
        }
        factors.sort_unstable_by_key(|a| a.0);
        Ok(Monomial { factors })
    }

    /// Graded lexicographic comparison; the largest variable is compared first.
    pub fn grlex_cmp(&self, other: &Monomial) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| lex_from_top(&self.factors, &other.factors))
    }

    /// `(row, col, exp)` triples in storage order.
    pub fn triples(&self) -> Vec<[usize; 3]> {
        self.factors
            .iter()
            .map(|&(v, e)| [v.row, v.col, e as usize])
            .collect()
    }
}

fn lex_from_top(a: &[(Var, u32)], b: &[(Var, u32)]) -> Ordering {
    let (mut i, mut j) = (a.len(), b.len());
    loop {
        match (i, j) {
            (0, 0) => return Ordering::Equal,
            (0, _) => return Ordering::Less,
            (_, 0) => return Ordering::Greater,
            _ => {}
        }
        let (va, ea) = a[i - 1];
        let (vb, eb) = b[j - 1];
        match va.cmp(&vb) {
            Ordering::Greater => return Ordering::Greater,
            Ordering::Less => return Ordering::Less,
            Ordering::Equal => match ea.cmp(&eb) {
                Ordering::Equal => {
                    i -= 1;
                    j -= 1;
                }
                o => return o,
            },
        }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("1");
        }
        for (k, (v, e)) in self.factors.iter().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            write!(f, "x{}_{}", v.row, v.col)?;
            if *e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// Exact polynomial over a configured [`Field`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    field: Field,
    terms: BTreeMap<Monomial, FieldElement>,
}

impl Polynomial {
    pub fn zero(field: Field) -> Self {
        Polynomial {
            field,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: FieldElement) -> Self {
        Polynomial::term(c, Monomial::one())
    }

    pub fn one(field: Field) -> Self {
        Polynomial::constant(field.one())
    }

    pub fn term(c: FieldElement, m: Monomial) -> Self {
        let field = c.field();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { field, terms }
    }

    /// `x_{row,col}`.
    pub fn var(field: Field, row: usize, col: usize) -> Self {
        Polynomial::term(field.one(), Monomial::var(row, col))
    }

    /// Sums `(coefficient, monomial)` pairs, combining like terms.
    pub fn from_terms(field: Field, terms: impl IntoIterator<Item = (FieldElement, Monomial)>) -> Result<Self> {
        let mut p = Polynomial::zero(field);
        for (c, m) in terms {
            if c.field() != field {
                return Err(Error::FieldMismatch(field, c.field()));
            }
            p.add_term(c, m);
        }
        Ok(p)
    }

    pub fn field(&self) -> Field {
        self.field
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

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &FieldElement)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> FieldElement {
        self.terms.get(m).cloned().unwrap_or_else(|| self.field.zero())
    }

    /// The constant term if the polynomial is a constant (including zero).
    pub fn as_constant(&self) -> Option<FieldElement> {
        match self.terms.len() {
            0 => Some(self.field.zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    pub(crate) fn add_term(&mut self, c: FieldElement, m: Monomial) {
        if c.is_zero() {
            return;
        }
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

    /// Smallest `n` with every column `≤ n`. Recomputed on each call.
    pub fn width(&self) -> usize {
        self.terms.keys().map(Monomial::width).max().unwrap_or(0)
    }

    pub fn max_row(&self) -> usize {
        self.terms.keys().map(Monomial::max_row).max().unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// Degree of a homogeneous polynomial; for an inhomogeneous one the
    /// maximal term degree with the flag set to `false`. `None` for zero.
    pub fn total_degree(&self) -> Option<(u32, bool)> {
        let max = self.terms.keys().map(Monomial::degree).max()?;
        Some((max, self.is_homogeneous()))
    }

    /// Lead term under graded lex with column-major variable precedence.
    pub fn lead_term(&self) -> Option<(&Monomial, &FieldElement)> {
        self.terms.iter().max_by(|a, b| a.0.grlex_cmp(b.0))
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check(other)?;
        Ok(self + other)
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check(other)?;
        Ok(self - other)
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check(other)?;
        Ok(self * other)
    }

    fn check(&self, other: &Polynomial) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch(self.field, other.field))
        }
    }

    pub fn scale(&self, c: &FieldElement) -> Polynomial {
        let mut out = Polynomial::zero(self.field);
        if c.is_zero() {
            return out;
        }
        for (m, a) in &self.terms {
            out.terms.insert(m.clone(), a * c);
        }
        out
    }

    pub fn mul_term(&self, c: &FieldElement, m: &Monomial) -> Polynomial {
        let mut out = Polynomial::zero(self.field);
        if c.is_zero() {
            return out;
        }
        for (k, a) in &self.terms {
            out.terms.insert(k.mul(m), a * c);
        }
        out
    }

    /// Ring homomorphism `x_{i,j} ↦ x_{i,ε(j)}`.
    pub fn apply_column_map(&self, eps: &(impl Injection + ?Sized)) -> Result<Polynomial> {
        let mut out = Polynomial::zero(self.field);
        for (m, c) in &self.terms {
            out.terms.insert(m.map_columns(eps)?, c.clone());
        }
        Ok(out)
    }

    /// Serialized terms `[coefficient-string, [[row, col, exp], ...]]`.
    pub fn to_doc(&self) -> PolynomialDoc {
        PolynomialDoc(
            self.terms
                .iter()
                .map(|(m, c)| TermDoc(c.to_coefficient_string(), m.triples()))
                .collect(),
        )
    }

    pub fn from_doc(field: Field, doc: &PolynomialDoc) -> Result<Polynomial> {
        let mut p = Polynomial::zero(field);
        for TermDoc(c, vars) in &doc.0 {
            let c = field.parse(c)?;
            let mut triples = Vec::with_capacity(vars.len());
            for t in vars {
                let [row, col, exp] = *t;
                if row == 0 || col == 0 {
                    return Err(Error::Parse(format!(
                        "variable indices are 1-based, got x_{{{row},{col}}}"
                    )));
                }
                triples.push((row, col, exp as u32));
            }
            p.add_term(c, Monomial::from_triples(triples));
        }
        Ok(p)
    }
}

/// One serialized term.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermDoc(pub String, pub Vec<[usize; 3]>);

/// A serialized polynomial: a list of terms.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolynomialDoc(pub Vec<TermDoc>);

impl std::ops::Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.field, rhs.field, "field mismatch");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(c.clone(), m.clone());
        }
        out
    }
}

impl std::ops::Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.field, rhs.field, "field mismatch");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(-c, m.clone());
        }
        out
    }
}

impl std::ops::Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.field, rhs.field, "field mismatch");
        let mut out = Polynomial::zero(self.field);
        for (m, c) in &self.terms {
            for (k, d) in &rhs.terms {
                out.add_term(c * d, m.mul(k));
            }
        }
        out
    }
}

impl std::ops::Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-self.field.one())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            if m.is_one() {
                write!(f, "{c}")?;
            } else if c.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "({c})*{m}")?;
            }
        }
        Ok(())
    }
}

/// Every monomial of total degree `deg` in the variables `x_{i,j}`,
/// `i ∈ [rows]`, `j ∈ [width]`, in ascending graded lex order.
pub fn monomials_of_degree(rows: usize, width: usize, deg: u32) -> Vec<Monomial> {
    let vars: Vec<Var> = (1..=width)
        .flat_map(|col| (1..=rows).map(move |row| Var::new(row, col)))
        .collect();
    let mut out = Vec::new();
    fn rec(vars: &[Var], k: usize, left: u32, cur: &mut Vec<(Var, u32)>, out: &mut Vec<Monomial>) {
        if left == 0 {
            out.push(Monomial { factors: cur.clone() });
            return;
        }
        if k == vars.len() {
            return;
        }
        for e in (0..=left).rev() {
            if e > 0 {
                cur.push((vars[k], e));
            }
            rec(vars, k + 1, left - e, cur, out);
            if e > 0 {
                cur.pop();
            }
        }
    }
    rec(&vars, 0, deg, &mut Vec::new(), &mut out);
    out.sort_by(|a, b| a.grlex_cmp(b));
    out
}
