//! Width-`n` specializations of resolutions as chain complexes of
//! polynomial matrices over `P_n`, with the `Sym(n)`-action of the FI case.
//!
//! Level `k` of a [`WidthComplex`] is the free `P_n`-module `F^k_n`;
//! `differential(k)` is the matrix of `F^k_n → F^{k-1}_n` whose column `b`
//! holds the coordinates of the image of basis element `b`.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};
use crate::free::{BasisLabel, Category, FreeElement};
use crate::linalg::{Echelon, SparseVec};
use crate::maps::{enumerate_fi, enumerate_oi, FiMap, Injection, OiMap, SymPerm};
use crate::poly::{monomials_of_degree, Monomial, Polynomial, PolynomialDoc};
use crate::resolution::{Resolution, ResolutionCategory};

/// A dense matrix of field elements, row-major.
pub type KMatrix = Vec<Vec<FieldElement>>;

/// A dense matrix of polynomials, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<Polynomial>>,
}

impl PolyMatrix {
    pub fn zero(field: Field, rows: usize, cols: usize) -> Self {
        PolyMatrix {
            rows,
            cols,
            entries: vec![vec![Polynomial::zero(field); cols]; rows],
        }
    }

    pub fn column(&self, c: usize) -> Vec<Polynomial> {
        self.entries.iter().map(|r| r[c].clone()).collect()
    }

    fn set_column(&mut self, c: usize, col: Vec<Polynomial>) {
        for (r, p) in col.into_iter().enumerate() {
            self.entries[r][c] = p;
        }
    }

    fn remove_row(&mut self, r: usize) {
        self.entries.remove(r);
        self.rows -= 1;
    }

    fn remove_column(&mut self, c: usize) {
        for row in &mut self.entries {
            row.remove(c);
        }
        self.cols -= 1;
    }

    pub fn mul(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        if self.cols != other.rows {
            return Err(Error::Width(format!(
                "cannot multiply {}×{} by {}×{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let field = self.field().or(other.field()).unwrap_or(Field::Rational);
        let mut out = PolyMatrix::zero(field, self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = Polynomial::zero(field);
                for k in 0..self.cols {
                    if !self.entries[i][k].is_zero() && !other.entries[k][j].is_zero() {
                        acc = &acc + &(&self.entries[i][k] * &other.entries[k][j]);
                    }
                }
                out.entries[i][j] = acc;
            }
        }
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().all(Polynomial::is_zero)
    }

    fn field(&self) -> Option<Field> {
        self.entries.first().and_then(|r| r.first()).map(Polynomial::field)
    }

    /// First nonzero constant entry, scanning rows then columns.
    pub fn unit_entry(&self) -> Option<(usize, usize, FieldElement)> {
        for (r, row) in self.entries.iter().enumerate() {
            for (c, p) in row.iter().enumerate() {
                if let Some(a) = p.as_constant() {
                    if !a.is_zero() {
                        return Some((r, c, a));
                    }
                }
            }
        }
        None
    }
}

/// One level `F^k_n`: basis labels and the degree of each basis element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Level {
    pub labels: Vec<BasisLabel>,
    pub degrees: Vec<i64>,
}

impl Level {
    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    fn remove(&mut self, i: usize) {
        self.labels.remove(i);
        self.degrees.remove(i);
    }
}

/// Action of every `σ ∈ Sym(n)` on the basis of each level, keyed by the
/// image word of `σ`. Column `b` of a matrix is `σ*(f_b)`.
pub type Actions = Vec<BTreeMap<Vec<usize>, KMatrix>>;

/// A width-`n` chain complex `F^p_n → ⋯ → F^1_n → F^0_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WidthComplex {
    pub n: usize,
    pub field: Field,
    /// Number `c` of variable rows.
    pub rows: usize,
    pub category: ResolutionCategory,
    pub graded: bool,
    pub levels: Vec<Level>,
    /// `differentials[k - 1]` is the matrix of `F^k_n → F^{k-1}_n`.
    pub differentials: Vec<PolyMatrix>,
    /// `Sym(n)`-action; present for FI and Sym resolutions.
    pub actions: Option<Actions>,
}

/// Failure of the equivariance identity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquivarianceWitness {
    pub step: usize,
    pub sigma: Vec<usize>,
    /// 0-based column of the step-`k` basis.
    pub column: usize,
}

/// One line of an exactness report.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyRow {
    pub step: usize,
    pub degree: i64,
    pub dim: usize,
    pub rank_in: usize,
    pub rank_out: usize,
    pub homology: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExactnessReport {
    pub max_degree: i64,
    pub rows: Vec<HomologyRow>,
}

impl ExactnessReport {
    pub fn is_exact(&self) -> bool {
        self.rows.iter().all(|r| r.homology == 0)
    }

    /// Homology dimensions keyed by `(step, degree)`.
    pub fn homology(&self) -> BTreeMap<(usize, i64), usize> {
        self.rows.iter().map(|r| ((r.step, r.degree), r.homology)).collect()
    }
}

fn boxed_map(category: Category, target: usize, images: Vec<usize>) -> Result<Box<dyn Injection>> {
    Ok(match category {
        Category::Oi => Box::new(OiMap::new(target, images)?),
        Category::Fi => Box::new(FiMap::new(target, images)?),
    })
}

/// Specializes a resolution at width `n`.
///
/// Level bases are enumerated summand by summand with lexicographic
/// morphisms; entry `(row, col)` is the coefficient of the row basis element
/// in `F(π)(b_i)` for the column basis element `(i, π)`.
pub fn specialize(res: &Resolution, n: usize) -> Result<WidthComplex> {
    let category = res.category.base();
    let levels: Vec<Level> = res
        .steps
        .iter()
        .map(|s| {
            let labels = s.presentation.basis(n);
            let degrees = labels.iter().map(|l| s.presentation.summands[l.summand].degree).collect();
            Level { labels, degrees }
        })
        .collect();
    let mut differentials = Vec::with_capacity(res.len());
    for k in 1..res.steps.len() {
        let index: HashMap<&BasisLabel, usize> = levels[k - 1].labels.iter().enumerate().map(|(i, l)| (l, i)).collect();
        let mut m = PolyMatrix::zero(res.field, levels[k - 1].rank(), levels[k].rank());
        for (col, label) in levels[k].labels.iter().enumerate() {
            let pi = boxed_map(category, n, label.pi.clone())?;
            let image = res.steps[k].differential[label.summand].map(pi.as_ref())?;
            for (b, p) in image.grouped() {
                let row = *index
                    .get(&b)
                    .ok_or_else(|| Error::Internal(format!("basis element {b:?} missing at level {}", k - 1)))?;
                m.entries[row][col] = p;
            }
        }
        differentials.push(m);
    }
    let actions = (category == Category::Fi).then(|| standard_actions(&levels, n, res.field));
    Ok(WidthComplex {
        n,
        field: res.field,
        rows: res.ambient().rows,
        category: res.category,
        graded: res.graded,
        levels,
        differentials,
        actions,
    })
}

/// Permutation matrices of `(i, π) ↦ (i, σ∘π)` for all `σ ∈ Sym(n)`.
fn standard_actions(levels: &[Level], n: usize, field: Field) -> Actions {
    let perms = SymPerm::all(n);
    levels
        .iter()
        .map(|level| {
            let index: HashMap<&BasisLabel, usize> = level.labels.iter().enumerate().map(|(i, l)| (l, i)).collect();
            perms
                .iter()
                .map(|sigma| {
                    let mut m = vec![vec![field.zero(); level.rank()]; level.rank()];
                    for (b, label) in level.labels.iter().enumerate() {
                        let moved = BasisLabel {
                            summand: label.summand,
                            pi: label.pi.iter().map(|&j| sigma.images()[j - 1]).collect(),
                        };
                        m[index[&moved]][b] = field.one();
                    }
                    (sigma.images().to_vec(), m)
                })
                .collect()
        })
        .collect()
}

/// `σ·v` for a coordinate vector `v` of level `k`: coefficients are moved
/// by `σ·x_{i,j} = x_{i,σ(j)}`, basis elements by the level's action.
fn act(action: &KMatrix, sigma: &SymPerm, v: &[Polynomial], field: Field) -> Result<Vec<Polynomial>> {
    let mut out = vec![Polynomial::zero(field); v.len()];
    for (s, p) in v.iter().enumerate() {
        if p.is_zero() {
            continue;
        }
        let moved = p.apply_column_map(sigma)?;
        for (t, row) in action.iter().enumerate() {
            let a = &row[s];
            if !a.is_zero() {
                out[t] = &out[t] + &moved.scale(a);
            }
        }
    }
    Ok(out)
}

impl WidthComplex {
    /// Ranks of `F^1_n, …, F^p_n`.
    pub fn ranks(&self) -> Vec<usize> {
        self.levels.iter().skip(1).map(Level::rank).collect()
    }

    pub fn differential(&self, k: usize) -> &PolyMatrix {
        &self.differentials[k - 1]
    }

    /// True when some differential of a step `k ≥ 2` has a nonzero
    /// constant entry.
    pub fn has_unit_entries(&self) -> bool {
        self.differentials.iter().skip(1).any(|m| m.unit_entry().is_some())
    }

    /// `D_{k-1}·D_k = 0` for every `k ≥ 2`.
    pub fn composition_is_zero(&self) -> Result<bool> {
        for k in 2..=self.differentials.len() {
            if !self.differential(k - 1).mul(self.differential(k))?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Checks `D_k·A_k(σ) = A_{k-1}(σ)·σ(D_k)` for every step. Returns the
    /// first failing `(step, σ, column)`.
    pub fn check_equivariance(&self, sigma: &SymPerm) -> Result<Option<EquivarianceWitness>> {
        if sigma.n() != self.n {
            return Err(Error::Width(format!("σ permutes [{}] but the complex has width {}", sigma.n(), self.n)));
        }
        let actions = self
            .actions
            .as_ref()
            .ok_or_else(|| Error::Category("an OI specialization carries no Sym(n)-action".into()))?;
        let key = sigma.images().to_vec();
        for k in 1..self.levels.len() {
            let d = self.differential(k);
            let a_k = &actions[k][&key];
            let a_prev = &actions[k - 1][&key];
            for b in 0..self.levels[k].rank() {
                // D_k(σ*f_b)
                let mut lhs = vec![Polynomial::zero(self.field); d.rows];
                for (r, row) in a_k.iter().enumerate() {
                    let c = &row[b];
                    if !c.is_zero() {
                        for (t, l) in lhs.iter_mut().enumerate() {
                            *l = &*l + &d.entries[t][r].scale(c);
                        }
                    }
                }
                let rhs = act(a_prev, sigma, &d.column(b), self.field)?;
                if lhs != rhs {
                    return Ok(Some(EquivarianceWitness {
                        step: k,
                        sigma: key,
                        column: b,
                    }));
                }
            }
        }
        Ok(None)
    }

    /// Checks the group law `A(στ) = A(σ)A(τ)` on every level.
    pub fn check_group_law(&self, sigma: &SymPerm, tau: &SymPerm) -> Result<bool> {
        let Some(actions) = &self.actions else {
            return Ok(true);
        };
        let st = sigma.compose(tau)?;
        for level in actions {
            let prod = kmul(&level[sigma.images()], &level[tau.images()]);
            if prod != level[st.images()] {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Splits off the trivial complex at a unit entry `a = D_k[r][c]`:
    /// columns of `D_k` are cleared against column `c`, then row `r` and
    /// column `c` of `D_k`, column `r` of `D_{k-1}` and row `c` of `D_{k+1}`
    /// are deleted.
    fn split(&mut self, k: usize, r: usize, c: usize, a: &FieldElement) {
        let d = &mut self.differentials[k - 1];
        let pivot = d.column(c);
        let inv = a.inverse().unwrap();
        for l in 0..d.cols {
            if l == c || d.entries[r][l].is_zero() {
                continue;
            }
            let f = d.entries[r][l].scale(&inv);
            let col: Vec<Polynomial> = d
                .column(l)
                .iter()
                .zip(&pivot)
                .map(|(p, q)| p - &(&f * q))
                .collect();
            d.set_column(l, col);
        }
        d.remove_row(r);
        d.remove_column(c);
        self.differentials[k - 2].remove_column(r);
        if k < self.differentials.len() {
            self.differentials[k].remove_row(c);
        }
        self.levels[k - 1].remove(r);
        self.levels[k].remove(c);
        self.actions = None;
    }

    /// Coordinates of `μ·v` keyed by `(row, monomial)`.
    fn slice_vector(v: &[Polynomial], mu: &Monomial) -> SparseVec<(usize, Monomial)> {
        let mut out = SparseVec::new();
        for (r, p) in v.iter().enumerate() {
            for (m, c) in p.terms() {
                out.insert((r, m.mul(mu)), c.clone());
            }
        }
        out
    }

    /// Monomials of degree `d - deg` in the `c·n` variables (none if negative).
    fn monomials(&self, d: i64, deg: i64) -> Vec<Monomial> {
        if d < deg {
            Vec::new()
        } else {
            monomials_of_degree(self.rows, self.n, (d - deg) as u32)
        }
    }

    /// Removes top-step columns lying in the span of the other columns
    /// (degree-slice test), scanning from the last column down.
    fn prune_top(&mut self) {
        let k = self.differentials.len();
        if k == 0 {
            return;
        }
        let mut c = self.levels[k].rank();
        while c > 0 {
            c -= 1;
            let d = self.differential(k);
            let deg = self.levels[k].degrees[c];
            let col = d.column(c);
            let mut span = Echelon::new(self.field);
            for l in 0..d.cols {
                if l == c {
                    continue;
                }
                let other = d.column(l);
                for mu in self.monomials(deg, self.levels[k].degrees[l]) {
                    span.insert(Self::slice_vector(&other, &mu));
                }
            }
            if span.contains(&Self::slice_vector(&col, &Monomial::one())) {
                self.differentials[k - 1].remove_column(c);
                self.levels[k].remove(c);
                self.actions = None;
            }
        }
    }

    /// Minimal graded free resolution: splits off trivial complexes at unit
    /// entries of the steps `k ≥ 2` (lowest step first, rows then columns),
    /// then drops redundant columns of the top step.
    pub fn minimize(&self) -> Result<WidthComplex> {
        if !self.graded {
            return Err(Error::Grading("minimization needs a graded complex".into()));
        }
        let mut w = self.clone();
        'outer: loop {
            for k in 2..=w.differentials.len() {
                if let Some((r, c, a)) = w.differential(k).unit_entry() {
                    w.split(k, r, c, &a);
                    continue 'outer;
                }
            }
            break;
        }
        w.prune_top();
        w.actions = None;
        Ok(w)
    }

    /// Minimization followed by re-basing so that every differential is
    /// equivariant for a new `Sym(n)`-action. Needs `char K = 0` or
    /// `char K > n`.
    pub fn equivariant_minimize(&self) -> Result<WidthComplex> {
        let p = self.field.characteristic();
        if p != 0 && p <= self.n as u64 {
            return Err(Error::ModularCharacteristic {
                characteristic: p,
                n: self.n,
            });
        }
        let actions = self
            .actions
            .as_ref()
            .ok_or_else(|| Error::Category("equivariant minimization needs the Sym(n)-action of an FI resolution".into()))?;
        let ambient_action = actions[0].clone();
        let mut w = self.minimize()?;
        let perms = SymPerm::all(self.n);
        let order_inv = self.field.from_i64(perms.len() as i64).inverse().unwrap();
        let mut new_actions: Actions = vec![ambient_action];
        for k in 1..w.levels.len() {
            let prev_action = new_actions[k - 1].clone();
            let rank = w.levels[k].rank();
            let mut level_action: BTreeMap<Vec<usize>, KMatrix> = perms
                .iter()
                .map(|s| (s.images().to_vec(), vec![vec![self.field.zero(); rank]; rank]))
                .collect();
            let mut degrees: Vec<i64> = w.levels[k].degrees.clone();
            degrees.sort_unstable();
            degrees.dedup();
            for j in degrees {
                let block: Vec<usize> = (0..rank).filter(|&b| w.levels[k].degrees[b] == j).collect();
                let d = w.differential(k).clone();
                // span of m·N in degree j, then the degree-j generators
                let mut span = Echelon::new(self.field);
                for l in 0..d.cols {
                    let dl = w.levels[k].degrees[l];
                    if dl < j {
                        for mu in w.monomials(j, dl) {
                            span.insert(Self::slice_vector(&d.column(l), &mu));
                        }
                    }
                }
                let offset = span.inserted();
                for &b in &block {
                    span.insert(Self::slice_vector(&d.column(b), &Monomial::one()));
                }
                // ρ(σ): σ·w_l ≡ Σ_m ρ(σ)_{ml} w_m modulo m·N
                let mut rho: HashMap<Vec<usize>, KMatrix> = HashMap::new();
                for sigma in &perms {
                    let sk = sigma.images().to_vec();
                    let mut m = vec![vec![self.field.zero(); block.len()]; block.len()];
                    for (l, &b) in block.iter().enumerate() {
                        let moved = act(&prev_action[&sk], sigma, &d.column(b), self.field)?;
                        let coeffs = span
                            .express(&Self::slice_vector(&moved, &Monomial::one()))
                            .ok_or_else(|| Error::Internal("image of the differential is not Sym(n)-stable".into()))?;
                        for (t, c) in coeffs {
                            if t >= offset {
                                m[t - offset][l] = c;
                            }
                        }
                    }
                    rho.insert(sk, m);
                }
                // n_l = (1/n!) Σ_σ σ·(Σ_m ρ(σ⁻¹)_{ml} w_m)
                let mut new_cols = Vec::with_capacity(block.len());
                for l in 0..block.len() {
                    let mut acc = vec![Polynomial::zero(self.field); d.rows];
                    for sigma in &perms {
                        let inv = &rho[sigma.inverse().images()];
                        let mut comb = vec![Polynomial::zero(self.field); d.rows];
                        for (m, &b) in block.iter().enumerate() {
                            let c = &inv[m][l];
                            if !c.is_zero() {
                                for (t, e) in comb.iter_mut().enumerate() {
                                    *e = &*e + &d.entries[t][b].scale(c);
                                }
                            }
                        }
                        let moved = act(&prev_action[sigma.images()], sigma, &comb, self.field)?;
                        for (a, v) in acc.iter_mut().zip(moved) {
                            *a = &*a + &v;
                        }
                    }
                    new_cols.push(acc.into_iter().map(|p| p.scale(&order_inv)).collect::<Vec<_>>());
                }
                for (l, &b) in block.iter().enumerate() {
                    w.differentials[k - 1].set_column(b, new_cols[l].clone());
                }
                for (sk, m) in &rho {
                    let target = level_action.get_mut(sk).unwrap();
                    for (r, &br) in block.iter().enumerate() {
                        for (c, &bc) in block.iter().enumerate() {
                            target[br][bc] = m[r][c].clone();
                        }
                    }
                }
            }
            new_actions.push(level_action);
        }
        w.actions = Some(new_actions);
        Ok(w)
    }

    /// Homology dimensions of the degree-`d` slices, `d ≤ max_degree`, at
    /// every internal level `1 ≤ k < p`.
    pub fn verify_exactness(&self, max_degree: i64) -> Result<ExactnessReport> {
        let mut rows = Vec::new();
        let p = self.differentials.len();
        for k in 1..p {
            for d in 0..=max_degree {
                let dim: usize = self.levels[k]
                    .degrees
                    .iter()
                    .map(|&deg| self.monomials(d, deg).len())
                    .sum();
                let rank_out = self.slice_rank(k, d);
                let rank_in = self.slice_rank(k + 1, d);
                let homology = dim
                    .checked_sub(rank_in + rank_out)
                    .ok_or_else(|| Error::Internal(format!("ranks exceed dimension at step {k}, degree {d}")))?;
                rows.push(HomologyRow {
                    step: k,
                    degree: d,
                    dim,
                    rank_in,
                    rank_out,
                    homology,
                });
            }
        }
        Ok(ExactnessReport { max_degree, rows })
    }

    /// Rank of `D_k` on the degree-`d` slice of `F^k_n`.
    fn slice_rank(&self, k: usize, d: i64) -> usize {
        let m = self.differential(k);
        let mut e = Echelon::new(self.field);
        for b in 0..m.cols {
            let col = m.column(b);
            if col.iter().all(Polynomial::is_zero) {
                continue;
            }
            for mu in self.monomials(d, self.levels[k].degrees[b]) {
                e.insert(Self::slice_vector(&col, &mu));
            }
        }
        e.rank()
    }

    pub fn to_doc(&self) -> WidthComplexDoc {
        WidthComplexDoc {
            n: self.n,
            category: self.category,
            graded: self.graded,
            ranks: self.ranks(),
            levels: self
                .levels
                .iter()
                .map(|l| LevelDoc {
                    basis: l
                        .labels
                        .iter()
                        .map(|b| BasisLabelDoc {
                            summand: b.summand + 1,
                            pi: b.pi.clone(),
                        })
                        .collect(),
                    degrees: l.degrees.clone(),
                })
                .collect(),
            differentials: self
                .differentials
                .iter()
                .map(|m| MatrixDoc {
                    rows: m.rows,
                    cols: m.cols,
                    entries: m.entries.iter().map(|r| r.iter().map(Polynomial::to_doc).collect()).collect(),
                })
                .collect(),
            actions: self.actions.as_ref().map(|acts| {
                let gens: Vec<Vec<usize>> = (1..self.n)
                    .map(|i| SymPerm::adjacent_transposition(self.n, i).unwrap().images().to_vec())
                    .collect();
                gens.into_iter()
                    .map(|g| ActionDoc {
                        sigma: g.clone(),
                        levels: acts
                            .iter()
                            .map(|level| {
                                level[&g]
                                    .iter()
                                    .map(|r| r.iter().map(FieldElement::to_coefficient_string).collect())
                                    .collect()
                            })
                            .collect(),
                    })
                    .collect()
            }),
        }
    }
}

fn kmul(a: &KMatrix, b: &KMatrix) -> KMatrix {
    let n = a.len();
    let m = b.first().map_or(0, Vec::len);
    let inner = b.len();
    (0..n)
        .map(|i| {
            (0..m)
                .map(|j| {
                    let mut acc = a[i].first().map(|x| x.field().zero()).unwrap_or_else(|| Field::Rational.zero());
                    for k in 0..inner {
                        if !a[i][k].is_zero() && !b[k][j].is_zero() {
                            acc = &acc + &(&a[i][k] * &b[k][j]);
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisLabelDoc {
    pub summand: usize,
    pub pi: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LevelDoc {
    pub basis: Vec<BasisLabelDoc>,
    pub degrees: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixDoc {
    pub rows: usize,
    pub cols: usize,
    /// Row-major entries.
    pub entries: Vec<Vec<PolynomialDoc>>,
}

/// Action matrices of one generator of `Sym(n)`, one per level.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ActionDoc {
    pub sigma: Vec<usize>,
    pub levels: Vec<Vec<Vec<String>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WidthComplexDoc {
    pub n: usize,
    pub category: ResolutionCategory,
    pub graded: bool,
    pub ranks: Vec<usize>,
    pub levels: Vec<LevelDoc>,
    pub differentials: Vec<MatrixDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub actions: Option<Vec<ActionDoc>>,
}

/// Basis enumeration of a width-`n` level for a presentation summand list;
/// exposed for counting checks.
pub fn count_basis(category: Category, arities: &[usize], n: usize) -> usize {
    arities
        .iter()
        .map(|&d| match category {
            Category::Oi => enumerate_oi(d, n).len(),
            Category::Fi => enumerate_fi(d, n).len(),
        })
        .sum()
}

/// Convenience: the image of a basis element of a level as a free element.
pub fn column_element(w: &WidthComplex, k: usize, b: usize) -> FreeElement {
    let parts = w.levels[k - 1]
        .labels
        .iter()
        .enumerate()
        .map(|(r, l)| (w.differential(k).entries[r][b].clone(), l.summand, l.pi.clone()));
    FreeElement::from_parts(w.field, w.n, parts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::free::{FreePresentation, Summand};
    use crate::resolution::{resolve_fi, resolve_oi, ResolveOptions, ResolutionStep};

    const Q: Field = Field::Rational;

    fn square(col: usize) -> Polynomial {
        let x = Polynomial::var(Q, 1, col);
        &x * &x
    }

    fn koszul(category: Category, p: usize) -> Resolution {
        let amb = FreePresentation::algebra(category, 1);
        let b = FreeElement::from_polynomial(&square(1), 1);
        match category {
            Category::Oi => resolve_oi(&amb, &[b], p, &ResolveOptions::default()).unwrap(),
            Category::Fi => resolve_fi(&amb, &[b], p, &ResolveOptions::default()).unwrap(),
        }
    }

    #[test]
    fn koszul_oi_at_three() {
        let w = specialize(&koszul(Category::Oi, 3), 3).unwrap();
        assert_eq!(w.ranks(), vec![3, 3, 1]);
        let d1 = w.differential(1);
        assert_eq!(d1.entries[0], vec![square(1), square(2), square(3)]);
        assert!(w.composition_is_zero().unwrap());
        assert!(!w.has_unit_entries());
        let report = w.verify_exactness(8).unwrap();
        assert!(report.is_exact());
        assert!(w.actions.is_none());
    }

    #[test]
    fn width_zero_is_empty() {
        let w = specialize(&koszul(Category::Oi, 3), 0).unwrap();
        assert_eq!(w.ranks(), vec![0, 0, 0]);
    }

    #[test]
    fn fi_koszul_minimizes_to_classical_ranks() {
        let w = specialize(&koszul(Category::Fi, 3), 3).unwrap();
        assert_eq!(w.ranks(), vec![3, 6, 12]);
        for s in SymPerm::all(3) {
            assert_eq!(w.check_equivariance(&s).unwrap(), None);
        }
        let before = w.verify_exactness(8).unwrap();
        let m = w.minimize().unwrap();
        assert_eq!(m.ranks(), vec![3, 3, 1]);
        assert!(!m.has_unit_entries());
        assert_eq!(m.verify_exactness(8).unwrap().homology(), before.homology());
        let e = w.equivariant_minimize().unwrap();
        assert_eq!(e.ranks(), vec![3, 3, 1]);
        assert!(!e.has_unit_entries());
        assert!(e.composition_is_zero().unwrap());
        for s in [SymPerm::adjacent_transposition(3, 1).unwrap(), SymPerm::long_cycle(3)] {
            assert_eq!(e.check_equivariance(&s).unwrap(), None);
        }
        assert_eq!(e.verify_exactness(8).unwrap().homology(), before.homology());
    }

    #[test]
    fn modular_characteristic_is_refused() {
        let amb = FreePresentation::algebra(Category::Fi, 1);
        let f = Field::Prime(3);
        let x = Polynomial::var(f, 1, 1);
        let b = FreeElement::from_polynomial(&(&x * &x), 1);
        let res = resolve_fi(&amb, &[b], 2, &ResolveOptions::default()).unwrap();
        let w = specialize(&res, 3).unwrap();
        assert!(matches!(w.equivariant_minimize(), Err(Error::ModularCharacteristic { .. })));
    }

    #[test]
    fn corrupted_entry_breaks_equivariance() {
        let mut w = specialize(&koszul(Category::Fi, 2), 2).unwrap();
        w.differentials[0].entries[0][0] = square(2);
        let t = SymPerm::adjacent_transposition(2, 1).unwrap();
        let witness = w.check_equivariance(&t).unwrap().unwrap();
        assert_eq!(witness.step, 1);
    }

    #[test]
    fn identity_complex_splits_completely() {
        // P(-1) --[1]--> P(-1) --[x]--> P at level 2 → 1 → 0
        let amb = FreePresentation::algebra(Category::Oi, 1);
        let one = |n| FreeElement::from_parts(Q, n, [(Polynomial::one(Q), 0, vec![])]);
        let res = Resolution {
            category: ResolutionCategory::Oi,
            field: Q,
            graded: true,
            steps: vec![
                ResolutionStep {
                    presentation: amb.clone(),
                    differential: vec![],
                },
                ResolutionStep {
                    presentation: FreePresentation::new(Category::Oi, 1, vec![Summand::new(0, 1), Summand::new(0, 1)]),
                    differential: vec![FreeElement::zero(Q, 0), FreeElement::zero(Q, 0)],
                },
                ResolutionStep {
                    presentation: FreePresentation::new(Category::Oi, 1, vec![Summand::new(0, 1)]),
                    differential: vec![FreeElement::basis(Q, 0, 0, vec![])],
                },
            ],
        };
        let _ = one(0);
        let w = specialize(&res, 1).unwrap();
        let m = w.minimize().unwrap();
        assert_eq!(m.ranks(), vec![1, 0]);
    }

    #[test]
    fn deleted_generator_is_detected() {
        let mut w = specialize(&koszul(Category::Oi, 3), 3).unwrap();
        w.differentials[2].remove_column(0);
        w.levels[3].remove(0);
        let report = w.verify_exactness(8).unwrap();
        assert!(!report.is_exact());
        assert_eq!(report.homology()[&(2, 6)], 1);
    }

    #[test]
    fn vacuous_at_degree_zero() {
        let w = specialize(&koszul(Category::Oi, 3), 3).unwrap();
        assert!(w.verify_exactness(0).unwrap().is_exact());
    }

    #[test]
    fn group_law_on_fi_specialization() {
        let w = specialize(&koszul(Category::Fi, 3), 3).unwrap();
        for s in SymPerm::all(3) {
            for t in SymPerm::all(3) {
                assert!(w.check_group_law(&s, &t).unwrap());
            }
        }
    }
}
