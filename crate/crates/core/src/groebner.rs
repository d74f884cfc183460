//! Division, S-pairs and the Buchberger completion for submodules of free
//! OI-modules.
//!
//! A set `B` generates the OI-submodule whose width-`n` component is spanned
//! over `P_n` by all shifts `F(ρ)(b)`, `b ∈ B`, `ρ ∈ Hom_OI(w(b), n)`.
//! Divisibility therefore searches over generators *and* shifts.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::free::{FreeElement, ModuleMonomial, ModuleOrder, OrderKey};
use crate::maps::{enumerate_oi, joint_extensions, Injection, OiMap};
use crate::poly::{Monomial, Polynomial};

/// Default bound on the number of generators Buchberger may adjoin.
pub const DEFAULT_MAX_ADJOINED: usize = 10_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GroebnerSettings {
    pub max_adjoined: usize,
}

impl Default for GroebnerSettings {
    fn default() -> Self {
        GroebnerSettings {
            max_adjoined: DEFAULT_MAX_ADJOINED,
        }
    }
}

/// One summand `a·F(ρ)(b_k)` of a division expression.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quotient {
    pub coeff: Polynomial,
    pub generator: usize,
    pub rho: OiMap,
}

/// `f = Σ a·F(ρ)(b_k) + remainder`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisionRecord {
    pub quotients: Vec<Quotient>,
    pub remainder: FreeElement,
}

impl DivisionRecord {
    /// Re-expands `Σ a·F(ρ)(b_k) + remainder`.
    pub fn expand(&self, basis: &[FreeElement]) -> Result<FreeElement> {
        let mut out = self.remainder.clone();
        for q in &self.quotients {
            out = out.try_add(&basis[q.generator].map(&q.rho)?.mul_poly(&q.coeff))?;
        }
        Ok(out)
    }
}

/// An S-pair `m_{i,j} F(σ)(b_i) − m_{j,i} F(τ)(b_j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SPair {
    pub m_ij: Polynomial,
    pub m_ji: Polynomial,
    pub value: FreeElement,
}

/// A processed pair together with the division of its S-pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairRecord {
    pub i: usize,
    pub j: usize,
    pub width: usize,
    pub sigma: OiMap,
    pub tau: OiMap,
    pub m_ij: Polynomial,
    pub m_ji: Polynomial,
    pub division: DivisionRecord,
    /// Index of the generator adjoined from the nonzero remainder.
    pub adjoined: Option<usize>,
}

/// Full trace of a completion: the final basis and every processed pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerLog {
    /// Number `s` of input generators.
    pub initial: usize,
    pub basis: Vec<FreeElement>,
    pub pairs: Vec<PairRecord>,
}

impl GroebnerLog {
    pub fn adjoined_count(&self) -> usize {
        self.basis.len() - self.initial
    }

    /// Pair records whose remainder became generator `index`, in order.
    pub fn origin(&self, index: usize) -> Option<&PairRecord> {
        self.pairs.iter().find(|p| p.adjoined == Some(index))
    }
}

/// Outcome of the Buchberger criterion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroebnerCheck {
    Groebner,
    Witness {
        i: usize,
        j: usize,
        sigma: OiMap,
        tau: OiMap,
        remainder: FreeElement,
    },
}

impl GroebnerCheck {
    pub fn is_groebner(&self) -> bool {
        matches!(self, GroebnerCheck::Groebner)
    }
}

/// Lead data and cached enumerations shared by division and pair search.
struct Reducer<'a> {
    order: &'a ModuleOrder,
    basis: Vec<FreeElement>,
    leads: Vec<(ModuleMonomial, FieldElement)>,
    oi_cache: HashMap<(usize, usize), Vec<OiMap>>,
}

impl<'a> Reducer<'a> {
    fn new(order: &'a ModuleOrder) -> Self {
        Reducer {
            order,
            basis: Vec::new(),
            leads: Vec::new(),
            oi_cache: HashMap::new(),
        }
    }

    fn push(&mut self, b: FreeElement) -> Result<()> {
        let lead = b.lead(self.order)?;
        self.basis.push(b);
        self.leads.push(lead);
        Ok(())
    }

    fn oi_maps(&mut self, m: usize, n: usize) -> &[OiMap] {
        self.oi_cache.entry((m, n)).or_insert_with(|| enumerate_oi(m, n))
    }

    /// Lowest generator index, then lexicographically smallest `ρ`, whose
    /// shifted lead monomial divides `t`. Returns `(k, ρ, t / ρ(lead))`.
    fn find_divisor(&mut self, t: &ModuleMonomial, n: usize) -> Option<(usize, OiMap, Monomial)> {
        for k in 0..self.basis.len() {
            let w = self.basis[k].width();
            let (lead_k, _) = &self.leads[k];
            if lead_k.summand != t.summand || lead_k.mono.degree() > t.mono.degree() || w > n {
                continue;
            }
            let lead_k = lead_k.clone();
            for rho in self.oi_maps(w, n).to_vec() {
                if lead_k.pi.iter().zip(&t.pi).any(|(&p, &q)| rho.images()[p - 1] != q) {
                    continue;
                }
                let shifted = lead_k.mono.map_columns(&rho).expect("lead width within generator width");
                if let Some(q) = shifted.quotient_of(&t.mono) {
                    return Some((k, rho, q));
                }
            }
        }
        None
    }

    fn divide(&mut self, f: &FreeElement) -> Result<DivisionRecord> {
        let n = f.width();
        let field = f.field();
        let mut work: BTreeMap<OrderKey, (ModuleMonomial, FieldElement)> = f
            .terms()
            .map(|(m, c)| (self.order.key(n, m), (m.clone(), c.clone())))
            .collect();
        let mut quotients: BTreeMap<(usize, Vec<usize>), Polynomial> = BTreeMap::new();
        let mut remainder = FreeElement::zero(field, n);
        while let Some((key, (m, c))) = work.last_key_value().map(|(k, v)| (k.clone(), v.clone())) {
            match self.find_divisor(&m, n) {
                None => {
                    work.remove(&key);
                    remainder.add_term(c, m);
                }
                Some((k, rho, q)) => {
                    let factor = c.div(&self.leads[k].1);
                    quotients
                        .entry((k, rho.images().to_vec()))
                        .or_insert_with(|| Polynomial::zero(field))
                        .add_term(factor.clone(), q.clone());
                    let minus = -&factor;
                    let shifted = self.basis[k].map(&rho)?;
                    for (bm, bc) in shifted.terms() {
                        let mm = bm.mul(&q);
                        let d = bc * &minus;
                        let kk = self.order.key(n, &mm);
                        match work.get_mut(&kk) {
                            Some(slot) => {
                                let s = &slot.1 + &d;
                                if s.is_zero() {
                                    work.remove(&kk);
                                } else {
                                    slot.1 = s;
                                }
                            }
                            None => {
                                work.insert(kk, (mm, d));
                            }
                        }
                    }
                    if work.contains_key(&key) {
                        return Err(Error::Internal(format!(
                            "division step did not cancel the lead term {m}; the module order is not compatible with OI maps"
                        )));
                    }
                }
            }
        }
        let quotients = quotients
            .into_iter()
            .map(|((k, rho), coeff)| Quotient {
                coeff,
                generator: k,
                rho: OiMap::from_parts_unchecked(n, rho),
            })
            .collect();
        Ok(DivisionRecord { quotients, remainder })
    }

    fn s_pair(&self, i: usize, j: usize, sigma: &OiMap, tau: &OiMap) -> Result<Option<SPair>> {
        s_pair_with_leads(
            (&self.basis[i], &self.leads[i]),
            (&self.basis[j], &self.leads[j]),
            sigma,
            tau,
        )
    }

    /// Candidate pairs `(i, j)` over joint extensions whose shifted leads
    /// land on a common basis element. For `i = j` only `σ < τ` is kept.
    fn pairs_for(&self, i: usize, j: usize) -> Vec<PairKey> {
        let (li, _) = &self.leads[i];
        let (lj, _) = &self.leads[j];
        if li.summand != lj.summand {
            return Vec::new();
        }
        let (wi, wj) = (self.basis[i].width(), self.basis[j].width());
        joint_extensions(wi, wj)
            .into_iter()
            .filter(|e| i != j || e.sigma < e.tau)
            .filter(|e| {
                li.pi.iter().map(|&p| e.sigma.images()[p - 1]).eq(lj.pi.iter().map(|&p| e.tau.images()[p - 1]))
            })
            .map(|e| PairKey {
                width: e.width,
                i,
                j,
                sigma: e.sigma.images().to_vec(),
                tau: e.tau.images().to_vec(),
            })
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct PairKey {
    width: usize,
    i: usize,
    j: usize,
    sigma: Vec<usize>,
    tau: Vec<usize>,
}

fn s_pair_with_leads(
    (bi, (li, ci)): (&FreeElement, &(ModuleMonomial, FieldElement)),
    (bj, (lj, cj)): (&FreeElement, &(ModuleMonomial, FieldElement)),
    sigma: &OiMap,
    tau: &OiMap,
) -> Result<Option<SPair>> {
    let a = li.map(sigma)?;
    let b = lj.map(tau)?;
    if !a.same_basis(&b) {
        return Ok(None);
    }
    let field = bi.field();
    let l = a.mono.lcm(&b.mono);
    let m_ij = Polynomial::term(ci.inverse().unwrap(), a.mono.quotient_of(&l).unwrap());
    let m_ji = Polynomial::term(cj.inverse().unwrap(), b.mono.quotient_of(&l).unwrap());
    let value = bi.map(sigma)?.mul_poly(&m_ij).try_sub(&bj.map(tau)?.mul_poly(&m_ji))?;
    debug_assert_eq!(value.field(), field);
    Ok(Some(SPair { m_ij, m_ji, value }))
}

/// Divides `f` by the OI-submodule generators `basis`.
///
/// Terms are treated from the largest down; each is cancelled by the first
/// generator (lowest index, then lexicographically smallest `ρ`) whose
/// shifted lead term divides it, or moved to the remainder.
pub fn divide(f: &FreeElement, basis: &[FreeElement], order: &ModuleOrder) -> Result<DivisionRecord> {
    let mut r = Reducer::new(order);
    for b in basis {
        if b.field() != f.field() {
            return Err(Error::FieldMismatch(f.field(), b.field()));
        }
        r.push(b.clone())?;
    }
    r.divide(f)
}

/// The S-pair of `F(σ)(b_i)` and `F(τ)(b_j)`, or `None` when their lead
/// terms sit on different basis elements.
pub fn s_pair(bi: &FreeElement, bj: &FreeElement, sigma: &OiMap, tau: &OiMap, order: &ModuleOrder) -> Result<Option<SPair>> {
    if sigma.source() != bi.width() || tau.source() != bj.width() || sigma.target() != tau.target() {
        return Err(Error::Width("σ, τ do not form a pair of maps out of the generator widths".into()));
    }
    let li = bi.lead(order)?;
    let lj = bj.lead(order)?;
    s_pair_with_leads((bi, &li), (bj, &lj), sigma, tau)
}

/// OI-Buchberger criterion: every S-pair over every joint extension must
/// reduce to zero.
pub fn is_groebner(basis: &[FreeElement], order: &ModuleOrder) -> Result<GroebnerCheck> {
    let mut r = Reducer::new(order);
    for b in basis {
        r.push(b.clone())?;
    }
    for j in 0..basis.len() {
        for i in 0..=j {
            for key in r.pairs_for(i, j) {
                let sigma = OiMap::from_parts_unchecked(key.width, key.sigma);
                let tau = OiMap::from_parts_unchecked(key.width, key.tau);
                if let Some(sp) = r.s_pair(i, j, &sigma, &tau)? {
                    let d = r.divide(&sp.value)?;
                    if !d.remainder.is_zero() {
                        return Ok(GroebnerCheck::Witness {
                            i,
                            j,
                            sigma,
                            tau,
                            remainder: d.remainder,
                        });
                    }
                }
            }
        }
    }
    Ok(GroebnerCheck::Groebner)
}

/// Completes `gens` to a Gröbner basis, logging every processed pair.
///
/// Pairs are processed in increasing `(m, i, j, σ, τ)` order. A nonzero
/// remainder is adjoined as is (not rescaled), so that it carries
/// coefficient one in its special-form relation.
pub fn buchberger(gens: &[FreeElement], order: &ModuleOrder, settings: &GroebnerSettings) -> Result<GroebnerLog> {
    let mut r = Reducer::new(order);
    let mut queue = BTreeSet::new();
    for (j, b) in gens.iter().enumerate() {
        if let Some(first) = gens.first() {
            if b.field() != first.field() {
                return Err(Error::FieldMismatch(first.field(), b.field()));
            }
        }
        r.push(b.clone())?;
        for i in 0..=j {
            queue.extend(r.pairs_for(i, j));
        }
    }
    let mut pairs = Vec::new();
    while let Some(key) = queue.pop_first() {
        let sigma = OiMap::from_parts_unchecked(key.width, key.sigma);
        let tau = OiMap::from_parts_unchecked(key.width, key.tau);
        let Some(sp) = r.s_pair(key.i, key.j, &sigma, &tau)? else {
            continue;
        };
        let division = r.divide(&sp.value)?;
        let adjoined = if division.remainder.is_zero() {
            None
        } else {
            if r.basis.len() - gens.len() >= settings.max_adjoined {
                return Err(Error::ResourceCap(format!(
                    "Buchberger adjoined more than {} generators",
                    settings.max_adjoined
                )));
            }
            let j = r.basis.len();
            r.push(division.remainder.clone())?;
            for i in 0..=j {
                queue.extend(r.pairs_for(i, j));
            }
            log::debug!("adjoined generator {} of width {}", j + 1, key.width);
            Some(j)
        };
        pairs.push(PairRecord {
            i: key.i,
            j: key.j,
            width: key.width,
            sigma,
            tau,
            m_ij: sp.m_ij,
            m_ji: sp.m_ji,
            division,
            adjoined,
        });
    }
    Ok(GroebnerLog {
        initial: gens.len(),
        basis: r.basis,
        pairs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;

    const Q: Field = Field::Rational;

    fn x(col: usize) -> Polynomial {
        Polynomial::var(Q, 1, col)
    }

    fn elem(p: &Polynomial, width: usize) -> FreeElement {
        FreeElement::from_polynomial(p, width)
    }

    fn pot() -> ModuleOrder {
        ModuleOrder::pot(1)
    }

    #[test]
    fn monomial_division_with_shift() {
        let b = elem(&(&x(1) * &x(1)), 1);
        let f = elem(&(&(&x(2) * &x(2)) * &(&x(1) * &x(1))), 2);
        let d = divide(&f, std::slice::from_ref(&b), &pot()).unwrap();
        assert!(d.remainder.is_zero());
        assert_eq!(d.quotients.len(), 1);
        assert_eq!(d.quotients[0].rho.images(), &[1]);
        assert_eq!(d.quotients[0].coeff, &x(2) * &x(2));
        assert_eq!(d.expand(&[b]).unwrap(), f);
    }

    #[test]
    fn constant_remainder() {
        let b = elem(&x(1), 1);
        let f = elem(&(&x(1) + &Polynomial::one(Q)), 1);
        let d = divide(&f, &[b], &pot()).unwrap();
        assert_eq!(d.remainder, elem(&Polynomial::one(Q), 1));
        let again = divide(&d.remainder, &[elem(&x(1), 1)], &pot()).unwrap();
        assert_eq!(again.remainder, d.remainder);
    }

    #[test]
    fn koszul_s_pair_vanishes() {
        let b = elem(&(&x(1) * &x(1)), 1);
        let sigma = OiMap::new(2, vec![1]).unwrap();
        let tau = OiMap::new(2, vec![2]).unwrap();
        let sp = s_pair(&b, &b, &sigma, &tau, &pot()).unwrap().unwrap();
        assert!(sp.value.is_zero());
        assert_eq!(sp.m_ij, &x(2) * &x(2));
    }

    #[test]
    fn distinct_summands_give_no_pair() {
        let a = FreeElement::basis(Q, 1, 0, vec![1]);
        let b = FreeElement::basis(Q, 1, 1, vec![1]);
        let id = OiMap::identity(1);
        assert!(s_pair(&a, &b, &id, &id, &pot()).unwrap().is_none());
    }

    #[test]
    fn criterion_and_completion() {
        assert!(is_groebner(&[elem(&(&x(1) * &x(1)), 1)], &pot()).unwrap().is_groebner());
        let c2 = &Polynomial::var(Q, 1, 1) * &Polynomial::var(Q, 2, 1);
        assert!(is_groebner(&[elem(&c2, 1)], &ModuleOrder::pot(2)).unwrap().is_groebner());

        // the shifts of x_{1,1} already cover every lead term
        let covered = [elem(&(&x(1) + &x(2)), 2), elem(&x(1), 1)];
        assert!(is_groebner(&covered, &pot()).unwrap().is_groebner());

        // σ = (1,2), τ = (2,3) leaves −2·x_{1,1}², which no shift of x_{1,2} divides
        let gens = [elem(&(&x(1) + &x(2)), 2)];
        match is_groebner(&gens, &pot()).unwrap() {
            GroebnerCheck::Witness { sigma, tau, remainder, .. } => {
                assert_eq!(sigma.images(), &[1, 2]);
                assert_eq!(tau.images(), &[2, 3]);
                assert_eq!(remainder, elem(&(&x(1) * &x(1)).scale(&Q.from_i64(-2)), 3));
            }
            GroebnerCheck::Groebner => panic!("expected a witness"),
        }
        let log = buchberger(&gens, &pot(), &GroebnerSettings::default()).unwrap();
        assert!(log.adjoined_count() >= 1);
        assert!(is_groebner(&log.basis, &pot()).unwrap().is_groebner());
        for p in &log.pairs {
            let sp = s_pair(&log.basis[p.i], &log.basis[p.j], &p.sigma, &p.tau, &pot()).unwrap().unwrap();
            assert_eq!(p.division.expand(&log.basis).unwrap(), sp.value);
            if let Some(v) = p.adjoined {
                assert_eq!(log.basis[v], p.division.remainder);
            }
        }
    }

    #[test]
    fn single_monomial_is_already_complete() {
        let log = buchberger(&[elem(&(&x(1) * &x(1)), 1)], &pot(), &GroebnerSettings::default()).unwrap();
        assert_eq!(log.basis.len(), 1);
        assert!(log.pairs.iter().all(|p| p.adjoined.is_none()));
    }

    #[test]
    fn cap_is_enforced() {
        let gens = [elem(&(&x(1) + &x(2)), 2)];
        let settings = GroebnerSettings { max_adjoined: 0 };
        assert!(matches!(buchberger(&gens, &pot(), &settings), Err(Error::ResourceCap(_))));
    }
}
