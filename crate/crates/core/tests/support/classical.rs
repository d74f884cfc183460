//! Classical Buchberger for submodules of `P_n^r`, one width at a time.
//!
//! Vectors are sparse maps from `(component, monomial)` to coefficients.
//! The order is position-over-term: a smaller component is larger, then
//! graded-lex on monomials. Kernels come from the elimination trick on
//! `(φ(e_j), e_j) ∈ F_n ⊕ G_n`.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};

use equires::free::{BasisLabel, FreeElement};
use equires::{Field, FieldElement, Monomial};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Key {
    pub comp: usize,
    pub mono: Monomial,
}

impl Ord for Key {
    fn cmp(&self, other: &Self) -> Ordering {
        other.comp.cmp(&self.comp).then_with(|| self.mono.grlex_cmp(&other.mono))
    }
}

impl PartialOrd for Key {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub type Vector = BTreeMap<Key, FieldElement>;

fn lead(v: &Vector) -> (&Key, &FieldElement) {
    v.iter().next_back().expect("nonzero vector")
}

/// `v += c·m·w`.
fn add_multiple(v: &mut Vector, c: &FieldElement, m: &Monomial, w: &Vector) {
    for (k, a) in w {
        let key = Key {
            comp: k.comp,
            mono: k.mono.mul(m),
        };
        let t = c * a;
        match v.get(&key) {
            Some(b) => {
                let s = b + &t;
                if s.is_zero() {
                    v.remove(&key);
                } else {
                    v.insert(key, s);
                }
            }
            None => {
                v.insert(key, t);
            }
        }
    }
}

/// Full reduction of `f` modulo `basis`.
pub fn reduce(f: &Vector, basis: &[Vector]) -> Vector {
    let mut rest = f.clone();
    let mut rem = Vector::new();
    while let Some((k, c)) = rest.iter().next_back().map(|(k, c)| (k.clone(), c.clone())) {
        let divisor = basis.iter().find_map(|g| {
            let (lk, lc) = lead(g);
            (lk.comp == k.comp && lk.mono.divides(&k.mono)).then(|| (g, lk.mono.quotient_of(&k.mono).unwrap(), lc))
        });
        match divisor {
            Some((g, q, lc)) => {
                let factor = -c.div(lc);
                add_multiple(&mut rest, &factor, &q, g);
            }
            None => {
                rest.remove(&k);
                rem.insert(k, c);
            }
        }
    }
    rem
}

fn monic(v: Vector) -> Vector {
    let inv = lead(&v).1.inverse().unwrap();
    v.into_iter().map(|(k, c)| (k, &c * &inv)).collect()
}

/// Gröbner basis of the submodule generated by `gens`. Pairs are taken
/// smallest lcm first; a pair is skipped by the chain criterion when some
/// third lead divides its lcm and both other pairs are already treated.
pub fn groebner(gens: &[Vector]) -> Vec<Vector> {
    let mut basis: Vec<Vector> = Vec::new();
    for g in gens {
        let r = reduce(g, &basis);
        if !r.is_empty() {
            basis.push(monic(r));
        }
    }
    let mut pending: BTreeSet<(u32, Key, usize, usize)> = BTreeSet::new();
    let pair_key = |basis: &[Vector], i: usize, j: usize| {
        let (ki, kj) = (lead(&basis[i]).0, lead(&basis[j]).0);
        (ki.comp == kj.comp).then(|| {
            let l = ki.mono.lcm(&kj.mono);
            (l.degree(), Key { comp: ki.comp, mono: l }, i, j)
        })
    };
    for j in 0..basis.len() {
        for i in 0..j {
            pending.extend(pair_key(&basis, i, j));
        }
    }
    let is_pending = |pending: &BTreeSet<(u32, Key, usize, usize)>, basis: &[Vector], a: usize, b: usize| {
        let (i, j) = (a.min(b), a.max(b));
        pair_key(basis, i, j).is_some_and(|k| pending.contains(&k))
    };
    while let Some(entry) = pending.pop_first() {
        let (_, lk, i, j) = entry;
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && lead(&basis[k]).0.comp == lk.comp
                && lead(&basis[k]).0.mono.divides(&lk.mono)
                && !is_pending(&pending, &basis, i, k)
                && !is_pending(&pending, &basis, j, k)
        });
        if chain {
            continue;
        }
        let (ki, ci) = lead(&basis[i]);
        let (kj, cj) = lead(&basis[j]);
        let mut s = Vector::new();
        add_multiple(&mut s, &ci.inverse().unwrap(), &ki.mono.quotient_of(&lk.mono).unwrap(), &basis[i]);
        add_multiple(&mut s, &(-cj.inverse().unwrap()), &kj.mono.quotient_of(&lk.mono).unwrap(), &basis[j]);
        let r = reduce(&s, &basis);
        if !r.is_empty() {
            basis.push(monic(r));
            let new = basis.len() - 1;
            for i in 0..new {
                pending.extend(pair_key(&basis, i, new));
            }
        }
    }
    basis
}

/// Coordinates of a width-`n` free element over an enumerated basis.
pub fn coordinates(x: &FreeElement, labels: &[BasisLabel], offset: usize) -> Vector {
    let mut v = Vector::new();
    for (b, p) in x.grouped() {
        let comp = offset + labels.iter().position(|l| *l == b).expect("label in basis");
        for (m, c) in p.terms() {
            v.insert(Key { comp, mono: m.clone() }, c.clone());
        }
    }
    v
}

/// Generators of `ker(G_n → F_n)` where `columns[j]` is the image of the
/// `j`-th basis vector of `G_n` in `F_n` coordinates (`f_rank` components).
/// The result is a Gröbner basis of the kernel in `G_n` coordinates.
pub fn kernel(field: Field, columns: &[Vector], f_rank: usize) -> Vec<Vector> {
    let gens: Vec<Vector> = columns
        .iter()
        .enumerate()
        .map(|(j, col)| {
            let mut v = col.clone();
            v.insert(
                Key {
                    comp: f_rank + j,
                    mono: Monomial::one(),
                },
                field.one(),
            );
            v
        })
        .collect();
    groebner(&gens)
        .into_iter()
        .filter(|g| lead(g).0.comp >= f_rank)
        .map(|g| {
            g.into_iter()
                .map(|(k, c)| {
                    (
                        Key {
                            comp: k.comp - f_rank,
                            mono: k.mono,
                        },
                        c,
                    )
                })
                .collect()
        })
        .collect()
}

/// True when every vector of `xs` lies in the module with Gröbner basis `gb`.
pub fn all_reduce_to_zero(xs: &[Vector], gb: &[Vector]) -> bool {
    xs.iter().all(|x| reduce(x, gb).is_empty())
}
