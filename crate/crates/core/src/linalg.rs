//! Sparse exact Gaussian elimination over a [`Field`].
//!
//! Vectors are maps from an ordered key type to nonzero coefficients. An
//! [`Echelon`] keeps rows with pairwise distinct leading keys, which is
//! enough for rank, membership and expressing a vector in the inserted rows.

use std::collections::BTreeMap;

use crate::field::{Field, FieldElement};

pub type SparseVec<K> = BTreeMap<K, FieldElement>;

/// `v += c·w`, dropping cancelled entries.
pub fn axpy<K: Ord + Clone>(v: &mut SparseVec<K>, c: &FieldElement, w: &SparseVec<K>) {
    for (k, a) in w {
        let d = a * c;
        match v.get_mut(k) {
            Some(slot) => {
                let s = &*slot + &d;
                if s.is_zero() {
                    v.remove(k);
                } else {
                    *slot = s;
                }
            }
            None => {
                if !d.is_zero() {
                    v.insert(k.clone(), d);
                }
            }
        }
    }
}

#[derive(Clone, Debug)]
struct Row<K> {
    vec: SparseVec<K>,
    /// `vec = Σ combo[t]·(inserted vector t)`.
    combo: SparseVec<usize>,
}

/// Incremental row echelon form with optional bookkeeping of how each row
/// was formed from the inserted vectors.
#[derive(Clone, Debug)]
pub struct Echelon<K> {
    field: Field,
    rows: Vec<Row<K>>,
    pivots: BTreeMap<K, usize>,
    inserted: usize,
}

impl<K: Ord + Clone> Echelon<K> {
    pub fn new(field: Field) -> Self {
        Echelon {
            field,
            rows: Vec::new(),
            pivots: BTreeMap::new(),
            inserted: 0,
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Number of vectors inserted so far (dependent ones included).
    pub fn inserted(&self) -> usize {
        self.inserted
    }

    fn reduce_tracked(&self, mut v: SparseVec<K>, mut combo: SparseVec<usize>) -> (SparseVec<K>, SparseVec<usize>) {
        let minus_one = -self.field.one();
        while let Some((k, c)) = v.iter().next() {
            let Some(&r) = self.pivots.get(k) else { break };
            let row = &self.rows[r];
            let lead = row.vec.values().next().unwrap();
            let f = &(c * &minus_one) * &lead.inverse().unwrap();
            axpy(&mut v, &f, &row.vec);
            axpy(&mut combo, &f, &row.combo);
        }
        (v, combo)
    }

    /// True if `v` lies in the span of the inserted vectors.
    pub fn contains(&self, v: &SparseVec<K>) -> bool {
        self.reduce_tracked(v.clone(), SparseVec::new()).0.is_empty()
    }

    /// Inserts `v` as vector number `self.inserted()`; returns whether it
    /// raised the rank.
    pub fn insert(&mut self, v: SparseVec<K>) -> bool {
        let tag = self.inserted;
        self.inserted += 1;
        let mut combo = SparseVec::new();
        combo.insert(tag, self.field.one());
        let (v, combo) = self.reduce_tracked(v, combo);
        match v.keys().next() {
            None => false,
            Some(k) => {
                self.pivots.insert(k.clone(), self.rows.len());
                self.rows.push(Row { vec: v, combo });
                true
            }
        }
    }

    /// Coefficients `c` with `v = Σ c[t]·(inserted vector t)`, or `None` if
    /// `v` is outside the span.
    pub fn express(&self, v: &SparseVec<K>) -> Option<SparseVec<usize>> {
        let (rest, combo) = self.reduce_tracked(v.clone(), SparseVec::new());
        if !rest.is_empty() {
            return None;
        }
        let minus_one = -self.field.one();
        let mut out = SparseVec::new();
        axpy(&mut out, &minus_one, &combo);
        Some(out)
    }
}

/// Rank of a family of sparse vectors.
pub fn rank<K: Ord + Clone>(field: Field, vectors: impl IntoIterator<Item = SparseVec<K>>) -> usize {
    let mut e = Echelon::new(field);
    for v in vectors {
        e.insert(v);
    }
    e.rank()
}
