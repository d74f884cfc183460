//! Morphisms of the index categories: order-preserving injections (OI),
//! arbitrary injections (FI), permutations of `[n]`, and finite windows of
//! strictly increasing self-maps of the natural numbers (Inc).
//!
//! All maps use 1-based images, matching the variables `x_{i,j}` with
//! `j ∈ [n]`. Every enumeration is deterministic and lexicographic in the
//! image lists.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Common view on an injection `[source] → [target]`.
pub trait Injection {
    fn target(&self) -> usize;
    fn images(&self) -> &[usize];

    fn source(&self) -> usize {
        self.images().len()
    }

    /// Image of `j ∈ [source]`.
    fn apply(&self, j: usize) -> Option<usize> {
        if j == 0 {
            return None;
        }
        self.images().get(j - 1).copied()
    }

    fn is_order_preserving(&self) -> bool {
        self.images().windows(2).all(|w| w[0] < w[1])
    }
}

fn check_injective(target: usize, images: &[usize]) -> Result<()> {
    let mut seen = vec![false; target + 1];
    for &v in images {
        if v == 0 || v > target {
            return Err(Error::Width(format!(
                "image {v} outside [1, {target}] in {images:?}"
            )));
        }
        if seen[v] {
            return Err(Error::Category(format!("{images:?} is not injective")));
        }
        seen[v] = true;
    }
    Ok(())
}

/// `g ∘ f` on image lists.
fn compose_images(g: &dyn Injection, f: &dyn Injection) -> Result<Vec<usize>> {
    if f.target() != g.source() {
        return Err(Error::Width(format!(
            "cannot compose: target {} of inner map differs from source {} of outer map",
            f.target(),
            g.source()
        )));
    }
    Ok(f.images().iter().map(|&j| g.images()[j - 1]).collect())
}

/// An order-preserving injection `[m] → [n]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OiMap {
    target: usize,
    images: Vec<usize>,
}

impl OiMap {
    pub fn new(target: usize, images: Vec<usize>) -> Result<Self> {
        check_injective(target, &images)?;
        if !images.windows(2).all(|w| w[0] < w[1]) {
            return Err(Error::Category(format!("{images:?} is not strictly increasing")));
        }
        Ok(OiMap { target, images })
    }

    pub fn identity(n: usize) -> Self {
        OiMap {
            target: n,
            images: (1..=n).collect(),
        }
    }

    /// `self ∘ f`.
    pub fn compose(&self, f: &OiMap) -> Result<OiMap> {
        Ok(OiMap {
            target: self.target,
            images: compose_images(self, f)?,
        })
    }

    pub fn to_fi(&self) -> FiMap {
        FiMap {
            target: self.target,
            images: self.images.clone(),
        }
    }

    pub(crate) fn from_parts_unchecked(target: usize, images: Vec<usize>) -> Self {
        debug_assert!(OiMap::new(target, images.clone()).is_ok());
        OiMap { target, images }
    }
}

impl Injection for OiMap {
    fn target(&self) -> usize {
        self.target
    }
    fn images(&self) -> &[usize] {
        &self.images
    }
}

/// An injection `[m] → [n]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FiMap {
    target: usize,
    images: Vec<usize>,
}

impl FiMap {
    pub fn new(target: usize, images: Vec<usize>) -> Result<Self> {
        check_injective(target, &images)?;
        Ok(FiMap { target, images })
    }

    pub fn identity(n: usize) -> Self {
        FiMap {
            target: n,
            images: (1..=n).collect(),
        }
    }

    /// `self ∘ f`.
    pub fn compose(&self, f: &FiMap) -> Result<FiMap> {
        Ok(FiMap {
            target: self.target,
            images: compose_images(self, f)?,
        })
    }

    pub fn to_oi(&self) -> Result<OiMap> {
        OiMap::new(self.target, self.images.clone())
    }

    /// Factor `self = σ ∘ π` with `σ` order-preserving and `π` a permutation
    /// of `[m]`. The factorization is unique.
    pub fn factor(&self) -> (OiMap, SymPerm) {
        let mut sorted = self.images.clone();
        sorted.sort_unstable();
        let perm = self
            .images
            .iter()
            .map(|v| sorted.binary_search(v).unwrap() + 1)
            .collect();
        (
            OiMap {
                target: self.target,
                images: sorted,
            },
            SymPerm { images: perm },
        )
    }
}

impl Injection for FiMap {
    fn target(&self) -> usize {
        self.target
    }
    fn images(&self) -> &[usize] {
        &self.images
    }
}

/// A permutation of `[n]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SymPerm {
    images: Vec<usize>,
}

impl SymPerm {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        check_injective(images.len(), &images)?;
        Ok(SymPerm { images })
    }

    pub fn identity(n: usize) -> Self {
        SymPerm {
            images: (1..=n).collect(),
        }
    }

    /// The transposition `(i i+1)` of `[n]`.
    pub fn adjacent_transposition(n: usize, i: usize) -> Result<Self> {
        if i == 0 || i >= n {
            return Err(Error::Width(format!("no transposition ({i} {}) in Sym({n})", i + 1)));
        }
        let mut images: Vec<usize> = (1..=n).collect();
        images.swap(i - 1, i);
        Ok(SymPerm { images })
    }

    /// The cycle `(1 2 ... n)`.
    pub fn long_cycle(n: usize) -> Self {
        SymPerm {
            images: (1..=n).map(|j| j % n + 1).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn compose(&self, f: &SymPerm) -> Result<SymPerm> {
        Ok(SymPerm {
            images: compose_images(self, f)?,
        })
    }

    pub fn inverse(&self) -> SymPerm {
        let mut inv = vec![0; self.images.len()];
        for (j, &v) in self.images.iter().enumerate() {
            inv[v - 1] = j + 1;
        }
        SymPerm { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(j, &v)| v == j + 1)
    }

    pub fn to_fi(&self) -> FiMap {
        FiMap {
            target: self.images.len(),
            images: self.images.clone(),
        }
    }

    /// All of `Sym(n)` in lexicographic order of permutation words.
    pub fn all(n: usize) -> Vec<SymPerm> {
        enumerate_fi(n, n)
            .into_iter()
            .map(|f| SymPerm { images: f.images })
            .collect()
    }
}

impl Injection for SymPerm {
    fn target(&self) -> usize {
        self.images.len()
    }
    fn images(&self) -> &[usize] {
        &self.images
    }
}

/// The restriction of a strictly increasing map `ℕ → ℕ` to `[w]`.
///
/// Values beyond the window are never guessed; asking for them is an error.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IncWindow {
    images: Vec<usize>,
}

impl IncWindow {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        if images.first() == Some(&0) || !images.windows(2).all(|w| w[0] < w[1]) {
            return Err(Error::Category(format!(
                "{images:?} is not a strictly increasing list of positive integers"
            )));
        }
        Ok(IncWindow { images })
    }

    pub fn identity(w: usize) -> Self {
        IncWindow {
            images: (1..=w).collect(),
        }
    }

    pub fn window(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `j ↦ τ(π(j))` for an order-preserving `π: [d] → ℕ` given by its images.
    pub fn apply_to(&self, pi: &[usize]) -> Result<Vec<usize>> {
        pi.iter()
            .map(|&j| {
                if j == 0 {
                    return Err(Error::Width("index 0 is not in ℕ".into()));
                }
                self.images.get(j - 1).copied().ok_or_else(|| {
                    Error::Width(format!(
                        "value {j} lies outside the Inc window of size {}",
                        self.images.len()
                    ))
                })
            })
            .collect()
    }

    /// Composite of `self` with an OI map into `ℕ`; the target of the result
    /// is the largest value of the window.
    pub fn apply_to_oi_map(&self, pi: &OiMap) -> Result<OiMap> {
        let images = self.apply_to(pi.images())?;
        OiMap::new(self.images.last().copied().unwrap_or(0), images)
    }
}

/// Serialized form `{"source": m, "target": n, "images": [...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MapDoc {
    pub source: usize,
    pub target: usize,
    pub images: Vec<usize>,
}

impl<T: Injection> From<&T> for MapDoc {
    fn from(m: &T) -> Self {
        MapDoc {
            source: m.source(),
            target: m.target(),
            images: m.images().to_vec(),
        }
    }
}

impl MapDoc {
    pub fn to_oi(&self) -> Result<OiMap> {
        self.check_source()?;
        OiMap::new(self.target, self.images.clone())
    }

    pub fn to_fi(&self) -> Result<FiMap> {
        self.check_source()?;
        FiMap::new(self.target, self.images.clone())
    }

    fn check_source(&self) -> Result<()> {
        if self.source != self.images.len() {
            return Err(Error::schema(
                "map.source",
                format!("source {} but {} images", self.source, self.images.len()),
            ));
        }
        Ok(())
    }
}

/// All `C(n, m)` order-preserving injections `[m] → [n]`, lexicographically.
pub fn enumerate_oi(m: usize, n: usize) -> Vec<OiMap> {
    let mut out = Vec::new();
    if m > n {
        return out;
    }
    let mut cur: Vec<usize> = (1..=m).collect();
    loop {
        out.push(OiMap {
            target: n,
            images: cur.clone(),
        });
        // advance to the next combination
        let mut i = m;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] < n - (m - 1 - i) {
                break;
            }
        }
        cur[i] += 1;
        for k in i + 1..m {
            cur[k] = cur[k - 1] + 1;
        }
    }
}

/// All `C(n, m)·m!` injections `[m] → [n]`, lexicographically.
pub fn enumerate_fi(m: usize, n: usize) -> Vec<FiMap> {
    fn rec(m: usize, n: usize, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<FiMap>) {
        if cur.len() == m {
            out.push(FiMap {
                target: n,
                images: cur.clone(),
            });
            return;
        }
        for v in 1..=n {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                rec(m, n, cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    if m <= n {
        rec(m, n, &mut Vec::with_capacity(m), &mut vec![false; n + 1], &mut out);
    }
    out
}

/// A pair `σ: [w1] → [m]`, `τ: [w2] → [m]` with `im σ ∪ im τ = [m]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct JointExtension {
    pub width: usize,
    pub sigma: OiMap,
    pub tau: OiMap,
}

/// Every jointly surjective pair of OI maps out of `[w1]` and `[w2]`,
/// ordered by `(m, σ, τ)`.
pub fn joint_extensions(w1: usize, w2: usize) -> Vec<JointExtension> {
    let mut out = Vec::new();
    for m in w1.max(w2)..=w1 + w2 {
        for sigma in enumerate_oi(w1, m) {
            let mut in_sigma = vec![false; m + 1];
            for &v in sigma.images() {
                in_sigma[v] = true;
            }
            let missing: Vec<usize> = (1..=m).filter(|&v| !in_sigma[v]).collect();
            if missing.len() > w2 {
                continue;
            }
            // τ contains the complement of im σ plus a subset of im σ
            let extra = w2 - missing.len();
            let mut taus: Vec<OiMap> = enumerate_oi(extra, w1)
                .into_iter()
                .map(|pick| {
                    let mut images: Vec<usize> = missing.clone();
                    images.extend(pick.images().iter().map(|&k| sigma.images()[k - 1]));
                    images.sort_unstable();
                    OiMap { target: m, images }
                })
                .collect();
            taus.sort();
            for tau in taus {
                out.push(JointExtension {
                    width: m,
                    sigma: sigma.clone(),
                    tau,
                });
            }
        }
    }
    out
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// `|Hom_OI(m, n)| = C(n, m)`.
pub fn count_oi(m: usize, n: usize) -> usize {
    binomial(n, m)
}

/// `|Hom_FI(m, n)| = C(n, m)·m!`.
pub fn count_fi(m: usize, n: usize) -> usize {
    binomial(n, m) * (1..=m).product::<usize>()
}
