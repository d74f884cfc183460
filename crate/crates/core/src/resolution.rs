//! Truncated free resolutions of OI-, FI-, Inc- and Sym-modules.
//!
//! A resolution is stored as the list of free presentations
//! `F^0, F^1, …, F^p` together with, for `k ≥ 1`, the images in `F^{k-1}`
//! of the basis elements `ε_{id,i}` of `F^k`. `F^0` is the ambient module of
//! the input generators.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::free::{
    apply_morphism, restrict_fi_to_oi, BasisDictionary, Category, FreeElement, FreeElementDoc, FreePresentation,
    ModuleMonomial, ModuleOrder, Summand,
};
use crate::groebner::GroebnerSettings;
use crate::linalg::{Echelon, SparseVec};
use crate::maps::{enumerate_fi, enumerate_oi, FiMap, Injection, OiMap};
use crate::poly::{monomials_of_degree, Polynomial};
use crate::syzygy::kernel_of_free_map;

/// Category of a resolution. Inc and Sym resolutions are computed through
/// OI and FI lifts respectively.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ResolutionCategory {
    Oi,
    Fi,
    Inc,
    Sym,
}

impl ResolutionCategory {
    /// The category of the free modules that carry the computation.
    pub fn base(self) -> Category {
        match self {
            ResolutionCategory::Oi | ResolutionCategory::Inc => Category::Oi,
            ResolutionCategory::Fi | ResolutionCategory::Sym => Category::Fi,
        }
    }
}

impl fmt::Display for ResolutionCategory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ResolutionCategory::Oi => "OI",
            ResolutionCategory::Fi => "FI",
            ResolutionCategory::Inc => "Inc",
            ResolutionCategory::Sym => "Sym",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResolutionStep {
    pub presentation: FreePresentation,
    /// Images of the basis elements of this step in the previous one;
    /// empty for step 0.
    pub differential: Vec<FreeElement>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Resolution {
    pub category: ResolutionCategory,
    pub field: Field,
    pub graded: bool,
    pub steps: Vec<ResolutionStep>,
}

/// One row `(d, shift, count)` of a summand table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SummandGroup {
    pub d: usize,
    pub shift: i64,
    pub count: usize,
}

impl Resolution {
    /// Number of computed steps `F^1, …, F^p`.
    pub fn len(&self) -> usize {
        self.steps.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn ambient(&self) -> &FreePresentation {
        &self.steps[0].presentation
    }

    /// Run-length summary of the summands of `F^k` as `(d, shift, count)`.
    pub fn summand_table(&self, k: usize) -> Vec<SummandGroup> {
        summand_table(&self.steps[k].presentation)
    }

    /// `(d, shift, count)` tables of `F^1, …, F^p`.
    pub fn summand_tables(&self) -> Vec<Vec<SummandGroup>> {
        (1..self.steps.len()).map(|k| self.summand_table(k)).collect()
    }

    /// Checks that every basis image of `F^k` maps to zero in `F^{k-2}`
    /// and, in graded mode, that every differential preserves degree.
    pub fn verify(&self) -> Result<()> {
        for k in 1..self.steps.len() {
            let step = &self.steps[k];
            let prev = &self.steps[k - 1].presentation;
            for (i, b) in step.differential.iter().enumerate() {
                prev.validate(b)?;
                if self.graded {
                    if let Some((d, homog)) = b.degree(prev) {
                        if !homog || d != step.presentation.summands[i].degree {
                            return Err(Error::Internal(format!(
                                "differential {k}: image of generator {} is not homogeneous of degree {}",
                                i + 1,
                                step.presentation.summands[i].degree
                            )));
                        }
                    }
                }
                if k >= 2 && !apply_morphism(b, &self.steps[k - 1].differential, self.field)?.is_zero() {
                    return Err(Error::Internal(format!(
                        "composition of differentials {k} and {} is nonzero on generator {}",
                        k - 1,
                        i + 1
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn to_doc(&self) -> ResolutionDoc {
        ResolutionDoc {
            category: self.category,
            graded: self.graded,
            steps: self
                .steps
                .iter()
                .map(|s| StepDoc {
                    summands: summand_table(&s.presentation),
                    differential: s.differential.iter().map(FreeElement::to_doc).collect(),
                })
                .collect(),
        }
    }

    pub fn from_doc(doc: &ResolutionDoc, field: Field, rows: usize) -> Result<Resolution> {
        let category = doc.category.base();
        let mut steps: Vec<ResolutionStep> = Vec::with_capacity(doc.steps.len());
        for (k, s) in doc.steps.iter().enumerate() {
            let mut summands = Vec::new();
            for g in &s.summands {
                summands.extend(std::iter::repeat_n(Summand::new(g.d, -g.shift), g.count));
            }
            let presentation = FreePresentation::new(category, rows, summands);
            let mut differential = Vec::with_capacity(s.differential.len());
            if k == 0 && !s.differential.is_empty() {
                return Err(Error::schema("steps[0].differential", "step 0 has no differential"));
            }
            if k > 0 {
                if s.differential.len() != presentation.rank() {
                    return Err(Error::schema(
                        format!("steps[{k}].differential"),
                        format!("{} images for {} summands", s.differential.len(), presentation.rank()),
                    ));
                }
                for (i, d) in s.differential.iter().enumerate() {
                    let w = presentation.summands[i].arity;
                    if d.width.is_some_and(|dw| dw != w) {
                        return Err(Error::schema(
                            format!("steps[{k}].differential[{i}].width"),
                            format!("image width must equal the arity {w}"),
                        ));
                    }
                    differential.push(FreeElement::from_doc(field, &steps[k - 1].presentation, d, Some(w))?);
                }
            }
            steps.push(ResolutionStep {
                presentation,
                differential,
            });
        }
        if steps.is_empty() {
            return Err(Error::schema("steps", "a resolution has at least the ambient step"));
        }
        Ok(Resolution {
            category: doc.category,
            field,
            graded: doc.graded,
            steps,
        })
    }
}

fn summand_table(p: &FreePresentation) -> Vec<SummandGroup> {
    let mut out: Vec<SummandGroup> = Vec::new();
    for s in &p.summands {
        match out.last_mut() {
            Some(g) if g.d == s.arity && g.shift == s.shift() => g.count += 1,
            _ => out.push(SummandGroup {
                d: s.arity,
                shift: s.shift(),
                count: 1,
            }),
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepDoc {
    pub summands: Vec<SummandGroup>,
    pub differential: Vec<FreeElementDoc>,
}

/// `{"category", "graded", "steps": [{"summands": [{"d", "shift", "count"}], "differential": [...]}]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResolutionDoc {
    pub category: ResolutionCategory,
    pub graded: bool,
    pub steps: Vec<StepDoc>,
}

/// Knobs for the resolution drivers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ResolveOptions {
    pub groebner: GroebnerSettings,
    /// In graded mode, replace each kernel generating set by a minimal
    /// subset before forming the next step.
    pub minimal_generators: bool,
    /// Split off unit-coefficient summand pairs after resolving.
    pub prune: bool,
}

impl Default for ResolveOptions {
    fn default() -> Self {
        ResolveOptions {
            groebner: GroebnerSettings::default(),
            minimal_generators: true,
            prune: false,
        }
    }
}

/// Shifts `-t_i` making `ε_{id,i} ↦ b_i` degree-preserving, where `t_i` is
/// the degree of `b_i` in `ambient`.
pub fn assign_graded_shifts(ambient: &FreePresentation, gens: &[FreeElement]) -> Result<Vec<i64>> {
    gens.iter()
        .enumerate()
        .map(|(i, b)| match b.degree(ambient) {
            Some((d, true)) => Ok(-d),
            Some((_, false)) => Err(Error::Grading(format!("generator {} is not homogeneous", i + 1))),
            None => Err(Error::Grading(format!("generator {} is zero", i + 1))),
        })
        .collect()
}

fn drop_zero_generators(gens: &[FreeElement]) -> Vec<FreeElement> {
    gens.iter()
        .enumerate()
        .filter_map(|(i, b)| {
            if b.is_zero() {
                log::warn!("input generator {} is zero and is dropped", i + 1);
                None
            } else {
                Some(b.clone())
            }
        })
        .collect()
}

fn check_inputs(ambient: &FreePresentation, gens: &[FreeElement], field: Field) -> Result<()> {
    for b in gens {
        if b.field() != field {
            return Err(Error::FieldMismatch(field, b.field()));
        }
        ambient.validate(b)?;
    }
    Ok(())
}

/// First step `F^1`: one summand of arity `w(b_i)` per generator, shifted
/// by `-deg b_i` in graded mode.
fn first_step(ambient: &FreePresentation, gens: Vec<FreeElement>) -> (ResolutionStep, bool) {
    let shifts = assign_graded_shifts(ambient, &gens);
    let graded = shifts.is_ok();
    let summands = gens
        .iter()
        .enumerate()
        .map(|(i, b)| Summand::new(b.width(), shifts.as_ref().map_or(0, |s| -s[i])))
        .collect();
    (
        ResolutionStep {
            presentation: FreePresentation::new(ambient.category, ambient.rows, summands),
            differential: gens,
        },
        graded,
    )
}

/// Summands and images of the next step built from kernel generators.
fn next_step(pres: &FreePresentation, kernel: Vec<FreeElement>, graded: bool) -> ResolutionStep {
    let summands = kernel
        .iter()
        .map(|x| {
            let deg = if graded { x.degree(pres).map_or(0, |(d, _)| d) } else { 0 };
            Summand::new(x.width(), deg)
        })
        .collect();
    ResolutionStep {
        presentation: FreePresentation::new(pres.category, pres.rows, summands),
        differential: kernel,
    }
}

/// Sparse coordinates of an element, keyed by module monomial.
fn coords(x: &FreeElement) -> SparseVec<ModuleMonomial> {
    x.terms().map(|(m, c)| (m.clone(), c.clone())).collect()
}

/// Inserts `μ·F(ρ)(a)` for all shifts `ρ` into width `w` and all
/// monomials `μ` of degree `deg`.
fn insert_shifts(span: &mut Echelon<ModuleMonomial>, pres: &FreePresentation, a: &FreeElement, w: usize, deg: u32) -> Result<()> {
    let shifts: Vec<Box<dyn Injection>> = match pres.category {
        Category::Oi => enumerate_oi(a.width(), w).into_iter().map(|m| Box::new(m) as Box<dyn Injection>).collect(),
        Category::Fi => enumerate_fi(a.width(), w).into_iter().map(|m| Box::new(m) as Box<dyn Injection>).collect(),
    };
    let monos = monomials_of_degree(pres.rows, w, deg);
    for rho in &shifts {
        let shifted = a.map(rho.as_ref())?;
        for mu in &monos {
            let mut v = SparseVec::new();
            for (m, c) in shifted.terms() {
                v.insert(m.mul(mu), c.clone());
            }
            span.insert(v);
        }
    }
    Ok(())
}

/// Greedy minimal generating subset of a homogeneous generating set of a
/// graded submodule of a free OI- or FI-module.
///
/// Candidates are visited by increasing `(degree, width)`; a candidate is
/// dropped when it lies in the degree slice, at its own width, of the
/// submodule generated by the candidates kept so far. Shifts range over
/// `Hom_OI` or `Hom_FI` according to `pres.category`.
pub fn minimal_generators(pres: &FreePresentation, candidates: Vec<FreeElement>) -> Result<Vec<FreeElement>> {
    let mut keyed = Vec::with_capacity(candidates.len());
    for (idx, x) in candidates.into_iter().enumerate() {
        match x.degree(pres) {
            None => continue,
            Some((d, true)) => keyed.push((d, x.width(), idx, x)),
            Some((_, false)) => return Err(Error::Grading("kernel generator is not homogeneous".into())),
        }
    }
    keyed.sort_by_key(|k| (k.0, k.1, k.2));
    let mut kept: Vec<(i64, FreeElement)> = Vec::new();
    let mut rest = keyed.into_iter().peekable();
    while let Some(&(d, w, _, _)) = rest.peek() {
        let Some(field) = kept.first().map(|(_, a)| a.field()).or_else(|| rest.peek().map(|k| k.3.field())) else {
            break;
        };
        // the degree-d, width-w slice of the submodule generated so far
        let mut span = Echelon::new(field);
        for (da, a) in &kept {
            if a.width() <= w && *da <= d {
                insert_shifts(&mut span, pres, a, w, (d - da) as u32)?;
            }
        }
        while let Some((_, _, _, x)) = rest.next_if(|k| k.0 == d && k.1 == w) {
            if !span.contains(&coords(&x)) {
                insert_shifts(&mut span, pres, &x, w, 0)?;
                kept.push((d, x));
            }
        }
    }
    Ok(kept.into_iter().map(|(_, x)| x).collect())
}

/// Truncated free OI-resolution `F^p → ⋯ → F^1 → F^0` of the submodule of
/// the free OI-module `ambient` generated by `gens`.
pub fn resolve_oi(ambient: &FreePresentation, gens: &[FreeElement], p: usize, opts: &ResolveOptions) -> Result<Resolution> {
    if ambient.category != Category::Oi {
        return Err(Error::Category("resolve_oi expects an OI ambient module".into()));
    }
    let field = gens.first().map_or(Field::Rational, FreeElement::field);
    check_inputs(ambient, gens, field)?;
    let (step1, graded) = first_step(ambient, drop_zero_generators(gens));
    let mut steps = vec![
        ResolutionStep {
            presentation: ambient.clone(),
            differential: Vec::new(),
        },
        step1,
    ];
    let mut order = ModuleOrder::pot(ambient.rows);
    while steps.len() <= p {
        let k = steps.len() - 1;
        let images = &steps[k].differential;
        if images.is_empty() {
            break;
        }
        let mut kernel = kernel_of_free_map(images, &order, &opts.groebner)?;
        let pres = &steps[k].presentation;
        if graded && opts.minimal_generators {
            kernel = minimal_generators(pres, kernel)?;
        }
        if kernel.is_empty() {
            break;
        }
        log::info!("OI step {}: {} generators", k + 1, kernel.len());
        let next = next_step(pres, kernel, graded);
        order = ModuleOrder::schreyer(&order, images)?;
        steps.push(next);
    }
    finish(
        Resolution {
            category: ResolutionCategory::Oi,
            field,
            graded,
            steps,
        },
        opts,
    )
}

fn finish(mut res: Resolution, opts: &ResolveOptions) -> Result<Resolution> {
    res.verify()?;
    if opts.prune {
        res = prune(&res)?;
        res.verify()?;
    }
    Ok(res)
}

/// Restricts an FI-map `ε_{id,i} ↦ images[i]` between FI presentations to
/// the OI-map between their restrictions.
fn restrict_images(source: &BasisDictionary, target: &BasisDictionary, images: &[FreeElement]) -> Result<Vec<FreeElement>> {
    let mut out = Vec::new();
    for (i, b) in images.iter().enumerate() {
        for perm in &source.perms[i] {
            out.push(target.to_oi(&b.map(perm)?)?);
        }
    }
    Ok(out)
}

/// Generators of the kernel of a map of free FI-modules `ε_{id,i} ↦ images[i]`
/// from `source` to `target`, computed over the OI restrictions.
pub fn fi_kernel(
    source: &FreePresentation,
    target: &FreePresentation,
    images: &[FreeElement],
    settings: &GroebnerSettings,
) -> Result<Vec<FreeElement>> {
    let (_, sd) = restrict_fi_to_oi(source)?;
    let (_, td) = restrict_fi_to_oi(target)?;
    let oi_images = restrict_images(&sd, &td, images)?;
    let oi_kernel = kernel_of_free_map(&oi_images, &ModuleOrder::pot(target.rows), settings)?;
    oi_kernel.iter().map(|x| sd.to_fi(x)).collect()
}

/// Truncated free FI-resolution: at each step the map is restricted to OI,
/// its kernel computed there and converted back through the basis
/// dictionary.
pub fn resolve_fi(ambient: &FreePresentation, gens: &[FreeElement], p: usize, opts: &ResolveOptions) -> Result<Resolution> {
    if ambient.category != Category::Fi {
        return Err(Error::Category("resolve_fi expects an FI ambient module".into()));
    }
    let field = gens.first().map_or(Field::Rational, FreeElement::field);
    check_inputs(ambient, gens, field)?;
    let (step1, graded) = first_step(ambient, drop_zero_generators(gens));
    let mut steps = vec![
        ResolutionStep {
            presentation: ambient.clone(),
            differential: Vec::new(),
        },
        step1,
    ];
    let (_, mut target_dict) = restrict_fi_to_oi(ambient)?;
    let mut order = ModuleOrder::pot(ambient.rows);
    while steps.len() <= p {
        let k = steps.len() - 1;
        if steps[k].differential.is_empty() {
            break;
        }
        let pres = &steps[k].presentation;
        let (_, source_dict) = restrict_fi_to_oi(pres)?;
        let oi_images = restrict_images(&source_dict, &target_dict, &steps[k].differential)?;
        let oi_kernel = kernel_of_free_map(&oi_images, &order, &opts.groebner)?;
        let mut kernel = oi_kernel.iter().map(|x| source_dict.to_fi(x)).collect::<Result<Vec<_>>>()?;
        kernel = crate::syzygy::dedup_up_to_scalar(kernel);
        if graded && opts.minimal_generators {
            kernel = minimal_generators(pres, kernel)?;
        }
        if kernel.is_empty() {
            break;
        }
        log::info!("FI step {}: {} generators", k + 1, kernel.len());
        let next = next_step(pres, kernel, graded);
        order = ModuleOrder::schreyer(&order, &oi_images)?;
        target_dict = source_dict;
        steps.push(next);
    }
    finish(
        Resolution {
            category: ResolutionCategory::Fi,
            field,
            graded,
            steps,
        },
        opts,
    )
}

/// Splits off pairs (summand `j` of `F^k`, summand `i` of `F^{k-1}`),
/// `k ≥ 2`, whenever the summand-`i` part of the image of `ε_{id,j}` is
/// exactly `a·e_{id,i}` with `a` a nonzero constant. Iterated to a fixpoint.
pub fn prune(res: &Resolution) -> Result<Resolution> {
    let mut res = res.clone();
    'outer: loop {
        for k in 2..res.steps.len() {
            for j in 0..res.steps[k].differential.len() {
                if let Some((i, a)) = unit_part(&res.steps[k - 1].presentation, &res.steps[k].differential[j]) {
                    split_pair(&mut res, k, j, i, a)?;
                    continue 'outer;
                }
            }
        }
        break;
    }
    while res.steps.len() > 1 && res.steps.last().is_some_and(|s| s.presentation.rank() == 0) {
        res.steps.pop();
    }
    Ok(res)
}

fn unit_part(prev: &FreePresentation, b: &FreeElement) -> Option<(usize, crate::field::FieldElement)> {
    for (basis, poly) in b.grouped() {
        let d = prev.summands[basis.summand].arity;
        if d != b.width() || basis.pi != (1..=d).collect::<Vec<_>>() {
            continue;
        }
        let Some(a) = poly.as_constant() else { continue };
        if a.is_zero() {
            continue;
        }
        // no other basis element of the same summand may occur
        if b.terms().all(|(m, _)| m.summand != basis.summand || m.pi == basis.pi) {
            return Some((basis.summand, a));
        }
    }
    None
}

fn split_pair(res: &mut Resolution, k: usize, j: usize, i: usize, a: crate::field::FieldElement) -> Result<()> {
    let field = res.field;
    let category = res.category.base();
    let bj = res.steps[k].differential[j].clone();
    // e_{id,i} ≡ -a^{-1}·(b_j - a·e_{id,i}) modulo the image
    let mut rest = bj.clone();
    let id: Vec<usize> = (1..=bj.width()).collect();
    rest.add_term(-&a, ModuleMonomial::new(i, id, crate::poly::Monomial::one()));
    let r = rest.scale(&-&a.inverse().unwrap());
    let mut new_images = Vec::new();
    for (l, b) in res.steps[k].differential.iter().enumerate() {
        if l == j {
            continue;
        }
        let mut out = FreeElement::zero(field, b.width());
        for (m, c) in b.terms() {
            if m.summand == i {
                let pi: Box<dyn Injection> = match category {
                    Category::Oi => Box::new(OiMap::new(b.width(), m.pi.clone())?),
                    Category::Fi => Box::new(FiMap::new(b.width(), m.pi.clone())?),
                };
                out.add_scaled(c, &m.mono, &r.map(pi.as_ref())?);
            } else {
                out.add_term(c.clone(), m.clone());
            }
        }
        new_images.push(reindex(&out, i));
    }
    res.steps[k].differential = new_images;
    res.steps[k].presentation.summands.remove(j);
    res.steps[k - 1].presentation.summands.remove(i);
    res.steps[k - 1].differential.remove(i);
    if k + 1 < res.steps.len() {
        let images = std::mem::take(&mut res.steps[k + 1].differential);
        res.steps[k + 1].differential = images
            .into_iter()
            .map(|x| {
                let mut y = FreeElement::zero(field, x.width());
                for (m, c) in x.terms().filter(|(m, _)| m.summand != j) {
                    y.add_term(c.clone(), m.clone());
                }
                reindex(&y, j)
            })
            .collect();
    }
    Ok(())
}

/// Shifts summand indices above `removed` down by one.
fn reindex(x: &FreeElement, removed: usize) -> FreeElement {
    let mut y = FreeElement::zero(x.field(), x.width());
    for (m, c) in x.terms() {
        debug_assert_ne!(m.summand, removed);
        let s = if m.summand > removed { m.summand - 1 } else { m.summand };
        y.add_term(c.clone(), ModuleMonomial::new(s, m.pi.clone(), m.mono.clone()));
    }
    y
}

/// An element of a colimit `F^{Inc,d}` or `F^{Sym,d}`: basis morphisms and
/// variable columns range over all of ℕ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColimitElement {
    pub field: Field,
    /// `(coefficient, summand, π)` with `π` a finite word in ℕ.
    pub terms: Vec<(Polynomial, usize, Vec<usize>)>,
}

impl ColimitElement {
    pub fn new(field: Field, terms: Vec<(Polynomial, usize, Vec<usize>)>) -> Self {
        ColimitElement { field, terms }
    }

    pub fn from_polynomial(p: Polynomial) -> Self {
        ColimitElement::new(p.field(), vec![(p, 0, vec![])])
    }

    /// Smallest width whose component contains this element: the maximum of
    /// all variable columns and all basis morphism values (0 for constants).
    pub fn norm(&self) -> usize {
        self.terms
            .iter()
            .filter(|(p, _, _)| !p.is_zero())
            .map(|(p, _, pi)| p.width().max(pi.iter().copied().max().unwrap_or(0)))
            .max()
            .unwrap_or(0)
    }

    /// The unique width-`norm` element representing this class.
    pub fn lift(&self) -> FreeElement {
        FreeElement::from_parts(self.field, self.norm(), self.terms.iter().cloned())
    }
}

/// Lifts colimit generators to an OI (`Inc`) or FI (`Sym`) presentation.
/// Returns the lifted generators and the source presentation of `F^1`
/// (one summand of arity `ν(b_i)` per generator).
pub fn lift_colimit_generators(
    ambient: &FreePresentation,
    gens: &[ColimitElement],
) -> Result<(Vec<FreeElement>, FreePresentation)> {
    let lifted: Vec<FreeElement> = gens.iter().map(ColimitElement::lift).collect();
    for b in &lifted {
        ambient.validate(b)?;
    }
    let shifts = assign_graded_shifts(ambient, &lifted).ok();
    let summands = lifted
        .iter()
        .enumerate()
        .map(|(i, b)| Summand::new(b.width(), shifts.as_ref().map_or(0, |s| -s[i])))
        .collect();
    Ok((lifted, FreePresentation::new(ambient.category, ambient.rows, summands)))
}

/// Free Inc-resolution: lift to OI, resolve, and read basis morphisms as
/// their colimit classes.
pub fn resolve_inc(ambient: &FreePresentation, gens: &[ColimitElement], s: usize, opts: &ResolveOptions) -> Result<Resolution> {
    let (lifted, _) = lift_colimit_generators(ambient, gens)?;
    let mut res = resolve_oi(ambient, &lifted, s, opts)?;
    res.category = ResolutionCategory::Inc;
    Ok(res)
}

/// Free Sym-resolution: lift to FI, resolve, and read basis morphisms as
/// their colimit classes.
pub fn resolve_sym(ambient: &FreePresentation, gens: &[ColimitElement], s: usize, opts: &ResolveOptions) -> Result<Resolution> {
    let (lifted, _) = lift_colimit_generators(ambient, gens)?;
    let mut res = resolve_fi(ambient, &lifted, s, opts)?;
    res.category = ResolutionCategory::Sym;
    Ok(res)
}
