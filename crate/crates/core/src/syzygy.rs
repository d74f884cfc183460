//! Syzygies of OI-Gröbner bases and kernels of maps between free OI-modules.
//!
//! For a map `φ: G → F` with `ε_{id,i} ↦ b_i`, Buchberger completes
//! `b_1, …, b_s` to `b_1, …, b_{s+t}`. Every pair reducing to zero yields a
//! relation over `Ĝ = G ⊕ (new summands)`; every adjoined generator yields a
//! special-form relation with coefficient one on its own basis vector, used
//! to rewrite the relations back over `G`.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::free::{apply_morphism, FreeElement, ModuleMonomial, ModuleOrder};
use crate::groebner::{buchberger, GroebnerLog, GroebnerSettings, PairRecord};
use crate::maps::{Injection, OiMap};
use crate::poly::Monomial;

/// `Σ coeff·ε_{π,i}` in width `width`.
fn relation(field: Field, record: &PairRecord, sign_of_division: i64) -> FreeElement {
    let w = record.width;
    let mut x = FreeElement::zero(field, w);
    let minus = -field.one();
    let s = field.from_i64(sign_of_division);
    for (m, c) in record.m_ij.terms() {
        x.add_term(c * &s, ModuleMonomial::new(record.i, record.sigma.images().to_vec(), m.clone()));
    }
    for (m, c) in record.m_ji.terms() {
        x.add_term(&(c * &s) * &minus, ModuleMonomial::new(record.j, record.tau.images().to_vec(), m.clone()));
    }
    for q in &record.division.quotients {
        for (m, c) in q.coeff.terms() {
            x.add_term(
                &(c * &s) * &minus,
                ModuleMonomial::new(q.generator, q.rho.images().to_vec(), m.clone()),
            );
        }
    }
    x
}

/// The relations `s = m_{i,j} ε_{σ,i} − m_{j,i} ε_{τ,j} − Σ a ε_{ρ,k}` of all
/// pairs whose S-pair reduced to zero, as elements of `Ĝ` (summand `k` has
/// arity `w(b_k)`). Zero relations are omitted.
pub fn gb_syzygies(log: &GroebnerLog) -> Vec<FreeElement> {
    let Some(first) = log.basis.first() else {
        return Vec::new();
    };
    let field = first.field();
    log.pairs
        .iter()
        .filter(|p| p.adjoined.is_none())
        .map(|p| relation(field, p, 1))
        .filter(|x| !x.is_zero())
        .collect()
}

/// The special-form relation `ε_{id,v} − m_{i,j} ε_{σ,i} + m_{j,i} ε_{τ,j} + Σ a ε_{ρ,k}`
/// of the adjoined generator `v`, or `None` if `v` is not adjoined.
pub fn special_form(log: &GroebnerLog, v: usize) -> Option<FreeElement> {
    let record = log.origin(v)?;
    let field = log.basis[v].field();
    let mut x = relation(field, record, -1);
    x.add_term(
        field.one(),
        ModuleMonomial::new(v, (1..=record.width).collect(), Monomial::one()),
    );
    Some(x)
}

/// Rewrites relations over `Ĝ` as relations over the first `log.initial`
/// summands, substituting adjoined basis vectors from the highest index
/// down. An occurrence `ε_{ρ,v}` is removed with the special form of `v`
/// pushed along `ρ`.
pub fn eliminate_adjoined(syzygies: &[FreeElement], log: &GroebnerLog) -> Result<Vec<FreeElement>> {
    let forms = (log.initial..log.basis.len())
        .map(|v| {
            special_form(log, v)
                .ok_or_else(|| Error::Internal(format!("generator {} has no special-form entry in the log", v + 1)))
        })
        .collect::<Result<Vec<_>>>()?;
    syzygies
        .iter()
        .map(|s| {
            let mut x = s.clone();
            for v in (log.initial..log.basis.len()).rev() {
                let form = &forms[v - log.initial];
                loop {
                    let next = x.terms().find(|(m, _)| m.summand == v).map(|(m, c)| (m.clone(), c.clone()));
                    let Some((m, c)) = next else { break };
                    let rho = OiMap::new(x.width(), m.pi.clone())?;
                    let shifted = form.map(&rho)?;
                    let minus = -c;
                    x.add_scaled(&minus, &m.mono, &shifted);
                }
            }
            if let Some((m, _)) = x.terms().find(|(m, _)| m.summand >= log.initial) {
                return Err(Error::Internal(format!("substitution left the adjoined term {m}")));
            }
            Ok(x)
        })
        .collect()
}

/// Keeps the first of any family of elements that agree up to a nonzero
/// scalar; drops zeros.
pub fn dedup_up_to_scalar(elements: Vec<FreeElement>) -> Vec<FreeElement> {
    let mut seen = HashSet::new();
    elements
        .into_iter()
        .filter(|x| !x.is_zero() && seen.insert(x.normalized()))
        .collect()
}

/// Generators of the kernel of `φ: G → F`, `ε_{id,i} ↦ images[i]`, where
/// the `i`-th summand of `G` has arity `images[i].width()`. `order` is a
/// monomial order on `F`. Every output is checked to map to zero.
pub fn kernel_of_free_map(images: &[FreeElement], order: &ModuleOrder, settings: &GroebnerSettings) -> Result<Vec<FreeElement>> {
    let Some(first) = images.first() else {
        return Ok(Vec::new());
    };
    let field = first.field();
    let mut out = Vec::new();
    let mut kept = Vec::new();
    for (i, b) in images.iter().enumerate() {
        if b.field() != field {
            return Err(Error::FieldMismatch(field, b.field()));
        }
        if b.is_zero() {
            log::warn!("generator {} is zero; dropped, its basis vector lies in the kernel", i + 1);
            out.push(FreeElement::basis(field, b.width(), i, (1..=b.width()).collect()));
        } else {
            kept.push(i);
        }
    }
    let nonzero: Vec<FreeElement> = kept.iter().map(|&i| images[i].clone()).collect();
    let log = buchberger(&nonzero, order, settings)?;
    let syz = eliminate_adjoined(&gb_syzygies(&log), &log)?;
    for s in syz {
        let mut x = FreeElement::zero(field, s.width());
        for (m, c) in s.terms() {
            x.add_term(c.clone(), ModuleMonomial::new(kept[m.summand], m.pi.clone(), m.mono.clone()));
        }
        out.push(x);
    }
    let out = dedup_up_to_scalar(out);
    for x in &out {
        if !apply_morphism(x, images, field)?.is_zero() {
            return Err(Error::Internal(format!("kernel element {x} does not map to zero")));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Polynomial;

    const Q: Field = Field::Rational;

    fn x(col: usize) -> Polynomial {
        Polynomial::var(Q, 1, col)
    }

    fn elem(p: &Polynomial, width: usize) -> FreeElement {
        FreeElement::from_polynomial(p, width)
    }

    #[test]
    fn koszul_syzygy_of_a_square() {
        let b = elem(&(&x(1) * &x(1)), 1);
        let k = kernel_of_free_map(&[b], &ModuleOrder::pot(1), &GroebnerSettings::default()).unwrap();
        assert_eq!(k.len(), 1);
        let expect = FreeElement::from_parts(
            Q,
            2,
            [(&x(2) * &x(2), 0, vec![1]), (-&(&x(1) * &x(1)), 0, vec![2])],
        );
        assert_eq!(k[0], expect);
    }

    #[test]
    fn injective_map_has_empty_kernel() {
        // distinct summands to distinct variable rows
        let a = elem(&Polynomial::var(Q, 1, 1), 1);
        let b = elem(&Polynomial::var(Q, 2, 1), 1);
        let pres_images = [
            FreeElement::from_parts(Q, 0, [(Polynomial::one(Q), 0, vec![])]),
            FreeElement::from_parts(Q, 0, [(Polynomial::one(Q), 1, vec![])]),
        ];
        let k = kernel_of_free_map(&pres_images, &ModuleOrder::pot(1), &GroebnerSettings::default()).unwrap();
        assert!(k.is_empty());
        // x_{1,1} and x_{2,1} do have the Koszul relation, so this one is not empty
        let k2 = kernel_of_free_map(&[a, b], &ModuleOrder::pot(2), &GroebnerSettings::default()).unwrap();
        assert!(!k2.is_empty());
    }

    #[test]
    fn identity_map_has_empty_kernel() {
        let e = FreeElement::basis(Q, 1, 0, vec![1]);
        assert!(kernel_of_free_map(&[e], &ModuleOrder::pot(1), &GroebnerSettings::default()).unwrap().is_empty());
    }

    #[test]
    fn zero_generator_contributes_basis_vector() {
        let z = FreeElement::zero(Q, 1);
        let k = kernel_of_free_map(&[z, elem(&x(1), 1)], &ModuleOrder::pot(1), &GroebnerSettings::default()).unwrap();
        assert!(k.contains(&FreeElement::basis(Q, 1, 0, vec![1])));
    }

    #[test]
    fn elimination_removes_adjoined_generators() {
        let gens = [elem(&(&x(1) + &x(2)), 2)];
        let log = buchberger(&gens, &ModuleOrder::pot(1), &GroebnerSettings::default()).unwrap();
        assert!(log.adjoined_count() > 0);
        for v in log.initial..log.basis.len() {
            let form = special_form(&log, v).unwrap();
            assert!(apply_morphism(&form, &log.basis, Q).unwrap().is_zero());
        }
        let syz = gb_syzygies(&log);
        for s in &syz {
            assert!(apply_morphism(s, &log.basis, Q).unwrap().is_zero());
        }
        for s in eliminate_adjoined(&syz, &log).unwrap() {
            assert!(s.terms().all(|(m, _)| m.summand == 0));
            assert!(apply_morphism(&s, &gens, Q).unwrap().is_zero());
        }
    }

    #[test]
    fn no_adjoined_is_identity() {
        let b = elem(&(&x(1) * &x(1)), 1);
        let log = buchberger(&[b], &ModuleOrder::pot(1), &GroebnerSettings::default()).unwrap();
        let syz = gb_syzygies(&log);
        assert_eq!(eliminate_adjoined(&syz, &log).unwrap(), syz);
    }
}
