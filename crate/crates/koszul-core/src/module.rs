//! Graded free modules and their elements.
//!
//! A free module carries one integer degree shift per basis element: basis
//! element `e_i` has degree `shifts[i]`, so a homogeneous element of total
//! degree `d` has component `i` homogeneous of polynomial degree
//! `d - shifts[i]`.

use alloc::sync::Arc;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::{Homogeneity, Polynomial, DEGREE_NEG_INF};
use crate::ring::{same_ring, Monomial, Ring};

/// Module term orders. Only term-over-position is implemented: terms compare
/// by the ring order on monomials, ties break towards the lower basis index.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModuleOrder {
    TermOverPosition,
}

#[derive(Debug)]
pub struct FreeModule<K: Field> {
    pub ring: Ring<K>,
    pub shifts: Vec<i64>,
}

pub type FreeModuleHandle<K> = Arc<FreeModule<K>>;

impl<K: Field> FreeModule<K> {
    pub fn new(ring: &Ring<K>, shifts: Vec<i64>) -> FreeModuleHandle<K> {
        Arc::new(FreeModule { ring: ring.clone(), shifts })
    }

    pub fn rank(&self) -> usize {
        self.shifts.len()
    }

    /// Degree of the term `m * e_comp`.
    pub fn term_degree(&self, comp: usize, m: &Monomial) -> i64 {
        m.degree() + self.shifts[comp]
    }
}

impl<K: Field> PartialEq for FreeModule<K> {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.shifts == other.shifts
    }
}

pub fn same_module<K: Field>(a: &FreeModuleHandle<K>, b: &FreeModuleHandle<K>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

/// Lead term of a module element: component index, monomial, coefficient.
#[derive(Debug, Clone)]
pub struct LeadTerm<K: Field> {
    pub comp: usize,
    pub mono: Monomial,
    pub coeff: K::Elem,
}

/// An element of a free module: one polynomial per basis component.
#[derive(Debug, Clone)]
pub struct ModuleElement<K: Field> {
    pub ambient: FreeModuleHandle<K>,
    pub components: Vec<Polynomial<K>>,
}

impl<K: Field> PartialEq for ModuleElement<K> {
    fn eq(&self, other: &Self) -> bool {
        same_module(&self.ambient, &other.ambient) && self.components == other.components
    }
}

impl<K: Field> ModuleElement<K> {
    pub fn zero(ambient: &FreeModuleHandle<K>) -> Self {
        let components = (0..ambient.rank()).map(|_| Polynomial::zero(&ambient.ring)).collect();
        ModuleElement { ambient: ambient.clone(), components }
    }

    pub fn basis(ambient: &FreeModuleHandle<K>, i: usize) -> Self {
        let mut v = Self::zero(ambient);
        v.components[i] = Polynomial::one(&ambient.ring);
        v
    }

    pub fn from_components(ambient: &FreeModuleHandle<K>, components: Vec<Polynomial<K>>) -> Result<Self> {
        if components.len() != ambient.rank() {
            return Err(Error::AmbientMismatch);
        }
        for p in &components {
            if !same_ring(p.ring(), &ambient.ring) {
                return Err(Error::RingMismatch);
            }
        }
        Ok(ModuleElement { ambient: ambient.clone(), components })
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(|p| p.is_zero())
    }

    fn check_ambient(&self, other: &Self) -> Result<()> {
        if same_module(&self.ambient, &other.ambient) {
            Ok(())
        } else {
            Err(Error::AmbientMismatch)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_ambient(other)?;
        let components = self
            .components
            .iter()
            .zip(&other.components)
            .map(|(a, b)| a.add(b))
            .collect::<Result<Vec<_>>>()?;
        Ok(ModuleElement { ambient: self.ambient.clone(), components })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_ambient(other)?;
        let components = self
            .components
            .iter()
            .zip(&other.components)
            .map(|(a, b)| a.sub(b))
            .collect::<Result<Vec<_>>>()?;
        Ok(ModuleElement { ambient: self.ambient.clone(), components })
    }

    pub fn neg(&self) -> Self {
        ModuleElement {
            ambient: self.ambient.clone(),
            components: self.components.iter().map(|p| p.neg()).collect(),
        }
    }

    pub fn scale(&self, c: &K::Elem) -> Self {
        ModuleElement {
            ambient: self.ambient.clone(),
            components: self.components.iter().map(|p| p.scale(c)).collect(),
        }
    }

    pub fn mul_term(&self, m: &Monomial, c: &K::Elem) -> Self {
        ModuleElement {
            ambient: self.ambient.clone(),
            components: self.components.iter().map(|p| p.mul_term(m, c)).collect(),
        }
    }

    pub fn mul_poly(&self, f: &Polynomial<K>) -> Result<Self> {
        let components = self
            .components
            .iter()
            .map(|p| p.mul(f))
            .collect::<Result<Vec<_>>>()?;
        Ok(ModuleElement { ambient: self.ambient.clone(), components })
    }

    /// In-place `self -= c * x^m * other` (same ambient assumed).
    pub fn sub_mul_term(&mut self, other: &Self, m: &Monomial, c: &K::Elem) {
        for (mine, theirs) in self.components.iter_mut().zip(&other.components) {
            if !theirs.is_zero() {
                mine.sub_mul_term(theirs, m, c);
            }
        }
    }

    /// Lead term under term-over-position.
    pub fn lead(&self) -> Option<LeadTerm<K>> {
        let order = self.ambient.ring.order;
        let mut best: Option<(usize, &Monomial, &K::Elem)> = None;
        for (i, p) in self.components.iter().enumerate() {
            if let Some((m, c)) = p.lead_term() {
                let better = match &best {
                    None => true,
                    Some((_, bm, _)) => m.compare(bm, order) == Ordering::Greater,
                };
                if better {
                    best = Some((i, m, c));
                }
            }
        }
        best.map(|(comp, mono, coeff)| LeadTerm { comp, mono: mono.clone(), coeff: coeff.clone() })
    }

    /// Homogeneity of the element with respect to the ambient shifts.
    /// Zero reports homogeneous at the minus-infinity sentinel.
    pub fn total_degree(&self) -> Result<i64> {
        let mut degree: Option<i64> = None;
        for (i, p) in self.components.iter().enumerate() {
            match p.homogeneity() {
                Homogeneity::Homogeneous(DEGREE_NEG_INF) => continue,
                Homogeneity::Homogeneous(d) => {
                    let total = d + self.ambient.shifts[i];
                    match degree {
                        None => degree = Some(total),
                        Some(prev) if prev == total => {}
                        Some(_) => {
                            return Err(Error::Inhomogeneous(alloc::format!(
                                "module element mixes total degrees"
                            )))
                        }
                    }
                }
                Homogeneity::Inhomogeneous => {
                    return Err(Error::Inhomogeneous(alloc::format!(
                        "component {i} is inhomogeneous"
                    )))
                }
            }
        }
        Ok(degree.unwrap_or(DEGREE_NEG_INF))
    }

    pub fn is_homogeneous(&self) -> bool {
        self.total_degree().is_ok()
    }

    /// Make the lead coefficient 1.
    pub fn monic(&self) -> Self {
        match self.lead() {
            None => self.clone(),
            Some(lt) => {
                let field = &self.ambient.ring.field;
                if field.is_one(&lt.coeff) {
                    self.clone()
                } else {
                    self.scale(&field.inv(&lt.coeff))
                }
            }
        }
    }
}

/// Compare two module terms under term-over-position.
pub fn term_compare(a: (&Monomial, usize), b: (&Monomial, usize), order: crate::ring::MonomialOrder) -> Ordering {
    match a.0.compare(b.0, order) {
        Ordering::Equal => b.1.cmp(&a.1),
        c => c,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;
    use crate::parse::parse_polynomial;
    use crate::ring::{MonomialOrder, RingData};

    #[test]
    fn lead_term_over_position() {
        let r = RingData::standard(Rationals, &["x", "y"], MonomialOrder::DegRevLex).unwrap();
        let f = FreeModule::new(&r, alloc::vec![0, 0]);
        let v = ModuleElement::from_components(
            &f,
            alloc::vec![
                parse_polynomial(&r, "y").unwrap(),
                parse_polynomial(&r, "x").unwrap(),
            ],
        )
        .unwrap();
        // x > y in degrevlex, so the lead sits in component 1.
        let lt = v.lead().unwrap();
        assert_eq!(lt.comp, 1);
        // Equal monomials prefer the lower component.
        let w = ModuleElement::from_components(
            &f,
            alloc::vec![
                parse_polynomial(&r, "x").unwrap(),
                parse_polynomial(&r, "x").unwrap(),
            ],
        )
        .unwrap();
        assert_eq!(w.lead().unwrap().comp, 0);
    }

    #[test]
    fn degree_bookkeeping_with_shifts() {
        let r = RingData::standard(Rationals, &["x", "y"], MonomialOrder::DegRevLex).unwrap();
        let f = FreeModule::new(&r, alloc::vec![1, 2]);
        let v = ModuleElement::from_components(
            &f,
            alloc::vec![
                parse_polynomial(&r, "x^2").unwrap(),
                parse_polynomial(&r, "y").unwrap(),
            ],
        )
        .unwrap();
        assert_eq!(v.total_degree().unwrap(), 3);
        let bad = ModuleElement::from_components(
            &f,
            alloc::vec![
                parse_polynomial(&r, "x").unwrap(),
                parse_polynomial(&r, "y").unwrap(),
            ],
        )
        .unwrap();
        assert!(bad.total_degree().is_err());
    }
}
