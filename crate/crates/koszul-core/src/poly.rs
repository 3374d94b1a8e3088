//! Exact multivariate polynomials: sorted term lists over a [`Field`].

use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::ring::{same_ring, Monomial, Ring};

/// Sentinel degree for the zero polynomial / zero module (minus infinity).
pub const DEGREE_NEG_INF: i64 = i64::MIN;

/// Homogeneity verdict; the zero polynomial is homogeneous of every degree
/// and is reported with the [`DEGREE_NEG_INF`] sentinel.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Homogeneity {
    Homogeneous(i64),
    Inhomogeneous,
}

/// A polynomial: terms sorted strictly descending in the ring's monomial
/// order, no zero coefficients stored.
#[derive(Debug, Clone)]
pub struct Polynomial<K: Field> {
    ring: Ring<K>,
    terms: Vec<(Monomial, K::Elem)>,
}

impl<K: Field> PartialEq for Polynomial<K> {
    fn eq(&self, other: &Self) -> bool {
        self.terms.len() == other.terms.len()
            && self
                .terms
                .iter()
                .zip(&other.terms)
                .all(|(a, b)| a.0 == b.0 && a.1 == b.1)
    }
}

impl<K: Field> Eq for Polynomial<K> {}

impl<K: Field> Polynomial<K> {
    pub fn zero(ring: &Ring<K>) -> Self {
        Polynomial { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn constant(ring: &Ring<K>, c: K::Elem) -> Self {
        if ring.field.is_zero(&c) {
            return Self::zero(ring);
        }
        Polynomial { ring: ring.clone(), terms: alloc::vec![(Monomial::one(ring.nvars()), c)] }
    }

    pub fn one(ring: &Ring<K>) -> Self {
        Self::constant(ring, ring.field.one())
    }

    pub fn var(ring: &Ring<K>, i: usize) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: alloc::vec![(Monomial::var(&ring.weights, i), ring.field.one())],
        }
    }

    pub fn term(ring: &Ring<K>, m: Monomial, c: K::Elem) -> Self {
        if ring.field.is_zero(&c) {
            return Self::zero(ring);
        }
        Polynomial { ring: ring.clone(), terms: alloc::vec![(m, c)] }
    }

    /// Build from arbitrary (monomial, coefficient) pairs: sorts, merges
    /// duplicates, drops zeros.
    pub fn from_terms(ring: &Ring<K>, mut raw: Vec<(Monomial, K::Elem)>) -> Self {
        let order = ring.order;
        raw.sort_unstable_by(|a, b| b.0.compare(&a.0, order));
        let mut terms: Vec<(Monomial, K::Elem)> = Vec::with_capacity(raw.len());
        for (m, c) in raw {
            if let Some(last) = terms.last_mut() {
                if last.0 == m {
                    last.1 = ring.field.add(&last.1, &c);
                    continue;
                }
            }
            terms.push((m, c));
        }
        terms.retain(|(_, c)| !ring.field.is_zero(c));
        Polynomial { ring: ring.clone(), terms }
    }

    pub fn ring(&self) -> &Ring<K> {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> &[(Monomial, K::Elem)] {
        &self.terms
    }

    pub fn lead_term(&self) -> Option<(&Monomial, &K::Elem)> {
        self.terms.first().map(|(m, c)| (m, c))
    }

    /// Weighted degree of the highest-degree term; sentinel for zero.
    pub fn degree(&self) -> i64 {
        self.terms.iter().map(|(m, _)| m.degree()).max().unwrap_or(DEGREE_NEG_INF)
    }

    pub fn homogeneity(&self) -> Homogeneity {
        match self.terms.first() {
            None => Homogeneity::Homogeneous(DEGREE_NEG_INF),
            Some((m0, _)) => {
                let d = m0.degree();
                if self.terms.iter().all(|(m, _)| m.degree() == d) {
                    Homogeneity::Homogeneous(d)
                } else {
                    Homogeneity::Inhomogeneous
                }
            }
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        matches!(self.homogeneity(), Homogeneity::Homogeneous(_))
    }

    fn check_ring(&self, other: &Self) -> Result<()> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        Ok(self.merge(other, false))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        Ok(self.merge(other, true))
    }

    fn merge(&self, other: &Self, negate_other: bool) -> Self {
        let field = &self.ring.field;
        let order = self.ring.order;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (ma, ca) = &self.terms[i];
            let (mb, cb) = &other.terms[j];
            match ma.compare(mb, order) {
                Ordering::Greater => {
                    out.push((ma.clone(), ca.clone()));
                    i += 1;
                }
                Ordering::Less => {
                    let c = if negate_other { field.neg(cb) } else { cb.clone() };
                    out.push((mb.clone(), c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate_other { field.sub(ca, cb) } else { field.add(ca, cb) };
                    if !field.is_zero(&c) {
                        out.push((ma.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        for (mb, cb) in &other.terms[j..] {
            let c = if negate_other { field.neg(cb) } else { cb.clone() };
            out.push((mb.clone(), c));
        }
        Polynomial { ring: self.ring.clone(), terms: out }
    }

    pub fn neg(&self) -> Self {
        let field = &self.ring.field;
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), field.neg(c))).collect(),
        }
    }

    pub fn scale(&self, c: &K::Elem) -> Self {
        let field = &self.ring.field;
        if field.is_zero(c) {
            return Self::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), field.mul(a, c))).collect(),
        }
    }

    /// Multiply by a single term. Order is preserved (monomial orders are
    /// translation invariant).
    pub fn mul_term(&self, m: &Monomial, c: &K::Elem) -> Self {
        let field = &self.ring.field;
        if field.is_zero(c) {
            return Self::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(mm, a)| (mm.mul(m), field.mul(a, c))).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        let field = &self.ring.field;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(&self.ring));
        }
        let mut raw = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                raw.push((ma.mul(mb), field.mul(ca, cb)));
            }
        }
        Ok(Self::from_terms(&self.ring, raw))
    }

    /// In-place `self -= c * x^m * other`; the workhorse of reduction loops.
    pub fn sub_mul_term(&mut self, other: &Self, m: &Monomial, c: &K::Elem) {
        let scaled = other.mul_term(m, c);
        *self = self.merge(&scaled, true);
    }

    /// Remove and return the leading term.
    pub(crate) fn pop_lead(&mut self) -> Option<(Monomial, K::Elem)> {
        if self.terms.is_empty() {
            None
        } else {
            Some(self.terms.remove(0))
        }
    }

    /// Append a term known to be strictly smaller than every stored term.
    pub(crate) fn push_smaller_term(&mut self, m: Monomial, c: K::Elem) {
        debug_assert!(self
            .terms
            .last()
            .map(|(last, _)| last.compare(&m, self.ring.order) == Ordering::Greater)
            .unwrap_or(true));
        self.terms.push((m, c));
    }
}

/// Binary combination used by the CLI; thin wrapper over the methods.
pub fn poly_combine<K: Field>(f: &Polynomial<K>, g: &Polynomial<K>, op: CombineOp) -> Result<Polynomial<K>> {
    match op {
        CombineOp::Add => f.add(g),
        CombineOp::Sub => f.sub(g),
        CombineOp::Mul => f.mul(g),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CombineOp {
    Add,
    Sub,
    Mul,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Fp64, Rationals};
    use crate::ring::{MonomialOrder, RingData};

    fn qxy() -> Ring<Rationals> {
        RingData::standard(Rationals, &["x", "y"], MonomialOrder::DegRevLex).unwrap()
    }

    #[test]
    fn binomial_identity() {
        let r = qxy();
        let x = Polynomial::var(&r, 0);
        let y = Polynomial::var(&r, 1);
        let sum = x.add(&y).unwrap();
        let diff = x.sub(&y).unwrap();
        let prod = sum.mul(&diff).unwrap();
        let expect = x.mul(&x).unwrap().sub(&y.mul(&y).unwrap()).unwrap();
        assert_eq!(prod, expect);
    }

    #[test]
    fn add_zero_is_identity() {
        let r = qxy();
        let x = Polynomial::var(&r, 0);
        let f = x.mul(&x).unwrap().add(&Polynomial::one(&r)).unwrap();
        assert_eq!(f.add(&Polynomial::zero(&r)).unwrap(), f);
    }

    #[test]
    fn char_two_square() {
        let f2 = Fp64::new(2).unwrap();
        let r = RingData::standard(f2, &["x"], MonomialOrder::Lex).unwrap();
        let x = Polynomial::var(&r, 0);
        let f = x.add(&Polynomial::one(&r)).unwrap();
        let sq = f.mul(&f).unwrap();
        let expect = x.mul(&x).unwrap().add(&Polynomial::one(&r)).unwrap();
        assert_eq!(sq, expect, "(x+1)^2 = x^2+1 over F_2");
    }

    #[test]
    fn homogeneity_cases() {
        let r = qxy();
        let x = Polynomial::var(&r, 0);
        let y = Polynomial::var(&r, 1);
        let x2 = x.mul(&x).unwrap();
        let xy = x.mul(&y).unwrap();
        assert_eq!(x2.add(&xy).unwrap().homogeneity(), Homogeneity::Homogeneous(2));
        assert_eq!(x2.add(&x).unwrap().homogeneity(), Homogeneity::Inhomogeneous);
        assert_eq!(Polynomial::zero(&r).homogeneity(), Homogeneity::Homogeneous(DEGREE_NEG_INF));
    }

    #[test]
    fn ring_mismatch_rejected() {
        let r1 = qxy();
        let r2 = RingData::standard(Rationals, &["x", "z"], MonomialOrder::DegRevLex).unwrap();
        let f = Polynomial::var(&r1, 0);
        let g = Polynomial::var(&r2, 0);
        assert_eq!(f.add(&g), Err(Error::RingMismatch));
    }
}
