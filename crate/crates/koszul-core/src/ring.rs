//! Polynomial rings: variables, weighted gradings, monomials and term orders.

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::field::{Field, FieldSpec};

/// Global monomial orders. All refine the weighted degree except `Lex`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    DegRevLex,
    DegLex,
    Lex,
}

impl MonomialOrder {
    pub fn name(&self) -> &'static str {
        match self {
            MonomialOrder::DegRevLex => "degrevlex",
            MonomialOrder::DegLex => "deglex",
            MonomialOrder::Lex => "lex",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        match s {
            "degrevlex" => Some(MonomialOrder::DegRevLex),
            "deglex" => Some(MonomialOrder::DegLex),
            "lex" => Some(MonomialOrder::Lex),
            _ => None,
        }
    }
}

/// Ring description as plain data: field, named variables, weights, order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingSpec {
    pub field: FieldSpec,
    pub vars: Vec<String>,
    pub weights: Vec<i64>,
    pub order: MonomialOrder,
}

impl RingSpec {
    pub fn validate(&self) -> Result<()> {
        self.field.validate()?;
        if self.vars.is_empty() {
            return Err(Error::InvalidRing(String::from("need at least one variable")));
        }
        if self.weights.len() != self.vars.len() {
            return Err(Error::InvalidRing(String::from("one weight per variable required")));
        }
        if self.weights.iter().any(|w| *w <= 0) {
            return Err(Error::InvalidRing(String::from("weights must be positive")));
        }
        for (i, v) in self.vars.iter().enumerate() {
            if v.is_empty() || !v.chars().next().unwrap().is_ascii_alphabetic() {
                return Err(Error::InvalidRing(String::from("variable names must start with a letter")));
            }
            if !v.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
                return Err(Error::InvalidRing(String::from("variable names must be alphanumeric")));
            }
            if self.vars[..i].contains(v) {
                return Err(Error::InvalidRing(String::from("duplicate variable name")));
            }
        }
        Ok(())
    }

    /// Canonical one-line form, used in cache keys.
    pub fn canonical_text(&self) -> String {
        use core::fmt::Write;
        let mut s = String::new();
        let _ = write!(s, "field={};vars=[", self.field);
        for (i, v) in self.vars.iter().enumerate() {
            if i > 0 {
                s.push(',');
            }
            s.push_str(v);
        }
        let _ = write!(s, "];weights=[");
        for (i, w) in self.weights.iter().enumerate() {
            if i > 0 {
                s.push(',');
            }
            let _ = write!(s, "{w}");
        }
        let _ = write!(s, "];order={}", self.order.name());
        s
    }
}

/// A concrete ring: a validated spec plus the field implementation.
/// Wrapped in `Arc` everywhere; see [`Ring`].
#[derive(Debug)]
pub struct RingData<K: Field> {
    pub field: K,
    pub vars: Vec<String>,
    pub weights: Vec<i64>,
    pub order: MonomialOrder,
}

pub type Ring<K> = Arc<RingData<K>>;

impl<K: Field> RingData<K> {
    pub fn new(field: K, vars: Vec<String>, weights: Vec<i64>, order: MonomialOrder) -> Result<Ring<K>> {
        let spec = RingSpec { field: field.spec(), vars: vars.clone(), weights: weights.clone(), order };
        spec.validate()?;
        Ok(Arc::new(RingData { field, vars, weights, order }))
    }

    /// Standard grading: all weights 1.
    pub fn standard(field: K, vars: &[&str], order: MonomialOrder) -> Result<Ring<K>> {
        let vars: Vec<String> = vars.iter().map(|s| String::from(*s)).collect();
        let weights = alloc::vec![1; vars.len()];
        Self::new(field, vars, weights, order)
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn spec(&self) -> RingSpec {
        RingSpec {
            field: self.field.spec(),
            vars: self.vars.clone(),
            weights: self.weights.clone(),
            order: self.order,
        }
    }

    /// Sum of the variable weights: the degree twist of the graded canonical
    /// module of the ring.
    pub fn weight_total(&self) -> i64 {
        self.weights.iter().sum()
    }
}

impl<K: Field> PartialEq for RingData<K> {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field
            && self.vars == other.vars
            && self.weights == other.weights
            && self.order == other.order
    }
}

/// Two ring handles denote the same ring (cheap pointer check first).
pub fn same_ring<K: Field>(a: &Ring<K>, b: &Ring<K>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

type Exps = SmallVec<[u16; 8]>;

/// A monomial: exponent vector plus cached weighted degree.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Exps,
    deg: i64,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial { exps: smallvec::smallvec![0; nvars], deg: 0 }
    }

    pub fn from_exps(weights: &[i64], exps: &[u16]) -> Self {
        debug_assert_eq!(weights.len(), exps.len());
        let deg = exps.iter().zip(weights).map(|(e, w)| *e as i64 * *w).sum();
        Monomial { exps: Exps::from_slice(exps), deg }
    }

    pub fn var(weights: &[i64], i: usize) -> Self {
        let mut exps: Exps = smallvec::smallvec![0; weights.len()];
        exps[i] = 1;
        Monomial { exps, deg: weights[i] }
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exp(&self, i: usize) -> u16 {
        self.exps[i]
    }

    pub fn exps(&self) -> &[u16] {
        &self.exps
    }

    /// Weighted degree (cached).
    pub fn degree(&self) -> i64 {
        self.deg
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        let exps = self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect();
        Monomial { exps, deg: self.deg + other.deg }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.deg <= other.deg && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// other / self, if divisible.
    pub fn divide(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let exps = other.exps.iter().zip(&self.exps).map(|(a, b)| a - b).collect();
        Some(Monomial { exps, deg: other.deg - self.deg })
    }

    pub fn lcm(&self, other: &Monomial, weights: &[i64]) -> Monomial {
        let exps: Exps = self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect();
        let deg = exps.iter().zip(weights).map(|(e, w)| *e as i64 * *w).sum();
        Monomial { exps, deg }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Total order comparison under `order`.
    pub fn compare(&self, other: &Monomial, order: MonomialOrder) -> Ordering {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        match order {
            MonomialOrder::DegRevLex => match self.deg.cmp(&other.deg) {
                Ordering::Equal => {
                    for i in (0..self.exps.len()).rev() {
                        match self.exps[i].cmp(&other.exps[i]) {
                            Ordering::Equal => continue,
                            // Larger exponent at the last differing position
                            // means smaller in revlex.
                            Ordering::Greater => return Ordering::Less,
                            Ordering::Less => return Ordering::Greater,
                        }
                    }
                    Ordering::Equal
                }
                c => c,
            },
            MonomialOrder::DegLex => match self.deg.cmp(&other.deg) {
                Ordering::Equal => self.lex_cmp(other),
                c => c,
            },
            MonomialOrder::Lex => self.lex_cmp(other),
        }
    }

    fn lex_cmp(&self, other: &Monomial) -> Ordering {
        for i in 0..self.exps.len() {
            match self.exps[i].cmp(&other.exps[i]) {
                Ordering::Equal => continue,
                c => return c,
            }
        }
        Ordering::Equal
    }
}

/// Render a monomial in the text grammar against variable names.
pub fn monomial_text(m: &Monomial, vars: &[String]) -> String {
    use core::fmt::Write;
    let mut s = String::new();
    for (i, e) in m.exps().iter().enumerate() {
        if *e == 0 {
            continue;
        }
        if !s.is_empty() {
            s.push('*');
        }
        s.push_str(&vars[i]);
        if *e > 1 {
            let _ = write!(s, "^{e}");
        }
    }
    s
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, e) in self.exps.iter().enumerate() {
            if *e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "x{i}")?;
            if *e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(w: &[i64], e: &[u16]) -> Monomial {
        Monomial::from_exps(w, e)
    }

    #[test]
    fn degrevlex_spec_example() {
        // 3 vars x,y,z: x*z vs y^2 have equal degree; degrevlex puts x*z below y^2.
        let w = [1i64, 1, 1];
        let xz = mono(&w, &[1, 0, 1]);
        let y2 = mono(&w, &[0, 2, 0]);
        assert_eq!(xz.compare(&y2, MonomialOrder::DegRevLex), Ordering::Less);
        assert_eq!(y2.compare(&xz, MonomialOrder::DegRevLex), Ordering::Greater);
    }

    #[test]
    fn lex_leading_variable_dominates() {
        let w = [1i64, 1];
        let x = mono(&w, &[1, 0]);
        let y = mono(&w, &[0, 1]);
        assert_eq!(x.compare(&y, MonomialOrder::Lex), Ordering::Greater);
    }

    #[test]
    fn reflexive_equal() {
        let w = [1i64, 1, 1];
        let a = mono(&w, &[2, 1, 0]);
        for o in [MonomialOrder::DegRevLex, MonomialOrder::DegLex, MonomialOrder::Lex] {
            assert_eq!(a.compare(&a, o), Ordering::Equal);
        }
    }

    /// Oracle: enumerate all degree-2 monomials in 3 variables, sort by the
    /// textbook degrevlex definition (a > b iff the last nonzero entry of the
    /// exponent difference is negative), and check the implementation yields
    /// the same total order.
    #[test]
    fn degrevlex_matches_textbook_on_degree_two() {
        let w = [1i64, 1, 1];
        let mut all: Vec<Monomial> = Vec::new();
        for a in 0..=2u16 {
            for b in 0..=2u16 {
                for c in 0..=2u16 {
                    if a + b + c == 2 {
                        all.push(mono(&w, &[a, b, c]));
                    }
                }
            }
        }
        let textbook_greater = |p: &Monomial, q: &Monomial| -> bool {
            let diff: Vec<i32> = p
                .exps()
                .iter()
                .zip(q.exps())
                .map(|(a, b)| *a as i32 - *b as i32)
                .collect();
            match diff.iter().rev().find(|d| **d != 0) {
                Some(d) => *d < 0,
                None => false,
            }
        };
        for p in &all {
            for q in &all {
                let got = p.compare(q, MonomialOrder::DegRevLex);
                let expect = if p.exps() == q.exps() {
                    Ordering::Equal
                } else if textbook_greater(p, q) {
                    Ordering::Greater
                } else {
                    Ordering::Less
                };
                assert_eq!(got, expect, "{p} vs {q}");
            }
        }
    }

    #[test]
    fn weighted_degree_cached() {
        let w = [2i64, 3];
        let m = mono(&w, &[1, 2]);
        assert_eq!(m.degree(), 8);
        let n = m.mul(&mono(&w, &[0, 1]));
        assert_eq!(n.degree(), 11);
    }

    #[test]
    fn ring_validation() {
        use crate::field::Rationals;
        assert!(RingData::standard(Rationals, &["x", "y"], MonomialOrder::DegRevLex).is_ok());
        assert!(RingData::standard(Rationals, &[], MonomialOrder::DegRevLex).is_err());
        assert!(RingData::standard(Rationals, &["x", "x"], MonomialOrder::DegRevLex).is_err());
        assert!(RingData::new(Rationals, alloc::vec![String::from("x")], alloc::vec![0], MonomialOrder::Lex).is_err());
    }
}
