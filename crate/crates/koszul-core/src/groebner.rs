//! Buchberger's algorithm for submodules of graded free modules.
//!
//! Pairs are processed lowest degree first (normal strategy), which is
//! complete for homogeneous input and makes degree truncation sound: a run
//! with a degree bound returns a basis whose lead terms are correct in all
//! degrees up to the bound.
//!
//! The module order is term-over-position extending the ring order. The
//! classical product criterion is only valid for module elements concentrated
//! in a single component (there it degenerates to the ring case); it is
//! applied exactly then. The chain criterion is applied in the guarded form
//! where both sub-lcms properly divide the pair lcm.

use alloc::collections::BinaryHeap;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::cmp::{Ordering, Reverse};
use core::fmt::Write;
use core::sync::atomic::{AtomicU64, Ordering as AtomicOrdering};

use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::module::{same_module, term_compare, FreeModuleHandle, LeadTerm, ModuleElement, ModuleOrder};
use crate::parse::{parse_polynomial, polynomial_text_scaled};
use crate::poly::Polynomial;
use crate::ring::Monomial;

/// Key/value store for Groebner bases, implemented by the CLI crate with an
/// on-disk cache. Keys are content hashes; payloads are the canonical text
/// serialization produced by [`serialize_basis`].
pub trait GbStore: Send + Sync {
    fn load(&self, key: &str) -> Option<String>;
    fn store(&self, key: &str, payload: &str);
}

/// Shared computation context: optional basis store plus hit counters.
pub struct GbContext {
    store: Option<Arc<dyn GbStore>>,
    pub cache_hits: AtomicU64,
    pub cache_misses: AtomicU64,
}

impl GbContext {
    pub fn new() -> Self {
        GbContext { store: None, cache_hits: AtomicU64::new(0), cache_misses: AtomicU64::new(0) }
    }

    pub fn with_store(store: Arc<dyn GbStore>) -> Self {
        GbContext { store: Some(store), cache_hits: AtomicU64::new(0), cache_misses: AtomicU64::new(0) }
    }
}

impl Default for GbContext {
    fn default() -> Self {
        Self::new()
    }
}

/// An autoreduced Groebner basis of a submodule of a graded free module.
#[derive(Debug, Clone)]
pub struct GroebnerBasis<K: Field> {
    pub ambient: FreeModuleHandle<K>,
    /// Monic, tail-reduced, sorted ascending by lead term.
    pub elements: Vec<ModuleElement<K>>,
    pub order: ModuleOrder,
    pub autoreduced: bool,
    /// `Some(b)`: lead terms only guaranteed correct in degrees <= b.
    pub degree_bound: Option<i64>,
}

/// Borrowed view of one monic reducer.
pub(crate) struct Reducer<'a, K: Field> {
    pub elem: &'a ModuleElement<K>,
    pub comp: usize,
    pub mono: &'a Monomial,
}

pub(crate) fn reducer_views<'a, K: Field>(
    elems: &'a [ModuleElement<K>],
    leads: &'a [LeadTerm<K>],
) -> Vec<Reducer<'a, K>> {
    elems
        .iter()
        .zip(leads)
        .map(|(e, l)| Reducer { elem: e, comp: l.comp, mono: &l.mono })
        .collect()
}

/// Full normal form of `v` against monic `reducers`; every reduction step is
/// reported as `(index, monomial factor, coefficient)` meaning
/// `v -= c * x^m * reducers[index]`.
pub(crate) fn reduce_full<K: Field>(
    v: &ModuleElement<K>,
    reducers: &[Reducer<'_, K>],
    mut on_step: Option<&mut dyn FnMut(usize, &Monomial, &K::Elem)>,
) -> ModuleElement<K> {
    let ambient = v.ambient.clone();
    let mut rem = v.clone();
    let mut done = ModuleElement::zero(&ambient);
    'outer: while let Some(lt) = rem.lead() {
        for (r, b) in reducers.iter().enumerate() {
            if b.comp == lt.comp {
                if let Some(delta) = b.mono.divide(&lt.mono) {
                    rem.sub_mul_term(b.elem, &delta, &lt.coeff);
                    if let Some(cb) = on_step.as_mut() {
                        cb(r, &delta, &lt.coeff);
                    }
                    continue 'outer;
                }
            }
        }
        // Irreducible lead: move it across. Moved terms arrive in strictly
        // descending order, so appending keeps the term-list invariant.
        let (m, c) = rem.components[lt.comp].pop_lead().expect("lead exists");
        done.components[lt.comp].push_smaller_term(m, c);
    }
    done
}

pub(crate) struct BasisElem<K: Field> {
    pub elem: ModuleElement<K>,
    pub lead: LeadTerm<K>,
    pub repr: Option<Vec<Polynomial<K>>>,
    concentrated: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct PairKey {
    deg: i64,
    i: u32,
    j: u32,
}

impl Ord for PairKey {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.deg, self.i, self.j).cmp(&(other.deg, other.i, other.j))
    }
}

impl PartialOrd for PairKey {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub(crate) struct EngineOutput<K: Field> {
    /// Syzygies of the inputs, as coefficient vectors over the generators
    /// (length = number of generators).
    pub syzygies: Vec<Vec<Polynomial<K>>>,
}

struct Engine<K: Field> {
    ambient: FreeModuleHandle<K>,
    basis: Vec<BasisElem<K>>,
    pairs: BinaryHeap<Reverse<PairKey>>,
    track: bool,
    bound: Option<i64>,
    use_criteria: bool,
    syzygies: Vec<Vec<Polynomial<K>>>,
}

impl<K: Field> Engine<K> {
    fn new(ambient: &FreeModuleHandle<K>, track: bool, bound: Option<i64>) -> Self {
        Engine {
            ambient: ambient.clone(),
            basis: Vec::new(),
            pairs: BinaryHeap::new(),
            track,
            bound,
            use_criteria: !track,
            syzygies: Vec::new(),
        }
    }

    fn weights(&self) -> &[i64] {
        &self.ambient.ring.weights
    }

    fn insert(&mut self, elem: ModuleElement<K>, repr: Option<Vec<Polynomial<K>>>) {
        let lead = elem.lead().expect("nonzero element");
        let concentrated = elem.components.iter().filter(|p| !p.is_zero()).count() == 1;
        let idx = self.basis.len() as u32;
        let shift = self.ambient.shifts[lead.comp];
        for (k, other) in self.basis.iter().enumerate() {
            if other.lead.comp == lead.comp {
                let lcm = other.lead.mono.lcm(&lead.mono, &self.ambient.ring.weights);
                let deg = lcm.degree() + shift;
                if self.bound.map(|b| deg > b).unwrap_or(false) {
                    continue;
                }
                self.pairs.push(Reverse(PairKey { deg, i: k as u32, j: idx }));
            }
        }
        self.basis.push(BasisElem { elem, lead, repr, concentrated });
    }

    fn chain_criterion(&self, i: usize, j: usize, lcm: &Monomial) -> bool {
        let comp = self.basis[i].lead.comp;
        for (k, b) in self.basis.iter().enumerate() {
            if k == i || k == j || b.lead.comp != comp {
                continue;
            }
            if !b.lead.mono.divides(lcm) {
                continue;
            }
            let lik = self.basis[i].lead.mono.lcm(&b.lead.mono, self.weights());
            let ljk = self.basis[j].lead.mono.lcm(&b.lead.mono, self.weights());
            if lik != *lcm && ljk != *lcm {
                return true;
            }
        }
        false
    }

    fn run(&mut self, gens: &[ModuleElement<K>]) -> Result<()> {
        let field = self.ambient.ring.field.clone();
        for (i, g) in gens.iter().enumerate() {
            if !same_module(&g.ambient, &self.ambient) {
                return Err(Error::AmbientMismatch);
            }
            g.total_degree()
                .map_err(|_| Error::Inhomogeneous(alloc::format!("generator {i}")))?;
            if g.is_zero() {
                if self.track {
                    // A zero generator contributes the coordinate syzygy e_i.
                    let mut syz = alloc::vec![Polynomial::zero(&self.ambient.ring); gens.len()];
                    syz[i] = Polynomial::one(&self.ambient.ring);
                    self.syzygies.push(syz);
                }
                continue;
            }
            let lead = g.lead().expect("nonzero");
            let inv = field.inv(&lead.coeff);
            let elem = g.scale(&inv);
            let repr = self.track.then(|| {
                let mut r = alloc::vec![Polynomial::zero(&self.ambient.ring); gens.len()];
                r[i] = Polynomial::constant(&self.ambient.ring, inv.clone());
                r
            });
            self.insert(elem, repr);
        }

        while let Some(Reverse(pair)) = self.pairs.pop() {
            let (i, j) = (pair.i as usize, pair.j as usize);
            let lcm = {
                let (li, lj) = (&self.basis[i].lead, &self.basis[j].lead);
                debug_assert_eq!(li.comp, lj.comp);
                li.mono.lcm(&lj.mono, self.weights())
            };
            if self.use_criteria {
                let (bi, bj) = (&self.basis[i], &self.basis[j]);
                if bi.lead.mono.is_coprime(&bj.lead.mono) && bi.concentrated && bj.concentrated {
                    continue;
                }
                if self.chain_criterion(i, j, &lcm) {
                    continue;
                }
            }
            let one = field.one();
            let di = self.basis[i].lead.mono.divide(&lcm).expect("lcm divisible");
            let dj = self.basis[j].lead.mono.divide(&lcm).expect("lcm divisible");
            let mut spoly = self.basis[i].elem.mul_term(&di, &one);
            spoly.sub_mul_term(&self.basis[j].elem, &dj, &one);

            let mut steps: Vec<(usize, Monomial, K::Elem)> = Vec::new();
            let rem = {
                let elems: Vec<&ModuleElement<K>> = self.basis.iter().map(|b| &b.elem).collect();
                let views: Vec<Reducer<'_, K>> = self
                    .basis
                    .iter()
                    .zip(&elems)
                    .map(|(b, e)| Reducer { elem: e, comp: b.lead.comp, mono: &b.lead.mono })
                    .collect();
                if self.track {
                    reduce_full(&spoly, &views, Some(&mut |r, m, c| steps.push((r, m.clone(), c.clone()))))
                } else {
                    reduce_full(&spoly, &views, None)
                }
            };

            if self.track {
                let mut acc: Vec<Polynomial<K>> = self.basis[i]
                    .repr
                    .as_ref()
                    .unwrap()
                    .iter()
                    .map(|p| p.mul_term(&di, &one))
                    .collect();
                for (a, p) in acc.iter_mut().zip(self.basis[j].repr.as_ref().unwrap()) {
                    a.sub_mul_term(p, &dj, &one);
                }
                for (r, m, c) in &steps {
                    // Work around the borrow of self.basis while mutating acc.
                    let other: Vec<Polynomial<K>> = self.basis[*r].repr.as_ref().unwrap().clone();
                    for (a, p) in acc.iter_mut().zip(&other) {
                        a.sub_mul_term(p, m, c);
                    }
                }
                if rem.is_zero() {
                    self.syzygies.push(acc);
                } else {
                    let lt = rem.lead().unwrap();
                    let inv = field.inv(&lt.coeff);
                    let elem = rem.scale(&inv);
                    let repr = acc.iter().map(|p| p.scale(&inv)).collect();
                    self.insert(elem, Some(repr));
                }
            } else if !rem.is_zero() {
                let lt = rem.lead().unwrap();
                let inv = field.inv(&lt.coeff);
                self.insert(rem.scale(&inv), None);
            }
        }
        Ok(())
    }
}

fn autoreduce<K: Field>(ambient: &FreeModuleHandle<K>, mut elems: Vec<ModuleElement<K>>) -> Vec<ModuleElement<K>> {
    let order = ambient.ring.order;
    // Phase 1: minimalize — drop elements whose lead is divisible by the lead
    // of another kept element (earlier element wins on equal leads).
    let leads: Vec<LeadTerm<K>> = elems.iter().map(|e| e.lead().expect("nonzero")).collect();
    let mut keep = alloc::vec![true; elems.len()];
    for i in 0..elems.len() {
        if !keep[i] {
            continue;
        }
        for j in 0..elems.len() {
            if i == j || !keep[j] {
                continue;
            }
            if leads[j].comp == leads[i].comp && leads[j].mono.divides(&leads[i].mono) {
                if leads[j].mono == leads[i].mono && j > i {
                    continue;
                }
                keep[i] = false;
                break;
            }
        }
    }
    let mut kept: Vec<ModuleElement<K>> = elems
        .drain(..)
        .zip(keep)
        .filter_map(|(e, k)| k.then_some(e))
        .collect();
    // Phase 2: tail-reduce each element against the others. Lead terms are
    // now pairwise indivisible, so leads cannot change and one pass suffices.
    for i in 0..kept.len() {
        let me = kept[i].clone();
        let other_elems: Vec<&ModuleElement<K>> = kept
            .iter()
            .enumerate()
            .filter_map(|(j, e)| (j != i).then_some(e))
            .collect();
        let other_leads: Vec<LeadTerm<K>> = other_elems.iter().map(|e| e.lead().unwrap()).collect();
        let views: Vec<Reducer<'_, K>> = other_elems
            .iter()
            .zip(&other_leads)
            .map(|(e, l)| Reducer { elem: e, comp: l.comp, mono: &l.mono })
            .collect();
        kept[i] = reduce_full(&me, &views, None).monic();
    }
    kept.sort_by(|a, b| {
        let la = a.lead().unwrap();
        let lb = b.lead().unwrap();
        term_compare((&la.mono, la.comp), (&lb.mono, lb.comp), order)
    });
    kept
}

fn compute_basis<K: Field>(
    ambient: &FreeModuleHandle<K>,
    gens: &[ModuleElement<K>],
    bound: Option<i64>,
) -> Result<GroebnerBasis<K>> {
    let mut engine = Engine::new(ambient, false, bound);
    engine.run(gens)?;
    let elems = autoreduce(ambient, engine.basis.into_iter().map(|b| b.elem).collect());
    Ok(GroebnerBasis {
        ambient: ambient.clone(),
        elements: elems,
        order: ModuleOrder::TermOverPosition,
        autoreduced: true,
        degree_bound: bound,
    })
}

/// Compute the autoreduced Groebner basis of the submodule generated by
/// `gens`, optionally truncated at a total degree bound.
pub fn groebner_basis_bounded<K: Field>(
    ambient: &FreeModuleHandle<K>,
    gens: &[ModuleElement<K>],
    bound: Option<i64>,
    ctx: &GbContext,
) -> Result<GroebnerBasis<K>> {
    if let Some(store) = &ctx.store {
        let key = cache_key(ambient, gens, bound);
        if let Some(payload) = store.load(&key) {
            if let Ok(gb) = deserialize_basis(ambient, &payload) {
                ctx.cache_hits.fetch_add(1, AtomicOrdering::Relaxed);
                return Ok(gb);
            }
        }
        ctx.cache_misses.fetch_add(1, AtomicOrdering::Relaxed);
        let gb = compute_basis(ambient, gens, bound)?;
        store.store(&key, &serialize_basis(&gb));
        return Ok(gb);
    }
    compute_basis(ambient, gens, bound)
}

/// Full (untruncated) autoreduced Groebner basis.
pub fn groebner_basis<K: Field>(
    ambient: &FreeModuleHandle<K>,
    gens: &[ModuleElement<K>],
    ctx: &GbContext,
) -> Result<GroebnerBasis<K>> {
    groebner_basis_bounded(ambient, gens, None, ctx)
}

/// Tracked run used by the syzygy computation: criteria off, every
/// same-component pair reduced, syzygies of the generators harvested from the
/// zero reductions (Schreyer).
pub(crate) fn buchberger_tracked<K: Field>(
    ambient: &FreeModuleHandle<K>,
    gens: &[ModuleElement<K>],
    bound: Option<i64>,
) -> Result<EngineOutput<K>> {
    let mut engine = Engine::new(ambient, true, bound);
    engine.run(gens)?;
    Ok(EngineOutput { syzygies: engine.syzygies })
}

impl<K: Field> GroebnerBasis<K> {
    /// Full normal form of `v`: no term of the result is divisible by a lead
    /// term of the basis, and `v - result` lies in the submodule.
    pub fn normal_form(&self, v: &ModuleElement<K>) -> Result<ModuleElement<K>> {
        if !same_module(&v.ambient, &self.ambient) {
            return Err(Error::AmbientMismatch);
        }
        let leads: Vec<LeadTerm<K>> = self.elements.iter().map(|e| e.lead().unwrap()).collect();
        let views = reducer_views(&self.elements, &leads);
        Ok(reduce_full(v, &views, None))
    }

    pub fn contains(&self, v: &ModuleElement<K>) -> Result<bool> {
        Ok(self.normal_form(v)?.is_zero())
    }

    /// Minimal monomial generators of the lead-term module, as
    /// (component, monomial) pairs sorted canonically.
    pub fn lead_module(&self) -> Vec<(usize, Monomial)> {
        let mut minimal: Vec<(usize, Monomial)> = Vec::new();
        'next: for e in &self.elements {
            let lt = e.lead().expect("basis elements are nonzero");
            let (c, m) = (lt.comp, lt.mono);
            for (c2, m2) in &minimal {
                if *c2 == c && m2.divides(&m) {
                    continue 'next;
                }
            }
            minimal.retain(|(c2, m2)| !(*c2 == c && m.divides(m2)));
            minimal.push((c, m));
        }
        minimal.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| a.1.compare(&b.1, self.ambient.ring.order)));
        minimal
    }

    /// Buchberger post-verification: every S-vector of the basis reduces to
    /// zero (through the truncation bound, when one is set).
    pub fn verify(&self) -> Result<bool> {
        let field = self.ambient.ring.field.clone();
        let leads: Vec<LeadTerm<K>> = self.elements.iter().map(|e| e.lead().unwrap()).collect();
        let views = reducer_views(&self.elements, &leads);
        let one = field.one();
        for i in 0..self.elements.len() {
            for j in (i + 1)..self.elements.len() {
                if leads[i].comp != leads[j].comp {
                    continue;
                }
                let lcm = leads[i].mono.lcm(&leads[j].mono, &self.ambient.ring.weights);
                if let Some(b) = self.degree_bound {
                    if lcm.degree() + self.ambient.shifts[leads[i].comp] > b {
                        continue;
                    }
                }
                let di = leads[i].mono.divide(&lcm).unwrap();
                let dj = leads[j].mono.divide(&lcm).unwrap();
                let mut spoly = self.elements[i].mul_term(&di, &one);
                spoly.sub_mul_term(&self.elements[j], &dj, &one);
                if !reduce_full(&spoly, &views, None).is_zero() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// Free function mirroring [`GroebnerBasis::normal_form`].
pub fn normal_form<K: Field>(v: &ModuleElement<K>, gb: &GroebnerBasis<K>) -> Result<ModuleElement<K>> {
    gb.normal_form(v)
}

// ---------------------------------------------------------------------------
// Cache keys and canonical serialization.
// ---------------------------------------------------------------------------

/// Canonical text of a module element: coefficients scaled to primitive
/// integers, sparse `index: poly` pieces joined by `|`.
pub fn element_text<K: Field>(e: &ModuleElement<K>) -> String {
    let field = &e.ambient.ring.field;
    let scale = field.integer_scaling(e.components.iter().flat_map(|p| p.terms().iter().map(|(_, c)| c)));
    let mut s = String::new();
    let mut first = true;
    for (i, p) in e.components.iter().enumerate() {
        if p.is_zero() {
            continue;
        }
        if !first {
            s.push_str(" | ");
        }
        first = false;
        let _ = write!(s, "{i}: {}", polynomial_text_scaled(p, &scale));
    }
    if first {
        s.push('0');
    }
    s
}

fn parse_element<K: Field>(ambient: &FreeModuleHandle<K>, line: &str) -> Result<ModuleElement<K>> {
    let mut v = ModuleElement::zero(ambient);
    let line = line.trim();
    if line == "0" {
        return Ok(v);
    }
    for piece in line.split(" | ") {
        let (idx, poly) = piece
            .split_once(':')
            .ok_or_else(|| Error::Parse { pos: 0, msg: String::from("missing component index") })?;
        let idx: usize = idx
            .trim()
            .parse()
            .map_err(|_| Error::Parse { pos: 0, msg: String::from("bad component index") })?;
        if idx >= ambient.rank() {
            return Err(Error::Parse { pos: 0, msg: String::from("component index out of range") });
        }
        v.components[idx] = parse_polynomial(&ambient.ring, poly.trim())?;
    }
    Ok(v)
}

fn cache_key<K: Field>(ambient: &FreeModuleHandle<K>, gens: &[ModuleElement<K>], bound: Option<i64>) -> String {
    let mut hasher = Sha256::new();
    hasher.update(b"koszul-gb-v1|");
    hasher.update(ambient.ring.spec().canonical_text().as_bytes());
    let mut shifts = String::from("|shifts=");
    for s in &ambient.shifts {
        let _ = write!(shifts, "{s},");
    }
    hasher.update(shifts.as_bytes());
    match bound {
        Some(b) => hasher.update(alloc::format!("|bound={b}|").as_bytes()),
        None => hasher.update(b"|bound=none|"),
    }
    let mut gen_texts: Vec<String> = gens.iter().map(element_text).collect();
    gen_texts.sort();
    for t in &gen_texts {
        hasher.update(t.as_bytes());
        hasher.update(b"\n");
    }
    let digest = hasher.finalize();
    let mut hex = String::with_capacity(64);
    for b in digest {
        let _ = write!(hex, "{b:02x}");
    }
    hex
}

/// Canonical text serialization of a basis (the cache payload format).
pub fn serialize_basis<K: Field>(gb: &GroebnerBasis<K>) -> String {
    let mut s = String::from("koszul-gb v1\n");
    let _ = writeln!(s, "rank {}", gb.ambient.rank());
    let mut shifts = String::from("shifts");
    for sh in &gb.ambient.shifts {
        let _ = write!(shifts, " {sh}");
    }
    let _ = writeln!(s, "{shifts}");
    match gb.degree_bound {
        Some(b) => {
            let _ = writeln!(s, "bound {b}");
        }
        None => {
            let _ = writeln!(s, "bound none");
        }
    }
    let _ = writeln!(s, "elements {}", gb.elements.len());
    for e in &gb.elements {
        let _ = writeln!(s, "{}", element_text(e));
    }
    s
}

/// Parse a serialized basis back against a known ambient module. Elements are
/// re-normalized to monic form (the serialization is integer-scaled).
pub fn deserialize_basis<K: Field>(ambient: &FreeModuleHandle<K>, payload: &str) -> Result<GroebnerBasis<K>> {
    let bad = |msg: &str| Error::Parse { pos: 0, msg: String::from(msg) };
    let mut lines = payload.lines();
    if lines.next() != Some("koszul-gb v1") {
        return Err(bad("bad magic"));
    }
    let rank: usize = lines
        .next()
        .and_then(|l| l.strip_prefix("rank "))
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| bad("bad rank"))?;
    if rank != ambient.rank() {
        return Err(bad("rank mismatch"));
    }
    let shifts: Vec<i64> = lines
        .next()
        .and_then(|l| l.strip_prefix("shifts"))
        .ok_or_else(|| bad("bad shifts"))?
        .split_whitespace()
        .map(|t| t.parse::<i64>())
        .collect::<core::result::Result<_, _>>()
        .map_err(|_| bad("bad shift"))?;
    if shifts != ambient.shifts {
        return Err(bad("shift mismatch"));
    }
    let degree_bound = match lines
        .next()
        .and_then(|l| l.strip_prefix("bound "))
        .ok_or_else(|| bad("bad bound"))?
    {
        "none" => None,
        b => Some(b.parse::<i64>().map_err(|_| bad("bad bound"))?),
    };
    let count: usize = lines
        .next()
        .and_then(|l| l.strip_prefix("elements "))
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| bad("bad count"))?;
    let mut elements = Vec::with_capacity(count);
    for _ in 0..count {
        let line = lines.next().ok_or_else(|| bad("missing element"))?;
        elements.push(parse_element(ambient, line)?.monic());
    }
    Ok(GroebnerBasis {
        ambient: ambient.clone(),
        elements,
        order: ModuleOrder::TermOverPosition,
        autoreduced: true,
        degree_bound,
    })
}

/// In-memory store, handy in tests.
#[cfg(feature = "std")]
pub struct MemoryStore {
    map: std::sync::Mutex<alloc::collections::BTreeMap<String, String>>,
}

#[cfg(feature = "std")]
impl MemoryStore {
    pub fn new() -> Self {
        MemoryStore { map: std::sync::Mutex::new(alloc::collections::BTreeMap::new()) }
    }

    pub fn len(&self) -> usize {
        self.map.lock().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

#[cfg(feature = "std")]
impl Default for MemoryStore {
    fn default() -> Self {
        Self::new()
    }
}

#[cfg(feature = "std")]
impl GbStore for MemoryStore {
    fn load(&self, key: &str) -> Option<String> {
        self.map.lock().unwrap().get(key).cloned()
    }

    fn store(&self, key: &str, payload: &str) {
        self.map.lock().unwrap().insert(key.to_string(), payload.to_string());
    }
}
