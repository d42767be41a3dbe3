//! Exhaustive censuses of small structures on the carrier `{0, .., n-1}` and
//! isomorphism testing.
//!
//! Left restriction semigroupoids and constellations are generated by fixing
//! an idempotent plus map first, then filling the composition table cell by
//! cell in row-major order. A partial table is abandoned as soon as some
//! associativity instance whose cells are all filled fails. Cells forced by
//! the plus map (`s^+ s = s`, and for constellations `x^+ x = x`) are only
//! given their forced value.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::constellation::{check_constellation, check_locally_inductive, OrderedConstellation};
use crate::error::Error;
use crate::order::OrderRelation;
use crate::restriction::{check_left_restriction, check_semigroupoid, LeftRestrictionSemigroupoid, RestrictionStructure};
use crate::table::{Elem, PartialTable};

/// Largest carrier enumerated unless the caller raises it.
pub const DEFAULT_MAX_SIZE: usize = 4;

fn check_size(n: usize, max_size: usize) -> Result<(), Error> {
    if n > max_size {
        return Err(Error::CapExceeded {
            requested: n as u128,
            cap: max_size as u128,
        });
    }
    if n == 0 {
        return Err(Error::EmptyCarrier);
    }
    Ok(())
}

/// Maps `p` on `0..n` with `p(p(x)) = p(x)`, in lexicographic order.
pub fn idempotent_maps(n: usize) -> Vec<Vec<Elem>> {
    let mut out = Vec::new();
    let mut p = vec![0; n];
    fn go(k: usize, p: &mut Vec<Elem>, out: &mut Vec<Vec<Elem>>) {
        let n = p.len();
        if k == n {
            if (0..n).all(|x| p[p[x]] == p[x]) {
                out.push(p.clone());
            }
            return;
        }
        for v in 0..n {
            p[k] = v;
            go(k + 1, p, out);
        }
    }
    go(0, &mut p, &mut out);
    out
}

/// `None` while a cell is unfilled, `Some(None)` once it is known undefined.
type Cells = Vec<Option<Option<Elem>>>;

#[derive(Clone, Copy, PartialEq, Eq)]
enum Mode {
    Semigroupoid,
    Constellation,
}

struct Search {
    n: usize,
    mode: Mode,
    /// Allowed values per cell, `None` meaning undefined.
    choices: Vec<Vec<Option<Elem>>>,
    cells: Cells,
    found: Vec<PartialTable>,
}

impl Search {
    fn new(n: usize, mode: Mode, plus: Option<&[Elem]>) -> Self {
        let all: Vec<Option<Elem>> = core::iter::once(None).chain((0..n).map(Some)).collect();
        let mut choices = vec![all; n * n];
        if let Some(p) = plus {
            let projections: Vec<Elem> = (0..n).filter(|&x| p.contains(&x)).collect();
            for x in 0..n {
                choices[p[x] * n + x] = vec![Some(x)];
            }
            if mode == Mode::Constellation {
                for &e in &projections {
                    for x in 0..n {
                        if p[x] != e {
                            choices[e * n + x].retain(|&v| v != Some(x));
                        }
                        choices[x * n + e].retain(|&v| v.is_none() || v == Some(x));
                    }
                }
            }
        }
        Self {
            n,
            mode,
            choices,
            cells: vec![None; n * n],
            found: Vec::new(),
        }
    }

    #[inline]
    fn get(&self, a: Elem, b: Elem) -> Option<Option<Elem>> {
        self.cells[a * self.n + b]
    }

    /// No fully determined associativity instance fails.
    fn consistent(&self) -> bool {
        let n = self.n;
        for x in 0..n {
            for y in 0..n {
                let Some(xy) = self.get(x, y) else {
                    continue;
                };
                for z in 0..n {
                    let Some(yz) = self.get(y, z) else {
                        continue;
                    };
                    let ok = match self.mode {
                        Mode::Semigroupoid => self.triple_semigroupoid(x, z, xy, yz),
                        Mode::Constellation => self.triple_constellation(x, z, xy, yz),
                    };
                    if !ok {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn triple_semigroupoid(&self, x: Elem, z: Elem, xy: Option<Elem>, yz: Option<Elem>) -> bool {
        let xy_z = xy.map(|v| self.get(v, z));
        let x_yz = yz.map(|v| self.get(x, v));
        let defined = |c: Option<Option<Option<Elem>>>| matches!(c, Some(Some(Some(_))));
        let triggered = (xy.is_some() && yz.is_some()) || (xy.is_some() && defined(xy_z)) || (yz.is_some() && defined(x_yz));
        if !triggered {
            return true;
        }
        if xy.is_none() || yz.is_none() {
            return false;
        }
        match (xy_z.flatten(), x_yz.flatten()) {
            (Some(None), _) | (_, Some(None)) => false,
            (Some(a), Some(b)) => a == b,
            _ => true,
        }
    }

    fn triple_constellation(&self, x: Elem, z: Elem, xy: Option<Elem>, yz: Option<Elem>) -> bool {
        let lhs = xy.is_some() && yz.is_some();
        let x_yz = yz.map(|v| self.get(x, v));
        if let Some(Some(c)) = x_yz {
            if lhs != c.is_some() {
                return false;
            }
        }
        if lhs {
            if let Some(left) = self.get(xy.unwrap(), z) {
                if left.is_none() {
                    return false;
                }
                if let Some(Some(right)) = x_yz {
                    if right != left {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn table(&self) -> PartialTable {
        let mut t = PartialTable::numbered(self.n).expect("n > 0");
        for a in 0..self.n {
            for b in 0..self.n {
                t.set(a, b, self.get(a, b).flatten());
            }
        }
        t
    }

    fn run(&mut self, k: usize) {
        if k == self.cells.len() {
            self.found.push(self.table());
            return;
        }
        for i in 0..self.choices[k].len() {
            self.cells[k] = Some(self.choices[k][i]);
            if self.consistent() {
                self.run(k + 1);
            }
        }
        self.cells[k] = None;
    }
}

/// Every semigroupoid table on `n` elements.
pub fn enumerate_semigroupoid_tables(n: usize, max_size: usize) -> Result<Vec<PartialTable>, Error> {
    check_size(n, max_size)?;
    let mut s = Search::new(n, Mode::Semigroupoid, None);
    s.run(0);
    debug_assert!(s.found.iter().all(|t| check_semigroupoid(t).is_valid()));
    Ok(s.found)
}

/// Every left restriction semigroupoid on `n` elements, ordered by plus map
/// and then by table.
pub fn enumerate_lr_semigroupoids(n: usize, max_size: usize) -> Result<Vec<LeftRestrictionSemigroupoid>, Error> {
    check_size(n, max_size)?;
    let mut out = Vec::new();
    for p in idempotent_maps(n) {
        let mut s = Search::new(n, Mode::Semigroupoid, Some(&p));
        s.run(0);
        let plus = RestrictionStructure::new(p, n)?;
        for t in s.found {
            if check_left_restriction(&t, &plus).is_valid() {
                out.push(LeftRestrictionSemigroupoid::new(t, plus.clone())?);
            }
        }
    }
    Ok(out)
}

/// Every li-constellation on `n` elements, ordered by plus map, then table,
/// then order.
pub fn enumerate_li_constellations(n: usize, max_size: usize) -> Result<Vec<OrderedConstellation>, Error> {
    check_size(n, max_size)?;
    let orders = OrderRelation::all_partial_orders(n);
    let mut out = Vec::new();
    for p in idempotent_maps(n) {
        let mut s = Search::new(n, Mode::Constellation, Some(&p));
        s.run(0);
        let plus = RestrictionStructure::new(p, n)?;
        for t in s.found {
            let base = OrderedConstellation::new(t, plus.clone(), OrderRelation::discrete(n))?;
            if !check_constellation(&base).is_valid() {
                continue;
            }
            let (t, plus, _) = base.into_parts();
            for ord in &orders {
                let c = OrderedConstellation::new(t.clone(), plus.clone(), ord.clone())?;
                if check_locally_inductive(&c).is_valid() {
                    out.push(c);
                }
            }
        }
    }
    Ok(out)
}

/// A finite structure seen as a binary partial operation, an optional unary
/// operation and a binary relation. Labels are ignored.
pub trait Signature {
    fn size(&self) -> usize;
    fn op(&self, a: Elem, b: Elem) -> Option<Elem>;
    fn unary(&self, _a: Elem) -> Option<Elem> {
        None
    }
    fn rel(&self, _a: Elem, _b: Elem) -> bool {
        false
    }
}

impl Signature for PartialTable {
    fn size(&self) -> usize {
        self.len()
    }
    fn op(&self, a: Elem, b: Elem) -> Option<Elem> {
        self.get(a, b)
    }
}

impl Signature for LeftRestrictionSemigroupoid {
    fn size(&self) -> usize {
        self.len()
    }
    fn op(&self, a: Elem, b: Elem) -> Option<Elem> {
        self.product(a, b)
    }
    fn unary(&self, a: Elem) -> Option<Elem> {
        Some(self.plus(a))
    }
}

impl Signature for OrderedConstellation {
    fn size(&self) -> usize {
        self.len()
    }
    fn op(&self, a: Elem, b: Elem) -> Option<Elem> {
        self.product(a, b)
    }
    fn unary(&self, a: Elem) -> Option<Elem> {
        Some(self.plus(a))
    }
    fn rel(&self, a: Elem, b: Elem) -> bool {
        self.le(a, b)
    }
}

/// A bijection `pi` with `pi(a op b) = pi(a) op' pi(b)` (both sides defined
/// together), `pi(a^+) = pi(a)^+` and `a <= b` iff `pi(a) <= pi(b)`.
pub fn find_isomorphism<S: Signature>(a: &S, b: &S) -> Option<Vec<Elem>> {
    let n = a.size();
    if n != b.size() {
        return None;
    }
    let mut pi: Vec<Option<Elem>> = vec![None; n];
    let mut used = vec![false; n];
    /// Checks every constraint that became decidable when `k` was mapped.
    fn fits<S: Signature>(a: &S, b: &S, pi: &[Option<Elem>], k: Elem) -> bool {
        let p = |x: Elem| pi[x].unwrap();
        let image_ok = |x: Elem, y: Elem| match a.op(x, y) {
            None => b.op(p(x), p(y)).is_none(),
            Some(v) => match pi[v] {
                Some(pv) => b.op(p(x), p(y)) == Some(pv),
                None => b.op(p(x), p(y)).is_some(),
            },
        };
        let unary_ok = |x: Elem| match a.unary(x) {
            Some(u) => pi[u].is_none() || b.unary(p(x)) == Some(p(u)),
            None => true,
        };
        if !unary_ok(k) {
            return false;
        }
        for x in 0..k {
            if a.unary(x) == Some(k) && !unary_ok(x) {
                return false;
            }
            for y in 0..k {
                if a.op(x, y) == Some(k) && !image_ok(x, y) {
                    return false;
                }
            }
        }
        for x in 0..=k {
            for (l, r) in [(x, k), (k, x)] {
                if a.rel(l, r) != b.rel(p(l), p(r)) || !image_ok(l, r) {
                    return false;
                }
            }
        }
        true
    }
    fn go<S: Signature>(a: &S, b: &S, k: usize, pi: &mut Vec<Option<Elem>>, used: &mut Vec<bool>) -> bool {
        if k == pi.len() {
            return true;
        }
        for v in 0..pi.len() {
            if used[v] {
                continue;
            }
            pi[k] = Some(v);
            used[v] = true;
            if fits(a, b, pi, k) && go(a, b, k + 1, pi, used) {
                return true;
            }
            used[v] = false;
        }
        pi[k] = None;
        false
    }
    if go(a, b, 0, &mut pi, &mut used) {
        Some(pi.into_iter().map(|v| v.unwrap()).collect())
    } else {
        None
    }
}

pub fn are_isomorphic<S: Signature>(a: &S, b: &S) -> bool {
    find_isomorphism(a, b).is_some()
}

fn encode<S: Signature>(s: &S, perm: &[Elem]) -> Vec<usize> {
    let n = s.size();
    let mut inv = vec![0; n];
    for (i, &p) in perm.iter().enumerate() {
        inv[p] = i;
    }
    let mut out = Vec::with_capacity(2 * n * n + n);
    for a in 0..n {
        for b in 0..n {
            let (x, y) = (inv[a], inv[b]);
            out.push(s.op(x, y).map_or(0, |v| perm[v] + 1));
            out.push(s.rel(x, y) as usize);
        }
        out.push(s.unary(inv[a]).map_or(0, |v| perm[v] + 1));
    }
    out
}

fn permutations(n: usize) -> Vec<Vec<Elem>> {
    let mut out = Vec::new();
    let mut p: Vec<Elem> = (0..n).collect();
    fn heap(k: usize, p: &mut Vec<Elem>, out: &mut Vec<Vec<Elem>>) {
        if k <= 1 {
            out.push(p.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, p, out);
            let j = if k.is_multiple_of(2) { i } else { 0 };
            p.swap(j, k - 1);
        }
    }
    heap(n, &mut p, &mut out);
    out
}

/// The lexicographically least encoding over all relabellings; equal keys
/// mean isomorphic structures.
pub fn canonical_key<S: Signature>(s: &S) -> Vec<usize> {
    permutations(s.size())
        .iter()
        .map(|p| encode(s, p))
        .min()
        .unwrap_or_default()
}

/// Keeps the first structure of each isomorphism class, in input order.
pub fn dedup_up_to_iso<S: Signature>(items: Vec<S>) -> Vec<S> {
    let mut seen = BTreeSet::new();
    items.into_iter().filter(|s| seen.insert(canonical_key(s))).collect()
}
