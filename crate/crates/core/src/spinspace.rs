//! The tensor space of a spin chain: 0/1 words, vectors with exact rational
//! coefficients, sparse operators, and operator-valued polynomials.
//!
//! Conventions fixed here and used everywhere else:
//! * a word is read left to right, position 1 first (most significant bit);
//! * the basis is ordered by the integer value of the word;
//! * `f.after(g)` composes with `g` applied first;
//! * auxiliary sites, when present, are the leading positions of a word.

use crate::exactalg::{MultiPoly, RatFunc, VarSet};
use crate::perm::Permutation;
use serde_json::{json, Value};
use std::collections::BTreeMap;
use std::fmt;

/// A 0/1 word of length ≤ 32; position 1 is the most significant bit.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct SpinWord {
    len: u8,
    bits: u32,
}

impl SpinWord {
    pub fn new(len: usize, bits: u32) -> SpinWord {
        assert!(len <= 32 && (len == 32 || bits < (1u32 << len)));
        SpinWord {
            len: len as u8,
            bits,
        }
    }

    pub fn parse(s: &str) -> SpinWord {
        assert!(!s.is_empty() && s.len() <= 32, "bad word length");
        let mut bits = 0u32;
        for c in s.chars() {
            bits <<= 1;
            match c {
                '0' => {}
                '1' => bits |= 1,
                _ => panic!("bad word character {c}"),
            }
        }
        SpinWord {
            len: s.len() as u8,
            bits,
        }
    }

    /// Word with ones exactly at the 1-based `positions`.
    pub fn from_ones(len: usize, positions: &[usize]) -> SpinWord {
        let mut w = SpinWord::new(len, 0);
        for &p in positions {
            w = w.with_bit(p, 1);
        }
        w
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn value(&self) -> u32 {
        self.bits
    }

    /// Bit at 1-based position `p`.
    pub fn bit(&self, p: usize) -> u8 {
        assert!(p >= 1 && p <= self.len());
        ((self.bits >> (self.len() - p)) & 1) as u8
    }

    pub fn with_bit(&self, p: usize, v: u8) -> SpinWord {
        assert!(p >= 1 && p <= self.len());
        let mask = 1u32 << (self.len() - p);
        let bits = match v {
            0 => self.bits & !mask,
            1 => self.bits | mask,
            _ => panic!("bad bit"),
        };
        SpinWord {
            len: self.len,
            bits,
        }
    }

    /// Number of ones.
    pub fn weight(&self) -> usize {
        self.bits.count_ones() as usize
    }

    /// 1-based positions of the ones, ascending.
    pub fn ones(&self) -> Vec<usize> {
        (1..=self.len()).filter(|&p| self.bit(p) == 1).collect()
    }

    /// 1-based positions of the zeros, ascending.
    pub fn zeros(&self) -> Vec<usize> {
        (1..=self.len()).filter(|&p| self.bit(p) == 0).collect()
    }

    /// Concatenation, `self` occupying the leading positions.
    pub fn concat(&self, other: &SpinWord) -> SpinWord {
        assert!(self.len() + other.len() <= 32);
        SpinWord {
            len: self.len + other.len,
            bits: (self.bits << other.len()) | other.bits,
        }
    }

    /// The first `k` positions.
    pub fn head(&self, k: usize) -> SpinWord {
        assert!(k <= self.len());
        SpinWord {
            len: k as u8,
            bits: self.bits >> (self.len() - k),
        }
    }

    /// Everything after the first `k` positions.
    pub fn tail(&self, k: usize) -> SpinWord {
        assert!(k <= self.len());
        let rem = self.len() - k;
        SpinWord {
            len: rem as u8,
            bits: self.bits & ((1u32 << rem).wrapping_sub(1)),
        }
    }

    /// Positional action: position `j` of the result reads position
    /// `w^{-1}(j)` of `self`.
    pub fn act(&self, w: &Permutation) -> SpinWord {
        assert_eq!(w.n(), self.len());
        let winv = w.inverse();
        let mut out = SpinWord::new(self.len(), 0);
        for j in 1..=self.len() {
            out = out.with_bit(j, self.bit(winv.apply(j)));
        }
        out
    }

    /// Swap positions `i` and `i+1`.
    pub fn swapped(&self, i: usize) -> SpinWord {
        let a = self.bit(i);
        let b = self.bit(i + 1);
        self.with_bit(i, b).with_bit(i + 1, a)
    }

    /// All words of the given length, ordered by integer value.
    pub fn all(len: usize) -> Vec<SpinWord> {
        assert!(len <= 20, "refusing to enumerate 2^len for len > 20");
        (0..(1u32 << len)).map(|b| SpinWord::new(len, b)).collect()
    }

    /// All words of the given length and weight, ordered by integer value.
    pub fn all_weight(len: usize, k: usize) -> Vec<SpinWord> {
        SpinWord::all(len)
            .into_iter()
            .filter(|w| w.weight() == k)
            .collect()
    }
}

impl fmt::Display for SpinWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for p in 1..=self.len() {
            write!(f, "{}", self.bit(p))?;
        }
        Ok(())
    }
}

/// A vector in the tensor space, sparse over basis words.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TensorVector {
    vs: VarSet,
    len: u8,
    coeffs: BTreeMap<SpinWord, RatFunc>,
}

impl TensorVector {
    pub fn zero(vs: &VarSet, len: usize) -> TensorVector {
        TensorVector {
            vs: vs.clone(),
            len: len as u8,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn basis(vs: &VarSet, word: SpinWord) -> TensorVector {
        let mut v = TensorVector::zero(vs, word.len());
        v.set(word, RatFunc::one(vs));
        v
    }

    pub fn vars(&self) -> &VarSet {
        &self.vs
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn get(&self, w: &SpinWord) -> RatFunc {
        self.coeffs
            .get(w)
            .cloned()
            .unwrap_or_else(|| RatFunc::zero(&self.vs))
    }

    pub fn set(&mut self, w: SpinWord, f: RatFunc) {
        assert_eq!(w.len(), self.len());
        if f.is_zero() {
            self.coeffs.remove(&w);
        } else {
            self.coeffs.insert(w, f);
        }
    }

    pub fn add_to(&mut self, w: SpinWord, f: RatFunc) {
        let s = self.get(&w).add(&f);
        self.set(w, s);
    }

    pub fn iter(&self) -> impl Iterator<Item = (&SpinWord, &RatFunc)> {
        self.coeffs.iter()
    }

    pub fn support(&self) -> Vec<SpinWord> {
        self.coeffs.keys().cloned().collect()
    }

    pub fn add(&self, other: &TensorVector) -> TensorVector {
        assert_eq!(self.len, other.len);
        let mut r = self.clone();
        for (w, f) in &other.coeffs {
            r.add_to(*w, f.clone());
        }
        r
    }

    pub fn sub(&self, other: &TensorVector) -> TensorVector {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> TensorVector {
        let mut r = self.clone();
        for f in r.coeffs.values_mut() {
            *f = f.neg();
        }
        r
    }

    pub fn scale(&self, f: &RatFunc) -> TensorVector {
        let mut r = TensorVector::zero(&self.vs, self.len());
        for (w, g) in &self.coeffs {
            r.set(*w, g.mul(f));
        }
        r
    }

    /// Keep only words with the given number of ones.
    pub fn weight_project(&self, k: usize) -> TensorVector {
        let mut r = TensorVector::zero(&self.vs, self.len());
        for (w, f) in &self.coeffs {
            if w.weight() == k {
                r.set(*w, f.clone());
            }
        }
        r
    }

    /// Relabel basis words by the positional action of `w`.
    pub fn permute_basis(&self, w: &Permutation) -> TensorVector {
        let mut r = TensorVector::zero(&self.vs, self.len());
        for (u, f) in &self.coeffs {
            r.set(u.act(w), f.clone());
        }
        r
    }

    /// Apply a `t`-relabeling to every coefficient.
    pub fn permute_coeffs(&self, tmap: &[u16]) -> TensorVector {
        let mut r = TensorVector::zero(&self.vs, self.len());
        for (u, f) in &self.coeffs {
            r.set(*u, f.permute_ts(tmap));
        }
        r
    }

    /// JSON object keyed by words as bit strings.
    pub fn to_json(&self) -> Value {
        let mut obj = serde_json::Map::new();
        for (w, f) in &self.coeffs {
            obj.insert(w.to_string(), Value::String(f.to_string()));
        }
        Value::Object(obj)
    }
}

/// A sparse linear operator on the tensor space, stored column-major.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SparseOperator {
    vs: VarSet,
    len: u8,
    cols: BTreeMap<SpinWord, BTreeMap<SpinWord, RatFunc>>,
}

impl SparseOperator {
    pub fn zero(vs: &VarSet, len: usize) -> SparseOperator {
        SparseOperator {
            vs: vs.clone(),
            len: len as u8,
            cols: BTreeMap::new(),
        }
    }

    pub fn identity(vs: &VarSet, len: usize) -> SparseOperator {
        let mut op = SparseOperator::zero(vs, len);
        for w in SpinWord::all(len) {
            op.set(w, w, RatFunc::one(vs));
        }
        op
    }

    pub fn vars(&self) -> &VarSet {
        &self.vs
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn is_zero(&self) -> bool {
        self.cols.is_empty()
    }

    pub fn entry(&self, row: &SpinWord, col: &SpinWord) -> RatFunc {
        self.cols
            .get(col)
            .and_then(|c| c.get(row))
            .cloned()
            .unwrap_or_else(|| RatFunc::zero(&self.vs))
    }

    pub fn set(&mut self, row: SpinWord, col: SpinWord, f: RatFunc) {
        assert_eq!(row.len(), self.len());
        assert_eq!(col.len(), self.len());
        if f.is_zero() {
            if let Some(c) = self.cols.get_mut(&col) {
                c.remove(&row);
                if c.is_empty() {
                    self.cols.remove(&col);
                }
            }
        } else {
            self.cols.entry(col).or_default().insert(row, f);
        }
    }

    pub fn add_to(&mut self, row: SpinWord, col: SpinWord, f: RatFunc) {
        let s = self.entry(&row, &col).add(&f);
        self.set(row, col, s);
    }

    /// All nonzero entries sorted by (row, column).
    pub fn entries(&self) -> Vec<(SpinWord, SpinWord, RatFunc)> {
        let mut v: Vec<(SpinWord, SpinWord, RatFunc)> = Vec::new();
        for (col, c) in &self.cols {
            for (row, f) in c {
                v.push((*row, *col, f.clone()));
            }
        }
        v.sort_by_key(|(r, c, _)| (*r, *c));
        v
    }

    pub fn apply(&self, v: &TensorVector) -> TensorVector {
        assert_eq!(self.len(), v.len());
        let mut r = TensorVector::zero(&self.vs, self.len());
        for (col, f) in v.iter() {
            if let Some(c) = self.cols.get(col) {
                for (row, g) in c {
                    r.add_to(*row, g.mul(f));
                }
            }
        }
        r
    }

    /// Composition `self ∘ other` (apply `other` first).
    pub fn after(&self, other: &SparseOperator) -> SparseOperator {
        assert_eq!(self.len(), other.len());
        let mut r = SparseOperator::zero(&self.vs, self.len());
        for (col, c) in &other.cols {
            for (mid, g) in c {
                if let Some(sc) = self.cols.get(mid) {
                    for (row, f) in sc {
                        r.add_to(*row, *col, f.mul(g));
                    }
                }
            }
        }
        r
    }

    pub fn add(&self, other: &SparseOperator) -> SparseOperator {
        assert_eq!(self.len(), other.len());
        let mut r = self.clone();
        for (col, c) in &other.cols {
            for (row, f) in c {
                r.add_to(*row, *col, f.clone());
            }
        }
        r
    }

    pub fn sub(&self, other: &SparseOperator) -> SparseOperator {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> SparseOperator {
        let mut r = self.clone();
        for c in r.cols.values_mut() {
            for f in c.values_mut() {
                *f = f.neg();
            }
        }
        r
    }

    pub fn scale(&self, f: &RatFunc) -> SparseOperator {
        let mut r = SparseOperator::zero(&self.vs, self.len());
        for (col, c) in &self.cols {
            for (row, g) in c {
                r.set(*row, *col, g.mul(f));
            }
        }
        r
    }

    /// Restrict to the block mapping weight `in_w` to weight `out_w`.
    pub fn weight_block(&self, out_w: usize, in_w: usize) -> SparseOperator {
        let mut r = SparseOperator::zero(&self.vs, self.len());
        for (col, c) in &self.cols {
            if col.weight() != in_w {
                continue;
            }
            for (row, f) in c {
                if row.weight() == out_w {
                    r.set(*row, *col, f.clone());
                }
            }
        }
        r
    }

    /// Embed a 4×4 two-site matrix at positions (`site_a`, `site_b`); the
    /// pair `(a, b)` of bits indexes rows/columns as `2a + b`.
    pub fn embed_two_site(
        vs: &VarSet,
        len: usize,
        site_a: usize,
        site_b: usize,
        local: &[[RatFunc; 4]; 4],
    ) -> SparseOperator {
        assert!(site_a != site_b && site_a >= 1 && site_b >= 1 && site_a <= len && site_b <= len);
        let mut op = SparseOperator::zero(vs, len);
        for col in SpinWord::all(len) {
            let a = col.bit(site_a);
            let b = col.bit(site_b);
            let in_idx = (2 * a + b) as usize;
            for out_idx in 0..4 {
                let f = &local[out_idx][in_idx];
                if f.is_zero() {
                    continue;
                }
                let oa = (out_idx >> 1) as u8;
                let ob = (out_idx & 1) as u8;
                let row = col.with_bit(site_a, oa).with_bit(site_b, ob);
                op.add_to(row, col, f.clone());
            }
        }
        op
    }

    /// Embed a 2×2 one-site matrix at a position.
    pub fn embed_one_site(
        vs: &VarSet,
        len: usize,
        site: usize,
        local: &[[RatFunc; 2]; 2],
    ) -> SparseOperator {
        assert!(site >= 1 && site <= len);
        let mut op = SparseOperator::zero(vs, len);
        for col in SpinWord::all(len) {
            let b = col.bit(site) as usize;
            for (out, lrow) in local.iter().enumerate() {
                let f = &lrow[b];
                if f.is_zero() {
                    continue;
                }
                let row = col.with_bit(site, out as u8);
                op.add_to(row, col, f.clone());
            }
        }
        op
    }

    /// Extract the block with the leading (auxiliary) bit pinned to
    /// `a_out` on rows and `a_in` on columns; the result acts on the
    /// remaining `len - 1` sites.
    pub fn aux_block(&self, a_out: u8, a_in: u8) -> SparseOperator {
        let inner = self.len() - 1;
        let mut r = SparseOperator::zero(&self.vs, inner);
        for (col, c) in &self.cols {
            if col.bit(1) != a_in {
                continue;
            }
            for (row, f) in c {
                if row.bit(1) == a_out {
                    r.set(row.tail(1), col.tail(1), f.clone());
                }
            }
        }
        r
    }

    /// Apply a function to every entry (dropping resulting zeros).
    pub fn map_entries(&self, f: impl Fn(&RatFunc) -> RatFunc) -> SparseOperator {
        let mut r = SparseOperator::zero(&self.vs, self.len());
        for (col, c) in &self.cols {
            for (row, g) in c {
                r.set(*row, *col, f(g));
            }
        }
        r
    }

    /// Substitute a non-`t` variable in every entry.
    pub fn subst_var(&self, v: usize, p: &MultiPoly) -> SparseOperator {
        self.map_entries(|g| g.subst(v, p))
    }

    /// Apply a `t`-relabeling to every entry (basis words unchanged).
    pub fn permute_ts_entries(&self, tmap: &[u16]) -> SparseOperator {
        self.map_entries(|g| g.permute_ts(tmap))
    }

    /// Conjugate by a positional permutation of the sites:
    /// entry (row, col) moves to (row·w, col·w).
    pub fn permute_sites(&self, w: &Permutation) -> SparseOperator {
        let mut r = SparseOperator::zero(&self.vs, self.len());
        for (col, c) in &self.cols {
            for (row, f) in c {
                r.set(row.act(w), col.act(w), f.clone());
            }
        }
        r
    }

    /// JSON array of `{row, col, entry}` sorted by (row, column).
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.entries()
                .into_iter()
                .map(|(r, c, f)| {
                    json!({
                        "row": r.to_string(),
                        "col": c.to_string(),
                        "entry": f.to_string(),
                    })
                })
                .collect(),
        )
    }
}

/// An operator whose entries are polynomials in one distinguished variable,
/// stored by coefficient.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OperatorPoly {
    vs: VarSet,
    len: u8,
    var: usize,
    coeffs: Vec<SparseOperator>,
}

impl OperatorPoly {
    /// Split an operator by the degree of its entries in `var`.
    pub fn from_operator(op: &SparseOperator, var: usize) -> OperatorPoly {
        let vs = op.vars().clone();
        let deg = op
            .entries()
            .iter()
            .map(|(_, _, f)| f.degree_in(var))
            .max()
            .unwrap_or(0) as usize;
        let mut coeffs: Vec<SparseOperator> = (0..=deg)
            .map(|_| SparseOperator::zero(&vs, op.len()))
            .collect();
        for (row, col, f) in op.entries() {
            for (k, ck) in coeffs.iter_mut().enumerate() {
                let g = f.coeff_in(var, k as u16);
                if !g.is_zero() {
                    ck.set(row, col, g);
                }
            }
        }
        while coeffs.len() > 1 && coeffs.last().unwrap().is_zero() {
            coeffs.pop();
        }
        OperatorPoly {
            vs,
            len: op.len() as u8,
            var,
            coeffs,
        }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> SparseOperator {
        self.coeffs
            .get(k)
            .cloned()
            .unwrap_or_else(|| SparseOperator::zero(&self.vs, self.len as usize))
    }

    /// Evaluate the distinguished variable at a polynomial.
    pub fn eval(&self, at: &MultiPoly) -> SparseOperator {
        let mut r = SparseOperator::zero(&self.vs, self.len as usize);
        let mut pw = MultiPoly::one(&self.vs);
        for c in &self.coeffs {
            r = r.add(&c.scale(&RatFunc::from_poly(pw.clone())));
            pw = pw.mul(at);
        }
        r
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::MultiPoly;

    fn rf(p: MultiPoly) -> RatFunc {
        RatFunc::from_poly(p)
    }

    #[test]
    fn word_conventions() {
        let w = SpinWord::parse("0110");
        assert_eq!(w.bit(1), 0);
        assert_eq!(w.bit(2), 1);
        assert_eq!(w.bit(3), 1);
        assert_eq!(w.bit(4), 0);
        assert_eq!(w.to_string(), "0110");
        assert_eq!(w.weight(), 2);
        assert_eq!(w.ones(), vec![2, 3]);
        assert_eq!(w.zeros(), vec![1, 4]);
        assert_eq!(w.value(), 6);
        assert_eq!(SpinWord::from_ones(4, &[2, 3]), w);
        let order: Vec<String> = SpinWord::all(2).iter().map(|w| w.to_string()).collect();
        assert_eq!(order, vec!["00", "01", "10", "11"]);
        assert_eq!(w.head(2).to_string(), "01");
        assert_eq!(w.tail(1).to_string(), "110");
        assert_eq!(
            SpinWord::parse("01").concat(&SpinWord::parse("10")).to_string(),
            "0110"
        );
    }

    #[test]
    fn word_positional_action() {
        let s1 = Permutation::adjacent(2, 1);
        assert_eq!(SpinWord::parse("10").act(&s1).to_string(), "01");
        let w = Permutation::from_images(vec![2, 3, 1]); // w(1)=2, w(2)=3, w(3)=1
        // position j of the result reads position w^{-1}(j)
        let u = SpinWord::parse("100");
        let v = u.act(&w);
        for j in 1..=3 {
            assert_eq!(v.bit(j), u.bit(w.inverse().apply(j)));
        }
        assert_eq!(SpinWord::parse("10").swapped(1).to_string(), "01");
    }

    #[test]
    fn one_site_compose_example() {
        let vs = VarSet::chain(1);
        let x = MultiPoly::var(&vs, vs.v("x"));
        let t1 = MultiPoly::t(&vs, 1);
        let a = SparseOperator::embed_one_site(
            &vs,
            1,
            1,
            &[
                [rf(MultiPoly::one(&vs)), rf(MultiPoly::zero(&vs))],
                [rf(MultiPoly::zero(&vs)), rf(x.add(&t1))],
            ],
        );
        let aa = a.after(&a);
        let w0 = SpinWord::parse("0");
        let w1 = SpinWord::parse("1");
        assert_eq!(aa.entry(&w0, &w0), RatFunc::one(&vs));
        assert_eq!(aa.entry(&w1, &w1), rf(x.add(&t1).pow(2)));
        assert!(aa.entry(&w0, &w1).is_zero());
    }

    #[test]
    fn two_site_embedding_matches_matrix() {
        let vs = VarSet::chain(2);
        let x = MultiPoly::var(&vs, vs.v("x"));
        let one = MultiPoly::one(&vs);
        let zero = MultiPoly::zero(&vs);
        // local matrix rows/cols indexed by (a,b) -> 2a+b
        let local = [
            [rf(one.clone()), rf(zero.clone()), rf(zero.clone()), rf(zero.clone())],
            [rf(zero.clone()), rf(x.clone()), rf(one.clone()), rf(zero.clone())],
            [rf(zero.clone()), rf(one.clone()), rf(zero.clone()), rf(zero.clone())],
            [rf(zero.clone()), rf(zero.clone()), rf(zero.clone()), rf(one.clone())],
        ];
        let op = SparseOperator::embed_two_site(&vs, 2, 1, 2, &local);
        let words = SpinWord::all(2);
        for (i, row) in words.iter().enumerate() {
            for (j, col) in words.iter().enumerate() {
                assert_eq!(op.entry(row, col), local[i][j], "entry {i},{j}");
            }
        }
        // embedding with swapped site roles transposes the off-diagonal pair
        let op_swapped = SparseOperator::embed_two_site(&vs, 2, 2, 1, &local);
        assert_eq!(
            op_swapped.entry(&SpinWord::parse("01"), &SpinWord::parse("01")),
            rf(zero.clone())
        );
        assert_eq!(
            op_swapped.entry(&SpinWord::parse("10"), &SpinWord::parse("10")),
            rf(x.clone())
        );
    }

    #[test]
    fn apply_add_scale_project() {
        let vs = VarSet::chain(2);
        let t1 = MultiPoly::t(&vs, 1);
        let mut v = TensorVector::basis(&vs, SpinWord::parse("01"));
        v.add_to(SpinWord::parse("10"), rf(t1.clone()));
        let id = SparseOperator::identity(&vs, 2);
        assert_eq!(id.apply(&v), v);
        assert_eq!(v.weight_project(1), v);
        assert!(v.weight_project(2).is_zero());
        let sum = v.add(&v.neg());
        assert!(sum.is_zero());
        let scaled = v.scale(&rf(t1.clone()));
        assert_eq!(scaled.get(&SpinWord::parse("10")), rf(t1.mul(&t1)));
    }

    #[test]
    fn aux_block_extraction() {
        let vs = VarSet::chain(1);
        let mut op = SparseOperator::zero(&vs, 2);
        let t1 = MultiPoly::t(&vs, 1);
        // entry (00 <- 10): aux 0 <- 1 block, inner 0 <- 0
        op.set(SpinWord::parse("00"), SpinWord::parse("10"), rf(t1.clone()));
        let b = op.aux_block(0, 1);
        assert_eq!(b.len(), 1);
        assert_eq!(
            b.entry(&SpinWord::parse("0"), &SpinWord::parse("0")),
            rf(t1)
        );
        assert!(op.aux_block(0, 0).is_zero());
    }

    #[test]
    fn json_shapes() {
        let vs = VarSet::chain(2);
        let t1 = MultiPoly::t(&vs, 1);
        let mut v = TensorVector::zero(&vs, 2);
        v.set(SpinWord::parse("01"), rf(t1.clone()));
        assert_eq!(v.to_json(), serde_json::json!({"01": "t1"}));
        let mut op = SparseOperator::zero(&vs, 2);
        op.set(SpinWord::parse("00"), SpinWord::parse("01"), rf(t1));
        assert_eq!(
            op.to_json(),
            serde_json::json!([{"row": "00", "col": "01", "entry": "t1"}])
        );
    }

    #[test]
    fn operator_poly_roundtrip() {
        let vs = VarSet::chain(1);
        let x = MultiPoly::var(&vs, vs.v("x"));
        let t1 = MultiPoly::t(&vs, 1);
        let mut op = SparseOperator::zero(&vs, 1);
        let w0 = SpinWord::parse("0");
        let w1 = SpinWord::parse("1");
        op.set(w0, w0, rf(x.pow(2).add(&t1)));
        op.set(w1, w1, rf(x.mul(&t1)));
        let p = OperatorPoly::from_operator(&op, vs.v("x"));
        assert_eq!(p.degree(), 2);
        assert_eq!(p.coeff(0).entry(&w0, &w0), rf(t1.clone()));
        assert_eq!(p.coeff(1).entry(&w1, &w1), rf(t1.clone()));
        assert_eq!(p.coeff(2).entry(&w0, &w0), RatFunc::one(&vs));
        assert_eq!(p.eval(&x), op);
        let at = p.eval(&t1.neg());
        assert_eq!(at.entry(&w0, &w0), rf(t1.pow(2).add(&t1)));
        assert_eq!(at.entry(&w1, &w1), rf(t1.pow(2).neg()));
    }
}
