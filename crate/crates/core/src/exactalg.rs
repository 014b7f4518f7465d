//! Exact sparse multivariate polynomials over ℚ and the localization at
//! pairwise linear differences of the `t` variables.
//!
//! `MultiPoly` is the ring ℚ[vars] in canonical form (sorted term map, no zero
//! terms). `RatFunc` is a fraction whose denominator is a product of factors
//! `(t_a - t_b)` with `a < b`, kept factored and fully reduced; the sign of a
//! factor is absorbed into the numerator.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

/// Exact rational coefficient.
pub type Coeff = BigRational;

/// Build a coefficient from an integer.
pub fn q(n: i64) -> Coeff {
    BigRational::from_integer(BigInt::from(n))
}

/// Errors from ring and fraction operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AlgError {
    /// Operands live over different variable sets.
    VarMismatch,
    /// An exact division had a nonzero remainder.
    NotDivisible,
    /// A denominator is not a constant times a product of linear differences.
    NonLocalizable,
    /// Division by zero.
    DivisionByZero,
}

impl fmt::Display for AlgError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgError::VarMismatch => write!(f, "variable sets do not match"),
            AlgError::NotDivisible => write!(f, "exact division has a remainder"),
            AlgError::NonLocalizable => {
                write!(f, "denominator is not a product of linear differences")
            }
            AlgError::DivisionByZero => write!(f, "division by zero"),
        }
    }
}

impl std::error::Error for AlgError {}

/// An ordered list of variable names shared by the polynomials built over it.
#[derive(Clone, Debug)]
pub struct VarSet(Arc<Vec<String>>);

impl PartialEq for VarSet {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}
impl Eq for VarSet {}

impl VarSet {
    /// A variable set with the given names (must be distinct).
    pub fn new<S: AsRef<str>>(names: &[S]) -> VarSet {
        let v: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        for i in 0..v.len() {
            for j in 0..i {
                assert!(v[i] != v[j], "duplicate variable name {}", v[i]);
            }
        }
        VarSet(Arc::new(v))
    }

    /// The standard working set for a length-`n` chain: `t1..tn, x, x1, x2, y, q`.
    pub fn chain(n: usize) -> VarSet {
        let mut names: Vec<String> = (1..=n).map(|i| format!("t{i}")).collect();
        for extra in ["x", "x1", "x2", "y", "q"] {
            names.push(extra.to_string());
        }
        VarSet(Arc::new(names))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.0[i]
    }

    pub fn index(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|n| n == name)
    }

    /// Index of the variable `t{i}` (1-based `i`); panics if absent.
    pub fn t(&self, i: usize) -> usize {
        self.index(&format!("t{i}"))
            .unwrap_or_else(|| panic!("no variable t{i}"))
    }

    /// Index of the named variable; panics if absent.
    pub fn v(&self, name: &str) -> usize {
        self.index(name)
            .unwrap_or_else(|| panic!("no variable {name}"))
    }

    /// Number of leading `t`-variables `t1, t2, ...` present.
    pub fn num_ts(&self) -> usize {
        let mut n = 0;
        while self.index(&format!("t{}", n + 1)).is_some() {
            n += 1;
        }
        n
    }
}

/// Exponent vector; ordered by total degree, then lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Mono(Box<[u16]>);

impl Mono {
    pub fn unit(n: usize) -> Mono {
        Mono(vec![0u16; n].into_boxed_slice())
    }

    pub fn var(n: usize, i: usize, e: u16) -> Mono {
        let mut v = vec![0u16; n];
        v[i] = e;
        Mono(v.into_boxed_slice())
    }

    pub fn from_exps(exps: &[u16]) -> Mono {
        Mono(exps.to_vec().into_boxed_slice())
    }

    pub fn deg(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn exp(&self, i: usize) -> u16 {
        self.0[i]
    }

    pub fn exps(&self) -> &[u16] {
        &self.0
    }

    fn mul(&self, other: &Mono) -> Mono {
        Mono(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    /// Componentwise quotient if `other` divides `self`.
    fn try_div(&self, other: &Mono) -> Option<Mono> {
        let mut v = Vec::with_capacity(self.0.len());
        for (a, b) in self.0.iter().zip(other.0.iter()) {
            if a < b {
                return None;
            }
            v.push(a - b);
        }
        Some(Mono(v.into_boxed_slice()))
    }

    fn is_unit(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }
}

impl Ord for Mono {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.deg()
            .cmp(&other.deg())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse multivariate polynomial in canonical form.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MultiPoly {
    vars: VarSet,
    terms: BTreeMap<Mono, Coeff>,
}

impl MultiPoly {
    pub fn zero(vs: &VarSet) -> MultiPoly {
        MultiPoly {
            vars: vs.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(vs: &VarSet) -> MultiPoly {
        MultiPoly::constant(vs, Coeff::one())
    }

    pub fn constant(vs: &VarSet, c: Coeff) -> MultiPoly {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Mono::unit(vs.len()), c);
        }
        MultiPoly {
            vars: vs.clone(),
            terms,
        }
    }

    pub fn int(vs: &VarSet, n: i64) -> MultiPoly {
        MultiPoly::constant(vs, q(n))
    }

    /// The variable with index `i`.
    pub fn var(vs: &VarSet, i: usize) -> MultiPoly {
        let mut terms = BTreeMap::new();
        terms.insert(Mono::var(vs.len(), i, 1), Coeff::one());
        MultiPoly {
            vars: vs.clone(),
            terms,
        }
    }

    /// The variable `t{i}` (1-based).
    pub fn t(vs: &VarSet, i: usize) -> MultiPoly {
        MultiPoly::var(vs, vs.t(i))
    }

    /// The linear difference `t_a - t_b`.
    pub fn lin_diff(vs: &VarSet, a: usize, b: usize) -> MultiPoly {
        MultiPoly::t(vs, a).sub(&MultiPoly::t(vs, b))
    }

    pub fn monomial(vs: &VarSet, exps: &[u16], c: Coeff) -> MultiPoly {
        assert_eq!(exps.len(), vs.len(), "exponent length mismatch");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Mono::from_exps(exps), c);
        }
        MultiPoly {
            vars: vs.clone(),
            terms,
        }
    }

    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &Coeff)> {
        self.terms.iter()
    }

    /// `Some(c)` iff the polynomial is the constant `c` (zero gives `Some(0)`).
    pub fn as_constant(&self) -> Option<Coeff> {
        match self.terms.len() {
            0 => Some(Coeff::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                if m.is_unit() {
                    Some(c.clone())
                } else {
                    None
                }
            }
            _ => None,
        }
    }

    fn assert_same_vars(&self, other: &MultiPoly) {
        assert!(
            self.vars == other.vars,
            "variable sets do not match: {:?} vs {:?}",
            self.vars.0,
            other.vars.0
        );
    }

    fn insert_term(&mut self, m: Mono, c: Coeff) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let s = e.get().clone() + c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, other: &MultiPoly) -> MultiPoly {
        self.assert_same_vars(other);
        let mut r = self.clone();
        for (m, c) in &other.terms {
            r.insert_term(m.clone(), c.clone());
        }
        r
    }

    pub fn sub(&self, other: &MultiPoly) -> MultiPoly {
        self.assert_same_vars(other);
        let mut r = self.clone();
        for (m, c) in &other.terms {
            r.insert_term(m.clone(), -c.clone());
        }
        r
    }

    pub fn neg(&self) -> MultiPoly {
        let mut r = self.clone();
        for c in r.terms.values_mut() {
            *c = -c.clone();
        }
        r
    }

    pub fn mul(&self, other: &MultiPoly) -> MultiPoly {
        self.assert_same_vars(other);
        let mut r = MultiPoly::zero(&self.vars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                r.insert_term(m1.mul(m2), c1.clone() * c2.clone());
            }
        }
        r
    }

    pub fn scale(&self, c: &Coeff) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(&self.vars);
        }
        let mut r = self.clone();
        for v in r.terms.values_mut() {
            *v = v.clone() * c.clone();
        }
        r
    }

    pub fn pow(&self, e: u32) -> MultiPoly {
        let mut r = MultiPoly::one(&self.vars);
        for _ in 0..e {
            r = r.mul(self);
        }
        r
    }

    pub fn sum<'a>(vs: &VarSet, it: impl IntoIterator<Item = &'a MultiPoly>) -> MultiPoly {
        let mut r = MultiPoly::zero(vs);
        for p in it {
            r = r.add(p);
        }
        r
    }

    pub fn prod<'a>(vs: &VarSet, it: impl IntoIterator<Item = &'a MultiPoly>) -> MultiPoly {
        let mut r = MultiPoly::one(vs);
        for p in it {
            r = r.mul(p);
        }
        r
    }

    /// Multiply by `var_i ^ e` (exponent shift).
    pub fn mul_var(&self, i: usize, e: u16) -> MultiPoly {
        let mut r = MultiPoly::zero(&self.vars);
        for (m, c) in &self.terms {
            let mut exps = m.exps().to_vec();
            exps[i] += e;
            r.terms.insert(Mono::from_exps(&exps), c.clone());
        }
        r
    }

    /// Simultaneous substitution of the bound variables: every occurrence in
    /// `self` is replaced at once, so bindings may mention bound variables
    /// (e.g. `t -> -t`) without sequential-composition effects.
    pub fn specialize(&self, bindings: &[(usize, MultiPoly)]) -> MultiPoly {
        for (_, p) in bindings {
            assert!(p.vars == self.vars, "binding over a different variable set");
        }
        let bound: BTreeMap<usize, &MultiPoly> = bindings.iter().map(|(v, p)| (*v, p)).collect();
        let mut powers: BTreeMap<(usize, u16), MultiPoly> = BTreeMap::new();
        let mut r = MultiPoly::zero(&self.vars);
        for (m, c) in &self.terms {
            // Split into the unbound monomial part and bound factors.
            let mut exps = m.exps().to_vec();
            let mut factor = MultiPoly::constant(&self.vars, c.clone());
            let mut simple = true;
            for (&v, &p) in &bound {
                let e = exps[v];
                if e > 0 {
                    exps[v] = 0;
                    simple = false;
                    let pw = powers
                        .entry((v, e))
                        .or_insert_with(|| p.pow(e as u32))
                        .clone();
                    factor = factor.mul(&pw);
                }
            }
            if simple {
                r.insert_term(m.clone(), c.clone());
            } else {
                let shifted = {
                    let mut s = MultiPoly::zero(&self.vars);
                    for (fm, fc) in &factor.terms {
                        let mut fe = fm.exps().to_vec();
                        for (i, e) in exps.iter().enumerate() {
                            fe[i] += e;
                        }
                        s.terms.insert(Mono::from_exps(&fe), fc.clone());
                    }
                    s
                };
                for (sm, sc) in &shifted.terms {
                    r.insert_term(sm.clone(), sc.clone());
                }
            }
        }
        r
    }

    pub fn specialize_var(&self, v: usize, p: &MultiPoly) -> MultiPoly {
        self.specialize(&[(v, p.clone())])
    }

    /// Exact division by `(var_a - var_b)` via synthetic division in `var_a`.
    pub fn divide_by_linear(&self, a: usize, b: usize) -> Result<MultiPoly, AlgError> {
        self.divide_by_var_minus(a, &MultiPoly::var(&self.vars, b))
    }

    /// Exact division by `(var_v - shift)` where `shift` does not involve `var_v`.
    pub fn divide_by_var_minus(&self, v: usize, shift: &MultiPoly) -> Result<MultiPoly, AlgError> {
        assert!(shift.degree_in(v) == 0, "shift involves the division variable");
        if self.is_zero() {
            return Ok(MultiPoly::zero(&self.vars));
        }
        let d = self.degree_in(v) as usize;
        if d == 0 {
            return Err(AlgError::NotDivisible);
        }
        // Coefficients c_k of var_v^k, with the var_v exponent removed.
        let mut cs: Vec<MultiPoly> = (0..=d).map(|_| MultiPoly::zero(&self.vars)).collect();
        for (m, c) in &self.terms {
            let k = m.exp(v) as usize;
            let mut exps = m.exps().to_vec();
            exps[v] = 0;
            cs[k].insert_term(Mono::from_exps(&exps), c.clone());
        }
        let mut qs: Vec<MultiPoly> = (0..d).map(|_| MultiPoly::zero(&self.vars)).collect();
        qs[d - 1] = cs[d].clone();
        for k in (1..d).rev() {
            qs[k - 1] = cs[k].add(&shift.mul(&qs[k]));
        }
        let rem = cs[0].add(&shift.mul(&qs[0]));
        if !rem.is_zero() {
            return Err(AlgError::NotDivisible);
        }
        let mut out = MultiPoly::zero(&self.vars);
        for (k, qk) in qs.iter().enumerate() {
            out = out.add(&qk.mul_var(v, k as u16));
        }
        Ok(out)
    }

    /// Exact multivariate division; errors if the remainder is nonzero.
    pub fn divide_exact(&self, d: &MultiPoly) -> Result<MultiPoly, AlgError> {
        self.assert_same_vars(d);
        if d.is_zero() {
            return Err(AlgError::DivisionByZero);
        }
        let (dm, dc) = d.terms.iter().next_back().unwrap();
        let mut r = self.clone();
        let mut quo = MultiPoly::zero(&self.vars);
        while !r.is_zero() {
            let (rm, rc) = r.terms.iter().next_back().unwrap();
            match rm.try_div(dm) {
                None => return Err(AlgError::NotDivisible),
                Some(qm) => {
                    let qc = rc.clone() / dc.clone();
                    let t = MultiPoly::monomial(&self.vars, qm.exps(), qc);
                    quo = quo.add(&t);
                    r = r.sub(&t.mul(d));
                }
            }
        }
        Ok(quo)
    }

    /// Coefficient of `var_v ^ k`, with `var_v` removed from the support.
    pub fn coeff_in(&self, v: usize, k: u16) -> MultiPoly {
        let mut r = MultiPoly::zero(&self.vars);
        for (m, c) in &self.terms {
            if m.exp(v) == k {
                let mut exps = m.exps().to_vec();
                exps[v] = 0;
                r.insert_term(Mono::from_exps(&exps), c.clone());
            }
        }
        r
    }

    pub fn degree_in(&self, v: usize) -> u16 {
        self.terms.keys().map(|m| m.exp(v)).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.deg()).max().unwrap_or(0)
    }

    /// Reindex variables: exponent of `i` moves to `map[i]` (a permutation).
    pub fn permute_vars(&self, map: &[usize]) -> MultiPoly {
        assert_eq!(map.len(), self.vars.len());
        let mut r = MultiPoly::zero(&self.vars);
        for (m, c) in &self.terms {
            let mut exps = vec![0u16; map.len()];
            for (i, &e) in m.exps().iter().enumerate() {
                exps[map[i]] += e;
            }
            r.insert_term(Mono::from_exps(&exps), c.clone());
        }
        r
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || m.is_unit() {
                factors.push(abs.to_string());
            }
            for (i, &e) in m.exps().iter().enumerate() {
                if e == 1 {
                    factors.push(self.vars.name(i).to_string());
                } else if e > 1 {
                    factors.push(format!("{}^{}", self.vars.name(i), e));
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

/// Polynomial arithmetic dispatched by operation name, erroring on
/// mismatched variable sets.
pub fn poly_arith(p: &MultiPoly, r: &MultiPoly, kind: &str) -> Result<MultiPoly, AlgError> {
    if p.vars != r.vars {
        return Err(AlgError::VarMismatch);
    }
    Ok(match kind {
        "add" => p.add(r),
        "sub" => p.sub(r),
        "mul" => p.mul(r),
        _ => panic!("unknown kind {kind}"),
    })
}

/// Fraction with numerator in canonical form and denominator a factored
/// product of `(t_a - t_b)` with `a < b`, fully reduced.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatFunc {
    num: MultiPoly,
    den: BTreeMap<(u16, u16), u32>,
}

impl RatFunc {
    pub fn from_poly(p: MultiPoly) -> RatFunc {
        RatFunc {
            num: p,
            den: BTreeMap::new(),
        }
    }

    pub fn zero(vs: &VarSet) -> RatFunc {
        RatFunc::from_poly(MultiPoly::zero(vs))
    }

    pub fn one(vs: &VarSet) -> RatFunc {
        RatFunc::from_poly(MultiPoly::one(vs))
    }

    pub fn int(vs: &VarSet, n: i64) -> RatFunc {
        RatFunc::from_poly(MultiPoly::int(vs, n))
    }

    /// `1 / Π (t_a - t_b)` over the given (1-based, unordered) pairs.
    pub fn inv_lin_prod(vs: &VarSet, pairs: &[(u16, u16)]) -> RatFunc {
        let mut num = MultiPoly::one(vs);
        let mut den: BTreeMap<(u16, u16), u32> = BTreeMap::new();
        for &(a, b) in pairs {
            assert!(a != b, "degenerate linear difference");
            let key = if a < b { (a, b) } else { (b, a) };
            if a > b {
                num = num.neg();
            }
            *den.entry(key).or_insert(0) += 1;
        }
        RatFunc { num, den }
    }

    pub fn num(&self) -> &MultiPoly {
        &self.num
    }

    pub fn den(&self) -> &BTreeMap<(u16, u16), u32> {
        &self.den
    }

    pub fn vars(&self) -> &VarSet {
        &self.num.vars
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The underlying polynomial when the denominator is empty.
    pub fn as_poly(&self) -> Option<&MultiPoly> {
        if self.den.is_empty() {
            Some(&self.num)
        } else {
            None
        }
    }

    /// The denominator as a polynomial.
    pub fn den_poly(&self) -> MultiPoly {
        let vs = self.vars().clone();
        let mut p = MultiPoly::one(&vs);
        for (&(a, b), &m) in &self.den {
            p = p.mul(&MultiPoly::lin_diff(&vs, a as usize, b as usize).pow(m));
        }
        p
    }

    fn reduce(mut self) -> RatFunc {
        if self.num.is_zero() {
            self.den.clear();
            return self;
        }
        let vs = self.vars().clone();
        let keys: Vec<(u16, u16)> = self.den.keys().cloned().collect();
        for key in keys {
            let (a, b) = key;
            let va = vs.t(a as usize);
            let vb = vs.t(b as usize);
            loop {
                let m = *self.den.get(&key).unwrap_or(&0);
                if m == 0 {
                    break;
                }
                // Divisible iff the numerator vanishes under t_a -> t_b.
                if !self
                    .num
                    .specialize_var(va, &MultiPoly::var(&vs, vb))
                    .is_zero()
                {
                    break;
                }
                self.num = self.num.divide_by_linear(va, vb).expect("division after kernel check");
                if m == 1 {
                    self.den.remove(&key);
                } else {
                    self.den.insert(key, m - 1);
                }
            }
        }
        self
    }

    pub fn add(&self, other: &RatFunc) -> RatFunc {
        self.num.assert_same_vars(&other.num);
        let vs = self.vars().clone();
        // Common denominator: max multiplicity per factor.
        let mut den: BTreeMap<(u16, u16), u32> = self.den.clone();
        for (&k, &m) in &other.den {
            let e = den.entry(k).or_insert(0);
            *e = (*e).max(m);
        }
        let mult_for = |own: &BTreeMap<(u16, u16), u32>| -> MultiPoly {
            let mut p = MultiPoly::one(&vs);
            for (&(a, b), &m) in &den {
                let have = own.get(&(a, b)).copied().unwrap_or(0);
                if m > have {
                    p = p.mul(&MultiPoly::lin_diff(&vs, a as usize, b as usize).pow(m - have));
                }
            }
            p
        };
        let num = self
            .num
            .mul(&mult_for(&self.den))
            .add(&other.num.mul(&mult_for(&other.den)));
        RatFunc { num, den }.reduce()
    }

    pub fn sub(&self, other: &RatFunc) -> RatFunc {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> RatFunc {
        RatFunc {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, other: &RatFunc) -> RatFunc {
        let num = self.num.mul(&other.num);
        let mut den = self.den.clone();
        for (&k, &m) in &other.den {
            *den.entry(k).or_insert(0) += m;
        }
        RatFunc { num, den }.reduce()
    }

    pub fn mul_poly(&self, p: &MultiPoly) -> RatFunc {
        RatFunc {
            num: self.num.mul(p),
            den: self.den.clone(),
        }
        .reduce()
    }

    pub fn scale(&self, c: &Coeff) -> RatFunc {
        RatFunc {
            num: self.num.scale(c),
            den: if c.is_zero() {
                BTreeMap::new()
            } else {
                self.den.clone()
            },
        }
    }

    /// Reciprocal; the numerator must be a constant times a product of
    /// linear differences.
    pub fn inv(&self) -> Result<RatFunc, AlgError> {
        if self.num.is_zero() {
            return Err(AlgError::DivisionByZero);
        }
        let vs = self.vars().clone();
        let nt = vs.num_ts() as u16;
        let mut rest = self.num.clone();
        let mut factors: BTreeMap<(u16, u16), u32> = BTreeMap::new();
        for a in 1..=nt {
            for b in (a + 1)..=nt {
                let va = vs.t(a as usize);
                let vb = vs.t(b as usize);
                while rest.specialize_var(va, &MultiPoly::var(&vs, vb)).is_zero() && !rest.is_zero()
                {
                    rest = rest.divide_by_linear(va, vb).expect("division after kernel check");
                    *factors.entry((a, b)).or_insert(0) += 1;
                }
            }
        }
        let c = rest.as_constant().ok_or(AlgError::NonLocalizable)?;
        if c.is_zero() {
            return Err(AlgError::NonLocalizable);
        }
        let mut num = self.den_poly().scale(&c.recip());
        // Guard: numerator factors found with multiplicity move to the den.
        let _ = &mut num;
        Ok(RatFunc {
            num,
            den: factors,
        }
        .reduce())
    }

    pub fn div(&self, other: &RatFunc) -> Result<RatFunc, AlgError> {
        Ok(self.mul(&other.inv()?))
    }

    /// Coefficient of `var_v ^ k` for a variable absent from denominators.
    pub fn coeff_in(&self, v: usize, k: u16) -> RatFunc {
        RatFunc {
            num: self.num.coeff_in(v, k),
            den: self.den.clone(),
        }
        .reduce()
    }

    /// Degree in a variable absent from denominators.
    pub fn degree_in(&self, v: usize) -> u16 {
        self.num.degree_in(v)
    }

    /// Substitute a non-`t` variable (never appears in denominators).
    pub fn subst(&self, v: usize, p: &MultiPoly) -> RatFunc {
        let name = self.vars().name(v);
        assert!(
            !name.starts_with('t') || name[1..].parse::<u16>().is_err(),
            "cannot substitute a t-variable of a fraction"
        );
        RatFunc {
            num: self.num.specialize_var(v, p),
            den: self.den.clone(),
        }
        .reduce()
    }

    /// Apply a permutation of the `t`-variables: `t_a -> t_{map(a)}`
    /// (`map` is 1-based over the `t` indices).
    pub fn permute_ts(&self, map: &[u16]) -> RatFunc {
        let vs = self.vars().clone();
        let mut var_map: Vec<usize> = (0..vs.len()).collect();
        for (i, &w) in map.iter().enumerate() {
            var_map[vs.t(i + 1)] = vs.t(w as usize);
        }
        let mut num = self.num.permute_vars(&var_map);
        let mut den: BTreeMap<(u16, u16), u32> = BTreeMap::new();
        for (&(a, b), &m) in &self.den {
            let (wa, wb) = (map[(a - 1) as usize], map[(b - 1) as usize]);
            let key = if wa < wb { (wa, wb) } else { (wb, wa) };
            if wa > wb && m % 2 == 1 {
                num = num.neg();
            }
            *den.entry(key).or_insert(0) += m;
        }
        RatFunc { num, den }
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_empty() {
            return write!(f, "{}", self.num);
        }
        if self.num.num_terms() > 1 {
            write!(f, "({})", self.num)?;
        } else {
            write!(f, "{}", self.num)?;
        }
        write!(f, " / ")?;
        let mut parts: Vec<String> = Vec::new();
        for (&(a, b), &m) in &self.den {
            if m == 1 {
                parts.push(format!("(t{a}-t{b})"));
            } else {
                parts.push(format!("(t{a}-t{b})^{m}"));
            }
        }
        write!(f, "{}", parts.join("*"))
    }
}

/// Fraction arithmetic dispatched by operation name, erroring on
/// mismatched variable sets.
pub fn frac_arith(fa: &RatFunc, g: &RatFunc, kind: &str) -> Result<RatFunc, AlgError> {
    if fa.vars() != g.vars() {
        return Err(AlgError::VarMismatch);
    }
    Ok(match kind {
        "add" => fa.add(g),
        "sub" => fa.sub(g),
        "mul" => fa.mul(g),
        "div" => fa.div(g)?,
        _ => panic!("unknown kind {kind}"),
    })
}
