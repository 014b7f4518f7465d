//! Operators of the Yang–Baxter algebra acting on the chain: Bethe vectors,
//! their eigenvalue and basis properties, the semilinear symmetric-group
//! action, and the exchange lemma for `A`–`C` products.

use crate::exactalg::{MultiPoly, RatFunc, VarSet};
use crate::perm::Permutation;
use crate::report::{op_mismatches, vec_mismatches, Mismatch};
use crate::spinspace::{SparseOperator, SpinWord, TensorVector};
use crate::vertexmodel::{monodromy, monodromy_block, Model, OpTag};
use std::collections::BTreeMap;

/// Index of a Bethe vector: a 0/1 word; the zeros mark the spectral
/// parameters used to build it.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct BetheIndex {
    word: SpinWord,
}

impl BetheIndex {
    pub fn new(word: SpinWord) -> BetheIndex {
        BetheIndex { word }
    }

    pub fn from_zeros(n: usize, zeros: &[usize]) -> BetheIndex {
        let ones: Vec<usize> = (1..=n).filter(|p| !zeros.contains(p)).collect();
        BetheIndex {
            word: SpinWord::from_ones(n, &ones),
        }
    }

    pub fn word(&self) -> SpinWord {
        self.word
    }

    pub fn zeros(&self) -> Vec<usize> {
        self.word.zeros()
    }

    pub fn ones(&self) -> Vec<usize> {
        self.word.ones()
    }

    /// The scalar `Π_{a∉I0, b∈I0} (t_a - t_b)^{-1}` used to normalize.
    pub fn normalization(&self, vs: &VarSet) -> RatFunc {
        let zeros = self.zeros();
        let ones = self.ones();
        let mut pairs = Vec::new();
        for &a in &ones {
            for &b in &zeros {
                pairs.push((a as u16, b as u16));
            }
        }
        RatFunc::inv_lin_prod(vs, &pairs)
    }
}

/// A generator of the Yang–Baxter algebra: a monodromy block with the
/// spectral variable `x` kept symbolic.
pub fn yb_generator(model: Model, vs: &VarSet, n: usize, tag: OpTag) -> SparseOperator {
    monodromy_block(model, vs, n, tag, vs.v("x"))
}

/// The same generator with the spectral variable evaluated.
pub fn yb_generator_at(
    model: Model,
    vs: &VarSet,
    n: usize,
    tag: OpTag,
    at: &MultiPoly,
) -> SparseOperator {
    yb_generator(model, vs, n, tag).subst_var(vs.v("x"), at)
}

/// The Bethe vector of a word: lowering generators `C` evaluated at the
/// negated parameters of the word's zeros, applied to the all-ones vector,
/// rightmost (largest zero position) factor first.
pub fn bethe_vector(vs: &VarSet, n: usize, word: SpinWord) -> TensorVector {
    let c = yb_generator(Model::Osc, vs, n, OpTag::C);
    let xv = vs.v("x");
    let mut v = TensorVector::basis(vs, SpinWord::from_ones(n, &(1..=n).collect::<Vec<_>>()));
    for &z in word.zeros().iter().rev() {
        let cz = c.subst_var(xv, &MultiPoly::t(vs, z).neg());
        v = cz.apply(&v);
    }
    v
}

/// The same vector built the other way: raising generators `B` of the
/// second model evaluated at the parameters of the word's ones, applied to
/// the all-zeros vector, rightmost (largest one position) factor first.
pub fn bethe_vector_primed(vs: &VarSet, n: usize, word: SpinWord) -> TensorVector {
    let b = yb_generator(Model::Vic, vs, n, OpTag::B);
    let xv = vs.v("x");
    let mut v = TensorVector::basis(vs, SpinWord::new(n, 0));
    for &o in word.ones().iter().rev() {
        let bo = b.subst_var(xv, &MultiPoly::t(vs, o));
        v = bo.apply(&v);
    }
    v
}

/// The normalized Bethe vector.
pub fn bethe_normalized(vs: &VarSet, n: usize, word: SpinWord) -> TensorVector {
    let idx = BetheIndex::new(word);
    bethe_vector(vs, n, word).scale(&idx.normalization(vs))
}

/// Eigenvalue of the diagonal generator `A` on the Bethe vector of `word`.
pub fn bethe_eigenvalue(model: Model, vs: &VarSet, word: SpinWord) -> MultiPoly {
    let x = MultiPoly::var(vs, vs.v("x"));
    match model {
        Model::Osc => MultiPoly::prod(
            vs,
            &word
                .ones()
                .iter()
                .map(|&j| x.add(&MultiPoly::t(vs, j)))
                .collect::<Vec<_>>(),
        ),
        Model::Vic => MultiPoly::prod(
            vs,
            &word
                .zeros()
                .iter()
                .map(|&j| x.sub(&MultiPoly::t(vs, j)))
                .collect::<Vec<_>>(),
        ),
    }
}

/// Check that every Bethe vector is an `A`-eigenvector with the product
/// eigenvalue, that the staircase words give bare basis vectors, and that
/// the one-zero vectors match their closed form.
pub fn bethe_eigencheck(model: Model, n: usize) -> Vec<Mismatch> {
    let vs = VarSet::chain(n);
    let a = yb_generator(model, &vs, n, OpTag::A);
    let mut out = Vec::new();
    for word in SpinWord::all(n) {
        let b = match model {
            Model::Osc => bethe_vector(&vs, n, word),
            Model::Vic => bethe_vector_primed(&vs, n, word),
        };
        let lhs = a.apply(&b);
        let rhs = b.scale(&RatFunc::from_poly(bethe_eigenvalue(model, &vs, word)));
        out.extend(vec_mismatches(
            Some(&format!("eigen:{word}")),
            &lhs,
            &rhs,
        ));
    }
    // staircase words 0^k 1^(n-k) give the basis vectors themselves
    for k in 0..=n {
        let word = SpinWord::from_ones(n, &((k + 1)..=n).collect::<Vec<_>>());
        let b = match model {
            Model::Osc => bethe_vector(&vs, n, word),
            Model::Vic => bethe_vector_primed(&vs, n, word),
        };
        out.extend(vec_mismatches(
            Some(&format!("staircase:{word}")),
            &b,
            &TensorVector::basis(&vs, word),
        ));
    }
    // single-zero closed form (first model route)
    if model == Model::Osc {
        for m in 1..=n {
            let word = SpinWord::from_ones(n, &(1..=n).filter(|&p| p != m).collect::<Vec<_>>());
            let b = bethe_vector(&vs, n, word);
            let mut want = TensorVector::zero(&vs, n);
            for i in 1..=n {
                let coef = MultiPoly::prod(
                    &vs,
                    &(1..i)
                        .map(|j| MultiPoly::lin_diff(&vs, j, m))
                        .collect::<Vec<_>>(),
                );
                let target =
                    SpinWord::from_ones(n, &(1..=n).filter(|&p| p != i).collect::<Vec<_>>());
                want.add_to(target, RatFunc::from_poly(coef));
            }
            out.extend(vec_mismatches(Some(&format!("one-zero:{m}")), &b, &want));
        }
    }
    out
}

/// Sort key making the Bethe (and fixed-point) transition matrices
/// triangular: number of ascents-as-inversions of the reversed word, then
/// the word value.
pub fn triangular_key(w: &SpinWord) -> (usize, u32) {
    let mut rev_inv = 0usize;
    for i in 1..=w.len() {
        for j in (i + 1)..=w.len() {
            if w.bit(i) < w.bit(j) {
                rev_inv += 1;
            }
        }
    }
    (rev_inv, w.value())
}

/// Certify that the normalized Bethe vectors form a basis: in the
/// triangular order the coefficient matrix is lower-triangular with
/// invertible diagonal (a product of linear differences).
pub fn bethe_basis_check(n: usize) -> Vec<Mismatch> {
    let vs = VarSet::chain(n);
    let mut words = SpinWord::all(n);
    words.sort_by_key(triangular_key);
    let pos: BTreeMap<SpinWord, usize> = words.iter().enumerate().map(|(i, w)| (*w, i)).collect();
    let mut out = Vec::new();
    for (j, &lam) in words.iter().enumerate() {
        let b = bethe_normalized(&vs, n, lam);
        for (mu, f) in b.iter() {
            let i = pos[mu];
            if mu.weight() != lam.weight() {
                out.push(Mismatch {
                    relation: Some("weight-graded".to_string()),
                    row: mu.to_string(),
                    col: lam.to_string(),
                    lhs: f.to_string(),
                    rhs: "0".to_string(),
                });
            }
            if i < j {
                out.push(Mismatch {
                    relation: Some("triangular".to_string()),
                    row: mu.to_string(),
                    col: lam.to_string(),
                    lhs: f.to_string(),
                    rhs: "0".to_string(),
                });
            }
        }
        let diag = b.get(&lam);
        if diag.inv().is_err() {
            out.push(Mismatch {
                relation: Some("diagonal-invertible".to_string()),
                row: lam.to_string(),
                col: lam.to_string(),
                lhs: diag.to_string(),
                rhs: "unit".to_string(),
            });
        }
    }
    out
}

/// A semilinear operator `v -> lin(σ(v))` where `σ` relabels the `t`
/// variables inside coefficients (and nothing else).
#[derive(Clone, Debug)]
pub struct SemiOp {
    pub lin: SparseOperator,
    pub sigma: Permutation,
}

impl SemiOp {
    pub fn linear(lin: SparseOperator, n_ts: usize) -> SemiOp {
        SemiOp {
            lin,
            sigma: Permutation::identity(n_ts),
        }
    }

    pub fn apply(&self, v: &TensorVector) -> TensorVector {
        self.lin.apply(&v.permute_coeffs(&self.sigma.t_map()))
    }

    /// Composition `self ∘ other` (apply `other` first):
    /// `(lin1 σ1)(lin2 σ2) = (lin1 ∘ σ1 lin2 σ1^{-1}) (σ1 σ2)`.
    pub fn after(&self, other: &SemiOp) -> SemiOp {
        let twisted = other.lin.permute_ts_entries(&self.sigma.t_map());
        SemiOp {
            lin: self.lin.after(&twisted),
            sigma: self.sigma.after(&other.sigma),
        }
    }
}

/// The linear part of the `i`-th semilinear generator acting on sites
/// `offset+1 .. offset+n` of a word of length `offset + n`; the basis rule
/// adds `(t_i - t_{i+1})` times the swapped word on ascents.
pub fn haction_lin(vs: &VarSet, len: usize, offset: usize, i: usize) -> SparseOperator {
    let mut op = SparseOperator::zero(vs, len);
    let d = RatFunc::from_poly(MultiPoly::lin_diff(vs, i, i + 1));
    let (pi, pj) = (offset + i, offset + i + 1);
    for col in SpinWord::all(len) {
        op.add_to(col, col, RatFunc::one(vs));
        if col.bit(pi) == 0 && col.bit(pj) == 1 {
            op.add_to(col.swapped(pi), col, d.clone());
        }
    }
    op
}

/// The `i`-th semilinear generator on the chain of length `n`.
pub fn haction(vs: &VarSet, n: usize, i: usize) -> SemiOp {
    SemiOp {
        lin: haction_lin(vs, n, 0, i),
        sigma: Permutation::adjacent(n, i),
    }
}

/// Apply the full symmetric-group action of `w` (via any reduced word).
pub fn sym_action(vs: &VarSet, v: &TensorVector, w: &Permutation) -> TensorVector {
    let n = v.len();
    let mut out = v.clone();
    for &i in w.reduced_word().iter().rev() {
        out = haction(vs, n, i as usize).apply(&out);
    }
    out
}

/// Coxeter relations of the semilinear generators, plus divisibility of
/// `id - s_i` by the corresponding linear difference, on seeded vectors.
pub fn check_coxeter(n: usize) -> Vec<Mismatch> {
    use rand::Rng;
    use rand::SeedableRng;
    let vs = VarSet::chain(n);
    let mut out = Vec::new();
    let gens: Vec<SemiOp> = (1..n).map(|i| haction(&vs, n, i)).collect();
    let same = |name: &str, a: &SemiOp, b: &SemiOp, out: &mut Vec<Mismatch>| {
        assert_eq!(a.sigma, b.sigma, "semilinear parts must agree to compare");
        out.extend(op_mismatches(Some(name), &a.lin, &b.lin));
    };
    let id = SemiOp::linear(SparseOperator::identity(&vs, n), n);
    for (i, g) in gens.iter().enumerate() {
        same(&format!("involution:{}", i + 1), &g.after(g), &id, &mut out);
    }
    for i in 0..gens.len() {
        for j in 0..i {
            if i - j >= 2 {
                same(
                    &format!("commute:{}-{}", j + 1, i + 1),
                    &gens[i].after(&gens[j]),
                    &gens[j].after(&gens[i]),
                    &mut out,
                );
            }
        }
    }
    for i in 0..gens.len().saturating_sub(1) {
        let lhs = gens[i].after(&gens[i + 1]).after(&gens[i]);
        let rhs = gens[i + 1].after(&gens[i]).after(&gens[i + 1]);
        same(&format!("braid:{}-{}", i + 1, i + 2), &lhs, &rhs, &mut out);
    }
    // divisibility of (id - s_i) v by (t_i - t_{i+1}) on random vectors
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(41);
    for _ in 0..4 {
        let mut v = TensorVector::zero(&vs, n);
        for w in SpinWord::all(n) {
            let mut exps = vec![0u16; vs.len()];
            for e in exps.iter_mut().take(n) {
                *e = rng.gen_range(0..2);
            }
            let c = crate::exactalg::q(rng.gen_range(-2..3));
            v.add_to(w, RatFunc::from_poly(MultiPoly::monomial(&vs, &exps, c)));
        }
        for i in 1..n {
            let d = v.sub(&haction(&vs, n, i).apply(&v));
            for (w, f) in d.iter() {
                let poly = f.as_poly().expect("polynomial input stays polynomial");
                if poly.divide_by_linear(vs.t(i), vs.t(i + 1)).is_err() {
                    out.push(Mismatch {
                        relation: Some(format!("demazure-divisible:{i}")),
                        row: w.to_string(),
                        col: "-".to_string(),
                        lhs: f.to_string(),
                        rhs: format!("multiple of t{i}-t{}", i + 1),
                    });
                }
            }
        }
    }
    out
}

/// Commutation of the monodromy matrix with the semilinear action on the
/// chain sites (auxiliary site untouched): compared as semilinear operators
/// with equal twists, i.e. `lin_i ∘ (σ M σ^{-1}) = M ∘ lin_i`.
pub fn check_commute(model: Model, n: usize) -> Vec<Mismatch> {
    let vs = VarSet::chain(n);
    let m = monodromy(model, &vs, n, vs.v("x"));
    let mut out = Vec::new();
    for i in 1..n {
        let lin = haction_lin(&vs, n + 1, 1, i);
        let sigma = Permutation::adjacent(n, i);
        let twisted = m.permute_ts_entries(&sigma.t_map());
        let lhs = lin.after(&twisted);
        let rhs = m.after(&lin);
        out.extend(op_mismatches(Some(&format!("commute:{i}")), &lhs, &rhs));
    }
    out
}

/// Equivariance of Bethe vectors: the semilinear action permutes them by
/// the positional action on words, both raw and normalized.
pub fn check_bethe_permute(n: usize) -> Vec<Mismatch> {
    let vs = VarSet::chain(n);
    let mut out = Vec::new();
    let raw: BTreeMap<SpinWord, TensorVector> = SpinWord::all(n)
        .into_iter()
        .map(|w| (w, bethe_vector(&vs, n, w)))
        .collect();
    for (word, b) in &raw {
        for i in 1..n {
            let lhs = haction(&vs, n, i).apply(b);
            let target = word.swapped(i);
            out.extend(vec_mismatches(
                Some(&format!("permute:{word}:s{i}")),
                &lhs,
                &raw[&target],
            ));
            // normalized version
            let bn = b.scale(&BetheIndex::new(*word).normalization(&vs));
            let lhs_n = haction(&vs, n, i).apply(&bn);
            let rhs_n = raw[&target].scale(&BetheIndex::new(target).normalization(&vs));
            out.extend(vec_mismatches(
                Some(&format!("permute-normalized:{word}:s{i}")),
                &lhs_n,
                &rhs_n,
            ));
        }
    }
    out
}

/// The exchange lemma for `A` against a product of `C` generators, in
/// cleared-denominator form: with `y_i = -t_{m_i}` distinct,
/// `Π_i (x - y_i) · A(x) C(y_1)···C(y_k)`
/// `  = C(y_1)···C(y_k) A(x)`
/// `  - Σ_i Π_{j≠i}(x - y_j) · Π_{j≠i}(y_i - y_j)^{-1} ·`
/// `        C(y_1)···C(x)@i···C(y_k) A(y_i)`.
pub fn check_lemma_ac(n: usize) -> Vec<Mismatch> {
    let vs = VarSet::chain(n);
    let xv = vs.v("x");
    let a_sym = yb_generator(Model::Osc, &vs, n, OpTag::A);
    let c_sym = yb_generator(Model::Osc, &vs, n, OpTag::C);
    let x = MultiPoly::var(&vs, xv);
    let mut out = Vec::new();
    for set_bits in 1..(1u32 << n) {
        let set: Vec<usize> = (1..=n).filter(|&p| set_bits & (1 << (p - 1)) != 0).collect();
        let k = set.len();
        let c_at: Vec<SparseOperator> = set
            .iter()
            .map(|&m| c_sym.subst_var(xv, &MultiPoly::t(&vs, m).neg()))
            .collect();
        let a_at: Vec<SparseOperator> = set
            .iter()
            .map(|&m| a_sym.subst_var(xv, &MultiPoly::t(&vs, m).neg()))
            .collect();
        let cprod = |replace: Option<usize>| -> SparseOperator {
            let mut acc: Option<SparseOperator> = None;
            for (idx, c) in c_at.iter().enumerate() {
                let factor = if replace == Some(idx) { &c_sym } else { c };
                acc = Some(match acc {
                    None => factor.clone(),
                    Some(a) => a.after(factor),
                });
            }
            acc.unwrap()
        };
        let p_all = MultiPoly::prod(
            &vs,
            &set.iter().map(|&m| x.add(&MultiPoly::t(&vs, m))).collect::<Vec<_>>(),
        );
        let lhs = a_sym.after(&cprod(None)).scale(&RatFunc::from_poly(p_all));
        let mut rhs = cprod(None).after(&a_sym);
        for i in 0..k {
            let p_other = MultiPoly::prod(
                &vs,
                &set.iter()
                    .enumerate()
                    .filter(|&(j, _)| j != i)
                    .map(|(_, &m)| x.add(&MultiPoly::t(&vs, m)))
                    .collect::<Vec<_>>(),
            );
            // (y_i - y_j) = t_{m_j} - t_{m_i}
            let pairs: Vec<(u16, u16)> = set
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, &mj)| (mj as u16, set[i] as u16))
                .collect();
            let scal = RatFunc::from_poly(p_other).mul(&RatFunc::inv_lin_prod(&vs, &pairs));
            let term = cprod(Some(i)).after(&a_at[i]).scale(&scal);
            rhs = rhs.sub(&term);
        }
        let name = format!(
            "exchange:{{{}}}",
            set.iter().map(|m| m.to_string()).collect::<Vec<_>>().join(",")
        );
        out.extend(op_mismatches(Some(&name), &lhs, &rhs));
    }
    out
}

/// Closed forms for the single-`C` stratum and the staircase words:
/// `C(x) v_(1,…,1) = Σ_i Π_{j<i}(x+t_j) v_(1,…,0@i,…,1)`, its evaluations
/// at `x = -t_z`, and `b_(0,…,0,1,…,1) = v_(0,…,0,1,…,1)`.
pub fn check_bethe_closed_forms(n: usize) -> Vec<Mismatch> {
    let vs = VarSet::chain(n);
    let x = MultiPoly::var(&vs, vs.v("x"));
    let mut out = Vec::new();
    // a word with a single zero, at position i
    let single_zero =
        |i: usize| SpinWord::from_ones(n, &(1..=n).filter(|&p| p != i).collect::<Vec<_>>());
    // the expansion Σ_i Π_{j<i}(spectral + t_j) v_λ(i) at a given spectral value
    let expansion = |at: &MultiPoly| -> TensorVector {
        let mut v = TensorVector::zero(&vs, n);
        for i in 1..=n {
            let coef = MultiPoly::prod(
                &vs,
                &(1..i).map(|j| at.add(&MultiPoly::t(&vs, j))).collect::<Vec<_>>(),
            );
            v.add_to(single_zero(i), RatFunc::from_poly(coef));
        }
        v
    };
    let c = yb_generator(Model::Osc, &vs, n, OpTag::C);
    let top = TensorVector::basis(&vs, SpinWord::from_ones(n, &(1..=n).collect::<Vec<_>>()));
    out.extend(vec_mismatches(
        Some("single-zero-expansion"),
        &c.apply(&top),
        &expansion(&x),
    ));
    for z in 1..=n {
        out.extend(vec_mismatches(
            Some(&format!("single-zero-vector:{z}")),
            &bethe_vector(&vs, n, single_zero(z)),
            &expansion(&MultiPoly::t(&vs, z).neg()),
        ));
    }
    for k in 0..=n {
        let stair = SpinWord::from_ones(n, &((k + 1)..=n).collect::<Vec<_>>());
        out.extend(vec_mismatches(
            Some(&format!("staircase:{k}")),
            &bethe_vector(&vs, n, stair),
            &TensorVector::basis(&vs, stair),
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spinspace::SparseOperator;
    use crate::vertexmodel::r_local;

    fn rf(p: MultiPoly) -> RatFunc {
        RatFunc::from_poly(p)
    }

    #[test]
    fn closed_forms_small() {
        for n in 1..=4 {
            assert!(check_bethe_closed_forms(n).is_empty(), "n={n}");
        }
        // spot check: the expansion coefficient of the last word at N=3
        let vs = VarSet::chain(3);
        let c = yb_generator(Model::Osc, &vs, 3, OpTag::C);
        let v = c.apply(&TensorVector::basis(&vs, SpinWord::parse("111")));
        let x = MultiPoly::var(&vs, vs.v("x"));
        let want = x
            .add(&MultiPoly::t(&vs, 1))
            .mul(&x.add(&MultiPoly::t(&vs, 2)));
        assert_eq!(v.get(&SpinWord::parse("110")), rf(want));
    }

    #[test]
    fn bethe_vectors_small() {
        let vs = VarSet::chain(2);
        let t1 = MultiPoly::t(&vs, 1);
        let t2 = MultiPoly::t(&vs, 2);
        // b(01) = v_01
        let b = bethe_vector(&vs, 2, SpinWord::parse("01"));
        assert_eq!(b, TensorVector::basis(&vs, SpinWord::parse("01")));
        // b(10) = (t1-t2) v_10 + v_01
        let b = bethe_vector(&vs, 2, SpinWord::parse("10"));
        let mut want = TensorVector::zero(&vs, 2);
        want.set(SpinWord::parse("10"), rf(t1.sub(&t2)));
        want.set(SpinWord::parse("01"), RatFunc::one(&vs));
        assert_eq!(b, want);
        // normalized: v_10 + (t1-t2)^{-1} v_01
        let bn = bethe_normalized(&vs, 2, SpinWord::parse("10"));
        assert_eq!(bn.get(&SpinWord::parse("10")), RatFunc::one(&vs));
        assert_eq!(
            bn.get(&SpinWord::parse("01")),
            RatFunc::inv_lin_prod(&vs, &[(1, 2)])
        );
    }

    #[test]
    fn both_routes_agree() {
        for n in 1..=4 {
            let vs = VarSet::chain(n);
            for w in SpinWord::all(n) {
                assert_eq!(
                    bethe_vector(&vs, n, w),
                    bethe_vector_primed(&vs, n, w),
                    "n={n} word={w}"
                );
            }
        }
    }

    #[test]
    fn eigencheck_small() {
        for model in Model::both() {
            for n in 1..=3 {
                assert!(bethe_eigencheck(model, n).is_empty(), "{model} n={n}");
            }
        }
    }

    #[test]
    fn basis_triangular_small() {
        for n in 1..=3 {
            assert!(bethe_basis_check(n).is_empty(), "n={n}");
        }
    }

    #[test]
    fn haction_matches_swap_composed_r() {
        // lin_i equals (site swap) ∘ R_{i,i+1}(t_i, t_{i+1}); the opposite
        // spectral order differs by the sign of the linear difference.
        let n = 3;
        let vs = VarSet::chain(n);
        for i in 1..n {
            let ti = MultiPoly::t(&vs, i);
            let tj = MultiPoly::t(&vs, i + 1);
            let mk = |x: &MultiPoly, y: &MultiPoly| {
                let local = r_local(Model::Osc, &vs, x, y);
                let r = SparseOperator::embed_two_site(&vs, n, i, i + 1, &local);
                let swap = r.entries().into_iter().fold(
                    SparseOperator::zero(&vs, n),
                    |mut acc, (row, col, f)| {
                        acc.add_to(row.swapped(i), col, f);
                        acc
                    },
                );
                swap
            };
            let lin = haction_lin(&vs, n, 0, i);
            assert_eq!(mk(&ti, &tj), lin, "i={i}");
            assert_ne!(mk(&tj, &ti), lin, "i={i} opposite order");
        }
    }

    #[test]
    fn coxeter_and_divisibility() {
        assert!(check_coxeter(3).is_empty());
    }

    #[test]
    fn monodromy_commutes_with_action() {
        for model in Model::both() {
            assert!(check_commute(model, 3).is_empty(), "{model}");
        }
    }

    #[test]
    fn bethe_permutation_small() {
        assert!(check_bethe_permute(3).is_empty());
    }

    #[test]
    fn exchange_lemma_small() {
        for n in 1..=3 {
            assert!(check_lemma_ac(n).is_empty(), "n={n}");
        }
    }

    #[test]
    fn sym_action_composes() {
        let n = 3;
        let vs = VarSet::chain(n);
        let v = bethe_vector(&vs, n, SpinWord::parse("101"));
        // w = s1 s2 as a single action equals the two steps
        let w = Permutation::from_word(n, &[1, 2]);
        let via_word = sym_action(&vs, &v, &w);
        let stepwise = haction(&vs, n, 1).apply(&haction(&vs, n, 2).apply(&v));
        assert_eq!(via_word, stepwise);
    }
}
