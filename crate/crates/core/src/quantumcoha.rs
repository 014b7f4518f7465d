//! The one-parameter deformation `T(x) = A(x) + q D(x)` of the diagonal
//! transfer operator, the rim-hook operator sitting in its top coefficient,
//! weight-shifting operator families twisted by powers of the middle line
//! bundle, and the evaluation action of the polynomial current algebra on
//! the chain of two-dimensional sites.

use std::collections::BTreeMap;

use crate::convolution::{bn_cn, correspondence_points, pushforward_ab, ChernRestriction};
use crate::exactalg::{q, Coeff, MultiPoly, RatFunc, VarSet};
use crate::perm::Permutation;
use crate::report::{op_mismatches, Mismatch};
use crate::spinspace::{OperatorPoly, SparseOperator, SpinWord};
use crate::vertexmodel::{monodromy_block, Model, OpTag};

/// A transfer operator depending polynomially on the spectral variable `x`
/// and the deformation variable `q`, stored both assembled and split by
/// `x`-degree.  Setting `q = 0` recovers the undeformed diagonal block.
#[derive(Clone, Debug)]
pub struct QuantumOperator {
    total: SparseOperator,
    poly: OperatorPoly,
}

impl QuantumOperator {
    fn new(vs: &VarSet, total: SparseOperator) -> QuantumOperator {
        let poly = OperatorPoly::from_operator(&total, vs.v("x"));
        QuantumOperator { total, poly }
    }

    /// The assembled operator with `x` symbolic.
    pub fn total(&self) -> &SparseOperator {
        &self.total
    }

    /// Degree in `x`.
    pub fn degree(&self) -> usize {
        self.poly.degree()
    }

    /// Coefficient operator of `x^k`; entries are polynomial in `q`.
    pub fn coeff(&self, k: usize) -> SparseOperator {
        self.poly.coeff(k)
    }

    /// The specialization `q = 0`.
    pub fn classical(&self) -> SparseOperator {
        let vs = self.total.vars().clone();
        self.total.subst_var(vs.v("q"), &MultiPoly::zero(&vs))
    }
}

/// The deformed transfer operator on the weight-`n` block: the diagonal
/// monodromy block acting on that weight plus `q` times the opposite
/// diagonal block.
pub fn quantum_t(model: Model, vs: &VarSet, len: usize, n: usize) -> QuantumOperator {
    let t = quantum_t_full(model, vs, len);
    QuantumOperator::new(vs, t.weight_block(n, n))
}

/// The deformed transfer operator on the whole chain space (all weights).
fn quantum_t_full(model: Model, vs: &VarSet, len: usize) -> SparseOperator {
    let a = monodromy_block(model, vs, len, OpTag::A, vs.v("x"));
    let d = monodromy_block(model, vs, len, OpTag::D, vs.v("x"));
    let qv = RatFunc::from_poly(MultiPoly::var(vs, vs.v("q")));
    a.add(&d.scale(&qv))
}

/// Commutativity of the deformed transfer coefficients: all pairs of
/// `x`-coefficients of `T(x)` commute, the deformed families of the two
/// models commute with each other, and `q = 0` recovers the diagonal block.
pub fn check_quantum_commute(model: Model, len: usize) -> Vec<Mismatch> {
    let vs = VarSet::chain(len);
    let mut out = Vec::new();

    let t = quantum_t_full(model, &vs, len);
    let tp = OperatorPoly::from_operator(&t, vs.v("x"));
    let coeffs: Vec<SparseOperator> = (0..=tp.degree()).map(|k| tp.coeff(k)).collect();
    for i in 0..coeffs.len() {
        for jj in i + 1..coeffs.len() {
            out.extend(op_mismatches(
                Some(&format!("commute:{}:{}:{}", model.name(), i, jj)),
                &coeffs[i].after(&coeffs[jj]),
                &coeffs[jj].after(&coeffs[i]),
            ));
        }
    }

    let other = match model {
        Model::Osc => Model::Vic,
        Model::Vic => Model::Osc,
    };
    let u = quantum_t_full(other, &vs, len);
    let up = OperatorPoly::from_operator(&u, vs.v("x"));
    let ocoeffs: Vec<SparseOperator> = (0..=up.degree()).map(|k| up.coeff(k)).collect();
    for (i, ci) in coeffs.iter().enumerate() {
        for (jj, dj) in ocoeffs.iter().enumerate() {
            out.extend(op_mismatches(
                Some(&format!("cross-commute:{}:{}", i, jj)),
                &ci.after(dj),
                &dj.after(ci),
            ));
        }
    }

    let classical = t.subst_var(vs.v("q"), &MultiPoly::zero(&vs));
    let a = monodromy_block(model, &vs, len, OpTag::A, vs.v("x"));
    out.extend(op_mismatches(
        Some(&format!("classical-limit:{}", model.name())),
        &classical,
        &a,
    ));
    out
}

/// The top `x`-coefficient of the opposite diagonal block on the weight-`n`
/// subspace, as a combinatorial rule: a word ending in a solid site and (for
/// chains longer than one) starting with a dotted one maps to the word with
/// those two boundary sites exchanged; every other word maps to zero.
pub fn rimhook_d(vs: &VarSet, len: usize, n: usize) -> SparseOperator {
    assert!(n >= 1, "the rule extracts the coefficient of x^(n-1)");
    let mut m = SparseOperator::zero(vs, len);
    for w in SpinWord::all_weight(len, n) {
        if w.bit(len) == 1 && (len == 1 || w.bit(1) == 0) {
            m.set(w.with_bit(len, 0).with_bit(1, 1), w, RatFunc::one(vs));
        }
    }
    m
}

/// The same operator obtained by coefficient extraction: the coefficient of
/// `x^(n-1)` in the opposite diagonal monodromy block on weight `n`.
pub fn rimhook_extracted(vs: &VarSet, len: usize, n: usize) -> SparseOperator {
    assert!(n >= 1, "the extraction needs degree n-1 >= 0");
    let d = monodromy_block(Model::Osc, vs, len, OpTag::D, vs.v("x")).weight_block(n, n);
    OperatorPoly::from_operator(&d, vs.v("x")).coeff(n - 1)
}

/// Partition in the `n x (len-n)` box attached to a word of weight `n`:
/// the `j`-th largest part counts the dotted sites left of the `j`-th
/// solid site from the right.
fn boxed_partition(w: &SpinWord) -> Vec<usize> {
    let ones = w.ones();
    let n = ones.len();
    (0..n).map(|j| ones[n - 1 - j] - (n - j)).collect()
}

/// Word of weight `n` recovering a partition in the `n x (len-n)` box.
fn partition_word(len: usize, parts: &[usize]) -> SpinWord {
    let n = parts.len();
    let ones: Vec<usize> = (1..=n).map(|j| parts[n - j] + j).collect();
    SpinWord::from_ones(len, &ones)
}

/// All partitions `nu` inside `mu` with `target` boxes in total.
fn subpartitions(mu: &[usize], target: usize) -> Vec<Vec<usize>> {
    fn rec(mu: &[usize], i: usize, cap: usize, left: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == mu.len() {
            if left == 0 {
                out.push(acc.clone());
            }
            return;
        }
        let hi = mu[i].min(cap).min(left);
        for v in (0..=hi).rev() {
            acc.push(v);
            rec(mu, i + 1, v, left - v, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    let total: usize = mu.iter().sum();
    if total >= target {
        rec(mu, 0, usize::MAX, target, &mut Vec::new(), &mut out);
    }
    out
}

/// Whether the skew shape `mu / nu` is a single edge-connected strip
/// containing no 2x2 square.
fn is_border_strip(mu: &[usize], nu: &[usize]) -> bool {
    let cells: Vec<(usize, usize)> = mu
        .iter()
        .enumerate()
        .flat_map(|(i, &m)| (nu[i]..m).map(move |j| (i, j)))
        .collect();
    if cells.is_empty() {
        return false;
    }
    for &(i, j) in &cells {
        let has = |a: usize, b: usize| cells.contains(&(a, b));
        if has(i + 1, j) && has(i, j + 1) && has(i + 1, j + 1) {
            return false;
        }
    }
    let mut seen = vec![false; cells.len()];
    let mut stack = vec![0usize];
    seen[0] = true;
    while let Some(k) = stack.pop() {
        let (i, j) = cells[k];
        for (l, &(a, b)) in cells.iter().enumerate() {
            if !seen[l] && (a.abs_diff(i) + b.abs_diff(j) == 1) {
                seen[l] = true;
                stack.push(l);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// The same operator a third way: removing from the boxed partition of each
/// word the unique connected boundary strip of `len - 1` boxes when it
/// exists, and mapping to zero otherwise.
pub fn rimhook_strip(vs: &VarSet, len: usize, n: usize) -> SparseOperator {
    assert!(n >= 1, "defined on positive weight");
    let mut m = SparseOperator::zero(vs, len);
    for w in SpinWord::all_weight(len, n) {
        let mu = boxed_partition(&w);
        let total: usize = mu.iter().sum();
        if len == 1 {
            m.set(w, w, RatFunc::one(vs));
            continue;
        }
        if total + 1 < len {
            continue;
        }
        let candidates: Vec<Vec<usize>> = subpartitions(&mu, total - (len - 1))
            .into_iter()
            .filter(|nu| is_border_strip(&mu, nu))
            .collect();
        assert!(
            candidates.len() <= 1,
            "boundary strips of the box-spanning length are unique"
        );
        if let Some(nu) = candidates.first() {
            m.set(partition_word(len, nu), w, RatFunc::one(vs));
        }
    }
    m
}

/// Sign of a weight-shifting family member.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GammaSign {
    /// Raising: weight `n` to `n + 1`.
    Plus,
    /// Lowering: weight `n` to `n - 1`.
    Minus,
}

impl GammaSign {
    pub fn parse(s: &str) -> Option<GammaSign> {
        match s {
            "+" | "plus" | "raise" => Some(GammaSign::Plus),
            "-" | "minus" | "lower" => Some(GammaSign::Minus),
            _ => None,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            GammaSign::Plus => "+",
            GammaSign::Minus => "-",
        }
    }
}

fn gamma_pushforward(
    vs: &VarSet,
    len: usize,
    sign: GammaSign,
    j: u32,
    weight: Option<usize>,
) -> SparseOperator {
    let raising = matches!(sign, GammaSign::Plus);
    let mut m = SparseOperator::zero(vs, len);
    for w in SpinWord::all(len) {
        if let Some(n) = weight {
            if w.weight() != n {
                continue;
            }
        }
        let fibre: BTreeMap<_, _> = correspondence_points(&w, raising)
            .into_iter()
            .map(|x| {
                let z = x.parts()[1][0];
                let twist = RatFunc::from_poly(MultiPoly::t(vs, z).pow(j));
                (x, twist)
            })
            .collect();
        let merged = if raising { 1 } else { 2 };
        for (y, f) in pushforward_ab(vs, &fibre, |x| x.merge(merged)) {
            m.set(y.word(), w, f);
        }
    }
    m
}

/// Weight-shifting operator twisted by the `j`-th power of the middle line
/// bundle, restricted to sources of weight `n`: computed as a localization
/// pushforward over the three-block correspondence, with the twist
/// restricting to `t_z^j` at the point whose middle block is `{z}`.
pub fn gamma(vs: &VarSet, len: usize, sign: GammaSign, j: u32, n: usize) -> SparseOperator {
    gamma_pushforward(vs, len, sign, j, Some(n))
}

/// The same operator on all weights at once.
pub fn gamma_all(vs: &VarSet, len: usize, sign: GammaSign, j: u32) -> SparseOperator {
    gamma_pushforward(vs, len, sign, j, None)
}

/// Closed-form matrix entries of the twisted weight-shifting operators: the
/// plain raising or lowering entry times `t_z^j` for the flipped site `z`.
fn gamma_closed(vs: &VarSet, len: usize, sign: GammaSign, j: u32) -> SparseOperator {
    let mut m = SparseOperator::zero(vs, len);
    for w in SpinWord::all(len) {
        match sign {
            GammaSign::Plus => {
                let ones = w.ones();
                for z in w.zeros() {
                    let pairs: Vec<(u16, u16)> =
                        ones.iter().map(|&i| (i as u16, z as u16)).collect();
                    let f = RatFunc::inv_lin_prod(vs, &pairs)
                        .mul(&RatFunc::from_poly(MultiPoly::t(vs, z).pow(j)));
                    m.set(w.with_bit(z, 1), w, f);
                }
            }
            GammaSign::Minus => {
                let zeros = w.zeros();
                for z in w.ones() {
                    let pairs: Vec<(u16, u16)> =
                        zeros.iter().map(|&i| (z as u16, i as u16)).collect();
                    let f = RatFunc::inv_lin_prod(vs, &pairs)
                        .mul(&RatFunc::from_poly(MultiPoly::t(vs, z).pow(j)));
                    m.set(w.with_bit(z, 0), w, f);
                }
            }
        }
    }
    m
}

fn binom(n: u32, k: u32) -> i64 {
    let mut r: i64 = 1;
    for i in 0..k {
        r = r * (n - i) as i64 / (i + 1) as i64;
    }
    r
}

/// The operator sending the basis vector of `w` to the basis vector of the
/// word with sites `i` and `i + 1` exchanged.
pub(crate) fn site_swap(vs: &VarSet, len: usize, i: usize) -> SparseOperator {
    let mut m = SparseOperator::zero(vs, len);
    for w in SpinWord::all(len) {
        m.set(w.swapped(i), w, RatFunc::one(vs));
    }
    m
}

/// Relations of the twisted weight-shifting family: agreement of the
/// pushforward with the closed-form entries, the first-twist commutator
/// identity through the rank-one Chern class, the binomial expansion through
/// diagonal Chern multiplications, anticommutation, and equivariance under
/// the simultaneous site-and-variable transpositions.
pub fn check_coha(len: usize, jmax: u32) -> Vec<Mismatch> {
    let vs = VarSet::chain(len);
    let mut out = Vec::new();
    let (b, c) = bn_cn(&vs, len);
    let c1 = ChernRestriction {
        index: 1,
        complement: false,
    }
    .diagonal(&vs, len);

    let gam = |sign: GammaSign, j: u32| gamma_all(&vs, len, sign, j);

    for sign in [GammaSign::Plus, GammaSign::Minus] {
        for j in 0..=jmax {
            out.extend(op_mismatches(
                Some(&format!("closed-form:{}:{}", sign.name(), j)),
                &gam(sign, j),
                &gamma_closed(&vs, len, sign, j),
            ));
        }
    }

    out.extend(op_mismatches(
        Some("first-twist:+"),
        &gam(GammaSign::Plus, 1),
        &c1.after(&b).sub(&b.after(&c1)),
    ));
    out.extend(op_mismatches(
        Some("first-twist:-"),
        &gam(GammaSign::Minus, 1),
        &c.after(&c1).sub(&c1.after(&c)),
    ));

    // powers of the diagonal Chern multiplication
    let mut c1pow = vec![SparseOperator::identity(&vs, len)];
    for _ in 0..jmax {
        c1pow.push(c1.after(c1pow.last().expect("nonempty")));
    }
    for j in 0..=jmax {
        let mut plus = SparseOperator::zero(&vs, len);
        let mut minus = SparseOperator::zero(&vs, len);
        for m in 0..=j {
            let sgn = rf_const(&vs, q(if m % 2 == 0 { 1 } else { -1 } * binom(j, m)));
            let p = c1pow[(j - m) as usize]
                .after(&b)
                .after(&c1pow[m as usize])
                .scale(&sgn);
            plus = plus.add(&p);
            let l = c1pow[m as usize]
                .after(&c)
                .after(&c1pow[(j - m) as usize])
                .scale(&sgn);
            minus = minus.add(&l);
        }
        out.extend(op_mismatches(
            Some(&format!("binomial:+:{j}")),
            &gam(GammaSign::Plus, j),
            &plus,
        ));
        out.extend(op_mismatches(
            Some(&format!("binomial:-:{j}")),
            &gam(GammaSign::Minus, j),
            &minus,
        ));
    }

    for sign in [GammaSign::Plus, GammaSign::Minus] {
        let gs: Vec<SparseOperator> = (0..=jmax).map(|j| gam(sign, j)).collect();
        for j in 0..=jmax as usize {
            for k in j..=jmax as usize {
                out.extend(op_mismatches(
                    Some(&format!("exterior:{}:{}:{}", sign.name(), j, k)),
                    &gs[j].after(&gs[k]).add(&gs[k].after(&gs[j])),
                    &SparseOperator::zero(&vs, len),
                ));
            }
        }
    }

    for sign in [GammaSign::Plus, GammaSign::Minus] {
        for j in 0..=jmax {
            let g = gam(sign, j);
            for i in 1..len {
                let p = site_swap(&vs, len, i);
                let sigma = Permutation::adjacent(len, i);
                let twisted = g.permute_ts_entries(&sigma.t_map());
                out.extend(op_mismatches(
                    Some(&format!("equivariance:{}:{}:{}", sign.name(), j, i)),
                    &p.after(&twisted),
                    &g.after(&p),
                ));
            }
        }
    }
    out
}

/// Basis element of the rank-two local Lie algebra: the two off-diagonal
/// matrix units and the two diagonal ones.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GlBase {
    /// Sends a solid site to a dotted one.
    E,
    /// Sends a dotted site to a solid one.
    F,
    /// Projects onto dotted sites.
    H1,
    /// Projects onto solid sites.
    H2,
}

impl GlBase {
    pub fn all() -> [GlBase; 4] {
        [GlBase::E, GlBase::F, GlBase::H1, GlBase::H2]
    }

    pub fn parse(s: &str) -> Option<GlBase> {
        match s {
            "E" | "e" => Some(GlBase::E),
            "F" | "f" => Some(GlBase::F),
            "H1" | "h1" => Some(GlBase::H1),
            "H2" | "h2" => Some(GlBase::H2),
            _ => None,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            GlBase::E => "E",
            GlBase::F => "F",
            GlBase::H1 => "H1",
            GlBase::H2 => "H2",
        }
    }

    /// The local 2x2 matrix in the (dotted, solid) basis ordering.
    fn matrix(&self) -> [[i64; 2]; 2] {
        match self {
            GlBase::E => [[0, 1], [0, 0]],
            GlBase::F => [[0, 0], [1, 0]],
            GlBase::H1 => [[1, 0], [0, 0]],
            GlBase::H2 => [[0, 0], [0, 1]],
        }
    }

    /// Weight change of the chain action: solid count difference.
    fn weight_shift(&self) -> i64 {
        match self {
            GlBase::E => -1,
            GlBase::F => 1,
            GlBase::H1 | GlBase::H2 => 0,
        }
    }
}

/// A basis element of the current algebra: a local generator together with
/// the exponent of the loop parameter.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CurrentGenerator {
    pub base: GlBase,
    pub power: u32,
}

/// Evaluation action on the chain: the sum over sites of the local 2x2
/// action, with the action at site `l` multiplied by `t_l` raised to the
/// loop exponent.
pub fn current_act(vs: &VarSet, g: CurrentGenerator, len: usize) -> SparseOperator {
    let mut m = SparseOperator::zero(vs, len);
    let mat = g.base.matrix();
    for w in SpinWord::all(len) {
        for l in 1..=len {
            let bin = w.bit(l) as usize;
            for (bout, row) in mat.iter().enumerate() {
                let c = row[bin];
                if c == 0 {
                    continue;
                }
                let f = RatFunc::from_poly(
                    MultiPoly::t(vs, l)
                        .pow(g.power)
                        .scale(&q(c)),
                );
                m.add_to(w.with_bit(l, bout as u8), w, f);
            }
        }
    }
    m
}

/// Commutator of two local 2x2 matrices expanded in the four basis
/// elements: coefficients of E, F, H1, H2 in that order.
fn gl2_bracket(x: GlBase, y: GlBase) -> [i64; 4] {
    let a = x.matrix();
    let b = y.matrix();
    let mut comm = [[0i64; 2]; 2];
    for (i, ci) in comm.iter_mut().enumerate() {
        for (jj, e) in ci.iter_mut().enumerate() {
            for k in 0..2 {
                *e += a[i][k] * b[k][jj] - b[i][k] * a[k][jj];
            }
        }
    }
    [comm[0][1], comm[1][0], comm[0][0], comm[1][1]]
}

/// The sum of the powers `t_l^r` over the chain sites.
fn power_sum(vs: &VarSet, len: usize, r: u32) -> MultiPoly {
    let mut p = MultiPoly::zero(vs);
    for l in 1..=len {
        p = p.add(&MultiPoly::t(vs, l).pow(r));
    }
    p
}

/// Relations of the evaluation action: the bracket of two evaluated
/// generators is the evaluated bracket, the action commutes with the
/// simultaneous transposition of adjacent sites and their variables and
/// with multiplication by symmetric polynomials, the two diagonal families
/// sum to power-sum multiplications, and each generator shifts the weight
/// by its local weight.
pub fn check_current(len: usize) -> Vec<Mismatch> {
    let vs = VarSet::chain(len);
    let mut out = Vec::new();
    let act = |base: GlBase, power: u32| {
        current_act(&vs, CurrentGenerator { base, power }, len)
    };

    for x in GlBase::all() {
        for y in GlBase::all() {
            for a in 0..=3u32 {
                for bb in 0..=(3 - a) {
                    let lhs = act(x, a).after(&act(y, bb)).sub(&act(y, bb).after(&act(x, a)));
                    let coeffs = gl2_bracket(x, y);
                    let mut rhs = SparseOperator::zero(&vs, len);
                    for (c, base) in coeffs.into_iter().zip(GlBase::all()) {
                        if c != 0 {
                            rhs = rhs.add(&act(base, a + bb).scale(&rf_const(&vs, q(c))));
                        }
                    }
                    out.extend(op_mismatches(
                        Some(&format!(
                            "bracket:{}:{}:{}:{}",
                            x.name(),
                            a,
                            y.name(),
                            bb
                        )),
                        &lhs,
                        &rhs,
                    ));
                }
            }
        }
    }

    for x in GlBase::all() {
        for a in 0..=2u32 {
            let op = act(x, a);
            for i in 1..len {
                let p = site_swap(&vs, len, i);
                let sigma = Permutation::adjacent(len, i);
                let twisted = op.permute_ts_entries(&sigma.t_map());
                out.extend(op_mismatches(
                    Some(&format!("equivariance:{}:{}:{}", x.name(), a, i)),
                    &p.after(&twisted),
                    &op.after(&p),
                ));
            }
        }
    }

    for x in GlBase::all() {
        for k in 1..=len {
            let f = RatFunc::from_poly(crate::convolution::elem_sym(
                &vs,
                &(1..=len).collect::<Vec<_>>(),
                k,
            ));
            let scalar = SparseOperator::identity(&vs, len).scale(&f);
            let op = act(x, 1);
            out.extend(op_mismatches(
                Some(&format!("scalar:{}:{}", x.name(), k)),
                &op.after(&scalar),
                &scalar.after(&op),
            ));
        }
    }

    for r in 0..=3u32 {
        let lhs = act(GlBase::H1, r).add(&act(GlBase::H2, r));
        let rhs = SparseOperator::identity(&vs, len)
            .scale(&RatFunc::from_poly(power_sum(&vs, len, r)));
        out.extend(op_mismatches(Some(&format!("central:{r}")), &lhs, &rhs));
    }

    for x in GlBase::all() {
        let op = act(x, 1);
        for (row, col, f) in op.entries() {
            let shift = row.weight() as i64 - col.weight() as i64;
            if shift != x.weight_shift() {
                out.push(Mismatch {
                    relation: Some(format!("weight:{}", x.name())),
                    row: row.to_string(),
                    col: col.to_string(),
                    lhs: f.to_string(),
                    rhs: format!("weight shift {}", x.weight_shift()),
                });
            }
        }
    }
    out
}

/// Constant rational function with the given coefficient.
fn rf_const(vs: &VarSet, c: Coeff) -> RatFunc {
    RatFunc::one(vs).scale(&c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::vec_mismatches;
    use crate::spinspace::TensorVector;
    use crate::ybops::yb_generator;

    #[test]
    fn deformed_transfer_top_class() {
        for len in 1..=3usize {
            let vs = VarSet::chain(len);
            let x = MultiPoly::var(&vs, vs.v("x"));
            let qp = MultiPoly::var(&vs, vs.v("q"));

            let top = SpinWord::from_ones(len, &(1..=len).collect::<Vec<_>>());
            let t = quantum_t(Model::Osc, &vs, len, len);
            let mut eig = qp.clone();
            let mut prod = MultiPoly::one(&vs);
            for jj in 1..=len {
                prod = prod.mul(&x.add(&MultiPoly::t(&vs, jj)));
            }
            eig = eig.add(&prod);
            let expect = TensorVector::basis(&vs, top).scale(&RatFunc::from_poly(eig));
            assert!(vec_mismatches(
                Some("top:osc"),
                &t.total().apply(&TensorVector::basis(&vs, top)),
                &expect
            )
            .is_empty());

            let bottom = SpinWord::from_ones(len, &[]);
            let tp = quantum_t(Model::Vic, &vs, len, 0);
            let mut prodp = MultiPoly::one(&vs);
            for jj in 1..=len {
                prodp = prodp.mul(&x.sub(&MultiPoly::t(&vs, jj)));
            }
            let eigp = qp.clone().add(&prodp);
            let expectp = TensorVector::basis(&vs, bottom).scale(&RatFunc::from_poly(eigp));
            assert!(vec_mismatches(
                Some("top:vic"),
                &tp.total().apply(&TensorVector::basis(&vs, bottom)),
                &expectp
            )
            .is_empty());
        }
    }

    #[test]
    fn deformed_transfer_classical_limit() {
        for len in 1..=3usize {
            let vs = VarSet::chain(len);
            for model in Model::both() {
                for n in 0..=len {
                    let t = quantum_t(model, &vs, len, n);
                    let a = yb_generator(model, &vs, len, OpTag::A).weight_block(n, n);
                    assert!(op_mismatches(Some("classical"), &t.classical(), &a).is_empty());
                }
            }
        }
    }

    #[test]
    fn deformed_transfer_commutes() {
        for model in Model::both() {
            let bad = check_quantum_commute(model, 3);
            assert!(bad.is_empty(), "{:?}", bad.first());
        }
    }

    #[test]
    fn rimhook_three_routes_agree() {
        for len in 1..=4usize {
            let vs = VarSet::chain(len);
            for n in 1..=len {
                let rule = rimhook_d(&vs, len, n);
                let extracted = rimhook_extracted(&vs, len, n);
                let strip = rimhook_strip(&vs, len, n);
                assert!(
                    op_mismatches(Some("rule=extracted"), &rule, &extracted).is_empty(),
                    "len {len} weight {n}"
                );
                assert!(
                    op_mismatches(Some("rule=strip"), &rule, &strip).is_empty(),
                    "len {len} weight {n}"
                );
            }
        }
    }

    #[test]
    fn rimhook_golden_words() {
        let len = 3;
        let vs = VarSet::chain(len);
        let op = rimhook_d(&vs, len, 2);
        let v011 = SpinWord::parse("011");
        let v110 = SpinWord::parse("110");
        let v101 = SpinWord::parse("101");
        assert_eq!(op.entry(&v110, &v011), RatFunc::one(&vs));
        assert!(op.apply(&TensorVector::basis(&vs, v110)).is_zero());
        // a word both starting and ending solid maps to zero: the exchanged
        // word would need a dotted first site
        assert!(op.apply(&TensorVector::basis(&vs, v101)).is_zero());
    }

    #[test]
    fn gamma_routes_and_goldens() {
        for len in 1..=3usize {
            let vs = VarSet::chain(len);
            for sign in [GammaSign::Plus, GammaSign::Minus] {
                for j in 0..=2u32 {
                    let push = gamma_all(&vs, len, sign, j);
                    let closed = gamma_closed(&vs, len, sign, j);
                    assert!(
                        op_mismatches(Some("gamma:push=closed"), &push, &closed).is_empty(),
                        "len {len} sign {} twist {j}",
                        sign.name()
                    );
                }
            }
            let (b, c) = bn_cn(&vs, len);
            assert!(op_mismatches(
                Some("gamma0:+"),
                &gamma_all(&vs, len, GammaSign::Plus, 0),
                &b
            )
            .is_empty());
            assert!(op_mismatches(
                Some("gamma0:-"),
                &gamma_all(&vs, len, GammaSign::Minus, 0),
                &c
            )
            .is_empty());
        }

        // two sites, dotted-solid source: raising hits the all-solid word
        // with entry t_1^j / (t_2 - t_1)
        let vs = VarSet::chain(2);
        for j in 0..=2u32 {
            let g = gamma(&vs, 2, GammaSign::Plus, j, 1);
            let got = g.entry(&SpinWord::parse("11"), &SpinWord::parse("01"));
            let expect = RatFunc::from_poly(MultiPoly::t(&vs, 1).pow(j))
                .mul(&RatFunc::inv_lin_prod(&vs, &[(2, 1)]));
            assert_eq!(got, expect);
        }
    }

    #[test]
    fn coha_suite_small() {
        let bad = check_coha(3, 2);
        assert!(bad.is_empty(), "{:?}", bad.first());
    }

    #[test]
    fn current_single_site_action() {
        let vs = VarSet::chain(1);
        let v0 = SpinWord::parse("0");
        let v1 = SpinWord::parse("1");
        let e = current_act(&vs, CurrentGenerator { base: GlBase::E, power: 0 }, 1);
        let f = current_act(&vs, CurrentGenerator { base: GlBase::F, power: 0 }, 1);
        let h1 = current_act(&vs, CurrentGenerator { base: GlBase::H1, power: 0 }, 1);
        let h2 = current_act(&vs, CurrentGenerator { base: GlBase::H2, power: 0 }, 1);
        assert_eq!(e.entry(&v0, &v1), RatFunc::one(&vs));
        assert!(e.apply(&TensorVector::basis(&vs, v0)).is_zero());
        assert_eq!(f.entry(&v1, &v0), RatFunc::one(&vs));
        assert_eq!(h1.entry(&v0, &v0), RatFunc::one(&vs));
        assert!(h1.apply(&TensorVector::basis(&vs, v1)).is_zero());
        assert_eq!(h2.entry(&v1, &v1), RatFunc::one(&vs));

        // loop exponent multiplies by the site variable
        let vs2 = VarSet::chain(2);
        let e1 = current_act(&vs2, CurrentGenerator { base: GlBase::E, power: 1 }, 2);
        let got = e1.entry(&SpinWord::parse("00"), &SpinWord::parse("10"));
        assert_eq!(got, RatFunc::from_poly(MultiPoly::t(&vs2, 1)));
    }

    #[test]
    fn current_suite_small() {
        let bad = check_current(3);
        assert!(bad.is_empty(), "{:?}", bad.first());
    }
}
