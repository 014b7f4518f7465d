//! The two five-vertex models: local crossing weights, Lax and R matrices,
//! row lattices, monodromy matrices, and the defining exchange identities.
//!
//! Conventions: a crossing has inputs on the left (horizontal) and top
//! (vertical), outputs on the right and bottom.  The 4×4 matrices are indexed
//! by pairs `(a, b)` — `a` the horizontal label, `b` the vertical one — with
//! basis order `(0,0), (0,1), (1,0), (1,1)`; the row is the output pair and
//! the column the input pair.  Every nonzero weight conserves the number of
//! solid (label `1`) lines.

use crate::exactalg::{MultiPoly, RatFunc, VarSet};
use crate::report::{op_mismatches, Mismatch};
use crate::spinspace::{SparseOperator, SpinWord};
use std::collections::BTreeMap;
use std::fmt;

/// Which five-vertex model: `Osc` (weight `x+t` on the `(0,1)` crossing) or
/// `Vic` (weight `x-t` on the all-dotted crossing, zero on all-solid).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Model {
    Osc,
    Vic,
}

impl Model {
    pub fn parse(s: &str) -> Option<Model> {
        match s {
            "osc" => Some(Model::Osc),
            "vic" => Some(Model::Vic),
            _ => None,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Model::Osc => "osc",
            Model::Vic => "vic",
        }
    }

    pub fn both() -> [Model; 2] {
        [Model::Osc, Model::Vic]
    }
}

impl fmt::Display for Model {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

/// The six weights `(w1..w6)` of a conserving vertex model, as the matrix
/// `[[w1,0,0,0],[0,w3,w5,0],[0,w6,w4,0],[0,0,0,w2]]`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CrossingWeights {
    vs: VarSet,
    w: [MultiPoly; 6],
}

impl CrossingWeights {
    pub fn new(vs: &VarSet, w: [MultiPoly; 6]) -> CrossingWeights {
        CrossingWeights { vs: vs.clone(), w }
    }

    /// Weights of the model's Lax matrix with spectral parameter `x` and
    /// column parameter `t`.
    pub fn lax(model: Model, vs: &VarSet, x: &MultiPoly, t: &MultiPoly) -> CrossingWeights {
        let one = MultiPoly::one(vs);
        let zero = MultiPoly::zero(vs);
        let w = match model {
            Model::Osc => [
                one.clone(),
                one.clone(),
                x.add(t),
                zero,
                one.clone(),
                one,
            ],
            Model::Vic => [
                x.sub(t),
                zero,
                one.clone(),
                one.clone(),
                one.clone(),
                one,
            ],
        };
        CrossingWeights::new(vs, w)
    }

    /// Weights of the model's R matrix with parameters `x`, `y`.
    pub fn rmat(model: Model, vs: &VarSet, x: &MultiPoly, y: &MultiPoly) -> CrossingWeights {
        let one = MultiPoly::one(vs);
        let zero = MultiPoly::zero(vs);
        let w = match model {
            Model::Osc => [
                one.clone(),
                one.clone(),
                x.sub(y),
                zero,
                one.clone(),
                one,
            ],
            Model::Vic => [
                one.clone(),
                one.clone(),
                zero,
                y.sub(x),
                one.clone(),
                one,
            ],
        };
        CrossingWeights::new(vs, w)
    }

    pub fn weights(&self) -> &[MultiPoly; 6] {
        &self.w
    }

    /// Weight of the crossing taking input pair `(a, b)` to output `(c, d)`.
    pub fn weight(&self, inp: (u8, u8), out: (u8, u8)) -> MultiPoly {
        let m = self.to_matrix_poly();
        m[pair_index(out)][pair_index(inp)].clone()
    }

    fn to_matrix_poly(&self) -> [[MultiPoly; 4]; 4] {
        let z = || MultiPoly::zero(&self.vs);
        let [w1, w2, w3, w4, w5, w6] = self.w.clone();
        [
            [w1, z(), z(), z()],
            [z(), w3, w5, z()],
            [z(), w6, w4, z()],
            [z(), z(), z(), w2],
        ]
    }

    /// The 4×4 matrix over fractions (row = output pair, column = input pair).
    pub fn to_matrix(&self) -> [[RatFunc; 4]; 4] {
        self.to_matrix_poly()
            .map(|row| row.map(RatFunc::from_poly))
    }

    /// Exchange the roles of dotted and solid lines: `(w2,w1,w4,w3,w6,w5)`.
    pub fn firsttype(&self) -> CrossingWeights {
        let [w1, w2, w3, w4, w5, w6] = self.w.clone();
        CrossingWeights::new(&self.vs, [w2, w1, w4, w3, w6, w5])
    }

    /// Reflect the crossing through a vertical axis: `(w3,w4,w1,w2,w6,w5)`.
    pub fn secondtype(&self) -> CrossingWeights {
        let [w1, w2, w3, w4, w5, w6] = self.w.clone();
        CrossingWeights::new(&self.vs, [w3, w4, w1, w2, w6, w5])
    }

    /// The pair of classification invariants, each as `(numerator,
    /// denominator)`; `None` when `w1·w3 = 0` makes them undefined.
    pub fn delta(&self) -> Option<[(MultiPoly, MultiPoly); 2]> {
        let [w1, w2, w3, w4, w5, w6] = self.w.clone();
        let w13 = w1.mul(&w3);
        if w13.is_zero() {
            return None;
        }
        let d1_num = w1.mul(&w2).add(&w3.mul(&w4)).sub(&w5.mul(&w6));
        let d1_den = w13.scale(&crate::exactalg::q(2));
        let d2_num = w1.mul(&w2);
        Some([(d1_num, d1_den), (d2_num, w13)])
    }
}

/// `(a, b) -> 2a + b`, the basis position of a label pair.
pub fn pair_index(p: (u8, u8)) -> usize {
    (2 * p.0 + p.1) as usize
}

/// Weight of a single labelled crossing of the model.
pub fn crossing_weight(
    model: Model,
    vs: &VarSet,
    x: &MultiPoly,
    t: &MultiPoly,
    inp: (u8, u8),
    out: (u8, u8),
) -> MultiPoly {
    CrossingWeights::lax(model, vs, x, t).weight(inp, out)
}

/// The Lax matrix as a 4×4 array of fractions.
pub fn lax_local(model: Model, vs: &VarSet, x: &MultiPoly, t: &MultiPoly) -> [[RatFunc; 4]; 4] {
    CrossingWeights::lax(model, vs, x, t).to_matrix()
}

/// The R matrix as a 4×4 array of fractions.
pub fn r_local(model: Model, vs: &VarSet, x: &MultiPoly, y: &MultiPoly) -> [[RatFunc; 4]; 4] {
    CrossingWeights::rmat(model, vs, x, y).to_matrix()
}

/// Generator labels for the four monodromy blocks `[[A, B], [C, D]]`,
/// indexed by (horizontal-out, horizontal-in).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum OpTag {
    A,
    B,
    C,
    D,
}

impl OpTag {
    pub fn all() -> [OpTag; 4] {
        [OpTag::A, OpTag::B, OpTag::C, OpTag::D]
    }

    /// Horizontal output label (row of the block).
    pub fn a_out(&self) -> u8 {
        match self {
            OpTag::A | OpTag::B => 0,
            OpTag::C | OpTag::D => 1,
        }
    }

    /// Horizontal input label (column of the block).
    pub fn a_in(&self) -> u8 {
        match self {
            OpTag::A | OpTag::C => 0,
            OpTag::B | OpTag::D => 1,
        }
    }

    pub fn of_labels(a_out: u8, a_in: u8) -> OpTag {
        match (a_out, a_in) {
            (0, 0) => OpTag::A,
            (0, 1) => OpTag::B,
            (1, 0) => OpTag::C,
            (1, 1) => OpTag::D,
            _ => panic!("bad labels"),
        }
    }

    pub fn parse(s: &str) -> Option<OpTag> {
        match s {
            "A" => Some(OpTag::A),
            "B" => Some(OpTag::B),
            "C" => Some(OpTag::C),
            "D" => Some(OpTag::D),
            _ => None,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            OpTag::A => "A",
            OpTag::B => "B",
            OpTag::C => "C",
            OpTag::D => "D",
        }
    }
}

/// One row of the lattice: a horizontal line crossing `n` vertical lines,
/// with column `b` carrying the parameter `t_b`.
pub struct RowLattice {
    model: Model,
    vs: VarSet,
    n: usize,
    x_var: usize,
}

impl RowLattice {
    pub fn new(model: Model, vs: &VarSet, n: usize, x_var: usize) -> RowLattice {
        RowLattice {
            model,
            vs: vs.clone(),
            n,
            x_var,
        }
    }

    /// Sum over lattice configurations with the horizontal line entering at
    /// label `a_in` (left) and exiting at `a_out` (right), input word on top
    /// and output word on the bottom.  Propagates left to right, dropping
    /// zero partial sums.
    pub fn entry(&self, a_in: u8, a_out: u8, top: &SpinWord, bottom: &SpinWord) -> RatFunc {
        assert_eq!(top.len(), self.n);
        assert_eq!(bottom.len(), self.n);
        let x = MultiPoly::var(&self.vs, self.x_var);
        // state: horizontal label -> accumulated weight
        let mut state: BTreeMap<u8, MultiPoly> = BTreeMap::new();
        state.insert(a_in, MultiPoly::one(&self.vs));
        for b in 1..=self.n {
            let t = MultiPoly::t(&self.vs, b);
            let w = CrossingWeights::lax(self.model, &self.vs, &x, &t);
            let mut next: BTreeMap<u8, MultiPoly> = BTreeMap::new();
            for (&h, acc) in &state {
                for h_out in 0..2u8 {
                    let cw = w.weight((h, top.bit(b)), (h_out, bottom.bit(b)));
                    if cw.is_zero() {
                        continue;
                    }
                    let v = acc.mul(&cw);
                    let e = next.entry(h_out).or_insert_with(|| MultiPoly::zero(&self.vs));
                    *e = e.add(&v);
                    if e.is_zero() {
                        next.remove(&h_out);
                    }
                }
            }
            state = next;
            if state.is_empty() {
                break;
            }
        }
        RatFunc::from_poly(state.remove(&a_out).unwrap_or_else(|| MultiPoly::zero(&self.vs)))
    }
}

/// Convenience wrapper: one lattice-row entry with `x` as the spectral
/// variable.
pub fn row_lattice_entry(
    model: Model,
    vs: &VarSet,
    n: usize,
    a_in: u8,
    a_out: u8,
    top: &SpinWord,
    bottom: &SpinWord,
) -> RatFunc {
    RowLattice::new(model, vs, n, vs.v("x")).entry(a_in, a_out, top, bottom)
}

/// The monodromy matrix on `n+1` sites (auxiliary line = leading site):
/// the ordered product of Lax factors with the site-1 factor applied first.
pub fn monodromy(model: Model, vs: &VarSet, n: usize, x_var: usize) -> SparseOperator {
    let x = MultiPoly::var(vs, x_var);
    let mut m = SparseOperator::identity(vs, n + 1);
    for j in 1..=n {
        let t = MultiPoly::t(vs, j);
        let local = lax_local(model, vs, &x, &t);
        let factor = SparseOperator::embed_two_site(vs, n + 1, 1, j + 1, &local);
        m = factor.after(&m);
    }
    m
}

/// One block of the monodromy matrix, acting on the `n` chain sites.
pub fn monodromy_block(
    model: Model,
    vs: &VarSet,
    n: usize,
    tag: OpTag,
    x_var: usize,
) -> SparseOperator {
    monodromy(model, vs, n, x_var).aux_block(tag.a_out(), tag.a_in())
}

/// All four blocks at once (one monodromy construction).
pub fn monodromy_blocks(
    model: Model,
    vs: &VarSet,
    n: usize,
    x_var: usize,
) -> BTreeMap<OpTag, SparseOperator> {
    let m = monodromy(model, vs, n, x_var);
    OpTag::all()
        .into_iter()
        .map(|tag| (tag, m.aux_block(tag.a_out(), tag.a_in())))
        .collect()
}

/// The exchange identity for one Lax crossing:
/// `L_23(x2,t) L_13(x1,t) R_12(x1,x2) = R_12(x1,x2) L_13(x1,t) L_23(x2,t)`
/// on three two-dimensional factors.
pub fn check_rll(model: Model, vs: &VarSet) -> Vec<Mismatch> {
    let x1 = MultiPoly::var(vs, vs.v("x1"));
    let x2 = MultiPoly::var(vs, vs.v("x2"));
    let t = MultiPoly::t(vs, 1);
    let l23 = SparseOperator::embed_two_site(vs, 3, 2, 3, &lax_local(model, vs, &x2, &t));
    let l13 = SparseOperator::embed_two_site(vs, 3, 1, 3, &lax_local(model, vs, &x1, &t));
    let r12 = SparseOperator::embed_two_site(vs, 3, 1, 2, &r_local(model, vs, &x1, &x2));
    let lhs = l23.after(&l13).after(&r12);
    let rhs = r12.after(&l13).after(&l23);
    op_mismatches(Some("rll"), &lhs, &rhs)
}

/// The exchange identity for whole monodromy rows:
/// `R_12(x1,x2) M_1(x1) M_2(x2) = M_2(x2) M_1(x1) R_12(x1,x2)`
/// on two auxiliary factors (leading sites) and `n` chain sites.
pub fn check_rmm(model: Model, n: usize) -> Vec<Mismatch> {
    let vs = VarSet::chain(n);
    let x1 = MultiPoly::var(&vs, vs.v("x1"));
    let x2 = MultiPoly::var(&vs, vs.v("x2"));
    let len = n + 2;
    let mut m1 = SparseOperator::identity(&vs, len);
    let mut m2 = SparseOperator::identity(&vs, len);
    for j in 1..=n {
        let t = MultiPoly::t(&vs, j);
        let f1 =
            SparseOperator::embed_two_site(&vs, len, 1, j + 2, &lax_local(model, &vs, &x1, &t));
        let f2 =
            SparseOperator::embed_two_site(&vs, len, 2, j + 2, &lax_local(model, &vs, &x2, &t));
        m1 = f1.after(&m1);
        m2 = f2.after(&m2);
    }
    let r12 = SparseOperator::embed_two_site(&vs, len, 1, 2, &r_local(model, &vs, &x1, &x2));
    let lhs = r12.after(&m1).after(&m2);
    let rhs = m2.after(&m1).after(&r12);
    op_mismatches(Some("rmm"), &lhs, &rhs)
}

/// Cross-validate the two monodromy routes: every entry of every block of
/// the composed operator product equals the directly enumerated lattice sum.
pub fn check_lattice(model: Model, n: usize) -> Vec<Mismatch> {
    let vs = VarSet::chain(n);
    let lat = RowLattice::new(model, &vs, n, vs.v("x"));
    let m = monodromy(model, &vs, n, vs.v("x"));
    let mut out = Vec::new();
    for tag in OpTag::all() {
        let block = m.aux_block(tag.a_out(), tag.a_in());
        for top in SpinWord::all(n) {
            for bot in SpinWord::all(n) {
                let by_lattice = lat.entry(tag.a_in(), tag.a_out(), &top, &bot);
                let by_product = block.entry(&bot, &top);
                if by_lattice != by_product {
                    out.push(Mismatch {
                        relation: Some(format!("lattice:{}", tag.name())),
                        row: bot.to_string(),
                        col: top.to_string(),
                        lhs: by_lattice.to_string(),
                        rhs: by_product.to_string(),
                    });
                }
            }
        }
    }
    out
}

/// One product term `coef · left(x_i) ∘ right(x_j)` of an exchange relation.
#[derive(Clone, Debug)]
pub struct RelTerm {
    pub coef: MultiPoly,
    pub left: (OpTag, u8),
    pub right: (OpTag, u8),
}

/// A named relation `Σ lhs = Σ rhs` between degree-two words in the blocks.
#[derive(Clone, Debug)]
pub struct Relation {
    pub name: String,
    pub lhs: Vec<RelTerm>,
    pub rhs: Vec<RelTerm>,
}

impl Relation {
    /// The relation as a single side map `(left, right) -> coefficient`
    /// (lhs positive, rhs negative); used to compare presentations.
    pub fn normal_form(&self, vs: &VarSet) -> BTreeMap<(OpTag, u8, OpTag, u8), MultiPoly> {
        let mut m: BTreeMap<(OpTag, u8, OpTag, u8), MultiPoly> = BTreeMap::new();
        let mut push = |t: &RelTerm, sign: i64| {
            let key = (t.left.0, t.left.1, t.right.0, t.right.1);
            let add = t.coef.scale(&crate::exactalg::q(sign));
            let e = m.entry(key).or_insert_with(|| MultiPoly::zero(vs));
            *e = e.add(&add);
            if e.is_zero() {
                m.remove(&key);
            }
        };
        for t in &self.lhs {
            push(t, 1);
        }
        for t in &self.rhs {
            push(t, -1);
        }
        m
    }
}

/// The sixteen exchange relations generated from the monodromy identity by
/// pinning both auxiliary labels: identity `(a,b;e,f)` reads
/// `Σ_{c,d} R[(a,b),(c,d)] O_{ce}(x1) O_{df}(x2)
///  = Σ_{c,d} R[(c,d),(e,f)] O_{bd}(x2) O_{ac}(x1)`.
pub fn generated_relations(model: Model, vs: &VarSet) -> Vec<Relation> {
    let x1 = MultiPoly::var(vs, vs.v("x1"));
    let x2 = MultiPoly::var(vs, vs.v("x2"));
    let r = CrossingWeights::rmat(model, vs, &x1, &x2).to_matrix_poly();
    let bits = |idx: usize| ((idx >> 1) as u8, (idx & 1) as u8);
    let mut rels = Vec::new();
    for ab in 0..4 {
        for ef in 0..4 {
            let (a, b) = bits(ab);
            let (e, f) = bits(ef);
            let mut lhs = Vec::new();
            let mut rhs = Vec::new();
            for cd in 0..4 {
                let (c, d) = bits(cd);
                let rl = &r[ab][cd];
                if !rl.is_zero() {
                    lhs.push(RelTerm {
                        coef: rl.clone(),
                        left: (OpTag::of_labels(c, e), 1),
                        right: (OpTag::of_labels(d, f), 2),
                    });
                }
                let rr = &r[cd][ef];
                if !rr.is_zero() {
                    rhs.push(RelTerm {
                        coef: rr.clone(),
                        left: (OpTag::of_labels(b, d), 2),
                        right: (OpTag::of_labels(a, c), 1),
                    });
                }
            }
            rels.push(Relation {
                name: format!("abef={a}{b}{e}{f}"),
                lhs,
                rhs,
            });
        }
    }
    rels
}

/// Compact encoding of a listed relation term:
/// (sign, optional (i,j) meaning a factor `x_i - x_j`, left tag, left arg,
/// right tag, right arg).
type ListedTerm = (i64, Option<(u8, u8)>, OpTag, u8, OpTag, u8);

fn listed(vs: &VarSet, terms: &[ListedTerm]) -> Vec<RelTerm> {
    let xv = |i: u8| {
        MultiPoly::var(
            vs,
            match i {
                1 => vs.v("x1"),
                2 => vs.v("x2"),
                _ => unreachable!(),
            },
        )
    };
    terms
        .iter()
        .map(|&(sign, diff, lt, la, rt, ra)| {
            let mut coef = MultiPoly::int(vs, sign);
            if let Some((i, j)) = diff {
                coef = coef.mul(&xv(i).sub(&xv(j)));
            }
            RelTerm {
                coef,
                left: (lt, la),
                right: (rt, ra),
            }
        })
        .collect()
}

/// The relation list in its standard printed ordering for each model
/// (the `Osc` list repeats one relation, so it has fifteen distinct rows).
pub fn listed_relations(model: Model, vs: &VarSet) -> Vec<Relation> {
    use OpTag::{A, B, C, D};
    // rows: (lhs terms, rhs terms)
    let rows: Vec<(Vec<ListedTerm>, Vec<ListedTerm>)> = match model {
        Model::Osc => vec![
            // 1..10: equalities
            (vec![(1, None, A, 1, A, 2)], vec![(1, None, A, 2, A, 1)]),
            (vec![(1, None, B, 1, B, 2)], vec![(1, None, B, 2, B, 1)]),
            (vec![(1, None, B, 1, A, 2)], vec![(1, None, B, 2, A, 1)]),
            (vec![(1, None, A, 1, C, 2)], vec![(1, None, A, 2, C, 1)]),
            (vec![(1, None, C, 1, C, 2)], vec![(1, None, C, 2, C, 1)]),
            (vec![(1, None, D, 1, D, 2)], vec![(1, None, D, 2, D, 1)]),
            (vec![(1, None, B, 2, D, 1)], vec![(1, None, B, 1, D, 2)]),
            (vec![(1, None, D, 2, C, 1)], vec![(1, None, D, 1, C, 2)]),
            (vec![(1, None, B, 1, C, 2)], vec![(1, None, B, 2, C, 1)]),
            (vec![(1, None, B, 1, A, 2)], vec![(1, None, B, 2, A, 1)]),
            // 11..16: commutation with a spectral factor
            (
                vec![(1, None, A, 2, B, 1), (-1, None, A, 1, B, 2)],
                vec![(1, Some((2, 1)), B, 2, A, 1)],
            ),
            (
                vec![(1, None, C, 2, A, 1), (-1, None, C, 1, A, 2)],
                vec![(1, Some((1, 2)), A, 1, C, 2)],
            ),
            (
                vec![(1, None, A, 1, D, 2), (-1, None, A, 2, D, 1)],
                vec![(1, Some((1, 2)), B, 2, C, 1)],
            ),
            (
                vec![(1, None, D, 2, B, 1), (-1, None, D, 1, B, 2)],
                vec![(1, Some((1, 2)), B, 1, D, 2)],
            ),
            (
                vec![(1, None, C, 1, D, 2), (-1, None, C, 2, D, 1)],
                vec![(1, Some((1, 2)), D, 2, C, 1)],
            ),
            (
                vec![(1, None, C, 2, B, 1), (-1, None, C, 1, B, 2)],
                vec![(1, Some((1, 2)), A, 1, D, 2), (-1, Some((1, 2)), D, 2, A, 1)],
            ),
        ],
        Model::Vic => vec![
            (vec![(1, None, A, 1, A, 2)], vec![(1, None, A, 2, A, 1)]),
            (vec![(1, None, B, 1, B, 2)], vec![(1, None, B, 2, B, 1)]),
            (vec![(1, None, A, 1, B, 2)], vec![(1, None, A, 2, B, 1)]),
            (
                vec![(1, None, B, 1, A, 2)],
                vec![(1, None, B, 2, A, 1), (1, Some((2, 1)), A, 2, B, 1)],
            ),
            (vec![(1, None, C, 1, A, 2)], vec![(1, None, C, 2, A, 1)]),
            (vec![(1, None, C, 1, B, 2)], vec![(1, None, C, 2, B, 1)]),
            (
                vec![(1, None, D, 1, A, 2)],
                vec![(1, None, D, 2, A, 1), (1, Some((2, 1)), C, 2, B, 1)],
            ),
            (vec![(1, None, D, 1, B, 2)], vec![(1, None, D, 2, B, 1)]),
            (
                vec![(1, None, A, 1, C, 2), (1, Some((2, 1)), C, 1, A, 2)],
                vec![(1, None, A, 2, C, 1)],
            ),
            (
                vec![(1, None, A, 1, D, 2), (1, Some((2, 1)), C, 1, B, 2)],
                vec![(1, None, A, 2, D, 1)],
            ),
            (
                vec![(1, None, B, 1, C, 2), (1, Some((2, 1)), D, 1, A, 2)],
                vec![(1, None, B, 2, C, 1), (1, Some((2, 1)), A, 2, D, 1)],
            ),
            (
                vec![(1, None, B, 1, D, 2), (1, Some((2, 1)), D, 1, B, 2)],
                vec![(1, None, B, 2, D, 1)],
            ),
            (vec![(1, None, C, 1, C, 2)], vec![(1, None, C, 2, C, 1)]),
            (vec![(1, None, C, 1, D, 2)], vec![(1, None, C, 2, D, 1)]),
            (
                vec![(1, None, D, 1, C, 2)],
                vec![(1, None, D, 2, C, 1), (1, Some((2, 1)), C, 2, D, 1)],
            ),
            (vec![(1, None, D, 1, D, 2)], vec![(1, None, D, 2, D, 1)]),
        ],
    };
    rows.into_iter()
        .enumerate()
        .map(|(i, (lhs, rhs))| Relation {
            name: format!("listed:{:02}", i + 1),
            lhs: listed(vs, &lhs),
            rhs: listed(vs, &rhs),
        })
        .collect()
}

pub(crate) fn eval_side(
    vs: &VarSet,
    n: usize,
    terms: &[RelTerm],
    blocks1: &BTreeMap<OpTag, SparseOperator>,
    blocks2: &BTreeMap<OpTag, SparseOperator>,
) -> SparseOperator {
    let mut acc = SparseOperator::zero(vs, n);
    for t in terms {
        let pick = |(tag, arg): (OpTag, u8)| -> &SparseOperator {
            match arg {
                1 => &blocks1[&tag],
                2 => &blocks2[&tag],
                _ => unreachable!(),
            }
        };
        let prod = pick(t.left).after(pick(t.right));
        acc = acc.add(&prod.scale(&RatFunc::from_poly(t.coef.clone())));
    }
    acc
}

/// Verify every generated and listed exchange relation between the monodromy
/// blocks of the model at chain length `n`.
pub fn check_sixteen(model: Model, n: usize) -> Vec<Mismatch> {
    let vs = VarSet::chain(n);
    let blocks1 = monodromy_blocks(model, &vs, n, vs.v("x1"));
    let blocks2 = monodromy_blocks(model, &vs, n, vs.v("x2"));
    let mut out = Vec::new();
    let mut rels = generated_relations(model, &vs);
    rels.extend(listed_relations(model, &vs));
    for rel in rels {
        let lhs = eval_side(&vs, n, &rel.lhs, &blocks1, &blocks2);
        let rhs = eval_side(&vs, n, &rel.rhs, &blocks1, &blocks2);
        out.extend(op_mismatches(Some(&rel.name), &lhs, &rhs));
    }
    out
}
