//! Equivariant Schubert classes of Grassmannians in moment-graph form.
//!
//! A class assigns to each torus fixed point (a 0/1 word of fixed weight)
//! a rational function of the equivariant parameters. Chamber families —
//! one family of classes per permutation — are built two independent
//! ways, by relabeling the identity-chamber family and by conjugated
//! divided differences, and checked against their axioms: support in a
//! twisted dominance order, a product formula on the diagonal,
//! homogeneity, divisibility along moment-graph edges, wall-crossing
//! between adjacent chambers (which matches a vertex-model `R`-matrix),
//! uniqueness as solutions of an exact linear system, and the dictionary
//! sending Bethe vectors to fixed-point indicators.

use crate::exactalg::{Coeff, MultiPoly, RatFunc, VarSet};
use crate::perm::Permutation;
use crate::report::Mismatch;
use crate::spinspace::{SparseOperator, SpinWord, TensorVector};
use crate::vertexmodel::{r_local, Model};
use crate::ybops::{bethe_normalized, triangular_key};
use num_traits::Zero;
use std::collections::BTreeMap;

/// A full chamber family: one class per fixed point of the same weight.
pub type Family = BTreeMap<SpinWord, GKMClass>;

/// A function from torus fixed points to rational functions; zero values
/// are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GKMClass {
    vs: VarSet,
    len: usize,
    vals: BTreeMap<SpinWord, RatFunc>,
}

impl GKMClass {
    pub fn zero(vs: &VarSet, len: usize) -> GKMClass {
        GKMClass {
            vs: vs.clone(),
            len,
            vals: BTreeMap::new(),
        }
    }

    /// The class supported at a single point with the given value.
    pub fn point(vs: &VarSet, at: SpinWord, val: RatFunc) -> GKMClass {
        let mut c = GKMClass::zero(vs, at.len());
        c.set(at, val);
        c
    }

    /// The idempotent of a fixed point: value one there, zero elsewhere.
    pub fn indicator(vs: &VarSet, at: SpinWord) -> GKMClass {
        GKMClass::point(vs, at, RatFunc::one(vs))
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.vals.is_empty()
    }

    pub fn vs(&self) -> &VarSet {
        &self.vs
    }

    pub fn get(&self, at: &SpinWord) -> RatFunc {
        self.vals
            .get(at)
            .cloned()
            .unwrap_or_else(|| RatFunc::zero(&self.vs))
    }

    pub fn set(&mut self, at: SpinWord, val: RatFunc) {
        assert_eq!(at.len(), self.len, "word length mismatch");
        if val.is_zero() {
            self.vals.remove(&at);
        } else {
            self.vals.insert(at, val);
        }
    }

    pub fn support(&self) -> Vec<SpinWord> {
        self.vals.keys().copied().collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&SpinWord, &RatFunc)> {
        self.vals.iter()
    }

    pub fn add(&self, other: &GKMClass) -> GKMClass {
        let mut out = self.clone();
        for (w, f) in &other.vals {
            out.set(*w, out.get(w).add(f));
        }
        out
    }

    pub fn sub(&self, other: &GKMClass) -> GKMClass {
        let mut out = self.clone();
        for (w, f) in &other.vals {
            out.set(*w, out.get(w).sub(f));
        }
        out
    }

    pub fn scale(&self, f: &RatFunc) -> GKMClass {
        let mut out = GKMClass::zero(&self.vs, self.len);
        for (w, g) in &self.vals {
            out.set(*w, g.mul(f));
        }
        out
    }

    /// The relabeling action of a permutation: the new class at `w·μ` is
    /// the old value at `μ` with parameters renamed `t_i -> t_{w(i)}`.
    pub fn twisted(&self, w: &Permutation) -> GKMClass {
        let mut out = GKMClass::zero(&self.vs, self.len);
        let map = w.t_map();
        for (mu, f) in &self.vals {
            out.set(mu.act(w), f.permute_ts(&map));
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let map: serde_json::Map<String, serde_json::Value> = self
            .vals
            .iter()
            .map(|(w, f)| (w.to_string(), serde_json::Value::String(f.to_string())))
            .collect();
        serde_json::Value::Object(map)
    }
}

/// Differences between two classes, one line per disagreeing fixed point.
pub fn class_mismatches(relation: Option<&str>, lhs: &GKMClass, rhs: &GKMClass) -> Vec<Mismatch> {
    let mut words: Vec<SpinWord> = lhs.support();
    words.extend(rhs.support());
    words.sort();
    words.dedup();
    let mut out = Vec::new();
    for w in words {
        let a = lhs.get(&w);
        let b = rhs.get(&w);
        if a != b {
            out.push(Mismatch {
                relation: relation.map(|s| s.to_string()),
                row: w.to_string(),
                col: "-".to_string(),
                lhs: a.to_string(),
                rhs: b.to_string(),
            });
        }
    }
    out
}

/// Number of inversions of a 0/1 word: pairs `i<j` with `w_i > w_j`.
pub fn word_inversions(w: &SpinWord) -> usize {
    let mut inv = 0;
    for i in 1..=w.len() {
        for j in (i + 1)..=w.len() {
            if w.bit(i) > w.bit(j) {
                inv += 1;
            }
        }
    }
    inv
}

/// Dominance on words of equal weight: `mu >= lam` iff every prefix of
/// `mu` has at least as many ones.
pub fn dominance_ge(mu: &SpinWord, lam: &SpinWord) -> bool {
    assert_eq!(mu.len(), lam.len());
    let mut a = 0i32;
    let mut b = 0i32;
    for p in 1..=mu.len() {
        a += mu.bit(p) as i32;
        b += lam.bit(p) as i32;
        if a < b {
            return false;
        }
    }
    true
}

/// The dominance order twisted by a chamber permutation, with its
/// associated inversion sets, lengths, and diagonal products.
#[derive(Clone, Debug)]
pub struct TwistOrder {
    w: Permutation,
    w_inv: Permutation,
}

impl TwistOrder {
    pub fn new(w: &Permutation) -> TwistOrder {
        TwistOrder {
            w: w.clone(),
            w_inv: w.inverse(),
        }
    }

    /// The word seen from the chamber: position `j` reads `λ_{w(j)}`.
    pub fn untwist(&self, lam: &SpinWord) -> SpinWord {
        lam.act(&self.w_inv)
    }

    pub fn ge(&self, mu: &SpinWord, lam: &SpinWord) -> bool {
        dominance_ge(&self.untwist(mu), &self.untwist(lam))
    }

    /// Homogeneity degree of the class at `lam`.
    pub fn length(&self, lam: &SpinWord) -> usize {
        word_inversions(&self.untwist(lam))
    }

    /// Inverted pairs `(i, j)`: positions listed in chamber order whose
    /// letters descend, read back in the standard labels.
    pub fn inv_pairs(&self, lam: &SpinWord) -> Vec<(usize, usize)> {
        let n = lam.len();
        let mut out = Vec::new();
        for a in 1..=n {
            for b in (a + 1)..=n {
                let (i, j) = (self.w.apply(a), self.w.apply(b));
                if lam.bit(i) > lam.bit(j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// The diagonal normalization `Π (t_i - t_j)` over inverted pairs.
    pub fn diagonal(&self, vs: &VarSet, lam: &SpinWord) -> MultiPoly {
        MultiPoly::prod(
            vs,
            &self
                .inv_pairs(lam)
                .iter()
                .map(|&(i, j)| MultiPoly::lin_diff(vs, i, j))
                .collect::<Vec<_>>(),
        )
    }
}

/// Divided difference along the transposition of positions `b`, `c`:
/// `(Δα)(μ) = [α(μ) - τ(α(τμ))] / (t_b - t_c)`.
pub fn demazure_positions(alpha: &GKMClass, b: usize, c: usize) -> GKMClass {
    let vs = alpha.vs().clone();
    let len = alpha.len();
    let tau = Permutation::transposition(len, b, c);
    let tmap = tau.t_map();
    let inv = RatFunc::inv_lin_prod(&vs, &[(b as u16, c as u16)]);
    let mut words = alpha.support();
    words.extend(alpha.support().iter().map(|w| w.act(&tau)));
    words.sort();
    words.dedup();
    let mut out = GKMClass::zero(&vs, len);
    for mu in words {
        let num = alpha.get(&mu).sub(&alpha.get(&mu.act(&tau)).permute_ts(&tmap));
        out.set(mu, num.mul(&inv));
    }
    out
}

/// Divided difference along adjacent positions `a`, `a+1`.
pub fn demazure(alpha: &GKMClass, a: usize) -> GKMClass {
    demazure_positions(alpha, a, a + 1)
}

/// Fixed points of the length-`len`, weight-`n_ones` Grassmannian in a
/// linear order refining dominance, largest first.
fn weight_words_desc(len: usize, n_ones: usize) -> Vec<SpinWord> {
    let mut words = SpinWord::all_weight(len, n_ones);
    let key = |w: &SpinWord| -> Vec<u8> {
        let mut acc = 0u8;
        (1..=w.len())
            .map(|p| {
                acc += w.bit(p);
                acc
            })
            .collect()
    };
    words.sort_by(|a, b| key(b).cmp(&key(a)));
    words
}

/// The identity-chamber family: seeded by the point class at the
/// dominance-largest word, value `Π_{i<=n<j} (t_i - t_j)`, and propagated
/// downward by divided differences.
pub fn schubert_family_untwisted(vs: &VarSet, len: usize, n_ones: usize) -> Family {
    let words = weight_words_desc(len, n_ones);
    let top = words[0];
    let mut seed = MultiPoly::one(vs);
    for i in 1..=n_ones {
        for j in (n_ones + 1)..=len {
            seed = seed.mul(&MultiPoly::lin_diff(vs, i, j));
        }
    }
    let mut fam = Family::new();
    fam.insert(top, GKMClass::point(vs, top, RatFunc::from_poly(seed)));
    for &nu in &words[1..] {
        let a = (1..len)
            .find(|&a| nu.bit(a) < nu.bit(a + 1))
            .expect("non-maximal word has an ascent");
        let prev = nu.swapped(a);
        let cls = demazure(&fam[&prev], a);
        fam.insert(nu, cls);
    }
    fam
}

/// The chamber family of `w`, by relabeling the identity-chamber family:
/// the class at `w·ν` is the untwisted class at `ν` with parameters
/// renamed through `w`.
pub fn schubert_family(vs: &VarSet, len: usize, n_ones: usize, w: &Permutation) -> Family {
    schubert_family_untwisted(vs, len, n_ones)
        .into_iter()
        .map(|(nu, cls)| (nu.act(w), cls.twisted(w)))
        .collect()
}

/// The same family built independently: seeded at the chamber-largest
/// word and propagated by divided differences conjugated into the
/// chamber (transpositions of positions `w(a)`, `w(a+1)`).
pub fn schubert_family_conjugated(vs: &VarSet, len: usize, n_ones: usize, w: &Permutation) -> Family {
    let words = weight_words_desc(len, n_ones);
    let top = words[0];
    let mut seed = MultiPoly::one(vs);
    for a in 1..=n_ones {
        for b in (n_ones + 1)..=len {
            seed = seed.mul(&MultiPoly::lin_diff(vs, w.apply(a), w.apply(b)));
        }
    }
    let mut fam = Family::new();
    fam.insert(
        top.act(w),
        GKMClass::point(vs, top.act(w), RatFunc::from_poly(seed)),
    );
    for &nu in &words[1..] {
        let a = (1..len)
            .find(|&a| nu.bit(a) < nu.bit(a + 1))
            .expect("non-maximal word has an ascent");
        let prev = nu.swapped(a);
        let cls = demazure_positions(&fam[&prev.act(w)], w.apply(a), w.apply(a + 1));
        fam.insert(nu.act(w), cls);
    }
    fam
}

/// One class of the chamber family of `w`.
pub fn schubert_class(vs: &VarSet, w: &Permutation, lam: SpinWord) -> GKMClass {
    let n_ones = lam.weight();
    schubert_family(vs, lam.len(), n_ones, w)
        .remove(&lam)
        .expect("class indexed by a fixed point")
}

/// Moment-graph divisibility: along every edge (a transposition of two
/// positions) the values differ by a multiple of the edge's weight.
pub fn gkm_check(alpha: &GKMClass) -> Vec<Mismatch> {
    let vs = alpha.vs().clone();
    let len = alpha.len();
    let mut out = Vec::new();
    let support = alpha.support();
    for i in 1..=len {
        for j in (i + 1)..=len {
            let tau = Permutation::transposition(len, i, j);
            for mu in &support {
                if mu.bit(i) == mu.bit(j) {
                    continue;
                }
                let nu = mu.act(&tau);
                if support.contains(&nu) && nu < *mu {
                    continue; // edge already checked from the other end
                }
                let d = alpha.get(mu).sub(&alpha.get(&nu));
                let divisible = d
                    .as_poly()
                    .map(|p| p.divide_by_linear(vs.t(i), vs.t(j)).is_ok())
                    .unwrap_or(false);
                if !divisible {
                    out.push(Mismatch {
                        relation: Some(format!("edge:{i}-{j}")),
                        row: mu.to_string(),
                        col: nu.to_string(),
                        lhs: d.to_string(),
                        rhs: format!("multiple of t{i}-t{j}"),
                    });
                }
            }
        }
    }
    out
}

fn is_homogeneous(p: &MultiPoly, d: usize) -> bool {
    p.terms().all(|(m, _)| m.deg() as usize == d)
}

/// The three axioms of a chamber class: support inside the twisted
/// dominance order, diagonal equal to the inverted-pair product, and
/// homogeneity of the twisted length's degree.
pub fn stab_checks(w: &Permutation, lam: SpinWord, alpha: &GKMClass) -> Vec<Mismatch> {
    let vs = alpha.vs().clone();
    let order = TwistOrder::new(w);
    let mut out = Vec::new();
    for (mu, f) in alpha.iter() {
        if !order.ge(mu, &lam) {
            out.push(Mismatch {
                relation: Some("support".to_string()),
                row: mu.to_string(),
                col: lam.to_string(),
                lhs: f.to_string(),
                rhs: "0".to_string(),
            });
        }
    }
    let diag = RatFunc::from_poly(order.diagonal(&vs, &lam));
    let got = alpha.get(&lam);
    if got != diag {
        out.push(Mismatch {
            relation: Some("diagonal".to_string()),
            row: lam.to_string(),
            col: lam.to_string(),
            lhs: got.to_string(),
            rhs: diag.to_string(),
        });
    }
    let d = order.length(&lam);
    for (mu, f) in alpha.iter() {
        let ok = f.as_poly().map(|p| is_homogeneous(&p, d)).unwrap_or(false);
        if !ok {
            out.push(Mismatch {
                relation: Some("degree".to_string()),
                row: mu.to_string(),
                col: lam.to_string(),
                lhs: f.to_string(),
                rhs: format!("homogeneous polynomial of degree {d}"),
            });
        }
    }
    out
}

/// Full verification of one chamber family: both construction routes
/// agree, and every class passes the moment-graph and axiom checks.
pub fn check_schubert(len: usize, n_ones: usize, w: &Permutation) -> Vec<Mismatch> {
    let vs = VarSet::chain(len);
    let fam = schubert_family(&vs, len, n_ones, w);
    let fam2 = schubert_family_conjugated(&vs, len, n_ones, w);
    let mut out = Vec::new();
    for (lam, cls) in &fam {
        out.extend(class_mismatches(
            Some(&format!("routes:{lam}")),
            cls,
            &fam2[lam],
        ));
        for mut m in gkm_check(cls) {
            m.relation = Some(format!("gkm:{lam}:{}", m.relation.unwrap_or_default()));
            out.push(m);
        }
        out.extend(stab_checks(w, *lam, cls));
    }
    out
}

/// Cross a wall: express the class of the adjacent chamber `w·s_i` in the
/// chamber family of `w`. Crossing adds a correction exactly when the
/// word ascends along the transposed positions.
pub fn wall_cross(family: &Family, w: &Permutation, i: usize, lam: SpinWord) -> GKMClass {
    let a = w.apply(i);
    let b = w.apply(i + 1);
    let tau = Permutation::transposition(lam.len(), a, b);
    let swapped = &family[&lam.act(&tau)];
    if lam.bit(b) > lam.bit(a) {
        let vs = swapped.vs().clone();
        let coef = RatFunc::from_poly(MultiPoly::lin_diff(&vs, b, a));
        swapped.add(&family[&lam].scale(&coef))
    } else {
        swapped.clone()
    }
}

/// The wall-crossing of every class at once equals the two-site vertex
/// `R`-matrix, with parameters the transposed pair's, acting on the
/// family seen as columns of a matrix over the fixed-point basis.
pub fn wallcross_vs_r(len: usize, n_ones: usize, w: &Permutation, i: usize) -> Vec<Mismatch> {
    let vs = VarSet::chain(len);
    let fam_w = schubert_family(&vs, len, n_ones, w);
    let fam_ws = schubert_family(&vs, len, n_ones, &w.after(&Permutation::adjacent(len, i)));
    let a = w.apply(i);
    let b = w.apply(i + 1);
    let local = r_local(Model::Osc, &vs, &MultiPoly::t(&vs, b), &MultiPoly::t(&vs, a));
    let emb = SparseOperator::embed_two_site(&vs, len, a, b, &local);
    let mut out = Vec::new();
    for (lam, target) in &fam_ws {
        let mut rhs = GKMClass::zero(&vs, len);
        for (mu, col, f) in emb.entries() {
            if col == *lam && mu.weight() == n_ones {
                rhs = rhs.add(&fam_w[&mu].scale(&f));
            }
        }
        out.extend(class_mismatches(
            Some(&format!("wall-r:{lam}:i{i}")),
            target,
            &rhs,
        ));
    }
    out
}

/// Check wall-crossing against the directly built adjacent family, and
/// against the `R`-matrix formulation.
pub fn check_wall_cross(len: usize, n_ones: usize, w: &Permutation, i: usize) -> Vec<Mismatch> {
    let vs = VarSet::chain(len);
    let fam_w = schubert_family(&vs, len, n_ones, w);
    let fam_ws = schubert_family(&vs, len, n_ones, &w.after(&Permutation::adjacent(len, i)));
    let mut out = Vec::new();
    for (lam, target) in &fam_ws {
        let crossed = wall_cross(&fam_w, w, i, *lam);
        out.extend(class_mismatches(
            Some(&format!("wall:{lam}:i{i}")),
            target,
            &crossed,
        ));
    }
    out.extend(wallcross_vs_r(len, n_ones, w, i));
    out
}

/// Transport the identity-chamber family along a word of adjacent
/// transpositions by wall-crossing only.
pub fn wallcross_chain(vs: &VarSet, len: usize, n_ones: usize, word: &[u16]) -> Family {
    let mut fam = schubert_family(vs, len, n_ones, &Permutation::identity(len));
    let mut w = Permutation::identity(len);
    for &a in word {
        let next: Family = fam
            .keys()
            .map(|&lam| (lam, wall_cross(&fam, &w, a as usize, lam)))
            .collect();
        fam = next;
        w = w.after(&Permutation::adjacent(len, a as usize));
    }
    fam
}

/// The longest-chamber diagonal at the dominance-smallest word: the
/// product `Π_{i<=k<j} (t_j - t_i)` over split pairs.
pub fn beta_poly(vs: &VarSet, len: usize, n_ones: usize) -> MultiPoly {
    let k = len - n_ones;
    let mut out = MultiPoly::one(vs);
    for i in 1..=k {
        for j in (k + 1)..=len {
            out = out.mul(&MultiPoly::lin_diff(vs, j, i));
        }
    }
    out
}

/// The symmetric-group recursion of the longest-chamber family: twisting
/// a class by `s_i` leaves it invariant unless the index word ascends at
/// `i`, in which case a correction appears.
pub fn check_sym2(len: usize, n_ones: usize) -> Vec<Mismatch> {
    let vs = VarSet::chain(len);
    let w0 = Permutation::longest(len);
    let fam = schubert_family(&vs, len, n_ones, &w0);
    let mut out = Vec::new();
    for (lam, cls) in &fam {
        for i in 1..len {
            let si = Permutation::adjacent(len, i);
            let lhs = cls.twisted(&si);
            let rhs = if lam.bit(i) < lam.bit(i + 1) {
                let coef = RatFunc::from_poly(MultiPoly::lin_diff(&vs, i + 1, i));
                cls.sub(&fam[&lam.swapped(i)].scale(&coef))
            } else {
                cls.clone()
            };
            out.extend(class_mismatches(
                Some(&format!("sym:{lam}:s{i}")),
                &lhs,
                &rhs,
            ));
        }
    }
    out
}

/// The geometric dictionary: send each basis word of the spin space to
/// the longest-chamber class it names.
pub fn psi(vs: &VarSet, v: &TensorVector) -> GKMClass {
    let len = v.len();
    let support = v.support();
    if support.is_empty() {
        return GKMClass::zero(vs, len);
    }
    let n_ones = support[0].weight();
    assert!(
        support.iter().all(|w| w.weight() == n_ones),
        "dictionary applies weight by weight"
    );
    let fam = schubert_family(vs, len, n_ones, &Permutation::longest(len));
    let mut out = GKMClass::zero(vs, len);
    for (lam, f) in v.iter() {
        out = out.add(&fam[lam].scale(f));
    }
    out
}

/// The dictionary on distinguished vectors: every normalized Bethe vector
/// maps to the fixed-point indicator of its word, and expanding the image
/// of a standard basis vector recovers that vector.
pub fn check_dictionary(len: usize) -> Vec<Mismatch> {
    let vs = VarSet::chain(len);
    let mut out = Vec::new();
    for n_ones in 0..=len {
        for lam in SpinWord::all_weight(len, n_ones) {
            let b = bethe_normalized(&vs, len, lam);
            out.extend(class_mismatches(
                Some(&format!("bethe-indicator:{lam}")),
                &psi(&vs, &b),
                &GKMClass::indicator(&vs, lam),
            ));
            let v = TensorVector::basis(&vs, lam);
            let back = fixedpoint_expand(&psi(&vs, &v), n_ones);
            out.extend(crate::report::vec_mismatches(
                Some(&format!("roundtrip:{lam}")),
                &back,
                &v,
            ));
        }
    }
    out
}

/// Expand a class in the longest-chamber family by the triangular solve,
/// returning the coordinate vector in the spin-space basis.
pub fn fixedpoint_expand(alpha: &GKMClass, n_ones: usize) -> TensorVector {
    let vs = alpha.vs().clone();
    let len = alpha.len();
    let fam = schubert_family(&vs, len, n_ones, &Permutation::longest(len));
    let mut words = SpinWord::all_weight(len, n_ones);
    words.sort_by_key(triangular_key);
    let mut coords = TensorVector::zero(&vs, len);
    let mut residual = alpha.clone();
    for lam in words {
        let diag = fam[&lam].get(&lam);
        let c = residual
            .get(&lam)
            .mul(&diag.inv().expect("diagonal is a product of linear differences"));
        if !c.is_zero() {
            residual = residual.sub(&fam[&lam].scale(&c));
            coords.add_to(lam, c);
        }
    }
    assert!(
        residual.is_empty(),
        "triangular expansion must exhaust the class"
    );
    coords
}

fn degree_monos(num_vars: usize, d: u16) -> Vec<Vec<u16>> {
    if num_vars == 0 {
        return if d == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for e in 0..=d {
        for mut rest in degree_monos(num_vars - 1, d - e) {
            let mut v = vec![e];
            v.append(&mut rest);
            out.push(v);
        }
    }
    out
}

fn rank(mut m: Vec<Vec<Coeff>>) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let pivot = m[r][c].clone();
        for x in m[r].iter_mut() {
            *x = &*x / &pivot;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for k in c..cols {
                    let sub = &m[r][k] * &f;
                    m[i][k] = &m[i][k] - &sub;
                }
            }
        }
        r += 1;
    }
    r
}

/// Uniqueness of the chamber class as the solution of its axioms: any two
/// solutions differ by a homogeneous class of the same degree, supported
/// in the twisted order, vanishing at the index point, and satisfying
/// moment-graph divisibility — and that linear system has full rank.
pub fn check_uniqueness(len: usize, n_ones: usize, w: &Permutation, lam: SpinWord) -> Vec<Mismatch> {
    let order = TwistOrder::new(w);
    let all: Vec<SpinWord> = SpinWord::all_weight(len, n_ones);
    let upper: Vec<SpinWord> = all.iter().copied().filter(|mu| order.ge(mu, &lam)).collect();
    let d = order.length(&lam) as u16;
    let monos = degree_monos(len, d);
    let n_mono = monos.len();
    let idx = |mu: &SpinWord, m: usize| -> Option<usize> {
        upper.iter().position(|u| u == mu).map(|p| p * n_mono + m)
    };
    let n_unknowns = upper.len() * n_mono;
    let mut rows: Vec<Vec<Coeff>> = Vec::new();
    // the index point's values are pinned
    for m in 0..n_mono {
        let mut row = vec![Coeff::zero(); n_unknowns];
        row[idx(&lam, m).expect("index point is in its own support")] = crate::exactalg::q(1);
        rows.push(row);
    }
    // divisibility along each edge, specialized at the wall
    for i in 1..=len {
        for j in (i + 1)..=len {
            for mu in &all {
                if mu.bit(i) != 1 || mu.bit(j) != 0 {
                    continue; // visit each edge from one end only
                }
                let nu = mu.act(&Permutation::transposition(len, i, j));
                if !upper.contains(mu) && !upper.contains(&nu) {
                    continue;
                }
                let mut grouped: BTreeMap<Vec<u16>, Vec<Coeff>> = BTreeMap::new();
                for (m, exps) in monos.iter().enumerate() {
                    let mut key = exps.clone();
                    key[i - 1] += key[j - 1];
                    key[j - 1] = 0;
                    let row = grouped
                        .entry(key)
                        .or_insert_with(|| vec![Coeff::zero(); n_unknowns]);
                    if let Some(p) = idx(mu, m) {
                        row[p] = &row[p] + &crate::exactalg::q(1);
                    }
                    if let Some(p) = idx(&nu, m) {
                        row[p] = &row[p] - &crate::exactalg::q(1);
                    }
                }
                rows.extend(grouped.into_values());
            }
        }
    }
    let r = rank(rows);
    if r < n_unknowns {
        vec![Mismatch {
            relation: Some("unique".to_string()),
            row: lam.to_string(),
            col: "-".to_string(),
            lhs: format!("solution space of dimension {}", n_unknowns - r),
            rhs: "single solution".to_string(),
        }]
    } else {
        Vec::new()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rf(p: MultiPoly) -> RatFunc {
        RatFunc::from_poly(p)
    }

    #[test]
    fn projective_line_table() {
        let vs = VarSet::chain(2);
        let d12 = MultiPoly::lin_diff(&vs, 1, 2);
        let d21 = MultiPoly::lin_diff(&vs, 2, 1);
        let (w10, w01) = (SpinWord::parse("10"), SpinWord::parse("01"));
        let fam_e = schubert_family(&vs, 2, 1, &Permutation::identity(2));
        assert_eq!(fam_e[&w10], GKMClass::point(&vs, w10, rf(d12.clone())));
        let mut full = GKMClass::indicator(&vs, w10);
        full.set(w01, RatFunc::one(&vs));
        assert_eq!(fam_e[&w01], full);
        let fam_s = schubert_family(&vs, 2, 1, &Permutation::longest(2));
        assert_eq!(fam_s[&w10], full);
        assert_eq!(fam_s[&w01], GKMClass::point(&vs, w01, rf(d21)));
    }

    #[test]
    fn routes_and_axioms_small() {
        for len in 1..=3 {
            for w in Permutation::all(len) {
                for n_ones in 0..=len {
                    assert!(
                        check_schubert(len, n_ones, &w).is_empty(),
                        "len={len} n={n_ones} w={:?}",
                        w.images()
                    );
                }
            }
        }
    }

    #[test]
    fn wall_crossing_small() {
        for w in Permutation::all(3) {
            for i in 1..3 {
                for n_ones in 0..=3 {
                    assert!(
                        check_wall_cross(3, n_ones, &w, i).is_empty(),
                        "n={n_ones} w={:?} i={i}",
                        w.images()
                    );
                }
            }
        }
    }

    #[test]
    fn chains_reach_the_longest_chamber() {
        let vs = VarSet::chain(3);
        let w0 = Permutation::longest(3);
        let direct = schubert_family(&vs, 3, 1, &w0);
        for word in w0.all_reduced_words() {
            let transported = wallcross_chain(&vs, 3, 1, &word);
            assert_eq!(transported, direct, "word={word:?}");
        }
    }

    #[test]
    fn symmetric_recursion_and_beta() {
        for n_ones in 0..=3 {
            assert!(check_sym2(3, n_ones).is_empty(), "n={n_ones}");
        }
        // the longest-chamber diagonal at the smallest word is the split product
        let vs = VarSet::chain(3);
        let w0 = Permutation::longest(3);
        for n_ones in 0..=3 {
            let zeta = SpinWord::from_ones(
                3,
                &((3 - n_ones + 1)..=3).collect::<Vec<_>>(),
            );
            let fam = schubert_family(&vs, 3, n_ones, &w0);
            assert_eq!(
                fam[&zeta].get(&zeta),
                rf(beta_poly(&vs, 3, n_ones)),
                "n={n_ones}"
            );
        }
    }

    #[test]
    fn uniqueness_small() {
        for len in 2..=3 {
            for w in Permutation::all(len) {
                for n_ones in 0..=len {
                    for lam in SpinWord::all_weight(len, n_ones) {
                        assert!(
                            check_uniqueness(len, n_ones, &w, lam).is_empty(),
                            "len={len} w={:?} lam={lam}",
                            w.images()
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn dictionary_roundtrip_and_bethe_idempotents() {
        let vs = VarSet::chain(3);
        for n_ones in 0..=3 {
            for lam in SpinWord::all_weight(3, n_ones) {
                let v = TensorVector::basis(&vs, lam);
                let class = psi(&vs, &v);
                assert_eq!(fixedpoint_expand(&class, n_ones), v, "lam={lam}");
                // normalized Bethe vectors map to fixed-point idempotents
                let b = bethe_normalized(&vs, 3, lam);
                assert_eq!(
                    psi(&vs, &b),
                    GKMClass::indicator(&vs, lam),
                    "lam={lam}"
                );
            }
        }
        assert!(check_dictionary(3).is_empty());
    }
}
