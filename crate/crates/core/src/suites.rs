//! Named verification suites behind one runner trait.
//!
//! Every family of exact identity checks in this crate is packaged here as a
//! [`Suite`]: a named unit of work that produces one [`Report`] per
//! (model, length) it covers. The [`registry`] maps names to boxed runners so
//! a front end can select suites at runtime. Suites that support it also
//! carry a seeded spoiler — a deliberately broken variant of the same
//! construction that must produce mismatches; these are the negative
//! controls that keep the passing runs honest.

use crate::convolution::{
    check_chern, check_d_certificate, check_geom_sixteen, check_match, check_proprel,
    check_pushforward, explicit_bethe_action, explicit_standard_action,
};
use crate::exactalg::{MultiPoly, RatFunc, VarSet};
use crate::gkmschubert::{
    check_dictionary, check_schubert, check_sym2, check_uniqueness, check_wall_cross,
    class_mismatches, schubert_family, wallcross_chain, GKMClass,
};
use crate::perm::Permutation;
use crate::quantumcoha::{
    check_coha, check_current, check_quantum_commute, rimhook_d, rimhook_extracted,
    rimhook_strip, site_swap,
};
use crate::report::{op_mismatches, Mismatch, Report};
use crate::spinspace::{SparseOperator, SpinWord};
use crate::vertexmodel::{
    check_lattice, check_rll, check_rmm, check_sixteen, eval_side, generated_relations,
    lax_local, listed_relations, monodromy, monodromy_blocks, r_local, Model,
};
use crate::ybops::{
    bethe_basis_check, bethe_eigencheck, check_bethe_closed_forms, check_bethe_permute,
    check_commute, check_coxeter, check_lemma_ac,
};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Options for one suite invocation.
#[derive(Clone, Debug)]
pub struct SuiteOptions {
    /// Chain length; `None` runs the suite's default ladder of lengths.
    pub n: Option<usize>,
    /// Restrict to one model where the suite distinguishes the two.
    pub model: Option<Model>,
    /// Run the suite's seeded spoiler instead of the honest construction.
    pub perturb: bool,
    /// Seed for the spoiler's choices and for sampled inputs.
    pub seed: u64,
}

impl Default for SuiteOptions {
    fn default() -> SuiteOptions {
        SuiteOptions {
            n: None,
            model: None,
            perturb: false,
            seed: 0,
        }
    }
}

/// A named, runtime-selectable verification suite. Runners are immutable
/// and shareable, so independent suites can be dispatched to worker threads.
pub trait Suite: Send + Sync {
    /// Registry name, matched against `--suite`.
    fn name(&self) -> &'static str;
    /// One-line description of what the suite verifies.
    fn summary(&self) -> &'static str;
    /// Largest chain length the suite accepts.
    fn cap(&self) -> usize;
    /// Whether the suite has a seeded spoiler variant.
    fn perturbable(&self) -> bool;
    /// Run the suite, one report per unit of work.
    ///
    /// With `opt.perturb` set this runs the spoiler, which must only be
    /// requested on a suite with `perturbable() == true`.
    fn run(&self, opt: &SuiteOptions) -> Vec<Report>;
}

/// A registry entry: static metadata plus the two run bodies.
struct Entry {
    name: &'static str,
    summary: &'static str,
    cap: usize,
    body: fn(&SuiteOptions) -> Vec<Report>,
    spoiler: Option<fn(&SuiteOptions) -> Vec<Report>>,
}

impl Suite for Entry {
    fn name(&self) -> &'static str {
        self.name
    }

    fn summary(&self) -> &'static str {
        self.summary
    }

    fn cap(&self) -> usize {
        self.cap
    }

    fn perturbable(&self) -> bool {
        self.spoiler.is_some()
    }

    fn run(&self, opt: &SuiteOptions) -> Vec<Report> {
        if opt.perturb {
            let f = self
                .spoiler
                .unwrap_or_else(|| panic!("suite {} has no perturbed variant", self.name));
            f(opt)
        } else {
            (self.body)(opt)
        }
    }
}

/// All suites, in reporting order.
pub fn registry() -> Vec<Box<dyn Suite>> {
    vec![
        Box::new(Entry {
            name: "rll",
            summary: "local and monodromy-level exchange identities of both models",
            cap: 5,
            body: run_rll,
            spoiler: Some(spoiled_rll),
        }),
        Box::new(Entry {
            name: "sixteen",
            summary: "the sixteen exchange relations between monodromy blocks, generated and listed forms",
            cap: 5,
            body: run_sixteen,
            spoiler: Some(spoiled_sixteen),
        }),
        Box::new(Entry {
            name: "lattice",
            summary: "monodromy blocks by operator composition equal direct lattice enumeration",
            cap: 5,
            body: run_lattice,
            spoiler: None,
        }),
        Box::new(Entry {
            name: "bethe",
            summary: "Bethe vectors: eigenvalue property, triangular basis, exchange lemma, closed forms",
            cap: 5,
            body: run_bethe,
            spoiler: None,
        }),
        Box::new(Entry {
            name: "sym",
            summary: "symmetric-group structure: Coxeter relations, commutation with the monodromy, Bethe permutation",
            cap: 5,
            body: run_sym,
            spoiler: Some(spoiled_commute),
        }),
        Box::new(Entry {
            name: "schubert",
            summary: "chamber families of moment-graph classes: construction routes, axioms, uniqueness",
            cap: 5,
            body: run_schubert,
            spoiler: None,
        }),
        Box::new(Entry {
            name: "wallcross",
            summary: "wall-crossing between adjacent chambers: direct, R-matrix form, chains to the longest chamber",
            cap: 5,
            body: run_wallcross,
            spoiler: None,
        }),
        Box::new(Entry {
            name: "match",
            summary: "fixed-point convolution operators match the monodromy blocks; geometric relations; dictionary",
            cap: 4,
            body: run_match,
            spoiler: None,
        }),
        Box::new(Entry {
            name: "quantum",
            summary: "deformed transfer matrices commute within and across models; top-coefficient rule; classical limit",
            cap: 6,
            body: run_quantum,
            spoiler: None,
        }),
        Box::new(Entry {
            name: "coha",
            summary: "Chern-twisted convolutions: closed forms, containment, binomial expansion, exterior relations",
            cap: 4,
            body: run_coha,
            spoiler: None,
        }),
        Box::new(Entry {
            name: "current",
            summary: "evaluation action of the current algebra: brackets, equivariance, central and scalar actions",
            cap: 4,
            body: run_current,
            spoiler: None,
        }),
    ]
}

/// Look up one suite by registry name.
pub fn find(name: &str) -> Option<Box<dyn Suite>> {
    registry().into_iter().find(|s| s.name() == name)
}

/// The registry names, in reporting order.
pub fn suite_names() -> Vec<&'static str> {
    registry().iter().map(|s| s.name()).collect()
}

fn models(opt: &SuiteOptions) -> Vec<Model> {
    match opt.model {
        Some(m) => vec![m],
        None => Model::both().to_vec(),
    }
}

/// Lengths one part of a suite runs at: the requested length if any (dropped
/// silently when it exceeds the part's own limit `hi`), the ladder
/// `lo..=hi` otherwise.
fn lengths(opt: &SuiteOptions, lo: usize, hi: usize) -> Vec<usize> {
    match opt.n {
        Some(n) => {
            if n <= hi {
                vec![n]
            } else {
                Vec::new()
            }
        }
        None => (lo..=hi).collect(),
    }
}

fn prefixed(pre: &str, ms: Vec<Mismatch>) -> Vec<Mismatch> {
    ms.into_iter()
        .map(|mut m| {
            m.relation = Some(match m.relation {
                Some(r) => format!("{pre}:{r}"),
                None => pre.to_string(),
            });
            m
        })
        .collect()
}

fn perm_label(w: &Permutation) -> String {
    w.images().iter().map(|i| i.to_string()).collect::<Vec<_>>().join("")
}

fn run_rll(opt: &SuiteOptions) -> Vec<Report> {
    let mut out = Vec::new();
    for m in models(opt) {
        out.push(Report::run("rll", Some(m.name()), None, || {
            check_rll(m, &VarSet::chain(1))
        }));
    }
    for m in models(opt) {
        for n in lengths(opt, 1, 2) {
            out.push(Report::run("rll", Some(m.name()), Some(n), || check_rmm(m, n)));
        }
    }
    out
}

fn run_sixteen(opt: &SuiteOptions) -> Vec<Report> {
    let mut out = Vec::new();
    for m in models(opt) {
        for n in lengths(opt, 2, 4) {
            out.push(Report::run("sixteen", Some(m.name()), Some(n), || {
                check_sixteen(m, n)
            }));
        }
    }
    out
}

fn run_lattice(opt: &SuiteOptions) -> Vec<Report> {
    let mut out = Vec::new();
    for m in models(opt) {
        for n in lengths(opt, 1, 5) {
            out.push(Report::run("lattice", Some(m.name()), Some(n), || {
                check_lattice(m, n)
            }));
        }
    }
    out
}

fn run_bethe(opt: &SuiteOptions) -> Vec<Report> {
    let mut out = Vec::new();
    for m in models(opt) {
        for n in lengths(opt, 1, 5) {
            out.push(Report::run("bethe", Some(m.name()), Some(n), || {
                bethe_eigencheck(m, n)
            }));
        }
    }
    for n in lengths(opt, 1, 5) {
        out.push(Report::run("bethe", None, Some(n), || {
            let mut ms = check_bethe_closed_forms(n);
            if n <= 4 {
                ms.extend(bethe_basis_check(n));
                ms.extend(check_lemma_ac(n));
            }
            ms
        }));
    }
    out
}

fn run_sym(opt: &SuiteOptions) -> Vec<Report> {
    let mut out = Vec::new();
    for n in lengths(opt, 2, 5) {
        out.push(Report::run("sym", None, Some(n), || {
            let mut ms = Vec::new();
            if n <= 4 {
                ms.extend(check_coxeter(n));
            }
            ms.extend(check_bethe_permute(n));
            ms
        }));
    }
    for m in models(opt) {
        for n in lengths(opt, 2, 4) {
            out.push(Report::run("sym", Some(m.name()), Some(n), || check_commute(m, n)));
        }
    }
    out
}

/// Chamber twists exercised at a given length: identity and longest always,
/// every twist at length ≤ 3, a reproducible sample of ten more otherwise.
fn sampled_perms(len: usize, seed: u64) -> Vec<Permutation> {
    if len <= 3 {
        return Permutation::all(len);
    }
    let mut out = vec![Permutation::identity(len), Permutation::longest(len)];
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    while out.len() < 12 {
        let w = Permutation::random(len, &mut rng);
        if !out.contains(&w) {
            out.push(w);
        }
    }
    out
}

/// The two-point table at length two, pinned entry by entry: in the identity
/// chamber the lower class is supported at its own point with value `t1-t2`
/// and the upper class is `1` everywhere; in the longest chamber the roles
/// swap and the diagonal value is `t2-t1`.
fn two_point_table() -> Vec<Mismatch> {
    let vs = VarSet::chain(2);
    let (w10, w01) = (SpinWord::parse("10"), SpinWord::parse("01"));
    let mut full = GKMClass::indicator(&vs, w10);
    full.set(w01, RatFunc::one(&vs));
    let fam_e = schubert_family(&vs, 2, 1, &Permutation::identity(2));
    let fam_s = schubert_family(&vs, 2, 1, &Permutation::longest(2));
    let mut ms = Vec::new();
    ms.extend(class_mismatches(
        Some("table:e:10"),
        &fam_e[&w10],
        &GKMClass::point(&vs, w10, RatFunc::from_poly(MultiPoly::lin_diff(&vs, 1, 2))),
    ));
    ms.extend(class_mismatches(Some("table:e:01"), &fam_e[&w01], &full));
    ms.extend(class_mismatches(Some("table:s1:10"), &fam_s[&w10], &full));
    ms.extend(class_mismatches(
        Some("table:s1:01"),
        &fam_s[&w01],
        &GKMClass::point(&vs, w01, RatFunc::from_poly(MultiPoly::lin_diff(&vs, 2, 1))),
    ));
    ms
}

fn run_schubert(opt: &SuiteOptions) -> Vec<Report> {
    let mut out = Vec::new();
    for len in lengths(opt, 2, 5) {
        out.push(Report::run("schubert", None, Some(len), || {
            let mut ms = Vec::new();
            let perms = sampled_perms(len, opt.seed);
            for n_ones in 0..=len {
                for w in &perms {
                    ms.extend(prefixed(
                        &format!("w{}", perm_label(w)),
                        check_schubert(len, n_ones, w),
                    ));
                }
                ms.extend(check_sym2(len, n_ones));
            }
            if len == 2 {
                ms.extend(two_point_table());
            }
            if len <= 3 {
                for w in Permutation::all(len) {
                    for n_ones in 0..=len {
                        for lam in SpinWord::all_weight(len, n_ones) {
                            ms.extend(prefixed(
                                &format!("w{}", perm_label(&w)),
                                check_uniqueness(len, n_ones, &w, lam),
                            ));
                        }
                    }
                }
            }
            ms
        }));
    }
    out
}

fn run_wallcross(opt: &SuiteOptions) -> Vec<Report> {
    let mut out = Vec::new();
    for len in lengths(opt, 2, 3) {
        out.push(Report::run("wallcross", None, Some(len), || {
            let mut ms = Vec::new();
            for w in Permutation::all(len) {
                for i in 1..len {
                    for n_ones in 0..=len {
                        ms.extend(prefixed(
                            &format!("w{}", perm_label(&w)),
                            check_wall_cross(len, n_ones, &w, i),
                        ));
                    }
                }
            }
            ms
        }));
    }
    // chains of crossings from the identity to the longest chamber
    for len in lengths(opt, 4, 4) {
        out.push(Report::run("wallcross", None, Some(len), || {
            let vs = VarSet::chain(len);
            let w0 = Permutation::longest(len);
            let mut ms = Vec::new();
            for word in w0.all_reduced_words() {
                let label: String =
                    word.iter().map(|a| a.to_string()).collect::<Vec<_>>().join("");
                for n_ones in 0..=len {
                    let chained = wallcross_chain(&vs, len, n_ones, &word);
                    let direct = schubert_family(&vs, len, n_ones, &w0);
                    for (lam, cls) in &direct {
                        ms.extend(class_mismatches(
                            Some(&format!("chain{label}:{lam}")),
                            &chained[lam],
                            cls,
                        ));
                    }
                }
            }
            ms
        }));
    }
    out
}

fn run_match(opt: &SuiteOptions) -> Vec<Report> {
    let mut out = Vec::new();
    for n in lengths(opt, 1, 4) {
        out.push(Report::run("match", None, Some(n), || {
            let mut ms = check_match(n);
            ms.extend(check_proprel(n));
            ms.extend(check_pushforward(n));
            ms.extend(check_chern(n));
            ms.extend(check_geom_sixteen(n));
            ms.extend(check_d_certificate(n));
            ms.extend(explicit_standard_action(n));
            ms.extend(explicit_bethe_action(n));
            ms.extend(check_dictionary(n));
            ms
        }));
    }
    out
}

fn run_quantum(opt: &SuiteOptions) -> Vec<Report> {
    let mut out = Vec::new();
    for m in models(opt) {
        for n in lengths(opt, 2, 4) {
            out.push(Report::run("quantum", Some(m.name()), Some(n), || {
                check_quantum_commute(m, n)
            }));
        }
    }
    for len in lengths(opt, 1, 6) {
        out.push(Report::run("quantum", None, Some(len), || {
            let vs = VarSet::chain(len);
            let mut ms = Vec::new();
            for k in 1..=len {
                let rule = rimhook_d(&vs, len, k);
                ms.extend(op_mismatches(
                    Some(&format!("rimhook-extract:{k}")),
                    &rule,
                    &rimhook_extracted(&vs, len, k),
                ));
                ms.extend(op_mismatches(
                    Some(&format!("rimhook-strip:{k}")),
                    &rule,
                    &rimhook_strip(&vs, len, k),
                ));
            }
            ms
        }));
    }
    out
}

fn run_coha(opt: &SuiteOptions) -> Vec<Report> {
    lengths(opt, 2, 4)
        .into_iter()
        .map(|n| Report::run("coha", None, Some(n), || check_coha(n, 3)))
        .collect()
}

fn run_current(opt: &SuiteOptions) -> Vec<Report> {
    lengths(opt, 2, 4)
        .into_iter()
        .map(|n| Report::run("current", None, Some(n), || check_current(n)))
        .collect()
}

/// Spoiler for `rll`: the all-solid crossing weight of the first model is
/// set to `2` in both Lax factors (the honest weight is `1`); the exchange
/// identity must then fail. The spoiled weight and value are pinned, so the
/// seed changes nothing here.
fn spoiled_rll(_opt: &SuiteOptions) -> Vec<Report> {
    vec![Report::run("rll", Some(Model::Osc.name()), None, || {
        let vs = VarSet::chain(1);
        let x1 = MultiPoly::var(&vs, vs.v("x1"));
        let x2 = MultiPoly::var(&vs, vs.v("x2"));
        let t = MultiPoly::t(&vs, 1);
        let spoil = |mut m: [[RatFunc; 4]; 4]| {
            m[3][3] = RatFunc::from_poly(MultiPoly::int(&vs, 2));
            m
        };
        let l23 = SparseOperator::embed_two_site(
            &vs,
            3,
            2,
            3,
            &spoil(lax_local(Model::Osc, &vs, &x2, &t)),
        );
        let l13 = SparseOperator::embed_two_site(
            &vs,
            3,
            1,
            3,
            &spoil(lax_local(Model::Osc, &vs, &x1, &t)),
        );
        let r12 =
            SparseOperator::embed_two_site(&vs, 3, 1, 2, &r_local(Model::Osc, &vs, &x1, &x2));
        let lhs = l23.after(&l13).after(&r12);
        let rhs = r12.after(&l13).after(&l23);
        op_mismatches(Some("spoiled-rll"), &lhs, &rhs)
    })]
}

/// Spoiler for `sixteen`: the relations of one model are evaluated on the
/// other model's monodromy blocks, which do not satisfy them. The seed picks
/// the model whose relation list is tested when none is requested.
fn spoiled_sixteen(opt: &SuiteOptions) -> Vec<Report> {
    let mut rng = ChaCha8Rng::seed_from_u64(opt.seed);
    let model = opt.model.unwrap_or_else(|| {
        if rng.gen::<bool>() {
            Model::Osc
        } else {
            Model::Vic
        }
    });
    let other = match model {
        Model::Osc => Model::Vic,
        Model::Vic => Model::Osc,
    };
    let n = opt.n.unwrap_or(2);
    vec![Report::run("sixteen", Some(model.name()), Some(n), || {
        let vs = VarSet::chain(n);
        let blocks1 = monodromy_blocks(other, &vs, n, vs.v("x1"));
        let blocks2 = monodromy_blocks(other, &vs, n, vs.v("x2"));
        let mut rels = generated_relations(model, &vs);
        rels.extend(listed_relations(model, &vs));
        let mut out = Vec::new();
        for rel in rels {
            let lhs = eval_side(&vs, n, &rel.lhs, &blocks1, &blocks2);
            let rhs = eval_side(&vs, n, &rel.rhs, &blocks1, &blocks2);
            out.extend(op_mismatches(Some(&format!("spoiled:{}", rel.name)), &lhs, &rhs));
        }
        out
    })]
}

/// Spoiler for `sym`: the semilinear generator is replaced by the bare site
/// swap — the divided-difference correction is dropped — and the monodromy
/// must then fail to commute. The seed picks the swapped position.
fn spoiled_commute(opt: &SuiteOptions) -> Vec<Report> {
    let n = opt.n.unwrap_or(3).max(2);
    let model = opt.model.unwrap_or(Model::Osc);
    let mut rng = ChaCha8Rng::seed_from_u64(opt.seed);
    let i = rng.gen_range(1..n);
    vec![Report::run("sym", Some(model.name()), Some(n), || {
        let vs = VarSet::chain(n);
        let m = monodromy(model, &vs, n, vs.v("x"));
        let lin = site_swap(&vs, n + 1, i + 1);
        let sigma = Permutation::adjacent(n, i);
        let twisted = m.permute_ts_entries(&sigma.t_map());
        let lhs = lin.after(&twisted);
        let rhs = m.after(&lin);
        op_mismatches(Some(&format!("spoiled-commute:{i}")), &lhs, &rhs)
    })]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_names_and_lookup() {
        let names = suite_names();
        assert_eq!(names.len(), 11);
        let mut dedup = names.clone();
        dedup.sort();
        dedup.dedup();
        assert_eq!(dedup.len(), names.len(), "names must be unique");
        assert!(find("sixteen").is_some());
        assert!(find("nonesuch").is_none());
        assert!(find("rll").unwrap().perturbable());
        assert!(!find("lattice").unwrap().perturbable());
    }

    #[test]
    fn every_suite_passes_at_small_length() {
        let opt = SuiteOptions {
            n: Some(2),
            ..SuiteOptions::default()
        };
        for suite in registry() {
            let reports = suite.run(&opt);
            assert!(!reports.is_empty(), "suite {} ran nothing", suite.name());
            for r in &reports {
                assert!(
                    r.passed(),
                    "suite {} failed: {:?}",
                    suite.name(),
                    r.mismatches.first()
                );
            }
        }
    }

    #[test]
    fn spoilers_always_fail() {
        for seed in [0u64, 1, 42] {
            for name in ["rll", "sixteen", "sym"] {
                let suite = find(name).unwrap();
                let opt = SuiteOptions {
                    perturb: true,
                    seed,
                    ..SuiteOptions::default()
                };
                let reports = suite.run(&opt);
                assert!(!reports.is_empty());
                for r in &reports {
                    assert!(!r.passed(), "spoiled {name} (seed {seed}) passed");
                    assert!(!r.mismatches.is_empty());
                }
            }
        }
    }

    #[test]
    fn spoilers_fail_for_every_choice() {
        // both relation lists fail on swapped blocks
        for model in Model::both() {
            let opt = SuiteOptions {
                model: Some(model),
                perturb: true,
                ..SuiteOptions::default()
            };
            let reports = find("sixteen").unwrap().run(&opt);
            assert!(reports.iter().all(|r| !r.passed()), "{model}");
            // and the bare swap breaks commutation in both models
            for n in [2usize, 3] {
                for seed in 0..4u64 {
                    let opt = SuiteOptions {
                        n: Some(n),
                        model: Some(model),
                        perturb: true,
                        seed,
                    };
                    let reports = find("sym").unwrap().run(&opt);
                    assert!(
                        reports.iter().all(|r| !r.passed()),
                        "{model} n={n} seed={seed}"
                    );
                }
            }
        }
    }

    #[test]
    fn length_selection() {
        // a requested length above a part's limit drops that part
        let opt = SuiteOptions {
            n: Some(6),
            ..SuiteOptions::default()
        };
        let reports = find("quantum").unwrap().run(&opt);
        assert_eq!(reports.len(), 1, "only the top-coefficient part runs at 6");
        assert_eq!(reports[0].n, Some(6));
    }
}
