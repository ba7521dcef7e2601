//! The verification battery behind `verify-all` and the check subcommands.
//!
//! Eight suites re-derive every frozen number in the registry from scratch
//! and exercise the axiomatic checks on randomized exact elements:
//!
//! * `registry`   — internal arithmetic of the frozen tables;
//! * `realform`   — restricted root systems, multiplicities, `dim m₀`;
//! * `parabolic`  — the 44 maximal-parabolic rows, the full Bruhat census
//!   over all `2^r` subsets, grading symmetry;
//! * `relations`  — the fourteen relatedness classes;
//! * `jordan`     — Jordan axioms on nine algebras, seeded random trials;
//! * `fts`        — triple-system identities on three Freudenthal systems;
//! * `symmetry`   — the symmetry-dimension table, fixed rows plus the
//!   generic spin-factor row on twenty sampled signatures;
//! * `roles`      — the Jordan-algebraic role dimensions of every class
//!   member.
//!
//! Randomness is a `ChaCha8` stream keyed from the user seed, so two runs
//! with the same seed are byte-identical.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use exlie_core::exact_arith::{rat_i, Rat};
use exlie_core::fts::Fts;
use exlie_core::jordan_core::{JordanAlgebra, JordanKind};
use exlie_core::composition_algebra::CompLabel;
use exlie_core::parabolic::{
    bruhat_census, grading_profile, long_short_counts, maximal_parabolic,
};
use exlie_core::real_form::RealForm;
use exlie_core::registry::{
    golden_parabolics, spin_factor_row, FormLabel, RELATEDNESS_TABLE, SATAKE,
    SPIN_FACTOR_SAMPLES, SYMMETRY_TABLE,
};
use exlie_core::relations::{enumerate_max_related, verify_roles};
use exlie_core::symmetry_dims::{
    check_chain_arithmetic, check_j2_gamma_identifications, magic_dims,
};
use num_traits::Zero;

/// One named check with run and failure counters.
#[derive(Clone, Debug)]
pub struct CheckCount {
    /// check name
    pub name: String,
    /// how many times it ran
    pub runs: usize,
    /// how many runs failed
    pub failures: usize,
}

impl CheckCount {
    fn new(name: impl Into<String>) -> Self {
        CheckCount { name: name.into(), runs: 0, failures: 0 }
    }

    fn tally(&mut self, ok: bool) {
        self.runs += 1;
        if !ok {
            self.failures += 1;
        }
    }
}

/// Aggregate result of one suite.
#[derive(Clone, Debug)]
pub struct SuiteResult {
    /// suite name (one of [`SUITE_NAMES`])
    pub suite: String,
    /// number of individual assertions evaluated
    pub checks: usize,
    /// descriptions of the assertions that failed (empty when green)
    pub failures: Vec<String>,
}

/// Assertion collector used by the structural suites.
struct Suite {
    result: SuiteResult,
}

impl Suite {
    fn new(name: &str) -> Self {
        Suite { result: SuiteResult { suite: name.to_string(), checks: 0, failures: Vec::new() } }
    }

    fn check(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        self.result.checks += 1;
        if !ok {
            self.result.failures.push(msg());
        }
    }

    fn absorb(&mut self, counts: &[CheckCount], context: &str) {
        for c in counts {
            self.result.checks += c.runs;
            if c.failures > 0 {
                self.result.failures.push(format!(
                    "{context}: {} failed {} of {} runs",
                    c.name, c.failures, c.runs
                ));
            }
        }
    }
}

/// The suite names accepted by `--only`.
pub const SUITE_NAMES: [&str; 8] =
    ["registry", "realform", "parabolic", "relations", "jordan", "fts", "symmetry", "roles"];

/// Run the battery; `only` restricts to suites whose name contains it.
#[must_use]
pub fn run(only: Option<&str>, seed: u64) -> Vec<SuiteResult> {
    let wanted = |name: &str| only.is_none_or(|o| name.contains(&o.to_ascii_lowercase()));
    let mut out = Vec::new();
    // The form cache is shared by the three structural suites.
    let need_forms = ["realform", "parabolic", "relations"].iter().any(|n| wanted(n));
    let forms = if need_forms { RealForm::all() } else { Vec::new() };
    if wanted("registry") {
        out.push(registry_suite());
    }
    if wanted("realform") {
        out.push(realform_suite(&forms));
    }
    if wanted("parabolic") {
        out.push(parabolic_suite(&forms));
    }
    if wanted("relations") {
        out.push(relations_suite(&forms));
    }
    if wanted("jordan") {
        out.push(jordan_battery(seed));
    }
    if wanted("fts") {
        out.push(fts_battery(seed));
    }
    if wanted("symmetry") {
        let mut s = Suite::new("symmetry");
        s.absorb(&table1_suite(), "table");
        out.push(s.result);
    }
    if wanted("roles") {
        out.push(roles_suite());
    }
    out
}

// ---------------------------------------------------------------------------
// structural suites
// ---------------------------------------------------------------------------

fn registry_suite() -> SuiteResult {
    let mut s = Suite::new("registry");
    let golden = golden_parabolics().count();
    s.check(golden == 44, || format!("golden table has {golden} rows, want 44"));
    for e in &SATAKE {
        let dim = e.form.dim();
        s.check(dim == e.dim_m0 + e.split_rank + 2 * e.dim_npm, || {
            format!("{}: dim != dim m0 + rank + 2 dim n", e.form.name())
        });
        s.check(e.dim_k < dim, || format!("{}: K not proper", e.form.name()));
        s.check(!e.pins.is_empty(), || format!("{}: no maximal parabolics", e.form.name()));
    }
    s.check(RELATEDNESS_TABLE.len() == 14, || "relatedness table size".to_string());
    for (i, row) in RELATEDNESS_TABLE.iter().enumerate() {
        s.check(row.row == i + 1, || format!("class {} numbered {}", i + 1, row.row));
        s.check(row.members.len() >= 2, || format!("class {} has < 2 members", row.row));
    }
    let d1 = exlie_core::registry::canonical_dump();
    let d2 = exlie_core::registry::canonical_dump();
    s.check(!d1.is_empty() && d1 == d2, || "canonical dump not deterministic".to_string());
    s.result
}

fn realform_suite(forms: &[RealForm]) -> SuiteResult {
    let mut s = Suite::new("realform");
    for f in forms {
        let e = f.entry;
        let rs = f.restricted_root_system();
        s.check(rs.reduced_type == e.restricted_name, || {
            format!("{}: restricted type {} != {}", f.label.name(), rs.reduced_type, e.restricted_name)
        });
        s.check(rs.positives.len() == e.restricted_positive_count, || {
            format!("{}: {} positive restricted roots", f.label.name(), rs.positives.len())
        });
        s.check(rs.sum_positive_multiplicities() == e.dim_npm, || {
            format!("{}: multiplicity sum != dim n", f.label.name())
        });
        s.check(f.dim_m0() == e.dim_m0, || {
            format!("{}: dim m0 = {} != {}", f.label.name(), f.dim_m0(), e.dim_m0)
        });
        s.check(rs.split_rank == e.split_rank, || format!("{}: split rank", f.label.name()));
    }
    s.result
}

fn form_by_label(forms: &[RealForm], label: FormLabel) -> &RealForm {
    forms.iter().find(|f| f.label == label).expect("every form is instantiated")
}

fn parabolic_suite(forms: &[RealForm]) -> SuiteResult {
    let mut s = Suite::new("parabolic");
    for g in golden_parabolics() {
        let form = form_by_label(forms, g.form);
        let p = maximal_parabolic(form, g.index);
        let prof = grading_profile(form, g.index);
        let tag = format!("{} P{}", g.form.name(), g.index);
        s.check(p.levi.display() == g.levi, || {
            format!("{tag}: levi {} != {}", p.levi.display(), g.levi)
        });
        s.check(p.dim_n_theta == g.dim_n, || format!("{tag}: dim n = {}", p.dim_n_theta));
        s.check(prof.depth == g.depth, || format!("{tag}: depth {}", prof.depth));
        for &(k, d) in g.hist {
            s.check(prof.dim_at(k) == d && prof.dim_at(-k) == d, || {
                format!("{tag}: grade ±{k} dimension")
            });
        }
        s.check(prof.dim_at(0) == p.dim_m_theta + 1, || format!("{tag}: zero grade"));
        let total: usize = prof.grades.iter().map(|&(_, d)| d).sum();
        s.check(total == g.form.dim(), || format!("{tag}: grades sum to {total}"));
        s.check(long_short_counts(form, g.index) == g.long_short, || {
            format!("{tag}: long/short root split")
        });
    }
    let census = bruhat_census(forms);
    s.check(census == 534, || format!("Bruhat census {census}, want 534"));
    for f in forms {
        for j in 1..=f.entry.pins.len() {
            let prof = grading_profile(f, j);
            let symmetric =
                prof.grades.iter().all(|&(k, d)| prof.dim_at(-k) == d);
            s.check(symmetric, || format!("{} P{j}: asymmetric grading", f.label.name()));
        }
    }
    s.result
}

fn relations_suite(forms: &[RealForm]) -> SuiteResult {
    let mut s = Suite::new("relations");
    let classes = enumerate_max_related(forms);
    s.check(classes.len() == 14, || format!("{} relatedness classes", classes.len()));
    s.check(classes.iter().all(|c| c.row.is_some() && !c.beyond_paper()), || {
        "classes beyond the frozen table".to_string()
    });
    let mut triple_rows: Vec<usize> =
        classes.iter().filter(|c| c.members.len() == 3).filter_map(|c| c.row).collect();
    triple_rows.sort_unstable();
    s.check(triple_rows == [1, 6, 7, 9], || format!("three-member classes {triple_rows:?}"));
    for c in &classes {
        let row = &RELATEDNESS_TABLE[c.row.expect("matched") - 1];
        s.check(c.dim_n == row.dim_n, || format!("class {}: dim n", row.row));
        s.check(c.members.len() == row.members.len(), || {
            format!("class {}: member count", row.row)
        });
        for rm in row.members {
            let found = c.members.iter().any(|m| {
                m.form == rm.form && m.levi == rm.levi && m.dim_m == rm.dim_m
            });
            s.check(found, || format!("class {}: member {}", row.row, rm.form.name()));
        }
    }
    s.result
}

fn roles_suite() -> SuiteResult {
    let mut s = Suite::new("roles");
    let checks = verify_roles();
    for c in &checks {
        s.check(c.ok, || {
            format!("class {} {} {}: role {} misses dim {}", c.row, c.form.name(), c.target, c.role, c.expected_dim)
        });
    }
    let registry_only = checks.iter().filter(|c| c.registry_only).count();
    s.check(registry_only <= 3, || format!("{registry_only} registry-only roles"));
    s.result
}

// ---------------------------------------------------------------------------
// randomized suites
// ---------------------------------------------------------------------------

fn rand_vec(rng: &mut ChaCha8Rng, dim: usize) -> Vec<Rat> {
    (0..dim).map(|_| rat_i(rng.gen_range(-3..=3))).collect()
}

/// The nine algebras exercised by the Jordan battery.
#[must_use]
pub fn jordan_battery_kinds() -> Vec<JordanKind> {
    let mut kinds = vec![
        JordanKind::RealField,
        JordanKind::SpinFactor { m: 1, n: 2 },
        JordanKind::SpinFactor { m: 4, n: 4 },
    ];
    for l in [
        CompLabel::R,
        CompLabel::C,
        CompLabel::Cs,
        CompLabel::H,
        CompLabel::Hs,
        CompLabel::O,
        CompLabel::Os,
    ] {
        kinds.push(JordanKind::Hermitian3(l));
    }
    kinds
}

/// Randomized Jordan-axiom checks on one algebra.
#[must_use]
pub fn jordan_suite(j: &JordanAlgebra, trials: usize, seed: u64) -> Vec<CheckCount> {
    let mut unit = CheckCount::new("unit");
    let mut comm = CheckCount::new("commutativity");
    let mut jid = CheckCount::new("jordan_identity");
    let mut adj = CheckCount::new("adjoint_identity");
    let mut tra = CheckCount::new("trace_associativity");
    let mut qja = CheckCount::new("quadratic_axioms");
    let mut ncm = CheckCount::new("norm_product_match");
    unit.tally(j.check_unit());
    comm.tally(j.check_commutative());
    let cubic = j.cubic.is_some();
    if cubic {
        ncm.tally(j.check_norm_circ_match());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..trials {
        let x = rand_vec(&mut rng, j.dim);
        let y = rand_vec(&mut rng, j.dim);
        let w = rand_vec(&mut rng, j.dim);
        jid.tally(j.check_jordan_identity(&x, &y));
        if cubic {
            adj.tally(j.check_adjoint_identity(&x));
            tra.tally(j.check_trace_associativity(&x, &y, &w));
            qja.tally(j.check_qja(&x, &y, &w));
        }
    }
    let mut out = vec![unit, comm, jid];
    if cubic {
        out.extend([adj, tra, qja, ncm]);
    }
    out
}

fn jordan_battery(seed: u64) -> SuiteResult {
    let mut s = Suite::new("jordan");
    for kind in jordan_battery_kinds() {
        let j = JordanAlgebra::new(kind);
        let report = jordan_suite(&j, 100, seed);
        s.absorb(&report, &j.kind.name());
    }
    s.result
}

/// Randomized triple-system checks on one Freudenthal system.
#[must_use]
pub fn fts_suite(f: &Fts, trials: usize, seed: u64) -> Vec<CheckCount> {
    let mut nondeg = CheckCount::new("symplectic_nondegenerate");
    let mut anti = CheckCount::new("antisymmetry");
    let mut hom = CheckCount::new("quartic_homogeneity");
    let mut diag = CheckCount::new("linearization_diagonal");
    let mut triple = CheckCount::new("triple_product");
    let mut dist = CheckCount::new("extended_norm_distance");
    nondeg.tally(f.symplectic_rank() == f.dim);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..trials {
        let x = rand_vec(&mut rng, f.dim);
        let y = rand_vec(&mut rng, f.dim);
        let w = rand_vec(&mut rng, f.dim);
        anti.tally(f.skew(&x, &y) == -f.skew(&y, &x));
        let lam = rat_i(rng.gen_range(2..=4));
        let lx: Vec<Rat> = x.iter().map(|v| v * &lam).collect();
        hom.tally(f.quartic(&lx) == &lam * &lam * &lam * &lam * f.quartic(&x));
        diag.tally(f.quartic4([&x, &x, &x, &x]) == f.quartic(&x));
        triple.tally(f.check_triple(&x, &y, &w));
        let phi = rat_i(rng.gen_range(-3..=3));
        let zero = vec![Rat::zero(); f.dim];
        let z0 = Rat::zero();
        dist.tally(f.quartic_distance((&x, &phi), (&zero, &z0)) == f.extended_norm(&x, &phi));
    }
    vec![nondeg, anti, hom, diag, triple, dist]
}

fn fts_battery(seed: u64) -> SuiteResult {
    let mut s = Suite::new("fts");
    for l in [CompLabel::R, CompLabel::C, CompLabel::Os] {
        let f = Fts::new(JordanAlgebra::new(JordanKind::Hermitian3(l)));
        let report = fts_suite(&f, 100, seed);
        s.absorb(&report, &format!("F(J3^{})", l.name()));
    }
    s.result
}

// ---------------------------------------------------------------------------
// symmetry dimensions
// ---------------------------------------------------------------------------

fn kind_for_table_row(name: &str) -> JordanKind {
    if name == "R" {
        return JordanKind::RealField;
    }
    let label = name.strip_prefix("J3^").and_then(CompLabel::parse);
    JordanKind::Hermitian3(label.expect("table rows are R or J3^A"))
}

/// Recompute every row of the symmetry-dimension table.
#[must_use]
pub fn table1_suite() -> Vec<CheckCount> {
    let mut out = Vec::new();
    for row in &SYMMETRY_TABLE {
        let j = JordanAlgebra::new(kind_for_table_row(row.algebra));
        let m = magic_dims(&j);
        let mut dims = CheckCount::new(format!("{} dims", row.algebra));
        dims.tally((m.der, m.str0, m.conf, m.qconf) == row.dims);
        let mut chain = CheckCount::new(format!("{} chain", row.algebra));
        chain.tally(check_chain_arithmetic(&j, &m));
        out.extend([dims, chain]);
    }
    let mut spin = CheckCount::new("spin factor samples");
    for &(m, n) in &SPIN_FACTOR_SAMPLES {
        let j = JordanAlgebra::new(JordanKind::SpinFactor { m, n });
        let got = magic_dims(&j);
        let want = spin_factor_row(m, n).dims;
        spin.tally((got.der, got.str0, got.conf, got.qconf) == want);
        let mut row = CheckCount::new(format!("R+Gamma_{{{m},{n}}} chain"));
        row.tally(check_chain_arithmetic(&j, &got));
        out.push(row);
    }
    out.push(spin);
    let mut j2 = CheckCount::new("J2 spin identifications");
    for l in CompLabel::ALL {
        if l != CompLabel::R {
            j2.tally(check_j2_gamma_identifications(l));
        }
    }
    out.push(j2);
    out
}

/// Table labels of the four symmetry algebras of `kind`, when on record.
#[must_use]
pub fn chain_labels(kind: &JordanKind) -> Option<(String, String, String, String)> {
    let name = kind.name();
    if let Some(row) = SYMMETRY_TABLE.iter().find(|r| r.algebra == name) {
        return Some((
            row.aut.to_string(),
            row.str0.to_string(),
            row.conf.to_string(),
            row.qconf.to_string(),
        ));
    }
    if let JordanKind::SpinFactor { m, n } = *kind {
        return Some((
            format!("so({},{n})", m.max(1) - 1),
            format!("so({m},{n})+so(1,1)"),
            format!("sl(2,R)+so({},{})", m + 1, n + 1),
            format!("so({},{})", m + 3, n + 3),
        ));
    }
    None
}
