//! Parabolic relatedness between real forms and the Jordan-algebraic
//! interpretation of the algebras involved.
//!
//! Two real forms `g_0`, `g_0'` with the same complexification are
//! *parabolically related* through parabolics `P ⊂ g_0`, `P' ⊂ g_0'` when
//! the complexifications of the Levi parts agree, `M^C ≅ M'^C`. For maximal
//! parabolics this is decided here by complexifying each Levi factor to its
//! Dynkin type (normalizing the low-rank coincidences `B1 = C1 = A1`,
//! `C2 = B2`, `D2 = A1 + A1`, `D3 = A3`, and sending every rank-1 abelian
//! summand — `u(1)`, `so(2)`, `so(1,1)` — to one abelian unit) and comparing
//! multisets. Equal complexified Levis force equal `dim N`.
//!
//! Sweeping all maximal parabolics of all twelve forms and keeping the
//! classes containing at least two *distinct* forms reproduces exactly
//! fourteen relatedness classes; any class the sweep finds beyond the frozen
//! fourteen is flagged `beyond_paper` (and the test suite requires none).
//!
//! Each class member also carries Jordan-algebraic roles: the ambient form
//! and its Levi are identified with derivation, reduced structure,
//! conformal or quasi-conformal algebras of cubic Jordan algebras `J_3^A`,
//! spin factors `Γ_{m,n}` (equivalently rank-2 algebras `J_2^A`), or
//! Lorentzian algebras `J_{1,2}^A`. Every such role is *dimension-verified*
//! against the exact symmetry computations of [`crate::symmetry_dims`];
//! only roles built on the triple system `M_{2,1}(O)` (whose symmetry
//! algebras arise from orbit stabilizers outside this crate's scope) are
//! carried as registry data, and there are exactly two of those.

use alloc::string::String;
use alloc::vec::Vec;

use crate::composition_algebra::CompLabel;
use crate::jordan_core::{JordanAlgebra, JordanKind};
use crate::parabolic::{maximal_parabolic, LeviDecomposition, ParabolicSubalgebra};
use crate::real_form::RealForm;
use crate::registry::{
    FormLabel, LieLabel, Role, RoleAlg, SymKind, RELATEDNESS_TABLE,
};
use crate::root_system::DynkinType;
use crate::symmetry_dims::{derivation_dim, magic_dims, structure_dim, MagicDims};

/// A complexified Levi: simple Dynkin factors (sorted) plus abelian rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexLevi {
    /// Simple factors after low-rank normalization, sorted.
    pub factors: Vec<DynkinType>,
    /// Rank of the abelian part.
    pub abelian: usize,
}

/// Complexify a Levi decomposition factor by factor.
#[must_use]
pub fn complexified_levi(levi: &LeviDecomposition) -> ComplexLevi {
    let mut factors: Vec<DynkinType> = Vec::new();
    let mut abelian = levi.abelian;
    for f in &levi.factors {
        let (fs, ab) = f.label.complex_factors();
        factors.extend(fs);
        abelian += ab;
    }
    factors.sort_unstable_by_key(|t| (t.name(), t.rank()));
    ComplexLevi { factors, abelian }
}

/// Whether two maximal parabolics make their ambient forms parabolically
/// related: equal complexified ambient type and equal complexified Levi.
#[must_use]
pub fn parabolically_related(p1: &ParabolicSubalgebra, p2: &ParabolicSubalgebra) -> bool {
    p1.form.complex_type() == p2.form.complex_type()
        && complexified_levi(&p1.levi) == complexified_levi(&p2.levi)
}

/// One member of a computed relatedness class.
#[derive(Clone, Debug)]
pub struct ComputedMember {
    /// which form
    pub form: FormLabel,
    /// paper indices of its maximal parabolics in the class
    pub indices: Vec<usize>,
    /// Levi display string
    pub levi: String,
    /// `dim M` including abelian summands
    pub dim_m: usize,
    /// registry-only member (not the Levi of a maximal parabolic)
    pub registry_only: bool,
    /// caveat carried from the registry
    pub note: Option<&'static str>,
}

/// A computed relatedness class, matched against the frozen table.
#[derive(Clone, Debug)]
pub struct ComputedClass {
    /// 1-based row in the frozen table, `None` for a beyond-paper class
    pub row: Option<usize>,
    /// shared `dim N±`
    pub dim_n: usize,
    /// shared complexified Levi
    pub complex_levi: ComplexLevi,
    /// members, one per form
    pub members: Vec<ComputedMember>,
}

impl ComputedClass {
    /// Whether the sweep found this class but the frozen table does not
    /// list it.
    #[must_use]
    pub fn beyond_paper(&self) -> bool {
        self.row.is_none()
    }
}

/// Exhaustive sweep: group the maximal parabolics of all twelve forms by
/// (ambient complex type, complexified Levi), keep the classes with at
/// least two distinct forms, and match them against the frozen table
/// (merging in its registry-only members).
///
/// # Panics
/// Panics on internal inconsistency while matching a frozen row (the
/// acceptance suite separately asserts there are no beyond-paper classes).
#[must_use]
pub fn enumerate_max_related(forms: &[RealForm]) -> Vec<ComputedClass> {
    struct Bucket {
        key: (&'static str, ComplexLevi),
        dim_n: usize,
        members: Vec<ComputedMember>,
    }
    let mut buckets: Vec<Bucket> = Vec::new();

    for form in forms {
        for j in 1..=form.split_rank() {
            let p = maximal_parabolic(form, j);
            let cl = complexified_levi(&p.levi);
            let key = (form.label.complex_type().name(), cl);
            let bucket = if let Some(b) = buckets.iter_mut().find(|b| b.key == key) {
                b
            } else {
                buckets.push(Bucket { key, dim_n: p.dim_n_theta, members: Vec::new() });
                buckets.last_mut().expect("just pushed")
            };
            assert_eq!(bucket.dim_n, p.dim_n_theta, "equal Levi forces equal dim N");
            if let Some(m) = bucket.members.iter_mut().find(|m| m.form == form.label) {
                m.indices.push(j);
            } else {
                bucket.members.push(ComputedMember {
                    form: form.label,
                    indices: alloc::vec![j],
                    levi: p.levi.display(),
                    dim_m: p.dim_m_theta,
                    registry_only: false,
                    note: None,
                });
            }
        }
    }

    let mut out: Vec<ComputedClass> = Vec::new();
    for b in buckets {
        if b.members.len() < 2 {
            continue;
        }
        // match against the frozen table: same member (form, indices) sets
        // over the non-registry-only entries
        let row = RELATEDNESS_TABLE.iter().find(|r| {
            let frozen: Vec<(FormLabel, &[usize])> = r
                .members
                .iter()
                .filter(|m| !m.indices.is_empty())
                .map(|m| (m.form, m.indices))
                .collect();
            frozen.len() == b.members.len()
                && b.members.iter().all(|cm| {
                    frozen.iter().any(|&(f, ix)| f == cm.form && ix == cm.indices.as_slice())
                })
        });
        let mut members = b.members;
        if let Some(r) = row {
            assert_eq!(r.dim_n, b.dim_n, "row {}", r.row);
            for m in r.members.iter().filter(|m| m.indices.is_empty()) {
                members.push(ComputedMember {
                    form: m.form,
                    indices: Vec::new(),
                    levi: String::from(m.levi),
                    dim_m: m.dim_m,
                    registry_only: true,
                    note: m.note,
                });
            }
        }
        out.push(ComputedClass {
            row: row.map(|r| r.row),
            dim_n: b.dim_n,
            complex_levi: b.key.1,
            members,
        });
    }
    out.sort_by_key(|c| (c.row.unwrap_or(usize::MAX), c.dim_n));
    out
}

// ---------------------------------------------------------------------------
// Jordan roles
// ---------------------------------------------------------------------------

/// Memo for the expensive `J_3^A` magic-square computations.
#[derive(Default)]
pub struct RoleDimCache {
    j3: Vec<(CompLabel, MagicDims)>,
}

impl RoleDimCache {
    /// Fresh empty cache.
    #[must_use]
    pub fn new() -> Self {
        RoleDimCache { j3: Vec::new() }
    }

    fn j3_dims(&mut self, a: CompLabel) -> MagicDims {
        if let Some(&(_, d)) = self.j3.iter().find(|(l, _)| *l == a) {
            return d;
        }
        let j = JordanAlgebra::new(JordanKind::Hermitian3(a));
        let d = magic_dims(&j);
        self.j3.push((a, d));
        d
    }
}

/// The `Γ_{m,n}` realizing `J_2^A` (division algebras give `Γ_{1,1+dim A}`,
/// split ones `Γ_{d/2+1,d/2+1}`).
#[must_use]
pub fn j2_gamma(a: CompLabel) -> (usize, usize) {
    let d = a.dim();
    if a.is_split() {
        (d / 2 + 1, d / 2 + 1)
    } else {
        (1, d + 1)
    }
}

/// Exact dimension of a symmetry role, computed from first principles, or
/// `None` when the algebra is outside the computable machinery
/// (`M_{2,1}(O)`).
#[must_use]
pub fn role_sym_dim(kind: SymKind, alg: RoleAlg, cache: &mut RoleDimCache) -> Option<usize> {
    let gamma_dims = |m: usize, n: usize, kind: SymKind| -> usize {
        let g = JordanAlgebra::new(JordanKind::Gamma { m, n });
        let st = structure_dim(&g);
        match kind {
            SymKind::Der => derivation_dim(&g),
            SymKind::Str0 => st - 1,
            SymKind::Conf => 2 * (m + n) + st,
            SymKind::Qconf => panic!("qconf of a pure Gamma is not used"),
        }
    };
    match alg {
        RoleAlg::J3(a) => {
            let d = cache.j3_dims(a);
            Some(match kind {
                SymKind::Der => d.der,
                SymKind::Str0 => d.str0,
                SymKind::Conf => d.conf,
                SymKind::Qconf => d.qconf,
            })
        }
        RoleAlg::Lorentzian(a) => {
            assert!(matches!(kind, SymKind::Der), "only der of J_{{1,2}}^A is used");
            let j = JordanAlgebra::new(JordanKind::Lorentzian(a));
            Some(derivation_dim(&j))
        }
        RoleAlg::Gamma(m, n) => Some(gamma_dims(m, n, kind)),
        RoleAlg::J2(a) => {
            let (m, n) = j2_gamma(a);
            Some(gamma_dims(m, n, kind))
        }
        RoleAlg::SpinFactor(m, n) => {
            let j = JordanAlgebra::new(JordanKind::SpinFactor { m, n });
            let d = magic_dims(&j);
            Some(match kind {
                SymKind::Der => d.der,
                SymKind::Str0 => d.str0,
                SymKind::Conf => d.conf,
                SymKind::Qconf => d.qconf,
            })
        }
        RoleAlg::M21O => None,
    }
}

/// Result of checking one Jordan role against its expected dimension.
#[derive(Clone, Debug)]
pub struct RoleCheck {
    /// table row
    pub row: usize,
    /// which member
    pub form: FormLabel,
    /// `"G"` for the ambient form's role, `"M"` for the Levi's
    pub target: &'static str,
    /// role display, e.g. `"str0(J2^O_s)+sl(2,R)"`
    pub role: String,
    /// dimension the role must account for
    pub expected_dim: usize,
    /// computed dimension of the symmetry part, if computable
    pub computed_sym_dim: Option<usize>,
    /// whether the check passed (always true for emitted lists; failures
    /// panic in tests)
    pub ok: bool,
    /// registry-only role (counted separately, must stay ≤ 3)
    pub registry_only: bool,
}

fn check_role(
    row: usize,
    form: FormLabel,
    target: &'static str,
    role: &Role,
    expected_dim: usize,
    cache: &mut RoleDimCache,
) -> RoleCheck {
    let extra: usize = role.extra.iter().map(|l| l.dim()).sum();
    let (computed, registry_only) = match role.sym {
        Some((kind, alg)) => match role_sym_dim(kind, alg, cache) {
            Some(d) => (Some(d), false),
            None => (None, true),
        },
        None => (None, false),
    };
    let ok = match computed {
        Some(d) => d + extra == expected_dim,
        // pure label roles: the extras must account for everything;
        // registry-only roles are accepted as data
        None => registry_only || extra == expected_dim,
    };
    RoleCheck {
        row,
        form,
        target,
        role: role.display(),
        expected_dim,
        computed_sym_dim: computed,
        ok,
        registry_only,
    }
}

/// Dimension-verify every Jordan role in the frozen relatedness table:
/// the ambient role must account for `dim g`, the Levi role for `dim M`.
#[must_use]
pub fn verify_roles() -> Vec<RoleCheck> {
    let mut cache = RoleDimCache::new();
    let mut out = Vec::new();
    for r in &RELATEDNESS_TABLE {
        for m in r.members {
            out.push(check_role(r.row, m.form, "G", &m.g_role, m.form.dim(), &mut cache));
            out.push(check_role(r.row, m.form, "M", &m.m_role, m.dim_m, &mut cache));
        }
    }
    out
}

/// All Jordan roles a Lie-algebra label carries in the frozen table:
/// `(row, role display, context)` where context names the member the label
/// appears in. Form labels match their ambient role, Levi strings match
/// their Levi role.
#[must_use]
pub fn jordan_interpretation(label: &str) -> Vec<(usize, String, String)> {
    let norm: String = label.chars().filter(|c| !c.is_whitespace()).collect();
    let as_form = FormLabel::parse(&norm);
    let as_lie = LieLabel::parse(&norm);
    let mut out = Vec::new();
    for r in &RELATEDNESS_TABLE {
        for m in r.members {
            if Some(m.form) == as_form {
                out.push((
                    r.row,
                    m.g_role.display(),
                    alloc::format!("{} as ambient form", m.form.name()),
                ));
            }
            let levi_matches = m.levi.replace(' ', "") == norm
                || (m.levi.find('+').is_none()
                    && as_lie.is_some()
                    && LieLabel::parse(m.levi) == as_lie);
            if levi_matches {
                out.push((
                    r.row,
                    m.m_role.display(),
                    alloc::format!("Levi of {} in row {}", m.form.name(), r.row),
                ));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn classes() -> Vec<ComputedClass> {
        enumerate_max_related(&RealForm::all())
    }

    #[test]
    fn fourteen_classes_no_beyond_paper() {
        let cs = classes();
        assert_eq!(cs.iter().filter(|c| !c.beyond_paper()).count(), 14);
        assert!(cs.iter().all(|c| !c.beyond_paper()), "no beyond-paper classes");
        // rows 1, 6, 7, 9 have three members
        for c in &cs {
            let want = match c.row.expect("matched") {
                1 | 6 | 7 | 9 => 3,
                _ => 2,
            };
            assert_eq!(c.members.len(), want, "row {:?}", c.row);
        }
    }

    #[test]
    fn class_members_match_frozen_levis_and_dims() {
        let cs = classes();
        for r in &RELATEDNESS_TABLE {
            let c = cs.iter().find(|c| c.row == Some(r.row)).expect("row present");
            assert_eq!(c.dim_n, r.dim_n, "row {}", r.row);
            for fm in r.members {
                let cm = c.members.iter().find(|m| m.form == fm.form).expect("member");
                assert_eq!(cm.levi, fm.levi, "row {} {}", r.row, fm.form);
                assert_eq!(cm.dim_m, fm.dim_m, "row {} {}", r.row, fm.form);
                assert_eq!(cm.registry_only, fm.indices.is_empty());
            }
        }
    }

    #[test]
    fn relatedness_is_equivalence_on_equal_ambient() {
        let forms = RealForm::all();
        let e7: Vec<&RealForm> = forms
            .iter()
            .filter(|f| f.label.complex_type() == crate::root_system::SimpleType::E7)
            .collect();
        let mut ps = Vec::new();
        for f in &e7 {
            for j in 1..=f.split_rank() {
                ps.push(maximal_parabolic(f, j));
            }
        }
        for a in &ps {
            assert!(parabolically_related(a, a));
            for b in &ps {
                assert_eq!(parabolically_related(a, b), parabolically_related(b, a));
                for c in &ps {
                    if parabolically_related(a, b) && parabolically_related(b, c) {
                        assert!(parabolically_related(a, c));
                    }
                }
            }
        }
    }

    #[test]
    fn interpretation_examples() {
        let e626 = jordan_interpretation("E6(-26)");
        assert!(e626.iter().any(|(_, role, _)| role == "str0(J3^O)"));
        let so55 = jordan_interpretation("so(5,5)");
        assert!(so55.iter().any(|(_, role, _)| role == "str0(J2^O_s)"));
        let f420 = jordan_interpretation("F4(-20)");
        assert!(f420.iter().any(|(_, role, _)| role == "der(J_{1,2}^O)"));
    }

    #[test]
    fn cheap_roles_verify() {
        // the full sweep (with J3^O / J3^Os) runs in the acceptance suite;
        // here check the Γ-based and label-only roles plus row 14.
        let mut cache = RoleDimCache::new();
        assert_eq!(role_sym_dim(SymKind::Str0, RoleAlg::Gamma(7, 1), &mut cache), Some(28));
        assert_eq!(role_sym_dim(SymKind::Str0, RoleAlg::Gamma(5, 3), &mut cache), Some(28));
        assert_eq!(role_sym_dim(SymKind::Str0, RoleAlg::J2(CompLabel::O), &mut cache), Some(45));
        assert_eq!(role_sym_dim(SymKind::Conf, RoleAlg::J2(CompLabel::Os), &mut cache), Some(66));
        assert_eq!(role_sym_dim(SymKind::Str0, RoleAlg::Gamma(7, 0), &mut cache), Some(21));
        assert_eq!(role_sym_dim(SymKind::Str0, RoleAlg::Gamma(4, 3), &mut cache), Some(21));
        assert_eq!(role_sym_dim(SymKind::Der, RoleAlg::Lorentzian(CompLabel::Os), &mut cache), Some(52));
        assert_eq!(role_sym_dim(SymKind::Qconf, RoleAlg::M21O, &mut cache), None);
    }
}
