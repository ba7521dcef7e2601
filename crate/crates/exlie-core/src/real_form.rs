//! Satake diagrams and restricted root systems of the twelve non-compact
//! exceptional real forms.
//!
//! A real form `g_0` of a complex simple Lie algebra `g` is encoded by its
//! *Satake diagram*: the Dynkin diagram of `g` with some nodes painted black
//! (simple roots vanishing on the maximal split torus `a_0`) and some white
//! nodes joined by arrows (an involutive diagram automorphism `τ` induced by
//! the Cartan involution). Restricting a root `α` of `g` to `a_0` is realized
//! concretely on the ambient root coordinates as
//!
//! ```text
//! π(α) = P_black⊥( (α + τα) / 2 )
//! ```
//!
//! where `τ` permutes simple-root coefficients along the arrows and
//! `P_black⊥` removes the orthogonal projection onto the span of the black
//! simple roots. The nonzero images are the *restricted roots*; the number of
//! complex roots in each fiber is the restricted root's *multiplicity*. For a
//! split form the diagram is undecorated and `π` is the identity.
//!
//! The restricted root system can be non-reduced (some `λ` and `2λ` both
//! occur): these `BC_r` systems are first-class here, since the grading
//! machinery of the parabolic layer needs the true coefficient lattice.
//!
//! Dimension bookkeeping ties everything together. With `r` the split rank
//! and `m_0` the centralizer of `a_0` in the maximal compact subalgebra,
//!
//! ```text
//! dim g = dim m_0 + r + 2 · Σ_{λ>0} mult(λ),
//! ```
//!
//! and independently `dim m_0 = #(black roots) + (rank − r)`. Both counts are
//! computed and compared against the registry (`dim N±`, the `m_0` label's
//! dimension), so every frozen number is re-derived from the diagram alone.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::exact_arith::{dot, rat, solve, vadd, vscale, vsub, Matrix, Rat};
use crate::registry::{satake, FormLabel, SatakeEntry};
use crate::root_system::{classify_components, RootSystem};

/// A non-compact exceptional real form: registry data plus the complex root
/// system and the white-node orbit structure derived from its Satake diagram.
pub struct RealForm {
    /// Which real form.
    pub label: FormLabel,
    /// Frozen registry data (black nodes, arrows, `dim K`, `dim N±`, …).
    pub entry: &'static SatakeEntry,
    /// The complex root system, nodes in paper order (chain first, branch
    /// last).
    pub roots: RootSystem,
    /// White-node orbits of the arrow involution, each sorted, ordered by
    /// smallest node; 1-based paper indices. Their count is the split rank.
    pub orbits: Vec<Vec<usize>>,
    /// `black_root[i]` ⇔ `roots.roots[i]` lies in the span of black simple
    /// roots (i.e. restricts to zero).
    black_root: Vec<bool>,
    /// Black simple roots as ambient vectors.
    black_vecs: Vec<Vec<Rat>>,
    /// Gram matrix of the black simple roots (empty if none).
    black_gram: Matrix,
    /// 0-based node permutation realizing the arrow involution `τ`.
    tau_perm: Vec<usize>,
}

/// The restricted root system of a real form.
pub struct RestrictedRootSystem {
    /// Split rank `r` (number of restricted simple roots).
    pub split_rank: usize,
    /// `π` of one representative simple root per white orbit, in orbit
    /// order. These are the restricted simple roots.
    pub restricted_simple: Vec<Vec<Rat>>,
    /// Positive restricted roots with multiplicities (fiber counts of `π`
    /// over the positive non-black complex roots).
    pub positives: Vec<(Vec<Rat>, usize)>,
    /// Dynkin label, `BC_r` spelled as `"BC1"`, `"BC2"`, … when the system
    /// is non-reduced.
    pub reduced_type: String,
    /// Whether some restricted root `λ` occurs together with `2λ`.
    pub non_reduced: bool,
}

impl RestrictedRootSystem {
    /// Sum of multiplicities over the positive restricted roots; equals
    /// `dim N±` of the form.
    #[must_use]
    pub fn sum_positive_multiplicities(&self) -> usize {
        self.positives.iter().map(|&(_, m)| m).sum()
    }
}

impl RealForm {
    /// Build the real form `label` from its registered Satake diagram.
    ///
    /// # Panics
    /// Panics on internal inconsistency between the registry and the root
    /// system (the constructor re-derives and asserts the orbit count).
    #[must_use]
    pub fn new(label: FormLabel) -> Self {
        let entry = satake(label);
        let roots = RootSystem::new(label.complex_type());
        let rank = roots.rank;

        let mut tau_perm: Vec<usize> = (0..rank).collect();
        for &(a, b) in entry.arrows {
            tau_perm[a - 1] = b - 1;
            tau_perm[b - 1] = a - 1;
        }

        let is_black = |node: usize| entry.black.contains(&node);
        let mut orbits: Vec<Vec<usize>> = Vec::new();
        let mut seen = vec![false; rank];
        for node in 1..=rank {
            if is_black(node) || seen[node - 1] {
                continue;
            }
            let partner = tau_perm[node - 1] + 1;
            let mut orbit = vec![node];
            seen[node - 1] = true;
            if partner != node {
                orbit.push(partner);
                seen[partner - 1] = true;
            }
            orbit.sort_unstable();
            orbits.push(orbit);
        }
        assert_eq!(orbits.len(), entry.split_rank, "orbit count is the split rank");

        let black_vecs: Vec<Vec<Rat>> = entry.black.iter().map(|&n| roots.simples[n - 1].clone()).collect();
        let k = black_vecs.len();
        let mut black_gram = Matrix::zeros(k, k);
        for i in 0..k {
            for j in 0..k {
                black_gram.set(i, j, dot(&black_vecs[i], &black_vecs[j]));
            }
        }

        let black_root: Vec<bool> = roots
            .coeffs
            .iter()
            .map(|c| (0..rank).all(|i| c[i] == 0 || is_black(i + 1)))
            .collect();

        RealForm { label, entry, roots, orbits, black_root, black_vecs, black_gram, tau_perm }
    }

    /// All twelve forms, in registry order.
    #[must_use]
    pub fn all() -> Vec<RealForm> {
        FormLabel::ALL.iter().map(|&l| RealForm::new(l)).collect()
    }

    /// Split rank `r`.
    #[must_use]
    pub fn split_rank(&self) -> usize {
        self.orbits.len()
    }

    /// Dimension of the real form (= of its complexification).
    #[must_use]
    pub fn dim_g(&self) -> usize {
        self.label.dim()
    }

    /// Whether the root with index `ix` (into `self.roots.roots`) lies in
    /// the black span, i.e. restricts to zero.
    #[must_use]
    pub fn is_black_root(&self, ix: usize) -> bool {
        self.black_root[ix]
    }

    /// Number of roots in the black span.
    #[must_use]
    pub fn black_root_count(&self) -> usize {
        self.black_root.iter().filter(|&&b| b).count()
    }

    /// Indices (into `self.roots.roots`) of the positive roots not in the
    /// black span — the roots with nonzero restriction.
    #[must_use]
    pub fn positive_nonblack(&self) -> Vec<usize> {
        self.roots.positives.iter().copied().filter(|&ix| !self.black_root[ix]).collect()
    }

    /// The arrow involution `τ` applied to an ambient vector in the root
    /// lattice: expresses `v` over the simple basis and permutes the
    /// coefficients along the arrows.
    #[must_use]
    pub fn tau(&self, coeffs: &[i64]) -> Vec<Rat> {
        let rank = self.roots.rank;
        let mut cp = vec![0i64; rank];
        for i in 0..rank {
            cp[self.tau_perm[i]] = coeffs[i];
        }
        let dim = self.roots.simples[0].len();
        let mut out = vec![Rat::zero(); dim];
        for (c, s) in cp.iter().zip(&self.roots.simples) {
            out = vadd(&out, &vscale(&rat(*c, 1), s));
        }
        out
    }

    /// Remove the orthogonal projection of `v` onto the span of the black
    /// simple roots.
    ///
    /// # Panics
    /// Panics only if the black Gram matrix were singular (it never is: black
    /// simple roots are linearly independent).
    #[must_use]
    pub fn project_off_black(&self, v: &[Rat]) -> Vec<Rat> {
        if self.black_vecs.is_empty() {
            return v.to_vec();
        }
        let rhs: Vec<Rat> = self.black_vecs.iter().map(|b| dot(b, v)).collect();
        let c = solve(&self.black_gram, &rhs).expect("black simple roots are independent");
        let mut w = v.to_vec();
        for (ci, b) in c.iter().zip(&self.black_vecs) {
            w = vsub(&w, &vscale(ci, b));
        }
        w
    }

    /// The Satake restriction `π(α) = P_black⊥((α + τα)/2)` of the root with
    /// index `ix`.
    #[must_use]
    pub fn restrict(&self, ix: usize) -> Vec<Rat> {
        let v = &self.roots.roots[ix];
        let tv = self.tau(&self.roots.coeffs[ix]);
        let avg = vscale(&rat(1, 2), &vadd(v, &tv));
        self.project_off_black(&avg)
    }

    /// Grade of the root with index `ix` along white orbit `orbit_ix`: the
    /// sum of its simple-basis coefficients over the orbit's nodes. This is
    /// the coefficient of the corresponding restricted simple root in
    /// `π(α)`.
    #[must_use]
    pub fn orbit_grade(&self, ix: usize, orbit_ix: usize) -> i64 {
        self.orbits[orbit_ix].iter().map(|&n| self.roots.coeffs[ix][n - 1]).sum()
    }

    /// The restricted root system with multiplicities.
    ///
    /// # Panics
    /// Panics on internal inconsistency (the restricted simples must form a
    /// recognizable simple system).
    #[must_use]
    pub fn restricted_root_system(&self) -> RestrictedRootSystem {
        let restricted_simple: Vec<Vec<Rat>> =
            self.orbits.iter().map(|o| self.restrict(self.simple_root_index(o[0]))).collect();

        let mut positives: Vec<(Vec<Rat>, usize)> = Vec::new();
        for ix in self.positive_nonblack() {
            let p = self.restrict(ix);
            debug_assert!(p.iter().any(|x| !x.is_zero()));
            if let Some(entry) = positives.iter_mut().find(|(q, _)| *q == p) {
                entry.1 += 1;
            } else {
                positives.push((p, 1));
            }
        }

        let non_reduced = positives.iter().any(|(p, _)| {
            let dbl = vscale(&rat(2, 1), p);
            positives.iter().any(|(q, _)| *q == dbl)
        });

        let r = self.split_rank();
        let reduced_type = if non_reduced {
            format!("BC{r}")
        } else {
            let comps = classify_components(&restricted_simple);
            assert_eq!(comps.len(), 1, "restricted system of a simple form is irreducible");
            comps[0].0.name()
        };

        RestrictedRootSystem { split_rank: r, restricted_simple, positives, reduced_type, non_reduced }
    }

    /// `dim m_0` computed from the Iwasawa count
    /// `dim g − r − 2·Σ mult`, cross-checked against the independent count
    /// `#(black roots) + (rank − r)`.
    ///
    /// # Panics
    /// Panics if the two derivations disagree (registry inconsistency).
    #[must_use]
    pub fn dim_m0(&self) -> usize {
        let rrs = self.restricted_root_system();
        let iwasawa =
            self.dim_g() - self.split_rank() - 2 * rrs.sum_positive_multiplicities();
        let direct = self.black_root_count() + (self.roots.rank - self.split_rank());
        assert_eq!(iwasawa, direct, "two m0 derivations must agree");
        iwasawa
    }

    /// Index (into `self.roots.roots`) of the simple root at paper node `n`.
    ///
    /// # Panics
    /// Panics if `n` is out of range.
    #[must_use]
    pub fn simple_root_index(&self, n: usize) -> usize {
        let want: Vec<i64> = (0..self.roots.rank).map(|i| i64::from(i == n - 1)).collect();
        self.roots
            .coeffs
            .iter()
            .position(|c| *c == want)
            .expect("simple root present")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn split_forms_restrict_identically() {
        for label in [FormLabel::E6_6, FormLabel::E7_7, FormLabel::E8_8, FormLabel::F4_4, FormLabel::G2_2] {
            let f = RealForm::new(label);
            let rrs = f.restricted_root_system();
            assert_eq!(rrs.split_rank, f.roots.rank);
            assert_eq!(rrs.positives.len(), f.roots.positives.len(), "{label}");
            assert!(rrs.positives.iter().all(|&(_, m)| m == 1), "{label}");
            assert_eq!(rrs.reduced_type, f.label.complex_type().name(), "{label}");
            // split coincidence: dim N± = dim K
            assert_eq!(rrs.sum_positive_multiplicities(), f.entry.dim_k, "{label}");
        }
    }

    #[test]
    fn multiplicity_sums_match_dim_npm() {
        for f in RealForm::all() {
            let rrs = f.restricted_root_system();
            assert_eq!(rrs.sum_positive_multiplicities(), f.entry.dim_npm, "{}", f.label);
            assert_eq!(rrs.positives.len(), f.entry.restricted_positive_count, "{}", f.label);
            // negation closure with equal multiplicity holds by construction
            // on positives; check the reduced type against the registry.
            assert_eq!(rrs.reduced_type, f.entry.restricted_name, "{}", f.label);
        }
    }

    #[test]
    fn m0_dimensions() {
        let expected = [0usize, 2, 16, 28, 0, 9, 28, 0, 28, 0, 21, 0];
        for (f, want) in RealForm::all().iter().zip(expected) {
            assert_eq!(f.dim_m0(), want, "{}", f.label);
            assert_eq!(f.dim_m0(), f.entry.dim_m0, "{}", f.label);
        }
    }

    #[test]
    fn f4_20_bc1_multiplicities() {
        let f = RealForm::new(FormLabel::F4_20);
        let rrs = f.restricted_root_system();
        assert_eq!(rrs.reduced_type, "BC1");
        assert!(rrs.non_reduced);
        assert_eq!(rrs.positives.len(), 2);
        // mult(λ) = 8, mult(2λ) = 7
        let mut mults: Vec<usize> = rrs.positives.iter().map(|&(_, m)| m).collect();
        mults.sort_unstable();
        assert_eq!(mults, vec![7, 8]);
        assert_eq!(rrs.sum_positive_multiplicities(), 15);
    }

    #[test]
    fn e6_2_is_f4_with_short_mult_2() {
        let f = RealForm::new(FormLabel::E6_2);
        let rrs = f.restricted_root_system();
        assert_eq!(rrs.reduced_type, "F4");
        assert_eq!(rrs.positives.len(), 24);
        // long restricted roots have multiplicity 1, short ones 2
        let mut by_len: Vec<(Rat, usize)> = Vec::new();
        for (p, m) in &rrs.positives {
            by_len.push((dot(p, p), *m));
        }
        let lmax = by_len.iter().map(|(l, _)| l.clone()).max().expect("nonempty");
        for (l, m) in by_len {
            if l == lmax {
                assert_eq!(m, 1);
            } else {
                assert_eq!(m, 2);
            }
        }
    }
}
