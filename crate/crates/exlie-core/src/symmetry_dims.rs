//! Exact dimensions of the symmetry algebras of a Jordan algebra.
//!
//! For a Jordan algebra `J` the chain of Lie algebras
//!
//! ```text
//! der(J) ⊂ str(J) = L(J) ⊕ der(J) ⊂ conf(J) ⊂ qconf(J)
//! ```
//!
//! is computed here in exact arithmetic:
//!
//! * `der(J)` — the derivation algebra, the nullspace of the Leibniz
//!   constraints `D(x∘y) = Dx∘y + x∘Dy` on `dim²` unknowns;
//! * `str(J)` — the span of the left multiplications `L_x` together with
//!   `der(J)`; `str0(J)` removes the one-dimensional center `R·id`;
//! * `conf(J)` — the Tits–Kantor–Koecher 3-graded algebra
//!   `J ⊕ str(J) ⊕ J′`, of dimension `2·dim J + dim str(J)`;
//! * `qconf(J)` — the 5-graded algebra over the extended Freudenthal triple
//!   system, of dimension `dim conf(J) + 3 + 2·(2·dim J + 2)`.
//!
//! For the exceptional row `J = J_3^{O}` this reproduces the magic square
//! `der = 52 (f4)`, `str0 = 78 (e6)`, `conf = 133 (e7)`,
//! `qconf = 248 (e8)`.
//!
//! ## Solving the big Leibniz systems exactly
//!
//! The Leibniz system for `J_3^O` has 729 unknowns and 10206 constraint
//! rows. Solving it naively over `Q` is needlessly slow, so the solver
//! works in three exact-safe stages:
//!
//! 1. candidate rows are screened by incremental elimination modulo the
//!    Mersenne prime `p = 2³¹ − 1`; rows independent mod `p` are
//!    independent over `Q`, so the selected set is exactly independent
//!    (screening may *miss* rows — that is repaired in stage 3);
//! 2. the exact fraction-free kernel of the selected rows is computed
//!    ([`crate::exact_arith::Echelon`]);
//! 3. every constraint row is verified to annihilate the kernel exactly;
//!    any violated row is added to the selection and the solve repeats.
//!
//! The final kernel is therefore exact and independent of the choice of
//! prime; the prime only affects how much work stage 3 has to repair
//! (in practice: none).

use crate::composition_algebra::CompLabel;
use crate::exact_arith::{span_dimension, Echelon, Rat};
use crate::jordan_core::JordanAlgebra;
use alloc::vec;
use alloc::vec::Vec;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

/// The four magic-square dimensions of a Jordan algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MagicDims {
    /// `dim der(J)` (the automorphism/derivation algebra).
    pub der: usize,
    /// `dim str0(J) = dim str(J) − 1` (reduced structure algebra).
    pub str0: usize,
    /// `dim conf(J) = 2·dim J + dim str(J)` (conformal algebra).
    pub conf: usize,
    /// `dim qconf(J) = dim conf(J) + 3 + 2(2·dim J + 2)` (quasi-conformal).
    pub qconf: usize,
}

/// Sparse Leibniz constraint rows for the derivation algebra of `j`.
///
/// Unknowns are the entries `D_{a,b}` of a `dim × dim` matrix, flattened as
/// `a·dim + b`. For every unordered basis pair `(i, j)` and component `c`
/// the constraint reads
/// `Σ_k s^k_{ij} D_{c,k} − Σ_a D_{a,i} s^c_{aj} − Σ_a D_{a,j} s^c_{ia} = 0`.
/// Rows are scaled to primitive integer vectors.
#[must_use]
pub fn leibniz_rows(j: &JordanAlgebra) -> Vec<Vec<(u32, i64)>> {
    let d = j.dim;
    let mut rows = Vec::with_capacity(d * d * (d + 1) / 2);
    // The structure constants have denominator dividing 2 for every algebra
    // here; clear per-row denominators exactly via rational accumulation.
    for i in 0..d {
        for jj in i..d {
            let s = j.sc_row(i, jj);
            for c in 0..d {
                let mut cols: Vec<(usize, Rat)> = Vec::new();
                for (k, sk) in s.iter().enumerate() {
                    if !sk.is_zero() {
                        cols.push((c * d + k, sk.clone()));
                    }
                }
                for a in 0..d {
                    let t1 = &j.sc_row(a, jj)[c];
                    if !t1.is_zero() {
                        cols.push((a * d + i, -t1.clone()));
                    }
                    let t2 = &j.sc_row(i, a)[c];
                    if !t2.is_zero() {
                        cols.push((a * d + jj, -t2.clone()));
                    }
                }
                // merge duplicate columns
                cols.sort_by_key(|&(cix, _)| cix);
                let mut merged: Vec<(usize, Rat)> = Vec::with_capacity(cols.len());
                for (cix, v) in cols {
                    match merged.last_mut() {
                        Some((last, acc)) if *last == cix => *acc += v,
                        _ => merged.push((cix, v)),
                    }
                }
                merged.retain(|(_, v)| !v.is_zero());
                if merged.is_empty() {
                    continue;
                }
                // clear denominators to primitive i64
                let mut l = BigInt::from(1);
                for (_, v) in &merged {
                    l = l.lcm(v.denom());
                }
                let mut ints: Vec<(u32, BigInt)> = merged
                    .iter()
                    .map(|(cix, v)| (*cix as u32, v.numer() * (&l / v.denom())))
                    .collect();
                let mut g = BigInt::zero();
                for (_, v) in &ints {
                    g = g.gcd(v);
                }
                if !g.is_zero() && g != BigInt::from(1) {
                    for (_, v) in &mut ints {
                        *v = &*v / &g;
                    }
                }
                rows.push(
                    ints.into_iter()
                        .map(|(cix, v)| (cix, v.to_i64().expect("structure constants stay small")))
                        .collect(),
                );
            }
        }
    }
    rows
}

// ---------------------------------------------------------------------------
// modular screening
// ---------------------------------------------------------------------------

const P: u64 = (1 << 31) - 1;

fn pow_mod(mut b: u64, mut e: u64) -> u64 {
    let mut acc = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % P;
        }
        b = b * b % P;
        e >>= 1;
    }
    acc
}

fn inv_mod(a: u64) -> u64 {
    pow_mod(a, P - 2)
}

/// Incremental row echelon over `F_p` with unit pivots.
struct ModEchelon {
    cols: usize,
    rows: Vec<Vec<u64>>,
    pivots: Vec<usize>,
}

impl ModEchelon {
    fn new(cols: usize) -> Self {
        ModEchelon { cols, rows: Vec::new(), pivots: Vec::new() }
    }

    /// Returns `true` if the row was independent mod p.
    fn insert_sparse(&mut self, sparse: &[(u32, i64)]) -> bool {
        let mut row = vec![0u64; self.cols];
        for &(c, v) in sparse {
            row[c as usize] = v.rem_euclid(P as i64) as u64;
        }
        for (k, &p) in self.pivots.iter().enumerate() {
            let f = row[p];
            if f != 0 {
                let other = &self.rows[k];
                for (x, y) in row.iter_mut().zip(other.iter()) {
                    if *y != 0 {
                        *x = (*x + (P - f) * y) % P;
                    }
                }
            }
        }
        let Some(p) = row.iter().position(|&x| x != 0) else { return false };
        let inv = inv_mod(row[p]);
        for x in &mut row {
            if *x != 0 {
                *x = *x * inv % P;
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, row);
        true
    }
}

// ---------------------------------------------------------------------------
// the exact kernel pipeline
// ---------------------------------------------------------------------------

/// Exact nullspace of a sparse integer constraint system, using modular
/// screening for row selection and exact elimination plus full verification
/// for correctness (see the module docs).
#[must_use]
pub fn sparse_kernel(rows: &[Vec<(u32, i64)>], cols: usize) -> Vec<Vec<Rat>> {
    // stage 1: screen rows mod p, with a stall cutoff
    let mut screen = ModEchelon::new(cols);
    let mut selected: Vec<usize> = Vec::new();
    let mut stall = 0usize;
    let stall_limit = cols + 16;
    for (ix, row) in rows.iter().enumerate() {
        if screen.insert_sparse(row) {
            selected.push(ix);
            stall = 0;
        } else {
            stall += 1;
            if stall >= stall_limit {
                break;
            }
        }
        if screen.rank() == cols {
            break;
        }
    }
    // stage 2 + 3: exact kernel of the selected rows, then verify all rows
    let mut ech = Echelon::new(cols);
    for &ix in &selected {
        let mut dense = vec![0i128; cols];
        for &(c, v) in &rows[ix] {
            dense[c as usize] += i128::from(v);
        }
        ech.insert_ints(dense);
    }
    loop {
        let kernel = ech.kernel();
        // kernel vectors are primitive integral; verify every constraint
        let ints: Vec<Vec<BigInt>> = kernel
            .iter()
            .map(|v| v.iter().map(|x| x.numer().clone()).collect())
            .collect();
        let mut violated: Option<usize> = None;
        'rows: for (ix, row) in rows.iter().enumerate() {
            for kv in &ints {
                let mut acc = BigInt::zero();
                for &(c, v) in row {
                    let e = &kv[c as usize];
                    if !e.is_zero() {
                        acc += e * BigInt::from(v);
                    }
                }
                if !acc.is_zero() {
                    violated = Some(ix);
                    break 'rows;
                }
            }
        }
        match violated {
            None => return kernel,
            Some(ix) => {
                let mut dense = vec![0i128; cols];
                for &(c, v) in &rows[ix] {
                    dense[c as usize] += i128::from(v);
                }
                let added = ech.insert_ints(dense);
                assert!(added, "violated row must be independent of the echelon");
            }
        }
    }
}

impl ModEchelon {
    fn rank(&self) -> usize {
        self.rows.len()
    }
}

/// Basis of the derivation algebra `der(J)` as flattened `dim×dim` matrices.
#[must_use]
pub fn derivation_basis(j: &JordanAlgebra) -> Vec<Vec<Rat>> {
    let rows = leibniz_rows(j);
    sparse_kernel(&rows, j.dim * j.dim)
}

/// `dim der(J)`.
#[must_use]
pub fn derivation_dim(j: &JordanAlgebra) -> usize {
    derivation_basis(j).len()
}

/// `dim str(J)`: the span of `{L_{e_i}} ∪ der(J)`.
#[must_use]
pub fn structure_dim(j: &JordanAlgebra) -> usize {
    structure_dim_with(j, &derivation_basis(j))
}

fn structure_dim_with(j: &JordanAlgebra, ders: &[Vec<Rat>]) -> usize {
    let d = j.dim;
    let mut vectors: Vec<Vec<Rat>> = Vec::with_capacity(d + ders.len());
    for i in 0..d {
        // flatten L_{e_i} row-major: entry (k, jj) = s^k_{i,jj}
        let mut flat = vec![Rat::zero(); d * d];
        for jj in 0..d {
            for (k, v) in j.sc_row(i, jj).iter().enumerate() {
                if !v.is_zero() {
                    flat[k * d + jj] = v.clone();
                }
            }
        }
        vectors.push(flat);
    }
    vectors.extend(ders.iter().cloned());
    span_dimension(&vectors)
}

/// All four magic-square dimensions, sharing one derivation solve.
#[must_use]
pub fn magic_dims(j: &JordanAlgebra) -> MagicDims {
    let ders = derivation_basis(j);
    let str_dim = structure_dim_with(j, &ders);
    let conf = 2 * j.dim + str_dim;
    let qconf = conf + 3 + 2 * (2 * j.dim + 2);
    MagicDims { der: ders.len(), str0: str_dim - 1, conf, qconf }
}

/// Closed-form sanity identities relating the four dimensions; used by the
/// embedding checks and the golden tables.
#[must_use]
pub fn check_chain_arithmetic(j: &JordanAlgebra, m: &MagicDims) -> bool {
    // conf ⊃ str0 ⊕ so(1,1): the complement is J ⊕ J′
    let conf_ok = m.conf == m.str0 + 1 + 2 * j.dim;
    // qconf ⊃ conf ⊕ sl(2,R): the complement is two copies of F(J)
    let qconf_ok = m.qconf == m.conf + 3 + 2 * (2 * j.dim + 2);
    // der sits inside str0
    conf_ok && qconf_ok && m.der <= m.str0
}

/// Dimension-and-signature identification of the 2×2 Hermitian algebras
/// with spin factors: `J_2^A ≅ Γ_{1,q+1}` for the division algebras and
/// `J_2^{A_s} ≅ Γ_{q/2+1,q/2+1}` for the split ones (`q = dim A`).
///
/// The generic norm of `J_2^A` is `αβ − n(x)`, i.e. a hyperbolic plane plus
/// the *reversed* signature of `n`; the check verifies that this matches
/// the `Γ` parameters exactly.
#[must_use]
pub fn check_j2_gamma_identifications(label: CompLabel) -> bool {
    let a = crate::composition_algebra::CompositionAlgebra::new(label);
    let (pos, neg) = a.signature();
    let q = a.dim;
    // norm of J2^A: signature (1 + neg, 1 + pos); dimension 2 + q
    let (m, n) = (1 + neg, 1 + pos);
    if m + n != 2 + q {
        return false;
    }
    if label.is_split() {
        m == q / 2 + 1 && n == q / 2 + 1
    } else {
        m == 1 && n == q + 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jordan_core::{JordanAlgebra, JordanKind};

    fn dims(kind: JordanKind) -> MagicDims {
        magic_dims(&JordanAlgebra::new(kind))
    }

    #[test]
    fn real_field_chain() {
        let m = dims(JordanKind::RealField);
        assert_eq!(m, MagicDims { der: 0, str0: 0, conf: 3, qconf: 14 });
    }

    #[test]
    fn hermitian_small_chains() {
        assert_eq!(
            dims(JordanKind::Hermitian3(CompLabel::R)),
            MagicDims { der: 3, str0: 8, conf: 21, qconf: 52 }
        );
        assert_eq!(
            dims(JordanKind::Hermitian3(CompLabel::C)),
            MagicDims { der: 8, str0: 16, conf: 35, qconf: 78 }
        );
        assert_eq!(
            dims(JordanKind::Hermitian3(CompLabel::Cs)),
            MagicDims { der: 8, str0: 16, conf: 35, qconf: 78 }
        );
    }

    #[test]
    fn hermitian_quaternionic_chains() {
        for l in [CompLabel::H, CompLabel::Hs] {
            let m = dims(JordanKind::Hermitian3(l));
            assert_eq!(m, MagicDims { der: 21, str0: 35, conf: 66, qconf: 133 }, "{}", l.name());
        }
    }

    #[test]
    fn spin_factor_chain() {
        // R ⊕ Γ_{3,1}: der = so(2,1) = 3, str0 = so(3,1) ⊕ so(1,1) = 7,
        // conf = sl(2,R) ⊕ so(4,2) = 18, qconf = so(6,4) = 45
        let m = dims(JordanKind::SpinFactor { m: 3, n: 1 });
        assert_eq!(m, MagicDims { der: 3, str0: 7, conf: 18, qconf: 45 });
    }

    #[test]
    fn gamma_str0() {
        // Γ_{2,2}: der = so(2,1) = 3, str0 = so(2,2) = 6
        let j = JordanAlgebra::new(JordanKind::Gamma { m: 2, n: 2 });
        let m = magic_dims(&j);
        assert_eq!(m.der, 3);
        assert_eq!(m.str0, 6);
    }

    #[test]
    #[ignore = "heavy; exercised by the acceptance suite"]
    fn octonionic_chain() {
        for l in [CompLabel::O, CompLabel::Os] {
            let m = dims(JordanKind::Hermitian3(l));
            assert_eq!(m, MagicDims { der: 52, str0: 78, conf: 133, qconf: 248 }, "{}", l.name());
        }
    }

    #[test]
    fn j2_identifications() {
        for l in CompLabel::ALL {
            if l != CompLabel::R {
                assert!(check_j2_gamma_identifications(l), "{}", l.name());
            }
        }
    }
}
