//! Composition algebras via the Cayley–Dickson construction.
//!
//! Starting from the reals, each doubling step builds products on pairs
//!
//! ```text
//! (a, b)(c, d) = (a·c + γ·d̄·b,  d·a + b·c̄),      (a, b)̄ = (ā, −b),
//! ```
//!
//! with parameter `γ = −1` for the division tower `C, H, O` and `γ = +1` at
//! the last step for the split companions `C_s, H_s, O_s`. The quadratic
//! norm `n(x) = Re(x·x̄)` is multiplicative in every case; its signature is
//! `(dim, 0)` for the division algebras and `(dim/2, dim/2)` for the split
//! ones. The basis is the standard one (`e_0 = 1`, imaginary units
//! `e_1, …`), and all structure constants lie in `{−1, 0, +1}`.
//!
//! Octonionic products are not associative, only *alternative*: any two
//! elements generate an associative subalgebra. The checks in
//! [`check_alternative`] and friends are exported so that test suites (and
//! the CLI) can re-verify the tower on demand with random exact samples.

use crate::exact_arith::{rat_i, Rat};
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use num_traits::Zero;

/// Label of one of the seven composition algebras over the reals.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CompLabel {
    /// The reals, dimension 1.
    R,
    /// Complex numbers, dimension 2.
    C,
    /// Quaternions, dimension 4.
    H,
    /// Octonions, dimension 8.
    O,
    /// Split complex numbers, dimension 2.
    Cs,
    /// Split quaternions, dimension 4.
    Hs,
    /// Split octonions, dimension 8.
    Os,
}

impl CompLabel {
    /// All seven labels, division tower first.
    pub const ALL: [CompLabel; 7] = [
        CompLabel::R,
        CompLabel::C,
        CompLabel::H,
        CompLabel::O,
        CompLabel::Cs,
        CompLabel::Hs,
        CompLabel::Os,
    ];

    /// Real dimension.
    #[must_use]
    pub fn dim(self) -> usize {
        match self {
            CompLabel::R => 1,
            CompLabel::C | CompLabel::Cs => 2,
            CompLabel::H | CompLabel::Hs => 4,
            CompLabel::O | CompLabel::Os => 8,
        }
    }

    /// Whether this is one of the split algebras.
    #[must_use]
    pub fn is_split(self) -> bool {
        matches!(self, CompLabel::Cs | CompLabel::Hs | CompLabel::Os)
    }

    /// Display name (`"O_s"` style for the split algebras).
    #[must_use]
    pub fn name(self) -> &'static str {
        match self {
            CompLabel::R => "R",
            CompLabel::C => "C",
            CompLabel::H => "H",
            CompLabel::O => "O",
            CompLabel::Cs => "C_s",
            CompLabel::Hs => "H_s",
            CompLabel::Os => "O_s",
        }
    }

    /// Parse a label (accepts `"O"`, `"Os"`, `"O_s"`, case-insensitive).
    #[must_use]
    pub fn parse(s: &str) -> Option<Self> {
        let t: String = s.chars().filter(|c| *c != '_').collect();
        match t.to_ascii_uppercase().as_str() {
            "R" => Some(CompLabel::R),
            "C" => Some(CompLabel::C),
            "H" => Some(CompLabel::H),
            "O" => Some(CompLabel::O),
            "CS" => Some(CompLabel::Cs),
            "HS" => Some(CompLabel::Hs),
            "OS" => Some(CompLabel::Os),
            _ => None,
        }
    }
}

/// A composition algebra with explicit structure constants.
#[derive(Clone, Debug)]
pub struct CompositionAlgebra {
    /// Which algebra this is.
    pub label: CompLabel,
    /// Real dimension (1, 2, 4 or 8).
    pub dim: usize,
    /// Structure constants `table[i][j][k]`: coefficient of `e_k` in
    /// `e_i · e_j`; all entries lie in `{−1, 0, +1}`.
    table: Vec<i8>,
}

impl CompositionAlgebra {
    /// Construct the algebra for a label by iterated Cayley–Dickson doubling.
    #[must_use]
    pub fn new(label: CompLabel) -> Self {
        let base = vec![1i8]; // R: e0*e0 = e0
        let table = match label {
            CompLabel::R => base,
            CompLabel::C => cd(&base, 1, -1),
            CompLabel::Cs => cd(&base, 1, 1),
            CompLabel::H => cd(&cd(&base, 1, -1), 2, -1),
            CompLabel::Hs => cd(&cd(&base, 1, -1), 2, 1),
            CompLabel::O => cd(&cd(&cd(&base, 1, -1), 2, -1), 4, -1),
            CompLabel::Os => cd(&cd(&cd(&base, 1, -1), 2, -1), 4, 1),
        };
        CompositionAlgebra { label, dim: label.dim(), table }
    }

    /// Structure constant: coefficient of `e_k` in `e_i · e_j`.
    #[must_use]
    pub fn sc(&self, i: usize, j: usize, k: usize) -> i8 {
        self.table[(i * self.dim + j) * self.dim + k]
    }

    /// Product of two elements given by coordinate vectors.
    ///
    /// # Panics
    /// Panics on dimension mismatch.
    #[must_use]
    pub fn mul(&self, x: &[Rat], y: &[Rat]) -> Vec<Rat> {
        assert_eq!(x.len(), self.dim);
        assert_eq!(y.len(), self.dim);
        let mut out = vec![Rat::zero(); self.dim];
        for i in 0..self.dim {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..self.dim {
                if y[j].is_zero() {
                    continue;
                }
                let p = &x[i] * &y[j];
                for k in 0..self.dim {
                    match self.sc(i, j, k) {
                        0 => {}
                        1 => out[k] += &p,
                        _ => out[k] -= &p,
                    }
                }
            }
        }
        out
    }

    /// Conjugation `x̄` (negate the imaginary part).
    #[must_use]
    pub fn conj(&self, x: &[Rat]) -> Vec<Rat> {
        let mut out: Vec<Rat> = x.iter().map(|v| -v.clone()).collect();
        out[0] = x[0].clone();
        out
    }

    /// Real part `Re(x)`.
    #[must_use]
    pub fn real_part(&self, x: &[Rat]) -> Rat {
        x[0].clone()
    }

    /// Quadratic norm `n(x) = Re(x·x̄)`.
    #[must_use]
    pub fn norm(&self, x: &[Rat]) -> Rat {
        let xc = self.conj(x);
        self.real_part(&self.mul(x, &xc))
    }

    /// Polarized norm `n(x, y) = ½(n(x+y) − n(x) − n(y))`.
    #[must_use]
    pub fn norm_bilinear(&self, x: &[Rat], y: &[Rat]) -> Rat {
        let s: Vec<Rat> = x.iter().zip(y).map(|(a, b)| a + b).collect();
        (self.norm(&s) - self.norm(x) - self.norm(y)) / rat_i(2)
    }

    /// Signature `(positive, negative)` of the diagonal norm form on the
    /// standard basis.
    ///
    /// # Panics
    /// Panics if the norm form fails to be diagonal `±1` on this basis
    /// (it never does for the Cayley–Dickson bases built here).
    #[must_use]
    pub fn signature(&self) -> (usize, usize) {
        let mut pos = 0;
        let mut neg = 0;
        for i in 0..self.dim {
            let ei = basis_vec(self.dim, i);
            for j in 0..self.dim {
                let ej = basis_vec(self.dim, j);
                let v = self.norm_bilinear(&ei, &ej);
                if i == j {
                    if v == rat_i(1) {
                        pos += 1;
                    } else if v == rat_i(-1) {
                        neg += 1;
                    } else {
                        panic!("norm form not ±1 on the diagonal");
                    }
                } else {
                    assert!(v.is_zero(), "norm form not diagonal");
                }
            }
        }
        (pos, neg)
    }
}

/// Standard basis vector `e_i` of length `dim`.
#[must_use]
pub fn basis_vec(dim: usize, i: usize) -> Vec<Rat> {
    let mut v = vec![Rat::zero(); dim];
    v[i] = rat_i(1);
    v
}

/// One Cayley–Dickson doubling step on a structure-constant table.
fn cd(table: &[i8], q: usize, gamma: i8) -> Vec<i8> {
    let sc = |i: usize, j: usize, k: usize| table[(i * q + j) * q + k];
    let conj_sign = |i: usize| if i == 0 { 1i8 } else { -1i8 };
    let d2 = 2 * q;
    let mut out = vec![0i8; d2 * d2 * d2];
    for i in 0..d2 {
        for j in 0..d2 {
            // e_i = (a, b), e_j = (c, d) with exactly one base unit each
            let (ai, bi) = if i < q { (Some(i), None) } else { (None, Some(i - q)) };
            let (cj, dj) = if j < q { (Some(j), None) } else { (None, Some(j - q)) };
            // first component: a·c + γ·d̄·b
            if let (Some(a), Some(c)) = (ai, cj) {
                for k in 0..q {
                    out[(i * d2 + j) * d2 + k] += sc(a, c, k);
                }
            }
            if let (Some(d), Some(b)) = (dj, bi) {
                for k in 0..q {
                    out[(i * d2 + j) * d2 + k] += gamma * conj_sign(d) * sc(d, b, k);
                }
            }
            // second component: d·a + b·c̄
            if let (Some(d), Some(a)) = (dj, ai) {
                for k in 0..q {
                    out[(i * d2 + j) * d2 + q + k] += sc(d, a, k);
                }
            }
            if let (Some(b), Some(c)) = (bi, cj) {
                for k in 0..q {
                    out[(i * d2 + j) * d2 + q + k] += conj_sign(c) * sc(b, c, k);
                }
            }
        }
    }
    out
}

// ---------------------------------------------------------------------------
// property checks (consumed by test suites and `verify-all`)
// ---------------------------------------------------------------------------

/// Check `n(x·y) = n(x)·n(y)` for one sample pair.
#[must_use]
pub fn check_composition(a: &CompositionAlgebra, x: &[Rat], y: &[Rat]) -> bool {
    a.norm(&a.mul(x, y)) == a.norm(x) * a.norm(y)
}

/// Check both alternative laws `x(xy) = (xx)y` and `(yx)x = y(xx)`.
#[must_use]
pub fn check_alternative(a: &CompositionAlgebra, x: &[Rat], y: &[Rat]) -> bool {
    let xy = a.mul(x, y);
    let xx = a.mul(x, x);
    let yx = a.mul(y, x);
    a.mul(x, &xy) == a.mul(&xx, y) && a.mul(&yx, x) == a.mul(y, &xx)
}

/// Check associativity `(xy)z = x(yz)` (holds for dimensions ≤ 4).
#[must_use]
pub fn check_associative(a: &CompositionAlgebra, x: &[Rat], y: &[Rat], z: &[Rat]) -> bool {
    a.mul(&a.mul(x, y), z) == a.mul(x, &a.mul(y, z))
}

/// Check that conjugation is an anti-homomorphism: `conj(xy) = conj(y)·conj(x)`.
#[must_use]
pub fn check_conj_antihom(a: &CompositionAlgebra, x: &[Rat], y: &[Rat]) -> bool {
    a.conj(&a.mul(x, y)) == a.mul(&a.conj(y), &a.conj(x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn rand_vec(rng: &mut ChaCha8Rng, dim: usize) -> Vec<Rat> {
        (0..dim).map(|_| rat_i(rng.gen_range(-3..=3))).collect()
    }

    #[test]
    fn signatures() {
        let expect = [
            (CompLabel::R, (1, 0)),
            (CompLabel::C, (2, 0)),
            (CompLabel::H, (4, 0)),
            (CompLabel::O, (8, 0)),
            (CompLabel::Cs, (1, 1)),
            (CompLabel::Hs, (2, 2)),
            (CompLabel::Os, (4, 4)),
        ];
        for (l, sig) in expect {
            assert_eq!(CompositionAlgebra::new(l).signature(), sig, "{}", l.name());
        }
    }

    #[test]
    fn quaternion_convention() {
        // e1·e2 = e3, e2·e1 = −e3
        let h = CompositionAlgebra::new(CompLabel::H);
        let e1 = basis_vec(4, 1);
        let e2 = basis_vec(4, 2);
        let mut e3 = basis_vec(4, 3);
        assert_eq!(h.mul(&e1, &e2), e3);
        e3[3] = rat_i(-1);
        assert_eq!(h.mul(&e2, &e1), e3);
    }

    #[test]
    fn unit_element() {
        for l in CompLabel::ALL {
            let a = CompositionAlgebra::new(l);
            let one = basis_vec(a.dim, 0);
            let mut rng = ChaCha8Rng::seed_from_u64(7);
            let x = rand_vec(&mut rng, a.dim);
            assert_eq!(a.mul(&one, &x), x);
            assert_eq!(a.mul(&x, &one), x);
        }
    }

    #[test]
    fn composition_alternativity_conjugation() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for l in CompLabel::ALL {
            let a = CompositionAlgebra::new(l);
            for _ in 0..200 {
                let x = rand_vec(&mut rng, a.dim);
                let y = rand_vec(&mut rng, a.dim);
                let z = rand_vec(&mut rng, a.dim);
                assert!(check_composition(&a, &x, &y), "{}", l.name());
                assert!(check_alternative(&a, &x, &y), "{}", l.name());
                assert!(check_conj_antihom(&a, &x, &y), "{}", l.name());
                if a.dim <= 4 {
                    assert!(check_associative(&a, &x, &y, &z), "{}", l.name());
                }
            }
        }
    }

    #[test]
    fn octonions_not_associative() {
        for l in [CompLabel::O, CompLabel::Os] {
            let a = CompositionAlgebra::new(l);
            let mut found = false;
            'outer: for i in 1..8 {
                for j in 1..8 {
                    for k in 1..8 {
                        let (x, y, z) = (basis_vec(8, i), basis_vec(8, j), basis_vec(8, k));
                        if !check_associative(&a, &x, &y, &z) {
                            found = true;
                            break 'outer;
                        }
                    }
                }
            }
            assert!(found, "{} should not be associative", l.name());
        }
    }
}
