//! Freudenthal triple systems `F(J) = R ⊕ R ⊕ J ⊕ J`.
//!
//! For a cubic Jordan algebra `J` with norm `N`, trace form `Tr(·,·)` and
//! adjoint `♯`, the Freudenthal triple system lives on vectors
//! `x = (α, β, A, B)` of dimension `2·dim J + 2` and carries
//!
//! * the symplectic form
//!   `{x, y} = αδ − βγ + Tr(A, D) − Tr(B, C)` for `y = (γ, δ, C, D)`;
//! * the quadratic invariant `κ(x) = ½(αβ − Tr(A, B))`;
//! * the quartic invariant
//!   `Δ(x) = −4( α·N(A) + β·N(B) + κ(x)² − Tr(A^♯, B^♯) )`;
//! * the full symmetric linearization `Δ(x₁,x₂,x₃,x₄)` with
//!   `Δ(x,x,x,x) = Δ(x)`, realized in closed form (cubic polarization of
//!   the norm terms, pair-averaged `κ` products, pair-split cross terms)
//!   and cross-checked against inclusion–exclusion polarization;
//! * the triple product `T(x, y, w)`, defined through
//!   `{T(x,y,w), z} = 2·Δ(x,y,w,z)` and recovered exactly by solving
//!   against the symplectic Gram matrix.
//!
//! The one-dimensional *extension* `F(J) ⊕ R` carries the quartic norm
//! `N(x, Φ) = Δ(x) − Φ²` and the quartic distance
//! `d₄(p, q) = Δ(x−y) − (Φ − Ψ + {x,y})²`; its invariance algebra is the
//! quasi-conformal algebra `qconf(J)` whose dimension
//! [`crate::symmetry_dims`] computes.

use crate::exact_arith::{inverse, rat, rat_i, solve, vsub, Matrix, Rat};
use crate::jordan_core::{CubicData, JordanAlgebra};
use alloc::vec;
use alloc::vec::Vec;
use num_traits::Zero;

/// A Freudenthal triple system over a cubic Jordan algebra.
pub struct Fts {
    /// The underlying Jordan algebra (must carry cubic data).
    pub jordan: JordanAlgebra,
    /// Dimension `2·dim J + 2`.
    pub dim: usize,
    /// Symplectic Gram matrix `G[l][k] = {e_l, e_k}`.
    gram: Matrix,
    gram_inv_t: Matrix,
}

/// One element split into its four blocks.
struct Blocks<'a> {
    alpha: &'a Rat,
    beta: &'a Rat,
    a: &'a [Rat],
    b: &'a [Rat],
}

impl Fts {
    /// Build `F(J)`.
    ///
    /// # Panics
    /// Panics if `j` has no cubic data or the symplectic form degenerates
    /// (it never does for nondegenerate trace forms).
    #[must_use]
    pub fn new(jordan: JordanAlgebra) -> Self {
        assert!(jordan.cubic.is_some(), "F(J) needs a cubic Jordan algebra");
        let dim = 2 * jordan.dim + 2;
        let mut fts =
            Fts { jordan, dim, gram: Matrix::zeros(0, 0), gram_inv_t: Matrix::zeros(0, 0) };
        let mut gram = Matrix::zeros(dim, dim);
        for l in 0..dim {
            let el = basis(dim, l);
            for k in 0..dim {
                let ek = basis(dim, k);
                let v = fts.skew(&el, &ek);
                if !v.is_zero() {
                    gram.set(l, k, v);
                }
            }
        }
        // transpose
        let mut gt = Matrix::zeros(dim, dim);
        for i in 0..dim {
            for j in 0..dim {
                gt.set(i, j, gram.get(j, i).clone());
            }
        }
        fts.gram_inv_t = inverse(&gt).expect("symplectic form must be nondegenerate");
        fts.gram = gram;
        fts
    }

    fn cubic(&self) -> &CubicData {
        self.jordan.cubic.as_ref().expect("checked in constructor")
    }

    fn blocks<'a>(&self, x: &'a [Rat]) -> Blocks<'a> {
        let d = self.jordan.dim;
        assert_eq!(x.len(), self.dim);
        Blocks { alpha: &x[0], beta: &x[1], a: &x[2..2 + d], b: &x[2 + d..] }
    }

    /// The symplectic form `{x, y}`.
    #[must_use]
    pub fn skew(&self, x: &[Rat], y: &[Rat]) -> Rat {
        let bx = self.blocks(x);
        let by = self.blocks(y);
        let c = self.cubic();
        bx.alpha * by.beta - bx.beta * by.alpha + c.trace_bilinear(bx.a, by.b)
            - c.trace_bilinear(bx.b, by.a)
    }

    /// The quadratic invariant `κ(x) = ½(αβ − Tr(A,B))`.
    #[must_use]
    pub fn kappa(&self, x: &[Rat]) -> Rat {
        let b = self.blocks(x);
        (b.alpha * b.beta - self.cubic().trace_bilinear(b.a, b.b)) * rat(1, 2)
    }

    /// Bilinearization `κ(x, y) = ¼(α_x β_y + α_y β_x − Tr(A_x,B_y) − Tr(A_y,B_x))`.
    #[must_use]
    pub fn kappa2(&self, x: &[Rat], y: &[Rat]) -> Rat {
        let bx = self.blocks(x);
        let by = self.blocks(y);
        let c = self.cubic();
        (bx.alpha * by.beta + by.alpha * bx.beta
            - c.trace_bilinear(bx.a, by.b)
            - c.trace_bilinear(by.a, bx.b))
            * rat(1, 4)
    }

    /// The quartic invariant `Δ(x)`.
    #[must_use]
    pub fn quartic(&self, x: &[Rat]) -> Rat {
        let b = self.blocks(x);
        let c = self.cubic();
        let k = self.kappa(x);
        let t = b.alpha * c.norm(b.a) + b.beta * c.norm(b.b) + &k * &k
            - c.trace_bilinear(&c.sharp(b.a), &c.sharp(b.b));
        t * rat_i(-4)
    }

    /// The full symmetric linearization `Δ(x₁, x₂, x₃, x₄)` in closed form.
    #[must_use]
    pub fn quartic4(&self, xs: [&[Rat]; 4]) -> Rat {
        let c = self.cubic();
        let b: Vec<Blocks<'_>> = xs.iter().map(|x| self.blocks(x)).collect();
        // (1/4) Σ_i α_i N3(A_j, A_k, A_l)  (and the β/B twin)
        let mut na = Rat::zero();
        let mut nb = Rat::zero();
        for i in 0..4 {
            let others: Vec<usize> = (0..4).filter(|&t| t != i).collect();
            na += b[i].alpha * c.n3(b[others[0]].a, b[others[1]].a, b[others[2]].a);
            nb += b[i].beta * c.n3(b[others[0]].b, b[others[1]].b, b[others[2]].b);
        }
        na *= rat(1, 4);
        nb *= rat(1, 4);
        // (1/3) Σ over the three pairings of κ₂ products
        let k = |i: usize, j: usize| self.kappa2(xs[i], xs[j]);
        let kk = (k(0, 1) * k(2, 3) + k(0, 2) * k(1, 3) + k(0, 3) * k(1, 2)) * rat(1, 3);
        // (1/6) Σ over the six ordered pair splits of Tr(½ A_i×A_j, ½ B_k×B_l)
        let half = rat(1, 2);
        let mut tt = Rat::zero();
        for (i, j, kx, l) in
            [(0, 1, 2, 3), (0, 2, 1, 3), (0, 3, 1, 2), (2, 3, 0, 1), (1, 3, 0, 2), (1, 2, 0, 3)]
        {
            let ca: Vec<Rat> = c.cross(b[i].a, b[j].a).iter().map(|v| v * &half).collect();
            let cb: Vec<Rat> = c.cross(b[kx].b, b[l].b).iter().map(|v| v * &half).collect();
            tt += c.trace_bilinear(&ca, &cb);
        }
        tt *= rat(1, 6);
        (na + nb + kk - tt) * rat_i(-4)
    }

    /// Independent oracle: inclusion–exclusion polarization
    /// `Δ(x₁,…,x₄) = (1/24) Σ_{∅≠S} (−1)^{4−|S|} Δ(Σ_S xᵢ)`.
    #[must_use]
    pub fn quartic4_polarized(&self, xs: [&[Rat]; 4]) -> Rat {
        let mut acc = Rat::zero();
        for mask in 1u32..16 {
            let mut s = vec![Rat::zero(); self.dim];
            for (i, x) in xs.iter().enumerate() {
                if mask & (1 << i) != 0 {
                    for (t, v) in s.iter_mut().zip(x.iter()) {
                        *t += v;
                    }
                }
            }
            let term = self.quartic(&s);
            if (4 - mask.count_ones()) % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        acc / rat_i(24)
    }

    /// The covector `z ↦ 2·Δ(x, y, w, z)`, assembled in closed form.
    ///
    /// `Δ(x,y,w,·)` is linear, so each of the closed-form pieces of
    /// [`Fts::quartic4`] contributes a covector: the cubic terms via
    /// partial trilinear evaluations `N₃(·,·,e_k)`, the `κ` pairings via
    /// the bilinearization with one slot freed, and the cross terms via
    /// `Tr(· × e_k, ·)`.  One pass here replaces `dim` full polarization
    /// evaluations, which is what makes the triple product affordable on
    /// the 56-dimensional octonionic systems.
    #[must_use]
    pub fn quartic4_covector(&self, x: &[Rat], y: &[Rat], w: &[Rat]) -> Vec<Rat> {
        let c = self.cubic();
        let d = self.jordan.dim;
        let [bx, by, bw] = [self.blocks(x), self.blocks(y), self.blocks(w)];
        let quarter = rat(1, 4);
        let mut alpha_cov = Rat::zero();
        let mut beta_cov = Rat::zero();
        let mut a_cov = vec![Rat::zero(); d];
        let mut b_cov = vec![Rat::zero(); d];
        let add_scaled = |out: &mut Vec<Rat>, s: &Rat, v: Vec<Rat>| {
            if !s.is_zero() {
                for (o, t) in out.iter_mut().zip(v) {
                    *o += s * t;
                }
            }
        };
        // cubic terms: (1/4)[α_z N3(Ax,Ay,Aw) + Σ_p α_p N3(A_q,A_r,A_z)]
        alpha_cov += &quarter * c.n3(bx.a, by.a, bw.a);
        beta_cov += &quarter * c.n3(bx.b, by.b, bw.b);
        add_scaled(&mut a_cov, &(&quarter * bx.alpha), c.n3_partial(by.a, bw.a));
        add_scaled(&mut a_cov, &(&quarter * by.alpha), c.n3_partial(bx.a, bw.a));
        add_scaled(&mut a_cov, &(&quarter * bw.alpha), c.n3_partial(bx.a, by.a));
        add_scaled(&mut b_cov, &(&quarter * bx.beta), c.n3_partial(by.b, bw.b));
        add_scaled(&mut b_cov, &(&quarter * by.beta), c.n3_partial(bx.b, bw.b));
        add_scaled(&mut b_cov, &(&quarter * bw.beta), c.n3_partial(bx.b, by.b));
        // κ pairings: (1/3) Σ κ₂(p,q)·κ₂(r,z) over the three pairings
        let third = rat(1, 3);
        for (scal, br) in [
            (self.kappa2(x, y), &bw),
            (self.kappa2(x, w), &by),
            (self.kappa2(y, w), &bx),
        ] {
            let s = &third * &scal * &quarter;
            if s.is_zero() {
                continue;
            }
            alpha_cov += &s * br.beta;
            beta_cov += &s * br.alpha;
            // −¼ Tr(A_r, B_z) lands on the B block, −¼ Tr(B_r, A_z) on A
            for (o, t) in b_cov.iter_mut().zip(c.gram.mul_vec(br.a)) {
                *o -= &s * t;
            }
            for (o, t) in a_cov.iter_mut().zip(c.gram.mul_vec(br.b)) {
                *o -= &s * t;
            }
        }
        // cross terms: −(1/6)·¼ Σ Tr(A_i×A_j, B_k×B_l) over the six splits
        // with z in one slot
        let m24 = rat(-1, 24);
        let axy = c.cross(bx.a, by.a);
        let axw = c.cross(bx.a, bw.a);
        let ayw = c.cross(by.a, bw.a);
        let bxy = c.cross(bx.b, by.b);
        let bxw = c.cross(bx.b, bw.b);
        let byw = c.cross(by.b, bw.b);
        add_scaled(&mut b_cov, &m24, c.cross_trace_partial(bw.b, &axy)); // Tr(Ax×Ay, Bw×Bz)
        add_scaled(&mut b_cov, &m24, c.cross_trace_partial(by.b, &axw)); // Tr(Ax×Aw, By×Bz)
        add_scaled(&mut b_cov, &m24, c.cross_trace_partial(bx.b, &ayw)); // Tr(Ay×Aw, Bx×Bz)
        add_scaled(&mut a_cov, &m24, c.cross_trace_partial(bx.a, &byw)); // Tr(Ax×Az, By×Bw)
        add_scaled(&mut a_cov, &m24, c.cross_trace_partial(bw.a, &bxy)); // Tr(Aw×Az, Bx×By)
        add_scaled(&mut a_cov, &m24, c.cross_trace_partial(by.a, &bxw)); // Tr(Ay×Az, Bx×Bw)
        // Δ₄ = (na + nb + kk − tt)·(−4); the covector carries 2·Δ₄
        let m8 = rat_i(-8);
        let mut f = Vec::with_capacity(self.dim);
        f.push(&m8 * alpha_cov);
        f.push(&m8 * beta_cov);
        f.extend(a_cov.into_iter().map(|v| &m8 * v));
        f.extend(b_cov.into_iter().map(|v| &m8 * v));
        f
    }

    /// The triple product `T(x, y, w)`, defined by
    /// `{T(x,y,w), z} = 2·Δ(x,y,w,z)` for all `z`.
    #[must_use]
    pub fn triple(&self, x: &[Rat], y: &[Rat], w: &[Rat]) -> Vec<Rat> {
        // f_k = 2 Δ(x,y,w,e_k);  {t, e_k} = Σ_l t_l G[l][k]  ⇒  Gᵀ t = f
        let f = self.quartic4_covector(x, y, w);
        self.gram_inv_t.mul_vec(&f)
    }

    /// Quartic norm of the extended system: `N(x, Φ) = Δ(x) − Φ²`.
    ///
    /// The extended element is `(x, phi)`.
    #[must_use]
    pub fn extended_norm(&self, x: &[Rat], phi: &Rat) -> Rat {
        self.quartic(x) - phi * phi
    }

    /// Quartic distance on the extended system:
    /// `d₄(p, q) = Δ(x − y) − (Φ − Ψ + {x, y})²`.
    #[must_use]
    pub fn quartic_distance(&self, p: (&[Rat], &Rat), q: (&[Rat], &Rat)) -> Rat {
        let diff = vsub(p.0, q.0);
        let s = p.1 - q.1 + self.skew(p.0, q.0);
        self.quartic(&diff) - &s * &s
    }

    /// Rank of the symplectic Gram matrix (nondegeneracy check).
    #[must_use]
    pub fn symplectic_rank(&self) -> usize {
        crate::exact_arith::rank(&self.gram)
    }

    /// Verify `{T(x,x,x), x} = 2Δ(x)` and symmetry of `T` on a sample.
    #[must_use]
    pub fn check_triple(&self, x: &[Rat], y: &[Rat], w: &[Rat]) -> bool {
        let t = self.triple(x, x, x);
        if self.skew(&t, x) != rat_i(2) * self.quartic(x) {
            return false;
        }
        let t1 = self.triple(x, y, w);
        let t2 = self.triple(y, w, x);
        let t3 = self.triple(w, x, y);
        t1 == t2 && t2 == t3
    }

    /// Solve `{t, ·} = f(·)` for a covector given on the basis; exposed for
    /// tests of nondegeneracy.
    #[must_use]
    pub fn solve_against_symplectic(&self, f: &[Rat]) -> Option<Vec<Rat>> {
        // Gᵀ t = f
        let d = self.dim;
        let mut gt = Matrix::zeros(d, d);
        for i in 0..d {
            for j in 0..d {
                gt.set(i, j, self.gram.get(j, i).clone());
            }
        }
        solve(&gt, f)
    }
}

fn basis(dim: usize, i: usize) -> Vec<Rat> {
    let mut v = vec![Rat::zero(); dim];
    v[i] = rat_i(1);
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::composition_algebra::CompLabel;
    use crate::jordan_core::JordanKind;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn rand_vec(rng: &mut ChaCha8Rng, dim: usize) -> Vec<Rat> {
        (0..dim).map(|_| rat_i(rng.gen_range(-3..=3))).collect()
    }

    fn suite(kind: JordanKind, trials: usize) {
        let f = Fts::new(JordanAlgebra::new(kind));
        assert_eq!(f.symplectic_rank(), f.dim, "{}: symplectic degenerate", kind.name());
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for _ in 0..trials {
            let x = rand_vec(&mut rng, f.dim);
            let y = rand_vec(&mut rng, f.dim);
            let w = rand_vec(&mut rng, f.dim);
            let z = rand_vec(&mut rng, f.dim);
            // antisymmetry
            assert_eq!(f.skew(&x, &y), -f.skew(&y, &x));
            // quartic homogeneity Δ(λx) = λ⁴ Δ(x), λ = 3
            let lx: Vec<Rat> = x.iter().map(|v| v * rat_i(3)).collect();
            assert_eq!(f.quartic(&lx), rat_i(81) * f.quartic(&x));
            // diagonal of the linearization
            assert_eq!(f.quartic4([&x, &x, &x, &x]), f.quartic(&x));
            // closed form vs inclusion–exclusion polarization
            assert_eq!(f.quartic4([&x, &y, &w, &z]), f.quartic4_polarized([&x, &y, &w, &z]));
            // triple product and its symmetry
            assert!(f.check_triple(&x, &y, &w));
            // extended system: d₄(p, 0) = N(p)
            let phi = rat_i(rng.gen_range(-3..=3));
            let zero = vec![Rat::zero(); f.dim];
            let z0 = Rat::zero();
            assert_eq!(f.quartic_distance((&x, &phi), (&zero, &z0)), f.extended_norm(&x, &phi));
        }
    }

    #[test]
    fn pure_scalar_example() {
        // A = B = 0 ⇒ Δ = −α²β²
        let f = Fts::new(JordanAlgebra::new(JordanKind::Hermitian3(CompLabel::R)));
        let mut x = vec![Rat::zero(); f.dim];
        x[0] = rat_i(2);
        x[1] = rat_i(3);
        assert_eq!(f.quartic(&x), rat_i(-36));
    }

    #[test]
    fn covector_matches_basis_polarizations() {
        for kind in
            [JordanKind::Hermitian3(CompLabel::R), JordanKind::SpinFactor { m: 2, n: 2 }]
        {
            let f = Fts::new(JordanAlgebra::new(kind));
            let mut rng = ChaCha8Rng::seed_from_u64(23);
            for _ in 0..4 {
                let x = rand_vec(&mut rng, f.dim);
                let y = rand_vec(&mut rng, f.dim);
                let w = rand_vec(&mut rng, f.dim);
                let cov = f.quartic4_covector(&x, &y, &w);
                for k in 0..f.dim {
                    let e = basis(f.dim, k);
                    assert_eq!(cov[k], rat_i(2) * f.quartic4([&x, &y, &w, &e]), "slot {k}");
                }
            }
        }
    }

    #[test]
    fn fts_j3r() {
        suite(JordanKind::Hermitian3(CompLabel::R), 6);
    }

    #[test]
    fn fts_real_and_spin() {
        suite(JordanKind::RealField, 6);
        suite(JordanKind::SpinFactor { m: 2, n: 1 }, 4);
    }
}
