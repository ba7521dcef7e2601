//! Cubic Jordan algebras via the Freudenthal–Springer–Tits construction.
//!
//! A *cubic Jordan algebra* is determined by a cubic norm form `N` with a
//! basepoint `c`, `N(c) = 1`. Writing `N_3` for the full symmetric
//! trilinear polarization (`N_3(x,x,x) = N(x)`), the construction produces:
//!
//! * the linear trace `Tr(x) = 3·N_3(c,c,x)` and the bilinear spur form
//!   `S(x,y) = 6·N_3(x,y,c)`;
//! * the trace bilinear form `Tr(x,y) = Tr(x)·Tr(y) − S(x,y)`;
//! * the quadratic adjoint (*sharp*) `x^♯`, defined by
//!   `Tr(x^♯, y) = 3·N_3(x,x,y)`, with the adjoint identity
//!   `(x^♯)^♯ = N(x)·x`;
//! * the Freudenthal cross product `x × y = (x+y)^♯ − x^♯ − y^♯`;
//! * finally the Jordan product
//!   `x ∘ y = ½( x × y + Tr(x)·y + Tr(y)·x − S(x,y)·c )`, which is
//!   commutative with unit `c` and satisfies the Jordan identity
//!   `(x∘x)∘(x∘y) = x∘((x∘x)∘y)`.
//!
//! The algebras provided here:
//!
//! * `R` — the base field with `N(ξ) = ξ³`;
//! * `R ⊕ Γ_{m,n}` — spin factors over a quadratic space of signature
//!   `(m, n)` with `N(ξ ⊕ γ) = ξ·η(γ,γ)`;
//! * `Γ_{m,n}` — the degree-*2* spin factor Jordan algebra `JSpin` whose
//!   generic norm has signature `(m, n)` (this is `J_2^A` in disguise:
//!   `J_2^O ≅ Γ_{1,9}`, `J_2^{O_s} ≅ Γ_{5,5}`);
//! * `J_3^A` — Hermitian 3×3 matrices over a composition algebra `A`, with
//!   `N(X) = det`-like cubic form
//!   `α1·α2·α3 − Σᵢ αᵢ·n(xᵢ) + 2·Re((x1·x2)·x3)`;
//! * `J_{1,2}^A` — the Lorentzian cousin of `J_3^A` on `η`-Hermitian
//!   matrices, `η = diag(−1,1,1)`, carried through its bilinear product
//!   `X ∘ Y = ½(XY + YX)` only (no cubic structure is attached).
//!
//! For the Hermitian algebras the Jordan product is computed *twice* — from
//! the cubic norm as above and as the symmetrized matrix product — and the
//! two structure-constant tables are required to agree
//! ([`JordanAlgebra::check_norm_circ_match`]).

use crate::composition_algebra::{basis_vec, CompLabel, CompositionAlgebra};
use crate::exact_arith::{inverse, rat, rat_i, vadd, vscale, vsub, Matrix, Rat};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use num_traits::Zero;

/// Which Jordan algebra to construct.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum JordanKind {
    /// The base field `R` (dimension 1, `N(ξ) = ξ³`).
    RealField,
    /// The cubic spin factor `R ⊕ Γ_{m,n}` (dimension `1 + m + n`).
    SpinFactor {
        /// positive part of the signature of `η`
        m: usize,
        /// negative part of the signature of `η`
        n: usize,
    },
    /// The degree-2 spin factor `Γ_{m,n}` whose generic norm has signature
    /// `(m, n)` (dimension `m + n`).
    Gamma {
        /// positive part of the norm-form signature
        m: usize,
        /// negative part of the norm-form signature
        n: usize,
    },
    /// Hermitian 3×3 matrices `J_3^A` over a composition algebra.
    Hermitian3(CompLabel),
    /// Lorentzian `J_{1,2}^A` on `diag(−1,1,1)`-Hermitian matrices.
    Lorentzian(CompLabel),
}

impl JordanKind {
    /// Real dimension of the algebra.
    #[must_use]
    pub fn dim(self) -> usize {
        match self {
            JordanKind::RealField => 1,
            JordanKind::SpinFactor { m, n } => 1 + m + n,
            JordanKind::Gamma { m, n } => m + n,
            JordanKind::Hermitian3(a) | JordanKind::Lorentzian(a) => 3 + 3 * a.dim(),
        }
    }

    /// Display name, e.g. `"J3^O_s"` or `"R+Gamma_{4,4}"`.
    #[must_use]
    pub fn name(self) -> String {
        match self {
            JordanKind::RealField => String::from("R"),
            JordanKind::SpinFactor { m, n } => format!("R+Gamma_{{{m},{n}}}"),
            JordanKind::Gamma { m, n } => format!("Gamma_{{{m},{n}}}"),
            JordanKind::Hermitian3(a) => format!("J3^{}", a.name()),
            JordanKind::Lorentzian(a) => format!("J_{{1,2}}^{}", a.name()),
        }
    }
}

/// The cubic-norm apparatus of a cubic Jordan algebra.
pub struct CubicData {
    dim: usize,
    /// basepoint `c` (the algebra unit)
    pub basepoint: Vec<Rat>,
    /// full symmetric trilinear table `N_3(e_i, e_j, e_k)`
    n3: Vec<Rat>,
    /// sparse view of the same table: entry `i·dim + j` lists the
    /// `(k, N_3(e_i, e_j, e_k))` with nonzero value.  The trilinear table
    /// of a cubic norm is very sparse (a determinant has few monomials),
    /// and every hot evaluation walks this view instead of the cube.
    n3_sparse: Vec<Vec<(usize, Rat)>>,
    /// `Tr(e_i)`
    tr: Vec<Rat>,
    /// trace bilinear Gram matrix `Tr(e_i, e_j)`
    pub gram: Matrix,
    gram_inv: Matrix,
    /// cross-product table `e_i × e_j`
    cross_tab: Vec<Vec<Rat>>,
}

impl CubicData {
    /// Build the apparatus from a cubic norm evaluator and basepoint.
    ///
    /// # Panics
    /// Panics if `N(c) ≠ 1` or the trace bilinear form is degenerate.
    #[must_use]
    pub fn from_norm(dim: usize, norm: &dyn Fn(&[Rat]) -> Rat, basepoint: Vec<Rat>) -> Self {
        assert_eq!(norm(&basepoint), rat_i(1), "basepoint must have norm 1");
        // polarize: N3(x,y,z) = (N(x+y+z) − N(x+y) − N(x+z) − N(y+z)
        //                        + N(x) + N(y) + N(z)) / 6
        let mut n3 = vec![Rat::zero(); dim * dim * dim];
        let e = |i: usize| basis_vec(dim, i);
        let six = rat_i(6);
        for i in 0..dim {
            for j in i..dim {
                for k in j..dim {
                    let v = (norm(&vadd(&vadd(&e(i), &e(j)), &e(k)))
                        - norm(&vadd(&e(i), &e(j)))
                        - norm(&vadd(&e(i), &e(k)))
                        - norm(&vadd(&e(j), &e(k)))
                        + norm(&e(i))
                        + norm(&e(j))
                        + norm(&e(k)))
                        / &six;
                    for (a, b, c) in
                        [(i, j, k), (i, k, j), (j, i, k), (j, k, i), (k, i, j), (k, j, i)]
                    {
                        n3[(a * dim + b) * dim + c] = v.clone();
                    }
                }
            }
        }
        let mut n3_sparse = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                let row: Vec<(usize, Rat)> = (0..dim)
                    .filter_map(|k| {
                        let v = &n3[(i * dim + j) * dim + k];
                        (!v.is_zero()).then(|| (k, v.clone()))
                    })
                    .collect();
                n3_sparse.push(row);
            }
        }
        let mut data = CubicData {
            dim,
            basepoint,
            n3,
            n3_sparse,
            tr: Vec::new(),
            gram: Matrix::zeros(dim, dim),
            gram_inv: Matrix::zeros(dim, dim),
            cross_tab: Vec::new(),
        };
        // Tr(x) = 3 N3(c,c,x);  S(x,y) = 6 N3(x,y,c);  Tr(x,y) = Tr x Tr y − S
        data.tr = (0..dim).map(|k| rat_i(3) * data.n3_basis_cc(k)).collect();
        let mut gram = Matrix::zeros(dim, dim);
        for i in 0..dim {
            for j in 0..dim {
                let s = rat_i(6) * data.n3_with_c(i, j);
                gram.set(i, j, &data.tr[i] * &data.tr[j] - s);
            }
        }
        data.gram_inv = inverse(&gram).expect("trace bilinear form must be nondegenerate");
        data.gram = gram;
        // sharp via Tr(x^♯, y) = 3 N3(x,x,y); build the cross table
        let sharp_basis: Vec<Vec<Rat>> = (0..dim)
            .map(|i| {
                let rhs: Vec<Rat> =
                    (0..dim).map(|k| rat_i(3) * data.n3.at(dim, i, i, k)).collect();
                data.gram_inv.mul_vec(&rhs)
            })
            .collect();
        let mut cross_tab = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                // x = e_i + e_j: rhs_k = 3(N3(i,i,k) + 2 N3(i,j,k) + N3(j,j,k))
                let rhs: Vec<Rat> = (0..dim)
                    .map(|k| {
                        rat_i(3)
                            * (data.n3.at(dim, i, i, k)
                                + rat_i(2) * data.n3.at(dim, i, j, k)
                                + data.n3.at(dim, j, j, k))
                    })
                    .collect();
                let sharp_sum = data.gram_inv.mul_vec(&rhs);
                cross_tab.push(vsub(&vsub(&sharp_sum, &sharp_basis[i]), &sharp_basis[j]));
            }
        }
        data.cross_tab = cross_tab;
        data
    }

    fn n3_basis_cc(&self, k: usize) -> Rat {
        let c = &self.basepoint;
        let mut acc = Rat::zero();
        for (i, ci) in c.iter().enumerate() {
            if ci.is_zero() {
                continue;
            }
            for (j, cj) in c.iter().enumerate() {
                if cj.is_zero() {
                    continue;
                }
                acc += ci * cj * self.n3.at(self.dim, i, j, k);
            }
        }
        acc
    }

    fn n3_with_c(&self, i: usize, j: usize) -> Rat {
        let mut acc = Rat::zero();
        for (k, ck) in self.basepoint.iter().enumerate() {
            if !ck.is_zero() {
                acc += ck * self.n3.at(self.dim, i, j, k);
            }
        }
        acc
    }

    /// Trilinear `N_3(x, y, z)`.
    #[must_use]
    pub fn n3(&self, x: &[Rat], y: &[Rat], z: &[Rat]) -> Rat {
        let d = self.dim;
        let mut acc = Rat::zero();
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let p = xi * yj;
                for (k, v) in &self.n3_sparse[i * d + j] {
                    let zk = &z[*k];
                    if !zk.is_zero() {
                        acc += &p * zk * v;
                    }
                }
            }
        }
        acc
    }

    /// Cubic norm `N(x) = N_3(x,x,x)`.
    #[must_use]
    pub fn norm(&self, x: &[Rat]) -> Rat {
        self.n3(x, x, x)
    }

    /// Linear trace `Tr(x)`.
    #[must_use]
    pub fn trace(&self, x: &[Rat]) -> Rat {
        x.iter().zip(&self.tr).map(|(a, b)| a * b).sum()
    }

    /// Trace bilinear form `Tr(x, y)`.
    #[must_use]
    pub fn trace_bilinear(&self, x: &[Rat], y: &[Rat]) -> Rat {
        let mut acc = Rat::zero();
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if !yj.is_zero() {
                    acc += xi * yj * self.gram.get(i, j);
                }
            }
        }
        acc
    }

    /// Partial evaluation of the trilinear form: component `k` is
    /// `N_3(x, y, e_k)`.  One pass over the table, so assembling the whole
    /// covector costs the same as a single [`CubicData::n3`] call.
    #[must_use]
    pub fn n3_partial(&self, x: &[Rat], y: &[Rat]) -> Vec<Rat> {
        let d = self.dim;
        let mut out = vec![Rat::zero(); d];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let p = xi * yj;
                for (k, v) in &self.n3_sparse[i * d + j] {
                    out[*k] += &p * v;
                }
            }
        }
        out
    }

    /// Partial evaluation of the cross-trace form: component `k` is
    /// `Tr(x × e_k, c)`.
    #[must_use]
    pub fn cross_trace_partial(&self, x: &[Rat], c: &[Rat]) -> Vec<Rat> {
        let d = self.dim;
        // w = gram · c, so Tr(v, c) = Σ_j v_j w_j
        let w = self.gram.mul_vec(c);
        let mut out = vec![Rat::zero(); d];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (k, o) in out.iter_mut().enumerate() {
                let mut acc = Rat::zero();
                for (j, t) in self.cross_tab[i * d + k].iter().enumerate() {
                    if !t.is_zero() {
                        acc += t * &w[j];
                    }
                }
                if !acc.is_zero() {
                    *o += xi * acc;
                }
            }
        }
        out
    }

    /// Freudenthal cross product `x × y`.
    #[must_use]
    pub fn cross(&self, x: &[Rat], y: &[Rat]) -> Vec<Rat> {
        let d = self.dim;
        let mut out = vec![Rat::zero(); d];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let p = xi * yj;
                for (k, t) in self.cross_tab[i * d + j].iter().enumerate() {
                    if !t.is_zero() {
                        out[k] += &p * t;
                    }
                }
            }
        }
        out
    }

    /// Quadratic adjoint `x^♯ = ½ (x × x)`.
    #[must_use]
    pub fn sharp(&self, x: &[Rat]) -> Vec<Rat> {
        vscale(&rat(1, 2), &self.cross(x, x))
    }

    /// Spur bilinear form `S(x, y) = 6·N_3(x, y, c)`.
    #[must_use]
    pub fn spur(&self, x: &[Rat], y: &[Rat]) -> Rat {
        rat_i(6) * self.n3(x, y, &self.basepoint.clone())
    }

    /// The Jordan product derived from the cubic norm:
    /// `x ∘ y = ½(x×y + Tr(x)·y + Tr(y)·x − S(x,y)·c)`.
    #[must_use]
    pub fn circ(&self, x: &[Rat], y: &[Rat]) -> Vec<Rat> {
        let mut out = self.cross(x, y);
        let tx = self.trace(x);
        let ty = self.trace(y);
        let s = self.spur(x, y);
        out = vadd(&out, &vscale(&tx, y));
        out = vadd(&out, &vscale(&ty, x));
        out = vsub(&out, &vscale(&s, &self.basepoint));
        vscale(&rat(1, 2), &out)
    }
}

/// Flat symmetric 3-tensor access.
trait At3 {
    fn at(&self, dim: usize, i: usize, j: usize, k: usize) -> Rat;
}
impl At3 for Vec<Rat> {
    fn at(&self, dim: usize, i: usize, j: usize, k: usize) -> Rat {
        self[(i * dim + j) * dim + k].clone()
    }
}

/// A concrete Jordan algebra with explicit structure constants.
pub struct JordanAlgebra {
    /// Which algebra this is.
    pub kind: JordanKind,
    /// Real dimension.
    pub dim: usize,
    /// The algebra unit.
    pub unit: Vec<Rat>,
    /// Structure constants: `circ[(i·dim + j)·dim + k]` is the coefficient
    /// of `e_k` in `e_i ∘ e_j`.
    circ: Vec<Rat>,
    /// Cubic-norm apparatus, for the algebras of degree 3.
    pub cubic: Option<CubicData>,
}

impl JordanAlgebra {
    /// Construct the algebra for the given kind.
    ///
    /// # Panics
    /// Panics on empty spin factors (`m + n = 0`) and on internal
    /// consistency failures (never for the supported kinds).
    #[must_use]
    pub fn new(kind: JordanKind) -> Self {
        match kind {
            JordanKind::RealField => {
                let cubic = CubicData::from_norm(
                    1,
                    &|x: &[Rat]| &x[0] * &x[0] * &x[0],
                    vec![rat_i(1)],
                );
                let circ = vec![rat_i(1)];
                JordanAlgebra { kind, dim: 1, unit: vec![rat_i(1)], circ, cubic: Some(cubic) }
            }
            JordanKind::SpinFactor { m, n } => Self::new_spin_factor(m, n),
            JordanKind::Gamma { m, n } => Self::new_gamma(m, n),
            JordanKind::Hermitian3(a) => Self::new_hermitian3(a),
            JordanKind::Lorentzian(a) => Self::new_lorentzian(a),
        }
    }

    fn new_spin_factor(m: usize, n: usize) -> Self {
        assert!(m + n >= 1, "spin factor needs a nonzero quadratic space");
        let dim = 1 + m + n;
        let eta = move |i: usize| if i <= m { rat_i(1) } else { rat_i(-1) }; // γ-coords 1..=m+n
        let norm = move |x: &[Rat]| {
            let mut q = Rat::zero();
            for i in 1..x.len() {
                q += eta(i) * &x[i] * &x[i];
            }
            &x[0] * q
        };
        let mut c = vec![Rat::zero(); dim];
        if m >= 1 {
            c[0] = rat_i(1); // η(γ0, γ0) = +1
            c[1] = rat_i(1);
        } else {
            c[0] = rat_i(-1); // η(γ0, γ0) = −1, N(c) = 1
            c[1] = rat_i(1);
        }
        let cubic = CubicData::from_norm(dim, &norm, c.clone());
        let circ = circ_table_from_cubic(&cubic, dim);
        JordanAlgebra { kind: JordanKind::SpinFactor { m, n }, dim, unit: c, circ, cubic: Some(cubic) }
    }

    fn new_gamma(m: usize, n: usize) -> Self {
        // JSpin on a vector space of signature (n, m−1): the generic norm
        // λ² − η'(v,v) then has signature (m, n).
        assert!(m >= 1, "Gamma_{{m,n}} needs m ≥ 1 for a unit of norm 1");
        let d = m + n - 1; // vector part
        let dim = 1 + d;
        let etap = |a: usize| if a < n { rat_i(1) } else { rat_i(-1) };
        let mut circ = vec![Rat::zero(); dim * dim * dim];
        circ[0] = rat_i(1); // e0 ∘ e0 = e0
        for a in 0..d {
            // e0 ∘ e_{1+a} = e_{1+a} (both orders), e_{1+a} ∘ e_{1+a} = η' e0
            circ[(1 + a) * dim + (1 + a)] = rat_i(1);
            circ[((1 + a) * dim) * dim + (1 + a)] = rat_i(1);
            circ[((1 + a) * dim + (1 + a)) * dim] = etap(a);
        }
        let unit = basis_vec(dim, 0);
        JordanAlgebra { kind: JordanKind::Gamma { m, n }, dim, unit, circ, cubic: None }
    }

    fn new_hermitian3(label: CompLabel) -> Self {
        let a = CompositionAlgebra::new(label);
        let q = a.dim;
        let dim = 3 + 3 * q;
        let circ = herm_circ_table(&a, false);
        let mut unit = vec![Rat::zero(); dim];
        unit[0] = rat_i(1);
        unit[1] = rat_i(1);
        unit[2] = rat_i(1);
        let alg = a;
        let norm = move |v: &[Rat]| herm3_norm(&alg, v);
        let cubic = CubicData::from_norm(dim, &norm, unit.clone());
        JordanAlgebra { kind: JordanKind::Hermitian3(label), dim, unit, circ, cubic: Some(cubic) }
    }

    fn new_lorentzian(label: CompLabel) -> Self {
        let a = CompositionAlgebra::new(label);
        let q = a.dim;
        let dim = 3 + 3 * q;
        let circ = herm_circ_table(&a, true);
        let mut unit = vec![Rat::zero(); dim];
        unit[0] = rat_i(1);
        unit[1] = rat_i(1);
        unit[2] = rat_i(1);
        JordanAlgebra { kind: JordanKind::Lorentzian(label), dim, unit, circ, cubic: None }
    }

    /// Structure-constant slice: the vector `e_i ∘ e_j`.
    #[must_use]
    pub fn sc_row(&self, i: usize, j: usize) -> &[Rat] {
        let d = self.dim;
        &self.circ[(i * d + j) * d..(i * d + j + 1) * d]
    }

    /// The Jordan product `x ∘ y`.
    ///
    /// # Panics
    /// Panics on dimension mismatch.
    #[must_use]
    pub fn circ(&self, x: &[Rat], y: &[Rat]) -> Vec<Rat> {
        assert_eq!(x.len(), self.dim);
        assert_eq!(y.len(), self.dim);
        let mut out = vec![Rat::zero(); self.dim];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let p = xi * yj;
                for (k, t) in self.sc_row(i, j).iter().enumerate() {
                    if !t.is_zero() {
                        out[k] += &p * t;
                    }
                }
            }
        }
        out
    }

    /// Left-multiplication operator `L_x` as a matrix (`L_x y = x ∘ y`).
    #[must_use]
    pub fn l_matrix(&self, x: &[Rat]) -> Matrix {
        let d = self.dim;
        let mut m = Matrix::zeros(d, d);
        for j in 0..d {
            let col = self.circ(x, &basis_vec(d, j));
            for (k, v) in col.into_iter().enumerate() {
                if !v.is_zero() {
                    m.set(k, j, v);
                }
            }
        }
        m
    }

    /// Quadratic map `U_x y = 2 x∘(x∘y) − (x∘x)∘y`.
    #[must_use]
    pub fn u(&self, x: &[Rat], y: &[Rat]) -> Vec<Rat> {
        let xy = self.circ(x, y);
        let xxy = self.circ(x, &xy);
        let xx = self.circ(x, x);
        vsub(&vscale(&rat_i(2), &xxy), &self.circ(&xx, y))
    }

    /// Triple `V_{x,y} z = (U_{x+z} − U_x − U_z) y`.
    #[must_use]
    pub fn v(&self, x: &[Rat], y: &[Rat], z: &[Rat]) -> Vec<Rat> {
        let xz = vadd(x, z);
        vsub(&vsub(&self.u(&xz, y), &self.u(x, y)), &self.u(z, y))
    }

    // -- checks ------------------------------------------------------------

    /// `unit ∘ x = x` for every basis vector.
    #[must_use]
    pub fn check_unit(&self) -> bool {
        (0..self.dim).all(|i| self.circ(&self.unit, &basis_vec(self.dim, i)) == basis_vec(self.dim, i))
    }

    /// Commutativity at the structure-constant level.
    #[must_use]
    pub fn check_commutative(&self) -> bool {
        let d = self.dim;
        (0..d).all(|i| (0..d).all(|j| self.sc_row(i, j) == self.sc_row(j, i)))
    }

    /// The Jordan identity `(x∘x)∘(x∘y) = x∘((x∘x)∘y)` on a sample pair.
    #[must_use]
    pub fn check_jordan_identity(&self, x: &[Rat], y: &[Rat]) -> bool {
        let xx = self.circ(x, x);
        let xy = self.circ(x, y);
        self.circ(&xx, &xy) == self.circ(x, &self.circ(&xx, y))
    }

    /// The adjoint identity `(x^♯)^♯ = N(x)·x` (degree-3 algebras only).
    #[must_use]
    pub fn check_adjoint_identity(&self, x: &[Rat]) -> bool {
        let Some(cubic) = &self.cubic else { return true };
        let s = cubic.sharp(x);
        cubic.sharp(&s) == vscale(&cubic.norm(x), x)
    }

    /// Trace-form associativity `Tr(x∘y, z) = Tr(x, y∘z)` (degree-3 only).
    #[must_use]
    pub fn check_trace_associativity(&self, x: &[Rat], y: &[Rat], z: &[Rat]) -> bool {
        let Some(cubic) = &self.cubic else { return true };
        cubic.trace_bilinear(&self.circ(x, y), z) == cubic.trace_bilinear(x, &self.circ(y, z))
    }

    /// The quadratic-Jordan axioms on samples: `U_c = id`,
    /// `U_x V_{y,x} = V_{x,y} U_x`, and `U_{U_x y} = U_x U_y U_x`.
    #[must_use]
    pub fn check_qja(&self, x: &[Rat], y: &[Rat], w: &[Rat]) -> bool {
        if self.u(&self.unit, w) != w {
            return false;
        }
        // U_x (V_{y,x} w) = V_{x,y} (U_x w)
        let vyxw = self.v(y, x, w); // V_{y,x} w = (U_{y+w} − U_y − U_w) x
        let lhs = self.u(x, &vyxw);
        let uxw = self.u(x, w);
        let rhs = self.v(x, y, &uxw); // V_{x,y} (U_x w)
        if lhs != rhs {
            return false;
        }
        // fundamental formula
        let uxy = self.u(x, y);
        let lhs2 = self.u(&uxy, w);
        let rhs3 = self.u(x, &self.u(y, &self.u(x, w)));
        lhs2 == rhs3
    }

    /// For Hermitian algebras: rebuild the product from the cubic norm and
    /// compare with the matrix-derived structure constants.
    #[must_use]
    pub fn check_norm_circ_match(&self) -> bool {
        let Some(cubic) = &self.cubic else { return true };
        let d = self.dim;
        for i in 0..d {
            for j in i..d {
                if cubic.circ(&basis_vec(d, i), &basis_vec(d, j)) != self.sc_row(i, j) {
                    return false;
                }
            }
        }
        true
    }
}

/// `V_{x,y} z` needs care: the documented definition is through `U`; the
/// helper on [`JordanAlgebra::v`] computes `V_{x,y} z` with arguments
/// `(x, y, z)` in that order.
fn circ_table_from_cubic(cubic: &CubicData, dim: usize) -> Vec<Rat> {
    let mut t = vec![Rat::zero(); dim * dim * dim];
    for i in 0..dim {
        for j in i..dim {
            let v = cubic.circ(&basis_vec(dim, i), &basis_vec(dim, j));
            for (k, val) in v.iter().enumerate() {
                t[(i * dim + j) * dim + k] = val.clone();
                t[(j * dim + i) * dim + k] = val.clone();
            }
        }
    }
    t
}

// ---------------------------------------------------------------------------
// Hermitian 3×3 matrix machinery
// ---------------------------------------------------------------------------

type AMat = [[Vec<Rat>; 3]; 3];

/// Coordinates: `[α1, α2, α3, x1(q), x2(q), x3(q)]`.
fn herm_to_mat(a: &CompositionAlgebra, v: &[Rat], lorentzian: bool) -> AMat {
    let q = a.dim;
    let sc = |al: &Rat| {
        let mut e0 = vec![Rat::zero(); q];
        e0[0] = al.clone();
        e0
    };
    let x1 = v[3..3 + q].to_vec();
    let x2 = v[3 + q..3 + 2 * q].to_vec();
    let x3 = v[3 + 2 * q..].to_vec();
    if lorentzian {
        // X = [[a1, −x̄3, −x2],[x3, a2, x1],[x̄2, x̄1, a3]], η = diag(−1,1,1)
        let neg = |w: &[Rat]| w.iter().map(|t| -t.clone()).collect::<Vec<_>>();
        [
            [sc(&v[0]), neg(&a.conj(&x3)), neg(&x2)],
            [x3.clone(), sc(&v[1]), x1.clone()],
            [a.conj(&x2), a.conj(&x1), sc(&v[2])],
        ]
    } else {
        // X = [[a1, x3, x̄2],[x̄3, a2, x1],[x2, x̄1, a3]]
        [
            [sc(&v[0]), x3.clone(), a.conj(&x2)],
            [a.conj(&x3), sc(&v[1]), x1.clone()],
            [x2.clone(), a.conj(&x1), sc(&v[2])],
        ]
    }
}

fn herm_from_mat(a: &CompositionAlgebra, m: &AMat, lorentzian: bool) -> Vec<Rat> {
    let q = a.dim;
    let mut v = vec![Rat::zero(); 3 + 3 * q];
    v[0] = m[0][0][0].clone();
    v[1] = m[1][1][0].clone();
    v[2] = m[2][2][0].clone();
    if lorentzian {
        v[3..3 + q].clone_from_slice(&m[1][2]);
        let x2 = a.conj(&m[2][0]);
        v[3 + q..3 + 2 * q].clone_from_slice(&x2);
        v[3 + 2 * q..].clone_from_slice(&m[1][0]);
    } else {
        v[3..3 + q].clone_from_slice(&m[1][2]);
        v[3 + q..3 + 2 * q].clone_from_slice(&m[2][0]);
        v[3 + 2 * q..].clone_from_slice(&m[0][1]);
    }
    v
}

fn amat_mul(a: &CompositionAlgebra, x: &AMat, y: &AMat) -> AMat {
    let q = a.dim;
    let zero = || vec![Rat::zero(); q];
    let mut out: AMat = [
        [zero(), zero(), zero()],
        [zero(), zero(), zero()],
        [zero(), zero(), zero()],
    ];
    for i in 0..3 {
        for j in 0..3 {
            let mut s = zero();
            for k in 0..3 {
                s = vadd(&s, &a.mul(&x[i][k], &y[k][j]));
            }
            out[i][j] = s;
        }
    }
    out
}

/// Structure constants of `X ∘ Y = ½(XY + YX)` on the (η-)Hermitian space.
fn herm_circ_table(a: &CompositionAlgebra, lorentzian: bool) -> Vec<Rat> {
    let q = a.dim;
    let dim = 3 + 3 * q;
    let mut t = vec![Rat::zero(); dim * dim * dim];
    let half = rat(1, 2);
    for i in 0..dim {
        let mi = herm_to_mat(a, &basis_vec(dim, i), lorentzian);
        for j in i..dim {
            let mj = herm_to_mat(a, &basis_vec(dim, j), lorentzian);
            let p = amat_mul(a, &mi, &mj);
            let r = amat_mul(a, &mj, &mi);
            let mut s: AMat = p;
            for (row_s, row_r) in s.iter_mut().zip(r.iter()) {
                for (cell_s, cell_r) in row_s.iter_mut().zip(row_r.iter()) {
                    *cell_s = vscale(&half, &vadd(cell_s, cell_r));
                }
            }
            let v = herm_from_mat(a, &s, lorentzian);
            // closure sanity: the symmetrized product must reconstruct
            debug_assert_eq!(herm_to_mat(a, &v, lorentzian), s, "product left the Hermitian space");
            for (k, val) in v.iter().enumerate() {
                t[(i * dim + j) * dim + k] = val.clone();
                t[(j * dim + i) * dim + k] = val.clone();
            }
        }
    }
    t
}

/// The cubic norm of `J_3^A`:
/// `N(X) = α1 α2 α3 − Σᵢ αᵢ n(xᵢ) + 2 Re((x1·x2)·x3)`.
fn herm3_norm(a: &CompositionAlgebra, v: &[Rat]) -> Rat {
    let q = a.dim;
    let x1 = &v[3..3 + q];
    let x2 = &v[3 + q..3 + 2 * q];
    let x3 = &v[3 + 2 * q..];
    let mut out = &v[0] * &v[1] * &v[2];
    out -= &v[0] * a.norm(x1);
    out -= &v[1] * a.norm(x2);
    out -= &v[2] * a.norm(x3);
    out + rat_i(2) * a.real_part(&a.mul(&a.mul(x1, x2), x3))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn rand_vec(rng: &mut ChaCha8Rng, dim: usize) -> Vec<Rat> {
        (0..dim).map(|_| rat(rng.gen_range(-3..=3), *[1, 1, 2].get(rng.gen_range(0..3)).unwrap())).collect()
    }

    fn smoke(kind: JordanKind, trials: usize) {
        let j = JordanAlgebra::new(kind);
        assert!(j.check_unit(), "{}: unit", kind.name());
        assert!(j.check_commutative(), "{}: commutative", kind.name());
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..trials {
            let x = rand_vec(&mut rng, j.dim);
            let y = rand_vec(&mut rng, j.dim);
            let z = rand_vec(&mut rng, j.dim);
            assert!(j.check_jordan_identity(&x, &y), "{}: Jordan identity", kind.name());
            assert!(j.check_adjoint_identity(&x), "{}: adjoint identity", kind.name());
            assert!(j.check_trace_associativity(&x, &y, &z), "{}: trace assoc", kind.name());
            assert!(j.check_qja(&x, &y, &z), "{}: quadratic axioms", kind.name());
        }
    }

    #[test]
    fn real_field() {
        smoke(JordanKind::RealField, 5);
    }

    #[test]
    fn spin_factors() {
        for (m, n) in [(1, 1), (1, 2), (3, 1), (2, 2), (0, 3)] {
            smoke(JordanKind::SpinFactor { m, n }, 10);
        }
    }

    #[test]
    fn gamma_spin() {
        for (m, n) in [(1, 3), (2, 2), (3, 0)] {
            smoke(JordanKind::Gamma { m, n }, 10);
        }
    }

    #[test]
    fn hermitian_small() {
        for l in [CompLabel::R, CompLabel::C, CompLabel::Cs] {
            let j = JordanAlgebra::new(JordanKind::Hermitian3(l));
            assert!(j.check_norm_circ_match(), "J3^{}: norm vs matrix product", l.name());
            smoke(JordanKind::Hermitian3(l), 10);
        }
    }

    #[test]
    fn hermitian_octonion_consistency() {
        for l in [CompLabel::O, CompLabel::Os] {
            let j = JordanAlgebra::new(JordanKind::Hermitian3(l));
            assert_eq!(j.dim, 27);
            assert!(j.check_norm_circ_match(), "J3^{}: norm vs matrix product", l.name());
            let mut rng = ChaCha8Rng::seed_from_u64(3);
            for _ in 0..3 {
                let x = rand_vec(&mut rng, 27);
                let y = rand_vec(&mut rng, 27);
                assert!(j.check_jordan_identity(&x, &y));
                assert!(j.check_adjoint_identity(&x));
            }
        }
    }

    #[test]
    fn lorentzian_units() {
        for l in [CompLabel::R, CompLabel::C, CompLabel::Hs] {
            let j = JordanAlgebra::new(JordanKind::Lorentzian(l));
            assert!(j.check_unit());
            assert!(j.check_commutative());
            let mut rng = ChaCha8Rng::seed_from_u64(5);
            for _ in 0..10 {
                let x = rand_vec(&mut rng, j.dim);
                let y = rand_vec(&mut rng, j.dim);
                assert!(j.check_jordan_identity(&x, &y), "J_{{1,2}}^{}", l.name());
            }
        }
    }
}
