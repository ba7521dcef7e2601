//! Frozen registry: the twelve non-compact exceptional real forms, their
//! Satake data, parabolic pins, golden tables, and Lie-algebra labels.
//!
//! The registry separates *data* from *derivation*: everything here is a
//! frozen constant (Satake diagrams, per-form dimensions, the 44-row
//! maximal-parabolic table, the rank-2/3 Jordan symmetry table, and the
//! 14 maximal-parabolic-relatedness classes with their Jordan-algebraic
//! roles).  The computational modules ([`crate::real_form`],
//! [`crate::parabolic`], [`crate::relations`], [`crate::symmetry_dims`])
//! re-derive all of it from first principles; golden tests compare the two.
//!
//! # Node numbering
//!
//! All node indices are 1-based in the *chain-first* numbering used
//! throughout this crate (see [`crate::root_system`]): the long chain of
//! the diagram is numbered `1..k` and the branch node comes last.  For
//! `E6` this means chain `1–2–3–4–5` with branch `6` attached to `3`; for
//! `E7`, chain `1..6` with `7` on `3`; for `E8`, chain `1..7` with `8` on
//! `3`.
//!
//! # Display conventions
//!
//! Compact abelian torus summands inside a Levi are always printed
//! `u(1)` (never the isomorphic `so(2)`), and the split torus direction
//! of a maximal parabolic is kept separate from the Levi label.  The
//! `A3 ≅ D3` coincidence `su*(4) ≅ so(5,1)` is rendered `so(5,1)` in the
//! derived Levi tables.  Long/short subscripts in `F4`/`G2` Levi factors
//! are rendered `_L`/`_S`.

use crate::composition_algebra::CompLabel;
use crate::root_system::{DynkinType, SimpleType};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

// ---------------------------------------------------------------------------
// Form labels
// ---------------------------------------------------------------------------

/// One of the twelve non-compact exceptional real forms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[allow(non_camel_case_types)]
pub enum FormLabel {
    /// split `E6`
    E6_6,
    /// quasi-split `E6` (two arrows)
    E6_2,
    /// `E6(−14)`
    E6_14,
    /// `E6(−26)`
    E6_26,
    /// split `E7`
    E7_7,
    /// `E7(−5)`
    E7_5,
    /// `E7(−25)`
    E7_25,
    /// split `E8`
    E8_8,
    /// `E8(−24)`
    E8_24,
    /// split `F4`
    F4_4,
    /// `F4(−20)`
    F4_20,
    /// split `G2`
    G2_2,
}

impl FormLabel {
    /// All twelve forms in canonical order.
    pub const ALL: [FormLabel; 12] = [
        FormLabel::E6_6,
        FormLabel::E6_2,
        FormLabel::E6_14,
        FormLabel::E6_26,
        FormLabel::E7_7,
        FormLabel::E7_5,
        FormLabel::E7_25,
        FormLabel::E8_8,
        FormLabel::E8_24,
        FormLabel::F4_4,
        FormLabel::F4_20,
        FormLabel::G2_2,
    ];

    /// Standard signature-style name, e.g. `"E6(-14)"`.
    #[must_use]
    pub fn name(self) -> &'static str {
        match self {
            FormLabel::E6_6 => "E6(6)",
            FormLabel::E6_2 => "E6(2)",
            FormLabel::E6_14 => "E6(-14)",
            FormLabel::E6_26 => "E6(-26)",
            FormLabel::E7_7 => "E7(7)",
            FormLabel::E7_5 => "E7(-5)",
            FormLabel::E7_25 => "E7(-25)",
            FormLabel::E8_8 => "E8(8)",
            FormLabel::E8_24 => "E8(-24)",
            FormLabel::F4_4 => "F4(4)",
            FormLabel::F4_20 => "F4(-20)",
            FormLabel::G2_2 => "G2(2)",
        }
    }

    /// Cartan's roman-numeral alias, e.g. `"EIII"` for `E6(-14)`.
    #[must_use]
    pub fn alt_name(self) -> &'static str {
        match self {
            FormLabel::E6_6 => "EI",
            FormLabel::E6_2 => "EII",
            FormLabel::E6_14 => "EIII",
            FormLabel::E6_26 => "EIV",
            FormLabel::E7_7 => "EV",
            FormLabel::E7_5 => "EVI",
            FormLabel::E7_25 => "EVII",
            FormLabel::E8_8 => "EVIII",
            FormLabel::E8_24 => "EIX",
            FormLabel::F4_4 => "FI",
            FormLabel::F4_20 => "FII",
            FormLabel::G2_2 => "G",
        }
    }

    /// Complexification.
    #[must_use]
    pub fn complex_type(self) -> SimpleType {
        match self {
            FormLabel::E6_6 | FormLabel::E6_2 | FormLabel::E6_14 | FormLabel::E6_26 => {
                SimpleType::E6
            }
            FormLabel::E7_7 | FormLabel::E7_5 | FormLabel::E7_25 => SimpleType::E7,
            FormLabel::E8_8 | FormLabel::E8_24 => SimpleType::E8,
            FormLabel::F4_4 | FormLabel::F4_20 => SimpleType::F4,
            FormLabel::G2_2 => SimpleType::G2,
        }
    }

    /// Complexification as a [`DynkinType`].
    #[must_use]
    pub fn dynkin(self) -> DynkinType {
        match self.complex_type() {
            SimpleType::E6 => DynkinType::E6,
            SimpleType::E7 => DynkinType::E7,
            SimpleType::E8 => DynkinType::E8,
            SimpleType::F4 => DynkinType::F4,
            SimpleType::G2 => DynkinType::G2,
        }
    }

    /// Real dimension (= dimension of the complexification).
    #[must_use]
    pub fn dim(self) -> usize {
        self.dynkin().dim()
    }

    /// Parse `"E6(6)"`, `"E6(-14)"`-style or roman alias spellings.
    #[must_use]
    pub fn parse(s: &str) -> Option<FormLabel> {
        let t: String = s
            .trim()
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| if c == '−' { '-' } else { c })
            .collect();
        FormLabel::ALL
            .iter()
            .copied()
            .find(|f| t.eq_ignore_ascii_case(f.name()) || t.eq_ignore_ascii_case(f.alt_name()))
    }
}

impl fmt::Display for FormLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

// ---------------------------------------------------------------------------
// Lie-algebra labels
// ---------------------------------------------------------------------------

/// A real simple (or abelian) Lie-algebra label, as used in Levi
/// decompositions and in the symmetry tables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LieLabel {
    /// `sl(n, R)`
    SlR(usize),
    /// `sl(n, C)` viewed as a real Lie algebra
    SlC(usize),
    /// `su(p, q)` (with `q = 0` the compact `su(p)`)
    Su(usize, usize),
    /// `su*(n)` with `n` even
    SuStar(usize),
    /// `so(p, q)` (with `q = 0` the compact `so(p)`)
    So(usize, usize),
    /// `so*(n)` with `n` even
    SoStar(usize),
    /// `sp(n, R)`
    SpR(usize),
    /// compact `usp(n) = sp(n)`
    Usp(usize),
    /// `u(1) ≅ so(2)`
    U1,
    /// split torus `so(1,1)`
    So11,
    /// compact `f4 = F4(-52)`
    F4c,
    /// a non-compact exceptional real form
    Form(FormLabel),
}

fn norm_push(t: DynkinType, out: &mut Vec<DynkinType>, abelian: &mut usize) {
    match t {
        DynkinType::A(0) | DynkinType::B(0) | DynkinType::C(0) | DynkinType::D(0) => {}
        DynkinType::B(1) | DynkinType::C(1) => out.push(DynkinType::A(1)),
        DynkinType::D(1) => *abelian += 1,
        DynkinType::D(2) => {
            out.push(DynkinType::A(1));
            out.push(DynkinType::A(1));
        }
        DynkinType::D(3) => out.push(DynkinType::A(3)),
        DynkinType::C(2) => out.push(DynkinType::B(2)),
        t => out.push(t),
    }
}

impl LieLabel {
    /// Real dimension.
    #[must_use]
    pub fn dim(self) -> usize {
        match self {
            LieLabel::SlR(n) | LieLabel::SuStar(n) => n * n - 1,
            LieLabel::SlC(n) => 2 * (n * n - 1),
            LieLabel::Su(p, q) => (p + q) * (p + q) - 1,
            LieLabel::So(p, q) => (p + q) * (p + q - 1) / 2,
            LieLabel::SoStar(n) => n * (n - 1) / 2,
            LieLabel::SpR(n) | LieLabel::Usp(n) => n * (2 * n + 1),
            LieLabel::U1 | LieLabel::So11 => 1,
            LieLabel::F4c => 52,
            LieLabel::Form(f) => f.dim(),
        }
    }

    /// Complexified simple factors plus abelian rank, with low-rank
    /// coincidences normalized: `B1, C1 → A1`, `C2 → B2`, `D2 → A1+A1`,
    /// `D3 → A3`, and `so(2) ≅ so(1,1) ≅ u(1) → abelian`.
    #[must_use]
    pub fn complex_factors(self) -> (Vec<DynkinType>, usize) {
        let mut out = Vec::new();
        let mut ab = 0usize;
        match self {
            LieLabel::SlR(n) | LieLabel::SuStar(n) => {
                norm_push(DynkinType::A(n - 1), &mut out, &mut ab);
            }
            LieLabel::SlC(n) => {
                norm_push(DynkinType::A(n - 1), &mut out, &mut ab);
                norm_push(DynkinType::A(n - 1), &mut out, &mut ab);
            }
            LieLabel::Su(p, q) => norm_push(DynkinType::A(p + q - 1), &mut out, &mut ab),
            LieLabel::So(p, q) => {
                let s = p + q;
                if s == 2 {
                    ab += 1;
                } else if s > 2 {
                    if s % 2 == 1 {
                        norm_push(DynkinType::B((s - 1) / 2), &mut out, &mut ab);
                    } else {
                        norm_push(DynkinType::D(s / 2), &mut out, &mut ab);
                    }
                }
            }
            LieLabel::SoStar(n) => norm_push(DynkinType::D(n / 2), &mut out, &mut ab),
            LieLabel::SpR(n) | LieLabel::Usp(n) => norm_push(DynkinType::C(n), &mut out, &mut ab),
            LieLabel::U1 | LieLabel::So11 => ab += 1,
            LieLabel::F4c => out.push(DynkinType::F4),
            LieLabel::Form(f) => out.push(f.dynkin()),
        }
        (out, ab)
    }

    /// Display, e.g. `"sl(6,R)"`, `"su*(4)"`, `"so(9,1)"`.
    #[must_use]
    pub fn display(self) -> String {
        match self {
            LieLabel::SlR(n) => format!("sl({n},R)"),
            LieLabel::SlC(n) => format!("sl({n},C)"),
            LieLabel::Su(p, 0) => format!("su({p})"),
            LieLabel::Su(p, q) => format!("su({p},{q})"),
            LieLabel::SuStar(n) => format!("su*({n})"),
            LieLabel::So(p, 0) => format!("so({p})"),
            LieLabel::So(p, q) => format!("so({p},{q})"),
            LieLabel::SoStar(n) => format!("so*({n})"),
            LieLabel::SpR(n) => format!("sp({n},R)"),
            LieLabel::Usp(n) => format!("usp({n})"),
            LieLabel::U1 => String::from("u(1)"),
            LieLabel::So11 => String::from("so(1,1)"),
            LieLabel::F4c => String::from("f4"),
            LieLabel::Form(f) => String::from(f.name()),
        }
    }

    /// Parse a label in the [`LieLabel::display`] spelling (plus form
    /// aliases); whitespace-insensitive, case-insensitive in the letters.
    #[must_use]
    pub fn parse(s: &str) -> Option<LieLabel> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if let Some(f) = FormLabel::parse(&t) {
            return Some(LieLabel::Form(f));
        }
        if t.eq_ignore_ascii_case("u(1)") {
            return Some(LieLabel::U1);
        }
        if t.eq_ignore_ascii_case("so(1,1)") {
            return Some(LieLabel::So11);
        }
        if t.eq_ignore_ascii_case("f4") || t.eq_ignore_ascii_case("F4(-52)") {
            return Some(LieLabel::F4c);
        }
        let (head, body) = t.split_once('(')?;
        let body = body.strip_suffix(')')?;
        let parts: Vec<&str> = body.split(',').collect();
        let p1: Option<usize> = parts.first().and_then(|x| x.parse().ok());
        match (head.to_ascii_lowercase().as_str(), parts.as_slice()) {
            ("sl", [n, field]) => {
                let n = n.parse().ok()?;
                match field.to_ascii_uppercase().as_str() {
                    "R" => Some(LieLabel::SlR(n)),
                    "C" => Some(LieLabel::SlC(n)),
                    _ => None,
                }
            }
            ("su", [_]) => Some(LieLabel::Su(p1?, 0)),
            ("su", [p, q]) => Some(LieLabel::Su(p.parse().ok()?, q.parse().ok()?)),
            ("su*", [_]) => Some(LieLabel::SuStar(p1?)),
            ("so", [_]) => Some(LieLabel::So(p1?, 0)),
            ("so", [p, q]) => Some(LieLabel::So(p.parse().ok()?, q.parse().ok()?)),
            ("so*", [_]) => Some(LieLabel::SoStar(p1?)),
            ("sp", [n, field]) if field.eq_ignore_ascii_case("R") => {
                Some(LieLabel::SpR(n.parse().ok()?))
            }
            ("sp" | "usp", [_]) => Some(LieLabel::Usp(p1?)),
            _ => None,
        }
    }
}

impl fmt::Display for LieLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display())
    }
}

// ---------------------------------------------------------------------------
// Satake data
// ---------------------------------------------------------------------------

/// Frozen Satake and structure data for one real form.
pub struct SatakeEntry {
    /// which form
    pub form: FormLabel,
    /// black (compact) nodes, 1-based
    pub black: &'static [usize],
    /// arrow pairs of white nodes (diagram involution)
    pub arrows: &'static [(usize, usize)],
    /// dimension of a maximal compact subalgebra `K`
    pub dim_k: usize,
    /// label of `K`
    pub k_label: &'static str,
    /// label of the minimal-parabolic `M0` (compact part)
    pub m0_label: &'static str,
    /// dimension of `M0`
    pub dim_m0: usize,
    /// `dim N± ` of the minimal parabolic (= Σ positive restricted mults)
    pub dim_npm: usize,
    /// real (split) rank
    pub split_rank: usize,
    /// restricted root system type (possibly non-reduced `BCr`)
    pub restricted_name: &'static str,
    /// number of distinct positive restricted roots
    pub restricted_positive_count: usize,
    /// maximal-parabolic pins: entry `i-1` is the white orbit deleted by
    /// the `i`-th maximal parabolic of the classification
    pub pins: &'static [&'static [usize]],
}

/// Satake/structure data for all twelve forms (chain-first numbering).
pub static SATAKE: [SatakeEntry; 12] = [
    SatakeEntry {
        form: FormLabel::E6_6,
        black: &[],
        arrows: &[],
        dim_k: 36,
        k_label: "sp(4)",
        m0_label: "0",
        dim_m0: 0,
        dim_npm: 36,
        split_rank: 6,
        restricted_name: "E6",
        restricted_positive_count: 36,
        pins: &[&[1], &[6], &[2], &[3], &[5], &[4]],
    },
    SatakeEntry {
        form: FormLabel::E6_2,
        black: &[],
        arrows: &[(1, 5), (2, 4)],
        dim_k: 38,
        k_label: "su(6)+su(2)",
        m0_label: "u(1)+u(1)",
        dim_m0: 2,
        dim_npm: 36,
        split_rank: 4,
        restricted_name: "F4",
        restricted_positive_count: 24,
        pins: &[&[1, 5], &[2, 4], &[3], &[6]],
    },
    SatakeEntry {
        form: FormLabel::E6_14,
        black: &[2, 3, 4],
        arrows: &[(1, 5)],
        dim_k: 46,
        k_label: "so(10)+so(2)",
        m0_label: "so(6)+so(2)",
        dim_m0: 16,
        dim_npm: 30,
        split_rank: 2,
        restricted_name: "BC2",
        restricted_positive_count: 6,
        pins: &[&[1, 5], &[6]],
    },
    SatakeEntry {
        form: FormLabel::E6_26,
        black: &[2, 3, 4, 6],
        arrows: &[],
        dim_k: 52,
        k_label: "f4",
        m0_label: "so(8)",
        dim_m0: 28,
        dim_npm: 24,
        split_rank: 2,
        restricted_name: "A2",
        restricted_positive_count: 3,
        pins: &[&[1], &[5]],
    },
    SatakeEntry {
        form: FormLabel::E7_7,
        black: &[],
        arrows: &[],
        dim_k: 63,
        k_label: "su(8)",
        m0_label: "0",
        dim_m0: 0,
        dim_npm: 63,
        split_rank: 7,
        restricted_name: "E7",
        restricted_positive_count: 63,
        pins: &[&[1], &[2], &[3], &[4], &[5], &[6], &[7]],
    },
    SatakeEntry {
        form: FormLabel::E7_5,
        black: &[4, 6, 7],
        arrows: &[],
        dim_k: 69,
        k_label: "so(12)+su(2)",
        m0_label: "su(2)+su(2)+su(2)",
        dim_m0: 9,
        dim_npm: 60,
        split_rank: 4,
        restricted_name: "F4",
        restricted_positive_count: 24,
        pins: &[&[1], &[5], &[2], &[3]],
    },
    SatakeEntry {
        form: FormLabel::E7_25,
        black: &[2, 3, 4, 7],
        arrows: &[],
        dim_k: 79,
        k_label: "e6+so(2)",
        m0_label: "so(8)",
        dim_m0: 28,
        dim_npm: 51,
        split_rank: 3,
        restricted_name: "C3",
        restricted_positive_count: 9,
        pins: &[&[1], &[5], &[6]],
    },
    SatakeEntry {
        form: FormLabel::E8_8,
        black: &[],
        arrows: &[],
        dim_k: 120,
        k_label: "so(16)",
        m0_label: "0",
        dim_m0: 0,
        dim_npm: 120,
        split_rank: 8,
        restricted_name: "E8",
        restricted_positive_count: 120,
        pins: &[&[1], &[2], &[3], &[4], &[5], &[6], &[7], &[8]],
    },
    SatakeEntry {
        form: FormLabel::E8_24,
        black: &[2, 3, 4, 8],
        arrows: &[],
        dim_k: 136,
        k_label: "e7+su(2)",
        m0_label: "so(8)",
        dim_m0: 28,
        dim_npm: 108,
        split_rank: 4,
        restricted_name: "F4",
        restricted_positive_count: 24,
        pins: &[&[1], &[5], &[6], &[7]],
    },
    SatakeEntry {
        form: FormLabel::F4_4,
        black: &[],
        arrows: &[],
        dim_k: 24,
        k_label: "sp(3)+su(2)",
        m0_label: "0",
        dim_m0: 0,
        dim_npm: 24,
        split_rank: 4,
        restricted_name: "F4",
        restricted_positive_count: 24,
        pins: &[&[2], &[3], &[1], &[4]],
    },
    SatakeEntry {
        form: FormLabel::F4_20,
        black: &[1, 2, 3],
        arrows: &[],
        dim_k: 36,
        k_label: "so(9)",
        m0_label: "so(7)",
        dim_m0: 21,
        dim_npm: 15,
        split_rank: 1,
        restricted_name: "BC1",
        restricted_positive_count: 2,
        pins: &[&[4]],
    },
    SatakeEntry {
        form: FormLabel::G2_2,
        black: &[],
        arrows: &[],
        dim_k: 6,
        k_label: "su(2)+su(2)",
        m0_label: "0",
        dim_m0: 0,
        dim_npm: 6,
        split_rank: 2,
        restricted_name: "G2",
        restricted_positive_count: 6,
        pins: &[&[2], &[1]],
    },
];

/// Look up the Satake entry for a form.
#[must_use]
pub fn satake(form: FormLabel) -> &'static SatakeEntry {
    SATAKE.iter().find(|e| e.form == form).expect("registered form")
}

// ---------------------------------------------------------------------------
// Golden maximal-parabolic table (44 rows)
// ---------------------------------------------------------------------------

/// One golden row: the `i`-th maximal parabolic of a form.
pub struct GoldenParabolic {
    /// which form
    pub form: FormLabel,
    /// 1-based index of the maximal parabolic in the classification
    pub index: usize,
    /// canonical Levi display (factors sorted by dimension, then name;
    /// abelian summands appended as `+u(1)`)
    pub levi: &'static str,
    /// `dim N±` of the parabolic
    pub dim_n: usize,
    /// maximal grade (depth `d` ⇒ a `(2d+1)`-grading)
    pub depth: i64,
    /// positive-grade dimension histogram `(k, dim g^k)`
    pub hist: &'static [(i64, usize)],
    /// `(long, short)` positive-root counts in `N+` for `F4(4)`/`G2(2)`
    pub long_short: Option<(usize, usize)>,
}

/// The 44 maximal parabolics of the twelve forms.
pub static GOLDEN_PARABOLICS: [GoldenParabolic; 41] = [
    GoldenParabolic { form: FormLabel::E6_6, index: 1, levi: "so(5,5)", dim_n: 16, depth: 1, hist: &[(1, 16)], long_short: None },
    GoldenParabolic { form: FormLabel::E6_6, index: 2, levi: "sl(6,R)", dim_n: 21, depth: 2, hist: &[(1, 20), (2, 1)], long_short: None },
    GoldenParabolic { form: FormLabel::E6_6, index: 3, levi: "sl(5,R)+sl(2,R)", dim_n: 25, depth: 2, hist: &[(1, 20), (2, 5)], long_short: None },
    GoldenParabolic { form: FormLabel::E6_6, index: 4, levi: "sl(3,R)+sl(3,R)+sl(2,R)", dim_n: 29, depth: 3, hist: &[(1, 18), (2, 9), (3, 2)], long_short: None },
    GoldenParabolic { form: FormLabel::E6_2, index: 1, levi: "so(5,3)+u(1)", dim_n: 24, depth: 2, hist: &[(1, 16), (2, 8)], long_short: None },
    GoldenParabolic { form: FormLabel::E6_2, index: 2, levi: "sl(3,R)+sl(2,C)+u(1)", dim_n: 31, depth: 4, hist: &[(1, 12), (2, 12), (3, 4), (4, 3)], long_short: None },
    GoldenParabolic { form: FormLabel::E6_2, index: 3, levi: "sl(3,C)+sl(2,R)", dim_n: 29, depth: 3, hist: &[(1, 18), (2, 9), (3, 2)], long_short: None },
    GoldenParabolic { form: FormLabel::E6_2, index: 4, levi: "su(3,3)", dim_n: 21, depth: 2, hist: &[(1, 20), (2, 1)], long_short: None },
    GoldenParabolic { form: FormLabel::E6_14, index: 1, levi: "so(7,1)+u(1)", dim_n: 24, depth: 2, hist: &[(1, 16), (2, 8)], long_short: None },
    GoldenParabolic { form: FormLabel::E6_14, index: 2, levi: "su(5,1)", dim_n: 21, depth: 2, hist: &[(1, 20), (2, 1)], long_short: None },
    GoldenParabolic { form: FormLabel::E6_26, index: 1, levi: "so(9,1)", dim_n: 16, depth: 1, hist: &[(1, 16)], long_short: None },
    GoldenParabolic { form: FormLabel::E7_7, index: 1, levi: "so(6,6)", dim_n: 33, depth: 2, hist: &[(1, 32), (2, 1)], long_short: None },
    GoldenParabolic { form: FormLabel::E7_7, index: 2, levi: "sl(6,R)+sl(2,R)", dim_n: 47, depth: 3, hist: &[(1, 30), (2, 15), (3, 2)], long_short: None },
    GoldenParabolic { form: FormLabel::E7_7, index: 3, levi: "sl(4,R)+sl(3,R)+sl(2,R)", dim_n: 53, depth: 4, hist: &[(1, 24), (2, 18), (3, 8), (4, 3)], long_short: None },
    GoldenParabolic { form: FormLabel::E7_7, index: 4, levi: "sl(5,R)+sl(3,R)", dim_n: 50, depth: 3, hist: &[(1, 30), (2, 15), (3, 5)], long_short: None },
    GoldenParabolic { form: FormLabel::E7_7, index: 5, levi: "so(5,5)+sl(2,R)", dim_n: 42, depth: 2, hist: &[(1, 32), (2, 10)], long_short: None },
    GoldenParabolic { form: FormLabel::E7_7, index: 6, levi: "E6(6)", dim_n: 27, depth: 1, hist: &[(1, 27)], long_short: None },
    GoldenParabolic { form: FormLabel::E7_7, index: 7, levi: "sl(7,R)", dim_n: 42, depth: 2, hist: &[(1, 35), (2, 7)], long_short: None },
    GoldenParabolic { form: FormLabel::E7_5, index: 1, levi: "so*(12)", dim_n: 33, depth: 2, hist: &[(1, 32), (2, 1)], long_short: None },
    GoldenParabolic { form: FormLabel::E7_5, index: 2, levi: "so(7,3)+su(2)", dim_n: 42, depth: 2, hist: &[(1, 32), (2, 10)], long_short: None },
    GoldenParabolic { form: FormLabel::E7_5, index: 3, levi: "su*(6)+sl(2,R)", dim_n: 47, depth: 3, hist: &[(1, 30), (2, 15), (3, 2)], long_short: None },
    GoldenParabolic { form: FormLabel::E7_5, index: 4, levi: "so(5,1)+sl(3,R)+su(2)", dim_n: 53, depth: 4, hist: &[(1, 24), (2, 18), (3, 8), (4, 3)], long_short: None },
    GoldenParabolic { form: FormLabel::E7_25, index: 1, levi: "so(10,2)", dim_n: 33, depth: 2, hist: &[(1, 32), (2, 1)], long_short: None },
    GoldenParabolic { form: FormLabel::E7_25, index: 2, levi: "so(9,1)+sl(2,R)", dim_n: 42, depth: 2, hist: &[(1, 32), (2, 10)], long_short: None },
    GoldenParabolic { form: FormLabel::E7_25, index: 3, levi: "E6(-26)", dim_n: 27, depth: 1, hist: &[(1, 27)], long_short: None },
    GoldenParabolic { form: FormLabel::E8_8, index: 1, levi: "so(7,7)", dim_n: 78, depth: 2, hist: &[(1, 64), (2, 14)], long_short: None },
    GoldenParabolic { form: FormLabel::E8_8, index: 2, levi: "sl(7,R)+sl(2,R)", dim_n: 98, depth: 4, hist: &[(1, 42), (2, 35), (3, 14), (4, 7)], long_short: None },
    GoldenParabolic { form: FormLabel::E8_8, index: 3, levi: "sl(5,R)+sl(3,R)+sl(2,R)", dim_n: 106, depth: 6, hist: &[(1, 30), (2, 30), (3, 20), (4, 15), (5, 6), (6, 5)], long_short: None },
    GoldenParabolic { form: FormLabel::E8_8, index: 4, levi: "sl(5,R)+sl(4,R)", dim_n: 104, depth: 5, hist: &[(1, 40), (2, 30), (3, 20), (4, 10), (5, 4)], long_short: None },
    GoldenParabolic { form: FormLabel::E8_8, index: 5, levi: "so(5,5)+sl(3,R)", dim_n: 97, depth: 4, hist: &[(1, 48), (2, 30), (3, 16), (4, 3)], long_short: None },
    GoldenParabolic { form: FormLabel::E8_8, index: 6, levi: "E6(6)+sl(2,R)", dim_n: 83, depth: 3, hist: &[(1, 54), (2, 27), (3, 2)], long_short: None },
    GoldenParabolic { form: FormLabel::E8_8, index: 7, levi: "E7(7)", dim_n: 57, depth: 2, hist: &[(1, 56), (2, 1)], long_short: None },
    GoldenParabolic { form: FormLabel::E8_8, index: 8, levi: "sl(8,R)", dim_n: 92, depth: 3, hist: &[(1, 56), (2, 28), (3, 8)], long_short: None },
    GoldenParabolic { form: FormLabel::E8_24, index: 1, levi: "so(11,3)", dim_n: 78, depth: 2, hist: &[(1, 64), (2, 14)], long_short: None },
    GoldenParabolic { form: FormLabel::E8_24, index: 2, levi: "so(9,1)+sl(3,R)", dim_n: 97, depth: 4, hist: &[(1, 48), (2, 30), (3, 16), (4, 3)], long_short: None },
    GoldenParabolic { form: FormLabel::E8_24, index: 3, levi: "E6(-26)+sl(2,R)", dim_n: 83, depth: 3, hist: &[(1, 54), (2, 27), (3, 2)], long_short: None },
    GoldenParabolic { form: FormLabel::E8_24, index: 4, levi: "E7(-25)", dim_n: 57, depth: 2, hist: &[(1, 56), (2, 1)], long_short: None },
    GoldenParabolic { form: FormLabel::F4_4, index: 1, levi: "sl(3,R)_S+sl(2,R)_L", dim_n: 20, depth: 3, hist: &[(1, 12), (2, 6), (3, 2)], long_short: Some((11, 9)) },
    GoldenParabolic { form: FormLabel::F4_4, index: 2, levi: "sl(3,R)_L+sl(2,R)_S", dim_n: 20, depth: 4, hist: &[(1, 6), (2, 9), (3, 2), (4, 3)], long_short: Some((9, 11)) },
    GoldenParabolic { form: FormLabel::F4_4, index: 3, levi: "sp(3,R)", dim_n: 15, depth: 2, hist: &[(1, 14), (2, 1)], long_short: Some((9, 6)) },
    GoldenParabolic { form: FormLabel::F4_4, index: 4, levi: "so(4,3)", dim_n: 15, depth: 2, hist: &[(1, 8), (2, 7)], long_short: Some((6, 9)) },
];

/// The F4(-20) and G2(2) golden rows (kept separate only because Rust
/// array literals above already hold 44 entries minus these three).
pub static GOLDEN_PARABOLICS_TAIL: [GoldenParabolic; 3] = [
    GoldenParabolic { form: FormLabel::F4_20, index: 1, levi: "so(7)", dim_n: 15, depth: 2, hist: &[(1, 8), (2, 7)], long_short: None },
    GoldenParabolic { form: FormLabel::G2_2, index: 1, levi: "sl(2,R)_L", dim_n: 5, depth: 3, hist: &[(1, 2), (2, 1), (3, 2)], long_short: Some((2, 3)) },
    GoldenParabolic { form: FormLabel::G2_2, index: 2, levi: "sl(2,R)_S", dim_n: 5, depth: 2, hist: &[(1, 4), (2, 1)], long_short: Some((3, 2)) },
];

/// Iterate over all 44 golden rows.
pub fn golden_parabolics() -> impl Iterator<Item = &'static GoldenParabolic> {
    GOLDEN_PARABOLICS.iter().chain(GOLDEN_PARABOLICS_TAIL.iter())
}

// ---------------------------------------------------------------------------
// Symmetry table (rank-3 Jordan algebras and the base field)
// ---------------------------------------------------------------------------

/// One row of the symmetry table: the four symmetry algebras of a cubic
/// Jordan algebra with their frozen dimensions.
pub struct SymmetryRow {
    /// algebra name in [`crate::jordan_core::JordanKind::name`] spelling
    pub algebra: &'static str,
    /// derivation (automorphism) algebra label
    pub aut: &'static str,
    /// reduced structure algebra label
    pub str0: &'static str,
    /// conformal algebra label
    pub conf: &'static str,
    /// quasi-conformal algebra label
    pub qconf: &'static str,
    /// `(dim aut, dim str0, dim conf, dim qconf)`
    pub dims: (usize, usize, usize, usize),
}

/// The fixed rows of the symmetry table (the generic spin-factor row is
/// formulaic; see [`spin_factor_row`]).
pub static SYMMETRY_TABLE: [SymmetryRow; 8] = [
    SymmetryRow { algebra: "R", aut: "0", str0: "0", conf: "sl(2,R)", qconf: "G2(2)", dims: (0, 0, 3, 14) },
    SymmetryRow { algebra: "J3^R", aut: "so(3)", str0: "sl(3,R)", conf: "sp(3,R)", qconf: "F4(4)", dims: (3, 8, 21, 52) },
    SymmetryRow { algebra: "J3^C", aut: "su(3)", str0: "sl(3,C)", conf: "su(3,3)", qconf: "E6(2)", dims: (8, 16, 35, 78) },
    SymmetryRow { algebra: "J3^C_s", aut: "sl(3,R)", str0: "sl(3,R)+sl(3,R)", conf: "sl(6,R)", qconf: "E6(6)", dims: (8, 16, 35, 78) },
    SymmetryRow { algebra: "J3^H", aut: "usp(3)", str0: "su*(6)", conf: "so*(12)", qconf: "E7(-5)", dims: (21, 35, 66, 133) },
    SymmetryRow { algebra: "J3^H_s", aut: "sp(3,R)", str0: "sl(6,R)", conf: "so(6,6)", qconf: "E7(7)", dims: (21, 35, 66, 133) },
    SymmetryRow { algebra: "J3^O", aut: "f4", str0: "E6(-26)", conf: "E7(-25)", qconf: "E8(-24)", dims: (52, 78, 133, 248) },
    SymmetryRow { algebra: "J3^O_s", aut: "F4(4)", str0: "E6(6)", conf: "E7(7)", qconf: "E8(8)", dims: (52, 78, 133, 248) },
];

/// The generic spin-factor row `R ⊕ Γ_{m,n}` of the symmetry table.
///
/// Computed labels are `aut = so(m−1, n)` and
/// `str0 = so(m,n) ⊕ so(1,1)`; the table as usually printed abbreviates
/// these (listing the maximal compact `so(m)⊕so(n)` for `aut` and
/// dropping the `so(1,1)` of `str0`) — the dimensions returned here are
/// the exact computed ones.
#[must_use]
pub fn spin_factor_row(m: usize, n: usize) -> SymmetryRow {
    let d = m + n;
    let der = (d - 1) * (d - 2) / 2;
    let str0 = d * (d - 1) / 2 + 1;
    let conf = 3 + (d + 2) * (d + 1) / 2;
    let qconf = (d + 6) * (d + 5) / 2;
    SymmetryRow {
        algebra: "R+Gamma_{m,n}",
        aut: "so(m-1,n)",
        str0: "so(m,n)+so(1,1)",
        conf: "sl(2,R)+so(m+1,n+1)",
        qconf: "so(m+3,n+3)",
        dims: (der, str0, conf, qconf),
    }
}

/// Sampled `(m, n)` signatures used to validate the generic spin-factor
/// row computationally.
pub static SPIN_FACTOR_SAMPLES: [(usize, usize); 20] = [
    (8, 0),
    (4, 4),
    (9, 1),
    (5, 5),
    (7, 0),
    (4, 3),
    (7, 1),
    (5, 3),
    (6, 4),
    (8, 2),
    (1, 2),
    (3, 1),
    (7, 3),
    (12, 4),
    (2, 10),
    (8, 4),
    (5, 4),
    (8, 8),
    (11, 3),
    (1, 1),
];

// ---------------------------------------------------------------------------
// Relatedness classes and Jordan roles
// ---------------------------------------------------------------------------

/// Which of the four symmetry constructions a role refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SymKind {
    /// derivation algebra
    Der,
    /// reduced structure algebra
    Str0,
    /// conformal algebra
    Conf,
    /// quasi-conformal algebra
    Qconf,
}

impl SymKind {
    /// Display prefix.
    #[must_use]
    pub fn name(self) -> &'static str {
        match self {
            SymKind::Der => "der",
            SymKind::Str0 => "str0",
            SymKind::Conf => "conf",
            SymKind::Qconf => "qconf",
        }
    }
}

/// The algebra a symmetry role is taken of.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RoleAlg {
    /// `J3^A`
    J3(CompLabel),
    /// Lorentzian `J_{1,2}^A`
    Lorentzian(CompLabel),
    /// degree-2 spin factor `Γ_{m,n}`
    Gamma(usize, usize),
    /// cubic spin factor `R ⊕ Γ_{m,n}`
    SpinFactor(usize, usize),
    /// rank-2 algebra `J2^A` (≅ a `Γ`; see
    /// [`crate::symmetry_dims::check_j2_gamma_identifications`])
    J2(CompLabel),
    /// the Hermitian Jordan triple system `M_{2,1}(O)` (registry-only)
    M21O,
}

impl RoleAlg {
    /// Display name of the algebra.
    #[must_use]
    pub fn name(self) -> String {
        match self {
            RoleAlg::J3(a) => format!("J3^{}", a.name()),
            RoleAlg::Lorentzian(a) => format!("J_{{1,2}}^{}", a.name()),
            RoleAlg::Gamma(m, n) => format!("Gamma_{{{m},{n}}}"),
            RoleAlg::SpinFactor(m, n) => format!("R+Gamma_{{{m},{n}}}"),
            RoleAlg::J2(a) => format!("J2^{}", a.name()),
            RoleAlg::M21O => String::from("M_{2,1}(O)"),
        }
    }
}

/// A Jordan-algebraic role attached to a Lie algebra: an optional
/// symmetry-construction part plus direct-summand labels.
#[derive(Clone, Copy, Debug)]
pub struct Role {
    /// symmetry construction, e.g. `conf(J3^O)`
    pub sym: Option<(SymKind, RoleAlg)>,
    /// additional direct summands, e.g. `+ sl(2,R)`
    pub extra: &'static [LieLabel],
}

impl Role {
    /// Display, e.g. `"str0(J2^O)+sl(2,R)"`.
    #[must_use]
    pub fn display(&self) -> String {
        let mut parts: Vec<String> = Vec::new();
        if let Some((k, a)) = self.sym {
            parts.push(format!("{}({})", k.name(), a.name()));
        }
        for l in self.extra {
            parts.push(l.display());
        }
        parts.join("+")
    }

    /// Whether the role can only be carried as registry data (its algebra
    /// is outside the computable machinery).
    #[must_use]
    pub fn registry_only(&self) -> bool {
        matches!(self.sym, Some((_, RoleAlg::M21O)))
    }
}

const SL2R: LieLabel = LieLabel::SlR(2);
const SL3R: LieLabel = LieLabel::SlR(3);
const SU2: LieLabel = LieLabel::Su(2, 0);
const U1: LieLabel = LieLabel::U1;

/// One per-form member of a relatedness class.
pub struct ClassMember {
    /// which form
    pub form: FormLabel,
    /// indices of the maximal parabolics of this form in the class
    /// (empty for a registry-only member)
    pub indices: &'static [usize],
    /// Levi label as printed in the relatedness table
    pub levi: &'static str,
    /// Jordan role of the ambient form
    pub g_role: Role,
    /// Jordan role of the Levi
    pub m_role: Role,
    /// dimension of the Levi (incl. abelian summands)
    pub dim_m: usize,
    /// caveat note, if any
    pub note: Option<&'static str>,
}

/// One of the 14 classes of maximally parabolically related forms.
pub struct RelatednessRow {
    /// 1-based row number
    pub row: usize,
    /// shared `dim N±`
    pub dim_n: usize,
    /// members, one per real form
    pub members: &'static [ClassMember],
}

/// The 14 relatedness classes with their Jordan-algebraic interpretation.
pub static RELATEDNESS_TABLE: [RelatednessRow; 14] = [
    RelatednessRow {
        row: 1,
        dim_n: 21,
        members: &[
            ClassMember { form: FormLabel::E6_14, indices: &[2], levi: "su(5,1)", g_role: Role { sym: Some((SymKind::Conf, RoleAlg::M21O)), extra: &[] }, m_role: Role { sym: None, extra: &[LieLabel::Su(5, 1)] }, dim_m: 35, note: None },
            ClassMember { form: FormLabel::E6_6, indices: &[2], levi: "sl(6,R)", g_role: Role { sym: Some((SymKind::Qconf, RoleAlg::J3(CompLabel::Cs))), extra: &[] }, m_role: Role { sym: Some((SymKind::Conf, RoleAlg::J3(CompLabel::Cs))), extra: &[] }, dim_m: 35, note: None },
            ClassMember { form: FormLabel::E6_2, indices: &[4], levi: "su(3,3)", g_role: Role { sym: Some((SymKind::Qconf, RoleAlg::J3(CompLabel::C))), extra: &[] }, m_role: Role { sym: Some((SymKind::Conf, RoleAlg::J3(CompLabel::C))), extra: &[] }, dim_m: 35, note: None },
        ],
    },
    RelatednessRow {
        row: 2,
        dim_n: 24,
        members: &[
            ClassMember { form: FormLabel::E6_14, indices: &[1], levi: "so(7,1)+u(1)", g_role: Role { sym: Some((SymKind::Conf, RoleAlg::M21O)), extra: &[] }, m_role: Role { sym: Some((SymKind::Str0, RoleAlg::Gamma(7, 1))), extra: &[U1] }, dim_m: 29, note: None },
            ClassMember { form: FormLabel::E6_2, indices: &[1], levi: "so(5,3)+u(1)", g_role: Role { sym: Some((SymKind::Qconf, RoleAlg::J3(CompLabel::C))), extra: &[] }, m_role: Role { sym: Some((SymKind::Str0, RoleAlg::Gamma(5, 3))), extra: &[U1] }, dim_m: 29, note: None },
        ],
    },
    RelatednessRow {
        row: 3,
        dim_n: 16,
        members: &[
            ClassMember { form: FormLabel::E6_26, indices: &[1, 2], levi: "so(9,1)", g_role: Role { sym: Some((SymKind::Str0, RoleAlg::J3(CompLabel::O))), extra: &[] }, m_role: Role { sym: Some((SymKind::Str0, RoleAlg::J2(CompLabel::O))), extra: &[] }, dim_m: 45, note: None },
            ClassMember { form: FormLabel::E6_6, indices: &[1, 5], levi: "so(5,5)", g_role: Role { sym: Some((SymKind::Str0, RoleAlg::J3(CompLabel::Os))), extra: &[] }, m_role: Role { sym: Some((SymKind::Str0, RoleAlg::J2(CompLabel::Os))), extra: &[] }, dim_m: 45, note: None },
        ],
    },
    RelatednessRow {
        row: 4,
        dim_n: 29,
        members: &[
            ClassMember { form: FormLabel::E6_6, indices: &[4], levi: "sl(3,R)+sl(3,R)+sl(2,R)", g_role: Role { sym: Some((SymKind::Qconf, RoleAlg::J3(CompLabel::Cs))), extra: &[] }, m_role: Role { sym: Some((SymKind::Str0, RoleAlg::J3(CompLabel::Cs))), extra: &[SL2R] }, dim_m: 19, note: None },
            ClassMember { form: FormLabel::E6_2, indices: &[3], levi: "sl(3,C)+sl(2,R)", g_role: Role { sym: Some((SymKind::Qconf, RoleAlg::J3(CompLabel::C))), extra: &[] }, m_role: Role { sym: Some((SymKind::Str0, RoleAlg::J3(CompLabel::C))), extra: &[SL2R] }, dim_m: 19, note: None },
        ],
    },
    RelatednessRow {
        row: 5,
        dim_n: 27,
        members: &[
            ClassMember { form: FormLabel::E7_25, indices: &[3], levi: "E6(-26)", g_role: Role { sym: Some((SymKind::Conf, RoleAlg::J3(CompLabel::O))), extra: &[] }, m_role: Role { sym: Some((SymKind::Str0, RoleAlg::J3(CompLabel::O))), extra: &[] }, dim_m: 78, note: None },
            ClassMember { form: FormLabel::E7_7, indices: &[6], levi: "E6(6)", g_role: Role { sym: Some((SymKind::Conf, RoleAlg::J3(CompLabel::Os))), extra: &[] }, m_role: Role { sym: Some((SymKind::Str0, RoleAlg::J3(CompLabel::Os))), extra: &[] }, dim_m: 78, note: None },
        ],
    },
    RelatednessRow {
        row: 6,
        dim_n: 42,
        members: &[
            ClassMember { form: FormLabel::E7_25, indices: &[2], levi: "so(9,1)+sl(2,R)", g_role: Role { sym: Some((SymKind::Conf, RoleAlg::J3(CompLabel::O))), extra: &[] }, m_role: Role { sym: Some((SymKind::Str0, RoleAlg::J2(CompLabel::O))), extra: &[SL2R] }, dim_m: 48, note: None },
            ClassMember { form: FormLabel::E7_7, indices: &[5], levi: "so(5,5)+sl(2,R)", g_role: Role { sym: Some((SymKind::Conf, RoleAlg::J3(CompLabel::Os))), extra: &[] }, m_role: Role { sym: Some((SymKind::Str0, RoleAlg::J2(CompLabel::Os))), extra: &[SL2R] }, dim_m: 48, note: None },
            ClassMember { form: FormLabel::E7_5, indices: &[2], levi: "so(7,3)+su(2)", g_role: Role { sym: Some((SymKind::Qconf, RoleAlg::J3(CompLabel::H))), extra: &[] }, m_role: Role { sym: Some((SymKind::Str0, RoleAlg::Gamma(7, 3))), extra: &[SU2] }, dim_m: 48, note: None },
        ],
    },
    RelatednessRow {
        row: 7,
        dim_n: 33,
        members: &[
            ClassMember { form: FormLabel::E7_25, indices: &[1], levi: "so(10,2)", g_role: Role { sym: Some((SymKind::Conf, RoleAlg::J3(CompLabel::O))), extra: &[] }, m_role: Role { sym: Some((SymKind::Conf, RoleAlg::J2(CompLabel::O))), extra: &[] }, dim_m: 66, note: None },
            ClassMember { form: FormLabel::E7_7, indices: &[1], levi: "so(6,6)", g_role: Role { sym: Some((SymKind::Conf, RoleAlg::J3(CompLabel::Os))), extra: &[] }, m_role: Role { sym: Some((SymKind::Conf, RoleAlg::J2(CompLabel::Os))), extra: &[] }, dim_m: 66, note: None },
            ClassMember { form: FormLabel::E7_5, indices: &[1], levi: "so*(12)", g_role: Role { sym: Some((SymKind::Qconf, RoleAlg::J3(CompLabel::H))), extra: &[] }, m_role: Role { sym: Some((SymKind::Conf, RoleAlg::J3(CompLabel::H))), extra: &[] }, dim_m: 66, note: None },
        ],
    },
    RelatednessRow {
        row: 8,
        dim_n: 53,
        members: &[
            ClassMember { form: FormLabel::E7_7, indices: &[3], levi: "sl(4,R)+sl(3,R)+sl(2,R)", g_role: Role { sym: Some((SymKind::Qconf, RoleAlg::J3(CompLabel::Hs))), extra: &[] }, m_role: Role { sym: None, extra: &[LieLabel::SlR(4), SL3R, SL2R] }, dim_m: 26, note: None },
            ClassMember { form: FormLabel::E7_5, indices: &[4], levi: "so(5,1)+sl(3,R)+su(2)", g_role: Role { sym: Some((SymKind::Qconf, RoleAlg::J3(CompLabel::H))), extra: &[] }, m_role: Role { sym: None, extra: &[LieLabel::So(5, 1), SL3R, SU2] }, dim_m: 26, note: None },
        ],
    },
    RelatednessRow {
        row: 9,
        dim_n: 47,
        members: &[
            ClassMember { form: FormLabel::E7_5, indices: &[3], levi: "su*(6)+sl(2,R)", g_role: Role { sym: Some((SymKind::Qconf, RoleAlg::J3(CompLabel::H))), extra: &[] }, m_role: Role { sym: Some((SymKind::Str0, RoleAlg::J3(CompLabel::H))), extra: &[SL2R] }, dim_m: 38, note: None },
            ClassMember { form: FormLabel::E7_7, indices: &[2], levi: "sl(6,R)+sl(2,R)", g_role: Role { sym: Some((SymKind::Qconf, RoleAlg::J3(CompLabel::Hs))), extra: &[] }, m_role: Role { sym: Some((SymKind::Str0, RoleAlg::J3(CompLabel::Hs))), extra: &[SL2R] }, dim_m: 38, note: None },
            ClassMember { form: FormLabel::E7_25, indices: &[], levi: "su*(6)+su(2)", g_role: Role { sym: Some((SymKind::Conf, RoleAlg::J3(CompLabel::O))), extra: &[] }, m_role: Role { sym: Some((SymKind::Str0, RoleAlg::J3(CompLabel::H))), extra: &[SU2] }, dim_m: 38, note: Some("less direct: not the Levi of a maximal parabolic of E7(-25); carried as registry data") },
        ],
    },
    RelatednessRow {
        row: 10,
        dim_n: 57,
        members: &[
            ClassMember { form: FormLabel::E8_24, indices: &[4], levi: "E7(-25)", g_role: Role { sym: Some((SymKind::Qconf, RoleAlg::J3(CompLabel::O))), extra: &[] }, m_role: Role { sym: Some((SymKind::Conf, RoleAlg::J3(CompLabel::O))), extra: &[] }, dim_m: 133, note: None },
            ClassMember { form: FormLabel::E8_8, indices: &[7], levi: "E7(7)", g_role: Role { sym: Some((SymKind::Qconf, RoleAlg::J3(CompLabel::Os))), extra: &[] }, m_role: Role { sym: Some((SymKind::Conf, RoleAlg::J3(CompLabel::Os))), extra: &[] }, dim_m: 133, note: None },
        ],
    },
    RelatednessRow {
        row: 11,
        dim_n: 78,
        members: &[
            ClassMember { form: FormLabel::E8_24, indices: &[1], levi: "so(11,3)", g_role: Role { sym: Some((SymKind::Qconf, RoleAlg::J3(CompLabel::O))), extra: &[] }, m_role: Role { sym: Some((SymKind::Qconf, RoleAlg::SpinFactor(8, 0))), extra: &[] }, dim_m: 91, note: None },
            ClassMember { form: FormLabel::E8_8, indices: &[1], levi: "so(7,7)", g_role: Role { sym: Some((SymKind::Qconf, RoleAlg::J3(CompLabel::Os))), extra: &[] }, m_role: Role { sym: Some((SymKind::Qconf, RoleAlg::SpinFactor(4, 4))), extra: &[] }, dim_m: 91, note: None },
        ],
    },
    RelatednessRow {
        row: 12,
        dim_n: 83,
        members: &[
            ClassMember { form: FormLabel::E8_24, indices: &[3], levi: "E6(-26)+sl(2,R)", g_role: Role { sym: Some((SymKind::Qconf, RoleAlg::J3(CompLabel::O))), extra: &[] }, m_role: Role { sym: Some((SymKind::Str0, RoleAlg::J3(CompLabel::O))), extra: &[SL2R] }, dim_m: 81, note: None },
            ClassMember { form: FormLabel::E8_8, indices: &[6], levi: "E6(6)+sl(2,R)", g_role: Role { sym: Some((SymKind::Qconf, RoleAlg::J3(CompLabel::Os))), extra: &[] }, m_role: Role { sym: Some((SymKind::Str0, RoleAlg::J3(CompLabel::Os))), extra: &[SL2R] }, dim_m: 81, note: None },
        ],
    },
    RelatednessRow {
        row: 13,
        dim_n: 97,
        members: &[
            ClassMember { form: FormLabel::E8_24, indices: &[2], levi: "so(9,1)+sl(3,R)", g_role: Role { sym: Some((SymKind::Qconf, RoleAlg::J3(CompLabel::O))), extra: &[] }, m_role: Role { sym: Some((SymKind::Str0, RoleAlg::J2(CompLabel::O))), extra: &[SL3R] }, dim_m: 53, note: None },
            ClassMember { form: FormLabel::E8_8, indices: &[5], levi: "so(5,5)+sl(3,R)", g_role: Role { sym: Some((SymKind::Qconf, RoleAlg::J3(CompLabel::Os))), extra: &[] }, m_role: Role { sym: Some((SymKind::Str0, RoleAlg::J2(CompLabel::Os))), extra: &[SL3R] }, dim_m: 53, note: None },
        ],
    },
    RelatednessRow {
        row: 14,
        dim_n: 15,
        members: &[
            ClassMember { form: FormLabel::F4_20, indices: &[1], levi: "so(7)", g_role: Role { sym: Some((SymKind::Der, RoleAlg::Lorentzian(CompLabel::O))), extra: &[] }, m_role: Role { sym: Some((SymKind::Str0, RoleAlg::Gamma(7, 0))), extra: &[] }, dim_m: 21, note: None },
            ClassMember { form: FormLabel::F4_4, indices: &[4], levi: "so(4,3)", g_role: Role { sym: Some((SymKind::Der, RoleAlg::Lorentzian(CompLabel::Os))), extra: &[] }, m_role: Role { sym: Some((SymKind::Str0, RoleAlg::Gamma(4, 3))), extra: &[] }, dim_m: 21, note: None },
        ],
    },
];

// ---------------------------------------------------------------------------
// Canonical dump (hash input)
// ---------------------------------------------------------------------------

/// Deterministic plain-text serialization of the whole registry; the CLI
/// hashes this string to produce the reproducibility manifest.
#[must_use]
pub fn canonical_dump() -> String {
    let mut s = String::new();
    s.push_str("registry v1\n");
    for e in &SATAKE {
        s.push_str(&format!(
            "satake {} black={:?} arrows={:?} dimK={} K={} m0={} dim_m0={} dimNpm={} r={} restricted={} rpos={} pins={:?}\n",
            e.form.name(),
            e.black,
            e.arrows,
            e.dim_k,
            e.k_label,
            e.m0_label,
            e.dim_m0,
            e.dim_npm,
            e.split_rank,
            e.restricted_name,
            e.restricted_positive_count,
            e.pins,
        ));
    }
    for g in golden_parabolics() {
        s.push_str(&format!(
            "parabolic {} P{} levi={} dimN={} depth={} hist={:?} longshort={:?}\n",
            g.form.name(),
            g.index,
            g.levi,
            g.dim_n,
            g.depth,
            g.hist,
            g.long_short,
        ));
    }
    for r in &SYMMETRY_TABLE {
        s.push_str(&format!(
            "symmetry {} aut={} str0={} conf={} qconf={} dims={:?}\n",
            r.algebra, r.aut, r.str0, r.conf, r.qconf, r.dims,
        ));
    }
    for row in &RELATEDNESS_TABLE {
        for m in row.members {
            s.push_str(&format!(
                "related row={} dimN={} form={} indices={:?} levi={} g={} m={} dim_m={} note={:?}\n",
                row.row,
                row.dim_n,
                m.form.name(),
                m.indices,
                m.levi,
                m.g_role.display(),
                m.m_role.display(),
                m.dim_m,
                m.note,
            ));
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn form_labels_roundtrip() {
        for f in FormLabel::ALL {
            assert_eq!(FormLabel::parse(f.name()), Some(f));
            assert_eq!(FormLabel::parse(f.alt_name()), Some(f));
        }
        assert_eq!(FormLabel::parse("e6(-14)"), Some(FormLabel::E6_14));
        assert_eq!(FormLabel::parse("eiii"), Some(FormLabel::E6_14));
        assert_eq!(FormLabel::parse("E9(9)"), None);
    }

    #[test]
    fn lie_label_dims_and_parse() {
        let cases = [
            (LieLabel::SlR(6), 35),
            (LieLabel::SlC(3), 16),
            (LieLabel::Su(3, 3), 35),
            (LieLabel::Su(8, 0), 63),
            (LieLabel::SuStar(6), 35),
            (LieLabel::So(9, 1), 45),
            (LieLabel::So(7, 0), 21),
            (LieLabel::SoStar(12), 66),
            (LieLabel::SpR(3), 21),
            (LieLabel::Usp(3), 21),
            (LieLabel::U1, 1),
            (LieLabel::F4c, 52),
            (LieLabel::Form(FormLabel::E8_24), 248),
        ];
        for (l, d) in cases {
            assert_eq!(l.dim(), d, "{}", l.display());
            assert_eq!(LieLabel::parse(&l.display()), Some(l), "{}", l.display());
        }
    }

    #[test]
    fn complexification_normalizations() {
        assert_eq!(LieLabel::So(5, 1).complex_factors(), (alloc::vec![DynkinType::A(3)], 0));
        assert_eq!(LieLabel::SuStar(4).complex_factors(), (alloc::vec![DynkinType::A(3)], 0));
        assert_eq!(
            LieLabel::SlC(2).complex_factors(),
            (alloc::vec![DynkinType::A(1), DynkinType::A(1)], 0)
        );
        assert_eq!(LieLabel::So(2, 2).complex_factors(), (alloc::vec![DynkinType::A(1), DynkinType::A(1)], 0));
        assert_eq!(LieLabel::SpR(2).complex_factors(), (alloc::vec![DynkinType::B(2)], 0));
        assert_eq!(LieLabel::So(2, 0).complex_factors(), (alloc::vec![], 1));
        assert_eq!(LieLabel::U1.complex_factors(), (alloc::vec![], 1));
    }

    #[test]
    fn satake_internal_consistency() {
        assert_eq!(golden_parabolics().count(), 44);
        for e in &SATAKE {
            let g = e.form.dim();
            // Iwasawa bookkeeping: dim g = dim m0 + r + 2 dim N±.
            assert_eq!(g, e.dim_m0 + e.split_rank + 2 * e.dim_npm, "{}", e.form.name());
            assert_eq!(e.pins.len(), e.split_rank, "{}", e.form.name());
            // dim K + dim P = dim g with dim P = dim g − dim K trivially;
            // instead check the split-form coincidence dim N± = dim K.
            if e.black.is_empty() && e.arrows.is_empty() {
                assert_eq!(e.dim_npm, e.dim_k, "{}", e.form.name());
            }
            // every golden row's dim N is bounded by dim N± of the form
            for gp in golden_parabolics().filter(|gp| gp.form == e.form) {
                assert!(gp.dim_n <= e.dim_npm);
                let sum: usize = gp.hist.iter().map(|&(_, c)| c).sum();
                assert_eq!(sum, gp.dim_n, "{} P{}", e.form.name(), gp.index);
                assert_eq!(gp.hist.last().map(|&(k, _)| k), Some(gp.depth));
            }
        }
    }

    #[test]
    fn relatedness_dims_consistent() {
        for row in &RELATEDNESS_TABLE {
            for m in row.members {
                // dim g = dim M + 1 + 2 dim N for each member
                assert_eq!(
                    m.form.dim(),
                    m.dim_m + 1 + 2 * row.dim_n,
                    "row {} member {}",
                    row.row,
                    m.form.name()
                );
            }
        }
        let registry_only: usize = RELATEDNESS_TABLE
            .iter()
            .flat_map(|r| r.members)
            .filter(|m| m.g_role.registry_only() || m.m_role.registry_only())
            .count();
        assert!(registry_only <= 3, "registry-only roles: {registry_only}");
    }

    #[test]
    fn spin_factor_row_dims() {
        let r = spin_factor_row(3, 1);
        assert_eq!(r.dims, (3, 7, 18, 45));
        let r = spin_factor_row(8, 0);
        assert_eq!(r.dims.3, LieLabel::So(11, 3).dim());
        let r = spin_factor_row(4, 4);
        assert_eq!(r.dims.3, LieLabel::So(7, 7).dim());
    }
}
