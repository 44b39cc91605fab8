//! The classification layer for irreducible representations of `GSp(4, k)`
//! with non-trivial Bessel theory: type tags, parameter validation, the
//! character multisets of the Siegel-Jacquet module, split Bessel model
//! existence, Bessel modules, and the regular spinor L-factor.

pub mod data;
pub mod ops;
pub mod tables;

use crate::chargroup::{Character, CharacterContext};
use crate::tmod::TModule;
use crate::tsmod::TsModule;
use std::fmt;

pub use ops::{
    bessel_filtration, bessel_module, beta_upper, central_character, classify_pair,
    degeneracy_warnings, delta_sets, exceptional_case, has_split_bessel, kl_lfactor, mu_twist,
    regular_lfactor, siegel_data, subregular_quotient, validate,
};

/// The type of an irreducible representation in the standard classification.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
#[allow(clippy::upper_case_acronyms)]
pub enum TypeTag {
    I,
    IIa,
    IIb,
    IIIa,
    IIIb,
    IVa,
    IVb,
    IVc,
    IVd,
    Va,
    Vb,
    Vc,
    Vd,
    VIa,
    VIb,
    VIc,
    VId,
    VII,
    VIIIa,
    VIIIb,
    IXa,
    IXb,
    X,
    XIa,
    XIb,
    CuspGeneric,
    CuspNonGeneric,
}

impl TypeTag {
    pub const ALL: [TypeTag; 27] = [
        TypeTag::I,
        TypeTag::IIa,
        TypeTag::IIb,
        TypeTag::IIIa,
        TypeTag::IIIb,
        TypeTag::IVa,
        TypeTag::IVb,
        TypeTag::IVc,
        TypeTag::IVd,
        TypeTag::Va,
        TypeTag::Vb,
        TypeTag::Vc,
        TypeTag::Vd,
        TypeTag::VIa,
        TypeTag::VIb,
        TypeTag::VIc,
        TypeTag::VId,
        TypeTag::VII,
        TypeTag::VIIIa,
        TypeTag::VIIIb,
        TypeTag::IXa,
        TypeTag::IXb,
        TypeTag::X,
        TypeTag::XIa,
        TypeTag::XIb,
        TypeTag::CuspGeneric,
        TypeTag::CuspNonGeneric,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TypeTag::I => "I",
            TypeTag::IIa => "IIa",
            TypeTag::IIb => "IIb",
            TypeTag::IIIa => "IIIa",
            TypeTag::IIIb => "IIIb",
            TypeTag::IVa => "IVa",
            TypeTag::IVb => "IVb",
            TypeTag::IVc => "IVc",
            TypeTag::IVd => "IVd",
            TypeTag::Va => "Va",
            TypeTag::Vb => "Vb",
            TypeTag::Vc => "Vc",
            TypeTag::Vd => "Vd",
            TypeTag::VIa => "VIa",
            TypeTag::VIb => "VIb",
            TypeTag::VIc => "VIc",
            TypeTag::VId => "VId",
            TypeTag::VII => "VII",
            TypeTag::VIIIa => "VIIIa",
            TypeTag::VIIIb => "VIIIb",
            TypeTag::IXa => "IXa",
            TypeTag::IXb => "IXb",
            TypeTag::X => "X",
            TypeTag::XIa => "XIa",
            TypeTag::XIb => "XIb",
            TypeTag::CuspGeneric => "CuspGeneric",
            TypeTag::CuspNonGeneric => "CuspNonGeneric",
        }
    }

    pub fn parse(s: &str) -> Option<TypeTag> {
        let norm = s.trim();
        Self::ALL
            .iter()
            .copied()
            .find(|t| t.name().eq_ignore_ascii_case(norm))
            .or(match norm.to_ascii_lowercase().as_str() {
                "cusp-generic" | "cuspidal-generic" => Some(TypeTag::CuspGeneric),
                "cusp-non-generic" | "cuspidal-non-generic" => Some(TypeTag::CuspNonGeneric),
                _ => None,
            })
    }

    pub fn is_generic(self) -> bool {
        matches!(
            self,
            TypeTag::I
                | TypeTag::IIa
                | TypeTag::IIIa
                | TypeTag::IVa
                | TypeTag::Va
                | TypeTag::VIa
                | TypeTag::VII
                | TypeTag::VIIIa
                | TypeTag::IXa
                | TypeTag::X
                | TypeTag::XIa
                | TypeTag::CuspGeneric
        )
    }

    /// Whittaker multiplicity: one for generic types, zero otherwise.
    pub fn whittaker_multiplicity(self) -> usize {
        if self.is_generic() {
            1
        } else {
            0
        }
    }

    /// Types supported on the Siegel parabolic (non-zero Siegel-Jacquet module).
    pub fn has_siegel_jacquet(self) -> bool {
        !matches!(
            self,
            TypeTag::VII
                | TypeTag::VIIIa
                | TypeTag::VIIIb
                | TypeTag::IXa
                | TypeTag::IXb
                | TypeTag::CuspGeneric
                | TypeTag::CuspNonGeneric
        )
    }

    /// Which named parameters the type reads.
    pub fn uses_params(self) -> &'static [&'static str] {
        use TypeTag::*;
        match self {
            I => &["chi1", "chi2", "sigma"],
            IIa | IIb | IIIa | IIIb => &["chi1", "sigma"],
            IVa | IVb | IVc | IVd | VIa | VIb | VIc | VId => &["sigma"],
            Va | Vb | Vc | Vd => &["xi", "sigma"],
            VII => &["chi1", "omega_pi", "sigma"],
            VIIIa | VIIIb => &["omega_pi", "sigma"],
            IXa | IXb => &["xi", "omega_pi", "sigma"],
            X => &["omega_pi", "sigma"],
            XIa | XIb => &["omega_pi", "sigma"],
            CuspGeneric | CuspNonGeneric => &["omega_pi", "sigma"],
        }
    }
}

impl fmt::Display for TypeTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A representation, given by its type and character parameters. Parameters
/// the type does not use stay at their trivial defaults. `sigma` is the outer
/// twist of the usual parameterization; `omega_pi` is the central character
/// of the auxiliary cuspidal datum.
#[derive(Clone, Debug)]
pub struct ReprSpec {
    pub ty: TypeTag,
    pub chi1: Character,
    pub chi2: Character,
    pub xi: Character,
    pub omega_pi: Character,
    pub sigma: Character,
}

impl ReprSpec {
    pub fn new(ty: TypeTag) -> Self {
        ReprSpec {
            ty,
            chi1: Character::one(),
            chi2: Character::one(),
            xi: Character::one(),
            omega_pi: Character::one(),
            sigma: Character::one(),
        }
    }
}

/// The character multisets read off the normalized Siegel-Jacquet module.
/// All entries are sorted multisets; `delta_tilde_split` and `delta1_split`
/// refer to a Bessel character that splits, and are empty when none does.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeltaSets {
    pub delta: Vec<Character>,
    pub delta_tilde_split: Vec<Character>,
    pub delta0: Vec<Character>,
    pub delta1_split: Vec<Character>,
    pub delta_plus: Vec<Character>,
    pub delta_minus: Vec<Character>,
    pub delta_q: Vec<Character>,
}

impl DeltaSets {
    pub fn to_json(&self, ctx: &CharacterContext) -> serde_json::Value {
        let arr = |v: &Vec<Character>| {
            serde_json::Value::Array(
                v.iter().map(|c| serde_json::Value::String(ctx.render(c))).collect(),
            )
        };
        serde_json::json!({
            "delta": arr(&self.delta),
            "delta_tilde_split": arr(&self.delta_tilde_split),
            "delta0": arr(&self.delta0),
            "delta1_split": arr(&self.delta1_split),
            "delta_plus": arr(&self.delta_plus),
            "delta_minus": arr(&self.delta_minus),
            "delta_q": arr(&self.delta_q),
        })
    }

    pub fn render(&self, ctx: &CharacterContext) -> String {
        let r = |v: &Vec<Character>| {
            if v.is_empty() {
                "{}".to_string()
            } else {
                format!("{{{}}}", v.iter().map(|c| ctx.render(c)).collect::<Vec<_>>().join(", "))
            }
        };
        format!(
            "Delta={} Delta~={} Delta0={} Delta1={} Delta+={} Delta-={} DeltaQ={}",
            r(&self.delta),
            r(&self.delta_tilde_split),
            r(&self.delta0),
            r(&self.delta1_split),
            r(&self.delta_plus),
            r(&self.delta_minus),
            r(&self.delta_q)
        )
    }
}

/// An irreducible module of the Levi `Gl(2) x Gl(1)`, `pi` component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GlTwoRep {
    /// Principal series `chi_a x chi_b`.
    Principal(Character, Character),
    /// Special (twisted Steinberg) `Sp(chi)`.
    Special(Character),
    /// One-dimensional `chi o det`.
    OneDim(Character),
    /// Cuspidal with the given central character.
    Cuspidal { omega: Character, label: String },
}

impl GlTwoRep {
    /// Semisimplified Jacquet module of `pi`, normalized by `delta_B^-1/2`.
    pub fn jacquet_ss(&self, ctx: &CharacterContext) -> Vec<Character> {
        match self {
            GlTwoRep::Principal(a, b) => {
                let mut v = vec![a.clone(), b.clone()];
                v.sort();
                v
            }
            GlTwoRep::Special(c) => vec![ctx.mul(&Character::nu_halves(1), c)],
            GlTwoRep::OneDim(c) => vec![ctx.mul(&Character::nu_halves(-1), c)],
            GlTwoRep::Cuspidal { .. } => vec![],
        }
    }

    pub fn central_char(&self, ctx: &CharacterContext) -> Character {
        match self {
            GlTwoRep::Principal(a, b) => ctx.mul(a, b),
            GlTwoRep::Special(c) => ctx.pow(c, 2),
            GlTwoRep::OneDim(c) => ctx.pow(c, 2),
            GlTwoRep::Cuspidal { omega, .. } => omega.clone(),
        }
    }

    pub fn one_dim(&self) -> Option<&Character> {
        match self {
            GlTwoRep::OneDim(c) => Some(c),
            _ => None,
        }
    }

    pub fn is_cuspidal(&self) -> bool {
        matches!(self, GlTwoRep::Cuspidal { .. })
    }

    pub fn render(&self, ctx: &CharacterContext) -> String {
        match self {
            GlTwoRep::Principal(a, b) => format!("{} x {}", ctx.render(a), ctx.render(b)),
            GlTwoRep::Special(c) => format!("Sp({})", ctx.render(c)),
            GlTwoRep::OneDim(c) => format!("({} o det)", ctx.render(c)),
            GlTwoRep::Cuspidal { label, .. } => label.clone(),
        }
    }
}

/// One inducing datum `pi (x) chi_pi` on the Siegel Levi, with the kernel
/// constituents of the induced representation and the two distinguished
/// Bessel characters of the datum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SiegelRow {
    pub pi: GlTwoRep,
    pub chi_pi: Character,
    pub kernel: Vec<TypeTag>,
    pub rho_plus: Character,
    pub rho_minus: Character,
}

impl SiegelRow {
    /// Central character of the induced representation.
    pub fn omega(&self, ctx: &CharacterContext) -> Character {
        ctx.mul(&self.pi.central_char(ctx), &ctx.pow(&self.chi_pi, 2))
    }

    pub fn twist(&self, ctx: &CharacterContext, mu: &Character) -> SiegelRow {
        SiegelRow {
            pi: self.pi.clone(),
            chi_pi: ctx.mul(&self.chi_pi, mu),
            kernel: self.kernel.clone(),
            rho_plus: ctx.mul(&self.rho_plus, mu),
            rho_minus: ctx.mul(&self.rho_minus, mu),
        }
    }

    pub fn render(&self, ctx: &CharacterContext) -> String {
        format!("{} (x) {}", self.pi.render(ctx), ctx.render(&self.chi_pi))
    }
}

/// Classification of a pair (inducing datum, Bessel character).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PairClass {
    Ordinary,
    NonOrdinary,
    Extraordinary,
}

/// Exceptional-case classification for generic representations, together
/// with the orbit representative used.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExceptionalCase {
    NonExceptional,
    FullyInducedNonOrdinary,
    Extraordinary,
    IIIaSpecial,
}

impl fmt::Display for ExceptionalCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ExceptionalCase::NonExceptional => "non-exceptional",
            ExceptionalCase::FullyInducedNonOrdinary => "fully-induced non-ordinary",
            ExceptionalCase::Extraordinary => "extraordinary",
            ExceptionalCase::IIIaSpecial => "IIIa-special",
        };
        f.write_str(s)
    }
}

/// Normalized graded pieces of the Bessel filtration of an induced
/// representation, and the derived-functor pieces alongside.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiltrationReport {
    /// `0`, `1` or `2`: how many of the two distinguished characters `rho` hits.
    pub m_index: u8,
    pub i3: TsModule,
    pub i2_ss: TModule,
    /// Direct sum of `m_index` copies of the level-one piece.
    pub i1: TsModule,
    pub i0: TsModule,
    /// Left-derived pieces at levels 3, 2, 1, 0.
    pub beta_upper_i: [TsModule; 4],
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Gsp4Error {
    InvalidSpec(Vec<String>),
    NoBesselModel,
    NoSiegelData,
    NotGeneric,
    DivisibilityFailure,
}

impl fmt::Display for Gsp4Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Gsp4Error::InvalidSpec(v) => write!(f, "violated conditions: {}", v.join("; ")),
            Gsp4Error::NoBesselModel => write!(f, "no split Bessel model for this character"),
            Gsp4Error::NoSiegelData => write!(f, "the Siegel-Jacquet module vanishes"),
            Gsp4Error::NotGeneric => write!(f, "operation requires a generic type"),
            Gsp4Error::DivisibilityFailure => write!(f, "expected divisibility fails"),
        }
    }
}

impl std::error::Error for Gsp4Error {}
