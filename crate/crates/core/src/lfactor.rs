//! Exact products and quotients of Tate Euler factors in `X = q^-s`.
//!
//! The factor of an unramified character `chi` at shift `s0` is
//! `(1 - c X)^-1` with `c = chi(pi) q^-s0`. Since `nu(pi) = q^-1`, the
//! coefficient is `q^(q2/2) w(pi)` for a half-integer power of `q` and the
//! finite-order word `w` of `chi`, both kept symbolic. Ramified characters
//! contribute the trivial factor and are simply not stored.

use crate::chargroup::{Character, CharacterContext};
use crate::tsmod::TsModule;

/// One Euler factor `1/(1 - c X)` with `c = q^(q2/2) * word(pi)`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct EulerFactor {
    q2: i64,
    word: Character,
}

impl EulerFactor {
    /// Doubled exponent of `q` in the coefficient.
    pub fn q2(&self) -> i64 {
        self.q2
    }

    /// Finite-order part of the character, evaluated at the uniformizer.
    pub fn word(&self) -> &Character {
        &self.word
    }

    /// The shift-zero character this factor came from: `L(s, chi)` with
    /// `chi = nu^(-q2/2) * word`.
    pub fn character(&self, ctx: &CharacterContext) -> Character {
        ctx.mul(&Character::nu_halves(-self.q2), &self.word)
    }

    pub fn render_coeff(&self) -> String {
        let mut parts = Vec::new();
        if !self.word.is_one() {
            parts.push("c".to_string());
        }
        match self.q2 {
            0 => {
                if parts.is_empty() {
                    parts.push("1".to_string());
                }
            }
            n if n % 2 == 0 => parts.push(format!("q^{}", n / 2)),
            n => parts.push(format!("q^{}/2", n)),
        }
        parts.join(" ")
    }
}

/// `tate(chi, shift)` realizes `L(chi, s + shift)`; `shift2` is the doubled
/// shift. Returns `None` for ramified `chi` (the factor is 1).
pub fn tate(ctx: &CharacterContext, chi: &Character, shift2: i64) -> Option<EulerFactor> {
    if !ctx.is_unramified(chi) {
        return None;
    }
    Some(EulerFactor { q2: -chi.nu2() - shift2, word: chi.monomial_part() })
}

/// A quotient of products of Euler factors in canceled form. Factors in
/// `denom` stand for `(1 - cX)^-1`, factors in `numer` for `(1 - cX)`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct LFactorProduct {
    denom: Vec<EulerFactor>,
    numer: Vec<EulerFactor>,
}

fn cancel(denom: &mut Vec<EulerFactor>, numer: &mut Vec<EulerFactor>) {
    denom.sort();
    numer.sort();
    let mut i = 0;
    while i < numer.len() {
        if let Some(j) = denom.iter().position(|d| *d == numer[i]) {
            denom.remove(j);
            numer.remove(i);
        } else {
            i += 1;
        }
    }
}

impl LFactorProduct {
    pub fn one() -> Self {
        LFactorProduct::default()
    }

    pub fn is_one(&self) -> bool {
        self.denom.is_empty() && self.numer.is_empty()
    }

    pub fn from_factor(f: Option<EulerFactor>) -> Self {
        LFactorProduct { denom: f.into_iter().collect(), numer: Vec::new() }
    }

    /// `L(chi, s + shift2/2)` as a one-factor product.
    pub fn tate(ctx: &CharacterContext, chi: &Character, shift2: i64) -> Self {
        LFactorProduct::from_factor(tate(ctx, chi, shift2))
    }

    /// `L(M, s + shift2/2)`: the product over the semisimplified `pi0`.
    pub fn of_module(ctx: &CharacterContext, m: &TsModule, shift2: i64) -> Self {
        let mut denom: Vec<EulerFactor> =
            m.pi0().semisimplify().iter().filter_map(|c| tate(ctx, c, shift2)).collect();
        denom.sort();
        LFactorProduct { denom, numer: Vec::new() }
    }

    pub fn of_characters(ctx: &CharacterContext, chars: &[Character], shift2: i64) -> Self {
        let mut denom: Vec<EulerFactor> =
            chars.iter().filter_map(|c| tate(ctx, c, shift2)).collect();
        denom.sort();
        LFactorProduct { denom, numer: Vec::new() }
    }

    pub fn mul(&self, other: &LFactorProduct) -> LFactorProduct {
        let mut denom = self.denom.clone();
        denom.extend(other.denom.iter().cloned());
        let mut numer = self.numer.clone();
        numer.extend(other.numer.iter().cloned());
        cancel(&mut denom, &mut numer);
        LFactorProduct { denom, numer }
    }

    /// Total division: factors of `other` that do not cancel move to the
    /// numerator.
    pub fn div(&self, other: &LFactorProduct) -> LFactorProduct {
        let mut denom = self.denom.clone();
        denom.extend(other.numer.iter().cloned());
        let mut numer = self.numer.clone();
        numer.extend(other.denom.iter().cloned());
        cancel(&mut denom, &mut numer);
        LFactorProduct { denom, numer }
    }

    /// `other` divides `self` iff the quotient is a plain product.
    pub fn divides(other: &LFactorProduct, this: &LFactorProduct) -> bool {
        this.div(other).numer.is_empty()
    }

    pub fn denominator_factors(&self) -> &[EulerFactor] {
        &self.denom
    }

    pub fn numerator_factors(&self) -> &[EulerFactor] {
        &self.numer
    }

    /// Number of stored factors, numerator and denominator together.
    pub fn factor_count(&self) -> usize {
        self.denom.len() + self.numer.len()
    }

    /// List of `{character, shift, exponent}` entries, shift-zero normalized.
    pub fn to_json(&self, ctx: &CharacterContext) -> serde_json::Value {
        let mut entries: Vec<serde_json::Value> = Vec::new();
        let mut push_side = |fs: &[EulerFactor], sign: i64| {
            let mut i = 0;
            while i < fs.len() {
                let mut j = i + 1;
                while j < fs.len() && fs[j] == fs[i] {
                    j += 1;
                }
                entries.push(serde_json::json!({
                    "character": ctx.render(&fs[i].character(ctx)),
                    "shift": 0,
                    "exponent": sign * (j - i) as i64,
                }));
                i = j;
            }
        };
        push_side(&self.denom, 1);
        push_side(&self.numer, -1);
        serde_json::Value::Array(entries)
    }

    /// `L(s, chi1) L(s, chi2)^2 / L(s, chi3)` style rendering.
    pub fn render(&self, ctx: &CharacterContext) -> String {
        if self.is_one() {
            return "1".to_string();
        }
        let side = |fs: &[EulerFactor]| -> String {
            let mut out: Vec<String> = Vec::new();
            let mut i = 0;
            while i < fs.len() {
                let mut j = i + 1;
                while j < fs.len() && fs[j] == fs[i] {
                    j += 1;
                }
                let body = format!("L(s, {})", ctx.render(&fs[i].character(ctx)));
                if j - i == 1 {
                    out.push(body);
                } else {
                    out.push(format!("{}^{}", body, j - i));
                }
                i = j;
            }
            out.join(" ")
        };
        match (self.denom.is_empty(), self.numer.is_empty()) {
            (false, true) => side(&self.denom),
            (true, false) => format!("1 / ({})", side(&self.numer)),
            _ => format!("{} / ({})", side(&self.denom), side(&self.numer)),
        }
    }

    /// Rational-function form in `X = q^-s` with symbolic coefficients.
    pub fn render_rational(&self, ctx: &CharacterContext) -> String {
        if self.is_one() {
            return "1".to_string();
        }
        let side = |fs: &[EulerFactor]| -> String {
            fs.iter()
                .map(|f| {
                    let w = if f.word.is_one() {
                        String::new()
                    } else {
                        format!("{}(pi) ", ctx.render(&f.word))
                    };
                    let q = match f.q2 {
                        0 => String::new(),
                        n if n % 2 == 0 => format!("q^{} ", n / 2),
                        n => format!("q^{}/2 ", n),
                    };
                    let c = format!("{w}{q}");
                    if c.is_empty() {
                        "(1 - X)".to_string()
                    } else {
                        format!("(1 - {}X)", c)
                    }
                })
                .collect::<Vec<_>>()
                .join(" ")
        };
        let num = if self.numer.is_empty() { "1".to_string() } else { side(&self.numer) };
        if self.denom.is_empty() {
            num
        } else {
            format!("{} / ({})", num, side(&self.denom))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tmod::TModule;

    fn ctx() -> CharacterContext {
        let mut c = CharacterContext::new();
        c.add_generator("sigma", None, true).unwrap();
        c.add_generator("chi1", None, true).unwrap();
        c.add_generator("xi", Some(2), false).unwrap();
        c
    }

    #[test]
    fn tate_factors() {
        let c = ctx();
        let sigma = c.named("sigma").unwrap();
        let chi = c.mul(&Character::nu_halves(3), &sigma);
        let f = tate(&c, &chi, 0).unwrap();
        assert_eq!(f.q2(), -3);
        assert_eq!(f.word(), &sigma);
        // ramified xi contributes nothing
        assert!(tate(&c, &c.named("xi").unwrap(), 0).is_none());
        // shift cancellation: L(nu^3/2 chi, s - 3/2) = L(chi, s)
        let a = tate(&c, &c.mul(&Character::nu_halves(3), &sigma), -3).unwrap();
        let b = tate(&c, &sigma, 0).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn module_factor() {
        let c = ctx();
        let sigma = c.named("sigma").unwrap();
        assert!(LFactorProduct::of_module(&c, &TsModule::schwartz(), 0).is_one());
        let half = c.mul(&Character::nu_halves(-1), &sigma);
        let m = TsModule::universal_extension(TModule::block(half.clone(), 2)).unwrap();
        let l = LFactorProduct::of_module(&c, &m, 0);
        assert_eq!(l, LFactorProduct::of_characters(&c, &[half.clone(), half.clone()], 0));
        assert_eq!(l.denominator_factors().len(), 2);
        let mixed = TsModule::character(sigma.clone()).direct_sum(&TsModule::schwartz());
        assert_eq!(
            LFactorProduct::of_module(&c, &mixed, 0),
            LFactorProduct::tate(&c, &sigma, 0)
        );
    }

    #[test]
    fn divide_and_divides() {
        let c = ctx();
        let sigma = c.named("sigma").unwrap();
        let chi1 = c.named("chi1").unwrap();
        let ls = LFactorProduct::tate(&c, &sigma, 0);
        let lcs = LFactorProduct::tate(&c, &c.mul(&chi1, &sigma), 0);
        let prod = ls.mul(&lcs);
        let q = prod.div(&lcs);
        assert_eq!(q, ls);
        assert!(LFactorProduct::divides(&lcs, &prod));
        // L(s, sigma) / L(s, chi1 sigma) keeps a numerator
        let bad = ls.div(&lcs);
        assert!(!LFactorProduct::divides(&lcs, &ls));
        assert_eq!(bad.numerator_factors().len(), 1);
    }

    #[test]
    fn render_forms() {
        let c = ctx();
        let sigma = c.named("sigma").unwrap();
        assert_eq!(LFactorProduct::one().render(&c), "1");
        let half = c.mul(&Character::nu_halves(1), &sigma);
        let l = LFactorProduct::tate(&c, &half, 0);
        assert_eq!(l.render(&c), "L(s, nu^1/2 sigma)");
        assert_eq!(l.render_rational(&c), "1 / ((1 - sigma(pi) q^-1/2 X))");
        let sq = l.mul(&l);
        assert_eq!(sq.render(&c), "L(s, nu^1/2 sigma)^2");
    }

    #[test]
    fn shift_matches_twist() {
        let c = ctx();
        let sigma = c.named("sigma").unwrap();
        let m = TsModule::universal_extension(TModule::block(sigma.clone(), 1)).unwrap();
        let shifted = LFactorProduct::of_module(&c, &m, -3);
        let twisted =
            LFactorProduct::of_module(&c, &m.twist(&c, &Character::nu_halves(-3)), 0);
        assert_eq!(shifted, twisted);
    }
}
