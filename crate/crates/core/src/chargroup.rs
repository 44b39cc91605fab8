//! Exact symbolic arithmetic for smooth characters of `k^*`.
//!
//! A character is written `nu^(p/2) * g1^e1 * g2^e2 * ...` where `nu` is the
//! normalized absolute value and the `g_i` are abstract generators declared in
//! a [`CharacterContext`] with a fixed order (possibly infinite) and a
//! ramification flag. Half-integer `nu`-exponents are stored as doubled
//! integers so all arithmetic stays in `i64`.
//!
//! Equality is decided on canonical forms. Two characters with the same
//! canonical word are equal; any other pair is reported unequal. If the
//! difference word is neither a pure `nu`-power nor covered by a declared
//! inequation, the context records it in an assumption log, so "generic
//! position" stays auditable.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Mutex;

/// Identifier of a generator inside its context (index of declaration).
pub type GenId = usize;

/// A declared generator of the character group.
#[derive(Clone, Debug)]
pub struct GenSpec {
    pub name: String,
    /// `None` means infinite order.
    pub order: Option<u64>,
    pub unramified: bool,
}

/// Declaration error for [`CharacterContext`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ContextError {
    DuplicateGenerator(String),
    UnknownGenerator(String),
    TrivialInequation,
    ZeroOrder(String),
    Parse(String),
}

impl fmt::Display for ContextError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ContextError::DuplicateGenerator(n) => write!(f, "duplicate generator `{n}`"),
            ContextError::UnknownGenerator(n) => write!(f, "unknown generator `{n}`"),
            ContextError::TrivialInequation => write!(f, "inequation asserts 1 != 1"),
            ContextError::ZeroOrder(n) => write!(f, "generator `{n}` declared with order 0"),
            ContextError::Parse(s) => write!(f, "parse error: {s}"),
        }
    }
}

impl std::error::Error for ContextError {}

/// A smooth character of `k^*`, relative to some context.
///
/// `nu2` is twice the exponent of `nu`, so `nu^(1/2)` has `nu2 = 1`.
/// Exponents of finite-order generators are kept reduced into `0..order`,
/// and zero exponents are dropped, so structural equality of the fields is
/// equality of canonical words.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Character {
    nu2: i64,
    exps: BTreeMap<GenId, i64>,
}

impl Character {
    /// The trivial character.
    pub fn one() -> Self {
        Character::default()
    }

    /// `nu^(halves/2)`; `nu_halves(2)` is `nu` itself.
    pub fn nu_halves(halves: i64) -> Self {
        Character { nu2: halves, exps: BTreeMap::new() }
    }

    pub fn is_one(&self) -> bool {
        self.nu2 == 0 && self.exps.is_empty()
    }

    /// Twice the `nu`-exponent.
    pub fn nu2(&self) -> i64 {
        self.nu2
    }

    /// The finite-order word with the `nu`-part removed.
    pub fn monomial_part(&self) -> Character {
        Character { nu2: 0, exps: self.exps.clone() }
    }

    pub fn exponents(&self) -> impl Iterator<Item = (GenId, i64)> + '_ {
        self.exps.iter().map(|(&g, &e)| (g, e))
    }
}

/// Outcome of an equality query.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EqOutcome {
    Equal,
    NotEqual(NotEqualReason),
}

impl EqOutcome {
    pub fn is_equal(&self) -> bool {
        matches!(self, EqOutcome::Equal)
    }
}

/// Why an equality query failed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NotEqualReason {
    /// The difference is a non-trivial power of `nu` alone; no assumption needed.
    NuValuation,
    /// The difference word is covered by a declared inequation.
    Declared,
    /// Generic position: the difference word was logged as an assumption.
    /// `fresh` is false when the same word had been logged before.
    Assumed { fresh: bool },
}

/// Declarations shared by a family of characters: generators, inequations
/// and the growing log of generic-position assumptions.
///
/// The context itself only ever mutates its assumption log; queries are
/// serialized through a mutex so shared references can be used from tests
/// and table sweeps.
pub struct CharacterContext {
    gens: Vec<GenSpec>,
    inequations: Vec<Character>,
    log: Mutex<BTreeSet<Character>>,
}

impl CharacterContext {
    pub fn new() -> Self {
        CharacterContext {
            gens: Vec::new(),
            inequations: Vec::new(),
            log: Mutex::new(BTreeSet::new()),
        }
    }

    /// Declare a generator. `order = None` means infinite order.
    pub fn add_generator(
        &mut self,
        name: &str,
        order: Option<u64>,
        unramified: bool,
    ) -> Result<GenId, ContextError> {
        if name == "nu" || name == "1" {
            return Err(ContextError::DuplicateGenerator(name.to_string()));
        }
        if self.gens.iter().any(|g| g.name == name) {
            return Err(ContextError::DuplicateGenerator(name.to_string()));
        }
        if order == Some(0) {
            return Err(ContextError::ZeroOrder(name.to_string()));
        }
        self.gens.push(GenSpec { name: name.to_string(), order, unramified });
        Ok(self.gens.len() - 1)
    }

    /// Assert that a non-trivial word is not the trivial character.
    pub fn assert_nontrivial(&mut self, word: &Character) -> Result<(), ContextError> {
        if word.is_one() {
            return Err(ContextError::TrivialInequation);
        }
        let w = self.orient(word);
        if !self.inequations.contains(&w) {
            self.inequations.push(w);
        }
        Ok(())
    }

    pub fn generators(&self) -> &[GenSpec] {
        &self.gens
    }

    pub fn generator_id(&self, name: &str) -> Option<GenId> {
        self.gens.iter().position(|g| g.name == name)
    }

    /// The character given by a single declared generator.
    pub fn named(&self, name: &str) -> Result<Character, ContextError> {
        let id = self
            .generator_id(name)
            .ok_or_else(|| ContextError::UnknownGenerator(name.to_string()))?;
        let mut exps = BTreeMap::new();
        exps.insert(id, 1);
        Ok(self.reduce(Character { nu2: 0, exps }))
    }

    fn reduce(&self, mut c: Character) -> Character {
        c.exps.retain(|&g, e| {
            if let Some(n) = self.gens[g].order {
                *e = e.rem_euclid(n as i64);
            }
            *e != 0
        });
        c
    }

    /// `a * b^e`, the group law of the character group.
    pub fn combine(&self, a: &Character, b: &Character, e: i64) -> Character {
        let mut out = a.clone();
        out.nu2 += b.nu2 * e;
        for (&g, &be) in &b.exps {
            *out.exps.entry(g).or_insert(0) += be * e;
        }
        self.reduce(out)
    }

    pub fn mul(&self, a: &Character, b: &Character) -> Character {
        self.combine(a, b, 1)
    }

    pub fn div(&self, a: &Character, b: &Character) -> Character {
        self.combine(a, b, -1)
    }

    pub fn inv(&self, a: &Character) -> Character {
        self.combine(&Character::one(), a, -1)
    }

    pub fn pow(&self, a: &Character, e: i64) -> Character {
        self.combine(&Character::one(), a, e)
    }

    /// The involution `rho -> omega / rho` on Bessel characters.
    pub fn involution(&self, omega: &Character, rho: &Character) -> Character {
        self.div(omega, rho)
    }

    /// Pick the lexicographically smaller of `w` and `w^-1` so that logged
    /// assumptions are orientation-independent.
    fn orient(&self, w: &Character) -> Character {
        let inv = self.inv(w);
        if *w <= inv {
            w.clone()
        } else {
            inv
        }
    }

    /// Decidable equality with generic-position semantics.
    pub fn equals(&self, a: &Character, b: &Character) -> EqOutcome {
        let d = self.div(a, b);
        if d.is_one() {
            return EqOutcome::Equal;
        }
        if d.exps.is_empty() {
            return EqOutcome::NotEqual(NotEqualReason::NuValuation);
        }
        let w = self.orient(&d);
        if self.inequations.contains(&w) {
            return EqOutcome::NotEqual(NotEqualReason::Declared);
        }
        let fresh = self.log.lock().unwrap().insert(w);
        EqOutcome::NotEqual(NotEqualReason::Assumed { fresh })
    }

    /// True iff every generator occurring in `chi` is flagged unramified.
    /// The `nu`-part is always unramified.
    pub fn is_unramified(&self, chi: &Character) -> bool {
        chi.exps.keys().all(|&g| self.gens[g].unramified)
    }

    /// Snapshot of the assumption log, rendered.
    pub fn assumptions(&self) -> Vec<String> {
        let log = self.log.lock().unwrap();
        log.iter().map(|w| format!("{} != 1", self.render(w))).collect()
    }

    pub fn assumption_count(&self) -> usize {
        self.log.lock().unwrap().len()
    }

    /// Render a character in the `nu^p/2 g^e` form, `1` for the trivial one.
    pub fn render(&self, c: &Character) -> String {
        let mut parts = Vec::new();
        match c.nu2 {
            0 => {}
            2 => parts.push("nu".to_string()),
            n if n % 2 == 0 => parts.push(format!("nu^{}", n / 2)),
            n => parts.push(format!("nu^{}/2", n)),
        }
        for (&g, &e) in &c.exps {
            let name = &self.gens[g].name;
            if e == 1 {
                parts.push(name.clone());
            } else {
                parts.push(format!("{name}^{e}"));
            }
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join(" ")
        }
    }

    /// Parse the rendered form back. Accepts `*` or whitespace as separators.
    pub fn parse_char(&self, input: &str) -> Result<Character, ContextError> {
        let mut out = Character::one();
        for tok in input.split(|c: char| c.is_whitespace() || c == '*') {
            if tok.is_empty() {
                continue;
            }
            let (base, exp) = match tok.split_once('^') {
                Some((b, e)) => (b, e),
                None => (tok, "1"),
            };
            if base == "1" {
                continue;
            }
            if base == "nu" {
                let halves = parse_halves(exp)
                    .ok_or_else(|| ContextError::Parse(format!("bad nu exponent `{exp}`")))?;
                out = self.mul(&out, &Character::nu_halves(halves));
            } else {
                let e: i64 = exp
                    .parse()
                    .map_err(|_| ContextError::Parse(format!("bad exponent `{exp}`")))?;
                let g = self.named(base)?;
                out = self.combine(&out, &g, e);
            }
        }
        Ok(out)
    }
}

impl Default for CharacterContext {
    fn default() -> Self {
        Self::new()
    }
}

/// Parse `p`, `p/2` or `(p/2)` into doubled halves.
fn parse_halves(s: &str) -> Option<i64> {
    let s = s.trim().trim_start_matches('(').trim_end_matches(')');
    if let Some((num, den)) = s.split_once('/') {
        if den.trim() != "2" {
            return None;
        }
        num.trim().parse::<i64>().ok()
    } else {
        s.parse::<i64>().ok().map(|p| 2 * p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx() -> CharacterContext {
        let mut c = CharacterContext::new();
        c.add_generator("chi1", None, true).unwrap();
        c.add_generator("chi2", None, true).unwrap();
        c.add_generator("xi", Some(2), true).unwrap();
        c.add_generator("rho", None, false).unwrap();
        let xi = c.named("xi").unwrap();
        c.assert_nontrivial(&xi).unwrap();
        c
    }

    #[test]
    fn order_two_reduction() {
        let c = ctx();
        let xi = c.named("xi").unwrap();
        let half = Character::nu_halves(1);
        let a = c.mul(&half, &xi);
        // (nu^1/2 xi)^2 = nu
        let sq = c.combine(&a, &a, 1);
        assert_eq!(sq, Character::nu_halves(2));
    }

    #[test]
    fn combine_inverse_is_identity() {
        let c = ctx();
        let chi1 = c.named("chi1").unwrap();
        assert!(c.combine(&chi1, &chi1, -1).is_one());
    }

    #[test]
    fn exponent_addition() {
        let c = ctx();
        let chi1 = c.named("chi1").unwrap();
        let a = c.mul(&Character::nu_halves(-1), &chi1);
        let got = c.combine(&a, &Character::nu_halves(2), 2);
        assert_eq!(got, c.mul(&Character::nu_halves(3), &chi1));
    }

    #[test]
    fn involution_values() {
        let c = ctx();
        let chi1 = c.named("chi1").unwrap();
        let chi2 = c.named("chi2").unwrap();
        // omega = 1, rho = nu^-1/2 chi1^-1  ->  nu^1/2 chi1
        let rho = c.combine(&Character::nu_halves(-1), &chi1, -1);
        let got = c.involution(&Character::one(), &rho);
        assert_eq!(got, c.mul(&Character::nu_halves(1), &chi1));
        // omega = chi1 chi2, rho = nu^-1/2  ->  nu^1/2 chi1 chi2
        let omega = c.mul(&chi1, &chi2);
        let got = c.involution(&omega, &Character::nu_halves(-1));
        assert_eq!(got, c.mul(&Character::nu_halves(1), &omega));
    }

    #[test]
    fn involution_is_involutive() {
        let c = ctx();
        let omega = c.mul(&c.named("chi1").unwrap(), &Character::nu_halves(3));
        let rho = c.mul(&c.named("xi").unwrap(), &Character::nu_halves(-1));
        let twice = c.involution(&omega, &c.involution(&omega, &rho));
        assert_eq!(twice, rho);
    }

    #[test]
    fn equals_logs_fresh_assumptions_once() {
        let c = ctx();
        let chi1 = c.named("chi1").unwrap();
        let chi2 = c.named("chi2").unwrap();
        assert_eq!(c.equals(&Character::nu_halves(2), &Character::nu_halves(2)), EqOutcome::Equal);
        // declared inequation: xi != 1
        let xi = c.named("xi").unwrap();
        assert_eq!(c.equals(&xi, &Character::one()), EqOutcome::NotEqual(NotEqualReason::Declared));
        // chi1 vs chi2: logged exactly once
        assert_eq!(
            c.equals(&chi1, &chi2),
            EqOutcome::NotEqual(NotEqualReason::Assumed { fresh: true })
        );
        assert_eq!(
            c.equals(&chi1, &chi2),
            EqOutcome::NotEqual(NotEqualReason::Assumed { fresh: false })
        );
        // the inverse comparison hits the same oriented word
        assert_eq!(
            c.equals(&chi2, &chi1),
            EqOutcome::NotEqual(NotEqualReason::Assumed { fresh: false })
        );
        assert_eq!(c.assumption_count(), 1);
    }

    #[test]
    fn pure_nu_difference_needs_no_assumption() {
        let c = ctx();
        let out = c.equals(&Character::nu_halves(3), &Character::nu_halves(1));
        assert_eq!(out, EqOutcome::NotEqual(NotEqualReason::NuValuation));
        assert_eq!(c.assumption_count(), 0);
    }

    #[test]
    fn ramification() {
        let c = ctx();
        assert!(c.is_unramified(&Character::nu_halves(3)));
        assert!(!c.is_unramified(&c.named("rho").unwrap()));
        let s = c.mul(&Character::nu_halves(1), &c.named("chi1").unwrap());
        assert!(c.is_unramified(&s));
    }

    #[test]
    fn parse_round_trip() {
        let c = ctx();
        for s in ["1", "nu", "nu^1/2", "nu^-3/2 chi1^-1 xi", "chi1^2 chi2^-1", "nu^2"] {
            let ch = c.parse_char(s).unwrap();
            assert_eq!(c.parse_char(&c.render(&ch)).unwrap(), ch, "round trip of `{s}`");
        }
        assert_eq!(c.parse_char("nu^1/2 * xi").unwrap(), c.parse_char("nu^1/2 xi").unwrap());
        assert!(c.parse_char("nope").is_err());
    }
}
