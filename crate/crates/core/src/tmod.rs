//! Finite-dimensional smooth `T`-modules as multisets of Jordan blocks.
//!
//! Every finite-length smooth module of the split torus `T ~ k^*` splits into
//! generalized eigenspaces, each a sum of Jordan blocks `chi^(m)` for the
//! monodromy operator at the uniformizer. Only the multiset of pairs
//! `(character, length)` matters up to isomorphism, so that is all we store.

use crate::chargroup::{Character, CharacterContext};

/// Multiset of Jordan blocks `(chi, len)`, kept sorted for structural equality.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct TModule {
    blocks: Vec<(Character, usize)>,
}

impl TModule {
    pub fn zero() -> Self {
        TModule::default()
    }

    /// Single Jordan block `chi^(len)`.
    pub fn block(chi: Character, len: usize) -> Self {
        assert!(len >= 1, "Jordan block length must be positive");
        TModule { blocks: vec![(chi, len)] }
    }

    pub fn from_blocks(mut blocks: Vec<(Character, usize)>) -> Self {
        assert!(blocks.iter().all(|&(_, l)| l >= 1));
        blocks.sort();
        TModule { blocks }
    }

    /// The unique cyclic module with the given semisimplification: each
    /// character contributes one block whose length is its multiplicity.
    pub fn cyclic_from_multiset(chars: &[Character]) -> Self {
        let mut sorted = chars.to_vec();
        sorted.sort();
        let mut blocks: Vec<(Character, usize)> = Vec::new();
        for ch in sorted {
            match blocks.last_mut() {
                Some((prev, len)) if *prev == ch => *len += 1,
                _ => blocks.push((ch, 1)),
            }
        }
        TModule { blocks }
    }

    /// One length-one block per listed character, multiplicities kept.
    pub fn semisimple(chars: &[Character]) -> Self {
        TModule::from_blocks(chars.iter().map(|c| (c.clone(), 1)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn blocks(&self) -> &[(Character, usize)] {
        &self.blocks
    }

    pub fn dim(&self) -> usize {
        self.blocks.iter().map(|&(_, l)| l).sum()
    }

    /// `(dim X^chi, dim X_chi, dim X^(chi))`: invariants, coinvariants and
    /// the generalized eigenspace. The first two both count blocks.
    pub fn inv_coinv_dims(&self, chi: &Character) -> (usize, usize, usize) {
        let n = self.blocks.iter().filter(|(c, _)| c == chi).count();
        let gen: usize = self.blocks.iter().filter(|(c, _)| c == chi).map(|&(_, l)| l).sum();
        (n, n, gen)
    }

    /// Cyclic means at most one Jordan block per character.
    pub fn is_cyclic(&self) -> bool {
        self.blocks.windows(2).all(|w| w[0].0 != w[1].0)
    }

    pub fn twist(&self, ctx: &CharacterContext, mu: &Character) -> TModule {
        TModule::from_blocks(
            self.blocks.iter().map(|(c, l)| (ctx.mul(c, mu), *l)).collect(),
        )
    }

    pub fn direct_sum(&self, other: &TModule) -> TModule {
        let mut blocks = self.blocks.clone();
        blocks.extend(other.blocks.iter().cloned());
        TModule::from_blocks(blocks)
    }

    /// Multiset of characters with multiplicity = total block length.
    pub fn semisimplify(&self) -> Vec<Character> {
        let mut out = Vec::with_capacity(self.dim());
        for (c, l) in &self.blocks {
            out.extend(std::iter::repeat_n(c.clone(), *l));
        }
        out.sort();
        out
    }

    pub fn render(&self, ctx: &CharacterContext) -> String {
        if self.blocks.is_empty() {
            return "0".to_string();
        }
        self.blocks
            .iter()
            .map(|(c, l)| {
                if *l == 1 {
                    ctx.render(c)
                } else {
                    format!("({})^({l})", ctx.render(c))
                }
            })
            .collect::<Vec<_>>()
            .join(" ⊕ ")
    }

    pub fn to_json(&self, ctx: &CharacterContext) -> serde_json::Value {
        serde_json::Value::Array(
            self.blocks
                .iter()
                .map(|(c, l)| {
                    serde_json::json!({ "character": ctx.render(c), "length": l })
                })
                .collect(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx() -> CharacterContext {
        let mut c = CharacterContext::new();
        c.add_generator("chi1", None, true).unwrap();
        c
    }

    #[test]
    fn eigen_dims() {
        let c = ctx();
        let half = Character::nu_halves(1);
        let x = TModule::from_blocks(vec![(half.clone(), 1), (half.clone(), 1)]);
        assert_eq!(x.inv_coinv_dims(&half), (2, 2, 2));
        let y = TModule::block(Character::nu_halves(-1), 2);
        assert_eq!(y.inv_coinv_dims(&Character::nu_halves(-1)), (1, 1, 2));
        assert_eq!(TModule::zero().inv_coinv_dims(&half), (0, 0, 0));
        let _ = c;
    }

    #[test]
    fn cyclicity() {
        let c = ctx();
        let chi1 = c.named("chi1").unwrap();
        assert!(TModule::block(Character::one(), 3).is_cyclic());
        let twice = TModule::from_blocks(vec![(chi1.clone(), 1), (chi1.clone(), 1)]);
        assert!(!twice.is_cyclic());
        let half = Character::nu_halves(1);
        let mixed =
            TModule::from_blocks(vec![(half.clone(), 1), (c.mul(&chi1, &half), 1)]);
        assert!(mixed.is_cyclic());
    }

    #[test]
    fn twist_sum_semisimplify() {
        let c = ctx();
        let chi1 = c.named("chi1").unwrap();
        let x = TModule::block(Character::one(), 2);
        let t = x.twist(&c, &Character::nu_halves(3));
        assert_eq!(t, TModule::block(Character::nu_halves(3), 2));
        assert_eq!(
            TModule::block(Character::nu_halves(1), 2).semisimplify(),
            vec![Character::nu_halves(1), Character::nu_halves(1)]
        );
        let s = TModule::block(chi1.clone(), 1).direct_sum(&TModule::block(chi1.clone(), 1));
        assert!(!s.is_cyclic());
        assert_eq!(s.dim(), 2);
    }

    #[test]
    fn cyclic_from_multiset_groups_multiplicity() {
        let c = ctx();
        let chi1 = c.named("chi1").unwrap();
        let half = Character::nu_halves(1);
        let x = TModule::cyclic_from_multiset(&[half.clone(), chi1.clone(), half.clone()]);
        assert_eq!(x.blocks(), &[(chi1, 1), (half, 2)]);
        assert!(x.is_cyclic());
    }
}
