//! Finite-length smooth `TS`-modules.
//!
//! `TS` is the affine group of the line, so the irreducible objects are the
//! Schwartz module `S = C_c(k^*)` and the characters `i_*(chi)` inflated from
//! `T`. A module of degree one (one Schwartz constituent) is determined up to
//! isomorphism by the pair `(pi0, kappa)` together with the projection
//! `pi0 -> pi0/kappa`, realized as a fiber product `E[f: X -> Y]` of the
//! universal extension over `Y = X/ker f`.
//!
//! We store a module as a finite trivial-`S` part plus a multiset of
//! degree-one atoms. Extension data between atoms is not representable;
//! operations that would need it fail with [`TsError::OutsideComputableClass`].
//! Atoms are kept canonical: any Jordan block killed entirely by the
//! projection splits off into the finite part, so an atom's `pi0` is always
//! cyclic and every block survives with positive quotient length.

use crate::chargroup::{Character, CharacterContext};
use crate::tmod::TModule;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TsError {
    /// `universal_extension` needs a cyclic module.
    NotCyclic,
    /// The quotient of a fiber product must have at most one block per character.
    MonodromyViolation,
    /// Quotient lengths must satisfy `0 <= l <= len` blockwise.
    BadQuotientSpec,
    /// The Mellin transform of this summand is not determined.
    OutsideComputableClass(String),
}

impl fmt::Display for TsError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TsError::NotCyclic => write!(f, "module is not cyclic"),
            TsError::MonodromyViolation => {
                write!(f, "quotient violates the one-block-per-character bound")
            }
            TsError::BadQuotientSpec => write!(f, "quotient length out of range"),
            TsError::OutsideComputableClass(s) => {
                write!(f, "Mellin transform undetermined on summand {s}")
            }
        }
    }
}

impl std::error::Error for TsError {}

/// A degree-one module `E[f: pi0 -> Y]`, canonical form.
///
/// `quot[i]` is the length of the image of the `i`-th block of `pi0` in `Y`;
/// canonically `1 <= quot[i] <= len_i` and `pi0` is cyclic. The Schwartz
/// module itself is the atom with empty `pi0`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Atom {
    pi0: TModule,
    quot: Vec<usize>,
}

impl Atom {
    fn schwartz() -> Self {
        Atom { pi0: TModule::zero(), quot: Vec::new() }
    }

    pub fn pi0(&self) -> &TModule {
        &self.pi0
    }

    pub fn quot_lengths(&self) -> &[usize] {
        &self.quot
    }

    /// Kernel of the projection: blockwise `len - quot`.
    pub fn kappa(&self) -> TModule {
        TModule::from_blocks(
            self.pi0
                .blocks()
                .iter()
                .zip(&self.quot)
                .filter(|((_, len), &l)| *len > l)
                .map(|((c, len), &l)| (c.clone(), len - l))
                .collect(),
        )
    }

    /// Image of the projection.
    pub fn image(&self) -> TModule {
        TModule::from_blocks(
            self.pi0
                .blocks()
                .iter()
                .zip(&self.quot)
                .filter(|(_, &l)| l > 0)
                .map(|((c, _), &l)| (c.clone(), l))
                .collect(),
        )
    }

    fn is_perfect(&self) -> bool {
        self.pi0.blocks().iter().zip(&self.quot).all(|((_, len), &l)| *len == l)
    }
}

/// Finite-length smooth `TS`-module: finite part plus degree-one atoms.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct TsModule {
    fin: TModule,
    atoms: Vec<Atom>,
}

impl TsModule {
    pub fn zero() -> Self {
        TsModule::default()
    }

    /// The Schwartz module `S`.
    pub fn schwartz() -> Self {
        TsModule { fin: TModule::zero(), atoms: vec![Atom::schwartz()] }
    }

    /// `i_*` of a finite `T`-module: trivial `S`-action.
    pub fn finite(fin: TModule) -> Self {
        TsModule { fin, atoms: Vec::new() }
    }

    pub fn character(chi: Character) -> Self {
        TsModule::finite(TModule::block(chi, 1))
    }

    /// Universal extension `E[X]` of a cyclic module `X` by `S`; `E[0] = S`.
    pub fn universal_extension(x: TModule) -> Result<Self, TsError> {
        if !x.is_cyclic() {
            return Err(TsError::NotCyclic);
        }
        let quot = x.blocks().iter().map(|&(_, l)| l).collect();
        Ok(TsModule { fin: TModule::zero(), atoms: vec![Atom { pi0: x, quot }] })
    }

    /// Fiber product `E[f: X -> Y]` where `quot[i]` is the surviving length
    /// of block `i`. Blocks killed entirely split off into the finite part.
    pub fn fiber_ext(x: TModule, quot: &[usize]) -> Result<Self, TsError> {
        if quot.len() != x.blocks().len() {
            return Err(TsError::BadQuotientSpec);
        }
        let mut live: Vec<(Character, usize, usize)> = Vec::new();
        let mut dead: Vec<(Character, usize)> = Vec::new();
        for ((c, len), &l) in x.blocks().iter().zip(quot) {
            if l > *len {
                return Err(TsError::BadQuotientSpec);
            }
            if l == 0 {
                dead.push((c.clone(), *len));
            } else {
                live.push((c.clone(), *len, l));
            }
        }
        let mut surviving: Vec<&Character> = live.iter().map(|(c, _, _)| c).collect();
        surviving.sort();
        if surviving.windows(2).any(|w| w[0] == w[1]) {
            return Err(TsError::MonodromyViolation);
        }
        live.sort();
        let pi0 = TModule::from_blocks(live.iter().map(|(c, len, _)| (c.clone(), *len)).collect());
        let quot = live.iter().map(|&(_, _, l)| l).collect();
        Ok(TsModule { fin: TModule::from_blocks(dead), atoms: vec![Atom { pi0, quot }] })
    }

    pub fn direct_sum(&self, other: &TsModule) -> TsModule {
        let mut atoms = self.atoms.clone();
        atoms.extend(other.atoms.iter().cloned());
        atoms.sort();
        TsModule { fin: self.fin.direct_sum(&other.fin), atoms }
    }

    pub fn is_zero(&self) -> bool {
        self.fin.is_zero() && self.atoms.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.atoms.len()
    }

    pub fn atoms(&self) -> &[Atom] {
        &self.atoms
    }

    pub fn finite_part(&self) -> &TModule {
        &self.fin
    }

    pub fn pi0(&self) -> TModule {
        let mut out = self.fin.clone();
        for a in &self.atoms {
            out = out.direct_sum(&a.pi0);
        }
        out
    }

    pub fn kappa(&self) -> TModule {
        let mut out = self.fin.clone();
        for a in &self.atoms {
            out = out.direct_sum(&a.kappa());
        }
        out
    }

    /// A module is perfect iff it has no `T`-eigenvectors, i.e. `kappa = 0`.
    pub fn is_perfect(&self) -> bool {
        self.fin.is_zero() && self.atoms.iter().all(|a| a.is_perfect())
    }

    /// `(dim M^(T,chi), dim M_(T,chi))`. The defect `coinv - inv` is the degree.
    pub fn dims_t(&self, chi: &Character) -> (usize, usize) {
        let (inv, _, _) = self.kappa().inv_coinv_dims(chi);
        (inv, inv + self.degree())
    }

    /// `M / kappa(M)`: drop the finite part and the per-atom kernels.
    pub fn kirillov_quotient(&self) -> TsModule {
        let mut atoms: Vec<Atom> = self
            .atoms
            .iter()
            .map(|a| {
                let y = a.image();
                let quot = y.blocks().iter().map(|&(_, l)| l).collect();
                Atom { pi0: y, quot }
            })
            .collect();
        atoms.sort();
        TsModule { fin: TModule::zero(), atoms }
    }

    pub fn twist(&self, ctx: &CharacterContext, mu: &Character) -> TsModule {
        let mut atoms: Vec<Atom> = self
            .atoms
            .iter()
            .map(|a| {
                // twisting permutes the sorted blocks, so re-pair the lengths
                let mut pairs: Vec<((Character, usize), usize)> = a
                    .pi0
                    .blocks()
                    .iter()
                    .map(|(c, l)| ((ctx.mul(c, mu), *l), 0usize))
                    .zip(a.quot.iter().copied())
                    .map(|((b, _), q)| (b, q))
                    .collect();
                pairs.sort();
                let pi0 =
                    TModule::from_blocks(pairs.iter().map(|((c, l), _)| (c.clone(), *l)).collect());
                let quot = pairs.iter().map(|&(_, q)| q).collect();
                Atom { pi0, quot }
            })
            .collect();
        atoms.sort();
        TsModule { fin: self.fin.twist(ctx, mu), atoms }
    }

    /// Class in the Grothendieck group: degree and semisimplified `pi0`.
    pub fn grothendieck_class(&self) -> (usize, Vec<Character>) {
        (self.degree(), self.pi0().semisimplify())
    }

    /// Mellin transform `M_rho`, defined on sums of `i_*(Jordan block)`, `S`,
    /// `E[mu]` and `E[mu^(2)]`.
    pub fn mellin_lower(&self, ctx: &CharacterContext, rho: &Character) -> Result<TsModule, TsError> {
        self.mellin(ctx, rho, true)
    }

    /// Derived Mellin transform `M^rho` on the same class of modules.
    pub fn mellin_upper(&self, ctx: &CharacterContext, rho: &Character) -> Result<TsModule, TsError> {
        self.mellin(ctx, rho, false)
    }

    fn mellin(&self, ctx: &CharacterContext, rho: &Character, lower: bool) -> Result<TsModule, TsError> {
        let nu_rho = ctx.mul(&Character::nu_halves(2), rho);
        let nu2_rho = ctx.mul(&Character::nu_halves(4), rho);
        let mut out = TsModule::zero();
        for (c, m) in self.fin.blocks() {
            if lower {
                if *c == nu_rho {
                    // i_*(mu^(m)) -> E[mu^(m) ->> mu]
                    let e = TsModule::fiber_ext(TModule::block(c.clone(), *m), &[1])?;
                    out = out.direct_sum(&e);
                } else {
                    out = out.direct_sum(&TsModule::finite(TModule::block(c.clone(), *m)));
                }
            } else if *c == nu_rho {
                out = out.direct_sum(&TsModule::schwartz());
            }
        }
        for a in &self.atoms {
            if !a.is_perfect() {
                return Err(TsError::OutsideComputableClass(format!("{:?}", a)));
            }
            let blocks = a.pi0.blocks();
            match blocks.len() {
                0 => {
                    // S -> S, M^rho(S) = 0
                    if lower {
                        out = out.direct_sum(&TsModule::schwartz());
                    }
                }
                1 => {
                    let (mu, len) = (&blocks[0].0, blocks[0].1);
                    if !lower {
                        // perfect modules have vanishing M^rho
                        continue;
                    }
                    match len {
                        1 => {
                            if *mu == nu2_rho {
                                out = out.direct_sum(&TsModule::schwartz());
                                out = out.direct_sum(&TsModule::character(mu.clone()));
                            } else {
                                out = out.direct_sum(&TsModule::universal_extension(
                                    TModule::block(mu.clone(), 1),
                                )?);
                            }
                        }
                        2 => {
                            if *mu == nu_rho || *mu == nu2_rho {
                                out = out.direct_sum(&TsModule::fiber_ext(
                                    TModule::block(mu.clone(), 2),
                                    &[1],
                                )?);
                            } else {
                                out = out.direct_sum(&TsModule::universal_extension(
                                    TModule::block(mu.clone(), 2),
                                )?);
                            }
                        }
                        _ => {
                            return Err(TsError::OutsideComputableClass(format!("{:?}", a)));
                        }
                    }
                }
                _ => {
                    return Err(TsError::OutsideComputableClass(format!("{:?}", a)));
                }
            }
        }
        Ok(out)
    }

    pub fn to_json(&self, ctx: &CharacterContext) -> serde_json::Value {
        serde_json::json!({
            "fin": self.fin.to_json(ctx),
            "atoms": self.atoms.iter().map(|a| {
                serde_json::json!({ "pi0": a.pi0.to_json(ctx), "quot": a.quot })
            }).collect::<Vec<_>>(),
        })
    }

    pub fn render(&self, ctx: &CharacterContext) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for a in &self.atoms {
            if a.pi0.is_zero() {
                parts.push("S".to_string());
            } else if a.is_perfect() {
                parts.push(format!("E[{}]", a.pi0.render(ctx)));
            } else {
                parts.push(format!("E[{} -> {}]", a.pi0.render(ctx), a.image().render(ctx)));
            }
        }
        for (c, l) in self.fin.blocks() {
            if *l == 1 {
                parts.push(format!("i_*({})", ctx.render(c)));
            } else {
                parts.push(format!("i_*(({})^({l}))", ctx.render(c)));
            }
        }
        parts.join(" ⊕ ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx() -> CharacterContext {
        let mut c = CharacterContext::new();
        c.add_generator("chi", None, true).unwrap();
        c.add_generator("rho", None, true).unwrap();
        c
    }

    #[test]
    fn schwartz_basics() {
        let s = TsModule::schwartz();
        assert_eq!(s.degree(), 1);
        assert!(s.pi0().is_zero());
        assert!(s.kappa().is_zero());
        assert!(s.is_perfect());
    }

    #[test]
    fn fiber_ext_kernel() {
        let c = ctx();
        let chi = c.named("chi").unwrap();
        // E[chi^(2) ->> chi]
        let m = TsModule::fiber_ext(TModule::block(chi.clone(), 2), &[1]).unwrap();
        assert_eq!(m.degree(), 1);
        assert_eq!(m.pi0(), TModule::block(chi.clone(), 2));
        assert_eq!(m.kappa(), TModule::block(chi.clone(), 1));
        assert!(!m.is_perfect());
        // i_*(nu^-3/2) has degree zero
        let f = TsModule::character(Character::nu_halves(-3));
        assert_eq!(f.degree(), 0);
        assert_eq!(f.pi0(), f.kappa());
    }

    #[test]
    fn perfectness() {
        let c = ctx();
        let chi = c.named("chi").unwrap();
        assert!(TsModule::schwartz().is_perfect());
        assert!(TsModule::universal_extension(TModule::block(chi.clone(), 1))
            .unwrap()
            .is_perfect());
        let mixed = TsModule::character(chi.clone()).direct_sum(&TsModule::schwartz());
        assert!(!mixed.is_perfect());
    }

    #[test]
    fn universal_extension_edge_cases() {
        let c = ctx();
        let chi = c.named("chi").unwrap();
        assert_eq!(TsModule::universal_extension(TModule::zero()).unwrap(), TsModule::schwartz());
        let not_cyclic = TModule::from_blocks(vec![(chi.clone(), 1), (chi.clone(), 1)]);
        assert_eq!(TsModule::universal_extension(not_cyclic), Err(TsError::NotCyclic));
    }

    #[test]
    fn fiber_ext_splits_dead_blocks_and_checks_monodromy() {
        let c = ctx();
        let chi = c.named("chi").unwrap();
        let one = Character::one();
        let x = TModule::from_blocks(vec![(one.clone(), 1), (chi.clone(), 1)]);
        // kill the chi block entirely: chi splits off the atom
        let blocks = x.blocks().to_vec();
        let quot: Vec<usize> =
            blocks.iter().map(|(c0, _)| if *c0 == chi { 0 } else { 1 }).collect();
        let m = TsModule::fiber_ext(x.clone(), &quot).unwrap();
        assert_eq!(m.kappa(), TModule::block(chi.clone(), 1));
        assert_eq!(m.finite_part(), &TModule::block(chi.clone(), 1));
        assert_eq!(m.pi0(), x);
        // two surviving blocks of the same character are rejected
        let bad = TModule::from_blocks(vec![(chi.clone(), 1), (chi.clone(), 1)]);
        assert_eq!(TsModule::fiber_ext(bad, &[1, 1]), Err(TsError::MonodromyViolation));
    }

    #[test]
    fn dims_satisfy_degree_defect() {
        let c = ctx();
        let chi = c.named("chi").unwrap();
        let s = TsModule::schwartz();
        assert_eq!(s.dims_t(&chi), (0, 1));
        let f = TsModule::character(chi.clone());
        assert_eq!(f.dims_t(&chi), (1, 1));
        let e = TsModule::universal_extension(TModule::block(chi.clone(), 1)).unwrap();
        assert_eq!(e.dims_t(&chi), (0, 1));
        assert_eq!(e.dims_t(&Character::nu_halves(7)), (0, 1));
    }

    #[test]
    fn kirillov_quotient_removes_kernel() {
        let c = ctx();
        let chi = c.named("chi").unwrap();
        let m = TsModule::fiber_ext(TModule::block(chi.clone(), 2), &[1]).unwrap();
        let k = m.kirillov_quotient();
        assert_eq!(k, TsModule::universal_extension(TModule::block(chi.clone(), 1)).unwrap());
        let mixed = TsModule::schwartz().direct_sum(&TsModule::character(chi.clone()));
        assert_eq!(mixed.kirillov_quotient(), TsModule::schwartz());
    }

    #[test]
    fn twist_commutes_with_structure() {
        let c = ctx();
        let chi = c.named("chi").unwrap();
        let mu = Character::nu_halves(2);
        let s = TsModule::schwartz();
        assert_eq!(s.twist(&c, &chi), s);
        let e = TsModule::universal_extension(TModule::block(chi.clone(), 1)).unwrap();
        assert_eq!(
            e.twist(&c, &mu),
            TsModule::universal_extension(TModule::block(c.mul(&chi, &mu), 1)).unwrap()
        );
        let m = TsModule::character(Character::one()).direct_sum(&TsModule::schwartz());
        let t = m.twist(&c, &Character::nu_halves(2));
        assert_eq!(
            t,
            TsModule::character(Character::nu_halves(2)).direct_sum(&TsModule::schwartz())
        );
    }

    #[test]
    fn mellin_case_table() {
        let c = ctx();
        let rho = c.named("rho").unwrap();
        let nu_rho = c.mul(&Character::nu_halves(2), &rho);
        let nu2_rho = c.mul(&Character::nu_halves(4), &rho);

        // M_rho(E[nu^2 rho]) = S + i_*(nu^2 rho)
        let e = TsModule::universal_extension(TModule::block(nu2_rho.clone(), 1)).unwrap();
        let got = e.mellin_lower(&c, &rho).unwrap();
        assert_eq!(got, TsModule::schwartz().direct_sum(&TsModule::character(nu2_rho.clone())));

        // M^rho(i_*(nu rho)) = S
        let f = TsModule::character(nu_rho.clone());
        assert_eq!(f.mellin_upper(&c, &rho).unwrap(), TsModule::schwartz());

        // M_rho(S) = S
        assert_eq!(TsModule::schwartz().mellin_lower(&c, &rho).unwrap(), TsModule::schwartz());

        // an atom with kernel is outside the computable class
        let bad = TsModule::fiber_ext(TModule::block(rho.clone(), 2), &[1]).unwrap();
        assert!(matches!(bad.mellin_lower(&c, &rho), Err(TsError::OutsideComputableClass(_))));
    }
}
