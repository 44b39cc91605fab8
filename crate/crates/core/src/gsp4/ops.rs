//! Operations on representation specs: validation, multisets, Bessel model
//! existence, Bessel modules, and L-factors.

use crate::chargroup::{Character, CharacterContext};
use crate::gsp4::data;
use crate::gsp4::{
    DeltaSets, ExceptionalCase, FiltrationReport, Gsp4Error, PairClass, ReprSpec, SiegelRow,
    TypeTag,
};
use crate::lfactor::LFactorProduct;
use crate::tmod::TModule;
use crate::tsmod::TsModule;

fn nu(halves: i64) -> Character {
    Character::nu_halves(halves)
}

/// The twist carrying the base normalization into the representation's own
/// parameterization. For most types this is `sigma`; the `IIa`/`IIb` family
/// is parameterized through `chi1 sigma`.
pub fn mu_twist(ctx: &CharacterContext, spec: &ReprSpec) -> Character {
    match spec.ty {
        TypeTag::IIa | TypeTag::IIb => ctx.mul(&spec.chi1, &spec.sigma),
        _ => spec.sigma.clone(),
    }
}

/// Evaluate the validity conditions; an empty list means the parameters are valid.
pub fn validate(ctx: &CharacterContext, spec: &ReprSpec) -> Vec<String> {
    data::violated_conditions(ctx, spec)
}

fn check_valid(ctx: &CharacterContext, spec: &ReprSpec) -> Result<(), Gsp4Error> {
    let v = validate(ctx, spec);
    if v.is_empty() {
        Ok(())
    } else {
        Err(Gsp4Error::InvalidSpec(v))
    }
}

/// Central character of the representation.
pub fn central_character(ctx: &CharacterContext, spec: &ReprSpec) -> Character {
    let mu = mu_twist(ctx, spec);
    ctx.mul(&data::omega_base(ctx, spec), &ctx.pow(&mu, 2))
}

fn twist_all(ctx: &CharacterContext, v: &[Character], mu: &Character) -> Vec<Character> {
    let mut out: Vec<Character> = v.iter().map(|c| ctx.mul(c, mu)).collect();
    out.sort();
    out
}

/// All seven multisets, in the representation's parameterization. The Klingen
/// multiset is twist-invariant and is reported as stored.
pub fn delta_sets(ctx: &CharacterContext, spec: &ReprSpec) -> DeltaSets {
    let mu = mu_twist(ctx, spec);
    let (d, dt, d0, d1, dq) = data::delta_base(ctx, spec);
    let delta0 = twist_all(ctx, &d0, &mu);
    let delta_plus = twist_all(ctx, &delta0, &nu(1));
    let delta_minus = twist_all(ctx, &delta0, &nu(-1));
    let mut delta_q = dq;
    delta_q.sort();
    DeltaSets {
        delta: twist_all(ctx, &d, &mu),
        delta_tilde_split: twist_all(ctx, &dt, &mu),
        delta0,
        delta1_split: twist_all(ctx, &d1, &mu),
        delta_plus,
        delta_minus,
        delta_q,
    }
}

/// Set membership decided through the context so generic-position
/// assumptions land in the audit log.
fn member(ctx: &CharacterContext, rho: &Character, set: &[Character]) -> bool {
    set.iter().any(|x| ctx.equals(rho, x).is_equal())
}

/// Does `rho` give a split Bessel model, and the degree of the Bessel module.
pub fn has_split_bessel(
    ctx: &CharacterContext,
    spec: &ReprSpec,
    rho: &Character,
) -> (bool, usize) {
    if spec.ty.is_generic() {
        return (true, 1);
    }
    let ds = delta_sets(ctx, spec);
    if member(ctx, rho, &ds.delta_plus) {
        (true, 1)
    } else {
        (false, 0)
    }
}

/// Warnings about parameter coincidences outside the tables' generic position.
pub fn degeneracy_warnings(ctx: &CharacterContext, spec: &ReprSpec) -> Vec<String> {
    let ds = delta_sets(ctx, spec);
    let mut out = Vec::new();
    if !matches!(spec.ty, TypeTag::VIa | TypeTag::VId) {
        let dup = ds.delta_tilde_split.windows(2).any(|w| w[0] == w[1]);
        if dup {
            out.push(
                "coincident Jacquet constituents: tables are applied literally, \
                 the monodromy filtration may degenerate"
                    .to_string(),
            );
        }
    }
    out
}

/// The inducing data on the Siegel Levi with the representation as quotient.
pub fn siegel_data(ctx: &CharacterContext, spec: &ReprSpec) -> Result<Vec<SiegelRow>, Gsp4Error> {
    let rows = data::siegel_rows_base(ctx, spec).ok_or(Gsp4Error::NoSiegelData)?;
    let mu = mu_twist(ctx, spec);
    Ok(rows.iter().map(|r| r.twist(ctx, &mu)).collect())
}

/// Ordinary / non-ordinary / extraordinary for one inducing datum.
pub fn classify_pair(ctx: &CharacterContext, row: &SiegelRow, rho: &Character) -> PairClass {
    if row.pi.one_dim().is_some() {
        return PairClass::Ordinary;
    }
    let hit_plus = ctx.equals(rho, &row.rho_plus).is_equal();
    let hit_minus = ctx.equals(rho, &row.rho_minus).is_equal();
    match (hit_plus, hit_minus) {
        (false, false) => PairClass::Ordinary,
        (true, true) => PairClass::Extraordinary,
        _ => PairClass::NonOrdinary,
    }
}

/// Graded pieces of the Bessel filtration of the induced representation of a
/// Siegel row, normalized, with the derived pieces at each level.
pub fn bessel_filtration(
    ctx: &CharacterContext,
    row: &SiegelRow,
    rho: &Character,
) -> FiltrationReport {
    let m_index = (ctx.equals(rho, &row.rho_plus).is_equal() as u8)
        + (ctx.equals(rho, &row.rho_minus).is_equal() as u8);
    let omega = row.omega(ctx);
    let chi_pi = &row.chi_pi;
    // a one-dimensional pi kills the open and closed cells unless rho matches
    let off_cell = row
        .pi
        .one_dim()
        .map(|m| !ctx.equals(rho, &ctx.mul(m, chi_pi)).is_equal())
        .unwrap_or(false);

    let i3 = if off_cell {
        TsModule::zero()
    } else {
        TsModule::universal_extension(TModule::block(chi_pi.clone(), 1)).expect("single block")
    };
    let jac: Vec<Character> =
        row.pi.jacquet_ss(ctx).iter().map(|c| ctx.mul(c, chi_pi)).collect();
    let i2_ss = TModule::semisimple(&jac);
    let level_one = if row.pi.is_cuspidal() {
        TsModule::schwartz()
    } else if let Some(m) = row.pi.one_dim() {
        TsModule::character(ctx.mul(&ctx.mul(&nu(-1), m), chi_pi))
    } else {
        TsModule::universal_extension(TModule::cyclic_from_multiset(&jac))
            .expect("Jacquet data of an irreducible module is cyclic")
    };
    let mut i1 = TsModule::zero();
    for _ in 0..m_index {
        i1 = i1.direct_sum(&level_one);
    }
    let i0 = if off_cell {
        TsModule::zero()
    } else {
        TsModule::character(ctx.div(&omega, chi_pi))
    };
    let on_cell_one_dim = row.pi.one_dim().is_some() && !off_cell;
    let beta3 = if on_cell_one_dim { i3.clone() } else { TsModule::zero() };
    let beta0 = if on_cell_one_dim { i0.clone() } else { TsModule::zero() };
    FiltrationReport {
        m_index,
        i3,
        i2_ss,
        i1: i1.clone(),
        i0,
        beta_upper_i: [beta3, TsModule::zero(), i1, beta0],
    }
}

/// Constituents of the degree-zero Bessel module when `rho` does not split.
fn degree_zero_constituents(
    ctx: &CharacterContext,
    spec: &ReprSpec,
    rho: &Character,
) -> Vec<Character> {
    use TypeTag::*;
    let mu = mu_twist(ctx, spec);
    let t = |h: i64, extra: Option<&Character>| {
        let mut c = ctx.mul(&nu(h), &mu);
        if let Some(e) = extra {
            c = ctx.mul(&c, e);
        }
        c
    };
    match spec.ty {
        IVd => {
            if ctx.equals(rho, &mu).is_equal() {
                vec![t(-3, None)]
            } else {
                vec![]
            }
        }
        Vd => {
            if ctx.equals(rho, &mu).is_equal() {
                vec![t(-1, Some(&spec.xi))]
            } else if ctx.equals(rho, &ctx.mul(&spec.xi, &mu)).is_equal() {
                vec![t(-1, None)]
            } else {
                vec![]
            }
        }
        VIb => {
            if ctx.equals(rho, &mu).is_equal() {
                vec![t(1, None)]
            } else {
                vec![]
            }
        }
        _ => {
            // everything else degenerates to the generic-constituent multiset
            delta_sets(ctx, spec).delta0
        }
    }
}

/// The normalized Bessel module attached to `rho`.
pub fn bessel_module(
    ctx: &CharacterContext,
    spec: &ReprSpec,
    rho: &Character,
) -> Result<TsModule, Gsp4Error> {
    use TypeTag::*;
    check_valid(ctx, spec)?;
    let (exists, _) = has_split_bessel(ctx, spec, rho);
    if !exists {
        let chars = degree_zero_constituents(ctx, spec, rho);
        return Ok(TsModule::finite(TModule::semisimple(&chars)));
    }
    if !spec.ty.has_siegel_jacquet() {
        // Whittaker multiplicity one, no Siegel-Jacquet contribution
        return Ok(TsModule::schwartz());
    }
    let mu = mu_twist(ctx, spec);
    let ds = delta_sets(ctx, spec);
    let tilde = &ds.delta_tilde_split;
    let t = |h: i64, extra: Option<&Character>| {
        let mut c = ctx.mul(&nu(h), &mu);
        if let Some(e) = extra {
            c = ctx.mul(&c, e);
        }
        c
    };
    let module = match spec.ty {
        VIa => {
            if ctx.equals(rho, &mu).is_equal() {
                // monodromy degenerates: character plus universal extension
                TsModule::character(t(1, None)).direct_sum(
                    &TsModule::universal_extension(TModule::block(t(1, None), 1)).unwrap(),
                )
            } else {
                TsModule::universal_extension(TModule::cyclic_from_multiset(tilde)).unwrap()
            }
        }
        Va => {
            if ctx.equals(rho, &mu).is_equal() {
                TsModule::character(t(1, None)).direct_sum(
                    &TsModule::universal_extension(TModule::block(t(1, Some(&spec.xi)), 1))
                        .unwrap(),
                )
            } else if ctx.equals(rho, &ctx.mul(&spec.xi, &mu)).is_equal() {
                TsModule::character(t(1, Some(&spec.xi))).direct_sum(
                    &TsModule::universal_extension(TModule::block(t(1, None), 1)).unwrap(),
                )
            } else {
                TsModule::universal_extension(TModule::cyclic_from_multiset(tilde)).unwrap()
            }
        }
        XIa => {
            if ctx.equals(rho, &mu).is_equal() {
                TsModule::schwartz().direct_sum(&TsModule::character(t(1, None)))
            } else {
                TsModule::universal_extension(TModule::cyclic_from_multiset(tilde)).unwrap()
            }
        }
        I | IIa | X => {
            let x = TModule::cyclic_from_multiset(tilde);
            let kill = if member(ctx, rho, &ds.delta_minus) {
                Some(ctx.mul(&nu(1), rho))
            } else {
                let omega = central_character(ctx, spec);
                let rho_star = ctx.involution(&omega, rho);
                if member(ctx, &rho_star, &ds.delta_minus) {
                    Some(ctx.mul(&nu(1), &rho_star))
                } else {
                    None
                }
            };
            match kill {
                None => TsModule::universal_extension(x).unwrap(),
                Some(crit) => {
                    // the kernel is a single eigenvector at the critical character
                    let quot: Vec<usize> = x
                        .blocks()
                        .iter()
                        .map(|(c, l)| if *c == crit { l - 1 } else { *l })
                        .collect();
                    TsModule::fiber_ext(x, &quot).expect("critical block exists")
                }
            }
        }
        _ => TsModule::universal_extension(TModule::cyclic_from_multiset(tilde)).unwrap(),
    };
    Ok(module)
}

/// The normalized derived Bessel module attached to `rho`.
pub fn beta_upper(
    ctx: &CharacterContext,
    spec: &ReprSpec,
    rho: &Character,
) -> Result<TsModule, Gsp4Error> {
    check_valid(ctx, spec)?;
    if spec.ty.is_generic() || !spec.ty.has_siegel_jacquet() {
        return Ok(TsModule::zero());
    }
    let (exists, _) = has_split_bessel(ctx, spec, rho);
    if exists {
        let ds = delta_sets(ctx, spec);
        return Ok(TsModule::universal_extension(TModule::cyclic_from_multiset(
            &ds.delta1_split,
        ))
        .expect("tabled constituents are cyclic"));
    }
    use TypeTag::*;
    if matches!(spec.ty, IVd | Vd | VIb) {
        let chars = degree_zero_constituents(ctx, spec, rho);
        return Ok(TsModule::finite(TModule::semisimple(&chars)));
    }
    Ok(TsModule::zero())
}

/// Exceptional-case classification; returns the tag and the representative
/// of the orbit `{rho, omega/rho}` the classification refers to.
pub fn exceptional_case(
    ctx: &CharacterContext,
    spec: &ReprSpec,
    rho: &Character,
) -> Result<(ExceptionalCase, Character), Gsp4Error> {
    if !spec.ty.is_generic() {
        return Err(Gsp4Error::NotGeneric);
    }
    let ds = delta_sets(ctx, spec);
    let omega = central_character(ctx, spec);
    let in_pm = |r: &Character| member(ctx, r, &ds.delta_plus) || member(ctx, r, &ds.delta_minus);
    let rho_star = ctx.involution(&omega, rho);
    let rep = if !in_pm(rho) {
        rho.clone()
    } else if !in_pm(&rho_star) {
        rho_star.clone()
    } else if !member(ctx, rho, &ds.delta_plus) {
        rho.clone()
    } else {
        rho_star.clone()
    };
    if !in_pm(&rep) {
        return Ok((ExceptionalCase::NonExceptional, rep));
    }
    let rep_star = ctx.involution(&omega, &rep);
    let case = if spec.ty == TypeTag::IIIa
        && member(ctx, &rep, &ds.delta_minus)
        && member(ctx, &rep_star, &ds.delta_minus)
    {
        ExceptionalCase::IIIaSpecial
    } else if ctx.equals(&rep, &rep_star).is_equal() {
        ExceptionalCase::Extraordinary
    } else {
        ExceptionalCase::FullyInducedNonOrdinary
    };
    Ok((case, rep))
}

/// Regular part of the spinor L-factor of `mu (x) Pi`, for a splitting `rho`.
pub fn regular_lfactor(
    ctx: &CharacterContext,
    spec: &ReprSpec,
    rho: &Character,
    mu: &Character,
) -> Result<LFactorProduct, Gsp4Error> {
    check_valid(ctx, spec)?;
    let (exists, _) = has_split_bessel(ctx, spec, rho);
    if !exists {
        return Err(Gsp4Error::NoBesselModel);
    }
    let chars = data::regular_lfactor_chars(ctx, spec).ok_or(Gsp4Error::NoBesselModel)?;
    let twisted: Vec<Character> = chars.iter().map(|c| ctx.mul(c, mu)).collect();
    Ok(LFactorProduct::of_characters(ctx, &twisted, 0))
}

/// L-factor of the perfect quotient of the Bessel module; the normalization
/// of the stored module already carries the `s - 3/2` shift.
pub fn kl_lfactor(
    ctx: &CharacterContext,
    spec: &ReprSpec,
    rho: &Character,
) -> Result<LFactorProduct, Gsp4Error> {
    check_valid(ctx, spec)?;
    let (exists, _) = has_split_bessel(ctx, spec, rho);
    if !exists {
        return Err(Gsp4Error::NoBesselModel);
    }
    let module = bessel_module(ctx, spec, rho)?;
    Ok(LFactorProduct::of_module(ctx, &module.kirillov_quotient(), 0))
}

/// The forced quotient of the regular L-factor by the Bessel-module part.
pub fn subregular_quotient(
    ctx: &CharacterContext,
    spec: &ReprSpec,
    rho: &Character,
) -> Result<LFactorProduct, Gsp4Error> {
    let reg = regular_lfactor(ctx, spec, rho, &Character::one())?;
    let kl = kl_lfactor(ctx, spec, rho)?;
    if !LFactorProduct::divides(&kl, &reg) {
        return Err(Gsp4Error::DivisibilityFailure);
    }
    Ok(reg.div(&kl))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gsp4::tables::{generic_spec, standard_context};
    use crate::gsp4::ExceptionalCase;

    #[test]
    fn central_characters() {
        let ctx = standard_context();
        let spec = generic_spec(&ctx, TypeTag::I);
        assert_eq!(central_character(&ctx, &spec), ctx.parse_char("chi1 chi2 sigma^2").unwrap());
        let mut iva = generic_spec(&ctx, TypeTag::IVa);
        iva.sigma = Character::one();
        assert!(central_character(&ctx, &iva).is_one());
        let x = generic_spec(&ctx, TypeTag::X);
        assert_eq!(central_character(&ctx, &x), ctx.parse_char("omega_pi sigma^2").unwrap());
        let iia = generic_spec(&ctx, TypeTag::IIa);
        assert_eq!(central_character(&ctx, &iia), ctx.parse_char("chi1^2 sigma^2").unwrap());
    }

    #[test]
    fn pair_classification() {
        let ctx = standard_context();
        let rho0 = ctx.named("rho0").unwrap();
        let iia = generic_spec(&ctx, TypeTag::IIa);
        let rows = siegel_data(&ctx, &iia).unwrap();
        assert_eq!(classify_pair(&ctx, &rows[0], &rho0), PairClass::Ordinary);

        let via = generic_spec(&ctx, TypeTag::VIa);
        let rows = siegel_data(&ctx, &via).unwrap();
        // rho+ = rho- = sigma
        let sigma = ctx.named("sigma").unwrap();
        assert_eq!(classify_pair(&ctx, &rows[0], &sigma), PairClass::Extraordinary);

        let one = generic_spec(&ctx, TypeTag::I);
        let rows = siegel_data(&ctx, &one).unwrap();
        let rho = ctx.parse_char("nu^-1/2 sigma").unwrap();
        assert_eq!(classify_pair(&ctx, &rows[0], &rho), PairClass::NonOrdinary);
        // one-dimensional data are always ordinary
        let iib = generic_spec(&ctx, TypeTag::IIb);
        let rows = siegel_data(&ctx, &iib).unwrap();
        let rp = rows[0].rho_plus.clone();
        assert_eq!(classify_pair(&ctx, &rows[0], &rp), PairClass::Ordinary);
    }

    #[test]
    fn filtration_of_one_dimensional_data() {
        let ctx = standard_context();
        let iib = generic_spec(&ctx, TypeTag::IIb);
        let rows = siegel_data(&ctx, &iib).unwrap();
        // off the distinguished coset the open and closed cells vanish
        let rho0 = ctx.named("rho0").unwrap();
        let rep = bessel_filtration(&ctx, &rows[0], &rho0);
        assert!(rep.i3.is_zero());
        assert!(rep.i0.is_zero());
        assert_eq!(rep.m_index, 0);
        // on the coset they carry the universal extension and the dual character
        let split = ctx.parse_char("chi1 sigma").unwrap();
        let rep = bessel_filtration(&ctx, &rows[0], &split);
        assert_eq!(
            rep.i3,
            TsModule::universal_extension(TModule::block(
                ctx.parse_char("sigma").unwrap(),
                1
            ))
            .unwrap()
        );
        assert_eq!(rep.i0, TsModule::character(ctx.parse_char("chi1^2 sigma").unwrap()));
        assert_eq!(rep.beta_upper_i[0], rep.i3);
        assert_eq!(rep.beta_upper_i[3], rep.i0);
    }

    #[test]
    fn exceptional_case_examples() {
        let ctx = standard_context();
        // extraordinary orbit of the twisted Steinberg family
        let iia = generic_spec(&ctx, TypeTag::IIa);
        let rho = ctx.parse_char("chi1 sigma").unwrap();
        let (case, rep) = exceptional_case(&ctx, &iia, &rho).unwrap();
        assert_eq!(case, ExceptionalCase::Extraordinary);
        assert_eq!(rep, rho);

        let one = generic_spec(&ctx, TypeTag::I);
        let rho = ctx.parse_char("nu^-1/2 sigma").unwrap();
        let (case, _) = exceptional_case(&ctx, &one, &rho).unwrap();
        assert_eq!(case, ExceptionalCase::FullyInducedNonOrdinary);

        let iiia = generic_spec(&ctx, TypeTag::IIIa);
        let rho = ctx.parse_char("chi1 sigma").unwrap();
        let (case, _) = exceptional_case(&ctx, &iiia, &rho).unwrap();
        assert_eq!(case, ExceptionalCase::IIIaSpecial);

        let iva = generic_spec(&ctx, TypeTag::IVa);
        let rho = ctx.parse_char("nu sigma").unwrap();
        let (case, rep) = exceptional_case(&ctx, &iva, &rho).unwrap();
        assert_eq!(case, ExceptionalCase::NonExceptional);
        assert_eq!(rep, ctx.parse_char("nu^-1 sigma").unwrap());

        let nongen = generic_spec(&ctx, TypeTag::IIb);
        assert_eq!(
            exceptional_case(&ctx, &nongen, &ctx.named("rho0").unwrap()),
            Err(Gsp4Error::NotGeneric)
        );
    }

    #[test]
    fn subregular_examples() {
        let ctx = standard_context();
        // perfect rows give the trivial quotient
        let iva = generic_spec(&ctx, TypeTag::IVa);
        let q = subregular_quotient(&ctx, &iva, &ctx.named("rho0").unwrap()).unwrap();
        assert!(q.is_one());
        // kernel rows leave exactly the critical Tate factor
        let one = generic_spec(&ctx, TypeTag::I);
        let rho = ctx.parse_char("nu^-1/2 chi1 sigma").unwrap();
        let q = subregular_quotient(&ctx, &one, &rho).unwrap();
        assert_eq!(q, LFactorProduct::tate(&ctx, &ctx.parse_char("chi1 sigma").unwrap(), 0));
        // degenerate monodromy row: squared factor against a single block
        let via = generic_spec(&ctx, TypeTag::VIa);
        let q = subregular_quotient(&ctx, &via, &ctx.named("sigma").unwrap()).unwrap();
        assert_eq!(q, LFactorProduct::tate(&ctx, &ctx.parse_char("nu^1/2 sigma").unwrap(), 0));
    }
}
