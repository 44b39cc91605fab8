//! Brute-force verification over finite character models, plus a symbolic
//! sweep of the structural identities behind the tables.
//!
//! A finite model replaces the free parameter characters by elements of
//! `Z/N x (1/2)Z` (finite part times bounded `nu`-exponent). Equality in the
//! model is exact, so the combinatorial statements about the character
//! multisets can be checked by enumeration of every valid instantiation.

use crate::chargroup::{Character, CharacterContext};
use crate::gsp4::{self, ops, tables, ExceptionalCase, PairClass, ReprSpec, TypeTag};
use crate::lfactor::LFactorProduct;
use std::collections::BTreeMap;

/// Enumeration substrate: finite part `Z/n`, `nu`-exponent in `(1/2)Z`
/// bounded by `b` in absolute value.
#[derive(Clone, Copy, Debug)]
pub struct FiniteModel {
    pub n: u32,
    pub b: u32,
}

impl FiniteModel {
    pub fn new(n: u32, b: u32) -> Self {
        assert!(n >= 2 && b >= 4, "model too small to witness the tabled coincidences");
        FiniteModel { n, b }
    }

    /// Context with the single finite-order generator `z`.
    pub fn context(&self) -> CharacterContext {
        let mut ctx = CharacterContext::new();
        ctx.add_generator("z", Some(self.n as u64), true).unwrap();
        ctx
    }

    /// Every model character `nu^(h/2) z^e`.
    pub fn all_chars(&self, ctx: &CharacterContext) -> Vec<Character> {
        let z = ctx.named("z").unwrap();
        let bound = 2 * self.b as i64;
        let mut out = Vec::new();
        for h in -bound..=bound {
            for e in 0..self.n as i64 {
                out.push(ctx.mul(&Character::nu_halves(h), &ctx.pow(&z, e)));
            }
        }
        out
    }

    /// The order-two element, when the modulus is even.
    pub fn quadratic(&self, ctx: &CharacterContext) -> Option<Character> {
        if self.n.is_multiple_of(2) {
            let z = ctx.named("z").unwrap();
            Some(ctx.pow(&z, (self.n / 2) as i64))
        } else {
            None
        }
    }
}

/// Result of an enumeration suite.
#[derive(Clone, Debug, Default)]
pub struct Report {
    pub cases: usize,
    pub counterexamples: Vec<String>,
    pub witnesses: BTreeMap<String, usize>,
}

impl Report {
    pub fn ok(&self) -> bool {
        self.counterexamples.is_empty()
    }

    fn witness(&mut self, key: &str) {
        *self.witnesses.entry(key.to_string()).or_insert(0) += 1;
    }

    fn fail(&mut self, msg: String) {
        if self.counterexamples.len() < 64 {
            self.counterexamples.push(msg);
        } else if self.counterexamples.len() == 64 {
            self.counterexamples.push("... further counterexamples suppressed".into());
        }
    }

    pub fn merge(&mut self, other: Report) {
        self.cases += other.cases;
        self.counterexamples.extend(other.counterexamples);
        for (k, v) in other.witnesses {
            *self.witnesses.entry(k).or_insert(0) += v;
        }
    }
}

fn sorted(mut v: Vec<Character>) -> Vec<Character> {
    v.sort();
    v
}

fn inter(a: &[Character], b: &[Character]) -> Vec<Character> {
    let mut b_pool = b.to_vec();
    let mut out = Vec::new();
    for x in a {
        if let Some(i) = b_pool.iter().position(|y| y == x) {
            b_pool.remove(i);
            out.push(x.clone());
        }
    }
    out
}

fn sub_multiset(a: &[Character], b: &[Character]) -> Option<Vec<Character>> {
    let mut pool = a.to_vec();
    for x in b {
        let i = pool.iter().position(|y| y == x)?;
        pool.remove(i);
    }
    Some(pool)
}

fn star(ctx: &CharacterContext, omega: &Character, v: &[Character]) -> Vec<Character> {
    sorted(v.iter().map(|x| ctx.involution(omega, x)).collect())
}

fn contains(v: &[Character], x: &Character) -> bool {
    v.iter().any(|y| y == x)
}

fn dedup(v: &[Character]) -> Vec<Character> {
    let mut out = sorted(v.to_vec());
    out.dedup();
    out
}

fn render_set(ctx: &CharacterContext, v: &[Character]) -> String {
    format!("{{{}}}", v.iter().map(|c| ctx.render(c)).collect::<Vec<_>>().join(", "))
}

/// `pi (x) chi_pi` isomorphic to its dual twist `pi^ (x) omega/chi_pi`.
fn self_dual_datum(
    ctx: &CharacterContext,
    omega: &Character,
    row: &gsp4::SiegelRow,
) -> bool {
    if ctx.pow(&row.chi_pi, 2) != *omega {
        return false;
    }
    match &row.pi {
        gsp4::GlTwoRep::Principal(a, b) => {
            dedup(&[a.clone(), b.clone()]) == dedup(&[ctx.inv(a), ctx.inv(b)])
        }
        gsp4::GlTwoRep::Special(c) => ctx.pow(c, 2).is_one(),
        gsp4::GlTwoRep::OneDim(_) => false,
        gsp4::GlTwoRep::Cuspidal { omega: w, .. } => ctx.pow(w, 2).is_one(),
    }
}

/// Model instantiations of a type, in base normalization. The outer twist is
/// chosen so the whole family is trivially twisted, which is the
/// normalization the expected coincidence sets refer to.
fn instantiations(
    model: &FiniteModel,
    ctx: &CharacterContext,
    ty: TypeTag,
    chars: &[Character],
) -> Vec<ReprSpec> {
    use TypeTag::*;
    let mut out = Vec::new();
    let base = |spec: &mut ReprSpec| {
        if matches!(spec.ty, IIa | IIb) {
            spec.sigma = ctx.inv(&spec.chi1);
        }
    };
    match ty {
        I => {
            for c1 in chars {
                for c2 in chars {
                    let mut s = ReprSpec::new(ty);
                    s.chi1 = c1.clone();
                    s.chi2 = c2.clone();
                    out.push(s);
                }
            }
        }
        IIa | IIb | IIIa | IIIb => {
            for c1 in chars {
                let mut s = ReprSpec::new(ty);
                s.chi1 = c1.clone();
                base(&mut s);
                out.push(s);
            }
        }
        Va | Vb | Vc | Vd => {
            if let Some(xi) = model.quadratic(ctx) {
                let mut s = ReprSpec::new(ty);
                s.xi = xi;
                out.push(s);
            }
        }
        X => {
            for w in chars {
                let mut s = ReprSpec::new(ty);
                s.omega_pi = w.clone();
                out.push(s);
            }
        }
        _ => out.push(ReprSpec::new(ty)),
    }
    out
}

fn jp_types() -> Vec<TypeTag> {
    vec![
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
        TypeTag::X,
        TypeTag::XIa,
        TypeTag::XIb,
    ]
}

/// Expected `Delta- /\ Delta-*` in base normalization.
fn expected_minus_minus_star(_ctx: &CharacterContext, spec: &ReprSpec) -> Vec<Character> {
    use TypeTag::*;
    let one = Character::one();
    match spec.ty {
        IIa | IVc | XIa => vec![one],
        IIIa => sorted(vec![one, spec.chi1.clone()]),
        Va => sorted(vec![one, spec.xi.clone()]),
        VIa => vec![one.clone(), one],
        _ => vec![],
    }
}

/// Re-derive the combinatorial lemmas behind the tables over a finite model.
pub fn check_combinatorics(model: &FiniteModel) -> Report {
    let ctx = model.context();
    let chars = model.all_chars(&ctx);
    let mut rep = Report::default();
    let nu = |h: i64| Character::nu_halves(h);

    for ty in jp_types() {
        for spec in instantiations(model, &ctx, ty, &chars) {
            if !ops::validate(&ctx, &spec).is_empty() {
                continue;
            }
            rep.cases += 1;
            let ds = ops::delta_sets(&ctx, &spec);
            let omega = ops::central_character(&ctx, &spec);
            let info = || {
                format!(
                    "{} chi1={} chi2={} xi={} omega_pi={}",
                    ty,
                    ctx.render(&spec.chi1),
                    ctx.render(&spec.chi2),
                    ctx.render(&spec.xi),
                    ctx.render(&spec.omega_pi)
                )
            };

            let plus_star = star(&ctx, &omega, &ds.delta_plus);
            if ty.is_generic() {
                // generic: Delta+ and Delta+* never meet
                let i = inter(&ds.delta_plus, &plus_star);
                if !i.is_empty() {
                    rep.fail(format!("[++*] {}: got {}", info(), render_set(&ctx, &i)));
                }
            } else {
                // non-generic: Delta+ is involution-stable and a single orbit
                let ps = dedup(&ds.delta_plus);
                let pss = dedup(&plus_star);
                if ps != pss {
                    rep.fail(format!("[+=+*] {}: {} vs {}", info(), render_set(&ctx, &ps), render_set(&ctx, &pss)));
                }
                if let Some(r) = ps.first() {
                    let orbit = dedup(&[r.clone(), ctx.involution(&omega, r)]);
                    if orbit != ps {
                        rep.fail(format!("[orbit] {}: {}", info(), render_set(&ctx, &ps)));
                    }
                }
            }

            // Delta- /\ Delta+ is empty except for the two boundary cases
            let mp = inter(&ds.delta_minus, &ds.delta_plus);
            let expected_mp: Vec<Character> = match ty {
                TypeTag::IIIa if spec.chi1 == nu(2) => vec![nu(2)],
                TypeTag::IIIb if spec.chi1 == nu(2) => vec![Character::one()],
                _ => vec![],
            };
            if sorted(mp.clone()) != sorted(expected_mp.clone()) {
                rep.fail(format!(
                    "[-/\\+] {}: got {} expected {}",
                    info(),
                    render_set(&ctx, &mp),
                    render_set(&ctx, &expected_mp)
                ));
            } else if !mp.is_empty() {
                rep.witness(&format!("intersection_plus_minus/{}@chi1=nu", ty));
            }

            // Delta- /\ Delta-* against the tabled exceptional rows
            let minus_star = star(&ctx, &omega, &ds.delta_minus);
            let mm = sorted(inter(&ds.delta_minus, &minus_star));
            let expected_mm = expected_minus_minus_star(&ctx, &spec);
            if mm != expected_mm {
                rep.fail(format!(
                    "[-/\\-*] {}: got {} expected {}",
                    info(),
                    render_set(&ctx, &mm),
                    render_set(&ctx, &expected_mm)
                ));
            } else if !mm.is_empty() {
                rep.witness(&format!("intersection_minus_minus_star/{}", ty));
            }

            // the mixed intersection singles out the fully induced families
            let plus_star_set = dedup(&plus_star);
            let minus_star_set = dedup(&minus_star);
            let s1: Vec<Character> = dedup(&ds.delta_minus)
                .into_iter()
                .filter(|r| {
                    contains(&plus_star_set, r)
                        && !contains(&minus_star_set, r)
                        && !contains(&ds.delta_plus, r)
                })
                .collect();
            if !s1.is_empty() {
                let allowed: Option<Vec<Character>> = match ty {
                    TypeTag::I => Some(sorted(vec![
                        Character::one(),
                        spec.chi1.clone(),
                        spec.chi2.clone(),
                        ctx.mul(&spec.chi1, &spec.chi2),
                    ])),
                    TypeTag::IIa => Some(sorted(vec![spec.chi1.clone(), ctx.inv(&spec.chi1)])),
                    TypeTag::X => Some(sorted(vec![Character::one(), spec.omega_pi.clone()])),
                    _ => None,
                };
                match allowed {
                    None => rep.fail(format!("[+-*] {}: unexpected {}", info(), render_set(&ctx, &s1))),
                    Some(allow) => {
                        for r in &s1 {
                            let key = ctx.mul(&nu(1), r);
                            if !contains(&allow, &key) {
                                rep.fail(format!(
                                    "[+-*] {}: nu^1/2 rho = {} not in {}",
                                    info(),
                                    ctx.render(&key),
                                    render_set(&ctx, &allow)
                                ));
                            }
                        }
                        rep.witness(&format!("exceptional_fully_induced/{}", ty));
                    }
                }
            }
            let s2: Vec<Character> = dedup(&ds.delta_minus)
                .into_iter()
                .filter(|r| contains(&minus_star_set, r) && contains(&ds.delta_plus, r))
                .collect();
            if !s2.is_empty() {
                if ty == TypeTag::IIIa && spec.chi1 == nu(2) && s2 == vec![nu(2)] {
                    rep.witness("exceptional_triple/IIIa@(nu,nu)");
                } else {
                    rep.fail(format!("[triple] {}: {}", info(), render_set(&ctx, &s2)));
                }
            }

            // orbit classification for generic types
            if ty.is_generic() {
                let mut panel: Vec<Character> = Vec::new();
                panel.extend(ds.delta_plus.iter().cloned());
                panel.extend(ds.delta_minus.iter().cloned());
                panel.extend(plus_star_set.iter().cloned());
                panel.extend(minus_star_set.iter().cloned());
                panel.push(Character::one());
                panel.push(ctx.mul(&nu(1), &ctx.named("z").unwrap()));
                panel.push(ctx.mul(&nu(6), &ctx.pow(&ctx.named("z").unwrap(), 2)));
                for rho in dedup(&panel) {
                    match ops::exceptional_case(&ctx, &spec, &rho) {
                        Err(e) => rep.fail(format!("[cases] {}: {}", info(), e)),
                        Ok((case, repr)) => {
                            if contains(&ds.delta_plus, &repr) {
                                rep.fail(format!(
                                    "[cases] {}: representative {} hits Delta+",
                                    info(),
                                    ctx.render(&repr)
                                ));
                            }
                            match case {
                                ExceptionalCase::FullyInducedNonOrdinary => {
                                    if !matches!(ty, TypeTag::I | TypeTag::IIa | TypeTag::X) {
                                        rep.fail(format!(
                                            "[cases] {}: fully induced case on wrong type (rho={})",
                                            info(),
                                            ctx.render(&rho)
                                        ));
                                    }
                                    rep.witness(&format!("cases_fully_induced/{}", ty));
                                }
                                ExceptionalCase::Extraordinary => {
                                    if !matches!(
                                        ty,
                                        TypeTag::IIa | TypeTag::Va | TypeTag::VIa | TypeTag::XIa
                                    ) {
                                        rep.fail(format!(
                                            "[cases] {}: extraordinary case on wrong type (rho={})",
                                            info(),
                                            ctx.render(&rho)
                                        ));
                                    }
                                    // boundary obstruction: the trivial character sits in the
                                    // Klingen multiset exactly for the non-perfect family
                                    let obstructed = contains(&ds.delta_q, &Character::one());
                                    if obstructed != (ty == TypeTag::VIa) {
                                        rep.fail(format!(
                                            "[cases] {}: Klingen obstruction mismatch",
                                            info()
                                        ));
                                    }
                                    rep.witness(&format!("cases_extraordinary/{}", ty));
                                }
                                ExceptionalCase::IIIaSpecial => {
                                    if ty != TypeTag::IIIa {
                                        rep.fail(format!("[cases] {}: IIIa-special on wrong type", info()));
                                    }
                                    rep.witness("cases_IIIa_special");
                                }
                                ExceptionalCase::NonExceptional => {}
                            }
                        }
                    }
                }
            }

            // Delta+(kernel) = {rho+, rho-} rowwise, disjoint from the dual datum
            if ty.is_generic() {
                if let Ok(rows) = ops::siegel_data(&ctx, &spec) {
                    for row in rows {
                        if row.kernel.len() != 1 || row.pi.one_dim().is_some() {
                            continue;
                        }
                        // the kernel lemma assumes the datum is not isomorphic
                        // to its dual twist
                        if self_dual_datum(&ctx, &omega, &row) {
                            continue;
                        }
                        let kty = row.kernel[0];
                        let mut kspec = spec.clone();
                        kspec.ty = kty;
                        if matches!(kty, TypeTag::IIa | TypeTag::IIb) {
                            kspec.sigma = ctx.inv(&kspec.chi1);
                        } else {
                            kspec.sigma = Character::one();
                        }
                        let kds = ops::delta_sets(&ctx, &kspec);
                        let expected = dedup(&[row.rho_plus.clone(), row.rho_minus.clone()]);
                        if dedup(&kds.delta_plus) != expected {
                            rep.fail(format!(
                                "[kernel] {} row {}: Delta+({}) = {} vs {}",
                                info(),
                                row.render(&ctx),
                                kty,
                                render_set(&ctx, &kds.delta_plus),
                                render_set(&ctx, &expected)
                            ));
                        }
                        // dual datum
                        let dual_chi = ctx.involution(&omega, &row.chi_pi);
                        let dual_plus = ctx.mul(&nu(-1), &dual_chi);
                        let dual = dedup(&[dual_plus.clone(), ctx.involution(&omega, &dual_plus)]);
                        if !inter(&expected, &dual).is_empty() {
                            rep.fail(format!("[kernel-dual] {} row {}", info(), row.render(&ctx)));
                        }
                        rep.witness(&format!("kernel_delta_plus/{}", ty));
                    }
                }
            }
        }
    }

    // mirrored boundary rows of the mixed intersection, outside the
    // normalization's validity range, reached through the parameter flip
    for (ty, chi1, expected) in [
        (TypeTag::IIIa, nu(-2), vec![Character::one()]),
        (TypeTag::IIIb, nu(-2), vec![nu(-2)]),
    ] {
        let mut spec = ReprSpec::new(ty);
        spec.chi1 = chi1;
        let ds = ops::delta_sets(&ctx, &spec);
        let got = sorted(inter(&ds.delta_minus, &ds.delta_plus));
        if got != sorted(expected.clone()) {
            rep.fail(format!(
                "[mirror -/\\+] {}: got {} expected {}",
                ty,
                render_set(&ctx, &got),
                render_set(&ctx, &expected)
            ));
        } else {
            rep.witness(&format!("intersection_plus_minus_mirror/{}@chi1=nu^-1", ty));
        }
    }

    rep
}

/// Representative Bessel characters for a symbolic sweep: every element of
/// `Delta+`, `Delta-`, their duals, one generic character, and all the
/// involution partners.
fn rho_panel(ctx: &CharacterContext, spec: &ReprSpec) -> Vec<Character> {
    let ds = ops::delta_sets(ctx, spec);
    let omega = ops::central_character(ctx, spec);
    let mut panel: Vec<Character> = Vec::new();
    panel.extend(ds.delta_plus.iter().cloned());
    panel.extend(ds.delta_minus.iter().cloned());
    panel.extend(star(ctx, &omega, &ds.delta_minus));
    panel.push(ctx.named("rho0").unwrap());
    let partners: Vec<Character> = panel.iter().map(|r| ctx.involution(&omega, r)).collect();
    panel.extend(partners);
    dedup(&panel)
}

/// Symbolic sweep of the structural identities across all types and a
/// representative Bessel-character panel.
pub fn check_tables() -> Report {
    let mut rep = Report::default();
    for ty in TypeTag::ALL {
        let ctx = tables::standard_context();
        let spec = tables::generic_spec(&ctx, ty);
        let omega = ops::central_character(&ctx, &spec);
        let ds = ops::delta_sets(&ctx, &spec);

        // multiset inclusions
        if sub_multiset(&ds.delta_tilde_split, &ds.delta0).is_none()
            || sub_multiset(&ds.delta, &ds.delta_tilde_split).is_none()
        {
            rep.fail(format!("{ty}: Delta0 <= Delta~ <= Delta fails"));
        }
        match sub_multiset(&ds.delta_tilde_split, &ds.delta0) {
            Some(d1) => {
                if sorted(d1) != ds.delta1_split {
                    rep.fail(format!("{ty}: Delta~ minus Delta0 != Delta1"));
                }
            }
            None => rep.fail(format!("{ty}: Delta~ minus Delta0 != Delta1")),
        }

        let mut regulars: Vec<LFactorProduct> = Vec::new();
        for rho in rho_panel(&ctx, &spec) {
            rep.cases += 1;
            let rho_star = ctx.involution(&omega, &rho);
            let (exists, degree) = ops::has_split_bessel(&ctx, &spec, &rho);
            let (exists_star, _) = ops::has_split_bessel(&ctx, &spec, &rho_star);
            if exists != exists_star {
                rep.fail(format!("{ty}: existence not self-dual at {}", ctx.render(&rho)));
            }
            let module = match ops::bessel_module(&ctx, &spec, &rho) {
                Ok(m) => m,
                Err(e) => {
                    rep.fail(format!("{ty}: bessel_module failed: {e}"));
                    continue;
                }
            };
            let module_star = ops::bessel_module(&ctx, &spec, &rho_star).unwrap();
            if module != module_star {
                rep.fail(format!("{ty}: Bessel module not self-dual at {}", ctx.render(&rho)));
            }
            if module.degree() != degree {
                rep.fail(format!("{ty}: degree mismatch at {}", ctx.render(&rho)));
            }
            let upper = ops::beta_upper(&ctx, &spec, &rho).unwrap();

            // Grothendieck bookkeeping: [beta_rho] - [beta^rho] = (m_Pi, Delta0)
            let (dl, ssl) = module.grothendieck_class();
            let (du, ssu) = upper.grothendieck_class();
            if dl != du + ty.whittaker_multiplicity() {
                rep.fail(format!("{ty}: degree bookkeeping fails at {}", ctx.render(&rho)));
            }
            match sub_multiset(&ssl, &ssu) {
                Some(diff) => {
                    if sorted(diff) != ds.delta0 {
                        rep.fail(format!(
                            "{ty}: constituent bookkeeping fails at {}",
                            ctx.render(&rho)
                        ));
                    }
                }
                None => rep.fail(format!(
                    "{ty}: constituent bookkeeping fails at {}",
                    ctx.render(&rho)
                )),
            }

            // monodromy bound, with the designed exception
            let pi0 = module.pi0();
            for (chi, _) in pi0.blocks() {
                let (inv, _, _) = pi0.inv_coinv_dims(chi);
                let exceptional = ty == TypeTag::VIa
                    && ctx.equals(&rho, &ops::mu_twist(&ctx, &spec)).is_equal();
                let bound = if exceptional { 2 } else { 1 };
                if inv > bound {
                    rep.fail(format!(
                        "{ty}: monodromy bound fails at {} for {}",
                        ctx.render(&rho),
                        ctx.render(chi)
                    ));
                }
            }

            // kappa + Kirillov quotient partition the constituents
            let mut lhs = module.kappa().semisimplify();
            lhs.extend(module.kirillov_quotient().pi0().semisimplify());
            if sorted(lhs) != module.pi0().semisimplify() {
                rep.fail(format!("{ty}: constituent partition fails at {}", ctx.render(&rho)));
            }

            if exists {
                // kappa occurs exactly in the exceptional classes, on the
                // critical character of the representative
                if ty.is_generic() {
                    let (case, repr) = ops::exceptional_case(&ctx, &spec, &rho).unwrap();
                    let kappa = module.kappa();
                    let expect_kappa = matches!(
                        case,
                        ExceptionalCase::FullyInducedNonOrdinary | ExceptionalCase::Extraordinary
                    );
                    if expect_kappa != !kappa.is_zero() {
                        rep.fail(format!(
                            "{ty}: kappa/exceptional mismatch at {} ({case})",
                            ctx.render(&rho)
                        ));
                    }
                    if !kappa.is_zero() {
                        let crit = ctx.mul(&Character::nu_halves(1), &repr);
                        if kappa.semisimplify() != vec![crit] {
                            rep.fail(format!(
                                "{ty}: kappa is not the critical character at {}",
                                ctx.render(&rho)
                            ));
                        }
                    }
                } else if !module.is_perfect() {
                    rep.fail(format!(
                        "{ty}: split Bessel module of a non-generic type must be perfect"
                    ));
                }
                match ops::regular_lfactor(&ctx, &spec, &rho, &Character::one()) {
                    Err(e) => rep.fail(format!("{ty}: regular L-factor failed: {e}")),
                    Ok(reg) => {
                        let kl = ops::kl_lfactor(&ctx, &spec, &rho).unwrap();
                        if !LFactorProduct::divides(&kl, &reg) {
                            rep.fail(format!("{ty}: L-divisibility fails at {}", ctx.render(&rho)));
                        }
                        regulars.push(reg);
                    }
                }
            }

            // filtration bound: the Bessel-module constituents are covered by
            // the graded pieces, for every inducing datum
            if let Ok(rows) = ops::siegel_data(&ctx, &spec) {
                for row in &rows {
                    let f = ops::bessel_filtration(&ctx, row, &rho);
                    let mut cover = f.i3.pi0().semisimplify();
                    cover.extend(f.i2_ss.semisimplify());
                    cover.extend(f.i1.pi0().semisimplify());
                    cover.extend(f.i0.pi0().semisimplify());
                    if exists && sub_multiset(&sorted(cover), &module.pi0().semisimplify()).is_none()
                    {
                        rep.fail(format!(
                            "{ty}: filtration does not cover the module at {} (row {})",
                            ctx.render(&rho),
                            row.render(&ctx)
                        ));
                    }
                    // degree additivity through the kernel constituent
                    if ty.is_generic() && row.kernel.len() == 1 {
                        let mut kspec = spec.clone();
                        kspec.ty = row.kernel[0];
                        let (_, kdeg) = ops::has_split_bessel(&ctx, &kspec, &rho);
                        let total = 1 + kdeg;
                        match ops::classify_pair(&ctx, row, &rho) {
                            PairClass::Ordinary => {
                                if total != 1 {
                                    rep.fail(format!(
                                        "{ty}: ordinary datum with induced degree {total}"
                                    ));
                                }
                            }
                            PairClass::Extraordinary => {
                                if total != 2 {
                                    rep.fail(format!(
                                        "{ty}: extraordinary datum with induced degree {total}"
                                    ));
                                }
                            }
                            PairClass::NonOrdinary => {
                                if !(1..=2).contains(&total) {
                                    rep.fail(format!(
                                        "{ty}: non-ordinary datum with induced degree {total}"
                                    ));
                                }
                            }
                        }
                    }
                    // duality of the distinguished characters
                    let rowo = row.omega(&ctx);
                    if ctx.involution(&rowo, &row.rho_plus) != row.rho_minus {
                        rep.fail(format!("{ty}: rho- is not dual to rho+ in {}", row.render(&ctx)));
                    }
                }
            }
        }
        // independence of the regular factor from the splitting character
        if let Some(first) = regulars.first() {
            if regulars.iter().any(|l| l != first) {
                rep.fail(format!("{ty}: regular L-factor depends on the Bessel character"));
            }
        }
    }
    rep
}
