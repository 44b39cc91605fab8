//! Deterministic text dump of every table the engine derives, in the same
//! cell layout as the standard references. The `verify` CLI subcommand and
//! the golden-file test both consume this.

use crate::chargroup::{Character, CharacterContext};
use crate::gsp4::{ops, ReprSpec, TypeTag};

/// Standard symbolic context: free unramified `chi1`, `chi2`, `omega_pi`,
/// `sigma`, `rho0` and a quadratic `xi`.
pub fn standard_context() -> CharacterContext {
    let mut ctx = CharacterContext::new();
    ctx.add_generator("chi1", None, true).unwrap();
    ctx.add_generator("chi2", None, true).unwrap();
    ctx.add_generator("xi", Some(2), true).unwrap();
    ctx.add_generator("omega_pi", None, true).unwrap();
    ctx.add_generator("sigma", None, true).unwrap();
    ctx.add_generator("rho0", None, true).unwrap();
    let xi = ctx.named("xi").unwrap();
    ctx.assert_nontrivial(&xi).unwrap();
    ctx
}

/// Generic spec for a type: every used parameter is a fresh generator.
pub fn generic_spec(ctx: &CharacterContext, ty: TypeTag) -> ReprSpec {
    let mut spec = ReprSpec::new(ty);
    for p in ty.uses_params() {
        match *p {
            "chi1" => spec.chi1 = ctx.named("chi1").unwrap(),
            "chi2" => spec.chi2 = ctx.named("chi2").unwrap(),
            "xi" => spec.xi = ctx.named("xi").unwrap(),
            "omega_pi" => spec.omega_pi = ctx.named("omega_pi").unwrap(),
            "sigma" => spec.sigma = ctx.named("sigma").unwrap(),
            _ => unreachable!(),
        }
    }
    if matches!(ty, TypeTag::XIa | TypeTag::XIb) {
        spec.omega_pi = Character::one();
    }
    spec
}

/// Same spec but with the outer twist chosen so the base normalization is
/// restored (trivial twist overall).
pub fn base_normalized_spec(ctx: &CharacterContext, ty: TypeTag) -> ReprSpec {
    let mut spec = generic_spec(ctx, ty);
    spec.sigma = match ty {
        TypeTag::IIa | TypeTag::IIb => ctx.inv(&spec.chi1),
        _ => Character::one(),
    };
    spec
}

fn set_str(ctx: &CharacterContext, v: &[Character]) -> String {
    if v.is_empty() {
        "{}".to_string()
    } else {
        format!("{{{}}}", v.iter().map(|c| ctx.render(c)).collect::<Vec<_>>().join(", "))
    }
}

/// Full dump of the derived tables.
pub fn dump_tables() -> String {
    let ctx = standard_context();
    let mut out = String::new();
    let push = |out: &mut String, s: String| {
        out.push_str(&s);
        out.push('\n');
    };

    push(&mut out, "== existence of split Bessel models ==".to_string());
    for ty in TypeTag::ALL {
        let spec = generic_spec(&ctx, ty);
        let line = if ty.is_generic() {
            "all".to_string()
        } else {
            let ds = ops::delta_sets(&ctx, &spec);
            if ds.delta_plus.is_empty() {
                "none".to_string()
            } else {
                let mut uniq = ds.delta_plus.clone();
                uniq.dedup();
                uniq.iter().map(|c| ctx.render(c)).collect::<Vec<_>>().join(", ")
            }
        };
        push(&mut out, format!("{}: {}", ty, line));
    }

    push(&mut out, String::new());
    push(&mut out, "== Siegel inducing data (base normalization) ==".to_string());
    for ty in TypeTag::ALL {
        let spec = base_normalized_spec(&ctx, ty);
        match ops::siegel_data(&ctx, &spec) {
            Err(_) => push(&mut out, format!("{}: -", ty)),
            Ok(rows) => {
                for r in rows {
                    let kernel = if r.kernel.is_empty() {
                        "0".to_string()
                    } else {
                        r.kernel.iter().map(|t| t.name()).collect::<Vec<_>>().join(", ")
                    };
                    push(
                        &mut out,
                        format!(
                            "{}: {} | kernel {} | rho+ {} | rho- {}",
                            ty,
                            r.render(&ctx),
                            kernel,
                            ctx.render(&r.rho_plus),
                            ctx.render(&r.rho_minus)
                        ),
                    );
                }
            }
        }
    }

    push(&mut out, String::new());
    push(&mut out, "== multisets (base normalization) ==".to_string());
    for ty in TypeTag::ALL {
        if !ty.has_siegel_jacquet() {
            continue;
        }
        let spec = base_normalized_spec(&ctx, ty);
        let ds = ops::delta_sets(&ctx, &spec);
        push(&mut out, format!("{}: {}", ty, ds.render(&ctx)));
    }

    push(&mut out, String::new());
    push(iter_filtration(&ctx, &mut out), String::new());

    push(&mut out, "== regular spinor L-factors ==".to_string());
    for ty in TypeTag::ALL {
        let spec = generic_spec(&ctx, ty);
        let rho_panel = split_rho_examples(&ctx, &spec);
        let cell = match rho_panel.first() {
            None => "---".to_string(),
            Some(rho) => ops::regular_lfactor(&ctx, &spec, rho, &Character::one())
                .map(|l| l.render(&ctx))
                .unwrap_or_else(|e| format!("error: {e}")),
        };
        push(&mut out, format!("{}: {}", ty, cell));
    }

    push(&mut out, String::new());
    push(&mut out, "== Bessel modules of degree one ==".to_string());
    for ty in TypeTag::ALL {
        let spec = generic_spec(&ctx, ty);
        for (label, rho) in degree_one_rho_classes(&ctx, &spec) {
            let m = ops::bessel_module(&ctx, &spec, &rho).expect("valid spec");
            let bullet = if m.is_perfect() { " *" } else { "" };
            let mut note = String::new();
            if ty == TypeTag::Va && label.starts_with("rho = sigma") {
                note = "  [deviation-by-design: kernel on the critical character]".to_string();
            }
            push(&mut out, format!("{} | {} | {}{}{}", ty, label, m.render(&ctx), bullet, note));
        }
    }

    push(&mut out, String::new());
    push(&mut out, "== Bessel modules of degree zero ==".to_string());
    for ty in TypeTag::ALL {
        let spec = generic_spec(&ctx, ty);
        for (label, rho) in degree_zero_rho_classes(&ctx, &spec) {
            let m = ops::bessel_module(&ctx, &spec, &rho).expect("valid spec");
            let mut note = String::new();
            if ty == TypeTag::VId {
                note = "  [deviation-by-design: applies to non-splitting rho only]".to_string();
            }
            push(&mut out, format!("{} | {} | {}{}", ty, label, m.render(&ctx), note));
        }
    }

    out
}

fn iter_filtration<'a>(ctx: &CharacterContext, out: &'a mut String) -> &'a mut String {
    out.push_str("== T-modules in the Bessel filtration (base normalization) ==\n");
    for ty in TypeTag::ALL {
        if !ty.has_siegel_jacquet() {
            continue;
        }
        let spec = base_normalized_spec(ctx, ty);
        let rows = match ops::siegel_data(ctx, &spec) {
            Ok(r) => r,
            Err(_) => continue,
        };
        // the table refers to Bessel characters with a split Bessel model
        let rho = match split_rho_examples(ctx, &spec).into_iter().next() {
            Some(r) => r,
            None => {
                out.push_str(&format!("{}: -\n", ty));
                continue;
            }
        };
        let ds = ops::delta_sets(ctx, &spec);
        // the canonical inducing datum: for IIIb the second listed row
        let row = if ty == TypeTag::IIIb { &rows[1] } else { &rows[0] };
        let rep = ops::bessel_filtration(ctx, row, &rho);
        out.push_str(&format!(
            "{}: I3 {} | I2ss {} | I0 {} | pi0 {} | omega {}\n",
            ty,
            rep.i3.render(ctx),
            rep.i2_ss.render(ctx),
            rep.i0.render(ctx),
            set_str(ctx, &ds.delta_tilde_split),
            ctx.render(&row.omega(ctx)),
        ));
    }
    out.push('\n');
    out
}

/// Representative splitting Bessel characters, one per table row class.
pub fn split_rho_examples(ctx: &CharacterContext, spec: &ReprSpec) -> Vec<Character> {
    if spec.ty.is_generic() {
        return vec![ctx.named("rho0").unwrap()];
    }
    let ds = ops::delta_sets(ctx, spec);
    let mut v = ds.delta_plus.clone();
    v.dedup();
    v
}

/// Labeled `rho` representatives for the degree-one table rows of a type.
pub fn degree_one_rho_classes(
    ctx: &CharacterContext,
    spec: &ReprSpec,
) -> Vec<(String, Character)> {
    use TypeTag::*;
    let mu = ops::mu_twist(ctx, spec);
    let rho0 = ctx.named("rho0").unwrap();
    let ds = ops::delta_sets(ctx, spec);
    let omega = ops::central_character(ctx, spec);
    match spec.ty {
        I | IIa | X => {
            let m = ds.delta_minus[0].clone();
            vec![
                ("rho in Delta-".to_string(), m.clone()),
                ("rho in Delta-*".to_string(), ctx.involution(&omega, &m)),
                ("other rho".to_string(), rho0),
            ]
        }
        Va => vec![
            ("rho = sigma".to_string(), mu.clone()),
            ("rho = xi sigma".to_string(), ctx.mul(&spec.xi, &mu)),
            ("other rho".to_string(), rho0),
        ],
        VIa | XIa => vec![
            ("rho = sigma".to_string(), mu.clone()),
            ("other rho".to_string(), rho0),
        ],
        IIIa | IVa | VII | VIIIa | IXa | CuspGeneric => vec![("all rho".to_string(), rho0)],
        _ => {
            // non-generic: one row per splitting character
            split_rho_examples(ctx, spec)
                .into_iter()
                .map(|r| (format!("rho = {}", ctx.render(&r)), r))
                .collect()
        }
    }
}

/// Labeled `rho` representatives for the degree-zero table rows of a type.
pub fn degree_zero_rho_classes(
    ctx: &CharacterContext,
    spec: &ReprSpec,
) -> Vec<(String, Character)> {
    use TypeTag::*;
    let mu = ops::mu_twist(ctx, spec);
    let rho0 = ctx.named("rho0").unwrap();
    match spec.ty {
        IIb | IIIb | IVb | IVc | Vb | Vc | VIc | VId | XIb => {
            vec![("non-splitting rho".to_string(), rho0)]
        }
        IVd => vec![
            ("rho = sigma".to_string(), mu),
            ("other rho".to_string(), rho0),
        ],
        Vd => vec![
            ("rho = sigma".to_string(), mu.clone()),
            ("rho = xi sigma".to_string(), ctx.mul(&spec.xi, &mu)),
            ("other rho".to_string(), rho0),
        ],
        VIb => vec![
            ("rho = sigma".to_string(), mu),
            ("other rho".to_string(), rho0),
        ],
        VIIIb | IXb | CuspNonGeneric => vec![("all rho".to_string(), rho0)],
        _ => vec![],
    }
}

/// Convenience: the generic spec and context used by sweeps and the CLI.
pub fn spec_for(ty: TypeTag) -> (CharacterContext, ReprSpec) {
    let ctx = standard_context();
    let spec = generic_spec(&ctx, ty);
    (ctx, spec)
}

