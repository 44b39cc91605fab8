//! Command-line front end: classification queries, Bessel modules, L-factors,
//! table dumps, verification suites and zeta-integral evaluation, with stable
//! JSON output behind `--json`.

use clap::{Args, Parser, Subcommand};
use gsp4_bessel::chargroup::{Character, CharacterContext};
use gsp4_bessel::gsp4::{self, tables, Gsp4Error, ReprSpec, TypeTag};
use gsp4_bessel::verify::{check_combinatorics, check_tables, FiniteModel};
use gsp4_bessel::zeta;
use serde_json::json;

#[derive(Parser, Debug)]
#[command(
    name = "gsp4bessel",
    about = "Split Bessel models and regular spinor L-factors for GSp(4)",
    version
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Validate a spec, list its multisets and classify the Bessel character.
    Classify(SpecArgs),
    /// Compute the Bessel module and its derived companion.
    Bessel(SpecArgs),
    /// Regular, module and quotient L-factors.
    Lfactor(SpecArgs),
    /// Dump every derived table.
    Tables(TableArgs),
    /// Run a verification suite.
    Verify(VerifyArgs),
    /// Evaluate a zeta integral of a coefficient function.
    Zeta(ZetaArgs),
}

#[derive(Args, Debug)]
struct SpecArgs {
    /// Representation type (I, IIa, ..., XIb, CuspGeneric, CuspNonGeneric).
    #[arg(long = "type")]
    ty: String,
    /// Generator declaration `name order=<n|inf> ramified=<bool>`, repeatable.
    /// Without any, the standard generators chi1, chi2, xi (order 2),
    /// omega_pi, sigma, rho0 are declared unramified.
    #[arg(long = "gen")]
    gens: Vec<String>,
    /// Inequation `<character> != 1`, repeatable.
    #[arg(long = "assert")]
    asserts: Vec<String>,
    #[arg(long)]
    chi1: Option<String>,
    #[arg(long)]
    chi2: Option<String>,
    #[arg(long)]
    xi: Option<String>,
    #[arg(long = "omega-pi")]
    omega_pi: Option<String>,
    #[arg(long)]
    sigma: Option<String>,
    /// Bessel character; defaults to a splitting one where it exists.
    #[arg(long)]
    rho: Option<String>,
    /// Twisting character for the L-factor.
    #[arg(long)]
    mu: Option<String>,
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct TableArgs {
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// `combinatorics` or `tables`.
    #[arg(long)]
    suite: String,
    /// Finite model `N,B` for the combinatorics suite.
    #[arg(long, default_value = "5,4")]
    model: String,
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct ZetaArgs {
    /// JSON file with the coefficient function
    /// `{"n0": .., "explicit": [..], "tails": [{"mu": .., "poly": [..]}]}`.
    #[arg(long)]
    coeffs: String,
    /// Value chi(pi) as an exact rational.
    #[arg(long, default_value = "1")]
    chi: String,
    /// Residue cardinality, echoed into the report; log(q) stays formal.
    #[arg(long, default_value = "3")]
    q: String,
    /// Order of the regularized functional to evaluate.
    #[arg(long)]
    order: Option<usize>,
    /// Pole profile `mu:mult,...`; defaults to one more than each tail degree.
    #[arg(long)]
    profile: Option<String>,
    #[arg(long)]
    json: bool,
}

pub struct Outcome {
    pub code: i32,
    pub stdout: String,
}

pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            return Outcome { code: 2, stdout: e.to_string() };
        }
    };
    match dispatch(cli) {
        Ok(s) => Outcome { code: 0, stdout: s },
        Err((code, s)) => Outcome { code, stdout: s },
    }
}

type CmdResult = Result<String, (i32, String)>;

fn fail(json: bool, msg: &str) -> (i32, String) {
    if json {
        (1, serde_json::to_string_pretty(&json!({ "error": msg })).unwrap())
    } else {
        (1, format!("error: {msg}"))
    }
}

fn dispatch(cli: Cli) -> CmdResult {
    match cli.command {
        Command::Classify(a) => spec_command(a, Mode::Classify),
        Command::Bessel(a) => spec_command(a, Mode::Bessel),
        Command::Lfactor(a) => spec_command(a, Mode::Lfactor),
        Command::Tables(a) => {
            let dump = tables::dump_tables();
            if a.json {
                Ok(serde_json::to_string_pretty(&json!({ "tables": dump })).unwrap())
            } else {
                Ok(dump)
            }
        }
        Command::Verify(a) => verify_command(a),
        Command::Zeta(a) => zeta_command(a),
    }
}

enum Mode {
    Classify,
    Bessel,
    Lfactor,
}

fn build_context(args: &SpecArgs) -> Result<CharacterContext, String> {
    let mut ctx =
        if args.gens.is_empty() { tables::standard_context() } else { CharacterContext::new() };
    for g in &args.gens {
        let mut name = None;
        let mut order = None;
        let mut unram = true;
        for tok in g.split_whitespace() {
            if let Some(v) = tok.strip_prefix("order=") {
                order = if v == "inf" {
                    None
                } else {
                    Some(v.parse::<u64>().map_err(|_| format!("bad order `{v}`"))?)
                };
            } else if let Some(v) = tok.strip_prefix("ramified=") {
                unram = !v.parse::<bool>().map_err(|_| format!("bad ramified flag `{v}`"))?;
            } else if name.is_none() {
                name = Some(tok.to_string());
            } else {
                return Err(format!("unexpected token `{tok}` in --gen"));
            }
        }
        let name = name.ok_or("missing generator name in --gen")?;
        ctx.add_generator(&name, order, unram).map_err(|e| e.to_string())?;
    }
    for a in &args.asserts {
        let lhs = a
            .split("!=")
            .next()
            .ok_or("bad --assert, expected `<character> != 1`")?
            .trim();
        let w = ctx.parse_char(lhs).map_err(|e| e.to_string())?;
        ctx.assert_nontrivial(&w).map_err(|e| e.to_string())?;
    }
    Ok(ctx)
}

fn build_spec(ctx: &CharacterContext, args: &SpecArgs, ty: TypeTag) -> Result<ReprSpec, String> {
    let mut spec = ReprSpec::new(ty);
    fn assign(
        ctx: &CharacterContext,
        ty: TypeTag,
        slot: &mut Character,
        given: &Option<String>,
        name: &str,
    ) -> Result<(), String> {
        if let Some(s) = given {
            *slot = ctx.parse_char(s).map_err(|e| e.to_string())?;
        } else if ty.uses_params().contains(&name) {
            if let Ok(c) = ctx.named(name) {
                *slot = c;
            }
        }
        Ok(())
    }
    assign(ctx, ty, &mut spec.chi1, &args.chi1, "chi1")?;
    assign(ctx, ty, &mut spec.chi2, &args.chi2, "chi2")?;
    assign(ctx, ty, &mut spec.xi, &args.xi, "xi")?;
    assign(ctx, ty, &mut spec.omega_pi, &args.omega_pi, "omega_pi")?;
    assign(ctx, ty, &mut spec.sigma, &args.sigma, "sigma")?;
    if matches!(ty, TypeTag::XIa | TypeTag::XIb) && args.omega_pi.is_none() {
        spec.omega_pi = Character::one();
    }
    Ok(spec)
}

fn spec_command(args: SpecArgs, mode: Mode) -> CmdResult {
    let jflag = args.json;
    let ty = TypeTag::parse(&args.ty)
        .ok_or_else(|| fail(jflag, &format!("unknown type `{}`", args.ty)))?;
    let ctx = build_context(&args).map_err(|e| fail(jflag, &e))?;
    let spec = build_spec(&ctx, &args, ty).map_err(|e| fail(jflag, &e))?;
    let rho = match &args.rho {
        Some(s) => ctx.parse_char(s).map_err(|e| fail(jflag, &e.to_string()))?,
        None => tables::split_rho_examples(&ctx, &spec)
            .into_iter()
            .next()
            .unwrap_or_else(Character::one),
    };
    let mu = match &args.mu {
        Some(s) => ctx.parse_char(s).map_err(|e| fail(jflag, &e.to_string()))?,
        None => Character::one(),
    };

    let violations = gsp4::validate(&ctx, &spec);
    let (exists, degree) = gsp4::has_split_bessel(&ctx, &spec, &rho);
    let warnings = gsp4::degeneracy_warnings(&ctx, &spec);
    let mut report = json!({
        "type": ty.name(),
        "params": {
            "chi1": ctx.render(&spec.chi1),
            "chi2": ctx.render(&spec.chi2),
            "xi": ctx.render(&spec.xi),
            "omega_pi": ctx.render(&spec.omega_pi),
            "sigma": ctx.render(&spec.sigma),
        },
        "rho": ctx.render(&rho),
        "violations": violations,
        "exists": exists,
        "degree": degree,
        "omega": ctx.render(&gsp4::central_character(&ctx, &spec)),
        "warnings": warnings,
    });
    let obj = report.as_object_mut().unwrap();

    match mode {
        Mode::Classify => {
            let ds = gsp4::delta_sets(&ctx, &spec);
            obj.insert("delta_sets".into(), ds.to_json(&ctx));
            match gsp4::exceptional_case(&ctx, &spec, &rho) {
                Ok((case, rep)) => {
                    obj.insert("exceptional_case".into(), json!(case.to_string()));
                    obj.insert("orbit_representative".into(), json!(ctx.render(&rep)));
                }
                Err(Gsp4Error::NotGeneric) => {
                    obj.insert("exceptional_case".into(), json!("not applicable (non-generic)"));
                }
                Err(e) => return Err(fail(jflag, &e.to_string())),
            }
        }
        Mode::Bessel => {
            let m =
                gsp4::bessel_module(&ctx, &spec, &rho).map_err(|e| fail(jflag, &e.to_string()))?;
            let b = gsp4::beta_upper(&ctx, &spec, &rho).map_err(|e| fail(jflag, &e.to_string()))?;
            obj.insert("bessel_module".into(), json!(m.render(&ctx)));
            obj.insert("bessel_module_data".into(), m.to_json(&ctx));
            obj.insert("bessel_module_perfect".into(), json!(m.is_perfect()));
            obj.insert("beta_upper".into(), json!(b.render(&ctx)));
            obj.insert("beta_upper_data".into(), b.to_json(&ctx));
        }
        Mode::Lfactor => {
            let reg = gsp4::regular_lfactor(&ctx, &spec, &rho, &mu)
                .map_err(|e| fail(jflag, &e.to_string()))?;
            let kl = gsp4::kl_lfactor(&ctx, &spec, &rho).map_err(|e| fail(jflag, &e.to_string()))?;
            let q = gsp4::subregular_quotient(&ctx, &spec, &rho)
                .map_err(|e| fail(jflag, &e.to_string()))?;
            obj.insert("mu".into(), json!(ctx.render(&mu)));
            obj.insert("L_reg".into(), json!(reg.render(&ctx)));
            obj.insert("L_reg_rational".into(), json!(reg.render_rational(&ctx)));
            obj.insert("L_reg_data".into(), reg.to_json(&ctx));
            obj.insert("L_Kl".into(), json!(kl.render(&ctx)));
            obj.insert("L_sreg_quotient".into(), json!(q.render(&ctx)));
        }
    }
    obj.insert("assumptions".into(), json!(ctx.assumptions()));

    if jflag {
        Ok(serde_json::to_string_pretty(&report).unwrap())
    } else {
        let mut out = String::new();
        let o = report.as_object().unwrap();
        for key in [
            "type",
            "rho",
            "violations",
            "exists",
            "degree",
            "omega",
            "exceptional_case",
            "orbit_representative",
            "bessel_module",
            "bessel_module_perfect",
            "beta_upper",
            "mu",
            "L_reg",
            "L_Kl",
            "L_sreg_quotient",
            "warnings",
        ] {
            if let Some(v) = o.get(key) {
                match v {
                    serde_json::Value::String(s) => out.push_str(&format!("{key}: {s}\n")),
                    other => out.push_str(&format!("{key}: {other}\n")),
                }
            }
        }
        if let Some(ds) = o.get("delta_sets") {
            out.push_str(&format!("delta_sets: {ds}\n"));
        }
        let assumptions = o.get("assumptions").unwrap();
        out.push_str(&format!("assumptions: {assumptions}\n"));
        Ok(out)
    }
}

fn verify_command(a: VerifyArgs) -> CmdResult {
    let jflag = a.json;
    let report = match a.suite.as_str() {
        "combinatorics" => {
            let (n, b) = a
                .model
                .split_once(',')
                .and_then(|(n, b)| Some((n.trim().parse().ok()?, b.trim().parse().ok()?)))
                .ok_or_else(|| fail(jflag, "bad --model, expected `N,B`"))?;
            check_combinatorics(&FiniteModel::new(n, b))
        }
        "tables" => check_tables(),
        other => return Err(fail(jflag, &format!("unknown suite `{other}`"))),
    };
    let payload = json!({
        "suite": a.suite,
        "model": a.model,
        "cases": report.cases,
        "ok": report.ok(),
        "counterexamples": report.counterexamples,
        "witnesses": report.witnesses,
    });
    let out = if jflag {
        serde_json::to_string_pretty(&payload).unwrap()
    } else {
        format!(
            "suite {}: {} cases, {}\n{}",
            a.suite,
            report.cases,
            if report.ok() { "ok" } else { "FAILED" },
            report.counterexamples.join("\n")
        )
    };
    if report.ok() {
        Ok(out)
    } else {
        Err((1, out))
    }
}

fn zeta_command(a: ZetaArgs) -> CmdResult {
    let jflag = a.json;
    let text = std::fs::read_to_string(&a.coeffs)
        .map_err(|e| fail(jflag, &format!("cannot read {}: {e}", a.coeffs)))?;
    let value: serde_json::Value =
        serde_json::from_str(&text).map_err(|e| fail(jflag, &format!("bad JSON: {e}")))?;
    let f = parse_coeff_fn(&value).map_err(|e| fail(jflag, &e))?;
    let chi = zeta::parse_rat(&a.chi).ok_or_else(|| fail(jflag, "bad --chi"))?;
    let z = zeta::zeta_integral(&f, &chi).map_err(|e| fail(jflag, &e.to_string()))?;

    let profile: Vec<(zeta::Rat, usize)> = match &a.profile {
        Some(p) => {
            let mut out = Vec::new();
            for part in p.split(',') {
                let (mu, mult) = part
                    .split_once(':')
                    .ok_or_else(|| fail(jflag, "bad --profile, expected `mu:mult,...`"))?;
                let mu = zeta::parse_rat(mu).ok_or_else(|| fail(jflag, "bad profile mu"))?;
                let mult: usize =
                    mult.trim().parse().map_err(|_| fail(jflag, "bad profile multiplicity"))?;
                out.push((mu, mult));
            }
            out
        }
        None => f.tails.iter().map(|t| (t.mu.clone(), t.poly.len())).collect(),
    };

    let mut payload = json!({
        "q": a.q,
        "chi": a.chi,
        "zeta": z.render(),
        "denominator": z.denominator().iter()
            .map(|(c, m)| json!({"coeff": c.to_string(), "mult": m}))
            .collect::<Vec<_>>(),
    });
    if let Some(order) = a.order {
        let v = zeta::regularized_functional(&f, &chi, &profile, order)
            .map_err(|e| fail(jflag, &e.to_string()))?;
        payload.as_object_mut().unwrap().insert("functional".into(), json!(v.to_string()));
        payload.as_object_mut().unwrap().insert("order".into(), json!(order));
    }
    if jflag {
        Ok(serde_json::to_string_pretty(&payload).unwrap())
    } else {
        let mut out = format!("Z(f, chi, s) = {}   [t = q^-s, q = {}]\n", z.render(), a.q);
        if let Some(v) = payload.get("functional") {
            out.push_str(&format!("I^({}) = {}\n", a.order.unwrap(), v.as_str().unwrap()));
        }
        Ok(out)
    }
}

fn parse_coeff_fn(v: &serde_json::Value) -> Result<zeta::CoeffFn, String> {
    let obj = v.as_object().ok_or("coefficient file must be a JSON object")?;
    let n0 = obj.get("n0").and_then(|x| x.as_i64()).unwrap_or(0);
    fn rat_at(x: &serde_json::Value) -> Result<zeta::Rat, String> {
        match x {
            serde_json::Value::String(s) => {
                zeta::parse_rat(s).ok_or_else(|| format!("bad rational `{s}`"))
            }
            serde_json::Value::Number(n) => {
                zeta::parse_rat(&n.to_string()).ok_or_else(|| format!("bad rational `{n}`"))
            }
            other => Err(format!("bad rational `{other}`")),
        }
    }
    let explicit = obj
        .get("explicit")
        .and_then(|x| x.as_array())
        .map(|a| a.iter().map(rat_at).collect::<Result<Vec<_>, _>>())
        .transpose()?
        .unwrap_or_default();
    let tails = obj
        .get("tails")
        .and_then(|x| x.as_array())
        .map(|a| {
            a.iter()
                .map(|t| {
                    let mu = rat_at(t.get("mu").ok_or("tail needs mu")?)?;
                    let poly = t
                        .get("poly")
                        .and_then(|p| p.as_array())
                        .ok_or("tail needs poly")?
                        .iter()
                        .map(rat_at)
                        .collect::<Result<Vec<_>, _>>()?;
                    Ok::<zeta::Tail, String>(zeta::Tail { mu, poly })
                })
                .collect::<Result<Vec<_>, _>>()
        })
        .transpose()?
        .unwrap_or_default();
    let f = zeta::CoeffFn { n0, explicit, tails };
    f.validate().map_err(|e| e.to_string())?;
    Ok(f)
}
