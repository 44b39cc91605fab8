//! Per-type classification data in the base normalization.
//!
//! Everything here is stated for the representatives with trivial outer
//! twist; `ops` twists on demand. The `Vc` row is generated from `Vb` by the
//! quadratic twist `xi`, which exchanges the two, and is cross-checked in the
//! verification suites.

use crate::chargroup::{Character, CharacterContext};
use crate::gsp4::{GlTwoRep, ReprSpec, SiegelRow, TypeTag};

fn nu(halves: i64) -> Character {
    Character::nu_halves(halves)
}

/// Base-normalization central character.
pub fn omega_base(ctx: &CharacterContext, spec: &ReprSpec) -> Character {
    use TypeTag::*;
    match spec.ty {
        I => ctx.mul(&spec.chi1, &spec.chi2),
        IIa | IIb => Character::one(),
        IIIa | IIIb => spec.chi1.clone(),
        IVa | IVb | IVc | IVd => Character::one(),
        Va | Vb | Vc | Vd => Character::one(),
        VIa | VIb | VIc | VId => Character::one(),
        VII => ctx.mul(&spec.chi1, &spec.omega_pi),
        VIIIa | VIIIb => spec.omega_pi.clone(),
        IXa | IXb => ctx.mul(&spec.xi, &spec.omega_pi),
        X => spec.omega_pi.clone(),
        XIa | XIb => Character::one(),
        CuspGeneric | CuspNonGeneric => spec.omega_pi.clone(),
    }
}

/// The five raw multiset columns `(delta, delta_tilde, delta0, delta1, delta_q)`.
pub type RawDeltaColumns =
    (Vec<Character>, Vec<Character>, Vec<Character>, Vec<Character>, Vec<Character>);

/// Raw multiset columns in base normalization. `delta_tilde` and `delta1`
/// refer to a splitting Bessel character; both are empty when no split
/// Bessel model exists.
pub fn delta_base(ctx: &CharacterContext, spec: &ReprSpec) -> RawDeltaColumns {
    use TypeTag::*;
    let one = Character::one();
    let c1 = &spec.chi1;
    let c1i = ctx.inv(c1);
    let xi = &spec.xi;
    let wp = &spec.omega_pi;
    let m = |a: &Character, b: &Character| ctx.mul(a, b);
    match spec.ty {
        I => {
            let d = vec![one.clone(), c1.clone(), spec.chi2.clone(), m(c1, &spec.chi2)];
            let q = vec![c1.clone(), c1i.clone(), spec.chi2.clone(), ctx.inv(&spec.chi2)];
            (d.clone(), d.clone(), d, vec![], q)
        }
        IIa => {
            let d = vec![c1.clone(), nu(1), c1i.clone()];
            let q = vec![m(c1, &nu(1)), m(&c1i, &nu(1))];
            (d.clone(), d.clone(), d, vec![], q)
        }
        IIb => {
            let d = vec![c1.clone(), nu(-1), c1i.clone()];
            let q = vec![m(c1, &nu(-1)), m(&c1i, &nu(-1))];
            (d.clone(), d, vec![nu(-1)], vec![c1.clone(), c1i.clone()], q)
        }
        IIIa => {
            let d = vec![nu(1), m(c1, &nu(1))];
            (d.clone(), d.clone(), d, vec![], vec![c1.clone(), c1i.clone(), nu(2)])
        }
        IIIb => {
            let d = vec![nu(-1), m(c1, &nu(-1))];
            (d.clone(), d.clone(), d, vec![], vec![c1.clone(), c1i.clone(), nu(-2)])
        }
        IVa => (vec![nu(3)], vec![nu(3)], vec![nu(3)], vec![], vec![nu(4)]),
        IVb => (
            vec![nu(3), nu(-1)],
            vec![nu(3), nu(-1)],
            vec![nu(-1)],
            vec![nu(3)],
            vec![nu(-4), nu(2)],
        ),
        IVc => {
            let d = vec![nu(-3), nu(1)];
            (d.clone(), d.clone(), d, vec![], vec![nu(4), nu(-2)])
        }
        IVd => (vec![nu(-3)], vec![], vec![], vec![], vec![nu(-4)]),
        Va => {
            let d = vec![nu(1), m(xi, &nu(1))];
            (d.clone(), d.clone(), d, vec![], vec![m(xi, &nu(2))])
        }
        Vb => (
            vec![nu(-1), m(xi, &nu(1))],
            vec![nu(-1), m(xi, &nu(1))],
            vec![nu(-1)],
            vec![m(xi, &nu(1))],
            vec![xi.clone()],
        ),
        Vc => {
            // xi-twist of the Vb row; the Klingen multiset is twist-invariant
            (
                vec![m(xi, &nu(-1)), nu(1)],
                vec![m(xi, &nu(-1)), nu(1)],
                vec![m(xi, &nu(-1))],
                vec![nu(1)],
                vec![xi.clone()],
            )
        }
        Vd => (vec![nu(-1), m(xi, &nu(-1))], vec![], vec![], vec![], vec![m(xi, &nu(-1))]),
        VIa => (
            vec![nu(1), nu(1), nu(1)],
            vec![nu(1), nu(1)],
            vec![nu(1), nu(1)],
            vec![],
            vec![nu(2), one.clone()],
        ),
        VIb => (vec![nu(1)], vec![], vec![], vec![], vec![one.clone()]),
        VIc => (vec![nu(-1)], vec![nu(-1)], vec![nu(-1)], vec![], vec![one.clone()]),
        VId => (
            vec![nu(-1), nu(-1), nu(-1)],
            vec![nu(-1), nu(-1)],
            vec![nu(-1)],
            vec![nu(-1)],
            vec![one.clone(), nu(-2)],
        ),
        X => {
            let d = vec![one.clone(), wp.clone()];
            (d.clone(), d.clone(), d, vec![], vec![])
        }
        XIa => (vec![nu(1)], vec![nu(1)], vec![nu(1)], vec![], vec![]),
        XIb => (vec![nu(-1)], vec![nu(-1)], vec![nu(-1)], vec![], vec![]),
        VII | VIIIa | VIIIb | IXa | IXb | CuspGeneric | CuspNonGeneric => {
            (vec![], vec![], vec![], vec![], vec![])
        }
    }
}

/// Validity conditions, reported as human-readable violations.
pub fn violated_conditions(ctx: &CharacterContext, spec: &ReprSpec) -> Vec<String> {
    use TypeTag::*;
    let mut out: Vec<String> = Vec::new();
    fn require_ne(
        ctx: &CharacterContext,
        out: &mut Vec<String>,
        a: &Character,
        b: &Character,
        what: &str,
    ) {
        if ctx.equals(a, b).is_equal() {
            out.push(what.to_string());
        }
    }
    match spec.ty {
        I => {
            let prods = [
                ("chi1", spec.chi1.clone()),
                ("chi2", spec.chi2.clone()),
                ("chi1 chi2", ctx.mul(&spec.chi1, &spec.chi2)),
                ("chi1 chi2^-1", ctx.div(&spec.chi1, &spec.chi2)),
            ];
            for (name, c) in prods {
                require_ne(ctx, &mut out, &c, &nu(2), &format!("{name} != nu"));
                require_ne(ctx, &mut out, &c, &nu(-2), &format!("{name} != nu^-1"));
            }
        }
        IIa | IIb => {
            let sq = ctx.pow(&spec.chi1, 2);
            require_ne(ctx, &mut out, &sq, &nu(2), "chi1^2 != nu");
            require_ne(ctx, &mut out, &sq, &nu(-2), "chi1^2 != nu^-1");
            require_ne(ctx, &mut out, &spec.chi1, &nu(3), "chi1 != nu^3/2");
            require_ne(ctx, &mut out, &spec.chi1, &nu(-3), "chi1 != nu^-3/2");
        }
        IIIa | IIIb => {
            require_ne(ctx, &mut out, &spec.chi1, &Character::one(), "chi1 != 1");
            require_ne(ctx, &mut out, &spec.chi1, &nu(4), "chi1 != nu^2");
            require_ne(ctx, &mut out, &spec.chi1, &nu(-4), "chi1 != nu^-2");
            require_ne(ctx, &mut out, &spec.chi1, &nu(-2), "chi1 != nu^-1");
        }
        Va | Vb | Vc | Vd => {
            if !ctx.pow(&spec.xi, 2).is_one() {
                out.push("xi^2 = 1".to_string());
            }
            require_ne(ctx, &mut out, &spec.xi, &Character::one(), "xi != 1");
        }
        X => {
            require_ne(ctx, &mut out, &spec.omega_pi, &nu(2), "omega_pi != nu");
            require_ne(ctx, &mut out, &spec.omega_pi, &nu(-2), "omega_pi != nu^-1");
        }
        XIa | XIb if !ctx.equals(&spec.omega_pi, &Character::one()).is_equal() => {
            out.push("omega_pi = 1".to_string());
        }
        _ => {}
    }
    out
}

/// Siegel data in base normalization; `None` for the Klingen and cuspidal
/// types whose Siegel-Jacquet module vanishes.
pub fn siegel_rows_base(ctx: &CharacterContext, spec: &ReprSpec) -> Option<Vec<SiegelRow>> {
    use GlTwoRep::*;
    use TypeTag::*;
    let one = Character::one();
    let c1 = spec.chi1.clone();
    let c2 = spec.chi2.clone();
    let c1i = ctx.inv(&c1);
    let c2i = ctx.inv(&c2);
    let xi = spec.xi.clone();
    let wp = spec.omega_pi.clone();
    let m = |a: &Character, b: &Character| ctx.mul(a, b);
    let row = |pi: GlTwoRep, chi_pi: Character, kernel: Vec<TypeTag>, rp: Character, rm: Character| {
        SiegelRow { pi, chi_pi, kernel, rho_plus: rp, rho_minus: rm }
    };
    let rows = match spec.ty {
        I => vec![
            row(Principal(c1.clone(), c2.clone()), one.clone(), vec![], nu(-1), m(&nu(1), &m(&c1, &c2))),
            row(Principal(c1i.clone(), c2.clone()), c1.clone(), vec![], m(&nu(-1), &c1), m(&nu(1), &c2)),
            row(Principal(c1.clone(), c2i.clone()), c2.clone(), vec![], m(&nu(-1), &c2), m(&nu(1), &c1)),
            row(
                Principal(c1i.clone(), c2i.clone()),
                m(&c1, &c2),
                vec![],
                m(&nu(-1), &m(&c1, &c2)),
                nu(1),
            ),
        ],
        IIa => vec![
            row(Special(c1.clone()), c1i.clone(), vec![], m(&nu(-1), &c1i), m(&nu(1), &c1)),
            row(Special(c1i.clone()), c1.clone(), vec![], m(&nu(-1), &c1), m(&nu(1), &c1i)),
            row(
                Principal(m(&nu(-1), &c1), m(&nu(-1), &c1i)),
                nu(1),
                vec![IIb],
                one.clone(),
                one.clone(),
            ),
        ],
        IIb => vec![
            row(OneDim(c1.clone()), c1i.clone(), vec![], m(&nu(-1), &c1i), m(&nu(1), &c1)),
            row(OneDim(c1i.clone()), c1.clone(), vec![], m(&nu(-1), &c1), m(&nu(1), &c1i)),
            row(
                Principal(m(&nu(1), &c1), m(&nu(1), &c1i)),
                nu(-1),
                vec![IIa],
                nu(-2),
                nu(2),
            ),
        ],
        IIIa => vec![
            row(Principal(c1i.clone(), nu(-2)), m(&nu(1), &c1), vec![IIIb], c1.clone(), one.clone()),
            row(Principal(c1.clone(), nu(-2)), nu(1), vec![IIIb], one.clone(), c1.clone()),
        ],
        IIIb => vec![
            row(
                Principal(c1i.clone(), nu(2)),
                m(&nu(-1), &c1),
                vec![IIIa],
                m(&nu(-2), &c1),
                nu(2),
            ),
            row(Principal(c1.clone(), nu(2)), nu(-1), vec![IIIa], nu(-2), m(&nu(2), &c1)),
        ],
        IVa => vec![row(Special(nu(-3)), nu(3), vec![IVc], nu(2), nu(-2))],
        IVb => vec![
            row(OneDim(nu(-3)), nu(3), vec![IVd], nu(2), nu(-2)),
            row(Principal(nu(4), nu(-2)), nu(-1), vec![IVa, IVc, IVd], nu(-2), nu(2)),
        ],
        IVc => vec![
            row(Special(nu(3)), nu(-3), vec![IVa], nu(-4), nu(4)),
            row(Principal(nu(-4), nu(2)), nu(1), vec![IVa, IVb, IVd], one.clone(), one.clone()),
        ],
        IVd => vec![row(OneDim(nu(3)), nu(-3), vec![IVb], nu(-4), nu(4))],
        Va => vec![
            row(Special(m(&nu(-1), &xi)), nu(1), vec![Vb], one.clone(), one.clone()),
            row(Special(m(&nu(-1), &xi)), m(&xi, &nu(1)), vec![Vc], xi.clone(), xi.clone()),
        ],
        Vb => vec![
            row(Special(m(&nu(1), &xi)), nu(-1), vec![Va], nu(-2), nu(2)),
            row(OneDim(m(&nu(-1), &xi)), m(&nu(1), &xi), vec![Vd], xi.clone(), xi.clone()),
        ],
        Vc => vec![
            row(
                Special(m(&nu(1), &xi)),
                m(&nu(-1), &xi),
                vec![Va],
                m(&nu(-2), &xi),
                m(&nu(2), &xi),
            ),
            row(OneDim(m(&nu(-1), &xi)), nu(1), vec![Vd], one.clone(), one.clone()),
        ],
        Vd => vec![
            row(
                OneDim(m(&nu(1), &xi)),
                m(&nu(-1), &xi),
                vec![Vb],
                m(&nu(-2), &xi),
                m(&nu(2), &xi),
            ),
            row(OneDim(m(&nu(1), &xi)), nu(-1), vec![Vc], nu(-2), nu(2)),
        ],
        VIa => vec![row(Special(nu(-1)), nu(1), vec![VIc], one.clone(), one.clone())],
        VIb => vec![row(OneDim(nu(-1)), nu(1), vec![VId], one.clone(), one.clone())],
        VIc => vec![row(Special(nu(1)), nu(-1), vec![VIa], nu(-2), nu(2))],
        VId => vec![row(OneDim(nu(1)), nu(-1), vec![VIb], nu(-2), nu(2))],
        X => vec![
            row(
                Cuspidal { omega: wp.clone(), label: "pi_c".to_string() },
                one.clone(),
                vec![],
                nu(-1),
                m(&nu(1), &wp),
            ),
            row(
                Cuspidal { omega: ctx.inv(&wp), label: "pi_c^".to_string() },
                wp.clone(),
                vec![],
                m(&nu(-1), &wp),
                nu(1),
            ),
        ],
        XIa => vec![row(
            Cuspidal { omega: nu(-2), label: "nu^-1/2 pi_c".to_string() },
            nu(1),
            vec![XIb],
            one.clone(),
            one.clone(),
        )],
        XIb => vec![row(
            Cuspidal { omega: nu(2), label: "nu^1/2 pi_c".to_string() },
            nu(-1),
            vec![XIa],
            nu(-2),
            nu(2),
        )],
        _ => return None,
    };
    Some(rows)
}

/// Regular spinor L-factor constituents in the twisted parameterization;
/// `None` when no split Bessel model exists for any `rho`.
pub fn regular_lfactor_chars(ctx: &CharacterContext, spec: &ReprSpec) -> Option<Vec<Character>> {
    use TypeTag::*;
    let s = &spec.sigma;
    let c1 = &spec.chi1;
    let xi = &spec.xi;
    let wp = &spec.omega_pi;
    let m = |a: &Character, b: &Character| ctx.mul(a, b);
    let t = |h: i64, c: Option<&Character>| {
        let mut out = ctx.mul(&nu(h), s);
        if let Some(c) = c {
            out = ctx.mul(&out, c);
        }
        out
    };
    let chars = match spec.ty {
        I => vec![t(0, None), t(0, Some(c1)), t(0, Some(&spec.chi2)), t(0, Some(&m(c1, &spec.chi2)))],
        IIa => vec![t(0, None), t(0, Some(&ctx.pow(c1, 2))), t(1, Some(c1))],
        IIb => vec![t(0, None), t(0, Some(&ctx.pow(c1, 2))), t(-1, Some(c1))],
        IIIa => vec![t(1, Some(c1)), t(1, None)],
        IIIb => vec![t(-1, Some(c1)), t(-1, None), t(1, Some(c1)), t(1, None)],
        IVa => vec![t(3, None)],
        IVb => vec![t(3, None), t(-1, None)],
        IVc => vec![t(1, None), t(-3, None), t(3, None)],
        IVd => return None,
        Va => vec![t(1, None), t(1, Some(xi))],
        Vb => vec![t(-1, None), t(1, Some(xi))],
        Vc => vec![t(1, None), t(-1, Some(xi))],
        Vd => return None,
        VIa => vec![t(1, None), t(1, None)],
        VIb => return None,
        VIc => vec![t(-1, None)],
        VId => vec![t(-1, None), t(-1, None)],
        VII | VIIIa | IXa => vec![],
        VIIIb | IXb => return None,
        X => vec![t(0, None), t(0, Some(wp))],
        XIa => vec![t(1, None)],
        XIb => vec![t(-1, None)],
        CuspGeneric => vec![],
        CuspNonGeneric => return None,
    };
    Some(chars)
}
