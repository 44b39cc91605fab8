//! The two routes to an L-factor agree: the symbolic Euler product of a
//! module and the denominator of the zeta integral of a matching coefficient
//! function, after substituting a numeric residue cardinality.

use gsp4_bessel::chargroup::{Character, CharacterContext};
use gsp4_bessel::lfactor::LFactorProduct;
use gsp4_bessel::tmod::TModule;
use gsp4_bessel::tsmod::TsModule;
use gsp4_bessel::zeta::{self, rat, Rat};
use num_traits::One;

/// Evaluate an unramified symbolic coefficient at the uniformizer with
/// `q = 3` and the named generator values.
fn eval_at_pi(ctx: &CharacterContext, q: i64, values: &[(&str, Rat)], c: &Character) -> Rat {
    // nu(pi) = 1/q, in halves; only even powers stay rational
    assert!(c.nu2() % 2 == 0, "need integral nu-exponents for a rational value");
    let mut out = pow(&rat(1, q), c.nu2() / 2);
    for (g, e) in c.exponents() {
        let name = &ctx.generators()[g].name;
        let v = values.iter().find(|(n, _)| n == name).expect("value for generator").1.clone();
        out *= pow(&v, e);
    }
    out
}

fn pow(x: &Rat, e: i64) -> Rat {
    let mut out = Rat::one();
    for _ in 0..e.abs() {
        out *= x.clone();
    }
    if e < 0 {
        out.recip()
    } else {
        out
    }
}

#[test]
fn zeta_denominator_matches_module_lfactor() {
    let mut ctx = CharacterContext::new();
    ctx.add_generator("s", None, true).unwrap();
    let s = ctx.named("s").unwrap();
    let q = 3i64;
    let values = [("s", rat(5, 1))];

    // module with constituents s, nu^-1 s (twice, one Jordan block), nu^-2
    let m = TsModule::universal_extension(TModule::from_blocks(vec![
        (s.clone(), 1),
        (ctx.mul(&Character::nu_halves(-2), &s), 2),
    ]))
    .unwrap()
    .direct_sum(&TsModule::character(Character::nu_halves(-4)));
    let l = LFactorProduct::of_module(&ctx, &m, 0);

    // a matching coefficient function: one tail per constituent value, of
    // degree one less than the multiplicity
    let chi = rat(2, 1);
    let constituents = m.pi0().semisimplify();
    let mut tails: Vec<zeta::Tail> = Vec::new();
    for c in &constituents {
        let mu = eval_at_pi(&ctx, q, &values, c);
        match tails.iter_mut().find(|t| t.mu == mu) {
            Some(t) => t.poly.push(Rat::one()),
            None => tails.push(zeta::Tail { mu, poly: vec![Rat::one()] }),
        }
    }
    let f = zeta::CoeffFn { n0: 0, explicit: vec![], tails };
    let z = zeta::zeta_integral(&f, &chi).unwrap();

    // denominator multiset of Z vs the numeric Euler coefficients
    let mut expected: Vec<(Rat, usize)> = Vec::new();
    for factor in l.denominator_factors() {
        let coeff = eval_at_pi(&ctx, q, &values, &factor.character(&ctx)) * chi.clone();
        match expected.iter_mut().find(|(c, _)| *c == coeff) {
            Some((_, m)) => *m += 1,
            None => expected.push((coeff, 1)),
        }
    }
    expected.sort();
    let got: Vec<(Rat, usize)> =
        z.denominator().iter().map(|(c, m)| (c.clone(), *m)).collect();
    assert_eq!(got, expected);
}
