//! Split Bessel models and regular spinor L-factors for irreducible smooth
//! representations of `GSp(4)` over a non-archimedean local field.
//!
//! The crate decides, for every representation type in the standard
//! classification and every split Bessel character, whether a split Bessel
//! model exists, constructs the Bessel module as a finite-length module over
//! the affine group of the line, and computes the regular part of the spinor
//! L-factor as an exact product of Tate Euler factors. A verification layer
//! re-derives the combinatorial lemmas behind the tables by brute-force
//! enumeration over finite character models.
//!
//! ```
//! use gsp4_bessel::chargroup::Character;
//! use gsp4_bessel::gsp4::{self, tables, TypeTag};
//!
//! let ctx = tables::standard_context();
//! let spec = tables::generic_spec(&ctx, TypeTag::VIa);
//! let rho = ctx.named("sigma").unwrap();
//!
//! let (exists, degree) = gsp4::has_split_bessel(&ctx, &spec, &rho);
//! assert!(exists && degree == 1);
//!
//! let module = gsp4::bessel_module(&ctx, &spec, &rho).unwrap();
//! assert_eq!(module.render(&ctx), "E[nu^1/2 sigma] ⊕ i_*(nu^1/2 sigma)");
//!
//! let reg = gsp4::regular_lfactor(&ctx, &spec, &rho, &Character::one()).unwrap();
//! assert_eq!(reg.render(&ctx), "L(s, nu^1/2 sigma)^2");
//! ```

pub mod chargroup;
pub mod gsp4;
pub mod lfactor;
pub mod tmod;
pub mod tsmod;
pub mod verify;
pub mod zeta;

pub use chargroup::{Character, CharacterContext};
pub use gsp4::{ReprSpec, TypeTag};
pub use lfactor::LFactorProduct;
pub use tmod::TModule;
pub use tsmod::TsModule;
