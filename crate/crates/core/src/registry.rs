//! Declarative tables of every condition set.
//!
//! Each law is one line of the formula language in [`crate::dsl`]. Letters:
//! `A` is the base space; the complement is `H` for the pair-level sets and
//! `V` for the extending-datum sets. Variables are declared per law.
//!
//! Transcription conventions for the coaction legs:
//!
//! | map | legs |
//! |-----|------|
//! | `φ(a)` | `a⟨−1⟩ ⊗ a⟨0⟩` in `K ⊗ A` |
//! | `ρ(a)` | `a(−1) ⊗ a(0)` in `K ⊗ A` |
//! | `γ(a)` | `a(0) ⊗ a(1)` in `A ⊗ K` |
//! | `ψ(x)` | `x⟨0⟩ ⊗ x⟨1⟩` in `K ⊗ A` |
//! | `α(x)` | `x{−1} ⊗ x{0}` in `A ⊗ K` |
//! | `β(x)` | `x{0} ⊗ x{1}` in `K ⊗ A` |
//! | `p(a)`, `s(a)` | `a₁ₚ ⊗ a₂ₚ`, `a₁ₛ ⊗ a₂ₛ` in `K ⊗ K` |
//! | `q(x)`, `t(x)` | `x₁q ⊗ x₂q`, `x₁ₜ ⊗ x₂ₜ` in `A ⊗ A` |

use crate::dsl::compile_identity;
use crate::error::{ForgeError, Result};
use crate::term::IdentityDescriptor;

/// One identity as text.
#[derive(Clone, Copy, Debug)]
pub struct Law {
    pub label: &'static str,
    pub vars: &'static str,
    pub formula: &'static str,
}

const fn law(label: &'static str, vars: &'static str, formula: &'static str) -> Law {
    Law {
        label,
        vars,
        formula,
    }
}

/// An identity checked on the built extension `E` rather than on the
/// components. `ambient` lists labels of the algebra, coalgebra and
/// bialgebra laws; LIEBI and ASI entries follow [`RegistryOptions`].
#[derive(Clone, Copy, Debug)]
pub struct Composite {
    pub label: &'static str,
    pub ambient: &'static [&'static str],
}

/// A named group of laws. `includes` pulls every law of other sets into
/// this one's check without listing them twice in the manifest.
#[derive(Clone, Copy, Debug)]
pub struct SetSpec {
    pub id: &'static str,
    pub description: &'static str,
    pub complement: &'static str,
    pub laws: &'static [Law],
    pub composites: &'static [Composite],
    pub includes: &'static [&'static str],
    /// Replacement (same label) or additional laws enabled by
    /// [`RegistryOptions::amended`].
    pub amended: &'static [Law],
}

pub const PA: &[Law] = &[
    law("PA1", "x:A y:A", "[x, y] + [y, x] = 0"),
    law("PA2", "x:A y:A z:A", "[x, [y, z]] + [y, [z, x]] + [z, [x, y]] = 0"),
    law("PA3", "x:A y:A z:A", "(x · y) · z = x · (y · z)"),
    law("PA4", "x:A y:A z:A", "[x, y · z] = [x, y] · z + y · [x, z]"),
];

pub const PC: &[Law] = &[
    law("PC1", "x:A", "δ(x) + τ(δ(x)) = 0"),
    law(
        "PC2",
        "x:A",
        "δ(δ(x)#1)#1 ⊗ δ(δ(x)#1)#2 ⊗ δ(x)#2 + δ(δ(x)#1)#2 ⊗ δ(x)#2 ⊗ δ(δ(x)#1)#1 \
         + δ(x)#2 ⊗ δ(δ(x)#1)#1 ⊗ δ(δ(x)#1)#2 = 0",
    ),
    law("PC3", "x:A", "Δ(Δ(x)#1) ⊗ Δ(x)#2 = Δ(x)#1 ⊗ Δ(Δ(x)#2)"),
    law(
        "PC4",
        "x:A",
        "δ(x)#1 ⊗ Δ(δ(x)#2) = δ(Δ(x)#1) ⊗ Δ(x)#2 + τ12(Δ(x)#1 ⊗ δ(Δ(x)#2))",
    ),
];

pub const PB: &[Law] = &[
    law(
        "LB01",
        "x:A y:A",
        "δ(x · y) = x · δ(y)#1 ⊗ δ(y)#2 + δ(x)#1 · y ⊗ δ(x)#2 + Δ(y)#1 ⊗ [x, Δ(y)#2] \
         + Δ(x)#2 ⊗ [y, Δ(x)#1]",
    ),
    law(
        "LB02",
        "x:A y:A",
        "Δ([x, y]) = [x, Δ(y)#1] ⊗ Δ(y)#2 + Δ(y)#1 ⊗ [x, Δ(y)#2] + δ(x)#1 · y ⊗ δ(x)#2 \
         - δ(x)#1 ⊗ y · δ(x)#2",
    ),
];

pub const LIEBI: &[Law] = &[law(
    "LIEBI1",
    "x:A y:A",
    "δ([x, y]) = [x, δ(y)#1] ⊗ δ(y)#2 + δ(y)#1 ⊗ [x, δ(y)#2] - [y, δ(x)#1] ⊗ δ(x)#2 \
     - δ(x)#1 ⊗ [y, δ(x)#2]",
)];

pub const ASI: &[Law] = &[
    law(
        "ASI1",
        "x:A y:A",
        "Δ(x · y) = x · Δ(y)#1 ⊗ Δ(y)#2 + Δ(x)#1 ⊗ Δ(x)#2 · y",
    ),
    law(
        "ASI2",
        "x:A y:A",
        "y · Δ(x)#1 ⊗ Δ(x)#2 - Δ(x)#1 ⊗ Δ(x)#2 · y + τ(x · Δ(y)#1 ⊗ Δ(y)#2) \
         - τ(Δ(y)#1 ⊗ Δ(y)#2 · x) = 0",
    ),
];

/// The derivation convention `Δ(xy) = Δ(x)₁·y ⊗ Δ(x)₂ + Δ(y)₁ ⊗ x·Δ(y)₂`
/// with the matching balance condition.
pub const ASI_SWAPPED: &[Law] = &[
    law(
        "ASI1",
        "x:A y:A",
        "Δ(x · y) = Δ(x)#1 · y ⊗ Δ(x)#2 + Δ(y)#1 ⊗ x · Δ(y)#2",
    ),
    law(
        "ASI2",
        "x:A y:A",
        "Δ(x)#1 · y ⊗ Δ(x)#2 - Δ(x)#1 ⊗ y · Δ(x)#2 + τ(Δ(y)#1 · x ⊗ Δ(y)#2) \
         - τ(Δ(y)#1 ⊗ x · Δ(y)#2) = 0",
    ),
];

pub const BIMOD: &[Law] = &[
    law("BIMOD1", "x:H y:H v:A", "(x · y) ⇀ v = x ⇀ (y ⇀ v)"),
    law("BIMOD2", "v:A x:H y:H", "v ↼ (x · y) = (v ↼ x) ↼ y"),
    law("BIMOD3", "x:H v:A y:H", "x ⇀ (v ↼ y) = (x ⇀ v) ↼ y"),
    law("BIMOD4", "x:H y:H v:A", "[x, y] ⊳ v = x ⊳ (y ⊳ v) - y ⊳ (x ⊳ v)"),
    law("BIMOD5", "x:H y:H v:A", "(x · y) ⊳ v = x ⇀ (y ⊳ v) + (x ⊳ v) ↼ y"),
    law("BIMOD6", "x:H y:H v:A", "[x, y] ⇀ v = x ⊳ (y ⇀ v) - y ⇀ (x ⊳ v)"),
    law("BIMOD7", "v:A x:H y:H", "v ↼ [x, y] = x ⊳ (v ↼ y) - (x ⊳ v) ↼ y"),
];

pub const BICOMOD: &[Law] = &[
    law("BICOMOD1", "v:A", "Δ(ρ(v)#1) ⊗ ρ(v)#2 = ρ(v)#1 ⊗ ρ(ρ(v)#2)"),
    law("BICOMOD2", "v:A", "γ(v)#1 ⊗ Δ(γ(v)#2) = γ(γ(v)#1) ⊗ γ(v)#2"),
    law("BICOMOD3", "v:A", "ρ(v)#1 ⊗ γ(ρ(v)#2) = ρ(γ(v)#1) ⊗ γ(v)#2"),
    law(
        "BICOMOD4",
        "v:A",
        "δ(φ(v)#1) ⊗ φ(v)#2 = φ(v)#1 ⊗ φ(φ(v)#2) - τ12(φ(v)#1 ⊗ φ(φ(v)#2))",
    ),
    law(
        "BICOMOD5",
        "v:A",
        "φ(v)#2 ⊗ Δ(φ(v)#1) = τ(φ(γ(v)#1)) ⊗ γ(v)#2 + τ12(ρ(v)#1 ⊗ τ(φ(ρ(v)#2)))",
    ),
    law(
        "BICOMOD6",
        "v:A",
        "φ(v)#1 ⊗ ρ(φ(v)#2) = δ(ρ(v)#1) ⊗ ρ(v)#2 + τ12(ρ(v)#1 ⊗ φ(ρ(v)#2))",
    ),
    law(
        "BICOMOD7",
        "v:A",
        "φ(v)#1 ⊗ γ(φ(v)#2) = φ(γ(v)#1) ⊗ γ(v)#2 + τ12(γ(v)#1 ⊗ δ(γ(v)#2))",
    ),
];

pub const MODALG: &[Law] = &[
    law("MODALG1", "x:H a:A b:A", "x ⇀ (a · b) = (x ⇀ a) · b"),
    law("MODALG2", "a:A b:A x:H", "(a · b) ↼ x = a · (b ↼ x)"),
    law("MODALG3", "a:A x:H b:A", "(a ↼ x) · b = a · (x ⇀ b)"),
    law("MODALG4", "x:H a:A b:A", "x ⊳ [a, b] = [a, x ⊳ b] + [x ⊳ a, b]"),
    law("MODALG5", "x:H a:A b:A", "x ⊳ (a · b) = (x ⊳ a) · b + a · (x ⊳ b)"),
    law("MODALG6", "x:H a:A b:A", "x ⇀ [a, b] = [a, x ⇀ b] + (x ⊳ a) · b"),
    law("MODALG7", "a:A b:A x:H", "[a, b] ↼ x = [a, b ↼ x] + b · (x ⊳ a)"),
];

pub const COMODCOALG: &[Law] = &[
    law("COMODCOALG1", "a:A", "ρ(a)#1 ⊗ Δ(ρ(a)#2) = ρ(Δ(a)#1) ⊗ Δ(a)#2"),
    law("COMODCOALG2", "a:A", "Δ(γ(a)#1) ⊗ γ(a)#2 = Δ(a)#1 ⊗ γ(Δ(a)#2)"),
    law("COMODCOALG3", "a:A", "γ(Δ(a)#1) ⊗ Δ(a)#2 = Δ(a)#1 ⊗ ρ(Δ(a)#2)"),
    law(
        "COMODCOALG4",
        "a:A",
        "φ(a)#1 ⊗ δ(φ(a)#2) = φ(δ(a)#1) ⊗ δ(a)#2 + τ12(δ(a)#1 ⊗ φ(δ(a)#2))",
    ),
    law(
        "COMODCOALG5",
        "a:A",
        "φ(a)#1 ⊗ Δ(φ(a)#2) = φ(Δ(a)#1) ⊗ Δ(a)#2 + τ12(Δ(a)#1 ⊗ φ(Δ(a)#2))",
    ),
    law(
        "COMODCOALG6",
        "a:A",
        "ρ(a)#1 ⊗ δ(ρ(a)#2) = τ12(δ(a)#1 ⊗ ρ(δ(a)#2)) + φ(Δ(a)#1) ⊗ Δ(a)#2",
    ),
    law(
        "COMODCOALG7",
        "a:A",
        "δ(a)#1 ⊗ γ(δ(a)#2) = δ(γ(a)#1) ⊗ γ(a)#2 - τ12(Δ(a)#1 ⊗ τ(φ(Δ(a)#2)))",
    ),
];

pub const HOPF_H: &[Law] = &[
    law(
        "HM1",
        "x:H v:A",
        "φ(x ⇀ v) = x · φ(v)#1 ⊗ φ(v)#2 + ρ(v)#1 ⊗ (x ⊳ ρ(v)#2) - Δ(x)#2 ⊗ (Δ(x)#1 ⊳ v)",
    ),
    law(
        "HM2",
        "x:H v:A",
        "τ(φ(x ⇀ v)) = (x ⇀ φ(v)#2) ⊗ φ(v)#1 - γ(v)#1 ⊗ [x, γ(v)#2] - (δ(x)#1 ⇀ v) ⊗ δ(x)#2",
    ),
    law(
        "HM3",
        "v:A x:H",
        "φ(v ↼ x) = φ(v)#1 · x ⊗ φ(v)#2 - Δ(x)#1 ⊗ (Δ(x)#2 ⊳ v) + γ(v)#2 ⊗ (x ⊳ γ(v)#1)",
    ),
    law(
        "HM4",
        "v:A x:H",
        "τ(φ(v ↼ x)) = (v ↼ δ(x)#1) ⊗ δ(x)#2 - (φ(v)#2 ↼ x) ⊗ φ(v)#1 + ρ(v)#2 ⊗ [x, ρ(v)#1]",
    ),
    law(
        "HM5",
        "x:H v:A",
        "ρ(x ⊳ v) = [x, ρ(v)#1] ⊗ ρ(v)#2 + ρ(v)#1 ⊗ (x ⊳ ρ(v)#2) - δ(x)#1 ⊗ (v ↼ δ(x)#2)",
    ),
    law(
        "HM6",
        "x:H v:A",
        "ρ(x ⊳ v) = Δ(x)#1 ⊗ (Δ(x)#2 ⊳ v) + φ(v)#1 ⊗ (x ⇀ φ(v)#2) - φ(v)#1 · x ⊗ φ(v)#2",
    ),
    law(
        "HM7",
        "x:H v:A",
        "γ(x ⊳ v) = (x ⊳ γ(v)#1) ⊗ γ(v)#2 + γ(v)#1 ⊗ [x, γ(v)#2] + (δ(x)#1 ⇀ v) ⊗ δ(x)#2",
    ),
    law(
        "HM8",
        "x:H v:A",
        "γ(x ⊳ v) = (Δ(x)#1 ⊳ v) ⊗ Δ(x)#2 - φ(v)#2 ⊗ x · φ(v)#1 + (φ(v)#2 ↼ x) ⊗ φ(v)#1",
    ),
];

/// HM4 with its left side negated. The proof's expansion of `δ_E` puts
/// `−τφ` on the `A ⊗ H` component, and only this sign holds whenever the
/// biproduct satisfies LB01.
pub const HOPF_H_AMENDED: &[Law] = &[law(
    "HM4",
    "v:A x:H",
    "τ(φ(v ↼ x)) = -(v ↼ δ(x)#1) ⊗ δ(x)#2 + (φ(v)#2 ↼ x) ⊗ φ(v)#1 - ρ(v)#2 ⊗ [x, ρ(v)#1]",
)];

pub const BRAIDED_A: &[Law] = &[
    law(
        "BB1",
        "a:A b:A",
        "δ(a · b) = δ(a)#1 · b ⊗ δ(a)#2 + a · δ(b)#1 ⊗ δ(b)#2 + Δ(b)#1 ⊗ [a, Δ(b)#2] \
         + Δ(a)#2 ⊗ [b, Δ(a)#1] + (φ(a)#1 ⇀ b) ⊗ φ(a)#2 + (a ↼ φ(b)#1) ⊗ φ(b)#2 \
         - γ(b)#1 ⊗ (γ(b)#2 ⊳ a) - ρ(a)#2 ⊗ (ρ(a)#1 ⊳ b)",
    ),
    law(
        "BB2",
        "a:A b:A",
        "Δ([a, b]) = [a, Δ(b)#1] ⊗ Δ(b)#2 + Δ(b)#1 ⊗ [a, Δ(b)#2] - δ(a)#1 ⊗ b · δ(a)#2 \
         + δ(a)#1 · b ⊗ δ(a)#2 + φ(a)#2 ⊗ (b ↼ φ(a)#1) + (φ(a)#1 ⇀ b) ⊗ φ(a)#2 \
         - (ρ(b)#1 ⊳ a) ⊗ ρ(b)#2 - γ(b)#1 ⊗ (γ(b)#2 ⊳ a)",
    ),
];

pub const BIPROD18: &[Law] = &[
    law(
        "BP1",
        "a:A b:A",
        "δ(a · b) = δ(a)#1 · b ⊗ δ(a)#2 + a · δ(b)#1 ⊗ δ(b)#2 + Δ(b)#1 ⊗ [a, Δ(b)#2] \
         + Δ(a)#2 ⊗ [b, Δ(a)#1] + (φ(a)#1 ⇀ b) ⊗ φ(a)#2 + (a ↼ φ(b)#1) ⊗ φ(b)#2 \
         - γ(b)#1 ⊗ (γ(b)#2 ⊳ a) - ρ(a)#2 ⊗ (ρ(a)#1 ⊳ b)",
    ),
    law(
        "BP2",
        "x:H b:A",
        "δ(x ⇀ b) = (x ⇀ δ(b)#1) ⊗ δ(b)#2 + Δ(b)#1 ⊗ (x ⊳ Δ(b)#2)",
    ),
    law(
        "BP3",
        "a:A y:H",
        "δ(a ↼ y) = (δ(a)#1 ↼ y) ⊗ δ(a)#2 + Δ(a)#2 ⊗ (y ⊳ Δ(a)#1)",
    ),
    law(
        "BP4",
        "a:A b:A",
        "φ(a · b) = ρ(b)#1 ⊗ [a, ρ(b)#2] + γ(a)#2 ⊗ [b, γ(a)#1]",
    ),
    law(
        "BP5",
        "a:A b:A",
        "τ(φ(a · b)) = φ(a)#2 · b ⊗ φ(a)#1 + a · φ(b)#2 ⊗ φ(b)#1",
    ),
    law(
        "BP6",
        "x:H b:A",
        "φ(x ⇀ b) = x · φ(b)#1 ⊗ φ(b)#2 + ρ(b)#1 ⊗ (x ⊳ ρ(b)#2) - Δ(x)#2 ⊗ (Δ(x)#1 ⊳ b)",
    ),
    law(
        "BP7",
        "x:H b:A",
        "τ(φ(x ⇀ b)) = (x ⇀ φ(b)#2) ⊗ φ(b)#1 - γ(b)#1 ⊗ [x, γ(b)#2] - (δ(x)#1 ⇀ b) ⊗ δ(x)#2",
    ),
    law(
        "BP8",
        "a:A y:H",
        "φ(a ↼ y) = φ(a)#1 · y ⊗ φ(a)#2 - Δ(y)#1 ⊗ (Δ(y)#2 ⊳ a) + γ(a)#2 ⊗ (y ⊳ γ(a)#1)",
    ),
    law(
        "BP9",
        "a:A y:H",
        "τ(φ(a ↼ y)) = (a ↼ δ(y)#1) ⊗ δ(y)#2 - (φ(a)#2 ↼ y) ⊗ φ(a)#1 + ρ(a)#2 ⊗ [y, ρ(a)#1]",
    ),
    law(
        "BP10",
        "a:A b:A",
        "Δ([a, b]) = [a, Δ(b)#1] ⊗ Δ(b)#2 + Δ(b)#1 ⊗ [a, Δ(b)#2] - δ(a)#1 ⊗ b · δ(a)#2 \
         + δ(a)#1 · b ⊗ δ(a)#2 + φ(a)#2 ⊗ (b ↼ φ(a)#1) + (φ(a)#1 ⇀ b) ⊗ φ(a)#2 \
         - (ρ(b)#1 ⊳ a) ⊗ ρ(b)#2 - γ(b)#1 ⊗ (γ(b)#2 ⊳ a)",
    ),
    law(
        "BP11",
        "x:H b:A",
        "Δ(x ⊳ b) = (x ⊳ Δ(b)#1) ⊗ Δ(b)#2 + Δ(b)#1 ⊗ (x ⊳ Δ(b)#2)",
    ),
    law(
        "BP12",
        "y:H a:A",
        "Δ(y ⊳ a) = δ(a)#1 ⊗ (y ⇀ δ(a)#2) - (δ(a)#1 ↼ y) ⊗ δ(a)#2",
    ),
    law(
        "BP13",
        "a:A b:A",
        "ρ([a, b]) = ρ(b)#1 ⊗ [a, ρ(b)#2] - φ(a)#1 ⊗ b · φ(a)#2",
    ),
    law(
        "BP14",
        "a:A b:A",
        "γ([a, b]) = [a, γ(b)#1] ⊗ γ(b)#2 - φ(a)#2 · b ⊗ φ(a)#1",
    ),
    law(
        "BP15",
        "x:H b:A",
        "ρ(x ⊳ b) = [x, ρ(b)#1] ⊗ ρ(b)#2 + ρ(b)#1 ⊗ (x ⊳ ρ(b)#2) - δ(x)#1 ⊗ (b ↼ δ(x)#2)",
    ),
    law(
        "BP16",
        "y:H a:A",
        "ρ(y ⊳ a) = Δ(y)#1 ⊗ (Δ(y)#2 ⊳ a) + φ(a)#1 ⊗ (y ⇀ φ(a)#2) - φ(a)#1 · y ⊗ φ(a)#2",
    ),
    law(
        "BP17",
        "x:H b:A",
        "γ(x ⊳ b) = (x ⊳ γ(b)#1) ⊗ γ(b)#2 + γ(b)#1 ⊗ [x, γ(b)#2] + (δ(x)#1 ⇀ b) ⊗ δ(x)#2",
    ),
    law(
        "BP18",
        "y:H a:A",
        "γ(y ⊳ a) = (Δ(y)#1 ⊳ a) ⊗ Δ(y)#2 - φ(a)#2 ⊗ y · φ(a)#1 + (φ(a)#2 ↼ y) ⊗ φ(a)#1",
    ),
];

/// Proof condition (9) with the sign of HM4's amendment.
pub const BIPROD18_AMENDED: &[Law] = &[law(
    "BP9",
    "a:A y:H",
    "τ(φ(a ↼ y)) = -(a ↼ δ(y)#1) ⊗ δ(y)#2 + (φ(a)#2 ↼ y) ⊗ φ(a)#1 - ρ(a)#2 ⊗ [y, ρ(a)#1]",
)];

pub const MP_ALG: &[Law] = &[
    law(
        "AM1",
        "x:H a:A b:A",
        "x ⇀ [a, b] = [a, x ⇀ b] - (x ← b) ⊳ a + (x ⊳ a) · b + (x ⊲ a) ⇀ b",
    ),
    law(
        "AM2",
        "a:A b:A x:H",
        "[a, b] ↼ x = [a, b ↼ x] - (b → x) ⊳ a + b · (x ⊳ a) + b ↼ (x ⊲ a)",
    ),
    law(
        "AM3",
        "x:H a:A b:A",
        "x ⊳ (a · b) = (x ⊳ a) · b + (x ⊲ a) ⇀ b + a · (x ⊳ b) + a ↼ (x ⊲ b)",
    ),
    law(
        "AM4",
        "x:H y:H a:A",
        "[x, y] ← a = [x, y ← a] + x ⊲ (y ⇀ a) - y · (x ⊲ a) - y ← (x ⊳ a)",
    ),
    law(
        "AM5",
        "a:A x:H y:H",
        "a → [x, y] = [x, a → y] + x ⊲ (a ↼ y) - (x ⊲ a) · y - (x ⊳ a) → y",
    ),
    law(
        "AM6",
        "x:H y:H a:A",
        "(x · y) ⊲ a = (x ⊲ a) · y + (x ⊳ a) → y + x · (y ⊲ a) + x ← (y ⊳ a)",
    ),
];

pub const MP_COALG: &[Law] = &[
    law(
        "CM1",
        "a:A",
        "δ(a)#1 ⊗ ρ(δ(a)#2) - φ(a)#2 ⊗ β(φ(a)#1) = -τ(φ(Δ(a)#1)) ⊗ Δ(a)#2 \
         - τ(ψ(ρ(a)#1)) ⊗ ρ(a)#2 + τ12(ρ(a)#1 ⊗ δ(ρ(a)#2))",
    ),
    law(
        "CM2",
        "a:A",
        "φ(a)#1 ⊗ Δ(φ(a)#2) = φ(Δ(a)#1) ⊗ Δ(a)#2 + ψ(ρ(a)#1) ⊗ ρ(a)#2 \
         + τ12(Δ(a)#1 ⊗ φ(Δ(a)#2)) + τ12(γ(a)#1 ⊗ ψ(γ(a)#2))",
    ),
    law(
        "CM3",
        "a:A",
        "δ(a)#1 ⊗ γ(δ(a)#2) - φ(a)#2 ⊗ α(φ(a)#1) = δ(γ(a)#1) ⊗ γ(a)#2 \
         - τ12(Δ(a)#1 ⊗ τ(φ(Δ(a)#2))) - τ12(γ(a)#1 ⊗ τ(ψ(γ(a)#2)))",
    ),
    law(
        "CM4",
        "x:H",
        "δ(x)#1 ⊗ β(δ(x)#2) + ψ(x)#1 ⊗ ρ(ψ(x)#2) = δ(β(x)#1) ⊗ β(x)#2 \
         + τ12(Δ(x)#1 ⊗ ψ(Δ(x)#2)) + τ12(β(x)#1 ⊗ φ(β(x)#2))",
    ),
    law(
        "CM5",
        "x:H",
        "ψ(x)#2 ⊗ Δ(ψ(x)#1) = τ(ψ(Δ(x)#1)) ⊗ Δ(x)#2 + τ(φ(α(x)#1)) ⊗ α(x)#2 \
         + τ12(Δ(x)#1 ⊗ τ(ψ(Δ(x)#2))) + τ12(β(x)#1 ⊗ τ(φ(β(x)#2)))",
    ),
    law(
        "CM6",
        "x:H",
        "δ(x)#1 ⊗ α(δ(x)#2) + ψ(x)#1 ⊗ γ(ψ(x)#2) = ψ(Δ(x)#1) ⊗ Δ(x)#2 \
         + φ(α(x)#1) ⊗ α(x)#2 + τ12(α(x)#1 ⊗ δ(α(x)#2))",
    ),
];

pub const HOPF_A: &[Law] = &[
    law(
        "HM1'",
        "x:H a:A",
        "ψ(x ← a) = (ψ(x)#1 ← a) ⊗ ψ(x)#2 + (x ← δ(a)#1) ⊗ δ(a)#2 + α(x)#2 ⊗ [a, α(x)#1]",
    ),
    law(
        "HM2'",
        "x:H a:A",
        "τ(ψ(x ← a)) = ψ(x)#2 · a ⊗ ψ(x)#1 + β(x)#2 ⊗ (β(x)#1 ⊲ a) - Δ(a)#1 ⊗ (x ⊲ Δ(a)#2)",
    ),
    law(
        "HM3'",
        "a:A x:H",
        "ψ(a → x) = (a → ψ(x)#1) ⊗ ψ(x)#2 + β(x)#1 ⊗ [a, β(x)#2] - (δ(a)#1 → x) ⊗ δ(a)#2",
    ),
    law(
        "HM4'",
        "a:A x:H",
        "τ(ψ(a → x)) = a · ψ(x)#2 ⊗ ψ(x)#1 + α(x)#1 ⊗ (α(x)#2 ⊲ a) - Δ(a)#2 ⊗ (x ⊲ Δ(a)#1)",
    ),
    law(
        "HM5'",
        "x:H a:A",
        "β(x ⊲ a) = (x ⊲ Δ(a)#1) ⊗ Δ(a)#2 - ψ(x)#1 ⊗ a · ψ(x)#2 + (ψ(x)#1 ← a) ⊗ ψ(x)#2",
    ),
    law(
        "HM6'",
        "x:H a:A",
        "β(x ⊲ a) = (β(x)#1 ⊲ a) ⊗ β(x)#2 - β(x)#1 ⊗ [a, β(x)#2] - (δ(a)#1 → x) ⊗ δ(a)#2",
    ),
    law(
        "HM7'",
        "x:H a:A",
        "α(x ⊲ a) = Δ(a)#1 ⊗ (x ⊲ Δ(a)#2) + ψ(x)#2 ⊗ (a → ψ(x)#1) - ψ(x)#2 · a ⊗ ψ(x)#1",
    ),
    law(
        "HM8'",
        "x:H a:A",
        "α(x ⊲ a) = α(x)#1 ⊗ (α(x)#2 ⊲ a) - [a, α(x)#1] ⊗ α(x)#2 + δ(a)#1 ⊗ (x ← δ(a)#2)",
    ),
];

pub const BRAIDED_H: &[Law] = &[
    law(
        "BB1'",
        "x:H y:H",
        "δ(x · y) = δ(x)#1 · y ⊗ δ(x)#2 - (ψ(x)#2 → y) ⊗ ψ(x)#1 + x · δ(y)#1 ⊗ δ(y)#2 \
         - (x ← ψ(y)#2) ⊗ ψ(y)#1 + Δ(y)#1 ⊗ [x, Δ(y)#2] + β(y)#1 ⊗ (x ⊲ β(y)#2) \
         + Δ(x)#2 ⊗ [y, Δ(x)#1] + α(x)#2 ⊗ (y ⊲ α(x)#1)",
    ),
    law(
        "BB2'",
        "x:H y:H",
        "Δ([x, y]) = [x, Δ(y)#1] ⊗ Δ(y)#2 + (x ⊲ α(y)#1) ⊗ α(y)#2 + Δ(y)#1 ⊗ [x, Δ(y)#2] \
         + β(y)#1 ⊗ (x ⊲ β(y)#2) + δ(x)#1 · y ⊗ δ(x)#2 - (ψ(x)#2 → y) ⊗ ψ(x)#1 \
         - δ(x)#1 ⊗ y · δ(x)#2 - ψ(x)#1 ⊗ (y ← ψ(x)#2)",
    ),
];

pub const DMP: &[Law] = &[
    law(
        "DM1",
        "a:A b:A",
        "φ(a · b) = (φ(a)#1 ← b) ⊗ φ(a)#2 + (a → φ(b)#1) ⊗ φ(b)#2 + ρ(b)#1 ⊗ [a, ρ(b)#2] \
         + γ(a)#2 ⊗ [b, γ(a)#1]",
    ),
    law(
        "DM2",
        "a:A b:A",
        "τ(φ(a · b)) = φ(a)#2 · b ⊗ φ(a)#1 + a · φ(b)#2 ⊗ φ(b)#1 + γ(b)#1 ⊗ (γ(b)#2 ⊲ a) \
         + ρ(a)#2 ⊗ (ρ(a)#1 ⊲ b)",
    ),
    law(
        "DM3",
        "x:H y:H",
        "ψ(x · y) = ψ(x)#1 · y ⊗ ψ(x)#2 + x · ψ(y)#1 ⊗ ψ(y)#2 + β(y)#1 ⊗ (x ⊳ β(y)#2) \
         + α(x)#2 ⊗ (y ⊳ α(x)#1)",
    ),
    law(
        "DM4",
        "x:H y:H",
        "τ(ψ(x · y)) = (ψ(x)#2 ↼ y) ⊗ ψ(x)#1 + (x ⇀ ψ(y)#2) ⊗ ψ(y)#1 - α(y)#1 ⊗ [x, α(y)#2] \
         - β(x)#2 ⊗ [y, β(x)#1]",
    ),
    law(
        "DM5",
        "x:H b:A",
        "δ(x ⇀ b) = (ψ(x)#1 ⇀ b) ⊗ ψ(x)#2 + (x ⇀ δ(b)#1) ⊗ δ(b)#2 - β(x)#2 ⊗ (β(x)#1 ⊳ b) \
         + Δ(b)#1 ⊗ (x ⊳ Δ(b)#2)",
    ),
    law(
        "DM6",
        "a:A y:H",
        "δ(a ↼ y) = (a ↼ ψ(y)#1) ⊗ ψ(y)#2 + (δ(a)#1 ↼ y) ⊗ δ(a)#2 - α(y)#1 ⊗ (α(y)#2 ⊳ a) \
         + Δ(a)#2 ⊗ (y ⊳ Δ(a)#1)",
    ),
    law(
        "DM7",
        "x:H b:A",
        "δ(x ← b) = (δ(x)#1 ← b) ⊗ δ(x)#2 - (x ← φ(b)#2) ⊗ φ(b)#1 + ρ(b)#1 ⊗ (x ⊲ ρ(b)#2) \
         - Δ(x)#2 ⊗ (Δ(x)#1 ⊲ b)",
    ),
    law(
        "DM8",
        "a:A y:H",
        "δ(a → y) = (a → δ(y)#1) ⊗ δ(y)#2 - (φ(a)#2 → y) ⊗ φ(a)#1 + γ(a)#2 ⊗ (y ⊲ γ(a)#1) \
         - Δ(y)#1 ⊗ (Δ(y)#2 ⊲ a)",
    ),
    law(
        "DM9",
        "x:H b:A",
        "φ(x ⇀ b) + ψ(x ← b) = (ψ(x)#1 ← b) ⊗ ψ(x)#2 + (x ← δ(b)#1) ⊗ δ(b)#2 \
         + x · φ(b)#1 ⊗ φ(b)#2 + ρ(b)#1 ⊗ (x ⊳ ρ(b)#2) - Δ(x)#2 ⊗ (Δ(x)#1 ⊳ b) \
         + α(x)#2 ⊗ [b, α(x)#1]",
    ),
    law(
        "DM10",
        "x:H b:A",
        "τ(φ(x ⇀ b)) + τ(ψ(x ← b)) = ψ(x)#2 · b ⊗ ψ(x)#1 + (x ⇀ φ(b)#2) ⊗ φ(b)#1 \
         + β(x)#2 ⊗ (β(x)#1 ⊲ b) - (δ(x)#1 ⇀ b) ⊗ δ(x)#2 - γ(b)#1 ⊗ [x, γ(b)#2] \
         - Δ(b)#1 ⊗ (x ⊲ Δ(b)#2)",
    ),
    law(
        "DM11",
        "a:A y:H",
        "φ(a ↼ y) + ψ(a → y) = φ(a)#1 · y ⊗ φ(a)#2 + (a → ψ(y)#1) ⊗ ψ(y)#2 \
         + β(y)#1 ⊗ [a, β(y)#2] - (δ(a)#1 → y) ⊗ δ(a)#2 + γ(a)#2 ⊗ (y ⊳ γ(a)#1) \
         - Δ(y)#1 ⊗ (Δ(y)#2 ⊳ a)",
    ),
    // The printed last term has a free `x`; the only well-typed reading is `y`.
    law(
        "DM12",
        "a:A y:H",
        "τ(φ(a ↼ y)) + τ(ψ(a → y)) = a · ψ(y)#2 ⊗ ψ(y)#1 + (φ(a)#2 ↼ y) ⊗ φ(a)#1 \
         + α(y)#1 ⊗ (α(y)#2 ⊲ a) - (a ↼ δ(y)#1) ⊗ δ(y)#2 - ρ(a)#2 ⊗ [y, ρ(a)#1] \
         - Δ(a)#2 ⊗ (y ⊲ Δ(a)#1)",
    ),
    law(
        "DM13",
        "a:A b:A",
        "ρ([a, b]) = (φ(a)#1 ← b) ⊗ φ(a)#2 - (ρ(b)#1 ⊲ a) ⊗ ρ(b)#2 + ρ(b)#1 ⊗ [a, ρ(b)#2] \
         - φ(a)#1 ⊗ b · φ(a)#2",
    ),
    law(
        "DM14",
        "x:H y:H",
        "β([x, y]) = [x, β(y)#1] ⊗ β(y)#2 + β(y)#1 ⊗ (x ⊳ β(y)#2) - ψ(x)#1 ⊗ (y ⇀ ψ(x)#2) \
         + ψ(x)#1 · y ⊗ ψ(x)#2",
    ),
    // The printed last term lies in H ⊗ A; the A ⊗ H component of the
    // ambient co-Leibniz rule supplies `-a⟨0⟩b ⊗ a⟨−1⟩` in its place.
    law(
        "DM15",
        "a:A b:A",
        "γ([a, b]) = φ(a)#2 ⊗ (b → φ(a)#1) - γ(b)#1 ⊗ (γ(b)#2 ⊲ a) + [a, γ(b)#1] ⊗ γ(b)#2 \
         - φ(a)#2 · b ⊗ φ(a)#1",
    ),
    law(
        "DM16",
        "x:H y:H",
        "α([x, y]) = α(y)#1 ⊗ [x, α(y)#2] + (x ⊳ α(y)#1) ⊗ α(y)#2 - (ψ(x)#2 ↼ y) ⊗ ψ(x)#1 \
         + ψ(x)#2 ⊗ y · ψ(x)#1",
    ),
    law(
        "DM17",
        "x:H b:A",
        "Δ(x ⊳ b) = (x ⊳ Δ(b)#1) ⊗ Δ(b)#2 + Δ(b)#1 ⊗ (x ⊳ Δ(b)#2) + (ψ(x)#1 ⇀ b) ⊗ ψ(x)#2 \
         + ψ(x)#2 ⊗ (b ↼ ψ(x)#1)",
    ),
    law(
        "DM18",
        "y:H a:A",
        "Δ(y ⊳ a) = -(δ(a)#1 ↼ y) ⊗ δ(a)#2 + δ(a)#1 ⊗ (y ⇀ δ(a)#2) + (β(y)#1 ⊳ a) ⊗ β(y)#2 \
         + α(y)#1 ⊗ (α(y)#2 ⊳ a)",
    ),
    law(
        "DM19",
        "x:H b:A",
        "Δ(x ⊲ b) = (x ⊲ γ(b)#1) ⊗ γ(b)#2 + ρ(b)#1 ⊗ (x ⊲ ρ(b)#2) + (δ(x)#1 ← b) ⊗ δ(x)#2 \
         - δ(x)#1 ⊗ (b → δ(x)#2)",
    ),
    law(
        "DM20",
        "y:H a:A",
        "Δ(y ⊲ a) = (Δ(y)#1 ⊲ a) ⊗ Δ(y)#2 + Δ(y)#1 ⊗ (Δ(y)#2 ⊲ a) + (φ(a)#2 → y) ⊗ φ(a)#1 \
         + φ(a)#1 ⊗ (y ← φ(a)#2)",
    ),
    law(
        "DM21",
        "x:H b:A",
        "ρ(x ⊳ b) + β(x ⊲ b) = (x ⊲ Δ(b)#1) ⊗ Δ(b)#2 + [x, ρ(b)#1] ⊗ ρ(b)#2 \
         + ρ(b)#1 ⊗ (x ⊳ ρ(b)#2) - ψ(x)#1 ⊗ b · ψ(x)#2 + (ψ(x)#1 ← b) ⊗ ψ(x)#2 \
         - δ(x)#1 ⊗ (b ↼ δ(x)#2)",
    ),
    law(
        "DM22",
        "y:H a:A",
        "ρ(y ⊳ a) + β(y ⊲ a) = (β(y)#1 ⊲ a) ⊗ β(y)#2 - β(y)#1 ⊗ [a, β(y)#2] \
         - (δ(a)#1 → y) ⊗ δ(a)#2 - φ(a)#1 · y ⊗ φ(a)#2 + Δ(y)#1 ⊗ (Δ(y)#2 ⊳ a) \
         + φ(a)#1 ⊗ (y ⇀ φ(a)#2)",
    ),
    law(
        "DM23",
        "x:H b:A",
        "γ(x ⊳ b) + α(x ⊲ b) = Δ(b)#1 ⊗ (x ⊲ Δ(b)#2) + γ(b)#1 ⊗ [x, γ(b)#2] \
         + (x ⊳ γ(b)#1) ⊗ γ(b)#2 + ψ(x)#2 ⊗ (b → ψ(x)#1) + (δ(x)#1 ⇀ b) ⊗ δ(x)#2 \
         - ψ(x)#2 · b ⊗ ψ(x)#1",
    ),
    law(
        "DM24",
        "y:H a:A",
        "γ(y ⊳ a) + α(y ⊲ a) = α(y)#1 ⊗ (α(y)#2 ⊲ a) - [a, α(y)#1] ⊗ α(y)#2 \
         + (Δ(y)#1 ⊳ a) ⊗ Δ(y)#2 - φ(a)#2 ⊗ y · φ(a)#1 + δ(a)#1 ⊗ (y ← δ(a)#2) \
         + (φ(a)#2 ↼ y) ⊗ φ(a)#1",
    ),
];

pub const CC: &[Law] = &[
    law(
        "CC1",
        "x:H y:H z:H",
        "x ⊳ ω(y, z) + σ(x, y · z) = σ(x, y) ↼ z + ω([x, y], z) + y ⇀ σ(x, z) + ω(y, [x, z])",
    ),
    law(
        "CC2",
        "a:A b:A c:A",
        "θ(a, b · c) - ν(b, c) ⊲ a = θ(a, b) ← c + ν([a, b], c) + b → θ(a, c) + ν(b, [a, c])",
    ),
    law(
        "CC3",
        "a:A",
        "φ(a)#1 ⊗ s(φ(a)#2) + p(a)#1 ⊗ Δ(p(a)#2) = p(γ(a)#1) ⊗ γ(a)#2 + δ(s(a)#1) ⊗ s(a)#2 \
         + τ12(ρ(a)#1 ⊗ p(ρ(a)#2)) + τ12(s(a)#1 ⊗ δ(s(a)#2))",
    ),
    law(
        "CC4",
        "x:H",
        "q(x)#1 ⊗ δ(q(x)#2) - ψ(x)#2 ⊗ t(ψ(x)#1) = q(β(x)#1) ⊗ β(x)#2 + δ(t(x)#1) ⊗ t(x)#2 \
         + τ12(α(x)#1 ⊗ q(α(x)#2)) + τ12(t(x)#1 ⊗ δ(t(x)#2))",
    ),
    law(
        "CC5",
        "x:H y:H z:H",
        "[x, y · z] + x ⊲ ω(y, z) = [x, y] · z + σ(x, y) → z + y · [x, z] + y ← σ(x, z)",
    ),
    law(
        "CC6",
        "a:A b:A c:A",
        "[a, b · c] - ν(b, c) ⊳ a = [a, b] · c + θ(a, b) ⇀ c + b · [a, c] + b ↼ θ(a, c)",
    ),
    law(
        "CC7",
        "x:H",
        "δ(x)#1 ⊗ Δ(δ(x)#2) + ψ(x)#1 ⊗ s(ψ(x)#2) = δ(Δ(x)#1) ⊗ Δ(x)#2 + p(α(x)#1) ⊗ α(x)#2 \
         + τ12(Δ(x)#1 ⊗ δ(Δ(x)#2)) + τ12(β(x)#1 ⊗ p(β(x)#2))",
    ),
    law(
        "CC8",
        "a:A",
        "δ(a)#1 ⊗ Δ(δ(a)#2) - φ(a)#2 ⊗ t(φ(a)#1) = δ(Δ(a)#1) ⊗ Δ(a)#2 + q(ρ(a)#1) ⊗ ρ(a)#2 \
         + τ12(Δ(a)#1 ⊗ δ(Δ(a)#2)) + τ12(γ(a)#1 ⊗ q(γ(a)#2))",
    ),
];

pub const CP: &[Law] = &[
    law(
        "CP1",
        "a:A x:H b:A",
        "[a, x ⇀ b] - (x ← b) ⊳ a = x ⇀ [a, b] + ω(x, θ(a, b)) - (x ⊳ a) · b - (x ⊲ a) ⇀ b",
    ),
    law(
        "CP2",
        "a:A b:A x:H",
        "[a, b ↼ x] - (b → x) ⊳ a = [a, b] ↼ x + ω(θ(a, b), x) - b · (x ⊳ a) - b ↼ (x ⊲ a)",
    ),
    law(
        "CP3",
        "a:A x:H y:H",
        "(x · y) ⊳ a - [a, ω(x, y)] = (x ⊳ a) ↼ y + ω(x ⊲ a, y) + x ⇀ (y ⊳ a) + ω(x, y ⊲ a)",
    ),
    law(
        "CP4",
        "x:H a:A b:A",
        "x ⊳ (a · b) + σ(x, ν(a, b)) = (x ⊳ a) · b + (x ⊲ a) ⇀ b + a · (x ⊳ b) + a ↼ (x ⊲ b)",
    ),
    law(
        "CP5",
        "x:H y:H a:A",
        "x ⊳ (y ⇀ a) + σ(x, y ← a) = σ(x, y) · a + [x, y] ⇀ a + y ⇀ (x ⊳ a) + ω(y, x ⊲ a)",
    ),
    law(
        "CP6",
        "x:H a:A y:H",
        "x ⊳ (a ↼ y) + σ(x, a → y) = a · σ(x, y) + a ↼ [x, y] + (x ⊳ a) ↼ y + ω(x ⊲ a, y)",
    ),
    law(
        "CP7",
        "x:H y:H a:A",
        "[x, y ← a] + x ⊲ (y ⇀ a) = [x, y] ← a + ν(σ(x, y), a) + y · (x ⊲ a) + y ← (x ⊳ a)",
    ),
    law(
        "CP8",
        "x:H a:A y:H",
        "[x, a → y] + x ⊲ (a ↼ y) = a → [x, y] + ν(a, σ(x, y)) + (x ⊲ a) · y + (x ⊳ a) → y",
    ),
    law(
        "CP9",
        "x:H a:A b:A",
        "[x, ν(a, b)] + x ⊲ (a · b) = (x ⊲ a) ← b + ν(x ⊳ a, b) + a → (x ⊲ b) + ν(a, x ⊳ b)",
    ),
    law(
        "CP10",
        "a:A x:H y:H",
        "(x · y) ⊲ a - θ(a, ω(x, y)) = (x ⊲ a) · y + (x ⊳ a) → y + x · (y ⊲ a) + x ← (y ⊳ a)",
    ),
    law(
        "CP11",
        "a:A x:H b:A",
        "θ(a, x ⇀ b) - (x ← b) ⊲ a = x · θ(a, b) + x ← [a, b] - (x ⊲ a) ← b - ν(x ⊳ a, b)",
    ),
    law(
        "CP12",
        "a:A b:A x:H",
        "θ(a, b ↼ x) - (b → x) ⊲ a = θ(a, b) · x + [a, b] → x - b → (x ⊲ a) - ν(b, x ⊳ a)",
    ),
];

pub const CCP: &[Law] = &[
    law(
        "CCP1",
        "a:A",
        "δ(a)#1 ⊗ ρ(δ(a)#2) - φ(a)#2 ⊗ β(φ(a)#1) = -τ(φ(Δ(a)#1)) ⊗ Δ(a)#2 \
         - τ(ψ(ρ(a)#1)) ⊗ ρ(a)#2 + τ12(ρ(a)#1 ⊗ δ(ρ(a)#2)) + τ12(s(a)#1 ⊗ q(s(a)#2))",
    ),
    law(
        "CCP2",
        "a:A",
        "δ(a)#1 ⊗ γ(δ(a)#2) - φ(a)#2 ⊗ α(φ(a)#1) = δ(γ(a)#1) ⊗ γ(a)#2 + q(s(a)#1) ⊗ s(a)#2 \
         - τ12(Δ(a)#1 ⊗ τ(φ(Δ(a)#2))) - τ12(γ(a)#1 ⊗ τ(ψ(γ(a)#2)))",
    ),
    law(
        "CCP3",
        "a:A",
        "φ(a)#2 ⊗ Δ(φ(a)#1) - δ(a)#1 ⊗ s(δ(a)#2) = τ(φ(γ(a)#1)) ⊗ γ(a)#2 \
         + τ(ψ(s(a)#1)) ⊗ s(a)#2 + τ12(ρ(a)#1 ⊗ τ(φ(ρ(a)#2))) + τ12(s(a)#1 ⊗ τ(ψ(s(a)#2)))",
    ),
    law(
        "CCP4",
        "a:A",
        "φ(a)#1 ⊗ Δ(φ(a)#2) + p(a)#1 ⊗ t(p(a)#2) = φ(Δ(a)#1) ⊗ Δ(a)#2 + ψ(ρ(a)#1) ⊗ ρ(a)#2 \
         + τ12(Δ(a)#1 ⊗ φ(Δ(a)#2)) + τ12(γ(a)#1 ⊗ ψ(γ(a)#2))",
    ),
    law(
        "CCP5",
        "a:A",
        "φ(a)#1 ⊗ ρ(φ(a)#2) + p(a)#1 ⊗ β(p(a)#2) = δ(ρ(a)#1) ⊗ ρ(a)#2 + p(Δ(a)#1) ⊗ Δ(a)#2 \
         + τ12(ρ(a)#1 ⊗ φ(ρ(a)#2)) + τ12(s(a)#1 ⊗ ψ(s(a)#2))",
    ),
    law(
        "CCP6",
        "a:A",
        "φ(a)#1 ⊗ γ(φ(a)#2) + p(a)#1 ⊗ α(p(a)#2) = φ(γ(a)#1) ⊗ γ(a)#2 + ψ(s(a)#1) ⊗ s(a)#2 \
         + τ12(Δ(a)#1 ⊗ p(Δ(a)#2)) + τ12(γ(a)#1 ⊗ δ(γ(a)#2))",
    ),
    law(
        "CCP7",
        "x:H",
        "δ(x)#1 ⊗ β(δ(x)#2) + ψ(x)#1 ⊗ ρ(ψ(x)#2) = δ(β(x)#1) ⊗ β(x)#2 + p(t(x)#1) ⊗ t(x)#2 \
         + τ12(Δ(x)#1 ⊗ ψ(Δ(x)#2)) + τ12(β(x)#1 ⊗ φ(β(x)#2))",
    ),
    law(
        "CCP8",
        "x:H",
        "δ(x)#1 ⊗ α(δ(x)#2) + ψ(x)#1 ⊗ γ(ψ(x)#2) = ψ(Δ(x)#1) ⊗ Δ(x)#2 + φ(α(x)#1) ⊗ α(x)#2 \
         + τ12(α(x)#1 ⊗ δ(α(x)#2)) + τ12(t(x)#1 ⊗ p(t(x)#2))",
    ),
    law(
        "CCP9",
        "x:H",
        "δ(x)#1 ⊗ t(δ(x)#2) + ψ(x)#1 ⊗ Δ(ψ(x)#2) = ψ(β(x)#1) ⊗ β(x)#2 + φ(t(x)#1) ⊗ t(x)#2 \
         + τ12(α(x)#1 ⊗ ψ(α(x)#2)) + τ12(t(x)#1 ⊗ φ(t(x)#2))",
    ),
    law(
        "CCP10",
        "x:H",
        "ψ(x)#2 ⊗ Δ(ψ(x)#1) - q(x)#1 ⊗ s(q(x)#2) = τ(ψ(Δ(x)#1)) ⊗ Δ(x)#2 \
         + τ(φ(α(x)#1)) ⊗ α(x)#2 + τ12(Δ(x)#1 ⊗ τ(ψ(Δ(x)#2))) + τ12(β(x)#1 ⊗ τ(φ(β(x)#2)))",
    ),
    law(
        "CCP11",
        "x:H",
        "ψ(x)#2 ⊗ β(ψ(x)#1) - q(x)#1 ⊗ ρ(q(x)#2) = τ(ψ(β(x)#1)) ⊗ β(x)#2 \
         + τ(φ(t(x)#1)) ⊗ t(x)#2 - τ12(β(x)#1 ⊗ δ(β(x)#2)) - τ12(Δ(x)#1 ⊗ q(Δ(x)#2))",
    ),
    law(
        "CCP12",
        "x:H",
        "q(x)#1 ⊗ γ(q(x)#2) - ψ(x)#2 ⊗ α(ψ(x)#1) = q(Δ(x)#1) ⊗ Δ(x)#2 + δ(α(x)#1) ⊗ α(x)#2 \
         - τ12(α(x)#1 ⊗ τ(ψ(α(x)#2))) - τ12(t(x)#1 ⊗ τ(φ(t(x)#2)))",
    ),
];

pub const CDM: &[Law] = &[
    law(
        "CDM1",
        "a:A b:A",
        "φ(a · b) + ψ(ν(a, b)) = (φ(a)#1 ← b) ⊗ φ(a)#2 + (a → φ(b)#1) ⊗ φ(b)#2 \
         + ρ(b)#1 ⊗ [a, ρ(b)#2] + γ(a)#2 ⊗ [b, γ(a)#1] + ν(δ(a)#1, b) ⊗ δ(a)#2 \
         + ν(a, δ(b)#1) ⊗ δ(b)#2 - s(b)#1 ⊗ (s(b)#2 ⊳ a) - s(a)#2 ⊗ (s(a)#1 ⊳ b)",
    ),
    law(
        "CDM2",
        "a:A b:A",
        "τ(φ(a · b)) + τ(ψ(ν(a, b))) = φ(a)#2 · b ⊗ φ(a)#1 + a · φ(b)#2 ⊗ φ(b)#1 \
         + γ(b)#1 ⊗ (γ(b)#2 ⊲ a) + ρ(a)#2 ⊗ (ρ(a)#1 ⊲ b) - (p(a)#1 ⇀ b) ⊗ p(a)#2 \
         - (a ↼ p(b)#1) ⊗ p(b)#2 - Δ(b)#1 ⊗ θ(a, Δ(b)#2) - Δ(a)#2 ⊗ θ(b, Δ(a)#1)",
    ),
    law(
        "CDM3",
        "x:H y:H",
        "ψ(x · y) + φ(ω(x, y)) = ψ(x)#1 · y ⊗ ψ(x)#2 + x · ψ(y)#1 ⊗ ψ(y)#2 \
         + β(y)#1 ⊗ (x ⊳ β(y)#2) + α(x)#2 ⊗ (y ⊳ α(x)#1) + (q(x)#1 → y) ⊗ q(x)#2 \
         + (x ← q(y)#1) ⊗ q(y)#2 + Δ(y)#1 ⊗ σ(x, Δ(y)#2) + Δ(x)#2 ⊗ σ(y, Δ(x)#1)",
    ),
    law(
        "CDM4",
        "x:H y:H",
        "τ(ψ(x · y)) + τ(φ(ω(x, y))) = (ψ(x)#2 ↼ y) ⊗ ψ(x)#1 + (x ⇀ ψ(y)#2) ⊗ ψ(y)#1 \
         - α(y)#1 ⊗ [x, α(y)#2] - β(x)#2 ⊗ [y, β(x)#1] - ω(δ(x)#1, y) ⊗ δ(x)#2 \
         - ω(x, δ(y)#1) ⊗ δ(y)#2 - t(y)#1 ⊗ (x ⊲ t(y)#2) - t(x)#2 ⊗ (y ⊲ t(x)#1)",
    ),
    law(
        "CDM5",
        "x:H b:A",
        "δ(x ⇀ b) + q(x ← b) = (ψ(x)#1 ⇀ b) ⊗ ψ(x)#2 + (x ⇀ δ(b)#1) ⊗ δ(b)#2 \
         - β(x)#2 ⊗ (β(x)#1 ⊳ b) + Δ(b)#1 ⊗ (x ⊳ Δ(b)#2) + q(x)#1 · b ⊗ q(x)#2 \
         + ω(x, φ(b)#1) ⊗ φ(b)#2 + γ(b)#1 ⊗ σ(x, γ(b)#2) + t(x)#2 ⊗ [b, t(x)#1]",
    ),
    law(
        "CDM6",
        "a:A y:H",
        "δ(a ↼ y) + q(a → y) = (a ↼ ψ(y)#1) ⊗ ψ(y)#2 + (δ(a)#1 ↼ y) ⊗ δ(a)#2 \
         - α(y)#1 ⊗ (α(y)#2 ⊳ a) + Δ(a)#2 ⊗ (y ⊳ Δ(a)#1) + a · q(y)#1 ⊗ q(y)#2 \
         + ω(φ(a)#1, y) ⊗ φ(a)#2 + t(y)#1 ⊗ [a, t(y)#2] + ρ(a)#2 ⊗ σ(y, ρ(a)#1)",
    ),
    law(
        "CDM7",
        "x:H b:A",
        "δ(x ← b) + p(x ⇀ b) = (δ(x)#1 ← b) ⊗ δ(x)#2 - (x ← φ(b)#2) ⊗ φ(b)#1 \
         + ρ(b)#1 ⊗ (x ⊲ ρ(b)#2) - Δ(x)#2 ⊗ (Δ(x)#1 ⊲ b) - ν(ψ(x)#2, b) ⊗ ψ(x)#1 \
         + x · p(b)#1 ⊗ p(b)#2 + s(b)#1 ⊗ [x, s(b)#2] + α(x)#2 ⊗ θ(b, α(x)#1)",
    ),
    law(
        "CDM8",
        "a:A y:H",
        "δ(a → y) + p(a ↼ y) = (a → δ(y)#1) ⊗ δ(y)#2 - (φ(a)#2 → y) ⊗ φ(a)#1 \
         + γ(a)#2 ⊗ (y ⊲ γ(a)#1) - Δ(y)#1 ⊗ (Δ(y)#2 ⊲ a) - ν(a, ψ(y)#2) ⊗ ψ(y)#1 \
         + p(a)#1 · y ⊗ p(a)#2 + s(a)#2 ⊗ [y, s(a)#1] + β(y)#1 ⊗ θ(a, β(y)#2)",
    ),
    law(
        "CDM9",
        "x:H b:A",
        "φ(x ⇀ b) + ψ(x ← b) = (ψ(x)#1 ← b) ⊗ ψ(x)#2 + (x ← δ(b)#1) ⊗ δ(b)#2 \
         + x · φ(b)#1 ⊗ φ(b)#2 + ρ(b)#1 ⊗ (x ⊳ ρ(b)#2) - Δ(x)#2 ⊗ (Δ(x)#1 ⊳ b) \
         + α(x)#2 ⊗ [b, α(x)#1] + ν(q(x)#1, b) ⊗ q(x)#2 + s(b)#1 ⊗ σ(x, s(b)#2)",
    ),
    law(
        "CDM10",
        "x:H b:A",
        "τ(φ(x ⇀ b)) + τ(ψ(x ← b)) = ψ(x)#2 · b ⊗ ψ(x)#1 + (x ⇀ φ(b)#2) ⊗ φ(b)#1 \
         + β(x)#2 ⊗ (β(x)#1 ⊲ b) - (δ(x)#1 ⇀ b) ⊗ δ(x)#2 - γ(b)#1 ⊗ [x, γ(b)#2] \
         - Δ(b)#1 ⊗ (x ⊲ Δ(b)#2) - ω(x, p(b)#1) ⊗ p(b)#2 - t(x)#2 ⊗ θ(b, t(x)#1)",
    ),
    law(
        "CDM11",
        "a:A y:H",
        "φ(a ↼ y) + ψ(a → y) = φ(a)#1 · y ⊗ φ(a)#2 + (a → ψ(y)#1) ⊗ ψ(y)#2 \
         + β(y)#1 ⊗ [a, β(y)#2] - (δ(a)#1 → y) ⊗ δ(a)#2 + γ(a)#2 ⊗ (y ⊳ γ(a)#1) \
         - Δ(y)#1 ⊗ (Δ(y)#2 ⊳ a) + ν(a, q(y)#1) ⊗ q(y)#2 + s(a)#2 ⊗ σ(y, s(a)#1)",
    ),
    law(
        "CDM12",
        "a:A y:H",
        "τ(φ(a ↼ y)) + τ(ψ(a → y)) = a · ψ(y)#2 ⊗ ψ(y)#1 + (φ(a)#2 ↼ y) ⊗ φ(a)#1 \
         + α(y)#1 ⊗ (α(y)#2 ⊲ a) - (a ↼ δ(y)#1) ⊗ δ(y)#2 - ρ(a)#2 ⊗ [y, ρ(a)#1] \
         - Δ(a)#2 ⊗ (y ⊲ Δ(a)#1) - ω(p(a)#1, y) ⊗ p(a)#2 - t(y)#1 ⊗ θ(a, t(y)#2)",
    ),
    law(
        "CDM13",
        "a:A b:A",
        "ρ([a, b]) + β(θ(a, b)) = (φ(a)#1 ← b) ⊗ φ(a)#2 - (ρ(b)#1 ⊲ a) ⊗ ρ(b)#2 \
         + ρ(b)#1 ⊗ [a, ρ(b)#2] - φ(a)#1 ⊗ b · φ(a)#2 + θ(a, Δ(b)#1) ⊗ Δ(b)#2 \
         - s(b)#1 ⊗ (s(b)#2 ⊳ a) + ν(δ(a)#1, b) ⊗ δ(a)#2 - p(a)#1 ⊗ (b ↼ p(a)#2)",
    ),
    law(
        "CDM14",
        "x:H y:H",
        "β([x, y]) + ρ(σ(x, y)) = [x, β(y)#1] ⊗ β(y)#2 + β(y)#1 ⊗ (x ⊳ β(y)#2) \
         - ψ(x)#1 ⊗ (y ⇀ ψ(x)#2) + ψ(x)#1 · y ⊗ ψ(x)#2 + (x ⊲ t(y)#1) ⊗ t(y)#2 \
         + Δ(y)#1 ⊗ σ(x, Δ(y)#2) + (q(x)#1 → y) ⊗ q(x)#2 - δ(x)#1 ⊗ ω(y, δ(x)#2)",
    ),
    // Two printed terms lie in H ⊗ A. The A ⊗ H component of the ambient
    // co-Leibniz rule gives `(a₁ₚ ⇀ b) ⊗ a₂ₚ` and `-a⟨0⟩b ⊗ a⟨−1⟩` instead.
    law(
        "CDM15",
        "a:A b:A",
        "γ([a, b]) + α(θ(a, b)) = φ(a)#2 ⊗ (b → φ(a)#1) - γ(b)#1 ⊗ (γ(b)#2 ⊲ a) \
         + [a, γ(b)#1] ⊗ γ(b)#2 - δ(a)#1 ⊗ ν(b, δ(a)#2) + Δ(b)#1 ⊗ θ(a, Δ(b)#2) \
         - (s(b)#1 ⊳ a) ⊗ s(b)#2 + (p(a)#1 ⇀ b) ⊗ p(a)#2 - φ(a)#2 · b ⊗ φ(a)#1",
    ),
    law(
        "CDM16",
        "x:H y:H",
        "α([x, y]) + γ(σ(x, y)) = α(y)#1 ⊗ [x, α(y)#2] + (x ⊳ α(y)#1) ⊗ α(y)#2 \
         - (ψ(x)#2 ↼ y) ⊗ ψ(x)#1 + ψ(x)#2 ⊗ y · ψ(x)#1 + t(y)#1 ⊗ (x ⊲ t(y)#2) \
         + σ(x, Δ(y)#1) ⊗ Δ(y)#2 - q(x)#1 ⊗ (y ← q(x)#2) + ω(δ(x)#1, y) ⊗ δ(x)#2",
    ),
    law(
        "CDM17",
        "x:H b:A",
        "Δ(x ⊳ b) + t(x ⊲ b) = (x ⊳ Δ(b)#1) ⊗ Δ(b)#2 + Δ(b)#1 ⊗ (x ⊳ Δ(b)#2) \
         + (ψ(x)#1 ⇀ b) ⊗ ψ(x)#2 + ψ(x)#2 ⊗ (b ↼ ψ(x)#1) + σ(x, ρ(b)#1) ⊗ ρ(b)#2 \
         + γ(b)#1 ⊗ σ(x, γ(b)#2) + q(x)#1 · b ⊗ q(x)#2 - q(x)#1 ⊗ b · q(x)#2",
    ),
    law(
        "CDM18",
        "y:H a:A",
        "Δ(y ⊳ a) + t(y ⊲ a) = -(δ(a)#1 ↼ y) ⊗ δ(a)#2 + δ(a)#1 ⊗ (y ⇀ δ(a)#2) \
         + (β(y)#1 ⊳ a) ⊗ β(y)#2 + α(y)#1 ⊗ (α(y)#2 ⊳ a) - [a, t(y)#1] ⊗ t(y)#2 \
         - t(y)#1 ⊗ [a, t(y)#2] - φ(a)#2 ⊗ ω(y, φ(a)#1) - ω(φ(a)#1, y) ⊗ φ(a)#2",
    ),
    law(
        "CDM19",
        "x:H b:A",
        "Δ(x ⊲ b) + s(x ⊳ b) = (x ⊲ γ(b)#1) ⊗ γ(b)#2 + ρ(b)#1 ⊗ (x ⊲ ρ(b)#2) \
         + (δ(x)#1 ← b) ⊗ δ(x)#2 - δ(x)#1 ⊗ (b → δ(x)#2) + [x, s(b)#1] ⊗ s(b)#2 \
         + s(b)#1 ⊗ [x, s(b)#2] - ν(ψ(x)#2, b) ⊗ ψ(x)#1 - ψ(x)#1 ⊗ ν(b, ψ(x)#2)",
    ),
    law(
        "CDM20",
        "y:H a:A",
        "Δ(y ⊲ a) + s(y ⊳ a) = (Δ(y)#1 ⊲ a) ⊗ Δ(y)#2 + Δ(y)#1 ⊗ (Δ(y)#2 ⊲ a) \
         + (φ(a)#2 → y) ⊗ φ(a)#1 + φ(a)#1 ⊗ (y ← φ(a)#2) - θ(a, α(y)#1) ⊗ α(y)#2 \
         - β(y)#1 ⊗ θ(a, β(y)#2) - p(a)#1 · y ⊗ p(a)#2 + p(a)#1 ⊗ y · p(a)#2",
    ),
    law(
        "CDM21",
        "x:H b:A",
        "ρ(x ⊳ b) + β(x ⊲ b) = (x ⊲ Δ(b)#1) ⊗ Δ(b)#2 + [x, ρ(b)#1] ⊗ ρ(b)#2 \
         + ρ(b)#1 ⊗ (x ⊳ ρ(b)#2) - ψ(x)#1 ⊗ b · ψ(x)#2 + (ψ(x)#1 ← b) ⊗ ψ(x)#2 \
         - δ(x)#1 ⊗ (b ↼ δ(x)#2) + s(b)#1 ⊗ σ(x, s(b)#2) + ν(q(x)#1, b) ⊗ q(x)#2",
    ),
    law(
        "CDM22",
        "y:H a:A",
        "ρ(y ⊳ a) + β(y ⊲ a) = (β(y)#1 ⊲ a) ⊗ β(y)#2 - β(y)#1 ⊗ [a, β(y)#2] \
         - (δ(a)#1 → y) ⊗ δ(a)#2 - φ(a)#1 · y ⊗ φ(a)#2 + Δ(y)#1 ⊗ (Δ(y)#2 ⊳ a) \
         + φ(a)#1 ⊗ (y ⇀ φ(a)#2) - θ(a, t(y)#1) ⊗ t(y)#2 + p(a)#1 ⊗ ω(y, p(a)#2)",
    ),
    law(
        "CDM23",
        "x:H b:A",
        "γ(x ⊳ b) + α(x ⊲ b) = Δ(b)#1 ⊗ (x ⊲ Δ(b)#2) + γ(b)#1 ⊗ [x, γ(b)#2] \
         + (x ⊳ γ(b)#1) ⊗ γ(b)#2 + ψ(x)#2 ⊗ (b → ψ(x)#1) + (δ(x)#1 ⇀ b) ⊗ δ(x)#2 \
         - ψ(x)#2 · b ⊗ ψ(x)#1 + σ(x, s(b)#1) ⊗ s(b)#2 - q(x)#1 ⊗ ν(b, q(x)#2)",
    ),
    law(
        "CDM24",
        "y:H a:A",
        "γ(y ⊳ a) + α(y ⊲ a) = α(y)#1 ⊗ (α(y)#2 ⊲ a) - [a, α(y)#1] ⊗ α(y)#2 \
         + (Δ(y)#1 ⊳ a) ⊗ Δ(y)#2 - φ(a)#2 ⊗ y · φ(a)#1 + δ(a)#1 ⊗ (y ← δ(a)#2) \
         + (φ(a)#2 ↼ y) ⊗ φ(a)#1 - t(y)#1 ⊗ θ(a, t(y)#2) - ω(p(a)#1, y) ⊗ p(a)#2",
    ),
];

pub const CBB: &[Law] = &[
    law(
        "CBB1",
        "a:A b:A",
        "δ(a · b) + q(ν(a, b)) = δ(a)#1 · b ⊗ δ(a)#2 + (φ(a)#1 ⇀ b) ⊗ φ(a)#2 \
         + a · δ(b)#1 ⊗ δ(b)#2 + (a ↼ φ(b)#1) ⊗ φ(b)#2 + Δ(b)#1 ⊗ [a, Δ(b)#2] \
         - γ(b)#1 ⊗ (γ(b)#2 ⊳ a) + Δ(a)#2 ⊗ [b, Δ(a)#1] - ρ(a)#2 ⊗ (ρ(a)#1 ⊳ b)",
    ),
    law(
        "CBB2",
        "a:A b:A",
        "Δ([a, b]) + t(θ(a, b)) = [a, Δ(b)#1] ⊗ Δ(b)#2 - (ρ(b)#1 ⊳ a) ⊗ ρ(b)#2 \
         + Δ(b)#1 ⊗ [a, Δ(b)#2] - γ(b)#1 ⊗ (γ(b)#2 ⊳ a) + δ(a)#1 · b ⊗ δ(a)#2 \
         + (φ(a)#1 ⇀ b) ⊗ φ(a)#2 - δ(a)#1 ⊗ b · δ(a)#2 + φ(a)#2 ⊗ (b ↼ φ(a)#1)",
    ),
    law(
        "CBB3",
        "x:H y:H",
        "δ(x · y) + p(ω(x, y)) = δ(x)#1 · y ⊗ δ(x)#2 - (ψ(x)#2 → y) ⊗ ψ(x)#1 \
         + x · δ(y)#1 ⊗ δ(y)#2 - (x ← ψ(y)#2) ⊗ ψ(y)#1 + Δ(y)#1 ⊗ [x, Δ(y)#2] \
         + β(y)#1 ⊗ (x ⊲ β(y)#2) + Δ(x)#2 ⊗ [y, Δ(x)#1] + α(x)#2 ⊗ (y ⊲ α(x)#1)",
    ),
    law(
        "CBB4",
        "x:H y:H",
        "Δ([x, y]) + s(σ(x, y)) = [x, Δ(y)#1] ⊗ Δ(y)#2 + (x ⊲ α(y)#1) ⊗ α(y)#2 \
         + Δ(y)#1 ⊗ [x, Δ(y)#2] + β(y)#1 ⊗ (x ⊲ β(y)#2) + δ(x)#1 · y ⊗ δ(x)#2 \
         - (ψ(x)#2 → y) ⊗ ψ(x)#1 - δ(x)#1 ⊗ y · δ(x)#2 - ψ(x)#1 ⊗ (y ← ψ(x)#2)",
    ),
];

// Extending data. The complement is `V`; roles absent from a kind's roster
// are zero, so terms that mention them vanish for that kind.

pub const EXT_A1: &[Law] = &[
    law("A1", "x:V y:V a:A", "[x, y ← a] = [x, y] ← a + y · (x ⊲ a)"),
    law("A2", "x:V a:A y:V", "[x, a → y] = a → [x, y] + (x ⊲ a) · y"),
    law(
        "A3",
        "x:V a:A b:A",
        "[x, ν(a, b)] + x ⊲ (a · b) = (x ⊲ a) ← b + a → (x ⊲ b)",
    ),
    law("A4", "x:V y:V a:A", "(x · y) ⊲ a = (x ⊲ a) · y + x · (y ⊲ a)"),
    law(
        "A5",
        "x:V b:A a:A",
        "(x ← b) ⊲ a = (x ⊲ a) ← b - x · θ(a, b) - x ← [a, b]",
    ),
    law(
        "A6",
        "b:A x:V a:A",
        "(b → x) ⊲ a = b → (x ⊲ a) - θ(a, b) · x - [a, b] → x",
    ),
    law("A7", "x:V y:V z:V", "[x, y · z] = [x, y] · z + y · [x, z]"),
];

/// The `V`-component of the Leibniz rule on three elements of `A`, which the
/// printed list does not state.
pub const EXT_A1_AMENDED: &[Law] = &[law(
    "A7b",
    "a:A b:A c:A",
    "θ(a, b · c) - ν(b, c) ⊲ a = θ(a, b) ← c + ν([a, b], c) + b → θ(a, c) + ν(b, [a, c])",
)];

pub const EXT_A2: &[Law] = &[
    law(
        "B1",
        "a:A x:V b:A",
        "[a, x ⇀ b] - (x ← b) ⊳ a = x ⇀ [a, b] - (x ⊳ a) · b - (x ⊲ a) ⇀ b",
    ),
    law(
        "B2",
        "a:A b:A x:V",
        "[a, b ↼ x] - (b → x) ⊳ a = [a, b] ↼ x - b · (x ⊳ a) - b ↼ (x ⊲ a)",
    ),
    law(
        "B3",
        "x:V y:V a:A",
        "(x · y) ⊳ a - [a, ω(x, y)] = (x ⊳ a) ↼ y + ω(x ⊲ a, y) + x ⇀ (y ⊳ a) \
         + ω(x, y ⊲ a)",
    ),
    law(
        "B4",
        "x:V a:A b:A",
        "x ⊳ (a · b) = (x ⊳ a) · b + (x ⊲ a) ⇀ b + a · (x ⊳ b) + a ↼ (x ⊲ b)",
    ),
    law(
        "B5",
        "x:V y:V a:A",
        "x ⊳ (y ⇀ a) + σ(x, y ← a) = σ(x, y) · a + [x, y] ⇀ a + y ⇀ (x ⊳ a) \
         + ω(y, x ⊲ a)",
    ),
    law(
        "B6",
        "x:V a:A y:V",
        "x ⊳ (a ↼ y) + σ(x, a → y) = a · σ(x, y) + a ↼ [x, y] + (x ⊳ a) ↼ y \
         + ω(x ⊲ a, y)",
    ),
    law(
        "B7",
        "x:V y:V a:A",
        "[x, y ← a] + x ⊲ (y ⇀ a) = [x, y] ← a + y · (x ⊲ a) + y ← (x ⊳ a)",
    ),
    law(
        "B8",
        "x:V a:A y:V",
        "[x, a → y] + x ⊲ (a ↼ y) = a → [x, y] + (x ⊲ a) · y + (x ⊳ a) → y",
    ),
    law("B9", "x:V a:A b:A", "x ⊲ (a · b) = (x ⊲ a) ← b + a → (x ⊲ b)"),
    law(
        "B10",
        "x:V y:V a:A",
        "(x · y) ⊲ a = (x ⊲ a) · y + (x ⊳ a) → y + x · (y ⊲ a) + x ← (y ⊳ a)",
    ),
    law("B11", "x:V b:A a:A", "(x ← b) ⊲ a = (x ⊲ a) ← b - x ← [a, b]"),
    law("B12", "b:A x:V a:A", "(b → x) ⊲ a = b → (x ⊲ a) - [a, b] → x"),
    law(
        "B13",
        "x:V y:V z:V",
        "[x, y · z] = [x, y] · z + y · [x, z] + σ(x, y) → z + y ← σ(x, z) \
         - x ⊲ ω(y, z)",
    ),
];

/// The `A`-component of the Leibniz rule on three elements of `V`.
pub const EXT_A2_AMENDED: &[Law] = &[law(
    "B13b",
    "x:V y:V z:V",
    "x ⊳ ω(y, z) + σ(x, y · z) = σ(x, y) ↼ z + ω([x, y], z) + y ⇀ σ(x, z) + ω(y, [x, z])",
)];

pub const EXT_C1: &[Law] = &[
    law(
        "C1",
        "a:A",
        "δ(a)#1 ⊗ ρ(δ(a)#2) - φ(a)#2 ⊗ β(φ(a)#1) = -τ(φ(Δ(a)#1)) ⊗ Δ(a)#2 \
         - τ(ψ(ρ(a)#1)) ⊗ ρ(a)#2 + τ12(ρ(a)#1 ⊗ δ(ρ(a)#2))",
    ),
    law(
        "C2",
        "a:A",
        "δ(a)#1 ⊗ γ(δ(a)#2) - φ(a)#2 ⊗ α(φ(a)#1) = δ(γ(a)#1) ⊗ γ(a)#2 \
         - τ12(Δ(a)#1 ⊗ τ(φ(Δ(a)#2))) - τ12(γ(a)#1 ⊗ τ(ψ(γ(a)#2)))",
    ),
    law(
        "C3",
        "a:A",
        "φ(a)#2 ⊗ Δ(φ(a)#1) - δ(a)#1 ⊗ s(δ(a)#2) = τ(φ(γ(a)#1)) ⊗ γ(a)#2 \
         + τ(ψ(s(a)#1)) ⊗ s(a)#2 + τ12(ρ(a)#1 ⊗ τ(φ(ρ(a)#2))) \
         + τ12(s(a)#1 ⊗ τ(ψ(s(a)#2)))",
    ),
    law(
        "C4",
        "a:A",
        "φ(a)#1 ⊗ Δ(φ(a)#2) = φ(Δ(a)#1) ⊗ Δ(a)#2 + ψ(ρ(a)#1) ⊗ ρ(a)#2 \
         + τ12(Δ(a)#1 ⊗ φ(Δ(a)#2)) + τ12(γ(a)#1 ⊗ ψ(γ(a)#2))",
    ),
    law(
        "C5",
        "a:A",
        "φ(a)#1 ⊗ ρ(φ(a)#2) + p(a)#1 ⊗ β(p(a)#2) = δ(ρ(a)#1) ⊗ ρ(a)#2 \
         + p(Δ(a)#1) ⊗ Δ(a)#2 + τ12(ρ(a)#1 ⊗ φ(ρ(a)#2)) + τ12(s(a)#1 ⊗ ψ(s(a)#2))",
    ),
    law(
        "C6",
        "a:A",
        "φ(a)#1 ⊗ γ(φ(a)#2) + p(a)#1 ⊗ α(p(a)#2) = φ(γ(a)#1) ⊗ γ(a)#2 \
         + ψ(s(a)#1) ⊗ s(a)#2 + τ12(Δ(a)#1 ⊗ p(Δ(a)#2)) + τ12(γ(a)#1 ⊗ δ(γ(a)#2))",
    ),
    law(
        "C7",
        "x:V",
        "δ(x)#1 ⊗ β(δ(x)#2) + ψ(x)#1 ⊗ ρ(ψ(x)#2) = δ(β(x)#1) ⊗ β(x)#2 \
         + τ12(Δ(x)#1 ⊗ ψ(Δ(x)#2)) + τ12(β(x)#1 ⊗ φ(β(x)#2))",
    ),
    law(
        "C8",
        "x:V",
        "δ(x)#1 ⊗ α(δ(x)#2) + ψ(x)#1 ⊗ γ(ψ(x)#2) = ψ(Δ(x)#1) ⊗ Δ(x)#2 \
         + φ(α(x)#1) ⊗ α(x)#2 + τ12(α(x)#1 ⊗ δ(α(x)#2))",
    ),
    law(
        "C9",
        "x:V",
        "ψ(x)#1 ⊗ Δ(ψ(x)#2) = ψ(β(x)#1) ⊗ β(x)#2 + τ12(α(x)#1 ⊗ ψ(α(x)#2))",
    ),
    law(
        "C10",
        "x:V",
        "ψ(x)#2 ⊗ Δ(ψ(x)#1) = τ(ψ(Δ(x)#1)) ⊗ Δ(x)#2 + τ(φ(α(x)#1)) ⊗ α(x)#2 \
         + τ12(Δ(x)#1 ⊗ τ(ψ(Δ(x)#2))) + τ12(β(x)#1 ⊗ τ(φ(β(x)#2)))",
    ),
    law(
        "C11",
        "x:V",
        "ψ(x)#2 ⊗ β(ψ(x)#1) = τ(ψ(β(x)#1)) ⊗ β(x)#2 - τ12(β(x)#1 ⊗ δ(β(x)#2))",
    ),
    law(
        "C12",
        "x:V",
        "ψ(x)#2 ⊗ α(ψ(x)#1) = τ12(α(x)#1 ⊗ τ(ψ(α(x)#2))) - δ(α(x)#1) ⊗ α(x)#2",
    ),
    law(
        "C13",
        "x:V",
        "δ(x)#1 ⊗ Δ(δ(x)#2) + ψ(x)#1 ⊗ s(ψ(x)#2) = δ(Δ(x)#1) ⊗ Δ(x)#2 \
         + p(α(x)#1) ⊗ α(x)#2 + τ12(Δ(x)#1 ⊗ δ(Δ(x)#2)) + τ12(β(x)#1 ⊗ p(β(x)#2))",
    ),
];

/// The `V ⊗ V ⊗ V`-component of the co-Leibniz rule on `A`.
pub const EXT_C1_AMENDED: &[Law] = &[law(
    "C13b",
    "a:A",
    "p(a)#1 ⊗ Δ(p(a)#2) + φ(a)#1 ⊗ s(φ(a)#2) = δ(s(a)#1) ⊗ s(a)#2 + p(γ(a)#1) ⊗ γ(a)#2 \
     + τ12(ρ(a)#1 ⊗ p(ρ(a)#2)) + τ12(s(a)#1 ⊗ δ(s(a)#2))",
)];

pub const EXT_C2: &[Law] = &[
    law(
        "D1",
        "x:V",
        "δ(x)#1 ⊗ β(δ(x)#2) = δ(β(x)#1) ⊗ β(x)#2 + τ12(Δ(x)#1 ⊗ ψ(Δ(x)#2))",
    ),
    law(
        "D2",
        "x:V",
        "δ(x)#1 ⊗ α(δ(x)#2) = ψ(Δ(x)#1) ⊗ Δ(x)#2 + τ12(α(x)#1 ⊗ δ(α(x)#2))",
    ),
    law(
        "D3",
        "x:V",
        "δ(x)#1 ⊗ t(δ(x)#2) + ψ(x)#1 ⊗ Δ(ψ(x)#2) = ψ(β(x)#1) ⊗ β(x)#2 \
         + τ12(α(x)#1 ⊗ ψ(α(x)#2))",
    ),
    law(
        "D4",
        "x:V",
        "ψ(x)#2 ⊗ Δ(ψ(x)#1) = τ(ψ(Δ(x)#1)) ⊗ Δ(x)#2 + τ12(Δ(x)#1 ⊗ τ(ψ(Δ(x)#2)))",
    ),
    law(
        "D5",
        "x:V",
        "ψ(x)#2 ⊗ β(ψ(x)#1) = τ(ψ(β(x)#1)) ⊗ β(x)#2 - τ12(β(x)#1 ⊗ δ(β(x)#2)) \
         - τ12(Δ(x)#1 ⊗ q(Δ(x)#2))",
    ),
    law(
        "D6",
        "x:V",
        "ψ(x)#2 ⊗ α(ψ(x)#1) = τ12(α(x)#1 ⊗ τ(ψ(α(x)#2))) - q(Δ(x)#1) ⊗ Δ(x)#2 \
         - δ(α(x)#1) ⊗ α(x)#2",
    ),
    law(
        "D7",
        "x:V",
        "δ(x)#1 ⊗ Δ(δ(x)#2) = δ(Δ(x)#1) ⊗ Δ(x)#2 + τ12(Δ(x)#1 ⊗ δ(Δ(x)#2))",
    ),
    law(
        "D8",
        "x:V",
        "q(x)#1 ⊗ Δ(q(x)#2) - ψ(x)#2 ⊗ t(ψ(x)#1) = q(β(x)#1) ⊗ β(x)#2 \
         + δ(t(x)#1) ⊗ t(x)#2 + τ12(α(x)#1 ⊗ q(α(x)#2)) + τ12(t(x)#1 ⊗ δ(t(x)#2))",
    ),
];

pub const EXT_I: &[Law] = &[
    law(
        "E1",
        "a:A b:A",
        "φ(a · b) + ψ(ν(a, b)) = (φ(a)#1 ← b) ⊗ φ(a)#2 + (a → φ(b)#1) ⊗ φ(b)#2 \
         + ρ(b)#1 ⊗ [a, ρ(b)#2] + γ(a)#2 ⊗ [b, γ(a)#1] + ν(δ(a)#1, b) ⊗ δ(a)#2 \
         + ν(a, δ(b)#1) ⊗ δ(b)#2",
    ),
    law(
        "E2",
        "a:A b:A",
        "τ(φ(a · b)) + τ(ψ(ν(a, b))) = φ(a)#2 · b ⊗ φ(a)#1 + a · φ(b)#2 ⊗ φ(b)#1 \
         + γ(b)#1 ⊗ (γ(b)#2 ⊲ a) + ρ(a)#2 ⊗ (ρ(a)#1 ⊲ b) - Δ(b)#1 ⊗ θ(a, Δ(b)#2) \
         - Δ(a)#2 ⊗ θ(b, Δ(a)#1)",
    ),
    law(
        "E3",
        "x:V y:V",
        "ψ(x · y) = ψ(x)#1 · y ⊗ ψ(x)#2 + x · ψ(y)#1 ⊗ ψ(y)#2",
    ),
    law(
        "E4",
        "x:V y:V",
        "τ(ψ(x · y)) = -α(y)#1 ⊗ [x, α(y)#2] - β(x)#2 ⊗ [y, β(x)#1]",
    ),
    law(
        "E5",
        "x:V b:A",
        "δ(x ← b) = (δ(x)#1 ← b) ⊗ δ(x)#2 - (x ← φ(b)#2) ⊗ φ(b)#1 \
         + ρ(b)#1 ⊗ (x ⊲ ρ(b)#2) - Δ(x)#2 ⊗ (Δ(x)#1 ⊲ b) - ν(ψ(x)#2, b) ⊗ ψ(x)#1 \
         + x · p(b)#1 ⊗ p(b)#2 + s(b)#1 ⊗ [x, s(b)#2] + α(x)#2 ⊗ θ(b, α(x)#1)",
    ),
    law(
        "E6",
        "a:A y:V",
        "δ(a → y) = (a → δ(y)#1) ⊗ δ(y)#2 - (φ(a)#2 → y) ⊗ φ(a)#1 \
         + γ(a)#2 ⊗ (y ⊲ γ(a)#1) - Δ(y)#1 ⊗ (Δ(y)#2 ⊲ a) - ν(a, ψ(y)#2) ⊗ ψ(y)#1 \
         + p(a)#1 · y ⊗ p(a)#2 + s(a)#2 ⊗ [y, s(a)#1] + β(y)#1 ⊗ θ(a, β(y)#2)",
    ),
    law(
        "E7",
        "x:V b:A",
        "ψ(x ← b) = (ψ(x)#1 ← b) ⊗ ψ(x)#2 + (x ← δ(b)#1) ⊗ δ(b)#2 \
         + x · φ(b)#1 ⊗ φ(b)#2 + α(x)#2 ⊗ [b, α(x)#1]",
    ),
    law(
        "E8",
        "x:V b:A",
        "τ(ψ(x ← b)) = ψ(x)#2 · b ⊗ ψ(x)#1 + β(x)#2 ⊗ (β(x)#1 ⊲ b) \
         - γ(b)#1 ⊗ [x, γ(b)#2] - Δ(b)#1 ⊗ (x ⊲ Δ(b)#2)",
    ),
    law(
        "E9",
        "a:A y:V",
        "ψ(a → y) = φ(a)#1 · y ⊗ φ(a)#2 + (a → ψ(y)#1) ⊗ ψ(y)#2 \
         + β(y)#1 ⊗ [a, β(y)#2] - (δ(a)#1 → y) ⊗ δ(a)#2",
    ),
    law(
        "E10",
        "a:A y:V",
        "τ(ψ(a → y)) = a · ψ(y)#2 ⊗ ψ(y)#1 + α(y)#1 ⊗ (α(y)#2 ⊲ a) \
         - ρ(a)#2 ⊗ [y, ρ(a)#1] - Δ(a)#2 ⊗ (y ⊲ Δ(a)#1)",
    ),
    law(
        "E11",
        "a:A b:A",
        "ρ([a, b]) + β(θ(a, b)) = (φ(a)#1 ← b) ⊗ φ(a)#2 - (ρ(b)#1 ⊲ a) ⊗ ρ(b)#2 \
         + ρ(b)#1 ⊗ [a, ρ(b)#2] - φ(a)#1 ⊗ b · φ(a)#2 + θ(a, Δ(b)#1) ⊗ Δ(b)#2 \
         + ν(δ(a)#1, b) ⊗ δ(a)#2",
    ),
    law(
        "E12",
        "x:V y:V",
        "β([x, y]) = [x, β(y)#1] ⊗ β(y)#2 + ψ(x)#1 · y ⊗ ψ(x)#2",
    ),
    // As printed, the last two terms repeat the `V ⊗ A` terms of E11 and do
    // not type-check in `A ⊗ V`. The only `A ⊗ V` contribution they can stand
    // for is the one from `-τφ(a)` in the cobracket of `a`, used here.
    law(
        "E13",
        "a:A b:A",
        "γ([a, b]) + α(θ(a, b)) = φ(a)#2 ⊗ (b → φ(a)#1) - γ(b)#1 ⊗ (γ(b)#2 ⊲ a) \
         + [a, γ(b)#1] ⊗ γ(b)#2 - δ(a)#1 ⊗ ν(b, δ(a)#2) + Δ(b)#1 ⊗ θ(a, Δ(b)#2) \
         - φ(a)#2 · b ⊗ φ(a)#1",
    ),
    law(
        "E14",
        "x:V y:V",
        "α([x, y]) = α(y)#1 ⊗ [x, α(y)#2] + ψ(x)#2 ⊗ y · ψ(x)#1",
    ),
    law(
        "E15",
        "x:V b:A",
        "Δ(x ⊲ b) = (x ⊲ γ(b)#1) ⊗ γ(b)#2 + ρ(b)#1 ⊗ (x ⊲ ρ(b)#2) \
         + (δ(x)#1 ← b) ⊗ δ(x)#2 - δ(x)#1 ⊗ (b → δ(x)#2) + [x, s(b)#1] ⊗ s(b)#2 \
         + s(b)#1 ⊗ [x, s(b)#2] - ν(ψ(x)#2, b) ⊗ ψ(x)#1 - ψ(x)#1 ⊗ ν(b, ψ(x)#2)",
    ),
    law(
        "E16",
        "y:V a:A",
        "Δ(y ⊲ a) = (Δ(y)#1 ⊲ a) ⊗ Δ(y)#2 + Δ(y)#1 ⊗ (Δ(y)#2 ⊲ a) \
         + (φ(a)#2 → y) ⊗ φ(a)#1 + φ(a)#1 ⊗ (y ← φ(a)#2) - θ(a, α(y)#1) ⊗ α(y)#2 \
         - β(y)#1 ⊗ θ(a, β(y)#2) - p(a)#1 · y ⊗ p(a)#2 + p(a)#1 ⊗ y · p(a)#2",
    ),
    law(
        "E17",
        "x:V b:A",
        "β(x ⊲ b) = (x ⊲ Δ(b)#1) ⊗ Δ(b)#2 + [x, ρ(b)#1] ⊗ ρ(b)#2 \
         - ψ(x)#1 ⊗ b · ψ(x)#2 + (ψ(x)#1 ← b) ⊗ ψ(x)#2",
    ),
    law(
        "E18",
        "y:V a:A",
        "β(y ⊲ a) = (β(y)#1 ⊲ a) ⊗ β(y)#2 - β(y)#1 ⊗ [a, β(y)#2] \
         - (δ(a)#1 → y) ⊗ δ(a)#2 - φ(a)#1 · y ⊗ φ(a)#2",
    ),
    law(
        "E19",
        "x:V b:A",
        "α(x ⊲ b) = Δ(b)#1 ⊗ (x ⊲ Δ(b)#2) + γ(b)#1 ⊗ [x, γ(b)#2] \
         + ψ(x)#2 ⊗ (b → ψ(x)#1) - ψ(x)#2 · b ⊗ ψ(x)#1",
    ),
    law(
        "E20",
        "y:V a:A",
        "α(y ⊲ a) = α(y)#1 ⊗ (α(y)#2 ⊲ a) - [a, α(y)#1] ⊗ α(y)#2 \
         - φ(a)#2 ⊗ y · φ(a)#1 + δ(a)#1 ⊗ (y ← δ(a)#2)",
    ),
    law(
        "E21",
        "x:V y:V",
        "δ(x · y) = δ(x)#1 · y ⊗ δ(x)#2 - (ψ(x)#2 → y) ⊗ ψ(x)#1 \
         + x · δ(y)#1 ⊗ δ(y)#2 - (x ← ψ(y)#2) ⊗ ψ(y)#1 + Δ(y)#1 ⊗ [x, Δ(y)#2] \
         + β(y)#1 ⊗ (x ⊲ β(y)#2) + Δ(x)#2 ⊗ [y, Δ(x)#1] + α(x)#2 ⊗ (y ⊲ α(x)#1)",
    ),
    law(
        "E22",
        "x:V y:V",
        "Δ([x, y]) = [x, Δ(y)#1] ⊗ Δ(y)#2 + (x ⊲ α(y)#1) ⊗ α(y)#2 \
         + Δ(y)#1 ⊗ [x, Δ(y)#2] + β(y)#1 ⊗ (x ⊲ β(y)#2) + δ(x)#1 · y ⊗ δ(x)#2 \
         - (ψ(x)#2 → y) ⊗ ψ(x)#1 - δ(x)#1 ⊗ y · δ(x)#2 - ψ(x)#1 ⊗ (y ← ψ(x)#2)",
    ),
];

pub const EXT_II: &[Law] = &[
    law(
        "F1",
        "x:V y:V",
        "ψ(x · y) = ψ(x)#1 · y ⊗ ψ(x)#2 + x · ψ(y)#1 ⊗ ψ(y)#2 + β(y)#1 ⊗ (x ⊳ β(y)#2) \
         + α(x)#2 ⊗ (y ⊳ α(x)#1) + (q(x)#1 → y) ⊗ q(x)#2 + (x ← q(y)#1) ⊗ q(y)#2 \
         + Δ(y)#1 ⊗ σ(x, Δ(y)#2) + Δ(x)#2 ⊗ σ(y, Δ(x)#1)",
    ),
    law(
        "F2",
        "x:V y:V",
        "τ(ψ(x · y)) = (ψ(x)#2 ↼ y) ⊗ ψ(x)#1 + (x ⇀ ψ(y)#2) ⊗ ψ(y)#1 \
         - α(y)#1 ⊗ [x, α(y)#2] - β(x)#2 ⊗ [y, β(x)#1] - ω(δ(x)#1, y) ⊗ δ(x)#2 \
         - ω(x, δ(y)#1) ⊗ δ(y)#2 - t(y)#1 ⊗ (x ⊲ t(y)#2) - t(x)#2 ⊗ (y ⊲ t(x)#1)",
    ),
    law(
        "F3",
        "x:V b:A",
        "δ(x ⇀ b) + q(x ← b) = (ψ(x)#1 ⇀ b) ⊗ ψ(x)#2 + (x ⇀ δ(b)#1) ⊗ δ(b)#2 \
         - β(x)#2 ⊗ (β(x)#1 ⊳ b) + Δ(b)#1 ⊗ (x ⊳ Δ(b)#2) + q(x)#1 · b ⊗ q(x)#2 \
         + t(x)#2 ⊗ [b, t(x)#1]",
    ),
    law(
        "F4",
        "a:A y:V",
        "δ(a ↼ y) + q(a → y) = (a ↼ ψ(y)#1) ⊗ ψ(y)#2 + (δ(a)#1 ↼ y) ⊗ δ(a)#2 \
         - α(y)#1 ⊗ (α(y)#2 ⊳ a) + Δ(a)#2 ⊗ (y ⊳ Δ(a)#1) + a · q(y)#1 ⊗ q(y)#2 \
         + t(y)#1 ⊗ [a, t(y)#2]",
    ),
    law(
        "F5",
        "x:V b:A",
        "δ(x ← b) = (δ(x)#1 ← b) ⊗ δ(x)#2 - Δ(x)#2 ⊗ (Δ(x)#1 ⊲ b) \
         + s(b)#1 ⊗ [x, s(b)#2]",
    ),
    law(
        "F6",
        "a:A y:V",
        "δ(a → y) = (a → δ(y)#1) ⊗ δ(y)#2 - Δ(y)#1 ⊗ (Δ(y)#2 ⊲ a) \
         + s(a)#2 ⊗ [y, s(a)#1]",
    ),
    law(
        "F7",
        "x:V b:A",
        "ψ(x ← b) = (ψ(x)#1 ← b) ⊗ ψ(x)#2 + (x ← δ(b)#1) ⊗ δ(b)#2 \
         - Δ(x)#2 ⊗ (Δ(x)#1 ⊳ b) + α(x)#2 ⊗ [b, α(x)#1]",
    ),
    law(
        "F8",
        "x:V b:A",
        "τ(ψ(x ← b)) = ψ(x)#2 · b ⊗ ψ(x)#1 + β(x)#2 ⊗ (β(x)#1 ⊲ b) \
         - (δ(x)#1 ⇀ b) ⊗ δ(x)#2 - Δ(b)#1 ⊗ (x ⊲ Δ(b)#2)",
    ),
    law(
        "F9",
        "a:A y:V",
        "ψ(a → y) = (a → ψ(y)#1) ⊗ ψ(y)#2 + β(y)#1 ⊗ [a, β(y)#2] \
         - (δ(a)#1 → y) ⊗ δ(a)#2 - Δ(y)#1 ⊗ (Δ(y)#2 ⊳ a)",
    ),
    law(
        "F10",
        "a:A y:V",
        "τ(ψ(a → y)) = a · ψ(y)#2 ⊗ ψ(y)#1 + α(y)#1 ⊗ (α(y)#2 ⊲ a) \
         - (a ↼ δ(y)#1) ⊗ δ(y)#2 - Δ(a)#2 ⊗ (y ⊲ Δ(a)#1)",
    ),
    law(
        "F11",
        "x:V y:V",
        "β([x, y]) = [x, β(y)#1] ⊗ β(y)#2 + β(y)#1 ⊗ (x ⊳ β(y)#2) \
         - ψ(x)#1 ⊗ (y ⇀ ψ(x)#2) + ψ(x)#1 · y ⊗ ψ(x)#2 + (x ⊲ t(y)#1) ⊗ t(y)#2 \
         + Δ(y)#1 ⊗ σ(x, Δ(y)#2) + (q(x)#1 → y) ⊗ q(x)#2 - δ(x)#1 ⊗ ω(y, δ(x)#2)",
    ),
    law(
        "F12",
        "x:V y:V",
        "α([x, y]) = α(y)#1 ⊗ [x, α(y)#2] + (x ⊳ α(y)#1) ⊗ α(y)#2 \
         - (ψ(x)#2 ↼ y) ⊗ ψ(x)#1 + ψ(x)#2 ⊗ y · ψ(x)#1 + t(y)#1 ⊗ (x ⊲ t(y)#2) \
         + σ(x, Δ(y)#1) ⊗ Δ(y)#2 - q(x)#1 ⊗ (y ← q(x)#2) + ω(δ(x)#1, y) ⊗ δ(x)#2",
    ),
    law(
        "F13",
        "x:V b:A",
        "Δ(x ⊳ b) + t(x ⊲ b) = (x ⊳ Δ(b)#1) ⊗ Δ(b)#2 + Δ(b)#1 ⊗ (x ⊳ Δ(b)#2) \
         + (ψ(x)#1 ⇀ b) ⊗ ψ(x)#2 + ψ(x)#2 ⊗ (b ↼ ψ(x)#1) + q(x)#1 · b ⊗ q(x)#2 \
         - q(x)#1 ⊗ b · q(x)#2",
    ),
    law(
        "F14",
        "y:V a:A",
        "Δ(y ⊳ a) + t(y ⊲ a) = -(δ(a)#1 ↼ y) ⊗ δ(a)#2 + δ(a)#1 ⊗ (y ⇀ δ(a)#2) \
         + (β(y)#1 ⊳ a) ⊗ β(y)#2 + α(y)#1 ⊗ (α(y)#2 ⊳ a) - [a, t(y)#1] ⊗ t(y)#2 \
         - t(y)#1 ⊗ [a, t(y)#2]",
    ),
    law(
        "F15",
        "x:V b:A",
        "Δ(x ⊲ b) = (δ(x)#1 ← b) ⊗ δ(x)#2 - δ(x)#1 ⊗ (b → δ(x)#2)",
    ),
    law(
        "F16",
        "y:V a:A",
        "Δ(y ⊲ a) = (Δ(y)#1 ⊲ a) ⊗ Δ(y)#2 + Δ(y)#1 ⊗ (Δ(y)#2 ⊲ a)",
    ),
    law(
        "F17",
        "x:V b:A",
        "β(x ⊲ b) = (x ⊲ Δ(b)#1) ⊗ Δ(b)#2 - ψ(x)#1 ⊗ b · ψ(x)#2 \
         + (ψ(x)#1 ← b) ⊗ ψ(x)#2 - δ(x)#1 ⊗ (b ↼ δ(x)#2)",
    ),
    law(
        "F18",
        "y:V a:A",
        "β(y ⊲ a) = (β(y)#1 ⊲ a) ⊗ β(y)#2 - β(y)#1 ⊗ [a, β(y)#2] \
         - (δ(a)#1 → y) ⊗ δ(a)#2 + Δ(y)#1 ⊗ (Δ(y)#2 ⊳ a)",
    ),
    law(
        "F19",
        "x:V b:A",
        "α(x ⊲ b) = Δ(b)#1 ⊗ (x ⊲ Δ(b)#2) + ψ(x)#2 ⊗ (b → ψ(x)#1) \
         + (δ(x)#1 ⇀ b) ⊗ δ(x)#2 - ψ(x)#2 · b ⊗ ψ(x)#1",
    ),
    law(
        "F20",
        "y:V a:A",
        "α(y ⊲ a) = α(y)#1 ⊗ (α(y)#2 ⊲ a) - [a, α(y)#1] ⊗ α(y)#2 \
         + (Δ(y)#1 ⊳ a) ⊗ Δ(y)#2 + δ(a)#1 ⊗ (y ← δ(a)#2)",
    ),
    law(
        "F21",
        "x:V y:V",
        "δ(x · y) = δ(x)#1 · y ⊗ δ(x)#2 - (ψ(x)#2 → y) ⊗ ψ(x)#1 \
         + x · δ(y)#1 ⊗ δ(y)#2 - (x ← ψ(y)#2) ⊗ ψ(y)#1 + Δ(y)#1 ⊗ [x, Δ(y)#2] \
         + β(y)#1 ⊗ (x ⊲ β(y)#2) + Δ(x)#2 ⊗ [y, Δ(x)#1] + α(x)#2 ⊗ (y ⊲ α(x)#1)",
    ),
    law(
        "F22",
        "x:V y:V",
        "Δ([x, y]) = [x, Δ(y)#1] ⊗ Δ(y)#2 + (x ⊲ α(y)#1) ⊗ α(y)#2 \
         + Δ(y)#1 ⊗ [x, Δ(y)#2] + β(y)#1 ⊗ (x ⊲ β(y)#2) + δ(x)#1 · y ⊗ δ(x)#2 \
         - (ψ(x)#2 → y) ⊗ ψ(x)#1 - δ(x)#1 ⊗ y · δ(x)#2 - ψ(x)#1 ⊗ (y ← ψ(x)#2)",
    ),
];

// Morphism pairs. `r` and `s` applied to an element of `V` are the pair
// `(r, s)`; primed operators belong to the target datum. Both data share
// the structure of `A`, so `[a, b]'` and `δ'(a)` are bound to the same maps
// as their unprimed forms.

pub const MOR_A1: &[Law] = &[
    law("MOR_A1.1", "x:V a:A", "r(x ⊲ a) = [r(x), a]'"),
    law("MOR_A1.2", "a:A b:A", "[a, b]' = [a, b] + r(θ(a, b))"),
    law("MOR_A1.3", "x:V y:V", "r([x, y]) = [r(x), r(y)]'"),
    law("MOR_A1.4", "x:V a:A", "s(x) ⊲' a + θ'(r(x), a) = s(x ⊲ a)"),
    law("MOR_A1.5", "a:A b:A", "θ'(a, b) = s(θ(a, b))"),
    law(
        "MOR_A1.6",
        "x:V y:V",
        "s([x, y]) = [s(x), s(y)]' + s(x) ⊲' r(y) - s(y) ⊲' r(x) + θ'(r(x), r(y))",
    ),
    law("MOR_A1.7", "x:V a:A", "r(x ← a) = r(x) ·' a"),
    // Printed with `r(x)` on the right; `y` is the only variable in scope.
    law("MOR_A1.8", "a:A y:V", "r(a → y) = a ·' r(y)"),
    law("MOR_A1.9", "a:A b:A", "a ·' b = a · b + r(ν(a, b))"),
    law("MOR_A1.10", "x:V y:V", "r(x · y) = r(x) ·' r(y)"),
    law("MOR_A1.11", "x:V a:A", "s(x) ←' a + ν'(r(x), a) = s(x ← a)"),
    law("MOR_A1.12", "a:A x:V", "a →' s(x) + ν'(a, r(x)) = s(a → x)"),
    law("MOR_A1.13", "a:A b:A", "ν'(a, b) = s(ν(a, b))"),
    law(
        "MOR_A1.14",
        "x:V y:V",
        "s(x · y) = s(x) ·' s(y) + s(x) ←' r(y) + r(x) →' s(y) + ν'(r(x), r(y))",
    ),
];

pub const MOR_A2: &[Law] = &[
    law(
        "MOR_A2.1",
        "x:V y:V",
        "r([x, y]) = [r(x), r(y)]' + σ'(s(x), s(y)) - σ(x, y) + s(x) ⊳' r(y) \
         - s(y) ⊳' r(x)",
    ),
    law(
        "MOR_A2.2",
        "x:V y:V",
        "s([x, y]) = s(x) ⊲' r(y) - s(y) ⊲' r(x) + [s(x), s(y)]'",
    ),
    law("MOR_A2.3", "x:V a:A", "r(x ⊲ a) = [r(x), a]' + s(x) ⊳' a - x ⊳ a"),
    law("MOR_A2.4", "x:V a:A", "s(x ⊲ a) = s(x) ⊲' a"),
    law(
        "MOR_A2.5",
        "x:V y:V",
        "r(x · y) = r(x) ·' r(y) + ω'(s(x), s(y)) - ω(x, y) + s(x) ⇀' r(y) \
         + r(x) ↼' s(y)",
    ),
    law(
        "MOR_A2.6",
        "x:V y:V",
        "s(x · y) = r(x) →' s(y) + s(x) ←' r(y) + s(x) ·' s(y)",
    ),
    law("MOR_A2.7", "x:V b:A", "r(x ← b) = r(x) ·' b - x ⇀ b + s(x) ⇀' b"),
    law("MOR_A2.8", "a:A y:V", "r(a → y) = a ·' r(y) - a ↼ y + a ↼' s(y)"),
    law("MOR_A2.9", "x:V b:A", "s(x ← b) = s(x) ←' b"),
    law("MOR_A2.10", "a:A y:V", "s(a → y) = a →' s(y)"),
];

pub const MOR_C1: &[Law] = &[
    law("MOR_C1.1", "a:A", "p'(a) = s(p(a)#1) ⊗ s(p(a)#2)"),
    law(
        "MOR_C1.2",
        "a:A",
        "φ'(a) = s(φ(a)#1) ⊗ φ(a)#2 + s(p(a)#1) ⊗ r(p(a)#2)",
    ),
    law(
        "MOR_C1.3",
        "a:A",
        "δ'(a) = δ(a) + r(φ(a)#1) ⊗ φ(a)#2 - φ(a)#2 ⊗ r(φ(a)#1) + r(p(a)#1) ⊗ r(p(a)#2)",
    ),
    law(
        "MOR_C1.4",
        "x:V",
        "δ'(s(x)) + p'(r(x)) = s(δ(x)#1) ⊗ s(δ(x)#2)",
    ),
    law(
        "MOR_C1.5",
        "x:V",
        "ψ'(s(x)) + φ'(r(x)) = s(δ(x)#1) ⊗ r(δ(x)#2) + s(ψ(x)#1) ⊗ ψ(x)#2",
    ),
    law(
        "MOR_C1.6",
        "x:V",
        "δ'(r(x)) = r(δ(x)#1) ⊗ r(δ(x)#2) - ψ(x)#2 ⊗ r(ψ(x)#1) + r(ψ(x)#1) ⊗ ψ(x)#2",
    ),
    law("MOR_C1.7", "a:A", "s'(a) = s(s(a)#1) ⊗ s(s(a)#2)"),
    law(
        "MOR_C1.8",
        "a:A",
        "ρ'(a) = s(ρ(a)#1) ⊗ ρ(a)#2 + s(s(a)#1) ⊗ r(s(a)#2)",
    ),
    law(
        "MOR_C1.9",
        "a:A",
        "γ'(a) = γ(a)#1 ⊗ s(γ(a)#2) + r(s(a)#1) ⊗ s(s(a)#2)",
    ),
    law(
        "MOR_C1.10",
        "a:A",
        "Δ'(a) = Δ(a) + r(ρ(a)#1) ⊗ ρ(a)#2 + γ(a)#1 ⊗ r(γ(a)#2) + r(s(a)#1) ⊗ r(s(a)#2)",
    ),
    law(
        "MOR_C1.11",
        "x:V",
        "Δ'(s(x)) + s'(r(x)) = s(Δ(x)#1) ⊗ s(Δ(x)#2)",
    ),
    law(
        "MOR_C1.12",
        "x:V",
        "β'(s(x)) + ρ'(r(x)) = s(Δ(x)#1) ⊗ r(Δ(x)#2) + s(β(x)#1) ⊗ β(x)#2",
    ),
    law(
        "MOR_C1.13",
        "x:V",
        "α'(s(x)) + γ'(r(x)) = r(Δ(x)#1) ⊗ s(Δ(x)#2) + α(x)#1 ⊗ s(α(x)#2)",
    ),
    law(
        "MOR_C1.14",
        "x:V",
        "Δ'(r(x)) = r(Δ(x)#1) ⊗ r(Δ(x)#2) + α(x)#1 ⊗ r(α(x)#2) + r(β(x)#1) ⊗ β(x)#2",
    ),
];

pub const MOR_C2: &[Law] = &[
    law(
        "MOR_C2.1",
        "x:V",
        "ψ'(s(x)) = s(δ(x)#1) ⊗ r(δ(x)#2) + s(ψ(x)#1) ⊗ ψ(x)#2",
    ),
    law("MOR_C2.2", "x:V", "δ'(s(x)) = s(δ(x)#1) ⊗ s(δ(x)#2)"),
    law(
        "MOR_C2.3",
        "x:V",
        "δ'(r(x)) + q'(s(x)) = r(δ(x)#1) ⊗ r(δ(x)#2) - ψ(x)#2 ⊗ r(ψ(x)#1) \
         + r(ψ(x)#1) ⊗ ψ(x)#2 + q(x)",
    ),
    law(
        "MOR_C2.4",
        "x:V",
        "α'(s(x)) = r(Δ(x)#1) ⊗ s(Δ(x)#2) + α(x)#1 ⊗ s(α(x)#2)",
    ),
    law(
        "MOR_C2.5",
        "x:V",
        "β'(s(x)) = s(Δ(x)#1) ⊗ r(Δ(x)#2) + s(β(x)#1) ⊗ β(x)#2",
    ),
    law("MOR_C2.6", "x:V", "Δ'(s(x)) = s(Δ(x)#1) ⊗ s(Δ(x)#2)"),
    law(
        "MOR_C2.7",
        "x:V",
        "Δ'(r(x)) + t'(s(x)) = r(Δ(x)#1) ⊗ r(Δ(x)#2) + α(x)#1 ⊗ r(α(x)#2) \
         + r(β(x)#1) ⊗ β(x)#2 + t(x)",
    ),
];

const ALGEBRA_AXIOMS: &[&str] = &["PA1", "PA2", "PA3"];
const COALGEBRA_AXIOMS: &[&str] = &["PC1", "PC2", "PC3"];
const BIALGEBRA_AXIOMS: &[&str] = &[
    "PA1", "PA2", "PA3", "PC1", "PC2", "PC3", "LIEBI1", "ASI1", "ASI2",
];

const fn set(id: &'static str, description: &'static str, complement: &'static str, laws: &'static [Law]) -> SetSpec {
    SetSpec {
        id,
        description,
        complement,
        laws,
        composites: &[],
        includes: &[],
        amended: &[],
    }
}

/// Every condition set, in report order.
pub const SETS: &[SetSpec] = &[
    set("PA", "noncommutative Poisson algebra", "H", PA),
    set("PC", "noncommutative Poisson coalgebra", "H", PC),
    set("PB", "Poisson bialgebra compatibilities", "H", PB),
    set("LIEBI", "Lie bialgebra compatibility", "H", LIEBI),
    set("ASI", "antisymmetric infinitesimal bialgebra", "H", ASI),
    set("BIMOD", "Poisson bimodule of H on A", "H", BIMOD),
    set("BICOMOD", "Poisson bicomodule of H on A", "H", BICOMOD),
    set("MODALG", "bimodule algebra", "H", MODALG),
    set("COMODCOALG", "bicomodule coalgebra", "H", COMODCOALG),
    SetSpec {
        amended: HOPF_H_AMENDED,
        ..set("HOPF_H", "Hopf bimodule over H", "H", HOPF_H)
    },
    set("BRAIDED_A", "braided bialgebra in Hopf bimodules over H", "H", BRAIDED_A),
    SetSpec {
        amended: BIPROD18_AMENDED,
        ..set("BIPROD18", "componentwise biproduct bialgebra laws", "H", BIPROD18)
    },
    set("MP_ALG", "matched pair of Poisson algebras", "H", MP_ALG),
    set("MP_COALG", "matched pair of Poisson coalgebras", "H", MP_COALG),
    set("HOPF_A", "Hopf bimodule over A", "H", HOPF_A),
    set("BRAIDED_H", "braided bialgebra in Hopf bimodules over A", "H", BRAIDED_H),
    set("DMP", "double matched pair", "H", DMP),
    set("CC", "cocycles, cycles and their (co)associative identities", "H", CC),
    set("CP", "cocycle cross product system", "H", CP),
    set("CCP", "cycle cross coproduct system", "H", CCP),
    set("CDM", "cocycle double matched pair", "H", CDM),
    set("CBB", "cocycle braided bialgebra", "H", CBB),
    SetSpec {
        composites: &[Composite {
            label: "A0",
            ambient: ALGEBRA_AXIOMS,
        }],
        amended: EXT_A1_AMENDED,
        ..set("EXT_A1", "algebra extending datum of type a1", "V", EXT_A1)
    },
    SetSpec {
        composites: &[Composite {
            label: "B0",
            ambient: ALGEBRA_AXIOMS,
        }],
        amended: EXT_A2_AMENDED,
        ..set("EXT_A2", "algebra extending datum of type a2", "V", EXT_A2)
    },
    SetSpec {
        composites: &[Composite {
            label: "C0",
            ambient: COALGEBRA_AXIOMS,
        }],
        amended: EXT_C1_AMENDED,
        ..set("EXT_C1", "coalgebra extending datum of type c1", "V", EXT_C1)
    },
    SetSpec {
        composites: &[Composite {
            label: "D0",
            ambient: COALGEBRA_AXIOMS,
        }],
        ..set("EXT_C2", "coalgebra extending datum of type c2", "V", EXT_C2)
    },
    SetSpec {
        composites: &[Composite {
            label: "E0",
            ambient: BIALGEBRA_AXIOMS,
        }],
        includes: &["EXT_A1", "EXT_C1"],
        ..set("EXT_I", "bialgebra extending datum of type I", "V", EXT_I)
    },
    SetSpec {
        composites: &[Composite {
            label: "F0",
            ambient: BIALGEBRA_AXIOMS,
        }],
        includes: &["EXT_A2", "EXT_C2"],
        ..set("EXT_II", "bialgebra extending datum of type II", "V", EXT_II)
    },
    set("MOR_A1", "morphism pair between type a1 data", "V", MOR_A1),
    set("MOR_A2", "morphism pair between type a2 data", "V", MOR_A2),
    set("MOR_C1", "morphism pair between type c1 data", "V", MOR_C1),
    set("MOR_C2", "morphism pair between type c2 data", "V", MOR_C2),
];

pub fn set_spec(id: &str) -> Result<&'static SetSpec> {
    SETS.iter()
        .find(|s| s.id == id)
        .ok_or_else(|| ForgeError::UnknownConditionSet(id.to_string()))
}

/// Which side of the ASI coproduct rule carries the left multiplication.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum AsiConvention {
    /// `Δ(ab) = (L_a ⊗ id)Δ(b) + (id ⊗ R_b)Δ(a)`.
    #[default]
    Standard,
    /// `Δ(ab) = (R_b ⊗ id)Δ(a) + (id ⊗ L_a)Δ(b)`.
    Swapped,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RegistryOptions {
    /// Include the Lie bialgebra law in bialgebra checks.
    pub liebi: bool,
    /// Include the ASI laws in bialgebra checks.
    pub asi: bool,
    pub asi_convention: AsiConvention,
    /// Use the amended descriptors: HM4 and BP9 with the derived sign, and the missing
    /// Leibniz components of the extending-datum sets.
    pub amended: bool,
}

impl Default for RegistryOptions {
    fn default() -> Self {
        RegistryOptions {
            liebi: true,
            asi: true,
            asi_convention: AsiConvention::Standard,
            amended: false,
        }
    }
}

impl RegistryOptions {
    /// Only the laws the bialgebra definition states outright.
    pub fn stated_only() -> Self {
        RegistryOptions {
            liebi: false,
            asi: false,
            ..Self::default()
        }
    }

    fn asi_laws(&self) -> &'static [Law] {
        match self.asi_convention {
            AsiConvention::Standard => ASI,
            AsiConvention::Swapped => ASI_SWAPPED,
        }
    }

    fn enabled(&self, label: &str) -> bool {
        match label {
            "LIEBI1" => self.liebi,
            "ASI1" | "ASI2" => self.asi,
            _ => true,
        }
    }
}

/// One compiled entry of a condition set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Check {
    Law(IdentityDescriptor),
    /// Laws evaluated on the built extension, over space `E`.
    Ambient {
        label: String,
        laws: Vec<IdentityDescriptor>,
    },
}

impl Check {
    pub fn label(&self) -> &str {
        match self {
            Check::Law(d) => &d.id,
            Check::Ambient { label, .. } => label,
        }
    }
}

/// A condition set compiled to descriptors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConditionSet {
    pub id: String,
    pub description: String,
    pub checks: Vec<Check>,
}

impl ConditionSet {
    pub fn labels(&self) -> Vec<&str> {
        self.checks.iter().map(Check::label).collect()
    }

    /// Descriptors checked directly on the components.
    pub fn laws(&self) -> impl Iterator<Item = &IdentityDescriptor> {
        self.checks.iter().filter_map(|c| match c {
            Check::Law(d) => Some(d),
            Check::Ambient { .. } => None,
        })
    }

    pub fn has_composites(&self) -> bool {
        self.checks.iter().any(|c| matches!(c, Check::Ambient { .. }))
    }

    /// Roles referenced by the component laws.
    pub fn roles(&self) -> Vec<String> {
        let mut r: Vec<String> = self.laws().flat_map(|d| d.roles()).collect();
        r.sort();
        r.dedup();
        r
    }
}

fn compile_law(l: &Law, complement: &str) -> Result<IdentityDescriptor> {
    compile_identity(l.label, l.vars, l.formula, complement)
}

fn laws_of(entry: &SetSpec, opts: &RegistryOptions) -> Vec<Law> {
    let base = if entry.id == "ASI" {
        opts.asi_laws()
    } else {
        entry.laws
    };
    let mut out: Vec<Law> = base.to_vec();
    if opts.amended {
        for a in entry.amended {
            match out.iter_mut().find(|l| l.label == a.label) {
                Some(l) => *l = *a,
                None => out.push(*a),
            }
        }
    }
    out
}

/// Algebra, coalgebra and bialgebra laws by label, stated over `A`.
pub fn base_law(label: &str, opts: &RegistryOptions) -> Result<IdentityDescriptor> {
    let pool = [PA, PC, PB, LIEBI, opts.asi_laws()];
    let l = pool
        .iter()
        .flat_map(|t| t.iter())
        .find(|l| l.label == label)
        .ok_or_else(|| ForgeError::UnknownConditionSet(label.to_string()))?;
    compile_law(l, "H")
}

/// The full bialgebra check over `A`: PA, PC and PB, plus LIEBI and ASI
/// when enabled.
pub fn bialgebra_laws(opts: &RegistryOptions) -> Result<Vec<IdentityDescriptor>> {
    let mut out = Vec::new();
    for id in ["PA", "PC", "PB", "LIEBI", "ASI"] {
        if (id == "LIEBI" && !opts.liebi) || (id == "ASI" && !opts.asi) {
            continue;
        }
        out.extend(compile_set(id, opts)?.laws().cloned());
    }
    Ok(out)
}

/// Compiles one condition set.
pub fn compile_set(id: &str, opts: &RegistryOptions) -> Result<ConditionSet> {
    let entry = set_spec(id)?;
    let mut checks = Vec::new();
    for c in entry.composites {
        let laws = c
            .ambient
            .iter()
            .filter(|l| opts.enabled(l))
            .map(|l| Ok(base_law(l, opts)?.with_space_renamed('A', 'E')))
            .collect::<Result<Vec<_>>>()?;
        checks.push(Check::Ambient {
            label: c.label.to_string(),
            laws,
        });
    }
    for inc in entry.includes {
        let inner = set_spec(inc)?;
        for l in laws_of(inner, opts) {
            checks.push(Check::Law(compile_law(&l, inner.complement)?));
        }
    }
    for l in laws_of(entry, opts) {
        checks.push(Check::Law(compile_law(&l, entry.complement)?));
    }
    Ok(ConditionSet {
        id: entry.id.to_string(),
        description: entry.description.to_string(),
        checks,
    })
}

/// Expected labels of every set, written independently of the tables.
pub fn manifest() -> Vec<(&'static str, Vec<String>)> {
    fn seq(prefix: &str, n: usize, suffix: &str) -> Vec<String> {
        (1..=n).map(|i| format!("{prefix}{i}{suffix}")).collect()
    }
    fn with0(prefix: &str, n: usize) -> Vec<String> {
        (0..=n).map(|i| format!("{prefix}{i}")).collect()
    }
    vec![
        ("PA", seq("PA", 4, "")),
        ("PC", seq("PC", 4, "")),
        ("PB", vec!["LB01".into(), "LB02".into()]),
        ("LIEBI", seq("LIEBI", 1, "")),
        ("ASI", seq("ASI", 2, "")),
        ("BIMOD", seq("BIMOD", 7, "")),
        ("BICOMOD", seq("BICOMOD", 7, "")),
        ("MODALG", seq("MODALG", 7, "")),
        ("COMODCOALG", seq("COMODCOALG", 7, "")),
        ("HOPF_H", seq("HM", 8, "")),
        ("BRAIDED_A", seq("BB", 2, "")),
        ("BIPROD18", seq("BP", 18, "")),
        ("MP_ALG", seq("AM", 6, "")),
        ("MP_COALG", seq("CM", 6, "")),
        ("HOPF_A", seq("HM", 8, "'")),
        ("BRAIDED_H", seq("BB", 2, "'")),
        ("DMP", seq("DM", 24, "")),
        ("CC", seq("CC", 8, "")),
        ("CP", seq("CP", 12, "")),
        ("CCP", seq("CCP", 12, "")),
        ("CDM", seq("CDM", 24, "")),
        ("CBB", seq("CBB", 4, "")),
        ("EXT_A1", with0("A", 7)),
        ("EXT_A2", with0("B", 13)),
        ("EXT_C1", with0("C", 13)),
        ("EXT_C2", with0("D", 8)),
        ("EXT_I", with0("E", 22)),
        ("EXT_II", with0("F", 22)),
        ("MOR_A1", seq("MOR_A1.", 14, "")),
        ("MOR_A2", seq("MOR_A2.", 10, "")),
        ("MOR_C1", seq("MOR_C1.", 14, "")),
        ("MOR_C2", seq("MOR_C2.", 7, "")),
    ]
}

/// Labels a set owns itself: composites and laws, without includes.
pub fn owned_labels(entry: &SetSpec) -> Vec<&'static str> {
    entry.composites
        .iter()
        .map(|c| c.label)
        .chain(entry.laws.iter().map(|l| l.label))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    #[test]
    fn every_set_matches_the_manifest() {
        let m = manifest();
        assert_eq!(m.len(), SETS.len());
        let mut seen = BTreeSet::new();
        for (entry, (id, labels)) in SETS.iter().zip(&m) {
            assert_eq!(entry.id, *id);
            let owned = owned_labels(entry);
            assert_eq!(&owned, labels, "{id}");
            for l in owned {
                assert!(seen.insert((l, entry.id == "ASI")), "{l} owned twice");
            }
        }
    }

    #[test]
    fn every_law_compiles_under_every_option() {
        for amended in [false, true] {
            for conv in [AsiConvention::Standard, AsiConvention::Swapped] {
                let opts = RegistryOptions {
                    amended,
                    asi_convention: conv,
                    ..RegistryOptions::default()
                };
                for s in SETS {
                    compile_set(s.id, &opts).unwrap_or_else(|e| panic!("{}: {e}", s.id));
                }
            }
        }
    }

    #[test]
    fn composites_drop_disabled_laws() {
        let c = compile_set("EXT_I", &RegistryOptions::stated_only()).unwrap();
        match &c.checks[0] {
            Check::Ambient { label, laws } => {
                assert_eq!(label, "E0");
                assert_eq!(laws.len(), 6);
                assert!(laws.iter().all(|d| d.input_spaces.iter().all(|s| s == "E")));
            }
            other => panic!("expected a composite, got {other:?}"),
        }
        let full = compile_set("EXT_I", &RegistryOptions::default()).unwrap();
        assert_eq!(full.labels().len(), 1 + 7 + 13 + 22);
    }

    #[test]
    fn amended_flag_adds_and_replaces() {
        let plain = compile_set("EXT_A1", &RegistryOptions::default()).unwrap();
        let am = compile_set(
            "EXT_A1",
            &RegistryOptions {
                amended: true,
                ..RegistryOptions::default()
            },
        )
        .unwrap();
        assert_eq!(am.labels().len(), plain.labels().len() + 1);
        let h = |amended| {
            compile_set("HOPF_H", &RegistryOptions { amended, ..RegistryOptions::default() })
                .unwrap()
                .laws()
                .find(|d| d.id == "HM4")
                .unwrap()
                .source
                .clone()
        };
        assert_ne!(h(false), h(true));
    }
}
