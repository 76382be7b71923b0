//! Truncated arithmetic in the tower `Q_p ⊂ K ⊂ L ⊂ M`.

pub mod eisenstein;
pub mod extension;
pub mod linalg;
pub mod quadratic;
pub mod ring;
pub mod tower;
pub mod valuation;

pub use eisenstein::{EisensteinRing, PadicElem, SharedRing, EXACT};
pub use extension::SimpleExtension;
pub use quadratic::{QuadElem, QuadraticExtension};
pub use ring::{LocalField, Ring, Valued};
pub use tower::{build_tower, TowerDesc};
pub use valuation::{fmt_q, q, qi, DualValuation, Valuation, Q};
