//! Max-times semifield arithmetic and its matrix and vector algebra.
//!
//! Values are stored as natural logarithms, so the semifield operations
//! become `max` and `+` on extended reals and rational powers are exact
//! scalings of the stored value.
//!
//! | Symbol | Meaning here | Log-domain form |
//! |--------|--------------|-----------------|
//! | `⊕` | maximum | `max` |
//! | `⊗` | ordinary product | `+` |
//! | `𝟘` | zero | `-∞` |
//! | `𝟙` | one | `0` |
//! | `x^q` | power | `q · log x` |

mod matrix;
mod scalar;
mod tolerance;
mod vector;

pub use matrix::Matrix;
pub use scalar::{parse_numeral, Exponent, Scalar};
pub use tolerance::Tolerance;
pub use vector::{Covector, Vector};
