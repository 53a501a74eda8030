//! Exact verification of Hopf-Galois objects, cogroupoids and monoidal
//! transport over rational-function coefficients.

pub mod certificate;
pub mod classify;
pub mod emat;
pub mod error;
pub mod families;
pub mod free;
pub mod galois;
pub mod homology;
pub mod hopf;
pub mod linalg;
pub mod matrix;
pub mod morphism;
pub mod normal_form;
pub mod presentation;
pub mod rewrite;
pub mod scalar;
pub mod tensor;
pub mod transport;
pub mod upoly;
pub mod weakhopf;

pub use error::{Error, Result};
pub use free::{FreeElement, Gen, Word};
pub use matrix::ExactMatrix;
pub use scalar::Scalar;
pub use certificate::Certificate;
pub use morphism::{check_morphism, AlgebraMorphism};
pub use presentation::Presentation;
pub use tensor::{Space, Tensor};
