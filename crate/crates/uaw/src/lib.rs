//! Exact symbolic computation in the universal Askey-Wilson algebra over the
//! rational-function field Q(q): Laurent-polynomial arithmetic, normal forms
//! for algebra elements, Chebyshev polynomials of the second kind, and the
//! q-Onsager PBW elements' images with their closed forms.

pub mod algebra;
pub mod chebyshev;
pub mod normalform;
pub mod pbw;
pub mod qfield;

pub use algebra::{AlgebraElement, BasisForm, CentralMono, Generator, Word};
pub use qfield::{bracket, binom2, LaurentPolyQ, QFieldError, RatFuncQ};
