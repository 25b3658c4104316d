//! Exact-arithmetic engine for classifying induction and coinduction functors
//! attached to (co)algebra morphisms in finite monoidal categories.
//!
//! The engine realizes four concrete monoidal backends (vector spaces over Q
//! or F_p, finite sets, grids of vector spaces, bimodule categories over a
//! base algebra), builds modules/comodules and their tensor/cotensor products
//! by (co)equalizers, and decides semiseparability, separability and natural
//! fullness of the attached functors by solving witness equations exactly.

pub mod backend;
pub mod classify;
pub mod comodcoalg;
pub mod corpus;
pub mod derived;
pub mod duoidal;
pub mod field;
pub mod finset;
pub mod finvec;
pub mod linalg;
pub mod matn;
pub mod modalg;
pub mod oracle;
pub mod report;
pub mod transport;

pub use backend::{Backend, BackendCapabilities, CatError, CoeqResult, EqResult, WitnessSpace};
pub use field::{Field, Scalar};
pub use linalg::LinMap;
