//! Contracts shared by every concrete monoidal backend: objects, morphisms,
//! strict tensor, (co)equalizers with their universal properties, capability
//! flags, and the witness-equation solver interface.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, CatError>;

#[derive(Error, Debug, Clone, PartialEq)]
pub enum CatError {
    #[error("morphisms are not parallel")]
    NonParallel,
    #[error("operands belong to different backends")]
    BackendMismatch,
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("module structures are over different algebras")]
    AlgebraMismatch,
    #[error("comodule structures are over different coalgebras")]
    CoalgebraMismatch,
    #[error("structure mismatch: {0}")]
    StructureMismatch(String),
    #[error("law violation: {0}")]
    LawViolation(String),
    #[error("functor direction does not support this transport")]
    DirectionMismatch,
    #[error("functor is not strong monoidal")]
    NotStrong,
    #[error("backend is not abelian")]
    BackendNotAbelian,
    #[error("unsupported operation: {0}")]
    Unsupported(String),
    #[error("enumeration cap exceeded: needed {needed} candidates, cap {cap}")]
    CapExceeded { needed: u128, cap: u64 },
    #[error("invalid witness: {0}")]
    InvalidWitness(String),
    #[error("no composition clause applies: {0}")]
    PremiseMismatch(String),
    #[error("hypothesis not met: {0}")]
    HypothesisNotMet(String),
    #[error("internal solve failed: {0}")]
    SolveFailed(String),
    #[error("unknown reference: {0}")]
    UnknownReference(String),
    #[error("parse error: {0}")]
    ParseError(String),
}

/// Fixed, per-backend capability flags. Declared from proven facts at
/// construction time, never computed at runtime.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BackendCapabilities {
    pub unit_is_left_tensor_generator: bool,
    pub unit_is_left_tensor_cogenerator: bool,
    pub two_sided: bool,
    pub abelian: bool,
    pub braided: bool,
    pub all_objects_coflat: bool,
    pub all_objects_flat: bool,
}

/// A concrete strict monoidal category with (co)equalizers.
///
/// Every operation is a pure function of its inputs; handles are immutable.
pub trait Backend {
    type Obj: Clone + PartialEq + std::fmt::Debug;
    type Mor: Clone + PartialEq + std::fmt::Debug;

    fn backend_id(&self) -> String;
    fn caps(&self) -> BackendCapabilities;
    fn unit_obj(&self) -> Self::Obj;

    fn dom(&self, f: &Self::Mor) -> Self::Obj;
    fn cod(&self, f: &Self::Mor) -> Self::Obj;
    fn identity(&self, x: &Self::Obj) -> Self::Mor;
    /// Composite `f ∘ g`.
    fn compose(&self, f: &Self::Mor, g: &Self::Mor) -> Result<Self::Mor>;

    fn tensor_obj(&self, x: &Self::Obj, y: &Self::Obj) -> Result<Self::Obj>;
    fn tensor_mor(&self, f: &Self::Mor, g: &Self::Mor) -> Result<Self::Mor>;

    fn mor_eq(&self, f: &Self::Mor, g: &Self::Mor) -> bool;
    fn is_epi(&self, f: &Self::Mor) -> bool;
    fn is_mono(&self, f: &Self::Mor) -> bool;

    fn coequalizer(&self, f: &Self::Mor, g: &Self::Mor) -> Result<CoeqResult<Self>>;
    fn equalizer(&self, f: &Self::Mor, g: &Self::Mor) -> Result<EqResult<Self>>;

    /// Unique `l` with `l ∘ p = h` for an epimorphism `p`; errors if no such
    /// morphism exists.
    fn factor_through_epi(&self, p: &Self::Mor, h: &Self::Mor) -> Result<Self::Mor>;
    /// Unique `l` with `i ∘ l = h` for a monomorphism `i`.
    fn factor_through_mono(&self, i: &Self::Mor, h: &Self::Mor) -> Result<Self::Mor>;

    /// Solves a system of morphism equations for an unknown `E: dom -> cod`.
    fn solve_mor(
        &self,
        dom: &Self::Obj,
        cod: &Self::Obj,
        eqs: &[MorEquation<Self>],
        cap: u64,
    ) -> Result<WitnessSpace<Self>>;

    fn render_obj(&self, x: &Self::Obj) -> String;
    fn render_mor(&self, f: &Self::Mor) -> String;
    fn mor_to_json(&self, f: &Self::Mor) -> serde_json::Value;

    /// `f ⊗ id_y`.
    fn tensor_mor_right(&self, f: &Self::Mor, y: &Self::Obj) -> Result<Self::Mor> {
        self.tensor_mor(f, &self.identity(y))
    }

    /// `id_x ⊗ g`.
    fn tensor_mor_left(&self, x: &Self::Obj, g: &Self::Mor) -> Result<Self::Mor> {
        self.tensor_mor(&self.identity(x), g)
    }

    fn parallel(&self, f: &Self::Mor, g: &Self::Mor) -> bool {
        self.dom(f) == self.dom(g) && self.cod(f) == self.cod(g)
    }
}

/// Coequalizer of a parallel pair, with the universal factoring procedure.
#[derive(Clone, Debug)]
pub struct CoeqResult<B: Backend + ?Sized> {
    pub pair: (B::Mor, B::Mor),
    pub quotient: B::Obj,
    pub projection: B::Mor,
}

impl<B: Backend> CoeqResult<B> {
    /// Maps `h` with `h∘f = h∘g` to the unique `l` with `l∘q = h`.
    pub fn factor(&self, b: &B, h: &B::Mor) -> Result<B::Mor> {
        let hf = b.compose(h, &self.pair.0)?;
        let hg = b.compose(h, &self.pair.1)?;
        if !b.mor_eq(&hf, &hg) {
            return Err(CatError::StructureMismatch(
                "morphism does not coequalize the pair".into(),
            ));
        }
        let l = b.factor_through_epi(&self.projection, h)?;
        debug_assert!(b.mor_eq(&b.compose(&l, &self.projection)?, h));
        Ok(l)
    }
}

/// Equalizer of a parallel pair, with the dual factoring procedure.
#[derive(Clone, Debug)]
pub struct EqResult<B: Backend + ?Sized> {
    pub pair: (B::Mor, B::Mor),
    pub subobject: B::Obj,
    pub inclusion: B::Mor,
}

impl<B: Backend> EqResult<B> {
    /// Maps `h` with `f∘h = g∘h` to the unique `l` with `e∘l = h`.
    pub fn factor(&self, b: &B, h: &B::Mor) -> Result<B::Mor> {
        let fh = b.compose(&self.pair.0, h)?;
        let gh = b.compose(&self.pair.1, h)?;
        if !b.mor_eq(&fh, &gh) {
            return Err(CatError::StructureMismatch(
                "morphism does not equalize the pair".into(),
            ));
        }
        let l = b.factor_through_mono(&self.inclusion, h)?;
        debug_assert!(b.mor_eq(&b.compose(&self.inclusion, &l)?, h));
        Ok(l)
    }
}

/// One side of a morphism equation in a single unknown `E`.
///
/// `Apply` evaluates to `post ∘ (id_wl ⊗ E ⊗ id_wr) ∘ pre`; both wraps are
/// optional. `Const` is a fixed morphism.
#[derive(Clone, Debug)]
pub enum MorExpr<B: Backend + ?Sized> {
    Const(B::Mor),
    Apply {
        post: B::Mor,
        wrap_left: Option<B::Obj>,
        wrap_right: Option<B::Obj>,
        pre: B::Mor,
    },
}

impl<B: Backend> MorExpr<B> {
    pub fn plain(post: B::Mor, pre: B::Mor) -> Self {
        MorExpr::Apply { post, wrap_left: None, wrap_right: None, pre }
    }

    pub fn eval(&self, b: &B, e: &B::Mor) -> Result<B::Mor> {
        match self {
            MorExpr::Const(m) => Ok(m.clone()),
            MorExpr::Apply { post, wrap_left, wrap_right, pre } => {
                let mut mid = e.clone();
                if let Some(u) = wrap_left {
                    mid = b.tensor_mor(&b.identity(u), &mid)?;
                }
                if let Some(v) = wrap_right {
                    mid = b.tensor_mor(&mid, &b.identity(v))?;
                }
                b.compose(post, &b.compose(&mid, pre)?)
            }
        }
    }
}

/// `lhs(E) = rhs(E)`, labeled for diagnostics.
#[derive(Clone, Debug)]
pub struct MorEquation<B: Backend + ?Sized> {
    pub label: String,
    pub lhs: MorExpr<B>,
    pub rhs: MorExpr<B>,
}

impl<B: Backend> MorEquation<B> {
    pub fn holds(&self, b: &B, e: &B::Mor) -> Result<bool> {
        Ok(b.mor_eq(&self.lhs.eval(b, e)?, &self.rhs.eval(b, e)?))
    }
}

/// Solution set of a morphism equation system.
#[derive(Clone, Debug)]
pub enum WitnessSpace<B: Backend + ?Sized> {
    Infeasible,
    /// Linear backends: a particular witness plus a basis of the homogeneous
    /// solution space.
    Affine {
        particular: B::Mor,
        homogeneous: Vec<B::Mor>,
    },
    /// Set backend: the full filtered list in lexicographic table order.
    Enumerated(Vec<B::Mor>),
}

impl<B: Backend> WitnessSpace<B> {
    pub fn first(&self) -> Option<&B::Mor> {
        match self {
            WitnessSpace::Infeasible => None,
            WitnessSpace::Affine { particular, .. } => Some(particular),
            WitnessSpace::Enumerated(v) => v.first(),
        }
    }

    pub fn is_feasible(&self) -> bool {
        self.first().is_some()
    }

    pub fn dimension(&self) -> Option<usize> {
        match self {
            WitnessSpace::Affine { homogeneous, .. } => Some(homogeneous.len()),
            _ => None,
        }
    }
}

/// Verifies a witness against every equation; used before any witness is
/// reported.
pub fn verify_witness<B: Backend>(b: &B, e: &B::Mor, eqs: &[MorEquation<B>]) -> Result<()> {
    for eq in eqs {
        if !eq.holds(b, e)? {
            return Err(CatError::InvalidWitness(format!(
                "witness fails equation '{}'",
                eq.label
            )));
        }
    }
    Ok(())
}
