//! The untwisted affine algebra `g(A) = (ℂ[t, t⁻¹] ⊗ g) ⊕ ℂK ⊕ ℂd` and its
//! graded standard subalgebras.
//!
//! Elements carry the full bracket
//!
//! ```text
//! [t^n ⊗ x + λK + μd, t^m ⊗ y + λ'K + μ'd]
//!     = t^{n+m} ⊗ [x, y] + μ·m·(t^m ⊗ y) − μ'·n·(t^n ⊗ x)
//!       + n·δ_{n,-m}·(x|y)·K.
//! ```
//!
//! Graded subspaces supported in non-negative degrees are represented by a
//! [`LoopSubspace`]: finitely many explicit layers, then a *tail* degree from
//! which every layer is all of `g`, plus flags for `K` and `d`.  The module
//! provides the construction
//!
//! `τ̄ = (t^n ⊗ τ) ⊕ (t^{n+1} ⊗ V) ⊕ (t^{n+2} ℂ[t] ⊗ g) ⊕ ℂK`,
//!
//! its degree-zero companion containing `d`, a normalizer search over
//! parabolic-shaped candidates, a standardness verifier, and the converse
//! classification that recovers `(τ, V, n)` from a graded subspace.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::Zero;

use crate::chevalley::{Algebra, HStableSubspace, LinComb};
use crate::linalg::RatMatrix;
use crate::oracle;
use crate::rootsys::Root;
use crate::{Error, Rat, Result};

/// An element of `g(A)`: loop components indexed by degree, plus `K` and `d`
/// coefficients.  Degrees may be negative; only [`LoopSubspace`] is restricted
/// to the non-negative part.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct AffineElement {
    terms: BTreeMap<i64, LinComb>,
    k: Rat,
    d: Rat,
}

impl AffineElement {
    pub fn zero() -> Self {
        AffineElement::default()
    }

    pub fn loop_term(degree: i64, x: LinComb) -> Self {
        let mut e = AffineElement::zero();
        if !x.is_zero() {
            e.terms.insert(degree, x);
        }
        e
    }

    pub fn k_term(c: Rat) -> Self {
        AffineElement {
            k: c,
            ..Default::default()
        }
    }

    pub fn d_term(c: Rat) -> Self {
        AffineElement {
            d: c,
            ..Default::default()
        }
    }

    pub fn k_coefficient(&self) -> Rat {
        self.k
    }

    pub fn d_coefficient(&self) -> Rat {
        self.d
    }

    pub fn component(&self, degree: i64) -> LinComb {
        self.terms.get(&degree).cloned().unwrap_or_default()
    }

    pub fn degrees(&self) -> impl Iterator<Item = i64> + '_ {
        self.terms.keys().copied()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty() && self.k.is_zero() && self.d.is_zero()
    }

    fn add_component(&mut self, degree: i64, x: &LinComb, scale: Rat) {
        if x.is_zero() || scale.is_zero() {
            return;
        }
        let entry = self.terms.entry(degree).or_default();
        *entry = entry.plus(&x.scaled(scale));
        if entry.is_zero() {
            self.terms.remove(&degree);
        }
    }

    pub fn plus(&self, other: &AffineElement) -> AffineElement {
        let mut out = self.clone();
        for (&deg, x) in &other.terms {
            out.add_component(deg, x, Rat::from_integer(1));
        }
        out.k += other.k;
        out.d += other.d;
        out
    }

    pub fn scaled(&self, c: Rat) -> AffineElement {
        if c.is_zero() {
            return AffineElement::zero();
        }
        AffineElement {
            terms: self.terms.iter().map(|(&n, x)| (n, x.scaled(c))).collect(),
            k: self.k * c,
            d: self.d * c,
        }
    }

    pub fn minus(&self, other: &AffineElement) -> AffineElement {
        self.plus(&other.scaled(Rat::from_integer(-1)))
    }
}

/// The bracket of `g(A)`.
pub fn affine_bracket(alg: &Algebra, x: &AffineElement, y: &AffineElement) -> AffineElement {
    let mut out = AffineElement::zero();
    for (&n, xn) in &x.terms {
        for (&m, ym) in &y.terms {
            out.add_component(n + m, &alg.bracket(xn, ym), Rat::from_integer(1));
            if n == -m {
                out.k += Rat::from_integer(n) * alg.form(xn, ym);
            }
        }
    }
    // [d, t^m ⊗ y] = m·t^m ⊗ y; K is central.
    for (&m, ym) in &y.terms {
        out.add_component(m, ym, x.d * Rat::from_integer(m));
    }
    for (&n, xn) in &x.terms {
        out.add_component(n, xn, -y.d * Rat::from_integer(n));
    }
    out
}

/// A graded subspace of the non-negative part of `g(A)`.
///
/// The subspace is `Σ_{r < tail} t^r ⊗ layers[r]  +  Σ_{r ≥ tail} t^r ⊗ g`,
/// optionally plus `ℂK` and `ℂd`.  Missing entries below the tail are zero
/// layers.  The representation is canonical (no zero entries, no full layers
/// just below the tail), so derived equality is equality of subspaces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LoopSubspace {
    layers: BTreeMap<usize, HStableSubspace>,
    tail: usize,
    has_k: bool,
    has_d: bool,
}

impl LoopSubspace {
    /// Builds a subspace from explicit layers.  All explicit keys must lie
    /// below `tail`; the result is canonicalized.
    pub fn from_layers(
        alg: &Algebra,
        layers: BTreeMap<usize, HStableSubspace>,
        tail: usize,
        has_k: bool,
        has_d: bool,
    ) -> Self {
        assert!(
            layers.keys().all(|&r| r < tail),
            "explicit layers must lie below the tail"
        );
        let mut s = LoopSubspace {
            layers,
            tail,
            has_k,
            has_d,
        };
        s.canonicalize(alg);
        s
    }

    fn canonicalize(&mut self, alg: &Algebra) {
        self.layers.retain(|_, l| !l.is_zero());
        let full = alg.full_subspace();
        while self.tail > 0 {
            match self.layers.get(&(self.tail - 1)) {
                Some(l) if *l == full => {
                    self.layers.remove(&(self.tail - 1));
                    self.tail -= 1;
                }
                _ => break,
            }
        }
    }

    /// The layer at a degree (all of `g` from the tail on).
    pub fn layer(&self, alg: &Algebra, r: usize) -> HStableSubspace {
        if r >= self.tail {
            alg.full_subspace()
        } else {
            self.layers
                .get(&r)
                .cloned()
                .unwrap_or_else(|| HStableSubspace::zero(alg.rank()))
        }
    }

    /// Explicit (non-tail) layers.
    pub fn explicit_layers(&self) -> impl Iterator<Item = (usize, &HStableSubspace)> {
        self.layers.iter().map(|(&r, l)| (r, l))
    }

    /// First degree with a nonzero layer.
    pub fn start(&self) -> usize {
        self.layers
            .keys()
            .next()
            .copied()
            .unwrap_or(self.tail)
            .min(self.tail)
    }

    pub fn tail(&self) -> usize {
        self.tail
    }

    pub fn has_k(&self) -> bool {
        self.has_k
    }

    pub fn has_d(&self) -> bool {
        self.has_d
    }

    pub fn contains(&self, alg: &Algebra, other: &LoopSubspace) -> bool {
        if (other.has_k && !self.has_k) || (other.has_d && !self.has_d) {
            return false;
        }
        let top = self.tail.max(other.tail);
        (0..top).all(|r| self.layer(alg, r).contains(&other.layer(alg, r)))
    }

    pub fn sum(&self, alg: &Algebra, other: &LoopSubspace) -> LoopSubspace {
        let tail = self.tail.min(other.tail);
        let mut layers = BTreeMap::new();
        for r in 0..tail {
            let l = self.layer(alg, r).sum(&other.layer(alg, r));
            if !l.is_zero() {
                layers.insert(r, l);
            }
        }
        LoopSubspace::from_layers(
            alg,
            layers,
            tail,
            self.has_k || other.has_k,
            self.has_d || other.has_d,
        )
    }

    /// Renders the subspace as a list of affine roots per layer.
    pub fn root_form(&self, alg: &Algebra) -> AffineRootForm {
        let layers = (0..self.tail)
            .map(|r| {
                let l = self.layer(alg, r);
                let real = l
                    .signed_indices(alg.num_positive())
                    .map(|a| AffineRoot {
                        degree: r,
                        root: alg.signed_root(a),
                    })
                    .collect();
                AffineLayer {
                    degree: r,
                    real,
                    imaginary_dim: l.cartan().rank(),
                }
            })
            .filter(|l| !l.real.is_empty() || l.imaginary_dim > 0)
            .collect();
        AffineRootForm {
            layers,
            tail: self.tail,
            has_k: self.has_k,
            has_d: self.has_d,
        }
    }
}

/// A real affine root: a finite root at a loop degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineRoot {
    pub degree: usize,
    pub root: Root,
}

impl fmt::Display for AffineRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.degree {
            0 => write!(f, "{}", self.root),
            1 => write!(f, "{}+δ", self.root),
            n => write!(f, "{}+{n}δ", self.root),
        }
    }
}

/// Per-layer root content of a [`LoopSubspace`], for reporting.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineRootForm {
    pub layers: Vec<AffineLayer>,
    /// Degree from which every layer is all of `g`.
    pub tail: usize,
    pub has_k: bool,
    pub has_d: bool,
}

/// Roots present at one degree: the real roots and the dimension of the
/// imaginary (Cartan) part.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineLayer {
    pub degree: usize,
    pub real: Vec<AffineRoot>,
    pub imaginary_dim: usize,
}

/// Exact bracket `[U, W]` of two loop subspaces.
///
/// Layer `r` of the result is `Σ_{i+j=r} [U_i, W_j]`, plus `W_r` when `U`
/// contains `d` (and vice versa) for `r ≥ 1`.  In the non-negative grading
/// the central term never fires, so the result carries neither `K` nor `d`.
/// From degree `U.tail + W.tail` on every layer is `[g, g] = g`, which bounds
/// the computation.
pub fn bracket_loop(alg: &Algebra, u: &LoopSubspace, w: &LoopSubspace) -> LoopSubspace {
    let tail = u.tail + w.tail;
    let mut layers = BTreeMap::new();
    for r in 0..tail {
        let mut acc = HStableSubspace::zero(alg.rank());
        for i in 0..=r {
            let ui = u.layer(alg, i);
            if ui.is_zero() {
                continue;
            }
            let wj = w.layer(alg, r - i);
            if wj.is_zero() {
                continue;
            }
            acc = acc.sum(&alg.bracket_spaces(&ui, &wj));
        }
        if r >= 1 {
            if u.has_d {
                acc = acc.sum(&w.layer(alg, r));
            }
            if w.has_d {
                acc = acc.sum(&u.layer(alg, r));
            }
        }
        if !acc.is_zero() {
            layers.insert(r, acc);
        }
    }
    LoopSubspace::from_layers(alg, layers, tail, false, false)
}

/// The graded subalgebra
/// `τ̄ = (t^n ⊗ τ) ⊕ (t^{n+1} ⊗ V) ⊕ (t^{n+2} ℂ[t] ⊗ g) ⊕ ℂK`
/// for a nonzero subalgebra `τ`, a subspace `V` with `[τ, g] ⊆ V` that is
/// stable under the normalizer of `τ`, and a degree `n ≥ 1`.
pub fn build_tau_bar(
    alg: &Algebra,
    tau: &HStableSubspace,
    v: &HStableSubspace,
    n: usize,
) -> Result<LoopSubspace> {
    if n == 0 {
        return Err(Error::InvalidDegree);
    }
    if tau.is_zero() {
        return Err(Error::Precondition("τ must be nonzero".into()));
    }
    if !oracle::is_subalgebra(alg, tau) {
        return Err(Error::Precondition("τ must be a subalgebra".into()));
    }
    if !v.contains(&oracle::appui(alg, tau)) {
        return Err(Error::Precondition("V must contain [τ, g]".into()));
    }
    let rho = oracle::normalizer(alg, tau);
    if !v.contains(&alg.bracket_spaces(v, &rho)) {
        return Err(Error::Precondition(
            "V must be stable under the normalizer of τ".into(),
        ));
    }
    let layers = BTreeMap::from([(n, tau.clone()), (n + 1, v.clone())]);
    Ok(LoopSubspace::from_layers(alg, layers, n + 2, true, false))
}

/// The degree-zero companion containing the scaling element:
/// `τ̂ = τ ⊕ (t ℂ[t] ⊗ g) ⊕ ℂK ⊕ ℂd` for a nonzero subalgebra `τ`.
pub fn build_corollary(alg: &Algebra, tau: &HStableSubspace) -> Result<LoopSubspace> {
    if tau.is_zero() {
        return Err(Error::Precondition("τ must be nonzero".into()));
    }
    if !oracle::is_subalgebra(alg, tau) {
        return Err(Error::Precondition("τ must be a subalgebra".into()));
    }
    let layers = BTreeMap::from([(0, tau.clone())]);
    Ok(LoopSubspace::from_layers(alg, layers, 1, true, true))
}

/// The normalizer of a loop subspace, located among the parabolic-shaped
/// candidates `ρ_B ⊕ (t ℂ[t] ⊗ g) ⊕ ℂK ⊕ ℂd`, where
/// `ρ_B = n⁺ ⊕ h ⊕ Σ_{α ∈ ⟨B⟩⁺} g_{-α}` for `B ⊆ Π`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineNormalizer {
    /// The set `B` of simple roots whose negatives appear at degree zero.
    pub simple_set: BTreeSet<usize>,
    pub rho: LoopSubspace,
}

fn parabolic_candidate(alg: &Algebra, b: &BTreeSet<usize>) -> LoopSubspace {
    let rs = alg.root_system();
    let layer0 = HStableSubspace::new(
        (0..rs.num_positive()).collect(),
        rs.root_span(b).pos,
        RatMatrix::identity(alg.rank()),
    );
    LoopSubspace::from_layers(alg, BTreeMap::from([(0, layer0)]), 1, true, true)
}

/// Finds the unique maximal `B ⊆ Π` whose parabolic candidate normalizes
/// `t`.  Fails with [`Error::NoNormalizer`] when no candidate works and with
/// [`Error::NoUniqueMaximal`] when the normalizing sets have no greatest
/// element.
pub fn affine_normalizer(alg: &Algebra, t: &LoopSubspace) -> Result<AffineNormalizer> {
    let rank = alg.rank();
    let mut normalizing: Vec<BTreeSet<usize>> = Vec::new();
    for mask in 0u32..(1 << rank) {
        let b: BTreeSet<usize> = (0..rank).filter(|j| mask & (1 << j) != 0).collect();
        let cand = parabolic_candidate(alg, &b);
        if t.contains(alg, &bracket_loop(alg, &cand, t)) {
            normalizing.push(b);
        }
    }
    if normalizing.is_empty() {
        return Err(Error::NoNormalizer);
    }
    let union: BTreeSet<usize> = normalizing.iter().flatten().copied().collect();
    if !normalizing.contains(&union) {
        return Err(Error::NoUniqueMaximal);
    }
    Ok(AffineNormalizer {
        rho: parabolic_candidate(alg, &union),
        simple_set: union,
    })
}

/// Outcome of the standardness checks for a loop subspace.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StandardVerification {
    /// `[T, T] ⊆ T`.
    pub is_subalgebra: bool,
    /// The unique maximal parabolic-shaped normalizer, if one exists.
    pub normalizer: Option<AffineNormalizer>,
    /// `[T, ρ̄] ⊆ T`.
    pub ideal_of_normalizer: bool,
    /// The tail is maximal: every layer from `start + 2` on is all of `g`.
    pub maximal: bool,
}

impl StandardVerification {
    pub fn passes(&self) -> bool {
        self.is_subalgebra && self.normalizer.is_some() && self.ideal_of_normalizer && self.maximal
    }
}

/// Runs the standardness checks on a loop subspace.
pub fn verify_standard(alg: &Algebra, t: &LoopSubspace) -> StandardVerification {
    let is_subalgebra = t.contains(alg, &bracket_loop(alg, t, t));
    let normalizer = affine_normalizer(alg, t).ok();
    let ideal_of_normalizer = normalizer
        .as_ref()
        .map(|n| t.contains(alg, &bracket_loop(alg, t, &n.rho)))
        .unwrap_or(false);
    let maximal = t.tail() <= t.start() + 2;
    StandardVerification {
        is_subalgebra,
        normalizer,
        ideal_of_normalizer,
        maximal,
    }
}

/// Why a loop subspace fails to be a graded standard subalgebra.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Rejection {
    #[error("the leading layer is not a subalgebra")]
    NotSubalgebra,
    #[error("layer {degree} beyond start+1 is not all of g")]
    TailLayerNotFull { degree: usize },
    #[error("no parabolic-shaped candidate normalizes the subspace")]
    NoNormalizer,
    #[error("the normalizing candidates have no greatest element")]
    NoUniqueMaximal,
    #[error("graded ideal relation failed: {relation}")]
    RelationFailed { relation: &'static str },
    #[error("the leading layer is not contained in the normalizer's finite part")]
    LeadingLayerOutsideNormalizer,
    #[error("the finite normalizer of the leading layer differs from the affine one")]
    NormalizerMismatch,
    #[error("a subspace containing d must start at degree 0 with full layers from degree 1")]
    DegreeZeroFormRequired,
}

/// The data recovered from a graded standard subspace: the leading layer
/// `τ`, the next layer `V`, and the leading degree `n`, so that the input is
/// exactly `build` applied to them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub tau: HStableSubspace,
    pub v: HStableSubspace,
    pub degree: usize,
}

/// Decides whether `t` is a graded standard subalgebra and recovers its
/// `(τ, V, n)` presentation.
///
/// The checks run in the order: leading layer is a subalgebra; all layers
/// beyond `start + 1` are full; a unique maximal parabolic candidate
/// normalizes `t`; the graded ideal relations between consecutive layers and
/// the finite normalizer part hold; the leading layer sits inside the finite
/// normalizer part and has exactly that normalizer in `g`.  A subspace
/// containing `d` must additionally be in degree-zero form.
pub fn classify_graded(alg: &Algebra, t: &LoopSubspace) -> std::result::Result<Classification, Rejection> {
    let n = t.start();
    let i_n = t.layer(alg, n);
    let i_n1 = t.layer(alg, n + 1);
    let i_n2 = t.layer(alg, n + 2);
    let i_n3 = t.layer(alg, n + 3);
    let full = alg.full_subspace();

    if !oracle::is_subalgebra(alg, &i_n) {
        return Err(Rejection::NotSubalgebra);
    }
    for r in n + 2..t.tail() {
        if t.layer(alg, r) != full {
            return Err(Rejection::TailLayerNotFull { degree: r });
        }
    }
    let norm = match affine_normalizer(alg, t) {
        Ok(n) => n,
        Err(Error::NoNormalizer) => return Err(Rejection::NoNormalizer),
        Err(Error::NoUniqueMaximal) => return Err(Rejection::NoUniqueMaximal),
        Err(_) => unreachable!("normalizer search has no other failure mode"),
    };
    let rho = norm.rho.layer(alg, 0);

    let relations: [(&'static str, &HStableSubspace, &HStableSubspace, &HStableSubspace); 6] = [
        ("[I_n, ρ] ⊆ I_n", &i_n, &rho, &i_n),
        ("[I_n, g] ⊆ I_{n+1}", &i_n, &full, &i_n1),
        ("[I_{n+1}, ρ] ⊆ I_{n+1}", &i_n1, &rho, &i_n1),
        ("[I_{n+1}, g] ⊆ I_{n+2}", &i_n1, &full, &i_n2),
        ("[I_{n+2}, ρ] ⊆ I_{n+2}", &i_n2, &rho, &i_n2),
        ("[I_{n+2}, g] ⊆ I_{n+3}", &i_n2, &full, &i_n3),
    ];
    for (relation, a, b, target) in relations {
        if !target.contains(&alg.bracket_spaces(a, b)) {
            return Err(Rejection::RelationFailed { relation });
        }
    }

    if !rho.contains(&i_n) {
        return Err(Rejection::LeadingLayerOutsideNormalizer);
    }
    if oracle::normalizer(alg, &i_n) != rho {
        return Err(Rejection::NormalizerMismatch);
    }

    if t.has_d() {
        if n != 0 || t.layer(alg, 1) != full {
            return Err(Rejection::DegreeZeroFormRequired);
        }
        return Ok(Classification {
            tau: i_n,
            v: full,
            degree: 0,
        });
    }
    Ok(Classification {
        tau: i_n,
        v: i_n1,
        degree: n,
    })
}
