//! Standard subalgebras of a simple Lie algebra and their appui subspaces.
//!
//! A nilpotent standard subalgebra is determined by an antichain `R` in the
//! positive-root poset: `τ = Σ_{β ∈ R₁} g_β`, where `R₁` is the upward
//! closure of `R`.  The general form adds a semisimple part along a set `Ψ`
//! of simple roots kept out of play by the antichain:
//!
//! `τ = Σ_{β ∈ R₁} g_β ⊕ Σ_{α ∈ ⟨Ψ⟩⁺} (g_α ⊕ g_{-α}) ⊕ span{h_γ : γ ∈ Ψ}`.
//!
//! The appui subspace is `V_τ = [τ, g]`.  This module computes `V_τ` and the
//! normalizer of `τ` in closed form from the derived root sets; the
//! brute-force counterparts live in [`crate::oracle`].

use std::collections::BTreeSet;

use crate::chevalley::{Algebra, HStableSubspace};
use crate::linalg::RatMatrix;
use crate::rootsys::RootSystem;
use crate::{Error, Rat, Result};

/// The root-combinatorial data derived from an antichain `R ⊆ Δ⁺`.
///
/// All positive roots are referred to by their index in the canonical order;
/// sets of simple roots (`s1`, `s2`, `r3`, …) use simple-root numbers
/// `0..rank`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NilpotentStandard {
    r: Vec<usize>,
    /// Upward closure `R₁ = {α ∈ Δ⁺ : ∃β ∈ R, β ≤ α}`.
    r1: BTreeSet<usize>,
    /// Simple members `S₁ = R ∩ Π`.
    s1: BTreeSet<usize>,
    /// `S₂ = ∪_{ω ∈ R} S^ω`, the simple roots extremal in some element of R.
    s2: BTreeSet<usize>,
    /// `R₂ = {α ∈ Δ⁺ : ∃β ∈ R₁, α + β ∈ Δ}`.
    r2: BTreeSet<usize>,
    /// `R₃ = Π \ ∪_{β ∈ R₁} S^β`: simple roots extremal in no element of R₁.
    r3: BTreeSet<usize>,
    /// The coarser variant `Π \ S₂` (extremal sets taken over R only).
    r3_literal: BTreeSet<usize>,
    /// When `R ⊆ Π`: positive roots whose coefficients on R match θ.
    rc: Option<BTreeSet<usize>>,
}

impl NilpotentStandard {
    pub fn new(rs: &RootSystem, antichain: &[usize]) -> Result<Self> {
        let m = rs.num_positive();
        if antichain.iter().any(|&i| i >= m) {
            return Err(Error::NotAntichain);
        }
        let mut r: Vec<usize> = antichain.to_vec();
        r.sort_unstable();
        r.dedup();
        if r.len() != antichain.len() || !rs.is_antichain(&r) {
            return Err(Error::NotAntichain);
        }

        let r1: BTreeSet<usize> = (0..m)
            .filter(|&a| r.iter().any(|&b| rs.leq(rs.positive(b), rs.positive(a))))
            .collect();
        let s1: BTreeSet<usize> = (0..rs.rank()).filter(|&j| r.contains(&rs.simple(j))).collect();
        let mut s2 = BTreeSet::new();
        for &w in &r {
            s2.extend(rs.extremal_set(w));
        }
        let r2: BTreeSet<usize> = (0..m)
            .filter(|&a| {
                r1.iter().any(|&b| {
                    let sum: Vec<i64> = rs
                        .positive(a)
                        .coords()
                        .iter()
                        .zip(rs.positive(b).coords())
                        .map(|(x, y)| x + y)
                        .collect();
                    rs.is_root(&sum)
                })
            })
            .collect();
        let mut extremal_r1 = BTreeSet::new();
        for &b in &r1 {
            extremal_r1.extend(rs.extremal_set(b));
        }
        let r3: BTreeSet<usize> = (0..rs.rank()).filter(|j| !extremal_r1.contains(j)).collect();
        let r3_literal: BTreeSet<usize> = (0..rs.rank()).filter(|j| !s2.contains(j)).collect();

        let rc = if r.iter().all(|&b| rs.positive(b).height() == 1) {
            let theta = rs.highest_root().coords();
            let marked: Vec<usize> = r
                .iter()
                .map(|&b| rs.positive(b).coords().iter().position(|&c| c == 1).unwrap())
                .collect();
            Some(
                (0..m)
                    .filter(|&a| {
                        marked
                            .iter()
                            .all(|&j| rs.positive(a).coords()[j] == theta[j])
                    })
                    .collect(),
            )
        } else {
            None
        };

        Ok(NilpotentStandard {
            r,
            r1,
            s1,
            s2,
            r2,
            r3,
            r3_literal,
            rc,
        })
    }

    pub fn antichain(&self) -> &[usize] {
        &self.r
    }

    pub fn r1(&self) -> &BTreeSet<usize> {
        &self.r1
    }

    pub fn s1(&self) -> &BTreeSet<usize> {
        &self.s1
    }

    pub fn s2(&self) -> &BTreeSet<usize> {
        &self.s2
    }

    pub fn r2(&self) -> &BTreeSet<usize> {
        &self.r2
    }

    pub fn r3(&self) -> &BTreeSet<usize> {
        &self.r3
    }

    pub fn r3_literal(&self) -> &BTreeSet<usize> {
        &self.r3_literal
    }

    /// `R^c`, defined when `R ⊆ Π`: positive roots agreeing with θ on R.
    pub fn rc(&self) -> Option<&BTreeSet<usize>> {
        self.rc.as_ref()
    }

    /// Simple roots available for a semisimple part: `Π \ S₂`.
    pub fn psi_ground(&self, rs: &RootSystem) -> BTreeSet<usize> {
        (0..rs.rank()).filter(|j| !self.s2.contains(j)).collect()
    }

    /// The nilpotent standard subalgebra `τ = Σ_{β ∈ R₁} g_β`.
    pub fn tau(&self, alg: &Algebra) -> HStableSubspace {
        HStableSubspace::new(self.r1.clone(), BTreeSet::new(), RatMatrix::zero(alg.rank()))
    }

    fn appui_with_r3(&self, alg: &Algebra, r3: &BTreeSet<usize>) -> HStableSubspace {
        let rs = alg.root_system();
        let excluded = rs.root_span(r3).pos;
        let pos: BTreeSet<usize> = (0..rs.num_positive())
            .filter(|i| !excluded.contains(i))
            .collect();
        let cartan_rows = self
            .r1
            .union(&self.r2)
            .map(|&b| alg.coroot(b).into_iter().map(Rat::from_integer).collect());
        HStableSubspace::new(
            pos,
            self.r2.clone(),
            RatMatrix::from_rows(alg.rank(), cartan_rows),
        )
    }

    /// Closed form of the appui subspace `V_τ = [τ, g]`:
    /// positive part `Δ⁺ \ ⟨R₃⟩⁺`, negative part `R₂`, Cartan part
    /// `span{h_β : β ∈ R₁ ∪ R₂}`.
    pub fn appui(&self, alg: &Algebra) -> HStableSubspace {
        self.appui_with_r3(alg, &self.r3)
    }

    /// Same formula evaluated with the coarser set `Π \ S₂` in place of R₃.
    pub fn appui_literal(&self, alg: &Algebra) -> HStableSubspace {
        self.appui_with_r3(alg, &self.r3_literal)
    }

    /// Simplified form available when `R ⊆ Π`:
    /// `V = n⁺ ⊕ h ⊕ Σ_{α ∈ Δ⁺ \ R^c} g_{-α}`.
    pub fn appui_remark(&self, alg: &Algebra) -> Option<HStableSubspace> {
        let rc = self.rc.as_ref()?;
        let m = alg.num_positive();
        let neg: BTreeSet<usize> = (0..m).filter(|i| !rc.contains(i)).collect();
        Some(HStableSubspace::new(
            (0..m).collect(),
            neg,
            RatMatrix::identity(alg.rank()),
        ))
    }

    /// Closed form of the normalizer
    /// `ρ(τ) = n⁺ ⊕ h ⊕ Σ_{α ∈ ⟨Π \ S₂⟩⁺} g_{-α}`, shared by every standard
    /// subalgebra built on this antichain.
    pub fn normalizer(&self, alg: &Algebra) -> HStableSubspace {
        let rs = alg.root_system();
        let ground = self.psi_ground(rs);
        HStableSubspace::new(
            (0..rs.num_positive()).collect(),
            rs.root_span(&ground).pos,
            RatMatrix::identity(alg.rank()),
        )
    }

    /// `n₂^± = Σ_{β ∈ Δ⁺ \ R₂} g_{±β}`.
    pub fn n2(&self, alg: &Algebra, negative: bool) -> HStableSubspace {
        let roots: BTreeSet<usize> = (0..alg.num_positive())
            .filter(|i| !self.r2.contains(i))
            .collect();
        if negative {
            HStableSubspace::new(BTreeSet::new(), roots, RatMatrix::zero(alg.rank()))
        } else {
            HStableSubspace::new(roots, BTreeSet::new(), RatMatrix::zero(alg.rank()))
        }
    }

    /// Compares the exact Cartan part of `V_τ` against the full-Cartan
    /// variant, which is in general strictly larger and need not remain
    /// stable under the normalizer.
    pub fn cartan_note(&self, alg: &Algebra) -> CartanNote {
        let v = self.appui(alg);
        let full = HStableSubspace::new(
            v.pos.clone(),
            v.neg.clone(),
            RatMatrix::identity(alg.rank()),
        );
        let rho = self.normalizer(alg);
        let stable = full.contains(&alg.bracket_spaces(&full, &rho));
        CartanNote {
            exact_dim: v.cartan().rank(),
            full_dim: alg.rank(),
            full_variant_stable: stable,
        }
    }
}

/// Report on the Cartan component of the appui subspace: the exact dimension
/// from the closed form, the rank of the ambient Cartan subalgebra, and
/// whether replacing the exact part with all of `h` would still give a
/// normalizer-stable subspace.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CartanNote {
    pub exact_dim: usize,
    pub full_dim: usize,
    pub full_variant_stable: bool,
}

/// How a proposed `Ψ` is validated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PsiRule {
    /// `Ψ` must be a nonempty union of connected components of `Π \ S₂`.
    #[default]
    ComponentUnion,
    /// Any nonempty `Ψ ⊆ Π \ S₂` is accepted provided the compatibility
    /// checks `P_Ψ^± ⊆ n₂^±` hold, verified computationally.
    ConnectedSubsystem,
}

/// A standard subalgebra `τ(R, Ψ)`; `Ψ = ∅` gives the nilpotent case.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StandardSubalgebra {
    nil: NilpotentStandard,
    psi: BTreeSet<usize>,
}

impl StandardSubalgebra {
    pub fn nilpotent(rs: &RootSystem, antichain: &[usize]) -> Result<Self> {
        Ok(StandardSubalgebra {
            nil: NilpotentStandard::new(rs, antichain)?,
            psi: BTreeSet::new(),
        })
    }

    pub fn new(
        alg: &Algebra,
        antichain: &[usize],
        psi: &BTreeSet<usize>,
        rule: PsiRule,
    ) -> Result<Self> {
        let rs = alg.root_system();
        let nil = NilpotentStandard::new(rs, antichain)?;
        if psi.is_empty() {
            return Ok(StandardSubalgebra {
                nil,
                psi: BTreeSet::new(),
            });
        }
        let ground = nil.psi_ground(rs);
        if !psi.is_subset(&ground) || psi.iter().any(|&j| j >= rs.rank()) {
            return Err(Error::InvalidPsi);
        }
        match rule {
            PsiRule::ComponentUnion => {
                let comps = rs.connected_components(&ground);
                let union_of_comps = comps
                    .iter()
                    .filter(|c| !c.is_disjoint(psi))
                    .flatten()
                    .copied()
                    .collect::<BTreeSet<usize>>();
                if union_of_comps != *psi {
                    return Err(Error::InvalidPsi);
                }
            }
            PsiRule::ConnectedSubsystem => {
                let candidate = StandardSubalgebra {
                    nil: nil.clone(),
                    psi: psi.clone(),
                };
                for negative in [false, true] {
                    let p = candidate.p_psi(alg, negative);
                    if !nil.n2(alg, negative).contains(&p) {
                        return Err(Error::InvalidPsiSubsystem);
                    }
                }
            }
        }
        Ok(StandardSubalgebra {
            nil,
            psi: psi.clone(),
        })
    }

    pub fn nil(&self) -> &NilpotentStandard {
        &self.nil
    }

    pub fn psi(&self) -> &BTreeSet<usize> {
        &self.psi
    }

    pub fn is_nilpotent(&self) -> bool {
        self.psi.is_empty()
    }

    /// The standard subalgebra as a subspace of `g`.
    pub fn tau(&self, alg: &Algebra) -> HStableSubspace {
        let rs = alg.root_system();
        let span = rs.root_span(&self.psi).pos;
        let pos: BTreeSet<usize> = self.nil.r1.union(&span).copied().collect();
        let cartan_rows = self
            .psi
            .iter()
            .map(|&j| alg.coroot(rs.simple(j)).into_iter().map(Rat::from_integer).collect());
        HStableSubspace::new(pos, span, RatMatrix::from_rows(alg.rank(), cartan_rows))
    }

    /// `P_Ψ^± = [m_Ψ, n₂^±]`, where `m_Ψ` is the sum of the root spaces of
    /// `⟨Ψ⟩` (both signs, no Cartan part).
    pub fn p_psi(&self, alg: &Algebra, negative: bool) -> HStableSubspace {
        let rs = alg.root_system();
        let span = rs.root_span(&self.psi).pos;
        let m_psi = HStableSubspace::new(span.clone(), span, RatMatrix::zero(alg.rank()));
        alg.bracket_spaces(&m_psi, &self.nil.n2(alg, negative))
    }

    /// Closed form of `V_τ = [τ, g]`: the nilpotent formula when
    /// `P_Ψ^- = 0`, and all of `g` otherwise.
    pub fn appui(&self, alg: &Algebra) -> HStableSubspace {
        if self.psi.is_empty() {
            return self.nil.appui(alg);
        }
        if self.p_psi(alg, true).is_zero() {
            self.nil.appui(alg)
        } else {
            alg.full_subspace()
        }
    }

    /// The parabolic normalizer `ρ(τ)` of the nilpotent part.
    ///
    /// This equals the actual normalizer of `τ` when `Ψ` is a union of
    /// common components (see [`psi_common_components`]); for other admissible
    /// `Ψ` the normalizer of `τ` need not contain the Borel subalgebra and
    /// should be computed with [`crate::oracle::normalizer`].
    pub fn normalizer(&self, alg: &Algebra) -> HStableSubspace {
        self.nil.normalizer(alg)
    }

    /// Whether `Ψ` is a union of common components of `Π \ S₁` and `Π \ S₂`,
    /// the hypothesis under which the closed forms for `V_τ` and `ρ(τ)`
    /// are established.  The nilpotent case counts as common.
    pub fn is_common(&self, rs: &RootSystem) -> bool {
        let common = psi_common_components(rs, &self.nil);
        let mut rest = self.psi.clone();
        for c in &common {
            if c.is_subset(&rest) {
                for j in c {
                    rest.remove(j);
                }
            }
        }
        rest.is_empty()
    }
}

/// Connected components of `Π \ S₂`: the candidate constituents of `Ψ`.
pub fn psi_components(rs: &RootSystem, nil: &NilpotentStandard) -> Vec<BTreeSet<usize>> {
    rs.connected_components(&nil.psi_ground(rs))
}

/// Common connected components of `Π \ S₁` and `Π \ S₂`.
///
/// Since `S₁ ⊆ S₂`, these are exactly the components of `Π \ S₁` that avoid
/// `S₂`.  A `Ψ` made of common components spans a semisimple ideal of the
/// Levi subalgebra `h + Σ_{α ∈ ⟨Π \ S₁⟩} g_α`, and it is for such `Ψ` that
/// the appui dichotomy and the parabolic normalizer formula hold.
pub fn psi_common_components(rs: &RootSystem, nil: &NilpotentStandard) -> Vec<BTreeSet<usize>> {
    let ground1: BTreeSet<usize> = (0..rs.rank()).filter(|j| !nil.s1().contains(j)).collect();
    rs.connected_components(&ground1)
        .into_iter()
        .filter(|c| c.is_disjoint(nil.s2()))
        .collect()
}
