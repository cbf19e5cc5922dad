//! JSON-facing report types and their conversions from library values.
//!
//! Every struct here round-trips through serde.  Roots appear as integer
//! coordinate vectors over the simple roots; simple roots themselves are
//! 1-based indices matching the `a1..ap` tokens accepted on the command
//! line.  Rational numbers are rendered as exact strings ("1/2", never a
//! float).

use std::collections::BTreeSet;

use appui::affine::{AffineNormalizer, AffineRootForm, StandardVerification};
use appui::chevalley::{Algebra, HStableSubspace};
use appui::standard::{CartanNote, NilpotentStandard};
use appui::LoopSubspace;
use serde::{Deserialize, Serialize};

/// What the user asked for, echoed back in every report.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Descriptor {
    #[serde(rename = "type")]
    pub lie_type: String,
    /// Coordinate vectors of the antichain roots.
    pub antichain: Vec<Vec<i64>>,
    /// 1-based simple-root indices, when a semisimple part was requested.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub psi: Option<Vec<usize>>,
    /// Leading affine degree, when an affine construction was requested.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
}

/// An h-stable subspace, listed root by root.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SubspaceDto {
    pub dim: usize,
    pub pos: Vec<Vec<i64>>,
    pub neg: Vec<Vec<i64>>,
    pub cartan_dim: usize,
    /// Reduced row-echelon basis of the Cartan part, exact entries.
    pub cartan: Vec<Vec<String>>,
}

impl SubspaceDto {
    pub fn new(alg: &Algebra, v: &HStableSubspace) -> Self {
        let rs = alg.root_system();
        let coords = |s: &BTreeSet<usize>| -> Vec<Vec<i64>> {
            s.iter().map(|&i| rs.positive(i).coords().to_vec()).collect()
        };
        SubspaceDto {
            dim: v.dim(),
            pos: coords(&v.pos),
            neg: coords(&v.neg),
            cartan_dim: v.cartan().rank(),
            cartan: v
                .cartan()
                .rows()
                .iter()
                .map(|row| row.iter().map(|c| c.to_string()).collect())
                .collect(),
        }
    }
}

/// A quantity computed by the closed form, the oracle, or both.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SideBySide {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub formula: Option<SubspaceDto>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle: Option<SubspaceDto>,
    /// Present only when both sides were computed.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub agree: Option<bool>,
}

impl SideBySide {
    pub fn new(
        alg: &Algebra,
        formula: Option<&HStableSubspace>,
        oracle: Option<&HStableSubspace>,
    ) -> Self {
        let agree = match (formula, oracle) {
            (Some(f), Some(o)) => Some(f == o),
            _ => None,
        };
        SideBySide {
            formula: formula.map(|v| SubspaceDto::new(alg, v)),
            oracle: oracle.map(|v| SubspaceDto::new(alg, v)),
            agree,
        }
    }
}

/// Both readings of the exclusion set `R₃`, with the oracle's verdict on
/// which one reproduces `[τ, g]` ("both" when the readings coincide,
/// `null` when the oracle was not run).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct R3Report {
    pub r3_adopted: Vec<usize>,
    pub r3_literal: Vec<usize>,
    pub equal: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle_verdict: Option<String>,
}

impl R3Report {
    pub fn new(
        alg: &Algebra,
        nil: &NilpotentStandard,
        oracle_v: Option<&HStableSubspace>,
    ) -> Self {
        let one_based = |s: &BTreeSet<usize>| s.iter().map(|&j| j + 1).collect::<Vec<_>>();
        let oracle_verdict = oracle_v.map(|v| {
            let adopted = &nil.appui(alg) == v;
            let literal = &nil.appui_literal(alg) == v;
            match (adopted, literal) {
                (true, true) => "both",
                (true, false) => "adopted",
                (false, true) => "literal",
                (false, false) => "neither",
            }
            .to_string()
        });
        R3Report {
            r3_adopted: one_based(nil.r3()),
            r3_literal: one_based(nil.r3_literal()),
            equal: nil.r3() == nil.r3_literal(),
            oracle_verdict,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CartanNoteDto {
    pub exact_dim: usize,
    pub full_dim: usize,
    pub full_variant_stable: bool,
}

impl From<CartanNote> for CartanNoteDto {
    fn from(n: CartanNote) -> Self {
        CartanNoteDto {
            exact_dim: n.exact_dim,
            full_dim: n.full_dim,
            full_variant_stable: n.full_variant_stable,
        }
    }
}

/// The `V = V_m` vs `V = g` alternative for a semisimple part.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DichotomyDto {
    pub p_minus_zero: bool,
    #[serde(rename = "V == V_m")]
    pub v_equals_v_m: bool,
    #[serde(rename = "V == g")]
    pub v_equals_g: bool,
}

/// Supporting sets behind the closed forms, emitted under `--explain`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExplainDto {
    pub r1: Vec<Vec<i64>>,
    pub r2: Vec<Vec<i64>>,
    /// 1-based simple indices.
    pub s1: Vec<usize>,
    pub s2: Vec<usize>,
    pub n2_pos: Vec<Vec<i64>>,
    pub psi_components: Vec<Vec<usize>>,
    pub psi_common_components: Vec<Vec<usize>>,
}

/// One explicit layer of a loop subspace.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LayerDto {
    pub degree: usize,
    pub space: SubspaceDto,
}

/// A graded subspace of the truncated affine algebra.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LoopDto {
    pub start: usize,
    pub layers: Vec<LayerDto>,
    /// Degree from which every layer is all of `g`.
    pub tail_start: usize,
    pub has_k: bool,
    pub has_d: bool,
}

impl LoopDto {
    pub fn new(alg: &Algebra, t: &LoopSubspace) -> Self {
        LoopDto {
            start: t.start(),
            layers: t
                .explicit_layers()
                .map(|(degree, space)| LayerDto {
                    degree,
                    space: SubspaceDto::new(alg, space),
                })
                .collect(),
            tail_start: t.tail(),
            has_k: t.has_k(),
            has_d: t.has_d(),
        }
    }
}

/// Real/imaginary root rendering of a loop subspace, degree by degree.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AffineFormDto {
    pub layers: Vec<AffineLayerDto>,
    pub tail: usize,
    pub has_k: bool,
    pub has_d: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AffineLayerDto {
    pub degree: usize,
    pub real: Vec<String>,
    pub imaginary_dim: usize,
}

impl From<AffineRootForm> for AffineFormDto {
    fn from(f: AffineRootForm) -> Self {
        AffineFormDto {
            layers: f
                .layers
                .into_iter()
                .map(|l| AffineLayerDto {
                    degree: l.degree,
                    real: l.real.iter().map(|r| r.to_string()).collect(),
                    imaginary_dim: l.imaginary_dim,
                })
                .collect(),
            tail: f.tail,
            has_k: f.has_k,
            has_d: f.has_d,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NormalizerDto {
    /// 1-based indices of the simple roots whose negatives appear at
    /// degree zero.
    pub simple_set: Vec<usize>,
    pub finite_part: SubspaceDto,
    pub tail_start: usize,
    pub has_k: bool,
    pub has_d: bool,
}

impl NormalizerDto {
    pub fn new(alg: &Algebra, n: &AffineNormalizer) -> Self {
        NormalizerDto {
            simple_set: n.simple_set.iter().map(|&j| j + 1).collect(),
            finite_part: SubspaceDto::new(alg, &n.rho.layer(alg, 0)),
            tail_start: n.rho.tail(),
            has_k: n.rho.has_k(),
            has_d: n.rho.has_d(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationDto {
    pub is_subalgebra: bool,
    pub normalizer_found: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub normalizer: Option<NormalizerDto>,
    pub ideal_of_normalizer: bool,
    pub maximal: bool,
    pub pass: bool,
}

impl VerificationDto {
    pub fn new(alg: &Algebra, v: &StandardVerification) -> Self {
        VerificationDto {
            is_subalgebra: v.is_subalgebra,
            normalizer_found: v.normalizer.is_some(),
            normalizer: v.normalizer.as_ref().map(|n| NormalizerDto::new(alg, n)),
            ideal_of_normalizer: v.ideal_of_normalizer,
            maximal: v.maximal,
            pass: v.passes(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClassificationDto {
    pub accepted: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tau: Option<SubspaceDto>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub v: Option<SubspaceDto>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rejection: Option<String>,
    /// Whether `(τ, V, n)` recovered by classification equals the input
    /// the construction was built from.
    pub matches_input: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComputeReport {
    pub descriptor: Descriptor,
    pub mode: String,
    /// For a semisimple part: whether `Ψ` is a union of common components,
    /// i.e. whether the closed forms are guaranteed to apply.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub psi_common: Option<bool>,
    pub tau: SubspaceDto,
    pub normalizer: SideBySide,
    pub appui: SideBySide,
    pub r3: R3Report,
    pub cartan_note: CartanNoteDto,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dichotomy: Option<DichotomyDto>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub affine: Option<AffineConstructionDto>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub explain: Option<ExplainDto>,
    /// All computed formula/oracle comparisons agree (absent unless both
    /// sides were computed).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub agree: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AffineConstructionDto {
    pub construction: LoopDto,
    pub affine_form: AffineFormDto,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MutationDto {
    pub sign: String,
    pub root: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AffineVerifyReport {
    pub descriptor: Descriptor,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mutated: Option<MutationDto>,
    pub construction: LoopDto,
    pub affine_form: AffineFormDto,
    pub verification: VerificationDto,
    pub classification: ClassificationDto,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RootDto {
    pub index: usize,
    pub coords: Vec<i64>,
    pub display: String,
    pub height: i64,
    pub norm_sq: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RootsReport {
    #[serde(rename = "type")]
    pub lie_type: String,
    pub rank: usize,
    pub num_positive: usize,
    pub roots: Vec<RootDto>,
    pub highest: RootDto,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AntichainDto {
    pub indices: Vec<usize>,
    pub roots: Vec<Vec<i64>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AntichainsReport {
    #[serde(rename = "type")]
    pub lie_type: String,
    pub include_empty: bool,
    pub count: usize,
    pub capped: bool,
    pub antichains: Vec<AntichainDto>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FailureDto {
    pub antichain: Vec<Vec<i64>>,
    pub failed_checks: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TypeReport {
    #[serde(rename = "type")]
    pub lie_type: String,
    pub antichains: usize,
    pub psi_cases: usize,
    pub common_psi_cases: usize,
    pub all_pass: bool,
    pub failures: Vec<FailureDto>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepReport {
    pub types: Vec<TypeReport>,
    pub all_pass: bool,
}
