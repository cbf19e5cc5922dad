//! Chevalley basis of a simple Lie algebra: integer structure constants,
//! element-level brackets, the invariant bilinear form, and exact brackets of
//! `ad(h)`-stable subspaces.
//!
//! The basis is `{e_α : α ∈ Δ} ∪ {h_1, …, h_p}` with
//!
//! * `[h_i, h_j] = 0`,
//! * `[h_i, e_α] = α(h_i) e_α`,
//! * `[e_α, e_{-α}] = h_α` (the coroot, an integer combination of the `h_i`),
//! * `[e_α, e_β] = N(α,β) e_{α+β}` when `α + β ∈ Δ`, and `0` otherwise.
//!
//! Signs are fixed by the extraspecial-pair convention: positive roots carry
//! the canonical order (height, then lexicographic), each non-simple positive
//! root `γ` has a distinguished minimal decomposition `γ = ε + η`, and
//! `N(ε,η) = p + 1 > 0` there; every other constant follows from the Jacobi
//! identity.  All constants are integers with `|N(α,β)| = p + 1`, where `p`
//! is the length of the root string from `β` down through `α`.

use std::collections::BTreeSet;
use std::fmt;

use num_traits::Zero;

use crate::linalg::RatMatrix;
use crate::rootsys::{LieType, Root, RootSystem};
use crate::Rat;

/// A basis vector of the algebra.
///
/// `Root(a)` is `e_α` for the *signed* root index `a`: indices `0..m` are the
/// positive roots in canonical order, `m..2m` their negatives (`m + i ↔ -α_i`).
/// `Coroot(i)` is the simple coroot `h_{i+1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BasisElement {
    Root(usize),
    Coroot(usize),
}

/// A finite linear combination of basis vectors with rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LinComb {
    terms: std::collections::BTreeMap<BasisElement, Rat>,
}

impl LinComb {
    pub fn zero() -> Self {
        LinComb::default()
    }

    pub fn basis(b: BasisElement) -> Self {
        let mut x = LinComb::zero();
        x.add_term(b, Rat::from_integer(1));
        x
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (BasisElement, Rat)>) -> Self {
        let mut x = LinComb::zero();
        for (b, c) in terms {
            x.add_term(b, c);
        }
        x
    }

    pub fn add_term(&mut self, b: BasisElement, c: Rat) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(b).or_insert_with(Rat::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&b);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (BasisElement, Rat)> + '_ {
        self.terms.iter().map(|(&b, &c)| (b, c))
    }

    pub fn coefficient(&self, b: BasisElement) -> Rat {
        self.terms.get(&b).copied().unwrap_or_else(Rat::zero)
    }

    pub fn scaled(&self, c: Rat) -> LinComb {
        if c.is_zero() {
            return LinComb::zero();
        }
        LinComb {
            terms: self.terms.iter().map(|(&b, &x)| (b, x * c)).collect(),
        }
    }

    pub fn plus(&self, other: &LinComb) -> LinComb {
        let mut x = self.clone();
        for (b, c) in other.terms() {
            x.add_term(b, c);
        }
        x
    }

    pub fn minus(&self, other: &LinComb) -> LinComb {
        self.plus(&other.scaled(Rat::from_integer(-1)))
    }
}

/// Where the sum of two signed roots lands.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum RootSum {
    /// The sum is the root with this signed index.
    Root(u16),
    /// The roots are opposite; the bracket is a coroot.
    Opposite,
    /// The sum is not a root (and not zero); the bracket vanishes.
    None,
}

/// A simple Lie algebra over `ℚ` in a fixed Chevalley basis.
#[derive(Debug, Clone)]
pub struct Algebra {
    rs: RootSystem,
    m: usize,
    /// `sum[a][b]` for signed indices `a`, `b`.
    sum: Vec<Vec<RootSum>>,
    /// `n[a][b] = N(a, b)`; zero unless `sum[a][b]` is `Root`.
    n: Vec<Vec<i64>>,
    /// Squared length of each positive root.
    norm_sq: Vec<Rat>,
    /// Coroot coordinates of each positive root over the simple coroots.
    coroot: Vec<Vec<i64>>,
    /// `root_on_coroots[i][k] = α_i(h_{k+1})` for positive index `i`.
    root_on_coroots: Vec<Vec<i64>>,
}

impl Algebra {
    pub fn new(lie_type: LieType) -> Self {
        Algebra::from_root_system(RootSystem::new(lie_type))
    }

    pub fn from_root_system(rs: RootSystem) -> Self {
        let m = rs.num_positive();
        let rank = rs.rank();
        let signed = 2 * m;

        let coords = |a: usize| -> Vec<i64> {
            if a < m {
                rs.positive(a).coords().to_vec()
            } else {
                rs.positive(a - m).negated().coords().to_vec()
            }
        };

        let mut sum = vec![vec![RootSum::None; signed]; signed];
        for (a, row) in sum.iter_mut().enumerate() {
            let ca = coords(a);
            for (b, cell) in row.iter_mut().enumerate() {
                if b == (a + m) % signed {
                    *cell = RootSum::Opposite;
                    continue;
                }
                let cb = coords(b);
                let s: Vec<i64> = ca.iter().zip(&cb).map(|(x, y)| x + y).collect();
                if let Some((i, negative)) = rs.signed_index_of(&s) {
                    *cell = RootSum::Root(if negative { (i + m) as u16 } else { i as u16 });
                }
            }
        }

        let norm_sq: Vec<Rat> = (0..m).map(|i| rs.norm_sq(rs.positive(i))).collect();
        let nsq = |a: usize| norm_sq[a % m];

        // Longest `k` with `b - k·a` a root; `|N(a,b)| = p + 1` always.
        let string_p = |a: usize, b: usize| -> i64 {
            let ca = coords(a);
            let mut cur = coords(b);
            let mut p = 0;
            loop {
                for (x, y) in cur.iter_mut().zip(&ca) {
                    *x -= y;
                }
                if rs.is_root(&cur) {
                    p += 1;
                } else {
                    return p;
                }
            }
        };

        let mut n = vec![vec![0i64; signed]; signed];

        // Positive pairs, grouped by the sum γ in canonical (height) order so
        // that the recursion below only consults already-filled entries.
        for gamma in 0..m {
            if rs.positive(gamma).height() < 2 {
                continue;
            }
            let gc = rs.positive(gamma).coords().to_vec();
            let mut pairs: Vec<(usize, usize)> = Vec::new();
            for a in 0..m {
                let diff: Vec<i64> = gc
                    .iter()
                    .zip(rs.positive(a).coords())
                    .map(|(x, y)| x - y)
                    .collect();
                if let Some(b) = rs.index_of(&diff) {
                    if a < b {
                        pairs.push((a, b));
                    }
                }
            }
            assert!(!pairs.is_empty(), "non-simple root must decompose");
            let (eps, eta) = pairs[0];
            // Extraspecial pair: N(ε,η) = p + 1 > 0.
            n[eps][eta] = string_p(eps, eta) + 1;
            n[eta][eps] = -n[eps][eta];
            for &(al, be) in &pairs[1..] {
                let mut t = Rat::zero();
                if let RootSum::Root(d) = sum[al][eps + m] {
                    // α - ε is a positive root here (heights force the sign).
                    let d = d as usize;
                    debug_assert!(d < m);
                    t += Rat::from_integer(n[eps][d] * n[d][be]) * nsq(d) * nsq(be)
                        / (nsq(al) * nsq(eta));
                }
                if let RootSum::Root(d) = sum[eta][al + m] {
                    // η - α is a positive root here.
                    let d = d as usize;
                    debug_assert!(d < m);
                    t += Rat::from_integer(n[al][d] * n[eps][d]) * nsq(d) / nsq(eta);
                }
                let val = t * nsq(gamma) / (nsq(be) * Rat::from_integer(n[eps][eta]));
                assert!(val.is_integer(), "structure constant must be integral");
                let val = val.to_integer();
                assert_eq!(val.abs(), string_p(al, be) + 1);
                n[al][be] = val;
                n[be][al] = -val;
            }
        }

        // Opposite-sign pairs: for x, ν ∈ Δ⁺ with δ = x - ν ∈ Δ⁺,
        //   N(x, -ν) = -N(ν, δ)·(δ,δ)/(x,x),
        // and the three companions follow from antisymmetry and
        // N(-a,-b) = -N(a,b).
        for x in 0..m {
            for nu in 0..m {
                if let RootSum::Root(d) = sum[x][nu + m] {
                    let d = d as usize;
                    if d >= m {
                        continue;
                    }
                    let val = -Rat::from_integer(n[nu][d]) * nsq(d) / nsq(x);
                    assert!(val.is_integer());
                    let val = val.to_integer();
                    assert_eq!(val.abs(), string_p(x, nu + m) + 1);
                    n[x][nu + m] = val;
                    n[nu + m][x] = -val;
                    n[x + m][nu] = -val;
                    n[nu][x + m] = val;
                }
            }
        }

        // Negative pairs: N(-a, -b) = -N(a, b).
        for a in 0..m {
            for b in 0..m {
                if let RootSum::Root(_) = sum[a][b] {
                    n[a + m][b + m] = -n[a][b];
                }
            }
        }

        let coroot: Vec<Vec<i64>> = (0..m).map(|i| rs.coroot_coords(rs.positive(i))).collect();
        let root_on_coroots: Vec<Vec<i64>> =
            (0..m).map(|i| rs.pairing_vector(rs.positive(i))).collect();

        debug_assert_eq!(rank, rs.rank());
        Algebra {
            rs,
            m,
            sum,
            n,
            norm_sq,
            coroot,
            root_on_coroots,
        }
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn rank(&self) -> usize {
        self.rs.rank()
    }

    /// Number of positive roots `m`; signed indices run over `0..2m`.
    pub fn num_positive(&self) -> usize {
        self.m
    }

    pub fn signed_count(&self) -> usize {
        2 * self.m
    }

    pub fn dim(&self) -> usize {
        2 * self.m + self.rank()
    }

    pub fn negate_index(&self, a: usize) -> usize {
        (a + self.m) % (2 * self.m)
    }

    pub fn is_negative_index(&self, a: usize) -> bool {
        a >= self.m
    }

    /// The root for a signed index.
    pub fn signed_root(&self, a: usize) -> Root {
        if a < self.m {
            self.rs.positive(a).clone()
        } else {
            self.rs.positive(a - self.m).negated()
        }
    }

    /// Signed index for a root of either sign.
    pub fn signed_index(&self, r: &Root) -> Option<usize> {
        self.rs
            .signed_index_of(r.coords())
            .map(|(i, neg)| if neg { i + self.m } else { i })
    }

    /// Index of `a + b` when that is a root.
    pub fn sum_index(&self, a: usize, b: usize) -> Option<usize> {
        match self.sum[a][b] {
            RootSum::Root(c) => Some(c as usize),
            _ => None,
        }
    }

    /// Structure constant `N(a, b)`; zero when `a + b ∉ Δ`.
    pub fn n(&self, a: usize, b: usize) -> i64 {
        self.n[a][b]
    }

    /// Length `p` of the root string `b, b - a, …, b - p·a`.
    pub fn string_p(&self, a: usize, b: usize) -> i64 {
        let ca = self.signed_root(a);
        let mut cur = self.signed_root(b).coords().to_vec();
        let mut p = 0;
        loop {
            for (x, y) in cur.iter_mut().zip(ca.coords()) {
                *x -= y;
            }
            if self.rs.is_root(&cur) {
                p += 1;
            } else {
                return p;
            }
        }
    }

    /// `(α, α)` for a signed index.
    pub fn norm_sq_signed(&self, a: usize) -> Rat {
        self.norm_sq[a % self.m]
    }

    /// Coroot `h_a` as integer coordinates over the simple coroots.
    pub fn coroot(&self, a: usize) -> Vec<i64> {
        if a < self.m {
            self.coroot[a].clone()
        } else {
            self.coroot[a - self.m].iter().map(|c| -c).collect()
        }
    }

    /// `α(h_{k+1})` for all `k`, for the signed index of `α`.
    pub fn root_on_coroots(&self, a: usize) -> Vec<i64> {
        if a < self.m {
            self.root_on_coroots[a].clone()
        } else {
            self.root_on_coroots[a - self.m].iter().map(|c| -c).collect()
        }
    }

    /// Value `α(h)` for `h` given by rational coordinates over the simple
    /// coroots.
    pub fn root_on_cartan(&self, a: usize, h: &[Rat]) -> Rat {
        self.root_on_coroots(a)
            .iter()
            .zip(h)
            .map(|(&v, &c)| Rat::from_integer(v) * c)
            .sum()
    }

    fn bracket_basis(&self, x: BasisElement, y: BasisElement) -> LinComb {
        match (x, y) {
            (BasisElement::Coroot(_), BasisElement::Coroot(_)) => LinComb::zero(),
            (BasisElement::Coroot(i), BasisElement::Root(a)) => {
                let v = self.root_on_coroots(a)[i];
                LinComb::from_terms([(BasisElement::Root(a), Rat::from_integer(v))])
            }
            (BasisElement::Root(a), BasisElement::Coroot(i)) => {
                let v = self.root_on_coroots(a)[i];
                LinComb::from_terms([(BasisElement::Root(a), Rat::from_integer(-v))])
            }
            (BasisElement::Root(a), BasisElement::Root(b)) => match self.sum[a][b] {
                RootSum::Root(c) => LinComb::from_terms([(
                    BasisElement::Root(c as usize),
                    Rat::from_integer(self.n[a][b]),
                )]),
                RootSum::Opposite => LinComb::from_terms(
                    self.coroot(a)
                        .into_iter()
                        .enumerate()
                        .map(|(i, c)| (BasisElement::Coroot(i), Rat::from_integer(c))),
                ),
                RootSum::None => LinComb::zero(),
            },
        }
    }

    /// Bracket of two elements.
    pub fn bracket(&self, x: &LinComb, y: &LinComb) -> LinComb {
        let mut out = LinComb::zero();
        for (bx, cx) in x.terms() {
            for (by, cy) in y.terms() {
                let piece = self.bracket_basis(bx, by).scaled(cx * cy);
                out = out.plus(&piece);
            }
        }
        out
    }

    /// The invariant symmetric bilinear form, normalized so that
    /// `(e_θ | e_{-θ}) = 1`:
    /// `(e_α|e_{-α}) = 2/(α,α)`, `(h_i|h_j) = (α_i,α_j)/(d_i d_j)`, and
    /// root spaces pair trivially otherwise.
    pub fn form(&self, x: &LinComb, y: &LinComb) -> Rat {
        let mut s = Rat::zero();
        for (bx, cx) in x.terms() {
            for (by, cy) in y.terms() {
                let v = match (bx, by) {
                    (BasisElement::Root(a), BasisElement::Root(b)) => {
                        if b == self.negate_index(a) {
                            Rat::from_integer(2) / self.norm_sq_signed(a)
                        } else {
                            Rat::zero()
                        }
                    }
                    (BasisElement::Coroot(i), BasisElement::Coroot(j)) => {
                        let d = self.rs.symmetrizer();
                        Rat::from_integer(self.rs.cartan()[i][j]) / d[j]
                    }
                    _ => Rat::zero(),
                };
                s += cx * cy * v;
            }
        }
        s
    }

    /// The whole algebra as a subspace.
    pub fn full_subspace(&self) -> HStableSubspace {
        HStableSubspace::new(
            (0..self.m).collect(),
            (0..self.m).collect(),
            RatMatrix::identity(self.rank()),
        )
    }

    /// Exact bracket `[U, W]` of two `ad(h)`-stable subspaces.
    ///
    /// Both arguments are direct sums of full root spaces and a subspace of
    /// `h`, so the bracket is again of that shape and can be computed
    /// spanwise: root space against root space lands in a single root space
    /// (structure constants never vanish on root sums) or contributes a
    /// coroot line, and the Cartan part acts diagonally, contributing `g_β`
    /// exactly when some element of it pairs nontrivially with `β`.
    pub fn bracket_spaces(&self, u: &HStableSubspace, w: &HStableSubspace) -> HStableSubspace {
        let rank = self.rank();
        let mut pos = BTreeSet::new();
        let mut neg = BTreeSet::new();
        let mut cartan = RatMatrix::zero(rank);

        let insert_signed = |pos: &mut BTreeSet<usize>, neg: &mut BTreeSet<usize>, c: usize| {
            if c < self.m {
                pos.insert(c);
            } else {
                neg.insert(c - self.m);
            }
        };

        for a in u.signed_indices(self.m) {
            for b in w.signed_indices(self.m) {
                match self.sum[a][b] {
                    RootSum::Root(c) => insert_signed(&mut pos, &mut neg, c as usize),
                    RootSum::Opposite => {
                        let row = self
                            .coroot(a)
                            .into_iter()
                            .map(Rat::from_integer)
                            .collect::<Vec<_>>();
                        cartan.insert_row(row);
                    }
                    RootSum::None => {}
                }
            }
        }
        for b in w.signed_indices(self.m) {
            if u.cartan()
                .rows()
                .iter()
                .any(|h| !self.root_on_cartan(b, h).is_zero())
            {
                insert_signed(&mut pos, &mut neg, b);
            }
        }
        for a in u.signed_indices(self.m) {
            if w.cartan()
                .rows()
                .iter()
                .any(|h| !self.root_on_cartan(a, h).is_zero())
            {
                insert_signed(&mut pos, &mut neg, a);
            }
        }
        HStableSubspace::new(pos, neg, cartan)
    }
}

/// An `ad(h)`-stable subspace: a sum of full root spaces plus a subspace of
/// the Cartan subalgebra.
///
/// `pos` and `neg` hold *positive* root indices; `i ∈ neg` means
/// `g_{-α_i} ⊆ U`.  The Cartan part is kept in canonical reduced form, so
/// structural equality is equality of subspaces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HStableSubspace {
    pub pos: BTreeSet<usize>,
    pub neg: BTreeSet<usize>,
    cartan: RatMatrix,
}

impl HStableSubspace {
    pub fn new(pos: BTreeSet<usize>, neg: BTreeSet<usize>, cartan: RatMatrix) -> Self {
        HStableSubspace { pos, neg, cartan }
    }

    pub fn zero(rank: usize) -> Self {
        HStableSubspace {
            pos: BTreeSet::new(),
            neg: BTreeSet::new(),
            cartan: RatMatrix::zero(rank),
        }
    }

    /// Builds from signed root indices and Cartan rows (coordinates over the
    /// simple coroots).
    pub fn from_parts(
        rank: usize,
        num_positive: usize,
        signed_roots: impl IntoIterator<Item = usize>,
        cartan_rows: impl IntoIterator<Item = Vec<Rat>>,
    ) -> Self {
        let mut pos = BTreeSet::new();
        let mut neg = BTreeSet::new();
        for a in signed_roots {
            if a < num_positive {
                pos.insert(a);
            } else {
                neg.insert(a - num_positive);
            }
        }
        HStableSubspace {
            pos,
            neg,
            cartan: RatMatrix::from_rows(rank, cartan_rows),
        }
    }

    pub fn cartan(&self) -> &RatMatrix {
        &self.cartan
    }

    pub fn cartan_mut(&mut self) -> &mut RatMatrix {
        &mut self.cartan
    }

    pub fn dim(&self) -> usize {
        self.pos.len() + self.neg.len() + self.cartan.rank()
    }

    pub fn is_zero(&self) -> bool {
        self.pos.is_empty() && self.neg.is_empty() && self.cartan.is_zero()
    }

    /// Signed indices of all root spaces contained in the subspace.
    pub fn signed_indices(&self, num_positive: usize) -> impl Iterator<Item = usize> + '_ {
        self.pos
            .iter()
            .copied()
            .chain(self.neg.iter().map(move |&i| i + num_positive))
    }

    pub fn contains_root_space(&self, signed: usize, num_positive: usize) -> bool {
        if signed < num_positive {
            self.pos.contains(&signed)
        } else {
            self.neg.contains(&(signed - num_positive))
        }
    }

    pub fn contains(&self, other: &HStableSubspace) -> bool {
        other.pos.is_subset(&self.pos)
            && other.neg.is_subset(&self.neg)
            && self.cartan.contains(&other.cartan)
    }

    pub fn sum(&self, other: &HStableSubspace) -> HStableSubspace {
        HStableSubspace {
            pos: self.pos.union(&other.pos).copied().collect(),
            neg: self.neg.union(&other.neg).copied().collect(),
            cartan: self.cartan.sum(&other.cartan),
        }
    }

    /// Membership of a single element: every root component must lie in a
    /// contained root space and the Cartan component in the Cartan part.
    pub fn contains_element(&self, x: &LinComb, num_positive: usize) -> bool {
        let rank = self.cartan.cols();
        let mut h = vec![Rat::zero(); rank];
        for (b, c) in x.terms() {
            match b {
                BasisElement::Root(a) => {
                    if !self.contains_root_space(a, num_positive) {
                        return false;
                    }
                }
                BasisElement::Coroot(i) => h[i] = c,
            }
        }
        h.iter().all(Zero::is_zero) || self.cartan.contains_row(&h)
    }
}

impl fmt::Display for HStableSubspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} positive / {} negative root spaces, Cartan rank {}",
            self.pos.len(),
            self.neg.len(),
            self.cartan.rank()
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alg(name: &str) -> Algebra {
        Algebra::new(name.parse().unwrap())
    }

    fn pos_idx(a: &Algebra, coords: &[i64]) -> usize {
        a.root_system().index_of(coords).unwrap()
    }

    #[test]
    fn a2_fixture() {
        let g = alg("A2");
        // Canonical order: (0,1), (1,0), (1,1).
        let a2 = pos_idx(&g, &[0, 1]);
        let a1 = pos_idx(&g, &[1, 0]);
        let th = pos_idx(&g, &[1, 1]);
        assert_eq!((a2, a1, th), (0, 1, 2));
        assert_eq!(g.n(a2, a1), 1);
        assert_eq!(g.n(a1, a2), -1);
        // N(θ, -α1) = +1 and the bracket [e_θ, e_{-α1}] = e_{α2}.
        assert_eq!(g.n(th, g.negate_index(a1)), 1);
        // [e_θ, e_{-θ}] = h_θ = h_1 + h_2.
        let b = g.bracket(
            &LinComb::basis(BasisElement::Root(th)),
            &LinComb::basis(BasisElement::Root(g.negate_index(th))),
        );
        let want = LinComb::from_terms([
            (BasisElement::Coroot(0), Rat::from_integer(1)),
            (BasisElement::Coroot(1), Rat::from_integer(1)),
        ]);
        assert_eq!(b, want);
    }

    #[test]
    fn a2_cartan_action_matches_cartan_matrix() {
        let g = alg("A2");
        // α_2(h_1) = A[1][2] = -1 in 1-based labels.
        let a2 = pos_idx(&g, &[0, 1]);
        assert_eq!(g.root_on_coroots(a2)[0], -1);
        assert_eq!(g.root_on_coroots(a2)[1], 2);
    }

    #[test]
    fn b2_fixture() {
        let g = alg("B2");
        let a2 = pos_idx(&g, &[0, 1]);
        let s = pos_idx(&g, &[1, 1]);
        assert_eq!(g.n(a2, s).abs(), 2);
        assert_eq!(g.n(a2, s), 2); // (α2, α1+α2) extends the ES chain
    }

    #[test]
    fn g2_fixture() {
        let g = alg("G2");
        let a1 = pos_idx(&g, &[1, 0]);
        let a2 = pos_idx(&g, &[0, 1]);
        let r11 = pos_idx(&g, &[1, 1]);
        let r21 = pos_idx(&g, &[2, 1]);
        let r31 = pos_idx(&g, &[3, 1]);
        assert_eq!(g.n(a2, a1), 1);
        assert_eq!(g.n(a1, r11), 2);
        assert_eq!(g.n(a1, r21), 3);
        assert_eq!(g.n(a2, r31), 1);
        // Non-extraspecial special pair, filled by the recursion.
        assert_eq!(g.n(r11, r21), 3);
        // Mixed-sign constant.
        assert_eq!(g.n(r11, g.negate_index(a1)), 3);
    }

    #[test]
    fn constants_are_pm_p_plus_1_and_antisymmetric() {
        for name in ["A1", "A2", "A3", "B2", "B3", "B4", "C3", "D4", "F4", "G2"] {
            let g = alg(name);
            let s = g.signed_count();
            for a in 0..s {
                for b in 0..s {
                    let n = g.n(a, b);
                    assert_eq!(n, -g.n(b, a), "{name}: antisymmetry at ({a},{b})");
                    if g.sum_index(a, b).is_some() {
                        assert_eq!(
                            n.abs(),
                            g.string_p(a, b) + 1,
                            "{name}: |N| ≠ p+1 at ({a},{b})"
                        );
                    } else {
                        assert_eq!(n, 0, "{name}");
                    }
                }
            }
        }
    }

    fn all_basis(g: &Algebra) -> Vec<BasisElement> {
        (0..g.signed_count())
            .map(BasisElement::Root)
            .chain((0..g.rank()).map(BasisElement::Coroot))
            .collect()
    }

    #[test]
    fn jacobi_identity_exhaustive() {
        for name in ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "F4", "G2"] {
            let g = alg(name);
            let basis = all_basis(&g);
            for &x in &basis {
                let lx = LinComb::basis(x);
                for &y in &basis {
                    let ly = LinComb::basis(y);
                    let xy = g.bracket(&lx, &ly);
                    for &z in &basis {
                        let lz = LinComb::basis(z);
                        let lhs = g.bracket(&lx, &g.bracket(&ly, &lz));
                        let rhs = g.bracket(&xy, &lz).plus(&g.bracket(&ly, &g.bracket(&lx, &lz)));
                        assert_eq!(lhs, rhs, "{name}: Jacobi fails at {x:?},{y:?},{z:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn form_is_invariant_and_normalized() {
        for name in ["A2", "A3", "B2", "B3", "C3", "G2"] {
            let g = alg(name);
            let th = g.root_system().highest_root_index();
            let e = LinComb::basis(BasisElement::Root(th));
            let f = LinComb::basis(BasisElement::Root(g.negate_index(th)));
            assert_eq!(g.form(&e, &f), Rat::from_integer(1), "{name}");
            let basis = all_basis(&g);
            for &x in &basis {
                let lx = LinComb::basis(x);
                for &y in &basis {
                    let ly = LinComb::basis(y);
                    assert_eq!(g.form(&lx, &ly), g.form(&ly, &lx), "{name}: symmetry");
                    for &z in &basis {
                        let lz = LinComb::basis(z);
                        let lhs = g.form(&g.bracket(&lx, &ly), &lz);
                        let rhs = g.form(&lx, &g.bracket(&ly, &lz));
                        assert_eq!(lhs, rhs, "{name}: invariance at {x:?},{y:?},{z:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn coroot_bracket_pairing() {
        // [h_α, e_β] = β(h_α) e_β = ⟨β, α^∨⟩ e_β; check integrality via the
        // bracket [e_α, e_{-α}] and the Cartan action.
        let g = alg("G2");
        for a in 0..g.signed_count() {
            let h = g.bracket(
                &LinComb::basis(BasisElement::Root(a)),
                &LinComb::basis(BasisElement::Root(g.negate_index(a))),
            );
            for b in 0..g.signed_count() {
                let eb = LinComb::basis(BasisElement::Root(b));
                let res = g.bracket(&h, &eb);
                let pairing = res.coefficient(BasisElement::Root(b));
                assert!(pairing.is_integer());
                // ⟨β, α^∨⟩ = 2(β,α)/(α,α)
                let alpha = g.signed_root(a);
                let beta = g.signed_root(b);
                let want = Rat::from_integer(2) * g.root_system().inner(&beta, &alpha)
                    / g.norm_sq_signed(a);
                assert_eq!(pairing, want);
            }
        }
    }

    #[test]
    fn bracket_theta_with_g_a2() {
        // [g_θ, g] in A2: all positive root spaces plus the line ℚh_θ.
        let g = alg("A2");
        let th = g.root_system().highest_root_index();
        let u = HStableSubspace::from_parts(2, 3, [th], []);
        let v = g.bracket_spaces(&u, &g.full_subspace());
        assert_eq!(v.pos, BTreeSet::from([0, 1, 2]));
        assert!(v.neg.is_empty());
        assert_eq!(v.cartan().rank(), 1);
        assert!(v
            .cartan()
            .contains_row(&[Rat::from_integer(1), Rat::from_integer(1)]));
    }

    #[test]
    fn bracket_nplus_with_g_a2() {
        // [n⁺, g] in A2 is everything except g_{-θ}, with full Cartan.
        let g = alg("A2");
        let u = HStableSubspace::from_parts(2, 3, [0, 1, 2], []);
        let v = g.bracket_spaces(&u, &g.full_subspace());
        assert_eq!(v.pos, BTreeSet::from([0, 1, 2]));
        let th = g.root_system().highest_root_index();
        let neg: BTreeSet<usize> = (0..3).filter(|&i| i != th).collect();
        assert_eq!(v.neg, neg);
        assert!(v.cartan().is_full());
    }

    #[test]
    fn bracket_spaces_full_is_full() {
        for name in ["A2", "B3", "G2"] {
            let g = alg(name);
            let full = g.full_subspace();
            assert_eq!(g.bracket_spaces(&full, &full), full, "{name}");
        }
    }

    #[test]
    fn bracket_spaces_matches_element_brackets() {
        // Spanwise subspace bracket agrees with brute-force element brackets
        // on a nontrivial example: U = g_{α1} + g_{-θ} + ℚh_1 in B2.
        let g = alg("B2");
        let a1 = pos_idx(&g, &[1, 0]);
        let th = g.root_system().highest_root_index();
        let u = HStableSubspace::from_parts(
            2,
            4,
            [a1, th + 4],
            [vec![Rat::from_integer(1), Rat::zero()]],
        );
        let got = g.bracket_spaces(&u, &g.full_subspace());
        // Oracle: bracket every basis element of U with every basis element
        // of g and collect the component root spaces / Cartan vectors.
        let mut pos = BTreeSet::new();
        let mut neg = BTreeSet::new();
        let mut cartan = RatMatrix::zero(2);
        let u_elems = [
            LinComb::basis(BasisElement::Root(a1)),
            LinComb::basis(BasisElement::Root(th + 4)),
            LinComb::basis(BasisElement::Coroot(0)),
        ];
        for x in &u_elems {
            for y in all_basis(&g) {
                let b = g.bracket(x, &LinComb::basis(y));
                let mut h = vec![Rat::zero(); 2];
                for (be, _c) in b.terms() {
                    match be {
                        BasisElement::Root(r) => {
                            if r < 4 {
                                pos.insert(r);
                            } else {
                                neg.insert(r - 4);
                            }
                        }
                        BasisElement::Coroot(i) => h[i] = b.coefficient(be),
                    }
                }
                if h.iter().any(|c| !c.is_zero()) {
                    cartan.insert_row(h);
                }
            }
        }
        assert_eq!(got, HStableSubspace::new(pos, neg, cartan));
    }

    #[test]
    fn contains_element_checks_components() {
        let u = HStableSubspace::from_parts(2, 3, [0], [vec![Rat::from_integer(1), Rat::zero()]]);
        let ok = LinComb::from_terms([
            (BasisElement::Root(0), Rat::from_integer(5)),
            (BasisElement::Coroot(0), Rat::new(1, 2)),
        ]);
        assert!(u.contains_element(&ok, 3));
        let bad_root = LinComb::from_terms([
            (BasisElement::Root(0), Rat::from_integer(1)),
            (BasisElement::Root(1), Rat::from_integer(1)),
        ]);
        assert!(!u.contains_element(&bad_root, 3));
        let bad_h = LinComb::basis(BasisElement::Coroot(1));
        assert!(!u.contains_element(&bad_h, 3));
    }
}
