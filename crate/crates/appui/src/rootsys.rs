//! Finite root systems: generation from Cartan data and combinatorics on them.
//!
//! Roots are integer coordinate vectors over the simple roots `α_1..α_p`
//! (Bourbaki numbering).  Positive roots are generated bottom-up with the
//! root-string condition `q = p - ⟨α, γ^∨⟩ ≥ 1` and stored in a canonical
//! order: by height, then lexicographically by coordinates.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use crate::{Error, Rat, Result};

/// The seven series of finite simple root systems.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Series {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Series::A => 'A',
            Series::B => 'B',
            Series::C => 'C',
            Series::D => 'D',
            Series::E => 'E',
            Series::F => 'F',
            Series::G => 'G',
        };
        write!(f, "{c}")
    }
}

/// A validated series/rank pair such as `B4`.
///
/// Rank constraints avoid the redundant low-rank coincidences: `A ≥ 1`,
/// `B ≥ 2`, `C ≥ 3`, `D ≥ 4`, `E ∈ {6,7,8}`, `F = 4`, `G = 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LieType {
    series: Series,
    rank: usize,
}

impl LieType {
    pub fn new(series: Series, rank: usize) -> Result<Self> {
        let ok = match series {
            Series::A => rank >= 1,
            Series::B => rank >= 2,
            Series::C => rank >= 3,
            Series::D => rank >= 4,
            Series::E => (6..=8).contains(&rank),
            Series::F => rank == 4,
            Series::G => rank == 2,
        };
        if ok {
            Ok(LieType { series, rank })
        } else {
            Err(Error::InvalidRank { series, rank })
        }
    }

    pub fn series(&self) -> Series {
        self.series
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Number of positive roots, from the classical count for each series.
    pub fn num_positive_roots(&self) -> usize {
        let n = self.rank;
        match self.series {
            Series::A => n * (n + 1) / 2,
            Series::B | Series::C => n * n,
            Series::D => n * (n - 1),
            Series::E => match n {
                6 => 36,
                7 => 63,
                _ => 120,
            },
            Series::F => 24,
            Series::G => 6,
        }
    }

    /// Cartan matrix in Bourbaki numbering; entry `[i][j]` is
    /// `⟨α_j, α_i^∨⟩ = 2(α_i,α_j)/(α_i,α_i)`.
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.rank;
        let mut a = vec![vec![0i64; n]; n];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        let mut edge = |i: usize, j: usize, vij: i64, vji: i64| {
            a[i][j] = vij;
            a[j][i] = vji;
        };
        match self.series {
            Series::A => {
                for i in 0..n - 1 {
                    edge(i, i + 1, -1, -1);
                }
            }
            Series::B => {
                for i in 0..n - 2 {
                    edge(i, i + 1, -1, -1);
                }
                // α_n is short: ⟨α_{n-1}, α_n^∨⟩ = -2.
                edge(n - 2, n - 1, -1, -2);
            }
            Series::C => {
                for i in 0..n - 2 {
                    edge(i, i + 1, -1, -1);
                }
                // α_n is long: ⟨α_n, α_{n-1}^∨⟩ = -2.
                edge(n - 2, n - 1, -2, -1);
            }
            Series::D => {
                for i in 0..n - 2 {
                    edge(i, i + 1, -1, -1);
                }
                edge(n - 3, n - 1, -1, -1);
            }
            Series::E => {
                // Chain 1-3-4-5-6(-7(-8)) with node 2 attached to node 4.
                let chain: &[usize] = match n {
                    6 => &[0, 2, 3, 4, 5],
                    7 => &[0, 2, 3, 4, 5, 6],
                    _ => &[0, 2, 3, 4, 5, 6, 7],
                };
                for w in chain.windows(2) {
                    edge(w[0], w[1], -1, -1);
                }
                edge(1, 3, -1, -1);
            }
            Series::F => {
                edge(0, 1, -1, -1);
                // α_1, α_2 long; α_3, α_4 short.
                edge(1, 2, -1, -2);
                edge(2, 3, -1, -1);
            }
            Series::G => {
                // α_1 short, α_2 long.
                edge(0, 1, -3, -1);
            }
        }
        a
    }

    /// Symmetrizer `d_i = (α_i, α_i)/2`, normalized so long roots have
    /// squared length 2 (equivalently `(θ,θ) = 2`).
    pub fn symmetrizer(&self) -> Vec<Rat> {
        let n = self.rank;
        let one = Rat::from_integer(1);
        let half = Rat::new(1, 2);
        match self.series {
            Series::A | Series::D | Series::E => vec![one; n],
            Series::B => {
                let mut d = vec![one; n];
                d[n - 1] = half;
                d
            }
            Series::C => {
                let mut d = vec![half; n];
                d[n - 1] = one;
                d
            }
            Series::F => vec![one, one, half, half],
            Series::G => vec![Rat::new(1, 3), one],
        }
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.series, self.rank)
    }
}

impl FromStr for LieType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut chars = s.chars();
        let series = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Series::A,
            Some('B') => Series::B,
            Some('C') => Series::C,
            Some('D') => Series::D,
            Some('E') => Series::E,
            Some('F') => Series::F,
            Some('G') => Series::G,
            _ => return Err(Error::UnknownType(s.to_string())),
        };
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::UnknownType(s.to_string()))?;
        LieType::new(series, rank)
    }
}

/// A root, positive or negative, as its integer coordinate vector over the
/// simple roots.  All coordinates share one sign; the zero vector is not a
/// root.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root {
    coords: Vec<i64>,
}

impl Root {
    pub(crate) fn new_unchecked(coords: Vec<i64>) -> Self {
        Root { coords }
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    /// Sum of coordinates; negative for negative roots.
    pub fn height(&self) -> i64 {
        self.coords.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.height() > 0
    }

    pub fn negated(&self) -> Root {
        Root {
            coords: self.coords.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Display for Root {
    /// Renders as a combination of simple roots, e.g. `a2+2a3+2a4` or `-a1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.coords.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if c > 0 && !first {
                write!(f, "+")?;
            }
            match c {
                1 => {}
                -1 => write!(f, "-")?,
                _ => write!(f, "{c}")?,
            }
            write!(f, "a{}", i + 1)?;
            first = false;
        }
        Ok(())
    }
}

/// Positive span of a subset `B` of simple roots: `⟨B⟩⁺`, `⟨B⟩⁻`, `⟨B⟩`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Span {
    /// Indices (into the positive-root list) of `⟨B⟩⁺`.
    pub pos: BTreeSet<usize>,
}

impl Span {
    pub fn positive_roots<'a>(&'a self, rs: &'a RootSystem) -> impl Iterator<Item = &'a Root> {
        self.pos.iter().map(|&i| rs.positive(i))
    }

    pub fn negative_roots<'a>(&'a self, rs: &'a RootSystem) -> impl Iterator<Item = Root> + 'a {
        self.pos.iter().map(|&i| rs.positive(i).negated())
    }

    pub fn all_roots<'a>(&'a self, rs: &'a RootSystem) -> impl Iterator<Item = Root> + 'a {
        self.positive_roots(rs)
            .cloned()
            .chain(self.negative_roots(rs))
    }
}

/// A generated root system with its canonical positive-root order and the
/// combinatorial queries used by the subalgebra constructions.
#[derive(Debug, Clone)]
pub struct RootSystem {
    lie_type: LieType,
    cartan: Vec<Vec<i64>>,
    symmetrizer: Vec<Rat>,
    /// Inner products of simple roots, `(α_i, α_j) = d_i · cartan[i][j]`.
    inner_simple: Vec<Vec<Rat>>,
    positive: Vec<Root>,
    index: HashMap<Vec<i64>, usize>,
    /// Position of each simple root in the canonical positive order.
    simple_index: Vec<usize>,
    theta: usize,
    /// `comparable[i]` has bit `j` set iff roots `i` and `j` are comparable
    /// in the partial order (including `i` itself).
    comparable: Vec<u128>,
}

impl RootSystem {
    pub fn new(lie_type: LieType) -> Self {
        let rank = lie_type.rank();
        let cartan = lie_type.cartan_matrix();
        let symmetrizer = lie_type.symmetrizer();
        let inner_simple: Vec<Vec<Rat>> = (0..rank)
            .map(|i| {
                (0..rank)
                    .map(|j| symmetrizer[i] * Rat::from_integer(cartan[i][j]))
                    .collect()
            })
            .collect();

        let mut positive = generate_positive_roots(&cartan, rank);
        assert_eq!(
            positive.len(),
            lie_type.num_positive_roots(),
            "generated root count must match the classical count for {lie_type}"
        );
        positive.sort_by(|a, b| {
            (a.height(), a.coords())
                .partial_cmp(&(b.height(), b.coords()))
                .unwrap()
        });
        assert!(positive.len() <= 128, "positive-root bitmasks use u128");

        let index: HashMap<Vec<i64>, usize> = positive
            .iter()
            .enumerate()
            .map(|(i, r)| (r.coords.clone(), i))
            .collect();
        let simple_index: Vec<usize> = (0..rank)
            .map(|j| {
                let mut coords = vec![0i64; rank];
                coords[j] = 1;
                index[&coords]
            })
            .collect();

        // θ is the unique root of maximal height and dominates every root.
        let theta = positive.len() - 1;

        let mut comparable = vec![0u128; positive.len()];
        for i in 0..positive.len() {
            for j in 0..positive.len() {
                let le = |a: &Root, b: &Root| {
                    a.coords().iter().zip(b.coords()).all(|(x, y)| x <= y)
                };
                if le(&positive[i], &positive[j]) || le(&positive[j], &positive[i]) {
                    comparable[i] |= 1 << j;
                }
            }
        }

        let rs = RootSystem {
            lie_type,
            cartan,
            symmetrizer,
            inner_simple,
            positive,
            index,
            simple_index,
            theta,
            comparable,
        };
        debug_assert!(rs
            .positive
            .iter()
            .all(|r| rs.leq(r, rs.positive(rs.theta))));
        rs
    }

    pub fn lie_type(&self) -> LieType {
        self.lie_type
    }

    pub fn rank(&self) -> usize {
        self.lie_type.rank()
    }

    pub fn num_positive(&self) -> usize {
        self.positive.len()
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn symmetrizer(&self) -> &[Rat] {
        &self.symmetrizer
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive
    }

    pub fn positive(&self, i: usize) -> &Root {
        &self.positive[i]
    }

    /// Index of the simple root `α_{k+1}` in the canonical positive order.
    pub fn simple(&self, k: usize) -> usize {
        self.simple_index[k]
    }

    pub fn simple_root(&self, k: usize) -> &Root {
        &self.positive[self.simple_index[k]]
    }

    pub fn highest_root(&self) -> &Root {
        &self.positive[self.theta]
    }

    pub fn highest_root_index(&self) -> usize {
        self.theta
    }

    /// Index of a positive root given by coordinates.
    pub fn index_of(&self, coords: &[i64]) -> Option<usize> {
        self.index.get(coords).copied()
    }

    /// Looks up arbitrary-sign coordinates: `(positive index, is_negative)`.
    pub fn signed_index_of(&self, coords: &[i64]) -> Option<(usize, bool)> {
        if let Some(&i) = self.index.get(coords) {
            return Some((i, false));
        }
        let neg: Vec<i64> = coords.iter().map(|c| -c).collect();
        self.index.get(&neg).map(|&i| (i, true))
    }

    pub fn is_root(&self, coords: &[i64]) -> bool {
        self.signed_index_of(coords).is_some()
    }

    pub fn root_from_coords(&self, coords: &[i64]) -> Result<Root> {
        if self.is_root(coords) {
            Ok(Root::new_unchecked(coords.to_vec()))
        } else {
            Err(Error::NotARoot(coords.to_vec()))
        }
    }

    /// Partial order: `a ≤ b` iff `b - a` has only non-negative coordinates.
    pub fn leq(&self, a: &Root, b: &Root) -> bool {
        a.coords().iter().zip(b.coords()).all(|(x, y)| x <= y)
    }

    /// Support `C_α`: indices of simple roots with nonzero coefficient.
    pub fn support(&self, a: &Root) -> BTreeSet<usize> {
        a.coords()
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, _)| i)
            .collect()
    }

    /// Extremal set `S^β = {γ ∈ Π : β = γ or β - γ ∈ Δ}`, as simple indices.
    pub fn extremal_set(&self, beta: usize) -> BTreeSet<usize> {
        let b = &self.positive[beta];
        (0..self.rank())
            .filter(|&j| {
                if self.simple_index[j] == beta {
                    return true;
                }
                let mut c = b.coords().to_vec();
                c[j] -= 1;
                self.is_root(&c)
            })
            .collect()
    }

    /// Roots supported inside a set `B` of simple roots: `⟨B⟩`.
    pub fn root_span(&self, b: &BTreeSet<usize>) -> Span {
        let pos = self
            .positive
            .iter()
            .enumerate()
            .filter(|(_, r)| self.support(r).is_subset(b))
            .map(|(i, _)| i)
            .collect();
        Span { pos }
    }

    /// Two simple roots are adjacent iff their Cartan entry is nonzero.
    pub fn simple_adjacent(&self, i: usize, j: usize) -> bool {
        i != j && self.cartan[i][j] != 0
    }

    /// Connected components of a set of simple roots in the Dynkin diagram,
    /// sorted by smallest member.
    pub fn connected_components(&self, b: &BTreeSet<usize>) -> Vec<BTreeSet<usize>> {
        let mut remaining: BTreeSet<usize> = b.clone();
        let mut comps = Vec::new();
        while let Some(&seed) = remaining.iter().next() {
            let mut comp = BTreeSet::new();
            let mut queue = vec![seed];
            remaining.remove(&seed);
            while let Some(v) = queue.pop() {
                comp.insert(v);
                let adj: Vec<usize> = remaining
                    .iter()
                    .copied()
                    .filter(|&w| self.simple_adjacent(v, w))
                    .collect();
                for w in adj {
                    remaining.remove(&w);
                    queue.push(w);
                }
            }
            comps.push(comp);
        }
        comps
    }

    /// Squared length `(α, α)` of any root.
    pub fn norm_sq(&self, r: &Root) -> Rat {
        let mut s = Rat::from_integer(0);
        for (i, &ki) in r.coords().iter().enumerate() {
            for (j, &kj) in r.coords().iter().enumerate() {
                s += Rat::from_integer(ki * kj) * self.inner_simple[i][j];
            }
        }
        s
    }

    /// Inner product `(a, b)` of two roots.
    pub fn inner(&self, a: &Root, b: &Root) -> Rat {
        let mut s = Rat::from_integer(0);
        for (i, &ki) in a.coords().iter().enumerate() {
            for (j, &kj) in b.coords().iter().enumerate() {
                s += Rat::from_integer(ki * kj) * self.inner_simple[i][j];
            }
        }
        s
    }

    /// Values `α(h_i) = ⟨α, α_i^∨⟩` of a root on the simple coroots.
    pub fn pairing_vector(&self, r: &Root) -> Vec<i64> {
        (0..self.rank())
            .map(|i| {
                r.coords()
                    .iter()
                    .enumerate()
                    .map(|(j, &k)| self.cartan[i][j] * k)
                    .sum()
            })
            .collect()
    }

    /// Coordinates of the coroot `h_α = Σ k_i (α_i,α_i)/(α,α) · h_i` over the
    /// simple coroots.  Integral for every root.
    pub fn coroot_coords(&self, r: &Root) -> Vec<i64> {
        let nsq = self.norm_sq(r);
        r.coords()
            .iter()
            .enumerate()
            .map(|(i, &k)| {
                let c = Rat::from_integer(k) * Rat::from_integer(2) * self.symmetrizer[i] / nsq;
                assert!(c.is_integer(), "coroot coordinates must be integers");
                c.to_integer()
            })
            .collect()
    }

    pub fn is_antichain(&self, r: &[usize]) -> bool {
        let mut mask: u128 = 0;
        for &i in r {
            if self.comparable[i] & mask != 0 {
                return false;
            }
            mask |= 1 << i;
        }
        true
    }

    /// Streams every antichain of the positive-root poset in a deterministic
    /// depth-first order (each yielded vector is strictly increasing).
    pub fn antichains(&self, include_empty: bool) -> Antichains<'_> {
        Antichains {
            rs: self,
            current: Vec::new(),
            mask: 0,
            next_try: 0,
            emit_empty: include_empty,
            done: false,
        }
    }
}

/// Iterator over antichains; see [`RootSystem::antichains`].
pub struct Antichains<'a> {
    rs: &'a RootSystem,
    current: Vec<usize>,
    mask: u128,
    next_try: usize,
    emit_empty: bool,
    done: bool,
}

impl<'a> Iterator for Antichains<'a> {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        if self.emit_empty {
            self.emit_empty = false;
            return Some(Vec::new());
        }
        let m = self.rs.num_positive();
        loop {
            while self.next_try < m {
                let j = self.next_try;
                self.next_try += 1;
                if self.rs.comparable[j] & self.mask == 0 {
                    self.current.push(j);
                    self.mask |= 1 << j;
                    return Some(self.current.clone());
                }
            }
            match self.current.pop() {
                Some(last) => {
                    self.mask &= !(1 << last);
                    self.next_try = last + 1;
                }
                None => {
                    self.done = true;
                    return None;
                }
            }
        }
    }
}

/// Generates all positive roots from the Cartan matrix by extending along
/// root strings: for a root `α` and simple `γ`, `α + γ` is a root iff
/// `p - ⟨α, γ^∨⟩ ≥ 1`, where `p` is how far the string continues below `α`.
fn generate_positive_roots(cartan: &[Vec<i64>], rank: usize) -> Vec<Root> {
    let mut all: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut current: Vec<Vec<i64>> = Vec::new();
    for j in 0..rank {
        let mut c = vec![0i64; rank];
        c[j] = 1;
        all.insert(c.clone());
        current.push(c);
    }
    while !current.is_empty() {
        let mut next: BTreeSet<Vec<i64>> = BTreeSet::new();
        for alpha in &current {
            for j in 0..rank {
                let mut p = 0i64;
                let mut below = alpha.clone();
                loop {
                    below[j] -= 1;
                    if all.contains(&below) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let s: i64 = (0..rank).map(|i| cartan[j][i] * alpha[i]).sum();
                if p - s >= 1 {
                    let mut up = alpha.clone();
                    up[j] += 1;
                    if !all.contains(&up) {
                        next.insert(up);
                    }
                }
            }
        }
        for c in &next {
            all.insert(c.clone());
        }
        current = next.into_iter().collect();
    }
    all.into_iter().map(Root::new_unchecked).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn rs(name: &str) -> RootSystem {
        RootSystem::new(name.parse().unwrap())
    }

    fn root(rs: &RootSystem, coords: &[i64]) -> Root {
        rs.root_from_coords(coords).unwrap()
    }

    #[test]
    fn rank_constraints() {
        assert!("A1".parse::<LieType>().is_ok());
        assert!("B2".parse::<LieType>().is_ok());
        assert!("C3".parse::<LieType>().is_ok());
        assert!("D4".parse::<LieType>().is_ok());
        assert!("E6".parse::<LieType>().is_ok());
        assert!("B1".parse::<LieType>().is_err());
        assert!("C2".parse::<LieType>().is_err());
        assert!("D3".parse::<LieType>().is_err());
        assert!("E5".parse::<LieType>().is_err());
        assert!("E9".parse::<LieType>().is_err());
        assert!("F3".parse::<LieType>().is_err());
        assert!("G3".parse::<LieType>().is_err());
        assert!("H2".parse::<LieType>().is_err());
    }

    #[test]
    fn a2_positive_roots() {
        let rs = rs("A2");
        let got: HashSet<Vec<i64>> = rs
            .positive_roots()
            .iter()
            .map(|r| r.coords().to_vec())
            .collect();
        let want: HashSet<Vec<i64>> =
            [vec![1, 0], vec![0, 1], vec![1, 1]].into_iter().collect();
        assert_eq!(got, want);
        assert_eq!(rs.highest_root().coords(), &[1, 1]);
    }

    #[test]
    fn b2_positive_roots() {
        let rs = rs("B2");
        let got: HashSet<Vec<i64>> = rs
            .positive_roots()
            .iter()
            .map(|r| r.coords().to_vec())
            .collect();
        let want: HashSet<Vec<i64>> = [vec![1, 0], vec![0, 1], vec![1, 1], vec![1, 2]]
            .into_iter()
            .collect();
        assert_eq!(got, want);
        assert_eq!(rs.highest_root().coords(), &[1, 2]);
    }

    /// Independent oracle: close the simple roots under all simple
    /// reflections; positive roots are the members with non-negative coords.
    fn reflection_closure(lt: LieType) -> HashSet<Vec<i64>> {
        let rank = lt.rank();
        let a = lt.cartan_matrix();
        let mut roots: HashSet<Vec<i64>> = HashSet::new();
        let mut frontier: Vec<Vec<i64>> = Vec::new();
        for j in 0..rank {
            let mut c = vec![0i64; rank];
            c[j] = 1;
            roots.insert(c.clone());
            frontier.push(c);
        }
        while let Some(beta) = frontier.pop() {
            for j in 0..rank {
                // s_j(β) = β - ⟨β, α_j^∨⟩ α_j
                let pairing: i64 = (0..rank).map(|i| a[j][i] * beta[i]).sum();
                let mut img = beta.clone();
                img[j] -= pairing;
                if roots.insert(img.clone()) {
                    frontier.push(img);
                }
            }
        }
        roots
            .into_iter()
            .filter(|c| c.iter().all(|&x| x >= 0))
            .collect()
    }

    #[test]
    fn generation_matches_reflection_closure() {
        for name in ["A1", "A2", "A3", "B2", "B3", "B4", "C3", "D4", "F4", "G2"] {
            let rs = rs(name);
            let got: HashSet<Vec<i64>> = rs
                .positive_roots()
                .iter()
                .map(|r| r.coords().to_vec())
                .collect();
            assert_eq!(got, reflection_closure(rs.lie_type()), "{name}");
        }
    }

    #[test]
    fn classical_counts_and_theta() {
        let cases = [
            ("A3", 6, vec![1, 1, 1]),
            ("B4", 16, vec![1, 2, 2, 2]),
            ("C3", 9, vec![2, 2, 1]),
            ("D4", 12, vec![1, 2, 1, 1]),
            ("E6", 36, vec![1, 2, 2, 3, 2, 1]),
            ("E7", 63, vec![2, 2, 3, 4, 3, 2, 1]),
            ("E8", 120, vec![2, 3, 4, 6, 5, 4, 3, 2]),
            ("F4", 24, vec![2, 3, 4, 2]),
            ("G2", 6, vec![3, 2]),
        ];
        for (name, count, theta) in cases {
            let rs = rs(name);
            assert_eq!(rs.num_positive(), count, "{name}");
            assert_eq!(rs.highest_root().coords(), &theta[..], "{name}");
            // θ is the unique maximal element.
            for r in rs.positive_roots() {
                assert!(rs.leq(r, rs.highest_root()), "{name}: {r}");
            }
            // Normalization: (θ, θ) = 2.
            assert_eq!(rs.norm_sq(rs.highest_root()), Rat::from_integer(2));
        }
    }

    #[test]
    fn f4_contains_high_roots() {
        let rs = rs("F4");
        assert!(rs.index_of(&[1, 2, 4, 2]).is_some());
        assert!(rs.index_of(&[1, 3, 4, 2]).is_some());
        assert!(!rs.is_root(&[1, 1, 4, 2]));
    }

    #[test]
    fn partial_order_examples() {
        let rs = rs("B4");
        let a = root(&rs, &[0, 1, 2, 2]);
        let b = root(&rs, &[1, 2, 2, 2]);
        assert!(rs.leq(&a, &b));
        assert!(!rs.leq(&b, &a));
        let rs2 = rs_a2();
        let a1 = root(&rs2, &[1, 0]);
        let a2 = root(&rs2, &[0, 1]);
        assert!(!rs2.leq(&a1, &a2) && !rs2.leq(&a2, &a1));
    }

    fn rs_a2() -> RootSystem {
        RootSystem::new("A2".parse().unwrap())
    }

    #[test]
    fn partial_order_axioms() {
        let rs = rs("B3");
        let roots = rs.positive_roots();
        for a in roots {
            assert!(rs.leq(a, a));
            for b in roots {
                if rs.leq(a, b) && rs.leq(b, a) {
                    assert_eq!(a, b);
                }
                for c in roots {
                    if rs.leq(a, b) && rs.leq(b, c) {
                        assert!(rs.leq(a, c));
                    }
                }
            }
        }
    }

    #[test]
    fn support_and_extremal_set() {
        let rs = rs("B4");
        let b = root(&rs, &[0, 1, 2, 2]);
        let idx = rs.index_of(&[0, 1, 2, 2]).unwrap();
        assert_eq!(rs.support(&b), BTreeSet::from([1, 2, 3]));
        // S^{α2+2α3+2α4} = {α3}
        assert_eq!(rs.extremal_set(idx), BTreeSet::from([2]));
        // For a simple root, S^γ = {γ}.
        assert_eq!(rs.extremal_set(rs.simple(0)), BTreeSet::from([0]));
    }

    #[test]
    fn extremal_set_within_support() {
        for name in ["A3", "B3", "C3", "D4", "G2", "F4"] {
            let rs = rs(name);
            for i in 0..rs.num_positive() {
                let s = rs.extremal_set(i);
                assert!(!s.is_empty(), "{name}: S^β empty for β = {}", rs.positive(i));
                assert!(
                    s.is_subset(&rs.support(rs.positive(i))),
                    "{name}: S^β ⊄ C_β"
                );
            }
        }
    }

    #[test]
    fn chain_decomposability() {
        // Every positive root of height > 1 can shed some simple root.
        for name in ["A3", "B4", "C3", "D4", "E6", "F4", "G2"] {
            let rs = rs(name);
            for r in rs.positive_roots() {
                if r.height() > 1 {
                    let ok = (0..rs.rank()).any(|j| {
                        let mut c = r.coords().to_vec();
                        c[j] -= 1;
                        rs.index_of(&c).is_some()
                    });
                    assert!(ok, "{name}: {r}");
                }
            }
        }
    }

    #[test]
    fn root_span_b4() {
        let rs = rs("B4");
        // ⟨{α1, α2, α4}⟩⁺ = {α1, α2, α1+α2, α4}
        let span = rs.root_span(&BTreeSet::from([0, 1, 3]));
        let got: HashSet<Vec<i64>> = span
            .positive_roots(&rs)
            .map(|r| r.coords().to_vec())
            .collect();
        let want: HashSet<Vec<i64>> = [
            vec![1, 0, 0, 0],
            vec![0, 1, 0, 0],
            vec![1, 1, 0, 0],
            vec![0, 0, 0, 1],
        ]
        .into_iter()
        .collect();
        assert_eq!(got, want);
    }

    #[test]
    fn connected_components_b4() {
        let rs = rs("B4");
        let comps = rs.connected_components(&BTreeSet::from([0, 1, 3]));
        assert_eq!(
            comps,
            vec![BTreeSet::from([0, 1]), BTreeSet::from([3])]
        );
    }

    #[test]
    fn coroot_coords_are_integral() {
        for name in ["A3", "B4", "C3", "D4", "F4", "G2", "E6"] {
            let rs = rs(name);
            for r in rs.positive_roots() {
                let _ = rs.coroot_coords(r); // asserts integrality internally
            }
        }
        let g2 = rs("G2");
        let short = root(&g2, &[2, 1]);
        assert_eq!(g2.coroot_coords(&short), vec![2, 3]);
    }

    /// Weyl-group Catalan numbers: the classical antichain counts
    /// (including the empty antichain) for the positive-root poset.
    #[test]
    fn antichain_counts_match_catalan() {
        let cases = [
            ("A1", 2u64),
            ("A2", 5),
            ("A3", 14),
            ("B2", 6),
            ("B3", 20),
            ("B4", 70),
            ("C3", 20),
            ("D4", 50),
            ("F4", 105),
            ("G2", 8),
        ];
        for (name, want) in cases {
            let rs = rs(name);
            let got = rs.antichains(true).count() as u64;
            assert_eq!(got, want, "{name}");
        }
    }

    /// Brute force over bitmasks (dynamic programming on subsets), compared
    /// against the streaming enumeration.
    #[test]
    fn antichains_match_bitmask_bruteforce() {
        for name in ["A2", "A3", "B2", "B3", "C3", "D4", "G2"] {
            let rs = rs(name);
            let m = rs.num_positive();
            let mut is_ac = vec![false; 1usize << m];
            is_ac[0] = true;
            let mut count = 0u64;
            let mut masks: HashSet<u128> = HashSet::new();
            for mask in 1usize..(1 << m) {
                let i = mask.trailing_zeros() as usize;
                let rest = mask & (mask - 1);
                is_ac[mask] = is_ac[rest]
                    && (rs.comparable[i] as usize & rest) == 0;
                if is_ac[mask] {
                    count += 1;
                    masks.insert(mask as u128);
                }
            }
            let enumerated: HashSet<u128> = rs
                .antichains(false)
                .map(|ac| ac.iter().fold(0u128, |m, &i| m | (1 << i)))
                .collect();
            assert_eq!(enumerated.len() as u64, count, "{name}");
            assert_eq!(enumerated, masks, "{name}");
        }
    }

    #[test]
    fn antichains_are_antichains_and_deterministic() {
        let rs = rs("D4");
        let run1: Vec<Vec<usize>> = rs.antichains(false).collect();
        let run2: Vec<Vec<usize>> = rs.antichains(false).collect();
        assert_eq!(run1, run2);
        for ac in &run1 {
            assert!(rs.is_antichain(ac));
            assert!(!ac.is_empty());
        }
        assert_eq!(run1.len(), 49);
    }
}
