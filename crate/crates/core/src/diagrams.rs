//! Finite and affine Dynkin diagrams, twisted local indices, automorphisms
//! and Galois orbits.
//!
//! A diagram is stored through its generalized Cartan matrix
//! `a[i][j] = <α_i^∨, α_j>`. Edges, marks and residual types are all derived
//! from it.

use itertools::Itertools;
use num_rational::Ratio;
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::DiagramError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Series {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Series {
    pub fn letter(self) -> char {
        match self {
            Series::A => 'A',
            Series::B => 'B',
            Series::C => 'C',
            Series::D => 'D',
            Series::E => 'E',
            Series::F => 'F',
            Series::G => 'G',
        }
    }
}

/// A finite irreducible Dynkin type.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct DynkinType {
    series: Series,
    rank: u32,
}

impl DynkinType {
    pub fn new(series: Series, rank: u32) -> Result<Self, DiagramError> {
        let ok = match series {
            Series::A => rank >= 1,
            Series::B | Series::C => rank >= 2,
            Series::D => rank >= 3,
            Series::E => (6..=8).contains(&rank),
            Series::F => rank == 4,
            Series::G => rank == 2,
        };
        if ok {
            Ok(DynkinType { series, rank })
        } else {
            Err(DiagramError::BadType {
                series: series.letter(),
                rank,
            })
        }
    }

    pub fn series(self) -> Series {
        self.series
    }

    pub fn rank(self) -> u32 {
        self.rank
    }

    /// Type of the dual root system.
    pub fn dual(self) -> DynkinType {
        let series = match self.series {
            Series::B if self.rank > 2 => Series::C,
            Series::C if self.rank > 2 => Series::B,
            s => s,
        };
        DynkinType { series, ..self }
    }

    /// Every valid type of rank at most `max_rank`.
    pub fn all_up_to(max_rank: u32) -> Vec<DynkinType> {
        use Series::*;
        [A, B, C, D, E, F, G]
            .into_iter()
            .flat_map(|s| (1..=max_rank).filter_map(move |r| DynkinType::new(s, r).ok()))
            .collect()
    }

    /// Highest root in Bourbaki coordinates.
    fn highest_root(self) -> Vec<i64> {
        let n = self.rank as usize;
        match (self.series, n) {
            (Series::A, _) => vec![1; n],
            (Series::B, _) => std::iter::once(1).chain(std::iter::repeat_n(2, n - 1)).collect(),
            (Series::C, _) => std::iter::repeat_n(2, n - 1).chain(std::iter::once(1)).collect(),
            (Series::D, 3) => vec![1, 1, 1],
            (Series::D, _) => {
                let mut v = vec![1];
                v.extend(std::iter::repeat_n(2, n - 3));
                v.extend([1, 1]);
                v
            }
            (Series::E, 6) => vec![1, 2, 2, 3, 2, 1],
            (Series::E, 7) => vec![2, 2, 3, 4, 3, 2, 1],
            (Series::E, 8) => vec![2, 3, 4, 6, 5, 4, 3, 2],
            (Series::F, _) => vec![2, 3, 4, 2],
            (Series::G, _) => vec![3, 2],
            _ => unreachable!("validated in DynkinType::new"),
        }
    }

    /// Finite Cartan matrix, Bourbaki numbering, indices from 0 for α_1.
    pub fn cartan(self) -> Vec<Vec<i64>> {
        let n = self.rank as usize;
        let mut a = vec![vec![0i64; n]; n];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        let simple = |a: &mut Vec<Vec<i64>>, i: usize, j: usize| {
            a[i][j] = -1;
            a[j][i] = -1;
        };
        // `long` is the longer of the two roots
        let multiple = |a: &mut Vec<Vec<i64>>, short: usize, long: usize, b: i64| {
            a[short][long] = -b;
            a[long][short] = -1;
        };
        match self.series {
            Series::A => (0..n - 1).for_each(|i| simple(&mut a, i, i + 1)),
            Series::B => {
                (0..n - 2).for_each(|i| simple(&mut a, i, i + 1));
                multiple(&mut a, n - 1, n - 2, 2);
            }
            Series::C => {
                (0..n - 2).for_each(|i| simple(&mut a, i, i + 1));
                multiple(&mut a, n - 2, n - 1, 2);
            }
            Series::D if n == 3 => {
                simple(&mut a, 0, 1);
                simple(&mut a, 0, 2);
            }
            Series::D => {
                (0..n - 2).for_each(|i| simple(&mut a, i, i + 1));
                simple(&mut a, n - 3, n - 1);
            }
            Series::E => {
                simple(&mut a, 0, 2);
                simple(&mut a, 1, 3);
                (2..n - 1).for_each(|i| simple(&mut a, i, i + 1));
            }
            Series::F => {
                simple(&mut a, 0, 1);
                multiple(&mut a, 2, 1, 2);
                simple(&mut a, 2, 3);
            }
            Series::G => multiple(&mut a, 0, 1, 3),
        }
        a
    }
}

impl fmt::Display for DynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.series.letter(), self.rank)
    }
}

impl FromStr for DynkinType {
    type Err = DiagramError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || DiagramError::Parse(s.to_string());
        let mut chars = s.trim().chars();
        let series = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Series::A,
            Some('B') => Series::B,
            Some('C') => Series::C,
            Some('D') => Series::D,
            Some('E') => Series::E,
            Some('F') => Series::F,
            Some('G') => Series::G,
            _ => return Err(bad()),
        };
        let rank: u32 = chars.as_str().parse().map_err(|_| bad())?;
        DynkinType::new(series, rank)
    }
}

impl TryFrom<String> for DynkinType {
    type Error = DiagramError;
    fn try_from(s: String) -> Result<Self, Self::Error> {
        s.parse()
    }
}

impl From<DynkinType> for String {
    fn from(t: DynkinType) -> String {
        t.to_string()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Edge {
    pub a: String,
    pub b: String,
    /// Product `a_ij a_ji`: 1, 2, 3, or 4 for the rank-one affine diagram.
    pub bond: u8,
    /// The node carrying the longer root, for multiple bonds.
    pub long: Option<String>,
}

/// A (possibly twisted) affine diagram with its marks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineDiagram {
    ty: DynkinType,
    twist: u32,
    nodes: Vec<String>,
    cartan: Vec<Vec<i64>>,
    comarks: Vec<u64>,
    e: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramJson {
    pub nodes: Vec<String>,
    pub edges: Vec<Edge>,
    pub marks: Vec<u64>,
    pub e: Vec<u64>,
    pub twist: u32,
}

fn label(i: usize) -> String {
    format!("a{i}")
}

fn merged_label(idx: &[usize]) -> String {
    if idx.iter().all(|&i| i < 10) {
        format!("a{}", idx.iter().join(""))
    } else {
        format!("a{}", idx.iter().join("_"))
    }
}

/// Primitive positive integer vector spanning the kernel of `m^T`.
fn transposed_kernel(m: &[Vec<i64>]) -> Option<Vec<u64>> {
    let n = m.len();
    // rows of m^T
    let mut rows: Vec<Vec<Ratio<i64>>> = (0..n)
        .map(|j| (0..n).map(|i| Ratio::from_integer(m[i][j])).collect())
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n {
        let Some(p) = (r..n).find(|&i| rows[i][c] != Ratio::from_integer(0)) else {
            continue;
        };
        rows.swap(r, p);
        let inv = Ratio::from_integer(1) / rows[r][c];
        for x in rows[r].iter_mut() {
            *x *= inv;
        }
        for i in 0..n {
            if i != r && rows[i][c] != Ratio::from_integer(0) {
                let f = rows[i][c];
                let pivot_row = rows[r].clone();
                for (x, y) in rows[i].iter_mut().zip(pivot_row) {
                    *x -= f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    if pivots.len() + 1 != n {
        return None;
    }
    let free = (0..n).find(|c| !pivots.contains(c))?;
    let mut v = vec![Ratio::from_integer(0); n];
    v[free] = Ratio::from_integer(1);
    for (row, &c) in pivots.iter().enumerate() {
        v[c] = -rows[row][free];
    }
    let lcm = v.iter().fold(1i64, |acc, x| num_integer::lcm(acc, *x.denom()));
    let ints: Vec<i64> = v.iter().map(|x| (x * lcm).to_integer()).collect();
    let g = ints.iter().fold(0i64, |acc, x| num_integer::gcd(acc, *x));
    let sign = if ints.iter().any(|&x| x < 0) { -1 } else { 1 };
    let out: Vec<i64> = ints.iter().map(|x| sign * x / g).collect();
    if out.iter().all(|&x| x > 0) {
        Some(out.into_iter().map(|x| x as u64).collect())
    } else {
        None
    }
}

impl AffineDiagram {
    fn from_cartan(
        ty: DynkinType,
        twist: u32,
        nodes: Vec<String>,
        cartan: Vec<Vec<i64>>,
        e: Vec<u64>,
    ) -> Self {
        let comarks = transposed_kernel(&cartan).expect("affine Cartan matrix has corank one");
        AffineDiagram {
            ty,
            twist,
            nodes,
            cartan,
            comarks,
            e,
        }
    }

    pub fn ty(&self) -> DynkinType {
        self.ty
    }

    pub fn twist(&self) -> u32 {
        self.twist
    }

    pub fn nodes(&self) -> &[String] {
        &self.nodes
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// `d(α̌)`, the coroot relation coefficients.
    pub fn comarks(&self) -> &[u64] {
        &self.comarks
    }

    pub fn twist_orders(&self) -> &[u64] {
        &self.e
    }

    /// `d(α) = d(α̌) e(α)`.
    pub fn marks(&self) -> Vec<u64> {
        self.comarks.iter().zip(&self.e).map(|(d, e)| d * e).collect()
    }

    pub fn mark(&self, node: usize) -> u64 {
        self.comarks[node] * self.e[node]
    }

    pub fn index_of(&self, node: &str) -> Result<usize, DiagramError> {
        let key = node.trim();
        let key = key.strip_prefix('α').map(|s| format!("a{s}"));
        let key = key.as_deref().unwrap_or(node.trim());
        self.nodes
            .iter()
            .position(|n| n == key)
            .ok_or_else(|| DiagramError::UnknownNode(node.to_string()))
    }

    pub fn indices_of<S: AsRef<str>>(&self, nodes: &[S]) -> Result<Vec<usize>, DiagramError> {
        nodes.iter().map(|n| self.index_of(n.as_ref())).collect()
    }

    pub fn edges(&self) -> Vec<Edge> {
        let n = self.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let (aij, aji) = (self.cartan[i][j], self.cartan[j][i]);
                if aij == 0 {
                    continue;
                }
                let long = match aij.abs().cmp(&aji.abs()) {
                    std::cmp::Ordering::Greater => Some(self.nodes[j].clone()),
                    std::cmp::Ordering::Less => Some(self.nodes[i].clone()),
                    std::cmp::Ordering::Equal => None,
                };
                out.push(Edge {
                    a: self.nodes[i].clone(),
                    b: self.nodes[j].clone(),
                    bond: (aij * aji) as u8,
                    long,
                });
            }
        }
        out
    }

    pub fn to_json(&self) -> DiagramJson {
        DiagramJson {
            nodes: self.nodes.clone(),
            edges: self.edges(),
            marks: self.marks(),
            e: self.e.clone(),
            twist: self.twist,
        }
    }

    fn preserves(&self, p: &[usize]) -> bool {
        let n = self.len();
        p.len() == n
            && (0..n).all(|i| self.comarks[p[i]] == self.comarks[i] && self.e[p[i]] == self.e[i])
            && (0..n).all(|i| (0..n).all(|j| self.cartan[p[i]][p[j]] == self.cartan[i][j]))
    }
}

/// The untwisted affine diagram of `ty`, Bourbaki numbering with `α_0` first.
pub fn affine_diagram(ty: DynkinType) -> AffineDiagram {
    let fin = ty.cartan();
    let n = fin.len();
    // squared lengths up to scale, propagated along the connected diagram
    let mut len = vec![Ratio::from_integer(0i64); n];
    len[0] = Ratio::from_integer(1);
    let mut stack = vec![0];
    while let Some(i) = stack.pop() {
        for j in 0..n {
            if fin[i][j] != 0 && i != j && len[j] == Ratio::from_integer(0) {
                len[j] = len[i] * Ratio::new(fin[i][j], fin[j][i]);
                stack.push(j);
            }
        }
    }
    let theta = ty.highest_root();
    let long = *len.iter().max().expect("nonempty");
    let mut a = vec![vec![0i64; n + 1]; n + 1];
    a[0][0] = 2;
    for i in 0..n {
        for j in 0..n {
            a[i + 1][j + 1] = fin[i][j];
        }
        // <α_i^∨, -θ> and <-θ^∨, α_i>
        let pair: i64 = (0..n).map(|k| theta[k] * fin[i][k]).sum();
        a[i + 1][0] = -pair;
        a[0][i + 1] = -(Ratio::from_integer(pair) * len[i] / long).to_integer();
    }
    let nodes = (0..=n).map(label).collect();
    AffineDiagram::from_cartan(ty, 1, nodes, a, vec![1; n + 1])
}

/// Twisted local index for the quasi-split forms split over a ramified
/// extension (or the untwisted diagram when `twist == 1`).
pub fn twisted_local_index(ty: DynkinType, twist: u32) -> Result<AffineDiagram, DiagramError> {
    let unsupported = || DiagramError::UnsupportedTwist {
        ty: ty.to_string(),
        twist,
    };
    if ty.series() == Series::A {
        return Err(unsupported());
    }
    match (ty.series(), ty.rank(), twist) {
        (_, _, 1) => Ok(affine_diagram(ty)),
        (Series::D, 4, 3) => {
            // a0 - a134 ≡> a2, with a134 short
            let nodes = vec![label(0), label(2), merged_label(&[1, 3, 4])];
            let a = vec![vec![2, 0, -1], vec![0, 2, -1], vec![-1, -3, 2]];
            Ok(AffineDiagram::from_cartan(ty, 3, nodes, a, vec![3, 1, 3]))
        }
        (Series::E, 6, 2) => {
            // a2 - a4 => a35 - a16 - a0
            let nodes = vec![
                label(0),
                label(2),
                label(4),
                merged_label(&[3, 5]),
                merged_label(&[1, 6]),
            ];
            let a = vec![
                vec![2, 0, 0, 0, -1],
                vec![0, 2, -1, 0, 0],
                vec![0, -1, 2, -1, 0],
                vec![0, 0, -2, 2, -1],
                vec![-1, 0, 0, -1, 2],
            ];
            Ok(AffineDiagram::from_cartan(ty, 2, nodes, a, vec![2, 1, 1, 2, 2]))
        }
        (Series::D, n, 2) if n >= 4 => {
            // a0 <= a1 - ... - a_{n-2} => a_{n-1,n}
            let n = n as usize;
            let mut nodes: Vec<String> = (0..=n - 2).map(label).collect();
            nodes.push(merged_label(&[n - 1, n]));
            let mut a = vec![vec![0i64; n]; n];
            for (i, row) in a.iter_mut().enumerate() {
                row[i] = 2;
            }
            for i in 1..n - 2 {
                a[i][i + 1] = -1;
                a[i + 1][i] = -1;
            }
            a[0][1] = -2;
            a[1][0] = -1;
            a[n - 1][n - 2] = -2;
            a[n - 2][n - 1] = -1;
            let mut e = vec![1; n];
            e[0] = 2;
            e[n - 1] = 2;
            Ok(AffineDiagram::from_cartan(ty, 2, nodes, a, e))
        }
        _ => Err(unsupported()),
    }
}

/// A node permutation: `p[i]` is the image of node `i`.
pub type Perm = Vec<usize>;

pub fn compose(p: &[usize], q: &[usize]) -> Perm {
    // p after q
    q.iter().map(|&i| p[i]).collect()
}

pub fn inverse(p: &[usize]) -> Perm {
    let mut inv = vec![0; p.len()];
    for (i, &j) in p.iter().enumerate() {
        inv[j] = i;
    }
    inv
}

pub fn identity(n: usize) -> Perm {
    (0..n).collect()
}

pub fn order(p: &[usize]) -> u32 {
    let id = identity(p.len());
    let mut k = 1;
    let mut cur = p.to_vec();
    while cur != id {
        cur = compose(p, &cur);
        k += 1;
    }
    k
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AutomorphismGroup {
    pub elements: Vec<Perm>,
    pub omega: Vec<Perm>,
}

impl AutomorphismGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }
}

fn search(d: &AffineDiagram, p: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Perm>) {
    let k = p.len();
    let n = d.len();
    if k == n {
        out.push(p.clone());
        return;
    }
    for img in 0..n {
        if used[img] || d.comarks[img] != d.comarks[k] || d.e[img] != d.e[k] {
            continue;
        }
        let ok = (0..k).all(|j| {
            d.cartan[img][p[j]] == d.cartan[k][j] && d.cartan[p[j]][img] == d.cartan[j][k]
        }) && d.cartan[img][img] == d.cartan[k][k];
        if ok {
            used[img] = true;
            p.push(img);
            search(d, p, used, out);
            p.pop();
            used[img] = false;
        }
    }
}

fn omega_table(d: &AffineDiagram) -> Vec<Perm> {
    let n = d.len();
    let id = identity(n);
    if d.twist == 2 && d.ty.series() == Series::D {
        return vec![id, (0..n).rev().collect()];
    }
    if d.twist != 1 {
        return vec![id];
    }
    let r = d.ty.rank() as usize;
    let from_pairs = |pairs: &[(usize, usize)]| {
        let mut p = identity(n);
        for &(a, b) in pairs {
            p[a] = b;
            p[b] = a;
        }
        p
    };
    match d.ty.series() {
        Series::A => (0..n).map(|k| (0..n).map(|i| (i + k) % n).collect()).collect(),
        Series::B => vec![id, from_pairs(&[(0, 1)])],
        Series::C => vec![id, (0..n).rev().collect()],
        Series::D if r == 3 => {
            // the cycle is a0 - a2 - a1 - a3 - a0
            let g: Perm = vec![2, 3, 1, 0];
            let g2 = compose(&g, &g);
            let g3 = compose(&g, &g2);
            vec![id, g, g2, g3]
        }
        Series::D => {
            let s = from_pairs(&[(0, 1), (r - 1, r)]);
            let mut g = identity(n);
            for (i, gi) in g.iter_mut().enumerate().take(r - 1).skip(2) {
                *gi = r - i;
            }
            if r.is_multiple_of(2) {
                g[0] = r;
                g[r] = 0;
                g[1] = r - 1;
                g[r - 1] = 1;
                let gs = compose(&g, &s);
                vec![id, s, g, gs]
            } else {
                g[0] = r;
                g[r] = 1;
                g[1] = r - 1;
                g[r - 1] = 0;
                let g2 = compose(&g, &g);
                let g3 = compose(&g, &g2);
                vec![id, g, g2, g3]
            }
        }
        Series::E if r == 6 => {
            let t: Perm = vec![1, 6, 3, 5, 4, 2, 0];
            let t2 = compose(&t, &t);
            vec![id, t, t2]
        }
        Series::E if r == 7 => vec![id, from_pairs(&[(0, 7), (1, 6), (3, 5)])],
        _ => vec![id],
    }
}

/// Full automorphism group of the marked diagram, with the subgroup Ω.
pub fn automorphism_group(d: &AffineDiagram) -> AutomorphismGroup {
    let mut elements = Vec::new();
    search(d, &mut Vec::new(), &mut vec![false; d.len()], &mut elements);
    elements.sort();
    let omega = omega_table(d);
    debug_assert!(omega.iter().all(|w| d.preserves(w)));
    AutomorphismGroup { elements, omega }
}

/// How the generators of a diagram action are organised.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum ActionStructure {
    Trivial,
    Cyclic(u32),
    /// Generators `(r, s)` with `r^m = s^2 = 1` and `s r s = r^{-1}`.
    Dihedral(u32),
    /// Pairwise commuting generators of the given orders.
    Product(Vec<u32>),
}

/// Galois action on the nodes of a diagram through named generators
/// (for instance an inertia generator and a Frobenius).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramAction {
    pub structure: ActionStructure,
    pub generators: Vec<(String, Perm)>,
}

impl DiagramAction {
    pub fn trivial() -> Self {
        DiagramAction {
            structure: ActionStructure::Trivial,
            generators: Vec::new(),
        }
    }

    pub fn cyclic(name: &str, p: Perm) -> Self {
        let m = order(&p);
        DiagramAction {
            structure: ActionStructure::Cyclic(m),
            generators: vec![(name.to_string(), p)],
        }
    }

    pub fn validate(&self, d: &AffineDiagram) -> Result<(), DiagramError> {
        for (name, p) in &self.generators {
            let mut seen = vec![false; d.len()];
            if p.len() != d.len() || p.iter().any(|&i| i >= d.len() || std::mem::replace(&mut seen[i], true)) {
                return Err(DiagramError::BadPermutation(name.clone()));
            }
            if !d.preserves(p) {
                return Err(DiagramError::NotAutomorphism(name.clone()));
            }
        }
        let id = identity(d.len());
        let gens: Vec<&Perm> = self.generators.iter().map(|(_, p)| p).collect();
        let bad = |msg: &str| Err(DiagramError::BadStructure(msg.to_string()));
        match &self.structure {
            ActionStructure::Trivial => {
                if gens.iter().any(|p| **p != id) {
                    return bad("trivial action with a nontrivial generator");
                }
            }
            ActionStructure::Cyclic(m) => {
                if gens.len() != 1 || m % order(gens[0]) != 0 {
                    return bad("cyclic action needs one generator of order dividing m");
                }
            }
            ActionStructure::Dihedral(m) => {
                if gens.len() != 2 || m % order(gens[0]) != 0 || 2 % order(gens[1]) != 0 {
                    return bad("dihedral action needs (r, s)");
                }
                let srs = compose(gens[1], &compose(gens[0], gens[1]));
                if srs != inverse(gens[0]) {
                    return bad("s r s != r^-1");
                }
            }
            ActionStructure::Product(orders) => {
                if orders.len() != gens.len()
                    || gens.iter().zip(orders).any(|(p, m)| m % order(p) != 0)
                {
                    return bad("generator orders");
                }
                for (p, q) in gens.iter().tuple_combinations() {
                    if compose(p, q) != compose(q, p) {
                        return bad("generators do not commute");
                    }
                }
            }
        }
        Ok(())
    }
}

/// Orbits of the group generated by the action, as node index lists.
pub fn galois_orbits(d: &AffineDiagram, act: &DiagramAction) -> Result<Vec<Vec<usize>>, DiagramError> {
    act.validate(d)?;
    let n = d.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], i: usize) -> usize {
        let mut r = i;
        while parent[r] != r {
            r = parent[r];
        }
        parent[i] = r;
        r
    }
    for (_, p) in &act.generators {
        for (i, &pi) in p.iter().enumerate() {
            let (a, b) = (find(&mut parent, i), find(&mut parent, pi));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let orbits = (0..n)
        .into_group_map_by(|&i| find(&mut parent, i))
        .into_values()
        .sorted_by_key(|o| o[0])
        .collect();
    Ok(orbits)
}

pub fn orbit_labels(d: &AffineDiagram, orbit: &[usize]) -> Vec<String> {
    orbit.iter().map(|&i| d.nodes[i].clone()).collect()
}

/// Identify a connected finite diagram given its Cartan matrix.
fn classify(a: &[Vec<i64>]) -> DynkinType {
    let n = a.len();
    let t = |s, r| DynkinType::new(s, r as u32).expect("classified type is valid");
    if n == 1 {
        return t(Series::A, 1);
    }
    let nbrs: Vec<Vec<usize>> = (0..n)
        .map(|i| (0..n).filter(|&j| j != i && a[i][j] != 0).collect())
        .collect();
    let multi: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .filter(|&(i, j)| a[i][j] * a[j][i] > 1)
        .collect();
    if let Some(&(i, j)) = multi.first() {
        let bond = a[i][j] * a[j][i];
        if bond == 3 {
            return t(Series::G, 2);
        }
        if n == 2 {
            return t(Series::B, 2);
        }
        let leaf = |k: usize| nbrs[k].len() == 1;
        let (end, other) = if leaf(i) {
            (i, j)
        } else if leaf(j) {
            (j, i)
        } else {
            return t(Series::F, 4);
        };
        // a[short][long] = -2
        let end_is_short = a[end][other] == -2;
        return if end_is_short { t(Series::B, n) } else { t(Series::C, n) };
    }
    match nbrs.iter().position(|v| v.len() == 3) {
        None => t(Series::A, n),
        Some(c) => {
            let arm = |start: usize| {
                let (mut prev, mut cur, mut len) = (c, start, 1);
                while let Some(&next) = nbrs[cur].iter().find(|&&x| x != prev) {
                    prev = cur;
                    cur = next;
                    len += 1;
                }
                len
            };
            let arms: Vec<usize> = nbrs[c].iter().map(|&s| arm(s)).sorted().collect();
            match arms.as_slice() {
                [1, 1, _] => t(Series::D, n),
                [1, 2, 2] => t(Series::E, 6),
                [1, 2, 3] => t(Series::E, 7),
                [1, 2, 4] => t(Series::E, 8),
                _ => unreachable!("not a finite Dynkin diagram"),
            }
        }
    }
}

/// Connected components left after deleting `orbit`, ordered by their
/// smallest node, each paired with its node indices.
pub fn components(d: &AffineDiagram, orbit: &[usize]) -> Vec<(DynkinType, Vec<usize>)> {
    let removed: BTreeSet<usize> = orbit.iter().copied().collect();
    let rest: Vec<usize> = (0..d.len()).filter(|i| !removed.contains(i)).collect();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for &start in &rest {
        if !seen.insert(start) {
            continue;
        }
        let mut comp = vec![start];
        let mut k = 0;
        while k < comp.len() {
            let i = comp[k];
            for &j in &rest {
                if d.cartan[i][j] != 0 && i != j && seen.insert(j) {
                    comp.push(j);
                }
            }
            k += 1;
        }
        comp.sort();
        let sub: Vec<Vec<i64>> = comp
            .iter()
            .map(|&i| comp.iter().map(|&j| d.cartan[i][j]).collect())
            .collect();
        out.push((classify(&sub), comp));
    }
    out
}

pub fn remove_orbit(d: &AffineDiagram, orbit: &[usize]) -> Vec<DynkinType> {
    components(d, orbit).into_iter().map(|(t, _)| t).collect()
}
