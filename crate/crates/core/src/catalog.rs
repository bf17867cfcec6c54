//! A catalog of simplices whose 2-faces all have the same squared area.
//!
//! Every point here maps to the constant area vector (3/16, ..., 3/16) under
//! the area map, exactly, in its native scalar ring. Two families:
//!
//! * pairing points, one per (partial pairing omega of the vertices, sign
//!   sigma): edges inside omega get squared length 3*sigma, all other edges
//!   get sigma. These are rational.
//! * five-cycle points (n = 4 only), one per unoriented 5-cycle gamma on the
//!   vertices: edges on the cycle get squared length u and edges off it -u,
//!   where u = sqrt(-3/5) lives in the quadratic extension with d = -15.
//!   Every triangle of the complete graph on 5 vertices meets a 5-cycle in
//!   one or two edges, so its squared edge multiset is {u, -u, -u} or
//!   {u, u, -u}; either way the area form gives 16 S = -5 u^2 = 3.
//!
//! The number of partial pairings on n+1 vertices is
//! sum_k (n+1)! / (2^k k! (n+1-2k)!), so the catalog for n = 4 has
//! 2 * 26 + 12 = 64 points and for n >= 5 it has twice the pairing count.
//!
//! [`classify_equiareal_tetrahedron`] decides, for an equiareal tetrahedron
//! (n = 3), which of four exact polynomial conditions its edge vector
//! satisfies; restricting any catalog point to four of its vertices always
//! lands in exactly one class.

use std::collections::BTreeMap;

use crate::metrics::{area_map, cm_volume_squared, SquaredEdgeVector};
use crate::scalar::{ComplexScalar, NumError, QuadExtScalar, Rational, Ring};
use num::bigint::BigUint;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("catalog points are defined for n >= 4, got n = {0}")]
    UnsupportedDimension(usize),
    #[error("five-cycle points exist only for n = 4, got n = {0}")]
    CycleNeedsFourSimplex(usize),
    #[error("edge vector is for n = {got}, expected n = {expected}")]
    WrongDimension { expected: usize, got: usize },
    #[error("tetrahedron is not equiareal: its four squared face areas differ")]
    NotEquiareal,
    #[error("cannot parse {input:?} as {expected}")]
    ParseLabel {
        input: String,
        expected: &'static str,
    },
    #[error(transparent)]
    Num(#[from] NumError),
}

fn parse_err(input: &str, expected: &'static str) -> CatalogError {
    CatalogError::ParseLabel {
        input: input.to_string(),
        expected,
    }
}

/// The sign parameter of a pairing point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn rational(self) -> Rational {
        match self {
            Sign::Plus => Rational::one(),
            Sign::Minus => Rational::from_integer(-1),
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Sign::Plus => "+1",
            Sign::Minus => "-1",
        }
    }

    pub fn parse(text: &str) -> Result<Self, CatalogError> {
        match text {
            "+1" | "+" | "1" => Ok(Sign::Plus),
            "-1" | "-" => Ok(Sign::Minus),
            _ => Err(parse_err(text, "a sign (+1 or -1)")),
        }
    }

    pub const BOTH: [Sign; 2] = [Sign::Plus, Sign::Minus];
}

/// A set of pairwise disjoint vertex pairs on {0, ..., n} (possibly empty;
/// vertices may stay unmatched).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PartialPairing {
    n: usize,
    pairs: Vec<(usize, usize)>,
}

impl PartialPairing {
    pub fn new(n: usize, mut pairs: Vec<(usize, usize)>) -> Result<Self, CatalogError> {
        let mut seen = vec![false; n + 1];
        for p in pairs.iter_mut() {
            if p.0 > p.1 {
                *p = (p.1, p.0);
            }
            let (i, j) = *p;
            if i == j || j > n || seen[i] || seen[j] {
                return Err(parse_err(
                    &format!("{i}-{j}"),
                    "disjoint vertex pairs within range",
                ));
            }
            seen[i] = true;
            seen[j] = true;
        }
        pairs.sort_unstable();
        Ok(Self { n, pairs })
    }

    pub fn empty(n: usize) -> Self {
        Self {
            n,
            pairs: Vec::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn size(&self) -> usize {
        self.pairs.len()
    }

    pub fn contains(&self, i: usize, j: usize) -> bool {
        self.pairs.contains(&(i.min(j), i.max(j)))
    }

    /// "0-1,2-3" for {{0,1},{2,3}}; "empty" for the empty pairing.
    pub fn label(&self) -> String {
        if self.pairs.is_empty() {
            return "empty".to_string();
        }
        self.pairs
            .iter()
            .map(|(i, j)| format!("{i}-{j}"))
            .collect::<Vec<_>>()
            .join(",")
    }

    pub fn parse(n: usize, text: &str) -> Result<Self, CatalogError> {
        if text == "empty" {
            return Ok(Self::empty(n));
        }
        let mut pairs = Vec::new();
        for part in text.split(',') {
            let (a, b) = part
                .split_once('-')
                .ok_or_else(|| parse_err(text, "pairs like 0-1,2-3 or the word empty"))?;
            let i: usize = a
                .trim()
                .parse()
                .map_err(|_| parse_err(text, "pairs of vertex numbers"))?;
            let j: usize = b
                .trim()
                .parse()
                .map_err(|_| parse_err(text, "pairs of vertex numbers"))?;
            pairs.push((i, j));
        }
        Self::new(n, pairs)
    }
}

/// Every partial pairing on {0, ..., n}, ordered with the empty pairing first.
pub fn enumerate_partial_pairings(n: usize) -> Vec<PartialPairing> {
    let mut out = Vec::new();
    let unused: Vec<usize> = (0..=n).collect();
    let mut current = Vec::new();
    recurse_pairings(n, &unused, &mut current, &mut out);
    out.sort_by_key(|p| (p.size(), p.pairs.clone()));
    out
}

fn recurse_pairings(
    n: usize,
    unused: &[usize],
    current: &mut Vec<(usize, usize)>,
    out: &mut Vec<PartialPairing>,
) {
    let Some(&v) = unused.first() else {
        out.push(PartialPairing {
            n,
            pairs: {
                let mut p = current.clone();
                p.sort_unstable();
                p
            },
        });
        return;
    };
    // v stays unmatched
    recurse_pairings(n, &unused[1..], current, out);
    // or v pairs with some later unused vertex
    for (idx, &w) in unused.iter().enumerate().skip(1) {
        current.push((v, w));
        let rest: Vec<usize> = unused[1..idx]
            .iter()
            .chain(&unused[idx + 1..])
            .copied()
            .collect();
        recurse_pairings(n, &rest, current, out);
        current.pop();
    }
}

/// sum_k (n+1)! / (2^k k! (n+1-2k)!): the number of partial pairings on
/// n+1 vertices, counted without enumeration.
pub fn pairing_count_closed_form(n: usize) -> BigUint {
    let m = n + 1;
    let mut total = BigUint::from(0u32);
    for k in 0..=(m / 2) {
        // m! / (2^k k! (m-2k)!) = C(m, 2k) * (2k)! / (2^k k!)
        //                       = C(m, 2k) * (2k-1)!! ; compute directly in integers
        let mut term = BigUint::from(1u32);
        for i in (m - 2 * k + 1)..=m {
            term *= i;
        }
        for i in 1..=k {
            term /= 2u32 * i as u32;
        }
        total += term;
    }
    total
}

/// An unoriented cyclic order on the vertices {0, 1, 2, 3, 4}, stored as the
/// canonical walk: it starts at 0 and its second vertex is the smaller of the
/// two neighbors of 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiveCycle {
    walk: [usize; 5],
}

impl FiveCycle {
    pub fn new(walk: [usize; 5]) -> Result<Self, CatalogError> {
        let mut seen = [false; 5];
        for &v in &walk {
            if v > 4 || seen[v] {
                return Err(parse_err(
                    &format!("{walk:?}"),
                    "a permutation of the vertices 0..=4",
                ));
            }
            seen[v] = true;
        }
        // rotate so 0 comes first, then orient so the second vertex is the
        // smaller neighbor of 0
        let zero_at = walk.iter().position(|&v| v == 0).unwrap();
        let mut rotated = [0usize; 5];
        for i in 0..5 {
            rotated[i] = walk[(zero_at + i) % 5];
        }
        if rotated[1] > rotated[4] {
            rotated.swap(1, 4);
            rotated.swap(2, 3);
        }
        Ok(Self { walk: rotated })
    }

    pub fn walk(&self) -> &[usize; 5] {
        &self.walk
    }

    /// The five cycle edges, each normalized to (min, max).
    pub fn edges(&self) -> [(usize, usize); 5] {
        let mut out = [(0usize, 0usize); 5];
        for (i, slot) in out.iter_mut().enumerate() {
            let a = self.walk[i];
            let b = self.walk[(i + 1) % 5];
            *slot = (a.min(b), a.max(b));
        }
        out
    }

    pub fn contains_edge(&self, i: usize, j: usize) -> bool {
        let key = (i.min(j), i.max(j));
        self.edges().contains(&key)
    }

    /// "0-1-2-3-4" for the pentagon 0,1,2,3,4 back to 0.
    pub fn label(&self) -> String {
        self.walk
            .iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join("-")
    }

    pub fn parse(text: &str) -> Result<Self, CatalogError> {
        let parts: Vec<usize> = text
            .split('-')
            .map(|p| p.trim().parse())
            .collect::<Result<_, _>>()
            .map_err(|_| parse_err(text, "five vertices like 0-1-2-3-4"))?;
        let walk: [usize; 5] = parts
            .try_into()
            .map_err(|_| parse_err(text, "exactly five vertices"))?;
        Self::new(walk)
    }
}

/// All 12 unoriented 5-cycles on the vertices 0..=4.
pub fn five_cycles() -> Vec<FiveCycle> {
    let mut out = Vec::new();
    // canonical walks are 0,a,b,c,d with {a,b,c,d} = {1,2,3,4} and a < d
    let verts = [1, 2, 3, 4];
    for &a in &verts {
        for &b in &verts {
            for &c in &verts {
                for &d in &verts {
                    let mut sorted = [a, b, c, d];
                    sorted.sort_unstable();
                    if sorted == verts && a < d {
                        out.push(FiveCycle {
                            walk: [0, a, b, c, d],
                        });
                    }
                }
            }
        }
    }
    out
}

/// One point of the equiareal catalog.
#[derive(Debug, Clone, PartialEq)]
pub enum CatalogPoint {
    Pairing {
        pairing: PartialPairing,
        sign: Sign,
        edges: SquaredEdgeVector<Rational>,
    },
    Cycle {
        cycle: FiveCycle,
        edges: SquaredEdgeVector<QuadExtScalar>,
    },
}

/// The squared area every 2-face of every catalog point has.
pub fn target_area() -> Rational {
    Rational::ratio(3, 16)
}

impl CatalogPoint {
    pub fn from_pairing(pairing: PartialPairing, sign: Sign) -> Self {
        let n = pairing.n();
        let sigma = sign.rational();
        let three_sigma = &sigma * &Rational::from_integer(3);
        let mut edges = SquaredEdgeVector::constant(n, sigma);
        for &(i, j) in pairing.pairs() {
            edges.set(i, j, three_sigma.clone());
        }
        CatalogPoint::Pairing {
            pairing,
            sign,
            edges,
        }
    }

    pub fn from_cycle(cycle: FiveCycle) -> Self {
        let u = QuadExtScalar::sqrt_rational(&Rational::ratio(-3, 5))
            .expect("-3/5 has a square root in a quadratic extension");
        let minus_u = u.neg();
        let mut edges = SquaredEdgeVector::constant(4, minus_u);
        for (i, j) in cycle.edges() {
            edges.set(i, j, u.clone());
        }
        CatalogPoint::Cycle { cycle, edges }
    }

    pub fn n(&self) -> usize {
        match self {
            CatalogPoint::Pairing { edges, .. } => edges.n(),
            CatalogPoint::Cycle { edges, .. } => edges.n(),
        }
    }

    /// "pairing:0-1,2-3:-1" or "cycle:0-1-2-3-4".
    pub fn label(&self) -> String {
        match self {
            CatalogPoint::Pairing { pairing, sign, .. } => {
                format!("pairing:{}:{}", pairing.label(), sign.label())
            }
            CatalogPoint::Cycle { cycle, .. } => format!("cycle:{}", cycle.label()),
        }
    }

    pub fn parse(n: usize, spec: &str) -> Result<Self, CatalogError> {
        if let Some(rest) = spec.strip_prefix("pairing:") {
            let (pairing_text, sign_text) = rest
                .rsplit_once(':')
                .ok_or_else(|| parse_err(spec, "pairing:<pairs>:<sign>"))?;
            let pairing = PartialPairing::parse(n, pairing_text)?;
            let sign = Sign::parse(sign_text)?;
            Ok(CatalogPoint::from_pairing(pairing, sign))
        } else if let Some(rest) = spec.strip_prefix("cycle:") {
            if n != 4 {
                return Err(CatalogError::CycleNeedsFourSimplex(n));
            }
            Ok(CatalogPoint::from_cycle(FiveCycle::parse(rest)?))
        } else {
            Err(parse_err(spec, "pairing:<pairs>:<sign> or cycle:<walk>"))
        }
    }

    /// Edge vector with every entry embedded into the quadratic extension.
    pub fn quadext_edges(&self) -> SquaredEdgeVector<QuadExtScalar> {
        match self {
            CatalogPoint::Pairing { edges, .. } => {
                edges.map(|x| QuadExtScalar::from_rational_parts(x.clone()))
            }
            CatalogPoint::Cycle { edges, .. } => edges.clone(),
        }
    }

    /// Edge vector embedded into floating-point complex numbers.
    pub fn complex_edges(&self) -> SquaredEdgeVector<ComplexScalar> {
        self.quadext_edges().map(|x| {
            let (re, im) = x.to_complex_parts();
            ComplexScalar::new(re, im).expect("rational embeddings are finite")
        })
    }

    /// Exact check that every squared 2-face area equals the catalog target.
    pub fn is_equiareal(&self) -> bool {
        let target = target_area();
        match self {
            CatalogPoint::Pairing { edges, .. } => {
                area_map(edges).entries().iter().all(|a| a == &target)
            }
            CatalogPoint::Cycle { edges, .. } => {
                let target = QuadExtScalar::from_rational_parts(target);
                area_map(edges).entries().iter().all(|a| a == &target)
            }
        }
    }

    /// Squared volume, as an element of the quadratic extension (pairing
    /// points embed their rational value).
    pub fn volume_squared(&self) -> Result<QuadExtScalar, NumError> {
        match self {
            CatalogPoint::Pairing { edges, .. } => Ok(QuadExtScalar::from_rational_parts(
                cm_volume_squared(edges)?.value,
            )),
            CatalogPoint::Cycle { edges, .. } => Ok(cm_volume_squared(edges)?.value),
        }
    }
}

/// The full catalog for a given dimension (n >= 4): both signs of every
/// partial pairing, plus the twelve five-cycle points when n = 4.
pub fn build_catalog(n: usize) -> Result<Vec<CatalogPoint>, CatalogError> {
    if n < 4 {
        return Err(CatalogError::UnsupportedDimension(n));
    }
    let mut out = Vec::new();
    for pairing in enumerate_partial_pairings(n) {
        for sign in Sign::BOTH {
            out.push(CatalogPoint::from_pairing(pairing.clone(), sign));
        }
    }
    if n == 4 {
        for cycle in five_cycles() {
            out.push(CatalogPoint::from_cycle(cycle));
        }
    }
    Ok(out)
}

/// A set of catalog points sharing one squared volume.
#[derive(Debug, Clone, PartialEq)]
pub struct VolumeClass {
    pub description: String,
    pub point_count: usize,
    pub volume: Rational,
}

/// Group the n = 4 catalog by squared volume: pairing points by pairing size,
/// five-cycle points together. Verifies that the volume is constant within
/// each group (and rational, for the cycle points).
pub fn four_simplex_volume_classes() -> Result<Vec<VolumeClass>, CatalogError> {
    let catalog = build_catalog(4)?;
    let mut groups: BTreeMap<usize, (String, Vec<Rational>)> = BTreeMap::new();
    for point in &catalog {
        let w = point.volume_squared()?;
        let w = w.to_rational().ok_or(NumError::InexactDivision);
        let w = match w {
            Ok(v) => v,
            Err(_) => {
                // every value in this table is rational; an irrational volume
                // would mean the catalog construction itself is wrong
                unreachable!("catalog volumes at n = 4 are rational")
            }
        };
        let (key, description) = match point {
            CatalogPoint::Pairing { pairing, .. } => (
                pairing.size(),
                format!("pairing of size {}", pairing.size()),
            ),
            CatalogPoint::Cycle { .. } => (usize::MAX, "five-cycle".to_string()),
        };
        let entry = groups
            .entry(key)
            .or_insert_with(|| (description, Vec::new()));
        entry.1.push(w);
    }
    let mut out = Vec::new();
    for (_, (description, volumes)) in groups {
        let first = volumes[0].clone();
        if volumes.iter().any(|v| v != &first) {
            return Err(CatalogError::NotEquiareal);
        }
        out.push(VolumeClass {
            description,
            point_count: volumes.len(),
            volume: first,
        });
    }
    Ok(out)
}

/// Exact conditions an equiareal tetrahedron's squared edge vector can
/// satisfy. With vertices 0..=3 and s_ij the squared edge lengths:
///
/// * [`EquiarealClass::OppositeEdges`] — the three pairs of opposite edges
///   agree: s_01 = s_23, s_02 = s_13, s_03 = s_12.
/// * [`EquiarealClass::Rotation`] — for one of the cyclic rotations
///   (i, j, k) of (1, 2, 3): s_ij = s_0k, s_ik = s_0j, and
///   s_jk + s_0i - 2 s_0j - 2 s_0k = 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EquiarealClass {
    OppositeEdges,
    Rotation { i: usize, j: usize, k: usize },
}

impl EquiarealClass {
    pub fn label(&self) -> String {
        match self {
            EquiarealClass::OppositeEdges => "opposite-edges".to_string(),
            EquiarealClass::Rotation { i, j, k } => format!("rotation-{i}{j}{k}"),
        }
    }
}

const ROTATIONS: [(usize, usize, usize); 3] = [(1, 2, 3), (2, 3, 1), (3, 1, 2)];

/// Which exact classes an equiareal tetrahedron belongs to.
///
/// The input must be an n = 3 edge vector whose four squared face areas are
/// all equal (checked exactly; [`CatalogError::NotEquiareal`] otherwise).
pub fn classify_equiareal_tetrahedron<R: Ring>(
    s: &SquaredEdgeVector<R>,
) -> Result<Vec<EquiarealClass>, CatalogError> {
    if s.n() != 3 {
        return Err(CatalogError::WrongDimension {
            expected: 3,
            got: s.n(),
        });
    }
    let areas = area_map(s);
    let first = &areas.entries()[0];
    if areas.entries().iter().any(|a| a != first) {
        return Err(CatalogError::NotEquiareal);
    }

    let mut classes = Vec::new();
    if s.get(0, 1) == s.get(2, 3) && s.get(0, 2) == s.get(1, 3) && s.get(0, 3) == s.get(1, 2) {
        classes.push(EquiarealClass::OppositeEdges);
    }
    let two = R::from_rational(&Rational::from_integer(2));
    for (i, j, k) in ROTATIONS {
        let swaps = s.get(i, j) == s.get(0, k) && s.get(i, k) == s.get(0, j);
        let linear = s
            .get(j, k)
            .add(s.get(0, i))
            .sub(&s.get(0, j).mul(&two))
            .sub(&s.get(0, k).mul(&two));
        if swaps && linear.is_zero() {
            classes.push(EquiarealClass::Rotation { i, j, k });
        }
    }
    Ok(classes)
}

/// Outcome of classifying every four-vertex restriction of every n = 4
/// catalog point.
#[derive(Debug, Clone, PartialEq)]
pub struct ClassificationSweep {
    pub restrictions: usize,
    pub unclassified: usize,
    pub multi_class: usize,
    pub class_counts: BTreeMap<String, usize>,
}

/// Restrict each n = 4 catalog point to each of its five tetrahedral faces
/// and classify the result. Every restriction lands in exactly one class.
pub fn classify_four_simplex_restrictions() -> Result<ClassificationSweep, CatalogError> {
    let catalog = build_catalog(4)?;
    let mut sweep = ClassificationSweep {
        restrictions: 0,
        unclassified: 0,
        multi_class: 0,
        class_counts: BTreeMap::new(),
    };
    for point in &catalog {
        for dropped in 0..=4usize {
            let subset: Vec<usize> = (0..=4).filter(|&v| v != dropped).collect();
            let classes = match point {
                CatalogPoint::Pairing { edges, .. } => {
                    classify_equiareal_tetrahedron(&edges.restrict(&subset))?
                }
                CatalogPoint::Cycle { edges, .. } => {
                    classify_equiareal_tetrahedron(&edges.restrict(&subset))?
                }
            };
            sweep.restrictions += 1;
            match classes.len() {
                0 => sweep.unclassified += 1,
                1 => {}
                _ => sweep.multi_class += 1,
            }
            for class in classes {
                *sweep.class_counts.entry(class.label()).or_insert(0) += 1;
            }
        }
    }
    Ok(sweep)
}
