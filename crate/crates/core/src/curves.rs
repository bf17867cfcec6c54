//! One-parameter edge-length curves with bounded areas and unbounded volume,
//! and the degree certificates that prove the volume escapes along them.
//!
//! Each curve family assigns every squared edge length a Laurent polynomial
//! in a parameter t. Along each family, every squared 2-face area stays
//! bounded as t grows (top degree <= 0) while the squared volume W grows
//! without bound — so no bounded function of the areas can control W. That
//! last statement is checked *symbolically*: a witness is a polynomial in
//! the areas, and a certificate verifies that (witness values along the
//! curve) * W(t) has top degree <= 0, i.e. witness * W stays bounded even
//! though W alone does not.
//!
//! Families:
//!
//! * [`CurveFamily::Odd`] (n = 2q - 1, q >= 3): vertices split into two
//!   blocks {0..q-1} and {q..2q-1}; same-block squared lengths are 0,
//!   cross-block ones are t, except the q - 1 pairs (r, q + r) for
//!   r = 1..q-1, which get t + 1. Every area is 0 or -1/16 (constant), and
//!   W = (-4)^(1-q) (n!)^(-2) t exactly.
//! * [`CurveFamily::Dim5`] (n = 5, rational parameters a, b, c, with
//!   a, b, c and a + b nonzero): edge *lengths* 1/t on {0-1, 4-5}, b t on
//!   {0-2, 1-2, 3-4, 3-5}, a t on {0-3, 1-3, 2-4, 2-5}, and
//!   (a + b) t - c t^-3 on the remaining five pairs; squared lengths are the
//!   squares. Areas tend to constants; W = -a^2 b^2 (a+b)^2 / 3600 * t^2
//!   plus terms of degree <= -2.
//! * [`CurveFamily::Dim4`] (n = 4): the same construction without vertex 5;
//!   W = -a^2 b^2 (a+b)^2 / 144 * t^4 plus terms of degree <= 0.

use crate::index;
use crate::metrics::{area_map, cm_volume_squared, SquaredAreaVector, SquaredEdgeVector};
use crate::scalar::{LaurentPoly, NumError, Rational, Ring};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CurveError {
    #[error("invalid curve parameter: {0}")]
    InvalidParameter(String),
    #[error("witness {witness} needs n = {expected}, got n = {got}")]
    WitnessDimension {
        witness: String,
        expected: usize,
        got: usize,
    },
    #[error("witness vertices must be five distinct vertices of the simplex, got {0:?}")]
    BadWitnessVertices([usize; 5]),
    #[error("cannot parse {input:?} as {expected}")]
    ParseLabel {
        input: String,
        expected: &'static str,
    },
    #[error(transparent)]
    Num(#[from] NumError),
}

fn parse_err(input: &str, expected: &'static str) -> CurveError {
    CurveError::ParseLabel {
        input: input.to_string(),
        expected,
    }
}

/// A one-parameter family of squared edge vectors, entries in Q[t, 1/t].
#[derive(Debug, Clone, PartialEq)]
pub enum CurveFamily {
    Odd {
        q: usize,
    },
    Dim5 {
        a: Rational,
        b: Rational,
        c: Rational,
    },
    Dim4 {
        a: Rational,
        b: Rational,
        c: Rational,
    },
}

impl CurveFamily {
    pub fn odd(q: usize) -> Result<Self, CurveError> {
        if q < 3 {
            return Err(CurveError::InvalidParameter(format!(
                "the two-block curve needs q >= 3, got q = {q}"
            )));
        }
        Ok(CurveFamily::Odd { q })
    }

    pub fn dim5(a: Rational, b: Rational, c: Rational) -> Result<Self, CurveError> {
        check_abc(&a, &b, &c)?;
        Ok(CurveFamily::Dim5 { a, b, c })
    }

    pub fn dim4(a: Rational, b: Rational, c: Rational) -> Result<Self, CurveError> {
        check_abc(&a, &b, &c)?;
        Ok(CurveFamily::Dim4 { a, b, c })
    }

    pub fn n(&self) -> usize {
        match self {
            CurveFamily::Odd { q } => 2 * q - 1,
            CurveFamily::Dim5 { .. } => 5,
            CurveFamily::Dim4 { .. } => 4,
        }
    }

    /// "odd:3", "dim5:2,1,3", "dim4:1,-1/2,3".
    pub fn label(&self) -> String {
        match self {
            CurveFamily::Odd { q } => format!("odd:{q}"),
            CurveFamily::Dim5 { a, b, c } => format!("dim5:{a},{b},{c}"),
            CurveFamily::Dim4 { a, b, c } => format!("dim4:{a},{b},{c}"),
        }
    }

    pub fn parse(text: &str) -> Result<Self, CurveError> {
        if let Some(q) = text.strip_prefix("odd:") {
            let q: usize = q
                .trim()
                .parse()
                .map_err(|_| parse_err(text, "odd:<q> with an integer q >= 3"))?;
            return CurveFamily::odd(q);
        }
        for (prefix, dim5) in [("dim5:", true), ("dim4:", false)] {
            if let Some(rest) = text.strip_prefix(prefix) {
                let parts: Vec<&str> = rest.split(',').collect();
                if parts.len() != 3 {
                    return Err(parse_err(text, "three rational parameters a,b,c"));
                }
                let mut vals = Vec::new();
                for p in parts {
                    vals.push(
                        Rational::parse(p.trim())
                            .map_err(|_| parse_err(text, "rational parameters like 2,1/3,-4"))?,
                    );
                }
                let (a, b, c) = (vals[0].clone(), vals[1].clone(), vals[2].clone());
                return if dim5 {
                    CurveFamily::dim5(a, b, c)
                } else {
                    CurveFamily::dim4(a, b, c)
                };
            }
        }
        Err(parse_err(text, "odd:<q>, dim5:a,b,c or dim4:a,b,c"))
    }

    /// The squared edge lengths as Laurent polynomials in t.
    pub fn edge_vector(&self) -> SquaredEdgeVector<LaurentPoly> {
        match self {
            CurveFamily::Odd { q } => odd_edges(*q),
            CurveFamily::Dim5 { a, b, c } => pinch_edges(5, a, b, c),
            CurveFamily::Dim4 { a, b, c } => pinch_edges(4, a, b, c),
        }
    }

    pub fn area_vector(&self) -> SquaredAreaVector<LaurentPoly> {
        area_map(&self.edge_vector())
    }

    /// Exact squared volume along the curve.
    pub fn volume(&self) -> Result<LaurentPoly, NumError> {
        Ok(cm_volume_squared(&self.edge_vector())?.value)
    }

    /// The asymptotic statements this family is built to satisfy: one claim
    /// per 2-face area plus one for the squared volume.
    pub fn standard_claims(&self) -> Vec<AsymptoticClaim> {
        match self {
            CurveFamily::Odd { q } => odd_claims(*q),
            CurveFamily::Dim5 { a, b, c } => pinch_claims(5, a, b, c),
            CurveFamily::Dim4 { a, b, c } => pinch_claims(4, a, b, c),
        }
    }
}

fn check_abc(a: &Rational, b: &Rational, c: &Rational) -> Result<(), CurveError> {
    if a.is_zero() || b.is_zero() || c.is_zero() {
        return Err(CurveError::InvalidParameter(
            "parameters a, b, c must all be nonzero".to_string(),
        ));
    }
    if (a + b).is_zero() {
        return Err(CurveError::InvalidParameter(
            "parameter sum a + b must be nonzero".to_string(),
        ));
    }
    Ok(())
}

/// Is (i, j) one of the distinguished cross-block pairs (r, q + r), r >= 1?
fn odd_special_pair(q: usize, i: usize, j: usize) -> bool {
    let (i, j) = (i.min(j), i.max(j));
    (1..q).any(|r| (i, j) == (r, q + r))
}

fn odd_edges(q: usize) -> SquaredEdgeVector<LaurentPoly> {
    let n = 2 * q - 1;
    let t = LaurentPoly::variable();
    let t_plus_1 = &t + &LaurentPoly::one();
    let mut s = SquaredEdgeVector::constant(n, LaurentPoly::zero());
    for (i, j) in index::pairs(n) {
        let cross_block = (i < q) != (j < q);
        if cross_block {
            let value = if odd_special_pair(q, i, j) {
                t_plus_1.clone()
            } else {
                t.clone()
            };
            s.set(i, j, value);
        }
    }
    s
}

fn odd_claims(q: usize) -> Vec<AsymptoticClaim> {
    let n = 2 * q - 1;
    let mut claims = Vec::new();
    for (i, j, k) in index::triples(n) {
        let has_special =
            odd_special_pair(q, i, j) || odd_special_pair(q, j, k) || odd_special_pair(q, i, k);
        let leading = if has_special {
            LaurentPoly::constant(Rational::ratio(-1, 16))
        } else {
            LaurentPoly::zero()
        };
        claims.push(AsymptoticClaim {
            subject: format!("S({i},{j},{k})"),
            leading,
            remainder_bound: None,
        });
    }
    // W = (-4)^(1-q) / (n!)^2 * t, exactly
    let mut coeff = Rational::one();
    let minus_4 = Rational::from_integer(-4);
    for _ in 0..(q - 1) {
        coeff = coeff
            .checked_div(&minus_4)
            .expect("dividing by a nonzero constant");
    }
    let mut factorial = Rational::one();
    for k in 2..=n {
        factorial = &factorial * &Rational::from_integer(k as i64);
    }
    let coeff = coeff
        .checked_div(&(&factorial * &factorial))
        .expect("dividing by a nonzero constant");
    claims.push(AsymptoticClaim {
        subject: "W".to_string(),
        leading: LaurentPoly::monomial(coeff, 1),
        remainder_bound: None,
    });
    claims
}

/// Edge roles in the five/six-vertex families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum PinchRole {
    Shrinking, // length 1/t
    GrowingB,  // length b t
    GrowingA,  // length a t
    Balanced,  // length (a + b) t - c t^-3
}

/// Role of each pair for the six-vertex family; the five-vertex family is the
/// restriction to vertices 0..=4.
fn pinch_role(i: usize, j: usize) -> PinchRole {
    let key = (i.min(j), i.max(j));
    match key {
        (0, 1) | (4, 5) => PinchRole::Shrinking,
        (0, 2) | (1, 2) | (3, 4) | (3, 5) => PinchRole::GrowingB,
        (0, 3) | (1, 3) | (2, 4) | (2, 5) => PinchRole::GrowingA,
        _ => PinchRole::Balanced,
    }
}

fn pinch_edges(
    n: usize,
    a: &Rational,
    b: &Rational,
    c: &Rational,
) -> SquaredEdgeVector<LaurentPoly> {
    let length = |role: PinchRole| -> LaurentPoly {
        match role {
            PinchRole::Shrinking => LaurentPoly::monomial(Rational::one(), -1),
            PinchRole::GrowingB => LaurentPoly::monomial(b.clone(), 1),
            PinchRole::GrowingA => LaurentPoly::monomial(a.clone(), 1),
            PinchRole::Balanced => {
                &LaurentPoly::monomial(a + b, 1) - &LaurentPoly::monomial(c.clone(), -3)
            }
        }
    };
    let entries = index::pairs(n)
        .into_iter()
        .map(|(i, j)| {
            let l = length(pinch_role(i, j));
            &l * &l
        })
        .collect();
    SquaredEdgeVector::new(n, entries).expect("one entry per pair")
}

fn pinch_claims(n: usize, a: &Rational, b: &Rational, c: &Rational) -> Vec<AsymptoticClaim> {
    let quarter = Rational::ratio(1, 4);
    let sum = a + b;
    let mut claims = Vec::new();
    for (i, j, k) in index::triples(n) {
        let mut roles = [pinch_role(i, j), pinch_role(j, k), pinch_role(i, k)];
        roles.sort_by_key(|r| *r as usize);
        let constant = match roles {
            [PinchRole::Shrinking, PinchRole::GrowingB, PinchRole::GrowingB] => &quarter * &(b * b),
            [PinchRole::Shrinking, PinchRole::GrowingA, PinchRole::GrowingA] => &quarter * &(a * a),
            [PinchRole::Shrinking, PinchRole::Balanced, PinchRole::Balanced] => {
                &quarter * &(&sum * &sum)
            }
            [PinchRole::GrowingB, PinchRole::GrowingA, PinchRole::Balanced] => {
                &Rational::ratio(1, 2) * &(&(a * b) * &(c * &sum))
            }
            other => unreachable!("no such triangle on this curve: {other:?}"),
        };
        claims.push(AsymptoticClaim {
            subject: format!("S({i},{j},{k})"),
            leading: LaurentPoly::constant(constant),
            remainder_bound: Some(-4),
        });
    }
    // W = -a^2 b^2 (a+b)^2 / denom * t^degree + lower terms
    let (degree, denom, remainder_bound) = if n == 5 {
        (2, 3600, Some(-2))
    } else {
        (4, 144, Some(0))
    };
    let product = &(&(a * a) * &(b * b)) * &(&sum * &sum);
    let coeff = product
        .checked_div(&Rational::from_integer(-denom))
        .expect("dividing by a nonzero constant");
    claims.push(AsymptoticClaim {
        subject: "W".to_string(),
        leading: LaurentPoly::monomial(coeff, degree),
        remainder_bound,
    });
    claims
}

/// "Along this curve, <subject> equals `leading` up to terms of degree at
/// most `remainder_bound`" (with `None` meaning: exactly, no remainder).
#[derive(Debug, Clone, PartialEq)]
pub struct AsymptoticClaim {
    pub subject: String,
    pub leading: LaurentPoly,
    pub remainder_bound: Option<i64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ClaimOutcome {
    pub claim: AsymptoticClaim,
    /// top degree of (actual - claimed leading); None when the remainder is 0
    pub remainder_degree: Option<i64>,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct AsymptoticsReport {
    pub curve: String,
    pub outcomes: Vec<ClaimOutcome>,
}

impl AsymptoticsReport {
    pub fn all_hold(&self) -> bool {
        self.outcomes.iter().all(|o| o.holds)
    }
}

/// Evaluate every standard claim of the family against the exact Laurent
/// expansions of the areas and the volume.
pub fn verify_asymptotics(curve: &CurveFamily) -> Result<AsymptoticsReport, CurveError> {
    let areas = curve.area_vector();
    let volume = curve.volume()?;
    let n = curve.n();
    let mut outcomes = Vec::new();
    for (claim, actual) in curve.standard_claims().into_iter().zip(
        index::triples(n)
            .into_iter()
            .map(|(i, j, k)| areas.get(i, j, k).clone())
            .chain(std::iter::once(volume)),
    ) {
        let remainder = &actual - &claim.leading;
        let remainder_degree = remainder.top_degree();
        let holds = match claim.remainder_bound {
            None => remainder_degree.is_none(),
            Some(bound) => remainder_degree.is_none_or(|d| d <= bound),
        };
        outcomes.push(ClaimOutcome {
            claim,
            remainder_degree,
            holds,
        });
    }
    Ok(AsymptoticsReport {
        curve: curve.label(),
        outcomes,
    })
}

/// A polynomial in the squared areas, used to bound the squared volume.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// Product over the ten vertex pairs {i, j} of five vertices of the area
    /// form 2 S_ijk S_ijl + 2 S_ijl S_ijm + 2 S_ijm S_ijk - S_ijk^2 -
    /// S_ijl^2 - S_ijm^2, where {k, l, m} are the other three vertices.
    /// Defined for n = 4.
    HeronProduct,
    /// Product of the ten squared areas S_ijk over triples {i, j, k} of the
    /// five chosen vertices. Defined for any n >= 4.
    AreaProduct([usize; 5]),
    /// Product of all differences S_ijk - S_ijl over pairs {i, j} and pairs
    /// {k, l} disjoint from it (90 factors). Defined for n = 5.
    DifferenceProduct,
}

impl Witness {
    pub fn label(&self) -> String {
        match self {
            Witness::HeronProduct => "heron-product".to_string(),
            Witness::AreaProduct(v) => format!(
                "area-product:{}",
                v.iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join("-")
            ),
            Witness::DifferenceProduct => "difference-product".to_string(),
        }
    }

    pub fn parse(text: &str) -> Result<Self, CurveError> {
        match text {
            "heron-product" => return Ok(Witness::HeronProduct),
            "difference-product" => return Ok(Witness::DifferenceProduct),
            _ => {}
        }
        if let Some(rest) = text.strip_prefix("area-product:") {
            let parts: Vec<usize> = rest
                .split('-')
                .map(|p| p.trim().parse())
                .collect::<Result<_, _>>()
                .map_err(|_| parse_err(text, "area-product:i-j-k-l-m"))?;
            let vertices: [usize; 5] = parts
                .try_into()
                .map_err(|_| parse_err(text, "exactly five vertices"))?;
            return Ok(Witness::AreaProduct(vertices));
        }
        Err(parse_err(
            text,
            "heron-product, area-product:i-j-k-l-m or difference-product",
        ))
    }
}

/// Evaluate a witness polynomial on a vector of squared areas.
pub fn evaluate_witness<R: Ring>(
    witness: &Witness,
    areas: &SquaredAreaVector<R>,
) -> Result<R, CurveError> {
    let n = areas.n();
    match witness {
        Witness::HeronProduct => {
            if n != 4 {
                return Err(CurveError::WitnessDimension {
                    witness: witness.label(),
                    expected: 4,
                    got: n,
                });
            }
            let mut product = R::one();
            for (i, j) in index::pairs(4) {
                let others: Vec<usize> = (0..=4).filter(|v| *v != i && *v != j).collect();
                let (k, l, m) = (others[0], others[1], others[2]);
                let factor = crate::metrics::heron_quadratic_form(
                    areas.get(i, j, k),
                    areas.get(i, j, l),
                    areas.get(i, j, m),
                );
                product = product.mul(&factor);
            }
            Ok(product)
        }
        Witness::AreaProduct(vertices) => {
            let mut sorted = *vertices;
            sorted.sort_unstable();
            if sorted.windows(2).any(|w| w[0] == w[1]) || sorted[4] > n {
                return Err(CurveError::BadWitnessVertices(*vertices));
            }
            let mut product = R::one();
            for (i, j, k) in index::triples(4) {
                product = product.mul(areas.get(sorted[i], sorted[j], sorted[k]));
            }
            Ok(product)
        }
        Witness::DifferenceProduct => {
            if n != 5 {
                return Err(CurveError::WitnessDimension {
                    witness: witness.label(),
                    expected: 5,
                    got: n,
                });
            }
            let mut product = R::one();
            for (i, j) in index::pairs(5) {
                let rest: Vec<usize> = (0..=5).filter(|v| *v != i && *v != j).collect();
                for x in 0..rest.len() {
                    for y in (x + 1)..rest.len() {
                        let (k, l) = (rest[x], rest[y]);
                        let factor = areas.get(i, j, k).sub(areas.get(i, j, l));
                        product = product.mul(&factor);
                    }
                }
            }
            Ok(product)
        }
    }
}

/// Outcome of a degree certificate: along the curve, every area stays
/// bounded, and the product (all witness values) * W has top degree <= 0 —
/// bounded as t -> infinity even though W itself is unbounded.
#[derive(Debug, Clone, PartialEq)]
pub struct CertificateReport {
    pub curve: String,
    pub witnesses: Vec<String>,
    pub areas_bounded: bool,
    /// top degree of W (None means W = 0, which would defeat the point)
    pub volume_degree: Option<i64>,
    /// top degree of witness_1 * ... * witness_k * W
    pub product_degree: Option<i64>,
    pub holds: bool,
}

/// Verify the degree certificate for a curve and a set of witnesses.
pub fn witness_degree_certificate(
    curve: &CurveFamily,
    witnesses: &[Witness],
) -> Result<CertificateReport, CurveError> {
    let areas = curve.area_vector();
    let volume = curve.volume()?;
    let areas_bounded = areas
        .entries()
        .iter()
        .all(|a| a.top_degree().is_none_or(|d| d <= 0));
    let mut product = volume.clone();
    for witness in witnesses {
        product = &product * &evaluate_witness(witness, &areas)?;
    }
    let product_degree = product.top_degree();
    let volume_degree = volume.top_degree();
    let holds = areas_bounded
        && volume_degree.is_some_and(|d| d > 0)
        && product_degree.is_none_or(|d| d <= 0);
    Ok(CertificateReport {
        curve: curve.label(),
        witnesses: witnesses.iter().map(|w| w.label()).collect(),
        areas_bounded,
        volume_degree,
        product_degree,
        holds,
    })
}
