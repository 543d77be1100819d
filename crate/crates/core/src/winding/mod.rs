//! Winding numbers of complex polynomials on rectangle boundaries, and
//! everything built on them: root counting, isolation, non-vanishing boxes,
//! the sufficient radius and the homotopy cube.

mod control;
mod cube;
mod delta;
mod isolate;

use std::fmt;

use serde::Serialize;

pub use control::{count_all_roots, is_well_controlled, sufficient_radius, Controlled, Variant};
pub use cube::{homotopy_cube_sum, CubeFaces, SpacePoly};
pub use delta::nonvanishing_delta;
pub use isolate::{isolate_roots, IsolationBox};

use crate::cauchy::{cauchy_index_traced, has_root_in, HalfInt, SigmaTauChain};
use crate::error::{Error, Result};
use crate::exact::{rat, rational_to_string, serialize_rational, ComplexUniPoly, PlanePoly, Rational, UniPoly};

/// The closed rectangle `[x0, x1] × [y0, y1]` with `x0 < x1`, `y0 < y1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Rectangle {
    #[serde(serialize_with = "serialize_rational")]
    pub x0: Rational,
    #[serde(serialize_with = "serialize_rational")]
    pub x1: Rational,
    #[serde(serialize_with = "serialize_rational")]
    pub y0: Rational,
    #[serde(serialize_with = "serialize_rational")]
    pub y1: Rational,
}

impl Rectangle {
    pub fn new(x0: Rational, x1: Rational, y0: Rational, y1: Rational) -> Result<Self> {
        if x0 >= x1 || y0 >= y1 {
            return Err(Error::InvalidRectangle(format!(
                "need x0 < x1 and y0 < y1, got [{}, {}] x [{}, {}]",
                rational_to_string(&x0),
                rational_to_string(&x1),
                rational_to_string(&y0),
                rational_to_string(&y1)
            )));
        }
        Ok(Self { x0, x1, y0, y1 })
    }

    /// `[-m, m]²`.
    pub fn centered_square(m: &Rational) -> Result<Self> {
        Self::new(-m, m.clone(), -m, m.clone())
    }

    pub fn width(&self) -> Rational {
        &self.x1 - &self.x0
    }

    pub fn height(&self) -> Rational {
        &self.y1 - &self.y0
    }

    pub fn contains_interior(&self, x: &Rational, y: &Rational) -> bool {
        &self.x0 < x && x < &self.x1 && &self.y0 < y && y < &self.y1
    }

    pub fn contains(&self, x: &Rational, y: &Rational) -> bool {
        &self.x0 <= x && x <= &self.x1 && &self.y0 <= y && y <= &self.y1
    }

    /// The four boundary edges in counterclockwise order.
    fn edges(&self) -> [Edge; 4] {
        [
            Edge::horizontal("bottom", &self.y0, &self.x0, &self.x1),
            Edge::vertical("right", &self.x1, &self.y0, &self.y1),
            Edge::horizontal("top", &self.y1, &self.x1, &self.x0),
            Edge::vertical("left", &self.x0, &self.y1, &self.y0),
        ]
    }
}

impl fmt::Display for Rectangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}, {}] x [{}, {}]",
            rational_to_string(&self.x0),
            rational_to_string(&self.x1),
            rational_to_string(&self.y0),
            rational_to_string(&self.y1)
        )
    }
}

/// One oriented edge: a fixed coordinate and a traversal from `from` to `to`
/// along the other one.
struct Edge {
    name: &'static str,
    horizontal: bool,
    fixed: Rational,
    from: Rational,
    to: Rational,
}

impl Edge {
    fn horizontal(name: &'static str, y: &Rational, from: &Rational, to: &Rational) -> Self {
        Self {
            name,
            horizontal: true,
            fixed: y.clone(),
            from: from.clone(),
            to: to.clone(),
        }
    }

    fn vertical(name: &'static str, x: &Rational, from: &Rational, to: &Rational) -> Self {
        Self {
            name,
            horizontal: false,
            fixed: x.clone(),
            from: from.clone(),
            to: to.clone(),
        }
    }

    fn restrict(&self, f: &PlanePoly) -> (UniPoly, UniPoly) {
        if self.horizontal {
            f.on_horizontal(&self.fixed)
        } else {
            f.on_vertical(&self.fixed)
        }
    }
}

/// Whether `F` has a zero on the segment where `re` and `im` are its
/// restrictions, between `a` and `b`.
pub(crate) fn segment_vanishes(re: &UniPoly, im: &UniPoly, a: &Rational, b: &Rational) -> bool {
    if re.is_zero() && im.is_zero() {
        return true;
    }
    let g = re.gcd(im);
    !g.is_constant() && has_root_in(&g, a, b)
}

/// `w(F | ∂Γ)` with its four edge indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WindingReport {
    #[serde(serialize_with = "serialize_rational")]
    pub value: Rational,
    pub bottom: HalfInt,
    pub right: HalfInt,
    pub top: HalfInt,
    pub left: HalfInt,
    pub vanishes_on_boundary: bool,
}

impl WindingReport {
    /// `4 w`, always an integer.
    pub fn quarters(&self) -> i64 {
        (self.bottom + self.right + self.top + self.left).halves()
    }

    pub fn to_integer(&self) -> Option<i64> {
        let q = self.quarters();
        (q % 4 == 0).then_some(q / 4)
    }
}

/// The data behind one edge index, for traces.
#[derive(Clone, Debug)]
pub struct EdgeTrace {
    pub edge: &'static str,
    /// `"X"` on horizontal edges, `"Y"` on vertical ones.
    pub var: &'static str,
    pub re: UniPoly,
    pub im: UniPoly,
    pub from: Rational,
    pub to: Rational,
    pub index: HalfInt,
    pub chain: Option<SigmaTauChain>,
}

/// `w(F | ∂Γ) = ½ Σ Ind(F_re, F_im)` over the four edges, traversed
/// counterclockwise starting with the bottom edge.
pub fn winding_number(f: &ComplexUniPoly, rect: &Rectangle) -> WindingReport {
    winding_number_plane(f.plane(), rect)
}

pub fn winding_number_plane(f: &PlanePoly, rect: &Rectangle) -> WindingReport {
    winding_number_traced(f, rect).0
}

pub fn winding_number_traced(f: &PlanePoly, rect: &Rectangle) -> (WindingReport, Vec<EdgeTrace>) {
    let mut traces = Vec::with_capacity(4);
    let mut vanishes = false;
    for e in rect.edges() {
        let (re, im) = e.restrict(f);
        vanishes |= segment_vanishes(&re, &im, &e.from, &e.to);
        let (index, chain) = cauchy_index_traced(&re, &im, &e.from, &e.to);
        traces.push(EdgeTrace {
            edge: e.name,
            var: if e.horizontal { "X" } else { "Y" },
            re,
            im,
            from: e.from,
            to: e.to,
            index,
            chain,
        });
    }
    let [b, r, t, l] = [0, 1, 2, 3].map(|k| traces[k].index);
    let sum = b + r + t + l;
    let report = WindingReport {
        value: sum.value() / Rational::from_integer(2.into()),
        bottom: b,
        right: r,
        top: t,
        left: l,
        vanishes_on_boundary: vanishes,
    };
    (report, traces)
}

/// Whether `F` has a zero on `∂Γ`.
pub fn vanishes_on_boundary(f: &ComplexUniPoly, rect: &Rectangle) -> bool {
    plane_vanishes_on_boundary(f.plane(), rect)
}

pub fn plane_vanishes_on_boundary(f: &PlanePoly, rect: &Rectangle) -> bool {
    rect.edges().iter().any(|e| {
        let (re, im) = e.restrict(f);
        segment_vanishes(&re, &im, &e.from, &e.to)
    })
}

/// Number of roots of `F` inside `Γ`, with multiplicity, as `w(F | ∂Γ)`.
pub fn count_roots_in_rectangle(f: &ComplexUniPoly, rect: &Rectangle) -> Result<usize> {
    if f.is_constant() {
        return Err(Error::ConstantPolynomial);
    }
    let report = winding_number(f, rect);
    if report.vanishes_on_boundary {
        return Err(Error::RootOnBoundary);
    }
    checked_count(&report, f.degree().unwrap_or(0))
}

fn checked_count(report: &WindingReport, degree: usize) -> Result<usize> {
    match report.to_integer() {
        Some(n) if n >= 0 && n as usize <= degree => Ok(n as usize),
        _ => Err(Error::SoundnessViolation(format!(
            "winding number {} is not a count in 0..={degree}",
            rational_to_string(&report.value)
        ))),
    }
}

/// Midpoint of two rationals.
pub(crate) fn mid(a: &Rational, b: &Rational) -> Rational {
    (a + b) * rat(1, 2)
}
