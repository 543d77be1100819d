use rayon::prelude::*;
use serde::Serialize;

use super::{count_roots_in_rectangle, mid, plane_vanishes_on_boundary, segment_vanishes, winding_number, Rectangle};
use crate::error::{Error, Result};
use crate::exact::{rat, ComplexUniPoly, PlanePoly, Rational};

/// A rectangle holding roots of the input.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IsolationBox {
    pub rectangle: Rectangle,
    /// Roots of the input inside, with multiplicity.
    pub multiplicity: usize,
    /// True when the box holds exactly one distinct root.
    pub squarefree_certified: bool,
}

/// Cut coordinate for splitting `[lo, hi]`: the midpoint, or, if the cut
/// line meets a root, the midpoint moved by `w/8`, `w/16`, ...
fn cut(lo: &Rational, hi: &Rational, hits: impl Fn(&Rational) -> bool) -> Rational {
    let m = mid(lo, hi);
    if !hits(&m) {
        return m;
    }
    let mut step = (hi - lo) * rat(1, 8);
    loop {
        let c = &m + &step;
        if !hits(&c) {
            return c;
        }
        step *= rat(1, 2);
    }
}

fn split(f: &PlanePoly, r: &Rectangle) -> [Rectangle; 4] {
    let xm = cut(&r.x0, &r.x1, |x| {
        let (re, im) = f.on_vertical(x);
        segment_vanishes(&re, &im, &r.y0, &r.y1)
    });
    let ym = cut(&r.y0, &r.y1, |y| {
        let (re, im) = f.on_horizontal(y);
        segment_vanishes(&re, &im, &r.x0, &r.x1)
    });
    let cell = |x0: &Rational, x1: &Rational, y0: &Rational, y1: &Rational| Rectangle {
        x0: x0.clone(),
        x1: x1.clone(),
        y0: y0.clone(),
        y1: y1.clone(),
    };
    [
        cell(&r.x0, &xm, &r.y0, &ym),
        cell(&xm, &r.x1, &r.y0, &ym),
        cell(&r.x0, &xm, &ym, &r.y1),
        cell(&xm, &r.x1, &ym, &r.y1),
    ]
}

/// Cells (with their squarefree root count) that separate the roots of
/// `sf`, stopping at width `min_width`.
fn refine(sf: &ComplexUniPoly, rect: Rectangle, min_width: &Rational) -> Vec<(Rectangle, usize)> {
    let w = winding_number(sf, &rect)
        .to_integer()
        .expect("boundary is root-free, so the winding number is an integer");
    match w {
        0 => Vec::new(),
        1 => vec![(rect, 1)],
        n if rect.width().max(rect.height()) < *min_width => vec![(rect, n as usize)],
        _ => split(sf.plane(), &rect)
            .into_par_iter()
            .flat_map(|c| refine(sf, c, min_width))
            .collect(),
    }
}

fn touches(a: &Rectangle, b: &Rectangle) -> bool {
    a.x0 <= b.x1 && b.x0 <= a.x1 && a.y0 <= b.y1 && b.y0 <= a.y1
}

/// Replaces every single-root cell that meets another cell by its subcell
/// holding the root, until single-root cells are apart from all others.
fn separate(sf: &ComplexUniPoly, cells: &mut [(Rectangle, usize)]) {
    loop {
        let crowded: Vec<usize> = (0..cells.len())
            .filter(|&i| cells[i].1 == 1 && (0..cells.len()).any(|j| j != i && touches(&cells[i].0, &cells[j].0)))
            .collect();
        if crowded.is_empty() {
            return;
        }
        let shrunk: Vec<Rectangle> = crowded
            .par_iter()
            .map(|&i| {
                split(sf.plane(), &cells[i].0)
                    .into_iter()
                    .find(|c| winding_number(sf, c).to_integer() == Some(1))
                    .expect("the root lies inside exactly one subcell")
            })
            .collect();
        for (i, r) in crowded.into_iter().zip(shrunk) {
            cells[i].0 = r;
        }
    }
}

/// Boxes inside `rect` separating the distinct roots of `F`, each labelled
/// with the number of roots of `F` it holds. A box with a single distinct
/// root is disjoint from every other box, boundary included. Roots closer
/// together than `min_width` may share a box, which is then not certified.
pub fn isolate_roots(f: &ComplexUniPoly, rect: &Rectangle, min_width: &Rational) -> Result<Vec<IsolationBox>> {
    if f.is_constant() {
        return Err(Error::ConstantPolynomial);
    }
    if *min_width <= rat(0, 1) {
        return Err(Error::InvalidArgument("min_width must be positive".into()));
    }
    let sf = f.squarefree_part();
    if plane_vanishes_on_boundary(sf.plane(), rect) {
        return Err(Error::RootOnBoundary);
    }
    let mut cells = refine(&sf, rect.clone(), min_width);
    separate(&sf, &mut cells);
    let mut boxes = cells
        .into_iter()
        .map(|(r, n)| {
            Ok(IsolationBox {
                multiplicity: count_roots_in_rectangle(f, &r)?,
                rectangle: r,
                squarefree_certified: n == 1,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    boxes.sort_by(|a, b| {
        let (p, q) = (&a.rectangle, &b.rectangle);
        (&p.x0, &p.y0, &p.x1, &p.y1).cmp(&(&q.x0, &q.y0, &q.x1, &q.y1))
    });
    Ok(boxes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, GaussianRational};

    fn g(re: Rational, im: Rational) -> GaussianRational {
        GaussianRational::new(re, im)
    }

    fn inside(b: &IsolationBox, x: &Rational, y: &Rational) -> bool {
        b.rectangle.contains_interior(x, y)
    }

    #[test]
    fn two_real_roots() {
        let f = ComplexUniPoly::from_roots(&g(int(1), int(0)), &[(g(int(1), int(0)), 1), (g(int(-1), int(0)), 1)]);
        let rect = Rectangle::new(int(-2), int(2), int(-2), int(2)).unwrap();
        let boxes = isolate_roots(&f, &rect, &rat(1, 4)).unwrap();
        assert_eq!(boxes.len(), 2);
        assert!(inside(&boxes[0], &int(-1), &int(0)) && inside(&boxes[1], &int(1), &int(0)));
        assert!(boxes.iter().all(|b| b.multiplicity == 1 && b.squarefree_certified));
        assert!(!touches(&boxes[0].rectangle, &boxes[1].rectangle));
    }

    #[test]
    fn double_root_keeps_multiplicity() {
        let f = ComplexUniPoly::from_roots(&g(int(1), int(0)), &[(g(int(0), int(0)), 2)]);
        let rect = Rectangle::new(int(-1), int(1), int(-1), int(1)).unwrap();
        let boxes = isolate_roots(&f, &rect, &int(1)).unwrap();
        assert_eq!(boxes.len(), 1);
        assert_eq!(boxes[0].multiplicity, 2);
        assert!(inside(&boxes[0], &int(0), &int(0)));
    }

    #[test]
    fn single_off_grid_root() {
        let z = g(rat(1, 3), rat(1, 7));
        let f = ComplexUniPoly::linear(&z);
        let rect = Rectangle::new(int(-1), int(1), int(-1), int(1)).unwrap();
        let boxes = isolate_roots(&f, &rect, &rat(1, 100)).unwrap();
        assert_eq!(boxes.len(), 1);
        assert!(inside(&boxes[0], &z.re, &z.im));
    }

    #[test]
    fn cluster_below_min_width_is_reported_together() {
        let f = ComplexUniPoly::from_roots(
            &g(int(1), int(0)),
            &[(g(rat(1, 3), int(0)), 1), (g(rat(1, 3) + rat(1, 1000), int(0)), 1)],
        );
        let rect = Rectangle::new(int(-1), int(1), int(-1), int(1)).unwrap();
        let boxes = isolate_roots(&f, &rect, &rat(1, 2)).unwrap();
        assert_eq!(boxes.len(), 1);
        assert_eq!(boxes[0].multiplicity, 2);
        assert!(!boxes[0].squarefree_certified);
    }

    #[test]
    fn cut_avoids_root_on_midline() {
        // roots on both midlines of the square force perturbed cuts
        let f = ComplexUniPoly::from_roots(
            &g(int(1), int(0)),
            &[(g(int(0), rat(1, 2)), 1), (g(rat(-1, 2), int(0)), 1), (g(int(0), int(0)), 1)],
        );
        let rect = Rectangle::new(int(-1), int(1), int(-1), int(1)).unwrap();
        let boxes = isolate_roots(&f, &rect, &rat(1, 64)).unwrap();
        assert_eq!(boxes.len(), 3);
        assert_eq!(boxes.iter().map(|b| b.multiplicity).sum::<usize>(), 3);
    }
}
