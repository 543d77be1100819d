use proptest::prelude::*;

use rectwind::cauchy::{cauchy_index, HalfInt};
use rectwind::exact::{rat, ComplexUniPoly, GaussianRational, Poly, Rational, UniPoly};
use rectwind::winding::{isolate_roots, Rectangle};

fn rational() -> impl Strategy<Value = Rational> {
    (-12i64..=12, 1i64..=4).prop_map(|(n, d)| rat(n, d))
}

fn poly(max_deg: usize) -> impl Strategy<Value = UniPoly> {
    prop::collection::vec(rational(), 1..=max_deg + 1)
        .prop_map(Poly::new)
        .prop_filter("nonzero", |p| !p.is_zero())
}

fn interval() -> impl Strategy<Value = (Rational, Rational)> {
    (rational(), rational()).prop_filter("distinct", |(a, b)| a != b)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn common_factor_does_not_change_index(q in poly(4), p in poly(4), g in poly(2), (a, b) in interval()) {
        prop_assert_eq!(cauchy_index(&(&q * &g), &(&p * &g), &a, &b), cauchy_index(&q, &p, &a, &b));
    }

    #[test]
    fn reversing_the_interval_negates(q in poly(4), p in poly(5), (a, b) in interval()) {
        prop_assert_eq!(cauchy_index(&q, &p, &b, &a), -cauchy_index(&q, &p, &a, &b));
        prop_assert_eq!(cauchy_index(&q, &p, &a, &a), HalfInt::ZERO);
    }

    #[test]
    fn index_is_additive_over_a_cut(q in poly(4), p in poly(5), a in rational(), c in rational(), b in rational()) {
        prop_assert_eq!(
            cauchy_index(&q, &p, &a, &b),
            cauchy_index(&q, &p, &a, &c) + cauchy_index(&q, &p, &c, &b)
        );
    }

    #[test]
    fn affine_substitution(q in poly(3), p in poly(4), (a, b) in interval(), s in rational(), e in rational()) {
        prop_assume!(s != rat(0, 1));
        let l = |x: &Rational| &(&s * x) + &e;
        prop_assert_eq!(
            cauchy_index(&q, &p, &l(&a), &l(&b)),
            cauchy_index(&q.compose_affine(&s, &e), &p.compose_affine(&s, &e), &a, &b)
        );
    }

    #[test]
    fn isolation_accounts_for_every_root(
        roots in prop::collection::vec(((-6i64..=6, 1i64..=2), (-6i64..=6, 1i64..=2), 1u32..=2), 1..=3)
    ) {
        let mut zs: Vec<(GaussianRational, u32)> = Vec::new();
        for ((a, b), (c, d), m) in roots {
            let z = GaussianRational::new(rat(a, b), rat(c, d));
            if !zs.iter().any(|(w, _)| *w == z) {
                zs.push((z, m));
            }
        }
        let f = ComplexUniPoly::from_roots(&GaussianRational::real(rat(1, 1)), &zs);
        let square = Rectangle::centered_square(&rat(15, 2)).unwrap();
        let boxes = isolate_roots(&f, &square, &rat(1, 32)).unwrap();
        prop_assert_eq!(boxes.len(), zs.len());
        prop_assert_eq!(boxes.iter().map(|b| b.multiplicity as u32).sum::<u32>(), zs.iter().map(|(_, m)| m).sum::<u32>());
        for (z, m) in &zs {
            let holder: Vec<_> = boxes.iter().filter(|b| b.rectangle.contains(&z.re, &z.im)).collect();
            prop_assert_eq!(holder.len(), 1);
            prop_assert_eq!(holder[0].multiplicity as u32, *m);
        }
    }
}
