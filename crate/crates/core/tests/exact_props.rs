use num_bigint::BigInt;
use proptest::prelude::*;

use mayachain::exact::{
    determinant, hermite, wronskian, DetMethod, ExtPoly, ExtRatFn, Poly, QuadExt, RatFn, Rational,
};

fn poly_strategy(max_deg: usize, bound: i64) -> impl Strategy<Value = Poly> {
    prop::collection::vec(-bound..=bound, 0..=max_deg + 1).prop_map(|c| Poly::from_ints(&c))
}

fn nonzero_poly(max_deg: usize, bound: i64) -> impl Strategy<Value = Poly> {
    poly_strategy(max_deg, bound).prop_filter("non-zero", |p| !p.is_zero())
}

fn q(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Euclid over ℚ with monic normalization, independent of the modular gcd.
fn euclid(a: &Poly, b: &Poly) -> Poly {
    let (mut x, mut y) = (a.clone(), b.clone());
    while !y.is_zero() {
        let (_, r) = x.div_rem(&y);
        x = y;
        y = r;
    }
    if x.is_zero() {
        x
    } else {
        x.monic()
    }
}

fn ext(re: &Poly, im: &Poly, d: i64) -> ExtPoly {
    ExtPoly::new(re.clone(), im.clone(), q(d, 1)).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_laws(a in poly_strategy(6, 50), b in poly_strategy(6, 50), c in poly_strategy(6, 50)) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a - &b) + &b, a.clone());
        prop_assert_eq!((&a * &b).derivative(), &(&a.derivative() * &b) + &(&a * &b.derivative()));
    }

    #[test]
    fn exact_division_and_remainder(a in poly_strategy(8, 30), b in nonzero_poly(5, 30)) {
        prop_assert_eq!((&a * &b).div_exact(&b), a.clone());
        let (quot, r) = a.div_rem(&b);
        prop_assert_eq!(&(&quot * &b) + &r, a.clone());
        prop_assert!(r.is_zero() || r.degree() < b.degree());
    }

    #[test]
    fn modular_gcd_matches_euclid(a in nonzero_poly(5, 20), b in nonzero_poly(5, 20), c in nonzero_poly(3, 20)) {
        let (x, y) = (&a * &c, &b * &c);
        let (g, cx, cy) = x.gcd_cofactors(&y);
        prop_assert_eq!(&g, &euclid(&x, &y));
        prop_assert_eq!(&g * &cx, x.clone());
        prop_assert_eq!(&g * &cy, y.clone());
        // c divides the gcd
        prop_assert!(g.try_div_exact(&c).is_some());
    }

    #[test]
    fn text_round_trip(a in poly_strategy(10, 1000)) {
        let back: Poly = a.to_string().parse().unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn determinant_methods_agree(entries in prop::collection::vec(poly_strategy(3, 9), 16)) {
        let m: Vec<Vec<Poly>> = entries.chunks(4).map(|r| r.to_vec()).collect();
        let bound = 12;
        let bareiss = determinant(&m, bound, DetMethod::Bareiss);
        let interp = determinant(&m, bound, DetMethod::Interpolation);
        prop_assert_eq!(&bareiss, &interp);
        // oracle: Laplace expansion along the first row
        fn laplace(m: &[Vec<Poly>]) -> Poly {
            if m.len() == 1 {
                return m[0][0].clone();
            }
            let mut acc = Poly::zero();
            for j in 0..m.len() {
                let minor: Vec<Vec<Poly>> = m[1..]
                    .iter()
                    .map(|r| r.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, x)| x.clone()).collect())
                    .collect();
                let term = &m[0][j] * &laplace(&minor);
                acc = if j % 2 == 0 { &acc + &term } else { &acc - &term };
            }
            acc
        }
        prop_assert_eq!(bareiss, laplace(&m));
    }

    #[test]
    fn ext_poly_field_laws(
        a in (poly_strategy(4, 20), poly_strategy(4, 20)),
        b in (poly_strategy(4, 20), poly_strategy(4, 20)),
        d in prop::sample::select(vec![-1i64, -2, -6, -10, 2, 3]),
    ) {
        let x = ext(&a.0, &a.1, d);
        let y = ext(&b.0, &b.1, d);
        prop_assert_eq!(&x * &y, &y * &x);
        if !y.is_zero() {
            prop_assert_eq!((&x * &y).div_exact(&y), x.clone());
        }
        // the norm is the product with the conjugate and lies over ℚ
        let n = &x * &x.conj();
        prop_assert!(n.im().is_zero());
        prop_assert_eq!(n.re(), &x.norm());
    }

    #[test]
    fn ext_gcd_recovers_common_factor(
        a in (nonzero_poly(3, 9), poly_strategy(3, 9)),
        b in (nonzero_poly(3, 9), poly_strategy(3, 9)),
        c in (nonzero_poly(2, 9), poly_strategy(2, 9)),
        d in prop::sample::select(vec![-1i64, -2, -6, 5]),
    ) {
        let (x, y, f) = (ext(&a.0, &a.1, d), ext(&b.0, &b.1, d), ext(&c.0, &c.1, d));
        let (px, py) = (&x * &f, &y * &f);
        let (g, cx, cy) = px.gcd_cofactors(&py);
        prop_assert_eq!(&g * &cx, px.clone());
        prop_assert_eq!(&g * &cy, py.clone());
        prop_assert!(g.try_div_exact(&f.monic()).is_some());
    }

    #[test]
    fn rational_function_field(a in nonzero_poly(3, 9), b in nonzero_poly(3, 9), c in nonzero_poly(3, 9), e in nonzero_poly(3, 9)) {
        let f = RatFn::new(a.clone(), b.clone()).unwrap();
        let g = RatFn::new(c.clone(), e.clone()).unwrap();
        prop_assert_eq!(&(&f + &g) - &g, f.clone());
        prop_assert_eq!((&f * &g).derivative(), &(&f.derivative() * &g) + &(&f * &g.derivative()));
        prop_assert_eq!((&(&f * &g) / &g).unwrap(), f.clone());
        let x = q(7, 3);
        if let (Some(fx), Some(gx)) = (f.eval(&x), g.eval(&x)) {
            prop_assert_eq!((&f + &g).eval(&x), Some(fx + gx));
        }
    }

    #[test]
    fn argument_scaling_is_a_homomorphism(a in nonzero_poly(3, 9), b in nonzero_poly(3, 9), c in nonzero_poly(3, 9)) {
        let d = q(-1, 6);
        let f = RatFn::new(a, b).unwrap();
        let g = RatFn::from_poly(c);
        let lhs = (&f * &g).scale_argument(&d).unwrap();
        let rhs = &f.scale_argument(&d).unwrap() * &g.scale_argument(&d).unwrap();
        prop_assert_eq!(lhs, rhs);
        // d/dz [f(cz)] = c·f′(cz)
        let cgen = QuadExt::generator(d.clone()).unwrap();
        let lhs = f.scale_argument(&d).unwrap().derivative();
        let rhs: ExtRatFn = f.derivative().scale_argument(&d).unwrap().scale(&cgen);
        prop_assert_eq!(lhs, rhs);
    }
}

#[test]
fn hermite_wronskian_degree_law() {
    let idx = [1usize, 2, 4, 7, 8, 11];
    let fs: Vec<Poly> = idx.iter().map(|&n| hermite(n)).collect();
    let w = wronskian(&fs);
    let m = idx.len();
    assert_eq!(w.degree(), Some(idx.iter().sum::<usize>() - m * (m - 1) / 2));
}
