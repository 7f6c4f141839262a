use geocrystal::charts::{build_y, TorusPointA};
use geocrystal::ratfun::{q, RatFun};
use geocrystal::slgroup::{
    act_borel, alphacheck, big_f, curly_t, e_act, e_act_closed_form, f_det, gamma, gauss, gen_x, gen_y,
    product_act, product_act_left, product_act_right, varphi, CartanA, MatRF, SlGroupError,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn v(name: &str) -> RatFun {
    RatFun::named(name)
}

fn y_generic(n: usize) -> MatRF {
    build_y(&TorusPointA::generic(n))
}

#[test]
fn determinants_are_one() {
    for n in 1..=3 {
        let mut prod = MatRF::identity(n + 1);
        for i in 1..=n {
            let x = gen_x(n, i, v("s")).unwrap();
            let y = gen_y(n, i, v("t")).unwrap();
            let h = alphacheck(n, i, &v("c")).unwrap().to_matrix();
            for g in [&x, &y, &h] {
                assert!(g.det().is_one(), "n={n} i={i}");
            }
            prod = prod.mul(&x).mul(&h).mul(&y);
        }
        assert!(prod.det().is_one());
        assert!(y_generic(n).det().is_one());
    }
}

#[test]
fn gauss_recomposes() {
    for n in 1..=3 {
        let mut g = y_generic(n);
        for i in 1..=n {
            g = gen_x(n, i, v(&format!("s{i}"))).unwrap().mul(&g);
        }
        let d = gauss(&g).unwrap();
        assert!(d.lower.is_lower_unitriangular());
        assert!(d.upper.is_upper_unitriangular());
        assert_eq!(d.recompose(), g);
        assert!(d.torus.det().is_one());
    }
}

#[test]
fn two_by_two_gauss() {
    let (a, b, c) = (v("a"), v("b"), v("c"));
    let d = b.mul(&c).add(&RatFun::one()).div(&a).unwrap();
    let g = MatRF::from_rows(vec![vec![a.clone(), b.clone()], vec![c.clone(), d]]).unwrap();
    let r = gauss(&g).unwrap();
    assert_eq!(r.lower, gen_y(1, 1, c.div(&a).unwrap()).unwrap());
    assert_eq!(r.torus, alphacheck(1, 1, &a).unwrap());
    assert_eq!(r.upper, gen_x(1, 1, b.div(&a).unwrap()).unwrap());
}

#[test]
fn x_y_commutation() {
    let (a, b) = (v("a"), v("b"));
    for n in 1..=3 {
        for i in 1..=n {
            for j in 1..=n {
                let lhs = gen_x(n, i, a.clone()).unwrap().mul(&gen_y(n, j, b.clone()).unwrap());
                let rhs = if i == j {
                    let s = RatFun::one().add(&a.mul(&b));
                    let y = gen_y(n, i, b.div(&s).unwrap()).unwrap();
                    let h = alphacheck(n, i, &s).unwrap().to_matrix();
                    let x = gen_x(n, i, a.div(&s).unwrap()).unwrap();
                    MatRF::product(n + 1, [&y, &h, &x])
                } else {
                    gen_y(n, j, b.clone()).unwrap().mul(&gen_x(n, i, a.clone()).unwrap())
                };
                assert_eq!(lhs, rhs, "n={n} i={i} j={j}");
            }
        }
    }
}

#[test]
fn torus_x_commutation() {
    let (a, b) = (v("a"), v("b"));
    for n in 1..=3 {
        let cartan = CartanA::new(n);
        for i in 1..=n {
            for j in 1..=n {
                let h = alphacheck(n, i, &a).unwrap().to_matrix();
                let lhs = h.mul(&gen_x(n, j, b.clone()).unwrap());
                let scaled = a.pow(cartan.entry(i, j) as i32).unwrap().mul(&b);
                let rhs = gen_x(n, j, scaled).unwrap().mul(&h);
                assert_eq!(lhs, rhs, "n={n} i={i} j={j}");
            }
        }
    }
}

#[test]
fn one_parameter_property() {
    let (c1, c2) = (v("c1"), v("c2"));
    for n in 1..=3 {
        let u = y_generic(n);
        for i in 1..=n {
            let twice = e_act(i, &c2, &e_act(i, &c1, &u).unwrap()).unwrap();
            assert_eq!(twice, e_act(i, &c1.mul(&c2), &u).unwrap(), "n={n} i={i}");
            assert_eq!(e_act(i, &RatFun::one(), &u).unwrap(), u);
        }
    }
}

#[test]
fn closed_form_matches_gauss() {
    let c = v("c");
    for n in 1..=3 {
        let u = y_generic(n);
        for i in 1..=n {
            assert_eq!(e_act(i, &c, &u).unwrap(), e_act_closed_form(i, &c, &u).unwrap());
        }
    }
}

#[test]
fn gamma_equivariance() {
    let c = v("c");
    for n in 1..=3 {
        let u = y_generic(n);
        let g = gamma(&u).unwrap();
        assert_eq!(g, curly_t(&u).unwrap());
        for i in 1..=n {
            let lhs = gamma(&e_act(i, &c, &u).unwrap()).unwrap();
            let rhs = alphacheck(n, i, &c).unwrap().mul(&g);
            assert_eq!(lhs, rhs, "n={n} i={i}");
        }
    }
}

#[test]
fn f_det_scales_through_torus() {
    // γ(e_i^c u) = α_i^∨(c) γ(u) read on coroots: f_k picks up c^{-δ_{ik}}.
    let c = v("c");
    for n in 1..=3 {
        let u = y_generic(n);
        for i in 1..=n {
            let w = e_act(i, &c, &u).unwrap();
            for k in 1..=n {
                let expect = if k == i {
                    f_det(k, &u).unwrap().div(&c).unwrap()
                } else {
                    f_det(k, &u).unwrap()
                };
                assert_eq!(f_det(k, &w).unwrap(), expect, "n={n} i={i} k={k}");
            }
        }
    }
}

#[test]
fn phi_scaling() {
    let alpha = v("alpha");
    for n in 1..=3 {
        let u = y_generic(n);
        for i in 1..=n {
            let after = varphi(i, &e_act(i, &alpha, &u).unwrap()).unwrap();
            let before = varphi(i, &u).unwrap();
            assert_eq!(after, before.div(&alpha).unwrap(), "n={n} i={i}");
        }
    }
}

#[test]
fn f_det_closed_product() {
    for n in 1..=4 {
        let p = TorusPointA::generic(n);
        let u = build_y(&p);
        for i in 1..=n {
            let mut expect = RatFun::one();
            for k in 1..=i {
                for j in k..=n - i + k {
                    expect = expect.mul(p.get(k, j));
                }
            }
            assert_eq!(f_det(i, &u).unwrap(), expect, "n={n} i={i}");
        }
    }
}

#[test]
fn torus_map_undefined_on_identity() {
    assert!(matches!(curly_t(&MatRF::identity(3)), Err(SlGroupError::TorusUndefined { .. })));
    assert!(matches!(
        e_act(1, &v("c"), &MatRF::identity(2)),
        Err(SlGroupError::PhiVanishes { i: 1 })
    ));
}

#[test]
fn big_f_is_u_times_torus() {
    for n in 1..=3 {
        let u = y_generic(n);
        assert_eq!(big_f(&u).unwrap(), u.mul(&curly_t(&u).unwrap().to_matrix()));
    }
}

/// Random lower-triangular matrix with determinant one and small rational entries.
fn random_borel<R: Rng>(rng: &mut R, size: usize) -> MatRF {
    let mut m = MatRF::identity(size);
    let mut prod = RatFun::one();
    for r in 1..=size {
        for c in 1..r {
            m.set(r, c, RatFun::ratio(rng.gen_range(-4..=4), rng.gen_range(1..=3)));
        }
        if r < size {
            let d = RatFun::ratio(rng.gen_range(1..=5), rng.gen_range(1..=3));
            prod = prod.mul(&d);
            m.set(r, r, d);
        } else {
            m.set(r, r, prod.recip().unwrap());
        }
    }
    m
}

#[test]
fn product_action_identity_and_associativity() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let id = MatRF::identity(2);
    let x = gen_x(1, 1, v("s")).unwrap();
    let mut checked = 0;
    for _ in 0..20 {
        let (b1, b2, b3) = (random_borel(&mut rng, 2), random_borel(&mut rng, 2), random_borel(&mut rng, 2));
        assert_eq!(product_act(&id, (&b1, &b2)).unwrap(), (b1.clone(), b2.clone()));
        let Ok(left) = product_act_left(&x, (&b1, &b2, &b3)) else { continue };
        let right = product_act_right(&x, (&b1, &b2, &b3)).unwrap();
        assert_eq!(left, right);
        checked += 1;
    }
    assert!(checked >= 10);
}

#[test]
fn product_action_respects_multiplication() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut checked = 0;
    for n in 1..=2 {
        for i in 1..=n {
            let x = gen_x(n, i, RatFun::constant(q(rng.gen_range(1..=4), 1))).unwrap();
            for _ in 0..10 {
                let (b1, b2) = (random_borel(&mut rng, n + 1), random_borel(&mut rng, n + 1));
                let Ok((c1, c2)) = product_act(&x, (&b1, &b2)) else { continue };
                assert_eq!(c1.mul(&c2), act_borel(&x, &b1.mul(&b2)).unwrap());
                checked += 1;
            }
        }
    }
    assert!(checked >= 15);
}
