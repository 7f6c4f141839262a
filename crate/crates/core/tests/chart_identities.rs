use geocrystal::charts::{
    alpha_coeff, build_y, c_coeff, e_act_a, e_act_big_a, gamma_a, gamma_a_coroots, xi, xi_inv, TorusPointA,
    TorusPointB,
};
use geocrystal::ratfun::RatFun;
use geocrystal::slgroup::verify::verma_on;
use geocrystal::slgroup::{alphacheck, e_act, gamma, CartanA};

fn alpha() -> RatFun {
    RatFun::named("alpha")
}

#[test]
fn xi_round_trips() {
    for n in 1..=4 {
        let p = TorusPointA::generic(n);
        assert_eq!(xi_inv(&xi(&p).unwrap()).unwrap(), p, "n={n}");
        let q = TorusPointB::generic(n);
        assert_eq!(xi(&xi_inv(&q).unwrap()).unwrap(), q, "n={n}");
    }
}

#[test]
fn a_chart_action_matches_group() {
    for n in 1..=3 {
        let p = TorusPointA::generic(n);
        let u = build_y(&p);
        for i in 1..=n {
            let lhs = build_y(&e_act_a(i, &alpha(), &p).unwrap());
            assert_eq!(lhs, e_act(i, &alpha(), &u).unwrap(), "n={n} i={i}");
        }
    }
}

#[test]
fn charts_are_compatible() {
    for n in 1..=3 {
        let p = TorusPointA::generic(n);
        let q = xi(&p).unwrap();
        for i in 1..=n {
            let lhs = xi(&e_act_a(i, &alpha(), &p).unwrap()).unwrap();
            assert_eq!(lhs, e_act_big_a(i, &alpha(), &q).unwrap(), "n={n} i={i}");
        }
    }
}

#[test]
fn gamma_in_both_charts() {
    for n in 1..=3 {
        let p = TorusPointA::generic(n);
        assert_eq!(gamma_a(&xi(&p).unwrap()).unwrap(), gamma(&build_y(&p)).unwrap(), "n={n}");
    }
}

#[test]
fn gamma_equivariance_in_big_a() {
    let c = RatFun::named("c");
    for n in 1..=3 {
        let q = TorusPointB::generic(n);
        let g = gamma_a(&q).unwrap();
        for i in 1..=n {
            let lhs = gamma_a(&e_act_big_a(i, &c, &q).unwrap()).unwrap();
            assert_eq!(lhs, alphacheck(n, i, &c).unwrap().mul(&g), "n={n} i={i}");
        }
    }
}

#[test]
fn verma_relations_in_big_a() {
    for n in 2..=3 {
        let q = TorusPointB::generic(n);
        let cartan = CartanA::new(n);
        for i in 1..=n {
            for j in i + 1..=n {
                let r = verma_on(i, j, &q, format!("A-chart verma({i},{j})"), |k, c, x| {
                    e_act_big_a(k, c, x)
                })
                .unwrap();
                assert!(r.holds, "n={n} a_ij={} {:?}", cartan.entry(i, j), r.witness);
            }
        }
    }
}

#[test]
fn unit_parameter_is_identity() {
    for n in 1..=3 {
        let p = TorusPointA::generic(n);
        let q = TorusPointB::generic(n);
        for i in 1..=n {
            assert_eq!(e_act_a(i, &RatFun::one(), &p).unwrap(), p);
            assert_eq!(e_act_big_a(i, &RatFun::one(), &q).unwrap(), q);
        }
    }
}

#[test]
fn every_component_is_certified_positive() {
    for n in 1..=4 {
        let p = TorusPointA::generic(n);
        let q = TorusPointB::generic(n);
        let mut all: Vec<RatFun> = Vec::new();
        all.extend(xi(&p).unwrap().values().cloned());
        all.extend(xi_inv(&q).unwrap().values().cloned());
        all.extend(gamma_a_coroots(&q).unwrap());
        for i in 1..=n {
            all.extend(e_act_a(i, &alpha(), &p).unwrap().values().cloned());
            all.extend(e_act_big_a(i, &alpha(), &q).unwrap().values().cloned());
            for k in 0..=i {
                all.push(c_coeff(i, k, &alpha(), &p).unwrap());
            }
            for k in 1..=i {
                all.push(alpha_coeff(i, k, &alpha(), &q).unwrap());
            }
        }
        for f in &all {
            assert!(f.is_positive(), "n={n}: {f}");
            assert!(f.certificate_consistent(), "n={n}: {f}");
        }
    }
}

#[test]
fn rank_two_examples() {
    let p = TorusPointA::generic(2);
    let q = xi(&p).unwrap();
    let a = |k, j| p.get(k, j).clone();
    assert_eq!(q.get(2, 2), &a(2, 2).mul(&a(1, 1)).div(&a(1, 2)).unwrap());
    let big = TorusPointB::generic(2);
    let b = |k, j| big.get(k, j).clone();
    let c = gamma_a_coroots(&big).unwrap();
    assert_eq!(c[0], b(1, 1).mul(&b(1, 2)).recip().unwrap());
    assert_eq!(c[1], b(1, 2).mul(&b(2, 2)).recip().unwrap());
}
