//! Gauss decomposition and the geometric crystal action on U^- of SL(3).

use geocrystal::charts::{build_y, TorusPointA};
use geocrystal::ratfun::RatFun;
use geocrystal::slgroup::{e_act, gamma, gauss, gen_x, varphi};

fn main() {
    let n = 2;
    let u = build_y(&TorusPointA::generic(n));
    println!("Y(a) = {u:?}");

    let g = gen_x(n, 1, RatFun::named("s")).unwrap().mul(&u);
    let d = gauss(&g).unwrap();
    println!("x_1(s) Y(a) = lower * torus * upper, with torus {:?}", d.torus.diag());
    assert_eq!(d.recompose(), g);

    let c = RatFun::named("c");
    for i in 1..=n {
        let v = e_act(i, &c, &u).unwrap();
        println!("phi_{i}: {} -> {}", varphi(i, &u).unwrap(), varphi(i, &v).unwrap());
        println!("gamma coroots after e_{i}^c: {:?}", gamma(&v).unwrap().coroots());
    }
}
