//! The two torus charts, their change of coordinates, and positivity.

use geocrystal::charts::{e_act_a, e_act_big_a, gamma_a_coroots, xi, xi_inv, TorusPointA, TorusPointB};
use geocrystal::ratfun::RatFun;

fn main() {
    let n = 3;
    let p = TorusPointA::generic(n);
    let q = xi(&p).unwrap();
    for ((k, j), f) in q.coords() {
        println!("A[{k},{j}] = {f}");
    }
    assert_eq!(xi_inv(&q).unwrap(), p);

    let alpha = RatFun::named("alpha");
    let big = TorusPointB::generic(n);
    let moved = e_act_big_a(2, &alpha, &big).unwrap();
    println!("e_2^alpha on A-coordinates:");
    for ((k, j), f) in moved.coords() {
        println!("  A[{k},{j}] -> {f}   positive: {}", f.is_positive());
    }

    assert_eq!(xi(&e_act_a(2, &alpha, &p).unwrap()).unwrap(), e_act_big_a(2, &alpha, &q).unwrap());
    println!("chart actions agree");

    for (i, c) in gamma_a_coroots(&big).unwrap().iter().enumerate() {
        println!("gamma coroot {}: {c}", i + 1);
    }
}
