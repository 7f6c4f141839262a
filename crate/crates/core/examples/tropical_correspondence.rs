//! Tropicalizing the A-chart action recovers the generalized Young tableaux crystal.

use geocrystal::harness::trop::{alpha_exprs, gamma_a_map, point_to_sharp};

fn main() {
    let n = 2;
    let l = [2, 1, 3];
    let v = point_to_sharp(n, &l).unwrap();
    println!("integer point {l:?} is {v}");
    println!("tropical gamma: {:?}, weight: {:?}", gamma_a_map(n).unwrap().eval(&l).unwrap(), v.weight());

    let i = 2;
    let exprs = alpha_exprs(n, i).unwrap();
    for z in [-2, -1, 0, 1, 2] {
        let mut point = l.to_vec();
        point.push(z);
        let shifts: Vec<i64> = exprs.iter().map(|e| e.eval(&point).finite().unwrap()).collect();
        let w = v.crystal_power(i, z).unwrap();
        println!("z = {z:>2}: tropical shifts {shifts:?}, e_{i}^z v = {w}");
    }
}
