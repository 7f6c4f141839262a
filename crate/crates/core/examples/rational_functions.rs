//! Exact rational functions with positivity certificates.

use geocrystal::ratfun::{parse, RatFun, Symbol};
use geocrystal::ud::tropicalize;

fn main() {
    let f = parse("(x + y)/z").unwrap();
    let g = parse("x*z + y*z").unwrap();
    let h = f.mul(&g);
    println!("f = {f}");
    println!("f * g = {h}");
    println!("certified positive: {}", h.is_positive());

    let d = parse("x - y").unwrap();
    println!("x - y certified positive: {}", d.is_positive());

    // Equality is decided by cross-multiplication, not by reduced form.
    let x = RatFun::named("x");
    let y = RatFun::named("y");
    let lhs = x.mul(&x).sub(&y.mul(&y)).div(&x.sub(&y)).unwrap();
    println!("(x^2 - y^2)/(x - y) == x + y: {}", lhs == x.add(&y));

    let vars = [Symbol::new("x"), Symbol::new("y"), Symbol::new("z")];
    let t = tropicalize(&f, &vars).unwrap();
    let names: Vec<String> = vars.iter().map(|s| s.name().to_string()).collect();
    println!("tropical f = {}", t.to_prefix(&names));
    println!("at (2, 0, 1): {:?}", t.eval(&[2, 0, 1]));
}
