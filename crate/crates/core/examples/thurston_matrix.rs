// Thurston's product of two parabolic matrices over `Q(r)`.

use biperron::error::Result;
use biperron::exactpoly::poly::poly;
use biperron::exactpoly::AlgebraicReal;
use biperron::thurston::thurston_product;

pub fn run_example() -> Result<()> {
    let rs = [
        AlgebraicReal::from_integer(2),
        AlgebraicReal::from_integer(3),
        AlgebraicReal::largest_real_root(&poly(&[1, 0, -5])).expect("sqrt 5"),
        AlgebraicReal::largest_real_root(&poly(&[1, 0, -8, 0, 4])).expect("real root"),
    ];
    for r in rs {
        let t = thurston_product(&r)?;
        print!("r = {} (minpoly {}): ", r.decimal(6), r.minpoly().to_text());
        match t.stretch() {
            Some(s) => println!("pseudo-Anosov, stretch {} ({})", s.decimal(8), s.minpoly().to_text()),
            None => println!("not pseudo-Anosov"),
        }
        for (name, ok) in t.checks()? {
            println!("  [{}] {name}", if ok { "ok" } else { "FAIL" });
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
