//! Prints the coefficients of the generating map when the Hom space is
//! nonzero and checks the image of the canonical word.
//!
//! cargo run --example witness_map -- 3,2,1,1,1 4,1,1,1 3

use hookhom::arith::Prime;
use hookhom::criterion::hom_dim_theorem;
use hookhom::homspace::{canonical_tableau, psi_apply_canonical, witness_coeffs};

fn main() -> hookhom::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let (lambda, hook, p) = match args.as_slice() {
        [l, h, p] => (l.parse()?, h.parse()?, p.parse()?),
        _ => ("2,1,1,1".parse()?, "4,1".parse()?, Prime::new(2)?),
    };
    let rep = hom_dim_theorem(&lambda, hook, p)?;
    println!("dim Hom(Δ({lambda}), Δ({hook})) = {} at p={p}", rep.dim);
    let Some(w) = rep.witness else {
        println!("no witness (zero space, or fewer than b+2 rows)");
        return Ok(());
    };
    let exact = witness_coeffs(&lambda, hook)?;
    for (i, c) in &w {
        println!("  c{i} = {:>4} = {c} mod {p}", exact[i].to_string());
    }
    let image = psi_apply_canonical(&lambda, hook)?;
    let t = canonical_tableau(&lambda, hook);
    println!("image of the canonical word has {} terms", image.len());
    println!("coefficient of {t}: {} ({} mod {p})", image.coefficient(&t), p.reduce(&image.coefficient(&t)));
    Ok(())
}
