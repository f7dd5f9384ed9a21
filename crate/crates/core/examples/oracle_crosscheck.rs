//! Builds the relation matrix for one pair by straightening box-map images
//! and compares its nullity with the criterion and the closed-form relations.
//!
//! cargo run --example oracle_crosscheck -- 2,2,1,1,1,1 4,1^4

use hookhom::arith::Prime;
use hookhom::criterion::hom_dim_theorem;
use hookhom::homspace::{derived_relation_system, RelationMatrix};

fn main() -> hookhom::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let (lambda, hook) = match args.as_slice() {
        [l, h] => (l.parse()?, h.parse()?),
        _ => ("2,2,1,1,1,1".parse()?, "4,1^4".parse()?),
    };
    let matrix = RelationMatrix::assemble(&lambda, hook)?;
    println!(
        "Hom(Δ({lambda}), Δ({hook})): {} coefficients, {} relations from {} box maps",
        matrix.columns.len(),
        matrix.rows.len(),
        matrix.generators.len()
    );
    for p in [2, 3, 5, 7].map(Prime::new) {
        let p = p?;
        let oracle = matrix.solve(p);
        let derived = derived_relation_system(&lambda, hook, p)?;
        let theorem = hom_dim_theorem(&lambda, hook, p)?;
        println!(
            "  p={p}: oracle {}  relations {}  criterion {} [{}]",
            oracle.dim,
            derived.dim,
            theorem.dim,
            theorem.tag()
        );
    }
    Ok(())
}
