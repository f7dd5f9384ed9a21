//! Rewrites hook tableaux in the standard basis.
//!
//! cargo run --example straightening -- "3 1^(2)/2 1"

use hookhom::tableaux::{standard_basis_of_content, straighten, RawTableau, Strategy, Straightener};
use num_bigint::BigInt;

fn main() -> hookhom::Result<()> {
    let inputs: Vec<String> = {
        let args: Vec<String> = std::env::args().skip(1).collect();
        if args.is_empty() {
            ["2/1", "2^(2)/1", "1/1 2", "2 3/1 2", "1 2^(2)/1 3", "3^(2)/2 1"].map(String::from).to_vec()
        } else {
            args
        }
    };
    for s in &inputs {
        let raw: RawTableau = s.parse()?;
        let x = raw.normalize(BigInt::from(1));
        let out = straighten(&x);
        println!("{s:>14}  =  {out}");
        let rightmost = Straightener::new(Strategy::Rightmost).straighten(&x);
        assert_eq!(rightmost, out, "rewrite order changed the answer");
    }

    let h = "3,1,1".parse()?;
    let content = hookhom::partitions::Composition::new(vec![2, 1, 1, 1]);
    println!("\nstandard tableaux of shape {h} and content (2,1,1,1):");
    for t in standard_basis_of_content(h, &content) {
        println!("  {t}");
    }
    Ok(())
}
