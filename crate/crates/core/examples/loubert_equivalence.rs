//! Compares the criterion with the Garnir-content classification for odd p.
//!
//! cargo run --example loubert_equivalence -- 9

use hookhom::arith::Prime;
use hookhom::loubert::{equivalence_check, loubert_decide, LoubertTag};
use hookhom::partitions::{enumerate_hooks, enumerate_partitions};

fn main() -> hookhom::Result<()> {
    let r_max: u32 = std::env::args().nth(1).map(|s| s.parse().expect("degree")).unwrap_or(9);
    for p in [3, 5, 7] {
        let p = Prime::new(p)?;
        let mut tally = [0usize; 3];
        let mut bad = 0;
        for r in 1..=r_max {
            bad += equivalence_check(r, p)?.len();
            for lambda in enumerate_partitions(r, r as usize) {
                for h in enumerate_hooks(r).into_iter().filter(|h| lambda.m() > h.b() as usize) {
                    match loubert_decide(&lambda, h, p)?.1.tag {
                        LoubertTag::I => tally[0] += 1,
                        LoubertTag::II => tally[1] += 1,
                        LoubertTag::III => tally[2] += 1,
                        LoubertTag::None => {}
                    }
                }
            }
        }
        println!("p={p}: templates (i) {} (ii) {} (iii) {}, disagreements {bad}", tally[0], tally[1], tally[2]);
    }
    let (dim, case) = loubert_decide(&"5,1,1,1,1".parse()?, "6,1^3".parse()?, Prime::new(3)?)?;
    println!("(5,1^4) -> (6,1^3) at p=3: dim {dim} via {:?}, n'={} a={:?} m'={}", case.tag, case.n_prime, case.a, case.m_prime);
    Ok(())
}
