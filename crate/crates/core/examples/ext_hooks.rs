//! Integral Ext^1 between hooks, checked against Hom over GF(2), GF(3), GF(5), GF(7).
//!
//! cargo run --example ext_hooks -- 8

use hookhom::ext_classical::{ext1_cross_check, ext1_hooks, shifted_hook};
use hookhom::partitions::enumerate_hooks;

fn main() -> hookhom::Result<()> {
    let r_max: u32 = std::env::args().nth(1).map(|s| s.parse().expect("degree")).unwrap_or(7);
    for r in 3..=r_max {
        for h in enumerate_hooks(r) {
            for d in 2..=h.b() {
                let ext = ext1_hooks(h, d)?;
                let ok = ext1_cross_check(h, d)?;
                println!("Ext^1(Δ({h}), Δ({})) = {ext:<3} {}", shifted_hook(h, d)?, if ok { "" } else { "MISMATCH" });
            }
        }
    }
    Ok(())
}
