//! The criterion on a few pairs, then a map at p = 2 that does not factor
//! through Carter-Payne neighbours.
//!
//! cargo run --example hom_criterion -- 3,2,1 5,1 3

use hookhom::arith::Prime;
use hookhom::criterion::{carter_payne_adjacent, hom_dim, hom_dim_theorem, HomReport};
use hookhom::partitions::{Hook, Partition};

fn show(rep: &HomReport) {
    println!("Hom(Δ({}), Δ({})) at p={}: dim {} [{}]", rep.lambda, rep.hook, rep.p, rep.dim, rep.tag());
    for c in &rep.conditions {
        println!("    {:<28} {:>4}  {}", c.description, c.value, if c.divisible { "yes" } else { "no" });
    }
}

fn main() -> hookhom::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    if let [lambda, hook, p] = args.as_slice() {
        show(&hom_dim_theorem(&lambda.parse()?, hook.parse()?, p.parse()?)?);
        return Ok(());
    }

    let two = Prime::new(2)?;
    for (c, d) in [(2, 3), (2, 5), (4, 3), (4, 5)] {
        let source = Hook::new(c, d)?.to_partition();
        println!("source {source}");
        let far = Hook::new(c + 2, d - 2)?.to_partition();
        let mut near: Vec<Partition> = carter_payne_adjacent(&source)
            .into_iter()
            .filter(|mu| mu.part(1) <= c + 1 && mu.m() >= d as usize)
            .collect();
        near.insert(0, far);
        for target in near {
            let rep = hom_dim(&source, &target, two)?;
            println!("  -> {:<12} dim {} [{}]", target.to_string(), rep.dim, rep.tag());
        }
    }
    println!();
    show(&hom_dim_theorem(&"3,2,1".parse()?, "5,1".parse()?, Prime::new(3)?)?);
    show(&hom_dim_theorem(&"3,2".parse()?, "4,1".parse()?, Prime::new(3)?)?);
    Ok(())
}
