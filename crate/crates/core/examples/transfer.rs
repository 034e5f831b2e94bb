use fdtc::report::{cmd_transfer, Options};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for (n, d, braid) in [(3, 2, "s1 s2 s1 s2 s1 s2"), (4, 2, "s1 s2 s3"), (3, 3, "s1 s2"), (5, 3, "s1 -s2 s3 -s4")] {
        let r = cmd_transfer(braid, n, Some(d), None, &Options::default())?;
        println!("B_{n}, degree {d}: {braid}  c = {}", r.fdtc);
        for t in &r.transfer {
            println!("  boundary {}.{} (degree {}): c = {}", t.base_boundary, t.component, t.divisor, t.monodromy_fdtc);
        }
    }
    Ok(())
}
