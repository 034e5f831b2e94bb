use fdtc::braid::{full_twist, rotation, BraidWord};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let w = BraidWord::parse("s1 s2 -s1 s1 s3", 4)?;
    println!("{w}  (freely reduced, {} letters)", w.len());
    println!("permutation {}, {} components, exponent sum {}", w.permutation(), w.component_count(), w.exponent_sum());
    println!("inverse {}", w.invert());

    let t = full_twist(4)?;
    println!("full twist on 4 strands: {t}");
    println!("equals rotation^4: {}", t == rotation(4).power(4));
    Ok(())
}
