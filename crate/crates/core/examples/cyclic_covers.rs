use fdtc::cover::{boundary_connectivity, standard_cyclic, CoverSpec};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    println!(" n  d  chi  genus  boundaries");
    for n in 2..=5 {
        for d in 2..=4 {
            let g = standard_cyclic(n, d)?.geometry()?;
            let degrees: Vec<u64> = g.boundaries.iter().map(|b| b.degree).collect();
            assert_eq!(boundary_connectivity(n as u64, d as u64), (degrees.len() as u64, degrees[0]));
            println!("{n:>2} {d:>2} {:>4} {:>6}  {degrees:?}", g.euler_char, g.genus);
        }
    }

    let spec = CoverSpec::from_json(r#"{"n": 3, "degree": 3, "branch_perms": [[[1,2,3]], [[1,3,2]], [[1,2,3]]]}"#)?;
    let rep = spec.build()?;
    let g = rep.geometry()?;
    println!("custom cover: chi {}, fully ramified {}, {} boundary components", g.euler_char, rep.is_fully_ramified(), g.boundary_count());
    Ok(())
}
