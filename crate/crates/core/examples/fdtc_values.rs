use fdtc::braid::BraidWord;
use fdtc::fdtc::FdtcEngine;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let engine = FdtcEngine::default();
    for (n, text) in [(2, "s1"), (3, "s1 s2"), (3, "s1 s2 s1 s2 s1 s2"), (3, "-s2 -s1"), (3, "s1 -s2"), (4, "s1 s2 s3 s3 -s1")] {
        let w = BraidWord::parse(text, n)?;
        let v = engine.fdtc(&w, 12, 24)?;
        let rv = engine.right_veering_status(&v, &w)?;
        println!("B_{n} {text:<20} floor {:>2}  c = {v}  {rv:?}", engine.dehornoy_floor(&w)?);
    }
    Ok(())
}
