use fdtc::classifier::{Assertion, AssertionKind, GeometryType, Prong};
use fdtc::report::{cmd_classify, Options};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let assertions = vec![
        Assertion::user(AssertionKind::GeometryType { value: GeometryType::Hyperbolic }),
        Assertion::user(AssertionKind::PseudoAnosov),
        Assertion::user(AssertionKind::ProngData { prongs: vec![Prong { k: 7, p: 3 }] }),
    ];
    let braid = "s1 s2 s1 s2 s1 s2 s1 s2 s1 s2 s1 s2 s1 s2";
    let r = cmd_classify(braid, 3, Some(2), None, assertions, &Options::default())?;
    print!("{}", r.render_text());

    let r = cmd_classify("-s2 -s1", 3, Some(2), None, Vec::new(), &Options::default())?;
    for v in r.verdicts.iter().filter(|v| v.is_proved()) {
        println!("{:?}: {}", v.rule, v.conclusion);
    }
    Ok(())
}
