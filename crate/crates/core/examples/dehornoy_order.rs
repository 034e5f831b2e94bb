use std::cmp::Ordering;

use fdtc::braid::BraidWord;
use fdtc::dehornoy::{compare, handle_reduce, is_trivial, sigma_class};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let w = BraidWord::from_signed(3, &[1, 2, -1])?;
    println!("{w} reduces to {}", handle_reduce(&w)?);
    println!("class: {:?}", sigma_class(&w)?);

    let relation = BraidWord::from_signed(3, &[1, 2, 1, -2, -1, -2])?;
    println!("{relation} is trivial: {}", is_trivial(&relation)?);

    let a = BraidWord::from_signed(3, &[2])?;
    let b = BraidWord::from_signed(3, &[1, -2])?;
    let rel = match compare(&a, &b)? {
        Ordering::Less => "<",
        Ordering::Equal => "=",
        Ordering::Greater => ">",
    };
    println!("{a} {rel} {b}");
    Ok(())
}
