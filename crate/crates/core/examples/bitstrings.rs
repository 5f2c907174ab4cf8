//! Bit strings: parsing, transforms, pair checks and id tags.

use craftbench::{check_pair, id_encode, BitString, Mode, Transform};

fn main() -> craftbench::Result<()> {
    let s: BitString = "101110101".parse()?;
    let t: BitString = "1010".parse()?;
    println!("s = {s}, |s| = {}, ones = {}", s.len(), s.count_ones());
    println!("complement = {}", s.transform(Transform::Complement));
    println!("reverse    = {}", s.transform(Transform::Reverse));
    println!("palindrome: {}", s.is_palindrome());

    let head = s.substring(1, 4)?;
    println!(
        "{head} dominates {t}: {}",
        check_pair(&head, &t, Mode::Domination)?
    );
    println!(
        "{head} orthogonal to {t}: {}",
        check_pair(&head, &t, Mode::Orthogonality)?
    );

    for i in 1..=4 {
        println!("id({i}) with q = 2: {}", id_encode(i, 2)?);
    }
    Ok(())
}
