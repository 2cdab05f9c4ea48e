use quadcodes::squares::{self, SquareKind};
use std::time::Instant;

fn main() {
    let t = Instant::now();
    let c = squares::count_squares(4, SquareKind::Semimagic).unwrap();
    println!("semimagic(4) = {c} in {:.2?}", t.elapsed());
}
