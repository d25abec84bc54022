//! Build the closed-form magic n-gon for a few even orders.
//!
//! cargo run --example construct -- 10

use magic_polygons::{construct, verify, LabelingDocument};

fn main() {
    let n: usize = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("n must be an integer"))
        .unwrap_or(8);

    match construct(n) {
        Ok(l) => {
            let r = verify(&l).unwrap();
            println!("n = {n}: magic = {}, sum = {:?}", r.is_magic, r.common_sum);
            print!("{}", LabelingDocument::from_labeling(&l).unwrap().to_json());
        }
        Err(e) => println!("n = {n}: {e}"),
    }
}
