//! Smith normal form of an integer matrix, checked against the minors.

use reidemeister::matrices::{elementary_divisors_via_minors, smith_normal_form};
use reidemeister::IntMatrix;

fn main() {
    let m = IntMatrix::from_i64_rows(3, 3, &[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]);
    let s = smith_normal_form(&m);
    let d: Vec<String> = s.diagonal.iter().map(|x| x.to_string()).collect();
    println!("rank {} divisors {}", s.rank, d.join(", "));
    println!("left · m · right = {:?}", s.left.mul(&m).mul(&s.right).to_i64_rows());

    let (via_minors, rank) = elementary_divisors_via_minors(&m).unwrap();
    let d: Vec<String> = via_minors.iter().map(|x| x.to_string()).collect();
    println!("from minors: rank {} divisors {}", rank, d.join(", "));
}
