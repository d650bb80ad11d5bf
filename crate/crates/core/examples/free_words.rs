//! Free and cyclic reduction, conjugacy, and normal forms in `Z/2 * Z/3`.

use reidemeister::words::{conjugate_in_free, normal_form_cyclic_product, normal_form_torus_type, CyclicOrders};
use reidemeister::Word;

fn main() {
    let w: Word = "a b B A c a A".parse().unwrap();
    println!("{}  ->  {}", w, w.free_reduce());

    let u: Word = "b a c A B".parse().unwrap();
    println!("cyclic core of {} is {}", u, u.cyclic_core());

    let (x, y): (Word, Word) = ("a b c".parse().unwrap(), "c a b".parse().unwrap());
    println!("{} ~ {}: {}", x, y, conjugate_in_free(&x, &y));

    // PSL(2, Z) as Z/2 * Z/3
    let orders = CyclicOrders(vec![2, 3]);
    let v: Word = "a a b b b b a b".parse().unwrap();
    println!("{} = {} in Z/2 * Z/3", v, normal_form_cyclic_product(&v, &orders));

    // trefoil group <a, b | a^2 = b^3>
    let t: Word = "a a a b".parse().unwrap();
    println!("{} = {} in <a, b | a^2 b^-3>", t, normal_form_torus_type(&t, 2, 3).unwrap());
}
