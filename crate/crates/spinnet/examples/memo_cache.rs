//! Saving and reloading the 6j memo table.

use spinnet::recoupling::{nine_j_twice, SixJMemo};

fn main() {
    let memo = SixJMemo::global();
    let v = nine_j_twice([4, 6, 8, 5, 7, 6, 7, 9, 8]);
    println!("9j = {v}");
    println!("memo holds {} 6j values", memo.len());

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("sixj.memo");
    memo.save(&path).unwrap();
    let fresh = SixJMemo::new();
    let n = fresh.load(&path).unwrap();
    println!("reloaded {n} entries ({} bytes)", std::fs::metadata(&path).unwrap().len());
}
