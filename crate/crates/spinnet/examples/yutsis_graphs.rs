//! The two graph families, their invariants and the insertion moves.

use spinnet::yutsis::{
    canonical_form, cartwheel_type1, euler_characteristic, girth, hamiltonian_cycle, insert_bowtie, insert_square,
    isomorphic, nontrivial_cut3, petersen, prism_type2, to_dot, BowtieLabels, SquareLabels,
};

fn main() {
    for n in 3..=6 {
        let c = cartwheel_type1(n).unwrap();
        let p = prism_type2(n).unwrap();
        println!(
            "n={n}: cartwheel girth {:?} chi {}, prism girth {:?} chi {}, hamiltonian {:?}/{:?}",
            girth(&c),
            euler_characteristic(&c).unwrap().chi,
            girth(&p),
            euler_characteristic(&p).unwrap().chi,
            hamiltonian_cycle(&c).map(|h| h.len()),
            hamiltonian_cycle(&p).map(|h| h.len()),
        );
    }
    println!("petersen hamiltonian: {:?}", hamiltonian_cycle(&petersen()));

    let p = prism_type2(3).unwrap();
    let cut = nontrivial_cut3(&p).unwrap().map(|e| p.edges[e].label.clone());
    println!("prism(3) separates along {cut:?}");

    let labels = SquareLabels { e1_near_u: "j4".into(), e2_near_u: "k4".into(), rung: "l4".into() };
    let sq = insert_square(&p, p.edge_by_label("j1").unwrap(), p.edge_by_label("k1").unwrap(), &labels).unwrap();
    println!("square insertion gives prism(4): {}", isomorphic(&sq, &prism_type2(4).unwrap()).unwrap());

    let c = cartwheel_type1(3).unwrap();
    let labels =
        BowtieLabels { flank1_near: "j4".into(), flank2_near: "k4".into(), ray: "l4".into(), crossing: "l3".into() };
    let e = |s: &str| c.edge_by_label(s).unwrap();
    let bt = insert_bowtie(&c, e("l3"), e("j3"), e("k3"), &labels).unwrap();
    println!("bowtie insertion gives cartwheel(4): {}", isomorphic(&bt, &cartwheel_type1(4).unwrap()).unwrap());
    println!("canonical form size: {}", canonical_form(&bt).unwrap().edges.len());
    print!("{}", to_dot(&c));
}
