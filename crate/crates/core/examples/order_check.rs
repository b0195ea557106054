use hessian_core::chars::natural_character;
use hessian_core::store::GroupStore;
use hessian_core::CycNum;

fn main() {
    let s = GroupStore::new(None);
    let g = s.g648().unwrap();
    let cs = s.g648_classes().unwrap();
    let h = s.hessian().unwrap();
    let t = s.g648_table().unwrap();
    let nat = natural_character(&g, &cs);
    // which reference column does each 648 class sit over?
    let ref_col_of_class: Vec<usize> = (0..cs.count())
        .map(|c| {
            let hc = h.classes.class_of[h.quotient.coset_of[cs.classes[c].rep]];
            h.match_report.class_of_ref_col.iter().position(|&x| x == hc).unwrap()
        })
        .collect();
    for col in 0..10 {
        let members: Vec<usize> = (0..cs.count()).filter(|&c| ref_col_of_class[c] == col).collect();
        let vals: Vec<String> = members.iter().map(|&c| nat.values[c].to_string()).collect();
        println!("ref col {col}: classes {members:?} nat values {vals:?}");
    }
    // faithful row count
    let v_class = {
        let center = s.scalar_center_648().unwrap();
        cs.class_of[center.elems[1]]
    };
    let faithful: Vec<usize> = (0..t.irreducibles.len())
        .filter(|&ri| t.irreducibles[ri].values[v_class] != t.irreducibles[ri].values[0])
        .collect();
    println!("faithful row count: {}", faithful.len());
    println!("hessian twisted: {}", h.match_report.twisted);
    let _ = CycNum::t();
}
