//! The sector decomposition of the Hashimoto operator on K4: conjugating by
//! the symmetric/antisymmetric edge basis gives [[L, -M], [M^T, -S]].

use ihara_sectors::edge_space::OrientedEdgeSpace;
use ihara_sectors::linalg::ExactMatrix;
use ihara_sectors::Graph;

fn show(name: &str, m: &ExactMatrix) {
    println!("{name} =");
    for i in 0..m.rows() {
        let row: Vec<String> = (0..m.cols()).map(|j| format!("{:>3}", m.get(i, j).to_string())).collect();
        println!("  {}", row.join(""));
    }
}

fn main() {
    let g = Graph::complete(4);
    let es = OrientedEdgeSpace::new(&g);
    let b = es.sector_blocks();
    show("L (line-graph adjacency)", &b.l);
    show("S (signed line-graph adjacency)", &b.s);
    show("M = |D|^T D (lexicographic gauge)", &b.m);
    show("U^T T U", &es.sector_form());
    es.verify_sector_identity().expect("sector identity");
    es.verify_cross_antisymmetry().expect("antisymmetric coupling");
    println!("U^T T U = [[L, -M], [M^T, -S]] holds exactly");
}
