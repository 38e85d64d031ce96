//! Round-trips graph6 text and shows what the parser rejects.

use ihara_sectors::{encode_graph6, parse_graph6, Graph};

fn main() {
    let g = Graph::petersen();
    let text = encode_graph6(&g);
    println!("Petersen graph as graph6: {text}");
    let back = parse_graph6(&text).expect("own output parses");
    assert_eq!(back, g);

    for line in ["H?ABePt", ">>graph6<<Bw\n", ":Fa@x^", "Bz", "C~~"] {
        match parse_graph6(line) {
            Ok(g) => println!("{line:?}: n = {}, m = {}, edges {:?}", g.n(), g.m(), g.edges()),
            Err(e) => println!("{line:?}: {e}"),
        }
    }
}
