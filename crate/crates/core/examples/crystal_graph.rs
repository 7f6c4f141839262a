//! A slice of the crystal graph of B# around a root, as DOT.

use geocrystal::gyt::SharpElement;
use geocrystal::harness::cmd_graph;

fn main() {
    let root = SharpElement::from_vec(2, vec![2, 1, 3]).unwrap();
    let slice = cmd_graph(&root, 1, 4).unwrap();
    eprintln!("{} nodes, {} arcs", slice.nodes.len(), slice.arcs.len());
    print!("{}", slice.to_dot());
}
