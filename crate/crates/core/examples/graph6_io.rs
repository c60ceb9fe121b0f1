//! Round trips through graph6 and plain edge lists.

use qindex::graph::families::petersen;
use qindex::graph::{decode_graph6, encode_graph6, parse_edge_list, read_graph6_lines, write_edge_list};

fn main() -> qindex::Result<()> {
    let p = petersen();
    let code = encode_graph6(&p);
    println!("Petersen as graph6: {code}");
    assert_eq!(decode_graph6(&code)?, p);

    let text = write_edge_list(&p);
    print!("as an edge list:\n{text}");
    assert_eq!(parse_edge_list(&text)?, p);

    let batch = read_graph6_lines("DQc\nC~\n@\n".as_bytes())?;
    for g in &batch {
        println!("{g}: n = {}, m = {}", g.order(), g.size());
    }

    match read_graph6_lines("DQc\nDQd\n".as_bytes()) {
        Err(e) => println!("rejected: {e}"),
        Ok(_) => unreachable!("nonzero padding must be rejected"),
    }
    Ok(())
}
