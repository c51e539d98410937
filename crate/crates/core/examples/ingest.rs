// Round-tripping configurations through the binary database format.

use std::io::Write;

use orchard::census::{ingest_db, write_db, TypeRecord};
use orchard::Configuration;

pub fn run_example() -> String {
    let configs = [
        Configuration::from_ints(&[(0, 0), (200, 0), (90, 150), (100, 40)]).unwrap(),
        Configuration::from_ints(&[(0, 0), (200, 10), (210, 190), (5, 180)]).unwrap(),
    ];
    let bytes = write_db(&configs, 1).unwrap();
    let mut file = tempfile::NamedTempFile::new().unwrap();
    file.write_all(&bytes).unwrap();
    let mut out = format!("{} bytes\n", bytes.len());
    for c in ingest_db(file.path(), 4, 1).unwrap() {
        out += &TypeRecord::from_configuration(&c.unwrap()).unwrap().to_line();
        out.push('\n');
    }
    out
}

#[allow(dead_code)]
fn main() {
    print!("{}", run_example());
}
