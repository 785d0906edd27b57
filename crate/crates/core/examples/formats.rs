//! ECG text and JSON, both byte-stable on round trip.

use ecperm::{fixtures, io};

fn main() {
    let g = fixtures::rainbow_k3();
    let ecg = io::write_ecg(&g);
    let json = io::write_json(&g);
    print!("{ecg}");
    println!("{json}");
    assert_eq!(io::write_ecg(&io::read_graph(&ecg).unwrap()), ecg);
    assert_eq!(io::write_json(&io::read_graph(&json).unwrap()), json);

    match io::read_ecg("ecg 3 1\n0 1 1\n0 2 7\n1 2 1\n") {
        Ok(_) => unreachable!(),
        Err(e) => println!("error: {e}"),
    }
}
