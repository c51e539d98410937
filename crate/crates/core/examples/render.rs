// Drawing a two-coloured configuration as SVG.
//
// `cargo run --example render > orchard.svg`

use orchard::families::{Family, FamilySpec};
use orchard::render::{render_svg, RenderStyle};

pub fn run_example() -> String {
    let c = FamilySpec::new(Family::PolygonMidpoints, 6).generate().unwrap();
    render_svg(&c, &RenderStyle::default()).unwrap()
}

#[allow(dead_code)]
fn main() {
    print!("{}", run_example());
}
