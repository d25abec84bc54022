//! Write SVG diagrams of the n = 4 and n = 6 constructions.
//!
//! cargo run --example render_svg -- /tmp/out

use std::path::PathBuf;

use magic_polygons::construct;
use magic_polygons::render::{render_svg_with, DEFAULT_CONFIG};

fn main() {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| ".".into()));
    let config = DEFAULT_CONFIG;
    for n in [4, 6] {
        let svg = render_svg_with(&construct(n).unwrap(), &config).unwrap();
        let path = dir.join(format!("magic-{n}.svg"));
        std::fs::write(&path, svg).unwrap();
        println!("wrote {}", path.display());
    }
}
