//! JSON round trip and field-level diagnostics.

use magic_polygons::construct;
use magic_polygons::document::LabelingDocument;

fn main() {
    let doc = LabelingDocument::from_labeling(&construct(4).unwrap()).unwrap();
    let text = doc.to_json();
    print!("{text}");
    assert_eq!(LabelingDocument::parse(&text).unwrap(), doc);

    let bad = r#"{"n": 4, "center": 0, "vertices": [2, 6, 8], "midpoints": [7, 1, 3, 10]}"#;
    match LabelingDocument::parse(bad) {
        Ok(_) => unreachable!(),
        Err(e) => println!("{e}"),
    }
}
