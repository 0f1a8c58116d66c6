//! The eight reference matrices F1..F8, embedded at compile time.

use crate::document::MatrixDocument;

const FILES: [(&str, &str); 8] = [
    ("F1", include_str!("../corpus/f1.json")),
    ("F2", include_str!("../corpus/f2.json")),
    ("F3", include_str!("../corpus/f3.json")),
    ("F4", include_str!("../corpus/f4.json")),
    ("F5", include_str!("../corpus/f5.json")),
    ("F6", include_str!("../corpus/f6.json")),
    ("F7", include_str!("../corpus/f7.json")),
    ("F8", include_str!("../corpus/f8.json")),
];

#[derive(Clone, Debug)]
pub struct CorpusCase {
    pub name: String,
    pub document: MatrixDocument,
}

/// Raw file contents by case name.
pub fn appendix_sources() -> &'static [(&'static str, &'static str)] {
    &FILES
}

pub fn appendix() -> Vec<CorpusCase> {
    FILES
        .iter()
        .map(|(name, text)| CorpusCase {
            name: (*name).to_string(),
            document: MatrixDocument::from_json(text).expect("embedded corpus is valid"),
        })
        .collect()
}

/// Case by name, e.g. `"F4"`.
pub fn case(name: &str) -> Option<CorpusCase> {
    appendix().into_iter().find(|c| c.name == name)
}
