//! Example presentations shipped with the crate.

pub const FREE2: &str = include_str!("../presets/FREE2.pgk");
pub const B3: &str = include_str!("../presets/B3.pgk");
pub const B4: &str = include_str!("../presets/B4.pgk");
pub const B3B3: &str = include_str!("../presets/B3B3.pgk");
pub const RA2: &str = include_str!("../presets/RA2.pgk");

pub const ALL: [(&str, &str); 5] = [
    ("FREE2", FREE2),
    ("B3", B3),
    ("B4", B4),
    ("B3B3", B3B3),
    ("RA2", RA2),
];

pub fn lookup(name: &str) -> Option<&'static str> {
    ALL.iter()
        .find(|(n, _)| n.eq_ignore_ascii_case(name))
        .map(|&(_, text)| text)
}
