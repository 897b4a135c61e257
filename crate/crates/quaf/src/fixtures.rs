//! Well-known example frameworks used throughout the documentation and
//! test suites. The `.apx` sources for these live in `fixtures/` at the
//! crate root and are parsed here so the shipped files cannot drift.

use crate::abstraction::Partition;
use crate::af::{ArgumentSet, ArgumentationFramework};
use crate::io::{parse, Format};

/// Five arguments about whether Joe hammered a nail into the table:
/// `a5` ("Joe has no arms") attacks `a3` ("Joe hammered the nail in"),
/// while `a3` and `a4` ("Joe plays golf regularly") attack `a5` back.
/// `a1` and `a2` are unrelated observations that nothing attacks.
pub fn jack_joe() -> ArgumentationFramework {
    jack_joe_unlabelled()
        .with_label("a1", "Joe does not like Jack")
        .unwrap()
        .with_label("a2", "there is a nail in the table")
        .unwrap()
        .with_label("a3", "Joe hammered the nail in")
        .unwrap()
        .with_label("a4", "Joe plays golf regularly")
        .unwrap()
        .with_label("a5", "Joe has no arms")
        .unwrap()
}

/// The same framework without display labels.
pub fn jack_joe_unlabelled() -> ArgumentationFramework {
    parse(include_str!("../fixtures/jack_joe.apx"), Format::Apx)
        .expect("bundled fixture must parse")
}

/// The standard clustering of the Jack-and-Joe framework: the three
/// pairwise-unrelated observations collapse into one block `AX`.
pub fn jack_joe_clusters() -> Partition {
    let af = jack_joe_unlabelled();
    Partition::new(
        &af,
        [
            ("AX".to_owned(), ArgumentSet::from_ids(["a1", "a2", "a4"])),
            ("B3".to_owned(), ArgumentSet::from_ids(["a3"])),
            ("B5".to_owned(), ArgumentSet::from_ids(["a5"])),
        ],
    )
    .expect("bundled partition must be valid")
}

/// A three-argument attack cycle `x -> y -> z -> x`; it has no stable
/// extension and its only preferred extension is empty.
pub fn three_cycle() -> ArgumentationFramework {
    parse(include_str!("../fixtures/three_cycle.apx"), Format::Apx)
        .expect("bundled fixture must parse")
}
