//! Fixed adjacency tables of the short blocks. Vertices are named as in the
//! drawings; `r` is the left attachment of a middle block.

pub(super) struct Fixture {
    pub labels: &'static [&'static str],
    pub edges: &'static [(&'static str, &'static str)],
    pub left: Option<&'static str>,
    pub right: Option<&'static str>,
    pub cells: &'static [&'static [&'static str]],
}

pub(super) const M0: Fixture = Fixture {
    labels: &["r", "r1", "r2", "r3", "r4", "r5"],
    edges: &[
        ("r", "r1"),
        ("r", "r2"),
        ("r1", "r2"),
        ("r1", "r3"),
        ("r1", "r4"),
        ("r2", "r3"),
        ("r2", "r4"),
        ("r3", "r4"),
        ("r5", "r4"),
        ("r3", "r5"),
    ],
    left: Some("r"),
    right: Some("r5"),
    cells: &[&["r"], &["r1", "r2"], &["r3", "r4"], &["r5"]],
};

pub(super) const M1: Fixture = Fixture {
    labels: &["r", "r1", "r2", "r3", "r4", "r5", "r6", "r7"],
    edges: &[
        ("r", "r1"),
        ("r", "r2"),
        ("r5", "r6"),
        ("r1", "r2"),
        ("r1", "r3"),
        ("r1", "r4"),
        ("r2", "r3"),
        ("r2", "r4"),
        ("r3", "r6"),
        ("r4", "r5"),
        ("r5", "r3"),
        ("r4", "r6"),
        ("r5", "r7"),
        ("r7", "r6"),
    ],
    left: Some("r"),
    right: Some("r7"),
    cells: &[&["r"], &["r1", "r2"], &["r3", "r4"], &["r5", "r6"], &["r7"]],
};

pub(super) const M2: Fixture = Fixture {
    labels: &["r", "r1", "r2", "r3", "r4", "r5", "r6", "r7", "r8"],
    edges: &[
        ("r", "r2"),
        ("r1", "r"),
        ("r1", "r2"),
        ("r1", "r3"),
        ("r1", "r4"),
        ("r2", "r3"),
        ("r2", "r5"),
        ("r3", "r4"),
        ("r3", "r5"),
        ("r6", "r4"),
        ("r5", "r7"),
        ("r5", "r6"),
        ("r4", "r7"),
        ("r6", "r7"),
        ("r6", "r8"),
        ("r7", "r8"),
    ],
    left: Some("r"),
    right: Some("r8"),
    cells: &[&["r"], &["r1", "r2"], &["r3"], &["r4", "r5"], &["r6", "r7"], &["r8"]],
};

pub(super) const M3: Fixture = Fixture {
    labels: &["r", "r1", "r2", "r3", "r4", "r5", "r6"],
    edges: &[
        ("r", "r1"),
        ("r", "r2"),
        ("r1", "r2"),
        ("r1", "r3"),
        ("r1", "r4"),
        ("r2", "r3"),
        ("r2", "r5"),
        ("r3", "r4"),
        ("r3", "r5"),
        ("r5", "r4"),
        ("r6", "r5"),
        ("r6", "r4"),
    ],
    left: Some("r"),
    right: Some("r6"),
    cells: &[&["r"], &["r1", "r2"], &["r3"], &["r4", "r5"], &["r6"]],
};

pub(super) const D0: Fixture = Fixture {
    labels: &["r", "r1", "r2", "r3", "r4", "r5"],
    edges: &[
        ("r", "r1"),
        ("r", "r2"),
        ("r", "r3"),
        ("r", "r4"),
        ("r1", "r2"),
        ("r1", "r3"),
        ("r1", "r4"),
        ("r2", "r3"),
        ("r2", "r4"),
        ("r5", "r4"),
        ("r5", "r3"),
    ],
    left: None,
    right: Some("r5"),
    cells: &[&["r", "r1", "r2"], &["r3", "r4"], &["r5"]],
};

pub(super) const D1: Fixture = Fixture {
    labels: &["r1", "r2", "r3", "r4", "r5", "r6", "r7"],
    edges: &[
        ("r5", "r2"),
        ("r1", "r2"),
        ("r1", "r5"),
        ("r1", "r3"),
        ("r1", "r4"),
        ("r2", "r3"),
        ("r2", "r4"),
        ("r3", "r6"),
        ("r4", "r3"),
        ("r4", "r6"),
        ("r5", "r6"),
        ("r7", "r6"),
        ("r5", "r7"),
    ],
    left: None,
    right: Some("r7"),
    cells: &[&["r1", "r2", "r3", "r4"], &["r5", "r6"], &["r7"]],
};

pub(super) const D2: Fixture = Fixture {
    labels: &["r1", "r2", "r3", "r4", "r5", "r6", "r7", "r8"],
    edges: &[
        ("r5", "r2"),
        ("r1", "r2"),
        ("r1", "r5"),
        ("r1", "r3"),
        ("r1", "r4"),
        ("r2", "r3"),
        ("r2", "r4"),
        ("r3", "r6"),
        ("r4", "r3"),
        ("r4", "r7"),
        ("r5", "r7"),
        ("r5", "r6"),
        ("r6", "r7"),
        ("r7", "r8"),
        ("r6", "r8"),
    ],
    left: None,
    right: Some("r8"),
    cells: &[&["r1", "r2"], &["r3", "r4"], &["r5"], &["r6", "r7"], &["r8"]],
};

pub(super) const D3: Fixture = Fixture {
    labels: &["r1", "r2", "r3", "r4", "r5", "r6", "r7", "r8", "r9"],
    edges: &[
        ("r5", "r2"),
        ("r1", "r2"),
        ("r1", "r5"),
        ("r1", "r3"),
        ("r1", "r4"),
        ("r2", "r3"),
        ("r2", "r4"),
        ("r3", "r6"),
        ("r4", "r3"),
        ("r4", "r6"),
        ("r5", "r8"),
        ("r5", "r7"),
        ("r6", "r8"),
        ("r6", "r7"),
        ("r7", "r8"),
        ("r9", "r7"),
        ("r9", "r8"),
    ],
    left: None,
    right: Some("r9"),
    cells: &[&["r1", "r2", "r3", "r4"], &["r5", "r6"], &["r7", "r8"], &["r9"]],
};

pub(super) const D4: Fixture = Fixture {
    labels: &["r1", "r2", "r3", "r4", "r5", "r6", "r7", "r8", "r9", "r10"],
    edges: &[
        ("r1", "r2"),
        ("r1", "r3"),
        ("r1", "r4"),
        ("r1", "r5"),
        ("r2", "r3"),
        ("r2", "r4"),
        ("r2", "r5"),
        ("r3", "r4"),
        ("r3", "r5"),
        ("r6", "r4"),
        ("r5", "r7"),
        ("r6", "r7"),
        ("r6", "r8"),
        ("r6", "r9"),
        ("r8", "r7"),
        ("r7", "r9"),
        ("r8", "r9"),
        ("r8", "r10"),
        ("r9", "r10"),
    ],
    left: None,
    right: Some("r10"),
    cells: &[&["r1", "r2", "r3"], &["r4", "r5"], &["r6", "r7"], &["r8", "r9"], &["r10"]],
};
