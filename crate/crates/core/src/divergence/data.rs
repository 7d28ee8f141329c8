//! Firing lists, landing points and slopes for the exceptional affine
//! families and the F-tilde graphs.

/// Borrowed loop data with integer entries.
#[derive(Debug, Clone, Copy)]
pub(super) struct ParamDataRef {
    pub prefix: &'static [usize],
    pub landing: &'static [i64],
    pub slope: &'static [i64],
    pub cycle: &'static [usize],
    pub repeats: usize,
}

pub(super) const E7_W1: ParamDataRef = ParamDataRef {
    prefix: &[],
    landing: &[1, 0, 0, 0, 0, 0, 0],
    slope: &[2, 0, 0, -1, 0, 0, 0],
    cycle: &[
        1, 4, 5, 3, 2, 6, 5, 3, 4, 5, 6, 7, 6, 5, 3, 2, 4, 5, 3, 6, 5, 4,
    ],
    repeats: 1,
};

pub(super) const E7_W4: ParamDataRef = ParamDataRef {
    prefix: &[],
    landing: &[0, 0, 0, 1, 0, 0, 0],
    slope: &[-4, 0, 0, 2, 0, 0, 0],
    cycle: &[
        4, 5, 3, 2, 6, 5, 3, 4, 5, 6, 7, 6, 5, 3, 2, 4, 5, 3, 6, 5, 4, 1,
    ],
    repeats: 1,
};

pub(super) const E7_W5: ParamDataRef = ParamDataRef {
    prefix: &[],
    landing: &[0, 0, 0, 0, 1, 0, 0],
    slope: &[-6, 0, 0, -6, 6, 0, 0],
    cycle: &[
        5, 3, 2, 6, 5, 3, 4, 5, 6, 7, 6, 5, 3, 2, 4, 1, 5, 3, 4, 5, 6, 5, 3, 2, 4, 1, 5, 3, 4, 5,
        6, 7, 6, 5, 3, 2, 4, 1, 5, 3, 6, 5, 4, 1,
    ],
    repeats: 1,
};

pub(super) const E8_W1: ParamDataRef = ParamDataRef {
    prefix: &[],
    landing: &[1, 0, 0, 0, 0, 0, 0, 0],
    slope: &[2, 0, -1, 0, 0, 0, 0, 0],
    cycle: &[
        1, 3, 4, 5, 2, 6, 5, 4, 3, 7, 6, 5, 2, 4, 5, 6, 7, 8, 7, 6, 5, 2, 4, 3, 5, 4, 6, 5, 2, 7,
        6, 5, 4, 3,
    ],
    repeats: 1,
};

pub(super) const E8_W2: ParamDataRef = ParamDataRef {
    prefix: &[
        2, 5, 4, 3, 6, 5, 2, 4, 5, 6, 7, 6, 5, 2, 4, 3, 5, 4, 6, 5, 2, 8, 7, 6, 5, 2, 4, 3, 5, 4,
        6, 5, 2, 7, 6, 5, 4, 8, 7, 6, 5, 2, 1, 3, 4, 5,
    ],
    landing: &[0, 3, 0, 0, -4, 4, 0, 0],
    slope: &[-2, 2, 0, 0, -2, 2, 0, 0],
    cycle: &[
        2, 6, 5, 4, 3, 7, 6, 5, 2, 4, 5, 6, 7, 8, 7, 6, 5, 2, 4, 3, 5, 4, 6, 5, 2, 7, 6, 5, 4, 3,
        1, 3, 4, 5,
    ],
    repeats: 1,
};

pub(super) const E8_W3: ParamDataRef = ParamDataRef {
    prefix: &[],
    landing: &[0, 0, 1, 0, 0, 0, 0, 0],
    slope: &[-4, 0, 2, 0, 0, 0, 0, 0],
    cycle: &[
        3, 4, 5, 2, 6, 5, 4, 3, 7, 6, 5, 2, 4, 5, 6, 7, 8, 7, 6, 5, 2, 4, 3, 5, 4, 6, 5, 2, 7, 6,
        5, 4, 3, 1,
    ],
    repeats: 1,
};

pub(super) const E8_W4: ParamDataRef = ParamDataRef {
    prefix: &[
        4, 3, 5, 2, 4, 5, 6, 5, 2, 4, 3, 5, 4, 7, 6, 5, 2, 4, 3, 5, 4, 6, 5, 7, 6, 8, 7, 6, 5, 2,
        4, 3, 5, 4, 6, 5, 2, 7, 6, 5, 4, 3, 8, 7, 6, 5, 4, 1, 3,
    ],
    landing: &[0, 0, -6, 5, 0, 0, 0, 0],
    slope: &[-3, 0, -3, 3, 0, 0, 0, 0],
    cycle: &[
        4, 5, 2, 6, 5, 4, 3, 7, 6, 5, 2, 4, 5, 6, 7, 8, 7, 6, 5, 2, 4, 3, 5, 4, 6, 5, 2, 7, 6, 5,
        4, 3, 1, 3,
    ],
    repeats: 1,
};

pub(super) const E8_W5: ParamDataRef = ParamDataRef {
    prefix: &[
        5, 2, 4, 3, 5, 4, 6, 5, 2, 4, 3, 5, 4, 6, 5, 7, 6, 5, 2, 4, 3, 5, 4, 6, 5, 2, 7, 6, 5, 8,
        7, 6, 5, 2, 4, 3, 5, 4, 6, 5, 2, 7, 6, 5, 4, 3, 8, 7, 6, 5, 2, 4, 5, 1, 3, 4,
    ],
    landing: &[0, 0, 0, -8, 7, 0, 0, 0],
    slope: &[-4, 0, 0, -4, 4, 0, 0, 0],
    cycle: &[
        5, 2, 6, 5, 4, 3, 7, 6, 5, 2, 4, 5, 6, 7, 8, 7, 6, 5, 2, 4, 3, 5, 4, 6, 5, 2, 7, 6, 5, 4,
        3, 1, 3, 4,
    ],
    repeats: 1,
};

pub(super) const E9_W1: ParamDataRef = ParamDataRef {
    prefix: &[],
    landing: &[1, 0, 0, 0, 0, 0, 0, 0, 0],
    slope: &[2, 0, -1, 0, 0, 0, 0, 0, 0],
    cycle: &[
        1, 3, 4, 2, 5, 4, 3, 6, 5, 4, 2, 7, 6, 5, 4, 3, 8, 7, 6, 5, 4, 2, 9, 8, 7, 6, 5, 4, 3,
    ],
    repeats: 1,
};

pub(super) const E9_W2: ParamDataRef = ParamDataRef {
    prefix: &[],
    landing: &[0, 1, 0, 0, 0, 0, 0, 0, 0],
    slope: &[0, 3, 0, -1, 0, 0, -1, 0, 0],
    cycle: &[2, 4, 3, 1, 5, 4, 3, 6, 5, 4, 7, 6, 5, 8, 7, 6, 9, 8, 7],
    repeats: 2,
};

pub(super) const E9_W3: ParamDataRef = ParamDataRef {
    prefix: &[3, 1, 4, 3, 5, 4, 6, 5, 7, 6, 8, 7, 9, 8],
    landing: &[0, 2, 0, 0, 0, 0, 0, -1, 0],
    slope: &[0, 6, 0, -2, 0, 0, -2, 0, 0],
    cycle: &[2, 4, 3, 1, 5, 4, 3, 6, 5, 4, 7, 6, 5, 8, 7, 6, 9, 8, 7],
    repeats: 3,
};

pub(super) const E9_W4: ParamDataRef = ParamDataRef {
    prefix: &[],
    landing: &[0, 0, 0, 1, 0, 0, 0, 0, 0],
    slope: &[0, -3, 0, 2, 0, 0, -1, 0, 0],
    cycle: &[4, 3, 1, 5, 4, 3, 6, 5, 4, 7, 6, 5, 8, 7, 6, 9, 8, 7, 2],
    repeats: 1,
};

pub(super) const E9_W5: ParamDataRef = ParamDataRef {
    prefix: &[5, 4, 3, 1, 6, 5, 4, 3, 7, 6, 5, 4, 8, 7, 6, 5, 9, 8, 7, 6],
    landing: &[0, 3, 0, 0, 0, -1, 0, 0, 0],
    slope: &[0, 15, 0, -5, 0, 0, -5, 0, 0],
    cycle: &[2, 4, 3, 1, 5, 4, 3, 6, 5, 4, 7, 6, 5, 8, 7, 6, 9, 8, 7],
    repeats: 6,
};

pub(super) const E9_W6: ParamDataRef = ParamDataRef {
    prefix: &[6, 5, 4, 3, 1, 7, 6, 5, 4, 3, 8, 7, 6, 5, 4, 9, 8, 7, 6, 5],
    landing: &[0, 3, 0, 0, -1, 0, 0, 0, 0],
    slope: &[0, 12, 0, -4, 0, 0, -4, 0, 0],
    cycle: &[2, 4, 3, 1, 5, 4, 3, 6, 5, 4, 7, 6, 5, 8, 7, 6, 9, 8, 7],
    repeats: 6,
};

pub(super) const E9_W7: ParamDataRef = ParamDataRef {
    prefix: &[7, 6, 5, 4, 3, 1, 8, 7, 6, 5, 4, 3, 9, 8, 7, 6, 5, 4],
    landing: &[0, 3, 0, -1, 0, 0, 0, 0, 0],
    slope: &[0, 3, 0, -1, 0, 0, -1, 0, 0],
    cycle: &[2, 4, 3, 1, 5, 4, 3, 6, 5, 4, 7, 6, 5, 8, 7, 6, 9, 8, 7],
    repeats: 2,
};

pub(super) const E9_W8: ParamDataRef = ParamDataRef {
    prefix: &[
        8, 7, 6, 5, 4, 3, 1, 9, 8, 7, 6, 5, 4, 3, 2, 4, 3, 1, 5, 4, 3, 6, 5, 4, 7, 6, 5, 8, 7, 6,
        9, 8, 7, 2, 4, 3, 1, 5, 4, 3, 6, 5, 4, 7, 6, 5, 8, 7, 6,
    ],
    landing: &[0, 4, 0, -1, 0, -1, 0, 0, 0],
    slope: &[0, 6, 0, -2, 0, 0, -2, 0, 0],
    cycle: &[2, 4, 3, 1, 5, 4, 3, 6, 5, 4, 7, 6, 5, 8, 7, 6, 9, 8, 7],
    repeats: 6,
};

pub(super) const E9_W9: ParamDataRef = ParamDataRef {
    prefix: &[],
    landing: &[0, 0, 0, 0, 0, 0, 0, 0, 1],
    slope: &[0, 0, 0, 0, 0, 0, 0, -1, 2],
    cycle: &[
        9, 8, 7, 6, 5, 4, 2, 3, 1, 4, 3, 5, 4, 2, 6, 5, 4, 3, 1, 7, 6, 5, 4, 2, 3, 4, 5, 6, 7, 8,
        7, 6, 5, 4, 2, 3, 1, 4, 3, 5, 4, 2, 6, 5, 4, 3, 1, 7, 6, 5, 4, 2, 3, 4, 5, 6, 7, 8,
    ],
    repeats: 1,
};

pub(super) const FA_W1: ParamDataRef = ParamDataRef {
    prefix: &[],
    landing: &[1, 0, 0, 0, 0],
    slope: &[2, -1, 0, 0, 0],
    cycle: &[1, 2, 3, 2, 4, 3, 2, 5, 4, 3, 2],
    repeats: 1,
};

pub(super) const FA_W2: ParamDataRef = ParamDataRef {
    prefix: &[],
    landing: &[0, 1, 0, 0, 0],
    slope: &[-2, 4, -2, -2, -2],
    cycle: &[2, 3, 4, 5, 1, 2, 3, 4, 5, 1, 2, 3, 4, 5, 1],
    repeats: 1,
};

pub(super) const FA_W3: ParamDataRef = ParamDataRef {
    prefix: &[],
    landing: &[0, 0, 1, 0, 0],
    slope: &[-1, -1, 3, -1, -1],
    cycle: &[3, 4, 5, 2, 1, 3, 4, 5, 2, 1],
    repeats: 1,
};

pub(super) const FA_W4: ParamDataRef = ParamDataRef {
    prefix: &[],
    landing: &[0, 0, 0, 1, 0],
    slope: &[0, 0, -1, 2, -1],
    cycle: &[4, 3, 2, 1, 3, 2, 3, 5],
    repeats: 1,
};

pub(super) const FA_W5: ParamDataRef = ParamDataRef {
    prefix: &[],
    landing: &[0, 0, 0, 0, 1],
    slope: &[0, 0, 0, -1, 2],
    cycle: &[5, 4, 3, 2, 3, 4, 1, 2, 3, 4, 2, 3, 1, 2, 3, 4],
    repeats: 1,
};

pub(super) const FB_W1: ParamDataRef = ParamDataRef {
    prefix: &[],
    landing: &[1, 0, 0, 0, 0],
    slope: &[2, -1, 0, 0, 0],
    cycle: &[1, 2, 3, 2, 4, 3, 2, 5, 4, 3, 2],
    repeats: 1,
};

pub(super) const FB_W2: ParamDataRef = ParamDataRef {
    prefix: &[],
    landing: &[0, 1, 0, 0, 0],
    slope: &[-2, 4, -1, -1, -1],
    cycle: &[2, 3, 4, 5, 1, 2, 3, 4, 5, 1, 2, 3, 4, 5, 1],
    repeats: 1,
};

pub(super) const FB_W3: ParamDataRef = ParamDataRef {
    prefix: &[],
    landing: &[0, 0, 1, 0, 0],
    slope: &[-2, -2, 3, -1, -1],
    cycle: &[3, 4, 5, 2, 1, 3, 4, 5, 2, 1],
    repeats: 1,
};

pub(super) const FB_W4: ParamDataRef = ParamDataRef {
    prefix: &[],
    landing: &[0, 0, 0, 1, 0],
    slope: &[0, 0, 0, 2, -4],
    cycle: &[4, 3, 2, 3, 4, 1, 2, 3, 4, 2, 3, 1, 2, 3, 4, 5],
    repeats: 1,
};

pub(super) const FB_W5: ParamDataRef = ParamDataRef {
    prefix: &[],
    landing: &[0, 0, 0, 0, 1],
    slope: &[0, 0, 0, -1, 2],
    cycle: &[5, 4, 3, 2, 3, 4, 1, 2, 3, 4, 2, 3, 1, 2, 3, 4],
    repeats: 1,
};
