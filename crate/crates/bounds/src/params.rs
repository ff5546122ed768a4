/// Parameters of a bound. `r` and `l` are used only by FM, `pair` only
/// by LEM52.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Params {
    pub n: usize,
    pub k: usize,
    pub t: usize,
    pub r: Option<usize>,
    pub l: Option<usize>,
    pub pair: Option<(usize, usize)>,
}

impl Params {
    pub const fn new(n: usize, k: usize, t: usize) -> Params {
        Params {
            n,
            k,
            t,
            r: None,
            l: None,
            pair: None,
        }
    }

    pub const fn with_rl(mut self, r: usize, l: usize) -> Params {
        self.r = Some(r);
        self.l = Some(l);
        self
    }

    pub const fn with_pair(mut self, x1: usize, x2: usize) -> Params {
        self.pair = Some((x1, x2));
        self
    }
}
