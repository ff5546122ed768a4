use std::fmt;

use num_bigint::BigInt;
use setfam_sets::binomial;

use crate::params::Params;

/// `n*a + k*b + t*c + r*d + l*e + c0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Lin {
    pub n: i64,
    pub k: i64,
    pub t: i64,
    pub r: i64,
    pub l: i64,
    pub c: i64,
}

impl Lin {
    pub const fn konst(c: i64) -> Lin {
        Lin {
            n: 0,
            k: 0,
            t: 0,
            r: 0,
            l: 0,
            c,
        }
    }

    pub const fn nk(n: i64, k: i64, t: i64, c: i64) -> Lin {
        Lin {
            n,
            k,
            t,
            r: 0,
            l: 0,
            c,
        }
    }

    pub fn eval(&self, p: &Params) -> i64 {
        self.n * p.n as i64
            + self.k * p.k as i64
            + self.t * p.t as i64
            + self.r * p.r.unwrap_or(0) as i64
            + self.l * p.l.unwrap_or(0) as i64
            + self.c
    }
}

impl fmt::Display for Lin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        for (coef, name) in [
            (self.n, "n"),
            (self.k, "k"),
            (self.t, "t"),
            (self.r, "r"),
            (self.l, "l"),
        ] {
            if coef == 0 {
                continue;
            }
            if coef < 0 {
                out.push('-');
            } else if !out.is_empty() {
                out.push('+');
            }
            if coef.abs() != 1 {
                out.push_str(&coef.abs().to_string());
            }
            out.push_str(name);
        }
        if self.c != 0 || out.is_empty() {
            if self.c > 0 && !out.is_empty() {
                out.push('+');
            }
            out.push_str(&self.c.to_string());
        }
        f.write_str(&out)
    }
}

/// `coef * C(top, bot)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Term {
    pub coef: i64,
    pub top: Lin,
    pub bot: Lin,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Formula {
    pub terms: Vec<Term>,
    pub constant: i64,
}

/// One evaluated summand of a formula.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TermValue {
    pub symbolic: String,
    pub coef: i64,
    pub top: i64,
    pub bot: i64,
    pub value: BigInt,
}

impl Formula {
    pub fn eval(&self, p: &Params) -> BigInt {
        self.expand(p)
            .iter()
            .map(|t| &t.value * t.coef)
            .sum::<BigInt>()
            + self.constant
    }

    pub fn expand(&self, p: &Params) -> Vec<TermValue> {
        self.terms
            .iter()
            .map(|t| {
                let (top, bot) = (t.top.eval(p), t.bot.eval(p));
                TermValue {
                    symbolic: format!("C({},{})", t.top, t.bot),
                    coef: t.coef,
                    top,
                    bot,
                    value: BigInt::from(binomial(top, bot)),
                }
            })
            .collect()
    }
}

fn coef_prefix(first: bool, coef: i64) -> String {
    let sign = match (first, coef < 0) {
        (true, false) => "",
        (true, true) => "-",
        (false, false) => " + ",
        (false, true) => " - ",
    };
    if coef.abs() == 1 {
        sign.to_string()
    } else {
        format!("{sign}{}", coef.abs())
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.terms.iter().enumerate() {
            write!(f, "{}C({},{})", coef_prefix(i == 0, t.coef), t.top, t.bot)?;
        }
        match self.constant {
            0 => Ok(()),
            c if c > 0 => write!(f, " + {c}"),
            c => write!(f, " - {}", -c),
        }
    }
}

/// Renders `C(9,4) - C(5,4) + 1` for the given values.
pub fn render_numeric(terms: &[TermValue], constant: i64) -> String {
    let mut s = String::new();
    for (i, t) in terms.iter().enumerate() {
        s.push_str(&format!(
            "{}C({},{})",
            coef_prefix(i == 0, t.coef),
            t.top,
            t.bot
        ));
    }
    match constant {
        0 => {}
        c if c > 0 => s.push_str(&format!(" + {c}")),
        c => s.push_str(&format!(" - {}", -c)),
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lin_display() {
        assert_eq!(Lin::nk(1, -1, -1, -1).to_string(), "n-k-t-1");
        assert_eq!(Lin::nk(0, 1, 0, -1).to_string(), "k-1");
        assert_eq!(Lin::nk(1, -2, 0, 0).to_string(), "n-2k");
        assert_eq!(Lin::konst(2).to_string(), "2");
        assert_eq!(Lin::konst(0).to_string(), "0");
    }

    #[test]
    fn eval_and_render() {
        let f = Formula {
            terms: vec![
                Term {
                    coef: 1,
                    top: Lin::nk(1, 0, 0, 0),
                    bot: Lin::nk(0, 1, 0, 0),
                },
                Term {
                    coef: -1,
                    top: Lin::nk(1, -1, -1, 0),
                    bot: Lin::nk(0, 1, 0, 0),
                },
            ],
            constant: 1,
        };
        let p = Params::new(9, 3, 1);
        assert_eq!(f.eval(&p), BigInt::from(75));
        assert_eq!(f.to_string(), "C(n,k) - C(n-k-t,k) + 1");
        assert_eq!(
            render_numeric(&f.expand(&p), f.constant),
            "C(9,3) - C(5,3) + 1"
        );
    }
}
