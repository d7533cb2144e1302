//! Text grammar for semigroups and ideals.
//!
//! ```text
//! semigroup := '<' int (',' int)* '>'
//!            | '{' item (',' item)* '}'       item := int | int '-' int | int '->'
//! ideal     := base ('^' int)?                base := 'm' | 'ideal(' int (',' int)* ')'
//! ```
//!
//! Whitespace is ignored and `→` may stand for `->`.

use crate::blowup::power;
use crate::error::{Error, Result};
use crate::ideal::ValueIdeal;
use crate::semigroup::NumericalSemigroup;

struct Cursor<'a> {
    chars: Vec<(usize, char)>,
    pos: usize,
    src: &'a str,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str) -> Self {
        let chars = src.char_indices().filter(|(_, c)| !c.is_whitespace()).collect();
        Cursor { chars, pos: 0, src }
    }

    fn offset(&self) -> usize {
        self.chars.get(self.pos).map_or(self.src.len(), |&(i, _)| i)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Syntax { pos: self.offset(), msg: msg.into() })
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn eat_str(&mut self, s: &str) -> bool {
        let n = s.chars().count();
        let ok = self.chars.len() >= self.pos + n
            && self.chars[self.pos..self.pos + n].iter().map(|&(_, c)| c).eq(s.chars());
        if ok {
            self.pos += n;
        }
        ok
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            self.err(format!("expected '{c}'"))
        }
    }

    fn eat_arrow(&mut self) -> bool {
        self.eat_str("->") || self.eat('→')
    }

    fn int(&mut self) -> Result<i64> {
        let start = self.pos;
        let neg = self.eat('-');
        let digits_start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == digits_start {
            self.pos = start;
            return self.err("expected an integer");
        }
        let text: String = self.chars[digits_start..self.pos].iter().map(|&(_, c)| c).collect();
        match text.parse::<i64>() {
            Ok(v) => Ok(if neg { -v } else { v }),
            Err(_) => {
                self.pos = start;
                self.err("integer out of range")
            }
        }
    }

    fn int_list(&mut self, close: char) -> Result<Vec<i64>> {
        let mut out = vec![self.int()?];
        while self.eat(',') {
            out.push(self.int()?);
        }
        self.expect(close)?;
        Ok(out)
    }

    fn finish(&self) -> Result<()> {
        if self.pos == self.chars.len() {
            Ok(())
        } else {
            self.err("unexpected trailing input")
        }
    }
}

/// Parses `<g1,...,gk>` or `{e1,a-b,...,x->}`.
pub fn parse_semigroup(text: &str) -> Result<NumericalSemigroup> {
    let mut cur = Cursor::new(text);
    let s = if cur.eat('<') {
        let gens = cur.int_list('>')?;
        NumericalSemigroup::from_generators(&gens)?
    } else if cur.eat('{') {
        let mut members = Vec::new();
        let mut arrow = None;
        loop {
            if arrow.is_some() {
                return cur.err("nothing may follow the '->' item");
            }
            let a = cur.int()?;
            if cur.eat_arrow() {
                arrow = Some(a);
            } else if cur.eat('-') {
                let b = cur.int()?;
                if b < a {
                    return cur.err(format!("empty range {a}-{b}"));
                }
                members.extend(a..=b);
            } else {
                members.push(a);
            }
            if !cur.eat(',') {
                break;
            }
        }
        cur.expect('}')?;
        let Some(arrow) = arrow else {
            return cur.err("explicit semigroup needs a final 'x->' item");
        };
        if let Some(&big) = members.iter().find(|&&z| z > arrow) {
            return Err(Error::Syntax { pos: 0, msg: format!("member {big} lies beyond the arrow at {arrow}") });
        }
        NumericalSemigroup::from_explicit(&members, arrow)?
    } else {
        return cur.err("expected '<' or '{'");
    };
    cur.finish()?;
    Ok(s)
}

/// Parses `m`, `m^k`, `ideal(v1,...)` or `ideal(v1,...)^k` over `s`.
pub fn parse_ideal(s: &NumericalSemigroup, text: &str) -> Result<ValueIdeal> {
    let mut cur = Cursor::new(text);
    let base = if cur.eat_str("ideal(") {
        let vals = cur.int_list(')')?;
        ValueIdeal::from_generators(s, &vals)?
    } else if cur.eat('m') {
        ValueIdeal::maximal(s)
    } else {
        return cur.err("expected 'm' or 'ideal('");
    };
    let out = if cur.eat('^') {
        let k = cur.int()?;
        if !(0..=u32::MAX as i64).contains(&k) {
            return cur.err("exponent must be a nonnegative integer");
        }
        power(&base, k as u32)
    } else {
        base
    };
    cur.finish()?;
    Ok(out)
}

/// Canonical rendering used in reports: the explicit form.
pub fn render_semigroup(s: &NumericalSemigroup) -> String {
    s.explicit_notation()
}

/// `ideal(...)` by minimal generators.
pub fn render_ideal(e: &ValueIdeal) -> String {
    e.generator_notation()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators_and_explicit_forms() {
        let a = parse_semigroup("<7, 8,12,13,18>").unwrap();
        let b = parse_semigroup("{0,7,8,12-16,18->}").unwrap();
        assert_eq!(a, b);
        assert_eq!(parse_semigroup("{0,7,8,12-16,18→}").unwrap(), a);
        let c = parse_semigroup("{0,5,10,11,12,15,16,17,19->}").unwrap();
        assert_eq!(c.min_generators(), &[5, 11, 12, 19]);
        let d = parse_semigroup("{0,30-32,35->}").unwrap();
        assert_eq!(d.conductor(), 35);
    }

    #[test]
    fn round_trips() {
        for text in ["{0,7,8,12-16,18->}", "{0->}", "{0,2->}", "{0,10,12,20->}"] {
            let s = parse_semigroup(text).unwrap();
            assert_eq!(render_semigroup(&s), text);
            assert_eq!(parse_semigroup(&s.generator_notation()).unwrap(), s);
        }
        let s = parse_semigroup("{0,10,12,20->}").unwrap();
        let e = parse_ideal(&s, "ideal(10,12)").unwrap();
        assert_eq!(render_ideal(&e), "ideal(10,12)");
        assert_eq!(parse_ideal(&s, &render_ideal(&e)).unwrap(), e);
    }

    #[test]
    fn ideals() {
        let s = parse_semigroup("<7,8,12,13,18>").unwrap();
        assert_eq!(parse_ideal(&s, "m^4").unwrap(), ValueIdeal::cofinite_from(&s, 28));
        assert_eq!(parse_ideal(&s, "m").unwrap(), ValueIdeal::maximal(&s));
        assert_eq!(parse_ideal(&s, "m^0").unwrap(), ValueIdeal::whole(&s));
    }

    #[test]
    fn syntax_errors_carry_positions() {
        assert_eq!(
            parse_semigroup("<3,4"),
            Err(Error::Syntax { pos: 4, msg: "expected '>'".into() })
        );
        assert!(matches!(parse_semigroup("{0,2,3,5}"), Err(Error::Syntax { .. })));
        assert!(matches!(parse_semigroup("[1]"), Err(Error::Syntax { pos: 0, .. })));
        assert!(matches!(parse_semigroup("<3,4> x"), Err(Error::Syntax { pos: 6, .. })));
        let s = parse_semigroup("<3,4>").unwrap();
        assert!(matches!(parse_ideal(&s, "n"), Err(Error::Syntax { pos: 0, .. })));
        assert!(matches!(parse_ideal(&s, "m^-1"), Err(Error::Syntax { .. })));
    }

    #[test]
    fn domain_errors_pass_through() {
        assert_eq!(parse_semigroup("{0,2,3,5->}"), Err(Error::NotClosed { a: 2, b: 2 }));
        assert_eq!(parse_semigroup("<4,6>"), Err(Error::NotCofinite(2)));
    }
}
