//! Construction-expression grammar for the oracle.
//!
//! ```text
//! expr := "so" "(" nat ")" | "su" "(" nat ")" | "u" "(" nat ")"
//!       | "sp" "(" nat ")" | "u1" "(" int ")" | "spin" "(" nat ")" | "g2"
//!       | "adjoint" "(" expr ")"
//!       | "sym2" "(" expr ")" | "alt2" "(" expr ")" | "alt3" "(" expr ")"
//!       | "symk" "(" expr "," nat ")"
//!       | "traceless" "(" expr ")" | "dualize" "(" expr ")"
//!       | "tensorR" "(" expr "," expr ")" | "tensorC" "(" expr "," expr ")"
//!       | "tensorH" "(" expr "," expr ")" | "oplus" "(" expr "," expr ")"
//!       | "realify" "(" expr ")" | "realform" "(" expr ")"
//! ```
//!
//! `traceless` removes the invariant contraction summand: the trivial line of
//! `sym2(so(n))` or `alt2(sp(n))`, and the vector summand of `alt3(sp(n))`.
//! If the top-level value is complex it is realified.  Exceptional group
//! actions other than G2 and Spin(n), n <= 17, are signalled as unsupported.

use super::complexrep::{alt3_primitive_sp, alt_power, sym_power, ComplexRep};
use super::{BuildError, LinearRep};
use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    So(usize),
    Su(usize),
    U(usize),
    Sp(usize),
    U1(i64),
    Spin(usize),
    G2,
    Adjoint(Box<Expr>),
    Sym2(Box<Expr>),
    Alt2(Box<Expr>),
    Alt3(Box<Expr>),
    SymK(Box<Expr>, u32),
    Traceless(Box<Expr>),
    Dualize(Box<Expr>),
    TensorR(Box<Expr>, Box<Expr>),
    TensorC(Box<Expr>, Box<Expr>),
    TensorH(Box<Expr>, Box<Expr>),
    Oplus(Box<Expr>, Box<Expr>),
    Realify(Box<Expr>),
    RealForm(Box<Expr>),
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::So(n) => write!(f, "so({n})"),
            Expr::Su(n) => write!(f, "su({n})"),
            Expr::U(n) => write!(f, "u({n})"),
            Expr::Sp(n) => write!(f, "sp({n})"),
            Expr::U1(c) => write!(f, "u1({c})"),
            Expr::Spin(n) => write!(f, "spin({n})"),
            Expr::G2 => write!(f, "g2"),
            Expr::Adjoint(e) => write!(f, "adjoint({e})"),
            Expr::Sym2(e) => write!(f, "sym2({e})"),
            Expr::Alt2(e) => write!(f, "alt2({e})"),
            Expr::Alt3(e) => write!(f, "alt3({e})"),
            Expr::SymK(e, k) => write!(f, "symk({e},{k})"),
            Expr::Traceless(e) => write!(f, "traceless({e})"),
            Expr::Dualize(e) => write!(f, "dualize({e})"),
            Expr::TensorR(a, b) => write!(f, "tensorR({a},{b})"),
            Expr::TensorC(a, b) => write!(f, "tensorC({a},{b})"),
            Expr::TensorH(a, b) => write!(f, "tensorH({a},{b})"),
            Expr::Oplus(a, b) => write!(f, "oplus({a},{b})"),
            Expr::Realify(e) => write!(f, "realify({e})"),
            Expr::RealForm(e) => write!(f, "realform({e})"),
        }
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err(&self, msg: &str) -> BuildError {
        BuildError::Parse { pos: self.pos, msg: msg.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src.as_bytes()[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.as_bytes().get(self.pos).copied()
    }

    fn expect(&mut self, ch: u8) -> Result<(), BuildError> {
        if self.peek() == Some(ch) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(&format!("expected '{}'", ch as char)))
        }
    }

    fn ident(&mut self) -> Result<String, BuildError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() {
            let b = self.src.as_bytes()[self.pos];
            if b.is_ascii_alphanumeric() {
                self.pos += 1;
            } else {
                break;
            }
        }
        if start == self.pos {
            Err(self.err("expected identifier"))
        } else {
            Ok(self.src[start..self.pos].to_string())
        }
    }

    fn int(&mut self) -> Result<i64, BuildError> {
        self.skip_ws();
        let start = self.pos;
        if self.peek() == Some(b'-') {
            self.pos += 1;
        }
        while self.pos < self.src.len() && self.src.as_bytes()[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        self.src[start..self.pos].parse().map_err(|_| self.err("expected integer"))
    }

    fn expr(&mut self) -> Result<Expr, BuildError> {
        let name = self.ident()?;
        let unary = |p: &mut Parser<'a>| -> Result<Box<Expr>, BuildError> {
            p.expect(b'(')?;
            let e = p.expr()?;
            p.expect(b')')?;
            Ok(Box::new(e))
        };
        let binary = |p: &mut Parser<'a>| -> Result<(Box<Expr>, Box<Expr>), BuildError> {
            p.expect(b'(')?;
            let a = p.expr()?;
            p.expect(b',')?;
            let b = p.expr()?;
            p.expect(b')')?;
            Ok((Box::new(a), Box::new(b)))
        };
        let nat_arg = |p: &mut Parser<'a>| -> Result<usize, BuildError> {
            p.expect(b'(')?;
            let n = p.int()?;
            p.expect(b')')?;
            if n < 0 {
                Err(p.err("expected non-negative size"))
            } else {
                Ok(n as usize)
            }
        };
        Ok(match name.as_str() {
            "so" => Expr::So(nat_arg(self)?),
            "su" => Expr::Su(nat_arg(self)?),
            "u" => Expr::U(nat_arg(self)?),
            "sp" => Expr::Sp(nat_arg(self)?),
            "u1" => {
                self.expect(b'(')?;
                let c = self.int()?;
                self.expect(b')')?;
                Expr::U1(c)
            }
            "spin" => Expr::Spin(nat_arg(self)?),
            "g2" => Expr::G2,
            "adjoint" => Expr::Adjoint(unary(self)?),
            "sym2" => Expr::Sym2(unary(self)?),
            "alt2" => Expr::Alt2(unary(self)?),
            "alt3" => Expr::Alt3(unary(self)?),
            "symk" => {
                self.expect(b'(')?;
                let e = self.expr()?;
                self.expect(b',')?;
                let k = self.int()?;
                self.expect(b')')?;
                if !(0..=64).contains(&k) {
                    return Err(self.err("symk power out of range"));
                }
                Expr::SymK(Box::new(e), k as u32)
            }
            "traceless" => Expr::Traceless(unary(self)?),
            "dualize" => Expr::Dualize(unary(self)?),
            "tensorR" => {
                let (a, b) = binary(self)?;
                Expr::TensorR(a, b)
            }
            "tensorC" => {
                let (a, b) = binary(self)?;
                Expr::TensorC(a, b)
            }
            "tensorH" => {
                let (a, b) = binary(self)?;
                Expr::TensorH(a, b)
            }
            "oplus" => {
                let (a, b) = binary(self)?;
                Expr::Oplus(a, b)
            }
            "realify" => Expr::Realify(unary(self)?),
            "realform" => Expr::RealForm(unary(self)?),
            other => return Err(self.err(&format!("unknown constructor {other:?}"))),
        })
    }
}

impl Expr {
    pub fn parse(src: &str) -> Result<Expr, BuildError> {
        let mut p = Parser { src, pos: 0 };
        let e = p.expr()?;
        p.skip_ws();
        if p.pos != src.len() {
            return Err(p.err("trailing input"));
        }
        Ok(e)
    }
}

enum Built {
    C(ComplexRep),
    R(LinearRep),
}

impl Built {
    fn realified(self) -> LinearRep {
        match self {
            Built::C(c) => c.realify(),
            Built::R(r) => r,
        }
    }
}

fn build_inner(e: &Expr) -> Result<Built, BuildError> {
    Ok(match e {
        Expr::So(n) => {
            if *n == 2 {
                Built::R(super::so2_circle())
            } else {
                Built::R(super::so_vector(*n))
            }
        }
        Expr::Su(n) => {
            if *n < 2 {
                return Err(BuildError::Unsupported("su(n) needs n >= 2".into()));
            }
            Built::C(ComplexRep::su_std(*n))
        }
        Expr::U(n) => {
            if *n < 1 {
                return Err(BuildError::Unsupported("u(n) needs n >= 1".into()));
            }
            Built::C(ComplexRep::u_std(*n))
        }
        Expr::Sp(n) => {
            if *n < 1 {
                return Err(BuildError::Unsupported("sp(n) needs n >= 1".into()));
            }
            Built::C(ComplexRep::sp_std(*n))
        }
        Expr::U1(c) => Built::C(ComplexRep::u1(*c)),
        Expr::Spin(n) => Built::R(super::spin_rep(*n)?),
        Expr::G2 => Built::R(super::g2_rep()),
        Expr::Adjoint(x) => {
            let r = build_inner(x)?.realified();
            Built::R(super::adjoint_of(&r)?)
        }
        Expr::Sym2(x) => match build_inner(x)? {
            Built::C(c) => Built::C(sym_power(&c, 2)),
            Built::R(r) => Built::R(super::sym2_real(&r)),
        },
        Expr::Alt2(x) => match build_inner(x)? {
            Built::C(c) => Built::C(alt_power(&c, 2)),
            Built::R(r) => Built::R(super::alt2_real(&r)),
        },
        Expr::Alt3(x) => match build_inner(x)? {
            Built::C(c) => Built::C(alt_power(&c, 3)),
            Built::R(_) => {
                return Err(BuildError::Unsupported(
                    "alt3 of a real-layer representation".into(),
                ))
            }
        },
        Expr::SymK(x, k) => match build_inner(x)? {
            Built::C(c) => Built::C(sym_power(&c, *k)),
            Built::R(_) => {
                return Err(BuildError::Unsupported(
                    "symk of a real-layer representation".into(),
                ))
            }
        },
        Expr::Traceless(x) => {
            // The contracted alt3 of sp(n) removes the vector summand.
            if let Expr::Alt3(inner) = &**x {
                if let Expr::Sp(n) = &**inner {
                    return Ok(Built::C(alt3_primitive_sp(*n)));
                }
            }
            match build_inner(x)? {
                Built::C(c) => Built::C(c.minus_trivial()),
                Built::R(r) => Built::R(super::traceless_real(&r)?),
            }
        }
        Expr::Dualize(x) => match build_inner(x)? {
            Built::C(c) => Built::C(c.dual()),
            Built::R(r) => {
                let gens = r.gens.iter().map(|g| g.transpose().neg()).collect();
                Built::R(LinearRep {
                    gens,
                    label: format!("dualize({})", r.label),
                    ..r
                })
            }
        },
        Expr::TensorR(a, b) => {
            let ra = build_inner(a)?.realified();
            let rb = build_inner(b)?.realified();
            Built::R(super::tensor_r(&ra, &rb))
        }
        Expr::TensorC(a, b) => match (build_inner(a)?, build_inner(b)?) {
            (Built::C(ca), Built::C(cb)) => Built::C(ComplexRep::tensor(&ca, &cb)),
            (x, y) => {
                // Circle times a real-layer module with complex structure.
                if let Expr::U1(c) = **a {
                    let rb = y.realified();
                    let _ = x;
                    return Ok(Built::R(super::circle_extend(&rb, c)?));
                }
                if let Expr::U1(c) = **b {
                    let ra = x.realified();
                    return Ok(Built::R(super::circle_extend(&ra, c)?));
                }
                let ra = x.realified();
                let rb = y.realified();
                Built::R(super::tensor_c_real(&ra, &rb)?)
            }
        },
        Expr::TensorH(a, b) => {
            if let (Expr::Sp(m), Expr::Sp(n)) = (&**a, &**b) {
                return Ok(Built::R(super::quaternion_matrix_space(*m, *n)));
            }
            let ra = build_inner(a)?.realified();
            let rb = build_inner(b)?.realified();
            Built::R(super::tensor_h_real(&ra, &rb)?)
        }
        Expr::Oplus(a, b) => {
            if a != b {
                return Err(BuildError::Incompatible(
                    "oplus supports two copies of the same representation".into(),
                ));
            }
            let ra = build_inner(a)?.realified();
            Built::R(super::double(&ra))
        }
        Expr::Realify(x) => Built::R(build_inner(x)?.realified()),
        Expr::RealForm(x) => {
            let r = build_inner(x)?.realified();
            Built::R(super::realform_real(&r)?)
        }
    })
}

/// Build the real representation described by the expression.  Complex-layer
/// results are realified.  Built representations are cached by their
/// canonical expression string.
pub fn build_rep(e: &Expr) -> Result<Arc<LinearRep>, BuildError> {
    static CACHE: OnceLock<Mutex<HashMap<String, Arc<LinearRep>>>> = OnceLock::new();
    let key = e.to_string();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(hit) = cache.lock().unwrap().get(&key) {
        return Ok(hit.clone());
    }
    let built = Arc::new(build_inner(e)?.realified());
    cache.lock().unwrap().insert(key, built.clone());
    Ok(built)
}

/// Parse and build in one step.
pub fn build_from_str(src: &str) -> Result<Arc<LinearRep>, BuildError> {
    build_rep(&Expr::parse(src)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numslice::{generic_cohom, OracleConfig};

    #[test]
    fn parse_roundtrip() {
        for s in [
            "tensorR(so(4),g2)",
            "tensorH(sp(1),symk(su(2),5))",
            "traceless(alt3(sp(3)))",
            "realform(symk(su(2),8))",
            "tensorC(u1(1),spin(11))",
            "oplus(so(3),so(3))",
        ] {
            let e = Expr::parse(s).unwrap();
            assert_eq!(e.to_string(), s);
        }
        assert!(Expr::parse("frobnicate(3)").is_err());
        assert!(Expr::parse("so(3) junk").is_err());
    }

    #[test]
    fn unsupported_exceptional_signalled() {
        assert!(matches!(
            super::super::spin_rep(18),
            Err(BuildError::Unsupported(_))
        ));
        assert!(Expr::parse("f4").is_err());
    }

    #[test]
    fn dims_and_counts() {
        let r = build_from_str("tensorR(so(4),g2)").unwrap();
        assert_eq!((r.space_dim, r.gens.len()), (28, 20));
        let r = build_from_str("spin(11)").unwrap();
        assert_eq!((r.space_dim, r.gens.len()), (64, 55));
        let r = build_from_str("realform(symk(su(2),8))").unwrap();
        assert_eq!((r.space_dim, r.gens.len()), (9, 3));
        let r = build_from_str("tensorH(sp(1),symk(su(2),5))").unwrap();
        assert_eq!((r.space_dim, r.gens.len()), (12, 6));
        let r = build_from_str("traceless(alt3(sp(3)))").unwrap();
        assert_eq!((r.space_dim, r.gens.len()), (28, 21));
    }

    #[test]
    fn trivial_rep_cohom_is_dimension() {
        // so(1) has no generators: R^1 with cohomogeneity 1.
        let r = build_from_str("so(1)").unwrap();
        let rep = generic_cohom(&r, &OracleConfig::default());
        assert_eq!(rep.cohom, 1);
    }
}
