//! Group expressions and evaluation of the free subgroup rank over them.
//!
//! Grammar (whitespace-insensitive, names case-insensitive):
//!
//! ```text
//! expr := term (('x' | '*') term)*          left-associative
//! term := atom ('^' INT)?
//! atom := descriptor | 'R^' INT | 'solvable' | 'Z/' INT | 'Z' | 'finite'
//!       | '(' expr ')' | 'ext(' expr ',' expr ',' mode ')' | 'fi(' expr ')'
//! mode := 'split' | 'central' | 'general'
//! ```
//!
//! `x` is the direct product and `*` the free product. `G^n` is the direct
//! product of `n` copies of `G` and is spliced into a surrounding `x` chain.
//! Syntax error offsets are 1-based byte positions.

use std::fmt;

use crate::error::{Error, Result};
use crate::realforms::{nu_simple_value, RealForm};
use crate::roots::{Family, RootSystemType};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SolvableKind {
    /// `R^n`.
    Euclidean(usize),
    /// The infinite cyclic group.
    Integers,
    Generic,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FiniteOrder {
    Known(u64),
    /// Finite of unknown order, at least 3.
    AtLeast3,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ExtensionMode {
    Split,
    Central,
    General,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum GroupExpr {
    SimpleLie(RealForm),
    Solvable(SolvableKind),
    Finite(FiniteOrder),
    DirectProduct(Vec<GroupExpr>),
    FreeProduct(Box<GroupExpr>, Box<GroupExpr>),
    Extension {
        kernel: Box<GroupExpr>,
        quotient: Box<GroupExpr>,
        mode: ExtensionMode,
    },
    /// A group containing `inner` with finite index.
    FiniteIndex(Box<GroupExpr>),
}

impl GroupExpr {
    pub fn power(self, n: usize) -> GroupExpr {
        assert!(n >= 1, "empty direct product");
        GroupExpr::DirectProduct(vec![self; n])
    }

    /// Simple Lie factors in left-to-right order.
    pub fn simple_factors(&self) -> Vec<RealForm> {
        let mut out = Vec::new();
        self.collect_simple(&mut out);
        out
    }

    fn collect_simple(&self, out: &mut Vec<RealForm>) {
        match self {
            GroupExpr::SimpleLie(d) => out.push(*d),
            GroupExpr::Solvable(_) | GroupExpr::Finite(_) => {}
            GroupExpr::DirectProduct(items) => items.iter().for_each(|e| e.collect_simple(out)),
            GroupExpr::FreeProduct(a, b) => {
                a.collect_simple(out);
                b.collect_simple(out);
            }
            GroupExpr::Extension {
                kernel, quotient, ..
            } => {
                kernel.collect_simple(out);
                quotient.collect_simple(out);
            }
            GroupExpr::FiniteIndex(inner) => inner.collect_simple(out),
        }
    }

    fn is_compound(&self) -> bool {
        matches!(
            self,
            GroupExpr::DirectProduct(_) | GroupExpr::FreeProduct(..)
        )
    }

    pub fn order(&self) -> Order {
        match self {
            GroupExpr::SimpleLie(_) => Order::Infinite,
            GroupExpr::Solvable(SolvableKind::Euclidean(0)) => Order::Exactly(1),
            GroupExpr::Solvable(SolvableKind::Generic) => Order::Unknown,
            GroupExpr::Solvable(_) => Order::Infinite,
            GroupExpr::Finite(FiniteOrder::Known(n)) => Order::Exactly(*n),
            GroupExpr::Finite(FiniteOrder::AtLeast3) => Order::AtLeast3,
            GroupExpr::DirectProduct(items) => items
                .iter()
                .map(GroupExpr::order)
                .fold(Order::Exactly(1), Order::product),
            GroupExpr::Extension {
                kernel, quotient, ..
            } => kernel.order().product(quotient.order()),
            GroupExpr::FreeProduct(a, b) => match (a.order(), b.order()) {
                (Order::Exactly(1), o) | (o, Order::Exactly(1)) => o,
                (x, y) if x.is_nontrivial() && y.is_nontrivial() => Order::Infinite,
                _ => Order::Unknown,
            },
            GroupExpr::FiniteIndex(inner) => match inner.order() {
                Order::Infinite => Order::Infinite,
                _ => Order::Unknown,
            },
        }
    }
}

/// What is known about the order of a group.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Order {
    Exactly(u64),
    AtLeast3,
    Infinite,
    Unknown,
}

impl Order {
    fn product(self, other: Order) -> Order {
        use Order::*;
        match (self, other) {
            (Infinite, _) | (_, Infinite) => Infinite,
            (Unknown, _) | (_, Unknown) => Unknown,
            (Exactly(a), Exactly(b)) => a.checked_mul(b).map_or(AtLeast3, Exactly),
            _ => AtLeast3,
        }
    }

    pub fn is_nontrivial(self) -> bool {
        match self {
            Order::Exactly(n) => n >= 2,
            Order::AtLeast3 | Order::Infinite => true,
            Order::Unknown => false,
        }
    }
}

impl fmt::Display for GroupExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let part = |e: &GroupExpr| {
            if e.is_compound() {
                format!("({e})")
            } else {
                e.to_string()
            }
        };
        match self {
            GroupExpr::SimpleLie(d) => write!(f, "{d}"),
            GroupExpr::Solvable(SolvableKind::Euclidean(n)) => write!(f, "R^{n}"),
            GroupExpr::Solvable(SolvableKind::Integers) => f.write_str("Z"),
            GroupExpr::Solvable(SolvableKind::Generic) => f.write_str("solvable"),
            GroupExpr::Finite(FiniteOrder::Known(n)) => write!(f, "Z/{n}"),
            GroupExpr::Finite(FiniteOrder::AtLeast3) => f.write_str("finite"),
            GroupExpr::DirectProduct(items) if items.len() == 1 => {
                write!(f, "{}^1", part(&items[0]))
            }
            GroupExpr::DirectProduct(items) => {
                let parts: Vec<String> = items.iter().map(part).collect();
                f.write_str(&parts.join(" x "))
            }
            GroupExpr::FreeProduct(a, b) => write!(f, "{} * {}", part(a), part(b)),
            GroupExpr::Extension {
                kernel,
                quotient,
                mode,
            } => {
                let mode = match mode {
                    ExtensionMode::Split => "split",
                    ExtensionMode::Central => "central",
                    ExtensionMode::General => "general",
                };
                write!(f, "ext({kernel}, {quotient}, {mode})")
            }
            GroupExpr::FiniteIndex(inner) => write!(f, "fi({inner})"),
        }
    }
}

impl std::str::FromStr for GroupExpr {
    type Err = Error;

    fn from_str(s: &str) -> Result<GroupExpr> {
        parse_group_expr(s)
    }
}

pub fn parse_group_expr(text: &str) -> Result<GroupExpr> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
    };
    let (e, _) = p.expr()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.error("unexpected input after expression"));
    }
    Ok(e)
}

#[derive(Debug)]
enum Arg {
    Int(i64),
    Word(String),
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error_at(&self, pos: usize, message: impl Into<String>) -> Error {
        Error::Syntax {
            offset: pos + 1,
            message: message.into(),
        }
    }

    fn error(&self, message: impl Into<String>) -> Error {
        self.error_at(self.pos, message)
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(format!("expected '{}'", c as char)))
        }
    }

    fn ident(&mut self) -> Option<(String, usize)> {
        self.skip_ws();
        let start = self.pos;
        if !self.src.get(start).is_some_and(u8::is_ascii_alphabetic) {
            return None;
        }
        while self
            .src
            .get(self.pos)
            .is_some_and(u8::is_ascii_alphanumeric)
        {
            self.pos += 1;
        }
        let word = String::from_utf8_lossy(&self.src[start..self.pos]).into_owned();
        Some((word, start))
    }

    fn int(&mut self) -> Result<(i64, usize)> {
        self.skip_ws();
        let start = self.pos;
        if matches!(self.src.get(self.pos), Some(b'-' | b'+')) {
            self.pos += 1;
        }
        let digits = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if self.pos == digits {
            self.pos = start;
            return Err(self.error("expected an integer"));
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
        text.parse()
            .map(|v| (v, start))
            .map_err(|_| self.error_at(start, "integer out of range"))
    }

    fn count(&mut self, min: i64, what: &str) -> Result<usize> {
        let (v, at) = self.int()?;
        if v < min {
            return Err(self.error_at(at, format!("{what} must be at least {min}")));
        }
        Ok(v as usize)
    }

    /// Returns the expression and whether it is an unparenthesized power.
    fn expr(&mut self) -> Result<(GroupExpr, bool)> {
        let (mut acc, mut open) = self.term()?;
        loop {
            match self.peek() {
                Some(b'x') => {
                    self.pos += 1;
                    let (rhs, rhs_power) = self.term()?;
                    let mut items = match (acc, open) {
                        (GroupExpr::DirectProduct(items), true) => items,
                        (other, _) => vec![other],
                    };
                    match (rhs, rhs_power) {
                        (GroupExpr::DirectProduct(more), true) => items.extend(more),
                        (rhs, _) => items.push(rhs),
                    }
                    acc = GroupExpr::DirectProduct(items);
                    open = true;
                }
                Some(b'*') => {
                    self.pos += 1;
                    let (rhs, _) = self.term()?;
                    acc = GroupExpr::FreeProduct(Box::new(acc), Box::new(rhs));
                    open = false;
                }
                _ => return Ok((acc, open)),
            }
        }
    }

    fn term(&mut self) -> Result<(GroupExpr, bool)> {
        let atom = self.atom()?;
        if self.eat(b'^') {
            let n = self.count(1, "exponent")?;
            Ok((atom.power(n), true))
        } else {
            Ok((atom, false))
        }
    }

    fn atom(&mut self) -> Result<GroupExpr> {
        if self.eat(b'(') {
            let (e, _) = self.expr()?;
            self.expect(b')')?;
            return Ok(e);
        }
        let Some((word, start)) = self.ident() else {
            return Err(self.error("expected a group"));
        };
        let lower = word.to_ascii_lowercase();
        match lower.as_str() {
            "r" => {
                self.expect(b'^')?;
                let n = self.count(0, "dimension")?;
                Ok(GroupExpr::Solvable(SolvableKind::Euclidean(n)))
            }
            "z" => {
                if self.eat(b'/') {
                    let n = self.count(1, "order")?;
                    Ok(GroupExpr::Finite(FiniteOrder::Known(n as u64)))
                } else {
                    Ok(GroupExpr::Solvable(SolvableKind::Integers))
                }
            }
            "solvable" => Ok(GroupExpr::Solvable(SolvableKind::Generic)),
            "finite" => Ok(GroupExpr::Finite(FiniteOrder::AtLeast3)),
            "fi" => {
                self.expect(b'(')?;
                let (inner, _) = self.expr()?;
                self.expect(b')')?;
                Ok(GroupExpr::FiniteIndex(Box::new(inner)))
            }
            "ext" => {
                self.expect(b'(')?;
                let (kernel, _) = self.expr()?;
                self.expect(b',')?;
                let (quotient, _) = self.expr()?;
                self.expect(b',')?;
                let mode = match self.ident() {
                    Some((m, _)) if m.eq_ignore_ascii_case("split") => ExtensionMode::Split,
                    Some((m, _)) if m.eq_ignore_ascii_case("central") => ExtensionMode::Central,
                    Some((m, _)) if m.eq_ignore_ascii_case("general") => ExtensionMode::General,
                    Some((_, at)) => {
                        return Err(self.error_at(at, "mode must be split, central or general"))
                    }
                    None => return Err(self.error("expected an extension mode")),
                };
                self.expect(b')')?;
                Ok(GroupExpr::Extension {
                    kernel: Box::new(kernel),
                    quotient: Box::new(quotient),
                    mode,
                })
            }
            _ if !DESCRIPTOR_NAMES.contains(&lower.as_str()) => {
                Err(self.error_at(start, format!("unknown group name '{word}'")))
            }
            _ => {
                let star = lower == "so" && self.eat(b'*');
                let args = self.args()?;
                let name = if star { "so*" } else { lower.as_str() };
                descriptor(name, &args)
                    .map(GroupExpr::SimpleLie)
                    .map_err(|e| match e {
                        Error::Syntax { message, .. } => self.error_at(start, message),
                        other => other,
                    })
            }
        }
    }

    fn args(&mut self) -> Result<Vec<Arg>> {
        self.expect(b'(')?;
        let mut args = Vec::new();
        loop {
            let arg = match self.peek() {
                Some(c) if c.is_ascii_alphabetic() => {
                    let (w, _) = self.ident().expect("alphabetic");
                    Arg::Word(w)
                }
                _ => {
                    let (v, _) = self.int()?;
                    Arg::Int(v)
                }
            };
            args.push(arg);
            if !self.eat(b',') {
                break;
            }
        }
        self.expect(b')')?;
        Ok(args)
    }
}

const DESCRIPTOR_NAMES: [&str; 12] = [
    "su", "sl", "so", "sp", "complex", "split", "compact", "e6", "e7", "e8", "f4", "g2",
];

fn syntax(message: impl Into<String>) -> Error {
    Error::Syntax {
        offset: 0,
        message: message.into(),
    }
}

fn invalid(message: impl Into<String>) -> Error {
    Error::InvalidRealForm(message.into())
}

fn positive(v: i64) -> Result<usize> {
    if v >= 1 {
        Ok(v as usize)
    } else {
        Err(invalid(format!("parameter {v} must be positive")))
    }
}

fn nonneg(v: i64) -> Result<usize> {
    usize::try_from(v).map_err(|_| invalid(format!("parameter {v} must be nonnegative")))
}

fn root_type(family: Family, rank: usize) -> Result<RootSystemType> {
    RootSystemType::new(family, rank).map_err(|e| invalid(e.to_string()))
}

fn descriptor(name: &str, args: &[Arg]) -> Result<RealForm> {
    use Arg::{Int, Word};
    let field = |w: &str| w.to_ascii_uppercase();
    let d = match (name, args) {
        ("su", [Int(n)]) => RealForm::Compact(root_type(Family::A, positive(*n)? - 1)?),
        ("su", [Int(p), Int(q)]) => RealForm::Su {
            p: nonneg(*p)?,
            q: nonneg(*q)?,
        },
        ("sl", [Int(n), Word(k)]) => {
            let n = positive(*n)?;
            match field(k).as_str() {
                "R" => RealForm::Split(root_type(Family::A, n - 1)?),
                "C" => RealForm::Complex(root_type(Family::A, n - 1)?),
                "H" => RealForm::SlH(n),
                _ => return Err(syntax("field must be R, C or H")),
            }
        }
        ("so", [Int(n)]) => RealForm::So {
            p: nonneg(*n)?,
            q: 0,
        },
        ("so", [Int(p), Int(q)]) => RealForm::So {
            p: nonneg(*p)?,
            q: nonneg(*q)?,
        },
        ("so", [Int(n), Word(k)]) if field(k) == "C" => {
            let n = positive(*n)?;
            let t = if n % 2 == 1 {
                root_type(Family::B, n / 2)?
            } else {
                root_type(Family::D, n / 2)?
            };
            RealForm::Complex(t)
        }
        ("so*", [Int(m)]) => {
            if *m < 0 || m % 2 != 0 {
                return Err(invalid("so*(m) needs m even"));
            }
            RealForm::SoStar(*m as usize / 2)
        }
        ("sp", [Int(n)]) => RealForm::Sp {
            p: nonneg(*n)?,
            q: 0,
        },
        ("sp", [Int(p), Int(q)]) => RealForm::Sp {
            p: nonneg(*p)?,
            q: nonneg(*q)?,
        },
        ("sp", [Int(n), Word(k)]) => {
            let t = root_type(Family::C, positive(*n)?)?;
            match field(k).as_str() {
                "R" => RealForm::Split(t),
                "C" => RealForm::Complex(t),
                _ => return Err(syntax("field must be R or C")),
            }
        }
        ("complex" | "split" | "compact", [Word(t)]) => {
            let t: RootSystemType = t.parse().map_err(|e: Error| invalid(e.to_string()))?;
            match name {
                "complex" => RealForm::Complex(t),
                "compact" => RealForm::Compact(t),
                _ if matches!(t.family(), Family::E | Family::F | Family::G) => {
                    RealForm::Exceptional {
                        ty: t,
                        index: t.rank() as i32,
                    }
                }
                _ => RealForm::Split(t),
            }
        }
        ("e6" | "e7" | "e8" | "f4" | "g2", [Int(index)]) => {
            let ty: RootSystemType = name.parse().expect("exceptional name");
            let compact = -((ty.root_count() + ty.rank()) as i64);
            if *index == compact {
                RealForm::Compact(ty)
            } else {
                RealForm::Exceptional {
                    ty,
                    index: i32::try_from(*index).map_err(|_| invalid("index out of range"))?,
                }
            }
        }
        _ => return Err(syntax(format!("wrong arguments for {name}"))),
    };
    d.validate()
}

/// A free subgroup rank, or an upper bound on it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct NuValue {
    pub value: usize,
    /// False when the value is only an upper bound.
    pub exact: bool,
}

pub fn nu_eval(e: &GroupExpr) -> Result<usize> {
    Ok(evaluate(e, false)?.value)
}

/// Like [`nu_eval`], but general extensions contribute the free subgroup
/// rank of the quotient as an upper bound.
pub fn nu_upper_bound(e: &GroupExpr) -> Result<NuValue> {
    evaluate(e, true)
}

fn evaluate(e: &GroupExpr, allow_bound: bool) -> Result<NuValue> {
    let exact = |value| NuValue { value, exact: true };
    match e {
        GroupExpr::SimpleLie(d) => Ok(exact(nu_simple_value(*d)?.nu)),
        GroupExpr::Solvable(_) | GroupExpr::Finite(_) => Ok(exact(0)),
        GroupExpr::DirectProduct(items) => {
            let mut total = exact(0);
            for item in items {
                let v = evaluate(item, allow_bound)?;
                total.value += v.value;
                total.exact &= v.exact;
            }
            Ok(total)
        }
        GroupExpr::FreeProduct(a, b) => {
            let (oa, ob) = (a.order(), b.order());
            let rule = "free product";
            if oa == Order::Unknown || ob == Order::Unknown {
                return Err(Error::RuleNotApplicable {
                    rule,
                    reason: "a factor has unknown order".into(),
                });
            }
            if !oa.is_nontrivial() || !ob.is_nontrivial() {
                return Err(Error::RuleNotApplicable {
                    rule,
                    reason: "a factor is trivial".into(),
                });
            }
            if oa == Order::Exactly(2) && ob == Order::Exactly(2) {
                return Err(Error::RuleNotApplicable {
                    rule,
                    reason: "both factors have order two".into(),
                });
            }
            let (va, vb) = (evaluate(a, allow_bound)?, evaluate(b, allow_bound)?);
            Ok(NuValue {
                value: 1.max(va.value).max(vb.value),
                exact: va.exact && vb.exact,
            })
        }
        GroupExpr::Extension {
            kernel,
            quotient,
            mode,
        } => {
            let rule = "extension";
            let k = evaluate(kernel, allow_bound)?;
            if k.value > 0 {
                return Err(Error::RuleNotApplicable {
                    rule,
                    reason: format!("kernel has free subgroup rank {}", k.value),
                });
            }
            let q = evaluate(quotient, allow_bound)?;
            match mode {
                ExtensionMode::Split | ExtensionMode::Central => Ok(q),
                ExtensionMode::General if allow_bound => Ok(NuValue {
                    value: q.value,
                    exact: false,
                }),
                ExtensionMode::General => Err(Error::RuleNotApplicable {
                    rule,
                    reason: "a general extension only gives an upper bound".into(),
                }),
            }
        }
        GroupExpr::FiniteIndex(inner) => evaluate(inner, allow_bound),
    }
}
