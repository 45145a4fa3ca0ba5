//! p-ary functions 𝔽_p^n → 𝔽_p: polynomial input syntax, value tables, and
//! detection of the homogeneous scaling exponent h with f(ax) = a^h f(x).

use crate::error::{Error, Result};
use crate::field::{PointSpace, PrimeField, DEFAULT_MAX_POINTS};

/// A total map 𝔽_p^n → 𝔽_p stored as a value table in point-index order.
/// Equality is table equality; the optional source expression is metadata.
#[derive(Debug, Clone, Eq)]
pub struct PFunction {
    space: PointSpace,
    table: Vec<u8>,
    source: Option<String>,
}

impl PartialEq for PFunction {
    fn eq(&self, other: &Self) -> bool {
        self.space == other.space && self.table == other.table
    }
}

impl PFunction {
    pub fn from_table(space: PointSpace, table: Vec<u8>) -> Result<Self> {
        if table.len() != space.len() {
            return Err(Error::LengthMismatch(table.len(), space.len()));
        }
        let p = space.p();
        if p > u8::MAX as u64 {
            return Err(Error::BadParams {
                what: "PFunction".into(),
                reason: format!("p = {p} exceeds the u8 value-table bound"),
            });
        }
        if let Some(bad) = table.iter().find(|&&v| (v as u64) >= p) {
            return Err(Error::BadParams {
                what: "PFunction".into(),
                reason: format!("table value {bad} is not a residue mod {p}"),
            });
        }
        Ok(PFunction {
            space,
            table,
            source: None,
        })
    }

    pub fn space(&self) -> &PointSpace {
        &self.space
    }

    pub fn p(&self) -> u64 {
        self.space.p()
    }

    pub fn n(&self) -> usize {
        self.space.n()
    }

    pub fn table(&self) -> &[u8] {
        &self.table
    }

    pub fn source(&self) -> Option<&str> {
        self.source.as_deref()
    }

    pub fn value(&self, idx: usize) -> u64 {
        self.table[idx] as u64
    }

    /// Preimage cells N_j = f^{-1}(j) for j = 0..p−1, as sorted index lists.
    pub fn level_sets(&self) -> Vec<Vec<u32>> {
        let mut cells = vec![Vec::new(); self.p() as usize];
        for (idx, &v) in self.table.iter().enumerate() {
            cells[v as usize].push(idx as u32);
        }
        cells
    }
}

/// Abstract syntax for multivariate polynomial input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PolyExpr {
    Const(u64),
    Var(usize),
    Neg(Box<PolyExpr>),
    Add(Box<PolyExpr>, Box<PolyExpr>),
    Sub(Box<PolyExpr>, Box<PolyExpr>),
    Mul(Box<PolyExpr>, Box<PolyExpr>),
    Pow(Box<PolyExpr>, u64),
}

impl PolyExpr {
    /// Largest variable index mentioned.
    pub fn max_var(&self) -> usize {
        match self {
            PolyExpr::Const(_) => 0,
            PolyExpr::Var(k) => *k,
            PolyExpr::Neg(e) | PolyExpr::Pow(e, _) => e.max_var(),
            PolyExpr::Add(a, b) | PolyExpr::Sub(a, b) | PolyExpr::Mul(a, b) => {
                a.max_var().max(b.max_var())
            }
        }
    }

    /// Evaluate at a point. Exponents reduce mod (p−1) on nonzero bases only,
    /// so x^{p−1} stays the 0-indicator complement.
    pub fn eval(&self, field: &PrimeField, point: &[u64]) -> u64 {
        match self {
            PolyExpr::Const(c) => c % field.p(),
            PolyExpr::Var(k) => point[*k - 1] % field.p(),
            PolyExpr::Neg(e) => field.neg(e.eval(field, point)),
            PolyExpr::Add(a, b) => field.add(a.eval(field, point), b.eval(field, point)),
            PolyExpr::Sub(a, b) => field.sub(a.eval(field, point), b.eval(field, point)),
            PolyExpr::Mul(a, b) => field.mul(a.eval(field, point), b.eval(field, point)),
            PolyExpr::Pow(e, exp) => {
                let base = e.eval(field, point);
                if base == 0 {
                    if *exp == 0 {
                        1
                    } else {
                        0
                    }
                } else {
                    field.pow(base, exp % (field.p() - 1))
                }
            }
        }
    }

    pub fn render(&self) -> String {
        fn go(e: &PolyExpr, out: &mut String, parent: u8) {
            // precedence: + − = 1, * = 2, unary − = 3, ^ = 4
            match e {
                PolyExpr::Const(c) => out.push_str(&c.to_string()),
                PolyExpr::Var(k) => out.push_str(&format!("x{k}")),
                PolyExpr::Neg(inner) => {
                    let wrap = parent > 1;
                    if wrap {
                        out.push('(');
                    }
                    out.push('-');
                    go(inner, out, 3);
                    if wrap {
                        out.push(')');
                    }
                }
                PolyExpr::Add(a, b) | PolyExpr::Sub(a, b) => {
                    let wrap = parent > 1;
                    if wrap {
                        out.push('(');
                    }
                    go(a, out, 1);
                    out.push_str(if matches!(e, PolyExpr::Add(..)) {
                        " + "
                    } else {
                        " - "
                    });
                    go(b, out, 2);
                    if wrap {
                        out.push(')');
                    }
                }
                PolyExpr::Mul(a, b) => {
                    let wrap = parent > 2;
                    if wrap {
                        out.push('(');
                    }
                    go(a, out, 2);
                    out.push('*');
                    go(b, out, 3);
                    if wrap {
                        out.push(')');
                    }
                }
                PolyExpr::Pow(a, exp) => {
                    go(a, out, 4);
                    out.push('^');
                    out.push_str(&exp.to_string());
                }
            }
        }
        let mut out = String::new();
        go(self, &mut out, 0);
        out
    }
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Parser {
            bytes: text.as_bytes(),
            pos: 0,
        }
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            position: self.pos,
            message: message.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let c = self.peek()?;
        self.pos += 1;
        Some(c)
    }

    fn integer(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return self.err("expected an integer");
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .unwrap()
            .parse()
            .or_else(|_| self.err("integer literal overflows"))
    }

    // expr := term (('+'|'-') term)*
    fn expr(&mut self) -> Result<PolyExpr> {
        let mut acc = self.term()?;
        while let Some(c) = self.peek() {
            match c {
                b'+' => {
                    self.bump();
                    acc = PolyExpr::Add(Box::new(acc), Box::new(self.term()?));
                }
                b'-' => {
                    self.bump();
                    acc = PolyExpr::Sub(Box::new(acc), Box::new(self.term()?));
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    // term := unary ('*' unary)*
    fn term(&mut self) -> Result<PolyExpr> {
        let mut acc = self.unary()?;
        while self.peek() == Some(b'*') {
            self.bump();
            acc = PolyExpr::Mul(Box::new(acc), Box::new(self.unary()?));
        }
        Ok(acc)
    }

    // unary := '-' unary | power
    fn unary(&mut self) -> Result<PolyExpr> {
        if self.peek() == Some(b'-') {
            self.bump();
            return Ok(PolyExpr::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    // power := atom ('^' integer)?
    fn power(&mut self) -> Result<PolyExpr> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.bump();
            let exp = self.integer()?;
            return Ok(PolyExpr::Pow(Box::new(base), exp));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<PolyExpr> {
        match self.peek() {
            Some(b'(') => {
                self.bump();
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return self.err("expected ')'");
                }
                self.bump();
                Ok(inner)
            }
            Some(b'x') => {
                self.bump();
                let k = self.integer()?;
                if k == 0 {
                    return self.err("variable indices start at 1");
                }
                Ok(PolyExpr::Var(k as usize))
            }
            Some(c) if c.is_ascii_digit() => Ok(PolyExpr::Const(self.integer()?)),
            Some(c) => self.err(format!("unexpected character '{}'", c as char)),
            None => self.err("unexpected end of input"),
        }
    }
}

/// Parse a polynomial expression over variables x1..xn.
pub fn parse_function(text: &str) -> Result<PolyExpr> {
    let mut parser = Parser::new(text);
    let expr = parser.expr()?;
    if parser.peek().is_some() {
        return parser.err("trailing input");
    }
    Ok(expr)
}

/// Evaluate an expression at every point of 𝔽_p^n.
pub fn tabulate(expr: &PolyExpr, p: u64, n: usize) -> Result<PFunction> {
    tabulate_with_budget(expr, p, n, DEFAULT_MAX_POINTS)
}

pub fn tabulate_with_budget(expr: &PolyExpr, p: u64, n: usize, budget: u64) -> Result<PFunction> {
    let space = PointSpace::with_budget(p, n, budget)?;
    let k = expr.max_var();
    if k > n {
        return Err(Error::VariableOutOfRange { index: k, n });
    }
    let field = *space.field();
    let mut table = Vec::with_capacity(space.len());
    for point in space.iter() {
        table.push(expr.eval(&field, &point) as u8);
    }
    let mut f = PFunction::from_table(space, table)?;
    f.source = Some(expr.render());
    Ok(f)
}

/// The admissible scaling exponents of f: every h ∈ [1, p−1] with
/// gcd(h−1, p−1) = 1 and f(ax) = a^h · f(x) for all a ∈ 𝔽_p*, x ∈ 𝔽_p^n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScalingExponent {
    /// The smallest admissible h, used everywhere downstream.
    pub h: u64,
    /// All admissible h, for the report.
    pub all: Vec<u64>,
}

pub fn detect_scaling_exponent(f: &PFunction) -> Option<ScalingExponent> {
    let p = f.p();
    let space = f.space();
    let field = *space.field();
    let mut all = Vec::new();
    'next_h: for h in 1..p {
        if num_integer::gcd(h as i64 - 1, p as i64 - 1) != 1 {
            continue;
        }
        for a in 2..p {
            let ah = field.pow(a, h);
            for x in 0..space.len() {
                if f.value(space.scale_idx(a, x)) != field.mul(ah, f.value(x)) {
                    continue 'next_h;
                }
            }
        }
        all.push(h);
    }
    all.first().copied().map(|h| ScalingExponent { h, all })
}

/// Parse the two-line function file format:
/// line 1 `p=<int> n=<int>`, line 2 `f = <expr>` or `table = v0,v1,...`.
pub fn read_function_file(text: &str) -> Result<PFunction> {
    read_function_file_with_budget(text, DEFAULT_MAX_POINTS)
}

pub fn read_function_file_with_budget(text: &str, budget: u64) -> Result<PFunction> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header = lines
        .next()
        .ok_or_else(|| Error::FunctionFile("missing header line".into()))?;
    let mut p = None;
    let mut n = None;
    for tok in header.split_whitespace() {
        if let Some(v) = tok.strip_prefix("p=") {
            p = Some(v.parse::<u64>().map_err(|_| {
                Error::FunctionFile(format!("bad p value '{v}'"))
            })?);
        } else if let Some(v) = tok.strip_prefix("n=") {
            n = Some(v.parse::<usize>().map_err(|_| {
                Error::FunctionFile(format!("bad n value '{v}'"))
            })?);
        } else {
            return Err(Error::FunctionFile(format!("unexpected token '{tok}'")));
        }
    }
    let (p, n) = match (p, n) {
        (Some(p), Some(n)) => (p, n),
        _ => return Err(Error::FunctionFile("header must set p= and n=".into())),
    };
    let body = lines
        .next()
        .ok_or_else(|| Error::FunctionFile("missing definition line".into()))?;
    let body = body.trim();
    if let Some(expr_text) = body.strip_prefix("f") {
        let expr_text = expr_text
            .trim_start()
            .strip_prefix('=')
            .ok_or_else(|| Error::FunctionFile("expected 'f = <expression>'".into()))?;
        let expr = parse_function(expr_text)?;
        tabulate_with_budget(&expr, p, n, budget)
    } else if let Some(table_text) = body.strip_prefix("table") {
        let table_text = table_text
            .trim_start()
            .strip_prefix('=')
            .ok_or_else(|| Error::FunctionFile("expected 'table = v0,v1,...'".into()))?;
        let space = PointSpace::with_budget(p, n, budget)?;
        let values = table_text
            .split(',')
            .map(|v| {
                v.trim()
                    .parse::<u8>()
                    .map_err(|_| Error::FunctionFile(format!("bad table entry '{}'", v.trim())))
            })
            .collect::<Result<Vec<u8>>>()?;
        PFunction::from_table(space, values)
    } else {
        Err(Error::FunctionFile(
            "definition line must start with 'f =' or 'table ='".into(),
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_catalog_shapes() {
        let e = parse_function("x1^2 + x2^2*x4^4 + x2^2 + x3*x4").unwrap();
        assert_eq!(e.max_var(), 4);
        let e = parse_function("5*x1^2*x3^6 + 3*x1^2 + x2*x3").unwrap();
        assert_eq!(e.max_var(), 3);
        assert!(matches!(
            parse_function("x1 +"),
            Err(Error::Parse { .. })
        ));
        assert!(parse_function("x1 x2").is_err());
        assert!(parse_function("(x1 + 2").is_err());
    }

    #[test]
    fn precedence_binds_pow_over_mul_over_add() {
        let e = parse_function("2*x1^2 + 1").unwrap();
        let f5 = PrimeField::new(5).unwrap();
        // At x1 = 3: 2·9 + 1 = 19 ≡ 4.
        assert_eq!(e.eval(&f5, &[3]), 4);
        let e = parse_function("-x1^2").unwrap();
        assert_eq!(e.eval(&f5, &[2]), 1);
    }

    #[test]
    fn tabulation_examples() {
        let zero = parse_function("0").unwrap();
        let f = tabulate(&zero, 3, 2).unwrap();
        assert!(f.table().iter().all(|&v| v == 0));

        let e = parse_function("x1*x2").unwrap();
        let f = tabulate(&e, 3, 2).unwrap();
        let idx = f.space().idx(&[1, 2]);
        assert_eq!(f.value(idx), 2);

        let e = parse_function("x1^2 + x2^2*x4^4 + x2^2 + x3*x4").unwrap();
        let f = tabulate(&e, 5, 4).unwrap();
        assert_eq!(f.value(0), 0);
        assert!(tabulate(&e, 5, 3).is_err());
    }

    #[test]
    fn zero_base_powers_do_not_reduce() {
        // x^4 is not syntactically 1: at x = 0 it vanishes over F_5.
        let e = parse_function("x1^4").unwrap();
        let f = tabulate(&e, 5, 1).unwrap();
        assert_eq!(f.value(0), 0);
        for x in 1..5 {
            assert_eq!(f.value(x), 1);
        }
    }

    #[test]
    fn render_parse_round_trip() {
        for text in [
            "x1^2 + x2^2*x4^4 + x2^2 + x3*x4",
            "5*x1^2*x3^6 + 3*x1^2 + x2*x3",
            "x1^2 - 2*x2",
            "-x1 + (x2 - 1)*x3",
        ] {
            let e = parse_function(text).unwrap();
            let rendered = e.render();
            let reparsed = parse_function(&rendered).unwrap();
            assert_eq!(reparsed, e, "round trip failed for {text}");
            assert_eq!(reparsed.render(), rendered);
        }
    }

    #[test]
    fn scaling_exponent_detection() {
        let quad = parse_function("x1^2 + x2^2 + x3^2").unwrap();
        let f = tabulate(&quad, 5, 3).unwrap();
        let s = detect_scaling_exponent(&f).unwrap();
        assert_eq!(s.h, 2);

        // f(x) = x1 only scales with h ≡ 1, which fails the gcd condition.
        let lin = parse_function("x1").unwrap();
        let f = tabulate(&lin, 5, 2).unwrap();
        assert_eq!(detect_scaling_exponent(&f), None);

        let ex1 = parse_function("x1^2 + x2^2*x4^4 + x2^2 + x3*x4").unwrap();
        let f = tabulate(&ex1, 5, 4).unwrap();
        assert_eq!(detect_scaling_exponent(&f).unwrap().h, 2);
    }

    #[test]
    fn function_file_round_trip() {
        let f = read_function_file("p=5 n=2\nf = x1*x2 + 3").unwrap();
        assert_eq!(f.p(), 5);
        assert_eq!(f.n(), 2);
        assert_eq!(f.value(f.space().idx(&[2, 4])), 1);

        let table: Vec<String> = (0..9).map(|i| (i % 3).to_string()).collect();
        let text = format!("p=3 n=2\ntable = {}", table.join(","));
        let g = read_function_file(&text).unwrap();
        assert_eq!(g.value(4), 1);

        assert!(read_function_file("p=5 n=2\nf = x3").is_err());
        assert!(read_function_file("p=4 n=2\nf = x1").is_err());
        assert!(read_function_file("nonsense").is_err());
    }
}
