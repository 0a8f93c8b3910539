//! Exact arithmetic in the localized Weyl algebra `ℚ[t, t⁻¹]⟨∂⟩`.
//!
//! Operators are kept in normal order, `Σ c_{a,b} t^a ∂^b`, with rational
//! coefficients. The single commutation rule is `∂ t^a = t^a ∂ + a t^{a-1}`
//! for every integer `a`, which gives the Leibniz expansion
//! `∂^b t^c = Σ_k C(b,k) (c)_k t^{c-k} ∂^{b-k}` with `(c)_k` the falling
//! factorial.
//!
//! The grading has `deg t = 1` and `deg ∂ = -1`; the order is the top power
//! of `∂`. [`operator_for_degree`] builds, for each degree `h`, the operator
//! `t^h Π (θ - s)` over `s ∈ S` with `s + h ∉ S`, where `θ = t∂`. It kills
//! exactly the monomials `t^s` that would leave `ℂ[S]`, and its principal
//! symbol is `t^{val(-h)} y^{val(h)}`.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;
use crate::sigma::{PlanePoint, SigmaMonoid};

/// Principal symbol: `(t-exponent, y-exponent) → coefficient`.
pub type Symbol = BTreeMap<(i64, u32), BigRational>;

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn falling(c: i64, k: u32) -> BigInt {
    (0..k as i64).fold(BigInt::one(), |acc, i| acc * BigInt::from(c - i))
}

fn binomial(n: u32, k: u32) -> BigInt {
    (0..k).fold(BigInt::one(), |acc, i| {
        acc * BigInt::from(n - i) / BigInt::from(i + 1)
    })
}

fn insert_term<K: Ord>(map: &mut BTreeMap<K, BigRational>, key: K, c: BigRational) {
    if c.is_zero() {
        return;
    }
    match map.entry(key) {
        Entry::Vacant(v) => {
            v.insert(c);
        }
        Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

/// A Laurent polynomial in `t` with rational coefficients.
#[derive(Clone, Default, PartialEq, Eq, Debug)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigRational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(coeff: BigRational, exponent: i64) -> Self {
        let mut p = Self::zero();
        insert_term(&mut p.terms, exponent, coeff);
        p
    }

    /// `t^s`.
    pub fn t_pow(exponent: i64) -> Self {
        Self::monomial(BigRational::one(), exponent)
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i64, BigRational)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            insert_term(&mut p.terms, e, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigRational)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn coefficient(&self, exponent: i64) -> BigRational {
        self.terms
            .get(&exponent)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            insert_term(&mut out.terms, e, c.clone());
        }
        out
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let op = WeylOperator::from_terms(self.terms.iter().map(|(&e, c)| ((e, 0), c.clone())));
        fmt::Display::fmt(&op, f)
    }
}

/// A normal-ordered element `Σ c_{a,b} t^a ∂^b` of `ℚ[t, t⁻¹]⟨∂⟩`.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct WeylOperator {
    terms: BTreeMap<(i64, u32), BigRational>,
}

impl WeylOperator {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(BigRational::one(), 0, 0)
    }

    pub fn scalar(c: BigRational) -> Self {
        Self::monomial(c, 0, 0)
    }

    /// `c t^a ∂^b`.
    pub fn monomial(c: BigRational, a: i64, b: u32) -> Self {
        let mut op = Self::zero();
        insert_term(&mut op.terms, (a, b), c);
        op
    }

    /// `t^a`.
    pub fn t_pow(a: i64) -> Self {
        Self::monomial(BigRational::one(), a, 0)
    }

    /// `∂^b`.
    pub fn d_pow(b: u32) -> Self {
        Self::monomial(BigRational::one(), 0, b)
    }

    /// The Euler operator `θ = t∂`.
    pub fn theta() -> Self {
        Self::monomial(BigRational::one(), 1, 1)
    }

    pub fn from_terms(terms: impl IntoIterator<Item = ((i64, u32), BigRational)>) -> Self {
        let mut op = Self::zero();
        for (k, c) in terms {
            insert_term(&mut op.terms, k, c);
        }
        op
    }

    /// Convenience for integer coefficients: `[(c, a, b), …]`.
    pub fn from_int_terms(terms: &[(i64, i64, u32)]) -> Self {
        Self::from_terms(terms.iter().map(|&(c, a, b)| ((a, b), rat(c))))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `((a, b), c)` for every stored `c t^a ∂^b`.
    pub fn terms(&self) -> impl Iterator<Item = ((i64, u32), &BigRational)> {
        self.terms.iter().map(|(&k, c)| (k, c))
    }

    pub fn coefficient(&self, a: i64, b: u32) -> BigRational {
        self.terms
            .get(&(a, b))
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::from_terms(self.terms.iter().map(|(&k, v)| (k, v * c)))
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(), |acc, _| &acc * self)
    }

    /// `PQ - QP`.
    pub fn commutator(&self, other: &Self) -> Self {
        &(self * other) - &(other * self)
    }

    /// Action on Laurent polynomials: `t^a ∂^b (t^s) = (s)_b t^{s-b+a}`.
    pub fn apply(&self, f: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&(a, b), c) in &self.terms {
            for (&s, fc) in &f.terms {
                let k = BigRational::from_integer(falling(s, b));
                insert_term(&mut out.terms, s - b as i64 + a, c * fc * k);
            }
        }
        out
    }

    /// Splits by graded degree `a - b`.
    pub fn graded_components(&self) -> BTreeMap<i64, WeylOperator> {
        let mut out: BTreeMap<i64, WeylOperator> = BTreeMap::new();
        for (&(a, b), c) in &self.terms {
            insert_term(
                &mut out.entry(a - b as i64).or_default().terms,
                (a, b),
                c.clone(),
            );
        }
        out
    }

    /// The degree when every term shares it.
    pub fn homogeneous_degree(&self) -> Option<i64> {
        let comps = self.graded_components();
        if comps.len() == 1 {
            comps.keys().next().copied()
        } else {
            None
        }
    }

    /// Highest power of `∂`.
    pub fn order(&self) -> Result<u32> {
        self.terms
            .keys()
            .map(|&(_, b)| b)
            .max()
            .ok_or(Error::ZeroOperator)
    }

    /// Top-order part with `∂` replaced by the commuting variable `y`.
    pub fn principal_symbol(&self) -> Result<Symbol> {
        let order = self.order()?;
        Ok(self
            .terms
            .iter()
            .filter(|(&(_, b), _)| b == order)
            .map(|(&k, c)| (k, c.clone()))
            .collect())
    }

    /// Whether every homogeneous component maps `ℂ[S]` into itself: a
    /// component of degree `d` sends `t^s` to `λ_s t^{s+d}`, and `λ_s` must
    /// vanish whenever `s ∈ S` but `s + d ∉ S`.
    pub fn preserves_semigroup_ring(&self, s: &NumericalSemigroup) -> bool {
        self.graded_components().into_iter().all(|(d, comp)| {
            (0..=s.frobenius() - d)
                .filter(|&x| s.contains(x) && !s.contains(x + d))
                .all(|x| comp.eigenvalue(x).is_zero())
        })
    }

    /// For a homogeneous operator, the scalar `λ` with `P(t^s) = λ t^{s+deg}`.
    fn eigenvalue(&self, s: i64) -> BigRational {
        self.terms
            .iter()
            .map(|(&(_, b), c)| c * BigRational::from_integer(falling(s, b)))
            .fold(BigRational::zero(), |acc, x| acc + x)
    }

    /// Printed with `∂` and superscripts, e.g. `∂²−4t⁻¹∂`.
    pub fn to_unicode(&self) -> String {
        self.render(true)
    }

    fn render(&self, unicode: bool) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut keys: Vec<&(i64, u32)> = self.terms.keys().collect();
        keys.sort_by(|x, y| y.1.cmp(&x.1).then(y.0.cmp(&x.0)));
        let (plus, minus, sep) = if unicode {
            ("+", "−", "")
        } else {
            (" + ", " - ", " ")
        };
        let mut out = String::new();
        for (i, key) in keys.into_iter().enumerate() {
            let c = &self.terms[key];
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => out.push_str(if unicode { "−" } else { "-" }),
                (0, false) => {}
                (_, true) => out.push_str(minus),
                (_, false) => out.push_str(plus),
            }
            let mag = c.abs();
            let mono = render_monomial(key.0, key.1, unicode, sep);
            if mono.is_empty() {
                out.push_str(&mag.to_string());
            } else if mag.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&mag.to_string());
                out.push_str(sep);
                out.push_str(&mono);
            }
        }
        out
    }
}

fn superscript(n: i64) -> String {
    n.to_string()
        .chars()
        .map(|ch| match ch {
            '-' => '⁻',
            d => "⁰¹²³⁴⁵⁶⁷⁸⁹"
                .chars()
                .nth(d.to_digit(10).unwrap() as usize)
                .unwrap(),
        })
        .collect()
}

fn render_monomial(a: i64, b: u32, unicode: bool, sep: &str) -> String {
    let power = |base: &str, e: i64| -> String {
        match (e, unicode) {
            (1, _) => base.to_string(),
            (_, true) => format!("{base}{}", superscript(e)),
            (_, false) => format!("{base}^{e}"),
        }
    };
    let mut parts = Vec::new();
    if a != 0 {
        parts.push(power("t", a));
    }
    if b != 0 {
        parts.push(power(if unicode { "∂" } else { "d" }, b as i64));
    }
    parts.join(sep)
}

/// Renders a principal symbol as a polynomial in `t` and `y`.
pub fn render_symbol(symbol: &Symbol) -> String {
    let op = WeylOperator::from_terms(symbol.iter().map(|(&k, c)| (k, c.clone())));
    op.render(false).replace('d', "y")
}

impl fmt::Display for WeylOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(false))
    }
}

impl fmt::Debug for WeylOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WeylOperator({self})")
    }
}

impl Add for &WeylOperator {
    type Output = WeylOperator;

    fn add(self, rhs: &WeylOperator) -> WeylOperator {
        let mut out = self.clone();
        for (&k, c) in &rhs.terms {
            insert_term(&mut out.terms, k, c.clone());
        }
        out
    }
}

impl Sub for &WeylOperator {
    type Output = WeylOperator;

    fn sub(self, rhs: &WeylOperator) -> WeylOperator {
        self + &(-rhs)
    }
}

impl Neg for &WeylOperator {
    type Output = WeylOperator;

    fn neg(self) -> WeylOperator {
        WeylOperator::from_terms(self.terms.iter().map(|(&k, c)| (k, -c)))
    }
}

impl Mul for &WeylOperator {
    type Output = WeylOperator;

    fn mul(self, rhs: &WeylOperator) -> WeylOperator {
        let mut out = WeylOperator::zero();
        for (&(a, b), c1) in &self.terms {
            for (&(c, d), c2) in &rhs.terms {
                let base = c1 * c2;
                for k in 0..=b {
                    let f = falling(c, k);
                    if f.is_zero() {
                        // (c)_k stays zero for larger k
                        break;
                    }
                    let coeff = &base * BigRational::from_integer(binomial(b, k) * f);
                    insert_term(&mut out.terms, (a + c - k as i64, b + d - k), coeff);
                }
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for WeylOperator {
            type Output = WeylOperator;

            fn $m(self, rhs: WeylOperator) -> WeylOperator {
                (&self).$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

/// `t^h Π_{s ∈ S, s + h ∉ S} (θ - s)`; for `h = 0` this is `1`.
pub fn operator_for_degree(s: &NumericalSemigroup, h: i64) -> WeylOperator {
    let theta = WeylOperator::theta();
    let mut op = WeylOperator::t_pow(h);
    for x in (0..=s.frobenius() - h).filter(|&x| s.contains(x) && !s.contains(x + h)) {
        op = &op * &(&theta - &WeylOperator::scalar(rat(x)));
    }
    op
}

/// The operator attached to a minimal generator `(a, b)` of Σ: `θ` for
/// `(1, 1)` and [`operator_for_degree`] at `h = a - b` otherwise.
pub fn operator_for_generator(s: &NumericalSemigroup, p: PlanePoint) -> WeylOperator {
    if p == PlanePoint::new(1, 1) {
        WeylOperator::theta()
    } else {
        operator_for_degree(s, p.diagonal())
    }
}

/// Generators of `D(ℂ[S])`, one per minimal generator of Σ, in the same
/// order as [`SigmaMonoid::minimal_generators`].
pub fn d_algebra_generators(s: &NumericalSemigroup) -> Vec<(PlanePoint, WeylOperator)> {
    SigmaMonoid::new(s)
        .minimal_generators()
        .iter()
        .map(|&p| (p, operator_for_generator(s, p)))
        .collect()
}

/// `t^{k+1} ∂`, the derivation matching `t^k`.
pub fn derivation_for(k: i64) -> WeylOperator {
    WeylOperator::monomial(BigRational::one(), k + 1, 1)
}

impl FromStr for WeylOperator {
    type Err = Error;

    /// Parses sums of products such as `d^2 - 4 t^-1 d`, `3/2 t*d`,
    /// `(t d - 5)^2` or `∂ t`. Products are taken in the written order and
    /// normal-ordered.
    fn from_str(src: &str) -> Result<Self> {
        let mut p = Parser {
            chars: src.chars().collect(),
            pos: 0,
        };
        let op = p.expr()?;
        p.skip_ws();
        if p.pos != p.chars.len() {
            return Err(p.error("unexpected trailing input"));
        }
        Ok(op)
    }
}

fn superscript_digit(c: char) -> Option<i64> {
    "⁰¹²³⁴⁵⁶⁷⁸⁹".chars().position(|s| s == c).map(|d| d as i64)
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn error(&self, msg: &str) -> Error {
        Error::Parse(format!("{msg} at offset {}", self.pos))
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<WeylOperator> {
        let mut acc = WeylOperator::zero();
        let mut sign = match self.peek() {
            Some('-') | Some('−') => {
                self.pos += 1;
                -1
            }
            Some('+') => {
                self.pos += 1;
                1
            }
            _ => 1,
        };
        loop {
            let term = self.term()?;
            acc = if sign < 0 { &acc - &term } else { &acc + &term };
            sign = match self.peek() {
                Some('+') => 1,
                Some('-') | Some('−') => -1,
                _ => return Ok(acc),
            };
            self.pos += 1;
        }
    }

    fn term(&mut self) -> Result<WeylOperator> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some('*') => {
                    self.pos += 1;
                    acc = &acc * &self.factor()?;
                }
                Some(c) if c.is_ascii_digit() || matches!(c, 't' | 'd' | '∂' | '(') => {
                    acc = &acc * &self.factor()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn number(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a number"));
        }
        self.chars[start..self.pos]
            .iter()
            .collect::<String>()
            .parse()
            .map_err(|_| self.error("number out of range"))
    }

    fn exponent(&mut self, allow_negative: bool) -> Result<i64> {
        if self
            .chars
            .get(self.pos)
            .is_some_and(|&c| superscript_digit(c).is_some() || c == '⁻')
        {
            return self.superscript_exponent(allow_negative);
        }
        if self.peek() != Some('^') {
            return Ok(1);
        }
        self.pos += 1;
        let neg = matches!(self.peek(), Some('-') | Some('−'));
        if neg {
            if !allow_negative {
                return Err(self.error("negative exponent"));
            }
            self.pos += 1;
        }
        let n = self.number()?;
        Ok(if neg { -n } else { n })
    }

    fn superscript_exponent(&mut self, allow_negative: bool) -> Result<i64> {
        let neg = self.chars.get(self.pos) == Some(&'⁻');
        if neg {
            if !allow_negative {
                return Err(self.error("negative exponent"));
            }
            self.pos += 1;
        }
        let mut n: i64 = 0;
        let start = self.pos;
        while let Some(d) = self.chars.get(self.pos).and_then(|&c| superscript_digit(c)) {
            n = n
                .checked_mul(10)
                .and_then(|n| n.checked_add(d))
                .ok_or_else(|| self.error("number out of range"))?;
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a superscript number"));
        }
        Ok(if neg { -n } else { n })
    }

    fn factor(&mut self) -> Result<WeylOperator> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let num = self.number()?;
                let den = if self.peek() == Some('/') {
                    self.pos += 1;
                    self.number()?
                } else {
                    1
                };
                if den == 0 {
                    return Err(self.error("zero denominator"));
                }
                Ok(WeylOperator::scalar(BigRational::new(
                    num.into(),
                    den.into(),
                )))
            }
            Some('t') => {
                self.pos += 1;
                let e = self.exponent(true)?;
                Ok(WeylOperator::t_pow(e))
            }
            Some('d') | Some('∂') => {
                self.pos += 1;
                let e = self.exponent(false)?;
                Ok(WeylOperator::d_pow(e as u32))
            }
            Some('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(self.error("expected ')'"));
                }
                self.pos += 1;
                let e = self.exponent(false)?;
                Ok(inner.pow(e as u32))
            }
            _ => Err(self.error("expected a factor")),
        }
    }
}
