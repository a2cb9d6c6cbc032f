//! Exact real-root isolation for integer polynomials with Sturm sequences
//! over big rationals, and the catalog of polynomials whose sign on small
//! intervals the replacement arguments rely on.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum PolyError {
    #[error("root claim `{name}`: quoted {claimed}, isolated {found}")]
    ClaimMismatch { name: String, claimed: f64, found: f64 },
    #[error("sign statement `{0}` fails")]
    SignMismatch(String),
    #[error("the zero polynomial has no isolated roots")]
    ZeroPolynomial,
}

/// Integer coefficients in ascending degree; the leading one is nonzero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

type RatPoly = Vec<BigRational>;

fn trim<T: Zero>(v: &mut Vec<T>) {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        trim(&mut coeffs);
        IntPolynomial { coeffs }
    }

    /// From machine integers in ascending degree.
    pub fn from_ascending(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&x| BigInt::from(x)).collect())
    }

    /// From machine integers with the leading coefficient first.
    pub fn from_descending(c: &[i64]) -> Self {
        Self::new(c.iter().rev().map(|&x| BigInt::from(x)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn eval_int(&self, t: i64) -> BigInt {
        let t = BigInt::from(t);
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * &t + c)
    }

    pub fn eval(&self, t: &BigRational) -> BigRational {
        self.coeffs.iter().rev().fold(BigRational::zero(), |acc, c| acc * t + BigRational::from_integer(c.clone()))
    }

    /// Sign of `p(t)` by integer Horner on `t = a / b`, `b > 0`: the value
    /// `b^d p(a / b)` has the same sign.
    pub fn sign_at(&self, t: &BigRational) -> i8 {
        let (a, b) = (t.numer(), t.denom());
        let mut acc = BigInt::zero();
        let mut scale = BigInt::one();
        for c in self.coeffs.iter().rev() {
            acc = acc * a + c * &scale;
            scale *= b;
        }
        if acc.is_positive() {
            1
        } else if acc.is_negative() {
            -1
        } else {
            0
        }
    }

    pub fn eval_f64(&self, t: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * t + c.to_f64().unwrap_or(f64::NAN))
    }

    pub fn derivative(&self) -> IntPolynomial {
        Self::new(self.coeffs.iter().enumerate().skip(1).map(|(i, c)| c * BigInt::from(i)).collect())
    }

    fn to_rat(&self) -> RatPoly {
        self.coeffs.iter().map(|c| BigRational::from_integer(c.clone())).collect()
    }

    /// Clears denominators and divides by the content; the sign of the
    /// leading coefficient is kept.
    fn from_rat(p: &RatPoly) -> IntPolynomial {
        let lcm = p.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = p.iter().map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer()).collect();
        let content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        let ints = if content.is_zero() { ints } else { ints.into_iter().map(|c| c / &content).collect() };
        IntPolynomial::new(ints)
    }

    /// `p / gcd(p, p')`: same distinct roots, all simple.
    pub fn squarefree(&self) -> IntPolynomial {
        if self.degree() < 1 {
            return self.clone();
        }
        let g = rat_gcd(self.to_rat(), self.derivative().to_rat());
        if g.len() <= 1 {
            return self.clone();
        }
        let (q, _) = rat_divmod(&self.to_rat(), &g);
        let mut out = Self::from_rat(&q);
        if out.coeffs.last().map(Signed::is_negative) != self.coeffs.last().map(Signed::is_negative) {
            out.coeffs.iter_mut().for_each(|c| *c = -c.clone());
        }
        out
    }

    /// `1 + max |a_i / a_n|`: every real root lies strictly inside.
    pub fn cauchy_bound(&self) -> BigRational {
        let lead = BigRational::from_integer(self.coeffs.last().cloned().unwrap_or_else(BigInt::one)).abs();
        let m = self.coeffs[..self.degree()]
            .iter()
            .map(|c| BigRational::from_integer(c.abs()) / &lead)
            .fold(BigRational::zero(), |a, b| if b > a { b } else { a });
        m + BigRational::one()
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let a = c.abs();
            match (i, a.is_one()) {
                (0, _) => write!(f, "{a}")?,
                (1, true) => write!(f, "t")?,
                (1, false) => write!(f, "{a}t")?,
                (_, true) => write!(f, "t^{i}")?,
                (_, false) => write!(f, "{a}t^{i}")?,
            }
            first = false;
        }
        Ok(())
    }
}

fn rat_divmod(a: &RatPoly, b: &RatPoly) -> (RatPoly, RatPoly) {
    let mut r = a.clone();
    trim(&mut r);
    let db = b.len() - 1;
    let lead = b[db].clone();
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let mut q = vec![BigRational::zero(); r.len() - db];
    while r.len() > db && !r.is_empty() {
        let k = r.len() - 1 - db;
        let c = &r[r.len() - 1] / &lead;
        for (i, bi) in b.iter().enumerate() {
            r[k + i] -= &c * bi;
        }
        q[k] = c;
        r.pop();
        trim(&mut r);
    }
    (q, r)
}

fn rat_gcd(mut a: RatPoly, mut b: RatPoly) -> RatPoly {
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let (_, r) = rat_divmod(&a, &b);
        a = b;
        b = r;
    }
    a
}

fn sturm_chain(p: &IntPolynomial) -> Vec<IntPolynomial> {
    let mut chain = vec![p.clone(), p.derivative()];
    loop {
        let k = chain.len();
        if chain[k - 1].is_zero() {
            chain.pop();
            break;
        }
        let (_, r) = rat_divmod(&chain[k - 2].to_rat(), &chain[k - 1].to_rat());
        if r.is_empty() {
            break;
        }
        let mut next = IntPolynomial::from_rat(&r);
        // The content division keeps the sign of the remainder; the chain
        // needs its negation.
        next.coeffs.iter_mut().for_each(|c| *c = -c.clone());
        chain.push(next);
    }
    chain
}

fn sign_changes(chain: &[IntPolynomial], t: &BigRational) -> usize {
    let signs: Vec<i8> = chain.iter().map(|q| q.sign_at(t)).filter(|&s| s != 0).collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// A half-open interval `(lo, hi]` holding exactly one root, or the exact
/// root `lo == hi`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootInterval {
    pub lo: BigRational,
    pub hi: BigRational,
}

impl RootInterval {
    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn midpoint_f64(&self) -> f64 {
        ((&self.lo + &self.hi) / BigRational::from_integer(2.into())).to_f64().unwrap_or(f64::NAN)
    }

    pub fn lo_f64(&self) -> f64 {
        self.lo.to_f64().unwrap_or(f64::NAN)
    }

    pub fn hi_f64(&self) -> f64 {
        self.hi.to_f64().unwrap_or(f64::NAN)
    }
}

/// Distinct real roots in `(lo, hi]`.
pub fn count_roots(p: &IntPolynomial, lo: &BigRational, hi: &BigRational) -> usize {
    if p.is_zero() || lo >= hi {
        return 0;
    }
    let chain = sturm_chain(&p.squarefree());
    sign_changes(&chain, lo).saturating_sub(sign_changes(&chain, hi))
}

/// One interval per distinct real root of `p` in `(lo, hi]`, in increasing
/// order, found by bisection on Sturm counts.
pub fn sturm_isolate(p: &IntPolynomial, lo: &BigRational, hi: &BigRational) -> Vec<RootInterval> {
    if p.is_zero() || lo >= hi {
        return Vec::new();
    }
    let sf = p.squarefree();
    let chain = sturm_chain(&sf);
    let mut out = Vec::new();
    let mut stack = vec![(lo.clone(), hi.clone(), sign_changes(&chain, lo), sign_changes(&chain, hi))];
    let two = BigRational::from_integer(2.into());
    while let Some((a, b, va, vb)) = stack.pop() {
        let count = va.saturating_sub(vb);
        if count == 0 {
            continue;
        }
        if count == 1 {
            out.push(if sf.sign_at(&b) == 0 { RootInterval { lo: b.clone(), hi: b } } else { RootInterval { lo: a, hi: b } });
            continue;
        }
        let m = (&a + &b) / &two;
        let vm = sign_changes(&chain, &m);
        stack.push((m.clone(), b, vm, vb));
        stack.push((a, m, va, vm));
    }
    out.sort_by(|x, y| x.lo.cmp(&y.lo));
    out
}

/// Bisects an isolating interval down to `width`; each step keeps the
/// half that holds the root, so the intervals are nested.
pub fn refine(p: &IntPolynomial, iv: &RootInterval, width: &BigRational) -> RootInterval {
    let sf = p.squarefree();
    let chain = sturm_chain(&sf);
    let two = BigRational::from_integer(2.into());
    let mut cur = iv.clone();
    while !cur.is_exact() && cur.width() > *width {
        let m = (&cur.lo + &cur.hi) / &two;
        if sf.sign_at(&m) == 0 && sign_changes(&chain, &cur.lo) > sign_changes(&chain, &m) {
            return RootInterval { lo: m.clone(), hi: m };
        }
        if sign_changes(&chain, &cur.lo) > sign_changes(&chain, &m) {
            cur.hi = m;
        } else {
            cur.lo = m;
        }
    }
    cur
}

/// Every distinct real root, refined to `width`.
pub fn real_roots(p: &IntPolynomial, width: &BigRational) -> Result<Vec<RootInterval>, PolyError> {
    if p.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    let b = p.cauchy_bound();
    Ok(sturm_isolate(p, &-b.clone(), &b).iter().map(|iv| refine(p, iv, width)).collect())
}

pub fn rational(num: i64, den: i64) -> BigRational {
    BigRational::new(num.into(), den.into())
}

/// `(name, descending coefficients)`.
const CATALOG: &[(&str, &[i64])] = &[
    ("E1.p1", &[1, -17, 104, -275, 297, -90, 8]),
    ("E1.p2", &[1, -19, 132, -399, 475, -150, 0]),
    ("E1.p4", &[19, -325, 2004, -5349, 5821, -1770, 144]),
    ("E1.cubic", &[1, -8, 14, -5]),
    ("E2.quadratic", &[1, -6, 2]),
    ("E3.quadratic", &[1, -5, 2]),
    ("noM2M3M4(i).denominator", &[1, -7, 10]),
    ("noM2M3M4(ii).omega", &[1, -7, 8]),
    ("noM2M3M4(ii).cubic", &[1, -11, 36, -32]),
    ("noM2M3M4(iii).zero", &[1, -10, 27, -4]),
    ("noM2M3M4(iii).cubic", &[1, -10, 27, -14]),
    ("noM5(i).q", &[1, -14, 67, -126, 76]),
    ("noM5(i).quartic", &[1, -14, 67, -126, 46]),
    ("noM5(ii).n21", &[21, -588, 6848, -42928, 156427, -333056, 392628, -221000, 38800, -2016]),
    ("noM5(ii).quintic", &[1, -18, 119, -348, 408, -100]),
    ("noM5(iii).p1", &[1, -39, 668, -6606, 41701, -175339, 497026, -939272, 1140452, -823624, 300472, -36080, 1344]),
    ("noM5(iii).p2", &[2, -68, 992, -8100, 40446, -126432, 242312, -264520, 137816, -20208, 0]),
    ("noM5(iii).p3", &[1, -28, 328, -2082, 7731, -16830, 20176, -11204, 1684]),
    (
        "noM5(iii).p4",
        &[26, -1014, 17370, -171824, 1085218, -4566914, 12963122, -24547504, 29894064, -21678744, 7950088, -958288, 34944],
    ),
];

pub fn polynomial_names() -> Vec<&'static str> {
    CATALOG.iter().map(|c| c.0).collect()
}

pub fn named_polynomial(name: &str) -> Option<IntPolynomial> {
    CATALOG.iter().find(|c| c.0 == name).map(|c| IntPolynomial::from_descending(c.1))
}

/// `(polynomial, quoted smallest positive root)`.
const CLAIMS: &[(&str, f64)] = &[
    ("E1.cubic", 0.481),
    ("E1.p1", 0.171),
    ("E1.p4", 0.132),
    ("noM2M3M4(iii).zero", 0.157),
    ("noM5(i).quartic", 0.472),
    ("noM5(iii).p3", 0.227),
    ("noM5(iii).p1", 0.081),
    ("noM5(iii).p4", 0.070),
];

#[derive(Clone, Debug, Serialize)]
pub struct RootClaimReport {
    pub polynomial: String,
    pub claimed: f64,
    pub lo: f64,
    pub hi: f64,
    pub smallest_real: f64,
    pub smallest_positive: f64,
    pub real_root_count: usize,
    pub holds: bool,
}

const CLAIM_TOLERANCE: f64 = 1e-3;

/// Refines the smallest positive root of every quoted polynomial to width
/// `1e-6` and matches it to the quoted value within `1e-3`.
pub fn verify_root_claims() -> Vec<RootClaimReport> {
    let width = rational(1, 1_000_000);
    CLAIMS
        .iter()
        .map(|&(name, claimed)| {
            let p = named_polynomial(name).expect("claim names a catalog polynomial");
            let roots = real_roots(&p, &width).expect("catalog polynomials are nonzero");
            let positive = roots.iter().find(|r| r.lo.is_positive() || (r.is_exact() && r.lo.is_positive()));
            let positive = positive.cloned().unwrap_or(RootInterval { lo: BigRational::zero(), hi: BigRational::zero() });
            let holds = positive.lo_f64() >= claimed - CLAIM_TOLERANCE && positive.hi_f64() <= claimed + CLAIM_TOLERANCE;
            RootClaimReport {
                polynomial: name.to_string(),
                claimed,
                lo: positive.lo_f64(),
                hi: positive.hi_f64(),
                smallest_real: roots.first().map(RootInterval::midpoint_f64).unwrap_or(f64::NAN),
                smallest_positive: positive.midpoint_f64(),
                real_root_count: roots.len(),
                holds,
            }
        })
        .collect()
}

/// The first failing claim as an error.
pub fn ensure_root_claims(reports: &[RootClaimReport]) -> Result<(), PolyError> {
    match reports.iter().find(|r| !r.holds) {
        Some(r) => {
            Err(PolyError::ClaimMismatch { name: r.polynomial.clone(), claimed: r.claimed, found: r.smallest_positive })
        }
        None => Ok(()),
    }
}

/// `(polynomial, upper end of (0, b) as b_num / 1000, sign required on the
/// open interval)`.
const SIGN_STATEMENTS: &[(&str, i64, i8)] = &[
    ("E1.p1", 129, 1),
    ("E1.p4", 129, 1),
    ("E1.cubic", 129, -1),
    ("E2.quadratic", 268, 1),
    ("E3.quadratic", 355, 1),
    ("noM2M3M4(i).denominator", 355, 1),
    ("noM2M3M4(ii).omega", 355, 1),
    ("noM2M3M4(ii).cubic", 355, -1),
    ("noM2M3M4(iii).zero", 91, -1),
    ("noM2M3M4(iii).cubic", 91, -1),
    ("noM5(i).q", 355, 1),
    ("noM5(i).quartic", 355, 1),
    ("noM5(ii).n21", 91, -1),
    ("noM5(ii).quintic", 91, -1),
    ("noM5(iii).p1", 59, 1),
    ("noM5(iii).p3", 59, 1),
    ("noM5(iii).p4", 59, 1),
];

#[derive(Clone, Debug, Serialize)]
pub struct SignReport {
    pub polynomial: String,
    pub upper: f64,
    pub expected_sign: i8,
    /// Distinct roots in the open interval `(0, upper)`.
    pub roots_inside: usize,
    pub sign_at_midpoint: i8,
    pub holds: bool,
}

/// Checks that each polynomial has no root in `(0, b)` and the required
/// sign there.
pub fn verify_sign_statements() -> Vec<SignReport> {
    SIGN_STATEMENTS
        .iter()
        .map(|&(name, b, sign)| {
            let p = named_polynomial(name).expect("statement names a catalog polynomial");
            let hi = rational(b, 1000);
            let at_hi = usize::from(p.eval(&hi).is_zero());
            let inside = count_roots(&p, &BigRational::zero(), &hi) - at_hi;
            let mid = p.eval(&rational(b, 2000));
            let s = if mid.is_positive() {
                1
            } else if mid.is_negative() {
                -1
            } else {
                0
            };
            SignReport {
                polynomial: name.to_string(),
                upper: b as f64 / 1000.0,
                expected_sign: sign,
                roots_inside: inside,
                sign_at_midpoint: s,
                holds: inside == 0 && s == sign,
            }
        })
        .collect()
}

/// The first failing sign statement as an error.
pub fn ensure_sign_statements(reports: &[SignReport]) -> Result<(), PolyError> {
    match reports.iter().find(|r| !r.holds) {
        Some(r) => Err(PolyError::SignMismatch(r.polynomial.clone())),
        None => Ok(()),
    }
}
