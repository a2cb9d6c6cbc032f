//! Closed-form solutions of the eigen-equation on the replacement gadgets.
//! Every output is a linear combination of the boundary values whose
//! coefficients are quotients of integer polynomials in `μ`.

use super::ReplaceError;

/// Integer polynomial, ascending coefficients.
type Poly = Vec<i64>;

fn mul(a: &[i64], b: &[i64]) -> Poly {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn scale(a: &[i64], k: i64) -> Poly {
    a.iter().map(|c| c * k).collect()
}

fn eval(p: &[i64], mu: f64) -> f64 {
    p.iter().rev().fold(0.0, |acc, &c| acc * mu + c as f64)
}

/// `num(μ) / den(μ)`.
#[derive(Clone, Debug)]
struct Ratio {
    num: Poly,
    den: Poly,
}

impl Ratio {
    fn new(num: Poly, den: Poly) -> Ratio {
        Ratio { num, den }
    }

    fn eval(&self, mu: f64) -> f64 {
        eval(&self.num, mu) / eval(&self.den, mu)
    }
}

/// An output value: `Σ_k coeffs[k](μ) · inputs[k]`.
#[derive(Clone, Debug)]
struct Linear {
    output: &'static str,
    coeffs: Vec<Ratio>,
}

/// A named family of closed forms.
#[derive(Clone, Debug)]
pub struct LemmaFormula {
    pub name: &'static str,
    /// Boundary symbols the outputs are expressed in.
    pub inputs: Vec<&'static str>,
    /// `μ` must lie strictly below this value for the lemma's sign argument.
    pub mu_bound: f64,
    outputs: Vec<Linear>,
}

impl LemmaFormula {
    pub fn output_names(&self) -> Vec<&'static str> {
        self.outputs.iter().map(|o| o.output).collect()
    }

    /// Evaluates every output without checking `μ` against the bound.
    pub fn eval_unchecked(&self, mu: f64, inputs: &[f64]) -> Result<Vec<(&'static str, f64)>, ReplaceError> {
        if inputs.len() != self.inputs.len() {
            return Err(ReplaceError::InputCount { expected: self.inputs.len(), found: inputs.len() });
        }
        Ok(self
            .outputs
            .iter()
            .map(|o| (o.output, o.coeffs.iter().zip(inputs).map(|(c, x)| c.eval(mu) * x).sum()))
            .collect())
    }

    pub fn eval(&self, mu: f64, inputs: &[f64]) -> Result<Vec<(&'static str, f64)>, ReplaceError> {
        if !(0.0..self.mu_bound).contains(&mu) {
            return Err(ReplaceError::MuOutOfRange { mu, bound: self.mu_bound });
        }
        self.eval_unchecked(mu, inputs)
    }
}

pub const FORMULA_NAMES: [&str; 9] = [
    "E1",
    "E2",
    "E3",
    "noM2M3M4(i)",
    "noM2M3M4(ii)",
    "noM2M3M4(iii)",
    "noM5(i)",
    "noM5(ii)",
    "noM5(iii)",
];

fn single(output: &'static str, num: Poly, den: Poly) -> Linear {
    Linear { output, coeffs: vec![Ratio::new(num, den)] }
}

/// Two-input outputs built from `F(x, y) = (a(μ) x + b(μ) y) / d(μ)`: the
/// forward value `F(x, y)` and the swapped value `F(y, x)`.
fn pair(out: &'static str, a: &[i64], b: &[i64], d: &[i64]) -> Linear {
    Linear { output: out, coeffs: vec![Ratio::new(a.to_vec(), d.to_vec()), Ratio::new(b.to_vec(), d.to_vec())] }
}

fn swapped(out: &'static str, a: &[i64], b: &[i64], d: &[i64]) -> Linear {
    pair(out, b, a, d)
}

pub fn lemma_formula(name: &str) -> Result<LemmaFormula, ReplaceError> {
    let formula = match name {
        "E1" => {
            let w_num = vec![-4, 19, -9, 1];
            let w_den = vec![-4, 26, -16, 2];
            LemmaFormula {
                name: "E1",
                inputs: vec!["x1"],
                mu_bound: 0.129,
                outputs: vec![
                    single("x2", vec![2, -1], vec![2]),
                    single("x3", vec![2, -6, 1], vec![2]),
                    single("x4", vec![4, -19, 9, -1], vec![4]),
                    single("z1", w_num.clone(), w_den.clone()),
                    single("z2", mul(&w_num, &[1, -1]), w_den.clone()),
                    single("z3", mul(&w_num, &[2, -5, 1]), scale(&w_den, 2)),
                ],
            }
        }
        "E2" => LemmaFormula {
            name: "E2",
            inputs: vec!["x1"],
            mu_bound: 0.268,
            outputs: vec![single("x2", vec![2, -1], vec![2]), single("x3", vec![2, -6, 1], vec![2])],
        },
        "E3" => LemmaFormula {
            name: "E3",
            inputs: vec!["x1"],
            mu_bound: 0.355,
            outputs: vec![single("x2", vec![1, -1], vec![1]), single("x3", vec![2, -5, 1], vec![2])],
        },
        "noM2M3M4(i)" => {
            let d = [10, -7, 1];
            let (fa, fb) = ([6, -2], [4]);
            let (ga, gb) = ([2], [8, -2]);
            LemmaFormula {
                name: "noM2M3M4(i)",
                inputs: vec!["xr", "xr3"],
                mu_bound: 0.355,
                outputs: vec![
                    pair("xr1", &fa, &fb, &d),
                    pair("xr2", &ga, &gb, &d),
                    swapped("z1", &ga, &gb, &d),
                    swapped("z2", &fa, &fb, &d),
                ],
            }
        }
        "noM2M3M4(ii)" => {
            let c = [-32, 36, -11, 1];
            let w = [8, -7, 1];
            let (fa, fb) = ([-20, 14, -2], [-12, 2]);
            let (ga, gb) = ([2], [6, -1]);
            let (la, lb) = ([-4], [-28, 16, -2]);
            LemmaFormula {
                name: "noM2M3M4(ii)",
                inputs: vec!["xr", "xr4"],
                mu_bound: 0.355,
                outputs: vec![
                    pair("xr1", &fa, &fb, &c),
                    pair("xr2", &ga, &gb, &w),
                    pair("xr3", &la, &lb, &c),
                    swapped("z1", &la, &lb, &c),
                    swapped("z2", &ga, &gb, &w),
                    swapped("z3", &fa, &fb, &c),
                ],
            }
        }
        "noM2M3M4(iii)" => {
            let c = [-14, 27, -10, 1];
            let (fa, fb) = ([-10, 12, -2], [-4]);
            let (ga, gb) = ([-6, 2], [-8, 2]);
            let (la, lb) = ([-4], [-10, 7, -1]);
            LemmaFormula {
                name: "noM2M3M4(iii)",
                inputs: vec!["xr", "xr4"],
                mu_bound: 0.091,
                outputs: vec![
                    pair("xr1", &fa, &fb, &c),
                    pair("xr2", &ga, &gb, &c),
                    pair("xr3", &la, &lb, &c),
                    swapped("z1", &la, &lb, &c),
                    swapped("z2", &ga, &gb, &c),
                    swapped("z3", &fa, &fb, &c),
                ],
            }
        }
        "noM5(i)" => {
            let q = [76, -126, 67, -14, 1];
            let (fa, fb) = ([64, -72, 22, -2], [12, -2]);
            let (ga, gb) = ([40, -28, 4], [36, -18, 2]);
            let (la, lb) = ([16, -4], [60, -52, 13, -1]);
            let (pa, pb) = ([8], [68, -72, 22, -2]);
            LemmaFormula {
                name: "noM5(i)",
                inputs: vec!["xr", "xr5"],
                mu_bound: 0.355,
                outputs: vec![
                    pair("xr1", &fa, &fb, &q),
                    pair("xr2", &ga, &gb, &q),
                    pair("xr3", &la, &lb, &q),
                    pair("xr4", &pa, &pb, &q),
                    swapped("z1", &pa, &pb, &q),
                    swapped("z2", &la, &lb, &q),
                    swapped("z3", &ga, &gb, &q),
                    swapped("z4", &fa, &fb, &q),
                ],
            }
        }
        "noM5(ii)" => {
            let six = vec![-24, 216, -252, 102, -17, 1];
            let w_den = vec![-24, 238, -261, 103, -17, 1];
            LemmaFormula {
                name: "noM5(ii)",
                inputs: vec!["x1"],
                mu_bound: 0.091,
                outputs: vec![
                    single("x2", vec![2, -1], vec![2]),
                    single("x3", vec![2, -6, 1], vec![2]),
                    single("x4", vec![4, -24, 10, -1], vec![4]),
                    single("x5", vec![12, -88, 62, -14, 1], vec![12, -2]),
                    single("x6", six.clone(), vec![-24, 4]),
                    single("z1", six.clone(), w_den.clone()),
                    single("z2", mul(&six, &[1, -1]), w_den.clone()),
                    single("z3", mul(&six, &[1, -4, 1]), w_den.clone()),
                    single("z4", mul(&six, &[2, -15, 8, -1]), scale(&w_den, 2)),
                ],
            }
        }
        "noM5(iii)" => {
            let w = vec![-168, 2200, -4012, 2996, -1136, 231, -24, 1];
            let wp = vec![-8, 110, -157, 77, -15, 1];
            LemmaFormula {
                name: "noM5(iii)",
                inputs: vec!["x8"],
                mu_bound: 0.059,
                outputs: vec![
                    single("x1", scale(&[42, -19, 2], -4), w.clone()),
                    single("x2", scale(&mul(&[-6, 1], &[14, -7, 1]), 2), w.clone()),
                    single("x3", vec![-168, 172, -48, 4], w.clone()),
                    single("x4", scale(&[84, -176, 87, -16, 1], -2), w.clone()),
                    single("x5", scale(&[-84, 470, -400, 132, -19, 1], 2), w.clone()),
                    single("x6", vec![-168, 1612, -1896, 896, -206, 23, -1], w.clone()),
                    single("x7", scale(&[84, -932, 1244, -662, 170, -21, 1], -2), w.clone()),
                    single("z1", vec![-8], wp.clone()),
                    single("z2", vec![-8, 8], wp.clone()),
                    single("z3", scale(&[2, -5, 1], -4), wp.clone()),
                    single("z4", scale(&[-2, 13, -8, 1], 4), wp.clone()),
                    single("z5", scale(&[4, -44, 43, -12, 1], -2), wp.clone()),
                ],
            }
        }
        _ => return Err(ReplaceError::UnknownFormula(name.to_string())),
    };
    Ok(formula)
}
