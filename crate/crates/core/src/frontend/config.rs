//! Instance files: UTF-8 `key = value` lines, `#` starts a comment.
//!
//! ```text
//! p = 2
//! delta_of_x = x      # δ = x·d/dx
//! d = x
//! g = t^2 - t         # optional; computed when absent
//! seed = 7
//! degree_bound = 4
//! suites = nuclei, autos
//! ```

use std::collections::HashSet;
use std::path::Path;

use super::parse::{parse_field, parse_poly};
use crate::dext::ExtAlgebra;
use crate::error::{Error, Result};
use crate::scalars::{PrimeField, RatFunc};
use crate::towers::{minimal_p_polynomial, verify_annihilates, DerivedField, PPolynomial, DEFAULT_MAX_E};

pub const DEFAULT_SEED: u64 = 1;
pub const DEFAULT_DEGREE_BOUND: usize = 4;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InstanceConfig {
    pub p: u32,
    pub delta_of_x: String,
    pub d: String,
    pub g: Option<String>,
    pub suites: Vec<String>,
    pub seed: u64,
    pub degree_bound: usize,
}

fn unquote(v: &str) -> &str {
    let v = v.trim();
    if v.len() >= 2 && v.starts_with('"') && v.ends_with('"') {
        &v[1..v.len() - 1]
    } else {
        v
    }
}

impl InstanceConfig {
    pub fn parse(text: &str) -> Result<Self> {
        let mut seen = HashSet::new();
        let (mut p, mut delta, mut d, mut g) = (None, None, None, None);
        let mut suites = vec!["all".to_string()];
        let mut seed = DEFAULT_SEED;
        let mut degree_bound = DEFAULT_DEGREE_BOUND;
        for (n, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let lineno = n + 1;
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| Error::Config(format!("line {lineno}: expected key = value")))?;
            let (key, value) = (key.trim(), unquote(value));
            if !seen.insert(key.to_string()) {
                return Err(Error::Config(format!("line {lineno}: duplicate key '{key}'")));
            }
            let number = |what: &str| {
                value
                    .parse::<u64>()
                    .map_err(|_| Error::Config(format!("line {lineno}: {what} must be a non-negative integer")))
            };
            match key {
                "p" => p = Some(number("p")?),
                "delta_of_x" => delta = Some(value.to_string()),
                "d" => d = Some(value.to_string()),
                "g" => g = Some(value.to_string()),
                "seed" => seed = number("seed")?,
                "degree_bound" => degree_bound = number("degree_bound")? as usize,
                "suites" => {
                    suites = value
                        .split(|c: char| c == ',' || c.is_whitespace())
                        .filter(|s| !s.is_empty())
                        .map(str::to_string)
                        .collect()
                }
                other => return Err(Error::Config(format!("line {lineno}: unknown key '{other}'"))),
            }
        }
        let missing = |k: &str| Error::Config(format!("missing key '{k}'"));
        let p = p.ok_or_else(|| missing("p"))?;
        let p = u32::try_from(p).map_err(|_| Error::InvalidModulus(p))?;
        Ok(InstanceConfig {
            p,
            delta_of_x: delta.ok_or_else(|| missing("delta_of_x"))?,
            d: d.ok_or_else(|| missing("d"))?,
            g,
            suites,
            seed,
            degree_bound,
        })
    }
}

/// A loaded instance: the field, its p-polynomial and the algebra `S_f`.
#[derive(Debug)]
pub struct Instance {
    pub config: InstanceConfig,
    pub field: DerivedField,
    pub g: PPolynomial,
    /// True when `g` came from the file rather than from the minimal search.
    pub g_declared: bool,
    pub alg: ExtAlgebra<DerivedField>,
}

/// Reads a declared `g` and checks it has the shape `t^{p^e} + … + a_e t`
/// with constant coefficients.
fn declared_g(s: &str, k: &DerivedField) -> Result<PPolynomial> {
    let p = k.modulus();
    let h = parse_poly(s, k)?;
    let deg = h.degree().ok_or_else(|| Error::NotPPolynomial("g is zero".into()))?;
    let mut e = 0;
    while (p as usize).pow(e as u32) < deg {
        e += 1;
    }
    if (p as usize).pow(e as u32) != deg || e == 0 {
        return Err(Error::NotPPolynomial(format!("degree {deg} is not a positive power of {p}")));
    }
    if !h.coeffs()[deg].is_one() {
        return Err(Error::NotPPolynomial("g is not monic".into()));
    }
    for (i, c) in h.coeffs().iter().enumerate() {
        let is_p_power = (0..=e).any(|j| (p as usize).pow(j as u32) == i);
        if !c.is_zero() && !is_p_power {
            return Err(Error::NotPPolynomial(format!("g has a t^{i} term")));
        }
        if !k.is_constant(c) {
            return Err(Error::NotPPolynomial(format!("coefficient {c} is not a constant")));
        }
    }
    let coeffs: Vec<RatFunc> = (0..e)
        .map(|i| h.coeffs().get((p as usize).pow((e - 1 - i) as u32)).cloned().unwrap_or_else(|| RatFunc::zero(p)))
        .collect();
    Ok(PPolynomial::new(p, coeffs))
}

pub fn build_instance(config: InstanceConfig) -> Result<Instance> {
    PrimeField::new(config.p as u64)?;
    let p = config.p;
    let field = DerivedField::new(parse_field(&config.delta_of_x, p)?)?;
    let d = parse_field(&config.d, p)?;
    let (g, g_declared) = match &config.g {
        Some(s) => {
            let g = declared_g(s, &field)?;
            verify_annihilates(&field, &g, 20, config.seed)?;
            (g, true)
        }
        None => (minimal_p_polynomial(&field, DEFAULT_MAX_E)?, false),
    };
    let alg = ExtAlgebra::new(field.clone(), g.clone(), d)?;
    Ok(Instance { config, field, g, g_declared, alg })
}

pub fn load_instance_str(text: &str) -> Result<Instance> {
    build_instance(InstanceConfig::parse(text)?)
}

pub fn load_instance(path: impl AsRef<Path>) -> Result<Instance> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    load_instance_str(&text)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn loads_the_euler_instance() {
        let inst = load_instance_str("p = 2\ndelta_of_x = \"x\"\nd = \"x\"\n").unwrap();
        assert_eq!(inst.g, PPolynomial::artin_schreier(2));
        assert!(!inst.g_declared);
        assert_eq!(*inst.alg.f(), parse_poly("t^2 - t - x", &inst.field).unwrap());
        assert_eq!(inst.config.seed, DEFAULT_SEED);
        assert_eq!(inst.config.degree_bound, DEFAULT_DEGREE_BOUND);
        assert_eq!(inst.config.suites, vec!["all"]);
    }

    #[test]
    fn loads_the_standard_instance() {
        let inst = load_instance_str("p=2\ndelta_of_x=1\nd=x").unwrap();
        assert_eq!(inst.g, PPolynomial::pure(2, 1));
        assert_eq!(*inst.alg.f(), parse_poly("t^2 - x", &inst.field).unwrap());
    }

    #[test]
    fn declared_g_is_checked() {
        let inst = load_instance_str("p = 3\ndelta_of_x = x\nd = x\ng = t^3 - t\n").unwrap();
        assert!(inst.g_declared);
        assert_eq!(inst.g, PPolynomial::artin_schreier(3));
        // t^9 − t also annihilates x·d/dx.
        let inst = load_instance_str("p = 3\ndelta_of_x = x\nd = x\ng = t^9 - t\n").unwrap();
        assert_eq!(inst.g.exponent(), 2);
        assert_eq!(
            load_instance_str("p = 3\ndelta_of_x = x\nd = x\ng = t^3\n").unwrap_err(),
            Error::GNotAnnihilating
        );
        for bad in ["t^3 + t^2", "t^4", "2*t^3", "t^3 + x*t", "t^3 + 1"] {
            let text = format!("p = 3\ndelta_of_x = x\nd = x\ng = {bad}\n");
            assert!(matches!(load_instance_str(&text), Err(Error::NotPPolynomial(_))), "{bad}");
        }
    }

    #[test]
    fn config_errors() {
        assert_eq!(load_instance_str("p = 2\ndelta_of_x = 0\nd = x").unwrap_err(), Error::ZeroDerivation);
        assert_eq!(load_instance_str("p = 4\ndelta_of_x = 1\nd = x").unwrap_err(), Error::InvalidModulus(4));
        assert!(matches!(load_instance_str("p = 2\nd = x"), Err(Error::Config(_))));
        assert!(matches!(load_instance_str("p = 2\np = 3\n"), Err(Error::Config(_))));
        assert!(matches!(load_instance_str("p = 2\ncolour = red\n"), Err(Error::Config(_))));
        assert!(matches!(load_instance_str("p = two\n"), Err(Error::Config(_))));
        assert!(matches!(load_instance_str("p 2\n"), Err(Error::Config(_))));
        assert!(matches!(
            load_instance_str("p = 2\ndelta_of_x = x\nd = 1/(x-x)"),
            Err(Error::DivisionByZero)
        ));
        assert!(matches!(load_instance_str("p = 2\ndelta_of_x = x\nd = t"), Err(Error::SyntaxError { .. })));
    }

    #[test]
    fn comments_suites_and_overrides() {
        let cfg = InstanceConfig::parse("# header\np = 3 # prime\ndelta_of_x = x\nd = x\nseed = 9\ndegree_bound = 2\nsuites = nuclei, autos\n").unwrap();
        assert_eq!(cfg.seed, 9);
        assert_eq!(cfg.degree_bound, 2);
        assert_eq!(cfg.suites, vec!["nuclei", "autos"]);
    }
}
