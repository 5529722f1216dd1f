//! JSON interchange.
//!
//! Rationals are `"p/q"` strings (`"p"` is accepted on input), Gaussian
//! rationals are `{"re", "im"}`, an exponent is
//! `{"growth", "freq": {"rat", "gens": {name: q}}}`. A function is an array
//! of `{"coeff", "power", "exponent"}` terms and a tuple is an array of
//! functions. Generator-polynomial coefficients are arrays of
//! `{"coeff", "monomial": {name: power}}`.
//!
//! Partial fractions are arrays of `{"pole", "order", "residue"}`; a rational
//! function is `{"numerator": [c_0, c_1, …], "denominator": [{"pole",
//! "multiplicity"}]}` with generator-polynomial numerator coefficients in
//! ascending powers of `s`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::bohl::{Bohl, BohlFunction, BohlTuple, SymbolicBohl, Term};
use crate::error::{Error, Result};
use crate::laplace::{PartialFractionForm, PartialFractions, RationalFunction, SPoly};
use crate::scalar::{
    gaussian, is_valid_generator_name, parse_rational, rational_to_json, Exponent, FreqVector,
    GaussianRational, GenPoly, Monomial, Rational,
};

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CoeffJson {
    re: String,
    im: String,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FreqJson {
    rat: String,
    #[serde(default)]
    gens: BTreeMap<String, String>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ExponentJson {
    growth: String,
    freq: FreqJson,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TermJson<C> {
    coeff: C,
    power: u32,
    exponent: ExponentJson,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MonoTermJson {
    coeff: CoeffJson,
    #[serde(default)]
    monomial: BTreeMap<String, u32>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PfTermJson<C> {
    pole: ExponentJson,
    order: u32,
    residue: C,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FactorJson {
    pole: ExponentJson,
    multiplicity: u32,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RationalFunctionJson {
    numerator: Vec<Vec<MonoTermJson>>,
    denominator: Vec<FactorJson>,
}

fn bad(msg: impl std::fmt::Display) -> Error {
    Error::Json(msg.to_string())
}

fn rat_from(s: &str) -> Result<Rational> {
    parse_rational(s).ok_or_else(|| bad(format!("not a rational: {s:?}")))
}

fn gen_name(name: &str) -> Result<String> {
    if is_valid_generator_name(name) {
        Ok(name.to_string())
    } else {
        Err(Error::InvalidGeneratorName(name.to_string()))
    }
}

fn coeff_to(c: &GaussianRational) -> CoeffJson {
    CoeffJson {
        re: rational_to_json(&c.re),
        im: rational_to_json(&c.im),
    }
}

fn coeff_from(c: &CoeffJson) -> Result<GaussianRational> {
    Ok(gaussian(rat_from(&c.re)?, rat_from(&c.im)?))
}

fn exponent_to(e: &Exponent) -> ExponentJson {
    ExponentJson {
        growth: rational_to_json(&e.growth),
        freq: FreqJson {
            rat: rational_to_json(e.freq.rational_part()),
            gens: e
                .freq
                .generator_coords()
                .iter()
                .map(|(n, c)| (n.clone(), rational_to_json(c)))
                .collect(),
        },
    }
}

fn exponent_from(e: &ExponentJson) -> Result<Exponent> {
    let gens = e
        .freq
        .gens
        .iter()
        .map(|(n, c)| Ok((gen_name(n)?, rat_from(c)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(Exponent::new(
        rat_from(&e.growth)?,
        FreqVector::from_parts(rat_from(&e.freq.rat)?, gens),
    ))
}

fn genpoly_to(p: &GenPoly) -> Vec<MonoTermJson> {
    p.terms()
        .iter()
        .map(|(m, c)| MonoTermJson {
            coeff: coeff_to(c),
            monomial: m.powers().clone(),
        })
        .collect()
}

fn genpoly_from(items: &[MonoTermJson]) -> Result<GenPoly> {
    let terms = items
        .iter()
        .map(|item| {
            let powers = item
                .monomial
                .iter()
                .map(|(n, &p)| Ok((gen_name(n)?, p)))
                .collect::<Result<Vec<_>>>()?;
            Ok((Monomial::from_powers(powers), coeff_from(&item.coeff)?))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(GenPoly::from_terms(terms))
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("plain data serializes")
}

fn from_value<T: for<'de> Deserialize<'de>>(v: &Value) -> Result<T> {
    T::deserialize(v).map_err(bad)
}

fn bohl_to<C, J: Serialize>(f: &Bohl<C>, coeff: impl Fn(&C) -> J) -> Value
where
    C: crate::scalar::Coefficient,
{
    let terms: Vec<TermJson<J>> = f
        .terms()
        .map(|t| TermJson {
            coeff: coeff(t.coeff),
            power: t.power,
            exponent: exponent_to(&t.exponent),
        })
        .collect();
    to_value(&terms)
}

pub fn function_to_json(f: &BohlFunction) -> Value {
    bohl_to(f, coeff_to)
}

pub fn function_from_json(v: &Value) -> Result<BohlFunction> {
    let terms: Vec<TermJson<CoeffJson>> = from_value(v)?;
    let terms = terms
        .iter()
        .map(|t| {
            Ok(Term::new(
                coeff_from(&t.coeff)?,
                t.power,
                exponent_from(&t.exponent)?,
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(BohlFunction::normalize(terms))
}

pub fn symbolic_to_json(f: &SymbolicBohl) -> Value {
    bohl_to(f, genpoly_to)
}

pub fn symbolic_from_json(v: &Value) -> Result<SymbolicBohl> {
    let terms: Vec<TermJson<Vec<MonoTermJson>>> = from_value(v)?;
    let terms = terms
        .iter()
        .map(|t| {
            Ok(Term::new(
                genpoly_from(&t.coeff)?,
                t.power,
                exponent_from(&t.exponent)?,
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SymbolicBohl::normalize(terms))
}

pub fn tuple_to_json(f: &BohlTuple) -> Value {
    Value::Array(f.iter().map(function_to_json).collect())
}

pub fn tuple_from_json(v: &Value) -> Result<BohlTuple> {
    let items = v
        .as_array()
        .ok_or_else(|| bad("a tuple must be an array of functions"))?;
    BohlTuple::new(
        items
            .iter()
            .map(function_from_json)
            .collect::<Result<_>>()?,
    )
}

pub fn pf_to_json(pf: &PartialFractionForm) -> Value {
    let terms: Vec<PfTermJson<CoeffJson>> = pf
        .terms()
        .iter()
        .map(|(k, r)| PfTermJson {
            pole: exponent_to(&k.pole),
            order: k.order,
            residue: coeff_to(r),
        })
        .collect();
    to_value(&terms)
}

pub fn pf_from_json(v: &Value) -> Result<PartialFractionForm> {
    let terms: Vec<PfTermJson<CoeffJson>> = from_value(v)?;
    let mut out = PartialFractionForm::default();
    for t in &terms {
        if t.order == 0 {
            return Err(bad("partial fraction order must be positive"));
        }
        out.add_term(exponent_from(&t.pole)?, t.order, coeff_from(&t.residue)?);
    }
    Ok(out)
}

pub fn symbolic_pf_to_json(pf: &PartialFractions<GenPoly>) -> Value {
    let terms: Vec<PfTermJson<Vec<MonoTermJson>>> = pf
        .terms()
        .iter()
        .map(|(k, r)| PfTermJson {
            pole: exponent_to(&k.pole),
            order: k.order,
            residue: genpoly_to(r),
        })
        .collect();
    to_value(&terms)
}

pub fn rational_function_to_json(rf: &RationalFunction) -> Value {
    to_value(&RationalFunctionJson {
        numerator: rf.numerator().coeffs().iter().map(genpoly_to).collect(),
        denominator: rf
            .denominator()
            .iter()
            .map(|(pole, &m)| FactorJson {
                pole: exponent_to(pole),
                multiplicity: m,
            })
            .collect(),
    })
}

pub fn rational_function_from_json(v: &Value) -> Result<RationalFunction> {
    let rf: RationalFunctionJson = from_value(v)?;
    let numerator = rf
        .numerator
        .iter()
        .map(|c| genpoly_from(c))
        .collect::<Result<Vec<_>>>()?;
    let factors = rf
        .denominator
        .iter()
        .map(|f| Ok((exponent_from(&f.pole)?, f.multiplicity)))
        .collect::<Result<Vec<_>>>()?;
    Ok(RationalFunction::new(
        SPoly::from_coeffs(numerator),
        factors,
    ))
}

pub fn parse_json(text: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(bad)
}
