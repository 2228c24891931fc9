//! `geomr compute <command>`: one JSON object in, one JSON object out.

use geomr::exactfield::Rational;
use geomr::loopgroup::g_matrix;
use geomr::rmatrix::{geom_e, geom_r};
use geomr::tableaux::{
    comb_coenergy, comb_r_oracle, crystal_classical, product, promotion, promotion_inverse, tensor_e, tensor_eps,
    tensor_f, tensor_phi, CrystalOp, CrystalValue, Tableau, DEFAULT_READING,
};
use geomr::tropical::{trop_e, trop_r};
use geomr::{GeomError, Result};
use serde::de::DeserializeOwned;
use serde::Deserialize;
use serde_json::{json, Value};

use crate::wire::{loop_matrix_json, PointJson, RectIn, RectOut, TableauIn, TableauOut};

#[derive(Clone, Copy, Debug, clap::ValueEnum)]
pub enum Command {
    Product,
    CombR,
    GeomR,
    TropR,
    Energy,
    TropEnergy,
    Crystal,
    Promote,
}

fn parse<T: DeserializeOwned>(input: Value) -> Result<T> {
    serde_json::from_value(input).map_err(|e| GeomError::invalid(format!("malformed input: {e}")))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct TableauPair {
    left: TableauIn,
    right: TableauIn,
}

impl TableauPair {
    fn build(self) -> Result<(Tableau, Tableau)> {
        let (l, r) = (self.left.build()?, self.right.build()?);
        if l.n != r.n {
            return Err(GeomError::invalid("both tableaux need the same n"));
        }
        Ok((l, r))
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PointPair {
    u: PointJson,
    v: PointJson,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RectPair {
    a: RectIn,
    b: RectIn,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum EnergyIn {
    Tableaux(TableauPair),
    Points(PointPair),
}

#[derive(Deserialize, Clone, Copy)]
#[serde(rename_all = "lowercase")]
enum OpName {
    E,
    F,
    Eps,
    Phi,
    Weight,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct CrystalIn {
    factors: Vec<TableauIn>,
    op: OpName,
    #[serde(default)]
    i: u32,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PromoteIn {
    tableau: TableauIn,
    #[serde(default = "one")]
    times: i64,
}

fn one() -> i64 {
    1
}

fn tableaux_json(v: &[Tableau]) -> Value {
    json!(v.iter().map(TableauOut::from).collect::<Vec<_>>())
}

fn to_value<T: serde::Serialize>(v: T) -> Value {
    serde_json::to_value(v).expect("serializable output")
}

pub fn run(cmd: Command, input: Value) -> Result<Value> {
    match cmd {
        Command::Product => {
            let (l, r) = parse::<TableauPair>(input)?.build()?;
            Ok(json!({ "product": TableauOut::from(&product(&l, &r)?) }))
        }
        Command::CombR => {
            let (l, r) = parse::<TableauPair>(input)?.build()?;
            let (up, tp) = comb_r_oracle(&l, &r)?;
            Ok(json!({ "left": TableauOut::from(&up), "right": TableauOut::from(&tp) }))
        }
        Command::GeomR => {
            let p: PointPair = parse(input)?;
            let (u, v) = (p.u.build()?, p.v.build()?);
            let (vp, up) = geom_r(&u, &v)?;
            let prod = g_matrix(&u)?.mul(&g_matrix(&v)?)?;
            let check = g_matrix(&vp)?.mul(&g_matrix(&up)?)?;
            Ok(json!({
                "v_prime": PointJson::from_point(&vp),
                "u_prime": PointJson::from_point(&up),
                "product": loop_matrix_json(&prod)?,
                "identity_holds": prod == check,
            }))
        }
        Command::TropR => {
            let p: RectPair = parse(input)?;
            let (a, b) = (p.a.build()?, p.b.build()?);
            check_same_n(a.n, b.n)?;
            let (bp, ap) = trop_r(&a, &b)?;
            Ok(json!({ "b_prime": RectOut::new(&bp)?, "a_prime": RectOut::new(&ap)? }))
        }
        Command::Energy => match parse::<EnergyIn>(input)? {
            EnergyIn::Tableaux(p) => {
                let (l, r) = p.build()?;
                Ok(json!({ "E": comb_coenergy(&l, &r)? }))
            }
            EnergyIn::Points(p) => {
                let e: Rational = geom_e(&p.u.build()?, &p.v.build()?)?;
                Ok(json!({ "E": e }))
            }
        },
        Command::TropEnergy => {
            let p: RectPair = parse(input)?;
            let (a, b) = (p.a.build()?, p.b.build()?);
            check_same_n(a.n, b.n)?;
            Ok(json!({ "E": trop_e(&a, &b)? }))
        }
        Command::Crystal => crystal(parse(input)?),
        Command::Promote => {
            let p: PromoteIn = parse(input)?;
            let mut t = p.tableau.build()?;
            for _ in 0..p.times.unsigned_abs() {
                t = if p.times > 0 { promotion(&t)? } else { promotion_inverse(&t)? };
            }
            Ok(json!({ "result": TableauOut::from(&t) }))
        }
    }
}

fn check_same_n(a: usize, b: usize) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(GeomError::invalid("both rectangles need the same n"))
    }
}

fn crystal(c: CrystalIn) -> Result<Value> {
    let factors = c.factors.into_iter().map(TableauIn::build).collect::<Result<Vec<_>>>()?;
    let n = factors.first().ok_or_else(|| GeomError::invalid("factors must be non-empty"))?.n;
    if factors.iter().any(|t| t.n != n) {
        return Err(GeomError::invalid("all factors need the same n"));
    }
    if c.i >= n {
        return Err(GeomError::invalid(format!("index {} outside 0..{n}", c.i)));
    }
    let result = match c.op {
        OpName::E => tensor_e(c.i, &factors)?.map(|v| tableaux_json(&v)).unwrap_or(Value::Null),
        OpName::F => tensor_f(c.i, &factors)?.map(|v| tableaux_json(&v)).unwrap_or(Value::Null),
        OpName::Eps => json!(tensor_eps(c.i, &factors)?),
        OpName::Phi => json!(tensor_phi(c.i, &factors)?),
        OpName::Weight => {
            let mut w = vec![0i64; n as usize];
            for t in &factors {
                if let CrystalValue::Weight(c) = crystal_classical(t, 0, CrystalOp::Weight, DEFAULT_READING)? {
                    w.iter_mut().zip(c).for_each(|(a, b)| *a += b);
                }
            }
            to_value(w)
        }
    };
    Ok(json!({ "result": result }))
}
