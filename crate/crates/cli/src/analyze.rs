use p3_convexity::caterpillar::{self, recognize_caterpillar, Caterpillar};
use p3_convexity::unit_interval::{self, UnitIntervalModel};
use p3_convexity::{Error, GraphDocument, Oracle};
use serde_json::{json, Value};

use crate::output::Record;
use crate::Failure;

/// Formula values that an oracle run can confirm.
#[derive(Default)]
pub struct Claims {
    pub geodetic: Option<usize>,
    pub hull: Option<usize>,
    pub tau: Option<usize>,
}

pub struct Analysis {
    pub record: Record,
    pub disagreement: bool,
}

fn digits(seq: &[u8]) -> String {
    seq.iter().map(|d| char::from(b'0' + d)).collect()
}

fn caterpillar_part(rec: &mut Record, cat: &Caterpillar) -> Result<Claims, Error> {
    let dec = caterpillar::decompose(&cat.rds)?;
    let seq = caterpillar::percolation_sequence(&cat.rds)?;
    let factors: Vec<String> = dec.full_factorization().iter().map(|f| digits(f)).collect();
    let g = caterpillar::geodetic_number(cat)?;
    let h = caterpillar::hull_number(cat);
    rec.put("class", "caterpillar")
        .put("spine", cat.spine.clone())
        .put("rds", cat.rds.to_string())
        .put("factors", factors.clone())
        .put("basic_sequences", factors.len())
        .put("p", dec.p())
        .put("leaves", cat.leaf_count())
        .put("g", g)
        .put("h", h)
        .put("f", seq.f.clone())
        .put("F", seq.max)
        .put("tau", seq.max);
    Ok(Claims { geodetic: Some(g), hull: Some(h), tau: Some(seq.max) })
}

fn uig_part(rec: &mut Record, m: &UnitIntervalModel) -> Result<Claims, Error> {
    let order = m.order();
    let cliques: Vec<Value> = m.cliques().iter().map(|&(lo, hi)| json!([lo, hi])).collect();
    rec.put("class", "unit-interval").put("order", order.to_vec()).put("cliques", cliques);
    rec.put("diameter", unit_interval::diameter_endpoints(m)?);
    let mut blocks = Vec::new();
    let mut singular = Vec::new();
    for (lo, hi) in unit_interval::block_intervals(m) {
        let diam_star = if hi - lo + 1 >= 3 {
            let star = unit_interval::star_transform(&m.sub_model(lo, hi))?;
            singular.extend(star.singular.iter().map(|&p| order[lo + p]));
            unit_interval::diameter_endpoints(&star.model)?
        } else {
            usize::from(hi > lo)
        };
        blocks.push(json!({ "positions": [lo, hi], "diam_star": diam_star }));
    }
    rec.put("singular_vertices", singular).put("blocks", blocks);
    if m.n() >= 3 {
        let segments: Vec<Value> = unit_interval::special_segments(m)?
            .iter()
            .map(|s| json!({ "positions": [s.lo, s.hi], "case": format!("{:?}", s.case), "t": s.t }))
            .collect();
        rec.put("segments", segments);
    }
    let eps = unit_interval::percolation_time_uig(m)?;
    rec.put("epsilon", eps).put("tau", eps);
    Ok(Claims { tau: Some(eps), ..Claims::default() })
}

/// Recognizes the class of the document's graph and evaluates the matching
/// formulas, optionally alongside the oracle.
pub fn analyze(doc: &GraphDocument, oracle: Option<&Oracle>) -> Result<Analysis, Failure> {
    let g = doc.graph()?;
    let mut rec = Record::new();
    rec.put("n", g.n()).put("m", g.edge_count());
    let cat = if g.n() >= 2 { recognize_caterpillar(&g)? } else { None };
    let uig = if cat.is_none() && g.is_connected() && g.n() > 0 {
        match &doc.order {
            Some(order) => Some(UnitIntervalModel::new(&g, order)?),
            None => unit_interval::recognize(&g)?,
        }
    } else {
        None
    };
    let claims = match (&cat, &uig) {
        (Some(c), _) => caterpillar_part(&mut rec, c)?,
        (None, Some(m)) => uig_part(&mut rec, m)?,
        (None, None) => {
            if oracle.is_none() {
                return Err(Failure::Usage(
                    "graph is neither a caterpillar nor a connected unit interval graph; rerun with --oracle".into(),
                ));
            }
            rec.put("class", "other");
            Claims::default()
        }
    };
    let mut disagreement = false;
    if let Some(o) = oracle {
        let mut check = |key: &str, claim: Option<usize>, value: usize| {
            rec.put(key, value);
            if claim.is_some_and(|c| c != value) {
                disagreement = true;
            }
        };
        check("oracle_g", claims.geodetic, o.geodetic_number(&g)?);
        check("oracle_h", claims.hull, o.hull_number(&g)?);
        if g.is_connected() {
            check("oracle_tau", claims.tau, o.percolation_time(&g)?);
        }
        rec.put("agree", !disagreement);
    }
    Ok(Analysis { record: rec, disagreement })
}
