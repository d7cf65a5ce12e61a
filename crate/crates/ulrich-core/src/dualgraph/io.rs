//! JSON form: `{"vertices":[{"id":"E0","weight":-3}],"edges":[["E0","E1"]]}`
//! for graphs and `{"E0":2,...}` for cycles, keys in vertex order.

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use super::{Cycle, DualGraph, Vertex};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphFile {
    pub vertices: Vec<VertexEntry>,
    pub edges: Vec<(String, String)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VertexEntry {
    pub id: String,
    pub weight: i64,
}

fn parse_err(e: serde_json::Error) -> Error {
    Error::Parse { pos: e.column(), msg: e.to_string() }
}

impl GraphFile {
    pub fn parse(src: &str) -> Result<Self> {
        serde_json::from_str(src).map_err(parse_err)
    }

    pub fn from_graph(g: &DualGraph) -> Self {
        GraphFile {
            vertices: g.vertices().iter().map(|v| VertexEntry { id: v.id.clone(), weight: -(v.b as i64) }).collect(),
            edges: g
                .edges()
                .iter()
                .map(|&(a, b)| (g.vertices()[a].id.clone(), g.vertices()[b].id.clone()))
                .collect(),
        }
    }

    pub fn to_graph(&self) -> Result<DualGraph> {
        let mut vs = Vec::with_capacity(self.vertices.len());
        for v in &self.vertices {
            if v.weight > -1 || v.weight < -(u32::MAX as i64) {
                return Err(Error::Graph(format!("vertex {} has weight {}; need -b with b >= 2", v.id, v.weight)));
            }
            vs.push(Vertex { id: v.id.clone(), b: (-v.weight) as u32 });
        }
        let idx = |s: &str| {
            vs.iter().position(|v: &Vertex| v.id == s).ok_or_else(|| Error::Graph(format!("edge names unknown vertex {s}")))
        };
        let es = self.edges.iter().map(|(a, b)| Ok((idx(a)?, idx(b)?))).collect::<Result<Vec<_>>>()?;
        DualGraph::new(vs, es)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }
}

pub fn cycle_to_json(g: &DualGraph, z: &Cycle) -> Value {
    let mut m = Map::new();
    for (v, &a) in g.vertices().iter().zip(&z.0) {
        m.insert(v.id.clone(), Value::from(a));
    }
    Value::Object(m)
}

/// Missing vertices count as 0; unknown ids are an error.
pub fn cycle_from_json(g: &DualGraph, src: &str) -> Result<Cycle> {
    let v: Value = serde_json::from_str(src).map_err(parse_err)?;
    let Value::Object(map) = v else {
        return Err(Error::Parse { pos: 0, msg: "cycle must be a JSON object".into() });
    };
    let mut z = Cycle::zero(g.n());
    for (k, a) in map {
        let i = g.index_of(&k).ok_or_else(|| Error::Graph(format!("cycle names unknown vertex {k}")))?;
        z.0[i] = a
            .as_u64()
            .and_then(|x| u32::try_from(x).ok())
            .ok_or_else(|| Error::Parse { pos: 0, msg: format!("coefficient of {k} must be a non-negative integer") })?;
    }
    Ok(z)
}
