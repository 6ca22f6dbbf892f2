//! The `check` report in text and structured form.

use serde_json::{json, Value};

use pbzlab_core::axioms::{self, AlgebraClassReport, SharpSets};
use pbzlab_core::constructions::{self, Cones};
use pbzlab_core::terms::{self, Counterexample, Statement};
use pbzlab_core::{class_report, Element, FiniteAlgebra};

pub struct Report<'a> {
    algebra: &'a FiniteAlgebra,
    classes: AlgebraClassReport,
    sharp: Option<SharpSets>,
    cones: Cones,
    blocks: Option<Vec<Vec<Element>>>,
    identities: Vec<(String, Result<(), Counterexample>)>,
    requested: Vec<String>,
}

impl<'a> Report<'a> {
    pub fn new(a: &'a FiniteAlgebra, statements: &[(String, Statement)], requested: &[String]) -> Self {
        let classes = class_report(a);
        let blocks = classes.pbz_star.then(|| constructions::blocks(a));
        Report {
            algebra: a,
            sharp: axioms::sharp_sets(a).ok(),
            cones: constructions::cones(a),
            blocks,
            identities: statements.iter().map(|(n, st)| (n.clone(), terms::holds_statement(a, st))).collect(),
            requested: requested.to_vec(),
            classes,
        }
    }

    pub fn requested_hold(&self) -> bool {
        self.identities.iter().all(|(_, r)| r.is_ok()) && self.requested.iter().all(|c| self.classes.get(c) == Some(true))
    }

    fn set(&self, xs: &[Element]) -> String {
        let labels: Vec<&str> = xs.iter().map(|&x| self.algebra.label(x)).collect();
        format!("{{{}}}", labels.join(", "))
    }

    fn labels(&self, xs: &[Element]) -> Vec<&str> {
        xs.iter().map(|&x| self.algebra.label(x)).collect()
    }

    fn class_line(&self, class: &str) -> String {
        match self.classes.failure(class) {
            Some(f) => format!("no   {} at {}", f.clause, self.labels(&f.witness).join(", ")),
            None if self.classes.get(class) == Some(true) => "yes".to_string(),
            None => "no".to_string(),
        }
    }

    pub fn text(&self) -> String {
        let a = self.algebra;
        let mut out = format!("algebra {} ({} elements)\nclasses:\n", a.name(), a.size());
        for c in axioms::CLASS_NAMES {
            out += &format!("  {c:<22}{}\n", self.class_line(c));
        }
        if let Some(s) = &self.sharp {
            out += &format!(
                "sharp sets: S_K = {}; S◊ = {}; S_B = {}\n",
                self.set(&s.kleene),
                self.set(&s.diamond),
                self.set(&s.brouwer)
            );
        }
        out += &format!("cones: N = {}; P = {}\n", self.set(&self.cones.negative), self.set(&self.cones.positive));
        if let Some(bs) = &self.blocks {
            let shown: Vec<String> = bs.iter().map(|b| self.set(b)).collect();
            out += &format!("blocks: {}\n", shown.join(" "));
        }
        for (name, r) in &self.identities {
            match r {
                Ok(()) => out += &format!("holds {name}\n"),
                Err(c) => out += &format!("fails {name} at {}\n", c.describe(a)),
            }
        }
        for c in &self.requested {
            out += &format!("class {c}: {}\n", if self.classes.get(c) == Some(true) { "holds" } else { "fails" });
        }
        out
    }

    pub fn structured(&self) -> Value {
        let a = self.algebra;
        let classes: serde_json::Map<String, Value> = axioms::CLASS_NAMES
            .iter()
            .map(|&c| {
                let v = match self.classes.failure(c) {
                    Some(f) => json!({ "holds": false, "clause": f.clause, "witness": self.labels(&f.witness) }),
                    None => json!({ "holds": self.classes.get(c) == Some(true) }),
                };
                (c.to_string(), v)
            })
            .collect();
        let identities: Vec<Value> = self
            .identities
            .iter()
            .map(|(name, r)| match r {
                Ok(()) => json!({ "identity": name, "holds": true }),
                Err(c) => json!({
                    "identity": name,
                    "holds": false,
                    "assignment": c.assignment.iter().map(|(v, e)| (v.clone(), json!(a.label(*e)))).collect::<serde_json::Map<_, _>>(),
                    "lhs": a.label(c.lhs),
                    "rhs": a.label(c.rhs),
                }),
            })
            .collect();
        json!({
            "algebra": a.name(),
            "size": a.size(),
            "elements": a.labels(),
            "classes": classes,
            "sharp_sets": self.sharp.as_ref().map(|s| json!({
                "kleene": self.labels(&s.kleene),
                "diamond": self.labels(&s.diamond),
                "brouwer": self.labels(&s.brouwer),
            })),
            "cones": {
                "negative": self.labels(&self.cones.negative),
                "positive": self.labels(&self.cones.positive),
            },
            "blocks": self.blocks.as_ref().map(|bs| bs.iter().map(|b| self.labels(b)).collect::<Vec<_>>()),
            "identities": identities,
            "requested_classes": self.requested.iter().map(|c| json!({ "class": c, "holds": self.classes.get(c) == Some(true) })).collect::<Vec<_>>(),
            "requested_hold": self.requested_hold(),
        })
    }
}
