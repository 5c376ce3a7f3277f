use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use unified_core::cyclo::CycNumber;
use unified_core::qcalc::LaurentPoly;
use unified_core::Rational;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Row {
    pub id: String,
    pub inputs: Value,
    pub expected: Value,
    pub got: Value,
    pub pass: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

/// Timing lives here so the rest of a report is reproducible byte for byte.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Meta {
    pub row_micros: BTreeMap<String, u64>,
    pub total_micros: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub suite: String,
    pub rows: Vec<Row>,
    pub summary: Summary,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    pub meta: Meta,
}

impl Report {
    pub fn new(suite: impl Into<String>, timed: Vec<(Row, u64)>) -> Self {
        let mut meta = Meta::default();
        let mut rows = Vec::with_capacity(timed.len());
        for (row, us) in timed {
            meta.total_micros += us;
            meta.row_micros.insert(row.id.clone(), us);
            rows.push(row);
        }
        let passed = rows.iter().filter(|r| r.pass).count();
        let summary = Summary { total: rows.len(), passed, failed: rows.len() - passed };
        Self { suite: suite.into(), rows, summary, notes: Vec::new(), meta }
    }

    pub fn all_pass(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn merge(suite: impl Into<String>, parts: Vec<Report>) -> Self {
        let mut out = Report::new(suite, Vec::new());
        for p in parts {
            for row in p.rows {
                let id = format!("{}/{}", p.suite, row.id);
                let us = p.meta.row_micros.get(&row.id).copied().unwrap_or(0);
                out.meta.row_micros.insert(id.clone(), us);
                out.meta.total_micros += us;
                out.rows.push(Row { id, ..row });
            }
            out.notes.extend(p.notes.into_iter().map(|n| format!("{}: {n}", p.suite)));
        }
        let passed = out.rows.iter().filter(|r| r.pass).count();
        out.summary = Summary { total: out.rows.len(), passed, failed: out.rows.len() - passed };
        out
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for r in &self.rows {
            let mark = if r.pass { "ok  " } else { "FAIL" };
            let _ = writeln!(s, "{mark} {} {}", r.id, short(&r.got));
            if !r.pass {
                let _ = writeln!(s, "     expected {}", short(&r.expected));
            }
        }
        for n in &self.notes {
            let _ = writeln!(s, "note: {n}");
        }
        let _ = writeln!(s, "{}: {}/{} passed", self.suite, self.summary.passed, self.summary.total);
        s
    }
}

fn short(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Object(m) if m.contains_key("text") => m["text"].as_str().unwrap_or_default().to_string(),
        other => other.to_string(),
    }
}

pub fn rational_str(c: &Rational) -> String {
    c.to_string()
}

pub fn parse_rational(s: &str) -> Option<Rational> {
    s.parse().ok()
}

/// `{order, coeffs, text}` with exact fraction strings.
pub fn cyc_json(x: &CycNumber) -> Value {
    json!({
        "order": x.order(),
        "coeffs": x.coeffs().iter().map(rational_str).collect::<Vec<_>>(),
        "text": x.to_string(),
    })
}

pub fn cyc_from_json(v: &Value) -> Option<CycNumber> {
    let order = v.get("order")?.as_u64()?;
    let coeffs = v.get("coeffs")?.as_array()?.iter().map(|c| parse_rational(c.as_str()?)).collect::<Option<Vec<_>>>()?;
    CycNumber::from_coeffs(order, coeffs).ok()
}

/// `{v_terms: [[exp, coeff]..], text}`, exponents in `v = q^{1/4}`.
pub fn poly_json(p: &LaurentPoly) -> Value {
    json!({
        "v_terms": p.terms().map(|(e, c)| json!([e, rational_str(c)])).collect::<Vec<_>>(),
        "text": p.to_string(),
    })
}

pub fn poly_from_json(v: &Value) -> Option<LaurentPoly> {
    let mut p = LaurentPoly::zero();
    for t in v.get("v_terms")?.as_array()? {
        p.add_term(t.get(0)?.as_i64()?, parse_rational(t.get(1)?.as_str()?)?);
    }
    Some(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use unified_core::qcalc::qint;

    fn int(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    #[test]
    fn exact_values_round_trip() {
        let x = CycNumber::from_coeffs(5, vec![Rational::new(1.into(), 3.into()), int(-2), int(0), int(7)]).unwrap();
        let v = cyc_json(&x);
        assert_eq!(cyc_from_json(&v).unwrap(), x);
        let s = serde_json::to_string(&v).unwrap();
        assert!(s.contains("\"1/3\"") && !s.contains('.'));
        let p = &qint(4) * &LaurentPoly::v_monomial(Rational::new(5.into(), 2.into()), -3);
        assert_eq!(poly_from_json(&poly_json(&p)).unwrap(), p);
    }

    #[test]
    fn report_round_trip() {
        let row = Row { id: "a".into(), inputs: json!({"r": 3}), expected: json!("1"), got: json!("1"), pass: true };
        let bad = Row { id: "b".into(), pass: false, ..row.clone() };
        let rep = Report::new("demo", vec![(row, 5), (bad, 7)]);
        assert_eq!(rep.summary, Summary { total: 2, passed: 1, failed: 1 });
        let back: Report = serde_json::from_str(&serde_json::to_string(&rep).unwrap()).unwrap();
        assert_eq!(back, rep);
        let merged = Report::merge("all", vec![rep]);
        assert_eq!(merged.rows[1].id, "demo/b");
        assert_eq!(merged.meta.total_micros, 12);
        assert!(merged.to_text().contains("FAIL demo/b"));
    }
}
