use qconnect_cli::{build, render, Common, Format, Pair, Single, Suite, Verb};
use wasm_bindgen::prelude::*;

fn json() -> Common {
    Common { format: Format::Json }
}

fn document(verb: Verb) -> Result<String, String> {
    let doc = build(&verb).map_err(|e| format!("{}: {e}", e.kind()))?;
    render(&doc, Format::Json)
}

fn params(text: &str) -> Vec<String> {
    text.split(',').map(str::trim).filter(|s| !s.is_empty()).map(String::from).collect()
}

pub fn invert_json(family: &str, params_text: &str, q: &str, n: usize) -> Result<String, String> {
    document(Verb::Invert(Single {
        family: family.trim().into(),
        params: params(params_text),
        q: Some(q.trim().into()),
        n,
        as_printed: false,
        oracle: false,
        common: json(),
    }))
}

pub fn connect_json(from: &str, to: &str, q: &str, n: usize) -> Result<String, String> {
    document(Verb::Connect(Pair {
        from: from.trim().into(),
        to: to.trim().into(),
        q: Some(q.trim().into()),
        n,
        as_printed: false,
        oracle: false,
        common: json(),
    }))
}

/// Closed form against the brute-force solve for one family's rows on seeded parameters.
pub fn check_json(suite: &str, family: &str, n_max: usize, seed: u64) -> Result<String, String> {
    document(Verb::Verify(Suite {
        suite: suite.into(),
        n_max,
        q: None,
        seed,
        sets: 2,
        family: Some(family.trim().into()),
        as_printed: false,
        common: json(),
    }))
}

#[wasm_bindgen]
pub fn invert(family: &str, params: &str, q: &str, n: usize) -> Result<String, JsValue> {
    invert_json(family, params, q, n).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn connect(from: &str, to: &str, q: &str, n: usize) -> Result<String, JsValue> {
    connect_json(from, to, q, n).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn check(suite: &str, family: &str, n_max: usize, seed: u64) -> Result<String, JsValue> {
    check_json(suite, family, n_max, seed).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn families() -> String {
    qconnect::families::registry().iter().map(|f| f.id).collect::<Vec<_>>().join("\n")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn invert_example() {
        let doc: serde_json::Value = serde_json::from_str(&invert_json("little-q-laguerre", "a=1/2", "1/3", 1).unwrap()).unwrap();
        assert_eq!(doc["rows"][1]["value"], "-5/6");
    }

    #[test]
    fn errors_are_strings() {
        let e = connect_json(
            "q-racah:alpha=1/3,beta=2/7,gamma=3/5,delta=5/11",
            "q-racah:alpha=4/9,beta=1/6,gamma=3/5,delta=7/11",
            "2/5",
            2,
        )
        .unwrap_err();
        assert!(e.starts_with("PreconditionViolated"));
    }

    #[test]
    fn check_runs() {
        let doc: serde_json::Value = serde_json::from_str(&check_json("table2", "q-hahn", 3, 1).unwrap()).unwrap();
        assert_eq!(doc["summary"]["mismatched"], 0);
        assert_eq!(doc["summary"]["errors"], 0);
    }
}
