use serde_json::Value;
use semiring_web::{check, classify, lift, presets};

fn parse(doc: String) -> Value {
    serde_json::from_str(&doc).unwrap()
}

#[test]
fn every_suggested_preset_loads() {
    let names: Vec<String> = serde_json::from_str(&presets()).unwrap();
    assert!(names.len() >= 5);
    for name in names {
        let doc = parse(classify(&name));
        assert!(doc.get("error").is_none(), "{name}: {doc}");
        let n = doc["order"].as_u64().unwrap() as usize;
        assert_eq!(doc["elements"].as_array().unwrap().len(), n);
        assert_eq!(doc["mul"].as_array().unwrap().len(), n);
        assert_eq!(parse(check(&name))["reports"].as_array().unwrap().len(), 4);
    }
}

#[test]
fn triangular_example() {
    let doc = parse(classify("t2b"));
    let idempotents = doc["elements"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|e| e["idempotent"] == true)
        .count();
    assert_eq!(idempotents, 7);
    assert_eq!(doc["commutative"], false);
    let reports = parse(check("t2b"));
    assert_eq!(reports["reports"][0]["verdict"], "vacuous");
}

#[test]
fn lift_and_errors() {
    let doc = parse(lift("z2x-sq", "1+x"));
    assert_eq!(doc["f"], "1");
    assert_eq!(doc["iterations"], 1);
    assert!(parse(lift("z2x-sq", "nope"))["error"].is_string());
    assert!(parse(classify("zmod:0"))["error"].is_string());
}
