use std::path::{Path, PathBuf};

use loday_cli::files::{
    load_algebra, load_function, load_metric, load_twist, to_pretty, AlgebraFile, FunctionFile, MetricFile, TwistFile,
};

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name)
}

fn scratch(text: &str) -> tempfile::NamedTempFile {
    let f = tempfile::NamedTempFile::new().unwrap();
    std::fs::write(f.path(), text).unwrap();
    f
}

#[test]
fn algebras_round_trip() {
    for name in ["nil.json", "idempotent.json", "so3.json", "abelian-2.json", "half-shuffle-2.json"] {
        let path = data(name);
        let file = load_algebra(&path).unwrap();
        let table = file.value.leibniz(&path).unwrap();
        let again = scratch(&to_pretty(&AlgebraFile::from_table(&file.value.name, &table)));
        let reloaded = load_algebra(again.path()).unwrap();
        assert_eq!(reloaded.value.leibniz(again.path()).unwrap(), table, "{name}");
        assert_eq!(reloaded.value.name, file.value.name);
    }
}

#[test]
fn metrics_round_trip() {
    for name in ["identity-2.json", "identity-3.json", "hyperbolic-2.json"] {
        let path = data(name);
        let m = load_metric(&path).unwrap().value.metric(&path).unwrap();
        let again = scratch(&to_pretty(&MetricFile::from_metric(&m)));
        assert_eq!(load_metric(again.path()).unwrap().value.metric(again.path()).unwrap(), m, "{name}");
    }
}

#[test]
fn twist_round_trip() {
    let path = data("twist-2.json");
    let h = load_twist(&path).unwrap().value.twist(&path).unwrap();
    let again = scratch(&to_pretty(&TwistFile::from_twist(&h)));
    assert_eq!(load_twist(again.path()).unwrap().value.twist(again.path()).unwrap(), h);
}

#[test]
fn functions_round_trip() {
    for name in ["f-quadratic.json", "g-cubic.json"] {
        let path = data(name);
        let a = load_function(&path).unwrap().value.function(&path).unwrap();
        let again = scratch(&to_pretty(&FunctionFile::from_function(&a)));
        assert_eq!(load_function(again.path()).unwrap().value.function(again.path()).unwrap(), a, "{name}");
    }
}

#[test]
fn odd_parity_survives() {
    let text = r#"{"name":"odd","dim":2,"parity":["odd","even"],"bracket":[{"i":1,"j":2,"k":2,"c":"-1/2"}]}"#;
    let f = scratch(text);
    let table = load_algebra(f.path()).unwrap().value.leibniz(f.path()).unwrap();
    assert!(table.basis().parity(0).is_odd());
    let again = scratch(&to_pretty(&AlgebraFile::from_table("odd", &table)));
    assert_eq!(load_algebra(again.path()).unwrap().value.leibniz(again.path()).unwrap(), table);
}

#[test]
fn missing_file() {
    assert!(load_algebra(Path::new("/nonexistent/alg.json")).is_err());
}
