// Writing an algebra and a module to JSON files and reading them back.

use domdim::io::{algebra_to_json, load_algebra, load_module, module_to_json, parse_algebra};
use domdim::modrep::{iso, proj};
use domdim::quiver::linear_quiver_algebra;
use serde_json::json;

pub fn run_example() -> domdim::Result<()> {
    let dir = std::env::temp_dir().join(format!("domdim-example-{}", std::process::id()));
    std::fs::create_dir_all(&dir).map_err(|e| domdim::Error::Parse(e.to_string()))?;
    let write = |name: &str, v: &serde_json::Value| {
        std::fs::write(dir.join(name), serde_json::to_string_pretty(v).unwrap()).map_err(|e| domdim::Error::Parse(e.to_string()))
    };

    let a = linear_quiver_algebra(3)?;
    write("lq3.json", &algebra_to_json(&a))?;
    let p = proj(&a, 0);
    write("p0.json", &module_to_json(&p, json!("lq3.json")))?;

    let back = load_algebra(&dir.join("lq3.json"))?;
    println!("reloaded algebra: dim {}, identical table {}", back.dim(), back.same_as(&a));
    let m = load_module(&dir.join("p0.json"), None)?;
    println!("reloaded module: dim {}, isomorphic to P0 {}", m.dim(), iso(&m, &proj(&m.algebra().clone(), 0))?);

    let quiver_text = r#"{"field": {"type": "rational"}, "vertices": ["1", "2"], "arrows": [{"label": "a", "src": "1", "tgt": "2"}]}"#;
    let k2 = parse_algebra("inline", quiver_text)?;
    println!("quiver file: dim {}", k2.dim());
    match parse_algebra("typo.json", "{\"field\": {\"type\": \"rational\"},\n \"dim\": 2,,\n}") {
        Err(e) => println!("malformed input: {e}"),
        Ok(_) => unreachable!(),
    }
    std::fs::remove_dir_all(&dir).ok();
    Ok(())
}

#[allow(dead_code)]
fn main() -> domdim::Result<()> {
    run_example()
}
