//! Drives the HTTP API in-process: create a session, solve, try a what-if
//! edit, then confirm the stored judgments did not change.

use axum::body::Body;
use axum::http::{Method, Request};
use http_body_util::BodyExt;
use serde_json::{json, Value};
use tower::ServiceExt;
use tropahp::server::router;
use tropahp::SessionStore;

async fn call(app: &axum::Router, method: Method, uri: &str, body: Value) -> Value {
    let req = Request::builder()
        .method(method.clone())
        .uri(uri)
        .header("content-type", "application/json")
        .body(Body::from(if body.is_null() {
            String::new()
        } else {
            body.to_string()
        }))
        .unwrap();
    let res = app.clone().oneshot(req).await.unwrap();
    let status = res.status();
    let bytes = res.into_body().collect().await.unwrap().to_bytes();
    let value: Value = serde_json::from_slice(&bytes).unwrap();
    println!("{method} {uri} -> {status}");
    value
}

#[tokio::main]
async fn main() {
    let dir = tempfile::tempdir().unwrap();
    let app = router(SessionStore::open(dir.path()).unwrap());

    let fixture = concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/vacation.json");
    let doc: Value = serde_json::from_str(&std::fs::read_to_string(fixture).unwrap()).unwrap();
    let session = call(&app, Method::POST, "/api/problems", doc).await;
    let id = session["id"].as_str().unwrap();

    let report = call(
        &app,
        Method::POST,
        &format!("/api/problems/{id}/solve"),
        Value::Null,
    )
    .await;
    println!("  combined order: {}", report["orders"]["combined"]["text"]);

    // on way of travel, short trips now beat California 5 to 1
    let whatif = json!({ "overrides": [{ "matrix": 3, "row": 0, "col": 3, "value": 5 }] });
    let edited = call(&app, Method::POST, &format!("/api/problems/{id}/whatif"), whatif).await;
    println!("  what-if order:  {}", edited["orders"]["combined"]["text"]);

    let stored = call(&app, Method::GET, &format!("/api/problems/{id}"), Value::Null).await;
    println!(
        "  stored entry still {} (version {})",
        stored["problem"]["alternative_matrices"][3][0][3], stored["problem"]["version"]
    );
}
