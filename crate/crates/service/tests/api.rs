use std::io::Cursor;
use std::sync::{Arc, OnceLock};

use axum::body::Body;
use axum::http::{header, Request, StatusCode};
use axum::Router;
use http_body_util::BodyExt;
use pvk_expr::to_sexpr;
use pvk_expr::vocab::dsl::*;
use pvk_kernel::{export_proof, StepRequest};
use pvk_service::{router, Service};
use pvk_theory::{load_stdlib, scripts, Registry};
use serde_json::{json, Value};
use tower::ServiceExt;

fn stdlib() -> Registry {
    static CELL: OnceLock<Registry> = OnceLock::new();
    CELL.get_or_init(|| load_stdlib().unwrap()).clone()
}

fn service() -> Arc<Service> {
    let s = Service::new();
    s.publish("stdlib", stdlib());
    Arc::new(s)
}

async fn call(app: &Router, method: &str, uri: &str, body: Option<Value>) -> (StatusCode, Value) {
    let req = Request::builder().method(method).uri(uri).header(header::CONTENT_TYPE, "application/json");
    let req = req.body(body.map(|b| Body::from(b.to_string())).unwrap_or_else(Body::empty)).unwrap();
    let resp = app.clone().oneshot(req).await.unwrap();
    let status = resp.status();
    let bytes = resp.into_body().collect().await.unwrap().to_bytes();
    (status, serde_json::from_slice(&bytes).unwrap_or(Value::Null))
}

async fn new_session(app: &Router, body: Value) -> String {
    let (status, v) = call(app, "POST", "/sessions", Some(body)).await;
    assert_eq!(status, StatusCode::CREATED, "{v}");
    v["id"].as_str().unwrap().to_string()
}

async fn step(app: &Router, id: &str, req: &StepRequest) -> (StatusCode, Value) {
    call(app, "POST", &format!("/sessions/{id}/steps"), Some(serde_json::to_value(req).unwrap())).await
}

async fn replay(app: &Router, id: &str, steps: &[StepRequest]) -> usize {
    let mut last = 0;
    for (i, r) in steps.iter().enumerate() {
        let (status, v) = step(app, id, r).await;
        assert_eq!(status, StatusCode::OK, "step {i}: {v}");
        last = v["index"].as_u64().unwrap() as usize;
        assert_eq!(last, i);
    }
    last
}

fn assume(e: &str) -> StepRequest {
    StepRequest::Assume { expr: e.to_string() }
}

#[tokio::test]
async fn sessions_start_empty_and_isolated() {
    let app = router(service());
    let a = new_session(&app, json!({})).await;
    let b = new_session(&app, json!({ "snapshot": "stdlib" })).await;
    assert_ne!(a, b);
    assert_eq!(call(&app, "GET", &format!("/sessions/{a}"), None).await.1["judgments"], 0);

    let (status, v) = step(&app, &a, &assume(&to_sexpr(&var("A")))).await;
    assert_eq!(status, StatusCode::OK);
    assert_eq!(v["index"], 0);
    assert_eq!(v["judgment"], "{A} ⊢ A");
    assert_eq!(call(&app, "GET", &format!("/sessions/{a}"), None).await.1["judgments"], 1);
    assert_eq!(call(&app, "GET", &format!("/sessions/{b}"), None).await.1["judgments"], 0);
    let (status, v) = call(&app, "GET", &format!("/sessions/{b}/judgments/0"), None).await;
    assert_eq!(status, StatusCode::NOT_FOUND);
    assert_eq!(v["code"], "UnknownIndex");
}

#[tokio::test]
async fn unknown_snapshot_and_session() {
    let app = router(service());
    let (status, v) = call(&app, "POST", "/sessions", Some(json!({ "snapshot": "nope" }))).await;
    assert_eq!(status, StatusCode::NOT_FOUND);
    assert_eq!(v["code"], "UnknownSnapshot");
    assert!(v["message"].is_string());
    assert_eq!(v["details"]["snapshot"], "nope");

    let (status, v) = step(&app, "s999", &assume("(Variable \"A\")")).await;
    assert_eq!(status, StatusCode::NOT_FOUND);
    assert_eq!(v["code"], "UnknownSession");
}

#[tokio::test]
async fn empty_presumptions_allow_only_assumptions() {
    let app = router(service());
    let id = new_session(&app, json!({ "presumptions": { "only": [] } })).await;
    let (status, v) = step(&app, &id, &StepRequest::Invoke { name: "logic.booleans.axiom1".into() }).await;
    assert_eq!(status, StatusCode::UNPROCESSABLE_ENTITY);
    assert_eq!(v["code"], "PresumptionViolation");
    assert_eq!(v["details"]["rule"], "invoke");
    assert_eq!(step(&app, &id, &assume(&to_sexpr(&num(3)))).await.0, StatusCode::OK);
}

#[tokio::test]
async fn failed_steps_leave_the_session_unchanged() {
    let app = router(service());
    let id = new_session(&app, json!({})).await;
    let (_, inv) = step(&app, &id, &StepRequest::Invoke { name: "logic.equality.axiom6".into() }).await;
    assert_eq!(inv["index"], 0);
    let before = call(&app, "GET", &format!("/sessions/{id}/judgments/0"), None).await.1;

    // x = y is neither proven nor supplied.
    let (x, y) = (var("x"), var("y"));
    let mut s = pvk_kernel::Script::new();
    s.instantiate(0, &[(apply("f", vec![x.clone()]), exp(x.clone(), var("a"))), (x, var("x")), (y, var("y"))], &[]);
    let (status, v) = step(&app, &id, &s.steps()[0]).await;
    assert_eq!(status, StatusCode::UNPROCESSABLE_ENTITY, "{v}");
    assert_eq!(v["code"], "UnsatisfiedCondition");

    assert_eq!(call(&app, "GET", &format!("/sessions/{id}"), None).await.1["judgments"], 1);
    assert_eq!(call(&app, "GET", &format!("/sessions/{id}/judgments/0"), None).await.1, before);

    let (status, v) = call(&app, "POST", &format!("/sessions/{id}/steps"), Some(json!({ "frobnicate": 1 }))).await;
    assert_eq!(status, StatusCode::BAD_REQUEST);
    assert_eq!(v["code"], "BadRequest");
    assert_eq!(call(&app, "GET", &format!("/sessions/{id}"), None).await.1["judgments"], 1);
}

#[tokio::test]
async fn excluded_middle_over_http() {
    let svc = service();
    let app = router(svc.clone());
    let id = new_session(&app, json!({})).await;
    let script = scripts::excluded_middle();
    let last = replay(&app, &id, script.steps()).await;

    let (_, j) = call(&app, "GET", &format!("/sessions/{id}/judgments/{last}"), None).await;
    assert_eq!(j["consequent"], to_sexpr(&scripts::excluded_middle_statement()));
    assert_eq!(j["assumptions"], json!([]));
    assert_eq!(j["judgment"], "⊢ ∀_{A ∈ 𝔹} (A ∨ ¬A)");

    // Same certificate as a direct kernel replay, and it checks.
    let (status, cert) = call(&app, "GET", &format!("/sessions/{id}/judgments/{last}/proof"), None).await;
    assert_eq!(status, StatusCode::OK);
    let direct = scripts::run(&script, stdlib().prover()).unwrap();
    let expected: Value = serde_json::from_str(&export_proof(&direct).to_certificate().to_json()).unwrap();
    assert_eq!(cert, expected);
    let outcome = pvk_checker::verify_bytes(cert.to_string().as_bytes(), &stdlib());
    assert_eq!(outcome.exit_code(), 0);
}

#[tokio::test]
async fn exp_eq_table_and_certificate() {
    let app = router(service());
    let id = new_session(&app, json!({})).await;
    let last = replay(&app, &id, scripts::exp_eq().steps()).await;
    let base = format!("/sessions/{id}/judgments/{last}/proof");

    let (status, t) = call(&app, "GET", &format!("{base}?format=latex-table"), None).await;
    assert_eq!(status, StatusCode::OK);
    assert_eq!(t["rows"], 4);
    let table = t["table"].as_str().unwrap();
    assert!(table.lines().any(|l| l.starts_with("0 & generalization & 1 &")), "{table}");

    let (_, cert) = call(&app, "GET", &base, None).await;
    let parsed = pvk_cert::Certificate::from_json(&cert.to_string()).unwrap();
    assert_eq!(parsed.steps.len(), 4);
    assert_eq!(parsed.steps[0].requirements, [1]);
    assert!(pvk_checker::verify_bytes(cert.to_string().as_bytes(), &stdlib()).passed());

    let (status, v) = call(&app, "GET", &format!("{base}?format=pdf"), None).await;
    assert_eq!(status, StatusCode::BAD_REQUEST);
    assert_eq!(v["code"], "BadRequest");
    let (status, v) = call(&app, "GET", &format!("/sessions/{id}/judgments/99/proof"), None).await;
    assert_eq!(status, StatusCode::NOT_FOUND);
    assert_eq!(v["code"], "UnknownIndex");
}

#[tokio::test]
async fn assumed_judgment_has_a_one_row_table() {
    let app = router(service());
    let id = new_session(&app, json!({})).await;
    step(&app, &id, &assume(&to_sexpr(&var("A")))).await;
    let (_, t) = call(&app, "GET", &format!("/sessions/{id}/judgments/0/proof?format=latex-table"), None).await;
    assert_eq!(t["rows"], 1);
}

#[tokio::test]
async fn theory_listing() {
    let app = router(service());
    let (status, v) = call(&app, "GET", "/theories/logic.booleans", None).await;
    assert_eq!(status, StatusCode::OK);
    let items = v["items"].as_array().unwrap();
    assert_eq!(items.iter().filter(|i| i["kind"] == "axiom").count(), 5);
    let em = items.iter().find(|i| i["full_name"] == scripts::EXCLUDED_MIDDLE).unwrap();
    assert_eq!(em["status"], "fully-proven");
    assert!(v["subpackages"].as_array().unwrap().iter().any(|p| p == "logic.booleans.negation"));

    let (status, v) = call(&app, "GET", "/theories/logic.nonsense", None).await;
    assert_eq!(status, StatusCode::NOT_FOUND);
    assert_eq!(v["code"], "UnknownPath");
}

#[tokio::test]
async fn listed_statuses_follow_attached_proofs() {
    let svc = service();
    let app = router(svc.clone());
    let mut r = Registry::new();
    r.register_axiom("toy", "top", t()).unwrap();
    r.register_theorem("toy", "lemma", t()).unwrap();
    r.register_theorem("toy", "corollary", t()).unwrap();
    let mut p = r.prover_for("toy.corollary").unwrap();
    let cert = export_proof(&p.invoke("toy.lemma").unwrap()).to_certificate();
    r.attach_proof("toy.corollary", &cert, None).unwrap();
    svc.publish("toy", r.clone());

    let status_of = |v: &Value, name: &str| {
        v["items"].as_array().unwrap().iter().find(|i| i["name"] == name).unwrap()["status"].clone()
    };
    let (_, v) = call(&app, "GET", "/theories/toy?snapshot=toy", None).await;
    assert_eq!(status_of(&v, "lemma"), "conjecture");
    assert_eq!(status_of(&v, "corollary"), "proven-with-conjectures");

    let mut p = r.prover_for("toy.lemma").unwrap();
    let cert = export_proof(&p.invoke("toy.top").unwrap()).to_certificate();
    r.attach_proof("toy.lemma", &cert, None).unwrap();
    svc.publish("toy", r);
    let (_, v) = call(&app, "GET", "/theories/toy?snapshot=toy", None).await;
    assert_eq!(status_of(&v, "lemma"), "fully-proven");
    assert_eq!(status_of(&v, "corollary"), "fully-proven");
}

#[tokio::test]
async fn event_log_replays_to_identical_sessions() {
    let dir = tempfile::tempdir().unwrap();
    let log = dir.path().join("events.jsonl");
    let svc = service();
    svc.log_to(&log).unwrap();
    let app = router(svc.clone());

    let a = new_session(&app, json!({})).await;
    let b = new_session(&app, json!({ "presumptions": { "only": ["logic.equality"] } })).await;
    replay(&app, &a, scripts::excluded_middle().steps()).await;
    // A failed step in between must not reach the log.
    assert_eq!(
        step(&app, &b, &StepRequest::Invoke { name: "logic.booleans.axiom1".into() }).await.0,
        StatusCode::UNPROCESSABLE_ENTITY
    );
    replay(&app, &b, scripts::exp_eq().steps()).await;

    let text = std::fs::read_to_string(&log).unwrap();
    assert_eq!(text.lines().count(), 2 + scripts::excluded_middle().steps().len() + scripts::exp_eq().steps().len());
    assert_eq!(text.lines().map(String::from).collect::<Vec<_>>(), svc.event_lines());

    let fresh = service();
    fresh.replay(Cursor::new(text)).unwrap();
    let again = router(fresh.clone());
    for id in [&a, &b] {
        let n = call(&app, "GET", &format!("/sessions/{id}"), None).await.1["judgments"].as_u64().unwrap();
        assert_eq!(call(&again, "GET", &format!("/sessions/{id}"), None).await.1["judgments"], n);
        for k in 0..n {
            let path = format!("/sessions/{id}/judgments/{k}/proof");
            assert_eq!(call(&app, "GET", &path, None).await.1, call(&again, "GET", &path, None).await.1);
        }
    }
    // New ids continue after the replayed ones.
    let c = new_session(&again, json!({})).await;
    assert!(c != a && c != b);
}

#[tokio::test(flavor = "multi_thread", worker_threads = 4)]
async fn concurrent_steps_get_distinct_indices() {
    let app = router(service());
    let id = new_session(&app, json!({})).await;
    let mut handles = Vec::new();
    for k in 0..32 {
        let (app, id) = (app.clone(), id.clone());
        handles.push(tokio::spawn(async move {
            let (_, v) = step(&app, &id, &assume(&to_sexpr(&var(&format!("v{k}"))))).await;
            v["index"].as_u64().unwrap()
        }));
    }
    let mut got = Vec::new();
    for h in handles {
        got.push(h.await.unwrap());
    }
    got.sort();
    assert_eq!(got, (0..32).collect::<Vec<u64>>());
}

#[tokio::test]
async fn studio_placeholder() {
    let app = router(service());
    let req = Request::builder().uri("/studio").body(Body::empty()).unwrap();
    let resp = app.oneshot(req).await.unwrap();
    assert_eq!(resp.status(), StatusCode::OK);
    assert!(resp.headers()[header::CONTENT_TYPE].to_str().unwrap().starts_with("text/html"));
}
