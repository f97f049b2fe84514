use std::sync::Arc;

use axum::body::Bytes;
use axum::extract::{Path, Query, State};
use axum::http::StatusCode;
use axum::response::{Html, IntoResponse, Response};
use axum::routing::{get, post};
use axum::{Json, Router};
use pvk_expr::to_sexpr;
use pvk_kernel::{export_proof, Judgment, StepRequest};
use pvk_style::Target;
use serde::de::DeserializeOwned;
use serde::Deserialize;
use serde_json::{json, Value};

use crate::error::ApiError;
use crate::state::{PresumptionSpec, Service, DEFAULT_SNAPSHOT};

type Shared = State<Arc<Service>>;
type ApiResult<T = Json<Value>> = Result<T, ApiError>;

pub fn router(service: Arc<Service>) -> Router {
    Router::new()
        .route("/sessions", post(create_session))
        .route("/sessions/{id}", get(get_session))
        .route("/sessions/{id}/steps", post(apply_step))
        .route("/sessions/{id}/judgments/{n}", get(get_judgment))
        .route("/sessions/{id}/judgments/{n}/proof", get(get_proof))
        .route("/theories", get(list_packages))
        .route("/theories/{path}", get(list_theory))
        .route("/studio", get(studio))
        .with_state(service)
}

/// Bodies are parsed by hand so malformed JSON gets the usual error shape.
fn body<T: DeserializeOwned>(bytes: &Bytes) -> Result<T, ApiError> {
    let src: &[u8] = if bytes.iter().all(u8::is_ascii_whitespace) { b"{}" } else { bytes };
    serde_json::from_slice(src).map_err(|e| ApiError::bad_request(e.to_string()))
}

fn judgment_json(index: usize, j: &Judgment) -> Value {
    json!({
        "index": index,
        "rule": j.rule().name(),
        "judgment": j.render(Target::Text),
        "latex": j.render(Target::Latex),
        "assumptions": j.assumptions().iter().map(to_sexpr).collect::<Vec<_>>(),
        "consequent": to_sexpr(j.consequent()),
        "digest": j.digest(),
    })
}

#[derive(Deserialize)]
struct CreateSession {
    #[serde(default)]
    snapshot: Option<String>,
    #[serde(default)]
    presumptions: PresumptionSpec,
}

async fn create_session(State(svc): Shared, bytes: Bytes) -> ApiResult<Response> {
    let req: CreateSession = body(&bytes)?;
    let snapshot = req.snapshot.as_deref().unwrap_or(DEFAULT_SNAPSHOT);
    let id = svc.create_session(snapshot, req.presumptions)?;
    tracing::info!(session = %id, snapshot, "session created");
    Ok((StatusCode::CREATED, Json(json!({ "id": id, "snapshot": snapshot, "judgments": 0 }))).into_response())
}

async fn get_session(State(svc): Shared, Path(id): Path<String>) -> ApiResult {
    let s = svc.session(&id)?;
    let live = s.lock().await;
    Ok(Json(json!({ "id": live.id, "snapshot": live.snapshot, "judgments": live.session.judgments().len() })))
}

async fn apply_step(State(svc): Shared, Path(id): Path<String>, bytes: Bytes) -> ApiResult {
    let request: StepRequest = body(&bytes)?;
    let s = svc.session(&id)?;
    let mut live = s.lock().await;
    let index = svc.apply(&mut live, &request)?;
    let j = live.session.judgment(index)?;
    let satisfied: Vec<String> = j.requirements().iter().map(|r| r.render(Target::Text)).collect();
    let mut out = judgment_json(index, j);
    out["requirements"] = json!(satisfied);
    Ok(Json(out))
}

async fn get_judgment(State(svc): Shared, Path((id, n)): Path<(String, usize)>) -> ApiResult {
    let s = svc.session(&id)?;
    let live = s.lock().await;
    Ok(Json(judgment_json(n, live.session.judgment(n)?)))
}

#[derive(Deserialize)]
struct ProofQuery {
    format: Option<String>,
}

async fn get_proof(State(svc): Shared, Path((id, n)): Path<(String, usize)>, Query(q): Query<ProofQuery>) -> ApiResult {
    let s = svc.session(&id)?;
    let proof = {
        let live = s.lock().await;
        export_proof(live.session.judgment(n)?)
    };
    match q.format.as_deref().unwrap_or("json") {
        "json" => Ok(Json(serde_json::to_value(proof.to_certificate()).expect("certificate serializes"))),
        "latex-table" => {
            Ok(Json(json!({ "format": "latex-table", "rows": proof.len(), "table": proof.latex_table() })))
        }
        "text-table" => Ok(Json(json!({ "format": "text-table", "rows": proof.len(), "table": proof.text_table() }))),
        other => Err(ApiError::bad_request(format!("unknown proof format {other}"))
            .with_details(json!({ "allowed": ["json", "latex-table", "text-table"] }))),
    }
}

#[derive(Deserialize)]
struct TheoryQuery {
    snapshot: Option<String>,
}

async fn list_packages(State(svc): Shared, Query(q): Query<TheoryQuery>) -> ApiResult {
    let snapshot = q.snapshot.as_deref().unwrap_or(DEFAULT_SNAPSHOT);
    let reg = svc.snapshot(snapshot)?;
    Ok(Json(json!({ "snapshot": snapshot, "packages": reg.packages().collect::<Vec<_>>() })))
}

async fn list_theory(State(svc): Shared, Path(path): Path<String>, Query(q): Query<TheoryQuery>) -> ApiResult {
    let snapshot = q.snapshot.as_deref().unwrap_or(DEFAULT_SNAPSHOT);
    let reg = svc.snapshot(snapshot)?;
    let (items, subpackages) = reg.list(&path).map_err(|e| ApiError::from(e).with_details(json!({ "path": path })))?;
    let items: Vec<Value> = items
        .iter()
        .map(|i| {
            let theorem = i.kind_name() == "theorem" || i.kind_name() == "conjecture";
            json!({
                "name": i.name,
                "full_name": i.full_name(),
                "kind": i.kind_name(),
                "status": if theorem { Some(i.status.name()) } else { None },
                "statement": pvk_style::format(&i.statement, Target::Text),
                "latex": pvk_style::format(&i.statement, Target::Latex),
                "dependencies": i.dependencies,
            })
        })
        .collect();
    Ok(Json(json!({
        "package": path,
        "snapshot": snapshot,
        "items": items,
        "subpackages": subpackages,
        "notes": reg.notes(&path),
    })))
}

async fn studio() -> Html<&'static str> {
    Html(
        "<!doctype html><html><head><meta charset=\"utf-8\"><title>pvk studio</title></head>\
         <body><p>The proof studio is not bundled with this build. \
         The JSON API is served under <code>/sessions</code> and <code>/theories</code>.</p></body></html>",
    )
}
