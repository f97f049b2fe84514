use axum::http::StatusCode;
use axum::response::{IntoResponse, Response};
use axum::Json;
use pvk_kernel::KernelError;
use serde_json::{json, Value};

/// Error body: `{code, message, details}`.
#[derive(Debug, Clone)]
pub struct ApiError {
    pub status: StatusCode,
    pub code: String,
    pub message: String,
    pub details: Value,
}

impl ApiError {
    pub fn new(status: StatusCode, code: &str, message: impl Into<String>) -> Self {
        ApiError { status, code: code.to_string(), message: message.into(), details: Value::Null }
    }

    pub fn with_details(mut self, details: Value) -> Self {
        self.details = details;
        self
    }

    pub fn bad_request(message: impl Into<String>) -> Self {
        Self::new(StatusCode::BAD_REQUEST, "BadRequest", message)
    }

    pub fn unknown_session(id: &str) -> Self {
        Self::new(StatusCode::NOT_FOUND, "UnknownSession", format!("no session {id}"))
            .with_details(json!({ "session": id }))
    }

    pub fn unknown_snapshot(name: &str) -> Self {
        Self::new(StatusCode::NOT_FOUND, "UnknownSnapshot", format!("no theory snapshot {name}"))
            .with_details(json!({ "snapshot": name }))
    }

    pub fn unknown_index(n: usize) -> Self {
        Self::new(StatusCode::NOT_FOUND, "UnknownIndex", format!("unknown judgment index {n}"))
            .with_details(json!({ "index": n }))
    }

    pub fn internal(message: impl Into<String>) -> Self {
        Self::new(StatusCode::INTERNAL_SERVER_ERROR, "Internal", message)
    }
}

impl From<KernelError> for ApiError {
    fn from(e: KernelError) -> Self {
        if let KernelError::UnknownIndex(n) = e {
            return Self::unknown_index(n);
        }
        Self::new(StatusCode::UNPROCESSABLE_ENTITY, e.code(), e.to_string())
    }
}

impl From<pvk_theory::TheoryError> for ApiError {
    fn from(e: pvk_theory::TheoryError) -> Self {
        use pvk_theory::TheoryError::*;
        let status = match e {
            UnknownPath(_) | UnknownTheoryItem(_) => StatusCode::NOT_FOUND,
            _ => StatusCode::UNPROCESSABLE_ENTITY,
        };
        Self::new(status, e.code(), e.to_string())
    }
}

impl IntoResponse for ApiError {
    fn into_response(self) -> Response {
        let body = json!({ "code": self.code, "message": self.message, "details": self.details });
        (self.status, Json(body)).into_response()
    }
}
