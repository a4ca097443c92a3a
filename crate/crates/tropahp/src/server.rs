//! JSON-over-HTTP service around the session store and the solver.
//!
//! | method | path | body | answer |
//! |---|---|---|---|
//! | GET | `/api/health` | | `{"status": "ok"}` |
//! | POST | `/api/problems` | problem document | session, 201 |
//! | GET | `/api/problems/{id}` | | session |
//! | PUT | `/api/problems/{id}` | problem document | session |
//! | POST | `/api/problems/{id}/solve` | solve settings | report |
//! | POST | `/api/problems/{id}/whatif` | overrides and/or weights | report, not stored |
//! | GET | `/api/problems/{id}/geometry` | | geometry, 3 alternatives only |
//!
//! Errors answer `{"error": message, "field": path}` with status 400 for bad
//! input, 404 for unknown sessions and 409 for stale versions.

use std::net::SocketAddr;
use std::sync::Arc;

use axum::body::Bytes;
use axum::extract::{Path, State};
use axum::http::StatusCode;
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::{Json, Router};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::document::{Entry, ProblemDocument};
use crate::error::{Error, Result};
use crate::report::{solve_document, GeometryDocument, ReportDocument, SolveSettings};
use crate::session::{Session, SessionStore};

#[derive(Clone)]
struct AppState {
    store: Arc<SessionStore>,
}

impl IntoResponse for Error {
    fn into_response(self) -> Response {
        let status = match &self {
            Error::NotFound(_) => StatusCode::NOT_FOUND,
            Error::Conflict { .. } => StatusCode::CONFLICT,
            Error::Io { .. } => StatusCode::INTERNAL_SERVER_ERROR,
            _ => StatusCode::BAD_REQUEST,
        };
        let body = match &self {
            Error::Invalid { field, message } => json!({ "error": message, "field": field }),
            other => json!({ "error": other.to_string() }),
        };
        (status, Json(body)).into_response()
    }
}

/// Which matrix a judgment override edits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum MatrixRef {
    /// Zero-based index of an alternative matrix.
    Alternative(usize),
    /// The string `"criteria"`.
    Named(MatrixName),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MatrixName {
    Criteria,
}

/// Replaces entry `(row, col)` (zero-based); the mirror entry follows.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Override {
    pub matrix: MatrixRef,
    pub row: usize,
    pub col: usize,
    pub value: Entry,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct WhatIfRequest {
    pub overrides: Vec<Override>,
    /// Criteria weights used instead of searching the weight cone.
    pub weights: Option<Vec<f64>>,
    #[serde(flatten)]
    pub settings: SolveSettings,
}

/// Applies overrides to a copy of `doc`, completing the mirrored entries.
pub fn apply_overrides(doc: &ProblemDocument, overrides: &[Override]) -> Result<ProblemDocument> {
    let mut edited = doc.clone();
    for (i, o) in overrides.iter().enumerate() {
        let field = format!("overrides[{i}]");
        let target = match o.matrix {
            MatrixRef::Named(MatrixName::Criteria) => None,
            MatrixRef::Alternative(k) => Some(k),
        };
        let m = edited
            .matrix_mut(target)
            .ok_or_else(|| Error::invalid(&field, format!("no matrix {:?}", o.matrix)))?;
        let n = m.len();
        if o.row >= n || o.col >= n {
            return Err(Error::invalid(
                &field,
                format!("cell ({}, {}) outside a {n}x{n} matrix", o.row, o.col),
            ));
        }
        if o.row == o.col {
            return Err(Error::invalid(&field, "diagonal entries are fixed at 1"));
        }
        o.value.value().map_err(|msg| Error::invalid(&field, msg))?;
        m[o.row][o.col] = Some(o.value.clone());
        m[o.col][o.row] = None;
    }
    edited.complete_reciprocals()?;
    Ok(edited)
}

fn parse_body<T: DeserializeOwned + Default>(body: &Bytes) -> Result<T> {
    if body.iter().all(u8::is_ascii_whitespace) {
        return Ok(T::default());
    }
    serde_json::from_slice(body).map_err(|e| Error::Parse {
        source_name: "request body".into(),
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })
}

fn parse_problem(body: &Bytes) -> Result<ProblemDocument> {
    let text = std::str::from_utf8(body).map_err(|e| Error::invalid("body", e.to_string()))?;
    ProblemDocument::from_json(text).map_err(|e| match e {
        Error::Parse {
            line,
            column,
            message,
            ..
        } => Error::Parse {
            source_name: "request body".into(),
            line,
            column,
            message,
        },
        other => other,
    })
}

// Solving can take a while on large weight cones; keep it off the async workers.
async fn blocking<T: Send + 'static>(f: impl FnOnce() -> Result<T> + Send + 'static) -> Result<T> {
    tokio::task::spawn_blocking(f)
        .await
        .expect("solver task panicked")
}

async fn health() -> Json<serde_json::Value> {
    Json(json!({ "status": "ok", "version": env!("CARGO_PKG_VERSION") }))
}

async fn create(State(st): State<AppState>, body: Bytes) -> Result<(StatusCode, Json<Session>)> {
    let doc = parse_problem(&body)?;
    let store = st.store.clone();
    let session = blocking(move || store.create(doc)).await?;
    Ok((StatusCode::CREATED, Json(session)))
}

async fn read(State(st): State<AppState>, Path(id): Path<String>) -> Result<Json<Session>> {
    let store = st.store.clone();
    Ok(Json(blocking(move || store.get(&id)).await?))
}

async fn replace(State(st): State<AppState>, Path(id): Path<String>, body: Bytes) -> Result<Json<Session>> {
    let doc = parse_problem(&body)?;
    let store = st.store.clone();
    let session = blocking(move || store.update(&id, doc)).await?;
    Ok(Json(session))
}

async fn solve(
    State(st): State<AppState>,
    Path(id): Path<String>,
    body: Bytes,
) -> Result<Json<ReportDocument>> {
    let settings: SolveSettings = parse_body(&body)?;
    let store = st.store.clone();
    let report = blocking(move || solve_document(&store.get(&id)?.problem, &settings, None)).await?;
    Ok(Json(report))
}

async fn whatif(
    State(st): State<AppState>,
    Path(id): Path<String>,
    body: Bytes,
) -> Result<Json<ReportDocument>> {
    let req: WhatIfRequest = parse_body(&body)?;
    let store = st.store.clone();
    let report = blocking(move || {
        let doc = apply_overrides(&store.get(&id)?.problem, &req.overrides)?;
        solve_document(&doc, &req.settings, req.weights.as_deref())
    })
    .await?;
    Ok(Json(report))
}

async fn geometry(State(st): State<AppState>, Path(id): Path<String>) -> Result<Json<GeometryDocument>> {
    let store = st.store.clone();
    let geometry = blocking(move || {
        let doc = store.get(&id)?.problem;
        if doc.alternatives.len() != 3 {
            return Err(Error::invalid(
                "alternatives",
                format!("geometry needs 3 alternatives, found {}", doc.alternatives.len()),
            ));
        }
        GeometryDocument::from_report(&solve_document(&doc, &SolveSettings::default(), None)?)
    })
    .await?;
    Ok(Json(geometry))
}

pub fn router(store: SessionStore) -> Router {
    let state = AppState {
        store: Arc::new(store),
    };
    Router::new()
        .route("/api/health", get(health))
        .route("/api/problems", post(create))
        .route("/api/problems/{id}", get(read).put(replace))
        .route("/api/problems/{id}/solve", post(solve))
        .route("/api/problems/{id}/whatif", post(whatif))
        .route("/api/problems/{id}/geometry", get(geometry))
        .with_state(state)
}

/// Serves until Ctrl-C.
pub async fn serve(addr: SocketAddr, store: SessionStore) -> std::io::Result<()> {
    let listener = tokio::net::TcpListener::bind(addr).await?;
    eprintln!(
        "tropahp listening on http://{} (data in {})",
        listener.local_addr()?,
        store.dir().display()
    );
    axum::serve(listener, router(store))
        .with_graceful_shutdown(async {
            let _ = tokio::signal::ctrl_c().await;
        })
        .await
}
