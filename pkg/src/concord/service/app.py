"""HTTP service for session-based judgment elicitation and analysis.

JSON API (indices are 1-based):

    POST   /sessions                    {"labels": [...]}      -> session
    GET    /sessions/{id}                                      -> session
    PUT    /sessions/{id}/judgments     {"i", "j", "value"}    -> session
    GET    /sessions/{id}/analysis                             -> analysis
    DELETE /sessions/{id}

Errors are JSON {"code", "message"}.  A built UI bundle, when present,
is served statically at /.
"""

from __future__ import annotations

import argparse
import os
from pathlib import Path

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel

from concord.core.consistency import check_consistency
from concord.core.matrix import validate
from concord.core.projection import approximate
from concord.core.weights import extract_weights
from concord.service.store import BadRequestError, NotFoundError, Session, SessionStore

TOP_TRIADS = 10

ADDR_ENV = "CONCORD_ADDR"
STATE_DIR_ENV = "CONCORD_STATE_DIR"
UI_DIR_ENV = "CONCORD_UI_DIR"
DEFAULT_ADDR = "127.0.0.1:8000"


class CreateSessionRequest(BaseModel):
    labels: list[str]


class PutJudgmentRequest(BaseModel):
    i: int
    j: int
    value: float


def analyze(session: Session) -> dict:
    """Analysis payload for one session snapshot.

    Completes the matrix (missing pairs default to 1), projects it onto
    the consistent subspace, and reports weights plus the worst triads,
    echoing the snapshot version the numbers were computed from.
    """
    matrix = validate(session.completed_matrix())
    result = approximate(matrix)
    weights = extract_weights(result.consistent)
    report = check_consistency(matrix)
    return {
        "version": session.version,
        "labels": list(session.labels),
        "matrix": matrix.entries.tolist(),
        "consistent": result.consistent.entries.tolist(),
        "weights": weights.values.tolist(),
        "residual_norm": result.residual_norm,
        "global_inconsistency": report.global_inconsistency,
        "triads": [
            {"i": i, "j": j, "k": k, "inconsistency": value}
            for i, j, k, value in report.worst(TOP_TRIADS)
        ],
    }


def create_app(state_dir: str | None = None, ui_dir: str | None = None) -> FastAPI:
    app = FastAPI(title="concord", version="0.1.0")
    store = SessionStore(state_dir=state_dir)
    app.state.store = store

    @app.exception_handler(BadRequestError)
    async def _bad_request(_: Request, exc: BadRequestError):
        return JSONResponse(status_code=400, content={"code": "bad_request", "message": str(exc)})

    @app.exception_handler(NotFoundError)
    async def _not_found(_: Request, exc: NotFoundError):
        return JSONResponse(status_code=404, content={"code": "not_found", "message": str(exc)})

    @app.post("/sessions", status_code=201)
    def create_session(body: CreateSessionRequest) -> dict:
        return store.create(body.labels).to_dict()

    @app.get("/sessions/{session_id}")
    def get_session(session_id: str) -> dict:
        return store.get(session_id).to_dict()

    @app.put("/sessions/{session_id}/judgments")
    def put_judgment(session_id: str, body: PutJudgmentRequest) -> dict:
        return store.put_judgment(session_id, body.i, body.j, body.value).to_dict()

    @app.get("/sessions/{session_id}/analysis")
    def get_analysis(session_id: str) -> dict:
        return analyze(store.snapshot(session_id))

    @app.delete("/sessions/{session_id}", status_code=204)
    def delete_session(session_id: str) -> None:
        store.delete(session_id)

    if ui_dir and Path(ui_dir).is_dir():
        app.mount("/", StaticFiles(directory=ui_dir, html=True), name="ui")

    return app


def _default_ui_dir() -> str | None:
    env = os.environ.get(UI_DIR_ENV)
    if env:
        return env
    bundled = Path(__file__).resolve().parents[3] / "frontend" / "dist"
    return str(bundled) if bundled.is_dir() else None


def main(argv: list[str] | None = None) -> None:
    parser = argparse.ArgumentParser(prog="concord-serve", description=__doc__)
    parser.add_argument(
        "--addr",
        default=os.environ.get(ADDR_ENV, DEFAULT_ADDR),
        help=f"listen address host:port (env {ADDR_ENV})",
    )
    parser.add_argument(
        "--state-dir",
        default=os.environ.get(STATE_DIR_ENV),
        help=f"directory for session persistence (env {STATE_DIR_ENV})",
    )
    parser.add_argument(
        "--ui-dir",
        default=None,
        help=f"directory with the built UI bundle (env {UI_DIR_ENV})",
    )
    args = parser.parse_args(argv)
    host, _, port = args.addr.rpartition(":")
    app = create_app(state_dir=args.state_dir, ui_dir=args.ui_dir or _default_ui_dir())

    import uvicorn

    uvicorn.run(app, host=host or "127.0.0.1", port=int(port))


if __name__ == "__main__":
    main()
