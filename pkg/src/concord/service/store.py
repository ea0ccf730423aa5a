"""Session storage for judgment elicitation.

Sessions live in memory, optionally mirrored to one JSON file per
session under a state directory (rewritten on every mutation, loaded
back on startup).  Each session's mutations are serialized by its own
lock; analysis readers take a consistent snapshot under that lock and
compute outside it.

Judgments are stored sparsely for the upper triangle only, keyed by
1-based (i, j) with i < j; a put to (j, i) stores the reciprocal value
at (i, j).  Missing pairs mean indifference (ratio 1).
"""

from __future__ import annotations

import json
import secrets
import threading
from dataclasses import dataclass, field
from datetime import datetime, timezone
from pathlib import Path

import numpy as np

MIN_STIMULI = 2
MAX_STIMULI = 50


class BadRequestError(Exception):
    """Client sent an invalid session or judgment payload."""


class NotFoundError(Exception):
    """No session with that id."""


def _now() -> str:
    return datetime.now(timezone.utc).isoformat()


@dataclass
class Session:
    id: str
    labels: tuple[str, ...]
    judgments: dict[tuple[int, int], float] = field(default_factory=dict)
    created: str = field(default_factory=_now)
    updated: str = field(default_factory=_now)
    version: int = 1

    @property
    def n(self) -> int:
        return len(self.labels)

    def completed_matrix(self) -> np.ndarray:
        """Full reciprocal matrix with missing judgments defaulted to 1."""
        m = np.ones((self.n, self.n))
        for (i, j), value in self.judgments.items():
            m[i - 1, j - 1] = value
            m[j - 1, i - 1] = 1.0 / value
        return m

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "labels": list(self.labels),
            "judgments": [
                {"i": i, "j": j, "value": value}
                for (i, j), value in sorted(self.judgments.items())
            ],
            "created": self.created,
            "updated": self.updated,
            "version": self.version,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "Session":
        return cls(
            id=data["id"],
            labels=tuple(data["labels"]),
            judgments={
                (entry["i"], entry["j"]): float(entry["value"])
                for entry in data.get("judgments", [])
            },
            created=data.get("created", _now()),
            updated=data.get("updated", _now()),
            version=int(data.get("version", 1)),
        )


@dataclass
class _Entry:
    session: Session
    lock: threading.Lock = field(default_factory=threading.Lock)


class SessionStore:
    def __init__(self, state_dir: str | Path | None = None):
        self._entries: dict[str, _Entry] = {}
        self._map_lock = threading.Lock()
        self._state_dir = Path(state_dir) if state_dir else None
        if self._state_dir:
            self._state_dir.mkdir(parents=True, exist_ok=True)
            for path in sorted(self._state_dir.glob("*.json")):
                session = Session.from_dict(json.loads(path.read_text(encoding="utf-8")))
                self._entries[session.id] = _Entry(session=session)

    def _persist(self, session: Session) -> None:
        if self._state_dir is None:
            return
        path = self._state_dir / f"{session.id}.json"
        tmp = path.with_suffix(".json.tmp")
        tmp.write_text(json.dumps(session.to_dict(), indent=2), encoding="utf-8")
        tmp.replace(path)

    def _entry(self, session_id: str) -> _Entry:
        with self._map_lock:
            entry = self._entries.get(session_id)
        if entry is None:
            raise NotFoundError(f"no session {session_id!r}")
        return entry

    def create(self, labels: list[str]) -> Session:
        cleaned = [label.strip() for label in labels]
        if any(not label for label in cleaned):
            raise BadRequestError("labels must be nonempty strings")
        if len(set(cleaned)) != len(cleaned):
            raise BadRequestError("labels must be unique")
        if not MIN_STIMULI <= len(cleaned) <= MAX_STIMULI:
            raise BadRequestError(
                f"number of stimuli must be in {MIN_STIMULI}..{MAX_STIMULI}, got {len(cleaned)}"
            )
        session = Session(id=secrets.token_urlsafe(9), labels=tuple(cleaned))
        with self._map_lock:
            self._entries[session.id] = _Entry(session=session)
        self._persist(session)
        return session

    def get(self, session_id: str) -> Session:
        entry = self._entry(session_id)
        with entry.lock:
            return self._snapshot(entry.session)

    def put_judgment(self, session_id: str, i: int, j: int, value: float) -> Session:
        entry = self._entry(session_id)
        with entry.lock:
            session = entry.session
            n = session.n
            if not (1 <= i <= n and 1 <= j <= n):
                raise BadRequestError(f"indices must be in 1..{n}, got ({i},{j})")
            if i == j:
                raise BadRequestError("cannot compare a stimulus with itself")
            if not (np.isfinite(value) and value > 0):
                raise BadRequestError(f"judgment must be a positive finite number, got {value!r}")
            if i < j:
                session.judgments[(i, j)] = float(value)
            else:
                session.judgments[(j, i)] = 1.0 / float(value)
            session.version += 1
            session.updated = _now()
            snapshot = self._snapshot(session)
            # persist under the session lock: concurrent writers would race
            # on the temp file and could land an older version last
            self._persist(snapshot)
        return snapshot

    def delete(self, session_id: str) -> None:
        with self._map_lock:
            entry = self._entries.pop(session_id, None)
        if entry is None:
            raise NotFoundError(f"no session {session_id!r}")
        if self._state_dir is not None:
            path = self._state_dir / f"{entry.session.id}.json"
            path.unlink(missing_ok=True)

    def snapshot(self, session_id: str) -> Session:
        """Consistent copy for analysis, taken under the session lock."""
        return self.get(session_id)

    @staticmethod
    def _snapshot(session: Session) -> Session:
        return Session(
            id=session.id,
            labels=session.labels,
            judgments=dict(session.judgments),
            created=session.created,
            updated=session.updated,
            version=session.version,
        )
