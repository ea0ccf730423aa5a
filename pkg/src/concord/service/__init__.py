"""Judgment-elicitation HTTP service."""

from concord.service.app import analyze, create_app
from concord.service.store import Session, SessionStore

__all__ = ["Session", "SessionStore", "analyze", "create_app"]
