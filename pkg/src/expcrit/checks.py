"""Labelled pass/fail/skip records shared by the fact verifiers and the audit suites."""

from __future__ import annotations

from dataclasses import dataclass

PASS, FAIL, SKIP = "pass", "fail", "skip"


@dataclass
class Check:
    label: str
    subject: str
    status: str
    detail: str = ""

    @property
    def ok(self):
        return self.status != FAIL

    def as_dict(self):
        return {"label": self.label, "subject": self.subject, "status": self.status, "detail": self.detail}


def check(label, subject, condition, detail=""):
    return Check(label, subject, PASS if condition else FAIL, detail)


def skip(label, subject, reason):
    return Check(label, subject, SKIP, reason)
