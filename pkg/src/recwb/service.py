"""HTTP API over one live session.

All mutations funnel through a single lock (the store has one logical
writer); reads serve snapshots. Indices travel as decimal strings in every
payload. Mutating responses carry the new version counter so clients can
poll cheaply with ?since=<version>.
"""

from __future__ import annotations

import threading

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel

from . import harness
from .algebra import compose, const_program, prepend_value
from .certify import CertificateError
from .lang import pretty_print
from .numbering import decode_program, index_str, parse_index
from .qproc import Session, SessionFormatError


class CertifyBody(BaseModel):
    claim: str  # "total" | "enum"
    subject: str
    rule: str
    premises: list[str] = []


class PsiBody(BaseModel):
    j: str


class FeedBody(BaseModel):
    j: str


class QueryBody(BaseModel):
    x: str


class StepBody(BaseModel):
    x: str | None = None
    j: str | None = None


class VerifyBody(BaseModel):
    j: str
    n: int = harness.DEFAULT_N
    fuel: int = harness.DEFAULT_FUEL


class BuildBody(BaseModel):
    kind: str  # "const" | "prepend" | "compose"
    args: list[str] = []


class ImportBody(BaseModel):
    log: str


class ExampleBody(BaseModel):
    k: int = 3


def _index(value: str) -> int:
    try:
        return parse_index(value)
    except ValueError as exc:
        raise HTTPException(status_code=422, detail={"error": str(exc)})


def _tree(stmt) -> dict:
    kind = type(stmt).__name__
    node = {"kind": kind}
    for name in getattr(stmt, "__dataclass_fields__", ()):
        value = getattr(stmt, name)
        if name == "body":
            node["body"] = [_tree(s) for s in value]
        else:
            node[name] = index_str(value) if name == "value" else int(value)
    return node


def create_app(session: Session | None = None) -> FastAPI:
    app = FastAPI(title="recwb service")
    state = {"session": session or Session()}
    lock = threading.Lock()

    def sess() -> Session:
        return state["session"]

    @app.get("/version")
    def version():
        s = sess()
        return {"version": s.version, "alpha_size": len(s.alpha_entries),
                "certificates": len(s.registry.records), "c": index_str(s.c)}

    @app.get("/alpha")
    def alpha(since: int = -1):
        s = sess()
        if since >= 0 and s.version == since:
            return {"version": s.version, "unchanged": True, "entries": []}
        # a fed slot holds a diagonal index (a 5-statement program, never the
        # empty program), so value != c identifies feed provenance exactly
        entries = [{"slot": int(x), "index": index_str(y),
                    "provenance": "feed" if y != s.c else "query"}
                   for x, y in s.alpha_entries]
        return {"version": s.version, "unchanged": False, "entries": entries}

    @app.get("/alpha/{x}")
    def alpha_peek(x: int):
        """Snapshot read of the store; never inserts (not the memo function)."""
        s = sess()
        y = s.peek(x)
        return {"slot": x, "present": y is not None,
                "index": index_str(y) if y is not None else None,
                "version": s.version}

    @app.get("/program/{index}")
    def program(index: str):
        i = _index(index)
        p = decode_program(i)
        return {"index": index_str(i), "pretty": pretty_print(p),
                "tree": [_tree(st) for st in p.body]}

    @app.get("/certificates")
    def certificates():
        s = sess()
        return {"version": s.version,
                "records": [{"claim": c.claim, "subject": index_str(c.subject),
                             "kind": c.kind,
                             "premises": [index_str(p) for p in c.premises]}
                            for c in s.registry.records]}

    @app.post("/build")
    def build(body: BuildBody):
        # Pure index construction so clients never compute indices themselves.
        # Read-only: issues no certificates and bumps no version.
        arity = {"const": 1, "prepend": 2, "compose": 2}.get(body.kind)
        if arity is None:
            raise HTTPException(status_code=422,
                                detail={"error": f"unknown builder {body.kind!r}"})
        if len(body.args) != arity:
            raise HTTPException(status_code=422,
                                detail={"error": f"{body.kind} takes {arity} argument(s)"})
        args = [_index(a) for a in body.args]
        fn = {"const": const_program, "prepend": prepend_value, "compose": compose}[body.kind]
        return {"kind": body.kind, "index": index_str(fn(*args))}

    @app.post("/certify")
    def certify(body: CertifyBody):
        s = sess()
        subject = _index(body.subject)
        premises = tuple(_index(p) for p in body.premises)
        with lock:
            try:
                if body.claim == "total":
                    cert = s.issue_total(subject, (body.rule, *premises))
                elif body.claim == "enum":
                    cert = s.issue_enum(subject, (body.rule, *premises))
                else:
                    raise HTTPException(status_code=422,
                                        detail={"error": f"unknown claim {body.claim!r}"})
            except CertificateError as exc:
                raise HTTPException(status_code=409, detail={"error": str(exc)})
        return {"version": s.version, "subject": index_str(cert.subject),
                "kind": cert.kind, "claim": cert.claim}

    @app.post("/psi")
    def apply_psi(body: PsiBody):
        s = sess()
        j = _index(body.j)
        with lock:
            try:
                cert = s.issue_total(harness.psi(j), ("psi", j))
            except CertificateError as exc:
                raise HTTPException(status_code=409, detail={"error": str(exc)})
        return {"version": s.version, "index": index_str(cert.subject)}

    @app.post("/q/feed")
    def q_feed(body: FeedBody):
        s = sess()
        j = _index(body.j)
        with lock:
            try:
                returned = s.q_feed(j)
            except CertificateError as exc:
                raise HTTPException(status_code=409, detail={"error": str(exc)})
            slot, value = s.alpha_entries[-1]
        return {"version": s.version, "returned": index_str(returned),
                "slot": int(slot), "value": index_str(value)}

    @app.post("/q/query")
    def q_query(body: QueryBody):
        s = sess()
        x = int(_index(body.x))
        with lock:
            returned = s.q_query(x)
        return {"version": s.version, "returned": index_str(returned)}

    @app.post("/q/step")
    def q_step(body: StepBody):
        s = sess()
        x = int(_index(body.x)) if body.x is not None else None
        j = _index(body.j) if body.j is not None else None
        with lock:
            try:
                returned = s.q_step(x=x, j=j)
            except CertificateError as exc:
                raise HTTPException(status_code=409, detail={"error": str(exc)})
        return {"version": s.version, "returned": index_str(returned)}

    @app.post("/verify/diagonal")
    def verify_diagonal(body: VerifyBody):
        s = sess()
        try:
            report = harness.verify_diagonal(s, _index(body.j), body.n, body.fuel)
        except CertificateError as exc:
            raise HTTPException(status_code=409, detail={"error": str(exc)})
        return report.to_dict()

    @app.post("/verify/escape")
    def verify_escape(body: VerifyBody):
        s = sess()
        try:
            report = harness.verify_escape(s, _index(body.j), body.n, body.fuel)
        except CertificateError as exc:
            raise HTTPException(status_code=409, detail={"error": str(exc)})
        return report.to_dict()

    @app.post("/verify/thm5")
    def verify_thm5(body: VerifyBody):
        s = sess()
        with lock:
            try:
                report = harness.theorem5_witness(s, _index(body.j), body.n, body.fuel)
            except CertificateError as exc:
                raise HTTPException(status_code=409, detail={"error": str(exc)})
        return report.to_dict()

    @app.post("/example/2")
    def example2(body: ExampleBody):
        try:
            t = harness.run_example2(body.k)
        except (AssertionError, ValueError) as exc:
            raise HTTPException(status_code=422, detail={"error": str(exc)})
        return {"transcript": t.steps}

    @app.get("/session/export")
    def session_export():
        s = sess()
        lines = [f"session-log v1 c={index_str(s.c)}"]
        lines.extend(rec.line() for rec in s.log)
        lines.append(f"COUNT {len(s.log)}")
        return {"version": s.version, "log": "\n".join(lines) + "\n"}

    @app.post("/session/import")
    def session_import(body: ImportBody):
        with lock:
            try:
                state["session"] = Session.replay(body.log)
            except SessionFormatError as exc:
                raise HTTPException(status_code=422, detail={"error": str(exc)})
        return {"version": state["session"].version,
                "alpha_size": len(state["session"].alpha_entries)}

    return app


app = create_app()
