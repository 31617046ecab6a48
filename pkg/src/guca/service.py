"""Stateful-session HTTP API for the explorer UI and scripts.

Sessions live in memory: each holds a workspace document plus undo/redo
stacks; every state pushed on the stacks satisfies B . sigma = 0 by
construction.  Requests on one session are serialized with a lock;
distinct sessions are independent.
"""

import json
import os
import threading
import uuid
from typing import Optional

from fastapi import FastAPI, HTTPException, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from pydantic import BaseModel

from . import io as gio
from .cli import FAMILIES
from .cones import lattice_points
from .hive import build_flat, build_flatflat, build_hive, hive_cone, \
    kostka_weight, lr_weight
from .oracles import kostant_oracle, kostka_oracle, lr_oracle
from .seeds import project_config, search_zeroing_mutations
from .sirep import method_pipeline

app = FastAPI(title="guca session service")
app.add_middleware(
    CORSMiddleware,
    allow_origins=["*"],
    allow_methods=["*"],
    allow_headers=["*"],
)


class Session:
    def __init__(self, doc):
        self.id = uuid.uuid4().hex[:12]
        self.doc = doc
        self.undo_stack = []
        self.redo_stack = []
        self.lock = threading.Lock()
        _journal("create", self.id, doc)

    def push(self, new_doc):
        self.undo_stack.append(self.doc)
        self.redo_stack.clear()
        self.doc = new_doc
        _journal("state", self.id, new_doc)


def _journal(op, sid, doc):
    """Append-only journal when GUCA_JOURNAL points at a file."""
    path = os.environ.get("GUCA_JOURNAL")
    if not path:
        return
    with open(path, "a") as fh:
        fh.write(json.dumps({"op": op, "session": sid,
                             "doc": doc.to_json()}, sort_keys=True) + "\n")


SESSIONS = {}


def _error(status, code, message, field=None):
    payload = {"code": code, "message": message}
    if field:
        payload["field"] = field
    raise HTTPException(status_code=status, detail=payload)


@app.exception_handler(HTTPException)
async def _http_error(request: Request, exc: HTTPException):
    detail = exc.detail if isinstance(exc.detail, dict) else \
        {"code": "error", "message": str(exc.detail)}
    return JSONResponse(status_code=exc.status_code, content=detail)


def _get_session(sid) -> Session:
    sess = SESSIONS.get(sid)
    if sess is None:
        _error(404, "unknown_session", f"no session {sid!r}")
    return sess


class CreateBody(BaseModel):
    builder: Optional[str] = None
    doc: Optional[dict] = None


class VertexBody(BaseModel):
    vertex: str


class DeleteFreezeBody(BaseModel):
    v: list
    u: object = "auto"


class SearchBody(BaseModel):
    r: str
    depth: int = 2
    count: Optional[int] = None


def _build_doc(body: CreateBody):
    if body.builder:
        try:
            family, n = body.builder.split(":")
            fam = {"hive": "triangle"}.get(family, family)
            seed = FAMILIES[fam](int(n))
        except (ValueError, KeyError) as exc:
            _error(422, "schema", f"bad builder spec: {exc}", "builder")
        return gio.doc_from_hive(seed)
    if body.doc is not None:
        try:
            return gio.parse_doc(body.doc)
        except gio.SchemaError as exc:
            _error(422, "schema", str(exc), exc.field)
    _error(422, "schema", "need either 'builder' or 'doc'")


@app.post("/sessions")
def create_session(body: CreateBody):
    doc = _build_doc(body)
    sess = Session(doc)
    SESSIONS[sess.id] = sess
    return {"id": sess.id}


def _views(doc, r=None):
    quiver = doc.quiver
    views = {
        "b_matrix": quiver.b_matrix(),
        "mutable": quiver.mutable,
        "vertices": list(quiver.vertices),
        "frozen": sorted(quiver.frozen),
        "weight_table": {v: list(doc.config[v]) for v in quiver.vertices},
        "lattice_labels": doc.config.lattice.labels,
    }
    if r is not None:
        try:
            idx = doc.config.lattice.basis_label_index(r)
        except ValueError:
            _error(422, "schema", f"unknown coordinate {r!r}", "r")
        views["r"] = r
        views["sigma_r"] = {v: doc.config[v][idx] for v in quiver.vertices}
    return views


@app.get("/sessions/{sid}")
def get_session(sid: str, r: Optional[str] = None):
    sess = _get_session(sid)
    with sess.lock:
        return {"id": sid, "doc": sess.doc.to_json(),
                "views": _views(sess.doc, r),
                "can_undo": bool(sess.undo_stack),
                "can_redo": bool(sess.redo_stack)}


@app.post("/sessions/{sid}/mutate")
def mutate(sid: str, body: VertexBody):
    sess = _get_session(sid)
    with sess.lock:
        doc = sess.doc
        v = body.vertex
        if v not in doc.quiver.index:
            _error(422, "schema", f"unknown vertex {v!r}", "vertex")
        if doc.quiver.is_frozen(v):
            _error(409, "frozen", f"vertex {v!r} is frozen")
        quiver = doc.quiver.mutate(v)
        config = doc.config.mutate(doc.quiver, v)
        new_doc = gio.WorkspaceDoc(quiver, config, doc.rep_quiver,
                                   doc.rep_beta, doc.potential,
                                   list(doc.history) + [v])
        sess.push(new_doc)
        return {"doc": new_doc.to_json(), "views": _views(new_doc)}


@app.post("/sessions/{sid}/project")
def project(sid: str, body: VertexBody):
    sess = _get_session(sid)
    with sess.lock:
        doc = sess.doc
        v = body.vertex
        if v not in doc.quiver.index:
            _error(422, "schema", f"unknown vertex {v!r}", "vertex")
        try:
            quiver, config = project_config(doc.quiver, doc.config, v)
        except ValueError as exc:
            _error(409, "not_real", str(exc))
        new_doc = gio.WorkspaceDoc(quiver, config, doc.rep_quiver,
                                   doc.rep_beta, doc.potential,
                                   list(doc.history) + [f"project:{v}"])
        sess.push(new_doc)
        return {"doc": new_doc.to_json(), "views": _views(new_doc)}


@app.post("/sessions/{sid}/delete-freeze")
def delete_freeze(sid: str, body: DeleteFreezeBody):
    sess = _get_session(sid)
    with sess.lock:
        doc = sess.doc
        v_set = list(body.v)
        for v in v_set:
            if v not in doc.quiver.index:
                _error(422, "schema", f"unknown vertex {v!r}", "v")
        if body.u == "auto":
            u_set = sorted(doc.quiver.mutable_neighbors(v_set), key=str)
        else:
            u_set = list(body.u)
            for u in u_set:
                if u not in doc.quiver.index:
                    _error(422, "schema", f"unknown vertex {u!r}", "u")
        import warnings
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            quiver = doc.quiver.delete_freeze(v_set, u_set)
        config = doc.config.restrict(quiver.vertices)
        new_doc = gio.WorkspaceDoc(quiver, config, doc.rep_quiver,
                                   doc.rep_beta, doc.potential,
                                   list(doc.history) +
                                   [f"delete:{','.join(map(str, v_set))}"])
        sess.push(new_doc)
        return {"doc": new_doc.to_json(), "views": _views(new_doc),
                "deleted": v_set, "frozen": u_set}


@app.post("/sessions/{sid}/search")
def search(sid: str, body: SearchBody):
    sess = _get_session(sid)
    with sess.lock:
        doc = sess.doc
        try:
            idx = doc.config.lattice.basis_label_index(body.r)
        except ValueError:
            _error(422, "schema", f"unknown coordinate {body.r!r}", "r")
        found = search_zeroing_mutations(doc.quiver, doc.config, idx,
                                         body.depth,
                                         required_count=body.count)
        candidates = [{"sequence": seq, "exceptions": exc,
                       "suggested_freeze": sorted(
                           doc.quiver.mutate_seq(seq)
                           .mutable_neighbors(exc), key=str)}
                      for seq, exc in found]
        return {"r": body.r, "depth": body.depth, "candidates": candidates}


@app.post("/sessions/{sid}/remove-vertex")
def remove_vertex(sid: str, body: SearchBody):
    sess = _get_session(sid)
    with sess.lock:
        doc = sess.doc
        if doc.rep_quiver is None:
            _error(422, "schema", "document carries no 'rep' data", "rep")
        if body.r not in doc.rep_quiver.index:
            _error(422, "schema", f"unknown Q-vertex {body.r!r}", "r")
        res = method_pipeline(doc.quiver, doc.config, doc.rep_quiver,
                              doc.rep_beta, body.r, depth=body.depth)
        if not res.ok:
            return {"ok": False, "r": body.r, "d": res.d,
                    "diagnosis": res.diagnosis}
        new_doc = gio.WorkspaceDoc(res.ice_quiver, res.config,
                                   res.rep_quiver, res.rep_beta,
                                   doc.potential,
                                   list(doc.history) + [f"remove:{body.r}"])
        sess.push(new_doc)
        return {"ok": True, "r": body.r, "d": res.d,
                "sequence": res.sequence, "deleted": res.v_set,
                "frozen": res.u_set, "doc": new_doc.to_json(),
                "views": _views(new_doc)}


@app.post("/sessions/{sid}/undo")
def undo(sid: str):
    sess = _get_session(sid)
    with sess.lock:
        if not sess.undo_stack:
            _error(409, "empty", "nothing to undo")
        sess.redo_stack.append(sess.doc)
        sess.doc = sess.undo_stack.pop()
        return {"doc": sess.doc.to_json(), "views": _views(sess.doc)}


@app.post("/sessions/{sid}/redo")
def redo(sid: str):
    sess = _get_session(sid)
    with sess.lock:
        if not sess.redo_stack:
            _error(409, "empty", "nothing to redo")
        sess.undo_stack.append(sess.doc)
        sess.doc = sess.redo_stack.pop()
        return {"doc": sess.doc.to_json(), "views": _views(sess.doc)}


@app.get("/count")
def count(kind: str, lam: str = "", mu: str = "", nu: str = "",
          target: str = "", n: int = 0):
    def parts(text):
        return [int(x) for x in text.split(",") if x != ""]

    try:
        if kind == "lr":
            l, m, v = parts(lam), parts(mu), parts(nu)
            size = n or max(len(l), len(m) + 1, len(v) + 1, 2)
            seed = build_hive(size)
            cone = hive_cone(seed)
            cnt, _ = lattice_points(cone, seed.config.matrix(cone.labels),
                                    lr_weight(size, l, m, v))
            return {"oracle": lr_oracle(l, m, v), "polytope": cnt}
        if kind == "kostka":
            l, m = parts(lam), parts(mu)
            size = n or max(len(l) + 1, len(m), 2)
            seed = build_flat(size)
            cone = hive_cone(seed)
            cnt, _ = lattice_points(cone, seed.config.matrix(cone.labels),
                                    kostka_weight(size, l, m))
            return {"oracle": kostka_oracle(l, m), "polytope": cnt}
        if kind == "kostant":
            coords = parts(target)
            seed = build_flatflat(n)
            cone = hive_cone(seed)
            cnt, _ = lattice_points(cone, seed.config.matrix(cone.labels),
                                    tuple(coords))
            return {"oracle": kostant_oracle(tuple(coords), n),
                    "polytope": cnt}
    except ValueError as exc:
        _error(422, "schema", str(exc))
    _error(422, "schema", f"unknown count kind {kind!r}", "kind")
