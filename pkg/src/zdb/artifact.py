"""JSON artifact holding a function table, its group and its family metadata."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Optional, Tuple

import numpy as np

from .core import ZdbFunction, ZdbParams
from .errors import ArtifactFormatError, ZdbError
from .group import GroupSpec

FORMAT_VERSION = 1


def group_to_json(g: GroupSpec) -> dict:
    if g.kind == "cyclic":
        return {"kind": "cyclic", "n": g.n}
    out = {"kind": "product", "q": g.q_list}
    if g.allow_repeated_primes:
        out["allow_repeated_primes"] = True
    return out


def group_from_json(obj: dict) -> GroupSpec:
    kind = obj["kind"]
    if kind == "cyclic":
        return GroupSpec.cyclic(int(obj["n"]))
    if kind == "product":
        return GroupSpec.product([int(q) for q in obj["q"]],
                                 allow_repeated_primes=bool(obj.get("allow_repeated_primes", False)))
    raise ArtifactFormatError(f"unknown group kind {kind!r}")


def params_to_json(p: ZdbParams) -> dict:
    return {"n": p.n, "ell_bar": p.ell_bar, "lambda": p.lam, "tau": list(p.tau)}


def params_from_json(obj: dict) -> ZdbParams:
    return ZdbParams(n=int(obj["n"]), ell_bar=int(obj["ell_bar"]), lam=int(obj["lambda"]),
                     tau=tuple(int(t) for t in obj["tau"]))


def to_document(f: ZdbFunction, params: Optional[ZdbParams] = None) -> dict:
    doc = {
        "format_version": FORMAT_VERSION,
        "group": group_to_json(f.group),
        "family": f.family,
        "labels": f.labels.tolist(),
    }
    if params is not None:
        doc["params"] = params_to_json(params)
    return doc


def dumps(f: ZdbFunction, params: Optional[ZdbParams] = None) -> str:
    return json.dumps(to_document(f, params), sort_keys=True) + "\n"


def loads(text: str) -> Tuple[ZdbFunction, Optional[ZdbParams]]:
    """Parse an artifact; labels that are not dense are densified."""
    try:
        doc = json.loads(text)
        if doc.get("format_version") != FORMAT_VERSION:
            raise ArtifactFormatError(f"unsupported format_version {doc.get('format_version')!r}")
        g = group_from_json(doc["group"])
        labels = doc["labels"]
        if not isinstance(labels, list) or not all(isinstance(x, int) for x in labels):
            raise ArtifactFormatError("labels must be a list of integers")
        f = ZdbFunction(g, np.asarray(labels, dtype=np.int64), dict(doc.get("family") or {"family": "external"}))
        params = params_from_json(doc["params"]) if "params" in doc else None
    except ArtifactFormatError:
        raise
    except (ValueError, KeyError, TypeError, AttributeError, ZdbError) as exc:
        raise ArtifactFormatError(f"malformed artifact: {exc}") from exc
    return f, params


def save(path, f: ZdbFunction, params: Optional[ZdbParams] = None) -> None:
    Path(path).write_text(dumps(f, params))


def load(path) -> Tuple[ZdbFunction, Optional[ZdbParams]]:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ArtifactFormatError(str(exc)) from exc
    return loads(text)
