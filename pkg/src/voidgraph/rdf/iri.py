"""RFC 3986 reference resolution.

``urllib.parse.urljoin`` only resolves for schemes listed in
``uses_relative``, so ``urn:``/``tag:`` bases and friends come back wrong.
"""
from __future__ import annotations

import re
from typing import NamedTuple, Optional

_URI_RE = re.compile(r"^(?:([^:/?#]+):)?(?://([^/?#]*))?([^?#]*)(?:\?([^#]*))?(?:#(.*))?$", re.S)
_SCHEME_RE = re.compile(r"^[A-Za-z][A-Za-z0-9+.\-]*:")


class _Parts(NamedTuple):
    scheme: Optional[str]
    authority: Optional[str]
    path: str
    query: Optional[str]
    fragment: Optional[str]


def _split(ref: str) -> _Parts:
    m = _URI_RE.match(ref)
    assert m is not None  # the pattern matches every string
    return _Parts(*m.groups(default=None)[:2], m.group(3), m.group(4), m.group(5))


def is_absolute(iri: str) -> bool:
    return _SCHEME_RE.match(iri) is not None


def remove_dot_segments(path: str) -> str:
    out: list = []
    i = path
    while i:
        if i.startswith("../"):
            i = i[3:]
        elif i.startswith("./"):
            i = i[2:]
        elif i.startswith("/./"):
            i = i[2:]
        elif i == "/.":
            i = "/"
        elif i.startswith("/../"):
            i = i[3:]
            if out:
                out.pop()
        elif i == "/..":
            i = "/"
            if out:
                out.pop()
        elif i in (".", ".."):
            i = ""
        else:
            start = 1 if i.startswith("/") else 0
            end = i.find("/", start)
            if end == -1:
                end = len(i)
            out.append(i[:end])
            i = i[end:]
    return "".join(out)


def _merge(base: _Parts, ref_path: str) -> str:
    if base.authority is not None and base.path == "":
        return "/" + ref_path
    cut = base.path.rfind("/")
    return base.path[: cut + 1] + ref_path


def _recompose(p: _Parts) -> str:
    out = ""
    if p.scheme is not None:
        out += p.scheme + ":"
    if p.authority is not None:
        out += "//" + p.authority
    out += p.path
    if p.query is not None:
        out += "?" + p.query
    if p.fragment is not None:
        out += "#" + p.fragment
    return out


def resolve_iri(base: str, ref: str) -> str:
    """Resolve ``ref`` against the absolute ``base`` (strict RFC 3986 5.2.2)."""
    r = _split(ref)
    b = _split(base)
    if r.scheme is not None:
        return _recompose(r._replace(path=remove_dot_segments(r.path)))
    if r.authority is not None:
        return _recompose(
            _Parts(b.scheme, r.authority, remove_dot_segments(r.path), r.query, r.fragment)
        )
    if r.path == "":
        query = r.query if r.query is not None else b.query
        return _recompose(_Parts(b.scheme, b.authority, b.path, query, r.fragment))
    if r.path.startswith("/"):
        path = remove_dot_segments(r.path)
    else:
        path = remove_dot_segments(_merge(b, r.path))
    return _recompose(_Parts(b.scheme, b.authority, path, r.query, r.fragment))
