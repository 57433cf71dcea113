"""Text formats for plane digraphs (PDG), skeletons (PSK) and coating
functions (CF), plus JSON forms of cycle sets and valuations.

Identifiers are written with ``str`` and must not contain whitespace.  On
reading, an identifier made only of digits (with an optional leading minus
sign) becomes an ``int``; everything else stays a string.
"""

from __future__ import annotations

import json
import re
from pathlib import Path
from typing import Iterable, Mapping

from .errors import EmbeddingError, ParseError
from .plane import LEFT, RIGHT, DiCycle, PlaneDigraph, make_cycle, sort_key
from .skeleton import Skeleton, half_token

_INT = re.compile(r"-?\d+\Z")


def _ident(x) -> str:
    s = str(x)
    if not s or any(ch.isspace() for ch in s):
        raise ValueError(f"identifier {x!r} cannot be written in a text format")
    return s


def _read_ident(tok: str):
    return int(tok) if _INT.match(tok) else tok


def _lines(text: str):
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield no, line.split()


def _expect_header(text: str, name: str, path) -> list:
    rows = list(_lines(text))
    if not rows or rows[0][1] != [name, "1"]:
        line = rows[0][0] if rows else 1
        raise ParseError(f"expected header '{name} 1'", path, line)
    return rows[1:]


def _read_text(src) -> tuple:
    if isinstance(src, Path) or (isinstance(src, str) and "\n" not in src and Path(src).is_file()):
        return Path(src).read_text(encoding="utf-8"), str(src)
    return src, None


# ----------------------------------------------------------------------
# PDG


def write_pdg(G: PlaneDigraph) -> str:
    out = ["pdg 1"]
    for a in sorted(G.arcs, key=sort_key):
        t, h = G.arcs[a]
        out.append(f"a {_ident(a)} {_ident(t)} {_ident(h)}")
    for v in G.vertices:
        toks = " ".join(f"{_ident(a)}{'+' if s == 1 else '-'}" for a, s in G.rotation[v])
        out.append(f"v {_ident(v)} :" + (f" {toks}" if toks else ""))
    if G.outer is not None:
        a, side = G.outer
        out.append(f"outer {_ident(a)} {side}")
    return "\n".join(out) + "\n"


def _parse_rotation(row: list, no: int, path, suffixes: dict) -> tuple:
    if len(row) < 3 or row[2] != ":":
        raise ParseError("expected 'v <id> : <tokens>'", path, no)
    v = _read_ident(row[1])
    seq = []
    for tok in row[3:]:
        if len(tok) < 2 or tok[-1] not in suffixes:
            raise ParseError(f"bad half-arc token {tok!r}", path, no)
        seq.append((_read_ident(tok[:-1]), suffixes[tok[-1]]))
    return v, seq


def _parse_embedding(text: str, header: str, edge_tag: str, suffixes: dict, path) -> tuple:
    arcs: dict = {}
    rot: dict = {}
    order: list = []
    outer = None
    for no, row in _expect_header(text, header, path):
        tag = row[0]
        if tag == edge_tag:
            if len(row) != 4:
                raise ParseError(f"expected '{edge_tag} <id> <u> <v>'", path, no)
            a = _read_ident(row[1])
            if a in arcs:
                raise ParseError(f"duplicate id {row[1]!r}", path, no)
            arcs[a] = (_read_ident(row[2]), _read_ident(row[3]))
        elif tag == "v":
            v, seq = _parse_rotation(row, no, path, suffixes)
            if v in rot:
                raise ParseError(f"duplicate vertex {row[1]!r}", path, no)
            rot[v] = seq
            order.append(v)
        elif tag == "outer":
            if len(row) != 3 or row[2] not in (LEFT, RIGHT):
                raise ParseError("expected 'outer <id> <L|R>'", path, no)
            outer = (_read_ident(row[1]), row[2])
        else:
            raise ParseError(f"unknown directive {tag!r}", path, no)
    verts = set(order)
    for t, h in arcs.values():
        verts.update((t, h))
    return verts, arcs, rot, outer


def read_pdg(src, *, validate: bool = True) -> PlaneDigraph:
    """Parse PDG text (or a path to a PDG file)."""
    text, path = _read_text(src)
    verts, arcs, rot, outer = _parse_embedding(text, "pdg", "a", {"+": 1, "-": -1}, path)
    try:
        return PlaneDigraph(verts, arcs, rot, outer, validate=validate)
    except EmbeddingError as exc:
        raise ParseError(f"invalid embedding: {exc}", path) from exc


# ----------------------------------------------------------------------
# PSK


def write_psk(S: Skeleton) -> str:
    out = ["psk 1"]
    for e in sorted(S.edges, key=sort_key):
        u, v = S.edges[e]
        out.append(f"e {_ident(e)} {_ident(u)} {_ident(v)}")
    for v in S.vertices:
        toks = " ".join(_ident(half_token(h)) for h in S.rotation[v])
        out.append(f"v {_ident(v)} :" + (f" {toks}" if toks else ""))
    if S.outer is not None:
        e, side = S.outer
        out.append(f"outer {_ident(e)} {side}")
    return "\n".join(out) + "\n"


def read_psk(src, *, validate: bool = True) -> Skeleton:
    text, path = _read_text(src)
    verts, edges, rot, outer = _parse_embedding(text, "psk", "e", {"a": 1, "b": -1}, path)
    try:
        return Skeleton(verts, edges, rot, outer, validate=validate)
    except EmbeddingError as exc:
        raise ParseError(f"invalid embedding: {exc}", path) from exc


# ----------------------------------------------------------------------
# CF


def write_cf(S: Skeleton, h: Mapping) -> str:
    out = ["cf 1"]
    for key in S.corner_keys():
        v, hh = key
        out.append(f"h {_ident(v)} {_ident(half_token(hh))} {int(h[key])}")
    return "\n".join(out) + "\n"


def read_cf(src, S: Skeleton) -> dict:
    """Parse a coating function against skeleton ``S``."""
    text, path = _read_text(src)
    h: dict = {}
    for no, row in _expect_header(text, "cf", path):
        if row[0] != "h":
            raise ParseError(f"unknown directive {row[0]!r}", path, no)
        if len(row) != 4:
            raise ParseError("expected 'h <vertex> <corner-token> <value>'", path, no)
        v = _read_ident(row[1])
        if v not in S.rotation:
            raise ParseError(f"unknown vertex {row[1]!r}", path, no)
        try:
            key = S.corner_from_token(v, row[2])
        except KeyError as exc:
            raise ParseError(str(exc.args[0]), path, no) from exc
        if not _INT.match(row[3]):
            raise ParseError(f"value {row[3]!r} is not an integer", path, no)
        if key in h:
            raise ParseError(f"corner {row[1]} {row[2]} given twice", path, no)
        h[key] = int(row[3])
    missing = [k for k in S.corner_keys() if k not in h]
    if missing:
        v, hh = missing[0]
        raise ParseError(f"{len(missing)} corners have no value, first {v} {half_token(hh)}", path)
    return h


# ----------------------------------------------------------------------
# JSON cycle sets and valuations


def cycles_to_json(cycles: Iterable[DiCycle]) -> str:
    return json.dumps({"cycles": [[str(a) if not isinstance(a, int) else a for a in C.arcs] for C in cycles]}, indent=1)


def _cycle_list(G: PlaneDigraph, raw, path) -> DiCycle:
    if not isinstance(raw, list) or not raw:
        raise ParseError("a cycle is a non-empty list of arc ids", path)
    arcs = []
    for a in raw:
        key = a if a in G.arcs else _read_ident(str(a))
        if key not in G.arcs:
            raise ParseError(f"unknown arc {a!r}", path)
        arcs.append(key)
    try:
        return make_cycle(G, arcs)
    except Exception as exc:  # noqa: BLE001 - reported as a parse failure
        raise ParseError(f"not a directed cycle: {exc}", path) from exc


def _load_json(src) -> tuple:
    text, path = _read_text(src)
    try:
        return json.loads(text), path
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", path, exc.lineno) from exc


def cycles_from_json(G: PlaneDigraph, src) -> list:
    data, path = _load_json(src)
    if not isinstance(data, dict) or "cycles" not in data:
        raise ParseError("expected an object with a 'cycles' list", path)
    return [_cycle_list(G, c, path) for c in data["cycles"]]


def valuation_to_json(V) -> str:
    items = [{"arcs": [a if isinstance(a, int) else str(a) for a in C.arcs], "value": k} for C, k in sorted(V.values.items(), key=lambda t: tuple(sort_key(a) for a in t[0].arcs))]
    return json.dumps({"valuation": items}, indent=1)


def valuation_from_json(G: PlaneDigraph, src):
    from .valuations import Valuation

    data, path = _load_json(src)
    if not isinstance(data, dict) or "valuation" not in data:
        raise ParseError("expected an object with a 'valuation' list", path)
    vals: dict = {}
    for item in data["valuation"]:
        if not isinstance(item, dict) or "arcs" not in item or not isinstance(item.get("value"), int) or item["value"] < 0:
            raise ParseError("each entry needs 'arcs' and a non-negative integer 'value'", path)
        C = _cycle_list(G, item["arcs"], path)
        vals[C] = vals.get(C, 0) + item["value"]
    return Valuation(G, vals)
