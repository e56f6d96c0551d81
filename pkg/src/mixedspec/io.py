"""Plain-text mixed graph documents.

::

    mg 1
    n 4
    # comment
    e 0 1        edge {0, 1}
    e 1 3 2      edge {1, 3} with multiplicity 2
    a 2 0        arc 2 -> 0
    le 2 2       two loops at 2
    la 0         directed loop at 0

Repeated statements accumulate.  :func:`serialize` writes the canonical form:
sections ``e``, ``le``, ``a``, ``la`` in that order, entries sorted, the
multiplicity only when it exceeds one.
"""
from __future__ import annotations

from collections import Counter
from pathlib import Path

from .graph import MixedGraph

FORMAT_VERSION = 1

_ARITY = {"e": 2, "a": 2, "le": 1, "la": 1}


class GraphParseError(ValueError):
    def __init__(self, line: int, column: int, message: str):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column
        self.message = message


def _tokens(line: str) -> list[tuple[int, str]]:
    """``(column, token)`` pairs, columns 1-based, comments stripped."""
    out = []
    col = 0
    body = line.split("#", 1)[0]
    while col < len(body):
        if body[col].isspace():
            col += 1
            continue
        start = col
        while col < len(body) and not body[col].isspace():
            col += 1
        out.append((start + 1, body[start:col]))
    return out


def _int(tok: tuple[int, str], lineno: int, what: str) -> int:
    col, text = tok
    try:
        return int(text)
    except ValueError:
        raise GraphParseError(lineno, col, f"expected integer {what}, got {text!r}") from None


def parse(text: str) -> MixedGraph:
    """Read a document; raises :class:`GraphParseError` with the offending position."""
    header_seen = False
    n = None
    maps = {k: Counter() for k in _ARITY}
    for lineno, line in enumerate(text.splitlines(), 1):
        toks = _tokens(line)
        if not toks:
            continue
        col, word = toks[0]
        if not header_seen:
            if word != "mg" or len(toks) != 2:
                raise GraphParseError(lineno, col, "document must start with 'mg <version>'")
            version = _int(toks[1], lineno, "format version")
            if version != FORMAT_VERSION:
                raise GraphParseError(lineno, toks[1][0], f"unsupported format version {version}")
            header_seen = True
            continue
        if word == "n":
            if n is not None:
                raise GraphParseError(lineno, col, "vertex count given twice")
            if len(toks) != 2:
                raise GraphParseError(lineno, col, "expected 'n <count>'")
            n = _int(toks[1], lineno, "vertex count")
            if n < 0:
                raise GraphParseError(lineno, toks[1][0], "vertex count must be non-negative")
            continue
        if word not in _ARITY:
            raise GraphParseError(lineno, col, f"unknown statement {word!r}")
        if n is None:
            raise GraphParseError(lineno, col, "'n <count>' must precede graph statements")
        arity = _ARITY[word]
        if len(toks) not in (arity + 1, arity + 2):
            raise GraphParseError(lineno, col, f"'{word}' takes {arity} vertex id(s) and an optional multiplicity")
        ids = []
        for tok in toks[1:arity + 1]:
            v = _int(tok, lineno, "vertex id")
            if not 0 <= v < n:
                raise GraphParseError(lineno, tok[0], f"vertex id {v} out of range for n={n}")
            ids.append(v)
        mult = 1
        if len(toks) == arity + 2:
            mult = _int(toks[-1], lineno, "multiplicity")
            if mult < 0:
                raise GraphParseError(lineno, toks[-1][0], "multiplicity must be non-negative")
        key = ids[0] if arity == 1 else tuple(ids)
        if word == "e" and ids[0] == ids[1]:
            maps["le"][ids[0]] += mult
        elif word == "a" and ids[0] == ids[1]:
            maps["la"][ids[0]] += mult
        elif word == "e":
            maps["e"][(min(ids), max(ids))] += mult
        else:
            maps[word][key] += mult
    if not header_seen:
        raise GraphParseError(1, 1, "empty document")
    if n is None:
        raise GraphParseError(lineno, 1, "missing 'n <count>'")
    return MixedGraph(n, maps["e"], maps["le"], maps["a"], maps["la"])


def serialize(g: MixedGraph) -> str:
    """Canonical document for ``g``; ``parse(serialize(g)) == g``."""
    lines = [f"mg {FORMAT_VERSION}", f"n {g.n}"]

    def emit(tag, key, m):
        ids = " ".join(map(str, key)) if isinstance(key, tuple) else str(key)
        lines.append(f"{tag} {ids}" + (f" {m}" if m > 1 else ""))

    for tag, mapping in (("e", g.edges), ("le", g.loops), ("a", g.arcs), ("la", g.dloops)):
        for key in sorted(mapping):
            emit(tag, key, mapping[key])
    return "\n".join(lines) + "\n"


def load(path: str | Path) -> MixedGraph:
    return parse(Path(path).read_text())


def dump(g: MixedGraph, path: str | Path) -> None:
    Path(path).write_text(serialize(g))
