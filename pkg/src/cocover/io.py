"""JSON (de)serialization of coalgebras, algebras and pipeline results.

Scalars are written as decimal strings ("3", "-1/2") so files are exact and
diff cleanly; structure constants are sorted before writing.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .algebra import Algebra, make_algebra
from .coalgebra import Coalgebra, make_coalgebra
from .errors import ParseError
from .field import FieldSpec
from .linalg import Mat, Subspace


def scalar_str(x) -> str:
    return str(Fraction(x))


def matrix_json(m: Mat) -> list:
    return [[scalar_str(x) for x in row] for row in m.rows]


def basis_json(s: Subspace) -> list:
    return [[scalar_str(x) for x in v] for v in s.vectors()]


def coalgebra_to_json(c: Coalgebra) -> dict:
    delta = sorted((x, a, b, v) for x, terms in enumerate(c.delta) for a, b, v in terms)
    return {
        "field": c.field.name,
        "labels": list(c.labels),
        "delta": [[x, a, b, scalar_str(v)] for x, a, b, v in delta],
        "eps": [scalar_str(e) for e in c.eps],
    }


def algebra_to_json(a: Algebra) -> dict:
    mult = sorted((i, j, k, v) for (i, j), out in a.mult.items() for k, v in out.items() if v)
    return {
        "field": a.field.name,
        "labels": list(a.labels),
        "mult": [[i, j, k, scalar_str(v)] for i, j, k, v in mult],
        "unit": [scalar_str(x) for x in a.unit],
    }


def _require(obj, key, kind):
    if not isinstance(obj, dict) or key not in obj:
        raise ParseError(f"{kind} JSON is missing {key!r}")
    return obj[key]


def _triples(raw, n: int, what: str):
    out = []
    for entry in raw:
        if not (isinstance(entry, list) and len(entry) == 4):
            raise ParseError(f"malformed {what} entry {entry!r}")
        *idx, coeff = entry
        if not all(isinstance(i, int) and 0 <= i < n for i in idx):
            raise ParseError(f"{what} index out of range in {entry!r}")
        try:
            coeff = Fraction(str(coeff))
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"bad coefficient {coeff!r}") from exc
        out.append((*idx, coeff))
    return out


def _field_of(obj, kind, override):
    if override is not None:
        return override
    return FieldSpec.parse(str(_require(obj, "field", kind)))


def coalgebra_from_json(obj, field: FieldSpec | None = None) -> Coalgebra:
    f = _field_of(obj, "coalgebra", field)
    labels = [str(x) for x in _require(obj, "labels", "coalgebra")]
    triples = _triples(_require(obj, "delta", "coalgebra"), len(labels), "delta")
    eps = _require(obj, "eps", "coalgebra")
    if len(eps) != len(labels):
        raise ParseError("eps length differs from the number of labels")
    return make_coalgebra(f, labels, triples, [Fraction(str(e)) for e in eps])


def algebra_from_json(obj, field: FieldSpec | None = None) -> Algebra:
    f = _field_of(obj, "algebra", field)
    labels = [str(x) for x in _require(obj, "labels", "algebra")]
    triples = _triples(_require(obj, "mult", "algebra"), len(labels), "mult")
    unit = _require(obj, "unit", "algebra")
    if len(unit) != len(labels):
        raise ParseError("unit length differs from the number of labels")
    return make_algebra(f, labels, triples, [Fraction(str(e)) for e in unit])


def _render(obj, depth: int) -> str:
    pad, inner = "  " * depth, "  " * (depth + 1)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{inner}{json.dumps(str(k))}: {_render(obj[k], depth + 1)}"
                 for k in sorted(obj, key=str)]
        return "{\n" + ",\n".join(items) + "\n" + pad + "}"
    if isinstance(obj, (list, tuple)):
        if all(not isinstance(x, (dict, list, tuple)) for x in obj):
            return json.dumps(list(obj), ensure_ascii=False)
        return "[\n" + ",\n".join(inner + _render(x, depth + 1) for x in obj) + "\n" + pad + "]"
    return json.dumps(obj, ensure_ascii=False)


def dumps(obj) -> str:
    """Canonical text: sorted keys, scalar lists on one line, trailing newline."""
    return _render(obj, 0) + "\n"


def loads(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from exc
