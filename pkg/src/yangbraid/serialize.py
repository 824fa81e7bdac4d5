"""JSON encoding of exact data.  Rationals travel as strings ``"p/q"``."""

from __future__ import annotations

import json
from fractions import Fraction

from .exact import Poly, RootMultiset, rat_str
from .qfield import QFrac
from .qloop import LWeight, QRootMultiset


class SchemaError(ValueError):
    """Malformed input document."""


def parse_rat(x) -> Fraction:
    if isinstance(x, bool) or not isinstance(x, (str, int)):
        raise SchemaError(f"rational must be a string or integer, got {x!r}")
    try:
        return Fraction(x)
    except (ValueError, ZeroDivisionError) as exc:
        raise SchemaError(f"bad rational {x!r}") from exc


def _parse_int(x, what: str) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise SchemaError(f"{what} must be an integer, got {x!r}")
    return x


def multiset_to_json(f: RootMultiset) -> list:
    return [[rat_str(a), m] for a, m in f.items()]


def parse_multiset(obj, *, positive: bool = False) -> RootMultiset:
    if not isinstance(obj, list):
        raise SchemaError(f"root list expected, got {obj!r}")
    entries = []
    for item in obj:
        if not (isinstance(item, list) and len(item) == 2):
            raise SchemaError(f"root entry must be [value, multiplicity], got {item!r}")
        mult = _parse_int(item[1], "multiplicity")
        if positive and mult <= 0:
            raise SchemaError(f"Drinfeld multiplicities must be positive, got {mult}")
        entries.append((parse_rat(item[0]), mult))
    return RootMultiset(entries)


def tuple_to_json(mu) -> dict:
    return {str(i + 1): multiset_to_json(f) for i, f in enumerate(mu)}


def _by_node(obj, n: int) -> dict:
    """Accept ``{"1": ..., "2": ...}`` or a list in node order."""
    if isinstance(obj, list):
        if len(obj) != n:
            raise SchemaError(f"expected {n} node entries, got {len(obj)}")
        return {str(i + 1): x for i, x in enumerate(obj)}
    if not isinstance(obj, dict):
        raise SchemaError("tuple must be an object keyed by node or a list in node order")
    for key in obj:
        if key not in {str(i) for i in range(1, n + 1)}:
            raise SchemaError(f"node key {key!r} outside 1..{n}")
    return obj


def parse_tuple(obj, n: int, *, positive: bool = False) -> tuple:
    """Missing nodes stand for the constant function 1."""
    obj = _by_node(obj, n)
    return tuple(parse_multiset(obj.get(str(i), []), positive=positive) for i in range(1, n + 1))


def qmultiset_to_json(f: QRootMultiset) -> list:
    return [[rat_str(a), m, k] for (a, m), k in f.items()]


def parse_qmultiset(obj, *, positive: bool = False) -> QRootMultiset:
    if not isinstance(obj, list):
        raise SchemaError(f"q-root list expected, got {obj!r}")
    entries = []
    for item in obj:
        if not (isinstance(item, list) and len(item) == 3):
            raise SchemaError(f"q-root entry must be [value, q-exponent, multiplicity], got {item!r}")
        a = parse_rat(item[0])
        if not a:
            raise SchemaError("q-roots must be nonzero")
        mult = _parse_int(item[2], "multiplicity")
        if positive and mult <= 0:
            raise SchemaError(f"Drinfeld multiplicities must be positive, got {mult}")
        entries.append(((a, _parse_int(item[1], "q-exponent")), mult))
    return QRootMultiset(entries)


def parse_qtuple(obj, n: int) -> tuple:
    obj = _by_node(obj, n)
    return tuple(parse_qmultiset(obj.get(str(i), []), positive=True) for i in range(1, n + 1))


def lweight_to_json(psi) -> dict:
    return {
        str(i + 1): {"weight": c.weight, "roots": qmultiset_to_json(c.roots)}
        for i, c in enumerate(psi)
    }


def parse_lweight(obj, n: int) -> tuple:
    obj = _by_node(obj, n)
    out = []
    for i in range(1, n + 1):
        comp = obj.get(str(i), {"weight": 0, "roots": []})
        if not isinstance(comp, dict) or set(comp) != {"weight", "roots"}:
            raise SchemaError(f"l-weight component {i} needs exactly 'weight' and 'roots'")
        out.append(LWeight(_parse_int(comp["weight"], "weight"), parse_qmultiset(comp["roots"])))
    return tuple(out)


def qfrac_to_json(x) -> dict:
    return {"num": poly_to_json(x.num), "den": poly_to_json(x.den)}


def parse_qfrac(obj):
    try:
        num = Poly(parse_rat(c) for c in obj["num"])
        den = Poly(parse_rat(c) for c in obj["den"])
        return QFrac(num, den)
    except (KeyError, TypeError, ZeroDivisionError) as exc:
        raise SchemaError(f"bad element of Q(q): {obj!r}") from exc


def poly_to_json(p: Poly) -> list:
    """Coefficients, constant term first."""
    return [rat_str(c) for c in p.coeffs]


def parse_poly(obj) -> Poly:
    if not isinstance(obj, list):
        raise SchemaError(f"coefficient list expected, got {obj!r}")
    return Poly(parse_rat(c) for c in obj)


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)
