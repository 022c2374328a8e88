"""Loading automorphism specs from their JSON wire format.

A spec file is one JSON object with a ``kind`` field:

  {"kind": "homogeneous", "variant": "k", "k": 2}
      variants: k | kstar | infty | canonical | trivial
  {"kind": "methodA", "Iplus": {"cofinite": [1]}, "Iminus": [], "d": {"1": "e2e3e4"}}
      index sets are either a list (finite) or {"cofinite": [excluded]}
  {"kind": "methodB", "k": 1, "t": 1, "lambda": "2", "lambdas": {"7": "3"}}
      "lambda" is the default tail scalar, "lambdas" optional overrides
  {"kind": "methodC"}
  {"kind": "custom", "images": {"1": "-e1+e2e3e4"}, "defaultSign": 1}

Elements and scalars are written in the shared element grammar.  Schema
problems raise `SpecFileError`; construction-level validation errors pass
through unchanged.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

from .algebra import parse_element
from .automorphisms import AutomorphismSpec, CustomFinite, SignRule
from .constructions import (
    HomogeneousKind,
    IndexSet,
    MethodAData,
    MethodBData,
    homogeneous,
    method_a,
    method_b,
    method_c,
)


class SpecFileError(ValueError):
    """The JSON object does not match the spec-file schema."""


def _expect_int(obj: dict, key: str, default=None) -> int:
    if key not in obj:
        if default is not None:
            return default
        raise SpecFileError(f"missing field {key!r}")
    value = obj[key]
    if not isinstance(value, int) or isinstance(value, bool):
        raise SpecFileError(f"field {key!r} must be an integer, got {value!r}")
    return value


def _parse_scalar(value, context: str) -> Fraction:
    if isinstance(value, bool):
        raise SpecFileError(f"{context}: expected a rational, got {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise SpecFileError(f"{context}: bad rational {value!r}: {exc}") from None
    raise SpecFileError(f"{context}: expected a rational, got {value!r}")


def _parse_index_set(value, context: str) -> IndexSet:
    if isinstance(value, list):
        return IndexSet.of(_int_list(value, context))
    if isinstance(value, dict) and set(value) == {"cofinite"}:
        return IndexSet.all_but(_int_list(value["cofinite"], context))
    raise SpecFileError(
        f"{context}: expected a list of indices or {{\"cofinite\": [...]}}, got {value!r}"
    )


def _int_list(value, context: str) -> list[int]:
    if not isinstance(value, list) or any(
        not isinstance(i, int) or isinstance(i, bool) for i in value
    ):
        raise SpecFileError(f"{context}: expected a list of integers, got {value!r}")
    return value


def _parse_index_key(key: str, context: str) -> int:
    try:
        idx = int(key)
    except ValueError:
        raise SpecFileError(f"{context}: key {key!r} is not an index") from None
    if idx < 1:
        raise SpecFileError(f"{context}: index must be >= 1, got {idx}")
    return idx


def spec_from_obj(obj) -> AutomorphismSpec:
    """Build a spec from a decoded JSON object."""
    if not isinstance(obj, dict):
        raise SpecFileError(f"spec must be a JSON object, got {type(obj).__name__}")
    kind = obj.get("kind")
    if kind == "homogeneous":
        variant = obj.get("variant")
        if not isinstance(variant, str):
            raise SpecFileError("homogeneous spec needs a string 'variant'")
        return homogeneous(HomogeneousKind(variant, _expect_int(obj, "k", default=0)))
    if kind == "methodA":
        iplus = _parse_index_set(obj.get("Iplus"), "Iplus")
        iminus = _parse_index_set(obj.get("Iminus"), "Iminus")
        raw = obj.get("d")
        if not isinstance(raw, dict):
            raise SpecFileError("methodA spec needs 'd': an object of index -> element")
        d = {}
        for key, text in raw.items():
            idx = _parse_index_key(key, "d")
            if not isinstance(text, str):
                raise SpecFileError(f"d[{key}]: expected an element string, got {text!r}")
            d[idx] = parse_element(text)
        return method_a(MethodAData(iplus, iminus, d))
    if kind == "methodB":
        k = _expect_int(obj, "k")
        t = _expect_int(obj, "t")
        lam = _parse_scalar(obj.get("lambda", 1), "lambda")
        overrides = {}
        for key, value in (obj.get("lambdas") or {}).items():
            idx = _parse_index_key(key, "lambdas")
            overrides[idx] = _parse_scalar(value, f"lambdas[{key}]")
        return method_b(MethodBData(k, t, lam, overrides))
    if kind == "methodC":
        return method_c()
    if kind == "custom":
        raw = obj.get("images")
        if not isinstance(raw, dict):
            raise SpecFileError("custom spec needs 'images': an object of index -> element")
        images = []
        for key, text in raw.items():
            idx = _parse_index_key(key, "images")
            if not isinstance(text, str):
                raise SpecFileError(f"images[{key}]: expected an element string, got {text!r}")
            images.append((idx, parse_element(text)))
        default_sign = _expect_int(obj, "defaultSign", default=1)
        if default_sign not in (1, -1):
            raise SpecFileError(f"defaultSign must be +1 or -1, got {default_sign}")
        return AutomorphismSpec(
            CustomFinite(tuple(images), SignRule(default_sign, default_sign))
        )
    raise SpecFileError(
        f"unknown spec kind {kind!r}; expected homogeneous, methodA, methodB, methodC or custom"
    )


def load_spec(source: str | Path) -> AutomorphismSpec:
    """Load a spec from a JSON file path, or from inline JSON text when the
    argument starts with a brace."""
    text = str(source)
    if text.lstrip().startswith("{"):
        payload = text
        origin = "<inline>"
    else:
        payload = Path(source).read_text()
        origin = text
    try:
        obj = json.loads(payload)
    except json.JSONDecodeError as exc:
        raise SpecFileError(
            f"{origin}: invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}"
        ) from None
    return spec_from_obj(obj)
