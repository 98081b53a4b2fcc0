"""Reading and writing elements in the JSON word-basis format."""

from __future__ import annotations

import json

from pathlib import Path

from yokonuma.combi.permutation import Permutation
from yokonuma.errors import SchemaError
from yokonuma.fields import Cyclotomic, to_rational
from yokonuma.kernel.context import AlgebraContext
from yokonuma.kernel.element import Element
from yokonuma.kernel.words import Word
from yokonuma.utils.pylogger import get_pylogger

log = get_pylogger(__name__)


def save_element(x: Element, path: str | Path) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w") as file:
        json.dump(x.to_json(), file, indent=2)
    log.info(f"Saved element with {len(x)} terms to {path}")


def load_element(path: str | Path, context: AlgebraContext) -> Element:
    path = Path(path)
    try:
        with open(path, "r") as file:
            data = json.load(file)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON ({exc.msg})", f"{path}:{exc.lineno}") from exc
    return element_from_json(data, context)


def element_from_json(data, context: AlgebraContext) -> Element:
    """Validates ``data`` against the element schema of ``context``."""
    if not isinstance(data, dict):
        raise SchemaError("expected an object", "$")
    for key in ("r", "n", "d"):
        if key not in data:
            raise SchemaError("missing key", f"$.{key}")
        if data[key] != getattr(context, key):
            raise SchemaError(f"expected {getattr(context, key)}, got {data[key]!r}", f"$.{key}")
    terms = data.get("terms")
    if not isinstance(terms, list):
        raise SchemaError("expected a list of terms", "$.terms")
    out: dict[Word, Cyclotomic] = {}
    for k, term in enumerate(terms):
        where = f"terms[{k}]"
        if not isinstance(term, dict):
            raise SchemaError("expected an object", where)
        word = _parse_word(term, context, where)
        if word in out:
            raise SchemaError("repeated word", where)
        coeff = _parse_coeff(term.get("coeff"), context, f"{where}.coeff")
        if coeff:
            out[word] = coeff
    return context.element(out)


def _exponents(values, bound: int, n: int, where: str) -> tuple[int, ...]:
    if not isinstance(values, list) or len(values) != n:
        raise SchemaError(f"expected a list of {n} integers", where)
    for i, x in enumerate(values):
        if not isinstance(x, int) or isinstance(x, bool) or not 0 <= x < bound:
            raise SchemaError(f"expected an integer in [0, {bound}), got {x!r}", f"{where}[{i}]")
    return tuple(values)


def _parse_word(term: dict, context: AlgebraContext, where: str) -> Word:
    n = context.n
    alpha = _exponents(term.get("alpha"), context.d, n, f"{where}.alpha")
    beta = _exponents(term.get("beta"), context.r, n, f"{where}.beta")
    images = term.get("w")
    if not isinstance(images, list) or sorted(images) != list(range(1, n + 1)):
        raise SchemaError(f"expected a permutation of 1..{n}", f"{where}.w")
    return Word(alpha, beta, Permutation(images))


def _parse_coeff(value, context: AlgebraContext, where: str) -> Cyclotomic:
    if isinstance(value, str):
        try:
            return Cyclotomic.from_rational(to_rational(value), context.order)
        except (ValueError, ZeroDivisionError) as exc:
            raise SchemaError(str(exc), where) from exc
    if not isinstance(value, dict):
        raise SchemaError("expected a coefficient object or a rational string", where)
    if value.get("order") != context.order:
        raise SchemaError(f"expected order {context.order}, got {value.get('order')!r}",
                          f"{where}.order")
    try:
        return Cyclotomic.from_json(value)
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        raise SchemaError(str(exc), f"{where}.coeffs") from exc
