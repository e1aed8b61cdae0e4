"""Reading ideals and triangulations from text or JSON, and the bundled fixtures.

Text ideals look like (``;`` may stand in for a newline)::

    vars: x y z
    x^2*z^3
    x3 z2
    x*y*z
    y^2

JSON ideals are ``{"vars": [...], "generators": [[...], ...]}``.  A
triangulation is a JSON list of facets with 1-based vertices, or
``{"facets": [...]}``.
"""

from __future__ import annotations

import json
import logging
import re
from importlib import resources
from pathlib import Path

from .errors import ParseError
from .monomial import DeformationMap, MonomialIdeal, minimalize_report

log = logging.getLogger(__name__)


def _parse_monomial(line: str, var_names: list[str]) -> tuple:
    exps = [0] * len(var_names)
    tokens = [t for t in re.split(r"[\s*]+", line.strip()) if t]
    if tokens == ["1"]:
        return tuple(exps)
    by_len = sorted(var_names, key=len, reverse=True)
    for tok in tokens:
        name, rest = None, None
        if "^" in tok:
            name, _, rest = tok.partition("^")
            if not rest.isdigit():
                raise ParseError(f"bad exponent in {tok!r}")
        else:
            for v in by_len:
                if tok.startswith(v) and (tok[len(v):] == "" or tok[len(v):].isdigit()):
                    name, rest = v, tok[len(v):]
                    break
        if name not in var_names:
            raise ParseError(f"unknown variable in {tok!r}")
        exps[var_names.index(name)] += int(rest) if rest else 1
    return tuple(exps)


def parse_ideal_text(text: str):
    """Parse the text format; returns ``(ideal, dropped_generators)``."""
    var_names = None
    mons = []
    for raw in text.replace(";", "\n").splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.lower().startswith("vars:"):
            var_names = line.split(":", 1)[1].replace(",", " ").split()
            if not var_names or len(set(var_names)) != len(var_names):
                raise ParseError(f"bad variable header {raw!r}")
            continue
        if var_names is None:
            raise ParseError("missing 'vars:' header before the first monomial")
        mons.append(_parse_monomial(line, var_names))
    if var_names is None:
        raise ParseError("missing 'vars:' header")
    return _finish(mons, var_names)


def parse_ideal_json(data) -> tuple[MonomialIdeal, list]:
    if isinstance(data, str):
        try:
            data = json.loads(data)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc}") from None
    if not isinstance(data, dict) or "vars" not in data or "generators" not in data:
        raise ParseError("ideal JSON needs 'vars' and 'generators'")
    var_names = [str(v) for v in data["vars"]]
    gens = data["generators"]
    for g in gens:
        if (not isinstance(g, list) or len(g) != len(var_names)
                or any(not isinstance(e, int) or isinstance(e, bool) or e < 0 for e in g)):
            raise ParseError(f"bad generator {g!r}")
    return _finish([tuple(g) for g in gens], var_names)


def _finish(mons, var_names):
    if not mons:
        return MonomialIdeal(tuple(var_names), ()), []
    ideal, dropped = minimalize_report(mons, var_names)
    for m in dropped:
        log.warning("dropped non-minimal generator %s", ideal.format(m))
    return ideal, dropped


def parse_triangulation(data) -> list[tuple]:
    """Facets as sorted 0-based tuples."""
    if isinstance(data, str):
        try:
            data = json.loads(data)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc}") from None
    if isinstance(data, dict):
        data = data.get("facets")
    if not isinstance(data, list) or not data:
        raise ParseError("triangulation must be a non-empty list of facets")
    out = []
    for f in data:
        if not isinstance(f, list) or any(not isinstance(v, int) or v < 1 for v in f):
            raise ParseError(f"bad facet {f!r} (vertices are 1-based integers)")
        out.append(tuple(sorted(v - 1 for v in f)))
    return sorted(set(out))


def is_triangulation_data(data) -> bool:
    return isinstance(data, list) or (isinstance(data, dict) and "facets" in data)


def read_input(path_or_text: str):
    """Load a file (or packaged fixture name).  Returns ``("ideal", (ideal, dropped))``
    or ``("triangulation", facets)``."""
    path = resolve_path(path_or_text)
    text = path.read_text() if path is not None else path_or_text
    stripped = text.lstrip()
    if stripped.startswith("{") or stripped.startswith("["):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc}") from None
        if is_triangulation_data(data):
            return "triangulation", parse_triangulation(data)
        return "ideal", parse_ideal_json(data)
    return "ideal", parse_ideal_text(text)


def resolve_path(name: str) -> Path | None:
    p = Path(name)
    if p.is_file():
        return p
    fx = fixture_path(p.name)
    if fx is not None:
        return fx
    if "\n" in name or ":" in name:
        return None
    raise ParseError(f"no such file or fixture: {name}")


def fixture_path(name: str) -> Path | None:
    base = resources.files("monores") / "fixtures"
    for cand in (name, name + ".json"):
        p = base / cand
        if p.is_file():
            return Path(str(p))
    return None


def fixture_names() -> list[str]:
    base = resources.files("monores") / "fixtures"
    return sorted(p.name for p in base.iterdir() if p.name.endswith(".json"))


def load_fixture(name: str):
    """Parsed packaged fixture: an ideal, a triangulation, or a deformation."""
    path = fixture_path(name)
    if path is None:
        raise ParseError(f"unknown fixture {name}")
    data = json.loads(path.read_text())
    if is_triangulation_data(data):
        return parse_triangulation(data)
    if "deformed" in data:
        return deformation_from_data(data)
    return parse_ideal_json(data)[0]


def deformation_from_data(data: dict) -> DeformationMap:
    """``{"vars", "original", "deformed"}`` with the two generator lists in matching order."""
    try:
        return DeformationMap.from_lists([tuple(g) for g in data["original"]],
                                         [tuple(g) for g in data["deformed"]], data["vars"])
    except KeyError as exc:
        raise ParseError(f"deformation JSON is missing {exc}") from None
