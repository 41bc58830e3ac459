"""Canonical serialization of ideals and Betti tables.

Ideal JSON schema (version 1): a ``universe`` header carrying the grid
bounds ``m``, ``n``, ``family_sizes`` and the ordered variable list, plus a
``generators`` array of exponent maps keyed by the canonical variable text
``x[i,j]`` / ``Y[i,j]``. Generators are emitted sorted descending under the
diagonal-lex order, so serialized output is byte-identical across runs.

Betti tables serialize as CSV rows ``i,j,value``, as JSON, as TeX, and as a
text pretty print with row index j - i in the style of computer-algebra
Betti displays.
"""

from __future__ import annotations

import csv
import io
import json
from typing import Any

from .ideals import MonomialIdeal
from .linkage import BettiTable
from .monomial import Monomial, Universe, Variable, parse_variable
from .orders import DiagLexOrder

SCHEMA_VERSION = 1


class SchemaError(ValueError):
    """A serialization schema violation, carrying the JSON location."""

    def __init__(self, location: str, message: str):
        super().__init__(f"{location}: {message}")
        self.location = location


def sorted_generators(W: MonomialIdeal) -> list[Monomial]:
    """Generators sorted descending under the diagonal-lex order."""
    key = DiagLexOrder().sort_key()
    return sorted(W.gens, key=key, reverse=True)


# -- ideal formats ---------------------------------------------------------


def ideal_to_dict(W: MonomialIdeal) -> dict:
    u = W.universe
    return {
        "schema_version": SCHEMA_VERSION,
        "universe": {
            "m": u.m,
            "n": u.n,
            "family_sizes": {"X": [u.m, u.n], "Y": [u.y_rows, u.y_cols]},
            "variables": [str(v) for v in u.variables],
        },
        "generators": [
            {str(v): e for v, e in g.items()} for g in sorted_generators(W)
        ],
    }


def ideal_to_json(W: MonomialIdeal) -> str:
    return json.dumps(ideal_to_dict(W), indent=2, sort_keys=True) + "\n"


def ideal_from_dict(data: Any) -> MonomialIdeal:
    if not isinstance(data, dict):
        raise SchemaError("$", "expected an object")
    version = data.get("schema_version")
    if version != SCHEMA_VERSION:
        raise SchemaError("schema_version", f"expected {SCHEMA_VERSION}, got {version!r}")
    uni = data.get("universe")
    if not isinstance(uni, dict):
        raise SchemaError("universe", "expected an object")
    for field_name in ("m", "n", "family_sizes", "variables"):
        if field_name not in uni:
            raise SchemaError(f"universe.{field_name}", "missing")
    sizes = uni["family_sizes"]
    if not isinstance(sizes, dict) or "X" not in sizes or "Y" not in sizes:
        raise SchemaError("universe.family_sizes", "expected X and Y entries")
    try:
        y_rows, y_cols = (int(v) for v in sizes["Y"])
    except (TypeError, ValueError):
        raise SchemaError("universe.family_sizes.Y", "expected a pair of integers")
    if not isinstance(uni["variables"], list):
        raise SchemaError("universe.variables", "expected a list")
    variables = []
    for k, text in enumerate(uni["variables"]):
        try:
            variables.append(parse_variable(text))
        except (TypeError, ValueError) as e:
            raise SchemaError(f"universe.variables[{k}]", str(e))
    try:
        universe = Universe(int(uni["m"]), int(uni["n"]), y_rows, y_cols, tuple(variables))
    except (TypeError, ValueError) as e:
        raise SchemaError("universe", str(e))
    gens_data = data.get("generators")
    if not isinstance(gens_data, list):
        raise SchemaError("generators", "expected a list")
    gens = []
    for k, entry in enumerate(gens_data):
        if not isinstance(entry, dict):
            raise SchemaError(f"generators[{k}]", "expected an exponent map")
        exps: dict[Variable, int] = {}
        for var_text, e in entry.items():
            loc = f"generators[{k}].{var_text}"
            try:
                var = parse_variable(var_text)
            except ValueError as err:
                raise SchemaError(loc, str(err))
            if not isinstance(e, int) or e <= 0:
                raise SchemaError(loc, f"exponent must be a positive integer, got {e!r}")
            if var not in universe:
                raise SchemaError(loc, "variable not in the universe")
            exps[var] = e
        gens.append(Monomial(exps))
    from .ideals import ideal as make_ideal

    return make_ideal(universe, gens)


def ideal_from_json(text: str) -> MonomialIdeal:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise SchemaError("$", f"invalid JSON: {e}")
    return ideal_from_dict(data)


def ideal_to_text(W: MonomialIdeal) -> str:
    lines = [str(g) for g in sorted_generators(W)]
    return "\n".join(lines) + "\n" if lines else "0\n"


def ideal_to_csv(W: MonomialIdeal) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["generator", "degree"])
    for g in sorted_generators(W):
        writer.writerow([str(g), g.degree()])
    return out.getvalue()


def ideal_to_tex(W: MonomialIdeal) -> str:
    gens = sorted_generators(W)
    if not gens:
        return "$(0)$\n"
    return "$(" + ",\\; ".join(g.tex() for g in gens) + ")$\n"


# -- Betti table formats -----------------------------------------------------


def betti_to_csv(table: BettiTable) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["i", "j", "value"])
    for (i, j), v in sorted(table.entries.items()):
        writer.writerow([i, j, v])
    return out.getvalue()


def betti_to_dict(table: BettiTable) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "d": table.d,
        "g": table.g,
        "entries": [
            {"i": i, "j": j, "value": v} for (i, j), v in sorted(table.entries.items())
        ],
    }


def betti_to_json(table: BettiTable) -> str:
    return json.dumps(betti_to_dict(table), indent=2, sort_keys=True) + "\n"


def _betti_grid(table: BettiTable) -> tuple[list[int], list[int], dict[tuple[int, int], int]]:
    """Rows indexed by j - i, columns by i, including the implicit unit."""
    cells = {(0, 0): 1}
    cells.update(table.entries)
    cols = sorted({i for i, _ in cells})
    rows = sorted({j - i for i, j in cells})
    grid = {(j - i, i): v for (i, j), v in cells.items()}
    return rows, cols, grid


def betti_to_text(table: BettiTable) -> str:
    """Pretty print with row index j - i, '-' marking zero entries."""
    rows, cols, grid = _betti_grid(table)
    rows = list(range(0, max(rows) + 1))
    width = max(
        [len(str(v)) for v in grid.values()] + [len(str(c)) for c in cols] + [1]
    )
    header = "    " + " ".join(f"{c:>{width}}" for c in cols)
    lines = [header]
    for rrow in rows:
        cells = [f"{grid.get((rrow, c), '-'):>{width}}" for c in cols]
        lines.append(f"{rrow:>3} " + " ".join(cells))
    return "\n".join(lines) + "\n"


def betti_to_tex(table: BettiTable) -> str:
    rows, cols, grid = _betti_grid(table)
    rows = list(range(0, max(rows) + 1))
    head = " & ".join(str(c) for c in cols)
    lines = [
        "\\begin{tabular}{l" + "l" * len(cols) + "}",
        "\\hline",
        f" & {head} \\\\ \\hline",
    ]
    for rrow in rows:
        cells = " & ".join(str(grid.get((rrow, c), "-")) for c in cols)
        lines.append(f"{rrow} & {cells} \\\\ \\hline")
    lines.append("\\end{tabular}")
    return "\n".join(lines) + "\n"
