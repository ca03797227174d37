"""Nonnegative solutions of 8*a6 + 9*a7 + 10*a8 = N and the degree tables.

The weights 8, 9, 10 are the Milnor numbers of the E6/E7/E8 simple elliptic
singularities, so N is the intersection number of a nef class with c1c2 - c3.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .chern import Hypersurface, ProductP1, c1c2_minus_c3, pair_with, total_chern
from .errors import DegreeOutOfRange, InputError

__all__ = [
    "MULTIPLICITIES",
    "SolutionTriple",
    "enumerate_triples",
    "is_feasible",
    "feasibility_filter",
    "Constraint",
    "TableReport",
    "table_for_space",
    "REFERENCE_HYPERSURFACE_ROWS",
    "REFERENCE_PRODUCT_ROWS",
    "table_discrepancies",
    "format_tables",
    "tables_json",
    "weighted_class_sum",
]

MULTIPLICITIES = (8, 9, 10)
MIN_ELLIPTIC_DEGREE = 3


@dataclass(frozen=True, order=True)
class SolutionTriple:
    a6: int
    a7: int
    a8: int
    feasible: bool = False

    @property
    def values(self) -> tuple[int, int, int]:
        return (self.a6, self.a7, self.a8)

    def __str__(self):
        return f"({self.a6},{self.a7},{self.a8})"


def is_feasible(values) -> bool:
    """Each nonzero entry must be the degree of a union of elliptic curves (>= 3)."""
    return all(v == 0 or v >= MIN_ELLIPTIC_DEGREE for v in values)


def enumerate_triples(N: int) -> list[SolutionTriple]:
    if N < 0:
        raise InputError("N must be nonnegative")
    out = []
    for a6 in range(N // 8 + 1):
        r6 = N - 8 * a6
        for a7 in range(r6 // 9 + 1):
            r7 = r6 - 9 * a7
            if r7 % 10 == 0:
                v = (a6, a7, r7 // 10)
                out.append(SolutionTriple(*v, feasible=is_feasible(v)))
    return sorted(out)


def feasibility_filter(sols) -> list[SolutionTriple]:
    """Mark every triple with its feasibility (all triples are returned)."""
    return [replace(s, feasible=is_feasible(s.values)) for s in sols]


def weighted_class_sum(loci: dict[int, int]) -> int:
    """8*[Y6] + 9*[Y7] + 10*[Y8] evaluated on degrees {6: a6, 7: a7, 8: a8}."""
    return sum((i + 2) * loci.get(i, 0) for i in (6, 7, 8))


@dataclass(frozen=True)
class Constraint:
    label: str
    nef: str
    N: int
    solutions: tuple[SolutionTriple, ...]

    @property
    def solution_set(self) -> set[tuple[int, int, int]]:
        return {s.values for s in self.solutions}

    @property
    def feasible(self) -> tuple[SolutionTriple, ...]:
        return tuple(s for s in self.solutions if s.feasible)


@dataclass(frozen=True)
class TableReport:
    family: str
    d: int
    class_formula: str
    constraints: tuple[Constraint, ...]


def _space(family: str, d: int):
    if family == "hypersurface":
        if not 1 <= d <= 3:
            raise DegreeOutOfRange(f"hypersurface degree must be in 1..3, got {d}")
        return Hypersurface(6, d)
    if family == "product":
        if not 1 <= d <= 4:
            raise DegreeOutOfRange(f"product degree must be in 1..4, got {d}")
        return ProductP1(d)
    raise InputError(f"unknown family {family!r}")


def table_for_space(family: str, d: int) -> TableReport:
    space = _space(family, d)
    cc = c1c2_minus_c3(total_chern(space))

    def constraint(label, nef):
        N = pair_with(cc, nef)
        return Constraint(label, nef, N, tuple(feasibility_filter(enumerate_triples(N))))

    if family == "hypersurface":
        cons = (constraint("(a6,a7,a8)", "H"),)
    else:
        # the 2d(d-5)^2 equation comes from pairing with B, the other from A
        cons = (constraint("(a6,a7,a8)", "B"), constraint("(b6,b7,b8)", "A"))
    return TableReport(family, d, str(cc), cons)


# Rows as printed in the published tables; "many" = more than three solutions.
REFERENCE_HYPERSURFACE_ROWS = {
    1: {(5, 0, 0), (0, 0, 4)},
    2: {(1, 4, 0), (2, 2, 1), (3, 0, 2)},
    3: {(6, 0, 0)},
}
REFERENCE_PRODUCT_ROWS = {
    1: ({(0, 0, 2)}, {(4, 0, 0)}),
    2: ({(0, 4, 0), (1, 2, 1), (2, 0, 2)}, {(0, 0, 2)}),
    3: ({(3, 0, 0)}, {(0, 0, 3)}),
    4: ({(1, 0, 0)}, "many"),
}


def _matches(expected, actual: set) -> bool:
    if expected == "many":
        return len(actual) > 3
    return expected == actual


def _fmt_set(triples) -> str:
    return "{" + ", ".join(f"({a},{b},{c})" for a, b, c in sorted(triples)) + "}"


def table_discrepancies(report: TableReport) -> list[str]:
    """Compare a report with the reference row and explain any mismatch."""
    if report.family == "hypersurface":
        ref = REFERENCE_HYPERSURFACE_ROWS[report.d]
        (c,) = report.constraints
        if ref == c.solution_set:
            return []
        omitted = c.solution_set - ref
        feasible = {s.values for s in c.feasible}
        if ref == feasible and all(not is_feasible(v) for v in omitted):
            return [
                f"d={report.d}: reference row lists only {_fmt_set(ref)}, but N={c.N} also has "
                f"{_fmt_set(omitted)}; the omitted triples are infeasible (an entry of 1 or 2)"
            ]
        return [f"d={report.d}: solution set {_fmt_set(c.solution_set)} does not match the reference row"]

    ref_a, ref_b = REFERENCE_PRODUCT_ROWS[report.d]
    first, second = report.constraints
    if _matches(ref_a, first.solution_set) and _matches(ref_b, second.solution_set):
        return []
    if _matches(ref_a, second.solution_set) and _matches(ref_b, first.solution_set):
        return [
            f"d={report.d}: reference row lists {_fmt_set(ref_a)} under (a6,a7,a8) and "
            f"{_fmt_set(ref_b)} under (b6,b7,b8), but N={first.N} has solutions "
            f"{_fmt_set(first.solution_set)} and N={second.N} has {_fmt_set(second.solution_set)}; "
            "the two columns are swapped in this row"
        ]
    return [f"d={report.d}: solution sets do not match the reference row"]


def _fmt_solutions(sols, many_threshold: int | None = None) -> str:
    if many_threshold is not None and len(sols) > many_threshold:
        return "many"
    if not sols:
        return "none"
    items = [str(s) for s in sols]
    if len(items) == 1:
        return items[0]
    return ", ".join(items[:-1]) + " or " + items[-1]


def format_tables(reports: list[TableReport]) -> str:
    """Plain-text table with one row per degree."""
    if not reports:
        return ""
    family = reports[0].family
    lines = []
    if family == "hypersurface":
        lines.append("d | N | (a6,a7,a8) | feasible")
        for r in reports:
            (c,) = r.constraints
            lines.append(f"{r.d} | {c.N} | {_fmt_solutions(c.solutions)} | {_fmt_solutions(c.feasible)}")
    else:
        lines.append("d | N_a | (a6,a7,a8) | N_b | (b6,b7,b8)")
        for r in reports:
            a, b = r.constraints
            lines.append(
                f"{r.d} | {a.N} | {_fmt_solutions(a.solutions, 3)} | {b.N} | {_fmt_solutions(b.solutions, 3)}"
            )
    notes = [n for r in reports for n in table_discrepancies(r)]
    if notes:
        lines.append("")
        lines.extend(f"note: {n}" for n in notes)
    return "\n".join(lines)


def tables_json(reports: list[TableReport]) -> dict:
    rows = []
    for r in reports:
        rows.append(
            {
                "d": r.d,
                "c1c2_minus_c3": r.class_formula,
                "constraints": [
                    {
                        "label": c.label,
                        "nef": c.nef,
                        "N": c.N,
                        "solutions": [list(s.values) for s in c.solutions],
                        "feasible": [list(s.values) for s in c.feasible],
                    }
                    for c in r.constraints
                ],
                "notes": table_discrepancies(r),
            }
        )
    return {"family": reports[0].family if reports else None, "rows": rows}
