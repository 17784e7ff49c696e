"""Cross-checks closed forms against the scan oracle over parameter grids.

Point evaluations are pure and independent, so sweeps may run them in a
process pool; results are aggregated in enumeration order either way, and
two runs of the same spec produce byte-identical reports.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .errors import (
    FrobkitError,
    InvalidInputError,
    NoClosedFormCaseError,
    OutOfValidityRangeError,
    ResourceLimitError,
    UnsupportedCaseError,
)
from .families import (
    ShiftedGeometricQuad,
    ShiftedGeometricTriple,
    abg_decompose,
    closed_form_case,
    g_p_closed_quad,
    g_p_closed_triple,
    g_p_two_gens,
    make_quad,
    make_triple,
    qr_decompose,
)
from .semigroup import GeneratorTuple, p_frobenius_scan

#: Tuples whose minimum generator exceeds this are skipped to keep sweeps cheap.
DEFAULT_MIN_GEN_CAP = 20000


@dataclass(frozen=True)
class SweepSpec:
    """Inclusive parameter ranges plus sampling policy for a verification sweep."""

    a_range: tuple[int, int]
    b_range: tuple[int, int]
    c_range: tuple[int, int]
    n_range: tuple[int, int]
    vars: int = 3
    p_policy: str | int = "theorem-range"
    sample_seed: int = 0
    sample_limit: int | None = None
    min_gen_cap: int = DEFAULT_MIN_GEN_CAP

    def __post_init__(self) -> None:
        for name, (lo, hi) in (
            ("a_range", self.a_range),
            ("b_range", self.b_range),
            ("c_range", self.c_range),
            ("n_range", self.n_range),
        ):
            if lo > hi:
                raise InvalidInputError(f"{name} is empty: {lo}..{hi}")
        if self.b_range[0] < 2:
            raise InvalidInputError(
                f"b_range lower bound must be >= 2, got {self.b_range[0]}"
            )
        if self.a_range[0] < 1:
            raise InvalidInputError(
                f"a_range lower bound must be >= 1, got {self.a_range[0]}"
            )
        if self.n_range[0] < 1:
            raise InvalidInputError(
                f"n_range lower bound must be >= 1, got {self.n_range[0]}"
            )
        if self.vars not in (3, 4):
            raise InvalidInputError(f"vars must be 3 or 4, got {self.vars}")
        if isinstance(self.p_policy, str) and self.p_policy != "theorem-range":
            raise InvalidInputError(
                f"p_policy must be 'theorem-range' or an integer, got {self.p_policy!r}"
            )
        if isinstance(self.p_policy, int) and self.p_policy < 0:
            raise InvalidInputError(f"fixed p_policy must be >= 0, got {self.p_policy}")


@dataclass(frozen=True)
class PointResult:
    """One closed-form-vs-oracle comparison."""

    a: int
    b: int
    c: int
    n: int
    vars: int
    p: int
    closed: int | None
    closed_error: str | None
    oracle: int | None
    oracle_error: str | None
    case: str | None
    match: bool


@dataclass(frozen=True)
class SweepSummary:
    total: int
    matched: int
    mismatched: int
    skipped_gcd: int
    no_case: int
    out_of_range: int
    skipped_large: int = 0
    resource_limit: int = 0


@dataclass(frozen=True)
class VerificationReport:
    spec: SweepSpec
    points: tuple[PointResult, ...]
    summary: SweepSummary

    def passed(self) -> bool:
        return self.summary.mismatched == 0

    def to_json_obj(self) -> dict:
        """Schema-stable dict; all numbers rendered as decimal strings."""
        return {
            "summary": {
                "total": self.summary.total,
                "matched": self.summary.matched,
                "mismatched": self.summary.mismatched,
                "skipped_gcd": self.summary.skipped_gcd,
                "no_case": self.summary.no_case,
                "out_of_range": self.summary.out_of_range,
                "skipped_large": self.summary.skipped_large,
                "resource_limit": self.summary.resource_limit,
            },
            "points": [
                {
                    "a": str(pt.a),
                    "b": str(pt.b),
                    "c": str(pt.c),
                    "n": str(pt.n),
                    "p": str(pt.p),
                    "closed": None if pt.closed is None else str(pt.closed),
                    "closed_error": pt.closed_error,
                    "oracle": None if pt.oracle is None else str(pt.oracle),
                    "case": pt.case,
                    "match": pt.match,
                }
                for pt in self.points
            ],
        }

    def to_csv_rows(self) -> list[list[str]]:
        """Header plus one row per point."""
        rows = [
            [
                "a", "b", "c", "n", "p",
                "closed", "closed_error", "oracle", "case", "match",
            ]
        ]
        for pt in self.points:
            rows.append(
                [
                    str(pt.a), str(pt.b), str(pt.c), str(pt.n), str(pt.p),
                    "" if pt.closed is None else str(pt.closed),
                    pt.closed_error or "",
                    "" if pt.oracle is None else str(pt.oracle),
                    pt.case or "",
                    str(pt.match).lower(),
                ]
            )
        return rows


_ERROR_TAGS = {
    NoClosedFormCaseError: "NoClosedFormCase",
    OutOfValidityRangeError: "OutOfValidityRange",
    UnsupportedCaseError: "Unsupported",
}


def _closed_g(params: ShiftedGeometricTriple | ShiftedGeometricQuad, p: int) -> int:
    if isinstance(params, ShiftedGeometricTriple):
        return g_p_closed_triple(params, p)
    return g_p_closed_quad(params, p)


def verify_point(
    params: ShiftedGeometricTriple | ShiftedGeometricQuad,
    p: int,
    *,
    table_cap: int | None = None,
) -> PointResult:
    """Evaluate closed form and oracle at one (params, p) point."""
    vars_ = 3 if isinstance(params, ShiftedGeometricTriple) else 4
    closed: int | None = None
    closed_error: str | None = None
    try:
        closed = _closed_g(params, p)
    except tuple(_ERROR_TAGS) as exc:
        closed_error = _ERROR_TAGS[type(exc)]
    case: str | None = None
    if vars_ == 3 and params.c < 0:
        cid = closed_form_case(params).case_id
        case = "NoCaseApplies" if cid is None else str(cid)
    oracle: int | None = None
    oracle_error: str | None = None
    try:
        oracle = p_frobenius_scan(params.gens, p, table_cap=table_cap)
    except ResourceLimitError:
        oracle_error = "ResourceLimit"
    return PointResult(
        a=params.a,
        b=params.b,
        c=params.c,
        n=params.n,
        vars=vars_,
        p=p,
        closed=closed,
        closed_error=closed_error,
        oracle=oracle,
        oracle_error=oracle_error,
        case=case,
        match=closed is not None and oracle is not None and closed == oracle,
    )


def theorem_p_range(params: ShiftedGeometricTriple | ShiftedGeometricQuad) -> range:
    """The p values the closed form is stated for: 0..q or 0..b-beta."""
    if isinstance(params, ShiftedGeometricTriple):
        return range(qr_decompose(params).q + 1)
    return range(params.b - abg_decompose(params).beta + 1)


def _evaluate_task(task: tuple) -> PointResult:
    a, b, c, n, vars_, p, table_cap = task
    make = make_triple if vars_ == 3 else make_quad
    return verify_point(make(a, b, c, n), p, table_cap=table_cap)


def verify_grid(
    spec: SweepSpec,
    *,
    workers: int = 1,
    table_cap: int | None = None,
) -> VerificationReport:
    """Sweep the spec's parameter grid and compare closed forms to the oracle.

    Tuples with gcd != 1 or an oversized minimum generator are counted and
    skipped. Report ordering follows tuple enumeration order regardless of
    worker count.
    """
    tuples = [
        (a, b, c, n)
        for a in range(spec.a_range[0], spec.a_range[1] + 1)
        for b in range(spec.b_range[0], spec.b_range[1] + 1)
        for c in range(spec.c_range[0], spec.c_range[1] + 1)
        if c != 0
        for n in range(spec.n_range[0], spec.n_range[1] + 1)
    ]
    if spec.sample_limit is not None and len(tuples) > spec.sample_limit:
        rng = random.Random(spec.sample_seed)
        keep = sorted(rng.sample(range(len(tuples)), spec.sample_limit))
        tuples = [tuples[i] for i in keep]

    make = make_triple if spec.vars == 3 else make_quad
    skipped_gcd = 0
    skipped_large = 0
    tasks: list[tuple] = []
    for a, b, c, n in tuples:
        try:
            params = make(a, b, c, n)
        except FrobkitError:
            skipped_gcd += 1
            continue
        if params.gens.a1 > spec.min_gen_cap:
            skipped_large += 1
            continue
        if spec.p_policy == "theorem-range":
            p_values = theorem_p_range(params)
        else:
            p_values = range(int(spec.p_policy) + 1)
        for p in p_values:
            tasks.append((a, b, c, n, spec.vars, p, table_cap))

    if workers > 1 and tasks:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunk = max(1, len(tasks) // (workers * 4))
            points = tuple(pool.map(_evaluate_task, tasks, chunksize=chunk))
    else:
        points = tuple(_evaluate_task(t) for t in tasks)

    matched = mismatched = no_case = out_of_range = resource_limit = 0
    for pt in points:
        if pt.closed_error in ("NoClosedFormCase", "Unsupported"):
            no_case += 1
        elif pt.closed_error == "OutOfValidityRange":
            out_of_range += 1
        elif pt.oracle_error is not None:
            resource_limit += 1
        elif pt.match:
            matched += 1
        else:
            mismatched += 1
    summary = SweepSummary(
        total=len(points) + skipped_gcd + skipped_large,
        matched=matched,
        mismatched=mismatched,
        skipped_gcd=skipped_gcd,
        no_case=no_case,
        out_of_range=out_of_range,
        skipped_large=skipped_large,
        resource_limit=resource_limit,
    )
    return VerificationReport(spec=spec, points=points, summary=summary)


def discover_validity(
    params: ShiftedGeometricTriple | ShiftedGeometricQuad | GeneratorTuple | tuple,
    p_max: int,
    *,
    table_cap: int | None = None,
) -> int:
    """Largest p <= p_max with closed form == oracle at every p' <= p.

    Accepts a triple, a quad, or a pair of coprime generators; returns -1
    when the closed form already fails at p = 0.
    """
    if isinstance(params, (ShiftedGeometricTriple, ShiftedGeometricQuad)):
        gens = params.gens

        def closed(p: int) -> int:
            return _closed_g(params, p)

    else:
        pair = params.gens if isinstance(params, GeneratorTuple) else tuple(params)
        if len(pair) != 2:
            raise InvalidInputError(
                f"generator-list form requires exactly 2 generators, got {len(pair)}"
            )
        gens = GeneratorTuple(pair)

        def closed(p: int) -> int:
            return g_p_two_gens(gens.gens[0], gens.gens[1], p)

    last_ok = -1
    for p in range(p_max + 1):
        try:
            value = closed(p)
        except FrobkitError:
            break
        if value != p_frobenius_scan(gens, p, table_cap=table_cap):
            break
        last_ok = p
    return last_ok
