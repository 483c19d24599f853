"""Curve search over small fields and best-code table generation.

Spaces are either exhaustive (every coefficient tuple, in ascending
encoding order) or random (a seeded stream of coefficient draws); each
candidate goes through validation and, if accepted, the whole pipeline:
count over F_q and F_{q^2}, Weil data, simplicity, and one code report per
requested radius.  Tables sort by (certified, distance bound, length)
descending with a coefficient-encoding tie-break, so output is a pure
function of the space and seeds: byte-identical across runs and across
parallelism degrees, since parallel chunks are merged in submission order
before the canonical sort.

Odd-characteristic spaces only enumerate h = 0: validation folds any h
into the square term, so other choices of h produce exact duplicates of
models already in the h = 0 slice.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from random import Random
from typing import Iterator, Sequence

from .bounds import CodeReport, code_params
from .curves import IMAGINARY, REAL, CurveModel, count_points, validate_curve
from .errors import (
    GenusNotTwoError,
    JacobicodeError,
    SingularModelError,
    SpaceTooLargeError,
    WrongDegreeError,
)
from .fields import FiniteField, make_field
from .weil import SimplicityVerdict, WeilData, classify_simplicity, weil_from_counts

EXHAUSTIVE_CAP = 10 ** 7

EXHAUSTIVE = "exhaustive"
RANDOM = "random"


@dataclass(frozen=True)
class SearchSpace:
    """Coefficient space of candidate models over one field."""

    field: FiniteField
    kind: str = IMAGINARY
    mode: str = EXHAUSTIVE
    seed: int | None = None
    trials: int | None = None

    def __post_init__(self):
        if self.kind not in (IMAGINARY, REAL):
            raise ValueError(f"kind must be {IMAGINARY!r} or {REAL!r}")
        if self.mode not in (EXHAUSTIVE, RANDOM):
            raise ValueError(f"mode must be {EXHAUSTIVE!r} or {RANDOM!r}")
        if self.mode == RANDOM and (self.seed is None or not self.trials):
            raise ValueError("random mode needs a seed and a positive trial count")

    @property
    def f_degree(self) -> int:
        return 5 if self.kind == IMAGINARY else 6

    @property
    def h_size(self) -> int:
        if self.field.p != 2:
            return 1  # h folds away; only h = 0 yields distinct models
        h_cap = 2 if self.kind == IMAGINARY else 3
        return self.field.q ** (h_cap + 1)

    @property
    def f_size(self) -> int:
        return self.field.q ** self.f_degree  # free coefficients below the monic lead

    @property
    def size(self) -> int:
        return self.h_size * self.f_size


def _decode_candidate(space: SearchSpace, h_enc: int, f_enc: int
                      ) -> tuple[tuple[int, ...], tuple[int, ...]]:
    q = space.field.q
    h = []
    rest = h_enc
    while rest:
        rest, c = divmod(rest, q)
        h.append(c)
    f = []
    rest = f_enc
    for _ in range(space.f_degree):
        rest, c = divmod(rest, q)
        f.append(c)
    f.append(1)
    return tuple(h), tuple(f)


def candidate_encodings(space: SearchSpace) -> Iterator[tuple[int, int]]:
    """The (h, f) encoding stream defining the documented candidate order."""
    if space.mode == EXHAUSTIVE:
        if space.size > EXHAUSTIVE_CAP:
            raise SpaceTooLargeError(
                f"exhaustive space of size {space.size} exceeds {EXHAUSTIVE_CAP}")
        for h_enc in range(space.h_size):
            for f_enc in range(space.f_size):
                yield h_enc, f_enc
    else:
        rng = Random(space.seed)
        h_size, f_size = space.h_size, space.f_size
        for _ in range(space.trials):
            yield rng.randrange(h_size), rng.randrange(f_size)


def enumerate_curves(space: SearchSpace) -> Iterator[CurveModel]:
    """Validated models of the space, in candidate order, exact-tuple deduped."""
    seen: set[tuple] = set()
    for h_enc, f_enc in candidate_encodings(space):
        h, f = _decode_candidate(space, h_enc, f_enc)
        try:
            curve = validate_curve(space.field, h, f)
        except (WrongDegreeError, SingularModelError, GenusNotTwoError):
            continue
        if curve.kind != space.kind:
            continue  # degree-6 input that normalized down to an imaginary model
        key = (curve.h, curve.f)
        if key in seen:
            continue
        seen.add(key)
        yield curve


@dataclass(frozen=True)
class TableRow:
    """One (curve, r) line of a code table, carrying the full pipeline output."""

    curve: CurveModel
    n1: int
    n2: int
    weil: WeilData
    simplicity: SimplicityVerdict
    report: CodeReport

    def sort_key(self) -> tuple:
        return (not self.report.certified, -self.report.d_lb, -self.report.n,
                self.curve.h, self.curve.f, self.report.r)

    def to_dict(self) -> dict:
        return {
            "curve": self.curve.to_dict(),
            "n1": self.n1,
            "n2": self.n2,
            "weil": self.weil.to_dict(),
            "report": self.report.to_dict(),
        }


CSV_COLUMNS = ("q", "h", "f", "N1", "N2", "c1", "c2", "simplicity",
               "r", "n", "k", "d_lb", "certified")


def csv_row(row: TableRow) -> tuple:
    from .polytext import format_poly
    return (
        row.curve.field.q,
        format_poly(row.curve.h),
        format_poly(row.curve.f),
        row.n1,
        row.n2,
        row.weil.c1,
        row.weil.c2,
        row.simplicity.verdict.value,
        row.report.r,
        row.report.n,
        row.report.k,
        row.report.d_lb,
        row.report.certified,
    )


def analyze_curve(curve: CurveModel, r_values: Sequence[int],
                  *, allow_small_r: bool = True) -> list[TableRow]:
    """Full pipeline for one curve: counts, Weil data, one row per radius."""
    n1 = count_points(curve, 1).count
    n2 = count_points(curve, 2).count
    w = weil_from_counts(curve.field.q, n1, n2)
    verdict = classify_simplicity(w)
    rows = []
    for r in r_values:
        report = code_params(w, n1, r, allow_small_r=allow_small_r)
        rows.append(TableRow(curve=curve, n1=n1, n2=n2, weil=w,
                             simplicity=verdict, report=report))
    return rows


def _analyze_chunk(args: tuple) -> list[TableRow]:
    """Worker: rebuild the field from primitives, run the pipeline on a chunk."""
    p, a, modulus, kind, f_degree, r_values, chunk = args
    field = make_field(p, a, modulus)
    space = SearchSpace(field=field, kind=kind)  # only used for decoding
    assert space.f_degree == f_degree
    rows: list[TableRow] = []
    for h_enc, f_enc in chunk:
        h, f = _decode_candidate(space, h_enc, f_enc)
        try:
            curve = validate_curve(field, h, f)
        except (WrongDegreeError, SingularModelError, GenusNotTwoError):
            continue
        if curve.kind != kind:
            continue
        rows.extend(analyze_curve(curve, r_values))
    return rows


def best_codes(space: SearchSpace, r_values: Sequence[int],
               parallelism: int = 1) -> list[TableRow]:
    """Pipeline every valid curve of the space; canonical deterministic table."""
    r_values = tuple(r_values)
    if any(not 1 <= r <= 6 for r in r_values):
        raise JacobicodeError("radii must lie in 1..6")
    candidates = list(candidate_encodings(space))
    if parallelism <= 1:
        rows = _analyze_chunk((space.field.p, space.field.a, space.field.modulus,
                               space.kind, space.f_degree, r_values, candidates))
    else:
        n_chunks = max(1, min(len(candidates), parallelism * 8))
        step = (len(candidates) + n_chunks - 1) // n_chunks
        chunks = [candidates[i:i + step] for i in range(0, len(candidates), step)]
        args = [(space.field.p, space.field.a, space.field.modulus,
                 space.kind, space.f_degree, r_values, chunk) for chunk in chunks]
        rows = []
        with ProcessPoolExecutor(max_workers=parallelism) as pool:
            for part in pool.map(_analyze_chunk, args):
                rows.extend(part)
    # drop exact duplicates (random draws can repeat a candidate)
    seen: set[tuple] = set()
    unique: list[TableRow] = []
    for row in rows:
        key = (row.curve.h, row.curve.f, row.report.r)
        if key in seen:
            continue
        seen.add(key)
        unique.append(row)
    unique.sort(key=TableRow.sort_key)
    return unique
