"""Affine Lie algebra identification from weight-one dimensions.

The dimension of a semisimple weight-one algebra fixes the common ratio
(dual Coxeter number)/(level) of its simple parts to (dim - 24)/24; levels
must be positive integers.  Candidate generation enumerates the leveled
simple types meeting the ratio within a dimension budget, and the solver
searches multisets of candidates adding up to the full dimension under
declarative per-case constraints shipped in a ledger data file.

Ledger schema (plain text, '#' comments, one record per case):

    case <case-id>            builder tuple "even(5,1,0,+)" or a pair id
    table <ta8|ta16>
    dim <int>                 published weight-one dimension
    schellekens <int>         row number in the reference list
    constraint rank <int> note="..."
    constraint ideal dim=<d> [rank=<r>] note="..."
    constraint rootideal roots=<v> note="..."
    constraint rootpart parts=<v1,v2,...> note="..."
    constraint partition blocks=<d1/r1,d2/r2,...> note="..."
    answer <algebra>          the published structure
    also <algebra>            other members of the exact solution set
    uniqueness <arithmetic|ledger-asserted|identification-only>
    identified <text>         lattice-model identification, when published
    end

All rationals are exact; no floating point enters this module.
"""

from __future__ import annotations

import functools
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .gf2 import UsageError

MAX_TOTAL_RANK = 24

_FAMILY_RANGES = {"A": (1, 24), "B": (3, 24), "C": (2, 24), "D": (4, 24)}
_EXCEPTIONAL = {("E", 6), ("E", 7), ("E", 8), ("F", 4), ("G", 2)}


@dataclass(frozen=True, order=True)
class SimpleType:
    family: str
    rank: int

    def __post_init__(self) -> None:
        if self.family in _FAMILY_RANGES:
            lo, hi = _FAMILY_RANGES[self.family]
            if not lo <= self.rank <= hi:
                raise UsageError(f"{self.family}{self.rank} is outside the naming convention")
        elif (self.family, self.rank) not in _EXCEPTIONAL:
            raise UsageError(f"unknown simple type {self.family}{self.rank}")

    @property
    def dim(self) -> int:
        n = self.rank
        if self.family == "A":
            return n * (n + 2)
        if self.family in ("B", "C"):
            return n * (2 * n + 1)
        if self.family == "D":
            return n * (2 * n - 1)
        return {("E", 6): 78, ("E", 7): 133, ("E", 8): 248, ("F", 4): 52, ("G", 2): 14}[
            (self.family, self.rank)
        ]

    @property
    def h_vee(self) -> int:
        n = self.rank
        if self.family in ("A", "C"):
            return n + 1
        if self.family == "B":
            return 2 * n - 1
        if self.family == "D":
            return 2 * n - 2
        return {("E", 6): 12, ("E", 7): 18, ("E", 8): 30, ("F", 4): 9, ("G", 2): 4}[
            (self.family, self.rank)
        ]

    @property
    def n_roots(self) -> int:
        return self.dim - self.rank

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


@dataclass(frozen=True, order=True)
class LeveledType:
    type: SimpleType
    level: int

    def __post_init__(self) -> None:
        if self.level < 1:
            raise UsageError("levels are positive integers")

    @property
    def dim(self) -> int:
        return self.type.dim

    @property
    def rank(self) -> int:
        return self.type.rank

    @property
    def n_roots(self) -> int:
        return self.type.n_roots

    def __str__(self) -> str:
        return f"{self.type},{self.level}"


def leveled(token: str) -> LeveledType:
    """Parse one 'A8,2'-style token."""
    name, _, lvl = token.partition(",")
    if not lvl:
        raise UsageError(f"missing level in {token!r}")
    fam = name[0]
    try:
        return LeveledType(SimpleType(fam, int(name[1:])), int(lvl))
    except ValueError as exc:
        raise UsageError(f"bad type token {token!r}") from exc


class Decomposition:
    """A multiset of leveled simple types."""

    def __init__(self, parts: Iterable[LeveledType]):
        self.parts = tuple(sorted(parts, key=lambda p: (-p.dim, str(p))))

    @property
    def total_dim(self) -> int:
        return sum(p.dim for p in self.parts)

    @property
    def total_rank(self) -> int:
        return sum(p.rank for p in self.parts)

    def counter(self) -> Counter:
        return Counter(self.parts)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Decomposition) and self.counter() == other.counter()

    def __hash__(self) -> int:
        return hash(self.parts)

    def __str__(self) -> str:
        out = []
        for part, mult in sorted(
            self.counter().items(), key=lambda kv: (-kv[0].dim, str(kv[0]))
        ):
            out.append(f"({part})^{mult}" if mult > 1 else str(part))
        return " ".join(out)


def parse_decomposition(text: str) -> Decomposition:
    parts: list[LeveledType] = []
    for token in text.split():
        if token.startswith("("):
            body, _, mult = token[1:].partition(")^")
            if not mult:
                raise UsageError(f"bad multiplicity token {token!r}")
            parts.extend([leveled(body)] * int(mult))
        else:
            parts.append(leveled(token))
    if not parts:
        raise UsageError("empty decomposition")
    return Decomposition(parts)


def ratio_from_dim(dim_v1: int) -> Fraction:
    """(dim - 24)/24: the forced ratio h_vee/level of every simple part."""
    if dim_v1 <= 24:
        raise UsageError(
            "dimension at most 24 is the abelian-or-zero branch; no candidates"
        )
    return Fraction(dim_v1 - 24, 24)


def candidates(ratio: Fraction, dim_budget: int) -> list[LeveledType]:
    """All leveled simple types with h_vee/level == ratio and dim <= budget."""
    if ratio <= 0:
        raise UsageError("the ratio must be positive")
    out = []
    types: list[SimpleType] = []
    for fam, (lo, hi) in _FAMILY_RANGES.items():
        types += [SimpleType(fam, n) for n in range(lo, hi + 1)]
    types += [SimpleType(f, n) for f, n in sorted(_EXCEPTIONAL)]
    for st in types:
        level = Fraction(st.h_vee) / ratio
        if level.denominator != 1 or level < 1:
            continue
        if st.dim <= dim_budget and st.rank <= MAX_TOTAL_RANK:
            out.append(LeveledType(st, int(level)))
    out.sort(key=lambda lt: (-lt.dim, str(lt)))
    return out


# ---------------------------------------------------------------------------
# constraints
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TotalRank:
    value: int
    note: str = ""

    def check(self, parts: Sequence[LeveledType]) -> bool:
        return sum(p.rank for p in parts) == self.value


@dataclass(frozen=True)
class IdealExists:
    dim: int
    rank: int | None = None
    note: str = ""

    def check(self, parts: Sequence[LeveledType]) -> bool:
        reach = {(0, 0)}
        for p in parts:
            reach |= {
                (d + p.dim, r + p.rank)
                for d, r in reach
                if d + p.dim <= self.dim
            }
        if self.rank is None:
            return any(d == self.dim for d, _ in reach)
        return (self.dim, self.rank) in reach


@dataclass(frozen=True)
class RootSpaceIdeal:
    roots: int
    note: str = ""

    def check(self, parts: Sequence[LeveledType]) -> bool:
        reach = {0}
        for p in parts:
            reach |= {v + p.n_roots for v in reach if v + p.n_roots <= self.roots}
        return self.roots in reach


@dataclass(frozen=True)
class RootSpacePartition:
    parts: tuple[int, ...]
    note: str = ""

    def check(self, comps: Sequence[LeveledType]) -> bool:
        return _partition_exists(
            comps, list(self.parts), lambda p: p.n_roots
        )


@dataclass(frozen=True)
class PartitionDims:
    blocks: tuple[tuple[int, int], ...]  # (dim, rank) per block
    note: str = ""

    def check(self, comps: Sequence[LeveledType]) -> bool:
        return _partition_exists(
            comps, list(self.blocks), lambda p: (p.dim, p.rank)
        )


Constraint = TotalRank | IdealExists | RootSpaceIdeal | RootSpacePartition | PartitionDims


def _partition_exists(comps: Sequence[LeveledType], targets: list, measure) -> bool:
    """Can comps be split into blocks whose measure-sums are exactly targets?

    Measures are ints or int tuples; every component must be used."""

    def add(total, m):
        if isinstance(total, tuple):
            return tuple(a + b for a, b in zip(total, m))
        return total + m

    zero = (0, 0) if targets and isinstance(targets[0], tuple) else 0
    comps = sorted(comps, key=lambda p: -p.dim)

    def rec(i, fills):
        if i == len(comps):
            return all(f == t for f, t in zip(fills, targets))
        m = measure(comps[i])
        seen = set()
        for b in range(len(targets)):
            nxt = add(fills[b], m)
            if (targets[b], nxt) in seen:
                continue
            seen.add((targets[b], nxt))
            ok = (
                nxt <= targets[b]
                if not isinstance(nxt, tuple)
                else all(x <= y for x, y in zip(nxt, targets[b]))
            )
            if ok:
                if rec(i + 1, fills[:b] + [nxt] + fills[b + 1 :]):
                    return True
        return False

    return rec(0, [zero] * len(targets))


# ---------------------------------------------------------------------------
# the solver
# ---------------------------------------------------------------------------


def decompose(
    dim_v1: int,
    constraints: Sequence[Constraint] = (),
    cands: Sequence[LeveledType] | None = None,
) -> list[Decomposition]:
    """Every multiset of ratio-compatible types of total dimension dim_v1.

    Complete depth-first search with dimension and rank pruning; the result
    list is duplicate-free and canonically ordered.
    """
    if cands is None:
        cands = candidates(ratio_from_dim(dim_v1), dim_v1)
    cands = sorted(cands, key=lambda lt: (-lt.dim, str(lt)))
    out: list[Decomposition] = []
    chosen: list[LeveledType] = []
    min_dim = min((c.dim for c in cands), default=0)

    def rec(start: int, remaining: int, rank: int) -> None:
        if remaining == 0:
            dec = Decomposition(chosen)
            if all(c.check(dec.parts) for c in constraints):
                out.append(dec)
            return
        if not cands or remaining < min_dim:
            return
        for i in range(start, len(cands)):
            c = cands[i]
            if c.dim > remaining or rank + c.rank > MAX_TOTAL_RANK:
                continue
            chosen.append(c)
            rec(i, remaining - c.dim, rank + c.rank)
            chosen.pop()

    rec(0, dim_v1, 0)
    seen = set()
    unique = []
    for d in out:
        if d.parts not in seen:
            seen.add(d.parts)
            unique.append(d)
    unique.sort(key=lambda d: tuple(str(p) for p in d.parts))
    return unique


# ---------------------------------------------------------------------------
# the case ledger
# ---------------------------------------------------------------------------


@dataclass
class CaseRecord:
    case_id: str
    table: str
    dim: int
    schellekens: int
    constraints: list[Constraint] = field(default_factory=list)
    answer: Decomposition | None = None
    also: list[Decomposition] = field(default_factory=list)
    uniqueness: str = ""
    identified: str | None = None

    def expected_set(self) -> set[Decomposition]:
        assert self.answer is not None
        return {self.answer, *self.also}


def default_ledger_path() -> str:
    import importlib.resources

    return str(importlib.resources.files("framedlie").joinpath("data/cases.ledger"))


def _parse_kv(parts: list[str]) -> tuple[dict[str, str], str]:
    """key=value tokens plus one optional trailing note="..." field."""
    text = " ".join(parts)
    note = ""
    if 'note="' in text:
        head, _, tail = text.partition('note="')
        if not tail.endswith('"'):
            raise UsageError(f"unterminated note in: {text}")
        note = tail[:-1]
        text = head.strip()
    kv = {}
    for tok in text.split():
        k, _, v = tok.partition("=")
        if not v:
            raise UsageError(f"expected key=value, got {tok!r}")
        kv[k] = v
    return kv, note


def _parse_constraint(parts: list[str]) -> Constraint:
    kind = parts[0]
    if kind == "rank":
        kv, note = _parse_kv(parts[2:])
        return TotalRank(int(parts[1]), note)
    kv, note = _parse_kv(parts[1:])
    if kind == "ideal":
        rank = int(kv["rank"]) if "rank" in kv else None
        return IdealExists(int(kv["dim"]), rank, note)
    if kind == "rootideal":
        return RootSpaceIdeal(int(kv["roots"]), note)
    if kind == "rootpart":
        return RootSpacePartition(tuple(int(x) for x in kv["parts"].split(",")), note)
    if kind == "partition":
        blocks = []
        for blk in kv["blocks"].split(","):
            d, _, r = blk.partition("/")
            blocks.append((int(d), int(r)))
        return PartitionDims(tuple(blocks), note)
    raise UsageError(f"unknown constraint kind {kind!r}")


def parse_ledger(text: str) -> list[CaseRecord]:
    records: list[CaseRecord] = []
    cur: CaseRecord | None = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        key = parts[0]
        try:
            if key == "case":
                if cur is not None:
                    raise UsageError("record not closed before a new 'case'")
                cur = CaseRecord(case_id=parts[1], table="", dim=-1, schellekens=-1)
            elif cur is None:
                raise UsageError(f"field {key!r} outside a record")
            elif key == "table":
                cur.table = parts[1]
            elif key == "dim":
                cur.dim = int(parts[1])
            elif key == "schellekens":
                cur.schellekens = int(parts[1])
            elif key == "constraint":
                cur.constraints.append(_parse_constraint(parts[1:]))
            elif key == "answer":
                cur.answer = parse_decomposition(" ".join(parts[1:]))
            elif key == "also":
                cur.also.append(parse_decomposition(" ".join(parts[1:])))
            elif key == "uniqueness":
                cur.uniqueness = parts[1]
            elif key == "identified":
                cur.identified = " ".join(parts[1:])
            elif key == "end":
                _validate_record(cur)
                records.append(cur)
                cur = None
            else:
                raise UsageError(f"unknown ledger field {key!r}")
        except (IndexError, ValueError) as exc:
            raise UsageError(f"ledger line {lineno}: {raw!r}") from exc
    if cur is not None:
        raise UsageError("ledger ended inside a record")
    return records


def _validate_record(rec: CaseRecord) -> None:
    if rec.table not in ("ta8", "ta16"):
        raise UsageError(f"case {rec.case_id}: bad table {rec.table!r}")
    if rec.dim <= 24:
        raise UsageError(f"case {rec.case_id}: missing or abelian-branch dim")
    if rec.answer is None:
        raise UsageError(f"case {rec.case_id}: missing answer")
    if rec.uniqueness not in ("arithmetic", "ledger-asserted", "identification-only"):
        raise UsageError(f"case {rec.case_id}: bad uniqueness {rec.uniqueness!r}")
    if rec.answer.total_dim != rec.dim:
        raise UsageError(f"case {rec.case_id}: answer dimension is off")
    for alt in rec.also:
        if alt.total_dim != rec.dim:
            raise UsageError(f"case {rec.case_id}: alternate dimension is off")


@functools.lru_cache(maxsize=None)
def load_ledger(path: str | None = None) -> tuple[CaseRecord, ...]:
    p = path if path is not None else default_ledger_path()
    with open(p, "r", encoding="utf-8") as fh:
        return tuple(parse_ledger(fh.read()))


# ---------------------------------------------------------------------------
# regression runs
# ---------------------------------------------------------------------------


@dataclass
class CaseReport:
    case_id: str
    table: str
    dim_computed: int
    dim_published: int
    solutions: list[str]
    answer: str
    uniqueness: str
    schellekens: int
    identified: str | None
    ok: bool
    problems: list[str]


def _computed_dim(case_id: str) -> int:
    from . import framed

    if case_id.startswith(("even(", "odd(")):
        kind, body = case_id.split("(", 1)
        bits = body.rstrip(")").split(",")
        if kind == "even":
            case = framed.even_case(int(bits[0]), int(bits[1]), int(bits[2]), bits[3])
        else:
            case = framed.odd_case(int(bits[0]), int(bits[1]), int(bits[2]))
        return framed.weight1_dim_triple(framed.build_case(case, seed=0))
    return framed.build_pair_case_weight1(case_id, seed=0)


def run_case(rec: CaseRecord, computed_dim: int | None = None) -> CaseReport:
    problems: list[str] = []
    dim = computed_dim if computed_dim is not None else _computed_dim(rec.case_id)
    if dim != rec.dim:
        problems.append(f"computed dimension {dim} != published {rec.dim}")
    sols = decompose(rec.dim, rec.constraints)
    got = set(sols)
    if rec.answer not in got:
        problems.append("published decomposition is not a solver output")
    if got != rec.expected_set():
        problems.append(
            "solution set mismatch: "
            + " | ".join(sorted(str(s) for s in got ^ rec.expected_set()))
        )
    if rec.uniqueness == "arithmetic" and len(got) != 1:
        problems.append("marked arithmetic-unique but the solver found more")
    if rec.uniqueness != "arithmetic" and len(got) > 3:
        problems.append("asserted cases must leave at most three candidates")
    return CaseReport(
        case_id=rec.case_id,
        table=rec.table,
        dim_computed=dim,
        dim_published=rec.dim,
        solutions=[str(s) for s in sols],
        answer=str(rec.answer),
        uniqueness=rec.uniqueness,
        schellekens=rec.schellekens,
        identified=rec.identified,
        ok=not problems,
        problems=problems,
    )


def run_ledger(path: str | None = None) -> list[CaseReport]:
    """Solve every ledger case and compare with the published data."""
    return [run_case(rec) for rec in load_ledger(path)]


def candidate_table_report() -> list[dict]:
    """Regenerate every stored candidate table and compare as exact sets."""
    from . import tables

    out = []
    for case_id, (ratio_s, printed, extra) in tables.CANDIDATE_TABLES.items():
        ratio = Fraction(ratio_s)
        budget = next(
            rec.dim for rec in load_ledger() if rec.case_id == case_id
        )
        got = {str(c) for c in candidates(ratio, budget)}
        printed_set = {tok for tok, _, _ in printed}
        expected = printed_set | set(extra)
        problems = []
        if got != expected:
            problems.append(f"set mismatch: {sorted(got ^ expected)}")
        for tok, h, d in printed:
            lt = leveled(tok)
            if lt.type.h_vee != h or lt.dim != d:
                problems.append(f"{tok}: printed data disagrees with type data")
        out.append(
            {
                "case": case_id,
                "ratio": ratio_s,
                "computed": sorted(got),
                "printed": sorted(printed_set),
                "extra": sorted(extra),
                "ok": not problems,
                "problems": problems,
            }
        )
    return out


def lieframed_coverage(reports: Sequence[CaseReport] | None = None) -> list[dict]:
    """Match every row of the final classification table to its sources."""
    from . import tables

    if reports is None:
        reports = run_ledger()
    by_alg: dict[tuple[int, frozenset], list[str]] = {}
    for rep in reports:
        rec_answer = parse_decomposition(rep.answer)
        key = (rep.dim_published, frozenset(rec_answer.counter().items()))
        by_alg.setdefault(key, []).append(rep.case_id)
    out = []
    for no, dim, alg in tables.LIEFRAMED_ROWS:
        key = (dim, frozenset(parse_decomposition(alg).counter().items()))
        sources = list(by_alg.get(key, []))
        for dno, ddim, dalg in tables.LIEDEX_ROWS:
            if dno == no and ddim == dim:
                if parse_decomposition(dalg) == parse_decomposition(alg):
                    sources.append("exceptional-code reference data")
        out.append(
            {
                "no": no,
                "dim": dim,
                "algebra": str(parse_decomposition(alg)),
                "sources": sources,
                "ok": bool(sources),
            }
        )
    return out
