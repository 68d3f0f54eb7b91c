"""Table regeneration and invariant suites shared by the CLI and the tests.

Regenerated tables are lists of canonical text lines, one per (type, weight)
or per type, so that computed and fixture data can be compared with a plain
unified diff.
"""

from __future__ import annotations

import difflib
from dataclasses import dataclass, field
from fractions import Fraction

from . import fixtures
from .classify import (
    FIXTURE_LABEL,
    NOT_SMALL,
    check_index_identity,
    classify_all,
    rank_one_square,
    small_table,
)
from .reps import (
    DominantWeight,
    binomial_superdim,
    character,
    dimension,
    enumerate_dominant_up_to_dim,
)
from .rootsys import DynkinType, build, coroot_norm_max, diagram_automorphisms, r_ratio
from .squares import contains_highest_weight, square_character, square_decompose

# -- which types a table covers ----------------------------------------------


def types_up_to(max_rank: int, families=("A", "B", "C", "D", "BC", "E", "F", "G")) -> list:
    out = []
    for fam in families:
        if fam == "E":
            out += [DynkinType("E", m) for m in (6, 7, 8) if m <= max_rank]
        elif fam == "F":
            out += [DynkinType("F", 4)] if max_rank >= 4 else []
        elif fam == "G":
            out += [DynkinType("G", 2)] if max_rank >= 2 else []
        else:
            start = {"A": 1, "B": 2, "C": 2, "D": 4, "BC": 1}[fam]
            out += [DynkinType(fam, m) for m in range(start, max_rank + 1)]
    return out


# -- canonical lines ------------------------------------------------------------


def _cell_str(constituents, delta) -> str:
    parts = []
    for lab, k in sorted(constituents):
        parts.append((f"{k}" if k > 1 else "") + f"{lab.parity}[{lab.weight}]")
    if delta:
        parts.append((f"{delta}" if delta > 1 else "") + "1")
    return " + ".join(parts) if parts else "0"


def _verdict_pair(v: dict) -> str:
    return f"{v[1]} | {v[-1]}"


def table1_lines(dtype: DynkinType, mode: str = "relaxed") -> tuple[list, list]:
    """(fixture lines, computed lines) for the small weights of one type."""
    rs = build(dtype)
    got = small_table(classify_all(rs, mode))
    computed = [
        f"{dtype} | {lam} | {_verdict_pair({e: FIXTURE_LABEL[v[e]] for e in v})}"
        for lam, v in sorted(got.items(), key=lambda kv: kv[0].a)
    ]
    want = fixtures.expected_smallness(dtype)
    expected = [f"{dtype} | {lam} | {_verdict_pair(v)}" for lam, v in sorted(want.items(), key=lambda kv: kv[0].a)]
    return expected, computed


def _square_line(dtype, lam, cells) -> str:
    return f"{dtype} | {lam} | S2: {cells[1]} | L2: {cells[-1]}"


def square_candidates(dtype: DynkinType, table_id: int) -> list:
    """Weights with 1 < dim < dim(g) (table 2) or dim = dim(g) > 1 (table 3)."""
    rs = build(dtype)
    if dtype.family == "BC" and dtype.rank == 1:
        # every irreducible has superdimension 1 = dim(g)
        return []
    keep = (lambda d: 1 < d < rs.dim_g) if table_id == 2 else (lambda d: d == rs.dim_g and d > 1)
    lams = [lam for lam in enumerate_dominant_up_to_dim(rs, rs.dim_g) if keep(dimension(rs, lam))]
    return sorted(lams, key=lambda w: w.a)


def squares_lines(dtype: DynkinType, table_id: int) -> tuple[list, list]:
    rs = build(dtype)
    computed = []
    for lam in square_candidates(dtype, table_id):
        if rs.rank == 1:
            decs = {e: rank_one_square(dtype.family, lam.a[0], e) for e in (1, -1)}
        else:
            decs = {e: square_decompose(rs, lam, e) for e in (1, -1)}
        cells = {e: _cell_str(d.constituents, d.delta) for e, d in decs.items()}
        computed.append(_square_line(dtype, lam, cells))
    expected = []
    for lam, (row, cells) in sorted(fixtures.expected_squares(dtype).items(), key=lambda kv: kv[0].a):
        if row.table_id != table_id:
            continue
        expected.append(_square_line(dtype, lam, {e: _cell_str(c.constituents, c.delta) for e, c in cells.items()}))
    return expected, computed


def _frac(x) -> str:
    return str(Fraction(x))


def numerics(dtype: DynkinType) -> dict:
    rs = build(dtype)
    return {
        "rho2": rs.rho.dot(rs.rho),
        "R2": coroot_norm_max(rs),
        "dim_g": rs.dim_g,
        "r": [r_ratio(rs, i) for i in range(1, rs.rank + 1)],
        "out": len(diagram_automorphisms(dtype)),
    }


def _numerics_line(dtype, v) -> str:
    r = ", ".join(_frac(x) for x in v["r"])
    return f"{dtype} | rho2={_frac(v['rho2'])} | R2={_frac(v['R2'])} | dim={v['dim_g']} | r=[{r}] | out={v['out']}"


def table4_lines(dtype: DynkinType) -> tuple[list, list]:
    want = fixtures.expected_numerics(dtype)
    expected = [_numerics_line(dtype, want)] if want else []
    return expected, [_numerics_line(dtype, numerics(dtype))]


def regenerate(table_id: int, max_rank: int, skip=()) -> tuple[list, list]:
    if table_id not in fixtures.TABLE_IDS:
        raise ValueError(f"table id must be one of {fixtures.TABLE_IDS}")
    if max_rank < 1:
        raise ValueError("max_rank must be >= 1")
    expected, computed = [], []
    for dt in types_up_to(max_rank):
        if dt in skip:
            continue
        if table_id == 1:
            e, c = table1_lines(dt)
        elif table_id == 4:
            e, c = table4_lines(dt)
        else:
            e, c = squares_lines(dt, table_id)
        expected += e
        computed += c
    return expected, computed


def unified_diff(expected: list, computed: list, table_id: int) -> list:
    return list(
        difflib.unified_diff(expected, computed, f"fixture/table{table_id}", "computed", lineterm="")
    )


# -- invariant suites ---------------------------------------------------------


@dataclass
class CheckResult:
    name: str
    failures: list = field(default_factory=list)
    count: int = 0

    @property
    def ok(self) -> bool:
        return not self.failures


def _fixture_weights(include_e8: bool):
    for dt in types_up_to(8):
        if dt == DynkinType("E", 8) and not include_e8:
            continue
        for lam in fixtures.expected_squares(dt):
            yield dt, lam


def check_fixture_integrity() -> CheckResult:
    res = CheckResult("fixture integrity")
    if fixtures.checksum() != fixtures.PINNED_CHECKSUM:
        res.failures.append(f"checksum {fixtures.checksum()} != pinned {fixtures.PINNED_CHECKSUM}")
    for t in fixtures.TABLE_IDS:
        res.count += 1
        if fixtures.read_table(t).serialize() != fixtures._raw(t):
            res.failures.append(f"table {t} does not round-trip")
    for dt in types_up_to(8):
        rs = build(dt)
        for lam, (row, _) in fixtures.expected_squares(dt).items():
            res.count += 1
            d = dimension(rs, lam)
            ok = 1 < d < rs.dim_g if row.table_id == 2 else d == rs.dim_g
            if not ok:
                res.failures.append(f"{dt} {lam}: dim {d} outside the range of table {row.table_id}")
    return res


def check_square_bookkeeping(include_e8: bool) -> CheckResult:
    """sdim T_eps = s(s+eps)/2, dim S2 + dim L2 = dim^2, reconstruction, index identity."""
    res = CheckResult("square bookkeeping")
    for dt, lam in _fixture_weights(include_e8):
        rs = build(dt)
        ch = character(rs, lam)
        s, n = ch.superdim(), ch.dim_total()
        tot = 0
        for eps in (1, -1):
            res.count += 1
            sq = square_character(ch, eps)
            dec = square_decompose(rs, lam, eps)
            tot += sq.dim_total()
            if sq.superdim() * 2 != s * (s + eps):
                res.failures.append(f"{dt} {lam} eps={eps}: superdim {sq.superdim()}")
            if dec.to_character() != sq:
                res.failures.append(f"{dt} {lam} eps={eps}: decomposition does not rebuild the square")
            try:
                check_index_identity(rs, lam, eps, dec)
            except AssertionError as exc:
                res.failures.append(str(exc))
        if tot != n * n:
            res.failures.append(f"{dt} {lam}: dim S2 + dim L2 = {tot} != {n * n}")
    return res


def check_dimensions(include_e8: bool) -> CheckResult:
    res = CheckResult("dimension formulas")
    for dt, lam in _fixture_weights(include_e8):
        rs = build(dt)
        res.count += 1
        ch = character(rs, lam)
        got = ch.superdim() if rs.is_super else ch.dim_total()
        if got != dimension(rs, lam):
            res.failures.append(f"{dt} {lam}: character gives {got}, product formula {dimension(rs, lam)}")
    for m in range(1, 9):
        rs = build(("BC", m))
        for r in range(1, m + 1):
            res.count += 1
            lam = DominantWeight(tuple(int(i == r - 1) for i in range(m)))
            if dimension(rs, lam) != binomial_superdim(m, r):
                res.failures.append(f"BC{m} b{r}: superdim {dimension(rs, lam)} != {binomial_superdim(m, r)}")
    return res


def check_oracle(include_e8: bool) -> CheckResult:
    from .weylsum import graded_multiplicities

    res = CheckResult("weyl sum oracle")
    for dt, lam in _fixture_weights(include_e8):
        rs = build(dt)
        res.count += 1
        labels = rs.beta_to_labels(lam.a)
        if graded_multiplicities(rs, labels) != character(rs, lam).dominant:
            res.failures.append(f"{dt} {lam}: Freudenthal and Weyl sum disagree")
    return res


def check_highest_weights(include_e8: bool) -> CheckResult:
    res = CheckResult("2 lambda - alpha_i in the alternating square")
    for dt, lam in _fixture_weights(include_e8):
        rs = build(dt)
        roots = ("super", "even") if rs.is_super else ("super",)
        for i, a in enumerate(lam.a, 1):
            if not a:
                continue
            for root in roots:
                if rs.is_super and i < rs.rank and root == "even":
                    continue
                res.count += 1
                if not contains_highest_weight(rs, lam, i, root):
                    res.failures.append(f"{dt} {lam} i={i} ({root} root)")
    return res


def check_dimension_two() -> CheckResult:
    res = CheckResult("dimension two scan")
    found = []
    for dt in types_up_to(8):
        if dt.rank < 2:
            continue
        rs = build(dt)
        res.count += 1
        # anything at most 2 counts: dimension 1 would break the lower bound too
        found += [(dt, lam) for lam in enumerate_dominant_up_to_dim(rs, 2)]
    if found != [(DynkinType("BC", 2), DominantWeight((0, 1)))]:
        res.failures.append(f"dimension <= 2 found at {[(str(d), str(l)) for d, l in found]}")
    return res


def check_table1(include_e8: bool) -> CheckResult:
    res = CheckResult("small representations")
    for dt in types_up_to(8):
        if dt == DynkinType("E", 8) and not include_e8:
            continue
        res.count += 1
        e, c = table1_lines(dt)
        if e != c:
            res.failures += unified_diff(e, c, 1)[2:]
    return res


TIERS = ("fast", "slow")


def run_checks(tier: str) -> list:
    if tier not in TIERS:
        raise ValueError(f"tier must be one of {TIERS}")
    slow = tier == "slow"
    return [
        check_fixture_integrity(),
        check_dimensions(slow),
        check_square_bookkeeping(slow),
        check_highest_weights(slow),
        check_oracle(slow),
        check_dimension_two(),
        check_table1(slow),
    ]


def is_small_somewhere(v: dict) -> bool:
    return any(x != NOT_SMALL for x in v.values())
