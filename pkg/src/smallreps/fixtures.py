"""Golden data for the four reference tables, as line-oriented text files.

Each data line is ``table | family | condition | field | field ...`` with
fields separated by `` | ``.  Lines starting with ``#`` are comments.  See
the README for the field-by-field format.  Parsing followed by
serialization reproduces every file byte for byte.
"""

from __future__ import annotations

import ast
import hashlib
import re
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources

from .reps import DominantWeight, IrrepLabel
from .rootsys import DynkinType

__all__ = [
    "FixtureError",
    "SymbolicWeight",
    "SymbolicTerm",
    "RankCondition",
    "TableRow",
    "FixtureTable",
    "read_table",
    "load",
    "instantiate",
    "parse_line",
    "expected_squares",
    "expected_smallness",
    "expected_numerics",
    "checksum",
    "PINNED_CHECKSUM",
    "VERDICTS",
]

TABLE_IDS = (1, 2, 3, 4)
VERDICTS = ("star", "circle", "-")
_SEP = " | "

# sha256 of the canonical serialization of all four tables, in order
PINNED_CHECKSUM = "b66022c724e3746693118e7e13966dd0dd60319e9d8a397c7f4197349dca5547"


class FixtureError(ValueError):
    def __init__(self, msg, line_no=None, source=None):
        where = ""
        if source is not None or line_no is not None:
            where = f"{source or 'fixture'}:{line_no}: " if line_no is not None else f"{source}: "
        super().__init__(where + msg)
        self.line_no = line_no


# -- symbolic pieces --------------------------------------------------------

_INDEX = r"(?:\d+|m|\(m-\d+\))"
_TERM_RE = re.compile(rf"^(\d*)b({_INDEX})$")


def _eval_index(idx: str, m: int) -> int:
    if idx == "m":
        return m
    if idx.startswith("("):
        return m - int(idx[3:-1])
    return int(idx)


@dataclass(frozen=True)
class SymbolicWeight:
    """Sum of ``coef * b<index>`` where an index may refer to the rank m."""

    terms: tuple  # ((coef, index_text), ...)

    @classmethod
    def parse(cls, text: str) -> "SymbolicWeight":
        if text == "0":
            return cls(())
        terms = []
        for part in text.split("+"):
            hit = _TERM_RE.match(part)
            if not hit:
                raise ValueError(f"bad weight term {part!r}")
            coef = int(hit.group(1)) if hit.group(1) else 1
            if coef <= 0:
                raise ValueError(f"nonpositive coefficient in {part!r}")
            terms.append((coef, hit.group(2)))
        return cls(tuple(terms))

    def __str__(self):
        if not self.terms:
            return "0"
        return "+".join((f"{c}" if c != 1 else "") + f"b{idx}" for c, idx in self.terms)

    def at(self, m: int) -> DominantWeight:
        a = [0] * m
        for c, idx in self.terms:
            i = _eval_index(idx, m)
            if not 1 <= i <= m:
                raise ValueError(f"index b{idx} = b{i} outside 1..{m}")
            a[i - 1] += c
        return DominantWeight(tuple(a))


@dataclass(frozen=True)
class SymbolicTerm:
    """``kV[w]``, ``kW[w]`` or ``k1`` (k trivial summands), k omitted when 1."""

    mult: int
    parity: str  # "V", "W" or "1"
    weight: SymbolicWeight | None = None

    @classmethod
    def parse(cls, text: str) -> "SymbolicTerm":
        hit = re.match(r"^(\d*)(?:([VW])\[([^\]]+)\]|(1))$", text)
        if not hit:
            raise ValueError(f"bad constituent {text!r}")
        mult = int(hit.group(1)) if hit.group(1) else 1
        if mult <= 0:
            raise ValueError(f"nonpositive multiplicity in {text!r}")
        if hit.group(4):
            return cls(mult, "1")
        return cls(mult, hit.group(2), SymbolicWeight.parse(hit.group(3)))

    def __str__(self):
        k = f"{self.mult}" if self.mult != 1 else ""
        if self.parity == "1":
            return f"{k}1"
        return f"{k}{self.parity}[{self.weight}]"


def _parse_sum(text: str) -> tuple:
    return tuple(SymbolicTerm.parse(t) for t in text.split(" + "))


def _sum_str(terms) -> str:
    return " + ".join(str(t) for t in terms)


@dataclass(frozen=True)
class RankCondition:
    op: str  # ">=" or "="
    values: tuple

    @classmethod
    def parse(cls, text: str) -> "RankCondition":
        hit = re.match(r"^m(>=|=)(\d+(?:,\d+)*)$", text)
        if not hit:
            raise ValueError(f"bad rank condition {text!r}")
        vals = tuple(int(x) for x in hit.group(2).split(","))
        if hit.group(1) == ">=" and len(vals) != 1:
            raise ValueError(f"bad rank condition {text!r}")
        return cls(hit.group(1), vals)

    def holds(self, m: int) -> bool:
        return m >= self.values[0] if self.op == ">=" else m in self.values

    @property
    def exact(self) -> bool:
        return self.op == "="

    def __str__(self):
        return f"m{self.op}" + ",".join(str(v) for v in self.values)


@dataclass(frozen=True)
class TableRow:
    table_id: int
    family: str
    condition: RankCondition
    weights: tuple  # SymbolicWeight per listed highest weight (tables 1-3)
    payload: tuple  # table 1: verdicts; 2-3: (S^2 terms, L^2 terms); 4: formula texts
    line_no: int = 0

    def serialize(self) -> str:
        head = [str(self.table_id), self.family, str(self.condition)]
        if self.table_id == 4:
            return _SEP.join(head + list(self.payload))
        ws = "; ".join(str(w) for w in self.weights)
        if self.table_id == 1:
            return _SEP.join(head + [ws] + list(self.payload))
        return _SEP.join(head + [ws] + [_sum_str(p) for p in self.payload])

    def applies(self, dtype: DynkinType) -> bool:
        return dtype.family == self.family and self.condition.holds(dtype.rank)


_FIELD_COUNT = {1: 6, 2: 6, 3: 6, 4: 8}


def parse_line(line: str, line_no: int = 0, source=None) -> TableRow:
    fields = line.split(_SEP)
    try:
        tid = int(fields[0])
    except ValueError:
        raise FixtureError(f"bad table id {fields[0]!r}", line_no, source) from None
    if tid not in _FIELD_COUNT:
        raise FixtureError(f"unknown table id {tid}", line_no, source)
    if len(fields) != _FIELD_COUNT[tid]:
        raise FixtureError(f"expected {_FIELD_COUNT[tid]} fields, got {len(fields)}", line_no, source)
    try:
        family = fields[1]
        DynkinType(family, _probe_rank(family))
        cond = RankCondition.parse(fields[2])
        if tid == 4:
            for text in fields[3:]:
                _check_formula(text)
            return TableRow(tid, family, cond, (), tuple(fields[3:]), line_no)
        weights = tuple(SymbolicWeight.parse(w) for w in fields[3].split("; "))
        if tid == 1:
            for v in fields[4:]:
                if v not in VERDICTS:
                    raise ValueError(f"unknown verdict {v!r}")
            return TableRow(tid, family, cond, weights, tuple(fields[4:]), line_no)
        if len(weights) != 1:
            raise ValueError("square tables list one weight per row")
        return TableRow(tid, family, cond, weights, (_parse_sum(fields[4]), _parse_sum(fields[5])), line_no)
    except FixtureError:
        raise
    except (ValueError, SyntaxError) as exc:
        raise FixtureError(str(exc), line_no, source) from None


def _probe_rank(family: str) -> int:
    return {"A": 1, "B": 2, "C": 2, "D": 4, "E": 6, "F": 4, "G": 2, "BC": 1}.get(family, 0)


@dataclass(frozen=True)
class FixtureTable:
    table_id: int
    lines: tuple  # raw comment/blank lines and TableRow objects, in file order

    @property
    def rows(self) -> list:
        return [x for x in self.lines if isinstance(x, TableRow)]

    def serialize(self) -> str:
        return "".join((x.serialize() if isinstance(x, TableRow) else x) + "\n" for x in self.lines)


def parse_table(text: str, table_id: int, source=None) -> FixtureTable:
    out = []
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    for no, line in enumerate(lines, 1):
        if not line.strip() or line.startswith("#"):
            out.append(line)
            continue
        row = parse_line(line, no, source)
        if row.table_id != table_id:
            raise FixtureError(f"row of table {row.table_id} in table {table_id}", no, source)
        out.append(row)
    return FixtureTable(table_id, tuple(out))


def _raw(table_id: int) -> str:
    if table_id not in TABLE_IDS:
        raise ValueError(f"table id must be one of {TABLE_IDS}, got {table_id}")
    return resources.files("smallreps").joinpath(f"data/table{table_id}.txt").read_text()


_TABLES = {}


def read_table(table_id: int) -> FixtureTable:
    hit = _TABLES.get(table_id)
    if hit is None:
        hit = _TABLES[table_id] = parse_table(_raw(table_id), table_id, f"table{table_id}.txt")
    return hit


def load(table_id: int) -> list:
    return read_table(table_id).rows


def checksum() -> str:
    h = hashlib.sha256()
    for tid in TABLE_IDS:
        for row in load(tid):
            h.update(row.serialize().encode())
            h.update(b"\n")
    return h.hexdigest()


# -- table 4 formulas -------------------------------------------------------

_ALLOWED = (
    ast.Expression,
    ast.BinOp,
    ast.UnaryOp,
    ast.Constant,
    ast.Name,
    ast.Call,
    ast.IfExp,
    ast.Compare,
    ast.Tuple,
    ast.Load,
    ast.Add,
    ast.Sub,
    ast.Mult,
    ast.Div,
    ast.USub,
    ast.Lt,
    ast.LtE,
    ast.Gt,
    ast.GtE,
    ast.Eq,
    ast.NotEq,
)


def _check_formula(text: str) -> ast.Expression:
    tree = ast.parse(text, mode="eval")
    for node in ast.walk(tree):
        if not isinstance(node, _ALLOWED):
            raise ValueError(f"disallowed syntax {type(node).__name__} in {text!r}")
        if isinstance(node, ast.Name) and node.id not in ("m", "i", "delta"):
            raise ValueError(f"unknown name {node.id!r} in {text!r}")
        if isinstance(node, ast.Constant) and not isinstance(node.value, int):
            raise ValueError(f"only integer literals allowed in {text!r}")
        if isinstance(node, ast.Call) and not (isinstance(node.func, ast.Name) and node.func.id == "delta"):
            raise ValueError(f"only delta(,) may be called in {text!r}")
    return tree


_BIN = {
    ast.Add: lambda a, b: a + b,
    ast.Sub: lambda a, b: a - b,
    ast.Mult: lambda a, b: a * b,
    ast.Div: lambda a, b: a / b,
}
_CMP = {
    ast.Lt: lambda a, b: a < b,
    ast.LtE: lambda a, b: a <= b,
    ast.Gt: lambda a, b: a > b,
    ast.GtE: lambda a, b: a >= b,
    ast.Eq: lambda a, b: a == b,
    ast.NotEq: lambda a, b: a != b,
}


def _eval(node, env):
    if isinstance(node, ast.Expression):
        return _eval(node.body, env)
    if isinstance(node, ast.Constant):
        return Fraction(node.value)
    if isinstance(node, ast.Name):
        return env[node.id]
    if isinstance(node, ast.BinOp):
        return _BIN[type(node.op)](_eval(node.left, env), _eval(node.right, env))
    if isinstance(node, ast.UnaryOp):
        return -_eval(node.operand, env)
    if isinstance(node, ast.Call):
        a, b = (_eval(x, env) for x in node.args)
        return Fraction(int(a == b))
    if isinstance(node, ast.IfExp):
        return _eval(node.body, env) if _eval(node.test, env) else _eval(node.orelse, env)
    if isinstance(node, ast.Compare):
        left = _eval(node.left, env)
        for op, comp in zip(node.ops, node.comparators):
            right = _eval(comp, env)
            if not _CMP[type(op)](left, right):
                return False
            left = right
        return True
    if isinstance(node, ast.Tuple):
        return tuple(_eval(x, env) for x in node.elts)
    raise ValueError(type(node).__name__)


def evaluate_formula(text: str, m: int, i: int | None = None):
    env = {"m": Fraction(m)}
    if i is not None:
        env["i"] = Fraction(i)
    return _eval(_check_formula(text), env)


# -- instantiation ----------------------------------------------------------


@dataclass(frozen=True)
class ExpectedSquare:
    """Constituent multiset ``{IrrepLabel: mult}`` and trivial count of one printed cell."""

    constituents: tuple  # sorted ((IrrepLabel, mult), ...)
    delta: int

    def as_dict(self) -> dict:
        return dict(self.constituents)


def _expected_cell(terms, m: int) -> ExpectedSquare:
    found = {}
    delta = 0
    for t in terms:
        if t.parity == "1":
            delta += t.mult
            continue
        lab = IrrepLabel(t.weight.at(m), t.parity)
        if lab.parity == "V" and lab.weight.is_zero():
            delta += t.mult
            continue
        found[lab] = found.get(lab, 0) + t.mult
    return ExpectedSquare(tuple(sorted(found.items())), delta)


def instantiate(row: TableRow, rank: int):
    """Concrete expectation of ``row`` at the given rank.

    table 1: list of ``(DominantWeight, {+1: verdict, -1: verdict})``
    tables 2-3: ``(DominantWeight, {+1: ExpectedSquare, -1: ExpectedSquare})``
    table 4: dict with keys rho2, R2, dim_g, r (list over i), out
    """
    if not row.condition.holds(rank):
        raise ValueError(f"row at line {row.line_no} needs {row.condition}, got m={rank}")
    if row.table_id == 1:
        out = []
        seen = set()
        for w in row.weights:
            lam = w.at(rank)
            if lam not in seen:
                seen.add(lam)
                out.append((lam, {1: row.payload[0], -1: row.payload[1]}))
        return out
    if row.table_id in (2, 3):
        lam = row.weights[0].at(rank)
        return lam, {1: _expected_cell(row.payload[0], rank), -1: _expected_cell(row.payload[1], rank)}
    rho2, r2, dim_g, r_text, out = row.payload
    r_vals = []
    for i in range(1, rank + 1):
        v = evaluate_formula(r_text, rank, i)
        if isinstance(v, tuple):
            if len(v) != rank:
                raise ValueError(f"r_i list of length {len(v)} for rank {rank}")
            v = v[i - 1]
        r_vals.append(v)
    return {
        "rho2": evaluate_formula(rho2, rank),
        "R2": evaluate_formula(r2, rank),
        "dim_g": int(evaluate_formula(dim_g, rank)),
        "r": r_vals,
        "out": int(evaluate_formula(out, rank)),
    }


def _rows_for(table_id: int, dtype: DynkinType) -> list:
    return [r for r in load(table_id) if r.applies(dtype)]


def _merge(entries, what):
    # an exact-rank row overrides an open-ended one for the same weight
    best = {}
    for row, lam, value in entries:
        prev = best.get(lam)
        if prev is None:
            best[lam] = (row, value)
            continue
        prow, pvalue = prev
        if prow.condition.exact and not row.condition.exact:
            continue
        if row.condition.exact and not prow.condition.exact:
            best[lam] = (row, value)
            continue
        if pvalue != value:
            raise FixtureError(
                f"conflicting {what} rows for {lam} (lines {prow.line_no} and {row.line_no})", row.line_no
            )
    return best


def _swap_square(cell: ExpectedSquare) -> ExpectedSquare:
    cons = ((IrrepLabel(DominantWeight(lab.weight.a[::-1]), lab.parity), k) for lab, k in cell.constituents)
    return ExpectedSquare(tuple(sorted(cons)), cell.delta)


def expected_squares(dtype: DynkinType) -> dict:
    """``{DominantWeight: (row, {eps: ExpectedSquare})}`` from tables 2 and 3.

    C_2 is read off the B_2 rows, as for :func:`expected_smallness`.
    """
    if dtype.family == "C" and dtype.rank == 2:
        src = expected_squares(DynkinType("B", 2))
        return {
            DominantWeight(lam.a[::-1]): (row, {e: _swap_square(c) for e, c in cells.items()})
            for lam, (row, cells) in src.items()
        }
    entries = []
    for tid in (2, 3):
        for row in _rows_for(tid, dtype):
            lam, cells = instantiate(row, dtype.rank)
            entries.append((row, lam, cells))
    return _merge(entries, "square")


def expected_smallness(dtype: DynkinType) -> dict:
    """``{DominantWeight: {eps: verdict}}`` from table 1.

    C_2 has no printed rows; it is read off the B_2 rows through B_2 = C_2,
    which swaps the two basis weights.
    """
    if dtype.family == "C" and dtype.rank == 2:
        src = expected_smallness(DynkinType("B", 2))
        return {DominantWeight(lam.a[::-1]): v for lam, v in src.items()}
    entries = []
    for row in _rows_for(1, dtype):
        for lam, cells in instantiate(row, dtype.rank):
            entries.append((row, lam, cells))
    return {lam: v for lam, (_, v) in _merge(entries, "smallness").items()}


def expected_numerics(dtype: DynkinType) -> dict | None:
    rows = _rows_for(4, dtype)
    if not rows:
        return None
    if len(rows) > 1:
        raise FixtureError(f"several table 4 rows apply to {dtype}")
    return instantiate(rows[0], dtype.rank)
