"""Range scans comparing the closed form, the max-r characterization and the oracle."""
from __future__ import annotations

import csv
import io
import json
import multiprocessing
import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field, fields
from typing import Iterable, Optional

from . import kernels
from .errors import CapacityError, DomainError
from .formula import frobenius_closed_form, max_r
from .semigroup import frobenius_bruteforce, max_a, shifted_square_generators

# the conjecture only speaks about a > 30
GATE_FLOOR = 30

CSV_COLUMNS = (
    "a",
    "mod8",
    "closed_form",
    "branch",
    "max_r_value",
    "witness_r",
    "oracle_value",
    "agree_formula_theorem",
    "agree_theorem_oracle",
    "hypothesis_holds",
)


def _agree(x: Optional[int], y: Optional[int]) -> Optional[bool]:
    if x is None or y is None:
        return None
    return x == y


@dataclass(frozen=True)
class ScanRecord:
    a: int
    mod8: int
    closed_form: Optional[int]
    branch: Optional[str]
    max_r_value: Optional[int]
    witness_r: Optional[int]
    oracle_value: Optional[int]
    agree_formula_theorem: Optional[bool]
    agree_theorem_oracle: Optional[bool]
    hypothesis_holds: bool

    @property
    def agree_formula_oracle(self) -> Optional[bool]:
        # not a CSV column; catches closed-form errors where max-r is absent
        return _agree(self.closed_form, self.oracle_value)

    @property
    def gated(self) -> bool:
        return self.a > GATE_FLOOR

    @property
    def is_mismatch(self) -> bool:
        if not self.gated:
            return False
        flags = (self.agree_formula_theorem, self.agree_theorem_oracle, self.agree_formula_oracle)
        return False in flags or not self.hypothesis_holds


def evaluate(a: int, with_oracle: bool) -> ScanRecord:
    closed = branch = None
    if a % 4 == 0 and a >= 8:
        res = frobenius_closed_form(a)
        closed, branch = res.value, res.branch.value
    r = max_r(a)
    theorem = None if r is None else 3 * a + r
    oracle = frobenius_bruteforce(shifted_square_generators(a)).value if with_oracle else None
    return ScanRecord(
        a=a,
        mod8=a % 8,
        closed_form=closed,
        branch=branch,
        max_r_value=theorem,
        witness_r=r,
        oracle_value=oracle,
        agree_formula_theorem=_agree(closed, theorem),
        agree_theorem_oracle=_agree(theorem, oracle),
        hypothesis_holds=r is not None,
    )


@dataclass
class ScanReport:
    records: list[ScanRecord]
    config: dict = field(default_factory=dict)

    @property
    def mismatches(self) -> list[ScanRecord]:
        return [rec for rec in self.records if rec.is_mismatch]

    @property
    def small_a(self) -> list[ScanRecord]:
        """Records below the gate, reported for information only."""
        return [rec for rec in self.records if not rec.gated]

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_COLUMNS)
        for rec in self.records:
            w.writerow([_csv_cell(getattr(rec, c)) for c in CSV_COLUMNS])
        return buf.getvalue()

    def to_json(self) -> str:
        doc = {
            "config": self.config,
            "records": [asdict(rec) for rec in self.records],
            "mismatches": [rec.a for rec in self.mismatches],
        }
        return json.dumps(doc, indent=2) + "\n"

    @classmethod
    def from_csv(cls, text: str) -> "ScanReport":
        rows = csv.DictReader(io.StringIO(text))
        if tuple(rows.fieldnames or ()) != CSV_COLUMNS:
            raise ValueError(f"unexpected CSV header {rows.fieldnames}")
        kinds = {f.name: f.type for f in fields(ScanRecord)}
        recs = [ScanRecord(**{k: _parse_cell(v, kinds[k]) for k, v in row.items()}) for row in rows]
        return cls(recs)


def _csv_cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def _parse_cell(v: str, kind: str):
    if v == "":
        return None
    if "bool" in kind:
        return v == "true"
    if "str" in kind:
        return v
    return int(v)


def _evaluate_chunk(args):
    chunk, with_oracle = args
    return [evaluate(a, with_oracle) for a in chunk]


def default_jobs(n_values: int) -> int:
    return max(1, min(os.cpu_count() or 1, n_values))


def scan_values(
    start: int, stop: int, step: int = 1, modulus_filter: Optional[Iterable[int]] = None
) -> list[int]:
    residues = None if modulus_filter is None else {int(r) % 8 for r in modulus_filter}
    return [a for a in range(start, stop + 1, step) if residues is None or a % 8 in residues]


def scan_range(
    start: int,
    stop: int,
    step: int = 1,
    with_oracle: bool = False,
    modulus_filter: Optional[Iterable[int]] = None,
    jobs: int = 1,
) -> ScanReport:
    """One record per a in [start, stop] (stepping by ``step``) whose residue mod 8 passes the filter.

    Work may be spread over ``jobs`` processes; records always come back in
    ascending order, so the report does not depend on ``jobs``.
    """
    if step < 1:
        raise DomainError(f"step must be positive, got {step}")
    if not 2 <= start <= stop:
        raise DomainError(f"need 2 <= from <= to, got from={start}, to={stop}")
    if with_oracle and stop > max_a():
        raise CapacityError(f"oracle requested up to a={stop}, above the cap {max_a()}")
    values = scan_values(start, stop, step, modulus_filter)
    config = {
        "from": start,
        "to": stop,
        "step": step,
        "oracle": with_oracle,
        "mod8": None if modulus_filter is None else sorted({int(r) % 8 for r in modulus_filter}),
    }
    jobs = max(1, min(int(jobs), len(values) or 1))
    if jobs == 1:
        records = [evaluate(a, with_oracle) for a in values]
    else:
        # round-robin chunks balance the cost, which grows with a
        chunks = [(values[i::jobs * 4], with_oracle) for i in range(jobs * 4)]
        kernels.warmup()
        ctx = multiprocessing.get_context("fork")
        with ProcessPoolExecutor(max_workers=jobs, mp_context=ctx) as pool:
            records = [rec for part in pool.map(_evaluate_chunk, chunks) for rec in part]
    records.sort(key=lambda rec: rec.a)
    return ScanReport(records, config)


@dataclass(frozen=True)
class ResidueProfile:
    """Distribution of a - max_r(a) over the a in one residue class mod 8.

    ``exceptions`` lists the a whose offset differs from residue + 1;
    ``missing`` the a with no admissible r at all.
    """

    residue: int
    offsets: dict
    exceptions: tuple[int, ...]
    missing: tuple[int, ...]

    @property
    def count(self) -> int:
        return sum(self.offsets.values()) + len(self.missing)


def empirical_max_r_profile(start: int, stop: int) -> list[ResidueProfile]:
    if not 2 <= start <= stop:
        raise DomainError(f"need 2 <= from <= to, got from={start}, to={stop}")
    offsets = {res: Counter() for res in range(8)}
    exceptions = {res: [] for res in range(8)}
    missing = {res: [] for res in range(8)}
    for a in range(start, stop + 1):
        res = a % 8
        r = max_r(a)
        if r is None:
            missing[res].append(a)
            continue
        offsets[res][a - r] += 1
        if a - r != res + 1:
            exceptions[res].append(a)
    return [
        ResidueProfile(res, dict(sorted(offsets[res].items())), tuple(exceptions[res]), tuple(missing[res]))
        for res in range(8)
    ]
