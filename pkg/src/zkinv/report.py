"""All invariants of one bundle, with timings, plus the bundled table fixtures."""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from importlib import resources
from typing import Callable, Optional

from .bundle import BundleSpec, InvariantReport, make_spec, normalize_p
from .endo import conjecture_values, delta, h1_end, h1_end_oracle
from .height import height, height_oracle
from .poly import format_laurent
from .width import width


class OracleMismatch(ArithmeticError):
    pass


@dataclass
class OutputRecord:
    k: int
    j: int
    p: str
    p_normalized: str
    width: Optional[int] = None
    height: Optional[int] = None
    h1_end: Optional[int] = None
    delta: Optional[int] = None
    ms: dict = field(default_factory=dict)

    @property
    def chi_loc(self) -> Optional[int]:
        if self.width is None or self.height is None:
            return None
        return self.width + self.height

    @property
    def h1_minus_delta(self) -> Optional[int]:
        if self.h1_end is None or self.delta is None:
            return None
        return self.h1_end - self.delta

    def as_dict(self) -> dict:
        return {
            "k": self.k,
            "j": self.j,
            "p": self.p,
            "p_normalized": self.p_normalized,
            "width": self.width,
            "height": self.height,
            "chi_loc": self.chi_loc,
            "h1_end": self.h1_end,
            "delta": self.delta,
            "h1_minus_delta": self.h1_minus_delta,
            "ms": dict(self.ms),
        }

    def invariants(self) -> InvariantReport:
        conj = None
        if None not in (self.width, self.height, self.h1_end, self.delta):
            lhs, rhs = conjecture_values(self.k, self.j, self.width, self.height, self.h1_end, self.delta)
            conj = lhs == rhs
        return InvariantReport(self.width, self.height, self.h1_end, self.delta, conj)


def _timed(record: OutputRecord, name: str, fn: Callable[[], int]) -> int:
    t0 = time.perf_counter()
    value = fn()
    record.ms[name] = round((time.perf_counter() - t0) * 1000, 3)
    return value


def new_record(spec: BundleSpec) -> OutputRecord:
    spec = normalize_p(spec)
    raw = spec.p_raw if spec.p_raw is not None else spec.p
    return OutputRecord(spec.k, spec.j, format_laurent(raw), format_laurent(spec.p))


ALL = ("width", "height", "h1_end", "delta")


def compute(spec: BundleSpec, which=ALL, oracle: bool = False) -> OutputRecord:
    """Evaluate the requested invariants; ``oracle`` cross-checks the cohomology counts."""
    spec = normalize_p(spec)
    rec = new_record(spec)
    if "width" in which:
        rec.width = _timed(rec, "width", lambda: width(spec))
    if "height" in which:
        rec.height = _timed(rec, "height", lambda: height(spec))
        if oracle:
            check = _timed(rec, "height_oracle", lambda: height_oracle(spec))
            if check != rec.height:
                raise OracleMismatch(f"height {rec.height} but the Čech oracle gives {check} for {spec}")
    if "h1_end" in which:
        rec.h1_end = _timed(rec, "h1_end", lambda: h1_end(spec))
        if oracle:
            check = _timed(rec, "h1_end_oracle", lambda: h1_end_oracle(spec))
            if check != rec.h1_end:
                raise OracleMismatch(f"h1_end {rec.h1_end} but the Čech oracle gives {check} for {spec}")
    if "delta" in which:
        rec.delta = _timed(rec, "delta", lambda: delta(spec))
    return rec


# --- fixtures -----------------------------------------------------------------

def load_fixtures() -> list[dict]:
    text = resources.files("zkinv").joinpath("data/tables.json").read_text()
    return json.loads(text)["rows"]


def fixture_rows(suite: str = "all", include_blank: bool = False) -> list[dict]:
    rows = load_fixtures()
    if suite != "all":
        rows = [r for r in rows if r["suite"] == suite]
    else:
        rows = [r for r in rows if r["suite"] != "session"]
    if not include_blank:
        rows = [r for r in rows if r["p"] is not None]
    return rows


def fixture_spec(row: dict) -> BundleSpec:
    return make_spec(row["k"], row["j"], row["p"])
