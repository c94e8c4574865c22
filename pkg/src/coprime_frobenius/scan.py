"""Grid scan over coprime pairs, CSV output and the on-disk G cache."""

from __future__ import annotations

import csv
import logging
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path

from . import __version__
from .coprime import coprime_frobenius, gap_report
from .denumerant import CoprimePair, sylvester_frobenius
from .errors import DomainError

log = logging.getLogger(__name__)

SCAN_HEADER = ("a1", "a2", "g_frobenius", "G", "G_certified", "parity", "ell", "L")
CACHE_HEADER = f"# coprime-frobenius cache v{__version__}"


@dataclass(frozen=True)
class ScanRecord:
    a1: int
    a2: int
    g_frobenius: int
    G: int
    G_certified: bool
    parity: str
    ell: int
    L: int

    def row(self) -> tuple[str, ...]:
        return (
            str(self.a1), str(self.a2), str(self.g_frobenius), str(self.G),
            "true" if self.G_certified else "false", self.parity, str(self.ell), str(self.L),
        )

    @classmethod
    def from_row(cls, row: list[str]) -> ScanRecord:
        a1, a2, g, G, cert, parity, ell, L = row
        if cert not in ("true", "false"):
            raise ValueError(f"bad boolean {cert!r}")
        return cls(int(a1), int(a2), int(g), int(G), cert == "true", parity, int(ell), int(L))


def scan_pairs(a1_max: int, a2_max: int) -> list[CoprimePair]:
    if a1_max < 2 or a2_max <= 2 or a1_max > a2_max:
        raise DomainError(f"need 2 <= a1_max <= a2_max, got ({a1_max}, {a2_max})")
    return [
        CoprimePair(a1, a2)
        for a1 in range(2, a1_max + 1)
        for a2 in range(a1 + 1, a2_max + 1)
        if math.gcd(a1, a2) == 1
    ]


def compute_record(pair: CoprimePair, cached: tuple[int, bool] | None = None) -> ScanRecord:
    if cached is None:
        res = coprime_frobenius(pair)
        G, certified = res.value, res.certified
    else:
        G, certified = cached
    gaps = gap_report(pair, G)
    return ScanRecord(
        pair.a1, pair.a2, sylvester_frobenius(pair), G, certified,
        "odd" if G % 2 else "even", gaps.ell, gaps.L,
    )


def _record_task(args: tuple[CoprimePair, tuple[int, bool] | None]) -> ScanRecord:
    return compute_record(*args)


def load_cache(path: str | Path) -> dict[tuple[int, int], tuple[int, bool]]:
    """Entries of a cache file; empty when missing or written by another version."""
    path = Path(path)
    if not path.exists():
        return {}
    with open(path) as fh:
        lines = fh.read().splitlines()
    if not lines or lines[0] != CACHE_HEADER:
        log.info("cache %s is stale or foreign, ignoring it", path)
        return {}
    out = {}
    for line in lines[1:]:
        if not line or line.startswith("#"):
            continue
        a1, a2, G, cert = line.split(",")
        out[int(a1), int(a2)] = (int(G), cert == "true")
    return out


def append_cache(path: str | Path, records: list[ScanRecord]) -> None:
    path = Path(path)
    # a stale file is replaced, never appended to
    fresh = not path.exists() or _header(path) != CACHE_HEADER
    mode = "w" if fresh else "a"
    with open(path, mode) as fh:
        if fresh:
            fh.write(CACHE_HEADER + "\n")
        for r in records:
            fh.write(f"{r.a1},{r.a2},{r.G},{'true' if r.G_certified else 'false'}\n")


def _header(path: Path) -> str:
    with open(path) as fh:
        return fh.readline().rstrip("\n")


def run_scan(
    a1_max: int,
    a2_max: int,
    out: str | Path | None = None,
    *,
    cache: str | Path | None = None,
    workers: int = 1,
) -> list[ScanRecord]:
    """Scan every coprime pair ``a1 < a2`` with ``a1 <= a1_max``, ``a2 <= a2_max``.

    Rows come back sorted by ``(a1, a2)``; the worker count never changes the
    output. Cached G values are reused and new ones appended to the cache.
    """
    pairs = scan_pairs(a1_max, a2_max)
    known = load_cache(cache) if cache is not None else {}
    tasks = [(p, known.get((p.a1, p.a2))) for p in pairs]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            records = list(pool.map(_record_task, tasks, chunksize=8))
    else:
        records = [_record_task(t) for t in tasks]
    records.sort(key=lambda r: (r.a1, r.a2))
    if cache is not None:
        new = [r for r in records if (r.a1, r.a2) not in known]
        if new or not known:
            append_cache(cache, new)
    if out is not None:
        write_scan_csv(records, out)
    return records


def write_scan_csv(records: list[ScanRecord], path: str | Path) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(SCAN_HEADER)
        for r in records:
            w.writerow(r.row())


def read_scan_csv(path: str | Path) -> list[ScanRecord]:
    with open(path, newline="") as fh:
        rows = list(csv.reader(fh))
    if tuple(rows[0]) != SCAN_HEADER:
        raise ValueError(f"unexpected header {rows[0]}")
    return [ScanRecord.from_row(r) for r in rows[1:]]
