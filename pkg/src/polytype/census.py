"""Parallel, checkpointed census of polyhedral types over conical pairs.

The pair stream is deterministic for a given degree, so a checkpoint is
just the length of the processed prefix plus the partial tallies; results
are aggregated as a commutative multiset merge, making the summary
independent of worker scheduling.
"""

from __future__ import annotations

import json
import os
import random
import tempfile
from dataclasses import dataclass, field

from .enumeration import conical_polygons, pair_at
from .geometry import hull, mixed_volume, polygon_to_obj
from .newton import pair_to_obj
from .polyhedral import (
    DegeneratePairError,
    InternalInconsistencyError,
    _mv_probe,
    psi,
    sigma_data,
)

CENSUS_FORMAT = 1
DEFAULT_DEGREE_CAP = 5

# reported by the reference software; kept for the divergence note in the
# summary (see README): conical polytope counts for degree 1..5 and pair
# totals, neither of which this implementation reproduces exactly
REPORTED_CONICAL = {1: 0, 2: 1, 3: 68, 4: 899, 5: 6795}
REPORTED_PAIRS = {1: 0, 2: 1, 3: 2346, 4: 404550, 5: 23089410}


@dataclass
class CensusSummary:
    degree: int
    pairs_total: int
    pairs_degenerate: int
    distinct_psi: int
    psi_multiset: dict
    conical_polygons: int
    inconsistencies: int = 0
    reported_conical_polygons: int | None = None
    reported_pairs_total: int | None = None

    def to_obj(self):
        return {
            "degree": self.degree,
            "pairs_total": self.pairs_total,
            "pairs_degenerate": self.pairs_degenerate,
            "distinct_psi": self.distinct_psi,
            "psi_multiset": {
                k: self.psi_multiset[k] for k in sorted(self.psi_multiset)
            },
            "conical_polygons": self.conical_polygons,
            "inconsistencies": self.inconsistencies,
            "reported_conical_polygons": self.reported_conical_polygons,
            "reported_pairs_total": self.reported_pairs_total,
        }


def _psi_key(vec):
    return ",".join(str(v) for v in vec)


def _mv_spot_check(pair, result, seed):
    """Verify MV(delta, Pi) against the probe on fresh random polytopes."""
    rng = random.Random(seed)
    sig = result.sigma_data
    for _ in range(3):
        pts = [(rng.randint(0, 6), rng.randint(0, 6)) for _ in range(5)]
        Pi = hull(pts)
        if mixed_volume(result.delta, Pi) != _mv_probe(pair, sig, Pi):
            raise InternalInconsistencyError(
                "MV identity spot check failed on %r" % (Pi.vertices,)
            )


def process_pair(polys, index, mv_check_rate, seed_base=0x5EED):
    """One census record: (index, psi-or-None, flags)."""
    pair = pair_at(polys, index)
    flags = []
    vec = None
    try:
        result = psi(pair)
        vec = result.psi
        pick = seed_base ^ (index * 0x9E3779B97F4A7C15)
        if mv_check_rate >= 1 or (
            mv_check_rate > 0 and random.Random(pick).random() < mv_check_rate
        ):
            _mv_spot_check(pair, result, seed=pick + 1)
    except DegeneratePairError as exc:
        flags.append("degenerate:%s" % exc.tag)
    except InternalInconsistencyError as exc:
        vec = None
        flags.append("inconsistency:%s" % exc)
    return index, vec, flags, pair


def record_obj(index, vec, flags, pair):
    return {
        "pair_index": index,
        "A1": polygon_to_obj(pair.a1)["vertices"],
        "A2": polygon_to_obj(pair.a2)["vertices"],
        "psi": list(vec) if vec is not None else None,
        "flags": flags,
    }


# --- checkpointing -----------------------------------------------------------


def _checkpoint_obj(degree, options_digest, processed, tallies):
    return {
        "format": CENSUS_FORMAT,
        "degree": degree,
        "options": options_digest,
        "processed": processed,
        "degenerate": tallies["degenerate"],
        "inconsistencies": tallies["inconsistencies"],
        "psi_multiset": tallies["psi"],
    }


def _write_checkpoint(path, obj):
    d = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=d, prefix=".census-ckpt-")
    try:
        with os.fdopen(fd, "w") as fh:
            json.dump(obj, fh)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _load_checkpoint(path, degree, options_digest):
    with open(path) as fh:
        try:
            obj = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ValueError("corrupt checkpoint: %s" % exc) from exc
    if obj.get("format") != CENSUS_FORMAT:
        raise ValueError("checkpoint written by an incompatible version")
    if obj.get("degree") != degree or obj.get("options") != options_digest:
        raise ValueError("checkpoint options do not match this run")
    return obj


def _truncate_jsonl(path, keep_lines):
    """Drop trailing records written after the last checkpoint."""
    if not os.path.exists(path):
        return
    with open(path, "r+") as fh:
        offset = 0
        for _ in range(keep_lines):
            line = fh.readline()
            if not line:
                break
            offset = fh.tell()
        fh.truncate(offset)


class _Worker:
    """Picklable chunk processor for multiprocessing."""

    def __init__(self, degree, mv_check_rate):
        self.degree = degree
        self.mv_check_rate = mv_check_rate

    def __call__(self, bounds):
        polys = conical_polygons(self.degree)
        lo, hi = bounds
        return [
            process_pair(polys, i, self.mv_check_rate)[:3] for i in range(lo, hi)
        ]


def run_census(
    degree,
    jobs=1,
    checkpoint=None,
    out=None,
    paranoid=False,
    keep_going=False,
    mv_check_rate=0.01,
    resume=False,
    limit=None,
    chunk_size=512,
    progress=None,
):
    """Run the census and return a CensusSummary.

    ``limit`` stops after that many pairs (checkpoint intact), which is how
    interruption is exercised in tests.  With ``resume`` the checkpoint must
    match the degree and options of the original run.
    """
    if degree < 1:
        raise ValueError("degree must be positive")
    rate = 1.0 if paranoid else mv_check_rate
    polys = conical_polygons(degree)
    n = len(polys)
    total = n * (n + 1) // 2
    options_digest = {"mv_check_rate": rate}

    tallies = {"psi": {}, "degenerate": 0, "inconsistencies": 0}
    start = 0
    if resume:
        if not checkpoint or not os.path.exists(checkpoint):
            raise ValueError("resume requested but checkpoint missing")
        obj = _load_checkpoint(checkpoint, degree, options_digest)
        start = obj["processed"]
        tallies["psi"] = dict(obj["psi_multiset"])
        tallies["degenerate"] = obj["degenerate"]
        tallies["inconsistencies"] = obj["inconsistencies"]
        if out:
            _truncate_jsonl(out, start)

    stop = total if limit is None else min(total, start + limit)
    out_fh = open(out, "a") if out else None
    abort = None
    try:
        for lo, results in _chunks(degree, jobs, start, stop, rate, chunk_size):
            for index, vec, flags in results:
                if vec is not None:
                    key = _psi_key(vec)
                    tallies["psi"][key] = tallies["psi"].get(key, 0) + 1
                bad = [f for f in flags if f.startswith("inconsistency")]
                if bad:
                    tallies["inconsistencies"] += 1
                elif vec is None:
                    tallies["degenerate"] += 1
                if out_fh:
                    pair = pair_at(polys, index)
                    out_fh.write(
                        json.dumps(
                            record_obj(index, vec, flags, pair),
                            separators=(",", ":"),
                        )
                        + "\n"
                    )
                if bad and not keep_going:
                    abort = bad[0]
            processed = lo + len(results)
            if out_fh:
                out_fh.flush()
            if checkpoint:
                _write_checkpoint(
                    checkpoint,
                    _checkpoint_obj(degree, options_digest, processed, tallies),
                )
            if progress:
                progress(processed, total)
            if abort:
                raise InternalInconsistencyError(abort)
    finally:
        if out_fh:
            out_fh.close()

    return CensusSummary(
        degree=degree,
        pairs_total=total,
        pairs_degenerate=tallies["degenerate"],
        distinct_psi=len(tallies["psi"]),
        psi_multiset=dict(tallies["psi"]),
        conical_polygons=n,
        inconsistencies=tallies["inconsistencies"],
        reported_conical_polygons=REPORTED_CONICAL.get(degree),
        reported_pairs_total=REPORTED_PAIRS.get(degree),
    )


def _chunks(degree, jobs, start, stop, rate, chunk_size):
    """Yield (chunk_start, [(index, psi, flags), ...]) in stream order."""
    bounds = [
        (lo, min(lo + chunk_size, stop)) for lo in range(start, stop, chunk_size)
    ]
    if jobs <= 1:
        polys = conical_polygons(degree)
        for lo, hi in bounds:
            yield lo, [process_pair(polys, i, rate)[:3] for i in range(lo, hi)]
        return
    from multiprocessing import Pool

    worker = _Worker(degree, rate)
    with Pool(processes=jobs) as pool:
        for (lo, _), results in zip(bounds, pool.imap(worker, bounds)):
            yield lo, results
