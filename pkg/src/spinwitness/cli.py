"""Command-line front end.

Subcommands: ``witness``, ``concurrence``, ``twirl``, ``sample``, ``contour``,
``verify``. Exit codes: 0 for success (and a certified witness), 1 for a
negative result (witness not certified, verification failures), 2 for invalid
or unphysical input.

CSV schemas (field order fixed):

* sample:  ``index,family,m_abs,p_s,concurrence,certified,bound_value``
* contour: ``target_c,m_bin_center,min_ps_empirical,min_ps_analytic``
  (``--with-reference`` appends ``min_ps_reference``)

All commands are deterministic functions of their flags; ``--threads`` only
fans the same per-index work across a pool and never changes the output.
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .bounds import (
    CERT_MARGIN,
    MODE_FULL,
    MODE_Z,
    reference_min_ps,
    singlet_bound,
    witness,
)
from .concurrence import spun_concurrence_closed_form, wootters_concurrence
from .errors import InsufficientSamples, Unphysical
from .sampling import (
    FAMILIES,
    SamplerConfig,
    mixture_density,
    sample_ginibre,
    sample_separable,
    sample_spun,
    sample_saturating,
)
from .states import Observables, observables
from .stateio import load_state, save_state, state_to_dict
from .twirl import twirl_analytic
from .verify import run_checks

MIN_BIN_SAMPLES = 50


@dataclass(frozen=True)
class SampleRecord:
    index: int
    family: str
    m_abs: float
    p_s: float
    concurrence: float
    certified: bool
    bound_value: float


@dataclass(frozen=True)
class ContourRecord:
    target_concurrence: float
    m_bin_center: float
    min_ps_empirical: float
    min_ps_analytic: float
    qualifying_count: int


def _sample_chunk(family: str, seed: int, start: int, count: int, max_components: int):
    """Records for sample indices [start, start + count); pure in (seed, index)."""
    records = []
    if family == "spun":
        for i, s in enumerate(sample_spun(SamplerConfig(seed, count, family), start=start)):
            records.append((start + i, abs(s.m), s.p_s, spun_concurrence_closed_form(s).concurrence))
        return records
    if family == "ginibre":
        rhos = sample_ginibre(SamplerConfig(seed, count, family), start=start)
    elif family == "separable":
        mixes = sample_separable(
            SamplerConfig(seed, count, family), max_components=max_components, start=start
        )
        rhos = [mixture_density(mix) for mix in mixes]
    elif family == "saturating":
        rhos = sample_saturating(SamplerConfig(seed, count, family), start=start)
    else:  # pragma: no cover - argparse restricts choices
        raise ValueError(f"unknown family {family!r}")
    for i, rho in enumerate(rhos):
        obs = observables(rho)
        c = wootters_concurrence(rho).concurrence
        records.append((start + i, obs.m_abs, obs.singlet_fraction, c))
    return records


def _fan_out(fn, count: int, threads: int):
    """Run fn(start, chunk) over index chunks, concatenating in index order."""
    threads = max(1, threads)
    chunk = -(-count // threads)
    starts = list(range(0, count, chunk))
    if threads == 1 or len(starts) == 1:
        parts = [fn(s, min(chunk, count - s)) for s in starts]
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(lambda s: fn(s, min(chunk, count - s)), starts))
    out = []
    for p in parts:
        out.extend(p)
    return out


def generate_samples(
    family: str, seed: int, count: int, threads: int = 1, max_components: int = 4
) -> list[SampleRecord]:
    raw = _fan_out(
        lambda start, n: _sample_chunk(family, seed, start, n, max_components),
        count,
        threads,
    )
    records = []
    for index, m_abs, p_s, c in raw:
        bound = singlet_bound(min(m_abs, 1.0))
        records.append(
            SampleRecord(
                index=index,
                family=family,
                m_abs=m_abs,
                p_s=p_s,
                concurrence=c,
                certified=p_s > bound + CERT_MARGIN,
                bound_value=bound,
            )
        )
    return records


def write_sample_csv(records: list[SampleRecord], path) -> None:
    lines = ["index,family,m_abs,p_s,concurrence,certified,bound_value"]
    for r in records:
        lines.append(
            f"{r.index},{r.family},{r.m_abs!r},{r.p_s!r},{r.concurrence!r},"
            f"{'true' if r.certified else 'false'},{r.bound_value!r}"
        )
    Path(path).write_text("\n".join(lines) + "\n")


def _min_concurrence_vec(p_s: np.ndarray, m: np.ndarray) -> np.ndarray:
    gap = np.clip((1.0 - p_s) ** 2 - m * m, 0.0, None)
    return np.clip(p_s - np.sqrt(gap), 0.0, None)


def extract_contours(
    targets, seed: int, samples: int, bins: int, threads: int = 1
) -> list[ContourRecord]:
    """Per-m-bin minimum singlet fraction among samples certified at each target.

    A sample qualifies for a target C when the concurrence floor certified
    from its own (p_s, |m|) pair reaches C (strictly above zero for C = 0).
    Bins inside the contour's domain with fewer than MIN_BIN_SAMPLES
    qualifying samples trigger an InsufficientSamples warning.
    """
    if bins < 1:
        raise ValueError("bins must be >= 1")
    pairs = _fan_out(
        lambda start, n: [
            (abs(s.m), s.p_s)
            for s in sample_spun(SamplerConfig(seed, n, "spun"), start=start)
        ],
        samples,
        threads,
    )
    m_abs = np.array([p[0] for p in pairs])
    p_s = np.array([p[1] for p in pairs])
    floor = _min_concurrence_vec(p_s, m_abs)
    width = 1.0 / bins
    bin_idx = np.minimum((m_abs / width).astype(int), bins - 1)
    records = []
    for target in targets:
        t = float(target)
        if not 0.0 <= t < 1.0:
            raise ValueError(f"contour target {t} outside [0, 1)")
        qualifies = floor > CERT_MARGIN if t == 0.0 else floor >= t
        for b in range(bins):
            center = (b + 0.5) * width
            in_domain = center <= 1.0 - t
            analytic = (1.0 - t * t - center * center) / (2.0 * (1.0 - t)) if in_domain else np.nan
            mask = qualifies & (bin_idx == b)
            count = int(mask.sum())
            empirical = float(p_s[mask].min()) if count else np.nan
            if in_domain and count < MIN_BIN_SAMPLES:
                warnings.warn(
                    f"contour C={t}: bin center {center:.3f} has only {count} "
                    f"qualifying samples",
                    InsufficientSamples,
                    stacklevel=2,
                )
            records.append(
                ContourRecord(
                    target_concurrence=t,
                    m_bin_center=center,
                    min_ps_empirical=empirical,
                    min_ps_analytic=float(analytic),
                    qualifying_count=count,
                )
            )
    return records


def write_contour_csv(records: list[ContourRecord], path, with_reference: bool = False) -> None:
    header = "target_c,m_bin_center,min_ps_empirical,min_ps_analytic"
    if with_reference:
        header += ",min_ps_reference"
    lines = [header]
    for r in records:
        line = (
            f"{r.target_concurrence!r},{r.m_bin_center!r},"
            f"{r.min_ps_empirical!r},{r.min_ps_analytic!r}"
        )
        if with_reference:
            line += f",{reference_min_ps(r.target_concurrence)!r}"
        lines.append(line)
    Path(path).write_text("\n".join(lines) + "\n")


def _parse_m(text: str) -> np.ndarray:
    parts = [float(x) for x in text.split(",")]
    if len(parts) == 1:
        return np.array([0.0, 0.0, parts[0]])
    if len(parts) == 3:
        return np.array(parts)
    raise ValueError("--m takes one value or three comma-separated components")


def _cmd_witness(args) -> int:
    mode = MODE_FULL if args.mode == "full" else MODE_Z
    try:
        obs = Observables(args.ps, _parse_m(args.m))
        verdict = witness(obs, mode=mode)
    except (Unphysical, ValueError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    doc = {
        "p_s": obs.singlet_fraction,
        "m_used": obs.m_abs if mode == MODE_FULL else abs(float(obs.magnetisation[2])),
        "mode": verdict.mode,
        "physical": verdict.physical,
        "singlet_bound_value": verdict.singlet_bound_value,
        "min_concurrence": verdict.min_concurrence,
        "entangled_certified": verdict.entangled_certified,
    }
    _emit(json.dumps(doc, indent=2), args.output)
    return 0 if verdict.entangled_certified else 1


def _cmd_concurrence(args) -> int:
    try:
        rho = load_state(args.state)
    except Exception as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    res = wootters_concurrence(rho)
    doc = {"concurrence": res.concurrence, "lambdas": [float(x) for x in res.lambdas]}
    _emit(json.dumps(doc, indent=2), args.output)
    return 0


def _cmd_twirl(args) -> int:
    try:
        rho = load_state(args.state)
    except Exception as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    spun = twirl_analytic(rho)
    if args.output:
        save_state(spun, args.output, basis=args.basis)
    else:
        print(json.dumps(state_to_dict(spun, basis=args.basis), indent=2))
    return 0


def _cmd_sample(args) -> int:
    records = generate_samples(
        args.family, args.seed, args.count, threads=args.threads,
        max_components=args.max_components,
    )
    try:
        write_sample_csv(records, args.output)
    except OSError as exc:
        print(f"error: cannot write {args.output}: {exc}", file=sys.stderr)
        return 2
    return 0


def _cmd_contour(args) -> int:
    targets = [float(x) for x in args.targets.split(",") if x.strip() != ""]
    try:
        records = extract_contours(
            targets, args.seed, args.samples, args.bins, threads=args.threads
        )
        write_contour_csv(records, args.output, with_reference=args.with_reference)
    except OSError as exc:
        print(f"error: cannot write {args.output}: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


def _cmd_verify(args) -> int:
    results = run_checks(
        seed=args.seed, samples=args.samples, ginibre_samples=args.ginibre_samples
    )
    failed = [r for r in results if not r.passed]
    for r in results:
        tag = "PASS" if r.passed else "FAIL"
        print(f"[{tag}] {r.name:26s} {r.detail}")
    if failed:
        print(f"{len(failed)} check(s) failed:", file=sys.stderr)
        for r in failed:
            print(f"  {r.name}: worst violation {r.worst:.3e}", file=sys.stderr)
        return 1
    print(f"all {len(results)} checks passed")
    return 0


def _emit(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text + "\n")
    else:
        print(text)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0, help="base RNG seed")
    common.add_argument("--output", type=str, default=None, help="output file path")
    common.add_argument("--threads", type=int, default=1, help="worker pool size")

    parser = argparse.ArgumentParser(
        prog="spinwitness",
        description="Certify pairwise spin entanglement from singlet fraction "
        "and magnetisation.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("witness", parents=[common], help="evaluate the witness")
    p.add_argument("--ps", type=float, required=True, help="singlet fraction")
    p.add_argument("--m", type=str, required=True,
                   help="magnetisation: |m| (full mode), m_z (z mode), or 'mx,my,mz'")
    p.add_argument("--mode", choices=("full", "z"), default="full")
    p.set_defaults(fn=_cmd_witness)

    p = sub.add_parser("concurrence", parents=[common], help="concurrence of a state file")
    p.add_argument("state", type=str, help="state JSON file")
    p.set_defaults(fn=_cmd_concurrence)

    p = sub.add_parser("twirl", parents=[common], help="rotation-average a state file")
    p.add_argument("state", type=str, help="state JSON file")
    p.add_argument("--basis", choices=("computational", "coupled"), default="computational")
    p.set_defaults(fn=_cmd_twirl)

    p = sub.add_parser("sample", parents=[common], help="sample states to CSV")
    p.add_argument("--count", type=int, default=5000)
    p.add_argument("--family", choices=FAMILIES, default="spun")
    p.add_argument("--max-components", type=int, default=4,
                   help="components per separable mixture")
    p.set_defaults(fn=_cmd_sample)

    p = sub.add_parser("contour", parents=[common], help="empirical contour extraction")
    p.add_argument("--targets", type=str, default="0.2,0.5,0.8",
                   help="comma-separated concurrence targets in [0,1)")
    p.add_argument("--bins", type=int, default=50, help="m bins over [0,1]")
    p.add_argument("--samples", type=int, default=100000)
    p.add_argument("--with-reference", action="store_true",
                   help="append the fidelity-witness reference column")
    p.set_defaults(fn=_cmd_contour)

    p = sub.add_parser("verify", parents=[common], help="run the invariant suite")
    p.add_argument("--samples", type=int, default=100000)
    p.add_argument("--ginibre-samples", type=int, default=10000)
    p.set_defaults(fn=_cmd_verify)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    for name in ("sample", "contour"):
        if args.command == name and not args.output:
            print(f"error: {name} requires --output", file=sys.stderr)
            return 2
    return args.fn(args)


def entry() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entry()
