"""Command-line front end.

Each subcommand validates its configuration, runs the requested checks,
and emits one JSON report (schema 1).  Reports are deterministic for a
fixed configuration and seed, except for the wall-time fields.  When the
output file already exists the report is appended as a new line, so a
report file is a JSON-lines log of runs.

Exit codes: 0 all checks passed, 1 a verified property failed (the record
carries the counterexample), 2 invalid configuration or a size guard.
"""

import argparse
import json
import os
import sys
import time

from .covers import (
    build_cover,
    d_primitive_predicate,
    gaschutz_check,
    isotypic_invariants,
    isotypic_projection_check,
    nonkernel_predicate,
    orbit_span_rank,
    quotient_from_bundle,
    quotient_from_json,
)
from .errors import CoverhomError, InvalidConfig, PropertyViolation, TooLarge
from .nonvanishing import build_nonvanishing, classify, minimal_k, verify_nonvanishing
from .units import verify_power_character
from .witness import (
    assemble_witness_free,
    assemble_witness_surface,
    crt_lift,
    verify_quat_power_identity,
    verify_relator_kill,
    verify_witness,
)

SCHEMA = 1


def _default_jobs():
    return int(os.environ.get("COVERHOM_JOBS", "1"))


def _timed(checks, fn, *args, **kwargs):
    t0 = time.perf_counter()
    try:
        record = fn(*args, **kwargs)
    except PropertyViolation as exc:
        checks.append(
            {
                "name": getattr(fn, "__name__", "check"),
                "status": "fail",
                "details": {
                    "error": str(exc),
                    "counterexample": getattr(exc, "counterexample", None),
                },
                "wall_time_s": round(time.perf_counter() - t0, 6),
            }
        )
        return None
    record["wall_time_s"] = round(time.perf_counter() - t0, 6)
    checks.append(record)
    return record


def _emit(report, out_path):
    text = json.dumps(report, sort_keys=True)
    if out_path in (None, "-"):
        print(text)
    else:
        mode = "a" if os.path.exists(out_path) else "w"
        with open(out_path, mode) as fh:
            fh.write(text + "\n")


def _finish(args, command, config, checks):
    report = {
        "schema": SCHEMA,
        "command": command,
        "config": config,
        "checks": checks,
    }
    _emit(report, args.out)
    return 1 if any(c["status"] == "fail" for c in checks) else 0


# ---------------------------------------------------------------------------
# subcommands


def cmd_nvpoly(args):
    k = args.k if args.k is not None else minimal_k(args.r, args.n)
    poly = build_nonvanishing(args.r, args.n, k)
    checks = []
    record = _timed(checks, verify_nonvanishing, poly, args.guard_points)
    parts = classify(poly)
    checks.append(
        {
            "name": "classification",
            "status": "pass",
            "details": {t.value: sub.render() for t, sub in parts.items() if sub.terms},
            "wall_time_s": 0.0,
        }
    )
    config = {"r": args.r, "n": args.n, "k": k}
    report_extra = {"polynomial": poly.render(), "degree": poly.total_degree()}
    checks.insert(0, {"name": "polynomial", "status": "pass", "details": report_extra, "wall_time_s": 0.0})
    return _finish(args, "nvpoly", config, checks)


def cmd_verify_free(args):
    bundle = assemble_witness_free(args.r, args.n, args.k, args.variant)
    spec = bundle.components[0].factors[0].spec
    poly = bundle.components[0].poly
    checks = []
    _timed(checks, verify_nonvanishing, poly)
    _timed(
        checks,
        verify_power_character,
        spec,
        poly,
        exhaustive=True,
        samples=args.samples,
        seed=args.seed,
        assert_nonzero=True,
    )
    _timed(
        checks,
        verify_witness,
        bundle,
        exhaustive=True,
        samples=max(args.samples // 10, 10),
        seed=args.seed,
        jobs=args.jobs,
    )
    config = {
        "r": args.r,
        "n": args.n,
        "k": bundle.components[0].k,
        "variant": args.variant,
        "samples": args.samples,
        "seed": args.seed,
    }
    return _finish(args, "verify-free", config, checks)


def cmd_verify_surface(args):
    bundle = assemble_witness_surface(args.r, args.genus, args.k)
    comp = bundle.components[0]
    checks = []
    _timed(checks, verify_nonvanishing, comp.poly)
    _timed(checks, verify_relator_kill, (args.r,), (comp.k,))
    _timed(
        checks,
        verify_quat_power_identity,
        args.r,
        comp.k,
        samples=min(args.samples, 1000),
        seed=args.seed,
    )
    _timed(
        checks,
        verify_witness,
        bundle,
        exhaustive=args.classes == "full",
        samples=args.samples if args.classes != "full" else min(args.samples, 20),
        sample_len=5,
        seed=args.seed,
        jobs=args.jobs,
    )
    config = {
        "r": args.r,
        "genus": args.genus,
        "k": comp.k,
        "classes": args.classes,
        "samples": args.samples,
        "seed": args.seed,
    }
    return _finish(args, "verify-surface", config, checks)


def cmd_cover_report(args):
    with open(args.quotient) as fh:
        quotient = quotient_from_json(json.load(fh))
    cover = build_cover(quotient, guard_vertices=args.guard_vertices)
    checks = []
    _timed(checks, gaschutz_check, cover, args.seed)
    if args.orbit:
        if args.orbit == "d-primitive":
            predicate = d_primitive_predicate(args.d)
        elif args.orbit == "theta-nonkernel":
            with open(args.theta) as fh:
                predicate = nonkernel_predicate(quotient_from_json(json.load(fh)))
        else:
            predicate = lambda word: True

        def orbit_rank():
            if cover.dim_h1(args.seed) > args.guard_dim:
                raise TooLarge(
                    f"dim H1 = {cover.dim_h1(args.seed)} exceeds --guard-dim {args.guard_dim}"
                )
            rank, dim = orbit_span_rank(cover, predicate, args.max_word_len, seed=args.seed)
            return {
                "name": "orbit-span",
                "status": "pass",
                "details": {
                    "orbit": args.orbit,
                    "max_word_len": args.max_word_len,
                    "rank": rank,
                    "dim_h1": dim,
                    "proper_subspace": rank < dim,
                },
            }

        _timed(checks, orbit_rank)
    config = {
        "quotient": args.quotient,
        "orbit": args.orbit,
        "d": args.d,
        "max_word_len": args.max_word_len,
        "seed": args.seed,
    }
    return _finish(args, "cover-report", config, checks)


def cmd_witness_e2e(args):
    if args.d is not None and args.d != args.r:
        raise InvalidConfig("the end-to-end pipeline runs one prime at a time; d = r")
    bundle = assemble_witness_free(args.r, args.n, args.k, args.variant)
    checks = []
    _timed(
        checks,
        verify_witness,
        bundle,
        exhaustive=True,
        samples=50,
        seed=args.seed,
    )
    quotient = quotient_from_bundle(bundle)
    cover = build_cover(quotient, guard_vertices=args.guard_vertices)
    _timed(checks, gaschutz_check, cover, args.seed)
    _timed(checks, isotypic_invariants, cover, bundle, samples=3, seed=args.seed)
    record = _timed(
        checks,
        isotypic_projection_check,
        cover,
        bundle,
        max_word_len=args.max_word_len,
        basepoint_samples=args.basepoint_samples,
        seed=args.seed,
    )
    if args.orbit_rank:
        import random

        from .covers import d_primitive_predicate, orbit_span_rank

        def orbit_rank():
            if cover.dim_h1(args.seed) > args.guard_dim:
                raise TooLarge(
                    f"dim H1 = {cover.dim_h1(args.seed)} exceeds --guard-dim {args.guard_dim}"
                )
            rng = random.Random(args.seed)
            basepoints = [0] + [
                rng.randrange(cover.n_vertices)
                for _ in range(args.orbit_basepoints - 1)
            ]
            rank, dim = orbit_span_rank(
                cover,
                d_primitive_predicate(args.r),
                args.orbit_word_len,
                basepoints=basepoints,
                seed=args.seed,
            )
            if rank >= dim:
                raise PropertyViolation(
                    f"sampled d-primitive span has full rank {rank} = dim H1"
                )
            return {
                "name": "orbit-span",
                "status": "pass",
                "details": {
                    "rank": rank,
                    "dim_h1": dim,
                    "basepoints": len(basepoints),
                    "max_word_len": args.orbit_word_len,
                    "proper_subspace": True,
                },
            }

        _timed(checks, orbit_rank)
    if record is not None:
        checks.append(
            {
                "name": "proper-subspace-certificate",
                "status": "pass",
                "details": {
                    "statement": (
                        "the d-primitive classes lie in the kernel of a "
                        "projection that is nonzero on H1"
                    ),
                    "dim_h1": record["details"]["dim_h1"],
                },
                "wall_time_s": 0.0,
            }
        )
    config = {
        "r": args.r,
        "n": args.n,
        "k": args.k,
        "variant": args.variant,
        "d": args.r,
        "max_word_len": args.max_word_len,
        "seed": args.seed,
    }
    return _finish(args, "witness-e2e", config, checks)


def cmd_crt_lift(args):
    primes = [int(p) for p in args.primes.split(",")]
    bundles = [
        assemble_witness_free(r, args.n, args.k, args.variant) for r in primes
    ]
    lifted = crt_lift(bundles)
    checks = [
        {
            "name": "lift",
            "status": "pass",
            "details": {
                "modulus": lifted.modulus,
                "exponent": lifted.exponent,
                "q": [comp.q for comp in lifted.components],
            },
            "wall_time_s": 0.0,
        }
    ]
    _timed(
        checks,
        verify_witness,
        lifted,
        exhaustive=True,
        samples=args.samples,
        seed=args.seed,
        jobs=args.jobs,
    )
    config = {
        "primes": primes,
        "n": args.n,
        "k": args.k,
        "variant": args.variant,
        "samples": args.samples,
        "seed": args.seed,
    }
    return _finish(args, "crt-lift", config, checks)


# ---------------------------------------------------------------------------
# argument parsing


def build_parser():
    parser = argparse.ArgumentParser(
        prog="coverhom",
        description="exact witnesses for covers with proper d-primitive homology",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--out", default="-", help="report path (default stdout)")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--jobs", type=int, default=_default_jobs())

    p = sub.add_parser("nvpoly", help="build and verify the non-vanishing polynomial")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--guard-points", type=int, default=10 ** 8)
    common(p)
    p.set_defaults(func=cmd_nvpoly)

    p = sub.add_parser("verify-free", help="free-group witness checks")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--variant", choices=("full", "sorted"), default="full")
    p.add_argument("--samples", type=int, default=1000)
    common(p)
    p.set_defaults(func=cmd_verify_free)

    p = sub.add_parser("verify-surface", help="surface-group witness checks")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--classes", choices=("full", "sampled"), default="full")
    p.add_argument("--samples", type=int, default=100)
    common(p)
    p.set_defaults(func=cmd_verify_surface)

    p = sub.add_parser("cover-report", help="dimensions and orbit spans of a cover")
    p.add_argument("--quotient", required=True, help="JSON quotient description")
    p.add_argument("--orbit", choices=("all", "d-primitive", "theta-nonkernel"), default=None)
    p.add_argument("--d", type=int, default=3)
    p.add_argument("--theta", help="JSON quotient for the theta-nonkernel orbit")
    p.add_argument("--max-word-len", type=int, default=4)
    p.add_argument("--guard-vertices", type=int, default=10 ** 5)
    p.add_argument("--guard-dim", type=int, default=20000)
    common(p)
    p.set_defaults(func=cmd_cover_report)

    p = sub.add_parser("witness-e2e", help="end-to-end proper-subspace certificate")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--variant", choices=("full", "sorted"), default="sorted")
    p.add_argument("--d", type=int, default=None)
    p.add_argument("--max-word-len", type=int, default=6)
    p.add_argument("--basepoint-samples", type=int, default=5)
    p.add_argument("--orbit-rank", action="store_true",
                   help="also compute the rank of a sampled d-primitive span directly")
    p.add_argument("--orbit-word-len", type=int, default=5)
    p.add_argument("--orbit-basepoints", type=int, default=6)
    p.add_argument("--guard-vertices", type=int, default=10 ** 5)
    p.add_argument("--guard-dim", type=int, default=20000)
    common(p)
    p.set_defaults(func=cmd_witness_e2e)

    p = sub.add_parser("crt-lift", help="combine witnesses over distinct primes")
    p.add_argument("--primes", required=True, help="comma-separated, e.g. 3,5")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--variant", choices=("full", "sorted"), default="full")
    p.add_argument("--samples", type=int, default=1000)
    common(p)
    p.set_defaults(func=cmd_crt_lift)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InvalidConfig, TooLarge) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except CoverhomError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
