"""Command-line entry point.

Every subcommand prints exactly one JSON-lines record per instance on stdout
with a fixed key set (missing values are null, never absent) and human
diagnostics on stderr. Artifacts written to disk are re-read and re-verified
before the command reports success.

Exit codes: 0 success (verification PASS), 1 usage or input error,
2 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction
from pathlib import Path

from .arboricity import arboricity
from .decompose import (
    DenseParams,
    auto_decompose,
    dense_decompose,
    log_greedy_decompose,
    peel_decompose,
)
from .errors import BmcError, FormatError, OrderConditionError
from .formats import (
    DecFile,
    check_decomposition,
    check_oddcover,
    check_partition,
    format_bm,
    format_bmdec,
    parse_bm,
    parse_bmdec,
)
from .gf2core import BinaryMatroid, rank
from .generators import (
    PRNG_ID,
    InstanceSpec,
    complete_matroid,
    independent_copies,
    random_eulerian,
)
from .oddcover import density_lower_bound, oddcover_via_arboricity, symdiff_reduce
from .oracle import (
    c2_search_is_restricted,
    enumerate_circuits,
    exact_c,
    exact_c2,
    probe_conjectures,
)
from .orbit import compress_even_weight, demonstrate_order_failure, orbit_decompose

REPORT_FIELDS = (
    "instance",
    "n",
    "size",
    "rank",
    "algorithm",
    "circuits",
    "prop4",
    "quotient_bound",
    "arboricity",
    "branch",
    "phase1",
    "phase2",
    "c",
    "c2",
    "c2_restricted",
    "a",
    "conj1",
    "conj2",
    "p",
    "order",
    "seed",
    "out",
    "wall_time_s",
    "verified",
)


class UsageError(BmcError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would exit(2); the contract wants 1
        raise UsageError(message)


def _emit(**values) -> None:
    record = {key: values.get(key) for key in REPORT_FIELDS}
    print(json.dumps(record))


def _read_matroid(path: str) -> BinaryMatroid:
    return parse_bm(Path(path).read_text())


def _write_and_reload(path: str, text: str) -> DecFile:
    Path(path).write_text(text)
    return parse_bmdec(Path(path).read_text())


def _matroid_stats(m: BinaryMatroid) -> dict:
    return {"n": m.dim, "size": len(m), "rank": rank(m)}


def _quotient_bound(m: BinaryMatroid) -> int:
    if len(m) == 0:
        return 0
    return -(-len(m) // (rank(m) + 1))


def build_parser() -> _Parser:
    p = _Parser(prog="bmcircuits", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="generate a .bm instance")
    g.add_argument("--kind", required=True, choices=["complete", "copies", "random"])
    g.add_argument("--n", type=int)
    g.add_argument("--k", type=int)
    g.add_argument("--s", type=int)
    g.add_argument("--size", type=int)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--out", required=True)

    d = sub.add_parser("decompose", help="decompose a matroid into disjoint circuits")
    d.add_argument("--in", dest="infile", required=True)
    d.add_argument("--method", default="auto", choices=["auto", "dense", "log", "peel"])
    d.add_argument("--eps", default="1/2")
    d.add_argument("--exhaustive-limit", type=int, default=20)
    d.add_argument("--out", required=True)

    o = sub.add_parser("oddcover", help="build a circuit odd-cover")
    o.add_argument("--in", dest="infile", required=True)
    o.add_argument("--method", default="arboricity", choices=["arboricity", "reduce"])
    o.add_argument("--exhaustive-limit", type=int, default=20)
    o.add_argument("--out", required=True)

    a = sub.add_parser("arboricity", help="partition into independent sets")
    a.add_argument("--in", dest="infile", required=True)
    a.add_argument("--out", required=True)

    r = sub.add_parser("orbit", help="rotation-orbit decomposition of the even-weight model")
    r.add_argument("--p", type=int)
    r.add_argument("--compress", action="store_true",
                   help="emit (p-1)-dimensional coordinates")
    r.add_argument("--demo-p7", action="store_true",
                   help="show the p = 7 failure orbit and its two circuits")
    r.add_argument("--out")

    c = sub.add_parser("oracle", help="exact values on tiny instances")
    c.add_argument("--in", dest="infile", required=True)
    c.add_argument("--what", required=True, choices=["c", "c2", "circuits", "conjectures"])
    c.add_argument("--exhaustive-limit", type=int, default=20)

    v = sub.add_parser("verify", help="re-verify an emitted artifact")
    v.add_argument("--in", dest="infile", required=True)
    v.add_argument("--against", required=True)
    v.add_argument("--mode", required=True,
                   choices=["decomposition", "oddcover", "partition"])

    b = sub.add_parser("bench", help="run the quick built-in suite")
    b.add_argument("--seed", type=int, default=0)
    return p


def _cmd_gen(args) -> int:
    spec: InstanceSpec
    if args.kind == "complete":
        if args.n is None:
            raise UsageError("gen --kind complete needs --n")
        m = complete_matroid(args.n)
        spec = InstanceSpec("complete", {"n": args.n})
    elif args.kind == "copies":
        if args.k is None or args.s is None:
            raise UsageError("gen --kind copies needs --k and --s")
        m = independent_copies(args.k, args.s)
        spec = InstanceSpec("copies", {"k": args.k, "s": args.s})
    else:
        if args.n is None or args.size is None:
            raise UsageError("gen --kind random needs --n and --size")
        m = random_eulerian(args.n, args.size, args.seed)
        spec = InstanceSpec(
            "random-eulerian",
            {"n": args.n, "size": args.size, "seed": args.seed, "prng": PRNG_ID},
        )
    start = time.perf_counter()
    Path(args.out).write_text(format_bm(m, comments=(f"spec: {spec.header()}",)))
    reloaded = _read_matroid(args.out)
    elapsed = time.perf_counter() - start
    ok = reloaded == m
    _emit(
        instance=spec.header(),
        algorithm="gen",
        seed=args.seed,
        out=args.out,
        wall_time_s=round(elapsed, 6),
        verified=ok,
        **_matroid_stats(m),
    )
    return 0 if ok else 2


def _cmd_decompose(args) -> int:
    m = _read_matroid(args.infile)
    eps = Fraction(args.eps)
    start = time.perf_counter()
    if args.method == "auto":
        dec = auto_decompose(m, eps)
    elif args.method == "dense":
        dec = dense_decompose(m, DenseParams.from_epsilon(eps))
    elif args.method == "log":
        dec = log_greedy_decompose(m)
    else:
        dec = peel_decompose(m)
    elapsed = time.perf_counter() - start
    meta = {"branch": dec.branch, "phase1": dec.phase1, "phase2": dec.phase2}
    text = format_bmdec(
        "circuits", m.dim, [c.elements for c in dec.circuits], meta=meta
    )
    reloaded = _write_and_reload(args.out, text)
    reason = check_decomposition(m, reloaded)
    bound = _quotient_bound(m)
    if reason is None and len(dec.circuits) < bound:
        reason = "circuit count below the quotient lower bound (verifier bug)"
    if reason is not None:
        print(f"verification failed: {reason}", file=sys.stderr)
    prop4 = (
        density_lower_bound(m, args.exhaustive_limit) if len(m) else 0
    )
    _emit(
        instance=Path(args.infile).stem,
        algorithm=f"decompose-{args.method}",
        circuits=len(dec.circuits),
        prop4=prop4,
        quotient_bound=bound,
        branch=dec.branch,
        phase1=dec.phase1,
        phase2=dec.phase2,
        out=args.out,
        wall_time_s=round(elapsed, 6),
        verified=reason is None,
        **_matroid_stats(m),
    )
    return 0 if reason is None else 2


def _cmd_oddcover(args) -> int:
    m = _read_matroid(args.infile)
    start = time.perf_counter()
    if args.method == "arboricity":
        cover = oddcover_via_arboricity(m)
        a_value, _ = arboricity(m)
    else:
        cover = symdiff_reduce(m)
        a_value = None
    elapsed = time.perf_counter() - start
    text = format_bmdec("oddcover", m.dim, [c.elements for c in cover.circuits])
    reloaded = _write_and_reload(args.out, text)
    reason = check_oddcover(m, reloaded)
    if reason is not None:
        print(f"verification failed: {reason}", file=sys.stderr)
    _emit(
        instance=Path(args.infile).stem,
        algorithm=f"oddcover-{args.method}",
        circuits=len(cover.circuits),
        prop4=density_lower_bound(m, args.exhaustive_limit) if len(m) else 0,
        quotient_bound=_quotient_bound(m),
        arboricity=a_value,
        out=args.out,
        wall_time_s=round(elapsed, 6),
        verified=reason is None,
        **_matroid_stats(m),
    )
    return 0 if reason is None else 2


def _cmd_arboricity(args) -> int:
    m = _read_matroid(args.infile)
    start = time.perf_counter()
    a_value, partition = arboricity(m)
    elapsed = time.perf_counter() - start
    text = format_bmdec(
        "indsets", m.dim, [p for p in partition.parts], block_comment="independent-set"
    )
    reloaded = _write_and_reload(args.out, text)
    reason = check_partition(m, reloaded)
    if reason is not None:
        print(f"verification failed: {reason}", file=sys.stderr)
    _emit(
        instance=Path(args.infile).stem,
        algorithm="arboricity",
        arboricity=a_value,
        circuits=len(partition.parts),
        quotient_bound=_quotient_bound(m),
        out=args.out,
        wall_time_s=round(elapsed, 6),
        verified=reason is None,
        **_matroid_stats(m),
    )
    return 0 if reason is None else 2


def _cmd_orbit(args) -> int:
    if args.demo_p7:
        report = demonstrate_order_failure()
        sizes = sorted(len(c) for c in report.parts)
        print(
            f"p=7: order of 2 is {report.order}; orbit of "
            f"{report.orbit[0].bits()} has {len(report.orbit)} elements; "
            f"is_circuit={report.orbit_is_circuit}; splits into circuits of "
            f"sizes {sizes[0]} and {sizes[1]}",
            file=sys.stderr,
        )
        _emit(
            instance="orbit-demo-p7",
            algorithm="orbit-demo",
            p=7,
            order=report.order,
            circuits=2,
            n=7,
            size=len(report.orbit),
            verified=not report.orbit_is_circuit and sizes == [3, 4],
        )
        return 0
    if args.p is None:
        raise UsageError("orbit needs --p or --demo-p7")
    if args.out is None:
        raise UsageError("orbit --p needs --out")
    start = time.perf_counter()
    od = orbit_decompose(args.p)  # OrderConditionError surfaces as input error
    elapsed = time.perf_counter() - start
    model = od.model
    blocks = [c.elements for c in od.orbits]
    if args.compress:
        model = compress_even_weight(model)
        blocks = [
            tuple(sorted(v for v in compress_even_weight(
                BinaryMatroid(od.p, block)).elements))
            for block in blocks
        ]
    text = format_bmdec("circuits", model.dim, blocks, meta={"p": args.p})
    reloaded = _write_and_reload(args.out, text)
    reason = check_decomposition(model, reloaded)
    if reason is not None:
        print(f"verification failed: {reason}", file=sys.stderr)
    _emit(
        instance=f"orbit-p{args.p}",
        algorithm="orbit",
        p=args.p,
        order=args.p - 1,
        circuits=len(od.orbits),
        quotient_bound=_quotient_bound(model),
        out=args.out,
        wall_time_s=round(elapsed, 6),
        verified=reason is None,
        **_matroid_stats(model),
    )
    return 0 if reason is None else 2


def _cmd_oracle(args) -> int:
    m = _read_matroid(args.infile)
    stats = _matroid_stats(m)
    start = time.perf_counter()
    if args.what == "c":
        value = exact_c(m)
        _emit(
            instance=Path(args.infile).stem, algorithm="oracle-c", c=value,
            prop4=density_lower_bound(m, args.exhaustive_limit) if len(m) else 0,
            wall_time_s=round(time.perf_counter() - start, 6),
            verified=True, **stats,
        )
    elif args.what == "c2":
        restricted = c2_search_is_restricted(m)
        value = exact_c2(m)
        _emit(
            instance=Path(args.infile).stem, algorithm="oracle-c2",
            c2=value, c2_restricted=restricted,
            wall_time_s=round(time.perf_counter() - start, 6),
            verified=True, **stats,
        )
    elif args.what == "circuits":
        catalog = enumerate_circuits(m)
        _emit(
            instance=Path(args.infile).stem, algorithm="oracle-circuits",
            circuits=len(catalog.masks),
            wall_time_s=round(time.perf_counter() - start, 6),
            verified=True, **stats,
        )
    else:
        report = probe_conjectures(m)
        record = report.to_dict()
        _emit(
            instance=Path(args.infile).stem, algorithm="oracle-conjectures",
            c=record["c"], c2=record["c2"], c2_restricted=record["c2_restricted"],
            a=record["a"], prop4=record["prop4"],
            conj1=record["conj1"], conj2=record["conj2"],
            wall_time_s=round(time.perf_counter() - start, 6),
            verified="VIOLATION" not in (record["conj1"], record["conj2"]),
            **stats,
        )
        if "VIOLATION" in (record["conj1"], record["conj2"]):
            print("conjecture VIOLATION: inspect this instance", file=sys.stderr)
            return 2
    return 0


def _cmd_verify(args) -> int:
    m = _read_matroid(args.infile)
    dec = parse_bmdec(Path(args.against).read_text())
    checker = {
        "decomposition": check_decomposition,
        "oddcover": check_oddcover,
        "partition": check_partition,
    }[args.mode]
    reason = checker(m, dec)
    if reason is not None:
        print(f"verification failed: {reason}", file=sys.stderr)
    _emit(
        instance=Path(args.infile).stem,
        algorithm=f"verify-{args.mode}",
        circuits=len(dec.blocks),
        verified=reason is None,
        **_matroid_stats(m),
    )
    return 0 if reason is None else 2


def _cmd_bench(args) -> int:
    instances = [
        ("complete-3", complete_matroid(3)),
        ("complete-4", complete_matroid(4)),
        ("complete-5", complete_matroid(5)),
        ("complete-6", complete_matroid(6)),
        ("copies-2x2", independent_copies(2, 2)),
        ("copies-3x2", independent_copies(3, 2)),
        ("copies-2x3", independent_copies(2, 3)),
        ("random-8-20", random_eulerian(8, 20, args.seed)),
        ("random-10-30", random_eulerian(10, 30, args.seed + 1)),
    ]
    failures = 0
    for name, m in instances:
        start = time.perf_counter()
        dec = auto_decompose(m)
        cover = oddcover_via_arboricity(m)
        a_value, _ = arboricity(m)
        elapsed = time.perf_counter() - start
        ok = len(dec.circuits) >= _quotient_bound(m)
        failures += 0 if ok else 1
        _emit(
            instance=name,
            algorithm="bench",
            circuits=len(dec.circuits),
            a=a_value,
            arboricity=a_value,
            branch=dec.branch,
            phase1=dec.phase1,
            phase2=dec.phase2,
            c2=len(cover.circuits),
            quotient_bound=_quotient_bound(m),
            seed=args.seed,
            wall_time_s=round(elapsed, 6),
            verified=ok,
            **_matroid_stats(m),
        )
    return 0 if failures == 0 else 2


_HANDLERS = {
    "gen": _cmd_gen,
    "decompose": _cmd_decompose,
    "oddcover": _cmd_oddcover,
    "arboricity": _cmd_arboricity,
    "orbit": _cmd_orbit,
    "oracle": _cmd_oracle,
    "verify": _cmd_verify,
    "bench": _cmd_bench,
}


def run(argv: list[str]) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return _HANDLERS[args.command](args)
    except OrderConditionError as exc:
        print(f"error: {exc} (computed order {exc.order})", file=sys.stderr)
        return 1
    except (UsageError, FormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except BmcError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
