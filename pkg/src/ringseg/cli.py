"""Command-line interface: ``ringseg <subcommand> ...``.

Exit status is 0 on success, 1 on domain errors (bad files, incompatible
images, out-of-range rows) and 2 on usage errors.
"""

import argparse
import sys

from .shannon import entropy, histogram
from .exceptions import RingsegError
from .fileio import (HISTOGRAM_HEADER, PROFILE_HEADER, emit_csv,
                     extract_profile, read_pgm, write_pgm, write_trace)
from .mean_shift import PROFILES, FilterConfig, filter_pass
from .metrics import ned, we_index
from .mshi import DEFAULT_EPSILON, MshiConfig, StoppingCriterion, run as run_mshi
from .ring_image import (ScalarImage, ring_add, ring_mul, ring_neg, ring_sub,
                         saturating_add, saturating_sub)

RING_OPS = ("add", "sub", "neg", "mul", "sat-add", "sat-sub")


def _bandwidth(text):
    value = float(text)
    if not value >= 1:
        raise argparse.ArgumentTypeError(f"bandwidth must be >= 1, got {text}")
    return value


def _positive_float(text):
    value = float(text)
    if not value > 0:
        raise argparse.ArgumentTypeError(f"must be positive, got {text}")
    return value


def _positive_int(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {text}")
    return value


def _modulus(text):
    value = int(text)
    if not 2 <= value <= 65536:
        raise argparse.ArgumentTypeError(f"modulus must be in [2, 65536], got {text}")
    return value


def build_parser():
    parser = argparse.ArgumentParser(
        prog="ringseg",
        description="Ring-algebra image metrics and iterative mean-shift segmentation.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--modulus", type=_modulus, default=None,
                        help="number of gray levels (default: maxval + 1 of the file)")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True

    p = sub.add_parser("entropy", parents=[common], help="print image entropy in bits")
    p.add_argument("image")

    p = sub.add_parser("histogram", parents=[common], help="write level,count CSV")
    p.add_argument("image")
    p.add_argument("-o", "--output", default="-", help="CSV path (default: stdout)")

    for name, help_text in (("ned", "Natural Entropy Distance between two images"),
                            ("we", "weak-entropy index between two images")):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument("first")
        p.add_argument("second")

    p = sub.add_parser("ringop", parents=[common],
                       help="apply a scalar ring or saturating operation")
    p.add_argument("image")
    p.add_argument("output")
    p.add_argument("--op", choices=RING_OPS, required=True)
    p.add_argument("--scalar", type=int, default=0)

    filter_flags = argparse.ArgumentParser(add_help=False)
    filter_flags.add_argument("--hs", type=_bandwidth, default=15.0,
                              help="spatial bandwidth (default: 15)")
    filter_flags.add_argument("--hr", type=_bandwidth, default=12.0,
                              help="range bandwidth (default: 12)")
    filter_flags.add_argument("--profile-kernel", "--profile", dest="kernel",
                              choices=PROFILES, default="uniform")

    p = sub.add_parser("filter", parents=[common, filter_flags],
                       help="one mean-shift filtering pass")
    p.add_argument("image")
    p.add_argument("output")

    p = sub.add_parser("segment", parents=[common, filter_flags],
                       help="iterative mean-shift segmentation")
    p.add_argument("image")
    p.add_argument("output")
    p.add_argument("--criterion", choices=("ned", "we"), default="ned")
    p.add_argument("--epsilon", type=_positive_float, default=None,
                   help="stopping threshold (default: 0.9 for ned, 0.01 for we)")
    p.add_argument("--max-iter", type=_positive_int, default=50)
    p.add_argument("--trace", default=None, help="write the convergence trace CSV here")

    p = sub.add_parser("profile", parents=[common], help="write one row as col,value CSV")
    p.add_argument("image")
    p.add_argument("--row", type=int, required=True)
    p.add_argument("-o", "--output", default="-")
    return parser


def _load(path, args):
    return read_pgm(path, modulus=args.modulus)


def _ringop(image, op, s):
    if op == "neg":
        return ring_neg(image)
    if op.startswith("sat-"):
        if not 0 <= s < image.modulus:
            raise ValueError(f"saturating scalar must lie in [0, {image.modulus - 1}]")
        fn = saturating_add if op == "sat-add" else saturating_sub
        return fn(image, ScalarImage.like(image, s))
    fn = {"add": ring_add, "sub": ring_sub, "mul": ring_mul}[op]
    return fn(image, ScalarImage.like(image, s))


def _dispatch(args):
    cmd = args.command
    if cmd == "entropy":
        print(f"{entropy(_load(args.image, args)):.12f}")
    elif cmd == "histogram":
        emit_csv(histogram(_load(args.image, args)).records(), args.output,
                 HISTOGRAM_HEADER)
    elif cmd in ("ned", "we"):
        fn = ned if cmd == "ned" else we_index
        print(f"{fn(_load(args.first, args), _load(args.second, args)):.12f}")
    elif cmd == "ringop":
        write_pgm(_ringop(_load(args.image, args), args.op, args.scalar), args.output)
    elif cmd == "filter":
        cfg = FilterConfig(args.hs, args.hr, args.kernel)
        write_pgm(filter_pass(_load(args.image, args), cfg), args.output)
    elif cmd == "segment":
        kind = "weak_entropy" if args.criterion == "we" else "ned"
        epsilon = args.epsilon if args.epsilon is not None else DEFAULT_EPSILON[kind]
        cfg = MshiConfig(FilterConfig(args.hs, args.hr, args.kernel),
                         StoppingCriterion(kind, epsilon), args.max_iter)
        result = run_mshi(_load(args.image, args), cfg)
        write_pgm(result.segmented, args.output)
        if args.trace:
            write_trace(result.trace, args.trace)
        last = result.trace.records[-1].criterion_value
        print(f"iterations={len(result.trace)} last_criterion={last:.12g} "
              f"hit_cap={str(result.hit_cap).lower()}", file=sys.stderr)
    elif cmd == "profile":
        line = extract_profile(_load(args.image, args), args.row)
        emit_csv(line.records(), args.output, PROFILE_HEADER)
    return 0


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return _dispatch(args)
    except (RingsegError, OSError, ValueError, IndexError) as exc:
        print(f"ringseg: error: {exc}", file=sys.stderr)
        return 1


def run():
    sys.exit(main())


if __name__ == "__main__":
    run()
