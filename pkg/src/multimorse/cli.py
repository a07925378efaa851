"""Command-line interface.

Subcommands: sort (print the vertex indexing), match (build and
summarize the acyclic matching), reduce (remove matched pairs, print the
stats table, optionally write the reduced complex), verify (certify
persistence preservation with the homology oracle), stats (input cell
counts). Exit status: 0 success, 1 input/configuration error, 2 failed
verification.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from .pipeline import RunConfig, run

_COMMAND_HELP = {
    "sort": "print vertices in indexing order",
    "match": "build the acyclic matching and print per-dimension counts",
    "reduce": "reduce to critical cells and print the stats table",
    "verify": "reduce and certify persistent ranks against the oracle",
    "stats": "print input cell counts",
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("mesh", help="input mesh file (.off or .obj)")
    source = common.add_mutually_exclusive_group()
    source.add_argument("--preset", choices=["abs-xy"], default="abs-xy",
                        help="measuring function from coordinates "
                             "(default: abs-xy)")
    source.add_argument("--values", metavar="FILE", default=None,
                        help="per-vertex grades file, one line per vertex")
    common.add_argument("--variant", choices=["strict", "weak"],
                        default="strict", help="lower-link variant")
    common.add_argument("--indexing", choices=["lex", "kahn"], default="lex",
                        help="vertex indexing construction")
    common.add_argument("--order", choices=["generation", "dim-desc"],
                        default="generation", help="pair reduction order")
    common.add_argument("--ring", default="z2", metavar="RING",
                        help="coefficient ring: z2, q, z, or zp (default z2)")
    common.add_argument("--qmax", type=int, default=None, metavar="Q",
                        help="top homology dimension to certify")
    common.add_argument("--verify", action="store_true",
                        help="run the oracle after reducing")
    common.add_argument("--max-cells", type=int, default=2000, metavar="N",
                        help="cell cap for whole-complex certification "
                             "(default 2000)")
    common.add_argument("--seed", type=int, default=0,
                        help="seed for submesh sampling (default 0)")
    common.add_argument("--out", metavar="FILE", default=None,
                        help="write the reduced complex here")
    common.add_argument("--threads", type=int, default=1,
                        help="worker threads for matching (default 1)")

    parser = argparse.ArgumentParser(
        prog="multimorse",
        description="Reduce multifiltered simplicial complexes to their "
                    "critical cells, preserving multidimensional "
                    "persistent homology.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, text in _COMMAND_HELP.items():
        sub.add_parser(name, parents=[common], help=text)
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    return RunConfig(
        command=args.command,
        mesh_path=args.mesh,
        values_path=args.values,
        preset=args.preset,
        variant=args.variant,
        indexing=args.indexing,
        order=args.order,
        ring_name=args.ring,
        q_max=args.qmax,
        verify=args.verify,
        max_cells=args.max_cells,
        seed=args.seed,
        out=args.out,
        threads=args.threads,
    )


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return run(config_from_args(args))
    except ValueError as e:
        print(f"multimorse: {e}", file=sys.stderr)
        return 1
    except OSError as e:
        print(f"multimorse: io: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
