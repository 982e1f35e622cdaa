"""Command-line front end.

Every verb maps to one library entry point. Results go to stdout as text, or
as JSON with --json; diagnostics go to stderr through logging.
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import Callable, Optional, Sequence

from ..combinat.formats import parse_key, parse_permutation, parse_tableau, render_tableau
from ..combinat.permutations import box, triangle
from ..combinat.tableaux import Tableau, box_tab, count_indecomposable, plactic_class, rsk, triangle_tab
from ..config import EngineConfig
from ..errors import InvalidInputError, PosetConstructionError, ResourceGuardError
from ..hopf.base import LinComb
from ..hopf.linear import coproduct, multiply
from ..hopf.monomial import m_structure_constants_tab, monomial_element, to_monomial
from ..hopf.permutations import count_indecomposable_perm, primitive_basis_perm, shifted_shuffle_perm
from ..hopf.tableaux import primitive_basis_tab, shifted_shuffle_tab
from ..poset.base import write_edge_list
from ..poset.builders import poset_for, taskin_poset, weak_order_poset
from ..verify.registry import create_default_registry
from .rendering import (
    dump_json,
    ordered_terms,
    published_mismatches,
    render_mismatch,
    render_ordered_expansion,
    render_value,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VERIFICATION = 2
EXIT_GUARD = 3

Handler = Callable[[argparse.Namespace, EngineConfig], int]


def _emit(config: EngineConfig, args: argparse.Namespace, text: str, data) -> None:
    if config.json_output:
        print(dump_json(data))
    else:
        print(text)


def _key(text: str, args: argparse.Namespace):
    return parse_key(text, getattr(args, "tableaux", False))


def _same_type(x, y) -> None:
    if type(x) is not type(y):
        raise InvalidInputError(f"Cannot combine {x} and {y}: one is a permutation, the other a tableau")


def _cmd_rsk(args: argparse.Namespace, config: EngineConfig) -> int:
    sigma = parse_permutation(args.permutation)
    P, Q = rsk(sigma)
    text = "\n".join([
        f"P = {P}",
        render_tableau(P, config.french),
        f"Q = {Q}",
        render_tableau(Q, config.french),
    ])
    _emit(config, args, text, {"permutation": sigma, "P": P, "Q": Q})
    return EXIT_OK


def _cmd_class(args: argparse.Namespace, config: EngineConfig) -> int:
    T = parse_tableau(args.tableau)
    config.check_enumeration_rank(len(T))
    members = plactic_class(T)
    _emit(config, args, "\n".join(str(w) for w in members), members)
    return EXIT_OK


def _cmd_product(args: argparse.Namespace, config: EngineConfig) -> int:
    x, y = _key(args.x, args), _key(args.y, args)
    _same_type(x, y)
    n = len(x) + len(y)
    if args.operation == "box":
        result = box_tab(x, y) if isinstance(x, Tableau) else box(x, y)
    elif args.operation == "triangle":
        result = triangle_tab(x, y) if isinstance(x, Tableau) else triangle(x, y)
    elif args.operation == "shuffle":
        if isinstance(x, Tableau):
            config.check_poset_rank(n)
            result = shifted_shuffle_tab(x, y)
        else:
            result = shifted_shuffle_perm(x, y)
    else:
        config.check_enumeration_rank(n)
        result = multiply(LinComb.term(x), LinComb.term(y))
    _emit(config, args, render_value(result, config.french, args.ascii), result)
    return EXIT_OK


def _cmd_coproduct(args: argparse.Namespace, config: EngineConfig) -> int:
    x = _key(args.key, args)
    result = coproduct(LinComb.term(x))
    _emit(config, args, result.to_text(ascii=args.ascii), result)
    return EXIT_OK


def _cmd_mobius(args: argparse.Namespace, config: EngineConfig) -> int:
    config.check_poset_rank(args.n)
    x, y = _key(args.x, args), _key(args.y, args)
    _same_type(x, y)
    for key in (x, y):
        if len(key) != args.n:
            raise InvalidInputError(f"{key} does not have rank {args.n}")
    value = poset_for(x).mobius(x, y)
    _emit(config, args, str(value), {"x": x, "y": y, "mobius": value})
    return EXIT_OK


def _cmd_mbasis(args: argparse.Namespace, config: EngineConfig) -> int:
    x = _key(args.key, args)
    config.check_poset_rank(len(x))
    if args.to_monomial:
        result = to_monomial(LinComb.term(x))
    else:
        result = monomial_element(x)
    _emit(config, args, result.to_text(), result)
    return EXIT_OK


def _cmd_primitives(args: argparse.Namespace, config: EngineConfig) -> int:
    config.check_enumeration_rank(args.n)
    if args.n < 1:
        raise InvalidInputError(f"Rank must be at least 1, got {args.n}")
    keys = primitive_basis_perm(args.n) if args.permutations else primitive_basis_tab(args.n)
    _emit(config, args, "\n".join(str(k) for k in keys), keys)
    return EXIT_OK


def _cmd_count_indec(args: argparse.Namespace, config: EngineConfig) -> int:
    config.check_enumeration_rank(args.nmax)
    count = count_indecomposable_perm if args.permutations else count_indecomposable
    counts = [count(n) for n in range(1, args.nmax + 1)]
    _emit(config, args, " ".join(str(c) for c in counts), counts)
    return EXIT_OK


def _cmd_saliola(args: argparse.Namespace, config: EngineConfig) -> int:
    A = parse_tableau("123/")
    result = m_structure_constants_tab(A, A)
    mismatches = published_mismatches(result)
    for mismatch in mismatches:
        logger.warning(f"Coefficient of {mismatch['key']} differs from the published value, needs review")
    text = "\n".join([render_ordered_expansion(result)] + [render_mismatch(m) for m in mismatches])
    data = {
        "terms": [{"coeff": c, "key": label} for label, c in ordered_terms(result)],
        "mismatches": mismatches,
    }
    _emit(config, args, text, data)
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace, config: EngineConfig) -> int:
    config.check_poset_rank(args.nmax)
    registry = create_default_registry(seed=config.seed)
    if args.suite == "list":
        described = registry.describe()
        text = "\n".join(f"{name}: {description}" for name, description in described)
        _emit(config, args, text, [{"name": name, "description": description} for name, description in described])
        return EXIT_OK
    if args.suite == "all":
        results = registry.run_all(args.nmax)
    else:
        results = [registry.run(args.suite, args.nmax)]
    text = "\n".join(r.summary() for r in results)
    _emit(config, args, text, [r.to_json() for r in results])
    return EXIT_OK if all(r.passed for r in results) else EXIT_VERIFICATION


def _cmd_poset(args: argparse.Namespace, config: EngineConfig) -> int:
    config.check_poset_rank(args.n)
    poset = taskin_poset(args.n) if args.tableaux else weak_order_poset(args.n)
    if args.export:
        count = write_edge_list(poset, Path(args.export))
        _emit(config, args, f"Wrote {count} cover relations to {args.export}", {"path": args.export, "covers": count})
    else:
        data = {"elements": poset.elements, "covers": [list(edge) for edge in poset.hasse_edges]}
        _emit(config, args, "\n".join(poset.export_lines()), data)
    return EXIT_OK


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--french", action="store_true", help="draw tableaux with row 1 at the bottom")
    common.add_argument("--ascii", action="store_true", help="write tensors as x(x)y")
    common.add_argument("--force", action="store_true", help="accept ranks above the soft limits")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized checks")
    common.add_argument("-v", "--verbose", action="count", default=0, help="-v for progress, -vv for debug")
    common.add_argument("--log-file", default=None, help="also record warnings and errors in this file")
    return common


def build_parser() -> argparse.ArgumentParser:
    """The argument parser for every verb."""
    common = _common_options()
    parser = argparse.ArgumentParser(
        prog="plactic-hopf",
        description="Exact computations in the Hopf algebras of permutations and standard tableaux.",
    )
    verbs = parser.add_subparsers(dest="verb", metavar="VERB", required=True)

    def verb(name: str, handler: Handler, help: str) -> argparse.ArgumentParser:
        sub = verbs.add_parser(name, parents=[common], help=help, description=help)
        sub.set_defaults(handler=handler, parser=sub)
        return sub

    sub = verb("rsk", _cmd_rsk, "insertion and recording tableaux of a permutation")
    sub.add_argument("permutation")

    sub = verb("class", _cmd_class, "permutations whose insertion tableau is the given tableau")
    sub.add_argument("tableau")

    sub = verb("product", _cmd_product, "product of two permutations or two tableaux")
    operation = sub.add_mutually_exclusive_group()
    operation.add_argument("--star", dest="operation", action="store_const", const="star",
                           help="destandardized concatenation (default)")
    operation.add_argument("--box", dest="operation", action="store_const", const="box",
                           help="right shifted concatenation")
    operation.add_argument("--triangle", dest="operation", action="store_const", const="triangle",
                           help="left shifted concatenation")
    operation.add_argument("--shuffle", dest="operation", action="store_const", const="shuffle",
                           help="shifted shuffle")
    sub.set_defaults(operation="star")
    sub.add_argument("--tableaux", action="store_true", help="read keys without '/' as tableaux")
    sub.add_argument("x")
    sub.add_argument("y")

    sub = verb("coproduct", _cmd_coproduct, "coproduct of a permutation or tableau")
    sub.add_argument("--tableaux", action="store_true", help="read the key as a tableau")
    sub.add_argument("key")

    sub = verb("mobius", _cmd_mobius, "Möbius function of the weak order or the Taskin order")
    sub.add_argument("--tableaux", action="store_true", help="read keys as tableaux")
    sub.add_argument("n", type=int)
    sub.add_argument("x")
    sub.add_argument("y")

    sub = verb("mbasis", _cmd_mbasis, "M_b expanded in the fundamental basis")
    sub.add_argument("--tableaux", action="store_true", help="read the key as a tableau")
    sub.add_argument("--to-monomial", action="store_true",
                     help="express the basis element in the M basis instead")
    sub.add_argument("key")

    sub = verb("primitives", _cmd_primitives, "indexes of the M elements spanning the primitives of rank n")
    sub.add_argument("--permutations", action="store_true", help="list permutations instead of tableaux")
    sub.add_argument("n", type=int)

    sub = verb("count-indec", _cmd_count_indec, "numbers of indecomposable tableaux of ranks 1..nmax")
    sub.add_argument("--permutations", action="store_true", help="count permutations instead of tableaux")
    sub.add_argument("nmax", type=int)

    verb("saliola", _cmd_saliola, "M_{P(123)} * M_{P(123)}, which has negative coefficients")

    sub = verb("verify", _cmd_verify, "run an invariant suite, or all of them")
    sub.add_argument("suite", help="suite name, 'all', or 'list' to describe the suites")
    sub.add_argument("--nmax", type=int, default=5)

    sub = verb("poset", _cmd_poset, "cover relations of the weak order or the Taskin order")
    sub.add_argument("--tableaux", action="store_true", help="Taskin order on tableaux")
    sub.add_argument("--export", default=None, metavar="PATH", help="write the edge list to a file")
    sub.add_argument("n", type=int)

    return parser


def parse_args(argv: Optional[Sequence[str]] = None) -> Optional[argparse.Namespace]:
    """Parse arguments; None when argparse rejected them or printed help."""
    try:
        return build_parser().parse_args(argv)
    except SystemExit as exc:
        if exc.code:
            return None
        raise


def dispatch(args: argparse.Namespace) -> int:
    """Run the verb selected in args and return the exit status."""
    config = EngineConfig(force=args.force, french=args.french, json_output=args.json, seed=args.seed)
    try:
        return args.handler(args, config)
    except ResourceGuardError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_GUARD
    except PosetConstructionError as e:
        logger.error(f"Order construction failed: {e}")
        return EXIT_VERIFICATION
    except InvalidInputError as e:
        parser = getattr(args, "parser", None)
        if parser is not None:
            parser.print_usage(sys.stderr)
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Parse argv and run the command.

    Args:
        argv: Arguments without the program name; sys.argv[1:] when None.

    Returns:
        0 on success, 1 on a usage error, 2 when a verification fails, 3
        when a rank exceeds a soft limit without --force.
    """
    try:
        args = parse_args(argv)
    except SystemExit:
        return EXIT_OK
    if args is None:
        return EXIT_USAGE
    return dispatch(args)
