"""Command-line entry point for the ternary quadratic solver.

Exit codes: 0 solvable (or verified), 2 provably unsolvable (or not a
solution), 1 invalid input.
"""

import sys
import json
import argparse
import logging
from typing import Any, Dict, List, Optional

from src.config import config
from src.container import Container
from src.logging_config import log_dict, setup_logging
from src.diophantine.errors import InvalidInputError
from src.diophantine.models import NoSolution, SolveResult
from src.diophantine.oracle import brute_force_general, brute_force_normal, residue_table
from src.diophantine.report import build_invalid_report, condition_rows, render_json

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_UNSOLVABLE = 2

# Batch status severity: invalid input outranks a refusal
_SEVERITY = {EXIT_OK: 0, EXIT_UNSOLVABLE: 1, EXIT_INVALID: 2}


def _add_coefficients(parser: argparse.ArgumentParser, required: bool = True) -> None:
    parser.add_argument('--a', type=int, required=required, help='Coefficient of x^2')
    parser.add_argument('--b', type=int, required=required, help='Coefficient of y^2')
    parser.add_argument('--c', type=int, help='Coefficient of z^2; omit for a*x^2 + b*y^2 = z^2')


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(description='Solve a*x^2 + b*y^2 + c*z^2 = 0 in integers')
    parser.add_argument('--max-coeff', type=int, help='Override the coefficient size limit')
    commands = parser.add_subparsers(dest='command', required=True)

    solve = commands.add_parser('solve', help='Solve an equation or certify that it has no solution')
    _add_coefficients(solve, required=False)
    solve.add_argument('--json', action='store_true', help='Print the JSON report')
    solve.add_argument('--trace', action='store_true', help='Print the descent trace')
    solve.add_argument('--residue-table', action='store_true',
                       help='Attach residue tables to a failed condition')
    solve.add_argument('--save', action='store_true', help='Save the JSON report to the output directory')
    solve.add_argument('--stdin-batch', action='store_true',
                       help='Read one JSON equation per line from stdin, write one report per line')

    check = commands.add_parser('check', help='Report the residue conditions')
    _add_coefficients(check)
    check.add_argument('--json', action='store_true', help='Print JSON')

    verify = commands.add_parser('verify', help='Check a proposed solution')
    _add_coefficients(verify)
    verify.add_argument('--x', type=int, required=True)
    verify.add_argument('--y', type=int, required=True)
    verify.add_argument('--z', type=int, required=True)

    oracle = commands.add_parser('oracle', help='Brute-force search for the first solution')
    _add_coefficients(oracle)
    oracle.add_argument('--limit', type=int, default=config.oracle.default_limit,
                        help='Search bound for every component')

    residues = commands.add_parser('residues', help='Quadratic residues modulo m')
    residues.add_argument('--m', type=int, required=True)
    return parser


def _status(result: SolveResult) -> int:
    return EXIT_UNSOLVABLE if isinstance(result, NoSolution) else EXIT_OK


def _print_result(eq, result: SolveResult, show_trace: bool) -> None:
    print(eq)
    if isinstance(result, NoSolution):
        print(f"no solution: {result.failure.message}")
        return
    x, y, z = result.solution.as_tuple()
    print(f"solvable: {x} {y} {z}")
    if not show_trace:
        return
    trace = result.trace
    print(f"normal form: {trace.equation}")
    for step, lifted in zip(trace.steps, trace.lifted):
        a, b = step.after
        print(f"  step {step.index} {step.side.value}: root={step.root} h={step.h} k={step.k} "
              f"A={a} B={b} lifted={lifted.as_tuple()}")
    print(f"  base {trace.base_case.value}: {trace.base_solution.as_tuple()}")
    print(f"  raw {trace.raw_solution.as_tuple()}, bound {trace.bound}, length {trace.length}")


def _solve_one(container: Container, coefficients: Dict[str, Any], args) -> Dict[str, Any]:
    try:
        eq = container.parse_equation(coefficients['a'], coefficients['b'], coefficients.get('c'))
        result = container.solve(eq)
    except InvalidInputError as e:
        return build_invalid_report(coefficients, e)
    return container.build_report(eq, result, args.residue_table)


def _report_status(report: Dict[str, Any]) -> int:
    return {'solvable': EXIT_OK, 'no_solution': EXIT_UNSOLVABLE}.get(report['result'], EXIT_INVALID)


def cmd_solve_batch(container: Container, args, logger) -> int:
    worst = EXIT_OK
    for line in sys.stdin:
        line = line.strip()
        if not line:
            continue
        try:
            data = json.loads(line)
            coefficients = {key: int(data[key]) if data.get(key) is not None else None for key in 'abc'}
            if coefficients['a'] is None or coefficients['b'] is None:
                raise InvalidInputError("a and b are required")
        except (ValueError, TypeError, AttributeError) as e:
            logger.error(f"Malformed batch line {line!r}: {e}")
            report = {'equation': {}, 'form': 'normal', 'result': 'invalid', 'error': str(e)}
        else:
            report = _solve_one(container, coefficients, args)
        print(json.dumps(report))
        status = _report_status(report)
        if _SEVERITY[status] > _SEVERITY[worst]:
            worst = status
    return worst


def cmd_solve(container: Container, args, logger) -> int:
    if args.stdin_batch:
        return cmd_solve_batch(container, args, logger)
    if args.a is None or args.b is None:
        print("invalid input: --a and --b are required", file=sys.stderr)
        return EXIT_INVALID

    coefficients = {'a': args.a, 'b': args.b, 'c': args.c}
    try:
        eq = container.parse_equation(args.a, args.b, args.c)
        result = container.solve(eq)
    except InvalidInputError as e:
        logger.info(f"Invalid input {coefficients}: {e}")
        if args.json:
            print(render_json(build_invalid_report(coefficients, e)))
        else:
            print(f"invalid input: {e}")
        return EXIT_INVALID

    report = container.build_report(eq, result, args.residue_table)
    if args.json:
        print(render_json(report))
    else:
        _print_result(eq, result, args.trace)
        if args.residue_table and 'residue_tables' in report.get('failed_condition', {}):
            for table in report['failed_condition']['residue_tables']:
                print(f"  mod {table['prime']}: residues {{{', '.join(table['residues'])}}}, "
                      f"value is {table['value_residue']}")
    if args.save:
        path = container.save_report(report)
        print(f"saved report to {path}", file=sys.stderr)
    return _status(result)


def cmd_check(container: Container, args, logger) -> int:
    try:
        eq = container.parse_equation(args.a, args.b, args.c)
        conditions = container.check(eq)
    except InvalidInputError as e:
        print(f"invalid input: {e}")
        return EXIT_INVALID

    rows = condition_rows(conditions)
    if args.json:
        data = {'conditions': rows}
        if hasattr(conditions, 'd'):
            data['d'] = str(conditions.d)
        print(json.dumps(data, indent=2))
    else:
        if args.c is not None:
            print(f"canonical: {conditions.a}x^2 + {conditions.b}y^2 + {conditions.c}z^2 = 0")
        for row in rows:
            verdict = f"holds, root {row['root']}" if row['holds'] else "fails"
            print(f"{row['condition']}: {row['value']} R {row['modulus']} {verdict}")
        if hasattr(conditions, 'd'):
            print(f"d = {conditions.d}")
        else:
            print("coefficients are pairwise coprime")
    return EXIT_OK if conditions.holds else EXIT_UNSOLVABLE


def cmd_verify(container: Container, args, logger) -> int:
    try:
        eq = container.parse_equation(args.a, args.b, args.c)
        ok, witnesses = container.verify(eq, args.x, args.y, args.z)
    except InvalidInputError as e:
        print(f"invalid input: {e}")
        return EXIT_INVALID

    if not ok:
        print(f"({args.x}, {args.y}, {args.z}) is not a nontrivial solution of {eq}")
        return EXIT_UNSOLVABLE
    print(f"({args.x}, {args.y}, {args.z}) solves {eq}")
    if witnesses is not None:
        for row in condition_rows(witnesses):
            print(f"  {row['condition']}: {row['value']} R {row['modulus']} root {row['root']}")
    return EXIT_OK


def cmd_oracle(container: Container, args, logger) -> int:
    if args.limit < 1:
        print("invalid input: --limit must be >= 1")
        return EXIT_INVALID
    if args.c is None:
        hit = brute_force_normal(args.a, args.b, args.limit)
    else:
        hit = brute_force_general(args.a, args.b, args.c, args.limit)
    if hit is None:
        print(f"no solution with components up to {args.limit}")
        return EXIT_UNSOLVABLE
    print(f"first solution: {hit.x} {hit.y} {hit.z}")
    return EXIT_OK


def cmd_residues(container: Container, args, logger) -> int:
    if args.m < 1:
        print("invalid input: --m must be >= 1")
        return EXIT_INVALID
    print(' '.join(str(r) for r in sorted(residue_table(args.m))))
    return EXIT_OK


COMMANDS = {
    'solve': cmd_solve,
    'check': cmd_check,
    'verify': cmd_verify,
    'oracle': cmd_oracle,
    'residues': cmd_residues,
}


def main(argv: Optional[List[str]] = None) -> int:
    """Main entry point."""
    args = build_parser().parse_args(argv)
    logger = setup_logging()

    container = Container(max_coeff=args.max_coeff)
    log_dict(logger, logging.DEBUG, f"Running {args.command}", vars(args))
    try:
        return COMMANDS[args.command](container, args, logger)
    except Exception as e:
        logger.error(f"Error during {args.command}: {e}")
        raise


if __name__ == '__main__':
    sys.exit(main())
