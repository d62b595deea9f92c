"""
The ltaction command line:

    ltaction act     compute g.u1 or g.u / u as a coefficient table or a json document
    ltaction trees   enumerate the labelled trees of one weight, with their indices
    ltaction verify  run the named verification suites
"""
from __future__ import annotations

import contextlib
import json
import logging
import sys
from itertools import chain
from pathlib import Path
from typing import Optional, Tuple

import click
from sympy import factorint

from series import PrecisionBudgetExceeded
from stabilizer import (ActionDriver, ActionResult, GroupElem, Target, act_u, act_u1, witt_act_u, witt_act_u1,
                        ResidueDegreeError, OracleMismatchError, IntegralityError, UnknownMethodError)
from trees import EnumerationCeilingExceeded, enumerate_trees, index, summed_index
from witt import (ExpressionSyntaxError, InvalidParamsError, NonUnitError, ParamsMismatchError, WittElem,
                  make_params, parse_elem)
from .config import AUTO, FORMATS, WITT_ALT, RunConfig
from .logger import run_log
from .output import census_document, render_census, render_json, render_table
from .verify import ALL, SUITES, run_suite

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_USAGE = 2
EXIT_SYNTAX = 3
EXIT_PARITY_OR_UNIT = 4
EXIT_PRECISION = 5
EXIT_CEILING = 6
EXIT_ORACLE = 7

EXIT_CODES = (
    ((ExpressionSyntaxError,), EXIT_SYNTAX),
    ((ResidueDegreeError, NonUnitError), EXIT_PARITY_OR_UNIT),
    ((PrecisionBudgetExceeded,), EXIT_PRECISION),
    ((EnumerationCeilingExceeded,), EXIT_CEILING),
    ((OracleMismatchError, IntegralityError), EXIT_ORACLE),
    ((InvalidParamsError, ParamsMismatchError, UnknownMethodError), EXIT_USAGE),
)
ERRORS = tuple(chain.from_iterable(types for types, _ in EXIT_CODES))

METHODS = [AUTO] + list(ActionDriver.methods)


@contextlib.contextmanager
def exit_codes():
    """Turns the library errors into their exit codes"""
    try:
        yield
    except ERRORS as e:
        code = next(code for types, code in EXIT_CODES if isinstance(e, types))
        click.echo(f'error: {e}', err=True)
        sys.exit(code)


def compute(config: RunConfig) -> Tuple[GroupElem, ActionResult]:
    """The action of the configured element, and the element itself modulo p^M"""
    g = config.validate().group_element()
    shown = g.lift(config.params)
    if config.method == WITT_ALT:
        if not g.is_witt():
            raise InvalidParamsError('the alternating tree sums need alpha1 = 0')
        action = witt_act_u1 if config.target_kind is Target.U1 else witt_act_u
        return shown, action(g.alpha0, config.w, config.budget, precision=config.m)
    action = act_u1 if config.target_kind is Target.U1 else act_u
    return shown, action(g, config.w, config.method, config.budget, precision=config.m)


def split_prime_power(q: int) -> Tuple[int, int]:
    factors = factorint(q)
    if len(factors) != 1:
        raise InvalidParamsError(f'q must be a prime power, got {q}')
    (p, f), = factors.items()
    return p, f


@click.group()
@click.option('-v', '--verbose', count=True, help='-v for progress, -vv for every degree')
def main(verbose: int):
    level = logging.WARNING if not verbose else logging.INFO if verbose == 1 else logging.DEBUG
    logging.basicConfig(level=level, format='%(asctime)s %(name)s %(levelname)s: %(message)s')


def element_options(func):
    for option in reversed((
            click.option('--alpha0', help='alpha0 as an expression in z, default 1'),
            click.option('--alpha1', help='alpha1 as an expression in z, default 0'),
            click.option('--alpha', help='an element of W(F_{q^2})^x; replaces alpha0 and alpha1'))):
        func = option(func)
    return func


@main.command()
@click.option('--p', 'p', type=int, required=True, help='the residue characteristic')
@click.option('--f', 'f', type=int, default=1, show_default=True, help='the residue degree, q = p^f')
@click.option('--m', 'm', type=int, default=20, show_default=True, help='p-adic precision M')
@click.option('--w', 'w', type=int, default=20, show_default=True, help='u1-adic truncation W')
@element_options
@click.option('--target', type=click.Choice([t.value for t in Target]), default=Target.U1.value, show_default=True)
@click.option('--method', type=click.Choice(METHODS), default=AUTO, show_default=True)
@click.option('--format', 'fmt', type=click.Choice(FORMATS), default='table', show_default=True)
@click.option('--budget', type=int, help='internal denominator budget, default W')
def act(p, f, m, w, alpha0, alpha1, alpha, target, method, fmt, budget):
    """Compute g.u1 or g.u / u modulo (p^M, u1^W)"""
    config = RunConfig(p, f, m, w, alpha0, alpha1, alpha, target, method, fmt, budget)
    with exit_codes():
        g, result = compute(config)
    click.echo(render_json(result, g) if fmt == 'json' else render_table(result, g))


@main.command('trees')
@click.option('--q', 'q', type=int, required=True, help='the residue field size')
@click.option('--weight', type=int, required=True)
@click.option('--alternating', is_flag=True, help='q-alternating trees only')
@element_options
@click.option('--m', 'm', type=int, default=20, show_default=True, help='p-adic precision of the indices')
@click.option('--format', 'fmt', type=click.Choice(FORMATS), default='table', show_default=True)
def trees_command(q, weight, alternating, alpha0, alpha1, alpha, m, fmt):
    """Enumerate the labelled trees of one weight, with their indices when an element is given"""
    with exit_codes():
        p, f = split_prime_power(q)
        found = enumerate_trees(q, weight, alternating)
        indices = total = None
        if alpha0 is not None or alpha1 is not None or alpha is not None:
            params = make_params(p, f, m)
            a0 = parse_elem(alpha if alpha is not None else alpha0 or '1', params)
            a1 = parse_elem(alpha1, params) if alpha1 is not None else WittElem.zero(params)
            indices = [index(tree, a0, a1) for tree in found]
            total = summed_index(found, a0, a1)
    if fmt == 'json':
        click.echo(json.dumps(census_document(found, q, weight, indices, total), indent=2))
    else:
        click.echo(render_census(found, q, weight, indices, total))


@main.command()
@click.option('--suite', type=click.Choice(list(SUITES) + [ALL]), default=ALL, show_default=True)
@click.option('--seed', type=int, default=0, show_default=True)
@click.option('--threads', type=int, help='worker threads, default $LTACTION_THREADS or the cpu count')
@click.option('--log', 'log_path', type=click.Path(dir_okay=False, path_type=Path),
              help='also write stdout and stderr to LOG.txt and LOG.err.txt')
def verify(suite, seed, threads, log_path: Optional[Path]):
    """Run verification suites; exit status 1 when a check fails"""
    with run_log(log_path) if log_path else contextlib.nullcontext():
        with exit_codes():
            results = run_suite(suite, seed, threads)
        failed = [r for r in results if not r.passed]
        click.echo(json.dumps({'suite': suite, 'seed': seed, 'passed': len(results) - len(failed),
                               'failed': len(failed), 'checks': [r.as_dict() for r in results]}, indent=2))
    if failed:
        sys.exit(EXIT_VERIFICATION_FAILED)
