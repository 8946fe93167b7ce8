"""
kuttaka-kit command-line interface

Exit codes: 0 ok, 1 check or bench failure, 2 no solution,
3 usage, parse or overflow error.
"""

import json
import sys
from functools import wraps
from typing import Any, Dict, List, Optional

import click
import structlog

from kuttaka_kit import __version__
from kuttaka_kit.bench import InverseBenchmark
from kuttaka_kit.codes import aryabhata, katapayadi, mula
from kuttaka_kit.codes.tokens import render, to_iast
from kuttaka_kit.config import Config
from kuttaka_kit.congruence import Congruence, mod_inverse, solve_system
from kuttaka_kit.errors import KuttakaKitError, NoSolutionError
from kuttaka_kit.fixtures import VectorRunner
from kuttaka_kit.kuttaka import Equation, inverse_pair, solve_with_trace
from kuttaka_kit.logging_setup import configure_logging

logger = structlog.get_logger(__name__)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_NO_SOLUTION = 2
EXIT_USAGE = 3


def exit_code_for(exc: KuttakaKitError) -> int:
    if isinstance(exc, NoSolutionError):
        return EXIT_NO_SOLUTION
    return EXIT_USAGE


def envelope(command: str, result: Any = None, steps: Any = None,
             error: Optional[Dict[str, Any]] = None) -> Dict[str, Any]:
    """Output envelope; carries exactly one of result and error"""
    payload: Dict[str, Any] = {'status': 'error' if error else 'ok', 'command': command}
    if error:
        payload['error'] = error
    else:
        payload['result'] = result
    if steps is not None:
        payload['steps'] = steps
    return payload


def dump(payload: Dict[str, Any]) -> str:
    return json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False)


def json_option(f):
    return click.option('--json', 'as_json', is_flag=True, help='Emit the JSON envelope.')(f)


def reports_errors(command_name: str):
    """Turn library errors into diagnostics and the exit-code scheme"""

    def decorator(f):
        @wraps(f)
        def wrapper(*args, **kwargs):
            ctx = click.get_current_context()
            try:
                return f(*args, **kwargs)
            except KuttakaKitError as exc:
                code = exit_code_for(exc)
                logger.warning(f"{command_name} failed", kind=exc.kind, exit_code=code)
                if kwargs.get('as_json'):
                    click.echo(dump(envelope(command_name, error=exc.to_dict())))
                click.echo(f"error: {exc.message}", err=True)
                ctx.exit(code)

        return wrapper

    return decorator


def read_text(parts: List[str]) -> str:
    """Text from the arguments, or standard input when none are given"""
    if parts:
        return ' '.join(parts)
    return click.get_text_stream('stdin').read().strip()


class KitGroup(click.Group):
    """Group whose usage errors exit with code 3 instead of click's 2"""

    def main(self, args=None, prog_name=None, complete_var=None, standalone_mode=True, **extra):
        try:
            rv = super().main(args=args, prog_name=prog_name, complete_var=complete_var,
                              standalone_mode=False, **extra)
        except click.ClickException as exc:
            exc.show()
            sys.exit(EXIT_USAGE)
        except click.Abort:
            click.echo("Aborted!", err=True)
            sys.exit(EXIT_USAGE)
        sys.exit(rv if isinstance(rv, int) else EXIT_OK)


@click.group(cls=KitGroup)
@click.version_option(__version__, prog_name='kuttaka-kit')
@click.option('--log-level', default=Config.LOG_LEVEL, show_default=True,
              help='Logging level for diagnostics on stderr.')
@click.option('--log-format', type=click.Choice(['console', 'json']), default=Config.LOG_FORMAT,
              show_default=True)
def cli(log_level, log_format):
    """Pulverizer, congruences and classical substitution codes"""
    configure_logging(log_level, log_format)


@cli.command()
@click.option('-a', 'a', type=int, required=True, help='Coefficient of x.')
@click.option('-b', 'b', type=int, required=True, help='Coefficient of y.')
@click.option('-c', 'c', type=int, required=True, help='Additive constant.')
@click.option('--retain', type=int, default=None, help='Quotients kept in the valli.')
@click.option('--trace', is_flag=True, help='Show the division chain and array columns.')
@json_option
@reports_errors('solve')
def solve(a, b, c, retain, trace, as_json):
    """Solve a*x + c = b*y"""
    logger.info("solve", a=a, b=b, c=c)
    solution, working = solve_with_trace(Equation(a, c, b), retain)
    steps = working.to_dict() if trace else None

    if as_json:
        click.echo(dump(envelope('solve', solution.to_dict(), steps)))
        return

    click.echo(f"x_min={solution.x_min} y_min={solution.y_min}")
    click.echo(f"x_raw={solution.x_raw} y_raw={solution.y_raw}")
    click.echo(f"period_x={solution.period_x} period_y={solution.period_y}")
    if trace:
        chain = working.chain
        dividend, divisor = chain.dividend, chain.divisor
        for quotient, remainder in zip(chain.quotients, chain.remainders):
            click.echo(f"{divisor}){dividend}({quotient}  remainder {remainder}")
            dividend, divisor = divisor, remainder
        if working.mati is not None:
            click.echo(f"mati={working.mati} quotient={working.quotient} "
                       f"retained={working.retained} sign={working.sign:+d}")
        for index, column in enumerate(working.columns, start=1):
            click.echo(f"column {index}: {' '.join(str(entry) for entry in column)}")


@cli.command()
@click.option('-a', 'a', type=int, required=True, help='Number to invert.')
@click.option('-m', 'm', type=int, required=True, help='Modulus.')
@click.option('--pair', is_flag=True, help='Also give the inverse of m modulo a.')
@json_option
@reports_errors('inverse')
def inverse(a, m, pair, as_json):
    """Multiplicative inverse of a modulo m"""
    value = mod_inverse(a, m)
    result: Dict[str, Any] = {'a': a, 'm': m, 'inverse': value}
    if pair:
        result['inverse_of_m'] = inverse_pair(a, m)[1]

    if as_json:
        click.echo(dump(envelope('inverse', result)))
        return
    click.echo(str(value))
    if pair:
        click.echo(f"{m}^-1 mod {a} = {result['inverse_of_m']}")


@cli.command()
@click.option('-r', 'residues', type=int, multiple=True, help='Residue (repeat with -m).')
@click.option('-m', 'moduli', type=int, multiple=True, help='Modulus (repeat with -r).')
@json_option
@reports_errors('congruence')
def congruence(residues, moduli, as_json):
    """Least x satisfying every x = r (mod m)"""
    if not residues or len(residues) != len(moduli):
        raise click.UsageError("give one or more -r R -m M pairs")
    system = [Congruence.normalized(r, m) for r, m in zip(residues, moduli)]
    solution = solve_system(system)

    if as_json:
        click.echo(dump(envelope('congruence', solution.to_dict())))
        return
    click.echo(str(solution.value))


@cli.command()
@click.argument('value')
@click.option('--code', type=click.Choice(['aryabhata', 'katapayadi']), default='aryabhata',
              show_default=True)
@click.option('--order', type=click.Choice(['descending', 'ascending']), default='descending',
              show_default=True)
@click.option('--table', type=click.Choice(sorted(katapayadi.TABLES)), default='sanskrit',
              show_default=True)
@click.option('--chooser', type=click.Choice(sorted(katapayadi.CHOOSERS)), default='first',
              show_default=True)
@click.option('--layout', is_flag=True, help='Show the place table (aryabhata code).')
@click.option('--iast', is_flag=True, help='Render with diacritics.')
@json_option
@reports_errors('encode')
def encode(value, code, order, table, chooser, layout, iast, as_json):
    """Encode a number (aryabhata) or a digit string (katapayadi)"""
    steps = None
    if code == 'katapayadi':
        text = katapayadi.katapayadi_encode(value, table, chooser)
    else:
        try:
            number = int(value)
        except ValueError:
            raise click.BadParameter(f"{value!r} is not an integer", param_hint='VALUE')
        text = aryabhata.aryabhata_encode(number, order)
        if layout:
            steps = {'layout': [row.to_dict() for row in aryabhata.aryabhata_layout(number)]}

    shown = to_iast(text) if iast and table == 'sanskrit' else text
    if as_json:
        click.echo(dump(envelope('encode', {'code': code, 'text': shown}, steps)))
        return
    click.echo(shown)
    if steps:
        for row in steps['layout']:
            click.echo(f"10^{row['power']:<2} {row['class']} {row['vowel']:<2} "
                       f"{row['digit']} {row['letter'] or '-'}")


@cli.command()
@click.argument('text', nargs=-1)
@click.option('--code', type=click.Choice(['aryabhata', 'katapayadi']), default='aryabhata',
              show_default=True)
@click.option('--table', type=click.Choice(sorted(katapayadi.TABLES)), default='sanskrit',
              show_default=True)
@click.option('--strict', is_flag=True, help='Reject tokens outside the table (katapayadi).')
@click.option('--iast', is_flag=True, help='Echo the input with diacritics.')
@json_option
@reports_errors('decode')
def decode(text, code, table, strict, iast, as_json):
    """Decode syllable text (aryabhata) or a word (katapayadi); reads stdin if no TEXT"""
    source = read_text(list(text))
    if code == 'katapayadi':
        result: Any = katapayadi.katapayadi_decode(source, table, strict=strict)
    else:
        result = aryabhata.aryabhata_decode(source)

    if as_json:
        click.echo(dump(envelope('decode', {'code': code, 'value': result})))
        return
    if iast and table == 'sanskrit':
        click.echo(f"{to_iast(source)} = {result}")
    else:
        click.echo(str(result))


@cli.command('katapayadi')
@click.argument('text', nargs=-1)
@click.option('--table', type=click.Choice(sorted(katapayadi.TABLES)), default='sanskrit',
              show_default=True)
@click.option('--encode', 'encode_digits', is_flag=True, help='Spell TEXT (digits) as a word.')
@click.option('--chooser', type=click.Choice(sorted(katapayadi.CHOOSERS)), default='first',
              show_default=True)
@json_option
@reports_errors('katapayadi')
def katapayadi_command(text, table, encode_digits, chooser, as_json):
    """Katapayadi digits of a word, or a word for digits with --encode"""
    source = read_text(list(text))
    if encode_digits:
        result = katapayadi.katapayadi_encode(source, table, chooser)
    else:
        result = katapayadi.katapayadi_decode(source, table)

    if as_json:
        click.echo(dump(envelope('katapayadi', {'table': table, 'value': result})))
        return
    click.echo(result)


@cli.command('mula')
@click.argument('text', nargs=-1)
@click.option('--strict', is_flag=True, help='Reject tokens outside the alphabet.')
@click.option('--sep', default='', help='Separator placed between output tokens.')
@click.option('--iast', is_flag=True, help='Render with diacritics.')
@json_option
@reports_errors('mula')
def mula_command(text, strict, sep, iast, as_json):
    """Apply the reciprocal letter-pair cipher (its own inverse)"""
    tokens = mula.mula_apply(read_text(list(text)), strict=strict)
    if as_json:
        click.echo(dump(envelope('mula', {'tokens': tokens, 'text': render(tokens, sep)})))
        return
    shown = [to_iast([token]) for token in tokens] if iast else tokens
    click.echo(render(shown, sep))


@cli.command()
@click.option('--fixtures', 'fixtures_path', type=click.Path(dir_okay=False),
              default=str(Config.FIXTURES_PATH), show_default=True)
@json_option
@reports_errors('selftest')
def selftest(fixtures_path, as_json):
    """Run every vector in the fixture file"""
    results = VectorRunner(fixtures_path).run()
    failed = [result.id for result in results if not result.passed]

    if as_json:
        payload = envelope('selftest', {
            'total': len(results),
            'failed': failed,
            'vectors': [result.to_dict() for result in results],
        })
        click.echo(dump(payload))
    else:
        for result in results:
            click.echo(f"{'PASS' if result.passed else 'FAIL'} {result.id}")
        click.echo(f"{len(results) - len(failed)}/{len(results)} vectors passed")

    if failed:
        click.echo(f"failing vectors: {', '.join(failed)}", err=True)
        click.get_current_context().exit(EXIT_CHECK_FAILED)


@cli.command()
@click.option('--trials', type=int, default=Config.BENCH_TRIALS, show_default=True)
@click.option('--bits', type=int, default=Config.BENCH_BITS, show_default=True)
@click.option('--seed', type=int, default=Config.BENCH_SEED, show_default=True)
@click.option('--workers', type=int, default=Config.BENCH_WORKERS, show_default=True)
@click.option('-a', '--a', 'a', type=int, default=None, help='Fixed number to invert.')
@click.option('-m', '--m', 'm', type=int, default=None, help='Fixed modulus.')
@json_option
@reports_errors('bench')
def bench(trials, bits, seed, workers, a, m, as_json):
    """Time the pulverizer inverse against extended Euclid, checking equality"""
    if (a is None) != (m is None):
        raise click.UsageError("-a and -m must be given together")
    fixed_pair = (a, m) if a is not None else None
    report = InverseBenchmark().run(trials, bits, seed, workers, fixed_pair)

    if as_json:
        click.echo(dump(envelope('bench', report.to_dict())))
    else:
        click.echo(f"trials={report.trials} bits={report.bits} seed={report.seed} "
                   f"completed={report.completed} mismatches={report.mismatches}")
        click.echo(f"kuttaka median {report.kuttaka_median_us} us, "
                   f"extended Euclid median {report.euclid_median_us} us")
        if fixed_pair:
            click.echo(f"inverse of {a} mod {m} = {mod_inverse(a, m)}")

    if not report.ok:
        click.echo(f"mismatch: {report.counterexample}", err=True)
        click.get_current_context().exit(EXIT_CHECK_FAILED)


def main():
    cli(prog_name='kuttaka-kit')
