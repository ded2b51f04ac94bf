# Copyright (c) Evan Overman 2023 (https://an-prata.it/)
# Licensed under the MIT License
# See LICENSE file at repository root for details.

import functools
from typing import Callable, Optional

import click

from . import config
from . import logging
from . import sweeps
from .binom_mod import BinomError
from .config import ConfigError
from .ffield import FieldError, PrimePowerDesc
from .fpoly import PolyError
from .gnq import GnqError
from .report import CheckRecord, Format, RecordError, Report
from .wzhyper import HypergeometricError

PRECONDITION_ERRORS = (ConfigError, FieldError, PolyError, BinomError, GnqError, HypergeometricError, RecordError)


class ConfigurationFailure(click.ClickException):
    """
    A bad environment or parameter found after parsing; exits like a usage
    error.
    """

    exit_code = 2


def _prime_power_list(odd_only: bool) -> Callable:
    def parse(ctx: click.Context, param: click.Parameter, value: str) -> tuple[int, ...]:
        try:
            qs = tuple(int(part) for part in value.split(',') if part.strip())
        except ValueError:
            raise click.BadParameter(f"'{value}' is not a comma separated list of integers")

        if not qs:
            raise click.BadParameter("the list is empty")

        for q in qs:
            try:
                desc = PrimePowerDesc.from_q(q)
            except FieldError:
                raise click.BadParameter(f"{q} is not a prime power")

            if q <= 2 or (odd_only and not desc.is_odd):
                raise click.BadParameter(f"{q} is not an {'odd ' if odd_only else ''}prime power above 2")

        return qs

    return parse


def _prime_power(ctx: click.Context, param: click.Parameter, value: int) -> int:
    try:
        PrimePowerDesc.from_q(value)
    except FieldError:
        raise click.BadParameter(f"{value} is not a prime power")

    if value <= 2:
        raise click.BadParameter(f"q must exceed 2, got {value}")

    return value


REPORT_DEFAULTS = {'fmt': Format.TEXT.value, 'out': None, 'jobs': 1, 'seed': 0}


def _output_options(fn: Callable) -> Callable:
    fn = click.option('--seed', type=int, default=None, help="Seed for randomised checks. [default: 0]")(fn)
    fn = click.option('--jobs', type=click.IntRange(min=1), default=None, help="Worker processes. [default: 1]")(fn)
    fn = click.option('--out', type=click.Path(dir_okay=False), default=None, help="Write the report here instead of stdout.")(fn)
    fn = click.option('--format', 'fmt', type=click.Choice([f.value for f in Format]), default=None, help="[default: text]")(fn)
    return fn


def report_options(fn: Callable) -> Callable:
    """
    The output options shared by every command that produces a report. They
    may also be given before the subcommand; a value given after it wins.
    """

    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        shared = click.get_current_context().find_root().obj or {}

        for name, default in REPORT_DEFAULTS.items():
            if kwargs.get(name) is None:
                kwargs[name] = shared.get(name) if shared.get(name) is not None else default

        return fn(*args, **kwargs)

    return _output_options(wrapper)


def _emit(ctx: click.Context, records: Callable[[], list[CheckRecord]], fmt: str, out: Optional[str]):
    try:
        report = Report(records())
    except PRECONDITION_ERRORS as e:
        logging.err("CLI", str(e))
        raise ConfigurationFailure(str(e))

    text = report.render(Format(fmt))

    if out is None:
        click.echo(text, nl=False)
    else:
        with open(out, 'w') as f:
            f.write(text)

        logging.log("CLI", f"Wrote report to '{out}'")

    s = report.summary()
    logging.log("CLI", f"{s['total']} checks: {s['passed']} passed, {s['failed']} failed, {s['skipped']} skipped")
    ctx.exit(report.exit_code)


@click.group(context_settings={'help_option_names': ['-h', '--help']})
@click.option('--debug', is_flag=True, help="Print debug messages to stderr.")
@click.option('--log-file', type=click.Path(dir_okay=False), default=None, help="Append log lines to this file.")
@_output_options
@click.pass_context
def cli(ctx, debug: bool, log_file: Optional[str], fmt, out, jobs, seed):
    """
    Verification workbench for the permutation binomials
    x^{q-2} + t*x^{q^2-q-1} and the identities behind their classification.
    """

    if debug:
        logging.enable_dbg()

    if log_file is not None:
        logging.close_log_file()
        logging.open_log_file(log_file)

    try:
        bound = config.max_field_size()
    except ConfigError as e:
        logging.err("CLI", str(e))
        raise ConfigurationFailure(str(e))

    logging.dbg(f"Field size bound is {bound}")
    ctx.obj = {'fmt': fmt, 'out': out, 'jobs': jobs, 'seed': seed}


@cli.group()
def verify():
    """
    Run one verification sweep.
    """


@verify.command()
@click.option('--q-max', type=click.IntRange(min=3), default=sweeps.THM1_Q_MAX, show_default=True)
@click.option('--powersum-max', type=click.IntRange(min=0), default=sweeps.POWERSUM_Q_MAX, show_default=True)
@click.option('--zieve', is_flag=True, help="Also compare against the (q-1)st power reduction.")
@click.option('--zieve-max', type=click.IntRange(min=0), default=sweeps.ZIEVE_Q_MAX, show_default=True)
@report_options
@click.pass_context
def thm1(ctx, q_max, powersum_max, zieve, zieve_max, fmt, out, jobs, seed):
    """
    Classification of the binomial against enumeration over F_{q^2}.
    """

    _emit(ctx, lambda: sweeps.thm1_sweep(q_max, powersum_max, zieve_max if zieve else 0, jobs), fmt, out)


@verify.command()
@click.option('--samples', type=click.IntRange(min=0), default=sweeps.LEMMA30_SAMPLES, show_default=True)
@click.option('--q-max', type=click.IntRange(min=2), default=sweeps.LEMMA30_Q_MAX, show_default=True)
@report_options
@click.pass_context
def lemma30(ctx, samples, q_max, fmt, out, jobs, seed):
    """
    Binomials mod p under z -> z + q*w, on random samples.
    """

    _emit(ctx, lambda: sweeps.lemma30_sweep(samples, seed, q_max, jobs), fmt, out)


@verify.command()
@click.option('--q-list', default=','.join(map(str, sweeps.LEMMA31_Q_LIST)), show_default=True, callback=_prime_power_list(odd_only=True))
@report_options
@click.pass_context
def lemma31(ctx, q_list, fmt, out, jobs, seed):
    """
    Closed form of the power sums against enumeration.
    """

    _emit(ctx, lambda: sweeps.lemma31_sweep(q_list, jobs), fmt, out)


@verify.command()
@click.option('--q-max', type=click.IntRange(min=3), default=sweeps.NECESSITY_Q_MAX, show_default=True)
@report_options
@click.pass_context
def necessity(ctx, q_max, fmt, out, jobs, seed):
    """
    The alpha = 1 equation, the even q obstruction, the root check and the
    t = 1 power sums.
    """

    _emit(ctx, lambda: sweeps.necessity_sweep(q_max, jobs), fmt, out)


@verify.command()
@click.option('--n-max', type=click.IntRange(min=0), default=sweeps.IDENTITY_N_MAX, show_default=True)
@report_options
@click.pass_context
def identity(ctx, n_max, fmt, out, jobs, seed):
    """
    S1(n) + S2(n) = 0.
    """

    _emit(ctx, lambda: sweeps.identity_sweep(n_max, jobs), fmt, out)


@verify.command()
@click.option('--n-max', type=click.IntRange(min=0), default=sweeps.RECURRENCE_N_MAX, show_default=True)
@report_options
@click.pass_context
def recurrence(ctx, n_max, fmt, out, jobs, seed):
    _emit(ctx, lambda: sweeps.recurrence_sweep(n_max, jobs), fmt, out)


@verify.command()
@click.option('--n-max', type=click.IntRange(min=0), default=sweeps.CERT_N_MAX, show_default=True)
@click.option('--k-max', type=int, default=sweeps.CERT_K_MAX, show_default=True)
@click.option('--k-min', type=int, default=sweeps.CERT_K_MIN, show_default=True)
@report_options
@click.pass_context
def certificate(ctx, n_max, k_max, k_min, fmt, out, jobs, seed):
    """
    Telescoping residuals of both certificates; poles are skipped.
    """

    if k_min > k_max:
        raise click.BadParameter(f"--k-min {k_min} exceeds --k-max {k_max}")

    _emit(ctx, lambda: sweeps.certificate_sweep(n_max, k_max, k_min, jobs), fmt, out)


@verify.command()
@click.option('--n-max', type=click.IntRange(min=0), default=sweeps.HYP_N_MAX, show_default=True)
@report_options
@click.pass_context
def hyp(ctx, n_max, fmt, out, jobs, seed):
    """
    The 2F1 forms of S1 and S2 and the restated identity.
    """

    _emit(ctx, lambda: sweeps.hyp_sweep(n_max, jobs), fmt, out)


@verify.command()
@click.option('--n-max', type=click.IntRange(min=0), default=sweeps.REWRITE_N_MAX, show_default=True)
@report_options
@click.pass_context
def rewrite(ctx, n_max, fmt, out, jobs, seed):
    """
    The intermediate rewritings of S1 and S2.
    """

    _emit(ctx, lambda: sweeps.rewrite_sweep(n_max, jobs), fmt, out)


@verify.command()
@click.option('--q-max', type=click.IntRange(min=3), default=sweeps.EQ33_Q_MAX, show_default=True)
@report_options
@click.pass_context
def eq33(ctx, q_max, fmt, out, jobs, seed):
    """
    The sufficiency identity mod p for every odd alpha.
    """

    _emit(ctx, lambda: sweeps.eq33_sweep(q_max, jobs), fmt, out)


@verify.command()
@click.option('--q-list', default=','.join(map(str, sweeps.GNQ_Q_LIST)), show_default=True, callback=_prime_power_list(odd_only=False))
@click.option('--i-max', type=click.IntRange(min=1), default=None, help="Defaults to the first i past the degree bound.")
@report_options
@click.pass_context
def gnq(ctx, q_list, i_max, fmt, out, jobs, seed):
    """
    The congruence for g_{q^{2i}-q-1,q} and the desirable triples.
    """

    _emit(ctx, lambda: sweeps.gnq_sweep(q_list, i_max, jobs), fmt, out)


@cli.command()
@click.option('--q', 'q', type=int, required=True, callback=_prime_power)
@click.option('--t', 't', type=int, required=True)
@report_options
@click.pass_context
def classify(ctx, q, t, fmt, out, jobs, seed):
    """
    Classify a single (q, t) and confirm by enumeration.
    """

    _emit(ctx, lambda: sweeps.classify_check(q, t), fmt, out)


@cli.group()
def sweep():
    """
    Run groups of sweeps.
    """


@sweep.command(name='all')
@report_options
@click.pass_context
def sweep_all(ctx, fmt, out, jobs, seed):
    """
    The full acceptance suite.
    """

    _emit(ctx, lambda: sweeps.sweep_all(jobs, seed), fmt, out)


def run(argv: Optional[list[str]] = None) -> int:
    """
    Runs the command line and returns the exit code instead of exiting.
    """

    try:
        code = cli.main(args=argv, prog_name='ffperm', standalone_mode=False)
    except click.ClickException as e:
        e.show()
        return e.exit_code
    except click.Abort:
        logging.err("CLI", "Aborted")
        return 1

    return code if isinstance(code, int) else 0
