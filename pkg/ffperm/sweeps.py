# Copyright (c) Evan Overman 2023 (https://an-prata.it/)
# Licensed under the MIT License
# See LICENSE file at repository root for details.

"""
Every verification sweep, as lists of `CheckRecord`s. A sweep is cut into
tasks (module level functions with plain integer arguments) so that
`run_tasks` may hand them to a process pool; the results are collected in
task order and the report sorts them, so the output never depends on the
number of workers.
"""

import math
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Callable, Iterable, Optional

import numpy as np

from . import config
from . import logging
from .binom_mod import (
    CaseTag,
    TwiceInt,
    alpha1_necessity,
    binom_padic,
    binom_rational,
    case_i_telescoping,
    eq33_check,
    eq33_halves,
    necessity_epsilon,
    perm_binomial,
    power_sum_closed,
    power_sum_direct,
    rational_mod_p,
    root_check,
    thm11_classify,
)
from .ffield import PrimePowerDesc, field_for, prime_powers
from .gnq import bridge_check, congruence_exponent, golden_checks as gnq_golden, recompose_check, section4_congruence_check, thm41_check
from .permtest import is_pp_bruteforce, is_pp_powersums, zieve_check
from .report import CheckRecord, record, skipped
from .wzhyper import (
    CertificatePole,
    certificate_residual,
    golden_checks as wz_golden,
    hyp_forms_check,
    identity_check,
    recurrence_check,
    rewrite_check,
    sum_S,
)

THM1_Q_MAX       = 81
POWERSUM_Q_MAX   = 27
ZIEVE_Q_MAX      = 49
LEMMA30_SAMPLES  = 500
LEMMA30_Q_MAX    = 343
LEMMA31_Q_LIST   = (3, 5, 7, 9, 11, 13)
NECESSITY_Q_MAX  = 81
IDENTITY_N_MAX   = 300
RECURRENCE_N_MAX = 298
CERT_N_MAX       = 40
CERT_K_MIN       = -5
CERT_K_MAX       = 50
HYP_N_MAX        = 100
REWRITE_N_MAX    = 50
EQ33_Q_MAX       = 121
GNQ_Q_LIST       = (3, 5, 7, 9)
RECOMPOSE_Q_LIST = (3, 5, 7, 9, 11)
RECOMPOSE_N_MAX  = 2000
RECOMPOSE_N_STEP = 97

Task = tuple[Callable[..., list[CheckRecord]], tuple]


def _run(task: Task) -> list[CheckRecord]:
    fn, args = task
    return fn(*args)


def run_tasks(name: str, tasks: list[Task], jobs: int = 1) -> list[CheckRecord]:
    """
    Runs the tasks, in a pool of `jobs` processes when `jobs > 1`, and
    concatenates their records in task order.
    """

    logging.log("SWEEP", f"Running {name}: {len(tasks)} task(s) on {max(jobs, 1)} worker(s)")

    if jobs <= 1 or len(tasks) <= 1:
        results = [_run(task) for task in tasks]
    else:
        chunk = max(1, len(tasks) // (4 * jobs))

        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run, tasks, chunksize=chunk))

    records = [r for chunk in results for r in chunk]
    failed = sum(1 for r in records if r.status == 'fail')

    if failed:
        logging.warn("SWEEP", f"{name}: {failed} of {len(records)} check(s) failed")
    else:
        logging.log("SWEEP", f"{name}: {len(records)} record(s), no failures")

    return records


def _odd_prime_powers(q_min: int, q_max: int) -> list[int]:
    return [q for q in prime_powers(q_min, q_max) if q % 2 == 1]


# The classification against the three permutation oracles.

def _thm1_task(q: int, powersum_max: int, zieve_max: int) -> list[CheckRecord]:
    desc = PrimePowerDesc.from_q(q)
    fq = field_for(desc)
    fq2 = field_for(desc.squared())
    records = []

    for index in range(1, q):
        t = fq.element_at(index)
        params = {'q': q, 't': t}
        f = perm_binomial(fq, t).over(fq2)
        brute = is_pp_bruteforce(f, fq2)
        verdict = thm11_classify(desc, t)
        records.append(record('thm1-classify', {**params, 'case': verdict.case}, brute, 'pp' if verdict.is_pp else 'not-pp'))

        if brute.witness is not None:
            x1, x2 = brute.witness
            valid = x1 != x2 and f.evaluate(x1) == f.evaluate(x2)
            records.append(record('thm1-witness', params, True, valid))

        if q <= powersum_max:
            records.append(record('thm1-powersum', params, brute, is_pp_powersums(f, fq2)))

        if q <= zieve_max:
            records.append(record('thm1-zieve', params, brute.is_pp, zieve_check(fq, t)))

    return records


def thm1_sweep(q_max: int = THM1_Q_MAX, powersum_max: int = POWERSUM_Q_MAX, zieve_max: int = 0, jobs: int = 1) -> list[CheckRecord]:
    """
    For every prime power 3 <= q <= q_max and t in F_q*, the classification
    against enumeration over F_{q^2}; power sums and the (q-1)st power
    reduction are compared too up to their own bounds (0 turns them off).
    """

    tasks = [(_thm1_task, (q, powersum_max, zieve_max)) for q in prime_powers(3, q_max)]
    return run_tasks('thm1', tasks, jobs)


def classify_check(q: int, t: int) -> list[CheckRecord]:
    """
    A single (q, t): the classification against enumeration.
    """

    desc = PrimePowerDesc.from_q(q)
    fq = field_for(desc)
    fq2 = field_for(desc.squared())
    t = fq.coerce(t)
    verdict = thm11_classify(desc, t)
    brute = is_pp_bruteforce(perm_binomial(fq, t).over(fq2), fq2)
    return [record('classify', {'q': q, 't': t, 'case': verdict.case}, brute, 'pp' if verdict.is_pp else 'not-pp')]


# Binomials mod p: invariance under z -> z + q*w, and agreement with the
# exact rational binomial.

def _lemma30_task(q: int, twice: int, w: int, a: int) -> list[CheckRecord]:
    desc = PrimePowerDesc.from_q(q)
    z = TwiceInt(twice)
    params = {'q': q, 'z': z, 'w': w, 'a': a}
    value = binom_padic(z, a, desc)

    return [
        record('lemma30-shift', params, value, binom_padic(z + q * w, a, desc)),
        record('lemma30-exact', params, rational_mod_p(binom_rational(z, a), desc.p), value),
    ]


def lemma30_sweep(samples: int = LEMMA30_SAMPLES, seed: int = 0, q_max: int = LEMMA30_Q_MAX, jobs: int = 1) -> list[CheckRecord]:
    """
    Random (z, w, a) with q <= q_max; half-integer z only for odd q. The
    samples are drawn up front so the workers never touch the generator.
    """

    rng = np.random.default_rng(seed)
    qs = prime_powers(2, q_max)
    tasks = []

    for _ in range(samples):
        q = int(rng.choice(qs))
        twice = int(rng.integers(-4 * q, 4 * q + 1))

        if q % 2 == 0:
            twice -= twice % 2

        w = int(rng.integers(-20, 21))
        a = int(rng.integers(0, q))
        tasks.append((_lemma30_task, (q, twice, w, a)))

    return run_tasks('lemma30', tasks, jobs)


# The closed form of the power sums against enumeration.

def _lemma31_task(q: int, t_index: int) -> list[CheckRecord]:
    desc = PrimePowerDesc.from_q(q)
    t = field_for(desc).element_at(t_index)
    records = []

    for alpha in range(q):
        for beta in range(q):
            if not 0 < alpha + beta * q < q * q - 1:
                continue

            params = {'q': q, 't': t, 'alpha': alpha, 'beta': beta}
            records.append(record('lemma31', params, power_sum_direct(desc, t, alpha, beta), power_sum_closed(desc, t, alpha, beta)))

    return records


def lemma31_sweep(q_list: Iterable[int] = LEMMA31_Q_LIST, jobs: int = 1) -> list[CheckRecord]:
    tasks = [(_lemma31_task, (q, index)) for q in q_list for index in range(1, q)]
    return run_tasks('lemma31', tasks, jobs)


# The necessity and sufficiency steps behind the classification.

def _necessity_task(q: int) -> list[CheckRecord]:
    desc = PrimePowerDesc.from_q(q)
    fq = field_for(desc)
    records = []

    for index in range(1, q):
        t = fq.element_at(index)
        params = {'q': q, 't': t}
        first_sum = power_sum_direct(desc, t, 1, q - 2)

        if not desc.is_odd:
            records.append(record('even-q-obstruction', params, 'nonzero', 'zero' if first_sum.is_zero() else 'nonzero'))
            continue

        eps = necessity_epsilon(desc, t)
        v = alpha1_necessity(desc, t)
        records.append(record('necessity-alpha1', {**params, 'eps': eps}, t in (fq.from_int(-eps), fq.from_int(3 * eps)), v.is_zero()))
        records.append(record('necessity-bridge', params, v.is_zero(), first_sum.is_zero()))

        if thm11_classify(desc, t).case != CaseTag.NONE:
            records.append(record('root-check', params, True, root_check(desc, t)))

    if desc.is_odd and q % 4 == 1:
        for alpha in range(1, q - 1, 2):
            params = {'q': q, 'alpha': alpha}
            records.append(record('case-i-direct', params, fq.zero, power_sum_direct(desc, 1, alpha, q - 1 - alpha)))
            records.append(record('case-i-telescoping', params, 0, case_i_telescoping(desc, alpha)))

    return records


def necessity_sweep(q_max: int = NECESSITY_Q_MAX, jobs: int = 1) -> list[CheckRecord]:
    tasks = [(_necessity_task, (q,)) for q in prime_powers(3, q_max)]
    return run_tasks('necessity', tasks, jobs)


def _root_task(q: int) -> list[CheckRecord]:
    desc = PrimePowerDesc.from_q(q)
    fq = field_for(desc)
    records = []

    for t in (1, -3, 3):
        t = fq.from_int(t)

        if t.is_zero() or thm11_classify(desc, t).case == CaseTag.NONE:
            continue

        records.append(record('root-check', {'q': q, 't': t}, True, root_check(desc, t)))

    return records


def root_sweep(q_min: int = NECESSITY_Q_MAX + 1, q_max: int = LEMMA30_Q_MAX, jobs: int = 1) -> list[CheckRecord]:
    """
    The root check for the classified t beyond the range covered by the
    necessity sweep.
    """

    tasks = [(_root_task, (q,)) for q in _odd_prime_powers(q_min, q_max)]
    return run_tasks('root-check', tasks, jobs)


def _eq33_task(q: int) -> list[CheckRecord]:
    desc = PrimePowerDesc.from_q(q)
    p = desc.p
    records = []

    for alpha in range(1, q - 1, 2):
        n = (alpha - 1) // 2
        scale = math.factorial(alpha) * 2 ** alpha
        params = {'q': q, 'alpha': alpha}
        first, second = eq33_halves(desc, alpha)
        records.append(record('eq33', params, 0, eq33_check(desc, alpha)))
        records.append(record('eq33-first-half', params, rational_mod_p(Fraction(sum_S(1, n), scale), p), first))
        records.append(record('eq33-second-half', params, rational_mod_p(Fraction(sum_S(2, n), scale), p), second))

    return records


def eq33_sweep(q_max: int = EQ33_Q_MAX, jobs: int = 1) -> list[CheckRecord]:
    """
    The sufficiency identity for every odd prime power q <= q_max and odd
    alpha, with each of its two sums matched against S1(n) and S2(n) divided
    by alpha! 2^alpha, alpha = 2n+1.
    """

    tasks = [(_eq33_task, (q,)) for q in _odd_prime_powers(3, q_max)]
    return run_tasks('eq33', tasks, jobs)


# The identity S1 + S2 = 0 and its certificates.

def _identity_task(n: int) -> list[CheckRecord]:
    return identity_check(n, n)


def identity_sweep(n_max: int = IDENTITY_N_MAX, jobs: int = 1) -> list[CheckRecord]:
    tasks = [(_identity_task, (n,)) for n in range(n_max + 1)]
    return run_tasks('identity', tasks, jobs)


def _recurrence_task(i: int, n: int) -> list[CheckRecord]:
    return [record('recurrence', {'i': i, 'n': n}, 0, recurrence_check(i, n))]


def recurrence_sweep(n_max: int = RECURRENCE_N_MAX, jobs: int = 1) -> list[CheckRecord]:
    tasks = [(_recurrence_task, (i, n)) for i in (1, 2) for n in range(n_max + 1)]
    return run_tasks('recurrence', tasks, jobs)


def _certificate_task(i: int, n: int, k_min: int, k_max: int) -> list[CheckRecord]:
    records = []

    for k in range(k_min, k_max + 1):
        params = {'i': i, 'n': n, 'k': k}

        try:
            records.append(record('certificate', params, 0, certificate_residual(i, n, k)))
        except CertificatePole as pole:
            records.append(skipped('certificate', params, f"pole at k = {pole.k}: {', '.join(pole.factors)}", 0))

    return records


def certificate_sweep(n_max: int = CERT_N_MAX, k_max: int = CERT_K_MAX, k_min: int = CERT_K_MIN, jobs: int = 1) -> list[CheckRecord]:
    """
    The telescoping residual on the grid [0, n_max] x [k_min, k_max]. Poles
    are skipped, and each certificate must have hit at least one.
    """

    tasks = [(_certificate_task, (i, n, k_min, k_max)) for i in (1, 2) for n in range(n_max + 1)]
    records = run_tasks('certificate', tasks, jobs)

    for i in (1, 2):
        poles = sum(1 for r in records if r.skipped and r.param('i') == str(i))
        records.append(record('certificate-poles', {'i': i}, True, poles > 0))

    return records


def _hyp_task(n: int) -> list[CheckRecord]:
    return hyp_forms_check(n)


def hyp_sweep(n_max: int = HYP_N_MAX, jobs: int = 1) -> list[CheckRecord]:
    tasks = [(_hyp_task, (n,)) for n in range(n_max + 1)]
    return run_tasks('hyp', tasks, jobs)


def _rewrite_task(n: int) -> list[CheckRecord]:
    return rewrite_check(n)


def rewrite_sweep(n_max: int = REWRITE_N_MAX, jobs: int = 1) -> list[CheckRecord]:
    tasks = [(_rewrite_task, (n,)) for n in range(n_max + 1)]
    return run_tasks('rewrite', tasks, jobs)


# g_{n,q}.

def _gnq_task(q: int, i: int) -> list[CheckRecord]:
    desc = PrimePowerDesc.from_q(q)
    return [section4_congruence_check(desc, i), thm41_check(desc, i)] + bridge_check(desc, i)


def _default_i_max(q: int) -> int:
    """
    The first i whose n lies past the degree bound, so the report shows
    where direct verification stops.
    """

    desc = PrimePowerDesc.from_q(q)
    i = 1

    while congruence_exponent(desc, i) <= config.GNQ_DEGREE_BOUND:
        i += 1

    return i


def _recompose_task(q: int, n: int) -> list[CheckRecord]:
    return [recompose_check(n, PrimePowerDesc.from_q(q))]


def gnq_sweep(q_list: Iterable[int] = GNQ_Q_LIST, i_max: Optional[int] = None, jobs: int = 1) -> list[CheckRecord]:
    tasks = []

    for q in q_list:
        for i in range(1, (i_max if i_max is not None else _default_i_max(q)) + 1):
            tasks.append((_gnq_task, (q, i)))

    return run_tasks('gnq', tasks, jobs)


def recompose_sweep(q_list: Iterable[int] = RECOMPOSE_Q_LIST, n_max: int = RECOMPOSE_N_MAX, step: int = RECOMPOSE_N_STEP, jobs: int = 1) -> list[CheckRecord]:
    tasks = [(_recompose_task, (q, n)) for q in q_list for n in range(0, n_max + 1, step)]
    return run_tasks('recompose', tasks, jobs)


def sweep_all(jobs: int = 1, seed: int = 0) -> list[CheckRecord]:
    """
    The full acceptance suite with its default bounds.
    """

    records = []
    records += thm1_sweep(THM1_Q_MAX, POWERSUM_Q_MAX, ZIEVE_Q_MAX, jobs)
    records += lemma30_sweep(LEMMA30_SAMPLES, seed, LEMMA30_Q_MAX, jobs)
    records += lemma31_sweep(LEMMA31_Q_LIST, jobs)
    records += necessity_sweep(NECESSITY_Q_MAX, jobs)
    records += root_sweep(jobs=jobs)
    records += eq33_sweep(EQ33_Q_MAX, jobs)
    records += identity_sweep(IDENTITY_N_MAX, jobs)
    records += recurrence_sweep(RECURRENCE_N_MAX, jobs)
    records += certificate_sweep(CERT_N_MAX, CERT_K_MAX, CERT_K_MIN, jobs)
    records += hyp_sweep(HYP_N_MAX, jobs)
    records += rewrite_sweep(REWRITE_N_MAX, jobs)
    records += gnq_sweep(GNQ_Q_LIST, None, jobs)
    records += recompose_sweep(RECOMPOSE_Q_LIST, RECOMPOSE_N_MAX, RECOMPOSE_N_STEP, jobs)
    records += wz_golden() + gnq_golden()
    return records
