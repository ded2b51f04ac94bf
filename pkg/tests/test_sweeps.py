import pytest

from ffperm import sweeps
from ffperm.report import Report


def _assert_clean(records):
    report = Report(records)
    assert report.total > 0
    assert report.failed == 0, [r.to_json() for r in report.failures()]
    return report


def test_thm1_sweep():
    report = _assert_clean(sweeps.thm1_sweep(q_max=9, powersum_max=9, zieve_max=9))
    checks = {r.check for r in report.records}

    assert checks == {'thm1-classify', 'thm1-witness', 'thm1-powersum', 'thm1-zieve'}
    assert sum(1 for r in report.records if r.check == 'thm1-classify') == sum(q - 1 for q in (3, 4, 5, 7, 8, 9))


def test_thm1_sweep_optional_oracles_off():
    records = sweeps.thm1_sweep(q_max=5, powersum_max=0, zieve_max=0)
    assert {r.check for r in records} == {'thm1-classify', 'thm1-witness'}


def test_classify_check():
    [r] = sweeps.classify_check(5, 1)
    assert r.passed
    assert r.param('case') == 'case-i'
    assert r.observed == 'pp'


def test_lemma30_sweep_is_seeded():
    first = sweeps.lemma30_sweep(samples=40, seed=7, q_max=49)
    again = sweeps.lemma30_sweep(samples=40, seed=7, q_max=49)

    assert first == again
    assert len(first) == 80
    _assert_clean(first)


def test_lemma31_sweep():
    _assert_clean(sweeps.lemma31_sweep((3, 5)))


def test_necessity_sweep():
    report = _assert_clean(sweeps.necessity_sweep(q_max=13))
    checks = {r.check for r in report.records}

    assert 'even-q-obstruction' in checks
    assert {'necessity-alpha1', 'necessity-bridge', 'root-check', 'case-i-direct', 'case-i-telescoping'} <= checks


@pytest.mark.parametrize('q', [9, 25])
def test_case_i_sums_vanish_over_extension_fields(q):
    report = _assert_clean(sweeps._necessity_task(q))
    direct = [r for r in report.records if r.check == 'case-i-direct']

    assert len(direct) == (q - 1) // 2
    assert all(r.passed for r in direct)


def test_root_sweep():
    report = _assert_clean(sweeps.root_sweep(82, 130))
    assert all(r.check == 'root-check' for r in report.records)


def test_eq33_sweep():
    report = _assert_clean(sweeps.eq33_sweep(q_max=27))
    assert {r.check for r in report.records} == {'eq33', 'eq33-first-half', 'eq33-second-half'}


def test_identity_and_recurrence_sweeps():
    _assert_clean(sweeps.identity_sweep(15))
    _assert_clean(sweeps.recurrence_sweep(10))


def test_certificate_sweep():
    records = sweeps.certificate_sweep(n_max=3, k_max=8, k_min=-2)
    report = _assert_clean(records)

    assert report.skipped > 0
    assert sum(1 for r in report.records if r.check == 'certificate-poles' and r.passed) == 2


def test_hyp_and_rewrite_sweeps():
    _assert_clean(sweeps.hyp_sweep(6))
    _assert_clean(sweeps.rewrite_sweep(6))


def test_gnq_sweep():
    report = _assert_clean(sweeps.gnq_sweep((3,), i_max=2))
    assert report.skipped == 3


def test_gnq_sweep_default_stops_past_bound():
    records = sweeps.gnq_sweep((7,))
    report = _assert_clean(records)
    last = max(int(r.param('i')) for r in report.records)

    assert last == 3
    assert all(r.skipped for r in report.records if r.param('i') == '3')


def test_recompose_sweep():
    _assert_clean(sweeps.recompose_sweep((3, 5), n_max=200, step=37))


def test_pool_matches_serial():
    serial = sweeps.identity_sweep(12, jobs=1)
    pooled = sweeps.identity_sweep(12, jobs=2)
    assert Report(serial).render_json() == Report(pooled).render_json()


@pytest.mark.parametrize('jobs', [1, 3])
def test_run_tasks_keeps_task_order(jobs):
    tasks = [(sweeps._identity_task, (n,)) for n in (4, 1, 3)]
    records = sweeps.run_tasks('identity', tasks, jobs)
    assert [r.param('n') for r in records] == ['4', '1', '3']
