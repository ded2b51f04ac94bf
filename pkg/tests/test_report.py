import csv
import io
import json

import pytest

from ffperm.report import CSV_HEADER, CheckRecord, Format, RecordError, Report, record, skipped


def _sample() -> list[CheckRecord]:
    return [
        record('thm1-classify', {'q': 7, 't': 1}, 'not-pp', 'not-pp'),
        record('identity', {'n': 3}, 0, 5),
        skipped('certificate', {'i': 1, 'n': 0, 'k': 1}, 'pole at k = 1: n-k+1', 0),
        record('identity', {'n': 2}, 0, 0),
    ]


def test_record_compares_renderings():
    assert record('x', {}, 3, '3').passed
    assert not record('x', {}, 3, 4).passed
    assert record('x', {}, 'a', 'b', passed=True).passed


def test_record_cannot_pass_and_skip():
    with pytest.raises(RecordError):
        CheckRecord('x', (), '', '', True, True)


def test_record_accessors():
    r = record('lemma31', {'q': 5, 't': 2, 'alpha': 1}, 0, 0)
    assert r.param('t') == '2'
    assert r.param('beta') is None
    assert r.params_text() == 'q=5;t=2;alpha=1'
    assert r.status == 'pass'
    assert 'reason' not in r.to_json()


def test_report_sorting_and_summary():
    report = Report(_sample())

    assert [r.check for r in report.records] == ['certificate', 'identity', 'identity', 'thm1-classify']
    assert [r.param('n') for r in report.records[1:3]] == ['2', '3']
    assert report.summary() == {'total': 4, 'passed': 2, 'failed': 1, 'skipped': 1}
    assert report.exit_code == 1
    assert [r.params_text() for r in report.failures()] == ['n=3']


def test_report_extend_keeps_order():
    report = Report(_sample()[:1])
    report.extend(_sample()[1:])
    assert report.records == Report(_sample()).records


def test_clean_report_exits_zero():
    assert Report([record('identity', {'n': 0}, 0, 0)]).exit_code == 0
    assert Report([]).exit_code == 0


def test_render_json():
    doc = json.loads(Report(_sample()).render(Format.JSON))

    assert doc['summary']['failed'] == 1
    assert doc['records'][0]['skipped'] is True
    assert doc['records'][0]['reason'].startswith('pole')
    assert doc['records'][-1]['params'] == {'q': '7', 't': '1'}


def test_render_csv():
    text = Report(_sample()).render('csv')
    rows = list(csv.reader(io.StringIO(text)))

    assert rows[0] == CSV_HEADER
    assert len(rows) == 5
    assert rows[2] == ['identity', 'n=2', '0', '0', 'true', 'false']


def test_render_text():
    lines = Report(_sample()).render(Format.TEXT).splitlines()

    assert lines[0].startswith('SKIP certificate')
    assert lines[2].startswith('FAIL identity [n=3] expected=0 observed=5')
    assert lines[-1] == '4 checks: 2 passed, 1 failed, 1 skipped'


def test_unknown_format():
    with pytest.raises(RecordError):
        Report([]).render('xml')
