import io
import json

import numpy as np
import pandas as pd
import pytest

import main


def _run(capsys, *argv):
    code = main.run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def _csv(text):
    return pd.read_csv(io.StringIO(text))


def test_sample_orbitlike(capsys):
    code, out, _ = _run(capsys, 'sample', '--family', 'orbitlike', '--k', '0.5', '--count', '1000')
    assert code == 0
    frame = _csv(out)
    assert list(frame.columns) == ['s', 'gamma1', 'gamma2', 'phi', 'kappa']
    assert len(frame) == 1000
    assert (frame['gamma2'] > 0).all()


def test_sample_wavelike_changes_curvature_sign(capsys):
    code, out, _ = _run(capsys, 'sample', '--family', 'wavelike', '--k', '0.8', '--count', '400')
    assert code == 0
    kappa = _csv(out)['kappa'].to_numpy()
    assert kappa.max() > 0 > kappa.min()


def test_sample_rotation_and_special(capsys):
    code, out, err = _run(capsys, 'sample', '--rotation', '2/3', '--count', '10')
    assert code == 0 and len(_csv(out)) == 10
    assert 'k = ' in err
    code, out, _ = _run(capsys, 'sample', '--family', 'circular', '--count', '10')
    assert code == 0 and len(_csv(out)) == 10


def test_zero_count_writes_header_only(capsys):
    code, out, _ = _run(capsys, 'sample', '--k', '0.5', '--count', '0')
    assert code == 0
    assert out == 's,gamma1,gamma2,phi,kappa\n'


def test_table_printed_rows(capsys):
    code, out, _ = _run(capsys, 'table', '--printed-only')
    assert code == 0
    frame = _csv(out)
    assert len(frame) == 26
    assert list(frame.columns) == ['n', 'm', 'k', 'W', 'L', 'S']


def test_intersections_of_2_3(capsys):
    code, out, _ = _run(capsys, 'intersections', '--m', '2', '--n', '3')
    assert code == 0
    assert len(_csv(out)) == 3


@pytest.mark.parametrize('argv', [
    ('--format', 'svg', 'table', '--max-n', '5'),
    ('sample', '--k', '1.5'),
    ('sample', '--family', 'wavelike', '--k', '0.5'),
    ('sample', '--family', 'wavelike', '--rotation', '2/3'),
    ('sample', '--k', '0.5', '--s-min', '2', '--s-max', '1'),
    ('intersections', '--m', '2', '--n', '4'),
    ('--threads', '0', 'table', '--max-n', '5'),
    ('verify', 'all-of-them'),
])
def test_invalid_parameters_exit_with_2(capsys, argv):
    try:
        code = main.run(list(argv))
    except SystemExit as exc:
        code = exc.code
    assert code == 2
    assert capsys.readouterr().out == ''


@pytest.mark.parametrize('fmt', ['csv', 'json'])
def test_output_is_deterministic(capsys, fmt):
    argv = ('--format', fmt, 'sample', '--family', 'wavelike', '--k', '0.85', '--count', '50', '--enclosure')
    first = _run(capsys, *argv)[1]
    second = _run(capsys, *argv)[1]
    assert first == second


def test_json_sample_payload(capsys):
    code, out, _ = _run(capsys, '--format', 'json', 'sample', '--k', '0.5', '--count', '5', '--enclosure')
    assert code == 0
    payload = json.loads(out)
    assert payload['family'] == 'orbitlike'
    assert len(payload['samples']) == 5
    assert payload['enclosure']['kind'] == 'annulus'
    assert payload['mu'] == pytest.approx(4 * 0.75 / 1.75 ** 2)


def test_svg_written_to_file(capsys, tmp_path):
    target = tmp_path / 'curve.svg'
    argv = ('--format', 'svg', '--out', str(target), 'intersections', '--m', '2', '--n', '3')
    assert _run(capsys, *argv)[0] == 0
    first = target.read_text(encoding='utf-8')
    assert first.lstrip().startswith('<?xml')
    assert _run(capsys, *argv)[0] == 0
    assert target.read_text(encoding='utf-8') == first


@pytest.mark.slow
def test_dirichlet_closed_data(capsys):
    code, out, _ = _run(capsys, '--format', 'json', 'dirichlet', '--a1', '0', '--a2', '1', '--b1', '0', '--b2', '1',
                        '--phi-a', '0', '--phi-b', '0', '--k-min', '0.92', '--k-max', '0.95',
                        '--grid', '12', '--l-max', '5', '--count', '20')
    assert code == 0
    payload = json.loads(out)
    assert payload['problem']['A2'] == 1.0
    for solution in payload['solutions']:
        assert len(solution['path']) == 20
        assert np.isclose(solution['path'][-1]['gamma1'], 0.0, atol=1e-8)


@pytest.mark.slow
def test_verify_special_functions(capsys):
    code, out, _ = _run(capsys, 'verify', 'special-functions')
    assert code == 0
    assert _csv(out)['passed'].all()
