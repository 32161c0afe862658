import json
import math

import numpy as np
import pandas as pd
import pytest

from reporting import ElasticaReporter, csv_text, json_text, svg_text, to_frame, write_output
from utils import DomainError


def test_csv_keeps_seventeen_digits():
    text = csv_text(pd.DataFrame({'x': [1.0 / 3.0]}))
    assert float(text.splitlines()[1]) == 1.0 / 3.0


def test_json_sorted_and_plain():
    payload = {'b': np.float64(0.1), 'a': np.arange(2), 'c': math.inf, 'd': np.bool_(True)}
    text = json_text(payload)
    assert list(json.loads(text)) == ['a', 'b', 'c', 'd']
    assert json.loads(text) == {'a': [0, 1], 'b': 0.1, 'c': 'inf', 'd': True}


def test_to_frame_column_order():
    frame = to_frame([{'b': 1, 'a': 2}], columns=('a', 'b'))
    assert list(frame.columns) == ['a', 'b']


def test_svg_is_reproducible():
    t = np.linspace(0.0, math.pi, 50)
    paths = [(np.cos(t), 1.0 + np.sin(t))]
    first = svg_text(paths, (-1.0, 1.0, 1.0, 2.0), circles=[((0.0, 1.0), 1.0)], markers=[(0.0, 2.0)])
    second = svg_text(paths, (-1.0, 1.0, 1.0, 2.0), circles=[((0.0, 1.0), 1.0)], markers=[(0.0, 2.0)])
    assert first == second
    assert '<svg' in first


def test_svg_needs_finite_bounds():
    with pytest.raises(DomainError):
        svg_text([], (0.0, math.inf, 0.0, 1.0))


def test_write_output(capsys, tmp_path):
    assert write_output('x\n') is None
    assert capsys.readouterr().out == 'x\n'
    target = tmp_path / 'out.csv'
    assert write_output('y\n', str(target)) == str(target)
    assert target.read_text() == 'y\n'


def test_comprehensive_report(tmp_path, capsys):
    summary = ElasticaReporter(threads=2).generate_comprehensive_report(8, str(tmp_path), figure_pairs=((2, 3),))
    assert summary['pairs'] == 4
    assert summary['missing_from_printed'] == []
    assert summary['min_energy_over_4n_pi'] > 1.0
    for name in ('closed_curves.csv', 'energy_length.png', 'gamma_2_3.svg', 'instability.csv',
                 'torus_gap.csv', 'summary.json'):
        assert (tmp_path / name).exists()
    table = pd.read_csv(tmp_path / 'closed_curves.csv')
    assert list(table.columns) == ['n', 'm', 'k', 'W', 'L', 'S', 'printed']
    assert 'Report generated' in capsys.readouterr().out
