"""
    dispotrees.test_cli
    ~~~~~~~~~~~~~~~~~~~

    Test suite for the command line interface.

    :copyright: Copyright 2026 by the dispotrees contributors
    :license: BSD, see LICENSE for details.

"""

import json

import pytest

from . import CoefficientOverflowError, VerificationReport, constants, \
    verifier
from .cli import main

SMALL_DISPOSITION_JSON = (
    '{"m": 5, "n": 6, "segments": [[], [4, 1], [], [5], [3, 2], []]}')


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def write(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text)
    return str(path)


def test_trees_enumerate(capsys):
    code, out = run(capsys, 'trees', 'enumerate', '--n', '3')
    assert code == 0
    assert len(out.splitlines()) == 12
    code, out = run(capsys, 'trees', 'enumerate', '--n', '3', '--root', '1')
    assert len(out.splitlines()) == 4
    code, out = run(
        capsys, 'trees', 'enumerate', '--n', '2', '--format', 'json')
    assert [json.loads(line)['tree']['label'] for line in out.splitlines()] \
        == [1, 2]


def test_dispositions_enumerate(capsys):
    code, out = run(
        capsys, 'dispositions', 'enumerate', '--m', '2', '--n', '2')
    assert code == 0
    assert out.splitlines()[0] == '[2 1|]'
    assert len(out.splitlines()) == 6


def test_map_disposition_to_tree(capsys, tmp_path):
    infile = write(tmp_path, 'in.jsonl', SMALL_DISPOSITION_JSON + '\n\n')
    code, out = run(capsys, 'map', 'disposition-to-tree', '--infile', infile)
    assert code == 0
    assert out == '2(4(6) 5(3 1))\n'


def test_map_round_trip(capsys, tmp_path):
    _, trees = run(capsys, 'trees', 'enumerate', '--n', '4')
    dispositions = tmp_path / 'dispositions.txt'
    code, _ = run(
        capsys, 'map', 'tree-to-disposition',
        '--infile', write(tmp_path, 'trees.txt', trees),
        '--outfile', str(dispositions))
    assert code == 0
    code, out = run(
        capsys, 'map', 'disposition-to-tree', '--infile', str(dispositions))
    assert code == 0
    assert out == trees


def test_map_permutations(capsys, tmp_path):
    infile = write(tmp_path, 'd.txt', '[2 9|7 4||5||6 1 8|3|]\n')
    code, out = run(capsys, 'map', 'disposition-to-perm', '--infile', infile)
    assert out == '(6 1)@6(2)@1(3)@7(7 4)@2(5)@4(8)@6(9)@1\n'
    code, out = run(
        capsys, 'map', 'perm-to-disposition', '--n', '8',
        '--infile', write(tmp_path, 'p.txt', out))
    assert code == 0
    assert out == '[2 9|7 4||5||6 1 8|3|]\n'


def test_marks(capsys, tmp_path):
    expected = '6_5 4_4 3_3 1_2 5_1 2_0\n'
    code, out = run(
        capsys, 'marks', '--infile',
        write(tmp_path, 't.txt', '2(4(6) 5(3 1))\n'))
    assert (code, out) == (0, expected)
    code, out = run(
        capsys, 'marks', '--input', 'disposition', '--infile',
        write(tmp_path, 'd.txt', '[|4 1||5|3 2|]\n'))
    assert (code, out) == (0, expected)


def test_stats(capsys, tmp_path):
    code, out = run(
        capsys, 'stats', 'disposition', '--infile',
        write(tmp_path, 'd.txt', '[2 9|7 4||5||6 1 8|3|]\n'))
    assert out == '[2 9|7 4||5||6 1 8|3|] rlmin=2,1,0,1,0,2,1,0 gdes=2\n'
    code, out = run(
        capsys, 'stats', 'tree', '--format', 'json', '--infile',
        write(tmp_path, 't.txt', '2(4(6) 5(3 1))\n'))
    stats = json.loads(out)['stats']
    assert stats['eld_total'] == 2
    assert stats['young_children'] == [0, 1, 0, 1, 1, 0]
    assert stats['beta'] == [1, 1, 3, 4, 1, 6]


def test_sample(capsys):
    arguments = ('sample', 'tree', '--n', '5', '--seed', '11', '--count', '7')
    code, first = run(capsys, *arguments)
    assert code == 0
    assert len(first.splitlines()) == 7
    assert run(capsys, *arguments)[1] == first
    code, out = run(
        capsys, 'sample', 'disposition', '--m', '3', '--n', '2', '--seed',
        '1', '--format', 'json')
    data = json.loads(out)
    assert data['rng'] == 'PCG64'
    assert data['seed'] == 1
    assert data['m'] == 3
    code, out = run(capsys, 'sample', 'disposition', '--n', '2', '--seed', '1')
    assert code == constants.EXIT_USAGE_ERROR


def test_verify(capsys):
    code, out = run(capsys, 'verify', '--identity', 'trees', '--n', '1')
    assert code == 0
    assert 'PASS' in out
    code, out = run(
        capsys, 'verify', '--identity', 'all', '--caps',
        'm=2,n=2,trees=3,gessel_seo=2', '--format', 'json')
    assert code == 0
    reports = [json.loads(line) for line in out.splitlines()]
    assert all(report['passed'] for report in reports)
    code, out = run(
        capsys, 'verify', '--identity', 'rooted-trees', '--n', '3')
    assert len(out.splitlines()) == 3


def test_verify_failure(capsys, monkeypatch):
    monkeypatch.setitem(
        verifier.VERIFIERS, constants.IDENTITY_TREES,
        lambda n: VerificationReport(
            constants.IDENTITY_TREES, {'n': n}, 1, 1, False,
            {'object': '1', 'reason': 'corrupted'}))
    code, out = run(capsys, 'verify', '--identity', 'trees', '--n', '1')
    assert code == constants.EXIT_VERIFICATION_FAILED
    assert 'corrupted' in out


def test_verify_overflow(capsys, monkeypatch):
    def overflow(n):
        raise CoefficientOverflowError(
            'coefficient too large', constants.STATUS_OVERFLOW)
    monkeypatch.setitem(
        verifier.VERIFIERS, constants.IDENTITY_TREES, overflow)
    code, _ = run(capsys, 'verify', '--identity', 'trees', '--n', '2')
    assert code == constants.EXIT_OVERFLOW


def test_usage_errors(capsys, tmp_path):
    for argv in (['trees'], ['trees', 'enumerate'], ['verify'],
                 ['verify', '--identity', 'thm9'], []):
        with pytest.raises(SystemExit) as exception:
            main(argv)
        assert exception.value.code == constants.EXIT_USAGE_ERROR
    code, _ = run(capsys, 'trees', 'enumerate', '--n', '0')
    assert code == constants.EXIT_USAGE_ERROR
    code, _ = run(
        capsys, 'map', 'tree-to-disposition', '--infile',
        write(tmp_path, 'bad.txt', '1(\n'))
    assert code == constants.EXIT_USAGE_ERROR
    code, _ = run(capsys, 'verify', '--identity', 'trees', '--caps', 'k=1')
    assert code == constants.EXIT_USAGE_ERROR


def test_verify_identity_aliases(capsys):
    code, out = run(capsys, 'verify', '--identity', 'eq3', '--n', '1')
    assert code == constants.EXIT_SUCCESS
    assert out.split()[0] == constants.IDENTITY_TREES
    for alias, identity in constants.IDENTITY_ALIASES.items():
        code, out = run(
            capsys, 'verify', '--identity', alias, '--n', '2', '--m', '2',
            '--r', '1', '--format', 'json')
        assert code == constants.EXIT_SUCCESS
        reports = [json.loads(line) for line in out.splitlines()]
        assert [report['identity'] for report in reports] == [identity]


def test_verify_fixed_outside_domain(capsys):
    code, out = run(capsys, 'verify', '--identity', 'all', '--n', '1')
    assert code == constants.EXIT_SUCCESS
    identities = set(line.split()[0] for line in out.splitlines())
    assert constants.IDENTITY_TREES in identities
    assert constants.IDENTITY_ROOTED_TREES not in identities
    code, out = run(capsys, 'verify', '--identity', 'all', '--r', '4')
    assert code == constants.EXIT_SUCCESS
    assert all(' r=4 ' in line or 'r=' not in line
               for line in out.splitlines())
    code, _ = run(capsys, 'verify', '--identity', 'rooted-trees', '--n', '1')
    assert code == constants.EXIT_USAGE_ERROR


def test_sample_negative_seed(capsys):
    code, out = run(capsys, 'sample', 'tree', '--n', '3', '--seed', '-1')
    assert code == constants.EXIT_USAGE_ERROR
    assert out == ''
    code, _ = run(
        capsys, 'sample', 'disposition', '--m', '2', '--n', '3',
        '--seed', '-5')
    assert code == constants.EXIT_USAGE_ERROR
