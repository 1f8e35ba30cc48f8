import json
import pytest
import sys
import os

sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))


def run_json(capsys, argv):
    from app.cli import run

    code = run(argv)
    out = capsys.readouterr().out
    return code, json.loads(out) if out.strip() else None


class TestCommands:
    """Test subcommands end to end"""

    def test_surface(self, capsys):
        code, payload = run_json(capsys, ['surface', '--surface', '0,3'])

        assert code == 0
        assert payload['model'] == {'euler': -1, 'genus': 0, 'boundaries': 3}
        assert len(payload['boundary_words']) == 3

    def test_surface_dot(self, capsys):
        from app.cli import run

        assert run(['surface', '--surface', '1,1', '--dot']) == 0
        assert capsys.readouterr().out.startswith('digraph fatgraph {')

    def test_selfint_word(self, capsys):
        code, payload = run_json(capsys, ['selfint', '--surface', '0,3', '--word', 'a b^3'])

        assert code == 0
        assert payload['i'] == 3
        assert payload['simple'] is False

    def test_selfint_family(self, capsys):
        code, payload = run_json(capsys, ['selfint', '--surface', '1,1', '--curve', 'eta:5'])

        assert code == 0
        assert payload['i'] == 3

    def test_cover_build(self, capsys):
        code, payload = run_json(capsys, ['cover', 'build', '--surface', '0,3',
                                          '--degree', '6', '--param', 'm=2'])

        assert code == 0
        assert payload['rep']['perms']['a'] == [5, 1, 2, 0, 3, 4]
        assert payload['invariants']['euler'] == -6
        assert payload['invariants']['transitive'] is True
        assert [t['value'] for t in payload['admissible_targets']] == [4, 6, 8]

    def test_lift(self, capsys):
        """gamma^3 lifts to a simple closed path from sheet 3"""
        code, payload = run_json(capsys, ['lift', '--surface', '0,3', '--degree', '6',
                                          '--param', 'm=2', '--word', 'a b^3', '--sheet', '3'])

        assert code == 0
        assert payload['lifts'][0]['degree'] == 1
        assert payload['lifts'][0]['i'] == 0

    def test_oracle(self, capsys):
        code, payload = run_json(capsys, ['oracle', '--surface', '0,3', '--word', 'ab', '--depth', '6'])

        assert code == 0
        assert payload['count'] == 1
        assert payload['stable'] is True

    def test_verify_all_targets(self, capsys):
        code, certificates = run_json(capsys, ['verify', '--surface', '1,1', '--degree', '3', '--all-targets'])

        assert code == 0
        assert [c['target']['value'] for c in certificates] == [1, 3]
        assert all(c['passed'] for c in certificates)

    def test_verify_to_file(self, capsys, tmp_path):
        from app.cli import run

        out = tmp_path / 'certs.json'
        assert run(['verify', '--surface', '0,3', '--degree', '4', '--out', str(out)]) == 0
        assert capsys.readouterr().out == ''
        assert json.loads(out.read_text())[0]['schema'] == 'liftlab-cert/1'

    def test_verify_grid(self, capsys, tmp_path):
        from app.cli import run

        csv_path = tmp_path / 'grid.csv'
        code = run(['verify-grid', '--max-g', '1', '--max-k', '2', '--max-n', '2',
                    '--jobs', '2', '--csv', str(csv_path)])
        report = json.loads(capsys.readouterr().out)

        assert code == 0
        assert report['failed'] == 0
        assert csv_path.exists()

    def test_verify_grid_sample(self, capsys):
        """The global seed drives the sampled grid"""
        from app.cli import run

        argv = ['--seed', '7', 'verify-grid', '--max-g', '1', '--max-k', '3',
                '--max-n', '3', '--sample', '3']
        assert run(argv) == 0
        first = json.loads(capsys.readouterr().out)
        assert run(argv) == 0
        second = json.loads(capsys.readouterr().out)

        assert first['sample'] == {'size': 3, 'seed': 7}
        assert first['total'] == 3
        assert first['certificates'] == second['certificates']

    def test_verify_grid_bad_sample(self, capsys):
        from app.cli import run

        assert run(['verify-grid', '--max-g', '1', '--sample', '0']) == 2

    def test_mindeg(self, capsys):
        code, payload = run_json(capsys, ['mindeg', '--surface', '0,3', '--word', 'a b', '--max-degree', '3'])

        assert code == 0
        assert payload['degree'] == 2

    def test_emit_round_trip(self, tmp_path):
        """Re-emitting an emitted graph is byte-identical"""
        from app.cli import run

        first, second = tmp_path / 'first.json', tmp_path / 'second.json'

        assert run(['emit', '--surface', '1,2', '--degree', '2', '--json', str(first)]) == 0
        assert run(['emit', '--input', str(first), '--json', str(second)]) == 0
        assert first.read_bytes() == second.read_bytes()


class TestExitCodes:
    """Test invalid input handling"""

    @pytest.mark.parametrize('argv', [
        ['--bogus'],
        ['selfint', '--surface', '0,3'],
        ['emit', '--surface', '0,3'],
    ])
    def test_usage_errors(self, argv, capsys):
        from app.cli import run

        assert run(argv) == 2

    @pytest.mark.parametrize('argv', [
        ['surface', '--surface', '0,2'],
        ['surface', '--surface', 'three'],
        ['verify', '--surface', '0,3', '--degree', '6', '--target-boundaries', '5'],
        ['verify', '--surface', '0,3', '--degree', '1'],
        ['selfint', '--surface', '0,3', '--word', 'a c'],
        ['selfint', '--surface', '0,3', '--word', 'a b a b'],
        ['mindeg', '--surface', '0,3', '--word', 'a'],
        ['cover', 'build', '--surface', '0,3', '--degree', '6', '--param', 'm'],
        ['emit', '--input', '/nonexistent/graph.json', '--json', '-'],
    ])
    def test_invalid_input(self, argv, capsys):
        from app.cli import run

        assert run(argv) == 2
        assert 'error:' in capsys.readouterr().err
