import pytest
import sys
import os

sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))


@pytest.fixture
def pants():
    from surfaces.fatgraph import SurfaceSpec, model_for
    return model_for(SurfaceSpec(0, 3))


@pytest.fixture
def double_pants(pants):
    """Two-sheeted pants cover with both generators swapping the sheets"""
    from covers.cover import CoverRep, build_cover
    return build_cover(pants, CoverRep(2, {'a': (1, 0), 'b': (1, 0)}))


class TestPermutations:
    """Test sheet permutations"""

    def test_compose_left_to_right(self):
        """compose(p, q) applies p first"""
        from covers.permutations import compose

        assert compose((1, 2, 0), (1, 0, 2)) == (0, 2, 1)

    def test_from_cycles(self):
        """Cycle input to image tuple"""
        from covers.permutations import cycle_notation, from_cycles

        p = from_cycles(6, [[0, 5, 4, 3]])

        assert p == (5, 1, 2, 0, 3, 4)
        assert cycle_notation(p) == '(0 5 4 3)'

    def test_invalid_cycles(self):
        """Repeated points are rejected"""
        from covers.permutations import from_cycles
        from utils.error_handler import CoverError

        with pytest.raises(CoverError):
            from_cycles(3, [[0, 1], [1, 2]])

    def test_inverse_and_power(self):
        """Inverse and powers of the full cycle"""
        from covers.permutations import compose, full_cycle, identity, inverse, power

        c = full_cycle(5)

        assert compose(c, inverse(c)) == identity(5)
        assert power(c, 5) == identity(5)
        assert power(c, -1) == inverse(c)

    def test_cycle_counts(self):
        """Cycle decomposition counts fixed points"""
        from covers.permutations import cycle_count, cycles, with_cycles

        assert cycles((1, 0, 2)) == [(0, 1), (2,)]
        for count in range(1, 6):
            assert cycle_count(with_cycles(5, count)) == count

    def test_orbits_and_transitivity(self):
        """Orbits of the generated group"""
        from covers.permutations import is_transitive, orbits

        assert orbits([(1, 0, 2, 3), (0, 1, 3, 2)], 4) == [[0, 1], [2, 3]]
        assert is_transitive([(1, 0, 2), (0, 2, 1)], 3)

    def test_canonical_form_is_conjugacy_invariant(self):
        """Relabelled tuples share a canonical form"""
        from covers.permutations import canonical_form, compose, inverse

        perms = {'a': (1, 2, 0, 3), 'b': (3, 1, 2, 0)}
        h = (2, 0, 3, 1)
        conjugated = {label: compose(inverse(h), p, h) for label, p in perms.items()}

        assert canonical_form(perms, ['a', 'b']) == canonical_form(conjugated, ['a', 'b'])

    def test_disconnected_relabel(self):
        """BFS relabelling needs a transitive tuple"""
        from covers.permutations import relabel_from
        from utils.error_handler import CoverError

        with pytest.raises(CoverError, match='disconnected cover'):
            relabel_from({'a': (1, 0, 2)}, ['a'], 0)


class TestCoverRep:
    """Test representations and their JSON form"""

    def test_monodromy(self):
        """Word monodromy composes letters left to right"""
        from covers.cover import CoverRep
        from surfaces.words import word_from_text

        rep = CoverRep(3, {'a': (1, 2, 0), 'b': (1, 0, 2)})

        assert rep.monodromy(word_from_text('a b')) == (0, 2, 1)

    def test_json_round_trip(self):
        """to_dict and from_dict are inverse"""
        from covers.cover import CoverRep

        rep = CoverRep(2, {'a': (1, 0), 'b': (0, 1)}, {'section': 'pants'})
        again = CoverRep.from_dict(rep.to_dict())

        assert again == rep
        assert again.provenance == {'section': 'pants'}

    def test_malformed_json(self):
        """Malformed representations raise CoverError"""
        from covers.cover import CoverRep
        from utils.error_handler import CoverError

        with pytest.raises(CoverError):
            CoverRep.from_dict({'perms': {'a': [1, 0]}})


class TestCoverConstruction:
    """Test total fat graphs of covers"""

    def test_double_pants_invariants(self, pants):
        """Two sheets, both generators swapping: chi = -2, genus 0, four boundaries"""
        from covers.cover import CoverRep, validate_rep

        info = validate_rep(pants, CoverRep(2, {'a': (1, 0), 'b': (1, 0)}))

        assert tuple(info) == (2, -2, 0, 4, True)

    def test_total_graph_shape(self, double_pants):
        """Sheet s of edge e is edge e * n + s, labelled label_s"""
        total = double_pants.total

        assert total.vertex_count == 2
        assert total.labels == ['a_0', 'a_1', 'b_0', 'b_1']
        assert total.edge(0).tail == 0 and total.edge(0).head == 1
        assert double_pants.sheet_of_edge(3) == 1

    def test_label_mismatch(self, pants):
        """Representations must cover exactly the base labels"""
        from covers.cover import CoverRep, build_cover
        from utils.error_handler import CoverError

        with pytest.raises(CoverError, match='labels mismatch'):
            build_cover(pants, CoverRep(2, {'a': (1, 0)}))

    def test_not_a_permutation(self, pants):
        """Images must form a permutation"""
        from covers.cover import CoverRep, build_cover
        from utils.error_handler import CoverError

        with pytest.raises(CoverError):
            build_cover(pants, CoverRep(2, {'a': (1, 1), 'b': (1, 0)}))

    def test_disconnected_cover(self, pants):
        """Non-transitive representations are rejected"""
        from covers.cover import CoverRep, build_cover
        from utils.error_handler import CoverError

        with pytest.raises(CoverError, match='disconnected cover'):
            build_cover(pants, CoverRep(2, {'a': (0, 1), 'b': (0, 1)}))


class TestLifting:
    """Test lifts of closed curves"""

    def test_lift_closes_in_one_turn(self, double_pants):
        """ab has trivial monodromy, so each lift has degree 1"""
        from covers.cover import lift_path
        from surfaces.words import word_from_text

        lift = lift_path(double_pants, word_from_text('a b'), 0)

        assert lift.degree == 1
        assert lift.path == ((0, 1), (3, 1))
        assert str(lift.word(double_pants.total)) == 'a_0 b_1'

    def test_preimage_components(self, double_pants):
        """One component per cycle of the monodromy"""
        from covers.cover import preimage_components
        from surfaces.words import word_from_text

        assert [lift.degree for lift in preimage_components(double_pants, word_from_text('a b'))] == [1, 1]
        assert [lift.degree for lift in preimage_components(double_pants, word_from_text('a'))] == [2]

    def test_sheet_out_of_range(self, double_pants):
        """Start sheets must exist"""
        from covers.cover import lift_path
        from surfaces.words import word_from_text
        from utils.error_handler import CoverError

        with pytest.raises(CoverError):
            lift_path(double_pants, word_from_text('a b'), 2)

    def test_components_over_piece(self):
        """Preimage of a handle splits along the orbits of its generators"""
        from covers.cover import CoverRep, build_cover, components_over
        from surfaces.fatgraph import SurfaceSpec, handle_model, model_for

        spec = SurfaceSpec(1, 2)
        rep = CoverRep(3, {'c': (0, 2, 1), 'x1': (0, 1, 2), 'y1': (1, 0, 2)})
        complex_ = build_cover(model_for(spec), rep)
        pieces = components_over(complex_, ['x1', 'y1'], handle_model([('x1', 'y1')]))

        assert [(c.sheets, c.degree, c.genus) for c in pieces] == [((0, 1), 2, 1), ((2,), 1, 1)]

    def test_boundary_parallel(self, pants):
        """Boundary words are boundary-parallel, ab is not"""
        from covers.cover import is_boundary_parallel
        from surfaces.words import word_from_text

        assert is_boundary_parallel(pants, word_from_text('a'))
        assert is_boundary_parallel(pants, word_from_text('b a^-1'))
        assert not is_boundary_parallel(pants, word_from_text('a b'))


def random_word(rng, labels, length):
    """Random cyclically reduced word, or None when the ends cancel"""
    from surfaces.words import CyclicWord, Letter

    letters = []
    while len(letters) < length:
        letter = Letter(labels[int(rng.integers(len(labels)))], int(rng.choice([1, -1])))
        if letters and letter == letters[-1].inverse():
            continue
        letters.append(letter)
    if len(letters) > 1 and letters[0] == letters[-1].inverse():
        return None
    return CyclicWord(tuple(letters))


class TestEssentialLifts:
    """Test that essential curves have essential preimages"""

    def test_sampled_pairs(self):
        """Every preimage component of a sampled essential word stays essential"""
        import numpy as np
        from app.harness import GridBounds, grid_instances
        from covers.constructors import realize_target
        from covers.cover import build_cover, is_boundary_parallel, preimage_components
        from surfaces.fatgraph import model_for
        from surfaces.words import is_primitive

        rng = np.random.default_rng(2023)
        covers = []
        for spec, n, target in grid_instances(GridBounds(max_genus=1, max_boundaries=4, max_degree=4)):
            base = model_for(spec)
            covers.append((base, n, build_cover(base, realize_target(spec, n, target))))
        assert covers

        pairs = 0
        while pairs < 120:
            base, n, complex_ = covers[pairs % len(covers)]
            word = random_word(rng, base.labels, int(rng.integers(1, 8)))
            if word is None or not is_primitive(word) or is_boundary_parallel(base, word):
                continue

            components = preimage_components(complex_, word)
            assert sum(c.degree for c in components) == n
            for component in components:
                assert not is_boundary_parallel(complex_.total, component.word(complex_.total)), \
                    (str(word), component.start_sheet)
            pairs += 1
