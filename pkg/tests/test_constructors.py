import pytest
import sys
import os

sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))


def surface(g, k):
    from surfaces.fatgraph import SurfaceSpec
    return SurfaceSpec(g, k)


def invariants_of(spec, rep):
    from covers.cover import validate_rep
    from surfaces.fatgraph import model_for
    return validate_rep(model_for(spec), rep)


class TestAdmissibleTargets:
    """Test the admissible target ranges"""

    @pytest.mark.parametrize('g,k,n,values', [
        (0, 3, 6, [4, 6, 8]),
        (0, 3, 3, [3, 5]),
        (1, 1, 3, [1, 3]),
        (1, 1, 4, [2, 4]),
        (0, 4, 2, [4, 6]),
        (0, 5, 2, [6, 8]),
        (2, 1, 3, [4, 5]),
        (3, 2, 3, [7, 8, 9]),
        (1, 3, 3, [1, 2, 3, 4]),
        (2, 0, 3, [4]),
    ])
    def test_ranges(self, g, k, n, values):
        """Inequalities and parities per surface family"""
        from covers.constructors import admissible_targets

        assert [t.value for t in admissible_targets(surface(g, k), n)] == values

    def test_kinds(self):
        """Boundary counts for planar and torus cases, genera otherwise"""
        from covers.constructors import admissible_targets

        assert admissible_targets(surface(0, 4), 2)[0].kind == 'boundaries'
        assert admissible_targets(surface(1, 1), 2)[0].kind == 'boundaries'
        assert admissible_targets(surface(1, 2), 2)[0].kind == 'genus'

    def test_degree_one_rejected(self):
        """Covers of degree 1 are trivial"""
        from covers.constructors import admissible_targets
        from utils.error_handler import CoverError

        with pytest.raises(CoverError):
            admissible_targets(surface(0, 3), 1)


class TestPantsAndTorus:
    """Test the pants and one-holed torus constructors"""

    def test_pants_anchor(self):
        """sigma_a fixes 1..m and sends m+1 to 0"""
        from covers.constructors import pants_cover

        rep = pants_cover(6, 2)

        assert rep.perm('a') == (5, 1, 2, 0, 3, 4)
        assert rep.perm('b') == (1, 2, 3, 4, 5, 0)
        assert rep.provenance == {'section': 'pants', 'case': 'fixed-sheets', 'params': {'m': 2}}

    def test_two_sheeted_pants(self):
        """n = 2 forces both generators to swap"""
        from covers.constructors import pants_cover

        rep = pants_cover(2, 0)
        assert rep.perm('a') == rep.perm('b') == (1, 0)

    @pytest.mark.parametrize('n', [2, 3, 4, 5, 6])
    def test_pants_realization_complete(self, n):
        """Sweeping m realizes every admissible boundary count"""
        from covers.constructors import admissible_targets, realized_targets

        assert realized_targets(surface(0, 3), n) == admissible_targets(surface(0, 3), n)

    def test_pants_m_out_of_range(self):
        """m <= n - 2"""
        from covers.constructors import pants_cover
        from utils.error_handler import CoverError

        with pytest.raises(CoverError):
            pants_cover(3, 2)

    @pytest.mark.parametrize('n,q,sigma_a,boundaries', [
        (2, 2, (0, 1), 2),
        (4, 2, (0, 1, 3, 2), 2),
        (3, 1, (0, 2, 1), 1),
        (5, 3, (0, 1, 2, 4, 3), 3),
    ])
    def test_s11_cover(self, n, q, sigma_a, boundaries):
        """sigma_a fixes q sheets; the boundary preimage has q components"""
        from covers.constructors import s11_cover
        from covers.permutations import full_cycle

        rep = s11_cover(n, q)

        assert rep.perm('a') == sigma_a
        assert rep.perm('b') == full_cycle(n)
        assert invariants_of(surface(1, 1), rep).boundaries == boundaries

    def test_s11_parity(self):
        """q and n must have the same parity"""
        from covers.constructors import s11_cover
        from utils.error_handler import CoverError

        with pytest.raises(CoverError):
            s11_cover(4, 1)

    @pytest.mark.parametrize('n', [2, 3, 4, 5])
    def test_torus_realization_complete(self, n):
        """Sweeping q realizes every admissible boundary count"""
        from covers.constructors import admissible_targets, realized_targets

        assert realized_targets(surface(1, 1), n) == admissible_targets(surface(1, 1), n)


class TestPlanarCovers:
    """Test covers of planar surfaces with at least four boundaries"""

    def test_extreme_boundary_counts(self):
        """Identity gluing gives (k-2)n+2 boundaries, swapping gives k"""
        from covers.constructors import planar_cover

        assert invariants_of(surface(0, 4), planar_cover(2, 4, [(1, 0), (0, 1)])).boundaries == 6
        assert invariants_of(surface(0, 4), planar_cover(2, 4, [(1, 0), (1, 0)])).boundaries == 4

    def test_paired_cuts_are_inverse(self):
        """The second generator of a pair carries the inverse permutation"""
        from covers.constructors import planar_cover
        from covers.permutations import inverse

        pi = (1, 2, 0)
        rep = planar_cover(3, 4, [(1, 2, 0), pi])

        assert rep.perm('a3') == pi
        assert rep.perm('a4') == inverse(pi)

    def test_first_gluing_must_be_full_cycle(self):
        """sigma(a2) is an n-cycle"""
        from covers.constructors import planar_cover
        from utils.error_handler import CoverError

        with pytest.raises(CoverError):
            planar_cover(2, 4, [(0, 1), (1, 0)])

    @pytest.mark.parametrize('k,n', [(4, 2), (4, 3), (6, 2), (5, 2), (5, 3)])
    def test_tau_monodromy_is_trivial(self, k, n):
        """tau^(n-1) lifts with trivial monodromy in every planar cover"""
        from covers.constructors import admissible_targets, realize_target
        from covers.curves import family_word
        from covers.permutations import identity

        spec = surface(0, k)
        word, _ = family_word('tau', n - 1, spec)
        for target in admissible_targets(spec, n):
            assert realize_target(spec, n, target).monodromy(word) == identity(n)

    @pytest.mark.parametrize('k,n', [(4, 2), (4, 3), (5, 2), (5, 3), (6, 2), (7, 2)])
    def test_planar_realization_complete(self, k, n):
        """Every admissible boundary count is realized"""
        from covers.constructors import admissible_targets, realized_targets

        assert realized_targets(surface(0, k), n) == admissible_targets(surface(0, k), n)

    def test_odd_cover_solves_the_last_generator(self):
        """The solved triple cancels"""
        from covers.constructors import planar_cover_odd
        from covers.permutations import identity
        from surfaces.words import word_from_text

        rep = planar_cover_odd(3, 5, {'pairs': [], 'alpha': (1, 2, 0), 'rho': (1, 2, 0)})

        assert rep.perm('a5') == (1, 2, 0)
        assert rep.monodromy(word_from_text('a3^-1 a4^-1 a5^-1')) == identity(3)
        assert rep.provenance['case'] == 'solved-triple'

    def test_odd_cover_block_circle_lifts_trivially(self):
        """a2 is an n-cycle; the circle around the last three boundaries is not"""
        from covers.constructors import planar_cover_odd
        from covers.permutations import identity, is_full_cycle
        from surfaces.words import word_from_text

        rep = planar_cover_odd(5, 7, {'pairs': [(1, 2, 3, 4, 0)],
                                      'alpha': (1, 0, 2, 3, 4), 'rho': (0, 2, 1, 3, 4)})

        assert is_full_cycle(rep.perm('a2'))
        assert rep.perm('a4') == (4, 0, 1, 2, 3)
        assert rep.monodromy(word_from_text('a5^-1 a6^-1 a7^-1')) == identity(5)


class TestHandleSurfaces:
    """Test covers of surfaces of positive genus"""

    def test_sg1_example(self):
        """(n, g, q) = (2, 2, 2): chi = -6, two boundaries, genus 3"""
        from covers.constructors import sg1_cover

        info = invariants_of(surface(2, 1), sg1_cover(2, 2, 2))
        assert (info.euler, info.boundaries, info.genus) == (-6, 2, 3)

    @pytest.mark.parametrize('n,g', [(3, 2), (5, 2), (4, 3)])
    def test_sg1_bounds(self, n, g):
        """q = n gives the lower bound ng - n + 1"""
        from covers.constructors import sg1_cover

        assert invariants_of(surface(g, 1), sg1_cover(n, g, n)).genus == n * g - n + 1

    @pytest.mark.parametrize('u,genus', [(0, 9), (1, 8), (2, 7)])
    def test_sg2_genus(self, u, genus):
        """The two-boundary cover has genus ng - u"""
        from covers.constructors import sg2_cover

        assert invariants_of(surface(3, 2), sg2_cover(3, 3, u)).genus == genus

    def test_sg2_range(self):
        """u <= n - 1"""
        from covers.constructors import sg2_cover
        from utils.error_handler import CoverError

        with pytest.raises(CoverError):
            sg2_cover(3, 1, 3)

    @pytest.mark.parametrize('n,g,k,genus,case', [
        (2, 1, 3, 1, 'handle'),
        (3, 1, 3, 3, 'planar'),
        (5, 1, 3, 4, 'split'),
        (3, 1, 4, 4, 'planar'),
        (4, 2, 3, 6, 'handle'),
    ])
    def test_sgk_cases(self, n, g, k, genus, case):
        """Case split by target genus"""
        from covers.constructors import sgk_cover

        rep = sgk_cover(n, g, k, genus)
        info = invariants_of(surface(g, k), rep)

        assert rep.provenance['case'] == case
        assert info.genus == genus
        assert info.euler == n * (2 - 2 * g - k)

    def test_sgk_split_pieces(self):
        """Split case: one l-sheeted handle component of minimal genus"""
        from covers.constructors import sgk_cover
        from covers.cover import build_cover, components_over
        from surfaces.fatgraph import handle_model, model_for

        spec = surface(1, 3)
        rep = sgk_cover(5, 1, 3, 4)
        complex_ = build_cover(model_for(spec), rep)
        pieces = components_over(complex_, ['x1', 'y1'], handle_model([('x1', 'y1')]))

        assert rep.provenance['params'] == {'l': 2}
        assert sorted(c.degree for c in pieces) == [1, 1, 1, 2]
        assert all(c.genus == 1 for c in pieces)

    def test_sgk_inadmissible(self):
        """Targets outside the range are refused"""
        from covers.constructors import sgk_cover
        from utils.error_handler import CoverError

        with pytest.raises(CoverError):
            sgk_cover(2, 1, 3, 5)

    @pytest.mark.parametrize('g,k,n', [
        (2, 1, 2), (2, 1, 3), (1, 2, 3), (2, 2, 2),
        (1, 3, 2), (1, 3, 3), (1, 3, 4), (1, 4, 3), (2, 3, 3), (1, 5, 2),
    ])
    def test_realization_complete(self, g, k, n):
        """Every admissible genus is realized"""
        from covers.constructors import admissible_targets, realized_targets

        assert realized_targets(surface(g, k), n) == admissible_targets(surface(g, k), n)


class TestClosedCovers:
    """Test covers of closed surfaces"""

    @pytest.mark.parametrize('n,g', [(2, 2), (3, 2), (4, 3)])
    def test_closed_cover(self, n, g):
        """Genus 1 + n(g - 1); the cover of Q is connected with n boundaries"""
        from covers.constructors import closed_cover

        closed = closed_cover(n, g)
        info = invariants_of(surface(g, 0), closed.q_rep)

        assert closed.genus == 1 + n * (g - 1)
        assert info.transitive
        assert info.boundaries == n
        assert info.genus == closed.genus

    def test_closed_torus_rejected(self):
        """Genus 1 is excluded"""
        from covers.constructors import closed_cover
        from utils.error_handler import CoverError

        with pytest.raises(CoverError):
            closed_cover(2, 1)


class TestDispatch:
    """Test realization from targets and parameters"""

    def test_inadmissible_target(self):
        """Parity violations are refused"""
        from covers.constructors import AdmissibleTarget, realize_target
        from utils.error_handler import CoverError

        with pytest.raises(CoverError, match='not admissible'):
            realize_target(surface(0, 3), 6, AdmissibleTarget('boundaries', 5))

    def test_build_from_params(self):
        """Explicit parameters reach the matching constructor"""
        from covers.constructors import build_from_params

        assert build_from_params(surface(0, 3), 6, {'m': 2}).perm('a') == (5, 1, 2, 0, 3, 4)
        assert build_from_params(surface(1, 1), 4, {'q': 2}).perm('a') == (0, 1, 3, 2)
        assert build_from_params(surface(3, 2), 3, {'u': 0}).provenance['case'] == 'full-genus'

    def test_missing_parameter(self):
        """Each family names its parameter"""
        from covers.constructors import build_from_params
        from utils.error_handler import CoverError

        with pytest.raises(CoverError, match="'m'"):
            build_from_params(surface(0, 3), 6, {'q': 2})
