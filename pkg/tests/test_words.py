import pytest
import sys
import os

sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))


class TestParsing:
    """Test the word grammar"""

    def test_whitespace_separated_terms(self):
        """'a b^3' expands to four letters"""
        from surfaces.words import Letter, parse_word

        assert parse_word('a b^3') == (Letter('a', 1),) + (Letter('b', 1),) * 3

    def test_juxtaposed_terms(self):
        """Terms may be written without spaces"""
        from surfaces.words import parse_word

        assert parse_word('abab^3') == parse_word('a b a b^3')
        assert parse_word('a2a3^-1a4') == parse_word('a2 a3^-1 a4')

    def test_uppercase_is_inverse(self):
        """An uppercase initial inverts the generator"""
        from surfaces.words import Letter, parse_word

        assert parse_word('A b') == (Letter('a', -1), Letter('b', 1))
        assert parse_word('A^-2') == (Letter('a', 1), Letter('a', 1))

    def test_zero_exponent(self):
        """x^0 contributes nothing"""
        from surfaces.words import parse_word

        assert parse_word('a b^0 a') == parse_word('a^2')

    @pytest.mark.parametrize('text', ['a^', 'a^x', 'a + b', 'a^+-2'])
    def test_malformed(self, text):
        """Malformed text raises WordError"""
        from surfaces.words import parse_word
        from utils.error_handler import WordError

        with pytest.raises(WordError):
            parse_word(text)

    def test_unknown_generator(self):
        """Generators outside the alphabet are rejected"""
        from surfaces.words import parse_word
        from utils.error_handler import WordError

        with pytest.raises(WordError, match='unknown generator'):
            parse_word('a z', alphabet=['a', 'b'])

    def test_null_homotopic(self):
        """Words reducing to nothing are rejected"""
        from surfaces.words import word_from_text
        from utils.error_handler import WordError

        with pytest.raises(WordError, match='null-homotopic'):
            word_from_text('a b b^-1 a^-1')

    def test_cyclic_reduction(self):
        """Cancellation across the wrap-around is removed"""
        from surfaces.words import word_from_text

        assert str(word_from_text('b a b^3 b^-1')) == 'b a b^2'
        assert str(word_from_text('b^-1 a b^3')) == 'a b^2'


class TestCyclicWord:
    """Test cyclic word structure"""

    def test_canonical_printing(self):
        """Runs are grouped, inverses printed with negative exponents"""
        from surfaces.words import word_from_text

        assert str(word_from_text('abaaab')) == 'a b a^3 b'
        assert str(word_from_text('x1 Y1 Y1')) == 'x1 y1^-2'

    def test_not_cyclically_reduced(self):
        """Constructing an unreduced word directly fails"""
        from surfaces.words import CyclicWord, Letter
        from utils.error_handler import WordError

        with pytest.raises(WordError):
            CyclicWord((Letter('a', 1), Letter('b', 1), Letter('a', -1)))

    def test_rotation_and_inversion(self):
        """Cyclic and unoriented equality"""
        from surfaces.words import word_from_text

        word = word_from_text('a b a^3 b')

        assert word.equals_cyclic(word.rotate(3))
        assert not word.equals_cyclic(word.inverse())
        assert word.equals_unoriented(word.inverse().rotate(2))

    def test_primitive(self):
        """Proper powers are detected"""
        from surfaces.words import is_primitive, word_from_text

        assert is_primitive(word_from_text('a b'))
        assert not is_primitive(word_from_text('a b a b'))
        assert not is_primitive(word_from_text('a b').power(3))

    def test_exponent_sums(self):
        """Homology vector and its gcd"""
        from surfaces.words import homology_gcd, word_from_text

        word = word_from_text('a b a^3 b')

        assert word.exponent_sums() == {'a': 4, 'b': 2}
        assert homology_gcd(word) == 2
        assert homology_gcd(word_from_text('a b a^-1 b^-1')) == 0
        assert homology_gcd(word_from_text('a b a b^4')) == 1

    def test_substitute_and_rename(self):
        """Homomorphic images are cyclically reduced"""
        from surfaces.words import Letter, rename, substitute, word_from_text

        word = word_from_text('a b')

        assert str(rename(word, {'a': 'x1', 'b': 'y1'})) == 'x1 y1'
        image = substitute(word, {'a': (Letter('b', -1), Letter('c', 1))})
        assert str(image) == 'c'
