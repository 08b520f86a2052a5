"""
Pruebas de integración para GalleryController.
"""
import json

import pytest

from coxlip.controllers.gallery_controller import ANCHORS


def invoke(runner, cli, *args):
    result = runner.invoke(cli, ['gallery', *args])
    return result, (json.loads(result.stdout) if result.stdout else None)


class TestCombinatorialGallery:
    """Suite de pruebas para los ejemplos combinatorios."""

    def test_cyclic_maps_exhaustive(self, cli, runner):
        """Prueba el filtro exhaustivo de S_3: 46656 candidatos y 12 aplicaciones."""
        result, data = invoke(runner, cli, 'cyclic-maps', '--n', '3')

        assert result.exit_code == 0
        assert data['strategy'] == 'literal-filter'
        assert data['candidates'] == 46656
        assert data['passing'] == 12
        assert data['matches_theorem'] is True
        assert data['grow_or_linger'] is True
        assert data['anchor'] == ANCHORS['cyclic-maps']

    @pytest.mark.parametrize('n, passing', [(2, 4), (4, 48)])
    def test_cyclic_maps_tree(self, cli, runner, n, passing):
        """Prueba la búsqueda por árbol en S_2 y S_4."""
        result, data = invoke(runner, cli, 'cyclic-maps', '--n', str(n), '--strategy', 'tree')

        assert result.exit_code == 0
        assert data['strategy'] == 'spanning-tree'
        assert data['passing'] == passing

    def test_coxeter_maps(self, cli, runner, write_json):
        """Prueba la familia canónica de tamaño 2|W| en A_3."""
        path = write_json({"rank": 3, "m": [[1, 3, 2], [3, 1, 3], [2, 3, 1]]})
        result, data = invoke(runner, cli, 'coxeter-maps', '--matrix', path)

        assert result.exit_code == 0
        assert data['order'] == 24
        assert data['components'] == 1
        assert data['expected_size'] == data['count'] == 48
        assert data['matches_theorem'] is True

    def test_coxeter_maps_with_oracle(self, cli, runner, write_json):
        """Prueba A_1×A_1 contra el oráculo exhaustivo."""
        path = write_json({"rank": 2, "m": [[1, 2], [2, 1]]})
        result, data = invoke(runner, cli, 'coxeter-maps', '--matrix', path, '--exhaustive')

        assert result.exit_code == 0
        assert data['expected_size'] == 16
        assert data['oracle_strategy'] == 'literal-filter'
        assert data['oracle_agrees'] is True

    def test_generator_only(self, cli, runner):
        """Prueba los tres certificados del ejemplo de S_3."""
        result, data = invoke(runner, cli, 'generator-only')

        assert result.exit_code == 0
        assert data['generator_only'] == 'pass'
        assert data['full_c_simple'] == 'fail'
        assert data['constant_or_translation'] is False
        assert data['in_enumerated_set'] is False
        assert data['violations']
        assert len(data['map']) == 6

    def test_infinite_dihedral_small_ball(self, cli, runner):
        """Prueba que la bola de radio 1 no tiene violaciones."""
        result, data = invoke(runner, cli, 'infinite-dihedral', '--radius', '1')

        assert result.exit_code == 0
        assert data['ball_size'] == 3
        assert data['t_lipschitz']['passed'] is True

    def test_infinite_dihedral_default_radius(self, cli, runner):
        """Prueba que con radio 12 la condición con reflexiones falla y con generadores se cumple."""
        result, data = invoke(runner, cli, 'infinite-dihedral')

        assert result.exit_code == 1
        assert data['radius'] == 12
        assert data['ball_size'] == 25
        assert data['t_lipschitz']['passed'] is False
        assert {'theta': 'ab', 'sigma': 'aba'} in data['t_lipschitz']['violations']
        assert data['s_lipschitz']['passed'] is True
        assert data['non_constant_witness'] and data['non_translation_witness']

    def test_infinite_dihedral_invalid_radius(self, cli, runner):
        """Prueba que el radio debe ser positivo."""
        result, _ = invoke(runner, cli, 'infinite-dihedral', '--radius', '0')
        assert result.exit_code == 2
        assert '"SCHEMA_VALIDATION_ERROR"' in result.stderr


class TestSpectralGallery:
    """Suite de pruebas para los ejemplos matriciales."""

    @pytest.mark.parametrize('n', [2, 3])
    def test_torus_maps(self, cli, runner, n):
        """Prueba los veredictos de la identidad, la rotación, la reordenación y Ad_P."""
        result, data = invoke(runner, cli, 'torus-maps', '--n', str(n))

        assert result.exit_code == 0
        verdicts = data['verdicts']
        assert verdicts['identity']['verdict'] == 'conjugation'
        assert verdicts['coordinate_rotation']['verdict'] == 'conjugation'
        assert verdicts['sorted_spectrum']['verdict'] == 'reordering'
        assert verdicts['permutation_conjugations'] == (2 if n == 2 else 6)
        assert ('generator_only' in verdicts) == (n == 3)

    def test_torus_maps_generator_only_table(self, cli, runner):
        """Prueba que la tabla del ejemplo con generadores no es de ningún tipo."""
        _, data = invoke(runner, cli, 'torus-maps', '--n', '3')
        assert data['verdicts']['generator_only']['verdict'] == 'neither'
        assert len(data['verdicts']['generator_only']['witnesses']) == 4

    def test_hermitian_hybrid(self, cli, runner):
        """Prueba el barrido sin inconsistencias y con testigos."""
        result, data = invoke(runner, cli, 'hermitian-hybrid', '--samples', '20')

        assert result.exit_code == 0
        assert data['inconsistencies'] == 0
        assert data['continuity_error'] < 1e-6
        assert data['witnesses']['not_conjugation'] == {'input': [2.0, 1.0, 3.0], 'output': [1.0, 2.0, 3.0]}

    def test_su2(self, cli, runner):
        """Prueba la comprobación por muestreo y el testigo de no globalidad."""
        result, data = invoke(runner, cli, 'su2', '--samples', '50')

        assert result.exit_code == 0
        assert data['cs_check']['passed'] is True
        assert data['cs_check']['samples'] == 50
        assert data['non_globality']['outputs_differ'] is True

    @pytest.mark.parametrize('map_name', ['identity', 'conjugation'])
    def test_scaling_extends(self, cli, runner, map_name):
        """Prueba que la identidad y Ad_Q se extienden a U(n)."""
        result, data = invoke(runner, cli, 'scaling', '--map', map_name, '--samples', '5')

        assert result.exit_code == 0
        assert data['well_defined'] is True
        assert data['samples'] == 5

    def test_scaling_sorted_fails(self, cli, runner):
        """Prueba que la reordenación en SU(3) sale con código 1 y el testigo diag(1, ζ, ζ²)."""
        result, data = invoke(runner, cli, 'scaling', '--map', 'sorted', '--samples', '5')

        assert result.exit_code == 1
        assert data['well_defined'] is False
        witness = data['witness']
        assert witness['deviation'] > 1e-3
        assert witness['matrix'][0][0] == pytest.approx([1.0, 0.0])
        assert witness['matrix'][0][1] == pytest.approx([0.0, 0.0])

    def test_reproducible_output(self, cli, runner):
        """Prueba que la misma semilla da la misma salida."""
        first, _ = invoke(runner, cli, 'su2', '--samples', '10')
        second, _ = invoke(runner, cli, 'su2', '--samples', '10')
        assert first.stdout == second.stdout

    def test_every_command_has_anchor(self):
        """Prueba que cada comando de la galería tiene su enunciado."""
        assert set(ANCHORS) == {
            'cyclic-maps', 'coxeter-maps', 'generator-only', 'torus-maps',
            'hermitian-hybrid', 'su2', 'infinite-dihedral', 'scaling',
        }
