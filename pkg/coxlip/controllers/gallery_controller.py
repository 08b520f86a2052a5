"""
Controladores para la galería de ejemplos.
Cada comando reproduce un resultado concreto y lo certifica; el JSON incluye
un ``anchor`` que describe el enunciado verificado.
"""
from typing import Dict
import logging

import click

from coxlip.controllers.base_controller import BaseController
from coxlip.models.permutation import Permutation
from coxlip.models.spectral import TorusMapKind, TorusMapSampleTable
from coxlip.schemas.coxeter_schema import coxeter_matrix_schema
from coxlip.utils.exceptions import WellDefinednessError
from coxlip.utils.map_oracles import (
    conjugation_map,
    coordinate_rotation_map,
    identity_map,
    permutation_conjugation_map,
)
from coxlip.utils.sampling import random_unitary

logger = logging.getLogger(__name__)

ANCHORS = {
    'cyclic-maps': "Las autoaplicaciones de S_n Lipschitz para las transposiciones cíclicas "
                   "son exactamente las constantes y las traslaciones por la derecha",
    'coxeter-maps': "Las autoaplicaciones Lipschitz de un grupo de Coxeter finito son proyecciones "
                    "sobre componentes seguidas de una traslación por la derecha",
    'generator-only': "La condición con transposiciones adyacentes admite una aplicación de S_3 "
                      "que no es constante ni traslación",
    'torus-maps': "Las aplicaciones del toro diagonal se clasifican en conjugaciones y reordenaciones",
    'hermitian-hybrid': "Aplicación continua sobre diagonales hermíticas 3×3 que preserva el espectro "
                        "sin ser conjugación ni reordenación",
    'su2': "Aplicación de SU(2) que reordena en cada toro maximal pero no globalmente",
    'infinite-dihedral': "Barrido truncado de una aplicación por casos en el grupo diédrico infinito",
    'scaling': "Extensión por escalares de una aplicación de SU(n) a U(n)",
}


def verdict_name(verdict) -> str:
    return 'pass' if verdict.passed else 'fail'


class GalleryController(BaseController):
    """Controlador para los comandos de la galería."""

    def __init__(self, group: click.Group):
        self.group = group
        self._register_commands()

    def _register_commands(self):
        """Registra el grupo ``gallery`` y sus comandos."""
        gallery = click.Group('gallery', help="Ejemplos certificados")

        gallery.command('cyclic-maps')(
            click.option('--n', 'n', type=int, default=3, show_default=True)(
                click.option('--strategy', type=click.Choice(['auto', 'exhaustive', 'tree']), default='auto',
                             show_default=True)(click.pass_context(self.cyclic_maps))
            )
        )
        gallery.command('coxeter-maps')(
            click.option('--matrix', 'matrix_path', required=True, type=click.Path(dir_okay=False))(
                click.option('--exhaustive', is_flag=True, help="Contrasta con el oráculo exhaustivo")(
                    click.pass_context(self.coxeter_maps)
                )
            )
        )
        gallery.command('generator-only')(click.pass_context(self.generator_only))
        gallery.command('torus-maps')(
            click.option('--n', 'n', type=int, default=3, show_default=True)(click.pass_context(self.torus_maps))
        )
        samples_option = click.option('--samples', type=int, default=None, help="Número de muestras")
        gallery.command('hermitian-hybrid')(samples_option(click.pass_context(self.hermitian_hybrid)))
        gallery.command('su2')(samples_option(click.pass_context(self.su2)))
        gallery.command('infinite-dihedral')(
            click.option('--radius', type=int, default=12, show_default=True)(
                click.pass_context(self.infinite_dihedral)
            )
        )
        gallery.command('scaling')(
            click.option('--n', 'n', type=int, default=3, show_default=True)(
                click.option('--map', 'map_name', type=click.Choice(['identity', 'conjugation', 'sorted']),
                             default='sorted', show_default=True)(
                    samples_option(click.pass_context(self.scaling))
                )
            )
        )
        self.group.add_command(gallery)

    def _payload(self, name: str, **values) -> Dict:
        return {'anchor': ANCHORS[name], **values}

    def cyclic_maps(self, ctx: click.Context, n: int, strategy: str):
        """
        Comando ``gallery cyclic-maps``
        Enumera las aplicaciones cíclicamente Lipschitz de S_n y las compara con
        las constantes y las traslaciones.
        """
        self._start(ctx, n=n, strategy=strategy)

        def action():
            symmetric = ctx.obj.symmetric
            exhaustive = strategy == 'exhaustive' or (strategy == 'auto' and n <= 3)
            if exhaustive:
                result = symmetric.exhaustive_cyclic_lipschitz(n)
            else:
                result = symmetric.enumerate_cyclic_lipschitz(n)

            matches = result.tables() == symmetric.constants_and_translations(n)
            dichotomy = True
            for tau in result.maps:
                counts = symmetric.classify_edges(tau, n)
                if counts['other'] or (tau.is_constant() and counts['grow']) or \
                        (tau.is_right_translation() and counts['linger']):
                    dichotomy = False
            payload = self._payload(
                'cyclic-maps',
                n=n,
                strategy=result.strategy,
                candidates=result.candidates,
                passing=len(result.maps),
                matches_theorem=matches,
                grow_or_linger=dichotomy,
            )
            self._emit(ctx, payload, matches)

        self._handle(ctx, action)

    def coxeter_maps(self, ctx: click.Context, matrix_path: str, exhaustive: bool):
        """
        Comando ``gallery coxeter-maps``
        Compara la enumeración con la familia canónica de tamaño 2^c·|W|.
        """
        self._start(ctx, matrix=matrix_path, exhaustive=exhaustive)

        def action():
            services = ctx.obj
            system = services.coxeter.build_system(self._load(ctx, matrix_path, coxeter_matrix_schema))
            condition = services.lipschitz.full_reflections(system)
            result = services.lipschitz.enumerate_lipschitz(system, condition)
            family = {tau.table for tau in services.lipschitz.canonical_family(system)}
            components = len(services.coxeter.components(system))

            matches = result.tables() == family
            payload = self._payload(
                'coxeter-maps',
                order=system.order,
                components=components,
                expected_size=2 ** components * system.order,
                count=len(result.maps),
                matches_theorem=matches,
            )
            if exhaustive:
                oracle = services.lipschitz.exhaustive_lipschitz(system, condition)
                payload['oracle_strategy'] = oracle.strategy
                payload['oracle_agrees'] = oracle.tables() == result.tables()
                matches = matches and payload['oracle_agrees']
            self._emit(ctx, payload, matches)

        self._handle(ctx, action)

    def generator_only(self, ctx: click.Context):
        """
        Comando ``gallery generator-only``
        Certifica el ejemplo que solo cumple la condición con generadores.
        """
        self._start(ctx)

        def action():
            symmetric = ctx.obj.symmetric
            report = symmetric.generator_only_example()
            codec = symmetric.codec(3)
            violations = [
                {'theta': str(codec.to_permutation(v.theta)), 'sigma': str(codec.to_permutation(v.sigma))}
                for v in report.full_cyclic.violations
            ]
            passed = (
                report.generator_only.passed
                and not report.full_cyclic.passed
                and not report.constant_or_translation
                and not report.in_enumerated_set
            )
            payload = self._payload(
                'generator-only',
                generator_only=verdict_name(report.generator_only),
                full_c_simple=verdict_name(report.full_cyclic),
                constant_or_translation=report.constant_or_translation,
                in_enumerated_set=report.in_enumerated_set,
                violations=violations,
                map={
                    str(codec.to_permutation(theta)): str(codec.to_permutation(value))
                    for theta, value in enumerate(report.tau.table)
                },
            )
            self._emit(ctx, payload, passed)

        self._handle(ctx, action)

    def torus_maps(self, ctx: click.Context, n: int):
        """
        Comando ``gallery torus-maps``
        Clasifica la identidad, las conjugaciones por permutaciones, la rotación de
        coordenadas y la reordenación por espectro; en n = 3 también la tabla del
        ejemplo con generadores.
        """
        self._start(ctx, n=n)

        def action():
            services = ctx.obj
            torus = services.torus

            def classify(oracle):
                return torus.classify_torus_map(torus.sample_torus_map(oracle, n))

            identity = classify(identity_map)
            rotation = classify(coordinate_rotation_map)
            reordering = classify(services.spectral.sorted_spectrum_map)
            conjugations = [classify(permutation_conjugation_map(rho)) for rho in Permutation.all(n)]

            verdicts = {
                'identity': identity.to_dict(),
                'coordinate_rotation': rotation.to_dict(),
                'sorted_spectrum': reordering.to_dict(),
                'permutation_conjugations': sum(v.kind is TorusMapKind.CONJUGATION for v in conjugations),
            }
            passed = (
                identity.kind is TorusMapKind.CONJUGATION
                and rotation.kind is TorusMapKind.CONJUGATION
                and reordering.kind is TorusMapKind.REORDERING
                and verdicts['permutation_conjugations'] == len(conjugations)
            )
            if n == 3:
                report = services.symmetric.generator_only_example()
                codec = services.symmetric.codec(3)
                table = TorusMapSampleTable(n=3, rows=tuple(
                    (codec.to_permutation(theta), codec.to_permutation(value))
                    for theta, value in enumerate(report.tau.table)
                ))
                generator_only = torus.classify_torus_map(table)
                verdicts['generator_only'] = generator_only.to_dict()
                passed = passed and generator_only.kind is TorusMapKind.NEITHER

            self._emit(ctx, self._payload('torus-maps', n=n, verdicts=verdicts), passed)

        self._handle(ctx, action)

    def hermitian_hybrid(self, ctx: click.Context, samples: int):
        """
        Comando ``gallery hermitian-hybrid``
        Barre los patrones de empate de la aplicación híbrida.
        """
        self._start(ctx, samples=samples)

        def action():
            services = ctx.obj
            count = services.cs_samples if samples is None else samples
            report = services.torus.hermitian_hybrid_sweep(count, services.rng)
            witnesses = report.witnesses
            passed = (
                report.inconsistencies == 0
                and report.continuity_error < 1e-6
                and report.spectrum_preserved
                and witnesses['not_conjugation'][1] != witnesses['not_conjugation'][0]
                and list(witnesses['not_sorted'][1]) != sorted(witnesses['not_sorted'][1])
            )
            self._emit(ctx, self._payload('hermitian-hybrid', **report.to_dict()), passed)

        self._handle(ctx, action)

    def su2(self, ctx: click.Context, samples: int):
        """
        Comando ``gallery su2``
        Comprueba la preservación de espectro y conmutatividad y produce el testigo de no globalidad.
        """
        self._start(ctx, samples=samples)

        def action():
            services = ctx.obj
            preserver = services.preserver
            count = services.cs_samples if samples is None else samples
            report = preserver.check_cs_preservation(preserver.su2_torus_reordering, 'su', 2, count, services.rng)
            witness = preserver.non_globality_witness()
            passed = report.passed and witness.difference > services.tolerances.spectral
            payload = self._payload('su2', cs_check=report.to_dict(), non_globality=witness.to_dict())
            self._emit(ctx, payload, passed)

        self._handle(ctx, action)

    def infinite_dihedral(self, ctx: click.Context, radius: int):
        """
        Comando ``gallery infinite-dihedral``
        Barre la bola de radio dado; la salida es 1 si hay violaciones con todas las reflexiones.
        """
        self._start(ctx, radius=radius)

        def action():
            report = ctx.obj.lipschitz.infinite_dihedral_example(radius)
            self._emit(ctx, self._payload('infinite-dihedral', **report.to_dict()), report.t_lipschitz)

        self._handle(ctx, action)

    def scaling(self, ctx: click.Context, n: int, map_name: str, samples: int):
        """
        Comando ``gallery scaling``
        Certifica la extensión por escalares o devuelve el testigo (ζ, X) que la impide.
        """
        self._start(ctx, n=n, map=map_name, samples=samples)

        def action():
            services = ctx.obj
            count = services.scaling_samples if samples is None else samples
            phi = {
                'identity': identity_map,
                'conjugation': conjugation_map(random_unitary(n, services.rng)),
                'sorted': services.spectral.sorted_spectrum_map,
            }[map_name]
            try:
                services.preserver.scaling_extension(phi, n, count, services.rng)
            except WellDefinednessError as e:
                payload = self._payload('scaling', n=n, map=map_name, well_defined=False, witness=e.details)
                self._emit(ctx, payload, False)
                return
            self._emit(ctx, self._payload('scaling', n=n, map=map_name, well_defined=True, samples=count))

        self._handle(ctx, action)
