"""
Controladores para las verificaciones de la línea de comandos.
Este módulo registra los comandos sobre sistemas de Coxeter, autoaplicaciones y espectros,
y coordina servicios, esquemas y respuestas.
"""
from typing import Dict
import logging

import click

from coxlip.controllers.base_controller import BaseController
from coxlip.models.coxeter import CoxeterSystem, word_from_text
from coxlip.models.self_map import ConditionVariant, SelfMap
from coxlip.schemas.coxeter_schema import coxeter_matrix_schema, element_schema, system_info_schema
from coxlip.schemas.map_schema import self_map_input_schema, self_map_output_schema
from coxlip.schemas.spectral_schema import (
    fundamental_output_schema,
    matrix_document_schema,
    sample_table_schema,
    spectrum_schema,
)
from coxlip.utils.exceptions import InvalidMapError

logger = logging.getLogger(__name__)

CONDITIONS = {
    'full': ConditionVariant.FULL_REFLECTION_SET,
    'simple': ConditionVariant.SIMPLE_GENERATORS,
}

matrix_option = click.option('--matrix', 'matrix_path', required=True, type=click.Path(dir_okay=False),
                             help="Documento JSON con la matriz de Coxeter")
condition_option = click.option('--condition', type=click.Choice(sorted(CONDITIONS)), default='full',
                                show_default=True, help="Reflexiones admitidas en la condición")


def self_map_payload(tau: SelfMap) -> Dict:
    return self_map_output_schema.dump({
        'matrix': tau.system.matrix.to_dict(),
        'table': list(tau.table),
        'map': tau.word_map(),
    })


class VerificationController(BaseController):
    """Controlador para los comandos de verificación."""

    def __init__(self, group: click.Group):
        """
        Inicializa el controlador.

        Args:
            group: Grupo raíz donde se registran los comandos
        """
        self.group = group
        self._register_commands()

    def _register_commands(self):
        """Registra los comandos del controlador."""
        system = click.Group('system', help="Información de sistemas de Coxeter")
        system.command('info')(matrix_option(click.pass_context(self.system_info)))
        system.command('element')(
            matrix_option(click.option('--input', 'input_path', required=True, type=click.Path(dir_okay=False),
                                       help="Documento JSON con la palabra")(
                click.pass_context(self.system_element)
            ))
        )
        self.group.add_command(system)

        self.group.command('enumerate')(
            matrix_option(condition_option(
                click.option('--exhaustive', is_flag=True, help="Usa el oráculo exhaustivo")(
                    click.pass_context(self.enumerate_maps)
                )
            ))
        )

        self.group.command('check-map')(
            click.option('--map', 'map_path', required=True, type=click.Path(dir_okay=False))(
                condition_option(click.pass_context(self.check_map))
            )
        )

        self.group.command('fold')(
            matrix_option(click.option('--generator', type=int, required=True, help="Generador (desde 1)")(
                click.pass_context(self.fold)
            ))
        )

        self.group.command('bruhat')(
            matrix_option(click.option('--u', 'u_text', required=True, help='Palabra, p. ej. "1 2"')(
                click.option('--w', 'w_text', required=True, help='Palabra, p. ej. "1 2 1"')(
                    click.pass_context(self.bruhat)
                )
            ))
        )

        spectral = click.Group('spectral', help="Selección y clasificación espectral")
        input_option = click.option('--input', 'input_path', required=True, type=click.Path(dir_okay=False))
        spectral.command('select')(input_option(click.pass_context(self.spectral_select)))
        spectral.command('classify')(input_option(click.pass_context(self.spectral_classify)))
        self.group.add_command(spectral)

    def _system(self, ctx: click.Context, matrix_path: str) -> CoxeterSystem:
        matrix = self._load(ctx, matrix_path, coxeter_matrix_schema)
        return ctx.obj.coxeter.build_system(matrix)

    def _self_map(self, system: CoxeterSystem, data: Dict) -> SelfMap:
        """Construye la aplicación desde la tabla o desde la forma por palabras."""
        if data['table'] is not None:
            return SelfMap(system, tuple(data['table']))
        table = [None] * system.order
        for source, target in data['map'].items():
            theta = system.evaluate_word(word_from_text(source)).id
            table[theta] = system.evaluate_word(word_from_text(target)).id
        missing = [system.elements[i].word_text() for i, value in enumerate(table) if value is None]
        if missing:
            raise InvalidMapError("La aplicación no está definida en todo el grupo", details={"missing": missing})
        return SelfMap(system, tuple(table))

    def system_info(self, ctx: click.Context, matrix_path: str):
        """
        Comando ``system info``
        Resume el grupo: orden, raíces, reflexiones, componentes y elemento más largo.
        """
        self._start(ctx, matrix=matrix_path)

        def action():
            services = ctx.obj
            system = self._system(ctx, matrix_path)
            payload = system_info_schema.dump({
                'matrix': system.matrix.to_dict(),
                'order': system.order,
                'root_count': system.root_count,
                'reflection_count': len(services.coxeter.reflections(system)),
                'components': [[g + 1 for g in block] for block in services.coxeter.components(system)],
                'longest_element': services.coxeter.longest_element(system).word_text(),
            })
            self._emit(ctx, payload)

        self._handle(ctx, action)

    def system_element(self, ctx: click.Context, matrix_path: str, input_path: str):
        """
        Comando ``system element``
        Canoniza una palabra: identificador, palabra ShortLex, longitud e inverso.
        """
        self._start(ctx, matrix=matrix_path, input=input_path)

        def action():
            system = self._system(ctx, matrix_path)
            element = system.evaluate_word(self._load(ctx, input_path, element_schema))
            payload = {
                'id': element.id,
                'word': [letter + 1 for letter in element.word],
                'text': element.word_text(),
                'length': element.length,
                'inverse': system.inverse(element).word_text(),
            }
            self._emit(ctx, payload)

        self._handle(ctx, action)

    def enumerate_maps(self, ctx: click.Context, matrix_path: str, condition: str, exhaustive: bool):
        """
        Comando ``enumerate``
        Enumera las autoaplicaciones Lipschitz y, con todas las reflexiones,
        compara el resultado con la familia canónica.
        """
        self._start(ctx, matrix=matrix_path, condition=condition, exhaustive=exhaustive)

        def action():
            lipschitz = ctx.obj.lipschitz
            system = self._system(ctx, matrix_path)
            lipschitz_condition = lipschitz.condition(system, CONDITIONS[condition])
            if exhaustive:
                result = lipschitz.exhaustive_lipschitz(system, lipschitz_condition)
            else:
                result = lipschitz.enumerate_lipschitz(system, lipschitz_condition)

            payload = {
                'condition': condition,
                'strategy': result.strategy,
                'candidates': result.candidates,
                'count': len(result.maps),
                'tables': [list(tau.table) for tau in result.maps],
            }
            passed = True
            if condition == 'full':
                family = {tau.table for tau in lipschitz.canonical_family(system)}
                passed = result.tables() == family
                payload['canonical_family_size'] = len(family)
                payload['matches_canonical_family'] = passed
            self._emit(ctx, payload, passed)

        self._handle(ctx, action)

    def check_map(self, ctx: click.Context, map_path: str, condition: str):
        """
        Comando ``check-map``
        Verifica una autoaplicación leída de un documento.
        """
        self._start(ctx, map=map_path, condition=condition)

        def action():
            services = ctx.obj
            data = self._load(ctx, map_path, self_map_input_schema)
            system = services.coxeter.build_system(data['matrix'])
            tau = self._self_map(system, data)
            report = services.lipschitz.is_phi_lipschitz(
                system, tau, services.lipschitz.condition(system, CONDITIONS[condition])
            )
            payload = {'condition': condition, **report.to_dict(system)}
            self._emit(ctx, payload, report.passed)

        self._handle(ctx, action)

    def fold(self, ctx: click.Context, matrix_path: str, generator: int):
        """
        Comando ``fold``
        Construye el plegado por un generador y comprueba que es S-Lipschitz e idempotente;
        también informa de la condición con todas las reflexiones.
        """
        self._start(ctx, matrix=matrix_path, generator=generator)

        def action():
            lipschitz = ctx.obj.lipschitz
            system = self._system(ctx, matrix_path)
            tau = lipschitz.folding_map(system, generator - 1)
            simple = lipschitz.is_phi_lipschitz(system, tau, lipschitz.simple_generators(system))
            full = lipschitz.is_phi_lipschitz(system, tau, lipschitz.full_reflections(system))
            idempotent = lipschitz.compose(tau, tau) == tau
            contraction = lipschitz.bruhat_contraction_check(system, tau)
            payload = {
                'generator': generator,
                'map': self_map_payload(tau),
                'simple_generators': simple.to_dict(system),
                'full_reflections': full.to_dict(system),
                'idempotent': idempotent,
                'pairwise_bruhat': contraction.pairwise_bruhat,
            }
            self._emit(ctx, payload, simple.passed and idempotent)

        self._handle(ctx, action)

    def bruhat(self, ctx: click.Context, matrix_path: str, u_text: str, w_text: str):
        """
        Comando ``bruhat``
        Compara dos elementos en el orden de Bruhat.
        """
        self._start(ctx, matrix=matrix_path, u=u_text, w=w_text)

        def action():
            coxeter = ctx.obj.coxeter
            system = self._system(ctx, matrix_path)
            u = system.evaluate_word(word_from_text(u_text))
            w = system.evaluate_word(word_from_text(w_text))
            payload = {
                'u': u.word_text(),
                'w': w.word_text(),
                'u_leq_w': coxeter.bruhat_leq(system, u, w),
                'w_leq_u': coxeter.bruhat_leq(system, w, u),
            }
            self._emit(ctx, payload)

        self._handle(ctx, action)

    def spectral_select(self, ctx: click.Context, input_path: str):
        """
        Comando ``spectral select``
        Representante fundamental de un espectro de SU(n). La entrada puede ser un
        espectro o una matriz de SU(n) (documento con clave ``matrix``).
        """
        self._start(ctx, input=input_path)

        def action():
            spectral = ctx.obj.spectral
            document = ctx.obj.repository.load(input_path)
            if isinstance(document, dict) and 'matrix' in document:
                rows = matrix_document_schema.load(document)
                coordinates = spectral.matrix_spectrum_ordered(rows).coordinates
            else:
                coordinates = spectral.fundamental_select(spectrum_schema.load(document))
            self._emit(ctx, fundamental_output_schema.dump(coordinates.to_dict()))

        self._handle(ctx, action)

    def spectral_classify(self, ctx: click.Context, input_path: str):
        """
        Comando ``spectral classify``
        Clasifica una tabla de muestras de una aplicación del toro.
        """
        self._start(ctx, input=input_path)

        def action():
            table = self._load(ctx, input_path, sample_table_schema)
            verdict = ctx.obj.torus.classify_torus_map(table)
            self._emit(ctx, verdict.to_dict())

        self._handle(ctx, action)
