#!/usr/bin/env python
"""
qweyl - Quantized Weyl algebras and their weight modules
Normal forms, relation checks, module graphs and classification from the command line

Usage:
    python qweyl.py COMMAND [OPTIONS]

Commands:
    normalize       Parse an expression and print its normal form
    relcheck        Verify the defining relations of a presentation
    theta-check     Verify the isomorphism from AJ-B onto Malt-B
    algebra-check   Relations, associativity, theta and basis action for one rank
    twist-check     Verify that twisting the trivial-matrix algebra gives the full one
    module-graph    Emit the action graph of P_phi or S_phi as DOT
    classify        Support descriptor and simplicity of a character's modules
    iso             Decide isomorphism of two simple (or rank-one induced) modules
    tensor-check    Compare P_phi with the tensor product of rank-one modules
    qdiff-check     Verify the q-difference representation
    shift-iso       Solve for the shift isomorphism along one axis
    module-check    Run the module suites for one character

Examples:
    python qweyl.py normalize --family aj --no-localized --expr "x1*y1 - q1*y1*x1 - 1"
    python qweyl.py relcheck --family aj --localized --n 3
    python qweyl.py relcheck --all-presentations --n 2
    python qweyl.py algebra-check --n 2 --samples 50 --seed 7
    python qweyl.py classify --n 1 --phi "[q^2]"
    python qweyl.py module-graph --n 1 --phi "[q^2]" --radius 4 --kind P
    python qweyl.py iso --n 1 --phi "[q^2]" --psi "[q^5]"

Exit codes: 0 success, 1 failed check, 2 usage or input error.
"""

import argparse
import json
import logging
import os
import sys
import time
from fractions import Fraction

# Add src directory to path for imports
sys.path.insert(0, os.path.join(os.path.dirname(__file__), 'src'))

from algebras.presentations import Family, PresentationId, check_relations
from core.characters import format_character, parse_character
from core.config import load_config
from core.errors import QweylError
from core.report import CheckReport
from core.scalars import LambdaMode, ParamContext, format_scalar
from modules.classification import descriptor_of, isomorphic_P_rank1, isomorphic_S, is_simple_P, kappa_class
from modules.comparisons import tensor_compare, twist_module_compare
from modules.isomorphisms import shift_iso_scalars
from modules.qdiff import check_E_is_S1, check_qdiff_morphism, simplicity_evidence
from modules.weight_module import ModuleKind, ModuleSpec, Realization, action_graph
from utils.graph_export import to_dot, to_json_lines
from utils.parser import parse_element
from utils.utils import format_duration, print_banner, print_entries, print_summary, save_report, setup_logging
from validators.algebra_checks import relations_suite, run_algebra_suites, theta_check, twist_check
from validators.module_checks import acceptance_family, kappa_table, module_suites
from validators.sampling import get_rng

COMMANDS = ['normalize', 'relcheck', 'theta-check', 'algebra-check', 'twist-check', 'module-graph', 'classify',
            'iso', 'tensor-check', 'qdiff-check', 'shift-iso', 'module-check']


class UsageError(Exception):
    """Option combination rejected before execution"""


def parse_arguments(argv=None):
    """Parse command line arguments"""
    parser = argparse.ArgumentParser(
        description='qweyl - quantized Weyl algebras and their weight modules',
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog=__doc__
    )

    parser.add_argument('command', choices=COMMANDS,
                        help='Operation to run')
    parser.add_argument('--config', type=str,
                        help='Path to configuration file (default: config/qweyl.ini)')
    parser.add_argument('--verbose', '-v', action='store_true',
                        help='Enable verbose logging')
    parser.add_argument('--format', choices=['text', 'json'],
                        help='Output format (json prints one object per line)')
    parser.add_argument('--output', '-o', type=str,
                        help='Write the main output to this file instead of stdout')
    parser.add_argument('--save-report', action='store_true',
                        help='Save check reports as JSON under the reports directory')

    # Algebra
    parser.add_argument('--n', type=int, default=1,
                        help='Rank (number of generator triples)')
    parser.add_argument('--family', choices=['aj', 'maltsiniotis'],
                        help='Presentation family (default from config)')
    parser.add_argument('--localized', action=argparse.BooleanOptionalAction, default=None,
                        help='Use the localized presentation (z_i inverted)')
    parser.add_argument('--lambda', dest='lambda_mode', choices=[mode.value for mode in LambdaMode],
                        help='Skew matrix mode (default from config)')
    parser.add_argument('--lambdas', type=str,
                        help='Numeric skew entries, e.g. "12=2,13=-1/3" (implies --lambda numeric)')
    parser.add_argument('--generic-symbols', type=int,
                        help='Number of generic symbols c1..cT')
    parser.add_argument('--expr', type=str,
                        help='Expression for normalize')
    parser.add_argument('--perturb', action='store_true',
                        help='relcheck: replace q1 by q1^2 in the x1*y1 relation')
    parser.add_argument('--all-presentations', action='store_true',
                        help='relcheck: check all four presentations of the rank')

    # Modules
    parser.add_argument('--phi', type=str,
                        help='Character literal, e.g. "[q^2, c1*q^-1]"')
    parser.add_argument('--psi', type=str,
                        help='Second character literal (iso)')
    parser.add_argument('--kind', choices=['P', 'S'], default='P',
                        help='Induced module P_phi or simple quotient S_phi')
    parser.add_argument('--realization', choices=[r.value for r in Realization], default='direct',
                        help='Module action: direct, or twist of the trivial-matrix module')
    parser.add_argument('--radius', type=int,
                        help='Window radius (default from config)')
    parser.add_argument('--axis', type=int, default=1,
                        help='shift-iso: axis of the shift')
    parser.add_argument('--degree', type=int, default=5,
                        help='qdiff-check: bound on total degree of test monomials')
    parser.add_argument('--samples', type=int, default=20,
                        help='Random samples for the sampled suites')
    parser.add_argument('--seed', type=int,
                        help='Random seed (overrides QWEYL_SEED)')
    parser.add_argument('--enumerate', action='store_true',
                        help='classify: print the isomorphism classes of the standard character family')

    return parser.parse_args(argv)


def setup_environment(config, args):
    """Setup logging and create necessary directories"""
    log_config = config.get_logging_config()
    log_level = 'DEBUG' if args.verbose else log_config['log_level']
    setup_logging(
        level=log_level,
        log_to_file=log_config['log_to_file'],
        log_directory=log_config['log_directory']
    )

    config.ensure_directories()

    logger = logging.getLogger('qweyl')
    logger.debug(f"Configuration file: {config.config_file}")
    logger.debug(f"Log level: {log_level}")
    return logger


def parse_lambdas(text: str, n: int):
    """'12=2,13=-1/3' (or '1_2=2' from rank 10 on) -> ((i, j), Fraction) pairs"""
    entries = []
    for item in filter(None, (part.strip() for part in text.split(','))):
        key, sep, value = item.partition('=')
        if not sep:
            raise UsageError(f"Bad --lambdas entry {item!r}; expected ij=value")
        key = key.strip().lstrip('l')
        if '_' in key:
            i, j = (int(x) for x in key.split('_'))
        elif len(key) == 2 and n < 10:
            i, j = int(key[0]), int(key[1])
        else:
            raise UsageError(f"Bad --lambdas index {key!r}")
        if not 1 <= i < j <= n:
            raise UsageError(f"--lambdas entry l{i}{j} needs 1 <= i < j <= {n}")
        try:
            entries.append(((i, j), Fraction(value.strip())))
        except (ValueError, ZeroDivisionError):
            raise UsageError(f"Bad --lambdas value {value!r}")
    return tuple(entries)


def build_context(config, args) -> ParamContext:
    engine = config.get_engine_config()
    if args.n < 1:
        raise UsageError("--n must be at least 1")
    mode_name = args.lambda_mode or ('numeric' if args.lambdas else engine['lambda_mode'])
    mode = LambdaMode(mode_name)
    numeric = ()
    if args.lambdas:
        if mode is not LambdaMode.NUMERIC:
            raise UsageError("--lambdas requires --lambda numeric")
        numeric = parse_lambdas(args.lambdas, args.n)
    symbols = args.generic_symbols if args.generic_symbols is not None else engine['generic_symbols']
    return ParamContext(args.n, mode, numeric, symbols)


def build_presentation(config, args, ctx: ParamContext) -> PresentationId:
    engine = config.get_engine_config()
    family = Family(args.family or engine['family'])
    localized = engine['localized'] if args.localized is None else args.localized
    return PresentationId(family, localized, ctx)


def require_phi(args, ctx: ParamContext, option: str = 'phi'):
    text = getattr(args, option)
    if not text:
        raise UsageError(f"{args.command} needs --{option}")
    phi = parse_character(text)
    if phi.n != ctx.n:
        raise UsageError(f"--{option} has rank {phi.n} but --n is {ctx.n}")
    return phi


def emit(text: str, args):
    """Main output: to --output when given, else stdout"""
    if args.output:
        with open(args.output, 'w') as f:
            f.write(text + '\n')
        if args.output_format == 'text':
            print(f"📄 Output written to {args.output}")
    else:
        print(text)


def finish_report(report: CheckReport, config, args) -> bool:
    """Print a check report in the chosen format; True when every identity passed"""
    if args.output_format == 'json':
        emit(report.to_json_lines(), args)
    else:
        print_banner(args.command, report.parameters)
        print_entries(report)
        print_summary(report)
        if args.output:
            emit(json.dumps(report.to_dict(), indent=2, default=str), args)
    if args.save_report or config.get_output_config()['save_reports']:
        path = save_report(report, config.get_output_config()['reports_directory'])
        if args.output_format == 'text':
            print(f"📄 Report saved: {path}")
    return report.passed


def run_normalize(config, args, ctx, logger) -> bool:
    if not args.expr:
        raise UsageError("normalize needs --expr")
    p = build_presentation(config, args, ctx)
    element = parse_element(args.expr, p)
    if args.output_format == 'json':
        emit(json.dumps({'presentation': p.label, 'input': args.expr, 'normal_form': str(element)}), args)
    else:
        emit(str(element), args)
    return True


def run_relcheck(config, args, ctx, logger) -> bool:
    if args.all_presentations:
        if args.perturb:
            raise UsageError("--perturb applies to a single presentation")
        return finish_report(relations_suite(ctx), config, args)
    p = build_presentation(config, args, ctx)
    return finish_report(check_relations(p, perturb=args.perturb), config, args)


def run_theta_check(config, args, ctx, logger) -> bool:
    return finish_report(theta_check(ctx), config, args)


def run_algebra_check(config, args, ctx, logger) -> bool:
    report = run_algebra_suites(ctx, args.samples, rng=get_rng(args.seed))
    return finish_report(report, config, args)


def run_twist_check(config, args, ctx, logger) -> bool:
    rng = get_rng(args.seed)
    report = twist_check(ctx, args.samples, rng)
    if args.phi:
        phi = require_phi(args, ctx)
        report.extend(twist_module_compare(ctx, phi, args.radius, ModuleKind(args.kind)), prefix='module: ')
    return finish_report(report, config, args)


def run_module_graph(config, args, ctx, logger) -> bool:
    phi = require_phi(args, ctx)
    spec = ModuleSpec(ctx, phi, ModuleKind(args.kind), Realization(args.realization))
    graph = action_graph(spec, args.radius)
    logger.info(f"Window radius {args.radius}: {len(graph.vertices)} vertices, "
                f"{len(graph.edges)} edges, {len(graph.missing)} missing")
    emit(to_json_lines(graph) if args.output_format == 'json' else to_dot(graph), args)
    return True


def run_classify(config, args, ctx, logger) -> bool:
    if args.enumerate:
        family = acceptance_family(ctx.n, symbols=min(ctx.generic_symbols, 2))
        table = kappa_table(family)
        if args.output_format == 'json':
            emit('\n'.join(json.dumps({'class': key, 'characters': members})
                           for key, members in table.items()), args)
        else:
            print(f"📋 {len(table)} isomorphism classes among {len(family)} characters")
            emit('\n'.join(f"{key}: {', '.join(members)}" for key, members in table.items()), args)
        return True

    phi = require_phi(args, ctx)
    descriptor = descriptor_of(phi)
    simple = is_simple_P(phi)
    if args.output_format == 'json':
        emit(json.dumps({'phi': format_character(phi), **descriptor.to_dict(),
                         'class': str(kappa_class(phi)), 'p_simple': simple}), args)
    else:
        emit(f"Descriptor: {descriptor}\n"
             f"Weights: {descriptor.weights_text()}\n"
             f"S-support: {descriptor.support_text()}; P simple: {str(simple).lower()}", args)
    return True


def run_iso(config, args, ctx, logger) -> bool:
    phi = require_phi(args, ctx)
    psi = require_phi(args, ctx, 'psi')
    if args.kind == 'S':
        result = isomorphic_S(phi, psi)
    else:
        result = isomorphic_P_rank1(phi, psi)
    payload = {
        'kind': args.kind, 'isomorphic': result,
        'phi': format_character(phi), 'psi': format_character(psi),
        'phi_descriptor': str(descriptor_of(phi)), 'psi_descriptor': str(descriptor_of(psi)),
    }
    if args.output_format == 'json':
        emit(json.dumps(payload), args)
    else:
        emit(f"{str(result).lower()}\n"
             f"  {payload['phi']}: {payload['phi_descriptor']}\n"
             f"  {payload['psi']}: {payload['psi_descriptor']}", args)
    return True


def run_tensor_check(config, args, ctx, logger) -> bool:
    phi = require_phi(args, ctx)
    return finish_report(tensor_compare(ctx, phi, args.radius, ModuleKind(args.kind)), config, args)


def run_qdiff_check(config, args, ctx, logger) -> bool:
    report = CheckReport('qdiff-check', {**ctx.describe(), 'degree': args.degree, 'radius': args.radius})
    report.extend(check_qdiff_morphism(ctx, args.degree))
    report.extend(check_E_is_S1(ctx, args.radius), prefix='S(1): ')
    report.extend(simplicity_evidence(ctx, args.degree), prefix='simplicity: ')
    return finish_report(report.finish(), config, args)


def run_shift_iso(config, args, ctx, logger) -> bool:
    phi = require_phi(args, ctx)
    if not 1 <= args.axis <= ctx.n:
        raise UsageError(f"--axis must lie in 1..{ctx.n}")
    result = shift_iso_scalars(ctx, args.axis, phi, args.radius)
    passed = finish_report(result.report, config, args)
    if args.output_format == 'text' and result.scalars:
        print("🔢 mu on the axis:")
        for t in range(-min(args.radius, 3), min(args.radius, 3) + 1):
            k = tuple(t if i == args.axis else 0 for i in range(1, ctx.n + 1))
            print(f"   mu{k} = {format_scalar(result.scalars[k])}")
    return passed


def run_module_check(config, args, ctx, logger) -> bool:
    phi = require_phi(args, ctx)
    spec = ModuleSpec(ctx, phi, ModuleKind(args.kind), Realization(args.realization))
    return finish_report(module_suites(spec, args.radius, args.samples, get_rng(args.seed)), config, args)


HANDLERS = {
    'normalize': run_normalize,
    'relcheck': run_relcheck,
    'theta-check': run_theta_check,
    'algebra-check': run_algebra_check,
    'twist-check': run_twist_check,
    'module-graph': run_module_graph,
    'classify': run_classify,
    'iso': run_iso,
    'tensor-check': run_tensor_check,
    'qdiff-check': run_qdiff_check,
    'shift-iso': run_shift_iso,
    'module-check': run_module_check,
}


def main(argv=None):
    """Main execution function"""
    args = parse_arguments(argv)
    try:
        config = load_config(args.config)
        env_seed = config.get_seed()
    except (FileNotFoundError, ValueError) as e:
        print(f"❌ Configuration error: {e}", file=sys.stderr)
        sys.exit(2)

    logger = setup_environment(config, args)
    args.output_format = args.format or config.get_output_config()['format']
    if args.radius is None:
        args.radius = config.get_engine_config()['default_radius']
    if args.seed is None:
        args.seed = env_seed

    try:
        if args.radius < 1:
            raise UsageError("--radius must be at least 1")
        ctx = build_context(config, args)
        start_time = time.time()
        success = HANDLERS[args.command](config, args, ctx, logger)
        logger.info(f"{args.command} finished in {format_duration(time.time() - start_time)}")
    except (UsageError, QweylError) as e:
        print(f"❌ {e}", file=sys.stderr)
        sys.exit(2)
    except Exception as e:
        logger.exception(f"Unexpected failure in {args.command}")
        print(f"❌ Critical error: {str(e)}", file=sys.stderr)
        sys.exit(1)

    sys.exit(0 if success else 1)


if __name__ == "__main__":
    main()
