#!/usr/bin/env python3
# cli.py - Interfaz de línea de comandos del toolkit de factorizaciones

"""
Subcomandos: count, enumerate, verify, trace, algebra, table, experiment.

La salida de resultados va a stdout y es determinista; los mensajes de
estado van a stderr. Códigos de salida: 0 éxito, 1 fallo de verificación,
2 error de uso o de cotas.
"""

import argparse
import csv
import io
import json
import re
import sys
from dataclasses import asdict, dataclass

from bijections import (
    HurwitzMoveTrace,
    centrality_witness,
    conjugate_monotone,
    conjugate_monotone_double,
    from_natural_order,
    monotone_double_to_star,
    reorder_adjacent,
    reorder_adjacent_inverse,
    reroot,
    star_to_monotone_double,
    to_natural_order,
)
from config import get_logger, get_setting, validate_environment_variables
from errors import BoundsError, ConditionViolation, FactorisationError, InexactDivisionError, NotCentralError, exact_div
from factorisations import (
    MonotoneDoubleFactorisation,
    MonotoneFactorisation,
    StarFactorisation,
    count_monotone,
    count_monotone_double,
    count_star,
    double_hurwitz_b,
    enumerate_monotone,
    enumerate_monotone_double,
    enumerate_star,
    iter_double_hurwitz,
    monotone_length,
    validate_monotone,
    validate_monotone_double,
    validate_star,
)
from formulas import formula_table, sinh_formula_count
from group_algebra import (
    basis_agreement,
    coefficient_of,
    decompose,
    evaluate,
    evaluate_expression,
    h,
    transitive_span_dimension,
)
from perm_core import Partition, Permutation, TotalOrder, Transposition, product
from suites import SUITES, SuiteBounds, available_suites, resolve_suite, run_suite

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

FAMILIES = ('star', 'monotone', 'md', 'b')
METHODS = ('auto', 'listing', 'dp', 'formula')
MAPS = (
    'gamma', 'gamma-inverse', 'lambda', 'lambda-inverse', 'natural',
    'delta', 'theta', 'reroot', 'centrality',
)
EXPERIMENTS = ('basis-agreement', 'span-dimension')

_TRANSPOSITION_RE = re.compile(r"\(([^()]*)\)")


@dataclass
class RunConfig:
    """Parámetros de una ejecución, ya combinados con los valores por defecto del entorno"""
    command: str
    family: str | None = None
    target: str | None = None
    partition: str | None = None
    genus: int = 0
    root: int | None = None
    order: str | None = None
    n: int | None = None
    gmax: int = 1
    kmax: int = 2
    fmt: str = 'text'
    workers: int = 1
    method: str = 'auto'
    unsafe: bool = False
    suite: str | None = None
    bijection: str | None = None
    legs: str | None = None
    sigma: str | None = None
    factors: str | None = None
    index: int | None = None
    conjugator: str | None = None
    new_target: str | None = None
    new_root: int | None = None
    expr: str | None = None
    experiment: str | None = None
    max_degree: int = 4

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "RunConfig":
        values = {k: v for k, v in vars(args).items() if k in cls.__dataclass_fields__ and v is not None}
        if values.get('workers') is None:
            values['workers'] = get_setting('FACTOR_THREADS')
        return cls(**values)

    def to_dict(self) -> dict:
        # la salida es idéntica con cualquier número de workers
        return {k: v for k, v in asdict(self).items() if v is not None and k != 'workers'}


@dataclass
class CommandOutput:
    text: str
    results: list
    passed: bool = True


# --- Lectura de entradas ---

def parse_factors(text: str) -> tuple[Transposition, ...]:
    """'(1 2),(1 3)' -> transposiciones"""
    bodies = _TRANSPOSITION_RE.findall(text)
    if not bodies:
        raise FactorisationError(f"no transpositions found in '{text}'")
    return tuple(Transposition.parse(f"({body})") for body in bodies)


def parse_legs(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(tok) for tok in re.split(r"[\s,()]+", text) if tok)
    except ValueError as exc:
        raise FactorisationError(f"cannot parse legs '{text}'") from exc


def resolve_target(config: RunConfig) -> Permutation:
    if config.target:
        return Permutation.parse(config.target, config.n)
    if config.partition is not None:
        shape = Partition.parse(config.partition)
        return shape.representative()
    raise FactorisationError("either --target or --partition is required")


def _degree(config: RunConfig) -> int | None:
    if config.n is not None:
        return config.n
    if config.target or config.partition is not None:
        return resolve_target(config).n
    return None


def validate_bounds(config: RunConfig):
    """Comprueba las cotas antes de despachar; BoundsError nombra la cota violada"""
    if config.unsafe:
        return
    checks = []
    command = config.command
    if command == 'enumerate' or (command == 'count' and config.method == 'listing'):
        checks.append(("listing n", get_setting('LIST_N_MAX'), _degree(config)))
        checks.append(("listing g", get_setting('LIST_G_MAX'), config.genus))
    if command == 'count':
        checks.append(("dp n", get_setting('DP_N_MAX'), _degree(config)))
    if command in ('verify', 'algebra', 'experiment'):
        checks.append(("dp n", get_setting('DP_N_MAX'), config.n))
    if command == 'verify' and config.suite not in (None, 'all'):
        if 'double-hurwitz-relation' in resolve_suite(config.suite):
            checks.append(("relation n", get_setting('RELATION_N_MAX'), config.n))
    if command == 'table':
        checks.append(("dp n", get_setting('DP_N_MAX'), config.n))
        checks.append(("listing g", get_setting('LIST_G_MAX'), config.gmax))
    for bound, limit, value in checks:
        if value is not None and value > limit:
            raise BoundsError(bound, limit, value)


def _reject(errors):
    """Lanza ConditionViolation con la primera condición y el resto de violaciones en el detalle"""
    first = errors[0]
    condition = first.split()[1]
    detail = "; ".join([first.split(": ", 1)[-1]] + list(errors[1:]))
    raise ConditionViolation(condition, detail)


# --- count ---

def _count_methods(config: RunConfig):
    if config.method != 'auto':
        return [config.method]
    if config.family == 'b':
        return ['dp']
    return ['dp', 'formula']


def _count_one(family, method, target, config):
    genus = config.genus
    n = target.n
    if family == 'star':
        root = config.root or n
        if method == 'listing':
            return len(enumerate_star(target, genus, root))
        if method == 'formula':
            return sinh_formula_count(target.cycle_type(), genus)
        return count_star(target, genus, root)
    if family == 'monotone':
        order = TotalOrder.parse(config.order) if config.order else None
        if method == 'listing':
            return len(enumerate_monotone(target, genus, order))
        if method == 'formula':
            m = monotone_length(target, genus)
            return coefficient_of(target, evaluate(h(m) if m else h(), n))
        return count_monotone(target, genus, order)
    if family == 'md':
        if method == 'listing':
            return len(enumerate_monotone_double(target, genus))
        if method == 'formula':
            return sinh_formula_count(target.cycle_type(), genus)
        return count_monotone_double(target, genus)
    # b_g(β): H^g_{(n),β} / |C_β|
    beta = target.cycle_type()
    if method == 'listing':
        total = sum(1 for _ in iter_double_hurwitz(n, Partition((n,)), beta, genus))
        return exact_div(total, beta.class_size())
    if method == 'formula':
        raise FactorisationError("family b has no formula method; use dp or listing")
    return double_hurwitz_b(beta, genus)


def cmd_count(config: RunConfig) -> CommandOutput:
    """Cuenta la familia pedida con uno o varios métodos y comprueba que coinciden"""
    if config.family not in FAMILIES:
        raise FactorisationError(f"unknown family '{config.family}'")
    target = resolve_target(config)
    results = []
    for method in _count_methods(config):
        value = _count_one(config.family, method, target, config)
        row = {
            'family': config.family,
            'target': str(target),
            'genus': config.genus,
            'method': method,
            'count': value,
        }
        if config.family == 'star':
            row['root'] = config.root or target.n
        if config.family == 'monotone':
            row['order'] = config.order or str(TotalOrder.natural(target.n))
        results.append(row)
    passed = len({row['count'] for row in results}) == 1
    lines = []
    for row in results:
        extra = ""
        if 'root' in row:
            extra = f" root={row['root']}"
        elif 'order' in row:
            extra = f" order={row['order']}"
        lines.append(
            f"family={row['family']} target={row['target']} genus={row['genus']}{extra} "
            f"count={row['count']} method={row['method']}"
        )
    if not passed:
        logger.error("methods disagree for %s", target)
    return CommandOutput("\n".join(lines), results, passed)


# --- enumerate ---

def cmd_enumerate(config: RunConfig) -> CommandOutput:
    target = resolve_target(config)
    if config.family == 'star':
        found = enumerate_star(target, config.genus, config.root or target.n)
    elif config.family == 'monotone':
        order = TotalOrder.parse(config.order) if config.order else None
        found = enumerate_monotone(target, config.genus, order)
    elif config.family == 'md':
        found = enumerate_monotone_double(target, config.genus)
    else:
        raise FactorisationError(f"family '{config.family}' cannot be listed; use star, monotone or md")
    logger.info("%d factorisations of %s", len(found), target)
    return CommandOutput("\n".join(f.render() for f in found), [f.to_dict() for f in found])


# --- verify ---

def _suite_bounds(config: RunConfig) -> SuiteBounds:
    return SuiteBounds(
        n=config.n if config.n is not None else 4,
        gmax=config.gmax,
        kmax=config.kmax,
        unsafe=config.unsafe,
        workers=config.workers,
    )


def cmd_verify(config: RunConfig) -> CommandOutput:
    """Ejecuta una suite (o todas con 'all'); pasa si todas las identidades se cumplen"""
    names = sorted(SUITES) if config.suite == 'all' else [config.suite]
    bounds = _suite_bounds(config)
    reports = [run_suite(name, bounds) for name in names]
    text = "\n".join(report.render() for report in reports)
    return CommandOutput(text, [r.to_dict() for r in reports], all(r.passed for r in reports))


# --- trace ---

def _degree_of(config, *symbol_sets):
    if config.n is not None:
        return config.n
    largest = max((s for symbols in symbol_sets for s in symbols), default=1)
    if config.target:
        largest = max(largest, Permutation.parse(config.target).n)
    return largest


def _read_star(config: RunConfig) -> StarFactorisation:
    if not config.legs:
        raise FactorisationError("--legs is required for this map")
    legs = parse_legs(config.legs)
    root = config.root
    n = _degree_of(config, legs, [root or 0])
    root = root or n
    if config.target:
        target = Permutation.parse(config.target, n)
    else:
        target = product((Transposition(a, root) for a in legs if a != root), n)
    ok, data, errors = validate_star(legs, target, root)
    if not ok:
        _reject(errors)
    return StarFactorisation(n, root, legs, target, data['genus'])


def _read_monotone(config: RunConfig, default_order=None) -> MonotoneFactorisation:
    if not config.factors:
        raise FactorisationError("--factors is required for this map")
    factors = parse_factors(config.factors)
    n = _degree_of(config, [s for t in factors for s in t.symbols()])
    order = TotalOrder.parse(config.order) if config.order else (default_order or TotalOrder.natural(n))
    target = Permutation.parse(config.target, n) if config.target else product(factors, n)
    ok, data, errors = validate_monotone(factors, target, order)
    if not ok:
        _reject(errors)
    return MonotoneFactorisation(n, order, factors, target, data['genus'])


def _read_monotone_double(config: RunConfig) -> MonotoneDoubleFactorisation:
    if not config.sigma:
        raise FactorisationError("--sigma is required for this map")
    factors = parse_factors(config.factors) if config.factors else ()
    sigma_symbols = Permutation.parse(config.sigma).n
    n = _degree_of(config, [s for t in factors for s in t.symbols()], [sigma_symbols])
    sigma = Permutation.parse(config.sigma, n)
    target = Permutation.parse(config.target, n) if config.target else product([sigma, *factors], n)
    ok, data, errors = validate_monotone_double(sigma, factors, target)
    if not ok:
        _reject(errors)
    return MonotoneDoubleFactorisation(n, sigma, factors, target, data['genus'])


def _conjugator(config: RunConfig, n: int) -> Permutation:
    if not config.conjugator:
        raise FactorisationError("--conjugator is required for this map")
    return Permutation.parse(config.conjugator, n)


def run_map(config: RunConfig, trace: HurwitzMoveTrace):
    """Aplica la biyección pedida registrando los movimientos en trace"""
    kind = config.bijection
    if kind == 'gamma':
        return star_to_monotone_double(_read_star(config), trace)
    if kind == 'gamma-inverse':
        return monotone_double_to_star(_read_monotone_double(config), trace)
    if kind == 'reroot':
        if config.new_root is None:
            raise FactorisationError("--to-root is required for reroot")
        return reroot(_read_star(config), config.new_root, trace)
    if kind == 'centrality':
        f = _read_star(config)
        if not config.new_target:
            raise FactorisationError("--to-target is required for centrality")
        return centrality_witness(f, Permutation.parse(config.new_target, f.n), trace)
    if kind in ('lambda', 'lambda-inverse'):
        if config.index is None:
            raise FactorisationError("--index is required for lambda maps")
        f = _read_monotone(config)
        if kind == 'lambda':
            return reorder_adjacent(f, config.index, trace)
        return reorder_adjacent_inverse(f, config.index, trace)
    if kind == 'natural':
        f = _read_monotone(config)
        if config.new_target:
            # --to-target con un orden: vuelta desde el orden natural
            return from_natural_order(f, TotalOrder.parse(config.new_target), trace)
        return to_natural_order(f, trace)
    if kind == 'delta':
        f = _read_monotone(config)
        return conjugate_monotone(f, _conjugator(config, f.n), trace)
    if kind == 'theta':
        md = _read_monotone_double(config)
        return conjugate_monotone_double(md, _conjugator(config, md.n), trace)
    raise FactorisationError(f"unknown map '{kind}'; available maps: {', '.join(MAPS)}")


def cmd_trace(config: RunConfig) -> CommandOutput:
    trace = HurwitzMoveTrace()
    result = run_map(config, trace)
    lines = [step.render() for step in trace.steps]
    lines.append(f"result={result.render()}")
    payload = {
        'steps': [step.render() for step in trace.steps],
        'result': result.to_dict(),
    }
    return CommandOutput("\n".join(lines), [payload])


# --- algebra ---

def cmd_algebra(config: RunConfig) -> CommandOutput:
    """Evalúa la expresión en S_n e imprime su descomposición en sumas de clase"""
    if not config.expr:
        raise FactorisationError("--expr is required")
    n = config.n if config.n is not None else 4
    value = evaluate_expression(config.expr, n)
    try:
        decomposition = decompose(value)
    except NotCentralError as exc:
        first, second = exc.witness
        text = (
            f"NotCentral witness={first} vs {second} "
            f"coefficients={coefficient_of(first, value)} vs {coefficient_of(second, value)}"
        )
        result = {
            'expr': config.expr,
            'n': n,
            'central': False,
            'witness': [str(first), str(second)],
        }
        return CommandOutput(text, [result])
    result = {
        'expr': config.expr,
        'n': n,
        'central': True,
        'decomposition': decomposition.to_dict(),
        'rendered': decomposition.render(),
    }
    return CommandOutput(decomposition.render(), [result])


# --- table ---

TABLE_COLUMNS = ('partition', 'genus', 'count_star', 'md_count', 'sinh_formula', 'closed_form', 'all_agree')


def _render_table(rows, fmt):
    if fmt == 'csv':
        buffer = io.StringIO()
        writer = csv.DictWriter(buffer, fieldnames=TABLE_COLUMNS, lineterminator="\n")
        writer.writeheader()
        for row in rows:
            writer.writerow({k: ('' if row[k] is None else row[k]) for k in TABLE_COLUMNS})
        return buffer.getvalue().rstrip("\n")
    cells = [[('-' if row[k] is None else str(row[k])) for k in TABLE_COLUMNS] for row in rows]
    if fmt == 'markdown':
        lines = ["| " + " | ".join(TABLE_COLUMNS) + " |", "|" + "---|" * len(TABLE_COLUMNS)]
        lines += ["| " + " | ".join(c) + " |" for c in cells]
        return "\n".join(lines)
    widths = [max(len(col), *(len(c[i]) for c in cells)) for i, col in enumerate(TABLE_COLUMNS)]
    lines = ["  ".join(col.ljust(w) for col, w in zip(TABLE_COLUMNS, widths)).rstrip()]
    lines += ["  ".join(v.ljust(w) for v, w in zip(c, widths)).rstrip() for c in cells]
    return "\n".join(lines)


def cmd_table(config: RunConfig) -> CommandOutput:
    n_max = config.n if config.n is not None else 4
    rows = formula_table(n_max, config.gmax)
    return CommandOutput(_render_table(rows, config.fmt), rows, all(row['all_agree'] for row in rows))


# --- experiment ---

def cmd_experiment(config: RunConfig) -> CommandOutput:
    n = config.n if config.n is not None else 4
    if config.experiment == 'basis-agreement':
        rows = basis_agreement(n, config.max_degree)
        text = "\n".join(f"{row['basis']}{row['shape']} agree={row['agree']}" for row in rows)
        return CommandOutput(text, rows, all(row['agree'] for row in rows))
    if config.experiment == 'span-dimension':
        summary = transitive_span_dimension(n, config.max_degree)
        text = " ".join(f"{k}={v}" for k, v in summary.items())
        return CommandOutput(text, [summary])
    raise FactorisationError(f"unknown experiment '{config.experiment}'; available: {', '.join(EXPERIMENTS)}")


COMMANDS = {
    'count': cmd_count,
    'enumerate': cmd_enumerate,
    'verify': cmd_verify,
    'trace': cmd_trace,
    'algebra': cmd_algebra,
    'table': cmd_table,
    'experiment': cmd_experiment,
}


# --- argparse ---

def _add_common(sub, formats=('text', 'json')):
    sub.add_argument('--format', dest='fmt', choices=formats, default='text')
    sub.add_argument('--unsafe-bounds', dest='unsafe', action='store_true',
                     help='permite superar las cotas configuradas')
    sub.add_argument('--workers', type=int, default=None,
                     help='procesos para las suites (por defecto FACTOR_THREADS)')


def _add_target(sub):
    sub.add_argument('--family', choices=FAMILIES, default='star')
    sub.add_argument('--target', help='permutación en notación de ciclos, por ejemplo "(1 2)(3)"')
    sub.add_argument('--partition', help='tipo de ciclo, por ejemplo "[3,1]"')
    sub.add_argument('--n', type=int, help='grado explícito')
    sub.add_argument('--genus', type=int, default=0)
    sub.add_argument('--root', type=int)
    sub.add_argument('--order', help='orden total, por ejemplo "3<2<1"')


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='cli.py',
        description='Factorizaciones en el grupo simétrico: conteo, biyecciones e identidades',
    )
    subparsers = parser.add_subparsers(dest='command', required=True)

    count = subparsers.add_parser('count', help='cuenta factorizaciones de una familia')
    _add_target(count)
    count.add_argument('--method', choices=METHODS, default='auto')
    _add_common(count)

    listing = subparsers.add_parser('enumerate', help='lista factorizaciones')
    _add_target(listing)
    _add_common(listing)

    verify = subparsers.add_parser('verify', help='ejecuta una suite de verificación')
    verify.add_argument('--suite', required=True, choices=available_suites() + ['all'])
    verify.add_argument('--n', type=int, default=4)
    verify.add_argument('--gmax', type=int, default=1)
    verify.add_argument('--kmax', type=int, default=2)
    _add_common(verify)

    trace = subparsers.add_parser('trace', help='traza paso a paso de una biyección')
    trace.add_argument('--map', dest='bijection', choices=MAPS, required=True)
    trace.add_argument('--legs', help='patas de la estrella, por ejemplo "1,2,1"')
    trace.add_argument('--sigma', help='n-ciclo inicial de una monótona doble')
    trace.add_argument('--factors', help='transposiciones, por ejemplo "(1 2),(1 3)"')
    trace.add_argument('--target')
    trace.add_argument('--n', type=int)
    trace.add_argument('--root', type=int)
    trace.add_argument('--order')
    trace.add_argument('--index', type=int, help='j de la reordenación adyacente')
    trace.add_argument('--conjugator', help='δ para delta y theta')
    trace.add_argument('--to-root', dest='new_root', type=int)
    trace.add_argument('--to-target', dest='new_target',
                       help='γ conjugada para centrality, u orden destino para natural')
    _add_common(trace)

    algebra = subparsers.add_parser('algebra', help='descomposición en sumas de clase')
    algebra.add_argument('--n', type=int, default=4)
    algebra.add_argument('--expr', required=True)
    _add_common(algebra)

    table = subparsers.add_parser('table', help='tabla cruzada de fórmulas')
    table.add_argument('--nmax', dest='n', type=int, default=4)
    table.add_argument('--gmax', type=int, default=1)
    _add_common(table, formats=('text', 'json', 'csv', 'markdown'))

    experiment = subparsers.add_parser('experiment', help='experimentos exploratorios')
    experiment.add_argument('--name', dest='experiment', choices=EXPERIMENTS, required=True)
    experiment.add_argument('--n', type=int, default=4)
    experiment.add_argument('--max-degree', dest='max_degree', type=int, default=4)
    _add_common(experiment)
    return parser


def render_output(config: RunConfig, output: CommandOutput) -> str:
    if config.fmt == 'json':
        payload = {
            'command': config.command,
            'config': config.to_dict(),
            'results': output.results,
            'pass': output.passed,
        }
        return json.dumps(payload, indent=2)
    return output.text


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE

    config = RunConfig.from_args(args)
    try:
        validate_environment_variables()
        validate_bounds(config)
        output = COMMANDS[config.command](config)
    except (EnvironmentError, FactorisationError) as exc:
        print(f"ERROR: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InexactDivisionError as exc:
        print(f"ERROR: {exc}", file=sys.stderr)
        return EXIT_FAILED

    rendered = render_output(config, output)
    if rendered:
        print(rendered)
    return EXIT_OK if output.passed else EXIT_FAILED


if __name__ == '__main__':
    sys.exit(main())
