# suites.py - Suites de verificación exhaustiva compartidas por la CLI y el servicio HTTP

"""
Cada suite comprueba una familia de identidades por oráculo exhaustivo en
grados pequeños y devuelve una lista de CheckResult. Las suites pesadas
reparten sus items (n, g) entre procesos con config.parallel_map; el
orden de los resultados no depende del paralelismo.
"""

import itertools
import json
from dataclasses import dataclass, replace
from functools import partial

from bijections import (
    HurwitzMoveTrace,
    centrality_witness,
    conjugate_monotone,
    conjugate_monotone_double,
    from_natural_order,
    is_product_preserving,
    leftward_move,
    monotone_double_to_star,
    reorder_adjacent,
    reorder_adjacent_inverse,
    reroot,
    rightward_move,
    star_to_monotone_double,
    to_natural_order,
)
from config import ANCHORS_FILE, get_logger, get_setting, parallel_map
from errors import BoundsError, FactorisationError
from factorisations import (
    count_monotone,
    count_monotone_double,
    count_star,
    count_star_unconstrained,
    enumerate_monotone,
    enumerate_monotone_double,
    enumerate_star,
    monotone_double_length,
    star_length,
    strictly_monotone_factorisation,
    validate_monotone,
)
from formulas import (
    catalan,
    central_factorial,
    count_paired_partitions,
    double_hurwitz_relation_holds,
    identity_recurrence_holds,
    monotone_double_full_cycle,
    monotone_double_identity,
    recurrence_representative,
    sinh_formula_count,
    star_recurrence,
)
from group_algebra import (
    AlgebraElement,
    SymmetricFunctionExpr,
    class_sum,
    coefficient_of,
    decompose,
    e,
    evaluate,
    h,
    is_central,
    jm_element,
    p,
    transitive_evaluate,
    transitive_power,
    verify_transitive_power_expression,
)
from perm_core import (
    Partition,
    Permutation,
    TotalOrder,
    all_orders,
    all_permutations,
    all_transpositions,
    canonical_conjugator,
    orbits,
    partitions,
    product,
)

logger = get_logger(__name__)


@dataclass(frozen=True)
class SuiteBounds:
    n: int = 4
    gmax: int = 1
    kmax: int = 2
    unsafe: bool = False
    workers: int = 1


@dataclass(frozen=True)
class CheckResult:
    identity: str
    passed: bool
    detail: str = ""
    anchor: str = ""

    def to_dict(self) -> dict:
        return {'identity': self.identity, 'pass': self.passed, 'detail': self.detail, 'anchor': self.anchor}


@dataclass(frozen=True)
class SuiteReport:
    suite: str
    checks: tuple[CheckResult, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_dict(self) -> dict:
        return {
            'suite': self.suite,
            'checks': [c.to_dict() for c in self.checks],
            'pass': self.passed,
        }

    def render(self) -> str:
        lines = []
        for c in self.checks:
            status = "PASS" if c.passed else "FAIL"
            label = f"{c.identity} [{c.anchor}]" if c.anchor else c.identity
            lines.append(f"{status} {label}" + (f": {c.detail}" if c.detail else ""))
        lines.append(f"suite {self.suite}: {'PASS' if self.passed else 'FAIL'}")
        return "\n".join(lines)


def _check(identity, passed, detail=""):
    if passed:
        logger.info("%s holds", identity)
    else:
        logger.error("%s fails: %s", identity, detail)
    return CheckResult(identity, bool(passed), "" if passed else detail)


def _first_failure(cases):
    """Primer caso (etiqueta, ok) que falla, o cadena vacía"""
    for label, ok in cases:
        if not ok:
            return str(label)
    return ""


def _e(k):
    return e(k) if k else e()


def _h(k):
    return h(k) if k else h()


def _jm_product(n):
    return SymmetricFunctionExpr.monomial({slot: 1 for slot in range(2, n + 1)})


def _items(bounds, n_low=1, n_high=None, g_high=None):
    n_high = bounds.n if n_high is None else min(bounds.n, n_high)
    g_high = bounds.gmax if g_high is None else min(bounds.gmax, g_high)
    return [(n, g) for n in range(n_low, n_high + 1) for g in range(g_high + 1)]


def _shapes_up_to(degree):
    return [shape for d in range(1, degree + 1) for shape in partitions(d)]


def conjugate_pairs(n):
    pairs = []
    for shape in partitions(n):
        members = [w for w in all_permutations(n) if w.cycle_type() == shape]
        pairs.extend(itertools.product(members, members))
    return pairs


def order_panel(n, size=6):
    """Órdenes de prueba deterministas: natural, inverso y muestras de todos los órdenes"""
    orders = all_orders(n)
    step = max(1, len(orders) // 5)
    candidates = [TotalOrder.natural(n), TotalOrder(tuple(range(n, 0, -1)))] + orders[1::step]
    panel = []
    for order in candidates:
        if order not in panel:
            panel.append(order)
    return panel[:size]


# --- Identidades del álgebra ---

def worked_example(bounds):
    j4 = jm_element(4, 4) ** 4
    omega = Permutation.parse("(1 2)(3)")
    gamma = Permutation.parse("(1)(2 3)")
    return [
        _check("[e] J_4^4 = 15", coefficient_of(Permutation.identity(4), j4) == 15),
        _check("[(1 2)(3 4)] J_4^4 = 4", coefficient_of(Permutation.parse("(1 2)(3 4)"), j4) == 4),
        _check("J_4^4 is not central", not is_central(j4)),
        _check(
            "p_4(J) = 22*K[1,1,1,1] + 8*K[3,1] + 4*K[2,2]",
            decompose(evaluate(p(4), 4)).render() == "22*K[1,1,1,1] + 8*K[3,1] + 4*K[2,2]",
        ),
        _check("T_4(J_4^4) = 3*K[3,1] + 4*K[2,2]", decompose(transitive_power(4, 4)).render() == "3*K[3,1] + 4*K[2,2]"),
        _check("T_4(p_4(J)) = T_4(J_4^4)", transitive_evaluate(p(4), 4) == transitive_power(4, 4)),
        _check("a_0((1 2)(3)) = a_0((1)(2 3)) = 2", count_star(omega, 0) == 2 and count_star(gamma, 0) == 2),
        _check(
            "unconstrained length-3 star counts are 2 and 3",
            count_star_unconstrained(omega, 3) == 2 and count_star_unconstrained(gamma, 3) == 3,
        ),
    ]


def jucys_elementary(bounds):
    """e_k(J) es la suma de las clases con n - k ciclos"""
    checks = []
    for n in range(1, bounds.n + 1):
        cases = []
        for k in range(n):
            expected = AlgebraElement.zero(n)
            for shape in partitions(n):
                if len(shape) == n - k:
                    expected = expected + class_sum(shape)
            cases.append((f"k={k}", evaluate(_e(k), n) == expected))
        failure = _first_failure(cases)
        checks.append(_check(f"e_k(J) = sum of classes with n-k cycles, n={n}", not failure, failure))
    return checks


def monotone_coefficients(bounds):
    """m_g(ω) = [ω] h_{n-c(ω)+2g}(J)"""
    checks = []
    for n, g in _items(bounds):
        cache = {}
        cases = []
        for omega in all_permutations(n):
            m = n - omega.num_cycles() + 2 * g
            if m not in cache:
                cache[m] = evaluate(_h(m), n)
            cases.append((omega, count_monotone(omega, g) == coefficient_of(omega, cache[m])))
        failure = _first_failure(cases)
        checks.append(_check(f"monotone count = [w] h_(n-c+2g)(J), n={n} g={g}", not failure, failure))
    return checks


def monotone_double_coefficients(bounds):
    """md_g(ω) = [ω] J_2⋯J_n h_{c(ω)-1+2g}(J)"""
    checks = []
    for n, g in _items(bounds):
        cache = {}
        cases = []
        for omega in all_permutations(n):
            k = omega.num_cycles() - 1 + 2 * g
            if k not in cache:
                cache[k] = evaluate(_jm_product(n) * _h(k), n)
            cases.append((omega, count_monotone_double(omega, g) == coefficient_of(omega, cache[k])))
        failure = _first_failure(cases)
        checks.append(_check(f"monotone double count = [w] J_2...J_n h_(c-1+2g)(J), n={n} g={g}", not failure, failure))
    return checks


def star_coefficients(bounds):
    """a_g(ω) = [ω] T_n(J_n^m) y el conteo sin transitividad es [ω] J_n^m"""
    checks = []
    for n, g in _items(bounds):
        cases = []
        for omega in all_permutations(n):
            m = star_length(omega, g)
            plain = evaluate(SymmetricFunctionExpr.monomial({n: m}), n)
            ok = (
                count_star(omega, g) == coefficient_of(omega, transitive_power(n, m))
                and count_star_unconstrained(omega, m) == coefficient_of(omega, plain)
            )
            cases.append((omega, ok))
        failure = _first_failure(cases)
        checks.append(_check(f"star count = [w] T_n(J_n^m), n={n} g={g}", not failure, failure))
    return checks


def star_centrality(bounds):
    """a_g es constante en cada clase y no depende de la raíz"""
    checks = []
    for n, g in _items(bounds):
        cases = []
        for shape in partitions(n):
            values = {
                count_star(omega, g, root)
                for omega in all_permutations(n) if omega.cycle_type() == shape
                for root in range(1, n + 1)
            }
            cases.append((shape, len(values) == 1))
        failure = _first_failure(cases)
        checks.append(_check(f"star counts are class and root invariant, n={n} g={g}", not failure, failure))
    return checks


def symmetric_centrality(bounds):
    checks = []
    for n in range(1, bounds.n + 1):
        cases = [
            (f"{kind}{shape}", is_central(evaluate(SymmetricFunctionExpr.basis(kind, shape), n)))
            for shape in _shapes_up_to(5) for kind in ("e", "h", "p")
        ]
        failure = _first_failure(cases)
        checks.append(_check(f"f(J) is central for e, h, p bases, n={n}", not failure, failure))
    return checks


def transitive_centrality(bounds):
    """T_n(f(J)) es central para e_λ, h_λ y p_λ"""
    checks = []
    for n in range(1, bounds.n + 1):
        cases = []
        for shape in _shapes_up_to(5):
            for kind in ("e", "h", "p"):
                if kind == "e" and shape.parts[0] > n - 1:
                    continue
                value = transitive_evaluate(SymmetricFunctionExpr.basis(kind, shape), n)
                cases.append((f"{kind}{shape}", is_central(value)))
        failure = _first_failure(cases)
        checks.append(_check(f"T_n(f(J)) is central, n={n}", not failure, failure))
    return checks


def transitive_power_centrality(bounds):
    checks = []
    for n in range(1, bounds.n + 1):
        cases = [(f"t={t}", is_central(transitive_power(n, t))) for t in range(n + 5)]
        failure = _first_failure(cases)
        checks.append(_check(f"T_n(J_n^t) is central, n={n}", not failure, failure))
    return checks


def non_homomorphism(bounds):
    checks = []
    for n in (3, 4):
        if n > bounds.n:
            continue
        joint = transitive_evaluate(e(n - 1) * e(1), n)
        separate = transitive_evaluate(e(n - 1), n) * transitive_evaluate(e(1), n)
        checks.append(_check(
            f"T_n(e_(n-1) e_1) != 0 while T_n(e_(n-1)) T_n(e_1) = 0, n={n}",
            not joint.is_zero() and separate.is_zero(),
            f"joint zero={joint.is_zero()} separate zero={separate.is_zero()}",
        ))
    return checks


def fixed_point_free(bounds):
    """Sin puntos fijos, el filtro de transitividad no quita nada"""
    checks = []
    for n in range(2, bounds.n + 1):
        cases = []
        for length in range(n - 1, n + 3):
            plain = evaluate(SymmetricFunctionExpr.monomial({n: length}), n)
            filtered = transitive_power(n, length)
            for omega in all_permutations(n):
                if omega.fixed_points():
                    continue
                cases.append((f"{omega} l={length}", coefficient_of(omega, plain) == coefficient_of(omega, filtered)))
        failure = _first_failure(cases)
        checks.append(_check(f"[w] T_n(J_n^l) = [w] J_n^l without fixed points, n={n}", not failure, failure))
    return checks


def transitive_power_expression(bounds):
    checks = []
    for n in range(2, bounds.n + 1):
        for k in range(bounds.kmax + 1):
            report = verify_transitive_power_expression(n, k)
            checks.append(_check(
                f"T_n(J_n^(n-1+k)) = J_2...J_n h_k(J) = T_n(p_(n-1+k)(J)), n={n} k={k}",
                report['pass'],
                f"power form {report['power_form']}, p-basis form {report['p_basis_form']}",
            ))
    return checks


def strictly_monotone(bounds):
    """La factorización estrictamente monótona es única y reproduce e_k(J)"""
    checks = []
    for n in range(1, bounds.n + 1):
        by_length = {}
        failure = ""
        for omega in all_permutations(n):
            try:
                factors = strictly_monotone_factorisation(omega)
            except FactorisationError as exc:
                failure = str(exc)
                break
            by_length.setdefault(len(factors), []).append(product(factors, n))
        if not failure:
            for k in range(n):
                rebuilt = AlgebraElement.zero(n)
                for w in by_length.get(k, []):
                    rebuilt = rebuilt + AlgebraElement.from_permutation(w)
                if rebuilt != evaluate(_e(k), n):
                    failure = f"k={k}"
                    break
        checks.append(_check(f"strictly monotone factorisations expand e_k(J), n={n}", not failure, failure))
    return checks


# --- Conteos y fórmulas ---

def _star_md_item(item):
    n, g = item
    results = []
    cases = [(w, count_star(w, g) == count_monotone_double(w, g)) for w in all_permutations(n)]
    failure = _first_failure(cases)
    results.append(CheckResult(f"a_g(w) = md_g(w) by counting, n={n} g={g}", not failure, failure))
    if n > 4 or g > 1:
        return results

    failure = ""
    for omega in all_permutations(n):
        stars = enumerate_star(omega, g, n)
        doubles = enumerate_monotone_double(omega, g)
        if len(stars) != len(doubles) or len(stars) != count_star(omega, g):
            failure = f"{omega}: listing sizes {len(stars)} vs {len(doubles)}"
            break
        images = set()
        for f in stars:
            trace = HurwitzMoveTrace()
            md = star_to_monotone_double(f, trace)
            if len(md.factors) != monotone_double_length(omega, g) or not is_product_preserving(trace, n):
                failure = f"{f.render()}: bad intermediate form"
                break
            if monotone_double_to_star(md) != f:
                failure = f"{f.render()}: inverse does not round-trip"
                break
            images.add(md)
        if failure:
            break
        if images != set(doubles):
            failure = f"{omega}: image differs from the monotone double set"
            break
    results.append(CheckResult(f"star to monotone double bijection, n={n} g={g}", not failure, failure))
    return results


def star_monotone_double(bounds):
    chunks = parallel_map(_star_md_item, _items(bounds), bounds.workers)
    checks = [c for chunk in chunks for c in chunk]
    for c in checks:
        _check(c.identity, c.passed, c.detail)
    return checks


def star_recurrence_suite(bounds):
    checks = [_check("a_0(1, []) = 1", star_recurrence(1, Partition(()), 0) == 1)]
    for total in range(1, bounds.n + 1):
        for g in range(bounds.gmax + 1):
            cases = []
            for i in range(1, total + 1):
                for shape in partitions(total - i):
                    omega = recurrence_representative(i, shape)
                    cases.append((f"i={i} a={shape}", star_recurrence(i, shape, g) == count_star(omega, g)))
            failure = _first_failure(cases)
            checks.append(_check(f"join-cut recurrence matches star counts, i+|a|={total} g={g}", not failure, failure))
    return checks


def sinh_formula(bounds):
    checks = []
    for n, g in _items(bounds):
        cases = []
        for shape in partitions(n):
            omega = shape.representative()
            values = {sinh_formula_count(shape, g), count_star(omega, g), count_monotone_double(omega, g)}
            cases.append((shape, len(values) == 1))
        failure = _first_failure(cases)
        checks.append(_check(f"sinh formula = star count = monotone double count, n={n} g={g}", not failure, failure))
    return checks


def closed_forms(bounds):
    checks = []
    for n, g in _items(bounds):
        identity = Permutation.identity(n)
        cases = [("identity", monotone_double_identity(n, g) == count_monotone_double(identity, g))]
        if n >= 2:
            cycle = Partition((n,)).representative()
            cases.append(("full cycle", monotone_double_full_cycle(n, g) == count_monotone_double(cycle, g)))
        failure = _first_failure(cases)
        checks.append(_check(f"closed forms match enumeration, n={n} g={g}", not failure, failure))
    top = min(bounds.n, 5)
    cases = [
        (f"T({m},{k})", central_factorial(m, k) == count_paired_partitions(m, k))
        for m in range(top + 1) for k in range(m + 1)
    ]
    failure = _first_failure(cases)
    checks.append(_check("central factorial numbers count paired set partitions", not failure, failure))
    checks.append(_check("catalan(0..3) = 1, 1, 2, 5", [catalan(m) for m in range(4)] == [1, 1, 2, 5]))
    return checks


def identity_recurrence(bounds):
    checks = []
    for n in range(2, bounds.n + 1):
        cases = [(f"g={g}", identity_recurrence_holds(n, g)) for g in range(bounds.gmax + 1)]
        failure = _first_failure(cases)
        checks.append(_check(f"identity-class recurrence, n={n}", not failure, failure))
    return checks


def double_hurwitz_relation(bounds):
    limit = get_setting('RELATION_N_MAX')
    if bounds.n > limit and not bounds.unsafe:
        raise BoundsError("relation n", limit, bounds.n)
    checks = []
    for n in range(1, bounds.n + 1):
        for shape in partitions(n):
            for g in range(bounds.gmax + 1):
                ok = double_hurwitz_relation_holds(shape, g, unsafe=bounds.unsafe)
                checks.append(_check(f"b_g(a u 1^(n-1)) relation, a={shape} g={g}", ok, "sides differ"))
    return checks


# --- Biyecciones ---

def _moves_item(n):
    pairs = list(itertools.product(all_transpositions(n), repeat=2))
    ok = all(
        leftward_move(*rightward_move(*pair)) == pair
        and rightward_move(*leftward_move(*pair)) == pair
        and product(rightward_move(*pair), n) == product(pair, n)
        and product(leftward_move(*pair), n) == product(pair, n)
        for pair in pairs
    )
    return CheckResult(f"Hurwitz moves are inverse and product preserving, n={n}", ok, "" if ok else "move failure")


def _reorder_item(item):
    n, g = item
    failure = ""
    for order, omega in itertools.product(order_panel(n), all_permutations(n)):
        domain = enumerate_monotone(omega, g, order)
        for j in range(1, n):
            swapped = order.swap_adjacent(j)
            images = set()
            for f in domain:
                trace = HurwitzMoveTrace()
                image = reorder_adjacent(f, j, trace)
                ok, _, _ = validate_monotone(image.factors, omega, swapped)
                if not ok or not is_product_preserving(trace, n):
                    failure = f"{f.render()} j={j}: image not monotone under {swapped}"
                elif orbits(image.factors, n) != orbits(f.factors, n):
                    failure = f"{f.render()} j={j}: orbits changed"
                elif reorder_adjacent_inverse(image, j) != f:
                    failure = f"{f.render()} j={j}: inverse does not round-trip"
                if failure:
                    return CheckResult(f"adjacent reordering is a bijection, n={n} g={g}", False, failure)
                images.add(image)
            if images != set(enumerate_monotone(omega, g, swapped)):
                failure = f"{omega} j={j} under {order}: image differs"
                return CheckResult(f"adjacent reordering is a bijection, n={n} g={g}", False, failure)
        natural = {to_natural_order(f) for f in domain}
        if natural != set(enumerate_monotone(omega, g)):
            return CheckResult(f"adjacent reordering is a bijection, n={n} g={g}", False, f"{omega} under {order}: order change not onto")
        if any(from_natural_order(to_natural_order(f), order) != f for f in domain):
            return CheckResult(f"adjacent reordering is a bijection, n={n} g={g}", False, f"{omega} under {order}: order change does not round-trip")
    return CheckResult(f"adjacent reordering is a bijection, n={n} g={g}", True)


def _conjugation_item(item):
    n, g = item
    label = f"conjugation maps are bijections, n={n} g={g}"
    for omega, gamma in conjugate_pairs(n):
        delta = canonical_conjugator(omega, gamma)
        monotone = {conjugate_monotone(f, delta) for f in enumerate_monotone(omega, g)}
        if monotone != set(enumerate_monotone(gamma, g)):
            return CheckResult(label, False, f"monotone {omega} -> {gamma}")
        doubles = {conjugate_monotone_double(f, delta) for f in enumerate_monotone_double(omega, g)}
        if doubles != set(enumerate_monotone_double(gamma, g)):
            return CheckResult(label, False, f"monotone double {omega} -> {gamma}")
        stars = {centrality_witness(f, gamma) for f in enumerate_star(omega, g, n)}
        if stars != set(enumerate_star(gamma, g, n)):
            return CheckResult(label, False, f"star {omega} -> {gamma}")
    return CheckResult(label, True)


def _reroot_item(item):
    n, g = item
    label = f"rerooting is a bijection, n={n} g={g}"
    for omega in all_permutations(n):
        stars = enumerate_star(omega, g, n)
        for root in range(1, n + 1):
            images = {reroot(f, root) for f in stars}
            if images != set(enumerate_star(omega, g, root)):
                return CheckResult(label, False, f"{omega} root {root}: image differs")
            if any(reroot(reroot(f, root), n) != f for f in stars):
                return CheckResult(label, False, f"{omega} root {root}: round trip fails")
    return CheckResult(label, True)


def bijection_suite(bounds):
    """Las reordenaciones llegan hasta bounds.n; conjugación y cambio de raíz se quedan en n <= 4"""
    top = min(bounds.n, 4)
    checks = [_moves_item(n) for n in range(2, top + 1)]
    checks.extend(parallel_map(_reorder_item, _items(bounds, n_low=2, g_high=1), bounds.workers))
    panel = _items(bounds, n_low=2, n_high=4, g_high=1)
    for worker in (_conjugation_item, _reroot_item):
        checks.extend(parallel_map(worker, panel, bounds.workers))
    for c in checks:
        _check(c.identity, c.passed, c.detail)
    return checks


SUITES = {
    'worked-example': (worked_example, "J_4^4, p_4 and T_4 values and the S_3 star counts"),
    'jucys-elementary': (jucys_elementary, "e_k(J) is the sum of classes with n-k cycles"),
    'monotone-coefficients': (monotone_coefficients, "monotone counts are coefficients of h_m(J)"),
    'monotone-double-coefficients': (monotone_double_coefficients, "monotone double counts are coefficients of J_2...J_n h_k(J)"),
    'star-coefficients': (star_coefficients, "star counts are coefficients of T_n(J_n^m) and J_n^m"),
    'star-centrality': (star_centrality, "star counts are class and root invariant"),
    'symmetric-centrality': (symmetric_centrality, "symmetric functions of J are central"),
    'transitive-centrality': (transitive_centrality, "T_n(f(J)) is central for e, h, p bases"),
    'transitive-power-centrality': (transitive_power_centrality, "T_n(J_n^t) is central"),
    'non-homomorphism': (non_homomorphism, "T_n is not multiplicative"),
    'fixed-point-free': (fixed_point_free, "transitivity filter is invisible without fixed points"),
    'star-monotone-double': (star_monotone_double, "a_g(w) = md_g(w) by counting, listing and bijection"),
    'transitive-power-expression': (transitive_power_expression, "T_n(J_n^(n-1+k)) = J_2...J_n h_k(J)"),
    'strictly-monotone': (strictly_monotone, "unique strictly monotone factorisations expand e_k(J)"),
    'star-recurrence': (star_recurrence_suite, "join-cut recurrence for star counts"),
    'sinh-formula': (sinh_formula, "sinh formula, star and monotone double counts agree"),
    'closed-forms': (closed_forms, "closed forms for full cycle and identity classes"),
    'identity-recurrence': (identity_recurrence, "recurrence for the identity class"),
    'double-hurwitz-relation': (double_hurwitz_relation, "double Hurwitz b_g against star counts"),
    'bijections': (bijection_suite, "Hurwitz moves, reorderings, conjugations and rerooting"),
}


def load_anchors(path=None) -> dict[str, tuple[str, ...]]:
    """
    Lee la tabla de referencias (ancla -> suites) desde un JSON.
    Cada suite registrada debe aparecer bajo exactamente un ancla.
    """
    with open(path or ANCHORS_FILE, encoding='utf-8') as fh:
        raw = json.load(fh)
    anchors = {anchor: tuple(names) for anchor, names in raw.items()}
    seen = {}
    for anchor, names in anchors.items():
        if anchor in SUITES:
            raise FactorisationError(f"anchor '{anchor}' shadows a suite name")
        for name in names:
            if name not in SUITES:
                raise FactorisationError(f"anchor '{anchor}' lists unknown suite '{name}'")
            if name in seen:
                raise FactorisationError(f"suite '{name}' listed under '{seen[name]}' and '{anchor}'")
            seen[name] = anchor
    missing = sorted(set(SUITES) - set(seen))
    if missing:
        raise FactorisationError(f"suites without anchor: {', '.join(missing)}")
    return anchors


ANCHORS = load_anchors()
SUITE_ANCHOR = {name: anchor for anchor, names in ANCHORS.items() for name in names}


def available_suites() -> list[str]:
    """Nombres descriptivos y anclas aceptados por verify"""
    return sorted(SUITES) + sorted(ANCHORS)


def resolve_suite(name: str) -> tuple[str, ...]:
    """Un nombre de suite o un ancla -> suites a ejecutar, en orden"""
    if name in SUITES:
        return (name,)
    if name in ANCHORS:
        return ANCHORS[name]
    available = ", ".join(available_suites())
    raise FactorisationError(f"unknown suite '{name}'; available suites: {available}")


def run_suite(name: str, bounds: SuiteBounds) -> SuiteReport:
    checks = []
    for suite in resolve_suite(name):
        func, _ = SUITES[suite]
        logger.info("running suite %s with %s", suite, bounds)
        checks.extend(replace(c, anchor=SUITE_ANCHOR[suite]) for c in func(bounds))
    return SuiteReport(name, tuple(checks))
