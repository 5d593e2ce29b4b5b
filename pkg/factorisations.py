# factorisations.py - Familias de factorizaciones: definición, listado y conteo

"""
Cuatro familias de factorizaciones en S_n:

- estrella transitiva: (a_1 r)(a_2 r)⋯(a_m r) = ω, todos los símbolos ≠ r aparecen
- monótona respecto a un orden ≺
- monótona doble: un n-ciclo σ seguido de una cola monótona
- doble de Hurwitz (solo conteo, para la relación con las estrellas)

El listado es exponencial y está acotado; el conteo usa programación
dinámica sobre (producto parcial, información extra) y escala más lejos.
"""

from dataclasses import dataclass
from functools import lru_cache

from config import get_logger
from errors import ConditionViolation, FactorisationError, exact_div
from perm_core import (
    Partition,
    Permutation,
    TotalOrder,
    Transposition,
    all_permutations,
    all_transpositions,
    cycle_count,
    full_cycles,
    merge_orbit_labels,
    orbits,
    product,
    right_multiply,
)

logger = get_logger(__name__)


# --- Longitudes por género ---

def star_length(target: Permutation, genus: int) -> int:
    return target.n + target.num_cycles() - 2 + 2 * genus


def monotone_length(target: Permutation, genus: int) -> int:
    return target.n - target.num_cycles() + 2 * genus


def monotone_double_length(target: Permutation, genus: int) -> int:
    return target.num_cycles() - 1 + 2 * genus


def double_hurwitz_length(alpha: Partition, beta: Partition, genus: int) -> int:
    return len(alpha) + len(beta) - 2 + 2 * genus


def _genus_from_length(length: int, base: int) -> int | None:
    """Género g con length = base + 2g, o None si no existe"""
    excess = length - base
    if excess < 0 or excess % 2:
        return None
    return excess // 2


def _render_factors(items) -> str:
    return "(" + ",".join(items) + ")"


# --- Registros ---

@dataclass(frozen=True)
class StarFactorisation:
    n: int
    root: int
    legs: tuple[int, ...]
    target: Permutation
    genus: int

    @property
    def factors(self) -> tuple[Transposition, ...]:
        return tuple(Transposition(a, self.root) for a in self.legs)

    def render(self) -> str:
        return _render_factors(f"({a} {self.root})" for a in self.legs)

    def to_dict(self) -> dict:
        return {
            'family': 'star',
            'n': self.n,
            'root': self.root,
            'genus': self.genus,
            'target': str(self.target),
            'factors': [f"({a} {self.root})" for a in self.legs],
        }


@dataclass(frozen=True)
class MonotoneFactorisation:
    n: int
    order: TotalOrder
    factors: tuple[Transposition, ...]
    target: Permutation
    genus: int

    def render(self) -> str:
        return _render_factors(t.display(self.order) for t in self.factors)

    def to_dict(self) -> dict:
        return {
            'family': 'monotone',
            'n': self.n,
            'root': None,
            'order': str(self.order),
            'genus': self.genus,
            'target': str(self.target),
            'factors': [t.display(self.order) for t in self.factors],
        }


@dataclass(frozen=True)
class MonotoneDoubleFactorisation:
    n: int
    sigma: Permutation
    factors: tuple[Transposition, ...]
    target: Permutation
    genus: int

    def render(self) -> str:
        return _render_factors([str(self.sigma)] + [str(t) for t in self.factors])

    def to_dict(self) -> dict:
        return {
            'family': 'md',
            'n': self.n,
            'root': None,
            'genus': self.genus,
            'target': str(self.target),
            'sigma': str(self.sigma),
            'factors': [str(t) for t in self.factors],
        }


@dataclass(frozen=True)
class DoubleHurwitzFactorisation:
    n: int
    sigma: Permutation
    factors: tuple[Transposition, ...]
    genus: int
    target_class: Partition

    def render(self) -> str:
        return _render_factors([str(self.sigma)] + [str(t) for t in self.factors])


# --- Validación (ok, datos, errores) ---

def validate_star(legs, target: Permutation, root: int) -> tuple[bool, dict, list]:
    """Comprueba producto, longitud y transitividad de una estrella; devuelve todas las violaciones"""
    n = target.n
    errors = []
    data = {'n': n, 'root': root, 'genus': None}
    if not 1 <= root <= n:
        return False, data, [f"condition root violated: root {root} outside [1, {n}]"]
    bad = [a for a in legs if a == root or not 1 <= a <= n]
    if bad:
        return False, data, [f"condition root violated: legs {bad} are not valid partners of {root}"]
    if product((Transposition(a, root) for a in legs), n) != target:
        errors.append("condition product violated: factors do not multiply to the target")
    genus = _genus_from_length(len(legs), n + target.num_cycles() - 2)
    if genus is None:
        errors.append(f"condition length violated: {len(legs)} factors is not n + c(ω) - 2 + 2g")
    data['genus'] = genus
    missing = sorted(set(range(1, n + 1)) - {root} - set(legs))
    if missing:
        shown = ", ".join(f"({a} {root})" for a in missing)
        errors.append(f"condition transitivity violated: {shown} never appears")
    return not errors, data, errors


def validate_monotone(factors, target: Permutation, order: TotalOrder) -> tuple[bool, dict, list]:
    n = target.n
    errors = []
    if product(factors, n) != target:
        errors.append("condition product violated: factors do not multiply to the target")
    maxima = [order.rank(order.larger(t)) for t in factors]
    if any(x > y for x, y in zip(maxima, maxima[1:])):
        errors.append(f"condition monotone violated: larger entries are not weakly increasing under {order}")
    genus = _genus_from_length(len(factors), n - target.num_cycles())
    if genus is None:
        errors.append(f"condition length violated: {len(factors)} factors is not n - c(ω) + 2g")
    return not errors, {'n': n, 'genus': genus}, errors


def validate_monotone_double(sigma: Permutation, factors, target: Permutation) -> tuple[bool, dict, list]:
    n = target.n
    errors = []
    if sigma.num_cycles() != 1:
        errors.append(f"condition full-cycle violated: {sigma} is not an n-cycle")
    if product([sigma, *factors], n) != target:
        errors.append("condition product violated: σ and factors do not multiply to the target")
    maxima = [t.b for t in factors]
    if any(x > y for x, y in zip(maxima, maxima[1:])):
        errors.append("condition monotone violated: larger entries are not weakly increasing")
    genus = _genus_from_length(len(factors), target.num_cycles() - 1)
    if genus is None:
        errors.append(f"condition length violated: {len(factors)} factors is not c(ω) - 1 + 2g")
    return not errors, {'n': n, 'genus': genus}, errors


def _first_violation(errors):
    condition = errors[0].split()[1]
    raise ConditionViolation(condition, errors[0].split(": ", 1)[-1])


def make_star(legs, target: Permutation, root: int) -> StarFactorisation:
    ok, data, errors = validate_star(legs, target, root)
    if not ok:
        _first_violation(errors)
    return StarFactorisation(target.n, root, tuple(legs), target, data['genus'])


def make_monotone(factors, target: Permutation, order: TotalOrder) -> MonotoneFactorisation:
    ok, data, errors = validate_monotone(factors, target, order)
    if not ok:
        _first_violation(errors)
    return MonotoneFactorisation(target.n, order, tuple(factors), target, data['genus'])


def make_monotone_double(sigma: Permutation, factors, target: Permutation) -> MonotoneDoubleFactorisation:
    ok, data, errors = validate_monotone_double(sigma, factors, target)
    if not ok:
        _first_violation(errors)
    return MonotoneDoubleFactorisation(target.n, sigma, tuple(factors), target, data['genus'])


# --- Listado ---

def _distance(images, target_images) -> int:
    """Longitud de reflexión de P⁻¹∘target"""
    n = len(images)
    inverse = [0] * n
    for i, image in enumerate(images):
        inverse[image - 1] = i + 1
    rest = [target_images[inverse[i] - 1] for i in range(n)]
    return n - cycle_count(rest)


def enumerate_star(target: Permutation, genus: int, root: int) -> list[StarFactorisation]:
    """Todas las factorizaciones estrella transitivas, en orden lexicográfico de patas"""
    n = target.n
    if not 1 <= root <= n:
        raise FactorisationError(f"root {root} outside [1, {n}]")
    if genus < 0:
        return []
    m = star_length(target, genus)
    legs_pool = [a for a in range(1, n + 1) if a != root]
    full = frozenset(legs_pool)
    goal = target.images
    found = []

    def _walk(images, legs, used):
        left = m - len(legs)
        if left == 0:
            if tuple(images) == goal and used == full:
                found.append(tuple(legs))
            return
        if _distance(images, goal) > left or len(full - used) > left:
            return
        for a in legs_pool:
            legs.append(a)
            _walk(right_multiply(images, a, root), legs, used | {a})
            legs.pop()

    _walk(list(range(1, n + 1)), [], frozenset())
    logger.debug("enumerate_star %s g=%d root=%d -> %d", target, genus, root, len(found))
    return [StarFactorisation(n, root, legs, target, genus) for legs in found]


def _monotone_tuples(target: Permutation, m: int, order: TotalOrder) -> list[tuple[Transposition, ...]]:
    n = target.n
    goal = target.images
    # candidatos (a b) con a ≺ b, agrupados por el rango del mayor
    by_rank = {}
    for t in all_transpositions(n):
        by_rank.setdefault(order.rank(order.larger(t)), []).append(t)
    found = []

    def _walk(images, factors, floor):
        left = m - len(factors)
        if left == 0:
            if tuple(images) == goal:
                found.append(tuple(factors))
            return
        if _distance(images, goal) > left:
            return
        for rank in range(floor, n):
            for t in by_rank.get(rank, ()):
                factors.append(t)
                _walk(right_multiply(images, t.a, t.b), factors, rank)
                factors.pop()

    _walk(list(range(1, n + 1)), [], 1)
    return sorted(found)


def enumerate_monotone(target: Permutation, genus: int, order: TotalOrder | None = None) -> list[MonotoneFactorisation]:
    """Factorizaciones monótonas de target respecto a order (natural por defecto)"""
    n = target.n
    order = order or TotalOrder.natural(n)
    if order.n != n:
        raise FactorisationError(f"order of degree {order.n} used with degree {n}")
    if genus < 0:
        return []
    m = monotone_length(target, genus)
    return [
        MonotoneFactorisation(n, order, factors, target, genus)
        for factors in _monotone_tuples(target, m, order)
    ]


def enumerate_monotone_double(target: Permutation, genus: int) -> list[MonotoneDoubleFactorisation]:
    """Pares (σ, cola monótona) con σ un n-ciclo y σ·cola = target"""
    n = target.n
    if genus < 0:
        return []
    m = monotone_double_length(target, genus)
    natural = TotalOrder.natural(n)
    result = []
    for sigma in full_cycles(n):
        beta = sigma.inverse() * target
        if _genus_from_length(m, beta.reflection_length()) is None:
            continue
        for factors in _monotone_tuples(beta, m, natural):
            result.append(MonotoneDoubleFactorisation(n, sigma, factors, target, genus))
    return result


def strictly_monotone_factorisation(target: Permutation) -> tuple[Transposition, ...]:
    """
    La única factorización (j_1 i_1)⋯(j_k i_k) con j_t < i_t e i_1 < ⋯ < i_k.
    Se despega el último factor desde el símbolo n hacia abajo.
    """
    n = target.n
    current = target
    peeled = []
    for i in range(n, 1, -1):
        j = current(i)
        if j == i:
            continue
        if j > i:
            raise FactorisationError(f"strict monotone peeling failed at {i} for {target}")
        t = Transposition(j, i)
        peeled.append(t)
        current = current * t.as_permutation(n)
    factors = tuple(reversed(peeled))
    if not current.is_identity() or product(factors, n) != target:
        raise FactorisationError(f"strict monotone factorisation of {target} is inconsistent")
    if len(factors) != target.reflection_length():
        raise FactorisationError(f"strict monotone factorisation of {target} has wrong length")
    if orbits(factors, n) != orbits([target], n):
        raise FactorisationError(f"strict monotone factors of {target} change the orbits")
    return factors


def iter_double_hurwitz(n: int, alpha: Partition, beta: Partition, genus: int):
    """Listado directo de tuplas (σ, τ_1, …, τ_m); solo para casos diminutos"""
    if genus < 0:
        return
    m = double_hurwitz_length(alpha, beta, genus)
    if m < 0:
        return
    pool = all_transpositions(n)
    sigmas = [p for p in all_permutations(n) if p.cycle_type() == alpha]

    def _walk(images, factors):
        if len(factors) == m:
            result = Permutation(tuple(images))
            if result.cycle_type() == beta and orbits([sigma, *factors], n).is_transitive:
                yield DoubleHurwitzFactorisation(n, sigma, tuple(factors), genus, beta)
            return
        for t in pool:
            factors.append(t)
            yield from _walk(right_multiply(images, t.a, t.b), factors)
            factors.pop()

    for sigma in sigmas:
        yield from _walk(list(sigma.images), [])


# --- Conteo por programación dinámica ---

@lru_cache(maxsize=None)
def _star_states(n: int, m: int, root: int) -> dict:
    """Estados ((imágenes del prefijo, máscara de patas usadas) -> número) tras m factores"""
    if m == 0:
        return {(tuple(range(1, n + 1)), 0): 1}
    states: dict = {}
    legs = [a for a in range(1, n + 1) if a != root]
    for (images, mask), count in _star_states(n, m - 1, root).items():
        pos_root = images.index(root)
        for a in legs:
            nxt = list(images)
            pos_a = nxt.index(a)
            nxt[pos_a], nxt[pos_root] = root, a
            key = (tuple(nxt), mask | (1 << (a - 1)))
            states[key] = states.get(key, 0) + count
    return states


@lru_cache(maxsize=None)
def star_count_table(n: int, m: int, root: int, transitive: bool = True) -> dict:
    """Para cada permutación (por imágenes), número de estrellas de longitud m con raíz root"""
    full = sum(1 << (a - 1) for a in range(1, n + 1) if a != root)
    table: dict = {}
    for (images, mask), count in _star_states(n, m, root).items():
        if transitive and mask != full:
            continue
        table[images] = table.get(images, 0) + count
    return table


def count_star(target: Permutation, genus: int, root: int | None = None) -> int:
    """a_g(ω) con raíz root (n por defecto), por programación dinámica"""
    n = target.n
    root = n if root is None else root
    if not 1 <= root <= n:
        raise FactorisationError(f"root {root} outside [1, {n}]")
    if genus < 0:
        return 0
    return star_count_table(n, star_length(target, genus), root).get(target.images, 0)


def count_star_unconstrained(target: Permutation, length: int, root: int | None = None) -> int:
    """Tuplas de longitud length de transposiciones (a r) con producto target, sin transitividad"""
    n = target.n
    root = n if root is None else root
    if length < 0:
        return 0
    return star_count_table(n, length, root, transitive=False).get(target.images, 0)


@lru_cache(maxsize=None)
def _monotone_states(n: int, m: int, order_seq: tuple[int, ...]) -> dict:
    """Estados ((imágenes, rango del mayor actual) -> número)"""
    if m == 0:
        return {(tuple(range(1, n + 1)), 0): 1}
    order = TotalOrder(order_seq)
    states: dict = {}
    for (images, floor), count in _monotone_states(n, m - 1, order_seq).items():
        for rank in range(max(floor, 1), n):
            high = order.sequence[rank]
            for low in order.sequence[:rank]:
                nxt = tuple(right_multiply(images, low, high))
                key = (nxt, rank)
                states[key] = states.get(key, 0) + count
    return states


@lru_cache(maxsize=None)
def monotone_count_table(n: int, m: int, order_seq: tuple[int, ...] | None = None) -> dict:
    order_seq = order_seq or tuple(range(1, n + 1))
    table: dict = {}
    for (images, _), count in _monotone_states(n, m, order_seq).items():
        table[images] = table.get(images, 0) + count
    return table


def count_monotone_length(target: Permutation, length: int, order: TotalOrder | None = None) -> int:
    if length < 0:
        return 0
    seq = order.sequence if order is not None else None
    return monotone_count_table(target.n, length, seq).get(target.images, 0)


def count_monotone(target: Permutation, genus: int, order: TotalOrder | None = None) -> int:
    """m_g(ω) respecto a order"""
    if genus < 0:
        return 0
    return count_monotone_length(target, monotone_length(target, genus), order)


def count_monotone_double(target: Permutation, genus: int) -> int:
    """md_g(ω): suma sobre n-ciclos σ de las colas monótonas de σ⁻¹ω"""
    if genus < 0:
        return 0
    m = monotone_double_length(target, genus)
    total = 0
    for sigma in full_cycles(target.n):
        total += count_monotone_length(sigma.inverse() * target, m)
    return total


@lru_cache(maxsize=None)
def _transitive_states(n: int, m: int, start_class: Partition) -> dict:
    """Estados ((imágenes, etiquetas de órbita) -> número) partiendo de toda la clase start_class"""
    if m == 0:
        states: dict = {}
        for sigma in all_permutations(n):
            if sigma.cycle_type() == start_class:
                key = (sigma.images, orbits([sigma], n).labels())
                states[key] = states.get(key, 0) + 1
        return states
    states = {}
    pool = all_transpositions(n)
    for (images, labels), count in _transitive_states(n, m - 1, start_class).items():
        for t in pool:
            key = (tuple(right_multiply(images, t.a, t.b)), merge_orbit_labels(labels, t.a, t.b))
            states[key] = states.get(key, 0) + count
    return states


def enumerate_double_hurwitz(n: int, alpha: Partition, beta: Partition, genus: int) -> int:
    """|H^g_{α,β}|: σ ∈ C_α, producto en C_β, m = ℓ(α)+ℓ(β)-2+2g, acción transitiva"""
    if alpha.size != n or beta.size != n:
        raise FactorisationError(f"partitions {alpha}, {beta} are not partitions of {n}")
    if genus < 0:
        return 0
    m = double_hurwitz_length(alpha, beta, genus)
    if m < 0:
        return 0
    connected = (1,) * n
    total = 0
    for (images, labels), count in _transitive_states(n, m, alpha).items():
        if labels == connected and Permutation(images).cycle_type() == beta:
            total += count
    return total


def double_hurwitz_b(beta: Partition, genus: int) -> int:
    """b_g(β) = |H^g_{(n),β}| / |C_β|, con división exacta"""
    n = beta.size
    count = enumerate_double_hurwitz(n, Partition((n,)), beta, genus)
    return exact_div(count, beta.class_size())


def star_count_for_class(shape: Partition, genus: int) -> int:
    return count_star(shape.representative(), genus)


def monotone_double_count_for_class(shape: Partition, genus: int) -> int:
    return count_monotone_double(shape.representative(), genus)
