# formulas.py - Fórmulas cerradas, recurrencias y serie exacta en seno hiperbólico

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from config import get_logger, get_setting
from errors import BoundsError, InexactDivisionError, exact_div
from factorisations import count_monotone_double, count_star, double_hurwitz_b
from perm_core import Partition, Permutation, partitions

logger = get_logger(__name__)


@dataclass(frozen=True)
class RationalSeries:
    """Serie de potencias truncada en t^order con coeficientes racionales exactos"""
    order: int
    coefficients: tuple[Fraction, ...]

    def __post_init__(self):
        coeffs = tuple(Fraction(c) for c in self.coefficients[:self.order + 1])
        coeffs += (Fraction(0),) * (self.order + 1 - len(coeffs))
        object.__setattr__(self, "coefficients", coeffs)

    @classmethod
    def one(cls, order: int) -> "RationalSeries":
        return cls(order, (1,))

    @classmethod
    def sinh_kernel(cls, order: int) -> "RationalSeries":
        """2 t⁻¹ sinh(t/2) = Σ t^{2k} / (4^k (2k+1)!)"""
        coeffs = [Fraction(0)] * (order + 1)
        for k in range(order // 2 + 1):
            coeffs[2 * k] = Fraction(1, 4 ** k * math.factorial(2 * k + 1))
        return cls(order, tuple(coeffs))

    def coefficient(self, k: int) -> Fraction:
        if k < 0 or k > self.order:
            return Fraction(0)
        return self.coefficients[k]

    def __add__(self, other: "RationalSeries") -> "RationalSeries":
        order = min(self.order, other.order)
        return RationalSeries(order, tuple(self.coefficient(k) + other.coefficient(k) for k in range(order + 1)))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return RationalSeries(self.order, tuple(c * other for c in self.coefficients))
        order = min(self.order, other.order)
        coeffs = [Fraction(0)] * (order + 1)
        for i in range(order + 1):
            a = self.coefficients[i]
            if not a:
                continue
            for j in range(order + 1 - i):
                coeffs[i + j] += a * other.coefficients[j]
        return RationalSeries(order, tuple(coeffs))

    def reciprocal(self) -> "RationalSeries":
        """Inversa truncada; exige término constante no nulo"""
        c0 = self.coefficients[0]
        if not c0:
            raise ZeroDivisionError("series without constant term has no reciprocal")
        inv = [Fraction(0)] * (self.order + 1)
        inv[0] = 1 / c0
        for k in range(1, self.order + 1):
            acc = sum(self.coefficients[j] * inv[k - j] for j in range(1, k + 1))
            inv[k] = -acc / c0
        return RationalSeries(self.order, tuple(inv))

    def __pow__(self, exponent: int) -> "RationalSeries":
        base = self if exponent >= 0 else self.reciprocal()
        result = RationalSeries.one(self.order)
        for _ in range(abs(exponent)):
            result = result * base
        return result

    def rescale(self, factor: int) -> "RationalSeries":
        """f(factor·t)"""
        return RationalSeries(self.order, tuple(c * factor ** k for k, c in enumerate(self.coefficients)))


# --- Sucesiones enteras ---

@lru_cache(maxsize=None)
def stirling2(m: int, k: int) -> int:
    """Particiones de un conjunto de m elementos en k bloques no vacíos"""
    if m == 0 and k == 0:
        return 1
    if m == 0 or k == 0:
        return 0
    return k * stirling2(m - 1, k) + stirling2(m - 1, k - 1)


@lru_cache(maxsize=None)
def central_factorial(m: int, k: int) -> int:
    """T(m, k) = T(m-1, k-1) + k² T(m-1, k), T(0, 0) = 1"""
    if m == 0 and k == 0:
        return 1
    if m == 0 or k == 0:
        return 0
    return central_factorial(m - 1, k - 1) + k * k * central_factorial(m - 1, k)


def _set_partitions(items):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for smaller in _set_partitions(rest):
        for i in range(len(smaller)):
            yield smaller[:i] + [[first] + smaller[i]] + smaller[i + 1:]
        yield [[first]] + smaller


def count_paired_partitions(m: int, k: int) -> int:
    """
    Particiones de {1, 1', …, m, m'} en k bloques donde, para cada bloque,
    el menor índice i presente aparece con sus dos copias i e i'.
    """
    items = [(i, copy) for i in range(1, m + 1) for copy in (0, 1)]
    count = 0
    for blocks in _set_partitions(items):
        if len(blocks) != k:
            continue
        if all({(min(i for i, _ in b), 0), (min(i for i, _ in b), 1)} <= set(b) for b in blocks):
            count += 1
    return count


def catalan(m: int) -> int:
    return exact_div(math.comb(2 * m, m), m + 1)


# --- Fórmula en seno hiperbólico para estrellas transitivas ---

def sinh_formula_count(shape: Partition, genus: int) -> int:
    """
    a_g(λ) = (2g+n+ℓ(λ)-2)!/n! · ∏λ_i · [t^{2g}] f(t)^{n-2} ∏ f(λ_i t),
    con f(t) = 2t⁻¹ sinh(t/2). Para n = 1 la potencia negativa usa la inversa de la serie.
    """
    n = shape.size
    order = 2 * genus
    kernel = RationalSeries.sinh_kernel(order)
    series = kernel ** (n - 2)
    for part in shape.parts:
        series = series * kernel.rescale(part)
    value = (
        Fraction(math.factorial(2 * genus + n + len(shape) - 2), math.factorial(n))
        * math.prod(shape.parts)
        * series.coefficient(order)
    )
    if value.denominator != 1:
        raise InexactDivisionError(value.numerator, value.denominator)
    return value.numerator


# --- Formas cerradas de las monótonas dobles ---

def monotone_double_full_cycle(n: int, genus: int) -> int:
    """md_g((n)) = S(2g+n, n-1) / C(n, 2)"""
    return exact_div(stirling2(2 * genus + n, n - 1), math.comb(n, 2))


def monotone_double_identity(n: int, genus: int) -> int:
    """md_g((1^n)) = (n-1)! Cat(n-1) T(g+n-1, n-1)"""
    return math.factorial(n - 1) * catalan(n - 1) * central_factorial(genus + n - 1, n - 1)


def identity_recurrence_holds(n: int, genus: int) -> bool:
    """n·md_g(1^n) = n(n-1)²·md_{g-1}(1^n) + 2(n-1)(2n-3)·md_g(1^{n-1})"""
    previous = monotone_double_identity(n, genus - 1) if genus > 0 else 0
    lhs = n * monotone_double_identity(n, genus)
    rhs = n * (n - 1) ** 2 * previous + 2 * (n - 1) * (2 * n - 3) * monotone_double_identity(n - 1, genus)
    return lhs == rhs


# --- Recurrencia de unión-corte para estrellas ---

@lru_cache(maxsize=None)
def star_recurrence(i: int, shape: Partition, genus: int) -> int:
    """
    a_g(i, α): estrellas transitivas de género g de cualquier ω donde el símbolo
    distinguido está en un ciclo de longitud i y el resto de ciclos tiene tipo α.
    """
    if i <= 0 or genus < 0:
        return 0
    if i == 1 and not shape.parts:
        return 1 if genus == 0 else 0
    total = star_recurrence(i - 1, shape, genus)
    for part in sorted(set(shape.parts)):
        total += shape.parts.count(part) * part * star_recurrence(i + part, shape.remove_part(part), genus)
    for t in range(1, i):
        total += star_recurrence(i - t, shape.union_part(t), genus - 1)
    return total


def recurrence_representative(i: int, shape: Partition):
    """ω con el símbolo n en un ciclo de longitud i y resto de tipo α"""
    n = i + shape.size
    cycles = []
    start = 1
    for part in shape.parts:
        cycles.append(tuple(range(start, start + part)))
        start += part
    cycles.append(tuple(range(start, n + 1)))
    return Permutation.from_cycles(cycles, n)


# --- Relación doble de Hurwitz ---

def double_hurwitz_relation_sides(shape: Partition, genus: int, unsafe: bool = False) -> tuple[int, int]:
    """
    b_g(α ∪ 1^{n-1}) en S_{2n-1} frente a n!(2n-1)^{n+ℓ(α)+2g-3} a_g(α).
    Rechaza n por encima de RELATION_N_MAX salvo unsafe.
    """
    n = shape.size
    limit = get_setting('RELATION_N_MAX')
    if n > limit and not unsafe:
        raise BoundsError("relation n", limit, n)
    big = 2 * n - 1
    target = Partition(shape.parts + (1,) * (n - 1))
    lhs = double_hurwitz_b(target, genus)
    exponent = n + len(shape) + 2 * genus - 3
    # exponente negativo solo con n = 1, donde la base vale 1
    power = big ** exponent if exponent >= 0 else 1
    rhs = math.factorial(n) * power * count_star(shape.representative(), genus)
    logger.info("relation %s g=%d: %d vs %d", shape, genus, lhs, rhs)
    return lhs, rhs


def double_hurwitz_relation_holds(shape: Partition, genus: int, unsafe: bool = False) -> bool:
    lhs, rhs = double_hurwitz_relation_sides(shape, genus, unsafe)
    return lhs == rhs


# --- Tabla cruzada ---

def formula_table(n_max: int, g_max: int) -> list[dict]:
    """Filas (λ, g, estrella, monótona doble, fórmula, forma cerrada, coinciden)"""
    rows = []
    for n, genus in itertools.product(range(1, n_max + 1), range(g_max + 1)):
        for shape in partitions(n):
            star = count_star(shape.representative(), genus)
            md = count_monotone_double(shape.representative(), genus)
            formula = sinh_formula_count(shape, genus)
            closed = None
            if shape.parts == (n,) and n >= 2:
                closed = monotone_double_full_cycle(n, genus)
            elif shape.parts == (1,) * n:
                closed = monotone_double_identity(n, genus)
            values = [star, md, formula] + ([closed] if closed is not None else [])
            rows.append({
                'partition': str(shape),
                'genus': genus,
                'count_star': star,
                'md_count': md,
                'sinh_formula': formula,
                'closed_form': closed,
                'all_agree': len(set(values)) == 1,
            })
    return rows
