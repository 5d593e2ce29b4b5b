# group_algebra.py - Álgebra de grupo de S_n, elementos de Jucys-Murphy y operador de transitividad

"""
Aritmética exacta y dispersa en el álgebra de grupo de S_n.

Los elementos guardan sus términos como {imágenes: coeficiente entero};
nunca se almacenan coeficientes nulos. La multiplicación sigue la
convención de izquierda a derecha de perm_core.

Las funciones simétricas se evalúan en (J_1, …, J_n) con J_1 = 0, así que
solo intervienen las variables 2..n. El operador de transitividad T_n se
define sobre la expansión canónica en monomios J_2^{a_2}⋯J_n^{a_n}
(orden ascendente) y conserva únicamente las tuplas de transposiciones
que actúan transitivamente sobre [n].
"""

import itertools
import re
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Mapping

from sympy import Matrix

from config import get_logger
from errors import DegreeMismatchError, ExpressionSyntaxError, FactorisationError, NotCentralError
from perm_core import (
    Partition,
    Permutation,
    Transposition,
    all_permutations,
    merge_orbit_labels,
    orbits,
    partitions,
    product,
    right_multiply,
)

logger = get_logger(__name__)


def _compose_images(p, q):
    return tuple(q[i - 1] for i in p)


@dataclass(frozen=True)
class AlgebraElement:
    n: int
    terms: Mapping[tuple[int, ...], int] = field(default_factory=dict)

    @classmethod
    def zero(cls, n: int) -> "AlgebraElement":
        return cls(n, {})

    @classmethod
    def identity(cls, n: int) -> "AlgebraElement":
        return cls(n, {tuple(range(1, n + 1)): 1})

    @classmethod
    def from_permutation(cls, p: Permutation, coefficient: int = 1) -> "AlgebraElement":
        return cls(p.n, {p.images: coefficient} if coefficient else {})

    @classmethod
    def from_counts(cls, n: int, counts: dict) -> "AlgebraElement":
        return cls(n, {k: v for k, v in counts.items() if v})

    def _check(self, other):
        if self.n != other.n:
            raise DegreeMismatchError(self.n, other.n)

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._check(other)
        result = dict(self.terms)
        for key, value in other.terms.items():
            result[key] = result.get(key, 0) + value
        return AlgebraElement.from_counts(self.n, result)

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return self + other.scale(-1)

    def __mul__(self, other: "AlgebraElement") -> "AlgebraElement":
        return multiply(self, other)

    def __pow__(self, exponent: int) -> "AlgebraElement":
        result = AlgebraElement.identity(self.n)
        for _ in range(exponent):
            result = result * self
        return result

    def scale(self, factor: int) -> "AlgebraElement":
        return AlgebraElement.from_counts(self.n, {k: v * factor for k, v in self.terms.items()})

    def is_zero(self) -> bool:
        return not self.terms

    def items(self):
        """(Permutation, coeficiente) en orden de imágenes"""
        for key in sorted(self.terms):
            yield Permutation(key), self.terms[key]

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*{p}" for p, c in self.items())


# --- Operaciones básicas ---

def multiply(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    """Producto de convolución con composición de izquierda a derecha"""
    x._check(y)
    result: dict = {}
    for p, c in x.terms.items():
        for q, d in y.terms.items():
            key = _compose_images(p, q)
            result[key] = result.get(key, 0) + c * d
    return AlgebraElement.from_counts(x.n, result)


def coefficient_of(omega: Permutation, x: AlgebraElement) -> int:
    if omega.n != x.n:
        raise DegreeMismatchError(omega.n, x.n)
    return x.terms.get(omega.images, 0)


def jm_element(n: int, k: int) -> AlgebraElement:
    """J_k = (1 k) + (2 k) + ⋯ + (k-1 k); J_1 = 0"""
    if not 1 <= k <= n:
        raise FactorisationError(f"Jucys-Murphy index {k} outside [1, {n}]")
    terms = {Transposition(j, k).as_permutation(n).images: 1 for j in range(1, k)}
    return AlgebraElement(n, terms)


def times_jm(x: AlgebraElement, k: int) -> AlgebraElement:
    """x·J_k, multiplicando a la derecha por cada (j k)"""
    result: dict = {}
    for images, c in x.terms.items():
        for j in range(1, k):
            key = tuple(right_multiply(images, j, k))
            result[key] = result.get(key, 0) + c
    return AlgebraElement.from_counts(x.n, result)


# --- Sumas de clase y centro ---

@lru_cache(maxsize=None)
def _class_index(n: int) -> dict:
    """{tipo de ciclo: imágenes de los miembros de la clase}, en orden de imágenes"""
    members: dict = {}
    for p in all_permutations(n):
        members.setdefault(p.cycle_type(), []).append(p.images)
    return members


def class_sum(shape: Partition) -> AlgebraElement:
    """K_λ: suma de todas las permutaciones de tipo λ"""
    n = shape.size
    return AlgebraElement(n, {images: 1 for images in _class_index(n).get(shape, [])})


def noncentral_witness(x: AlgebraElement):
    """Par (ω, γ) conjugado con coeficientes distintos, o None si x es central"""
    for shape in partitions(x.n):
        members = _class_index(x.n)[shape]
        first = members[0]
        base = x.terms.get(first, 0)
        for other in members[1:]:
            if x.terms.get(other, 0) != base:
                return Permutation(first), Permutation(other)
    return None


def is_central(x: AlgebraElement) -> bool:
    return noncentral_witness(x) is None


@dataclass(frozen=True)
class ClassSumDecomposition:
    n: int
    coefficients: Mapping[Partition, int]

    def ordered(self) -> list[tuple[Partition, int]]:
        """Más partes primero; a igual número de partes, partes mayores primero"""
        return sorted(self.coefficients.items(), key=lambda item: item[0].sort_key())

    def render(self) -> str:
        if not self.coefficients:
            return "0"
        return " + ".join(f"{c}*K[{shape.label()}]" for shape, c in self.ordered())

    def to_dict(self) -> dict:
        return {shape.label(): c for shape, c in self.ordered()}

    def reconstitute(self) -> AlgebraElement:
        total = AlgebraElement.zero(self.n)
        for shape, c in self.coefficients.items():
            total = total + class_sum(shape).scale(c)
        return total


def decompose(x: AlgebraElement) -> ClassSumDecomposition:
    """Coordenadas en la base {K_λ}; NotCentralError si x no es central"""
    witness = noncentral_witness(x)
    if witness is not None:
        raise NotCentralError(witness)
    coefficients = {}
    for shape in partitions(x.n):
        c = x.terms.get(_class_index(x.n)[shape][0], 0)
        if c:
            coefficients[shape] = c
    return ClassSumDecomposition(x.n, coefficients)


# --- Expresiones simétricas ---

BASES = ("e", "h", "p")


@dataclass(frozen=True)
class Atom:
    """Factor básico: e_λ, h_λ, p_λ o la variable x_k (J_k)"""
    kind: str
    shape: Partition | None = None
    slot: int = 0


@dataclass(frozen=True)
class SymmetricFunctionExpr:
    """Combinación entera de productos de átomos"""
    terms: tuple[tuple[int, tuple[Atom, ...]], ...] = ()

    @classmethod
    def basis(cls, kind: str, shape: Partition) -> "SymmetricFunctionExpr":
        if kind not in BASES:
            raise FactorisationError(f"unknown basis '{kind}'")
        return cls(((1, (Atom(kind, shape),)),))

    @classmethod
    def variable(cls, slot: int) -> "SymmetricFunctionExpr":
        return cls(((1, (Atom("x", None, slot),)),))

    @classmethod
    def constant(cls, value: int) -> "SymmetricFunctionExpr":
        return cls(((value, ()),)) if value else cls(())

    @classmethod
    def monomial(cls, exponents: dict) -> "SymmetricFunctionExpr":
        """Monomio crudo {slot: exponente}"""
        atoms = tuple(Atom("x", None, slot) for slot in sorted(exponents) for _ in range(exponents[slot]))
        return cls(((1, atoms),))

    def __add__(self, other):
        return SymmetricFunctionExpr(self.terms + other.terms)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, factor: int):
        return SymmetricFunctionExpr(tuple((c * factor, atoms) for c, atoms in self.terms if c * factor))

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return SymmetricFunctionExpr(tuple(
            (c * d, a + b) for c, a in self.terms for d, b in other.terms if c * d
        ))

    def __pow__(self, exponent: int):
        result = SymmetricFunctionExpr.constant(1)
        for _ in range(exponent):
            result = result * self
        return result


def e(*parts):
    return SymmetricFunctionExpr.basis("e", Partition(parts))


def h(*parts):
    return SymmetricFunctionExpr.basis("h", Partition(parts))


def p(*parts):
    return SymmetricFunctionExpr.basis("p", Partition(parts))


def _poly_mul(a: dict, b: dict) -> dict:
    result: dict = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            key = tuple(x + y for x, y in zip(ea, eb))
            result[key] = result.get(key, 0) + ca * cb
    return {k: v for k, v in result.items() if v}


@lru_cache(maxsize=None)
def _single_expansion(kind: str, k: int, slots: int) -> dict:
    """e_k, h_k o p_k sobre `slots` variables, por generación combinatoria directa"""
    unit = (0,) * slots
    if k == 0:
        return {unit: 1}
    result: dict = {}
    if kind == "e":
        for chosen in itertools.combinations(range(slots), k):
            key = tuple(1 if i in chosen else 0 for i in range(slots))
            result[key] = 1
    elif kind == "h":
        for chosen in itertools.combinations_with_replacement(range(slots), k):
            key = tuple(chosen.count(i) for i in range(slots))
            result[key] = 1
    else:
        for i in range(slots):
            result[tuple(k if j == i else 0 for j in range(slots))] = 1
    return result


def _atom_expansion(atom: Atom, n: int) -> dict:
    slots = n - 1
    if atom.kind == "x":
        if not 1 <= atom.slot <= n:
            raise FactorisationError(f"J[{atom.slot}] does not exist in degree {n}")
        if atom.slot == 1:
            return {}
        return {tuple(1 if i == atom.slot - 2 else 0 for i in range(slots)): 1}
    result = {(0,) * slots: 1}
    for part in atom.shape.parts:
        result = _poly_mul(result, _single_expansion(atom.kind, part, slots))
    return result


def expand_monomials(f: SymmetricFunctionExpr, n: int) -> dict:
    """{(a_2, …, a_n): coeficiente} para f(x_2, …, x_n)"""
    total: dict = {}
    for c, atoms in f.terms:
        poly = {(0,) * (n - 1): c}
        for atom in atoms:
            poly = _poly_mul(poly, _atom_expansion(atom, n))
        for key, value in poly.items():
            total[key] = total.get(key, 0) + value
    return {k: v for k, v in total.items() if v}


@lru_cache(maxsize=None)
def _monomial_value(n: int, exponents: tuple[int, ...]) -> AlgebraElement:
    value = AlgebraElement.identity(n)
    for offset, power in enumerate(exponents):
        for _ in range(power):
            value = times_jm(value, offset + 2)
    return value


def evaluate(f: SymmetricFunctionExpr, n: int) -> AlgebraElement:
    """f(Ξ_n) = f(J_1, …, J_n), con J_1 = 0"""
    total: dict = {}
    for exponents, c in expand_monomials(f, n).items():
        for key, value in _monomial_value(n, exponents).terms.items():
            total[key] = total.get(key, 0) + c * value
    return AlgebraElement.from_counts(n, total)


@lru_cache(maxsize=None)
def _transitive_monomial(n: int, exponents: tuple[int, ...]) -> AlgebraElement:
    """T_n(J_2^{a_2}⋯J_n^{a_n}) por programación dinámica sobre (producto, etiquetas de órbita)"""
    states = {(tuple(range(1, n + 1)), tuple(range(1, n + 1))): 1}
    for offset, power in enumerate(exponents):
        k = offset + 2
        for _ in range(power):
            nxt: dict = {}
            for (images, labels), count in states.items():
                for j in range(1, k):
                    key = (tuple(right_multiply(images, j, k)), merge_orbit_labels(labels, j, k))
                    nxt[key] = nxt.get(key, 0) + count
            states = nxt
    connected = (1,) * n
    result: dict = {}
    for (images, labels), count in states.items():
        if labels == connected:
            result[images] = result.get(images, 0) + count
    return AlgebraElement.from_counts(n, result)


def transitive_evaluate(f: SymmetricFunctionExpr, n: int) -> AlgebraElement:
    """T_n(f(Ξ_n)), extendido linealmente sobre la expansión en monomios"""
    total: dict = {}
    for exponents, c in expand_monomials(f, n).items():
        for key, value in _transitive_monomial(n, exponents).terms.items():
            total[key] = total.get(key, 0) + c * value
    return AlgebraElement.from_counts(n, total)


def transitive_power(n: int, t: int) -> AlgebraElement:
    """T_n(J_n^t)"""
    return transitive_evaluate(SymmetricFunctionExpr.monomial({n: t}), n)


def expand_tuples(exponents: tuple[int, ...], n: int) -> AlgebraElement:
    """T_n de un monomio recorriendo literalmente todas las tuplas de transposiciones"""
    choices = []
    for offset, power in enumerate(exponents):
        k = offset + 2
        choices.extend([[Transposition(j, k) for j in range(1, k)]] * power)
    result: dict = {}
    for combo in itertools.product(*choices):
        if orbits(combo, n).is_transitive:
            key = product(combo, n).images
            result[key] = result.get(key, 0) + 1
    return AlgebraElement.from_counts(n, result)


def verify_transitive_power_expression(n: int, k: int) -> dict:
    """Compara T_n(J_n^{n-1+k}) con J_2⋯J_n·h_k(Ξ_n), y la forma T_n(p_{n-1+k}(Ξ_n))"""
    t = n - 1 + k
    lhs = transitive_power(n, t)
    jm_product = SymmetricFunctionExpr.monomial({slot: 1 for slot in range(2, n + 1)})
    rhs = evaluate(jm_product * h(k) if k else jm_product, n)
    p_form = transitive_evaluate(p(t), n)
    return {
        'n': n,
        'k': k,
        'power_form': lhs == rhs,
        'p_basis_form': p_form == rhs,
        'pass': lhs == rhs and p_form == rhs,
    }


# --- Cambio a la base elemental (identidades de Newton) ---

def _e_mul(a: dict, b: dict) -> dict:
    result: dict = {}
    for pa, ca in a.items():
        for pb, cb in b.items():
            key = Partition(pa.parts + pb.parts)
            result[key] = result.get(key, 0) + ca * cb
    return {k: v for k, v in result.items() if v}


def _e_add(target: dict, source: dict, factor: int):
    for key, value in source.items():
        target[key] = target.get(key, 0) + factor * value


@lru_cache(maxsize=None)
def _single_in_e(kind: str, k: int) -> dict:
    if k == 0:
        return {Partition(()): 1}
    result: dict = {}
    if kind == "e":
        return {Partition((k,)): 1}
    for i in range(1, k + 1):
        sign = 1 if i % 2 else -1
        if kind == "p" and i == k:
            _e_add(result, {Partition((k,)): k}, sign)
            continue
        _e_add(result, _e_mul({Partition((i,)): 1}, _single_in_e(kind, k - i)), sign)
    return {key: v for key, v in result.items() if v}


def to_elementary_basis(kind: str, shape: Partition) -> dict:
    """Coeficientes enteros de h_λ o p_λ en la base e_μ"""
    if kind not in BASES:
        raise FactorisationError(f"unknown basis '{kind}'")
    result = {Partition(()): 1}
    for part in shape.parts:
        result = _e_mul(result, _single_in_e(kind, part))
    return result


def elementary_form(kind: str, shape: Partition) -> SymmetricFunctionExpr:
    expr = SymmetricFunctionExpr(())
    for mu, c in sorted(to_elementary_basis(kind, shape).items(), key=lambda item: item[0].parts):
        expr = expr + SymmetricFunctionExpr.basis("e", mu).scale(c)
    return expr


def basis_agreement(n: int, max_degree: int) -> list[dict]:
    """Para h_λ y p_λ compara T_n de la expresión directa con T_n de su forma en la base e"""
    rows = []
    for degree in range(1, max_degree + 1):
        for shape in partitions(degree):
            for kind in ("h", "p"):
                direct = transitive_evaluate(SymmetricFunctionExpr.basis(kind, shape), n)
                via_e = transitive_evaluate(elementary_form(kind, shape), n)
                rows.append({'basis': kind, 'shape': str(shape), 'agree': direct == via_e})
    return rows


def _coordinates(x: AlgebraElement) -> list[int]:
    decomposition = decompose(x)
    return [decomposition.coefficients.get(shape, 0) for shape in partitions(x.n)]


def exact_rank(rows) -> int:
    """Rango exacto sobre los racionales de una lista de filas enteras"""
    rows = [list(row) for row in rows]
    if not rows or not rows[0]:
        return 0
    return int(Matrix(rows).rank())


def transitive_span_dimension(n: int, max_degree: int) -> dict:
    """Dimensión del espacio generado por T_n(e_λ) y de la subálgebra que generan"""
    elements = []
    for degree in range(0, max_degree + 1):
        for shape in partitions(degree):
            if shape.parts and shape.parts[0] > n - 1:
                continue
            value = transitive_evaluate(SymmetricFunctionExpr.basis("e", shape), n)
            if not value.is_zero():
                elements.append(value)

    def _rank(items):
        return exact_rank(_coordinates(x) for x in items)

    linear = _rank(elements)
    closure = list(elements)
    rank = linear
    while True:
        grown = closure + [x * y for x, y in itertools.combinations_with_replacement(closure, 2)]
        new_rank = _rank(grown)
        if new_rank == rank:
            break
        # se conserva una base para que la siguiente ronda no crezca sin control
        closure = _independent_subset(grown)
        rank = new_rank
    return {
        'n': n,
        'max_degree': max_degree,
        'generators': len(elements),
        'linear_span': linear,
        'algebra_closure': rank,
        'centre_dimension': len(partitions(n)),
    }


def _independent_subset(items):
    basis = []
    rank = 0
    for x in items:
        candidate = basis + [x]
        if exact_rank(_coordinates(y) for y in candidate) > rank:
            basis = candidate
            rank += 1
    return basis


# --- Parser de expresiones ---

_TOKEN_RE = re.compile(r"(?:(\d+)|(J|e|h|p|T)|(\[[^\]]*\])|(\^|\*|\+|-|\(|\)))")


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        match = _TOKEN_RE.match(text, pos)
        if not match:
            raise ExpressionSyntaxError(f"unexpected character '{text[pos]}'", pos)
        tokens.append((match.group(0), pos))
        pos = match.end()
    tokens.append(("", len(text)))
    return tokens


class _Parser:
    """
    expr   := term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := atom ('^' INT)?
    atom   := INT | J[k] | e[λ] | h[λ] | p[λ] | T(expr) | (expr)
    T(...) solo puede aparecer como sumando, eventualmente con coeficiente entero.
    """

    def __init__(self, text):
        self.tokens = _tokenize(text)
        self.index = 0

    def peek(self):
        return self.tokens[self.index]

    def take(self, expected=None):
        token, pos = self.tokens[self.index]
        if expected is not None and token != expected:
            raise ExpressionSyntaxError(f"expected '{expected}' but found '{token or 'end'}'", pos)
        self.index += 1
        return token, pos

    def parse(self):
        result = self.expr(allow_t=True)
        token, pos = self.peek()
        if token:
            raise ExpressionSyntaxError(f"unexpected '{token}'", pos)
        return result

    def expr(self, allow_t):
        # cada sumando: (es_transitivo, expresión)
        parts = self.term(allow_t)
        while self.peek()[0] in ("+", "-"):
            sign, _ = self.take()
            nxt = self.term(allow_t)
            if sign == "-":
                nxt = [(kind, f.scale(-1)) for kind, f in nxt]
            parts = parts + nxt
        return parts

    def term(self, allow_t):
        parts = self.factor(allow_t)
        while self.peek()[0] == "*":
            _, pos = self.take()
            right = self.factor(allow_t)
            parts = self._product(parts, right, pos)
        return parts

    def _product(self, left, right, pos):
        kinds = {kind for kind, _ in left} | {kind for kind, _ in right}
        left_plain = all(kind == "plain" for kind, _ in left)
        right_plain = all(kind == "plain" for kind, _ in right)
        if "transitive" in kinds and not (self._is_constant(left) or self._is_constant(right)):
            raise ExpressionSyntaxError("T(...) can only be scaled by an integer", pos)
        result = []
        for kl, fl in left:
            for kr, fr in right:
                kind = "transitive" if "transitive" in (kl, kr) else "plain"
                result.append((kind, fl * fr))
        if left_plain and right_plain:
            return [("plain", _sum(f for _, f in result))]
        return result

    @staticmethod
    def _is_constant(parts):
        return all(kind == "plain" and all(not atoms for _, atoms in f.terms) for kind, f in parts)

    def factor(self, allow_t):
        base = self.atom(allow_t)
        if self.peek()[0] == "^":
            _, pos = self.take()
            token, pos = self.take()
            if not token.isdigit():
                raise ExpressionSyntaxError("exponent must be a non-negative integer", pos)
            if any(kind == "transitive" for kind, _ in base):
                raise ExpressionSyntaxError("T(...) cannot be raised to a power", pos)
            base = [("plain", _sum(f for _, f in base) ** int(token))]
        return base

    def atom(self, allow_t):
        token, pos = self.take()
        if token.isdigit():
            return [("plain", SymmetricFunctionExpr.constant(int(token)))]
        if token == "J":
            bracket, bpos = self.take()
            try:
                slot = int(bracket.strip("[]"))
            except ValueError:
                raise ExpressionSyntaxError("J needs an integer index", bpos)
            return [("plain", SymmetricFunctionExpr.variable(slot))]
        if token in BASES:
            bracket, bpos = self.take()
            if not bracket.startswith("["):
                raise ExpressionSyntaxError(f"{token} needs a partition in brackets", bpos)
            try:
                shape = Partition.parse(bracket)
            except FactorisationError:
                raise ExpressionSyntaxError("malformed partition", bpos)
            return [("plain", SymmetricFunctionExpr.basis(token, shape))]
        if token == "T":
            if not allow_t:
                raise ExpressionSyntaxError("nested T(...) is not allowed", pos)
            self.take("(")
            inner = self.expr(allow_t=False)
            self.take(")")
            return [("transitive", _sum(f for _, f in inner))]
        if token == "(":
            inner = self.expr(allow_t)
            self.take(")")
            return inner
        raise ExpressionSyntaxError(f"unexpected '{token or 'end'}'", pos)


def _sum(exprs):
    total = SymmetricFunctionExpr(())
    for f in exprs:
        total = total + f
    return total


def parse_expression(text: str) -> list[tuple[str, SymmetricFunctionExpr]]:
    """Sumandos (tipo, expresión) con tipo 'plain' o 'transitive'"""
    return _Parser(text).parse()


def evaluate_expression(text: str, n: int) -> AlgebraElement:
    total = AlgebraElement.zero(n)
    for kind, f in parse_expression(text):
        value = transitive_evaluate(f, n) if kind == "transitive" else evaluate(f, n)
        total = total + value
    return total
