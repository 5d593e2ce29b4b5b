# perm_core.py - Permutaciones, particiones, órdenes totales y órbitas

"""
Sustrato de todo el toolkit.

Convención global: la multiplicación es de izquierda a derecha,
compose(p, q) aplica primero p y después q.
"""

import itertools
import math
import re
from dataclasses import dataclass
from enum import Enum
from functools import cached_property, lru_cache
from typing import Iterable, Sequence

from errors import DegreeMismatchError, FactorisationError

_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def _check_degree(p, q):
    if p.n != q.n:
        raise DegreeMismatchError(p.n, q.n)


@dataclass(frozen=True, order=True)
class Permutation:
    """Biyección de [n]; images[i-1] es la imagen de i"""
    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise FactorisationError(f"not a permutation of [n]: {self.images}")

    @property
    def n(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], n: int) -> "Permutation":
        images = list(range(1, n + 1))
        seen = set()
        for cycle in cycles:
            for k, symbol in enumerate(cycle):
                if not 1 <= symbol <= n or symbol in seen:
                    raise FactorisationError(f"bad cycle {tuple(cycle)} for degree {n}")
                seen.add(symbol)
                images[symbol - 1] = cycle[(k + 1) % len(cycle)]
        return cls(tuple(images))

    @classmethod
    def parse(cls, text: str, n: int | None = None) -> "Permutation":
        """Lee notación de ciclos, por ejemplo '(1 2)(3)' o '(1,2)'"""
        text = text.strip()
        if text in ("", "e", "id", "()"):
            if n is None:
                raise FactorisationError("identity needs an explicit degree")
            return cls.identity(n)
        leftover = _CYCLE_RE.sub("", text).strip()
        if leftover:
            raise FactorisationError(f"cannot parse permutation '{text}'")
        cycles = []
        for body in _CYCLE_RE.findall(text):
            symbols = [int(tok) for tok in re.split(r"[\s,]+", body.strip()) if tok]
            if symbols:
                cycles.append(symbols)
        largest = max((s for c in cycles for s in c), default=0)
        if n is None:
            n = largest
        elif largest > n:
            raise FactorisationError(f"symbol {largest} exceeds degree {n}")
        return cls.from_cycles(cycles, n)

    def __call__(self, symbol: int) -> int:
        return self.images[symbol - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, image in enumerate(self.images, start=1):
            inv[image - 1] = i
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(image == i for i, image in enumerate(self.images, start=1))

    def cycles(self) -> list[tuple[int, ...]]:
        """Ciclos canónicos: cada uno empieza en su menor símbolo, ordenados por ese símbolo"""
        seen = set()
        result = []
        for start in range(1, self.n + 1):
            if start in seen:
                continue
            cycle = [start]
            seen.add(start)
            nxt = self(start)
            while nxt != start:
                cycle.append(nxt)
                seen.add(nxt)
                nxt = self(nxt)
            result.append(tuple(cycle))
        return result

    def num_cycles(self) -> int:
        return len(self.cycles())

    def cycle_type(self) -> "Partition":
        return Partition(tuple(sorted((len(c) for c in self.cycles()), reverse=True)))

    def reflection_length(self) -> int:
        return self.n - self.num_cycles()

    def fixed_points(self) -> list[int]:
        return [i for i in range(1, self.n + 1) if self(i) == i]

    def __str__(self) -> str:
        return "".join("(" + " ".join(str(s) for s in c) + ")" for c in self.cycles())


@dataclass(frozen=True, order=True)
class Transposition:
    """Par no ordenado {a, b}; se guarda con a < b"""
    a: int
    b: int

    def __post_init__(self):
        if self.a == self.b:
            raise FactorisationError(f"transposition needs two distinct symbols, got {self.a}")
        if self.a > self.b:
            low, high = self.b, self.a
            object.__setattr__(self, "a", low)
            object.__setattr__(self, "b", high)

    @classmethod
    def parse(cls, text: str) -> "Transposition":
        cycles = [c for c in Permutation.parse(text).cycles() if len(c) > 1]
        if len(cycles) != 1 or len(cycles[0]) != 2:
            raise FactorisationError(f"'{text}' is not a transposition")
        return cls(*cycles[0])

    def symbols(self) -> tuple[int, int]:
        return (self.a, self.b)

    def contains(self, symbol: int) -> bool:
        return symbol == self.a or symbol == self.b

    def other(self, symbol: int) -> int:
        if symbol == self.a:
            return self.b
        if symbol == self.b:
            return self.a
        raise FactorisationError(f"{symbol} is not in {self}")

    def relabel(self, by: Permutation) -> "Transposition":
        """Imagen de la transposición al renombrar cada símbolo s por by(s)"""
        return Transposition(by(self.a), by(self.b))

    def as_permutation(self, n: int) -> Permutation:
        if self.b > n:
            raise FactorisationError(f"{self} does not live in degree {n}")
        return Permutation.from_cycles([(self.a, self.b)], n)

    def display(self, order: "TotalOrder | None" = None) -> str:
        if order is None:
            return f"({self.a} {self.b})"
        low, high = order.orient(self)
        return f"({low} {high})"

    def __str__(self) -> str:
        return self.display()


@dataclass(frozen=True)
class Partition:
    """Partición débilmente decreciente; la vacía es ε"""
    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(self.parts)
        if any(p <= 0 for p in parts):
            raise FactorisationError(f"partition parts must be positive: {parts}")
        object.__setattr__(self, "parts", tuple(sorted(parts, reverse=True)))

    @classmethod
    def parse(cls, text: str) -> "Partition":
        body = text.strip()
        if body.startswith("[") and body.endswith("]"):
            body = body[1:-1]
        body = body.strip()
        if not body:
            return cls(())
        try:
            return cls(tuple(int(tok) for tok in re.split(r"[\s,]+", body) if tok))
        except ValueError as exc:
            raise FactorisationError(f"cannot parse partition '{text}'") from exc

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def union_part(self, part: int) -> "Partition":
        """λ ∪ i: añade una parte"""
        return Partition(self.parts + (part,))

    def remove_part(self, part: int) -> "Partition":
        parts = list(self.parts)
        parts.remove(part)
        return Partition(tuple(parts))

    def multiplicities(self) -> dict[int, int]:
        counts: dict[int, int] = {}
        for part in self.parts:
            counts[part] = counts.get(part, 0) + 1
        return counts

    def class_size(self) -> int:
        """Tamaño de la clase de conjugación C_λ en S_n"""
        z = 1
        for part, mult in self.multiplicities().items():
            z *= part ** mult * math.factorial(mult)
        return math.factorial(self.size) // z

    def representative(self) -> Permutation:
        """Permutación con ciclos consecutivos (1 … λ_1)(λ_1+1 …)…"""
        cycles = []
        start = 1
        for part in self.parts:
            cycles.append(tuple(range(start, start + part)))
            start += part
        return Permutation.from_cycles(cycles, self.size)

    def sort_key(self):
        return (-len(self.parts), tuple(-p for p in self.parts))

    def label(self) -> str:
        return ",".join(str(p) for p in self.parts)

    def __str__(self) -> str:
        return "[" + self.label() + "]"


@lru_cache(maxsize=None)
def partitions(n: int) -> tuple[Partition, ...]:
    """Todas las particiones de n, en orden lexicográfico decreciente"""
    def _gen(remaining, largest):
        if remaining == 0:
            yield ()
            return
        for part in range(min(remaining, largest), 0, -1):
            for rest in _gen(remaining - part, part):
                yield (part,) + rest
    return tuple(Partition(p) for p in _gen(n, n))


@dataclass(frozen=True)
class TotalOrder:
    """Orden i_1 ≺ i_2 ≺ ⋯ ≺ i_n sobre [n]"""
    sequence: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.sequence) != list(range(1, len(self.sequence) + 1)):
            raise FactorisationError(f"order is not an arrangement of [n]: {self.sequence}")

    @property
    def n(self) -> int:
        return len(self.sequence)

    @classmethod
    def natural(cls, n: int) -> "TotalOrder":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def parse(cls, text: str) -> "TotalOrder":
        try:
            return cls(tuple(int(tok) for tok in text.split("<")))
        except ValueError as exc:
            raise FactorisationError(f"cannot parse order '{text}'") from exc

    def rank(self, symbol: int) -> int:
        return self._ranks[symbol - 1]

    @cached_property
    def _ranks(self) -> tuple[int, ...]:
        ranks = [0] * self.n
        for position, symbol in enumerate(self.sequence):
            ranks[symbol - 1] = position
        return tuple(ranks)

    def less(self, x: int, y: int) -> bool:
        return self.rank(x) < self.rank(y)

    def orient(self, t: Transposition) -> tuple[int, int]:
        """(menor, mayor) según el orden"""
        if self.less(t.a, t.b):
            return (t.a, t.b)
        return (t.b, t.a)

    def larger(self, t: Transposition) -> int:
        return self.orient(t)[1]

    def is_natural(self) -> bool:
        return self.sequence == tuple(range(1, self.n + 1))

    def swap_adjacent(self, j: int) -> "TotalOrder":
        """≺_j: intercambia las posiciones j y j+1 (base 1)"""
        if not 1 <= j < self.n:
            raise FactorisationError(f"adjacent index {j} out of range for degree {self.n}")
        seq = list(self.sequence)
        seq[j - 1], seq[j] = seq[j], seq[j - 1]
        return TotalOrder(tuple(seq))

    def __str__(self) -> str:
        return "<".join(str(s) for s in self.sequence)


@dataclass(frozen=True)
class OrbitPartition:
    """Partición de [n] en órbitas, bloques ordenados por su menor símbolo"""
    n: int
    blocks: tuple[frozenset, ...]

    @property
    def is_transitive(self) -> bool:
        return len(self.blocks) == 1

    def labels(self) -> tuple[int, ...]:
        """Para cada símbolo, el menor elemento de su bloque"""
        label = [0] * self.n
        for block in self.blocks:
            low = min(block)
            for symbol in block:
                label[symbol - 1] = low
        return tuple(label)

    def __str__(self) -> str:
        return "{" + ", ".join("{" + ",".join(str(s) for s in sorted(b)) + "}" for b in self.blocks) + "}"


class UnionFind:
    def __init__(self, items):
        self.parent = {x: x for x in items}
        self.rank = {x: 0 for x in items}

    def find(self, x):
        y = self.parent[x]
        if self.parent[y] != y:
            y = self.parent[x] = self.find(y)
        return y

    def union(self, x, y):
        x, y = self.find(x), self.find(y)
        if x == y:
            return
        if self.rank[x] < self.rank[y]:
            x, y = y, x
        elif self.rank[x] == self.rank[y]:
            self.rank[x] += 1
        self.parent[y] = x

    def groups(self):
        result: dict = {}
        for x in self.parent:
            result.setdefault(self.find(x), set()).add(x)
        return list(result.values())


class JoinCut(Enum):
    JOIN = "join"
    CUT = "cut"


# --- Operaciones ---

def compose(p: Permutation, q: Permutation) -> Permutation:
    """Aplica p y luego q"""
    _check_degree(p, q)
    return Permutation(tuple(q.images[image - 1] for image in p.images))


def conjugate(p: Permutation, by: Permutation) -> Permutation:
    """Renombra cada símbolo s de los ciclos de p por by(s)"""
    _check_degree(p, by)
    images = [0] * p.n
    for s in range(1, p.n + 1):
        images[by(s) - 1] = by(p(s))
    return Permutation(tuple(images))


def product(factors: Iterable, n: int) -> Permutation:
    """Producto de izquierda a derecha de permutaciones o transposiciones"""
    images = list(range(1, n + 1))
    for factor in factors:
        if isinstance(factor, Transposition):
            images = right_multiply(images, factor.a, factor.b)
        else:
            if factor.n != n:
                raise DegreeMismatchError(n, factor.n)
            images = [factor.images[image - 1] for image in images]
    return Permutation(tuple(images))


def right_multiply(images, a: int, b: int):
    """Imágenes de P∘(a b): se intercambian los valores a y b"""
    result = list(images)
    ia = result.index(a)
    ib = result.index(b)
    result[ia], result[ib] = b, a
    return result


def orbits(generators: Sequence, n: int | None = None) -> OrbitPartition:
    """Órbitas de [n] bajo el grupo generado (permutaciones o transposiciones)"""
    if n is None:
        degrees = {g.n for g in generators if isinstance(g, Permutation)}
        if len(degrees) != 1:
            raise FactorisationError("orbits needs an explicit degree")
        n = degrees.pop()
    uf = UnionFind(range(1, n + 1))
    for g in generators:
        if isinstance(g, Transposition):
            uf.union(g.a, g.b)
            continue
        if g.n != n:
            raise DegreeMismatchError(n, g.n)
        for x in range(1, n + 1):
            uf.union(x, g(x))
    blocks = sorted((frozenset(b) for b in uf.groups()), key=min)
    return OrbitPartition(n, tuple(blocks))


def is_transitive(generators: Sequence, n: int) -> bool:
    return orbits(generators, n).is_transitive


def join_cut(nu: Permutation, tau: Transposition) -> JoinCut:
    """JOIN si los símbolos de tau están en ciclos distintos de nu"""
    x = tau.a
    seen = nu(x)
    while seen != x:
        if seen == tau.b:
            return JoinCut.CUT
        seen = nu(seen)
    return JoinCut.JOIN


def order_from_conjugator(delta: Permutation) -> TotalOrder:
    """Orden δ⁻¹(1) ≺ δ⁻¹(2) ≺ ⋯ ≺ δ⁻¹(n)"""
    return TotalOrder(delta.inverse().images)


def simple_reflection_decomposition(target: TotalOrder) -> list[int]:
    """
    Índices j_1, …, j_r tales que aplicar los intercambios adyacentes en ese
    orden lleva el orden natural a target. Se obtiene ordenando target por
    burbuja y leyendo los intercambios al revés.
    """
    seq = list(target.sequence)
    swaps = []
    for end in range(len(seq) - 1, 0, -1):
        for j in range(end):
            if seq[j] > seq[j + 1]:
                seq[j], seq[j + 1] = seq[j + 1], seq[j]
                swaps.append(j + 1)
    swaps.reverse()
    return swaps


def canonical_conjugator(omega: Permutation, gamma: Permutation) -> Permutation:
    """δ con conjugate(omega, δ) = gamma; empareja ciclos ordenados por longitud y menor símbolo"""
    _check_degree(omega, gamma)
    if omega.cycle_type() != gamma.cycle_type():
        raise FactorisationError(f"{omega} and {gamma} are not conjugate")

    def _sorted(p):
        return sorted(p.cycles(), key=lambda c: (-len(c), c[0]))

    images = [0] * omega.n
    for source, dest in zip(_sorted(omega), _sorted(gamma)):
        for s, d in zip(source, dest):
            images[s - 1] = d
    return Permutation(tuple(images))


@lru_cache(maxsize=None)
def all_permutations(n: int) -> tuple[Permutation, ...]:
    return tuple(Permutation(p) for p in itertools.permutations(range(1, n + 1)))


@lru_cache(maxsize=None)
def full_cycles(n: int) -> tuple[Permutation, ...]:
    """Todos los n-ciclos de S_n, ordenados por imágenes"""
    if n == 1:
        return (Permutation.identity(1),)
    cycles = [
        Permutation.from_cycles([(1,) + rest], n)
        for rest in itertools.permutations(range(2, n + 1))
    ]
    return tuple(sorted(cycles))


@lru_cache(maxsize=None)
def all_transpositions(n: int) -> tuple[Transposition, ...]:
    return tuple(Transposition(a, b) for a in range(1, n + 1) for b in range(a + 1, n + 1))


def all_orders(n: int) -> list[TotalOrder]:
    return [TotalOrder(p.images) for p in all_permutations(n)]


def merge_orbit_labels(labels: tuple[int, ...], a: int, b: int) -> tuple[int, ...]:
    """Une los bloques de a y b; cada símbolo conserva como etiqueta el menor de su bloque"""
    la, lb = labels[a - 1], labels[b - 1]
    if la == lb:
        return labels
    low, high = (la, lb) if la < lb else (lb, la)
    return tuple(low if label == high else label for label in labels)


def cycle_count(images: Sequence[int]) -> int:
    """Número de ciclos de una permutación dada por sus imágenes"""
    seen = [False] * len(images)
    count = 0
    for start in range(len(images)):
        if seen[start]:
            continue
        count += 1
        k = start
        while not seen[k]:
            seen[k] = True
            k = images[k] - 1
    return count
