# bijections.py - Movimientos de Hurwitz y biyecciones constructivas

"""
Biyecciones ejecutables entre familias de factorizaciones.

Todas trabajan sobre listas de transposiciones y, si se pasa un
HurwitzMoveTrace, registran cada movimiento elemental. Las posiciones
del trace son base 1 e indican el factor izquierdo del par reescrito.

Movimientos:
    derecha   τσ -> σ^τ τ   (σ^τ: σ con sus símbolos renombrados por τ)
    izquierda τσ -> σ τ^σ
Ambos conservan el producto del par y son inversos entre sí.
"""

from dataclasses import dataclass, field

from config import get_logger
from errors import ConditionViolation, FactorisationError
from factorisations import (
    MonotoneDoubleFactorisation,
    MonotoneFactorisation,
    StarFactorisation,
    monotone_length,
    validate_monotone_double,
    validate_star,
)
from perm_core import (
    Permutation,
    TotalOrder,
    Transposition,
    canonical_conjugator,
    conjugate,
    product,
    simple_reflection_decomposition,
)

logger = get_logger(__name__)

RHM = "RHM"
LHM = "LHM"
STAGE2 = "S2"


def _relabel(t: Transposition, by: Transposition) -> Transposition:
    def image(s):
        if s == by.a:
            return by.b
        if s == by.b:
            return by.a
        return s
    return Transposition(image(t.a), image(t.b))


def rightward_move(tau: Transposition, sigma: Transposition) -> tuple[Transposition, Transposition]:
    """(τ, σ) -> (σ^τ, τ); con soportes disjuntos solo intercambia"""
    return _relabel(sigma, tau), tau


def leftward_move(tau: Transposition, sigma: Transposition) -> tuple[Transposition, Transposition]:
    """(τ, σ) -> (σ, τ^σ)"""
    return sigma, _relabel(tau, sigma)


@dataclass(frozen=True)
class MoveStep:
    position: int
    kind: str
    before: tuple[Transposition, Transposition]
    after: tuple[Transposition, Transposition]

    def render(self) -> str:
        return (
            f"pos={self.position} move={self.kind} "
            f"before={self.before[0]}{self.before[1]} after={self.after[0]}{self.after[1]}"
        )


@dataclass
class HurwitzMoveTrace:
    steps: list[MoveStep] = field(default_factory=list)

    def record(self, position, kind, before, after):
        self.steps.append(MoveStep(position, kind, before, after))

    def render(self) -> str:
        return "\n".join(step.render() for step in self.steps)

    def replay(self, factors) -> list[Transposition]:
        """Aplica los pasos a una secuencia; cada par reescrito debe coincidir con su 'before'"""
        seq = list(factors)
        for step in self.steps:
            i = step.position - 1
            if tuple(seq[i:i + 2]) != step.before:
                raise FactorisationError(f"trace step does not match the sequence: {step.render()}")
            seq[i:i + 2] = list(step.after)
        return seq

    def __len__(self):
        return len(self.steps)


def is_product_preserving(trace: HurwitzMoveTrace, n: int) -> bool:
    return all(product(s.before, n) == product(s.after, n) for s in trace.steps)


def _move(seq, i, kind, trace, offset):
    """Reescribe el par seq[i], seq[i+1] en el sitio"""
    before = (seq[i], seq[i + 1])
    if kind == LHM:
        after = leftward_move(*before)
    else:
        after = rightward_move(*before)
    seq[i], seq[i + 1] = after
    if trace is not None:
        trace.record(offset + i + 1, kind, before, after)


def _ensure_monotone(factors, order):
    maxima = [order.rank(order.larger(t)) for t in factors]
    if any(x > y for x, y in zip(maxima, maxima[1:])):
        raise ConditionViolation("monotone", f"factors are not monotone under {order}")


def _block(seq, order, low, high):
    """(inicio, cuántos con mayor = low, cuántos con mayor = high)"""
    ranks = [order.rank(order.larger(t)) for t in seq]
    r_low, r_high = order.rank(low), order.rank(high)
    start = sum(1 for r in ranks if r < r_low)
    return start, ranks.count(r_low), ranks.count(r_high)


# --- Reordenación de dos símbolos adyacentes ---

def _reorder_list(seq, order, j, trace=None, offset=0):
    """Pasa una lista monótona bajo order a una monótona bajo order con i_j, i_{j+1} intercambiados"""
    x, y = order.sequence[j - 1], order.sequence[j]
    xy = Transposition(x, y)
    p, s, t = _block(seq, order, x, y)

    # primera etapa: cada factor de la cadena de x cruza la cadena de y, el de más a la derecha primero
    if s and t:
        for k in range(s - 1, -1, -1):
            for step in range(t):
                _move(seq, p + k + step, RHM, trace, offset)

    # segunda etapa: cada (x y), empezando por el de más a la derecha, avanza hasta el final de su tramo
    end = t
    while True:
        hits = [r for r in range(end) if seq[p + r] == xy]
        if not hits:
            break
        r = hits[-1]
        for idx in range(r, end - 1):
            _move(seq, p + idx, STAGE2, trace, offset)
        end = r
    return seq


def _restore_list(seq, order_j, j, trace=None, offset=0):
    """Inversa de _reorder_list; order_j es el orden ya intercambiado"""
    y, x = order_j.sequence[j - 1], order_j.sequence[j]
    xy = Transposition(x, y)
    p, e, x_count = _block(seq, order_j, y, x)
    block_len = e + x_count

    while True:
        hits = [L for L in range(e, block_len) if seq[p + L] == xy]
        if not hits:
            break
        L = hits[0]
        for idx in range(L, e, -1):
            _move(seq, p + idx - 1, LHM, trace, offset)
        e = L + 1

    t, s = e, block_len - e
    for k in range(s):
        for step in range(t):
            _move(seq, p + t + k - step - 1, LHM, trace, offset)
    return seq


def _check_index(order, j):
    if not 1 <= j < order.n:
        raise FactorisationError(f"adjacent index {j} out of range for degree {order.n}")


def reorder_adjacent(f: MonotoneFactorisation, j: int, trace: HurwitzMoveTrace | None = None) -> MonotoneFactorisation:
    """Biyección M^≺ -> M^{≺_j}; conserva producto, longitud y género"""
    _check_index(f.order, j)
    _ensure_monotone(f.factors, f.order)
    seq = _reorder_list(list(f.factors), f.order, j, trace)
    return MonotoneFactorisation(f.n, f.order.swap_adjacent(j), tuple(seq), f.target, f.genus)


def reorder_adjacent_inverse(g: MonotoneFactorisation, j: int, trace: HurwitzMoveTrace | None = None) -> MonotoneFactorisation:
    """Inversa: M^{≺_j} -> M^≺, con g.order = ≺_j"""
    _check_index(g.order, j)
    _ensure_monotone(g.factors, g.order)
    seq = _restore_list(list(g.factors), g.order, j, trace)
    return MonotoneFactorisation(g.n, g.order.swap_adjacent(j), tuple(seq), g.target, g.genus)


def _sorting_swaps(order: TotalOrder) -> list[int]:
    return list(reversed(simple_reflection_decomposition(order)))


def _to_natural(seq, order, trace=None, offset=0):
    _ensure_monotone(seq, order)
    for j in _sorting_swaps(order):
        seq = _reorder_list(seq, order, j, trace, offset)
        order = order.swap_adjacent(j)
    return seq


def _from_natural(seq, order, trace=None, offset=0):
    natural = TotalOrder.natural(order.n)
    _ensure_monotone(seq, natural)
    chain = [order]
    swaps = _sorting_swaps(order)
    for j in swaps:
        chain.append(chain[-1].swap_adjacent(j))
    for k in range(len(swaps) - 1, -1, -1):
        seq = _restore_list(seq, chain[k + 1], swaps[k], trace, offset)
    return seq


def to_natural_order(f: MonotoneFactorisation, trace: HurwitzMoveTrace | None = None) -> MonotoneFactorisation:
    """Compone las reordenaciones adyacentes que ordenan ≺ por burbuja"""
    seq = _to_natural(list(f.factors), f.order, trace)
    return MonotoneFactorisation(f.n, TotalOrder.natural(f.n), tuple(seq), f.target, f.genus)


def from_natural_order(f: MonotoneFactorisation, order: TotalOrder, trace: HurwitzMoveTrace | None = None) -> MonotoneFactorisation:
    seq = _from_natural(list(f.factors), order, trace)
    return MonotoneFactorisation(f.n, order, tuple(seq), f.target, f.genus)


# --- Conjugación ---

def conjugate_monotone(f: MonotoneFactorisation, delta: Permutation, trace: HurwitzMoveTrace | None = None) -> MonotoneFactorisation:
    """
    M_g(ω) -> M_g(γ) con γ = conjugate(ω, δ).
    Los factores renombrados son monótonos bajo δ(1) ≺ ⋯ ≺ δ(n); luego se vuelve al orden natural.
    """
    if not f.order.is_natural():
        raise ConditionViolation("monotone", "conjugation expects a natural-order factorisation")
    relabelled = [t.relabel(delta) for t in f.factors]
    seq = _to_natural(relabelled, TotalOrder(delta.images), trace)
    gamma = conjugate(f.target, delta)
    return MonotoneFactorisation(f.n, f.order, tuple(seq), gamma, f.genus)


def conjugate_monotone_double(f: MonotoneDoubleFactorisation, delta: Permutation, trace: HurwitzMoveTrace | None = None) -> MonotoneDoubleFactorisation:
    """MD_g(ω) -> MD_g(γ): se renombran σ y la cola, y la cola vuelve al orden natural"""
    n = f.n
    gamma = conjugate(f.target, delta)
    sigma = conjugate(f.sigma, delta)
    beta = sigma.inverse() * gamma
    tail_genus = (len(f.factors) - beta.reflection_length()) // 2
    tail = MonotoneFactorisation(
        n, TotalOrder(delta.images), tuple(t.relabel(delta) for t in f.factors), beta, tail_genus
    )
    if monotone_length(beta, tail_genus) != len(f.factors):
        raise FactorisationError(f"tail of length {len(f.factors)} has no genus for {beta}")
    tail = to_natural_order(tail, trace)
    return MonotoneDoubleFactorisation(n, sigma, tail.factors, gamma, f.genus)


# --- Estrellas y monótonas dobles ---

def _raise_first(errors):
    first = errors[0]
    raise ConditionViolation(first.split()[1], first.split(": ", 1)[-1])


def _star_to_md(f: StarFactorisation, trace=None) -> MonotoneDoubleFactorisation:
    n, root = f.n, f.root
    ok, _, errors = validate_star(f.legs, f.target, root)
    if not ok:
        _raise_first(errors)

    seq = list(f.factors)
    marked = [False] * len(seq)
    firsts = []
    for idx, leg in enumerate(f.legs):
        if leg not in firsts:
            firsts.append(leg)
            marked[idx] = True

    # cada primera aparición se desplaza a la izquierda hasta tocar la anterior marcada
    for p in range(1, len(firsts)):
        idx = [i for i, flag in enumerate(marked) if flag][p]
        while not marked[idx - 1]:
            _move(seq, idx - 1, LHM, trace, 0)
            marked[idx - 1], marked[idx] = True, False
            idx -= 1

    sigma = product(seq[:n - 1], n)
    order = TotalOrder(tuple(firsts) + (root,))
    tail = _to_natural(seq[n - 1:], order, trace, n - 1)
    logger.debug("star %s -> sigma %s order %s", f.render(), sigma, order)
    return MonotoneDoubleFactorisation(n, sigma, tuple(tail), f.target, f.genus)


def _md_to_star(md: MonotoneDoubleFactorisation, root: int, trace=None) -> StarFactorisation:
    n = md.n
    ok, _, errors = validate_monotone_double(md.sigma, md.factors, md.target)
    if not ok:
        _raise_first(errors)
    if not 1 <= root <= n:
        raise FactorisationError(f"root {root} outside [1, {n}]")

    # σ escrito con último elemento root da el orden i_1 ≺ ⋯ ≺ i_{n-1} ≺ root
    firsts = []
    symbol = md.sigma(root)
    while symbol != root:
        firsts.append(symbol)
        symbol = md.sigma(symbol)
    order = TotalOrder(tuple(firsts) + (root,))
    tail = _from_natural(list(md.factors), order, trace, n - 1)

    seq = [Transposition(i, root) for i in firsts] + tail
    for j in range(n - 2, -1, -1):
        idx = j
        while idx + 1 < len(seq) and not seq[idx + 1].contains(root):
            _move(seq, idx, RHM, trace, 0)
            idx += 1

    if not all(t.contains(root) for t in seq):
        raise FactorisationError(f"reconstruction of {md.render()} is not a star with root {root}")
    legs = tuple(t.other(root) for t in seq)
    return StarFactorisation(n, root, legs, md.target, md.genus)


def star_to_monotone_double(f: StarFactorisation, trace: HurwitzMoveTrace | None = None) -> MonotoneDoubleFactorisation:
    """A_g(ω) -> MD_g(ω) para estrellas con raíz n"""
    if f.root != f.n:
        raise ConditionViolation("root", f"expected root {f.n}, got {f.root}")
    return _star_to_md(f, trace)


def monotone_double_to_star(md: MonotoneDoubleFactorisation, trace: HurwitzMoveTrace | None = None) -> StarFactorisation:
    return _md_to_star(md, md.n, trace)


def reroot(f: StarFactorisation, root: int, trace: HurwitzMoveTrace | None = None) -> StarFactorisation:
    """A_g^r(ω) -> A_g^i(ω) pasando por la forma monótona doble"""
    return _md_to_star(_star_to_md(f, trace), root, trace)


def centrality_witness(f: StarFactorisation, gamma: Permutation, trace: HurwitzMoveTrace | None = None) -> StarFactorisation:
    """A_g(ω) -> A_g(γ) para γ conjugada de ω"""
    delta = canonical_conjugator(f.target, gamma)
    md = star_to_monotone_double(f, trace)
    moved = conjugate_monotone_double(md, delta, trace)
    return monotone_double_to_star(moved, trace)
