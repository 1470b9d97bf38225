"""Shift-automorphism generators, the relation q ≡_u p and chain search over candidate primes.

For a generator u acting on Γ through an automorphism σ_u (g·u = u·σ_u(g)),
q ≡_u p holds when σ_u(q) + p is a proper ideal. Chains of such steps are
searched breadth-first over a finite, user-supplied candidate universe.
"""
import logging
from collections import deque
from dataclasses import dataclass

import numpy as np

from errors import AlgebraError, GeneratorError, MixedCoheightError, RingMismatchError
from ideal_engine import Ideal, ideals_equal, is_comaximal
from poly_core import apply_shift, poly_ring
from spectrum import coheight, primes_equal

logger = logging.getLogger(__name__)

DEFAULT_DEPTH = 4


@dataclass(frozen=True, eq=False)
class HCGenerator:
    """A ring automorphism given by substituting each variable, with its inverse."""
    name: str
    ring: object
    substitution: dict
    inverse: dict

    def apply(self, f):
        """Substitute the images of the variables into f."""
        return apply_shift(f, self.substitution)

    def shift_ideal(self, ideal):
        """The image of an ideal, generator by generator."""
        return Ideal(ideal.ring, [self.apply(g) for g in ideal.generators])

    def moves(self, p):
        """Whether the shifted prime differs from p."""
        return not ideals_equal(self.shift_ideal(p.ideal), p.ideal)


def make_generator(ring, name, substitution, inverse):
    """A generator whose substitution must be undone by ``inverse`` on every variable."""
    def resolve(mapping):
        resolved = {}
        for variable, image in mapping.items():
            if variable not in ring.variables:
                raise GeneratorError(f"generator {name} substitutes unknown variable '{variable}'")
            resolved[variable] = ring.parse(image) if isinstance(image, str) else image
        return resolved

    forward, backward = resolve(substitution), resolve(inverse)
    for variable in ring.variables:
        t = ring.gen(variable)
        if apply_shift(apply_shift(t, forward), backward) != t or \
                apply_shift(apply_shift(t, backward), forward) != t:
            raise GeneratorError(f"inverse of generator {name} does not undo it on {variable}")
    return HCGenerator(name, ring, forward, backward)


def identity_generator(ring, name="1"):
    """The identity automorphism, used for "via 1"."""
    return HCGenerator(name, ring, {}, {})


@dataclass(frozen=True, eq=False)
class HCDatum:
    """A polynomial ring with a finite family of shift automorphisms."""
    ring: object
    generators: tuple

    def __post_init__(self):
        names = [u.name for u in self.generators]
        if len(set(names)) != len(names):
            raise GeneratorError("generator names must be distinct")
        for u in self.generators:
            if u.ring != self.ring:
                raise RingMismatchError(f"generator {u.name} acts on another ring")

    def generator(self, name):
        """Look a generator up by name."""
        for u in self.generators:
            if u.name == name:
                return u
        raise GeneratorError(f"no generator named '{name}'")

    def names(self, indices):
        return [self.generators[k].name for k in indices]


def weyl_datum(n):
    """Γ = K[t1..tn] with Y_i: t_i ↦ t_i + 1 and X_i: t_i ↦ t_i - 1, in the order Y_1..Y_n, X_1..X_n."""
    if n < 1:
        raise GeneratorError("the Weyl algebra needs n >= 1")
    ring = poly_ring(tuple(f"t{i}" for i in range(1, n + 1)))
    ys, xs = [], []
    for i in range(1, n + 1):
        t = ring.gen(f"t{i}")
        ys.append(make_generator(ring, f"Y{i}", {f"t{i}": t + 1}, {f"t{i}": t - 1}))
        xs.append(make_generator(ring, f"X{i}", {f"t{i}": t - 1}, {f"t{i}": t + 1}))
    return HCDatum(ring, tuple(ys + xs))


def is_principal(q):
    """Whether q is given by at most one generator."""
    return len(q.generators) <= 1


def equiv_u(q, p, u):
    """q ≡_u p: the shifted q and p are not comaximal."""
    if q.ring != p.ring or u.ring != q.ring:
        raise RingMismatchError("primes and generator must share a ring")
    if not is_principal(q):
        logger.debug("shifting the non-principal prime %r generator by generator", q)
    return not is_comaximal(u.shift_ideal(q.ideal), p.ideal)


def single_step_matrix(candidates, datum):
    """Boolean array with entry (i, j, k) = equiv_u(candidates[i], candidates[j], generator k)."""
    n, k = len(candidates), len(datum.generators)
    matrix = np.zeros((n, n, k), dtype=bool)
    for i, q in enumerate(candidates):
        for j, p in enumerate(candidates):
            for g, u in enumerate(datum.generators):
                matrix[i, j, g] = equiv_u(q, p, u)
    logger.debug("single-step matrix: %d of %d entries related", int(matrix.sum()), matrix.size)
    return matrix


@dataclass(frozen=True)
class ChainWitness:
    """Primes q_0, ..., q_r and the generator index used for each step."""
    primes: tuple
    generator_indices: tuple

    @property
    def length(self):
        return len(self.generator_indices)


def verify_chain(witness, datum):
    """Re-check every step of a witness and that it stays in one coheight."""
    if len(witness.generator_indices) != len(witness.primes) - 1:
        return False
    strata = {coheight(p) for p in witness.primes}
    if len(strata) != 1:
        return False
    return all(equiv_u(q, p, datum.generators[k])
               for q, p, k in zip(witness.primes, witness.primes[1:], witness.generator_indices))


def _check_search(start, candidates, max_depth):
    """Reject depth bounds below 1 and candidates of another coheight."""
    if max_depth < 1:
        raise AlgebraError("the search depth must be at least 1")
    level = coheight(start)
    for q in candidates:
        if coheight(q) != level:
            raise MixedCoheightError(f"{q!r} does not have coheight {level} like {start!r}")


class _RelationGraph:
    """Edges of the single-step relation with one preferred generator per edge."""

    def __init__(self, nodes, datum):
        self.nodes = nodes
        self.matrix = single_step_matrix(nodes, datum)
        self.moving = np.array([[u.moves(q) for u in datum.generators] for q in nodes], dtype=bool)

    def label(self, i, j):
        # prefer generators that actually move q_i, then declaration order
        related = np.flatnonzero(self.matrix[i, j])
        if related.size == 0:
            return None
        moving = [k for k in related if self.moving[i, k]]
        return int(moving[0]) if moving else int(related[0])


def equiv_reachable(start, candidates, datum, max_depth=DEFAULT_DEPTH):
    """Candidates reachable from ``start`` by chains of at most max_depth steps, with shortest witnesses."""
    _check_search(start, candidates, max_depth)
    nodes = [start] + list(candidates)
    graph = _RelationGraph(nodes, datum)

    parent = {}
    queue = deque([(0, 0)])
    while queue:
        node, depth = queue.popleft()
        if depth == max_depth:
            continue
        for j in range(1, len(nodes)):
            if j in parent:
                continue
            k = graph.label(node, j)
            if k is not None:
                parent[j] = (node, k)
                queue.append((j, depth + 1))
        logger.debug("bfs depth %d: %d candidates reached", depth + 1, len(parent))

    reached = []
    for j in range(1, len(nodes)):
        if j not in parent:
            continue
        primes, labels = [nodes[j]], []
        node = j
        while node != 0:
            node, k = parent[node]
            primes.append(nodes[node])
            labels.append(k)
        reached.append((nodes[j], ChainWitness(tuple(reversed(primes)), tuple(reversed(labels)))))
    return reached


def assassin_bound_witnesses(p, candidates, datum, max_depth=DEFAULT_DEPTH):
    """Primes with a chain toward p, each with its witness; p itself comes first."""
    _check_search(p, candidates, max_depth)
    nodes = [p] + list(candidates)
    graph = _RelationGraph(nodes, datum)

    successor = {}
    queue = deque([(0, 0)])
    while queue:
        node, depth = queue.popleft()
        if depth == max_depth:
            continue
        for j in range(1, len(nodes)):
            if j in successor:
                continue
            k = graph.label(j, node)
            if k is not None:
                successor[j] = (node, k)
                queue.append((j, depth + 1))

    admitted = [(p, ChainWitness((p,), ()))]
    for j in range(1, len(nodes)):
        if primes_equal(nodes[j], p) or j not in successor:
            continue
        primes, labels = [nodes[j]], []
        node = j
        while node != 0:
            node, k = successor[node]
            primes.append(nodes[node])
            labels.append(k)
        admitted.append((nodes[j], ChainWitness(tuple(primes), tuple(labels))))
    return admitted


def assassin_bound(p, candidates, datum, max_depth=DEFAULT_DEPTH):
    """Candidates that may lie in the assassin of a cyclic module with annihilator p.

    A candidate left out has no chain toward p within the depth bound.
    """
    return [q for q, _ in assassin_bound_witnesses(p, candidates, datum, max_depth)]


def is_split_certified(p, candidates, datum, max_depth=DEFAULT_DEPTH):
    """The admitted primes are pairwise comaximal, so the module splits into its components."""
    admitted = assassin_bound(p, candidates, datum, max_depth)
    for i, q in enumerate(admitted):
        for r in admitted[i + 1:]:
            if not primes_equal(q, r) and not is_comaximal(q.ideal, r.ideal):
                return False
    return True
