"""Combinatorics of monomial ideals on exponent tuples.

A monomial ideal is a list of exponent tuples (its generators). The unit
ideal contains the zero tuple; the zero ideal is the empty list.
"""
from itertools import combinations, product


def divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def lcm(a, b):
    """Componentwise maximum."""
    return tuple(max(x, y) for x, y in zip(a, b))


def minimalize(monomials):
    """Minimal generators: drop duplicates and multiples of other generators."""
    result = []
    for m in sorted(set(monomials), key=lambda e: (sum(e), e)):
        if not any(divides(g, m) for g in result):
            result.append(m)
    return result


def is_unit(monomials):
    return any(not any(m) for m in monomials)


def support(m):
    return frozenset(i for i, e in enumerate(m) if e)


def colon(monomials, m):
    """Generators of (I : m): each generator g becomes lcm(g, m) / m."""
    return minimalize(tuple(max(a - b, 0) for a, b in zip(g, m)) for g in monomials)


def contains_ideal(big, small):
    """True when every generator of ``small`` is divisible by a generator of ``big``."""
    return all(any(divides(g, m) for g in big) for m in small)


def intersection(left, right):
    """Minimal generators of the intersection: pairwise lcms."""
    return minimalize(lcm(a, b) for a in left for b in right)


def variable_prime(monomials):
    """Support of the generators when the ideal is generated by variables, else None."""
    gens = minimalize(monomials)
    if not gens or is_unit(gens):
        return None
    if all(sum(m) == 1 for m in gens):
        return frozenset(m.index(1) for m in gens)
    return None


def associated_primes(monomials, d):
    """Variable sets of the primes (I : m) for monomials m bounded by the generator exponents.

    Exponents above the largest generator exponent give the same colon, so the
    box enumeration is exhaustive.
    """
    gens = minimalize(monomials)
    if is_unit(gens):
        return []
    if not gens:
        return [frozenset()]
    bounds = [max(g[i] for g in gens) for i in range(d)]
    found = set()
    for m in product(*(range(b + 1) for b in bounds)):
        prime = variable_prime(colon(gens, m))
        if prime is not None:
            found.add(prime)
    return sorted(found, key=lambda s: (len(s), sorted(s)))


def minimal_primes(monomials, d):
    """Minimal variable sets S with I inside <x_i : i in S>."""
    gens = minimalize(monomials)
    if is_unit(gens):
        return []
    covering = []
    for size in range(d + 1):
        for subset in combinations(range(d), size):
            chosen = set(subset)
            if any(c <= chosen for c in covering):
                continue
            if all(support(g) & chosen for g in gens):
                covering.append(frozenset(subset))
    return sorted(covering, key=lambda s: (len(s), sorted(s)))


def irreducible_components(monomials):
    """Irredundant decomposition into ideals generated by pure powers."""
    gens = minimalize(monomials)
    if is_unit(gens):
        return []
    pending = [gens]
    components = []
    while pending:
        current = pending.pop()
        mixed = next((g for g in current if len(support(g)) > 1), None)
        if mixed is None:
            components.append(current)
            continue
        i = min(support(mixed))
        power = tuple(mixed[i] if k == i else 0 for k in range(len(mixed)))
        rest = tuple(0 if k == i else e for k, e in enumerate(mixed))
        others = [g for g in current if g != mixed]
        pending.append(minimalize(others + [power]))
        pending.append(minimalize(others + [rest]))

    unique = []
    for comp in components:
        if not any(set(comp) == set(u) for u in unique):
            unique.append(comp)
    # a component containing another one is redundant
    irredundant = [c for c in unique
                   if not any(o is not c and contains_ideal(c, o) and not contains_ideal(o, c)
                              for o in unique)]
    return sorted(irredundant, key=lambda c: (sorted(support_of(c)), c))


def support_of(monomials):
    """Union of the supports of the generators."""
    result = set()
    for m in monomials:
        result |= support(m)
    return frozenset(result)


def primary_components(monomials):
    """Irredundant primary decomposition: irreducible components grouped by radical.

    Returns (generators, variable set of the radical) pairs.
    """
    groups = {}
    for comp in irreducible_components(monomials):
        radical = support_of(comp)
        groups[radical] = intersection(groups[radical], comp) if radical in groups else comp
    return [(groups[r], r) for r in sorted(groups, key=lambda s: (len(s), sorted(s)))]


def standard_monomial_count(monomials, d):
    """Number of monomials outside the ideal, or None when infinite."""
    gens = minimalize(monomials)
    if is_unit(gens):
        return 0
    bounds = []
    for i in range(d):
        pure = [g[i] for g in gens if g[i] and sum(g) == g[i]]
        if not pure:
            return None
        bounds.append(min(pure))
    return sum(1 for m in product(*(range(b) for b in bounds))
               if not any(divides(g, m) for g in gens))
