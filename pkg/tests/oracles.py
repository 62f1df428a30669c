"""Independent reference implementations used only by the tests.

Everything here is deliberately naive: permutation-sum determinants,
tableau enumeration, hand-derived closed forms.  The point is that none
of it shares code paths with the package, so agreement is meaningful.
"""

from fractions import Fraction
from itertools import permutations

from compdet.laurent import LaurentPoly


def perm_sign(perm):
    """Sign of a permutation given as a tuple of 0-based positions."""
    sign = 1
    seen = [False] * len(perm)
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        j = start
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def leibniz_det(rows):
    """Permutation-sum determinant over any ring with + and *."""
    n = len(rows)
    assert all(len(r) == n for r in rows)
    total = None
    for perm in permutations(range(n)):
        term = rows[0][perm[0]]
        for i in range(1, n):
            term = term * rows[i][perm[i]]
        term = term * perm_sign(perm)
        total = term if total is None else total + term
    return total


def semistandard_tableaux(shape, max_entry):
    """All fillings of the shape with entries 1..max_entry, weakly
    increasing along rows and strictly increasing down columns."""
    shape = tuple(v for v in shape if v > 0)
    if not shape:
        yield ()
        return

    rows = len(shape)

    def fill(tableau, r, c):
        if r == rows:
            yield tuple(tuple(row) for row in tableau)
            return
        if c == shape[r]:
            yield from fill(tableau, r + 1, 0)
            return
        lo = 1
        if c > 0:
            lo = max(lo, tableau[r][c - 1])
        if r > 0:
            lo = max(lo, tableau[r - 1][c] + 1)
        for v in range(lo, max_entry + 1):
            tableau[r].append(v)
            yield from fill(tableau, r, c + 1)
            tableau[r].pop()

    yield from fill([[] for _ in range(rows)], 0, 0)


def schur_tableau_poly(shape, num_vars):
    """Schur polynomial as a tableau-weight sum, directly."""
    total = LaurentPoly.const(num_vars, 0)
    for tableau in semistandard_tableaux(shape, num_vars):
        exps = [0] * num_vars
        for row in tableau:
            for entry in row:
                exps[entry - 1] += 2
        total = total + LaurentPoly.monomial(num_vars, 1, exps)
    return total


def schur_tableau_value(shape, values):
    """Schur polynomial evaluated at explicit values, via tableaux."""
    values = tuple(Fraction(v) for v in values)
    total = Fraction(0)
    for tableau in semistandard_tableaux(shape, len(values)):
        term = Fraction(1)
        for row in tableau:
            for entry in row:
                term *= values[entry - 1]
        total += term
    return total


def row_coefficient_ratio(q, t):
    """Hand-derived coefficient of the squarefree monomial vector in the
    weight-two monic basis element indexed by the single row."""
    q = Fraction(q)
    t = Fraction(t)
    return (1 + q) * (1 - t) / (1 - q * t)


def crossing_sign(left, right):
    """Interleaving sign computed by explicit bubble sort, as a check on
    the inversion-count implementation."""
    if set(left) & set(right):
        return 0
    merged = list(left) + list(right)
    sign = 1
    for i in range(len(merged)):
        for j in range(len(merged) - 1 - i):
            if merged[j] > merged[j + 1]:
                merged[j], merged[j + 1] = merged[j + 1], merged[j]
                sign = -sign
    return sign
