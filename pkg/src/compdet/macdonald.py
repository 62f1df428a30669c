"""Two-parameter symmetric functions with concrete rational parameters.

The basis is built by Gram-Schmidt over the monomial symmetric functions,
ordered by a linear extension of dominance, against the inner product that
weights each power-sum norm by (1 - q**part) / (1 - t**part).  Everything
is exact Fraction arithmetic; q and t are concrete rationals, never
indeterminates, which keeps the transition matrices small and cacheable.

The verification entry point evaluates the basis on nested variable
subsets, takes the determinant of the resulting grid, and compares it with
the closed product forms, for both the monic and the dual normalization.
"""

import time
from fractions import Fraction
from functools import lru_cache
from itertools import permutations

from .characters import GL, rhs_pair_product
from .combin import compositions, conjugate, iota, partitions_in_box, partitions_of
from .errors import CapabilityError, ParameterError, UsageError
from .pmatrix import det_fractions
from .report import VerifyReport, hash_parts
from .sampling import SplitMix64, qt_is_admissible, sample_point, sample_qt

# Transition matrices are cached per weight; the cap keeps them small.
MAX_WEIGHT = 8


def _normalize_partition(lam):
    lam = tuple(int(v) for v in lam)
    while lam and lam[-1] == 0:
        lam = lam[:-1]
    if any(v <= 0 for v in lam):
        raise UsageError(f"{lam} is not a partition")
    if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
        raise UsageError(f"{lam} is not weakly decreasing")
    return lam


def z_lambda(lam):
    """Centralizer size: product of part**count * count! over part values."""
    lam = _normalize_partition(lam)
    out = 1
    for part in set(lam):
        count = lam.count(part)
        fact = 1
        for i in range(2, count + 1):
            fact *= i
        out *= part**count * fact
    return out


def pochhammer(a, x, k):
    """Finite product (1 - a)(1 - a*x)...(1 - a*x**(k-1))."""
    if k < 0:
        raise UsageError("pochhammer length must be non-negative")
    out = Fraction(1)
    a = Fraction(a)
    x = Fraction(x)
    for i in range(k):
        out *= 1 - a * x**i
    return out


def b_lambda(lam, q, t):
    """Cellwise arm-leg product relating the two normalizations."""
    lam = _normalize_partition(lam)
    q = Fraction(q)
    t = Fraction(t)
    conj = conjugate(lam)
    out = Fraction(1)
    for i, row in enumerate(lam):
        for j in range(row):
            arm = row - (j + 1)
            leg = conj[j] - (i + 1)
            den = 1 - q ** (arm + 1) * t**leg
            if den == 0:
                raise ParameterError("degenerate parameters in cell product")
            out *= (1 - q**arm * t ** (leg + 1)) / den
    return out


def _partitions_ascending(weight):
    """Partitions of the weight in increasing lexicographic order, which
    extends dominance order."""
    return sorted(partitions_of(weight))


@lru_cache(maxsize=None)
def expand_p_in_m(lam):
    """Power-sum product expanded in the monomial basis, as a dict mapping
    partitions to integer coefficients.

    Brute force: expand the product of power sums in as many variables as
    the weight, then read off one representative monomial per partition.
    """
    lam = _normalize_partition(lam)
    weight = sum(lam)
    if weight == 0:
        return {(): 1}
    nv = weight
    poly = {(0,) * nv: 1}
    for r in lam:
        nxt = {}
        for exps, coeff in poly.items():
            for i in range(nv):
                key = exps[:i] + (exps[i] + r,) + exps[i + 1 :]
                nxt[key] = nxt.get(key, 0) + coeff
        poly = nxt
    out = {}
    for mu in partitions_of(weight):
        rep = mu + (0,) * (nv - len(mu))
        coeff = poly.get(rep, 0)
        if coeff:
            out[mu] = coeff
    return out


def _invert_matrix(matrix):
    """Inverse of a small square Fraction matrix by Gauss-Jordan."""
    n = len(matrix)
    work = [[Fraction(v) for v in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(matrix)]
    for col in range(n):
        pivot_row = next((r for r in range(col, n) if work[r][col] != 0), None)
        if pivot_row is None:
            raise ParameterError("singular transition matrix")
        work[col], work[pivot_row] = work[pivot_row], work[col]
        pivot = work[col][col]
        work[col] = [v / pivot for v in work[col]]
        for r in range(n):
            if r != col and work[r][col] != 0:
                factor = work[r][col]
                work[r] = [a - factor * b for a, b in zip(work[r], work[col])]
    return [row[n:] for row in work]


@lru_cache(maxsize=None)
def _m_in_p(weight):
    """Monomial basis written in power sums: dict mapping each partition to
    a dict of power-sum coefficients."""
    plist = _partitions_ascending(weight)
    matrix = [
        [Fraction(expand_p_in_m(lam).get(mu, 0)) for mu in plist] for lam in plist
    ]
    inv = _invert_matrix(matrix)
    out = {}
    for r, mu in enumerate(plist):
        out[mu] = {
            plist[c]: inv[r][c] for c in range(len(plist)) if inv[r][c] != 0
        }
    return out


def _to_p_vector(mdict, weight):
    table = _m_in_p(weight)
    out = {}
    for mu, coeff in mdict.items():
        for lam, c in table[mu].items():
            out[lam] = out.get(lam, Fraction(0)) + coeff * c
    return out


def inner_product_p(lam, mu, q, t):
    """Inner product of two power-sum basis elements: diagonal, with weight
    z_lambda times the product of (1 - q**part) / (1 - t**part)."""
    lam = _normalize_partition(lam)
    mu = _normalize_partition(mu)
    if lam != mu:
        return Fraction(0)
    q = Fraction(q)
    t = Fraction(t)
    norm = Fraction(z_lambda(lam))
    for part in lam:
        den = 1 - t**part
        if den == 0:
            raise ParameterError("inner product degenerates at this t")
        norm *= Fraction(1 - q**part, 1) / den
    return norm


def inner_product_m(f, g, weight, q, t):
    """Inner product of two monomial-basis vectors of the same weight."""
    q = Fraction(q)
    t = Fraction(t)
    fp = _to_p_vector(f, weight)
    gp = _to_p_vector(g, weight)
    total = Fraction(0)
    for lam, cf in fp.items():
        cg = gp.get(lam)
        if not cg:
            continue
        total += cf * cg * inner_product_p(lam, lam, q, t)
    return total


def _scaled(mdict, c):
    return {mu: coeff * c for mu, coeff in mdict.items() if coeff * c != 0}


def _minus(f, g):
    out = dict(f)
    for mu, coeff in g.items():
        val = out.get(mu, Fraction(0)) - coeff
        if val:
            out[mu] = val
        else:
            out.pop(mu, None)
    return out


@lru_cache(maxsize=None)
def _basis_for_weight(weight, q, t):
    plist = _partitions_ascending(weight)
    basis = {}
    norms = {}
    for lam in plist:
        f = {lam: Fraction(1)}
        unit = {lam: Fraction(1)}
        for mu in plist:
            if mu == lam:
                break
            c = inner_product_m(unit, basis[mu], weight, q, t) / norms[mu]
            if c:
                f = _minus(f, _scaled(basis[mu], c))
        norm = inner_product_m(f, f, weight, q, t)
        if norm == 0:
            raise ParameterError("isotropic basis vector; unusable parameters")
        basis[lam] = f
        norms[lam] = norm
    return basis


def macdonald_P(lam, q, t):
    """Monic basis element at concrete parameters, in the monomial basis.

    Returns a dict mapping partitions to Fraction coefficients.  Weight is
    capped so per-weight transition caches stay small.
    """
    lam = _normalize_partition(lam)
    weight = sum(lam)
    if weight == 0:
        return {(): Fraction(1)}
    if weight > MAX_WEIGHT:
        raise CapabilityError(f"weight {weight} exceeds the cap of {MAX_WEIGHT}")
    q = Fraction(q)
    t = Fraction(t)
    return dict(_basis_for_weight(weight, q, t)[lam])


def macdonald_Q(lam, q, t):
    """Dual normalization: the monic element scaled by the cell product."""
    lam = _normalize_partition(lam)
    if sum(lam) == 0:
        return {(): Fraction(1)}
    return _scaled(macdonald_P(lam, q, t), b_lambda(lam, q, t))


def monomial_sym_value(mu, values):
    """Monomial symmetric function at explicit values: one term per
    distinct rearrangement of the exponent vector."""
    mu = _normalize_partition(mu)
    values = tuple(Fraction(v) for v in values)
    nv = len(values)
    if len(mu) > nv:
        return Fraction(0)
    padded = mu + (0,) * (nv - len(mu))
    total = Fraction(0)
    for perm in set(permutations(padded)):
        term = Fraction(1)
        for v, e in zip(values, perm):
            if e:
                term *= v**e
        total += term
    return total


def evaluate_symfunc(mdict, values):
    """Evaluate a monomial-basis vector at explicit rational values."""
    total = Fraction(0)
    for mu, coeff in mdict.items():
        if coeff:
            total += Fraction(coeff) * monomial_sym_value(mu, values)
    return total


def printed_prefactor(s, n, q, t):
    """Closed-form scalar printed in front of the dual-normalization
    product: a ratio of four finite pochhammer products."""
    q = Fraction(q)
    t = Fraction(t)
    num = pochhammer(t**n, q, s - 1) * pochhammer(t, t, n - 1)
    den = pochhammer(q, q, s - 1) * pochhammer(t * q ** (s - 1), t, n - 1)
    if den == 0:
        raise ParameterError("prefactor denominator vanishes at these parameters")
    return num / den


def verify_corollary_macdonald(s, n, seed, q=None, t=None):
    """Numeric check of the determinant identities for the two-parameter
    basis evaluated on nested variable subsets.

    Four sub-results are reported: the monic identity, the dual identity
    with the printed scalar, the claim that the printed scalar equals the
    product of cell factors over the row partitions, and the dual identity
    with that product instead.  The overall flag is the conjunction of the
    two claims as printed.
    """
    if s < 1 or n < 1:
        raise UsageError("need positive s and n")
    if (q is None) != (t is None):
        raise UsageError("provide both parameters or neither")
    max_weight = (s - 1) * n
    if max_weight > MAX_WEIGHT:
        raise CapabilityError(
            f"row partitions reach weight {max_weight}, above the cap of {MAX_WEIGHT}"
        )
    t0 = time.perf_counter()
    rng = SplitMix64(seed)
    if q is None:
        q, t = sample_qt(rng)
    else:
        q = Fraction(q)
        t = Fraction(t)
        if not qt_is_admissible(q, t):
            raise ParameterError("parameters must lie strictly in (0, 1) and differ")
    point = sample_point(s * n, rng)

    rows = partitions_in_box(n, s - 1)
    cols = compositions(s, n)
    col_values = [tuple(point[i - 1] for i in iota(mu, n)) for mu in cols]

    p_rows = [macdonald_P(lam, q, t) for lam in rows]
    q_rows = [macdonald_Q(lam, q, t) for lam in rows]
    det_p = det_fractions(
        [[evaluate_symfunc(row, values) for values in col_values] for row in p_rows]
    )
    det_q = det_fractions(
        [[evaluate_symfunc(row, values) for values in col_values] for row in q_rows]
    )
    rhs = rhs_pair_product(GL, s, n, point)

    b_product = Fraction(1)
    for lam in rows:
        stripped = _normalize_partition(lam)
        if stripped:
            b_product *= b_lambda(stripped, q, t)
    printed = printed_prefactor(s, n, q, t)

    p_equal = det_p == rhs
    q_equal_printed_prefactor = det_q == printed * rhs
    prefactor_identity = b_product == printed
    q_equal_bproduct = det_q == b_product * rhs

    equal = p_equal and q_equal_printed_prefactor
    detail = {
        "p_equal": p_equal,
        "q_equal_printed_prefactor": q_equal_printed_prefactor,
        "prefactor_identity": prefactor_identity,
        "q_equal_bproduct": q_equal_bproduct,
        "q": q,
        "t": t,
        "printed_prefactor": printed,
        "cell_product": b_product,
    }
    return VerifyReport(
        identity="macdonald",
        mode="numeric",
        equal=equal,
        lhs_hash=hash_parts([str(det_p), str(det_q)]),
        rhs_hash=hash_parts([str(rhs), str(printed * rhs)]),
        s=s,
        n=n,
        seed=seed,
        elapsed_ms=int((time.perf_counter() - t0) * 1000),
        detail=detail,
    )
