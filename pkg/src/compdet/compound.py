"""Compound matrices of minors and their determinant identities.

The central object: given an (s+n-1) x sn matrix A, form the square matrix
whose rows are indexed by n-subsets I of [s+n-1] (lex order), columns by
weight-n compositions mu with s parts (head-heavy order), and whose (I, mu)
entry is the minor det A^I restricted to the block-prefix columns of mu.
Its determinant factors as a product of maximal minors of A; the verifiers
here check that factorization and the pairing structure behind it, either
with fully symbolic entries or at exact random rational samples.

Everything returns a VerifyReport; mathematical disagreement is reported,
never raised.
"""

import time
from fractions import Fraction
from math import comb

from .combin import (
    compositions,
    compositions_positive,
    epsilon,
    format_composition,
    format_subset,
    iota,
    partner_slots_colored,
    partner_slots_pinned,
    subsets_lex,
)
from .errors import CapabilityError, UsageError
from .laurent import LaurentPoly
from .pmatrix import (
    PolyMatrix,
    det_cofactor,
    det_fraction_free,
    det_minor_expansion,
    minor,
)
from .report import VerifyReport, canonical_hash, hash_parts
from .sampling import SplitMix64

# (s, n) pairs with both s, n >= 2 where fully symbolic verification is
# affordable; one-dimensional families (s == 1 or n == 1) are always fine.
SYMBOLIC_CASES = {(2, 2), (2, 3), (3, 2)}
SYMBOLIC_LINE_CAP = 8


class CompoundSpec:
    """Shape bundle: parameters (s, n) plus the (s+n-1) x sn matrix A."""

    __slots__ = ("s", "n", "A", "row_sets", "col_comps", "col_sets")

    def __init__(self, s, n, A):
        if s < 1 or n < 1:
            raise UsageError("s and n must be positive")
        if A.nrows != s + n - 1 or A.ncols != s * n:
            raise UsageError(
                f"matrix must be {s + n - 1} x {s * n} for s={s}, n={n}"
            )
        self.s = s
        self.n = n
        self.A = A
        self.row_sets = subsets_lex(s + n - 1, n)
        self.col_comps = compositions(s, n)
        self.col_sets = [iota(mu, n) for mu in self.col_comps]

    @classmethod
    def symbolic(cls, s, n):
        """All entries independent variables, row-major."""
        return cls(s, n, PolyMatrix.symbolic(s + n - 1, s * n))

    @classmethod
    def sampled(cls, s, n, rng):
        """Entries drawn as random rationals u/v with 16-bit u, v."""
        return cls(s, n, _random_matrix(s + n - 1, s * n, rng))


def _random_matrix(nrows, ncols, rng):
    top = 1 << 16
    rows = []
    for _ in range(nrows):
        row = []
        for _ in range(ncols):
            u = rng.next_below(top) + 1
            v = rng.next_below(top) + 1
            row.append(LaurentPoly.const(0, Fraction(u, v)))
        rows.append(row)
    return PolyMatrix(rows)


def det_exact(m):
    """Determinant strategy used throughout: cofactor for tiny matrices,
    fraction-free for constants, division-free minor expansion for symbolic
    entries (elimination blows up on sparse many-variable entries)."""
    if m.nrows <= 4:
        return det_cofactor(m, bound=4)
    if m.num_vars == 0:
        return det_fraction_free(m)
    return det_minor_expansion(m)


def det_compound(m):
    """Determinant of the assembled compound matrix itself."""
    if m.num_vars == 0:
        return det_fraction_free(m)
    return det_minor_expansion(m)


def _minor_det(A, rowset, colset):
    return det_exact(minor(A, rowset, colset))


def _maximal_minor(A, colset):
    return _minor_det(A, tuple(range(1, A.nrows + 1)), colset)


def vec_V(spec, J):
    """Vector of n x n minors det A^I_J over all row sets I in lex order."""
    J = tuple(J)
    if len(J) != spec.n:
        raise UsageError(f"column set must have {spec.n} elements")
    return [_minor_det(spec.A, I, J) for I in spec.row_sets]


def vec_Vbar(spec, K):
    """Signed complementary minors: entry at I is
    (-1)^(sum(I) - n(n+1)/2) * det A^(complement of I)_K."""
    K = tuple(K)
    if len(K) != spec.s - 1:
        raise UsageError(f"column set must have {spec.s - 1} elements")
    full = set(range(1, spec.s + spec.n))
    base = spec.n * (spec.n + 1) // 2
    out = []
    for I in spec.row_sets:
        comp = tuple(sorted(full - set(I)))
        d = _minor_det(spec.A, comp, K) if comp else LaurentPoly.const(
            spec.A.num_vars, 1
        )
        sign = -1 if (sum(I) - base) % 2 else 1
        out.append(-d if sign < 0 else d)
    return out


def laplace_pair(spec, J, K):
    """Inner product <V_J, Vbar_K>; by the Laplace expansion it equals
    epsilon(J, K) * det A_(J union K)."""
    v = vec_V(spec, J)
    w = vec_Vbar(spec, K)
    total = LaurentPoly.zero(spec.A.num_vars)
    for a, b in zip(v, w):
        total = total + a * b
    return total


def build_M(spec):
    """The compound matrix: rows I lex, columns mu head-heavy."""
    cols = [vec_V(spec, Jset) for Jset in spec.col_sets]
    nrows = len(spec.row_sets)
    return PolyMatrix([[cols[j][i] for j in range(len(cols))] for i in range(nrows)])


def build_Mhat(spec, partner_map):
    """Companion matrix of signed complementary minors; column mu holds
    vec_Vbar at partner_map[mu]."""
    cols = [vec_Vbar(spec, partner_map[mu]) for mu in spec.col_comps]
    nrows = len(spec.row_sets)
    return PolyMatrix([[cols[j][i] for j in range(len(cols))] for i in range(nrows)])


def partner_map_for_variant(spec, k0=None):
    """The partner-column choice for the Gram verification: with k0 fixed,
    successor slots pinned at k0 (with the special rule for concentrated
    compositions); without, successor slots at each first maximal part."""
    if k0 is None:
        return {mu: partner_slots_colored(mu, spec.n) for mu in spec.col_comps}
    if not 1 <= k0 <= spec.s:
        raise UsageError(f"k must be in 1..{spec.s}")
    return {mu: partner_slots_pinned(mu, k0, spec.n) for mu in spec.col_comps}


def _support_permutation_unique(pattern):
    """Given a boolean matrix, count permutations inside its support,
    stopping at 2.  Returns (count_capped_at_2, identity_in_support)."""
    size = len(pattern)
    identity_ok = all(pattern[i][i] for i in range(size))
    count = 0

    def rec(col, used):
        nonlocal count
        if count >= 2:
            return
        if col == size:
            count += 1
            return
        for row in range(size):
            if pattern[row][col] and not (used >> row) & 1:
                rec(col + 1, used | (1 << row))
                if count >= 2:
                    return

    rec(0, 0)
    return count, identity_ok


def verify_gram_structure(spec, k0=None, partner_map=None):
    """Check the pairing structure behind the compound factorization.

    Builds T = transpose(M) * Mhat and verifies, entry by entry, that
    T[lam, mu] = epsilon(iota(lam), partner(mu)) * det A_(iota(lam) u partner(mu)),
    which also pins the zero pattern exactly.  When the support of T admits
    only the identity permutation, det T is literally the product of the
    diagonal entries, giving det T = sign * prod_mu det A_(iota(mu) u partner(mu))
    with sign the product of the diagonal epsilons.  If several permutations
    fit the support, the determinant is computed directly instead.
    """
    t0 = time.perf_counter()
    if partner_map is None:
        partner_map = partner_map_for_variant(spec, k0)
    M = build_M(spec)
    Mhat = build_Mhat(spec, partner_map)
    T = M.transpose().matmul(Mhat)
    size = len(spec.col_comps)
    nv = spec.A.num_vars

    union_cache = {}

    def union_det(cols):
        if cols not in union_cache:
            union_cache[cols] = _maximal_minor(spec.A, cols)
        return union_cache[cols]

    entries_ok = True
    bad_cell = None
    pattern = [[False] * size for _ in range(size)]
    pattern_rows = []
    lhs_parts = []
    rhs_parts = []
    for i, lam in enumerate(spec.col_comps):
        row_chars = []
        for j, mu in enumerate(spec.col_comps):
            sign = epsilon(iota(lam, spec.n), partner_map[mu])
            actual = T.at(i, j)
            if sign == 0:
                expected = LaurentPoly.zero(nv)
            else:
                ud = union_det(tuple(sorted(set(iota(lam, spec.n)) | set(partner_map[mu]))))
                expected = ud * sign
            ok = actual == expected
            if not ok and entries_ok:
                entries_ok = False
                bad_cell = (format_composition(lam), format_composition(mu))
            nonzero = not actual.is_zero()
            pattern[i][j] = nonzero
            row_chars.append("*" if nonzero else ".")
            lhs_parts.append(actual.canonical())
            rhs_parts.append(expected.canonical())
        pattern_rows.append("".join(row_chars))

    diag_sign = 1
    factor_mult = {}
    diag_ok = True
    for i, mu in enumerate(spec.col_comps):
        eps = epsilon(iota(mu, spec.n), partner_map[mu])
        if eps == 0 or not pattern[i][i]:
            diag_ok = False
            break
        diag_sign *= eps
        cols = tuple(sorted(set(iota(mu, spec.n)) | set(partner_map[mu])))
        factor_mult[format_subset(cols)] = factor_mult.get(format_subset(cols), 0) + 1

    perm_count, identity_ok = _support_permutation_unique(pattern)
    unique_support = perm_count == 1 and identity_ok

    det_equal = False
    method = None
    if entries_ok and diag_ok:
        if unique_support:
            # det T has a single surviving Leibniz term, the diagonal one.
            det_equal = True
            method = "unique-support-permutation"
        else:
            lhs_det = det_compound(T)
            rhs_det = LaurentPoly.const(nv, diag_sign)
            for i, mu in enumerate(spec.col_comps):
                cols = tuple(sorted(set(iota(mu, spec.n)) | set(partner_map[mu])))
                rhs_det = rhs_det * union_det(cols)
            det_equal = lhs_det == rhs_det
            method = "direct-determinant"

    equal = entries_ok and diag_ok and det_equal
    detail = {
        "variant": "pinned" if k0 is not None else "colored",
        "entry_identity_ok": entries_ok,
        "zero_pattern": pattern_rows,
        "unique_support_permutation": unique_support,
        "det_method": method,
        "factor_multiplicity": factor_mult,
    }
    if k0 is not None:
        detail["k"] = k0
    if bad_cell is not None:
        detail["first_bad_cell"] = list(bad_cell)
    mode = "numeric" if nv == 0 else "symbolic"
    return VerifyReport(
        identity="gram",
        mode=mode,
        equal=equal,
        lhs_hash=hash_parts(lhs_parts),
        rhs_hash=hash_parts(rhs_parts),
        s=spec.s,
        n=spec.n,
        sign=diag_sign if diag_ok else None,
        elapsed_ms=int((time.perf_counter() - t0) * 1000),
        detail=detail,
    )


def check_symbolic_envelope(s, n):
    """Raise unless (s, n) is affordable fully symbolically."""
    if s == 1 or n == 1:
        if s + n - 1 > SYMBOLIC_LINE_CAP:
            raise CapabilityError(
                f"symbolic mode supports s+n-1 <= {SYMBOLIC_LINE_CAP} "
                "on the one-dimensional families"
            )
        return
    if (s, n) not in SYMBOLIC_CASES:
        supported = sorted(SYMBOLIC_CASES)
        raise CapabilityError(
            f"symbolic mode supports s=1, n=1, or (s,n) in {supported}; "
            f"got ({s},{n}) - use numeric mode"
        )


def _spec_for_mode(s, n, mode, seed):
    if mode == "symbolic":
        check_symbolic_envelope(s, n)
        return CompoundSpec.symbolic(s, n)
    if mode == "numeric":
        return CompoundSpec.sampled(s, n, SplitMix64(0 if seed is None else seed))
    raise UsageError(f"unknown mode {mode!r}")


def verify_main(s, n, mode="symbolic", seed=None):
    """det of the compound matrix equals the product of maximal minors of A
    over the all-parts-positive compositions of s+n-1."""
    t0 = time.perf_counter()
    spec = _spec_for_mode(s, n, mode, seed)
    M = build_M(spec)
    lhs = det_compound(M)
    rhs = LaurentPoly.const(spec.A.num_vars, 1)
    rhs_sets = [iota(nu, n) for nu in compositions_positive(s, s + n - 1)]
    for cols in rhs_sets:
        rhs = rhs * _maximal_minor(spec.A, cols)
    equal = lhs == rhs
    return VerifyReport(
        identity="main",
        mode=mode,
        equal=equal,
        lhs_hash=canonical_hash(lhs.canonical()),
        rhs_hash=canonical_hash(rhs.canonical()),
        s=s,
        n=n,
        seed=seed if mode == "numeric" else None,
        elapsed_ms=int((time.perf_counter() - t0) * 1000),
        detail={"rhs_factors": [format_subset(c) for c in rhs_sets]},
    )


SYLVESTER_SYMBOLIC_CAP = 4


def verify_sylvester(s, n, mode="symbolic", seed=None):
    """Classical compound identity for square A of size s:
    det(det A^I_J)_{I,J in n-subsets, lex} = (det A)^binom(s-1, n-1)."""
    t0 = time.perf_counter()
    if not 1 <= n <= s:
        raise UsageError("need s >= n >= 1")
    if mode == "symbolic":
        if s > SYLVESTER_SYMBOLIC_CAP:
            raise CapabilityError(
                f"symbolic mode supports s <= {SYLVESTER_SYMBOLIC_CAP}; use numeric"
            )
        A = PolyMatrix.symbolic(s, s)
    elif mode == "numeric":
        A = _random_matrix(s, s, SplitMix64(0 if seed is None else seed))
    else:
        raise UsageError(f"unknown mode {mode!r}")
    subsets = subsets_lex(s, n)
    comp = PolyMatrix(
        [[_minor_det(A, I, J) for J in subsets] for I in subsets]
    )
    lhs = det_compound(comp)
    rhs = det_exact(A) ** comb(s - 1, n - 1)
    equal = lhs == rhs
    return VerifyReport(
        identity="sylvester",
        mode=mode,
        equal=equal,
        lhs_hash=canonical_hash(lhs.canonical()),
        rhs_hash=canonical_hash(rhs.canonical()),
        s=s,
        n=n,
        seed=seed if mode == "numeric" else None,
        elapsed_ms=int((time.perf_counter() - t0) * 1000),
        detail={"exponent": comb(s - 1, n - 1)},
    )


def verify_gram(s, n, k0=None, mode="symbolic", seed=None):
    """Entry point for the pairing-structure check on a fresh matrix.

    Without k0 the partner slots are chosen by the first maximal part of
    each composition; with k0 they are pinned to that coordinate, with the
    special rule for the concentrated compositions.
    """
    spec = _spec_for_mode(s, n, mode, seed)
    if k0 is not None and not 1 <= k0 <= s:
        raise UsageError(f"k must lie in 1..{s}")
    report = verify_gram_structure(spec, k0=k0)
    if mode == "numeric":
        report.seed = 0 if seed is None else seed
    return report


def check_degree_balance(s, n):
    """Both sides of the main identity are homogeneous of the same degree."""
    return n * comb(s + n - 1, n) == (s + n - 1) * comb(s + n - 2, n - 1)


def verify_leading_term(s, n):
    """Specialize a_ij = x_j^(s+n-i) and compare the lex-leading term of the
    compound determinant with the predicted diagonal monomial, coefficient 1."""
    t0 = time.perf_counter()
    check_symbolic_envelope(s, n)
    nv = s * n
    rows = []
    for i in range(1, s + n):
        row = []
        for j in range(1, nv + 1):
            exps = [0] * nv
            exps[j - 1] = 2 * (s + n - i)
            row.append(LaurentPoly.monomial(nv, 1, exps))
        rows.append(row)
    spec = CompoundSpec(s, n, PolyMatrix(rows))
    M = build_M(spec)
    d = det_compound(M)
    expected_exps = [0] * nv
    for k in range(1, s + 1):
        for j in range(1, n + 1):
            expected_exps[(k - 1) * n + j - 1] = 2 * (s + 1 - k) * comb(s + n - j, s)
    lead_exps, lead_coeff = d.leading_term()
    expected = LaurentPoly.monomial(nv, 1, expected_exps)
    actual = LaurentPoly.monomial(nv, lead_coeff, list(lead_exps))
    equal = actual == expected
    return VerifyReport(
        identity="leading-term",
        mode="symbolic",
        equal=equal,
        lhs_hash=canonical_hash(actual.canonical()),
        rhs_hash=canonical_hash(expected.canonical()),
        s=s,
        n=n,
        elapsed_ms=int((time.perf_counter() - t0) * 1000),
    )
