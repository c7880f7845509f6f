"""Exact linear algebra over Q and Q(i).

Vectors are tuples of scalars, matrices are tuples of row tuples.  A
subspace is always represented by its reduced row echelon form with the
zero rows dropped, so two subspaces are equal iff the representing
matrices are equal.  All routines are pure; nothing here mutates its
arguments.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import InputError
from .scalars import compact, exact_div, is_zero


def _as_lists(rows):
    return [list(r) for r in rows]


def rref(rows):
    """Reduced row echelon form.

    Returns (rows, pivots): the nonzero echelon rows as tuples and the
    pivot column of each row.
    """
    m = _as_lists(rows)
    if not m:
        return (), ()
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pr = None
        for i in range(r, len(m)):
            if m[i][c]:
                pr = i
                break
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        inv = m[r][c]
        if inv != 1:
            m[r] = [exact_div(x, inv) for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                row_r = m[r]
                m[i] = [a - f * b for a, b in zip(m[i], row_r)]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return tuple(tuple(compact(x) for x in row) for row in m[:r]), tuple(pivots)


def rank(rows):
    return len(rref(rows)[0])


def reduce_mod(v, basis, pivots):
    """Reduce v against echelon rows; the residual is zero iff v is in the span."""
    w = list(v)
    for row, p in zip(basis, pivots):
        c = w[p]
        if c:
            w = [a - c * b for a, b in zip(w, row)]
    return tuple(w)


def in_span(v, basis, pivots):
    return not any(reduce_mod(v, basis, pivots))


def coefficients_in_span(v, basis, pivots):
    """Coefficients of v over echelon rows, or None if v is outside the span."""
    w = list(v)
    coeffs = []
    for row, p in zip(basis, pivots):
        c = w[p]
        coeffs.append(c)
        if c:
            w = [a - c * b for a, b in zip(w, row)]
    if any(w):
        return None
    return tuple(coeffs)


def span_rows(rows):
    """Canonical (rref) basis of the row space."""
    return rref(rows)[0]


def sum_spaces(*row_groups):
    stacked = [r for g in row_groups for r in g]
    return rref(stacked)[0]


def left_nullspace(rows):
    """Basis of {x : x . rows = 0}, i.e. linear relations among the rows."""
    rows = list(rows)
    n = len(rows)
    if n == 0:
        return ()
    zero = rows[0][0] - rows[0][0] if rows[0] else Fraction(0)
    one = zero + 1
    aug = []
    for i, r in enumerate(rows):
        tag = [zero] * n
        tag[i] = one
        aug.append(list(r) + tag)
    ncols = len(rows[0])
    reduced, _ = rref(aug)
    out = []
    for row in reduced:
        if all(is_zero(x) for x in row[:ncols]):
            out.append(row[ncols:])
    return rref(out)[0]


def intersect_spaces(a_rows, b_rows):
    """Canonical basis of rowspace(a) ∩ rowspace(b)."""
    a_rows = list(a_rows)
    b_rows = list(b_rows)
    if not a_rows or not b_rows:
        return ()
    na = len(a_rows)
    relations = left_nullspace(a_rows + b_rows)
    vecs = []
    for rel in relations:
        v = None
        for coeff, row in zip(rel[:na], a_rows):
            if is_zero(coeff):
                continue
            term = [coeff * x for x in row]
            v = term if v is None else [p + q for p, q in zip(v, term)]
        if v is not None and any(not is_zero(x) for x in v):
            vecs.append(v)
    return rref(vecs)[0]


def solve_condition_coefficients(domain_rows, residual_fn):
    """Coefficient vectors x with sum x_a * residual(domain[a]) = 0.

    residual_fn maps each domain basis vector to a list of residual
    vectors (same shapes across calls).  Returns canonical rows in the
    coefficient space of the domain basis.
    """
    domain_rows = list(domain_rows)
    if not domain_rows:
        return ()
    cond_rows = []
    for d in domain_rows:
        flat = []
        for res in residual_fn(d):
            flat.extend(res)
        cond_rows.append(flat)
    if not cond_rows[0]:
        n = len(domain_rows)
        one = domain_rows[0][0] - domain_rows[0][0] + 1
        zero = domain_rows[0][0] - domain_rows[0][0]
        return tuple(
            tuple(one if t == s else zero for t in range(n)) for s in range(n)
        )
    return left_nullspace(cond_rows)


def combine_rows(coeff_rows, domain_rows):
    """Map coefficient vectors back to ambient vectors over the domain basis."""
    out = []
    for cvec in coeff_rows:
        v = None
        for c, row in zip(cvec, domain_rows):
            if is_zero(c):
                continue
            term = [c * x for x in row]
            v = term if v is None else [p + q for p, q in zip(v, term)]
        if v is not None:
            out.append(v)
    return out


def solve_linear_conditions(domain_rows, residual_fn):
    """Subspace of the span of domain_rows cut out by linear conditions.

    residual_fn maps each domain basis vector to a list of residual
    vectors (all the same shapes across calls); a combination
    sum x_a * domain[a] satisfies the conditions iff the same combination
    of residuals vanishes.  Returns canonical rows of the solution space.
    """
    coeffs = solve_condition_coefficients(domain_rows, residual_fn)
    return rref(combine_rows(coeffs, list(domain_rows)))[0]


class Solver:
    """Repeated exact solves of x . rows = v for a fixed row matrix.

    The elimination of the transposed system is done once; each solve is
    a matrix-vector product plus a consistency check.
    """

    def __init__(self, rows):
        rows = [tuple(r) for r in rows]
        if not rows:
            raise InputError("Solver needs at least one row")
        self.rows = rows
        self.nrows = len(rows)
        self.ncols = len(rows[0])
        zero = rows[0][0] - rows[0][0]
        one = zero + 1
        # eliminate [rows^T | I] so solving becomes reading transformed entries
        aug = []
        for c in range(self.ncols):
            tag = [zero] * self.ncols
            tag[c] = one
            aug.append([rows[r][c] for r in range(self.nrows)] + tag)
        reduced, pivots = rref(aug)
        self._reduced = reduced
        self._pivots = pivots
        self._rank = len([p for p in pivots if p < self.nrows])
        if self._rank < self.nrows:
            raise InputError("Solver rows are linearly dependent")

    def solve(self, v):
        """Coefficients x with x . rows = v, or None if v is not in the span."""
        if len(v) != self.ncols:
            raise InputError("dimension mismatch in Solver.solve")
        zero = self.rows[0][0] - self.rows[0][0]
        nonzero = [(c, vc) for c, vc in enumerate(v) if vc]
        x = [zero] * self.nrows
        for row, p in zip(self._reduced, self._pivots):
            acc = zero
            for c, vc in nonzero:
                t = row[self.nrows + c]
                if t:
                    acc = acc + t * vc
            if p < self.nrows:
                x[p] = acc
            elif acc:
                return None
        # rows beyond the recorded pivots are pure consistency rows
        return tuple(x)


def congruence_diagonalize(matrix):
    """Lagrange diagonalization of a symmetric matrix over Q.

    Returns (diagonal entries, transform P) with P . M . P^T diagonal.
    """
    m = _as_lists(matrix)
    n = len(m)
    for row in m:
        if len(row) != n:
            raise InputError("congruence_diagonalize needs a square matrix")
    p = [[Fraction(1) if i == j else Fraction(0) for j in range(n)] for i in range(n)]

    def add_row_col(dst, src, factor):
        m[dst] = [a + factor * b for a, b in zip(m[dst], m[src])]
        for row in m:
            row[dst] = row[dst] + factor * row[src]
        p[dst] = [a + factor * b for a, b in zip(p[dst], p[src])]

    for k in range(n):
        if m[k][k] == 0:
            pivot = next((j for j in range(k + 1, n) if m[j][k] != 0), None)
            if pivot is not None:
                add_row_col(k, pivot, Fraction(1))
        if m[k][k] == 0:
            continue
        for j in range(k + 1, n):
            if m[j][k] != 0:
                add_row_col(j, k, -exact_div(m[j][k], m[k][k]))
    diag = tuple(m[i][i] for i in range(n))
    return diag, tuple(tuple(r) for r in p)


def signature_of_symmetric(matrix):
    """(positive, negative, zero) inertia of a symmetric rational matrix."""
    diag, _ = congruence_diagonalize(matrix)
    pos = sum(1 for d in diag if d > 0)
    neg = sum(1 for d in diag if d < 0)
    return pos, neg, len(diag) - pos - neg


def matvec(rows, v):
    return tuple(sum((a * b for a, b in zip(row, v)), row[0] - row[0]) for row in rows)


def vec_add(u, v):
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def vec_scale(c, v):
    return tuple(c * x for x in v)


def zero_vec(n, zero=Fraction(0)):
    return (zero,) * n


def is_zero_vec(v):
    return all(is_zero(x) for x in v)
