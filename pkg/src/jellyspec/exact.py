"""Exact integer linear algebra on graph matrices.

Everything here runs on Python integers: characteristic polynomials come
from Berkowitz's division-free recurrence and determinants from Bareiss
fraction-free elimination, so cospectrality decisions never touch floats.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import Disconnected
from .graph import Graph, count_subgraphs, is_connected

IntMatrix = list[list[int]]

MAX_MOMENT = 8


@dataclass(frozen=True)
class CharPoly:
    """Monic integer polynomial; ``coeffs[i]`` multiplies ``x**i``."""

    coeffs: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x: int) -> int:
        return eval_char_poly_at_integer(self, x)

    def top(self, k: int) -> tuple[int, ...]:
        """Coefficients of x^n, x^(n-1), ..., x^(n-k+1) (zero-padded)."""
        rev = self.coeffs[::-1]
        return tuple(rev[i] if i < len(rev) else 0 for i in range(k))

    def serialize(self) -> str:
        return " ".join(str(c) for c in self.coeffs)

    @classmethod
    def parse(cls, line: str) -> CharPoly:
        return cls(tuple(int(tok) for tok in line.split()))

    def __str__(self) -> str:
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mag = abs(c)
            body = ("" if mag == 1 and i else str(mag)) + ("x" if i else "") + (f"^{i}" if i > 1 else "")
            terms.append(("- " if c < 0 else "+ ") + body)
        if not terms:
            return "0"
        s = " ".join(terms)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]


# -- matrices -----------------------------------------------------------------


def adjacency_matrix(g: Graph) -> IntMatrix:
    return [[row >> j & 1 for j in range(g.n)] for row in g.rows]


def laplacian_matrix(g: Graph) -> IntMatrix:
    """L = D - A."""
    a = adjacency_matrix(g)
    for i, row in enumerate(a):
        d = sum(row)
        for j in range(g.n):
            row[j] = -row[j]
        row[i] = d
    return a


def signless_laplacian_matrix(g: Graph) -> IntMatrix:
    """Q = D + A."""
    a = adjacency_matrix(g)
    for i, row in enumerate(a):
        row[i] = sum(row)
    return a


MATRIX_KINDS = {
    "adjacency": adjacency_matrix,
    "laplacian": laplacian_matrix,
    "signlessLaplacian": signless_laplacian_matrix,
}
KIND_ALIASES = {
    "a": "adjacency",
    "l": "laplacian",
    "q": "signlessLaplacian",
    "adjacency": "adjacency",
    "laplacian": "laplacian",
    "signlessLaplacian": "signlessLaplacian",
    "signless_laplacian": "signlessLaplacian",
}


def graph_matrix(g: Graph, kind: str) -> IntMatrix:
    return MATRIX_KINDS[KIND_ALIASES[kind]](g)


def mat_mul(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def trace(a: IntMatrix) -> int:
    return sum(a[i][i] for i in range(len(a)))


# -- characteristic polynomial and determinants --------------------------------


def char_poly(m: IntMatrix) -> CharPoly:
    """det(xI - M) by Berkowitz's algorithm (no divisions)."""
    n = len(m)
    if n == 0:
        return CharPoly((1,))
    # c holds coefficients highest degree first for the leading r x r block
    c = [1, -m[0][0]]
    for r in range(1, n):
        row = m[r][:r]
        col = [m[i][r] for i in range(r)]
        lead = [m[i][:r] for i in range(r)]
        t = [1, -m[r][r]]
        vec = col
        for _ in range(r):
            t.append(-sum(x * y for x, y in zip(row, vec)))
            vec = [sum(x * y for x, y in zip(lrow, vec)) for lrow in lead]
        c = [sum(t[i - j] * c[j] for j in range(max(0, i - r - 1), min(i, r) + 1)) for i in range(r + 2)]
    return CharPoly(tuple(reversed(c)))


def bareiss_determinant(m: Sequence[Sequence[int]]) -> int:
    """Exact determinant by fraction-free Gaussian elimination."""
    a = [list(row) for row in m]
    n = len(a)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) // prev
        prev = pivot
    return sign * a[n - 1][n - 1]


def determinant_q(g: Graph) -> int:
    cp = char_poly(signless_laplacian_matrix(g))
    return cp.coeffs[0] * (-1) ** g.n


def spanning_tree_count(g: Graph) -> int:
    """Matrix-tree theorem: any (n-1) x (n-1) principal cofactor of L."""
    if not is_connected(g):
        raise Disconnected("spanning trees need a connected graph")
    if g.n <= 1:
        return 1
    lap = laplacian_matrix(g)
    return bareiss_determinant([row[1:] for row in lap[1:]])


# -- moments and closed formulas ------------------------------------------------


def q_moments(g: Graph, k_max: int, cap: int = MAX_MOMENT) -> list[int]:
    """[tr(Q^0), ..., tr(Q^k_max)] by exact matrix powers."""
    if k_max < 0:
        raise ValueError("k_max must be non-negative")
    if k_max > cap:
        raise ValueError(f"moment order {k_max} exceeds cap {cap}")
    q = signless_laplacian_matrix(g)
    out = [g.n]
    power = q
    for k in range(1, k_max + 1):
        if k > 1:
            power = mat_mul(power, q)
        out.append(trace(power))
    return out


def q_moment_formulas(g: Graph) -> list[int]:
    """T0..T3 from order, size, degree power sums and triangle count."""
    d = g.degrees()
    m = g.m
    s2 = sum(x * x for x in d)
    s3 = sum(x**3 for x in d)
    triangles = count_subgraphs(g)[0]
    return [g.n, 2 * m, 2 * m + s2, 6 * triangles + 3 * s2 + s3]


def laplacian_coeff_formulas(g: Graph) -> tuple[int, int, int, int]:
    """Coefficients of x^n .. x^(n-3) in det(xI - L) from degree data alone."""
    d = g.degrees()
    m = g.m
    s2 = sum(x * x for x in d)
    s3 = sum(x**3 for x in d)
    triangles = count_subgraphs(g)[0]
    l2 = 2 * m * m - m - s2 // 2
    num3 = -4 * m**3 + 6 * m * m + 3 * m * s2 - s3 - 3 * s2 + 6 * triangles
    if num3 % 3:
        raise ArithmeticError("cubic coefficient numerator not divisible by 3")
    return 1, -2 * m, l2, num3 // 3


# -- polynomial arithmetic -------------------------------------------------------


def poly_mul(a: Sequence[int], b: Sequence[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def poly_compose(p: Sequence[int], inner: Sequence[int]) -> list[int]:
    """p(inner(x)) by Horner's rule; coefficients constant-first."""
    out = [0]
    for c in reversed(p):
        out = poly_mul(out, inner)
        out[0] += c
    return _trim(out)


def _trim(p: list[int]) -> list[int]:
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


def eval_char_poly_at_integer(p: CharPoly | Sequence[int], r: int) -> int:
    coeffs = p.coeffs if isinstance(p, CharPoly) else p
    acc = 0
    for c in reversed(coeffs):
        acc = acc * r + c
    return acc


def root_multiplicity(p: CharPoly, r: int) -> int:
    """Multiplicity of the integer root r, by repeated synthetic division."""
    coeffs = list(p.coeffs)
    mult = 0
    while len(coeffs) > 1:
        # divide by (x - r), highest degree first
        rev = coeffs[::-1]
        quot = [rev[0]]
        for c in rev[1:]:
            quot.append(c + r * quot[-1])
        if quot.pop() != 0:
            break
        mult += 1
        coeffs = quot[::-1]
    return mult


def power_sums(p: CharPoly, k_max: int) -> list[int]:
    """Power sums of the roots of a monic polynomial via Newton's identities."""
    n = p.degree
    top = p.top(n + 1)  # top[i] = coefficient of x^(n-i) = (-1)^i e_i
    e = [(-1) ** i * top[i] for i in range(n + 1)]
    sums = [n]
    for k in range(1, k_max + 1):
        s = (-1) ** (k - 1) * k * e[k] if k <= n else 0
        for i in range(1, min(k, n + 1)):
            s += (-1) ** (i - 1) * e[i] * sums[k - i]
        sums.append(s)
    return sums


def complement_identity_check(g: Graph) -> bool:
    """(n - x) p_{L(co-G)}(x) == (-1)^(n-1) x p_{L(G)}(n - x), coefficientwise."""
    from .graph import complement

    n = g.n
    p_g = char_poly(laplacian_matrix(g)).coeffs
    p_c = char_poly(laplacian_matrix(complement(g))).coeffs
    lhs = _trim(poly_mul([n, -1], p_c))
    sign = -1 if (n - 1) % 2 else 1
    rhs = _trim([sign * c for c in poly_mul([0, 1], poly_compose(p_g, [n, -1]))])
    return lhs == rhs
