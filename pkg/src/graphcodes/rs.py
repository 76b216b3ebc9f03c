"""Reed-Solomon codes in the evaluation view.

A codeword is the vector of evaluations of a message polynomial of degree
less than k at n distinct field elements (the defining set).  Error decoding
solves the classic two-polynomial functional equation Q(x) = y * E(x) on all
evaluation points; erasure decoding interpolates through k clean points and
cross-checks the rest.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DecodingError
from .field import GF
from .linalg import solve
from .polys import poly_divmod, poly_eval, poly_trim


@dataclass(frozen=True)
class RSCode:
    """[n, k] code over gf with evaluation points ``nodes``."""

    gf: GF
    nodes: tuple[int, ...]
    k: int

    def __post_init__(self):
        n = len(self.nodes)
        if n == 0 or n > self.gf.q:
            raise ValueError("need 1 <= n <= q, got n=%d, q=%d" % (n, self.gf.q))
        if any(not 0 <= x < self.gf.q for x in self.nodes):
            raise ValueError("defining set contains values outside the field")
        if len(set(self.nodes)) != n:
            raise ValueError("defining set elements must be distinct")
        if not 1 <= self.k <= n:
            raise ValueError("need 1 <= k <= n, got k=%d, n=%d" % (self.k, n))

    @property
    def n(self) -> int:
        return len(self.nodes)


def default_defining_set(gf: GF, n: int) -> tuple[int, ...]:
    """{0, 1, alpha, alpha^2, ...} truncated to n elements."""
    if n > gf.q:
        raise ValueError("cannot pick %d distinct nodes in GF(%d)" % (n, gf.q))
    pts = [0]
    v = 1
    while len(pts) < n:
        pts.append(v)
        v = gf.mul(v, gf.alpha)
    return tuple(pts)


def generator_matrix(code: RSCode):
    """k x n Vandermonde matrix, row r = nodes elementwise to the power r."""
    gf = code.gf
    return [[gf.pow(x, r) for x in code.nodes] for r in range(code.k)]


def encode(code: RSCode, message) -> list:
    """Evaluate the message polynomial (coefficients, ascending) at all nodes."""
    if len(message) != code.k:
        raise ValueError("message length %d != k=%d" % (len(message), code.k))
    gf = code.gf
    return [poly_eval(gf, message, x) for x in code.nodes]


def decode(code: RSCode, received):
    """Correct up to floor((n-k)/2) errors.

    Returns (message coefficients, error positions).  Solves for Q of degree
    < k+t and monic E of degree t with Q(x_j) = y_j E(x_j) at every node,
    then divides; any solution of the system yields the same message when
    the received word lies within the radius.  Raises DecodingError when the
    system is inconsistent, the division is inexact, or the re-encoded
    result disagrees with the received word in more than t places.
    """
    gf = code.gf
    n, k = code.n, code.k
    if len(received) != n:
        raise ValueError("received length %d != n=%d" % (len(received), n))
    t = (n - k) // 2

    rows = []
    rhs = []
    for x, y in zip(code.nodes, received):
        powers = [gf.pow(x, u) for u in range(k + t)]
        row = powers + [gf.neg(gf.mul(y, gf.pow(x, v))) for v in range(t)]
        rows.append(row)
        rhs.append(gf.mul(y, gf.pow(x, t)))
    sol = solve(gf, rows, rhs)
    if sol is None:
        raise DecodingError("no locator/quotient pair fits the received word")

    q_poly = poly_trim(sol[: k + t])
    e_poly = sol[k + t:] + [1]
    msg_poly, rem = poly_divmod(gf, q_poly, e_poly)
    if rem:
        raise DecodingError("locator does not divide the interpolant")
    if len(msg_poly) > k:
        raise DecodingError("decoded polynomial exceeds degree bound")
    message = msg_poly + [0] * (k - len(msg_poly))

    reencoded = encode(code, message)
    positions = [j for j in range(n) if reencoded[j] != received[j]]
    if len(positions) > t:
        raise DecodingError("corruption exceeds the unique-decoding radius")
    return message, positions


def erasure_decode(code: RSCode, received, erased=()) -> list:
    """Recover the message from >= k clean symbols; erased positions ignored.

    The remaining clean symbols are cross-checked against the interpolated
    polynomial; a mismatch means errors are present and error decoding
    should be used instead.
    """
    gf = code.gf
    n, k = code.n, code.k
    if len(received) != n:
        raise ValueError("received length %d != n=%d" % (len(received), n))
    erased = set(erased)
    if any(not 0 <= j < n for j in erased):
        raise ValueError("erasure index out of range")
    clean = [j for j in range(n) if j not in erased]
    if len(clean) < k:
        raise DecodingError("only %d clean symbols, need %d" % (len(clean), k))

    base, rest = clean[:k], clean[k:]
    rows = [[gf.pow(code.nodes[j], u) for u in range(k)] for j in base]
    message = solve(gf, rows, [received[j] for j in base])
    if message is None:
        raise AssertionError("interpolation system on distinct nodes must be solvable")
    for j in rest:
        if poly_eval(gf, message, code.nodes[j]) != received[j]:
            raise DecodingError("clean symbols are inconsistent; errors present")
    return message
