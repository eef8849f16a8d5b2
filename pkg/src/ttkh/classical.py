"""Classical diagram invariants: determinant, signature, tree polynomials.

The pairing form lives on the checkerboard surface spanned by the faces of
one color.  With mu(c) = +1 when the corners in quadrants 0 and 2 are
white, the white-surface form is

    g_ij = - sum of mu(c) over crossings where faces i and j meet,

the diagonal making every row sum to zero; deleting one row and column
gives the reduced form G.  Then |det G| is the link determinant and

    signature = sig(G) - sum of mu(c) over crossings with mu(c) sign(c) = +1

is the signature, independent of the color used to span the surface.  The
corrected count subtracts the crossings whose smoothing data and sign
disagree with the surface, which is what keeps curls and other moves from
shifting the answer.

The tree polynomial weighs each white spanning tree by its crossings that
merge white quadrants: Q(t) = sum over white trees of t^(# tree crossings
with mu = +1).  Q(1) counts the single-circle resolutions and |Q(-1)| the
determinant again; reparametrizing by t = delta^2 and centering with
nu = (#co) - #white + 1 - n_plus turns Q into the generator histogram of
the spanning-tree complex.
"""

from __future__ import annotations

from fractions import Fraction

from .pdcode import LinkDiagram
from .planar import BLACK, WHITE, checkerboard, mu_values, trace_faces

__all__ = [
    "goritz_matrix",
    "determinant",
    "signature",
    "tree_polynomial",
    "determinant_from_trees",
    "histogram_from_trees",
    "integer_determinant",
    "symmetric_signature",
]


def _surface_data(d: LinkDiagram, color: int):
    fs = trace_faces(d)
    colors = checkerboard(fs)
    mu = mu_values(fs, colors)
    if color == BLACK:
        mu = tuple(-m for m in mu)
    verts = [f for f in range(fs.n_faces) if colors[f] == color]
    index = {f: i for i, f in enumerate(verts)}
    return fs, colors, mu, verts, index


def goritz_matrix(d: LinkDiagram, color: int = WHITE) -> list[list[int]]:
    """Reduced pairing matrix of the checkerboard surface of one color."""
    fs, colors, mu, verts, index = _surface_data(d, color)
    m = len(verts)
    full = [[0] * m for _ in range(m)]
    for k in range(d.n):
        f_a = fs.face_of_corner(k, 0)
        f_b = fs.face_of_corner(k, 1)
        # mu(c) = +1 means corners 0 and 2 carry this surface's color
        # after the black-surface flip above; pick that pair of faces.
        if colors[f_a] == color:
            pair = (f_a, fs.face_of_corner(k, 2))
        else:
            pair = (f_b, fs.face_of_corner(k, 3))
        i, j = index[pair[0]], index[pair[1]]
        if i == j:
            continue
        full[i][j] -= mu[k]
        full[j][i] -= mu[k]
        full[i][i] += mu[k]
        full[j][j] += mu[k]
    return [row[1:] for row in full[1:]]


def integer_determinant(matrix: list[list[int]]) -> int:
    """Exact determinant of an integer matrix, fraction-free."""
    a = [row[:] for row in matrix]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def symmetric_signature(matrix: list[list[int]]) -> int:
    """Signature of a symmetric integer matrix, by exact LDL reduction.

    Nonzero diagonal entries are pivoted directly; a zero diagonal with a
    nonzero off-diagonal entry is a hyperbolic pair contributing nothing.
    """
    a = [[Fraction(x) for x in row] for row in matrix]
    live = list(range(len(a)))
    sig = 0
    while live:
        p = next((i for i in live if a[i][i] != 0), None)
        if p is not None:
            piv = a[p][p]
            sig += 1 if piv > 0 else -1
            live.remove(p)
            for i in live:
                if a[i][p] == 0:
                    continue
                r = a[i][p] / piv
                for j in live:
                    a[i][j] -= r * a[p][j]
            for i in live:
                a[i][p] = a[p][i] = Fraction(0)
            continue
        pq = next(
            ((i, j) for i in live for j in live if j > i and a[i][j] != 0),
            None,
        )
        if pq is None:
            break
        p, q = pq
        b = a[p][q]
        live.remove(p)
        live.remove(q)
        # Rank-two block [[0, b], [b, 0]]: one positive and one negative
        # eigenvalue, net zero; sweep it out of the remaining rows.
        for i in live:
            ap, aq = a[i][p], a[i][q]
            if ap == 0 and aq == 0:
                continue
            for j in live:
                a[i][j] -= (ap * a[q][j] + aq * a[p][j]) / b
        for i in live:
            a[i][p] = a[p][i] = a[i][q] = a[q][i] = Fraction(0)
    return sig


def determinant(d: LinkDiagram, color: int = WHITE) -> int:
    """Link determinant as |det| of the reduced surface pairing."""
    return abs(integer_determinant(goritz_matrix(d, color)))


def signature(d: LinkDiagram, color: int = WHITE) -> int:
    """Link signature via the corrected surface pairing."""
    fs, colors, mu, verts, index = _surface_data(d, color)
    sig = symmetric_signature(goritz_matrix(d, color))
    corr = sum(
        mu[k] for k in range(d.n) if mu[k] * d.signs[k] == 1
    )
    return sig - corr


def tree_polynomial(d: LinkDiagram) -> dict:
    """Weighted tree count of the white graph and its histogram form.

    Returns {"Q": {power: coeff}, "R": {power: coeff}, "nu": shift,
    "trees": count}: Q weighs each white spanning tree by its crossings
    with mu = +1, R(delta) = delta^nu Q(delta^2) recenters it to match
    the generator histogram of the spanning-tree complex.
    """
    from .planar import tait_graphs
    from .spantree import spanning_trees

    fs = trace_faces(d)
    colors = checkerboard(fs)
    mu = mu_values(fs, colors)
    black, white = tait_graphs(fs, colors)
    q_poly: dict[int, int] = {}
    trees = spanning_trees(white.vertices, white.edges) if white.is_connected else []
    for t in trees:
        w = sum(1 for k in t if mu[k] == 1)
        q_poly[w] = q_poly.get(w, 0) + 1
    co = sum(1 for k in range(d.n) if mu[k] == -1)
    nu = co - len(white.vertices) + 1 - d.n_plus
    r_poly = {nu + 2 * w: c for w, c in q_poly.items()}
    return {"Q": q_poly, "R": r_poly, "nu": nu, "trees": len(trees)}


def determinant_from_trees(d: LinkDiagram) -> int:
    """|Q(-1)|: the determinant via the weighted tree count."""
    q_poly = tree_polynomial(d)["Q"]
    return abs(sum(c * (-1) ** w for w, c in q_poly.items()))


def histogram_from_trees(d: LinkDiagram) -> dict[int, int]:
    """Generator histogram predicted by the tree polynomial."""
    return tree_polynomial(d)["R"]
