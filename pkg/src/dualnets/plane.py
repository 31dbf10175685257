"""Projective plane PG(2, GF(p)): points, lines, cross-ratio, perspectivities.

Points and lines are normalized homogeneous triples of ints (first nonzero
coordinate scaled to 1), so tuple equality is projective equality.  A point
lies on a line iff the dot product vanishes.

The cross-ratio convention is pinned once here and used everywhere:

    k(t1, t2, t3, t4) = (t3 - t1)(t2 - t4) / ((t2 - t3)(t4 - t1))

evaluated projectively on parameter pairs, so k and all derived invariants
live on the projective line GF(p) u {inf} (the PValue class).
"""


def normalize(v, p):
    """Scale a homogeneous triple so its first nonzero coordinate is 1."""
    v = (v[0] % p, v[1] % p, v[2] % p)
    for c in v:
        if c != 0:
            s = pow(c, -1, p)
            return (v[0] * s % p, v[1] * s % p, v[2] * s % p)
    raise ValueError("zero triple is not projective")


def dot(u, v, p):
    return (u[0] * v[0] + u[1] * v[1] + u[2] * v[2]) % p


def cross(u, v, p):
    return (
        (u[1] * v[2] - u[2] * v[1]) % p,
        (u[2] * v[0] - u[0] * v[2]) % p,
        (u[0] * v[1] - u[1] * v[0]) % p,
    )


def incident(P, line, p):
    return dot(P, line, p) == 0


def join(P, Q, p):
    """The unique line through two distinct points."""
    if P == Q:
        raise ValueError("join of equal points %r" % (P,))
    return normalize(cross(P, Q, p), p)


def meet(l, m, p):
    """The unique common point of two distinct lines."""
    if l == m:
        raise ValueError("meet of equal lines %r" % (l,))
    return normalize(cross(l, m, p), p)


def collinear(points, p):
    pts = list(dict.fromkeys(points))
    if len(pts) <= 2:
        return True
    line = join(pts[0], pts[1], p)
    return all(incident(P, line, p) for P in pts[2:])


def all_points(p):
    """Every point of PG(2,p), in normalized form: p^2 + p + 1 of them."""
    pts = [(1, y, z) for y in range(p) for z in range(p)]
    pts += [(0, 1, z) for z in range(p)]
    pts.append((0, 0, 1))
    return pts


def line_points(line, p):
    """The p + 1 points on a line."""
    return [P for P in all_points(p) if incident(P, line, p)]


class PValue:
    """An element of the projective line over GF(p): a scalar or infinity.

    Stored normalized: (x, 1) for the field value x, (1, 0) for infinity.
    Cross-ratios, u-invariants and kappa values are PValues so that inf
    needs no special-casing downstream.
    """

    __slots__ = ("num", "den", "p")

    def __init__(self, num, den, p):
        num %= p
        den %= p
        if num == 0 and den == 0:
            raise ValueError("0/0 is not a projective value")
        if den != 0:
            num = num * pow(den, -1, p) % p
            den = 1
        else:
            num = 1
        self.num = num
        self.den = den
        self.p = p

    @classmethod
    def of(cls, x, p):
        return cls(x, 1, p)

    @classmethod
    def infinity(cls, p):
        return cls(1, 0, p)

    @property
    def is_infinity(self):
        return self.den == 0

    @property
    def value(self):
        if self.den == 0:
            raise ValueError("infinite PValue has no scalar value")
        return self.num

    def reciprocal(self):
        return PValue(self.den, self.num, self.p)

    def __eq__(self, other):
        if not isinstance(other, PValue):
            return NotImplemented
        return (self.num, self.den, self.p) == (other.num, other.den, other.p)

    def __hash__(self):
        return hash((self.num, self.den, self.p))

    def __repr__(self):
        return "inf" if self.den == 0 else str(self.num)


def _base_points(line, p):
    # two canonical distinct points spanning the kernel of <line, .>
    a, b, c = line
    if a != 0:
        return normalize((-b, a, 0), p), normalize((-c, 0, a), p)
    if b != 0:
        return (1, 0, 0), normalize((0, -c, b), p)
    return (1, 0, 0), (0, 1, 0)


def _parameter(P, B1, B2, p):
    # P ~ lam*B1 + mu*B2 on the line spanned by B1, B2; parameter t = mu/lam
    # as a raw (num, den) pair. Solved from any independent 2x2 subsystem.
    for i in range(3):
        for j in range(i + 1, 3):
            det = (B1[i] * B2[j] - B1[j] * B2[i]) % p
            if det != 0:
                lam = (P[i] * B2[j] - P[j] * B2[i]) % p
                mu = (B1[i] * P[j] - B1[j] * P[i]) % p
                return (mu, lam)
    raise ValueError("base points do not span a line")


def _cross_of_parameters(t1, t2, t3, t4, p):
    # projective evaluation of (t3-t1)(t2-t4) / ((t2-t3)(t4-t1)) on (num, den) pairs
    def d(u, v):
        return (u[0] * v[1] - v[0] * u[1]) % p

    num = d(t3, t1) * d(t2, t4) % p
    den = d(t2, t3) * d(t4, t1) % p
    if num == 0 and den == 0:
        raise ValueError("cross-ratio undefined: three coincident points")
    return PValue(num, den, p)


def cross_ratio(A, B, C, D, p, base=None):
    """Cross-ratio of four collinear points, at most two coincident.

    The line is parametrized by two base points (canonically derived from
    the line's coefficients unless an explicit pair is given; the value is
    independent of that choice), and the parameters go through the pinned
    formula.  Exactly two coincident points give the degenerate value 0, 1
    or inf instead of an error.
    """
    pts = [A, B, C, D]
    distinct = list(dict.fromkeys(pts))
    if len(distinct) < 2:
        raise ValueError("cross-ratio needs at least two distinct points")
    line = join(distinct[0], distinct[1], p)
    for P in pts:
        if not incident(P, line, p):
            raise ValueError("points are not collinear")
    if base is None:
        B1, B2 = _base_points(line, p)
    else:
        B1, B2 = base
        if B1 == B2 or not incident(B1, line, p) or not incident(B2, line, p):
            raise ValueError("invalid base points for this line")
    ts = [_parameter(P, B1, B2, p) for P in pts]
    return _cross_of_parameters(*ts, p)


def cross_ratio_lines(l1, l2, l3, l4, p, aux=None):
    """Cross-ratio of four concurrent lines, via an auxiliary transversal.

    The four lines are cut by an auxiliary line missing the common point;
    the value is the reciprocal of the point cross-ratio of the four
    intersections, which is the convention that assigns the tangent pencil
    x=0, y=0, ax+by=0, a'x+b'y=0 the value a*b'/(a'*b).  Independent of
    the auxiliary line.
    """
    lines = [l1, l2, l3, l4]
    distinct = list(dict.fromkeys(lines))
    if len(distinct) < 2:
        raise ValueError("need at least two distinct lines")
    V = meet(distinct[0], distinct[1], p)
    for l in lines:
        if not incident(V, l, p):
            raise ValueError("lines are not concurrent")
    if aux is None:
        aux = tuple(1 if V[i] != 0 and all(V[j] == 0 for j in range(i)) else 0 for i in range(3))
        # V is normalized so this is the dual of its leading coordinate
    if incident(V, aux, p):
        raise ValueError("auxiliary line passes through the common point")
    qs = [meet(l, aux, p) for l in lines]
    return cross_ratio(qs[0], qs[1], qs[2], qs[3], p).reciprocal()


def anharmonic_orbit(k):
    """Orbit of a cross-ratio under the anharmonic group: at most 6 values.

    {k, 1/k, 1-k, 1/(1-k), k/(k-1), (k-1)/k} with projective conventions,
    so 0, 1 and inf are handled uniformly.
    """
    n, d, p = k.num, k.den, k.p
    return {
        PValue(n, d, p),
        PValue(d, n, p),
        PValue(d - n, d, p),
        PValue(d, d - n, p),
        PValue(n, n - d, p),
        PValue(n - d, n, p),
    }


def u_invariant(k):
    """u(k) = (k^2-k+1)^3 / ((k+1)^2 (k-2)^2 (2k-1)^2), projectively.

    Constant on anharmonic orbits; 0 exactly at equianharmonic k, inf
    exactly at harmonic-type k in {-1, 2, 1/2}.
    """
    n, d, p = k.num, k.den, k.p
    q = (n * n - n * d + d * d) % p
    num = pow(q, 3, p)
    den = pow((n + d) * (n - 2 * d) * (2 * n - d), 2, p)
    return PValue(num, den, p)


def u_from_quartic(a0, a1, a2, a3, a4, p):
    """The same u computed from quartic coefficients instead of its roots.

    For a quartic with roots t1..t4, u(cross-ratio of the roots) equals
    (12 a0 a4 - 3 a1 a3 + a2^2)^3 / (72 a0 a2 a4 - 27 a0 a3^2 - 27 a1^2 a4
    - 2 a2^3 + 9 a1 a2 a3)^2.  Homogeneous of degree 6 over 6, so scaling
    all coefficients leaves the value unchanged.
    """
    f = (12 * a0 * a4 - 3 * a1 * a3 + a2 * a2) % p
    j = (72 * a0 * a2 * a4 - 27 * a0 * a3 * a3 - 27 * a1 * a1 * a4
         - 2 * a2 ** 3 + 9 * a1 * a2 * a3) % p
    return PValue(pow(f, 3, p), pow(j, 2, p), p)


# ---------------------------------------------------------------------------
# projectivities


def normalize_matrix(M, p):
    flat = [x % p for row in M for x in row]
    for x in flat:
        if x != 0:
            s = pow(x, -1, p)
            flat = [y * s % p for y in flat]
            return (tuple(flat[0:3]), tuple(flat[3:6]), tuple(flat[6:9]))
    raise ValueError("zero matrix")


def det3(M, p):
    a, b, c = M[0]
    d, e, f = M[1]
    g, h, i = M[2]
    return (a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)) % p


def mat_mul(M, N, p):
    return tuple(
        tuple(sum(M[i][k] * N[k][j] for k in range(3)) % p for j in range(3))
        for i in range(3)
    )


def mat_inv(M, p):
    """Inverse via the adjugate; raises on singular matrices."""
    det = det3(M, p)
    if det == 0:
        raise ValueError("singular matrix")
    s = pow(det, -1, p)
    a, b, c = M[0]
    d, e, f = M[1]
    g, h, i = M[2]
    adj = (
        (e * i - f * h, c * h - b * i, b * f - c * e),
        (f * g - d * i, a * i - c * g, c * d - a * f),
        (d * h - e * g, b * g - a * h, a * e - b * d),
    )
    return tuple(tuple(x * s % p for x in row) for row in adj)


def apply_point(M, P, p):
    img = tuple(sum(M[i][j] * P[j] for j in range(3)) % p for i in range(3))
    return normalize(img, p)


def apply_line(M, line, p):
    """Image of a line under the point map M: coefficients go through M^-T."""
    Minv = mat_inv(M, p)
    img = tuple(sum(Minv[j][i] * line[j] for j in range(3)) % p for i in range(3))
    return normalize(img, p)


def perspectivity(T, axis, kappa, p):
    """The homology with center T, axis fixed pointwise, and ratio kappa.

    kappa is the cross-ratio (axis point, T, P, image of P) on any line
    through T; in the frame T=(0,0,1), axis Z=0 the map is
    (x, y) -> (kappa x, kappa y).  Requires T off the axis and
    kappa not in {0, 1}.
    """
    kappa %= p
    if kappa in (0, 1):
        raise ValueError("degenerate ratio kappa=%d" % kappa)
    pairing = dot(axis, T, p)
    if pairing == 0:
        raise ValueError("center lies on the axis")
    mu = (1 - kappa) * pow(pairing, -1, p) % p
    M = tuple(
        tuple((mu * T[i] * axis[j] + (kappa if i == j else 0)) % p for j in range(3))
        for i in range(3)
    )
    return normalize_matrix(M, p)
