"""Points and strata of the twisted product of SL_k flag varieties.

A point is a tuple of invertible rational matrices modulo the twisted
upper-triangular gauge (g_1, ..., g_n) ~ (g_1 b_1, b_1^{-1} g_2 b_2, ...).
Strata are labeled by (v, wbar): the factorwise Bruhat cells and the
opposite cell of the convolution product.

``CHECKED`` turns on theorem-level assertions on every call (the cell
parametrization lands in its stratum; the duality map permutes strata by
the book formula); acceptance runs with it on.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import ratlin, slk
from .ratlin import Mat
from .weyl import WeylElt, WeylGroup, from_perm, perm_of, positive_tuple, type_a_group

CHECKED = True


def set_checked(value: bool) -> bool:
    """Flip theorem-assertion mode; returns the previous value."""
    global CHECKED
    old = CHECKED
    CHECKED = bool(value)
    return old


@dataclass(frozen=True)
class ZPoint:
    """Tuple of SL_k factors representing a point of the twisted product."""

    factors: tuple[Mat, ...]

    def __post_init__(self):
        if not self.factors:
            raise ValueError("need at least one factor")
        k = len(self.factors[0])
        for g in self.factors:
            if len(g) != k:
                raise ValueError("factors of mixed sizes")
            if ratlin.det(g) == 0:
                raise ValueError("singular factor")

    @property
    def k(self) -> int:
        return len(self.factors[0])

    @property
    def n(self) -> int:
        return len(self.factors)

    def to_json(self) -> dict:
        return {"factors": [ratlin.mat_to_json(g) for g in self.factors]}

    @classmethod
    def from_json(cls, data: dict) -> "ZPoint":
        return cls(tuple(ratlin.mat_from_json(g) for g in data["factors"]))


def gauge_eq(z1: ZPoint, z2: ZPoint) -> bool:
    """Equality modulo the twisted gauge, by solving for the chain of b_i."""
    if z1.k != z2.k or z1.n != z2.n:
        return False
    b = ratlin.identity(z1.k)
    for g, h in zip(z1.factors, z2.factors):
        # h_i = b_{i-1}^{-1} g_i b_i  =>  b_i = g_i^{-1} b_{i-1} h_i
        b = ratlin.mat_mul(ratlin.mat_inv(g), b, h)
        if not ratlin.is_upper_triangular(b):
            return False
    return True


def stratum(z: ZPoint) -> tuple[WeylElt, tuple[WeylElt, ...]]:
    """(v, wbar): factorwise Bruhat cells and the opposite cell of the product."""
    group = type_a_group(z.k)
    wbar = tuple(from_perm(group, slk.bruhat_cell(g)) for g in z.factors)
    v = from_perm(group, slk.opposite_cell(ratlin.mat_mul(*z.factors)))
    return v, wbar


def nonempty(v: WeylElt, wbar) -> bool:
    """The stratum (v, wbar) is nonempty iff v is below the Demazure product."""
    group = v.group
    wbar = tuple(wbar)
    group.check_same(v, *wbar)
    return group.bruhat_leq(v, group.m_star(wbar))


def convolution(z: ZPoint) -> slk.FlagPoint:
    return slk.FlagPoint(ratlin.mat_mul(*z.factors))


def alpha(z: ZPoint) -> tuple[slk.FlagPoint, ...]:
    """Partial-product flags (g_1 B+, g_1 g_2 B+, ...); gauge-invariant."""
    out = []
    acc = None
    for g in z.factors:
        acc = g if acc is None else ratlin.mat_mul(acc, g)
        out.append(slk.FlagPoint(acc))
    return tuple(out)


def parametrize_cell(
    v: WeylElt,
    wbar,
    params,
    words=None,
    check: bool | None = None,
) -> ZPoint:
    """Positive parametrization of the stratum (v, wbar) of SL_k products.

    ``words`` optionally fixes a reduced word per factor (0-based letters);
    the canonical words are used otherwise.  ``params`` supplies one
    positive rational per skipped letter, across factors left to right.
    """
    group = v.group
    wbar = tuple(wbar)
    k = group.rank + 1
    if not nonempty(v, wbar):
        raise ValueError("empty stratum: v is not below the Demazure product")
    if words is None:
        words = [w.word for w in wbar]
    words = [tuple(word) for word in words]
    if len(words) != len(wbar):
        raise ValueError("need one reduced word per factor")
    for w, word in zip(wbar, words):
        if group.from_word(word) != w or len(word) != w.length:
            raise ValueError(f"{word!r} is not a reduced word of {w.describe()}")
    vbar = positive_tuple(v, wbar)
    dim = sum(w.length for w in wbar) - v.length
    params = [Fraction(p) for p in params]
    if len(params) != dim:
        raise ValueError(f"cell has dimension {dim}, got {len(params)} parameters")
    if any(p <= 0 for p in params):
        raise ValueError("parameters must be positive")
    do_check = CHECKED if check is None else check
    factors = []
    pos = 0
    for vi, word in zip(vbar, words):
        sub = group.positive_subexpression(vi, word)
        need = len(word) - vi.length
        chunk = params[pos:pos + need]
        pos += need
        factors.append(
            slk.mr_matrix(
                k,
                tuple(t + 1 for t in word),
                tuple(None if t is None else t + 1 for t in sub),
                chunk,
                check=do_check,
            )
        )
    z = ZPoint(tuple(factors))
    if do_check and stratum(z) != (v, wbar):
        raise AssertionError("parametrized point landed outside its stratum")
    return z


def phi_Z(z: ZPoint, check: bool | None = None) -> ZPoint:
    """Duality: (g_1,...,g_n) -> (iota(w0dot^{-1} g_1...g_n), iota(g_n^{-1}), ...).

    In checked mode the stratum permutation
    (v, (w_1,...,w_n)) -> (w0 w_1, (w0 v, w_n^{-1}, ..., w_2^{-1}))
    is asserted on every call.
    """
    k = z.k
    do_check = CHECKED if check is None else check
    if do_check:
        v, wbar = stratum(z)
    prod = ratlin.mat_mul(*z.factors)
    first = slk.iota(ratlin.mat_mul(ratlin.mat_inv(slk.w0_dot(k)), prod))
    rest = [slk.iota(ratlin.mat_inv(g)) for g in reversed(z.factors[1:])]
    out = ZPoint((first, *rest))
    if do_check:
        group = v.group
        w0 = from_perm(group, slk.w0_perm(k))
        expected = (
            group.multiply(w0, wbar[0]),
            (group.multiply(w0, v),)
            + tuple(group.inverse(w) for w in reversed(wbar[1:])),
        )
        if stratum(out) != expected:
            raise AssertionError("duality image landed outside the predicted stratum")
    return out


def double_bruhat_embed(g: Mat) -> ZPoint:
    """Embedding of the reduced double Bruhat cell: g -> (g, w0dot)."""
    return ZPoint((g, slk.w0_dot(len(g))))


def db_positive(k: int, v_word, w_word, params) -> Mat:
    """Totally positive double-Bruhat point: y's over the w word, x's over v's.

    ``v_word`` and ``w_word`` are reduced words with 1-based letters; the
    parameter list supplies l(w) values for the y's then l(v) values for
    the x's.  The output is asserted totally nonnegative.
    """
    v_word = tuple(v_word)
    w_word = tuple(w_word)
    params = [Fraction(p) for p in params]
    if len(params) != len(v_word) + len(w_word):
        raise ValueError(f"need {len(v_word) + len(w_word)} parameters")
    if any(p <= 0 for p in params):
        raise ValueError("parameters must be positive")
    out = ratlin.identity(k)
    it = iter(params)
    for j in w_word:
        out = ratlin.mat_mul(out, slk.y_gen(k, j, next(it)))
    for i in v_word:
        out = ratlin.mat_mul(out, slk.x_gen(k, i, next(it)))
    if not slk.is_tnn(out):
        raise AssertionError("double Bruhat product is not totally nonnegative")
    return out


def db_stratum_convention(
    group: WeylGroup, v: WeylElt, w: WeylElt
) -> tuple[WeylElt, tuple[WeylElt, WeylElt]]:
    """Recorded stratum of the embedded cell with double-Bruhat labels (v, w).

    Observed on exact samples: (g, w0dot) lies in the stratum
    (v w0, (w, w0)).  Tests pin this observation.
    """
    w0 = from_perm(group, slk.w0_perm(group.rank + 1))
    return group.multiply(v, w0), (w, w0)


def generic_bounds(u: WeylElt, v: WeylElt, w: WeylElt) -> tuple[WeylElt, WeylElt]:
    """Generic opposite/forward cells over a diagonal-orbit stratum.

    Returns (w circ_r u^{-1}, v * u): the labels of the dense pair of
    Schubert cells meeting the stratum indexed by (u, v, w).
    """
    group = u.group
    group.check_same(u, v, w)
    return group.circ_r(w, group.inverse(u)), group.demazure(v, u)


def random_gauge(k: int, rng) -> Mat:
    """Random unit-determinant upper triangular matrix (test utility)."""
    diag = [Fraction(rng.randint(1, 20), rng.randint(1, 20)) for _ in range(k - 1)]
    last = Fraction(1)
    for d in diag:
        last /= d
    diag.append(last)
    rows = []
    for r in range(k):
        row = []
        for c in range(k):
            if r == c:
                row.append(diag[r])
            elif r < c:
                row.append(Fraction(rng.randint(-20, 20), rng.randint(1, 20)))
            else:
                row.append(Fraction(0))
        rows.append(tuple(row))
    return tuple(rows)


def perturb_gauge(z: ZPoint, rng) -> ZPoint:
    """Random twisted-gauge perturbation of a point (test utility)."""
    k = z.k
    bs = [random_gauge(k, rng) for _ in range(z.n)]
    factors = []
    prev_inv = ratlin.identity(k)
    for g, b in zip(z.factors, bs):
        factors.append(ratlin.mat_mul(prev_inv, g, b))
        prev_inv = ratlin.mat_inv(b)
    return ZPoint(tuple(factors))


def random_params(count: int, rng) -> list[Fraction]:
    """Positive rationals p/q with 1 <= p, q <= 20 from a seeded generator."""
    return [Fraction(rng.randint(1, 20), rng.randint(1, 20)) for _ in range(count)]
