"""Weyl-group arithmetic over any generalized Cartan matrix.

Elements are stored as integer matrices of the geometric representation
acting on the simple-root basis, together with the matrix of the inverse.
That representation is faithful for every Coxeter group attached to a GCM,
so it also covers the infinite groups produced by thickening, where
one-line permutation models do not exist.

Each :class:`WeylGroup` interns its elements: equal group elements are the
same object and carry the same canonical reduced word (the
lexicographically smallest one, obtained by repeatedly stripping the
smallest left descent).

Letters of words are 0-based positions into ``gcm.labels``.  A
subexpression of a word is a tuple of the same length whose entries are
either the original letter or ``None`` (the identity placeholder).
"""

from __future__ import annotations

from .cartan import GeneralizedCartanMatrix, thicken

IntMat = tuple[tuple[int, ...], ...]
Word = tuple[int, ...]
SubWord = tuple  # entries: int letter or None placeholder

# safety rail for runaway canonicalization, not a semantic limit
_MAX_CANONICAL_LEN = 10_000
# memo caches are cleared when they exceed this many entries
_CACHE_CAP = 1 << 21


class ContextMismatchError(ValueError):
    """Raised when elements from different Weyl groups are combined."""


def _mat_mul(a: IntMat, b: IntMat) -> IntMat:
    n = len(a)
    rng = range(n)
    return tuple(
        tuple(sum(a[i][t] * b[t][j] for t in rng) for j in rng) for i in rng
    )


def _identity_mat(n: int) -> IntMat:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


class WeylElt:
    """Immutable group element: geometric matrix, inverse, canonical word."""

    __slots__ = ("group", "geom", "geom_inv", "word", "length", "serial")

    def __init__(self, group, geom, geom_inv, word, serial):
        self.group = group
        self.geom = geom
        self.geom_inv = geom_inv
        self.word = word
        self.length = len(word)
        self.serial = serial

    def __eq__(self, other):
        if self is other:
            return True
        return (
            isinstance(other, WeylElt)
            and self.group is other.group
            and self.geom == other.geom
        )

    def __hash__(self):
        return hash((id(self.group), self.geom))

    def __repr__(self):
        return f"W[{self.describe()}]"

    def describe(self) -> str:
        """Human-readable word, e.g. ``s1*s2``; ``e`` for the identity."""
        if not self.word:
            return "e"
        labels = self.group.gcm.labels
        return "*".join(f"s{labels[i]}" for i in self.word)

    def inverse(self) -> "WeylElt":
        return self.group._intern(self.geom_inv, self.geom)

    def __mul__(self, other) -> "WeylElt":
        return self.group.multiply(self, other)


class WeylGroup:
    """Context object owning element interning and memo caches."""

    def __init__(self, gcm: GeneralizedCartanMatrix, base: "WeylGroup | None" = None):
        self.gcm = gcm
        self.rank = gcm.rank
        self.base = base
        self.inf_positions = gcm.inf_positions()
        m = self.rank
        refl = []
        for i in range(m):
            rows = []
            for r in range(m):
                if r != i:
                    rows.append(tuple(1 if c == r else 0 for c in range(m)))
                else:
                    rows.append(tuple(
                        (1 if c == i else 0) - gcm.entries[i][c] for c in range(m)
                    ))
            refl.append(tuple(rows))
        self._refl: tuple[IntMat, ...] = tuple(refl)
        self._id = _identity_mat(m)
        self._elts: dict[IntMat, WeylElt] = {}
        self._mul_cache: dict[tuple[int, int], WeylElt] = {}
        self._bruhat_cache: dict[tuple[int, int], bool] = {}
        self._lower_cache: dict[int, tuple] = {}
        self._thickened: dict[int, WeylGroup] = {}
        self.identity = self._intern(self._id, self._id)
        self._simples = tuple(
            self._intern(self._refl[i], self._refl[i]) for i in range(m)
        )

    def __repr__(self):
        return f"WeylGroup({'x'.join(self.gcm.labels)})"

    # -- interning and canonical words ------------------------------------

    def _intern(self, geom: IntMat, geom_inv: IntMat) -> WeylElt:
        elt = self._elts.get(geom)
        if elt is None:
            word = self._canonical_word(geom, geom_inv)
            elt = WeylElt(self, geom, geom_inv, word, len(self._elts))
            self._elts[geom] = elt
        return elt

    def _canonical_word(self, geom: IntMat, geom_inv: IntMat) -> Word:
        """Lexicographically smallest reduced word, by left-descent stripping."""
        letters = []
        g, gi = geom, geom_inv
        m = self.rank
        while g != self._id:
            for i in range(m):
                if all(gi[r][i] <= 0 for r in range(m)):
                    break
            else:
                raise ArithmeticError("non-identity element has no left descent")
            g = _mat_mul(self._refl[i], g)
            gi = _mat_mul(gi, self._refl[i])
            letters.append(i)
            if len(letters) > _MAX_CANONICAL_LEN:
                raise ArithmeticError("canonical word exceeds safety cap")
        return tuple(letters)

    # -- basic group operations -------------------------------------------

    def simple(self, i: int) -> WeylElt:
        return self._simples[i]

    def check_same(self, *elts: WeylElt) -> None:
        for e in elts:
            if e.group is not self:
                raise ContextMismatchError(f"{e!r} belongs to {e.group!r}, not {self!r}")

    def multiply(self, u: WeylElt, v: WeylElt) -> WeylElt:
        self.check_same(u, v)
        key = (u.serial, v.serial)
        out = self._mul_cache.get(key)
        if out is None:
            out = self._intern(_mat_mul(u.geom, v.geom), _mat_mul(v.geom_inv, u.geom_inv))
            if len(self._mul_cache) > _CACHE_CAP:
                self._mul_cache.clear()
            self._mul_cache[key] = out
        return out

    def inverse(self, u: WeylElt) -> WeylElt:
        self.check_same(u)
        return self._intern(u.geom_inv, u.geom)

    def from_word(self, letters) -> WeylElt:
        out = self.identity
        for i in letters:
            if i is None:
                continue
            out = self.multiply(out, self._simples[i])
        return out

    # -- descents and length comparisons ----------------------------------

    def has_left_descent(self, w: WeylElt, i: int) -> bool:
        """True iff l(s_i w) < l(w), read off the sign of w^{-1}(alpha_i)."""
        gi = w.geom_inv
        return all(gi[r][i] <= 0 for r in range(self.rank))

    def has_right_descent(self, w: WeylElt, i: int) -> bool:
        """True iff l(w s_i) < l(w), read off the sign of w(alpha_i)."""
        g = w.geom
        return all(g[r][i] <= 0 for r in range(self.rank))

    def left_descents(self, w: WeylElt) -> set[int]:
        self.check_same(w)
        return {i for i in range(self.rank) if self.has_left_descent(w, i)}

    def right_descents(self, w: WeylElt) -> set[int]:
        self.check_same(w)
        return {i for i in range(self.rank) if self.has_right_descent(w, i)}

    # -- Bruhat order -------------------------------------------------------

    def bruhat_leq(self, v: WeylElt, w: WeylElt) -> bool:
        """Bruhat order via the left-descent recursion, memoized."""
        self.check_same(v, w)
        if v.length > w.length:
            return False
        if v.length == 0:
            return True
        if v.length == w.length:
            return v is w
        key = (v.serial, w.serial)
        cached = self._bruhat_cache.get(key)
        if cached is not None:
            return cached
        i = w.word[0]  # canonical word starts with the smallest left descent
        s = self._simples[i]
        sw = self.multiply(s, w)
        if self.has_left_descent(v, i):
            res = self.bruhat_leq(self.multiply(s, v), sw)
        else:
            res = self.bruhat_leq(v, sw)
        if len(self._bruhat_cache) > _CACHE_CAP:
            self._bruhat_cache.clear()
        self._bruhat_cache[key] = res
        return res

    def lower_interval(self, w: WeylElt) -> tuple[WeylElt, ...]:
        """All u <= w, as subword products of the canonical word of w."""
        self.check_same(w)
        cached = self._lower_cache.get(w.serial)
        if cached is None:
            elems = {self.identity}
            for t in w.word:
                s = self._simples[t]
                elems |= {self.multiply(u, s) for u in elems}
            cached = tuple(sorted(elems, key=lambda u: (u.length, u.word)))
            if len(self._lower_cache) > 4096:
                self._lower_cache.clear()
            self._lower_cache[w.serial] = cached
        return cached

    def elements_up_to_length(self, cap: int) -> list[WeylElt]:
        """All elements of length <= cap (BFS; the group may be infinite)."""
        layer = [self.identity]
        seen = {self.identity}
        out = [self.identity]
        for _ in range(cap):
            nxt = []
            for u in layer:
                for i in range(self.rank):
                    if not self.has_right_descent(u, i):
                        v = self.multiply(u, self._simples[i])
                        if v not in seen:
                            seen.add(v)
                            nxt.append(v)
            out.extend(nxt)
            layer = nxt
        return out

    # -- monoid structure ----------------------------------------------------

    def demazure(self, x: WeylElt, y: WeylElt) -> WeylElt:
        """Demazure product x * y, greedy over the canonical word of y."""
        self.check_same(x, y)
        u = x
        for t in y.word:
            if not self.has_right_descent(u, t):
                u = self.multiply(u, self._simples[t])
        return u

    def m_star(self, ws) -> WeylElt:
        out = None
        for w in ws:
            out = w if out is None else self.demazure(out, w)
        if out is None:
            raise ValueError("empty tuple")
        return out

    def m_bullet(self, ws) -> WeylElt:
        out = None
        for w in ws:
            out = w if out is None else self.multiply(out, w)
        if out is None:
            raise ValueError("empty tuple")
        return out

    def circ_r(self, y: WeylElt, x: WeylElt) -> WeylElt:
        """min{y u : u <= x}, greedy over the canonical word of x."""
        self.check_same(y, x)
        u = y
        for t in x.word:
            if self.has_right_descent(u, t):
                u = self.multiply(u, self._simples[t])
        return u

    # -- positive subexpressions ----------------------------------------------

    def assert_reduced(self, word) -> WeylElt:
        w = self.from_word(word)
        if w.length != len(tuple(t for t in word if t is not None)):
            raise ValueError(f"word {word!r} is not reduced")
        return w

    def positive_subexpression(self, v: WeylElt, word) -> SubWord:
        """The unique positive subexpression for v in the reduced word.

        Scans right to left keeping u = v; a letter is taken exactly when it
        is a right descent of the current u.  Fails when v is not below the
        product of the word.  The defining positivity condition (every
        prefix ascends at the following letter of the full word) is
        re-checked on the output.
        """
        self.check_same(v)
        word = tuple(word)
        self.assert_reduced(word)
        u = v
        taken: list = [None] * len(word)
        for pos in range(len(word) - 1, -1, -1):
            t = word[pos]
            if self.has_right_descent(u, t):
                u = self.multiply(u, self._simples[t])
                taken[pos] = t
        if u is not self.identity:
            raise ValueError("element is not below the word in Bruhat order")
        prefix = self.identity
        for pos, t in enumerate(word):
            if self.has_right_descent(prefix, t):
                raise AssertionError("greedy output violates the positivity condition")
            if taken[pos] is not None:
                prefix = self.multiply(prefix, self._simples[t])
        if prefix != v:
            raise AssertionError("taken letters do not multiply back to v")
        return tuple(taken)

    # -- thickening ------------------------------------------------------------

    def thickened(self, n: int) -> "WeylGroup":
        """The Weyl group of thicken(gcm, n), cached per n."""
        if n == 1:
            return self
        tg = self._thickened.get(n)
        if tg is None:
            tg = WeylGroup(thicken(self.gcm, n), base=self)
            self._thickened[n] = tg
        return tg


def is_positive_subexpression(group: WeylGroup, word, sub) -> bool:
    """Check the positivity condition of an arbitrary subexpression."""
    prefix = group.identity
    for pos, t in enumerate(word):
        if group.has_right_descent(prefix, t):
            return False
        if sub[pos] is not None:
            if sub[pos] != t:
                raise ValueError("subexpression letter differs from the word")
            prefix = group.multiply(prefix, group.simple(t))
    return True


# -- maps into a thickened group ------------------------------------------------


def i_embed(tgroup: WeylGroup, v: WeylElt) -> WeylElt:
    """Reinterpret v inside the parabolic on the original vertices."""
    if tgroup.base is None or v.group is not tgroup.base:
        raise ContextMismatchError("target is not a thickening of the element's group")
    out = tgroup.from_word(v.word)
    if out.length != v.length:
        raise AssertionError("parabolic embedding changed the length")
    return out


def th_word(tgroup: WeylGroup, wbar) -> Word:
    """Reduced words of the factors interleaved with the inf letters."""
    wbar = tuple(wbar)
    n = len(wbar)
    if n == 1 and wbar[0].group is tgroup:
        return wbar[0].word  # nothing to interleave
    if tgroup.base is None:
        raise ContextMismatchError("target group is not thickened")
    for w in wbar:
        if w.group is not tgroup.base:
            raise ContextMismatchError("tuple entry from a different group")
    if len(tgroup.inf_positions) != n - 1:
        raise ContextMismatchError(
            f"thickened group has {len(tgroup.inf_positions)} inf vertices, need {n - 1}"
        )
    letters: list[int] = []
    for idx, w in enumerate(wbar):
        letters.extend(w.word)
        if idx < n - 1:
            letters.append(tgroup.inf_positions[idx])
    return tuple(letters)


def th_element(tgroup: WeylGroup, wbar) -> WeylElt:
    """th(wbar); the interleaved word is checked to be reduced."""
    wbar = tuple(wbar)
    word = th_word(tgroup, wbar)
    out = tgroup.from_word(word)
    if out.length != sum(w.length for w in wbar) + len(wbar) - 1:
        raise AssertionError("interleaved word is not reduced")
    return out


def i_word(wbar) -> SubWord:
    """Factor words interleaved with placeholders, an expression of the product."""
    wbar = tuple(wbar)
    letters: list = []
    for idx, w in enumerate(wbar):
        letters.extend(w.word)
        if idx < len(wbar) - 1:
            letters.append(None)
    return tuple(letters)


def positive_tuple(v: WeylElt, wbar) -> tuple[WeylElt, ...]:
    """The unique tuple below wbar, positive in wbar, with product v.

    Computed as the positive subexpression of the embedded v inside the
    interleaved thickened word, split back at factor boundaries.
    """
    wbar = tuple(wbar)
    group = v.group
    group.check_same(v, *wbar)
    n = len(wbar)
    if n == 1:
        if not group.bruhat_leq(v, wbar[0]):
            raise ValueError("v is not below the single factor")
        return (v,)
    if not group.bruhat_leq(v, group.m_star(wbar)):
        raise ValueError("v is not below the Demazure product of the tuple")
    tg = group.thickened(n)
    word = th_word(tg, wbar)
    th_element(tg, wbar)  # validates reducedness of the interleaving
    sub = tg.positive_subexpression(i_embed(tg, v), word)
    parts: list[WeylElt] = []
    pos = 0
    for idx, w in enumerate(wbar):
        block = sub[pos:pos + w.length]
        parts.append(group.from_word(t for t in block if t is not None))
        pos += w.length
        if idx < n - 1:
            if sub[pos] is not None:
                raise AssertionError("positive subexpression took an inf letter")
            pos += 1
    vbar = tuple(parts)
    if group.m_bullet(vbar) != v or group.m_star(vbar) != v:
        raise AssertionError("tuple does not multiply back to v")
    for vi, wi in zip(vbar, wbar):
        if not group.bruhat_leq(vi, wi):
            raise AssertionError("tuple entry escapes its factor interval")
    return vbar


# -- type A bridge ----------------------------------------------------------------

_TYPE_A: dict[int, WeylGroup] = {}


def type_a_group(k: int) -> WeylGroup:
    """The Weyl group of SL_k (the A_{k-1} context), cached per k."""
    if k < 2:
        raise ValueError("k must be >= 2")
    g = _TYPE_A.get(k)
    if g is None:
        from .cartan import cartan_of_type

        g = WeylGroup(cartan_of_type("A", k - 1))
        _TYPE_A[k] = g
    return g


def perm_of(w: WeylElt) -> tuple[int, ...]:
    """One-line permutation (1-based values) of a type A element."""
    k = w.group.rank + 1
    p = list(range(1, k + 1))
    for t in w.word:
        p[t], p[t + 1] = p[t + 1], p[t]
    return tuple(p)


def from_perm(group: WeylGroup, p) -> WeylElt:
    """Type A element with one-line form p (1-based values)."""
    p = tuple(p)
    k = group.rank + 1
    if sorted(p) != list(range(1, k + 1)):
        raise ValueError(f"not a permutation of 1..{k}: {p!r}")
    q = list(p)
    word = []
    while True:
        for i in range(k - 1):
            if q.index(i + 1) > q.index(i + 2):
                break
        else:
            break
        a, b = q.index(i + 1), q.index(i + 2)
        q[a], q[b] = q[b], q[a]
        word.append(i)
    return group.from_word(word)
