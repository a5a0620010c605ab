"""Numeric cross-checks on representation spaces.

Generators are sent to exact-rational N x N matrices; words evaluate by
matrix multiplication and elements by linearity.  Because every coefficient
is an exact rational, the trace identities implied by the symbolic axioms
can be asserted with equality -- there are no tolerances anywhere.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .freealg import Element, FreeAlgebra
from .bracket import BracketSpec
from .axioms import VerificationReport, Witness, check_double_poisson

# matrices are tuples of row tuples of Fractions


def mat_identity(n):
    return tuple(
        tuple(Fraction(1) if i == j else Fraction(0) for j in range(n)) for i in range(n)
    )


def mat_mul(a, b):
    n = len(a)
    bt = tuple(zip(*b))
    return tuple(
        tuple(sum(ra[k] * cb[k] for k in range(n)) for cb in bt) for ra in a
    )


def mat_trace(a):
    return sum(a[i][i] for i in range(len(a)))


def mat_inverse(a):
    """Exact inverse by Gauss-Jordan elimination, or None when singular."""
    n = len(a)
    m = [list(row) + [Fraction(1) if i == j else Fraction(0) for j in range(n)] for i, row in enumerate(a)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            return None
        m[col], m[pivot] = m[pivot], m[col]
        pv = m[col][col]
        m[col] = [x / pv for x in m[col]]
        for r in range(n):
            if r != col and m[r][col]:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return tuple(tuple(row[n:]) for row in m)


@dataclass
class MatrixPoint:
    """One exact-rational point of the N-dimensional representation space.

    ``mats`` maps each positive generator index to its matrix; matrices for
    inverted generators have exact stored inverses, computed by elimination.
    A word -> matrix cache makes repeated evaluation cheap.
    """

    algebra: FreeAlgebra
    size: int
    mats: dict
    invs: dict = field(default_factory=dict)
    _words: dict = field(default_factory=dict, repr=False)
    _traces: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        for i in range(1, self.algebra.d + 1):
            if i not in self.mats:
                raise ValueError(f"missing matrix for generator {i}")
        for i in self.algebra.inverted:
            if i not in self.invs:
                inv = mat_inverse(self.mats[i])
                if inv is None:
                    raise ValueError(f"matrix for generator {i} is singular")
                self.invs[i] = inv
        self._words[()] = mat_identity(self.size)

    @classmethod
    def random(cls, algebra: FreeAlgebra, size: int, seed: int) -> "MatrixPoint":
        """Seeded sample with entries p/q, p in [-9,9], q in [1,9]; matrices
        for inverted generators are redrawn until exactly nonsingular."""
        rng = random.Random(seed)

        def draw():
            return tuple(
                tuple(Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(size))
                for _ in range(size)
            )

        mats, invs = {}, {}
        for i in range(1, algebra.d + 1):
            m = draw()
            if i in algebra.inverted:
                inv = mat_inverse(m)
                while inv is None:
                    m = draw()
                    inv = mat_inverse(m)
                invs[i] = inv
            mats[i] = m
        return cls(algebra, size, mats, invs)

    def letter_matrix(self, g: int):
        if g > 0:
            return self.mats[g]
        if -g not in self.invs:
            raise ValueError(f"no stored inverse for generator {-g}")
        return self.invs[-g]

    def word_matrix(self, w):
        m = self._words.get(w)
        if m is None:
            m = mat_mul(self.word_matrix(w[:-1]), self.letter_matrix(w[-1]))
            self._words[w] = m
        return m

    def word_trace(self, w):
        t = self._traces.get(w)
        if t is None:
            t = mat_trace(self.word_matrix(w))
            self._traces[w] = t
        return t


def eval_element(x: Element, p: MatrixPoint):
    """Evaluate an element at the point: multiplicative on words, linear."""
    if x.algebra != p.algebra:
        raise ValueError("algebra mismatch")
    n = p.size
    out = [[Fraction(0)] * n for _ in range(n)]
    for w, c in x.terms.items():
        m = p.word_matrix(w)
        for i in range(n):
            row = out[i]
            mr = m[i]
            for j in range(n):
                row[j] += c * mr[j]
    return tuple(tuple(row) for row in out)


def eval_trace(x: Element, p: MatrixPoint):
    if x.algebra != p.algebra:
        raise ValueError("algebra mismatch")
    return sum((c * p.word_trace(w) for w, c in x.terms.items()), Fraction(0))


def induced_trace_bracket(spec: BracketSpec, a: Element, b: Element, p: MatrixPoint):
    """tr({a, b}) at the point: the induced bracket of trace functions."""
    return eval_trace(spec.mbracket(a, b), p)


def check_induced_poisson(spec: BracketSpec, p: MatrixPoint, maxdeg: int = 3,
                          all_witnesses: bool = False) -> VerificationReport:
    """Trace-level skew symmetry and Jacobi identity at one matrix point.

    For all monomials a, b, c of degree <= maxdeg (units are trivial and
    skipped): tr({a,b} + {b,a}) == 0 and tr({a,{b,c}} - {b,{a,c}} - {{a,b},c})
    == 0, exactly over the rationals.
    """
    alg = spec.algebra
    words = alg.words_up_to(maxdeg, include_unit=False)
    ids = [spec._wid(w) for w in words]
    witnesses = []
    mb = spec._mb_ids
    pairs = 0
    word_of = spec._id_words
    trace_of = {}  # word id -> Fraction at this point
    mb_trace = {}  # (uid, wid) -> tr({u, w}) at this point

    def wtr(wid):
        t = trace_of.get(wid)
        if t is None:
            t = p.word_trace(word_of[wid])
            trace_of[wid] = t
        return t

    def mbt(uid, wid):
        t = mb_trace.get((uid, wid))
        if t is None:
            t = sum((c * wtr(k) for k, c in mb(uid, wid).items()), Fraction(0))
            mb_trace[(uid, wid)] = t
        return t

    def _name(wid):
        return alg.render_word(word_of[wid])

    for ai, a in enumerate(ids):
        for b in ids[ai:]:
            pairs += 1
            t = mbt(a, b) + mbt(b, a)
            if t:
                witnesses.append(Witness((_name(a), _name(b)), "0", str(t), str(t)))
                if not all_witnesses:
                    return VerificationReport(
                        "induced_trace_skew",
                        False,
                        {"algebra": alg.describe(), "size": p.size, "maxdeg": maxdeg, "pairs": pairs},
                        witnesses,
                    )
    skew_ok = not witnesses
    triples = 0
    for a in ids:
        for b in ids:
            inner_ab = list(mb(a, b).items())
            for c in ids:
                triples += 1
                t = Fraction(0)
                for w, cw in mb(b, c).items():
                    t += cw * mbt(a, w)
                for w, cw in mb(a, c).items():
                    t -= cw * mbt(b, w)
                for w, cw in inner_ab:
                    t -= cw * mbt(w, c)
                if t:
                    witnesses.append(
                        Witness((_name(a), _name(b), _name(c)), "0", str(t), str(t))
                    )
                    if not all_witnesses:
                        return VerificationReport(
                            "induced_trace_poisson",
                            False,
                            {
                                "algebra": alg.describe(),
                                "size": p.size,
                                "maxdeg": maxdeg,
                                "pairs": pairs,
                                "triples": triples,
                            },
                            witnesses,
                        )
    return VerificationReport(
        "induced_trace_poisson",
        skew_ok and not witnesses,
        {
            "algebra": alg.describe(),
            "size": p.size,
            "maxdeg": maxdeg,
            "pairs": pairs,
            "triples": triples,
        },
        witnesses,
    )


def coordinate_bracket(spec: BracketSpec, a: Element, b: Element, p: MatrixPoint):
    """Entrywise bracket {a_ij, b_uv} of matrix coordinate functions.

    Only defined for brackets passing the double Poisson check (trivial
    weight); for nonzero weights only trace functions carry an induced
    bracket.  Returns a nested tuple indexed [i][j][u][v].
    """
    if not check_double_poisson(spec).passed:
        raise ValueError("coordinate brackets require a double Poisson bracket")
    n = p.size
    u = spec.dbracket(a, b)
    out = [[[[Fraction(0)] * n for _ in range(n)] for _ in range(n)] for _ in range(n)]
    for (w1, w2), c in u.terms.items():
        m1 = p.word_matrix(w1)
        m2 = p.word_matrix(w2)
        for i in range(n):
            for j in range(n):
                for uu in range(n):
                    for v in range(n):
                        # {a_ij, b_uv} = <<a,b>>'_uj <<a,b>>''_iv
                        out[i][j][uu][v] += c * m1[uu][j] * m2[i][v]
    return tuple(tuple(tuple(tuple(r) for r in plane) for plane in block) for block in out)
