"""Decision procedures for the bracket axiom systems.

Every check returns a :class:`VerificationReport`: axiom name, pass/fail,
the parameters of the sweep, and (on failure) counterexample witnesses with
the offending inputs and the exact nonzero residual.  Reports are
deterministic: the same spec and bounds yield byte-identical JSON.

Generator-level checks (cyclic skew, weight, mixed type, Poisson property)
are sufficient for the corresponding axiom on the whole algebra because the
brackets are Leibniz extensions; the bounded-degree sweeps (``check_h0_skew``,
``check_jacobi``) are deliberately independent brute force over monomials.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from .freealg import (
    Element,
    Tensor2,
    _merge_term,
    concat,
    inner_act,
    otimes1_right,
    pure_t2,
)
from .bracket import BracketSpec

HALF = Fraction(1, 2)


# ---------------------------------------------------------------------------
# reports


@dataclass(frozen=True)
class Witness:
    inputs: tuple
    expected: str
    actual: str
    residual: str

    def as_dict(self):
        return {
            "inputs": list(self.inputs),
            "expected": self.expected,
            "actual": self.actual,
            "residual": self.residual,
        }


@dataclass
class VerificationReport:
    axiom: str
    passed: bool
    params: dict = field(default_factory=dict)
    witnesses: list = field(default_factory=list)

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"

    def as_dict(self):
        return {
            "schema": "ncdb-report/1",
            "axiom": self.axiom,
            "status": self.status,
            "params": self.params,
            "witnesses": [w.as_dict() for w in self.witnesses],
        }

    def to_json(self, indent=None) -> str:
        return json.dumps(self.as_dict(), indent=indent, sort_keys=True)

    def summary(self) -> str:
        head = f"{self.status.upper():4s} {self.axiom}"
        extras = ", ".join(f"{k}={v}" for k, v in sorted(self.params.items()) if k != "algebra")
        if extras:
            head += f"  [{extras}]"
        if self.witnesses:
            w = self.witnesses[0]
            head += f"\n     witness {w.inputs}: residual {w.residual}"
        return head


@dataclass(frozen=True)
class MixedType:
    """Quadratic skew-defect coefficients: a symmetric matrix on the
    factor-swap terms and a skew matrix (zero diagonal) on the one-sided
    product terms."""

    sym: tuple
    skew: tuple

    def __post_init__(self):
        d = len(self.sym)
        sym = tuple(tuple(row) for row in self.sym)
        skew = tuple(tuple(row) for row in self.skew)
        object.__setattr__(self, "sym", sym)
        object.__setattr__(self, "skew", skew)
        if any(len(r) != d for r in sym) or len(skew) != d or any(len(r) != d for r in skew):
            raise ValueError("matrices must be square of the same size")
        for i in range(d):
            if skew[i][i] != 0:
                raise ValueError("skew part must have zero diagonal")
            for j in range(d):
                if sym[i][j] != sym[j][i]:
                    raise ValueError("first matrix must be symmetric")
                if skew[i][j] != -skew[j][i]:
                    raise ValueError("second matrix must be skew-symmetric")

    @property
    def d(self):
        return len(self.sym)


# ---------------------------------------------------------------------------
# helpers


def _letter_pairs(spec: BracketSpec):
    return spec.algebra.letters


def skew_defect(spec: BracketSpec, x: int, y: int) -> Tensor2:
    """<<x, y>> + flip(<<y, x>>) on single letters."""
    return spec.letter_bracket(x, y) + spec.letter_bracket(y, x).flip()


def weight_rhs(spec: BracketSpec, x: int, y: int, lx, ly) -> Tensor2:
    """The prescribed quadratic skew defect for letters of weights lx, ly."""
    alg = spec.algebra
    wx, wy = (x,), (y,)
    half_sum = Fraction(lx + ly) * HALF
    half_diff = Fraction(lx - ly) * HALF
    terms = {}
    if half_sum:
        _merge_term(terms, (wx, wy), half_sum)
        _merge_term(terms, (wy, wx), -half_sum)
    if half_diff:
        _merge_term(terms, ((), concat(wx, wy)), half_diff)
        _merge_term(terms, (concat(wy, wx), ()), -half_diff)
    return Tensor2(alg, terms)


def poisson_rhs(spec: BracketSpec, x: int, y: int, z: int, lx, ly):
    """Prescribed double Jacobiator value on a letter triple of weights lx, ly."""
    alg = spec.algebra
    u = spec.letter_bracket(x, z)
    half_sum = Fraction(lx + ly) * HALF
    half_diff = Fraction(lx - ly) * HALF
    rhs = alg.zero_t3()
    if half_sum and u:
        rhs = rhs - otimes1_right(alg.letter_elt(y), u).scale(half_sum)
    if half_diff and u:
        shifted = inner_act(alg.letter_elt(y), u, alg.one())  # u' (x) y.u''
        rhs = rhs + otimes1_right(alg.one(), shifted).scale(half_diff)
    return rhs


def _render(spec, t):
    return str(t)


def _word_str(alg, w):
    return alg.render_word(w)


# ---------------------------------------------------------------------------
# generator-level checks


def check_cyclic_skew(spec: BracketSpec) -> VerificationReport:
    """<<x,y>> = -flip(<<y,x>>) on every letter pair (sufficient by Leibniz)."""
    witnesses = []
    letters = _letter_pairs(spec)
    for x in letters:
        for y in letters:
            d = skew_defect(spec, x, y)
            if d:
                alg = spec.algebra
                witnesses.append(
                    Witness(
                        (_word_str(alg, (x,)), _word_str(alg, (y,))),
                        "0",
                        str(d),
                        str(d),
                    )
                )
    return VerificationReport(
        "cyclic_skew_symmetry",
        not witnesses,
        {"algebra": spec.algebra.describe(), "pairs": len(letters) ** 2},
        witnesses,
    )


def check_double_poisson(spec: BracketSpec) -> VerificationReport:
    """Cyclic skew-symmetry plus vanishing double Jacobiator on generators."""
    skew = check_cyclic_skew(spec)
    witnesses = list(skew.witnesses)
    letters = _letter_pairs(spec)
    alg = spec.algebra
    for x in letters:
        for y in letters:
            for z in letters:
                dj = spec.djac(alg.letter_elt(x), alg.letter_elt(y), alg.letter_elt(z))
                if dj:
                    witnesses.append(
                        Witness(
                            tuple(_word_str(alg, (g,)) for g in (x, y, z)),
                            "0",
                            str(dj),
                            str(dj),
                        )
                    )
    return VerificationReport(
        "double_poisson",
        not witnesses,
        {"algebra": alg.describe(), "pairs": len(letters) ** 2, "triples": len(letters) ** 3},
        witnesses,
    )


def check_weight(spec: BracketSpec, weights) -> VerificationReport:
    """The skew defect on every letter pair equals the weighted quadratic form.

    On a localised algebra the letter list includes the inverse letters, whose
    weights must be the negated base weights (the unique consistent extension).
    """
    alg = spec.algebra
    letters = alg.letters
    weights = tuple(weights)
    if len(weights) != len(letters):
        raise ValueError(f"expected {len(letters)} weights, got {len(weights)}")
    witnesses = []
    for xi, x in enumerate(letters):
        for yi, y in enumerate(letters):
            lhs = skew_defect(spec, x, y)
            rhs = weight_rhs(spec, x, y, weights[xi], weights[yi])
            if lhs != rhs:
                witnesses.append(
                    Witness(
                        (_word_str(alg, (x,)), _word_str(alg, (y,))),
                        str(rhs),
                        str(lhs),
                        str(lhs - rhs),
                    )
                )
    return VerificationReport(
        "weighted_skew_symmetry",
        not witnesses,
        {
            "algebra": alg.describe(),
            "weights": [str(Fraction(w)) for w in weights],
            "pairs": len(letters) ** 2,
        },
        witnesses,
    )


def infer_weight(spec: BracketSpec):
    """Solve the weighted-skew condition for the weight vector, or None.

    Weights are read off positive generator pairs; inverse letters always
    carry the negated weight of their generator.  The result is validated
    with :func:`check_weight` before being returned.
    """
    alg = spec.algebra
    d = alg.d
    lam = [None] * d
    for i in range(1, d + 1):
        for j in range(1, d + 1):
            if i == j:
                continue
            defect = skew_defect(spec, i, j)
            terms = defect.terms
            s = terms.get(((i,), (j,)), 0)  # (lam_i + lam_j)/2
            t = terms.get(((), (i, j)), 0)  # (lam_i - lam_j)/2
            li = s + t
            lj = s - t
            if lam[i - 1] is None:
                lam[i - 1] = li
            if lam[j - 1] is None:
                lam[j - 1] = lj
    if d == 1:
        lam = [0]
    if any(v is None for v in lam):
        return None
    full = tuple(lam) + tuple(-lam[i - 1] for i in alg.inverted)
    full = tuple(Fraction(v) for v in full)
    if not check_weight(spec, full).passed:
        return None
    return full


def check_mixed_type(spec: BracketSpec, mtype: MixedType) -> VerificationReport:
    """Skew defect on generator pairs equals the prescribed quadratic form."""
    alg = spec.algebra
    if alg.has_inverses:
        raise ValueError("mixed types are defined on free algebras only")
    if mtype.d != alg.d:
        raise ValueError("type size does not match generator count")
    witnesses = []
    for i in range(1, alg.d + 1):
        for j in range(1, alg.d + 1):
            lhs = skew_defect(spec, i, j)
            lam = mtype.sym[i - 1][j - 1]
            mu_ij = mtype.skew[i - 1][j - 1]
            mu_ji = mtype.skew[j - 1][i - 1]
            terms = {}
            if i != j and lam:
                _merge_term(terms, ((i,), (j,)), lam)
                _merge_term(terms, ((j,), (i,)), -lam)
            if mu_ij:
                _merge_term(terms, ((), (i, j)), mu_ij)
            if mu_ji:
                _merge_term(terms, ((j, i), ()), mu_ji)
            rhs = Tensor2(alg, terms)
            if lhs != rhs:
                witnesses.append(
                    Witness(
                        (_word_str(alg, (i,)), _word_str(alg, (j,))),
                        str(rhs),
                        str(lhs),
                        str(lhs - rhs),
                    )
                )
    return VerificationReport(
        "mixed_type",
        not witnesses,
        {"algebra": alg.describe(), "pairs": alg.d ** 2},
        witnesses,
    )


def infer_mixed_type(spec: BracketSpec):
    """Coefficient extraction of the quadratic type from the skew defects.

    Returns None if some defect falls outside the four-dimensional quadratic
    span.  Diagonal entries of the symmetric part are a free gauge; they are
    set from the weight equations when those are solvable, else to zero.
    """
    alg = spec.algebra
    if alg.has_inverses:
        raise ValueError("mixed types are defined on free algebras only")
    d = alg.d
    sym = [[0] * d for _ in range(d)]
    skw = [[0] * d for _ in range(d)]
    for i in range(1, d + 1):
        defect = skew_defect(spec, i, i)
        if defect:
            return None
    for i in range(1, d + 1):
        for j in range(i + 1, d + 1):
            defect = skew_defect(spec, i, j)
            terms = dict(defect.terms)
            lam = terms.pop(((i,), (j,)), 0)
            lam2 = terms.pop(((j,), (i,)), 0)
            mu_ij = terms.pop(((), (i, j)), 0)
            mu_ji = terms.pop(((j, i), ()), 0)
            if terms or lam2 != -lam or mu_ji != -mu_ij:
                return None
            sym[i - 1][j - 1] = sym[j - 1][i - 1] = lam
            skw[i - 1][j - 1] = mu_ij
            skw[j - 1][i - 1] = -mu_ij
    # gauge-fix the diagonal from the weight equations when consistent
    for i in range(d):
        vals = {sym[i][j] + skw[i][j] for j in range(d) if j != i}
        if len(vals) == 1:
            sym[i][i] = vals.pop()
    mt = MixedType(tuple(map(tuple, sym)), tuple(map(tuple, skw)))
    if not check_mixed_type(spec, mt).passed:
        return None
    return mt


def check_wsk_condition(mtype: MixedType) -> bool:
    """The index condition sym[i][j] - sym[k][l] == skew[i][l] - skew[k][j]."""
    d = mtype.d
    rng = range(d)
    return all(
        mtype.sym[i][j] - mtype.sym[k][l] == mtype.skew[i][l] - mtype.skew[k][j]
        for i in rng
        for j in rng
        for k in rng
        for l in rng
    )


def check_poisson_property(spec: BracketSpec, weights) -> VerificationReport:
    """The double Jacobiator on letter triples takes its prescribed value."""
    alg = spec.algebra
    letters = alg.letters
    weights = tuple(weights)
    if len(weights) != len(letters):
        raise ValueError(f"expected {len(letters)} weights, got {len(weights)}")
    witnesses = []
    elts = {g: alg.letter_elt(g) for g in letters}
    for xi, x in enumerate(letters):
        for yi, y in enumerate(letters):
            for z in letters:
                lhs = spec.djac(elts[x], elts[y], elts[z])
                rhs = poisson_rhs(spec, x, y, z, weights[xi], weights[yi])
                if lhs != rhs:
                    witnesses.append(
                        Witness(
                            tuple(_word_str(alg, (g,)) for g in (x, y, z)),
                            str(rhs),
                            str(lhs),
                            str(lhs - rhs),
                        )
                    )
    return VerificationReport(
        "poisson_property",
        not witnesses,
        {
            "algebra": alg.describe(),
            "weights": [str(Fraction(w)) for w in weights],
            "triples": len(letters) ** 3,
        },
        witnesses,
    )


def check_lambda_double_lie(spec: BracketSpec, lam) -> VerificationReport:
    """Skew and Jacobiator axioms for a bracket that stays inside V (x) V."""
    alg = spec.algebra
    if alg.has_inverses:
        raise ValueError("defined for free algebras only")
    letters = alg.letters
    for (i, j), u in spec.table.items():
        for (w1, w2) in u.terms:
            if len(w1) != 1 or len(w2) != 1 or w1[0] < 0 or w2[0] < 0:
                return VerificationReport(
                    "lambda_double_lie",
                    False,
                    {"algebra": alg.describe(), "reason": "not V(x)V-valued"},
                    [
                        Witness(
                            (_word_str(alg, (i,)), _word_str(alg, (j,))),
                            "a combination of generator (x) generator terms",
                            str(u),
                            str(u),
                        )
                    ],
                )
    witnesses = []
    lam = Fraction(lam)
    for x in letters:
        for y in letters:
            lhs = skew_defect(spec, x, y)
            rhs = (pure_t2(alg.gen(x), alg.gen(y)) - pure_t2(alg.gen(y), alg.gen(x))).scale(lam)
            if lhs != rhs:
                witnesses.append(
                    Witness(
                        (_word_str(alg, (x,)), _word_str(alg, (y,))),
                        str(rhs),
                        str(lhs),
                        str(lhs - rhs),
                    )
                )
    for x in letters:
        for y in letters:
            for z in letters:
                lhs = spec.djac(alg.gen(x), alg.gen(y), alg.gen(z))
                u = spec.letter_bracket(x, z)
                rhs = otimes1_right(alg.gen(y), u).scale(-lam)
                if lhs != rhs:
                    witnesses.append(
                        Witness(
                            tuple(_word_str(alg, (g,)) for g in (x, y, z)),
                            str(rhs),
                            str(lhs),
                            str(lhs - rhs),
                        )
                    )
    return VerificationReport(
        "lambda_double_lie",
        not witnesses,
        {"algebra": alg.describe(), "lambda": str(lam)},
        witnesses,
    )


# ---------------------------------------------------------------------------
# bounded brute-force sweeps


def check_h0_skew(spec: BracketSpec, maxdeg: int = 4, all_witnesses: bool = False) -> VerificationReport:
    """{a,b} + {b,a} lies in [A,A] for all monomials of degree <= maxdeg.

    The residual is symmetric in (a, b), so unordered pairs are swept.  On a
    localised algebra the sweep runs over reduced Laurent monomials and the
    commutator classes are cyclic classes of cyclically reduced words.
    """
    alg = spec.algebra
    words = alg.words_up_to(maxdeg)
    ids = [spec._wid(w) for w in words]
    mb = spec._mb_ids
    cnf = spec._cnf_id
    witnesses = []
    pairs = 0
    for ai, a in enumerate(ids):
        for b in ids[ai:]:
            pairs += 1
            res = {}
            for w, c in mb(a, b).items():
                k = cnf(w)
                v = res.get(k)
                res[k] = c if v is None else v + c
            for w, c in mb(b, a).items():
                k = cnf(w)
                v = res.get(k)
                res[k] = c if v is None else v + c
            if any(res.values()):
                e = Element(alg, {spec._id_words[k]: v for k, v in res.items() if v})
                wa, wb = spec._id_words[a], spec._id_words[b]
                witnesses.append(
                    Witness((_word_str(alg, wa), _word_str(alg, wb)), "0 mod commutators", str(e), str(e))
                )
                if not all_witnesses:
                    return VerificationReport(
                        "h0_skew_symmetry",
                        False,
                        {"algebra": alg.describe(), "maxdeg": maxdeg, "pairs": pairs, "words": len(words)},
                        witnesses,
                    )
    return VerificationReport(
        "h0_skew_symmetry",
        not witnesses,
        {"algebra": alg.describe(), "maxdeg": maxdeg, "pairs": pairs, "words": len(words)},
        witnesses,
    )


def check_jacobi(spec: BracketSpec, maxdeg: int = 3, all_witnesses: bool = False) -> VerificationReport:
    """{a,{b,c}} - {b,{a,c}} - {{a,b},c} = 0 exactly on bounded monomials.

    Triples containing the unit monomial vanish identically ({1,-} = 0 = {-,1})
    and are skipped; the reported triple count is over nonunit monomials.
    """
    alg = spec.algebra
    words = alg.words_up_to(maxdeg, include_unit=False)
    ids = [spec._wid(w) for w in words]
    mb = spec._mb_ids
    witnesses = []
    triples = 0
    for a in ids:
        for b in ids:
            inner_ab = list(mb(a, b).items())
            for c in ids:
                triples += 1
                res = {}
                get = res.get
                for w, cw in mb(b, c).items():
                    for u, cu in mb(a, w).items():
                        v = get(u)
                        res[u] = cw * cu if v is None else v + cw * cu
                for w, cw in mb(a, c).items():
                    for u, cu in mb(b, w).items():
                        v = get(u)
                        res[u] = -cw * cu if v is None else v - cw * cu
                for w, cw in inner_ab:
                    for u, cu in mb(w, c).items():
                        v = get(u)
                        res[u] = -cw * cu if v is None else v - cw * cu
                if any(res.values()):
                    e = Element(alg, {spec._id_words[k]: v for k, v in res.items() if v})
                    wa, wb, wc = (spec._id_words[k] for k in (a, b, c))
                    witnesses.append(
                        Witness(
                            (_word_str(alg, wa), _word_str(alg, wb), _word_str(alg, wc)),
                            "0",
                            str(e),
                            str(e),
                        )
                    )
                    if not all_witnesses:
                        return VerificationReport(
                            "jacobi_identity",
                            False,
                            {"algebra": alg.describe(), "maxdeg": maxdeg, "triples": triples, "words": len(words)},
                            witnesses,
                        )
    return VerificationReport(
        "jacobi_identity",
        not witnesses,
        {"algebra": alg.describe(), "maxdeg": maxdeg, "triples": triples, "words": len(words)},
        witnesses,
    )


# ---------------------------------------------------------------------------
# batteries


def modified_double_poisson_battery(spec: BracketSpec, weights=None, pair_deg: int = 4, triple_deg: int = 3):
    """The full verification pipeline for a modified double Poisson bracket.

    Returns (reports, weights_used).  If no weight vector is supplied and none
    is stored on the spec, one is inferred; failure to infer is itself a
    failing report.
    """
    reports = []
    if weights is None:
        weights = spec.weight
    if weights is None:
        weights = infer_weight(spec)
        if weights is None:
            reports.append(
                VerificationReport(
                    "weighted_skew_symmetry",
                    False,
                    {"algebra": spec.algebra.describe(), "reason": "no consistent weight vector exists"},
                    [],
                )
            )
            return reports, None
    weights = tuple(weights)
    reports.append(check_weight(spec, weights))
    reports.append(check_poisson_property(spec, weights))
    reports.append(check_h0_skew(spec, pair_deg))
    reports.append(check_jacobi(spec, triple_deg))
    return reports, weights
