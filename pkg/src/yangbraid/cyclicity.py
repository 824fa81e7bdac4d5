"""Sufficient conditions for cyclicity of tensor products ``L(P) (x) L(Q)``.

Both conditions compare the zeros of ``Q_i(u + hbar d_i)`` with a set built
from ``P``: the pole sets of ``L(P)`` in one case, the zeros of the extremal
polynomials along a reduced word for the longest element in the other.  The
two are proven equivalent; :func:`verdict` cross-checks them on every call.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .baxter import QCartanInverse, pole_set
from .braid import suffix_images
from .cartan import CartanData, is_longest_word, longest_word
from .errors import EquivalenceViolation, NotLongestElement
from .exact import GlobalParams


@dataclass(frozen=True)
class ConditionResult:
    holds: bool
    # (node or word position, common roots) for every failing check
    witnesses: list = field(default_factory=list)

    def __bool__(self):
        return self.holds


def _shifted_zeros(gp: GlobalParams, cd: CartanData, Q, i: int) -> frozenset:
    return frozenset(a - gp.hbar * cd.d[i - 1] for a in Q[i - 1].zeros())


def condition_poles(cd: CartanData, gp: GlobalParams, qci: QCartanInverse, P, Q) -> ConditionResult:
    witnesses = []
    for i in cd.nodes:
        common = _shifted_zeros(gp, cd, Q, i) & pole_set(qci, gp, P, i)
        if common:
            witnesses.append({"node": i, "roots": sorted(common)})
    return ConditionResult(not witnesses, witnesses)


def condition_braid(cd: CartanData, gp: GlobalParams, P, Q, w0_word=None) -> ConditionResult:
    word = longest_word(cd) if w0_word is None else cd.check_word(w0_word)
    if not is_longest_word(cd, word):
        raise NotLongestElement(f"{word} is not a reduced word for the longest element")
    witnesses = []
    for r, image in enumerate(suffix_images(cd, gp, word, P)):
        j = word[r]
        common = _shifted_zeros(gp, cd, Q, j) & image[j - 1].zeros()
        if common:
            witnesses.append({"position": r + 1, "node": j, "roots": sorted(common)})
    return ConditionResult(not witnesses, witnesses)


@dataclass(frozen=True)
class CyclicityVerdict:
    condition_poles: bool
    condition_braid: bool
    cyclic_sufficient: bool
    irreducible_sufficient: bool
    witnesses: dict = field(default_factory=dict)


def verdict(cd: CartanData, gp: GlobalParams, qci: QCartanInverse, P, Q, w0_word=None) -> CyclicityVerdict:
    poles = condition_poles(cd, gp, qci, P, Q)
    braid = condition_braid(cd, gp, P, Q, w0_word)
    if poles.holds != braid.holds:
        raise EquivalenceViolation(
            f"pole condition {poles.holds} but braid condition {braid.holds}"
        )
    reverse = condition_poles(cd, gp, qci, Q, P)
    return CyclicityVerdict(
        condition_poles=poles.holds,
        condition_braid=braid.holds,
        cyclic_sufficient=poles.holds,
        irreducible_sufficient=poles.holds and reverse.holds,
        witnesses={
            "poles": poles.witnesses,
            "braid": braid.witnesses,
            "reverse_poles": reverse.witnesses,
        },
    )
