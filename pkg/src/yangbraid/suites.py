"""Seeded verification suites, shared by the command line and the test suite.

Each suite returns a :class:`SuiteResult`; randomness comes from
``random.Random`` seeded by a string built from the seed, the suite name and
the Lie type, so results are reproducible and independent of run order.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from . import braid
from .baxter import audit, pole_set, pole_set_union, qcartan_inverse, verify_factorization
from .cartan import all_types, cartan_data, kappa, longest_words, weyl_apply
from .cyclicity import condition_braid, condition_poles, verdict
from .exact import GlobalParams, RootMultiset
from .hecke import build_model, verify_hecke
from .qloop import (
    LoopEmbedding,
    QRootMultiset,
    expansions_agree,
    intertwine_check,
    lweight_from_drinfeld,
    q_act_word,
    q_hecke_model,
    q_verify,
    suffix_drinfeld_data,
)

NINE_TYPES = ("A1", "A2", "A3", "B2", "B3", "C3", "D4", "G2", "F4")

# hand-maintained cross-check; never used to compute anything
TWO_KAPPA_TABLE = {
    "A": lambda n: n + 1,
    "B": lambda n: 2 * (2 * n - 1),
    "C": lambda n: 2 * (n + 1),
    "D": lambda n: 2 * n - 2,
    "E": lambda n: {6: 12, 7: 18, 8: 30}[n],
    "F": lambda n: 18,
    "G": lambda n: 12,
}


@dataclass
class SuiteResult:
    name: str
    cases: int = 0
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def check(self, ok: bool, detail) -> None:
        self.cases += 1
        if not ok:
            self.failures.append(detail)

    def as_dict(self) -> dict:
        return {
            "suite": self.name,
            "cases": self.cases,
            "failed": len(self.failures),
            "passed": self.passed,
            "failures": [str(f) for f in self.failures[:20]],
        }


def _rng(seed: int, *parts) -> random.Random:
    return random.Random(":".join(map(str, (seed, *parts))))


def grid_root(rng: random.Random, gp: GlobalParams) -> Fraction:
    """A root on a coarse grid of ``hbar/2`` translates, so collisions happen."""
    base = rng.choice((Fraction(0), Fraction(0), Fraction(1, 3)))
    return base + gp.hbar * Fraction(rng.randint(-4, 4), 2)


def random_multiset(rng, gp, *, max_roots=3, positive=True, root=grid_root) -> RootMultiset:
    entries = []
    for _ in range(rng.randint(0, max_roots)):
        mult = rng.randint(1, 2) if positive else rng.choice((-2, -1, 1, 2))
        entries.append((root(rng, gp), mult))
    return RootMultiset(entries)


def random_tuple(rng, cd, gp, **kw) -> tuple:
    return tuple(random_multiset(rng, gp, **kw) for _ in cd.nodes)


def random_qdrinfeld(rng, cd, *, max_roots=2) -> tuple:
    out = []
    for _ in cd.nodes:
        entries = [
            ((rng.choice((1, 2, -1, Fraction(1, 2))), rng.randint(-4, 4)), rng.randint(1, 2))
            for _ in range(rng.randint(0, max_roots))
        ]
        out.append(QRootMultiset(entries))
    return tuple(out)


def _alternating_words(cd, i, j):
    m = cd.m[i - 1][j - 1]
    return (
        tuple((i, j)[k % 2] for k in range(m)),
        tuple((j, i)[k % 2] for k in range(m)),
    )


def braid_relations(seed=0, count=50, types=NINE_TYPES, hbar=Fraction(1)) -> SuiteResult:
    res = SuiteResult("braid-relations")
    gp = GlobalParams(hbar)
    for t in types:
        cd = cartan_data(t)
        rng = _rng(seed, "braid", t)
        for case in range(count):
            mu = random_tuple(rng, cd, gp, positive=False)
            lam = braid.hw_ratio(cd, gp, random_tuple(rng, cd, gp, positive=False))
            for i in cd.nodes:
                for j in cd.nodes:
                    if i >= j:
                        continue
                    w1, w2 = _alternating_words(cd, i, j)
                    for hw, x in ((False, mu), (True, lam)):
                        ok = braid.act_word(cd, gp, w1, x, hw=hw) == braid.act_word(cd, gp, w2, x, hw=hw)
                        res.check(ok, (t, case, i, j, "hw" if hw else "monic"))
    return res


def difference_oracle(seed=0, count=100, types=NINE_TYPES, hbar=Fraction(1)) -> SuiteResult:
    res = SuiteResult("difference-oracle")
    gp = GlobalParams(hbar)
    rng = _rng(seed, "difference")
    for case in range(count):
        cd = cartan_data(rng.choice(types))
        mu = random_tuple(rng, cd, gp, positive=False)
        j = rng.choice(list(cd.nodes))
        lam = braid.act_hw(cd, gp, j, braid.hw_ratio(cd, gp, mu))
        expected = braid.act_monic(cd, gp, j, mu)
        got = tuple(braid.solve_difference(gp, lam[i], cd.d[i]) for i in range(cd.n))
        res.check(got == expected, (str(cd.type), case, j))
    return res


def degree_equivariance(seed=0, count=200, types=NINE_TYPES, hbar=Fraction(1)) -> SuiteResult:
    res = SuiteResult("degree-equivariance")
    gp = GlobalParams(hbar)
    rng = _rng(seed, "degree")
    for case in range(count):
        cd = cartan_data(rng.choice(types))
        mu = random_tuple(rng, cd, gp, positive=False)
        word = tuple(rng.choice(list(cd.nodes)) for _ in range(rng.randint(0, 8)))
        lhs = braid.degree(braid.act_word(cd, gp, word, mu))
        rhs = weyl_apply(cd, word, braid.degree(mu))
        res.check(lhs == rhs, (str(cd.type), case, word))
    return res


def hecke(seed=0, count=None, types=NINE_TYPES, max_level=3, hbars=(1, 2, Fraction(-1, 2))) -> SuiteResult:
    res = SuiteResult("hecke")
    for t in types:
        cd = cartan_data(t)
        for h in hbars:
            for r in range(max_level + 1):
                report = verify_hecke(build_model(cd, GlobalParams(h), r))
                res.check(report.ok, (t, str(h), r, report.witness))
    return res


def factorization(seed=0, count=100, types=NINE_TYPES, hbar=Fraction(1)) -> SuiteResult:
    res = SuiteResult("factorization")
    gp = GlobalParams(hbar)
    for t in types:
        cd = cartan_data(t)
        qci = qcartan_inverse(cd)
        rng = _rng(seed, "factorization", t)
        for case in range(count):
            P = random_tuple(rng, cd, gp, max_roots=3)
            report = verify_factorization(cd, gp, qci, P)
            res.check(report.ok, (t, case, report.mismatches[:1]))
            for i in cd.nodes:
                same = pole_set(qci, gp, P, i) == pole_set_union(qci, gp, P, i)
                res.check(same, (t, case, "pole routes", i))
    return res


def cyclicity_equivalence(seed=0, count=200, types=NINE_TYPES, hbar=Fraction(1)) -> SuiteResult:
    res = SuiteResult("cyclicity-equivalence")
    gp = GlobalParams(hbar)
    for t in types:
        cd = cartan_data(t)
        qci = qcartan_inverse(cd)
        words = longest_words(cd)
        rng = _rng(seed, "cyclicity", t)
        for case in range(count):
            P = random_tuple(rng, cd, gp, max_roots=2)
            Q = random_tuple(rng, cd, gp, max_roots=2)
            poles = condition_poles(cd, gp, qci, P, Q).holds
            for w in words:
                res.check(poles == condition_braid(cd, gp, P, Q, w).holds, (t, case, w))
    # sl2 regression: Q = P shifted by hbar is flagged, and the reverse is not
    cd = cartan_data("A1")
    qci = qcartan_inverse(cd)
    a = Fraction(2, 7)
    P = (RootMultiset({a: 1}),)
    Q = (RootMultiset({a + gp.hbar: 1}),)
    v = verdict(cd, gp, qci, P, Q)
    res.check(not v.cyclic_sufficient, ("sl2 pair not flagged",))
    rev = verdict(cd, gp, qci, Q, P)
    res.check(rev.cyclic_sufficient and not rev.irreducible_sufficient, ("sl2 reversed pair",))
    return res


def qcartan_audit(seed=0, count=None, max_rank=8) -> SuiteResult:
    res = SuiteResult("qcartan-audit")
    for t in all_types(max_rank):
        report = audit(qcartan_inverse(cartan_data(t)))
        res.check(report.ok, (str(t), report.violations[:3]))
    return res


def kappa_table(seed=0, count=None, max_rank=8) -> SuiteResult:
    res = SuiteResult("kappa")
    for t in all_types(max_rank):
        cd = cartan_data(t)
        two_kappa = kappa(cd).two_kappa
        res.check(two_kappa == TWO_KAPPA_TABLE[t.series](t.rank), (str(t), two_kappa))
        if set(cd.d) == {1}:
            res.check(two_kappa == 1 + sum(cd.highest_root), (str(t), "height"))
    return res


def qloop(seed=0, count=50, max_rank_braid=3, max_rank_hecke=4, levels=(1, -1, 2, -2, 3)) -> SuiteResult:
    res = SuiteResult("qloop")
    for t in all_types(max_rank_braid):
        cd = cartan_data(t)
        rng = _rng(seed, "qloop", t)
        for case in range(count):
            P = random_qdrinfeld(rng, cd)
            psi = lweight_from_drinfeld(cd, P)
            for i in cd.nodes:
                for j in cd.nodes:
                    if i < j:
                        w1, w2 = _alternating_words(cd, i, j)
                        res.check(q_act_word(cd, w1, psi) == q_act_word(cd, w2, psi), (str(t), case, i, j))
            res.check(expansions_agree(cd, q_act_word(cd, longest_words(cd)[0], psi)), (str(t), case, "expansions"))
            for w in longest_words(cd):
                for j, P_r, weight in suffix_drinfeld_data(cd, P, w):
                    res.check(P_r.is_polynomial() and P_r.degree == weight, (str(t), case, w, "suffix", j))
    for t in all_types(max_rank_hecke):
        cd = cartan_data(t)
        for r in levels:
            report = q_verify(q_hecke_model(cd, r))
            res.check(report.ok, (str(t), r, report.failures[:2]))
    return res


def loop_embedding(seed=0, count=None, types=("A1", "A2", "B2"), levels=(1, -1, 2, -2), order=7, hbar=Fraction(1)) -> SuiteResult:
    res = SuiteResult("gtl")
    for t in types:
        cd = cartan_data(t)
        ctx = LoopEmbedding(cd, GlobalParams(hbar), order)
        for i in cd.nodes:
            for j in cd.nodes:
                for r in levels:
                    out = intertwine_check(ctx, i, j, r)
                    res.check(out.ok, (t, i, j, r, out.first_bad_order))
    return res


SUITES = {
    "braid-relations": braid_relations,
    "difference-oracle": difference_oracle,
    "degree-equivariance": degree_equivariance,
    "hecke": hecke,
    "factorization": factorization,
    "cyclicity-equivalence": cyclicity_equivalence,
    "qcartan-audit": qcartan_audit,
    "kappa": kappa_table,
    "qloop": qloop,
    "gtl": loop_embedding,
}


def run(name: str, seed: int = 0, count: int | None = None) -> list:
    """Run one suite, or every suite for ``"all"``; ``count`` overrides defaults."""
    names = list(SUITES) if name == "all" else [name]
    out = []
    for n in names:
        fn = SUITES[n]
        out.append(fn(seed=seed) if count is None else fn(seed=seed, count=count))
    return out
