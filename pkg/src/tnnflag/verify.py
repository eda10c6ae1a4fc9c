"""Named verification suites with machine-readable reports.

Each suite runs a batch of exact checks (brute-force oracle comparisons,
poset regularity sweeps, seeded positivity tests) and returns a
:class:`RunReport`.  Every failing check carries a concrete witness;
inconclusive checks carry the exhausted budget.  All randomness flows
through an explicit seed.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from . import posets, ratlin, slk, twisted
from .cartan import cartan_of_type
from .posets import (
    DEFAULT_SHELLING_BUDGET,
    braid_poset,
    build_interval,
    find_shelling,
    is_eulerian,
    is_pure,
    is_thin,
    make_qnode,
    open_boundary_euler,
)
from .weyl import (
    WeylGroup,
    from_perm,
    i_embed,
    is_positive_subexpression,
    th_element,
    type_a_group,
)

DEFAULT_SEED = 0
SCHEMA_VERSION = 1


@dataclass
class RunReport:
    """Outcome of one command or suite: per-check status plus witnesses."""

    command: str
    inputs: dict
    seed: int | None = None
    budget: int | None = None
    checks: list[dict] = field(default_factory=list)
    elapsed_s: float = 0.0

    def add(self, name: str, status, witness=None) -> None:
        if isinstance(status, bool):
            status = "pass" if status else "fail"
        entry = {"check": name, "status": status}
        if witness is not None:
            entry["witness"] = witness
        self.checks.append(entry)

    @property
    def status(self) -> str:
        if any(c["status"] == "fail" for c in self.checks):
            return "fail"
        if any(c["status"] == "inconclusive" for c in self.checks):
            return "inconclusive"
        return "pass"

    @property
    def exit_code(self) -> int:
        return 1 if self.status == "fail" else 0

    def to_json(self) -> dict:
        return {
            "schema": SCHEMA_VERSION,
            "command": self.command,
            "inputs": self.inputs,
            "seed": self.seed,
            "budget": self.budget,
            "status": self.status,
            "checks": self.checks,
            "elapsed_s": round(self.elapsed_s, 3),
        }


def _timed(fn):
    def wrapper(*args, **kwargs):
        t0 = time.perf_counter()
        report = fn(*args, **kwargs)
        report.elapsed_s = time.perf_counter() - t0
        return report

    return wrapper


# -- brute-force oracles -------------------------------------------------------


def brute_demazure(group: WeylGroup, x, y):
    """max{x' y' : x' <= x, y' <= y} by exhaustive enumeration, or None."""
    cands = {
        group.multiply(a, b)
        for a in group.lower_interval(x)
        for b in group.lower_interval(y)
    }
    for m in cands:
        if all(group.bruhat_leq(c, m) for c in cands):
            return m
    return None


def brute_circ_r(group: WeylGroup, y, x):
    """min{y u : u <= x} by exhaustive enumeration, or None."""
    cands = {group.multiply(y, u) for u in group.lower_interval(x)}
    for m in cands:
        if all(group.bruhat_leq(m, c) for c in cands):
            return m
    return None


def bruhat_by_subwords(group: WeylGroup, v, w) -> bool:
    """Subword-criterion oracle for the Bruhat order."""
    return v in group.lower_interval(w)


@_timed
def suite_demazure_oracle(seed: int = DEFAULT_SEED, budget=None) -> RunReport:
    """Greedy Demazure and downward products match brute force on S3 and S4."""
    report = RunReport("verify demazure-oracle", {"groups": ["S3", "S4"]}, seed=seed)
    for k in (3, 4):
        group = type_a_group(k)
        elems = group.elements_up_to_length(k * (k - 1) // 2)
        pairs = 0
        bad = []
        for x in elems:
            for y in elems:
                pairs += 1
                if group.demazure(x, y) != brute_demazure(group, x, y):
                    bad.append({"x": x.describe(), "y": y.describe(), "op": "demazure"})
                if group.circ_r(x, y) != brute_circ_r(group, x, y):
                    bad.append({"x": x.describe(), "y": y.describe(), "op": "circ_r"})
        report.add(
            f"S{k}-all-pairs",
            not bad,
            {"pairs": pairs} if not bad else {"pairs": pairs, "bad": bad[:5]},
        )
    return report


@_timed
def suite_positive_subexpr(seed: int = DEFAULT_SEED, budget=None) -> RunReport:
    """Exhaustive uniqueness of positive subexpressions over S4."""
    report = RunReport("verify positive-subexpr", {"group": "S4"}, seed=seed)
    group = type_a_group(4)
    elems = group.elements_up_to_length(6)
    bad = []
    checked = 0
    for w in elems:
        word = w.word
        by_product: dict = {}
        for mask in range(1 << len(word)):
            sub = tuple(
                word[i] if mask & (1 << i) else None for i in range(len(word))
            )
            prod = group.from_word(t for t in sub if t is not None)
            if is_positive_subexpression(group, word, sub):
                by_product.setdefault(prod, []).append(sub)
        lower = set(group.lower_interval(w))
        if set(by_product) != lower:
            bad.append({"w": w.describe(), "issue": "positive products != lower interval"})
            continue
        for v, subs in by_product.items():
            checked += 1
            if len(subs) != 1:
                bad.append({"w": w.describe(), "v": v.describe(), "count": len(subs)})
            elif subs[0] != group.positive_subexpression(v, word):
                bad.append({"w": w.describe(), "v": v.describe(), "issue": "greedy differs"})
    report.add("uniqueness-and-greedy", not bad, {"pairs": checked} if not bad else {"bad": bad[:5]})
    return report


@_timed
def suite_thickening_order(seed: int = DEFAULT_SEED, budget=None) -> RunReport:
    """Order equivalences between tuples and their interleaved images."""
    report = RunReport("verify thickening-order", {"bases": ["A1", "A2"], "n": 2}, seed=seed)
    for family, rank in (("A", 1), ("A", 2)):
        group = WeylGroup(cartan_of_type(family, rank))
        tgroup = group.thickened(2)
        elems = group.elements_up_to_length(3)
        tuples = [(a, b) for a in elems for b in elems]
        th_of = {t: th_element(tgroup, t) for t in tuples}
        bad = []
        for wbar in tuples:
            m = group.m_star(wbar)
            for v in elems:
                lhs = group.bruhat_leq(v, m)
                rhs = tgroup.bruhat_leq(i_embed(tgroup, v), th_of[wbar])
                if lhs != rhs:
                    bad.append({"v": v.describe(), "wbar": [w.describe() for w in wbar]})
        report.add(
            f"{family}{rank}-nonempty-iff-embedded",
            not bad,
            {"tuples": len(tuples)} if not bad else {"bad": bad[:5]},
        )
        bad = []
        for wa in tuples:
            for wb in tuples:
                lhs = all(group.bruhat_leq(x, y) for x, y in zip(wa, wb))
                rhs = tgroup.bruhat_leq(th_of[wa], th_of[wb])
                if lhs != rhs:
                    bad.append({
                        "wbar": [w.describe() for w in wa],
                        "wbar'": [w.describe() for w in wb],
                    })
        report.add(
            f"{family}{rank}-tuple-order-iff-th",
            not bad,
            {"pairs": len(tuples) ** 2} if not bad else {"bad": bad[:5]},
        )
    return report


def _hatQ_families():
    A1 = WeylGroup(cartan_of_type("A", 1))
    A2 = WeylGroup(cartan_of_type("A", 2))
    B2 = WeylGroup(cartan_of_type("B", 2))
    return [
        ("A1", A1, (1, 2, 3)),
        ("A2", A2, (1, 2)),
        ("B2", B2, (1,)),
    ]


def iter_qnodes(group: WeylGroup, n: int, length_cap: int | None = None):
    """All nonempty stratum labels with n factors over a finite group."""
    cap = length_cap
    if cap is None:
        cap = 64  # finite groups exhaust well before this
    elems = group.elements_up_to_length(cap)
    for wbar in product(elems, repeat=n):
        m = group.m_star(wbar)
        for v in group.lower_interval(m):
            yield make_qnode(v, wbar)


@_timed
def suite_hatQ(seed: int = DEFAULT_SEED, budget: int | None = None) -> RunReport:
    """Purity, thinness, Eulerian-ness, shellability sweep over small families."""
    budget = budget or DEFAULT_SHELLING_BUDGET
    report = RunReport(
        "verify hatQ",
        {"families": ["A1 n<=3", "A2 n<=2", "B2 n=1"], "shelling_rank_cap": 5},
        seed=seed,
        budget=budget,
    )
    for name, group, ns in _hatQ_families():
        for n in ns:
            intervals = 0
            shellings = 0
            bad = []
            inconclusive = []
            for top in iter_qnodes(group, n):
                intervals += 1
                poset = build_interval(top)
                label = f"{name} n={n} top={top.describe()}"
                if not is_pure(poset):
                    bad.append({"top": label, "check": "pure"})
                if not is_thin(poset):
                    bad.append({"top": label, "check": "thin"})
                if not is_eulerian(poset):
                    bad.append({"top": label, "check": "eulerian"})
                for lo, hi in poset.covers:
                    if poset.ranks[hi] - poset.ranks[lo] != 1:
                        bad.append({"top": label, "check": "cover-rank-drop"})
                        break
                if top.rank <= 5:
                    shellings += 1
                    res = find_shelling(poset, budget=budget)
                    if res.status == "not_shellable":
                        bad.append({"top": label, "check": "shelling"})
                    elif res.status == "inconclusive":
                        inconclusive.append({"top": label, "budget": budget})
            status = "pass" if not bad else "fail"
            if not bad and inconclusive:
                status = "inconclusive"
            report.add(
                f"{name}-n{n}-intervals",
                status,
                {
                    "intervals": intervals,
                    "shellings": shellings,
                    **({"bad": bad[:5]} if bad else {}),
                    **({"inconclusive": inconclusive[:5]} if inconclusive else {}),
                },
            )
    # rank-1 thinness witness: deletions of the concatenated word giving v
    bad = []
    count = 0
    for name, group, ns in _hatQ_families():
        for n in ns:
            for node in iter_qnodes(group, n):
                if node.rank != 1:
                    continue
                count += 1
                letters = [t for w in node.wbar for t in w.word]
                hits = sum(
                    1
                    for l in range(len(letters))
                    if group.from_word(letters[:l] + letters[l + 1:]) == node.v
                )
                if hits not in (1, 2):
                    bad.append({"node": node.describe(), "hits": hits})
    report.add("rank1-deletion-witness", not bad, {"nodes": count} if not bad else {"bad": bad[:5]})
    return report


@_timed
def suite_sl2_triangle(seed: int = DEFAULT_SEED, budget=None) -> RunReport:
    """The SL2 two-factor triangle: f-vector, chart inequalities, ball checks."""
    report = RunReport("verify sl2-triangle", {"k": 2, "n": 2}, seed=seed)
    group = type_a_group(2)
    e, s = group.identity, group.simple(0)
    top = make_qnode(e, (s, s))
    poset = build_interval(top)
    report.add("f-vector", poset.f_vector() == (3, 3, 1), {"f": list(poset.f_vector())})
    chi = open_boundary_euler(poset)
    report.add("boundary-euler", chi == 0, {"chi": chi})
    ball = posets.check_regular_ball(top)
    report.add("regular-ball", ball["status"], {"checks": ball["checks"]})
    rng = random.Random(seed)
    ok = True
    witness = None
    for _ in range(25):
        params = twisted.random_params(2, rng)
        z = twisted.parametrize_cell(e, (s, s), params)
        flags = twisted.alpha(z)
        coords = []
        for f in flags:
            col = [row[0] for row in f.rep]
            coords.append(col[1] / col[0])
        a, b = coords
        if not (0 < a < b):
            ok = False
            witness = {"params": [str(p) for p in params], "a": str(a), "b": str(b)}
            break
    report.add("chart-inequalities", ok, witness or {"samples": 25})
    return report


@_timed
def suite_braid(seed: int = DEFAULT_SEED, budget: int | None = None) -> RunReport:
    """Regularity of braid/subword posets for all short A2 words."""
    budget = budget or DEFAULT_SHELLING_BUDGET
    report = RunReport("verify braid", {"group": "A2", "max_len": 5}, seed=seed, budget=budget)
    group = WeylGroup(cartan_of_type("A", 2))
    bad = []
    words = 0
    for length in range(1, 6):
        for letters in product(range(2), repeat=length):
            words += 1
            poset = braid_poset(group, letters)
            label = "".join(str(t + 1) for t in letters)
            if not is_pure(poset):
                bad.append({"word": label, "check": "pure"})
            if not is_thin(poset):
                bad.append({"word": label, "check": "thin"})
            if not is_eulerian(poset):
                bad.append({"word": label, "check": "eulerian"})
            res = find_shelling(poset, budget=budget)
            if not res.shellable:
                bad.append({"word": label, "check": "shelling", "status": res.status})
    report.add("all-words", not bad, {"words": words} if not bad else {"bad": bad[:5]})
    ball = braid_poset(group, (0, 1, 0, 1))
    report.add(
        "1212-is-1-ball",
        ball.f_vector() == (2, 1),
        {"f": list(ball.f_vector())},
    )
    return report


def _nonempty_strata(k: int, n: int):
    group = type_a_group(k)
    elems = group.elements_up_to_length(k * (k - 1) // 2)
    for wbar in product(elems, repeat=n):
        m = group.m_star(wbar)
        for v in group.lower_interval(m):
            yield v, wbar


@_timed
def suite_duality(seed: int = DEFAULT_SEED, budget=None) -> RunReport:
    """phi is an involution on gauge classes and permutes strata as displayed."""
    report = RunReport("verify duality", {"k": 3, "n": 2, "points": 10}, seed=seed)
    group = type_a_group(3)
    w0 = from_perm(group, slk.w0_perm(3))
    rng = random.Random(seed)
    strata = 0
    bad = []
    for v, wbar in _nonempty_strata(3, 2):
        strata += 1
        dim = sum(w.length for w in wbar) - v.length
        expected = (
            group.multiply(w0, wbar[0]),
            (group.multiply(w0, v),) + tuple(group.inverse(w) for w in reversed(wbar[1:])),
        )
        for _ in range(10):
            z = twisted.parametrize_cell(v, wbar, twisted.random_params(dim, rng))
            image = twisted.phi_Z(z)
            if twisted.stratum(image) != expected:
                bad.append({"stratum": (v.describe(), [w.describe() for w in wbar]),
                            "check": "stratum-map"})
                break
            if not twisted.gauge_eq(twisted.phi_Z(image), z):
                bad.append({"stratum": (v.describe(), [w.describe() for w in wbar]),
                            "check": "involution"})
                break
    report.add("phi-involution-and-stratum-map", not bad,
               {"strata": strata} if not bad else {"bad": bad[:5]})
    return report


@_timed
def suite_double_bruhat(seed: int = DEFAULT_SEED, budget=None) -> RunReport:
    """Positive double-Bruhat products are TNN and embed consistently."""
    report = RunReport(
        "verify double-bruhat", {"k": [2, 3], "samples_per_pair": 3}, seed=seed
    )
    rng = random.Random(seed)
    for k in (2, 3):
        group = type_a_group(k)
        elems = group.elements_up_to_length(k * (k - 1) // 2)
        bad = []
        pairs = 0
        for v in elems:
            for w in elems:
                pairs += 1
                expected = twisted.db_stratum_convention(group, v, w)
                for _ in range(3):
                    params = twisted.random_params(v.length + w.length, rng)
                    g = twisted.db_positive(
                        k,
                        tuple(t + 1 for t in v.word),
                        tuple(t + 1 for t in w.word),
                        params,
                    )
                    if not slk.is_tnn(g):
                        bad.append({"v": v.describe(), "w": w.describe(), "check": "tnn"})
                        break
                    got = twisted.stratum(twisted.double_bruhat_embed(g))
                    if got != expected:
                        bad.append({
                            "v": v.describe(),
                            "w": w.describe(),
                            "check": "stratum",
                            "got": (got[0].describe(), [x.describe() for x in got[1]]),
                        })
                        break
        report.add(f"k{k}-pairs", not bad, {"pairs": pairs} if not bad else {"bad": bad[:5]})
    return report


def run_cell_containment(seed: int = DEFAULT_SEED, samples: int = 25) -> RunReport:
    """Every seeded positive parametrization lands in its stratum (k=3, n=2)."""
    t0 = time.perf_counter()
    report = RunReport(
        "cell-containment", {"k": 3, "n": 2, "samples": samples}, seed=seed
    )
    rng = random.Random(seed)
    strata = 0
    bad = []
    for v, wbar in _nonempty_strata(3, 2):
        strata += 1
        dim = sum(w.length for w in wbar) - v.length
        for _ in range(samples):
            z = twisted.parametrize_cell(v, wbar, twisted.random_params(dim, rng))
            if twisted.stratum(z) != (v, wbar):
                bad.append({"v": v.describe(), "wbar": [w.describe() for w in wbar]})
                break
    report.add("containment", not bad, {"strata": strata} if not bad else {"bad": bad[:5]})
    report.elapsed_s = time.perf_counter() - t0
    return report


SUITES = {
    "demazure-oracle": suite_demazure_oracle,
    "positive-subexpr": suite_positive_subexpr,
    "thickening-order": suite_thickening_order,
    "hatQ": suite_hatQ,
    "sl2-triangle": suite_sl2_triangle,
    "braid": suite_braid,
    "duality": suite_duality,
    "double-bruhat": suite_double_bruhat,
}
