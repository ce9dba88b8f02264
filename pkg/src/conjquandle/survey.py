"""Catalog sweeps: build groups from source specs and check every class.

A source spec is a string:

* ``family:param`` (``cyclic:6``, ``dihedral:10``, ``symmetric:5``, ``alternating:4``)
* ``family`` alone: every parameter whose group order is at most ``max_order``
* ``A*B``: direct product of two specs with parameters, e.g. ``symmetric:3*cyclic:2``
* ``products``: all unordered pairs of catalog groups of order >= 2 whose
  product order is at most ``max_order`` (see :func:`product_pairs`)
* ``default``: ``cyclic``, ``dihedral``, ``symmetric``, ``alternating`` and ``products``
* ``file:PATH``: a group file
"""

from __future__ import annotations

import math
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Iterable

from . import perm as P
from .checks import (
    GOOD,
    corollary6_audit,
    decide_goodness,
    good_class_fast,
    lmlt_cardinality,
    product_cycle_lengths_ok,
)
from .errors import BoundExceeded, EquivalenceViolation, QuandleError
from .groups import DEFAULT_BOUND, FiniteGroup, PermArithmetic, catalog, direct_product, load_group_file
from .quandle import ConjugationQuandle, product_quandle

# products whose factors are both abelian are only taken up to this order:
# their classes are singletons and add nothing but runtime
ABELIAN_PRODUCT_CAP = 64


@dataclass
class SurveyConfig:
    sources: list[str]
    max_order: int = 500
    enumeration_bound: int = DEFAULT_BOUND
    audit_mode: bool = False
    seed: int = 0
    parallelism: int = 1
    product_samples: int = 0

    def __post_init__(self):
        if not self.sources:
            raise ValueError("no sources given")
        if self.max_order > self.enumeration_bound:
            raise ValueError(f"max_order {self.max_order} exceeds enumeration bound {self.enumeration_bound}")


def family_params(family: str, max_order: int) -> list[int]:
    """Parameters of a family whose groups have order <= max_order."""
    if family == "cyclic":
        return list(range(1, max_order + 1))
    if family == "dihedral":
        return list(range(6, max_order + 1, 2))
    if family == "symmetric":
        return [n for n in range(2, 13) if math.factorial(n) <= max_order]
    if family == "alternating":
        return [n for n in range(3, 14) if math.factorial(n) // 2 <= max_order]
    raise QuandleError(f"unknown family {family!r}")


def _order_of(spec: str) -> int:
    fam, k = spec.split(":")
    k = int(k)
    return {"cyclic": k, "dihedral": k, "symmetric": math.factorial(k),
            "alternating": math.factorial(k) // 2 if k >= 2 else 1}[fam]


_ABELIAN = ("cyclic:",)


def _abelian(spec: str) -> bool:
    return spec.startswith(_ABELIAN) or spec in ("symmetric:2", "alternating:3")


def product_pairs(max_order: int) -> list[str]:
    """Unordered pairs of catalog groups (order >= 2) with product order <= max_order.

    Pairs of two abelian factors are kept only up to ``ABELIAN_PRODUCT_CAP``.
    """
    singles = [f"{f}:{k}" for f in ("cyclic", "dihedral", "symmetric", "alternating")
               for k in family_params(f, max_order // 2)]
    singles = [s for s in singles if _order_of(s) >= 2 and s not in ("symmetric:2", "alternating:3")]
    out = []
    for i, a in enumerate(singles):
        for b in singles[i:]:
            order = _order_of(a) * _order_of(b)
            if order > max_order:
                continue
            if _abelian(a) and _abelian(b) and order > ABELIAN_PRODUCT_CAP:
                continue
            out.append(f"{a}*{b}")
    return out


def expand_sources(sources: Iterable[str], max_order: int) -> list[str]:
    """Expand sweep keywords into concrete group specs, deduplicated, order kept."""
    out: list[str] = []
    for s in sources:
        s = s.strip()
        if s == "default":
            out += expand_sources(["cyclic", "dihedral", "symmetric", "alternating", "products"], max_order)
        elif s == "products":
            out += product_pairs(max_order)
        elif s in ("cyclic", "dihedral", "symmetric", "alternating"):
            out += [f"{s}:{k}" for k in family_params(s, max_order)]
        else:
            out.append(s)
    seen = set()
    return [s for s in out if not (s in seen or seen.add(s))]


def build_group(spec: str, bound: int = DEFAULT_BOUND) -> FiniteGroup:
    """Group for a concrete spec (``family:param``, ``A*B``, or ``file:PATH``)."""
    if spec.startswith("file:"):
        return load_group_file(spec[5:], bound=bound)
    if "*" in spec:
        a, b = spec.split("*", 1)
        G = direct_product(build_group(a, bound), build_group(b, bound), bound=bound)
        G.name = spec
        return G
    G = catalog(spec, bound=bound)
    G.name = spec
    return G


# per-class records

def _cs(cs: P.CycleStructure) -> list[list[int]]:
    return cs.as_list()


def class_record(G: FiniteGroup, C, index: int, audit: bool) -> dict:
    Q = ConjugationQuandle(G, C.members)
    structures = Q.translation_cycle_structures()
    distinct = sorted({cs.entries for cs in structures.values()})
    hayashi = all(P.has_regular_cycle(P.CycleStructure(e)) for e in distinct)
    good = decide_goodness(G, C, Q)
    rec = {
        "index": index,
        "representative": G.fmt(C.representative),
        "size": len(C),
        "element_order": G.element_order(C.representative),
        "h_order": None,
        "center_order": None,
        "connected_direct": Q.is_connected_direct(),
        "connected_criterion": None,
        "hayashi": hayashi,
        "translation_cycle_structures": [[list(x) for x in e] for e in distinct],
        "goodness": {
            "verdict": good.verdict,
            "method": good.method,
            "witnesses": [[G.fmt(c), G.fmt(z)] for c, z in good.witnesses.items()],
            "failing_c": None if good.failing_c is None else G.fmt(good.failing_c),
            "note": good.note,
        },
        "audit": None,
    }
    if audit:
        issues = []
        rec["connected_criterion"] = Q.is_connected_criterion()
        if rec["connected_criterion"] != rec["connected_direct"]:
            issues.append("connectedness methods disagree")
        fast = good_class_fast(G, C)
        if fast.verdict != good.verdict:
            issues.append("transported goodness disagrees")
        try:
            a = corollary6_audit(G, C.representative, strict=False)
            cor6 = {k: v for k, v in asdict(a).items() if k != "class_id"}
        except BoundExceeded as exc:
            cor6 = {"agreement": None, "note": str(exc)}
        if cor6.get("agreement") is False:
            issues.append("equivalent conditions disagree")
        if len(distinct) != 1:
            issues.append("translations of a class quandle differ in cycle structure")
        lmlt = None
        try:
            lm, quotient = lmlt_cardinality(Q)
            H = Q.generated
            rec["h_order"] = H.order()
            rec["center_order"] = len(H.center())
            lmlt = {"lmlt_order": lm, "h_over_center": quotient, "holds": lm == quotient}
            if lm != quotient:
                issues.append("|LMlt| differs from |H|/|Z(H)|")
        except BoundExceeded as exc:
            lmlt = {"lmlt_order": None, "h_over_center": None, "holds": None, "note": str(exc)}
        rec["audit"] = {"equivalences": cor6, "lmlt_cardinality": lmlt,
                        "transported_verdict": fast.verdict, "issues": issues}
    return rec


def survey_group(spec: str, bound: int = DEFAULT_BOUND, audit: bool = False) -> dict:
    """Check every class of one group; errors are captured in the record."""
    out = {"source": spec, "name": spec, "order": None, "classes": [], "error": None}
    try:
        G = build_group(spec, bound)
        out["name"] = G.name
        out["order"] = G.order()
        for i, C in enumerate(G.conjugacy_classes()):
            out["classes"].append(class_record(G, C, i, audit))
    except BoundExceeded as exc:
        out["error"] = {"kind": "bound_exceeded", "message": str(exc)}
    except (QuandleError, OSError) as exc:
        out["error"] = {"kind": type(exc).__name__, "message": str(exc)}
    return out


def _survey_group_args(args):
    return survey_group(*args)


def product_preservation_samples(specs: list[str], samples: int, seed: int, bound: int,
                                 max_size: int = 400) -> list[dict]:
    """Seeded random pairs of class quandles; product Hayashi and lcm cycle lengths."""
    rng = random.Random(seed)
    pool = []
    for spec in specs:
        if "*" in spec or spec.startswith("file:"):
            continue
        G = build_group(spec, bound)
        if G.order() > 120:
            continue
        for C in G.conjugacy_classes():
            pool.append((spec, C.representative, G))
    out = []
    tries = 0
    while len(out) < samples and pool and tries < 100 * max(samples, 1):
        tries += 1
        (s1, e1, G1), (s2, e2, G2) = rng.choice(pool), rng.choice(pool)
        Q1 = ConjugationQuandle(G1, G1.conjugacy_class(e1).members)
        Q2 = ConjugationQuandle(G2, G2.conjugacy_class(e2).members)
        if len(Q1) * len(Q2) > max_size or not (Q1.has_hayashi_property() and Q2.has_hayashi_property()):
            continue
        Qp = product_quandle(Q1, Q2)
        out.append({
            "left": f"{s1} {G1.fmt(e1)}", "right": f"{s2} {G2.fmt(e2)}",
            "sizes": [len(Q1), len(Q2)],
            "product_hayashi": Qp.has_hayashi_property(),
            "lcm_cycle_lengths": product_cycle_lengths_ok(Q1, Q2, Qp),
        })
    return out


def run_survey(config: SurveyConfig) -> dict:
    specs = expand_sources(config.sources, config.max_order)
    args = [(s, config.enumeration_bound, config.audit_mode) for s in specs]
    if config.parallelism > 1 and len(args) > 1:
        with ProcessPoolExecutor(max_workers=config.parallelism) as pool:
            groups = list(pool.map(_survey_group_args, args, chunksize=4))
    else:
        groups = [survey_group(*a) for a in args]
    kept = [g for g in groups if g["error"] is not None or g["order"] <= config.max_order]
    products = []
    if config.product_samples:
        products = product_preservation_samples(specs, config.product_samples, config.seed,
                                                config.enumeration_bound)
    return {"groups": kept, "product_samples": products, "summary": summarize(kept, products)}


def summarize(groups: list[dict], products: list[dict] = ()) -> dict:
    classes = [c for g in groups for c in g["classes"]]
    methods: dict[str, int] = {}
    for c in classes:
        m = c["goodness"]["method"]
        methods[m] = methods.get(m, 0) + 1
    audit_failures = sum(1 for c in classes if c["audit"] and c["audit"]["issues"])
    return {
        "groups": len(groups),
        "groups_failed": sum(1 for g in groups if g["error"] is not None),
        "bound_exceeded": sum(1 for g in groups if g["error"] and g["error"]["kind"] == "bound_exceeded"),
        "classes": len(classes),
        "good": sum(1 for c in classes if c["goodness"]["verdict"] == GOOD),
        "not_good": sum(1 for c in classes if c["goodness"]["verdict"] == "not_good"),
        "undecided": sum(1 for c in classes if c["goodness"]["verdict"] == "undecided"),
        "hayashi": sum(1 for c in classes if c["hayashi"]),
        "connected": sum(1 for c in classes if c["connected_direct"]),
        "methods": dict(sorted(methods.items())),
        "audit_failures": audit_failures,
        "product_samples": len(products),
        "product_failures": sum(1 for p in products if not (p["product_hayashi"] and p["lcm_cycle_lengths"])),
    }
